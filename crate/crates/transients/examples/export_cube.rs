//! Export the live/dead edge labelling of a function's Boolean cube
//! and list its foci (vertices whose incident edges are all live).
//!
//! Run with: cargo run --example export_cube

use std::io::stdout;

use transients::{parse_function, FunctionCube};

fn main() -> transients::Result<()> {
    for literal in ["x1+x2'", "XOR3", "x1x2+x2x3+x3x1"] {
        let f = parse_function(literal, None)?;
        let cube = FunctionCube::new(f);
        println!("# {literal}");
        cube.export_edge_list(stdout().lock())?;
        let foci: Vec<String> = cube.foci().iter().map(usize::to_string).collect();
        println!(
            "foci: {}",
            if foci.is_empty() {
                "none".to_string()
            } else {
                foci.join(" ")
            }
        );
        println!();
    }
    Ok(())
}
