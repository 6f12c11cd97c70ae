//! NPN classification: canonical representatives under input
//! permutation/complement and output complement, recognition of the
//! OR/XOR-decomposable class, and the full 3-variable census.
//!
//! Run with: cargo run --example classify_function

use transients::boolfn::{census, g_decompose, npn_canonical, npn_equivalent};
use transients::parse_function;

fn main() -> transients::Result<()> {
    // x'z and x+y are the same function up to renaming and complement.
    let f = parse_function("x'z", None)?;
    let g = parse_function("x+y", None)?;
    println!("x'z  canonical: {}", npn_canonical(&f)?.0.to_literal());
    println!("x+y  canonical: {}", npn_canonical(&g)?.0.to_literal());
    println!("equivalent: {}", npn_equivalent(&f, &g)?);

    let xor3 = parse_function("XOR3", None)?;
    let d = g_decompose(&xor3).expect("XOR3 decomposes trivially");
    println!(
        "XOR3 decomposition: base {} complements {:03b} output {}",
        d.base, d.input_complement_mask, d.output_complement
    );

    let c = census(3)?;
    println!(
        "3-variable census: {} classes, {} degenerate functions, {} functions in {} OR/XOR classes, {} in the remaining {}",
        c.class_count(),
        c.degenerate_functions(),
        c.g_functions(),
        c.g_classes(),
        c.remaining_functions(),
        c.remaining_classes()
    );
    for class in &c.classes {
        println!(
            "  {} size={} degenerate={} or_xor={}",
            class.canonical.to_literal(),
            class.size,
            class.degenerate,
            class.in_g
        );
    }
    Ok(())
}
