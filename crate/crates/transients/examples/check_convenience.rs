//! Semi-decide convenience: whether the cost of a vector depends only
//! on its characteristic vector. XOR3 certifies via complete optimal
//! walks; the 5-variable `s23and5` function is refuted by a concrete
//! witness found within the prolongation budget.
//!
//! Run with: cargo run --example check_convenience

use transients::convenience::{minimal_vectors, s23_plus_and5};
use transients::{decide_convenience, parse_function, ConvenienceVerdict, EvalBudget};

fn main() -> transients::Result<()> {
    let budget = EvalBudget::default();

    let xor3 = parse_function("XOR3", None)?;
    println!(
        "XOR3 has {} minimal vectors to certify",
        minimal_vectors(3).len()
    );
    let report = decide_convenience(&xor3, 2, &budget)?;
    println!("XOR3: {}", report.status_name());
    if let ConvenienceVerdict::ConvenientCertified { certificates } = &report.verdict {
        let (x, cost, walk) = &certificates[0];
        println!("  e.g. x={x} cost={cost} complete optimal walk {walk}");
    }

    let f = s23_plus_and5();
    let report = decide_convenience(&f, 2, &budget)?;
    println!("s23and5 ({}): {}", f.to_literal(), report.status_name());
    if let ConvenienceVerdict::InconvenientWitnessed(w) = &report.verdict {
        println!(
            "  minimal {} has cost {}, but its prolongation {} has cost {}",
            w.minimal, w.minimal_cost, w.prolongation, w.prolonged_cost
        );
    }
    Ok(())
}
