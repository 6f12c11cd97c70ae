//! Evaluate the transient extension of a Boolean function three ways:
//! brute-force path enumeration, shortest-path dynamic programming, and
//! the closed formula available when the function decomposes over
//! OR/XOR with complemented inputs.
//!
//! Run with: cargo run --example evaluate_extension

use transients::boolfn::g_decompose;
use transients::digraph::{extension_bruteforce, extension_dp, extension_formula, path_count};
use transients::{parse_function, EvalBudget, TransientVector};

fn main() -> transients::Result<()> {
    let f = parse_function("x1+x2'", None)?;
    let x: TransientVector = "010,1010".parse()?;
    let budget = EvalBudget::default();

    println!("f = x1+x2', x = {x}");
    println!("paths in the prefix digraph: {}", path_count(&x).unwrap());

    let brute = extension_bruteforce(&f, &x, &budget)?;
    println!("brute force: {} cost={}", brute.extension, brute.cost);

    let dp = extension_dp(&f, &x, &budget)?;
    println!("dynamic prog: {} cost={}", dp.extension, dp.cost);

    // x1+x2' is OR with the second input complemented, so the linear-time
    // formula applies as well.
    let d = g_decompose(&f).expect("x1+x2' decomposes over OR");
    let ext = extension_formula(&d, &x)?;
    println!("closed form: {ext} (base {})", d.base);

    // A function outside that class falls back to the dynamic program.
    let g = parse_function("x1(x2^x3)", None)?;
    let y: TransientVector = "010,01,01".parse()?;
    let r = extension_dp(&g, &y, &budget)?;
    println!("f = x1(x2^x3), x = {y}: {} cost={}", r.extension, r.cost);
    Ok(())
}
