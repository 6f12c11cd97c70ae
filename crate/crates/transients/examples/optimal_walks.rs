//! Walks on the Boolean cube and their correspondence with paths of
//! the prefix digraph: every optimal path yields a minimum-cost walk
//! and vice versa.
//!
//! Run with: cargo run --example optimal_walks

use transients::cube::{optimal_walks, path_of_walk, walk_of_path};
use transients::digraph::extension_dp;
use transients::{parse_function, EvalBudget, TransientVector};

fn main() -> transients::Result<()> {
    let f = parse_function("x1+x2'", None)?;
    let x: TransientVector = "010,1010".parse()?;
    let budget = EvalBudget::default();

    let report = optimal_walks(&f, &x, &budget, 64)?;
    println!("f = x1+x2', x = {x}: cost {}", report.cost);
    for walk in &report.walks {
        println!("  optimal walk {walk} (vector {})", walk.vector());
    }

    // Round trip: the walk of an optimal path is a walk whose path is
    // the path we started from.
    let dp = extension_dp(&f, &x, &budget)?;
    let path = dp.optimal_path.expect("dp always returns a path");
    let walk = walk_of_path(&x, &path)?;
    println!("walk of the dp path: {walk} cost {}", walk.cost(&f));
    let back = path_of_walk(&f, &walk)?;
    assert_eq!(back, path);
    println!("path(walk(P)) == P: round trip holds");
    Ok(())
}
