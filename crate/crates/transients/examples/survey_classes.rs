//! Sweep every NPN class of 3-variable functions through the
//! convenience decision. All of them certify: cost depends only on the
//! characteristic vector for every function of at most 3 variables.
//!
//! Run with: cargo run --example survey_classes

use transients::boolfn::census;
use transients::{decide_convenience, EvalBudget};

fn main() -> transients::Result<()> {
    let budget = EvalBudget::default();
    let census = census(3)?;
    let mut functions = 0usize;
    for class in &census.classes {
        let report = decide_convenience(&class.canonical, 2, &budget)?;
        println!(
            "{} size={} {}",
            class.canonical.to_literal(),
            class.size,
            report.status_name()
        );
        functions += class.size;
    }
    println!("{} classes covering {} functions", census.class_count(), functions);
    Ok(())
}
