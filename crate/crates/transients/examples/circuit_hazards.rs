//! Gate-level hazard analysis: propagate transients through a netlist
//! and classify every wire as clean, static, or dynamic. The circuit
//! here produces both hazard kinds from a single 0→1 input change.
//!
//! Run with: cargo run --example circuit_hazards

use std::collections::HashMap;

use transients::circuit::propagate;
use transients::{EvalBudget, Netlist, Transient};

const NETLIST: &str = "\
input x;
inv = NOT(x);
a = AND(x, inv);
out = OR(a, x);
output out;
";

fn main() -> transients::Result<()> {
    let netlist = Netlist::parse(NETLIST)?;
    let mut assignment = HashMap::new();
    assignment.insert("x".to_string(), "01".parse::<Transient>()?);

    let report = propagate(&netlist, &assignment, &EvalBudget::default())?;
    for wire in &report.wires {
        println!("{:4} {:4} {}", wire.name, wire.transient.to_string(), wire.class);
    }
    println!();
    println!("`a` pulses although both endpoints are 0 (static hazard);");
    println!("`out` changes three times instead of once (dynamic hazard).");
    Ok(())
}
