//! Gate-level hazard analysis of combinational netlists.
//!
//! Wires carry transients; each gate output is the transient extension
//! of the gate function applied to its input transients. Propagating
//! gate by gate is a worst-case analysis: function composition does not
//! preserve extensions, so a composed circuit may report longer
//! transients than the extension of its composed function.

use std::collections::HashMap;
use std::fmt;

use crate::boolfn::{g_decompose, primitives, TruthTable};
use crate::digraph::{extension_dp, extension_formula, EvalBudget};
use crate::error::{Error, Result};
use crate::transient::{Transient, TransientVector};

#[derive(Clone, Debug)]
pub enum GateFunc {
    Not,
    And,
    Or,
    Xor,
    Nand,
    Nor,
    Xnor,
    Table(TruthTable),
}

impl GateFunc {
    fn table(&self, arity: usize) -> Result<TruthTable> {
        match self {
            GateFunc::Not => {
                if arity != 1 {
                    return Err(Error::ArityMismatch {
                        expected: 1,
                        found: arity,
                    });
                }
                Ok(primitives::not())
            }
            GateFunc::And => primitives::and(arity),
            GateFunc::Or => primitives::or(arity),
            GateFunc::Xor => primitives::xor(arity),
            GateFunc::Nand => primitives::nand(arity),
            GateFunc::Nor => primitives::nor(arity),
            GateFunc::Xnor => primitives::xnor(arity),
            GateFunc::Table(t) => {
                if t.arity() != arity {
                    return Err(Error::ArityMismatch {
                        expected: t.arity(),
                        found: arity,
                    });
                }
                Ok(*t)
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct Gate {
    pub output: String,
    pub func: GateFunc,
    pub inputs: Vec<String>,
}

/// A combinational netlist: primary inputs, gates in definition order
/// (every gate input must already be defined), designated outputs.
#[derive(Clone, Debug)]
pub struct Netlist {
    pub inputs: Vec<String>,
    pub gates: Vec<Gate>,
    pub outputs: Vec<String>,
}

impl Netlist {
    /// Line-oriented grammar: `input <name>;`, `output <name>;`, and
    /// `<wire> = <GATE>(<args>);` where GATE is a named primitive or a
    /// `tt:<hex>/<arity>` literal. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Netlist> {
        let mut netlist = Netlist {
            inputs: Vec::new(),
            gates: Vec::new(),
            outputs: Vec::new(),
        };
        let mut defined: HashMap<String, usize> = HashMap::new();

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let stmt = raw.split('#').next().unwrap().trim();
            if stmt.is_empty() {
                continue;
            }
            let stmt = stmt.strip_suffix(';').ok_or_else(|| Error::NetlistSyntax {
                line,
                reason: "missing trailing semicolon".into(),
            })?;
            let stmt = stmt.trim();

            if let Some(name) = stmt.strip_prefix("input ") {
                let name = valid_name(name.trim(), line)?;
                if defined.insert(name.clone(), line).is_some() {
                    return Err(Error::NetlistSyntax {
                        line,
                        reason: format!("wire {name:?} defined twice"),
                    });
                }
                netlist.inputs.push(name);
                continue;
            }
            if let Some(name) = stmt.strip_prefix("output ") {
                let name = valid_name(name.trim(), line)?;
                if !defined.contains_key(&name) {
                    return Err(Error::NetlistUndefinedWire { line, wire: name });
                }
                netlist.outputs.push(name);
                continue;
            }

            let (lhs, rhs) = stmt.split_once('=').ok_or_else(|| Error::NetlistSyntax {
                line,
                reason: "expected `wire = GATE(args)`".into(),
            })?;
            let output = valid_name(lhs.trim(), line)?;
            let rhs = rhs.trim();
            let open = rhs.find('(').ok_or_else(|| Error::NetlistSyntax {
                line,
                reason: "expected `GATE(args)`".into(),
            })?;
            let close = rhs.rfind(')').ok_or_else(|| Error::NetlistSyntax {
                line,
                reason: "missing closing parenthesis".into(),
            })?;
            let gate_name = rhs[..open].trim();
            let args: Vec<String> = rhs[open + 1..close]
                .split(',')
                .map(|a| a.trim().to_string())
                .filter(|a| !a.is_empty())
                .collect();
            if args.is_empty() {
                return Err(Error::NetlistSyntax {
                    line,
                    reason: "a gate needs at least one input".into(),
                });
            }

            let func = parse_gate(gate_name, line)?;
            if matches!(func, GateFunc::Not) && args.len() != 1 {
                return Err(Error::NetlistArity {
                    line,
                    gate: "NOT".into(),
                    expected: 1,
                    found: args.len(),
                });
            }
            if let GateFunc::Table(t) = &func {
                if t.arity() != args.len() {
                    return Err(Error::NetlistArity {
                        line,
                        gate: gate_name.to_string(),
                        expected: t.arity(),
                        found: args.len(),
                    });
                }
            }

            for arg in &args {
                if arg == &output {
                    return Err(Error::NetlistCycle {
                        line,
                        wire: output.clone(),
                    });
                }
                if !defined.contains_key(arg) {
                    return Err(Error::NetlistUndefinedWire {
                        line,
                        wire: arg.clone(),
                    });
                }
            }
            if defined.insert(output.clone(), line).is_some() {
                return Err(Error::NetlistSyntax {
                    line,
                    reason: format!("wire {output:?} defined twice"),
                });
            }
            netlist.gates.push(Gate {
                output,
                func,
                inputs: args,
            });
        }
        Ok(netlist)
    }
}

fn valid_name(name: &str, line: usize) -> Result<String> {
    let ok = !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !name.starts_with(|c: char| c.is_ascii_digit());
    if ok {
        Ok(name.to_string())
    } else {
        Err(Error::NetlistSyntax {
            line,
            reason: format!("invalid wire name {name:?}"),
        })
    }
}

fn parse_gate(name: &str, line: usize) -> Result<GateFunc> {
    if name.starts_with("tt:") {
        return Ok(GateFunc::Table(TruthTable::parse_literal(name).map_err(
            |e| Error::NetlistSyntax {
                line,
                reason: e.to_string(),
            },
        )?));
    }
    match name.to_ascii_uppercase().as_str() {
        "NOT" => Ok(GateFunc::Not),
        "AND" => Ok(GateFunc::And),
        "OR" => Ok(GateFunc::Or),
        "XOR" => Ok(GateFunc::Xor),
        "NAND" => Ok(GateFunc::Nand),
        "NOR" => Ok(GateFunc::Nor),
        "XNOR" => Ok(GateFunc::Xnor),
        other => Err(Error::NetlistUnknownGate {
            line,
            name: other.to_string(),
        }),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HazardClass {
    Clean,
    Static,
    Dynamic,
}

impl fmt::Display for HazardClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HazardClass::Clean => "clean",
            HazardClass::Static => "static",
            HazardClass::Dynamic => "dynamic",
        })
    }
}

/// A wire with at most one change is clean; an unwanted pulse on a wire
/// with equal endpoints is a static hazard; three or more changes on a
/// wire that should change once is a dynamic hazard.
pub fn classify(t: &Transient) -> HazardClass {
    if t.delta() <= 1 {
        HazardClass::Clean
    } else if t.alpha() == t.omega() {
        HazardClass::Static
    } else {
        HazardClass::Dynamic
    }
}

#[derive(Clone, Debug)]
pub struct WireReport {
    pub name: String,
    pub transient: Transient,
    pub class: HazardClass,
}

#[derive(Clone, Debug)]
pub struct HazardReport {
    pub wires: Vec<WireReport>,
}

impl HazardReport {
    pub fn wire(&self, name: &str) -> Option<&WireReport> {
        self.wires.iter().find(|w| w.name == name)
    }
}

/// Evaluates every wire in definition order. Named primitives go through
/// the closed-form formulas; table gates use the formulas when the table
/// decomposes over OR/XOR and fall back to the DP otherwise.
pub fn propagate(
    netlist: &Netlist,
    assignment: &HashMap<String, Transient>,
    budget: &EvalBudget,
) -> Result<HazardReport> {
    let mut values: HashMap<String, Transient> = HashMap::new();
    let mut wires = Vec::new();

    for input in &netlist.inputs {
        let t = assignment
            .get(input)
            .copied()
            .ok_or_else(|| Error::MissingAssignment {
                input: input.clone(),
            })?;
        values.insert(input.clone(), t);
        wires.push(WireReport {
            name: input.clone(),
            transient: t,
            class: classify(&t),
        });
    }

    for gate in &netlist.gates {
        let inputs: Vec<Transient> = gate
            .inputs
            .iter()
            .map(|w| values[w])
            .collect();
        let x = TransientVector::new(inputs)?;
        let table = gate.func.table(x.arity())?;
        let out = match g_decompose(&table) {
            Some(d) => extension_formula(&d, &x)?,
            None => extension_dp(&table, &x, budget)?.extension,
        };
        values.insert(gate.output.clone(), out);
        wires.push(WireReport {
            name: gate.output.clone(),
            transient: out,
            class: classify(&out),
        });
    }

    Ok(HazardReport { wires })
}

/// Parses an assignment file: one `input = transient` per line.
pub fn parse_assignment(text: &str) -> Result<HashMap<String, Transient>> {
    let mut map = HashMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let stmt = raw.split('#').next().unwrap().trim();
        if stmt.is_empty() {
            continue;
        }
        let (name, value) = stmt.split_once('=').ok_or_else(|| Error::NetlistSyntax {
            line,
            reason: "expected `input = transient`".into(),
        })?;
        map.insert(name.trim().to_string(), value.trim().parse::<Transient>()?);
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    const HAZARD_DEMO: &str = "\
input x;
inv = NOT(x);
a = AND(x, inv);
out = OR(a, x);
output out;
";

    fn t(s: &str) -> Transient {
        s.parse().unwrap()
    }

    fn assign(pairs: &[(&str, &str)]) -> HashMap<String, Transient> {
        pairs.iter().map(|(k, v)| (k.to_string(), t(v))).collect()
    }

    #[test]
    fn parse_hazard_demo() {
        let n = Netlist::parse(HAZARD_DEMO).unwrap();
        assert_eq!(n.inputs, vec!["x"]);
        assert_eq!(n.gates.len(), 3);
        assert_eq!(n.outputs, vec!["out"]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Netlist::parse("input a;\nb = AND(b, a);"),
            Err(Error::NetlistCycle { line: 2, .. })
        ));
        assert!(matches!(
            Netlist::parse("input a;\nb = FROB(a, a);"),
            Err(Error::NetlistUnknownGate { line: 2, .. })
        ));
        assert!(matches!(
            Netlist::parse("input a;\nb = NOT(a, a);"),
            Err(Error::NetlistArity { line: 2, .. })
        ));
        assert!(matches!(
            Netlist::parse("input a;\nb = AND(a, c);"),
            Err(Error::NetlistUndefinedWire { line: 2, .. })
        ));
        assert!(matches!(
            Netlist::parse("input a"),
            Err(Error::NetlistSyntax { line: 1, .. })
        ));
        // passthrough netlist: inputs only
        let n = Netlist::parse("input a;\noutput a;").unwrap();
        assert!(n.gates.is_empty());
    }

    #[test]
    fn hazard_demo_propagation() {
        let n = Netlist::parse(HAZARD_DEMO).unwrap();
        let report = propagate(&n, &assign(&[("x", "01")]), &EvalBudget::default()).unwrap();
        let inv = report.wire("inv").unwrap();
        assert_eq!(inv.transient, t("10"));
        assert_eq!(inv.class, HazardClass::Clean);
        let a = report.wire("a").unwrap();
        assert_eq!(a.transient, t("010"));
        assert_eq!(a.class, HazardClass::Static);
        let out = report.wire("out").unwrap();
        assert_eq!(out.transient, t("0101"));
        assert_eq!(out.class, HazardClass::Dynamic);
    }

    #[test]
    fn constant_inputs_stay_clean() {
        let n = Netlist::parse(HAZARD_DEMO).unwrap();
        let report = propagate(&n, &assign(&[("x", "0")]), &EvalBudget::default()).unwrap();
        for wire in &report.wires {
            assert_eq!(wire.transient.delta(), 0);
            assert_eq!(wire.class, HazardClass::Clean);
        }
    }

    #[test]
    fn missing_assignment_is_rejected() {
        let n = Netlist::parse(HAZARD_DEMO).unwrap();
        assert!(matches!(
            propagate(&n, &HashMap::new(), &EvalBudget::default()),
            Err(Error::MissingAssignment { .. })
        ));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&t("010")), HazardClass::Static);
        assert_eq!(classify(&t("0101")), HazardClass::Dynamic);
        assert_eq!(classify(&t("01")), HazardClass::Clean);
        assert_eq!(classify(&t("1")), HazardClass::Clean);
    }

    #[test]
    fn table_gates_match_primitives() {
        let as_table = format!(
            "input a;\ninput b;\nc = {}(a, b);\noutput c;",
            primitives::and(2).unwrap().to_literal()
        );
        let as_prim = "input a;\ninput b;\nc = AND(a, b);\noutput c;";
        let budget = EvalBudget::default();
        let assign = assign(&[("a", "01"), ("b", "10")]);
        let r1 = propagate(&Netlist::parse(&as_table).unwrap(), &assign, &budget).unwrap();
        let r2 = propagate(&Netlist::parse(as_prim).unwrap(), &assign, &budget).unwrap();
        assert_eq!(r1.wire("c").unwrap().transient, r2.wire("c").unwrap().transient);
    }

    #[test]
    fn prefix_inputs_never_lengthen_wires() {
        let n = Netlist::parse(HAZARD_DEMO).unwrap();
        let budget = EvalBudget::default();
        let full = propagate(&n, &assign(&[("x", "0101")]), &budget).unwrap();
        for prefix in ["0", "01", "010"] {
            let shorter = propagate(&n, &assign(&[("x", prefix)]), &budget).unwrap();
            for (w_full, w_short) in full.wires.iter().zip(&shorter.wires) {
                assert!(w_short.transient.delta() <= w_full.transient.delta());
            }
        }
    }

    #[test]
    fn declaration_order_does_not_change_results() {
        let a = "input x;\ninput y;\np = NOT(x);\nq = NOT(y);\nr = AND(p, q);\noutput r;";
        let b = "input x;\ninput y;\nq = NOT(y);\np = NOT(x);\nr = AND(p, q);\noutput r;";
        let budget = EvalBudget::default();
        let assign = assign(&[("x", "010"), ("y", "10")]);
        let ra = propagate(&Netlist::parse(a).unwrap(), &assign, &budget).unwrap();
        let rb = propagate(&Netlist::parse(b).unwrap(), &assign, &budget).unwrap();
        assert_eq!(
            ra.wire("r").unwrap().transient,
            rb.wire("r").unwrap().transient
        );
    }
}
