//! Command-line front end: every analysis as a scriptable subcommand
//! with stable text output (or one JSON object per line).

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::boolfn::{census, g_decompose, npn_canonical, TruthTable, MAX_NPN_ARITY};
use crate::circuit::{parse_assignment, propagate, Netlist};
use crate::convenience::{decide_convenience, ConvenienceVerdict};
use crate::cube::{optimal_walks, FunctionCube};
use crate::digraph::{
    cost_formula, extension_bruteforce, extension_dp, extension_formula, CostKind, EvalBudget,
};
use crate::error::{Error, Result};
use crate::expr::parse_function;
use crate::transient::TransientVector;

#[derive(Parser, Debug)]
#[command(
    name = "transients",
    about = "Transient algebra for hazard detection in gate circuits",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Refuse brute-force enumeration beyond this many paths.
    #[arg(long, global = true, default_value_t = EvalBudget::default().max_paths)]
    pub budget_paths: u64,

    /// Refuse dynamic programming beyond this many digraph states.
    #[arg(long, global = true, default_value_t = EvalBudget::default().max_states)]
    pub budget_states: u64,

    /// Seed for randomized sweeps (`survey --sample`).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    JsonLines,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum Method {
    /// Closed formula when the function decomposes over OR/XOR,
    /// dynamic programming otherwise.
    Auto,
    Brute,
    Dp,
    Formula,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum Operator {
    Xor,
    Or,
    And,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate the transient extension of a function on a vector.
    Eval {
        /// Function literal: formula (`x1+x2'`), primitive name (`XOR3`),
        /// or truth table (`tt:<hex>/<arity>`).
        function: String,
        /// Comma-separated transient vector, e.g. `010,1010`.
        vector: String,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Cost of a vector for a pure operator, by closed formula.
    Cost {
        #[arg(value_enum)]
        op: Operator,
        vector: String,
    },
    /// NPN classification of a function: canonical form, degeneracy,
    /// OR/XOR decomposition, class size.
    Classify { function: String },
    /// Semi-decide whether a function's cost depends only on the
    /// characteristic vector of the input.
    Convenience {
        function: String,
        /// Extra change-pairs allowed per component when searching for a
        /// cost mismatch.
        #[arg(long, default_value_t = 2)]
        prolong_budget: u32,
    },
    /// Convenience verdict for every NPN class of an arity (or a random
    /// sample of functions).
    Survey {
        arity: usize,
        /// Check this many random functions instead of every class.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 2)]
        prolong_budget: u32,
    },
    /// Propagate transients through a netlist and classify each wire.
    Circuit {
        /// Netlist file: `input x;`, `w = GATE(args);`, `output w;`.
        netlist: PathBuf,
        /// Assignment file: one `input = transient` per line.
        assign: PathBuf,
    },
    /// All minimum-cost walks realizing a vector, in integer-vertex
    /// notation.
    Walks {
        function: String,
        vector: String,
        /// Stop after this many walks.
        #[arg(long, default_value_t = 64)]
        cap: usize,
    },
    /// Edge list of the function's cube with live/dead labels.
    ExportCube { function: String },
}

impl Cli {
    fn budget(&self) -> EvalBudget {
        EvalBudget {
            max_paths: self.budget_paths,
            max_states: self.budget_states,
        }
    }
}

/// One output record: key/value fields plus the text rendering. Text
/// mode prints the line; JSON mode prints the fields as one object.
struct Emitter<'a, W: Write> {
    format: Format,
    out: &'a mut W,
}

impl<'a, W: Write> Emitter<'a, W> {
    fn emit(&mut self, line: &str, fields: &[(&str, serde_json::Value)]) -> Result<()> {
        match self.format {
            Format::Text => writeln!(self.out, "{line}")?,
            Format::JsonLines => {
                let map: BTreeMap<&str, &serde_json::Value> =
                    fields.iter().map(|(k, v)| (*k, v)).collect();
                writeln!(self.out, "{}", serde_json::to_string(&map)?)?;
            }
        }
        Ok(())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Internal {
            reason: format!("serialization failed: {e}"),
        }
    }
}

pub fn run<W: Write>(cli: &Cli, out: &mut W) -> Result<()> {
    let budget = cli.budget();
    let mut em = Emitter {
        format: cli.format,
        out,
    };
    match &cli.command {
        Command::Eval {
            function,
            vector,
            method,
        } => {
            let x: TransientVector = vector.parse()?;
            let f = parse_function(function, Some(x.arity()))?;
            let (ext, cost, used) = match method {
                Method::Brute => {
                    let r = extension_bruteforce(&f, &x, &budget)?;
                    (r.extension, r.cost, "brute")
                }
                Method::Dp => {
                    let r = extension_dp(&f, &x, &budget)?;
                    (r.extension, r.cost, "dp")
                }
                Method::Formula => {
                    let d = g_decompose(&f).ok_or_else(|| Error::InvalidFunction {
                        literal: function.clone(),
                        reason: "no closed formula: function does not decompose over OR/XOR"
                            .into(),
                    })?;
                    let ext = extension_formula(&d, &x)?;
                    (ext, x.delta() - ext.delta(), "formula")
                }
                Method::Auto => match g_decompose(&f) {
                    Some(d) => {
                        let ext = extension_formula(&d, &x)?;
                        (ext, x.delta() - ext.delta(), "formula")
                    }
                    None => {
                        let r = extension_dp(&f, &x, &budget)?;
                        (r.extension, r.cost, "dp")
                    }
                },
            };
            em.emit(
                &format!("{ext} cost={cost}"),
                &[
                    ("extension", json!(ext.to_string())),
                    ("cost", json!(cost)),
                    ("method", json!(used)),
                ],
            )?;
        }

        Command::Cost { op, vector } => {
            let x: TransientVector = vector.parse()?;
            let kind = match op {
                Operator::Xor => CostKind::Xor,
                Operator::Or => CostKind::Or,
                Operator::And => CostKind::And,
            };
            let cost = cost_formula(kind, &x)?;
            em.emit(&format!("cost={cost}"), &[("cost", json!(cost))])?;
        }

        Command::Classify { function } => {
            let f = parse_function(function, None)?;
            if f.arity() > MAX_NPN_ARITY {
                return Err(Error::ArityTooLarge {
                    arity: f.arity(),
                    max: MAX_NPN_ARITY,
                });
            }
            let (canonical, _) = npn_canonical(&f)?;
            let support: Vec<String> = f.support().iter().map(|i| (i + 1).to_string()).collect();
            let decomposition = g_decompose(&f);
            let class_size = if f.arity() <= 4 {
                census(f.arity())?
                    .classes
                    .iter()
                    .find(|c| c.canonical == canonical)
                    .map(|c| c.size)
            } else {
                None
            };
            let g_text = match &decomposition {
                Some(d) => format!(
                    "base={} input_complements={:0width$b} output_complemented={}",
                    d.base,
                    d.input_complement_mask,
                    d.output_complement,
                    width = d.arity
                ),
                None => "none".to_string(),
            };
            let mut line = format!(
                "function={function} arity={} support={} degenerate={} canonical={} g={}",
                f.arity(),
                if support.is_empty() {
                    "-".to_string()
                } else {
                    support.join(",")
                },
                f.is_degenerate(),
                canonical.to_literal(),
                g_text
            );
            if let Some(size) = class_size {
                line.push_str(&format!(" class_size={size}"));
            }
            em.emit(
                &line,
                &[
                    ("function", json!(function)),
                    ("arity", json!(f.arity())),
                    ("support", json!(support)),
                    ("degenerate", json!(f.is_degenerate())),
                    ("canonical", json!(canonical.to_literal())),
                    (
                        "g_base",
                        json!(decomposition.as_ref().map(|d| d.base.to_string())),
                    ),
                    (
                        "g_input_complements",
                        json!(decomposition.as_ref().map(|d| d.input_complement_mask)),
                    ),
                    (
                        "g_output_complemented",
                        json!(decomposition.as_ref().map(|d| d.output_complement)),
                    ),
                    ("class_size", json!(class_size)),
                ],
            )?;
        }

        Command::Convenience {
            function,
            prolong_budget,
        } => {
            let f = parse_function(function, None)?;
            let report = decide_convenience(&f, *prolong_budget, &budget)?;
            emit_convenience(&mut em, function, &report)?;
        }

        Command::Survey {
            arity,
            sample,
            prolong_budget,
        } => match sample {
            None => survey_classes(&mut em, *arity, *prolong_budget, &budget)?,
            Some(k) => survey_sample(&mut em, *arity, *k, *prolong_budget, cli.seed, &budget)?,
        },

        Command::Circuit { netlist, assign } => {
            let n = Netlist::parse(&std::fs::read_to_string(netlist)?)?;
            let a = parse_assignment(&std::fs::read_to_string(assign)?)?;
            let report = propagate(&n, &a, &budget)?;
            for wire in &report.wires {
                em.emit(
                    &format!("{} {} {}", wire.name, wire.transient, wire.class),
                    &[
                        ("wire", json!(wire.name)),
                        ("transient", json!(wire.transient.to_string())),
                        ("class", json!(wire.class.to_string())),
                    ],
                )?;
            }
        }

        Command::Walks {
            function,
            vector,
            cap,
        } => {
            let x: TransientVector = vector.parse()?;
            let f = parse_function(function, Some(x.arity()))?;
            let report = optimal_walks(&f, &x, &budget, *cap)?;
            em.emit(
                &format!(
                    "cost={} walks={}{}",
                    report.cost,
                    report.walks.len(),
                    if report.truncated { " truncated" } else { "" }
                ),
                &[
                    ("cost", json!(report.cost)),
                    ("walks", json!(report.walks.len())),
                    ("truncated", json!(report.truncated)),
                ],
            )?;
            for walk in &report.walks {
                em.emit(
                    &walk.to_string(),
                    &[("walk", json!(walk.to_string()))],
                )?;
            }
        }

        Command::ExportCube { function } => {
            let f = parse_function(function, None)?;
            match cli.format {
                Format::Text => FunctionCube::new(f).export_edge_list(&mut *em.out)?,
                Format::JsonLines => {
                    let cube = FunctionCube::new(f);
                    let n = cube.arity();
                    for u in 0..cube.vertex_count() {
                        for coord in 0..n {
                            let w = u ^ (1 << (n - 1 - coord));
                            if u < w {
                                em.emit(
                                    "",
                                    &[
                                        ("from", json!(u)),
                                        ("to", json!(w)),
                                        ("live", json!(cube.is_live(u, coord))),
                                    ],
                                )?;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn emit_convenience<W: Write>(
    em: &mut Emitter<'_, W>,
    label: &str,
    report: &crate::convenience::ConvenienceReport,
) -> Result<()> {
    let support: Vec<usize> = report.support.iter().map(|i| i + 1).collect();
    em.emit(
        &format!(
            "function={label} support={} status={}",
            if support.is_empty() {
                "-".to_string()
            } else {
                support
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            },
            report.status_name()
        ),
        &[
            ("function", json!(label)),
            ("support", json!(support)),
            ("status", json!(report.status_name())),
        ],
    )?;
    match &report.verdict {
        ConvenienceVerdict::ConvenientCertified { certificates } => {
            for (x, cost, walk) in certificates {
                em.emit(
                    &format!("certificate x={x} cost={cost} walk={walk}"),
                    &[
                        ("x", json!(x.to_string())),
                        ("cost", json!(cost)),
                        ("walk", json!(walk.to_string())),
                    ],
                )?;
            }
        }
        ConvenienceVerdict::Unknown {
            uncertified,
            prolong_budget,
        } => {
            for x in uncertified {
                em.emit(
                    &format!("uncertified x={x} prolong_budget={prolong_budget}"),
                    &[
                        ("uncertified", json!(x.to_string())),
                        ("prolong_budget", json!(prolong_budget)),
                    ],
                )?;
            }
        }
        ConvenienceVerdict::InconvenientWitnessed(w) => {
            em.emit(
                &format!(
                    "witness minimal={} cost={} prolongation={} cost={}",
                    w.minimal, w.minimal_cost, w.prolongation, w.prolonged_cost
                ),
                &[
                    ("minimal", json!(w.minimal.to_string())),
                    ("minimal_cost", json!(w.minimal_cost)),
                    ("prolongation", json!(w.prolongation.to_string())),
                    ("prolonged_cost", json!(w.prolonged_cost)),
                ],
            )?;
        }
    }
    Ok(())
}

/// Exhaustive survey: one verdict per NPN class. Convenience is a class
/// invariant — permuting or complementing inputs relabels cube vertices
/// and complementing the output preserves every walk cost — so deciding
/// the canonical representative covers the class.
fn survey_classes<W: Write>(
    em: &mut Emitter<'_, W>,
    arity: usize,
    prolong_budget: u32,
    budget: &EvalBudget,
) -> Result<()> {
    if arity > 4 {
        return Err(Error::InvalidFunction {
            literal: format!("survey {arity}"),
            reason: "exhaustive survey supports arity <= 4; use --sample for arity 5".into(),
        });
    }
    let census = census(arity)?;
    let mut convenient = 0usize;
    let mut unknown = 0usize;
    let mut inconvenient = 0usize;
    for class in &census.classes {
        let report = decide_convenience(&class.canonical, prolong_budget, budget)?;
        match report.verdict {
            ConvenienceVerdict::ConvenientCertified { .. } => convenient += class.size,
            ConvenienceVerdict::Unknown { .. } => unknown += class.size,
            ConvenienceVerdict::InconvenientWitnessed(_) => inconvenient += class.size,
        }
        em.emit(
            &format!(
                "class canonical={} size={} status={}",
                class.canonical.to_literal(),
                class.size,
                report.status_name()
            ),
            &[
                ("canonical", json!(class.canonical.to_literal())),
                ("size", json!(class.size)),
                ("status", json!(report.status_name())),
            ],
        )?;
    }
    em.emit(
        &format!(
            "summary classes={} functions={} convenient={convenient} unknown={unknown} inconvenient={inconvenient}",
            census.class_count(),
            convenient + unknown + inconvenient,
        ),
        &[
            ("classes", json!(census.class_count())),
            ("functions", json!(convenient + unknown + inconvenient)),
            ("convenient", json!(convenient)),
            ("unknown", json!(unknown)),
            ("inconvenient", json!(inconvenient)),
        ],
    )?;
    Ok(())
}

/// Randomized survey: verdicts for `k` functions drawn uniformly with a
/// seeded generator, so runs are reproducible.
fn survey_sample<W: Write>(
    em: &mut Emitter<'_, W>,
    arity: usize,
    k: usize,
    prolong_budget: u32,
    seed: u64,
    budget: &EvalBudget,
) -> Result<()> {
    if arity > MAX_NPN_ARITY {
        return Err(Error::ArityTooLarge {
            arity,
            max: MAX_NPN_ARITY,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut convenient = 0usize;
    let mut unknown = 0usize;
    let mut inconvenient = 0usize;
    for _ in 0..k {
        let values: Vec<bool> = (0..1usize << arity).map(|_| rng.gen()).collect();
        let f = TruthTable::from_values(arity, &values)?;
        let report = decide_convenience(&f, prolong_budget, budget)?;
        match report.verdict {
            ConvenienceVerdict::ConvenientCertified { .. } => convenient += 1,
            ConvenienceVerdict::Unknown { .. } => unknown += 1,
            ConvenienceVerdict::InconvenientWitnessed(_) => inconvenient += 1,
        }
        em.emit(
            &format!("function={} status={}", f.to_literal(), report.status_name()),
            &[
                ("function", json!(f.to_literal())),
                ("status", json!(report.status_name())),
            ],
        )?;
    }
    em.emit(
        &format!(
            "summary sampled={k} convenient={convenient} unknown={unknown} inconvenient={inconvenient}"
        ),
        &[
            ("sampled", json!(k)),
            ("convenient", json!(convenient)),
            ("unknown", json!(unknown)),
            ("inconvenient", json!(inconvenient)),
        ],
    )?;
    Ok(())
}
