//! Characteristic vectors and the convenience decision procedure.
//!
//! A function is convenient when the cost of every proper vector equals
//! the cost of its characteristic vector. The decision is semi-decided:
//! a complete optimal walk for every minimal vector certifies the
//! property; a bounded search over prolongations can falsify it; an
//! honest Unknown remains when neither side lands.

use rayon::prelude::*;

use crate::boolfn::TruthTable;
use crate::cube::{find_complete_optimal_walk, CompleteWalkSearch, Walk};
use crate::digraph::{extension_dp, EvalBudget};
use crate::error::{Error, Result};
use crate::transient::{Transient, TransientVector};

/// Enumerated optimal walks per minimal vector before giving up on the
/// certificate search.
pub const COMPLETE_WALK_CAP: usize = 10_000;
/// Largest arity accepted by the decision procedure.
pub const MAX_DECIDE_ARITY: usize = 5;

/// All minimal vectors of the given arity, in deterministic order:
/// starting vertex ascending, then change pattern in mixed radix {1,2}.
pub fn minimal_vectors(arity: usize) -> Vec<TransientVector> {
    let mut out = Vec::with_capacity(1 << (2 * arity));
    for alpha in 0..(1usize << arity) {
        for pattern in 0..(1usize << arity) {
            let deltas: Vec<u64> = (0..arity)
                .map(|i| if pattern >> (arity - 1 - i) & 1 == 1 { 2 } else { 1 })
                .collect();
            out.push(TransientVector::from_angle(alpha, &deltas).unwrap());
        }
    }
    out
}

/// All prolongations of a minimal vector obtained by appending up to
/// `extra_pairs_budget` change-pairs independently per component; yields
/// `(budget+1)^n` vectors, the original first.
pub fn prolongations(minimal: &TransientVector, extra_pairs_budget: u32) -> Vec<TransientVector> {
    let n = minimal.arity();
    let radix = extra_pairs_budget as u64 + 1;
    let total = radix.pow(n as u32);
    let mut out = Vec::with_capacity(total as usize);
    for combo in 0..total {
        let mut rem = combo;
        let mut components = Vec::with_capacity(n);
        for i in 0..n {
            let extra = rem % radix;
            rem /= radix;
            let c = minimal.component(i);
            components.push(Transient::new(c.alpha(), c.delta() + 2 * extra));
        }
        out.push(TransientVector::new(components).unwrap());
    }
    // mismatches, if any, tend to live at small depth
    out.sort_by_key(|x| x.delta());
    out
}

#[derive(Clone, Debug)]
pub struct Witness {
    pub minimal: TransientVector,
    pub prolongation: TransientVector,
    pub minimal_cost: u64,
    pub prolonged_cost: u64,
}

#[derive(Clone, Debug)]
pub enum ConvenienceVerdict {
    /// Every minimal vector has a complete optimal walk.
    ConvenientCertified {
        certificates: Vec<(TransientVector, u64, Walk)>,
    },
    /// Certification failed somewhere and bounded falsification found
    /// nothing; the failing minimal vectors are reported.
    Unknown {
        uncertified: Vec<TransientVector>,
        prolong_budget: u32,
    },
    /// A prolongation whose cost differs from its minimal vector's.
    InconvenientWitnessed(Witness),
}

#[derive(Clone, Debug)]
pub struct ConvenienceReport {
    /// Variables of the original function that the analysis ran on.
    pub support: Vec<usize>,
    /// The function actually analyzed (projection onto the support).
    pub analyzed: Option<TruthTable>,
    pub verdict: ConvenienceVerdict,
}

impl ConvenienceReport {
    pub fn status_name(&self) -> &'static str {
        match self.verdict {
            ConvenienceVerdict::ConvenientCertified { .. } => "ConvenientCertified",
            ConvenienceVerdict::Unknown { .. } => "Unknown",
            ConvenienceVerdict::InconvenientWitnessed(_) => "InconvenientWitnessed",
        }
    }
}

/// Decides convenience for `f`. Degenerate functions are first projected
/// onto their support and the verdict describes the projection; a
/// constant function has nothing to decide and certifies vacuously.
pub fn decide_convenience(
    f: &TruthTable,
    prolong_budget: u32,
    budget: &EvalBudget,
) -> Result<ConvenienceReport> {
    if f.arity() > MAX_DECIDE_ARITY {
        return Err(Error::ArityTooLarge {
            arity: f.arity(),
            max: MAX_DECIDE_ARITY,
        });
    }
    let support = f.support();
    if support.is_empty() {
        return Ok(ConvenienceReport {
            support,
            analyzed: None,
            verdict: ConvenienceVerdict::ConvenientCertified {
                certificates: Vec::new(),
            },
        });
    }
    let g = if support.len() == f.arity() {
        *f
    } else {
        f.project(&support)?
    };

    let minimals = minimal_vectors(g.arity());
    let searched: Vec<(TransientVector, u64, CompleteWalkSearch)> = minimals
        .into_par_iter()
        .map(|x| {
            let (cost, outcome) =
                find_complete_optimal_walk(&g, &x, budget, COMPLETE_WALK_CAP)?;
            Ok((x, cost, outcome))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut certificates = Vec::new();
    let mut uncertified = Vec::new();
    for (x, cost, outcome) in searched {
        match outcome {
            CompleteWalkSearch::Found(w) => certificates.push((x, cost, w)),
            CompleteWalkSearch::Absent | CompleteWalkSearch::Truncated => {
                uncertified.push((x, cost))
            }
        }
    }

    if uncertified.is_empty() {
        return Ok(ConvenienceReport {
            support,
            analyzed: Some(g),
            verdict: ConvenienceVerdict::ConvenientCertified { certificates },
        });
    }

    // falsification: compare the DP cost of each prolongation against
    // the minimal vector's cost, stopping at the first mismatch
    for (x, minimal_cost) in &uncertified {
        for p in prolongations(x, prolong_budget) {
            if p == *x {
                continue;
            }
            let report = extension_dp(&g, &p, budget)?;
            if report.cost != *minimal_cost {
                return Ok(ConvenienceReport {
                    support,
                    analyzed: Some(g),
                    verdict: ConvenienceVerdict::InconvenientWitnessed(Witness {
                        minimal: x.clone(),
                        prolongation: p,
                        minimal_cost: *minimal_cost,
                        prolonged_cost: report.cost,
                    }),
                });
            }
        }
    }

    Ok(ConvenienceReport {
        support,
        analyzed: Some(g),
        verdict: ConvenienceVerdict::Unknown {
            uncertified: uncertified.into_iter().map(|(x, _)| x).collect(),
            prolong_budget,
        },
    })
}

/// The five-variable function that is 1 exactly when two or three of the
/// last four inputs are 1, or when all five inputs are 1.
pub fn s23_plus_and5() -> TruthTable {
    TruthTable::from_fn(5, |v| {
        let ones_tail = (v & 0b1111).count_ones();
        ones_tail == 2 || ones_tail == 3 || v == 0b11111
    })
    .unwrap()
}

#[derive(Clone, Debug)]
pub struct ShortcutReport {
    /// Minimal vectors starting within cube-distance 1 of a focus, and
    /// how many of them have a complete optimal walk.
    pub near_focus_checked: usize,
    pub near_focus_certified: usize,
    /// Six-vertex alternating walks whose first four vertices cost 0 and
    /// whose total cost is at most 1, paired with whether their vector
    /// has a complete optimal walk.
    pub alternating_checked: usize,
    pub alternating_certified: usize,
}

impl ShortcutReport {
    pub fn all_certified(&self) -> bool {
        self.near_focus_checked == self.near_focus_certified
            && self.alternating_checked == self.alternating_certified
    }
}

/// True when the walk meets the alternating-walk shortcut hypotheses:
/// six vertices, alternating, first four vertices cost 0, total cost at
/// most 1, and the walk's vector is minimal.
pub fn alternating_shortcut_applies(f: &TruthTable, walk: &Walk) -> Result<bool> {
    if f.arity() != 3 {
        return Err(Error::ArityTooLarge {
            arity: f.arity(),
            max: 3,
        });
    }
    if walk.arity() != 3 || walk.len() != 6 {
        return Ok(false);
    }
    let head = Walk::new(3, walk.vertices()[..4].to_vec())?;
    Ok(walk.is_alternating()?
        && head.cost(f) == 0
        && walk.cost(f) <= 1
        && walk.vector().is_minimal())
}

/// Checks both walk-search shortcuts on a 3-variable function by direct
/// enumeration.
pub fn check_alternating_shortcuts(f: &TruthTable, budget: &EvalBudget) -> Result<ShortcutReport> {
    if f.arity() != 3 {
        return Err(Error::ArityTooLarge {
            arity: f.arity(),
            max: 3,
        });
    }
    let cube = crate::cube::FunctionCube::new(*f);
    let foci = cube.foci();
    let near_focus = |v: usize| {
        foci.iter()
            .any(|&u| u == v || (u ^ v).count_ones() == 1)
    };

    let mut report = ShortcutReport {
        near_focus_checked: 0,
        near_focus_certified: 0,
        alternating_checked: 0,
        alternating_certified: 0,
    };

    let has_complete = |x: &TransientVector| -> Result<bool> {
        let (_, outcome) = find_complete_optimal_walk(f, x, budget, COMPLETE_WALK_CAP)?;
        Ok(matches!(outcome, CompleteWalkSearch::Found(_)))
    };

    for x in minimal_vectors(3) {
        if near_focus(x.alpha_vertex()) {
            report.near_focus_checked += 1;
            if has_complete(&x)? {
                report.near_focus_certified += 1;
            }
        }
    }

    // every 6-vertex walk: 8 starts, 3 coordinate choices per step
    for start in 0..8usize {
        for moves in 0..(3usize.pow(5)) {
            let mut rem = moves;
            let mut vertices = vec![start];
            for _ in 0..5 {
                let coord = rem % 3;
                rem /= 3;
                let prev = *vertices.last().unwrap();
                vertices.push(prev ^ (1 << (2 - coord)));
            }
            let walk = Walk::new(3, vertices)?;
            if alternating_shortcut_applies(f, &walk)? {
                report.alternating_checked += 1;
                if has_complete(&walk.vector())? {
                    report.alternating_certified += 1;
                }
            }
        }
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::primitives;
    use crate::expr::parse_function;

    fn v(s: &str) -> TransientVector {
        s.parse().unwrap()
    }

    #[test]
    fn characteristic_vector_examples() {
        assert_eq!(
            v("0101,10101").characteristic_vector().unwrap(),
            v("01,101")
        );
        assert_eq!(v("010,1010").characteristic_vector().unwrap(), v("010,10"));
        let minimal = v("01,101");
        assert_eq!(minimal.characteristic_vector().unwrap(), minimal);
        assert!(v("0,01").characteristic_vector().is_err());
    }

    #[test]
    fn prolongation_counts() {
        let p = prolongations(&v("01"), 1);
        assert_eq!(p, vec![v("01"), v("0101")]);
        assert_eq!(prolongations(&v("01,10"), 0), vec![v("01,10")]);
        assert_eq!(prolongations(&v("01,10,01"), 2).len(), 27);
        for p in prolongations(&v("010,10"), 3) {
            assert_eq!(p.characteristic_vector().unwrap(), v("010,10"));
        }
    }

    #[test]
    fn minimal_vector_enumeration() {
        let all = minimal_vectors(2);
        assert_eq!(all.len(), 16);
        assert!(all.iter().all(|x| x.is_minimal()));
        assert_eq!(all[0], v("01,01"));
    }

    #[test]
    fn s23_values() {
        let f = s23_plus_and5();
        assert!(f.evaluate(&[false, true, true, false, false]).unwrap());
        assert!(f.evaluate(&[true, true, true, true, true]).unwrap());
        assert!(f.evaluate(&[true, true, true, true, false]).unwrap());
        assert!(!f.evaluate(&[true, false, false, false, true]).unwrap());
        assert!(!f.evaluate(&[false, true, true, true, true]).unwrap());
    }

    #[test]
    fn xor3_certifies() {
        let r =
            decide_convenience(&primitives::xor(3).unwrap(), 2, &EvalBudget::default()).unwrap();
        assert_eq!(r.status_name(), "ConvenientCertified");
    }

    #[test]
    fn constants_certify_vacuously() {
        let zero = TruthTable::constant(3, false).unwrap();
        let r = decide_convenience(&zero, 2, &EvalBudget::default()).unwrap();
        assert_eq!(r.status_name(), "ConvenientCertified");
        assert!(r.support.is_empty());
    }

    #[test]
    fn alternating_shortcut_fixture_walks() {
        let f4 = parse_function("x2x3+x1x2'x3'", None).unwrap();
        let w = Walk::new(3, vec![7, 5, 4, 0, 2, 3]).unwrap();
        assert!(alternating_shortcut_applies(&f4, &w).unwrap());

        let f6 = parse_function("x1x2+x2x3+x3x1", None).unwrap();
        let w = Walk::new(3, vec![1, 3, 2, 6, 4, 5]).unwrap();
        assert!(alternating_shortcut_applies(&f6, &w).unwrap());
    }

    #[test]
    fn alternating_shortcuts_hold_for_anchors() {
        let budget = EvalBudget::default();
        for expr in ["x1(x2^x3)", "x2x3+x1x2'x3'", "x1(x2+x3)", "x1x2+x2x3+x3x1"] {
            let f = parse_function(expr, None).unwrap();
            let report = check_alternating_shortcuts(&f, &budget).unwrap();
            assert!(report.all_certified(), "{expr}: {report:?}");
        }
        // XOR3: all vertices are foci, so every minimal vector is covered
        let report =
            check_alternating_shortcuts(&primitives::xor(3).unwrap(), &budget).unwrap();
        assert_eq!(report.near_focus_checked, 64);
        assert!(report.all_certified());
    }
}
