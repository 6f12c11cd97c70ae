//! Evaluation of transient extensions.
//!
//! Three routes are provided. `extension_bruteforce` enumerates every
//! path of the transient digraph and keeps the longest contracted output
//! word; it is the oracle. `extension_dp` finds the minimum number of
//! output-preserving arcs by dynamic programming over the prefix DAG,
//! which is polynomial for fixed arity. `extension_formula` applies the
//! closed forms available for functions built from OR/XOR by
//! complementing inputs and/or the output.

use crate::boolfn::{GBase, GDecomposition, TruthTable};
use crate::error::{Error, Result};
use crate::transient::{Transient, TransientVector};

/// Enumeration limits. Path counts grow as a multinomial coefficient, so
/// both evaluators refuse inputs beyond their budget instead of running
/// away.
#[derive(Clone, Copy, Debug)]
pub struct EvalBudget {
    pub max_paths: u64,
    pub max_states: u64,
}

impl Default for EvalBudget {
    fn default() -> Self {
        EvalBudget {
            max_paths: 1_000_000,
            max_states: 100_000_000,
        }
    }
}

/// One vertex of the transient digraph: the prefix of the input vector
/// identified by per-component change counters, plus the function value
/// at the prefix endpoint.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PathState {
    pub consumed: Vec<u64>,
    pub lambda: bool,
}

#[derive(Clone, Debug)]
pub struct CostReport {
    pub extension: Transient,
    pub cost: u64,
    pub optimal_path: Option<Vec<PathState>>,
}

/// Number of paths in the transient digraph: the multinomial coefficient
/// of the component change counts. `None` on overflow.
pub fn path_count(x: &TransientVector) -> Option<u128> {
    let mut total: u128 = 1;
    let mut seen: u128 = 0;
    for d in x.deltas() {
        for j in 1..=d as u128 {
            seen += 1;
            total = total.checked_mul(seen)?;
            total /= j; // binomial(seen, j) accumulates exactly
        }
    }
    Some(total)
}

fn check_arity(f: &TruthTable, x: &TransientVector) -> Result<()> {
    if f.arity() != x.arity() {
        return Err(Error::ArityMismatch {
            expected: f.arity(),
            found: x.arity(),
        });
    }
    Ok(())
}

/// Function value at the prefix endpoint identified by `consumed`.
fn lambda_at(f: &TruthTable, x: &TransientVector, consumed: &[u64]) -> bool {
    let mut vertex = 0usize;
    for (i, &k) in consumed.iter().enumerate() {
        let bit = x.component(i).letter(k);
        vertex = (vertex << 1) | usize::from(bit);
    }
    f.value(vertex)
}

/// Exhaustive path enumeration. Returns the longest contracted output
/// over all orders of input changes, together with one path realizing
/// it. Also cross-checks the enumerated path total against the
/// multinomial count and fails loudly on a mismatch.
pub fn extension_bruteforce(
    f: &TruthTable,
    x: &TransientVector,
    budget: &EvalBudget,
) -> Result<CostReport> {
    check_arity(f, x)?;
    let expected = path_count(x).ok_or(Error::PathBudgetExceeded {
        paths: u128::MAX,
        limit: budget.max_paths,
    })?;
    if expected > budget.max_paths as u128 {
        return Err(Error::PathBudgetExceeded {
            paths: expected,
            limit: budget.max_paths,
        });
    }

    let deltas = x.deltas();
    let n = deltas.len();
    let start_lambda = lambda_at(f, x, &vec![0; n]);

    struct Search<'a> {
        f: &'a TruthTable,
        x: &'a TransientVector,
        deltas: &'a [u64],
        consumed: Vec<u64>,
        // current contracted output word
        out_changes: u64,
        out_last: bool,
        path: Vec<PathState>,
        best_changes: Option<u64>,
        best_path: Vec<PathState>,
        paths_seen: u128,
    }

    impl Search<'_> {
        fn run(&mut self) {
            if self.consumed.iter().zip(self.deltas).all(|(k, d)| k == d) {
                self.paths_seen += 1;
                if self.best_changes.is_none_or(|b| self.out_changes > b) {
                    self.best_changes = Some(self.out_changes);
                    self.best_path = self.path.clone();
                }
                return;
            }
            for i in 0..self.consumed.len() {
                if self.consumed[i] < self.deltas[i] {
                    self.consumed[i] += 1;
                    let lam = lambda_at(self.f, self.x, &self.consumed);
                    let flipped = lam != self.out_last;
                    if flipped {
                        self.out_changes += 1;
                        self.out_last = lam;
                    }
                    self.path.push(PathState {
                        consumed: self.consumed.clone(),
                        lambda: lam,
                    });
                    self.run();
                    self.path.pop();
                    if flipped {
                        self.out_changes -= 1;
                        self.out_last = !lam;
                    }
                    self.consumed[i] -= 1;
                }
            }
        }
    }

    let mut search = Search {
        f,
        x,
        deltas: &deltas,
        consumed: vec![0; n],
        out_changes: 0,
        out_last: start_lambda,
        path: vec![PathState {
            consumed: vec![0; n],
            lambda: start_lambda,
        }],
        best_changes: None,
        best_path: Vec::new(),
        paths_seen: 0,
    };
    search.run();

    if search.paths_seen != expected {
        return Err(Error::Internal {
            reason: format!(
                "enumerated {} paths but the multinomial count is {}",
                search.paths_seen, expected
            ),
        });
    }

    let best = search.best_changes.unwrap();
    Ok(CostReport {
        extension: Transient::new(start_lambda, best),
        cost: x.delta() - best,
        optimal_path: Some(search.best_path),
    })
}

/// Shared DP core: minimum cost from every state to the final state,
/// where an arc costs 1 exactly when it preserves the output value.
struct Dp {
    dims: Vec<u64>,
    strides: Vec<usize>,
    total: usize,
    lambda: Vec<bool>,
    to_go: Vec<u32>,
}

impl Dp {
    fn build(f: &TruthTable, x: &TransientVector, budget: &EvalBudget) -> Result<Dp> {
        check_arity(f, x)?;
        let dims: Vec<u64> = x.deltas().iter().map(|d| d + 1).collect();
        let mut total: u128 = 1;
        for &d in &dims {
            total = total.saturating_mul(d as u128);
        }
        if total > budget.max_states as u128 {
            return Err(Error::StateBudgetExceeded {
                states: total,
                limit: budget.max_states,
            });
        }
        let total = total as usize;
        let n = dims.len();
        let mut strides = vec![0usize; n];
        let mut acc = 1usize;
        for i in (0..n).rev() {
            strides[i] = acc;
            acc *= dims[i] as usize;
        }

        let mut lambda = vec![false; total];
        let mut consumed = vec![0u64; n];
        for (s, slot) in lambda.iter_mut().enumerate() {
            let mut rem = s;
            for i in 0..n {
                consumed[i] = (rem / strides[i]) as u64;
                rem %= strides[i];
            }
            *slot = lambda_at(f, x, &consumed);
        }

        // successors have strictly larger linear index, so a reverse scan
        // is a reverse topological order
        let mut to_go = vec![0u32; total];
        for s in (0..total - 1).rev() {
            let mut rem = s;
            let mut best = u32::MAX;
            for i in 0..n {
                let k = (rem / strides[i]) as u64;
                rem %= strides[i];
                if k < dims[i] - 1 {
                    let succ = s + strides[i];
                    let w = u32::from(lambda[s] == lambda[succ]);
                    best = best.min(w + to_go[succ]);
                }
            }
            to_go[s] = best;
        }

        Ok(Dp {
            dims,
            strides,
            total,
            lambda,
            to_go,
        })
    }

    fn decode(&self, s: usize) -> Vec<u64> {
        let mut rem = s;
        self.strides
            .iter()
            .map(|&st| {
                let k = rem / st;
                rem %= st;
                k as u64
            })
            .collect()
    }

    fn state(&self, s: usize) -> PathState {
        PathState {
            consumed: self.decode(s),
            lambda: self.lambda[s],
        }
    }

    /// Arcs out of `s` that stay on an optimal path.
    fn optimal_moves(&self, s: usize) -> Vec<usize> {
        let consumed = self.decode(s);
        let mut moves = Vec::new();
        for (i, &used) in consumed.iter().enumerate() {
            if used < self.dims[i] - 1 {
                let succ = s + self.strides[i];
                let w = u32::from(self.lambda[s] == self.lambda[succ]);
                if w + self.to_go[succ] == self.to_go[s] {
                    moves.push(succ);
                }
            }
        }
        moves
    }
}

/// Minimum-cost evaluation by dynamic programming over the prefix DAG.
/// The returned path is deterministic: ties prefer the lowest-index
/// coordinate.
pub fn extension_dp(f: &TruthTable, x: &TransientVector, budget: &EvalBudget) -> Result<CostReport> {
    let dp = Dp::build(f, x, budget)?;
    let cost = dp.to_go[0] as u64;
    let mut path = vec![dp.state(0)];
    let mut s = 0usize;
    while s != dp.total - 1 {
        s = dp.optimal_moves(s)[0];
        path.push(dp.state(s));
    }
    let start = dp.lambda[0];
    Ok(CostReport {
        extension: Transient::new(start, x.delta() - cost),
        cost,
        optimal_path: Some(path),
    })
}

/// All optimal paths, in lowest-coordinate-first order, up to `cap`
/// paths. The boolean is true when the cap truncated the enumeration.
pub fn all_optimal_paths(
    f: &TruthTable,
    x: &TransientVector,
    budget: &EvalBudget,
    cap: usize,
) -> Result<(u64, Vec<Vec<PathState>>, bool)> {
    let dp = Dp::build(f, x, budget)?;
    let mut paths = Vec::new();
    let mut truncated = false;
    let mut stack = vec![(0usize, vec![dp.state(0)])];
    while let Some((s, prefix)) = stack.pop() {
        if s == dp.total - 1 {
            if paths.len() == cap {
                truncated = true;
                break;
            }
            paths.push(prefix);
            continue;
        }
        // push in reverse so the lowest coordinate is explored first
        for succ in dp.optimal_moves(s).into_iter().rev() {
            let mut next = prefix.clone();
            next.push(dp.state(succ));
            stack.push((succ, next));
        }
    }
    Ok((dp.to_go[0] as u64, paths, truncated))
}

/// Walks every optimal path lazily and hands each to `visit`; stops as
/// soon as `visit` returns true. Returns whether a visit succeeded and
/// whether the enumeration was cut off by `cap`.
pub(crate) fn visit_optimal_paths(
    f: &TruthTable,
    x: &TransientVector,
    budget: &EvalBudget,
    cap: usize,
    mut visit: impl FnMut(&[PathState]) -> bool,
) -> Result<(u64, bool, bool)> {
    let dp = Dp::build(f, x, budget)?;
    let mut seen = 0usize;
    let mut truncated = false;
    let mut found = false;
    let mut stack = vec![(0usize, vec![dp.state(0)])];
    while let Some((s, prefix)) = stack.pop() {
        if s == dp.total - 1 {
            if seen == cap {
                truncated = true;
                break;
            }
            seen += 1;
            if visit(&prefix) {
                found = true;
                break;
            }
            continue;
        }
        for succ in dp.optimal_moves(s).into_iter().rev() {
            let mut next = prefix.clone();
            next.push(dp.state(succ));
            stack.push((succ, next));
        }
    }
    Ok((dp.to_go[0] as u64, found, truncated))
}

/// Closed-form evaluation for a decomposed function: complement the
/// inputs named by the mask, apply the OR/XOR formula, complement the
/// output if the decomposition says so. Linear in the input length.
pub fn extension_formula(d: &GDecomposition, x: &TransientVector) -> Result<Transient> {
    if d.arity != x.arity() {
        return Err(Error::ArityMismatch {
            expected: d.arity,
            found: x.arity(),
        });
    }
    let inputs: Vec<Transient> = x
        .components()
        .iter()
        .enumerate()
        .map(|(i, t)| {
            if d.input_complement_mask >> i & 1 == 1 {
                t.complemented()
            } else {
                *t
            }
        })
        .collect();

    let result = match d.base {
        GBase::Xor => {
            let alpha = inputs.iter().fold(false, |a, t| a ^ t.alpha());
            let delta = inputs.iter().map(Transient::delta).sum();
            Transient::new(alpha, delta)
        }
        GBase::Or => or_extension(&inputs),
    };
    Ok(if d.output_complement {
        result.complemented()
    } else {
        result
    })
}

fn or_extension(inputs: &[Transient]) -> Transient {
    if inputs.contains(&Transient::ONE) {
        return Transient::ONE;
    }
    let alpha = inputs.iter().any(|t| t.alpha());
    let omega = inputs.iter().any(|t| t.omega());
    let zeros: u64 = 1 + inputs.iter().map(|t| t.zeros() - 1).sum::<u64>();
    // reconstruct the length from the zero count and the endpoints
    let len = match (alpha, omega) {
        (false, false) => 2 * zeros - 1,
        (true, true) => 2 * zeros + 1,
        _ => 2 * zeros,
    };
    Transient::new(alpha, len - 1)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CostKind {
    Xor,
    Or,
    And,
}

fn sub_sat(a: u64, b: u64) -> u64 {
    a.saturating_sub(b)
}

/// Cost formulas for the pure operators on proper vectors.
pub fn cost_formula(kind: CostKind, x: &TransientVector) -> Result<u64> {
    if !x.is_proper() {
        return Err(Error::NotProper);
    }
    let units_alpha = x.alpha().iter().filter(|&&b| b).count() as u64;
    let units_omega = x.omega().iter().filter(|&&b| b).count() as u64;
    let zeros_alpha = x.arity() as u64 - units_alpha;
    let zeros_omega = x.arity() as u64 - units_omega;
    Ok(match kind {
        CostKind::Xor => 0,
        CostKind::Or => sub_sat(units_alpha, 1) + sub_sat(units_omega, 1),
        CostKind::And => sub_sat(zeros_alpha, 1) + sub_sat(zeros_omega, 1),
    })
}
