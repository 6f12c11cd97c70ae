//! Boolean cubes, live graphs, and the duality between digraph paths and
//! cube walks. Vertices use the integer encoding 4b1+2b2+b3 (generalized
//! positionally), so three-variable walks print as short digit words.

use std::io::Write;

use crate::boolfn::TruthTable;
use crate::digraph::{visit_optimal_paths, EvalBudget, PathState};
use crate::error::{Error, Result};
use crate::transient::{Transient, TransientVector};

/// A boolean function together with its cube: an edge is live when the
/// function values at its two endpoints differ.
#[derive(Clone, Copy)]
pub struct FunctionCube {
    f: TruthTable,
}

impl FunctionCube {
    pub fn new(f: TruthTable) -> Self {
        FunctionCube { f }
    }

    pub fn function(&self) -> &TruthTable {
        &self.f
    }

    pub fn arity(&self) -> usize {
        self.f.arity()
    }

    pub fn vertex_count(&self) -> usize {
        self.f.entries()
    }

    /// True when the edge between `v` and its neighbor across
    /// coordinate `coord` is live.
    pub fn is_live(&self, v: usize, coord: usize) -> bool {
        let n = self.arity();
        let w = v ^ (1 << (n - 1 - coord));
        self.f.value(v) != self.f.value(w)
    }

    /// Vertices all of whose incident edges are live.
    pub fn foci(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| (0..self.arity()).all(|c| self.is_live(v, c)))
            .collect()
    }

    /// Edge list with a live/dead tag per edge, one edge per line.
    pub fn export_edge_list<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        let n = self.arity();
        for v in 0..self.vertex_count() {
            for c in 0..n {
                let w = v ^ (1 << (n - 1 - c));
                if v < w {
                    let tag = if self.is_live(v, c) { "live" } else { "dead" };
                    writeln!(out, "{v} {w} {tag}")?;
                }
            }
        }
        Ok(())
    }
}

/// A sequence of cube vertices with consecutive vertices adjacent.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Walk {
    arity: usize,
    vertices: Vec<usize>,
}

impl Walk {
    pub fn new(arity: usize, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidWalk {
                reason: "a walk needs at least one vertex".into(),
            });
        }
        let limit = 1usize << arity;
        for &v in &vertices {
            if v >= limit {
                return Err(Error::InvalidWalk {
                    reason: format!("vertex {v} out of range for arity {arity}"),
                });
            }
        }
        for pair in vertices.windows(2) {
            if (pair[0] ^ pair[1]).count_ones() != 1 {
                return Err(Error::InvalidWalk {
                    reason: format!("vertices {} and {} are not adjacent", pair[0], pair[1]),
                });
            }
        }
        Ok(Walk { arity, vertices })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of steps whose endpoints carry equal function values, i.e.
    /// the walk edges outside the live graph.
    pub fn cost(&self, f: &TruthTable) -> u64 {
        self.vertices
            .windows(2)
            .filter(|p| f.value(p[0]) == f.value(p[1]))
            .count() as u64
    }

    /// The vector of the walk: the componentwise contraction of the
    /// vertex bit sequences.
    pub fn vector(&self) -> TransientVector {
        let n = self.arity;
        let components = (0..n)
            .map(|c| {
                let bits: Vec<bool> = self
                    .vertices
                    .iter()
                    .map(|&v| crate::transient::vertex_bit(v, c, n))
                    .collect();
                Transient::contract(&bits).unwrap()
            })
            .collect();
        TransientVector::new(components).unwrap()
    }

    /// True when every coordinate has a live edge in that coordinate
    /// sharing a vertex with the walk.
    pub fn is_complete(&self, f: &TruthTable) -> bool {
        let cube = FunctionCube::new(*f);
        (0..self.arity).all(|c| self.vertices.iter().any(|&v| cube.is_live(v, c)))
    }

    /// Alternation test for length-6 walks on three variables: each of
    /// the three 4-vertex windows must contain a change in every
    /// coordinate.
    pub fn is_alternating(&self) -> Result<bool> {
        if self.arity != 3 || self.vertices.len() != 6 {
            return Err(Error::InvalidWalk {
                reason: "alternation is defined for 6-vertex walks on 3 variables".into(),
            });
        }
        Ok(self.vertices.windows(4).all(|w| {
            let mut coords = 0usize;
            for p in w.windows(2) {
                coords |= p[0] ^ p[1];
            }
            coords == 0b111
        }))
    }
}

impl std::fmt::Display for Walk {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.arity <= 3 {
            for v in &self.vertices {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let words: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
            f.write_str(&words.join("-"))
        }
    }
}

/// Walk of a path: the sequence of prefix endpoints.
pub fn walk_of_path(x: &TransientVector, path: &[PathState]) -> Result<Walk> {
    let n = x.arity();
    let mut vertices = Vec::with_capacity(path.len());
    for (step, state) in path.iter().enumerate() {
        if state.consumed.len() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: state.consumed.len(),
            });
        }
        if step > 0 {
            let prev = &path[step - 1].consumed;
            let increments: Vec<_> = (0..n)
                .filter(|&i| state.consumed[i] != prev[i])
                .collect();
            let ok = increments.len() == 1
                && state.consumed[increments[0]] == prev[increments[0]] + 1;
            if !ok {
                return Err(Error::InvalidWalk {
                    reason: "consecutive path states must increment exactly one counter".into(),
                });
            }
        }
        let mut vertex = 0usize;
        for (i, &k) in state.consumed.iter().enumerate() {
            if k > x.component(i).delta() {
                return Err(Error::InvalidWalk {
                    reason: "path state consumes more changes than the vector holds".into(),
                });
            }
            vertex = (vertex << 1) | usize::from(x.component(i).letter(k));
        }
        vertices.push(vertex);
    }
    Walk::new(n, vertices)
}

/// Path of a walk: the running componentwise contractions, labeled with
/// the function value at each prefix endpoint.
pub fn path_of_walk(f: &TruthTable, walk: &Walk) -> Result<Vec<PathState>> {
    let n = walk.arity();
    if f.arity() != n {
        return Err(Error::ArityMismatch {
            expected: f.arity(),
            found: n,
        });
    }
    let mut consumed = vec![0u64; n];
    let mut last_bits: Vec<bool> = (0..n)
        .map(|c| crate::transient::vertex_bit(walk.vertices()[0], c, n))
        .collect();
    let mut path = Vec::with_capacity(walk.len());
    path.push(PathState {
        consumed: consumed.clone(),
        lambda: f.value(walk.vertices()[0]),
    });
    for &v in &walk.vertices()[1..] {
        for (c, last) in last_bits.iter_mut().enumerate() {
            let bit = crate::transient::vertex_bit(v, c, n);
            if bit != *last {
                consumed[c] += 1;
                *last = bit;
            }
        }
        path.push(PathState {
            consumed: consumed.clone(),
            lambda: f.value(v),
        });
    }
    Ok(path)
}

#[derive(Clone, Debug)]
pub struct OptimalWalks {
    pub cost: u64,
    pub walks: Vec<Walk>,
    pub truncated: bool,
}

/// All minimum-cost walks for `x`, obtained from the optimal paths of
/// the transient digraph. Enumeration stops at `cap` walks; the report
/// says when that happened.
pub fn optimal_walks(
    f: &TruthTable,
    x: &TransientVector,
    budget: &EvalBudget,
    cap: usize,
) -> Result<OptimalWalks> {
    let mut walks = Vec::new();
    let (cost, _, truncated) = visit_optimal_paths(f, x, budget, cap, |path| {
        walks.push(walk_of_path(x, path).expect("optimal path is always a valid walk"));
        false
    })?;
    Ok(OptimalWalks {
        cost,
        walks,
        truncated,
    })
}

pub enum CompleteWalkSearch {
    Found(Walk),
    Absent,
    Truncated,
}

/// First complete optimal walk in deterministic order, if any optimal
/// walk is complete. Gives up (reporting truncation) after `cap`
/// enumerated optimal walks.
pub fn find_complete_optimal_walk(
    f: &TruthTable,
    x: &TransientVector,
    budget: &EvalBudget,
    cap: usize,
) -> Result<(u64, CompleteWalkSearch)> {
    let mut hit: Option<Walk> = None;
    let (cost, found, truncated) = visit_optimal_paths(f, x, budget, cap, |path| {
        let walk = walk_of_path(x, path).expect("optimal path is always a valid walk");
        if walk.is_complete(f) {
            hit = Some(walk);
            true
        } else {
            false
        }
    })?;
    let outcome = if found {
        CompleteWalkSearch::Found(hit.unwrap())
    } else if truncated {
        CompleteWalkSearch::Truncated
    } else {
        CompleteWalkSearch::Absent
    };
    Ok((cost, outcome))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::primitives;
    use crate::expr::parse_function;

    fn v(s: &str) -> TransientVector {
        s.parse().unwrap()
    }

    fn walk(arity: usize, vs: &[usize]) -> Walk {
        Walk::new(arity, vs.to_vec()).unwrap()
    }

    // A function true exactly
    // on vertices 4 and 7. Its walk-cost table from vertex 2 is the
    // fixture used below and in the acceptance suite.
    pub(crate) fn f2_cube() -> TruthTable {
        TruthTable::from_fn(3, |i| i == 4 || i == 7).unwrap()
    }

    #[test]
    fn example_path_and_walk_conversions() {
        let f = parse_function("x1+x2'", None).unwrap();
        let x = v("010,1010");
        // cost-2 path: change order x2,x2,x1,x2,x1
        let w = walk(2, &[1, 0, 1, 3, 2, 0]);
        let p = path_of_walk(&f, &w).unwrap();
        let consumed: Vec<Vec<u64>> = p.iter().map(|s| s.consumed.clone()).collect();
        assert_eq!(
            consumed,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(w.cost(&f), 2);
        let back = walk_of_path(&x, &p).unwrap();
        assert_eq!(back, w);

        // zero-cost path stays inside the live graph
        let w0 = walk(2, &[1, 3, 1, 0, 1, 0]);
        assert_eq!(w0.cost(&f), 0);
        assert_eq!(w0.vector(), x);
    }

    #[test]
    fn single_vertex_round_trip() {
        let f = primitives::or(2).unwrap();
        let w = walk(2, &[3]);
        let p = path_of_walk(&f, &w).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].consumed, vec![0, 0]);
        let back = walk_of_path(&w.vector(), &p).unwrap();
        assert_eq!(back, w);
        assert_eq!(w.cost(&f), 0);
    }

    #[test]
    fn walk_rejects_non_adjacent_steps() {
        assert!(Walk::new(2, vec![0, 3]).is_err());
        assert!(Walk::new(2, vec![0, 4]).is_err());
        assert!(Walk::new(2, vec![]).is_err());
    }

    #[test]
    fn foci_examples() {
        let f5 = parse_function("x1(x2+x3)", None).unwrap();
        assert!(FunctionCube::new(f5).foci().is_empty());
        let maj = parse_function("x1x2+x2x3+x3x1", None).unwrap();
        assert!(FunctionCube::new(maj).foci().is_empty());
        let xor3 = primitives::xor(3).unwrap();
        assert_eq!(FunctionCube::new(xor3).foci(), (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn fixture_walks_from_vertex_two() {
        let f = f2_cube();
        let x = TransientVector::from_angle(2, &[1, 1, 1]).unwrap();
        let r = optimal_walks(&f, &x, &EvalBudget::default(), 10_000).unwrap();
        assert_eq!(r.cost, 1);
        assert!(!r.truncated);
        assert!(r.walks.contains(&walk(3, &[2, 6, 4, 5])));
        for w in &r.walks {
            assert_eq!(w.vector(), x);
        }

        let x = TransientVector::from_angle(2, &[2, 1, 1]).unwrap();
        let r = optimal_walks(&f, &x, &EvalBudget::default(), 10_000).unwrap();
        assert_eq!(r.cost, 2);
    }

    #[test]
    fn trivial_vector_has_trivial_walk() {
        let f = primitives::and(3).unwrap();
        let x = v("1,0,1");
        let r = optimal_walks(&f, &x, &EvalBudget::default(), 10).unwrap();
        assert_eq!(r.cost, 0);
        assert_eq!(r.walks, vec![walk(3, &[5])]);
    }

    #[test]
    fn completeness_examples() {
        let f = f2_cube();
        // 4 is a focus of the cube variant; the fixture walk passes it
        let w = walk(3, &[2, 6, 4, 5]);
        assert!(w.is_complete(&f));
        assert!(FunctionCube::new(f).foci().contains(&4));

        // a lone vertex with no incident live edge in some coordinate
        let or3 = primitives::or(3).unwrap();
        let w = walk(3, &[7]);
        assert!(!w.is_complete(&or3));
    }

    #[test]
    fn alternation_examples() {
        assert!(walk(3, &[0, 1, 5, 7, 6, 2]).is_alternating().unwrap());
        assert!(walk(3, &[1, 3, 2, 6, 4, 5]).is_alternating().unwrap());
        assert!(!walk(3, &[0, 1, 0, 1, 0, 1]).is_alternating().unwrap());
        assert!(walk(3, &[0, 1]).is_alternating().is_err());
        assert!(walk(2, &[0, 1]).is_alternating().is_err());
    }

    #[test]
    fn edge_list_export() {
        let f = parse_function("x1+x2'", None).unwrap();
        let mut buf = Vec::new();
        FunctionCube::new(f).export_edge_list(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines.contains(&"0 1 live"));
        assert!(lines.contains(&"0 2 dead"));
    }
}
