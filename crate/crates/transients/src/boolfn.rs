//! Boolean functions as truth tables, with dependence analysis, symmetry
//! classes under input permutation / input complementation / output
//! complementation, and recognition of the class of functions built from
//! OR or XOR by complementing inputs and/or the output.

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::transient::vertex_bit;

/// Largest supported truth-table arity.
pub const MAX_ARITY: usize = 8;
/// Largest arity for which the exhaustive symmetry-transform sweep runs.
pub const MAX_NPN_ARITY: usize = 5;

/// A boolean function of `arity` variables as a flat value table. Entry
/// `i` is the value on the input whose integer encoding is `i`, with the
/// first variable as the most-significant bit (vertex 4b1+2b2+b3 for
/// three variables).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct TruthTable {
    arity: u8,
    words: [u64; 4],
}

impl TruthTable {
    pub fn from_fn(arity: usize, f: impl Fn(usize) -> bool) -> Result<Self> {
        check_arity(arity)?;
        let mut words = [0u64; 4];
        for i in 0..(1usize << arity) {
            if f(i) {
                words[i >> 6] |= 1 << (i & 63);
            }
        }
        Ok(TruthTable {
            arity: arity as u8,
            words,
        })
    }

    pub fn from_values(arity: usize, values: &[bool]) -> Result<Self> {
        check_arity(arity)?;
        if values.len() != 1 << arity {
            return Err(Error::ArityMismatch {
                expected: 1 << arity,
                found: values.len(),
            });
        }
        TruthTable::from_fn(arity, |i| values[i])
    }

    pub fn constant(arity: usize, value: bool) -> Result<Self> {
        TruthTable::from_fn(arity, |_| value)
    }

    pub fn arity(&self) -> usize {
        self.arity as usize
    }

    pub fn entries(&self) -> usize {
        1 << self.arity
    }

    /// Value at the integer-encoded input `index`.
    pub fn value(&self, index: usize) -> bool {
        debug_assert!(index < self.entries());
        (self.words[index >> 6] >> (index & 63)) & 1 == 1
    }

    pub fn evaluate(&self, inputs: &[bool]) -> Result<bool> {
        if inputs.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: inputs.len(),
            });
        }
        Ok(self.value(crate::transient::bits_to_vertex(inputs)))
    }

    /// True when some pair of points differing only in variable `k`
    /// (0-based) has differing values.
    pub fn depends_on(&self, k: usize) -> Result<bool> {
        if k >= self.arity() {
            return Err(Error::IndexOutOfRange {
                index: k,
                arity: self.arity(),
            });
        }
        let flip = 1usize << (self.arity() - 1 - k);
        Ok((0..self.entries()).any(|i| self.value(i) != self.value(i ^ flip)))
    }

    /// Variables the function actually depends on, in order.
    pub fn support(&self) -> Vec<usize> {
        (0..self.arity())
            .filter(|&k| self.depends_on(k).unwrap())
            .collect()
    }

    pub fn is_degenerate(&self) -> bool {
        self.support().len() < self.arity()
    }

    /// Restriction to the given variables; the dropped variables must not
    /// influence the function. `vars` must be nonempty and increasing.
    pub fn project(&self, vars: &[usize]) -> Result<TruthTable> {
        if vars.is_empty() {
            return Err(Error::InvalidFunction {
                literal: self.to_string(),
                reason: "cannot project onto an empty variable set".into(),
            });
        }
        let n = self.arity();
        let m = vars.len();
        TruthTable::from_fn(m, |j| {
            let mut full = 0usize;
            for (pos, &k) in vars.iter().enumerate() {
                if vertex_bit(j, pos, m) {
                    full |= 1 << (n - 1 - k);
                }
            }
            self.value(full)
        })
    }

    /// `tt:<hex>/<arity>` literal; bit `i` of the hex number is entry `i`.
    pub fn to_literal(&self) -> String {
        let digits = self.entries().div_ceil(4);
        let mut hex = String::new();
        for d in (0..digits).rev() {
            let mut nibble = 0u8;
            for b in 0..4 {
                let idx = d * 4 + b;
                if idx < self.entries() && self.value(idx) {
                    nibble |= 1 << b;
                }
            }
            hex.push(char::from_digit(nibble as u32, 16).unwrap());
        }
        format!("tt:{hex}/{}", self.arity)
    }

    pub fn parse_literal(s: &str) -> Result<TruthTable> {
        let bad = |reason: &str| Error::InvalidFunction {
            literal: s.to_string(),
            reason: reason.to_string(),
        };
        let body = s.strip_prefix("tt:").ok_or_else(|| bad("missing tt: prefix"))?;
        let (hex, arity) = body.split_once('/').ok_or_else(|| bad("expected tt:<hex>/<arity>"))?;
        let arity: usize = arity.parse().map_err(|_| bad("arity must be an integer"))?;
        check_arity(arity)?;
        let entries = 1usize << arity;
        let mut values = vec![false; entries];
        for (pos, c) in hex.chars().rev().enumerate() {
            let nibble = c.to_digit(16).ok_or_else(|| bad("non-hex digit"))? as usize;
            for b in 0..4 {
                let idx = pos * 4 + b;
                if nibble >> b & 1 == 1 {
                    if idx >= entries {
                        return Err(bad("hex value has more bits than table entries"));
                    }
                    values[idx] = true;
                }
            }
        }
        TruthTable::from_values(arity, &values)
    }

    /// Compares the value tables as integers (entry 0 least significant).
    fn table_cmp(&self, other: &TruthTable) -> Ordering {
        self.arity
            .cmp(&other.arity)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for TruthTable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TruthTable {
    fn cmp(&self, other: &Self) -> Ordering {
        self.table_cmp(other)
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable({})", self.to_literal())
    }
}

fn check_arity(arity: usize) -> Result<()> {
    if arity == 0 || arity > MAX_ARITY {
        return Err(Error::ArityTooLarge {
            arity,
            max: MAX_ARITY,
        });
    }
    Ok(())
}

/// Named gate primitives.
pub mod primitives {
    use super::*;

    pub fn not() -> TruthTable {
        TruthTable::from_fn(1, |i| i == 0).unwrap()
    }

    pub fn and(arity: usize) -> Result<TruthTable> {
        let all = (1usize << arity) - 1;
        TruthTable::from_fn(arity, move |i| i == all)
    }

    pub fn or(arity: usize) -> Result<TruthTable> {
        TruthTable::from_fn(arity, |i| i != 0)
    }

    pub fn xor(arity: usize) -> Result<TruthTable> {
        TruthTable::from_fn(arity, |i| i.count_ones() % 2 == 1)
    }

    pub fn nand(arity: usize) -> Result<TruthTable> {
        let all = (1usize << arity) - 1;
        TruthTable::from_fn(arity, move |i| i != all)
    }

    pub fn nor(arity: usize) -> Result<TruthTable> {
        TruthTable::from_fn(arity, |i| i == 0)
    }

    pub fn xnor(arity: usize) -> Result<TruthTable> {
        TruthTable::from_fn(arity, |i| i.count_ones() % 2 == 0)
    }
}

/// One element of the symmetry group acting on truth tables: permute the
/// inputs, complement a subset of inputs, optionally complement the
/// output. The transformed function is
/// `g(y) = output_complement ^ f(perm(y ^ input_complement_mask))`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NpnTransform {
    /// `perm[i]` is the source coordinate feeding output coordinate `i`.
    pub perm: Vec<usize>,
    /// Bit `i` (plain coordinate index) complements variable `i`.
    pub input_complement_mask: u16,
    pub output_complement: bool,
}

impl NpnTransform {
    pub fn identity(arity: usize) -> Self {
        NpnTransform {
            perm: (0..arity).collect(),
            input_complement_mask: 0,
            output_complement: false,
        }
    }

    pub fn inverse(&self) -> Self {
        let n = self.perm.len();
        let mut inv = vec![0usize; n];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        // the complement applied at coordinate i must be undone at the
        // coordinate it was routed to, perm[i]
        let mut mask = 0u16;
        for i in 0..n {
            if self.input_complement_mask >> i & 1 == 1 {
                mask |= 1 << self.perm[i];
            }
        }
        NpnTransform {
            perm: inv,
            input_complement_mask: mask,
            output_complement: self.output_complement,
        }
    }
}

pub fn apply_transform(f: &TruthTable, t: &NpnTransform) -> Result<TruthTable> {
    let n = f.arity();
    if t.perm.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: t.perm.len(),
        });
    }
    TruthTable::from_fn(n, |y| {
        let mut src = 0usize;
        for i in 0..n {
            let z = vertex_bit(y, i, n) ^ (t.input_complement_mask >> i & 1 == 1);
            // coordinate i of the permuted point comes from coordinate perm[i]
            if z {
                src |= 1 << (n - 1 - t.perm[i]);
            }
        }
        t.output_complement ^ f.value(src)
    })
}

/// Canonical representative of the symmetry class of `f`: the
/// numerically smallest table over all transforms. Exhaustive, so the
/// arity is capped.
pub fn npn_canonical(f: &TruthTable) -> Result<(TruthTable, NpnTransform)> {
    let n = f.arity();
    if n > MAX_NPN_ARITY {
        return Err(Error::ArityTooLarge {
            arity: n,
            max: MAX_NPN_ARITY,
        });
    }
    let mut best: Option<(TruthTable, NpnTransform)> = None;
    for perm in (0..n).permutations(n) {
        for mask in 0..(1u16 << n) {
            for out in [false, true] {
                let t = NpnTransform {
                    perm: perm.clone(),
                    input_complement_mask: mask,
                    output_complement: out,
                };
                let g = apply_transform(f, &t)?;
                if best.as_ref().is_none_or(|(b, _)| g < *b) {
                    best = Some((g, t));
                }
            }
        }
    }
    Ok(best.unwrap())
}

pub fn npn_equivalent(f: &TruthTable, g: &TruthTable) -> Result<bool> {
    if f.arity() != g.arity() {
        return Ok(false);
    }
    Ok(npn_canonical(f)?.0 == npn_canonical(g)?.0)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GBase {
    Or,
    Xor,
}

impl fmt::Display for GBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GBase::Or => "OR",
            GBase::Xor => "XOR",
        })
    }
}

/// Witness that a function is OR or XOR with some inputs and/or the
/// output complemented.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GDecomposition {
    pub base: GBase,
    pub arity: usize,
    /// Bit `i` (plain coordinate index) complements input `i`.
    pub input_complement_mask: u16,
    pub output_complement: bool,
}

impl GDecomposition {
    pub fn recompose(&self) -> TruthTable {
        let n = self.arity;
        TruthTable::from_fn(n, |v| {
            let ones = (0..n)
                .filter(|&i| vertex_bit(v, i, n) ^ (self.input_complement_mask >> i & 1 == 1))
                .count();
            let base = match self.base {
                GBase::Or => ones != 0,
                GBase::Xor => ones % 2 == 1,
            };
            self.output_complement ^ base
        })
        .unwrap()
    }
}

/// Exhaustive sweep over both bases, all input masks and both output
/// bits; returns the first decomposition that reproduces `f` pointwise.
pub fn g_decompose(f: &TruthTable) -> Option<GDecomposition> {
    let n = f.arity();
    for base in [GBase::Or, GBase::Xor] {
        for mask in 0..(1u16 << n) {
            for out in [false, true] {
                let d = GDecomposition {
                    base,
                    arity: n,
                    input_complement_mask: mask,
                    output_complement: out,
                };
                if d.recompose() == *f {
                    return Some(d);
                }
            }
        }
    }
    None
}

/// Symmetry-class census of all functions at a given arity.
pub struct Census {
    pub classes: Vec<ClassInfo>,
}

pub struct ClassInfo {
    pub canonical: TruthTable,
    pub size: usize,
    pub degenerate: bool,
    pub in_g: bool,
}

impl Census {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn degenerate_functions(&self) -> usize {
        self.classes
            .iter()
            .filter(|c| c.degenerate)
            .map(|c| c.size)
            .sum()
    }

    pub fn g_classes(&self) -> usize {
        self.classes.iter().filter(|c| c.in_g).count()
    }

    pub fn g_functions(&self) -> usize {
        self.classes.iter().filter(|c| c.in_g).map(|c| c.size).sum()
    }

    pub fn remaining_classes(&self) -> usize {
        self.classes
            .iter()
            .filter(|c| !c.degenerate && !c.in_g)
            .count()
    }

    pub fn remaining_functions(&self) -> usize {
        self.classes
            .iter()
            .filter(|c| !c.degenerate && !c.in_g)
            .map(|c| c.size)
            .sum()
    }
}

/// Enumerates every function of the given arity (feasible up to 4) and
/// groups them by canonical representative.
pub fn census(arity: usize) -> Result<Census> {
    if arity > 4 {
        return Err(Error::ArityTooLarge { arity, max: 4 });
    }
    let entries = 1usize << arity;
    let mut by_canonical: std::collections::BTreeMap<TruthTable, ClassInfo> = Default::default();
    for bits in 0u64..(1u64 << entries) {
        let f = TruthTable::from_fn(arity, |i| bits >> i & 1 == 1)?;
        let canonical = npn_canonical(&f)?.0;
        let entry = by_canonical.entry(canonical).or_insert_with(|| ClassInfo {
            canonical,
            size: 0,
            degenerate: canonical.is_degenerate(),
            in_g: g_decompose(&canonical).is_some() && !canonical.is_degenerate(),
        });
        entry.size += 1;
    }
    Ok(Census {
        classes: by_canonical.into_values().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_function;

    fn f(expr: &str) -> TruthTable {
        parse_function(expr, None).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let or2 = primitives::or(2).unwrap();
        assert!(!or2.evaluate(&[false, false]).unwrap());
        let xor3 = primitives::xor(3).unwrap();
        assert!(!xor3.evaluate(&[true, true, false]).unwrap());
        let maj = f("x1x2+x2x3+x3x1");
        assert!(maj.evaluate(&[true, false, true]).unwrap());
        assert!(maj.evaluate(&[true, false]).is_err());
    }

    #[test]
    fn transform_round_trips() {
        let g = f("x1(x2^x3)");
        let ident = NpnTransform::identity(3);
        assert_eq!(apply_transform(&g, &ident).unwrap(), g);

        let t = NpnTransform {
            perm: vec![2, 0, 1],
            input_complement_mask: 0b101,
            output_complement: true,
        };
        let h = apply_transform(&g, &t).unwrap();
        assert_eq!(apply_transform(&h, &t.inverse()).unwrap(), g);

        // double output complement is the identity
        let flip = NpnTransform {
            perm: vec![0, 1, 2],
            input_complement_mask: 0,
            output_complement: true,
        };
        let once = apply_transform(&g, &flip).unwrap();
        assert_eq!(apply_transform(&once, &flip).unwrap(), g);
    }

    #[test]
    fn symmetry_chain_from_or() {
        // x'z is reachable from x+y by renaming and complementing
        assert!(npn_equivalent(&f("x'z"), &f("x+y")).unwrap());
    }

    #[test]
    fn canonical_is_orbit_invariant() {
        let g = f("x2x3+x1x2'x3'");
        let t = NpnTransform {
            perm: vec![1, 2, 0],
            input_complement_mask: 0b011,
            output_complement: true,
        };
        let h = apply_transform(&g, &t).unwrap();
        assert_eq!(npn_canonical(&g).unwrap().0, npn_canonical(&h).unwrap().0);
    }

    #[test]
    fn three_variable_census() {
        let c = census(3).unwrap();
        assert_eq!(c.class_count(), 14);
        assert_eq!(c.degenerate_functions(), 38);
        assert_eq!(c.g_classes(), 2);
        assert_eq!(c.g_functions(), 18);
        assert_eq!(c.remaining_classes(), 8);
        assert_eq!(c.remaining_functions(), 200);
    }

    #[test]
    fn g_decompose_examples() {
        let d = g_decompose(&f("(x1+x2')'")).unwrap();
        assert_eq!(d.base, GBase::Or);
        assert_eq!(d.input_complement_mask, 0b10);
        assert!(d.output_complement);
        assert_eq!(d.recompose(), f("(x1+x2')'"));

        let d = g_decompose(&primitives::xor(3).unwrap()).unwrap();
        assert_eq!(d.base, GBase::Xor);
        assert_eq!(d.input_complement_mask, 0);
        assert!(!d.output_complement);

        assert!(g_decompose(&f("x1x2+x2x3+x3x1")).is_none());
    }

    #[test]
    fn dependence() {
        assert!(f("x1+x2").depends_on(0).unwrap());
        let zero = TruthTable::constant(3, false).unwrap();
        for k in 0..3 {
            assert!(!zero.depends_on(k).unwrap());
        }
        assert!(f("x2x3+x1x2'x3'").depends_on(0).unwrap());
        assert!(zero.depends_on(5).is_err());
    }

    #[test]
    fn named_class_anchors_are_distinct_and_outside_g() {
        let anchors = [
            f("x1(x2^x3)"),
            f("x2x3+x1x2'x3'"),
            f("x1(x2+x3)"),
            f("x1x2+x2x3+x3x1"),
        ];
        for a in &anchors {
            assert!(!a.is_degenerate());
            assert!(g_decompose(a).is_none());
        }
        for i in 0..anchors.len() {
            for j in i + 1..anchors.len() {
                assert!(!npn_equivalent(&anchors[i], &anchors[j]).unwrap());
            }
        }
    }

    #[test]
    fn literal_round_trip() {
        let maj = f("x1x2+x2x3+x3x1");
        let lit = maj.to_literal();
        assert_eq!(TruthTable::parse_literal(&lit).unwrap(), maj);
        assert!(TruthTable::parse_literal("tt:zz/3").is_err());
        assert!(TruthTable::parse_literal("tt:ff/0").is_err());
    }

    #[test]
    fn projection_drops_unused_variables() {
        // x2, padded to three variables by an inert x3 term
        let g = f("x2+x2x3'x3");
        assert_eq!(g.support(), vec![1]);
        let p = g.project(&[1]).unwrap();
        assert_eq!(p.arity(), 1);
        assert!(!p.value(0));
        assert!(p.value(1));
    }
}
