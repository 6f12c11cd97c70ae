//! Transients and transient vectors.
//!
//! A transient is a nonempty binary word of strictly alternating 0's and
//! 1's; it records a sequence of signal values on a wire. Internally a
//! transient is stored as its first letter plus its number of changes,
//! which is enough to reconstruct the letter sequence on demand.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest number of changes accepted per component when parsing.
pub const MAX_COMPONENT_CHANGES: u64 = (1 << 31) - 2;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transient {
    start: bool,
    changes: u64,
}

impl Transient {
    pub const ZERO: Transient = Transient {
        start: false,
        changes: 0,
    };
    pub const ONE: Transient = Transient {
        start: true,
        changes: 0,
    };

    pub fn new(start: bool, changes: u64) -> Self {
        Transient { start, changes }
    }

    /// Contraction of a nonempty binary word: drop every letter equal to
    /// its predecessor. The result always alternates.
    pub fn contract(bits: &[bool]) -> Result<Self> {
        let (&first, rest) = bits.split_first().ok_or_else(|| Error::InvalidTransient {
            literal: String::new(),
            reason: "empty word".into(),
        })?;
        let mut last = first;
        let mut changes = 0u64;
        for &b in rest {
            if b != last {
                changes += 1;
                last = b;
            }
        }
        Ok(Transient::new(first, changes))
    }

    pub fn alpha(&self) -> bool {
        self.start
    }

    pub fn omega(&self) -> bool {
        self.start ^ (self.changes % 2 == 1)
    }

    pub fn delta(&self) -> u64 {
        self.changes
    }

    pub fn len(&self) -> u64 {
        self.changes + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Letter at position `k`, counted from 0.
    pub fn letter(&self, k: u64) -> bool {
        debug_assert!(k <= self.changes);
        self.start ^ (k % 2 == 1)
    }

    pub fn letters(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(move |k| self.letter(k))
    }

    /// Number of 0's in the letter sequence.
    pub fn zeros(&self) -> u64 {
        if self.start {
            self.len() / 2
        } else {
            self.len() - self.len() / 2
        }
    }

    /// Number of 1's ("units") in the letter sequence.
    pub fn units(&self) -> u64 {
        self.len() - self.zeros()
    }

    /// Proper transients have at least one change.
    pub fn is_proper(&self) -> bool {
        self.changes >= 1
    }

    /// Concatenation followed by contraction.
    pub fn circ(&self, other: &Transient) -> Transient {
        let joint = if self.omega() == other.alpha() { 0 } else { 1 };
        let changes = self
            .changes
            .checked_add(other.changes)
            .and_then(|c| c.checked_add(joint))
            .expect("transient change count overflow");
        Transient::new(self.start, changes)
    }

    pub fn complemented(&self) -> Transient {
        Transient::new(!self.start, self.changes)
    }

    /// The unique transient extending this one by one alternating letter.
    pub fn successor(&self) -> Transient {
        Transient::new(self.start, self.changes + 1)
    }

    pub fn is_prefix_of(&self, other: &Transient) -> bool {
        self.start == other.start && self.changes <= other.changes
    }

    /// Length-2 or length-3 prefix with the same endpoints and change
    /// parity: the characteristic transient. Requires a proper input.
    pub fn characteristic(&self) -> Result<Transient> {
        if !self.is_proper() {
            return Err(Error::NotProper);
        }
        let changes = if self.changes.is_multiple_of(2) { 2 } else { 1 };
        Ok(Transient::new(self.start, changes))
    }
}

impl fmt::Display for Transient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.letters() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Transient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Transient({self})")
    }
}

impl FromStr for Transient {
    type Err = Error;

    /// Accepts the letter form `0101` (strict alternation required) and
    /// the angle form `<0;3>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidTransient {
            literal: s.to_string(),
            reason: reason.to_string(),
        };
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('<').and_then(|r| r.strip_suffix('>')) {
            let (b, k) = inner.split_once(';').ok_or_else(|| bad("expected <b;k>"))?;
            let start = match b.trim() {
                "0" => false,
                "1" => true,
                _ => return Err(bad("start letter must be 0 or 1")),
            };
            let changes: u64 = k
                .trim()
                .parse()
                .map_err(|_| bad("change count must be a non-negative integer"))?;
            if changes > MAX_COMPONENT_CHANGES {
                return Err(bad("change count exceeds the supported maximum"));
            }
            return Ok(Transient::new(start, changes));
        }
        if s.is_empty() {
            return Err(bad("empty word"));
        }
        let mut letters = s.chars().map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(bad("letters must be 0 or 1")),
        });
        let first = letters.next().unwrap()?;
        let mut last = first;
        let mut changes = 0u64;
        for l in letters {
            let b = l?;
            if b == last {
                return Err(bad("letters must strictly alternate"));
            }
            changes += 1;
            last = b;
        }
        if changes > MAX_COMPONENT_CHANGES {
            return Err(bad("change count exceeds the supported maximum"));
        }
        Ok(Transient::new(first, changes))
    }
}

/// An n-tuple of transients, the input to a transient extension.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TransientVector {
    components: Vec<Transient>,
}

impl TransientVector {
    pub fn new(components: Vec<Transient>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidVector {
                literal: String::new(),
                reason: "a vector needs at least one component".into(),
            });
        }
        Ok(TransientVector { components })
    }

    /// Builds the vector `<alpha; deltas>` from the integer encoding of
    /// its starting vertex (most-significant bit = first coordinate).
    pub fn from_angle(alpha_vertex: usize, deltas: &[u64]) -> Result<Self> {
        let n = deltas.len();
        let components = deltas
            .iter()
            .enumerate()
            .map(|(i, &d)| Transient::new((alpha_vertex >> (n - 1 - i)) & 1 == 1, d))
            .collect();
        TransientVector::new(components)
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Transient] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Transient {
        &self.components[i]
    }

    pub fn len(&self) -> u64 {
        self.components.iter().map(Transient::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn delta(&self) -> u64 {
        self.components.iter().map(Transient::delta).sum()
    }

    pub fn deltas(&self) -> Vec<u64> {
        self.components.iter().map(Transient::delta).collect()
    }

    pub fn alpha(&self) -> Vec<bool> {
        self.components.iter().map(Transient::alpha).collect()
    }

    pub fn omega(&self) -> Vec<bool> {
        self.components.iter().map(Transient::omega).collect()
    }

    /// Integer encoding of `alpha` with the first coordinate as the
    /// most-significant bit.
    pub fn alpha_vertex(&self) -> usize {
        bits_to_vertex(&self.alpha())
    }

    pub fn omega_vertex(&self) -> usize {
        bits_to_vertex(&self.omega())
    }

    pub fn is_proper(&self) -> bool {
        self.components.iter().all(Transient::is_proper)
    }

    /// All vectors obtained by extending exactly one component by one
    /// alternating letter; there are exactly `arity` of them.
    pub fn successors(&self) -> Vec<TransientVector> {
        (0..self.arity())
            .map(|i| {
                let mut c = self.components.clone();
                c[i] = c[i].successor();
                TransientVector { components: c }
            })
            .collect()
    }

    pub fn is_prefix_of(&self, other: &TransientVector) -> Result<bool> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch {
                expected: other.arity(),
                found: self.arity(),
            });
        }
        Ok(self
            .components
            .iter()
            .zip(&other.components)
            .all(|(u, v)| u.is_prefix_of(v)))
    }

    /// Componentwise characteristic transient; the result is minimal.
    pub fn characteristic_vector(&self) -> Result<TransientVector> {
        let components = self
            .components
            .iter()
            .map(Transient::characteristic)
            .collect::<Result<Vec<_>>>()?;
        Ok(TransientVector { components })
    }

    /// True when every component has length 2 or 3.
    pub fn is_minimal(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.delta() == 1 || c.delta() == 2)
    }
}

pub(crate) fn bits_to_vertex(bits: &[bool]) -> usize {
    bits.iter().fold(0, |v, &b| (v << 1) | usize::from(b))
}

pub(crate) fn vertex_bit(vertex: usize, coord: usize, arity: usize) -> bool {
    (vertex >> (arity - 1 - coord)) & 1 == 1
}

impl fmt::Display for TransientVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for TransientVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let components = s
            .split(',')
            .map(|part| part.trim().parse::<Transient>())
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::InvalidVector {
                literal: s.to_string(),
                reason: e.to_string(),
            })?;
        TransientVector::new(components).map_err(|_| Error::InvalidVector {
            literal: s.to_string(),
            reason: "a vector needs at least one component".into(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Transient {
        s.parse().unwrap()
    }

    fn v(s: &str) -> TransientVector {
        s.parse().unwrap()
    }

    #[test]
    fn contract_examples() {
        let bits: Vec<bool> = "001000".chars().map(|c| c == '1').collect();
        assert_eq!(Transient::contract(&bits).unwrap(), t("010"));
        assert_eq!(Transient::contract(&[false]).unwrap(), t("0"));
        let bits: Vec<bool> = "0101".chars().map(|c| c == '1').collect();
        assert_eq!(Transient::contract(&bits).unwrap(), t("0101"));
        assert!(Transient::contract(&[]).is_err());
    }

    #[test]
    fn circ_examples() {
        assert_eq!(t("0").circ(&t("0")), t("0"));
        assert_eq!(t("01").circ(&t("10")), t("010"));
        assert_eq!(t("01").circ(&t("01")), t("0101"));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(t("0101").complemented(), t("1010"));
        assert_eq!(t("0").complemented(), t("1"));
        assert_eq!(t("10").complemented(), t("01"));
    }

    #[test]
    fn endpoints_and_counts() {
        let x = t("0101");
        assert!(!x.alpha());
        assert!(x.omega());
        assert_eq!(x.delta(), 3);
        assert_eq!(x.len(), 4);
        assert_eq!(x.zeros(), 2);
        assert_eq!(x.units(), 2);
        // if start = 0 then z = ceil(l/2)
        assert_eq!(t("010").zeros(), 2);
        assert_eq!(t("101").units(), 2);
    }

    #[test]
    fn successors_of_vectors() {
        assert_eq!(v("01").successors(), vec![v("010")]);
        assert_eq!(v("0,1").successors(), vec![v("01,1"), v("0,10")]);
        assert_eq!(
            v("010,10").successors(),
            vec![v("0101,10"), v("010,101")]
        );
    }

    #[test]
    fn prefix_examples() {
        assert!(v("01,1").is_prefix_of(&v("010,1010")).unwrap());
        assert!(!v("10,1").is_prefix_of(&v("010,1010")).unwrap());
        let x = v("010,1010");
        assert!(x.is_prefix_of(&x).unwrap());
        assert!(v("01").is_prefix_of(&v("0,1")).is_err());
    }

    #[test]
    fn angle_form_round_trip() {
        assert_eq!(t("<0;3>"), t("0101"));
        assert_eq!(t("<1;0>"), t("1"));
        assert_eq!(format!("{}", t("<0;5>")), "010101");
        assert!("<2;1>".parse::<Transient>().is_err());
    }

    #[test]
    fn letter_form_rejects_non_alternating() {
        assert!("0110".parse::<Transient>().is_err());
        assert!("".parse::<Transient>().is_err());
        assert!("01a".parse::<Transient>().is_err());
    }

    #[test]
    fn vector_counts() {
        let x = v("010,1010");
        assert_eq!(x.len(), 7);
        assert_eq!(x.delta(), 5);
        assert_eq!(x.alpha(), vec![false, true]);
        assert_eq!(x.omega(), vec![false, false]);
        assert!(x.is_proper());
        assert!(!v("0,10").is_proper());
    }

    #[test]
    fn characteristic_examples() {
        assert_eq!(t("0101").characteristic().unwrap(), t("01"));
        assert_eq!(t("01010").characteristic().unwrap(), t("010"));
        assert_eq!(t("10").characteristic().unwrap(), t("10"));
        assert!(t("0").characteristic().is_err());
    }

    #[test]
    fn from_angle_matches_vertex_encoding() {
        let x = TransientVector::from_angle(2, &[1, 1, 1]).unwrap();
        assert_eq!(x, v("01,10,01"));
        assert_eq!(x.alpha_vertex(), 2);
    }
}
