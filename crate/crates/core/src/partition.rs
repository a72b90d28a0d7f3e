//! Partitions and the shape-growth operation `λ[m]` driven by letters.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableau::{Alphabet, Letter};
#[cfg(test)]
use crate::tableau::LieType;

/// A weakly decreasing sequence of positive integers. Trailing zeros are dropped.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Whether the Young diagram of `other` fits inside this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().enumerate().all(|(i, &p)| p <= self.part(i))
    }

    /// Parse a comma separated list such as `3,2,1`. The empty string is the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("cannot parse {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    /// All partitions of `size` with at most `max_len` parts, in reverse lexicographic order.
    pub fn of_size(size: usize, max_len: usize) -> Vec<Partition> {
        fn rec(rest: usize, max_part: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=rest.min(max_part)).rev() {
                cur.push(p);
                rec(rest - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, size, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with at most `max_len` parts and at most `max_size` boxes.
    pub fn up_to_size(max_size: usize, max_len: usize) -> Vec<Partition> {
        (0..=max_size).flat_map(|s| Partition::of_size(s, max_len)).collect()
    }

    /// Partitions contained in this one.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(outer: &Partition, i: usize, bound: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::new(cur.clone()).expect("weakly decreasing by construction"));
                return;
            }
            for p in 0..=bound.min(outer.part(i)) {
                cur.push(p);
                rec(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(self, 0, self.part(0), &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Result of growing a shape by a letter. `Invalid` is absorbing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ShapeStep {
    Valid(Partition),
    Invalid,
}

impl ShapeStep {
    pub fn partition(&self) -> Option<&Partition> {
        match self {
            ShapeStep::Valid(p) => Some(p),
            ShapeStep::Invalid => None,
        }
    }
}

/// Grows shapes one letter at a time on a fixed-length row vector.
///
/// Rows may temporarily be non-partition sequences; `valid` turns false as soon as
/// the sequence stops being a partition and stays false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ShapeCursor {
    pub rows: Vec<i64>,
    pub valid: bool,
}

impl ShapeCursor {
    pub fn new(start: &Partition, rank: usize) -> Self {
        let mut rows = vec![0i64; rank.max(start.len())];
        for (i, &p) in start.parts().iter().enumerate() {
            rows[i] = p as i64;
        }
        ShapeCursor { rows, valid: start.len() <= rank }
    }

    /// Apply one letter; returns whether the result is still a partition.
    pub fn push(&mut self, m: Letter) -> bool {
        if !self.valid {
            return false;
        }
        let v = m.value();
        if v == 0 {
            // Zero keeps the shape only when the last row of the rank-n box is occupied.
            let last = *self.rows.last().unwrap_or(&0);
            if last <= 0 {
                self.valid = false;
            }
            return self.valid;
        }
        let i = v.unsigned_abs() as usize - 1;
        if i >= self.rows.len() {
            self.valid = false;
            return false;
        }
        if v > 0 {
            self.rows[i] += 1;
            if i > 0 && self.rows[i] > self.rows[i - 1] {
                self.valid = false;
            }
        } else {
            self.rows[i] -= 1;
            if self.rows[i] < 0 || (i + 1 < self.rows.len() && self.rows[i] < self.rows[i + 1]) {
                self.valid = false;
            }
        }
        self.valid
    }

    pub fn partition(&self) -> Option<Partition> {
        if !self.valid {
            return None;
        }
        Partition::new(self.rows.iter().map(|&r| r as usize).collect()).ok()
    }
}

/// `λ[m]`: add a box to row `i` for letter `i`, remove one for `ī`.
/// For the type B zero, the shape is unchanged if `λ_n > 0` and invalid otherwise.
pub fn apply_letter(shape: &ShapeStep, m: Letter, alphabet: &Alphabet) -> Result<ShapeStep> {
    alphabet.check_letter(m)?;
    let ShapeStep::Valid(lambda) = shape else {
        return Ok(ShapeStep::Invalid);
    };
    if lambda.len() > alphabet.rank() {
        return Ok(ShapeStep::Invalid);
    }
    let mut cur = ShapeCursor::new(lambda, alphabet.rank());
    cur.push(m);
    Ok(cur.partition().map_or(ShapeStep::Invalid, ShapeStep::Valid))
}

/// Fold `apply_letter` over a word.
pub fn apply_word(lambda: &Partition, word: &[Letter], alphabet: &Alphabet) -> Result<ShapeStep> {
    let mut cur = ShapeCursor::new(lambda, alphabet.rank());
    for &m in word {
        alphabet.check_letter(m)?;
        cur.push(m);
    }
    Ok(cur.partition().map_or(ShapeStep::Invalid, ShapeStep::Valid))
}

/// A word is smooth on `λ` when every prefix yields a partition.
pub fn is_smooth(lambda: &Partition, word: &[Letter], alphabet: &Alphabet) -> Result<bool> {
    Ok(matches!(apply_word(lambda, word, alphabet)?, ShapeStep::Valid(_)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn trailing_zeros_dropped() {
        assert_eq!(p(&[2, 1, 0, 0]).parts(), &[2, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn growth_examples() {
        let c4 = Alphabet::new(LieType::C, 4).unwrap();
        let s = ShapeStep::Valid(p(&[2, 1]));
        assert_eq!(apply_letter(&s, Letter::new(2), &c4).unwrap(), ShapeStep::Valid(p(&[2, 2])));
        assert_eq!(apply_letter(&s, Letter::new(-1), &c4).unwrap(), ShapeStep::Valid(p(&[1, 1])));
        assert_eq!(apply_letter(&s, Letter::new(-2), &c4).unwrap(), ShapeStep::Valid(p(&[2])));
        assert_eq!(apply_letter(&s, Letter::new(3), &c4).unwrap(), ShapeStep::Valid(p(&[2, 1, 1])));
        assert_eq!(apply_letter(&s, Letter::new(-3), &c4).unwrap(), ShapeStep::Invalid);
        assert_eq!(apply_letter(&ShapeStep::Invalid, Letter::new(1), &c4).unwrap(), ShapeStep::Invalid);
        let b2 = Alphabet::new(LieType::B, 2).unwrap();
        let s = ShapeStep::Valid(p(&[1, 1]));
        assert_eq!(apply_letter(&s, Letter::ZERO, &b2).unwrap(), s);
        let s = ShapeStep::Valid(p(&[1]));
        assert_eq!(apply_letter(&s, Letter::ZERO, &b2).unwrap(), ShapeStep::Invalid);
    }

    #[test]
    fn zero_rejected_outside_type_b() {
        let c2 = Alphabet::new(LieType::C, 2).unwrap();
        assert!(apply_letter(&ShapeStep::Valid(p(&[1])), Letter::ZERO, &c2).is_err());
    }

    #[test]
    fn transpose_and_enumeration() {
        assert_eq!(p(&[3, 2, 1, 1]).transpose(), p(&[4, 2, 1]));
        assert_eq!(Partition::of_size(4, 4).len(), 5);
        assert_eq!(Partition::of_size(4, 2).len(), 3);
        assert_eq!(p(&[2, 1]).subpartitions().len(), 5);
    }

    #[test]
    fn parse_round_trip() {
        assert_eq!(Partition::parse("3,2,1").unwrap(), p(&[3, 2, 1]));
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert!(Partition::parse("1,x").is_err());
        assert_eq!(p(&[3, 1]).to_string(), "(3,1)");
    }
}
