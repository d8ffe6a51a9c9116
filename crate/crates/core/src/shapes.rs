//! Partitions, compositions and skew shapes.
//!
//! Diagrams use French coordinates: row 1 is the bottom row and a cell is
//! addressed as `(row, col)`, both 1-based.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the parts are
    /// not weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts arbitrary non-negative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), reading missing parts as 0.
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// First part, or 0 for the empty partition.
    pub fn width(&self) -> usize {
        self.get(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.width();
        let parts = (1..=width).map(|j| self.0.iter().take_while(|&&p| p >= j).count()).collect();
        Partition(parts)
    }

    /// True iff every cell of `other` is a cell of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Cells in row-major order, bottom row first.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    /// Ordering by size, then reverse-lexicographically within a size.
    pub fn graded_cmp(&self, other: &Partition) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.0.cmp(&self.0))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3,2,1"`. The empty string and `"()"` give the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {:?} in {s:?}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {s:?}")));
        }
        Partition::new(parts).map_err(|_| Error::InvalidPartition(format!("{s:?} is not weakly decreasing")))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Partition::new(v).map_err(serde::de::Error::custom)
    }
}

/// Shorthand for building a partition in code and tests. Panics on bad input.
#[macro_export]
macro_rules! part {
    () => { $crate::shapes::Partition::empty() };
    ($($x:expr),+ $(,)?) => {
        $crate::shapes::Partition::new(vec![$($x),+]).expect("valid partition")
    };
}

/// A finite sequence of non-negative integers, compared modulo trailing zeros.
#[derive(Clone, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(entries: Vec<usize>) -> Self {
        Composition(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Entries with trailing zeros removed.
    pub fn trimmed(&self) -> &[usize] {
        let n = self.0.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1);
        &self.0[..n]
    }

    /// Entry `i` (0-based), 0 when missing.
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length after trailing-zero removal.
    pub fn len(&self) -> usize {
        self.trimmed().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The partition rearrangement of the entries.
    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }
}

impl PartialEq for Composition {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for Composition {}

impl Hash for Composition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state)
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(Composition::default());
        }
        s.split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|_| Error::InvalidPartition(format!("bad entry {:?}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()
            .map(Composition)
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition(p.0.clone())
    }
}

impl PartialEq<Partition> for Composition {
    fn eq(&self, other: &Partition) -> bool {
        self.trimmed() == other.parts()
    }
}

/// Cells of `outer` not in `inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained(format!("{inner:?} is not inside {outer:?}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    /// Column range `(first, last)` of row `row`; empty when `first > last`.
    pub fn row_span(&self, row: usize) -> (usize, usize) {
        (self.inner.get(row - 1) + 1, self.outer.get(row - 1))
    }

    pub fn num_cells(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains_cell(&self, (row, col): (usize, usize)) -> bool {
        row >= 1 && col > self.inner.get(row - 1) && col <= self.outer.get(row - 1)
    }

    /// Cells in row-major order, bottom row first.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.num_rows()).flat_map(move |r| {
            let (a, b) = self.row_span(r);
            (a..=b).map(move |c| (r, c))
        })
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "({})", self.outer)
        } else {
            write!(f, "({})/({})", self.outer, self.inner)
        }
    }
}

/// `μ*λ`: `λ` in the bottom-right block, `μ` in the top-left block, sharing
/// no rows or columns.
pub fn star(mu: &Partition, lambda: &Partition) -> SkewShape {
    let shift = mu.width();
    let mut outer: Vec<usize> = lambda.parts().iter().map(|&p| p + shift).collect();
    outer.extend_from_slice(mu.parts());
    let inner = vec![shift; lambda.len()];
    SkewShape {
        outer: Partition::new(outer).expect("star of partitions is a partition"),
        inner: Partition::new(inner).expect("constant sequence"),
    }
}

/// Componentwise `ν − λ`.
pub fn subtract(nu: &Partition, lambda: &Partition) -> Result<Composition> {
    let n = nu.len().max(lambda.len());
    (0..n)
        .map(|i| {
            nu.get(i)
                .checked_sub(lambda.get(i))
                .ok_or_else(|| Error::NotContained(format!("{lambda:?} is not inside {nu:?}")))
        })
        .collect::<Result<Vec<_>>>()
        .map(Composition)
}

/// All partitions of `n`, reverse-lexicographic.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size `0..=n`, ordered by size then reverse-lex.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// All partitions contained in `outer`, ordered by size then reverse-lex.
pub fn subpartitions(outer: &Partition) -> Vec<Partition> {
    partitions_up_to(outer.size()).into_iter().filter(|p| outer.contains(p)).collect()
}

/// Compositions of `n` with positive parts, lexicographic.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition(Vec::new())];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for rest in compositions_of(n - first) {
            let mut v = vec![first];
            v.extend(rest.0);
            out.push(Composition(v));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_counts() {
        assert_eq!(compositions_of(0).len(), 1);
        assert_eq!(compositions_of(4).len(), 8);
        assert_eq!(compositions_of(3)[1], Composition::new(vec![1, 2]));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(part![].conjugate(), part![]);
        assert_eq!(part![3, 1].conjugate(), part![2, 1, 1]);
        assert_eq!(part![7, 6, 4, 3, 2, 1].conjugate(), part![6, 5, 4, 3, 2, 2, 1]);
    }

    #[test]
    fn containment() {
        assert!(part![2, 2].contains(&part![2, 1]));
        assert!(!part![2, 2].contains(&part![3]));
        assert!(part![5, 3, 2, 2, 1].contains(&part![2, 2]));
    }

    #[test]
    fn star_examples() {
        let s = star(&part![2, 2, 1], &part![3, 1]);
        assert_eq!(s.outer, part![5, 3, 2, 2, 1]);
        assert_eq!(s.inner, part![2, 2]);
        assert_eq!(star(&part![], &part![4, 2]), SkewShape::straight(part![4, 2]));
        let s = star(&part![1], &part![1]);
        assert_eq!((s.outer, s.inner), (part![2, 1], part![1]));
    }

    #[test]
    fn subtract_examples() {
        assert_eq!(subtract(&part![2], &part![1]).unwrap(), Composition::new(vec![1]));
        assert_eq!(subtract(&part![2, 1], &part![1]).unwrap(), Composition::new(vec![1, 1]));
        assert!(subtract(&part![3, 1], &part![3, 1]).unwrap().is_empty());
        assert!(matches!(subtract(&part![1], &part![2]), Err(Error::NotContained(_))));
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(partitions_up_to(0), vec![part![]]);
        assert_eq!(partitions_up_to(2), vec![part![], part![1], part![2], part![1, 1]]);
        // brute force over weakly decreasing 6-tuples
        let mut brute = 0;
        for a in 0..=6usize {
            for b in 0..=a {
                for c in 0..=b {
                    for d in 0..=c {
                        for e in 0..=d {
                            for f in 0..=e {
                                if a + b + c + d + e + f == 6 {
                                    brute += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(brute, 11);
        assert_eq!(partitions_of(6).len(), 11);
    }

    #[test]
    fn parsing() {
        assert_eq!("3,2,2".parse::<Partition>().unwrap(), part![3, 2, 2]);
        assert_eq!("".parse::<Partition>().unwrap(), part![]);
        assert!("2,3".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn composition_equality_ignores_trailing_zeros() {
        assert_eq!(Composition::new(vec![1, 2, 0, 0]), Composition::new(vec![1, 2]));
        assert_ne!(Composition::new(vec![0, 1]), Composition::new(vec![1]));
    }

    #[test]
    fn skew_cells() {
        let s = SkewShape::new(part![3, 2], part![1]).unwrap();
        let cells: Vec<_> = s.cells().collect();
        assert_eq!(cells, vec![(1, 2), (1, 3), (2, 1), (2, 2)]);
        assert!(SkewShape::new(part![1], part![2]).is_err());
    }
}
