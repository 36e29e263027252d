//! Integer partitions, skew shapes, and the dominance order.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers,
//! stored without trailing zeros. A [`SkewShape`] is a pair of nested
//! partitions; its boxes are addressed in matrix coordinates, row 1 at
//! the top and column 1 at the left. Dominance is compared through
//! prefix sums and is defined for partitions of any weights.

use std::fmt;
use std::str::FromStr;

use crate::Error;

/// A weakly decreasing sequence of positive integers.
///
/// The derived `Ord` is lexicographic on the part lists and is only a
/// tie-breaking device; the mathematically meaningful comparison is
/// [`dominance_leq`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition. Trailing zeros are stripped; an interior zero
    /// or an increase anywhere is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition);
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part at zero-based index `i`; indices past the last part give 0.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of all parts.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Conjugate partition: part `j` of the transpose counts the parts of
    /// `self` that are at least `j+1`.
    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|j| self.0.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition(parts)
    }

    /// Containment of Young diagrams, comparing parts with zero padding.
    pub fn contains(&self, inner: &Partition) -> bool {
        (0..inner.len()).all(|i| inner.part(i) <= self.part(i))
    }

    /// All partitions of weight `n`, in decreasing lexicographic order.
    pub fn all_of_weight(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        fn rec(prefix: &mut Vec<usize>, max: usize, rem: usize, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=max.min(rem)).rev() {
                prefix.push(p);
                rec(prefix, p, rem - p, out);
                prefix.pop();
            }
        }
        rec(&mut prefix, n, n, &mut out);
        out
    }

    /// All partitions with at most `max_len` parts, each at most
    /// `max_part`, in depth-first order trying larger parts first. The
    /// empty partition comes first.
    pub fn all_in_box(max_len: usize, max_part: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        fn rec(prefix: &mut Vec<usize>, max: usize, rows_left: usize, out: &mut Vec<Partition>) {
            out.push(Partition(prefix.clone()));
            if rows_left == 0 || max == 0 {
                return;
            }
            for p in (1..=max).rev() {
                prefix.push(p);
                rec(prefix, p, rows_left - 1, out);
                prefix.pop();
            }
        }
        rec(&mut prefix, max_part, max_len, &mut out);
        out
    }
}

/// `a <= b` in dominance order: every prefix sum of `a` is at most the
/// corresponding prefix sum of `b`. Total in the sense that it accepts
/// partitions of different weights; it is a partial order, so both
/// directions may fail.
pub fn dominance_leq(a: &Partition, b: &Partition) -> bool {
    let rows = a.len().max(b.len());
    let mut sa = 0usize;
    let mut sb = 0usize;
    for i in 0..rows {
        sa += a.part(i);
        sb += b.part(i);
        if sa > sb {
            return false;
        }
    }
    true
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let s = self
            .0
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{s}")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses a comma-separated part list such as `4,3,3,2,1`. The empty
    /// string and `0` denote the empty partition.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Error::PartitionParse(s.to_string()))?;
        Partition::new(parts).map_err(|_| Error::PartitionParse(s.to_string()))
    }
}

/// How a skew shape meets rows and columns.
///
/// `Vertical` means no row holds two boxes, `Horizontal` means no column
/// does, `Rook` means both at once, and `None` means neither.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StripKind {
    None,
    Horizontal,
    Vertical,
    Rook,
}

impl StripKind {
    pub fn is_strip(self) -> bool {
        self != StripKind::None
    }

    pub fn is_rook(self) -> bool {
        self == StripKind::Rook
    }
}

/// The boxes of an outer partition that are not boxes of a nested inner
/// partition.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, Error> {
        if !outer.contains(&inner) {
            return Err(Error::NotNested);
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of rows of the outer partition.
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Number of columns of the outer partition.
    pub fn width(&self) -> usize {
        self.outer.part(0)
    }

    pub fn box_count(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    /// Column span of the skew boxes in one-based row `r`, as an
    /// inclusive one-based range `lo..=hi`; empty when `lo > hi`.
    pub fn row_span(&self, r: usize) -> (usize, usize) {
        (self.inner.part(r - 1) + 1, self.outer.part(r - 1))
    }

    pub fn row_len(&self, r: usize) -> usize {
        self.outer.part(r - 1) - self.inner.part(r - 1)
    }

    pub fn has_box(&self, r: usize, c: usize) -> bool {
        r >= 1 && r <= self.rows() && c > self.inner.part(r - 1) && c <= self.outer.part(r - 1)
    }

    /// All boxes in row-major order, as one-based `(row, col)` pairs.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.box_count());
        for r in 1..=self.rows() {
            let (lo, hi) = self.row_span(r);
            for c in lo..=hi {
                out.push((r, c));
            }
        }
        out
    }

    /// One-based rows holding a box in column `c`, top to bottom. The
    /// rows of a column are always contiguous.
    pub fn rows_in_col(&self, c: usize) -> Vec<usize> {
        (1..=self.rows()).filter(|&r| self.has_box(r, c)).collect()
    }

    pub fn col_len(&self, c: usize) -> usize {
        (1..=self.rows()).filter(|&r| self.has_box(r, c)).count()
    }

    /// Columns holding at least one box, ascending.
    pub fn occupied_cols(&self) -> Vec<usize> {
        (1..=self.width())
            .filter(|&c| self.col_len(c) > 0)
            .collect()
    }

    pub fn transpose(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.transpose(),
            inner: self.inner.transpose(),
        }
    }

    /// Classifies the shape. Vertical strips have at most one box per
    /// row, horizontal strips at most one per column, rook strips both.
    pub fn strip_kind(&self) -> StripKind {
        let vertical = (0..self.outer.len()).all(|i| self.outer.part(i) <= self.inner.part(i) + 1);
        let horizontal = (0..self.outer.len())
            .all(|i| i + 1 >= self.outer.len() || self.inner.part(i) >= self.outer.part(i + 1));
        match (vertical, horizontal) {
            (true, true) => StripKind::Rook,
            (true, false) => StripKind::Vertical,
            (false, true) => StripKind::Horizontal,
            (false, false) => StripKind::None,
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}/{:?}", self.outer, self.inner)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Independent transpose oracle: fill the Young diagram as a grid and
    /// count boxes per column.
    fn transpose_oracle(a: &Partition) -> Partition {
        let width = a.part(0);
        let mut cols = vec![0usize; width];
        for i in 0..a.len() {
            for c in cols[..a.part(i)].iter_mut() {
                *c += 1;
            }
        }
        Partition::new(cols).unwrap()
    }

    /// Independent strip oracle: materialize the skew boxes in a grid and
    /// count per row and per column.
    fn strip_oracle(outer: &Partition, inner: &Partition) -> StripKind {
        let rows = outer.len();
        let width = outer.part(0);
        let mut row_counts = vec![0usize; rows];
        let mut col_counts = vec![0usize; width];
        for (r, count) in row_counts.iter_mut().enumerate() {
            let (lo, hi) = (inner.part(r), outer.part(r));
            *count = hi - lo;
            for c in col_counts[lo..hi].iter_mut() {
                *c += 1;
            }
        }
        let vertical = row_counts.iter().all(|&k| k <= 1);
        let horizontal = col_counts.iter().all(|&k| k <= 1);
        match (vertical, horizontal) {
            (true, true) => StripKind::Rook,
            (true, false) => StripKind::Vertical,
            (false, true) => StripKind::Horizontal,
            (false, false) => StripKind::None,
        }
    }

    #[test]
    fn construction_strips_trailing_zeros_and_rejects_bad_input() {
        assert_eq!(Partition::new(vec![3, 2, 0]).unwrap(), p(&[3, 2]));
        assert_eq!(Partition::new(vec![]).unwrap(), Partition::empty());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![3, 0, 1]).is_err());
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0", "4,3,3,2,1", "1", "8,8,8"] {
            let a: Partition = s.parse().unwrap();
            assert_eq!(a.to_string(), s);
        }
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(" 3, 2 ,1 ".parse::<Partition>().unwrap(), p(&[3, 2, 1]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("4,x".parse::<Partition>().is_err());
        assert!("-1".parse::<Partition>().is_err());
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[4, 2]).transpose(), p(&[2, 2, 1, 1]));
        assert_eq!(p(&[3, 2, 1]).transpose(), p(&[3, 2, 1]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p(&[5]).transpose(), p(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn transpose_matches_grid_oracle_and_is_an_involution() {
        for a in Partition::all_in_box(6, 6) {
            assert_eq!(a.transpose(), transpose_oracle(&a), "transpose of {a}");
            assert_eq!(a.transpose().transpose(), a, "involution at {a}");
        }
        for n in 0..=10 {
            for a in Partition::all_of_weight(n) {
                assert_eq!(a.transpose().transpose(), a);
                assert_eq!(a.transpose().weight(), a.weight());
            }
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[2, 2, 1]), &p(&[3, 2])));
        assert!(!dominance_leq(&p(&[3, 2]), &p(&[2, 2, 1])));
        assert!(dominance_leq(&p(&[1, 1, 1]), &p(&[3])));
        assert!(!dominance_leq(&p(&[2, 2]), &p(&[3])));
        assert!(dominance_leq(&Partition::empty(), &p(&[1])));
        assert!(!dominance_leq(&p(&[1]), &Partition::empty()));
    }

    #[test]
    fn dominance_is_a_partial_order() {
        let mut universe = Vec::new();
        for n in 0..=6 {
            universe.extend(Partition::all_of_weight(n));
        }
        for a in &universe {
            assert!(dominance_leq(a, a), "reflexivity at {a}");
        }
        for a in &universe {
            for b in &universe {
                if dominance_leq(a, b) && dominance_leq(b, a) {
                    assert_eq!(a, b, "antisymmetry at {a}, {b}");
                }
                for c in &universe {
                    if dominance_leq(a, b) && dominance_leq(b, c) {
                        assert!(dominance_leq(a, c), "transitivity at {a}, {b}, {c}");
                    }
                }
            }
        }
    }

    #[test]
    fn transpose_reverses_dominance_at_equal_weight() {
        for n in 0..=8 {
            let all = Partition::all_of_weight(n);
            for a in &all {
                for b in &all {
                    assert_eq!(
                        dominance_leq(a, b),
                        dominance_leq(&b.transpose(), &a.transpose()),
                        "duality at {a}, {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn containment_examples() {
        assert!(p(&[4, 3, 3, 2, 1]).contains(&p(&[3, 2, 2, 1])));
        assert!(!p(&[3, 2]).contains(&p(&[2, 2, 1])));
        assert!(p(&[1]).contains(&Partition::empty()));
        assert!(p(&[3, 3]).contains(&p(&[3, 3])));
    }

    #[test]
    fn strip_kind_examples() {
        let kind = |b: &[usize], g: &[usize]| SkewShape::new(p(b), p(g)).unwrap().strip_kind();
        assert_eq!(kind(&[4, 3, 3, 2, 1], &[3, 2, 2, 1]), StripKind::Vertical);
        assert_eq!(kind(&[6, 5, 4, 3, 2, 1], &[5, 4, 3, 2, 1]), StripKind::Rook);
        assert_eq!(kind(&[4, 3, 2, 2, 1], &[3, 2, 1, 1]), StripKind::Vertical);
        assert_eq!(kind(&[5, 4, 3, 1], &[4, 3, 1]), StripKind::Horizontal);
        assert_eq!(kind(&[2, 2], &[]), StripKind::None);
        assert_eq!(kind(&[3, 3], &[3, 3]), StripKind::Rook);
    }

    #[test]
    fn strip_kind_matches_grid_oracle() {
        let all = Partition::all_in_box(5, 5);
        for outer in &all {
            for inner in &all {
                if !outer.contains(inner) {
                    continue;
                }
                let shape = SkewShape::new(outer.clone(), inner.clone()).unwrap();
                assert_eq!(
                    shape.strip_kind(),
                    strip_oracle(outer, inner),
                    "strip kind of {outer} / {inner}"
                );
                assert_eq!(
                    shape.transpose().strip_kind(),
                    match shape.strip_kind() {
                        StripKind::Horizontal => StripKind::Vertical,
                        StripKind::Vertical => StripKind::Horizontal,
                        k => k,
                    },
                    "transpose swaps strip kinds at {outer} / {inner}"
                );
            }
        }
    }

    #[test]
    fn skew_shape_geometry() {
        let shape = SkewShape::new(p(&[4, 3, 3, 2, 1]), p(&[3, 2, 2, 1])).unwrap();
        assert_eq!(shape.box_count(), 5);
        assert_eq!(shape.boxes(), vec![(1, 4), (2, 3), (3, 3), (4, 2), (5, 1)]);
        assert_eq!(shape.rows_in_col(3), vec![2, 3]);
        assert_eq!(shape.occupied_cols(), vec![1, 2, 3, 4]);
        assert_eq!(shape.row_span(1), (4, 4));
        assert!(shape.has_box(3, 3));
        assert!(!shape.has_box(1, 3));
        assert!(SkewShape::new(p(&[2]), p(&[3])).is_err());
    }

    #[test]
    fn enumeration_helpers_are_consistent() {
        assert_eq!(Partition::all_of_weight(0).len(), 1);
        assert_eq!(Partition::all_of_weight(5).len(), 7);
        assert_eq!(Partition::all_of_weight(8).len(), 22);
        let boxed = Partition::all_in_box(8, 8);
        assert_eq!(boxed.len(), 12870);
        assert!(boxed.iter().all(|a| a.len() <= 8 && a.part(0) <= 8));
        let mut dedup = boxed.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), boxed.len());
    }
}
