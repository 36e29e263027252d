//! Permutations, the Bruhat order, and standardization of fillings.
//!
//! Permutations are stored in one-line notation over `{1, ..., n}`.
//! Simple transpositions act in two ways: `swap_values` multiplies on
//! the left (exchanging the values `i` and `i+1` wherever they sit),
//! while words of simple transpositions multiply out left to right,
//! which amounts to folding position swaps over the identity.
//!
//! Standardization turns an LR filling of a rook strip into a
//! permutation: reverse the column word, then relabel the entries
//! equal to `u` by consecutive integers from the `u`-th block of the
//! content, in order of appearance. The map reverses order: dominance
//! on fillings corresponds to the opposite Bruhat order on images.
//!
//! `cover_step` lifts a strict Bruhat relation `x < z` to a cover
//! `x < y <= z` by scanning a reduced word of `z` for the split point
//! that keeps the largest possible prefix of the word inside a reduced
//! expression of `x`.

use std::fmt;
use std::str::FromStr;

use crate::partitions::{Partition, StripKind};
use crate::tableaux::{dominance_violation, Chain, LrFilling, MoveRecord, TableauType};
use crate::Error;

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    pub fn from_one_line(values: Vec<usize>) -> Result<Self, Error> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation);
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    /// The simple transposition exchanging `i` and `i+1`, as an element
    /// of the symmetric group on `n` letters.
    pub fn simple(n: usize, i: usize) -> Result<Self, Error> {
        if i == 0 || i + 1 > n {
            return Err(Error::LetterOutOfRange { letter: i, size: n });
        }
        let mut values: Vec<usize> = (1..=n).collect();
        values.swap(i - 1, i);
        Ok(Permutation { values })
    }

    pub fn size(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// The image of `k`, one-based.
    pub fn value(&self, k: usize) -> usize {
        self.values[k - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut values = vec![0usize; self.values.len()];
        for (i, &v) in self.values.iter().enumerate() {
            values[v - 1] = i + 1;
        }
        Permutation { values }
    }

    /// Functional composition: `(self.compose(g))(k) = self(g(k))`.
    pub fn compose(&self, g: &Permutation) -> Result<Self, Error> {
        if self.size() != g.size() {
            return Err(Error::SizeMismatch(self.size(), g.size()));
        }
        let values = g.values.iter().map(|&k| self.values[k - 1]).collect();
        Ok(Permutation { values })
    }

    /// Left multiplication by the transposition of the values `a`, `b`.
    pub fn swap_values(&self, a: usize, b: usize) -> Self {
        let mut values = self.values.clone();
        for v in values.iter_mut() {
            if *v == a {
                *v = b;
            } else if *v == b {
                *v = a;
            }
        }
        Permutation { values }
    }

    /// Right multiplication by the simple transposition at position `i`.
    pub fn swap_positions(&self, i: usize) -> Self {
        let mut values = self.values.clone();
        values.swap(i - 1, i);
        Permutation { values }
    }

    /// Product of the word of simple transpositions, multiplied out left
    /// to right.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self, Error> {
        let mut cur = Permutation::identity(n);
        for &i in word {
            if i == 0 || i + 1 > n {
                return Err(Error::LetterOutOfRange { letter: i, size: n });
            }
            cur = cur.swap_positions(i);
        }
        Ok(cur)
    }

    /// The number of inversions.
    pub fn length(&self) -> usize {
        let n = self.values.len();
        let mut count = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if self.values[i] > self.values[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Inversions as value pairs `(a, b)` with `a < b` and `a` standing
    /// to the right of `b`.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let inv = self.inverse();
        let n = self.size();
        let mut out = Vec::new();
        for a in 1..=n {
            for b in (a + 1)..=n {
                if inv.value(a) > inv.value(b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// All permutations of `{1, ..., n}` in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut used = vec![false; n + 1];
        let mut cur = Vec::with_capacity(n);
        fn rec(n: usize, used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation {
                    values: cur.clone(),
                });
                return;
            }
            for v in 1..=n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(n, used, cur, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut used, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .values
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{body}")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let values = body
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPermutation)?;
        Permutation::from_one_line(values)
    }
}

/// `x <= z` in the Bruhat order: for every prefix length, the sorted
/// initial values of `x` are componentwise at most those of `z`.
pub fn bruhat_leq(x: &Permutation, z: &Permutation) -> Result<bool, Error> {
    if x.size() != z.size() {
        return Err(Error::SizeMismatch(x.size(), z.size()));
    }
    let n = x.size();
    let mut cx = vec![0usize; n + 1];
    let mut cz = vec![0usize; n + 1];
    for k in 0..n {
        for c in cx[x.values[k]..].iter_mut() {
            *c += 1;
        }
        for c in cz[z.values[k]..].iter_mut() {
            *c += 1;
        }
        if (1..n).any(|v| cx[v] < cz[v]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `word` is a reduced expression with product `z`.
pub fn is_reduced_word_for(word: &[usize], z: &Permutation) -> Result<bool, Error> {
    let product = Permutation::from_word(z.size(), word)?;
    Ok(product == *z && word.len() == z.length())
}

/// The reduced word produced by left bubble sort: walk the positions
/// from `n` down to `2`, each time raising the value found there to
/// match its position by successive exchanges of consecutive values.
/// Concatenating the emitted runs spells `z` as a product of simple
/// transpositions.
pub fn bubble_reduced_word(z: &Permutation) -> Vec<usize> {
    let mut cur = z.clone();
    let mut word = Vec::new();
    for pos in (2..=cur.size()).rev() {
        let u = cur.value(pos);
        for i in u..pos {
            word.push(i);
            cur = cur.swap_values(i, i + 1);
        }
    }
    debug_assert!(cur.is_identity());
    debug_assert_eq!(word.len(), z.length());
    word
}

fn block_of(alpha: &Partition, value: usize) -> usize {
    let mut acc = 0;
    for u in 1..=alpha.len() {
        acc += alpha.part(u - 1);
        if value <= acc {
            return u;
        }
    }
    unreachable!("value exceeds the weight of the content")
}

/// The standardization of a rook-strip filling: reverse the column
/// word, then replace the entries equal to `u`, in order of appearance,
/// by the consecutive integers forming the `u`-th block of the content.
pub fn standardization(f: &LrFilling) -> Result<Permutation, Error> {
    if f.shape().strip_kind() != StripKind::Rook {
        return Err(Error::NotARookStrip);
    }
    let alpha = f.content();
    let mut next = vec![1usize; alpha.len() + 1];
    let mut acc = 1;
    for (slot, part) in next[1..].iter_mut().zip(alpha.parts()) {
        *slot = acc;
        acc += part;
    }
    let mut word = f.column_word();
    word.reverse();
    let values = word
        .iter()
        .map(|&u| {
            let v = next[u];
            next[u] += 1;
            v
        })
        .collect();
    Ok(Permutation { values })
}

/// Membership in the quotient attached to `alpha`: within each block of
/// consecutive values, the positions are increasing.
pub fn is_in_quotient(x: &Permutation, alpha: &Partition) -> Result<bool, Error> {
    Ok(recording_tableau(x, alpha)?
        .iter()
        .all(|row| row.windows(2).all(|w| w[0] < w[1])))
}

/// The recording tableau of `x` for the content `alpha`: row `i` lists
/// the positions at which the values of the `i`-th block occur.
pub fn recording_tableau(x: &Permutation, alpha: &Partition) -> Result<Vec<Vec<usize>>, Error> {
    if x.size() != alpha.weight() {
        return Err(Error::SizeMismatch(x.size(), alpha.weight()));
    }
    let inv = x.inverse();
    let mut rows = Vec::with_capacity(alpha.len());
    let mut v = 1;
    for i in 0..alpha.len() {
        rows.push((0..alpha.part(i)).map(|k| inv.value(v + k)).collect());
        v += alpha.part(i);
    }
    Ok(rows)
}

/// Whether `x` standardizes a filling with content `alpha`: the
/// recording tableau must increase along rows and down columns.
pub fn is_lattice(x: &Permutation, alpha: &Partition) -> Result<bool, Error> {
    let rows = recording_tableau(x, alpha)?;
    if rows.iter().any(|row| row.windows(2).any(|w| w[0] >= w[1])) {
        return Ok(false);
    }
    for pair in rows.windows(2) {
        if pair[1].iter().zip(pair[0].iter()).any(|(lo, hi)| hi >= lo) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Reverses standardization: box `k` in reading order receives the
/// index of the block containing `x(k)`. Requires a rook-strip type and
/// `x` in the quotient; fails if the resulting word is not a lattice
/// word.
pub fn filling_from_permutation(x: &Permutation, ty: &TableauType) -> Result<LrFilling, Error> {
    if ty.shape().strip_kind() != StripKind::Rook {
        return Err(Error::NotARookStrip);
    }
    if x.size() != ty.box_count() {
        return Err(Error::SizeMismatch(x.size(), ty.box_count()));
    }
    if !is_in_quotient(x, ty.alpha())? {
        return Err(Error::NotInQuotient);
    }
    let mut word: Vec<usize> = x.values.iter().map(|&v| block_of(ty.alpha(), v)).collect();
    word.reverse();
    LrFilling::from_word(ty, &word)
}

/// One lifting step: the cover `y` of `x` below `z`, together with the
/// transposition that produced it and the split position in the word.
#[derive(Clone, Debug)]
pub struct CoverStep {
    pub y: Permutation,
    pub t: (usize, usize),
    pub j1: usize,
}

/// Runs [`cover_step_with_word`] on the bubble reduced word of `z`.
pub fn cover_step(x: &Permutation, z: &Permutation) -> Result<CoverStep, Error> {
    cover_step_with_word(x, z, &bubble_reduced_word(z))
}

/// Given `x < z` and a reduced word for `z`, finds the largest split
/// position `j1` such that `x` factors as the full prefix before `j1`
/// times a reduced subword of the suffix after `j1`. Conjugating the
/// omitted letter by the prefix yields a transposition `t` with
/// `y = t x` a Bruhat cover of `x` below `z`. The postconditions are
/// asserted on every call.
pub fn cover_step_with_word(
    x: &Permutation,
    z: &Permutation,
    word: &[usize],
) -> Result<CoverStep, Error> {
    if x.size() != z.size() {
        return Err(Error::SizeMismatch(x.size(), z.size()));
    }
    if !is_reduced_word_for(word, z)? {
        return Err(Error::NotReducedWordFor);
    }
    if x == z || !bruhat_leq(x, z)? {
        return Err(Error::NotBruhatBelow);
    }
    let n = x.size();
    let p = word.len();
    let mut suffixes = vec![Permutation::identity(n); p + 2];
    for j in (1..=p).rev() {
        suffixes[j] = Permutation::simple(n, word[j - 1])?.compose(&suffixes[j + 1])?;
    }
    let mut prefixes = Vec::with_capacity(p + 1);
    prefixes.push(Permutation::identity(n));
    for j in 1..=p {
        prefixes.push(prefixes[j - 1].swap_positions(word[j - 1]));
    }
    let lx = x.length();
    for j in (1..=p).rev() {
        if j - 1 > lx {
            continue;
        }
        let w = prefixes[j - 1].inverse().compose(x)?;
        if w.length() != lx - (j - 1) {
            continue;
        }
        if !bruhat_leq(&w, &suffixes[j + 1])? {
            continue;
        }
        let a = prefixes[j - 1].value(word[j - 1]);
        let b = prefixes[j - 1].value(word[j - 1] + 1);
        debug_assert!(a < b, "prefixes of a reduced word end in ascents");
        let y = x.swap_values(a, b);
        assert_eq!(
            y.length(),
            lx + 1,
            "cover step must raise the length by exactly one"
        );
        let below = bruhat_leq(&y, z)?;
        assert!(below, "cover step must stay weakly below the target");
        return Ok(CoverStep {
            y,
            t: (a, b),
            j1: j,
        });
    }
    unreachable!("some split position is feasible whenever x < z");
}

/// The chain from `x_fill` down to `z_fill` built through Bruhat
/// covers: standardize both, lift step by step along the bubble reduced
/// word of the lower image, and pull each cover back to a filling. Each
/// step performs one decreasing box move.
pub fn bruhat_chain(x_fill: &LrFilling, z_fill: &LrFilling) -> Result<Chain, Error> {
    if !x_fill.same_type(z_fill) {
        return Err(Error::TypeMismatch);
    }
    if x_fill.shape().strip_kind() != StripKind::Rook {
        return Err(Error::NotARookStrip);
    }
    if let Some((entry, col, z_count, x_count)) = dominance_violation(z_fill, x_fill)? {
        return Err(Error::NotDominated {
            entry,
            col,
            z_count,
            x_count,
        });
    }
    let ty = x_fill.ty();
    let z = standardization(z_fill)?;
    let word = bubble_reduced_word(&z);
    let mut fillings = vec![x_fill.clone()];
    let mut moves = Vec::new();
    let mut cur = standardization(x_fill)?;
    while cur != z {
        let step = cover_step_with_word(&cur, &z, &word)?;
        let next = filling_from_permutation(&step.y, &ty)?;
        let record = MoveRecord::between(fillings.last().unwrap(), &next)
            .expect("a Bruhat cover exchanges the entries of exactly two boxes");
        fillings.push(next);
        moves.push(record);
        cur = step.y;
    }
    Ok(Chain { fillings, moves })
}
