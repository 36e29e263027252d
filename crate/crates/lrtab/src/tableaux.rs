//! Littlewood-Richardson fillings of skew shapes.
//!
//! An LR filling places an entry in every box of a skew shape so that
//! rows increase weakly left to right, columns increase strictly top to
//! bottom, and the lattice condition holds: for every entry `u > 1` and
//! every column `c`, the columns strictly right of `c` hold at least as
//! many entries `u-1` as entries `u`. The multiset of entries of a valid
//! filling always forms a partition, its content.
//!
//! Three interchangeable presentations are supported. The entry grid is
//! primary. The partition sequence lists the regions covered by blanks
//! and entries up to `u`, for `u = 0..=s`. The column word reads the
//! columns left to right, each column bottom to top; it determines the
//! filling only when no column holds two boxes.
//!
//! Dominance compares partition sequences entrywise. Decreasing box
//! moves exchange two entries so that the smaller one ends strictly
//! lower, then restore sortedness; the order they generate is the box
//! order, implemented as reachability.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partitions::{dominance_leq, Partition, SkewShape};
use crate::Error;

/// A triple of partitions fixing content `alpha` and shape
/// `beta / gamma`, with `|beta| - |gamma| = |alpha|`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TableauType {
    alpha: Partition,
    beta: Partition,
    gamma: Partition,
}

impl TableauType {
    pub fn new(alpha: Partition, beta: Partition, gamma: Partition) -> Result<Self, Error> {
        if !beta.contains(&gamma) {
            return Err(Error::NotNested);
        }
        let boxes = beta.weight() - gamma.weight();
        if boxes != alpha.weight() {
            return Err(Error::WeightMismatch {
                boxes,
                weight: alpha.weight(),
            });
        }
        Ok(TableauType { alpha, beta, gamma })
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    pub fn gamma(&self) -> &Partition {
        &self.gamma
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape::new(self.beta.clone(), self.gamma.clone())
            .expect("type invariant guarantees nesting")
    }

    pub fn box_count(&self) -> usize {
        self.alpha.weight()
    }
}

impl fmt::Display for TableauType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "alpha=({}) beta=({}) gamma=({})",
            self.alpha, self.beta, self.gamma
        )
    }
}

/// Returns `Ok(true)` when the entry grid is a valid LR filling of the
/// shape. Structural problems, a wrong number of rows or entries or a
/// zero entry, are errors; a mere violation of the LR conditions is
/// `Ok(false)`.
pub fn is_lr_filling(shape: &SkewShape, rows: &[Vec<usize>]) -> Result<bool, Error> {
    check_arity(shape, rows)?;
    Ok(check_lr_conditions(shape, rows).is_ok())
}

fn check_arity(shape: &SkewShape, rows: &[Vec<usize>]) -> Result<(), Error> {
    if rows.len() != shape.rows() {
        return Err(Error::RowCountMismatch {
            got: rows.len(),
            want: shape.rows(),
        });
    }
    for r in 1..=shape.rows() {
        let want = shape.row_len(r);
        let got = rows[r - 1].len();
        if got != want {
            return Err(Error::RowArityMismatch { row: r, got, want });
        }
        if rows[r - 1].contains(&0) {
            return Err(Error::ZeroEntry);
        }
    }
    Ok(())
}

fn check_lr_conditions(shape: &SkewShape, rows: &[Vec<usize>]) -> Result<(), Error> {
    for row in rows {
        if row.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotLrFilling(
                "row entries must increase weakly left to right",
            ));
        }
    }
    let entry = |r: usize, c: usize| rows[r - 1][c - shape.inner().part(r - 1) - 1];
    for c in 1..=shape.width() {
        let mut prev = 0usize;
        let mut first = true;
        for r in 1..=shape.rows() {
            if !shape.has_box(r, c) {
                continue;
            }
            let v = entry(r, c);
            if !first && v <= prev {
                return Err(Error::NotLrFilling(
                    "column entries must increase strictly top to bottom",
                ));
            }
            prev = v;
            first = false;
        }
    }
    let s = rows.iter().flatten().copied().max().unwrap_or(0);
    let mut counts = vec![0usize; s + 1];
    for c in (1..=shape.width()).rev() {
        for r in 1..=shape.rows() {
            if shape.has_box(r, c) {
                counts[entry(r, c)] += 1;
            }
        }
        for u in 2..=s {
            if counts[u] > counts[u - 1] {
                return Err(Error::NotLrFilling(
                    "lattice condition fails right of some column",
                ));
            }
        }
    }
    Ok(())
}

/// An LR filling. Entries are stored per row, left to right, covering
/// exactly the skew boxes of the shape.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LrFilling {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
    content: Partition,
}

impl LrFilling {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self, Error> {
        check_arity(&shape, &rows)?;
        check_lr_conditions(&shape, &rows)?;
        Ok(Self::from_valid_parts(shape, rows))
    }

    /// Builds without validating the LR conditions. The caller must have
    /// established them; debug builds re-check.
    pub(crate) fn from_valid_parts(shape: SkewShape, rows: Vec<Vec<usize>>) -> Self {
        debug_assert!(check_arity(&shape, &rows).is_ok());
        debug_assert!(check_lr_conditions(&shape, &rows).is_ok());
        let s = rows.iter().flatten().copied().max().unwrap_or(0);
        let mut counts = vec![0usize; s];
        for &v in rows.iter().flatten() {
            counts[v - 1] += 1;
        }
        let content =
            Partition::new(counts).expect("the lattice condition makes the content a partition");
        LrFilling {
            shape,
            rows,
            content,
        }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn content(&self) -> &Partition {
        &self.content
    }

    pub fn max_entry(&self) -> usize {
        self.content.len()
    }

    pub fn box_count(&self) -> usize {
        self.shape.box_count()
    }

    pub fn ty(&self) -> TableauType {
        TableauType {
            alpha: self.content.clone(),
            beta: self.shape.outer().clone(),
            gamma: self.shape.inner().clone(),
        }
    }

    pub fn same_type(&self, other: &LrFilling) -> bool {
        self.shape == other.shape && self.content == other.content
    }

    /// Entry at one-based `(row, col)`, or `None` outside the skew boxes.
    pub fn entry(&self, r: usize, c: usize) -> Option<usize> {
        if !self.shape.has_box(r, c) {
            return None;
        }
        Some(self.rows[r - 1][c - self.shape.inner().part(r - 1) - 1])
    }

    /// Entries read row by row, top to bottom, each row left to right.
    pub fn row_reading(&self) -> Vec<usize> {
        self.rows.concat()
    }

    /// The column word: columns left to right, each bottom to top.
    pub fn column_word(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.box_count());
        for c in 1..=self.shape.width() {
            for r in (1..=self.shape.rows()).rev() {
                if let Some(v) = self.entry(r, c) {
                    out.push(v);
                }
            }
        }
        out
    }

    /// Builds the filling with column word `word`. Requires a shape in
    /// which no column holds two boxes, since only then does the word
    /// determine the placement.
    pub fn from_word(ty: &TableauType, word: &[usize]) -> Result<Self, Error> {
        let shape = ty.shape();
        if (1..=shape.width()).any(|c| shape.col_len(c) > 1) {
            return Err(Error::AmbiguousWord);
        }
        if word.len() != shape.box_count() {
            return Err(Error::WordLengthMismatch {
                got: word.len(),
                want: shape.box_count(),
            });
        }
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.rows()];
        let mut positions: Vec<(usize, usize)> = shape.boxes();
        positions.sort_by_key(|&(_, c)| c);
        for (&v, &(r, _)) in word.iter().zip(positions.iter()) {
            rows[r - 1].push(v);
        }
        let filling = LrFilling::new(shape, rows)?;
        if filling.content() != ty.alpha() {
            return Err(Error::WordContentMismatch {
                want: ty.alpha().to_string(),
            });
        }
        Ok(filling)
    }

    /// The partition sequence `gamma = gamma^0 <= ... <= gamma^s = beta`,
    /// where `gamma^u` covers the blanks and the entries at most `u`.
    pub fn partition_sequence(&self) -> Vec<Partition> {
        let s = self.max_entry();
        let mut seq = Vec::with_capacity(s + 1);
        for u in 0..=s {
            let parts = (0..self.shape.rows())
                .map(|i| {
                    self.shape.inner().part(i) + self.rows[i].iter().filter(|&&v| v <= u).count()
                })
                .collect::<Vec<_>>();
            seq.push(Partition::new(parts).expect("regions of an LR filling are partitions"));
        }
        seq
    }

    /// Rebuilds a filling from its partition sequence. The first term is
    /// the inner shape, the last the outer one.
    pub fn from_partition_sequence(seq: &[Partition]) -> Result<Self, Error> {
        if seq.is_empty() {
            return Err(Error::InvalidPartitionSequence);
        }
        if seq.windows(2).any(|w| !w[1].contains(&w[0])) {
            return Err(Error::InvalidPartitionSequence);
        }
        let inner = seq[0].clone();
        let outer = seq[seq.len() - 1].clone();
        let shape = SkewShape::new(outer, inner)?;
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.rows()];
        for u in 1..seq.len() {
            for i in 0..shape.rows() {
                for _ in seq[u - 1].part(i)..seq[u].part(i) {
                    rows[i].push(u);
                }
            }
        }
        LrFilling::new(shape, rows)
    }

    /// Count of entries at most `entry` in columns at most `col`.
    pub fn count_le(&self, entry: usize, col: usize) -> usize {
        let mut n = 0;
        for r in 1..=self.shape.rows() {
            let (lo, hi) = self.shape.row_span(r);
            for c in lo..=hi.min(col) {
                if self.rows[r - 1][c - lo] <= entry {
                    n += 1;
                }
            }
        }
        n
    }

    pub fn count_matrix(&self) -> CountMatrix {
        CountMatrix::of(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&FillingJson::from(self)).expect("serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self, Error> {
        let dto: FillingJson =
            serde_json::from_str(s).map_err(|e| Error::FillingParse(e.to_string()))?;
        dto.try_into()
    }
}

impl fmt::Debug for LrFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LrFilling[{:?} w={}]",
            self.shape,
            format_word(&self.column_word())
        )
    }
}

/// Serialized form of a filling: outer and inner shape plus the entries
/// of every row, left to right. Rows without skew boxes appear as empty
/// lists; the content is implied.
#[derive(Serialize, Deserialize)]
pub struct FillingJson {
    pub beta: Vec<usize>,
    pub gamma: Vec<usize>,
    pub rows: Vec<Vec<usize>>,
}

impl From<&LrFilling> for FillingJson {
    fn from(f: &LrFilling) -> Self {
        FillingJson {
            beta: f.shape.outer().parts().to_vec(),
            gamma: f.shape.inner().parts().to_vec(),
            rows: f.rows.clone(),
        }
    }
}

impl TryFrom<FillingJson> for LrFilling {
    type Error = Error;

    fn try_from(dto: FillingJson) -> Result<Self, Error> {
        let beta = Partition::new(dto.beta)?;
        let gamma = Partition::new(dto.gamma)?;
        let shape = SkewShape::new(beta, gamma)?;
        LrFilling::new(shape, dto.rows)
    }
}

/// Prefix counts of a column word, organized for dominance tests.
///
/// `raw(entry, col)` counts the entries at most `entry` in columns at
/// most `col`; both arguments may be 0, giving 0. `blanks(col)` counts
/// the inner-shape boxes in columns at most `col`.
pub struct CountMatrix {
    width: usize,
    max_entry: usize,
    raw: Vec<usize>,
    blanks: Vec<usize>,
}

impl CountMatrix {
    fn of(f: &LrFilling) -> Self {
        let width = f.shape().width();
        let s = f.max_entry();
        let mut raw = vec![0usize; (width + 1) * (s + 1)];
        for r in 1..=f.shape().rows() {
            let (lo, hi) = f.shape().row_span(r);
            for c in lo..=hi {
                let v = f.rows[r - 1][c - lo];
                raw[c * (s + 1) + v] += 1;
            }
        }
        for c in 1..=width {
            for u in 0..=s {
                let here = raw[c * (s + 1) + u];
                let left = raw[(c - 1) * (s + 1) + u];
                let below = if u > 0 { raw[c * (s + 1) + u - 1] } else { 0 };
                let left_below = if u > 0 {
                    raw[(c - 1) * (s + 1) + u - 1]
                } else {
                    0
                };
                raw[c * (s + 1) + u] = here + left + below - left_below;
            }
        }
        let gamma_t = f.shape().inner().transpose();
        let mut blanks = vec![0usize; width + 1];
        for c in 1..=width {
            blanks[c] = blanks[c - 1] + gamma_t.part(c - 1);
        }
        CountMatrix {
            width,
            max_entry: s,
            raw,
            blanks,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn max_entry(&self) -> usize {
        self.max_entry
    }

    pub fn raw(&self, entry: usize, col: usize) -> usize {
        let u = entry.min(self.max_entry);
        let c = col.min(self.width);
        self.raw[c * (self.max_entry + 1) + u]
    }

    pub fn blanks(&self, col: usize) -> usize {
        self.blanks[col.min(self.width)]
    }
}

/// `z <= x` in the dominance order on fillings of one type: every term
/// of the partition sequence of `z` is dominated by the matching term
/// for `x`.
pub fn dom_leq(z: &LrFilling, x: &LrFilling) -> Result<bool, Error> {
    if !z.same_type(x) {
        return Err(Error::TypeMismatch);
    }
    let zs = z.partition_sequence();
    let xs = x.partition_sequence();
    Ok(zs.iter().zip(xs.iter()).all(|(a, b)| dominance_leq(a, b)))
}

/// Dominance through column-word counts: `z <= x` exactly when `z` has
/// at least as many entries `<= u` among its first `c` columns as `x`,
/// for every `u` and `c`.
pub fn dom_leq_by_counts(z: &LrFilling, x: &LrFilling) -> Result<bool, Error> {
    Ok(dominance_violation(z, x)?.is_none())
}

/// First cell witnessing the failure of `z <= x`, scanning entries
/// outside in, or `None` when `z <= x` holds. The cell reports
/// `(entry, col, z_count, x_count)`.
pub fn dominance_violation(
    z: &LrFilling,
    x: &LrFilling,
) -> Result<Option<(usize, usize, usize, usize)>, Error> {
    if !z.same_type(x) {
        return Err(Error::TypeMismatch);
    }
    let zm = z.count_matrix();
    let xm = x.count_matrix();
    for u in 1..=z.max_entry() {
        for c in 1..=z.shape().width() {
            let (zc, xc) = (zm.raw(u, c), xm.raw(u, c));
            if zc < xc {
                return Ok(Some((u, c, zc, xc)));
            }
        }
    }
    Ok(None)
}

struct Search<'a> {
    boxes: &'a [(usize, usize)],
    shape: &'a SkewShape,
    alpha: &'a Partition,
    s: usize,
    rows: Vec<Vec<usize>>,
    used: Vec<usize>,
    out: Vec<LrFilling>,
}

impl Search<'_> {
    fn col_of(&self, r: usize, c: usize) -> usize {
        c - self.shape.inner().part(r - 1) - 1
    }

    /// Depth-first assignment over the boxes in row reading order, with
    /// row and column monotonicity enforced on the fly and the full LR
    /// conditions confirmed at the leaves.
    fn fill_from(&mut self, idx: usize) {
        if idx == self.boxes.len() {
            if check_lr_conditions(self.shape, &self.rows).is_ok() {
                self.out.push(LrFilling::from_valid_parts(
                    self.shape.clone(),
                    self.rows.clone(),
                ));
            }
            return;
        }
        let (r, c) = self.boxes[idx];
        let j = self.col_of(r, c);
        let min_row = if j > 0 { self.rows[r - 1][j - 1] } else { 1 };
        let min_col = if r > 1 && self.shape.has_box(r - 1, c) {
            self.rows[r - 2][self.col_of(r - 1, c)] + 1
        } else {
            1
        };
        for v in min_row.max(min_col)..=self.s {
            if self.used[v] == self.alpha.part(v - 1) {
                continue;
            }
            self.rows[r - 1][j] = v;
            self.used[v] += 1;
            self.fill_from(idx + 1);
            self.used[v] -= 1;
        }
        self.rows[r - 1][j] = 0;
    }
}

/// All LR fillings of the type, ordered lexicographically by the row
/// reading (rows top to bottom, left to right). A valid type with no
/// fillings yields an empty list.
pub fn enumerate_fillings(ty: &TableauType) -> Vec<LrFilling> {
    let shape = ty.shape();
    let alpha = ty.alpha();
    let s = alpha.len();
    let boxes = shape.boxes();
    let n = boxes.len();
    let mut out = Vec::new();
    if n == 0 {
        if alpha.is_empty() {
            out.push(LrFilling::from_valid_parts(
                shape.clone(),
                vec![Vec::new(); shape.rows()],
            ));
        }
        return out;
    }
    let mut search = Search {
        boxes: &boxes,
        shape: &shape,
        alpha,
        s,
        rows: (1..=shape.rows())
            .map(|r| vec![0usize; shape.row_len(r)])
            .collect(),
        used: vec![0usize; s + 1],
        out,
    };
    search.fill_from(0);
    search.out
}

/// One decreasing box move: the values swapped and where they sat before
/// the exchange. `small` sat at `upper` and moved down, `large` sat at
/// `lower` and moved up; rows and columns are resorted afterwards.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MoveRecord {
    pub upper: (usize, usize),
    pub lower: (usize, usize),
    pub small: usize,
    pub large: usize,
}

impl fmt::Display for MoveRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "exchange {}@({},{}) with {}@({},{})",
            self.small, self.upper.0, self.upper.1, self.large, self.lower.0, self.lower.1
        )
    }
}

impl MoveRecord {
    /// Reconstructs the move turning `prev` into `next`, when the two
    /// fillings differ in exactly two boxes holding swapped values.
    pub fn between(prev: &LrFilling, next: &LrFilling) -> Option<MoveRecord> {
        if !prev.same_type(next) {
            return None;
        }
        let mut diff = Vec::new();
        for (r, c) in prev.shape().boxes() {
            let a = prev.entry(r, c).unwrap();
            let b = next.entry(r, c).unwrap();
            if a != b {
                diff.push(((r, c), a, b));
            }
        }
        match diff.as_slice() {
            &[(p, a1, b1), (q, a2, b2)] if a1 == b2 && a2 == b1 && a1 != a2 => {
                let (upper, lower) = if p.0 < q.0 { (p, q) } else { (q, p) };
                let small = prev.entry(upper.0, upper.1).unwrap();
                let large = prev.entry(lower.0, lower.1).unwrap();
                if small < large {
                    Some(MoveRecord {
                        upper,
                        lower,
                        small,
                        large,
                    })
                } else {
                    None
                }
            }
            _ => None,
        }
    }
}

fn resort(shape: &SkewShape, rows: &mut [Vec<usize>]) {
    let max_passes = shape.rows() + shape.width() + 2;
    for _ in 0..max_passes {
        let mut changed = false;
        for row in rows.iter_mut() {
            if row.windows(2).any(|w| w[0] > w[1]) {
                row.sort_unstable();
                changed = true;
            }
        }
        for c in 1..=shape.width() {
            let rs: Vec<usize> = shape.rows_in_col(c);
            if rs.len() < 2 {
                continue;
            }
            let mut col: Vec<usize> = rs
                .iter()
                .map(|&r| rows[r - 1][c - shape.inner().part(r - 1) - 1])
                .collect();
            if col.windows(2).any(|w| w[0] > w[1]) {
                col.sort_unstable();
                for (&r, &v) in rs.iter().zip(col.iter()) {
                    rows[r - 1][c - shape.inner().part(r - 1) - 1] = v;
                }
                changed = true;
            }
        }
        if !changed {
            return;
        }
    }
    unreachable!("row and column sorting failed to stabilize");
}

/// All fillings reachable from `x` by one decreasing box move, each with
/// the move that produced it. Exchanges that do not yield a valid LR
/// filling of the same type, or that reproduce `x`, are dropped.
/// Defined only on horizontal and vertical strips.
pub fn decreasing_box_moves(x: &LrFilling) -> Result<Vec<(LrFilling, MoveRecord)>, Error> {
    if !x.shape().strip_kind().is_strip() {
        return Err(Error::NotAStrip);
    }
    let boxes = x.shape().boxes();
    let mut out = Vec::new();
    for i in 0..boxes.len() {
        for j in (i + 1)..boxes.len() {
            let (p, q) = (boxes[i], boxes[j]);
            if p.0 == q.0 {
                continue;
            }
            let (vp, vq) = (x.entry(p.0, p.1).unwrap(), x.entry(q.0, q.1).unwrap());
            if vp >= vq {
                continue;
            }
            let mut rows = x.rows.clone();
            rows[p.0 - 1][p.1 - x.shape.inner().part(p.0 - 1) - 1] = vq;
            rows[q.0 - 1][q.1 - x.shape.inner().part(q.0 - 1) - 1] = vp;
            resort(&x.shape, &mut rows);
            if check_lr_conditions(&x.shape, &rows).is_err() {
                continue;
            }
            let z = LrFilling::from_valid_parts(x.shape.clone(), rows);
            if z == *x {
                continue;
            }
            out.push((
                z,
                MoveRecord {
                    upper: p,
                    lower: q,
                    small: vp,
                    large: vq,
                },
            ));
        }
    }
    Ok(out)
}

/// `z <= x` in the box order: `z` is reachable from `x` by a sequence
/// of decreasing box moves. Implemented as breadth-first search over
/// the move graph.
pub fn box_leq(z: &LrFilling, x: &LrFilling) -> Result<bool, Error> {
    if !z.same_type(x) {
        return Err(Error::TypeMismatch);
    }
    if !x.shape().strip_kind().is_strip() {
        return Err(Error::NotAStrip);
    }
    if z == x {
        return Ok(true);
    }
    let mut seen: HashSet<LrFilling> = HashSet::new();
    let mut frontier = vec![x.clone()];
    seen.insert(x.clone());
    while let Some(cur) = frontier.pop() {
        for (next, _) in decreasing_box_moves(&cur)? {
            if next == *z {
                return Ok(true);
            }
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    Ok(false)
}

/// A chain of fillings in which each step performs one decreasing box
/// move; `moves[k]` turns `fillings[k]` into `fillings[k+1]`.
#[derive(Clone, Debug)]
pub struct Chain {
    pub fillings: Vec<LrFilling>,
    pub moves: Vec<MoveRecord>,
}

impl Chain {
    pub fn steps(&self) -> usize {
        self.moves.len()
    }
}

/// Renders a word compactly: digits are concatenated when every letter
/// is a single digit, otherwise the letters are comma-separated.
pub fn format_word(word: &[usize]) -> String {
    if word.iter().all(|&v| (1..=9).contains(&v)) {
        word.iter().map(|v| v.to_string()).collect()
    } else {
        word.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Parses a word in either form accepted by [`format_word`], with an
/// optional `w=` prefix.
pub fn parse_word(s: &str) -> Result<Vec<usize>, Error> {
    let body = s.trim().strip_prefix("w=").unwrap_or(s.trim());
    let err = || Error::WordParse(s.to_string());
    if body.is_empty() {
        return Err(err());
    }
    let word = if body.contains(',') {
        body.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| err()))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        body.chars()
            .map(|ch| ch.to_digit(10).map(|d| d as usize).ok_or_else(err))
            .collect::<Result<Vec<_>, _>>()?
    };
    if word.contains(&0) {
        return Err(err());
    }
    Ok(word)
}
