//! Bulk generation of strip types inside a bounded universe, with
//! sweeps that check the order theorems and probe the open question of
//! whether the two chain algorithms agree.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::bruhat::{bruhat_chain, bruhat_leq, standardization, Permutation};
use crate::partitions::{Partition, SkewShape};
use crate::tableaux::{
    decreasing_box_moves, dom_leq, enumerate_fillings, format_word, Chain, LrFilling, TableauType,
};

use super::chains::{compare_chains, word_chain, TieBreak};
use super::poset::{unique_max_filling, unique_min_filling, OrderKind, PosetGraph};

/// Row bound of the sweep universe: inner and outer shapes fit in a box
/// with this many rows.
pub const BOX_ROWS: usize = 8;

/// Column bound of the sweep universe.
pub const BOX_COLS: usize = 8;

/// Largest content weight any sweep accepts.
pub const MAX_WEIGHT: usize = 7;

/// Content weight above which the per-pair chain checks and the
/// per-type poset checks are skipped to stay inside a desk-scale
/// budget. The pairwise relation checks still run up to [`MAX_WEIGHT`].
pub const HEAVY_WEIGHT_CAP: usize = 6;

/// Every inner shape of the sweep universe, in a fixed order.
pub fn sweep_gammas() -> Vec<Partition> {
    Partition::all_in_box(BOX_ROWS, BOX_COLS)
}

fn shapes_from_sorted(gamma: &Partition, betas: BTreeSet<(usize, Vec<usize>)>) -> Vec<SkewShape> {
    betas
        .into_iter()
        .map(|(_, parts)| {
            let beta = Partition::new(parts).expect("generated parts are weakly decreasing");
            SkewShape::new(beta, gamma.clone()).expect("generated shapes nest")
        })
        .collect()
}

/// Vertical strip shapes over `gamma` with 1 to `max_n` boxes; when
/// `distinct_cols` is set the added boxes must also occupy distinct
/// columns, which restricts the output to rook strips.
fn row_subset_shapes(
    gamma: &Partition,
    max_n: usize,
    distinct_cols: bool,
) -> BTreeSet<(usize, Vec<usize>)> {
    let rows = BOX_ROWS;
    let mut betas = BTreeSet::new();
    for mask in 1u32..(1 << rows) {
        let size = mask.count_ones() as usize;
        if size > max_n {
            continue;
        }
        let picked: Vec<usize> = (0..rows).filter(|r| mask >> r & 1 == 1).collect();
        if picked.iter().any(|&r| gamma.part(r) + 1 > BOX_COLS) {
            continue;
        }
        if distinct_cols {
            let mut cols: Vec<usize> = picked.iter().map(|&r| gamma.part(r)).collect();
            cols.dedup();
            if cols.len() != picked.len() {
                continue;
            }
        }
        let mut beta: Vec<usize> = (0..rows)
            .map(|r| gamma.part(r) + usize::from(mask >> r & 1 == 1))
            .collect();
        if beta.windows(2).any(|w| w[0] < w[1]) {
            continue;
        }
        while beta.last() == Some(&0) {
            beta.pop();
        }
        betas.insert((size, beta));
    }
    betas
}

fn horizontal_shapes(gamma: &Partition, max_n: usize) -> BTreeSet<(usize, Vec<usize>)> {
    let rows = (gamma.len() + 1).min(BOX_ROWS);
    let mut betas = BTreeSet::new();
    let mut beta = vec![0usize; rows];
    fn rec(
        r: usize,
        rows: usize,
        added: usize,
        max_n: usize,
        gamma: &Partition,
        beta: &mut Vec<usize>,
        betas: &mut BTreeSet<(usize, Vec<usize>)>,
    ) {
        if r == rows {
            if added > 0 {
                let mut parts = beta.clone();
                while parts.last() == Some(&0) {
                    parts.pop();
                }
                betas.insert((added, parts));
            }
            return;
        }
        let lo = gamma.part(r);
        let hi = if r == 0 {
            BOX_COLS
        } else {
            gamma.part(r - 1).min(BOX_COLS)
        };
        for v in lo..=hi {
            if added + (v - lo) > max_n {
                break;
            }
            beta[r] = v;
            rec(r + 1, rows, added + (v - lo), max_n, gamma, beta, betas);
        }
    }
    rec(0, rows, 0, max_n, gamma, &mut beta, &mut betas);
    betas
}

/// All rook strip shapes with inner shape `gamma` and at most `max_n`
/// boxes, sorted by box count and then by outer shape.
pub fn rook_shapes_for_gamma(gamma: &Partition, max_n: usize) -> Vec<SkewShape> {
    shapes_from_sorted(gamma, row_subset_shapes(gamma, max_n.min(MAX_WEIGHT), true))
}

/// All horizontal and vertical strip shapes with inner shape `gamma`
/// and at most `max_n` boxes, deduplicated and sorted like
/// [`rook_shapes_for_gamma`].
pub fn strip_shapes_for_gamma(gamma: &Partition, max_n: usize) -> Vec<SkewShape> {
    let max_n = max_n.min(MAX_WEIGHT);
    let mut betas = row_subset_shapes(gamma, max_n, false);
    betas.extend(horizontal_shapes(gamma, max_n));
    shapes_from_sorted(gamma, betas)
}

fn types_for_shapes(shapes: Vec<SkewShape>) -> Vec<TableauType> {
    let mut alphas_by_weight: Vec<Vec<Partition>> = Vec::new();
    let mut out = Vec::new();
    for shape in shapes {
        let n = shape.box_count();
        while alphas_by_weight.len() < n {
            alphas_by_weight.push(Partition::all_of_weight(alphas_by_weight.len() + 1));
        }
        for alpha in &alphas_by_weight[n - 1] {
            out.push(
                TableauType::new(alpha.clone(), shape.outer().clone(), shape.inner().clone())
                    .expect("shape size equals content weight"),
            );
        }
    }
    out
}

/// Every rook strip type over `gamma` with content weight at most
/// `max_n`, in a fixed order.
pub fn rook_types_for_gamma(gamma: &Partition, max_n: usize) -> Vec<TableauType> {
    types_for_shapes(rook_shapes_for_gamma(gamma, max_n))
}

/// Every horizontal or vertical strip type over `gamma` with content
/// weight at most `max_n`, in a fixed order.
pub fn strip_types_for_gamma(gamma: &Partition, max_n: usize) -> Vec<TableauType> {
    types_for_shapes(strip_shapes_for_gamma(gamma, max_n))
}

/// One falsifying instance found by a sweep.
#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub check: &'static str,
    pub alpha: String,
    pub beta: String,
    pub gamma: String,
    pub detail: String,
}

/// Tally for one checked statement. `types` counts the types visited,
/// `cases` the individual assertions, and `failure` keeps the first
/// counterexample encountered.
#[derive(Clone, Debug, Default)]
pub struct CheckOutcome {
    pub types: u64,
    pub cases: u64,
    pub failure: Option<Counterexample>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    fn absorb(&mut self, other: CheckOutcome) {
        self.types += other.types;
        self.cases += other.cases;
        if self.failure.is_none() {
            self.failure = other.failure;
        }
    }

    fn fail(&mut self, check: &'static str, ty: &TableauType, detail: String) {
        if self.failure.is_none() {
            self.failure = Some(Counterexample {
                check,
                alpha: ty.alpha().to_string(),
                beta: ty.beta().to_string(),
                gamma: ty.gamma().to_string(),
                detail,
            });
        }
    }
}

/// Results of the six theorem sweeps over one or more inner shapes.
///
/// `strict_pairs_by_weight` tallies the strictly dominance-comparable
/// ordered pairs seen on rook strip types, indexed by content weight
/// minus one; the conjecture sweep emits exactly one record per such
/// pair.
#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub equivalence: CheckOutcome,
    pub move_decreases: CheckOutcome,
    pub order_reversal: CheckOutcome,
    pub chain_lengths: CheckOutcome,
    pub extremes: CheckOutcome,
    pub gradedness: CheckOutcome,
    pub strict_pairs_by_weight: [u64; MAX_WEIGHT],
}

impl VerifyReport {
    pub fn merge(&mut self, other: VerifyReport) {
        self.equivalence.absorb(other.equivalence);
        self.move_decreases.absorb(other.move_decreases);
        self.order_reversal.absorb(other.order_reversal);
        self.chain_lengths.absorb(other.chain_lengths);
        self.extremes.absorb(other.extremes);
        self.gradedness.absorb(other.gradedness);
        for (mine, theirs) in self
            .strict_pairs_by_weight
            .iter_mut()
            .zip(other.strict_pairs_by_weight)
        {
            *mine += theirs;
        }
    }

    pub fn all_passed(&self) -> bool {
        self.outcomes().iter().all(|(_, o)| o.passed())
    }

    pub fn outcomes(&self) -> [(&'static str, &CheckOutcome); 6] {
        [
            ("equivalence", &self.equivalence),
            ("move-decreases", &self.move_decreases),
            ("order-reversal", &self.order_reversal),
            ("chain-lengths", &self.chain_lengths),
            ("extremes", &self.extremes),
            ("gradedness", &self.gradedness),
        ]
    }

    pub fn first_failure(&self) -> Option<&Counterexample> {
        self.outcomes()
            .into_iter()
            .find_map(|(_, o)| o.failure.as_ref())
    }
}

/// Runs the six checks over every type with inner shape `gamma` and
/// content weight at most `max_n`, clamped to the sweep universe cap.
///
/// The checked statements are, in report order: the box and dominance
/// orders coincide on rook strip types; a decreasing box move on any
/// strip lands strictly lower in dominance; dominance between fillings
/// matches Bruhat order between their standardizations, reversed; both
/// chain algorithms take exactly as many steps as the Bruhat length gap
/// and stay inside the dominance interval; the descending and run word
/// fillings are the one maximum and the one minimum; the box poset of a
/// rook strip type is graded with chain length equal to the length of
/// the bottom standardization.
pub fn verify_gamma(gamma: &Partition, max_n: usize) -> VerifyReport {
    let max_n = max_n.min(MAX_WEIGHT);
    let heavy_n = max_n.min(HEAVY_WEIGHT_CAP);
    let mut rep = VerifyReport::default();
    for ty in rook_types_for_gamma(gamma, max_n) {
        verify_rook_type(&ty, heavy_n, &mut rep);
    }
    for ty in strip_types_for_gamma(gamma, heavy_n) {
        verify_strip_type(&ty, &mut rep);
    }
    rep
}

fn word_of(f: &LrFilling) -> String {
    format_word(&f.column_word())
}

fn verify_rook_type(ty: &TableauType, heavy_n: usize, rep: &mut VerifyReport) {
    let n = ty.alpha().weight();
    rep.equivalence.types += 1;
    rep.order_reversal.types += 1;
    let poset = match PosetGraph::build(ty, OrderKind::Box) {
        Ok(p) => p,
        Err(e) => {
            rep.equivalence
                .fail("equivalence", ty, format!("box poset failed to build: {e}"));
            return;
        }
    };
    let nodes = poset.nodes();
    let count = nodes.len();
    let pis: Vec<Permutation> = nodes
        .iter()
        .map(|f| standardization(f).expect("rook strip fillings standardize"))
        .collect();

    let mut dom = vec![false; count * count];
    for zi in 0..count {
        for xi in 0..count {
            if zi == xi {
                continue;
            }
            let d = dom_leq(&nodes[zi], &nodes[xi]).expect("nodes share a type");
            dom[zi * count + xi] = d;
            if d {
                rep.strict_pairs_by_weight[n - 1] += 1;
            }

            rep.equivalence.cases += 1;
            if d != poset.leq(zi, xi) {
                rep.equivalence.fail(
                    "equivalence",
                    ty,
                    format!(
                        "z={} x={} dominance={} box={}",
                        word_of(&nodes[zi]),
                        word_of(&nodes[xi]),
                        d,
                        poset.leq(zi, xi)
                    ),
                );
            }

            rep.order_reversal.cases += 1;
            let bru = bruhat_leq(&pis[xi], &pis[zi]).expect("standardizations share a size");
            if d != bru {
                rep.order_reversal.fail(
                    "order-reversal",
                    ty,
                    format!(
                        "z={} x={} dominance={} bruhat={}",
                        word_of(&nodes[zi]),
                        word_of(&nodes[xi]),
                        d,
                        bru
                    ),
                );
            }
        }
    }

    if n > heavy_n {
        return;
    }

    rep.chain_lengths.types += 1;
    for xi in 0..count {
        for zi in 0..count {
            if zi == xi || !dom[zi * count + xi] {
                continue;
            }
            rep.chain_lengths.cases += 1;
            let (x, z) = (&nodes[xi], &nodes[zi]);
            let Some(gap) = pis[zi].length().checked_sub(pis[xi].length()) else {
                rep.chain_lengths.fail(
                    "chain-lengths",
                    ty,
                    format!(
                        "z={} x={} but the lower filling standardizes shorter",
                        word_of(z),
                        word_of(x)
                    ),
                );
                continue;
            };
            match bruhat_chain(x, z) {
                Ok(chain) => check_chain(&mut rep.chain_lengths, ty, "bruhat", &chain, x, z, gap),
                Err(e) => rep.chain_lengths.fail(
                    "chain-lengths",
                    ty,
                    format!(
                        "bruhat chain failed for z={} x={}: {e}",
                        word_of(z),
                        word_of(x)
                    ),
                ),
            }
            match word_chain(x, z, TieBreak::MaxL) {
                Ok(chain) => check_chain(&mut rep.chain_lengths, ty, "word", &chain, x, z, gap),
                Err(e) => rep.chain_lengths.fail(
                    "chain-lengths",
                    ty,
                    format!(
                        "word chain failed for z={} x={}: {e}",
                        word_of(z),
                        word_of(x)
                    ),
                ),
            }
        }
    }

    rep.extremes.types += 1;
    rep.extremes.cases += 1;
    match (unique_max_filling(ty), unique_min_filling(ty)) {
        (Ok(top), Ok(bottom)) => {
            let top_idx = poset.index_of(&top);
            let bottom_idx = poset.index_of(&bottom);
            let ok = top_idx.is_some()
                && bottom_idx.is_some()
                && poset.maximal() == [top_idx.unwrap()]
                && poset.minimal() == [bottom_idx.unwrap()];
            if !ok {
                rep.extremes.fail(
                    "extremes",
                    ty,
                    format!(
                        "maximal={:?} minimal={:?} expected top={} bottom={}",
                        poset.maximal(),
                        poset.minimal(),
                        word_of(&top),
                        word_of(&bottom)
                    ),
                );
            }
        }
        (Err(e), _) | (_, Err(e)) => {
            rep.extremes
                .fail("extremes", ty, format!("extreme construction failed: {e}"));
        }
    }

    rep.gradedness.types += 1;
    rep.gradedness.cases += 1;
    let report = poset.gradedness();
    let expected = unique_min_filling(ty)
        .ok()
        .and_then(|b| standardization(&b).ok())
        .map(|p| p.length());
    if !report.graded {
        rep.gradedness.fail(
            "gradedness",
            ty,
            format!(
                "maximal chains of {} and {} steps both occur",
                report.shortest.len().saturating_sub(1),
                report.longest.len().saturating_sub(1)
            ),
        );
    } else if report.chain_length != expected {
        rep.gradedness.fail(
            "gradedness",
            ty,
            format!(
                "chain length {:?} does not match bottom standardization length {:?}",
                report.chain_length, expected
            ),
        );
    }
}

fn check_chain(
    outcome: &mut CheckOutcome,
    ty: &TableauType,
    label: &str,
    chain: &Chain,
    x: &LrFilling,
    z: &LrFilling,
    gap: usize,
) {
    if chain.steps() != gap {
        outcome.fail(
            "chain-lengths",
            ty,
            format!(
                "{label} chain from {} to {} has {} steps, length gap is {gap}",
                word_of(x),
                word_of(z),
                chain.steps()
            ),
        );
        return;
    }
    if chain.fillings.first() != Some(x) || chain.fillings.last() != Some(z) {
        outcome.fail(
            "chain-lengths",
            ty,
            format!("{label} chain endpoints do not match the request"),
        );
        return;
    }
    for w in &chain.fillings {
        let inside = dom_leq(z, w).expect("chain stays inside the type")
            && dom_leq(w, x).expect("chain stays inside the type");
        if !inside {
            outcome.fail(
                "chain-lengths",
                ty,
                format!(
                    "{label} chain from {} to {} leaves the interval at {}",
                    word_of(x),
                    word_of(z),
                    word_of(w)
                ),
            );
            return;
        }
    }
}

fn verify_strip_type(ty: &TableauType, rep: &mut VerifyReport) {
    rep.move_decreases.types += 1;
    for f in enumerate_fillings(ty) {
        let moves = match decreasing_box_moves(&f) {
            Ok(m) => m,
            Err(e) => {
                rep.move_decreases.fail(
                    "move-decreases",
                    ty,
                    format!("move enumeration failed: {e}"),
                );
                return;
            }
        };
        for (g, mv) in moves {
            rep.move_decreases.cases += 1;
            let strictly_below = g != f && dom_leq(&g, &f).expect("moves stay inside a type");
            if !strictly_below {
                rep.move_decreases.fail(
                    "move-decreases",
                    ty,
                    format!("move {mv} on {:?} does not strictly drop", f.rows()),
                );
            }
        }
    }
}

/// Tallies of one conjecture sweep.
#[derive(Clone, Copy, Debug, Default)]
pub struct ConjectureStats {
    pub types: u64,
    pub pairs: u64,
    pub agreements: u64,
    pub divergences: u64,
}

impl ConjectureStats {
    pub fn merge(&mut self, other: ConjectureStats) {
        self.types += other.types;
        self.pairs += other.pairs;
        self.agreements += other.agreements;
        self.divergences += other.divergences;
    }
}

#[derive(Serialize)]
struct ConjectureRecord {
    alpha: String,
    beta: String,
    gamma: String,
    x: String,
    z: String,
    agree: bool,
    first_divergence: Option<usize>,
    bruhat_chain: Vec<String>,
    word_chain: Vec<String>,
}

/// Compares the two chain algorithms on every strictly comparable
/// ordered pair of every rook strip type over `gamma`, appending one
/// JSON line per pair to `out`. Agreement is recorded, never assumed.
pub fn conjecture_for_gamma(gamma: &Partition, max_n: usize, out: &mut String) -> ConjectureStats {
    let max_n = max_n.min(MAX_WEIGHT);
    let mut stats = ConjectureStats::default();
    for ty in rook_types_for_gamma(gamma, max_n) {
        stats.types += 1;
        let nodes = enumerate_fillings(&ty);
        for xi in 0..nodes.len() {
            for zi in 0..nodes.len() {
                if zi == xi || !dom_leq(&nodes[zi], &nodes[xi]).expect("nodes share a type") {
                    continue;
                }
                stats.pairs += 1;
                let cmp = compare_chains(&nodes[xi], &nodes[zi])
                    .expect("comparable rook strip pairs admit both chains");
                if cmp.agree {
                    stats.agreements += 1;
                } else {
                    stats.divergences += 1;
                }
                let record = ConjectureRecord {
                    alpha: ty.alpha().to_string(),
                    beta: ty.beta().to_string(),
                    gamma: ty.gamma().to_string(),
                    x: word_of(&nodes[xi]),
                    z: word_of(&nodes[zi]),
                    agree: cmp.agree,
                    first_divergence: cmp.first_divergence,
                    bruhat_chain: cmp.bruhat.fillings.iter().map(word_of).collect(),
                    word_chain: cmp.word.fillings.iter().map(word_of).collect(),
                };
                out.push_str(&serde_json::to_string(&record).expect("records serialize"));
                out.push('\n');
            }
        }
    }
    stats
}
