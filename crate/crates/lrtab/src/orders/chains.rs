//! Step and chain construction between dominance-comparable fillings.
//!
//! Two independent procedures walk from a filling `X` down to a filling
//! `Z` below it, one decreasing box move at a time. The first lifts the
//! pair to permutations and takes Bruhat covering steps (see
//! [`crate::bruhat::bruhat_chain`]); the second works directly on
//! column words and is implemented here.

use crate::bruhat::bruhat_chain;
use crate::error::Error;
use crate::tableaux::{dominance_violation, Chain, LrFilling, MoveRecord};

/// Rule for picking the exchange position when a word step finds the
/// value `b` at several positions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieBreak {
    /// Use the largest candidate position. Under this rule every step
    /// covers in the Bruhat order of standardizations, so chains have
    /// the maximal possible length.
    #[default]
    MaxL,
    /// Use the smallest candidate position. Chains may then skip Bruhat
    /// levels and come out shorter.
    MinL,
    /// Use the given position, which must hold the value `b`.
    At(usize),
}

/// The data selected by one word step.
///
/// `k` is the first position where the column words of `X` and `Z`
/// differ, `a` is the value `Z` wants there, `m` is the first position
/// after `k` where `X` carries an `a`, `b` is the smallest value above
/// `a` that `X` carries on `[k, m)`, and `l` is the position the `b`
/// was taken from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MoveChoice {
    pub k: usize,
    pub a: usize,
    pub m: usize,
    pub b: usize,
    pub l: usize,
}

/// Performs one word step from `x` toward `z` and returns the next
/// filling together with the positions and values it used.
///
/// Both fillings must share a rook strip type and satisfy `z < x` in
/// dominance order. The step exchanges the word letters at positions
/// `l` and `m`, which moves the smaller value `a` one occurrence
/// earlier and keeps the result strictly between `z` and `x`.
pub fn word_step(
    x: &LrFilling,
    z: &LrFilling,
    tie: TieBreak,
) -> Result<(LrFilling, MoveChoice), Error> {
    if !x.same_type(z) {
        return Err(Error::TypeMismatch);
    }
    if !x.shape().strip_kind().is_rook() {
        return Err(Error::NotARookStrip);
    }
    if x == z {
        return Err(Error::EqualFillings);
    }
    if let Some((entry, col, z_count, x_count)) = dominance_violation(z, x)? {
        return Err(Error::NotDominated {
            entry,
            col,
            z_count,
            x_count,
        });
    }
    let wx = x.column_word();
    let wz = z.column_word();
    let k = wx
        .iter()
        .zip(wz.iter())
        .position(|(p, q)| p != q)
        .expect("distinct fillings of one rook strip type have distinct words")
        + 1;
    let a = wz[k - 1];
    debug_assert!(a < wx[k - 1]);
    let m = (k + 1..=wx.len())
        .find(|&i| wx[i - 1] == a)
        .expect("equal content leaves a later copy of the wanted value");
    let b = wx[k - 1..m - 1]
        .iter()
        .copied()
        .filter(|&v| v > a)
        .min()
        .expect("position k itself carries a value above a");
    let candidates: Vec<usize> = (k..m).filter(|&i| wx[i - 1] == b).collect();
    let l = match tie {
        TieBreak::MaxL => *candidates.last().unwrap(),
        TieBreak::MinL => candidates[0],
        TieBreak::At(pos) => {
            if candidates.contains(&pos) {
                pos
            } else {
                return Err(Error::InvalidTieBreak { pos });
            }
        }
    };
    let mut word = wx;
    word.swap(l - 1, m - 1);
    let y = LrFilling::from_word(&x.ty(), &word)?;
    Ok((y, MoveChoice { k, a, m, b, l }))
}

/// Walks from `x` down to `z` by repeated word steps, applying the same
/// tie break throughout. With `x == z` the chain is a single filling
/// and no steps are taken.
pub fn word_chain(x: &LrFilling, z: &LrFilling, tie: TieBreak) -> Result<Chain, Error> {
    if !x.same_type(z) {
        return Err(Error::TypeMismatch);
    }
    if !x.shape().strip_kind().is_rook() {
        return Err(Error::NotARookStrip);
    }
    if let Some((entry, col, z_count, x_count)) = dominance_violation(z, x)? {
        return Err(Error::NotDominated {
            entry,
            col,
            z_count,
            x_count,
        });
    }
    let mut deficit = 0usize;
    for entry in 1..=x.max_entry() {
        for col in 1..=x.shape().width() {
            deficit += z.count_le(entry, col) - x.count_le(entry, col);
        }
    }
    let mut fillings = vec![x.clone()];
    let mut moves = Vec::new();
    let mut cur = x.clone();
    for _ in 0..deficit {
        if cur == *z {
            break;
        }
        let (y, _) = word_step(&cur, z, tie)?;
        moves.push(MoveRecord::between(&cur, &y).expect("a word step exchanges exactly two boxes"));
        fillings.push(y.clone());
        cur = y;
    }
    if cur != *z {
        unreachable!("word steps exhausted the count deficit without reaching the target");
    }
    Ok(Chain { fillings, moves })
}

/// The chains produced by both algorithms for one comparable pair,
/// together with a step-by-step agreement verdict.
///
/// Whether the two chains coincide is an open question, so the verdict
/// is only recorded, never asserted. `first_divergence` holds the index
/// of the first step at which the chains produce different fillings.
#[derive(Clone, Debug)]
pub struct ChainComparison {
    pub bruhat: Chain,
    pub word: Chain,
    pub agree: bool,
    pub first_divergence: Option<usize>,
}

/// Runs both chain algorithms from `x` down to `z` and compares their
/// fillings step by step. The word chain uses the [`TieBreak::MaxL`]
/// rule, the only one under which the two chains have equal length.
pub fn compare_chains(x: &LrFilling, z: &LrFilling) -> Result<ChainComparison, Error> {
    let bruhat = bruhat_chain(x, z)?;
    let word = word_chain(x, z, TieBreak::MaxL)?;
    let steps = bruhat.fillings.len().max(word.fillings.len());
    let mut first_divergence = None;
    for i in 0..steps {
        match (bruhat.fillings.get(i), word.fillings.get(i)) {
            (Some(p), Some(q)) if p == q => continue,
            _ => {
                first_divergence = Some(i);
                break;
            }
        }
    }
    Ok(ChainComparison {
        agree: first_divergence.is_none(),
        first_divergence,
        bruhat,
        word,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bruhat::standardization;
    use crate::partitions::Partition;
    use crate::tableaux::{dom_leq, enumerate_fillings, format_word, TableauType};

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn staircase_type(alpha: &str) -> TableauType {
        let alpha = part(alpha);
        let n = alpha.weight();
        let beta = Partition::new((1..=n).rev().collect()).unwrap();
        let gamma = Partition::new((1..n).rev().collect()).unwrap();
        TableauType::new(alpha, beta, gamma).unwrap()
    }

    fn filling(ty: &TableauType, word: &str) -> LrFilling {
        LrFilling::from_word(ty, &crate::tableaux::parse_word(word).unwrap()).unwrap()
    }

    #[test]
    fn word_step_worked_example() {
        let ty = staircase_type("3,2,1");
        let x = filling(&ty, "232111");
        let z = filling(&ty, "132211");

        let (y, choice) = word_step(&x, &z, TieBreak::MaxL).unwrap();
        assert_eq!(
            choice,
            MoveChoice {
                k: 1,
                a: 1,
                m: 4,
                b: 2,
                l: 3
            }
        );
        assert_eq!(format_word(&y.column_word()), "231211");

        let (y_min, choice_min) = word_step(&x, &z, TieBreak::MinL).unwrap();
        assert_eq!(choice_min.l, 1);
        assert_eq!(y_min, z);

        let (y_at, _) = word_step(&x, &z, TieBreak::At(1)).unwrap();
        assert_eq!(y_at, z);
        let (y_at3, _) = word_step(&x, &z, TieBreak::At(3)).unwrap();
        assert_eq!(format_word(&y_at3.column_word()), "231211");
        assert!(matches!(
            word_step(&x, &z, TieBreak::At(2)),
            Err(Error::InvalidTieBreak { pos: 2 })
        ));
    }

    #[test]
    fn word_step_rejects_bad_inputs() {
        let ty = staircase_type("3,2,1");
        let x = filling(&ty, "232111");
        let z = filling(&ty, "132211");
        assert!(matches!(
            word_step(&x, &x, TieBreak::MaxL),
            Err(Error::EqualFillings)
        ));
        assert!(matches!(
            word_step(&z, &x, TieBreak::MaxL),
            Err(Error::NotDominated { .. })
        ));

        let other = staircase_type("2,2,1,1");
        let o = filling(&other, "432211");
        assert!(matches!(
            word_step(&x, &o, TieBreak::MaxL),
            Err(Error::TypeMismatch)
        ));

        let horizontal = TableauType::new(part("2,2,1"), part("5,4,3,1"), part("4,3,1")).unwrap();
        let fillings = enumerate_fillings(&horizontal);
        assert!(matches!(
            word_step(&fillings[0], &fillings[1], TieBreak::MaxL).or(word_step(
                &fillings[1],
                &fillings[0],
                TieBreak::MaxL
            )),
            Err(Error::NotARookStrip)
        ));
    }

    #[test]
    fn chain_length_depends_on_tie_break() {
        let ty = staircase_type("3,2,1");
        let x = filling(&ty, "232111");
        let z = filling(&ty, "132211");

        let long = word_chain(&x, &z, TieBreak::MaxL).unwrap();
        assert_eq!(long.steps(), 2);
        assert_eq!(format_word(&long.fillings[1].column_word()), "231211");
        assert_eq!(long.fillings[2], z);

        let short = word_chain(&x, &z, TieBreak::MinL).unwrap();
        assert_eq!(short.steps(), 1);
        assert_eq!(short.fillings[1], z);
    }

    #[test]
    fn singleton_chain_for_equal_endpoints() {
        let ty = staircase_type("2,2,1");
        let x = filling(&ty, "21321");
        let chain = word_chain(&x, &x, TieBreak::MaxL).unwrap();
        assert_eq!(chain.steps(), 0);
        assert_eq!(chain.fillings, vec![x]);
    }

    #[test]
    fn max_l_chains_cover_every_level() {
        for alpha in ["2,1", "2,2", "3,1", "2,2,1", "3,2,1", "2,2,2"] {
            let ty = staircase_type(alpha);
            let nodes = enumerate_fillings(&ty);
            for x in &nodes {
                for z in &nodes {
                    if x == z || !dom_leq(z, x).unwrap() {
                        continue;
                    }
                    let gap =
                        standardization(z).unwrap().length() - standardization(x).unwrap().length();
                    let chain = word_chain(x, z, TieBreak::MaxL).unwrap();
                    assert_eq!(chain.steps(), gap);
                    for w in &chain.fillings {
                        assert!(dom_leq(z, w).unwrap());
                        assert!(dom_leq(w, x).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn comparison_reports_divergence_consistently() {
        let ty = staircase_type("2,2,1");
        let nodes = enumerate_fillings(&ty);
        let mut compared = 0;
        for x in &nodes {
            for z in &nodes {
                if x == z || !dom_leq(z, x).unwrap() {
                    continue;
                }
                compared += 1;
                let cmp = compare_chains(x, z).unwrap();
                assert_eq!(cmp.agree, cmp.bruhat.fillings == cmp.word.fillings);
                assert_eq!(cmp.agree, cmp.first_divergence.is_none());
                assert_eq!(cmp.bruhat.steps(), cmp.word.steps());
                if let Some(i) = cmp.first_divergence {
                    assert!(i >= 1);
                    assert_eq!(cmp.bruhat.fillings[..i], cmp.word.fillings[..i]);
                }
            }
        }
        assert!(compared > 0);
    }

    #[test]
    fn worked_pair_chains_agree() {
        let ty = staircase_type("2,2,1");
        let x = filling(&ty, "32211");
        let z = filling(&ty, "21321");
        let cmp = compare_chains(&x, &z).unwrap();
        assert_eq!(cmp.bruhat.steps(), 3);
        let words: Vec<String> = cmp
            .word
            .fillings
            .iter()
            .map(|f| format_word(&f.column_word()))
            .collect();
        assert_eq!(words[0], "32211");
        assert_eq!(*words.last().unwrap(), "21321");
    }
}
