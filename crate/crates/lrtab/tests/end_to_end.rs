//! Walks the worked examples through the public API, crossing module
//! boundaries the way a library consumer would.

use lrtab::bruhat::{bruhat_chain, bruhat_leq, recording_tableau, standardization, Permutation};
use lrtab::orders::{
    compare_chains, conjecture_for_gamma, descending_word, leq_in, run_word, unique_max_filling,
    unique_min_filling, verify_gamma, word_chain, OrderKind, PosetGraph, TieBreak,
};
use lrtab::partitions::{Partition, StripKind};
use lrtab::tableaux::{
    box_leq, decreasing_box_moves, dom_leq, enumerate_fillings, format_word, parse_word, LrFilling,
    TableauType,
};
use lrtab::Error;

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn ty(alpha: &str, beta: &str, gamma: &str) -> TableauType {
    TableauType::new(part(alpha), part(beta), part(gamma)).unwrap()
}

fn filling(ty: &TableauType, word: &str) -> LrFilling {
    LrFilling::from_word(ty, &parse_word(word).unwrap()).unwrap()
}

fn words(fillings: &[LrFilling]) -> Vec<String> {
    fillings
        .iter()
        .map(|f| format_word(&f.column_word()))
        .collect()
}

#[test]
fn five_box_type_supports_every_representation() {
    let vertical = ty("2,2,1", "4,3,3,2,1", "3,2,2,1");
    assert_eq!(vertical.shape().strip_kind(), StripKind::Vertical);

    let all = enumerate_fillings(&vertical);
    assert_eq!(words(&all), ["32211", "23211", "21321"]);

    for f in &all {
        let json = f.to_json();
        assert_eq!(LrFilling::from_json(&json).unwrap(), *f);

        let seq = f.partition_sequence();
        assert_eq!(LrFilling::from_partition_sequence(&seq).unwrap(), *f);
    }

    let rook = ty("2,2,1", "5,4,3,2,1", "4,3,2,1");
    assert_eq!(rook.shape().strip_kind(), StripKind::Rook);
    for f in enumerate_fillings(&rook) {
        let back = LrFilling::from_word(&rook, &f.column_word()).unwrap();
        assert_eq!(back, f);
    }
}

#[test]
fn standardization_turns_dominance_into_reversed_bruhat() {
    let ty = ty("2,2,1", "5,4,3,2,1", "4,3,2,1");
    let all = enumerate_fillings(&ty);

    let top = filling(&ty, "32211");
    let bottom = filling(&ty, "21321");
    assert!(standardization(&top).unwrap().is_identity());
    assert_eq!(
        standardization(&bottom).unwrap(),
        Permutation::from_one_line(vec![1, 3, 5, 2, 4]).unwrap()
    );

    for x in &all {
        for z in &all {
            let dom = dom_leq(z, x).unwrap();
            let bru =
                bruhat_leq(&standardization(x).unwrap(), &standardization(z).unwrap()).unwrap();
            assert_eq!(dom, bru, "order reversal must hold for every pair");
        }
    }

    let q = standardization(&bottom).unwrap();
    let rec = recording_tableau(&q, ty.alpha()).unwrap();
    assert_eq!(rec, vec![vec![1, 4], vec![2, 5], vec![3]]);
}

#[test]
fn both_chain_algorithms_connect_the_worked_pair() {
    let ty = ty("2,2,1", "5,4,3,2,1", "4,3,2,1");
    let x = filling(&ty, "32211");
    let z = filling(&ty, "21321");

    let bruhat = bruhat_chain(&x, &z).unwrap();
    assert_eq!(
        words(&bruhat.fillings),
        ["32211", "23211", "23121", "21321"]
    );

    let word = word_chain(&x, &z, TieBreak::MaxL).unwrap();
    assert_eq!(word.steps(), 3);
    assert_eq!(word.fillings.first(), Some(&x));
    assert_eq!(word.fillings.last(), Some(&z));

    let cmp = compare_chains(&x, &z).unwrap();
    assert!(cmp.agree);
    assert_eq!(cmp.first_divergence, None);
}

#[test]
fn box_moves_generate_the_box_order() {
    let ty = ty("2,2,1", "5,4,3,2,1", "4,3,2,1");
    let top = filling(&ty, "32211");
    let bottom = filling(&ty, "21321");

    let moves = decreasing_box_moves(&top).unwrap();
    let mut reached: Vec<String> = moves
        .iter()
        .map(|(g, _)| format_word(&g.column_word()))
        .collect();
    reached.sort();
    assert_eq!(reached, ["23211", "32121"]);
    for (g, record) in &moves {
        assert!(dom_leq(g, &top).unwrap());
        assert!(record.small < record.large);
    }

    assert!(box_leq(&bottom, &top).unwrap());
    assert!(!box_leq(&top, &bottom).unwrap());
}

#[test]
fn orders_disagree_beyond_rook_strips() {
    let vertical = ty("2,2,1", "4,3,2,2,1", "3,2,1,1");
    assert_eq!(vertical.shape().strip_kind(), StripKind::Vertical);
    let dom_poset = PosetGraph::build(&vertical, OrderKind::Dominance).unwrap();
    assert_eq!(dom_poset.len(), 3);
    assert_eq!(dom_poset.maximal().len(), 2);

    let horizontal = ty("2,2,1", "5,4,3,1", "4,3,1");
    assert_eq!(horizontal.shape().strip_kind(), StripKind::Horizontal);
    let all = enumerate_fillings(&horizontal);
    assert_eq!(all.len(), 2);
    let (a, b) = (&all[0], &all[1]);
    assert!(dom_leq(b, a).unwrap() || dom_leq(a, b).unwrap());
    assert!(!leq_in(OrderKind::Box, a, b).unwrap());
    assert!(!leq_in(OrderKind::Box, b, a).unwrap());
}

#[test]
fn staircase_poset_is_graded_with_frozen_extremes() {
    let ty = ty("3,2,1", "6,5,4,3,2,1", "5,4,3,2,1");
    let poset = PosetGraph::build(&ty, OrderKind::Box).unwrap();
    assert_eq!(poset.len(), 16);

    let report = poset.gradedness();
    assert!(report.graded);
    assert_eq!(report.chain_length, Some(6));

    let alpha = part("3,2,1");
    assert_eq!(descending_word(&alpha), parse_word("322111").unwrap());
    assert_eq!(run_word(&alpha), parse_word("121321").unwrap());
    assert_eq!(
        unique_max_filling(&ty).unwrap().column_word(),
        parse_word("322111").unwrap()
    );
    assert_eq!(
        unique_min_filling(&ty).unwrap().column_word(),
        parse_word("121321").unwrap()
    );

    let dot = poset.to_dot();
    assert!(dot.starts_with("digraph hasse {"));
    assert_eq!(dot.matches("label=").count(), 16);
}

#[test]
fn sweep_helpers_verify_a_bucket_and_record_conjecture_pairs() {
    let gamma = part("3,1");
    let report = verify_gamma(&gamma, 4);
    assert!(report.all_passed());
    for (_, outcome) in report.outcomes() {
        assert!(outcome.types > 0);
    }

    let mut first = String::new();
    let stats = conjecture_for_gamma(&gamma, 4, &mut first);
    let mut second = String::new();
    conjecture_for_gamma(&gamma, 4, &mut second);
    assert_eq!(first, second);
    assert_eq!(first.lines().count() as u64, stats.pairs);
}

#[test]
fn errors_distinguish_bad_inputs() {
    let rook = ty("2,2,1", "5,4,3,2,1", "4,3,2,1");
    let err = LrFilling::from_word(&rook, &parse_word("11111").unwrap()).unwrap_err();
    assert!(matches!(err, Error::WordContentMismatch { .. }));

    let err = LrFilling::from_word(&rook, &parse_word("99999").unwrap()).unwrap_err();
    assert!(matches!(err, Error::NotLrFilling(_)));

    let column = TableauType::new(part("1,1"), part("1,1"), part("0")).unwrap();
    let err = LrFilling::from_word(&column, &parse_word("21").unwrap()).unwrap_err();
    assert!(matches!(err, Error::AmbiguousWord));

    let other = ty("3,2,1", "6,5,4,3,2,1", "5,4,3,2,1");
    let x = filling(&rook, "32211");
    let z = filling(&other, "213211");
    let err = word_chain(&x, &z, TieBreak::default()).unwrap_err();
    assert!(matches!(err, Error::TypeMismatch));
}
