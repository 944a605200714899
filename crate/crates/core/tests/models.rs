mod common;

use common::*;
use idcodes::io::{parse_cotree, parse_graph, parse_intervals, parse_model, parse_permutation, write_model};
use idcodes::models::{all_cotrees, cograph_recognize, random_cotree, rat, Rational};
use idcodes::{verify, Error, Graph, IntervalModel, Model, PermutationModel};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn iv(pairs: &[(i64, i64)]) -> IntervalModel {
    IntervalModel::new(pairs.iter().map(|&(l, r)| (Rational::from_integer(l), Rational::from_integer(r))).collect())
        .unwrap()
}

#[test]
fn interval_graphs() {
    assert_eq!(iv(&[(0, 2), (1, 3)]).to_graph().unwrap(), Graph::complete(2));
    assert_eq!(iv(&[(0, 1), (1, 2)]).to_graph().unwrap(), k_bar(2));
    let k = 4;
    let mut pairs = Vec::new();
    for i in 1..=k + 1 {
        for j in i + 1..=k + 1 {
            pairs.push((i, j));
        }
    }
    let m = iv(&pairs);
    let g = m.to_graph().unwrap();
    assert_eq!(g.n(), 10);
    let code = pairs.iter().enumerate().filter(|(_, p)| p.1 == p.0 + 1).map(|(i, _)| i).collect();
    assert!(verify::is_identifying_code(&g, &code));
    assert_eq!(
        IntervalModel::new(vec![(Rational::from_integer(2), Rational::from_integer(2))]),
        Err(Error::DegenerateInterval(0))
    );
}

#[test]
fn unit_models() {
    let m = IntervalModel::new(vec![(rat(0, 1), rat(1, 1)), (rat(1, 2), rat(3, 2))]).unwrap();
    assert!(m.is_unit());
    assert!(!iv(&[(0, 2)]).is_unit());
}

#[test]
fn permutation_graphs() {
    let pm = |s: &[(i64, i64)]| PermutationModel::new(s.to_vec()).unwrap().to_graph().unwrap();
    assert_eq!(pm(&[(0, 1), (1, 0)]), Graph::complete(2));
    assert_eq!(pm(&[(0, 0), (1, 1)]), k_bar(2));
    assert_eq!(pm(&[(0, 1), (1, 2), (2, 0)]), g(3, &[(0, 2), (1, 2)]));
    assert_eq!(PermutationModel::new(vec![(0, 0), (0, 1)]), Err(Error::DuplicateIndex("top", 0)));
}

#[test]
fn cotrees() {
    let c4 = parse_cotree("(J (U 0 1) (U 2 3))").unwrap();
    assert_eq!(c4.to_graph(), g(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]));
    assert_eq!(parse_cotree("0").unwrap().to_graph(), Graph::empty(1));
    assert_eq!(parse_cotree("(U 0 1 2)").unwrap().to_graph(), k_bar(3));
    assert!(matches!(parse_cotree("(U 0)"), Err(Error::MalformedCotree(_))));
    assert!(matches!(parse_cotree("(U 0 2)"), Err(Error::MalformedCotree(_))));
    assert!(parse_cotree("(J 0 (U 1 2)").is_err());
    // nested same-operator nodes are merged
    let t = parse_cotree("(U 0 (U 1 2))").unwrap();
    assert!(t.is_canonical());
    assert_eq!(t.to_string(), "(U 0 1 2)");
}

#[test]
fn recognition() {
    let c4 = cograph_recognize(&Graph::cycle(4)).unwrap();
    assert_eq!(c4.root_kind(), Some(idcodes::models::CoKind::Join));
    assert_eq!(c4.to_graph(), Graph::cycle(4));
    assert_eq!(cograph_recognize(&Graph::path(4)), Err(Error::NotCograph));
    assert_eq!(cograph_recognize(&k_bar(3)).unwrap().to_string(), "(U 0 1 2)");
}

#[test]
fn cotree_enumeration_counts() {
    let counts: Vec<usize> = (1..=10).map(|n| all_cotrees(n).len()).collect();
    assert_eq!(counts, vec![1, 2, 4, 10, 24, 66, 180, 522, 1532, 4624]);
}

#[test]
fn recognition_round_trip() {
    for n in 1..=7 {
        for t in all_cotrees(n) {
            let g = t.to_graph();
            let back = cograph_recognize(&g).unwrap();
            assert!(back.is_canonical());
            assert_eq!(back.to_graph(), g, "{t}");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..300 {
        let n = 8 + (rand::Rng::gen_range(&mut rng, 0..3));
        let t = random_cotree(n, &mut rng);
        assert_eq!(cograph_recognize(&t.to_graph()).unwrap().to_graph(), t.to_graph());
    }
}

#[test]
fn file_formats() {
    let g = parse_graph("# path\ngraph 3\ne 0 1\ne 1 2\n").unwrap();
    assert_eq!(g, Graph::path(3));
    assert!(matches!(parse_graph("graph 3\ne 1 0\n"), Err(Error::Parse { .. })));
    assert!(matches!(parse_graph("graph 3\ne 0 1\ne 0 1\n"), Err(Error::Parse { .. })));
    assert!(matches!(parse_graph("graph 2\ne 0 2\n"), Err(Error::Parse { .. })));
    let m = parse_intervals("intervals 2\n0 0 1/2\n1 1/4 2\n").unwrap();
    assert_eq!(m.intervals[0], (rat(0, 1), rat(1, 2)));
    assert_eq!(m.to_graph().unwrap(), Graph::complete(2));
    let p = parse_permutation("permutation 2\n0 0 1\n1 1 0\n").unwrap();
    assert_eq!(p.to_graph().unwrap(), Graph::complete(2));
    for text in ["graph 3\ne 0 1\ne 1 2\n", "intervals 2\n0 0 1/2\n1 1/4 2\n", "permutation 2\n0 0 1\n1 1 0\n", "(J 0 (U 1 2 3))\n"] {
        let model = parse_model(text).unwrap();
        assert_eq!(write_model(&model), text);
        assert_eq!(parse_model(&write_model(&model)).unwrap(), model);
    }
    assert!(matches!(parse_model("(J 0 1)").unwrap(), Model::Cotree(_)));
}

proptest! {
    #[test]
    fn interval_graph_offset_invariant(
        raw in proptest::collection::vec((-20i64..20, 1i64..10, 1i64..4), 1..20),
        shift in -50i64..50,
        den in 1i64..7,
    ) {
        let model: Vec<(Rational, Rational)> =
            raw.iter().map(|&(l, len, q)| (rat(l, q), rat(l, q) + rat(len, q))).collect();
        let m = IntervalModel::new(model.clone()).unwrap();
        let off = rat(shift, den);
        let shifted = IntervalModel::new(model.iter().map(|&(l, r)| (l + off, r + off)).collect()).unwrap();
        let g = m.to_graph().unwrap();
        prop_assert!(g.is_well_formed());
        prop_assert_eq!(g, shifted.to_graph().unwrap());
    }

    #[test]
    fn permutation_swap_invariant(perm in Just((0..15).collect::<Vec<i64>>()).prop_shuffle()) {
        let m = PermutationModel::new(perm.iter().enumerate().map(|(i, &b)| (i as i64, b)).collect()).unwrap();
        prop_assert_eq!(m.to_graph().unwrap(), m.swapped().to_graph().unwrap());
    }
}
