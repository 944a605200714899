mod common;

use common::*;
use idcodes::exact::*;
use idcodes::{Error, Flavor, Graph, ProblemKind};

#[test]
fn minimum_sets() {
    assert_eq!(min_set(&Graph::path(5), ProblemKind::Ic).unwrap().k, 3);
    assert_eq!(min_set(&star(3), ProblemKind::Ic).unwrap().k, 3);
    assert_eq!(min_set(&Graph::cycle(4), ProblemKind::SepId).unwrap().k, 3);
    let k1 = min_set(&Graph::empty(1), ProblemKind::SepId).unwrap();
    assert_eq!((k1.k, k1.witness), (0, set(&[])));
    assert_eq!(min_set(&Graph::cycle(4), ProblemKind::Rs).unwrap().k, 2);
}

#[test]
fn preconditions() {
    assert_eq!(min_set(&Graph::complete(2), ProblemKind::Ic), Err(Error::TwinsPresent(0, 1)));
    assert_eq!(min_set(&Graph::path(3), ProblemKind::Old), Err(Error::OpenTwinsPresent(0, 2)));
    assert_eq!(min_set(&k_bar(2), ProblemKind::Rs), Err(Error::Disconnected));
    assert!(matches!(min_set_capped(&Graph::path(12), ProblemKind::Ld, 10), Err(Error::CapExceeded(_))));
}

#[test]
fn all_minimum_sets() {
    assert_eq!(all_min_sets(&k_bar(2), ProblemKind::SepId).unwrap(), vec![set(&[0]), set(&[1])]);
    let p3 = all_min_sets(&Graph::path(3), ProblemKind::SepLd).unwrap();
    assert!(p3.contains(&set(&[0])) && p3.contains(&set(&[2])) && !p3.contains(&set(&[1])));
    assert_eq!(all_min_sets(&Graph::empty(1), ProblemKind::SepId).unwrap(), vec![set(&[])]);
}

#[test]
fn flag_oracle() {
    assert_eq!(emp_univ_oracle(&Graph::empty(1), Flavor::Id).unwrap(), (true, true));
    assert_eq!(emp_univ_oracle(&k_bar(2), Flavor::Id).unwrap(), (true, true));
    assert_eq!(emp_univ_oracle(&k_bar(2), Flavor::Ld).unwrap(), (true, false));
}

#[test]
fn deterministic_witnesses() {
    let g = Graph::cycle(6);
    for kind in [ProblemKind::Ic, ProblemKind::Ld, ProblemKind::Old, ProblemKind::Rs] {
        let a = min_set(&g, kind).unwrap();
        assert_eq!(a, min_set(&g, kind).unwrap());
        assert!(idcodes::verify::check(&g, &a.witness, kind).unwrap().is_none());
    }
    // lexicographically first: {0,1} resolves C4
    assert_eq!(min_set(&Graph::cycle(4), ProblemKind::Rs).unwrap().witness, set(&[0, 1]));
}

#[test]
fn sandwich_on_small_graphs() {
    for n in 1..=8 {
        for g in all_graphs(n) {
            let sep_ld = parameter(&g, ProblemKind::SepLd).unwrap();
            let ld = parameter(&g, ProblemKind::Ld).unwrap();
            let (emp, _) = emp_univ_oracle(&g, Flavor::Ld).unwrap();
            assert_eq!(ld, sep_ld + emp as usize, "{g:?}");
            if g.closed_twins().is_empty() {
                let sep_id = parameter(&g, ProblemKind::SepId).unwrap();
                let id = parameter(&g, ProblemKind::Ic).unwrap();
                let (emp, _) = emp_univ_oracle(&g, Flavor::Id).unwrap();
                assert_eq!(id, sep_id + emp as usize, "{g:?}");
            }
        }
    }
}
