mod common;

use common::*;
use idcodes::{Error, Graph};
use proptest::prelude::*;

fn p3() -> Graph {
    Graph::path(3)
}

#[test]
fn neighbourhoods() {
    assert_eq!(p3().open_nbhd(1).unwrap(), set(&[0, 2]));
    assert_eq!(k_bar(2).open_nbhd(0).unwrap(), set(&[]));
    assert_eq!(Graph::complete(3).open_nbhd(0).unwrap(), set(&[1, 2]));
    assert_eq!(p3().closed_nbhd(1).unwrap(), set(&[0, 1, 2]));
    assert_eq!(k_bar(2).closed_nbhd(0).unwrap(), set(&[0]));
    assert_eq!(Graph::cycle(4).closed_nbhd(0).unwrap(), set(&[0, 1, 3]));
    assert_eq!(p3().open_nbhd(3), Err(Error::InvalidVertex(3)));
}

#[test]
fn distances() {
    assert_eq!(p3().bfs_distances(0).unwrap(), vec![Some(0), Some(1), Some(2)]);
    assert_eq!(k_bar(2).bfs_distances(0).unwrap(), vec![Some(0), None]);
    assert_eq!(Graph::cycle(4).bfs_distances(0).unwrap(), vec![Some(0), Some(1), Some(2), Some(1)]);
    assert_eq!(Graph::cycle(4).diameter().unwrap(), 2);
    assert_eq!(Graph::path(5).diameter().unwrap(), 4);
    let power = Graph::from_fn(7, |u, v| v - u <= 2);
    assert_eq!(power.diameter().unwrap(), 3);
    assert_eq!(k_bar(2).diameter(), Err(Error::Disconnected));
}

#[test]
fn twins() {
    assert_eq!(Graph::complete(2).closed_twins(), vec![(0, 1)]);
    assert!(Graph::cycle(4).closed_twins().is_empty());
    assert!(k_bar(2).closed_twins().is_empty());
    assert_eq!(k_bar(2).open_twins(), vec![(0, 1)]);
    assert_eq!(p3().open_twins(), vec![(0, 2)]);
    assert!(Graph::path(4).open_twins().is_empty());
}

#[test]
fn operations() {
    let k1 = Graph::empty(1);
    assert_eq!(k1.disjoint_union(&k1), k_bar(2));
    let u = Graph::complete(2).disjoint_union(&k1);
    assert_eq!((u.n(), u.edge_count()), (3, 1));
    assert_eq!(k_bar(2).disjoint_union(&k_bar(2)), k_bar(4));
    let c4 = k_bar(2).complete_join(&k_bar(2));
    assert_eq!(c4, g(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]));
    assert_eq!(c4.edge_count(), 4);
    assert!(c4.closed_twins().is_empty() && c4.diameter().unwrap() == 2);
    assert_eq!(k1.complete_join(&k1), Graph::complete(2));
    let p3_star = k1.complete_join(&k_bar(2));
    assert_eq!(p3_star, g(3, &[(0, 1), (0, 2)]));
    assert_eq!(k_bar(3).complement(), Graph::complete(3));
    // complement of the 4-cycle is a perfect matching
    let cc4 = Graph::cycle(4).complement();
    assert_eq!(cc4, g(4, &[(0, 2), (1, 3)]));
    assert_eq!(Graph::path(4).complement().complement(), Graph::path(4));
}

#[test]
fn components() {
    assert_eq!(k_bar(3).connected_components(), vec![set(&[0]), set(&[1]), set(&[2])]);
    assert_eq!(Graph::cycle(4).connected_components(), vec![set(&[0, 1, 2, 3])]);
    let u = Graph::complete(2).disjoint_union(&Graph::empty(1));
    assert_eq!(u.connected_components(), vec![set(&[0, 1]), set(&[2])]);
}

fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.n();
    let mut d = vec![vec![None; n]; n];
    for u in 0..n {
        d[u][u] = Some(0);
        for &v in g.neighbors(u) {
            d[u][v] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].map_or(true, |c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            Graph::from_fn(n, |_, _| it.next().unwrap())
        })
    })
}

proptest! {
    #[test]
    fn bfs_matches_floyd_warshall(g in arb_graph(8)) {
        let fw = floyd_warshall(&g);
        for s in 0..g.n() {
            prop_assert_eq!(&g.bfs_distances(s).unwrap(), &fw[s]);
        }
    }

    #[test]
    fn structural_invariants(a in arb_graph(7), b in arb_graph(7)) {
        prop_assert!(a.is_well_formed());
        prop_assert_eq!(a.complement().complement(), a.clone());
        let u = a.disjoint_union(&b);
        let j = a.complete_join(&b);
        prop_assert!(u.is_well_formed() && j.is_well_formed());
        prop_assert_eq!(u.n(), a.n() + b.n());
        prop_assert_eq!(j.edge_count(), a.edge_count() + b.edge_count() + a.n() * b.n());
        prop_assert!(j.diameter().unwrap() <= 2);
    }
}

#[test]
fn graph_enumeration_counts() {
    let counts: Vec<usize> = (1..=6).map(|n| all_graphs(n).len()).collect();
    assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
}
