#![allow(dead_code)]

use idcodes::{Graph, VertexSet};

pub fn set(xs: &[usize]) -> VertexSet {
    xs.iter().copied().collect()
}

pub fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).unwrap()
}

pub fn k_bar(n: usize) -> Graph {
    Graph::empty(n)
}

pub fn star(leaves: usize) -> Graph {
    Graph::from_fn(leaves + 1, |u, _| u == 0)
}

/// Nonisomorphic graphs on `n` vertices, grown one vertex at a time and
/// deduplicated by a canonical adjacency code.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut layer = vec![Graph::empty(0)];
    for m in 1..=n {
        let mut seen = std::collections::HashSet::new();
        let mut next = Vec::new();
        for base in &layer {
            for nb in 0u32..(1 << (m - 1)) {
                let mut edges = base.edges();
                edges.extend((0..m - 1).filter(|&i| nb >> i & 1 == 1).map(|i| (i, m - 1)));
                let h = Graph::from_edges(m, &edges).unwrap();
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        layer = next;
    }
    layer
}

/// Lexicographically largest adjacency bit string over vertex orders that
/// respect a degree-based refinement.
pub fn canonical_code(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let inv: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.neighbors(w).len()).collect();
            nd.sort_unstable();
            (g.neighbors(v).len(), nd)
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| inv[a].cmp(&inv[b]));
    // cells of equal invariant
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match cells.last_mut() {
            Some(c) if inv[c[0]] == inv[v] => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best: Option<Vec<bool>> = None;
    let mut perm = Vec::with_capacity(n);
    permute_cells(g, &cells, 0, &mut perm, &mut best);
    best.unwrap_or_default()
}

fn permute_cells(g: &Graph, cells: &[Vec<usize>], ci: usize, perm: &mut Vec<usize>, best: &mut Option<Vec<bool>>) {
    if ci == cells.len() {
        let n = perm.len();
        let mut code = Vec::with_capacity(n * n / 2);
        for i in 0..n {
            for j in i + 1..n {
                code.push(g.has_edge(perm[i], perm[j]));
            }
        }
        if best.as_ref().map_or(true, |b| code > *b) {
            *best = Some(code);
        }
        return;
    }
    let mut cell = cells[ci].clone();
    heap_permutations(&mut cell, &mut |p| {
        let len = perm.len();
        perm.extend_from_slice(p);
        permute_cells(g, cells, ci + 1, perm, best);
        perm.truncate(len);
    });
}

fn heap_permutations(items: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    fn rec(k: usize, items: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if k <= 1 {
            f(items);
            return;
        }
        for i in 0..k {
            rec(k - 1, items, f);
            let j = if k % 2 == 0 { i } else { 0 };
            items.swap(j, k - 1);
        }
    }
    let k = items.len();
    rec(k, items, f);
}
