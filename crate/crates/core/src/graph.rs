use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub type VertexSet = BTreeSet<usize>;

/// Per-vertex BFS distance; `None` marks an unreachable vertex.
pub type DistanceVector = Vec<Option<usize>>;

/// Simple undirected graph on vertices `0..n`. Neighbour lists are kept sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut sets = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::InvalidVertex(u));
            }
            if v >= n {
                return Err(Error::InvalidVertex(v));
            }
            if u == v {
                return Err(Error::BadParameter(format!("self-loop at {u}")));
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        Ok(Graph { adj: sets.into_iter().map(|s| s.into_iter().collect()).collect() })
    }

    /// Builds a graph from an adjacency predicate evaluated on every pair `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph { adj }
    }

    pub fn path(n: usize) -> Self {
        Graph::from_fn(n, |u, v| v == u + 1)
    }

    pub fn cycle(n: usize) -> Self {
        Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1 && n > 2))
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_fn(n, |_, _| true)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v))
        }
    }

    pub fn open_nbhd(&self, v: usize) -> Result<VertexSet> {
        self.check(v)?;
        Ok(self.adj[v].iter().copied().collect())
    }

    pub fn closed_nbhd(&self, v: usize) -> Result<VertexSet> {
        let mut s = self.open_nbhd(v)?;
        s.insert(v);
        Ok(s)
    }

    pub fn bfs_distances(&self, src: usize) -> Result<DistanceVector> {
        self.check(src)?;
        let mut dist = vec![None; self.n()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// All-pairs distance matrix, failing on a disconnected graph.
    pub fn distance_matrix(&self) -> Result<Vec<Vec<usize>>> {
        (0..self.n())
            .map(|s| {
                self.bfs_distances(s)?
                    .into_iter()
                    .map(|d| d.ok_or(Error::Disconnected))
                    .collect()
            })
            .collect()
    }

    pub fn diameter(&self) -> Result<usize> {
        if self.n() == 0 {
            return Err(Error::BadParameter("diameter of the empty graph".into()));
        }
        let dm = self.distance_matrix()?;
        Ok(dm.iter().flat_map(|row| row.iter().copied()).max().unwrap_or(0))
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.bfs_distances(0).unwrap().iter().all(Option::is_some)
    }

    fn twins_by(&self, key: impl Fn(usize) -> Vec<usize>) -> Vec<(usize, usize)> {
        let mut groups: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for v in 0..self.n() {
            groups.entry(key(v)).or_default().push(v);
        }
        let mut pairs = Vec::new();
        for members in groups.values() {
            for (i, &u) in members.iter().enumerate() {
                pairs.extend(members[i + 1..].iter().map(|&v| (u, v)));
            }
        }
        pairs.sort_unstable();
        pairs
    }

    /// Unordered pairs with equal closed neighbourhoods.
    pub fn closed_twins(&self) -> Vec<(usize, usize)> {
        self.twins_by(|v| {
            let mut nb = self.adj[v].clone();
            let pos = nb.partition_point(|&x| x < v);
            nb.insert(pos, v);
            nb
        })
    }

    /// Unordered pairs with equal open neighbourhoods.
    pub fn open_twins(&self) -> Vec<(usize, usize)> {
        self.twins_by(|v| self.adj[v].clone())
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|nb| nb.iter().map(|&v| v + off).collect()));
        Graph { adj }
    }

    pub fn complete_join(&self, other: &Graph) -> Graph {
        let (n1, n2) = (self.n(), other.n());
        let mut g = self.disjoint_union(other);
        for u in 0..n1 {
            g.adj[u].extend(n1..n1 + n2);
        }
        for v in n1..n1 + n2 {
            let mut nb: Vec<usize> = (0..n1).collect();
            nb.extend_from_slice(&g.adj[v]);
            g.adj[v] = nb;
        }
        g
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n(), |u, v| !self.has_edge(u, v))
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n()];
        let mut comps = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                comp.insert(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in sorted order.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let index: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adj = vec![Vec::new(); keep.len()];
        for (&v, &i) in &index {
            adj[i] = self.adj[v].iter().filter_map(|w| index.get(w).copied()).collect();
            adj[i].sort_unstable();
        }
        Graph { adj }
    }

    /// 2-colouring of every component, if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut colour: Vec<Option<bool>> = vec![None; self.n()];
        for s in 0..self.n() {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let cu = colour[u].unwrap();
                for &w in &self.adj[u] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cu);
                            stack.push(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Debug check of the structural invariants.
    pub fn is_well_formed(&self) -> bool {
        self.adj.iter().enumerate().all(|(u, nb)| {
            nb.windows(2).all(|w| w[0] < w[1])
                && nb.iter().all(|&v| v < self.n() && v != u && self.adj[v].binary_search(&u).is_ok())
        })
    }
}
