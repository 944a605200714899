use std::collections::HashSet;
use std::fmt;

use num_rational::Ratio;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub type Rational = Ratio<i64>;

pub fn rat(num: i64, den: i64) -> Rational {
    Ratio::new(num, den)
}

/// Open intervals `]left, right[` with exact rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalModel {
    pub intervals: Vec<(Rational, Rational)>,
}

impl IntervalModel {
    pub fn new(intervals: Vec<(Rational, Rational)>) -> Result<Self> {
        let m = IntervalModel { intervals };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        match self.intervals.iter().position(|(l, r)| l >= r) {
            Some(i) => Err(Error::DegenerateInterval(i)),
            None => Ok(()),
        }
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn to_graph(&self) -> Result<Graph> {
        self.validate()?;
        let iv = &self.intervals;
        Ok(Graph::from_fn(iv.len(), |u, v| iv[u].0.max(iv[v].0) < iv[u].1.min(iv[v].1)))
    }

    pub fn is_unit(&self) -> bool {
        self.intervals.iter().all(|(l, r)| r - l == Rational::from_integer(1))
    }
}

/// Segments between two parallel lines, given by distinct top and bottom positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationModel {
    /// `(t, b)` per vertex.
    pub segments: Vec<(i64, i64)>,
}

impl PermutationModel {
    pub fn new(segments: Vec<(i64, i64)>) -> Result<Self> {
        let m = PermutationModel { segments };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        let mut tops = HashSet::new();
        let mut bots = HashSet::new();
        for &(t, b) in &self.segments {
            if !tops.insert(t) {
                return Err(Error::DuplicateIndex("top", t));
            }
            if !bots.insert(b) {
                return Err(Error::DuplicateIndex("bottom", b));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn to_graph(&self) -> Result<Graph> {
        self.validate()?;
        let s = &self.segments;
        Ok(Graph::from_fn(s.len(), |u, v| (s[u].0 - s[v].0).signum() * (s[u].1 - s[v].1).signum() < 0))
    }

    /// Same model with top and bottom exchanged; compiles to the same graph.
    pub fn swapped(&self) -> PermutationModel {
        PermutationModel { segments: self.segments.iter().map(|&(t, b)| (b, t)).collect() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoKind {
    Union,
    Join,
}

impl CoKind {
    pub fn flip(self) -> CoKind {
        match self {
            CoKind::Union => CoKind::Join,
            CoKind::Join => CoKind::Union,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoNode {
    Leaf(usize),
    Inner(CoKind, Vec<usize>),
}

/// Cotree stored as an arena; `root` indexes into `nodes`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cotree {
    nodes: Vec<CoNode>,
    root: usize,
    leaves: usize,
}

impl Cotree {
    pub fn leaf(v: usize) -> Cotree {
        Cotree { nodes: vec![CoNode::Leaf(v)], root: 0, leaves: 1 }
    }

    pub fn from_nodes(nodes: Vec<CoNode>, root: usize) -> Result<Cotree> {
        let leaves = nodes.iter().filter(|n| matches!(n, CoNode::Leaf(_))).count();
        let t = Cotree { nodes, root, leaves };
        t.validate()?;
        Ok(t)
    }

    pub fn nodes(&self) -> &[CoNode] {
        &self.nodes
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::MalformedCotree(m.to_string()));
        if self.root >= self.nodes.len() {
            return bad("root out of range");
        }
        let mut visited = vec![false; self.nodes.len()];
        let mut labels = vec![false; self.leaves];
        let mut stack = vec![self.root];
        while let Some(i) = stack.pop() {
            if visited[i] {
                return bad("node reached twice");
            }
            visited[i] = true;
            match &self.nodes[i] {
                CoNode::Leaf(v) => {
                    if *v >= self.leaves || labels[*v] {
                        return bad(&format!("leaf labels must be exactly 0..{}", self.leaves));
                    }
                    labels[*v] = true;
                }
                CoNode::Inner(_, ch) => {
                    if ch.len() < 2 {
                        return bad("internal node with fewer than two children");
                    }
                    for &c in ch {
                        if c >= self.nodes.len() {
                            return bad("child out of range");
                        }
                        stack.push(c);
                    }
                }
            }
        }
        if visited.iter().any(|v| !v) {
            return bad("unreachable nodes");
        }
        Ok(())
    }

    /// Combines subtrees under one operator. Leaf labels of later parts are
    /// shifted so the result is labelled `0..n` in part order.
    pub fn combine(kind: CoKind, parts: Vec<Cotree>) -> Result<Cotree> {
        if parts.len() < 2 {
            return Err(Error::MalformedCotree("operator needs at least two operands".into()));
        }
        let mut nodes = Vec::new();
        let mut children = Vec::new();
        let mut offset = 0;
        for p in parts {
            let base = nodes.len();
            for node in p.nodes {
                nodes.push(match node {
                    CoNode::Leaf(v) => CoNode::Leaf(v + offset),
                    CoNode::Inner(k, ch) => CoNode::Inner(k, ch.into_iter().map(|c| c + base).collect()),
                });
            }
            children.push(p.root + base);
            offset += p.leaves;
        }
        nodes.push(CoNode::Inner(kind, children));
        let root = nodes.len() - 1;
        Ok(Cotree { nodes, root, leaves: offset }.canonical())
    }

    pub fn union(parts: Vec<Cotree>) -> Result<Cotree> {
        Cotree::combine(CoKind::Union, parts)
    }

    pub fn join(parts: Vec<Cotree>) -> Result<Cotree> {
        Cotree::combine(CoKind::Join, parts)
    }

    /// Edgeless graph on `n` vertices (`n = 1` gives a single leaf).
    pub fn edgeless(n: usize) -> Cotree {
        Cotree::flat(CoKind::Union, n)
    }

    pub fn clique(n: usize) -> Cotree {
        Cotree::flat(CoKind::Join, n)
    }

    fn flat(kind: CoKind, n: usize) -> Cotree {
        assert!(n >= 1);
        if n == 1 {
            return Cotree::leaf(0);
        }
        let mut nodes: Vec<CoNode> = (0..n).map(CoNode::Leaf).collect();
        nodes.push(CoNode::Inner(kind, (0..n).collect()));
        Cotree { nodes, root: n, leaves: n }
    }

    /// Nodes in an order where every child precedes its parent.
    pub fn postorder(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((i, expanded)) = stack.pop() {
            if expanded {
                order.push(i);
                continue;
            }
            stack.push((i, true));
            if let CoNode::Inner(_, ch) = &self.nodes[i] {
                stack.extend(ch.iter().rev().map(|&c| (c, false)));
            }
        }
        order
    }

    /// Merges every child whose operator equals its parent's into the parent.
    pub fn canonical(&self) -> Cotree {
        let mut nodes = Vec::with_capacity(self.nodes.len());
        let root = self.rebuild(self.root, &mut nodes);
        Cotree { nodes, root, leaves: self.leaves }.compact()
    }

    /// Drops nodes unreachable from the root.
    fn compact(&self) -> Cotree {
        let mut new_index = vec![usize::MAX; self.nodes.len()];
        let mut nodes = Vec::with_capacity(self.nodes.len());
        for i in self.postorder() {
            nodes.push(match &self.nodes[i] {
                CoNode::Leaf(v) => CoNode::Leaf(*v),
                CoNode::Inner(k, ch) => CoNode::Inner(*k, ch.iter().map(|&c| new_index[c]).collect()),
            });
            new_index[i] = nodes.len() - 1;
        }
        let root = nodes.len() - 1;
        Cotree { nodes, root, leaves: self.leaves }
    }

    fn rebuild(&self, start: usize, out: &mut Vec<CoNode>) -> usize {
        // iterative: map old node -> new index, processing in postorder
        let order = {
            let mut order = Vec::new();
            let mut stack = vec![(start, false)];
            while let Some((i, expanded)) = stack.pop() {
                if expanded {
                    order.push(i);
                    continue;
                }
                stack.push((i, true));
                if let CoNode::Inner(_, ch) = &self.nodes[i] {
                    stack.extend(ch.iter().rev().map(|&c| (c, false)));
                }
            }
            order
        };
        let mut new_index = vec![usize::MAX; self.nodes.len()];
        for i in order {
            let node = match &self.nodes[i] {
                CoNode::Leaf(v) => CoNode::Leaf(*v),
                CoNode::Inner(kind, ch) => {
                    let mut merged = Vec::with_capacity(ch.len());
                    for &c in ch {
                        let nc = new_index[c];
                        match &out[nc] {
                            CoNode::Inner(k2, grand) if k2 == kind => merged.extend(grand.iter().copied()),
                            _ => merged.push(nc),
                        }
                    }
                    CoNode::Inner(*kind, merged)
                }
            };
            out.push(node);
            new_index[i] = out.len() - 1;
        }
        new_index[start]
    }

    pub fn is_canonical(&self) -> bool {
        self.nodes.iter().all(|n| match n {
            CoNode::Leaf(_) => true,
            CoNode::Inner(k, ch) => ch.iter().all(|&c| match &self.nodes[c] {
                CoNode::Inner(k2, _) => k2 != k,
                CoNode::Leaf(_) => true,
            }),
        })
    }

    /// Cotree of the complement graph.
    pub fn complement(&self) -> Cotree {
        let nodes = self
            .nodes
            .iter()
            .map(|n| match n {
                CoNode::Leaf(v) => CoNode::Leaf(*v),
                CoNode::Inner(k, ch) => CoNode::Inner(k.flip(), ch.clone()),
            })
            .collect();
        Cotree { nodes, root: self.root, leaves: self.leaves }
    }

    pub fn root_kind(&self) -> Option<CoKind> {
        match &self.nodes[self.root] {
            CoNode::Leaf(_) => None,
            CoNode::Inner(k, _) => Some(*k),
        }
    }

    pub fn to_graph(&self) -> Graph {
        let mut leafsets: Vec<Vec<usize>> = vec![Vec::new(); self.nodes.len()];
        let mut edges = Vec::new();
        for i in self.postorder() {
            match &self.nodes[i] {
                CoNode::Leaf(v) => leafsets[i] = vec![*v],
                CoNode::Inner(kind, ch) => {
                    if *kind == CoKind::Join {
                        for (a, &ca) in ch.iter().enumerate() {
                            for &cb in &ch[a + 1..] {
                                for &u in &leafsets[ca] {
                                    edges.extend(leafsets[cb].iter().map(|&v| (u, v)));
                                }
                            }
                        }
                    }
                    let mut all = Vec::new();
                    for &c in ch {
                        all.append(&mut leafsets[c]);
                    }
                    leafsets[i] = all;
                }
            }
        }
        Graph::from_edges(self.leaves, &edges).expect("cotree leaves are in range")
    }

    /// Same shape with leaf labels renumbered in left-to-right order.
    pub fn relabelled_in_order(&self) -> Cotree {
        let mut t = self.clone();
        let mut next = 0;
        for i in self.postorder() {
            if let CoNode::Leaf(_) = t.nodes[i] {
                t.nodes[i] = CoNode::Leaf(next);
                next += 1;
            }
        }
        t
    }
}

impl fmt::Display for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // explicit stack so deep trees do not overflow
        enum Step {
            Node(usize),
            Close,
            Space,
        }
        let mut stack = vec![Step::Node(self.root)];
        while let Some(step) = stack.pop() {
            match step {
                Step::Close => write!(f, ")")?,
                Step::Space => write!(f, " ")?,
                Step::Node(i) => match &self.nodes[i] {
                    CoNode::Leaf(v) => write!(f, "{v}")?,
                    CoNode::Inner(k, ch) => {
                        write!(f, "({}", if *k == CoKind::Union { "U" } else { "J" })?;
                        stack.push(Step::Close);
                        for &c in ch.iter().rev() {
                            stack.push(Step::Node(c));
                            stack.push(Step::Space);
                        }
                    }
                },
            }
        }
        Ok(())
    }
}

/// Cotree for `g`, splitting on components and co-components.
pub fn cograph_recognize(g: &Graph) -> Result<Cotree> {
    if g.n() == 0 {
        return Err(Error::BadParameter("empty graph".into()));
    }
    let all: VertexSet = (0..g.n()).collect();
    let mut nodes = Vec::new();
    let root = recognize_into(g, &all, &mut nodes)?;
    Cotree::from_nodes(nodes, root)
}

fn recognize_into(g: &Graph, verts: &VertexSet, nodes: &mut Vec<CoNode>) -> Result<usize> {
    if verts.len() == 1 {
        nodes.push(CoNode::Leaf(*verts.iter().next().unwrap()));
        return Ok(nodes.len() - 1);
    }
    let sub = g.induced(verts);
    let local: Vec<usize> = verts.iter().copied().collect();
    let lift = |c: &VertexSet| -> VertexSet { c.iter().map(|&i| local[i]).collect() };
    let comps = sub.connected_components();
    let (kind, parts) = if comps.len() > 1 {
        (CoKind::Union, comps)
    } else {
        let co = sub.complement().connected_components();
        if co.len() == 1 {
            return Err(Error::NotCograph);
        }
        (CoKind::Join, co)
    };
    let mut children = Vec::with_capacity(parts.len());
    for p in &parts {
        children.push(recognize_into(g, &lift(p), nodes)?);
    }
    nodes.push(CoNode::Inner(kind, children));
    Ok(nodes.len() - 1)
}

/// Random canonical cotree on `leaves` leaves, built by repeatedly merging
/// two or three random subtrees under a random operator.
pub fn random_cotree<R: Rng>(leaves: usize, rng: &mut R) -> Cotree {
    assert!(leaves >= 1);
    let mut nodes: Vec<CoNode> = (0..leaves).map(CoNode::Leaf).collect();
    let mut pool: Vec<usize> = (0..leaves).collect();
    while pool.len() > 1 {
        let take = if pool.len() >= 3 && rng.gen_bool(0.3) { 3 } else { 2 };
        let mut ch = Vec::with_capacity(take);
        for _ in 0..take {
            let i = rng.gen_range(0..pool.len());
            ch.push(pool.swap_remove(i));
        }
        let kind = if rng.gen_bool(0.5) { CoKind::Union } else { CoKind::Join };
        nodes.push(CoNode::Inner(kind, ch));
        pool.push(nodes.len() - 1);
    }
    let root = pool[0];
    Cotree { nodes, root, leaves }.canonical()
}

/// Random canonical cotree without closed twins: no join node ends up with
/// two leaf children once same-kind nodes are merged.
pub fn random_twin_free_cotree<R: Rng>(leaves: usize, rng: &mut R) -> Cotree {
    assert!(leaves >= 1);
    let mut nodes: Vec<CoNode> = (0..leaves).map(CoNode::Leaf).collect();
    // (node, root kind, leaf children after merging)
    let mut pool: Vec<(usize, Option<CoKind>, usize)> = (0..leaves).map(|i| (i, None, 0)).collect();
    while pool.len() > 1 {
        let take = if pool.len() >= 3 && rng.gen_bool(0.3) { 3 } else { 2 };
        let mut ch = Vec::with_capacity(take);
        for _ in 0..take {
            let i = rng.gen_range(0..pool.len());
            ch.push(pool.swap_remove(i));
        }
        let leaf_children = |kind: CoKind| {
            ch.iter()
                .map(|&(_, k, l)| match k {
                    None => 1,
                    Some(k) if k == kind => l,
                    Some(_) => 0,
                })
                .sum::<usize>()
        };
        let kind = if leaf_children(CoKind::Join) <= 1 && rng.gen_bool(0.5) { CoKind::Join } else { CoKind::Union };
        let l = leaf_children(kind);
        nodes.push(CoNode::Inner(kind, ch.iter().map(|c| c.0).collect()));
        pool.push((nodes.len() - 1, Some(kind), l));
    }
    let root = pool[0].0;
    Cotree { nodes, root, leaves }.canonical()
}

/// Every canonical cotree on `n` leaves up to isomorphism, i.e. one cotree per
/// unlabelled cograph. Leaves are labelled in left-to-right order.
pub fn all_cotrees(n: usize) -> Vec<Cotree> {
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![Cotree::leaf(0)];
    }
    let mut shapes = ShapeTable::default();
    let mut out = Vec::new();
    for kind in [CoKind::Union, CoKind::Join] {
        for s in shapes.rooted(kind, n) {
            out.push(s.to_cotree());
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Shape {
    Leaf,
    Inner(CoKind, Vec<Shape>),
}

impl Shape {
    fn to_cotree(&self) -> Cotree {
        match self {
            Shape::Leaf => Cotree::leaf(0),
            Shape::Inner(k, ch) => Cotree::combine(*k, ch.iter().map(Shape::to_cotree).collect()).unwrap(),
        }
    }
}

#[derive(Default)]
struct ShapeTable {
    memo: std::collections::HashMap<(CoKind, usize), Vec<Shape>>,
}

impl ShapeTable {
    /// Shapes of size `n` usable as a child of a `parent` node.
    fn items(&mut self, parent: CoKind, n: usize) -> Vec<Shape> {
        if n == 1 {
            vec![Shape::Leaf]
        } else {
            self.rooted(parent.flip(), n)
        }
    }

    fn rooted(&mut self, kind: CoKind, n: usize) -> Vec<Shape> {
        if let Some(v) = self.memo.get(&(kind, n)) {
            return v.clone();
        }
        let mut result = Vec::new();
        let mut current = Vec::new();
        self.multisets(kind, n, n - 1, usize::MAX, &mut current, &mut result);
        self.memo.insert((kind, n), result.clone());
        result
    }

    /// Multisets of child shapes with sizes summing to `remaining`, emitted in
    /// nonincreasing (size, index) order to avoid duplicates.
    fn multisets(
        &mut self,
        kind: CoKind,
        remaining: usize,
        max_size: usize,
        max_idx: usize,
        current: &mut Vec<Shape>,
        out: &mut Vec<Shape>,
    ) {
        if remaining == 0 {
            if current.len() >= 2 {
                out.push(Shape::Inner(kind, current.clone()));
            }
            return;
        }
        for size in (1..=max_size.min(remaining)).rev() {
            let items = self.items(kind, size);
            if items.is_empty() {
                continue;
            }
            let top = if size == max_size { max_idx.min(items.len() - 1) } else { items.len() - 1 };
            for idx in (0..=top).rev() {
                current.push(items[idx].clone());
                self.multisets(kind, remaining - size, size, idx, current, out);
                current.pop();
            }
        }
    }
}

/// Labels of the leaves that are direct children of node `i`.
pub(crate) fn leaf_children(t: &Cotree, i: usize) -> Vec<usize> {
    match &t.nodes[i] {
        CoNode::Leaf(_) => Vec::new(),
        CoNode::Inner(_, ch) => ch
            .iter()
            .filter_map(|&c| match t.nodes[c] {
                CoNode::Leaf(v) => Some(v),
                _ => None,
            })
            .collect(),
    }
}

/// Any of the supported representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Model {
    Graph(Graph),
    Intervals(IntervalModel),
    Permutation(PermutationModel),
    Cotree(Cotree),
}

impl Model {
    pub fn to_graph(&self) -> Result<Graph> {
        match self {
            Model::Graph(g) => Ok(g.clone()),
            Model::Intervals(m) => m.to_graph(),
            Model::Permutation(m) => m.to_graph(),
            Model::Cotree(t) => Ok(t.to_graph()),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Model::Graph(g) => g.n(),
            Model::Intervals(m) => m.len(),
            Model::Permutation(m) => m.len(),
            Model::Cotree(t) => t.leaf_count(),
        }
    }
}
