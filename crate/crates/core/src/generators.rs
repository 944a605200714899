//! Extremal families: instances whose order meets (or approaches) the bound
//! for their class, each bundled with a solution and checked on creation.

use std::collections::BTreeSet;

use crate::cograph::{self, CographSummary};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::models::{rat, Cotree, IntervalModel, Model, PermutationModel, Rational};
use crate::verify::{self, ProblemKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalInstance {
    pub family: String,
    pub model: Model,
    /// `None` for cograph families, which certify a value rather than a set.
    pub solution: Option<VertexSet>,
    pub kind: ProblemKind,
    pub claimed_n: usize,
    pub claimed_k: usize,
    pub claimed_d: Option<usize>,
    /// `(emp, univ)` for cograph families.
    pub flags: Option<(bool, bool)>,
}

impl ExtremalInstance {
    /// Re-runs the checks done at generation time.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::SelfCheck(format!("{}: {msg}", self.family)));
        let g = self.model.to_graph()?;
        if g.n() != self.claimed_n {
            return fail(format!("n = {} but {} claimed", g.n(), self.claimed_n));
        }
        if let Some(d) = self.claimed_d {
            if g.diameter()? != d {
                return fail(format!("diameter {} but {d} claimed", g.diameter()?));
            }
        }
        match (&self.solution, &self.model) {
            (Some(s), _) => {
                if s.len() != self.claimed_k {
                    return fail(format!("solution has {} members, {} claimed", s.len(), self.claimed_k));
                }
                if let Some(v) = verify::check(&g, s, self.kind)? {
                    return fail(format!("verifier rejects solution ({v})"));
                }
            }
            (None, Model::Cotree(t)) => {
                let got = match self.kind {
                    ProblemKind::SepId => cograph::sep_id_dp(t)?,
                    ProblemKind::SepLd => cograph::sep_ld_dp(t),
                    other => return fail(format!("no cograph value for {other}")),
                };
                let (emp, univ) = self.flags.unwrap_or_default();
                if got != (CographSummary { k: self.claimed_k, emp, univ }) {
                    return fail(format!("dp gives {got:?}"));
                }
            }
            (None, _) => return fail("missing solution".into()),
        }
        Ok(())
    }

    /// `family kind k D n solution=<list>`; `D` is `-` when absent.
    pub fn manifest_line(&self) -> String {
        let d = self.claimed_d.map_or("-".to_string(), |d| d.to_string());
        let sol = match &self.solution {
            Some(s) => s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","),
            None => "-".into(),
        };
        format!("{} {} {} {} {} solution={}", self.family, self.kind, self.claimed_k, d, self.claimed_n, sol)
    }
}

fn finish(family: &str, model: Model, solution: VertexSet, kind: ProblemKind, d: Option<usize>) -> Result<ExtremalInstance> {
    let inst = ExtremalInstance {
        family: family.to_string(),
        claimed_n: model.n(),
        claimed_k: solution.len(),
        model,
        solution: Some(solution),
        kind,
        claimed_d: d,
        flags: None,
    };
    inst.validate()?;
    Ok(inst)
}

fn intervals(family: &str, iv: Vec<(Rational, Rational)>, s: VertexSet, kind: ProblemKind, d: Option<usize>) -> Result<ExtremalInstance> {
    finish(family, Model::Intervals(IntervalModel::new(iv)?), s, kind, d)
}

fn int(x: i64) -> Rational {
    Rational::from_integer(x)
}

fn need(cond: bool, k: usize) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::KTooSmall(k))
    }
}

fn need_even(k: usize) -> Result<()> {
    need(k >= 2, k)?;
    if k % 2 == 1 {
        return Err(Error::BadParity(k));
    }
    Ok(())
}

fn need_d(d: usize, min: usize) -> Result<()> {
    if d < min {
        return Err(Error::BadParameter(format!("D = {d} must be at least {min}")));
    }
    Ok(())
}

// ---------------------------------------------------------------- intervals

/// All `]i,j[` with `1 <= i < j <= k+1`, lexicographic; the unit ones first in `S`.
fn all_spans(k: usize) -> (Vec<(Rational, Rational)>, VertexSet) {
    let mut iv = Vec::new();
    let mut s = VertexSet::new();
    for i in 1..=k as i64 + 1 {
        for j in i + 1..=k as i64 + 1 {
            if j == i + 1 {
                s.insert(iv.len());
            }
            iv.push((int(i), int(j)));
        }
    }
    (iv, s)
}

pub fn ext_interval_ic(k: usize) -> Result<ExtremalInstance> {
    need(k >= 1, k)?;
    let (iv, s) = all_spans(k);
    intervals("interval-ic", iv, s, ProblemKind::Ic, None)
}

pub fn ext_interval_ld(k: usize) -> Result<ExtremalInstance> {
    need(k >= 1, k)?;
    let (mut iv, s) = all_spans(k);
    let copies: Vec<_> = s.iter().map(|&v| iv[v]).collect();
    iv.extend(copies);
    intervals("interval-ld", iv, s, ProblemKind::Ld, None)
}

/// Code intervals come in overlapping pairs; every run `c_a..c_b` of at
/// least two consecutive codes is hit by exactly one further interval.
pub fn ext_interval_old(k: usize) -> Result<ExtremalInstance> {
    need_even(k)?;
    let mut iv = Vec::new();
    for p in 1..=k as i64 / 2 {
        iv.push((int(4 * p), int(4 * p + 2)));
        iv.push((int(4 * p + 1), int(4 * p + 3)));
    }
    let s: VertexSet = (0..k).collect();
    for a in 1..=k as i64 {
        for b in a + 1..=k as i64 {
            let (p, q) = ((a + 1) / 2, (b + 1) / 2);
            let l = if a % 2 == 1 { rat(8 * p - 1, 2) } else { int(4 * p + 2) };
            let r = if b % 2 == 1 { int(4 * q + 1) } else { rat(8 * q + 7, 2) };
            iv.push((l, r));
        }
    }
    intervals("interval-old", iv, s, ProblemKind::Old, None)
}

/// Rows of `k/2` staggered long intervals plus short fillers after each
/// row. With `k = 2` one extra row is needed to reach diameter `D`.
pub fn ext_interval_md(k: usize, d: usize) -> Result<ExtremalInstance> {
    need_even(k)?;
    need_d(d, 2)?;
    let h = (k / 2) as i64;
    let l = h + 1;
    let rows = if h >= 2 { d as i64 } else { d as i64 + 1 };
    let mut iv = Vec::new();
    for j in 1..=rows {
        for i in 1..=h {
            iv.push((int((j - 1) * l + i), int(j * l + i) + rat(1, 2)));
        }
    }
    let at = |i: i64, j: i64| ((j - 1) * h + i - 1) as usize;
    let s: VertexSet = (1..=h).flat_map(|i| [at(i, 1), at(i, rows)]).collect();
    let mut base = iv.clone();
    base.sort();
    for j in 1..rows {
        for i in 1..=h {
            let e = iv[at(i, j)].1;
            let after: Vec<_> = base.iter().filter(|x| x.0 > e).take(h as usize + 1).collect();
            if after.len() <= h as usize {
                continue;
            }
            let fillers: Vec<_> = after.iter().map(|x| (e + rat(1, 4), x.0 - rat(1, 8))).collect();
            iv.extend(fillers);
        }
    }
    intervals("interval-md", iv, s, ProblemKind::Rs, Some(d))
}

// ----------------------------------------------------------- unit intervals

fn unit(x: Rational) -> (Rational, Rational) {
    (x, x + 1)
}

fn odd_path(k: usize) -> (Vec<(Rational, Rational)>, VertexSet) {
    let iv = (0..2 * k as i64 - 1).map(|m| unit(rat(m, 2))).collect();
    (iv, (0..2 * k - 1).step_by(2).collect())
}

pub fn ext_unit_ic(k: usize) -> Result<ExtremalInstance> {
    need(k >= 1, k)?;
    let (iv, s) = odd_path(k);
    intervals("unit-ic", iv, s, ProblemKind::Ic, None)
}

pub fn ext_unit_ld(k: usize) -> Result<ExtremalInstance> {
    need(k >= 1, k)?;
    let (mut iv, s) = odd_path(k);
    let copies: Vec<_> = s.iter().map(|&v| iv[v]).collect();
    iv.extend(copies);
    intervals("unit-ld", iv, s, ProblemKind::Ld, None)
}

/// Path on `3k-1` unit intervals with two of every three in `S`, plus `k`
/// intervals each hitting one pair of consecutive code intervals. The
/// solution has `2k` members.
pub fn ext_unit_old(k: usize) -> Result<ExtremalInstance> {
    need(k >= 1, k)?;
    let m = 3 * k as i64 - 1;
    let mut iv: Vec<_> = (0..m).map(|i| unit(rat(2 * i, 3))).collect();
    let s = (0..m as usize).filter(|i| i % 3 != 2).collect();
    iv.extend((0..k as i64).map(|i| unit(int(2 * i) + rat(1, 3))));
    intervals("unit-old", iv, s, ProblemKind::Old, None)
}

/// The `k`-th power of the path on `kD+1` vertices. Consecutive left ends are
/// `1/(k+1)` apart so that vertices `k` steps apart still overlap.
pub fn ext_unit_md(k: usize, d: usize) -> Result<ExtremalInstance> {
    need(k >= 1, k)?;
    need_d(d, 1)?;
    let iv = (0..=(k * d) as i64).map(|i| unit(rat(i, k as i64 + 1))).collect();
    intervals("unit-md", iv, (0..k).collect(), ProblemKind::Rs, Some(d))
}

// ------------------------------------------------------------- permutations

/// Ranks of distinct keys.
fn ranks<T: Ord>(keys: &[T]) -> Vec<i64> {
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut r = vec![0; keys.len()];
    for (pos, &x) in order.iter().enumerate() {
        r[x] = pos as i64;
    }
    r
}

fn rank_segments<T: Ord + Copy>(segs: &[(T, T)]) -> Vec<(i64, i64)> {
    let t = ranks(&segs.iter().map(|s| s.0).collect::<Vec<_>>());
    let b = ranks(&segs.iter().map(|s| s.1).collect::<Vec<_>>());
    t.into_iter().zip(b).collect()
}

fn crosses<T: Ord>(a: &(T, T), b: &(T, T)) -> bool {
    (a.0 < b.0) != (a.1 < b.1)
}

fn segment_graph<T: Ord>(segs: &[(T, T)]) -> Graph {
    Graph::from_fn(segs.len(), |u, v| crosses(&segs[u], &segs[v]))
}

/// Segments realising the path `0 - 1 - ... - (k-1)`.
fn zigzag(k: usize) -> Vec<(i64, i64)> {
    let top: Vec<usize> = (0..k).map(|i| if i % 2 == 0 { i + 1 } else { i - 1 }).collect();
    let bot: Vec<usize> = (0..k)
        .map(|i| match i {
            0 => 0,
            _ if i % 2 == 0 => i - 1,
            _ => i + 1,
        })
        .collect();
    ranks(&top).into_iter().zip(ranks(&bot)).collect()
}

/// Adds a segment crossing exactly `nbrs`, trying every pair of gaps.
fn insert_vertex(segs: &mut Vec<(i64, i64)>, nbrs: &VertexSet) -> Result<()> {
    let n = segs.len() as i64;
    *segs = rank_segments(segs).into_iter().map(|(t, b)| (2 * t, 2 * b)).collect();
    for tt in (-1..2 * n).step_by(2) {
        for bb in (-1..2 * n).step_by(2) {
            let cand = (tt, bb);
            let hit: VertexSet = (0..segs.len()).filter(|&x| crosses(&cand, &segs[x])).collect();
            if &hit == nbrs {
                segs.push(cand);
                return Ok(());
            }
        }
    }
    Err(Error::SelfCheck(format!("no segment crosses exactly {nbrs:?}")))
}

fn permutation(family: &str, segs: Vec<(i64, i64)>, s: VertexSet, kind: ProblemKind, d: Option<usize>) -> Result<ExtremalInstance> {
    finish(family, Model::Permutation(PermutationModel::new(segs)?), s, kind, d)
}

/// Solution segments form a path; one extra segment per admissible cell
/// (top gap, bottom gap) whose signature is new and nonempty.
fn perm_cells(family: &str, k: usize, kind: ProblemKind) -> Result<ExtremalInstance> {
    let path = zigzag(k);
    let sol: Vec<usize> = (0..k).collect();
    let closed = kind != ProblemKind::Old;
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    if kind != ProblemKind::Ld {
        // signatures already taken by the solution vertices themselves
        for &x in &sol {
            seen.insert(sol.iter().copied().filter(|&y| (closed && y == x) || crosses(&path[x], &path[y])).collect());
        }
    }
    let m = ((k + 1) * (k + 1) + 1) as i64;
    let mut segs: Vec<(i64, i64)> = path.iter().map(|&(t, b)| ((2 * t + 1) * m, (2 * b + 1) * m)).collect();
    let mut counter = 0;
    for i in 0..=k as i64 {
        for j in 0..=k as i64 {
            let sig: Vec<usize> = sol.iter().copied().filter(|&x| (i <= path[x].0) != (j <= path[x].1)).collect();
            if !sig.is_empty() && seen.insert(sig) {
                segs.push((2 * i * m + counter, 2 * j * m + counter));
                counter += 1;
            }
        }
    }
    permutation(family, segs, sol.into_iter().collect(), kind, None)
}

pub fn ext_perm_ic(k: usize) -> Result<ExtremalInstance> {
    need(k >= 3, k)?;
    perm_cells("perm-ic", k, ProblemKind::Ic)
}

pub fn ext_perm_ld(k: usize) -> Result<ExtremalInstance> {
    need(k >= 3, k)?;
    perm_cells("perm-ld", k, ProblemKind::Ld)
}

/// Needs `k >= 4`: the open neighbourhoods of a 3-vertex path collide.
pub fn ext_perm_old(k: usize) -> Result<ExtremalInstance> {
    need(k >= 4, k)?;
    if k % 2 == 1 {
        return Err(Error::BadParity(k));
    }
    perm_cells("perm-old", k, ProblemKind::Old)
}

/// `h` translated copies of a path on `m` vertices; `S` is the path ends.
fn md_paths(h: i64, m: i64) -> (Vec<(Rational, Rational)>, VertexSet) {
    let (w, p) = (h + 2, 2 * h + 2);
    let mut segs = Vec::new();
    let mut s = VertexSet::new();
    for layer in 0..h {
        let shift = rat(5 * layer, 4);
        for u in 1..=m {
            let (t, b) = if u % 2 == 1 {
                let a = (u - 1) / 2;
                (p * a + w, p * a)
            } else {
                let a = u / 2;
                (p * a - w + 1, p * a + 1)
            };
            if u == 1 || u == m {
                s.insert(segs.len());
            }
            segs.push((int(t) + shift, int(b) + shift));
        }
    }
    (segs, s)
}

/// Complete bipartite `K_{h+1,h+1}` minus one vertex per side in `S`.
fn md_biclique(h: i64) -> (Vec<(i64, i64)>, VertexSet) {
    let mut segs: Vec<(i64, i64)> = (0..=h).map(|i| (i, h + 1 + i)).collect();
    segs.extend((0..=h).map(|j| (h + 1 + j, j)));
    let s = (0..segs.len()).filter(|&v| v != h as usize && v != 2 * h as usize + 1).collect();
    (segs, s)
}

/// Shared skeleton of the two resolving-set families. Returns integer
/// segments, `S`, and whether fillers may be added (the path-copies case).
fn md_skeleton(k: usize, d: usize) -> Result<(Vec<(Rational, Rational)>, VertexSet, bool)> {
    need_even(k)?;
    need_d(d, 2)?;
    let h = (k / 2) as i64;
    let as_rat = |segs: Vec<(i64, i64)>| segs.into_iter().map(|(t, b)| (int(t), int(b))).collect();
    if h == 1 {
        return Ok((as_rat(zigzag(d + 1)), [0, d].into_iter().collect(), false));
    }
    if d == 2 {
        let (segs, s) = md_biclique(h);
        return Ok((as_rat(segs), s, false));
    }
    let (segs, s) = md_paths(h, d as i64 - 1);
    Ok((segs, s, true))
}

fn resolves_with_diameter(segs: &[(Rational, Rational)], s: &VertexSet, d: usize) -> bool {
    let g = segment_graph(segs);
    g.diameter().ok() == Some(d) && matches!(verify::check(&g, s, ProblemKind::Rs), Ok(None))
}

/// Path copies plus greedily placed fillers: for each copy and each even
/// stretch of its path, candidate segments with tops in every current gap
/// and bottoms just right of the stretch start are kept when `S` still
/// resolves and the diameter stays `D`.
pub fn ext_perm_md(k: usize, d: usize) -> Result<ExtremalInstance> {
    let (mut segs, s, fill) = md_skeleton(k, d)?;
    if fill {
        let h = (k / 2) as i64;
        let m = d as i64 - 1;
        let p = 2 * h + 2;
        for layer in 0..h {
            for a in 0..(m + 1) / 2 {
                if 2 * a + 2 > m {
                    continue;
                }
                let lo = int(p * a) + rat(5 * layer, 4);
                let mut tops: Vec<Rational> = segs.iter().map(|x| x.0).collect();
                tops.sort();
                let mut gaps: Vec<Rational> = tops.windows(2).map(|w| (w[0] + w[1]) / 2).collect();
                gaps.push(tops[tops.len() - 1] + rat(1, 2));
                gaps.push(tops[0] - rat(1, 2));
                let mut placed = 0;
                for g in gaps {
                    let b = lo + rat(placed + 1, 64);
                    if segs.iter().any(|x| x.1 == b || x.0 == g) {
                        continue;
                    }
                    segs.push((g, b));
                    if resolves_with_diameter(&segs, &s, d) {
                        placed += 1;
                    } else {
                        segs.pop();
                    }
                }
            }
        }
    }
    permutation("perm-md", rank_segments(&segs), s, ProblemKind::Rs, Some(d))
}

/// The path copies alone, which form a bipartite permutation graph.
pub fn ext_bipperm_md(k: usize, d: usize) -> Result<ExtremalInstance> {
    let (segs, s, _) = md_skeleton(k, d)?;
    permutation("bipperm-md", rank_segments(&segs), s, ProblemKind::Rs, Some(d))
}

/// Path model grown one vertex at a time.
fn grown_path(len: usize, extra: &[VertexSet]) -> Result<Vec<(i64, i64)>> {
    let mut segs = zigzag(len);
    for nbrs in extra {
        insert_vertex(&mut segs, nbrs)?;
    }
    Ok(rank_segments(&segs))
}

fn pendants(of: impl IntoIterator<Item = usize>) -> Vec<VertexSet> {
    of.into_iter().map(|v| [v].into_iter().collect()).collect()
}

/// Odd path with a pendant on every second vertex.
pub fn ext_bipperm_ld(k: usize) -> Result<ExtremalInstance> {
    need(k >= 1, k)?;
    let s: VertexSet = (0..2 * k - 1).step_by(2).collect();
    let segs = grown_path(2 * k - 1, &pendants(s.iter().copied()))?;
    permutation("bipperm-ld", segs, s, ProblemKind::Ld, None)
}

/// Odd path, plus one vertex adjacent to three consecutive code vertices
/// centred at each inner even position.
pub fn ext_bipperm_ic(k: usize) -> Result<ExtremalInstance> {
    need(k >= 3, k)?;
    let s: VertexSet = (0..2 * k - 1).step_by(2).collect();
    let extra: Vec<VertexSet> = (2..=2 * k - 4).step_by(2).map(|e| [e - 2, e, e + 2].into_iter().collect()).collect();
    let segs = grown_path(2 * k - 1, &extra)?;
    permutation("bipperm-ic", segs, s, ProblemKind::Ic, None)
}

/// Path on `k` vertices, all in `S`, with pendants everywhere except on the
/// neighbours of the two ends. No such graph exists for `k = 3`.
pub fn ext_bipperm_old(k: usize) -> Result<ExtremalInstance> {
    need(k >= 4, k)?;
    let segs = grown_path(k, &pendants((0..k).filter(|&v| v != 1 && v != k - 2)))?;
    permutation("bipperm-old", segs, (0..k).collect(), ProblemKind::Old, None)
}

// ------------------------------------------------------------------ cographs

#[derive(Clone, Copy, PartialEq, Eq)]
enum Flavour {
    Id,
    Ld,
}

fn k1() -> Cotree {
    Cotree::leaf(0)
}

fn u(parts: Vec<Cotree>) -> Cotree {
    Cotree::union(parts).expect("nonempty parts")
}

fn j(parts: Vec<Cotree>) -> Cotree {
    Cotree::join(parts).expect("nonempty parts")
}

fn id_family(n: usize, variant: u8) -> Option<Cotree> {
    Some(match (variant, n) {
        (2, 3) => Cotree::edgeless(3),
        (2, 4) => Cotree::edgeless(4),
        (3, 3) => j(vec![k1(), Cotree::edgeless(2)]),
        (3, 4) => j(vec![Cotree::edgeless(2), Cotree::edgeless(2)]),
        (1, n) if n >= 6 => j(vec![Cotree::edgeless(3), id_family(n - 3, 2)?]),
        (2, n) if n >= 5 => u(vec![k1(), id_family(n - 1, 4)?]),
        (3, n) if n >= 5 => j(vec![k1(), id_family(n - 1, 4)?]),
        (4, n) if n >= 4 => u(vec![k1(), id_family(n - 1, 3)?]),
        _ => return None,
    })
}

fn ld_family(n: usize, variant: u8) -> Option<Cotree> {
    Some(match (variant, n) {
        (2, 2) => Cotree::edgeless(2),
        (2, 3) => Cotree::edgeless(3),
        (2, 4) => u(vec![Cotree::edgeless(2), Cotree::clique(2)]),
        (3, 2) => Cotree::clique(2),
        (3, 3) => Cotree::clique(3),
        (3, 4) => j(vec![k1(), u(vec![k1(), Cotree::clique(2)])]),
        (1, n) if n >= 4 => u(vec![Cotree::clique(2), ld_family(n - 2, 3)?]),
        (2, n) if n >= 5 => u(vec![k1(), ld_family(n - 1, 1)?]),
        (3, n) if n >= 5 => j(vec![k1(), ld_family(n - 1, 1)?]),
        (4, n) if n >= 3 => u(vec![k1(), ld_family(n - 1, 3)?]),
        _ => return None,
    })
}

fn cograph_family(flavour: Flavour, n: usize, variant: u8) -> Result<ExtremalInstance> {
    let (tree, div, family, kind) = match flavour {
        Flavour::Id => (id_family(n, variant), 2, "cograph-id", ProblemKind::SepId),
        Flavour::Ld => (ld_family(n, variant), 3, "cograph-ld", ProblemKind::SepLd),
    };
    let tree = tree.ok_or(Error::Unreachable(n, variant))?;
    // variants 1..4 have flag profiles (emp, univ) = FF, TF, FT, TT
    let offset = [2, 1, 1, 0][variant as usize - 1];
    let flags = (variant == 2 || variant == 4, variant >= 3);
    let inst = ExtremalInstance {
        family: family.to_string(),
        model: Model::Cotree(tree),
        solution: None,
        kind,
        claimed_n: n,
        claimed_k: (n + offset).div_ceil(div),
        claimed_d: None,
        flags: Some(flags),
    };
    inst.validate()?;
    Ok(inst)
}

pub fn ext_cograph_id(n: usize, variant: u8) -> Result<ExtremalInstance> {
    cograph_family(Flavour::Id, n, variant)
}

pub fn ext_cograph_ld(n: usize, variant: u8) -> Result<ExtremalInstance> {
    cograph_family(Flavour::Ld, n, variant)
}

// ---------------------------------------------------------------- dispatch

pub const FAMILIES: [&str; 18] = [
    "interval-ic",
    "interval-ld",
    "interval-old",
    "interval-md",
    "unit-ic",
    "unit-ld",
    "unit-old",
    "unit-md",
    "perm-ic",
    "perm-ld",
    "perm-old",
    "perm-md",
    "bipperm-ic",
    "bipperm-ld",
    "bipperm-old",
    "bipperm-md",
    "cograph-id",
    "cograph-ld",
];

/// Parameters of a family by name. Cograph families read `n` and `variant`,
/// the others `k` and, for resolving-set families, `d`.
#[derive(Clone, Copy, Debug, Default)]
pub struct FamilyParams {
    pub k: Option<usize>,
    pub d: Option<usize>,
    pub n: Option<usize>,
    pub variant: Option<u8>,
}

pub fn generate(family: &str, p: FamilyParams) -> Result<ExtremalInstance> {
    let missing = |what: &str| Error::BadParameter(format!("family {family} needs {what}"));
    let fam = family.to_ascii_lowercase().replace('_', "-");
    if fam.starts_with("cograph-") {
        let n = p.n.ok_or_else(|| missing("--n"))?;
        let v = p.variant.ok_or_else(|| missing("a variant"))?;
        if !(1..=4).contains(&v) {
            return Err(Error::BadParameter(format!("variant {v} is not in 1..4")));
        }
        return match fam.as_str() {
            "cograph-id" => ext_cograph_id(n, v),
            "cograph-ld" => ext_cograph_ld(n, v),
            _ => Err(Error::BadParameter(format!("unknown family `{family}`"))),
        };
    }
    let k = p.k.ok_or_else(|| missing("--k"))?;
    let d = || p.d.ok_or(Error::MissingDiameter);
    match fam.as_str() {
        "interval-ic" => ext_interval_ic(k),
        "interval-ld" => ext_interval_ld(k),
        "interval-old" => ext_interval_old(k),
        "interval-md" => ext_interval_md(k, d()?),
        "unit-ic" => ext_unit_ic(k),
        "unit-ld" => ext_unit_ld(k),
        "unit-old" => ext_unit_old(k),
        "unit-md" => ext_unit_md(k, d()?),
        "perm-ic" => ext_perm_ic(k),
        "perm-ld" => ext_perm_ld(k),
        "perm-old" => ext_perm_old(k),
        "perm-md" => ext_perm_md(k, d()?),
        "bipperm-ic" => ext_bipperm_ic(k),
        "bipperm-ld" => ext_bipperm_ld(k),
        "bipperm-old" => ext_bipperm_old(k),
        "bipperm-md" => ext_bipperm_md(k, d()?),
        _ => Err(Error::BadParameter(format!("unknown family `{family}`"))),
    }
}
