use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProblemKind {
    Ic,
    Ld,
    Old,
    Rs,
    SepId,
    SepLd,
    SepOld,
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 7] = [
        ProblemKind::Ic,
        ProblemKind::Ld,
        ProblemKind::Old,
        ProblemKind::Rs,
        ProblemKind::SepId,
        ProblemKind::SepLd,
        ProblemKind::SepOld,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProblemKind::Ic => "ic",
            ProblemKind::Ld => "ld",
            ProblemKind::Old => "old",
            ProblemKind::Rs => "md",
            ProblemKind::SepId => "sep-id",
            ProblemKind::SepLd => "sep-ld",
            ProblemKind::SepOld => "sep-old",
        }
    }

    /// Signature uses open neighbourhoods.
    pub fn is_open(self) -> bool {
        matches!(self, ProblemKind::Old | ProblemKind::SepOld)
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProblemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ic" | "id" => Ok(ProblemKind::Ic),
            "ld" => Ok(ProblemKind::Ld),
            "old" => Ok(ProblemKind::Old),
            "md" | "rs" => Ok(ProblemKind::Rs),
            "sep-id" | "sep_id" => Ok(ProblemKind::SepId),
            "sep-ld" | "sep_ld" => Ok(ProblemKind::SepLd),
            "sep-old" | "sep_old" => Ok(ProblemKind::SepOld),
            other => Err(Error::BadParameter(format!("unknown problem `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Id,
    Ld,
    Old,
}

/// Why a candidate set fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    Undominated(usize),
    Collision(usize, usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Undominated(v) => write!(f, "undominated={v}"),
            Violation::Collision(u, v) => write!(f, "pair=({u},{v})"),
        }
    }
}

fn members(g: &Graph, s: &VertexSet) -> Result<Vec<bool>> {
    let mut m = vec![false; g.n()];
    for &v in s {
        if v >= g.n() {
            return Err(Error::InvalidVertex(v));
        }
        m[v] = true;
    }
    Ok(m)
}

fn sig(g: &Graph, inset: &[bool], v: usize, open: bool) -> Vec<usize> {
    let mut out: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| inset[w]).collect();
    if !open && inset[v] {
        let pos = out.partition_point(|&w| w < v);
        out.insert(pos, v);
    }
    out
}

/// `N[v] ∩ S`, or `N(v) ∩ S` when `open`.
pub fn signature(g: &Graph, s: &VertexSet, v: usize, open: bool) -> Result<VertexSet> {
    if v >= g.n() {
        return Err(Error::InvalidVertex(v));
    }
    Ok(sig(g, &members(g, s)?, v, open).into_iter().collect())
}

fn first_duplicate<K: std::hash::Hash + Eq>(items: impl Iterator<Item = (usize, K)>) -> Option<Violation> {
    let mut seen: HashMap<K, usize> = HashMap::new();
    for (v, key) in items {
        if let Some(&u) = seen.get(&key) {
            return Some(Violation::Collision(u, v));
        }
        seen.insert(key, v);
    }
    None
}

/// First violation of `kind` by `s`, or `None` if `s` is a solution.
pub fn check(g: &Graph, s: &VertexSet, kind: ProblemKind) -> Result<Option<Violation>> {
    let inset = members(g, s)?;
    let n = g.n();
    if kind == ProblemKind::Rs {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let dists: Vec<Vec<Option<usize>>> = s.iter().map(|&x| g.bfs_distances(x)).collect::<Result<_>>()?;
        return Ok(first_duplicate((0..n).map(|v| (v, dists.iter().map(|d| d[v]).collect::<Vec<_>>()))));
    }
    let open = kind.is_open();
    let sigs: Vec<Vec<usize>> = (0..n).map(|v| sig(g, &inset, v, open)).collect();
    let needs_domination = matches!(kind, ProblemKind::Ic | ProblemKind::Ld | ProblemKind::Old);
    if needs_domination {
        if let Some(v) = sigs.iter().position(Vec::is_empty) {
            return Ok(Some(Violation::Undominated(v)));
        }
    }
    let outside_only = matches!(kind, ProblemKind::Ld | ProblemKind::SepLd);
    Ok(first_duplicate((0..n).filter(|&v| !(outside_only && inset[v])).map(|v| (v, &sigs[v]))))
}

pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    (0..g.n()).all(|v| s.contains(&v) || g.neighbors(v).iter().any(|w| s.contains(w)))
}

pub fn is_total_dominating(g: &Graph, s: &VertexSet) -> bool {
    (0..g.n()).all(|v| g.neighbors(v).iter().any(|w| s.contains(w)))
}

fn passes(g: &Graph, s: &VertexSet, kind: ProblemKind) -> bool {
    matches!(check(g, s, kind), Ok(None))
}

pub fn is_identifying_code(g: &Graph, s: &VertexSet) -> bool {
    passes(g, s, ProblemKind::Ic)
}

pub fn is_locating_dominating(g: &Graph, s: &VertexSet) -> bool {
    passes(g, s, ProblemKind::Ld)
}

pub fn is_open_locating_dominating(g: &Graph, s: &VertexSet) -> bool {
    passes(g, s, ProblemKind::Old)
}

pub fn is_resolving_set(g: &Graph, s: &VertexSet) -> Result<bool> {
    check(g, s, ProblemKind::Rs).map(|v| v.is_none())
}

/// Separation without domination. `kind` must be one of the three SEP kinds.
pub fn is_separating(g: &Graph, s: &VertexSet, kind: ProblemKind) -> Result<bool> {
    match kind {
        ProblemKind::SepId | ProblemKind::SepLd | ProblemKind::SepOld => check(g, s, kind).map(|v| v.is_none()),
        _ => Err(Error::BadParameter(format!("{kind} is not a separation kind"))),
    }
}

/// Some vertex has an empty signature (open neighbourhood for OLD).
pub fn emp_flag(g: &Graph, s: &VertexSet, flavor: Flavor) -> bool {
    (0..g.n()).any(|v| {
        let closed_hit = flavor != Flavor::Old && s.contains(&v);
        !closed_hit && !g.neighbors(v).iter().any(|w| s.contains(w))
    })
}

/// Some vertex (outside `s` for LD) is dominated by every member of `s`.
pub fn univ_flag(g: &Graph, s: &VertexSet, flavor: Flavor) -> bool {
    (0..g.n()).any(|v| {
        if flavor == Flavor::Ld && s.contains(&v) {
            return false;
        }
        s.iter().all(|&x| {
            if flavor == Flavor::Old {
                g.has_edge(v, x)
            } else {
                x == v || g.has_edge(v, x)
            }
        })
    })
}
