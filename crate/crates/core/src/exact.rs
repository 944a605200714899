//! Brute-force oracles: subsets enumerated by size, then lexicographically.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::verify::{Flavor, ProblemKind};

pub const DEFAULT_CAP: usize = 30;
pub const MAX_MIN_SETS: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub k: usize,
    pub witness: VertexSet,
    pub kind: ProblemKind,
}

/// Bitmask view of a small graph for fast repeated checks.
struct Checker {
    n: usize,
    kind: ProblemKind,
    nbhd: Vec<u64>,
    dist: Vec<Vec<u8>>,
}

impl Checker {
    fn new(g: &Graph, kind: ProblemKind, cap: usize) -> Result<Self> {
        let n = g.n();
        if n > cap || n > 64 {
            return Err(Error::CapExceeded(format!("n = {n} exceeds the oracle cap {}", cap.min(64))));
        }
        match kind {
            ProblemKind::Ic => {
                if let Some(&(u, v)) = g.closed_twins().first() {
                    return Err(Error::TwinsPresent(u, v));
                }
            }
            ProblemKind::Old => {
                if let Some(&(u, v)) = g.open_twins().first() {
                    return Err(Error::OpenTwinsPresent(u, v));
                }
                if let Some(v) = (0..n).find(|&v| g.neighbors(v).is_empty()) {
                    return Err(Error::Hypothesis(format!("isolated vertex {v} cannot be totally dominated")));
                }
            }
            ProblemKind::Rs if !g.is_connected() => return Err(Error::Disconnected),
            _ => {}
        }
        let nbhd = (0..n)
            .map(|v| {
                let mut m = g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w);
                if !kind.is_open() {
                    m |= 1 << v;
                }
                m
            })
            .collect();
        let dist = if kind == ProblemKind::Rs {
            g.distance_matrix()?.into_iter().map(|r| r.into_iter().map(|d| d as u8).collect()).collect()
        } else {
            Vec::new()
        };
        Ok(Checker { n, kind, nbhd, dist })
    }

    fn passes(&self, set: &[usize]) -> bool {
        let mask = set.iter().fold(0u64, |m, &v| m | 1 << v);
        match self.kind {
            ProblemKind::Rs => {
                let mut keys: Vec<Vec<u8>> = (0..self.n).map(|v| set.iter().map(|&s| self.dist[s][v]).collect()).collect();
                keys.sort_unstable();
                keys.windows(2).all(|w| w[0] != w[1])
            }
            kind => {
                let dominate = matches!(kind, ProblemKind::Ic | ProblemKind::Ld | ProblemKind::Old);
                let outside_only = matches!(kind, ProblemKind::Ld | ProblemKind::SepLd);
                let mut sigs = Vec::with_capacity(self.n);
                for v in 0..self.n {
                    let s = self.nbhd[v] & mask;
                    if dominate && s == 0 {
                        return false;
                    }
                    if !(outside_only && mask >> v & 1 == 1) {
                        sigs.push(s);
                    }
                }
                sigs.sort_unstable();
                sigs.windows(2).all(|w| w[0] != w[1])
            }
        }
    }
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it returns false.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        if !f(&c) {
            return;
        }
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if c[i] < n - k + i {
                break;
            }
            if i == 0 {
                return;
            }
        }
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

pub fn min_set(g: &Graph, kind: ProblemKind) -> Result<SolveResult> {
    min_set_capped(g, kind, DEFAULT_CAP)
}

pub fn min_set_capped(g: &Graph, kind: ProblemKind, cap: usize) -> Result<SolveResult> {
    let checker = Checker::new(g, kind, cap)?;
    for k in 0..=g.n() {
        let mut found = None;
        for_each_subset(g.n(), k, |set| {
            if checker.passes(set) {
                found = Some(set.iter().copied().collect());
                false
            } else {
                true
            }
        });
        if let Some(witness) = found {
            return Ok(SolveResult { k, witness, kind });
        }
    }
    Err(Error::Hypothesis(format!("no {kind} set exists")))
}

pub fn all_min_sets(g: &Graph, kind: ProblemKind) -> Result<Vec<VertexSet>> {
    let k = min_set(g, kind)?.k;
    let checker = Checker::new(g, kind, DEFAULT_CAP)?;
    let mut out = Vec::new();
    let mut overflow = false;
    for_each_subset(g.n(), k, |set| {
        if checker.passes(set) {
            if out.len() == MAX_MIN_SETS {
                overflow = true;
                return false;
            }
            out.push(set.iter().copied().collect());
        }
        true
    });
    if overflow {
        return Err(Error::CapExceeded(format!("more than {MAX_MIN_SETS} minimum sets")));
    }
    Ok(out)
}

/// Size of a minimum solution.
pub fn parameter(g: &Graph, kind: ProblemKind) -> Result<usize> {
    min_set(g, kind).map(|r| r.k)
}

/// `(emp, univ)` over all minimum separating sets of the flavour.
pub fn emp_univ_oracle(g: &Graph, flavor: Flavor) -> Result<(bool, bool)> {
    let kind = match flavor {
        Flavor::Id => ProblemKind::SepId,
        Flavor::Ld => ProblemKind::SepLd,
        Flavor::Old => ProblemKind::SepOld,
    };
    let sets = all_min_sets(g, kind)?;
    let emp = sets.iter().all(|s| crate::verify::emp_flag(g, s, flavor));
    let univ = sets.iter().all(|s| crate::verify::univ_flag(g, s, flavor));
    Ok((emp, univ))
}
