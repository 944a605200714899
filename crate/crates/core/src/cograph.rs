//! Bottom-up cotree dynamic programs for separating sets.
//!
//! Each node carries `(k, emp, univ)`: the minimum separating-set size and
//! the two flags quantified over all minimum separating sets. N-ary nodes
//! are folded left to right as binary unions or joins.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exact;
use crate::graph::VertexSet;
use crate::models::{all_cotrees, leaf_children, CoKind, CoNode, Cotree};
use crate::verify::{self, Flavor, ProblemKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CographSummary {
    pub k: usize,
    pub emp: bool,
    pub univ: bool,
}

#[derive(Clone, Copy, Debug)]
struct Acc {
    k: usize,
    emp: bool,
    univ: bool,
    single: bool,
}

const K1: Acc = Acc { k: 0, emp: true, univ: true, single: true };

/// One rule set per flavour. The only differences between flavours are the
/// flags produced when both operands are single vertices.
#[derive(Clone, Copy)]
struct Rules {
    /// `univ` of the union of two single vertices.
    union_pair_univ: bool,
    /// `emp` of the join of two single vertices.
    join_pair_emp: bool,
}

// Two isolated vertices: S = {a} leaves b undominated and a dominates itself,
// so both ID flags hold. The LD flag needs the dominated vertex outside S.
const ID_RULES: Rules = Rules { union_pair_univ: true, join_pair_emp: false };
const LD_RULES: Rules = Rules { union_pair_univ: false, join_pair_emp: false };
// K2 under open neighbourhoods: S = {a} gives a an empty signature.
const OLD_RULES: Rules = Rules { union_pair_univ: true, join_pair_emp: true };

fn union(r: Rules, a: Acc, b: Acc) -> Acc {
    let univ = match (a.single, b.single) {
        (true, true) => r.union_pair_univ,
        (true, false) => b.univ && !b.emp,
        (false, true) => a.univ && !a.emp,
        (false, false) => false,
    };
    Acc { k: a.k + b.k + (a.emp && b.emp) as usize, emp: a.emp || b.emp, univ, single: false }
}

fn join(r: Rules, a: Acc, b: Acc) -> Acc {
    let emp = match (a.single, b.single) {
        (true, true) => r.join_pair_emp,
        (true, false) => b.emp && !b.univ,
        (false, true) => a.emp && !a.univ,
        (false, false) => false,
    };
    Acc { k: a.k + b.k + (a.univ && b.univ) as usize, emp, univ: a.univ || b.univ, single: false }
}

fn fold(t: &Cotree, r: Rules) -> CographSummary {
    let nodes = t.nodes();
    let mut acc: Vec<Acc> = vec![K1; nodes.len()];
    for i in t.postorder() {
        if let CoNode::Inner(kind, ch) = &nodes[i] {
            let step = if *kind == CoKind::Union { union } else { join };
            acc[i] = ch[1..].iter().fold(acc[ch[0]], |a, &c| step(r, a, acc[c]));
        }
    }
    let a = acc[t.root()];
    CographSummary { k: a.k, emp: a.emp, univ: a.univ }
}

fn canonical(t: &Cotree) -> std::borrow::Cow<'_, Cotree> {
    if t.is_canonical() {
        std::borrow::Cow::Borrowed(t)
    } else {
        std::borrow::Cow::Owned(t.canonical())
    }
}

/// First pair of twins: two leaf children of one node of the given kind.
/// Closed twins sit under a join, open twins under a union.
fn twin_under(t: &Cotree, kind: CoKind) -> Option<(usize, usize)> {
    let t = canonical(t);
    t.nodes().iter().enumerate().find_map(|(i, n)| match n {
        CoNode::Inner(k, _) if *k == kind => {
            let mut leaves = leaf_children(&t, i);
            if leaves.len() >= 2 {
                leaves.sort_unstable();
                Some((leaves[0], leaves[1]))
            } else {
                None
            }
        }
        _ => None,
    })
}

pub fn closed_twin(t: &Cotree) -> Option<(usize, usize)> {
    twin_under(t, CoKind::Join)
}

pub fn open_twin(t: &Cotree) -> Option<(usize, usize)> {
    twin_under(t, CoKind::Union)
}

pub fn is_connected(t: &Cotree) -> bool {
    t.root_kind() != Some(CoKind::Union)
}

fn has_isolated_vertex(t: &Cotree) -> bool {
    let t = canonical(t);
    match t.root_kind() {
        None => true,
        Some(CoKind::Union) => !leaf_children(&t, t.root()).is_empty(),
        Some(CoKind::Join) => false,
    }
}

pub fn sep_id_dp(t: &Cotree) -> Result<CographSummary> {
    if let Some((u, v)) = closed_twin(t) {
        return Err(Error::TwinsPresent(u, v));
    }
    Ok(fold(t, ID_RULES))
}

pub fn sep_ld_dp(t: &Cotree) -> CographSummary {
    fold(t, LD_RULES)
}

pub fn gamma_id_cograph(t: &Cotree) -> Result<usize> {
    let s = sep_id_dp(t)?;
    Ok(s.k + s.emp as usize)
}

pub fn gamma_ld_cograph(t: &Cotree) -> usize {
    let s = sep_ld_dp(t);
    s.k + s.emp as usize
}

/// Metric dimension of a connected cograph; equals its separating LD number.
pub fn dim_cograph(t: &Cotree) -> Result<usize> {
    if !is_connected(t) {
        return Err(Error::Disconnected);
    }
    Ok(sep_ld_dp(t).k)
}

static OLD_GATE: OnceLock<std::result::Result<usize, String>> = OnceLock::new();

/// Leaf bound of the exhaustive check that unlocks [`sep_old_dp`].
pub const OLD_GATE_LEAVES: usize = 9;

/// Compares the OLD recurrence with the oracle on every open-twin-free
/// cograph with at most `max_leaves` vertices. Returns the number checked.
pub fn validate_old_recurrence(max_leaves: usize) -> std::result::Result<usize, String> {
    let mut checked = 0;
    for n in 1..=max_leaves {
        for t in all_cotrees(n) {
            if open_twin(&t).is_some() {
                continue;
            }
            let g = t.to_graph();
            let (emp, univ) = exact::emp_univ_oracle(&g, Flavor::Old).map_err(|e| e.to_string())?;
            let k = exact::parameter(&g, ProblemKind::SepOld).map_err(|e| e.to_string())?;
            let got = fold(&t, OLD_RULES);
            if got != (CographSummary { k, emp, univ }) {
                return Err(format!("mismatch on {t}: dp {got:?}, oracle ({k}, {emp}, {univ})"));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// Runs the validation gate once per process. Needed before [`sep_old_dp`].
pub fn enable_old_dp() -> Result<usize> {
    OLD_GATE
        .get_or_init(|| validate_old_recurrence(OLD_GATE_LEAVES))
        .clone()
        .map_err(Error::SelfCheck)
}

pub fn sep_old_dp(t: &Cotree) -> Result<CographSummary> {
    match OLD_GATE.get() {
        Some(Ok(_)) => {}
        _ => return Err(Error::NotValidated),
    }
    if let Some((u, v)) = open_twin(t) {
        return Err(Error::OpenTwinsPresent(u, v));
    }
    Ok(fold(t, OLD_RULES))
}

pub fn gamma_old_cograph(t: &Cotree) -> Result<usize> {
    let s = sep_old_dp(t)?;
    if has_isolated_vertex(t) {
        return Err(Error::Hypothesis("isolated vertex cannot be totally dominated".into()));
    }
    Ok(s.k + s.emp as usize)
}

/// A minimum solution of the requested kind, found by oracle search and
/// checked against the DP value. Limited to the oracle cap.
pub fn witness_cograph(t: &Cotree, kind: ProblemKind) -> Result<VertexSet> {
    let expected = match kind {
        ProblemKind::Ic => gamma_id_cograph(t)?,
        ProblemKind::Ld => gamma_ld_cograph(t),
        ProblemKind::Rs => dim_cograph(t)?,
        other => return Err(Error::BadParameter(format!("no cograph witness for {other}"))),
    };
    let g = t.to_graph();
    let found = exact::min_set(&g, kind)?;
    if found.k != expected || verify::check(&g, &found.witness, kind)?.is_some() {
        return Err(Error::SelfCheck(format!("witness of size {} disagrees with dp value {expected}", found.k)));
    }
    Ok(found.witness)
}
