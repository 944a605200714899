//! Closed-form upper bounds on the order of a graph in terms of its solution
//! size, and a certifier that checks an instance against them.

use std::fmt;
use std::str::FromStr;

use crate::cograph;
use crate::error::{Error, Result};
use crate::generators::ExtremalInstance;
use crate::graph::{Graph, VertexSet};
use crate::models::Model;
use crate::verify::{self, ProblemKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphClass {
    Interval,
    UnitInterval,
    Permutation,
    BipartitePermutation,
    Cograph,
    General,
}

impl GraphClass {
    pub const ALL: [GraphClass; 6] = [
        GraphClass::Interval,
        GraphClass::UnitInterval,
        GraphClass::Permutation,
        GraphClass::BipartitePermutation,
        GraphClass::Cograph,
        GraphClass::General,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Interval => "INTERVAL",
            GraphClass::UnitInterval => "UNIT_INTERVAL",
            GraphClass::Permutation => "PERMUTATION",
            GraphClass::BipartitePermutation => "BIPARTITE_PERMUTATION",
            GraphClass::Cograph => "COGRAPH",
            GraphClass::General => "GENERAL",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_uppercase().replace('-', "_");
        GraphClass::ALL
            .into_iter()
            .find(|c| c.name() == key)
            .ok_or_else(|| Error::BadParameter(format!("unknown class `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    Ic,
    Ld,
    Old,
    Md,
}

impl BoundKind {
    pub const ALL: [BoundKind; 4] = [BoundKind::Ic, BoundKind::Ld, BoundKind::Old, BoundKind::Md];

    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Ic => "IC",
            BoundKind::Ld => "LD",
            BoundKind::Old => "OLD",
            BoundKind::Md => "MD",
        }
    }

    pub fn from_problem(kind: ProblemKind) -> Result<BoundKind> {
        match kind {
            ProblemKind::Ic => Ok(BoundKind::Ic),
            ProblemKind::Ld => Ok(BoundKind::Ld),
            ProblemKind::Old => Ok(BoundKind::Old),
            ProblemKind::Rs => Ok(BoundKind::Md),
            other => Err(Error::UnsupportedCombination(format!("problem {other}"))),
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "IC" | "ID" => Ok(BoundKind::Ic),
            "LD" => Ok(BoundKind::Ld),
            "OLD" => Ok(BoundKind::Old),
            "MD" | "RS" => Ok(BoundKind::Md),
            _ => Err(Error::BadParameter(format!("unknown kind `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundQuery {
    pub class: GraphClass,
    pub kind: BoundKind,
    pub k: u64,
    pub d: Option<u64>,
}

impl BoundQuery {
    pub fn new(class: GraphClass, kind: BoundKind, k: u64, d: Option<u64>) -> Self {
        BoundQuery { class, kind, k, d }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub class: GraphClass,
    pub kind: BoundKind,
    pub k: u64,
    pub d: Option<u64>,
    pub n: u64,
    pub max_n: u64,
    pub theorem_label: &'static str,
    pub satisfied: bool,
    pub slack: i64,
}

/// Formula text for a class and kind, used as the row label.
pub fn theorem_label(class: GraphClass, kind: BoundKind) -> Result<&'static str> {
    use BoundKind::*;
    use GraphClass::*;
    Ok(match (class, kind) {
        (Interval, Ic) | (Interval, Old) => "n<=k(k+1)/2",
        (Interval, Ld) => "n<=k(k+3)/2",
        (Interval, Md) => "n<=2k^2D+4k^2+kD+5k+1",
        (UnitInterval, Ic) | (UnitInterval, Old) => "n<=2k-1",
        (UnitInterval, Ld) => "n<=3k-1",
        (UnitInterval, Md) => "n<=k(D+2)-2",
        (Permutation, Ic) | (Permutation, Old) => "n<=k^2-2",
        (Permutation, Ld) => "n<=k^2+k-2",
        (Permutation, Md) => "n<=2k^2(D+3)+3k",
        (BipartitePermutation, Ic) | (BipartitePermutation, Ld) => "n<=3k+2",
        (BipartitePermutation, Old) => "n<=2k+2",
        (BipartitePermutation, Md) => "n<=k(2D-1)+2",
        (Cograph, Ic) => "n<=2k-2",
        (Cograph, Ld) => "n<=3k",
        (Cograph, Md) => "n<=3k<=3d",
        (Cograph, Old) => return Err(Error::UnsupportedCombination("COGRAPH OLD".into())),
        (General, Ic) | (General, Old) => "n<=2^k-1(reference)",
        (General, Ld) => "n<=2^k+k-1(reference)",
        (General, Md) => "n<=D^k+k(reference)",
    })
}

fn overflow() -> Error {
    Error::BadParameter("bound does not fit in 64 bits".into())
}

/// Exact value of the upper bound on `n`.
pub fn max_order(q: &BoundQuery) -> Result<u64> {
    use BoundKind::*;
    use GraphClass::*;
    theorem_label(q.class, q.kind)?;
    let k = q.k;
    let d = if q.kind == Md { q.d.ok_or(Error::MissingDiameter)? } else { 0 };
    if q.class == Permutation && q.kind != Md && k < 3 {
        return Err(Error::Hypothesis("permutation bounds need k >= 3".into()));
    }
    let k2 = k.checked_mul(k).ok_or_else(overflow)?;
    let v = match (q.class, q.kind) {
        (Interval, Ic) | (Interval, Old) => Some(k * (k + 1) / 2),
        (Interval, Ld) => Some(k * (k + 3) / 2),
        (Interval, Md) => (|| 2u64.checked_mul(k2)?.checked_mul(d)?.checked_add(4 * k2)?.checked_add(k.checked_mul(d)?)?.checked_add(5 * k + 1))(),
        (UnitInterval, Ic) | (UnitInterval, Old) => Some((2 * k).saturating_sub(1)),
        (UnitInterval, Ld) => Some((3 * k).saturating_sub(1)),
        (UnitInterval, Md) => k.checked_mul(d + 2).map(|x| x.saturating_sub(2)),
        (Permutation, Ic) | (Permutation, Old) => Some(k2 - 2),
        (Permutation, Ld) => Some(k2 + k - 2),
        (Permutation, Md) => (|| 2u64.checked_mul(k2)?.checked_mul(d + 3)?.checked_add(3 * k))(),
        (BipartitePermutation, Ic) | (BipartitePermutation, Ld) => Some(3 * k + 2),
        (BipartitePermutation, Old) => Some(2 * k + 2),
        (BipartitePermutation, Md) => k.checked_mul((2 * d).saturating_sub(1)).map(|x| x + 2),
        (Cograph, Ic) => Some((2 * k).saturating_sub(2)),
        (Cograph, Ld) | (Cograph, Md) => Some(3 * k),
        (Cograph, Old) => None,
        (General, Ic) | (General, Old) => 2u64.checked_pow(k as u32).map(|p| p - 1),
        (General, Ld) => 2u64.checked_pow(k as u32).and_then(|p| p.checked_add(k)).map(|x| x - 1),
        (General, Md) => d.checked_pow(k as u32).and_then(|p| p.checked_add(k)),
    };
    v.ok_or_else(overflow)
}

/// Reference bound used below the permutation threshold `k < 3`.
fn general_fallback(kind: BoundKind, k: u64) -> Result<u64> {
    max_order(&BoundQuery::new(GraphClass::General, kind, k, None))
}

/// Smallest solution size compatible with `n` vertices: the least `k` whose
/// bound admits `n`. This is the exact integer ceiling of the inverse formula.
/// Permutation neighbourhood bounds start at `k = 3`; below that the
/// reference bound for general graphs is used.
pub fn min_parameter(class: GraphClass, kind: BoundKind, n: u64, d: Option<u64>) -> Result<u64> {
    theorem_label(class, kind)?;
    if kind == BoundKind::Md && d.is_none() {
        return Err(Error::MissingDiameter);
    }
    let bound = |k: u64| -> Result<u64> {
        if class == GraphClass::Permutation && kind != BoundKind::Md && k < 3 {
            general_fallback(kind, k)
        } else {
            max_order(&BoundQuery::new(class, kind, k, d))
        }
    };
    // bounds grow at least linearly, so k <= n + 1 always suffices
    let (mut lo, mut hi) = (0u64, n + 1);
    while bound(hi).map_or(false, |b| b < n) {
        hi *= 2;
    }
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        // a bound too large for 64 bits certainly admits n
        match bound(mid) {
            Ok(b) if b < n => lo = mid + 1,
            _ => hi = mid,
        }
    }
    Ok(lo)
}

/// Class attested by a model: unit interval and bipartite permutation are
/// detected so the sharper bound applies.
pub fn attested_class(model: &Model) -> Result<GraphClass> {
    Ok(match model {
        Model::Intervals(m) if m.is_unit() => GraphClass::UnitInterval,
        Model::Intervals(_) => GraphClass::Interval,
        Model::Permutation(m) if m.to_graph()?.is_bipartite() => GraphClass::BipartitePermutation,
        Model::Permutation(_) => GraphClass::Permutation,
        Model::Cotree(_) => GraphClass::Cograph,
        Model::Graph(_) => GraphClass::General,
    })
}

/// Verifies `s` for `kind` on the model's graph and checks the order
/// against the bound of the attested class.
pub fn certify(model: &Model, s: &VertexSet, kind: ProblemKind) -> Result<BoundReport> {
    certify_as(model, attested_class(model)?, s, kind)
}

/// As [`certify`], with the class given explicitly. The class must be one the
/// model attests (a unit model may be certified as INTERVAL, not the reverse).
pub fn certify_as(model: &Model, class: GraphClass, s: &VertexSet, kind: ProblemKind) -> Result<BoundReport> {
    let attested = attested_class(model)?;
    let allowed = class == attested
        || class == GraphClass::General
        || matches!(
            (attested, class),
            (GraphClass::UnitInterval, GraphClass::Interval) | (GraphClass::BipartitePermutation, GraphClass::Permutation)
        );
    if !allowed {
        return Err(Error::Hypothesis(format!("model does not attest class {class}")));
    }
    let bkind = BoundKind::from_problem(kind)?;
    let g = model.to_graph()?;
    if let Some(v) = verify::check(&g, s, kind)? {
        return Err(Error::VerifierFailed(v.to_string()));
    }
    report(model, &g, class, bkind, s.len() as u64)
}

/// Certifies a generated instance. Cograph instances carry a value rather
/// than a set; their solution size is the DP value of the matching problem.
pub fn certify_instance(inst: &ExtremalInstance) -> Result<BoundReport> {
    if let Some(s) = &inst.solution {
        return certify(&inst.model, s, inst.kind);
    }
    let Model::Cotree(t) = &inst.model else {
        return Err(Error::Hypothesis("instance has no solution".into()));
    };
    let (bkind, k) = match inst.kind {
        ProblemKind::SepId => (BoundKind::Ic, cograph::gamma_id_cograph(t)?),
        ProblemKind::SepLd => (BoundKind::Ld, cograph::gamma_ld_cograph(t)),
        other => return Err(Error::UnsupportedCombination(format!("cograph instance of {other}"))),
    };
    report(&inst.model, &t.to_graph(), GraphClass::Cograph, bkind, k as u64)
}

fn report(model: &Model, g: &Graph, class: GraphClass, bkind: BoundKind, k: u64) -> Result<BoundReport> {
    let n = g.n() as u64;
    let d = if bkind == BoundKind::Md { Some(g.diameter()? as u64) } else { None };
    if class == GraphClass::Cograph {
        let Model::Cotree(t) = model else { unreachable!() };
        match bkind {
            BoundKind::Ic => {
                if n < 2 || cograph::closed_twin(t).is_some() {
                    return Err(Error::Hypothesis("cograph IC bound needs a twin-free cograph with n >= 2".into()));
                }
            }
            BoundKind::Ld | BoundKind::Md => {
                if n < 2 || !g.is_connected() {
                    return Err(Error::Hypothesis("cograph bound needs a connected cograph with n >= 2".into()));
                }
                if bkind == BoundKind::Md && cograph::dim_cograph(t)? > cograph::gamma_ld_cograph(t) {
                    return Err(Error::SelfCheck("metric dimension exceeds LD number".into()));
                }
            }
            BoundKind::Old => {}
        }
    }
    let q = BoundQuery::new(class, bkind, k, d);
    let max_n = max_order(&q)?;
    Ok(BoundReport {
        class,
        kind: bkind,
        k,
        d,
        n,
        max_n,
        theorem_label: theorem_label(class, bkind)?,
        satisfied: n <= max_n,
        slack: max_n as i64 - n as i64,
    })
}
