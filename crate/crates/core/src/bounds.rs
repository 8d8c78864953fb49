//! Closed-form lower bounds on the minimum dynamo size, and the
//! threshold-sum inequality checker for verified dynamos.
//!
//! All bound arithmetic is exact rational; floor/ceil is applied once, at
//! the declared final step. The formulas take explicit scalar parameters
//! so they can be evaluated symbolically; companion helpers extract the
//! parameters from a graph and refuse inputs that violate the theorems'
//! regularity hypotheses.

use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, ThresholdAssignment, VertexSet};
use crate::numeric;
use crate::resistant;
use crate::Rational;

fn rational_string<S: serde::Serializer>(
    r: &Rational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

/// One evaluated bound: exact value, the integer form actually asserted,
/// and whether the bound's hypotheses held.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub name: &'static str,
    /// Exact bound value (clamped at 0 where noted on the constructor).
    #[serde(serialize_with = "rational_string")]
    pub value: Rational,
    /// Pre-clamp value; differs from `value` only for the density bound.
    #[serde(serialize_with = "rational_string")]
    pub raw_value: Rational,
    /// Floor or ceiling of `value`, whichever the statement asserts.
    pub integer_bound: i64,
    pub applicable: bool,
    pub reason: Option<String>,
    /// `value` as f64, for display.
    pub approx: f64,
}

impl BoundReport {
    fn applicable(name: &'static str, value: Rational, integer_bound: i64) -> BoundReport {
        BoundReport {
            name,
            value,
            raw_value: value,
            integer_bound,
            applicable: true,
            reason: None,
            approx: value.to_f64().unwrap_or(f64::NAN),
        }
    }

    fn inapplicable(name: &'static str, reason: String) -> BoundReport {
        BoundReport {
            name,
            value: Rational::zero(),
            raw_value: Rational::zero(),
            integer_bound: 0,
            applicable: false,
            reason: Some(reason),
            approx: 0.0,
        }
    }
}

/// Report of the threshold-sum inequalities for a dynamo D with H = G∖D:
/// (i)  Σ_{v∈H} t(v) ≤ |E(G)| − |E(G[D])| − δ(G) + t_max(H), and
/// (ii) Σ_{v∈H} t(v) ≤ |E(G)| when t(v) ≤ d_G(v) for all v ∈ H.
#[derive(Debug, Clone, Serialize)]
pub struct Thm1Report {
    /// Σ_{v∈H} t(v).
    pub lhs: u64,
    pub rhs_i: i64,
    pub rhs_ii: u64,
    /// Part (ii) hypothesis: t(v) ≤ d_G(v) for every v ∈ H.
    pub ii_applicable: bool,
    pub holds_i: bool,
    pub holds_ii: bool,
    /// D = V(G); both inequalities are vacuous (t_max ranges over ∅).
    pub h_empty: bool,
}

impl Thm1Report {
    /// True iff no asserted inequality is violated.
    pub fn all_hold(&self) -> bool {
        self.holds_i && (!self.ii_applicable || self.holds_ii)
    }
}

/// Evaluates both threshold-sum inequalities for a verified dynamo;
/// errors if `d` is not actually a dynamo of (g, t).
pub fn thm1_check(g: &Graph, t: &ThresholdAssignment, d: &VertexSet) -> Result<Thm1Report> {
    t.check_graph(g)?;
    d.check_graph(g)?;
    if !resistant::is_dynamo_via_peeling(g, t, d)? {
        return Err(Error::NotADynamo {
            context: "thm1_check",
        });
    }
    let in_d = d.mask();
    let h: Vec<usize> = (0..g.n()).filter(|&v| !in_d[v]).collect();
    if h.is_empty() {
        return Ok(Thm1Report {
            lhs: 0,
            rhs_i: 0,
            rhs_ii: g.m() as u64,
            ii_applicable: true,
            holds_i: true,
            holds_ii: true,
            h_empty: true,
        });
    }
    let lhs: u64 = h.iter().map(|&v| t.get(v) as u64).sum();
    let t_max = h.iter().map(|&v| t.get(v)).max().unwrap();
    let edges_in_d = g
        .edges()
        .filter(|&(u, v)| in_d[u] && in_d[v])
        .count();
    let rhs_i = g.m() as i64 - edges_in_d as i64 - g.min_degree() as i64 + t_max as i64;
    let rhs_ii = g.m() as u64;
    let ii_applicable = h.iter().all(|&v| t.get(v) <= g.degree(v));
    Ok(Thm1Report {
        lhs,
        rhs_i,
        rhs_ii,
        ii_applicable,
        holds_i: (lhs as i64) <= rhs_i,
        holds_ii: lhs <= rhs_ii,
        h_empty: false,
    })
}

/// (n + 2r) / (2(r+1)), the dynamo lower bound for (2r+1)-regular graphs
/// with uniform threshold r + 1; asserted as a ceiling.
pub fn lb_regular_odd(n: usize, r: usize) -> BoundReport {
    let value: Rational = numeric::regular_odd_value(n, r);
    BoundReport::applicable("regular-odd", value, value.ceil().to_integer())
}

/// n(1 − ε(G)/t_min), clamped at 0; asserted as a ceiling. The raw
/// (possibly negative) value is kept alongside for diagnosis.
pub fn lb_density(g: &Graph, t_min: usize) -> Result<BoundReport> {
    if g.n() == 0 {
        return Err(Error::InvalidParameter(
            "density bound needs at least one vertex".into(),
        ));
    }
    if t_min == 0 {
        return Err(Error::InvalidParameter("t_min must be at least 1".into()));
    }
    let raw: Rational = numeric::density_value(g.n(), g.edge_density(), t_min);
    let value = if raw.is_negative() {
        Rational::zero()
    } else {
        raw
    };
    let mut report = BoundReport::applicable("density", value, value.ceil().to_integer());
    report.raw_value = raw;
    Ok(report)
}

/// Sufficient condition for membership in a dynamo-unbounded family:
/// t_min ≥ ε(G) + δ for a fixed margin δ > 0.
pub fn unbounded_condition(t_min: usize, epsilon: Rational, delta: Rational) -> Result<bool> {
    if !delta.is_positive() {
        return Err(Error::InvalidParameter("delta must be positive".into()));
    }
    Ok(Rational::from_integer(t_min as i64) >= epsilon + delta)
}

/// ⌊(4(t−r+1)n + (2r−t)²)/8⌋, the edge-dynamo lower bound for r-regular
/// graphs on n vertices with minimum edge threshold t.
pub fn lb_line_regular(n: usize, r: usize, t: usize) -> BoundReport {
    let value: Rational = numeric::line_regular_value(n, r, t);
    BoundReport::applicable("line-regular", value, value.floor().to_integer())
}

/// Edge-dynamo lower bound for r-regular bipartite graphs on n vertices
/// (n even) with minimum edge threshold t, including the parity term
/// ε = 1/4 when n − 2r + t + 1 is even; asserted as a ceiling.
pub fn lb_line_bipartite(n: usize, r: usize, t: usize) -> Result<BoundReport> {
    if n % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "regular bipartite graphs have even order, got n={n}"
        )));
    }
    let parity_even = (n as i64 - 2 * r as i64 + t as i64 + 1) % 2 == 0;
    let value: Rational = numeric::line_bipartite_value(n, r, t, parity_even);
    Ok(BoundReport::applicable(
        "line-bipartite",
        value,
        value.ceil().to_integer(),
    ))
}

/// Extracts (n, r, t_min) from a regular instance; refuses non-regular
/// graphs.
pub fn regular_params(g: &Graph, t: &ThresholdAssignment) -> Result<(usize, usize, usize)> {
    t.check_graph(g)?;
    let r = g
        .regular_degree()
        .ok_or(Error::NotRegular {
            min: g.min_degree(),
            max: g.max_degree(),
        })?;
    Ok((g.n(), r, t.t_min()))
}

/// The regular-odd bound evaluated against a concrete instance; reported
/// inapplicable unless the graph is (2r+1)-regular with uniform threshold
/// r + 1.
pub fn lb_regular_odd_for(g: &Graph, t: &ThresholdAssignment) -> Result<BoundReport> {
    t.check_graph(g)?;
    let d = match g.regular_degree() {
        Some(d) => d,
        None => {
            return Ok(BoundReport::inapplicable(
                "regular-odd",
                format!(
                    "graph is not regular (degrees {} to {})",
                    g.min_degree(),
                    g.max_degree()
                ),
            ))
        }
    };
    if d % 2 == 0 {
        return Ok(BoundReport::inapplicable(
            "regular-odd",
            format!("degree {d} is even"),
        ));
    }
    let r = (d - 1) / 2;
    if g.n() > 0 && (t.t_min() != r + 1 || t.t_max() != r + 1) {
        return Ok(BoundReport::inapplicable(
            "regular-odd",
            format!(
                "thresholds must be uniformly {} for degree {d}",
                r + 1
            ),
        ));
    }
    Ok(lb_regular_odd(g.n(), r))
}

/// Best general-purpose lower bound on the dynamo size of (g, t), used to
/// start the exact search. Always sound; 0 when nothing applies.
pub fn best_lower_bound(g: &Graph, t: &ThresholdAssignment) -> Result<usize> {
    let mut best = 0i64;
    if g.n() > 0 {
        best = best.max(lb_density(g, t.t_min())?.integer_bound);
        let reg = lb_regular_odd_for(g, t)?;
        if reg.applicable {
            best = best.max(reg.integer_bound);
        }
    }
    Ok(best.max(0) as usize)
}
