//! Closed-form bounds on `α_k` and `χ_k`, all in exact rational arithmetic,
//! plus a per-graph report that evaluates them and checks applicability.

use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::coloring::{chi_k_exact, chi_k_greedy, EXACT_COLORING_CAP};
use crate::error::{Error, Result};
use crate::graph::{Diameter, Graph};
use crate::power::alpha_k_exact_with;
use crate::power::SolverOptions;

pub type Rational = Ratio<i128>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CaseId {
    /// `α_k >= 2` under the diameter hypotheses, met by join chains.
    FhLower,
    FhEven,
    FhOdd,
    T2Case1,
    T2Case2,
    T2Case3,
    T2Case4,
    T2Case5,
    T2Case6,
    T2Case7,
    T2Case8,
    BrooksM,
    ChromaticLower,
    RegularAlpha2,
}

impl CaseId {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseId::FhLower => "FH_LOWER",
            CaseId::FhEven => "FH_EVEN",
            CaseId::FhOdd => "FH_ODD",
            CaseId::T2Case1 => "T2_CASE1",
            CaseId::T2Case2 => "T2_CASE2",
            CaseId::T2Case3 => "T2_CASE3",
            CaseId::T2Case4 => "T2_CASE4",
            CaseId::T2Case5 => "T2_CASE5",
            CaseId::T2Case6 => "T2_CASE6",
            CaseId::T2Case7 => "T2_CASE7",
            CaseId::T2Case8 => "T2_CASE8",
            CaseId::BrooksM => "BROOKS_M",
            CaseId::ChromaticLower => "CHROMATIC_LOWER",
            CaseId::RegularAlpha2 => "REGULAR_ALPHA2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Upper,
    Lower,
}

/// Which invariant a bound constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Alpha,
    Chi,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundValue {
    pub case_id: CaseId,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subcase: Option<&'static str>,
    pub quantity: Quantity,
    #[serde(serialize_with = "serialize_ratio")]
    pub value: Rational,
    /// Floor of `value` for upper bounds, ceiling for lower bounds.
    pub floor_value: i128,
    pub direction: Direction,
    pub applicable: bool,
    /// Hypotheses the bound is stated under.
    pub conditions: Vec<String>,
    /// Hypotheses the graph fails; nonempty iff `!applicable`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violated: Vec<String>,
}

impl BoundValue {
    fn new(case_id: CaseId, quantity: Quantity, direction: Direction, value: Rational, conditions: &[&str]) -> Self {
        let floor_value = match direction {
            Direction::Upper => value.floor().to_integer(),
            Direction::Lower => value.ceil().to_integer(),
        };
        BoundValue {
            case_id,
            subcase: None,
            quantity,
            value,
            floor_value,
            direction,
            applicable: true,
            conditions: conditions.iter().map(|c| c.to_string()).collect(),
            violated: Vec::new(),
        }
    }

    fn with_subcase(mut self, subcase: &'static str) -> Self {
        self.subcase = Some(subcase);
        self
    }

    fn violate(&mut self, condition: impl Into<String>) {
        self.applicable = false;
        self.violated.push(condition.into());
    }

    /// Whether `actual` is consistent with this bound.
    pub fn admits(&self, actual: usize) -> bool {
        let actual = actual as i128;
        match self.direction {
            Direction::Upper => actual <= self.floor_value,
            Direction::Lower => actual >= self.floor_value,
        }
    }
}

pub fn serialize_ratio<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_ratio(r))
}

/// `"p"` for integers, `"p/q"` otherwise.
pub fn format_ratio(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn int(v: usize) -> i128 {
    v as i128
}

fn ratio(numer: i128, denom: i128) -> Rational {
    Rational::new(numer, denom)
}

const CONNECTED: &str = "connected";
const NON_COMPLETE: &str = "non-complete";
const DIAM: &str = "diam >= k+1";

/// Upper bound for connected non-complete graphs of diameter at least
/// `k + 1`: `2n/(k+2)` for even `k`, `(2n-2)/(k+1)` for odd `k`.
pub fn firby_haviland_bound(n: usize, k: usize) -> Result<BoundValue> {
    if n < 2 || k < 1 {
        return Err(Error::invalid(format!("need n >= 2 and k >= 1, got n = {n}, k = {k}")));
    }
    let (case, value) = if k % 2 == 0 {
        (CaseId::FhEven, ratio(2 * int(n), int(k) + 2))
    } else {
        (CaseId::FhOdd, ratio(2 * int(n) - 2, int(k) + 1))
    };
    Ok(BoundValue::new(case, Quantity::Alpha, Direction::Upper, value, &[CONNECTED, NON_COMPLETE, DIAM]))
}

/// Lower bound `α_k >= 2` under the same hypotheses.
pub fn firby_haviland_lower() -> BoundValue {
    BoundValue::new(CaseId::FhLower, Quantity::Alpha, Direction::Lower, ratio(2, 1), &[CONNECTED, NON_COMPLETE, DIAM])
}

/// The minimum/maximum-degree upper bound for connected graphs of diameter
/// at least `k + 1`. The case is selected from `k` and `δ`; for `δ >= 3`
/// the integer `ℓ` is the one placing `k` in its residue class mod 6.
pub fn theorem2_bound(n: usize, k: usize, min_degree: usize, max_degree: usize) -> Result<BoundValue> {
    if k < 1 {
        return Err(Error::invalid("k must be at least 1"));
    }
    if min_degree < 1 || min_degree > max_degree {
        return Err(Error::invalid(format!(
            "need 1 <= δ <= Δ, got δ = {min_degree}, Δ = {max_degree}"
        )));
    }
    if max_degree >= n {
        return Err(Error::invalid(format!("need Δ < n, got Δ = {max_degree}, n = {n}")));
    }
    let (n_, k_, d, dd) = (int(n), int(k), int(min_degree), int(max_degree));
    let regular = min_degree == max_degree;
    let upper = |case, value, subcase: Option<&'static str>| {
        let b = BoundValue::new(case, Quantity::Alpha, Direction::Upper, value, &[CONNECTED, DIAM]);
        match subcase {
            Some(s) => b.with_subcase(s),
            None => b,
        }
    };

    if k == 1 {
        return Ok(upper(CaseId::T2Case1, ratio(dd * n_, dd + d), None));
    }
    if min_degree <= 2 {
        return Ok(if k % 2 == 1 {
            upper(CaseId::T2Case2, ratio(dd * n_, dd * (d + (k_ - 1) / 2) + 1), Some("k odd"))
        } else {
            upper(CaseId::T2Case2, ratio(n_, d + k_ / 2), Some("k even"))
        });
    }

    // δ >= 3; the base term ℓΔ(δ+1) recurs in every Δ-weighted case
    let bound = match k % 6 {
        2 => {
            let l = (k_ + 4) / 6;
            upper(CaseId::T2Case3, ratio(n_, l * (d + 1)), None)
        }
        3 => {
            let l = (k_ + 3) / 6;
            if regular {
                upper(CaseId::T2Case4, ratio(dd * n_, l * dd * (d + 1) + 2), Some("Delta=delta"))
            } else {
                upper(CaseId::T2Case4, ratio(dd * n_, l * dd * (d + 1) + 1), Some("Delta>delta"))
            }
        }
        4 => {
            let l = (k_ + 2) / 6;
            upper(CaseId::T2Case5, ratio(n_, l * (d + 1) + 1), None)
        }
        5 => {
            let l = (k_ + 1) / 6;
            if regular && min_degree % 2 == 0 {
                upper(CaseId::T2Case6, ratio(dd * n_, l * dd * (d + 1) + dd + 2), Some("Delta=delta even"))
            } else {
                upper(CaseId::T2Case6, ratio(dd * n_, l * dd * (d + 1) + dd + 1), Some("otherwise"))
            }
        }
        0 => {
            let l = k_ / 6;
            if regular && min_degree % 2 == 0 {
                upper(CaseId::T2Case7, ratio(n_, l * (d + 1) + 3), Some("Delta=delta even"))
            } else {
                let mut b = upper(CaseId::T2Case7, ratio(n_, l * (d + 1) + 2), Some("otherwise"));
                b.conditions.push("typo-corrected: denominator l(delta+1)+2".into());
                b
            }
        }
        _ => {
            // k ≡ 1 (mod 6) with k >= 7
            let l = (k_ - 1) / 6;
            if min_degree % 2 == 1 {
                upper(CaseId::T2Case8, ratio(dd * n_, l * dd * (d + 1) + 2 * dd + d - 1), Some("delta odd"))
            } else {
                upper(CaseId::T2Case8, ratio(dd * n_, l * dd * (d + 1) + 3 * dd + d - 2), Some("delta even"))
            }
        }
    };
    Ok(bound)
}

/// `M = 1 + Δ((Δ-1)^k - 1)/(Δ-2)`, an upper bound on `χ_k` for `Δ >= 3`.
pub fn brooks_distance_bound(max_degree: usize, k: usize) -> Result<u128> {
    if max_degree < 3 {
        return Err(Error::invalid(format!("the distance Brooks bound needs Δ >= 3, got {max_degree}")));
    }
    if k < 1 {
        return Err(Error::invalid("k must be at least 1"));
    }
    let dd = max_degree as u128;
    let exp = u32::try_from(k).map_err(|_| Error::Overflow("Brooks bound"))?;
    let power = (dd - 1).checked_pow(exp).ok_or(Error::Overflow("Brooks bound"))?;
    // (Δ-1)^k - 1 is divisible by Δ-2 since Δ-1 ≡ 1 (mod Δ-2)
    let quotient = (power - 1) / (dd - 2);
    dd.checked_mul(quotient).and_then(|x| x.checked_add(1)).ok_or(Error::Overflow("Brooks bound"))
}

/// `α_k >= n/χ_k`.
pub fn chromatic_lower_bound(n: usize, chi: usize) -> Result<BoundValue> {
    if n < 1 || chi < 1 {
        return Err(Error::invalid(format!("need n >= 1 and χ >= 1, got n = {n}, χ = {chi}")));
    }
    Ok(BoundValue::new(CaseId::ChromaticLower, Quantity::Alpha, Direction::Lower, ratio(int(n), int(chi)), &[]))
}

/// `α_2 <= n/(r+1)` for `r`-regular graphs.
pub fn regular_alpha2_bound(n: usize, r: usize) -> Result<BoundValue> {
    if r < 1 {
        return Err(Error::invalid("regular α_2 bound needs r >= 1"));
    }
    Ok(BoundValue::new(
        CaseId::RegularAlpha2,
        Quantity::Alpha,
        Direction::Upper,
        ratio(int(n), int(r) + 1),
        &["r-regular", "k = 2"],
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedBound {
    pub case_id: CaseId,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChiSummary {
    pub num_colors: usize,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub k: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub diameter: Diameter,
    pub connected: bool,
    pub chi: ChiSummary,
    pub bounds: Vec<BoundValue>,
    pub skipped: Vec<SkippedBound>,
    pub exact_alpha: Option<usize>,
    pub tight: Option<Vec<CaseId>>,
}

impl BoundReport {
    /// Applicable α bounds that `exact_alpha` violates; empty when sound or
    /// when no exact value was computed.
    pub fn violations(&self) -> Vec<&BoundValue> {
        match self.exact_alpha {
            None => Vec::new(),
            Some(alpha) => self
                .bounds
                .iter()
                .filter(|b| b.applicable && b.quantity == Quantity::Alpha && !b.admits(alpha))
                .collect(),
        }
    }

    pub fn bound(&self, case: CaseId) -> Option<&BoundValue> {
        self.bounds.iter().find(|b| b.case_id == case)
    }
}

/// Evaluates every calculator on `g` for parameter `k`, marks which ones
/// apply, and optionally solves `α_k` exactly to list the tight bounds.
pub fn bound_report(g: &Graph, k: usize, compute_exact: bool) -> Result<BoundReport> {
    bound_report_with(g, k, compute_exact, &SolverOptions::default())
}

pub fn bound_report_with(g: &Graph, k: usize, compute_exact: bool, opts: &SolverOptions) -> Result<BoundReport> {
    if k < 1 {
        return Err(Error::invalid("bound report needs k >= 1"));
    }
    let n = g.vertex_count();
    let stats = g.degree_stats()?;
    let diameter = g.diameter();
    let connected = diameter != Diameter::Infinite;
    let far_enough = diameter.at_least(k + 1);

    let mut bounds = Vec::new();
    let mut skipped = Vec::new();
    let mut skip = |case_id, reason: String| skipped.push(SkippedBound { case_id, reason });

    let graph_hypotheses = |b: &mut BoundValue, need_non_complete: bool| {
        if !connected {
            b.violate(CONNECTED);
        }
        if need_non_complete && g.is_complete() {
            b.violate(NON_COMPLETE);
        }
        if !far_enough {
            b.violate(format!("diam >= k+1 (diam = {diameter}, k+1 = {})", k + 1));
        }
    };

    if n >= 2 {
        let mut lower = firby_haviland_lower();
        graph_hypotheses(&mut lower, true);
        bounds.push(lower);
        let mut fh = firby_haviland_bound(n, k)?;
        graph_hypotheses(&mut fh, true);
        bounds.push(fh);
    } else {
        skip(if k % 2 == 0 { CaseId::FhEven } else { CaseId::FhOdd }, "needs n >= 2".into());
    }

    match theorem2_bound(n, k, stats.min_degree, stats.max_degree) {
        Ok(mut t2) => {
            graph_hypotheses(&mut t2, false);
            bounds.push(t2);
        }
        Err(e) => skip(CaseId::T2Case1, e.to_string()),
    }

    let chi = if n <= EXACT_COLORING_CAP { chi_k_exact(g, k)? } else { chi_k_greedy(g, k)? };
    let chi = ChiSummary { num_colors: chi.num_colors, exact: chi.exact };

    match brooks_distance_bound(stats.max_degree, k) {
        Ok(m) => {
            let m = i128::try_from(m).map_err(|_| Error::Overflow("Brooks bound"))?;
            bounds.push(BoundValue::new(CaseId::BrooksM, Quantity::Chi, Direction::Upper, ratio(m, 1), &["Delta >= 3"]));
        }
        Err(e) => skip(CaseId::BrooksM, e.to_string()),
    }

    let mut lower = chromatic_lower_bound(n, chi.num_colors)?;
    lower.conditions.push(if chi.exact {
        "chi_k exact".into()
    } else {
        "chi_k from greedy coloring (heuristic; the bound stays valid)".into()
    });
    bounds.push(lower);

    if stats.is_regular && stats.min_degree >= 1 {
        let mut reg = regular_alpha2_bound(n, stats.min_degree)?;
        if k != 2 {
            reg.violate(format!("k = 2 (k = {k})"));
        }
        bounds.push(reg);
    } else if !stats.is_regular {
        skip(CaseId::RegularAlpha2, "graph is not regular".into());
    } else {
        skip(CaseId::RegularAlpha2, "graph is edgeless".into());
    }

    bounds.sort_by_key(|b| b.case_id);

    let (exact_alpha, tight) = if compute_exact {
        let alpha = alpha_k_exact_with(g, k, opts)?.alpha;
        let tight = bounds
            .iter()
            .filter(|b| b.applicable && b.quantity == Quantity::Alpha && b.floor_value == alpha as i128)
            .map(|b| b.case_id)
            .collect();
        (Some(alpha), Some(tight))
    } else {
        (None, None)
    };

    Ok(BoundReport {
        n,
        k,
        min_degree: stats.min_degree,
        max_degree: stats.max_degree,
        diameter,
        connected,
        chi,
        bounds,
        skipped,
        exact_alpha,
        tight,
    })
}

/// Convenience for printing a rational as a float in text output.
pub fn ratio_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
