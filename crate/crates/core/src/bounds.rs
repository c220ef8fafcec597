//! Guarantee constants and formulas: Goemans–Williamson, Frieze–Jerrum,
//! Håstad's Max 2-CSP bound, and their transfer along `d`.

use std::fmt;
use std::ops::RangeInclusive;

use num_traits::{Float, FloatConst, One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::distance::distance;
use crate::error::{Error, Result};
use crate::graph::{complete, Graph};
use crate::homomorphism::hom_equivalent;
use crate::limits::Limits;
use crate::{rational, Rational};

/// Known values of `α_k`, stated to six decimals.
pub const TABULATED_ALPHA: [(usize, f64); 2] = [(2, 0.878567), (3, 0.836008)];

/// Where a guarantee constant comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Taken from the table of published constants.
    Tabulated,
    /// The asymptotic expression `1 - 1/k + 2 ln k / k²`; an estimate only.
    Asymptotic,
    /// Obtained by numerical minimization.
    Computed,
    /// An exact rational formula.
    Exact,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Tabulated => "tabulated",
            Provenance::Asymptotic => "asymptotic",
            Provenance::Computed => "computed",
            Provenance::Exact => "exact",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub provenance: Provenance,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlphaGw<F> {
    pub value: F,
    pub theta: F,
}

/// `(θ/π) / ((1 - cos θ) / 2)`.
pub fn gw_objective<F: Float + FloatConst>(theta: F) -> F {
    let two = F::one() + F::one();
    (theta / F::PI()) / ((F::one() - theta.cos()) / two)
}

/// Minimum of [`gw_objective`] over `(0, π)` by golden-section search, with
/// the minimizer located to within `tolerance`.
pub fn alpha_gw<F: Float + FloatConst>(tolerance: F) -> Result<AlphaGw<F>> {
    let floor = F::from(1e-12).unwrap();
    if tolerance.is_nan() || tolerance < floor {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be at least 1e-12, got {:e}",
            tolerance.to_f64().unwrap_or(f64::NAN)
        )));
    }
    let ratio = (F::from(5.0).unwrap().sqrt() - F::one()) / F::from(2.0).unwrap();
    let mut lo = F::from(0.5).unwrap();
    let mut hi = F::PI();
    let mut a = hi - ratio * (hi - lo);
    let mut b = lo + ratio * (hi - lo);
    let (mut fa, mut fb) = (gw_objective(a), gw_objective(b));
    for _ in 0..400 {
        if hi - lo <= tolerance {
            break;
        }
        if fa <= fb {
            hi = b;
            b = a;
            fb = fa;
            a = hi - ratio * (hi - lo);
            fa = gw_objective(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + ratio * (hi - lo);
            fb = gw_objective(b);
        }
    }
    let theta = (lo + hi) / F::from(2.0).unwrap();
    Ok(AlphaGw {
        value: gw_objective(theta),
        theta,
    })
}

/// `α_k`: tabulated for `k ∈ {2, 3}`, the asymptotic expression otherwise.
pub fn alpha_k(k: usize) -> Result<Estimate> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("alpha_k needs k >= 2, got {k}")));
    }
    if let Some(&(_, value)) = TABULATED_ALPHA.iter().find(|&&(t, _)| t == k) {
        return Ok(Estimate {
            value,
            provenance: Provenance::Tabulated,
        });
    }
    let kf = k as f64;
    Ok(Estimate {
        value: 1.0 - 1.0 / kf + 2.0 * kf.ln() / (kf * kf),
        provenance: Provenance::Asymptotic,
    })
}

/// The tabulated constant as an exact decimal fraction.
fn tabulated_exact(k: usize) -> Option<Rational> {
    match k {
        2 => Some(rational(878_567, 1_000_000)),
        3 => Some(rational(836_008, 1_000_000)),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HastadValue {
    pub vertices: usize,
    pub edges: usize,
    pub c: Rational,
    /// Exact value when `c = 0`, namely `2e / d²`.
    pub exact: Option<Rational>,
    pub value: f64,
}

/// `1 - t/d² · (1 - c / (d² ln d))` with `d = vertices`, `t = d² - 2·edges`.
pub fn hastad_value(vertices: usize, edges: usize, c: &Rational) -> Result<HastadValue> {
    if vertices < 2 {
        return Err(Error::InvalidParameter(format!(
            "the Max 2-CSP bound needs at least 2 vertices, got {vertices}"
        )));
    }
    if c < &Rational::zero() {
        return Err(Error::InvalidParameter(format!("c must be nonnegative, got {c}")));
    }
    if 2 * edges > vertices * (vertices - 1) {
        return Err(Error::InvalidParameter(format!(
            "{edges} edges exceed a simple graph on {vertices} vertices"
        )));
    }
    let d2 = (vertices * vertices) as i64;
    let t = d2 - 2 * edges as i64;
    if c.is_zero() {
        let exact = rational(2 * edges as i64, d2);
        return Ok(HastadValue {
            vertices,
            edges,
            c: c.clone(),
            value: exact.to_f64().unwrap_or(f64::NAN),
            exact: Some(exact),
        });
    }
    let (d, cf) = (vertices as f64, c.to_f64().unwrap_or(f64::NAN));
    let value = 1.0 - (t as f64 / d2 as f64) * (1.0 - cf / (d * d * d.ln()));
    Ok(HastadValue {
        vertices,
        edges,
        c: c.clone(),
        exact: None,
        value,
    })
}

pub fn hastad_bound(h: &Graph, c: &Rational) -> Result<HastadValue> {
    hastad_value(h.vertex_count(), h.edge_count(), c)
}

/// Algorithm whose guarantee is reported.
#[derive(Clone, Debug, PartialEq)]
pub enum BaseAlgorithm {
    /// Goemans–Williamson for Max cut.
    Gw,
    /// Frieze–Jerrum for Max k-cut.
    Fj(usize),
    /// Håstad's Max 2-CSP algorithm with constant `c`.
    Hastad(Rational),
}

impl fmt::Display for BaseAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseAlgorithm::Gw => write!(f, "GW"),
            BaseAlgorithm::Fj(k) => write!(f, "FJ({k})"),
            BaseAlgorithm::Hastad(c) => write!(f, "Hastad(c={c})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GuaranteeReport {
    pub algorithm: BaseAlgorithm,
    /// Base constant of the algorithm on its own problem.
    pub alpha: Estimate,
    /// The minimization result, reported next to the tabulated GW constant.
    pub computed_alpha: Option<f64>,
    /// `s(M, N)` and `s(N, M)` for a transfer.
    pub s_mn: Option<Rational>,
    pub s_nm: Option<Rational>,
    /// `1 - d(M, N)`.
    pub factor: Option<Rational>,
    pub lower_bound: f64,
    /// Exact lower bound when every factor is rational.
    pub lower_bound_exact: Option<Rational>,
    pub upper_bound: Option<f64>,
    pub provenance: Provenance,
    pub derivation: Vec<String>,
}

fn base_constant(base: &BaseAlgorithm) -> Result<(usize, Estimate, Option<f64>)> {
    match base {
        BaseAlgorithm::Gw => {
            let computed = alpha_gw(1e-10f64)?.value;
            Ok((2, alpha_k(2)?, Some(computed)))
        }
        BaseAlgorithm::Fj(k) => Ok((*k, alpha_k(*k)?, None)),
        BaseAlgorithm::Hastad(_) => Err(Error::InvalidParameter(
            "the Max 2-CSP bound is evaluated directly, not transferred".into(),
        )),
    }
}

/// Guarantee `α · (1 - d(M, N))` for Max `N`-Col, where `α` is the guarantee
/// of `base` on Max `M`-Col. `M` must be homomorphically equivalent to `K_2`
/// for GW and to `K_k` for FJ(k).
pub fn transfer_guarantee(
    base: &BaseAlgorithm,
    m: &Graph,
    n: &Graph,
    limits: &Limits,
) -> Result<GuaranteeReport> {
    let (k, alpha, computed_alpha) = base_constant(base)?;
    if hom_equivalent(m, &complete(k), limits)?.is_none() {
        return Err(Error::InvalidParameter(format!(
            "{base} needs a source graph homomorphically equivalent to K{k}"
        )));
    }
    let report = distance::<Rational>(m, n, limits)?;
    let factor = Rational::one() - report.d.clone();
    let lower_bound = (alpha.value * factor.to_f64().unwrap_or(f64::NAN)).min(1.0);
    let lower_bound_exact = match alpha.provenance {
        Provenance::Tabulated => tabulated_exact(k).map(|a| a * factor.clone()),
        _ => None,
    };
    let mut derivation = vec![format!("alpha = {} ({})", alpha.value, alpha.provenance)];
    if let Some(computed) = computed_alpha {
        derivation.push(format!("alpha by minimization = {computed:.9}"));
    }
    derivation.push(format!("s(M,N) = {}", report.s_mn.value));
    derivation.push(format!("s(N,M) = {}", report.s_nm.value));
    derivation.push(format!("1 - d(M,N) = {factor}"));
    Ok(GuaranteeReport {
        algorithm: base.clone(),
        alpha,
        computed_alpha,
        s_mn: Some(report.s_mn.value),
        s_nm: Some(report.s_nm.value),
        factor: Some(factor),
        lower_bound,
        lower_bound_exact,
        upper_bound: None,
        provenance: alpha.provenance,
        derivation,
    })
}

/// Håstad's bound on `h` as a report.
pub fn hastad_report(h: &Graph, c: &Rational) -> Result<GuaranteeReport> {
    let value = hastad_bound(h, c)?;
    Ok(GuaranteeReport {
        algorithm: BaseAlgorithm::Hastad(c.clone()),
        alpha: Estimate {
            value: value.value,
            provenance: Provenance::Exact,
        },
        computed_alpha: None,
        s_mn: None,
        s_nm: None,
        factor: None,
        lower_bound: value.value,
        lower_bound_exact: value.exact.clone(),
        upper_bound: None,
        provenance: Provenance::Exact,
        derivation: vec![
            format!("d = v(H) = {}", value.vertices),
            format!(
                "t(H) = d^2 - 2e(H) = {}",
                value.vertices * value.vertices - 2 * value.edges
            ),
            format!("c = {c}"),
        ],
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct InapproxReport {
    pub beta: Rational,
    /// `1 - d(N, K)`.
    pub factor: Rational,
    /// `β / (1 - d(N, K))` before capping.
    pub raw_bound: Rational,
    /// `min(1, raw_bound)`.
    pub bound: Rational,
    pub capped: bool,
    /// Always true: the bound is only as strong as the hardness of Max `N`-Col.
    pub conditional: bool,
}

/// If Max `N`-Col is not approximable within `β`, Max `K`-Col is not
/// approximable within `β / (1 - d(N, K))`.
pub fn inapprox_transfer(
    beta: &Rational,
    n: &Graph,
    k: &Graph,
    limits: &Limits,
) -> Result<InapproxReport> {
    if !(beta > &Rational::zero() && beta < &Rational::one()) {
        return Err(Error::InvalidParameter(format!("beta must lie in (0, 1), got {beta}")));
    }
    let report = distance::<Rational>(n, k, limits)?;
    let factor = Rational::one() - report.d;
    if factor.is_zero() {
        return Err(Error::NoBoundDerivable("d(N,K) = 1".into()));
    }
    let raw_bound = beta / &factor;
    let capped = raw_bound > Rational::one();
    Ok(InapproxReport {
        beta: beta.clone(),
        bound: if capped { Rational::one() } else { raw_bound.clone() },
        factor,
        raw_bound,
        capped,
        conditional: true,
    })
}

/// Edge count of the Turán graph `T(n, r)`.
pub fn turan_edges(n: usize, r: usize) -> usize {
    let (q, extra) = (n / r, n % r);
    let inside = extra * (q + 1) * q / 2 + (r - extra) * q * q.saturating_sub(1) / 2;
    n * (n - 1) / 2 - inside
}

/// `e(T(n, r)) / e(K_n)`, which is `s(K_r, K_n)` for `r < n`.
///
/// The numerator is the exact part-size count. It agrees with
/// `⌊(1 - 1/r) n²/2⌋` for `n ≤ 11` but not in general: `T(12, 8)` has 62
/// edges, the floor expression gives 63.
pub fn turan_ratio(r: usize, n: usize) -> Result<Rational> {
    if r < 1 || n < 2 {
        return Err(Error::InvalidParameter(format!("turan ratio needs r >= 1, n >= 2; got r={r}, n={n}")));
    }
    if r >= n {
        return Ok(Rational::one());
    }
    let edges = turan_edges(n, r) as i64;
    let n = n as i64;
    Ok(rational(2 * edges, n * (n - 1)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Cycles,
    Wheels,
    Complete,
    /// Graphs on `n` vertices with at least `e(T(n, r))` edges; all `r < n`
    /// when unset.
    TuranDense { r: Option<usize> },
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Cycles => "cycles",
            Family::Wheels => "wheels",
            Family::Complete => "complete",
            Family::TuranDense { .. } => "turan_dense",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub family: Family,
    /// Family parameter: `k` for cycles and wheels, `n` otherwise.
    pub parameter: usize,
    pub r: Option<usize>,
    /// Number of colours of the Frieze–Jerrum algorithm applied.
    pub fj_k: usize,
    pub alpha: Estimate,
    /// Exact `s`-factor multiplying `α`.
    pub factor: Rational,
    pub fj: f64,
    pub hastad: HastadValue,
}

impl SweepRow {
    pub fn fj_dominates(&self) -> bool {
        self.fj > self.hastad.value
    }
}

fn sweep_row(family: Family, parameter: usize, r: Option<usize>, c: &Rational) -> Result<SweepRow> {
    let (fj_k, factor, vertices, edges) = match family {
        Family::Cycles => {
            let k = parameter as i64;
            (2, rational(k - 1, k), parameter, parameter)
        }
        Family::Wheels => {
            let k = parameter as i64;
            (3, rational(2 * k - 3, 2 * k - 2), parameter, 2 * (parameter - 1))
        }
        Family::Complete => (parameter, Rational::one(), parameter, parameter * (parameter - 1) / 2),
        Family::TuranDense { .. } => {
            let r = r.expect("turan rows carry r");
            let n = parameter;
            (n, turan_ratio(r, n)?, n, turan_edges(n, r))
        }
    };
    let alpha = alpha_k(fj_k)?;
    Ok(SweepRow {
        family,
        parameter,
        r,
        fj_k,
        alpha,
        fj: alpha.value * factor.to_f64().unwrap_or(f64::NAN),
        factor,
        hastad: hastad_value(vertices, edges, c)?,
    })
}

/// Frieze–Jerrum transfer against Håstad's bound over a family, using the
/// closed-form s-values of each family.
///
/// Cycles take odd `k ≥ 3`, wheels even `k ≥ 4`, complete graphs `n ≥ 2`;
/// dense rows pair `n` with each admissible `r` and evaluate Håstad's bound
/// at the Turán edge count.
pub fn family_sweep(family: Family, range: RangeInclusive<usize>, c: &Rational) -> Result<Vec<SweepRow>> {
    if range.start() > range.end() {
        return Err(Error::InvalidParameter(format!(
            "empty range {}..{}",
            range.start(),
            range.end()
        )));
    }
    let keys: Vec<(usize, Option<usize>)> = match family {
        Family::Cycles => range.filter(|k| *k >= 3 && k % 2 == 1).map(|k| (k, None)).collect(),
        Family::Wheels => range.filter(|k| *k >= 4 && k % 2 == 0).map(|k| (k, None)).collect(),
        Family::Complete => range.filter(|n| *n >= 2).map(|n| (n, None)).collect(),
        Family::TuranDense { r: Some(r) } => {
            if r < 2 {
                return Err(Error::InvalidParameter(format!("r must be at least 2, got {r}")));
            }
            range.filter(|n| *n > r).map(|n| (n, Some(r))).collect()
        }
        Family::TuranDense { r: None } => range
            .flat_map(|n| (2..n).map(move |r| (n, Some(r))))
            .collect(),
    };
    if keys.is_empty() {
        return Err(Error::InvalidParameter(format!(
            "range contains no admissible {} parameters",
            family.name()
        )));
    }
    keys.par_iter()
        .map(|&(parameter, r)| sweep_row(family, parameter, r, c))
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct RandomGraphEstimate {
    /// `α_ω · s(K_ω, K_χ)`.
    pub fj: Estimate,
    pub factor: Rational,
    /// Håstad's bound at the expected edge count `C(n,2) p`.
    pub hastad: f64,
}

/// Formula evaluation for `G(n, p)` given a clique number `ω` and chromatic
/// number `χ`; no sampling is done.
pub fn random_graph_estimate(n: usize, p: f64, omega: usize, chi: usize, c: f64) -> Result<RandomGraphEstimate> {
    if !(p > 0.0 && p < 1.0) || c < 0.0 {
        return Err(Error::InvalidParameter(format!("need 0 < p < 1 and c >= 0, got p={p}, c={c}")));
    }
    if !(2 <= omega && omega <= chi && chi <= n) {
        return Err(Error::InvalidParameter(format!(
            "need 2 <= omega <= chi <= n, got omega={omega}, chi={chi}, n={n}"
        )));
    }
    let alpha = alpha_k(omega)?;
    let factor = turan_ratio(omega, chi)?;
    let d = n as f64;
    let edges = d * (d - 1.0) / 2.0 * p;
    let hastad = 1.0 - (d * d - 2.0 * edges) / (d * d) * (1.0 - c / (d * d * d.ln()));
    Ok(RandomGraphEstimate {
        fj: Estimate {
            value: alpha.value * factor.to_f64().unwrap_or(f64::NAN),
            provenance: alpha.provenance,
        },
        factor,
        hastad,
    })
}

/// Decimal rendering with `digits` significant digits.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}
