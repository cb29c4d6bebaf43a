//! Meijer G-function of order (1,3;3,1) on the positive real axis, plus the
//! order-flipped residue series and the sine/cosine recovery identities.
//!
//! Three routes are implemented and cross-checked:
//!
//! * `contour`: the defining Mellin-Barnes integral along a vertical line
//!   inside the pole-separation strip, with conjugate-symmetric doubling;
//! * `residue-series`: the order-flip to (3,1;1,3) at `w = 1/z`, summed as
//!   three 1F2-type power series over the right pole family (entire in `w`,
//!   but with factorial-scale cancellation for large `w`);
//! * `limit`: the ascending expansion at `z -> 0+` over the poles of
//!   `Gamma(b1 - zeta)`, asymptotic for this order and extremely accurate
//!   below `z ~ 1e-4`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gamma::{gamma_real, log_gamma};
use crate::quadrature::{GL16, GL32};
use crate::result::{EvaluationResult, Method, Work};

/// Parameter block of `G^{1,3}_{3,1}(z | a1, a2, a3; b1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GParams131 {
    upper: [f64; 3],
    lower: f64,
}

/// Parameters of the flipped form `G^{3,1}_{1,3}(1/z | c1; d1, d2, d3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Flipped3113 {
    pub upper: f64,
    pub lower: [f64; 3],
}

impl GParams131 {
    /// Validates the classical conditions: no `a_k - b1` may be a positive
    /// integer, and the pole-separation strip must be non-empty.
    pub fn new(a1: f64, a2: f64, a3: f64, b1: f64) -> Result<Self> {
        let upper = [a1, a2, a3];
        for v in upper.iter().chain([&b1]) {
            if !v.is_finite() {
                return Err(Error::InvalidParameters("non-finite parameter".into()));
            }
        }
        for &a in &upper {
            let d = a - b1;
            if d >= 0.5 && (d - d.round()).abs() < 1e-12 {
                return Err(Error::InvalidParameters(format!(
                    "a - b1 = {d} is a positive integer"
                )));
            }
        }
        let left = upper.iter().fold(f64::NEG_INFINITY, |m, &a| m.max(a)) - 1.0;
        if left >= b1 {
            return Err(Error::InvalidParameters(format!(
                "pole-separation strip ({left}, {b1}) is empty"
            )));
        }
        Ok(GParams131 { upper, lower: b1 })
    }

    pub fn upper(&self) -> [f64; 3] {
        self.upper
    }

    pub fn lower(&self) -> f64 {
        self.lower
    }

    /// Convergence measure `m + n - (p+q)/2`; identically 2 for this order,
    /// so the contour integral converges for `|arg z| < 2 pi`.
    pub fn lambda(&self) -> f64 {
        2.0
    }

    /// `omega = b1 - (a1 + a2 + a3)`.
    pub fn omega(&self) -> f64 {
        self.lower - self.upper.iter().sum::<f64>()
    }

    /// Open strip `(max_k a_k - 1, b1)` separating the left poles
    /// `zeta = a_k - 1 - j` from the right poles `zeta = b1 + j`.
    pub fn strip(&self) -> (f64, f64) {
        let left = self.upper.iter().fold(f64::NEG_INFINITY, |m, &a| m.max(a)) - 1.0;
        (left, self.lower)
    }
}

/// Order-flip `G^{1,3}_{3,1}(z | a; b1) = G^{3,1}_{1,3}(1/z | 1-b1; 1-a)`.
pub fn flip_to_3113(params: &GParams131) -> Flipped3113 {
    Flipped3113 {
        upper: 1.0 - params.lower,
        lower: [
            1.0 - params.upper[0],
            1.0 - params.upper[1],
            1.0 - params.upper[2],
        ],
    }
}

/// Vertical-line specification for the contour route.
#[derive(Debug, Clone, Copy)]
pub struct ContourSpec {
    /// Abscissa of the integration line; must lie strictly inside the strip.
    pub xi: f64,
    /// Truncation height, chosen so the envelope tail is below tolerance.
    pub t_max: f64,
    /// Target absolute tolerance of the quadrature.
    pub abs_tol: f64,
}

impl ContourSpec {
    /// Default spec: midpoint abscissa, truncation from the `e^{-2 pi |eta|}`
    /// envelope of the four-gamma product.
    pub fn for_params(params: &GParams131, z: f64, abs_tol: f64) -> Self {
        let (lo, hi) = params.strip();
        let xi = 0.5 * (lo + hi);
        ContourSpec {
            xi,
            t_max: truncation_height(params, z, xi, abs_tol),
            abs_tol,
        }
    }

    /// Same as [`ContourSpec::for_params`] with an explicit abscissa.
    pub fn with_abscissa(params: &GParams131, z: f64, xi: f64, abs_tol: f64) -> Result<Self> {
        let (lo, hi) = params.strip();
        if !(xi > lo && xi < hi) {
            return Err(Error::InvalidParameters(format!(
                "abscissa {xi} outside the pole-separation strip ({lo}, {hi})"
            )));
        }
        Ok(ContourSpec {
            xi,
            t_max: truncation_height(params, z, xi, abs_tol),
            abs_tol,
        })
    }
}

/// Envelope bound on the contour integrand magnitude at height `eta`:
/// `K max(1, eta)^pow e^{-2 pi eta} z^xi` where `pow` collects the algebraic
/// growth of the four Stirling factors.
fn envelope(params: &GParams131, z: f64, xi: f64, eta: f64) -> f64 {
    let sum_re = (params.lower - xi)
        + params.upper.iter().map(|&a| 1.0 - a + xi).sum::<f64>();
    let pow = sum_re - 2.0;
    let k = 8.0 * std::f64::consts::PI * std::f64::consts::PI;
    k * eta.max(1.0).powf(pow) * (-2.0 * std::f64::consts::PI * eta).exp() * z.powf(xi)
}

/// Bound on the discarded tail `int_T^inf |integrand|`, divided by pi to
/// match its contribution to the final value.
fn tail_bound(params: &GParams131, z: f64, xi: f64, t: f64) -> f64 {
    let sum_re = (params.lower - xi)
        + params.upper.iter().map(|&a| 1.0 - a + xi).sum::<f64>();
    let pow = (sum_re - 2.0).max(0.0);
    envelope(params, z, xi, t) / (2.0 * std::f64::consts::PI) * (1.0 + pow / t)
        / std::f64::consts::PI
}

/// Truncation: both the discarded tail integral and the pointwise envelope
/// magnitude at the cut must sit below tolerance.
fn truncation_height(params: &GParams131, z: f64, xi: f64, abs_tol: f64) -> f64 {
    let mut t = 3.0;
    while (tail_bound(params, z, xi, t) > abs_tol * 0.1
        || envelope(params, z, xi, t) > abs_tol / (10.0 * t))
        && t < 40.0
    {
        t += 0.5;
    }
    t
}

/// Contour integrand `Gamma(b1 - zeta) prod Gamma(1 - a_k + zeta) z^zeta` at
/// `zeta = xi + i eta`. Pole-free for any abscissa inside the strip.
fn contour_integrand(params: &GParams131, ln_z: f64, xi: f64, eta: f64) -> Complex64 {
    let zeta = Complex64::new(xi, eta);
    let mut log_sum = Complex64::new(0.0, 0.0);
    // arguments have positive real part inside the strip, so log_gamma
    // cannot hit a pole; a NaN here would fail the quadrature loudly
    let nanc = Complex64::new(f64::NAN, f64::NAN);
    log_sum += log_gamma(Complex64::new(params.lower, 0.0) - zeta).unwrap_or(nanc);
    for &a in &params.upper {
        log_sum += log_gamma(Complex64::new(1.0 - a, 0.0) + zeta).unwrap_or(nanc);
    }
    log_sum += zeta * ln_z;
    log_sum.exp()
}

fn gl_apply_complex<F: Fn(f64) -> Complex64>(
    f: &F,
    a: f64,
    b: f64,
    rule: &(Vec<f64>, Vec<f64>),
) -> Complex64 {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut acc = Complex64::new(0.0, 0.0);
    for (&x, &w) in rule.0.iter().zip(rule.1.iter()) {
        acc += w * f(c + h * x);
    }
    acc * h
}

fn panel_adaptive_complex<F: Fn(f64) -> Complex64>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    depth: usize,
    panels: &mut u64,
) -> (Complex64, f64) {
    *panels += 1;
    let coarse = gl_apply_complex(f, a, b, &GL16);
    let fine = gl_apply_complex(f, a, b, &GL32);
    let diff = (fine - coarse).norm();
    if diff <= tol || depth >= 14 {
        return (fine, diff.max(f64::EPSILON * fine.norm()));
    }
    let mid = 0.5 * (a + b);
    let (v1, e1) = panel_adaptive_complex(f, a, mid, 0.5 * tol, depth + 1, panels);
    let (v2, e2) = panel_adaptive_complex(f, mid, b, 0.5 * tol, depth + 1, panels);
    (v1 + v2, e1 + e2)
}

/// Mellin-Barnes contour evaluation.
///
/// For real positive `z` the integrand at `-eta` is the conjugate of the
/// integrand at `eta`, so the full line reduces to `Re(int_0^T)/pi`; the
/// imaginary part of the result vanishes identically by this doubling.
pub fn contour_eval(params: &GParams131, z: f64, spec: &ContourSpec) -> Result<EvaluationResult> {
    check_z(z)?;
    let (lo, hi) = params.strip();
    if !(spec.xi > lo && spec.xi < hi) {
        return Err(Error::InvalidParameters(format!(
            "abscissa {} outside the pole-separation strip ({lo}, {hi})",
            spec.xi
        )));
    }
    let ln_z = z.ln();
    let f = |eta: f64| contour_integrand(params, ln_z, spec.xi, eta);
    // quarter-period panels against the z^{i eta} oscillation
    let width = (std::f64::consts::FRAC_PI_2 / ln_z.abs().max(1.0)).min(0.5);
    let n_panels = (spec.t_max / width).ceil() as usize;
    let width = spec.t_max / n_panels as f64;
    let panel_tol = spec.abs_tol / (4.0 * n_panels as f64);

    let mut acc = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut panels = 0u64;
    for i in 0..n_panels {
        let a = i as f64 * width;
        let b = a + width;
        let (v, e) = panel_adaptive_complex(&f, a, b, panel_tol, 0, &mut panels);
        acc += v;
        err += e;
    }
    let value = acc.re / std::f64::consts::PI;
    if !value.is_finite() {
        return Err(Error::InvalidParameters(
            "contour integrand produced non-finite values".into(),
        ));
    }
    let est = err / std::f64::consts::PI
        + tail_bound(params, z, spec.xi, spec.t_max)
        + f64::EPSILON * acc.norm();
    Ok(EvaluationResult::new(
        value,
        est,
        Method::Contour,
        Work { terms: 0, panels },
    ))
}

/// Residue series of `G^{3,1}_{1,3}(w | c1; d)` over the right pole family:
/// three 1F2-type series, one per lower parameter,
///
/// `G = sum_j w^{d_j} Gamma(d_h1 - d_j) Gamma(d_h2 - d_j) Gamma(1 + d_j - c1)
///      1F2(1 + d_j - c1; 1 + d_j - d_h1, 1 + d_j - d_h2; -w)`.
///
/// Entire in `w`; the largest intermediate partial grows like
/// `exp(2 sqrt w)`, so a cancellation warning is raised for large `w`.
pub fn residue_series_3113(
    flipped: &Flipped3113,
    w: f64,
    tol: f64,
) -> Result<EvaluationResult> {
    let d = flipped.lower;
    for i in 0..3 {
        for j in (i + 1)..3 {
            let diff = d[i] - d[j];
            if (diff - diff.round()).abs() < 1e-10 {
                return Err(Error::CoincidentPoles);
            }
        }
    }
    if w < 0.0 || !w.is_finite() {
        return Err(Error::Domain(format!("residue series: w = {w} must be >= 0")));
    }
    if w == 0.0 {
        let min_d = d.iter().cloned().fold(f64::INFINITY, f64::min);
        if min_d > 0.0 {
            return Ok(EvaluationResult::new(0.0, 0.0, Method::ResidueSeries, Work::default()));
        }
        return Err(Error::Domain(
            "residue series: w = 0 with a non-positive pole exponent".into(),
        ));
    }

    const MAX_TERMS: usize = 400;
    let mut total = 0.0_f64;
    let mut worst_partial = 0.0_f64;
    let mut terms_used = 0u64;
    for j in 0..3 {
        let dj = d[j];
        let others = [d[(j + 1) % 3], d[(j + 2) % 3]];
        let prefactor = gamma_real(others[0] - dj)?
            * gamma_real(others[1] - dj)?
            * gamma_real(1.0 + dj - flipped.upper)?
            * w.powf(dj);
        let a = 1.0 + dj - flipped.upper;
        let b0 = 1.0 + dj - others[0];
        let b1 = 1.0 + dj - others[1];
        let mut term = 1.0_f64;
        let mut sum = 0.0_f64;
        let mut max_partial = 0.0_f64;
        let mut small_streak = 0usize;
        let mut converged = false;
        for k in 0..MAX_TERMS {
            sum += term;
            max_partial = max_partial.max(sum.abs());
            terms_used += 1;
            let kf = k as f64;
            term *= (a + kf) / ((b0 + kf) * (b1 + kf) * (kf + 1.0)) * (-w);
            if term.abs() <= tol * sum.abs().max(f64::MIN_POSITIVE) {
                small_streak += 1;
                if small_streak >= 3 {
                    converged = true;
                    break;
                }
            } else {
                small_streak = 0;
            }
        }
        if !converged {
            return Err(Error::ToleranceNotReached {
                best: total + prefactor * sum,
                abs_err_est: (prefactor * term).abs() * MAX_TERMS as f64,
            });
        }
        total += prefactor * sum;
        worst_partial = worst_partial.max((prefactor * max_partial).abs());
    }
    let est = (f64::EPSILON * worst_partial).max(tol * total.abs()) + f64::MIN_POSITIVE;
    Ok(
        EvaluationResult::new(total, est, Method::ResidueSeries, Work {
            terms: terms_used,
            panels: 0,
        })
        .with_cancellation_warning(worst_partial > 1e8 * total.abs()),
    )
}

/// Ascending expansion at `z -> 0+` over the poles of `Gamma(b1 - zeta)`:
/// `G ~ sum_j (-1)^j / j! prod_k Gamma(1 - a_k + b1 + j) z^{b1 + j}`.
///
/// Asymptotic (the order has p > q), with remainder of the order of the
/// first omitted term; used as the `limit` method for small arguments.
pub fn small_z_expansion(params: &GParams131, z: f64) -> Result<EvaluationResult> {
    check_z(z)?;
    const J: usize = 5;
    let b1 = params.lower;
    let mut value = 0.0_f64;
    let mut scale = 0.0_f64;
    let mut coeff_next = 0.0;
    for j in 0..=J {
        let mut c = if j.is_multiple_of(2) { 1.0 } else { -1.0 };
        for &a in &params.upper {
            c *= gamma_real(1.0 - a + b1 + j as f64)?;
        }
        let mut fact = 1.0;
        for m in 1..=j {
            fact *= m as f64;
        }
        c /= fact;
        if j == J {
            coeff_next = c;
            break;
        }
        let term = c * z.powf(b1 + j as f64);
        value += term;
        scale = scale.max(term.abs());
    }
    let est = (coeff_next * z.powf(b1 + J as f64)).abs() * 2.0 + f64::EPSILON * scale;
    Ok(EvaluationResult::new(value, est, Method::Limit, Work {
        terms: J as u64,
        panels: 0,
    }))
}

fn check_z(z: f64) -> Result<()> {
    if z == 0.0 {
        return Err(Error::ZeroArgument);
    }
    if !(z > 0.0) {
        return Err(Error::Domain(format!(
            "G-function argument z = {z} must be positive real"
        )));
    }
    Ok(())
}

/// Residue-series threshold: below this `z` the series argument `w = 1/z`
/// brings factorial-scale cancellation, so the contour takes over.
const RESIDUE_MIN_Z: f64 = 0.25;
/// Below this `z` the ascending expansion is accurate to well under 1e-13
/// absolute and far cheaper than the contour.
const LIMIT_MAX_Z: f64 = 1e-4;

/// Evaluates `G^{1,3}_{3,1}(z)` for positive real `z`.
///
/// With `method = None` the route is selected from `z`: residue series for
/// `z >= 0.25`, ascending limit expansion for `z <= 1e-4`, contour otherwise.
pub fn g_1331(
    params: &GParams131,
    z: f64,
    method: Option<Method>,
    abs_tol: f64,
) -> Result<EvaluationResult> {
    check_z(z)?;
    let chosen = method.unwrap_or(if z >= RESIDUE_MIN_Z {
        Method::ResidueSeries
    } else if z <= LIMIT_MAX_Z {
        Method::Limit
    } else {
        Method::Contour
    });
    match chosen {
        Method::Contour => {
            let spec = ContourSpec::for_params(params, z, abs_tol);
            contour_eval(params, z, &spec)
        }
        Method::ResidueSeries => {
            residue_series_3113(&flip_to_3113(params), 1.0 / z, abs_tol.min(1e-13))
        }
        Method::Limit => small_z_expansion(params, z),
        other => Err(Error::Domain(format!(
            "g_1331: unsupported method {other:?}"
        ))),
    }
}

/// Evaluates by both independent routes and errors with
/// [`Error::MethodDisagreement`] when they differ beyond ten times the
/// combined error estimates. Returns the route with the smaller estimate.
pub fn g_1331_crosschecked(
    params: &GParams131,
    z: f64,
    abs_tol: f64,
) -> Result<EvaluationResult> {
    let contour = g_1331(params, z, Some(Method::Contour), abs_tol)?;
    let other = if z >= 1e-3 {
        g_1331(params, z, Some(Method::ResidueSeries), abs_tol)?
    } else {
        g_1331(params, z, Some(Method::Limit), abs_tol)?
    };
    let combined = contour.abs_err_est + other.abs_err_est;
    if (contour.value - other.value).abs() > 10.0 * combined {
        return Err(Error::MethodDisagreement {
            contour: contour.value,
            series: other.value,
            combined_est: combined,
        });
    }
    Ok(if other.abs_err_est <= contour.abs_err_est {
        other
    } else {
        contour
    })
}

/// `sin x` recovered from `sqrt(pi) G^{1,0}_{0,2}(x^2/4 | -; 1/2, 0)`,
/// summed as the single residue series `x 0F1(; 3/2; -x^2/4)`.
///
/// The series is entire but cancels like `e^{|x|}`, so accuracy degrades
/// beyond `|x| ~ 15`; arguments past 50 are rejected.
pub fn sin_via_g(x: f64) -> Result<f64> {
    if x.abs() >= 50.0 {
        return Err(Error::Domain(format!(
            "sin_via_g: |x| = {} exceeds the supported range",
            x.abs()
        )));
    }
    // sqrt(pi) w^{1/2} sum_k (-w)^k / (k! Gamma(k + 3/2)), w = x^2/4
    let w = 0.25 * x * x;
    let mut term = 1.0 / gamma_real(1.5)?;
    let mut sum = 0.0;
    for k in 0..300 {
        sum += term;
        let kf = k as f64;
        term *= -w / ((kf + 1.0) * (kf + 1.5));
        if term.abs() < 1e-18 * sum.abs().max(1e-30) {
            break;
        }
    }
    Ok(x.signum() * std::f64::consts::PI.sqrt() * w.sqrt() * sum)
}

/// `cos x` from `sqrt(pi) G^{1,0}_{0,2}(x^2/4 | -; 0, 1/2)`; same series
/// mechanics and caveats as [`sin_via_g`].
pub fn cos_via_g(x: f64) -> Result<f64> {
    if x.abs() >= 50.0 {
        return Err(Error::Domain(format!(
            "cos_via_g: |x| = {} exceeds the supported range",
            x.abs()
        )));
    }
    let w = 0.25 * x * x;
    let mut term = 1.0 / gamma_real(0.5)?;
    let mut sum = 0.0;
    for k in 0..300 {
        sum += term;
        let kf = k as f64;
        term *= -w / ((kf + 1.0) * (kf + 0.5));
        if term.abs() < 1e-18 * sum.abs().max(1e-30) {
            break;
        }
    }
    Ok(std::f64::consts::PI.sqrt() * sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sin_params() -> GParams131 {
        GParams131::new(0.25, 0.5, 0.75, 0.5).unwrap()
    }

    fn cos_params() -> GParams131 {
        GParams131::new(0.25, 0.75, 0.0, 0.0).unwrap()
    }

    #[test]
    fn parameter_validation() {
        // a3 - b1 = 1: positive integer difference
        assert!(matches!(
            GParams131::new(0.25, 0.5, 1.5, 0.5),
            Err(Error::InvalidParameters(_))
        ));
        // strip (3/4, 1/2) empty
        assert!(matches!(
            GParams131::new(0.25, 0.5, 1.75, 0.5),
            Err(Error::InvalidParameters(_))
        ));
        let p = sin_params();
        assert_eq!(p.strip(), (-0.25, 0.5));
        assert_eq!(p.lambda(), 2.0);
        assert!((p.omega() - (0.5 - 1.5)).abs() < 1e-15);
    }

    #[test]
    fn flip_examples() {
        let f = flip_to_3113(&sin_params());
        assert_eq!(f.upper, 0.5);
        assert_eq!(f.lower, [0.75, 0.5, 0.25]);
        let f = flip_to_3113(&cos_params());
        assert_eq!(f.upper, 1.0);
        assert_eq!(f.lower, [0.75, 0.25, 1.0]);
    }

    #[test]
    fn contour_matches_residue_series_across_magnitudes() {
        for params in [sin_params(), cos_params()] {
            for &z in &[0.5, 5.0, 50.0] {
                let c = g_1331(&params, z, Some(Method::Contour), 1e-12).unwrap();
                let r = g_1331(&params, z, Some(Method::ResidueSeries), 1e-13).unwrap();
                assert!(
                    (c.value - r.value).abs() <= 1e-10 * r.value.abs().max(1.0),
                    "z={z}: contour {} vs series {}",
                    c.value,
                    r.value
                );
            }
        }
    }

    #[test]
    fn contour_path_independence() {
        let params = sin_params();
        let z = 2.0;
        let (lo, hi) = params.strip();
        let mid = 0.5 * (lo + hi);
        let quarter = 0.25 * (hi - lo);
        let base = contour_eval(&params, z, &ContourSpec::for_params(&params, z, 1e-12)).unwrap();
        for xi in [mid - quarter, mid + quarter] {
            let spec = ContourSpec::with_abscissa(&params, z, xi, 1e-12).unwrap();
            let shifted = contour_eval(&params, z, &spec).unwrap();
            assert!(
                (shifted.value - base.value).abs() <= 1e-11 * base.value.abs(),
                "xi={xi}: {} vs {}",
                shifted.value,
                base.value
            );
        }
    }

    #[test]
    fn truncation_envelope_dominates_integrand() {
        let params = cos_params();
        for &z in &[0.01, 0.5, 7.0] {
            let spec = ContourSpec::for_params(&params, z, 1e-12);
            let g = contour_integrand(&params, z.ln(), spec.xi, spec.t_max).norm();
            let bound = envelope(&params, z, spec.xi, spec.t_max);
            assert!(g <= bound, "z={z}: |integrand| {g} > envelope {bound}");
            assert!(tail_bound(&params, z, spec.xi, spec.t_max) < 1e-13);
            // pointwise magnitude at the cut sits below tol/(10 T)
            assert!(bound <= 1e-12 / (10.0 * spec.t_max));
        }
    }

    #[test]
    fn limit_route_agrees_with_contour_at_small_z() {
        for params in [sin_params(), cos_params()] {
            for &z in &[1e-6, 1e-4] {
                let lim = g_1331(&params, z, Some(Method::Limit), 1e-13).unwrap();
                let cont = g_1331(&params, z, Some(Method::Contour), 1e-13).unwrap();
                assert!(
                    (lim.value - cont.value).abs() <= 1e-12 * cont.value.abs().max(1e-3),
                    "z={z}: limit {} vs contour {}",
                    lim.value,
                    cont.value
                );
            }
        }
    }

    #[test]
    fn g_at_first_series_term_matches_quadrature_oracle() {
        use crate::quadrature::{
            integrate, Decay, Oscillation, OscillatoryIntegrand, PhaseKind, QuadratureConfig,
        };
        // b = 1, alpha = pi term of the first-family expansion:
        // G(64/pi^2 | sin set) = pi^2 sqrt 2 int_0^inf e^{-pi x} sin(pi x^2) dx
        let pi = std::f64::consts::PI;
        let z = 64.0 / (pi * pi);
        let g = g_1331(&sin_params(), z, None, 1e-12).unwrap();
        let oracle = integrate(
            &OscillatoryIntegrand {
                f: |x: f64| (-pi * x).exp() * (pi * x * x).sin(),
                oscillation: Oscillation::QuadraticPhase { omega: pi, kind: PhaseKind::Sine },
                decay: Decay::Exp { rate: pi, amplitude: 1.0 },
            },
            &QuadratureConfig::default(),
        )
        .unwrap();
        let expected = pi * pi * 2.0_f64.sqrt() * oracle.value;
        assert!(
            (g.value - expected).abs() < 1e-10,
            "G {} vs oracle {expected}",
            g.value
        );
        // frozen from the same oracle chain
        assert!((g.value - 1.103_784_826_306_177).abs() < 1e-11);
    }

    #[test]
    fn residue_series_at_zero_argument() {
        let f = flip_to_3113(&sin_params());
        let res = residue_series_3113(&f, 0.0, 1e-13).unwrap();
        assert_eq!(res.value, 0.0);
    }

    #[test]
    fn residue_series_rejects_coincident_poles() {
        // flip of (1/4, 5/4, 0; 1/2) has lower (3/4, -1/4, 1): 3/4 - (-1/4) = 1
        let p = GParams131::new(0.25, 1.25, 0.0, 0.5).unwrap();
        let res = residue_series_3113(&flip_to_3113(&p), 1.0, 1e-13);
        assert!(matches!(res, Err(Error::CoincidentPoles)));
    }

    #[test]
    fn crosscheck_accepts_good_parameters() {
        let res = g_1331_crosschecked(&cos_params(), 1.0, 1e-12).unwrap();
        assert!(res.value.is_finite());
    }

    #[test]
    fn zero_and_negative_arguments_rejected() {
        assert!(matches!(g_1331(&sin_params(), 0.0, None, 1e-12), Err(Error::ZeroArgument)));
        assert!(matches!(g_1331(&sin_params(), -1.0, None, 1e-12), Err(Error::Domain(_))));
    }

    #[test]
    fn sine_cosine_recovery() {
        assert_eq!(sin_via_g(0.0).unwrap(), 0.0);
        assert!((cos_via_g(0.0).unwrap() - 1.0).abs() < 1e-14);
        // residue series of the sine identity at a quarter period: exactly 1
        assert!((sin_via_g(std::f64::consts::FRAC_PI_2).unwrap() - 1.0).abs() < 1e-14);
        assert!((sin_via_g(1.0).unwrap() - 0.841_470_984_807_896_5).abs() < 1e-9);
        // cos(pi/3) = 1/2 via the G-series
        let third = std::f64::consts::FRAC_PI_3;
        assert!((cos_via_g(third).unwrap() - 0.5).abs() < 1e-12);
        // odd/even extension
        assert!((sin_via_g(-1.0).unwrap() + sin_via_g(1.0).unwrap()).abs() < 1e-15);
        assert!(matches!(sin_via_g(60.0), Err(Error::Domain(_))));
    }

    #[test]
    fn recovery_error_stays_below_1e9_on_grid() {
        for k in 1..=30 {
            let x = 0.1 * k as f64;
            assert!((sin_via_g(x).unwrap() - x.sin()).abs() < 1e-9, "sin at {x}");
            assert!((cos_via_g(x).unwrap() - x.cos()).abs() < 1e-9, "cos at {x}");
        }
    }
}
