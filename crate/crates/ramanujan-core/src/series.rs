//! Kernel expansions and accelerated summation.
//!
//! The three expansions turn the integrand denominators into exponential
//! sums, so each Ramanujan integral becomes a (possibly double) series of
//! Laplace transforms. [`sum_series`] then adds those series up:
//!
//! * raw summation for geometric tails,
//! * an Euler transformation (iterated averaging of partial sums) for
//!   alternating series - this also sums the second family's diagonal
//!   series, whose raw diagonals grow like `2^d` yet are Euler-summable
//!   because the diagonal sums are moments of a signed measure supported
//!   on `[0, 2]`,
//! * Richardson extrapolation in `1/R` for monotone power-law tails, where
//!   the raw stopping rule would otherwise report convergence long before
//!   the tail is actually negligible.
//!
//! The expansions sit on the boundary of their convergence region at `x = 0`
//! (the geometric ratio reaches 1 there), so exchanging summation with
//! integration is not justified termwise at the endpoint; the suite verifies
//! the exchanged results numerically against direct quadrature instead.

use crate::error::{Error, Result};
use crate::result::{EvaluationResult, Method, Work};

/// Index of an expansion term: single series or double series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermIndex {
    Single(u32),
    Pair(u32, u32),
}

/// One exponential term `coefficient * exp(-rate * x)` of a kernel expansion.
#[derive(Debug, Clone, Copy)]
pub struct ExpansionTerm {
    pub index: TermIndex,
    pub coefficient: f64,
    /// Exponential decay rate in the integration variable (the `sqrt x`
    /// variable for the Bose kernel).
    pub rate: f64,
}

/// `1/cosh(pi x) = 2 sum_r (-1)^r exp(-pi (1+2r) x)`.
pub fn cosh_expansion(r: u32) -> ExpansionTerm {
    let sign = if r.is_multiple_of(2) { 1.0 } else { -1.0 };
    ExpansionTerm {
        index: TermIndex::Single(r),
        coefficient: 2.0 * sign,
        rate: std::f64::consts::PI * (1.0 + 2.0 * r as f64),
    }
}

/// `1/(1 + 2 cosh(2 pi x / sqrt 3)) = sum_{p,q} (-1)^{p+q} (p+q)!/(p! q!)
/// exp(-2 pi (2q + p + 1) x / sqrt 3)`.
pub fn triple_cosh_expansion(p: u32, q: u32) -> ExpansionTerm {
    let sign = if (p + q).is_multiple_of(2) { 1.0 } else { -1.0 };
    // binomial (p+q choose p) as a running product; exact in f64 well past
    // the diagonal depths the summation cap allows
    let mut binom = 1.0_f64;
    for j in 0..p.min(q) {
        binom = binom * (p + q - j) as f64 / (j + 1) as f64;
    }
    ExpansionTerm {
        index: TermIndex::Pair(p, q),
        coefficient: sign * binom,
        rate: 2.0 * std::f64::consts::PI * (2.0 * q as f64 + p as f64 + 1.0)
            / 3.0_f64.sqrt(),
    }
}

/// `1/(exp(2 pi sqrt x) - 1) = sum_r exp(-2 pi (1+r) sqrt x)`; the rate is in
/// the `t = sqrt x` variable.
pub fn bose_expansion(r: u32) -> ExpansionTerm {
    ExpansionTerm {
        index: TermIndex::Single(r),
        coefficient: 1.0,
        rate: 2.0 * std::f64::consts::PI * (1.0 + r as f64),
    }
}

/// Tail-summation strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Acceleration {
    /// Plain accumulation; stops on three consecutive negligible terms.
    #[default]
    None,
    /// Euler transformation for (eventually) alternating terms, including
    /// Euler-summable divergent diagonal streams.
    Alternating,
    /// Richardson extrapolation in `1/R` for one-signed power-law tails.
    Monotone,
}

/// Summation controls.
#[derive(Debug, Clone, Copy)]
pub struct SummationConfig {
    /// Relative tolerance on the converged sum.
    pub tolerance: f64,
    /// Hard cap on consumed terms (diagonals count their members).
    pub max_terms: usize,
    pub acceleration: Acceleration,
}

impl Default for SummationConfig {
    fn default() -> Self {
        SummationConfig {
            tolerance: 1e-12,
            max_terms: 400,
            acceleration: Acceleration::None,
        }
    }
}

/// Euler transformation as an incremental triangle of averaged partial sums.
///
/// `push` feeds one term; `estimate` returns the deepest averaged value,
/// which converges geometrically whenever the terms are moments of a signed
/// measure supported inside `(-2, 2)`.
#[derive(Debug, Default, Clone)]
pub(crate) struct EulerAccelerator {
    levels: Vec<f64>,
    last_estimates: [f64; 2],
    count: usize,
}

impl EulerAccelerator {
    pub fn new() -> Self {
        EulerAccelerator {
            levels: Vec::new(),
            last_estimates: [f64::NAN, f64::NAN],
            count: 0,
        }
    }

    pub fn push(&mut self, term: f64) {
        let partial = if self.levels.is_empty() {
            term
        } else {
            self.levels[0] + term
        };
        let mut next = Vec::with_capacity(self.levels.len() + 1);
        next.push(partial);
        for m in 0..self.levels.len() {
            let averaged = 0.5 * (self.levels[m] + next[m]);
            next.push(averaged);
        }
        self.levels = next;
        self.last_estimates[0] = self.last_estimates[1];
        self.last_estimates[1] = *self.levels.last().unwrap();
        self.count += 1;
    }

    pub fn estimate(&self) -> f64 {
        self.last_estimates[1]
    }

    /// Magnitude of the latest change in the transformed estimate.
    pub fn last_delta(&self) -> f64 {
        if self.count < 2 {
            f64::INFINITY
        } else {
            (self.last_estimates[1] - self.last_estimates[0]).abs()
        }
    }

    /// Gap between the two deepest averaging levels; for alternating series
    /// with monotone term magnitudes the levels bracket the limit, so this
    /// bounds the transform error.
    pub fn bracket_width(&self) -> f64 {
        let n = self.levels.len();
        if n < 2 {
            f64::INFINITY
        } else {
            (self.levels[n - 1] - self.levels[n - 2]).abs()
        }
    }

    pub fn count(&self) -> usize {
        self.count
    }
}

/// Richardson (Neville) extrapolation of checkpointed partial sums in the
/// variable `h = 1/R`. Models `S_R ~ S + a_1/R + a_2/R^2 + ...`, which is the
/// Euler-Maclaurin form of every one-signed power-law tail in this crate.
#[derive(Debug, Clone)]
pub(crate) struct RichardsonExtrapolator {
    /// (1/R, S_R) checkpoints, most recent last; sliding window.
    points: Vec<(f64, f64)>,
    window: usize,
    last_estimates: [f64; 2],
}

impl RichardsonExtrapolator {
    pub fn new(window: usize) -> Self {
        RichardsonExtrapolator {
            points: Vec::new(),
            window,
            last_estimates: [f64::NAN, f64::NAN],
        }
    }

    pub fn push_checkpoint(&mut self, r: usize, partial_sum: f64) {
        self.points.push((1.0 / r as f64, partial_sum));
        if self.points.len() > self.window {
            self.points.remove(0);
        }
        self.last_estimates[0] = self.last_estimates[1];
        self.last_estimates[1] = self.extrapolate();
    }

    /// Neville tableau evaluated at h = 0.
    fn extrapolate(&self) -> f64 {
        let n = self.points.len();
        let mut tableau: Vec<f64> = self.points.iter().map(|&(_, s)| s).collect();
        for k in 1..n {
            for i in (k..n).rev() {
                let hi = self.points[i].0;
                let hik = self.points[i - k].0;
                tableau[i] = tableau[i] + (tableau[i] - tableau[i - 1]) * hi / (hik - hi);
            }
        }
        *tableau.last().unwrap()
    }

    pub fn estimate(&self) -> f64 {
        self.last_estimates[1]
    }

    pub fn last_delta(&self) -> f64 {
        if self.points.len() < 2 || self.last_estimates[0].is_nan() {
            f64::INFINITY
        } else {
            (self.last_estimates[1] - self.last_estimates[0]).abs()
        }
    }

    pub fn ready(&self) -> bool {
        self.points.len() >= 4
    }
}

/// Sums a stream of term values under the configured stopping rule.
///
/// Raw route: stops once three consecutive terms fall below
/// `tolerance * |partial sum|`; the error estimate is a last-neglected-term
/// bound. Accelerated routes stop when the transformed estimate stabilizes
/// to within the tolerance twice in a row.
pub fn sum_series<I>(terms: I, cfg: &SummationConfig) -> Result<EvaluationResult>
where
    I: IntoIterator<Item = Result<f64>>,
{
    match cfg.acceleration {
        Acceleration::None => sum_raw(terms, cfg),
        Acceleration::Alternating => sum_alternating(terms, cfg),
        Acceleration::Monotone => sum_monotone(terms, cfg),
    }
}

fn sum_raw<I>(terms: I, cfg: &SummationConfig) -> Result<EvaluationResult>
where
    I: IntoIterator<Item = Result<f64>>,
{
    let mut sum = 0.0_f64;
    let mut small_streak = 0usize;
    let mut last_abs = f64::INFINITY;
    let mut count = 0u64;
    let mut max_partial = 0.0_f64;
    for term in terms {
        let t = term?;
        sum += t;
        max_partial = max_partial.max(sum.abs());
        count += 1;
        last_abs = t.abs();
        if last_abs <= cfg.tolerance * sum.abs().max(f64::MIN_POSITIVE) {
            small_streak += 1;
            if small_streak >= 3 {
                let est = (last_abs * 3.0).max(f64::EPSILON * max_partial);
                return Ok(EvaluationResult::new(
                    sum,
                    est,
                    Method::Series,
                    Work { terms: count, panels: 0 },
                )
                .with_cancellation_warning(max_partial > 1e8 * sum.abs()));
            }
        } else {
            small_streak = 0;
        }
        if count as usize >= cfg.max_terms {
            return Err(Error::ToleranceNotReached {
                best: sum,
                abs_err_est: last_abs * (count as f64).sqrt(),
            });
        }
    }
    // exhausted stream: treat as converged with the last term as the bound
    Ok(EvaluationResult::new(
        sum,
        if last_abs.is_finite() { last_abs } else { 0.0 },
        Method::Series,
        Work { terms: count, panels: 0 },
    ))
}

fn sum_alternating<I>(terms: I, cfg: &SummationConfig) -> Result<EvaluationResult>
where
    I: IntoIterator<Item = Result<f64>>,
{
    let mut accel = EulerAccelerator::new();
    let mut stable_streak = 0usize;
    let mut max_partial = 0.0_f64;
    for term in terms {
        let t = term?;
        accel.push(t);
        max_partial = max_partial.max(accel.estimate().abs());
        let est = accel.estimate();
        if accel.count() >= 6 {
            if accel.last_delta() <= cfg.tolerance * est.abs().max(1e-300) {
                stable_streak += 1;
                if stable_streak >= 2 {
                    let err = (accel.last_delta() * 4.0)
                        .max(f64::EPSILON * max_partial)
                        .max(1e-18 * est.abs());
                    return Ok(EvaluationResult::new(
                        est,
                        err,
                        Method::Series,
                        Work { terms: accel.count() as u64, panels: 0 },
                    )
                    .with_cancellation_warning(max_partial > 1e8 * est.abs()));
                }
            } else {
                stable_streak = 0;
            }
        }
        if accel.count() >= cfg.max_terms {
            return Err(Error::ToleranceNotReached {
                best: accel.estimate(),
                abs_err_est: accel.last_delta() * 4.0,
            });
        }
    }
    if accel.count() == 0 {
        return Ok(EvaluationResult::new(0.0, 0.0, Method::Series, Work::default()));
    }
    Ok(EvaluationResult::new(
        accel.estimate(),
        accel.last_delta() * 4.0,
        Method::Series,
        Work { terms: accel.count() as u64, panels: 0 },
    ))
}

/// Checkpoint spacing for the Richardson route.
const RICHARDSON_STEP: usize = 6;
const RICHARDSON_WINDOW: usize = 10;

fn sum_monotone<I>(terms: I, cfg: &SummationConfig) -> Result<EvaluationResult>
where
    I: IntoIterator<Item = Result<f64>>,
{
    let mut extrap = RichardsonExtrapolator::new(RICHARDSON_WINDOW);
    let mut sum = 0.0_f64;
    let mut count = 0usize;
    let mut stable_streak = 0usize;
    let mut last_abs = f64::INFINITY;
    for term in terms {
        let t = term?;
        sum += t;
        count += 1;
        last_abs = t.abs();
        if count.is_multiple_of(RICHARDSON_STEP) {
            extrap.push_checkpoint(count, sum);
            if extrap.ready() {
                let est = extrap.estimate();
                if extrap.last_delta() <= cfg.tolerance * est.abs().max(1e-300) {
                    stable_streak += 1;
                    if stable_streak >= 2 {
                        return Ok(EvaluationResult::new(
                            est,
                            (extrap.last_delta() * 4.0).max(f64::EPSILON * est.abs()),
                            Method::Series,
                            Work { terms: count as u64, panels: 0 },
                        ));
                    }
                } else {
                    stable_streak = 0;
                }
            }
        }
        // raw stopping rule can fire first on geometric tails
        if last_abs <= 1e-2 * cfg.tolerance * sum.abs().max(f64::MIN_POSITIVE)
            && count >= 3 * RICHARDSON_STEP
        {
            return Ok(EvaluationResult::new(
                if extrap.ready() { extrap.estimate() } else { sum },
                last_abs * 3.0,
                Method::Series,
                Work { terms: count as u64, panels: 0 },
            ));
        }
        if count >= cfg.max_terms {
            return Err(Error::ToleranceNotReached {
                best: if extrap.ready() { extrap.estimate() } else { sum },
                abs_err_est: if extrap.ready() {
                    extrap.last_delta() * 4.0
                } else {
                    last_abs * count as f64
                },
            });
        }
    }
    Ok(EvaluationResult::new(
        if extrap.ready() { extrap.estimate() } else { sum },
        if extrap.ready() { extrap.last_delta() * 4.0 } else { last_abs },
        Method::Series,
        Work { terms: count as u64, panels: 0 },
    ))
}

/// Sums a double series `sum_{p,q >= 0} f(p, q)` in diagonal order
/// (`d = p + q`), feeding each diagonal to the configured accelerator as a
/// single outer term.
pub fn sum_diagonal_series<F>(mut term: F, cfg: &SummationConfig) -> Result<EvaluationResult>
where
    F: FnMut(u32, u32) -> Result<f64>,
{
    let max_diagonals = cfg.max_terms;
    let diagonals = (0u32..).map(|d| -> Result<f64> {
        let mut s = 0.0;
        for q in 0..=d {
            let p = d - q;
            s += term(p, q)?;
        }
        Ok(s)
    });
    let mut result = sum_series(diagonals.take(max_diagonals), cfg)?;
    // work.terms counted diagonals; report individual (p, q) members
    let d = result.work.terms;
    result.work.terms = d * (d + 1) / 2;
    Ok(result)
}
