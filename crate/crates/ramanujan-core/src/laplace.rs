//! Closed-form Laplace transforms of `sin(beta x^2)`, `cos(beta x^2)`,
//! `x sin(beta x^2)`, `x cos(beta x^2)` as G-function expressions, with the
//! direct quadrature route as an independent check and explicit `beta = 0`
//! limits (the G-function itself requires a nonzero argument).

use crate::error::{Error, Result};
use crate::meijer::{g_1331, GParams131};
use crate::quadrature::{
    integrate, Decay, Oscillation, OscillatoryIntegrand, PhaseKind, QuadratureConfig,
};
use crate::result::{EvaluationResult, Method, Work};

/// Which transform to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kernel {
    Sin,
    Cos,
    XSin,
    XCos,
}

impl Kernel {
    pub fn as_str(self) -> &'static str {
        match self {
            Kernel::Sin => "sin",
            Kernel::Cos => "cos",
            Kernel::XSin => "xsin",
            Kernel::XCos => "xcos",
        }
    }
}

/// A transform request: `int_0^inf e^{-alpha x} [x] trig(beta x^2) dx`.
#[derive(Debug, Clone, Copy)]
pub struct LaplaceRequest {
    pub kernel: Kernel,
    /// Decay rate; must be positive.
    pub alpha: f64,
    /// Frequency; must be non-negative.
    pub beta: f64,
}

impl LaplaceRequest {
    pub fn new(kernel: Kernel, alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::Domain(format!(
                "laplace: alpha = {alpha} must be a positive real"
            )));
        }
        if !(beta >= 0.0) || !beta.is_finite() {
            return Err(Error::Domain(format!(
                "laplace: beta = {beta} must be non-negative"
            )));
        }
        Ok(LaplaceRequest { kernel, alpha, beta })
    }
}

/// The fixed prefactor/parameter table behind the four transforms.
#[derive(Debug, Clone, Copy)]
pub struct KernelSpec {
    pub params: GParams131,
    has_x_factor: bool,
}

impl KernelSpec {
    /// G-parameter block and prefactor rule for one kernel.
    pub fn for_kernel(kernel: Kernel) -> KernelSpec {
        // constructor cannot fail on the four fixed blocks
        let params = match kernel {
            Kernel::Sin => GParams131::new(0.25, 0.5, 0.75, 0.5),
            Kernel::Cos => GParams131::new(0.25, 0.75, 0.0, 0.0),
            Kernel::XSin => GParams131::new(-0.25, 0.25, 0.5, 0.5),
            Kernel::XCos => GParams131::new(-0.25, 0.25, 0.0, 0.0),
        }
        .expect("fixed parameter blocks are valid");
        KernelSpec {
            params,
            has_x_factor: matches!(kernel, Kernel::XSin | Kernel::XCos),
        }
    }

    /// `1/(alpha pi sqrt 2)` for the plain kernels, `2 sqrt 2/(alpha^2 pi)`
    /// for the `x`-weighted ones.
    pub fn prefactor(&self, alpha: f64) -> f64 {
        if self.has_x_factor {
            2.0 * 2.0_f64.sqrt() / (alpha * alpha * std::f64::consts::PI)
        } else {
            1.0 / (alpha * std::f64::consts::PI * 2.0_f64.sqrt())
        }
    }

    /// G-function argument `64 beta^2 / alpha^4`.
    pub fn g_argument(&self, alpha: f64, beta: f64) -> f64 {
        64.0 * beta * beta / alpha.powi(4)
    }
}

/// Evaluation route selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LaplaceRoute {
    GFunction,
    Quadrature,
}

/// Analytic `beta -> 0` limits: `L[sin] = 0`, `L[cos] = 1/alpha`,
/// `L[x sin] = 0`, `L[x cos] = 1/alpha^2`.
fn beta_zero_limit(req: &LaplaceRequest) -> EvaluationResult {
    let value = match req.kernel {
        Kernel::Sin | Kernel::XSin => 0.0,
        Kernel::Cos => 1.0 / req.alpha,
        Kernel::XCos => 1.0 / (req.alpha * req.alpha),
    };
    EvaluationResult::new(value, f64::EPSILON * value.abs(), Method::Limit, Work::default())
}

/// Evaluates the transform by the requested route.
pub fn laplace_eval(req: &LaplaceRequest, route: LaplaceRoute) -> Result<EvaluationResult> {
    laplace_eval_with_tol(req, route, 1e-12)
}

/// [`laplace_eval`] with an explicit absolute tolerance.
pub fn laplace_eval_with_tol(
    req: &LaplaceRequest,
    route: LaplaceRoute,
    abs_tol: f64,
) -> Result<EvaluationResult> {
    // revalidate so directly-constructed requests cannot bypass the domain
    let req = LaplaceRequest::new(req.kernel, req.alpha, req.beta)?;
    if req.beta == 0.0 {
        return Ok(beta_zero_limit(&req));
    }
    match route {
        LaplaceRoute::GFunction => {
            let spec = KernelSpec::for_kernel(req.kernel);
            let z = spec.g_argument(req.alpha, req.beta);
            let pre = spec.prefactor(req.alpha);
            // scale the G tolerance so the final absolute tolerance holds
            let g_tol = (abs_tol / pre.abs()).clamp(1e-15, 1e-10);
            let g = g_1331(&spec.params, z, None, g_tol)?;
            let mut out = EvaluationResult::new(
                pre * g.value,
                pre.abs() * g.abs_err_est,
                g.method,
                g.work,
            );
            out.cancellation_warning = g.cancellation_warning;
            Ok(out)
        }
        LaplaceRoute::Quadrature => {
            let alpha = req.alpha;
            let beta = req.beta;
            let kernel = req.kernel;
            let f = move |x: f64| {
                let phase = beta * x * x;
                let trig = match kernel {
                    Kernel::Sin | Kernel::XSin => phase.sin(),
                    Kernel::Cos | Kernel::XCos => phase.cos(),
                };
                let weight = match kernel {
                    Kernel::XSin | Kernel::XCos => x,
                    _ => 1.0,
                };
                weight * (-alpha * x).exp() * trig
            };
            let decay = match kernel {
                Kernel::XSin | Kernel::XCos => Decay::ExpLinear { rate: alpha, amplitude: 1.0 },
                _ => Decay::Exp { rate: alpha, amplitude: 1.0 },
            };
            let integrand = OscillatoryIntegrand {
                f,
                oscillation: Oscillation::QuadraticPhase {
                    omega: beta,
                    kind: match kernel {
                        Kernel::Sin | Kernel::XSin => PhaseKind::Sine,
                        Kernel::Cos | Kernel::XCos => PhaseKind::Cosine,
                    },
                },
                decay,
            };
            let cfg = QuadratureConfig { abs_tol, ..QuadratureConfig::default() };
            integrate(&integrand, &cfg)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_table_is_exactly_the_fixed_one() {
        let cases = [
            (Kernel::Sin, [0.25, 0.5, 0.75], 0.5),
            (Kernel::Cos, [0.25, 0.75, 0.0], 0.0),
            (Kernel::XSin, [-0.25, 0.25, 0.5], 0.5),
            (Kernel::XCos, [-0.25, 0.25, 0.0], 0.0),
        ];
        for (kernel, upper, lower) in cases {
            let spec = KernelSpec::for_kernel(kernel);
            assert_eq!(spec.params.upper(), upper);
            assert_eq!(spec.params.lower(), lower);
            let alpha = 1.7;
            let expected = match kernel {
                Kernel::Sin | Kernel::Cos => 1.0 / (alpha * std::f64::consts::PI * 2.0_f64.sqrt()),
                _ => 2.0 * 2.0_f64.sqrt() / (alpha * alpha * std::f64::consts::PI),
            };
            assert_eq!(spec.prefactor(alpha), expected);
            assert_eq!(spec.g_argument(2.0, 3.0), 64.0 * 9.0 / 16.0);
        }
    }

    #[test]
    fn beta_zero_limits_are_analytic() {
        let req = LaplaceRequest::new(Kernel::Cos, 2.0, 0.0).unwrap();
        let res = laplace_eval(&req, LaplaceRoute::GFunction).unwrap();
        assert_eq!(res.value, 0.5);
        assert_eq!(res.method, Method::Limit);

        let req = LaplaceRequest::new(Kernel::XCos, 3.0, 0.0).unwrap();
        let res = laplace_eval(&req, LaplaceRoute::Quadrature).unwrap();
        assert!((res.value - 1.0 / 9.0).abs() < 1e-16);

        for kernel in [Kernel::Sin, Kernel::XSin] {
            let req = LaplaceRequest::new(kernel, 1.7, 0.0).unwrap();
            assert_eq!(laplace_eval(&req, LaplaceRoute::GFunction).unwrap().value, 0.0);
        }
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            LaplaceRequest::new(Kernel::Sin, 0.0, 1.0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            LaplaceRequest::new(Kernel::Sin, -2.0, 1.0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            LaplaceRequest::new(Kernel::Sin, 1.0, -1.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn sin_transform_matches_quadrature_oracle() {
        // int_0^inf e^{-x} sin(x^2) dx, frozen from the oracle: 0.2705135801622141
        let req = LaplaceRequest::new(Kernel::Sin, 1.0, 1.0).unwrap();
        let q = laplace_eval(&req, LaplaceRoute::Quadrature).unwrap();
        assert!((q.value - 0.270_513_580_162_214_1).abs() < 1e-12, "quad {}", q.value);
        let g = laplace_eval(&req, LaplaceRoute::GFunction).unwrap();
        assert!(
            (g.value - q.value).abs() <= 1e-9 * q.value.abs(),
            "G {} vs quadrature {}",
            g.value,
            q.value
        );
    }

    #[test]
    fn xsin_transform_for_third_family_first_term() {
        // 2 L[x sin(pi x^2)](2 pi): the leading Bose term of the third family
        let pi = std::f64::consts::PI;
        let req = LaplaceRequest::new(Kernel::XSin, 2.0 * pi, pi).unwrap();
        let g = laplace_eval(&req, LaplaceRoute::GFunction).unwrap();
        let q = laplace_eval(&req, LaplaceRoute::Quadrature).unwrap();
        assert!((2.0 * g.value - 0.015_707_479_142_965_13).abs() < 1e-12);
        assert!((g.value - q.value).abs() <= 1e-10);
    }

    #[test]
    fn routes_agree_on_a_spread_of_frequencies() {
        for kernel in [Kernel::Sin, Kernel::Cos, Kernel::XSin, Kernel::XCos] {
            for &(alpha, beta) in &[(1.0, 1.0), (2.0, 0.5), (0.7, 3.0)] {
                let req = LaplaceRequest::new(kernel, alpha, beta).unwrap();
                let g = laplace_eval(&req, LaplaceRoute::GFunction).unwrap();
                let q = laplace_eval(&req, LaplaceRoute::Quadrature).unwrap();
                assert!(
                    (g.value - q.value).abs() <= 1e-9 * q.value.abs().max(0.1),
                    "{kernel:?} alpha={alpha} beta={beta}: {} vs {}",
                    g.value,
                    q.value
                );
            }
        }
    }

    #[test]
    fn scaling_law() {
        // x -> x/c sends (alpha, beta) to (c alpha, c^2 beta) and divides the
        // transform by c (plain) or c^2 (x-weighted)
        for &c in &[2.0, 5.0] {
            for (kernel, power) in [
                (Kernel::Sin, 1),
                (Kernel::Cos, 1),
                (Kernel::XSin, 2),
                (Kernel::XCos, 2),
            ] {
                let base = LaplaceRequest::new(kernel, 1.3, 0.9).unwrap();
                let scaled = LaplaceRequest::new(kernel, c * 1.3, c * c * 0.9).unwrap();
                let v0 = laplace_eval(&base, LaplaceRoute::GFunction).unwrap().value;
                let v1 = laplace_eval(&scaled, LaplaceRoute::GFunction).unwrap().value;
                assert!(
                    (v1 - v0 / c.powi(power)).abs() <= 1e-9 * v0.abs().max(1e-3),
                    "{kernel:?} c={c}: {v1} vs {}",
                    v0 / c.powi(power)
                );
            }
        }
    }

    #[test]
    fn transforms_respect_trivial_bounds() {
        // |L[trig(beta x^2)]| <= 1/alpha
        for kernel in [Kernel::Sin, Kernel::Cos] {
            for &(alpha, beta) in &[(0.5, 2.0), (3.0, 10.0)] {
                let req = LaplaceRequest::new(kernel, alpha, beta).unwrap();
                let v = laplace_eval(&req, LaplaceRoute::GFunction).unwrap().value;
                assert!(v.abs() <= 1.0 / alpha + 1e-12);
            }
        }
    }
}
