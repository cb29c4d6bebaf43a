//! Property tests for the invariants that quantify over ranges rather than
//! fixed points.

use num_complex::Complex64;
use proptest::prelude::*;

use ramanujan_core::gamma::{log_gamma, pochhammer};
use ramanujan_core::laplace::{laplace_eval_with_tol, Kernel, LaplaceRequest, LaplaceRoute};
use ramanujan_core::meijer::{g_1331, GParams131};
use ramanujan_core::quadrature::{
    integrate, integrate_sqrt_substituted, Decay, Oscillation, OscillatoryIntegrand, PhaseKind,
    QuadratureConfig, TrigKernel,
};
use ramanujan_core::result::Method;

fn not_near_pole(re: f64, im: f64) -> bool {
    // keep a 0.1 margin from the poles of Gamma(z) and Gamma(z+1)
    let near = |x: f64, y: f64| y.abs() < 0.1 && (x - x.round()).abs() < 0.1 && x < 1.5;
    !near(re, im) && !near(re + 1.0, im)
}

#[test]
fn evaluators_are_stateless_across_threads() {
    use ramanujan_core::suite::{eval_quantity, EngineConfig, Family, RamanujanQuantity, Route};
    let params = GParams131::new(0.25, 0.75, 0.0, 0.0).unwrap();
    let baseline_g = g_1331(&params, 3.0, None, 1e-12).unwrap().value;
    let q = RamanujanQuantity::new(Family::Psi3Star, 1.5).unwrap();
    let baseline_q = eval_quantity(&q, Route::Quadrature, &EngineConfig::default())
        .unwrap()
        .value;
    let handles: Vec<_> = (0..8)
        .map(|_| {
            std::thread::spawn(move || {
                let params = GParams131::new(0.25, 0.75, 0.0, 0.0).unwrap();
                let g = g_1331(&params, 3.0, None, 1e-12).unwrap().value;
                let q = RamanujanQuantity::new(Family::Psi3Star, 1.5).unwrap();
                let v = eval_quantity(&q, Route::Quadrature, &EngineConfig::default())
                    .unwrap()
                    .value;
                (g, v)
            })
        })
        .collect();
    for h in handles {
        let (g, v) = h.join().unwrap();
        // pure functions of their inputs: bit-identical across threads
        assert_eq!(g.to_bits(), baseline_g.to_bits());
        assert_eq!(v.to_bits(), baseline_q.to_bits());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn log_gamma_conjugate_symmetry(re in -5.0_f64..5.0, im in 0.01_f64..5.0) {
        prop_assume!(not_near_pole(re, im));
        let z = Complex64::new(re, im);
        let upper = log_gamma(z).unwrap();
        let lower = log_gamma(z.conj()).unwrap();
        prop_assert_eq!(upper.conj(), lower);
    }

    #[test]
    fn log_gamma_recurrence(re in -5.0_f64..5.0, im in 0.05_f64..5.0) {
        prop_assume!(not_near_pole(re, im));
        let z = Complex64::new(re, im);
        let ratio = (log_gamma(z + 1.0).unwrap() - log_gamma(z).unwrap()).exp();
        prop_assert!((ratio - z).norm() <= 1e-12 * z.norm());
    }

    #[test]
    fn pochhammer_recurrence(a in -8.0_f64..8.0, k in 0u32..30) {
        let lhs = pochhammer(a, k + 1).unwrap();
        let rhs = pochhammer(a, k).unwrap() * (a + k as f64);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1e-12));
    }

    #[test]
    fn laplace_transforms_are_bounded_by_inverse_alpha(
        alpha in 0.3_f64..8.0,
        beta in 0.0_f64..25.0,
    ) {
        // |L[trig(beta x^2)](alpha)| <= int e^{-alpha x} = 1/alpha
        for kernel in [Kernel::Sin, Kernel::Cos] {
            let req = LaplaceRequest::new(kernel, alpha, beta).unwrap();
            let v = laplace_eval_with_tol(&req, LaplaceRoute::GFunction, 1e-12).unwrap();
            prop_assert!(v.value.abs() <= 1.0 / alpha + 1e-10);
        }
    }

    #[test]
    fn laplace_scaling_law(c in 1.2_f64..6.0, alpha in 0.5_f64..3.0, beta in 0.2_f64..4.0) {
        // x -> x/c: L(c alpha, c^2 beta) = L(alpha, beta)/c (plain kernels)
        let base = LaplaceRequest::new(Kernel::Cos, alpha, beta).unwrap();
        let scaled = LaplaceRequest::new(Kernel::Cos, c * alpha, c * c * beta).unwrap();
        let v0 = laplace_eval_with_tol(&base, LaplaceRoute::GFunction, 1e-13).unwrap().value;
        let v1 = laplace_eval_with_tol(&scaled, LaplaceRoute::GFunction, 1e-13).unwrap().value;
        prop_assert!((v1 - v0 / c).abs() <= 1e-9 * (v0.abs() / c).max(1e-4));
    }

    #[test]
    fn g_flip_consistency_random_arguments(z in 0.3_f64..30.0) {
        // the residue series is the flipped evaluation at w = 1/z
        let params = GParams131::new(0.25, 0.5, 0.75, 0.5).unwrap();
        let contour = g_1331(&params, z, Some(Method::Contour), 1e-12).unwrap();
        let flipped = g_1331(&params, z, Some(Method::ResidueSeries), 1e-13).unwrap();
        prop_assert!(
            (contour.value - flipped.value).abs() <= 1e-10 * flipped.value.abs().max(0.1)
        );
    }

    #[test]
    fn sqrt_substitution_invariance(b in 0.3_f64..4.0) {
        // x-domain and t = sqrt(x) domain parameterizations of the third
        // family must agree
        let cfg = QuadratureConfig::default();
        let sub = integrate_sqrt_substituted(b, TrigKernel::Cos, &cfg).unwrap();
        let pi = std::f64::consts::PI;
        let direct = OscillatoryIntegrand {
            f: move |x: f64| (b * pi * x).cos() / (2.0 * pi * x.sqrt()).exp_m1(),
            oscillation: Oscillation::LinearPhase { omega: b * pi, kind: PhaseKind::Cosine },
            decay: Decay::ExpSqrt { rate: 2.0 * pi, amplitude: 2.0 },
        };
        let raw = integrate(&direct, &cfg).unwrap();
        prop_assert!(
            (sub.value - raw.value).abs() < 1e-10,
            "b={}: {} vs {}", b, sub.value, raw.value
        );
    }

    #[test]
    fn quadrature_error_estimates_cover_true_error(rate in 0.5_f64..4.0) {
        // int x e^{-rate x} = 1/rate^2 with an honest estimate
        let integrand = OscillatoryIntegrand {
            f: move |x: f64| x * (-rate * x).exp(),
            oscillation: Oscillation::None,
            decay: Decay::ExpLinear { rate, amplitude: 1.0 },
        };
        let res = integrate(&integrand, &QuadratureConfig::default()).unwrap();
        let exact = 1.0 / (rate * rate);
        prop_assert!((res.value - exact).abs() <= 3.0 * res.abs_err_est.max(1e-15));
        prop_assert!((res.value - exact).abs() < 1e-11);
    }
}
