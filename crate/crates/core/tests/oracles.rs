//! Floating-point oracles for the exact integration formulas.

mod common;

use common::*;
use dunkl_clifford::integration::{bilinear_form, Integrator};
use dunkl_clifford::rational::{q, qf, to_f64};
use dunkl_clifford::rootsys::{Preset, RootSystem};
use quadrature::double_exponential::integrate;

#[test]
fn sphere_moments_match_quadrature() {
    let (worst, cases) = sphere_moment_max_error();
    assert_eq!(cases, 9 * 28);
    assert!(worst <= REL_TOL, "max relative error {worst}");
}

#[test]
fn ball_radial_factor_matches_beta() {
    let system = RootSystem::preset(Preset::Z2, 2, &[qf(1, 2), qf(1, 3)]).unwrap();
    let integrator = Integrator::new(&system).unwrap();
    let mu = to_f64(&system.mu());
    for alpha in [qf(1, 2), qf(3, 4), qf(-1, 3)] {
        let a = to_f64(&alpha);
        let base = integrator.ball_inner(&one(), &one(), &alpha).unwrap().value.scalar_part();
        assert_eq!(base, q(1));
        for n in 1..=3u32 {
            // |x|^{2n} = (x1^2 + x2^2)^n; the exact value is the sum over monomials
            let r2n = dunkl_clifford::poly::MVPoly::radius_sq(2).pow(n);
            let exact = to_f64(&integrator.ball_inner(&one(), &r2n, &alpha).unwrap().value.scalar_part());
            // r = 1 - v^3 smooths the endpoint singularity of (1 - r^2)^alpha
            let radial_moment = |p: f64| {
                integrate(
                    |v: f64| {
                        let u = v * v * v;
                        3.0 * v * v * (1.0 - u).powf(p + mu - 1.0) * (u * (2.0 - u)).powf(a)
                    },
                    0.0,
                    1.0,
                    1e-15,
                )
                .integral
            };
            let radial = radial_moment(2.0 * n as f64) / radial_moment(0.0);
            let via_beta = beta(n as f64 + mu / 2.0, a + 1.0) / beta(mu / 2.0, a + 1.0);
            assert!(rel_err(radial, exact) <= REL_TOL, "alpha={a} n={n}: quadrature {radial} vs {exact}");
            assert!(rel_err(via_beta, exact) <= REL_TOL, "alpha={a} n={n}: beta {via_beta} vs {exact}");
        }
    }
}

fn one() -> dunkl_clifford::poly::MVPoly {
    dunkl_clifford::poly::MVPoly::one(2)
}

#[test]
fn bilinear_shift_algebra_matches_numeric_beta() {
    for (point, err) in beta_points().iter().zip(beta_errors()) {
        assert!(err <= REL_TOL, "{point:?}: relative error {err}");
    }
}

#[test]
fn bilinear_form_reproduces_convergent_integral() {
    // For 2 alpha < -(s + t + mu) the form is the genuine integral over the plane
    // of conj(x^s) x^t (1 + |x|^2)^alpha |x1|^{2 k1} |x2|^{2 k2}, divided by the
    // sphere integral of the weight.
    let (k1, k2) = (0.5, 1.0 / 3.0);
    let mu = 2.0 + 2.0 * (k1 + k2);
    let alpha = qf(-6, 1) + qf(1, 7);
    let a = to_f64(&alpha);
    let mu_q = qf(11, 3);
    let sphere = circle_moment(0, 0, k1, k2);
    for (s, t) in [(0u32, 0u32), (2, 0), (1, 1), (2, 2), (3, 1)] {
        // conj(x)^s x^t = (-1)^s x^{s+t} = (-1)^s (-|x|^2)^{(s+t)/2}
        let n = (s + t) / 2;
        let sign = if (s + n) % 2 == 0 { 1.0 } else { -1.0 };
        let plane = 4.0
            * half_line(|x1| {
                half_line(|x2| {
                    let r2 = x1 * x1 + x2 * x2;
                    r2.powi(n as i32) * (1.0 + r2).powf(a) * x1.powf(2.0 * k1) * x2.powf(2.0 * k2)
                })
            });
        let numeric = sign * plane / sphere;
        let exact = bilinear_form(&mu_q, 0, &alpha, s, t).unwrap();
        let expected = to_f64(&exact.ratio) * half_beta(0, 0, mu, a);
        assert!(rel_err(numeric, expected) <= 1e-8, "s={s} t={t}: {numeric} vs {expected}");
    }
}

#[test]
fn mixed_parity_bilinear_is_zero() {
    let v = bilinear_form(&qf(11, 3), 1, &qf(7, 5), 2, 1).unwrap();
    assert!(v.is_zero());
    assert!(bilinear_form(&q(4), 0, &q(2), 0, 0).is_err());
    assert!(bilinear_form(&q(3), 0, &qf(1, 2), 0, 0).is_err());
}
