//! Floating-point oracles shared by the oracle tests and the acceptance target.
#![allow(dead_code)]

use dunkl_clifford::integration::{bilinear_form, Integrator};
use dunkl_clifford::rational::{q, qf, to_f64, Q};
use dunkl_clifford::rootsys::{Preset, RootSystem};
use quadrature::double_exponential::integrate;
use statrs::function::gamma::gamma;
use std::f64::consts::FRAC_PI_2;

pub const REL_TOL: f64 = 1e-10;

pub fn rel_err(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        (a - b).abs() / b.abs()
    }
}

pub fn beta(x: f64, y: f64) -> f64 {
    gamma(x) * gamma(y) / gamma(x + y)
}

/// Integral over [0, inf) by the substitution u = s / (1 - s).
pub fn half_line(f: impl Fn(f64) -> f64) -> f64 {
    integrate(|s| {
        if s >= 1.0 {
            return 0.0;
        }
        let u = s / (1.0 - s);
        f(u) / ((1.0 - s) * (1.0 - s))
    }, 0.0, 1.0, 1e-14)
    .integral
}

/// Integral over the unit circle of cos^a sin^b |cos|^{2k1} |sin|^{2k2}, one quadrant at a time.
pub fn circle_moment(a: u32, b: u32, k1: f64, k2: f64) -> f64 {
    let quadrant = integrate(
        |t: f64| t.cos().powi(a as i32) * t.sin().powi(b as i32) * t.cos().powf(2.0 * k1) * t.sin().powf(2.0 * k2),
        0.0,
        FRAC_PI_2,
        1e-15,
    )
    .integral;
    // the other quadrants differ by the signs of cos and sin
    let sa = if a % 2 == 0 { 1.0 } else { -1.0 };
    let sb = if b % 2 == 0 { 1.0 } else { -1.0 };
    quadrant * (1.0 + sa + sa * sb + sb)
}

/// (1/2) B(x, -x - alpha) with x = n + k + mu/2, through Gamma's analytic continuation.
pub fn half_beta(n: u32, k: u32, mu: f64, alpha: f64) -> f64 {
    let x = n as f64 + k as f64 + mu / 2.0;
    0.5 * beta(x, -x - alpha)
}

/// Largest relative error of the exact sphere moments against quadrature over
/// m = 2, k_i in {0, 1/2, 1}, exponents with a + b <= 6. Returns (max error, cases).
pub fn sphere_moment_max_error() -> (f64, usize) {
    let ks = [q(0), qf(1, 2), q(1)];
    let mut worst = 0.0f64;
    let mut cases = 0;
    for k1 in &ks {
        for k2 in &ks {
            let system = RootSystem::preset(Preset::Z2, 2, &[k1.clone(), k2.clone()]).unwrap();
            let integrator = Integrator::new(&system).unwrap();
            let (f1, f2) = (to_f64(k1), to_f64(k2));
            let base = circle_moment(0, 0, f1, f2);
            for a in 0..=6 {
                for b in 0..=(6 - a) {
                    let exact = to_f64(&integrator.moment(&[a, b]));
                    let numeric = circle_moment(a, b, f1, f2) / base;
                    worst = worst.max(rel_err(numeric, exact));
                    cases += 1;
                }
            }
        }
    }
    (worst, cases)
}

/// (mu, k, alpha, s, t) points for the Beta check, some outside the convergent range.
pub fn beta_points() -> Vec<(Q, u32, Q, u32, u32)> {
    vec![
        (qf(11, 3), 0, qf(7, 5), 2, 0),
        (qf(11, 3), 1, qf(7, 5), 1, 1),
        (q(4), 1, qf(1, 3), 2, 2),
        (qf(7, 2), 2, qf(-9, 4), 3, 1),
        (q(3), 0, qf(-13, 3), 4, 2),
    ]
}

/// Relative error of each Gamma-shift ratio against Gamma-function evaluation.
pub fn beta_errors() -> Vec<f64> {
    beta_points()
        .into_iter()
        .map(|(mu, k, alpha, s, t)| {
            let exact = bilinear_form(&mu, k, &alpha, s, t).unwrap();
            let (m, a) = (to_f64(&mu), to_f64(&alpha));
            let n = (s + t) / 2;
            let sign = if (s / 2 + t / 2) % 2 == 0 { 1.0 } else { -1.0 };
            let numeric = sign * half_beta(n, k, m, a) / half_beta(0, k, m, a);
            rel_err(numeric, to_f64(&exact.ratio))
        })
        .collect()
}
