//! Closed-form scalar constants used by the verification identities.
//!
//! Every identity reads its constants through [`Constants`], so a single
//! constant can be deliberately corrupted to confirm that the checks are live.

use std::fmt;
use std::str::FromStr;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{q, Q};

/// A single deliberate corruption of one closed-form constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Perturbation {
    /// Annihilation constant, even branch: t becomes t + 1.
    AnnihilationEven,
    /// Annihilation constant, odd branch: 2 alpha + t + 1 becomes 2 alpha + t + 2.
    AnnihilationOdd,
    /// Three-term constant D, even branch shifted by one.
    ThreeTermD,
    /// Three-term constant E, even branch shifted by one.
    ThreeTermE,
    /// The alternating sign of the Euclidean closed form is dropped.
    EuclidClosedFormSign,
    /// D_k[x^s M] for odd s uses s + 2k + mu instead of s - 1 + 2k + mu.
    DiracPowerOdd,
    /// Gamma eigenvalue on odd Fischer pieces uses mu instead of mu - 1.
    GammaEigenvalueOdd,
    /// Sphere moments use (k_i + 1) instead of (k_i + 1/2).
    SphereMoment,
    /// Ball radial factor drops the alpha shift in its denominator.
    BallRadial,
    /// The bilinear form loses its (-1)^(s+t) sign.
    BilinearSign,
}

impl Perturbation {
    pub const ALL: [Perturbation; 10] = [
        Perturbation::AnnihilationEven,
        Perturbation::AnnihilationOdd,
        Perturbation::ThreeTermD,
        Perturbation::ThreeTermE,
        Perturbation::EuclidClosedFormSign,
        Perturbation::DiracPowerOdd,
        Perturbation::GammaEigenvalueOdd,
        Perturbation::SphereMoment,
        Perturbation::BallRadial,
        Perturbation::BilinearSign,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Perturbation::AnnihilationEven => "annihilation-even",
            Perturbation::AnnihilationOdd => "annihilation-odd",
            Perturbation::ThreeTermD => "three-term-d",
            Perturbation::ThreeTermE => "three-term-e",
            Perturbation::EuclidClosedFormSign => "euclid-closed-form-sign",
            Perturbation::DiracPowerOdd => "dirac-power-odd",
            Perturbation::GammaEigenvalueOdd => "gamma-eigenvalue-odd",
            Perturbation::SphereMoment => "sphere-moment",
            Perturbation::BallRadial => "ball-radial",
            Perturbation::BilinearSign => "bilinear-sign",
        }
    }
}

impl fmt::Display for Perturbation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Perturbation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Perturbation::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown perturbation `{s}`")))
    }
}

/// Source of every closed-form constant, optionally with one corrupted entry.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Constants {
    fault: Option<Perturbation>,
}

impl Constants {
    pub fn exact() -> Self {
        Self::default()
    }

    pub fn with_fault(p: Perturbation) -> Self {
        Self { fault: Some(p) }
    }

    pub fn fault(&self) -> Option<Perturbation> {
        self.fault
    }

    fn is(&self, p: Perturbation) -> bool {
        self.fault == Some(p)
    }

    /// C(alpha, t, mu, k).
    pub fn annihilation(&self, alpha: &Q, t: u32, mu: &Q, k: u32) -> Q {
        let (tq, kq) = (q(i64::from(t)), q(i64::from(k)));
        if t % 2 == 0 {
            let lead = if self.is(Perturbation::AnnihilationEven) { &tq + q(1) } else { tq.clone() };
            lead * (q(2) * alpha + &tq + mu + q(2) * kq)
        } else {
            let bump = if self.is(Perturbation::AnnihilationOdd) { q(2) } else { q(1) };
            (q(2) * alpha + &tq + bump) * (&tq + mu + q(2) * kq - q(1))
        }
    }

    /// (D, E) of the three-term recurrence.
    pub fn three_term(&self, alpha: &Q, t: u32, mu: &Q, k: u32) -> (Q, Q) {
        let (tq, kq) = (q(i64::from(t)), q(i64::from(k)));
        let half = Q::one() / q(2);
        if t % 2 == 0 {
            let mut d = alpha + &tq * &half;
            let mut e = mu + q(2) * &kq - q(2) + &tq;
            if self.is(Perturbation::ThreeTermD) {
                d += q(1);
            }
            if self.is(Perturbation::ThreeTermE) {
                e += q(1);
            }
            (d, e)
        } else {
            (alpha + mu * &half + kq + &tq * &half - &half, tq - q(1))
        }
    }

    /// c with D_k[x^s M_k] = c x^(s-1) M_k.
    pub fn dirac_power(&self, s: u32, mu: &Q, k: u32) -> Q {
        let (sq, kq) = (q(i64::from(s)), q(i64::from(k)));
        if s % 2 == 0 {
            -sq
        } else {
            let base = if self.is(Perturbation::DiracPowerOdd) { sq } else { sq - q(1) };
            -(base + q(2) * kq + mu)
        }
    }

    /// Eigenvalue of Gamma_k on x^j M(k - j).
    pub fn gamma_eigenvalue(&self, k: u32, j: u32, mu: &Q) -> Q {
        let l = q(i64::from(k) - i64::from(j));
        if j % 2 == 0 {
            -l
        } else if self.is(Perturbation::GammaEigenvalueOdd) {
            l + mu
        } else {
            l + mu - q(1)
        }
    }

    /// Offset b_i in the sphere moment factor (k_i + b_i) raised by half the exponent.
    pub fn sphere_offset(&self) -> Q {
        if self.is(Perturbation::SphereMoment) {
            q(1)
        } else {
            Q::one() / q(2)
        }
    }

    /// Shift of the denominator in the ball radial factor (mu/2)_n / (mu/2 + alpha + 1)_n.
    pub fn ball_radial_shift(&self, alpha: &Q) -> Q {
        if self.is(Perturbation::BallRadial) {
            Q::zero()
        } else {
            alpha + q(1)
        }
    }

    /// Sign applied to the bilinear form for powers s and t.
    pub fn bilinear_sign(&self, s: u32, t: u32) -> Q {
        if self.is(Perturbation::BilinearSign) || (s + t) % 2 == 0 {
            q(1)
        } else {
            q(-1)
        }
    }

    /// Whether the Euclidean closed form keeps its (-1)^n factor.
    pub fn euclid_sign(&self, n: u32) -> Q {
        if self.is(Perturbation::EuclidClosedFormSign) || n % 2 == 0 {
            q(1)
        } else {
            q(-1)
        }
    }
}
