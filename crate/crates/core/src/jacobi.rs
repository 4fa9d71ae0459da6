//! Univariate rational polynomials and the classical Jacobi polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{binomial, factorial, q, show_q, Q};

/// Univariate polynomial with ascending rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Q>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Q) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial x.
    pub fn x() -> Self {
        Self::new(vec![Q::zero(), Q::one()])
    }

    /// c0 + c1 x.
    pub fn linear(c0: Q, c1: Q) -> Self {
        Self::new(vec![c0, c1])
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// Coefficient of x^i, zero past the degree.
    pub fn coeff(&self, i: usize) -> Q {
        self.coeffs.get(i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::constant(Q::one()), |acc, _| &acc * self)
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.coeffs
            .iter()
            .rev()
            .fold(Q::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * q(i as i64))
                .collect(),
        )
    }

    /// self(inner(x)).
    pub fn compose(&self, inner: &UniPoly) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", show_q(c))?,
                1 => write!(f, "{} x", show_q(c))?,
                _ => write!(f, "{} x^{i}", show_q(c))?,
            }
        }
        Ok(())
    }
}

/// Rising factorial (a)_p = a (a + 1) ... (a + p - 1).
pub fn pochhammer(a: &Q, p: u32) -> Q {
    (0..p).fold(Q::one(), |acc, j| acc * (a + q(i64::from(j))))
}

/// Gamma(a + n) / Gamma(a) for an integer offset n of either sign.
///
/// Fails when a negative offset crosses a pole of the numerator.
pub fn gamma_ratio(a: &Q, n: i64) -> Result<Q> {
    if n >= 0 {
        return Ok(pochhammer(a, n as u32));
    }
    let mut denom = Q::one();
    for j in 1..=(-n) {
        denom *= a - q(j);
    }
    if denom.is_zero() {
        return Err(Error::IllPosed(format!(
            "Gamma({} {n}) has a pole",
            show_q(a)
        )));
    }
    Ok(Q::one() / denom)
}

/// Jacobi polynomial P_t^{(a,b)} in the variable x.
///
/// Coefficient of ((x - 1)/2)^i is C(t, i)/t! (a + i + 1)_{t-i} (a + b + t + 1)_i,
/// the Gamma quotients rewritten as rising factorials.
pub fn jacobi_poly(t: u32, a: &Q, b: &Q) -> UniPoly {
    let half_shift = UniPoly::linear(q(-1) / q(2), Q::one() / q(2));
    let ab = a + b + q(i64::from(t) + 1);
    let coeffs: Vec<Q> = (0..=t)
        .map(|i| {
            binomial(t, i) / factorial(t)
                * pochhammer(&(a + q(i64::from(i) + 1)), t - i)
                * pochhammer(&ab, i)
        })
        .collect();
    UniPoly::new(coeffs).compose(&half_shift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&qf(7, 3), 0), q(1));
        assert_eq!(pochhammer(&qf(3, 2), 2), qf(15, 4));
        assert_eq!(pochhammer(&qf(7, 2), 2), qf(63, 4));
        assert_eq!(gamma_ratio(&qf(5, 2), -2).unwrap(), Q::one() / (qf(3, 2) * qf(1, 2)));
        assert!(gamma_ratio(&q(2), -3).is_err());
    }

    #[test]
    fn low_degree_jacobi() {
        let (a, b) = (qf(1, 3), qf(-1, 4));
        assert_eq!(jacobi_poly(0, &a, &b), UniPoly::constant(q(1)));
        let half = UniPoly::linear(qf(-1, 2), qf(1, 2));
        let expected = &UniPoly::constant(&a + q(1)) + &half.scale(&(&a + &b + q(2)));
        assert_eq!(jacobi_poly(1, &a, &b), expected);
        // P_t(1) = (a + 1)_t / t!
        for t in 0..6 {
            assert_eq!(jacobi_poly(t, &a, &b).eval(&q(1)), pochhammer(&(&a + q(1)), t) / factorial(t));
        }
    }

    #[test]
    fn legendre_case() {
        let p2 = jacobi_poly(2, &q(0), &q(0));
        assert_eq!(p2, UniPoly::new(vec![qf(-1, 2), q(0), qf(3, 2)]));
    }

    #[test]
    fn ode_and_contiguous_relations() {
        let (a, b) = (qf(2, 5), qf(7, 3));
        let y = UniPoly::x();
        let one = UniPoly::constant(q(1));
        for t in 0..=5u32 {
            let p = jacobi_poly(t, &a, &b);
            let lhs = &(&(&one - &(&y * &y)) * &p.derivative().derivative())
                + &(&UniPoly::linear(&b - &a, -(&a + &b + q(2))) * &p.derivative());
            let tq = q(i64::from(t));
            assert!((&lhs + &p.scale(&(&tq * (&tq + &a + &b + q(1))))).is_zero());

            let l = tq.clone();
            let left = (&UniPoly::linear(q(1), q(1)) * &jacobi_poly(t, &a, &(&b + q(1))))
                .scale(&(&a / q(2) + &b / q(2) + &l + q(1)));
            let right = &jacobi_poly(t, &a, &b).scale(&(&b + &l + q(1)))
                + &jacobi_poly(t + 1, &a, &b).scale(&(&l + q(1)));
            assert_eq!(left, right);

            if t >= 1 {
                let n = tq;
                let left = jacobi_poly(t, &a, &(&b - q(1))).scale(&(&a + &b + q(2) * &n));
                let right = &jacobi_poly(t, &a, &b).scale(&(&a + &b + &n))
                    + &jacobi_poly(t - 1, &a, &b).scale(&(&a + &n));
                assert_eq!(left, right);
            }
        }
    }
}
