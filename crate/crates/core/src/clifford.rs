//! The Clifford algebra R_{0,m}: generators e_1..e_m with e_i e_j + e_j e_i = -2 delta_ij.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{show_q, Q};

/// Default cap on the number of generators (2^8 = 256 blades).
pub const DEFAULT_MAX_DIM: usize = 8;

/// Basis element e_A, where bit i-1 of the mask is set iff e_i occurs in A.
///
/// Factors are kept in the canonical order e_1 < e_2 < ... < e_m.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Blade(pub u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    /// The generator e_i, `i` counted from 1.
    pub fn generator(i: usize) -> Blade {
        assert!(i >= 1, "generators are numbered from 1");
        Blade(1 << (i - 1))
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    /// Product of two basis blades: returns (sign, blade) with e_A e_B = sign * e_{A xor B}.
    pub fn mul(self, other: Blade) -> (i32, Blade) {
        let (a, b) = (self.0, other.0);
        // transpositions needed to move every factor of B past the larger factors of A
        let mut swaps = 0;
        let mut shifted = a >> 1;
        while shifted != 0 {
            swaps += (shifted & b).count_ones();
            shifted >>= 1;
        }
        // each shared generator squares to -1
        swaps += (a & b).count_ones();
        let sign = if swaps % 2 == 0 { 1 } else { -1 };
        (sign, Blade(a ^ b))
    }

    /// Sign picked up under Clifford conjugation: (-1)^{|A|(|A|+1)/2}.
    pub fn conjugation_sign(self) -> i32 {
        let g = self.grade();
        if (g * (g + 1) / 2) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        write!(f, "e")?;
        for i in 0..32 {
            if self.0 & (1 << i) != 0 {
                write!(f, "{}", i + 1)?;
            }
        }
        Ok(())
    }
}

/// Multivector of R_{0,m} with exact rational coefficients; zeros are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CliffordElement {
    dim: usize,
    coeffs: BTreeMap<Blade, Q>,
}

impl CliffordElement {
    pub fn zero(dim: usize) -> Self {
        CliffordElement {
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::scalar(dim, Q::one())
    }

    pub fn scalar(dim: usize, value: Q) -> Self {
        Self::from_blade(dim, Blade::SCALAR, value)
    }

    pub fn from_blade(dim: usize, blade: Blade, value: Q) -> Self {
        assert!(
            (blade.0 as u64) < (1u64 << dim),
            "blade {blade} outside R_0,{dim}"
        );
        let mut coeffs = BTreeMap::new();
        if !value.is_zero() {
            coeffs.insert(blade, value);
        }
        CliffordElement { dim, coeffs }
    }

    /// The generator e_i, `i` counted from 1.
    pub fn generator(dim: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= dim, "e_{i} is not a generator of R_0,{dim}");
        Self::from_blade(dim, Blade::generator(i), Q::one())
    }

    /// Builds an element from (blade, coefficient) pairs, summing repeats.
    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Blade, Q)>) -> Self {
        let mut out = Self::zero(dim);
        for (b, c) in terms {
            out.add_term(b, &c);
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, blade: Blade) -> Q {
        self.coeffs.get(&blade).cloned().unwrap_or_else(Q::zero)
    }

    pub fn scalar_part(&self) -> Q {
        self.coeff(Blade::SCALAR)
    }

    /// Terms in ascending blade-mask order.
    pub fn terms(&self) -> impl Iterator<Item = (Blade, &Q)> {
        self.coeffs.iter().map(|(b, c)| (*b, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, blade: Blade, value: &Q) {
        if value.is_zero() {
            return;
        }
        assert!((blade.0 as u64) < (1u64 << self.dim));
        let slot = self.coeffs.entry(blade).or_insert_with(Q::zero);
        *slot += value;
        if slot.is_zero() {
            self.coeffs.remove(&blade);
        }
    }

    pub fn scale(&self, factor: &Q) -> Self {
        if factor.is_zero() {
            return Self::zero(self.dim);
        }
        CliffordElement {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|(b, c)| (*b, c * factor)).collect(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_dims(self.dim, other.dim)?;
        let mut out = self.clone();
        for (b, c) in &other.coeffs {
            out.add_term(*b, c);
        }
        Ok(out)
    }

    /// Geometric product; coefficients of `self` stay on the left.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_dims(self.dim, other.dim)?;
        let mut out = Self::zero(self.dim);
        for (ba, ca) in &self.coeffs {
            for (bb, cb) in &other.coeffs {
                let (sign, blade) = ba.mul(*bb);
                let mut prod = ca * cb;
                if sign < 0 {
                    prod = -prod;
                }
                out.add_term(blade, &prod);
            }
        }
        Ok(out)
    }

    /// Clifford conjugation, the anti-involution with conj(e_i) = -e_i.
    pub fn conjugate(&self) -> Self {
        CliffordElement {
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .map(|(b, c)| {
                    let v = if b.conjugation_sign() < 0 { -c } else { c.clone() };
                    (*b, v)
                })
                .collect(),
        }
    }

    /// Largest grade present, `None` for zero.
    pub fn max_grade(&self) -> Option<u32> {
        self.coeffs.keys().map(|b| b.grade()).max()
    }
}

fn check_dims(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch { left: a, right: b });
    }
    Ok(())
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if b.0 == 0 {
                write!(f, "{}", show_q(&mag))?;
            } else if mag.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{} {b}", show_q(&mag))?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a CliffordElement> for &'a CliffordElement {
    type Output = CliffordElement;
    fn add(self, rhs: &'a CliffordElement) -> CliffordElement {
        self.checked_add(rhs).expect("Clifford dimension mismatch")
    }
}

impl<'a> Sub<&'a CliffordElement> for &'a CliffordElement {
    type Output = CliffordElement;
    fn sub(self, rhs: &'a CliffordElement) -> CliffordElement {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a CliffordElement> for &'a CliffordElement {
    type Output = CliffordElement;
    fn mul(self, rhs: &'a CliffordElement) -> CliffordElement {
        self.checked_mul(rhs).expect("Clifford dimension mismatch")
    }
}

impl Neg for &CliffordElement {
    type Output = CliffordElement;
    fn neg(self) -> CliffordElement {
        CliffordElement {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|(b, c)| (*b, -c)).collect(),
        }
    }
}

impl Neg for CliffordElement {
    type Output = CliffordElement;
    fn neg(self) -> CliffordElement {
        -&self
    }
}

impl AddAssign<&CliffordElement> for CliffordElement {
    fn add_assign(&mut self, rhs: &CliffordElement) {
        assert_eq!(self.dim, rhs.dim, "Clifford dimension mismatch");
        for (b, c) in &rhs.coeffs {
            self.add_term(*b, c);
        }
    }
}

impl SubAssign<&CliffordElement> for CliffordElement {
    fn sub_assign(&mut self, rhs: &CliffordElement) {
        assert_eq!(self.dim, rhs.dim, "Clifford dimension mismatch");
        for (b, c) in &rhs.coeffs {
            self.add_term(*b, &-c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn e(m: usize, i: usize) -> CliffordElement {
        CliffordElement::generator(m, i)
    }

    #[test]
    fn generator_squares_to_minus_one() {
        assert_eq!(&e(3, 1) * &e(3, 1), CliffordElement::scalar(3, q(-1)));
    }

    #[test]
    fn generators_anticommute() {
        let ab = &e(3, 1) * &e(3, 2);
        let ba = &e(3, 2) * &e(3, 1);
        assert_eq!(ab, -ba);
        assert!((&ab + &(&e(3, 2) * &e(3, 1))).is_zero());
    }

    #[test]
    fn unit_law() {
        let e12 = CliffordElement::from_blade(2, Blade(0b11), q(1));
        assert_eq!(&CliffordElement::one(2) * &e12, e12);
    }

    #[test]
    fn bivector_squares_to_minus_one() {
        let e12 = CliffordElement::from_blade(2, Blade(0b11), q(1));
        assert_eq!(&e12 * &e12, CliffordElement::scalar(2, q(-1)));
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(e(2, 1).conjugate(), -e(2, 1));
        let five = CliffordElement::scalar(2, q(5));
        assert_eq!(five.conjugate(), five);
        let e12 = CliffordElement::from_blade(2, Blade(0b11), q(1));
        assert_eq!(e12.conjugate(), -e12.clone());
        // anti-involution on the product e1 e2
        assert_eq!(e12.conjugate(), &e(2, 2).conjugate() * &e(2, 1).conjugate());
    }

    #[test]
    fn mismatch_is_an_error() {
        assert_eq!(
            e(2, 1).checked_mul(&e(3, 1)),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn display() {
        let x = CliffordElement::from_terms(
            3,
            [(Blade(0), q(2)), (Blade(0b011), q(-1)), (Blade(0b100), crate::rational::qf(1, 2))],
        );
        assert_eq!(x.to_string(), "2 - e12 + 1/2 e3");
    }
}
