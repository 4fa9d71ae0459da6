//! Finite sums of r^{2q} P(x) with rational q, used for outer monogenics.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::MVPoly;
use crate::rational::{show_q, Q};

/// sum_j r^{2 q_j} P_j(x); exponents are pairwise distinct and every P_j is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadialScaledFunction {
    dim: usize,
    parts: BTreeMap<Q, MVPoly>,
}

impl RadialScaledFunction {
    pub fn zero(dim: usize) -> Self {
        RadialScaledFunction {
            dim,
            parts: BTreeMap::new(),
        }
    }

    /// r^{2 q} p.
    pub fn new(exponent: Q, p: MVPoly) -> Self {
        let mut out = Self::zero(p.dim());
        out.add_part(exponent, &p);
        out
    }

    pub fn from_poly(p: MVPoly) -> Self {
        Self::new(Q::zero(), p)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Parts as (q, P) pairs in ascending q.
    pub fn parts(&self) -> impl Iterator<Item = (&Q, &MVPoly)> {
        self.parts.iter()
    }

    pub fn add_part(&mut self, exponent: Q, p: &MVPoly) {
        if p.is_zero() {
            return;
        }
        assert_eq!(p.dim(), self.dim, "radial part dimension mismatch");
        let sum = match self.parts.remove(&exponent) {
            Some(existing) => &existing + p,
            None => p.clone(),
        };
        if !sum.is_zero() {
            self.parts.insert(exponent, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let mut out = self.clone();
        for (e, p) in &other.parts {
            out.add_part(e.clone(), p);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.map_parts(|_, p| -p)
    }

    pub fn scale(&self, factor: &Q) -> Self {
        self.map_parts(|_, p| p.scale(factor))
    }

    /// p * self, with `p` on the left of every part.
    pub fn left_mul_poly(&self, p: &MVPoly) -> Self {
        self.map_parts(|_, part| p * part)
    }

    /// r^{2 q} * self: exponents combine additively.
    pub fn mul_radial(&self, exponent: &Q) -> Self {
        let mut out = Self::zero(self.dim);
        for (e, p) in &self.parts {
            out.add_part(e + exponent, p);
        }
        out
    }

    fn map_parts(&self, f: impl Fn(&Q, &MVPoly) -> MVPoly) -> Self {
        let mut out = Self::zero(self.dim);
        for (e, p) in &self.parts {
            out.add_part(e.clone(), &f(e, p));
        }
        out
    }

    /// Merges parts whose exponents differ by integers, folding the integer
    /// difference into powers of |x|^2. Parts with a nonnegative integer
    /// exponent are folded into the polynomial part.
    ///
    /// After normalization there is one part per class of q modulo 1, so the
    /// function is zero exactly when no parts remain.
    pub fn normalize(&self) -> Self {
        let r2 = MVPoly::radius_sq(self.dim);
        let mut classes: BTreeMap<Q, Vec<(&Q, &MVPoly)>> = BTreeMap::new();
        for (e, p) in &self.parts {
            classes.entry(e.fract()).or_default().push((e, p));
        }
        let mut out = Self::zero(self.dim);
        for (frac, members) in classes {
            let mut base = members.iter().map(|(e, _)| (*e).clone()).min().unwrap();
            if frac.is_zero() && !base.is_negative() {
                base = Q::zero();
            }
            let mut combined = MVPoly::zero(self.dim);
            for (e, p) in members {
                let shift = (e - &base).to_integer();
                let n: u32 = u32::try_from(shift).expect("nonnegative shift");
                combined = &combined + &(&r2.pow(n) * p);
            }
            // strip |x|^2 factors that cancel a negative integer exponent
            while frac.is_zero() && base.is_negative() && !combined.is_zero() {
                match combined.exact_div_radius_sq() {
                    Some(quot) => {
                        combined = quot;
                        base += Q::one();
                    }
                    None => break,
                }
            }
            out.add_part(base, &combined);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.normalize().parts.is_empty()
    }

    /// The polynomial this function equals, if it is one.
    pub fn as_polynomial(&self) -> Option<MVPoly> {
        let n = self.normalize();
        match n.parts.len() {
            0 => Some(MVPoly::zero(self.dim)),
            1 => n.parts.get(&Q::zero()).cloned(),
            _ => None,
        }
    }

    /// Restriction to the unit sphere, where r = 1.
    pub fn restrict_to_sphere(&self) -> MVPoly {
        self.parts
            .values()
            .fold(MVPoly::zero(self.dim), |acc, p| &acc + p)
    }

    /// Degree of homogeneity 2q + deg P, when all parts agree.
    pub fn homogeneity(&self) -> Option<Q> {
        let mut degs = self.parts.iter().map(|(e, p)| {
            p.homogeneous_degree()
                .map(|d| e * Q::from_integer(2.into()) + Q::from_integer(d.into()))
        });
        let first = degs.next()??;
        for d in degs {
            if d? != first {
                return None;
            }
        }
        Some(first)
    }

    pub fn one(dim: usize) -> Self {
        Self::from_poly(MVPoly::one(dim))
    }
}

impl fmt::Display for RadialScaledFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, p)) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if e.is_zero() {
                write!(f, "[{p}]")?;
            } else {
                write!(f, "r^({}) [{p}]", show_q(&(e * Q::from_integer(2.into()))))?;
            }
        }
        Ok(())
    }
}
