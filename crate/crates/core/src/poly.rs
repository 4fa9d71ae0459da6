//! Multivariate polynomials in x_1..x_m with Clifford-valued coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use crate::clifford::{Blade, CliffordElement};
use crate::error::{Error, Result};
use crate::rational::{show_q, Q};

/// Exponent vector of a monomial x_1^{a_1} ... x_m^{a_m}.
///
/// Ordered graded-lex: total degree first, then larger powers of earlier
/// variables first (1, x1, x2, x1^2, x1 x2, x2^2, ...).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(dim: usize) -> Self {
        Monomial(vec![0; dim])
    }

    pub fn var(dim: usize, axis: usize) -> Self {
        let mut e = vec![0; dim];
        e[axis] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// All exponent vectors of total degree `degree` in `dim` variables, in graded-lex order.
    pub fn all_of_degree(dim: usize, degree: u32) -> Vec<Monomial> {
        fn rec(dim: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if prefix.len() + 1 == dim {
                prefix.push(left);
                out.push(Monomial(prefix.clone()));
                prefix.pop();
                return;
            }
            for a in (0..=left).rev() {
                prefix.push(a);
                rec(dim, left - a, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if dim == 0 {
            if degree == 0 {
                out.push(Monomial(vec![]));
            }
            return out;
        }
        rec(dim, degree, &mut Vec::with_capacity(dim), &mut out);
        out
    }

    pub fn count_of_degree(dim: usize, degree: u32) -> usize {
        // C(degree + dim - 1, dim - 1)
        if dim == 0 {
            return usize::from(degree == 0);
        }
        let (n, k) = (degree as usize + dim - 1, dim - 1);
        (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if a == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, a)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Rational m x m matrix, row-major.
pub type Matrix = Vec<Vec<Q>>;

/// Sparse polynomial: monomial -> nonzero Clifford coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MVPoly {
    dim: usize,
    terms: BTreeMap<Monomial, CliffordElement>,
}

impl MVPoly {
    pub fn zero(dim: usize) -> Self {
        MVPoly {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(CliffordElement::one(dim))
    }

    pub fn constant(c: CliffordElement) -> Self {
        Self::term(Monomial::one(c.dim()), c)
    }

    pub fn scalar_constant(dim: usize, v: Q) -> Self {
        Self::constant(CliffordElement::scalar(dim, v))
    }

    pub fn term(mono: Monomial, coeff: CliffordElement) -> Self {
        assert_eq!(mono.dim(), coeff.dim(), "monomial/coefficient dimension mismatch");
        let mut p = Self::zero(coeff.dim());
        p.add_term(mono, &coeff);
        p
    }

    /// The scalar coordinate function x_{axis+1}.
    pub fn var(dim: usize, axis: usize) -> Self {
        Self::term(Monomial::var(dim, axis), CliffordElement::one(dim))
    }

    /// The vector variable x = sum_j e_j x_j.
    pub fn vector_var(dim: usize) -> Self {
        let mut p = Self::zero(dim);
        for j in 0..dim {
            p.add_term(Monomial::var(dim, j), &CliffordElement::generator(dim, j + 1));
        }
        p
    }

    /// |x|^2 = x_1^2 + ... + x_m^2.
    pub fn radius_sq(dim: usize) -> Self {
        let mut p = Self::zero(dim);
        for j in 0..dim {
            let mut e = vec![0; dim];
            e[j] = 2;
            p.add_term(Monomial(e), &CliffordElement::one(dim));
        }
        p
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Monomial, CliffordElement)>) -> Self {
        let mut p = Self::zero(dim);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CliffordElement)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> CliffordElement {
        self.terms
            .get(mono)
            .cloned()
            .unwrap_or_else(|| CliffordElement::zero(self.dim))
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: &CliffordElement) {
        if coeff.is_zero() {
            return;
        }
        assert_eq!(mono.dim(), self.dim, "monomial dimension mismatch");
        assert_eq!(coeff.dim(), self.dim, "coefficient dimension mismatch");
        match self.terms.get_mut(&mono) {
            Some(slot) => {
                *slot += coeff;
                if slot.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, coeff.clone());
            }
        }
    }

    /// Highest total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    /// `Some(d)` when every term has degree d (zero counts as homogeneous of any degree: `None`).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.degree()?;
        (self.min_degree() == Some(d)).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// True when every coefficient is a pure scalar.
    pub fn is_scalar(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.terms().all(|(b, _)| b == Blade::SCALAR))
    }

    pub fn homogeneous_component(&self, degree: u32) -> MVPoly {
        MVPoly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn checked_add(&self, other: &MVPoly) -> Result<MVPoly> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    /// Product; coefficients multiply in written order (left factor's coefficient on the left).
    pub fn checked_mul(&self, other: &MVPoly) -> Result<MVPoly> {
        self.check_dim(other)?;
        let mut out = MVPoly::zero(self.dim);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        Ok(out)
    }

    fn check_dim(&self, other: &MVPoly) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn scale(&self, factor: &Q) -> MVPoly {
        if factor.is_zero() {
            return MVPoly::zero(self.dim);
        }
        MVPoly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.scale(factor)))
                .collect(),
        }
    }

    /// c * p, with the Clifford constant on the left.
    pub fn left_mul(&self, c: &CliffordElement) -> MVPoly {
        let mut out = MVPoly::zero(self.dim);
        for (m, coeff) in &self.terms {
            out.add_term(m.clone(), &(c * coeff));
        }
        out
    }

    /// p * c, with the Clifford constant on the right.
    pub fn right_mul(&self, c: &CliffordElement) -> MVPoly {
        let mut out = MVPoly::zero(self.dim);
        for (m, coeff) in &self.terms {
            out.add_term(m.clone(), &(coeff * c));
        }
        out
    }

    pub fn pow(&self, n: u32) -> MVPoly {
        let mut acc = MVPoly::one(self.dim);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Clifford conjugation applied coefficientwise (the variables are real).
    pub fn conjugate(&self) -> MVPoly {
        MVPoly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.conjugate()))
                .collect(),
        }
    }

    /// The real-valued component multiplying blade `b`.
    pub fn blade_component(&self, b: Blade) -> MVPoly {
        let mut out = MVPoly::zero(self.dim);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &CliffordElement::scalar(self.dim, c.coeff(b)));
        }
        out
    }

    /// Partial derivative with respect to x_{axis+1}.
    pub fn partial(&self, axis: usize) -> MVPoly {
        let mut out = MVPoly::zero(self.dim);
        for (m, c) in &self.terms {
            let a = m.0[axis];
            if a == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[axis] -= 1;
            out.add_term(Monomial(e), &c.scale(&Q::from_integer(a.into())));
        }
        out
    }

    /// Euler operator sum_i x_i d/dx_i: scales each term by its degree.
    pub fn euler(&self) -> MVPoly {
        let mut out = MVPoly::zero(self.dim);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &c.scale(&Q::from_integer(m.degree().into())));
        }
        out
    }

    /// Replaces every x_i by sum_j a[i][j] x_j (realizes f o A for x -> A x).
    pub fn substitute_linear(&self, a: &Matrix) -> MVPoly {
        assert_eq!(a.len(), self.dim, "substitution matrix has wrong size");
        if let Some(perm) = monomial_map(a) {
            // each x_i maps to c_i x_{pi(i)}
            let mut out = MVPoly::zero(self.dim);
            for (m, c) in &self.terms {
                let mut e = vec![0u32; self.dim];
                let mut factor = Q::one();
                for (i, &ai) in m.0.iter().enumerate() {
                    let (j, ref ci) = perm[i];
                    e[j] += ai;
                    for _ in 0..ai {
                        factor *= ci;
                    }
                }
                out.add_term(Monomial(e), &c.scale(&factor));
            }
            return out;
        }
        let images: Vec<MVPoly> = a
            .iter()
            .map(|row| {
                let mut p = MVPoly::zero(self.dim);
                for (j, v) in row.iter().enumerate() {
                    p.add_term(
                        Monomial::var(self.dim, j),
                        &CliffordElement::scalar(self.dim, v.clone()),
                    );
                }
                p
            })
            .collect();
        let mut powers: Vec<Vec<MVPoly>> = images.iter().map(|p| vec![MVPoly::one(self.dim), p.clone()]).collect();
        let mut out = MVPoly::zero(self.dim);
        for (m, c) in &self.terms {
            let mut prod = MVPoly::constant(c.clone());
            for (i, &ai) in m.0.iter().enumerate() {
                while powers[i].len() <= ai as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                prod = &prod * &powers[i][ai as usize];
            }
            out = &out + &prod;
        }
        out
    }

    /// Exact quotient by |x|^2, or None when |x|^2 does not divide self.
    pub fn exact_div_radius_sq(&self) -> Option<MVPoly> {
        let r2 = MVPoly::radius_sq(self.dim);
        let lead = |p: &MVPoly| {
            p.terms
                .keys()
                .max_by_key(|mono| (mono.degree(), mono.exponents().to_vec()))
                .cloned()
        };
        let mut rem = self.clone();
        let mut quot = MVPoly::zero(self.dim);
        while let Some(mono) = lead(&rem) {
            let e = mono.exponents();
            if e[0] < 2 {
                return None;
            }
            let mut qe = e.to_vec();
            qe[0] -= 2;
            let t = MVPoly::term(Monomial::new(qe), rem.terms[&mono].clone());
            rem = &rem - &(&r2 * &t);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Exact quotient of `self` by the linear form <alpha, x>.
    ///
    /// Long division in the first variable with a nonzero alpha-coefficient,
    /// treating the other variables as parameters. Fails on a nonzero remainder.
    pub fn exact_div_linear(&self, alpha: &[Q]) -> Result<MVPoly> {
        assert_eq!(alpha.len(), self.dim);
        let pivot = alpha
            .iter()
            .position(|a| !a.is_zero())
            .ok_or_else(|| Error::NotDivisible("zero linear form".into()))?;
        let lead = alpha[pivot].clone();
        let mut rem = self.clone();
        let mut quot = MVPoly::zero(self.dim);
        loop {
            let top = rem.terms.keys().map(|m| m.0[pivot]).max().unwrap_or(0);
            if top == 0 {
                break;
            }
            let mut step = MVPoly::zero(self.dim);
            for (m, c) in rem.terms.iter().filter(|(m, _)| m.0[pivot] == top) {
                let mut e = m.0.clone();
                e[pivot] -= 1;
                step.add_term(Monomial(e), &c.scale(&(Q::one() / &lead)));
            }
            // rem -= step * <alpha, x>
            for (m, c) in &step.terms {
                for (j, aj) in alpha.iter().enumerate() {
                    if aj.is_zero() {
                        continue;
                    }
                    let mut e = m.0.clone();
                    e[j] += 1;
                    rem.add_term(Monomial(e), &c.scale(&-aj));
                }
            }
            quot = &quot + &step;
        }
        if !rem.is_zero() {
            let form: Vec<String> = alpha.iter().map(show_q).collect();
            return Err(Error::NotDivisible(format!("<({}), x>", form.join(", "))));
        }
        Ok(quot)
    }

    /// Evaluates at a rational point.
    pub fn evaluate(&self, point: &[Q]) -> CliffordElement {
        assert_eq!(point.len(), self.dim);
        let mut out = CliffordElement::zero(self.dim);
        for (m, c) in &self.terms {
            let mut v = Q::one();
            for (x, &a) in point.iter().zip(&m.0) {
                for _ in 0..a {
                    v *= x;
                }
            }
            out += &c.scale(&v);
        }
        out
    }

    /// Evaluates each blade component at a floating point; used by numerical oracles.
    pub fn evaluate_f64(&self, point: &[f64]) -> BTreeMap<Blade, f64> {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let v: f64 = point
                .iter()
                .zip(&m.0)
                .map(|(x, &a)| x.powi(a as i32))
                .product();
            for (b, coeff) in c.terms() {
                *out.entry(b).or_insert(0.0) += crate::rational::to_f64(coeff) * v;
            }
        }
        out
    }
}

/// For a matrix with exactly one nonzero per row, returns (column, value) per row.
fn monomial_map(a: &Matrix) -> Option<Vec<(usize, Q)>> {
    a.iter()
        .map(|row| {
            let mut nz = row.iter().enumerate().filter(|(_, v)| !v.is_zero());
            let first = nz.next()?;
            if nz.next().is_some() {
                return None;
            }
            Some((first.0, first.1.clone()))
        })
        .collect()
}

impl<'a> Add<&'a MVPoly> for &'a MVPoly {
    type Output = MVPoly;
    fn add(self, rhs: &'a MVPoly) -> MVPoly {
        self.checked_add(rhs).expect("polynomial dimension mismatch")
    }
}

impl<'a> Sub<&'a MVPoly> for &'a MVPoly {
    type Output = MVPoly;
    fn sub(self, rhs: &'a MVPoly) -> MVPoly {
        let mut out = self.clone();
        assert_eq!(self.dim, rhs.dim, "polynomial dimension mismatch");
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl<'a> Mul<&'a MVPoly> for &'a MVPoly {
    type Output = MVPoly;
    fn mul(self, rhs: &'a MVPoly) -> MVPoly {
        self.checked_mul(rhs).expect("polynomial dimension mismatch")
    }
}

impl Neg for &MVPoly {
    type Output = MVPoly;
    fn neg(self) -> MVPoly {
        MVPoly {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for MVPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let coeff = if c.len() > 1 { format!("({c})") } else { c.to_string() };
            let mono = m.to_string();
            match (coeff.as_str(), mono.as_str()) {
                (_, "1") => write!(f, "{coeff}")?,
                ("1", _) => write!(f, "{mono}")?,
                ("-1", _) => write!(f, "-{mono}")?,
                _ => write!(f, "{coeff} {mono}")?,
            }
        }
        Ok(())
    }
}
