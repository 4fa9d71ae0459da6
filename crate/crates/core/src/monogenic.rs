//! Bases of Dunkl monogenics and Dunkl harmonics by exact kernel computation,
//! projectors onto the Fischer decomposition, and the inner/outer inversion.

use num::{One, Zero};

use crate::clifford::{Blade, CliffordElement};
use crate::dunkl::{OperatorContext, RadialOp};
use crate::error::{Error, Result};
use crate::linalg::nullspace;
use crate::poly::{MVPoly, Monomial};
use crate::radial::RadialScaledFunction;
use crate::rational::{q, Q};

/// Basis of the left solid inner Dunkl monogenics of one degree (unnormalized).
#[derive(Debug, Clone, PartialEq)]
pub struct MonogenicBasis {
    pub degree: u32,
    pub basis: Vec<MVPoly>,
}

/// Basis of the scalar Dunkl harmonics of one degree.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicBasis {
    pub degree: u32,
    pub basis: Vec<MVPoly>,
}

/// dim P_k (x) R_{0,m} - dim P_{k-1} (x) R_{0,m}, the size the Fischer decomposition predicts.
pub fn expected_monogenic_dim(m: usize, k: u32) -> usize {
    let below = if k == 0 { 0 } else { Monomial::count_of_degree(m, k - 1) };
    (1usize << m) * (Monomial::count_of_degree(m, k) - below)
}

pub fn expected_harmonic_dim(m: usize, k: u32) -> usize {
    let below = if k < 2 { 0 } else { Monomial::count_of_degree(m, k - 2) };
    Monomial::count_of_degree(m, k) - below
}

fn coefficient_column(p: &MVPoly, rows: &[Monomial], blades: usize) -> Vec<Q> {
    let mut col = vec![Q::zero(); rows.len() * blades];
    for (r, mono) in rows.iter().enumerate() {
        let c = p.coefficient(mono);
        for (b, v) in c.terms() {
            col[r * blades + b.0 as usize] = v.clone();
        }
    }
    col
}

fn transpose(cols: &[Vec<Q>], nrows: usize) -> Vec<Vec<Q>> {
    (0..nrows)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect()
}

/// Exact kernel of the left Dunkl Dirac operator on homogeneous degree-k
/// Clifford-valued polynomials.
pub fn monogenic_basis(ctx: &OperatorContext, k: u32) -> MonogenicBasis {
    let m = ctx.dim();
    let blades = 1usize << m;
    let domain = Monomial::all_of_degree(m, k);
    let codomain = if k == 0 { Vec::new() } else { Monomial::all_of_degree(m, k - 1) };
    let generators: Vec<CliffordElement> = (1..=m).map(|j| CliffordElement::generator(m, j)).collect();

    let mut columns = Vec::with_capacity(domain.len() * blades);
    for mono in &domain {
        let grad = ctx.dunkl_gradient(&MVPoly::term(mono.clone(), CliffordElement::one(m)));
        for b in 0..blades {
            let ea = CliffordElement::from_blade(m, Blade(b as u32), Q::one());
            let image = grad.iter().zip(&generators).fold(MVPoly::zero(m), |acc, (t, e)| {
                &acc + &t.right_mul(&(e * &ea))
            });
            columns.push(coefficient_column(&image, &codomain, blades));
        }
    }
    let matrix = transpose(&columns, codomain.len() * blades);
    let basis = nullspace(&matrix, domain.len() * blades)
        .into_iter()
        .map(|v| vector_to_poly(m, &domain, &v))
        .collect();
    MonogenicBasis { degree: k, basis }
}

fn vector_to_poly(m: usize, domain: &[Monomial], v: &[Q]) -> MVPoly {
    let blades = 1usize << m;
    let mut p = MVPoly::zero(m);
    for (i, mono) in domain.iter().enumerate() {
        let coeff = CliffordElement::from_terms(
            m,
            (0..blades).map(|b| (Blade(b as u32), v[i * blades + b].clone())),
        );
        p.add_term(mono.clone(), &coeff);
    }
    p
}

/// Exact kernel of the Dunkl Laplacian on scalar homogeneous degree-k polynomials.
pub fn harmonic_basis(ctx: &OperatorContext, k: u32) -> HarmonicBasis {
    let m = ctx.dim();
    let domain = Monomial::all_of_degree(m, k);
    let codomain = if k < 2 { Vec::new() } else { Monomial::all_of_degree(m, k - 2) };
    let columns: Vec<Vec<Q>> = domain
        .iter()
        .map(|mono| {
            let image = ctx.laplacian(&MVPoly::term(mono.clone(), CliffordElement::one(m)));
            codomain.iter().map(|c| image.coefficient(c).scalar_part()).collect()
        })
        .collect();
    let matrix = transpose(&columns, codomain.len());
    let basis = nullspace(&matrix, domain.len())
        .into_iter()
        .map(|v| {
            let mut p = MVPoly::zero(m);
            for (mono, c) in domain.iter().zip(v) {
                p.add_term(mono.clone(), &CliffordElement::scalar(m, c));
            }
            p
        })
        .collect();
    HarmonicBasis { degree: k, basis }
}

pub fn is_monogenic(ctx: &OperatorContext, p: &MVPoly) -> bool {
    ctx.d(p).is_zero()
}

/// Factors (c, d) of the projector onto x^i M(k - i), each acting as (Gamma_k + c) / d.
pub fn projector_factors(k: u32, i: u32, mu: &Q) -> Vec<(Q, Q)> {
    let (k, i) = (i64::from(k), i64::from(i));
    let r_max = k.div_euclid(2);
    let s_max = (k - 1).div_euclid(2);
    let mut factors = Vec::new();
    if i % 2 == 0 {
        for r in (0..=r_max).filter(|&r| 2 * r != i) {
            factors.push((q(k - 2 * r), q(i - 2 * r)));
        }
        for s in 0..=s_max {
            factors.push((q(-k + 2 * s + 2) - mu, q(-2 * k + i + 2 * s + 2) - mu));
        }
    } else {
        for r in 0..=r_max {
            factors.push((q(k - 2 * r), q(2 * k - i - 1 - 2 * r) + mu));
        }
        for s in (0..=s_max).filter(|&s| 2 * s + 1 != i) {
            factors.push((q(-k + 2 * s + 2) - mu, q(2 * s + 1 - i)));
        }
    }
    factors
}

/// Component of `p` in x^i M(k - i), by repeated application of Gamma_k.
pub fn fischer_project(ctx: &OperatorContext, i: u32, p: &MVPoly) -> Result<MVPoly> {
    if p.is_zero() {
        return Ok(p.clone());
    }
    let k = p.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    if i > k {
        return Ok(MVPoly::zero(p.dim()));
    }
    let mut out = p.clone();
    for (shift, denom) in projector_factors(k, i, ctx.mu()) {
        let g = ctx.gamma(&out);
        out = (&g + &out.scale(&shift)).scale(&(Q::one() / denom));
    }
    Ok(out)
}

/// All Fischer components of a homogeneous polynomial, index i holding x^i M(k - i).
pub fn fischer_decompose(ctx: &OperatorContext, p: &MVPoly) -> Result<Vec<MVPoly>> {
    let k = match p.homogeneous_degree() {
        Some(k) => k,
        None if p.is_zero() => 0,
        None => return Err(Error::NotHomogeneous),
    };
    (0..=k).map(|i| fischer_project(ctx, i, p)).collect()
}

fn check_inner_monogenic(ctx: &OperatorContext, m: &MVPoly) -> Result<u32> {
    let k = m.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    if !is_monogenic(ctx, m) {
        return Err(Error::NotMonogenic);
    }
    Ok(k)
}

/// Q_k = x |x|^{-(mu + 2k)} M_k, a left solid outer monogenic of degree -(k + mu - 1).
pub fn kelvin_invert(ctx: &OperatorContext, m: &MVPoly) -> Result<RadialScaledFunction> {
    let k = check_inner_monogenic(ctx, m)?;
    let exponent = -(ctx.mu() + q(2 * i64::from(k))) / q(2);
    let xm = &MVPoly::vector_var(ctx.dim()) * m;
    Ok(RadialScaledFunction::new(exponent, xm))
}

/// x |x|^{2k + mu - 2} Q_k for an outer monogenic of order k, returned as a polynomial.
pub fn kelvin_restore(ctx: &OperatorContext, outer: &RadialScaledFunction, k: u32) -> Result<MVPoly> {
    if !ctx.apply_radial(RadialOp::Dirac, outer).is_zero() {
        return Err(Error::NotMonogenic);
    }
    let exponent = (q(2 * i64::from(k)) + ctx.mu() - q(2)) / q(2);
    let lifted = outer
        .mul_radial(&exponent)
        .left_mul_poly(&MVPoly::vector_var(ctx.dim()));
    lifted.as_polynomial().ok_or(Error::NotHomogeneous)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::Constants;
    use crate::rational::qf;
    use crate::rootsys::{Preset, RootSystem};

    fn z2() -> OperatorContext {
        OperatorContext::new(RootSystem::preset(Preset::Z2, 2, &[qf(1, 2), qf(1, 3)]).unwrap())
    }

    #[test]
    fn constants_are_monogenic() {
        let ctx = z2();
        let b = monogenic_basis(&ctx, 0);
        assert_eq!(b.basis.len(), 4);
        assert!(b.basis.iter().all(|p| p.degree() == Some(0)));
    }

    #[test]
    fn degree_one_kernel_contains_known_element() {
        let ctx = z2();
        let (k1, k2) = (qf(1, 2), qf(1, 3));
        let m = 2;
        let known = &MVPoly::var(m, 0).left_mul(&CliffordElement::generator(m, 2)).scale(&(q(1) + q(2) * k2))
            + &MVPoly::var(m, 1).left_mul(&CliffordElement::generator(m, 1)).scale(&(q(1) + q(2) * k1));
        assert!(is_monogenic(&ctx, &known));
        let basis = monogenic_basis(&ctx, 1).basis;
        // known lies in the span: rank does not grow when it is appended
        let domain = Monomial::all_of_degree(m, 1);
        let mut cols: Vec<Vec<Q>> = basis.iter().map(|p| coefficient_column(p, &domain, 4)).collect();
        let r0 = crate::linalg::rank(&transpose(&cols, 8), cols.len());
        cols.push(coefficient_column(&known, &domain, 4));
        let r1 = crate::linalg::rank(&transpose(&cols, 8), cols.len());
        assert_eq!(r0, r1);
    }

    #[test]
    fn planar_dimensions_are_four() {
        let ctx = z2();
        for k in 1..=4 {
            assert_eq!(monogenic_basis(&ctx, k).basis.len(), 4);
            assert_eq!(expected_monogenic_dim(2, k), 4);
        }
    }

    #[test]
    fn harmonic_examples() {
        let ctx = z2();
        assert_eq!(harmonic_basis(&ctx, 0).basis, vec![MVPoly::one(2)]);
        let h1 = harmonic_basis(&ctx, 1).basis;
        assert_eq!(h1.len(), 2);
        for i in 0..2 {
            assert!(ctx.laplacian(&MVPoly::var(2, i)).is_zero());
        }
        assert_eq!(harmonic_basis(&ctx, 2).basis.len(), 2);
    }

    #[test]
    fn projector_factors_match_lagrange_form() {
        let mu = qf(11, 3);
        for k in 0..6u32 {
            for i in 0..=k {
                let factors = projector_factors(k, i, &mu);
                assert_eq!(factors.len(), k as usize);
                // each factor kills exactly one other eigenspace and is 1 on its own
                let own = Constants::exact().gamma_eigenvalue(k, i, &mu);
                for (c, d) in &factors {
                    assert_eq!(&own + c, d.clone());
                }
                for j in (0..=k).filter(|&j| j != i) {
                    let ev = Constants::exact().gamma_eigenvalue(k, j, &mu);
                    assert!(factors.iter().any(|(c, _)| (&ev + c).is_zero()));
                }
            }
        }
    }

    #[test]
    fn projector_examples() {
        let ctx = z2();
        let m0 = monogenic_basis(&ctx, 1).basis[0].clone();
        let xm = &MVPoly::vector_var(2) * &m0;
        assert_eq!(fischer_project(&ctx, 1, &xm).unwrap(), xm);
        assert!(fischer_project(&ctx, 0, &xm).unwrap().is_zero());
        assert!(fischer_project(&ctx, 2, &xm).unwrap().is_zero());
        assert_eq!(fischer_project(&ctx, 0, &m0).unwrap(), m0);
        assert!(fischer_project(&ctx, 1, &m0).unwrap().is_zero());
        let mixed = &MVPoly::one(2) + &MVPoly::var(2, 0);
        assert_eq!(fischer_project(&ctx, 0, &mixed), Err(Error::NotHomogeneous));
    }

    #[test]
    fn kelvin_round_trip() {
        let ctx = z2();
        let q0 = kelvin_invert(&ctx, &MVPoly::one(2)).unwrap();
        assert!(ctx.apply_radial(RadialOp::Dirac, &q0).is_zero());
        assert_eq!(q0.homogeneity(), Some(q(1) - ctx.mu()));
        for m in monogenic_basis(&ctx, 2).basis {
            let outer = kelvin_invert(&ctx, &m).unwrap();
            assert!(ctx.apply_radial(RadialOp::Dirac, &outer).is_zero());
            assert_eq!(kelvin_restore(&ctx, &outer, 2).unwrap(), -&m);
        }
        assert_eq!(kelvin_invert(&ctx, &MVPoly::var(2, 0)), Err(Error::NotMonogenic));
    }
}
