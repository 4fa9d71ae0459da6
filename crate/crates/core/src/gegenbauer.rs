//! Clifford-Gegenbauer polynomials on the unit ball and on the whole space,
//! built from the first-order operators D_alpha, with their identities and
//! the scalar variant on Dunkl harmonics.
//!
//! Both families share one formula with a weight 1 + sigma |x|^2, where
//! sigma = -1 on the ball and +1 on the whole space.

use std::fmt;
use std::str::FromStr;

use num::{One, Zero};

use crate::constants::Constants;
use crate::dunkl::OperatorContext;
use crate::error::{Error, Result};
use crate::jacobi::{jacobi_poly, pochhammer, UniPoly};
use crate::monogenic::{is_monogenic, monogenic_basis};
use crate::poly::MVPoly;
use crate::rational::{factorial, pow_q, q, show_q, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Orthogonal on the unit ball against (1 - |x|^2)^alpha.
    Ball,
    /// Orthogonal on the whole space through a bilinear form.
    Euclid,
}

impl Family {
    pub const BOTH: [Family; 2] = [Family::Ball, Family::Euclid];

    /// -1 for the ball, +1 for the whole space.
    pub fn sigma(self) -> Q {
        match self {
            Family::Ball => q(-1),
            Family::Euclid => q(1),
        }
    }

    /// 1 + sigma |x|^2.
    pub fn weight(self, dim: usize) -> MVPoly {
        &MVPoly::one(dim) + &MVPoly::radius_sq(dim).scale(&self.sigma())
    }

    pub fn check_alpha(self, alpha: &Q) -> Result<()> {
        if self == Family::Ball && *alpha <= q(-1) {
            return Err(Error::OutOfRange(format!(
                "ball family needs alpha > -1, got {}",
                show_q(alpha)
            )));
        }
        Ok(())
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Ball => "ball",
            Family::Euclid => "euclid",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ball" => Ok(Family::Ball),
            "euclid" => Ok(Family::Euclid),
            _ => Err(Error::Parse(format!("unknown family `{s}`"))),
        }
    }
}

/// (1 + sigma |x|^2) D_k + 2 sigma (alpha + 1) x, applied to f.
pub fn d_alpha(ctx: &OperatorContext, family: Family, alpha: &Q, f: &MVPoly) -> Result<MVPoly> {
    family.check_alpha(alpha)?;
    let m = ctx.dim();
    let shift = q(2) * family.sigma() * (alpha + q(1));
    Ok(&(&family.weight(m) * &ctx.d(f)) + &(&MVPoly::vector_var(m) * f).scale(&shift))
}

/// Sum of a_j x^j, the scalar profile multiplying M_k.
#[derive(Debug, Clone, PartialEq)]
pub struct GegenbauerPoly {
    pub family: Family,
    pub t: u32,
    pub alpha: Q,
    pub k: u32,
    pub mu: Q,
    /// a_j for j = 0..=t.
    pub coeffs: Vec<Q>,
}

impl GegenbauerPoly {
    pub fn coeff(&self, j: usize) -> Q {
        self.coeffs.get(j).cloned().unwrap_or_else(Q::zero)
    }

    /// The profile as a polynomial in the formal symbol x.
    pub fn as_unipoly(&self) -> UniPoly {
        UniPoly::new(self.coeffs.clone())
    }

    /// Sum_j a_j x^j M.
    pub fn expand(&self, m: &MVPoly) -> MVPoly {
        expand_profile(&self.as_unipoly(), m)
    }

    /// Only powers of the parity of t occur.
    pub fn respects_parity(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(j, c)| c.is_zero() || (j as u32) % 2 == self.t % 2)
    }
}

impl fmt::Display for GegenbauerPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "({}) M", show_q(c))?,
                1 => write!(f, "({}) x M", show_q(c))?,
                _ => write!(f, "({}) x^{j} M", show_q(c))?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Sum_j p_j x^j M for a profile p in the symbol x.
pub fn expand_profile(p: &UniPoly, m: &MVPoly) -> MVPoly {
    let x = MVPoly::vector_var(m.dim());
    let mut power = m.clone();
    let mut out = MVPoly::zero(m.dim());
    for c in p.coeffs() {
        out = &out + &power.scale(c);
        power = &x * &power;
    }
    out
}

/// Reads off a_j from p = Sum a_j x^j M, failing when p is not of that form.
pub fn extract_profile(p: &MVPoly, m: &MVPoly, max_power: u32) -> Result<UniPoly> {
    let k = m.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    let x = MVPoly::vector_var(m.dim());
    let mut power = m.clone();
    let mut coeffs = Vec::new();
    for j in 0..=max_power {
        let comp = p.homogeneous_component(j + k);
        let (mono, c) = power.terms().next().ok_or(Error::NotInSpan)?;
        let (blade, v) = c.terms().next().ok_or(Error::NotInSpan)?;
        let a = comp.coefficient(mono).coeff(blade) / v;
        coeffs.push(a);
        power = &x * &power;
    }
    let profile = UniPoly::new(coeffs);
    if expand_profile(&profile, m) != *p {
        return Err(Error::NotInSpan);
    }
    Ok(profile)
}

fn require_monogenic(ctx: &OperatorContext, m: &MVPoly) -> Result<u32> {
    if m.is_zero() {
        return Err(Error::OutOfRange("the monogenic must be nonzero".into()));
    }
    let k = m.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    if !is_monogenic(ctx, m) {
        return Err(Error::NotMonogenic);
    }
    Ok(k)
}

/// D_alpha D_{alpha+1} ... D_{alpha+t-1}[f], innermost factor first.
pub fn apply_chain(ctx: &OperatorContext, family: Family, t: u32, alpha: &Q, f: &MVPoly) -> Result<MVPoly> {
    family.check_alpha(alpha)?;
    let mut out = f.clone();
    for j in (0..t).rev() {
        out = d_alpha(ctx, family, &(alpha + q(i64::from(j))), &out)?;
    }
    Ok(out)
}

/// Operator construction of the degree-t polynomial attached to M_k.
pub fn gegenbauer(ctx: &OperatorContext, family: Family, t: u32, alpha: &Q, m: &MVPoly) -> Result<GegenbauerPoly> {
    let k = require_monogenic(ctx, m)?;
    let full = apply_chain(ctx, family, t, alpha, m)?;
    let profile = extract_profile(&full, m, t)?;
    let mut coeffs = profile.coeffs().to_vec();
    coeffs.resize(t as usize + 1, Q::zero());
    Ok(GegenbauerPoly {
        family,
        t,
        alpha: alpha.clone(),
        k,
        mu: ctx.mu().clone(),
        coeffs,
    })
}

/// C(alpha, t, mu, k); the whole-space identities use it with the opposite sign.
pub fn annihilation_constant(family: Family, alpha: &Q, t: u32, mu: &Q, k: u32) -> Q {
    let _ = family;
    Constants::exact().annihilation(alpha, t, mu, k)
}

/// (D, E) of the three-term recurrence.
pub fn three_term_constants(alpha: &Q, t: u32, mu: &Q, k: u32) -> (Q, Q) {
    Constants::exact().three_term(alpha, t, mu, k)
}

/// Closed form through Jacobi polynomials evaluated at 1 - 2 sigma x^2.
pub fn closed_form(family: Family, t: u32, alpha: &Q, k: u32, mu: &Q) -> GegenbauerPoly {
    closed_form_with(&Constants::exact(), family, t, alpha, k, mu)
}

pub fn closed_form_with(consts: &Constants, family: Family, t: u32, alpha: &Q, k: u32, mu: &Q) -> GegenbauerPoly {
    let n = t / 2;
    let odd = t % 2 == 1;
    let kq = q(i64::from(k));
    let a = mu / q(2) + &kq - q(1) + if odd { q(1) } else { q(0) };
    let jac = jacobi_poly(n, &a, alpha);
    // argument 1 + 2 x^2 on the ball, 1 - 2 x^2 on the whole space
    let z_scale = -q(2) * family.sigma();
    let two_pow = pow_q(&q(2), t);
    let mut pre = two_pow * pochhammer(&(alpha + q(i64::from(n)) + q(1)), n + u32::from(odd)) * factorial(n);
    match family {
        Family::Ball if odd => pre = -pre,
        Family::Ball => {}
        Family::Euclid => pre *= consts.euclid_sign(n),
    }
    let in_z = jac.compose(&UniPoly::linear(q(1), z_scale)).scale(&pre);
    let mut coeffs = vec![Q::zero(); t as usize + 1];
    for (i, c) in in_z.coeffs().iter().enumerate() {
        coeffs[2 * i + usize::from(odd)] = c.clone();
    }
    GegenbauerPoly {
        family,
        t,
        alpha: alpha.clone(),
        k,
        mu: mu.clone(),
        coeffs,
    }
}

/// Residual checks for the identities of both families on actual polynomials.
#[derive(Debug, Clone, Copy)]
pub struct Identities<'a> {
    ctx: &'a OperatorContext,
    consts: Constants,
}

impl<'a> Identities<'a> {
    pub fn new(ctx: &'a OperatorContext) -> Self {
        Self::with_constants(ctx, Constants::exact())
    }

    pub fn with_constants(ctx: &'a OperatorContext, consts: Constants) -> Self {
        Self { ctx, consts }
    }

    fn poly(&self, family: Family, t: u32, alpha: &Q, m: &MVPoly) -> Result<MVPoly> {
        apply_chain(self.ctx, family, t, alpha, m)
    }

    fn x(&self) -> MVPoly {
        MVPoly::vector_var(self.ctx.dim())
    }

    /// D_k[C_t^alpha] + sigma C(alpha, t) C_{t-1}^{alpha+1}.
    pub fn annihilation(&self, family: Family, t: u32, alpha: &Q, m: &MVPoly) -> Result<MVPoly> {
        let k = require_monogenic(self.ctx, m)?;
        let lhs = self.ctx.d(&self.poly(family, t, alpha, m)?);
        if t == 0 {
            return Ok(lhs);
        }
        let c = self.consts.annihilation(alpha, t, self.ctx.mu(), k);
        let lower = self.poly(family, t - 1, &(alpha + q(1)), m)?;
        Ok(&lhs + &lower.scale(&(family.sigma() * c)))
    }

    /// (1 + sigma r^2) Delta_k C - 2 sigma (alpha + 1) x D_k C - sigma C(alpha, t) C.
    pub fn differential_equation(&self, family: Family, t: u32, alpha: &Q, m: &MVPoly) -> Result<MVPoly> {
        let k = require_monogenic(self.ctx, m)?;
        let sigma = family.sigma();
        let p = self.poly(family, t, alpha, m)?;
        let lap = &family.weight(self.ctx.dim()) * &self.ctx.laplacian(&p);
        let xd = (&self.x() * &self.ctx.d(&p)).scale(&(q(-2) * &sigma * (alpha + q(1))));
        let c = self.consts.annihilation(alpha, t, self.ctx.mu(), k);
        Ok(&(&lap + &xd) + &p.scale(&(-sigma * c)))
    }

    /// C_{t+1}^alpha - 2 sigma (alpha + 1) x C_t^{alpha+1} + sigma C(alpha+1, t) (1 + sigma r^2) C_{t-1}^{alpha+2}.
    pub fn recurrence(&self, family: Family, t: u32, alpha: &Q, m: &MVPoly) -> Result<MVPoly> {
        let k = require_monogenic(self.ctx, m)?;
        let sigma = family.sigma();
        let a1 = alpha + q(1);
        let top = self.poly(family, t + 1, alpha, m)?;
        let mid = (&self.x() * &self.poly(family, t, &a1, m)?).scale(&(q(-2) * &sigma * &a1));
        let mut res = &top + &mid;
        if t > 0 {
            let c = self.consts.annihilation(&a1, t, self.ctx.mu(), k);
            let low = &family.weight(self.ctx.dim()) * &self.poly(family, t - 1, &(alpha + q(2)), m)?;
            res = &res + &low.scale(&(sigma * c));
        }
        Ok(res)
    }

    /// D/(2(alpha+t)) C_t - sigma (alpha + mu/2 + k + t - 1) x C_{t-1} + sigma (alpha + t - 1) E C_{t-2}.
    pub fn three_term(&self, family: Family, t: u32, alpha: &Q, m: &MVPoly) -> Result<MVPoly> {
        let k = require_monogenic(self.ctx, m)?;
        if t == 0 {
            return Err(Error::OutOfRange("three-term recurrence needs t >= 1".into()));
        }
        let tq = q(i64::from(t));
        let denom = q(2) * (alpha + &tq);
        if denom.is_zero() {
            return Err(Error::IllPosed("alpha + t = 0".into()));
        }
        let sigma = family.sigma();
        let mu = self.ctx.mu();
        let (d, e) = self.consts.three_term(alpha, t, mu, k);
        let lead = self.poly(family, t, alpha, m)?.scale(&(d / denom));
        let c1 = -&sigma * (alpha + mu / q(2) + q(i64::from(k)) + &tq - q(1));
        let mut res = &lead + &(&self.x() * &self.poly(family, t - 1, alpha, m)?).scale(&c1);
        if t >= 2 {
            let c2 = &sigma * (alpha + &tq - q(1)) * e;
            res = &res + &self.poly(family, t - 2, alpha, m)?.scale(&c2);
        }
        Ok(res)
    }

    /// C_{2t+1,k} - 2 sigma (alpha + 2t + 1) x C_{2t,k+1} on the scalar profiles.
    pub fn corollary_shift(&self, family: Family, t: u32, alpha: &Q, k: u32) -> Result<UniPoly> {
        let mk = first_monogenic(self.ctx, k)?;
        let mk1 = first_monogenic(self.ctx, k + 1)?;
        let odd = gegenbauer(self.ctx, family, 2 * t + 1, alpha, &mk)?.as_unipoly();
        let even = gegenbauer(self.ctx, family, 2 * t, alpha, &mk1)?.as_unipoly();
        let factor = q(-2) * family.sigma() * (alpha + q(2 * i64::from(t) + 1));
        Ok(&odd + &(&UniPoly::x() * &even).scale(&factor))
    }

    /// D_k[x^s M] - c_s x^(s-1) M, with c_s the closed-form constant.
    pub fn dirac_power(&self, s: u32, m: &MVPoly) -> Result<MVPoly> {
        let k = require_monogenic(self.ctx, m)?;
        let x = self.x();
        let xs = &x.pow(s) * m;
        let lhs = self.ctx.d(&xs);
        if s == 0 {
            return Ok(lhs);
        }
        let c = self.consts.dirac_power(s, self.ctx.mu(), k);
        Ok(&lhs - &(&x.pow(s - 1) * m).scale(&c))
    }
}

/// D_k on a profile: Sum b_j x^j M goes to Sum b_j c_j x^(j-1) M.
pub fn profile_dirac(consts: &Constants, p: &UniPoly, mu: &Q, k: u32) -> UniPoly {
    UniPoly::new(
        p.coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, b)| b * consts.dirac_power(j as u32, mu, k))
            .collect(),
    )
}

/// D_alpha on a profile, using |x|^2 = -x^2.
pub fn profile_d_alpha(consts: &Constants, family: Family, alpha: &Q, p: &UniPoly, mu: &Q, k: u32) -> UniPoly {
    let sigma = family.sigma();
    let x = UniPoly::x();
    let weight = UniPoly::new(vec![q(1), q(0), -sigma.clone()]);
    let shifted = (&x * p).scale(&(q(2) * sigma * (alpha + q(1))));
    &shifted + &(&weight * &profile_dirac(consts, p, mu, k))
}

pub fn first_monogenic(ctx: &OperatorContext, k: u32) -> Result<MVPoly> {
    monogenic_basis(ctx, k)
        .basis
        .into_iter()
        .next()
        .ok_or_else(|| Error::OutOfRange(format!("no monogenics of degree {k}")))
}

pub fn verify_annihilation(ctx: &OperatorContext, family: Family, t: u32, alpha: &Q, m: &MVPoly) -> Result<MVPoly> {
    Identities::new(ctx).annihilation(family, t, alpha, m)
}

pub fn verify_differential_equation(ctx: &OperatorContext, family: Family, t: u32, alpha: &Q, m: &MVPoly) -> Result<MVPoly> {
    Identities::new(ctx).differential_equation(family, t, alpha, m)
}

pub fn verify_recurrence(ctx: &OperatorContext, family: Family, t: u32, alpha: &Q, m: &MVPoly) -> Result<MVPoly> {
    Identities::new(ctx).recurrence(family, t, alpha, m)
}

pub fn verify_three_term(ctx: &OperatorContext, family: Family, t: u32, alpha: &Q, m: &MVPoly) -> Result<MVPoly> {
    Identities::new(ctx).three_term(family, t, alpha, m)
}

pub fn verify_corollary_shift(ctx: &OperatorContext, family: Family, t: u32, alpha: &Q, k: u32) -> Result<UniPoly> {
    Identities::new(ctx).corollary_shift(family, t, alpha, k)
}

/// (1 + sigma r^2)^alpha C_t^alpha(M) - D_k^t[(1 + sigma r^2)^(alpha+t) M] for integer alpha,
/// with the weight moved to the other side when alpha is negative.
pub fn verify_rodrigues(ctx: &OperatorContext, family: Family, t: u32, alpha: i64, m: &MVPoly) -> Result<MVPoly> {
    require_monogenic(ctx, m)?;
    let top = alpha + i64::from(t);
    if top < 0 {
        return Err(Error::OutOfRange("Rodrigues check needs alpha + t >= 0".into()));
    }
    let w = family.weight(ctx.dim());
    let c = apply_chain(ctx, family, t, &q(alpha), m)?;
    let mut rhs = &w.pow(top as u32) * m;
    for _ in 0..t {
        rhs = ctx.d(&rhs);
    }
    Ok(if alpha >= 0 {
        &(&w.pow(alpha as u32) * &c) - &rhs
    } else {
        &c - &(&w.pow((-alpha) as u32) * &rhs)
    })
}

/// (1 + sigma r^2)^alpha D_alpha[f] - D_k[(1 + sigma r^2)^(alpha+1) f] for integer alpha >= 0.
pub fn verify_factored_form(ctx: &OperatorContext, family: Family, alpha: u32, f: &MVPoly) -> Result<MVPoly> {
    let w = family.weight(ctx.dim());
    let lhs = &w.pow(alpha) * &d_alpha(ctx, family, &q(i64::from(alpha)), f)?;
    Ok(&lhs - &ctx.d(&(&w.pow(alpha + 1) * f)))
}

/// Table of a_j^{s, alpha + d} for s + d <= t_max, built by the coefficient recursions.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTable {
    pub family: Family,
    pub alpha: Q,
    pub mu: Q,
    pub k: u32,
    pub t_max: u32,
    rows: Vec<Vec<Vec<Q>>>,
}

impl CoefficientTable {
    /// a^{s, alpha + shift}, indexed by power of x.
    pub fn get(&self, s: u32, shift: u32) -> &[Q] {
        &self.rows[s as usize][shift as usize]
    }

    pub fn coeff(&self, s: u32, shift: u32, j: i64) -> Q {
        usize::try_from(j)
            .ok()
            .and_then(|j| self.get(s, shift).get(j).cloned())
            .unwrap_or_else(Q::zero)
    }

    /// Failures of the annihilation form c_j a_j^{s, b} = -sigma C(b, s) a_{j-1}^{s-1, b+1}.
    pub fn check_annihilation_forms(&self, consts: &Constants) -> Vec<String> {
        let sigma = self.family.sigma();
        let mut failures = Vec::new();
        for s in 1..=self.t_max {
            for shift in 0..=(self.t_max - s) {
                let beta = &self.alpha + q(i64::from(shift));
                let c = consts.annihilation(&beta, s, &self.mu, self.k);
                for j in (1..=s).filter(|j| j % 2 == s % 2) {
                    let lhs = consts.dirac_power(j, &self.mu, self.k) * self.coeff(s, shift, i64::from(j));
                    let rhs = -&sigma * &c * self.coeff(s - 1, shift + 1, i64::from(j) - 1);
                    if lhs != rhs {
                        failures.push(format!("a_{j}^{{{s},alpha+{shift}}}: {} != {}", show_q(&lhs), show_q(&rhs)));
                    }
                }
            }
        }
        failures
    }
}

/// Coefficients from a_0^{0,.} = 1 through the even and odd coefficient recursions.
pub fn coefficient_recursions(family: Family, t_max: u32, alpha: &Q, mu: &Q, k: u32) -> CoefficientTable {
    let sigma = family.sigma();
    let kq = q(i64::from(k));
    let mut rows: Vec<Vec<Vec<Q>>> = Vec::new();
    rows.push((0..=t_max).map(|_| vec![Q::one()]).collect());
    for s in 1..=t_max {
        let prev = &rows[s as usize - 1];
        let at = |shift: usize, j: i64| -> Q {
            usize::try_from(j)
                .ok()
                .and_then(|j| prev[shift].get(j).cloned())
                .unwrap_or_else(Q::zero)
        };
        let mut row = Vec::new();
        for shift in 0..=(t_max - s) as usize {
            let beta = alpha + q(shift as i64);
            let mut a = vec![Q::zero(); s as usize + 1];
            if s % 2 == 0 {
                for i in 0..=(s / 2) as i64 {
                    let iq = q(i);
                    a[2 * i as usize] = -(q(2) * &iq + q(2) * &kq + mu) * at(shift + 1, 2 * i + 1)
                        + &sigma * (q(2) * &iq + q(2) * &kq + q(2) * &beta + mu) * at(shift + 1, 2 * i - 1);
                }
            } else {
                for i in 0..=((s - 1) / 2) as i64 {
                    let iq = q(i);
                    a[2 * i as usize + 1] = q(2) * &sigma * (&beta + q(1) + &iq) * at(shift + 1, 2 * i)
                        - (q(2) * &iq + q(2)) * at(shift + 1, 2 * i + 2);
                }
            }
            row.push(a);
        }
        rows.push(row);
    }
    CoefficientTable {
        family,
        alpha: alpha.clone(),
        mu: mu.clone(),
        k,
        t_max,
        rows,
    }
}

/// -(1-r^2)^2 Delta_k - 2(alpha+2)(2alpha+2+mu) r^2 + 4(alpha+2)(1-r^2) E + 2(alpha+2) mu.
pub fn scalar_d_alpha(ctx: &OperatorContext, alpha: &Q, f: &MVPoly) -> MVPoly {
    let m = ctx.dim();
    let w = Family::Ball.weight(m);
    let r2 = MVPoly::radius_sq(m);
    let a2 = alpha + q(2);
    let mu = ctx.mu();
    let lap = (&w.pow(2) * &ctx.laplacian(f)).scale(&q(-1));
    let rad = (&r2 * f).scale(&(q(-2) * &a2 * (q(2) * alpha + q(2) + mu)));
    let eul = (&w * &ctx.euler(f)).scale(&(q(4) * &a2));
    let cst = f.scale(&(q(2) * &a2 * mu));
    &(&lap + &rad) + &(&eul + &cst)
}

/// Scalar polynomial on a Dunkl harmonic built from the second-order operator.
pub fn scalar_gegenbauer(ctx: &OperatorContext, t: u32, alpha: &Q, h: &MVPoly) -> Result<MVPoly> {
    Family::Ball.check_alpha(alpha)?;
    if !h.is_scalar() || h.is_zero() || !ctx.laplacian(h).is_zero() {
        return Err(Error::NotHarmonic);
    }
    h.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    let mut out = h.clone();
    for j in (0..t).rev() {
        out = scalar_d_alpha(ctx, &(alpha + q(2 * i64::from(j))), &out);
    }
    Ok(out)
}

/// 2^{2t} (alpha+t+1)_t t! P_t^{(mu/2+k-1, alpha)}(1 + 2x^2) H_k.
pub fn scalar_closed_form(ctx: &OperatorContext, t: u32, alpha: &Q, h: &MVPoly) -> Result<MVPoly> {
    let k = h.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    Ok(closed_form(Family::Ball, 2 * t, alpha, k, ctx.mu()).expand(h))
}
