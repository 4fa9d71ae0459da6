//! Exact inner products. Every value is a rational (or Clifford-rational)
//! multiple of one transcendental base constant per context, so orthogonality
//! becomes an exact zero test.

use std::fmt;

use num::{One, Signed, Zero};

use crate::clifford::CliffordElement;
use crate::constants::Constants;
use crate::dunkl::OperatorContext;
use crate::error::{Error, Result};
use crate::gegenbauer::{apply_chain, gegenbauer, Family};
use crate::jacobi::{gamma_ratio, pochhammer, UniPoly};
use crate::monogenic::{kelvin_invert, monogenic_basis};
use crate::poly::MVPoly;
use crate::rational::{factorial, is_nonneg_integer, pow_q, q, show_q, Q};
use crate::rootsys::RootSystem;

/// The base constant a [`ClassValue`] is a multiple of.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BaseTag {
    /// Integral of w_k over the unit sphere.
    Sphere { multiplicities: Vec<Q> },
    /// Integral of (1 - |x|^2)^alpha w_k over the unit ball.
    Ball { multiplicities: Vec<Q>, alpha: Q },
    /// (1/2) B(k + mu/2, -k - mu/2 - alpha), the value of the bilinear form on M_k, M_k.
    Bilinear { mu: Q, alpha: Q, degree: u32 },
}

fn join(values: &[Q]) -> String {
    values.iter().map(show_q).collect::<Vec<_>>().join(",")
}

impl fmt::Display for BaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseTag::Sphere { multiplicities } => write!(f, "sphere(k={})", join(multiplicities)),
            BaseTag::Ball { multiplicities, alpha } => {
                write!(f, "ball(k={};alpha={})", join(multiplicities), show_q(alpha))
            }
            BaseTag::Bilinear { mu, alpha, degree } => {
                write!(f, "bilinear(mu={};k={degree};alpha={})", show_q(mu), show_q(alpha))
            }
        }
    }
}

/// Factor c with base(target) = c * base(self), when the two are related by an integer shift of alpha.
fn base_shift(from: &BaseTag, to: &BaseTag, consts: &Constants) -> Option<Q> {
    match (from, to) {
        (a, b) if a == b => Some(Q::one()),
        (
            BaseTag::Ball { multiplicities: k1, alpha: a1 },
            BaseTag::Ball { multiplicities: k2, alpha: a2 },
        ) if k1 == k2 => {
            let half_mu = k1.iter().sum::<Q>() + q(k1.len() as i64) / q(2);
            // ball(a + 1) / ball(a) = (a + 1) / (mu/2 + a + 1)
            let step = |a: &Q| (a + q(1)) / (&half_mu + consts.ball_radial_shift(a));
            shift_product(a1, a2, step)
        }
        (
            BaseTag::Bilinear { mu: m1, alpha: a1, degree: d1 },
            BaseTag::Bilinear { mu: m2, alpha: a2, degree: d2 },
        ) if m1 == m2 && d1 == d2 => {
            let qk = q(i64::from(*d1)) + m1 / q(2);
            // bilinear(a + 1) / bilinear(a) = (a + 1) / (q + a + 1)
            shift_product(a1, a2, |a: &Q| (a + q(1)) / (&qk + a + q(1)))
        }
        _ => None,
    }
}

fn shift_product(from: &Q, to: &Q, step: impl Fn(&Q) -> Q) -> Option<Q> {
    let diff = to - from;
    if !diff.is_integer() {
        return None;
    }
    let n = diff.to_integer();
    let mut factor = Q::one();
    let mut a = from.clone();
    if n >= 0.into() {
        while &a < to {
            factor *= step(&a);
            a += q(1);
        }
    } else {
        while &a > to {
            a -= q(1);
            factor /= step(&a);
        }
    }
    Some(factor)
}

/// Exact rational multiple of a base constant; zero carries no context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassValue {
    pub ratio: Q,
    pub tag: Option<BaseTag>,
}

impl ClassValue {
    pub fn new(ratio: Q, tag: BaseTag) -> Self {
        if ratio.is_zero() {
            Self::zero()
        } else {
            Self { ratio, tag: Some(tag) }
        }
    }

    pub fn zero() -> Self {
        Self { ratio: Q::zero(), tag: None }
    }

    pub fn is_zero(&self) -> bool {
        self.ratio.is_zero()
    }

    pub fn scale(&self, c: &Q) -> Self {
        match &self.tag {
            Some(tag) => Self::new(&self.ratio * c, tag.clone()),
            None => Self::zero(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        match (&self.tag, &other.tag) {
            (None, _) => Ok(other.clone()),
            (_, None) => Ok(self.clone()),
            (Some(a), Some(b)) if a == b => Ok(Self::new(&self.ratio + &other.ratio, a.clone())),
            (Some(a), Some(b)) => Err(Error::IncompatibleContext(a.to_string(), b.to_string())),
        }
    }

    /// The same quantity expressed against another base constant.
    pub fn rebase(&self, target: &BaseTag) -> Result<Self> {
        self.rebase_with(target, &Constants::exact())
    }

    pub fn rebase_with(&self, target: &BaseTag, consts: &Constants) -> Result<Self> {
        let Some(tag) = &self.tag else { return Ok(Self::zero()) };
        let c = base_shift(tag, target, consts)
            .ok_or_else(|| Error::IncompatibleContext(tag.to_string(), target.to_string()))?;
        Ok(Self::new(&self.ratio / c, target.clone()))
    }
}

impl fmt::Display for ClassValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.tag {
            None => write!(f, "0"),
            Some(tag) => write!(f, "{} × BASE[{tag}]", show_q(&self.ratio)),
        }
    }
}

/// Clifford-valued multiple of a base constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordClassValue {
    pub value: CliffordElement,
    pub tag: Option<BaseTag>,
}

impl CliffordClassValue {
    pub fn new(value: CliffordElement, tag: BaseTag) -> Self {
        let tag = if value.is_zero() { None } else { Some(tag) };
        Self { value, tag }
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn scalar_part(&self) -> ClassValue {
        match &self.tag {
            Some(tag) => ClassValue::new(self.value.scalar_part(), tag.clone()),
            None => ClassValue::zero(),
        }
    }

    pub fn rebase_with(&self, target: &BaseTag, consts: &Constants) -> Result<Self> {
        let Some(tag) = &self.tag else { return Ok(self.clone()) };
        let c = base_shift(tag, target, consts)
            .ok_or_else(|| Error::IncompatibleContext(tag.to_string(), target.to_string()))?;
        Ok(Self::new(self.value.scale(&(Q::one() / c)), target.clone()))
    }
}

impl fmt::Display for CliffordClassValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.tag {
            None => write!(f, "0"),
            Some(tag) => write!(f, "({}) × BASE[{tag}]", self.value),
        }
    }
}

/// Integrals against the product weight prod |x_i|^{2 k_i}.
#[derive(Debug, Clone)]
pub struct Integrator {
    multiplicities: Vec<Q>,
    consts: Constants,
}

impl Integrator {
    pub fn new(system: &RootSystem) -> Result<Self> {
        Self::with_constants(system, Constants::exact())
    }

    pub fn with_constants(system: &RootSystem, consts: Constants) -> Result<Self> {
        let multiplicities = system.product_weight_multiplicities().ok_or_else(|| {
            Error::UnsupportedWeight(format!(
                "sphere integrals need a product weight, `{}` is not of Z2^m type",
                system.label()
            ))
        })?;
        Ok(Self { multiplicities, consts })
    }

    pub fn dim(&self) -> usize {
        self.multiplicities.len()
    }

    fn half_mu(&self) -> Q {
        self.multiplicities.iter().sum::<Q>() + q(self.dim() as i64) / q(2)
    }

    pub fn sphere_tag(&self) -> BaseTag {
        BaseTag::Sphere { multiplicities: self.multiplicities.clone() }
    }

    pub fn ball_tag(&self, alpha: &Q) -> BaseTag {
        BaseTag::Ball { multiplicities: self.multiplicities.clone(), alpha: alpha.clone() }
    }

    /// Sphere moment of x^a relative to the integral of w_k:
    /// prod (k_i + 1/2)_{a_i/2} / (mu/2)_{|a|/2}, zero for any odd a_i.
    pub fn moment(&self, exponents: &[u32]) -> Q {
        if exponents.iter().any(|a| a % 2 == 1) {
            return Q::zero();
        }
        let offset = self.consts.sphere_offset();
        let num = exponents
            .iter()
            .zip(&self.multiplicities)
            .fold(Q::one(), |acc, (a, k)| acc * pochhammer(&(k + &offset), a / 2));
        let total: u32 = exponents.iter().sum();
        num / pochhammer(&self.half_mu(), total / 2)
    }

    fn sphere_value(&self, p: &MVPoly) -> CliffordElement {
        let mut acc = CliffordElement::zero(self.dim());
        for (mono, c) in p.terms() {
            let w = self.moment(mono.exponents());
            if !w.is_zero() {
                acc = &acc + &c.scale(&w);
            }
        }
        acc
    }

    pub fn sphere_integral(&self, p: &MVPoly) -> Result<CliffordClassValue> {
        check_dim(self.dim(), p.dim())?;
        Ok(CliffordClassValue::new(self.sphere_value(p), self.sphere_tag()))
    }

    /// Integral of conj(f) g over the sphere.
    pub fn sphere_inner(&self, f: &MVPoly, g: &MVPoly) -> Result<CliffordClassValue> {
        self.sphere_integral(&f.conjugate().checked_mul(g)?)
    }

    /// Radial factor B((p + mu)/2, alpha + 1) / B(mu/2, alpha + 1) for even total degree p = 2n.
    fn ball_radial(&self, n: u32, alpha: &Q) -> Q {
        let half_mu = self.half_mu();
        pochhammer(&half_mu, n) / pochhammer(&(&half_mu + self.consts.ball_radial_shift(alpha)), n)
    }

    /// Integral of conj(f) g (1 - |x|^2)^alpha w_k over the unit ball.
    pub fn ball_inner(&self, f: &MVPoly, g: &MVPoly, alpha: &Q) -> Result<CliffordClassValue> {
        Family::Ball.check_alpha(alpha)?;
        let integrand = f.conjugate().checked_mul(g)?;
        let mut acc = CliffordElement::zero(self.dim());
        for (mono, c) in integrand.terms() {
            let w = self.moment(mono.exponents());
            if w.is_zero() {
                continue;
            }
            let radial = self.ball_radial(mono.degree() / 2, alpha);
            acc = &acc + &c.scale(&(w * radial));
        }
        Ok(CliffordClassValue::new(acc, self.ball_tag(alpha)))
    }
}

fn check_dim(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DimensionMismatch { left, right });
    }
    Ok(())
}

pub fn sphere_integral(system: &RootSystem, p: &MVPoly) -> Result<CliffordClassValue> {
    Integrator::new(system)?.sphere_integral(p)
}

pub fn ball_inner(system: &RootSystem, f: &MVPoly, g: &MVPoly, alpha: &Q) -> Result<CliffordClassValue> {
    Integrator::new(system)?.ball_inner(f, g, alpha)
}

/// Checks that the bilinear form with these parameters has no Gamma poles.
pub fn bilinear_well_posed(mu: &Q, alpha: &Q) -> Result<()> {
    if is_nonneg_integer(alpha) {
        return Err(Error::IllPosed(format!("alpha = {} is a nonnegative integer", show_q(alpha))));
    }
    let s = mu / q(2) + alpha;
    if s.is_integer() {
        return Err(Error::IllPosed(format!("mu/2 + alpha = {} is an integer", show_q(&s))));
    }
    Ok(())
}

/// <x^s M_k, x^t M_k>_alpha relative to (1/2) B(k + mu/2, -k - mu/2 - alpha).
pub fn bilinear_form(mu: &Q, k: u32, alpha: &Q, s: u32, t: u32) -> Result<ClassValue> {
    bilinear_form_with(&Constants::exact(), mu, k, alpha, s, t)
}

pub fn bilinear_form_with(consts: &Constants, mu: &Q, k: u32, alpha: &Q, s: u32, t: u32) -> Result<ClassValue> {
    bilinear_well_posed(mu, alpha)?;
    if (s + t) % 2 == 1 {
        return Ok(ClassValue::zero());
    }
    let (hs, ht) = (s / 2, t / 2);
    let n = (s + t) / 2;
    let qk = q(i64::from(k)) + mu / q(2);
    let ratio = consts.bilinear_sign(hs, ht) * pochhammer(&qk, n) / pochhammer(&(-&qk - alpha - q(i64::from(n))), n);
    Ok(ClassValue::new(ratio, BaseTag::Bilinear { mu: mu.clone(), alpha: alpha.clone(), degree: k }))
}

/// Bilinear form of two profiles Sum a_i x^i M_k and Sum b_j x^j M_k.
pub fn bilinear_profiles(consts: &Constants, mu: &Q, k: u32, alpha: &Q, p: &UniPoly, r: &UniPoly) -> Result<ClassValue> {
    let mut acc = ClassValue::zero();
    for (i, a) in p.coeffs().iter().enumerate().filter(|(_, a)| !a.is_zero()) {
        for (j, b) in r.coeffs().iter().enumerate().filter(|(_, b)| !b.is_zero()) {
            let v = bilinear_form_with(consts, mu, k, alpha, i as u32, j as u32)?;
            acc = acc.add(&v.scale(&(a * b)))?;
        }
    }
    if acc.is_zero() {
        bilinear_well_posed(mu, alpha)?;
    }
    Ok(acc)
}

/// Square matrix of Clifford-valued class values with row and column labels.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    pub labels: Vec<String>,
    pub entries: Vec<Vec<CliffordClassValue>>,
}

impl GramMatrix {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    /// Off-diagonal positions whose entry is not exactly zero.
    pub fn nonzero_off_diagonal(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.entries.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if i != j && !v.is_zero() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        self.nonzero_off_diagonal().is_empty()
    }

    /// entry(i, j) equals the conjugate of entry(j, i).
    pub fn is_conjugate_symmetric(&self) -> bool {
        (0..self.size()).all(|i| {
            (0..self.size()).all(|j| self.entries[i][j].value == self.entries[j][i].value.conjugate())
        })
    }

    /// Rows of "label,cell,cell,..." with cells "clifford × BASE[tag]".
    pub fn to_csv(&self) -> String {
        let mut out = String::from("row");
        for l in &self.labels {
            out.push(',');
            out.push_str(l);
        }
        out.push('\n');
        for (label, row) in self.labels.iter().zip(&self.entries) {
            out.push_str(label);
            for v in row {
                out.push(',');
                out.push_str(&csv_cell(v));
            }
            out.push('\n');
        }
        out
    }
}

fn csv_cell(v: &CliffordClassValue) -> String {
    match &v.tag {
        None => "0".to_string(),
        Some(tag) => format!("\"{} × BASE[{tag}]\"", v.value),
    }
}

/// Gram matrix of the family polynomials of degrees 0..=t_max attached to each monogenic.
///
/// The ball family integrates against a product weight. The whole-space family
/// uses the bilinear form, which is defined on the span of x^j M_k for one fixed
/// M_k normalized to unit sphere norm, so exactly one monogenic is accepted.
pub fn gram(ctx: &OperatorContext, family: Family, alpha: &Q, t_max: u32, monogenics: &[MVPoly]) -> Result<GramMatrix> {
    gram_with(&Constants::exact(), ctx, family, alpha, t_max, monogenics)
}

pub fn gram_with(
    consts: &Constants,
    ctx: &OperatorContext,
    family: Family,
    alpha: &Q,
    t_max: u32,
    monogenics: &[MVPoly],
) -> Result<GramMatrix> {
    family.check_alpha(alpha)?;
    let prefix = match family {
        Family::Ball => "C",
        Family::Euclid => "G",
    };
    let mut labels = Vec::new();
    let mut polys = Vec::new();
    for (idx, m) in monogenics.iter().enumerate() {
        for t in 0..=t_max {
            let g = gegenbauer(ctx, family, t, alpha, m)?;
            labels.push(format!("{prefix}{t}(M{idx}:k={})", g.k));
            polys.push((g, m));
        }
    }
    let entries = match family {
        Family::Ball => {
            let integrator = Integrator::with_constants(ctx.system(), *consts)?;
            let expanded: Vec<MVPoly> = polys.iter().map(|(g, m)| g.expand(m)).collect();
            expanded
                .iter()
                .map(|f| expanded.iter().map(|g| integrator.ball_inner(f, g, alpha)).collect())
                .collect::<Result<Vec<Vec<_>>>>()?
        }
        Family::Euclid => {
            if monogenics.len() != 1 {
                return Err(Error::OutOfRange(
                    "the bilinear form is defined for a single fixed monogenic".into(),
                ));
            }
            let m = ctx.dim();
            polys
                .iter()
                .map(|(a, _)| {
                    polys
                        .iter()
                        .map(|(b, _)| {
                            let v = bilinear_profiles(consts, ctx.mu(), a.k, alpha, &a.as_unipoly(), &b.as_unipoly())?;
                            Ok(class_to_clifford(&v, m))
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?
        }
    };
    Ok(GramMatrix { labels, entries })
}

fn class_to_clifford(v: &ClassValue, dim: usize) -> CliffordClassValue {
    CliffordClassValue {
        value: CliffordElement::scalar(dim, v.ratio.clone()),
        tag: v.tag.clone(),
    }
}

/// One pair in the monogenic orthogonality report.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalityEntry {
    /// "inner-inner" or "inner-outer".
    pub kind: &'static str,
    pub left: (u32, usize),
    pub right: (u32, usize),
    pub value: CliffordClassValue,
    pub expectation: Expectation,
}

/// What the theory predicts for one report entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    Zero,
    /// A norm: positive scalar part.
    Positive,
    /// Recorded without a prediction.
    Unspecified,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalityReport {
    pub entries: Vec<OrthogonalityEntry>,
}

impl OrthogonalityReport {
    pub fn failures(&self) -> Vec<&OrthogonalityEntry> {
        self.entries.iter().filter(|e| !e.holds()).collect()
    }

    pub fn all_zero(&self) -> bool {
        self.failures().is_empty()
    }
}

impl OrthogonalityEntry {
    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn holds(&self) -> bool {
        match self.expectation {
            Expectation::Zero => self.is_zero(),
            Expectation::Positive => self.value.scalar_part().ratio.is_positive(),
            Expectation::Unspecified => true,
        }
    }
}

/// Sphere inner products of inner monogenics across degrees, and of outer
/// monogenics (restricted to the sphere as omega M(omega)) against inner ones.
/// Same-degree pairs of distinct basis elements are recorded without a
/// prediction; each element's norm must be positive.
pub fn verify_monogenic_orthogonality(ctx: &OperatorContext, k_max: u32) -> Result<OrthogonalityReport> {
    verify_monogenic_orthogonality_with(&Constants::exact(), ctx, k_max)
}

pub fn verify_monogenic_orthogonality_with(consts: &Constants, ctx: &OperatorContext, k_max: u32) -> Result<OrthogonalityReport> {
    let integrator = Integrator::with_constants(ctx.system(), *consts)?;
    let bases: Vec<Vec<MVPoly>> = (0..=k_max).map(|k| monogenic_basis(ctx, k).basis).collect();
    let outers: Vec<Vec<MVPoly>> = bases
        .iter()
        .map(|b| {
            b.iter()
                .map(|m| kelvin_invert(ctx, m).map(|o| o.restrict_to_sphere()))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let mut entries = Vec::new();
    for (a, left) in bases.iter().enumerate() {
        for (b, right) in bases.iter().enumerate().skip(a) {
            for (i, f) in left.iter().enumerate() {
                for (j, g) in right.iter().enumerate() {
                    let value = integrator.sphere_inner(f, g)?;
                    let expectation = if a != b {
                        Expectation::Zero
                    } else if i == j {
                        Expectation::Positive
                    } else {
                        Expectation::Unspecified
                    };
                    entries.push(OrthogonalityEntry {
                        kind: "inner-inner",
                        left: (a as u32, i),
                        right: (b as u32, j),
                        value,
                        expectation,
                    });
                }
            }
        }
    }
    for (a, outer) in outers.iter().enumerate() {
        for (b, inner) in bases.iter().enumerate() {
            for (i, f) in outer.iter().enumerate() {
                for (j, g) in inner.iter().enumerate() {
                    entries.push(OrthogonalityEntry {
                        kind: "inner-outer",
                        left: (a as u32, i),
                        right: (b as u32, j),
                        value: integrator.sphere_inner(f, g)?,
                        expectation: Expectation::Zero,
                    });
                }
            }
        }
    }
    Ok(OrthogonalityReport { entries })
}

/// Comparison of a computed ball norm with the closed-form normalization constant.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizationCheck {
    pub t: u32,
    pub k: u32,
    /// Norm of the degree-t polynomial over the norm of M_k, relative to the ball base over the sphere base.
    pub computed: Q,
    pub predicted: Q,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Agree,
    SignFlip,
    Mismatch,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Agree => "agree",
            Verdict::SignFlip => "sign discrepancy",
            Verdict::Mismatch => "mismatch",
        })
    }
}

/// Predicted <C_t(M_k), C_t(M_k)>_alpha / ((1/2) B(mu/2, alpha + 1) * sphere norm of M_k),
/// reading (a)_alpha as Gamma(a + alpha) / Gamma(a), sign as stated in the closed form.
pub fn normalization_prediction(t: u32, alpha: &Q, mu: &Q, k: u32) -> Result<Q> {
    let n = t / 2;
    let odd = t % 2 == 1;
    let half_mu = mu / q(2);
    let kq = q(i64::from(k));
    let nq = q(i64::from(n));
    let o = u32::from(odd);
    let kn = i64::from(k + n + o);
    let lead = pow_q(&q(2), 4 * n + 2 * o) * factorial(n) * pochhammer(&(alpha + &nq + q(1)), n + o);
    let gamma_part = pochhammer(&(alpha + q(1)), 2 * n + o) * pochhammer(&half_mu, k + n + o)
        / gamma_ratio(&(&half_mu + alpha + q(1)), kn - 1)?;
    let tail = &half_mu + kq + alpha + q(2 * i64::from(n) + i64::from(o));
    let value = lead * gamma_part / tail;
    Ok(if odd { -value } else { value })
}

/// Computes the diagonal ball entry for degree t and compares it with the prediction.
pub fn check_normalization(ctx: &OperatorContext, t: u32, alpha: &Q, m: &MVPoly) -> Result<NormalizationCheck> {
    let integrator = Integrator::new(ctx.system())?;
    let k = m.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    let c = apply_chain(ctx, Family::Ball, t, alpha, m)?;
    let norm = integrator.ball_inner(&c, &c, alpha)?.scalar_part().ratio;
    let m_norm = integrator.sphere_inner(m, m)?.scalar_part().ratio;
    if m_norm.is_zero() {
        return Err(Error::OutOfRange("monogenic with zero norm".into()));
    }
    let computed = norm / m_norm;
    let predicted = normalization_prediction(t, alpha, ctx.mu(), k)?;
    let verdict = if computed == predicted {
        Verdict::Agree
    } else if computed == -&predicted {
        Verdict::SignFlip
    } else {
        Verdict::Mismatch
    };
    Ok(NormalizationCheck { t, k, computed, predicted, verdict })
}
