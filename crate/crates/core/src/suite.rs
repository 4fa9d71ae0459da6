//! Verification suites that drive every identity over a grid of root
//! systems, degrees and parameters, collecting exact residuals.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clifford::{Blade, CliffordElement};
use crate::constants::Constants;
use crate::dunkl::{OperatorContext, RadialOp};
use crate::error::{Error, Result};
use crate::gegenbauer::{
    closed_form_with, coefficient_recursions, gegenbauer, profile_d_alpha, profile_dirac, scalar_closed_form,
    scalar_gegenbauer, verify_rodrigues, Family, Identities,
};
use crate::integration::{
    bilinear_profiles, check_normalization, gram_with, verify_monogenic_orthogonality_with, BaseTag, Integrator,
    Verdict,
};
use crate::jacobi::UniPoly;
use crate::monogenic::{
    expected_harmonic_dim, expected_monogenic_dim, fischer_project, harmonic_basis, kelvin_invert, kelvin_restore,
    monogenic_basis,
};
use crate::poly::{MVPoly, Monomial};
use crate::rational::{q, qf, show_q, Q};
use crate::rootsys::{Preset, RootSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Operators,
    Monogenics,
    GegenbauerBall,
    GegenbauerEuclid,
    Orthogonality,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Operators,
        Suite::Monogenics,
        Suite::GegenbauerBall,
        Suite::GegenbauerEuclid,
        Suite::Orthogonality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Operators => "operators",
            Suite::Monogenics => "monogenics",
            Suite::GegenbauerBall => "gegenbauer-ball",
            Suite::GegenbauerEuclid => "gegenbauer-euclid",
            Suite::Orthogonality => "orthogonality",
        }
    }

    /// Parses a suite name; `all` expands to every suite.
    pub fn parse_selection(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        Ok(vec![s.parse()?])
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

/// A failed identity with its nonzero residual.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub case: String,
    pub identity: String,
    pub residual: String,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: usize,
    pub failures: Vec<Failure>,
    /// Documented observations that are not failures.
    pub findings: Vec<String>,
    pub wall_time: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Identities that failed at least once.
    pub fn failing_identities(&self) -> Vec<&str> {
        let mut names: Vec<&str> = self.failures.iter().map(|f| f.identity.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        names
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "{status} {}: {} cases, {} failures ({:.2?})",
            self.suite,
            self.cases,
            self.failures.len(),
            self.wall_time
        )?;
        for fail in self.failures.iter().take(20) {
            writeln!(f, "  {} [{}]: {}", fail.identity, fail.case, fail.residual)?;
        }
        if self.failures.len() > 20 {
            writeln!(f, "  ... {} more", self.failures.len() - 20)?;
        }
        for note in &self.findings {
            writeln!(f, "  finding: {note}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub systems: Vec<RootSystem>,
    /// Highest polynomial degree for the operator and monogenic suites.
    pub max_degree: u32,
    /// Highest Gegenbauer degree t.
    pub t_max: u32,
    /// Monogenic degrees k used by the Gegenbauer suites.
    pub k_values: Vec<u32>,
    pub alphas: Vec<Q>,
    pub ball_alpha: Q,
    pub euclid_alpha: Q,
    pub gram_t_max: u32,
    pub orthogonality_k_max: u32,
    pub constants: Constants,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            systems: default_systems(),
            max_degree: 5,
            t_max: 6,
            k_values: vec![0, 1],
            alphas: vec![qf(1, 2), qf(3, 4), qf(7, 5)],
            ball_alpha: qf(1, 2),
            euclid_alpha: qf(7, 5),
            gram_t_max: 4,
            orthogonality_k_max: 3,
            constants: Constants::exact(),
            seed: 7,
        }
    }
}

/// Z2^2 with k = (1/2, 1/3) and A2 with k = 1/2.
pub fn default_systems() -> Vec<RootSystem> {
    vec![
        RootSystem::preset(Preset::Z2, 2, &[qf(1, 2), qf(1, 3)]).expect("valid preset"),
        RootSystem::preset(Preset::A, 3, &[qf(1, 2)]).expect("valid preset"),
    ]
}

/// Random homogeneous polynomial with small integer coefficients on a few blades.
pub fn random_homogeneous<R: Rng>(rng: &mut R, dim: usize, degree: u32, clifford: bool) -> MVPoly {
    let mut p = MVPoly::zero(dim);
    for mono in Monomial::all_of_degree(dim, degree) {
        let blade = if clifford { Blade(rng.gen_range(0..(1u32 << dim))) } else { Blade::SCALAR };
        let c = rng.gen_range(-3i64..=3);
        p.add_term(mono, &CliffordElement::from_blade(dim, blade, q(c)));
    }
    p
}

fn short(p: &impl fmt::Display) -> String {
    let s = p.to_string();
    if s.len() > 160 {
        format!("{}...", &s[..s.char_indices().nth(160).map_or(s.len(), |(i, _)| i)])
    } else {
        s
    }
}

struct Recorder {
    report: SuiteReport,
    start: Instant,
}

impl Recorder {
    fn new(suite: Suite) -> Self {
        Self {
            report: SuiteReport {
                suite,
                cases: 0,
                failures: Vec::new(),
                findings: Vec::new(),
                wall_time: Duration::ZERO,
            },
            start: Instant::now(),
        }
    }

    fn fail(&mut self, case: &str, identity: &str, residual: String) {
        self.report.failures.push(Failure {
            case: case.to_string(),
            identity: identity.to_string(),
            residual,
        });
    }

    fn zero(&mut self, case: &str, identity: &str, residual: &MVPoly) {
        self.report.cases += 1;
        if !residual.is_zero() {
            self.fail(case, identity, short(residual));
        }
    }

    fn zero_result(&mut self, case: &str, identity: &str, residual: Result<MVPoly>) {
        match residual {
            Ok(r) => self.zero(case, identity, &r),
            Err(e) => {
                self.report.cases += 1;
                self.fail(case, identity, format!("error: {e}"));
            }
        }
    }

    fn check(&mut self, case: &str, identity: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.report.cases += 1;
        if !ok {
            self.fail(case, identity, detail());
        }
    }

    fn error(&mut self, case: &str, identity: &str, e: Error) {
        self.report.cases += 1;
        self.fail(case, identity, format!("error: {e}"));
    }

    fn finish(mut self) -> SuiteReport {
        self.report.wall_time = self.start.elapsed();
        self.report
    }
}

/// Runs the selected suites in order.
pub fn run(suites: &[Suite], config: &SuiteConfig) -> Vec<SuiteReport> {
    suites.iter().map(|&s| run_suite(s, config)).collect()
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> SuiteReport {
    let mut rec = Recorder::new(suite);
    for system in &config.systems {
        let ctx = OperatorContext::new(system.clone());
        match suite {
            Suite::Operators => operators(&mut rec, &ctx, config),
            Suite::Monogenics => monogenics(&mut rec, &ctx, config),
            Suite::GegenbauerBall => gegenbauer_suite(&mut rec, &ctx, config, Family::Ball),
            Suite::GegenbauerEuclid => gegenbauer_suite(&mut rec, &ctx, config, Family::Euclid),
            Suite::Orthogonality => orthogonality(&mut rec, &ctx, config),
        }
    }
    rec.finish()
}

fn operators(rec: &mut Recorder, ctx: &OperatorContext, config: &SuiteConfig) {
    let m = ctx.dim();
    let label = ctx.system().label().to_string();
    let mu = ctx.mu().clone();
    let x = MVPoly::vector_var(m);
    let r2 = MVPoly::radius_sq(m);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let ids = Identities::with_constants(ctx, config.constants);

    rec.zero(&label, "D_k[x] = -mu", &(&ctx.d(&x) + &MVPoly::scalar_constant(m, mu.clone())));
    for d in 0..=config.max_degree {
        let mut inputs: Vec<MVPoly> = Monomial::all_of_degree(m, d)
            .into_iter()
            .map(|mono| MVPoly::term(mono, CliffordElement::one(m)))
            .collect();
        inputs.push(random_homogeneous(&mut rng, m, d, true));
        for f in &inputs {
            let case = format!("{label} f={}", short(f));
            let (e, fo, h) = (ctx.sl2_e(f), ctx.sl2_f(f), ctx.sl2_h(f));
            rec.zero(&case, "[H,E] = 2E", &(&(&ctx.sl2_h(&e) - &ctx.sl2_e(&h)) - &e.scale(&q(2))));
            rec.zero(&case, "[H,F] = -2F", &(&(&ctx.sl2_h(&fo) - &ctx.sl2_f(&h)) + &fo.scale(&q(2))));
            rec.zero(&case, "[E,F] = H", &(&(&ctx.sl2_e(&fo) - &ctx.sl2_f(&e)) - &h));
            let anti = &(&ctx.d(&(&x * f)) + &(&x * &ctx.d(f))) + &(&ctx.euler(f).scale(&q(2)) + &f.scale(&mu));
            rec.zero(&case, "{D_k, x} = -(2E + mu)", &anti);
            for i in 0..m {
                for j in (i + 1)..m {
                    let c = &ctx.dunkl_t(i, &ctx.dunkl_t(j, f)) - &ctx.dunkl_t(j, &ctx.dunkl_t(i, f));
                    rec.zero(&case, "T_i T_j = T_j T_i", &c);
                }
            }
            rec.zero(&case, "Gamma_k = -x D_k - E", &(&ctx.gamma(f) - &ctx.gamma_via_dirac(f)));
            rec.zero(&case, "D_k^2 = -Delta_k", &(&ctx.d(&ctx.d(f)) + &ctx.laplacian(f)));
            for radial in [r2.clone(), r2.pow(2)] {
                let comm = &ctx.gamma(&(&radial * f)) - &(&radial * &ctx.gamma(f));
                rec.zero(&case, "[Gamma_k, f(r)] = 0", &comm);
            }
        }
        if d + 1 > config.max_degree {
            continue;
        }
        for mk in monogenic_basis(ctx, d).basis {
            let case = format!("{label} M_{d}={}", short(&mk));
            let c = &ctx.gamma(&mk) + &mk.scale(&q(i64::from(d)));
            rec.zero(&case, "Gamma_k M_k = -k M_k", &c);
            let xm = &x * &mk;
            let ev = config.constants.gamma_eigenvalue(d + 1, 1, &mu);
            rec.zero(&case, "Gamma_k x M_k = (k + mu - 1) x M_k", &(&ctx.gamma(&xm) - &xm.scale(&ev)));
            for s in 1..=(config.max_degree - d) {
                rec.zero_result(&case, "D_k[x^s M_k] power rule", ids.dirac_power(s, &mk));
            }
            // radial form of the inversion: D_k annihilates x r^{-mu-2k} M_k
            match kelvin_invert(ctx, &mk) {
                Ok(outer) => {
                    let r = ctx.apply_radial(RadialOp::Dirac, &outer);
                    rec.check(&case, "D_k[x r^(-mu-2k) M_k] = 0", r.is_zero(), || short(&r));
                }
                Err(e) => rec.error(&case, "D_k[x r^(-mu-2k) M_k] = 0", e),
            }
        }
    }
}

fn monogenics(rec: &mut Recorder, ctx: &OperatorContext, config: &SuiteConfig) {
    let m = ctx.dim();
    let label = ctx.system().label().to_string();
    let x = MVPoly::vector_var(m);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut bases = Vec::new();
    for k in 0..=config.max_degree {
        let basis = monogenic_basis(ctx, k).basis;
        let case = format!("{label} k={k}");
        let expected = expected_monogenic_dim(m, k);
        rec.check(&case, "dim M(k) = 2^m (dim P_k - dim P_(k-1))", basis.len() == expected, || {
            format!("{} != {expected}", basis.len())
        });
        for b in &basis {
            rec.zero(&case, "D_k M = 0", &ctx.d(b));
        }
        let harmonics = harmonic_basis(ctx, k).basis;
        let expected = expected_harmonic_dim(m, k);
        rec.check(&case, "dim H(k) = dim P_k - dim P_(k-2)", harmonics.len() == expected, || {
            format!("{} != {expected}", harmonics.len())
        });
        for h in &harmonics {
            rec.zero(&case, "Delta_k H = 0", &ctx.laplacian(h));
        }
        bases.push(basis);
    }

    let fischer_max = config.max_degree.min(4);
    for k in 0..=fischer_max {
        let case = format!("{label} k={k}");
        // each piece x^j M(k - j) is fixed by its own projector and killed by the others
        for j in 0..=k {
            for mk in bases[(k - j) as usize].iter().take(2) {
                let piece = &x.pow(j) * mk;
                for i in 0..=k {
                    match fischer_project(ctx, i, &piece) {
                        Ok(p) => {
                            let expected = if i == j { piece.clone() } else { MVPoly::zero(m) };
                            rec.zero(&case, "P_i(x^j M) = delta_ij x^j M", &(&p - &expected));
                        }
                        Err(e) => rec.error(&case, "P_i(x^j M) = delta_ij x^j M", e),
                    }
                }
            }
        }
        let p = random_homogeneous(&mut rng, m, k, true);
        let parts: Vec<MVPoly> = (0..=k).filter_map(|i| fischer_project(ctx, i, &p).ok()).collect();
        let sum = parts.iter().fold(MVPoly::zero(m), |acc, q| &acc + q);
        rec.zero(&case, "sum_i P_i p = p", &(&sum - &p));
        for (i, pi) in parts.iter().enumerate() {
            for j in 0..=k {
                let twice = fischer_project(ctx, j, pi).unwrap_or_else(|_| MVPoly::zero(m));
                let expected = if i as u32 == j { pi.clone() } else { MVPoly::zero(m) };
                rec.zero(&case, "P_j P_i = delta_ij P_i", &(&twice - &expected));
            }
            if !pi.is_zero() && i as u32 <= k {
                // the i-th piece is x^i times a monogenic of degree k - i
                let ok = (0..=k).all(|j| j == i as u32 || fischer_project(ctx, j, pi).is_ok_and(|r| r.is_zero()));
                rec.check(&case, "P_i p lies in x^i M(k - i)", ok, String::new);
            }
        }
        let total: usize = (0..=k).map(|i| bases[(k - i) as usize].len()).sum();
        let expected = (1usize << m) * Monomial::count_of_degree(m, k);
        rec.check(&case, "sum_i dim x^i M(k-i) = dim P_k", total == expected, || format!("{total} != {expected}"));
    }

    for k in 0..=config.max_degree.min(3) {
        for mk in &bases[k as usize] {
            let case = format!("{label} k={k} M={}", short(mk));
            match kelvin_invert(ctx, mk) {
                Ok(outer) => {
                    let r = ctx.apply_radial(RadialOp::Dirac, &outer);
                    rec.check(&case, "D_k Q_k = 0", r.is_zero(), || short(&r));
                    let mu = ctx.mu().clone();
                    let expected = -(q(i64::from(k)) + &mu - q(1));
                    rec.check(&case, "Q_k homogeneous of degree -(k + mu - 1)", outer.homogeneity() == Some(expected), || {
                        format!("{:?}", outer.homogeneity().map(|h| show_q(&h)))
                    });
                    match kelvin_restore(ctx, &outer, k) {
                        Ok(back) => rec.zero(&case, "x r^(2k+mu-2) Q_k = -M_k", &(&back + mk)),
                        Err(e) => rec.error(&case, "x r^(2k+mu-2) Q_k = -M_k", e),
                    }
                }
                Err(e) => rec.error(&case, "D_k Q_k = 0", e),
            }
        }
    }
}

fn gegenbauer_suite(rec: &mut Recorder, ctx: &OperatorContext, config: &SuiteConfig, family: Family) {
    let label = ctx.system().label().to_string();
    let consts = &config.constants;
    let ids = Identities::with_constants(ctx, *consts);
    let mu = ctx.mu().clone();
    for &k in &config.k_values {
        let basis = monogenic_basis(ctx, k).basis;
        let Some(mk) = basis.first() else { continue };
        let other = basis.get(basis.len() / 2).filter(|b| *b != mk);
        for alpha in &config.alphas {
            if family.check_alpha(alpha).is_err() {
                continue;
            }
            let table = coefficient_recursions(family, config.t_max, alpha, &mu, k);
            for f in table.check_annihilation_forms(consts) {
                rec.fail(&format!("{label} k={k} alpha={}", show_q(alpha)), "coefficient annihilation form", f);
            }
            rec.report.cases += 1;
            for t in 0..=config.t_max {
                let case = format!("{label} {family} k={k} alpha={} t={t}", show_q(alpha));
                let op = match gegenbauer(ctx, family, t, alpha, mk) {
                    Ok(op) => op,
                    Err(e) => {
                        rec.error(&case, "operator construction", e);
                        continue;
                    }
                };
                let closed = closed_form_with(consts, family, t, alpha, k, &mu);
                rec.check(&case, "operator construction = closed form", op.coeffs == closed.coeffs, || {
                    format!("{op} vs {closed}")
                });
                rec.check(&case, "parity of coefficients", op.respects_parity(), || op.to_string());
                rec.check(&case, "coefficient recursions = operator construction", table.get(t, 0) == &op.coeffs[..], || {
                    format!("{:?}", table.get(t, 0).iter().map(show_q).collect::<Vec<_>>())
                });
                if let Some(o) = other {
                    let same = gegenbauer(ctx, family, t, alpha, o).map(|g| g.coeffs == op.coeffs);
                    rec.check(&case, "coefficients independent of M_k", same.unwrap_or(false), String::new);
                }
                rec.zero_result(&case, "annihilation", ids.annihilation(family, t, alpha, mk));
                rec.zero_result(&case, "differential equation", ids.differential_equation(family, t, alpha, mk));
                if t < config.t_max {
                    rec.zero_result(&case, "recurrence", ids.recurrence(family, t, alpha, mk));
                }
                if t >= 1 {
                    rec.zero_result(&case, "three-term recurrence", ids.three_term(family, t, alpha, mk));
                }
                if 2 * t < config.t_max {
                    match ids.corollary_shift(family, t, alpha, k) {
                        Ok(r) => rec.check(&case, "corollary shift in k", r.is_zero(), || r.to_string()),
                        Err(e) => rec.error(&case, "corollary shift in k", e),
                    }
                }
            }
        }
        for (alpha, t) in [(0i64, 2u32), (1, 3), (2, 1)] {
            let case = format!("{label} {family} k={k} alpha={alpha} t={t}");
            rec.zero_result(&case, "Rodrigues formula", verify_rodrigues(ctx, family, t, alpha, mk));
        }
        if family == Family::Ball {
            scalar_checks(rec, ctx, config, k);
        }
    }
}

fn scalar_checks(rec: &mut Recorder, ctx: &OperatorContext, config: &SuiteConfig, k: u32) {
    let label = ctx.system().label().to_string();
    let Some(h) = harmonic_basis(ctx, k).basis.into_iter().next() else { return };
    for alpha in &config.alphas {
        for t in 0..=(config.t_max / 2).min(3) {
            let case = format!("{label} scalar k={k} alpha={} t={t}", show_q(alpha));
            let built = scalar_gegenbauer(ctx, t, alpha, &h);
            let closed = scalar_closed_form(ctx, t, alpha, &h);
            match (built, closed) {
                (Ok(b), Ok(c)) => rec.zero(&case, "scalar family = closed form", &(&b - &c)),
                (Err(e), _) | (_, Err(e)) => rec.error(&case, "scalar family = closed form", e),
            }
        }
        let case = format!("{label} scalar k={k} alpha={}", show_q(alpha));
        let composed = crate::gegenbauer::apply_chain(ctx, Family::Ball, 2, alpha, &h);
        match (scalar_gegenbauer(ctx, 1, alpha, &h), composed) {
            (Ok(a), Ok(b)) => rec.zero(&case, "second-order operator = D_alpha D_(alpha+1)", &(&a - &b)),
            (Err(e), _) | (_, Err(e)) => rec.error(&case, "second-order operator = D_alpha D_(alpha+1)", e),
        }
    }
}

fn orthogonality(rec: &mut Recorder, ctx: &OperatorContext, config: &SuiteConfig) {
    let label = ctx.system().label().to_string();
    let consts = &config.constants;
    let mu = ctx.mu().clone();
    let firsts: Vec<MVPoly> = (0..=2).filter_map(|k| monogenic_basis(ctx, k).basis.into_iter().next()).collect();

    // whole-space bilinear form: Gram matrices and duality on the span of x^j M_k
    let alpha = &config.euclid_alpha;
    for (k, mk) in firsts.iter().enumerate() {
        let case = format!("{label} euclid k={k} alpha={}", show_q(alpha));
        match gram_with(consts, ctx, Family::Euclid, alpha, config.gram_t_max, std::slice::from_ref(mk)) {
            Ok(g) => {
                for (i, j) in g.nonzero_off_diagonal() {
                    rec.fail(&case, "bilinear Gram off-diagonal", format!("{} x {}: {}", g.labels[i], g.labels[j], g.entries[i][j]));
                }
                rec.report.cases += 1;
            }
            Err(e) => rec.error(&case, "bilinear Gram off-diagonal", e),
        }
        euclid_duality(rec, consts, &case, alpha, &mu, k as u32);
    }

    if ctx.system().product_weight_multiplicities().is_none() {
        return;
    }
    let alpha = &config.ball_alpha;
    let case = format!("{label} ball alpha={}", show_q(alpha));
    match gram_with(consts, ctx, Family::Ball, alpha, config.gram_t_max, &firsts) {
        Ok(g) => {
            for (i, j) in g.nonzero_off_diagonal() {
                rec.fail(&case, "ball Gram off-diagonal", format!("{} x {}: {}", g.labels[i], g.labels[j], g.entries[i][j]));
            }
            rec.check(&case, "ball Gram conjugate symmetry", g.is_conjugate_symmetric(), String::new);
        }
        Err(e) => rec.error(&case, "ball Gram off-diagonal", e),
    }
    ball_duality(rec, ctx, consts, &case, alpha, &firsts);

    match verify_monogenic_orthogonality_with(consts, ctx, config.orthogonality_k_max) {
        Ok(report) => {
            rec.report.cases += report.entries.len();
            for e in report.failures() {
                rec.fail(
                    &format!("{label} {:?} vs {:?}", e.left, e.right),
                    &format!("monogenic orthogonality ({})", e.kind),
                    e.value.to_string(),
                );
            }
        }
        Err(e) => rec.error(&label, "monogenic orthogonality", e),
    }

    // diagonal entries against the closed-form normalization constants
    if let Some(m1) = firsts.get(1) {
        for t in [1u32, 2] {
            let case = format!("{label} normalization k=1 t={t} alpha={}", show_q(alpha));
            match check_normalization(ctx, t, alpha, m1) {
                Ok(c) => {
                    rec.check(&case, "normalization constant magnitude", c.verdict != Verdict::Mismatch, || {
                        format!("computed {} predicted {}", show_q(&c.computed), show_q(&c.predicted))
                    });
                    if c.verdict == Verdict::SignFlip {
                        rec.report.findings.push(format!(
                            "{case}: computed {} is the negative of the stated constant {}",
                            show_q(&c.computed),
                            show_q(&c.predicted)
                        ));
                    }
                }
                Err(e) => rec.error(&case, "normalization constant magnitude", e),
            }
        }
    }
}

fn euclid_duality(rec: &mut Recorder, consts: &Constants, case: &str, alpha: &Q, mu: &Q, k: u32) {
    let target = BaseTag::Bilinear { mu: mu.clone(), alpha: alpha + q(1), degree: k };
    for i in 0..=4usize {
        for j in 0..=4usize {
            let mut ei = vec![Q::zero(); i + 1];
            ei[i] = q(1);
            let mut ej = vec![Q::zero(); j + 1];
            ej[j] = q(1);
            let (pi, pj) = (UniPoly::new(ei), UniPoly::new(ej));
            let lhs = bilinear_profiles(consts, mu, k, alpha, &profile_d_alpha(consts, Family::Euclid, alpha, &pi, mu, k), &pj);
            let rhs = bilinear_profiles(consts, mu, k, &(alpha + q(1)), &pi, &profile_dirac(consts, &pj, mu, k));
            let ok = match (lhs, rhs) {
                (Ok(l), Ok(r)) => l.rebase_with(&target, consts).map(|l| l == r).unwrap_or(false),
                _ => false,
            };
            rec.check(case, "bilinear duality <D_alpha f, g> = <f, D_k g>", ok, || format!("i={i} j={j}"));
        }
    }
}

fn ball_duality(rec: &mut Recorder, ctx: &OperatorContext, consts: &Constants, case: &str, alpha: &Q, firsts: &[MVPoly]) {
    let Ok(integrator) = Integrator::with_constants(ctx.system(), *consts) else { return };
    let x = MVPoly::vector_var(ctx.dim());
    let mut inputs = Vec::new();
    for (k, mk) in firsts.iter().enumerate() {
        for j in 0..=(4 - k.min(4)) {
            inputs.push(&x.pow(j as u32) * mk);
        }
    }
    let target = integrator.ball_tag(&(alpha + q(1)));
    for f in &inputs {
        for g in &inputs {
            let lhs = crate::gegenbauer::d_alpha(ctx, Family::Ball, alpha, f)
                .and_then(|df| integrator.ball_inner(&df, g, alpha))
                .and_then(|v| v.rebase_with(&target, consts));
            let rhs = integrator.ball_inner(f, &ctx.d(g), &(alpha + q(1)));
            let ok = matches!((&lhs, &rhs), (Ok(l), Ok(r)) if l == r);
            rec.check(case, "ball duality <D_alpha f, g>_a = <f, D_k g>_(a+1)", ok, || {
                format!("f={} g={}", short(f), short(g))
            });
        }
    }
}
