//! Randomized invariants across the algebra, polynomial, operator and
//! special-function layers.

use dunkl_clifford::clifford::{Blade, CliffordElement};
use dunkl_clifford::dunkl::OperatorContext;
use dunkl_clifford::gegenbauer::{closed_form, first_monogenic, gegenbauer, Family};
use dunkl_clifford::integration::{bilinear_form, Integrator};
use dunkl_clifford::jacobi::{jacobi_poly, UniPoly};
use dunkl_clifford::json::{poly_from_json, poly_to_json};
use dunkl_clifford::poly::{MVPoly, Monomial};
use dunkl_clifford::rational::{format_q, parse_q, q, qf, Q};
use dunkl_clifford::rootsys::{reflection_matrix, Preset, RootSystem};
use proptest::prelude::*;

fn small_q() -> impl Strategy<Value = Q> {
    (-6i64..=6, 1i64..=5).prop_map(|(n, d)| qf(n, d))
}

fn clifford(dim: usize) -> impl Strategy<Value = CliffordElement> {
    prop::collection::vec((0u32..(1 << dim), small_q()), 0..5)
        .prop_map(move |terms| CliffordElement::from_terms(dim, terms.into_iter().map(|(b, c)| (Blade(b), c))))
}

fn poly(dim: usize, max_deg: u32) -> impl Strategy<Value = MVPoly> {
    let term = (prop::collection::vec(0u32..=max_deg, dim), clifford(dim));
    prop::collection::vec(term, 0..5).prop_map(move |terms| {
        MVPoly::from_terms(
            dim,
            terms.into_iter().filter(|(e, _)| e.iter().sum::<u32>() <= max_deg).map(|(e, c)| (Monomial::new(e), c)),
        )
    })
}

fn homogeneous(dim: usize, degree: u32) -> impl Strategy<Value = MVPoly> {
    let monos = Monomial::all_of_degree(dim, degree);
    let n = monos.len();
    prop::collection::vec(clifford(dim), n).prop_map(move |cs| MVPoly::from_terms(dim, monos.clone().into_iter().zip(cs)))
}

fn positive_k() -> impl Strategy<Value = Q> {
    (0i64..=4, 1i64..=4).prop_map(|(n, d)| qf(n, d))
}

fn z2_context() -> impl Strategy<Value = OperatorContext> {
    (positive_k(), positive_k())
        .prop_map(|(a, b)| OperatorContext::new(RootSystem::preset(Preset::Z2, 2, &[a, b]).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn clifford_product_is_associative(a in clifford(3), b in clifford(3), c in clifford(3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn clifford_product_distributes(a in clifford(3), b in clifford(3), c in clifford(3)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn conjugation_is_an_anti_involution(a in clifford(4), b in clifford(4)) {
        prop_assert_eq!((&a * &b).conjugate(), &b.conjugate() * &a.conjugate());
        prop_assert_eq!(a.conjugate().conjugate(), a);
    }

    #[test]
    fn vectors_square_to_minus_norm(v in prop::collection::vec(small_q(), 3)) {
        let x = CliffordElement::from_terms(3, v.iter().enumerate().map(|(i, c)| (Blade::generator(i + 1), c.clone())));
        let norm: Q = v.iter().map(|c| c * c).sum();
        prop_assert_eq!(&x * &x, CliffordElement::scalar(3, -norm));
    }

    #[test]
    fn polynomial_ring_laws(p in poly(2, 3), r in poly(2, 3), s in poly(2, 2)) {
        prop_assert_eq!(&(&p * &r) * &s, &p * &(&r * &s));
        prop_assert_eq!(&p * &(&r + &s), &(&p * &r) + &(&p * &s));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn division_by_linear_form_is_exact(p in poly(3, 3), alpha in prop::collection::vec(small_q(), 3)) {
        prop_assume!(alpha.iter().any(|a| *a != q(0)));
        let form = MVPoly::from_terms(3, alpha.iter().enumerate().map(|(i, a)| (Monomial::var(3, i), CliffordElement::scalar(3, a.clone()))));
        let product = &p * &form;
        prop_assert_eq!(product.exact_div_linear(&alpha).unwrap(), p);
    }

    #[test]
    fn reflection_substitution_is_an_involution(p in poly(3, 3), alpha in prop::collection::vec(-3i64..=3, 3)) {
        prop_assume!(alpha.iter().any(|a| *a != 0));
        let a: Vec<Q> = alpha.into_iter().map(q).collect();
        let s = reflection_matrix(&a).unwrap();
        prop_assert_eq!(p.substitute_linear(&s).substitute_linear(&s), p);
    }

    #[test]
    fn euler_scales_homogeneous_parts(p in homogeneous(3, 3)) {
        let e: MVPoly = (0..3).fold(MVPoly::zero(3), |acc, i| &acc + &(&MVPoly::var(3, i) * &p.partial(i)));
        prop_assert_eq!(&e, &p.scale(&q(3)));
        prop_assert_eq!(p.euler(), e);
    }

    #[test]
    fn rational_text_round_trip(v in small_q()) {
        prop_assert_eq!(parse_q(&format_q(&v)).unwrap(), v);
    }

    #[test]
    fn polynomial_json_round_trip(p in poly(3, 3)) {
        let s = poly_to_json(&p);
        prop_assert_eq!(poly_from_json(&s).unwrap(), p);
    }

    #[test]
    fn dunkl_operators_commute(ctx in z2_context(), f in poly(2, 4)) {
        let a = ctx.dunkl_t(0, &ctx.dunkl_t(1, &f));
        let b = ctx.dunkl_t(1, &ctx.dunkl_t(0, &f));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn dirac_squares_to_minus_laplacian(ctx in z2_context(), f in poly(2, 4)) {
        prop_assert!((&ctx.d(&ctx.d(&f)) + &ctx.laplacian(&f)).is_zero());
    }

    #[test]
    fn gamma_matches_dirac_form(ctx in z2_context(), f in poly(2, 4)) {
        prop_assert_eq!(ctx.gamma(&f), ctx.gamma_via_dirac(&f));
    }

    #[test]
    fn sl2_commutator(ctx in z2_context(), f in poly(2, 3)) {
        let ef = &ctx.sl2_e(&ctx.sl2_f(&f)) - &ctx.sl2_f(&ctx.sl2_e(&f));
        prop_assert_eq!(ef, ctx.sl2_h(&f));
    }

    #[test]
    fn anticommutator_with_x(ctx in z2_context(), f in poly(2, 3)) {
        let x = MVPoly::vector_var(2);
        let lhs = &ctx.d(&(&x * &f)) + &(&x * &ctx.d(&f));
        let rhs = -&(&ctx.euler(&f).scale(&q(2)) + &f.scale(ctx.mu()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dunkl_operators_commute_on_a2(k in positive_k(), f in poly(3, 3)) {
        let ctx = OperatorContext::new(RootSystem::preset(Preset::A, 3, &[k]).unwrap());
        let a = ctx.dunkl_t(0, &ctx.dunkl_t(2, &f));
        let b = ctx.dunkl_t(2, &ctx.dunkl_t(0, &f));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn jacobi_solves_its_ode(t in 0u32..=6, a in small_q(), b in small_q()) {
        // (1 - x^2) y'' + (b - a - (a + b + 2) x) y' + t (t + a + b + 1) y = 0
        let y = jacobi_poly(t, &a, &b);
        let x = UniPoly::x();
        let one_minus_x2 = &UniPoly::constant(q(1)) - &x.pow(2);
        let drift = UniPoly::linear(&b - &a, -(&a + &b + q(2)));
        let lambda = q(i64::from(t)) * (q(i64::from(t)) + &a + &b + q(1));
        let lhs = &(&(&one_minus_x2 * &y.derivative().derivative()) + &(&drift * &y.derivative())) + &y.scale(&lambda);
        prop_assert!(lhs.is_zero());
    }

    #[test]
    fn jacobi_contiguous_relation(t in 1u32..=6, a in small_q(), b in small_q()) {
        // (2t + a + b) P_t^{(a-1,b)} = (t + a + b) P_t^{(a,b)} - (t + b) P_{t-1}^{(a,b)}
        let n = q(i64::from(t));
        let lhs = jacobi_poly(t, &(&a - q(1)), &b).scale(&(&n * q(2) + &a + &b));
        let rhs = &jacobi_poly(t, &a, &b).scale(&(&n + &a + &b)) - &jacobi_poly(t - 1, &a, &b).scale(&(&n + &b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn odd_moments_vanish(a in 0u32..=6, b in 0u32..=6, k1 in positive_k(), k2 in positive_k()) {
        let system = RootSystem::preset(Preset::Z2, 2, &[k1, k2]).unwrap();
        let integrator = Integrator::new(&system).unwrap();
        let m = integrator.moment(&[a, b]);
        prop_assert_eq!(m == q(0), a % 2 == 1 || b % 2 == 1);
    }

    #[test]
    fn bilinear_form_is_symmetric(s in 0u32..=5, t in 0u32..=5, k in 0u32..=3) {
        let (mu, alpha) = (qf(11, 3), qf(7, 5));
        prop_assert_eq!(bilinear_form(&mu, k, &alpha, s, t).unwrap(), bilinear_form(&mu, k, &alpha, t, s).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn operator_construction_matches_closed_form(
        t in 0u32..=4,
        k in 0u32..=2,
        n in 1i64..=12,
        d in 1i64..=5,
        ball in any::<bool>(),
    ) {
        let family = if ball { Family::Ball } else { Family::Euclid };
        let alpha = qf(n, d);
        prop_assume!(family.check_alpha(&alpha).is_ok());
        let ctx = OperatorContext::new(RootSystem::preset(Preset::Z2, 2, &[qf(1, 2), qf(1, 3)]).unwrap());
        let mk = first_monogenic(&ctx, k).unwrap();
        let built = gegenbauer(&ctx, family, t, &alpha, &mk).unwrap();
        prop_assert_eq!(built.coeffs, closed_form(family, t, &alpha, k, ctx.mu()).coeffs);
    }
}
