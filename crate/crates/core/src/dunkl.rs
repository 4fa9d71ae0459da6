//! Dunkl operators T_i, the Dunkl Laplacian, the Dunkl Dirac operator, the
//! Euler and Gamma operators, and their action on radially scaled functions.

use num::{One, Zero};

use crate::clifford::CliffordElement;
use crate::poly::{Matrix, MVPoly};
use crate::radial::RadialScaledFunction;
use crate::rational::{q, Q};
use crate::rootsys::RootSystem;

/// Which side the Dirac operator acts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// D_k[f] = sum_j e_j T_j[f]
    Left,
    /// [f]D_k = sum_j T_j[f] e_j
    Right,
}

/// Operators that can act on a [`RadialScaledFunction`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadialOp {
    /// T_i, axis counted from 0.
    Dunkl(usize),
    /// Left Dunkl Dirac operator.
    Dirac,
    Euler,
}

/// Root system data with the reflection matrices precomputed.
#[derive(Debug, Clone)]
pub struct OperatorContext {
    system: RootSystem,
    reflections: Vec<Matrix>,
    mu: Q,
}

impl OperatorContext {
    pub fn new(system: RootSystem) -> Self {
        let reflections = system.reflection_matrices();
        let mu = system.mu();
        OperatorContext {
            system,
            reflections,
            mu,
        }
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn dim(&self) -> usize {
        self.system.dim()
    }

    pub fn mu(&self) -> &Q {
        &self.mu
    }

    /// (f - f o r_a) / <a, x> for every root with nonzero multiplicity, paired with k_a.
    fn difference_quotients(&self, f: &MVPoly) -> Vec<(usize, MVPoly)> {
        let roots = self.system.roots();
        let ks = self.system.multiplicities();
        (0..roots.len())
            .filter(|&a| !ks[a].is_zero())
            .map(|a| {
                let diff = f - &f.substitute_linear(&self.reflections[a]);
                let quot = diff
                    .exact_div_linear(&roots[a])
                    .expect("f - f o r_a vanishes on the reflecting hyperplane");
                (a, quot)
            })
            .collect()
    }

    /// All T_i[f], i = 0..m, sharing the difference quotients.
    pub fn dunkl_gradient(&self, f: &MVPoly) -> Vec<MVPoly> {
        let quotients = self.difference_quotients(f);
        let roots = self.system.roots();
        let ks = self.system.multiplicities();
        (0..self.dim())
            .map(|i| {
                let mut out = f.partial(i);
                for (a, quot) in &quotients {
                    let w = &ks[*a] * &roots[*a][i];
                    if !w.is_zero() {
                        out = &out + &quot.scale(&w);
                    }
                }
                out
            })
            .collect()
    }

    /// T_i f = d_i f + sum_a k_a a_i (f - f o r_a) / <a, x>, axis counted from 0.
    pub fn dunkl_t(&self, axis: usize, f: &MVPoly) -> MVPoly {
        assert!(axis < self.dim(), "axis {axis} out of range");
        let roots = self.system.roots();
        let ks = self.system.multiplicities();
        let mut out = f.partial(axis);
        for (a, quot) in self.difference_quotients(f) {
            let w = &ks[a] * &roots[a][axis];
            if !w.is_zero() {
                out = &out + &quot.scale(&w);
            }
        }
        out
    }

    /// Delta_k = sum_i T_i^2.
    pub fn laplacian(&self, f: &MVPoly) -> MVPoly {
        self.dunkl_gradient(f)
            .iter()
            .enumerate()
            .fold(MVPoly::zero(self.dim()), |acc, (i, ti)| {
                &acc + &self.dunkl_t(i, ti)
            })
    }

    /// Dunkl Dirac operator sum_j e_j T_j, from the left or the right.
    pub fn dirac(&self, f: &MVPoly, side: Side) -> MVPoly {
        let m = self.dim();
        self.dunkl_gradient(f)
            .iter()
            .enumerate()
            .fold(MVPoly::zero(m), |acc, (j, tj)| {
                let e = CliffordElement::generator(m, j + 1);
                let term = match side {
                    Side::Left => tj.left_mul(&e),
                    Side::Right => tj.right_mul(&e),
                };
                &acc + &term
            })
    }

    /// Left Dirac operator, the common case.
    pub fn d(&self, f: &MVPoly) -> MVPoly {
        self.dirac(f, Side::Left)
    }

    pub fn euler(&self, f: &MVPoly) -> MVPoly {
        f.euler()
    }

    /// Gamma_k = D_k x + mu + E.
    pub fn gamma(&self, f: &MVPoly) -> MVPoly {
        let xf = &MVPoly::vector_var(self.dim()) * f;
        let mut out = self.d(&xf);
        out = &out + &f.scale(&self.mu);
        &out + &f.euler()
    }

    /// Gamma_k through the rearranged form -x D_k - E.
    pub fn gamma_via_dirac(&self, f: &MVPoly) -> MVPoly {
        let x = MVPoly::vector_var(self.dim());
        let xd = &x * &self.d(f);
        &(-&xd) - &f.euler()
    }

    /// sl2 element E = |x|^2 / 2 (multiplication).
    pub fn sl2_e(&self, f: &MVPoly) -> MVPoly {
        (&MVPoly::radius_sq(self.dim()) * f).scale(&Q::new(1.into(), 2.into()))
    }

    /// sl2 element F = -Delta_k / 2.
    pub fn sl2_f(&self, f: &MVPoly) -> MVPoly {
        self.laplacian(f).scale(&Q::new((-1).into(), 2.into()))
    }

    /// sl2 element H = E + mu / 2 (Euler operator plus constant).
    pub fn sl2_h(&self, f: &MVPoly) -> MVPoly {
        &f.euler() + &f.scale(&(&self.mu / q(2)))
    }

    /// Exact action on sum_j r^{2 q_j} P_j, using that r^{2q} is G-invariant.
    pub fn apply_radial(&self, op: RadialOp, g: &RadialScaledFunction) -> RadialScaledFunction {
        let m = self.dim();
        let mut out = RadialScaledFunction::zero(m);
        for (e, p) in g.parts() {
            let two_e = q(2) * e;
            match op {
                RadialOp::Dunkl(i) => {
                    // T_i[r^{2q} P] = 2q x_i r^{2q-2} P + r^{2q} T_i[P]
                    if !e.is_zero() {
                        out.add_part(e - Q::one(), &(&MVPoly::var(m, i) * p).scale(&two_e));
                    }
                    out.add_part(e.clone(), &self.dunkl_t(i, p));
                }
                RadialOp::Dirac => {
                    if !e.is_zero() {
                        out.add_part(e - Q::one(), &(&MVPoly::vector_var(m) * p).scale(&two_e));
                    }
                    out.add_part(e.clone(), &self.d(p));
                }
                RadialOp::Euler => {
                    out.add_part(e.clone(), &(&p.scale(&two_e) + &p.euler()));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;
    use crate::rootsys::Preset;

    fn z2(ks: &[Q]) -> OperatorContext {
        OperatorContext::new(RootSystem::preset(Preset::Z2, ks.len(), ks).unwrap())
    }

    #[test]
    fn t_on_x_in_rank_one() {
        let k = qf(1, 3);
        let ctx = z2(&[k.clone()]);
        let x1 = MVPoly::var(1, 0);
        assert_eq!(ctx.dunkl_t(0, &x1), MVPoly::scalar_constant(1, q(1) + q(2) * k));
    }

    #[test]
    fn t_on_product() {
        let (k1, k2) = (qf(1, 2), qf(1, 3));
        let ctx = z2(&[k1.clone(), k2]);
        let p = &MVPoly::var(2, 0) * &MVPoly::var(2, 1);
        assert_eq!(ctx.dunkl_t(0, &p), MVPoly::var(2, 1).scale(&(q(1) + q(2) * k1)));
    }

    #[test]
    fn classical_limit_is_partial_derivative() {
        let ctx = OperatorContext::new(RootSystem::preset(Preset::A, 3, &[q(0)]).unwrap());
        let p = &(&MVPoly::var(3, 0).pow(3) * &MVPoly::var(3, 2)) + &MVPoly::vector_var(3);
        for i in 0..3 {
            assert_eq!(ctx.dunkl_t(i, &p), p.partial(i));
        }
    }

    #[test]
    fn laplacian_examples() {
        let (k1, k2) = (qf(1, 2), qf(1, 3));
        let ctx = z2(&[k1.clone(), k2]);
        let r2 = MVPoly::radius_sq(2);
        assert_eq!(ctx.laplacian(&r2), MVPoly::scalar_constant(2, q(2) * ctx.mu()));
        assert!(ctx.laplacian(&MVPoly::scalar_constant(2, q(7))).is_zero());
        let x1sq = MVPoly::var(2, 0).pow(2);
        assert_eq!(ctx.laplacian(&x1sq), MVPoly::scalar_constant(2, q(2) * (q(1) + q(2) * k1)));
    }

    #[test]
    fn dirac_on_vector_variable() {
        let ctx = OperatorContext::new(RootSystem::preset(Preset::B, 2, &[qf(1, 2), qf(2, 3)]).unwrap());
        let x = MVPoly::vector_var(2);
        assert_eq!(ctx.d(&x), MVPoly::scalar_constant(2, -ctx.mu().clone()));
        assert!(ctx.d(&MVPoly::one(2)).is_zero());
    }

    #[test]
    fn gamma_on_vector_variable() {
        let ctx = z2(&[qf(1, 2), qf(1, 3)]);
        let x = MVPoly::vector_var(2);
        assert_eq!(ctx.gamma(&x), x.scale(&(ctx.mu() - q(1))));
        assert_eq!(ctx.gamma_via_dirac(&x), ctx.gamma(&x));
    }

    #[test]
    fn euler_on_radial_part() {
        let ctx = z2(&[qf(1, 2), qf(1, 3)]);
        let p = &MVPoly::var(2, 0) * &MVPoly::var(2, 1);
        let g = RadialScaledFunction::new(qf(-7, 4), p.clone());
        let out = ctx.apply_radial(RadialOp::Euler, &g);
        assert_eq!(out, g.scale(&(q(2) * qf(-7, 4) + q(2))));
        // q = 0 reduces to the polynomial action
        let h = RadialScaledFunction::from_poly(p.clone());
        assert_eq!(
            ctx.apply_radial(RadialOp::Dirac, &h),
            RadialScaledFunction::from_poly(ctx.d(&p))
        );
    }
}
