//! Root systems with multiplicity functions.
//!
//! Roots are stored unnormalized with rational coordinates. Every Dunkl
//! operator term k_a a_i (f - f o r_a) / <a, x> is invariant under a -> c a,
//! so this gives the same operators as the <a, a> = 2 normalization while
//! keeping all arithmetic exact.

use std::fmt;

use num::{One, Signed, Zero};

use crate::clifford::DEFAULT_MAX_DIM;
use crate::error::{Error, Result};
use crate::poly::Matrix;
use crate::rational::{q, show_q, to_f64, Q};

/// Positive roots with one multiplicity each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    dim: usize,
    roots: Vec<Vec<Q>>,
    multiplicities: Vec<Q>,
    label: String,
}

/// gamma = sum of multiplicities and the Dunkl dimension mu = m + 2 gamma.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityReport {
    pub gamma: Q,
    pub mu: Q,
}

/// The preset families available from [`RootSystem::preset`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// Z_2^m: roots e_i, one independent multiplicity per axis.
    Z2,
    /// A_{m-1} in R^m: roots e_i - e_j, one multiplicity.
    A,
    /// B_m: short roots e_i and long roots e_i +- e_j, multiplicities `[short, long]`.
    B,
    /// D_m: roots e_i +- e_j, one multiplicity.
    D,
}

impl std::str::FromStr for Preset {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "z2" | "z2^m" | "z2m" => Ok(Preset::Z2),
            "a" => Ok(Preset::A),
            "b" => Ok(Preset::B),
            "d" => Ok(Preset::D),
            _ => Err(Error::InvalidRootSystem(format!("unknown preset {s:?}"))),
        }
    }
}

/// One factor |<x, a>|^{exponent} of the weight w_k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightFactor {
    pub root: Vec<Q>,
    pub exponent: Q,
}

/// w_k(x) = prod_a |<x, a>|^{2 k_a}, kept in factored form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightFunction {
    pub factors: Vec<WeightFactor>,
}

impl WeightFunction {
    /// Degree of homogeneity, 2 gamma.
    pub fn degree(&self) -> Q {
        self.factors.iter().map(|f| f.exponent.clone()).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn evaluate_f64(&self, point: &[f64]) -> f64 {
        self.factors
            .iter()
            .map(|f| {
                let dot: f64 = f.root.iter().zip(point).map(|(a, x)| to_f64(a) * x).sum();
                dot.abs().powf(to_f64(&f.exponent))
            })
            .product()
    }
}

impl fmt::Display for WeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|wf| {
                let form = linear_form_string(&wf.root);
                format!("|{form}|^{}", show_q(&wf.exponent))
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn linear_form_string(root: &[Q]) -> String {
    let mut s = String::new();
    for (i, a) in root.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let sign = if a.is_negative() { "-" } else if s.is_empty() { "" } else { "+" };
        let mag = a.abs();
        let coeff = if mag.is_one() { String::new() } else { show_q(&mag) };
        s.push_str(&format!("{sign}{coeff}x{}", i + 1));
    }
    s
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// True when `a` and `b` are nonzero rational multiples of each other.
fn parallel(a: &[Q], b: &[Q]) -> bool {
    // every 2x2 minor vanishes
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            if &a[i] * &b[j] != &a[j] * &b[i] {
                return false;
            }
        }
    }
    a.iter().zip(b).all(|(x, y)| x.is_zero() == y.is_zero())
}

/// r_a = I - 2 a a^T / |a|^2.
pub fn reflection_matrix(alpha: &[Q]) -> Result<Matrix> {
    let norm2 = dot(alpha, alpha);
    if norm2.is_zero() {
        return Err(Error::InvalidRootSystem("zero root".into()));
    }
    let n = alpha.len();
    Ok((0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let delta = if i == j { Q::one() } else { Q::zero() };
                    delta - q(2) * &alpha[i] * &alpha[j] / &norm2
                })
                .collect()
        })
        .collect())
}

pub fn apply_matrix(a: &Matrix, v: &[Q]) -> Vec<Q> {
    a.iter().map(|row| dot(row, v)).collect()
}

impl RootSystem {
    /// Validates and builds a root system with the default dimension cap.
    pub fn new(dim: usize, roots: Vec<Vec<Q>>, multiplicities: Vec<Q>) -> Result<Self> {
        Self::with_max_dim(dim, roots, multiplicities, DEFAULT_MAX_DIM)
    }

    pub fn with_max_dim(
        dim: usize,
        roots: Vec<Vec<Q>>,
        multiplicities: Vec<Q>,
        max_dim: usize,
    ) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidRootSystem(msg));
        if dim == 0 {
            return invalid("dimension must be positive".into());
        }
        if dim > max_dim {
            return Err(Error::DimensionTooLarge { dim, cap: max_dim });
        }
        if roots.len() != multiplicities.len() {
            return invalid(format!(
                "{} roots but {} multiplicities",
                roots.len(),
                multiplicities.len()
            ));
        }
        for (i, r) in roots.iter().enumerate() {
            if r.len() != dim {
                return invalid(format!("root {i} has {} coordinates, expected {dim}", r.len()));
            }
            if r.iter().all(Zero::is_zero) {
                return invalid(format!("root {i} is zero"));
            }
        }
        for (i, k) in multiplicities.iter().enumerate() {
            if k.is_negative() {
                return invalid(format!("negative multiplicity {} on root {i}", show_q(k)));
            }
        }
        for i in 0..roots.len() {
            for j in (i + 1)..roots.len() {
                if parallel(&roots[i], &roots[j]) {
                    return invalid(format!("roots {i} and {j} are proportional (system not reduced)"));
                }
            }
        }
        // closure under the generated reflections, and G-invariance of k
        for (b, beta) in roots.iter().enumerate() {
            let refl = reflection_matrix(beta)?;
            for (a, alpha) in roots.iter().enumerate() {
                let image = apply_matrix(&refl, alpha);
                let Some(j) = roots.iter().position(|r| parallel(r, &image)) else {
                    return invalid(format!("reflection in root {b} maps root {a} outside the system"));
                };
                if multiplicities[j] != multiplicities[a] {
                    return invalid(format!(
                        "multiplicity is not constant on the orbit of root {a} (root {j} differs)"
                    ));
                }
            }
        }
        let system = RootSystem {
            dim,
            roots,
            multiplicities,
            label: "custom".into(),
        };
        let report = system.report();
        if report.mu <= Q::one() {
            return invalid(format!("Dunkl dimension mu = {} must exceed 1", show_q(&report.mu)));
        }
        Ok(system)
    }

    /// Builds one of the preset families.
    pub fn preset(kind: Preset, dim: usize, multiplicities: &[Q]) -> Result<Self> {
        let unit = |i: usize| -> Vec<Q> { (0..dim).map(|j| if i == j { q(1) } else { q(0) }).collect() };
        let combo = |i: usize, j: usize, s: i64| -> Vec<Q> {
            (0..dim)
                .map(|l| if l == i { q(1) } else if l == j { q(s) } else { q(0) })
                .collect()
        };
        let want = |n: usize| -> Result<()> {
            if multiplicities.len() != n {
                return Err(Error::InvalidRootSystem(format!(
                    "preset {kind:?} takes {n} multiplicities, got {}",
                    multiplicities.len()
                )));
            }
            Ok(())
        };
        let (roots, ks, label) = match kind {
            Preset::Z2 => {
                want(dim)?;
                ((0..dim).map(unit).collect(), multiplicities.to_vec(), format!("Z2^{dim}"))
            }
            Preset::A => {
                want(1)?;
                if dim < 2 {
                    return Err(Error::InvalidRootSystem("A_{m-1} needs m >= 2".into()));
                }
                let roots: Vec<_> = (0..dim)
                    .flat_map(|i| ((i + 1)..dim).map(move |j| (i, j)))
                    .map(|(i, j)| combo(i, j, -1))
                    .collect();
                let n = roots.len();
                (roots, vec![multiplicities[0].clone(); n], format!("A{}", dim - 1))
            }
            Preset::B => {
                want(2)?;
                if dim < 2 {
                    return Err(Error::InvalidRootSystem("B_m needs m >= 2".into()));
                }
                let mut roots: Vec<Vec<Q>> = (0..dim).map(unit).collect();
                let mut ks = vec![multiplicities[0].clone(); dim];
                for i in 0..dim {
                    for j in (i + 1)..dim {
                        roots.push(combo(i, j, -1));
                        roots.push(combo(i, j, 1));
                        ks.push(multiplicities[1].clone());
                        ks.push(multiplicities[1].clone());
                    }
                }
                (roots, ks, format!("B{dim}"))
            }
            Preset::D => {
                want(1)?;
                if dim < 2 {
                    return Err(Error::InvalidRootSystem("D_m needs m >= 2".into()));
                }
                let mut roots = Vec::new();
                for i in 0..dim {
                    for j in (i + 1)..dim {
                        roots.push(combo(i, j, -1));
                        roots.push(combo(i, j, 1));
                    }
                }
                let n = roots.len();
                (roots, vec![multiplicities[0].clone(); n], format!("D{dim}"))
            }
        };
        let mut system = Self::new(dim, roots, ks)?;
        system.label = label;
        Ok(system)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn roots(&self) -> &[Vec<Q>] {
        &self.roots
    }

    pub fn multiplicities(&self) -> &[Q] {
        &self.multiplicities
    }

    pub fn gamma(&self) -> Q {
        self.multiplicities.iter().cloned().sum()
    }

    /// Dunkl dimension mu = m + 2 gamma.
    pub fn mu(&self) -> Q {
        q(self.dim as i64) + q(2) * self.gamma()
    }

    pub fn report(&self) -> MultiplicityReport {
        MultiplicityReport {
            gamma: self.gamma(),
            mu: self.mu(),
        }
    }

    pub fn reflection_matrices(&self) -> Vec<Matrix> {
        self.roots
            .iter()
            .map(|r| reflection_matrix(r).expect("validated roots are nonzero"))
            .collect()
    }

    pub fn weight_function(&self) -> WeightFunction {
        WeightFunction {
            factors: self
                .roots
                .iter()
                .zip(&self.multiplicities)
                .filter(|(_, k)| !k.is_zero())
                .map(|(r, k)| WeightFactor {
                    root: r.clone(),
                    exponent: q(2) * k,
                })
                .collect(),
        }
    }

    /// Per-axis multiplicities when every root lies on a coordinate axis
    /// (the product weight prod_i |x_i|^{2 k_i}); `None` otherwise.
    pub fn product_weight_multiplicities(&self) -> Option<Vec<Q>> {
        let mut ks = vec![Q::zero(); self.dim];
        for (r, k) in self.roots.iter().zip(&self.multiplicities) {
            let nz: Vec<usize> = (0..self.dim).filter(|&i| !r[i].is_zero()).collect();
            if nz.len() != 1 {
                if k.is_zero() {
                    continue;
                }
                return None;
            }
            ks[nz[0]] = k.clone();
        }
        Some(ks)
    }

    /// Same system with every root multiplied by the matching nonzero scale.
    pub fn rescaled(&self, scales: &[Q]) -> Result<Self> {
        let roots = self
            .roots
            .iter()
            .zip(scales)
            .map(|(r, c)| r.iter().map(|v| v * c).collect())
            .collect();
        Ok(Self::new(self.dim, roots, self.multiplicities.clone())?.with_label(self.label.clone()))
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ks: Vec<String> = self.multiplicities.iter().map(show_q).collect();
        write!(f, "{} (m={}, k=[{}])", self.label, self.dim, ks.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;

    #[test]
    fn z2_squared_counts() {
        let r = RootSystem::preset(Preset::Z2, 2, &[qf(1, 2), qf(1, 3)]).unwrap();
        assert_eq!(r.roots(), &[vec![q(1), q(0)], vec![q(0), q(1)]]);
        assert_eq!(r.gamma(), qf(5, 6));
        assert_eq!(r.mu(), q(2) + q(2) * qf(5, 6));
    }

    #[test]
    fn classical_limit() {
        for (kind, ks) in [
            (Preset::Z2, vec![q(0), q(0), q(0)]),
            (Preset::A, vec![q(0)]),
            (Preset::B, vec![q(0), q(0)]),
            (Preset::D, vec![q(0)]),
        ] {
            let r = RootSystem::preset(kind, 3, &ks).unwrap();
            assert_eq!(r.report(), MultiplicityReport { gamma: q(0), mu: q(3) });
        }
    }

    #[test]
    fn a2_in_three_dimensions() {
        let k = qf(1, 2);
        let r = RootSystem::preset(Preset::A, 3, &[k.clone()]).unwrap();
        assert_eq!(
            r.roots(),
            &[
                vec![q(1), q(-1), q(0)],
                vec![q(1), q(0), q(-1)],
                vec![q(0), q(1), q(-1)]
            ]
        );
        assert_eq!(r.gamma(), q(3) * &k);
        assert_eq!(r.mu(), q(3) + q(6) * &k);
    }

    #[test]
    fn reflection_examples() {
        let r = reflection_matrix(&[q(1), q(0)]).unwrap();
        assert_eq!(r, vec![vec![q(-1), q(0)], vec![q(0), q(1)]]);
        let s = reflection_matrix(&[q(1), q(-1)]).unwrap();
        assert_eq!(s, vec![vec![q(0), q(1)], vec![q(1), q(0)]]);
        assert!(reflection_matrix(&[q(0), q(0)]).is_err());
    }

    #[test]
    fn reflection_is_involutive_and_scale_free() {
        let alpha = [qf(2, 3), q(-1), q(5)];
        let r = reflection_matrix(&alpha).unwrap();
        let v = [q(1), qf(1, 7), q(-2)];
        assert_eq!(apply_matrix(&r, &apply_matrix(&r, &v)), v.to_vec());
        let scaled: Vec<Q> = alpha.iter().map(|a| a * qf(-7, 3)).collect();
        assert_eq!(reflection_matrix(&scaled).unwrap(), r);
    }

    #[test]
    fn weight_function_degrees() {
        let r = RootSystem::preset(Preset::Z2, 2, &[qf(1, 2), qf(1, 3)]).unwrap();
        let w = r.weight_function();
        assert_eq!(w.to_string(), "|x1|^1 |x2|^2/3");
        assert_eq!(w.degree(), q(2) * r.gamma());
        let zero = RootSystem::preset(Preset::Z2, 2, &[q(0), q(0)]).unwrap();
        assert!(zero.weight_function().is_constant());
        let b2 = RootSystem::preset(Preset::B, 2, &[q(1), q(1)]).unwrap();
        assert_eq!(b2.gamma(), q(4));
        assert_eq!(b2.weight_function().degree(), q(8));
    }

    #[test]
    fn validation_errors() {
        // negative multiplicity
        assert!(RootSystem::preset(Preset::Z2, 2, &[q(-1), q(0)]).is_err());
        // orbit-inconsistent: B2 long roots with different k
        let roots = vec![vec![q(1), q(0)], vec![q(0), q(1)], vec![q(1), q(1)], vec![q(1), q(-1)]];
        let err = RootSystem::new(2, roots.clone(), vec![q(1), q(2), q(1), q(1)]).unwrap_err();
        assert!(err.to_string().contains("orbit"), "{err}");
        // not closed: e1 and e1 + e2 alone
        assert!(RootSystem::new(2, vec![vec![q(1), q(0)], vec![q(1), q(1)]], vec![q(1), q(1)]).is_err());
        // not reduced
        assert!(RootSystem::new(1, vec![vec![q(1)], vec![q(2)]], vec![q(1), q(1)]).is_err());
        // mu must exceed 1
        assert!(RootSystem::preset(Preset::Z2, 1, &[q(0)]).is_err());
        assert!(RootSystem::preset(Preset::Z2, 9, &vec![q(0); 9]).is_err());
    }

    #[test]
    fn reflections_permute_preset_roots() {
        for (kind, ks) in [
            (Preset::A, vec![q(1)]),
            (Preset::B, vec![q(1), q(2)]),
            (Preset::D, vec![q(1)]),
        ] {
            let r = RootSystem::preset(kind, 3, &ks).unwrap();
            for m in r.reflection_matrices() {
                for a in r.roots() {
                    let img = apply_matrix(&m, a);
                    let neg: Vec<Q> = img.iter().map(|v| -v).collect();
                    assert!(r.roots().iter().any(|b| *b == img || *b == neg));
                }
            }
        }
    }

    #[test]
    fn product_weight_detection() {
        let z = RootSystem::preset(Preset::Z2, 2, &[qf(1, 2), q(0)]).unwrap();
        assert_eq!(z.product_weight_multiplicities(), Some(vec![qf(1, 2), q(0)]));
        let a = RootSystem::preset(Preset::A, 3, &[q(1)]).unwrap();
        assert_eq!(a.product_weight_multiplicities(), None);
        let scaled = z.rescaled(&[q(3), qf(1, 2)]).unwrap();
        assert_eq!(scaled.product_weight_multiplicities(), Some(vec![qf(1, 2), q(0)]));
    }
}
