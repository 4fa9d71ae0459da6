//! JSON interchange: polynomials, monogenic bases, Gegenbauer coefficients,
//! Gram matrices and root system config files.
//!
//! Every document carries `schema_version`. Rationals travel as strings
//! (`"p/q"` or `"p"`), blades as integer bitmasks, and terms are listed in
//! graded-lex monomial order with blades ascending, so output is
//! byte-for-byte deterministic.

use serde::{Deserialize, Serialize};

use crate::clifford::{Blade, CliffordElement};
use crate::error::{Error, Result};
use crate::gegenbauer::GegenbauerPoly;
use crate::integration::GramMatrix;
use crate::poly::{MVPoly, Monomial};
use crate::rational::{format_q, parse_q, Q};
use crate::rootsys::RootSystem;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub blade: u32,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub schema_version: u32,
    pub dim: usize,
    pub terms: Vec<TermJson>,
}

fn terms_of(p: &MVPoly) -> Vec<TermJson> {
    let mut out = Vec::new();
    for (mono, c) in p.terms() {
        for (blade, v) in c.terms() {
            out.push(TermJson {
                exp: mono.exponents().to_vec(),
                blade: blade.0,
                coeff: format_q(v),
            });
        }
    }
    out
}

impl From<&MVPoly> for PolyJson {
    fn from(p: &MVPoly) -> Self {
        PolyJson {
            schema_version: SCHEMA_VERSION,
            dim: p.dim(),
            terms: terms_of(p),
        }
    }
}

impl PolyJson {
    pub fn to_poly(&self) -> Result<MVPoly> {
        check_version(self.schema_version)?;
        let mut p = MVPoly::zero(self.dim);
        for t in &self.terms {
            if t.exp.len() != self.dim {
                return Err(Error::DimensionMismatch { left: self.dim, right: t.exp.len() });
            }
            if self.dim >= 32 || t.blade >> self.dim != 0 {
                return Err(Error::Parse(format!("blade {} out of range for dimension {}", t.blade, self.dim)));
            }
            let c = CliffordElement::from_blade(self.dim, Blade(t.blade), parse_q(&t.coeff)?);
            p.add_term(Monomial::new(t.exp.clone()), &c);
        }
        Ok(p)
    }
}

fn check_version(v: u32) -> Result<()> {
    if v != SCHEMA_VERSION {
        return Err(Error::Parse(format!("unsupported schema_version {v}")));
    }
    Ok(())
}

pub fn poly_to_json(p: &MVPoly) -> String {
    serde_json::to_string_pretty(&PolyJson::from(p)).expect("serializable")
}

pub fn poly_from_json(s: &str) -> Result<MVPoly> {
    let doc: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    doc.to_poly()
}

/// A basis of polynomials sharing one dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisJson {
    pub schema_version: u32,
    pub dim: usize,
    pub degree: u32,
    pub mu: String,
    pub count: usize,
    pub basis: Vec<Vec<TermJson>>,
}

pub fn basis_to_json(dim: usize, degree: u32, mu: &Q, basis: &[MVPoly]) -> String {
    let doc = BasisJson {
        schema_version: SCHEMA_VERSION,
        dim,
        degree,
        mu: format_q(mu),
        count: basis.len(),
        basis: basis.iter().map(terms_of).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

pub fn basis_from_json(s: &str) -> Result<Vec<MVPoly>> {
    let doc: BasisJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    check_version(doc.schema_version)?;
    doc.basis
        .into_iter()
        .map(|terms| PolyJson { schema_version: SCHEMA_VERSION, dim: doc.dim, terms }.to_poly())
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct GegenbauerJson {
    pub schema_version: u32,
    pub family: String,
    pub t: u32,
    pub alpha: String,
    pub k: u32,
    pub mu: String,
    /// a_j multiplying x^j M, for j = 0..=t.
    pub coeffs: Vec<String>,
    pub monogenic: Vec<TermJson>,
    pub polynomial: Vec<TermJson>,
}

pub fn gegenbauer_to_json(g: &GegenbauerPoly, monogenic: &MVPoly) -> String {
    let doc = GegenbauerJson {
        schema_version: SCHEMA_VERSION,
        family: g.family.name().to_string(),
        t: g.t,
        alpha: format_q(&g.alpha),
        k: g.k,
        mu: format_q(&g.mu),
        coeffs: g.coeffs.iter().map(format_q).collect(),
        monogenic: terms_of(monogenic),
        polynomial: terms_of(&g.expand(monogenic)),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

pub fn gegenbauer_to_csv(g: &GegenbauerPoly) -> String {
    let mut out = String::from("j,coeff\n");
    for (j, c) in g.coeffs.iter().enumerate() {
        out.push_str(&format!("{j},{}\n", format_q(c)));
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct GramCellJson {
    /// Clifford coefficient of the base constant; empty when the entry is zero.
    pub value: Vec<(u32, String)>,
    pub base: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GramJson {
    pub schema_version: u32,
    pub labels: Vec<String>,
    pub entries: Vec<Vec<GramCellJson>>,
}

pub fn gram_to_json(g: &GramMatrix) -> String {
    let entries = g
        .entries
        .iter()
        .map(|row| {
            row.iter()
                .map(|cell| GramCellJson {
                    value: cell.value.terms().map(|(b, v)| (b.0, format_q(v))).collect(),
                    base: cell.tag.as_ref().map(ToString::to_string),
                })
                .collect()
        })
        .collect();
    let doc = GramJson { schema_version: SCHEMA_VERSION, labels: g.labels.clone(), entries };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

/// Root coordinates may be written as JSON integers or rational strings.
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    fn to_q(&self) -> Result<Q> {
        match self {
            Scalar::Int(i) => Ok(Q::from_integer((*i).into())),
            Scalar::Text(s) => parse_q(s),
        }
    }
}

/// `{"m":2, "roots":[[1,0],[0,1]], "multiplicities":["1/2","1/3"]}`
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct RootsConfig {
    pub m: usize,
    pub roots: Vec<Vec<Scalar>>,
    pub multiplicities: Vec<Scalar>,
    #[serde(default)]
    pub label: Option<String>,
}

impl RootsConfig {
    pub fn build(&self) -> Result<RootSystem> {
        let roots = self
            .roots
            .iter()
            .map(|r| r.iter().map(Scalar::to_q).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let ks = self.multiplicities.iter().map(Scalar::to_q).collect::<Result<Vec<_>>>()?;
        let system = RootSystem::new(self.m, roots, ks)?;
        Ok(match &self.label {
            Some(l) => system.with_label(l.clone()),
            None => system,
        })
    }
}

pub fn roots_from_json(s: &str) -> Result<RootSystem> {
    let cfg: RootsConfig = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    cfg.build()
}
