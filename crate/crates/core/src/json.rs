//! JSON wire formats.
//!
//! Field elements travel as digit vectors (base-p digits, highest power
//! first, length h); polynomials as coefficient lists, constant term
//! first. Moduli are given leading coefficient first, matching the text
//! serialization.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::code::{LinearCode, MdsStrategy};
use crate::construct::{CosetPointSet, TwistPlan};
use crate::field::{FieldSpec, Fq};
use crate::grs::{GrsSpec, Witness};
use crate::linalg::Matrix;
use crate::poly::Poly;
use crate::{Error, Result};

pub type ElemJson = Vec<u64>;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FieldJson {
    pub p: u64,
    pub h: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u64>>,
}

impl FieldJson {
    pub fn of(spec: &FieldSpec) -> FieldJson {
        FieldJson {
            p: spec.p(),
            h: spec.h(),
            modulus: Some(spec.modulus_leading_first()),
        }
    }

    pub fn to_spec(&self) -> Result<Arc<FieldSpec>> {
        let spec = match &self.modulus {
            Some(m) => FieldSpec::with_modulus(self.p, self.h, m)?,
            None => FieldSpec::new(self.p, self.h)?,
        };
        Ok(Arc::new(spec))
    }
}

pub fn element_to_json(spec: &FieldSpec, x: Fq) -> ElemJson {
    spec.digits(x)
}

pub fn element_from_json(spec: &FieldSpec, digits: &[u64]) -> Result<Fq> {
    spec.from_digits(digits)
}

fn elements_to_json(spec: &FieldSpec, xs: &[Fq]) -> Vec<ElemJson> {
    xs.iter().map(|&x| element_to_json(spec, x)).collect()
}

fn elements_from_json(spec: &FieldSpec, xs: &[ElemJson]) -> Result<Vec<Fq>> {
    xs.iter().map(|d| element_from_json(spec, d)).collect()
}

/// Full GRS spec: field plus locators, multipliers, dimension, flag.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GrsSpecJson {
    pub field: FieldJson,
    pub a: Vec<ElemJson>,
    pub v: Vec<ElemJson>,
    pub k: usize,
    #[serde(default)]
    pub extended: bool,
}

impl GrsSpecJson {
    pub fn of(spec: &GrsSpec) -> GrsSpecJson {
        let f = spec.field();
        GrsSpecJson {
            field: FieldJson::of(f),
            a: elements_to_json(f, spec.locators()),
            v: elements_to_json(f, spec.multipliers()),
            k: spec.k(),
            extended: spec.extended(),
        }
    }

    pub fn to_spec(&self) -> Result<GrsSpec> {
        let field = self.field.to_spec()?;
        let a = elements_from_json(&field, &self.a)?;
        let v = elements_from_json(&field, &self.v)?;
        GrsSpec::new(field, a, v, self.k, self.extended)
    }
}

/// A seed given without its own field block (the enclosing request's
/// field applies).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SeedJson {
    pub a: Vec<ElemJson>,
    pub v: Vec<ElemJson>,
    pub k: usize,
    #[serde(default)]
    pub extended: bool,
}

impl SeedJson {
    pub fn to_spec(&self, field: &Arc<FieldSpec>) -> Result<GrsSpec> {
        let a = elements_from_json(field, &self.a)?;
        let v = elements_from_json(field, &self.v)?;
        GrsSpec::new(field.clone(), a, v, self.k, self.extended)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WitnessJson {
    /// Monic certificate polynomial, coefficients constant term first.
    pub h: Vec<ElemJson>,
    pub lambda: ElemJson,
    pub deg_h: usize,
    pub e: u32,
}

impl WitnessJson {
    pub fn of(spec: &FieldSpec, w: &Witness) -> WitnessJson {
        WitnessJson {
            h: elements_to_json(spec, w.h_poly.coeffs()),
            lambda: element_to_json(spec, w.lambda),
            deg_h: w.deg_h(),
            e: w.e,
        }
    }

    pub fn to_witness(&self, spec: &FieldSpec) -> Result<Witness> {
        Ok(Witness {
            h_poly: Poly::from_coeffs(elements_from_json(spec, &self.h)?),
            lambda: element_from_json(spec, &self.lambda)?,
            e: self.e,
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TwistJson {
    pub e_prime: u32,
    pub mu: i64,
    pub nu: i64,
    pub alpha: ElemJson,
    pub beta: ElemJson,
    pub s: usize,
}

impl TwistJson {
    pub fn of(spec: &FieldSpec, plan: &TwistPlan) -> TwistJson {
        TwistJson {
            e_prime: plan.e_prime,
            mu: plan.mu,
            nu: plan.nu,
            alpha: element_to_json(spec, plan.alpha),
            beta: element_to_json(spec, plan.beta),
            s: plan.s,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PointSetJson {
    pub m: u32,
    pub z: u32,
    pub w: u64,
    pub t: u32,
    pub h_basis: Vec<ElemJson>,
    pub eta: ElemJson,
    pub beta_labels: Vec<ElemJson>,
    pub points: Vec<ElemJson>,
    pub epsilon: ElemJson,
}

impl PointSetJson {
    pub fn of(ps: &CosetPointSet) -> PointSetJson {
        let f = &**ps.field_arc();
        PointSetJson {
            m: ps.m,
            z: ps.z,
            w: ps.w,
            t: ps.t,
            h_basis: elements_to_json(f, &ps.h_basis),
            eta: element_to_json(f, ps.eta),
            beta_labels: elements_to_json(f, &ps.beta_labels),
            points: elements_to_json(f, &ps.points),
            epsilon: element_to_json(f, ps.epsilon),
        }
    }
}

/// Hull + MDS report for one code at one Galois parameter.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CodeReportJson {
    pub n: usize,
    pub k: usize,
    pub e: u32,
    pub hull_dim: usize,
    pub mds: String,
    pub basis: Vec<Vec<ElemJson>>,
}

pub fn code_report(code: &LinearCode, e: u32, strategy: MdsStrategy) -> CodeReportJson {
    let f = code.spec().clone();
    let hull = code.hull(e);
    let verdict = code.is_mds(strategy);
    let basis = (0..hull.basis.rows())
        .map(|r| elements_to_json(&f, hull.basis.row(r)))
        .collect();
    CodeReportJson {
        n: code.n(),
        k: code.k(),
        e: hull.e,
        hull_dim: hull.dim,
        mds: verdict.as_str().to_string(),
        basis,
    }
}

/// Matrix as rows of digit vectors (used for report bases on request).
pub fn matrix_to_json(m: &Matrix) -> Vec<Vec<ElemJson>> {
    (0..m.rows())
        .map(|r| elements_to_json(m.spec(), m.row(r)))
        .collect()
}

pub fn matrix_from_json(spec: &Arc<FieldSpec>, rows: &[Vec<ElemJson>]) -> Result<Matrix> {
    let data: Vec<Vec<Fq>> = rows
        .iter()
        .map(|r| elements_from_json(spec, r))
        .collect::<Result<_>>()?;
    Matrix::from_rows(spec.clone(), &data)
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grs_spec_round_trip() {
        let field = FieldJson {
            p: 3,
            h: 2,
            modulus: None,
        }
        .to_spec()
        .unwrap();
        let a: Vec<Fq> = (0..4).map(|i| field.element(i).unwrap()).collect();
        let v: Vec<Fq> = (1..5).map(|i| field.element(i).unwrap()).collect();
        let spec = GrsSpec::new(field, a, v, 2, true).unwrap();
        let j = GrsSpecJson::of(&spec);
        let text = serde_json::to_string(&j).unwrap();
        let back: GrsSpecJson = serde_json::from_str(&text).unwrap();
        let spec2 = back.to_spec().unwrap();
        assert_eq!(spec.locators(), spec2.locators());
        assert_eq!(spec.multipliers(), spec2.multipliers());
        assert_eq!(spec.k(), spec2.k());
        assert_eq!(spec.extended(), spec2.extended());
    }

    #[test]
    fn bad_digits_rejected() {
        let field = FieldJson {
            p: 3,
            h: 2,
            modulus: None,
        }
        .to_spec()
        .unwrap();
        assert!(element_from_json(&field, &[3, 0]).is_err());
        assert!(element_from_json(&field, &[1]).is_err());
    }

    #[test]
    fn report_shape() {
        let field = FieldJson {
            p: 3,
            h: 1,
            modulus: None,
        }
        .to_spec()
        .unwrap();
        let rows = vec![vec![Fq::ONE, Fq::ONE, Fq::ONE]];
        let m = Matrix::from_rows(field, &rows).unwrap();
        let code = LinearCode::new(m).unwrap();
        let rep = code_report(&code, 0, MdsStrategy::Auto);
        assert_eq!(rep.hull_dim, 1);
        assert_eq!(rep.mds, "proved-mds");
        assert_eq!(rep.basis.len(), 1);
        let text = serde_json::to_string(&rep).unwrap();
        assert!(text.contains("\"hull_dim\":1"));
    }
}
