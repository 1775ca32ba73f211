//! RunReport: the machine-readable result of `construct` and `verify`.

use galois_hulls::json::{CodeReportJson, GrsSpecJson, PointSetJson, TwistJson, WitnessJson};
use serde::Serialize;

#[derive(Serialize)]
pub struct Provenance {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<GrsSpecJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    pub twist: TwistJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pointset: Option<PointSetJson>,
}

#[derive(Serialize)]
pub struct RunReport {
    pub request: serde_json::Value,
    pub spec: GrsSpecJson,
    pub report: CodeReportJson,
    pub provenance: Provenance,
    pub requested_l: usize,
    pub oracle_agreement: bool,
    pub wall_time_ms: f64,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub spec: GrsSpecJson,
    pub e: u32,
    pub report: CodeReportJson,
    pub self_orthogonal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    pub wall_time_ms: f64,
}
