//! Serializable report documents for the command-line surface. Integers that
//! can exceed 64 bits are carried as decimal strings so JSON consumers never
//! lose precision.

use serde::{Deserialize, Serialize};

use crate::analyzer::{CriticalOrbit, MonogenicityReport, OddObstruction, StabilityCert};
use crate::orenewton::OreReport;
use crate::pcf::{FactorBudget, FamilyScan, SquarefreeVerdict};
use crate::splitting::{SplitCheck, SplittingShape};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ReportDocument {
    pub schema_version: String,
    pub command: Vec<String>,
    pub provenance: Provenance,
    pub result: ReportResult,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Provenance {
    pub tool_version: String,
    pub seed: u64,
    pub trial_division_limit: u64,
    pub rho_iteration_budget: u64,
}

impl Provenance {
    pub fn new(seed: u64, budget: &FactorBudget) -> Self {
        Provenance {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            trial_division_limit: budget.trial_limit,
            rho_iteration_budget: budget.rho_iterations,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReportResult {
    Analyze(AnalyzeResult),
    Split2(Split2Result),
    Oracle(OracleResult),
    PcfScan(PcfScanResult),
    Factor2(Factor2Result),
    Identities(IdentitiesResult),
    Repro(ReproResult),
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct OrbitDoc {
    /// Dyadic rationals as strings, e.g. "-2" or "27/4".
    pub values: Vec<String>,
    pub preperiod: Option<usize>,
    pub period: Option<usize>,
    pub truncated: bool,
}

impl OrbitDoc {
    pub fn from_orbit(orbit: &CriticalOrbit) -> Self {
        OrbitDoc {
            values: orbit.values.iter().map(|v| v.to_string()).collect(),
            preperiod: orbit.preperiod,
            period: orbit.period,
            truncated: orbit.truncated,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ObstructionDoc {
    pub n: usize,
    pub odd_part: String,
    /// None when the factorization budget ran out.
    pub offending_primes: Option<Vec<String>>,
}

impl ObstructionDoc {
    pub fn from_obstruction(o: &OddObstruction) -> Self {
        ObstructionDoc {
            n: o.n,
            odd_part: o.odd_part.to_string(),
            offending_primes: o
                .offending_primes
                .as_ref()
                .map(|ps| ps.iter().map(|p| p.to_string()).collect()),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct AnalyzeResult {
    pub b: i64,
    pub c: i64,
    pub depth: u32,
    pub discriminant: String,
    pub two_class: String,
    pub stability: String,
    pub orbit: OrbitDoc,
    pub obstructions: Vec<ObstructionDoc>,
    pub verdict: String,
    pub verdict_is_unknown: bool,
}

impl AnalyzeResult {
    pub fn from_report(rep: &MonogenicityReport) -> Self {
        AnalyzeResult {
            b: rep.params.b,
            c: rep.params.c,
            depth: rep.requested_depth,
            discriminant: rep.params.disc().to_string(),
            two_class: rep.two_class.label().to_string(),
            stability: match rep.stability {
                StabilityCert::CertifiedStable => "CERTIFIED_STABLE".to_string(),
                StabilityCert::Unknown => "UNKNOWN".to_string(),
            },
            orbit: OrbitDoc::from_orbit(&rep.orbit),
            obstructions: rep
                .obstructions
                .iter()
                .map(ObstructionDoc::from_obstruction)
                .collect(),
            verdict: rep.verdict.label(),
            verdict_is_unknown: matches!(rep.verdict, crate::analyzer::Verdict::Unknown(_)),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ShapeEntryDoc {
    pub e: u64,
    pub f: usize,
    pub count: usize,
}

pub fn shape_doc(shape: &SplittingShape) -> Vec<ShapeEntryDoc> {
    shape
        .entries()
        .iter()
        .map(|x| ShapeEntryDoc {
            e: x.e,
            f: x.f,
            count: x.count,
        })
        .collect()
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct VerifyDoc {
    pub factors: Vec<String>,
    pub degree_multiset: Vec<usize>,
    /// Two-generator presentations (2, g(α_n)) of the primes above 2.
    pub ideals: Vec<String>,
    pub agrees: bool,
}

impl VerifyDoc {
    pub fn from_check(check: &SplitCheck) -> Self {
        let factors: Vec<String> = check
            .factors
            .iter()
            .map(|g| g.to_string_in("x"))
            .collect();
        let alpha = format!("a{}", check.n);
        let ideals = check
            .factors
            .iter()
            .map(|g| format!("(2, {})", g.to_string_in(&alpha)))
            .collect();
        VerifyDoc {
            factors,
            degree_multiset: check.actual_degrees.clone(),
            ideals,
            agrees: check.agrees,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Split2Result {
    pub b: i64,
    pub c: i64,
    pub n: u32,
    pub predicted: Vec<ShapeEntryDoc>,
    pub total_degree: u64,
    pub verified: Option<VerifyDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PolygonSideDoc {
    pub start: (usize, u64),
    pub end: (usize, u64),
    pub slope: String,
    pub residual: String,
    pub residual_separable: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PhiDoc {
    pub phi: String,
    pub multiplicity: u32,
    pub sides: Vec<PolygonSideDoc>,
    pub ind: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct OracleResult {
    pub b: i64,
    pub c: i64,
    pub n: u32,
    pub p: u64,
    pub closed_form_p_maximal: bool,
    pub dedekind_p_maximal: bool,
    pub ore_p_maximal: bool,
    pub agree: bool,
    pub index_lower_bound: u64,
    pub ore_exact: bool,
    pub per_phi: Vec<PhiDoc>,
    pub shape: Option<Vec<ShapeEntryDoc>>,
}

pub fn phi_docs(report: &OreReport) -> Vec<PhiDoc> {
    report
        .per_phi
        .iter()
        .map(|a| PhiDoc {
            phi: a.phi.to_intpoly().to_string_in("x"),
            multiplicity: a.multiplicity,
            sides: a
                .polygon
                .sides
                .iter()
                .zip(a.residuals.iter())
                .map(|(s, r)| PolygonSideDoc {
                    start: s.start,
                    end: s.end,
                    slope: format!("-{}/{}", s.h, s.e),
                    residual: r.poly.to_string_in("y"),
                    residual_separable: r.poly.is_separable(),
                })
                .collect(),
            ind: a.ind,
        })
        .collect()
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PcfScanRowDoc {
    pub a: i64,
    /// None is an honest UNKNOWN (budget exhausted).
    pub monogenic_all_n: Option<bool>,
    pub reasons: Vec<String>,
    pub crosscheck_ok: Option<bool>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PcfScanResult {
    pub family: String,
    pub a_min: i64,
    pub a_max: i64,
    pub rows: Vec<PcfScanRowDoc>,
    pub positives: usize,
    pub negatives: usize,
    pub unknowns: usize,
}

impl PcfScanResult {
    pub fn from_scan(scan: &FamilyScan, a_min: i64, a_max: i64) -> Self {
        PcfScanResult {
            family: scan.family.name().to_string(),
            a_min,
            a_max,
            rows: scan
                .rows
                .iter()
                .map(|r| PcfScanRowDoc {
                    a: r.a,
                    monogenic_all_n: r.verdict.monogenic_all_n,
                    reasons: r.verdict.reasons.clone(),
                    crosscheck_ok: r.crosscheck_ok,
                })
                .collect(),
            positives: scan.positives,
            negatives: scan.negatives,
            unknowns: scan.unknowns,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Factor2Result {
    pub b: i64,
    pub c: i64,
    pub n: u32,
    pub factors: Vec<FactorDoc>,
    pub degree_multiset: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct FactorDoc {
    pub poly: String,
    pub degree: usize,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct IdentityCheckDoc {
    pub name: String,
    pub holds: bool,
}

/// The odd parts of 4^{2^n}·fⁿ(−b/2) and 4^{2^{n−1}}·fⁿ⁻¹(−Disc/4) coincide,
/// while the 2-parts differ by exactly 2^n: recorded, not judged.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ScalingObservationDoc {
    pub b: i64,
    pub c: i64,
    pub n: u32,
    pub odd_parts_equal: bool,
    pub two_adic_valuation_gap: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct IdentitiesResult {
    pub suite: String,
    pub checks: Vec<IdentityCheckDoc>,
    pub scaling_observations: Vec<ScalingObservationDoc>,
    pub all_hold: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ReproRowDoc {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ReproResult {
    pub rows: Vec<ReproRowDoc>,
    pub all_pass: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SquarefreeDoc {
    pub n: String,
    pub squarefree: Option<bool>,
    pub prime_factors: Vec<(String, u32)>,
    pub unfactored_cofactor: Option<String>,
}

impl SquarefreeDoc {
    pub fn from_verdict(v: &SquarefreeVerdict) -> Self {
        SquarefreeDoc {
            n: v.n.to_string(),
            squarefree: v.squarefree,
            prime_factors: v
                .prime_factors
                .iter()
                .map(|(p, e)| (p.to_string(), *e))
                .collect(),
            unfactored_cofactor: v.unfactored_cofactor.as_ref().map(|c| c.to_string()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analyzer::report;
    use crate::intpoly::{QuadParams, DEFAULT_MAX_BITS};

    #[test]
    fn analyze_doc_roundtrip() {
        let rep = report(
            QuadParams::new(0, -2),
            5,
            &FactorBudget::default(),
            DEFAULT_MAX_BITS,
        )
        .unwrap();
        let doc = ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            command: vec!["analyze".into(), "0".into(), "-2".into()],
            provenance: Provenance::new(0, &FactorBudget::default()),
            result: ReportResult::Analyze(AnalyzeResult::from_report(&rep)),
        };
        let json = serde_json::to_string_pretty(&doc).unwrap();
        let back: ReportDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(doc, back);
        // determinism: serializing twice is byte-identical
        assert_eq!(json, serde_json::to_string_pretty(&back).unwrap());
    }

    #[test]
    fn orbit_doc_uses_dyadic_strings() {
        let rep = report(
            QuadParams::new(1, 1),
            3,
            &FactorBudget::default(),
            DEFAULT_MAX_BITS,
        )
        .unwrap();
        let doc = AnalyzeResult::from_report(&rep);
        assert_eq!(doc.orbit.values[0], "3/4"); // -Disc/4 = 3/4
    }
}
