//! Discrepancy report over the claim registry.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::registry::registry;
use crate::families::{Claim, ClaimOutcome, Source, Truth, Verdict};

#[derive(Clone, Debug, Serialize)]
pub struct DiscrepancyReport {
    pub source: Source,
    pub claims: Vec<ClaimOutcome>,
    pub confirmed: usize,
    pub partial: usize,
    pub refuted: usize,
    /// Wall time; kept out of rendered output so reports are byte-identical across runs.
    #[serde(skip)]
    pub seconds: f64,
}

impl DiscrepancyReport {
    pub fn outcome(&self, id: &str) -> Option<&ClaimOutcome> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One row per claim, witness on a continuation line.
    pub fn to_table(&self) -> String {
        let width = self.claims.iter().map(|c| c.id.len()).max().unwrap_or(2).max(5);
        let mut out = String::new();
        let _ = writeln!(out, "{:<width$}  {:<9}  {:>6}  {:>8}  statement", "claim", "verdict", "points", "mismatch");
        for c in &self.claims {
            let verdict = match c.holds_from {
                Some(h) => format!("{} (from {}={h})", c.verdict, c.params.first().map(String::as_str).unwrap_or("?")),
                None => c.verdict.to_string(),
            };
            let _ = writeln!(out, "{:<width$}  {:<9}  {:>6}  {:>8}  {}", c.id, verdict, c.grid_size, c.mismatches, c.statement);
            if let Some(w) = &c.witness {
                let params: Vec<String> = c.params.iter().zip(&w.params).map(|(n, v)| format!("{n}={v}")).collect();
                let at = match &w.instance {
                    Some(i) if params.is_empty() => i.clone(),
                    Some(i) => format!("{} [{i}]", params.join(" ")),
                    None => params.join(" "),
                };
                let _ = writeln!(out, "{:<width$}    witness {at}: claimed {} actual {}", "", w.claimed, w.actual);
            }
        }
        let _ = writeln!(
            out,
            "{} claims: {} confirmed, {} partial, {} refuted ({} ground truth)",
            self.claims.len(),
            self.confirmed,
            self.partial,
            self.refuted,
            match self.source {
                Source::Engine => "engine",
                Source::Oracle => "oracle",
            }
        );
        out
    }
}

/// Checks `claims` in order against one shared ground-truth cache.
pub fn run_claims(claims: &[Claim], truth: &Truth) -> Result<DiscrepancyReport> {
    let start = Instant::now();
    let outcomes = claims.iter().map(|c| c.check(truth)).collect::<Result<Vec<_>>>()?;
    let count = |v: Verdict| outcomes.iter().filter(|o| o.verdict == v).count();
    Ok(DiscrepancyReport {
        source: truth.source(),
        confirmed: count(Verdict::Confirmed),
        partial: count(Verdict::Partial),
        refuted: count(Verdict::Refuted),
        claims: outcomes,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Runs the registry, optionally limited to ids matching any of `filters` (substring match).
pub fn run_registry(truth: &Truth, filters: &[String]) -> Result<DiscrepancyReport> {
    let claims: Vec<Claim> =
        registry().into_iter().filter(|c| filters.is_empty() || filters.iter().any(|f| c.id.contains(f.as_str()))).collect();
    if claims.is_empty() {
        return Err(Error::Parameter(format!("no claim id matches {filters:?}")));
    }
    run_claims(&claims, truth)
}

/// Registry listing without evaluation.
#[derive(Clone, Debug, Serialize)]
pub struct ClaimListing {
    pub id: &'static str,
    pub reference: &'static str,
    pub statement: &'static str,
    pub params: Vec<&'static str>,
    pub grid_size: usize,
}

pub fn list_registry() -> Vec<ClaimListing> {
    registry()
        .iter()
        .map(|c| ClaimListing {
            id: c.id,
            reference: c.reference,
            statement: c.statement,
            params: c.params.to_vec(),
            grid_size: c.grid.len(),
        })
        .collect()
}

/// Expected verdicts, as a JSON object `{"claim-id": "CONFIRMED" | "PARTIAL" | "REFUTED"}`.
pub fn parse_expectations(text: &str) -> Result<BTreeMap<String, Verdict>> {
    let raw: BTreeMap<String, String> = serde_json::from_str(text)
        .map_err(|e| Error::Parse { location: format!("line {}", e.line()), message: e.to_string() })?;
    raw.into_iter()
        .map(|(id, v)| {
            let verdict = match v.to_ascii_uppercase().as_str() {
                "CONFIRMED" => Verdict::Confirmed,
                "PARTIAL" => Verdict::Partial,
                "REFUTED" => Verdict::Refuted,
                _ => return Err(Error::Parse { location: id, message: format!("unknown verdict {v:?}") }),
            };
            Ok((id, verdict))
        })
        .collect()
}

/// Differences between expected and observed verdicts. With `require_all`,
/// expected ids absent from the report count as differences too.
pub fn expectation_mismatches(
    report: &DiscrepancyReport,
    expected: &BTreeMap<String, Verdict>,
    require_all: bool,
) -> Vec<String> {
    expected
        .iter()
        .filter_map(|(id, want)| match report.outcome(id) {
            Some(o) if o.verdict == *want => None,
            Some(o) => Some(format!("{id}: expected {want}, got {}", o.verdict)),
            None if require_all => Some(format!("{id}: not in report")),
            None => None,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{ClaimValue, Point};

    #[test]
    fn table_and_json_render() {
        let claims = vec![
            Claim::new("ok", "r", "s", &["n"], vec![vec![1], vec![2]], |_, _| {
                Ok(Point::new(ClaimValue::int(1), ClaimValue::int(1)))
            }),
            Claim::new("bad", "r", "s", &["n"], vec![vec![1]], |_, _| Ok(Point::new(ClaimValue::int(1), ClaimValue::int(2)))),
        ];
        let report = run_claims(&claims, &Truth::new(Source::Engine)).unwrap();
        assert_eq!((report.confirmed, report.refuted), (1, 1));
        let table = report.to_table();
        assert!(table.contains("witness n=1: claimed 1 actual 2"));
        let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(json["claims"][1]["verdict"], "REFUTED");
    }

    #[test]
    fn expectations_roundtrip() {
        let e = parse_expectations(r#"{"a": "confirmed", "b": "REFUTED"}"#).unwrap();
        assert_eq!(e["a"], Verdict::Confirmed);
        assert!(parse_expectations(r#"{"a": "maybe"}"#).is_err());
        assert!(matches!(parse_expectations("{"), Err(Error::Parse { .. })));
    }
}
