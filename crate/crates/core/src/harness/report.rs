use std::path::Path;
use std::str::FromStr;

use super::campaign::CampaignReport;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl ReportFormat {
    /// `.csv` selects CSV, anything else JSON.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("csv") => ReportFormat::Csv,
            _ => ReportFormat::Json,
        }
    }
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(Error::InvalidArgument(format!("unknown report format {other:?}"))),
        }
    }
}

/// Serializes a report. JSON carries the summary, histograms, checker
/// tallies and violations; CSV has one row per finite orbit.
pub fn emit_report(report: &CampaignReport, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).map_err(|e| Error::Io(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            // Header is written explicitly so an empty campaign still has one.
            w.write_record([
                "map_id",
                "family",
                "d",
                "point",
                "tail",
                "cycle",
                "orbit_size",
                "threshold",
                "ok",
            ])
            .map_err(|e| Error::Io(e.to_string()))?;
            for row in &report.orbits {
                w.write_record([
                    row.map_id.to_string(),
                    row.family.to_string(),
                    row.d.to_string(),
                    row.point.clone(),
                    row.tail.to_string(),
                    row.cycle.to_string(),
                    row.orbit_size.to_string(),
                    row.threshold.clone(),
                    row.ok.to_string(),
                ])
                .map_err(|e| Error::Io(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
        }
    }
}

pub fn write_report(report: &CampaignReport, format: ReportFormat, path: &Path) -> Result<()> {
    std::fs::write(path, emit_report(report, format)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{run_bound_campaign, CampaignConfig};

    #[test]
    fn empty_campaign_documents() {
        let cfg = CampaignConfig::new(2, 1, 0).unwrap();
        let r = run_bound_campaign(&cfg).unwrap();
        let json: serde_json::Value = serde_json::from_str(&emit_report(&r, ReportFormat::Json).unwrap()).unwrap();
        assert_eq!(json["maps_tested"], 0);
        assert_eq!(json["violations"].as_array().unwrap().len(), 0);
        let csv = emit_report(&r, ReportFormat::Csv).unwrap();
        assert_eq!(csv, "map_id,family,d,point,tail,cycle,orbit_size,threshold,ok\n");
    }

    #[test]
    fn same_seed_same_bytes() {
        let cfg = CampaignConfig::standard(2, 10, 1, 77).unwrap();
        for fmt in [ReportFormat::Json, ReportFormat::Csv] {
            let a = emit_report(&run_bound_campaign(&cfg).unwrap(), fmt).unwrap();
            let b = emit_report(&run_bound_campaign(&cfg).unwrap(), fmt).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn format_selection() {
        assert_eq!(ReportFormat::from_path(Path::new("r.CSV")), ReportFormat::Csv);
        assert_eq!(ReportFormat::from_path(Path::new("r.json")), ReportFormat::Json);
        assert!("xml".parse::<ReportFormat>().is_err());
    }

    #[test]
    fn unwritable_path() {
        let r = run_bound_campaign(&CampaignConfig::new(2, 1, 0).unwrap()).unwrap();
        let err = write_report(&r, ReportFormat::Json, Path::new("/nonexistent/dir/r.json"));
        assert!(matches!(err, Err(Error::Io(_))));
    }
}
