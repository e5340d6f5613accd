use serde::Serialize;
use serde_json::value::RawValue;
use wciforge::{
    ambient_well_formed, aut_verdict, avoids_singular_locus, fano_index, index_class,
    quasi_smoothness, smooth_general, stratum_reports, well_formed_general, ClassifyError,
    InvariantsRecord, Presentation, StratumReport, TablesReport, TriState, Verdict,
};

/// The smoothness checks enumerate coordinate subsets, so inputs are bounded
/// to keep `analyze` interactive.
pub const MAX_WEIGHTS: usize = 16;
pub const MAX_ENTRY: u64 = 10_000;

#[derive(Debug)]
pub enum ReportError {
    TooLarge(String),
    Inconsistent(String),
}

#[derive(Serialize)]
pub struct QuasiSmoothView {
    pub tier: String,
    pub value: TriState,
}

#[derive(Serialize)]
pub struct AnalysisReport {
    pub input: Box<RawValue>,
    pub presentation: Presentation,
    pub invariants: InvariantsRecord,
    pub linear_cone_pairs: Vec<u64>,
    pub canonical_form: Presentation,
    pub ambient_well_formed: bool,
    pub well_formed_general: bool,
    pub avoids_singular_locus: bool,
    pub strata: Vec<StratumReport>,
    pub quasi_smoothness: QuasiSmoothView,
    pub smooth_general: TriState,
    pub fano_index: Option<u64>,
    pub index_class: Option<String>,
    pub aut_verdict: Verdict,
    /// Why `fano_index` or `index_class` is absent.
    pub notes: Vec<String>,
}

impl AnalysisReport {
    pub fn new(input: Box<RawValue>, pres: &Presentation) -> Result<Self, ReportError> {
        let largest = pres
            .weights()
            .iter()
            .chain(pres.degrees())
            .max()
            .copied()
            .unwrap_or(0);
        if pres.weights().len() > MAX_WEIGHTS || largest > MAX_ENTRY {
            return Err(ReportError::TooLarge(format!(
                "analysis supports at most {MAX_WEIGHTS} weights and entries up to {MAX_ENTRY}"
            )));
        }
        let canon = pres.canonical_form();
        let mut notes = Vec::new();
        let fano_index = match fano_index(pres) {
            Ok(value) => Some(value),
            Err(e) => {
                notes.push(format!("fano_index: {e}"));
                None
            }
        };
        let index_class = match index_class(pres) {
            Ok(class) => Some(class.to_string()),
            Err(e @ ClassifyError::Inconsistent { .. }) => {
                return Err(ReportError::Inconsistent(e.to_string()))
            }
            Err(e) => {
                notes.push(format!("index_class: {e}"));
                None
            }
        };
        let qs = quasi_smoothness(&canon);
        Ok(AnalysisReport {
            input,
            presentation: pres.clone(),
            invariants: pres.invariants(),
            linear_cone_pairs: pres.linear_cone_pairs(),
            ambient_well_formed: ambient_well_formed(canon.weights()),
            well_formed_general: well_formed_general(&canon),
            avoids_singular_locus: avoids_singular_locus(&canon),
            strata: stratum_reports(&canon),
            quasi_smoothness: QuasiSmoothView {
                tier: qs.tier.to_string(),
                value: qs.value,
            },
            smooth_general: smooth_general(pres),
            fano_index,
            index_class,
            aut_verdict: aut_verdict(pres),
            canonical_form: canon,
            notes,
        })
    }

    pub fn to_text(&self) -> String {
        fn list(values: &[u64]) -> String {
            values
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",")
        }
        let inv = &self.invariants;
        let mut rows: Vec<(String, String)> = vec![
            ("presentation".into(), self.presentation.to_string()),
            ("ambient_dim".into(), inv.ambient_dim.to_string()),
            ("codim".into(), inv.codim.to_string()),
            ("dim".into(), inv.dim.to_string()),
            ("index".into(), inv.index.to_string()),
            ("canonical_degree".into(), inv.canonical_degree.to_string()),
            ("kind".into(), inv.kind.to_string()),
            ("linear_cone_pairs".into(), list(&self.linear_cone_pairs)),
            ("canonical_form".into(), self.canonical_form.to_string()),
            (
                "ambient_well_formed".into(),
                self.ambient_well_formed.to_string(),
            ),
            (
                "well_formed_general".into(),
                self.well_formed_general.to_string(),
            ),
            (
                "avoids_singular_locus".into(),
                self.avoids_singular_locus.to_string(),
            ),
        ];
        for s in &self.strata {
            rows.push((
                format!("stratum p={}", s.prime),
                format!(
                    "weights={} degrees={} dim={} critical={}",
                    s.divisible_weights,
                    s.attainable_degrees,
                    s.general_dimension,
                    list(&s.critical_weights)
                ),
            ));
        }
        rows.push((
            "quasi_smooth".into(),
            format!(
                "{} ({})",
                self.quasi_smoothness.value, self.quasi_smoothness.tier
            ),
        ));
        rows.push(("smooth_general".into(), self.smooth_general.to_string()));
        rows.push((
            "fano_index".into(),
            self.fano_index
                .map_or_else(|| "-".to_string(), |v| v.to_string()),
        ));
        rows.push((
            "index_class".into(),
            self.index_class.clone().unwrap_or_else(|| "-".into()),
        ));
        rows.push(("aut_verdict".into(), self.aut_verdict.to_string()));
        for note in &self.notes {
            rows.push(("note".into(), note.clone()));
        }

        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        rows.iter()
            .map(|(k, v)| format!("{}\n", format!("{k:<width$}  {v}").trim_end()))
            .collect()
    }
}

#[derive(Serialize)]
pub struct TableView {
    pub expected: Vec<String>,
    pub found: Vec<String>,
    pub missing: Vec<String>,
    pub unexpected: Vec<String>,
}

#[derive(Serialize)]
pub struct TablesOutput {
    pub caps: wciforge::SearchCaps,
    pub fano: TableView,
    pub calabi_yau: TableView,
    pub undecided: Vec<String>,
    pub warnings: Vec<String>,
    pub passed: bool,
}

fn strings(list: &[Presentation]) -> Vec<String> {
    list.iter().map(ToString::to_string).collect()
}

impl TablesOutput {
    pub fn new(report: &TablesReport) -> Self {
        let view = |t: &wciforge::enumerate::TableComparison| TableView {
            expected: strings(&t.expected),
            found: strings(&t.found),
            missing: strings(&t.missing),
            unexpected: strings(&t.unexpected),
        };
        TablesOutput {
            caps: report.caps,
            fano: view(&report.fano),
            calabi_yau: view(&report.calabi_yau),
            undecided: strings(&report.undecided),
            warnings: report.warnings.clone(),
            passed: report.passed(),
        }
    }
}
