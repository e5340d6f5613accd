//! `wciforge` command-line front end.
//!
//! Exit codes: 0 success or true, 1 semantic negative, 2 input error,
//! 3 internal inconsistency, 4 undecided candidates remain.

mod report;

use std::collections::BTreeMap;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::value::RawValue;
use wciforge::{
    enumerate_wcis, ratios_equal, reproduce_tables, ClassifyError, Presentation,
    PresentationDocument, SearchCaps,
};

use crate::report::{AnalysisReport, ReportError};

/// Largest Poincaré prefix `equiv` prints.
const MAX_PREFIX_ORDER: u64 = 1000;

#[derive(Debug, Parser)]
#[command(
    name = "wciforge",
    version,
    about = "Exact combinatorics of weighted complete intersections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Invariants, smoothness checks and the automorphism verdict.
    Analyze {
        /// JSON document or inline `w=.. d=..`; read from stdin when absent or `-`.
        input: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Coefficients `h^0(O_X(m))` for `m = 0..=M`.
    Hilbert {
        input: Option<String>,
        #[arg(long = "m", value_name = "M")]
        m: u64,
        #[arg(long)]
        json: bool,
    },
    /// Whether two presentations describe the same family.
    Equiv {
        a: String,
        b: String,
        #[arg(long)]
        json: bool,
    },
    /// Smooth cone-free families of given dimension and index within caps.
    Enumerate {
        #[arg(long)]
        dim: usize,
        #[arg(
            long,
            allow_negative_numbers = true,
            required_unless_present = "calabi_yau"
        )]
        index: Option<i64>,
        /// Shorthand for `--index 0`.
        #[arg(long, conflicts_with = "index")]
        calabi_yau: bool,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long)]
        json: bool,
    },
    /// The dimension 1 and 2 tables; `--reproduce` re-derives and compares them.
    Tables {
        #[arg(long)]
        reproduce: bool,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
struct CapArgs {
    #[arg(long)]
    max_codim: Option<usize>,
    #[arg(long)]
    max_degree: Option<u64>,
    #[arg(long)]
    max_weight: Option<u64>,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(msg) | Failure::Internal(msg) => msg,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    let mut stdout = io::stdout().lock();
    // a closed pipe is not worth a panic
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    match result {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn run(command: Command, out: &mut String) -> Result<u8, Failure> {
    match command {
        Command::Analyze { input, json } => analyze(&read_input(input)?, json, out),
        Command::Hilbert { input, m, json } => hilbert(&read_input(input)?, m, json, out),
        Command::Equiv { a, b, json } => equiv(&a, &b, json, out),
        Command::Enumerate {
            dim,
            index,
            calabi_yau,
            caps,
            json,
        } => {
            let index = if calabi_yau {
                0
            } else {
                index.expect("required by clap")
            };
            enumerate(dim, index, resolve_caps(&caps)?, json, out)
        }
        Command::Tables {
            reproduce,
            caps,
            json,
        } => tables(reproduce, resolve_caps(&caps)?, json, out),
    }
}

fn read_input(arg: Option<String>) -> Result<String, Failure> {
    match arg.as_deref() {
        None | Some("-") => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Input(format!("cannot read stdin: {e}")))?;
            Ok(text)
        }
        Some(text) => Ok(text.to_string()),
    }
}

/// Parses a JSON document or the inline grammar.
fn parse_presentation(text: &str) -> Result<Presentation, Failure> {
    let text = text.trim();
    if text.starts_with('{') {
        let doc: PresentationDocument = serde_json::from_str(text)
            .map_err(|e| Failure::Input(format!("invalid document: {e}")))?;
        Presentation::try_from(doc).map_err(|e| Failure::Input(e.to_string()))
    } else {
        text.parse()
            .map_err(|e| Failure::Input(format!("invalid presentation `{text}`: {e}")))
    }
}

/// The input as it should appear under `input`: JSON documents verbatim,
/// inline presentations as a JSON string.
fn raw_input(text: &str) -> Box<RawValue> {
    let text = text.trim();
    if text.starts_with('{') {
        if let Ok(raw) = RawValue::from_string(text.to_string()) {
            return raw;
        }
    }
    RawValue::from_string(serde_json::to_string(text).expect("string serializes"))
        .expect("serialized string is valid JSON")
}

fn resolve_caps(args: &CapArgs) -> Result<SearchCaps, Failure> {
    let mut caps = match std::env::var("WCIFORGE_CAPS") {
        Ok(value) => parse_caps(&value)?,
        Err(std::env::VarError::NotPresent) => SearchCaps::default(),
        Err(e) => return Err(Failure::Input(format!("WCIFORGE_CAPS: {e}"))),
    };
    if let Some(codim) = args.max_codim {
        caps.max_codim = codim;
    }
    if let Some(degree) = args.max_degree {
        caps.max_degree = degree;
    }
    if let Some(weight) = args.max_weight {
        caps.max_weight = weight;
    }
    if caps.max_codim == 0 || caps.max_degree == 0 || caps.max_weight == 0 {
        return Err(Failure::Input(format!("caps must be positive: {caps}")));
    }
    Ok(caps)
}

/// `codim,degree,weight`.
fn parse_caps(value: &str) -> Result<SearchCaps, Failure> {
    let bad = || {
        Failure::Input(format!(
            "WCIFORGE_CAPS must be `codim,degree,weight`, got `{value}`"
        ))
    };
    let parts: Vec<&str> = value.split(',').map(str::trim).collect();
    let [codim, degree, weight] = parts.as_slice() else {
        return Err(bad());
    };
    Ok(SearchCaps {
        max_codim: codim.parse().map_err(|_| bad())?,
        max_degree: degree.parse().map_err(|_| bad())?,
        max_weight: weight.parse().map_err(|_| bad())?,
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string(value).expect("report serializes");
    text.push('\n');
    text
}

/// A JSON object with an `input` key is an earlier report; analysis restarts
/// from the input it recorded.
fn unwrap_report(text: &str) -> Result<String, Failure> {
    let trimmed = text.trim();
    if !trimmed.starts_with('{') {
        return Ok(text.to_string());
    }
    let Ok(fields) = serde_json::from_str::<BTreeMap<String, Box<RawValue>>>(trimmed) else {
        return Ok(text.to_string());
    };
    let Some(input) = fields.get("input") else {
        return Ok(text.to_string());
    };
    match serde_json::from_str::<String>(input.get()) {
        Ok(inline) => Ok(inline),
        Err(_) => Ok(input.get().to_string()),
    }
}

fn analyze(text: &str, json: bool, out: &mut String) -> Result<u8, Failure> {
    let text = unwrap_report(text)?;
    let text = text.as_str();
    let pres = parse_presentation(text)?;
    let report = AnalysisReport::new(raw_input(text), &pres).map_err(|e| match e {
        ReportError::TooLarge(msg) => Failure::Input(msg),
        ReportError::Inconsistent(msg) => Failure::Internal(msg),
    })?;
    if json {
        out.push_str(&to_json(&report));
    } else {
        out.push_str(&report.to_text());
    }
    Ok(0)
}

fn join<T: ToString>(values: impl IntoIterator<Item = T>, sep: &str) -> String {
    values
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn hilbert(text: &str, m: u64, json: bool, out: &mut String) -> Result<u8, Failure> {
    let pres = parse_presentation(text)?;
    let order = usize::try_from(m).map_err(|_| Failure::Input(format!("--m {m} is too large")))?;
    let prefix = pres.poincare().expand(order);
    if json {
        // BigInt values are written as plain JSON numbers
        out.push('[');
        out.push_str(&join(prefix.coefficients(), ","));
        out.push_str("]\n");
    } else {
        for c in prefix.coefficients() {
            out.push_str(&format!("{c}\n"));
        }
    }
    Ok(0)
}

fn equiv(a: &str, b: &str, json: bool, out: &mut String) -> Result<u8, Failure> {
    let lhs = parse_presentation(a)?;
    let rhs = parse_presentation(b)?;
    let (canon_a, canon_b) = (lhs.canonical_form(), rhs.canonical_form());
    let equivalent = lhs.equivalent(&rhs);
    if equivalent != ratios_equal(&lhs.poincare(), &rhs.poincare()) {
        return Err(Failure::Internal(format!(
            "canonical forms and Poincaré series disagree for {lhs} and {rhs}"
        )));
    }
    let prefix = equivalent.then(|| {
        let bound = canon_a.poincare().cross_degree_bound(&canon_b.poincare());
        canon_a
            .poincare()
            .expand(bound.min(MAX_PREFIX_ORDER) as usize)
    });
    if json {
        // BigInt coefficients are written as plain JSON numbers
        let quote =
            |p: &Presentation| serde_json::to_string(&p.to_string()).expect("string serializes");
        let prefix = prefix.as_ref().map_or_else(
            || "null".to_string(),
            |p| format!("[{}]", join(p.coefficients(), ",")),
        );
        out.push_str(&format!(
            "{{\"equivalent\":{equivalent},\"canonical_a\":{},\"canonical_b\":{},\"prefix\":{prefix}}}\n",
            quote(&canon_a),
            quote(&canon_b)
        ));
    } else {
        out.push_str(&format!("canonical a  {canon_a}\n"));
        out.push_str(&format!("canonical b  {canon_b}\n"));
        out.push_str(&format!("equivalent   {equivalent}\n"));
        if let Some(p) = &prefix {
            out.push_str(&format!("prefix       {}\n", join(p.coefficients(), ",")));
        }
    }
    Ok(if equivalent { 0 } else { 1 })
}

#[derive(Serialize)]
struct EnumerationOutput {
    dim: usize,
    index: i64,
    caps: SearchCaps,
    found: Vec<String>,
    undecided: Vec<String>,
    warnings: Vec<String>,
}

fn enumerate(
    dim: usize,
    index: i64,
    caps: SearchCaps,
    json: bool,
    out: &mut String,
) -> Result<u8, Failure> {
    if dim == 0 {
        return Err(Failure::Input("--dim must be at least 1".to_string()));
    }
    let result = enumerate_wcis(dim, index, caps);
    eprintln!("caps: {caps}");
    for warning in &result.warnings {
        eprintln!("warning: {warning}");
    }
    if json {
        out.push_str(&to_json(&EnumerationOutput {
            dim,
            index,
            caps,
            found: result.found.iter().map(ToString::to_string).collect(),
            undecided: result.undecided.iter().map(ToString::to_string).collect(),
            warnings: result.warnings.clone(),
        }));
    } else {
        for pres in &result.found {
            out.push_str(&format!("{pres}\n"));
        }
        if !result.undecided.is_empty() {
            out.push_str("undecided:\n");
            for pres in &result.undecided {
                out.push_str(&format!("  {pres}\n"));
            }
        }
    }
    Ok(if result.undecided.is_empty() { 0 } else { 4 })
}

#[derive(Serialize)]
struct TableListing {
    fano: Vec<String>,
    calabi_yau: Vec<String>,
}

fn tables(reproduce: bool, caps: SearchCaps, json: bool, out: &mut String) -> Result<u8, Failure> {
    if !reproduce {
        let listing = TableListing {
            fano: wciforge::enumerate::fano_table()
                .iter()
                .map(ToString::to_string)
                .collect(),
            calabi_yau: wciforge::enumerate::calabi_yau_table()
                .iter()
                .map(ToString::to_string)
                .collect(),
        };
        if json {
            out.push_str(&to_json(&listing));
        } else {
            out.push_str("fano:\n");
            for line in &listing.fano {
                out.push_str(&format!("  {line}\n"));
            }
            out.push_str("calabi-yau:\n");
            for line in &listing.calabi_yau {
                out.push_str(&format!("  {line}\n"));
            }
        }
        return Ok(0);
    }

    let report = reproduce_tables(caps);
    eprintln!("caps: {caps}");
    for warning in &report.warnings {
        eprintln!("warning: {warning}");
    }
    // every table entry must itself pass the smoothness gate
    for pres in report.fano.found.iter().chain(&report.calabi_yau.found) {
        if let Err(e @ ClassifyError::Inconsistent { .. }) = wciforge::index_class(pres) {
            return Err(Failure::Internal(e.to_string()));
        }
    }
    if json {
        out.push_str(&to_json(&report::TablesOutput::new(&report)));
    } else {
        for (name, table) in [("fano", &report.fano), ("calabi-yau", &report.calabi_yau)] {
            out.push_str(&format!(
                "{name}: expected {}, found {}, missing {}, unexpected {}\n",
                table.expected.len(),
                table.found.len(),
                table.missing.len(),
                table.unexpected.len()
            ));
            for pres in &table.missing {
                out.push_str(&format!("- {pres}\n"));
            }
            for pres in &table.unexpected {
                out.push_str(&format!("+ {pres}\n"));
            }
        }
        out.push_str(&format!("undecided: {}\n", report.undecided.len()));
        for pres in &report.undecided {
            out.push_str(&format!("? {pres}\n"));
        }
        out.push_str(if report.passed() { "PASS\n" } else { "FAIL\n" });
    }
    Ok(if report.passed() { 0 } else { 1 })
}
