//! The `qvir` command-line front end.
//!
//! Every successful command emits one JSON envelope
//! `{command, inputs, result, format_version}` or, with `--format csv`, a CSV
//! table. Rationals cross the boundary as numerator/denominator strings;
//! floats carry 15 significant digits. Exit status 2 marks usage and
//! precondition errors, 1 internal errors.

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::characters::{irreducible_character, s_matrix, verma_character, CharacterSeries};
use crate::error::{Error, Result};
use crate::extensions::{classify_voa, scan_extensions, tensor_invariants, VerdictTag};
use crate::growth::{classify_growth, cumulative_magnitudes, key_lemma_comparison, lemma_la_witness, plot_rows};
use crate::growth::{GrowthFit, GrowthVerdict};
use crate::minimal_models::{recognize_central_charge, MinimalModel};
use crate::qseries::{partition_numbers, QExpansion};
use crate::rational::{format_rational, parse_rational, Rational};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "qvir", version, about = "Exact q-series and Virasoro minimal-model computations")]
struct Cli {
    /// Output encoding.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Kac table of the minimal model (p, q).
    KacTable { p: i64, q: i64 },
    /// c_{p,q} and the effective central charge.
    CentralCharge { p: i64, q: i64 },
    /// Finds (p, q) with c_{p,q} = C.
    Recognize {
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Irreducible character of L(c_{p,q}, h_{r,s}).
    Character {
        p: i64,
        q: i64,
        r: i64,
        s: i64,
        #[arg(long, default_value_t = 50)]
        terms: usize,
    },
    /// Character of the Verma module M(c, h).
    VermaCharacter {
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        h: String,
        #[arg(long, default_value_t = 50)]
        terms: usize,
    },
    /// The partition number p(N).
    Partition { n: usize },
    /// Growth classification of a coefficient file.
    Growth {
        #[arg(long)]
        input: PathBuf,
        /// Fit window `A:B`.
        #[arg(long)]
        window: String,
        /// Fit the cumulative sums of absolute values instead of the values.
        #[arg(long)]
        envelope: bool,
    },
    /// First n with coefficient above n^alpha in 1/∏_{n>1}(1 − q^n)^mu.
    LemmaLa {
        #[arg(long)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, default_value_t = 10000)]
        terms: usize,
    },
    /// Dual-route identity and growth verdicts for the vacuum series.
    KeyLemma {
        p: i64,
        q: i64,
        #[arg(long, default_value_t = 1000)]
        terms: usize,
    },
    /// Modular S-matrix of the minimal model.
    SMatrix { p: i64, q: i64 },
    /// Residual of χ(−1/τ) − Sχ(τ).
    ModularCheck {
        p: i64,
        q: i64,
        /// `RE:IM`.
        #[arg(long, default_value = "0:1", allow_hyphen_values = true)]
        tau: String,
        #[arg(long, default_value_t = 500)]
        terms: usize,
    },
    /// Necessary-condition extension candidates.
    ScanExtensions {
        p: i64,
        q: i64,
        #[arg(long, default_value_t = 2)]
        max_mult: u32,
        #[arg(long, default_value_t = 50)]
        terms: usize,
    },
    /// Classification verdict for invariants (c, c̃).
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, allow_hyphen_values = true)]
        ctilde: String,
    },
    /// Sums of (c, c̃) over tensor factors read from a JSON or CSV file.
    Tensor {
        #[arg(long)]
        factors: PathBuf,
    },
}

/// Exit status and the text destined for stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A computed result in both encodings.
struct Report {
    inputs: Value,
    result: Value,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

/// Float rounded to 15 significant digits; non-finite values become strings.
pub fn float(x: f64) -> Value {
    if x.is_finite() {
        json!(round15(x))
    } else {
        json!(x.to_string())
    }
}

fn round15(x: f64) -> f64 {
    format!("{x:.14e}").parse().expect("valid float")
}

fn float_text(x: f64) -> String {
    if x.is_finite() {
        round15(x).to_string()
    } else {
        x.to_string()
    }
}

pub fn rational_json(x: &Rational) -> Value {
    json!({ "numerator": x.numer().to_string(), "denominator": x.denom().to_string() })
}

fn rational_cells(x: &Rational) -> [String; 2] {
    [x.numer().to_string(), x.denom().to_string()]
}

fn series_json(series: &QExpansion) -> Value {
    let terms: Vec<Value> = series_rows(series)
        .into_iter()
        .map(|r| json!({ "n": r[0].parse::<u64>().expect("index"), "exponent": r[1], "numerator": r[2], "denominator": r[3] }))
        .collect();
    json!({
        "leading_exponent": format_rational(series.leading_exponent()),
        "truncation_order": series.truncation_order(),
        "terms": terms,
    })
}

const SERIES_HEADER: [&str; 4] = ["n", "exponent", "numerator", "denominator"];

fn series_rows(series: &QExpansion) -> Vec<Vec<String>> {
    series
        .coefficients()
        .iter()
        .enumerate()
        .map(|(n, a)| {
            let e = series.leading_exponent() + Rational::from_integer(BigInt::from(n));
            let [num, den] = rational_cells(a);
            vec![n.to_string(), format_rational(&e), num, den]
        })
        .collect()
}

fn character_report(inputs: Value, ch: &CharacterSeries) -> Report {
    let mut result = series_json(&ch.series);
    result["label"] = json!(ch.label.to_string());
    Report { inputs, result, header: SERIES_HEADER.to_vec(), rows: series_rows(&ch.series) }
}

fn fit_json(fit: &GrowthFit) -> Value {
    json!({
        "model_kind": fit.model_kind,
        "parameter": float(fit.parameter),
        "intercept": float(fit.intercept),
        "residual": float(fit.residual),
        "window": [fit.window.0, fit.window.1],
    })
}

fn verdict_json(v: &GrowthVerdict) -> Value {
    json!({
        "tag": v.tag,
        "power_law": fit_json(&v.power_law),
        "stretched_exponential": fit_json(&v.stretched_exponential),
        "ratio_threshold": float(v.ratio_threshold),
    })
}

fn verdict_cells(name: &str, v: &GrowthVerdict) -> Vec<String> {
    vec![
        name.to_string(),
        serde_json::to_value(v.tag).expect("tag").as_str().expect("string").to_string(),
        float_text(v.power_law.parameter),
        float_text(v.power_law.residual),
        float_text(v.stretched_exponential.parameter),
        float_text(v.stretched_exponential.residual),
        v.power_law.window.0.to_string(),
        v.power_law.window.1.to_string(),
    ]
}

fn parse_window(text: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("malformed window {text:?}, expected A:B"));
    let (a, b) = text.split_once(':').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn parse_tau(text: &str) -> Result<Complex64> {
    let bad = || Error::Parse(format!("malformed tau {text:?}, expected RE:IM"));
    let (a, b) = text.split_once(':').ok_or_else(bad)?;
    Ok(Complex64::new(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn read_file(path: &Path) -> Result<String> {
    let mut text = String::new();
    std::fs::File::open(path)
        .and_then(|mut f| f.read_to_string(&mut text))
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    Ok(text)
}

fn csv_records(text: &str) -> Result<Vec<Vec<String>>> {
    let mut reader =
        csv::ReaderBuilder::new().has_headers(false).flexible(true).trim(csv::Trim::All).from_reader(text.as_bytes());
    reader
        .records()
        .map(|r| {
            r.map(|rec| rec.iter().map(str::to_string).collect::<Vec<String>>())
                .map_err(|e| Error::Parse(format!("malformed CSV: {e}")))
        })
        .filter(|r| !matches!(r, Ok(fields) if fields.iter().all(|f: &String| f.is_empty())))
        .collect()
}

/// Coefficient values from either the series CSV or one value per line.
enum Values {
    Exact(Vec<Rational>),
    Float(Vec<f64>),
}

fn read_values(path: &Path) -> Result<Values> {
    let mut records = csv_records(&read_file(path)?)?;
    if records.first().is_some_and(|r| r.first().is_some_and(|f| f == "n")) {
        records.remove(0);
    }
    let cells: Vec<String> = records
        .iter()
        .map(|r| match r.len() {
            1 => Ok(r[0].clone()),
            4 => Ok(format!("{}/{}", r[2], r[3])),
            k => Err(Error::Parse(format!("expected 1 or 4 columns, found {k}"))),
        })
        .collect::<Result<_>>()?;
    if let Ok(exact) = cells.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>>>() {
        return Ok(Values::Exact(exact));
    }
    cells
        .iter()
        .map(|c| c.parse::<f64>().map_err(|_| Error::Parse(format!("malformed value {c:?}"))))
        .collect::<Result<Vec<_>>>()
        .map(Values::Float)
}

fn read_factors(path: &Path) -> Result<Vec<(Rational, Rational)>> {
    let text = read_file(path)?;
    let pair = |c: &str, ct: &str| Ok((parse_rational(c)?, parse_rational(ct)?));
    if let Ok(value) = serde_json::from_str::<Value>(&text) {
        let items = value.as_array().ok_or_else(|| Error::Parse("factors JSON must be an array".into()))?;
        let text_of = |v: &Value| match v {
            Value::String(s) => Ok(s.clone()),
            Value::Number(n) => Ok(n.to_string()),
            _ => Err(Error::Parse(format!("malformed factor entry {v}"))),
        };
        return items
            .iter()
            .map(|item| match item {
                Value::Array(xs) if xs.len() == 2 => pair(&text_of(&xs[0])?, &text_of(&xs[1])?),
                Value::Object(m) => match (m.get("c"), m.get("c_tilde")) {
                    (Some(c), Some(ct)) => pair(&text_of(c)?, &text_of(ct)?),
                    _ => Err(Error::Parse("factor objects need c and c_tilde".into())),
                },
                other => Err(Error::Parse(format!("malformed factor entry {other}"))),
            })
            .collect();
    }
    let mut records = csv_records(&text)?;
    if records.first().is_some_and(|r| r.first().is_some_and(|f| f == "c")) {
        records.remove(0);
    }
    records
        .iter()
        .map(|r| match r.as_slice() {
            [c, ct] => pair(c, ct),
            _ => Err(Error::Parse("factor CSV rows need two columns c,c_tilde".into())),
        })
        .collect()
}

fn execute(command: &Command) -> Result<(&'static str, Report)> {
    Ok(match command {
        Command::KacTable { p, q } => {
            let model = MinimalModel::new(*p, *q)?;
            let table = model.kac_table();
            let entries: Vec<Value> =
                table.entries.iter().map(|e| json!({ "r": e.r, "s": e.s, "h": rational_json(&e.h) })).collect();
            let rows = table
                .entries
                .iter()
                .map(|e| {
                    let [n, d] = rational_cells(&e.h);
                    vec![e.r.to_string(), e.s.to_string(), n, d]
                })
                .collect();
            let result = json!({
                "c": rational_json(model.central_charge()),
                "c_tilde": rational_json(model.effective_central_charge()),
                "lambda_min": rational_json(&table.lambda_min),
                "entries": entries,
            });
            let header = vec!["r", "s", "h_numerator", "h_denominator"];
            ("kac-table", Report { inputs: json!({ "p": p, "q": q }), result, header, rows })
        }
        Command::CentralCharge { p, q } => {
            let model = MinimalModel::new(*p, *q)?;
            let result = json!({
                "c": rational_json(model.central_charge()),
                "c_tilde": rational_json(model.effective_central_charge()),
                "unitary": model.is_unitary(),
            });
            let rows = [("c", model.central_charge()), ("c_tilde", model.effective_central_charge())]
                .into_iter()
                .map(|(name, x)| {
                    let [n, d] = rational_cells(x);
                    vec![name.to_string(), n, d]
                })
                .collect();
            let header = vec!["quantity", "numerator", "denominator"];
            ("central-charge", Report { inputs: json!({ "p": p, "q": q }), result, header, rows })
        }
        Command::Recognize { c } => {
            let c = parse_rational(c)?;
            let found = recognize_central_charge(&c);
            let result = json!({
                "c": rational_json(&c),
                "model": found.map(|(p, q)| json!({ "p": p, "q": q })),
            });
            let [n, d] = rational_cells(&c);
            let (p, q) = found.map_or((String::new(), String::new()), |(p, q)| (p.to_string(), q.to_string()));
            let header = vec!["c_numerator", "c_denominator", "p", "q"];
            let inputs = json!({ "c": format_rational(&c) });
            ("recognize", Report { inputs, result, header, rows: vec![vec![n, d, p, q]] })
        }
        Command::Character { p, q, r, s, terms } => {
            let ch = irreducible_character(*p, *q, *r, *s, *terms)?;
            let inputs = json!({ "p": p, "q": q, "r": r, "s": s, "terms": terms });
            ("character", character_report(inputs, &ch))
        }
        Command::VermaCharacter { c, h, terms } => {
            let (c, h) = (parse_rational(c)?, parse_rational(h)?);
            let ch = verma_character(&c, &h, *terms);
            let inputs = json!({ "c": format_rational(&c), "h": format_rational(&h), "terms": terms });
            ("verma-character", character_report(inputs, &ch))
        }
        Command::Partition { n } => {
            let value = partition_numbers(*n).pop().expect("nonempty");
            let result = json!({ "n": n, "value": value.to_string() });
            let header = vec!["n", "value"];
            let rows = vec![vec![n.to_string(), value.to_string()]];
            ("partition", Report { inputs: json!({ "n": n }), result, header, rows })
        }
        Command::Growth { input, window, envelope } => {
            let (a, b) = parse_window(window)?;
            let values = read_values(input)?;
            let (verdict, rows) = match values {
                Values::Exact(xs) => {
                    let xs = if *envelope {
                        let den = xs.iter().fold(BigInt::from(1), |acc, x| num_integer::lcm(acc, x.denom().clone()));
                        let nums = xs.iter().map(|x| (x * Rational::from_integer(den.clone())).to_integer()).collect();
                        cumulative_magnitudes(&QExpansion::from_parts(Rational::from_integer(0.into()), nums, den))
                    } else {
                        xs
                    };
                    let v = classify_growth(&xs, a..=b)?;
                    let rows = plot_rows(&xs, &v);
                    (v, rows)
                }
                Values::Float(xs) => {
                    let xs = if *envelope {
                        xs.iter()
                            .scan(0.0, |acc, x| {
                                *acc += x.abs();
                                Some(*acc)
                            })
                            .collect()
                    } else {
                        xs
                    };
                    let v = classify_growth(&xs, a..=b)?;
                    let rows = plot_rows(&xs, &v);
                    (v, rows)
                }
            };
            let inputs = json!({
                "input": input.display().to_string(),
                "window": format!("{a}:{b}"),
                "envelope": envelope,
            });
            let rows = rows
                .into_iter()
                .map(|(n, an, fp, fs)| vec![n.to_string(), float_text(an), float_text(fp), float_text(fs)])
                .collect();
            let header = vec!["n", "a_n", "power_law_fit", "stretched_exponential_fit"];
            ("growth", Report { inputs, result: verdict_json(&verdict), header, rows })
        }
        Command::LemmaLa { mu, alpha, terms } => {
            let mu = parse_rational(mu)?;
            let witness = lemma_la_witness(&mu, *alpha, *terms)?;
            let inputs = json!({ "mu": format_rational(&mu), "alpha": float(*alpha), "terms": terms });
            let result = json!({ "witness": witness });
            let header = vec!["mu_numerator", "mu_denominator", "alpha", "terms", "witness"];
            let [n, d] = rational_cells(&mu);
            let w = witness.map_or(String::new(), |w| w.to_string());
            let rows = vec![vec![n, d, float_text(*alpha), terms.to_string(), w]];
            ("lemma-la", Report { inputs, result, header, rows })
        }
        Command::KeyLemma { p, q, terms } => {
            let report = key_lemma_comparison(*p, *q, *terms)?;
            let result = json!({
                "c": rational_json(&report.c),
                "closed_form_matches": report.closed_form_matches,
                "verma_quotient": verdict_json(&report.verma_quotient),
                "vacuum_irreducible": verdict_json(&report.vacuum_irreducible),
                "dichotomy_holds": report.dichotomy_holds(),
            });
            let header = vec![
                "series",
                "tag",
                "power_law_parameter",
                "power_law_residual",
                "stretched_exponential_parameter",
                "stretched_exponential_residual",
                "window_start",
                "window_end",
            ];
            let rows = vec![
                verdict_cells("verma_quotient", &report.verma_quotient),
                verdict_cells("vacuum_irreducible", &report.vacuum_irreducible),
            ];
            ("key-lemma", Report { inputs: json!({ "p": p, "q": q, "terms": terms }), result, header, rows })
        }
        Command::SMatrix { p, q } => {
            let s = s_matrix(*p, *q)?;
            let labels: Vec<Value> =
                s.labels.iter().map(|e| json!({ "r": e.r, "s": e.s, "h": rational_json(&e.h) })).collect();
            let values: Vec<Value> = s.row_major().into_iter().map(float).collect();
            let result = json!({ "dim": s.dim(), "labels": labels, "values": values });
            let mut rows = Vec::new();
            for (i, a) in s.labels.iter().enumerate() {
                for (j, b) in s.labels.iter().enumerate() {
                    rows.push(vec![
                        a.r.to_string(),
                        a.s.to_string(),
                        b.r.to_string(),
                        b.s.to_string(),
                        float_text(s.values[i][j]),
                    ]);
                }
            }
            let header = vec!["row_r", "row_s", "col_r", "col_s", "value"];
            ("s-matrix", Report { inputs: json!({ "p": p, "q": q }), result, header, rows })
        }
        Command::ModularCheck { p, q, tau, terms } => {
            let t = parse_tau(tau)?;
            let residual = crate::characters::modular_check(*p, *q, t, *terms)?;
            let inputs = json!({ "p": p, "q": q, "tau": format!("{}:{}", t.re, t.im), "terms": terms });
            let result = json!({ "residual": float(residual) });
            let header = vec!["residual"];
            ("modular-check", Report { inputs, result, header, rows: vec![vec![float_text(residual)]] })
        }
        Command::ScanExtensions { p, q, max_mult, terms } => {
            let candidates = scan_extensions(*p, *q, *max_mult, *terms)?;
            let result = json!({ "candidates": candidates.iter().map(|c| c.export()).collect::<Vec<_>>() });
            let mut rows = Vec::new();
            for (i, c) in candidates.iter().enumerate() {
                for ((r, s), m) in &c.multiplicities {
                    rows.push(vec![i.to_string(), r.to_string(), s.to_string(), m.to_string()]);
                }
            }
            let header = vec!["candidate", "r", "s", "multiplicity"];
            let inputs = json!({ "p": p, "q": q, "max_mult": max_mult, "terms": terms });
            ("scan-extensions", Report { inputs, result, header, rows })
        }
        Command::Classify { c, ctilde } => {
            let (c, ct) = (parse_rational(c)?, parse_rational(ctilde)?);
            let verdict = classify_voa(&c, &ct);
            let (p, q) = match verdict.tag {
                VerdictTag::ExtensionOfMinimalModel { p, q } => (p.to_string(), q.to_string()),
                _ => (String::new(), String::new()),
            };
            let name = match verdict.tag {
                VerdictTag::ExtensionOfMinimalModel { .. } => "ExtensionOfMinimalModel".to_string(),
                ref other => other.to_string(),
            };
            let result = json!({ "verdict": verdict.tag.to_string(), "tag": verdict.tag, "note": verdict.note });
            let inputs = json!({ "c": format_rational(&c), "ctilde": format_rational(&ct) });
            let header = vec!["tag", "p", "q", "note"];
            ("classify", Report { inputs, result, header, rows: vec![vec![name, p, q, verdict.note.clone()]] })
        }
        Command::Tensor { factors } => {
            let list = read_factors(factors)?;
            let (c, ct) = tensor_invariants(&list);
            let result = json!({ "c": rational_json(&c), "c_tilde": rational_json(&ct), "factors": list.len() });
            let rows = [("c", &c), ("c_tilde", &ct)]
                .into_iter()
                .map(|(name, x)| {
                    let [n, d] = rational_cells(x);
                    vec![name.to_string(), n, d]
                })
                .collect();
            let echoed: Vec<Value> =
                list.iter().map(|(a, b)| json!([format_rational(a), format_rational(b)])).collect();
            let inputs = json!({ "factors": factors.display().to_string(), "parsed": echoed });
            let header = vec!["quantity", "numerator", "denominator"];
            ("tensor", Report { inputs, result, header, rows })
        }
    })
}

fn render(format: Format, command: &str, argv: Vec<String>, report: Report) -> Result<String> {
    match format {
        Format::Json => {
            let mut inputs = report.inputs;
            inputs["argv"] = json!(argv);
            let envelope = json!({
                "command": command,
                "inputs": inputs,
                "result": report.result,
                "format_version": FORMAT_VERSION,
            });
            let mut text = serde_json::to_string_pretty(&envelope).map_err(|e| Error::Io(e.to_string()))?;
            text.push('\n');
            Ok(text)
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Io(e.to_string());
            writer.write_record(&report.header).map_err(io)?;
            for row in &report.rows {
                writer.write_record(row).map_err(io)?;
            }
            let bytes = writer.into_inner().map_err(|e| Error::Io(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
        }
    }
}

/// Arguments after the program name with `--output` removed, enough to
/// reproduce the printed result.
fn echo_argv(args: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    let mut skip = false;
    for a in args.iter().skip(1) {
        if skip {
            skip = false;
            continue;
        }
        if a == "--output" {
            skip = true;
        } else if !a.starts_with("--output=") {
            out.push(a.clone());
        }
    }
    out
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let args: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { status: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { status: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let rendered = execute(&cli.command).and_then(|(name, report)| render(cli.format, name, echo_argv(&args), report));
    let text = match rendered {
        Ok(text) => text,
        Err(e) => {
            let status = if e.is_usage() { 2 } else { 1 };
            return Outcome { status, stdout: String::new(), stderr: format!("error: {e}\n") };
        }
    };
    match &cli.output {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome { status: 0, stdout: String::new(), stderr: String::new() },
            Err(e) => Outcome {
                status: 1,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            },
        },
        None => Outcome { status: 0, stdout: text, stderr: String::new() },
    }
}

pub fn main() -> i32 {
    let outcome = run(std::env::args());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    outcome.status
}

#[cfg(test)]
mod tests {
    use super::*;

    fn json_of(args: &[&str]) -> Value {
        let mut argv = vec!["qvir"];
        argv.extend_from_slice(args);
        let out = run(argv);
        assert_eq!(out.status, 0, "{}", out.stderr);
        serde_json::from_str(&out.stdout).unwrap()
    }

    #[test]
    fn rounding_keeps_fifteen_digits() {
        assert_eq!(round15(0.1 + 0.2), 0.3);
        assert_eq!(round15(1.0 / 3.0), 0.333333333333333);
        assert_eq!(float(f64::INFINITY), json!("inf"));
    }

    #[test]
    fn window_and_tau_parsing() {
        assert_eq!(parse_window("100:1500").unwrap(), (100, 1500));
        assert!(parse_window("100-1500").is_err());
        assert_eq!(parse_tau("0.5:2").unwrap(), Complex64::new(0.5, 2.0));
        assert!(parse_tau("i").is_err());
    }

    #[test]
    fn envelope_shape() {
        let v = json_of(&["central-charge", "2", "5"]);
        assert_eq!(v["command"], "central-charge");
        assert_eq!(v["format_version"], 1);
        assert_eq!(v["result"]["c"]["numerator"], "-22");
        assert_eq!(v["inputs"]["argv"], json!(["central-charge", "2", "5"]));
    }

    #[test]
    fn negative_rationals_are_arguments() {
        let v = json_of(&["recognize", "-22/5"]);
        assert_eq!(v["result"]["model"], json!({ "p": 2, "q": 5 }));
        let v = json_of(&["classify", "--c", "-22/5", "--ctilde", "2/5"]);
        assert_eq!(v["result"]["verdict"], "OutsideTheoremScope");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(["qvir", "frobnicate"]).status, 2);
        assert_eq!(run(["qvir", "recognize", "1/0"]).status, 2);
        let out = run(["qvir", "kac-table", "2", "4"]);
        assert_eq!(out.status, 2);
        assert!(out.stderr.contains("coprime"));
        assert_eq!(run(["qvir", "--help"]).status, 0);
    }

    #[test]
    fn csv_output() {
        let out = run(["qvir", "--format", "csv", "kac-table", "3", "4"]);
        assert_eq!(out.stdout, "r,s,h_numerator,h_denominator\n1,1,0,1\n1,2,1,16\n1,3,1,2\n");
    }
}
