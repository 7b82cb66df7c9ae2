//! Newline-delimited JSON batch runs.

use czorb_core::{Int, Rational};
use serde::Deserialize;
use serde_json::{Map, Value};

use crate::{records, render, Failure, Outcome};

/// One batch line. Integers are read as 64-bit values: the tagged-enum
/// decoding in serde cannot buffer 128-bit numbers.
#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Request {
    Wps {
        weights: Vec<i64>,
    },
    Wci {
        weights: Vec<i64>,
        degrees: Vec<i64>,
    },
    Brieskorn {
        exponents: Vec<i64>,
    },
    OrbitWps {
        weights: Vec<i64>,
        support: Vec<usize>,
        #[serde(default)]
        allow_extrapolation: bool,
    },
    OrbitBrieskorn {
        exponents: Vec<i64>,
        support: Vec<usize>,
        #[serde(default)]
        allow_extrapolation: bool,
    },
    Teardrop {
        m: i64,
        #[serde(default = "default_degree")]
        degree: u32,
    },
    Verify(Check),
}

#[derive(Debug, Deserialize)]
#[serde(tag = "check", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Check {
    #[serde(rename = "lemma42")]
    ChartIntegral {
        w0: u64,
        w1: u64,
        #[serde(default = "default_tol")]
        tol: f64,
    },
    Winding {
        rates: Vec<i64>,
    },
    ScalarCz {
        #[serde(rename = "T")]
        t: String,
    },
}

pub(crate) fn default_degree() -> u32 {
    4
}

pub(crate) fn default_tol() -> f64 {
    1e-8
}

fn wide(xs: &[i64]) -> Vec<Int> {
    xs.iter().map(|&x| Int::from(x)).collect()
}

impl Request {
    pub fn evaluate(&self, budget: usize) -> Result<Value, Failure> {
        match self {
            Request::Wps { weights } => records::principal_wps(&wide(weights)),
            Request::Wci { weights, degrees } => records::principal_wci(&wide(weights), &wide(degrees)),
            Request::Brieskorn { exponents } => records::principal_brieskorn(&wide(exponents)),
            Request::OrbitWps {
                weights,
                support,
                allow_extrapolation,
            } => records::orbit_wps(&wide(weights), support, *allow_extrapolation),
            Request::OrbitBrieskorn {
                exponents,
                support,
                allow_extrapolation,
            } => records::orbit_brieskorn(&wide(exponents), support, *allow_extrapolation),
            Request::Teardrop { m, degree } => records::teardrop_record(&Int::from(*m), *degree),
            Request::Verify(Check::ChartIntegral { w0, w1, tol }) => records::chart_record(*w0, *w1, *tol, budget),
            Request::Verify(Check::Winding { rates }) => records::winding_record(rates),
            Request::Verify(Check::ScalarCz { t }) => {
                let t: Rational<Int> = t.parse().map_err(Failure::from)?;
                records::scalar_cz_record(&t)
            }
        }
    }
}

/// Splits off the optional `id` and evaluates one line.
fn process_line(line: &str, budget: usize) -> (Value, Result<Value, Failure>) {
    let mut object = match serde_json::from_str::<Value>(line) {
        Ok(Value::Object(m)) => m,
        Ok(_) => return (Value::Null, Err(Failure::parse("record is not a JSON object"))),
        Err(e) => return (Value::Null, Err(Failure::parse(format!("malformed JSON: {e}")))),
    };
    let id = object.remove("id").unwrap_or(Value::Null);
    let result = serde_json::from_value::<Request>(Value::Object(object))
        .map_err(|e| Failure::parse(format!("invalid record: {e}")))
        .and_then(|req| req.evaluate(budget));
    (id, result)
}

/// One output record per nonblank input line, in input order.
pub fn run_batch_text(text: &str, budget: usize) -> Vec<Value> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, line)| {
            let (id, result) = process_line(line, budget);
            let mut rec = Map::new();
            rec.insert("id".into(), id);
            rec.insert("line".into(), Value::from(i + 1));
            match result {
                Ok(v) => {
                    rec.insert("status".into(), Value::from("ok"));
                    rec.insert("result".into(), v);
                }
                Err(f) => {
                    rec.insert("status".into(), Value::from("error"));
                    rec.insert("error".into(), f.to_json());
                }
            }
            Value::Object(rec)
        })
        .collect()
}

/// Exit code of a batch: 0 when every record succeeded, otherwise the
/// largest per-record code.
pub fn batch_exit_code(records: &[Value]) -> i32 {
    records
        .iter()
        .filter_map(|r| r.pointer("/error/exit_code").and_then(Value::as_i64))
        .max()
        .map_or(0, |c| c as i32)
}

pub(crate) fn run_batch(path: &std::path::Path, budget: usize, json: bool) -> Outcome {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            return Outcome {
                code: 1,
                stdout: String::new(),
                stderr: format!("error: cannot read {}: {e}\n", path.display()),
            }
        }
    };
    let out = run_batch_text(&text, budget);
    let mut stdout = String::new();
    let mut stderr = String::new();
    for rec in &out {
        if json {
            stdout.push_str(&serde_json::to_string(rec).expect("JSON values serialize"));
            stdout.push('\n');
        } else {
            let label = match &rec["id"] {
                Value::Null => format!("line {}", rec["line"]),
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            stdout.push_str(&format!("[{label}] {}\n", rec["status"].as_str().unwrap_or_default()));
            stdout.push_str(&render::table(rec.get("result").unwrap_or(&rec["error"]), 2));
        }
        if let Some(err) = rec.get("error") {
            stderr.push_str(&format!(
                "line {}: {}\n",
                rec["line"],
                err["message"].as_str().unwrap_or_default()
            ));
        }
    }
    Outcome {
        code: batch_exit_code(&out),
        stdout,
        stderr,
    }
}
