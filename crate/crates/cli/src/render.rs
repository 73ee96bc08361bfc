use std::fmt::Write;

use serde::{Deserialize, Serialize};

use lumbral_core::algebra::{parse_rational, Rational};
use lumbral_core::verify::{Value, VerificationReport};
use lumbral_core::{Error, Triangle};

use crate::{DobinskiTrace, Format, PolyDoc};

/// JSON form of a triangle. Entries are `p/q` strings, integers without `/1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TriangleDoc {
    pub kind: String,
    pub m: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    pub lambda: Option<String>,
    pub rows: Vec<Vec<String>>,
}

impl TriangleDoc {
    pub fn new(kind: &str, m: Option<u32>, r: Option<u32>, lambda: Option<Rational>, t: &Triangle) -> Self {
        TriangleDoc {
            kind: kind.to_string(),
            m,
            r,
            lambda: lambda.map(|l| l.to_string()),
            rows: t.rows().iter().map(|row| row.iter().map(ToString::to_string).collect()).collect(),
        }
    }

    pub fn to_triangle(&self) -> Result<Triangle, Error> {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Triangle::from_rows(rows).ok_or_else(|| Error::InvalidArgument("rows do not form a triangle".into()))
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn tex_rational(r: &Rational) -> String {
    if r.denom() == &1.into() {
        r.numer().to_string()
    } else if r < &Rational::from_integer(0.into()) {
        format!("-\\frac{{{}}}{{{}}}", -r.numer(), r.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

pub fn triangle(doc: &TriangleDoc, t: &Triangle, format: Format) -> String {
    match format {
        Format::Json => json(doc),
        Format::Csv => doc.rows.iter().map(|row| row.join(",") + "\n").collect(),
        Format::Tex => {
            let width = t.n_max() + 1;
            let mut s = format!("\\begin{{array}}{{r|{}}}\n", "c".repeat(width));
            let header: Vec<String> = (0..width).map(|k| k.to_string()).collect();
            let _ = writeln!(s, "n \\backslash k & {} \\\\ \\hline", header.join(" & "));
            for (n, row) in t.rows().iter().enumerate() {
                let mut cells: Vec<String> = row.iter().map(tex_rational).collect();
                cells.resize(width, String::new());
                let _ = writeln!(s, "{n} & {} \\\\", cells.join(" & "));
            }
            s.push_str("\\end{array}\n");
            s
        }
        Format::Table => {
            let width = doc.rows.iter().flatten().map(String::len).max().unwrap_or(1).max(2);
            let mut s = String::new();
            let _ = write!(s, "{:>3} |", "n");
            for k in 0..doc.rows.len() {
                let _ = write!(s, " {:>width$}", format!("k{k}"));
            }
            s.push('\n');
            for (n, row) in doc.rows.iter().enumerate() {
                let _ = write!(s, "{n:>3} |");
                for cell in row {
                    let _ = write!(s, " {cell:>width$}");
                }
                s.push('\n');
            }
            s
        }
    }
}

pub fn poly(doc: &PolyDoc, format: Format) -> String {
    match format {
        Format::Json => json(doc),
        Format::Csv => {
            let mut s = String::from("degree,coefficient\n");
            for (i, c) in doc.poly.coeffs().iter().enumerate() {
                let _ = writeln!(s, "{i},{c}");
            }
            s
        }
        Format::Tex => format!("{}\n", doc.poly.to_tex()),
        Format::Table => format!("{}\n", doc.poly.to_text()),
    }
}

fn value_text(v: &Value) -> String {
    match v {
        Value::Poly(p) => p.to_text(),
        Value::Number(r) => r.to_string(),
        Value::Float(f) => format!("{f:e}"),
        Value::Bivariate(cs) => cs
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(b, p)| format!("({})*y^{b}", p.to_text()))
            .collect::<Vec<_>>()
            .join(" + "),
    }
}

fn paint(text: &str, code: &str, color: bool) -> String {
    if color {
        format!("\x1b[{code}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

pub fn reports(reports: &[VerificationReport], format: Format, color: bool) -> String {
    match format {
        Format::Json => json(&reports),
        Format::Csv => {
            let mut s = String::from(
                "identity,pass,points,failures,lambda_degree_bound,passing_lambda_samples,certified,max_relative_error\n",
            );
            for r in reports {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{},{}",
                    r.identity,
                    r.passed(),
                    r.grid.len(),
                    r.failures(),
                    r.lambda_degree_bound,
                    r.passing_lambda_samples,
                    r.certified_polynomial_in_lambda,
                    r.max_relative_error.map(|e| format!("{e:e}")).unwrap_or_default()
                );
            }
            s
        }
        Format::Tex => {
            let mut s = String::from(
                "\\begin{tabular}{lrrrc}\nidentity & points & failures & bound & certified \\\\ \\hline\n",
            );
            for r in reports {
                let _ = writeln!(
                    s,
                    "\\texttt{{{}}} & {} & {} & {} & {} \\\\",
                    r.identity,
                    r.grid.len(),
                    r.failures(),
                    r.lambda_degree_bound,
                    if r.certified_polynomial_in_lambda { "yes" } else { "no" }
                );
            }
            s.push_str("\\end{tabular}\n");
            s
        }
        Format::Table => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "{:<20} {:<6} {:>7} {:>8} {:>6} {:>8} {:<9} max_rel_err",
                "identity", "status", "points", "failures", "bound", "samples", "certified"
            );
            for r in reports {
                let status = if r.passed() { paint("PASS", "32", color) } else { paint("FAIL", "31", color) };
                let _ = writeln!(
                    s,
                    "{:<20} {status}   {:>7} {:>8} {:>6} {:>8} {:<9} {}",
                    r.identity.name(),
                    r.grid.len(),
                    r.failures(),
                    r.lambda_degree_bound,
                    r.passing_lambda_samples,
                    if r.certified_polynomial_in_lambda { "yes" } else { "no" },
                    r.max_relative_error.map(|e| format!("{e:e}")).unwrap_or_else(|| "-".into())
                );
                if let Some(w) = &r.witness {
                    let _ = writeln!(s, "  witness at {}", serde_json::to_string(&w.point).expect("serializable"));
                    let _ = writeln!(s, "    lhs: {}", value_text(&w.lhs));
                    let _ = writeln!(s, "    rhs: {}", value_text(&w.rhs));
                    if let Some(d) = &w.detail {
                        let _ = writeln!(s, "    {d}");
                    }
                }
            }
            s
        }
    }
}

pub fn dobinski(trace: &DobinskiTrace, format: Format) -> String {
    match format {
        Format::Json => json(trace),
        Format::Csv => {
            let mut s = String::from("terms,partial_sum,relative_error\n");
            for c in &trace.checkpoints {
                let _ = writeln!(s, "{},{:e},{:e}", c.terms, c.partial_sum, c.relative_error);
            }
            s
        }
        Format::Tex => {
            let mut s = String::from("\\begin{tabular}{rrr}\n$K$ & partial sum & relative error \\\\ \\hline\n");
            for c in &trace.checkpoints {
                let _ = writeln!(s, "{} & {:.15e} & {:.3e} \\\\", c.terms, c.partial_sum, c.relative_error);
            }
            s.push_str("\\end{tabular}\n");
            s
        }
        Format::Table => {
            let mut s = format!(
                "n = {}, lambda = {}, x = {}, reference = {:.17e}\n{:>8} {:>24} {:>12}\n",
                trace.n, trace.lambda, trace.x, trace.reference, "terms", "partial_sum", "rel_err"
            );
            for c in &trace.checkpoints {
                let _ = writeln!(s, "{:>8} {:>24.17e} {:>12.3e}", c.terms, c.partial_sum, c.relative_error);
            }
            let _ = writeln!(s, "final relative error: {:e}", trace.relative_error);
            s
        }
    }
}
