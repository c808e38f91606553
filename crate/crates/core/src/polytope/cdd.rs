//! cdd-style text formats.
//!
//! H-representation (`.ine`): each row `b a_1 … a_d` stands for
//! `b + a·x ≥ 0`; rows listed on the `linearity` line are equalities.
//!
//! ```text
//! H-representation
//! linearity 1 1
//! begin
//!  3 3 integer
//!  1 -1 -1
//!  1 1 0
//!  1 0 1
//! end
//! ```
//!
//! V-representation (`.ext`): each row `1 x_1 … x_d` is a point. Rays
//! (leading 0) are not supported. Lines starting with `*` are comments.
//! Numbers are integers or `p/q` rationals.

use std::fmt::Write as _;
use std::str::FromStr;

use num_traits::{One, Zero};

use super::form::{FormKind, LinearForm};
use super::linear::Rational;
use crate::error::{Error, Result};

fn number_type<'a>(mut values: impl Iterator<Item = &'a Rational>) -> &'static str {
    if values.all(|x| x.is_integer()) {
        "integer"
    } else {
        "rational"
    }
}

/// Writes forms as an H-representation. Equalities come first and are
/// declared on the `linearity` line. Row order is otherwise preserved.
pub fn write_ine(forms: &[LinearForm]) -> String {
    let mut ordered: Vec<&LinearForm> = forms.iter().filter(|f| f.is_equality()).collect();
    let eq = ordered.len();
    ordered.extend(forms.iter().filter(|f| !f.is_equality()));
    let d = ordered.first().map_or(0, |f| f.dimension());
    let kind = number_type(ordered.iter().flat_map(|f| f.coefficients.iter().chain([&f.constant])));

    let mut out = String::from("H-representation\n");
    if eq > 0 {
        let idx: Vec<String> = (1..=eq).map(|i| i.to_string()).collect();
        let _ = writeln!(out, "linearity {} {}", eq, idx.join(" "));
    }
    out.push_str("begin\n");
    let _ = writeln!(out, " {} {} {}", ordered.len(), d + 1, kind);
    for f in ordered {
        let mut row = vec![f.constant.to_string()];
        row.extend(f.coefficients.iter().map(|c| c.to_string()));
        let _ = writeln!(out, " {}", row.join(" "));
    }
    out.push_str("end\n");
    out
}

/// Writes points as a V-representation.
pub fn write_ext(points: &[Vec<i64>]) -> String {
    let d = points.first().map_or(0, Vec::len);
    let mut out = String::from("V-representation\nbegin\n");
    let _ = writeln!(out, " {} {} integer", points.len(), d + 1);
    for p in points {
        let row: Vec<String> = std::iter::once("1".to_string())
            .chain(p.iter().map(|x| x.to_string()))
            .collect();
        let _ = writeln!(out, " {}", row.join(" "));
    }
    out.push_str("end\n");
    out
}

struct Block {
    linearity: Vec<usize>,
    rows: Vec<Vec<Rational>>,
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column: 1,
        message: message.into(),
    }
}

fn parse_block(text: &str, header: &str) -> Result<Block> {
    let mut linearity = Vec::new();
    let mut seen_header = false;
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('*'));

    let mut size = None;
    for (n, line) in lines.by_ref() {
        if line == header {
            seen_header = true;
        } else if line == "H-representation" || line == "V-representation" {
            return Err(err(n, format!("expected {header}, found {line}")));
        } else if let Some(rest) = line.strip_prefix("linearity") {
            let nums = rest
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| err(n, format!("bad linearity entry {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            let (&k, idx) = nums.split_first().ok_or_else(|| err(n, "empty linearity line"))?;
            if idx.len() != k {
                return Err(err(n, format!("linearity declares {k} rows but lists {}", idx.len())));
            }
            linearity = idx.to_vec();
        } else if line == "begin" {
            let (n, dims) = lines.next().ok_or_else(|| err(n, "missing size line after begin"))?;
            let parts: Vec<&str> = dims.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(err(n, "size line must read: rows columns numbertype"));
            }
            let m = parts[0].parse::<usize>().map_err(|_| err(n, "bad row count"))?;
            let c = parts[1].parse::<usize>().map_err(|_| err(n, "bad column count"))?;
            if !matches!(parts[2], "integer" | "rational") {
                return Err(err(n, format!("unsupported number type {:?}", parts[2])));
            }
            if c == 0 {
                return Err(err(n, "column count must be positive"));
            }
            size = Some((m, c));
            break;
        }
        // other cdd options (names, project lines) are ignored
    }
    if !seen_header {
        return Err(err(1, format!("missing {header} header")));
    }
    let (m, c) = size.ok_or_else(|| err(1, "missing begin"))?;
    let mut rows = Vec::with_capacity(m);
    let mut ended = false;
    for (n, line) in lines.by_ref() {
        if line == "end" {
            ended = true;
            break;
        }
        let row = line
            .split_whitespace()
            .map(|t| Rational::from_str(t).map_err(|_| err(n, format!("bad number {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != c {
            return Err(err(n, format!("expected {c} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    if !ended {
        return Err(err(text.lines().count(), "missing end"));
    }
    if rows.len() != m {
        return Err(err(1, format!("size line declares {m} rows, found {}", rows.len())));
    }
    if let Some(&bad) = linearity.iter().find(|&&i| i == 0 || i > m) {
        return Err(err(1, format!("linearity index {bad} out of range")));
    }
    Ok(Block { linearity, rows })
}

pub fn parse_ine(text: &str) -> Result<Vec<LinearForm>> {
    let block = parse_block(text, "H-representation")?;
    block
        .rows
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            let constant = row.remove(0);
            let kind = if block.linearity.contains(&(i + 1)) {
                FormKind::Equality
            } else {
                FormKind::InequalityGe
            };
            LinearForm::new(row, constant, kind)
        })
        .collect()
}

pub fn parse_ext(text: &str) -> Result<Vec<Vec<Rational>>> {
    let block = parse_block(text, "V-representation")?;
    block
        .rows
        .into_iter()
        .map(|mut row| {
            let lead = row.remove(0);
            if lead.is_zero() {
                Err(Error::Unsupported("rays in V-representation".into()))
            } else if !lead.is_one() {
                Err(Error::Unsupported("V-representation rows must start with 1".into()))
            } else {
                Ok(row)
            }
        })
        .collect()
}
