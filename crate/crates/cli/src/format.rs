//! Text and JSON encodings of friezes, SL-friezes and polygons.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use symplectic_frieze::legendrian::{FormVariant, Polygon, SymplecticForm, Vertex};
use symplectic_frieze::{FriezeGrid, GridIndex, Scalar, ScalarKind, SlFrieze};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// A frieze plus optional notes on how it was produced.
#[derive(Clone, Debug)]
pub struct FriezeDocument<T> {
    pub grid: FriezeGrid<T>,
    pub provenance: Option<serde_json::Value>,
}

#[derive(Serialize, Deserialize)]
struct JsonFrieze {
    width: usize,
    period: usize,
    scalar: String,
    entries: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    provenance: Option<serde_json::Value>,
}

fn parse_value<T: Scalar>(tok: &str, line: usize, col: usize) -> Result<T, CliError> {
    T::parse_scalar(tok).ok_or_else(|| CliError::parse(line, col, format!("`{tok}` is not a {} scalar", T::KIND)))
}

fn header_fields(line: &str, tag: &str) -> Option<BTreeMap<String, String>> {
    let rest = line.strip_prefix('#')?.trim();
    let rest = if tag.is_empty() {
        rest
    } else {
        rest.strip_prefix(tag)?.trim()
    };
    Some(
        rest.split_whitespace()
            .filter_map(|kv| kv.split_once('='))
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect(),
    )
}

fn field<V: std::str::FromStr>(fields: &BTreeMap<String, String>, key: &str) -> Result<V, CliError> {
    fields
        .get(key)
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| CliError::parse(1, 1, format!("header lacks a valid `{key}`")))
}

fn check_kind<T: Scalar>(fields: &BTreeMap<String, String>) -> Result<(), CliError> {
    match fields.get("scalar") {
        Some(k) if k != T::KIND.name() => Err(CliError::Usage(format!(
            "input holds {k} scalars but --scalar is {}",
            T::KIND
        ))),
        _ => Ok(()),
    }
}

/// Body lines with their 1-based line numbers, skipping blanks and later comments.
fn body(input: &str) -> Vec<(usize, &str)> {
    input
        .lines()
        .enumerate()
        .skip(1)
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(n, l)| (n + 1, l))
        .collect()
}

/// Whitespace-separated tokens with 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (k, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(k),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..k]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn pad_rows(rows: Vec<Vec<String>>) -> String {
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

impl<T: Scalar> FriezeDocument<T> {
    pub fn new(grid: FriezeGrid<T>) -> Self {
        Self { grid, provenance: None }
    }

    pub fn with_provenance(mut self, p: serde_json::Value) -> Self {
        self.provenance = Some(p);
        self
    }

    /// One line per interior row over display columns `0..2n`; black entries carry `*`.
    pub fn to_text(&self) -> String {
        let g = &self.grid;
        let mut out = format!("# width={} period={} scalar={}\n", g.width(), g.period(), T::KIND);
        let rows = (0..g.width() as i64)
            .map(|r| {
                (0..g.columns() as i64)
                    .map(|x| {
                        let mark = if GridIndex::at(x, r).is_black() { "*" } else { "" };
                        format!("{mark}{}", g.at(x, r).canonical())
                    })
                    .collect()
            })
            .collect();
        out.push_str(&pad_rows(rows));
        out
    }

    pub fn to_json(&self) -> String {
        let g = &self.grid;
        let doc = JsonFrieze {
            width: g.width(),
            period: g.period(),
            scalar: T::KIND.name().to_string(),
            entries: g
                .domain()
                .into_iter()
                .map(|idx| (format!("{},{}", idx.i2, idx.j2), g.entry(idx).canonical()))
                .collect(),
            provenance: self.provenance.clone(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
        }
    }

    /// Parses either encoding and checks the local rules.
    pub fn parse(input: &str) -> Result<Self, CliError> {
        let doc = if input.trim_start().starts_with('{') {
            Self::parse_json(input)?
        } else {
            Self::parse_text(input)?
        };
        if let Some(v) = doc.grid.check_local_rules().first() {
            return Err(CliError::Verification(format!(
                "{:?} rule fails at {}: {} != {}",
                v.rule,
                v.at,
                v.lhs.canonical(),
                v.rhs.canonical()
            )));
        }
        Ok(doc)
    }

    fn parse_json(input: &str) -> Result<Self, CliError> {
        let doc: JsonFrieze =
            serde_json::from_str(input).map_err(|e| CliError::parse(e.line(), e.column(), e.to_string()))?;
        if doc.scalar != T::KIND.name() {
            return Err(CliError::Usage(format!(
                "input holds {} scalars but --scalar is {}",
                doc.scalar,
                T::KIND
            )));
        }
        if doc.period != doc.width + 5 {
            return Err(CliError::parse(1, 1, format!("period {} does not match width {}", doc.period, doc.width)));
        }
        let probe = FriezeGrid::from_fn(doc.width, |_| T::zero());
        let mut values = BTreeMap::new();
        for idx in probe.domain() {
            let key = format!("{},{}", idx.i2, idx.j2);
            let raw = doc
                .entries
                .get(&key)
                .ok_or_else(|| CliError::parse(1, 1, format!("missing entry {key}")))?;
            let v = T::parse_scalar(raw)
                .ok_or_else(|| CliError::parse(1, 1, format!("entry {key}: `{raw}` is not a {} scalar", T::KIND)))?;
            values.insert((idx.i2, idx.j2), v);
        }
        if let Some(extra) = doc.entries.keys().find(|k| {
            let mut it = k.split(',').map(|p| p.parse::<i64>());
            !matches!((it.next(), it.next()), (Some(Ok(a)), Some(Ok(b))) if values.contains_key(&(a, b)))
        }) {
            return Err(CliError::parse(1, 1, format!("entry {extra} lies outside the fundamental domain")));
        }
        let grid = FriezeGrid::from_fn(doc.width, |idx| values[&(idx.i2, idx.j2)].clone());
        Ok(Self {
            grid,
            provenance: doc.provenance,
        })
    }

    fn parse_text(input: &str) -> Result<Self, CliError> {
        let first = input.lines().next().unwrap_or("");
        let fields = header_fields(first, "")
            .filter(|f| f.contains_key("width"))
            .ok_or_else(|| CliError::parse(1, 1, "expected `# width=W period=N scalar=K` header".into()))?;
        check_kind::<T>(&fields)?;
        let width: usize = field(&fields, "width")?;
        let columns = 2 * (width + 5);
        let lines = body(input);
        if lines.len() != width {
            let line = lines.get(width).map_or(input.lines().count() + 1, |l| l.0);
            return Err(CliError::parse(line, 1, format!("expected {width} rows, found {}", lines.len())));
        }
        let mut rows = Vec::with_capacity(width);
        for (r, (ln, text)) in lines.iter().enumerate() {
            let toks = tokens(text);
            if toks.len() != columns {
                let col = toks.get(columns).map_or(text.len() + 1, |t| t.0);
                return Err(CliError::parse(*ln, col, format!("expected {columns} entries, found {}", toks.len())));
            }
            let mut row = Vec::with_capacity(columns);
            for (x, (col, tok)) in toks.into_iter().enumerate() {
                let black = GridIndex::at(x as i64, r as i64).is_black();
                let (marked, value) = match tok.strip_prefix('*') {
                    Some(v) => (true, v),
                    None => (false, tok),
                };
                if marked != black {
                    let want = if black { "a black (`*`)" } else { "a white" };
                    return Err(CliError::parse(*ln, col, format!("expected {want} entry")));
                }
                row.push(parse_value::<T>(value, *ln, col)?);
            }
            rows.push(row);
        }
        let grid = FriezeGrid::from_rows(width, &rows).map_err(|e| CliError::parse(1, 1, e.to_string()))?;
        Ok(Self::new(grid))
    }
}

/// SL-frieze text: `# sl k=K width=W scalar=S`, then row `r` listing `d[i][i+r]` for `i = 0..n`.
pub fn sl_to_text<T: Scalar>(f: &SlFrieze<T>) -> String {
    let mut out = format!("# sl k={} width={} scalar={}\n", f.order(), f.width(), T::KIND);
    let rows = (0..f.width() as i64)
        .map(|r| f.row(r).iter().map(Scalar::canonical).collect())
        .collect();
    out.push_str(&pad_rows(rows));
    out
}

pub fn sl_parse<T: Scalar>(input: &str) -> Result<SlFrieze<T>, CliError> {
    let first = input.lines().next().unwrap_or("");
    let fields = header_fields(first, "sl")
        .ok_or_else(|| CliError::parse(1, 1, "expected `# sl k=K width=W scalar=S` header".into()))?;
    check_kind::<T>(&fields)?;
    let k: usize = field(&fields, "k")?;
    let width: usize = field(&fields, "width")?;
    let n = width + k + 2;
    let lines = body(input);
    if lines.len() != width {
        return Err(CliError::parse(1, 1, format!("expected {width} rows, found {}", lines.len())));
    }
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(width);
    for (ln, text) in lines {
        let toks = tokens(text);
        if toks.len() != n {
            return Err(CliError::parse(ln, 1, format!("expected {n} entries, found {}", toks.len())));
        }
        rows.push(
            toks.into_iter()
                .map(|(col, tok)| parse_value::<T>(tok, ln, col))
                .collect::<Result<_, _>>()?,
        );
    }
    Ok(SlFrieze::from_fn(k, width, |i, j| rows[(j - i) as usize][i as usize].clone()))
}

/// Polygon text: `# polygon form=omega|omega-check a=A first=M scalar=S`, then one vertex per line.
pub fn polygon_to_text<T: Scalar>(p: &Polygon<T>) -> String {
    let variant = match p.form.variant {
        FormVariant::Omega => "omega",
        FormVariant::OmegaCheck => "omega-check",
    };
    let mut out = format!(
        "# polygon form={variant} a={} first={} scalar={}\n",
        p.form.a.canonical(),
        p.first,
        T::KIND
    );
    let rows = p
        .vertices
        .iter()
        .map(|v| v.iter().map(Scalar::canonical).collect())
        .collect();
    out.push_str(&pad_rows(rows));
    out
}

pub fn polygon_parse<T: Scalar>(input: &str) -> Result<Polygon<T>, CliError> {
    let first = input.lines().next().unwrap_or("");
    let fields = header_fields(first, "polygon")
        .ok_or_else(|| CliError::parse(1, 1, "expected `# polygon form=.. a=.. first=..` header".into()))?;
    check_kind::<T>(&fields)?;
    let a_raw = fields.get("a").cloned().unwrap_or_else(|| "0".into());
    let a = T::parse_scalar(&a_raw).ok_or_else(|| CliError::parse(1, 1, format!("bad form parameter `{a_raw}`")))?;
    let form = match fields.get("form").map(String::as_str) {
        Some("omega") => SymplecticForm::omega(a),
        Some("omega-check") | None => SymplecticForm::omega_check(a),
        Some(other) => return Err(CliError::parse(1, 1, format!("unknown form `{other}`"))),
    };
    let first_col: i64 = fields.get("first").and_then(|v| v.parse().ok()).unwrap_or(0);
    let mut vertices: Vec<Vertex<T>> = Vec::new();
    for (ln, text) in body(input) {
        let toks = tokens(text);
        if toks.len() != 4 {
            return Err(CliError::parse(ln, 1, format!("a vertex needs 4 coordinates, found {}", toks.len())));
        }
        let vals: Vec<T> = toks
            .into_iter()
            .map(|(col, tok)| parse_value::<T>(tok, ln, col))
            .collect::<Result<_, _>>()?;
        let mut it = vals.into_iter();
        vertices.push([(); 4].map(|_| it.next().expect("4 values")));
    }
    Ok(Polygon::new(vertices, form, first_col))
}

pub fn matrix_text<T: Scalar>(m: &symplectic_frieze::Matrix<T>) -> String {
    let rows = (0..m.rows())
        .map(|r| m.row(r).iter().map(Scalar::canonical).collect())
        .collect();
    pad_rows(rows)
}

pub fn list_text<T: Scalar>(v: &[T]) -> String {
    let mut s = String::new();
    for (k, x) in v.iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        let _ = write!(s, "{}", x.canonical());
    }
    s
}

pub fn kind_of(input: &str) -> Option<ScalarKind> {
    if input.trim_start().starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(input).ok()?;
        v.get("scalar")?.as_str()?.parse().ok()
    } else {
        input
            .lines()
            .next()
            .and_then(|l| header_fields(l, "").or_else(|| header_fields(l, "sl")).or_else(|| header_fields(l, "polygon")))
            .and_then(|f| f.get("scalar").and_then(|s| s.parse().ok()))
    }
}
