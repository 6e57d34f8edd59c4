//! The scheme file format.
//!
//! ```text
//! RINGSTORE v1
//! n=<int> alpha=<int> M=<int> q=<prime>
//! G=
//! <row 0: n*alpha space-separated integers in [0, q)>
//! ...
//! <row M-1>
//! ```
//!
//! Newlines are LF, rows carry single spaces and no trailing whitespace,
//! and the file ends with a newline. Parsing is strict so that
//! serialize(parse(t)) == t and parse(serialize(s)) == s hold byte for
//! byte.

use ringstore_core::{make_scheme, FieldSpec, Matrix, Scheme};

use crate::error::CliError;

pub const MAGIC: &str = "RINGSTORE v1";

/// Renders a scheme in the file format. Output is deterministic.
pub fn scheme_serialize(s: &Scheme) -> String {
    let mut out = String::new();
    out.push_str(MAGIC);
    out.push('\n');
    out.push_str(&format!(
        "n={} alpha={} M={} q={}\n",
        s.node_count(),
        s.alpha(),
        s.data_len(),
        s.field().prime()
    ));
    out.push_str("G=\n");
    let g = s.generator();
    for r in 0..g.rows() {
        let row: Vec<String> = g.row(r).iter().map(u64::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a scheme file, reporting the offending line on format errors and
/// the violated condition on invariant errors.
pub fn scheme_parse(text: &str) -> Result<Scheme, CliError> {
    let parse_err = |line: usize, message: String| CliError::Parse { line, message };
    if !text.ends_with('\n') {
        return Err(parse_err(
            text.lines().count(),
            "file must end with a newline".into(),
        ));
    }
    let mut lines = text.split('\n');
    let magic = lines.next().unwrap_or_default();
    if magic != MAGIC {
        return Err(parse_err(1, format!("expected header '{MAGIC}'")));
    }

    let params_line = lines
        .next()
        .ok_or_else(|| parse_err(2, "missing parameter line".into()))?;
    let tokens: Vec<&str> = params_line.split(' ').collect();
    if tokens.len() != 4 {
        return Err(parse_err(
            2,
            "expected 'n=<int> alpha=<int> M=<int> q=<prime>'".into(),
        ));
    }
    let field_value = |token: &str, key: &str| -> Result<u64, CliError> {
        token
            .strip_prefix(&format!("{key}="))
            .and_then(|v| v.parse::<u64>().ok())
            .ok_or_else(|| parse_err(2, format!("expected {key}=<int>, got '{token}'")))
    };
    let n = field_value(tokens[0], "n")? as usize;
    let alpha = field_value(tokens[1], "alpha")? as usize;
    let m = field_value(tokens[2], "M")? as usize;
    let q = field_value(tokens[3], "q")?;
    if n == 0 || alpha == 0 || m == 0 {
        return Err(parse_err(2, "n, alpha and M must be positive".into()));
    }
    let field = FieldSpec::new(q)
        .map_err(|e| parse_err(2, format!("q={q} is not a usable prime ({e})")))?;

    let g_line = lines
        .next()
        .ok_or_else(|| parse_err(3, "missing 'G=' line".into()))?;
    if g_line != "G=" {
        return Err(parse_err(3, format!("expected 'G=', got '{g_line}'")));
    }

    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(m);
    for r in 0..m {
        let line_no = 4 + r;
        let line = lines
            .next()
            .filter(|l| !l.is_empty())
            .ok_or_else(|| parse_err(line_no, format!("missing matrix row {r}")))?;
        let mut row = Vec::with_capacity(n * alpha);
        for (c, token) in line.split(' ').enumerate() {
            let value: u64 = token.parse().map_err(|_| {
                parse_err(line_no, format!("column {c}: '{token}' is not an integer"))
            })?;
            if value >= q {
                return Err(parse_err(
                    line_no,
                    format!("column {c}: {value} is outside [0, {q})"),
                ));
            }
            row.push(value);
        }
        if row.len() != n * alpha {
            return Err(parse_err(
                line_no,
                format!("row has {} entries, expected n*alpha = {}", row.len(), n * alpha),
            ));
        }
        rows.push(row);
    }
    for (extra, line) in lines.enumerate() {
        if !line.is_empty() {
            return Err(parse_err(
                4 + m + extra,
                "unexpected content after the last matrix row".into(),
            ));
        }
    }

    let g = Matrix::from_rows(field, &rows)
        .map_err(|e| parse_err(4, format!("bad matrix: {e}")))?;
    Ok(make_scheme(g, n, alpha)?)
}
