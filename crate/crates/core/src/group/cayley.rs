//! Plain-text Cayley table format.
//!
//! ```text
//! # name: S3
//! 6
//! 0 1 2 3 4 5
//! ...
//! ```
//!
//! Blank lines and lines starting with `#` are ignored, except that a
//! `# name: <text>` comment names the group.

use super::table::{GroupTable, DEFAULT_TABLE_LIMIT, DEFAULT_VALIDATION_LIMIT};
use crate::error::{Error, Result};

pub fn load_cayley_table(text: &str, validate: bool) -> Result<GroupTable> {
    load_cayley_table_with_limits(text, validate, DEFAULT_TABLE_LIMIT, DEFAULT_VALIDATION_LIMIT)
}

pub fn load_cayley_table_with_limits(
    text: &str,
    validate: bool,
    limit: usize,
    validation_limit: usize,
) -> Result<GroupTable> {
    let mut name = String::from("cayley");
    let mut lines = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(n) = comment.trim().strip_prefix("name:") {
                name = n.trim().to_string();
            }
            continue;
        }
        lines.push((lineno + 1, line));
    }
    let (first_no, first) = *lines
        .first()
        .ok_or_else(|| Error::MalformedTable("empty document".into()))?;
    let order: usize = first
        .parse()
        .map_err(|_| Error::MalformedTable(format!("line {first_no}: expected the group order")))?;
    if order == 0 {
        return Err(Error::MalformedTable("order must be positive".into()));
    }
    if order > limit {
        return Err(Error::SizeLimit {
            order: order as u128,
            limit: limit as u128,
        });
    }
    if lines.len() - 1 != order {
        return Err(Error::MalformedTable(format!(
            "expected {order} rows, found {}",
            lines.len() - 1
        )));
    }
    let mut rows = Vec::with_capacity(order);
    for (row_idx, &(lineno, line)) in lines[1..].iter().enumerate() {
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::MalformedTable(format!("line {lineno}: bad entry `{tok}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != order {
            return Err(Error::MalformedTable(format!(
                "line {lineno}: row {row_idx} has {} entries, expected {order}",
                row.len()
            )));
        }
        rows.push(row);
    }
    GroupTable::from_fn_with_limits(name, order, validate, limit, validation_limit, |a, b| rows[a][b])
}

pub fn format_cayley(group: &GroupTable) -> String {
    let n = group.order();
    let mut out = String::with_capacity(n * n * 4 + 32);
    out.push_str("# name: ");
    out.push_str(group.name());
    out.push('\n');
    out.push_str(&n.to_string());
    out.push('\n');
    for a in 0..n {
        let row: Vec<String> = group.row(a).iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
