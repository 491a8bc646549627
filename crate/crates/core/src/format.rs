//! Cayley-table text format.
//!
//! ```text
//! # comment
//! loop 3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! %ldiv        (optional, n rows)
//! %rdiv        (optional, n rows)
//! %inv         (optional, groups only, one row of n entries)
//! ```
//!
//! Element 0 must be the unit. Divisions and inverses that are omitted are
//! derived from the multiplication table.

use std::fmt::Write as _;

use crate::algebra::{AlgebraRef, Elem, FiniteAlgebra, Kind, RawTables};
use crate::error::{Error, Result};

struct Line<'a> {
    number: usize,
    text: &'a str,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn tokens<'a>(line: &Line<'a>) -> impl Iterator<Item = (usize, &'a str)> + 'a {
    let text = line.text;
    text.split_whitespace().map(move |tok| {
        let column = tok.as_ptr() as usize - text.as_ptr() as usize + 1;
        (column, tok)
    })
}

fn parse_row(line: &Line<'_>, n: usize) -> Result<Vec<Elem>> {
    let mut row = Vec::with_capacity(n);
    for (column, tok) in tokens(line) {
        let v: Elem = tok
            .parse()
            .map_err(|_| parse_error(line.number, column, format!("`{tok}` is not an element index")))?;
        if v as usize >= n {
            return Err(parse_error(
                line.number,
                column,
                format!("entry {v} is outside 0..{n}"),
            ));
        }
        row.push(v);
    }
    if row.len() != n {
        return Err(parse_error(
            line.number,
            line.text.len() + 1,
            format!("expected {n} entries, found {}", row.len()),
        ));
    }
    Ok(row)
}

/// Parses the text format and validates the result.
pub fn parse(text: &str) -> Result<AlgebraRef> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| Line {
            number: i + 1,
            text: raw.split('#').next().unwrap_or(""),
        })
        .filter(|l| !l.text.trim().is_empty());

    let header = lines
        .next()
        .ok_or_else(|| parse_error(1, 1, "missing `kind order` header"))?;
    let head: Vec<(usize, &str)> = tokens(&header).collect();
    if head.len() != 2 {
        return Err(parse_error(header.number, 1, "header must be `kind order`"));
    }
    let kind: Kind = head[0]
        .1
        .parse()
        .map_err(|_| parse_error(header.number, head[0].0, format!("unknown kind `{}`", head[0].1)))?;
    let n: usize = match head[1].1.parse() {
        Ok(n) if n > 0 => n,
        _ => {
            return Err(parse_error(
                header.number,
                head[1].0,
                format!("`{}` is not a positive order", head[1].1),
            ))
        }
    };

    let read_table = |lines: &mut dyn Iterator<Item = Line<'_>>, name: &str, after: usize| -> Result<Vec<Vec<Elem>>> {
        let mut rows = Vec::with_capacity(n);
        let mut last = after;
        for _ in 0..n {
            let line = lines.next().ok_or_else(|| {
                parse_error(last + 1, 1, format!("`{name}` table ended after {} rows, expected {n}", rows.len()))
            })?;
            last = line.number;
            if line.text.trim_start().starts_with('%') {
                return Err(parse_error(line.number, 1, format!("`{name}` table has only {} rows, expected {n}", rows.len())));
            }
            rows.push(parse_row(&line, n)?);
        }
        Ok(rows)
    };

    let mul = read_table(&mut lines, "mul", header.number)?;
    let mut raw = RawTables::from_mul(mul);
    while let Some(line) = lines.next() {
        let trimmed = line.text.trim();
        match trimmed {
            "%ldiv" | "%rdiv" => {
                let table = read_table(&mut lines, &trimmed[1..], line.number)?;
                let slot = if trimmed == "%ldiv" { &mut raw.ldiv } else { &mut raw.rdiv };
                if slot.replace(table).is_some() {
                    return Err(parse_error(line.number, 1, format!("duplicate `{trimmed}` section")));
                }
            }
            "%inv" => {
                let row_line = lines
                    .next()
                    .ok_or_else(|| parse_error(line.number + 1, 1, "`inv` row missing"))?;
                if raw.inv.replace(parse_row(&row_line, n)?).is_some() {
                    return Err(parse_error(line.number, 1, "duplicate `%inv` section"));
                }
            }
            _ => {
                let column = line.text.len() - line.text.trim_start().len() + 1;
                return Err(parse_error(
                    line.number,
                    column,
                    "unexpected content after the multiplication table",
                ));
            }
        }
    }
    FiniteAlgebra::validate(kind, raw)
}

/// Writes the multiplication table; loops also get their division tables
/// when `divisions` is set.
pub fn serialize(alg: &FiniteAlgebra, divisions: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", alg.kind(), alg.order());
    let mut table = |rows: Vec<Vec<Elem>>| {
        for row in rows {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
    };
    table(alg.mul_table());
    if divisions && alg.kind() == Kind::Loop {
        out.push_str("%ldiv\n");
        let ldiv = alg.ldiv_table();
        let rdiv = alg.rdiv_table();
        for (name, rows) in [("", ldiv), ("%rdiv\n", rdiv)] {
            out.push_str(name);
            for row in rows {
                let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(out, "{}", line.join(" "));
            }
        }
    }
    out
}
