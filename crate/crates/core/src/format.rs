//! Plain-text coloring format.
//!
//! ```text
//! # optional comment lines
//! n k
//! c(0,1)
//! c(0,2) c(1,2)
//! ...
//! ```
//!
//! Row `i` (for `i = 1..n`) lists the colors of `{j, i}` for `j < i`. Lines
//! starting with `#` are skipped anywhere. The file must end with a newline.

use std::fmt::Write as _;

use crate::bits::BitWord;
use crate::coloring::{ColoredCompleteGraph, Color};
use crate::error::{Error, Result};

pub const RECIPE_PREFIX: &str = "# recipe: ";

/// Serializes with no comment header.
pub fn to_text<W: BitWord>(g: &ColoredCompleteGraph<W>) -> String {
    to_text_with_comments(g, &[])
}

/// Serializes, writing each entry of `comments` as a `#` line before the header.
pub fn to_text_with_comments<W: BitWord>(g: &ColoredCompleteGraph<W>, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        for line in c.lines() {
            if line.starts_with('#') {
                out.push_str(line);
            } else {
                out.push_str("# ");
                out.push_str(line);
            }
            out.push('\n');
        }
    }
    let _ = writeln!(out, "{} {}", g.n(), g.palette());
    let colors = g.lower_triangle();
    let mut idx = 0;
    for i in 1..g.n() {
        for j in 0..i {
            if j > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{}", colors[idx]);
            idx += 1;
        }
        out.push('\n');
    }
    out
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split_terminator('\n')
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
        .filter(|(_, l)| !l.trim_start().starts_with('#'))
}

fn parse_header(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let err = |msg: &str| Error::Parse { line: line_no, msg: msg.to_string() };
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(err("expected header \"n k\""));
    }
    let n: usize = fields[0].parse().map_err(|_| err("vertex count is not a number"))?;
    let k: usize = fields[1].parse().map_err(|_| err("palette size is not a number"))?;
    if n == 0 {
        return Err(err("vertex count must be at least 1"));
    }
    if k == 0 || k > Color::MAX as usize {
        return Err(err("palette size must be in 1..=255"));
    }
    Ok((n, k))
}

/// Reads only the vertex count from the header.
pub fn peek_order(text: &str) -> Result<usize> {
    match content_lines(text).next() {
        Some((no, line)) => parse_header(no, line).map(|(n, _)| n),
        None => Err(Error::Parse { line: 1, msg: "missing header".into() }),
    }
}

pub fn parse<W: BitWord>(text: &str) -> Result<ColoredCompleteGraph<W>> {
    let mut lines = content_lines(text);
    let (header_no, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
    let (n, k) = parse_header(header_no, header)?;
    if n > W::BITS {
        return Err(Error::Parse {
            line: header_no,
            msg: format!("{n} vertices exceed the limit of {}", W::BITS),
        });
    }
    let total_lines = text.split_terminator('\n').count();
    let mut colors = Vec::with_capacity(n * (n - 1) / 2);
    let mut last_line = header_no;
    for row in 1..n {
        let Some((no, line)) = lines.next() else {
            return Err(Error::Parse {
                line: total_lines + 1,
                msg: format!("expected {row} entries"),
            });
        };
        last_line = no;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != row {
            return Err(Error::Parse { line: no, msg: format!("expected {row} entries") });
        }
        for (j, f) in fields.iter().enumerate() {
            let c: Color = f.parse().map_err(|_| Error::Parse {
                line: no,
                msg: format!("entry {} is not a color id: {f:?}", j + 1),
            })?;
            if c == 0 || c as usize > k {
                return Err(Error::Parse {
                    line: no,
                    msg: format!("color {c} outside palette 1..={k}"),
                });
            }
            colors.push(c);
        }
    }
    if let Some((no, _)) = lines.next() {
        return Err(Error::Parse { line: no, msg: "unexpected line after last row".into() });
    }
    if !text.ends_with('\n') {
        return Err(Error::Parse { line: last_line, msg: "missing trailing newline".into() });
    }
    ColoredCompleteGraph::from_lower_triangle(n, k, colors)
}

/// Payloads of all `# recipe: ` comment lines, in file order.
pub fn recipe_lines(text: &str) -> Vec<&str> {
    text.lines().filter_map(|l| l.strip_prefix(RECIPE_PREFIX)).collect()
}
