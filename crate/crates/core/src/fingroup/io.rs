//! Cayley-table text format.
//!
//! ```text
//! # label: <text>          (optional)
//! N
//! x·0 x·1 … x·(N-1)        (one row per element, N rows)
//! ```
//!
//! Element 0 is the identity, fields are single-space separated, lines end in
//! LF and carry no trailing whitespace.

use std::fmt::Write as _;
use std::path::Path;

use super::FiniteGroup;
use crate::{Error, Result};

pub fn write_cayley(g: &FiniteGroup) -> String {
    let n = g.order();
    let mut out = String::with_capacity(n * n * 4 + 32);
    if let Some(label) = g.label() {
        let _ = writeln!(out, "# label: {}", label.replace('\n', " "));
    }
    let _ = writeln!(out, "{n}");
    for x in g.elements() {
        let mut first = true;
        for v in g.row(x) {
            if !first {
                out.push(' ');
            }
            first = false;
            let _ = write!(out, "{v}");
        }
        out.push('\n');
    }
    out
}

pub fn parse_cayley(text: &str) -> Result<FiniteGroup> {
    let mut lines = text.lines().peekable();
    let mut label = None;
    if let Some(first) = lines.peek() {
        if let Some(rest) = first.strip_prefix("# label: ") {
            label = Some(rest.to_string());
            lines.next();
        }
    }
    let order: usize = lines
        .next()
        .ok_or_else(|| Error::Parse("empty Cayley table".into()))?
        .trim()
        .parse()
        .map_err(|e| Error::Parse(format!("bad order line: {e}")))?;
    if order == 0 {
        return Err(Error::Parse("order must be positive".into()));
    }
    let mut rows = Vec::with_capacity(order);
    for (i, line) in lines.by_ref().take(order).enumerate() {
        let row = line
            .split(' ')
            .map(|f| {
                f.parse::<usize>()
                    .map_err(|e| Error::Parse(format!("row {i}: bad entry {f:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    if rows.len() != order {
        return Err(Error::Parse(format!(
            "expected {order} rows, found {}",
            rows.len()
        )));
    }
    if lines.any(|l| !l.is_empty()) {
        return Err(Error::Parse("trailing content after the table".into()));
    }
    let g = FiniteGroup::from_table(order, &rows)?;
    Ok(match label {
        Some(l) => g.with_label(l),
        None => g,
    })
}

pub fn read_cayley_file(path: impl AsRef<Path>) -> Result<FiniteGroup> {
    parse_cayley(&std::fs::read_to_string(path)?)
}

pub fn write_cayley_file(g: &FiniteGroup, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, write_cayley(g))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::super::{cyclic, dicyclic};
    use super::*;

    #[test]
    fn z3_is_bit_exact() {
        let g = cyclic(3).unwrap();
        assert_eq!(write_cayley(&g), "# label: C3\n3\n0 1 2\n1 2 0\n2 0 1\n");
    }

    #[test]
    fn round_trip_preserves_table_and_label() {
        let g = dicyclic(12).unwrap();
        let back = parse_cayley(&write_cayley(&g)).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn unlabeled_table_parses() {
        let g = parse_cayley("2\n0 1\n1 0\n").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.label(), None);
    }

    #[test]
    fn malformed_inputs_rejected() {
        assert!(parse_cayley("").is_err());
        assert!(parse_cayley("2\n0 1\n").is_err());
        assert!(parse_cayley("2\n0  1\n1 0\n").is_err());
        assert!(parse_cayley("2\n0 1\n1 0\n1 0\n").is_err());
        assert!(matches!(
            parse_cayley("2\n0 1\n1 1\n"),
            Err(Error::NotAGroup(_))
        ));
    }
}
