use super::finite_loop::FiniteLoop;
use super::LoopError;
use std::fmt::Write;

/// Parses the text format: a line `n`, then `n` rows of `n` 1-based entries.
pub fn parse_loop(text: &str) -> Result<FiniteLoop, LoopError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| LoopError::Parse("empty input".into()))?;
    let n: usize = header.parse().map_err(|_| LoopError::Parse(format!("bad order line {header:?}")))?;
    let mut rows = Vec::with_capacity(n);
    for (i, line) in lines.enumerate() {
        let row = line
            .split_whitespace()
            .map(|t| match t.parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => Err(LoopError::Parse(format!("row {}: bad entry {t:?}", i + 1))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if rows.len() != n {
        return Err(LoopError::Parse(format!("expected {n} rows, found {}", rows.len())));
    }
    FiniteLoop::from_table(rows)
}

pub fn format_loop(q: &FiniteLoop) -> String {
    let mut s = format!("{}\n", q.order());
    for row in q.rows() {
        let cells: Vec<String> = row.iter().map(|v| (v + 1).to_string()).collect();
        writeln!(s, "{}", cells.join(" ")).expect("write to string");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loops::generators::octonion_unit_loop;

    #[test]
    fn round_trip() {
        let q = octonion_unit_loop();
        assert_eq!(parse_loop(&format_loop(&q)).unwrap(), q);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_loop(""), Err(LoopError::Parse(_))));
        assert!(matches!(parse_loop("2\n1 2\n"), Err(LoopError::Parse(_))));
        assert!(matches!(parse_loop("2\n1 2\n2 0\n"), Err(LoopError::Parse(_))));
        assert!(matches!(parse_loop("2\n1 2\n2 2\n"), Err(LoopError::NotLatinRow { .. })));
        assert_eq!(parse_loop("1\n1\n").unwrap().order(), 1);
    }
}
