use rug::Integer;
use std::fmt;
use std::path::Path;

/// One input curve: optional label and `a1 a2 a3 a4 a6`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveRecord {
    pub label: Option<String>,
    pub a: [Integer; 5],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

impl CurveRecord {
    /// The line `parse_curves` reads back as this record.
    pub fn emit(&self) -> String {
        let a: Vec<String> = self.a.iter().map(Integer::to_string).collect();
        match &self.label {
            Some(l) => format!("{l} {}", a.join(" ")),
            None => a.join(" "),
        }
    }

    pub fn display_label(&self) -> String {
        self.label.clone().unwrap_or_else(|| format!("[{}]", self.a.iter().map(Integer::to_string).collect::<Vec<_>>().join(",")))
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn int(tok: &str, line: usize) -> Result<Integer, ParseError> {
    tok.parse::<Integer>().map_err(|e| ParseError {
        line,
        message: format!("`{tok}` is not an integer: {e}"),
    })
}

pub fn parse_curves(text: &str) -> Result<Vec<CurveRecord>, ParseError> {
    content_lines(text)
        .map(|(line, l)| {
            let w: Vec<&str> = l.split_whitespace().collect();
            let (label, nums) = match w.len() {
                5 => (None, &w[..]),
                6 => (Some(w[0].to_string()), &w[1..]),
                n => {
                    return Err(ParseError {
                        line,
                        message: format!("expected 5 integers with an optional label, found {n} fields"),
                    })
                }
            };
            let mut a: [Integer; 5] = Default::default();
            for (slot, tok) in a.iter_mut().zip(nums) {
                *slot = int(tok, line)?;
            }
            Ok(CurveRecord { label, a })
        })
        .collect()
}

pub fn parse_curve_file(path: &Path) -> Result<Vec<CurveRecord>, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|e| ParseError {
        line: 0,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_curves(&text)
}

/// `a,b,c` per line.
pub fn parse_triples(text: &str) -> Result<Vec<[Integer; 3]>, ParseError> {
    content_lines(text)
        .map(|(line, l)| {
            let f: Vec<&str> = l.split(',').map(str::trim).collect();
            if f.len() != 3 {
                return Err(ParseError {
                    line,
                    message: format!("expected a,b,c, found {} fields", f.len()),
                });
            }
            Ok([int(f[0], line)?, int(f[1], line)?, int(f[2], line)?])
        })
        .collect()
}

pub fn parse_triple_file(path: &Path) -> Result<Vec<[Integer; 3]>, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|e| ParseError {
        line: 0,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_triples(&text)
}
