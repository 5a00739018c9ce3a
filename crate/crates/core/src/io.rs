//! Plain-text file formats shared across modules.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

/// A decoded plain (P2) graymap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pgm {
    pub width: usize,
    pub height: usize,
    pub maxval: u64,
    pub samples: Vec<u64>,
}

impl Pgm {
    pub fn parse(text: &str) -> Result<Pgm> {
        // (line number, token) pairs with `#` comments stripped
        let mut tokens = text.lines().enumerate().flat_map(|(i, line)| {
            let line = line.split('#').next().unwrap_or("");
            line.split_whitespace().map(move |t| (i + 1, t))
        });
        match tokens.next() {
            Some((_, "P2")) => {}
            Some((line, other)) => {
                return Err(Error::parse(
                    line,
                    format!("expected P2 magic, found {other:?}"),
                ))
            }
            None => return Err(Error::parse(1, "empty file")),
        }
        let mut number = |what: &str| -> Result<u64> {
            let (line, tok) = tokens
                .next()
                .ok_or_else(|| Error::parse(0, format!("unexpected end of file reading {what}")))?;
            tok.parse::<u64>()
                .map_err(|_| Error::parse(line, format!("bad {what} {tok:?}")))
        };
        let width = number("width")? as usize;
        let height = number("height")? as usize;
        let maxval = number("maxval")?;
        if width == 0 || height == 0 {
            return Err(Error::EmptyGrid);
        }
        if maxval == 0 {
            return Err(Error::parse(0, "maxval must be positive"));
        }
        let mut samples = Vec::with_capacity(width * height);
        for _ in 0..width * height {
            let v = number("sample")?;
            if v > maxval {
                return Err(Error::parse(
                    0,
                    format!("sample {v} exceeds maxval {maxval}"),
                ));
            }
            samples.push(v);
        }
        Ok(Pgm {
            width,
            height,
            maxval,
            samples,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("P2\n{} {}\n{}\n", self.width, self.height, self.maxval);
        for row in self.samples.chunks(self.width) {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::from(e).in_file(path))
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::from(e).in_file(path))
}

/// Splits text into blocks of non-blank lines, keeping the 1-based line number of each line.
pub(crate) fn blocks(text: &str) -> Vec<Vec<(usize, &str)>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() {
            if !current.is_empty() {
                out.push(std::mem::take(&mut current));
            }
        } else if !trimmed.starts_with('#') {
            current.push((i + 1, trimmed));
        }
    }
    if !current.is_empty() {
        out.push(current);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_free_whitespace() {
        let pgm = Pgm::parse("P2 # magic\n# size\n2 2\n5\n0 5\n3\n1\n").unwrap();
        assert_eq!(pgm.samples, vec![0, 5, 3, 1]);
        assert_eq!(pgm.maxval, 5);
    }

    #[test]
    fn rejects_truncated_and_out_of_range() {
        assert!(Pgm::parse("P2\n2 2\n1\n0 1 1\n").is_err());
        assert!(Pgm::parse("P2\n1 1\n1\n2\n").is_err());
        assert!(Pgm::parse("P5\n1 1\n1\n0\n").is_err());
    }

    #[test]
    fn blocks_split_on_blank_lines() {
        let b = blocks("a\nb\n\n\nc\n");
        assert_eq!(b.len(), 2);
        assert_eq!(b[1], vec![(5, "c")]);
    }
}
