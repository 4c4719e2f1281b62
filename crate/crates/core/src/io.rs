//! Text formats for polyominoes.
//!
//! ASCII: optional `;` header lines (`; name: <name>` sets the name), then one
//! row per line, top row first, `#` for a cell and `.` for an empty square.
//! JSON: `{"name": <string or null>, "cells": [[x, y], ...]}`.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{Cell, GeometryError, Polyomino};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{path}: {source}")]
    File {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub fn parse_ascii(text: &str) -> Result<Polyomino, IoError> {
    let mut name = None;
    let mut rows: Vec<(usize, &str)> = Vec::new();
    let mut ended = None;
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim_end();
        let lineno = k + 1;
        if rows.is_empty() && ended.is_none() {
            if let Some(comment) = line.strip_prefix(';') {
                if let Some(n) = comment.trim().strip_prefix("name:") {
                    name = Some(n.trim().to_string());
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
        }
        if line.is_empty() {
            ended.get_or_insert(lineno);
            continue;
        }
        if let Some(blank) = ended {
            return Err(IoError::Parse {
                line: blank,
                message: "blank line inside the grid".into(),
            });
        }
        rows.push((lineno, line));
    }
    if rows.is_empty() {
        return Err(IoError::Parse {
            line: text.lines().count().max(1),
            message: "no grid rows".into(),
        });
    }
    let height = rows.len();
    let mut cells = Vec::new();
    for (r, &(lineno, line)) in rows.iter().enumerate() {
        let y = (height - 1 - r) as u32;
        for (x, ch) in line.chars().enumerate() {
            match ch {
                '#' => cells.push(Cell::new(x as u32, y)),
                '.' => {}
                other => {
                    return Err(IoError::Parse {
                        line: lineno,
                        message: format!("unexpected character `{other}`"),
                    })
                }
            }
        }
    }
    let p = Polyomino::validate(cells)?;
    Ok(match name {
        Some(n) => p.with_name(n),
        None => p,
    })
}

pub fn format_ascii(p: &Polyomino) -> String {
    let mut out = String::new();
    if let Some(name) = p.name() {
        let _ = writeln!(out, "; name: {name}");
    }
    for y in (0..p.height()).rev() {
        let row: String = (0..p.width())
            .map(|x| if p.contains(&Cell::new(x, y)) { '#' } else { '.' })
            .collect();
        out.push_str(row.trim_end_matches('.'));
        out.push('\n');
    }
    out
}

#[derive(Serialize, Deserialize)]
struct JsonPolyomino {
    name: Option<String>,
    cells: Vec<[u32; 2]>,
}

pub fn to_json(p: &Polyomino) -> String {
    let j = JsonPolyomino {
        name: p.name().map(str::to_string),
        cells: p.cells().iter().map(|c| [c.x(), c.y()]).collect(),
    };
    serde_json::to_string(&j).expect("plain data")
}

pub fn parse_json(text: &str) -> Result<Polyomino, IoError> {
    let j: JsonPolyomino = serde_json::from_str(text)?;
    let p = Polyomino::validate(j.cells.into_iter().map(|[x, y]| Cell::new(x, y)))?;
    Ok(match j.name {
        Some(n) => p.with_name(n),
        None => p,
    })
}

/// JSON if the first non-blank character is `{`, ASCII otherwise.
pub fn parse_any(text: &str) -> Result<Polyomino, IoError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_ascii(text)
    }
}

pub fn load(path: &Path) -> Result<Polyomino, IoError> {
    let text = std::fs::read_to_string(path).map_err(|source| IoError::File {
        path: path.display().to_string(),
        source,
    })?;
    let p = parse_any(&text)?;
    Ok(if p.name().is_none() {
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("").to_string();
        p.with_name(stem)
    } else {
        p
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::gallery;

    #[test]
    fn ascii_round_trip() {
        for p in gallery::all() {
            let text = format_ascii(&p);
            let back = parse_ascii(&text).unwrap();
            assert_eq!(back, p);
            assert_eq!(back.name(), p.name());
        }
    }

    #[test]
    fn json_round_trip() {
        let p = gallery::fig8b();
        let back = parse_any(&to_json(&p)).unwrap();
        assert_eq!(back, p);
        assert_eq!(back.name(), Some("fig8b"));
    }

    #[test]
    fn top_row_comes_first() {
        let p = parse_ascii("; a comment\n#.\n##   \n").unwrap();
        assert!(p.contains(&Cell::new(0, 1)));
        assert!(p.contains(&Cell::new(1, 0)));
        assert!(!p.contains(&Cell::new(1, 1)));
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(parse_ascii("#\n\n#\n"), Err(IoError::Parse { line: 2, .. })));
        assert!(matches!(parse_ascii("#x\n"), Err(IoError::Parse { line: 1, .. })));
        assert!(matches!(parse_ascii("#.#\n"), Err(IoError::Geometry(GeometryError::NotConnected))));
        assert!(matches!(parse_ascii("; only\n"), Err(IoError::Parse { .. })));
    }
}
