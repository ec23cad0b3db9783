//! The ".fam" text format and its JSON mirror.
//!
//! Text layout: a header line `n=<n> k=<k>`, then one member per line as
//! space-separated ascending elements. `#` starts a comment, blank lines
//! are ignored. JSON mirror: `{"n":…, "k":…, "members":[[…],…]}`.
//! Both round-trip bit-exactly (members re-emit in colex order).

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sets::{Family, GroundSet, KSet};

#[derive(Debug, Serialize, Deserialize)]
struct FamFile {
    n: u32,
    k: u32,
    members: Vec<Vec<u32>>,
}

fn family_to_file(family: &Family) -> FamFile {
    FamFile {
        n: family.ground().n(),
        k: family.uniform_k().unwrap_or(0),
        members: family
            .members()
            .iter()
            .map(|m| m.elements().collect())
            .collect(),
    }
}

fn file_to_family(file: FamFile, line_of_member: impl Fn(usize) -> usize) -> Result<Family> {
    let ground = GroundSet::new(file.n)?;
    let mut members = Vec::with_capacity(file.members.len());
    for (i, elems) in file.members.iter().enumerate() {
        let line = line_of_member(i);
        if elems.len() as u32 != file.k {
            return Err(Error::Parse {
                line,
                msg: format!(
                    "member has {} elements, header says k={}",
                    elems.len(),
                    file.k
                ),
            });
        }
        if !elems.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Parse {
                line,
                msg: "elements must be strictly ascending".into(),
            });
        }
        for &e in elems {
            if e == 0 || e > file.n {
                return Err(Error::Parse {
                    line,
                    msg: format!("element {} outside the ground set [{}]", e, file.n),
                });
            }
        }
        members.push(KSet::from_elements(elems)?);
    }
    Family::new(ground, members).map_err(|e| match e {
        Error::DuplicateMember(m) => Error::Parse {
            line: 0,
            msg: format!("duplicate member {m}"),
        },
        other => other,
    })
}

/// Parses the ".fam" text format with line-numbered diagnostics.
pub fn parse_fam(text: &str) -> Result<Family> {
    let mut header: Option<(u32, u32, usize)> = None;
    let mut members: Vec<Vec<u32>> = Vec::new();
    let mut member_lines: Vec<usize> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if header.is_none() {
            let mut n = None;
            let mut k = None;
            for tok in line.split_whitespace() {
                if let Some(v) = tok.strip_prefix("n=") {
                    n = v.parse::<u32>().ok();
                } else if let Some(v) = tok.strip_prefix("k=") {
                    k = v.parse::<u32>().ok();
                } else {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("unexpected token {tok:?} in header (want `n=<n> k=<k>`)"),
                    });
                }
            }
            match (n, k) {
                (Some(n), Some(k)) => header = Some((n, k, line_no)),
                _ => {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "header must be `n=<n> k=<k>`".into(),
                    })
                }
            }
            continue;
        }
        let mut elems = Vec::new();
        for tok in line.split_whitespace() {
            match tok.parse::<u32>() {
                Ok(e) => elems.push(e),
                Err(_) => {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("expected an integer element, got {tok:?}"),
                    })
                }
            }
        }
        members.push(elems);
        member_lines.push(line_no);
    }

    let (n, k, _) = header.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        msg: "missing `n=<n> k=<k>` header".into(),
    })?;
    file_to_family(FamFile { n, k, members }, |i| member_lines[i])
}

/// Emits the ".fam" text format (members in colex order).
pub fn write_fam(family: &Family) -> String {
    let file = family_to_file(family);
    let mut out = format!("n={} k={}\n", file.n, file.k);
    for m in &file.members {
        let words: Vec<String> = m.iter().map(|e| e.to_string()).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
    }
    out
}

/// Parses the JSON mirror `{"n":…, "k":…, "members":[[…],…]}`.
pub fn parse_json(text: &str) -> Result<Family> {
    let file: FamFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    file_to_family(file, |_| 0)
}

pub fn write_json(family: &Family) -> String {
    serde_json::to_string_pretty(&family_to_file(family)).expect("family serializes")
}

/// Reads a family from a path, dispatching on the `.json` extension.
pub fn read_family_path(path: &Path) -> Result<Family> {
    let text = std::fs::read_to_string(path)?;
    if path.extension().and_then(|e| e.to_str()) == Some("json") {
        parse_json(&text)
    } else {
        parse_fam(&text)
    }
}

pub fn write_family_path(path: &Path, family: &Family) -> Result<()> {
    let text = if path.extension().and_then(|e| e.to_str()) == Some("json") {
        write_json(family)
    } else {
        write_fam(family)
    };
    std::fs::write(path, text)?;
    Ok(())
}
