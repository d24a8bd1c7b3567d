//! Line-delimited structured-text formats with explicit version fields:
//! structure files (catalogue-backed or family-backed) and scan reports.
//!
//! Structure file (version 1):
//! ```text
//! ddks 1
//! family theorem=2 variant=H p=3 b=2
//! s group=family b=2 n=3 tuple=1,3,9,...
//! ```
//! Catalogue-backed files carry no `family` line and name the group in each
//! record, e.g. `s group=32/49 b=2 n=2 tuple=...`. Element ids are those of
//! the group realization the file refers to: breadth-first closure order
//! for catalogue groups, normal-form encoding for family groups.

use std::path::Path;
use std::str::FromStr;

use crate::braid::KodairaStructure;
use crate::families::{self, FamilyVariant, FormSpec};
use crate::group::FiniteGroup;
use crate::search::{ScanReport, ScanSearchOutcome};
use crate::{Elem, Error, GroupLabel, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMeta {
    pub theorem: u8,
    pub variant: FamilyVariant,
    pub p: u32,
    pub b: usize,
    /// Present for theorem-1 families only.
    pub lambda: Option<Vec<u32>>,
    pub mu: Option<Vec<u32>>,
}

impl FamilyMeta {
    /// Rebuild the witness group this metadata describes.
    pub fn build_group(&self) -> Result<FiniteGroup> {
        match self.theorem {
            1 => {
                let spec = match (&self.lambda, &self.mu) {
                    (Some(l), Some(m)) => FormSpec {
                        b: self.b,
                        p: self.p,
                        lambda: l.clone(),
                        mu: m.clone(),
                    },
                    _ => FormSpec::default_for(self.b, self.p)?,
                };
                let omega = families::omega_matrix(&spec)?;
                families::build_class2_group(self.p, &omega, self.variant)
            }
            2 => {
                let form = families::standard_form(self.b, self.p);
                families::build_class2_group(self.p, &form, self.variant)
            }
            t => Err(Error::InvalidInput(format!("unknown family theorem {t}"))),
        }
    }
}

#[derive(Debug, Default)]
pub struct StructureFile {
    pub family: Option<FamilyMeta>,
    pub records: Vec<KodairaStructure>,
}

fn fmt_vec(v: &[u32]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn write_structure_header<W: std::io::Write + ?Sized>(
    out: &mut W,
    family: Option<&FamilyMeta>,
) -> Result<()> {
    writeln!(out, "ddks 1")?;
    if let Some(meta) = family {
        let mut line = format!(
            "family theorem={} variant={} p={} b={}",
            meta.theorem, meta.variant, meta.p, meta.b
        );
        if let Some(l) = &meta.lambda {
            line.push_str(&format!(" lambda={}", fmt_vec(l)));
        }
        if let Some(m) = &meta.mu {
            line.push_str(&format!(" mu={}", fmt_vec(m)));
        }
        writeln!(out, "{line}")?;
    }
    Ok(())
}

pub fn write_structure_record<W: std::io::Write + ?Sized>(
    out: &mut W,
    s: &KodairaStructure,
) -> Result<()> {
    let group = match s.label {
        Some(l) => l.to_string(),
        None => "family".to_string(),
    };
    let tuple = s
        .tuple
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",");
    writeln!(out, "s group={group} b={} n={} tuple={tuple}", s.b, s.n)?;
    Ok(())
}

pub fn write_structure_file<W: std::io::Write + ?Sized>(out: &mut W, file: &StructureFile) -> Result<()> {
    write_structure_header(out, file.family.as_ref())?;
    for s in &file.records {
        write_structure_record(out, s)?;
    }
    Ok(())
}

fn kv(token: &str, lineno: usize) -> Result<(&str, &str)> {
    token.split_once('=').ok_or(Error::Parse {
        line: lineno,
        msg: format!("expected key=value, got `{token}`"),
    })
}

fn parse_u32_list(s: &str, lineno: usize) -> Result<Vec<u32>> {
    s.split(',')
        .map(|v| {
            v.parse::<u32>().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("bad number `{v}`"),
            })
        })
        .collect()
}

pub fn read_structure_file(path: impl AsRef<Path>) -> Result<StructureFile> {
    let text = std::fs::read_to_string(path.as_ref())?;
    parse_structure_file(&text)
}

pub fn parse_structure_file(text: &str) -> Result<StructureFile> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty structure file".into(),
    })?;
    if header.trim() != "ddks 1" {
        return Err(Error::Parse {
            line: 1,
            msg: format!("unsupported header `{header}`"),
        });
    }
    let mut file = StructureFile::default();
    for (idx, raw) in lines {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match tokens.next().unwrap_or("") {
            "family" => {
                let mut theorem = None;
                let mut variant = None;
                let mut p = None;
                let mut b = None;
                let mut lambda = None;
                let mut mu = None;
                for tok in tokens {
                    let (k, v) = kv(tok, lineno)?;
                    match k {
                        "theorem" => theorem = v.parse::<u8>().ok(),
                        "variant" => variant = FamilyVariant::from_str(v).ok(),
                        "p" => p = v.parse::<u32>().ok(),
                        "b" => b = v.parse::<usize>().ok(),
                        "lambda" => lambda = Some(parse_u32_list(v, lineno)?),
                        "mu" => mu = Some(parse_u32_list(v, lineno)?),
                        _ => {
                            return Err(Error::Parse {
                                line: lineno,
                                msg: format!("unknown family key `{k}`"),
                            })
                        }
                    }
                }
                let (Some(theorem), Some(variant), Some(p), Some(b)) = (theorem, variant, p, b)
                else {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "family line needs theorem, variant, p, b".into(),
                    });
                };
                file.family = Some(FamilyMeta {
                    theorem,
                    variant,
                    p,
                    b,
                    lambda,
                    mu,
                });
            }
            "s" => {
                let mut label = None;
                let mut is_family = false;
                let mut b = None;
                let mut n = None;
                let mut tuple: Option<Vec<Elem>> = None;
                for tok in tokens {
                    let (k, v) = kv(tok, lineno)?;
                    match k {
                        "group" => {
                            if v == "family" {
                                is_family = true;
                            } else {
                                label = Some(GroupLabel::from_str(v).map_err(|e| Error::Parse {
                                    line: lineno,
                                    msg: e.to_string(),
                                })?);
                            }
                        }
                        "b" => b = v.parse::<usize>().ok(),
                        "n" => n = v.parse::<u32>().ok(),
                        "tuple" => {
                            tuple = Some(
                                v.split(',')
                                    .map(|x| {
                                        x.parse::<Elem>().map_err(|_| Error::Parse {
                                            line: lineno,
                                            msg: format!("bad element id `{x}`"),
                                        })
                                    })
                                    .collect::<Result<_>>()?,
                            )
                        }
                        _ => {
                            return Err(Error::Parse {
                                line: lineno,
                                msg: format!("unknown structure key `{k}`"),
                            })
                        }
                    }
                }
                let (Some(b), Some(n), Some(tuple)) = (b, n, tuple) else {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "structure line needs b, n, tuple".into(),
                    });
                };
                if !is_family && label.is_none() {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "structure line needs group=<o>/<i> or group=family".into(),
                    });
                }
                if tuple.len() != 4 * b + 1 {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("tuple has {} entries, expected {}", tuple.len(), 4 * b + 1),
                    });
                }
                file.records.push(KodairaStructure { label, b, n, tuple });
            }
            other => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("unknown record tag `{other}`"),
                })
            }
        }
    }
    Ok(file)
}

/// Deterministic scan report: wall times are deliberately excluded so the
/// bytes are identical across runs and `--jobs` settings.
pub fn write_scan_report<W: std::io::Write + ?Sized>(out: &mut W, report: &ScanReport) -> Result<()> {
    writeln!(out, "scanreport 1")?;
    writeln!(out, "range {}..{} genus {}", report.lo, report.hi, report.b)?;
    for row in &report.rows {
        let monolithic = match row.monolithic {
            None => "na".to_string(),
            Some(v) => v.to_string(),
        };
        let structures = match row.outcome {
            ScanSearchOutcome::NotSearched => "na".to_string(),
            ScanSearchOutcome::Exists(found) => if found { "yes" } else { "no" }.to_string(),
            ScanSearchOutcome::Count(c) => c.to_string(),
        };
        writeln!(
            out,
            "r {} order={} abelian={} cct={} monolithic={} searched={} structures={}",
            row.label,
            row.label.order,
            row.abelian,
            row.cct,
            monolithic,
            row.outcome != ScanSearchOutcome::NotSearched,
            structures
        )?;
    }
    Ok(())
}
