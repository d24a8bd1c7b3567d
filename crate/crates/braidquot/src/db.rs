//! The bundled group catalogue: line-delimited records of permutation
//! generators for every group of order 1..63, loaded into table-backed
//! groups and validated against their declared orders.
//!
//! Record format (version 1):
//! ```text
//! smallgroupdb 1
//! g <order> <index> <degree> <perm> <perm> ...
//! ```
//! where each `<perm>` is the comma-separated 1-indexed image list of one
//! generator. Element ids of the loaded group follow the deterministic
//! breadth-first closure order over the listed generators.

use std::collections::BTreeMap;
use std::path::Path;

use crate::group::{close_generators, FiniteGroup};
use crate::perm::Perm;
use crate::{Error, GroupLabel, Result};

/// Environment variable naming the default database path.
pub const DB_ENV_VAR: &str = "BRAIDQUOT_DB";

#[derive(Clone, Debug)]
pub struct GroupRecord {
    pub label: GroupLabel,
    pub degree: usize,
    pub generators: Vec<Perm>,
}

pub struct GroupDb {
    records: BTreeMap<GroupLabel, GroupRecord>,
    groups: BTreeMap<GroupLabel, FiniteGroup>,
}

impl GroupDb {
    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn get(&self, label: GroupLabel) -> Option<&FiniteGroup> {
        self.groups.get(&label)
    }

    pub fn record(&self, label: GroupLabel) -> Option<&GroupRecord> {
        self.records.get(&label)
    }

    pub fn labels(&self) -> impl Iterator<Item = GroupLabel> + '_ {
        self.groups.keys().copied()
    }

    /// Labels with order in [lo, hi], sorted by (order, index).
    pub fn labels_in_orders(&self, lo: u32, hi: u32) -> Vec<GroupLabel> {
        self.labels()
            .filter(|l| l.order >= lo && l.order <= hi)
            .collect()
    }

    /// Require a contiguous index range 1..=k for every order in [lo, hi].
    pub fn expect_complete(&self, lo: u32, hi: u32) -> Result<()> {
        if lo < 1 || hi < lo {
            return Err(Error::InvalidInput(format!("bad order range {lo}..{hi}")));
        }
        for order in lo..=hi {
            let indices: Vec<u32> = self
                .labels()
                .filter(|l| l.order == order)
                .map(|l| l.index)
                .collect();
            if indices.is_empty() {
                return Err(Error::IncompleteDatabase(format!(
                    "no groups of order {order} present"
                )));
            }
            for (want, &got) in (1..).zip(indices.iter()) {
                if want != got {
                    return Err(Error::IncompleteDatabase(format!(
                        "order {order}: expected contiguous indices, missing {want}"
                    )));
                }
            }
        }
        Ok(())
    }
}

pub fn load_group_db(path: impl AsRef<Path>) -> Result<GroupDb> {
    let text = std::fs::read_to_string(path.as_ref())?;
    parse_group_db(&text)
}

pub fn parse_group_db(text: &str) -> Result<GroupDb> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty database file".into(),
    })?;
    if header.trim() != "smallgroupdb 1" {
        return Err(Error::Parse {
            line: 1,
            msg: format!("unsupported header `{header}`"),
        });
    }
    let mut records = BTreeMap::new();
    let mut groups = BTreeMap::new();
    for (idx, raw) in lines {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let tag = parts.next().unwrap_or("");
        if tag != "g" {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("unknown record tag `{tag}`"),
            });
        }
        let parse_num = |s: Option<&str>, what: &str| -> Result<u32> {
            s.and_then(|v| v.parse().ok()).ok_or(Error::Parse {
                line: lineno,
                msg: format!("bad or missing {what}"),
            })
        };
        let order = parse_num(parts.next(), "order")?;
        let index = parse_num(parts.next(), "index")?;
        let degree = parse_num(parts.next(), "degree")? as usize;
        let label = GroupLabel::new(order, index);
        let mut generators = Vec::new();
        for perm_str in parts {
            let images: Vec<u32> = perm_str
                .split(',')
                .map(|v| v.parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse {
                    line: lineno,
                    msg: "bad permutation image".into(),
                })?;
            if images.len() != degree {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!(
                        "permutation has {} images, declared degree {degree}",
                        images.len()
                    ),
                });
            }
            generators.push(Perm::from_images_one_indexed(&images).map_err(|e| Error::Parse {
                line: lineno,
                msg: e.to_string(),
            })?);
        }
        if records.contains_key(&label) {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("duplicate record for {label}"),
            });
        }
        // Close with a one-past cap so an oversized closure is detected as
        // an order mismatch rather than silently truncated.
        let mut group = match close_generators(&generators, Some(order as usize + 1)) {
            Ok(g) => g,
            Err(Error::SizeExceeded { .. }) => {
                return Err(Error::OrderMismatch {
                    label,
                    declared: order as usize,
                    closed: order as usize + 1,
                })
            }
            Err(e) => return Err(e),
        };
        if group.order() != order as u64 {
            return Err(Error::OrderMismatch {
                label,
                declared: order as usize,
                closed: group.order() as usize,
            });
        }
        group.set_name(format!("G({order}, {index})"));
        group.set_label(Some(label));
        groups.insert(label, group);
        records.insert(
            label,
            GroupRecord {
                label,
                degree,
                generators,
            },
        );
    }
    Ok(GroupDb { records, groups })
}

/// Resolve the database path: explicit flag, then environment variable.
pub fn resolve_db_path(flag: Option<&Path>) -> Result<std::path::PathBuf> {
    if let Some(p) = flag {
        return Ok(p.to_path_buf());
    }
    if let Ok(p) = std::env::var(DB_ENV_VAR) {
        return Ok(p.into());
    }
    Err(Error::InvalidInput(format!(
        "no group database: pass --db or set {DB_ENV_VAR}"
    )))
}
