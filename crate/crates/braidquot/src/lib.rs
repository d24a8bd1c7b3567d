//! Finite quotients of the two-strand surface braid group and the numerical
//! invariants of the double Kodaira fibrations they induce.
//!
//! The crate decides, counts, and constructs diagonal double Kodaira
//! structures on finite groups:
//!
//! * [`group`] / [`class2`] - finite group arithmetic over two realizations:
//!   multiplication tables for catalogue-scale groups and a class-2 normal
//!   form for structured p-group families up to order p^9 and beyond;
//! * [`classify`] - structural queries: conjugacy classes, normal subgroup
//!   lattice, CCT / monolithic / extra-special flags, automorphism groups;
//! * [`braid`] - the genus-b presentation as fully expanded relation words,
//!   with verification of candidate generator tuples;
//! * [`search`] - pruned backtracking enumeration of all structures on a
//!   group, Aut-orbit counting, and the order-range scan;
//! * [`families`] - explicit witness constructions in the extra-special
//!   families (block forms over Z_p, Heisenberg-type quotients);
//! * [`invariants`] - exact rational slope and signature arithmetic;
//! * [`db`] / [`io`] - the bundled order 1..63 group catalogue and the
//!   line-delimited structure file formats.

pub mod braid;
pub mod class2;
pub mod classify;
pub mod db;
pub mod families;
pub mod group;
pub mod invariants;
pub mod io;
pub mod perm;
pub mod search;
pub mod zmod;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Element id inside a fixed group realization.
///
/// Table-backed groups use the deterministic breadth-first closure order
/// (identity is always 0); class-2 normal-form groups use the mixed-radix
/// encoding of the exponent vector with the central exponent on top.
pub type Elem = u64;

/// Catalogue position of a group: order plus index within that order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GroupLabel {
    pub order: u32,
    pub index: u32,
}

impl GroupLabel {
    pub fn new(order: u32, index: u32) -> GroupLabel {
        GroupLabel { order, index }
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.order, self.index)
    }
}

impl FromStr for GroupLabel {
    type Err = Error;

    /// Accepts `o/i` and `o,i`.
    fn from_str(s: &str) -> Result<GroupLabel> {
        let (o, i) = s
            .split_once(['/', ','])
            .ok_or_else(|| Error::InvalidInput(format!("bad group label `{s}`")))?;
        let order: u32 = o
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad group label `{s}`")))?;
        let index: u32 = i
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad group label `{s}`")))?;
        if index == 0 {
            return Err(Error::InvalidInput(format!("group index must be >= 1 in `{s}`")));
        }
        Ok(GroupLabel { order, index })
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("closure exceeded the size cap of {cap}")]
    SizeExceeded { cap: usize },

    #[error("operation requires a table-backed group")]
    UnsupportedRealization,

    #[error("genus must be at least 2, got {0}")]
    InvalidGenus(usize),

    #[error("branching order must be at least 2, got {0}")]
    InvalidType(u32),

    #[error("no value assigned to letter {0}")]
    MissingAssignment(String),

    #[error("invalid form spec: {0}")]
    InvalidSpec(String),

    #[error("{p} does not divide {value}")]
    Divisibility { p: u64, value: u64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid search config: {0}")]
    InvalidConfig(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("group {label}: declared order {declared} but generators close to {closed} elements")]
    OrderMismatch {
        label: GroupLabel,
        declared: usize,
        closed: usize,
    },

    #[error("incomplete database: {0}")]
    IncompleteDatabase(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: 1 usage, 2 data, 3 cap exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::SizeExceeded { .. } => 3,
            Error::InvalidGenus(_)
            | Error::InvalidType(_)
            | Error::InvalidConfig(_)
            | Error::InvalidInput(_) => 1,
            _ => 2,
        }
    }
}
