//! The defining relations of the genus-b two-strand pure surface braid
//! group, materialized as relation words over the abstract alphabet
//! {rho_1j, tau_1j, rho_2j, tau_2j, A12}, and verification of candidate
//! generator tuples in a finite group.
//!
//! Commutators follow the convention [x, y] = x y x^-1 y^-1 and are expanded
//! once at construction time, so evaluation is a flat product scan.

use std::fmt;

use crate::group::FiniteGroup;
use crate::{Elem, Error, GroupLabel, Result};

/// A letter of the genus-b alphabet. Rows are 1 or 2; handles j are 1..=b.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Letter {
    Rho(u8, u8),
    Tau(u8, u8),
    A12,
}

impl Letter {
    /// Position in the structure tuple
    /// (r_11, t_11, ..., r_1b, t_1b, r_21, t_21, ..., r_2b, t_2b, z).
    pub fn tuple_index(self, b: usize) -> usize {
        match self {
            Letter::Rho(1, j) => 2 * (j as usize - 1),
            Letter::Tau(1, j) => 2 * (j as usize - 1) + 1,
            Letter::Rho(2, j) => 2 * b + 2 * (j as usize - 1),
            Letter::Tau(2, j) => 2 * b + 2 * (j as usize - 1) + 1,
            Letter::A12 => 4 * b,
            _ => panic!("row out of range"),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Rho(i, j) => write!(f, "rho_{i}{j}"),
            Letter::Tau(i, j) => write!(f, "tau_{i}{j}"),
            Letter::A12 => write!(f, "A12"),
        }
    }
}

/// Ordered alphabet for genus b: exactly 4b + 1 letters.
pub struct RelationAlphabet {
    pub b: usize,
}

impl RelationAlphabet {
    pub fn new(b: usize) -> Result<RelationAlphabet> {
        if b < 2 {
            return Err(Error::InvalidGenus(b));
        }
        Ok(RelationAlphabet { b })
    }

    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(4 * self.b + 1);
        for row in [1u8, 2u8] {
            for j in 1..=self.b as u8 {
                out.push(Letter::Rho(row, j));
                out.push(Letter::Tau(row, j));
            }
        }
        out.push(Letter::A12);
        out
    }
}

pub type WordTerm = (Letter, i8);

/// One defining relation, asserting lhs = rhs.
#[derive(Clone, Debug)]
pub struct RelationWord {
    pub lhs: Vec<WordTerm>,
    pub rhs: Vec<WordTerm>,
    pub name: String,
}

impl RelationWord {
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.lhs.iter().chain(self.rhs.iter()).map(|&(l, _)| l)
    }
}

fn inv(term: WordTerm) -> WordTerm {
    (term.0, -term.1)
}

/// [x, y] expanded as x y x^-1 y^-1 for single-letter operands.
fn comm(x: WordTerm, y: WordTerm) -> Vec<WordTerm> {
    vec![x, y, inv(x), inv(y)]
}

/// The full relation set for genus b: the two surface relations, the
/// case-split action relations for every ordered handle pair, and the 2b
/// relations tying conjugation of A12 to the second row. Total count
/// 4b^2 + 2b + 2.
pub fn relation_set(b: usize) -> Result<Vec<RelationWord>> {
    if b < 2 {
        return Err(Error::InvalidGenus(b));
    }
    let bb = b as u8;
    let mut rels = Vec::with_capacity(4 * b * b + 2 * b + 2);

    // surface relation of the first row:
    // [rho_1b^-1, tau_1b^-1] tau_1b^-1 ... [rho_11^-1, tau_11^-1] tau_11^-1
    //   (tau_11 tau_12 ... tau_1b) = A12
    let mut lhs = Vec::new();
    for j in (1..=bb).rev() {
        lhs.extend(comm((Letter::Rho(1, j), -1), (Letter::Tau(1, j), -1)));
        lhs.push((Letter::Tau(1, j), -1));
    }
    for j in 1..=bb {
        lhs.push((Letter::Tau(1, j), 1));
    }
    rels.push(RelationWord {
        lhs,
        rhs: vec![(Letter::A12, 1)],
        name: "surface-1".into(),
    });

    // surface relation of the second row:
    // [rho_21^-1, tau_21] tau_21 ... [rho_2b^-1, tau_2b] tau_2b
    //   (tau_2b^-1 ... tau_21^-1) = A12^-1
    let mut lhs = Vec::new();
    for j in 1..=bb {
        lhs.extend(comm((Letter::Rho(2, j), -1), (Letter::Tau(2, j), 1)));
        lhs.push((Letter::Tau(2, j), 1));
    }
    for j in (1..=bb).rev() {
        lhs.push((Letter::Tau(2, j), -1));
    }
    rels.push(RelationWord {
        lhs,
        rhs: vec![(Letter::A12, -1)],
        name: "surface-2".into(),
    });

    let a = (Letter::A12, 1);
    let a_inv = (Letter::A12, -1);

    for j in 1..=bb {
        // action of rho_1j on the rho_2k
        for k in 1..=bb {
            let lhs = comm((Letter::Rho(1, j), 1), (Letter::Rho(2, k), 1));
            let rhs = if j <= k {
                vec![]
            } else {
                vec![
                    a_inv,
                    (Letter::Rho(2, k), 1),
                    (Letter::Rho(2, j), -1),
                    a,
                    (Letter::Rho(2, j), 1),
                    (Letter::Rho(2, k), -1),
                ]
            };
            rels.push(RelationWord {
                lhs,
                rhs,
                name: format!("[rho_1{j}, rho_2{k}]"),
            });
        }
        // action of rho_1j on the tau_2k
        for k in 1..=bb {
            let lhs = comm((Letter::Rho(1, j), 1), (Letter::Tau(2, k), 1));
            let rhs = if j < k {
                vec![]
            } else if j == k {
                vec![a_inv]
            } else {
                comm(a_inv, (Letter::Tau(2, k), 1))
            };
            rels.push(RelationWord {
                lhs,
                rhs,
                name: format!("[rho_1{j}, tau_2{k}]"),
            });
        }
        // conjugation of A12 by rho_1j
        rels.push(RelationWord {
            lhs: comm((Letter::Rho(1, j), 1), a),
            rhs: comm((Letter::Rho(2, j), -1), a),
            name: format!("[rho_1{j}, A12]"),
        });
    }

    for j in 1..=bb {
        // action of tau_1j on the rho_2k
        for k in 1..=bb {
            let lhs = comm((Letter::Tau(1, j), 1), (Letter::Rho(2, k), 1));
            let rhs = if j < k {
                vec![]
            } else if j == k {
                vec![(Letter::Tau(2, j), -1), a, (Letter::Tau(2, j), 1)]
            } else {
                comm((Letter::Tau(2, j), -1), a)
            };
            rels.push(RelationWord {
                lhs,
                rhs,
                name: format!("[tau_1{j}, rho_2{k}]"),
            });
        }
        // action of tau_1j on the tau_2k
        for k in 1..=bb {
            let lhs = comm((Letter::Tau(1, j), 1), (Letter::Tau(2, k), 1));
            let rhs = if j < k {
                vec![]
            } else if j == k {
                comm((Letter::Tau(2, j), -1), a)
            } else {
                vec![
                    (Letter::Tau(2, j), -1),
                    a,
                    (Letter::Tau(2, j), 1),
                    a_inv,
                    (Letter::Tau(2, k), 1),
                    a,
                    (Letter::Tau(2, j), -1),
                    a_inv,
                    (Letter::Tau(2, j), 1),
                    (Letter::Tau(2, k), -1),
                ]
            };
            rels.push(RelationWord {
                lhs,
                rhs,
                name: format!("[tau_1{j}, tau_2{k}]"),
            });
        }
        // conjugation of A12 by tau_1j
        rels.push(RelationWord {
            lhs: comm((Letter::Tau(1, j), 1), a),
            rhs: comm((Letter::Tau(2, j), -1), a),
            name: format!("[tau_1{j}, A12]"),
        });
    }

    debug_assert_eq!(rels.len(), 4 * b * b + 2 * b + 2);
    Ok(rels)
}

/// An ordered (4b+1)-tuple of group elements: candidate images of the braid
/// generators under a quotient of type (b, n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KodairaStructure {
    pub label: Option<GroupLabel>,
    pub b: usize,
    pub n: u32,
    pub tuple: Vec<Elem>,
}

impl KodairaStructure {
    pub fn z(&self) -> Elem {
        self.tuple[4 * self.b]
    }

    pub fn row(&self, row: usize) -> &[Elem] {
        let b = self.b;
        match row {
            1 => &self.tuple[0..2 * b],
            2 => &self.tuple[2 * b..4 * b],
            _ => panic!("row out of range"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureVerdict {
    pub is_structure: bool,
    /// Index into `relation_set(b)` of the first failing relation.
    pub failing_relation: Option<usize>,
    pub generates: bool,
    pub z_order: u32,
    pub k1_order: u64,
    pub k2_order: u64,
    pub k1_normal: bool,
    pub k2_normal: bool,
    pub m1: u64,
    pub m2: u64,
    pub is_strong: bool,
}

/// Product of assigned letters with exponents, left to right.
pub fn evaluate_word(
    g: &FiniteGroup,
    assign: &dyn Fn(Letter) -> Option<Elem>,
    word: &[WordTerm],
) -> Result<Elem> {
    let mut acc = g.identity();
    for &(letter, e) in word {
        let x = assign(letter).ok_or_else(|| Error::MissingAssignment(letter.to_string()))?;
        let x = if e < 0 { g.inv(x) } else { x };
        for _ in 0..e.unsigned_abs() {
            acc = g.mul(acc, x);
        }
    }
    Ok(acc)
}

/// Check a candidate tuple against the full relation set of its genus,
/// the generation requirement, and the order of z. The verdict always
/// reports K1 = <row 1, z>, K2 = <row 2, z>, their indices, and strongness.
pub fn check_structure(g: &FiniteGroup, cand: &KodairaStructure) -> Result<StructureVerdict> {
    if cand.n < 2 {
        return Err(Error::InvalidType(cand.n));
    }
    let b = cand.b;
    if cand.tuple.len() != 4 * b + 1 {
        return Err(Error::InvalidInput(format!(
            "tuple has {} entries, expected {}",
            cand.tuple.len(),
            4 * b + 1
        )));
    }
    if let Some(&bad) = cand.tuple.iter().find(|&&x| x >= g.order()) {
        return Err(Error::InvalidInput(format!(
            "element id {bad} out of range for a group of order {}",
            g.order()
        )));
    }
    let rels = relation_set(b)?;
    let tuple = &cand.tuple;
    let assign = |l: Letter| -> Option<Elem> { Some(tuple[l.tuple_index(b)]) };

    let mut failing = None;
    for (i, rel) in rels.iter().enumerate() {
        let lhs = evaluate_word(g, &assign, &rel.lhs)?;
        let rhs = evaluate_word(g, &assign, &rel.rhs)?;
        if lhs != rhs {
            failing = Some(i);
            break;
        }
    }

    let z = cand.z();
    let z_order = g.element_order(z);
    let whole = g.subgroup_generated(tuple, None)?;
    let generates = whole.order == g.order();

    let mut k1_seed: Vec<Elem> = cand.row(1).to_vec();
    k1_seed.push(z);
    let mut k2_seed: Vec<Elem> = cand.row(2).to_vec();
    k2_seed.push(z);
    let k1 = g.subgroup_generated(&k1_seed, None)?;
    let k2 = g.subgroup_generated(&k2_seed, None)?;
    let m1 = g.order() / k1.order;
    let m2 = g.order() / k2.order;

    Ok(StructureVerdict {
        is_structure: failing.is_none() && generates && z_order == cand.n,
        failing_relation: failing,
        generates,
        z_order,
        k1_order: k1.order,
        k2_order: k2.order,
        k1_normal: k1.is_normal,
        k2_normal: k2.is_normal,
        m1,
        m2,
        is_strong: m1 == 1 && m2 == 1,
    })
}

/// The tuple transformed by the handle-reversing involution of the
/// presentation: A12 <-> A12^-1, tau_1j <-> tau_{2, b+1-j}^-1,
/// rho_1j <-> rho_{2, b+1-j}.
pub fn involution_image(g: &FiniteGroup, cand: &KodairaStructure) -> KodairaStructure {
    let b = cand.b;
    let old = &cand.tuple;
    let idx = |l: Letter| l.tuple_index(b);
    let mut tuple = vec![0 as Elem; 4 * b + 1];
    for j in 1..=b as u8 {
        let jj = (b as u8) + 1 - j;
        tuple[idx(Letter::Rho(1, j))] = old[idx(Letter::Rho(2, jj))];
        tuple[idx(Letter::Rho(2, j))] = old[idx(Letter::Rho(1, jj))];
        tuple[idx(Letter::Tau(1, j))] = g.inv(old[idx(Letter::Tau(2, jj))]);
        tuple[idx(Letter::Tau(2, j))] = g.inv(old[idx(Letter::Tau(1, jj))]);
    }
    tuple[4 * b] = g.inv(old[4 * b]);
    KodairaStructure {
        label: cand.label,
        b,
        n: cand.n,
        tuple,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::close_generators;
    use crate::perm::Perm;

    #[test]
    fn relation_count_formula() {
        for b in 2..=6 {
            let rels = relation_set(b).unwrap();
            assert_eq!(rels.len(), 4 * b * b + 2 * b + 2, "genus {b}");
        }
        assert_eq!(relation_set(2).unwrap().len(), 22);
        assert_eq!(relation_set(3).unwrap().len(), 44);
        assert!(matches!(relation_set(1), Err(Error::InvalidGenus(1))));
    }

    #[test]
    fn diagonal_commutator_relation_is_present() {
        // [rho_1j, tau_2j] = A12^-1 for each j
        for b in 2..=4usize {
            let rels = relation_set(b).unwrap();
            for j in 1..=b as u8 {
                let found = rels.iter().any(|r| {
                    r.name == format!("[rho_1{j}, tau_2{j}]")
                        && r.rhs == vec![(Letter::A12, -1)]
                });
                assert!(found, "missing diagonal relation at b={b}, j={j}");
            }
        }
    }

    #[test]
    fn alphabet_has_4b_plus_1_letters() {
        for b in 2..=6 {
            assert_eq!(RelationAlphabet::new(b).unwrap().letters().len(), 4 * b + 1);
        }
        assert!(RelationAlphabet::new(1).is_err());
    }

    #[test]
    fn word_evaluation_basics() {
        let a = Perm::from_cycles(4, &[&[0, 1]]);
        let b4 = Perm::from_cycles(4, &[&[0, 1, 2, 3]]);
        let g = close_generators(&[a, b4], None).unwrap();
        let x = g.generator_elems()[0];
        let assign = |_: Letter| -> Option<Elem> { Some(x) };

        // empty word is the identity
        assert_eq!(evaluate_word(&g, &assign, &[]).unwrap(), 0);
        // self-commutator is the identity
        let word = comm((Letter::Rho(1, 1), 1), (Letter::Rho(1, 1), 1));
        assert_eq!(evaluate_word(&g, &assign, &word).unwrap(), 0);

        // commutators vanish in an abelian group for any assignment
        let c6 = close_generators(&[Perm::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]])], None).unwrap();
        let y = c6.generator_elems()[0];
        let pick = |l: Letter| -> Option<Elem> {
            Some(match l {
                Letter::Rho(..) => y,
                Letter::Tau(..) => c6.mul(y, y),
                Letter::A12 => c6.inv(y),
            })
        };
        let word = comm((Letter::Rho(1, 1), 1), (Letter::Tau(2, 2), 1));
        assert_eq!(evaluate_word(&c6, &pick, &word).unwrap(), 0);

        // unassigned letters are an error
        let none = |_: Letter| -> Option<Elem> { None };
        assert!(matches!(
            evaluate_word(&g, &none, &[(Letter::A12, 1)]),
            Err(Error::MissingAssignment(_))
        ));
    }

    #[test]
    fn abelian_groups_admit_no_structures() {
        // the relation [rho_11, tau_21] = A12^-1 forces z = 1 in any abelian
        // group, contradicting o(z) >= 2
        let c6 = close_generators(&[Perm::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]])], None).unwrap();
        let y = c6.generator_elems()[0];
        let cand = KodairaStructure {
            label: None,
            b: 2,
            n: 2,
            tuple: vec![y; 9],
        };
        let verdict = check_structure(&c6, &cand).unwrap();
        assert!(!verdict.is_structure);
        assert!(verdict.failing_relation.is_some());
    }

    #[test]
    fn check_structure_rejects_bad_type() {
        let c6 = close_generators(&[Perm::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]])], None).unwrap();
        let cand = KodairaStructure {
            label: None,
            b: 2,
            n: 1,
            tuple: vec![0; 9],
        };
        assert!(matches!(check_structure(&c6, &cand), Err(Error::InvalidType(1))));
    }

    #[test]
    fn involution_is_an_involution() {
        let a = Perm::from_cycles(4, &[&[0, 1]]);
        let b4 = Perm::from_cycles(4, &[&[0, 1, 2, 3]]);
        let g = close_generators(&[a, b4], None).unwrap();
        let cand = KodairaStructure {
            label: None,
            b: 3,
            n: 2,
            tuple: (0..13).map(|i| (i * 5 + 3) % 24).collect(),
        };
        let twice = involution_image(&g, &involution_image(&g, &cand));
        assert_eq!(twice, cand);
    }
}
