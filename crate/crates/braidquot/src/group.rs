//! Finite groups behind one arithmetic contract.
//!
//! Two realizations: a multiplication table built by deterministic
//! breadth-first closure of permutation generators (catalogue-scale groups,
//! identity is always element 0), and the class-2 normal form of
//! [`crate::class2`] for structured p-group families whose order makes a
//! table infeasible.

use std::collections::HashMap;

use crate::class2::Class2Group;
use crate::perm::Perm;
use crate::{Elem, Error, GroupLabel, Result};

/// Default cap on permutation closures.
pub const DEFAULT_CLOSURE_CAP: usize = 10_000;
/// Default cap on normal-form subgroup closures that cannot take the
/// span-based shortcut.
pub const DEFAULT_SUBGROUP_CAP: usize = 2_000_000;
/// Subgroups larger than this report order and normality only.
const MATERIALIZE_CAP: u64 = 400_000;

pub struct TableGroup {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
}

impl TableGroup {
    pub fn from_mul_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> TableGroup {
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = f(a, b) as u32;
            }
        }
        Self::finish(n, mul)
    }

    fn finish(n: usize, mul: Vec<u32>) -> TableGroup {
        let mut inv = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                if mul[a * n + b] == 0 {
                    inv[a] = b as u32;
                    break;
                }
            }
        }
        let mut orders = vec![0u32; n];
        for a in 0..n {
            let mut k = 1;
            let mut y = a as u32;
            while y != 0 {
                y = mul[y as usize * n + a];
                k += 1;
            }
            orders[a] = k;
        }
        TableGroup { n, mul, inv, orders }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.n + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    #[inline]
    pub fn order_of(&self, a: u32) -> u32 {
        self.orders[a as usize]
    }
}

pub enum Realization {
    Table(TableGroup),
    Class2(Class2Group),
}

pub struct FiniteGroup {
    name: String,
    label: Option<GroupLabel>,
    realization: Realization,
    named_generators: Vec<(String, Elem)>,
}

/// Result of a subgroup closure. `elements` is sorted when materialized;
/// very large normal-form subgroups report order and normality only.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub order: u64,
    pub is_normal: bool,
    pub elements: Option<Vec<Elem>>,
}

impl FiniteGroup {
    pub fn from_table(
        name: impl Into<String>,
        label: Option<GroupLabel>,
        table: TableGroup,
        named_generators: Vec<(String, Elem)>,
    ) -> FiniteGroup {
        FiniteGroup {
            name: name.into(),
            label,
            realization: Realization::Table(table),
            named_generators,
        }
    }

    pub fn from_class2(
        name: impl Into<String>,
        c2: Class2Group,
        named_generators: Vec<(String, Elem)>,
    ) -> FiniteGroup {
        FiniteGroup {
            name: name.into(),
            label: None,
            realization: Realization::Class2(c2),
            named_generators,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn label(&self) -> Option<GroupLabel> {
        self.label
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn set_label(&mut self, label: Option<GroupLabel>) {
        self.label = label;
    }

    pub fn order(&self) -> u64 {
        match &self.realization {
            Realization::Table(t) => t.n as u64,
            Realization::Class2(c) => c.order(),
        }
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.realization {
            Realization::Table(t) => t.mul(a as u32, b as u32) as Elem,
            Realization::Class2(c) => c.mul(a, b),
        }
    }

    pub fn inv(&self, a: Elem) -> Elem {
        match &self.realization {
            Realization::Table(t) => t.inv(a as u32) as Elem,
            Realization::Class2(c) => c.inv(a),
        }
    }

    /// Smallest k >= 1 with x^k = identity.
    pub fn element_order(&self, x: Elem) -> u32 {
        match &self.realization {
            Realization::Table(t) => t.order_of(x as u32),
            Realization::Class2(c) => c.element_order(x),
        }
    }

    /// a x a^-1
    pub fn conj(&self, a: Elem, x: Elem) -> Elem {
        self.mul(self.mul(a, x), self.inv(a))
    }

    /// x y x^-1 y^-1
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)))
    }

    pub fn pow(&self, x: Elem, k: i64) -> Elem {
        let base = if k < 0 { self.inv(x) } else { x };
        let mut acc = self.identity();
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn named_generators(&self) -> &[(String, Elem)] {
        &self.named_generators
    }

    pub fn generator_elems(&self) -> Vec<Elem> {
        self.named_generators.iter().map(|(_, e)| *e).collect()
    }

    pub fn table(&self) -> Option<&TableGroup> {
        match &self.realization {
            Realization::Table(t) => Some(t),
            _ => None,
        }
    }

    pub fn class2(&self) -> Option<&Class2Group> {
        match &self.realization {
            Realization::Class2(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_table_backed(&self) -> bool {
        matches!(self.realization, Realization::Table(_))
    }

    pub fn require_table(&self) -> Result<&TableGroup> {
        self.table().ok_or(Error::UnsupportedRealization)
    }

    /// Smallest subgroup containing `seed`, with order and normality.
    ///
    /// For the normal-form realization the closure takes an exact shortcut
    /// once z is known to lie in the subgroup (the subgroup is then the full
    /// preimage of the span of the projections); only the residual cases run
    /// a capped breadth-first closure.
    pub fn subgroup_generated(&self, seed: &[Elem], cap: Option<usize>) -> Result<Subgroup> {
        if seed.is_empty() {
            return Err(Error::InvalidInput("subgroup seed must be nonempty".into()));
        }
        match &self.realization {
            Realization::Table(t) => Ok(self.table_subgroup(t, seed)),
            Realization::Class2(c) => self.class2_subgroup(c, seed, cap),
        }
    }

    fn table_subgroup(&self, t: &TableGroup, seed: &[Elem]) -> Subgroup {
        let mut member = vec![false; t.n];
        member[0] = true;
        let mut elems: Vec<u32> = vec![0];
        let mut qi = 0;
        let gens: Vec<u32> = seed.iter().map(|&e| e as u32).collect();
        while qi < elems.len() {
            let u = elems[qi];
            qi += 1;
            for &g in &gens {
                let v = t.mul(u, g);
                if !member[v as usize] {
                    member[v as usize] = true;
                    elems.push(v);
                }
            }
        }
        let is_normal = self.named_generators.iter().all(|&(_, g)| {
            elems
                .iter()
                .all(|&h| member[t.mul(t.mul(g as u32, h), t.inv(g as u32)) as usize])
        });
        elems.sort_unstable();
        Subgroup {
            order: elems.len() as u64,
            is_normal,
            elements: Some(elems.into_iter().map(|e| e as Elem).collect()),
        }
    }

    fn class2_subgroup(&self, c: &Class2Group, seed: &[Elem], cap: Option<usize>) -> Result<Subgroup> {
        let p = c.p() as u64;
        let decoded: Vec<(Vec<u32>, u32)> = seed.iter().map(|&x| c.decode(x)).collect();

        // z is in the subgroup if a seed element is a pure central power, a
        // pairwise commutator is nontrivial, or a p-th power lands on z.
        let mut z_in = decoded.iter().any(|(u, cc)| u.iter().all(|&v| v == 0) && *cc != 0);
        if !z_in {
            'outer: for i in 0..decoded.len() {
                for j in i + 1..decoded.len() {
                    if c.form_apply(&decoded[i].0, &decoded[j].0) != 0 {
                        z_in = true;
                        break 'outer;
                    }
                }
            }
        }
        if !z_in {
            for &x in seed {
                if self.pow(x, c.p() as i64) != 0 {
                    z_in = true;
                    break;
                }
            }
        }

        let kernel_span = |vecs: &[Vec<u32>]| -> bool {
            let a = c.commutator_matrix();
            vecs.iter().all(|u| a.apply(u).iter().all(|&v| v == 0))
        };

        if z_in {
            let mut m = crate::zmod::MatZp::zero(c.p(), decoded.len(), c.rank());
            for (r, (u, _)) in decoded.iter().enumerate() {
                for (col, &v) in u.iter().enumerate() {
                    m.set(r, col, v);
                }
            }
            let dim = m.rank();
            let order = p.pow(dim as u32 + 1);
            let elements = if order <= MATERIALIZE_CAP {
                Some(self.enumerate_span_preimage(c, &decoded, dim))
            } else {
                None
            };
            // a subgroup containing z contains every commutator value z^k
            return Ok(Subgroup {
                order,
                is_normal: true,
                elements,
            });
        }

        // Residual case: honest closure with a cap.
        let cap = cap.unwrap_or(DEFAULT_SUBGROUP_CAP);
        let mut seen = std::collections::HashSet::new();
        seen.insert(0u64);
        let mut queue = vec![0u64];
        let mut qi = 0;
        while qi < queue.len() {
            let u = queue[qi];
            qi += 1;
            for &g in seed {
                let v = c.mul(u, g);
                if seen.insert(v) {
                    if seen.len() > cap {
                        return Err(Error::SizeExceeded { cap });
                    }
                    queue.push(v);
                }
            }
        }
        let z_member = seen.contains(&c.central());
        let is_normal = z_member || kernel_span(&decoded.iter().map(|(u, _)| u.clone()).collect::<Vec<_>>());
        let mut elems: Vec<Elem> = queue;
        elems.sort_unstable();
        Ok(Subgroup {
            order: elems.len() as u64,
            is_normal,
            elements: Some(elems),
        })
    }

    fn enumerate_span_preimage(
        &self,
        c: &Class2Group,
        decoded: &[(Vec<u32>, u32)],
        dim: usize,
    ) -> Vec<Elem> {
        // Row-reduce the projections to an independent basis, then walk all
        // combinations times all central powers.
        let mut m = crate::zmod::MatZp::zero(c.p(), decoded.len(), c.rank());
        for (r, (u, _)) in decoded.iter().enumerate() {
            for (col, &v) in u.iter().enumerate() {
                m.set(r, col, v);
            }
        }
        let (rank, reduced, _) = m.rref();
        debug_assert_eq!(rank, dim);
        let basis: Vec<Vec<u32>> = (0..rank)
            .map(|r| (0..reduced.cols).map(|cc| reduced.get(r, cc)).collect())
            .collect();
        let p = c.p();
        let mut elems = Vec::new();
        let mut combo = vec![0u32; dim];
        loop {
            let mut vec = vec![0u32; c.rank()];
            for (i, &co) in combo.iter().enumerate() {
                if co != 0 {
                    for (j, &bv) in basis[i].iter().enumerate() {
                        vec[j] = ((vec[j] as u64 + co as u64 * bv as u64) % p as u64) as u32;
                    }
                }
            }
            for cc in 0..p {
                elems.push(c.encode(&vec, cc));
            }
            // odometer over the combination coefficients
            let mut i = 0;
            loop {
                if i == dim {
                    elems.sort_unstable();
                    return elems;
                }
                combo[i] += 1;
                if combo[i] < p {
                    break;
                }
                combo[i] = 0;
                i += 1;
            }
        }
    }
}

/// Breadth-first closure of permutation generators into a table-backed group.
///
/// Element ids are assigned in BFS order from the identity using the given
/// generator order, so ids are reproducible across runs and platforms.
pub fn close_generators(generators: &[Perm], cap: Option<usize>) -> Result<FiniteGroup> {
    let cap = cap.unwrap_or(DEFAULT_CLOSURE_CAP);
    let degree = generators.first().map(|p| p.degree()).unwrap_or(1);
    if generators.iter().any(|p| p.degree() != degree) {
        return Err(Error::InvalidInput("generators have mixed degrees".into()));
    }
    let mut elems: Vec<Perm> = vec![Perm::identity(degree)];
    let mut index: HashMap<Perm, u32> = HashMap::new();
    index.insert(elems[0].clone(), 0);
    let mut qi = 0;
    while qi < elems.len() {
        let u = elems[qi].clone();
        qi += 1;
        for g in generators {
            let v = u.compose(g);
            if !index.contains_key(&v) {
                if elems.len() >= cap {
                    return Err(Error::SizeExceeded { cap });
                }
                index.insert(v.clone(), elems.len() as u32);
                elems.push(v);
            }
        }
    }
    let n = elems.len();
    let mut mul = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            mul[a * n + b] = index[&elems[a].compose(&elems[b])];
        }
    }
    let table = TableGroup::finish(n, mul);
    let named = generators
        .iter()
        .enumerate()
        .map(|(i, g)| (format!("g{}", i + 1), index[g] as Elem))
        .collect();
    Ok(FiniteGroup::from_table("closure", None, table, named))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_generator_list_gives_trivial_group() {
        let g = close_generators(&[], None).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.mul(0, 0), 0);
    }

    #[test]
    fn transposition_and_four_cycle_close_to_s4() {
        let a = Perm::from_cycles(4, &[&[0, 1]]);
        let b = Perm::from_cycles(4, &[&[0, 1, 2, 3]]);
        let g = close_generators(&[a, b], None).unwrap();
        assert_eq!(g.order(), 24);
        // independent oracle: the closure must be every permutation of 4 points
        let mut all = std::collections::HashSet::new();
        fn permute(points: &mut Vec<u32>, k: usize, out: &mut std::collections::HashSet<Vec<u32>>) {
            if k == points.len() {
                out.insert(points.clone());
                return;
            }
            for i in k..points.len() {
                points.swap(k, i);
                permute(points, k + 1, out);
                points.swap(k, i);
            }
        }
        permute(&mut vec![0, 1, 2, 3], 0, &mut all);
        assert_eq!(all.len(), 24);
    }

    #[test]
    fn commuting_involutions_close_to_klein_four() {
        let a = Perm::from_cycles(4, &[&[0, 1]]);
        let b = Perm::from_cycles(4, &[&[2, 3]]);
        let g = close_generators(&[a, b], None).unwrap();
        assert_eq!(g.order(), 4);
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(g.mul(x, y), g.mul(y, x));
            }
        }
    }

    #[test]
    fn closure_cap_is_enforced() {
        let a = Perm::from_cycles(5, &[&[0, 1]]);
        let b = Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]);
        match close_generators(&[a, b], Some(30)) {
            Err(Error::SizeExceeded { cap: 30 }) => {}
            other => panic!("expected size-exceeded, got {:?}", other.map(|g| g.order())),
        }
    }

    #[test]
    fn table_subgroup_basics() {
        let a = Perm::from_cycles(4, &[&[0, 1]]);
        let b = Perm::from_cycles(4, &[&[0, 1, 2, 3]]);
        let g = close_generators(&[a, b], None).unwrap();
        let trivial = g.subgroup_generated(&[0], None).unwrap();
        assert_eq!(trivial.order, 1);
        assert!(trivial.is_normal);
        let whole = g.subgroup_generated(&g.generator_elems(), None).unwrap();
        assert_eq!(whole.order, 24);
    }

    #[test]
    fn group_axioms_hold_for_closures() {
        let a = Perm::from_cycles(4, &[&[0, 1]]);
        let b = Perm::from_cycles(4, &[&[0, 1, 2, 3]]);
        let g = close_generators(&[a, b], None).unwrap();
        let n = g.order();
        assert_eq!(g.element_order(0), 1);
        for x in 0..n {
            assert_eq!(g.mul(x, g.inv(x)), 0);
            assert_eq!(g.mul(g.inv(x), x), 0);
            assert_eq!(g.mul(x, 0), x);
            assert_eq!(g.mul(0, x), x);
        }
        for x in 0..n {
            for y in 0..n {
                let xy = g.mul(x, y);
                for w in 0..n {
                    assert_eq!(g.mul(xy, w), g.mul(x, g.mul(y, w)));
                }
            }
        }
    }
}
