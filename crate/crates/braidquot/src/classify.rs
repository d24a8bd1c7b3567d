//! Structural queries: center, conjugacy classes, the normal subgroup
//! lattice, classification flags, and brute-force automorphism enumeration.

use std::collections::HashSet;

use crate::group::FiniteGroup;
use crate::zmod;
use crate::{Elem, Error, Result};

/// Default order cap for automorphism enumeration.
pub const DEFAULT_AUT_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub abelian: bool,
    /// Non-abelian with commutativity transitive on non-central elements.
    /// `None` when the realization does not support the check.
    pub cct: Option<bool>,
    /// Unique minimal non-trivial normal subgroup. `None` as above.
    pub monolithic: Option<bool>,
    pub extra_special: bool,
    pub center_order: u64,
    pub derived_order: u64,
}

pub fn center(g: &FiniteGroup) -> Result<Vec<Elem>> {
    let t = g.require_table()?;
    let gens = g.generator_elems();
    Ok((0..t.n() as Elem)
        .filter(|&x| gens.iter().all(|&s| g.mul(x, s) == g.mul(s, x)))
        .collect())
}

pub fn conjugacy_classes(g: &FiniteGroup) -> Result<Vec<Vec<Elem>>> {
    let t = g.require_table()?;
    let n = t.n();
    let gens = g.generator_elems();
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for x in 0..n as Elem {
        if class_of[x as usize] != usize::MAX {
            continue;
        }
        let idx = classes.len();
        let mut orbit = vec![x];
        class_of[x as usize] = idx;
        let mut qi = 0;
        while qi < orbit.len() {
            let u = orbit[qi];
            qi += 1;
            for &s in &gens {
                let v = g.conj(s, u);
                if class_of[v as usize] == usize::MAX {
                    class_of[v as usize] = idx;
                    orbit.push(v);
                }
            }
        }
        orbit.sort_unstable();
        classes.push(orbit);
    }
    Ok(classes)
}

pub fn derived_subgroup(g: &FiniteGroup) -> Result<Vec<Elem>> {
    let t = g.require_table()?;
    let n = t.n() as Elem;
    let mut comms: Vec<Elem> = Vec::new();
    let mut seen = vec![false; n as usize];
    for x in 0..n {
        for y in x + 1..n {
            let c = g.commutator(x, y);
            if !seen[c as usize] {
                seen[c as usize] = true;
                comms.push(c);
            }
        }
    }
    if comms.is_empty() {
        comms.push(0);
    }
    let sub = g.subgroup_generated(&comms, None)?;
    Ok(sub.elements.expect("table subgroups materialize"))
}

/// Every normal subgroup, as sorted element lists. Includes the trivial and
/// the full subgroup. Normal subgroups are exactly the subgroups generated
/// by unions of conjugacy classes, so the lattice is walked by repeatedly
/// adjoining one class to an already-found normal subgroup.
pub fn normal_subgroups_all(g: &FiniteGroup) -> Result<Vec<Vec<Elem>>> {
    let classes = conjugacy_classes(g)?;
    let trivial = vec![0 as Elem];
    let mut found: HashSet<Vec<Elem>> = HashSet::new();
    found.insert(trivial.clone());
    let mut queue = vec![trivial];
    let mut qi = 0;
    while qi < queue.len() {
        let base = queue[qi].clone();
        qi += 1;
        let base_set: HashSet<Elem> = base.iter().copied().collect();
        for cls in &classes {
            if base_set.contains(&cls[0]) {
                continue;
            }
            let mut seed = base.clone();
            seed.extend_from_slice(cls);
            let sub = g.subgroup_generated(&seed, None)?;
            let elems = sub.elements.expect("table subgroups materialize");
            if !found.contains(&elems) {
                found.insert(elems.clone());
                queue.push(elems);
            }
        }
    }
    let mut out: Vec<Vec<Elem>> = found.into_iter().collect();
    out.sort_by_key(|s| (s.len(), s.clone()));
    Ok(out)
}

/// Minimal non-trivial normal subgroups: inclusion-minimal normal closures
/// of single conjugacy classes.
pub fn minimal_normal_subgroups(g: &FiniteGroup) -> Result<Vec<Vec<Elem>>> {
    let classes = conjugacy_classes(g)?;
    let mut closures: Vec<Vec<Elem>> = Vec::new();
    let mut seen = HashSet::new();
    for cls in classes.iter().skip(1) {
        let sub = g.subgroup_generated(cls, None)?;
        let elems = sub.elements.expect("table subgroups materialize");
        if seen.insert(elems.clone()) {
            closures.push(elems);
        }
    }
    let mut minimal = Vec::new();
    'outer: for cand in &closures {
        let cand_set: HashSet<Elem> = cand.iter().copied().collect();
        for other in &closures {
            if other.len() < cand.len() && other.iter().all(|e| cand_set.contains(e)) {
                continue 'outer;
            }
        }
        minimal.push(cand.clone());
    }
    Ok(minimal)
}

/// The literal triple check over non-central elements, with early exit.
fn cct_table(g: &FiniteGroup, center_set: &[bool]) -> bool {
    let n = g.order() as Elem;
    let noncentral: Vec<Elem> = (0..n).filter(|&x| !center_set[x as usize]).collect();
    for &x in &noncentral {
        for &y in &noncentral {
            if g.mul(x, y) != g.mul(y, x) {
                continue;
            }
            for &w in &noncentral {
                if g.mul(y, w) == g.mul(w, y) && g.mul(x, w) != g.mul(w, x) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn classify(g: &FiniteGroup) -> Result<Classification> {
    if let Some(c2) = g.class2() {
        let abelian = c2.is_abelian();
        return Ok(Classification {
            abelian,
            cct: if abelian { Some(false) } else { None },
            monolithic: None,
            extra_special: c2.is_extra_special(),
            center_order: c2.center_order(),
            derived_order: c2.derived_order(),
        });
    }
    let t = g.require_table()?;
    let n = t.n();
    let z = center(g)?;
    let mut center_set = vec![false; n];
    for &x in &z {
        center_set[x as usize] = true;
    }
    let abelian = z.len() == n;
    let cct = if abelian { false } else { cct_table(g, &center_set) };
    let derived = derived_subgroup(g)?;
    let monolithic = minimal_normal_subgroups(g)?.len() == 1;

    // extra-special: |Z| = p prime, [G,G] <= Z, and x^p central for all x
    let extra_special = 'es: {
        let zl = z.len() as u64;
        if !zmod::is_prime(zl) {
            break 'es false;
        }
        let p = zl;
        let mut m = n as u64;
        while m % p == 0 {
            m /= p;
        }
        if m != 1 || n as u64 == p {
            break 'es false;
        }
        if !derived.iter().all(|&c| center_set[c as usize]) {
            break 'es false;
        }
        (0..n as Elem).all(|x| center_set[g.pow(x, p as i64) as usize])
    };

    Ok(Classification {
        abelian,
        cct: Some(cct),
        monolithic: Some(monolithic),
        extra_special,
        center_order: z.len() as u64,
        derived_order: derived.len() as u64,
    })
}

/// Greedy minimal generating sequence: repeatedly adjoin the first element
/// (in id order) that enlarges the generated subgroup.
pub fn greedy_generating_seq(g: &FiniteGroup) -> Result<Vec<Elem>> {
    let t = g.require_table()?;
    let n = t.n() as u64;
    let mut gens: Vec<Elem> = Vec::new();
    let mut have: HashSet<Elem> = HashSet::new();
    have.insert(0);
    while (have.len() as u64) < n {
        let next = (0..n).find(|x| !have.contains(x)).expect("subgroup is proper");
        gens.push(next);
        let sub = g.subgroup_generated(&gens, None)?;
        have = sub.elements.expect("table subgroups materialize").into_iter().collect();
    }
    if gens.is_empty() {
        gens.push(0);
    }
    Ok(gens)
}

/// All automorphisms of a table-backed group, each as a permutation of
/// element ids. Backtracking over images of the greedy generating sequence
/// with incremental consistency checks against the multiplication table.
pub fn automorphism_group(g: &FiniteGroup, cap: Option<usize>) -> Result<Vec<Vec<Elem>>> {
    let t = g.require_table()?;
    let cap = cap.unwrap_or(DEFAULT_AUT_CAP);
    let n = t.n();
    if n > cap {
        return Err(Error::SizeExceeded { cap });
    }
    if n == 1 {
        return Ok(vec![vec![0]]);
    }
    let gens = greedy_generating_seq(g)?;
    let classes = conjugacy_classes(g)?;
    let mut class_size = vec![0usize; n];
    for cls in &classes {
        for &x in cls {
            class_size[x as usize] = cls.len();
        }
    }
    // image candidates must match element order and conjugacy class size
    let invariant =
        |x: Elem| -> (u32, usize) { (g.element_order(x), class_size[x as usize]) };
    let inv_of: Vec<(u32, usize)> = (0..n as Elem).map(invariant).collect();

    struct State<'a> {
        g: &'a FiniteGroup,
        gens: &'a [Elem],
        inv_of: &'a [(u32, usize)],
        n: usize,
        results: Vec<Vec<Elem>>,
    }

    fn extend_closure(
        g: &FiniteGroup,
        gens: &[Elem],
        phi: &mut [Option<Elem>],
        used: &mut [bool],
        domain: &mut Vec<Elem>,
    ) -> bool {
        let mut qi = 0;
        while qi < domain.len() {
            let u = domain[qi];
            qi += 1;
            let fu = phi[u as usize].expect("domain elements are mapped");
            for &s in gens {
                let Some(fs) = phi[s as usize] else { continue };
                let v = g.mul(u, s);
                let fv = g.mul(fu, fs);
                match phi[v as usize] {
                    Some(existing) => {
                        if existing != fv {
                            return false;
                        }
                    }
                    None => {
                        if used[fv as usize] {
                            return false;
                        }
                        phi[v as usize] = Some(fv);
                        used[fv as usize] = true;
                        domain.push(v);
                    }
                }
            }
        }
        true
    }

    fn rec(st: &mut State, k: usize, phi: &[Option<Elem>], used: &[bool], domain: &[Elem]) {
        if k == st.gens.len() {
            // phi covers <gens> = G; confirm the homomorphism law row by row
            let full: Vec<Elem> = (0..st.n)
                .map(|x| phi[x].expect("generators generate the group"))
                .collect();
            for &gg in st.gens {
                let fg = full[gg as usize];
                for x in 0..st.n as Elem {
                    if full[st.g.mul(gg, x) as usize] != st.g.mul(fg, full[x as usize]) {
                        return;
                    }
                }
            }
            st.results.push(full);
            return;
        }
        let target = st.gens[k];
        let want = st.inv_of[target as usize];
        for c in 0..st.n as Elem {
            if st.inv_of[c as usize] != want || used[c as usize] {
                continue;
            }
            let mut phi2 = phi.to_vec();
            let mut used2 = used.to_vec();
            let mut domain2 = domain.to_vec();
            phi2[target as usize] = Some(c);
            used2[c as usize] = true;
            domain2.push(target);
            if extend_closure(st.g, &st.gens[..k + 1], &mut phi2, &mut used2, &mut domain2) {
                rec(st, k + 1, &phi2, &used2, &domain2);
            }
        }
    }

    let mut st = State {
        g,
        gens: &gens,
        inv_of: &inv_of,
        n,
        results: Vec::new(),
    };
    let mut phi = vec![None; n];
    let mut used = vec![false; n];
    phi[0] = Some(0);
    used[0] = true;
    rec(&mut st, 0, &phi, &used, &[0]);
    Ok(st.results)
}
