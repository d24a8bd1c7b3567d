//! Class-2 normal-form groups.
//!
//! Elements are collected words `x_1^{e_1} ... x_r^{e_r} z^c` over a fixed
//! generator order, with all exponents mod p. Products reorder the second
//! factor past the first; every transposed generator pair contributes a
//! z-power through the commutator matrix, and p-th power spillover carries
//! into z through the power vector. This realizes groups of order p^(r+1)
//! without storing a multiplication table.

use crate::zmod::{self, MatZp};
use crate::{Elem, Error, Result};

#[derive(Clone, Debug)]
pub struct Class2Group {
    p: u32,
    rank: usize,
    /// Skew-symmetric commutator matrix: `[x_j, x_k] = z^{a[j][k]}` (0-indexed).
    a: Vec<u32>,
    /// `x_j^p = z^{power_carry[j]}`.
    power_carry: Vec<u32>,
    order: u64,
    /// Mixed-radix weights: id = sum e_j p^j + c p^rank.
    radix: Vec<u64>,
}

impl Class2Group {
    pub fn new(p: u32, a: &MatZp, power_carry: Vec<u32>) -> Result<Class2Group> {
        if !zmod::is_prime(p as u64) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        let rank = a.rows;
        if a.cols != rank || power_carry.len() != rank {
            return Err(Error::InvalidInput("commutator matrix shape mismatch".into()));
        }
        if a.p != p {
            return Err(Error::InvalidInput("matrix characteristic differs from p".into()));
        }
        for j in 0..rank {
            if a.get(j, j) != 0 {
                return Err(Error::InvalidInput("commutator matrix has nonzero diagonal".into()));
            }
            for k in 0..rank {
                if (a.get(j, k) + a.get(k, j)) % p != 0 {
                    return Err(Error::InvalidInput("commutator matrix is not skew-symmetric".into()));
                }
            }
        }
        let mut radix = Vec::with_capacity(rank + 1);
        let mut w = 1u64;
        for _ in 0..=rank {
            radix.push(w);
            w = w
                .checked_mul(p as u64)
                .ok_or_else(|| Error::InvalidInput("group order overflows u64".into()))?;
        }
        Ok(Class2Group {
            p,
            rank,
            a: a.data.clone(),
            power_carry: power_carry.into_iter().map(|v| v % p).collect(),
            order: w,
            radix,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn a_entry(&self, j: usize, k: usize) -> u32 {
        self.a[j * self.rank + k]
    }

    pub fn commutator_matrix(&self) -> MatZp {
        MatZp {
            p: self.p,
            rows: self.rank,
            cols: self.rank,
            data: self.a.clone(),
        }
    }

    pub fn power_carry(&self) -> &[u32] {
        &self.power_carry
    }

    /// Generator x_{j+1} for j in 0..rank.
    pub fn generator(&self, j: usize) -> Elem {
        self.radix[j]
    }

    /// The distinguished central generator z.
    pub fn central(&self) -> Elem {
        self.radix[self.rank]
    }

    pub fn encode(&self, e: &[u32], c: u32) -> Elem {
        debug_assert_eq!(e.len(), self.rank);
        let mut id = (c % self.p) as u64 * self.radix[self.rank];
        for j in 0..self.rank {
            id += (e[j] % self.p) as u64 * self.radix[j];
        }
        id
    }

    pub fn decode(&self, x: Elem) -> (Vec<u32>, u32) {
        let mut rest = x;
        let mut e = vec![0u32; self.rank];
        for j in 0..self.rank {
            e[j] = (rest % self.p as u64) as u32;
            rest /= self.p as u64;
        }
        (e, rest as u32)
    }

    /// Exponent vector of the image in G/<z>.
    pub fn proj(&self, x: Elem) -> Vec<u32> {
        self.decode(x).0
    }

    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        let p = self.p as u64;
        let (e, c) = self.decode(x);
        let (f, d) = self.decode(y);
        let mut central = (c as u64 + d as u64) % p;
        // reordering: x_k^{e_k} past x_j^{f_j} for k > j
        for j in 0..self.rank {
            if f[j] == 0 {
                continue;
            }
            let fj = f[j] as u64;
            for k in j + 1..self.rank {
                if e[k] != 0 {
                    central =
                        (central + self.a[k * self.rank + j] as u64 * e[k] as u64 % p * fj) % p;
                }
            }
        }
        let mut id = central;
        let mut acc = 0u64;
        for j in 0..self.rank {
            let s = e[j] + f[j];
            let (rem, carry) = if s >= self.p { (s - self.p, 1u64) } else { (s, 0) };
            if carry == 1 && self.power_carry[j] != 0 {
                id = (id + self.power_carry[j] as u64) % p;
            }
            acc += rem as u64 * self.radix[j];
        }
        acc + id * self.radix[self.rank]
    }

    pub fn inv(&self, x: Elem) -> Elem {
        let (e, _) = self.decode(x);
        let f: Vec<u32> = e.iter().map(|&v| (self.p - v) % self.p).collect();
        let probe = self.encode(&f, 0);
        let residue = self.mul(x, probe); // = z^t for some t
        let t = (residue / self.radix[self.rank]) as u32;
        debug_assert_eq!(residue % self.radix[self.rank], 0);
        probe + ((self.p - t) % self.p) as u64 * self.radix[self.rank]
    }

    pub fn element_order(&self, x: Elem) -> u32 {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// `u^T A v` mod p: the z-exponent of the commutator of lifts of u and v.
    pub fn form_apply(&self, u: &[u32], v: &[u32]) -> u32 {
        let p = self.p as u64;
        let mut acc = 0u64;
        for j in 0..self.rank {
            if u[j] == 0 {
                continue;
            }
            for k in 0..self.rank {
                acc = (acc + u[j] as u64 * self.a[j * self.rank + k] as u64 % p * v[k] as u64) % p;
            }
        }
        acc as u32
    }

    pub fn nullity(&self) -> usize {
        self.rank - self.commutator_matrix().rank()
    }

    /// |Z(G)| = p^(1 + dim ker A).
    pub fn center_order(&self) -> u64 {
        self.radix[1 + self.nullity()]
    }

    pub fn is_central(&self, x: Elem) -> bool {
        let u = self.proj(x);
        self.commutator_matrix().apply(&u).iter().all(|&v| v == 0)
    }

    /// [G, G] is z^(im A): trivial iff A = 0, else of order p.
    pub fn derived_order(&self) -> u64 {
        if self.a.iter().all(|&v| v == 0) {
            1
        } else {
            self.p as u64
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.derived_order() == 1
    }

    /// Extra-special iff the form is non-degenerate (center exactly <z>).
    pub fn is_extra_special(&self) -> bool {
        self.nullity() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn heisenberg(p: u32) -> Class2Group {
        // [x1, x2] = z^{-1}
        let mut a = MatZp::zero(p, 2, 2);
        a.set(0, 1, p - 1);
        a.set(1, 0, 1);
        Class2Group::new(p, &a, vec![0, 0]).unwrap()
    }

    #[test]
    fn heisenberg_3_basics() {
        let g = heisenberg(3);
        assert_eq!(g.order(), 27);
        let x1 = g.generator(0);
        let x2 = g.generator(1);
        let z = g.central();
        assert_eq!(g.element_order(z), 3);
        assert_eq!(g.element_order(x1), 3);
        // [x1, x2] = x1 x2 x1^-1 x2^-1 = z^-1 = z^2
        let comm = g.mul(g.mul(g.mul(x1, x2), g.inv(x1)), g.inv(x2));
        assert_eq!(comm, g.mul(z, z));
        assert!(g.is_central(z));
        assert!(!g.is_central(x1));
        assert_eq!(g.center_order(), 3);
        assert!(g.is_extra_special());
    }

    #[test]
    fn quaternion_as_rank2_variant_g() {
        // p = 2, x1^2 = x2^2 = z, [x1, x2] = z: the quaternion group
        let mut a = MatZp::zero(2, 2, 2);
        a.set(0, 1, 1);
        a.set(1, 0, 1);
        let g = Class2Group::new(2, &a, vec![1, 1]).unwrap();
        assert_eq!(g.order(), 8);
        let orders: Vec<u32> = (0..8).map(|x| g.element_order(x)).collect();
        let twos = orders.iter().filter(|&&o| o == 2).count();
        let fours = orders.iter().filter(|&&o| o == 4).count();
        assert_eq!((twos, fours), (1, 6)); // unique involution
    }

    #[test]
    fn associativity_exhaustive_small() {
        for g in [heisenberg(2), heisenberg(3)] {
            let n = g.order();
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

    #[test]
    fn inverse_roundtrip() {
        let g = heisenberg(5);
        for x in 0..g.order() {
            assert_eq!(g.mul(x, g.inv(x)), 0);
            assert_eq!(g.mul(g.inv(x), x), 0);
        }
    }

    #[test]
    fn rejects_bad_matrices() {
        let mut a = MatZp::zero(5, 2, 2);
        a.set(0, 1, 2);
        a.set(1, 0, 2); // not skew
        assert!(Class2Group::new(5, &a, vec![0, 0]).is_err());
        let ok = MatZp::zero(5, 2, 2);
        assert!(Class2Group::new(4, &ok, vec![0, 0]).is_err()); // p not prime
    }
}
