//! Arithmetic and Gaussian elimination over the prime field Z_p.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Multiplicative inverse mod a prime.
pub fn inv_mod(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2) mod p
    debug_assert!(a % p != 0);
    let mut result: u64 = 1;
    let mut base = (a % p) as u64;
    let mut e = p - 2;
    let m = p as u64;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    result as u32
}

/// Dense matrix over Z_p, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatZp {
    pub p: u32,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u32>,
}

impl MatZp {
    pub fn zero(p: u32, rows: usize, cols: usize) -> MatZp {
        MatZp {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }

    /// Row-reduce a copy, returning (rank, reduced echelon matrix, pivot columns).
    pub fn rref(&self) -> (usize, MatZp, Vec<usize>) {
        let p = self.p as u64;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            let Some(pr) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            for c in 0..m.cols {
                let a = m.get(row, c);
                let b = m.get(pr, c);
                m.set(row, c, b);
                m.set(pr, c, a);
            }
            let inv = inv_mod(m.get(row, col), m.p) as u64;
            for c in 0..m.cols {
                let v = (m.get(row, c) as u64 * inv % p) as u32;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r != row && m.get(r, col) != 0 {
                    let f = m.get(r, col) as u64;
                    for c in 0..m.cols {
                        let v = (m.get(r, c) as u64 + (p - f) * m.get(row, c) as u64 % p) % p;
                        m.set(r, c, v as u32);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == m.rows {
                break;
            }
        }
        (row, m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().0
    }

    /// Basis of the right null space `{v : A v = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        let (_, m, pivots) = self.rref();
        let p = self.p;
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                let coeff = m.get(r, free);
                if coeff != 0 {
                    v[pc] = (p - coeff) % p;
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Determinant of a square matrix by elimination.
    pub fn det(&self) -> u32 {
        assert_eq!(self.rows, self.cols);
        let p = self.p as u64;
        let mut m = self.clone();
        let mut det: u64 = 1;
        for col in 0..m.cols {
            let Some(pr) = (col..m.rows).find(|&r| m.get(r, col) != 0) else {
                return 0;
            };
            if pr != col {
                for c in 0..m.cols {
                    let a = m.get(col, c);
                    let b = m.get(pr, c);
                    m.set(col, c, b);
                    m.set(pr, c, a);
                }
                det = det * (p - 1) % p;
            }
            let piv = m.get(col, col) as u64;
            det = det * piv % p;
            let inv = inv_mod(piv as u32, m.p) as u64;
            for r in col + 1..m.rows {
                if m.get(r, col) != 0 {
                    let f = m.get(r, col) as u64 * inv % p;
                    for c in col..m.cols {
                        let v = (m.get(r, c) as u64 + (p - f) * m.get(col, c) as u64 % p) % p;
                        m.set(r, c, v as u32);
                    }
                }
            }
        }
        det as u32
    }

    /// `A v` as a column vector.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        (0..self.rows)
            .map(|r| {
                let mut acc = 0u64;
                for c in 0..self.cols {
                    acc = (acc + self.get(r, c) as u64 * v[c] as u64) % p;
                }
                acc as u32
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_mod() {
        for p in [2u32, 3, 5, 7, 11] {
            for a in 1..p {
                assert_eq!(a as u64 * inv_mod(a, p) as u64 % p as u64, 1);
            }
        }
    }

    #[test]
    fn rank_kernel_det() {
        // [[0, 1], [-1, 0]] over Z_5: invertible
        let mut m = MatZp::zero(5, 2, 2);
        m.set(0, 1, 1);
        m.set(1, 0, 4);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.det(), 1);
        assert!(m.kernel_basis().is_empty());

        // all-ones 2x2 over Z_3: rank 1, kernel (1, -1)
        let mut s = MatZp::zero(3, 2, 2);
        for r in 0..2 {
            for c in 0..2 {
                s.set(r, c, 1);
            }
        }
        assert_eq!(s.rank(), 1);
        let k = s.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(s.apply(&k[0]), vec![0, 0]);
        assert_eq!(s.det(), 0);

        let zero = MatZp::zero(3, 3, 3);
        assert_eq!(zero.rank(), 0);
        assert_eq!(zero.kernel_basis().len(), 3);
    }
}
