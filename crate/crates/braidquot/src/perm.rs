//! Permutations on a fixed set of points, 0-indexed internally.

use std::fmt;

use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Build from a 1-indexed image list, validating that it is a bijection.
    pub fn from_images_one_indexed(images: &[u32]) -> Result<Perm> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        let mut v = Vec::with_capacity(degree);
        for &im in images {
            if im == 0 || im as usize > degree {
                return Err(Error::InvalidInput(format!(
                    "permutation image {im} out of range 1..={degree}"
                )));
            }
            let x = im - 1;
            if seen[x as usize] {
                return Err(Error::InvalidInput(format!(
                    "permutation repeats image {im}"
                )));
            }
            seen[x as usize] = true;
            v.push(x);
        }
        Ok(Perm { images: v })
    }

    /// Cycle notation on 0-indexed points, e.g. `&[&[0, 1]]` for a transposition.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Perm {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for cyc in cycles {
            for (i, &x) in cyc.iter().enumerate() {
                images[x as usize] = cyc[(i + 1) % cyc.len()];
            }
        }
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    /// `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            v[im as usize] = i as u32;
        }
        Perm { images: v }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i as u32 == im)
    }

    pub fn images_one_indexed(&self) -> Vec<u32> {
        self.images.iter().map(|&x| x + 1).collect()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.images.iter().map(|&x| (x + 1).to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}
