//! Explicit witness families: the block form over Z_p, the class-2
//! normal-form groups it presents, and the structure tuples they carry.
//!
//! Two presentation variants exist for each order. In variant H every
//! generator has trivial p-th power; in variant G the last two generators
//! power into z. For odd p and a non-degenerate form these are the two
//! isomorphism classes of extra-special p-groups of that order.

use std::fmt;
use std::str::FromStr;

use crate::braid::{check_structure, KodairaStructure};
use crate::class2::Class2Group;
use crate::group::FiniteGroup;
use crate::zmod::{self, MatZp};
use crate::{Elem, Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyVariant {
    H,
    G,
}

impl fmt::Display for FamilyVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyVariant::H => write!(f, "H"),
            FamilyVariant::G => write!(f, "G"),
        }
    }
}

impl FromStr for FamilyVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<FamilyVariant> {
        match s {
            "H" | "h" => Ok(FamilyVariant::H),
            "G" | "g" => Ok(FamilyVariant::G),
            _ => Err(Error::InvalidInput(format!("unknown variant `{s}`"))),
        }
    }
}

/// The scalar data (b, p, lambda, mu) behind the 4b x 4b block form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormSpec {
    pub b: usize,
    pub p: u32,
    pub lambda: Vec<u32>,
    pub mu: Vec<u32>,
}

impl FormSpec {
    pub fn validate(&self) -> Result<()> {
        let p = self.p as u64;
        if !zmod::is_prime(p) {
            return Err(Error::InvalidSpec(format!("{p} is not prime")));
        }
        if self.b < 2 {
            return Err(Error::InvalidSpec(format!("genus {} below 2", self.b)));
        }
        if self.lambda.len() != self.b || self.mu.len() != self.b {
            return Err(Error::InvalidSpec("scalar vector length differs from genus".into()));
        }
        for (name, v) in [("lambda", &self.lambda), ("mu", &self.mu)] {
            if v.iter().any(|&x| x % self.p == 0) {
                return Err(Error::InvalidSpec(format!("{name} contains a zero scalar")));
            }
            let sum: u64 = v.iter().map(|&x| x as u64).sum();
            if sum % p != 1 {
                return Err(Error::InvalidSpec(format!("{name} does not sum to 1 mod {p}")));
            }
        }
        for j in 0..self.b {
            if self.lambda[j] as u64 * self.mu[j] as u64 % p == 1 {
                return Err(Error::InvalidSpec(format!(
                    "lambda_j mu_j = 1 at handle {} (degenerate block)",
                    j + 1
                )));
            }
        }
        Ok(())
    }

    /// Deterministic default: lambda_j = mu_j = b^-1 mod p when that is
    /// valid, else the first valid pair in lexicographic order.
    pub fn default_for(b: usize, p: u32) -> Result<FormSpec> {
        if !zmod::is_prime(p as u64) {
            return Err(Error::InvalidSpec(format!("{p} is not prime")));
        }
        if b < 2 {
            return Err(Error::InvalidSpec(format!("genus {b} below 2")));
        }
        let bp = (b as u64 % p as u64) as u32;
        if bp != 0 {
            let c = zmod::inv_mod(bp, p);
            let spec = FormSpec {
                b,
                p,
                lambda: vec![c; b],
                mu: vec![c; b],
            };
            if spec.validate().is_ok() {
                return Ok(spec);
            }
        }
        // lexicographic search over nonzero vectors summing to 1
        let mut lam = Vec::new();
        if !next_sum_one_vector(b, p, &mut lam) {
            return Err(Error::InvalidSpec(format!(
                "no nonzero vector of length {b} sums to 1 mod {p}"
            )));
        }
        loop {
            let mut mu = Vec::new();
            if next_sum_one_vector(b, p, &mut mu) {
                loop {
                    let spec = FormSpec {
                        b,
                        p,
                        lambda: lam.clone(),
                        mu: mu.clone(),
                    };
                    if spec.validate().is_ok() {
                        return Ok(spec);
                    }
                    if !next_sum_one_vector(b, p, &mut mu) {
                        break;
                    }
                }
            }
            if !next_sum_one_vector(b, p, &mut lam) {
                return Err(Error::InvalidSpec(format!(
                    "no valid (lambda, mu) pair exists for b = {b}, p = {p}"
                )));
            }
        }
    }
}

/// Advance `v` to the next vector with entries in 1..p summing to 1 mod p,
/// starting from empty. Returns false when exhausted.
fn next_sum_one_vector(b: usize, p: u32, v: &mut Vec<u32>) -> bool {
    if v.is_empty() {
        v.resize(b, 1);
        if v.iter().map(|&x| x as u64).sum::<u64>() % p as u64 == 1 {
            return true;
        }
    }
    loop {
        let mut i = b;
        loop {
            if i == 0 {
                v.clear();
                return false;
            }
            i -= 1;
            v[i] += 1;
            if v[i] < p {
                break;
            }
            v[i] = 1;
        }
        if v.iter().map(|&x| x as u64).sum::<u64>() % p as u64 == 1 {
            return true;
        }
    }
}

/// Alternating matrix over Z_p with the block layout of the witness forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormMatrix {
    pub mat: MatZp,
}

impl FormMatrix {
    pub fn size(&self) -> usize {
        self.mat.rows
    }

    pub fn p(&self) -> u32 {
        self.mat.p
    }

    pub fn is_alternating(&self) -> bool {
        let m = &self.mat;
        (0..m.rows).all(|j| {
            m.get(j, j) == 0 && (0..m.rows).all(|k| (m.get(j, k) + m.get(k, j)) % m.p == 0)
        })
    }

    pub fn det(&self) -> u32 {
        self.mat.det()
    }

    pub fn rank(&self) -> usize {
        self.mat.rank()
    }
}

fn two_block(m: &mut MatZp, at: usize, upper: u32) {
    let p = m.p;
    m.set(at, at + 1, upper % p);
    m.set(at + 1, at, (p - upper % p) % p);
}

/// The 4b x 4b block matrix [[L, J], [J, M]] in the ordered basis
/// r_11, t_11, ..., r_1b, t_1b, r_21, t_21, ..., r_2b, t_2b.
/// Its determinant is prod_j (1 - lambda_j mu_j)^2, nonzero for valid specs.
pub fn omega_matrix(spec: &FormSpec) -> Result<FormMatrix> {
    spec.validate()?;
    Ok(omega_matrix_unchecked(spec))
}

fn omega_matrix_unchecked(spec: &FormSpec) -> FormMatrix {
    let (b, p) = (spec.b, spec.p);
    let n = 4 * b;
    let mut m = MatZp::zero(p, n, n);
    for j in 0..b {
        two_block(&mut m, 2 * j, spec.lambda[j]); // L block
        two_block(&mut m, 2 * b + 2 * j, spec.mu[j]); // M block
    }
    // J blocks on both off-diagonal positions: [[0, -1], [1, 0]] per handle
    for j in 0..b {
        let (r, c) = (2 * j, 2 * b + 2 * j);
        m.set(r, c + 1, p - 1);
        m.set(r + 1, c, 1);
        m.set(c, r + 1, p - 1);
        m.set(c + 1, r, 1);
    }
    FormMatrix { mat: m }
}

/// The rank-2b degenerate form [[J, J], [J, J]]: all scalars -1, which
/// satisfies the sum conditions exactly when p divides b + 1.
pub fn degenerate_omega(b: usize, p: u32) -> Result<FormMatrix> {
    if !zmod::is_prime(p as u64) {
        return Err(Error::InvalidSpec(format!("{p} is not prime")));
    }
    if b < 2 {
        return Err(Error::InvalidSpec(format!("genus {b} below 2")));
    }
    if (b as u64 + 1) % p as u64 != 0 {
        return Err(Error::Divisibility {
            p: p as u64,
            value: b as u64 + 1,
        });
    }
    let spec = FormSpec {
        b,
        p,
        lambda: vec![p - 1; b],
        mu: vec![p - 1; b],
    };
    Ok(omega_matrix_unchecked(&spec))
}

/// 2b x 2b standard form of the order-p^(2b+1) presentations:
/// [r_j, t_j] = z^-1 per handle, everything else commuting.
pub fn standard_form(b: usize, p: u32) -> FormMatrix {
    let mut m = MatZp::zero(p, 2 * b, 2 * b);
    for j in 0..b {
        two_block(&mut m, 2 * j, p - 1);
    }
    FormMatrix { mat: m }
}

/// Rank and kernel basis of the form by Gaussian elimination over Z_p.
pub fn kernel_of_form(form: &FormMatrix) -> (usize, Vec<Vec<u32>>) {
    (form.mat.rank(), form.mat.kernel_basis())
}

/// Build the class-2 normal-form group presented by an alternating matrix:
/// generators x_1..x_rank and central z, commutators through the matrix,
/// p-th powers trivial (variant H) or landing on z for the last two
/// generators (variant G).
pub fn build_class2_group(p: u32, a: &FormMatrix, variant: FamilyVariant) -> Result<FiniteGroup> {
    if !a.is_alternating() {
        return Err(Error::InvalidInput("form matrix is not alternating".into()));
    }
    if a.p() != p {
        return Err(Error::InvalidInput("form characteristic differs from p".into()));
    }
    let rank = a.size();
    let mut power_carry = vec![0u32; rank];
    if variant == FamilyVariant::G {
        if rank < 2 {
            return Err(Error::InvalidInput("variant G needs rank >= 2".into()));
        }
        power_carry[rank - 2] = 1;
        power_carry[rank - 1] = 1;
    }
    let c2 = Class2Group::new(p, &a.mat, power_carry)?;
    let mut named: Vec<(String, Elem)> = (0..rank)
        .map(|j| (format!("x{}", j + 1), c2.generator(j)))
        .collect();
    named.push(("z".into(), c2.central()));
    Ok(FiniteGroup::from_class2(
        format!("{variant}({rank}, p={p})"),
        c2,
        named,
    ))
}

fn require_prime_at_least(p: u32, min: u32) -> Result<()> {
    if !zmod::is_prime(p as u64) {
        return Err(Error::InvalidSpec(format!("{p} is not prime")));
    }
    if p < min {
        return Err(Error::InvalidSpec(format!("prime {p} below {min}")));
    }
    Ok(())
}

/// Witness on the order-p^(4b+1) group presented by the block form: the
/// generator-to-basis assignment reads the tuple straight off the ordered
/// basis, and K1, K2 land at index p^(2b). Requires p >= 5.
pub fn theorem1_structure(
    b: usize,
    p: u32,
    variant: FamilyVariant,
    spec: Option<FormSpec>,
) -> Result<(FiniteGroup, KodairaStructure)> {
    require_prime_at_least(p, 5)?;
    let spec = match spec {
        Some(s) => {
            if s.b != b || s.p != p {
                return Err(Error::InvalidSpec("form spec does not match (b, p)".into()));
            }
            s
        }
        None => FormSpec::default_for(b, p)?,
    };
    let omega = omega_matrix(&spec)?;
    let group = build_class2_group(p, &omega, variant)?;
    let c2 = group.class2().expect("just built");
    let mut tuple = Vec::with_capacity(4 * b + 1);
    for j in 0..b {
        tuple.push(c2.generator(2 * j)); // r_1j = x_{2j-1}
        tuple.push(c2.generator(2 * j + 1)); // t_1j = x_{2j}
    }
    for j in 0..b {
        tuple.push(c2.generator(2 * b + 2 * j)); // r_2j
        tuple.push(c2.generator(2 * b + 2 * j + 1)); // t_2j
    }
    tuple.push(c2.central());
    let cand = KodairaStructure {
        label: None,
        b,
        n: p,
        tuple,
    };
    let verdict = check_structure(&group, &cand)?;
    let expect_m = (p as u64).pow(2 * b as u32);
    if !verdict.is_structure || verdict.m1 != expect_m || verdict.m2 != expect_m {
        return Err(Error::InvalidSpec(format!(
            "constructed tuple failed verification (failing relation {:?}, m1 = {}, m2 = {})",
            verdict.failing_relation, verdict.m1, verdict.m2
        )));
    }
    Ok((group, cand))
}

/// Strong witness on the order-p^(2b+1) group: both rows share the same
/// handle generators. Requires p | b + 1.
pub fn theorem2_structure(
    b: usize,
    p: u32,
    variant: FamilyVariant,
) -> Result<(FiniteGroup, KodairaStructure)> {
    if b < 2 {
        return Err(Error::InvalidGenus(b));
    }
    require_prime_at_least(p, 2)?;
    if (b as u64 + 1) % p as u64 != 0 {
        return Err(Error::Divisibility {
            p: p as u64,
            value: b as u64 + 1,
        });
    }
    let form = standard_form(b, p);
    let group = build_class2_group(p, &form, variant)?;
    let c2 = group.class2().expect("just built");
    let mut tuple = Vec::with_capacity(4 * b + 1);
    for _ in 0..2 {
        for j in 0..b {
            tuple.push(c2.generator(2 * j));
            tuple.push(c2.generator(2 * j + 1));
        }
    }
    tuple.push(c2.central());
    let cand = KodairaStructure {
        label: None,
        b,
        n: p,
        tuple,
    };
    let verdict = check_structure(&group, &cand)?;
    if !verdict.is_structure || !verdict.is_strong {
        return Err(Error::InvalidSpec(format!(
            "constructed tuple failed verification (failing relation {:?})",
            verdict.failing_relation
        )));
    }
    Ok((group, cand))
}
