//! Exact rational evaluation of the fibration invariants.
//!
//! Everything here is integer and rational arithmetic; no floating point.
//! The fractional branching weight is nf = 1 - 1/n, and for a quotient of
//! type (b, n) with group order N and coset indices m1, m2:
//!
//! ```text
//! b_i - 1 = m_i (b - 1)
//! 2 g_i - 2 = (N / m_i)(2b - 2 + nf)
//! c1^2 = N (2b - 2)(4b - 4 + 4 nf - nf^2)
//! c2   = N (2b - 2)(2b - 2 + nf)
//! nu = c1^2 / c2,   sigma = (c1^2 - 2 c2) / 3
//! ```

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::zmod::is_prime;
use crate::{Error, Result};

pub fn big(n: u128) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibrationInvariants {
    pub b: u64,
    pub n: u64,
    pub group_order: u128,
    pub m1: u128,
    pub m2: u128,
    pub b1: u128,
    pub b2: u128,
    pub g1: BigRational,
    pub g2: BigRational,
    /// Fibre genera are guaranteed integral only for genuine quotients.
    pub g_integral: bool,
    pub n_frac: BigRational,
    pub c1_sq: BigRational,
    pub c2: BigRational,
    pub nu: BigRational,
    pub sigma: BigRational,
}

/// All invariant fields from the covering data, exactly.
pub fn covering_data(b: u64, n: u64, group_order: u128, m1: u128, m2: u128) -> Result<FibrationInvariants> {
    if b < 2 {
        return Err(Error::InvalidInput(format!("base genus {b} below 2")));
    }
    if n < 2 {
        return Err(Error::InvalidType(n as u32));
    }
    if group_order == 0 {
        return Err(Error::InvalidInput("group order must be positive".into()));
    }
    for (name, m) in [("m1", m1), ("m2", m2)] {
        if m == 0 || group_order % m != 0 {
            return Err(Error::InvalidInput(format!(
                "{name} = {m} does not divide the group order {group_order}"
            )));
        }
    }
    let nf = BigRational::one() - ratio(1, n as i64);
    let order = big(group_order);
    let two_b_minus_2 = ratio(2 * b as i64 - 2, 1);

    let c1_sq = &order
        * &two_b_minus_2
        * (ratio(4 * b as i64 - 4, 1) + ratio(4, 1) * &nf - &nf * &nf);
    let c2 = &order * &two_b_minus_2 * (&two_b_minus_2 + &nf);
    let nu = &c1_sq / &c2;
    let sigma = (&c1_sq - ratio(2, 1) * &c2) / ratio(3, 1);

    let g_of = |m: u128| -> BigRational {
        // 2g - 2 = (N/m)(2b - 2 + nf)
        (big(group_order / m) * (&two_b_minus_2 + &nf) + ratio(2, 1)) / ratio(2, 1)
    };
    let g1 = g_of(m1);
    let g2 = g_of(m2);
    let g_integral = g1.is_integer() && g2.is_integer();

    Ok(FibrationInvariants {
        b,
        n,
        group_order,
        m1,
        m2,
        b1: m1 * (b as u128 - 1) + 1,
        b2: m2 * (b as u128 - 1) + 1,
        g1,
        g2,
        g_integral,
        n_frac: nf,
        c1_sq,
        c2,
        nu,
        sigma,
    })
}

/// True iff 0 < nu - 2 < 6 - 4 sqrt(2), decided exactly: with s = nu - 2,
/// the condition is s > 0, s < 6 and (6 - s)^2 > 32.
pub fn diagonal_slope_bound(nu: &BigRational) -> bool {
    let s = nu - ratio(2, 1);
    if !s.is_positive() {
        return false;
    }
    let six_minus_s = ratio(6, 1) - &s;
    if !six_minus_s.is_positive() {
        return false;
    }
    &six_minus_s * &six_minus_s > ratio(32, 1)
}

#[derive(Clone, Debug)]
pub struct SlopeReport {
    /// (p, slope, signature) for the order-p^9 family at base genus 2.
    pub points: Vec<(u64, BigRational, BigRational)>,
    pub max_attained_at_5_and_7: bool,
    pub strictly_decreasing_from_7: bool,
    pub all_above_2_plus_1_3: bool,
    pub all_in_diagonal_range: bool,
}

/// Slope and signature of the non-strong family at genus 2 for each listed
/// prime, with the monotonicity facts the series satisfies.
pub fn slope_series(primes: &[u64]) -> Result<SlopeReport> {
    if primes.is_empty() {
        return Err(Error::InvalidInput("empty prime list".into()));
    }
    for &p in primes {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        if p < 5 {
            return Err(Error::InvalidInput(format!("prime {p} below 5")));
        }
    }
    let mut points = Vec::with_capacity(primes.len());
    for &p in primes {
        let order = (p as u128).pow(9);
        let m = (p as u128).pow(4);
        let inv = covering_data(2, p, order, m, m)?;
        points.push((p, inv.nu, inv.sigma));
    }
    let bound = ratio(2, 1) + ratio(1, 3);
    let max_nu = points.iter().map(|(_, nu, _)| nu.clone()).max().unwrap();
    let attained: Vec<u64> = points
        .iter()
        .filter(|(_, nu, _)| *nu == max_nu)
        .map(|&(p, ..)| p)
        .collect();
    let max_attained_at_5_and_7 = attained
        .iter()
        .all(|p| *p == 5 || *p == 7);
    let from7: Vec<&BigRational> = points
        .iter()
        .filter(|&&(p, ..)| p >= 7)
        .map(|(_, nu, _)| nu)
        .collect();
    let strictly_decreasing_from_7 = from7.windows(2).all(|w| w[0] > w[1]);
    let all_above = points.iter().all(|(_, nu, _)| *nu > bound);
    let all_diag = points.iter().all(|(_, nu, _)| diagonal_slope_bound(nu));
    Ok(SlopeReport {
        points,
        max_attained_at_5_and_7,
        strictly_decreasing_from_7,
        all_above_2_plus_1_3: all_above,
        all_in_diagonal_range: all_diag,
    })
}

/// Number of distinct prime factors, by trial division.
pub fn omega_prime_factors(m: u64) -> u32 {
    let mut m = m;
    let mut count = 0;
    let mut d = 2;
    while d as u128 * d as u128 <= m as u128 {
        if m % d == 0 {
            count += 1;
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        count += 1;
    }
    count
}

/// Lower bound on the number of distinct fibrations over a genus-b base.
pub fn kappa_lower_bound(b: u64) -> u32 {
    omega_prime_factors(b + 1)
}

/// Render a rational as `q` or `q + a/b` with 0 < a/b < 1, for tables.
pub fn display_mixed(r: &BigRational) -> String {
    let whole = r.floor();
    let frac = r - &whole;
    if frac.is_zero() {
        format!("{}", whole.numer())
    } else {
        format!("{} + {}/{}", whole.numer(), frac.numer(), frac.denom())
    }
}
