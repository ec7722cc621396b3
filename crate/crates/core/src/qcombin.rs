//! q-analog combinatorics in arbitrary precision: `σ_i`, `α(m,u)`, `β(m,u)`,
//! Gaussian binomials and the number of vectors of rank `u`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `i(i-1)/2`.
pub fn sigma(i: u64) -> u64 {
    i * i.saturating_sub(1) / 2
}

/// The prime power `q` that every q-analog is taken with respect to.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct QContext {
    q: u64,
}

impl QContext {
    pub fn new(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::OutOfRange(format!("q must be at least 2, got {q}")));
        }
        Ok(QContext { q })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `q^e` for `e ≥ 0`.
    pub fn pow(&self, e: u64) -> BigInt {
        num_traits::pow(BigInt::from(self.q), e as usize)
    }

    /// `∏_{i<u} (q^m - q^i)`, with `α(m,0) = 1`. Negative `m` with `u ≥ 1`
    /// yields zero.
    pub fn alpha(&self, m: i64, u: u64) -> BigInt {
        if u == 0 {
            return BigInt::one();
        }
        if m < 0 || (m as u64) < u {
            return BigInt::zero();
        }
        let qm = self.pow(m as u64);
        (0..u).map(|i| &qm - self.pow(i)).product()
    }

    /// Gaussian binomial `[n u]`; zero outside `0 ≤ u ≤ n`.
    pub fn gaussian(&self, n: i64, u: i64) -> BigInt {
        if u < 0 || u > n {
            return BigInt::zero();
        }
        let num = self.alpha(n, u as u64);
        let den = self.alpha(u, u as u64);
        let (quot, rem) = num.div_rem(&den);
        debug_assert!(rem.is_zero());
        quot
    }

    /// `∏_{i<u} [m-i 1]`.
    pub fn beta(&self, m: u64, u: u64) -> Result<BigInt> {
        if u > m {
            return Err(Error::OutOfRange(format!("beta({m}, {u}) needs u <= m")));
        }
        Ok((0..u).map(|i| self.gaussian((m - i) as i64, 1)).product())
    }

    /// `N_u(q^m, n) = [n u] α(m,u)`, the number of vectors of rank `u` in GF(q^m)^n.
    pub fn num_rank_u(&self, m: u64, n: u64, u: u64) -> Result<BigInt> {
        if u > m.min(n) {
            return Err(Error::OutOfRange(format!("rank {u} exceeds min({m}, {n})")));
        }
        Ok(self.gaussian(n as i64, u as i64) * self.alpha(m as i64, u))
    }
}
