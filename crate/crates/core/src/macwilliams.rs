//! Analytic dual enumerators: the rank MacWilliams transform in q-product
//! form and in explicit kernel form, the Hamming transform, moment
//! identities, Gaussian-binomial inversion and the MRD rank distribution.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::codes::{hamming_hat, CodeParams, Metric, WeightEnumerator};
use crate::error::{Error, Result};
use crate::qcombin::{sigma, QContext};
use crate::qpoly::{a_poly, b_poly, HomPoly};

fn sign(l: u64) -> BigInt {
    if l.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Checks that `a` could be the `metric` enumerator of a code with `params`:
/// degree `n`, `A_0 = 1`, nonnegative counts summing to `q^{mk}`.
pub fn check_enumerator(a: &WeightEnumerator, metric: Metric, params: &CodeParams) -> Result<()> {
    if a.metric != metric {
        return Err(Error::InvalidEnumerator(format!("expected a {metric} enumerator, got {}", a.metric)));
    }
    if a.n() as u64 != params.n {
        return Err(Error::InvalidEnumerator(format!("degree {} does not match n = {}", a.n(), params.n)));
    }
    if !a.coeff(0).is_one() {
        return Err(Error::InvalidEnumerator(format!("A_0 = {}, expected 1", a.coeff(0))));
    }
    if a.coeffs().iter().any(|c| c.is_negative()) {
        return Err(Error::InvalidEnumerator("negative coefficient".into()));
    }
    let total = a.poly.sum();
    if total != params.code_size() {
        return Err(Error::InvalidEnumerator(format!("coefficients sum to {total}, expected {}", params.code_size())));
    }
    Ok(())
}

/// Rank enumerator of the dual: `|C|^{-1} Σ_i A_i b_i * a_{n-i}` at `m`.
pub fn rank_macwilliams(a: &WeightEnumerator, params: &CodeParams) -> Result<WeightEnumerator> {
    rank_macwilliams_with(a, params, true)
}

/// As [`rank_macwilliams`], optionally skipping input validation.
pub fn rank_macwilliams_with(a: &WeightEnumerator, params: &CodeParams, validate: bool) -> Result<WeightEnumerator> {
    if validate {
        check_enumerator(a, Metric::Rank, params)?;
    } else if a.n() as u64 != params.n {
        return Err(Error::InvalidEnumerator(format!("degree {} does not match n = {}", a.n(), params.n)));
    }
    let ctx = params.ctx();
    let n = params.n as usize;
    let m = params.m as i64;
    let mut acc = HomPoly::zero(n);
    for (i, ai) in a.coeffs().iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        let term = b_poly(ctx, i).q_product(&a_poly(ctx, n - i))?.eval(m);
        acc = acc.add(&term.scale(ai))?;
    }
    Ok(WeightEnumerator::new(Metric::Rank, acc.div_exact(&params.code_size())?))
}

/// `P_j(i; m, n) = Σ_l [i l][n-i j-l] (-1)^l q^{σ_l} q^{l(n-i)} α(m-l, j-l)`.
pub fn rank_macwilliams_kernel(ctx: QContext, j: u64, i: u64, m: u64, n: u64) -> BigInt {
    if i > n || j > n {
        return BigInt::zero();
    }
    let (ii, ni, ji) = (i as i64, n as i64, j as i64);
    (0..=j)
        .map(|l| {
            let li = l as i64;
            let g = ctx.gaussian(ii, li) * ctx.gaussian(ni - ii, ji - li);
            if g.is_zero() {
                return g;
            }
            g * sign(l) * ctx.pow(sigma(l) + l * (n - i)) * ctx.alpha(m as i64 - li, j - l)
        })
        .sum()
}

/// The dual rank enumerator via `B_j = |C|^{-1} Σ_i A_i P_j(i; m, n)`.
pub fn rank_macwilliams_by_kernel(a: &WeightEnumerator, params: &CodeParams) -> Result<WeightEnumerator> {
    check_enumerator(a, Metric::Rank, params)?;
    let ctx = params.ctx();
    let size = params.code_size();
    let coeffs = (0..=params.n)
        .map(|j| {
            let sum: BigInt = a
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, ai)| !ai.is_zero())
                .map(|(i, ai)| ai * rank_macwilliams_kernel(ctx, j, i as u64, params.m, params.n))
                .sum();
            exact_div(&sum, &size)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightEnumerator::new(Metric::Rank, HomPoly::new(coeffs)))
}

fn exact_div(a: &BigInt, d: &BigInt) -> Result<BigInt> {
    let (quot, rem) = num_integer::Integer::div_rem(a, d);
    if !rem.is_zero() {
        return Err(Error::InexactDivision(format!("{a} is not divisible by {d}")));
    }
    Ok(quot)
}

/// Hamming enumerator of the dual: `|C|^{-1} A(x + (Q-1)y, x - y)`, `Q = q^m`.
pub fn hamming_macwilliams(a: &WeightEnumerator, params: &CodeParams) -> Result<WeightEnumerator> {
    hamming_macwilliams_with(a, params, true)
}

pub fn hamming_macwilliams_with(a: &WeightEnumerator, params: &CodeParams, validate: bool) -> Result<WeightEnumerator> {
    if validate {
        check_enumerator(a, Metric::Hamming, params)?;
    } else if a.n() as u64 != params.n {
        return Err(Error::InvalidEnumerator(format!("degree {} does not match n = {}", a.n(), params.n)));
    }
    let n = params.n as usize;
    let qm = params.ctx().pow(params.m);
    let mut acc = HomPoly::zero(n);
    for (i, ai) in a.coeffs().iter().enumerate() {
        if !ai.is_zero() {
            acc = acc.add(&hamming_hat(&qm, i, n).scale(ai))?;
        }
    }
    Ok(WeightEnumerator::new(Metric::Hamming, acc.div_exact(&params.code_size())?))
}

/// Both sides of a moment identity. `rhs` is kept as a rational since its
/// prefactor `q^{m(k-ν)}` is fractional for `ν > k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentSides {
    pub nu: u64,
    pub lhs: BigInt,
    pub rhs: BigRational,
}

impl MomentSides {
    pub fn holds(&self) -> bool {
        self.rhs.is_integer() && *self.rhs.numer() == self.lhs
    }
}

fn q_pow_signed(ctx: QContext, e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(ctx.pow(e as u64))
    } else {
        BigRational::new(BigInt::one(), ctx.pow(e.unsigned_abs()))
    }
}

fn moment_lhs(ctx: QContext, a: &WeightEnumerator, n: u64, nu: u64) -> BigInt {
    (0..=n - nu).map(|i| ctx.gaussian((n - i) as i64, nu as i64) * a.coeff(i as usize)).sum()
}

/// `Σ_{i ≤ n-ν} [n-i ν] A_i` and `q^{m(k-ν)} Σ_{j ≤ ν} [n-j n-ν] B_j`.
pub fn rank_moment_sides(a: &WeightEnumerator, b: &WeightEnumerator, params: &CodeParams, nu: u64) -> Result<MomentSides> {
    let n = params.n;
    if nu > n {
        return Err(Error::OutOfRange(format!("moment order {nu} exceeds n = {n}")));
    }
    if a.n() as u64 != n || b.n() as u64 != n {
        return Err(Error::InvalidEnumerator("enumerator degrees must equal n".into()));
    }
    let ctx = params.ctx();
    let lhs = moment_lhs(ctx, a, n, nu);
    let dual_sum: BigInt =
        (0..=nu).map(|j| ctx.gaussian((n - j) as i64, (n - nu) as i64) * b.coeff(j as usize)).sum();
    let scale = q_pow_signed(ctx, params.m as i64 * (params.k as i64 - nu as i64));
    Ok(MomentSides { nu, lhs, rhs: scale * BigRational::from_integer(dual_sum) })
}

/// The moment identity for `ν` below the dual's minimum rank distance
/// `dual_distance`, where the dual side collapses to `q^{m(k-ν)} [n ν]`.
/// Pass `n + 1` when the dual is the zero code.
pub fn binomial_moment(a: &WeightEnumerator, params: &CodeParams, nu: u64, dual_distance: u64) -> Result<MomentSides> {
    let n = params.n;
    if nu >= dual_distance {
        return Err(Error::Precondition(format!("need nu < d' = {dual_distance}, got nu = {nu}")));
    }
    if nu > n {
        return Err(Error::OutOfRange(format!("moment order {nu} exceeds n = {n}")));
    }
    let ctx = params.ctx();
    let lhs = moment_lhs(ctx, a, n, nu);
    let scale = q_pow_signed(ctx, params.m as i64 * (params.k as i64 - nu as i64));
    Ok(MomentSides { nu, lhs, rhs: scale * BigRational::from_integer(ctx.gaussian(n as i64, nu as i64)) })
}

/// `a_j = Σ_{i ≤ j} [l-i l-j] b_i` with `l = b.len() - 1`.
pub fn gaussian_forward(ctx: QContext, b: &[BigInt]) -> Vec<BigInt> {
    let Some(l) = b.len().checked_sub(1) else { return Vec::new() };
    let l = l as i64;
    (0..=l)
        .map(|j| (0..=j).map(|i| ctx.gaussian(l - i, l - j) * &b[i as usize]).sum())
        .collect()
}

/// Inverse of [`gaussian_forward`]:
/// `b_i = Σ_{j ≤ i} (-1)^{i-j} q^{σ_{i-j}} [l-j l-i] a_j`.
pub fn gaussian_inverse(ctx: QContext, a: &[BigInt]) -> Vec<BigInt> {
    let Some(l) = a.len().checked_sub(1) else { return Vec::new() };
    let l = l as i64;
    (0..=l)
        .map(|i| {
            (0..=i)
                .map(|j| {
                    let d = (i - j) as u64;
                    sign(d) * ctx.pow(sigma(d)) * ctx.gaussian(l - j, l - i) * &a[j as usize]
                })
                .sum()
        })
        .collect()
}

/// Rank distribution of any linear MRD code with `params` (`n ≤ m`,
/// `d = n - k + 1`).
pub fn mrd_rank_distribution(params: &CodeParams) -> Result<WeightEnumerator> {
    let (n, m, k) = (params.n, params.m, params.k);
    if n > m {
        return Err(Error::Precondition(format!("MRD distribution needs n <= m, got n = {n} > m = {m}")));
    }
    let ctx = params.ctx();
    let d = n - k + 1;
    let mut coeffs = vec![BigInt::zero(); n as usize + 1];
    coeffs[0] = BigInt::one();
    for i in 0..(n + 1).saturating_sub(d) {
        let inner: BigInt = (0..=i)
            .map(|j| {
                sign(i - j)
                    * ctx.pow(sigma(i - j))
                    * ctx.gaussian((d + i) as i64, (d + j) as i64)
                    * (ctx.pow(m * (j + 1)) - 1)
            })
            .sum();
        coeffs[(d + i) as usize] = ctx.gaussian(n as i64, (d + i) as i64) * inner;
    }
    Ok(WeightEnumerator::new(Metric::Rank, HomPoly::new(coeffs)))
}
