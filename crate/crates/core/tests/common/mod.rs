#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use rand::Rng;
use rankweight::codes::{CodeParams, LinearCode, Metric, DEFAULT_GUARD};
use rankweight::linalg::{self, Matrix};
use rankweight::macwilliams::{
    hamming_macwilliams, rank_macwilliams, rank_macwilliams_by_kernel, rank_moment_sides,
};
use rankweight::qpoly::{Coeff, ParamPoly};
use rankweight::{FieldTower, Gf, Layer, QContext};

/// Enumeration budget for both a random code and its dual.
pub const SIDE_LIMIT: u128 = 1 << 16;

#[derive(Default)]
pub struct Towers(HashMap<(u32, u32, u32), Arc<FieldTower>>);

impl Towers {
    pub fn get(&mut self, p: u32, s: u32, m: u32) -> Arc<FieldTower> {
        self.0.entry((p, s, m)).or_insert_with(|| Arc::new(FieldTower::new(p, s, m).unwrap())).clone()
    }
}

pub fn random_vector(rng: &mut impl Rng, tower: &FieldTower, n: usize) -> Vec<Gf> {
    (0..n).map(|_| Gf(rng.gen_range(0..tower.size()))).collect()
}

/// A uniformly random full-rank `k × n` generator over GF(q^m).
pub fn random_code(rng: &mut impl Rng, tower: &Arc<FieldTower>, n: usize, k: usize) -> LinearCode {
    loop {
        let rows = (0..k).map(|_| random_vector(rng, tower, n)).collect();
        if let Ok(c) = LinearCode::from_rows(tower.clone(), n, rows) {
            return c;
        }
    }
}

pub fn random_base_matrix(rng: &mut impl Rng, tower: &FieldTower, rows: usize, cols: usize) -> Matrix {
    let data = (0..rows).map(|_| (0..cols).map(|_| Gf(rng.gen_range(0..tower.q()))).collect()).collect();
    Matrix::from_rows(Layer::Base, cols, data).unwrap()
}

/// A vector of rank exactly `r` in GF(q^m)^n (needs `r ≤ min(m, n)`).
pub fn vector_of_rank(rng: &mut impl Rng, tower: &FieldTower, n: usize, r: usize) -> Vec<Gf> {
    loop {
        let v = random_vector(rng, tower, n);
        if linalg::rank_norm(tower, &v) == r {
            return v;
        }
    }
}

pub fn size_of(q: u32, m: u32, k: u32) -> u128 {
    (q as u128).checked_pow(m * k).unwrap_or(u128::MAX)
}

/// Random `(q, m, n, k)` with `q ∈ {2, 3}`, `m ≤ 4`, `n ≤ 5` and both the
/// code and its dual small enough to enumerate.
pub fn random_shape(rng: &mut impl Rng) -> (u32, u32, usize, usize) {
    loop {
        let q = [2u32, 3][rng.gen_range(0..2)];
        let m = rng.gen_range(1..=4u32);
        let n = rng.gen_range(1..=5usize);
        let k = rng.gen_range(0..=n);
        if size_of(q, m, k as u32) <= SIDE_LIMIT && size_of(q, m, (n - k) as u32) <= SIDE_LIMIT {
            return (q, m, n, k);
        }
    }
}

/// Every analytic identity that involves a code and its dual, checked
/// against exhaustive enumeration of both.
pub fn transform_checks(code: &LinearCode) -> Result<(), String> {
    let params = code.params();
    let dual = code.dual();
    let (ar, ah) = code.enumerators(DEFAULT_GUARD, 1).map_err(|e| e.to_string())?;
    let (br, bh) = dual.enumerators(DEFAULT_GUARD, 1).map_err(|e| e.to_string())?;
    let tag = format!("q={} m={} n={} k={}", params.q, params.m, params.n, params.k);

    let rank = rank_macwilliams(&ar, &params).map_err(|e| format!("{tag}: {e}"))?;
    if rank != br {
        return Err(format!("{tag}: rank transform {:?} != brute {:?}", rank.coeffs(), br.coeffs()));
    }
    let kernel = rank_macwilliams_by_kernel(&ar, &params).map_err(|e| format!("{tag}: {e}"))?;
    if kernel != rank {
        return Err(format!("{tag}: kernel form {:?} != closed form", kernel.coeffs()));
    }
    let back = rank_macwilliams(&rank, &params.dual()).map_err(|e| format!("{tag}: {e}"))?;
    if back != ar {
        return Err(format!("{tag}: rank round trip failed"));
    }
    let ham = hamming_macwilliams(&ah, &params).map_err(|e| format!("{tag}: {e}"))?;
    if ham != bh {
        return Err(format!("{tag}: hamming transform {:?} != brute {:?}", ham.coeffs(), bh.coeffs()));
    }
    let hback = hamming_macwilliams(&ham, &params.dual()).map_err(|e| format!("{tag}: {e}"))?;
    if hback != ah {
        return Err(format!("{tag}: hamming round trip failed"));
    }
    for nu in 0..=params.n {
        let s = rank_moment_sides(&ar, &br, &params, nu).map_err(|e| e.to_string())?;
        if !s.holds() {
            return Err(format!("{tag}: moment nu={nu}: {} vs {}", s.lhs, s.rhs));
        }
    }
    Ok(())
}

pub fn params_of(code: &LinearCode) -> CodeParams {
    code.params()
}

pub fn metric_pair() -> [Metric; 2] {
    [Metric::Rank, Metric::Hamming]
}

/// A ParamPoly of degree `deg` whose coefficients are random quadratics in `m`.
pub fn random_param_poly(rng: &mut impl Rng, ctx: QContext, deg: usize) -> ParamPoly {
    let coeffs = (0..=deg)
        .map(|_| {
            let (c0, c1, c2): (i64, i64, i64) = (rng.gen_range(-9..=9), rng.gen_range(-4..=4), rng.gen_range(-2..=2));
            Coeff::new(move |m| BigInt::from(c0 + c1 * m + c2 * m * m))
        })
        .collect();
    ParamPoly::new(ctx, coeffs)
}

/// Right side of the Leibniz rule:
/// `Σ_l [ν l] q^{(ν-l)(r-l)} f^{(l)} * g^{(ν-l)}`, `r = deg f`.
pub fn leibniz_rhs(f: &ParamPoly, g: &ParamPoly, nu: usize) -> ParamPoly {
    let ctx = f.ctx();
    let r = f.degree();
    let deg = (r + g.degree()).saturating_sub(nu);
    let mut acc = ParamPoly::new(ctx, (0..=deg).map(|_| Coeff::constant(BigInt::from(0))).collect());
    for l in 0..=nu {
        if l > r || nu - l > g.degree() {
            continue;
        }
        let term = f.q_derivative(l).unwrap().q_product(&g.q_derivative(nu - l).unwrap()).unwrap();
        let c = ctx.gaussian(nu as i64, l as i64) * ctx.pow(((nu - l) * (r - l)) as u64);
        acc = acc.add(&term.scale(&c)).unwrap();
    }
    acc
}
