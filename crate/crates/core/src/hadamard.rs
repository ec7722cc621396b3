//! Brute-force Hadamard transforms of the rank and Hamming weight functions
//! over cyclotomic integers, for prime `q`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::codes::{hamming_full_space, hamming_hat, Metric};
use crate::error::{Error, Result};
use crate::gfq::{FieldTower, Gf};
use crate::linalg::{self, RankScratch};
use crate::qcombin::QContext;
use crate::qpoly::{a_poly, b_poly, HomPoly};

/// Default cap on `q^{mn}` for the brute-force sums.
pub const HADAMARD_GUARD: u128 = 1 << 20;

/// `Σ_{j < q-1} c_j ζ^j` for a primitive `q`-th root of unity `ζ`, `q` prime.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicInt {
    q: u32,
    coeffs: Vec<BigInt>,
}

impl CyclotomicInt {
    pub fn zero(q: u32) -> Self {
        CyclotomicInt { q, coeffs: vec![BigInt::zero(); q as usize - 1] }
    }

    pub fn from_integer(q: u32, c: BigInt) -> Self {
        let mut z = Self::zero(q);
        z.coeffs[0] = c;
        z
    }

    pub fn one(q: u32) -> Self {
        Self::from_integer(q, BigInt::one())
    }

    /// `ζ^e`.
    pub fn zeta_pow(q: u32, e: u64) -> Self {
        let mut counts = vec![0u64; q as usize];
        counts[(e % q as u64) as usize] = 1;
        Self::from_exponent_counts(q, &counts)
    }

    /// `Σ_j counts[j] ζ^j` for `j < q`, reduced with `ζ^{q-1} = -Σ_{j<q-1} ζ^j`.
    pub fn from_exponent_counts(q: u32, counts: &[u64]) -> Self {
        let full: Vec<BigInt> = (0..q as usize).map(|j| BigInt::from(counts.get(j).copied().unwrap_or(0))).collect();
        Self::reduce(q, full)
    }

    fn reduce(q: u32, mut full: Vec<BigInt>) -> Self {
        let top = full.pop().expect("q >= 2");
        for c in full.iter_mut() {
            *c -= &top;
        }
        CyclotomicInt { q, coeffs: full }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The rational integer this element equals, if any.
    pub fn as_integer(&self) -> Option<&BigInt> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| &self.coeffs[0])
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.q, other.q, "cyclotomic operands over different q");
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        CyclotomicInt { q: self.q, coeffs }
    }

    pub fn neg(&self) -> Self {
        CyclotomicInt { q: self.q, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.q, other.q, "cyclotomic operands over different q");
        let q = self.q as usize;
        let mut full = vec![BigInt::zero(); q];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                full[(i + j) % q] += a * b;
            }
        }
        Self::reduce(self.q, full)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        CyclotomicInt { q: self.q, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.sign() == num_bigint::Sign::Minus;
            let mag = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            match j {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if j == 1 {
                        write!(f, "ζ")?
                    } else {
                        write!(f, "ζ^{j}")?
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A homogeneous polynomial `Σ c_i y^i x^{n-i}` with cyclotomic coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycPoly {
    coeffs: Vec<CyclotomicInt>,
}

impl CycPoly {
    pub fn new(coeffs: Vec<CyclotomicInt>) -> Self {
        assert!(!coeffs.is_empty(), "a CycPoly needs at least one coefficient");
        CycPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[CyclotomicInt] {
        &self.coeffs
    }

    /// Collapses to an integer polynomial; fails if any coefficient has a
    /// nonzero `ζ^j` part for `j ≥ 1`.
    pub fn to_integer_poly(&self) -> Result<HomPoly> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.as_integer().cloned().ok_or_else(|| Error::NonIntegral(format!("coefficient {i} is {c}"))))
            .collect::<Result<Vec<_>>>()
            .map(HomPoly::new)
    }
}

fn require_prime(tower: &FieldTower) -> Result<()> {
    if tower.s() != 1 {
        return Err(Error::NonPrimeQ { p: tower.p(), s: tower.s() });
    }
    Ok(())
}

/// `χ(a) = ζ^{a_0}`, `a_0` the first coordinate of `a` over GF(q).
pub fn chi(tower: &FieldTower, a: Gf) -> Result<CyclotomicInt> {
    require_prime(tower)?;
    Ok(CyclotomicInt::zeta_pow(tower.q(), first_coord(tower, a) as u64))
}

fn first_coord(tower: &FieldTower, a: Gf) -> u32 {
    a.0 % tower.q()
}

/// Exponent counts `[weight][a_0]` of `χ(u·v)` over all `u ∈ GF(q^m)^n`,
/// plus the weight distributions of `⟨v⟩⊥ = {u : u·v = 0}`.
struct Scan {
    rank: Vec<Vec<u64>>,
    hamming: Vec<Vec<u64>>,
    perp_rank: Vec<u64>,
    perp_hamming: Vec<u64>,
}

fn scan(tower: &FieldTower, v: &[Gf], guard: u128) -> Result<Scan> {
    require_prime(tower)?;
    let n = v.len();
    for &x in v {
        if !tower.contains(crate::gfq::Layer::Ext, x) {
            return Err(Error::InvalidCoordinates(format!("{} is not in GF(q^m)", x.0)));
        }
    }
    let size = tower.size();
    let count = (size as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if count > guard {
        return Err(Error::GuardExceeded { count, guard });
    }
    let q = tower.q() as usize;
    let mut out = Scan {
        rank: vec![vec![0; q]; n + 1],
        hamming: vec![vec![0; q]; n + 1],
        perp_rank: vec![0; n + 1],
        perp_hamming: vec![0; n + 1],
    };
    let mut scratch = RankScratch::new(tower);
    let mut u = vec![Gf::ZERO; n];
    let mut dot = Gf::ZERO;
    loop {
        let wr = scratch.rank(&u);
        let wh = linalg::hamming_weight(&u);
        let a0 = first_coord(tower, dot) as usize;
        out.rank[wr][a0] += 1;
        out.hamming[wh][a0] += 1;
        if dot.is_zero() {
            out.perp_rank[wr] += 1;
            out.perp_hamming[wh] += 1;
        }
        // odometer over u, keeping u·v current
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            let old = u[pos];
            let next = if old.0 + 1 == size { Gf::ZERO } else { Gf(old.0 + 1) };
            u[pos] = next;
            dot = tower.add(dot, tower.mul(tower.sub(next, old), v[pos]));
            if !next.is_zero() {
                break;
            }
        }
    }
}

fn assemble(q: u32, counts: &[Vec<u64>]) -> CycPoly {
    CycPoly::new(counts.iter().map(|c| CyclotomicInt::from_exponent_counts(q, c)).collect())
}

/// `Σ_u χ(u·v) y^{w(u)} x^{n-w(u)}` by direct summation; every coefficient
/// is checked to be a rational integer.
pub fn hadamard_bruteforce(tower: &FieldTower, metric: Metric, v: &[Gf], guard: u128) -> Result<CycPoly> {
    let s = scan(tower, v, guard)?;
    let counts = match metric {
        Metric::Rank => &s.rank,
        Metric::Hamming => &s.hamming,
    };
    let poly = assemble(tower.q(), counts);
    poly.to_integer_poly()?;
    Ok(poly)
}

/// Closed form of the transform of the rank weight function at `v`
/// of rank `r`: `b_r * a_{n-r}` at `m`.
pub fn rank_hat_closed_form(tower: &FieldTower, v: &[Gf]) -> Result<HomPoly> {
    let ctx = QContext::new(tower.q() as u64)?;
    let r = linalg::rank_norm(tower, v);
    Ok(b_poly(ctx, r).q_product(&a_poly(ctx, v.len() - r))?.eval(tower.m() as i64))
}

/// Closed form of the transform of the Hamming weight function at `v` of
/// weight `r`: `(x - y)^r (x + (q^m - 1)y)^{n-r}`.
pub fn hamming_hat_closed_form(tower: &FieldTower, v: &[Gf]) -> HomPoly {
    let qm = BigInt::from(tower.size());
    hamming_hat(&qm, linalg::hamming_weight(v), v.len())
}

pub fn check_rank_hat(tower: &FieldTower, v: &[Gf], guard: u128) -> Result<bool> {
    let brute = hadamard_bruteforce(tower, Metric::Rank, v, guard)?.to_integer_poly()?;
    Ok(brute == rank_hat_closed_form(tower, v)?)
}

pub fn check_hamming_hat(tower: &FieldTower, v: &[Gf], guard: u128) -> Result<bool> {
    let brute = hadamard_bruteforce(tower, Metric::Hamming, v, guard)?.to_integer_poly()?;
    Ok(brute == hamming_hat_closed_form(tower, v))
}

/// `W_{⟨v⟩⊥} = q^{-m} (W_F + (q^m - 1) f̂(v))` for both metrics, with both
/// sides computed by enumeration.
pub fn check_dual_vector_hat(tower: &FieldTower, v: &[Gf], guard: u128) -> Result<bool> {
    let s = scan(tower, v, guard)?;
    let q = tower.q();
    let qm = BigInt::from(tower.size());
    let n = v.len();
    let ctx = QContext::new(q as u64)?;
    for (counts, perp, full) in [
        (&s.rank, &s.perp_rank, a_poly(ctx, n).eval(tower.m() as i64)),
        (&s.hamming, &s.perp_hamming, hamming_full_space(&qm, n)),
    ] {
        let hat = assemble(q, counts).to_integer_poly()?;
        let rhs = full.add(&hat.scale(&(&qm - 1)))?.div_exact(&qm)?;
        let brute = HomPoly::new(perp.iter().map(|&c| BigInt::from(c)).collect());
        if brute != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
