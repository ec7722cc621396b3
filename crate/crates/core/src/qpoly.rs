//! Homogeneous bivariate polynomials and the q-analog calculus on them:
//! q-product, q-powers, q-transform and q-derivative.
//!
//! A polynomial of degree `r` is stored as its coefficient vector
//! `[c_0, …, c_r]` where `c_i` multiplies `y^i x^{r-i}`. [`HomPoly`] has fixed
//! integer coefficients; [`ParamPoly`] has coefficients that are functions of
//! the extension degree `m`, which is what the q-product needs since it
//! evaluates its right operand at shifted arguments.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qcombin::{sigma, QContext};

/// Homogeneous polynomial `Σ c_i y^i x^{r-i}` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomPoly {
    coeffs: Vec<BigInt>,
}

impl HomPoly {
    /// `coeffs[i]` multiplies `y^i x^{r-i}`; the degree is `len - 1`.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a homogeneous polynomial needs at least one coefficient");
        HomPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(degree: usize) -> Self {
        Self::new(vec![BigInt::zero(); degree + 1])
    }

    /// `x^degree`.
    pub fn x_pow(degree: usize) -> Self {
        Self::monomial(degree, 0, BigInt::one())
    }

    /// `c · y^i x^{degree-i}`.
    pub fn monomial(degree: usize, i: usize, c: BigInt) -> Self {
        let mut p = Self::zero(degree);
        p.coeffs[i] = c;
        p
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Value at `x = y = 1`.
    pub fn sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn add(&self, other: &HomPoly) -> Result<HomPoly> {
        if self.degree() != other.degree() {
            return Err(Error::DimensionMismatch(format!(
                "adding degree {} and degree {}",
                self.degree(),
                other.degree()
            )));
        }
        Ok(HomPoly::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect()))
    }

    pub fn scale(&self, c: &BigInt) -> HomPoly {
        HomPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides every coefficient by `d`, failing if any division leaves a remainder.
    pub fn div_exact(&self, d: &BigInt) -> Result<HomPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            let (quot, rem) = c.div_rem(d);
            if !rem.is_zero() {
                return Err(Error::InexactDivision(format!("coefficient {i} = {c} is not divisible by {d}")));
            }
            out.push(quot);
        }
        Ok(HomPoly::new(out))
    }

    /// Ordinary product.
    pub fn mul(&self, other: &HomPoly) -> HomPoly {
        let mut out = vec![BigInt::zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        HomPoly::new(out)
    }

    /// Ordinary `l`-th power.
    pub fn pow(&self, l: usize) -> HomPoly {
        (0..l).fold(HomPoly::x_pow(0), |acc, _| acc.mul(self))
    }

    /// Coefficientwise `ν`-th q-derivative with respect to `x`:
    /// `y^i x^{r-i} ↦ β(r-i, ν) y^i x^{r-i-ν}`.
    pub fn q_derivative(&self, ctx: &QContext, nu: usize) -> Result<HomPoly> {
        let r = self.degree();
        if nu > r {
            return Err(Error::OutOfRange(format!("derivative order {nu} exceeds degree {r}")));
        }
        let coeffs = (0..=r - nu)
            .map(|i| &self.coeffs[i] * ctx.beta((r - i) as u64, nu as u64).expect("r - i >= nu"))
            .collect();
        Ok(HomPoly::new(coeffs))
    }

    /// Diagonal form of the q-transform: `c_i ↦ q^{σ_i + i(r-i)} c_i`.
    pub fn q_transform(&self, ctx: &QContext) -> HomPoly {
        let r = self.degree() as u64;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let i = i as u64;
                c * ctx.pow(sigma(i) + i * (r - i))
            })
            .collect();
        HomPoly::new(coeffs)
    }
}

impl fmt::Display for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.degree();
        let mono = |base: &str, e: usize| match e {
            0 => String::new(),
            1 => base.to_string(),
            _ => format!("{base}^{e}"),
        };
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let vars = format!("{}{}", mono("y", i), mono("x", r - i));
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{vars}")?;
            } else {
                write!(f, "{mag}{vars}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct HomPolyJson {
    degree: usize,
    coeffs: Vec<String>,
}

impl Serialize for HomPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        HomPolyJson { degree: self.degree(), coeffs: self.coeffs.iter().map(|c| c.to_string()).collect() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HomPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = HomPolyJson::deserialize(deserializer)?;
        if raw.coeffs.len() != raw.degree + 1 {
            return Err(D::Error::custom(format!(
                "degree {} needs {} coefficients, got {}",
                raw.degree,
                raw.degree + 1,
                raw.coeffs.len()
            )));
        }
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(|e| D::Error::custom(format!("coefficient {s:?}: {e}"))))
            .collect::<std::result::Result<_, _>>()?;
        Ok(HomPoly { coeffs })
    }
}

static NEGATIVE_SHIFTS: AtomicU64 = AtomicU64::new(0);

/// Number of times a q-product has evaluated its right operand at a negative
/// shifted argument `m - i` since the process started.
pub fn negative_shift_evaluations() -> u64 {
    NEGATIVE_SHIFTS.load(Ordering::Relaxed)
}

type CoeffFnBox = Box<dyn Fn(i64) -> BigInt + Send + Sync>;

struct CoeffFn {
    f: CoeffFnBox,
    memo: Mutex<HashMap<i64, BigInt>>,
}

/// A memoized coefficient function `m ↦ c(m)`.
#[derive(Clone)]
pub struct Coeff(Arc<CoeffFn>);

impl Coeff {
    pub fn new(f: impl Fn(i64) -> BigInt + Send + Sync + 'static) -> Self {
        Coeff(Arc::new(CoeffFn { f: Box::new(f), memo: Mutex::new(HashMap::new()) }))
    }

    pub fn constant(c: BigInt) -> Self {
        Coeff::new(move |_| c.clone())
    }

    pub fn eval(&self, m: i64) -> BigInt {
        if let Some(v) = self.0.memo.lock().unwrap().get(&m) {
            return v.clone();
        }
        let v = (self.0.f)(m);
        self.0.memo.lock().unwrap().insert(m, v.clone());
        v
    }
}

/// Homogeneous polynomial whose coefficients are functions of `m`.
#[derive(Clone)]
pub struct ParamPoly {
    ctx: QContext,
    coeffs: Vec<Coeff>,
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ParamPoly").field("q", &self.ctx.q()).field("degree", &self.degree()).finish()
    }
}

impl ParamPoly {
    pub fn new(ctx: QContext, coeffs: Vec<Coeff>) -> Self {
        assert!(!coeffs.is_empty(), "a homogeneous polynomial needs at least one coefficient");
        ParamPoly { ctx, coeffs }
    }

    /// Lift of a fixed polynomial: every coefficient is constant in `m`.
    pub fn from_hom(ctx: QContext, p: &HomPoly) -> Self {
        Self::new(ctx, p.coeffs().iter().cloned().map(Coeff::constant).collect())
    }

    pub fn constant(ctx: QContext, c: BigInt) -> Self {
        Self::new(ctx, vec![Coeff::constant(c)])
    }

    pub fn one(ctx: QContext) -> Self {
        Self::constant(ctx, BigInt::one())
    }

    /// The degree-one monomial `x`.
    pub fn x(ctx: QContext) -> Self {
        Self::from_hom(ctx, &HomPoly::from_i64s(&[1, 0]))
    }

    /// The degree-one monomial `y`.
    pub fn y(ctx: QContext) -> Self {
        Self::from_hom(ctx, &HomPoly::from_i64s(&[0, 1]))
    }

    pub fn ctx(&self) -> QContext {
        self.ctx
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &Coeff {
        &self.coeffs[i]
    }

    /// Fixes `m`, producing an integer polynomial.
    pub fn eval(&self, m: i64) -> HomPoly {
        HomPoly::new(self.coeffs.iter().map(|c| c.eval(m)).collect())
    }

    fn same_ctx(&self, other: &ParamPoly) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch(self.ctx.q(), other.ctx.q()))
        }
    }

    pub fn add(&self, other: &ParamPoly) -> Result<ParamPoly> {
        self.same_ctx(other)?;
        if self.degree() != other.degree() {
            return Err(Error::DimensionMismatch(format!(
                "adding degree {} and degree {}",
                self.degree(),
                other.degree()
            )));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| {
                let (a, b) = (a.clone(), b.clone());
                Coeff::new(move |m| a.eval(m) + b.eval(m))
            })
            .collect();
        Ok(ParamPoly::new(self.ctx, coeffs))
    }

    pub fn scale(&self, c: &BigInt) -> ParamPoly {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let (a, c) = (a.clone(), c.clone());
                Coeff::new(move |m| a.eval(m) * &c)
            })
            .collect();
        ParamPoly::new(self.ctx, coeffs)
    }

    /// `c_u(m) = Σ_i q^{i·s} a_i(m) b_{u-i}(m-i)` with `s = deg(other)`.
    pub fn q_product(&self, other: &ParamPoly) -> Result<ParamPoly> {
        self.same_ctx(other)?;
        let (r, s) = (self.degree(), other.degree());
        let ctx = self.ctx;
        let coeffs = (0..=r + s)
            .map(|u| {
                let left: Vec<Coeff> = self.coeffs.clone();
                let right: Vec<Coeff> = other.coeffs.clone();
                Coeff::new(move |m| {
                    let lo = u.saturating_sub(s);
                    let hi = u.min(r);
                    let mut acc = BigInt::zero();
                    for i in lo..=hi {
                        let a = left[i].eval(m);
                        if a.is_zero() {
                            continue;
                        }
                        let shifted = m - i as i64;
                        if shifted < 0 {
                            NEGATIVE_SHIFTS.fetch_add(1, Ordering::Relaxed);
                        }
                        let b = right[u - i].eval(shifted);
                        acc += ctx.pow((i * s) as u64) * a * b;
                    }
                    acc
                })
            })
            .collect();
        Ok(ParamPoly::new(ctx, coeffs))
    }

    /// `a^{[0]} = 1`, `a^{[l]} = a^{[l-1]} * a`.
    pub fn q_power(&self, l: usize) -> ParamPoly {
        (0..l).fold(ParamPoly::one(self.ctx), |acc, _| acc.q_product(self).expect("same context"))
    }

    /// Coefficientwise `ν`-th q-derivative with respect to `x`.
    pub fn q_derivative(&self, nu: usize) -> Result<ParamPoly> {
        let r = self.degree();
        if nu > r {
            return Err(Error::OutOfRange(format!("derivative order {nu} exceeds degree {r}")));
        }
        let coeffs = (0..=r - nu)
            .map(|i| {
                let factor = self.ctx.beta((r - i) as u64, nu as u64).expect("r - i >= nu");
                let a = self.coeffs[i].clone();
                Coeff::new(move |m| a.eval(m) * &factor)
            })
            .collect();
        Ok(ParamPoly::new(self.ctx, coeffs))
    }

    /// q-transform in its diagonal form `a_i ↦ q^{σ_i + i(r-i)} a_i`.
    pub fn q_transform(&self) -> ParamPoly {
        let r = self.degree() as u64;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let i = i as u64;
                let factor = self.ctx.pow(sigma(i) + i * (r - i));
                let a = a.clone();
                Coeff::new(move |m| a.eval(m) * &factor)
            })
            .collect();
        ParamPoly::new(self.ctx, coeffs)
    }

    /// q-transform computed from its definition `Σ_i a_i(m) · y^{[i]} * x^{[r-i]}`.
    pub fn q_transform_by_products(&self) -> ParamPoly {
        let r = self.degree();
        let (x, y) = (ParamPoly::x(self.ctx), ParamPoly::y(self.ctx));
        let mut terms = Vec::with_capacity(r + 1);
        for i in 0..=r {
            let basis = y.q_power(i).q_product(&x.q_power(r - i)).expect("same context");
            // a_i(m) multiplies the basis polynomial at the same m
            let a = self.coeffs[i].clone();
            let coeffs = (0..=r)
                .map(|j| {
                    let (a, b) = (a.clone(), basis.coeffs[j].clone());
                    Coeff::new(move |m| a.eval(m) * b.eval(m))
                })
                .collect();
            terms.push(ParamPoly::new(self.ctx, coeffs));
        }
        terms.into_iter().reduce(|acc, t| acc.add(&t).expect("equal degrees")).expect("at least one term")
    }

    /// Coefficient functions agree at every `m` in `window`.
    pub fn agrees_on(&self, other: &ParamPoly, window: impl IntoIterator<Item = i64>) -> bool {
        self.degree() == other.degree() && window.into_iter().all(|m| self.eval(m) == other.eval(m))
    }

    /// Agreement on `m ∈ {0, …, deg + 4}`.
    pub fn agrees_on_window(&self, other: &ParamPoly) -> bool {
        let top = self.degree().max(other.degree()) as i64 + 4;
        self.agrees_on(other, 0..=top)
    }
}

/// `a_l = [x + (q^m - 1)y]^{[l]}` in closed form: `u ↦ [l u] α(m,u)`.
pub fn a_poly(ctx: QContext, l: usize) -> ParamPoly {
    let coeffs = (0..=l)
        .map(|u| {
            let g = ctx.gaussian(l as i64, u as i64);
            Coeff::new(move |m| &g * ctx.alpha(m, u as u64))
        })
        .collect();
    ParamPoly::new(ctx, coeffs)
}

/// `b_l = (x - y)^{[l]}` in closed form: `u ↦ [l u] (-1)^u q^{σ_u}`.
pub fn b_poly(ctx: QContext, l: usize) -> ParamPoly {
    let coeffs = (0..=l)
        .map(|u| {
            let mut c = ctx.gaussian(l as i64, u as i64) * ctx.pow(sigma(u as u64));
            if u % 2 == 1 {
                c = -c;
            }
            Coeff::constant(c)
        })
        .collect();
    ParamPoly::new(ctx, coeffs)
}
