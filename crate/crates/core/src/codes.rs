//! Linear codes over GF(q^m): duals, exhaustive enumeration of rank and
//! Hamming weight enumerators, elementary and coordinate extensions, and
//! Gabidulin (MRD) codes.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gfq::{FieldSpec, FieldTower, Gf, Layer};
use crate::linalg::{self, Matrix, RankScratch};
use crate::qcombin::QContext;
use crate::qpoly::{a_poly, b_poly, HomPoly};

/// Default cap on the number of codewords an enumeration may visit.
pub const DEFAULT_GUARD: u128 = 1 << 24;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Rank,
    Hamming,
}

impl std::str::FromStr for Metric {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rank" => Ok(Metric::Rank),
            "hamming" => Ok(Metric::Hamming),
            other => Err(Error::Parse(format!("unknown metric {other:?}"))),
        }
    }
}

impl std::fmt::Display for Metric {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Metric::Rank => "rank",
            Metric::Hamming => "hamming",
        })
    }
}

/// `Σ A_i y^i x^{n-i}` for one metric.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightEnumerator {
    pub metric: Metric,
    pub poly: HomPoly,
}

impl WeightEnumerator {
    pub fn new(metric: Metric, poly: HomPoly) -> Self {
        WeightEnumerator { metric, poly }
    }

    pub fn from_counts(metric: Metric, counts: &[u64]) -> Self {
        Self::new(metric, HomPoly::new(counts.iter().map(|&c| BigInt::from(c)).collect()))
    }

    pub fn n(&self) -> usize {
        self.poly.degree()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        self.poly.coeffs()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.poly.coeff(i)
    }

    /// Smallest nonzero weight, if any nonzero codeword exists.
    pub fn min_weight(&self) -> Option<usize> {
        self.coeffs().iter().enumerate().skip(1).find(|(_, c)| c.sign() == num_bigint::Sign::Plus).map(|(i, _)| i)
    }
}

/// An `(n, k)` linear code given by a full-row-rank generator over GF(q^m).
#[derive(Clone, Debug)]
pub struct LinearCode {
    tower: Arc<FieldTower>,
    generator: Matrix,
}

impl LinearCode {
    pub fn new(tower: Arc<FieldTower>, generator: Matrix) -> Result<Self> {
        if generator.layer() != Layer::Ext {
            return Err(Error::DimensionMismatch("generator must have GF(q^m) entries".into()));
        }
        generator.validate(&tower)?;
        let rank = linalg::rank(&tower, &generator);
        if rank != generator.rows() {
            return Err(Error::RankDeficient { rank, rows: generator.rows() });
        }
        Ok(LinearCode { tower, generator })
    }

    pub fn from_rows(tower: Arc<FieldTower>, n: usize, rows: Vec<Vec<Gf>>) -> Result<Self> {
        let g = Matrix::from_rows(Layer::Ext, n, rows)?;
        Self::new(tower, g)
    }

    /// The code spanned by arbitrary (possibly dependent) rows.
    pub fn spanned_by(tower: Arc<FieldTower>, n: usize, rows: Vec<Vec<Gf>>) -> Result<Self> {
        let g = Matrix::from_rows(Layer::Ext, n, rows)?;
        g.validate(&tower)?;
        let r = linalg::rref(&tower, &g);
        let basis = (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect();
        Self::from_rows(tower, n, basis)
    }

    pub fn zero(tower: Arc<FieldTower>, n: usize) -> Self {
        LinearCode { tower, generator: Matrix::zeros(Layer::Ext, 0, n) }
    }

    pub fn full_space(tower: Arc<FieldTower>, n: usize) -> Self {
        LinearCode { tower, generator: Matrix::identity(Layer::Ext, n) }
    }

    pub fn tower(&self) -> &Arc<FieldTower> {
        &self.tower
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    /// `|C| = q^{mk}`.
    pub fn size(&self) -> BigInt {
        num_traits::pow(BigInt::from(self.tower.size()), self.k())
    }

    pub fn params(&self) -> CodeParams {
        CodeParams { q: self.tower.q() as u64, m: self.tower.m() as u64, n: self.n() as u64, k: self.k() as u64 }
    }

    /// Canonical generator (reduced row echelon form).
    pub fn canonical(&self) -> Matrix {
        linalg::rref(&self.tower, &self.generator).matrix
    }

    /// Row-space equality.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.n() == other.n() && *self.tower == *other.tower && self.canonical() == other.canonical()
    }

    pub fn contains(&self, v: &[Gf]) -> bool {
        if v.len() != self.n() {
            return false;
        }
        let row = Matrix::from_rows(Layer::Ext, self.n(), vec![v.to_vec()]).expect("length checked");
        let stacked = self.generator.vstack(&row).expect("same width");
        linalg::rank(&self.tower, &stacked) == self.k()
    }

    /// The dual under `u·v = Σ u_i v_i`.
    pub fn dual(&self) -> LinearCode {
        let h = linalg::null_space(&self.tower, &self.generator);
        LinearCode { tower: self.tower.clone(), generator: h }
    }

    /// A parity-check matrix: the dual's generator.
    pub fn parity_check(&self) -> Matrix {
        self.dual().generator
    }

    fn message_count(&self, guard: u128) -> Result<u64> {
        let count = (self.tower.size() as u128).checked_pow(self.k() as u32).unwrap_or(u128::MAX);
        if count > guard {
            return Err(Error::GuardExceeded { count, guard });
        }
        Ok(count as u64)
    }

    /// Visits the codewords for message indices in `start..end`, in
    /// lexicographic message order (first message coordinate most significant).
    pub fn for_each_in_range(&self, start: u64, end: u64, mut f: impl FnMut(&[Gf])) {
        let t = &*self.tower;
        let (k, n) = (self.k(), self.n());
        let size = t.size() as u64;
        if start >= end {
            return;
        }
        let mut digits = vec![Gf::ZERO; k];
        let mut r = start;
        for d in digits.iter_mut().rev() {
            *d = Gf((r % size) as u32);
            r /= size;
        }
        let mut word = vec![Gf::ZERO; n];
        for (i, &u) in digits.iter().enumerate() {
            if !u.is_zero() {
                for (w, &g) in word.iter_mut().zip(self.generator.row(i)) {
                    *w = t.add(*w, t.mul(u, g));
                }
            }
        }
        let mut idx = start;
        loop {
            f(&word);
            idx += 1;
            if idx == end {
                break;
            }
            // odometer step on the least significant digit, with carries
            let mut pos = k;
            loop {
                pos -= 1;
                let old = digits[pos];
                let next = if old.0 as u64 + 1 == size { Gf::ZERO } else { Gf(old.0 + 1) };
                digits[pos] = next;
                let delta = t.sub(next, old);
                for (w, &g) in word.iter_mut().zip(self.generator.row(pos)) {
                    *w = t.add(*w, t.mul(delta, g));
                }
                if !next.is_zero() {
                    break;
                }
            }
        }
    }

    /// All codewords, in lexicographic message order.
    pub fn codewords(&self, guard: u128) -> Result<Vec<Vec<Gf>>> {
        let total = self.message_count(guard)?;
        let mut out = Vec::with_capacity(total as usize);
        self.for_each_in_range(0, total, |w| out.push(w.to_vec()));
        Ok(out)
    }

    fn count_range(&self, start: u64, end: u64) -> (Vec<u64>, Vec<u64>) {
        let n = self.n();
        let mut rank = vec![0u64; n + 1];
        let mut hamming = vec![0u64; n + 1];
        let mut scratch = RankScratch::new(&self.tower);
        self.for_each_in_range(start, end, |w| {
            rank[scratch.rank(w)] += 1;
            hamming[linalg::hamming_weight(w)] += 1;
        });
        (rank, hamming)
    }

    /// Rank and Hamming enumerators from one pass over the code, split over
    /// `workers` contiguous message ranges.
    pub fn enumerators(&self, guard: u128, workers: usize) -> Result<(WeightEnumerator, WeightEnumerator)> {
        let total = self.message_count(guard)?;
        let workers = workers.clamp(1, total.max(1) as usize);
        let chunk = total.div_ceil(workers as u64);
        let parts: Vec<(Vec<u64>, Vec<u64>)> = if workers == 1 {
            vec![self.count_range(0, total)]
        } else {
            std::thread::scope(|scope| {
                let handles: Vec<_> = (0..workers as u64)
                    .map(|w| {
                        let (lo, hi) = ((w * chunk).min(total), ((w + 1) * chunk).min(total));
                        scope.spawn(move || self.count_range(lo, hi))
                    })
                    .collect();
                handles.into_iter().map(|h| h.join().expect("enumeration worker panicked")).collect()
            })
        };
        let n = self.n();
        let mut rank = vec![0u64; n + 1];
        let mut hamming = vec![0u64; n + 1];
        for (r, h) in parts {
            rank.iter_mut().zip(r).for_each(|(a, b)| *a += b);
            hamming.iter_mut().zip(h).for_each(|(a, b)| *a += b);
        }
        Ok((WeightEnumerator::from_counts(Metric::Rank, &rank), WeightEnumerator::from_counts(Metric::Hamming, &hamming)))
    }

    pub fn weight_enumerator(&self, metric: Metric, guard: u128) -> Result<WeightEnumerator> {
        self.weight_enumerator_parallel(metric, guard, 1)
    }

    pub fn weight_enumerator_parallel(&self, metric: Metric, guard: u128, workers: usize) -> Result<WeightEnumerator> {
        let (rank, hamming) = self.enumerators(guard, workers)?;
        Ok(match metric {
            Metric::Rank => rank,
            Metric::Hamming => hamming,
        })
    }

    pub fn minimum_distance(&self, metric: Metric, guard: u128) -> Result<usize> {
        if self.k() == 0 {
            return Err(Error::Precondition("minimum distance of the zero code is undefined".into()));
        }
        let w = self.weight_enumerator(metric, guard)?;
        Ok(w.min_weight().expect("a nonzero code has a nonzero codeword"))
    }

    /// Singleton equality `d_R = n - k + 1`; requires `n ≤ m`.
    pub fn is_mrd(&self, guard: u128) -> Result<bool> {
        if self.n() > self.tower.m() as usize {
            return Err(Error::Precondition(format!("MRD test needs n <= m, got n = {} > m = {}", self.n(), self.tower.m())));
        }
        let d = self.minimum_distance(Metric::Rank, guard)?;
        Ok(d == self.n() - self.k() + 1)
    }

    /// Generator entries in `a^k` form, for reports.
    pub fn to_spec(&self) -> CodeSpec {
        let generator = self
            .generator
            .row_vecs()
            .into_iter()
            .map(|row| row.into_iter().map(|x| EntrySpec::format(&self.tower, x)).collect())
            .collect();
        CodeSpec { field: self.tower.spec(), n: Some(self.n()), generator }
    }
}

/// Parameters `(q, m, n, k)` of an `(n, k)` code over GF(q^m).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeParams {
    pub q: u64,
    pub m: u64,
    pub n: u64,
    pub k: u64,
}

impl CodeParams {
    pub fn new(q: u64, m: u64, n: u64, k: u64) -> Result<Self> {
        if k > n || m == 0 {
            return Err(Error::OutOfRange(format!("invalid code parameters q={q} m={m} n={n} k={k}")));
        }
        QContext::new(q)?;
        Ok(CodeParams { q, m, n, k })
    }

    pub fn ctx(&self) -> QContext {
        QContext::new(self.q).expect("q validated at construction")
    }

    /// Parameters of the dual code.
    pub fn dual(&self) -> CodeParams {
        CodeParams { k: self.n - self.k, ..*self }
    }

    /// `q^{mk}`.
    pub fn code_size(&self) -> BigInt {
        self.ctx().pow(self.m * self.k)
    }
}

/// `⟨v⟩⊥`, the dual of the one-dimensional code spanned by `v`.
pub fn vector_dual(tower: Arc<FieldTower>, v: &[Gf]) -> Result<LinearCode> {
    let n = v.len();
    let c = LinearCode::spanned_by(tower, n, vec![v.to_vec()])?;
    Ok(c.dual())
}

/// The `(n+s, k+s)` code `{c : (c_0..c_{n-1}) - (c_n..c_{n+s-1}) B ∈ C0}`
/// with generator `[[G0, 0], [B, I_s]]`; `B` is `s × n` over GF(q).
pub fn elementary_extension(c0: &LinearCode, b: &Matrix) -> Result<LinearCode> {
    if b.layer() != Layer::Base {
        return Err(Error::DimensionMismatch("extension matrix must have GF(q) entries".into()));
    }
    b.validate(c0.tower())?;
    if b.cols() != c0.n() {
        return Err(Error::DimensionMismatch(format!("B has {} columns, code length is {}", b.cols(), c0.n())));
    }
    let s = b.rows();
    if s == 0 {
        return Ok(c0.clone());
    }
    let top = c0.generator().hstack(&Matrix::zeros(Layer::Ext, c0.k(), s))?;
    let bottom = b.embed().hstack(&Matrix::identity(Layer::Ext, s))?;
    LinearCode::new(c0.tower().clone(), top.vstack(&bottom)?)
}

/// `[H0 | -H0 Bᵀ]`, a parity-check matrix of the `B`-elementary extension.
pub fn elementary_extension_parity_check(tower: &FieldTower, h0: &Matrix, b: &Matrix) -> Result<Matrix> {
    let hb = linalg::matmul(tower, h0, &b.embed().transpose())?;
    let neg = linalg::scale(tower, &hb, tower.neg(Gf::ONE));
    h0.hstack(&neg)
}

/// The `s`-th order coordinate extension: `B = 0`.
pub fn coordinate_extension(c0: &LinearCode, s: usize) -> Result<LinearCode> {
    elementary_extension(c0, &Matrix::zeros(Layer::Base, s, c0.n()))
}

/// Rank enumerator of `⟨v⟩⊥` for any `v ∈ GF(q^m)^n` of rank `r`:
/// `q^{-m} {a_n + (q^m - 1) b_r * a_{n-r}}` at `m`.
pub fn dual_of_vector_rank_enumerator(ctx: QContext, r: usize, n: usize, m: usize) -> Result<HomPoly> {
    if r > m.min(n) {
        return Err(Error::OutOfRange(format!("rank {r} exceeds min({m}, {n})")));
    }
    let mi = m as i64;
    let qm = ctx.pow(m as u64);
    let full = a_poly(ctx, n).eval(mi);
    let hat = b_poly(ctx, r).q_product(&a_poly(ctx, n - r))?.eval(mi);
    full.add(&hat.scale(&(&qm - 1)))?.div_exact(&qm)
}

/// Hamming enumerator of `⟨v⟩⊥` for `v` of Hamming weight `r`.
pub fn dual_of_vector_hamming_enumerator(ctx: QContext, r: usize, n: usize, m: usize) -> Result<HomPoly> {
    if r > n {
        return Err(Error::OutOfRange(format!("weight {r} exceeds length {n}")));
    }
    let qm = ctx.pow(m as u64);
    let full = hamming_full_space(&qm, n);
    let hat = hamming_hat(&qm, r, n);
    full.add(&hat.scale(&(&qm - 1)))?.div_exact(&qm)
}

/// `(x + (Q-1)y)^n`.
pub fn hamming_full_space(qm: &BigInt, n: usize) -> HomPoly {
    HomPoly::new(vec![BigInt::one(), qm - 1]).pow(n)
}

/// `(x - y)^r (x + (Q-1)y)^{n-r}`.
pub fn hamming_hat(qm: &BigInt, r: usize, n: usize) -> HomPoly {
    HomPoly::from_i64s(&[1, -1]).pow(r).mul(&hamming_full_space(qm, n - r))
}

/// Generator rows `(g_0^{q^i}, …, g_{n-1}^{q^i})` for `i < k`.
pub fn gabidulin_code(tower: Arc<FieldTower>, k: usize, g: &[Gf]) -> Result<LinearCode> {
    let n = g.len();
    if n > tower.m() as usize {
        return Err(Error::Precondition(format!("Gabidulin code needs n <= m, got n = {n} > m = {}", tower.m())));
    }
    if k == 0 || k > n {
        return Err(Error::OutOfRange(format!("dimension {k} not in 1..={n}")));
    }
    if linalg::rank_norm(&tower, g) != n {
        return Err(Error::Precondition("evaluation points must be linearly independent over GF(q)".into()));
    }
    let rows = (0..k).map(|i| g.iter().map(|&x| tower.frobenius(x, i as u32)).collect()).collect();
    LinearCode::from_rows(tower, n, rows)
}

/// A generator entry: `"0"`, `"1"`, `"a^k"` (power of the primitive element)
/// or a list of GF(q) coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EntrySpec {
    Symbol(String),
    Coords(Vec<u32>),
}

impl EntrySpec {
    pub fn resolve(&self, tower: &FieldTower) -> Result<Gf> {
        match self {
            EntrySpec::Coords(c) => tower.from_base_coords(c),
            EntrySpec::Symbol(s) => {
                let s = s.trim();
                match s {
                    "0" => Ok(Gf::ZERO),
                    "1" => Ok(Gf::ONE),
                    "a" => Ok(tower.primitive()),
                    _ => {
                        let exp = s
                            .strip_prefix("a^")
                            .ok_or_else(|| Error::Parse(format!("unrecognized entry {s:?}")))?;
                        let exp = exp.trim_matches(|c| c == '(' || c == ')' || c == '{' || c == '}');
                        let k: i64 = exp.parse().map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
                        Ok(tower.primitive_pow(k))
                    }
                }
            }
        }
    }

    pub fn format(tower: &FieldTower, x: Gf) -> EntrySpec {
        match tower.log(x) {
            None => EntrySpec::Symbol("0".into()),
            Some(0) => EntrySpec::Symbol("1".into()),
            Some(k) => EntrySpec::Symbol(format!("a^{k}")),
        }
    }
}

/// JSON description of a code: `{"field": {...}, "generator": [[...], ...]}`.
/// `n` is only needed when the generator has no rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSpec {
    pub field: FieldSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub generator: Vec<Vec<EntrySpec>>,
}

impl CodeSpec {
    pub fn build(&self) -> Result<LinearCode> {
        let tower = Arc::new(FieldTower::from_spec(&self.field)?);
        self.build_in(tower)
    }

    pub fn build_in(&self, tower: Arc<FieldTower>) -> Result<LinearCode> {
        let n = match (self.generator.first(), self.n) {
            (Some(row), Some(n)) if row.len() != n => {
                return Err(Error::DimensionMismatch(format!("n = {n} but rows have {} entries", row.len())))
            }
            (Some(row), _) => row.len(),
            (None, Some(n)) => n,
            (None, None) => return Err(Error::Parse("empty generator needs an explicit n".into())),
        };
        let rows = self
            .generator
            .iter()
            .map(|row| row.iter().map(|e| e.resolve(&tower)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        LinearCode::from_rows(tower, n, rows)
    }
}
