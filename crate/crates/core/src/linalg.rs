//! Dense linear algebra over GF(q) and GF(q^m), and the rank norm.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::gfq::{FieldTower, Gf, Layer};

/// Row-major matrix whose entries all live in one layer of a tower.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    layer: Layer,
    rows: usize,
    cols: usize,
    data: Vec<Gf>,
}

impl Matrix {
    pub fn zeros(layer: Layer, rows: usize, cols: usize) -> Self {
        Matrix { layer, rows, cols, data: vec![Gf::ZERO; rows * cols] }
    }

    pub fn identity(layer: Layer, n: usize) -> Self {
        let mut m = Self::zeros(layer, n, n);
        for i in 0..n {
            m.set(i, i, Gf::ONE);
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed to describe a matrix
    /// with no rows.
    pub fn from_rows(layer: Layer, cols: usize, rows: Vec<Vec<Gf>>) -> Result<Self> {
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            data.extend(r);
        }
        Ok(Matrix { layer, rows: n_rows, cols, data })
    }

    pub fn layer(&self) -> Layer {
        self.layer
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Gf {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Gf) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Gf] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Gf>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Checks that every entry belongs to the declared layer of `tower`.
    pub fn validate(&self, tower: &FieldTower) -> Result<()> {
        match self.data.iter().find(|&&x| !tower.contains(self.layer, x)) {
            Some(x) => Err(Error::InvalidCoordinates(format!("entry {} outside {:?} layer", x.0, self.layer))),
            None => Ok(()),
        }
    }

    /// Reinterprets GF(q) entries as elements of GF(q^m).
    pub fn embed(&self) -> Matrix {
        Matrix { layer: Layer::Ext, ..self.clone() }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.layer, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.layer != other.layer {
            return Err(Error::DimensionMismatch(format!("hstack of {} and {} rows", self.rows, other.rows)));
        }
        let rows = (0..self.rows).map(|r| [self.row(r), other.row(r)].concat()).collect();
        Matrix::from_rows(self.layer, self.cols + other.cols, rows)
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols || self.layer != other.layer {
            return Err(Error::DimensionMismatch(format!("vstack of {} and {} columns", self.cols, other.cols)));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { layer: self.layer, rows: self.rows + other.rows, cols: self.cols, data })
    }
}

/// Matrix product in the layer of the operands.
pub fn matmul(tower: &FieldTower, a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.cols != b.rows || a.layer != b.layer {
        return Err(Error::DimensionMismatch(format!("{}x{} times {}x{}", a.rows, a.cols, b.rows, b.cols)));
    }
    let mut out = Matrix::zeros(a.layer, a.rows, b.cols);
    for i in 0..a.rows {
        for j in 0..b.cols {
            let mut acc = Gf::ZERO;
            for t in 0..a.cols {
                acc = tower.add(acc, tower.layer_mul(a.layer, a.get(i, t), b.get(t, j)));
            }
            out.set(i, j, acc);
        }
    }
    Ok(out)
}

pub fn scale(tower: &FieldTower, a: &Matrix, c: Gf) -> Matrix {
    let mut out = a.clone();
    for x in out.data.iter_mut() {
        *x = tower.layer_mul(a.layer, *x, c);
    }
    out
}

/// Reduced row echelon form with its rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Gauss-Jordan elimination, pivoting on the first nonzero entry of each column.
pub fn rref(tower: &FieldTower, m: &Matrix) -> Rref {
    let layer = m.layer;
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(pr) = (row..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        if pr != row {
            for c in 0..a.cols {
                let tmp = a.get(pr, c);
                a.set(pr, c, a.get(row, c));
                a.set(row, c, tmp);
            }
        }
        let inv = tower.layer_inv(layer, a.get(row, col)).expect("pivot is nonzero");
        for c in 0..a.cols {
            a.set(row, c, tower.layer_mul(layer, a.get(row, c), inv));
        }
        for r in 0..a.rows {
            let f = a.get(r, col);
            if r == row || f.is_zero() {
                continue;
            }
            for c in 0..a.cols {
                let v = tower.sub(a.get(r, c), tower.layer_mul(layer, f, a.get(row, c)));
                a.set(r, c, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    Rref { matrix: a, rank: pivots.len(), pivots }
}

pub fn rank(tower: &FieldTower, m: &Matrix) -> usize {
    rref(tower, m).rank
}

/// Basis (as rows) of `{v : M vᵀ = 0}`.
pub fn null_space(tower: &FieldTower, m: &Matrix) -> Matrix {
    let Rref { matrix: r, rank, pivots } = rref(tower, m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Matrix::zeros(m.layer, free.len(), m.cols);
    for (b, &f) in free.iter().enumerate() {
        basis.set(b, f, Gf::ONE);
        for (i, &pc) in pivots.iter().enumerate().take(rank) {
            basis.set(b, pc, tower.neg(r.get(i, f)));
        }
    }
    basis
}

/// `Σ u_i v_i` over GF(q^m).
pub fn dot(tower: &FieldTower, u: &[Gf], v: &[Gf]) -> Gf {
    u.iter().zip(v).fold(Gf::ZERO, |acc, (&a, &b)| tower.add(acc, tower.mul(a, b)))
}

/// The `m × n` matrix over GF(q) whose column `j` expands `v_j`.
pub fn expand_vector(tower: &FieldTower, v: &[Gf]) -> Matrix {
    let m = tower.m() as usize;
    let mut out = Matrix::zeros(Layer::Base, m, v.len());
    for (j, &x) in v.iter().enumerate() {
        for (i, c) in tower.expand(x).into_iter().enumerate() {
            out.set(i, j, Gf(c));
        }
    }
    out
}

pub fn hamming_weight(v: &[Gf]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

/// Rank of `v` over GF(q): the dimension of the GF(q)-span of its coordinates.
pub fn rank_norm(tower: &FieldTower, v: &[Gf]) -> usize {
    RankScratch::new(tower).rank(v)
}

/// Rank norm computed by closing the GF(q)-span of the coordinates as a set
/// of field elements, one coordinate at a time. Exponential in the rank;
/// an oracle for small fields.
pub fn rank_norm_by_span(tower: &FieldTower, v: &[Gf]) -> usize {
    let q = tower.q();
    let mut span: HashSet<Gf> = HashSet::from([Gf::ZERO]);
    let mut dim = 0;
    for &x in v {
        if span.contains(&x) {
            continue;
        }
        let current: Vec<Gf> = span.iter().copied().collect();
        for c in 1..q {
            let cx = tower.mul(Gf(c), x);
            for &s in &current {
                span.insert(tower.add(s, cx));
            }
        }
        dim += 1;
    }
    dim
}

/// Reusable incremental-basis kernel for computing many rank norms.
pub(crate) struct RankScratch<'a> {
    tower: &'a FieldTower,
    m: usize,
    // GF(2) path: basis[bit] holds a vector whose highest set bit is `bit`
    xor_basis: Vec<u32>,
    // general path: rows with pivot[i] normalized to one
    rows: Vec<Vec<u32>>,
    pivot: Vec<usize>,
}

impl<'a> RankScratch<'a> {
    pub(crate) fn new(tower: &'a FieldTower) -> Self {
        let m = tower.m() as usize;
        RankScratch { tower, m, xor_basis: vec![0; m], rows: Vec::with_capacity(m), pivot: Vec::with_capacity(m) }
    }

    pub(crate) fn rank(&mut self, v: &[Gf]) -> usize {
        if self.tower.q() == 2 {
            self.rank_gf2(v)
        } else {
            self.rank_general(v)
        }
    }

    fn rank_gf2(&mut self, v: &[Gf]) -> usize {
        self.xor_basis.iter_mut().for_each(|b| *b = 0);
        let mut rank = 0;
        for &x in v {
            let mut x = x.0;
            while x != 0 {
                let top = 31 - x.leading_zeros() as usize;
                if self.xor_basis[top] == 0 {
                    self.xor_basis[top] = x;
                    rank += 1;
                    break;
                }
                x ^= self.xor_basis[top];
            }
            if rank == self.m {
                break;
            }
        }
        rank
    }

    fn rank_general(&mut self, v: &[Gf]) -> usize {
        let t = self.tower;
        self.rows.clear();
        self.pivot.clear();
        for &x in v {
            if x.is_zero() {
                continue;
            }
            let mut digits = t.expand(x);
            for (row, &pc) in self.rows.iter().zip(&self.pivot) {
                let f = Gf(digits[pc]);
                if f.is_zero() {
                    continue;
                }
                for (d, &r) in digits.iter_mut().zip(row) {
                    *d = t.sub(Gf(*d), t.base_mul(f, Gf(r))).0;
                }
            }
            if let Some(pc) = digits.iter().position(|&d| d != 0) {
                let inv = t.base_inv(Gf(digits[pc])).expect("nonzero");
                for d in digits.iter_mut() {
                    *d = t.base_mul(Gf(*d), inv).0;
                }
                self.rows.push(digits);
                self.pivot.push(pc);
                if self.rows.len() == self.m {
                    break;
                }
            }
        }
        self.rows.len()
    }
}
