//! Exact arithmetic for the tower GF(p) ⊆ GF(q = p^s) ⊆ GF(q^m).
//!
//! Every element of GF(q^m) is packed into a `u32` index whose base-`p`
//! digits (least significant first) are its `s·m` coordinates over GF(p).
//! Grouping those digits `s` at a time gives the `m` coordinates over GF(q)
//! in the polynomial basis `{1, z, …, z^{m-1}}`, so `index = Σ c_j q^j` with
//! each `c_j` itself a GF(q) index. Elements of GF(q) embed as the indices
//! below `q`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest field order accepted by [`FieldTower::new`].
pub const MAX_FIELD_SIZE: u64 = 1 << 24;
/// Log/antilog tables are built for GF(q^m) up to this order.
pub const LOG_TABLE_LIMIT: u32 = 1 << 16;
const BASE_MUL_TABLE_LIMIT: u32 = 1 << 8;

/// An element index of GF(q) or GF(q^m), interpreted against a tower.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Gf(pub u32);

impl Gf {
    pub const ZERO: Gf = Gf(0);
    pub const ONE: Gf = Gf(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Which level of the tower a value lives in.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Layer {
    /// GF(q)
    Base,
    /// GF(q^m)
    Ext,
}

/// JSON description of a field tower. Omitted moduli are chosen
/// deterministically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    #[serde(default = "one")]
    pub s: u32,
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus_q: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus_qm: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub primitive_qm: Option<Vec<u32>>,
}

fn one() -> u32 {
    1
}

impl FieldSpec {
    pub fn new(p: u32, s: u32, m: u32) -> Self {
        FieldSpec { p, s, m, modulus_q: None, modulus_qm: None, primitive_qm: None }
    }
}

#[derive(Clone, Debug)]
struct LogTables {
    log: Vec<u32>,
    // exp[i] = g^i for 0 <= i < 2(N-1) so that log sums need no reduction
    exp: Vec<u32>,
}

/// The validated tower GF(p) ⊆ GF(q) ⊆ GF(q^m). Immutable after construction.
#[derive(Clone, Debug)]
pub struct FieldTower {
    p: u32,
    s: u32,
    m: u32,
    q: u32,
    size: u32,
    modulus_q: Vec<u32>,
    modulus_qm: Vec<u32>,
    primitive: Gf,
    base_mul: Option<Vec<u32>>,
    base_inv: Option<Vec<u32>>,
    tables: Option<LogTables>,
}

impl PartialEq for FieldTower {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.s == other.s
            && self.m == other.m
            && self.modulus_q == other.modulus_q
            && self.modulus_qm == other.modulus_qm
            && self.primitive == other.primitive
    }
}

impl Eq for FieldTower {}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Coefficient arithmetic for dense polynomials stored low-degree-first.
trait CoeffRing {
    fn radix(&self) -> u32;
    fn add(&self, a: u32, b: u32) -> u32;
    fn sub(&self, a: u32, b: u32) -> u32;
    fn mul(&self, a: u32, b: u32) -> u32;
    fn inv(&self, a: u32) -> u32;
}

struct PrimeRing(u32);

impl CoeffRing for PrimeRing {
    fn radix(&self) -> u32 {
        self.0
    }
    fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.0 as u64) as u32
    }
    fn sub(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.0 as u64 - b as u64) % self.0 as u64) as u32
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }
    fn inv(&self, a: u32) -> u32 {
        mod_pow(a as u64, self.0 as u64 - 2, self.0 as u64) as u32
    }
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// GF(q) seen as a coefficient ring, used while building the extension.
struct BaseRing<'a>(&'a FieldTower);

impl CoeffRing for BaseRing<'_> {
    fn radix(&self) -> u32 {
        self.0.q
    }
    fn add(&self, a: u32, b: u32) -> u32 {
        self.0.add(Gf(a), Gf(b)).0
    }
    fn sub(&self, a: u32, b: u32) -> u32 {
        self.0.sub(Gf(a), Gf(b)).0
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        self.0.base_mul(Gf(a), Gf(b)).0
    }
    fn inv(&self, a: u32) -> u32 {
        self.0.base_inv_raw(a)
    }
}

fn unpack(mut v: u32, radix: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = v % radix;
        v /= radix;
    }
    out
}

fn pack(digits: &[u32], radix: u32) -> u32 {
    digits.iter().rev().fold(0u32, |acc, &d| acc * radix + d)
}

/// Product of two packed residues modulo a monic modulus (low-degree-first).
fn mulmod_packed<R: CoeffRing>(ring: &R, a: u32, b: u32, modulus: &[u32]) -> u32 {
    let d = modulus.len() - 1;
    let r = ring.radix();
    let da = unpack(a, r, d);
    let db = unpack(b, r, d);
    let mut prod = vec![0u32; 2 * d];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            if y != 0 {
                prod[i + j] = ring.add(prod[i + j], ring.mul(x, y));
            }
        }
    }
    for deg in (d..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        for i in 0..d {
            if modulus[i] != 0 {
                let t = deg - d + i;
                prod[t] = ring.sub(prod[t], ring.mul(c, modulus[i]));
            }
        }
    }
    pack(&prod[..d], r)
}

fn trim(p: &mut Vec<u32>) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

/// Remainder of `f` modulo monic `g`.
fn poly_rem<R: CoeffRing>(ring: &R, f: &[u32], g: &[u32]) -> Vec<u32> {
    let mut r = f.to_vec();
    trim(&mut r);
    let dg = g.len() - 1;
    while r.len() > dg && !(r.len() == 1 && r[0] == 0) {
        let dr = r.len() - 1;
        let c = r[dr];
        if c != 0 {
            for i in 0..=dg {
                let t = dr - dg + i;
                r[t] = ring.sub(r[t], ring.mul(c, g[i]));
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible<R: CoeffRing>(ring: &R, f: &[u32]) -> bool {
    let d = f.len() - 1;
    if d == 0 {
        return false;
    }
    let r = ring.radix() as u64;
    for e in 1..=d / 2 {
        let count = r.pow(e as u32);
        for t in 0..count {
            let mut g = unpack(t as u32, ring.radix(), e);
            g.push(1);
            let rem = poly_rem(ring, f, &g);
            if rem.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree `d`, ordering
/// candidates by the packed value of their lower coefficients.
fn smallest_irreducible<R: CoeffRing>(ring: &R, d: u32) -> Vec<u32> {
    let r = ring.radix() as u64;
    let count = r.pow(d);
    for t in 0..count {
        let mut f = unpack(t as u32, ring.radix(), d as usize);
        f.push(1);
        if is_irreducible(ring, &f) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn validate_modulus(modulus: &[u32], degree: u32, radix: u32, what: &str) -> Result<()> {
    if modulus.len() != degree as usize + 1 {
        return Err(Error::InvalidModulus(format!(
            "{what} must have degree {degree}, got {} coefficients",
            modulus.len()
        )));
    }
    if *modulus.last().unwrap() != 1 {
        return Err(Error::InvalidModulus(format!("{what} must be monic")));
    }
    if let Some(&c) = modulus.iter().find(|&&c| c >= radix) {
        return Err(Error::InvalidModulus(format!("{what} coefficient {c} out of range [0, {radix})")));
    }
    Ok(())
}

impl FieldTower {
    /// Builds GF(p^s) and GF(p^{s·m}) with deterministically chosen moduli
    /// and primitive element.
    pub fn new(p: u32, s: u32, m: u32) -> Result<Self> {
        Self::from_spec(&FieldSpec::new(p, s, m))
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<Self> {
        let FieldSpec { p, s, m, .. } = *spec;
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if s == 0 || m == 0 {
            return Err(Error::OutOfRange("s and m must be positive".into()));
        }
        let exponent = s.checked_mul(m).ok_or(Error::FieldTooLarge { p, exponent: u32::MAX })?;
        let size = (p as u64).checked_pow(exponent).filter(|&n| n <= MAX_FIELD_SIZE);
        let size = size.ok_or(Error::FieldTooLarge { p, exponent })? as u32;
        let q = p.pow(s);

        let prime = PrimeRing(p);
        let modulus_q = match &spec.modulus_q {
            Some(f) => {
                validate_modulus(f, s, p, "modulus_q")?;
                if !is_irreducible(&prime, f) {
                    return Err(Error::ReducibleModulus(f.clone()));
                }
                f.clone()
            }
            None => smallest_irreducible(&prime, s),
        };

        let mut tower = FieldTower {
            p,
            s,
            m,
            q,
            size,
            modulus_q,
            modulus_qm: Vec::new(),
            primitive: Gf::ONE,
            base_mul: None,
            base_inv: None,
            tables: None,
        };
        if s > 1 && q <= BASE_MUL_TABLE_LIMIT {
            let mut table = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    table[(a * q + b) as usize] = mulmod_packed(&prime, a, b, &tower.modulus_q);
                }
            }
            let mut inv = vec![0u32; q as usize];
            for a in 1..q {
                inv[a as usize] = (1..q).find(|&b| table[(a * q + b) as usize] == 1).unwrap();
            }
            tower.base_mul = Some(table);
            tower.base_inv = Some(inv);
        }

        let modulus_qm = {
            let ring = BaseRing(&tower);
            match &spec.modulus_qm {
                Some(f) => {
                    validate_modulus(f, m, q, "modulus_qm")?;
                    if !is_irreducible(&ring, f) {
                        return Err(Error::ReducibleModulus(f.clone()));
                    }
                    f.clone()
                }
                None => smallest_irreducible(&ring, m),
            }
        };
        tower.modulus_qm = modulus_qm;

        let order = size as u64 - 1;
        let factors = prime_factors(order);
        let is_generator = |t: &FieldTower, g: Gf| {
            !g.is_zero() && factors.iter().all(|&r| t.pow_slow(g, order / r) != Gf::ONE)
        };
        let primitive = match &spec.primitive_qm {
            Some(coords) => {
                let g = tower.from_base_coords(coords)?;
                if !is_generator(&tower, g) {
                    return Err(Error::NotPrimitive(g.0));
                }
                g
            }
            None => (1..size).map(Gf).find(|&g| is_generator(&tower, g)).unwrap(),
        };
        tower.primitive = primitive;

        if size <= LOG_TABLE_LIMIT && size > 1 {
            let n = order as usize;
            let mut log = vec![u32::MAX; size as usize];
            let mut exp = vec![0u32; 2 * n];
            let mut x = Gf::ONE;
            for i in 0..n {
                if log[x.0 as usize] != u32::MAX {
                    return Err(Error::NotPrimitive(primitive.0));
                }
                log[x.0 as usize] = i as u32;
                exp[i] = x.0;
                exp[i + n] = x.0;
                x = tower.mul_slow(x, primitive);
            }
            if x != Gf::ONE {
                return Err(Error::NotPrimitive(primitive.0));
            }
            tower.tables = Some(LogTables { log, exp });
        }
        Ok(tower)
    }

    /// The resolved description, including the selected moduli and primitive.
    pub fn spec(&self) -> FieldSpec {
        FieldSpec {
            p: self.p,
            s: self.s,
            m: self.m,
            modulus_q: Some(self.modulus_q.clone()),
            modulus_qm: Some(self.modulus_qm.clone()),
            primitive_qm: Some(self.expand(self.primitive)),
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn s(&self) -> u32 {
        self.s
    }
    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    /// Order of GF(q^m).
    pub fn size(&self) -> u32 {
        self.size
    }
    pub fn modulus_q(&self) -> &[u32] {
        &self.modulus_q
    }
    pub fn modulus_qm(&self) -> &[u32] {
        &self.modulus_qm
    }
    pub fn primitive(&self) -> Gf {
        self.primitive
    }

    pub fn layer_size(&self, layer: Layer) -> u32 {
        match layer {
            Layer::Base => self.q,
            Layer::Ext => self.size,
        }
    }

    pub fn contains(&self, layer: Layer, a: Gf) -> bool {
        a.0 < self.layer_size(layer)
    }

    /// Iterates over every element of GF(q^m) in index order.
    pub fn elements(&self) -> impl Iterator<Item = Gf> {
        (0..self.size).map(Gf)
    }

    // Addition is digitwise over GF(p) in both layers.

    pub fn add(&self, a: Gf, b: Gf) -> Gf {
        if self.p == 2 {
            return Gf(a.0 ^ b.0);
        }
        let p = self.p;
        let (mut x, mut y) = (a.0, b.0);
        let (mut out, mut place) = (0u32, 1u32);
        while x > 0 || y > 0 {
            let d = (x % p + y % p) % p;
            out += d * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        Gf(out)
    }

    pub fn neg(&self, a: Gf) -> Gf {
        if self.p == 2 {
            return a;
        }
        let p = self.p;
        let mut x = a.0;
        let (mut out, mut place) = (0u32, 1u32);
        while x > 0 {
            let d = (p - x % p) % p;
            out += d * place;
            x /= p;
            place = place.wrapping_mul(p);
        }
        Gf(out)
    }

    pub fn sub(&self, a: Gf, b: Gf) -> Gf {
        self.add(a, self.neg(b))
    }

    /// Multiplication in GF(q).
    pub fn base_mul(&self, a: Gf, b: Gf) -> Gf {
        if self.s == 1 {
            return Gf(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32);
        }
        match &self.base_mul {
            Some(t) => Gf(t[(a.0 * self.q + b.0) as usize]),
            None => Gf(mulmod_packed(&PrimeRing(self.p), a.0, b.0, &self.modulus_q)),
        }
    }

    fn base_inv_raw(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        if self.s == 1 {
            return PrimeRing(self.p).inv(a);
        }
        match &self.base_inv {
            Some(t) => t[a as usize],
            None => {
                // a^(q-2) by square and multiply
                let (mut r, mut b, mut e) = (Gf::ONE, Gf(a), self.q - 2);
                while e > 0 {
                    if e & 1 == 1 {
                        r = self.base_mul(r, b);
                    }
                    b = self.base_mul(b, b);
                    e >>= 1;
                }
                r.0
            }
        }
    }

    pub fn base_inv(&self, a: Gf) -> Result<Gf> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(Gf(self.base_inv_raw(a.0)))
    }

    fn mul_slow(&self, a: Gf, b: Gf) -> Gf {
        if self.m == 1 {
            return self.base_mul(a, b);
        }
        Gf(mulmod_packed(&BaseRing(self), a.0, b.0, &self.modulus_qm))
    }

    fn pow_slow(&self, mut b: Gf, mut e: u64) -> Gf {
        let mut r = Gf::ONE;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul_slow(r, b);
            }
            b = self.mul_slow(b, b);
            e >>= 1;
        }
        r
    }

    /// Multiplication in GF(q^m).
    pub fn mul(&self, a: Gf, b: Gf) -> Gf {
        if a.is_zero() || b.is_zero() {
            return Gf::ZERO;
        }
        match &self.tables {
            Some(t) => Gf(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]),
            None => self.mul_slow(a, b),
        }
    }

    pub fn inv(&self, a: Gf) -> Result<Gf> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let n = self.size - 1;
        Ok(match &self.tables {
            Some(t) => Gf(t.exp[((n - t.log[a.0 as usize]) % n) as usize]),
            None => self.pow_slow(a, n as u64 - 1),
        })
    }

    /// `a^e`; negative exponents go through the inverse.
    pub fn pow(&self, a: Gf, e: i64) -> Result<Gf> {
        if e < 0 {
            let inv = self.inv(a)?;
            let n = (self.size - 1) as u64;
            return self.pow(inv, (e.unsigned_abs() % n) as i64);
        }
        if a.is_zero() {
            return Ok(if e == 0 { Gf::ONE } else { Gf::ZERO });
        }
        let n = (self.size - 1) as u64;
        Ok(match &self.tables {
            Some(t) => Gf(t.exp[((t.log[a.0 as usize] as u64 * (e as u64 % n)) % n) as usize]),
            None => self.pow_slow(a, e as u64),
        })
    }

    /// `primitive^k` for any integer `k`.
    pub fn primitive_pow(&self, k: i64) -> Gf {
        let n = (self.size - 1) as i64;
        self.pow(self.primitive, k.rem_euclid(n.max(1))).expect("primitive is nonzero")
    }

    /// Discrete logarithm to the primitive base, `None` for zero.
    pub fn log(&self, a: Gf) -> Option<u32> {
        if a.is_zero() {
            return None;
        }
        match &self.tables {
            Some(t) => Some(t.log[a.0 as usize]),
            None => {
                let mut x = Gf::ONE;
                for i in 0..self.size - 1 {
                    if x == a {
                        return Some(i);
                    }
                    x = self.mul_slow(x, self.primitive);
                }
                None
            }
        }
    }

    /// `a^{q^j}`.
    pub fn frobenius(&self, a: Gf, j: u32) -> Gf {
        let mut x = a;
        for _ in 0..(j % self.m) {
            x = self.pow(x, self.q as i64).expect("non-negative exponent");
        }
        x
    }

    /// Coordinates over GF(q) in the polynomial basis, length `m`.
    pub fn expand(&self, a: Gf) -> Vec<u32> {
        unpack(a.0, self.q, self.m as usize)
    }

    /// Coordinates over GF(p), length `s·m`.
    pub fn prime_coords(&self, a: Gf) -> Vec<u32> {
        unpack(a.0, self.p, (self.s * self.m) as usize)
    }

    /// Inverse of [`expand`](Self::expand).
    pub fn from_base_coords(&self, coords: &[u32]) -> Result<Gf> {
        if coords.len() != self.m as usize {
            return Err(Error::InvalidCoordinates(format!(
                "expected {} coordinates over GF({}), got {}",
                self.m,
                self.q,
                coords.len()
            )));
        }
        if let Some(&c) = coords.iter().find(|&&c| c >= self.q) {
            return Err(Error::InvalidCoordinates(format!("coordinate {c} not in GF({})", self.q)));
        }
        Ok(Gf(pack(coords, self.q)))
    }

    pub fn from_prime_coords(&self, coords: &[u32]) -> Result<Gf> {
        if coords.len() != (self.s * self.m) as usize || coords.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidCoordinates(format!(
                "expected {} digits in [0, {})",
                self.s * self.m,
                self.p
            )));
        }
        Ok(Gf(pack(coords, self.p)))
    }

    pub fn element(&self, value: Gf) -> Result<FieldElement<'_>> {
        if value.0 >= self.size {
            return Err(Error::InvalidCoordinates(format!("index {} outside GF({})", value.0, self.size)));
        }
        Ok(FieldElement { tower: self, value })
    }

    /// Multiplication dispatched on the layer; both layers share addition.
    pub fn layer_mul(&self, layer: Layer, a: Gf, b: Gf) -> Gf {
        match layer {
            Layer::Base => self.base_mul(a, b),
            Layer::Ext => self.mul(a, b),
        }
    }

    pub fn layer_inv(&self, layer: Layer, a: Gf) -> Result<Gf> {
        match layer {
            Layer::Base => self.base_inv(a),
            Layer::Ext => self.inv(a),
        }
    }
}

/// A GF(q^m) element bound to its tower, with checked arithmetic.
#[derive(Copy, Clone, Debug)]
pub struct FieldElement<'a> {
    tower: &'a FieldTower,
    value: Gf,
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.same_tower(other)
    }
}

impl<'a> FieldElement<'a> {
    pub fn value(&self) -> Gf {
        self.value
    }

    pub fn tower(&self) -> &'a FieldTower {
        self.tower
    }

    pub fn coords(&self) -> Vec<u32> {
        self.tower.prime_coords(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn same_tower(&self, other: &Self) -> bool {
        std::ptr::eq(self.tower, other.tower) || self.tower == other.tower
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.same_tower(other) { Ok(()) } else { Err(Error::TowerMismatch) }
    }

    fn wrap(&self, value: Gf) -> Self {
        FieldElement { tower: self.tower, value }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.wrap(self.tower.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.wrap(self.tower.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.wrap(self.tower.mul(self.value, other.value)))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(self.wrap(self.tower.inv(self.value)?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        Ok(self.wrap(self.tower.pow(self.value, e)?))
    }

    pub fn frobenius(&self, j: u32) -> Self {
        self.wrap(self.tower.frobenius(self.value, j))
    }

    /// Coordinates over GF(q), length `m`.
    pub fn expand(&self) -> Vec<u32> {
        self.tower.expand(self.value)
    }
}
