//! Arithmetic in finite fields `GF(p^t)` and in extensions `GF(q^m)` built
//! on top of them.
//!
//! An element is identified by its canonical index: the coefficient vector
//! over the immediate base field, read as a little-endian base-`b` integer.
//! For `GF(p^t)` built from the prime field that is the base-`p` reading of
//! the polynomial coefficients, so in `GF(4)` with modulus `x^2 + x + 1` the
//! element `1 + x` has index `3`. The same convention makes addition digitwise
//! modulo `p` at every level of a tower, which is what lets one [`FiniteField`]
//! type carry both `GF(p^t)` and `GF(q^m)` over `GF(q)`.
//!
//! Multiplication goes through log/antilog tables built once at construction.
//! The tables never leak through the API.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A field element, stored as its canonical index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// No range check; callers guarantee `i < q`.
    #[inline]
    pub(crate) const fn from_index(i: u32) -> Elem {
        Elem(i)
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub const fn raw(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Irreducible moduli shipped with the library, coefficients little-endian
/// over `GF(p)`. Pairs `(p, t)` not listed fall back to the first monic
/// irreducible polynomial in canonical enumeration order.
const DEFAULT_MODULI: &[(u32, &[u32])] = &[
    (2, &[1, 1]),
    (2, &[1, 1, 1]),
    (2, &[1, 1, 0, 1]),
    (2, &[1, 1, 0, 0, 1]),
    (2, &[1, 0, 1, 0, 0, 1]),
    (2, &[1, 1, 0, 1, 1, 0, 1]),
    (2, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (2, &[1, 0, 0, 0, 1, 0, 0, 0, 0, 1]),
    (2, &[1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1]),
    (2, &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, &[1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1]),
    (3, &[1, 1]),
    (3, &[2, 2, 1]),
    (3, &[1, 2, 0, 1]),
    (3, &[2, 0, 0, 2, 1]),
    (3, &[1, 2, 0, 0, 0, 1]),
    (3, &[2, 2, 1, 0, 2, 0, 1]),
    (5, &[3, 1]),
    (5, &[2, 4, 1]),
    (5, &[3, 3, 0, 1]),
    (5, &[2, 4, 4, 0, 1]),
    (7, &[4, 1]),
    (7, &[3, 6, 1]),
    (7, &[4, 0, 6, 1]),
    (11, &[9, 1]),
    (11, &[2, 7, 1]),
    (13, &[11, 1]),
    (13, &[2, 12, 1]),
];

/// The default modulus table entry for `(p, t)`, if one is shipped.
pub fn default_modulus(p: u32, t: u32) -> Option<&'static [u32]> {
    DEFAULT_MODULI
        .iter()
        .find(|(pp, m)| *pp == p && m.len() == t as usize + 1)
        .map(|(_, m)| *m)
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q = p^t`, or `None` when `q` is not a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u32;
    while q % p != 0 {
        p += 1;
    }
    let (mut rest, mut t) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        t += 1;
    }
    (rest == 1).then_some((p, t))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
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

/// `GF(p^t)` or an extension `GF(q^m)` of another `FiniteField`.
#[derive(Clone)]
pub struct FiniteField {
    p: u32,
    order: u32,
    base_order: u32,
    /// Moduli from the prime field upward; empty for a prime field.
    tower: Vec<Vec<u32>>,
    primitive: Elem,
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u32>>,
    mul: Option<Vec<u32>>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.order == other.order && self.tower == other.tower
    }
}

impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.p)
            .field("order", &self.order)
            .field("tower", &self.tower)
            .field("primitive", &self.primitive)
            .finish()
    }
}

impl FiniteField {
    /// `GF(p^t)` over the prime field. Without an explicit modulus the shipped
    /// table is used, then a deterministic search.
    pub fn new(p: u32, t: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if t == 0 {
            return Err(Error::out_of_range("t", 0, 1, i64::MAX));
        }
        let prime = Self::prime(p)?;
        let owned;
        let modulus = match modulus {
            Some(m) => m,
            None => match default_modulus(p, t) {
                Some(m) => m,
                None => {
                    owned = first_irreducible(&prime, t as usize);
                    &owned
                }
            },
        };
        if modulus.len() != t as usize + 1 {
            return Err(Error::MalformedModulus {
                degree: t as usize,
                base: p,
            });
        }
        if t == 1 && modulus.len() == 2 && modulus[1] == 1 && modulus[0] < p {
            return Ok(prime);
        }
        prime.extend(modulus)
    }

    /// The field with `q` elements under the default modulus.
    pub fn with_order(q: u32) -> Result<Self> {
        let (p, t) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, t, None)
    }

    fn prime(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > 1 << 20 {
            return Err(Error::Unsupported(alloc::format!(
                "prime {p} exceeds the desk-scale limit"
            )));
        }
        let mulp = |a: u32, b: u32| ((a as u64 * b as u64) % p as u64) as u32;
        let primitive = find_primitive(p, mulp);
        let mut field = FiniteField {
            p,
            order: p,
            base_order: p,
            tower: Vec::new(),
            primitive,
            exp: Vec::new(),
            log: Vec::new(),
            neg: Vec::new(),
            add: None,
            mul: None,
        };
        field.build_tables(|a, b| mulp(a, b));
        Ok(field)
    }

    /// Extension of `self` by a monic irreducible polynomial, coefficients
    /// given as canonical indices of `self`, little-endian.
    pub fn extend(&self, modulus: &[u32]) -> Result<Self> {
        let degree = modulus.len().saturating_sub(1);
        if degree == 0 || modulus[degree] != 1 || modulus.iter().any(|&c| c >= self.order) {
            return Err(Error::MalformedModulus {
                degree,
                base: self.order,
            });
        }
        let g: Vec<Elem> = modulus.iter().map(|&c| Elem(c)).collect();
        if !is_irreducible(self, &g) {
            return Err(Error::ReducibleModulus);
        }
        let order = (self.order as u64).pow(degree as u32);
        if order > 1 << 22 {
            return Err(Error::Unsupported(alloc::format!(
                "field of order {order} exceeds the desk-scale limit"
            )));
        }
        let order = order as u32;
        let poly = PolyRing {
            base: self,
            modulus: &g,
        };
        let mul = |a: u32, b: u32| poly.mul_index(a, b);
        let primitive = find_primitive(order, mul);
        let mut tower = self.tower.clone();
        tower.push(modulus.to_vec());
        let mut field = FiniteField {
            p: self.p,
            order,
            base_order: self.order,
            tower,
            primitive,
            exp: Vec::new(),
            log: Vec::new(),
            neg: Vec::new(),
            add: None,
            mul: None,
        };
        field.build_tables(mul);
        Ok(field)
    }

    fn build_tables(&mut self, mul: impl Fn(u32, u32) -> u32) {
        let q = self.order as usize;
        let mut exp = vec![0u32; 2 * (q - 1)];
        let mut log = vec![0u32; q];
        let mut cur = 1u32;
        for (i, slot) in exp.iter_mut().take(q - 1).enumerate() {
            *slot = cur;
            log[cur as usize] = i as u32;
            cur = mul(cur, self.primitive.0);
        }
        for i in 0..q - 1 {
            exp[q - 1 + i] = exp[i];
        }
        self.exp = exp;
        self.log = log;
        let p = self.p;
        self.neg = (0..self.order)
            .map(|a| digitwise(a, 0, p, |x, _| (p - x) % p))
            .collect();
        if p != 2 && q <= 256 {
            let mut table = vec![0u32; q * q];
            for a in 0..q {
                for b in 0..q {
                    table[a * q + b] = digitwise(a as u32, b as u32, p, |x, y| (x + y) % p);
                }
            }
            self.add = Some(table);
        }
        if q <= 256 {
            let mut table = vec![0u32; q * q];
            for a in 1..q {
                for b in 1..q {
                    table[a * q + b] = self.exp[(self.log[a] + self.log[b]) as usize];
                }
            }
            self.mul = Some(table);
        }
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> u32 {
        let mut q = self.order;
        let mut t = 0;
        while q > 1 {
            q /= self.p;
            t += 1;
        }
        t
    }

    /// Order of the field this one was built over (`p` for `GF(p^t)`).
    pub fn base_order(&self) -> u32 {
        self.base_order
    }

    /// Degree over the immediate base field.
    pub fn base_degree(&self) -> usize {
        self.tower.last().map_or(1, |m| m.len() - 1)
    }

    /// Modulus over the immediate base field (`[0, 1]`, i.e. `x`, for a
    /// prime field).
    pub fn modulus(&self) -> Vec<u32> {
        self.tower.last().cloned().unwrap_or_else(|| vec![0, 1])
    }

    /// The distinguished primitive element: the first element, in canonical
    /// order, of multiplicative order `q - 1`.
    #[inline]
    pub fn primitive(&self) -> Elem {
        self.primitive
    }

    pub fn elem(&self, index: u32) -> Result<Elem> {
        if index < self.order {
            Ok(Elem(index))
        } else {
            Err(Error::ElementOutOfRange {
                index,
                order: self.order,
            })
        }
    }

    /// Element from its coefficient vector over the immediate base field.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        let b = self.base_order as u64;
        if coeffs.len() > self.base_degree() || coeffs.iter().any(|&c| c as u64 >= b) {
            return Err(Error::LengthMismatch {
                expected: self.base_degree(),
                got: coeffs.len(),
            });
        }
        let idx = coeffs.iter().rev().fold(0u64, |acc, &c| acc * b + c as u64);
        Ok(Elem(idx as u32))
    }

    /// Coefficient vector over the immediate base field, little-endian.
    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        let b = self.base_order;
        let mut x = a.0;
        (0..self.base_degree())
            .map(|_| {
                let c = x % b;
                x /= b;
                c
            })
            .collect()
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.order).map(Elem)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = Elem> + Clone {
        (1..self.order).map(Elem)
    }

    pub fn random_element<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        Elem(rng.gen_range(0..self.order))
    }

    pub fn random_nonzero<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        Elem(rng.gen_range(1..self.order))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        match &self.add {
            Some(t) => Elem(t[a.index() * self.order as usize + b.index()]),
            None => Elem(digitwise(a.0, b.0, self.p, |x, y| (x + y) % self.p)),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg[a.index()])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        Elem(self.exp[(self.log[a.index()] + self.log[b.index()]) as usize])
    }

    /// `y += c * x` elementwise; the inner loop of every elimination.
    pub fn axpy(&self, c: Elem, x: &[Elem], y: &mut [Elem]) {
        if c.is_zero() {
            return;
        }
        match (&self.mul, self.p) {
            (Some(t), 2) => {
                let row = &t[c.index() * self.order as usize..][..self.order as usize];
                for (yi, xi) in y.iter_mut().zip(x) {
                    yi.0 ^= row[xi.index()];
                }
            }
            (Some(t), _) => {
                let row = &t[c.index() * self.order as usize..][..self.order as usize];
                for (yi, xi) in y.iter_mut().zip(x) {
                    *yi = self.add(*yi, Elem(row[xi.index()]));
                }
            }
            (None, _) => {
                for (yi, xi) in y.iter_mut().zip(x) {
                    *yi = self.add(*yi, self.mul(c, *xi));
                }
            }
        }
    }

    /// `x *= c` elementwise.
    pub fn scale_in_place(&self, c: Elem, x: &mut [Elem]) {
        for xi in x.iter_mut() {
            *xi = self.mul(c, *xi);
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let l = self.log[a.index()];
        Ok(Elem(self.exp[((self.order - 1 - l) % (self.order - 1)) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^n` with `0^0 = 1`; for nonzero `a` the exponent is reduced modulo
    /// `q - 1`.
    #[inline]
    pub fn pow(&self, a: Elem, n: u64) -> Elem {
        if a.is_zero() {
            return if n == 0 { Elem::ONE } else { Elem::ZERO };
        }
        let e = (self.log[a.index()] as u64 * (n % (self.order as u64 - 1))) % (self.order as u64 - 1);
        Elem(self.exp[e as usize])
    }

    /// `omega^e` for the distinguished primitive element.
    #[inline]
    pub fn exp(&self, e: u64) -> Elem {
        Elem(self.exp[(e % (self.order as u64 - 1)) as usize])
    }

    /// Discrete log to base [`primitive`](Self::primitive), `None` for zero.
    #[inline]
    pub fn log(&self, a: Elem) -> Option<u32> {
        (!a.is_zero()).then(|| self.log[a.index()])
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: Elem) -> Option<u64> {
        let l = self.log(a)? as u64;
        let n = self.order as u64 - 1;
        Some(n / gcd(l, n))
    }

    /// Lifts an element of the immediate base field into `self`.
    #[inline]
    pub fn embed_base(&self, c: Elem) -> Elem {
        c
    }

    pub fn handle(&self, a: Elem) -> FieldElement<'_> {
        FieldElement { field: self, elem: a }
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

fn digitwise(mut a: u32, mut b: u32, p: u32, op: impl Fn(u32, u32) -> u32) -> u32 {
    let (mut out, mut scale) = (0u32, 1u32);
    while a > 0 || b > 0 {
        out += op(a % p, b % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    out
}

fn pow_with(mut base: u32, mut e: u64, mul: &impl Fn(u32, u32) -> u32) -> u32 {
    let mut acc = 1u32;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        e >>= 1;
    }
    acc
}

fn find_primitive(order: u32, mul: impl Fn(u32, u32) -> u32) -> Elem {
    let n = order as u64 - 1;
    let factors = prime_factors(n);
    (1..order)
        .find(|&c| {
            pow_with(c, n, &mul) == 1 && factors.iter().all(|&r| pow_with(c, n / r, &mul) != 1)
        })
        .map(Elem)
        .expect("a finite field always has a primitive element")
}

/// Polynomials over a base field reduced modulo a monic polynomial; only used
/// while building extension tables.
struct PolyRing<'a> {
    base: &'a FiniteField,
    modulus: &'a [Elem],
}

impl PolyRing<'_> {
    fn to_vec(&self, mut idx: u32) -> Vec<Elem> {
        let b = self.base.order;
        (0..self.modulus.len() - 1)
            .map(|_| {
                let c = idx % b;
                idx /= b;
                Elem(c)
            })
            .collect()
    }

    fn to_index(&self, v: &[Elem]) -> u32 {
        let b = self.base.order;
        v.iter().rev().fold(0, |acc, c| acc * b + c.0)
    }

    fn mul_index(&self, a: u32, b: u32) -> u32 {
        let (a, b) = (self.to_vec(a), self.to_vec(b));
        let f = self.base;
        let deg = self.modulus.len() - 1;
        let mut prod = vec![Elem::ZERO; 2 * deg - 1];
        for (i, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = f.add(prod[i + j], f.mul(x, y));
            }
        }
        poly_rem_in_place(f, &mut prod, self.modulus);
        prod.truncate(deg);
        self.to_index(&prod)
    }
}

/// Reduces `r` modulo the monic `g` in place; the remainder occupies the low
/// `deg g` coefficients.
fn poly_rem_in_place(f: &FiniteField, r: &mut [Elem], g: &[Elem]) {
    let deg = g.len() - 1;
    let lead_inv = f.inv(g[deg]).expect("nonzero leading coefficient");
    for i in (deg..r.len()).rev() {
        let c = f.mul(r[i], lead_inv);
        if c.is_zero() {
            continue;
        }
        for j in 0..=deg {
            r[i - deg + j] = f.sub(r[i - deg + j], f.mul(c, g[j]));
        }
    }
}

/// Trial division by every monic polynomial of degree at most `deg g / 2`.
pub(crate) fn is_irreducible(f: &FiniteField, g: &[Elem]) -> bool {
    let deg = g.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        let count = (f.order as u64).pow(d as u32);
        for lower in 0..count {
            let mut h = Vec::with_capacity(d + 1);
            let mut x = lower;
            for _ in 0..d {
                h.push(Elem((x % f.order as u64) as u32));
                x /= f.order as u64;
            }
            h.push(Elem::ONE);
            let mut r = g.to_vec();
            poly_rem_in_place(f, &mut r, &h);
            if r[..d].iter().all(|c| c.is_zero()) {
                return false;
            }
        }
    }
    true
}

/// First monic irreducible polynomial of degree `t` over `f`, with lower
/// coefficients enumerated as a little-endian base-`q` counter.
pub(crate) fn first_irreducible(f: &FiniteField, t: usize) -> Vec<u32> {
    let q = f.order as u64;
    let count = q.pow(t as u32);
    for lower in 0..count {
        let mut g = Vec::with_capacity(t + 1);
        let mut x = lower;
        for _ in 0..t {
            g.push(Elem((x % q) as u32));
            x /= q;
        }
        g.push(Elem::ONE);
        if is_irreducible(f, &g) {
            return g.iter().map(|e| e.0).collect();
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// `GF(q^m)` as an `m`-dimensional `GF(q)`-space through the polynomial basis
/// `1, X, ..., X^(m-1)`.
#[derive(Clone, Debug)]
pub struct ExtensionIso {
    base: FiniteField,
    ext: FiniteField,
    m: usize,
}

impl ExtensionIso {
    /// Builds `GF(q^m)` over `base` with the first monic irreducible modulus
    /// of degree `m`. For `m = 1` the map is the identity.
    pub fn new(base: &FiniteField, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::out_of_range("m", 0, 1, i64::MAX));
        }
        let modulus = first_irreducible(base, m);
        let ext = base.extend(&modulus)?;
        Ok(ExtensionIso {
            base: base.clone(),
            ext,
            m,
        })
    }

    pub fn base(&self) -> &FiniteField {
        &self.base
    }

    pub fn ext(&self) -> &FiniteField {
        &self.ext
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    /// Coordinates of `a` over the polynomial basis.
    pub fn to_coords(&self, a: Elem) -> Vec<Elem> {
        self.ext.coeffs(a).into_iter().map(Elem).collect()
    }

    pub fn from_coords(&self, v: &[Elem]) -> Result<Elem> {
        if v.len() != self.m {
            return Err(Error::LengthMismatch {
                expected: self.m,
                got: v.len(),
            });
        }
        let raw: Vec<u32> = v.iter().map(|e| e.0).collect();
        self.ext.from_coeffs(&raw)
    }

    /// `lambda * a` for `lambda` in the base field.
    pub fn scale(&self, lambda: Elem, a: Elem) -> Elem {
        self.ext.mul(self.ext.embed_base(lambda), a)
    }
}

/// An element bundled with its field, for ergonomic and cross-field-checked
/// arithmetic. Operators panic on mismatched fields or division by zero; the
/// `checked_*` methods report those as errors instead.
#[derive(Clone, Copy)]
pub struct FieldElement<'f> {
    field: &'f FiniteField,
    elem: Elem,
}

impl<'f> FieldElement<'f> {
    pub fn new(field: &'f FiniteField, elem: Elem) -> Result<Self> {
        field.elem(elem.0)?;
        Ok(FieldElement { field, elem })
    }

    pub fn elem(&self) -> Elem {
        self.elem
    }

    pub fn field(&self) -> &'f FiniteField {
        self.field
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if core::ptr::eq(self.field, other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        self.same_field(&rhs)?;
        Ok(self.with(self.field.add(self.elem, rhs.elem)))
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        self.same_field(&rhs)?;
        Ok(self.with(self.field.sub(self.elem, rhs.elem)))
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        self.same_field(&rhs)?;
        Ok(self.with(self.field.mul(self.elem, rhs.elem)))
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self> {
        self.same_field(&rhs)?;
        Ok(self.with(self.field.div(self.elem, rhs.elem)?))
    }

    pub fn inv(self) -> Result<Self> {
        Ok(self.with(self.field.inv(self.elem)?))
    }

    pub fn pow(self, n: u64) -> Self {
        self.with(self.field.pow(self.elem, n))
    }

    fn with(self, elem: Elem) -> Self {
        FieldElement {
            field: self.field,
            elem,
        }
    }
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other).is_ok() && self.elem == other.elem
    }
}

impl Eq for FieldElement<'_> {}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.field.coeffs(self.elem))
    }
}

macro_rules! forward_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'f> $tr for FieldElement<'f> {
            type Output = FieldElement<'f>;
            fn $method(self, rhs: Self) -> Self::Output {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{}", e),
                }
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);
forward_op!(Div, div, checked_div);

impl<'f> Neg for FieldElement<'f> {
    type Output = FieldElement<'f>;
    fn neg(self) -> Self::Output {
        self.with(self.field.neg(self.elem))
    }
}
