//! Exact arithmetic in a prime field F_q and in quotient fields K = F_q[x]/<f(x)>.
//!
//! Elements are fully reduced coefficient vectors in ascending powers of `x`,
//! so equality and hashing are structural. Every element carries a tag derived
//! from its field's `(q, f)` pair; mixing elements of different fields is
//! reported as [`FieldError::CtxMismatch`] by the `checked_*` operations and
//! is a panic in the plain ones.
//!
//! The scan order used by [`FieldCtx::primitive_element`] and
//! [`FieldCtx::elements`] enumerates elements by the integer index
//! `n = c_0 + c_1 q + c_2 q^2 + ...`, i.e. `0, 1, .., q-1, x, 1+x, ..`.

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

/// A residue modulo the base prime, always in `[0, q)`.
pub type Residue = u32;

/// Largest supported multiplicative group order, `q^d - 1 <= 2^63`.
pub const MAX_GROUP_ORDER: u64 = 1 << 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime modulus")]
    NonPrimeModulus(u64),
    #[error("modulus polynomial is reducible over F_{q}: discovered factor {factor:?}")]
    ReducibleModulus { q: u32, factor: Vec<Residue> },
    #[error("modulus polynomial must be monic of degree at least 1")]
    InvalidModulus,
    #[error("field of order {q}^{degree} exceeds the supported size")]
    TooLarge { q: u32, degree: usize },
    #[error("elements belong to different fields")]
    CtxMismatch,
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    Prime,
    Extension,
}

/// An element of a [`FieldCtx`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FElem {
    field: u64,
    coeffs: Vec<Residue>,
}

impl FElem {
    /// Coefficients in ascending powers of `x`; length equals the field degree.
    pub fn coeffs(&self) -> &[Residue] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn field_tag(&self) -> u64 {
        self.field
    }
}

impl fmt::Debug for FElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FElem({self})")
    }
}

impl fmt::Display for FElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (k, 1) => write!(f, "x^{k}")?,
                (k, c) => write!(f, "{c}x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A finite field: either F_q itself or F_q[x]/<f(x)> for a monic irreducible `f`.
///
/// Immutable after construction; safe to share across threads.
#[derive(Debug, Clone)]
pub struct FieldCtx {
    kind: FieldKind,
    q: u32,
    /// Monic modulus, ascending. The prime kind uses `x` internally.
    modulus: Vec<Residue>,
    degree: usize,
    cardinality: u64,
    tag: u64,
    group_factors: OnceLock<Vec<u64>>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of `n` by trial division, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn fingerprint(q: u32, modulus: &[Residue], kind: FieldKind) -> u64 {
    // FNV-1a
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut feed = |v: u64| {
        for b in v.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    };
    feed(kind as u64);
    feed(q as u64);
    feed(modulus.len() as u64);
    for &c in modulus {
        feed(c as u64);
    }
    h
}

impl FieldCtx {
    /// The prime field F_q.
    pub fn prime(q: u32) -> Result<Self, FieldError> {
        if !is_prime(q as u64) {
            return Err(FieldError::NonPrimeModulus(q as u64));
        }
        let modulus = vec![0, 1];
        Ok(FieldCtx {
            kind: FieldKind::Prime,
            q,
            tag: fingerprint(q, &modulus, FieldKind::Prime),
            modulus,
            degree: 1,
            cardinality: q as u64,
            group_factors: OnceLock::new(),
        })
    }

    /// The quotient field F_q[x]/<f(x)> for a monic irreducible `f` (ascending coefficients).
    ///
    /// Irreducibility is verified by a root scan followed by Ben-Or's test; a
    /// reducible modulus is rejected together with a factor that was found.
    pub fn extension(q: u32, modulus: &[Residue]) -> Result<Self, FieldError> {
        if !is_prime(q as u64) {
            return Err(FieldError::NonPrimeModulus(q as u64));
        }
        let f = dense::trim(modulus.iter().map(|&c| c % q).collect());
        if f.len() < 2 || *f.last().unwrap() != 1 {
            return Err(FieldError::InvalidModulus);
        }
        let degree = f.len() - 1;
        let cardinality = (q as u64)
            .checked_pow(degree as u32)
            .filter(|&c| c - 1 <= MAX_GROUP_ORDER)
            .ok_or(FieldError::TooLarge { q, degree })?;
        if let Some(factor) = dense::find_factor(&f, q) {
            return Err(FieldError::ReducibleModulus { q, factor });
        }
        Ok(FieldCtx {
            kind: FieldKind::Extension,
            q,
            tag: fingerprint(q, &f, FieldKind::Extension),
            modulus: f,
            degree,
            cardinality,
            group_factors: OnceLock::new(),
        })
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    /// The base characteristic.
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cardinality(&self) -> u64 {
        self.cardinality
    }

    /// The modulus polynomial (extension kind only).
    pub fn modulus(&self) -> Option<&[Residue]> {
        match self.kind {
            FieldKind::Prime => None,
            FieldKind::Extension => Some(&self.modulus),
        }
    }

    pub fn tag(&self) -> u64 {
        self.tag
    }

    pub fn owns(&self, a: &FElem) -> bool {
        a.field == self.tag && a.coeffs.len() == self.degree
    }

    fn assert_owns(&self, a: &FElem) {
        assert!(self.owns(a), "element {a} does not belong to this field");
    }

    fn check(&self, a: &FElem) -> Result<(), FieldError> {
        if self.owns(a) {
            Ok(())
        } else {
            Err(FieldError::CtxMismatch)
        }
    }

    fn wrap(&self, coeffs: Vec<Residue>) -> FElem {
        debug_assert_eq!(coeffs.len(), self.degree);
        FElem { field: self.tag, coeffs }
    }

    /// Reduce an arbitrary residue vector (ascending powers of `x`) into the field.
    pub fn element(&self, coeffs: &[u64]) -> FElem {
        let q = self.q as u64;
        let raw: Vec<Residue> = coeffs.iter().map(|&c| (c % q) as Residue).collect();
        self.reduce(raw)
    }

    fn reduce(&self, mut r: Vec<Residue>) -> FElem {
        let d = self.degree;
        let q = self.q as u64;
        if r.len() > d {
            for k in (d..r.len()).rev() {
                let c = r[k] as u64;
                if c == 0 {
                    continue;
                }
                for t in 0..d {
                    let sub = c * self.modulus[t] as u64 % q;
                    r[k - d + t] = ((r[k - d + t] as u64 + q - sub) % q) as Residue;
                }
                r[k] = 0;
            }
        }
        r.resize(d, 0);
        self.wrap(r)
    }

    pub fn zero(&self) -> FElem {
        self.wrap(vec![0; self.degree])
    }

    pub fn one(&self) -> FElem {
        self.constant(1)
    }

    /// The image of a base-field residue.
    pub fn constant(&self, c: u64) -> FElem {
        let mut v = vec![0; self.degree];
        v[0] = (c % self.q as u64) as Residue;
        self.wrap(v)
    }

    /// The class of `x` modulo the field's modulus.
    pub fn x(&self) -> FElem {
        self.element(&[0, 1])
    }

    /// Element number `n` in scan order.
    pub fn from_index(&self, mut n: u64) -> FElem {
        let q = self.q as u64;
        let mut v = vec![0; self.degree];
        for c in v.iter_mut() {
            *c = (n % q) as Residue;
            n /= q;
        }
        self.wrap(v)
    }

    /// Position of `a` in scan order.
    pub fn index_of(&self, a: &FElem) -> u64 {
        a.coeffs.iter().rev().fold(0u64, |acc, &c| acc * self.q as u64 + c as u64)
    }

    /// All elements in scan order.
    pub fn elements(&self) -> impl Iterator<Item = FElem> + '_ {
        (0..self.cardinality).map(move |n| self.from_index(n))
    }

    pub fn add(&self, a: &FElem, b: &FElem) -> FElem {
        self.assert_owns(a);
        self.assert_owns(b);
        let q = self.q;
        let v = a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| ((x as u64 + y as u64) % q as u64) as Residue).collect();
        self.wrap(v)
    }

    pub fn neg(&self, a: &FElem) -> FElem {
        self.assert_owns(a);
        let q = self.q;
        self.wrap(a.coeffs.iter().map(|&x| if x == 0 { 0 } else { q - x }).collect())
    }

    pub fn sub(&self, a: &FElem, b: &FElem) -> FElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FElem, b: &FElem) -> FElem {
        self.assert_owns(a);
        self.assert_owns(b);
        let q = self.q as u64;
        let d = self.degree;
        let mut r = vec![0u64; 2 * d - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                r[i + j] = (r[i + j] + x as u64 * y as u64) % q;
            }
        }
        self.reduce(r.into_iter().map(|c| c as Residue).collect())
    }

    /// Multiply by a base-field scalar.
    pub fn scale(&self, a: &FElem, c: Residue) -> FElem {
        self.assert_owns(a);
        let q = self.q as u64;
        self.wrap(a.coeffs.iter().map(|&x| (x as u64 * c as u64 % q) as Residue).collect())
    }

    pub fn checked_add(&self, a: &FElem, b: &FElem) -> Result<FElem, FieldError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    pub fn checked_sub(&self, a: &FElem, b: &FElem) -> Result<FElem, FieldError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.sub(a, b))
    }

    pub fn checked_mul(&self, a: &FElem, b: &FElem) -> Result<FElem, FieldError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn checked_neg(&self, a: &FElem) -> Result<FElem, FieldError> {
        self.check(a)?;
        Ok(self.neg(a))
    }

    /// Multiplicative inverse by the extended Euclidean algorithm on
    /// `(a(x), f(x))`.
    pub fn inv(&self, a: &FElem) -> Result<FElem, FieldError> {
        self.check(a)?;
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let q = self.q;
        let (g, u, _) = dense::ext_gcd(&dense::trim(a.coeffs.clone()), &self.modulus, q);
        // f irreducible, so the monic gcd is 1
        debug_assert_eq!(g, vec![1]);
        Ok(self.reduce(u))
    }

    pub fn div(&self, a: &FElem, b: &FElem) -> Result<FElem, FieldError> {
        self.check(a)?;
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// `a^e` by square-and-multiply; `a^0 = 1` for every `a`.
    pub fn pow(&self, a: &FElem, mut e: u64) -> FElem {
        self.assert_owns(a);
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `a^(q^e)`: `e` applications of the Frobenius map `a -> a^q`.
    pub fn frob_power(&self, a: &FElem, e: usize) -> FElem {
        // the Frobenius has order `degree`
        let e = e % self.degree;
        (0..e).fold(a.clone(), |acc, _| self.pow(&acc, self.q as u64))
    }

    /// Prime factors of `|K^x| = q^d - 1`, computed once.
    pub fn group_order_factors(&self) -> &[u64] {
        self.group_factors.get_or_init(|| prime_factors(self.cardinality - 1))
    }

    /// The least `n > 0` with `a^n = 1`.
    pub fn mult_order(&self, a: &FElem) -> Result<u64, FieldError> {
        self.check(a)?;
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let one = self.one();
        let mut order = self.cardinality - 1;
        for &p in self.group_order_factors() {
            while order.is_multiple_of(p) && self.pow(a, order / p) == one {
                order /= p;
            }
        }
        Ok(order)
    }

    /// First element in scan order generating the whole multiplicative group.
    pub fn primitive_element(&self) -> FElem {
        self.first_of_order(self.cardinality - 1).expect("a finite field always has a primitive element")
    }

    /// First nonzero element in scan order with multiplicative order exactly `n`.
    pub fn first_of_order(&self, n: u64) -> Option<FElem> {
        if n == 0 || !(self.cardinality - 1).is_multiple_of(n) {
            return None;
        }
        (1..self.cardinality).map(|k| self.from_index(k)).find(|a| self.mult_order(a).ok() == Some(n))
    }
}

/// Dense residue-vector polynomials over F_q (ascending, trimmed).
///
/// Used internally for inversion and irreducibility checks, below the
/// general [`crate::poly`] layer.
pub(crate) mod dense {
    use super::Residue;

    pub fn trim(mut a: Vec<Residue>) -> Vec<Residue> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inv_mod(a: Residue, q: u32) -> Residue {
        // q prime: a^(q-2)
        let (mut base, mut e, mut acc) = (a as u64, q as u64 - 2, 1u64);
        let q = q as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % q;
            }
            base = base * base % q;
            e >>= 1;
        }
        acc as Residue
    }

    pub fn sub(a: &[Residue], b: &[Residue], q: u32) -> Vec<Residue> {
        let n = a.len().max(b.len());
        let q64 = q as u64;
        let v = (0..n)
            .map(|i| {
                let x = *a.get(i).unwrap_or(&0) as u64;
                let y = *b.get(i).unwrap_or(&0) as u64;
                ((x + q64 - y) % q64) as Residue
            })
            .collect();
        trim(v)
    }

    pub fn mul(a: &[Residue], b: &[Residue], q: u32) -> Vec<Residue> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let q = q as u64;
        let mut r = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + x as u64 * y as u64) % q;
            }
        }
        trim(r.into_iter().map(|c| c as Residue).collect())
    }

    pub fn divmod(a: &[Residue], b: &[Residue], q: u32) -> (Vec<Residue>, Vec<Residue>) {
        assert!(!b.is_empty(), "division by the zero polynomial");
        let mut r = trim(a.to_vec());
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let q64 = q as u64;
        let lead_inv = inv_mod(*b.last().unwrap(), q) as u64;
        let mut quo = vec![0; r.len() - b.len() + 1];
        for k in (0..quo.len()).rev() {
            let c = r[k + b.len() - 1] as u64 * lead_inv % q64;
            quo[k] = c as Residue;
            if c == 0 {
                continue;
            }
            for (t, &bt) in b.iter().enumerate() {
                let s = c * bt as u64 % q64;
                r[k + t] = ((r[k + t] as u64 + q64 - s) % q64) as Residue;
            }
        }
        (trim(quo), trim(r))
    }

    fn monic(a: Vec<Residue>, q: u32) -> (Vec<Residue>, Residue) {
        match a.last() {
            None => (a, 0),
            Some(&lc) => {
                let li = inv_mod(lc, q) as u64;
                let v = a.iter().map(|&c| (c as u64 * li % q as u64) as Residue).collect();
                (v, li as Residue)
            }
        }
    }

    /// Returns `(g, u, v)` with `u a + v b = g`, `g` monic.
    pub fn ext_gcd(a: &[Residue], b: &[Residue], q: u32) -> (Vec<Residue>, Vec<Residue>, Vec<Residue>) {
        let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
        let (mut s0, mut s1) = (vec![1], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (quo, rem) = divmod(&r0, &r1, q);
            let s2 = sub(&s0, &mul(&quo, &s1, q), q);
            let t2 = sub(&t0, &mul(&quo, &t1, q), q);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let (g, li) = monic(r0, q);
        let scale = |v: Vec<Residue>| trim(v.iter().map(|&c| (c as u64 * li as u64 % q as u64) as Residue).collect());
        (g, scale(s0), scale(t0))
    }

    pub fn gcd(a: &[Residue], b: &[Residue], q: u32) -> Vec<Residue> {
        ext_gcd(a, b, q).0
    }

    pub fn eval(a: &[Residue], x: Residue, q: u32) -> Residue {
        let q = q as u64;
        a.iter().rev().fold(0u64, |acc, &c| (acc * x as u64 + c as u64) % q) as Residue
    }

    pub fn pow_mod(base: &[Residue], mut e: u64, modulus: &[Residue], q: u32) -> Vec<Residue> {
        let mut b = divmod(base, modulus, q).1;
        let mut acc = divmod(&[1], modulus, q).1;
        while e > 0 {
            if e & 1 == 1 {
                acc = divmod(&mul(&acc, &b, q), modulus, q).1;
            }
            e >>= 1;
            if e > 0 {
                b = divmod(&mul(&b, &b, q), modulus, q).1;
            }
        }
        acc
    }

    /// A nontrivial monic factor of `f` if it is reducible over F_q.
    pub fn find_factor(f: &[Residue], q: u32) -> Option<Vec<Residue>> {
        let d = f.len() - 1;
        if d <= 1 {
            return None;
        }
        if q <= 1 << 16 {
            if let Some(c) = (0..q).find(|&c| eval(f, c, q) == 0) {
                // x - c
                return Some(vec![if c == 0 { 0 } else { q - c }, 1]);
            }
        }
        // Ben-Or: f is irreducible iff gcd(x^(q^k) - x, f) = 1 for k <= d/2
        let x = vec![0, 1];
        let mut h = x.clone();
        for _ in 1..=d / 2 {
            h = pow_mod(&h, q as u64, f, q);
            let g = gcd(&sub(&h, &x, q), f, q);
            if g.len() > 1 {
                return Some(g);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> FieldCtx {
        FieldCtx::extension(3, &[1, 1, 1, 1, 1, 1, 1]).unwrap()
    }

    fn k3() -> FieldCtx {
        FieldCtx::extension(3, &[1, 2, 1, 2, 1, 2, 1]).unwrap()
    }

    #[test]
    fn make_extension_examples() {
        let k0 = FieldCtx::extension(3, &[2, 1]).unwrap();
        assert_eq!(k0.cardinality(), 3);
        assert_eq!(k0.degree(), 1);
        assert_eq!(k2().cardinality(), 729);
        assert_eq!(k2().kind(), FieldKind::Extension);
    }

    #[test]
    fn reducible_modulus_reports_factor() {
        // x^2 + 2 = (x + 1)(x + 2) over F_3
        match FieldCtx::extension(3, &[2, 0, 1]) {
            Err(FieldError::ReducibleModulus { factor, .. }) => {
                let (_, r) = dense::divmod(&[2, 0, 1], &factor, 3);
                assert!(r.is_empty());
                assert_eq!(factor.len(), 2);
            }
            other => panic!("expected ReducibleModulus, got {other:?}"),
        }
        // (x^2+1)^2 over F_3 has no roots; Ben-Or must catch it
        let f = dense::mul(&[1, 0, 1], &[1, 0, 1], 3);
        assert!(matches!(FieldCtx::extension(3, &f), Err(FieldError::ReducibleModulus { .. })));
        assert_eq!(FieldCtx::prime(9).unwrap_err(), FieldError::NonPrimeModulus(9));
        assert_eq!(FieldCtx::extension(3, &[1, 1, 2]).unwrap_err(), FieldError::InvalidModulus);
        assert_eq!(FieldCtx::extension(3, &[1]).unwrap_err(), FieldError::InvalidModulus);
    }

    #[test]
    fn arithmetic_examples() {
        let k = k2();
        let a = k.element(&[1, 1]);
        assert_eq!(k.mul(&a, &a).coeffs(), &[1, 2, 1, 0, 0, 0]);
        let x = k.x();
        let x5 = k.pow(&x, 5);
        assert_eq!(k.mul(&x, &x5).coeffs(), &[2, 2, 2, 2, 2, 2]);
        assert!(k.add(&a, &k.neg(&a)).is_zero());
    }

    #[test]
    fn inverse_examples() {
        let f3 = FieldCtx::prime(3).unwrap();
        assert_eq!(f3.inv(&f3.one()).unwrap(), f3.one());
        assert_eq!(f3.inv(&f3.constant(2)).unwrap(), f3.constant(2));
        assert_eq!(f3.inv(&f3.zero()), Err(FieldError::DivisionByZero));
        let k = k2();
        let a = k.element(&[1, 1]);
        assert_eq!(k.inv(&a).unwrap(), k.pow(&a, 90));
    }

    #[test]
    fn frobenius_examples() {
        let k = k2();
        let a = k.element(&[1, 1]);
        // (1+x)^(3^4) = (1+x)^81 and (1+x)^(3^2) = (1+x)^9
        assert_eq!(k.frob_power(&a, 4), k.element(&[1, 0, 0, 0, 1]));
        assert_eq!(k.frob_power(&a, 2), k.element(&[1, 0, 1]));
        assert_eq!(k.frob_power(&a, 1), k.pow(&a, 3));
        assert_eq!(k.frob_power(&a, 0), a);
        assert_eq!(k.frob_power(&a, 6), a);
    }

    #[test]
    fn order_examples() {
        let k = k2();
        assert_eq!(k.mult_order(&k.one()).unwrap(), 1);
        assert_eq!(k.mult_order(&k.element(&[1, 1])).unwrap(), 91);
        assert_eq!(k.mult_order(&k.zero()), Err(FieldError::DivisionByZero));
        let k3 = k3();
        assert_eq!(k3.mult_order(&k3.element(&[1, 2])).unwrap(), 91);
    }

    #[test]
    fn primitive_element_examples() {
        let f3 = FieldCtx::prime(3).unwrap();
        assert_eq!(f3.primitive_element(), f3.constant(2));
        let f2 = FieldCtx::prime(2).unwrap();
        assert_eq!(f2.primitive_element(), f2.one());
        let k = k2();
        let g = k.primitive_element();
        assert_eq!(k.mult_order(&g).unwrap(), 728);
        // every earlier element in scan order has smaller order
        for n in 1..k.index_of(&g) {
            assert!(k.mult_order(&k.from_index(n)).unwrap() < 728);
        }
        // first generator of the order-91 subgroup is 1 + x
        assert_eq!(k.first_of_order(91).unwrap(), k.element(&[1, 1]));
    }

    #[test]
    fn mismatched_contexts_are_rejected() {
        let a = k2().one();
        let b = k3().one();
        assert_eq!(k2().checked_add(&a, &b), Err(FieldError::CtxMismatch));
        assert_eq!(k2().checked_mul(&b, &a), Err(FieldError::CtxMismatch));
        assert_eq!(k2().inv(&b), Err(FieldError::CtxMismatch));
    }

    #[test]
    fn scan_order_round_trip() {
        let k = k2();
        for n in [0u64, 1, 2, 3, 4, 100, 728] {
            assert_eq!(k.index_of(&k.from_index(n)), n);
        }
        assert_eq!(k.from_index(4), k.element(&[1, 1]));
    }

    #[test]
    fn display_is_polynomial_form() {
        let k = k2();
        assert_eq!(k.element(&[1, 0, 2, 0, 1]).to_string(), "1+2x^2+x^4");
        assert_eq!(k.zero().to_string(), "0");
    }
}
