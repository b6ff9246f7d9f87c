//! Dense univariate polynomials over a [`FieldCtx`]: division with remainder,
//! the extended Euclidean algorithm, evaluation and reduction modulo `x^m - 1`.
//!
//! Polynomials are immutable values with trimmed coefficient vectors; the
//! zero polynomial has no coefficients.

use thiserror::Error;

use crate::field::{FElem, FieldCtx, FieldError, FieldKind, Residue};

/// Largest `m` accepted by [`PolyRing::mod_xm1`].
pub const MAX_M: usize = 2000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomials or points belong to different fields")]
    CtxMismatch,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("modulus x^{0} - 1 is outside the supported range 1..={MAX_M}")]
    DegreeCap(usize),
}

impl From<FieldError> for PolyError {
    fn from(e: FieldError) -> Self {
        match e {
            FieldError::DivisionByZero => PolyError::DivisionByZero,
            _ => PolyError::CtxMismatch,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: u64,
    coeffs: Vec<FElem>,
}

impl Poly {
    pub fn coeffs(&self) -> &[FElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&FElem> {
        self.coeffs.last()
    }

    /// Base-field residues of the coefficients (constant terms of each
    /// coefficient; exact for polynomials over a prime field).
    pub fn residues(&self) -> Vec<Residue> {
        self.coeffs.iter().map(|c| c.coeffs()[0]).collect()
    }
}

/// Polynomial arithmetic over one coefficient field.
#[derive(Debug, Clone, Copy)]
pub struct PolyRing<'a> {
    field: &'a FieldCtx,
}

impl<'a> PolyRing<'a> {
    pub fn new(field: &'a FieldCtx) -> Self {
        PolyRing { field }
    }

    pub fn field(&self) -> &'a FieldCtx {
        self.field
    }

    fn check(&self, a: &Poly) -> Result<(), PolyError> {
        if a.field == self.field.tag() {
            Ok(())
        } else {
            Err(PolyError::CtxMismatch)
        }
    }

    /// Build from field elements, trimming trailing zeros.
    pub fn from_coeffs(&self, mut coeffs: Vec<FElem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field: self.field.tag(), coeffs }
    }

    /// Build from base-field residues.
    pub fn from_residues(&self, coeffs: &[u64]) -> Poly {
        self.from_coeffs(coeffs.iter().map(|&c| self.field.constant(c)).collect())
    }

    pub fn zero(&self) -> Poly {
        self.from_coeffs(Vec::new())
    }

    pub fn one(&self) -> Poly {
        self.from_coeffs(vec![self.field.one()])
    }

    /// `c x^n`.
    pub fn monomial(&self, c: FElem, n: usize) -> Poly {
        let mut v = vec![self.field.zero(); n];
        v.push(c);
        self.from_coeffs(v)
    }

    /// `x^m - 1`.
    pub fn xm1(&self, m: usize) -> Poly {
        let mut v = vec![self.field.zero(); m + 1];
        v[0] = self.field.neg(&self.field.one());
        v[m] = self.field.one();
        self.from_coeffs(v)
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let f = self.field;
        let n = a.coeffs.len().max(b.coeffs.len());
        let z = f.zero();
        let v = (0..n).map(|i| f.add(a.coeffs.get(i).unwrap_or(&z), b.coeffs.get(i).unwrap_or(&z))).collect();
        self.from_coeffs(v)
    }

    pub fn neg(&self, a: &Poly) -> Poly {
        self.from_coeffs(a.coeffs.iter().map(|c| self.field.neg(c)).collect())
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &Poly, c: &FElem) -> Poly {
        self.from_coeffs(a.coeffs.iter().map(|x| self.field.mul(x, c)).collect())
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let f = self.field;
        let mut v = vec![f.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                v[i + j] = f.add(&v[i + j], &f.mul(x, y));
            }
        }
        self.from_coeffs(v)
    }

    pub fn checked_mul(&self, a: &Poly, b: &Poly) -> Result<Poly, PolyError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    /// `(quotient, remainder)` with `a = quotient * b + remainder`, `deg remainder < deg b`.
    pub fn divmod(&self, a: &Poly, b: &Poly) -> Result<(Poly, Poly), PolyError> {
        self.check(a)?;
        self.check(b)?;
        let f = self.field;
        let lead = b.leading().ok_or(PolyError::DivisionByZero)?;
        let lead_inv = f.inv(lead)?;
        let mut r = a.coeffs.clone();
        let db = b.coeffs.len() - 1;
        if r.len() <= db {
            return Ok((self.zero(), a.clone()));
        }
        let mut quo = vec![f.zero(); r.len() - db];
        for k in (0..quo.len()).rev() {
            let c = f.mul(&r[k + db], &lead_inv);
            if c.is_zero() {
                continue;
            }
            for (t, bt) in b.coeffs.iter().enumerate() {
                r[k + t] = f.sub(&r[k + t], &f.mul(&c, bt));
            }
            quo[k] = c;
        }
        r.truncate(db);
        Ok((self.from_coeffs(quo), self.from_coeffs(r)))
    }

    pub fn rem(&self, a: &Poly, b: &Poly) -> Result<Poly, PolyError> {
        Ok(self.divmod(a, b)?.1)
    }

    /// Scale to leading coefficient 1; returns the polynomial and the factor used.
    pub fn monic(&self, a: &Poly) -> (Poly, FElem) {
        match a.leading() {
            None => (a.clone(), self.field.zero()),
            Some(lc) => {
                let li = self.field.inv(lc).expect("leading coefficient is nonzero");
                (self.scale(a, &li), li)
            }
        }
    }

    /// `(g, u, v)` with `u a + v b = g` and `g` the monic gcd.
    pub fn ext_gcd(&self, a: &Poly, b: &Poly) -> Result<(Poly, Poly, Poly), PolyError> {
        self.check(a)?;
        self.check(b)?;
        if a.is_zero() && b.is_zero() {
            return Err(PolyError::BothZero);
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !r1.is_zero() {
            let (quo, rem) = self.divmod(&r0, &r1)?;
            let s2 = self.sub(&s0, &self.mul(&quo, &s1));
            let t2 = self.sub(&t0, &self.mul(&quo, &t1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let (g, li) = self.monic(&r0);
        Ok((g, self.scale(&s0, &li), self.scale(&t0, &li)))
    }

    /// Horner evaluation of `a` at `pt`.
    ///
    /// `pt` may live in `pt_field`, which is either the coefficient field itself
    /// or any extension of a prime coefficient field with the same characteristic.
    pub fn eval(&self, a: &Poly, pt_field: &FieldCtx, pt: &FElem) -> Result<FElem, PolyError> {
        self.check(a)?;
        if !pt_field.owns(pt) {
            return Err(PolyError::CtxMismatch);
        }
        let same = pt_field.tag() == self.field.tag();
        let embeddable = self.field.kind() == FieldKind::Prime && self.field.q() == pt_field.q();
        if !same && !embeddable {
            return Err(PolyError::CtxMismatch);
        }
        let lift = |c: &FElem| {
            if same {
                c.clone()
            } else {
                pt_field.constant(c.coeffs()[0] as u64)
            }
        };
        Ok(a.coeffs.iter().rev().fold(pt_field.zero(), |acc, c| pt_field.add(&pt_field.mul(&acc, pt), &lift(c))))
    }

    /// Reduce modulo `x^m - 1` by folding exponents modulo `m`.
    pub fn mod_xm1(&self, a: &Poly, m: usize) -> Result<Poly, PolyError> {
        self.check(a)?;
        if m == 0 || m > MAX_M {
            return Err(PolyError::DegreeCap(m));
        }
        let f = self.field;
        let mut v = vec![f.zero(); m.min(a.coeffs.len())];
        for (k, c) in a.coeffs.iter().enumerate() {
            v[k % m] = f.add(&v[k % m], c);
        }
        Ok(self.from_coeffs(v))
    }

    /// `a(x^e)`, without reduction.
    pub fn substitute_power(&self, a: &Poly, e: usize) -> Poly {
        let f = self.field;
        if a.is_zero() {
            return self.zero();
        }
        let mut v = vec![f.zero(); (a.coeffs.len() - 1) * e + 1];
        for (k, c) in a.coeffs.iter().enumerate() {
            v[k * e] = f.add(&v[k * e], c);
        }
        self.from_coeffs(v)
    }
}
