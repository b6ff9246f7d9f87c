//! Decomposition of the group algebra F_q[G_(m,3,r)] into components.
//!
//! [`System::new`] validates `(m, q, r)`, computes the q-cyclotomic cosets
//! modulo `m` and their classification, factors `x^m - 1` over F_q through a
//! splitting field, builds the primitive idempotents `ε_i(x)` by the extended
//! Euclidean algorithm, and equips every component field `K_i = F_q[x]/<f_i>`
//! with its automorphism `θ_i : a(x) -> a(x^r)`.
//!
//! A coset `J` satisfies Condition I when `r k ≡ k (mod m)` for its members;
//! then `θ_i` is the identity. Otherwise (Condition II) `3 | d_i` and `θ_i` is
//! a Frobenius power of order 3.

use std::collections::HashMap;

use thiserror::Error;

use crate::field::{FElem, FieldCtx, FieldError, Residue};
use crate::poly::{Poly, PolyRing, MAX_M};

/// Largest norm group materialized per component.
pub const MAX_NORM_GROUP: u64 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("RangeViolation: {0}")]
    RangeViolation(String),
    #[error("NonPrimeQ: q = {0} is not prime")]
    NonPrimeQ(u32),
    #[error("GcdViolation: {0}")]
    GcdViolation(String),
    #[error("OrderViolation: r^3 = {cube} (mod {m}), expected 1")]
    OrderViolation { m: usize, cube: usize },
    #[error("NotAPowerOfQ: no e > 0 with {q}^e = {r} (mod {m})")]
    NotAPowerOfQ { m: usize, q: u32, r: usize },
    #[error("TooLarge: {0}")]
    TooLarge(String),
    #[error("InternalInconsistency: {0}")]
    InternalInconsistency(String),
}

impl StructureError {
    /// The short violation name used in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            StructureError::RangeViolation(_) => "RangeViolation",
            StructureError::NonPrimeQ(_) => "NonPrimeQ",
            StructureError::GcdViolation(_) => "GcdViolation",
            StructureError::OrderViolation { .. } => "OrderViolation",
            StructureError::NotAPowerOfQ { .. } => "NotAPowerOfQ",
            StructureError::TooLarge(_) => "TooLarge",
            StructureError::InternalInconsistency(_) => "InternalInconsistency",
        }
    }
}

fn internal(msg: impl Into<String>) -> StructureError {
    StructureError::InternalInconsistency(msg.into())
}

impl From<FieldError> for StructureError {
    fn from(e: FieldError) -> Self {
        match e {
            FieldError::TooLarge { .. } => StructureError::TooLarge(e.to_string()),
            other => internal(other.to_string()),
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn pow_mod(base: u64, mut e: u64, m: u64) -> u64 {
    let (mut b, mut acc) = (base % m, 1 % m);
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Validated group parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Params {
    pub m: usize,
    pub q: u32,
    pub r: usize,
    /// Least `e > 0` with `q^e ≡ r (mod m)`.
    pub eps: usize,
}

impl Params {
    pub fn validate(m: usize, q: u32, r: usize) -> Result<Params, StructureError> {
        if !(3..=MAX_M).contains(&m) {
            return Err(StructureError::RangeViolation(format!("m = {m} must lie in 3..={MAX_M}")));
        }
        if r <= 1 || r >= m {
            return Err(StructureError::RangeViolation(format!("r = {r} must satisfy 1 < r < m = {m}")));
        }
        if !crate::field::is_prime(q as u64) {
            return Err(StructureError::NonPrimeQ(q));
        }
        if gcd(m, q as usize) != 1 {
            return Err(StructureError::GcdViolation(format!("gcd(m, q) = gcd({m}, {q}) != 1")));
        }
        if gcd(m, r) != 1 {
            return Err(StructureError::GcdViolation(format!("gcd(m, r) = gcd({m}, {r}) != 1")));
        }
        let cube = pow_mod(r as u64, 3, m as u64) as usize;
        if cube != 1 {
            return Err(StructureError::OrderViolation { m, cube });
        }
        let ord = multiplicative_order(q as u64 % m as u64, m as u64);
        let eps = (1..=ord)
            .find(|&e| pow_mod(q as u64, e, m as u64) == r as u64)
            .ok_or(StructureError::NotAPowerOfQ { m, q, r })?;
        Ok(Params { m, q, r, eps: eps as usize })
    }

    /// `D = ord_m(q)`, the degree of the splitting field of `x^m - 1`.
    pub fn splitting_degree(&self) -> usize {
        multiplicative_order(self.q as u64 % self.m as u64, self.m as u64) as usize
    }
}

fn multiplicative_order(a: u64, m: u64) -> u64 {
    let mut k = 1;
    let mut x = a % m;
    while x != 1 % m {
        x = x * a % m;
        k += 1;
    }
    k
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    I,
    II,
}

/// The counts `(s, t, s1, s2, t1, t2)` of the μ-pairing layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Partition {
    pub s: usize,
    pub t: usize,
    pub s1: usize,
    pub s2: usize,
    pub t1: usize,
    pub t2: usize,
}

/// q-cyclotomic cosets modulo `m` with their classification and μ pairing.
#[derive(Debug, Clone)]
pub struct CosetTable {
    pub params: Params,
    /// Sorted members of each coset; index 0 is `{0}`.
    pub cosets: Vec<Vec<usize>>,
    pub d: Vec<usize>,
    pub cond: Vec<Condition>,
    /// `mu[i]` is the index of the coset `-J(i)`.
    pub mu: Vec<usize>,
    pub partition: Partition,
}

impl CosetTable {
    /// Condition I cosets come first, then Condition II ones. Within each
    /// class cosets are ordered by the order `m / gcd(k, m)` of their roots of
    /// unity, then by minimal representative.
    pub fn new(params: Params) -> Result<CosetTable, StructureError> {
        let Params { m, q, r, .. } = params;
        let mut seen = vec![false; m];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for s in 0..m {
            if seen[s] {
                continue;
            }
            let mut coset = Vec::new();
            let mut k = s;
            while !seen[k] {
                seen[k] = true;
                coset.push(k);
                k = k * q as usize % m;
            }
            coset.sort_unstable();
            raw.push(coset);
        }
        let classify = |c: &[usize]| -> Result<Condition, StructureError> {
            let fixed = |k: usize| r * k % m == k;
            if fixed(c[0]) {
                if !c.iter().all(|&k| fixed(k)) {
                    return Err(internal(format!(
                        "coset {c:?} is fixed by r at its minimal member but not at all members"
                    )));
                }
                Ok(Condition::I)
            } else {
                Ok(Condition::II)
            }
        };
        let mut keyed = Vec::with_capacity(raw.len());
        for c in raw {
            let cond = classify(&c)?;
            let order = m / gcd(c[0], m);
            keyed.push((cond == Condition::II, order, c[0], c));
        }
        keyed.sort();
        let cosets: Vec<Vec<usize>> = keyed.into_iter().map(|k| k.3).collect();
        let cond: Vec<Condition> = cosets.iter().map(|c| classify(c)).collect::<Result<_, _>>()?;
        let d: Vec<usize> = cosets.iter().map(Vec::len).collect();
        for (c, (&cd, &di)) in cosets.iter().zip(cond.iter().zip(&d)) {
            if cd == Condition::II && di % 3 != 0 {
                return Err(internal(format!("Condition II coset {c:?} has size not divisible by 3")));
            }
        }
        let mut owner = vec![0usize; m];
        for (i, c) in cosets.iter().enumerate() {
            for &k in c {
                owner[k] = i;
            }
        }
        let mu: Vec<usize> = cosets.iter().map(|c| owner[(m - c[0]) % m]).collect();
        let s = cond.iter().filter(|&&c| c == Condition::I).count() - 1;
        let t = cosets.len() - s - 1;
        let s1 = (1..=s).filter(|&i| mu[i] == i).count();
        let t1 = (s + 1..=s + t).filter(|&i| mu[i] == i).count();
        let table = CosetTable {
            params,
            d,
            cond,
            partition: Partition { s, t, s1, s2: (s - s1) / 2, t1, t2: (t - t1) / 2 },
            mu,
            cosets,
        };
        table.check()?;
        Ok(table)
    }

    fn check(&self) -> Result<(), StructureError> {
        let m = self.params.m;
        if self.d.iter().sum::<usize>() != m || self.cosets[0] != vec![0] {
            return Err(internal("cosets do not partition 0..m"));
        }
        for (i, &j) in self.mu.iter().enumerate() {
            if self.mu[j] != i || self.cond[i] != self.cond[j] {
                return Err(internal(format!("μ is not an involution preserving the classes at {i}")));
            }
        }
        let p = self.partition;
        if p.s != p.s1 + 2 * p.s2 || p.t != p.t1 + 2 * p.t2 {
            return Err(internal("inconsistent partition counts"));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }
}

/// Which power of the Frobenius `θ_i` is on `K_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThetaKind {
    Identity,
    /// `a -> a^(q^(d/3))`
    FrobThird,
    /// `a -> a^(q^(2d/3))`
    FrobTwoThirds,
}

impl ThetaKind {
    pub fn name(&self) -> &'static str {
        match self {
            ThetaKind::Identity => "identity",
            ThetaKind::FrobThird => "frob(d/3)",
            ThetaKind::FrobTwoThirds => "frob(2d/3)",
        }
    }
}

/// Everything attached to one coset `J(i)`.
#[derive(Debug, Clone)]
pub struct ComponentCtx {
    pub index: usize,
    pub coset: Vec<usize>,
    pub d: usize,
    pub cond: Condition,
    pub m: usize,
    /// Irreducible factor `f_i`, over F_q.
    pub f: Poly,
    /// `(x^m - 1) / f_i`.
    pub big_f: Poly,
    /// Primitive idempotent `ε_i(x)` as residues, length `m`.
    pub eps: Vec<Residue>,
    /// `K_i = F_q[x]/<f_i>`.
    pub field: FieldCtx,
    pub theta: ThetaKind,
    /// Primitive element of `K_i` (first in scan order).
    pub zeta: FElem,
    /// Primitive cube root of unity; Condition I with `q^d ≡ 1 (mod 3)` only.
    pub omega: Option<FElem>,
    /// Generator of the norm group; Condition II only.
    pub rho: Option<FElem>,
    /// `rho^0, rho^1, ...`; Condition II only.
    pub norm_group: Vec<FElem>,
    norm_index: HashMap<FElem, u64>,
}

impl ComponentCtx {
    /// `q^(d/3)`, or 0 on Condition I components.
    pub fn q_third(&self) -> u64 {
        if self.cond == Condition::I {
            0
        } else {
            (self.field.q() as u64).pow((self.d / 3) as u32)
        }
    }

    fn frob_step(&self) -> usize {
        match self.theta {
            ThetaKind::Identity => 0,
            ThetaKind::FrobThird => self.d / 3,
            ThetaKind::FrobTwoThirds => 2 * self.d / 3,
        }
    }

    /// `θ_i(a)`.
    pub fn theta(&self, a: &FElem) -> FElem {
        self.theta_pow(a, 1)
    }

    /// `θ_i^e(a)`.
    pub fn theta_pow(&self, a: &FElem, e: usize) -> FElem {
        match self.theta {
            ThetaKind::Identity => a.clone(),
            _ => self.field.frob_power(a, self.frob_step() * (e % 3)),
        }
    }

    /// `α θ(α) θ²(α)`.
    pub fn norm(&self, a: &FElem) -> FElem {
        let k = &self.field;
        k.mul(&k.mul(a, &self.theta(a)), &self.theta_pow(a, 2))
    }

    /// The exponent `k` with `a = rho^k`, if `a` is in the norm group.
    pub fn norm_exponent(&self, a: &FElem) -> Option<u64> {
        self.norm_index.get(a).copied()
    }

    /// `ρ^k`.
    pub fn norm_element(&self, k: u64) -> FElem {
        let n = self.norm_group.len() as u64;
        self.norm_group[(k % n) as usize].clone()
    }

    /// `a(x^e)` reduced into this component's field, for `a` given as a
    /// residue polynomial in `x`.
    pub fn substitute_power(&self, a: &[Residue], e: usize) -> FElem {
        let k = &self.field;
        let xe = k.pow(&k.x(), e as u64);
        a.iter().rev().fold(k.zero(), |acc, &c| k.add(&k.mul(&acc, &xe), &k.constant(c as u64)))
    }

    /// `q^d mod 3`.
    pub fn qd_mod3(&self) -> u64 {
        pow_mod(self.field.q() as u64, self.d as u64, 3)
    }
}

/// The full decomposition for one parameter triple.
#[derive(Debug, Clone)]
pub struct System {
    pub params: Params,
    pub table: CosetTable,
    pub components: Vec<ComponentCtx>,
    pub base: FieldCtx,
    /// `F_(q^D)`, containing a primitive m-th root of unity.
    pub splitting: FieldCtx,
    /// The primitive m-th root of unity used to build the factors.
    pub zeta: FElem,
}

impl System {
    pub fn new(m: usize, q: u32, r: usize) -> Result<System, StructureError> {
        let params = Params::validate(m, q, r)?;
        let table = CosetTable::new(params)?;
        let base = FieldCtx::prime(q).map_err(|e| internal(e.to_string()))?;
        let splitting = splitting_field(q, params.splitting_degree())?;
        let g = splitting.primitive_element();
        let zeta = splitting.pow(&g, (splitting.cardinality() - 1) / m as u64);
        if splitting.mult_order(&zeta)? != m as u64 {
            return Err(internal("ζ is not a primitive m-th root of unity"));
        }
        let components = (0..table.len())
            .map(|i| build_component(&table, i, &base, &splitting, &zeta))
            .collect::<Result<Vec<_>, _>>()?;
        let sys = System { params, table, components, base, splitting, zeta };
        sys.check_decomposition()?;
        Ok(sys)
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component(&self, i: usize) -> &ComponentCtx {
        &self.components[i]
    }

    pub fn mu(&self, i: usize) -> usize {
        self.table.mu[i]
    }

    /// `a(x^{-1})` for `a ∈ K_i`, reduced into `K_{μ(i)}`.
    pub fn conjugate_into_mu(&self, i: usize, a: &FElem) -> FElem {
        let target = &self.components[self.mu(i)];
        target.substitute_power(a.coeffs(), self.params.m - 1)
    }

    fn check_decomposition(&self) -> Result<(), StructureError> {
        let m = self.params.m;
        let ring = PolyRing::new(&self.base);
        let prod = self.components.iter().fold(ring.one(), |acc, c| ring.mul(&acc, &c.f));
        if prod != ring.xm1(m) {
            return Err(internal("product of the factors is not x^m - 1"));
        }
        let q = self.params.q as u64;
        let mut total = vec![0u64; m];
        for c in &self.components {
            for (t, &e) in total.iter_mut().zip(&c.eps) {
                *t = (*t + e as u64) % q;
            }
        }
        if total[0] != 1 || total[1..].iter().any(|&c| c != 0) {
            return Err(internal("idempotents do not sum to 1"));
        }
        Ok(())
    }
}

/// First monic irreducible polynomial of degree `deg` in scan order.
fn splitting_field(q: u32, deg: usize) -> Result<FieldCtx, StructureError> {
    let card = (q as u64)
        .checked_pow(deg as u32)
        .filter(|&c| c - 1 <= crate::field::MAX_GROUP_ORDER)
        .ok_or_else(|| StructureError::TooLarge(format!("splitting field of order {q}^{deg}")))?;
    for n in 0..card {
        let mut f: Vec<Residue> = Vec::with_capacity(deg + 1);
        let mut k = n;
        for _ in 0..deg {
            f.push((k % q as u64) as Residue);
            k /= q as u64;
        }
        f.push(1);
        match FieldCtx::extension(q, &f) {
            Ok(field) => return Ok(field),
            Err(FieldError::ReducibleModulus { .. }) => continue,
            Err(e) => return Err(e.into()),
        }
    }
    Err(internal(format!("no irreducible polynomial of degree {deg} over F_{q}")))
}

fn build_component(
    table: &CosetTable,
    i: usize,
    base: &FieldCtx,
    splitting: &FieldCtx,
    zeta: &FElem,
) -> Result<ComponentCtx, StructureError> {
    let Params { m, q, r, .. } = table.params;
    let coset = table.cosets[i].clone();
    let d = table.d[i];
    let cond = table.cond[i];

    // f_i = prod (x - ζ^j) over the splitting field, then pulled back to F_q
    let big = PolyRing::new(splitting);
    let f_big = coset.iter().fold(big.one(), |acc, &j| {
        let root = splitting.pow(zeta, j as u64);
        big.mul(&acc, &big.from_coeffs(vec![splitting.neg(&root), splitting.one()]))
    });
    let ring = PolyRing::new(base);
    let mut f_res = Vec::with_capacity(d + 1);
    for c in f_big.coeffs() {
        if c.coeffs()[1..].iter().any(|&x| x != 0) {
            return Err(internal(format!("factor {i} has a coefficient outside F_q")));
        }
        f_res.push(c.coeffs()[0] as u64);
    }
    let f = ring.from_residues(&f_res);

    let xm1 = ring.xm1(m);
    let (big_f, rem) = ring.divmod(&xm1, &f).map_err(|e| internal(e.to_string()))?;
    if !rem.is_zero() {
        return Err(internal(format!("f_{i} does not divide x^m - 1")));
    }
    let (g, u, _v) = ring.ext_gcd(&big_f, &f).map_err(|e| internal(e.to_string()))?;
    if g != ring.one() {
        return Err(internal(format!("gcd(F_{i}, f_{i}) != 1")));
    }
    let eps_poly = ring.mod_xm1(&ring.mul(&u, &big_f), m).map_err(|e| internal(e.to_string()))?;
    let mut eps = eps_poly.residues();
    eps.resize(m, 0);

    // discrete Fourier form of the same idempotent
    let m_inv = splitting.inv(&splitting.constant(m as u64))?;
    let zeta_inv = splitting.inv(zeta)?;
    for (l, &e) in eps.iter().enumerate() {
        let s = coset
            .iter()
            .fold(splitting.zero(), |acc, &j| splitting.add(&acc, &splitting.pow(&zeta_inv, (j * l) as u64)));
        let v = splitting.mul(&m_inv, &s);
        if v != splitting.constant(e as u64) {
            return Err(internal(format!("idempotent {i} disagrees with its Fourier form at x^{l}")));
        }
    }
    // ε_i(x^r) ≡ ε_i(x)
    let mut shifted = vec![0u32; m];
    for (l, &e) in eps.iter().enumerate() {
        shifted[l * r % m] = e;
    }
    if shifted != eps {
        return Err(internal(format!("idempotent {i} is not fixed by x -> x^r")));
    }

    let field = FieldCtx::extension(q, &f.residues()).map_err(|e| internal(format!("component field {i}: {e}")))?;
    let x = field.x();
    let xr = field.pow(&x, r as u64);
    let theta = match cond {
        Condition::I => {
            if xr != x {
                return Err(internal(format!("θ_{i} is not the identity on a Condition I component")));
            }
            ThetaKind::Identity
        }
        Condition::II => {
            if xr == field.frob_power(&x, d / 3) {
                ThetaKind::FrobThird
            } else if xr == field.frob_power(&x, 2 * d / 3) {
                ThetaKind::FrobTwoThirds
            } else {
                return Err(internal(format!("θ_{i} is not a Frobenius power of order 3")));
            }
        }
    };

    let zeta_i = field.primitive_element();
    let group = field.cardinality() - 1;
    let omega = (cond == Condition::I && group % 3 == 0).then(|| field.pow(&zeta_i, group / 3));

    let mut comp = ComponentCtx {
        index: i,
        coset,
        d,
        cond,
        m,
        f,
        big_f,
        eps,
        field,
        theta,
        zeta: zeta_i,
        omega,
        rho: None,
        norm_group: Vec::new(),
        norm_index: HashMap::new(),
    };
    if cond == Condition::II {
        let qt = comp.q_third();
        let size = 1 + qt + qt * qt;
        if size > MAX_NORM_GROUP {
            return Err(StructureError::TooLarge(format!("norm group of component {i} has {size} elements")));
        }
        let k = &comp.field;
        let rho = k.first_of_order(size).ok_or_else(|| internal(format!("no element of order {size} in K_{i}")))?;
        let mut group = Vec::with_capacity(size as usize);
        let mut a = k.one();
        for _ in 0..size {
            group.push(a.clone());
            a = k.mul(&a, &rho);
        }
        if a != k.one() {
            return Err(internal(format!("norm group generator of K_{i} has the wrong order")));
        }
        let one = k.one();
        if let Some(bad) = group.iter().find(|g| comp.norm(g) != one) {
            return Err(internal(format!("{bad} fails the norm equation in K_{i}")));
        }
        comp.norm_index = group.iter().cloned().zip(0u64..).collect();
        comp.norm_group = group;
        comp.rho = Some(rho);
    }
    Ok(comp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_examples() {
        assert_eq!(Params::validate(14, 3, 9).unwrap().eps, 2);
        assert_eq!(Params::validate(7, 2, 2).unwrap().eps, 1);
        assert!(matches!(Params::validate(14, 3, 5), Err(StructureError::OrderViolation { cube: 13, .. })));
        assert!(matches!(Params::validate(14, 4, 9), Err(StructureError::NonPrimeQ(4))));
        assert!(matches!(Params::validate(14, 7, 9), Err(StructureError::GcdViolation(_))));
        assert!(matches!(Params::validate(14, 3, 1), Err(StructureError::RangeViolation(_))));
        assert!(matches!(Params::validate(2, 3, 1), Err(StructureError::RangeViolation(_))));
        // 3^3 ≡ 1 (mod 13) but the powers of 5 mod 13 are {1, 5, 12, 8}
        assert!(matches!(Params::validate(13, 5, 3), Err(StructureError::NotAPowerOfQ { .. })));
    }

    #[test]
    fn cosets_14_3_9() {
        let t = CosetTable::new(Params::validate(14, 3, 9).unwrap()).unwrap();
        assert_eq!(t.cosets, vec![vec![0], vec![7], vec![2, 4, 6, 8, 10, 12], vec![1, 3, 5, 9, 11, 13]]);
        assert_eq!(t.mu, vec![0, 1, 2, 3]);
        assert_eq!(t.partition, Partition { s: 1, t: 2, s1: 1, s2: 0, t1: 2, t2: 0 });
    }

    #[test]
    fn cosets_7_2_2() {
        let t = CosetTable::new(Params::validate(7, 2, 2).unwrap()).unwrap();
        assert_eq!(t.cosets, vec![vec![0], vec![1, 2, 4], vec![3, 5, 6]]);
        assert_eq!(t.mu, vec![0, 2, 1]);
        assert_eq!(t.partition, Partition { s: 0, t: 2, s1: 0, s2: 0, t1: 0, t2: 1 });
    }

    #[test]
    fn factors_and_idempotents_14_3_9() {
        let sys = System::new(14, 3, 9).unwrap();
        let f: Vec<Vec<u32>> = sys.components.iter().map(|c| c.f.residues()).collect();
        assert_eq!(f[0], vec![2, 1]);
        assert_eq!(f[1], vec![1, 1]);
        assert_eq!(f[2], vec![1; 7]);
        assert_eq!(f[3], vec![1, 2, 1, 2, 1, 2, 1]);
        assert_eq!(sys.components[0].eps, vec![2; 14]);
        let alt: Vec<u32> = (0..14).map(|l| if l % 2 == 0 { 2 } else { 1 }).collect();
        assert_eq!(sys.components[1].eps, alt);
        assert_eq!(sys.components[2].eps, vec![0, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1]);
        assert_eq!(sys.components[3].eps, vec![0, 2, 1, 2, 1, 2, 1, 0, 1, 2, 1, 2, 1, 2]);
    }

    #[test]
    fn theta_kinds_and_norm_groups() {
        let sys = System::new(14, 3, 9).unwrap();
        assert_eq!(sys.components[0].theta, ThetaKind::Identity);
        assert_eq!(sys.components[2].theta, ThetaKind::FrobThird);
        assert_eq!(sys.components[2].norm_group.len(), 91);
        let k2 = &sys.components[2];
        assert_eq!(k2.rho.as_ref().unwrap(), &k2.field.element(&[1, 1]));
        let k3 = &sys.components[3];
        assert_eq!(k3.rho.as_ref().unwrap(), &k3.field.element(&[1, 2]));
        let a = k2.field.element(&[1, 1]);
        assert_eq!(k2.theta(&a), k2.field.pow(&a, 9));

        let small = System::new(7, 2, 2).unwrap();
        assert_eq!(small.components[1].theta, ThetaKind::FrobThird);
        assert_eq!(small.components[1].norm_group.len(), 7);
    }

    #[test]
    fn norm_group_equals_brute_force_solutions() {
        for (m, q, r) in [(14, 3, 9), (7, 2, 2)] {
            let sys = System::new(m, q, r).unwrap();
            for c in sys.components.iter().filter(|c| c.cond == Condition::II) {
                let one = c.field.one();
                let mut brute: Vec<FElem> = c.field.elements().filter(|a| !a.is_zero() && c.norm(a) == one).collect();
                let mut listed = c.norm_group.clone();
                brute.sort();
                listed.sort();
                assert_eq!(brute, listed);
                // ζ_i^(q^(d/3) - 1) generates the same subgroup
                let alt = c.field.pow(&c.zeta, c.q_third() - 1);
                assert_eq!(c.field.mult_order(&alt).unwrap(), c.norm_group.len() as u64);
            }
        }
    }

    #[test]
    fn eps_vanishes_off_its_coset() {
        let sys = System::new(14, 3, 9).unwrap();
        let ring = PolyRing::new(&sys.base);
        let e2 = ring.from_residues(&sys.components[2].eps.iter().map(|&c| c as u64).collect::<Vec<_>>());
        let z = &sys.zeta;
        let at = |k: u64| ring.eval(&e2, &sys.splitting, &sys.splitting.pow(z, k)).unwrap();
        assert_eq!(at(2), sys.splitting.one());
        assert!(at(1).is_zero());
    }
}
