//! Arithmetic in `R_i = K_i[y; θ_i]/<y^3 - 1>` and the catalogue of its left ideals.
//!
//! Coefficients sit on the left and `y a = θ_i(a) y`. On Condition I
//! components `θ_i` is the identity and the left ideals are the cyclic codes
//! `R_i g(y)` for the monic divisors `g | y^3 - 1`. On Condition II components
//! the nontrivial left ideals are
//!
//! * `Dim2(α) = R_i(-α + y)`, a `[3, 2, 2]` code,
//! * `Dim1(α) = R_i(α^{-1} + θ²(α) y + y²)`, a `[3, 1, 3]` code,
//!
//! for `α` in the norm group `{α : α θ(α) θ²(α) = 1}`.
//!
//! Ideals are ordered Zero, Full, then the proper ones. Condition II lists
//! `Dim2` by exponent `k` (with `α = ρ^k`) before `Dim1` by exponent.

use thiserror::Error;

use crate::field::{FElem, FieldCtx};
use crate::linalg;
use crate::structure::{ComponentCtx, Condition, System, ThetaKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkewError {
    #[error("elements belong to different components")]
    ComponentMismatch,
    #[error("division by the zero skew polynomial")]
    DivisionByZero,
    #[error("the zero ideal has no generator matrix or minimum weight")]
    ZeroIdeal,
    #[error("expected {expected} roots in the norm group, found {found}")]
    RootCountMismatch { expected: u64, found: u64 },
    #[error("element is not in the norm group of component {0}")]
    NotInNormGroup(usize),
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
}

/// `a0 + a1 y + a2 y^2` in `R_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewElem {
    pub component: usize,
    pub coeffs: [FElem; 3],
}

/// Multiplication and division in `R_i` (and in the unreduced `K_i[y; θ_i]`).
#[derive(Debug, Clone, Copy)]
pub struct SkewRing<'a> {
    comp: &'a ComponentCtx,
}

impl<'a> SkewRing<'a> {
    pub fn new(comp: &'a ComponentCtx) -> Self {
        SkewRing { comp }
    }

    pub fn component(&self) -> &'a ComponentCtx {
        self.comp
    }

    fn k(&self) -> &'a FieldCtx {
        &self.comp.field
    }

    pub fn elem(&self, a0: FElem, a1: FElem, a2: FElem) -> SkewElem {
        SkewElem { component: self.comp.index, coeffs: [a0, a1, a2] }
    }

    /// Embed a skew polynomial of degree at most 2.
    pub fn from_poly(&self, p: &[FElem]) -> SkewElem {
        let z = self.k().zero();
        let get = |j: usize| p.get(j).cloned().unwrap_or_else(|| z.clone());
        self.elem(get(0), get(1), get(2))
    }

    pub fn zero(&self) -> SkewElem {
        let z = self.k().zero();
        self.elem(z.clone(), z.clone(), z)
    }

    pub fn one(&self) -> SkewElem {
        let z = self.k().zero();
        self.elem(self.k().one(), z.clone(), z)
    }

    pub fn y(&self) -> SkewElem {
        let z = self.k().zero();
        self.elem(z.clone(), self.k().one(), z)
    }

    pub fn scalar(&self, a: FElem) -> SkewElem {
        let z = self.k().zero();
        self.elem(a, z.clone(), z)
    }

    pub fn is_zero(&self, u: &SkewElem) -> bool {
        u.coeffs.iter().all(FElem::is_zero)
    }

    /// Product in `R_i`, reducing `y^3` to 1.
    pub fn mul(&self, u: &SkewElem, v: &SkewElem) -> Result<SkewElem, SkewError> {
        if u.component != self.comp.index || v.component != self.comp.index {
            return Err(SkewError::ComponentMismatch);
        }
        let p = self.mul_poly(&u.coeffs, &v.coeffs);
        let k = self.k();
        let mut out = [k.zero(), k.zero(), k.zero()];
        for (e, c) in p.iter().enumerate() {
            out[e % 3] = k.add(&out[e % 3], c);
        }
        let [a0, a1, a2] = out;
        Ok(self.elem(a0, a1, a2))
    }

    pub fn add(&self, u: &SkewElem, v: &SkewElem) -> SkewElem {
        let k = self.k();
        self.elem(
            k.add(&u.coeffs[0], &v.coeffs[0]),
            k.add(&u.coeffs[1], &v.coeffs[1]),
            k.add(&u.coeffs[2], &v.coeffs[2]),
        )
    }

    /// `y u`, i.e. `(c0, c1, c2) -> (θ c2, θ c0, θ c1)`.
    pub fn left_y(&self, u: &SkewElem) -> SkewElem {
        let t = |a: &FElem| self.comp.theta(a);
        self.elem(t(&u.coeffs[2]), t(&u.coeffs[0]), t(&u.coeffs[1]))
    }

    /// Product of skew polynomials in `K_i[y; θ_i]` without reduction.
    pub fn mul_poly(&self, a: &[FElem], b: &[FElem]) -> Vec<FElem> {
        let k = self.k();
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![k.zero(); a.len() + b.len() - 1];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                let term = k.mul(ai, &self.comp.theta_pow(bj, i));
                out[i + j] = k.add(&out[i + j], &term);
            }
        }
        trim(out)
    }

    /// Right division in `K_i[y; θ_i]`: `a = quo * b + rem`, `deg rem < deg b`.
    pub fn right_divmod(&self, a: &[FElem], b: &[FElem]) -> Result<(Vec<FElem>, Vec<FElem>), SkewError> {
        let k = self.k();
        let b = trim(b.to_vec());
        let db = b.len().checked_sub(1).ok_or(SkewError::DivisionByZero)?;
        let mut r = trim(a.to_vec());
        if r.len() <= db {
            return Ok((Vec::new(), r));
        }
        let mut quo = vec![k.zero(); r.len() - db];
        for e in (0..quo.len()).rev() {
            let lead = &r[e + db];
            if lead.is_zero() {
                continue;
            }
            // c y^e b has leading coefficient c θ^e(b_db)
            let c = k.div(lead, &self.comp.theta_pow(&b[db], e)).expect("leading coefficient is nonzero");
            for (t, bt) in b.iter().enumerate() {
                let term = k.mul(&c, &self.comp.theta_pow(bt, e));
                r[e + t] = k.sub(&r[e + t], &term);
            }
            quo[e] = c;
        }
        r.truncate(db);
        Ok((trim(quo), trim(r)))
    }
}

fn trim(mut v: Vec<FElem>) -> Vec<FElem> {
    while v.last().is_some_and(FElem::is_zero) {
        v.pop();
    }
    v
}

/// A proper monic divisor of `y^3 - 1` on a Condition I component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CommKind {
    /// `y - 1`
    YMinus1,
    /// `(y - 1)^2`, characteristic 3
    YMinus1Sq,
    /// `y^2 + y + 1`
    Quadratic,
    /// `y - ω`
    YMinusOmega,
    /// `y - ω^2`
    YMinusOmegaSq,
    /// `(y - 1)(y - ω^2)`
    Y1YOmegaSq,
    /// `(y - 1)(y - ω)`
    Y1YOmega,
}

impl CommKind {
    pub fn label(&self) -> &'static str {
        match self {
            CommKind::YMinus1 => "y-1",
            CommKind::YMinus1Sq => "(y-1)^2",
            CommKind::Quadratic => "y^2+y+1",
            CommKind::YMinusOmega => "y-w",
            CommKind::YMinusOmegaSq => "y-w^2",
            CommKind::Y1YOmegaSq => "(y-1)(y-w^2)",
            CommKind::Y1YOmega => "(y-1)(y-w)",
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            CommKind::YMinus1 | CommKind::YMinusOmega | CommKind::YMinusOmegaSq => 1,
            _ => 2,
        }
    }
}

/// How `y^3 - 1` splits over a Condition I component field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommCase {
    /// `q ≡ 0 (mod 3)`: `(y - 1)^3`
    Cube,
    /// `q^d ≡ 2 (mod 3)`: `(y - 1)(y^2 + y + 1)`
    LinearQuadratic,
    /// `q^d ≡ 1 (mod 3)`: `(y - 1)(y - ω)(y - ω^2)`
    ThreeRoots,
}

impl CommCase {
    pub fn of(comp: &ComponentCtx) -> CommCase {
        if comp.field.q().is_multiple_of(3) {
            CommCase::Cube
        } else if comp.qd_mod3() == 2 {
            CommCase::LinearQuadratic
        } else {
            CommCase::ThreeRoots
        }
    }

    /// Proper divisors in catalogue order.
    pub fn kinds(&self) -> &'static [CommKind] {
        match self {
            CommCase::Cube => &[CommKind::YMinus1, CommKind::YMinus1Sq],
            CommCase::LinearQuadratic => &[CommKind::YMinus1, CommKind::Quadratic],
            CommCase::ThreeRoots => &[
                CommKind::YMinus1,
                CommKind::YMinusOmega,
                CommKind::YMinusOmegaSq,
                CommKind::Quadratic,
                CommKind::Y1YOmegaSq,
                CommKind::Y1YOmega,
            ],
        }
    }
}

/// Coefficients of a proper divisor, ascending in `y`.
pub fn comm_generator(comp: &ComponentCtx, kind: CommKind) -> Vec<FElem> {
    let k = &comp.field;
    let one = k.one();
    let m1 = k.neg(&one);
    let omega = || comp.omega.clone().expect("ω exists when y^3 - 1 splits");
    let linear = |root: FElem| vec![k.neg(&root), one.clone()];
    let times_y_minus_1 = |root: FElem| {
        // (y - 1)(y - w) = w - (1 + w) y + y^2
        vec![root.clone(), k.neg(&k.add(&one, &root)), one.clone()]
    };
    match kind {
        CommKind::YMinus1 => vec![m1, one.clone()],
        CommKind::YMinus1Sq => vec![one.clone(), k.add(&m1, &m1), one.clone()],
        CommKind::Quadratic => vec![one.clone(), one.clone(), one.clone()],
        CommKind::YMinusOmega => linear(omega()),
        CommKind::YMinusOmegaSq => linear(k.mul(&omega(), &omega())),
        CommKind::Y1YOmegaSq => times_y_minus_1(k.mul(&omega(), &omega())),
        CommKind::Y1YOmega => times_y_minus_1(omega()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum IdealTag {
    Zero,
    Full,
    /// `R_i g(y)`; `j` is the position of `kind` in the component's catalogue.
    Comm {
        kind: CommKind,
        j: usize,
        g: Vec<FElem>,
    },
    /// `R_i(-α + y)` with `α = ρ^k`.
    Dim2 {
        k: u64,
        alpha: FElem,
    },
    /// `R_i(α^{-1} + θ²(α) y + y²)` with `α = ρ^k`.
    Dim1 {
        k: u64,
        alpha: FElem,
    },
}

/// One left ideal of one component.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdealDescriptor {
    pub component: usize,
    pub tag: IdealTag,
}

impl IdealDescriptor {
    /// Dimension over `K_i`.
    pub fn dim(&self) -> usize {
        match &self.tag {
            IdealTag::Zero => 0,
            IdealTag::Full => 3,
            IdealTag::Comm { kind, .. } => 3 - kind.degree(),
            IdealTag::Dim2 { .. } => 2,
            IdealTag::Dim1 { .. } => 1,
        }
    }

    pub fn tag_name(&self) -> &'static str {
        match self.tag {
            IdealTag::Zero => "zero",
            IdealTag::Full => "full",
            IdealTag::Comm { .. } => "comm",
            IdealTag::Dim2 { .. } => "dim2",
            IdealTag::Dim1 { .. } => "dim1",
        }
    }

    /// Compact term `i:tag[@n]`, accepted back by [`parse_term`].
    pub fn term(&self) -> String {
        let i = self.component;
        match &self.tag {
            IdealTag::Zero => format!("{i}:zero"),
            IdealTag::Full => format!("{i}:full"),
            IdealTag::Comm { j, .. } => format!("{i}:comm@{j}"),
            IdealTag::Dim2 { k, .. } => format!("{i}:dim2@{k}"),
            IdealTag::Dim1 { k, .. } => format!("{i}:dim1@{k}"),
        }
    }
}

/// Build a descriptor from a tag name and optional index, validating it against the component.
pub fn parse_term(comp: &ComponentCtx, tag: &str, n: Option<u64>) -> Result<IdealDescriptor, SkewError> {
    let bad = |msg: String| SkewError::InvalidDescriptor(msg);
    let i = comp.index;
    let need = |n: Option<u64>| n.ok_or_else(|| bad(format!("component {i}: tag {tag} needs @index")));
    let t = match tag {
        "zero" | "full" if n.is_some() => return Err(bad(format!("component {i}: tag {tag} takes no index"))),
        "zero" => IdealTag::Zero,
        "full" => IdealTag::Full,
        "comm" => {
            if comp.cond != Condition::I {
                return Err(bad(format!("component {i} is not commutative")));
            }
            let j = need(n)? as usize;
            let kinds = CommCase::of(comp).kinds();
            let kind =
                *kinds.get(j).ok_or_else(|| bad(format!("component {i} has {} proper divisors", kinds.len())))?;
            IdealTag::Comm { kind, j, g: comm_generator(comp, kind) }
        }
        "dim1" | "dim2" => {
            if comp.cond != Condition::II {
                return Err(bad(format!("component {i} is commutative")));
            }
            let k = need(n)?;
            let size = comp.norm_group.len() as u64;
            if k >= size {
                return Err(bad(format!("component {i}: exponent {k} must be below {size}")));
            }
            let alpha = comp.norm_element(k);
            if tag == "dim1" {
                IdealTag::Dim1 { k, alpha }
            } else {
                IdealTag::Dim2 { k, alpha }
            }
        }
        other => return Err(bad(format!("unknown tag {other:?}"))),
    };
    Ok(IdealDescriptor { component: i, tag: t })
}

/// Descriptor for `Dim1(α)` or `Dim2(α)` from an element of the norm group.
pub fn skew_descriptor(comp: &ComponentCtx, alpha: &FElem, dim: usize) -> Result<IdealDescriptor, SkewError> {
    let k = comp.norm_exponent(alpha).ok_or(SkewError::NotInNormGroup(comp.index))?;
    let alpha = alpha.clone();
    let tag = match dim {
        1 => IdealTag::Dim1 { k, alpha },
        2 => IdealTag::Dim2 { k, alpha },
        _ => return Err(SkewError::InvalidDescriptor(format!("dimension {dim} is not 1 or 2"))),
    };
    Ok(IdealDescriptor { component: comp.index, tag })
}

/// Descriptor for a proper divisor on a Condition I component.
pub fn comm_descriptor(comp: &ComponentCtx, kind: CommKind) -> IdealDescriptor {
    let j = CommCase::of(comp)
        .kinds()
        .iter()
        .position(|&k| k == kind)
        .expect("divisor kind belongs to this component's case");
    IdealDescriptor { component: comp.index, tag: IdealTag::Comm { kind, j, g: comm_generator(comp, kind) } }
}

/// Every left ideal of `R_i`, in catalogue order.
pub fn enumerate_ideals(comp: &ComponentCtx) -> Vec<IdealDescriptor> {
    let i = comp.index;
    let mut out = vec![
        IdealDescriptor { component: i, tag: IdealTag::Zero },
        IdealDescriptor { component: i, tag: IdealTag::Full },
    ];
    match comp.cond {
        Condition::I => {
            out.extend(CommCase::of(comp).kinds().iter().map(|&kind| comm_descriptor(comp, kind)));
        }
        Condition::II => {
            for (k, alpha) in (0u64..).zip(&comp.norm_group) {
                out.push(IdealDescriptor { component: i, tag: IdealTag::Dim2 { k, alpha: alpha.clone() } });
            }
            for (k, alpha) in (0u64..).zip(&comp.norm_group) {
                out.push(IdealDescriptor { component: i, tag: IdealTag::Dim1 { k, alpha: alpha.clone() } });
            }
        }
    }
    out
}

/// Number of left ideals of `R_i` from the closed-form counts.
pub fn ideal_count(comp: &ComponentCtx) -> u64 {
    match comp.cond {
        Condition::I => 2 + CommCase::of(comp).kinds().len() as u64,
        Condition::II => {
            let qt = comp.q_third();
            4 + 2 * qt + 2 * qt * qt
        }
    }
}

/// The generating skew polynomial, ascending in `y` (`y^3 - 1` for the zero ideal).
pub fn generator_poly(comp: &ComponentCtx, desc: &IdealDescriptor) -> Vec<FElem> {
    let k = &comp.field;
    match &desc.tag {
        IdealTag::Zero => vec![k.neg(&k.one()), k.zero(), k.zero(), k.one()],
        IdealTag::Full => vec![k.one()],
        IdealTag::Comm { g, .. } => g.clone(),
        IdealTag::Dim2 { alpha, .. } => vec![k.neg(alpha), k.one()],
        IdealTag::Dim1 { alpha, .. } => {
            vec![k.inv(alpha).expect("norm group elements are nonzero"), comp.theta_pow(alpha, 2), k.one()]
        }
    }
}

/// Generator matrix over `K_i` with `dim` rows of length 3.
pub fn generator_matrix(comp: &ComponentCtx, desc: &IdealDescriptor) -> Result<Vec<Vec<FElem>>, SkewError> {
    if desc.component != comp.index {
        return Err(SkewError::ComponentMismatch);
    }
    let k = &comp.field;
    let (one, zero) = (k.one(), k.zero());
    let rows = match &desc.tag {
        IdealTag::Zero => return Err(SkewError::ZeroIdeal),
        IdealTag::Full => vec![
            vec![one.clone(), zero.clone(), zero.clone()],
            vec![zero.clone(), one.clone(), zero.clone()],
            vec![zero.clone(), zero.clone(), one.clone()],
        ],
        IdealTag::Comm { kind, g, .. } => {
            let ring = SkewRing::new(comp);
            let mut row = ring.from_poly(g);
            let mut rows = Vec::new();
            for _ in 0..3 - kind.degree() {
                rows.push(row.coeffs.to_vec());
                row = ring.left_y(&row);
            }
            rows
        }
        IdealTag::Dim2 { alpha, .. } => vec![
            vec![k.neg(alpha), one.clone(), zero.clone()],
            vec![zero.clone(), k.neg(&comp.theta(alpha)), one.clone()],
        ],
        IdealTag::Dim1 { .. } => vec![generator_poly(comp, desc)],
    };
    Ok(rows)
}

/// Every element of the ideal as a spanning set (empty for the zero ideal).
fn span_rows(comp: &ComponentCtx, desc: &IdealDescriptor) -> Vec<Vec<FElem>> {
    generator_matrix(comp, desc).unwrap_or_default()
}

/// Minimum Hamming weight over `K_i` of a nonzero ideal.
///
/// A support set `S` carries a nonzero codeword exactly when the generator
/// matrix restricted to the complementary columns loses rank.
pub fn min_weight(comp: &ComponentCtx, desc: &IdealDescriptor) -> Result<usize, SkewError> {
    let rows = generator_matrix(comp, desc)?;
    let k = &comp.field;
    let dim = linalg::rank(k, &rows);
    for w in 1..=3usize {
        for mask in 0u8..8 {
            if mask.count_ones() as usize != w {
                continue;
            }
            let outside: Vec<Vec<FElem>> =
                rows.iter().map(|r| (0..3).filter(|c| mask & (1 << c) == 0).map(|c| r[c].clone()).collect()).collect();
            let r = if outside[0].is_empty() { 0 } else { linalg::rank(k, &outside) };
            if r < dim {
                return Ok(w);
            }
        }
    }
    unreachable!("a nonzero code of length 3 has a codeword of weight at most 3")
}

/// Whether `inner ⊆ outer` as subspaces of `K_i^3`.
pub fn ideal_contains(comp: &ComponentCtx, outer: &IdealDescriptor, inner: &IdealDescriptor) -> bool {
    let inner_rows = span_rows(comp, inner);
    if inner_rows.is_empty() {
        return true;
    }
    let outer_rows = span_rows(comp, outer);
    if outer_rows.is_empty() {
        return false;
    }
    linalg::contains_rows(&comp.field, &outer_rows, &inner_rows)
}

/// `α θ(α) β + α β θ²(β) + 1 = 0`.
pub fn containment_equation(comp: &ComponentCtx, alpha: &FElem, beta: &FElem) -> bool {
    let k = &comp.field;
    let t1 = k.mul(&k.mul(alpha, &comp.theta(alpha)), beta);
    let t2 = k.mul(&k.mul(alpha, beta), &comp.theta_pow(beta, 2));
    k.add(&k.add(&t1, &t2), &k.one()).is_zero()
}

/// Whether `Dim1(β) ⊆ Dim2(α)`, by the closed-form equation; the right
/// division remainder is compared in debug builds.
pub fn contains(comp: &ComponentCtx, outer: &IdealDescriptor, inner: &IdealDescriptor) -> Result<bool, SkewError> {
    if outer.component != comp.index || inner.component != comp.index {
        return Err(SkewError::ComponentMismatch);
    }
    let (IdealTag::Dim2 { alpha, .. }, IdealTag::Dim1 { alpha: beta, .. }) = (&outer.tag, &inner.tag) else {
        return Err(SkewError::InvalidDescriptor("containment needs Dim2 outer and Dim1 inner".into()));
    };
    let closed = containment_equation(comp, alpha, beta);
    debug_assert_eq!(closed, division_remainder_vanishes(comp, alpha, beta));
    Ok(closed)
}

/// Right-divide `β^{-1} + θ²(β) y + y²` by `-α + y` and test the remainder.
pub fn division_remainder_vanishes(comp: &ComponentCtx, alpha: &FElem, beta: &FElem) -> bool {
    let ring = SkewRing::new(comp);
    let k = &comp.field;
    let a = vec![k.inv(beta).expect("nonzero"), comp.theta_pow(beta, 2), k.one()];
    let b = vec![k.neg(alpha), k.one()];
    let (_, rem) = ring.right_divmod(&a, &b).expect("divisor is nonzero");
    rem.is_empty()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootPoly {
    /// `X^(Q+1) + γ^(Q²) X + γ^{-1}`
    Phi,
    /// `γ^Q X^(Q+1) + γ^{-1} X^Q + 1`
    Psi,
}

/// Roots of `φ_γ` or `ψ_γ` (with `Q = q^(d/3)`), all of which lie in the norm group.
pub fn phi_psi_roots(comp: &ComponentCtx, gamma: &FElem, which: RootPoly) -> Result<Vec<FElem>, SkewError> {
    if comp.cond != Condition::II {
        return Err(SkewError::InvalidDescriptor(format!("component {} is commutative", comp.index)));
    }
    if comp.norm_exponent(gamma).is_none() {
        return Err(SkewError::NotInNormGroup(comp.index));
    }
    let k = &comp.field;
    let qt = comp.q_third();
    let g_inv = k.inv(gamma).expect("nonzero");
    let eval = |x: &FElem| -> FElem {
        let xq = k.pow(x, qt);
        let xq1 = k.mul(&xq, x);
        match which {
            RootPoly::Phi => k.add(&k.add(&xq1, &k.mul(&k.pow(gamma, qt * qt), x)), &g_inv),
            RootPoly::Psi => k.add(&k.add(&k.mul(&k.pow(gamma, qt), &xq1), &k.mul(&g_inv, &xq)), &k.one()),
        }
    };
    let roots: Vec<FElem> = comp.norm_group.iter().filter(|x| eval(x).is_zero()).cloned().collect();
    if roots.len() as u64 != qt + 1 {
        return Err(SkewError::RootCountMismatch { expected: qt + 1, found: roots.len() as u64 });
    }
    Ok(roots)
}

/// All `α` with `Dim1(β) ⊆ Dim2(α)`.
pub fn dim2_containing(comp: &ComponentCtx, beta: &FElem) -> Result<Vec<FElem>, SkewError> {
    let which = match comp.theta {
        ThetaKind::FrobThird => RootPoly::Phi,
        _ => RootPoly::Psi,
    };
    phi_psi_roots(comp, beta, which)
}

/// All `β` with `Dim1(β) ⊆ Dim2(α)`.
pub fn dim1_contained(comp: &ComponentCtx, alpha: &FElem) -> Result<Vec<FElem>, SkewError> {
    let which = match comp.theta {
        ThetaKind::FrobThird => RootPoly::Psi,
        _ => RootPoly::Phi,
    };
    phi_psi_roots(comp, alpha, which)
}

/// `α̂ = (α(x^{m-1}))^(Q² + Q)` in `K_{μ(i)}`.
pub fn hat(sys: &System, i: usize, alpha: &FElem) -> Result<FElem, SkewError> {
    let comp = sys.component(i);
    if comp.norm_exponent(alpha).is_none() {
        return Err(SkewError::NotInNormGroup(i));
    }
    let target = sys.component(sys.mu(i));
    let qt = comp.q_third();
    let sub = sys.conjugate_into_mu(i, alpha);
    Ok(target.field.pow(&sub, qt * qt + qt))
}

/// `α̂` computed as `(α(x^{-1}))^{-1}`.
pub fn hat_by_inversion(sys: &System, i: usize, alpha: &FElem) -> Result<FElem, SkewError> {
    if sys.component(i).norm_exponent(alpha).is_none() {
        return Err(SkewError::NotInNormGroup(i));
    }
    let target = sys.component(sys.mu(i));
    let sub = sys.conjugate_into_mu(i, alpha);
    Ok(target.field.inv(&sub).expect("nonzero"))
}

/// The component of the Euclidean dual: the ideal `D_{μ(i)}` paired with `C_i`.
pub fn component_dual(sys: &System, desc: &IdealDescriptor) -> IdealDescriptor {
    let i = desc.component;
    let j = sys.mu(i);
    let comp = sys.component(i);
    let target = sys.component(j);
    let at_j = |tag| IdealDescriptor { component: j, tag };
    match &desc.tag {
        IdealTag::Zero => at_j(IdealTag::Full),
        IdealTag::Full => at_j(IdealTag::Zero),
        IdealTag::Dim1 { alpha, .. } => {
            let h = hat(sys, i, alpha).expect("descriptor α lies in the norm group");
            skew_descriptor(target, &target.theta(&h), 2).expect("image lies in the norm group")
        }
        IdealTag::Dim2 { alpha, .. } => {
            let h = hat(sys, i, alpha).expect("descriptor α lies in the norm group");
            skew_descriptor(target, &target.theta_pow(&h, 2), 1).expect("image lies in the norm group")
        }
        IdealTag::Comm { kind, .. } => {
            let image = match CommCase::of(comp) {
                CommCase::Cube => match kind {
                    CommKind::YMinus1 => CommKind::YMinus1Sq,
                    _ => CommKind::YMinus1,
                },
                CommCase::LinearQuadratic => match kind {
                    CommKind::YMinus1 => CommKind::Quadratic,
                    _ => CommKind::YMinus1,
                },
                CommCase::ThreeRoots => {
                    // ω_i(x^{-1}) is ω_j or ω_j^2
                    let w = sys.conjugate_into_mu(i, comp.omega.as_ref().expect("ω exists"));
                    let same = &w == target.omega.as_ref().expect("ω exists");
                    match (kind, same) {
                        (CommKind::YMinus1, _) => CommKind::Quadratic,
                        (CommKind::Quadratic, _) => CommKind::YMinus1,
                        (CommKind::YMinusOmega, true) | (CommKind::YMinusOmegaSq, false) => CommKind::Y1YOmega,
                        (CommKind::YMinusOmega, false) | (CommKind::YMinusOmegaSq, true) => CommKind::Y1YOmegaSq,
                        (CommKind::Y1YOmega, true) | (CommKind::Y1YOmegaSq, false) => CommKind::YMinusOmega,
                        (CommKind::Y1YOmega, false) | (CommKind::Y1YOmegaSq, true) => CommKind::YMinusOmegaSq,
                        _ => unreachable!("cube and quadratic-case kinds do not occur here"),
                    }
                }
            };
            comm_descriptor(target, image)
        }
    }
}
