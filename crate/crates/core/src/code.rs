//! Full-length codes: assembly from per-component ideals, counting, Euclidean
//! duals, self-orthogonal enumeration and weight enumerators.
//!
//! A code is fixed by one [`IdealDescriptor`] per component. Its F_q generator
//! matrix has one row `Ψ(ε_i(x) x^k (g0 + g1 y + g2 y^2))` for every component
//! `i`, every `K_i`-row `(g0, g1, g2)` of the component ideal, and every
//! `k < d_i`. The coordinate map `Ψ` places the coefficient of `x^i y^j` at
//! index `i + m j`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::field::Residue;
use crate::linalg::{self, PrimeField};
use crate::skew::{self, CommCase, IdealDescriptor, IdealTag};
use crate::structure::{Condition, System};

/// Default bound on the number of codewords a weight enumeration may visit.
pub const DEFAULT_WEIGHT_CAP: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("expected length {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("generator matrix has rank {found}, expected {expected}")]
    RankDeficiency { expected: usize, found: usize },
    #[error("code has q^{dimension} codewords, above the cap of {cap}")]
    TooLarge { dimension: usize, cap: u64 },
    #[error("invalid choices: {0}")]
    InvalidChoices(String),
    #[error("self-orthogonal slot {slot} has {found} options, closed form gives {expected}")]
    TableMismatch { slot: String, expected: u64, found: u64 },
}

/// An element `Σ a_{i,j} x^i y^j` of `F_q[G_(m,3,r)]`; `blocks[j][i] = a_{i,j}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupAlgebraElem {
    pub m: usize,
    pub r: usize,
    pub q: u32,
    pub blocks: [Vec<Residue>; 3],
}

impl GroupAlgebraElem {
    pub fn zero(m: usize, r: usize, q: u32) -> Self {
        GroupAlgebraElem { m, r, q, blocks: [vec![0; m], vec![0; m], vec![0; m]] }
    }

    /// `x^i y^j`.
    pub fn monomial(m: usize, r: usize, q: u32, i: usize, j: usize) -> Self {
        let mut e = Self::zero(m, r, q);
        e.blocks[j % 3][i % m] = 1;
        e
    }

    fn r_pow(&self, j: usize) -> usize {
        (0..j).fold(1 % self.m, |acc, _| acc * self.r % self.m)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        let q = self.q as u64;
        for (bo, bt) in out.blocks.iter_mut().zip(&other.blocks) {
            for (a, &b) in bo.iter_mut().zip(bt) {
                *a = ((*a as u64 + b as u64) % q) as Residue;
            }
        }
        out
    }

    /// Product using `y^j x^k = x^(k r^j) y^j`.
    pub fn mul(&self, other: &Self) -> Self {
        let (m, q) = (self.m, self.q as u64);
        let mut acc = vec![vec![0u64; m]; 3];
        for j in 0..3 {
            let rj = self.r_pow(j);
            for (i, &a) in self.blocks[j].iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for l in 0..3 {
                    for (k, &b) in other.blocks[l].iter().enumerate() {
                        if b == 0 {
                            continue;
                        }
                        let e = (i + k * rj) % m;
                        let slot = &mut acc[(j + l) % 3][e];
                        *slot = (*slot + a as u64 * b as u64) % q;
                    }
                }
            }
        }
        let mut out = Self::zero(m, self.r, self.q);
        for (bo, row) in out.blocks.iter_mut().zip(acc) {
            *bo = row.into_iter().map(|c| c as Residue).collect();
        }
        out
    }

    pub fn left_mul_x(&self) -> Self {
        let mut out = Self::zero(self.m, self.r, self.q);
        for (bo, bi) in out.blocks.iter_mut().zip(&self.blocks) {
            for (i, &a) in bi.iter().enumerate() {
                bo[(i + 1) % self.m] = a;
            }
        }
        out
    }

    /// `y ξ`: `y a(x) y^j = a(x^r) y^(j+1)`.
    pub fn left_mul_y(&self) -> Self {
        let mut out = Self::zero(self.m, self.r, self.q);
        for j in 0..3 {
            for (i, &a) in self.blocks[j].iter().enumerate() {
                out.blocks[(j + 1) % 3][i * self.r % self.m] = a;
            }
        }
        out
    }

    /// The anti-automorphism `x^i y^j -> y^{-j} x^{-i}`.
    pub fn conjugate(&self) -> Self {
        let m = self.m;
        let mut out = Self::zero(m, self.r, self.q);
        for j in 0..3 {
            let e = (3 - j) % 3;
            let re = self.r_pow(e);
            for (i, &a) in self.blocks[j].iter().enumerate() {
                out.blocks[e][(m - i) % m * re % m] = a;
            }
        }
        out
    }

    /// `Ψ`: concatenate the `y`-blocks.
    pub fn psi_embed(&self) -> Vec<Residue> {
        self.blocks.concat()
    }

    /// Inverse of [`Self::psi_embed`].
    pub fn psi_extract(v: &[Residue], m: usize, r: usize, q: u32) -> Result<Self, CodeError> {
        if v.len() != 3 * m {
            return Err(CodeError::LengthMismatch { expected: 3 * m, found: v.len() });
        }
        Ok(GroupAlgebraElem { m, r, q, blocks: [v[..m].to_vec(), v[m..2 * m].to_vec(), v[2 * m..].to_vec()] })
    }
}

/// Standard dot product `[u, v] = Σ u_k v_k` over F_q.
pub fn inner_product(q: u32, u: &[Residue], v: &[Residue]) -> Result<Residue, CodeError> {
    if u.len() != v.len() {
        return Err(CodeError::LengthMismatch { expected: u.len(), found: v.len() });
    }
    Ok(PrimeField::new(q).dot(u, v))
}

/// Hamming weight distribution.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightEnum {
    pub counts: BTreeMap<usize, u64>,
}

impl WeightEnum {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Smallest nonzero weight, if any nonzero codeword exists.
    pub fn min_distance(&self) -> Option<usize> {
        self.counts.keys().copied().find(|&w| w > 0)
    }
}

impl fmt::Display for WeightEnum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .counts
            .iter()
            .map(|(&w, &c)| match (w, c) {
                (0, c) => c.to_string(),
                (w, 1) => format!("Y^{w}"),
                (w, c) => format!("{c}Y^{w}"),
            })
            .collect();
        write!(f, "{}", terms.join("+"))
    }
}

/// One assembled code with its F_q generator matrix in `Ψ` layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetacyclicCode {
    pub choices: Vec<IdealDescriptor>,
    pub q: u32,
    pub length: usize,
    pub dimension: usize,
    pub generator: Vec<Vec<Residue>>,
}

impl MetacyclicCode {
    /// `G Gᵀ = 0`.
    pub fn is_self_orthogonal(&self) -> bool {
        let f = PrimeField::new(self.q);
        self.generator.iter().enumerate().all(|(a, u)| self.generator[a..].iter().all(|v| f.dot(u, v) == 0))
    }

    /// Exhaustive weight distribution over all `q^dimension` codewords.
    pub fn weight_enumerator(&self, cap: u64) -> Result<WeightEnum, CodeError> {
        let too_large = CodeError::TooLarge { dimension: self.dimension, cap };
        let total = (self.q as u64).checked_pow(self.dimension as u32).filter(|&t| t <= cap).ok_or(too_large)?;
        let q = self.q;
        let n = self.length;
        let mut counts = BTreeMap::new();
        let mut digits = vec![0u32; self.dimension];
        let mut word = vec![0u32; n];
        counts.insert(0usize, 1u64);
        for _ in 1..total {
            // base-q increment: every digit that wraps and the one that
            // increments each contribute one more copy of their row
            let mut t = 0;
            loop {
                digits[t] += 1;
                for (w, &g) in word.iter_mut().zip(&self.generator[t]) {
                    *w = (*w + g) % q;
                }
                if digits[t] < q {
                    break;
                }
                digits[t] = 0;
                t += 1;
            }
            let wt = word.iter().filter(|&&c| c != 0).count();
            *counts.entry(wt).or_insert(0) += 1;
        }
        Ok(WeightEnum { counts })
    }

    /// Compact descriptor tuple, e.g. `0:zero,1:zero,2:dim1@7,3:zero`.
    pub fn tuple_string(&self) -> String {
        self.choices.iter().map(IdealDescriptor::term).collect::<Vec<_>>().join(",")
    }
}

/// How the self-orthogonal choices split across components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Slot {
    /// A component with `μ(i) = i` and its admissible catalogue indices.
    Single { i: usize, options: Vec<usize> },
    /// Components `i < μ(i) = j` and their admissible index pairs.
    Pair { i: usize, j: usize, options: Vec<(usize, usize)> },
}

impl Slot {
    pub fn len(&self) -> usize {
        match self {
            Slot::Single { options, .. } => options.len(),
            Slot::Pair { options, .. } => options.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The catalogue of all codes for one system.
#[derive(Debug, Clone)]
pub struct CodeSpace<'a> {
    system: &'a System,
    catalogs: Vec<Vec<IdealDescriptor>>,
}

impl<'a> CodeSpace<'a> {
    pub fn new(system: &'a System) -> Self {
        let catalogs = system.components.iter().map(skew::enumerate_ideals).collect();
        CodeSpace { system, catalogs }
    }

    pub fn system(&self) -> &'a System {
        self.system
    }

    /// Per-component ideal lists, in catalogue order.
    pub fn catalogs(&self) -> &[Vec<IdealDescriptor>] {
        &self.catalogs
    }

    pub fn length(&self) -> usize {
        3 * self.system.params.m
    }

    /// Closed-form number of codes: `2^δ 4^(s+1) Π_II (4 + 2Q + 2Q²)`.
    pub fn count_codes(&self) -> BigUint {
        let sys = self.system;
        let s = sys.table.partition.s;
        let mut n = BigUint::from(4u32).pow(s as u32 + 1);
        let delta =
            sys.components.iter().filter(|c| c.cond == Condition::I && CommCase::of(c) == CommCase::ThreeRoots).count();
        n *= BigUint::from(2u32).pow(delta as u32);
        for c in sys.components.iter().filter(|c| c.cond == Condition::II) {
            let qt = BigUint::from(c.q_third());
            n *= BigUint::from(4u32) + BigUint::from(2u32) * &qt + BigUint::from(2u32) * &qt * &qt;
        }
        n
    }

    /// Number of tuples the enumeration stream visits.
    pub fn enumeration_size(&self) -> BigUint {
        self.catalogs.iter().map(|c| BigUint::from(c.len())).product()
    }

    /// Every choice tuple as catalogue indices, last component fastest.
    pub fn enumerate(&self) -> Odometer {
        Odometer::new(self.catalogs.iter().map(Vec::len).collect())
    }

    pub fn choices_at(&self, idx: &[usize]) -> Vec<IdealDescriptor> {
        idx.iter().zip(&self.catalogs).map(|(&k, cat)| cat[k].clone()).collect()
    }

    /// Catalogue index of a descriptor.
    pub fn index_of(&self, desc: &IdealDescriptor) -> Option<usize> {
        self.catalogs.get(desc.component)?.iter().position(|d| d == desc)
    }

    /// The minimal cyclic code `A_i` as rows `x^k ε_i(x)`, `k < d_i`.
    pub fn minimal_code_rows(&self, i: usize) -> Vec<Vec<Residue>> {
        let c = self.system.component(i);
        (0..c.d).map(|k| rotate(&c.eps, k)).collect()
    }

    /// Build the generator matrix for one descriptor per component.
    pub fn assemble(&self, choices: &[IdealDescriptor]) -> Result<MetacyclicCode, CodeError> {
        let sys = self.system;
        let m = sys.params.m;
        let q = sys.params.q;
        if choices.len() != sys.len() {
            return Err(CodeError::InvalidChoices(format!(
                "expected {} descriptors, found {}",
                sys.len(),
                choices.len()
            )));
        }
        let mut rows = Vec::new();
        let mut expected = 0;
        for (i, desc) in choices.iter().enumerate() {
            if desc.component != i {
                return Err(CodeError::InvalidChoices(format!("descriptor {} sits at position {i}", desc.term())));
            }
            let comp = sys.component(i);
            if matches!(desc.tag, IdealTag::Zero) {
                continue;
            }
            let gens = skew::generator_matrix(comp, desc).map_err(|e| CodeError::InvalidChoices(e.to_string()))?;
            expected += comp.d * desc.dim();
            for g in &gens {
                let lifted: Vec<Vec<Residue>> = g.iter().map(|e| mul_mod_xm1(&comp.eps, e.coeffs(), m, q)).collect();
                for k in 0..comp.d {
                    rows.push(lifted.iter().flat_map(|b| rotate(b, k)).collect());
                }
            }
        }
        let rank = linalg::rank(&PrimeField::new(q), &rows);
        if rank != expected {
            return Err(CodeError::RankDeficiency { expected, found: rank });
        }
        Ok(MetacyclicCode { choices: choices.to_vec(), q, length: 3 * m, dimension: expected, generator: rows })
    }

    /// The dual descriptor tuple: position `μ(i)` holds the dual of choice `i`.
    pub fn dual_choices(&self, choices: &[IdealDescriptor]) -> Vec<IdealDescriptor> {
        let mut out = choices.to_vec();
        for (i, desc) in choices.iter().enumerate() {
            out[self.system.mu(i)] = skew::component_dual(self.system, desc);
        }
        out
    }

    /// Euclidean dual, assembled; debug builds check orthogonality.
    pub fn dual(&self, code: &MetacyclicCode) -> Result<MetacyclicCode, CodeError> {
        let dual = self.assemble(&self.dual_choices(&code.choices))?;
        debug_assert_eq!(dual.dimension + code.dimension, code.length);
        debug_assert!(code
            .generator
            .iter()
            .all(|u| dual.generator.iter().all(|v| PrimeField::new(code.q).dot(u, v) == 0)));
        Ok(dual)
    }

    /// Exponents `λ` with `α = ρ^λ` solving
    /// `θ(α̂) θ²(α̂) α + θ(α̂) α θ²(α) + 1 = 0` on a self-paired Condition II component.
    pub fn solve_case_iii(&self, i: usize) -> Vec<u64> {
        let sys = self.system;
        let c = sys.component(i);
        assert!(c.cond == Condition::II && sys.mu(i) == i, "component {i} is not a self-paired skew component");
        let k = &c.field;
        (0u64..)
            .zip(&c.norm_group)
            .filter(|(_, a)| {
                let h = skew::hat(sys, i, a).expect("member of the norm group");
                let th = c.theta(&h);
                let t1 = k.mul(&k.mul(&th, &c.theta_pow(&h, 2)), a);
                let t2 = k.mul(&k.mul(&th, a), &c.theta_pow(a, 2));
                k.add(&k.add(&t1, &t2), &k.one()).is_zero()
            })
            .map(|(e, _)| e)
            .collect()
    }

    /// Admissible self-orthogonal choices per slot, by the containment
    /// criterion `C_i ⊆ D_i`, with every slot's size checked against its closed form.
    pub fn self_orthogonal_slots(&self) -> Result<Vec<Slot>, CodeError> {
        let sys = self.system;
        let duals: Vec<Vec<IdealDescriptor>> =
            self.catalogs.iter().map(|cat| cat.iter().map(|d| skew::component_dual(sys, d)).collect()).collect();
        let within = |desc: &IdealDescriptor, outer: &IdealDescriptor| {
            skew::ideal_contains(sys.component(desc.component), outer, desc)
        };
        let mut slots = Vec::new();
        for i in 0..sys.len() {
            let j = sys.mu(i);
            let comp = sys.component(i);
            if j == i {
                let options: Vec<usize> =
                    (0..self.catalogs[i].len()).filter(|&a| within(&self.catalogs[i][a], &duals[i][a])).collect();
                let expected = match comp.cond {
                    Condition::I => match CommCase::of(comp) {
                        CommCase::Cube => 2,
                        CommCase::LinearQuadratic => 1,
                        CommCase::ThreeRoots => {
                            let w = comp.omega.as_ref().expect("ω exists");
                            if &sys.conjugate_into_mu(i, w) == w {
                                3
                            } else {
                                1
                            }
                        }
                    },
                    Condition::II => {
                        let sols = self.solve_case_iii(i);
                        let found: Vec<u64> = options
                            .iter()
                            .filter_map(|&a| match &self.catalogs[i][a].tag {
                                IdealTag::Dim1 { k, .. } => Some(*k),
                                _ => None,
                            })
                            .collect();
                        if found != sols {
                            return Err(CodeError::TableMismatch {
                                slot: format!("component {i} admissible exponents"),
                                expected: sols.len() as u64,
                                found: found.len() as u64,
                            });
                        }
                        1 + sols.len() as u64
                    }
                };
                check_slot(format!("component {i}"), expected, options.len())?;
                slots.push(Slot::Single { i, options });
            } else if i < j {
                let mut options = Vec::new();
                for a in 0..self.catalogs[i].len() {
                    for b in 0..self.catalogs[j].len() {
                        // C_j ⊆ D_j = dual(C_i) and C_i ⊆ D_i = dual(C_j)
                        let ci = &self.catalogs[i][a];
                        let cj = &self.catalogs[j][b];
                        let fwd = within(cj, &duals[i][a]);
                        let back = within(ci, &duals[j][b]);
                        debug_assert_eq!(fwd, back);
                        if fwd && back {
                            options.push((a, b));
                        }
                    }
                }
                let expected = match comp.cond {
                    Condition::I => match CommCase::of(comp) {
                        CommCase::Cube => 10,
                        CommCase::LinearQuadratic => 9,
                        CommCase::ThreeRoots => 27,
                    },
                    Condition::II => {
                        let qt = comp.q_third();
                        10 + 8 * qt + 8 * qt * qt + qt * qt * qt
                    }
                };
                check_slot(format!("components {i} and {j}"), expected, options.len())?;
                slots.push(Slot::Pair { i, j, options });
            }
        }
        Ok(slots)
    }

    /// Closed-form number of self-orthogonal codes (product of slot sizes).
    pub fn count_self_orthogonal(&self) -> Result<BigUint, CodeError> {
        Ok(self.self_orthogonal_slots()?.iter().map(|s| BigUint::from(s.len())).product())
    }

    /// Stream of self-orthogonal choice tuples as catalogue indices.
    pub fn enumerate_self_orthogonal(&self) -> Result<SelfOrthogonalStream, CodeError> {
        let slots = self.self_orthogonal_slots()?;
        let sizes = slots.iter().map(Slot::len).collect();
        Ok(SelfOrthogonalStream { odometer: Odometer::new(sizes), slots, width: self.system.len() })
    }
}

fn check_slot(slot: String, expected: u64, found: usize) -> Result<(), CodeError> {
    if expected == found as u64 {
        Ok(())
    } else {
        Err(CodeError::TableMismatch { slot, expected, found: found as u64 })
    }
}

/// `x^k a(x) mod x^m - 1` for a length-`m` residue vector.
fn rotate(a: &[Residue], k: usize) -> Vec<Residue> {
    let m = a.len();
    let mut out = vec![0; m];
    for (i, &c) in a.iter().enumerate() {
        out[(i + k) % m] = c;
    }
    out
}

/// `a(x) b(x) mod x^m - 1` with `a` of length `m`.
fn mul_mod_xm1(a: &[Residue], b: &[Residue], m: usize, q: u32) -> Vec<Residue> {
    let mut out = vec![0u64; m];
    let q = q as u64;
    for (j, &bj) in b.iter().enumerate() {
        if bj == 0 {
            continue;
        }
        for (i, &ai) in a.iter().enumerate() {
            let slot = &mut out[(i + j) % m];
            *slot = (*slot + ai as u64 * bj as u64) % q;
        }
    }
    out.into_iter().map(|c| c as Residue).collect()
}

/// Mixed-radix counter over index tuples; the last position moves fastest.
#[derive(Debug, Clone)]
pub struct Odometer {
    sizes: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl Odometer {
    pub fn new(sizes: Vec<usize>) -> Self {
        let next = (!sizes.contains(&0)).then(|| vec![0; sizes.len()]);
        Odometer { sizes, next }
    }
}

impl Iterator for Odometer {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for p in (0..succ.len()).rev() {
            succ[p] += 1;
            if succ[p] < self.sizes[p] {
                self.next = Some(succ);
                break;
            }
            succ[p] = 0;
        }
        Some(current)
    }
}

/// Lazily expands slot choices into full catalogue-index tuples.
#[derive(Debug, Clone)]
pub struct SelfOrthogonalStream {
    odometer: Odometer,
    slots: Vec<Slot>,
    width: usize,
}

impl SelfOrthogonalStream {
    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }
}

impl Iterator for SelfOrthogonalStream {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let pick = self.odometer.next()?;
        let mut idx = vec![0; self.width];
        for (slot, &p) in self.slots.iter().zip(&pick) {
            match slot {
                Slot::Single { i, options } => idx[*i] = options[p],
                Slot::Pair { i, j, options } => {
                    idx[*i] = options[p].0;
                    idx[*j] = options[p].1;
                }
            }
        }
        Some(idx)
    }
}
