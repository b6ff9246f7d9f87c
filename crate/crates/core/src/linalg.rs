//! Gaussian elimination over any finite field: RREF, rank, null spaces and
//! row-space comparisons.
//!
//! Works both over a component field (entries are [`FElem`]) and over the
//! base prime field (entries are plain residues, see [`PrimeField`]).

use crate::field::{FElem, FieldCtx, Residue};

/// The scalar operations Gaussian elimination needs.
pub trait LinearField {
    type Elem: Clone + PartialEq;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Inverse of a nonzero element.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
}

impl LinearField for FieldCtx {
    type Elem = FElem;
    fn zero(&self) -> FElem {
        FieldCtx::zero(self)
    }
    fn one(&self) -> FElem {
        FieldCtx::one(self)
    }
    fn is_zero(&self, a: &FElem) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &FElem, b: &FElem) -> FElem {
        FieldCtx::add(self, a, b)
    }
    fn sub(&self, a: &FElem, b: &FElem) -> FElem {
        FieldCtx::sub(self, a, b)
    }
    fn mul(&self, a: &FElem, b: &FElem) -> FElem {
        FieldCtx::mul(self, a, b)
    }
    fn inv(&self, a: &FElem) -> FElem {
        FieldCtx::inv(self, a).expect("pivot is nonzero")
    }
}

/// F_q with plain `u32` residues; the fast path for length-3m codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    pub q: u32,
}

impl PrimeField {
    pub fn new(q: u32) -> Self {
        PrimeField { q }
    }

    pub fn pow(&self, a: Residue, mut e: u64) -> Residue {
        let q = self.q as u64;
        let (mut base, mut acc) = (a as u64 % q, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % q;
            }
            base = base * base % q;
            e >>= 1;
        }
        acc as Residue
    }

    /// Dot product of two equal-length vectors.
    pub fn dot(&self, u: &[Residue], v: &[Residue]) -> Residue {
        let q = self.q as u64;
        u.iter().zip(v).fold(0u64, |acc, (&a, &b)| (acc + a as u64 * b as u64) % q) as Residue
    }
}

impl LinearField for PrimeField {
    type Elem = Residue;
    fn zero(&self) -> Residue {
        0
    }
    fn one(&self) -> Residue {
        1
    }
    fn is_zero(&self, a: &Residue) -> bool {
        *a == 0
    }
    fn add(&self, a: &Residue, b: &Residue) -> Residue {
        ((*a as u64 + *b as u64) % self.q as u64) as Residue
    }
    fn sub(&self, a: &Residue, b: &Residue) -> Residue {
        ((*a as u64 + self.q as u64 - *b as u64) % self.q as u64) as Residue
    }
    fn mul(&self, a: &Residue, b: &Residue) -> Residue {
        (*a as u64 * *b as u64 % self.q as u64) as Residue
    }
    fn inv(&self, a: &Residue) -> Residue {
        assert!(*a != 0, "pivot is nonzero");
        self.pow(*a, self.q as u64 - 2)
    }
}

/// Reduce `rows` in place to reduced row echelon form, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub fn rref<F: LinearField>(f: &F, rows: &mut Vec<Vec<F::Elem>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&i| !f.is_zero(&rows[i][col])) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = f.inv(&rows[rank][col]);
        for x in rows[rank].iter_mut() {
            *x = f.mul(x, &inv);
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank || f.is_zero(&row[col]) {
                continue;
            }
            let c = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !f.is_zero(p) {
                    *x = f.sub(x, &f.mul(&c, p));
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

pub fn rank<F: LinearField>(f: &F, rows: &[Vec<F::Elem>]) -> usize {
    let mut m = rows.to_vec();
    rref(f, &mut m).len()
}

/// RREF basis of `{v : G v = 0}` for a matrix with `ncols` columns.
pub fn null_space<F: LinearField>(f: &F, rows: &[Vec<F::Elem>], ncols: usize) -> Vec<Vec<F::Elem>> {
    let mut m = rows.to_vec();
    let pivots = rref(f, &mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut basis: Vec<Vec<F::Elem>> = free
        .iter()
        .map(|&fc| {
            let mut v = vec![f.zero(); ncols];
            v[fc] = f.one();
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = f.sub(&f.zero(), &row[fc]);
            }
            v
        })
        .collect();
    rref(f, &mut basis);
    basis
}

/// Canonical RREF basis of the row space.
pub fn row_space<F: LinearField>(f: &F, rows: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let mut m = rows.to_vec();
    rref(f, &mut m);
    m
}

/// Whether every row of `inner` lies in the row space of `outer`.
pub fn contains_rows<F: LinearField>(f: &F, outer: &[Vec<F::Elem>], inner: &[Vec<F::Elem>]) -> bool {
    let r = rank(f, outer);
    let mut joined = outer.to_vec();
    joined.extend_from_slice(inner);
    rank(f, &joined) == r
}

pub fn same_row_space<F: LinearField>(f: &F, a: &[Vec<F::Elem>], b: &[Vec<F::Elem>]) -> bool {
    row_space(f, a) == row_space(f, b)
}
