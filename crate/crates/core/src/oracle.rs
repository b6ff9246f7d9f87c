//! Brute-force verifiers that avoid the classification results entirely.
//!
//! Each oracle works directly from definitions: left ideals are subspaces of
//! `K^3` stable under the skew shift, duals are null spaces, and
//! self-orthogonality is `G Gᵀ = 0`. Size gates are hard errors.

use thiserror::Error;

use crate::code::{CodeError, CodeSpace, GroupAlgebraElem};
use crate::field::{FElem, Residue};
use crate::linalg::{self, PrimeField};
use crate::structure::{ComponentCtx, System};

/// Largest component field the subspace oracle accepts.
pub const MAX_ORACLE_FIELD: u64 = 16;
/// Largest number of codes the self-orthogonal filter visits.
pub const MAX_FILTER_CODES: u64 = 1_000_000;
/// Bound on `codes * n^3` for the self-orthogonal filter.
pub const MAX_FILTER_WORK: f64 = 1e10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle input too large: {0}")]
    TooLarge(String),
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// A canonical RREF basis.
pub type SubspaceBasis<E> = Vec<Vec<E>>;

fn choose(n: usize, r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![Vec::new()];
    }
    (0..n)
        .flat_map(|first| {
            choose(n, r - 1).into_iter().filter(move |rest| rest.first().is_none_or(|&f| f > first)).map(
                move |mut rest| {
                    rest.insert(0, first);
                    rest
                },
            )
        })
        .collect()
}

/// Every subspace of `K^n` exactly once, as canonical RREF bases.
fn all_subspaces(comp: &ComponentCtx, n: usize) -> Vec<SubspaceBasis<FElem>> {
    let k = &comp.field;
    let elements: Vec<FElem> = k.elements().collect();
    let mut out = Vec::new();
    for r in 0..=n {
        for pivots in choose(n, r) {
            // free slots: (row, col) with col > pivot, col not a pivot
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(row, &p)| (p + 1..n).filter(|c| !pivots.contains(c)).map(move |c| (row, c)))
                .collect();
            let total = (elements.len() as u64).pow(free.len() as u32);
            for mut code in 0..total {
                let mut rows = vec![vec![k.zero(); n]; r];
                for (row, &p) in pivots.iter().enumerate() {
                    rows[row][p] = k.one();
                }
                for &(row, c) in &free {
                    rows[row][c] = elements[(code % elements.len() as u64) as usize].clone();
                    code /= elements.len() as u64;
                }
                out.push(rows);
            }
        }
    }
    out
}

/// All subspaces of `K_i^3` closed under `(c0, c1, c2) -> (θ c2, θ c0, θ c1)`.
pub fn brute_skew_ideals(comp: &ComponentCtx) -> Result<Vec<SubspaceBasis<FElem>>, OracleError> {
    if comp.field.cardinality() > MAX_ORACLE_FIELD {
        return Err(OracleError::TooLarge(format!(
            "component field of order {} exceeds {MAX_ORACLE_FIELD}",
            comp.field.cardinality()
        )));
    }
    let k = &comp.field;
    let shift = |v: &[FElem]| vec![comp.theta(&v[2]), comp.theta(&v[0]), comp.theta(&v[1])];
    Ok(all_subspaces(comp, 3)
        .into_iter()
        .filter(|basis| {
            let images: Vec<Vec<FElem>> = basis.iter().map(|v| shift(v)).collect();
            basis.is_empty() || linalg::contains_rows(k, basis, &images)
        })
        .collect())
}

/// RREF basis of `{v : G v = 0}`, the classical dual.
pub fn null_space_dual(q: u32, generator: &[Vec<Residue>], n: usize) -> SubspaceBasis<Residue> {
    linalg::null_space(&PrimeField::new(q), generator, n)
}

/// Whether the row space is closed under left multiplication by `x` and by `y`.
pub fn brute_left_ideal_check(generator: &[Vec<Residue>], system: &System) -> bool {
    let p = system.params;
    let f = PrimeField::new(p.q);
    if generator.is_empty() {
        return true;
    }
    let mut images = Vec::with_capacity(2 * generator.len());
    for row in generator {
        let Ok(xi) = GroupAlgebraElem::psi_extract(row, p.m, p.r, p.q) else {
            return false;
        };
        images.push(xi.left_mul_x().psi_embed());
        images.push(xi.left_mul_y().psi_embed());
    }
    linalg::contains_rows(&f, generator, &images)
}

/// Every code tuple (as catalogue indices) whose generator matrix satisfies `G Gᵀ = 0`.
pub fn brute_self_orthogonal_tuples(space: &CodeSpace<'_>) -> Result<Vec<Vec<usize>>, OracleError> {
    let total = space.enumeration_size();
    let n = space.length() as f64;
    let count: u64 = u64::try_from(&total)
        .ok()
        .filter(|&c| c <= MAX_FILTER_CODES)
        .ok_or_else(|| OracleError::TooLarge(format!("{total} codes exceed {MAX_FILTER_CODES}")))?;
    if count as f64 * n * n * n > MAX_FILTER_WORK {
        return Err(OracleError::TooLarge(format!("{count} codes of length {n} exceed the work bound")));
    }
    let mut out = Vec::new();
    for idx in space.enumerate() {
        let code = space.assemble(&space.choices_at(&idx))?;
        if code.is_self_orthogonal() {
            out.push(idx);
        }
    }
    Ok(out)
}

/// Number of self-orthogonal codes found by exhaustive filtering.
pub fn brute_self_orthogonal_filter(space: &CodeSpace<'_>) -> Result<u64, OracleError> {
    Ok(brute_self_orthogonal_tuples(space)?.len() as u64)
}
