//! Krull dimension and height from the leading-term ideal.
//!
//! For an ideal `I` of `k[x_1..x_n]`, `dim R/I` is the largest size of a set
//! of variables containing the support of no leading monomial of a Gröbner
//! basis of `I`, and `ht I = n - dim R/I`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::matrix::PolyMatrix;
use crate::modules::MinorTable;

/// Largest number of variables the independent-set search accepts.
pub const MAX_DIMENSION_VARS: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionResult {
    /// `-1` for the unit ideal.
    pub dim: i64,
    /// `n - dim` for proper ideals; `n` for the unit ideal.
    pub height: i64,
    /// Lexicographically first maximum independent set (variable indices).
    pub witness: Vec<usize>,
    /// The ideal is `(1)`.
    pub unit: bool,
    pub nvars: usize,
}

impl DimensionResult {
    pub fn witness_names(&self, ideal: &Ideal) -> Vec<String> {
        self.witness
            .iter()
            .map(|&i| ideal.ring().variables()[i].clone())
            .collect()
    }
}

/// Supports of the leading monomials, minimized under inclusion.
fn leading_supports(ideal: &Ideal) -> Result<Vec<u32>> {
    let mut masks: Vec<u32> = ideal
        .groebner_basis()?
        .iter()
        .map(|g| g.leading_monomial().unwrap().support_mask() as u32)
        .collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks.dedup();
    let mut minimal: Vec<u32> = Vec::new();
    for m in masks {
        if !minimal.iter().any(|&k| k & m == k) {
            minimal.push(m);
        }
    }
    Ok(minimal)
}

struct Search<'a> {
    n: usize,
    dependent: &'a [u32],
    best: u32,
    best_size: u32,
}

impl Search<'_> {
    fn independent(&self, set: u32) -> bool {
        !self.dependent.iter().any(|&d| d & set == d)
    }

    // include-first DFS visits equal-size sets in lexicographic order of
    // their sorted index lists, so only strict improvements replace `best`
    fn dfs(&mut self, next: usize, set: u32) {
        let size = set.count_ones();
        if size > self.best_size {
            self.best = set;
            self.best_size = size;
        }
        if next == self.n || size + (self.n - next) as u32 <= self.best_size {
            return;
        }
        let with = set | (1 << next);
        if self.independent(with) {
            self.dfs(next + 1, with);
        }
        self.dfs(next + 1, set);
    }
}

/// `dim R/I` and `ht I` via a pruned search for independent sets of variables.
pub fn krull_dim(ideal: &Ideal) -> Result<DimensionResult> {
    let n = ideal.ring().nvars();
    if n > MAX_DIMENSION_VARS {
        return Err(Error::ResourceLimit(format!(
            "independent-set search is capped at {MAX_DIMENSION_VARS} variables, got {n}"
        )));
    }
    if ideal.is_unit()? {
        return Ok(DimensionResult {
            dim: -1,
            height: n as i64,
            witness: Vec::new(),
            unit: true,
            nvars: n,
        });
    }
    let dependent = leading_supports(ideal)?;
    let mut search = Search {
        n,
        dependent: &dependent,
        best: 0,
        best_size: 0,
    };
    search.dfs(0, 0);
    let witness: Vec<usize> = (0..n).filter(|i| search.best & (1 << i) != 0).collect();
    let dim = witness.len() as i64;
    Ok(DimensionResult {
        dim,
        height: n as i64 - dim,
        witness,
        unit: false,
        nvars: n,
    })
}

pub fn height(ideal: &Ideal) -> Result<i64> {
    Ok(krull_dim(ideal)?.height)
}

/// `rows(A) - max{t : some t×t minor of A is not in Q}`.
///
/// At a prime `Q` this is the minimal number of generators of the cokernel
/// of `A` localized at `Q`. Primality of `Q` is the caller's responsibility.
pub fn mu_at_prime(a: &PolyMatrix, q: &Ideal) -> Result<usize> {
    if a.ring() != q.ring() {
        return Err(Error::RingMismatch);
    }
    if q.is_unit()? {
        return Err(Error::NonProperIdeal(q.to_string()));
    }
    let mut table = MinorTable::new(a);
    let mut escaping = 0;
    // if every t-minor lies in Q then so does every (t+1)-minor
    for t in 1..=a.rows().min(a.cols()) {
        let mut found = false;
        for m in table.minors(t)? {
            if !q.contains(&m)? {
                found = true;
                break;
            }
        }
        if !found {
            break;
        }
        escaping = t;
    }
    Ok(a.rows() - escaping)
}

/// Largest `t` with `I_t(A) ≠ 0`.
pub fn matrix_rank(a: &PolyMatrix) -> Result<usize> {
    let mut table = MinorTable::new(a);
    let mut rank = 0;
    for t in 1..=a.rows().min(a.cols()) {
        if table.minors(t)?.iter().all(|m| m.is_zero()) {
            break;
        }
        rank = t;
    }
    Ok(rank)
}
