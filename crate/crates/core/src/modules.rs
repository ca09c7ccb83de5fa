//! Constructions on presentation matrices: minors, Fitting ideals, generalized
//! row ideals, symmetric-algebra presentations, duals and order ideals.
//!
//! A matrix `A` with `n` rows and `m` columns presents `M = coker(A: R^m -> R^n)`.

use std::collections::HashMap;

use itertools::Itertools;
use serde::Serialize;

use crate::dimension::{self, DimensionResult};
use crate::error::{Error, Result};
use crate::groebner::{kernel, FreeModuleElement, Ideal};
use crate::matrix::PolyMatrix;
use crate::poly::{Embedding, MonomialOrder, PolyRing, Polynomial};

/// Largest minor size [`MinorTable::minors`] will expand.
pub const MAX_MINOR_SIZE: usize = 8;

/// Memoized cofactor expansion. One table serves every minor size of a matrix.
pub struct MinorTable<'a> {
    a: &'a PolyMatrix,
    memo: HashMap<(u64, u64), Polynomial>,
}

impl<'a> MinorTable<'a> {
    pub fn new(a: &'a PolyMatrix) -> Self {
        MinorTable {
            a,
            memo: HashMap::new(),
        }
    }

    /// All `t × t` minors, row sets outermost, both in lexicographic order.
    pub fn minors(&mut self, t: usize) -> Result<Vec<Polynomial>> {
        if t == 0 {
            return Ok(vec![Polynomial::one(self.a.ring())]);
        }
        if t > self.a.rows().min(self.a.cols()) {
            return Ok(Vec::new());
        }
        if t > MAX_MINOR_SIZE {
            return Err(Error::ResourceLimit(format!(
                "minors of size {t} exceed the cap of {MAX_MINOR_SIZE}"
            )));
        }
        if self.a.rows() > 64 || self.a.cols() > 64 {
            return Err(Error::ResourceLimit(
                "minors need at most 64 rows and columns".into(),
            ));
        }
        let mut out = Vec::new();
        for rows in (0..self.a.rows()).combinations(t) {
            let rmask = rows.iter().fold(0u64, |m, &i| m | 1 << i);
            for cols in (0..self.a.cols()).combinations(t) {
                let cmask = cols.iter().fold(0u64, |m, &j| m | 1 << j);
                out.push(self.det(rmask, cmask));
            }
        }
        Ok(out)
    }

    // expansion along the first row of the row set
    fn det(&mut self, rmask: u64, cmask: u64) -> Polynomial {
        if let Some(d) = self.memo.get(&(rmask, cmask)) {
            return d.clone();
        }
        let i = rmask.trailing_zeros() as usize;
        let d = if rmask.count_ones() == 1 {
            self.a.get(i, cmask.trailing_zeros() as usize).clone()
        } else {
            let rest = rmask & !(1 << i);
            let mut acc = Polynomial::zero(self.a.ring());
            let mut negate = false;
            let mut cols = cmask;
            while cols != 0 {
                let j = cols.trailing_zeros() as usize;
                cols &= cols - 1;
                let entry = self.a.get(i, j);
                if !entry.is_zero() {
                    let sub = self.det(rest, cmask & !(1 << j));
                    let term = entry * &sub;
                    acc = if negate { &acc - &term } else { &acc + &term };
                }
                negate = !negate;
            }
            acc
        };
        self.memo.insert((rmask, cmask), d.clone());
        d
    }
}

pub fn minors(a: &PolyMatrix, t: usize) -> Result<Vec<Polynomial>> {
    MinorTable::new(a).minors(t)
}

/// `I_t(A)`.
pub fn determinantal_ideal(a: &PolyMatrix, t: usize) -> Result<Ideal> {
    Ideal::new(a.ring(), minors(a, t)?)
}

/// `Fitt_i(M) = I_{n-i}(A)`, the unit ideal when `n - i ≤ 0`.
pub fn fitting_ideal(a: &PolyMatrix, i: usize) -> Result<Ideal> {
    if i >= a.rows() {
        return Ok(Ideal::unit(a.ring()));
    }
    determinantal_ideal(a, a.rows() - i)
}

/// Ideal of the entries of the row vector `b·A`.
pub fn row_ideal(a: &PolyMatrix, b: &FreeModuleElement) -> Result<Ideal> {
    if b.rank() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "vector of rank {} against {} rows",
            b.rank(),
            a.rows()
        )));
    }
    if b.ring() != a.ring() {
        return Err(Error::RingMismatch);
    }
    let gens = a
        .columns()
        .iter()
        .map(|c| b.dot(c))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(a.ring(), gens)
}

/// `Sym(M) = R[T_1..T_n] / ((T_1..T_n)·A)`.
#[derive(Clone, Debug)]
pub struct SymPresentation {
    pub base_ring: PolyRing,
    /// T variables in front under a block elimination order.
    pub ring: PolyRing,
    /// One generator per column of `A`, in column order.
    pub defining_ideal: Ideal,
    pub n: usize,
    pub embedding: Embedding,
}

impl SymPresentation {
    pub fn t_variables(&self) -> &[String] {
        &self.ring.variables()[..self.n]
    }

    /// `dim Sym(M)`, computed in the same variables under grevlex.
    pub fn dimension(&self) -> Result<DimensionResult> {
        dimension::krull_dim(&self.grevlex_ideal()?)
    }

    pub fn height(&self) -> Result<i64> {
        Ok(self.dimension()?.height)
    }

    fn grevlex_ideal(&self) -> Result<Ideal> {
        let flat = self.ring.with_order(MonomialOrder::GrevLex)?;
        let to_flat = Embedding::by_name(&self.ring, &flat)?;
        Ideal::new(
            &flat,
            self.defining_ideal
                .generators()
                .iter()
                .map(|g| to_flat.apply(g))
                .collect(),
        )
    }
}

pub fn sym_presentation(a: &PolyMatrix) -> SymPresentation {
    let n = a.rows();
    let stems: Vec<String> = (1..=n).map(|i| format!("T{i}")).collect();
    let (ring, embedding) = a.ring().extend_front_eliminating(&stems);
    let ts: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(&ring, i)).collect();
    let gens = (0..a.cols())
        .map(|j| {
            let mut acc = Polynomial::zero(&ring);
            for (i, t) in ts.iter().enumerate() {
                let e = a.get(i, j);
                if !e.is_zero() {
                    acc = &acc + &(t * &embedding.apply(e));
                }
            }
            acc
        })
        .collect();
    SymPresentation {
        base_ring: a.ring().clone(),
        defining_ideal: Ideal::new(&ring, gens).expect("generators built in the extended ring"),
        ring,
        n,
        embedding,
    }
}

/// A presentation of `M = coker(π*)` where `π: R^n -> N` is the surjection
/// presented by `psi`: the columns generate `Hom(N, R) ⊆ R^n`.
pub fn dual_presentation(psi: &PolyMatrix) -> Result<PolyMatrix> {
    kernel(&psi.transpose())
}

#[derive(Clone, Debug)]
pub struct OrderIdeal {
    pub ideal: Ideal,
    /// Generators of `Hom(N, R)` as columns.
    pub duals: PolyMatrix,
    /// Some entry of `x` has a nonzero constant term.
    pub x_not_in_mn: bool,
}

/// `N*(x) = {φ(x) : φ ∈ Hom(N, R)}` for `N = coker(psi)` and `x` given in the
/// generators of `N`.
pub fn order_ideal(psi: &PolyMatrix, x: &FreeModuleElement) -> Result<OrderIdeal> {
    if x.rank() != psi.rows() {
        return Err(Error::DimensionMismatch(format!(
            "vector of rank {} against {} rows",
            x.rank(),
            psi.rows()
        )));
    }
    if x.ring() != psi.ring() {
        return Err(Error::RingMismatch);
    }
    let duals = dual_presentation(psi)?;
    let gens = duals
        .columns()
        .iter()
        .map(|h| x.dot(h))
        .collect::<Result<Vec<_>>>()?;
    Ok(OrderIdeal {
        ideal: Ideal::new(psi.ring(), gens)?,
        duals,
        x_not_in_mn: !x.in_origin_submodule(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EquidimCertificate {
    /// The defining ideal's height equals its number of nonzero generators.
    CompleteIntersection { height: i64, generators: usize },
    UserAsserted { note: String },
}

impl EquidimCertificate {
    pub fn kind_name(&self) -> &'static str {
        match self {
            EquidimCertificate::CompleteIntersection { .. } => "complete_intersection",
            EquidimCertificate::UserAsserted { .. } => "user_asserted",
        }
    }

    pub fn is_verified(&self) -> bool {
        matches!(self, EquidimCertificate::CompleteIntersection { .. })
    }
}

/// Certifies that `Sym(M)` is equidimensional, if possible.
///
/// `Ok(None)` means neither the complete-intersection test nor an assertion
/// applies; the hypothesis stays unverified.
pub fn equidim_certificate(
    sym: &SymPresentation,
    assertion: Option<&str>,
) -> Result<Option<EquidimCertificate>> {
    let generators = sym.defining_ideal.nonzero_generators().count();
    let height = sym.height()?;
    if height == generators as i64 {
        return Ok(Some(EquidimCertificate::CompleteIntersection { height, generators }));
    }
    Ok(assertion.map(|note| EquidimCertificate::UserAsserted {
        note: note.to_string(),
    }))
}
