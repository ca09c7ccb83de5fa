use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::poly::{PolyRing, Polynomial};

use super::engine::Engine;

/// Element of the free module `R^rank`, as a column of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModuleElement {
    ring: PolyRing,
    components: Vec<Polynomial>,
}

impl FreeModuleElement {
    pub fn new(ring: &PolyRing, components: Vec<Polynomial>) -> Result<Self> {
        if components.iter().any(|c| c.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(FreeModuleElement {
            ring: ring.clone(),
            components,
        })
    }

    pub fn parse<S: AsRef<str>>(ring: &PolyRing, components: &[S]) -> Result<Self> {
        let comps = components
            .iter()
            .map(|s| Polynomial::parse(s.as_ref(), ring))
            .collect::<Result<Vec<_>>>()?;
        FreeModuleElement::new(ring, comps)
    }

    pub fn zero(ring: &PolyRing, rank: usize) -> Self {
        FreeModuleElement {
            ring: ring.clone(),
            components: vec![Polynomial::zero(ring); rank],
        }
    }

    pub fn unit(ring: &PolyRing, rank: usize, i: usize) -> Self {
        let mut v = Self::zero(ring, rank);
        v.components[i] = Polynomial::one(ring);
        v
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    /// Every component vanishes at the origin, i.e. the element lies in `m·R^rank`.
    pub fn in_origin_submodule(&self) -> bool {
        self.components.iter().all(|c| c.in_origin_ideal())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.components.iter().all(|c| c.is_homogeneous())
    }

    pub fn add(&self, other: &FreeModuleElement) -> Result<FreeModuleElement> {
        if self.rank() != other.rank() {
            return Err(Error::DimensionMismatch(format!(
                "ranks {} and {}",
                self.rank(),
                other.rank()
            )));
        }
        let comps = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<Vec<_>>>()?;
        FreeModuleElement::new(&self.ring, comps)
    }

    /// `Σ self_i · other_i`.
    pub fn dot(&self, other: &[Polynomial]) -> Result<Polynomial> {
        if self.rank() != other.len() {
            return Err(Error::DimensionMismatch(format!(
                "ranks {} and {}",
                self.rank(),
                other.len()
            )));
        }
        let mut acc = Polynomial::zero(&self.ring);
        for (a, b) in self.components.iter().zip(other) {
            acc = &acc + &a.checked_mul(b)?;
        }
        Ok(acc)
    }
}

/// Generators of the kernel of `R^m -> R^n`, `v ↦ A·v`, as the columns of an
/// `m × k` matrix.
///
/// Runs module Buchberger in `R^{n+m}` on `column_j(A) ⊕ e_j` under the
/// position-over-term order; basis elements whose first `n` components vanish
/// carry the syzygies in their last `m` components.
pub fn kernel(a: &PolyMatrix) -> Result<PolyMatrix> {
    let ring = a.ring();
    let (n, m) = (a.rows(), a.cols());
    let engine = Engine::new(ring);
    let gens = (0..m)
        .map(|j| {
            let mut comps = a.column(j);
            comps.extend((0..m).map(|k| {
                if k == j {
                    Polynomial::one(ring)
                } else {
                    Polynomial::zero(ring)
                }
            }));
            Engine::from_components(&comps)
        })
        .collect();
    let gb = engine.groebner(gens, n + m)?;
    // decreasing leading term, so unit syzygies come out as the identity
    let columns: Vec<Vec<Polynomial>> = gb
        .iter()
        .rev()
        .filter(|v| v[0].0.comp >= n)
        .map(|v| engine.to_components(v, n + m)[n..].to_vec())
        .collect();
    PolyMatrix::from_columns(ring, m, columns)
}

/// Whether `v` lies in the submodule of `R^rows` generated by the columns of `gens`.
pub fn submodule_contains(gens: &PolyMatrix, v: &FreeModuleElement) -> Result<bool> {
    if v.rank() != gens.rows() {
        return Err(Error::DimensionMismatch(format!(
            "element of rank {} against {} rows",
            v.rank(),
            gens.rows()
        )));
    }
    if v.ring() != gens.ring() {
        return Err(Error::RingMismatch);
    }
    let engine = Engine::new(gens.ring());
    let vecs = gens
        .columns()
        .iter()
        .map(|c| Engine::from_components(c))
        .collect();
    let gb = engine.groebner(vecs, gens.rows())?;
    Ok(engine
        .normal_form(Engine::from_components(v.components()), &gb)
        .is_empty())
}
