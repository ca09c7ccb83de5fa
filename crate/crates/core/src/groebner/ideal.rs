use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::poly::{PolyRing, Polynomial};

use super::engine::Engine;

/// An ideal given by generators. Its reduced Gröbner basis is computed on
/// first use and cached; concurrent readers see either nothing or the
/// complete basis.
pub struct Ideal {
    ring: PolyRing,
    generators: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            gb: self.gb.clone(),
        }
    }
}

impl Ideal {
    pub fn new(ring: &PolyRing, generators: Vec<Polynomial>) -> Result<Self> {
        if generators.iter().any(|g| g.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators,
            gb: OnceLock::new(),
        })
    }

    pub fn parse<S: AsRef<str>>(ring: &PolyRing, generators: &[S]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|s| Polynomial::parse(s.as_ref(), ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn zero(ring: &PolyRing) -> Self {
        Ideal::new(ring, Vec::new()).unwrap()
    }

    pub fn unit(ring: &PolyRing) -> Self {
        Ideal::new(ring, vec![Polynomial::one(ring)]).unwrap()
    }

    /// The ideal of all variables, i.e. the maximal ideal at the origin.
    pub fn origin(ring: &PolyRing) -> Self {
        let gens = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
        Ideal::new(ring, gens).unwrap()
    }

    pub(crate) fn with_basis(ring: &PolyRing, basis: Vec<Polynomial>) -> Self {
        let gb = OnceLock::new();
        let _ = gb.set(basis.clone());
        Ideal {
            ring: ring.clone(),
            generators: basis,
            gb,
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn nonzero_generators(&self) -> impl Iterator<Item = &Polynomial> {
        self.generators.iter().filter(|g| !g.is_zero())
    }

    pub fn groebner_basis(&self) -> Result<&[Polynomial]> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = super::buchberger(&self.ring, &self.generators)?;
        let _ = self.gb.set(gb);
        Ok(self.gb.get().unwrap())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Ok(true);
        }
        let gb = self.groebner_basis()?;
        Ok(super::reduce(f, gb)?.is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in other.nonzero_generators() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals via their reduced Gröbner bases.
    pub fn same_as(&self, other: &Ideal) -> Result<bool> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.groebner_basis()? == other.groebner_basis()?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        if self.generators.iter().any(|g| g.is_unit()) {
            return Ok(true);
        }
        Ok(self.groebner_basis()?.iter().any(|g| g.is_unit()))
    }

    pub fn is_zero(&self) -> bool {
        self.generators.iter().all(|g| g.is_zero())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }

    /// Every generator vanishes at the origin.
    pub fn in_origin_ideal(&self) -> bool {
        self.generators.iter().all(|g| g.in_origin_ideal())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn add_generator(&self, f: Polynomial) -> Result<Ideal> {
        let mut gens = self.generators.clone();
        gens.push(f);
        Ideal::new(&self.ring, gens)
    }

    /// Generated by degree-one polynomials, hence prime whenever proper.
    pub fn is_linear(&self) -> bool {
        self.generators
            .iter()
            .all(|g| g.total_degree().is_none_or(|d| d <= 1))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn engine_basis(ring: &PolyRing, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let engine = Engine::new(ring);
    let vecs = gens.iter().map(|g| Engine::from_poly(g, 0)).collect();
    Ok(engine
        .groebner(vecs, 1)?
        .iter()
        .map(|v| engine.to_poly(v))
        .collect())
}
