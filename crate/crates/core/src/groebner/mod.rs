//! Gröbner bases for ideals and submodules of free modules, and the ideal
//! operations built on them.

mod engine;
mod ideal;
mod module;

pub use ideal::Ideal;
pub use module::{kernel, submodule_contains, FreeModuleElement};

use crate::error::{Error, Result};
use crate::poly::{restrict, Embedding, MonomialOrder, PolyRing, Polynomial};

use engine::Engine;

/// Normal form of `f` modulo `basis`: the largest reducible term is always
/// cancelled by the first element of `basis` whose leading monomial divides it.
pub fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial> {
    if basis.iter().any(|g| g.ring() != f.ring()) {
        return Err(Error::RingMismatch);
    }
    let engine = Engine::new(f.ring());
    let gens: Vec<_> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Engine::from_poly(g, 0))
        .collect();
    let r = engine.normal_form(Engine::from_poly(f, 0), &gens);
    Ok(engine.to_poly(&r))
}

/// Reduced Gröbner basis of the ideal generated by `gens` (zeros discarded),
/// sorted by increasing leading monomial.
pub fn buchberger(ring: &PolyRing, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    if gens.iter().any(|g| g.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    ideal::engine_basis(ring, gens)
}

pub fn membership(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.contains(f)
}

fn block_ring(ring: &PolyRing, front: &[usize]) -> Result<PolyRing> {
    let mut vars: Vec<String> = front.iter().map(|&i| ring.variables()[i].clone()).collect();
    vars.extend(
        ring.variables()
            .iter()
            .enumerate()
            .filter(|(i, _)| !front.contains(i))
            .map(|(_, v)| v.clone()),
    );
    Ok(PolyRing::new(&vars, ring.field(), MonomialOrder::Block(front.len()))?
        .with_limits(ring.limits()))
}

/// Basis elements free of the first `k` variables of a ring under `Block(k)`.
fn eliminant_basis(ring: &PolyRing, k: usize, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let gb = buchberger(ring, gens)?;
    let front_mask: u64 = if k >= 64 { u64::MAX } else { (1u64 << k) - 1 };
    Ok(gb
        .into_iter()
        .filter(|g| g.leading_monomial().unwrap().support_mask() & front_mask == 0)
        .collect())
}

fn sub_order(ring: &PolyRing) -> MonomialOrder {
    match ring.order() {
        MonomialOrder::Block(_) => MonomialOrder::GrevLex,
        o => o,
    }
}

/// `I ∩ k[remaining variables]`, as an ideal of the ring without `front_vars`.
pub fn eliminate<S: AsRef<str>>(ideal: &Ideal, front_vars: &[S]) -> Result<Ideal> {
    let ring = ideal.ring();
    let mut front = Vec::with_capacity(front_vars.len());
    for v in front_vars {
        let i = ring
            .var_index(v.as_ref())
            .ok_or_else(|| Error::UnknownVariable(v.as_ref().to_string()))?;
        if !front.contains(&i) {
            front.push(i);
        }
    }
    let remaining: Vec<String> = ring
        .variables()
        .iter()
        .enumerate()
        .filter(|(i, _)| !front.contains(i))
        .map(|(_, v)| v.clone())
        .collect();
    let sub = PolyRing::new(&remaining, ring.field(), sub_order(ring))?.with_limits(ring.limits());
    if front.is_empty() {
        let gens = ideal
            .generators()
            .iter()
            .map(|g| restrict(g, &sub))
            .collect::<Result<Vec<_>>>()?;
        return Ideal::new(&sub, gens);
    }
    let block = block_ring(ring, &front)?;
    let emb = Embedding::by_name(ring, &block)?;
    let gens: Vec<Polynomial> = ideal.generators().iter().map(|g| emb.apply(g)).collect();
    let kept = eliminant_basis(&block, front.len(), &gens)?;
    let gens = kept
        .iter()
        .map(|g| restrict(g, &sub))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&sub, gens)
}

/// Adjoins one fresh eliminated variable `t` in front and returns
/// `(extended ring, embedding, t)`.
fn with_aux_var(ring: &PolyRing, stem: &str) -> (PolyRing, Embedding, Polynomial) {
    let (ext, emb) = ring.extend_front_eliminating(&[stem.to_string()]);
    let t = Polynomial::var(&ext, 0);
    (ext, emb, t)
}

fn eliminate_aux(ext: &PolyRing, gens: &[Polynomial], ring: &PolyRing) -> Result<Ideal> {
    let kept = eliminant_basis(ext, 1, gens)?;
    let gens = kept
        .iter()
        .map(|g| restrict(g, ring))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, gens)
}

/// `I ∩ J` by eliminating `t` from `t·I + (1 - t)·J`.
pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    let ring = i.ring();
    if ring != j.ring() {
        return Err(Error::RingMismatch);
    }
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let (ext, emb, t) = with_aux_var(ring, "t");
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let mut gens: Vec<Polynomial> = i.nonzero_generators().map(|f| &t * &emb.apply(f)).collect();
    gens.extend(j.nonzero_generators().map(|g| &one_minus_t * &emb.apply(g)));
    eliminate_aux(&ext, &gens, ring)
}

/// `I : g^∞` by eliminating `t` from `I + (1 - t·g)`.
fn saturate_single(ideal: &Ideal, g: &Polynomial) -> Result<Ideal> {
    let ring = ideal.ring();
    if g.is_unit() {
        return Ok(ideal.clone());
    }
    let (ext, emb, t) = with_aux_var(ring, "t");
    let mut gens: Vec<Polynomial> = ideal.nonzero_generators().map(|f| emb.apply(f)).collect();
    gens.push(&Polynomial::one(&ext) - &(&t * &emb.apply(g)));
    eliminate_aux(&ext, &gens, ring)
}

/// `I : J^∞`, the intersection of `I : g^∞` over the nonzero generators `g` of `J`.
/// Removes exactly the primary components of `I` whose primes contain `J`.
pub fn saturate(ideal: &Ideal, by: &Ideal) -> Result<Ideal> {
    if ideal.ring() != by.ring() {
        return Err(Error::RingMismatch);
    }
    let gens: Vec<&Polynomial> = by.nonzero_generators().collect();
    if gens.is_empty() {
        return Err(Error::InvalidArgument(
            "saturation by the zero ideal".into(),
        ));
    }
    let mut acc: Option<Ideal> = None;
    for g in gens {
        let part = saturate_single(ideal, g)?;
        acc = Some(match acc {
            None => part,
            Some(prev) => intersect(&prev, &part)?,
        });
    }
    let acc = acc.unwrap();
    let basis = acc.groebner_basis()?.to_vec();
    Ok(Ideal::with_basis(ideal.ring(), basis))
}

/// `f ∈ √I`, decided by `1 ∈ I + (1 - y·f)` in a one-variable extension.
pub fn radical_member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    if f.ring() != ideal.ring() {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Ok(true);
    }
    let (ext, emb, y) = with_aux_var(ideal.ring(), "y");
    let mut gens: Vec<Polynomial> = ideal.nonzero_generators().map(|g| emb.apply(g)).collect();
    gens.push(&Polynomial::one(&ext) - &(&y * &emb.apply(f)));
    Ideal::new(&ext, gens)?.is_unit()
}
