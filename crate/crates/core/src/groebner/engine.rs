//! Buchberger's algorithm on sparse vectors of a free module `R^rank`.
//!
//! Ideals are the rank-one case. Module terms are ordered position-over-term
//! with the lower component index dominant, so the leading term of a vector
//! lives in its first nonzero component.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::poly::{Coeff, Monomial, PolyRing, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Pos {
    pub comp: usize,
    pub mono: Monomial,
}

/// Terms strictly decreasing in the module order; never contains zero coefficients.
pub(crate) type Vector = Vec<(Pos, Coeff)>;

pub(crate) struct Engine<'r> {
    ring: &'r PolyRing,
}

impl<'r> Engine<'r> {
    pub fn new(ring: &'r PolyRing) -> Self {
        Engine { ring }
    }

    pub fn cmp(&self, a: &Pos, b: &Pos) -> Ordering {
        b.comp
            .cmp(&a.comp)
            .then_with(|| self.ring.order().cmp(&a.mono, &b.mono))
    }

    pub fn from_poly(f: &Polynomial, comp: usize) -> Vector {
        f.terms()
            .iter()
            .map(|(m, c)| {
                (
                    Pos {
                        comp,
                        mono: m.clone(),
                    },
                    c.clone(),
                )
            })
            .collect()
    }

    /// Concatenation is already sorted because lower components dominate.
    pub fn from_components(comps: &[Polynomial]) -> Vector {
        comps
            .iter()
            .enumerate()
            .flat_map(|(i, f)| Self::from_poly(f, i))
            .collect()
    }

    pub fn to_poly(&self, v: &[(Pos, Coeff)]) -> Polynomial {
        Polynomial::from_sorted(
            self.ring,
            v.iter().map(|(p, c)| (p.mono.clone(), c.clone())).collect(),
        )
    }

    pub fn to_components(&self, v: &[(Pos, Coeff)], rank: usize) -> Vec<Polynomial> {
        let mut parts: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); rank];
        for (p, c) in v {
            parts[p.comp].push((p.mono.clone(), c.clone()));
        }
        parts
            .into_iter()
            .map(|t| Polynomial::from_sorted(self.ring, t))
            .collect()
    }

    /// `f + c * m * g`.
    fn add_scaled(&self, f: Vector, g: &[(Pos, Coeff)], c: &Coeff, m: &Monomial) -> Vector {
        let field = self.ring.field();
        let mut out = Vec::with_capacity(f.len() + g.len());
        let mut a = f.into_iter().peekable();
        let mut b = g.iter().map(|(p, d)| {
            (
                Pos {
                    comp: p.comp,
                    mono: p.mono.mul(m),
                },
                field.mul(c, d),
            )
        });
        let mut next_b = b.next();
        loop {
            match (a.peek(), next_b.take()) {
                (None, None) => break,
                (Some(_), None) => {
                    out.extend(a);
                    break;
                }
                (None, Some(tb)) => {
                    out.push(tb);
                    out.extend(b);
                    break;
                }
                (Some((pa, ca)), Some(tb)) => match self.cmp(pa, &tb.0) {
                    Ordering::Greater => {
                        out.push(a.next().unwrap());
                        next_b = Some(tb);
                    }
                    Ordering::Less => {
                        out.push(tb);
                        next_b = b.next();
                    }
                    Ordering::Equal => {
                        let s = field.add(ca, &tb.1);
                        let (pa, _) = a.next().unwrap();
                        if !field.is_zero(&s) {
                            out.push((pa, s));
                        }
                        next_b = b.next();
                    }
                },
            }
        }
        out
    }

    fn find_divisor<'b>(basis: &'b [Vector], pos: &Pos, skip: Option<usize>) -> Option<&'b Vector> {
        basis.iter().enumerate().find_map(|(k, g)| {
            (Some(k) != skip && g[0].0.comp == pos.comp && g[0].0.mono.divides(&pos.mono))
                .then_some(g)
        })
    }

    /// Full normal form: repeatedly cancels the largest reducible term using
    /// the first basis element (in stored order) whose leading term divides it.
    pub fn normal_form(&self, f: Vector, basis: &[Vector]) -> Vector {
        self.normal_form_skipping(f, basis, None)
    }

    fn normal_form_skipping(&self, f: Vector, basis: &[Vector], skip: Option<usize>) -> Vector {
        let field = self.ring.field();
        let mut p = f;
        let mut start = 0;
        let mut rem: Vector = Vec::new();
        while start < p.len() {
            let (pos, c) = &p[start];
            match Self::find_divisor(basis, pos, skip) {
                Some(g) => {
                    let q = g[0].0.mono.quotient_of(&pos.mono).unwrap();
                    let coef = field.neg(&field.div(c, &g[0].1));
                    rem.extend(p.drain(..start));
                    p = self.add_scaled(p, g, &coef, &q);
                    start = 0;
                }
                None => start += 1,
            }
        }
        rem.extend(p);
        rem
    }

    fn monic(&self, v: Vector) -> Vector {
        let field = self.ring.field();
        if v.is_empty() || field.is_one(&v[0].1) {
            return v;
        }
        let inv = field.inv(&v[0].1);
        v.into_iter().map(|(p, c)| (p, field.mul(&inv, &c))).collect()
    }

    fn degree(v: &[(Pos, Coeff)]) -> u64 {
        v.iter().map(|(p, _)| p.mono.degree()).max().unwrap_or(0)
    }

    /// Reduced Gröbner basis of the submodule generated by `gens`, sorted by
    /// increasing leading term. Pairs are selected by sugar degree.
    pub fn groebner(&self, gens: Vec<Vector>, rank: usize) -> Result<Vec<Vector>> {
        let limits = self.ring.limits();
        let is_ideal = rank == 1;
        let mut basis: Vec<Vector> = Vec::new();
        let mut sugar: Vec<u64> = Vec::new();
        // (sugar, lcm degree, creation index, i, j) with i < j
        let mut queue: BTreeSet<(u64, u64, usize, usize, usize)> = BTreeSet::new();
        let mut pending: HashSet<(usize, usize)> = HashSet::new();
        let mut created = 0usize;
        let mut processed = 0usize;

        let insert = |v: Vector,
                      ev: u64,
                      basis: &mut Vec<Vector>,
                      sugar: &mut Vec<u64>,
                      queue: &mut BTreeSet<(u64, u64, usize, usize, usize)>,
                      pending: &mut HashSet<(usize, usize)>,
                      created: &mut usize|
         -> Result<()> {
            if Self::degree(&v) > limits.max_degree {
                return Err(Error::ResourceLimit(format!(
                    "basis element of degree {} exceeds {}",
                    Self::degree(&v),
                    limits.max_degree
                )));
            }
            let j = basis.len();
            for (i, g) in basis.iter().enumerate() {
                if g[0].0.comp != v[0].0.comp {
                    continue;
                }
                let lcm = g[0].0.mono.lcm(&v[0].0.mono);
                let deg = lcm.degree();
                let e = (sugar[i] + deg - g[0].0.mono.degree())
                    .max(ev + deg - v[0].0.mono.degree());
                queue.insert((e, deg, *created, i, j));
                pending.insert((i, j));
                *created += 1;
            }
            basis.push(v);
            sugar.push(ev);
            if basis.len() > limits.max_basis {
                return Err(Error::ResourceLimit(format!(
                    "basis size exceeds {}",
                    limits.max_basis
                )));
            }
            Ok(())
        };

        for g in gens {
            if g.is_empty() {
                continue;
            }
            if is_ideal && g[0].0.mono.is_one() {
                return Ok(vec![self.monic(g)]);
            }
            let e = Self::degree(&g);
            insert(self.monic(g), e, &mut basis, &mut sugar, &mut queue, &mut pending, &mut created)?;
        }

        while let Some((e, deg, _, i, j)) = queue.pop_first() {
            pending.remove(&(i, j));
            processed += 1;
            if processed > limits.max_pairs {
                return Err(Error::ResourceLimit(format!(
                    "more than {} critical pairs",
                    limits.max_pairs
                )));
            }
            if deg > limits.max_degree {
                return Err(Error::ResourceLimit(format!(
                    "pair of degree {deg} exceeds {}",
                    limits.max_degree
                )));
            }
            let (li, lj) = (&basis[i][0].0, &basis[j][0].0);
            if is_ideal && li.mono.is_coprime(&lj.mono) {
                continue;
            }
            let lcm = li.mono.lcm(&lj.mono);
            let comp = li.comp;
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && basis[k][0].0.comp == comp
                    && basis[k][0].0.mono.divides(&lcm)
                    && !pending.contains(&(i.min(k), i.max(k)))
                    && !pending.contains(&(j.min(k), j.max(k)))
            });
            if chain {
                continue;
            }
            let s = self.s_vector(&basis[i], &basis[j]);
            let r = self.normal_form(s, &basis);
            if r.is_empty() {
                continue;
            }
            let r = self.monic(r);
            if is_ideal && r[0].0.mono.is_one() {
                return Ok(vec![r]);
            }
            let e = e.max(Self::degree(&r));
            insert(r, e, &mut basis, &mut sugar, &mut queue, &mut pending, &mut created)?;
        }

        Ok(self.reduce_basis(basis))
    }

    /// S-vector of two elements whose leading terms share a component.
    pub fn s_vector(&self, f: &[(Pos, Coeff)], g: &[(Pos, Coeff)]) -> Vector {
        let field = self.ring.field();
        let lcm = f[0].0.mono.lcm(&g[0].0.mono);
        let uf = f[0].0.mono.quotient_of(&lcm).unwrap();
        let ug = g[0].0.mono.quotient_of(&lcm).unwrap();
        let cf = field.inv(&f[0].1);
        let cg = field.neg(&field.inv(&g[0].1));
        let a = self.add_scaled(Vec::new(), f, &cf, &uf);
        self.add_scaled(a, g, &cg, &ug)
    }

    /// Minimal, tail-reduced, monic, sorted by increasing leading term.
    pub fn reduce_basis(&self, mut basis: Vec<Vector>) -> Vec<Vector> {
        basis.retain(|v| !v.is_empty());
        basis.sort_by(|a, b| self.cmp(&a[0].0, &b[0].0));
        let mut kept: Vec<Vector> = Vec::new();
        for g in basis {
            let lead = &g[0].0;
            if kept
                .iter()
                .any(|h| h[0].0.comp == lead.comp && h[0].0.mono.divides(&lead.mono))
            {
                continue;
            }
            kept.push(g);
        }
        let mut out = Vec::with_capacity(kept.len());
        for i in 0..kept.len() {
            let r = self.normal_form_skipping(kept[i].clone(), &kept, Some(i));
            out.push(self.monic(r));
        }
        out
    }
}
