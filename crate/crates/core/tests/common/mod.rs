//! Independent oracles for integration tests. They share no algorithm with
//! the library: membership and syzygies come from dense linear algebra over
//! `F_p` on truncated monomial spaces, dimension from unpruned subset search.
#![allow(dead_code)]

use std::collections::HashMap;

use ghbounds::dimension::krull_dim;
use ghbounds::poly::{Coeff, Monomial};
use ghbounds::{
    CoefficientField, FreeModuleElement, Ideal, MonomialOrder, PolyMatrix, PolyRing, Polynomial,
};
use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

pub fn ring(vars: &[&str]) -> PolyRing {
    PolyRing::new(vars, CoefficientField::Rationals, MonomialOrder::GrevLex).unwrap()
}

pub fn ring_fp(vars: &[&str], p: u64) -> PolyRing {
    PolyRing::new(vars, CoefficientField::prime(p).unwrap(), MonomialOrder::GrevLex).unwrap()
}

pub fn strings(v: &[Polynomial]) -> Vec<String> {
    v.iter().map(|p| p.to_string()).collect()
}

pub fn koszul(r: &PolyRing) -> PolyMatrix {
    PolyMatrix::parse_rows(r, &["y; z; 0", "-x; 0; z", "0; -x; -y"]).unwrap()
}

fn residue(c: &Coeff, p: u64) -> u64 {
    match c {
        Coeff::Modular(v) => *v as u64 % p,
        Coeff::Rational(q) => {
            let m = |v: &num_bigint::BigInt| -> u64 {
                let r = v % num_bigint::BigInt::from(p);
                let r: i64 = r.try_into().unwrap();
                r.rem_euclid(p as i64) as u64
            };
            let (n, d) = (m(q.numer()), m(q.denom()));
            assert!(d != 0, "denominator divisible by the oracle prime");
            n * pow_mod(d, p - 2, p) % p
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// All exponent vectors of total degree `≤ d`.
pub fn monomials_up_to(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(nvars: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == nvars {
            out.push(prefix.clone());
            return;
        }
        for e in 0..=d {
            prefix.push(e);
            rec(nvars, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, d, &mut Vec::new(), &mut out);
    out
}

/// Row echelon form over `F_p`, each new row reduced against the earlier ones.
pub struct Echelon {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    pub fn new(p: u64) -> Self {
        Echelon { p, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        let p = self.p;
        for (piv, row) in &self.rows {
            let c = v[*piv];
            if c != 0 {
                for k in *piv..v.len() {
                    v[k] = (v[k] + (p - c) * row[k]) % p;
                }
            }
        }
        v
    }

    /// Adds `v`; false when it was already in the span.
    pub fn insert(&mut self, v: Vec<u64>) -> bool {
        let mut v = self.reduce(v);
        let Some(piv) = v.iter().position(|&c| c != 0) else {
            return false;
        };
        let inv = pow_mod(v[piv], self.p - 2, self.p);
        for c in v.iter_mut() {
            *c = *c * inv % self.p;
        }
        self.rows.push((piv, v));
        true
    }

    pub fn contains(&self, v: Vec<u64>) -> bool {
        self.reduce(v).iter().all(|&c| c == 0)
    }
}

/// Dense coordinates on the polynomials of degree `≤ d`.
pub struct Truncation {
    pub p: u64,
    pub d: u32,
    pub basis: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl Truncation {
    pub fn new(nvars: usize, d: u32, p: u64) -> Self {
        let basis = monomials_up_to(nvars, d);
        let index = basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Truncation { p, d, basis, index }
    }

    /// `None` when `f` has a term of degree above `d`.
    pub fn coords(&self, f: &Polynomial) -> Option<Vec<u64>> {
        let mut v = vec![0; self.basis.len()];
        for (m, c) in f.terms() {
            let i = *self.index.get(m.exponents())?;
            v[i] = residue(c, self.p);
        }
        Some(v)
    }

    /// Span of `m·g` over generators `g` and monomials `m` with `deg(m·g) ≤ d`.
    pub fn span(&self, gens: &[Polynomial]) -> Echelon {
        let mut e = Echelon::new(self.p);
        for g in gens.iter().filter(|g| !g.is_zero()) {
            let dg = g.total_degree().unwrap() as u32;
            if dg > self.d {
                continue;
            }
            let r = g.ring();
            for m in monomials_up_to(r.nvars(), self.d - dg) {
                let mg = g.mul_term(&Monomial::new(m), &r.field().one());
                e.insert(self.coords(&mg).unwrap());
            }
        }
        e
    }
}

/// `f ∈ (gens)` witnessed by multipliers with `deg(h_i g_i) ≤ D` for some
/// `D ≤ max_degree`, by linear algebra over `F_p`.
pub fn truncated_member(f: &Polynomial, gens: &[Polynomial], p: u64, max_degree: u32) -> bool {
    if f.is_zero() {
        return true;
    }
    let nvars = f.ring().nvars();
    let start = f.total_degree().unwrap() as u32;
    for d in start..=max_degree.max(start) {
        let t = Truncation::new(nvars, d, p);
        if t.span(gens).contains(t.coords(f).unwrap()) {
            return true;
        }
    }
    false
}

/// `dim R/I` by checking every variable subset, with no pruning.
pub fn subset_dim(ideal: &Ideal) -> i64 {
    let gb = ideal.groebner_basis().unwrap();
    if gb.iter().any(|g| g.is_unit()) {
        return -1;
    }
    let n = ideal.ring().nvars();
    let supports: Vec<u64> = gb
        .iter()
        .map(|g| {
            g.leading_monomial()
                .unwrap()
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0u64, |m, (i, _)| m | 1 << i)
        })
        .collect();
    let mut best = 0;
    for s in 0u64..(1 << n) {
        if supports.iter().all(|&sup| sup & s != sup) {
            best = best.max(s.count_ones() as i64);
        }
    }
    best
}

/// Basis of the `F_p`-space of syzygies `v` of the columns of `a` whose
/// entries have degree `≤ d`, as polynomial vectors in `a`'s ring.
pub fn low_degree_syzygies(a: &PolyMatrix, d: u32, p: u64) -> Vec<FreeModuleElement> {
    let ring = a.ring();
    let nvars = ring.nvars();
    let monos = monomials_up_to(nvars, d);
    let max_entry = a
        .entries()
        .iter()
        .filter_map(|e| e.total_degree())
        .max()
        .unwrap_or(0) as u32;
    let image = Truncation::new(nvars, d + max_entry, p);
    // unknowns: (column j, monomial k); equations: coefficients of A·v
    let unknowns: Vec<(usize, &Vec<u32>)> = (0..a.cols())
        .flat_map(|j| monos.iter().map(move |m| (j, m)))
        .collect();
    let width = image.basis.len() * a.rows();
    let one = ring.field().one();
    let columns: Vec<Vec<u64>> = unknowns
        .iter()
        .map(|(j, m)| {
            let mut v = Vec::with_capacity(width);
            for i in 0..a.rows() {
                let e = a.get(i, *j).mul_term(&Monomial::new((*m).clone()), &one);
                v.extend(image.coords(&e).unwrap());
            }
            v
        })
        .collect();
    // nullspace of the map unknowns -> equations, via echelon form of the
    // augmented rows [column | unit vector]
    let mut e = Echelon::new(p);
    let mut kernel = Vec::new();
    for (k, col) in columns.into_iter().enumerate() {
        let mut row = col;
        row.extend((0..unknowns.len()).map(|l| (l == k) as u64));
        let reduced = e.reduce(row.clone());
        if reduced[..width].iter().all(|&c| c == 0) {
            kernel.push(reduced[width..].to_vec());
        }
        e.insert(row);
    }
    kernel
        .into_iter()
        .map(|coeffs| {
            let comps = (0..a.cols())
                .map(|j| {
                    let terms = unknowns
                        .iter()
                        .zip(&coeffs)
                        .filter(|((jj, _), &c)| *jj == j && c != 0)
                        .map(|((_, m), &c)| (Monomial::new((*m).clone()), field_coeff(ring, c, p)))
                        .collect();
                    Polynomial::from_terms(ring, terms)
                })
                .collect();
            FreeModuleElement::new(ring, comps).unwrap()
        })
        .collect()
}

fn field_coeff(ring: &PolyRing, c: u64, p: u64) -> Coeff {
    match ring.field() {
        CoefficientField::Prime(q) => {
            assert_eq!(q as u64, p, "syzygy oracle runs in the ring's own field");
            Coeff::Modular(c as u32)
        }
        CoefficientField::Rationals => panic!("syzygy oracle needs a prime field"),
    }
}

/// `f ∈ √I` witnessed by `f^k ∈ I` for some `k ≤ max_power`.
pub fn power_member(f: &Polynomial, ideal: &Ideal, max_power: u32) -> bool {
    (1..=max_power).any(|k| ideal.contains(&f.pow(k)).unwrap())
}

/// Height by the subset oracle.
pub fn oracle_height(ideal: &Ideal) -> i64 {
    let d = subset_dim(ideal);
    if d < 0 {
        ideal.ring().nvars() as i64
    } else {
        ideal.ring().nvars() as i64 - d
    }
}

pub fn library_dim(ideal: &Ideal) -> i64 {
    krull_dim(ideal).unwrap().dim
}

/// Small deterministic generator for test fixtures.
pub struct Rng(SplitMix64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(SplitMix64::seed_from_u64(seed))
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.0.next_u64() % n
    }

    pub fn coin(&mut self) -> bool {
        self.0.next_u64() >> 63 == 1
    }

    /// Random polynomial with terms of degree `≤ d`, each monomial present
    /// with probability 1/2 and small nonzero coefficients.
    pub fn poly(&mut self, ring: &PolyRing, d: u32, in_m: bool) -> Polynomial {
        let mut terms = Vec::new();
        for m in monomials_up_to(ring.nvars(), d) {
            if in_m && m.iter().all(|&e| e == 0) {
                continue;
            }
            if self.coin() {
                let c = 1 + self.below(4) as i64;
                let c = if self.coin() { c } else { -c };
                terms.push((Monomial::new(m), ring.field().from_i64(c)));
            }
        }
        Polynomial::from_terms(ring, terms)
    }

    pub fn homogeneous(&mut self, ring: &PolyRing, d: u32) -> Polynomial {
        let mut terms = Vec::new();
        for m in monomials_up_to(ring.nvars(), d) {
            if m.iter().sum::<u32>() == d && self.coin() {
                let c = 1 + self.below(4) as i64;
                terms.push((Monomial::new(m), ring.field().from_i64(c)));
            }
        }
        Polynomial::from_terms(ring, terms)
    }

    pub fn matrix(&mut self, ring: &PolyRing, rows: usize, cols: usize, d: u32, in_m: bool) -> PolyMatrix {
        let entries = (0..rows * cols).map(|_| self.poly(ring, d, in_m)).collect();
        PolyMatrix::new(ring, rows, cols, entries).unwrap()
    }

    pub fn shuffle<T>(&mut self, v: &mut [T]) {
        for i in (1..v.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            v.swap(i, j);
        }
    }
}

/// `S(f, g)` from leading terms, computed without the library's pair code.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let r = f.ring();
    let k = r.field();
    let (mf, cf) = f.leading_term().unwrap();
    let (mg, cg) = g.leading_term().unwrap();
    let l = mf.lcm(mg);
    let a = f.mul_term(&mf.quotient_of(&l).unwrap(), &k.inv(cf));
    let b = g.mul_term(&mg.quotient_of(&l).unwrap(), &k.inv(cg));
    a.checked_sub(&b).unwrap()
}
