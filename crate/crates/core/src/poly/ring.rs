use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

use super::field::CoefficientField;
use super::monomial::{Monomial, MonomialOrder};
use super::Polynomial;

/// Caps on Gröbner basis computations. Exceeding any of them yields
/// [`Error::ResourceLimit`] instead of a runaway computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResourceLimits {
    /// Maximum number of critical pairs processed.
    pub max_pairs: usize,
    /// Maximum total degree of any basis element or pair lcm.
    pub max_degree: u64,
    /// Maximum number of basis elements.
    pub max_basis: usize,
}

impl Default for ResourceLimits {
    fn default() -> Self {
        ResourceLimits {
            max_pairs: 50_000,
            max_degree: 60,
            max_basis: 5_000,
        }
    }
}

/// Where new variables go when extending a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Placement {
    Front,
    Back,
}

struct RingData {
    variables: Vec<String>,
    field: CoefficientField,
    order: MonomialOrder,
    limits: ResourceLimits,
}

/// `k[x_1, ..., x_n]` together with a monomial order. Cheap to clone.
///
/// Two rings are equal when they have the same variables, field and order;
/// resource limits are a computation setting and do not take part.
#[derive(Clone)]
pub struct PolyRing(Arc<RingData>);

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(
        variables: &[S],
        field: CoefficientField,
        order: MonomialOrder,
    ) -> Result<Self> {
        let mut vars: Vec<String> = Vec::with_capacity(variables.len());
        for v in variables {
            let v = v.as_ref().trim();
            if !is_identifier(v) {
                return Err(Error::InvalidVariable(v.to_string()));
            }
            if vars.iter().any(|w| w == v) {
                return Err(Error::DuplicateVariable(v.to_string()));
            }
            vars.push(v.to_string());
        }
        if let MonomialOrder::Block(k) = order {
            if k > vars.len() {
                return Err(Error::InvalidArgument(format!(
                    "block split {k} exceeds {} variables",
                    vars.len()
                )));
            }
        }
        Ok(PolyRing(Arc::new(RingData {
            variables: vars,
            field,
            order,
            limits: ResourceLimits::default(),
        })))
    }

    pub fn with_limits(&self, limits: ResourceLimits) -> Self {
        PolyRing(Arc::new(RingData {
            variables: self.0.variables.clone(),
            field: self.0.field,
            order: self.0.order,
            limits,
        }))
    }

    /// Same variables and field under a different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Self> {
        Ok(PolyRing::new(&self.0.variables, self.0.field, order)?.with_limits(self.0.limits))
    }

    pub fn variables(&self) -> &[String] {
        &self.0.variables
    }

    pub fn nvars(&self) -> usize {
        self.0.variables.len()
    }

    pub fn field(&self) -> CoefficientField {
        self.0.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    pub fn limits(&self) -> ResourceLimits {
        self.0.limits
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.variables.iter().position(|v| v == name)
    }

    pub fn var(&self, name: &str) -> Result<Polynomial> {
        let i = self
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Polynomial::var(self, i))
    }

    /// Adjoins `new_vars` and returns the larger ring with the embedding of this one.
    pub fn extend<S: AsRef<str>>(
        &self,
        new_vars: &[S],
        placement: Placement,
        order: MonomialOrder,
    ) -> Result<(PolyRing, Embedding)> {
        let new: Vec<String> = new_vars.iter().map(|s| s.as_ref().to_string()).collect();
        for v in &new {
            if self.var_index(v).is_some() {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        let (vars, offset) = match placement {
            Placement::Front => {
                let mut vars = new.clone();
                vars.extend(self.0.variables.iter().cloned());
                (vars, new.len())
            }
            Placement::Back => {
                let mut vars = self.0.variables.clone();
                vars.extend(new.iter().cloned());
                (vars, 0)
            }
        };
        let target = PolyRing::new(&vars, self.0.field, order)?.with_limits(self.0.limits);
        let positions = (0..self.nvars()).map(|i| i + offset).collect();
        Ok((target.clone(), Embedding { target, positions }))
    }

    /// Adjoins fresh variables in front under a block elimination order.
    /// Names are derived from `stem` and made unique against existing variables.
    pub fn extend_front_eliminating(&self, stems: &[String]) -> (PolyRing, Embedding) {
        let names = self.fresh_names(stems);
        self.extend(&names, Placement::Front, MonomialOrder::Block(names.len()))
            .expect("fresh names cannot collide")
    }

    pub(crate) fn fresh_names(&self, stems: &[String]) -> Vec<String> {
        let mut out: Vec<String> = Vec::with_capacity(stems.len());
        for stem in stems {
            let mut name = stem.clone();
            while self.var_index(&name).is_some() || out.contains(&name) {
                name.push('_');
            }
            out.push(name);
        }
        out
    }
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.variables == other.0.variables
                && self.0.field == other.0.field
                && self.0.order == other.0.order)
    }
}

impl Eq for PolyRing {}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}[{}] ({})",
            self.0.field,
            self.0.variables.join(", "),
            self.0.order
        )
    }
}

/// Variable-renaming ring map `source -> target`, injective on variables.
#[derive(Clone, Debug)]
pub struct Embedding {
    target: PolyRing,
    /// `positions[i]` is the target index of source variable `i`.
    positions: Vec<usize>,
}

impl Embedding {
    /// Embeds `source` into `target` by matching variable names.
    pub fn by_name(source: &PolyRing, target: &PolyRing) -> Result<Self> {
        let positions = source
            .variables()
            .iter()
            .map(|v| {
                target
                    .var_index(v)
                    .ok_or_else(|| Error::UnknownVariable(v.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        if source.field() != target.field() {
            return Err(Error::RingMismatch);
        }
        Ok(Embedding {
            target: target.clone(),
            positions,
        })
    }

    pub fn target(&self) -> &PolyRing {
        &self.target
    }

    pub fn map_monomial(&self, m: &Monomial) -> Monomial {
        let mut e = vec![0; self.target.nvars()];
        for (i, &x) in m.exponents().iter().enumerate() {
            e[self.positions[i]] = x;
        }
        Monomial::new(e)
    }

    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        Polynomial::from_terms(
            &self.target,
            f.terms()
                .iter()
                .map(|(m, c)| (self.map_monomial(m), c.clone()))
                .collect(),
        )
    }
}

/// Restriction of polynomials that only involve a subset of variables to a
/// smaller ring, matching variables by name.
pub(crate) fn restrict(f: &Polynomial, target: &PolyRing) -> Result<Polynomial> {
    let src = f.ring();
    let map: Vec<Option<usize>> = src
        .variables()
        .iter()
        .map(|v| target.var_index(v))
        .collect();
    let mut terms = Vec::with_capacity(f.terms().len());
    for (m, c) in f.terms() {
        let mut e = vec![0; target.nvars()];
        for (i, &x) in m.exponents().iter().enumerate() {
            if x == 0 {
                continue;
            }
            match map[i] {
                Some(j) => e[j] = x,
                None => return Err(Error::UnknownVariable(src.variables()[i].clone())),
            }
        }
        terms.push((Monomial::new(e), c.clone()));
    }
    Ok(Polynomial::from_terms(target, terms))
}
