//! Session files: one `[ring]` section followed by named objects.
//!
//! ```text
//! [ring]
//! vars = x, y, z
//! field = Q            # or: Fp 32003
//! order = grevlex      # or: lex
//!
//! [poly f]
//! x^2 - y
//!
//! [matrix A]           # rows of semicolon-separated entries
//! y; z; 0
//! -x; 0; z
//!
//! [matrix F]
//! shape = 3x0          # needed only for matrices without columns
//!
//! [vector b]
//! x; y; z
//!
//! [ideal I]            # comma- or line-separated generators
//! x*y, x*z
//!
//! [prime P]
//! gens = x, y
//! asserted = true
//!
//! [certificate C]
//! kind = user_asserted
//! note = Sym(M) is a domain
//! ```
//!
//! An ideal or prime generator that is exactly the name of an earlier
//! `[poly]` stands for that polynomial.

use std::collections::BTreeMap;

use ghbounds::checks::PrimeWitness;
use ghbounds::{
    CoefficientField, FreeModuleElement, Ideal, MonomialOrder, PolyMatrix, PolyRing, Polynomial,
    ResourceLimits,
};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SessionError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Algebra {
        line: usize,
        #[source]
        source: ghbounds::Error,
    },
    #[error("no object named `{name}` of kind {kind}")]
    Missing { name: String, kind: &'static str },
}

/// How the user vouches for `Sym(M)` being equidimensional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateSpec {
    /// Must be confirmed by the complete-intersection test.
    CompleteIntersection,
    UserAsserted { note: String },
}

#[derive(Clone, Debug)]
pub enum Object {
    Poly(Polynomial),
    Matrix(PolyMatrix),
    Vector(Vec<Polynomial>),
    Ideal(Ideal),
    Prime(PrimeWitness),
    Certificate(CertificateSpec),
}

impl Object {
    fn kind(&self) -> &'static str {
        match self {
            Object::Poly(_) => "poly",
            Object::Matrix(_) => "matrix",
            Object::Vector(_) => "vector",
            Object::Ideal(_) => "ideal",
            Object::Prime(_) => "prime",
            Object::Certificate(_) => "certificate",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Session {
    pub ring: PolyRing,
    objects: BTreeMap<String, Object>,
}

struct Section {
    kind: String,
    name: Option<String>,
    line: usize,
    body: Vec<(usize, String)>,
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn split_sections(src: &str) -> Result<Vec<Section>, SessionError> {
    let mut sections: Vec<Section> = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let line = i + 1;
        let text = strip_comment(raw);
        if text.is_empty() {
            continue;
        }
        if let Some(header) = text.strip_prefix('[') {
            let header = header.strip_suffix(']').ok_or_else(|| SessionError::Parse {
                line,
                msg: format!("unterminated section header `{text}`"),
            })?;
            let mut words = header.split_whitespace();
            let kind = words.next().unwrap_or("").to_string();
            let name = words.next().map(str::to_string);
            if words.next().is_some() {
                return Err(SessionError::Parse {
                    line,
                    msg: format!("section header `{text}` has extra words"),
                });
            }
            sections.push(Section {
                kind,
                name,
                line,
                body: Vec::new(),
            });
            continue;
        }
        match sections.last_mut() {
            Some(s) => s.body.push((line, text.to_string())),
            None => {
                return Err(SessionError::Parse {
                    line,
                    msg: "content before the first section".into(),
                })
            }
        }
    }
    Ok(sections)
}

fn key_value(line: usize, text: &str) -> Result<(String, String), SessionError> {
    let (k, v) = text.split_once('=').ok_or_else(|| SessionError::Parse {
        line,
        msg: format!("expected `key = value`, found `{text}`"),
    })?;
    Ok((k.trim().to_string(), v.trim().to_string()))
}

fn keyed(section: &Section, allowed: &[&str]) -> Result<BTreeMap<String, (usize, String)>, SessionError> {
    let mut out = BTreeMap::new();
    for (line, text) in &section.body {
        let (k, v) = key_value(*line, text)?;
        if !allowed.contains(&k.as_str()) {
            return Err(SessionError::Parse {
                line: *line,
                msg: format!("unknown key `{k}` in [{}]", section.kind),
            });
        }
        if out.insert(k.clone(), (*line, v)).is_some() {
            return Err(SessionError::Parse {
                line: *line,
                msg: format!("key `{k}` given twice"),
            });
        }
    }
    Ok(out)
}

fn parse_ring(section: &Section, limits: ResourceLimits) -> Result<PolyRing, SessionError> {
    let kv = keyed(section, &["vars", "field", "order"])?;
    let (vline, vars) = kv.get("vars").cloned().ok_or_else(|| SessionError::Parse {
        line: section.line,
        msg: "[ring] needs `vars`".into(),
    })?;
    let vars: Vec<&str> = vars.split(',').map(str::trim).collect();
    let field = match kv.get("field") {
        None => CoefficientField::Rationals,
        Some((line, f)) => {
            let words: Vec<&str> = f.split_whitespace().collect();
            match words.as_slice() {
                ["Q"] => CoefficientField::Rationals,
                ["Fp", p] => {
                    let p: u64 = p.parse().map_err(|_| SessionError::Parse {
                        line: *line,
                        msg: format!("invalid characteristic `{p}`"),
                    })?;
                    CoefficientField::prime(p)
                        .map_err(|source| SessionError::Algebra { line: *line, source })?
                }
                _ => {
                    return Err(SessionError::Parse {
                        line: *line,
                        msg: format!("field must be `Q` or `Fp <p>`, found `{f}`"),
                    })
                }
            }
        }
    };
    let order = match kv.get("order") {
        None => MonomialOrder::GrevLex,
        Some((line, o)) => MonomialOrder::parse(o).ok_or_else(|| SessionError::Parse {
            line: *line,
            msg: format!("order must be `grevlex` or `lex`, found `{o}`"),
        })?,
    };
    let ring = PolyRing::new(&vars, field, order)
        .map_err(|source| SessionError::Algebra { line: vline, source })?;
    Ok(ring.with_limits(limits))
}

impl Session {
    pub fn parse(src: &str, limits: ResourceLimits) -> Result<Session, SessionError> {
        let sections = split_sections(src)?;
        let Some(first) = sections.first() else {
            return Err(SessionError::Parse {
                line: 1,
                msg: "empty session: a [ring] section is required".into(),
            });
        };
        if first.kind != "ring" || first.name.is_some() {
            return Err(SessionError::Parse {
                line: first.line,
                msg: "the first section must be [ring]".into(),
            });
        }
        let ring = parse_ring(first, limits)?;
        let mut session = Session {
            ring,
            objects: BTreeMap::new(),
        };
        for s in &sections[1..] {
            let name = s.name.clone().ok_or_else(|| SessionError::Parse {
                line: s.line,
                msg: format!("[{}] needs a name", s.kind),
            })?;
            if session.objects.contains_key(&name) {
                return Err(SessionError::Parse {
                    line: s.line,
                    msg: format!("name `{name}` is already defined"),
                });
            }
            let obj = session.parse_object(s)?;
            session.objects.insert(name, obj);
        }
        Ok(session)
    }

    fn poly(&self, line: usize, src: &str) -> Result<Polynomial, SessionError> {
        let src = src.trim();
        if self.ring.var_index(src).is_none() {
            if let Some(Object::Poly(p)) = self.objects.get(src) {
                return Ok(p.clone());
            }
        }
        Polynomial::parse(src, &self.ring).map_err(|source| SessionError::Algebra { line, source })
    }

    fn polys(&self, line: usize, src: &str, sep: char) -> Result<Vec<Polynomial>, SessionError> {
        src.split(sep)
            .filter(|s| !s.trim().is_empty())
            .map(|s| self.poly(line, s))
            .collect()
    }

    fn body_polys(&self, s: &Section, sep: char) -> Result<Vec<Polynomial>, SessionError> {
        let mut out = Vec::new();
        for (line, text) in &s.body {
            out.extend(self.polys(*line, text, sep)?);
        }
        Ok(out)
    }

    fn parse_object(&self, s: &Section) -> Result<Object, SessionError> {
        let algebra = |source| SessionError::Algebra { line: s.line, source };
        match s.kind.as_str() {
            "poly" => {
                let text: Vec<&str> = s.body.iter().map(|(_, t)| t.as_str()).collect();
                if text.is_empty() {
                    return Err(SessionError::Parse {
                        line: s.line,
                        msg: "empty [poly] section".into(),
                    });
                }
                Ok(Object::Poly(self.poly(s.body[0].0, &text.join(" "))?))
            }
            "matrix" => self.parse_matrix(s),
            "vector" => Ok(Object::Vector(self.body_polys(s, ';')?)),
            "ideal" => Ok(Object::Ideal(
                Ideal::new(&self.ring, self.body_polys(s, ',')?).map_err(algebra)?,
            )),
            "prime" => {
                let kv = keyed(s, &["gens", "asserted"])?;
                let gens = match kv.get("gens") {
                    Some((line, g)) => self.polys(*line, g, ',')?,
                    None => Vec::new(),
                };
                let asserted = match kv.get("asserted") {
                    None => false,
                    Some((_, v)) if v == "true" => true,
                    Some((_, v)) if v == "false" => false,
                    Some((line, v)) => {
                        return Err(SessionError::Parse {
                            line: *line,
                            msg: format!("asserted must be `true` or `false`, found `{v}`"),
                        })
                    }
                };
                let ideal = Ideal::new(&self.ring, gens).map_err(algebra)?;
                let label = s.name.clone().unwrap_or_default();
                Ok(Object::Prime(
                    PrimeWitness::new(ideal, asserted, label).map_err(algebra)?,
                ))
            }
            "certificate" => {
                let kv = keyed(s, &["kind", "note"])?;
                let note = kv.get("note").map(|(_, n)| n.clone()).unwrap_or_default();
                match kv.get("kind").map(|(l, k)| (*l, k.as_str())) {
                    Some((_, "complete_intersection")) => {
                        Ok(Object::Certificate(CertificateSpec::CompleteIntersection))
                    }
                    Some((_, "user_asserted")) => {
                        Ok(Object::Certificate(CertificateSpec::UserAsserted { note }))
                    }
                    Some((line, k)) => Err(SessionError::Parse {
                        line,
                        msg: format!(
                            "certificate kind must be `complete_intersection` or `user_asserted`, found `{k}`"
                        ),
                    }),
                    None => Err(SessionError::Parse {
                        line: s.line,
                        msg: "[certificate] needs `kind`".into(),
                    }),
                }
            }
            other => Err(SessionError::Parse {
                line: s.line,
                msg: format!("unknown section kind `{other}`"),
            }),
        }
    }

    fn parse_matrix(&self, s: &Section) -> Result<Object, SessionError> {
        let mut shape = None;
        let mut rows = Vec::new();
        for (line, text) in &s.body {
            if let Some(rest) = text.strip_prefix("shape") {
                if let Some(dims) = rest.trim_start().strip_prefix('=') {
                    let parsed = dims
                        .trim()
                        .split_once('x')
                        .and_then(|(r, c)| Some((r.trim().parse().ok()?, c.trim().parse().ok()?)));
                    shape = Some(parsed.ok_or_else(|| SessionError::Parse {
                        line: *line,
                        msg: format!("shape must look like `3x2`, found `{}`", dims.trim()),
                    })?);
                    continue;
                }
            }
            rows.push((*line, self.polys(*line, text, ';')?));
        }
        let line = s.line;
        let cols = rows.first().map(|(_, r)| r.len());
        if let Some((l, r)) = rows.iter().find(|(_, r)| Some(r.len()) != cols) {
            return Err(SessionError::Parse {
                line: *l,
                msg: format!("row has {} entries, expected {}", r.len(), cols.unwrap_or(0)),
            });
        }
        let (nrows, ncols) = match (shape, cols) {
            (Some((r, c)), None) if c == 0 => (r, 0),
            (Some((r, c)), None) => {
                return Err(SessionError::Parse {
                    line,
                    msg: format!("shape {r}x{c} given but no rows"),
                })
            }
            (Some(sh), Some(c)) if sh != (rows.len(), c) => {
                return Err(SessionError::Parse {
                    line,
                    msg: format!("shape {}x{} does not match {}x{c} rows", sh.0, sh.1, rows.len()),
                })
            }
            (_, Some(c)) => (rows.len(), c),
            (None, None) => {
                return Err(SessionError::Parse {
                    line,
                    msg: "empty matrix: give `shape = Rx0` for a matrix without columns".into(),
                })
            }
        };
        let entries = rows.into_iter().flat_map(|(_, r)| r).collect();
        PolyMatrix::new(&self.ring, nrows, ncols, entries)
            .map(Object::Matrix)
            .map_err(|source| SessionError::Algebra { line, source })
    }

    fn get(&self, name: &str, kind: &'static str) -> Result<&Object, SessionError> {
        match self.objects.get(name) {
            Some(o) if o.kind() == kind => Ok(o),
            _ => Err(SessionError::Missing {
                name: name.to_string(),
                kind,
            }),
        }
    }

    pub fn matrix(&self, name: &str) -> Result<&PolyMatrix, SessionError> {
        match self.get(name, "matrix")? {
            Object::Matrix(m) => Ok(m),
            _ => unreachable!(),
        }
    }

    pub fn vector(&self, name: &str) -> Result<&[Polynomial], SessionError> {
        match self.get(name, "vector")? {
            Object::Vector(v) => Ok(v),
            _ => unreachable!(),
        }
    }

    pub fn element(&self, name: &str) -> Result<FreeModuleElement, SessionError> {
        let v = self.vector(name)?;
        FreeModuleElement::new(&self.ring, v.to_vec())
            .map_err(|source| SessionError::Algebra { line: 0, source })
    }

    /// An `[ideal]`, the ideal of a `[prime]`, or the principal ideal of a `[poly]`.
    pub fn ideal(&self, name: &str) -> Result<Ideal, SessionError> {
        match self.objects.get(name) {
            Some(Object::Ideal(i)) => Ok(i.clone()),
            Some(Object::Prime(p)) => Ok(p.ideal.clone()),
            Some(Object::Poly(f)) => Ok(Ideal::new(&self.ring, vec![f.clone()]).expect("same ring")),
            _ => Err(SessionError::Missing {
                name: name.to_string(),
                kind: "ideal",
            }),
        }
    }

    /// A `[prime]` section; `0` and `m` name the zero and maximal ideal at the origin.
    pub fn prime(&self, name: &str) -> Result<PrimeWitness, SessionError> {
        match (self.objects.get(name), name) {
            (Some(Object::Prime(p)), _) => Ok(p.clone()),
            (None, "0") => Ok(PrimeWitness::zero(&self.ring)),
            (None, "m") => Ok(PrimeWitness::origin(&self.ring)),
            _ => Err(SessionError::Missing {
                name: name.to_string(),
                kind: "prime",
            }),
        }
    }

    pub fn certificate(&self, name: &str) -> Result<&CertificateSpec, SessionError> {
        match self.get(name, "certificate")? {
            Object::Certificate(c) => Ok(c),
            _ => unreachable!(),
        }
    }
}
