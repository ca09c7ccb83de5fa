//! One function per bound. Each evaluates both sides exactly, records the
//! status of every hypothesis, and never assumes one silently.
//!
//! Heights are computed globally in `k[x_1..x_n]`. For homogeneous ideals
//! this equals the height at the origin; otherwise the global height can only
//! be smaller, and the report is marked conservative.

use crate::dimension::{self, krull_dim, matrix_rank, mu_at_prime};
use crate::error::{Error, Result};
use crate::groebner::{radical_member, saturate, FreeModuleElement, Ideal};
use crate::matrix::PolyMatrix;
use crate::modules::{
    determinantal_ideal, dual_presentation, fitting_ideal, minors, order_ideal, row_ideal,
    sym_presentation, EquidimCertificate,
};
use crate::poly::{PolyRing, Polynomial};

use super::report::{BoundReport, Exactness, HypothesisStatus, TheoremId};

use HypothesisStatus::{Asserted, Unverified, Verified};

/// A proper ideal standing in for a prime. Primality is never decided in
/// general: zero and linear ideals are prime, anything else relies on
/// `asserted_prime`.
#[derive(Clone, Debug)]
pub struct PrimeWitness {
    pub ideal: Ideal,
    pub asserted_prime: bool,
    pub label: String,
}

impl PrimeWitness {
    pub fn new(ideal: Ideal, asserted_prime: bool, label: impl Into<String>) -> Result<Self> {
        if ideal.is_unit()? {
            return Err(Error::NonProperIdeal(ideal.to_string()));
        }
        Ok(PrimeWitness {
            ideal,
            asserted_prime,
            label: label.into(),
        })
    }

    pub fn zero(ring: &PolyRing) -> Self {
        PrimeWitness {
            ideal: Ideal::zero(ring),
            asserted_prime: false,
            label: "(0)".into(),
        }
    }

    pub fn origin(ring: &PolyRing) -> Self {
        PrimeWitness {
            ideal: Ideal::origin(ring),
            asserted_prime: false,
            label: "m".into(),
        }
    }

    pub fn primality(&self) -> HypothesisStatus {
        if self.ideal.is_zero() || self.ideal.is_linear() {
            Verified
        } else if self.asserted_prime {
            Asserted
        } else {
            Unverified
        }
    }
}

fn certificate_status(cert: Option<&EquidimCertificate>) -> HypothesisStatus {
    match cert {
        Some(c) if c.is_verified() => Verified,
        Some(_) => Asserted,
        None => Unverified,
    }
}

fn with_certificate(report: BoundReport, cert: Option<&EquidimCertificate>) -> BoundReport {
    let mut r = report.hypothesis("sym_equidimensional", certificate_status(cert));
    r.certificate = cert.map(|c| c.kind_name().to_string());
    if let Some(EquidimCertificate::UserAsserted { note }) = cert {
        r = r.note(format!("equidimensionality asserted: {note}"));
    }
    r
}

/// `rank M = rows - rank A` over a domain.
pub fn module_rank(a: &PolyMatrix) -> Result<i64> {
    Ok(a.rows() as i64 - matrix_rank(a)? as i64)
}

fn check_ring(a: &PolyRing, b: &PolyRing) -> Result<()> {
    if a != b {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

/// `dim R/(b·A) ≥ dim Sym(M) - n` at the origin, reported as
/// `lhs = dim Sym(M) - n`, `rhs = dim R/(b·A)`.
pub fn check_row_ideal_dim(a: &PolyMatrix, b: &FreeModuleElement) -> Result<BoundReport> {
    if !b.in_origin_submodule() {
        return Err(Error::XNotInMN(
            "the vector b has an entry with nonzero constant term".into(),
        ));
    }
    let row = row_ideal(a, b)?;
    let sym = sym_presentation(a);
    let dim_sym = sym.dimension()?.dim;
    let quotient = krull_dim(&row)?;
    let graded = row.is_homogeneous() && sym.defining_ideal.is_homogeneous();
    Ok(BoundReport::new(
        TheoremId::RowIdealDim,
        dim_sym - a.rows() as i64,
        quotient.dim,
        quotient.unit,
    )
    .hypothesis("b_in_m", Verified)
    .hypothesis("graded", HypothesisStatus::from_bool(graded))
    .exactness(if graded {
        Exactness::Exact
    } else {
        Exactness::Conservative
    })
    .note(format!("dim Sym(M) = {dim_sym}")))
}

/// `ht N*(x) ≤ rank N` for `N = coker(psi)` and `x ∈ mN`.
pub fn check_gpit(psi: &PolyMatrix, x: &FreeModuleElement) -> Result<BoundReport> {
    if !x.in_origin_submodule() {
        return Err(Error::XNotInMN(
            "the vector x has an entry with nonzero constant term".into(),
        ));
    }
    let o = order_ideal(psi, x)?;
    let d = krull_dim(&o.ideal)?;
    let vacuous = d.unit || o.ideal.is_zero();
    let mut r = BoundReport::new(TheoremId::Gpit, d.height, module_rank(psi)?, vacuous)
        .hypothesis("x_in_mN", Verified)
        .exactness(Exactness::from_ideals([&o.ideal]))
        .note(format!("order ideal {}", o.ideal));
    if !psi.in_origin_ideal() {
        r = r.note("non_minimal_presentation");
    }
    Ok(r)
}

/// `ht I_t([A | c]) ≤ rows - t + 1` when `I_t(A) = 0` and `c` has entries in `m`.
pub fn check_macaulay_ee(a: &PolyMatrix, c: &[Polynomial], t: usize) -> Result<BoundReport> {
    if minors(a, t)?.iter().any(|m| !m.is_zero()) {
        return Err(Error::HypothesisViolated(format!(
            "I_{t}(A) is not zero"
        )));
    }
    let extended = a.append_column(c)?;
    if !c.iter().all(|e| e.in_origin_ideal()) {
        return Err(Error::XNotInMN(
            "the added column has an entry with nonzero constant term".into(),
        ));
    }
    let it = determinantal_ideal(&extended, t)?;
    let d = krull_dim(&it)?;
    Ok(BoundReport::new(
        TheoremId::MacaulayEe,
        d.height,
        a.rows() as i64 - t as i64 + 1,
        it.is_zero() || d.unit,
    )
    .hypothesis("minors_vanish", Verified)
    .hypothesis("column_in_m", Verified)
    .exactness(Exactness::from_ideals([&it])))
}

/// `ht I_t(A) ≤ rows + cols - 2t + 1` when `I_{t+1}(A) = 0`.
pub fn check_bruns(a: &PolyMatrix, t: usize) -> Result<BoundReport> {
    if minors(a, t + 1)?.iter().any(|m| !m.is_zero()) {
        return Err(Error::HypothesisViolated(format!(
            "I_{}(A) is not zero",
            t + 1
        )));
    }
    let it = determinantal_ideal(a, t)?;
    let d = krull_dim(&it)?;
    Ok(BoundReport::new(
        TheoremId::Bruns,
        d.height,
        (a.rows() + a.cols()) as i64 - 2 * t as i64 + 1,
        it.is_zero() || d.unit,
    )
    .hypothesis("next_minors_vanish", Verified)
    .exactness(Exactness::from_ideals([&it])))
}

/// `ht (b·A) ≤ rows + ht Q - μ_Q(M)`, with `lhs` the least height among the
/// minimal primes of the row ideal.
pub fn check_row_ideal_height(
    a: &PolyMatrix,
    b: &FreeModuleElement,
    cert: Option<&EquidimCertificate>,
    q: &PrimeWitness,
) -> Result<BoundReport> {
    check_ring(a.ring(), q.ideal.ring())?;
    let row = row_ideal(a, b)?;
    let d = krull_dim(&row)?;
    let mu = mu_at_prime(a, &q.ideal)? as i64;
    let rhs = a.rows() as i64 + dimension::height(&q.ideal)? - mu;
    // Q inside √(row ideal) puts Q below every minimal prime of the row ideal
    let below = if q.ideal.is_zero() || d.unit {
        true
    } else {
        let mut ok = true;
        for g in q.ideal.nonzero_generators() {
            if !radical_member(g, &row)? {
                ok = false;
                break;
            }
        }
        ok
    };
    let r = BoundReport::new(TheoremId::RowIdealHeight, d.height, rhs, d.unit)
        .hypothesis("witness_prime", q.primality())
        .hypothesis("witness_below_component", HypothesisStatus::from_bool(below))
        .exactness(Exactness::from_ideals([&row, &q.ideal]))
        .note(format!("Q = {}, mu_Q(M) = {mu}", q.label));
    Ok(with_certificate(r, cert))
}

/// Part of `Fitt_{i-1}` supported away from `Fitt_i`, or `None` when no
/// minimal prime of `Fitt_{i-1}` avoids `Fitt_i`.
pub fn qualifying_component(a: &PolyMatrix, i: usize) -> Result<Option<Ideal>> {
    if i == 0 {
        return Err(Error::HypothesisViolated("i must be positive".into()));
    }
    let prev = fitting_ideal(a, i - 1)?;
    let next = fitting_ideal(a, i)?;
    if next.is_zero() || prev.is_unit()? {
        return Ok(None);
    }
    let j = saturate(&prev, &next)?;
    if j.is_unit()? {
        return Ok(None);
    }
    Ok(Some(j))
}

/// `ht P ≤ i(i - rank M)` for minimal primes `P` of `Fitt_{i-1}` not
/// containing `Fitt_i`; `lhs` is the least such height.
pub fn check_kwiecinski(
    a: &PolyMatrix,
    i: usize,
    cert: Option<&EquidimCertificate>,
) -> Result<BoundReport> {
    let component = qualifying_component(a, i)?;
    let lhs = match &component {
        Some(j) => dimension::height(j)?,
        None => a.ring().nvars() as i64,
    };
    let e = module_rank(a)?;
    let i = i as i64;
    let mut r = BoundReport::new(TheoremId::Kwiecinski, lhs, i * (i - e), component.is_none())
        .hypothesis("i_positive", Verified)
        .exactness(Exactness::Conservative)
        .note("lhs is the least height among minimal primes of Fitt_{i-1} not containing Fitt_i");
    if component.is_none() {
        r = r.note("every minimal prime of Fitt_{i-1} contains Fitt_i");
    }
    Ok(with_certificate(r, cert))
}

/// `ht P ≤ i(i - rank M) + μ_P(M) - i` for a minimal prime `P` of
/// `Fitt_{i-1}`. Without a witness, `lhs = ht Fitt_{i-1}` and `μ_P` is
/// replaced by its upper bound `rows`.
pub fn check_kwiecinski_refined(
    a: &PolyMatrix,
    i: usize,
    cert: Option<&EquidimCertificate>,
    p: Option<&PrimeWitness>,
) -> Result<BoundReport> {
    if i == 0 {
        return Err(Error::InvalidArgument("i must be at least 1".into()));
    }
    let e = module_rank(a)?;
    if (i as i64) < e {
        return Err(Error::HypothesisViolated(format!(
            "i = {i} is below rank M = {e}"
        )));
    }
    let prev = fitting_ideal(a, i - 1)?;
    let ii = i as i64;
    let base = ii * (ii - e) - ii;
    let r = match p {
        Some(p) => {
            check_ring(a.ring(), p.ideal.ring())?;
            if !p.ideal.contains_ideal(&prev)? {
                return Err(Error::WitnessNotContaining(format!(
                    "{} does not contain Fitt_{} = {prev}",
                    p.label,
                    i - 1
                )));
            }
            let hp = dimension::height(&p.ideal)?;
            let mu = mu_at_prime(a, &p.ideal)? as i64;
            // a prime containing Fitt_{i-1} with the same height is minimal over it
            let minimal = if hp == dimension::height(&prev)? {
                Verified
            } else if p.asserted_prime {
                Asserted
            } else {
                Unverified
            };
            BoundReport::new(TheoremId::KwiecinskiRefined, hp, base + mu, false)
                .hypothesis("witness_prime", p.primality())
                .hypothesis("witness_minimal", minimal)
                .exactness(Exactness::from_ideals([&p.ideal, &prev]))
                .note(format!("P = {}, mu_P(M) = {mu}", p.label))
        }
        None => {
            let d = krull_dim(&prev)?;
            BoundReport::new(
                TheoremId::KwiecinskiRefined,
                d.height,
                base + a.rows() as i64,
                d.unit,
            )
            .exactness(Exactness::Conservative)
            .note("no witness: lhs = ht Fitt_{i-1}, mu_P(M) replaced by rows")
        }
    };
    Ok(with_certificate(
        r.hypothesis("i_at_least_rank", Verified),
        cert,
    ))
}

/// `dim Sym(M) ≥ dim R/Q + μ_Q(M)` over `(0)`, `m` and the supplied witnesses.
pub fn check_huneke_rossi(a: &PolyMatrix, witnesses: &[PrimeWitness]) -> Result<BoundReport> {
    let sym = sym_presentation(a);
    let dim_sym = sym.dimension()?.dim;
    let ring = a.ring();
    let defaults = [PrimeWitness::zero(ring), PrimeWitness::origin(ring)];
    let mut best = i64::MIN;
    let mut notes = Vec::new();
    let mut attained = Vec::new();
    for q in defaults.iter().chain(witnesses) {
        check_ring(ring, q.ideal.ring())?;
        let dq = krull_dim(&q.ideal)?.dim;
        let mu = mu_at_prime(a, &q.ideal)? as i64;
        let v = dq + mu;
        notes.push(format!("Q = {}: dim R/Q + mu_Q(M) = {dq} + {mu} = {v}", q.label));
        if v == dim_sym {
            attained.push(q.label.clone());
        }
        best = best.max(v);
    }
    let mut r = BoundReport::new(TheoremId::HunekeRossi, best, dim_sym, false)
        .exactness(Exactness::from_ideals([&sym.defining_ideal]));
    for q in witnesses {
        r = r.hypothesis(&format!("witness_prime:{}", q.label), q.primality());
    }
    for n in notes {
        r = r.note(n);
    }
    if !attained.is_empty() {
        r = r.note(format!("dim Sym(M) = {dim_sym} attained at {}", attained.join(", ")));
    }
    Ok(r)
}

/// `ht(I + J) ≤ ht I + ht J`, valid at the origin for homogeneous ideals.
pub fn check_serre(i: &Ideal, j: &Ideal) -> Result<BoundReport> {
    let s = i.sum(j)?;
    let d = krull_dim(&s)?;
    let homogeneous = i.is_homogeneous() && j.is_homogeneous();
    Ok(BoundReport::new(
        TheoremId::Serre,
        d.height,
        dimension::height(i)? + dimension::height(j)?,
        d.unit,
    )
    .hypothesis("homogeneous", HypothesisStatus::from_bool(homogeneous))
    .exactness(Exactness::from_ideals([i, j])))
}

/// `rows(psi) ≤ μ(M) + μ(N)` at the origin, `N = coker(psi)` and
/// `M = coker` of the dual map.
pub fn check_mu_inequality(psi: &PolyMatrix) -> Result<BoundReport> {
    let dual = dual_presentation(psi)?;
    let origin = Ideal::origin(psi.ring());
    let mu_m = mu_at_prime(&dual, &origin)? as i64;
    let mu_n = mu_at_prime(psi, &origin)? as i64;
    let mut r = BoundReport::new(TheoremId::MuInequality, psi.rows() as i64, mu_m + mu_n, false)
        .note(format!("mu(M) = {mu_m}, mu(N) = {mu_n}"));
    if !psi.in_origin_ideal() {
        r = r.note("non_minimal_presentation");
    }
    Ok(r)
}
