//! Derived example values, each recomputed by an independent oracle before
//! being frozen as a literal.

mod common;

use common::*;
use ghbounds::checks::{
    check_huneke_rossi, check_kwiecinski, check_row_ideal_dim, qualifying_component,
};
use ghbounds::dimension::{height, krull_dim, matrix_rank, mu_at_prime};
use ghbounds::groebner::{
    buchberger, eliminate, intersect, kernel, radical_member, submodule_contains,
};
use ghbounds::modules::{
    equidim_certificate, fitting_ideal, minors, order_ideal, sym_presentation,
};
use ghbounds::{FreeModuleElement, Ideal, MonomialOrder, PolyMatrix, PolyRing};

const ORACLE_PRIME: u64 = 32003;

#[test]
fn twisted_cubic_basis_and_eliminant() {
    let r = PolyRing::new(
        &["z", "y", "x"],
        ghbounds::CoefficientField::Rationals,
        MonomialOrder::Lex,
    )
    .unwrap();
    let i = Ideal::parse(&r, &["y - x^2", "z - x^3"]).unwrap();
    let gb = buchberger(&r, i.generators()).unwrap();
    // leading terms y and z are coprime, so the generators already form a basis
    let mut got = strings(&gb);
    got.sort();
    assert_eq!(got, vec!["y - x^2", "z - x^3"]);

    let e = eliminate(&i, &["x"]).unwrap();
    // the subring (z, y) keeps lex, so z^2 leads
    assert_eq!(strings(e.generators()), vec!["-z^2 + y^3"]);
    // oracle: y^3 - z^2 is a combination of the generators in low degree
    let f = ghbounds::Polynomial::parse("y^3 - z^2", &r).unwrap();
    assert!(truncated_member(&f, i.generators(), ORACLE_PRIME, 6));
}

#[test]
fn grevlex_basis_example() {
    let r = ring(&["x", "y"]);
    let gens = Ideal::parse(&r, &["x^2", "x*y + y^2"]).unwrap();
    let gb = buchberger(&r, gens.generators()).unwrap();
    assert_eq!(strings(&gb), vec!["x*y + y^2", "x^2", "y^3"]);
    // oracle: every basis element lies in the ideal, and each generator
    // reduces against the basis
    for g in &gb {
        assert!(truncated_member(g, gens.generators(), ORACLE_PRIME, 4));
    }
}

#[test]
fn intersection_example_against_truncated_spans() {
    let r = ring(&["x", "y"]);
    let i = Ideal::parse(&r, &["x^2", "y"]).unwrap();
    let j = Ideal::parse(&r, &["x"]).unwrap();
    let k = intersect(&i, &j).unwrap();
    assert!(k.same_as(&Ideal::parse(&r, &["x^2", "x*y"]).unwrap()).unwrap());
    for d in 1..=6 {
        let t = Truncation::new(2, d, ORACLE_PRIME);
        let (si, sj, sk) = (t.span(i.generators()), t.span(j.generators()), t.span(k.generators()));
        let mut sum = t.span(i.generators());
        let mut sum_rank = si.rank();
        for g in j.generators() {
            let dg = g.total_degree().unwrap() as u32;
            for m in monomials_up_to(2, d - dg) {
                let mg = g.mul_term(&ghbounds::poly::Monomial::new(m), &r.field().one());
                if sum.insert(t.coords(&mg).unwrap()) {
                    sum_rank += 1;
                }
            }
        }
        // monomial ideals: truncations are exact, so dim(I ∩ J) = dim I + dim J - dim(I + J)
        assert_eq!(sk.rank(), si.rank() + sj.rank() - sum_rank, "degree {d}");
    }
}

#[test]
fn radical_example_by_powers() {
    let r = ring(&["x", "y"]);
    let i = Ideal::parse(&r, &["(x + y)^3", "x^2"]).unwrap();
    let f = ghbounds::Polynomial::parse("x + y", &r).unwrap();
    assert!(radical_member(&f, &i).unwrap());
    assert!(power_member(&f, &i, 4));
    let g = ghbounds::Polynomial::parse("x + 1", &r).unwrap();
    assert!(!radical_member(&g, &i).unwrap());
    assert!(!power_member(&g, &i, 6));
}

#[test]
fn koszul_syzygy_against_brute_force() {
    let r = ring(&["x", "y"]);
    let a = PolyMatrix::parse_rows(&r, &["y; -x"]).unwrap();
    assert_eq!(kernel(&a).unwrap().row_strings(), vec!["x", "y"]);

    let rp = ring_fp(&["x", "y"], ORACLE_PRIME);
    let ap = PolyMatrix::parse_rows(&rp, &["y; -x"]).unwrap();
    let k = kernel(&ap).unwrap();
    let syz = low_degree_syzygies(&ap, 3, ORACLE_PRIME);
    // (x, y) times the 6 monomials of degree ≤ 2 in two variables
    assert_eq!(syz.len(), 6);
    for s in &syz {
        assert!(submodule_contains(&k, s).unwrap());
    }
}

#[test]
fn dimension_examples_against_subset_oracle() {
    let r = ring(&["x", "y", "z"]);
    let i = Ideal::parse(&r, &["x*y", "x*z"]).unwrap();
    assert_eq!(subset_dim(&i), 2);
    assert_eq!(library_dim(&i), 2);

    let r6 = ring(&["a", "b", "c", "d", "e", "f"]);
    let g = PolyMatrix::parse_rows(&r6, &["a; b; c", "d; e; f"]).unwrap();
    let i2 = Ideal::new(&r6, minors(&g, 2).unwrap()).unwrap();
    assert_eq!(oracle_height(&i2), 2);
    assert_eq!(height(&i2).unwrap(), 2);
}

#[test]
fn koszul_determinantal_values() {
    let r = ring(&["x", "y", "z"]);
    let k = koszul(&r);
    assert!(minors(&k, 3).unwrap()[0].is_zero());
    assert_eq!(matrix_rank(&k).unwrap(), 2);
    assert_eq!(mu_at_prime(&k, &Ideal::origin(&r)).unwrap(), 3);
    let f1 = fitting_ideal(&k, 1).unwrap();
    assert_eq!(oracle_height(&f1), 3);
    assert_eq!(height(&f1).unwrap(), 3);
}

#[test]
fn koszul_sym_needs_an_assertion() {
    let r = ring(&["x", "y", "z"]);
    let s = sym_presentation(&koszul(&r));
    // the subset oracle reads leading terms under the block order
    assert_eq!(oracle_height(&s.defining_ideal), 2);
    assert_eq!(s.height().unwrap(), 2);
    assert!(equidim_certificate(&s, None).unwrap().is_none());
    let r = check_huneke_rossi(&koszul(&r), &[]).unwrap();
    assert_eq!((r.lhs, r.rhs), (4, 4));
}

#[test]
fn order_ideal_example_by_hand() {
    let r = ring(&["x", "y"]);
    let psi = PolyMatrix::parse_rows(&r, &["y", "-x"]).unwrap();
    let x = FreeModuleElement::parse(&r, &["x", "0"]).unwrap();
    let o = order_ideal(&psi, &x).unwrap();
    // Hom(N, R) is generated by (x, y); (x, y)·(x, 0) = x^2
    assert_eq!(o.duals.row_strings(), vec!["x", "y"]);
    assert_eq!(o.ideal.to_string(), "(x^2)");
}

#[test]
fn hypersurface_pipeline() {
    let r = ring(&["x1", "x2"]);
    let a = PolyMatrix::parse_rows(&r, &["x1", "x2"]).unwrap();
    let b = FreeModuleElement::parse(&r, &["x1", "x2"]).unwrap();
    let row = check_row_ideal_dim(&a, &b).unwrap();
    assert_eq!((row.lhs, row.rhs), (1, 1));

    let j = qualifying_component(&a, 2).unwrap().unwrap();
    assert_eq!(oracle_height(&j), 2);
    let c = equidim_certificate(&sym_presentation(&a), None).unwrap();
    let k = check_kwiecinski(&a, 2, c.as_ref()).unwrap();
    assert_eq!((k.lhs, k.rhs, k.slack), (2, 2, 0));
    assert_eq!(krull_dim(&j).unwrap().dim, 0);
}
