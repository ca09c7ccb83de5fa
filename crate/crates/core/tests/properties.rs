//! Property tests for the algebraic invariants of every layer.

mod common;

use common::Rng;
use common::*;
use ghbounds::checks::{check_gpit, check_kwiecinski, sweep, SweepConfig, TheoremId};
use ghbounds::dimension::{krull_dim, matrix_rank, mu_at_prime};
use ghbounds::groebner::{buchberger, kernel, radical_member, reduce, saturate, submodule_contains};
use ghbounds::modules::{
    determinantal_ideal, dual_presentation, fitting_ideal, order_ideal, row_ideal,
};
use ghbounds::poly::Monomial;
use ghbounds::{
    CoefficientField, FreeModuleElement, Ideal, MonomialOrder, PolyMatrix, PolyRing, Polynomial,
};
use proptest::prelude::*;

const P: u64 = 32003;

fn orders() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::Lex),
        Just(MonomialOrder::GrevLex),
        (0usize..=4).prop_map(MonomialOrder::Block),
    ]
}

fn monomial(n: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..5, n).prop_map(Monomial::new)
}

fn fields() -> impl Strategy<Value = CoefficientField> {
    prop_oneof![
        Just(CoefficientField::Rationals),
        Just(CoefficientField::prime(5).unwrap()),
        Just(CoefficientField::prime(P).unwrap()),
    ]
}

/// Term list over three variables; repeated monomials are allowed.
fn terms() -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0u32..3, 3), -6i64..=6), 0..6)
}

fn build(r: &PolyRing, t: &[(Vec<u32>, i64)]) -> Polynomial {
    let terms = t
        .iter()
        .map(|(e, c)| (Monomial::new(e.clone()), r.field().from_i64(*c)))
        .collect();
    Polynomial::from_terms(r, terms)
}

fn xyz(field: CoefficientField) -> PolyRing {
    PolyRing::new(&["x", "y", "z"], field, MonomialOrder::GrevLex).unwrap()
}

fn vars(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn fp_ring(n: usize) -> PolyRing {
    PolyRing::new(&vars(n), CoefficientField::prime(P).unwrap(), MonomialOrder::GrevLex).unwrap()
}

fn random_ideal(rng: &mut Rng, r: &PolyRing, max_gens: u64, d: u32) -> Ideal {
    let k = 1 + rng.below(max_gens) as usize;
    let gens = (0..k).map(|_| rng.poly(r, d, false)).collect();
    Ideal::new(r, gens).unwrap()
}

fn random_element(rng: &mut Rng, r: &PolyRing, n: usize, in_m: bool) -> FreeModuleElement {
    FreeModuleElement::new(r, (0..n).map(|_| rng.poly(r, 1, in_m)).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn order_axioms(o in orders(), a in monomial(4), b in monomial(4), c in monomial(4)) {
        use std::cmp::Ordering::*;
        let ab = o.cmp(&a, &b);
        prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
        prop_assert_eq!(ab == Equal, a == b);
        prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ab);
        prop_assert_ne!(o.cmp(&Monomial::one(4), &a), Greater);
        if ab != Greater && o.cmp(&b, &c) != Greater {
            prop_assert_ne!(o.cmp(&a, &c), Greater);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn ring_axioms(k in fields(), a in terms(), b in terms(), c in terms()) {
        let r = xyz(k);
        let (f, g, h) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn canonical_form_is_unique(k in fields(), a in terms(), seed in any::<u64>()) {
        let r = xyz(k);
        let f = build(&r, &a);
        let mut shuffled = a.clone();
        Rng::new(seed).shuffle(&mut shuffled);
        let rebuilt = build(&r, &shuffled);
        prop_assert_eq!(f.terms(), rebuilt.terms());
        // term by term through arithmetic
        let mut sum = Polynomial::zero(&r);
        for t in &shuffled {
            sum = &sum + &build(&r, std::slice::from_ref(t));
        }
        prop_assert_eq!(f.terms(), sum.terms());
        let printed = f.to_string();
        let back = Polynomial::parse(&printed, &r).unwrap();
        prop_assert_eq!(f.terms(), back.terms());
        prop_assert_eq!(back.to_string(), printed);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn groebner_invariants(seed in any::<u64>(), nvars in 1usize..=3, p in prop_oneof![Just(5u64), Just(P)]) {
        let mut rng = Rng::new(seed);
        let r = PolyRing::new(&vars(nvars), CoefficientField::prime(p).unwrap(), MonomialOrder::GrevLex)
            .unwrap();
        let ideal = random_ideal(&mut rng, &r, 4, 3);
        let gb = buchberger(&r, ideal.generators()).unwrap();
        prop_assert_eq!(&buchberger(&r, &gb).unwrap(), &gb);
        for (i, f) in gb.iter().enumerate() {
            for g in &gb[i + 1..] {
                prop_assert!(reduce(&s_polynomial(f, g), &gb).unwrap().is_zero());
            }
        }
        let mut gens = ideal.generators().to_vec();
        rng.shuffle(&mut gens);
        // a redundant element of the ideal
        let extra = &rng.poly(&r, 1, false) * &gens[0];
        gens.push(extra);
        prop_assert_eq!(&buchberger(&r, &gens).unwrap(), &gb);
    }

    #[test]
    fn kernel_is_correct(seed in any::<u64>(), rows in 1usize..=2, cols in 1usize..=3) {
        let mut rng = Rng::new(seed);
        let r = fp_ring(2);
        let a = rng.matrix(&r, rows, cols, 1, false);
        let k = kernel(&a).unwrap();
        prop_assert!(a.mul(&k).unwrap().is_zero());
        for s in low_degree_syzygies(&a, 2, P) {
            prop_assert!(submodule_contains(&k, &s).unwrap());
        }
    }

    #[test]
    fn saturation_is_idempotent(seed in any::<u64>()) {
        let mut rng = Rng::new(seed);
        let r = fp_ring(3);
        let i = random_ideal(&mut rng, &r, 3, 2);
        let j = random_ideal(&mut rng, &r, 2, 1);
        prop_assume!(!j.is_zero());
        let s = saturate(&i, &j).unwrap();
        prop_assert!(saturate(&s, &j).unwrap().same_as(&s).unwrap());
        prop_assert!(s.contains_ideal(&i).unwrap());
    }

    #[test]
    fn dimension_properties(seed in any::<u64>(), nvars in 1usize..=6) {
        let mut rng = Rng::new(seed);
        let r = fp_ring(nvars);
        let i = random_ideal(&mut rng, &r, 3, 2);
        let j = i.add_generator(rng.poly(&r, 2, false)).unwrap();
        prop_assert!(j.contains_ideal(&i).unwrap());
        let (di, dj) = (krull_dim(&i).unwrap(), krull_dim(&j).unwrap());
        prop_assert!(di.dim >= dj.dim);
        for (ideal, d) in [(&i, &di), (&j, &dj)] {
            prop_assert_eq!(d.dim, subset_dim(ideal));
            if !d.unit {
                prop_assert_eq!(d.dim + d.height, nvars as i64);
            }
        }
    }

    #[test]
    fn generic_rank_and_mu(seed in any::<u64>(), rows in 1usize..=3, cols in 0usize..=3) {
        let mut rng = Rng::new(seed);
        let r = fp_ring(3);
        let a = rng.matrix(&r, rows, cols, 1, false);
        let zero = Ideal::zero(&r);
        prop_assert_eq!(mu_at_prime(&a, &zero).unwrap() + matrix_rank(&a).unwrap(), rows);
    }

    #[test]
    fn fitting_chain(seed in any::<u64>(), rows in 1usize..=3, cols in 0usize..=3) {
        let mut rng = Rng::new(seed);
        let r = fp_ring(3);
        let a = rng.matrix(&r, rows, cols, 1, false);
        for i in 0..rows {
            let (f, g) = (fitting_ideal(&a, i).unwrap(), fitting_ideal(&a, i + 1).unwrap());
            for h in f.generators() {
                prop_assert!(g.contains(h).unwrap());
            }
        }
        prop_assert!(fitting_ideal(&a, rows).unwrap().is_unit().unwrap());
    }

    #[test]
    fn minors_invariant_under_elementary_operations(
        seed in any::<u64>(), rows in 2usize..=3, cols in 2usize..=3, t in 1usize..=2,
    ) {
        let mut rng = Rng::new(seed);
        let r = fp_ring(3);
        let a = rng.matrix(&r, rows, cols, 1, false);
        let mut u = PolyMatrix::identity(&r, rows);
        let (i, j) = (rng.below(rows as u64) as usize, rng.below(rows as u64 - 1) as usize);
        let j = if j >= i { j + 1 } else { j };
        u.set(i, j, rng.poly(&r, 1, false));
        let mut v = PolyMatrix::identity(&r, cols);
        let (k, l) = (rng.below(cols as u64) as usize, rng.below(cols as u64 - 1) as usize);
        let l = if l >= k { l + 1 } else { l };
        v.set(k, l, rng.poly(&r, 1, false));
        let b = u.mul(&a).unwrap().mul(&v).unwrap();
        let (ia, ib) = (determinantal_ideal(&a, t).unwrap(), determinantal_ideal(&b, t).unwrap());
        prop_assert!(ia.same_as(&ib).unwrap());
    }

    #[test]
    fn row_ideal_is_additive(seed in any::<u64>(), rows in 1usize..=3, cols in 1usize..=3) {
        let mut rng = Rng::new(seed);
        let r = fp_ring(3);
        let a = rng.matrix(&r, rows, cols, 1, false);
        let (b1, b2) = (random_element(&mut rng, &r, rows, false), random_element(&mut rng, &r, rows, false));
        let sum = row_ideal(&a, &b1).unwrap().sum(&row_ideal(&a, &b2).unwrap()).unwrap();
        let whole = row_ideal(&a, &b1.add(&b2).unwrap()).unwrap();
        prop_assert!(sum.contains_ideal(&whole).unwrap());
        let e = FreeModuleElement::unit(&r, rows, 0);
        let row = Ideal::new(&r, a.row(0).to_vec()).unwrap();
        prop_assert!(row_ideal(&a, &e).unwrap().same_as(&row).unwrap());
    }

    #[test]
    fn dual_presentation_annihilates(seed in any::<u64>(), rows in 1usize..=3, cols in 0usize..=3) {
        let mut rng = Rng::new(seed);
        let r = fp_ring(3);
        let psi = rng.matrix(&r, rows, cols, 1, true);
        let dual = dual_presentation(&psi).unwrap();
        prop_assert!(psi.transpose().mul(&dual).unwrap().is_zero());
    }

    #[test]
    fn order_ideal_ignores_representative(seed in any::<u64>(), rows in 1usize..=3, cols in 1usize..=2) {
        let mut rng = Rng::new(seed);
        let r = fp_ring(3);
        let psi = rng.matrix(&r, rows, cols, 1, true);
        let x = random_element(&mut rng, &r, rows, true);
        let j = rng.below(cols as u64) as usize;
        let col = FreeModuleElement::new(&r, psi.column(j)).unwrap();
        let o1 = order_ideal(&psi, &x).unwrap();
        let o2 = order_ideal(&psi, &x.add(&col).unwrap()).unwrap();
        prop_assert!(o1.ideal.same_as(&o2.ideal).unwrap());
    }

    #[test]
    fn kwiecinski_vacuity_matches_radicals(seed in any::<u64>(), rows in 1usize..=3, cols in 0usize..=3) {
        let mut rng = Rng::new(seed);
        let r = fp_ring(3);
        let a = rng.matrix(&r, rows, cols, 1, true);
        let i = 1 + rng.below(rows as u64) as usize;
        let report = check_kwiecinski(&a, i, None).unwrap();
        let prev = fitting_ideal(&a, i - 1).unwrap();
        let next = fitting_ideal(&a, i).unwrap();
        let contained = next
            .generators()
            .iter()
            .all(|g| radical_member(g, &prev).unwrap());
        prop_assert_eq!(report.vacuous, contained);
    }

    #[test]
    fn gpit_on_free_modules_is_krull(seed in any::<u64>(), n in 1usize..=4, k in 1usize..=4) {
        // k linear forms in n variables; their height is the rank of their
        // coefficient matrix
        let mut rng = Rng::new(seed);
        let r = fp_ring(n);
        let forms: Vec<Polynomial> = (0..k).map(|_| rng.homogeneous(&r, 1)).collect();
        let x = FreeModuleElement::new(&r, forms.clone()).unwrap();
        let report = check_gpit(&PolyMatrix::zero(&r, k, 0), &x).unwrap();
        let t = Truncation::new(n, 1, P);
        let rank = t.span(&forms).rank() as i64;
        prop_assert_eq!(report.rhs, k as i64);
        if rank > 0 {
            prop_assert_eq!(report.lhs, rank);
            prop_assert!(report.holds);
        } else {
            prop_assert!(report.vacuous);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn sweeps_are_sound_and_deterministic(
        seed in any::<u64>(),
        theorem in prop::sample::select(TheoremId::ALL.to_vec()),
        rows in 2usize..=3,
        cols in 1usize..=2,
    ) {
        let mut c = SweepConfig::new(theorem, rows, cols);
        c.seed = seed;
        c.samples = 10;
        c.nvars = 3;
        if theorem == TheoremId::Gpit {
            c.cols = 0;
        }
        // a counterexample surfaces as an error
        let a = sweep(&c).unwrap();
        let b = sweep(&c).unwrap();
        prop_assert_eq!(&a.csv, &b.csv);
        prop_assert_eq!(&a.outcomes, &b.outcomes);
    }
}
