//! Invariants over the random corpus, including mutation tests of the
//! validators against a table-level law checker.

mod oracle;

use std::collections::BTreeMap;
use std::sync::Arc;

use proptest::prelude::*;
use rand::Rng;

use catmodel::catlim::{
    coequifier, pseudocolimit_of_arrow, pseudolimit_of_arrow, split_idempotent,
};
use catmodel::corpus::{random_category, random_functor, random_functor_from, rng, Caps, Rng64};
use catmodel::model::{classify, factor, FactorMode};
use catmodel::text::{parse, write_category, write_functor_document};
use catmodel::verify::{run_suite, Suite, SuiteConfig};
use catmodel::{
    compose_functors, vertical_compose, FinCat, FinFunctor, NamedCat, RawCat, SearchLimits,
    TransformSearch,
};

const SMALL: Caps = Caps {
    max_objects: 3,
    max_morphisms: 6,
};

/// Every category law, checked directly on an unvalidated table.
fn laws_hold(raw: &RawCat) -> bool {
    let n = raw.objects.len();
    let m = raw.arrows.len();
    let ends = |a: usize| (raw.arrows[a].1, raw.arrows[a].2);
    if raw.arrows.iter().any(|&(_, s, t)| s >= n || t >= n) || raw.identities.len() != n {
        return false;
    }
    if raw
        .identities
        .iter()
        .enumerate()
        .any(|(x, &i)| i >= m || ends(i) != (x, x))
    {
        return false;
    }
    let mut comp = BTreeMap::new();
    for (&(g, f), &h) in &raw.composites {
        if g >= m || f >= m || h >= m || ends(f).1 != ends(g).0 || ends(h) != (ends(f).0, ends(g).1)
        {
            return false;
        }
        comp.insert((g, f), h);
    }
    for g in 0..m {
        for f in 0..m {
            if ends(f).1 == ends(g).0 && !comp.contains_key(&(g, f)) {
                return false;
            }
        }
    }
    for f in 0..m {
        let (s, t) = ends(f);
        if comp[&(raw.identities[t], f)] != f || comp[&(f, raw.identities[s])] != f {
            return false;
        }
    }
    for (&(g, f), &gf) in &comp {
        for h in 0..m {
            if ends(h).0 == ends(g).1 && comp[&(h, gf)] != comp[&(comp[&(h, g)], f)] {
                return false;
            }
        }
    }
    true
}

/// Change one entry of a table.
fn mutate(raw: &RawCat, rng: &mut Rng64) -> RawCat {
    let mut out = raw.clone();
    let m = raw.arrows.len();
    match rng.gen_range(0..4) {
        0 if !raw.composites.is_empty() => {
            let k = rng.gen_range(0..raw.composites.len());
            let key = *raw.composites.keys().nth(k).unwrap();
            let old = raw.composites[&key];
            let new = (old + rng.gen_range(1..m.max(2))) % m;
            out.composites.insert(key, new);
        }
        1 if !raw.composites.is_empty() => {
            let k = rng.gen_range(0..raw.composites.len());
            let key = *raw.composites.keys().nth(k).unwrap();
            out.composites.remove(&key);
        }
        2 if raw.objects.len() > 1 => {
            let a = rng.gen_range(0..m);
            let n = raw.objects.len();
            out.arrows[a].2 = (out.arrows[a].2 + rng.gen_range(1..n)) % n;
        }
        _ if !raw.identities.is_empty() => {
            let x = rng.gen_range(0..raw.identities.len());
            out.identities[x] = (out.identities[x] + rng.gen_range(1..m.max(2))) % m;
        }
        _ => {}
    }
    out
}

/// Two random functors with the same domain and codomain.
fn parallel_pair(g: &mut Rng64) -> (FinFunctor, FinFunctor) {
    let f = random_functor(g, SMALL);
    let (a, b) = (f.domain().clone(), f.codomain().clone());
    let all = oracle::all_functors(&a, &b);
    let pick = |g: &mut Rng64| {
        let (o, m) = all[g.gen_range(0..all.len())].clone();
        FinFunctor::new(a.clone(), b.clone(), o, m).unwrap()
    };
    (pick(g), pick(g))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn generated_categories_validate(seed in any::<u64>()) {
        let c = random_category(&mut rng(seed), Caps::default());
        prop_assert!(c.validate().is_ok());
        prop_assert!(laws_hold(&c.to_raw()));
    }

    /// A one-entry mutation is rejected exactly when the law checker
    /// rejects it. Some mutations give another category (`e∘e = e` to
    /// `e∘e = 1` turns the idempotent monoid into a group), so rejection
    /// is not universal.
    #[test]
    fn validator_agrees_with_law_checker_on_mutations(seed in any::<u64>()) {
        let mut g = rng(seed);
        let c = random_category(&mut g, Caps::default());
        let raw = mutate(&c.to_raw(), &mut g);
        if raw != c.to_raw() {
            prop_assert_eq!(raw.validate().is_ok(), laws_hold(&raw));
        }
    }

    #[test]
    fn functor_validator_agrees_with_oracle_on_mutations(seed in any::<u64>()) {
        let mut g = rng(seed);
        let f = random_functor(&mut g, Caps::default());
        let (a, b) = (f.domain().clone(), f.codomain().clone());
        let mut obj = f.object_map().to_vec();
        let mut mor = f.morphism_map().to_vec();
        if g.gen_bool(0.5) && !obj.is_empty() {
            let x = g.gen_range(0..obj.len());
            obj[x] = g.gen_range(0..b.num_objects());
        } else {
            let k = g.gen_range(0..mor.len().max(1));
            if let Some(slot) = mor.get_mut(k) {
                *slot = g.gen_range(0..b.num_morphisms());
            }
        }
        let built = FinFunctor::new(a.clone(), b.clone(), obj.clone(), mor.clone());
        prop_assert_eq!(built.is_ok(), oracle::is_functor(&a, &b, &obj, &mor));
    }

    #[test]
    fn composition_is_associative_and_unital(seed in any::<u64>()) {
        let mut g = rng(seed);
        let f = random_functor(&mut g, Caps::default());
        let h1 = random_functor_from(&mut g, f.codomain(), SMALL);
        let h2 = random_functor_from(&mut g, h1.codomain(), SMALL);
        let left = compose_functors(&h2, &compose_functors(&h1, &f).unwrap()).unwrap();
        let right = compose_functors(&compose_functors(&h2, &h1).unwrap(), &f).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(compose_functors(&FinFunctor::identity(f.codomain()), &f).unwrap(), f.clone());
        prop_assert_eq!(compose_functors(&f, &FinFunctor::identity(f.domain())).unwrap(), f);
    }

    #[test]
    fn invertible_iff_two_sided_inverse(seed in any::<u64>()) {
        let mut g = rng(seed);
        let (f, k) = parallel_pair(&mut g);
        for alpha in &TransformSearch::new(&f, &k).all().unwrap() {
            let has_inverse = TransformSearch::new(&k, &f).all().unwrap().iter().any(|beta| {
                vertical_compose(beta, alpha).unwrap().is_identity()
                    && vertical_compose(alpha, beta).unwrap().is_identity()
            });
            prop_assert_eq!(alpha.is_invertible(), has_inverse);
        }
    }

    #[test]
    fn arrow_pseudolimit_laws(seed in any::<u64>()) {
        let f = random_functor(&mut rng(seed), Caps::default());
        let pl = pseudolimit_of_arrow(&f);
        prop_assert!(compose_functors(&pl.u, &pl.d).unwrap().is_identity());
        prop_assert!(pl.lambda.is_invertible());
        prop_assert!(pl.zeta.is_invertible());
        if pl.cat.num_objects() <= 8 {
            for probe in [NamedCat::One.arc(), NamedCat::Arrow.arc(), NamedCat::FreeIso.arc()] {
                prop_assert!(pl.verify_universal(&probe, false, SearchLimits::default()).unwrap());
            }
        }
    }

    #[test]
    fn arrow_pseudocolimit_laws(seed in any::<u64>()) {
        let f = random_functor(&mut rng(seed), Caps::default());
        let pc = pseudocolimit_of_arrow(&f);
        prop_assert_eq!(compose_functors(&pc.e, &pc.i).unwrap(), f.clone());
        prop_assert!(compose_functors(&pc.e, &pc.j).unwrap().is_identity());
        prop_assert!(oracle::injective_on_objects(&pc.j));
        prop_assert!(oracle::is_trivial_fibration(&pc.e));
        prop_assert!(classify(&pc.e).unwrap().is_trivial_fibration);
        prop_assert!(pc.lambda.is_invertible() && pc.epsilon.is_invertible());
    }

    #[test]
    fn coequifier_laws(seed in any::<u64>()) {
        let mut g = rng(seed);
        let (h, k) = parallel_pair(&mut g);
        let cells = TransformSearch::new(&h, &k).all().unwrap();
        prop_assume!(!cells.is_empty());
        let alpha = &cells[g.gen_range(0..cells.len())];
        let beta = &cells[g.gen_range(0..cells.len())];
        let w = coequifier(alpha, beta).unwrap();
        let b = h.codomain();
        prop_assert!(oracle::is_bijection(w.p.object_map(), w.quotient.num_objects()));
        let mut hit = vec![false; w.quotient.num_morphisms()];
        for m in b.morphisms() {
            hit[w.p.on_morphism(m)] = true;
        }
        prop_assert!(hit.iter().all(|&x| x));
        for probe in [NamedCat::One.arc(), NamedCat::Arrow.arc()] {
            prop_assert!(w.verify_universal(alpha, beta, &probe, SearchLimits::default()).unwrap());
        }
    }

    #[test]
    fn factorizations_compose_back(seed in any::<u64>()) {
        let f = random_functor(&mut rng(seed), Caps::default());
        for mode in FactorMode::ALL {
            let w = factor(&f, mode, SearchLimits::default()).unwrap();
            prop_assert_eq!(compose_functors(&w.right, &w.left).unwrap(), f.clone());
            let (l, r) = (oracle::classes(&w.left), oracle::classes(&w.right));
            match mode {
                FactorMode::WeThenFib => prop_assert!(l[0] && r[1]),
                FactorMode::CofThenTrivFib => prop_assert!(l[2] && r[3]),
                FactorMode::TrivCofThenFib => prop_assert!(l[4] && r[1]),
            }
        }
    }

    /// A functor that is not injective on objects comes with a square
    /// against a trivial fibration that has no diagonal.
    #[test]
    fn cofibration_failures_carry_unliftable_squares(seed in any::<u64>()) {
        let f = random_functor(&mut rng(seed), Caps::default());
        let r = classify(&f).unwrap();
        prop_assert_eq!(r.is_cofibration, oracle::injective_on_objects(&f));
        if let Some(sq) = &r.cofibration_failure {
            prop_assert!(oracle::is_trivial_fibration(&sq.p));
            prop_assert!(!oracle::has_lift(&sq.i, &sq.p, &sq.top, &sq.bottom));
        }
        prop_assert_eq!(r.cofibration_failure.is_some(), !r.is_cofibration);
    }

    /// Without non-identity isomorphisms, weak equivalences are exactly the
    /// isomorphisms of tables.
    #[test]
    fn without_isos_equivalences_are_isomorphisms(seed in any::<u64>()) {
        let f = random_functor(&mut rng(seed), Caps::default());
        prop_assume!(!f.domain().has_nontrivial_isos() && !f.codomain().has_nontrivial_isos());
        let bijective = oracle::is_bijection(f.object_map(), f.codomain().num_objects())
            && oracle::is_bijection(f.morphism_map(), f.codomain().num_morphisms());
        prop_assert_eq!(classify(&f).unwrap().is_weak_equivalence, bijective);
    }

    #[test]
    fn text_round_trip(seed in any::<u64>()) {
        let f = random_functor(&mut rng(seed), Caps::default());
        let src = write_functor_document("F", &f);
        let doc = parse(&src).unwrap_or_else(|e| panic!("{e}\n{src}"));
        let back = doc.functor("F").unwrap();
        // Identities come first after parsing, so arrow ids may move;
        // writing again must give the same text.
        prop_assert_eq!(write_functor_document("F", back), src);
        prop_assert_eq!(back.object_map(), f.object_map());
        prop_assert_eq!(back.domain().num_morphisms(), f.domain().num_morphisms());
        prop_assert_eq!(oracle::classes(back), oracle::classes(&f));
    }
}

#[test]
fn split_idempotents() {
    let idem = Arc::new(FinCat::idempotent_monoid());
    let mut g = rng(3);
    let mut seen = 0;
    for _ in 0..200 {
        let e = random_functor_from(&mut g, &idem, SMALL);
        let Ok(e) = e.with_codomain(idem.clone()) else {
            continue;
        };
        if compose_functors(&e, &e).unwrap() != e {
            continue;
        }
        let s = split_idempotent(&e).unwrap();
        assert!(compose_functors(&s.r, &s.s).unwrap().is_identity());
        assert_eq!(compose_functors(&s.s, &s.r).unwrap(), e);
        seen += 1;
    }
    // Endofunctors of a category with parallel arrows too.
    let pair = NamedCat::ParallelPair.arc();
    for e in oracle::all_functors(&pair, &pair) {
        let e = FinFunctor::new(pair.clone(), pair.clone(), e.0, e.1).unwrap();
        if compose_functors(&e, &e).unwrap() == e {
            let s = split_idempotent(&e).unwrap();
            assert!(compose_functors(&s.r, &s.s).unwrap().is_identity());
            assert_eq!(compose_functors(&s.s, &s.r).unwrap(), e);
            seen += 1;
        }
    }
    assert!(seen >= 3);
}

#[test]
fn written_categories_reparse() {
    let c = NamedCat::FreeIso.build();
    let doc = parse(&write_category("I", &c)).unwrap();
    assert_eq!(**doc.category("I").unwrap(), c);
}

#[test]
fn suite_reports_are_deterministic() {
    for suite in [Suite::ModelAxioms, Suite::WeightsClosure] {
        let config = SuiteConfig::new(suite, 42, 4);
        let a = serde_json::to_string(&run_suite(&config)).unwrap();
        let b = serde_json::to_string(&run_suite(&config)).unwrap();
        assert_eq!(a, b);
    }
}
