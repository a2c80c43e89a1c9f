//! Library decisions against the brute-force oracles, on seeded random
//! instances.

mod oracle;

use proptest::prelude::*;

use catmodel::catlim::functor_category;
use catmodel::corpus::{random_category, random_functor, rng, Caps};
use catmodel::model::{classify, find_unliftable_square};
use catmodel::verify::{cofibration_pool, fibration_pool};
use catmodel::{FunctorSearch, SearchLimits};

const SMALL: Caps = Caps {
    max_objects: 3,
    max_morphisms: 6,
};

const TINY: Caps = Caps {
    max_objects: 2,
    max_morphisms: 4,
};

fn flags(r: &catmodel::model::ClassReport) -> [bool; 5] {
    [
        r.is_weak_equivalence,
        r.is_fibration,
        r.is_cofibration,
        r.is_trivial_fibration,
        r.is_trivial_cofibration,
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn classification_matches_definitions(seed in any::<u64>()) {
        let f = random_functor(&mut rng(seed), Caps::default());
        let r = classify(&f).unwrap();
        prop_assert_eq!(flags(&r), oracle::classes(&f));
        prop_assert!(r.revalidate(SearchLimits::default()).unwrap());
    }

    #[test]
    fn functor_counts_match_enumeration(seed in any::<u64>()) {
        let mut g = rng(seed);
        let a = random_category(&mut g, SMALL);
        let b = random_category(&mut g, SMALL);
        let n = FunctorSearch::new(&a, &b).count().unwrap();
        prop_assert_eq!(n as usize, oracle::all_functors(&a, &b).len());
    }

    #[test]
    fn functor_category_matches_enumeration(seed in any::<u64>()) {
        let mut g = rng(seed);
        let a = random_category(&mut g, TINY);
        let b = random_category(&mut g, SMALL);
        let fc = functor_category(&a, &b, SearchLimits::default()).unwrap();
        let functors = oracle::all_functors(&a, &b);
        let arrows: usize = functors
            .iter()
            .flat_map(|f| functors.iter().map(move |h| (f, h)))
            .map(|(f, h)| oracle::all_transformations(&a, &b, f, h).len())
            .sum();
        prop_assert_eq!(fc.cat.num_objects(), functors.len());
        prop_assert_eq!(fc.cat.num_morphisms(), arrows);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn unliftable_squares_match_enumeration(seed in any::<u64>()) {
        let mut g = rng(seed);
        let i = random_functor(&mut g, TINY);
        let p = random_functor(&mut g, SMALL);
        let found = find_unliftable_square(&i, &p, SearchLimits::default()).unwrap();
        prop_assert_eq!(found.is_none(), oracle::lifts_against(&i, &p));
        if let Some(sq) = found {
            prop_assert!(!oracle::has_lift(&sq.i, &sq.p, &sq.top, &sq.bottom));
        }
    }

    #[test]
    fn pools_lift_as_enumerated(seed in any::<u64>()) {
        let mut g = rng(seed);
        let f = random_functor(&mut g, TINY);
        for p in fibration_pool().into_iter().filter(|p| p.domain().num_morphisms() <= 4) {
            let found = find_unliftable_square(&f, &p, SearchLimits::default()).unwrap();
            prop_assert_eq!(found.is_none(), oracle::lifts_against(&f, &p));
        }
        for i in cofibration_pool().into_iter().filter(|i| i.codomain().num_morphisms() <= 4) {
            let found = find_unliftable_square(&i, &f, SearchLimits::default()).unwrap();
            prop_assert_eq!(found.is_none(), oracle::lifts_against(&i, &f));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// The generating sets characterise the classes, computed purely by
    /// enumeration on both sides.
    #[test]
    fn generating_sets_by_enumeration(seed in any::<u64>()) {
        let f = random_functor(&mut rng(seed), SMALL);
        let iso = catmodel::fincat::generating_trivial_cofibration();
        prop_assert_eq!(oracle::lifts_against(&iso, &f), oracle::is_isofibration(&f));
        let all = catmodel::fincat::generating_cofibrations()
            .iter()
            .all(|i| oracle::lifts_against(i, &f));
        prop_assert_eq!(all, oracle::is_trivial_fibration(&f));
    }
}
