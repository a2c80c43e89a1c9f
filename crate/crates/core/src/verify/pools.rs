//! Fixed partner maps and certified-flexible weights used by the suites.

use std::sync::Arc;

use crate::catlim::product;
use crate::fincat::{generating_maps, FinCat, FinFunctor, NamedCat};
use crate::search::SearchLimits;
use crate::weights::{weight_maps, FlexTree, MapData, Weight};

/// Small fibrations (isofibrations) with varied codomains.
pub fn fibration_pool() -> Vec<FinFunctor> {
    let one = NamedCat::One.arc();
    let arrow = NamedCat::Arrow.arc();
    let iso = NamedCat::FreeIso.arc();
    let mut out: Vec<FinFunctor> = [
        NamedCat::FreeIso.arc(),
        NamedCat::Arrow.arc(),
        NamedCat::TwoDiscrete.arc(),
        NamedCat::ParallelPair.arc(),
        Arc::new(FinCat::cyclic_group(2)),
        Arc::new(FinCat::idempotent_monoid()),
        Arc::new(FinCat::chaotic(
            "K3",
            vec!["p".into(), "q".into(), "r".into()],
        )),
    ]
    .iter()
    .map(|c| FinFunctor::terminal(c, &one))
    .collect();
    out.push(FinFunctor::identity(&arrow));
    out.push(product(&iso, &arrow).right);
    out.push(product(&arrow, &NamedCat::TwoDiscrete.arc()).left);
    out
}

/// Small cofibrations (injective on objects), including the generators.
pub fn cofibration_pool() -> Vec<FinFunctor> {
    let one = NamedCat::One.arc();
    let two = NamedCat::TwoDiscrete.arc();
    let arrow = NamedCat::Arrow.arc();
    let iso = NamedCat::FreeIso.arc();
    let mut out = generating_maps();
    out.push(
        FinFunctor::new(two.clone(), iso.clone(), vec![0, 1], vec![0, 1])
            .expect("both ends of Iso"),
    );
    out.push(
        FinFunctor::new(one.clone(), arrow.clone(), vec![1], vec![1]).expect("end of the arrow"),
    );
    out.push(FinFunctor::initial(&iso));
    out.push(FinFunctor::identity(&iso));
    let arrow_to_iso = crate::search::FunctorSearch::new(&arrow, &iso)
        .all()
        .expect("tiny search")
        .into_iter()
        .find(|f| f.on_object(0) == 0 && f.on_object(1) == 1)
        .expect("the arrow maps onto the iso");
    out.push(arrow_to_iso);
    out
}

/// A weight built from representables by flexible colimits, with the tree
/// that built it.
#[derive(Debug, Clone)]
pub struct FlexFixture {
    pub name: &'static str,
    pub base: Arc<FinCat>,
    pub tree: FlexTree,
    pub weight: Weight,
}

fn fixture(name: &'static str, base: &Arc<FinCat>, tree: FlexTree) -> FlexFixture {
    let weight = tree.evaluate(base).expect("fixture trees evaluate");
    FlexFixture {
        name,
        base: base.clone(),
        tree,
        weight,
    }
}

fn pick(
    maps: &[crate::weights::WeightMap],
    pred: impl Fn(&crate::weights::WeightMap) -> bool,
) -> crate::weights::WeightMap {
    maps.iter()
        .find(|m| pred(m))
        .expect("fixture map exists")
        .clone()
}

pub fn flexible_fixtures() -> Vec<FlexFixture> {
    let limits = SearchLimits::default();
    let one = NamedCat::One.arc();
    let arrow = NamedCat::Arrow.arc();
    let pair = NamedCat::ParallelPair.arc();
    let c2 = Arc::new(FinCat::cyclic_group(2));
    let idem = Arc::new(FinCat::idempotent_monoid());
    let rep = FlexTree::Representable;
    let mut out = vec![
        fixture("point", &one, rep(0)),
        fixture(
            "two-points",
            &one,
            FlexTree::Coproduct(vec![rep(0), rep(0)]),
        ),
        fixture("arrow-source", &arrow, rep(0)),
        fixture("arrow-target", &arrow, rep(1)),
        fixture(
            "arrow-both",
            &arrow,
            FlexTree::Coproduct(vec![rep(0), rep(1)]),
        ),
        fixture("pair-source", &pair, rep(0)),
        fixture("pair-target", &pair, rep(1)),
        fixture("c2-regular", &c2, rep(0)),
        fixture("empty", &arrow, FlexTree::Coproduct(vec![])),
    ];

    // The arrow over the point, as a coinserter of the two points.
    let two = FlexTree::Coproduct(vec![rep(0), rep(0)]);
    let two_w = two.evaluate(&one).expect("coproduct");
    let y = Weight::representable(&one, 0).expect("object 0");
    let pts = weight_maps(&y, &two_w, limits).expect("small");
    let tree = FlexTree::coinserter_of(rep(0), two.clone(), &pts[0], &pts[1], 50);
    out.push(fixture("arrow-coinserter", &one, tree));

    // The parallel pair, then its two arrows coequified.
    let pair_tree = FlexTree::Coinserter {
        domain: Box::new(two.clone()),
        codomain: Box::new(two.clone()),
        f: MapData {
            components: vec![(vec![0, 0], vec![0, 0])],
        },
        g: MapData {
            components: vec![(vec![1, 1], vec![1, 1])],
        },
        bound: 50,
    };
    let pair_w = pair_tree.evaluate(&one).expect("parallel pair");
    out.push(fixture("pair-coinserter", &one, pair_tree.clone()));
    let ends = weight_maps(&y, &pair_w, limits).expect("small");
    let src = pick(&ends, |m| m.component(0).on_object(0) == 0);
    let tgt = pick(&ends, |m| m.component(0).on_object(0) == 1);
    let mut cells = Vec::new();
    crate::weights::for_each_modification(&src, &tgt, limits, |m| {
        cells.push(m.clone());
        std::ops::ControlFlow::Continue(())
    })
    .expect("small");
    out.push(fixture(
        "pair-coequified",
        &one,
        FlexTree::coequifier_of(rep(0), pair_tree, &cells[0], &cells[1]),
    ));

    // Over the arrow: a 2-cell inserted between the two copies of y(0).
    let y0 = Weight::representable(&arrow, 0).expect("object 0");
    let twice = FlexTree::Coproduct(vec![rep(1), rep(1)]);
    let twice_w = twice.evaluate(&arrow).expect("coproduct");
    let into = weight_maps(&y0, &twice_w, limits).expect("small");
    out.push(fixture(
        "arrow-base-coinserter",
        &arrow,
        FlexTree::coinserter_of(rep(0), twice, &into[0], &into[1], 50),
    ));

    // Splitting of `h ↦ e∘h` on the representable of the idempotent monoid.
    let yi = Weight::representable(&idem, 0).expect("object 0");
    let e_mor = idem.morphisms().find(|&m| !idem.is_identity(m)).expect("e");
    let hom: Vec<usize> = idem.hom(0, 0).to_vec();
    let post: Vec<usize> = hom
        .iter()
        .map(|&h| {
            hom.iter()
                .position(|&x| x == idem.comp(e_mor, h))
                .expect("in hom")
        })
        .collect();
    let e = MapData {
        components: vec![(post.clone(), post)],
    }
    .build(&yi, &yi)
    .expect("postcomposition is natural");
    out.push(fixture(
        "idempotent-split",
        &idem,
        FlexTree::split_of(rep(0), &e),
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::classify;
    use crate::weights::certify_flexible;

    #[test]
    fn pools_have_their_classes() {
        for p in fibration_pool() {
            assert!(classify(&p).unwrap().is_fibration);
        }
        for i in cofibration_pool() {
            assert!(classify(&i).unwrap().is_cofibration);
        }
    }

    #[test]
    fn fixtures_certify() {
        for fx in flexible_fixtures() {
            let c = certify_flexible(&fx.weight, &fx.tree, SearchLimits::default()).unwrap();
            assert!(c.certified, "{}", fx.name);
        }
    }
}
