//! Flexible colimits of weights, computed pointwise, and certificates built
//! from them.

use std::ops::ControlFlow;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{find_weight_iso, set_presheaf_weight, Modification, Weight, WeightMap, WeightSquare};
use crate::catlim::{
    coequifier, coinserter_bounded, product, split_idempotent, CoinserterOutcome, Word,
};
use crate::error::{Error, ResourceError, Result};
use crate::fincat::{compose_functors, FinCat, FinFunctor, MorId, NamedCat, NatTransform, ObjId};
use crate::search::{are_isomorphic, FunctorSearch, SearchLimits};

/// A colimit of weights with its structure maps: the injections of a
/// coproduct, the quotient map of a coequifier or coinserter, or `[r, s]`
/// for a splitting.
#[derive(Debug, Clone, Serialize)]
pub struct WeightColimit {
    pub weight: Weight,
    pub maps: Vec<WeightMap>,
}

pub fn weight_coproduct(base: &Arc<FinCat>, ws: &[Weight]) -> Result<WeightColimit> {
    let (weight, maps) = Weight::coproduct_with_injections(ws, base)?;
    Ok(WeightColimit { weight, maps })
}

/// Pointwise coequifier of two parallel modifications `α, β: f => g: J => K`.
pub fn weight_coequifier(alpha: &Modification, beta: &Modification) -> Result<WeightColimit> {
    if alpha.source() != beta.source() || alpha.target() != beta.target() {
        return Err(Error::shape("coequifier of non-parallel modifications"));
    }
    let k = alpha.source().target();
    let base = k.base().clone();
    let pieces = base
        .objects()
        .map(|c| coequifier(&alpha.components()[c], &beta.components()[c]))
        .collect::<Result<Vec<_>>>()?;
    let at_morphism = base
        .morphisms()
        .map(|m| {
            let (d, c) = (base.src(m), base.tgt(m));
            let km = k.at_morphism(m);
            let (from, to) = (&pieces[c], &pieces[d]);
            FinFunctor::new_unchecked(
                from.quotient.clone(),
                to.quotient.clone(),
                km.object_map().to_vec(),
                from.classes
                    .iter()
                    .map(|cls| to.p.on_morphism(km.on_morphism(cls[0])))
                    .collect(),
            )
        })
        .collect();
    let weight = Weight::new(
        base.clone(),
        pieces.iter().map(|p| p.quotient.clone()).collect(),
        at_morphism,
    )?;
    let p = WeightMap::new(
        k.clone(),
        weight.clone(),
        pieces.into_iter().map(|p| p.p).collect(),
    )?;
    Ok(WeightColimit {
        weight,
        maps: vec![p],
    })
}

/// Pointwise splitting of a strict idempotent `e: W => W`.
pub fn weight_split_idempotent(e: &WeightMap) -> Result<WeightColimit> {
    let w = e.source();
    if e.target() != w || e.after(e)? != *e {
        return Err(Error::shape("weight map is not a strict idempotent"));
    }
    let base = w.base().clone();
    let pieces = base
        .objects()
        .map(|c| split_idempotent(e.component(c)))
        .collect::<Result<Vec<_>>>()?;
    let at_morphism = base
        .morphisms()
        .map(|m| {
            let (d, c) = (base.src(m), base.tgt(m));
            compose_functors(
                &pieces[d].r,
                &compose_functors(w.at_morphism(m), &pieces[c].s)?,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let weight = Weight::new(
        base.clone(),
        pieces.iter().map(|p| p.cat.clone()).collect(),
        at_morphism,
    )?;
    let r = WeightMap::new(
        w.clone(),
        weight.clone(),
        pieces.iter().map(|p| p.r.clone()).collect(),
    )?;
    let s = WeightMap::new(
        weight.clone(),
        w.clone(),
        pieces.into_iter().map(|p| p.s).collect(),
    )?;
    Ok(WeightColimit {
        weight,
        maps: vec![r, s],
    })
}

#[derive(Debug, Clone, Serialize)]
#[allow(clippy::large_enum_variant)]
pub enum WeightCoinserter {
    /// The colimit with quotient map `p` and the universal modification
    /// `p∘f => p∘g`.
    Finite {
        colimit: WeightColimit,
        cell: Modification,
    },
    /// The pointwise coinserter at `at` ran past the budget.
    Diverged {
        at: ObjId,
        created: usize,
        cyclic: bool,
    },
}

/// Pointwise coinserter of `f, g: J => K`, each component bounded by `bound`
/// arrows.
pub fn weight_coinserter_bounded(
    f: &WeightMap,
    g: &WeightMap,
    bound: u64,
) -> Result<WeightCoinserter> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(Error::shape("coinserter of non-parallel weight maps"));
    }
    let (j, k) = (f.source(), f.target());
    let base = k.base().clone();
    let mut pieces = Vec::with_capacity(base.num_objects());
    for c in base.objects() {
        match coinserter_bounded(f.component(c), g.component(c), bound)? {
            CoinserterOutcome::Finite(ins) => pieces.push(*ins),
            CoinserterOutcome::Diverged {
                created, cyclic, ..
            } => {
                return Ok(WeightCoinserter::Diverged {
                    at: c,
                    created,
                    cyclic,
                })
            }
        }
    }
    let mut at_morphism = Vec::with_capacity(base.num_morphisms());
    for m in base.morphisms() {
        let (d, c) = (base.src(m), base.tgt(m));
        let (km, jm) = (k.at_morphism(m), j.at_morphism(m));
        let (from, to) = (&pieces[c], &pieces[d]);
        let mors = from
            .words
            .iter()
            .map(|w| {
                let moved = Word {
                    parts: w.parts.iter().map(|&h| km.on_morphism(h)).collect(),
                    sigmas: w.sigmas.iter().map(|&x| jm.on_object(x)).collect(),
                };
                to.class_of(&moved)
            })
            .collect::<Option<Vec<MorId>>>()
            .ok_or_else(|| Error::Consistency("coinserter action leaves the word index".into()))?;
        at_morphism.push(FinFunctor::new_unchecked(
            from.cat.clone(),
            to.cat.clone(),
            km.object_map().to_vec(),
            mors,
        ));
    }
    let weight = Weight::new(
        base.clone(),
        pieces.iter().map(|p| p.cat.clone()).collect(),
        at_morphism,
    )?;
    let p = WeightMap::new(
        k.clone(),
        weight.clone(),
        pieces.iter().map(|x| x.p.clone()).collect(),
    )?;
    let pf = p.after(f)?;
    let pg = p.after(g)?;
    let cells = base
        .objects()
        .map(|c| {
            NatTransform::new(
                pf.component(c).clone(),
                pg.component(c).clone(),
                pieces[c].cell.components().to_vec(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let cell = Modification::new(pf, pg, cells)?;
    Ok(WeightCoinserter::Finite {
        colimit: WeightColimit {
            weight,
            maps: vec![p],
        },
        cell,
    })
}

/// Raw components of a weight map, per base object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapData {
    pub components: Vec<(Vec<ObjId>, Vec<MorId>)>,
}

impl MapData {
    pub fn of(m: &WeightMap) -> MapData {
        MapData {
            components: m
                .components()
                .iter()
                .map(|f| (f.object_map().to_vec(), f.morphism_map().to_vec()))
                .collect(),
        }
    }

    pub fn build(&self, source: &Weight, target: &Weight) -> Result<WeightMap> {
        if self.components.len() != source.base().num_objects() {
            return Err(Error::shape("map data has the wrong number of components"));
        }
        let comps = self
            .components
            .iter()
            .enumerate()
            .map(|(c, (o, m))| {
                FinFunctor::new(
                    source.at_object(c).clone(),
                    target.at_object(c).clone(),
                    o.clone(),
                    m.clone(),
                )
                .map_err(Error::from)
            })
            .collect::<Result<Vec<_>>>()?;
        WeightMap::new(source.clone(), target.clone(), comps)
    }
}

/// Raw components of a modification: per base object, per object of the
/// source weight there, one arrow of the target weight.
pub type CellData = Vec<Vec<MorId>>;

fn cell_data(m: &Modification) -> CellData {
    m.components()
        .iter()
        .map(|t| t.components().to_vec())
        .collect()
}

fn build_cell(data: &CellData, f: &WeightMap, g: &WeightMap) -> Result<Modification> {
    if data.len() != f.source().base().num_objects() {
        return Err(Error::shape("cell data has the wrong number of components"));
    }
    let comps = data
        .iter()
        .enumerate()
        .map(|(c, row)| {
            NatTransform::new(f.component(c).clone(), g.component(c).clone(), row.clone())
        })
        .collect::<Result<Vec<_>>>()?;
    Modification::new(f.clone(), g.clone(), comps)
}

/// A construction of a weight from representables by flexible colimits.
/// Maps and cells refer to the evaluated children by raw ids, so a tree is
/// meaningful only together with its base.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FlexTree {
    Representable(ObjId),
    Coproduct(Vec<FlexTree>),
    Coequifier {
        domain: Box<FlexTree>,
        codomain: Box<FlexTree>,
        f: MapData,
        g: MapData,
        alpha: CellData,
        beta: CellData,
    },
    Coinserter {
        domain: Box<FlexTree>,
        codomain: Box<FlexTree>,
        f: MapData,
        g: MapData,
        bound: u64,
    },
    SplitIdempotent {
        inner: Box<FlexTree>,
        e: MapData,
    },
}

impl FlexTree {
    pub fn coequifier_of(
        domain: FlexTree,
        codomain: FlexTree,
        alpha: &Modification,
        beta: &Modification,
    ) -> FlexTree {
        FlexTree::Coequifier {
            domain: Box::new(domain),
            codomain: Box::new(codomain),
            f: MapData::of(alpha.source()),
            g: MapData::of(alpha.target()),
            alpha: cell_data(alpha),
            beta: cell_data(beta),
        }
    }

    pub fn coinserter_of(
        domain: FlexTree,
        codomain: FlexTree,
        f: &WeightMap,
        g: &WeightMap,
        bound: u64,
    ) -> FlexTree {
        FlexTree::Coinserter {
            domain: Box::new(domain),
            codomain: Box::new(codomain),
            f: MapData::of(f),
            g: MapData::of(g),
            bound,
        }
    }

    pub fn split_of(inner: FlexTree, e: &WeightMap) -> FlexTree {
        FlexTree::SplitIdempotent {
            inner: Box::new(inner),
            e: MapData::of(e),
        }
    }

    pub fn leaves(&self) -> usize {
        match self {
            FlexTree::Representable(_) => 1,
            FlexTree::Coproduct(ts) => ts.iter().map(FlexTree::leaves).sum(),
            FlexTree::Coequifier {
                domain, codomain, ..
            }
            | FlexTree::Coinserter {
                domain, codomain, ..
            } => domain.leaves() + codomain.leaves(),
            FlexTree::SplitIdempotent { inner, .. } => inner.leaves(),
        }
    }

    /// Rebuild the weight the tree describes.
    pub fn evaluate(&self, base: &Arc<FinCat>) -> Result<Weight> {
        match self {
            FlexTree::Representable(c) => Weight::representable(base, *c),
            FlexTree::Coproduct(ts) => {
                let ws = ts
                    .iter()
                    .map(|t| t.evaluate(base))
                    .collect::<Result<Vec<_>>>()?;
                Ok(weight_coproduct(base, &ws)?.weight)
            }
            FlexTree::Coequifier {
                domain,
                codomain,
                f,
                g,
                alpha,
                beta,
            } => {
                let (j, k) = (domain.evaluate(base)?, codomain.evaluate(base)?);
                let (f, g) = (f.build(&j, &k)?, g.build(&j, &k)?);
                let alpha = build_cell(alpha, &f, &g)?;
                let beta = build_cell(beta, &f, &g)?;
                Ok(weight_coequifier(&alpha, &beta)?.weight)
            }
            FlexTree::Coinserter {
                domain,
                codomain,
                f,
                g,
                bound,
            } => {
                let (j, k) = (domain.evaluate(base)?, codomain.evaluate(base)?);
                let (f, g) = (f.build(&j, &k)?, g.build(&j, &k)?);
                match weight_coinserter_bounded(&f, &g, *bound)? {
                    WeightCoinserter::Finite { colimit, .. } => Ok(colimit.weight),
                    WeightCoinserter::Diverged { at, .. } => Err(ResourceError {
                        what: format!("coinserter at base object {}", base.object_name(at)),
                        limit: *bound,
                    }
                    .into()),
                }
            }
            FlexTree::SplitIdempotent { inner, e } => {
                let w = inner.evaluate(base)?;
                let e = e.build(&w, &w)?;
                Ok(weight_split_idempotent(&e)?.weight)
            }
        }
    }
}

/// Result of checking a weight against a certificate tree.
#[derive(Debug, Clone, Serialize)]
pub struct Certification {
    pub certified: bool,
    pub iso: Option<WeightMap>,
    /// The first base object where the evaluated tree and the weight differ.
    pub mismatch: Option<String>,
}

/// Re-evaluate `tree` and look for a weight isomorphism onto `w`. A
/// positive answer means `w` is flexible, hence cofibrant.
pub fn certify_flexible(
    w: &Weight,
    tree: &FlexTree,
    limits: SearchLimits,
) -> Result<Certification> {
    let built = tree.evaluate(w.base())?;
    let base = w.base();
    for c in base.objects() {
        let (x, y) = (built.at_object(c), w.at_object(c));
        if !are_isomorphic(x, y)? {
            return Ok(Certification {
                certified: false,
                iso: None,
                mismatch: Some(format!(
                    "at {}: tree gives {} objects and {} arrows, weight has {} objects and {} arrows{}",
                    base.object_name(c),
                    x.num_objects(),
                    x.num_morphisms(),
                    y.num_objects(),
                    y.num_morphisms(),
                    if x.num_objects() == y.num_objects() && x.num_morphisms() == y.num_morphisms() {
                        " (same sizes, different tables)"
                    } else {
                        ""
                    }
                )),
            });
        }
    }
    match find_weight_iso(&built, w, limits)? {
        Some(iso) => Ok(Certification {
            certified: true,
            iso: Some(iso),
            mismatch: None,
        }),
        None => Ok(Certification {
            certified: false,
            iso: None,
            mismatch: Some("isomorphic at every base object, but not naturally".into()),
        }),
    }
}

/// A lifting problem `0 => w` against a pointwise trivial fibration that has
/// no solution.
#[derive(Debug, Clone, Serialize)]
pub struct Refutation {
    /// The set presheaf `K`, as a weight of chaotic categories.
    pub chaos: Weight,
    pub square: WeightSquare,
}

#[derive(Debug, Clone, Serialize)]
pub enum RefuteOutcome {
    Counterexample(Box<Refutation>),
    Unknown { tried: u64 },
}

/// The empty weight over a base.
pub fn initial_weight(base: &Arc<FinCat>) -> Weight {
    Weight::constant(base, &NamedCat::Zero.arc())
}

/// `w × Chaos(K) -> w`, a pointwise trivial fibration whenever every `K(c)`
/// is nonempty.
pub fn chaotic_projection(w: &Weight, chaos: &Weight) -> Result<WeightMap> {
    let base = w.base();
    let e = w.product(chaos)?;
    let comps = base
        .objects()
        .map(|c| {
            product(w.at_object(c), chaos.at_object(c))
                .left
                .with_domain(e.at_object(c).clone())
        })
        .collect::<Result<Vec<_>>>()?;
    WeightMap::new(e, w.clone(), comps)
}

/// Search for a set presheaf `K` with nonempty values such that the
/// trivial fibration `w × Chaos(K) -> w` has no section. Such a `K` shows
/// that `0 => w` is not a cofibration. `budget` caps the number of
/// presheaves tried.
pub fn refute_cofibrant(w: &Weight, budget: u64, limits: SearchLimits) -> Result<RefuteOutcome> {
    let base = w.base();
    let op = Arc::new(base.opposite());
    let sets = Arc::new(FinCat::finite_sets(2));
    let mut search = FunctorSearch::new(&op, &sets).limits(limits);
    for x in op.objects() {
        search.restrict_object(x, vec![1, 2]);
    }
    let mut tried = 0u64;
    let mut found: Option<Weight> = None;
    let mut failure: Option<Error> = None;
    search.for_each(|objs, mors| {
        if tried >= budget {
            return ControlFlow::Break(());
        }
        tried += 1;
        let presheaf =
            FinFunctor::new_unchecked(op.clone(), sets.clone(), objs.to_vec(), mors.to_vec());
        let chaos = match set_presheaf_weight(base, &presheaf, true) {
            Ok(k) => k,
            Err(e) => {
                failure = Some(e);
                return ControlFlow::Break(());
            }
        };
        if !has_natural_function(w, &chaos) {
            found = Some(chaos);
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    let Some(chaos) = found else {
        return Ok(RefuteOutcome::Unknown { tried });
    };
    let p = chaotic_projection(w, &chaos)?;
    let zero = initial_weight(base);
    let into = |t: &Weight| {
        WeightMap::new(
            zero.clone(),
            t.clone(),
            base.objects()
                .map(|c| FinFunctor::initial(t.at_object(c)))
                .collect(),
        )
    };
    let square = WeightSquare::new(
        into(w)?,
        p.clone(),
        into(p.source())?,
        WeightMap::identity(w),
    )?;
    Ok(RefuteOutcome::Counterexample(Box::new(Refutation {
        chaos,
        square,
    })))
}

/// Whether some family of functions `ob w(c) -> ob K(c)` is natural, i.e.
/// whether `w => Chaos(K)` has any map.
fn has_natural_function(w: &Weight, chaos: &Weight) -> bool {
    let base = w.base();
    let n = base.num_objects();
    let mut assign: Vec<Vec<ObjId>> = Vec::with_capacity(n);
    fn go(x: usize, n: usize, w: &Weight, k: &Weight, assign: &mut Vec<Vec<ObjId>>) -> bool {
        if x == n {
            return true;
        }
        let base = w.base();
        let (wx, kx) = (w.at_object(x), k.at_object(x));
        let size = wx.num_objects();
        let choices = kx.num_objects();
        if size > 0 && choices == 0 {
            return false;
        }
        let total = choices.pow(size as u32);
        for code in 0..total.max(1) {
            let mut f = Vec::with_capacity(size);
            let mut rest = code;
            for _ in 0..size {
                f.push(rest % choices);
                rest /= choices;
            }
            assign.push(f);
            let ok = base.morphisms().all(|m| {
                let (d, c) = (base.src(m), base.tgt(m));
                if d.max(c) != x {
                    return true;
                }
                w.at_object(c).objects().all(|o| {
                    assign[d][w.at_morphism(m).on_object(o)]
                        == k.at_morphism(m).on_object(assign[c][o])
                })
            });
            if ok && go(x + 1, n, w, k, assign) {
                return true;
            }
            assign.pop();
        }
        false
    }
    go(0, n, w, chaos, &mut assign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{for_each_modification, solve_weight_square, weight_maps};

    fn two_point_weight(base: &Arc<FinCat>) -> (FlexTree, Weight) {
        let t = FlexTree::Coproduct(vec![FlexTree::Representable(0), FlexTree::Representable(0)]);
        let w = t.evaluate(base).unwrap();
        (t, w)
    }

    /// Over the point: the coinserter of the two points `1 => 1 + 1`.
    fn arrow_weight() -> (FlexTree, Weight) {
        let one = NamedCat::One.arc();
        let (t2, w2) = two_point_weight(&one);
        let y = Weight::representable(&one, 0).unwrap();
        let maps = weight_maps(&y, &w2, SearchLimits::default()).unwrap();
        assert_eq!(maps.len(), 2);
        let tree = FlexTree::coinserter_of(FlexTree::Representable(0), t2, &maps[0], &maps[1], 50);
        let w = tree.evaluate(&one).unwrap();
        (tree, w)
    }

    #[test]
    fn coinserter_of_two_points_is_arrow() {
        let (tree, w) = arrow_weight();
        assert!(are_isomorphic(w.at_object(0), &NamedCat::Arrow.arc()).unwrap());
        let one = NamedCat::One.arc();
        let target = Weight::constant(&one, &NamedCat::Arrow.arc());
        let cert = certify_flexible(&target, &tree, SearchLimits::default()).unwrap();
        assert!(cert.certified);
    }

    #[test]
    fn wrong_tree_reports_mismatch() {
        let one = NamedCat::One.arc();
        let target = Weight::constant(&one, &NamedCat::Arrow.arc());
        let cert = certify_flexible(
            &target,
            &FlexTree::Representable(0),
            SearchLimits::default(),
        )
        .unwrap();
        assert!(!cert.certified);
        assert!(cert.mismatch.unwrap().starts_with("at "));
    }

    #[test]
    fn coequifier_of_parallel_pair_weight() {
        let one = NamedCat::One.arc();
        let (t2, w2) = two_point_weight(&one);
        let (a, b) = (NamedCat::Arrow.arc(), NamedCat::ParallelPair.arc());
        // Two σ's from 0 to 1: the parallel pair.
        let j = FlexTree::Coproduct(vec![FlexTree::Representable(0), FlexTree::Representable(0)]);
        let jw = j.evaluate(&one).unwrap();
        let f = MapData {
            components: vec![(vec![0, 0], vec![0, 0])],
        }
        .build(&jw, &w2)
        .unwrap();
        let g = MapData {
            components: vec![(vec![1, 1], vec![1, 1])],
        }
        .build(&jw, &w2)
        .unwrap();
        let pair_tree = FlexTree::coinserter_of(j, t2, &f, &g, 50);
        let pair = pair_tree.evaluate(&one).unwrap();
        assert!(are_isomorphic(pair.at_object(0), &b).unwrap());
        let y = Weight::representable(&one, 0).unwrap();
        let maps = weight_maps(&y, &pair, SearchLimits::default()).unwrap();
        let src = maps
            .iter()
            .find(|m| m.component(0).on_object(0) == 0)
            .unwrap()
            .clone();
        let tgt = maps
            .iter()
            .find(|m| m.component(0).on_object(0) == 1)
            .unwrap()
            .clone();
        let mut cells = Vec::new();
        for_each_modification(&src, &tgt, SearchLimits::default(), |m| {
            cells.push(m.clone());
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(cells.len(), 2);
        let tree =
            FlexTree::coequifier_of(FlexTree::Representable(0), pair_tree, &cells[0], &cells[1]);
        let w = tree.evaluate(&one).unwrap();
        assert!(are_isomorphic(w.at_object(0), &a).unwrap());
        assert!(
            certify_flexible(&w, &tree, SearchLimits::default())
                .unwrap()
                .certified
        );
        assert_eq!(tree.leaves(), 5);
    }

    #[test]
    fn terminal_weight_over_parallel_pair_is_refuted() {
        let pair = NamedCat::ParallelPair.arc();
        let t = Weight::terminal(&pair);
        match refute_cofibrant(&t, 100, SearchLimits::default()).unwrap() {
            RefuteOutcome::Counterexample(r) => {
                assert!(solve_weight_square(&r.square, SearchLimits::default())
                    .unwrap()
                    .is_none());
            }
            RefuteOutcome::Unknown { .. } => panic!("expected a counterexample"),
        }
        match refute_cofibrant(&t, 0, SearchLimits::default()).unwrap() {
            RefuteOutcome::Unknown { tried } => assert_eq!(tried, 0),
            _ => panic!("budget 0 must give Unknown"),
        }
    }

    #[test]
    fn flexible_weights_are_not_refuted() {
        let (_, arrow) = arrow_weight();
        assert!(matches!(
            refute_cofibrant(&arrow, 100, SearchLimits::default()).unwrap(),
            RefuteOutcome::Unknown { .. }
        ));
        let pair = NamedCat::ParallelPair.arc();
        for c in pair.objects() {
            let y = Weight::representable(&pair, c).unwrap();
            assert!(matches!(
                refute_cofibrant(&y, 100, SearchLimits::default()).unwrap(),
                RefuteOutcome::Unknown { .. }
            ));
        }
    }

    #[test]
    fn splitting_identity_returns_weight() {
        let base = NamedCat::Arrow.arc();
        let y = Weight::representable(&base, 1).unwrap();
        let tree = FlexTree::split_of(FlexTree::Representable(1), &WeightMap::identity(&y));
        let w = tree.evaluate(&base).unwrap();
        assert!(find_weight_iso(&w, &y, SearchLimits::default())
            .unwrap()
            .is_some());
    }
}
