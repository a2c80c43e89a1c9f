//! Presheaves of categories over a finite base (weights), maps between them,
//! weighted limits, flexible colimits and flexibility certificates.

mod flexible;
mod limit;
mod maps;

pub use flexible::{
    certify_flexible, chaotic_projection, initial_weight, refute_cofibrant, weight_coequifier,
    weight_coinserter_bounded, weight_coproduct, weight_split_idempotent, CellData, Certification,
    FlexTree, MapData, Refutation, RefuteOutcome, WeightCoinserter, WeightColimit,
};
pub use limit::{verify_defining_iso, weighted_limit, DefiningIsoReport, WeightedLimit};
pub use maps::{
    find_weight_iso, for_each_modification, for_each_weight_map, solve_weight_square, weight_maps,
    WeightSquare,
};

use std::sync::Arc;

use serde::Serialize;

use crate::catlim::{coproduct_many, product, product_of_functors, FunctorCategory};
use crate::error::{Error, Result};
use crate::fincat::{compose_functors, same_cat, FinCat, FinFunctor, NatTransform, ObjId};
use crate::model::{classify_with, ClassReport};
use crate::search::SearchLimits;

/// A presheaf of categories `W: C^op -> Cat` over a finite base `C`. An
/// arrow `m: d -> c` of the base acts as `W(m): W(c) -> W(d)`.
#[derive(Debug, Clone, Serialize)]
pub struct Weight {
    base: Arc<FinCat>,
    at_object: Vec<Arc<FinCat>>,
    at_morphism: Vec<FinFunctor>,
}

impl PartialEq for Weight {
    fn eq(&self, other: &Self) -> bool {
        same_cat(&self.base, &other.base)
            && self.at_object.len() == other.at_object.len()
            && self
                .at_object
                .iter()
                .zip(&other.at_object)
                .all(|(a, b)| same_cat(a, b))
            && self.at_morphism == other.at_morphism
    }
}

impl Weight {
    pub fn new(
        base: Arc<FinCat>,
        at_object: Vec<Arc<FinCat>>,
        at_morphism: Vec<FinFunctor>,
    ) -> Result<Weight> {
        let w = Weight {
            base,
            at_object,
            at_morphism,
        };
        w.validate()?;
        Ok(w)
    }

    /// Check contravariant functoriality exactly.
    pub fn validate(&self) -> Result<()> {
        let c = &self.base;
        if self.at_object.len() != c.num_objects() || self.at_morphism.len() != c.num_morphisms() {
            return Err(Error::shape("weight tables do not match the base"));
        }
        for m in c.morphisms() {
            let f = &self.at_morphism[m];
            f.validate()?;
            if !same_cat(f.domain(), &self.at_object[c.tgt(m)])
                || !same_cat(f.codomain(), &self.at_object[c.src(m)])
            {
                return Err(Error::Invalid(format!(
                    "weight on {} has the wrong endpoints",
                    c.morphism_name(m)
                )));
            }
            if c.is_identity(m) && !f.is_identity() {
                return Err(Error::Invalid(format!(
                    "weight on identity {} is not the identity",
                    c.morphism_name(m)
                )));
            }
        }
        for g in c.morphisms() {
            for &f in c.incoming(c.src(g)) {
                let gf = c.comp(g, f);
                // W(g∘f) = W(f)∘W(g)
                let expect = compose_functors(&self.at_morphism[f], &self.at_morphism[g])?;
                if self.at_morphism[gf] != expect {
                    return Err(Error::Invalid(format!(
                        "weight is not functorial on {}.{}",
                        c.morphism_name(g),
                        c.morphism_name(f)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &Arc<FinCat> {
        &self.base
    }

    pub fn at_object(&self, c: ObjId) -> &Arc<FinCat> {
        &self.at_object[c]
    }

    pub fn at_morphism(&self, m: usize) -> &FinFunctor {
        &self.at_morphism[m]
    }

    /// The weight that is `x` everywhere, with identity actions.
    pub fn constant(base: &Arc<FinCat>, x: &Arc<FinCat>) -> Weight {
        Weight {
            base: base.clone(),
            at_object: vec![x.clone(); base.num_objects()],
            at_morphism: vec![FinFunctor::identity(x); base.num_morphisms()],
        }
    }

    pub fn terminal(base: &Arc<FinCat>) -> Weight {
        Weight::constant(base, &crate::fincat::NamedCat::One.arc())
    }

    /// The representable `C(-, c)`, discrete at every object.
    pub fn representable(base: &Arc<FinCat>, c: ObjId) -> Result<Weight> {
        if c >= base.num_objects() {
            return Err(Error::Invalid(format!("base has no object {c}")));
        }
        let at_object: Vec<Arc<FinCat>> = base
            .objects()
            .map(|d| {
                let names = base
                    .hom(d, c)
                    .iter()
                    .map(|&h| base.morphism_name(h).to_string())
                    .collect();
                Arc::new(FinCat::discrete(
                    format!("y{}({})", base.object_name(c), base.object_name(d)),
                    names,
                ))
            })
            .collect();
        let at_morphism = base
            .morphisms()
            .map(|m| {
                let (d2, d) = (base.src(m), base.tgt(m));
                // h ↦ h∘m, as positions within the hom lists
                let map: Vec<usize> = base
                    .hom(d, c)
                    .iter()
                    .map(|&h| {
                        let hm = base.comp(h, m);
                        base.hom(d2, c)
                            .iter()
                            .position(|&x| x == hm)
                            .expect("in hom")
                    })
                    .collect();
                FinFunctor::new_unchecked(
                    at_object[d].clone(),
                    at_object[d2].clone(),
                    map.clone(),
                    map,
                )
            })
            .collect();
        Ok(Weight {
            base: base.clone(),
            at_object,
            at_morphism,
        })
    }

    /// The pointwise product.
    pub fn product(&self, other: &Weight) -> Result<Weight> {
        if !same_cat(&self.base, &other.base) {
            return Err(Error::shape("weights over different bases"));
        }
        let c = &self.base;
        let prods: Vec<_> = c
            .objects()
            .map(|x| product(&self.at_object[x], &other.at_object[x]))
            .collect();
        let at_morphism = c
            .morphisms()
            .map(|m| {
                let (h, _, _) = product_of_functors(&self.at_morphism[m], &other.at_morphism[m]);
                h.with_domain(prods[c.tgt(m)].cat.clone())
                    .and_then(|h| h.with_codomain(prods[c.src(m)].cat.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Weight {
            base: c.clone(),
            at_object: prods.into_iter().map(|p| p.cat).collect(),
            at_morphism,
        })
    }

    /// The weight `c ↦ [A, W(c)]` with postcomposition actions.
    pub fn exponential(
        &self,
        a: &Arc<FinCat>,
        limits: SearchLimits,
    ) -> Result<(Weight, Vec<FunctorCategory>)> {
        let c = &self.base;
        let fcs = c
            .objects()
            .map(|x| crate::catlim::functor_category(a, &self.at_object[x], limits))
            .collect::<Result<Vec<_>, _>>()?;
        let at_morphism = c
            .morphisms()
            .map(|m| {
                crate::catlim::postcompose(&self.at_morphism[m], &fcs[c.tgt(m)], &fcs[c.src(m)])
            })
            .collect::<Result<Vec<_>>>()?;
        let w = Weight {
            base: c.clone(),
            at_object: fcs.iter().map(|f| f.cat.clone()).collect(),
            at_morphism,
        };
        Ok((w, fcs))
    }

    /// Coproduct of weights, pointwise, with its injections.
    pub(crate) fn coproduct_with_injections(
        ws: &[Weight],
        base: &Arc<FinCat>,
    ) -> Result<(Weight, Vec<WeightMap>)> {
        if ws.iter().any(|w| !same_cat(&w.base, base)) {
            return Err(Error::shape("weights over different bases"));
        }
        let coprods: Vec<_> = base
            .objects()
            .map(|x| {
                coproduct_many(
                    &ws.iter()
                        .map(|w| w.at_object[x].clone())
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        let at_morphism = base
            .morphisms()
            .map(|m| {
                let (src, tgt) = (&coprods[base.tgt(m)], &coprods[base.src(m)]);
                let mut obj = Vec::new();
                let mut mor = Vec::new();
                for (k, w) in ws.iter().enumerate() {
                    let f = &w.at_morphism[m];
                    let inj = &tgt.injections[k];
                    obj.extend(f.object_map().iter().map(|&o| inj.on_object(o)));
                    mor.extend(f.morphism_map().iter().map(|&h| inj.on_morphism(h)));
                }
                FinFunctor::new_unchecked(src.cat.clone(), tgt.cat.clone(), obj, mor)
            })
            .collect();
        let sum = Weight {
            base: base.clone(),
            at_object: coprods.iter().map(|c| c.cat.clone()).collect(),
            at_morphism,
        };
        let injections = (0..ws.len())
            .map(|k| {
                WeightMap::new(
                    ws[k].clone(),
                    sum.clone(),
                    coprods.iter().map(|c| c.injections[k].clone()).collect(),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((sum, injections))
    }

    /// Sizes `(objects, arrows)` at each base object.
    pub fn shape(&self) -> Vec<(usize, usize)> {
        self.at_object
            .iter()
            .map(|c| (c.num_objects(), c.num_morphisms()))
            .collect()
    }
}

/// A 2-natural transformation between weights over the same base.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightMap {
    source: Weight,
    target: Weight,
    components: Vec<FinFunctor>,
}

impl WeightMap {
    pub fn new(source: Weight, target: Weight, components: Vec<FinFunctor>) -> Result<WeightMap> {
        let m = WeightMap {
            source,
            target,
            components,
        };
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(
        source: Weight,
        target: Weight,
        components: Vec<FinFunctor>,
    ) -> WeightMap {
        WeightMap {
            source,
            target,
            components,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let c = &self.source.base;
        if !same_cat(c, &self.target.base) || self.components.len() != c.num_objects() {
            return Err(Error::shape("weight map between different bases"));
        }
        for x in c.objects() {
            let f = &self.components[x];
            f.validate()?;
            if !same_cat(f.domain(), &self.source.at_object[x])
                || !same_cat(f.codomain(), &self.target.at_object[x])
            {
                return Err(Error::Invalid(format!(
                    "component at {} has the wrong endpoints",
                    c.object_name(x)
                )));
            }
        }
        for m in c.morphisms() {
            let (d, e) = (c.src(m), c.tgt(m));
            let lhs = compose_functors(&self.components[d], &self.source.at_morphism[m])?;
            let rhs = compose_functors(&self.target.at_morphism[m], &self.components[e])?;
            if lhs != rhs {
                return Err(Error::Invalid(format!(
                    "weight map is not natural at {}",
                    c.morphism_name(m)
                )));
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Weight {
        &self.source
    }

    pub fn target(&self) -> &Weight {
        &self.target
    }

    pub fn components(&self) -> &[FinFunctor] {
        &self.components
    }

    pub fn component(&self, c: ObjId) -> &FinFunctor {
        &self.components[c]
    }

    pub fn identity(w: &Weight) -> WeightMap {
        WeightMap {
            source: w.clone(),
            target: w.clone(),
            components: w.at_object.iter().map(FinFunctor::identity).collect(),
        }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &WeightMap) -> Result<WeightMap> {
        let comps = self
            .components
            .iter()
            .zip(&first.components)
            .map(|(g, f)| compose_functors(g, f))
            .collect::<Result<Vec<_>>>()?;
        WeightMap::new(first.source.clone(), self.target.clone(), comps)
    }
}

/// A modification between parallel weight maps.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Modification {
    source: WeightMap,
    target: WeightMap,
    components: Vec<NatTransform>,
}

impl Modification {
    pub fn new(
        source: WeightMap,
        target: WeightMap,
        components: Vec<NatTransform>,
    ) -> Result<Modification> {
        let c = source.source.base.clone();
        if source.source != target.source || source.target != target.target {
            return Err(Error::shape(
                "modification between non-parallel weight maps",
            ));
        }
        if components.len() != c.num_objects() {
            return Err(Error::shape(
                "modification has the wrong number of components",
            ));
        }
        for x in c.objects() {
            let t = &components[x];
            t.validate()?;
            if *t.source() != source.components[x] || *t.target() != target.components[x] {
                return Err(Error::Invalid(format!(
                    "modification component at {} has the wrong endpoints",
                    c.object_name(x)
                )));
            }
        }
        let k = &source.target;
        let j = &source.source;
        for m in c.morphisms() {
            let (d, e) = (c.src(m), c.tgt(m));
            // K(m)·θ_e = θ_d·J(m)
            for a in j.at_object[e].objects() {
                let lhs = k.at_morphism[m].on_morphism(components[e].component(a));
                let rhs = components[d].component(j.at_morphism[m].on_object(a));
                if lhs != rhs {
                    return Err(Error::Invalid(format!(
                        "modification is not natural at {}",
                        c.morphism_name(m)
                    )));
                }
            }
        }
        Ok(Modification {
            source,
            target,
            components,
        })
    }

    pub fn source(&self) -> &WeightMap {
        &self.source
    }

    pub fn target(&self) -> &WeightMap {
        &self.target
    }

    pub fn components(&self) -> &[NatTransform] {
        &self.components
    }
}

/// Pointwise classification of a weight map. Weak equivalences and
/// fibrations are detected pointwise; cofibrations are not, so no flag is
/// reported for them.
#[derive(Debug, Clone, Serialize)]
pub struct WeightClassReport {
    pub components: Vec<ClassReport>,
    pub is_weak_equivalence: bool,
    pub is_fibration: bool,
    pub is_trivial_fibration: bool,
}

pub fn classify_weight_map(m: &WeightMap, limits: SearchLimits) -> Result<WeightClassReport> {
    let components = m
        .components
        .iter()
        .map(|f| classify_with(f, limits))
        .collect::<Result<Vec<_>>>()?;
    let we = components.iter().all(|r| r.is_weak_equivalence);
    let fib = components.iter().all(|r| r.is_fibration);
    Ok(WeightClassReport {
        components,
        is_weak_equivalence: we,
        is_fibration: fib,
        is_trivial_fibration: we && fib,
    })
}

/// A presheaf of finite sets, as a functor `C^op -> Set<=n`.
pub fn set_presheaf_weight(
    base: &Arc<FinCat>,
    presheaf: &FinFunctor,
    chaotic: bool,
) -> Result<Weight> {
    let sets = presheaf.codomain();
    let op = presheaf.domain();
    if op.num_objects() != base.num_objects() || op.num_morphisms() != base.num_morphisms() {
        return Err(Error::shape(
            "presheaf is not over the opposite of the base",
        ));
    }
    let at_object: Vec<Arc<FinCat>> = base
        .objects()
        .map(|x| {
            let n: usize = sets
                .object_name(presheaf.on_object(x))
                .parse()
                .expect("sizes");
            let names = (0..n)
                .map(|i| format!("{}{i}", base.object_name(x)))
                .collect();
            Arc::new(if chaotic {
                FinCat::chaotic(format!("K{}", base.object_name(x)), names)
            } else {
                FinCat::discrete(format!("S{}", base.object_name(x)), names)
            })
        })
        .collect();
    let at_morphism = base
        .morphisms()
        .map(|m| {
            let func = parse_function(sets.morphism_name(presheaf.on_morphism(m)));
            let (d, e) = (base.src(m), base.tgt(m));
            let (src, tgt) = (&at_object[e], &at_object[d]);
            let obj: Vec<ObjId> = func.clone();
            let mor = src
                .morphisms()
                .map(|h| tgt.hom(obj[src.src(h)], obj[src.tgt(h)])[0])
                .collect();
            FinFunctor::new(src.clone(), tgt.clone(), obj, mor).map_err(Error::from)
        })
        .collect::<Result<Vec<_>>>()?;
    Weight::new(base.clone(), at_object, at_morphism)
}

fn parse_function(name: &str) -> Vec<usize> {
    let inner = &name[1..name.find(']').expect("function name")];
    if inner.is_empty() {
        return vec![];
    }
    inner
        .split(',')
        .map(|x| x.parse().expect("digit"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::NamedCat;

    #[test]
    fn representables_over_small_bases() {
        let one = NamedCat::One.arc();
        let y = Weight::representable(&one, 0).unwrap();
        assert_eq!(y.shape(), vec![(1, 1)]);

        let arrow = NamedCat::Arrow.arc();
        let y1 = Weight::representable(&arrow, 1).unwrap();
        assert_eq!(y1.shape(), vec![(1, 1), (1, 1)]);
        let y0 = Weight::representable(&arrow, 0).unwrap();
        assert_eq!(y0.shape(), vec![(1, 1), (0, 0)]);

        let two = NamedCat::TwoDiscrete.arc();
        let y = Weight::representable(&two, 1).unwrap();
        assert_eq!(y.shape(), vec![(0, 0), (1, 1)]);
        y.validate().unwrap();
    }

    #[test]
    fn componentwise_iso_collapse_is_trivial_fibration() {
        let arrow = NamedCat::Arrow.arc();
        let iso = Weight::constant(&arrow, &NamedCat::FreeIso.arc());
        let one = Weight::terminal(&arrow);
        let comps = arrow
            .objects()
            .map(|_| FinFunctor::terminal(&NamedCat::FreeIso.arc(), &NamedCat::One.arc()))
            .collect();
        let m = WeightMap::new(iso, one, comps).unwrap();
        let r = classify_weight_map(&m, SearchLimits::default()).unwrap();
        assert!(r.is_trivial_fibration);
        let id = WeightMap::identity(m.source());
        let r = classify_weight_map(&id, SearchLimits::default()).unwrap();
        assert!(r.is_weak_equivalence && r.is_fibration);
    }

    #[test]
    fn non_fibration_component_detected() {
        let two = NamedCat::TwoDiscrete.arc();
        let one_w = Weight::terminal(&two);
        let iso = NamedCat::FreeIso.arc();
        let target = Weight::new(
            two.clone(),
            vec![NamedCat::One.arc(), iso.clone()],
            vec![
                FinFunctor::identity(&NamedCat::One.arc()),
                FinFunctor::identity(&iso),
            ],
        )
        .unwrap();
        let m = WeightMap::new(
            one_w,
            target,
            vec![
                FinFunctor::identity(&NamedCat::One.arc()),
                FinFunctor::point(&iso, 0),
            ],
        )
        .unwrap();
        let r = classify_weight_map(&m, SearchLimits::default()).unwrap();
        assert!(!r.is_fibration);
    }

    #[test]
    fn broken_functoriality_rejected() {
        let pair = NamedCat::ParallelPair.arc();
        let two = NamedCat::TwoDiscrete.arc();
        let id = FinFunctor::identity(&two);
        let swap = FinFunctor::new(two.clone(), two.clone(), vec![1, 0], vec![1, 0]).unwrap();
        // The identity of the base must act as the identity.
        let bad = Weight::new(
            pair,
            vec![two.clone(), two],
            vec![swap.clone(), id.clone(), id, swap],
        );
        assert!(bad.is_err());
    }
}
