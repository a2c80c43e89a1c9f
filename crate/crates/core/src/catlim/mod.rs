//! Finite limits, colimits and (co)tensors inside Cat.

mod coinserter;
mod pseudo;
mod quotient;

pub use coinserter::{coinserter_bounded, Coinserter, CoinserterOutcome, Word};
pub use pseudo::{
    pseudocolimit_of_arrow, pseudolimit_of_arrow, pseudolimit_via_cotensor, ArrowPseudocolimit,
    ArrowPseudolimit,
};
pub use quotient::{coequifier, split_idempotent, CoequifierWitness, Splitting};
pub(crate) use quotient::{congruence_closure, quotient_by};

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, ResourceError, Result};
use crate::fincat::{same_cat, FinCat, FinFunctor, MorId, NamedCat, NatTransform, ObjId};
use crate::search::{FunctorSearch, SearchLimits, TransformSearch};

/// A binary product with its projections.
#[derive(Debug, Clone)]
pub struct Product {
    pub cat: Arc<FinCat>,
    pub left: FinFunctor,
    pub right: FinFunctor,
}

impl Product {
    pub fn object(&self, a: ObjId, b: ObjId) -> ObjId {
        a * self.right.codomain().num_objects() + b
    }

    pub fn morphism(&self, f: MorId, g: MorId) -> MorId {
        f * self.right.codomain().num_morphisms() + g
    }
}

pub fn product(a: &Arc<FinCat>, b: &Arc<FinCat>) -> Product {
    let (na, nb) = (a.num_objects(), b.num_objects());
    let (ma, mb) = (a.num_morphisms(), b.num_morphisms());
    let mut objects = Vec::with_capacity(na * nb);
    for x in a.objects() {
        for y in b.objects() {
            objects.push(format!("({},{})", a.object_name(x), b.object_name(y)));
        }
    }
    let mut arrows = Vec::with_capacity(ma * mb);
    for f in a.morphisms() {
        for g in b.morphisms() {
            arrows.push((
                format!("({},{})", a.morphism_name(f), b.morphism_name(g)),
                a.src(f) * nb + b.src(g),
                a.tgt(f) * nb + b.tgt(g),
            ));
        }
    }
    let ident = (0..na * nb)
        .map(|o| a.identity(o / nb) * mb + b.identity(o % nb))
        .collect();
    let cat = FinCat::from_parts_associative(
        format!("{}x{}", a.name(), b.name()),
        objects,
        arrows,
        ident,
        |g, f| Some(a.comp(g / mb, f / mb) * mb + b.comp(g % mb, f % mb)),
    )
    .expect("product of categories is a category");
    let cat = Arc::new(cat);
    let left = FinFunctor::new_unchecked(
        cat.clone(),
        a.clone(),
        (0..na * nb).map(|o| o / nb).collect(),
        (0..ma * mb).map(|m| m / mb).collect(),
    );
    let right = FinFunctor::new_unchecked(
        cat.clone(),
        b.clone(),
        (0..na * nb).map(|o| o % nb).collect(),
        (0..ma * mb).map(|m| m % mb).collect(),
    );
    Product { cat, left, right }
}

/// `f × g : A × C -> B × D`, with the two products it lives between.
pub fn product_of_functors(f: &FinFunctor, g: &FinFunctor) -> (FinFunctor, Product, Product) {
    let dom = product(f.domain(), g.domain());
    let cod = product(f.codomain(), g.codomain());
    let mg = g.domain().num_morphisms();
    let ng = g.domain().num_objects();
    let obj = dom
        .cat
        .objects()
        .map(|o| cod.object(f.on_object(o / ng), g.on_object(o % ng)))
        .collect();
    let mor = dom
        .cat
        .morphisms()
        .map(|m| cod.morphism(f.on_morphism(m / mg), g.on_morphism(m % mg)))
        .collect();
    let h = FinFunctor::new_unchecked(dom.cat.clone(), cod.cat.clone(), obj, mor);
    (h, dom, cod)
}

/// A coproduct of finitely many categories with its injections.
#[derive(Debug, Clone)]
pub struct Coproduct {
    pub cat: Arc<FinCat>,
    pub injections: Vec<FinFunctor>,
}

pub fn coproduct_many(parts: &[Arc<FinCat>]) -> Coproduct {
    let mut obj_off = Vec::with_capacity(parts.len());
    let mut mor_off = Vec::with_capacity(parts.len());
    let (mut no, mut nm) = (0, 0);
    for c in parts {
        obj_off.push(no);
        mor_off.push(nm);
        no += c.num_objects();
        nm += c.num_morphisms();
    }
    let mut objects = Vec::with_capacity(no);
    let mut arrows = Vec::with_capacity(nm);
    let mut ident = Vec::with_capacity(no);
    let mut owner = Vec::with_capacity(nm);
    for (k, c) in parts.iter().enumerate() {
        let tag = |s: &str| {
            if parts.len() == 1 {
                s.to_string()
            } else {
                format!("{k}.{s}")
            }
        };
        for x in c.objects() {
            objects.push(tag(c.object_name(x)));
            ident.push(mor_off[k] + c.identity(x));
        }
        for f in c.morphisms() {
            arrows.push((
                tag(c.morphism_name(f)),
                obj_off[k] + c.src(f),
                obj_off[k] + c.tgt(f),
            ));
            owner.push(k);
        }
    }
    let name = parts
        .iter()
        .map(|c| c.name().to_string())
        .collect::<Vec<_>>()
        .join("+");
    let cat = FinCat::from_parts_associative(name, objects, arrows, ident, |g, f| {
        let k = owner[g];
        if owner[f] != k {
            return None;
        }
        Some(mor_off[k] + parts[k].compose(g - mor_off[k], f - mor_off[k])?)
    })
    .expect("coproduct of categories is a category");
    let cat = Arc::new(cat);
    let injections = parts
        .iter()
        .enumerate()
        .map(|(k, c)| {
            FinFunctor::new_unchecked(
                c.clone(),
                cat.clone(),
                c.objects().map(|x| obj_off[k] + x).collect(),
                c.morphisms().map(|f| mor_off[k] + f).collect(),
            )
        })
        .collect();
    Coproduct { cat, injections }
}

pub fn coproduct(a: &Arc<FinCat>, b: &Arc<FinCat>) -> Coproduct {
    coproduct_many(&[a.clone(), b.clone()])
}

/// A pullback `A ×_C B` of `f: A -> C` and `g: B -> C`.
#[derive(Debug, Clone)]
pub struct Pullback {
    pub cat: Arc<FinCat>,
    pub left: FinFunctor,
    pub right: FinFunctor,
    objects: HashMap<(ObjId, ObjId), ObjId>,
}

impl Pullback {
    /// The object `(a, b)`, when `f(a) = g(b)`.
    pub fn object(&self, a: ObjId, b: ObjId) -> Option<ObjId> {
        self.objects.get(&(a, b)).copied()
    }

    /// The arrow `(x, y)`, when `f(x) = g(y)`.
    pub fn morphism(&self, x: MorId, y: MorId) -> Option<MorId> {
        let cat = &self.cat;
        let (a, b) = (self.left.codomain(), self.right.codomain());
        let s = self.object(a.src(x), b.src(y))?;
        let t = self.object(a.tgt(x), b.tgt(y))?;
        cat.hom(s, t)
            .iter()
            .copied()
            .find(|&m| self.left.on_morphism(m) == x && self.right.on_morphism(m) == y)
    }
}

pub fn pullback(f: &FinFunctor, g: &FinFunctor) -> Result<Pullback> {
    if !same_cat(f.codomain(), g.codomain()) {
        return Err(Error::shape(
            "pullback of functors with different codomains",
        ));
    }
    let (a, b) = (f.domain(), g.domain());
    let mut objects = Vec::new();
    let mut pairs = Vec::new();
    let mut index = HashMap::new();
    for x in a.objects() {
        for y in b.objects() {
            if f.on_object(x) == g.on_object(y) {
                index.insert((x, y), pairs.len());
                pairs.push((x, y));
                objects.push(format!("({},{})", a.object_name(x), b.object_name(y)));
            }
        }
    }
    let mut arrows = Vec::new();
    let mut mpairs = Vec::new();
    let mut mindex = HashMap::new();
    for p in a.morphisms() {
        for q in b.morphisms() {
            if f.on_morphism(p) != g.on_morphism(q) {
                continue;
            }
            let s = index[&(a.src(p), b.src(q))];
            let t = index[&(a.tgt(p), b.tgt(q))];
            mindex.insert((p, q), mpairs.len());
            mpairs.push((p, q));
            arrows.push((
                format!("({},{})", a.morphism_name(p), b.morphism_name(q)),
                s,
                t,
            ));
        }
    }
    let ident = pairs
        .iter()
        .map(|&(x, y)| mindex[&(a.identity(x), b.identity(y))])
        .collect();
    let cat = FinCat::from_parts_associative(
        format!("{}x_{}{}", a.name(), f.codomain().name(), b.name()),
        objects,
        arrows,
        ident,
        |h, k| {
            let (hp, hq) = mpairs[h];
            let (kp, kq) = mpairs[k];
            mindex.get(&(a.comp(hp, kp), b.comp(hq, kq))).copied()
        },
    )?;
    let cat = Arc::new(cat);
    let left = FinFunctor::new_unchecked(
        cat.clone(),
        a.clone(),
        pairs.iter().map(|p| p.0).collect(),
        mpairs.iter().map(|p| p.0).collect(),
    );
    let right = FinFunctor::new_unchecked(
        cat.clone(),
        b.clone(),
        pairs.iter().map(|p| p.1).collect(),
        mpairs.iter().map(|p| p.1).collect(),
    );
    Ok(Pullback {
        cat,
        left,
        right,
        objects: index,
    })
}

/// The equalizer of a parallel pair, as a subcategory with its inclusion.
#[derive(Debug, Clone)]
pub struct Equalizer {
    pub cat: Arc<FinCat>,
    pub inclusion: FinFunctor,
}

pub fn equalizer(f: &FinFunctor, g: &FinFunctor) -> Result<Equalizer> {
    if !same_cat(f.domain(), g.domain()) || !same_cat(f.codomain(), g.codomain()) {
        return Err(Error::shape("equalizer of non-parallel functors"));
    }
    let a = f.domain();
    let keep_obj: Vec<ObjId> = a
        .objects()
        .filter(|&x| f.on_object(x) == g.on_object(x))
        .collect();
    let keep_mor: Vec<MorId> = a
        .morphisms()
        .filter(|&m| f.on_morphism(m) == g.on_morphism(m))
        .collect();
    Ok(sub_inclusion(
        a,
        &keep_obj,
        &keep_mor,
        format!("Eq({})", a.name()),
    ))
}

/// The subcategory on the given objects and arrows (assumed closed).
fn sub_inclusion(a: &Arc<FinCat>, objs: &[ObjId], mors: &[MorId], name: String) -> Equalizer {
    let mut obj_pos = vec![usize::MAX; a.num_objects()];
    for (i, &x) in objs.iter().enumerate() {
        obj_pos[x] = i;
    }
    let mut mor_pos = vec![usize::MAX; a.num_morphisms()];
    for (i, &m) in mors.iter().enumerate() {
        mor_pos[m] = i;
    }
    let cat = FinCat::from_parts_associative(
        name,
        objs.iter().map(|&x| a.object_name(x).to_string()).collect(),
        mors.iter()
            .map(|&m| {
                (
                    a.morphism_name(m).to_string(),
                    obj_pos[a.src(m)],
                    obj_pos[a.tgt(m)],
                )
            })
            .collect(),
        objs.iter().map(|&x| mor_pos[a.identity(x)]).collect(),
        |g, f| {
            let h = mor_pos[a.comp(mors[g], mors[f])];
            (h != usize::MAX).then_some(h)
        },
    )
    .expect("sub-table closed under composition");
    let cat = Arc::new(cat);
    let inclusion = FinFunctor::new_unchecked(cat.clone(), a.clone(), objs.to_vec(), mors.to_vec());
    Equalizer { cat, inclusion }
}

/// The full subcategory on a set of objects, with its inclusion.
pub fn full_subcategory(a: &Arc<FinCat>, objs: &[ObjId]) -> Equalizer {
    let mut keep = vec![false; a.num_objects()];
    for &x in objs {
        keep[x] = true;
    }
    let mut sorted = objs.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mors: Vec<MorId> = a
        .morphisms()
        .filter(|&m| keep[a.src(m)] && keep[a.tgt(m)])
        .collect();
    sub_inclusion(a, &sorted, &mors, format!("{}|sub", a.name()))
}

/// The category `[A, B]` of functors and natural transformations, with the
/// decoding of its objects and arrows.
#[derive(Debug, Clone)]
pub struct FunctorCategory {
    pub cat: Arc<FinCat>,
    pub functors: Vec<FinFunctor>,
    pub transforms: Vec<NatTransform>,
    functor_index: HashMap<(Vec<ObjId>, Vec<MorId>), ObjId>,
    transform_index: HashMap<(ObjId, ObjId, Vec<MorId>), MorId>,
}

impl FunctorCategory {
    pub fn object_of(&self, f: &FinFunctor) -> Option<ObjId> {
        self.functor_index
            .get(&(f.object_map().to_vec(), f.morphism_map().to_vec()))
            .copied()
    }

    pub fn morphism_of(&self, t: &NatTransform) -> Option<MorId> {
        let s = self.object_of(t.source())?;
        let g = self.object_of(t.target())?;
        self.transform_index
            .get(&(s, g, t.components().to_vec()))
            .copied()
    }
}

pub fn functor_category(
    a: &Arc<FinCat>,
    b: &Arc<FinCat>,
    limits: SearchLimits,
) -> Result<FunctorCategory, ResourceError> {
    let functors = FunctorSearch::new(a, b)
        .limits(limits)
        .collect(limits.max_functors)?;
    let mut functor_index = HashMap::with_capacity(functors.len());
    for (i, f) in functors.iter().enumerate() {
        functor_index.insert((f.object_map().to_vec(), f.morphism_map().to_vec()), i);
    }
    let mut transforms = Vec::new();
    let mut transform_index = HashMap::new();
    let mut ends = Vec::new();
    for (i, f) in functors.iter().enumerate() {
        for (j, g) in functors.iter().enumerate() {
            let mut over = false;
            TransformSearch::new(f, g)
                .limits(limits)
                .for_each(|comps| {
                    if transforms.len() as u64 >= limits.max_transforms {
                        over = true;
                        return std::ops::ControlFlow::Break(());
                    }
                    transform_index.insert((i, j, comps.to_vec()), transforms.len());
                    transforms.push(NatTransform::new_unchecked(
                        f.clone(),
                        g.clone(),
                        comps.to_vec(),
                    ));
                    ends.push((i, j));
                    std::ops::ControlFlow::Continue(())
                })?;
            if over {
                return Err(ResourceError {
                    what: format!("transformations in [{}, {}]", a.name(), b.name()),
                    limit: limits.max_transforms,
                });
            }
        }
    }
    let ident: Vec<MorId> = functors
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let comps: Vec<MorId> = f.object_map().iter().map(|&y| b.identity(y)).collect();
            transform_index[&(i, i, comps)]
        })
        .collect();
    let objects = (0..functors.len()).map(|i| format!("F{i}")).collect();
    let arrows = transforms
        .iter()
        .enumerate()
        .map(|(k, _)| {
            let (i, j) = ends[k];
            let label = if ident[i] == k {
                format!("id_F{i}")
            } else {
                format!("t{k}")
            };
            (label, i, j)
        })
        .collect();
    let cat = FinCat::from_parts_associative(
        format!("[{},{}]", a.name(), b.name()),
        objects,
        arrows,
        ident,
        |g, f| {
            let (i, _) = ends[f];
            let (_, k) = ends[g];
            let comps: Vec<MorId> = transforms[f]
                .components()
                .iter()
                .zip(transforms[g].components())
                .map(|(&x, &y)| b.comp(y, x))
                .collect();
            transform_index.get(&(i, k, comps)).copied()
        },
    )
    .expect("vertical composition is closed");
    Ok(FunctorCategory {
        cat: Arc::new(cat),
        functors,
        transforms,
        functor_index,
        transform_index,
    })
}

/// Precomposition `[B, C] -> [A, C]` with `i: A -> B`.
pub fn precompose(
    i: &FinFunctor,
    from: &FunctorCategory,
    to: &FunctorCategory,
) -> Result<FinFunctor> {
    let obj = from
        .functors
        .iter()
        .map(|x| {
            let xi = x.after(i)?;
            to.object_of(&xi)
                .ok_or_else(|| Error::shape("precomposite missing from target functor category"))
        })
        .collect::<Result<Vec<_>>>()?;
    let mor = from
        .transforms
        .iter()
        .map(|t| {
            let comps = i.object_map().iter().map(|&a| t.component(a)).collect();
            let s = obj[from.object_of(t.source()).expect("indexed")];
            let g = obj[from.object_of(t.target()).expect("indexed")];
            to.transform_index
                .get(&(s, g, comps))
                .copied()
                .ok_or_else(|| Error::shape("whiskered transformation missing"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FinFunctor::new(from.cat.clone(), to.cat.clone(), obj, mor)?)
}

/// Postcomposition `[B, C] -> [B, D]` with `p: C -> D`.
pub fn postcompose(
    p: &FinFunctor,
    from: &FunctorCategory,
    to: &FunctorCategory,
) -> Result<FinFunctor> {
    let obj = from
        .functors
        .iter()
        .map(|x| {
            let px = p.after(x)?;
            to.object_of(&px)
                .ok_or_else(|| Error::shape("postcomposite missing from target functor category"))
        })
        .collect::<Result<Vec<_>>>()?;
    let mor = from
        .transforms
        .iter()
        .map(|t| {
            let comps = t.components().iter().map(|&c| p.on_morphism(c)).collect();
            let s = obj[from.object_of(t.source()).expect("indexed")];
            let g = obj[from.object_of(t.target()).expect("indexed")];
            to.transform_index
                .get(&(s, g, comps))
                .copied()
                .ok_or_else(|| Error::shape("whiskered transformation missing"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FinFunctor::new(from.cat.clone(), to.cat.clone(), obj, mor)?)
}

/// Evaluation `[A, B] -> B` at an object of `A`.
pub fn evaluation(fc: &FunctorCategory, at: ObjId, b: &Arc<FinCat>) -> FinFunctor {
    FinFunctor::new_unchecked(
        fc.cat.clone(),
        b.clone(),
        fc.functors.iter().map(|f| f.on_object(at)).collect(),
        fc.transforms.iter().map(|t| t.component(at)).collect(),
    )
}

/// The cotensor `Arrow ⋔ B = [Arrow, B]`.
pub fn cotensor_arrow(
    b: &Arc<FinCat>,
    limits: SearchLimits,
) -> Result<FunctorCategory, ResourceError> {
    functor_category(&NamedCat::Arrow.arc(), b, limits)
}

/// The tensor `Arrow · A = Arrow × A`.
pub fn tensor_arrow(a: &Arc<FinCat>) -> Product {
    product(&NamedCat::Arrow.arc(), a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::are_isomorphic;

    fn lim() -> SearchLimits {
        SearchLimits::default()
    }

    #[test]
    fn product_with_one_is_identity_up_to_iso() {
        let one = NamedCat::One.arc();
        for tag in NamedCat::ALL {
            let x = tag.arc();
            let p = product(&one, &x);
            assert!(are_isomorphic(&p.cat, &x).unwrap(), "{tag:?}");
        }
    }

    #[test]
    fn coproduct_of_points_is_two() {
        let one = NamedCat::One.arc();
        let c = coproduct(&one, &one);
        assert_eq!(*c.cat, NamedCat::TwoDiscrete.build());
    }

    #[test]
    fn pullback_over_point_is_product() {
        let iso = NamedCat::FreeIso.arc();
        let one = NamedCat::One.arc();
        let t = FinFunctor::terminal(&iso, &one);
        let pb = pullback(&t, &t).unwrap();
        assert_eq!(pb.cat.num_objects(), 4);
        assert!(pb.cat.is_chaotic());
        assert!(are_isomorphic(&pb.cat, &product(&iso, &iso).cat).unwrap());
    }

    #[test]
    fn equalizer_of_endpoints() {
        let one = NamedCat::One.arc();
        let pair = NamedCat::ParallelPair.arc();
        let s = FinFunctor::point(&pair, 0);
        let t = FinFunctor::point(&pair, 1);
        let e = equalizer(&s, &t).unwrap();
        assert_eq!(e.cat.num_objects(), 0);
        let e = equalizer(&s, &s).unwrap();
        assert_eq!(*e.cat, *one);
    }

    #[test]
    fn functor_category_of_one() {
        let one = NamedCat::One.arc();
        for tag in NamedCat::ALL {
            let x = tag.arc();
            let fc = functor_category(&one, &x, lim()).unwrap();
            assert!(are_isomorphic(&fc.cat, &x).unwrap(), "{tag:?}");
        }
    }

    #[test]
    fn arrows_of_iso_form_chaotic_category() {
        let fc = functor_category(&NamedCat::Arrow.arc(), &NamedCat::FreeIso.arc(), lim()).unwrap();
        assert_eq!(fc.cat.num_objects(), 4);
        assert!(fc.cat.is_chaotic());
    }

    #[test]
    fn exponent_of_discrete_two_is_square() {
        let arrow = NamedCat::Arrow.arc();
        let fc = functor_category(&NamedCat::TwoDiscrete.arc(), &arrow, lim()).unwrap();
        assert!(are_isomorphic(&fc.cat, &product(&arrow, &arrow).cat).unwrap());
    }

    #[test]
    fn cotensor_objects_are_arrows() {
        let one = NamedCat::One.arc();
        assert_eq!(*cotensor_arrow(&one, lim()).unwrap().cat, *one);
        for tag in NamedCat::ALL {
            let b = tag.arc();
            let c = cotensor_arrow(&b, lim()).unwrap();
            assert_eq!(c.cat.num_objects(), b.num_morphisms());
        }
    }

    #[test]
    fn tensor_cotensor_hom_bijection() {
        // Cat(Arrow·A, B) ≅ Cat(A, Arrow⋔B) for A = B = Arrow.
        let arrow = NamedCat::Arrow.arc();
        let tensor = tensor_arrow(&arrow);
        let cot = cotensor_arrow(&arrow, lim()).unwrap();
        let lhs = FunctorSearch::new(&tensor.cat, &arrow).all().unwrap();
        let rhs = FunctorSearch::new(&arrow, &cot.cat).all().unwrap();
        assert_eq!(lhs.len(), rhs.len());
        // Explicit bijection: F ↦ (a ↦ F(-, a)).
        let arrow_cat = NamedCat::Arrow.arc();
        let mut hits = std::collections::HashSet::new();
        for f in &lhs {
            let obj: Vec<ObjId> = arrow
                .objects()
                .map(|a| {
                    let curried = FinFunctor::new(
                        arrow_cat.clone(),
                        arrow.clone(),
                        arrow_cat
                            .objects()
                            .map(|s| f.on_object(tensor.object(s, a)))
                            .collect(),
                        arrow_cat
                            .morphisms()
                            .map(|m| f.on_morphism(tensor.morphism(m, arrow.identity(a))))
                            .collect(),
                    )
                    .unwrap();
                    cot.object_of(&curried).unwrap()
                })
                .collect();
            let mor: Vec<MorId> = arrow
                .morphisms()
                .map(|g| {
                    let s = obj[arrow.src(g)];
                    let t = obj[arrow.tgt(g)];
                    let comps: Vec<MorId> = arrow_cat
                        .objects()
                        .map(|x| f.on_morphism(tensor.morphism(arrow_cat.identity(x), g)))
                        .collect();
                    let nt =
                        NatTransform::new(cot.functors[s].clone(), cot.functors[t].clone(), comps)
                            .unwrap();
                    cot.morphism_of(&nt).unwrap()
                })
                .collect();
            let g = FinFunctor::new(arrow.clone(), cot.cat.clone(), obj, mor).unwrap();
            assert!(rhs.contains(&g));
            assert!(hits.insert(format!("{g:?}")));
        }
        assert_eq!(hits.len(), rhs.len());
    }

    #[test]
    fn pre_and_post_composition_functors() {
        let one = NamedCat::One.arc();
        let iso = NamedCat::FreeIso.arc();
        let gens = crate::fincat::generating_maps();
        let i = &gens[1]; // 2 -> Arrow
        let bc = functor_category(i.codomain(), &iso, lim()).unwrap();
        let ac = functor_category(i.domain(), &iso, lim()).unwrap();
        let pre = precompose(i, &bc, &ac).unwrap();
        assert_eq!(pre.domain().num_objects(), 4);
        let bd = functor_category(i.codomain(), &one, lim()).unwrap();
        let p = FinFunctor::terminal(&iso, &one);
        let post = postcompose(&p, &bc, &bd).unwrap();
        assert_eq!(post.codomain().num_objects(), 1);
    }
}
