//! The pseudolimit (iso-comma object) and pseudocolimit of a single arrow.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use super::{evaluation, functor_category, pullback, Pullback};
use crate::error::{ResourceError, Result};
use crate::fincat::{
    compose_functors, whisker, FinCat, FinFunctor, MorId, NamedCat, NatTransform, ObjId, Side,
};
use crate::search::{FunctorSearch, SearchLimits, TransformSearch};

/// The pseudolimit `L` of `f: A -> B`: objects are triples `(a, b, β)` with
/// `β: b ≅ f(a)`, arrows are pairs `(x, y)` making the square commute.
#[derive(Debug, Clone)]
pub struct ArrowPseudolimit {
    pub f: FinFunctor,
    pub cat: Arc<FinCat>,
    pub u: FinFunctor,
    pub v: FinFunctor,
    /// `v ⇒ f∘u`, invertible; its component at `(a, b, β)` is `β`.
    pub lambda: NatTransform,
    /// `A -> L`, `a ↦ (a, f a, 1)`.
    pub d: FinFunctor,
    /// `d∘u ⇒ 1_L`, invertible, with `u·zeta` an identity.
    pub zeta: NatTransform,
    pub triples: Vec<(ObjId, ObjId, MorId)>,
}

pub fn pseudolimit_of_arrow(f: &FinFunctor) -> ArrowPseudolimit {
    let (a, b) = (f.domain(), f.codomain());
    let mut triples = Vec::new();
    let mut obj_index = HashMap::new();
    let mut objects = Vec::new();
    for x in a.objects() {
        for y in b.objects() {
            for beta in b.isos(y, f.on_object(x)) {
                obj_index.insert((x, y, beta), triples.len());
                triples.push((x, y, beta));
                objects.push(format!(
                    "({},{},{})",
                    a.object_name(x),
                    b.object_name(y),
                    b.morphism_name(beta)
                ));
            }
        }
    }
    let mut arrows = Vec::new();
    let mut pairs = Vec::new();
    let mut mor_index = HashMap::new();
    for (s, &(x, y, beta)) in triples.iter().enumerate() {
        for (t, &(x2, y2, beta2)) in triples.iter().enumerate() {
            for &p in a.hom(x, x2) {
                for &q in b.hom(y, y2) {
                    if b.comp(f.on_morphism(p), beta) == b.comp(beta2, q) {
                        mor_index.insert((s, t, p, q), pairs.len());
                        pairs.push((s, t, p, q));
                        arrows.push((
                            format!("({},{})", a.morphism_name(p), b.morphism_name(q)),
                            s,
                            t,
                        ));
                    }
                }
            }
        }
    }
    let ident = triples
        .iter()
        .enumerate()
        .map(|(s, &(x, y, _))| mor_index[&(s, s, a.identity(x), b.identity(y))])
        .collect();
    let cat = FinCat::from_parts_associative(
        format!("PsLim({})", a.name()),
        objects,
        arrows,
        ident,
        |g, h| {
            let (s, _, p1, q1) = pairs[h];
            let (_, t, p2, q2) = pairs[g];
            mor_index
                .get(&(s, t, a.comp(p2, p1), b.comp(q2, q1)))
                .copied()
        },
    )
    .expect("iso-comma category is a category");
    let cat = Arc::new(cat);
    let u = FinFunctor::new_unchecked(
        cat.clone(),
        a.clone(),
        triples.iter().map(|t| t.0).collect(),
        pairs.iter().map(|p| p.2).collect(),
    );
    let v = FinFunctor::new_unchecked(
        cat.clone(),
        b.clone(),
        triples.iter().map(|t| t.1).collect(),
        pairs.iter().map(|p| p.3).collect(),
    );
    let fu = compose_functors(f, &u).expect("composable");
    let lambda = NatTransform::new_unchecked(v.clone(), fu, triples.iter().map(|t| t.2).collect());
    let d_obj: Vec<ObjId> = a
        .objects()
        .map(|x| {
            let fx = f.on_object(x);
            obj_index[&(x, fx, b.identity(fx))]
        })
        .collect();
    let d_mor = a
        .morphisms()
        .map(|p| mor_index[&(d_obj[a.src(p)], d_obj[a.tgt(p)], p, f.on_morphism(p))])
        .collect();
    let d = FinFunctor::new_unchecked(a.clone(), cat.clone(), d_obj, d_mor);
    let du = compose_functors(&d, &u).expect("composable");
    let zeta_comps = triples
        .iter()
        .enumerate()
        .map(|(s, &(x, _, beta))| {
            let inv = b.inverse(beta).expect("beta is an iso");
            mor_index[&(du.on_object(s), s, a.identity(x), inv)]
        })
        .collect();
    let zeta = NatTransform::new_unchecked(du, FinFunctor::identity(&cat), zeta_comps);
    ArrowPseudolimit {
        f: f.clone(),
        cat,
        u,
        v,
        lambda,
        d,
        zeta,
        triples,
    }
}

impl ArrowPseudolimit {
    /// Check the one-dimensional universal property against a probe `X`:
    /// `c ↦ (u∘c, v∘c, λc)` is a bijection from functors `X -> L` onto
    /// triples `(a: X -> A, b: X -> B, φ: b ≅ f∘a)`. When `two_dimensional`
    /// is set, also check that whiskering by `u` is a bijection on 2-cells.
    pub fn verify_universal(
        &self,
        probe: &Arc<FinCat>,
        two_dimensional: bool,
        limits: SearchLimits,
    ) -> Result<bool> {
        let (a, b) = (self.f.domain(), self.f.codomain());
        let into_l = FunctorSearch::new(probe, &self.cat).limits(limits).all()?;
        let mut images = HashSet::new();
        for c in &into_l {
            let uc = compose_functors(&self.u, c)?;
            let vc = compose_functors(&self.v, c)?;
            let lc = whisker(c, &self.lambda, Side::Pre)?;
            if !lc.is_invertible() {
                return Ok(false);
            }
            images.insert((
                uc.morphism_map().to_vec(),
                vc.morphism_map().to_vec(),
                lc.components().to_vec(),
            ));
        }
        if images.len() != into_l.len() {
            return Ok(false);
        }
        let mut triples = 0usize;
        for x in FunctorSearch::new(probe, a).limits(limits).all()? {
            let fx = compose_functors(&self.f, &x)?;
            for y in FunctorSearch::new(probe, b).limits(limits).all()? {
                let mut ok = true;
                TransformSearch::new(&y, &fx)
                    .isos_only()
                    .limits(limits)
                    .for_each(|comps| {
                        triples += 1;
                        if !images.contains(&(
                            x.morphism_map().to_vec(),
                            y.morphism_map().to_vec(),
                            comps.to_vec(),
                        )) {
                            ok = false;
                        }
                        std::ops::ControlFlow::Continue(())
                    })?;
                if !ok {
                    return Ok(false);
                }
            }
        }
        if triples != into_l.len() {
            return Ok(false);
        }
        if two_dimensional {
            for c in &into_l {
                for c2 in &into_l {
                    let cells = TransformSearch::new(c, c2).limits(limits).all()?;
                    let uc = compose_functors(&self.u, c)?;
                    let uc2 = compose_functors(&self.u, c2)?;
                    let below = TransformSearch::new(&uc, &uc2).limits(limits).count()?;
                    let mut seen = HashSet::new();
                    for t in &cells {
                        seen.insert(whisker(&self.u, t, Side::Post)?.components().to_vec());
                    }
                    if seen.len() != cells.len() || below as usize != cells.len() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// The pseudolimit built the other way: pull back evaluation at the end of
/// the cotensor `[Iso, B]` along `f`. Used as an independent oracle.
pub fn pseudolimit_via_cotensor(
    f: &FinFunctor,
    limits: SearchLimits,
) -> Result<Pullback, crate::error::Error> {
    let iso = NamedCat::FreeIso.arc();
    let isos_of_b = functor_category(&iso, f.codomain(), limits)?;
    let ev1 = evaluation(&isos_of_b, 1, f.codomain());
    pullback(f, &ev1)
}

/// The pseudocolimit `C` of `f: A -> B`: objects `A ⊔ B`, and
/// `hom_C(x, y) = hom_B(x̂, ŷ)` where `â = f(a)`.
#[derive(Debug, Clone)]
pub struct ArrowPseudocolimit {
    pub f: FinFunctor,
    pub cat: Arc<FinCat>,
    pub i: FinFunctor,
    pub j: FinFunctor,
    /// `i ⇒ j∘f`, invertible.
    pub lambda: NatTransform,
    /// The collapse `C -> B` with `e∘i = f`, `e∘j = 1`.
    pub e: FinFunctor,
    /// `j∘e ⇒ 1_C`, invertible.
    pub epsilon: NatTransform,
}

pub fn pseudocolimit_of_arrow(f: &FinFunctor) -> ArrowPseudocolimit {
    let (a, b) = (f.domain(), f.codomain());
    let na = a.num_objects();
    let n = na + b.num_objects();
    let hat = |x: ObjId| if x < na { f.on_object(x) } else { x - na };
    let mut objects = Vec::with_capacity(n);
    for x in a.objects() {
        objects.push(format!("A.{}", a.object_name(x)));
    }
    for y in b.objects() {
        objects.push(format!("B.{}", b.object_name(y)));
    }
    // Arrows are listed by underlying arrow of B, then by lifted endpoints,
    // so that C = B on the nose when A is empty.
    let mut fiber = vec![Vec::new(); b.num_objects()];
    let mut fiber_pos = vec![0; n];
    for x in 0..n {
        fiber_pos[x] = fiber[hat(x)].len();
        fiber[hat(x)].push(x);
    }
    let mut base = Vec::with_capacity(b.num_morphisms());
    let mut arrows = Vec::new();
    let mut under = Vec::new();
    for m in b.morphisms() {
        base.push(arrows.len());
        for &x in &fiber[b.src(m)] {
            for &y in &fiber[b.tgt(m)] {
                let label = if x == y && b.is_identity(m) {
                    format!("id_{}", objects[x])
                } else {
                    format!("{}:{}>{}", b.morphism_name(m), objects[x], objects[y])
                };
                arrows.push((label, x, y));
                under.push(m);
            }
        }
    }
    let arrow_id = |x: ObjId, y: ObjId, m: MorId| {
        base[m] + fiber_pos[x] * fiber[b.tgt(m)].len() + fiber_pos[y]
    };
    let ident = (0..n).map(|x| arrow_id(x, x, b.identity(hat(x)))).collect();
    let arrow_ends: Vec<(ObjId, ObjId)> = arrows.iter().map(|a| (a.1, a.2)).collect();
    let cat = FinCat::from_parts_associative(
        format!("PsColim({})", a.name()),
        objects,
        arrows,
        ident,
        |g, h| {
            let (x, _) = arrow_ends[h];
            let (_, z) = arrow_ends[g];
            Some(arrow_id(x, z, b.comp(under[g], under[h])))
        },
    )
    .expect("pseudocolimit of an arrow is a category");
    let cat = Arc::new(cat);
    let i = FinFunctor::new_unchecked(
        a.clone(),
        cat.clone(),
        a.objects().collect(),
        a.morphisms()
            .map(|p| arrow_id(a.src(p), a.tgt(p), f.on_morphism(p)))
            .collect(),
    );
    let j = FinFunctor::new_unchecked(
        b.clone(),
        cat.clone(),
        b.objects().map(|y| na + y).collect(),
        b.morphisms()
            .map(|q| arrow_id(na + b.src(q), na + b.tgt(q), q))
            .collect(),
    );
    let jf = compose_functors(&j, f).expect("composable");
    let lambda = NatTransform::new_unchecked(
        i.clone(),
        jf,
        a.objects()
            .map(|x| arrow_id(x, na + f.on_object(x), b.identity(f.on_object(x))))
            .collect(),
    );
    let e = FinFunctor::new_unchecked(cat.clone(), b.clone(), (0..n).map(hat).collect(), under);
    let je = compose_functors(&j, &e).expect("composable");
    let epsilon = NatTransform::new_unchecked(
        je,
        FinFunctor::identity(&cat),
        (0..n)
            .map(|x| arrow_id(na + hat(x), x, b.identity(hat(x))))
            .collect(),
    );
    ArrowPseudocolimit {
        f: f.clone(),
        cat,
        i,
        j,
        lambda,
        e,
        epsilon,
    }
}

impl ArrowPseudocolimit {
    /// Check that `c ↦ (c∘i, c∘j, cλ)` is a bijection from functors `C -> X`
    /// onto triples `(x1: A -> X, x2: B -> X, φ: x1 ≅ x2∘f)`.
    pub fn verify_universal(&self, probe: &Arc<FinCat>, limits: SearchLimits) -> Result<bool> {
        let (a, b) = (self.f.domain(), self.f.codomain());
        let out_of_c = FunctorSearch::new(&self.cat, probe).limits(limits).all()?;
        let mut images = HashSet::new();
        for c in &out_of_c {
            let ci = compose_functors(c, &self.i)?;
            let cj = compose_functors(c, &self.j)?;
            let cl = whisker(c, &self.lambda, Side::Post)?;
            images.insert((
                ci.morphism_map().to_vec(),
                cj.morphism_map().to_vec(),
                cl.components().to_vec(),
            ));
        }
        if images.len() != out_of_c.len() {
            return Ok(false);
        }
        let mut triples = 0usize;
        let mut ok = true;
        let xs = FunctorSearch::new(a, probe).limits(limits).all()?;
        let ys = FunctorSearch::new(b, probe).limits(limits).all()?;
        for x in &xs {
            for y in &ys {
                let yf = compose_functors(y, &self.f)?;
                TransformSearch::new(x, &yf)
                    .isos_only()
                    .limits(limits)
                    .for_each(|comps| {
                        triples += 1;
                        ok &= images.contains(&(
                            x.morphism_map().to_vec(),
                            y.morphism_map().to_vec(),
                            comps.to_vec(),
                        ));
                        std::ops::ControlFlow::Continue(())
                    })
                    .map_err(|e: ResourceError| e)?;
            }
        }
        Ok(ok && triples == out_of_c.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::are_isomorphic;

    fn lim() -> SearchLimits {
        SearchLimits::default()
    }

    #[test]
    fn pseudolimit_of_identity_on_one() {
        let one = NamedCat::One.arc();
        let pl = pseudolimit_of_arrow(&FinFunctor::identity(&one));
        assert_eq!(*pl.cat, *one);
        assert!(pl.lambda.is_identity());
    }

    #[test]
    fn pseudolimit_of_identity_on_arrow() {
        let arrow = NamedCat::Arrow.arc();
        let pl = pseudolimit_of_arrow(&FinFunctor::identity(&arrow));
        assert!(are_isomorphic(&pl.cat, &arrow).unwrap());
    }

    #[test]
    fn pseudolimit_of_identity_on_iso() {
        let iso = NamedCat::FreeIso.arc();
        let pl = pseudolimit_of_arrow(&FinFunctor::identity(&iso));
        assert_eq!(pl.cat.num_objects(), 4);
        assert!(pl.cat.is_chaotic());
    }

    #[test]
    fn pseudolimit_structure_laws() {
        let iso = NamedCat::FreeIso.arc();
        let one = NamedCat::One.arc();
        let f = FinFunctor::terminal(&iso, &one);
        let pl = pseudolimit_of_arrow(&f);
        assert!(compose_functors(&pl.u, &pl.d).unwrap().is_identity());
        assert!(pl.lambda.is_invertible());
        assert!(whisker(&pl.d, &pl.lambda, Side::Pre).unwrap().is_identity());
        assert!(pl.zeta.is_invertible());
        assert!(whisker(&pl.u, &pl.zeta, Side::Post).unwrap().is_identity());
        assert!(pl
            .verify_universal(&NamedCat::Arrow.arc(), true, lim())
            .unwrap());
    }

    #[test]
    fn cotensor_route_agrees() {
        let gens = crate::fincat::generating_maps();
        for f in &gens {
            let pl = pseudolimit_of_arrow(f);
            let pb = pseudolimit_via_cotensor(f, lim()).unwrap();
            assert!(are_isomorphic(&pl.cat, &pb.cat).unwrap());
        }
    }

    #[test]
    fn pseudocolimit_examples() {
        let one = NamedCat::One.arc();
        let c = pseudocolimit_of_arrow(&FinFunctor::identity(&one));
        assert_eq!(c.cat.num_objects(), 2);
        assert!(c.cat.is_chaotic());

        let two = NamedCat::TwoDiscrete.arc();
        let c = pseudocolimit_of_arrow(&FinFunctor::terminal(&two, &one));
        assert_eq!(c.cat.num_objects(), 3);
        assert!(c.cat.is_chaotic());

        let arrow = NamedCat::Arrow.arc();
        let c = pseudocolimit_of_arrow(&FinFunctor::initial(&arrow));
        assert_eq!(*c.cat, *arrow);
        assert_eq!(c.j.morphism_map(), &[0, 1, 2]);
    }

    #[test]
    fn pseudocolimit_structure_laws() {
        let gens = crate::fincat::generating_maps();
        for f in &gens {
            let c = pseudocolimit_of_arrow(f);
            assert_eq!(compose_functors(&c.e, &c.i).unwrap(), *f);
            assert!(compose_functors(&c.e, &c.j).unwrap().is_identity());
            assert!(c.j.is_injective_on_objects());
            assert!(c.lambda.is_invertible());
            assert!(c.epsilon.is_invertible());
            assert!(whisker(&c.e, &c.lambda, Side::Post).unwrap().is_identity());
            assert!(whisker(&c.e, &c.epsilon, Side::Post).unwrap().is_identity());
            assert!(whisker(&c.j, &c.epsilon, Side::Pre).unwrap().is_identity());
            assert!(c.verify_universal(&NamedCat::FreeIso.arc(), lim()).unwrap());
        }
    }
}
