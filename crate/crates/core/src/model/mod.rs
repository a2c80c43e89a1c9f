//! The folklore model structure on finite categories: weak equivalences are
//! equivalences, fibrations are isofibrations, cofibrations are the functors
//! injective on objects.

mod corner;
mod criterion;
mod factor;
mod lifting;

pub use corner::{corner_map, CornerReport};
pub use criterion::{check_pseudolimit_fibration_criterion, CriterionReport};
pub use factor::{factor, FactorMode, FactorizationWitness};
pub use lifting::{
    find_unliftable_square, for_each_square, solve_lift, LiftOutcome, LiftingProblem,
};

use std::ops::ControlFlow;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::{compose_functors, FinCat, FinFunctor, MorId, NatTransform, ObjId};
use crate::search::{find_natural_iso, FunctorSearch, SearchLimits};

/// A pseudo-inverse `g` with `unit: g∘f ≅ 1_A` and `counit: f∘g ≅ 1_B`.
#[derive(Debug, Clone, Serialize)]
pub struct EquivalenceWitness {
    pub inverse: FinFunctor,
    pub unit: NatTransform,
    pub counit: NatTransform,
}

/// Lift of `β: b ≅ f(e)` to `ε: e' ≅ e` with `f(e') = b`, `f(ε) = β`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IsoLift {
    pub e: ObjId,
    pub b: ObjId,
    pub beta: MorId,
    pub lifted_object: ObjId,
    pub lifted_iso: MorId,
}

/// An exact section `g` (`f∘g = 1`) with `g∘f ≅ 1`.
#[derive(Debug, Clone, Serialize)]
pub struct SectionWitness {
    pub section: FinFunctor,
    pub iso: NatTransform,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassReport {
    pub subject: FinFunctor,
    pub is_weak_equivalence: bool,
    pub is_fibration: bool,
    pub is_cofibration: bool,
    pub is_trivial_fibration: bool,
    pub is_trivial_cofibration: bool,
    pub equivalence: Option<EquivalenceWitness>,
    /// The full lift table when `f` is an isofibration.
    pub lift_table: Option<Vec<IsoLift>>,
    /// An isomorphism `β: b ≅ f(e)` with no lift, when there is one.
    pub unliftable_iso: Option<(ObjId, ObjId, MorId)>,
    /// The (injective) object map when `f` is a cofibration.
    pub injective_objects: Option<Vec<ObjId>>,
    /// A square against `Iso -> 1` with no lift, when `f` is not a cofibration.
    pub cofibration_failure: Option<LiftingProblem>,
    pub retraction: Option<SectionWitness>,
}

impl ClassReport {
    /// Re-check every attached witness independently of how it was found.
    pub fn revalidate(&self, limits: SearchLimits) -> Result<bool> {
        let f = &self.subject;
        let (a, b) = (f.domain(), f.codomain());
        if let Some(w) = &self.equivalence {
            w.inverse.validate()?;
            w.unit.validate()?;
            w.counit.validate()?;
            let gf = compose_functors(&w.inverse, f)?;
            let fg = compose_functors(f, &w.inverse)?;
            if *w.unit.source() != gf
                || !w.unit.target().is_identity()
                || *w.counit.source() != fg
                || !w.counit.target().is_identity()
                || !w.unit.is_invertible()
                || !w.counit.is_invertible()
            {
                return Ok(false);
            }
        }
        if let Some(table) = &self.lift_table {
            for l in table {
                if f.on_object(l.lifted_object) != l.b
                    || a.src(l.lifted_iso) != l.lifted_object
                    || a.tgt(l.lifted_iso) != l.e
                    || !a.is_iso(l.lifted_iso)
                    || f.on_morphism(l.lifted_iso) != l.beta
                {
                    return Ok(false);
                }
            }
            let expected: usize = a
                .objects()
                .map(|e| {
                    b.objects()
                        .map(|y| b.isos(y, f.on_object(e)).count())
                        .sum::<usize>()
                })
                .sum();
            if table.len() != expected {
                return Ok(false);
            }
        }
        if let Some(objs) = &self.injective_objects {
            let mut seen = std::collections::HashSet::new();
            if objs != f.object_map() || !objs.iter().all(|o| seen.insert(*o)) {
                return Ok(false);
            }
        }
        if let Some(sq) = &self.cofibration_failure {
            if solve_lift(sq, limits)? != LiftOutcome::NoLift {
                return Ok(false);
            }
        }
        if let Some(r) = &self.retraction {
            if !compose_functors(f, &r.section)?.is_identity()
                || *r.iso.source() != compose_functors(&r.section, f)?
                || !r.iso.target().is_identity()
                || !r.iso.is_invertible()
            {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The unique `n ∈ hom_A(x, y)` with `f(n) = m`, assuming `f` faithful there.
fn preimage(f: &FinFunctor, x: ObjId, y: ObjId, m: MorId) -> Option<MorId> {
    f.domain()
        .hom(x, y)
        .iter()
        .copied()
        .find(|&n| f.on_morphism(n) == m)
}

pub fn is_fully_faithful(f: &FinFunctor) -> bool {
    let (a, b) = (f.domain(), f.codomain());
    let mut hit = vec![false; b.num_morphisms()];
    for x in a.objects() {
        for y in a.objects() {
            let target = b.hom(f.on_object(x), f.on_object(y));
            let source = a.hom(x, y);
            if source.len() != target.len() {
                return false;
            }
            for &n in source {
                let m = f.on_morphism(n);
                if hit[m] {
                    return false;
                }
                hit[m] = true;
            }
            for &m in source {
                hit[f.on_morphism(m)] = false;
            }
        }
    }
    true
}

/// A pseudo-inverse, when `f` is fully faithful and essentially surjective.
/// Choices take the smallest object id, then the smallest iso id.
pub fn is_equivalence(f: &FinFunctor) -> Option<EquivalenceWitness> {
    if !is_fully_faithful(f) {
        return None;
    }
    let (a, b) = (f.domain(), f.codomain());
    // phi[y]: y ≅ f(g y)
    let mut g_obj = Vec::with_capacity(b.num_objects());
    let mut phi = Vec::with_capacity(b.num_objects());
    for y in b.objects() {
        let (x, iso) = a
            .objects()
            .find_map(|x| b.isos(y, f.on_object(x)).min().map(|iso| (x, iso)))?;
        g_obj.push(x);
        phi.push(iso);
    }
    let g_mor = b
        .morphisms()
        .map(|m| {
            let (s, t) = (b.src(m), b.tgt(m));
            let inv = b.inverse(phi[s]).expect("iso");
            let conj = b.comp(phi[t], b.comp(m, inv));
            preimage(f, g_obj[s], g_obj[t], conj).expect("full")
        })
        .collect();
    let g = FinFunctor::new(b.clone(), a.clone(), g_obj, g_mor).expect("conjugation is functorial");
    let fg = compose_functors(f, &g).expect("composable");
    let gf = compose_functors(&g, f).expect("composable");
    let counit = NatTransform::new(
        fg,
        FinFunctor::identity(b),
        b.objects()
            .map(|y| b.inverse(phi[y]).expect("iso"))
            .collect(),
    )
    .expect("counit is natural");
    let unit_comps = a
        .objects()
        .map(|x| {
            let fx = f.on_object(x);
            let gfx = gf.on_object(x);
            preimage(f, gfx, x, b.inverse(phi[fx]).expect("iso")).expect("full")
        })
        .collect();
    let unit = NatTransform::new(gf, FinFunctor::identity(a), unit_comps).expect("unit is natural");
    Some(EquivalenceWitness {
        inverse: g,
        unit,
        counit,
    })
}

/// Every iso `β: b ≅ f(e)` with its chosen lift, or the first iso that has
/// none.
pub fn isofibration_lifts(f: &FinFunctor) -> Result<Vec<IsoLift>, (ObjId, ObjId, MorId)> {
    let (a, b) = (f.domain(), f.codomain());
    let mut table = Vec::new();
    for e in a.objects() {
        for y in b.objects() {
            for beta in b.isos(y, f.on_object(e)) {
                let lift = a
                    .incoming(e)
                    .iter()
                    .copied()
                    .filter(|&eps| {
                        f.on_morphism(eps) == beta && f.on_object(a.src(eps)) == y && a.is_iso(eps)
                    })
                    .min();
                match lift {
                    Some(eps) => table.push(IsoLift {
                        e,
                        b: y,
                        beta,
                        lifted_object: a.src(eps),
                        lifted_iso: eps,
                    }),
                    None => return Err((e, y, beta)),
                }
            }
        }
    }
    Ok(table)
}

pub fn is_isofibration(f: &FinFunctor) -> bool {
    isofibration_lifts(f).is_ok()
}

pub fn is_cofibration(f: &FinFunctor) -> bool {
    f.is_injective_on_objects()
}

/// For a functor identifying two objects, a square against `Iso -> 1` that
/// has no diagonal: the top separates the identified objects.
pub fn cofibration_counterexample(f: &FinFunctor) -> Option<LiftingProblem> {
    let a = f.domain();
    let (x, _) = a
        .objects()
        .flat_map(|x| a.objects().map(move |y| (x, y)))
        .find(|&(x, y)| x < y && f.on_object(x) == f.on_object(y))?;
    let iso = crate::fincat::NamedCat::FreeIso.arc();
    let one = crate::fincat::NamedCat::One.arc();
    let top = chaotic_map(a, &iso, |o| if o == x { 0 } else { 1 });
    let p = FinFunctor::terminal(&iso, &one);
    let bottom = FinFunctor::terminal(f.codomain(), &one);
    Some(LiftingProblem::new(f.clone(), p, top, bottom).expect("square over a point commutes"))
}

/// The unique functor into a chaotic category with a given object map.
pub(crate) fn chaotic_map(
    dom: &Arc<FinCat>,
    cod: &Arc<FinCat>,
    obj: impl Fn(ObjId) -> ObjId,
) -> FinFunctor {
    let objs: Vec<ObjId> = dom.objects().map(obj).collect();
    let mors = dom
        .morphisms()
        .map(|m| cod.hom(objs[dom.src(m)], objs[dom.tgt(m)])[0])
        .collect();
    FinFunctor::new(dom.clone(), cod.clone(), objs, mors).expect("codomain is chaotic")
}

/// A section `g` with `f∘g = 1` exactly and `g∘f ≅ 1`, searching all
/// sections.
pub fn retract_equivalence(f: &FinFunctor, limits: SearchLimits) -> Result<Option<SectionWitness>> {
    let (a, b) = (f.domain(), f.codomain());
    let mut search = FunctorSearch::new(b, a).limits(limits);
    for y in b.objects() {
        search.restrict_object(y, a.objects().filter(|&x| f.on_object(x) == y).collect());
    }
    for m in b.morphisms() {
        search.restrict_morphism(
            m,
            a.morphisms().filter(|&n| f.on_morphism(n) == m).collect(),
        );
    }
    let mut found = None;
    let mut failure = None;
    let id_a = FinFunctor::identity(a);
    search.for_each(|o, m| {
        let g = FinFunctor::new_unchecked(b.clone(), a.clone(), o.to_vec(), m.to_vec());
        let gf = compose_functors(&g, f).expect("composable");
        match find_natural_iso(&gf, &id_a) {
            Ok(Some(iso)) => {
                found = Some(SectionWitness { section: g, iso });
                ControlFlow::Break(())
            }
            Ok(None) => ControlFlow::Continue(()),
            Err(e) => {
                failure = Some(e);
                ControlFlow::Break(())
            }
        }
    })?;
    if let Some(e) = failure {
        return Err(e.into());
    }
    Ok(found)
}

/// Classify `f`, deciding trivial fibrations by two independent routes.
pub fn classify(f: &FinFunctor) -> Result<ClassReport> {
    classify_with(f, SearchLimits::default())
}

pub fn classify_with(f: &FinFunctor, limits: SearchLimits) -> Result<ClassReport> {
    let equivalence = is_equivalence(f);
    let lifts = isofibration_lifts(f);
    let is_we = equivalence.is_some();
    let is_fib = lifts.is_ok();
    let is_cof = is_cofibration(f);
    let retraction = retract_equivalence(f, limits)?;
    if (is_fib && is_we) != retraction.is_some() {
        return Err(Error::Consistency(format!(
            "trivial fibration routes disagree on {} -> {}: fibration and equivalence = {}, retract equivalence = {}",
            f.domain().name(),
            f.codomain().name(),
            is_fib && is_we,
            retraction.is_some()
        )));
    }
    let (lift_table, unliftable_iso) = match lifts {
        Ok(t) => (Some(t), None),
        Err(w) => (None, Some(w)),
    };
    Ok(ClassReport {
        subject: f.clone(),
        is_weak_equivalence: is_we,
        is_fibration: is_fib,
        is_cofibration: is_cof,
        is_trivial_fibration: is_fib && is_we,
        is_trivial_cofibration: is_cof && is_we,
        equivalence,
        lift_table,
        unliftable_iso,
        injective_objects: is_cof.then(|| f.object_map().to_vec()),
        cofibration_failure: if is_cof {
            None
        } else {
            cofibration_counterexample(f)
        },
        retraction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{generating_maps, NamedCat};

    fn iso_to_point() -> FinFunctor {
        FinFunctor::terminal(&NamedCat::FreeIso.arc(), &NamedCat::One.arc())
    }

    #[test]
    fn classify_named_examples() {
        let r = classify(&iso_to_point()).unwrap();
        assert!(r.is_weak_equivalence && r.is_fibration && !r.is_cofibration);
        assert!(r.is_trivial_fibration);
        assert!(r.revalidate(SearchLimits::default()).unwrap());

        let point = &generating_maps()[3];
        let r = classify(point).unwrap();
        assert!(r.is_weak_equivalence && !r.is_fibration && r.is_cofibration);
        assert!(r.is_trivial_cofibration && !r.is_trivial_fibration);
        assert_eq!(r.unliftable_iso.map(|w| w.1), Some(1));

        let empty = &generating_maps()[0];
        let r = classify(empty).unwrap();
        assert!(!r.is_weak_equivalence && r.is_fibration && r.is_cofibration);
    }

    #[test]
    fn two_to_one_is_not_an_equivalence() {
        let f = FinFunctor::terminal(&NamedCat::TwoDiscrete.arc(), &NamedCat::One.arc());
        assert!(is_equivalence(&f).is_none());
        let r = classify(&f).unwrap();
        assert!(!r.is_cofibration);
        let sq = r.cofibration_failure.as_ref().unwrap();
        assert_eq!(
            solve_lift(sq, SearchLimits::default()).unwrap(),
            LiftOutcome::NoLift
        );
    }

    #[test]
    fn identities_are_everything() {
        for tag in NamedCat::ALL {
            let id = FinFunctor::identity(&tag.arc());
            let r = classify(&id).unwrap();
            assert!(
                r.is_trivial_fibration && r.is_trivial_cofibration,
                "{tag:?}"
            );
            assert!(r.revalidate(SearchLimits::default()).unwrap());
        }
    }

    #[test]
    fn equivalence_witness_for_iso_collapse() {
        let w = is_equivalence(&iso_to_point()).unwrap();
        assert_eq!(w.inverse.object_map(), &[0]);
        assert!(w.unit.is_invertible() && w.counit.is_invertible());
    }
}
