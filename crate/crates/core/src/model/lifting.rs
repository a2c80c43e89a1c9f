use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, ResourceError, Result};
use crate::fincat::{compose_functors, FinFunctor};
use crate::search::{FunctorSearch, SearchLimits};

/// A commutative square `p∘top = bottom∘i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftingProblem {
    pub i: FinFunctor,
    pub p: FinFunctor,
    pub top: FinFunctor,
    pub bottom: FinFunctor,
}

impl LiftingProblem {
    pub fn new(i: FinFunctor, p: FinFunctor, top: FinFunctor, bottom: FinFunctor) -> Result<Self> {
        let sq = LiftingProblem { i, p, top, bottom };
        sq.check()?;
        Ok(sq)
    }

    pub fn check(&self) -> Result<()> {
        let lhs = compose_functors(&self.p, &self.top)?;
        let rhs = compose_functors(&self.bottom, &self.i)?;
        if lhs != rhs {
            return Err(Error::shape("lifting square does not commute"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum LiftOutcome {
    Lift(FinFunctor),
    NoLift,
}

/// The search for diagonals `w` with `w∘i = top`, `p∘w = bottom`.
fn diagonal_search(sq: &LiftingProblem, limits: SearchLimits) -> Option<FunctorSearch> {
    let (a, b) = (sq.i.domain(), sq.i.codomain());
    let c = sq.p.domain();
    let mut search = FunctorSearch::new(b, c).limits(limits);
    for y in b.objects() {
        let want = sq.bottom.on_object(y);
        search.restrict_object(
            y,
            c.objects().filter(|&z| sq.p.on_object(z) == want).collect(),
        );
    }
    for m in b.morphisms() {
        let want = sq.bottom.on_morphism(m);
        search.restrict_morphism(
            m,
            c.morphisms()
                .filter(|&n| sq.p.on_morphism(n) == want)
                .collect(),
        );
    }
    let mut obj_forced = vec![None; b.num_objects()];
    for x in a.objects() {
        let (y, t) = (sq.i.on_object(x), sq.top.on_object(x));
        match obj_forced[y] {
            Some(t0) if t0 != t => return None,
            _ => obj_forced[y] = Some(t),
        }
        search.fix_object(y, t);
    }
    let mut mor_forced = vec![None; b.num_morphisms()];
    for k in a.morphisms() {
        let (m, t) = (sq.i.on_morphism(k), sq.top.on_morphism(k));
        match mor_forced[m] {
            Some(t0) if t0 != t => return None,
            _ => mor_forced[m] = Some(t),
        }
        search.fix_morphism(m, t);
    }
    Some(search)
}

/// Find the first diagonal filler in search order, or report that none
/// exists.
pub fn solve_lift(sq: &LiftingProblem, limits: SearchLimits) -> Result<LiftOutcome> {
    sq.check()?;
    let Some(search) = diagonal_search(sq, limits) else {
        return Ok(LiftOutcome::NoLift);
    };
    Ok(match search.first()? {
        Some(w) => LiftOutcome::Lift(w),
        None => LiftOutcome::NoLift,
    })
}

/// Visit every commutative square from `i` to `p`.
pub fn for_each_square(
    i: &FinFunctor,
    p: &FinFunctor,
    limits: SearchLimits,
    mut visit: impl FnMut(LiftingProblem) -> ControlFlow<()>,
) -> Result<()> {
    let (a, b) = (i.domain(), i.codomain());
    let (c, d) = (p.domain(), p.codomain());
    let mut stop = false;
    let mut inner: Option<ResourceError> = None;
    FunctorSearch::new(b, d).limits(limits).for_each(|bo, bm| {
        let bottom = FinFunctor::new(b.clone(), d.clone(), bo.to_vec(), bm.to_vec())
            .expect("search yields functors");
        let mut tops = FunctorSearch::new(a, c).limits(limits);
        for x in a.objects() {
            let want = bottom.on_object(i.on_object(x));
            tops.restrict_object(x, c.objects().filter(|&z| p.on_object(z) == want).collect());
        }
        for k in a.morphisms() {
            let want = bottom.on_morphism(i.on_morphism(k));
            tops.restrict_morphism(
                k,
                c.morphisms()
                    .filter(|&n| p.on_morphism(n) == want)
                    .collect(),
            );
        }
        let res = tops.for_each(|to, tm| {
            let top = FinFunctor::new(a.clone(), c.clone(), to.to_vec(), tm.to_vec())
                .expect("search yields functors");
            let sq = LiftingProblem {
                i: i.clone(),
                p: p.clone(),
                top,
                bottom: bottom.clone(),
            };
            if visit(sq).is_break() {
                stop = true;
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
        if let Err(e) = res {
            inner = Some(e);
            return ControlFlow::Break(());
        }
        if stop {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    match inner {
        Some(e) => Err(e.into()),
        None => Ok(()),
    }
}

/// The first commutative square from `i` to `p` without a diagonal; `None`
/// means `i` has the left lifting property against `p`.
pub fn find_unliftable_square(
    i: &FinFunctor,
    p: &FinFunctor,
    limits: SearchLimits,
) -> Result<Option<LiftingProblem>> {
    let mut bad = None;
    let mut err = None;
    for_each_square(i, p, limits, |sq| match solve_lift(&sq, limits) {
        Ok(LiftOutcome::Lift(_)) => ControlFlow::Continue(()),
        Ok(LiftOutcome::NoLift) => {
            bad = Some(sq);
            ControlFlow::Break(())
        }
        Err(e) => {
            err = Some(e);
            ControlFlow::Break(())
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(bad),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{generating_maps, NamedCat};

    #[test]
    fn empty_to_point_lifts_against_iso_collapse() {
        let iso = NamedCat::FreeIso.arc();
        let one = NamedCat::One.arc();
        let p = FinFunctor::terminal(&iso, &one);
        let i = generating_maps()[0].clone();
        assert!(find_unliftable_square(&i, &p, SearchLimits::default())
            .unwrap()
            .is_none());
        let mut n = 0;
        for_each_square(&i, &p, SearchLimits::default(), |_| {
            n += 1;
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(n, 1);
    }

    #[test]
    fn codiagonal_fails_against_iso_collapse() {
        let iso = NamedCat::FreeIso.arc();
        let one = NamedCat::One.arc();
        let two = NamedCat::TwoDiscrete.arc();
        let p = FinFunctor::terminal(&iso, &one);
        let nabla = FinFunctor::terminal(&two, &one);
        let top = FinFunctor::new(two.clone(), iso.clone(), vec![0, 1], vec![0, 1]).unwrap();
        let sq = LiftingProblem::new(nabla, p.clone(), top, FinFunctor::identity(&one)).unwrap();
        assert_eq!(
            solve_lift(&sq, SearchLimits::default()).unwrap(),
            LiftOutcome::NoLift
        );
    }

    #[test]
    fn lift_against_identity_is_bottom() {
        let arrow = NamedCat::Arrow.arc();
        let iso = NamedCat::FreeIso.arc();
        let i = FinFunctor::point(&arrow, 1);
        let p = FinFunctor::identity(&iso);
        let bottom = FinFunctor::constant(&arrow, &iso, 0);
        let top = FinFunctor::point(&iso, 0);
        let sq = LiftingProblem::new(i, p, top, bottom.clone()).unwrap();
        assert_eq!(
            solve_lift(&sq, SearchLimits::default()).unwrap(),
            LiftOutcome::Lift(bottom)
        );
    }

    #[test]
    fn non_commuting_square_rejected() {
        let iso = NamedCat::FreeIso.arc();
        let i = FinFunctor::point(&iso, 0);
        let p = FinFunctor::identity(&iso);
        let top = FinFunctor::point(&iso, 1);
        let bottom = FinFunctor::identity(&iso);
        assert!(LiftingProblem::new(i, p, top, bottom).is_err());
    }
}
