//! Enumeration of weight maps and modifications, and weight-level lifting.

use std::ops::ControlFlow;

use serde::Serialize;

use super::{Modification, Weight, WeightMap};
use crate::error::{Error, ResourceError, Result};
use crate::fincat::{same_cat, FinFunctor, NatTransform};
use crate::search::{FunctorSearch, SearchLimits, TransformSearch};

/// `p∘top = bottom∘i` for weight maps `i: A -> B`, `p: E -> X`.
#[derive(Debug, Clone, Serialize)]
pub struct WeightSquare {
    pub i: WeightMap,
    pub p: WeightMap,
    pub top: WeightMap,
    pub bottom: WeightMap,
}

impl WeightSquare {
    pub fn new(
        i: WeightMap,
        p: WeightMap,
        top: WeightMap,
        bottom: WeightMap,
    ) -> Result<WeightSquare> {
        if top.source() != i.source()
            || top.target() != p.source()
            || bottom.source() != i.target()
            || bottom.target() != p.target()
        {
            return Err(Error::shape("weight square endpoints do not match"));
        }
        if p.after(&top)? != bottom.after(&i)? {
            return Err(Error::Invalid("weight square does not commute".into()));
        }
        Ok(WeightSquare { i, p, top, bottom })
    }
}

/// Naturality at one base arrow `m: d -> c`: `comp_d ∘ J(m) = K(m) ∘ comp_c`.
fn natural_at(j: &Weight, k: &Weight, m: usize, comp_d: &FinFunctor, comp_c: &FinFunctor) -> bool {
    let jm = j.at_morphism(m);
    let km = k.at_morphism(m);
    let jc = j.at_object(j.base().tgt(m));
    jc.objects()
        .all(|o| comp_d.on_object(jm.on_object(o)) == km.on_object(comp_c.on_object(o)))
        && jc
            .morphisms()
            .all(|h| comp_d.on_morphism(jm.on_morphism(h)) == km.on_morphism(comp_c.on_morphism(h)))
}

/// Backtrack over base objects choosing one candidate component each.
fn search_maps(
    j: &Weight,
    k: &Weight,
    cands: &[Vec<FinFunctor>],
    limits: SearchLimits,
    visit: &mut dyn FnMut(&[FinFunctor]) -> ControlFlow<()>,
) -> Result<()> {
    let c = j.base().clone();
    let n = c.num_objects();
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    let mut nodes = 0u64;
    // Arrows to check once object x is assigned: both ends <= x, one end = x.
    let checks: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            c.morphisms()
                .filter(|&m| {
                    let (s, t) = (c.src(m), c.tgt(m));
                    s.max(t) == x && !c.is_identity(m)
                })
                .collect()
        })
        .collect();
    #[allow(clippy::too_many_arguments)]
    fn go(
        x: usize,
        n: usize,
        j: &Weight,
        k: &Weight,
        cands: &[Vec<FinFunctor>],
        checks: &[Vec<usize>],
        chosen: &mut Vec<usize>,
        nodes: &mut u64,
        limits: SearchLimits,
        visit: &mut dyn FnMut(&[FinFunctor]) -> ControlFlow<()>,
    ) -> std::result::Result<ControlFlow<()>, ResourceError> {
        if x == n {
            let comps: Vec<FinFunctor> = chosen
                .iter()
                .enumerate()
                .map(|(y, &i)| cands[y][i].clone())
                .collect();
            return Ok(visit(&comps));
        }
        let c = j.base();
        for i in 0..cands[x].len() {
            *nodes += 1;
            if *nodes > limits.max_nodes {
                return Err(ResourceError {
                    what: "weight map search nodes".into(),
                    limit: limits.max_nodes,
                });
            }
            chosen.push(i);
            let pick = |y: usize| &cands[y][chosen[y]];
            let ok = checks[x]
                .iter()
                .all(|&m| natural_at(j, k, m, pick(c.src(m)), pick(c.tgt(m))));
            if ok {
                if let ControlFlow::Break(()) =
                    go(x + 1, n, j, k, cands, checks, chosen, nodes, limits, visit)?
                {
                    chosen.pop();
                    return Ok(ControlFlow::Break(()));
                }
            }
            chosen.pop();
        }
        Ok(ControlFlow::Continue(()))
    }
    let _ = go(
        0,
        n,
        j,
        k,
        cands,
        &checks,
        &mut chosen,
        &mut nodes,
        limits,
        visit,
    )?;
    Ok(())
}

fn check_same_base(j: &Weight, k: &Weight) -> Result<()> {
    if !same_cat(j.base(), k.base()) {
        return Err(Error::shape("weights over different bases"));
    }
    Ok(())
}

/// Visit every weight map `j => k`.
pub fn for_each_weight_map(
    j: &Weight,
    k: &Weight,
    limits: SearchLimits,
    mut visit: impl FnMut(&WeightMap) -> ControlFlow<()>,
) -> Result<()> {
    check_same_base(j, k)?;
    let cands = j
        .base()
        .objects()
        .map(|x| {
            FunctorSearch::new(j.at_object(x), k.at_object(x))
                .limits(limits)
                .collect(limits.max_functors)
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    search_maps(j, k, &cands, limits, &mut |comps| {
        visit(&WeightMap::new_unchecked(
            j.clone(),
            k.clone(),
            comps.to_vec(),
        ))
    })
}

pub fn weight_maps(j: &Weight, k: &Weight, limits: SearchLimits) -> Result<Vec<WeightMap>> {
    let mut out = Vec::new();
    let mut over = false;
    for_each_weight_map(j, k, limits, |m| {
        if out.len() as u64 >= limits.max_functors {
            over = true;
            return ControlFlow::Break(());
        }
        out.push(m.clone());
        ControlFlow::Continue(())
    })?;
    if over {
        return Err(ResourceError {
            what: "weight maps".into(),
            limit: limits.max_functors,
        }
        .into());
    }
    Ok(out)
}

/// A weight isomorphism `a => b`, if one exists.
pub fn find_weight_iso(a: &Weight, b: &Weight, limits: SearchLimits) -> Result<Option<WeightMap>> {
    check_same_base(a, b)?;
    let mut cands = Vec::new();
    for x in a.base().objects() {
        let (p, q) = (a.at_object(x), b.at_object(x));
        if p.num_objects() != q.num_objects() || p.num_morphisms() != q.num_morphisms() {
            return Ok(None);
        }
        let isos = FunctorSearch::new(p, q)
            .limits(limits)
            .injective(true, true)
            .collect(limits.max_functors)?;
        if isos.is_empty() {
            return Ok(None);
        }
        cands.push(isos);
    }
    let mut found = None;
    search_maps(a, b, &cands, limits, &mut |comps| {
        found = Some(comps.to_vec());
        ControlFlow::Break(())
    })?;
    Ok(found.map(|comps| WeightMap::new_unchecked(a.clone(), b.clone(), comps)))
}

/// Visit every modification `f => g`.
pub fn for_each_modification(
    f: &WeightMap,
    g: &WeightMap,
    limits: SearchLimits,
    mut visit: impl FnMut(&Modification) -> ControlFlow<()>,
) -> Result<()> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(Error::shape(
            "modifications between non-parallel weight maps",
        ));
    }
    let (j, k) = (f.source(), f.target());
    let c = j.base().clone();
    let cands = c
        .objects()
        .map(|x| {
            TransformSearch::new(f.component(x), g.component(x))
                .limits(limits)
                .all()
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let n = c.num_objects();
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    // K(m)·θ_c = θ_d·J(m) for m: d -> c, checked once both ends are chosen.
    let ok_at = |m: usize, chosen: &[usize]| {
        let (d, e) = (c.src(m), c.tgt(m));
        let (td, te) = (&cands[d][chosen[d]], &cands[e][chosen[e]]);
        j.at_object(e).objects().all(|a| {
            k.at_morphism(m).on_morphism(te.component(a))
                == td.component(j.at_morphism(m).on_object(a))
        })
    };
    let mut stack: Vec<usize> = vec![0];
    // Iterative backtracking: stack[x] is the next candidate to try at x.
    while let Some(&next) = stack.last() {
        let x = stack.len() - 1;
        if x == n {
            let comps: Vec<NatTransform> = chosen
                .iter()
                .enumerate()
                .map(|(y, &i)| cands[y][i].clone())
                .collect();
            let m = Modification {
                source: f.clone(),
                target: g.clone(),
                components: comps,
            };
            if visit(&m).is_break() {
                return Ok(());
            }
            stack.pop();
            chosen.pop();
            continue;
        }
        if next >= cands[x].len() {
            stack.pop();
            chosen.pop();
            continue;
        }
        *stack.last_mut().expect("nonempty") += 1;
        chosen.push(next);
        let fine = c
            .morphisms()
            .filter(|&m| c.src(m).max(c.tgt(m)) == x)
            .all(|m| ok_at(m, &chosen));
        if fine {
            stack.push(0);
        } else {
            chosen.pop();
        }
    }
    Ok(())
}

/// A diagonal `l: B => E` with `l∘i = top` and `p∘l = bottom`, if any.
pub fn solve_weight_square(sq: &WeightSquare, limits: SearchLimits) -> Result<Option<WeightMap>> {
    let (b, e) = (sq.i.target(), sq.p.source());
    let c = b.base().clone();
    let mut cands = Vec::with_capacity(c.num_objects());
    for x in c.objects() {
        let (bx, ex) = (b.at_object(x), e.at_object(x));
        let (i, p) = (sq.i.component(x), sq.p.component(x));
        let (top, bottom) = (sq.top.component(x), sq.bottom.component(x));
        let mut search = FunctorSearch::new(bx, ex).limits(limits);
        for o in bx.objects() {
            let over = ex
                .objects()
                .filter(|&y| p.on_object(y) == bottom.on_object(o))
                .collect();
            search.restrict_object(o, over);
        }
        for h in bx.morphisms() {
            let over = ex
                .morphisms()
                .filter(|&y| p.on_morphism(y) == bottom.on_morphism(h))
                .collect();
            search.restrict_morphism(h, over);
        }
        let ax = i.domain();
        for o in ax.objects() {
            search.restrict_object(i.on_object(o), vec![top.on_object(o)]);
        }
        for h in ax.morphisms() {
            search.restrict_morphism(i.on_morphism(h), vec![top.on_morphism(h)]);
        }
        let found = search.collect(limits.max_functors)?;
        if found.is_empty() {
            return Ok(None);
        }
        cands.push(found);
    }
    let mut lift = None;
    search_maps(b, e, &cands, limits, &mut |comps| {
        lift = Some(comps.to_vec());
        ControlFlow::Break(())
    })?;
    let Some(comps) = lift else {
        return Ok(None);
    };
    let l = WeightMap::new(b.clone(), e.clone(), comps)?;
    if l.after(&sq.i)? != sq.top || sq.p.after(&l)? != sq.bottom {
        return Err(Error::Consistency("weight lift fails its triangles".into()));
    }
    Ok(Some(l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::NamedCat;

    #[test]
    fn maps_out_of_representable_match_points() {
        // Weight maps y(c) => W correspond to objects of W(c).
        let arrow = NamedCat::Arrow.arc();
        let w = Weight::constant(&arrow, &NamedCat::FreeIso.arc());
        for c in arrow.objects() {
            let y = Weight::representable(&arrow, c).unwrap();
            let maps = weight_maps(&y, &w, SearchLimits::default()).unwrap();
            assert_eq!(maps.len(), 2);
            for m in &maps {
                m.validate().unwrap();
            }
        }
    }

    #[test]
    fn modifications_between_constant_maps() {
        let iso = NamedCat::FreeIso.arc();
        let base = NamedCat::ParallelPair.arc();
        let t = Weight::terminal(&base);
        let w = Weight::constant(&base, &iso);
        let f = WeightMap::new(t.clone(), w.clone(), vec![FinFunctor::point(&iso, 0); 2]).unwrap();
        let g = WeightMap::new(t.clone(), w.clone(), vec![FinFunctor::point(&iso, 1); 2]).unwrap();
        let mut n = 0;
        for_each_modification(&f, &g, SearchLimits::default(), |m| {
            Modification::new(
                m.source().clone(),
                m.target().clone(),
                m.components().to_vec(),
            )
            .unwrap();
            n += 1;
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(n, 1);
    }

    #[test]
    fn isomorphic_weights_found() {
        let base = NamedCat::Arrow.arc();
        let a = Weight::representable(&base, 1).unwrap();
        let b = a.product(&Weight::terminal(&base)).unwrap();
        assert!(find_weight_iso(&a, &b, SearchLimits::default())
            .unwrap()
            .is_some());
        let t = Weight::terminal(&base);
        let y0 = Weight::representable(&base, 0).unwrap();
        assert!(find_weight_iso(&t, &y0, SearchLimits::default())
            .unwrap()
            .is_none());
    }
}
