//! Quotients: coequifiers by hom-set congruence, and idempotent splittings.

use std::sync::Arc;

use super::sub_inclusion;
use crate::error::{Error, Result};
use crate::fincat::{compose_functors, FinCat, FinFunctor, MorId, NatTransform, ObjId};
use crate::search::{FunctorSearch, SearchLimits};
use crate::unionfind::UnionFind;

/// The coequifier `p: B -> Q` of two parallel 2-cells into `B`.
#[derive(Debug, Clone)]
pub struct CoequifierWitness {
    pub quotient: Arc<FinCat>,
    pub p: FinFunctor,
    /// Congruence classes of arrows of `B`, indexed by arrows of `Q`.
    pub classes: Vec<Vec<MorId>>,
}

/// Smallest congruence on `b` containing the given pairs of parallel arrows.
pub(crate) fn congruence_closure(b: &FinCat, pairs: &[(MorId, MorId)]) -> UnionFind {
    let mut uf = UnionFind::new(b.num_morphisms());
    for &(x, y) in pairs {
        uf.union(x, y);
    }
    // Every class is spanned by the pairs (m, root m), so stability under
    // whiskering those pairs is enough.
    loop {
        let mut changed = false;
        for m in b.morphisms() {
            let r = uf.find(m);
            if r == m {
                continue;
            }
            for &h in b.outgoing(b.tgt(m)) {
                changed |= uf.union(b.comp(h, m), b.comp(h, r));
            }
            for &h in b.incoming(b.src(m)) {
                changed |= uf.union(b.comp(m, h), b.comp(r, h));
            }
        }
        if !changed {
            return uf;
        }
    }
}

/// Quotient of `b` by a congruence, identity on objects.
pub(crate) fn quotient_by(b: &Arc<FinCat>, uf: &mut UnionFind, name: String) -> CoequifierWitness {
    let (labels, k) = uf.labels();
    let mut classes = vec![Vec::new(); k];
    for m in b.morphisms() {
        classes[labels[m]].push(m);
    }
    let arrows = classes
        .iter()
        .map(|c| {
            let m = c[0];
            (b.morphism_name(m).to_string(), b.src(m), b.tgt(m))
        })
        .collect();
    let ident = b.objects().map(|x| labels[b.identity(x)]).collect();
    let quotient =
        FinCat::from_parts_associative(name, b.object_names().to_vec(), arrows, ident, |g, f| {
            Some(labels[b.compose(classes[g][0], classes[f][0])?])
        })
        .expect("quotient by a congruence is a category");
    let quotient = Arc::new(quotient);
    let p = FinFunctor::new_unchecked(b.clone(), quotient.clone(), b.objects().collect(), labels);
    CoequifierWitness {
        quotient,
        p,
        classes,
    }
}

pub fn coequifier(alpha: &NatTransform, beta: &NatTransform) -> Result<CoequifierWitness> {
    if alpha.source() != beta.source() || alpha.target() != beta.target() {
        return Err(Error::shape("coequifier of non-parallel 2-cells"));
    }
    let b = alpha.target().codomain();
    let pairs: Vec<(MorId, MorId)> = alpha
        .components()
        .iter()
        .copied()
        .zip(beta.components().iter().copied())
        .collect();
    let mut uf = congruence_closure(b, &pairs);
    Ok(quotient_by(b, &mut uf, format!("{}/~", b.name())))
}

impl CoequifierWitness {
    /// Every `q: B -> X` with `qα = qβ` factors uniquely through `p`.
    pub fn verify_universal(
        &self,
        alpha: &NatTransform,
        beta: &NatTransform,
        probe: &Arc<FinCat>,
        limits: SearchLimits,
    ) -> Result<bool> {
        let b = self.p.domain();
        let mut coequifying = 0u64;
        let mut ok = true;
        FunctorSearch::new(b, probe)
            .limits(limits)
            .for_each(|_, q| {
                let equal = alpha
                    .components()
                    .iter()
                    .zip(beta.components())
                    .all(|(&x, &y)| q[x] == q[y]);
                if equal {
                    coequifying += 1;
                    ok &= self
                        .classes
                        .iter()
                        .all(|c| c.iter().all(|&m| q[m] == q[c[0]]));
                }
                std::ops::ControlFlow::Continue(())
            })?;
        let through = FunctorSearch::new(&self.quotient, probe)
            .limits(limits)
            .count()?;
        Ok(ok && through == coequifying)
    }
}

/// A splitting `e = s∘r`, `r∘s = 1` of a strict idempotent.
#[derive(Debug, Clone)]
pub struct Splitting {
    pub cat: Arc<FinCat>,
    pub r: FinFunctor,
    pub s: FinFunctor,
}

pub fn split_idempotent(e: &FinFunctor) -> Result<Splitting> {
    let x = e.domain();
    if !crate::fincat::same_cat(x, e.codomain()) || compose_functors(e, e)? != *e {
        return Err(Error::shape("functor is not a strict idempotent"));
    }
    let objs: Vec<ObjId> = x.objects().filter(|&o| e.on_object(o) == o).collect();
    let mors: Vec<MorId> = x.morphisms().filter(|&m| e.on_morphism(m) == m).collect();
    let sub = sub_inclusion(x, &objs, &mors, format!("Split({})", x.name()));
    let mut obj_pos = vec![0; x.num_objects()];
    for (i, &o) in objs.iter().enumerate() {
        obj_pos[o] = i;
    }
    let mut mor_pos = vec![0; x.num_morphisms()];
    for (i, &m) in mors.iter().enumerate() {
        mor_pos[m] = i;
    }
    let r = FinFunctor::new_unchecked(
        x.clone(),
        sub.cat.clone(),
        x.objects().map(|o| obj_pos[e.on_object(o)]).collect(),
        x.morphisms().map(|m| mor_pos[e.on_morphism(m)]).collect(),
    );
    Ok(Splitting {
        cat: sub.cat,
        r,
        s: sub.inclusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::NamedCat;

    #[test]
    fn coequifier_of_parallel_pair_is_arrow() {
        let one = NamedCat::One.arc();
        let pair = NamedCat::ParallelPair.arc();
        let s = FinFunctor::constant(&one, &pair, 0);
        let t = FinFunctor::constant(&one, &pair, 1);
        let u = NatTransform::new(s.clone(), t.clone(), vec![2]).unwrap();
        let v = NatTransform::new(s, t, vec![3]).unwrap();
        let w = coequifier(&u, &v).unwrap();
        assert_eq!(*w.quotient, NamedCat::Arrow.build());
        assert_eq!(w.p.morphism_map(), &[0, 1, 2, 2]);
        let probe = NamedCat::FreeIso.arc();
        assert!(w
            .verify_universal(&u, &v, &probe, SearchLimits::default())
            .unwrap());
    }

    #[test]
    fn coequifier_of_equal_cells_is_trivial() {
        let iso = NamedCat::FreeIso.arc();
        let id = FinFunctor::identity(&iso);
        let t = NatTransform::identity(&id);
        let w = coequifier(&t, &t).unwrap();
        assert_eq!(*w.quotient, *iso);
        assert!(w.p.is_identity());
    }

    #[test]
    fn closure_propagates_through_composites() {
        // In C2 = {1, g}, identifying g with 1 collapses everything.
        let c2 = Arc::new(FinCat::cyclic_group(2));
        let mut uf = congruence_closure(&c2, &[(0, 1)]);
        let w = quotient_by(&c2, &mut uf, "q".into());
        assert_eq!(w.quotient.num_morphisms(), 1);
    }

    #[test]
    fn splittings() {
        let two = NamedCat::TwoDiscrete.arc();
        let collapse = FinFunctor::new(two.clone(), two.clone(), vec![0, 0], vec![0, 0]).unwrap();
        let s = split_idempotent(&collapse).unwrap();
        assert_eq!(*s.cat, NamedCat::One.build());
        assert!(compose_functors(&s.r, &s.s).unwrap().is_identity());
        assert_eq!(compose_functors(&s.s, &s.r).unwrap(), collapse);

        let arrow = NamedCat::Arrow.arc();
        let to_end = FinFunctor::constant(&arrow, &arrow, 1);
        let s = split_idempotent(&to_end).unwrap();
        assert_eq!(*s.cat, NamedCat::One.build());

        let id = FinFunctor::identity(&arrow);
        assert_eq!(*split_idempotent(&id).unwrap().cat, *arrow);

        let iso = NamedCat::FreeIso.arc();
        let swap = FinFunctor::new(iso.clone(), iso.clone(), vec![1, 0], vec![1, 0, 3, 2]).unwrap();
        assert!(split_idempotent(&swap).is_err());
    }
}
