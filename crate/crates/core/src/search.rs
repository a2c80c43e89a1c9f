//! Exhaustive backtracking search for functors and natural transformations.
//!
//! Functor search assigns objects first and prunes any object map that leaves
//! an arrow without a candidate image, then assigns arrows in an order where
//! composites come after their factors so that most images are forced.

use std::ops::ControlFlow;
use std::sync::Arc;

use crate::error::ResourceError;
use crate::fincat::{FinCat, FinFunctor, MorId, NatTransform, ObjId};

/// Budgets for exponential enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Complete object maps a single search may reach.
    pub max_object_maps: u64,
    /// Total backtracking nodes a single search may visit.
    pub max_nodes: u64,
    /// Objects (functors) a functor category may have.
    pub max_functors: u64,
    /// Arrows (transformations) a functor category may have.
    pub max_transforms: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_object_maps: 1_000_000,
            max_nodes: 50_000_000,
            max_functors: 5_000,
            max_transforms: 50_000,
        }
    }
}

struct Plan {
    order: Vec<MorId>,
    /// For each arrow position: a decomposition into earlier arrows.
    forced: Vec<Option<(MorId, MorId)>>,
    /// Composition constraints `(g, f, g∘f)` that become checkable at a position.
    checks: Vec<Vec<(MorId, MorId, MorId)>>,
    /// Non-identity arrows whose later endpoint is the given object.
    obj_checks: Vec<Vec<MorId>>,
}

impl Plan {
    fn new(a: &FinCat) -> Plan {
        let non_id: Vec<MorId> = a.morphisms().filter(|&m| !a.is_identity(m)).collect();
        let m_total = a.num_morphisms();
        let mut decomps: Vec<Vec<(MorId, MorId)>> = vec![Vec::new(); m_total];
        for &g in &non_id {
            for &f in a.incoming(a.src(g)) {
                if a.is_identity(f) {
                    continue;
                }
                let h = a.comp(g, f);
                if !a.is_identity(h) {
                    decomps[h].push((g, f));
                }
            }
        }
        let mut placed = vec![false; m_total];
        for x in a.objects() {
            placed[a.identity(x)] = true;
        }
        let mut order = Vec::with_capacity(non_id.len());
        let mut forced = Vec::with_capacity(non_id.len());
        while order.len() < non_id.len() {
            let pick = non_id.iter().copied().find_map(|m| {
                if placed[m] {
                    return None;
                }
                decomps[m]
                    .iter()
                    .find(|&&(g, f)| placed[g] && placed[f])
                    .map(|&d| (m, Some(d)))
            });
            let (m, d) = pick.unwrap_or_else(|| {
                let m = non_id
                    .iter()
                    .copied()
                    .filter(|&m| !placed[m])
                    .min_by_key(|&m| (decomps[m].len(), m))
                    .expect("unplaced arrow");
                (m, None)
            });
            placed[m] = true;
            order.push(m);
            forced.push(d);
        }
        let mut pos = vec![usize::MAX; m_total];
        for (i, &m) in order.iter().enumerate() {
            pos[m] = i;
        }
        let mut checks = vec![Vec::new(); order.len()];
        for &g in &non_id {
            for &f in a.incoming(a.src(g)) {
                if a.is_identity(f) {
                    continue;
                }
                let h = a.comp(g, f);
                let mut last = pos[g].max(pos[f]);
                if !a.is_identity(h) {
                    last = last.max(pos[h]);
                }
                checks[last].push((g, f, h));
            }
        }
        let mut obj_checks = vec![Vec::new(); a.num_objects()];
        for &m in &non_id {
            obj_checks[a.src(m).max(a.tgt(m))].push(m);
        }
        Plan {
            order,
            forced,
            checks,
            obj_checks,
        }
    }
}

/// Enumerates functors `dom -> cod` subject to per-object and per-arrow
/// candidate restrictions.
pub struct FunctorSearch {
    dom: Arc<FinCat>,
    cod: Arc<FinCat>,
    obj_cands: Vec<Option<Vec<ObjId>>>,
    mor_cands: Vec<Option<Vec<MorId>>>,
    injective_objects: bool,
    injective_morphisms: bool,
    limits: SearchLimits,
}

impl FunctorSearch {
    pub fn new(dom: &Arc<FinCat>, cod: &Arc<FinCat>) -> Self {
        FunctorSearch {
            dom: dom.clone(),
            cod: cod.clone(),
            obj_cands: vec![None; dom.num_objects()],
            mor_cands: vec![None; dom.num_morphisms()],
            injective_objects: false,
            injective_morphisms: false,
            limits: SearchLimits::default(),
        }
    }

    pub fn limits(mut self, limits: SearchLimits) -> Self {
        self.limits = limits;
        self
    }

    /// Restrict the image of an object to a candidate list (searched in the
    /// given order). Repeated restrictions intersect.
    pub fn restrict_object(&mut self, x: ObjId, cands: Vec<ObjId>) -> &mut Self {
        self.obj_cands[x] = Some(match self.obj_cands[x].take() {
            None => cands,
            Some(old) => old.into_iter().filter(|c| cands.contains(c)).collect(),
        });
        self
    }

    pub fn restrict_morphism(&mut self, f: MorId, cands: Vec<MorId>) -> &mut Self {
        self.mor_cands[f] = Some(match self.mor_cands[f].take() {
            None => cands,
            Some(old) => old.into_iter().filter(|c| cands.contains(c)).collect(),
        });
        self
    }

    pub fn fix_object(&mut self, x: ObjId, y: ObjId) -> &mut Self {
        self.restrict_object(x, vec![y])
    }

    pub fn fix_morphism(&mut self, f: MorId, g: MorId) -> &mut Self {
        self.restrict_morphism(f, vec![g])
    }

    pub fn injective(mut self, objects: bool, morphisms: bool) -> Self {
        self.injective_objects = objects;
        self.injective_morphisms = morphisms;
        self
    }

    /// Visit every functor; the visitor may stop early.
    pub fn for_each(
        &self,
        mut visit: impl FnMut(&[ObjId], &[MorId]) -> ControlFlow<()>,
    ) -> Result<(), ResourceError> {
        let plan = Plan::new(&self.dom);
        let mut st = State {
            s: self,
            plan: &plan,
            obj: vec![usize::MAX; self.dom.num_objects()],
            mor: vec![usize::MAX; self.dom.num_morphisms()],
            used_obj: vec![false; self.cod.num_objects()],
            used_mor: vec![false; self.cod.num_morphisms()],
            nodes: 0,
            object_maps: 0,
        };
        match st.objects(0, &mut visit) {
            Ok(_) => Ok(()),
            Err(e) => Err(e),
        }
    }

    pub fn first(&self) -> Result<Option<FinFunctor>, ResourceError> {
        let mut found = None;
        self.for_each(|o, m| {
            found = Some((o.to_vec(), m.to_vec()));
            ControlFlow::Break(())
        })?;
        Ok(found.map(|(o, m)| FinFunctor::new_unchecked(self.dom.clone(), self.cod.clone(), o, m)))
    }

    pub fn all(&self) -> Result<Vec<FinFunctor>, ResourceError> {
        self.collect(u64::MAX)
    }

    /// All functors, failing once more than `cap` are found.
    pub fn collect(&self, cap: u64) -> Result<Vec<FinFunctor>, ResourceError> {
        let mut out = Vec::new();
        let mut over = false;
        self.for_each(|o, m| {
            if out.len() as u64 >= cap {
                over = true;
                return ControlFlow::Break(());
            }
            out.push(FinFunctor::new_unchecked(
                self.dom.clone(),
                self.cod.clone(),
                o.to_vec(),
                m.to_vec(),
            ));
            ControlFlow::Continue(())
        })?;
        if over {
            return Err(ResourceError {
                what: format!("functors {} -> {}", self.dom.name(), self.cod.name()),
                limit: cap,
            });
        }
        Ok(out)
    }

    pub fn count(&self) -> Result<u64, ResourceError> {
        let mut n = 0u64;
        self.for_each(|_, _| {
            n += 1;
            ControlFlow::Continue(())
        })?;
        Ok(n)
    }
}

struct State<'a> {
    s: &'a FunctorSearch,
    plan: &'a Plan,
    obj: Vec<ObjId>,
    mor: Vec<MorId>,
    used_obj: Vec<bool>,
    used_mor: Vec<bool>,
    nodes: u64,
    object_maps: u64,
}

type Step = Result<ControlFlow<()>, ResourceError>;

impl State<'_> {
    fn tick(&mut self) -> Result<(), ResourceError> {
        self.nodes += 1;
        if self.nodes > self.s.limits.max_nodes {
            return Err(ResourceError {
                what: "search nodes".into(),
                limit: self.s.limits.max_nodes,
            });
        }
        Ok(())
    }

    fn mor_allowed(&self, f: MorId, g: MorId) -> bool {
        self.s.mor_cands[f].as_ref().is_none_or(|c| c.contains(&g))
    }

    fn objects(
        &mut self,
        k: usize,
        visit: &mut impl FnMut(&[ObjId], &[MorId]) -> ControlFlow<()>,
    ) -> Step {
        let (a, b) = (&*self.s.dom, &*self.s.cod);
        if k == a.num_objects() {
            self.object_maps += 1;
            if self.object_maps > self.s.limits.max_object_maps {
                return Err(ResourceError {
                    what: "object maps".into(),
                    limit: self.s.limits.max_object_maps,
                });
            }
            for x in a.objects() {
                let id = b.identity(self.obj[x]);
                self.mor[a.identity(x)] = id;
            }
            if self.s.injective_morphisms {
                for x in a.objects() {
                    self.used_mor[b.identity(self.obj[x])] = true;
                }
            }
            let r = self.arrows(0, visit);
            if self.s.injective_morphisms {
                for x in a.objects() {
                    self.used_mor[b.identity(self.obj[x])] = false;
                }
            }
            return r;
        }
        let cands: Vec<ObjId> = match &self.s.obj_cands[k] {
            Some(c) => c.clone(),
            None => b.objects().collect(),
        };
        for y in cands {
            self.tick()?;
            if self.s.injective_objects && self.used_obj[y] {
                continue;
            }
            if !self.mor_allowed(a.identity(k), b.identity(y)) {
                continue;
            }
            self.obj[k] = y;
            let viable = self.plan.obj_checks[k].iter().all(|&m| {
                b.hom(self.obj[a.src(m)], self.obj[a.tgt(m)])
                    .iter()
                    .any(|&g| self.mor_allowed(m, g))
            });
            if !viable {
                continue;
            }
            self.used_obj[y] = true;
            let r = self.objects(k + 1, visit);
            self.used_obj[y] = false;
            if !matches!(r, Ok(ControlFlow::Continue(()))) {
                return r;
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    fn arrows(
        &mut self,
        k: usize,
        visit: &mut impl FnMut(&[ObjId], &[MorId]) -> ControlFlow<()>,
    ) -> Step {
        if k == self.plan.order.len() {
            return Ok(visit(&self.obj, &self.mor));
        }
        let (a, b) = (&*self.s.dom, &*self.s.cod);
        let m = self.plan.order[k];
        let (s, t) = (self.obj[a.src(m)], self.obj[a.tgt(m)]);
        let cands: Vec<MorId> = match self.plan.forced[k] {
            Some((g, f)) => vec![b.comp(self.mor[g], self.mor[f])],
            None => match &self.s.mor_cands[m] {
                Some(c) => c.clone(),
                None => b.hom(s, t).to_vec(),
            },
        };
        for img in cands {
            self.tick()?;
            if b.src(img) != s || b.tgt(img) != t || !self.mor_allowed(m, img) {
                continue;
            }
            if self.s.injective_morphisms && self.used_mor[img] {
                continue;
            }
            self.mor[m] = img;
            let ok = self.plan.checks[k]
                .iter()
                .all(|&(g, f, h)| self.mor[h] == b.comp(self.mor[g], self.mor[f]));
            if !ok {
                continue;
            }
            self.used_mor[img] = self.s.injective_morphisms;
            let r = self.arrows(k + 1, visit);
            self.used_mor[img] = false;
            if !matches!(r, Ok(ControlFlow::Continue(()))) {
                return r;
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

/// Enumerates natural transformations between two parallel functors.
pub struct TransformSearch<'a> {
    source: &'a FinFunctor,
    target: &'a FinFunctor,
    comp_cands: Vec<Option<Vec<MorId>>>,
    isos_only: bool,
    limits: SearchLimits,
}

impl<'a> TransformSearch<'a> {
    pub fn new(source: &'a FinFunctor, target: &'a FinFunctor) -> Self {
        TransformSearch {
            source,
            target,
            comp_cands: vec![None; source.domain().num_objects()],
            isos_only: false,
            limits: SearchLimits::default(),
        }
    }

    pub fn limits(mut self, limits: SearchLimits) -> Self {
        self.limits = limits;
        self
    }

    pub fn isos_only(mut self) -> Self {
        self.isos_only = true;
        self
    }

    pub fn restrict_component(&mut self, x: ObjId, cands: Vec<MorId>) -> &mut Self {
        self.comp_cands[x] = Some(cands);
        self
    }

    pub fn for_each(
        &self,
        mut visit: impl FnMut(&[MorId]) -> ControlFlow<()>,
    ) -> Result<(), ResourceError> {
        let a = &**self.source.domain();
        let mut checks = vec![Vec::new(); a.num_objects()];
        for m in a.morphisms() {
            if !a.is_identity(m) {
                checks[a.src(m).max(a.tgt(m))].push(m);
            }
        }
        let mut comps = vec![usize::MAX; a.num_objects()];
        let mut nodes = 0u64;
        self.go(0, &checks, &mut comps, &mut nodes, &mut visit)
            .map(|_| ())
    }

    fn go(
        &self,
        k: usize,
        checks: &[Vec<MorId>],
        comps: &mut Vec<MorId>,
        nodes: &mut u64,
        visit: &mut impl FnMut(&[MorId]) -> ControlFlow<()>,
    ) -> Step {
        let a = &**self.source.domain();
        let b = &**self.source.codomain();
        if k == a.num_objects() {
            return Ok(visit(comps));
        }
        let (s, t) = (self.source.on_object(k), self.target.on_object(k));
        let cands: Vec<MorId> = match &self.comp_cands[k] {
            Some(c) => c.clone(),
            None => b.hom(s, t).to_vec(),
        };
        for c in cands {
            *nodes += 1;
            if *nodes > self.limits.max_nodes {
                return Err(ResourceError {
                    what: "transformation search nodes".into(),
                    limit: self.limits.max_nodes,
                });
            }
            if b.src(c) != s || b.tgt(c) != t || (self.isos_only && !b.is_iso(c)) {
                continue;
            }
            comps[k] = c;
            let natural = checks[k].iter().all(|&m| {
                b.comp(self.target.on_morphism(m), comps[a.src(m)])
                    == b.comp(comps[a.tgt(m)], self.source.on_morphism(m))
            });
            if !natural {
                continue;
            }
            let r = self.go(k + 1, checks, comps, nodes, visit)?;
            if r.is_break() {
                return Ok(r);
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    pub fn first(&self) -> Result<Option<NatTransform>, ResourceError> {
        let mut found = None;
        self.for_each(|c| {
            found = Some(c.to_vec());
            ControlFlow::Break(())
        })?;
        Ok(found.map(|c| NatTransform::new_unchecked(self.source.clone(), self.target.clone(), c)))
    }

    pub fn all(&self) -> Result<Vec<NatTransform>, ResourceError> {
        let mut out = Vec::new();
        self.for_each(|c| {
            out.push(NatTransform::new_unchecked(
                self.source.clone(),
                self.target.clone(),
                c.to_vec(),
            ));
            ControlFlow::Continue(())
        })?;
        Ok(out)
    }

    pub fn count(&self) -> Result<u64, ResourceError> {
        let mut n = 0;
        self.for_each(|_| {
            n += 1;
            ControlFlow::Continue(())
        })?;
        Ok(n)
    }
}

/// An isomorphism of categories `a -> b`, if one exists.
pub fn find_isomorphism(
    a: &Arc<FinCat>,
    b: &Arc<FinCat>,
) -> Result<Option<FinFunctor>, ResourceError> {
    if a.num_objects() != b.num_objects() || a.num_morphisms() != b.num_morphisms() {
        return Ok(None);
    }
    let mut search = FunctorSearch::new(a, b).injective(true, true);
    // Objects can only go to objects with the same hom profile.
    let profile = |c: &FinCat, x: ObjId| {
        let mut out: Vec<usize> = c.objects().map(|y| c.hom(x, y).len()).collect();
        let mut inc: Vec<usize> = c.objects().map(|y| c.hom(y, x).len()).collect();
        out.sort_unstable();
        inc.sort_unstable();
        (c.hom(x, x).len(), out, inc)
    };
    for x in a.objects() {
        let px = profile(a, x);
        let cands = b.objects().filter(|&y| profile(b, y) == px).collect();
        search.restrict_object(x, cands);
    }
    search.first()
}

pub fn are_isomorphic(a: &Arc<FinCat>, b: &Arc<FinCat>) -> Result<bool, ResourceError> {
    Ok(find_isomorphism(a, b)?.is_some())
}

/// A natural isomorphism `f => g`, if one exists.
pub fn find_natural_iso(
    f: &FinFunctor,
    g: &FinFunctor,
) -> Result<Option<NatTransform>, ResourceError> {
    TransformSearch::new(f, g).isos_only().first()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::NamedCat;

    #[test]
    fn counts_small_functor_sets() {
        let arrow = NamedCat::Arrow.arc();
        let iso = NamedCat::FreeIso.arc();
        let pair = NamedCat::ParallelPair.arc();
        // Arrow -> Iso: one functor per arrow of Iso.
        assert_eq!(FunctorSearch::new(&arrow, &iso).count().unwrap(), 4);
        // Pair -> Arrow: objects (0,0),(1,1),(0,1): 1 + 1 + 1.
        assert_eq!(FunctorSearch::new(&pair, &arrow).count().unwrap(), 3);
        // Iso -> Arrow: only constants.
        assert_eq!(FunctorSearch::new(&iso, &arrow).count().unwrap(), 2);
    }

    #[test]
    fn iso_detects_relabeling() {
        let a = NamedCat::FreeIso.arc();
        let b = Arc::new(FinCat::chaotic("K2", vec!["p".into(), "q".into()]));
        assert!(are_isomorphic(&a, &b).unwrap());
        let c = NamedCat::ParallelPair.arc();
        assert!(!are_isomorphic(&a, &c).unwrap());
    }

    #[test]
    fn guard_trips() {
        let k = Arc::new(FinCat::chaotic(
            "K5",
            (0..5).map(|i| i.to_string()).collect(),
        ));
        let limits = SearchLimits {
            max_object_maps: 10,
            ..SearchLimits::default()
        };
        let r = FunctorSearch::new(&k, &k).limits(limits).count();
        assert!(r.is_err());
    }

    #[test]
    fn natural_isos_between_points() {
        let iso = NamedCat::FreeIso.arc();
        let p0 = FinFunctor::point(&iso, 0);
        let p1 = FinFunctor::point(&iso, 1);
        assert!(find_natural_iso(&p0, &p1).unwrap().is_some());
        let arrow = NamedCat::Arrow.arc();
        let q0 = FinFunctor::point(&arrow, 0);
        let q1 = FinFunctor::point(&arrow, 1);
        assert!(find_natural_iso(&q0, &q1).unwrap().is_none());
        assert_eq!(TransformSearch::new(&q0, &q1).count().unwrap(), 1);
    }
}
