//! Seeded random categories and functors.
//!
//! Categories start from a random preorder. Each related pair `x <= y` gets
//! arrows labelled `0..=k_xy`, composition takes the larger label, and label
//! `0` is the identity on the diagonal. Composition is closed by raising
//! `k_xz` to `max(k_xy, k_yz)`, so every table is a valid category. A random
//! congruence quotient is sometimes applied afterwards.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::catlim::{congruence_closure, quotient_by};
use crate::catlim::{full_subcategory, product, pseudocolimit_of_arrow, pseudolimit_of_arrow};
use crate::fincat::{compose_functors, FinCat, FinFunctor, MorId, NamedCat, ObjId};
use crate::search::{FunctorSearch, SearchLimits};

pub use rand::SeedableRng;

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_objects: usize,
    pub max_morphisms: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_objects: 5,
            max_morphisms: 15,
        }
    }
}

impl Caps {
    pub fn admits(&self, c: &FinCat) -> bool {
        c.num_objects() <= self.max_objects && c.num_morphisms() <= self.max_morphisms
    }

    fn admits_functor(&self, f: &FinFunctor) -> bool {
        self.admits(f.domain()) && self.admits(f.codomain())
    }
}

/// A random category from a preorder with max-labelled hom-sets.
pub fn preorder_category(rng: &mut Rng64, caps: Caps) -> FinCat {
    for _ in 0..64 {
        let n = rng.gen_range(1..=caps.max_objects.max(1));
        let density = rng.gen_range(0.1..0.6);
        let mut le = vec![false; n * n];
        for x in 0..n {
            le[x * n + x] = true;
            for y in 0..n {
                if x != y && rng.gen_bool(density) {
                    le[x * n + y] = true;
                }
            }
        }
        for k in 0..n {
            for x in 0..n {
                for y in 0..n {
                    if le[x * n + k] && le[k * n + y] {
                        le[x * n + y] = true;
                    }
                }
            }
        }
        let mut top = vec![0usize; n * n];
        let related: Vec<usize> = (0..n * n).filter(|&p| le[p]).collect();
        let bumps = rng.gen_range(0..=3);
        for _ in 0..bumps {
            let &p = related.choose(rng).expect("reflexive");
            top[p] += 1;
        }
        loop {
            let mut changed = false;
            for x in 0..n {
                for y in 0..n {
                    if !le[x * n + y] {
                        continue;
                    }
                    for z in 0..n {
                        if le[y * n + z] {
                            let need = top[x * n + y].max(top[y * n + z]);
                            if top[x * n + z] < need {
                                top[x * n + z] = need;
                                changed = true;
                            }
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let total: usize = related.iter().map(|&p| top[p] + 1).sum();
        if total > caps.max_morphisms {
            continue;
        }
        return labelled_preorder(n, &le, &top);
    }
    FinCat::discrete("D1", vec!["o0".into()])
}

fn labelled_preorder(n: usize, le: &[bool], top: &[usize]) -> FinCat {
    let objects = (0..n).map(|x| format!("o{x}")).collect();
    let mut arrows = Vec::new();
    let mut id_of = std::collections::HashMap::new();
    for x in 0..n {
        for y in 0..n {
            if !le[x * n + y] {
                continue;
            }
            for l in 0..=top[x * n + y] {
                let name = if x == y && l == 0 {
                    format!("id_o{x}")
                } else {
                    format!("f{x}_{y}_{l}")
                };
                id_of.insert((x, y, l), arrows.len());
                arrows.push((name, x, y));
            }
        }
    }
    let label: Vec<(ObjId, ObjId, usize)> = {
        let mut v = vec![(0, 0, 0); arrows.len()];
        for (&k, &m) in &id_of {
            v[m] = k;
        }
        v
    };
    let ident = (0..n).map(|x| id_of[&(x, x, 0)]).collect();
    FinCat::from_parts_associative("P".to_string(), objects, arrows, ident, |g, f| {
        let (x, _, l1) = label[f];
        let (_, z, l2) = label[g];
        id_of.get(&(x, z, l1.max(l2))).copied()
    })
    .expect("max-labelled preorder is a category")
}

/// Small categories with interesting structure that the preorder
/// construction rarely produces.
pub fn pool() -> Vec<Arc<FinCat>> {
    let mut out: Vec<Arc<FinCat>> = NamedCat::ALL.iter().map(|t| t.arc()).collect();
    out.push(Arc::new(FinCat::cyclic_group(2)));
    out.push(Arc::new(FinCat::idempotent_monoid()));
    out.push(Arc::new(FinCat::chaotic(
        "K3",
        vec!["p".into(), "q".into(), "r".into()],
    )));
    out
}

/// Quotient by the congruence generated by one random pair of parallel
/// arrows.
fn random_quotient(rng: &mut Rng64, c: &Arc<FinCat>) -> Option<FinFunctor> {
    let pairs: Vec<(MorId, MorId)> = c
        .morphisms()
        .flat_map(|m| {
            c.hom(c.src(m), c.tgt(m))
                .iter()
                .copied()
                .filter(move |&n| n > m)
                .map(move |n| (m, n))
        })
        .collect();
    let &pair = pairs.choose(rng)?;
    let mut uf = congruence_closure(c, &[pair]);
    Some(quotient_by(c, &mut uf, format!("{}/q", c.name())).p)
}

pub fn random_category(rng: &mut Rng64, caps: Caps) -> Arc<FinCat> {
    let roll = rng.gen_range(0..10);
    if roll < 2 {
        let candidates: Vec<Arc<FinCat>> = pool().into_iter().filter(|c| caps.admits(c)).collect();
        if let Some(c) = candidates.choose(rng) {
            return c.clone();
        }
    }
    let c = Arc::new(preorder_category(rng, caps));
    if roll == 9 {
        if let Some(p) = random_quotient(rng, &c) {
            return p.codomain().clone();
        }
    }
    c
}

/// A random functor `dom -> cod`, found by a search with shuffled candidate
/// orders. `None` when there is no functor (or the search is too large).
pub fn random_functor_between(
    rng: &mut Rng64,
    dom: &Arc<FinCat>,
    cod: &Arc<FinCat>,
) -> Option<FinFunctor> {
    let limits = SearchLimits {
        max_object_maps: 20_000,
        max_nodes: 200_000,
        ..SearchLimits::default()
    };
    let mut search = FunctorSearch::new(dom, cod).limits(limits);
    for x in dom.objects() {
        let mut cands: Vec<ObjId> = cod.objects().collect();
        cands.shuffle(rng);
        search.restrict_object(x, cands);
    }
    for m in dom.morphisms() {
        let mut cands: Vec<MorId> = cod.morphisms().collect();
        cands.shuffle(rng);
        search.restrict_morphism(m, cands);
    }
    search.first().ok().flatten()
}

fn small_factor(rng: &mut Rng64) -> Arc<FinCat> {
    let choices = [
        NamedCat::One.arc(),
        NamedCat::FreeIso.arc(),
        NamedCat::TwoDiscrete.arc(),
        NamedCat::Arrow.arc(),
        Arc::new(FinCat::cyclic_group(2)),
    ];
    choices.choose(rng).expect("nonempty").clone()
}

/// One draw from a mix of strategies; may fail and be retried by the caller.
fn draw(rng: &mut Rng64, caps: Caps) -> Option<FinFunctor> {
    match rng.gen_range(0..12) {
        0..=3 => {
            let a = random_category(rng, caps);
            let b = random_category(rng, caps);
            random_functor_between(rng, &a, &b)
        }
        4 => {
            let b = random_category(rng, caps);
            let mut objs: Vec<ObjId> = b.objects().filter(|_| rng.gen_bool(0.6)).collect();
            if objs.is_empty() && b.num_objects() > 0 && rng.gen_bool(0.5) {
                objs.push(0);
            }
            Some(full_subcategory(&b, &objs).inclusion)
        }
        5 => {
            let c = random_category(rng, caps);
            let k = small_factor(rng);
            let p = product(&c, &k);
            Some(p.left)
        }
        6 => {
            let a = random_category(rng, caps);
            Some(FinFunctor::terminal(&a, &NamedCat::One.arc()))
        }
        7 => {
            let b = random_category(rng, caps);
            random_quotient(rng, &b)
        }
        8 => {
            let small = Caps {
                max_objects: 3,
                max_morphisms: 6,
            };
            let inner = draw(rng, small)?;
            let pl = pseudolimit_of_arrow(&inner);
            Some(if rng.gen_bool(0.5) { pl.d } else { pl.v })
        }
        9 => {
            let small = Caps {
                max_objects: 3,
                max_morphisms: 6,
            };
            let inner = draw(rng, small)?;
            let pc = pseudocolimit_of_arrow(&inner);
            Some(if rng.gen_bool(0.5) { pc.i } else { pc.e })
        }
        10 => {
            let f = draw(rng, caps)?;
            let c = random_category(rng, caps);
            let g = random_functor_between(rng, f.codomain(), &c)?;
            compose_functors(&g, &f).ok()
        }
        _ => {
            let k = small_factor(rng);
            let c = random_category(rng, caps);
            let p = product(&k, &c);
            // A section of the projection, landing at a random object of k.
            let at = rng.gen_range(0..k.num_objects());
            let obj = c.objects().map(|x| p.object(at, x)).collect();
            let mor = c
                .morphisms()
                .map(|m| p.morphism(k.identity(at), m))
                .collect();
            FinFunctor::new(c.clone(), p.cat.clone(), obj, mor).ok()
        }
    }
}

pub fn random_functor(rng: &mut Rng64, caps: Caps) -> FinFunctor {
    for _ in 0..200 {
        if let Some(f) = draw(rng, caps) {
            if caps.admits_functor(&f) {
                return f;
            }
        }
    }
    FinFunctor::identity(&NamedCat::One.arc())
}

/// A random functor out of a given category.
pub fn random_functor_from(rng: &mut Rng64, dom: &Arc<FinCat>, caps: Caps) -> FinFunctor {
    for _ in 0..50 {
        let cod = random_category(rng, caps);
        if let Some(g) = random_functor_between(rng, dom, &cod) {
            return g;
        }
    }
    FinFunctor::terminal(dom, &NamedCat::One.arc())
}

/// Probe categories with at most `max_objects` objects: the named ones, the
/// group of order two and the idempotent monoid.
pub fn small_probes(max_objects: usize) -> Vec<Arc<FinCat>> {
    let mut out: Vec<Arc<FinCat>> = NamedCat::ALL.iter().map(|t| t.arc()).collect();
    out.push(Arc::new(FinCat::cyclic_group(2)));
    out.push(Arc::new(FinCat::idempotent_monoid()));
    out.retain(|c| c.num_objects() <= max_objects);
    out
}

/// A random presheaf of sets of size at most 2 on `base`, as a functor
/// `base^op -> Set<=2`; with `nonempty`, every value has at least one element.
pub fn random_set_presheaf(
    rng: &mut Rng64,
    base: &Arc<FinCat>,
    nonempty: bool,
) -> Option<FinFunctor> {
    let op = Arc::new(base.opposite());
    let sets = Arc::new(FinCat::finite_sets(2));
    let mut search = FunctorSearch::new(&op, &sets);
    for x in op.objects() {
        let mut cands: Vec<ObjId> = if nonempty { vec![1, 2] } else { vec![0, 1, 2] };
        cands.shuffle(rng);
        search.restrict_object(x, cands);
    }
    for m in op.morphisms() {
        let mut cands: Vec<MorId> = sets.morphisms().collect();
        cands.shuffle(rng);
        search.restrict_morphism(m, cands);
    }
    search.first().ok().flatten()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_tables_validate() {
        let mut r = rng(7);
        for _ in 0..200 {
            let c = random_category(&mut r, Caps::default());
            c.validate().unwrap();
            assert!(Caps::default().admits(&c));
        }
    }

    #[test]
    fn generated_functors_validate() {
        let mut r = rng(11);
        for _ in 0..100 {
            let f = random_functor(&mut r, Caps::default());
            f.validate().unwrap();
        }
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let draw_all = |seed| {
            let mut r = rng(seed);
            (0..30)
                .map(|_| random_functor(&mut r, Caps::default()))
                .collect::<Vec<_>>()
        };
        assert_eq!(draw_all(3), draw_all(3));
    }
}
