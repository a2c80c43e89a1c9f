//! Brute-force oracles. Everything here works straight from the composition
//! tables by exhaustive enumeration, without the library's searches,
//! lifting solvers or classifiers.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use catmodel::{FinCat, FinFunctor, MorId, ObjId, RawCat};

/// Every tuple in the product of `choices`, in lexicographic order.
pub fn product_of(choices: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for c in choices {
        let mut next = Vec::with_capacity(out.len() * c.len());
        for prefix in &out {
            for &x in c {
                let mut v = prefix.clone();
                v.push(x);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Arrows `x -> y`, by scanning every arrow.
pub fn hom(c: &FinCat, x: ObjId, y: ObjId) -> Vec<MorId> {
    c.morphisms()
        .filter(|&m| c.src(m) == x && c.tgt(m) == y)
        .collect()
}

pub fn is_iso(c: &FinCat, m: MorId) -> bool {
    let (x, y) = (c.src(m), c.tgt(m));
    hom(c, y, x)
        .into_iter()
        .any(|n| c.comp(n, m) == c.identity(x) && c.comp(m, n) == c.identity(y))
}

/// Functoriality checked against every composable pair.
pub fn is_functor(a: &FinCat, b: &FinCat, obj: &[ObjId], mor: &[MorId]) -> bool {
    for m in a.morphisms() {
        if b.src(mor[m]) != obj[a.src(m)] || b.tgt(mor[m]) != obj[a.tgt(m)] {
            return false;
        }
    }
    for x in a.objects() {
        if mor[a.identity(x)] != b.identity(obj[x]) {
            return false;
        }
    }
    for g in a.morphisms() {
        for f in a.morphisms() {
            if a.tgt(f) == a.src(g) && mor[a.comp(g, f)] != b.comp(mor[g], mor[f]) {
                return false;
            }
        }
    }
    true
}

/// All functors `a -> b` as `(object map, arrow map)`.
pub fn all_functors(a: &FinCat, b: &FinCat) -> Vec<(Vec<ObjId>, Vec<MorId>)> {
    let objs: Vec<usize> = b.objects().collect();
    let mut out = Vec::new();
    for obj in product_of(&vec![objs; a.num_objects()]) {
        let choices: Vec<Vec<usize>> = a
            .morphisms()
            .map(|m| hom(b, obj[a.src(m)], obj[a.tgt(m)]))
            .collect();
        for mor in product_of(&choices) {
            if is_functor(a, b, &obj, &mor) {
                out.push((obj.clone(), mor));
            }
        }
    }
    out
}

/// All natural transformations between two functors given as tables.
pub fn all_transformations(
    a: &FinCat,
    b: &FinCat,
    f: &(Vec<ObjId>, Vec<MorId>),
    g: &(Vec<ObjId>, Vec<MorId>),
) -> Vec<Vec<MorId>> {
    let choices: Vec<Vec<usize>> = a.objects().map(|x| hom(b, f.0[x], g.0[x])).collect();
    product_of(&choices)
        .into_iter()
        .filter(|t| {
            a.morphisms()
                .all(|m| b.comp(g.1[m], t[a.src(m)]) == b.comp(t[a.tgt(m)], f.1[m]))
        })
        .collect()
}

pub fn is_bijection(map: &[usize], n: usize) -> bool {
    let mut hit = vec![false; n];
    map.len() == n
        && map
            .iter()
            .all(|&y| y < n && !std::mem::replace(&mut hit[y], true))
}

/// Isomorphic as categories: some functor is bijective on objects and arrows.
pub fn isomorphic(a: &FinCat, b: &FinCat) -> bool {
    a.num_objects() == b.num_objects()
        && a.num_morphisms() == b.num_morphisms()
        && all_functors(a, b)
            .iter()
            .any(|(o, m)| is_bijection(o, b.num_objects()) && is_bijection(m, b.num_morphisms()))
}

pub fn is_chaotic(c: &FinCat) -> bool {
    c.objects()
        .all(|x| c.objects().all(|y| hom(c, x, y).len() == 1))
}

pub fn fully_faithful(f: &FinFunctor) -> bool {
    let (a, b) = (f.domain(), f.codomain());
    a.objects().all(|x| {
        a.objects().all(|y| {
            let mut image: Vec<MorId> = hom(a, x, y).iter().map(|&m| f.on_morphism(m)).collect();
            image.sort();
            image.dedup();
            image.len() == hom(a, x, y).len()
                && image.len() == hom(b, f.on_object(x), f.on_object(y)).len()
        })
    })
}

pub fn essentially_surjective(f: &FinFunctor) -> bool {
    let (a, b) = (f.domain(), f.codomain());
    b.objects().all(|y| {
        a.objects()
            .any(|x| hom(b, y, f.on_object(x)).into_iter().any(|m| is_iso(b, m)))
    })
}

pub fn is_equivalence(f: &FinFunctor) -> bool {
    fully_faithful(f) && essentially_surjective(f)
}

pub fn is_isofibration(f: &FinFunctor) -> bool {
    let (a, b) = (f.domain(), f.codomain());
    a.objects().all(|e| {
        b.morphisms()
            .filter(|&beta| b.tgt(beta) == f.on_object(e) && is_iso(b, beta))
            .all(|beta| {
                a.morphisms()
                    .any(|eps| a.tgt(eps) == e && f.on_morphism(eps) == beta && is_iso(a, eps))
            })
    })
}

pub fn injective_on_objects(f: &FinFunctor) -> bool {
    let mut seen = std::collections::HashSet::new();
    f.object_map().iter().all(|&y| seen.insert(y))
}

/// Trivial fibrations are exactly the functors that are surjective on
/// objects and fully faithful.
pub fn is_trivial_fibration(f: &FinFunctor) -> bool {
    let mut hit = vec![false; f.codomain().num_objects()];
    for &y in f.object_map() {
        hit[y] = true;
    }
    hit.iter().all(|&h| h) && fully_faithful(f)
}

/// `(weak equivalence, fibration, cofibration, trivial fibration, trivial cofibration)`.
pub fn classes(f: &FinFunctor) -> [bool; 5] {
    let we = is_equivalence(f);
    let cof = injective_on_objects(f);
    [
        we,
        is_isofibration(f),
        cof,
        is_trivial_fibration(f),
        we && cof,
    ]
}

fn compose_tables(g: &FinFunctor, f: (&[ObjId], &[MorId])) -> (Vec<ObjId>, Vec<MorId>) {
    (
        f.0.iter().map(|&x| g.on_object(x)).collect(),
        f.1.iter().map(|&m| g.on_morphism(m)).collect(),
    )
}

/// A diagonal for the square `p∘top = bottom∘i`, by trying every functor.
pub fn has_lift(i: &FinFunctor, p: &FinFunctor, top: &FinFunctor, bottom: &FinFunctor) -> bool {
    let (b, c) = (i.codomain(), p.domain());
    all_functors(b, c).into_iter().any(|(wo, wm)| {
        let wi: (Vec<ObjId>, Vec<MorId>) = (
            i.object_map().iter().map(|&x| wo[x]).collect(),
            i.morphism_map().iter().map(|&m| wm[m]).collect(),
        );
        let pw = compose_tables(p, (&wo, &wm));
        wi.0 == top.object_map()
            && wi.1 == top.morphism_map()
            && pw.0 == bottom.object_map()
            && pw.1 == bottom.morphism_map()
    })
}

/// Whether every commuting square from `i` to `p` has a diagonal.
pub fn lifts_against(i: &FinFunctor, p: &FinFunctor) -> bool {
    let (a, b) = (i.domain(), i.codomain());
    let (c, d) = (p.domain(), p.codomain());
    let tops = all_functors(a, c);
    let bottoms = all_functors(b, d);
    for (to, tm) in &tops {
        let pt = compose_tables(p, (to, tm));
        for (bo, bm) in &bottoms {
            let bi: (Vec<ObjId>, Vec<MorId>) = (
                i.object_map().iter().map(|&x| bo[x]).collect(),
                i.morphism_map().iter().map(|&m| bm[m]).collect(),
            );
            if bi != pt {
                continue;
            }
            let top = FinFunctor::new(a.clone(), c.clone(), to.clone(), tm.clone()).unwrap();
            let bottom = FinFunctor::new(b.clone(), d.clone(), bo.clone(), bm.clone()).unwrap();
            if !has_lift(i, p, &top, &bottom) {
                return false;
            }
        }
    }
    true
}

/// A category from a list of arrows and the non-identity composites.
/// Objects are `0..n`; identities are added first.
pub fn table(
    name: &str,
    n: usize,
    arrows: &[(usize, usize)],
    composites: &[(usize, usize, usize)],
) -> Arc<FinCat> {
    let mut all: Vec<(String, ObjId, ObjId)> = (0..n).map(|x| (format!("id_{x}"), x, x)).collect();
    for (k, &(s, t)) in arrows.iter().enumerate() {
        all.push((format!("a{k}"), s, t));
    }
    let mut comp = BTreeMap::new();
    for g in 0..all.len() {
        for f in 0..all.len() {
            if all[f].2 != all[g].1 {
                continue;
            }
            if g < n {
                comp.insert((g, f), f);
            } else if f < n {
                comp.insert((g, f), g);
            }
        }
    }
    for &(g, f, h) in composites {
        comp.insert((g + n, f + n), h);
    }
    let raw = RawCat {
        name: name.into(),
        objects: (0..n).map(|x| x.to_string()).collect(),
        arrows: all,
        identities: (0..n).collect(),
        composites: comp,
    };
    Arc::new(raw.into_cat().expect("oracle table is a category"))
}

/// The walking arrow `0 -> 1`, built by hand.
pub fn arrow() -> Arc<FinCat> {
    table("arrow", 2, &[(0, 1)], &[])
}

/// The free-living isomorphism, built by hand. Composites of the two
/// non-identity arrows are identities `0` and `1`.
pub fn free_iso() -> Arc<FinCat> {
    table("iso", 2, &[(0, 1), (1, 0)], &[(1, 0, 0), (0, 1, 1)])
}
