//! Weighted limits `{J, S}` of a diagram `S` weighted by `J`, both
//! presheaves over the same base.

use std::collections::HashMap;
use std::ops::ControlFlow;
use std::sync::Arc;

use serde::Serialize;

use super::{for_each_modification, for_each_weight_map, Modification, Weight, WeightMap};
use crate::catlim::functor_category;
use crate::error::{Error, ResourceError, Result};
use crate::fincat::{FinCat, FinFunctor, MorId, NatTransform, ObjId};
use crate::search::SearchLimits;

type MapKey = Vec<(Vec<ObjId>, Vec<MorId>)>;
type CellKey = (ObjId, ObjId, Vec<Vec<MorId>>);

/// The category of weight maps `J => S` and modifications between them.
#[derive(Debug, Clone)]
pub struct WeightedLimit {
    pub cat: Arc<FinCat>,
    pub maps: Vec<WeightMap>,
    pub modifications: Vec<Modification>,
    map_index: HashMap<MapKey, ObjId>,
    cell_index: HashMap<CellKey, MorId>,
}

fn map_key(components: &[FinFunctor]) -> MapKey {
    components
        .iter()
        .map(|f| (f.object_map().to_vec(), f.morphism_map().to_vec()))
        .collect()
}

fn cell_components(m: &Modification) -> Vec<Vec<MorId>> {
    m.components()
        .iter()
        .map(|t| t.components().to_vec())
        .collect()
}

impl WeightedLimit {
    pub fn object_of(&self, m: &WeightMap) -> Option<ObjId> {
        self.map_index.get(&map_key(m.components())).copied()
    }

    /// Look up an arrow by its endpoints and raw components.
    pub fn morphism_of_components(
        &self,
        src: ObjId,
        tgt: ObjId,
        comps: Vec<Vec<MorId>>,
    ) -> Option<MorId> {
        self.cell_index.get(&(src, tgt, comps)).copied()
    }

    pub fn morphism_of(&self, m: &Modification) -> Option<MorId> {
        let s = self.object_of(m.source())?;
        let t = self.object_of(m.target())?;
        self.morphism_of_components(s, t, cell_components(m))
    }
}

pub fn weighted_limit(j: &Weight, s: &Weight, limits: SearchLimits) -> Result<WeightedLimit> {
    let mut maps = Vec::new();
    let mut over = false;
    for_each_weight_map(j, s, limits, |m| {
        if maps.len() as u64 >= limits.max_functors {
            over = true;
            return ControlFlow::Break(());
        }
        maps.push(m.clone());
        ControlFlow::Continue(())
    })?;
    if over {
        return Err(ResourceError {
            what: "objects of a weighted limit".into(),
            limit: limits.max_functors,
        }
        .into());
    }
    let map_index: HashMap<MapKey, ObjId> = maps
        .iter()
        .enumerate()
        .map(|(i, m)| (map_key(m.components()), i))
        .collect();
    let mut modifications = Vec::new();
    let mut cell_index = HashMap::new();
    let mut ends = Vec::new();
    for (a, f) in maps.iter().enumerate() {
        for (b, g) in maps.iter().enumerate() {
            for_each_modification(f, g, limits, |m| {
                if modifications.len() as u64 >= limits.max_transforms {
                    over = true;
                    return ControlFlow::Break(());
                }
                cell_index.insert((a, b, cell_components(m)), modifications.len());
                modifications.push(m.clone());
                ends.push((a, b));
                ControlFlow::Continue(())
            })?;
            if over {
                return Err(ResourceError {
                    what: "arrows of a weighted limit".into(),
                    limit: limits.max_transforms,
                }
                .into());
            }
        }
    }
    let base = j.base();
    let ident: Vec<MorId> = maps
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let comps = base
                .objects()
                .map(|c| {
                    let f = m.component(c);
                    f.object_map()
                        .iter()
                        .map(|&y| f.codomain().identity(y))
                        .collect()
                })
                .collect();
            cell_index[&(i, i, comps)]
        })
        .collect();
    let objects = (0..maps.len()).map(|i| format!("w{i}")).collect();
    let arrows = (0..modifications.len())
        .map(|k| {
            let (a, b) = ends[k];
            let label = if ident[a] == k {
                format!("id_w{a}")
            } else {
                format!("m{k}")
            };
            (label, a, b)
        })
        .collect();
    let cat = FinCat::from_parts_associative(
        format!("{{{},{}}}", base.name(), s.base().name()),
        objects,
        arrows,
        ident,
        |g, f| {
            let (a, _) = ends[f];
            let (_, b) = ends[g];
            let comps: Vec<Vec<MorId>> = base
                .objects()
                .map(|c| {
                    let sc = s.at_object(c);
                    let (tf, tg) = (
                        &modifications[f].components()[c],
                        &modifications[g].components()[c],
                    );
                    tf.components()
                        .iter()
                        .zip(tg.components())
                        .map(|(&x, &y)| sc.comp(y, x))
                        .collect()
                })
                .collect();
            cell_index.get(&(a, b, comps)).copied()
        },
    )
    .map_err(|e| Error::Consistency(format!("weighted limit fails the category laws: {e}")))?;
    Ok(WeightedLimit {
        cat: Arc::new(cat),
        maps,
        modifications,
        map_index,
        cell_index,
    })
}

/// Outcome of checking `Cat(A, {J, S}) ≅ [C^op, Cat](J, [A, S-])` on one
/// probe `A`, through an explicit comparison functor.
#[derive(Debug, Clone, Serialize)]
pub struct DefiningIsoReport {
    pub probe: String,
    pub lhs_objects: usize,
    pub rhs_objects: usize,
    pub lhs_morphisms: usize,
    pub rhs_morphisms: usize,
    pub bijective: bool,
    pub preserves_composition: bool,
}

impl DefiningIsoReport {
    pub fn holds(&self) -> bool {
        self.lhs_objects == self.rhs_objects
            && self.lhs_morphisms == self.rhs_morphisms
            && self.bijective
            && self.preserves_composition
    }
}

/// Send each functor `Φ: A -> {J, S}` to the weight map `J => [A, S-]`
/// whose component at `c` sends `j` to `a ↦ Φ(a)_c(j)`, and each
/// transformation to the matching modification, then check that this is an
/// isomorphism of categories.
pub fn verify_defining_iso(
    j: &Weight,
    s: &Weight,
    probe: &Arc<FinCat>,
    limits: SearchLimits,
) -> Result<DefiningIsoReport> {
    let lim = weighted_limit(j, s, limits)?;
    let lhs = functor_category(probe, &lim.cat, limits)?;
    let (expo, fcs) = s.exponential(probe, limits)?;
    let rhs = weighted_limit(j, &expo, limits)?;
    let base = j.base();
    let a = probe;

    // Object part.
    let mut obj_image = Vec::with_capacity(lhs.functors.len());
    for phi in &lhs.functors {
        let mut comps = Vec::with_capacity(base.num_objects());
        for c in base.objects() {
            let (jc, sc) = (j.at_object(c), s.at_object(c));
            let at = |x: ObjId| lim.maps[phi.on_object(x)].component(c);
            let mut objs = Vec::with_capacity(jc.num_objects());
            for o in jc.objects() {
                let f = FinFunctor::new_unchecked(
                    a.clone(),
                    sc.clone(),
                    a.objects().map(|x| at(x).on_object(o)).collect(),
                    a.morphisms()
                        .map(|h| lim.modifications[phi.on_morphism(h)].components()[c].component(o))
                        .collect(),
                );
                objs.push(fcs[c].object_of(&f));
            }
            let Some(objs) = objs.into_iter().collect::<Option<Vec<ObjId>>>() else {
                return Ok(failed(probe, &lhs, &rhs));
            };
            let mut mors = Vec::with_capacity(jc.num_morphisms());
            for k in jc.morphisms() {
                let (x0, x1) = (jc.src(k), jc.tgt(k));
                let t = NatTransform::new_unchecked(
                    fcs[c].functors[objs[x0]].clone(),
                    fcs[c].functors[objs[x1]].clone(),
                    a.objects().map(|x| at(x).on_morphism(k)).collect(),
                );
                mors.push(fcs[c].morphism_of(&t));
            }
            let Some(mors) = mors.into_iter().collect::<Option<Vec<MorId>>>() else {
                return Ok(failed(probe, &lhs, &rhs));
            };
            comps.push((objs, mors));
        }
        obj_image.push(rhs.map_index.get(&comps).copied());
    }
    let Some(obj_image) = obj_image.into_iter().collect::<Option<Vec<ObjId>>>() else {
        return Ok(failed(probe, &lhs, &rhs));
    };

    // Arrow part: Γ ↦ (c ↦ (j ↦ (a ↦ (Γ_a)_c(j)))).
    let mut mor_image = Vec::with_capacity(lhs.transforms.len());
    for (t, gamma) in lhs.transforms.iter().enumerate() {
        let (p0, p1) = (lhs.cat.src(t), lhs.cat.tgt(t));
        let (q0, q1) = (obj_image[p0], obj_image[p1]);
        let mut comps = Vec::with_capacity(base.num_objects());
        for c in base.objects() {
            let jc = j.at_object(c);
            let (src_f, tgt_f) = (rhs.maps[q0].component(c), rhs.maps[q1].component(c));
            let mut row = Vec::with_capacity(jc.num_objects());
            for o in jc.objects() {
                let t = NatTransform::new_unchecked(
                    fcs[c].functors[src_f.on_object(o)].clone(),
                    fcs[c].functors[tgt_f.on_object(o)].clone(),
                    a.objects()
                        .map(|x| lim.modifications[gamma.component(x)].components()[c].component(o))
                        .collect(),
                );
                row.push(fcs[c].morphism_of(&t));
            }
            let Some(row) = row.into_iter().collect::<Option<Vec<MorId>>>() else {
                return Ok(failed(probe, &lhs, &rhs));
            };
            comps.push(row);
        }
        mor_image.push(rhs.cell_index.get(&(q0, q1, comps)).copied());
    }
    let Some(mor_image) = mor_image.into_iter().collect::<Option<Vec<MorId>>>() else {
        return Ok(failed(probe, &lhs, &rhs));
    };

    let injective = |v: &[usize]| {
        let mut seen = std::collections::HashSet::new();
        v.iter().all(|x| seen.insert(*x))
    };
    let bijective = injective(&obj_image)
        && injective(&mor_image)
        && obj_image.len() == rhs.cat.num_objects()
        && mor_image.len() == rhs.cat.num_morphisms();
    let l = &lhs.cat;
    let preserves_composition = l.morphisms().all(|f| {
        l.outgoing(l.tgt(f))
            .iter()
            .all(|&g| mor_image[l.comp(g, f)] == rhs.cat.comp(mor_image[g], mor_image[f]))
    }) && l
        .objects()
        .all(|x| mor_image[l.identity(x)] == rhs.cat.identity(obj_image[x]));
    Ok(DefiningIsoReport {
        probe: probe.name().to_string(),
        lhs_objects: l.num_objects(),
        rhs_objects: rhs.cat.num_objects(),
        lhs_morphisms: l.num_morphisms(),
        rhs_morphisms: rhs.cat.num_morphisms(),
        bijective,
        preserves_composition,
    })
}

fn failed(
    probe: &Arc<FinCat>,
    lhs: &crate::catlim::FunctorCategory,
    rhs: &WeightedLimit,
) -> DefiningIsoReport {
    DefiningIsoReport {
        probe: probe.name().to_string(),
        lhs_objects: lhs.cat.num_objects(),
        rhs_objects: rhs.cat.num_objects(),
        lhs_morphisms: lhs.cat.num_morphisms(),
        rhs_morphisms: rhs.cat.num_morphisms(),
        bijective: false,
        preserves_composition: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catlim::product;
    use crate::fincat::NamedCat;
    use crate::search::are_isomorphic;

    #[test]
    fn point_weight_over_point_returns_diagram() {
        let one = NamedCat::One.arc();
        let iso = NamedCat::FreeIso.arc();
        let l = weighted_limit(
            &Weight::terminal(&one),
            &Weight::constant(&one, &iso),
            SearchLimits::default(),
        )
        .unwrap();
        assert!(are_isomorphic(&l.cat, &iso).unwrap());
    }

    #[test]
    fn arrow_weight_gives_cotensor() {
        let one = NamedCat::One.arc();
        let j = Weight::constant(&one, &NamedCat::Arrow.arc());
        let s = Weight::constant(&one, &NamedCat::FreeIso.arc());
        let l = weighted_limit(&j, &s, SearchLimits::default()).unwrap();
        assert_eq!(l.cat.num_objects(), 4);
        assert!(l.cat.is_chaotic());
    }

    #[test]
    fn discrete_base_gives_product() {
        let two = NamedCat::TwoDiscrete.arc();
        let (x, y) = (NamedCat::Arrow.arc(), NamedCat::FreeIso.arc());
        let s = Weight::new(
            two.clone(),
            vec![x.clone(), y.clone()],
            vec![FinFunctor::identity(&x), FinFunctor::identity(&y)],
        )
        .unwrap();
        let l = weighted_limit(&Weight::terminal(&two), &s, SearchLimits::default()).unwrap();
        assert!(are_isomorphic(&l.cat, &product(&x, &y).cat).unwrap());
    }

    #[test]
    fn defining_iso_on_small_probes() {
        let arrow = NamedCat::Arrow.arc();
        let j = Weight::representable(&arrow, 1).unwrap();
        let s = Weight::constant(&arrow, &NamedCat::Arrow.arc());
        for probe in [
            NamedCat::One.arc(),
            NamedCat::Arrow.arc(),
            NamedCat::FreeIso.arc(),
        ] {
            let r = verify_defining_iso(&j, &s, &probe, SearchLimits::default()).unwrap();
            assert!(r.holds(), "{r:?}");
        }
    }
}
