use serde::Serialize;

use super::{classify_with, is_equivalence, is_isofibration};
use crate::catlim::{functor_category, postcompose, precompose, pullback};
use crate::error::{Error, Result};
use crate::fincat::FinFunctor;
use crate::search::SearchLimits;

/// The comparison `[i, p]: [B, C] -> [A, C] ×_{[A, D]} [B, D]` for
/// `i: A -> B` and `p: C -> D`, with its classification.
#[derive(Debug, Clone, Serialize)]
pub struct CornerReport {
    pub corner: FinFunctor,
    pub is_isofibration: bool,
    pub is_equivalence: bool,
    pub i_cofibration: bool,
    pub i_trivial: bool,
    pub p_fibration: bool,
    pub p_trivial: bool,
}

impl CornerReport {
    /// For a cofibration `i` and fibration `p`, the corner must be an
    /// isofibration, and an equivalence when either map is trivial.
    pub fn conditions_hold(&self) -> bool {
        if !(self.i_cofibration && self.p_fibration) {
            return true;
        }
        self.is_isofibration && (!(self.i_trivial || self.p_trivial) || self.is_equivalence)
    }
}

pub fn corner_map(i: &FinFunctor, p: &FinFunctor, limits: SearchLimits) -> Result<CornerReport> {
    let (a, b) = (i.domain(), i.codomain());
    let (c, d) = (p.domain(), p.codomain());
    let bc = functor_category(b, c, limits)?;
    let ac = functor_category(a, c, limits)?;
    let bd = functor_category(b, d, limits)?;
    let ad = functor_category(a, d, limits)?;
    let restrict_c = precompose(i, &bc, &ac)?;
    let push_a = postcompose(p, &ac, &ad)?;
    let restrict_d = precompose(i, &bd, &ad)?;
    let push_b = postcompose(p, &bc, &bd)?;
    let pb = pullback(&push_a, &restrict_d)?;
    let obj = bc
        .cat
        .objects()
        .map(|w| pb.object(restrict_c.on_object(w), push_b.on_object(w)))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Consistency("corner object outside the pullback".into()))?;
    let mor = bc
        .cat
        .morphisms()
        .map(|t| pb.morphism(restrict_c.on_morphism(t), push_b.on_morphism(t)))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Consistency("corner arrow outside the pullback".into()))?;
    let corner = FinFunctor::new(bc.cat.clone(), pb.cat.clone(), obj, mor)?;
    let ri = classify_with(i, limits)?;
    let rp = classify_with(p, limits)?;
    Ok(CornerReport {
        is_isofibration: is_isofibration(&corner),
        is_equivalence: is_equivalence(&corner).is_some(),
        corner,
        i_cofibration: ri.is_cofibration,
        i_trivial: ri.is_trivial_cofibration,
        p_fibration: rp.is_fibration,
        p_trivial: rp.is_trivial_fibration,
    })
}
