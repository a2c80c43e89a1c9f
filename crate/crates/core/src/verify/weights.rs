//! The weights suite: defining isomorphism of weighted limits, and lifting
//! of certified-flexible weights against pointwise trivial fibrations.

use std::ops::ControlFlow;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use super::pools::flexible_fixtures;
use super::Ctx;
use crate::corpus::{random_category, random_set_presheaf, small_probes, Caps, Rng64};
use crate::error::Result;
use crate::fincat::{FinCat, FinFunctor, NamedCat};
use crate::weights::{
    chaotic_projection, classify_weight_map, for_each_weight_map, initial_weight, refute_cofibrant,
    set_presheaf_weight, solve_weight_square, verify_defining_iso, Weight, WeightMap, WeightSquare,
};

fn random_base(rng: &mut Rng64) -> Arc<FinCat> {
    match rng.gen_range(0..8) {
        0 => NamedCat::One.arc(),
        1 => NamedCat::TwoDiscrete.arc(),
        2 => NamedCat::Arrow.arc(),
        3 => NamedCat::ParallelPair.arc(),
        4 => Arc::new(FinCat::cyclic_group(2)),
        5 => Arc::new(FinCat::idempotent_monoid()),
        _ => random_category(
            rng,
            Caps {
                max_objects: 3,
                max_morphisms: 6,
            },
        ),
    }
}

/// A small random weight: constants, representables, set presheaves and
/// one level of products and coproducts of those.
pub(crate) fn random_weight(rng: &mut Rng64, base: &Arc<FinCat>, depth: usize) -> Weight {
    let roll = rng.gen_range(0..if depth == 0 { 4 } else { 6 });
    match roll {
        0 => {
            let c = [
                NamedCat::One.arc(),
                NamedCat::TwoDiscrete.arc(),
                NamedCat::Arrow.arc(),
                NamedCat::FreeIso.arc(),
            ]
            .choose(rng)
            .expect("nonempty")
            .clone();
            Weight::constant(base, &c)
        }
        1 if base.num_objects() > 0 => {
            let c = rng.gen_range(0..base.num_objects());
            Weight::representable(base, c).expect("object of the base")
        }
        2 | 3 => {
            let chaotic = roll == 3;
            match random_set_presheaf(rng, base, false) {
                Some(p) => set_presheaf_weight(base, &p, chaotic).expect("set presheaf"),
                None => Weight::terminal(base),
            }
        }
        4 => {
            let a = random_weight(rng, base, 0);
            let b = random_weight(rng, base, 0);
            a.product(&b).expect("same base")
        }
        5 => {
            let a = random_weight(rng, base, 0);
            let b = random_weight(rng, base, 0);
            crate::weights::weight_coproduct(base, &[a, b])
                .expect("same base")
                .weight
        }
        _ => Weight::terminal(base),
    }
}

/// A pointwise trivial fibration onto `x`: a projection away from a
/// chaotic weight with nonempty values.
fn random_trivial_fibration(rng: &mut Rng64, x: &Weight) -> Result<WeightMap> {
    let base = x.base();
    let chaos = if rng.gen_bool(0.3) {
        Weight::constant(base, &NamedCat::FreeIso.arc())
    } else {
        match random_set_presheaf(rng, base, true) {
            Some(p) => set_presheaf_weight(base, &p, true)?,
            None => Weight::terminal(base),
        }
    };
    chaotic_projection(x, &chaos)
}

/// Caps the number of bottom maps examined per lifting check.
const MAX_BOTTOMS: usize = 64;

pub(super) fn weights_closure(ctx: &mut Ctx) -> Result<()> {
    // Defining isomorphism of a random weighted limit on every small probe.
    let base = random_base(&mut ctx.rng);
    let j = random_weight(&mut ctx.rng, &base, 1);
    let s = random_weight(&mut ctx.rng, &base, 1);
    ctx.record_weight(&j);
    ctx.record_weight(&s);
    for probe in small_probes(ctx.probe_size) {
        let r = verify_defining_iso(&j, &s, &probe, ctx.limits)?;
        ctx.check_with("defining-iso", r.holds(), || format!("{r:?}"));
    }

    // A certified-flexible fixture against sampled trivial fibrations.
    let fixtures = flexible_fixtures();
    let fx = &fixtures[ctx.index % fixtures.len()];
    let w = &fx.weight;
    ctx.record_weight(w);
    let x = if ctx.rng.gen_bool(0.5) {
        w.clone()
    } else {
        random_weight(&mut ctx.rng, &fx.base, 0)
    };
    let p = random_trivial_fibration(&mut ctx.rng, &x)?;
    let rp = classify_weight_map(&p, ctx.limits)?;
    ctx.classified += rp.components.len() as u64;
    ctx.check("sampled-trivial-fibration", rp.is_trivial_fibration);

    let zero = initial_weight(&fx.base);
    let from_zero = |t: &Weight| {
        WeightMap::new(
            zero.clone(),
            t.clone(),
            t.base()
                .objects()
                .map(|c| FinFunctor::initial(t.at_object(c)))
                .collect(),
        )
    };
    let i = from_zero(w)?;
    let top = from_zero(p.source())?;
    let mut bottoms = Vec::new();
    for_each_weight_map(w, &x, ctx.limits, |m| {
        bottoms.push(m.clone());
        if bottoms.len() >= MAX_BOTTOMS {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    for bottom in bottoms {
        let sq = WeightSquare::new(i.clone(), p.clone(), top.clone(), bottom)?;
        let lift = solve_weight_square(&sq, ctx.limits)?;
        ctx.check_with("flexible-lifts", lift.is_some(), || {
            format!("fixture {}", fx.name)
        });
    }

    let refuted = refute_cofibrant(w, 16, ctx.limits)?;
    ctx.check_with(
        "flexible-not-refuted",
        matches!(refuted, crate::weights::RefuteOutcome::Unknown { .. }),
        || format!("fixture {}", fx.name),
    );
    Ok(())
}
