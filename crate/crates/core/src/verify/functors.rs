//! Suites over single functors and pairs of functors.

use rand::seq::SliceRandom;
use rand::Rng;

use super::pools::{cofibration_pool, fibration_pool};
use super::Ctx;
use crate::catlim::{product, product_of_functors, pseudocolimit_of_arrow, pseudolimit_of_arrow};
use crate::corpus::{random_functor, random_functor_from, Caps};
use crate::error::Result;
use crate::fincat::{
    compose_functors, generating_cofibrations, generating_trivial_cofibration, FinFunctor, NamedCat,
};
use crate::model::{
    check_pseudolimit_fibration_criterion, corner_map, factor, find_unliftable_square, ClassReport,
    FactorMode,
};

const PARTNER: Caps = Caps {
    max_objects: 3,
    max_morphisms: 6,
};

fn classes(r: &ClassReport) -> [bool; 5] {
    [
        r.is_weak_equivalence,
        r.is_fibration,
        r.is_cofibration,
        r.is_trivial_fibration,
        r.is_trivial_cofibration,
    ]
}

/// `i` must lift against `p` whenever one of them is trivial.
fn lifting_axiom(
    ctx: &mut Ctx,
    name: &str,
    i: &FinFunctor,
    ri: &ClassReport,
    p: &FinFunctor,
    rp: &ClassReport,
) -> Result<()> {
    if !(ri.is_cofibration && rp.is_fibration) {
        return Ok(());
    }
    if !(ri.is_weak_equivalence || rp.is_weak_equivalence) {
        return Ok(());
    }
    let bad = find_unliftable_square(i, p, ctx.limits)?;
    let note = bad
        .as_ref()
        .map(|sq| format!("no lift for square with top {:?}", sq.top.object_map()));
    ctx.check_with(name, bad.is_none(), || note.unwrap_or_default());
    Ok(())
}

pub(super) fn model_axioms(ctx: &mut Ctx) -> Result<()> {
    let f = random_functor(&mut ctx.rng, ctx.caps);
    ctx.record(&f);
    let rf = ctx.classify(&f)?;

    // Two out of three for f, g and g∘f.
    let g = random_functor_from(&mut ctx.rng, f.codomain(), PARTNER);
    ctx.record(&g);
    let h = compose_functors(&g, &f)?;
    let rg = ctx.classify(&g)?;
    let rh = ctx.classify(&h)?;
    let we = [
        rf.is_weak_equivalence,
        rg.is_weak_equivalence,
        rh.is_weak_equivalence,
    ];
    ctx.check_with(
        "two-out-of-three",
        we.iter().filter(|&&x| x).count() != 2,
        || format!("weak equivalence flags f, g, gf = {we:?}"),
    );

    // f is a retract of f × 1_K through the sections at a fixed object of K.
    let k = if ctx.rng.gen_bool(0.5) {
        NamedCat::FreeIso.arc()
    } else {
        NamedCat::TwoDiscrete.arc()
    };
    let (fk, pa, pb) = product_of_functors(&f, &FinFunctor::identity(&k));
    let section = |p: &crate::catlim::Product, c: &std::sync::Arc<crate::fincat::FinCat>| {
        FinFunctor::new(
            c.clone(),
            p.cat.clone(),
            c.objects().map(|x| p.object(x, 0)).collect(),
            c.morphisms()
                .map(|m| p.morphism(m, k.identity(0)))
                .collect(),
        )
    };
    let sa = section(&pa, f.domain())?;
    let sb = section(&pb, f.codomain())?;
    let diagram_ok = compose_functors(&pa.left, &sa)?.is_identity()
        && compose_functors(&pb.left, &sb)?.is_identity()
        && compose_functors(&fk, &sa)? == compose_functors(&sb, &f)?
        && compose_functors(&pb.left, &fk)? == compose_functors(&f, &pa.left)?;
    ctx.check("retract-diagram", diagram_ok);
    let rk = ctx.classify(&fk)?;
    let (cf, ck) = (classes(&rf), classes(&rk));
    ctx.check_with(
        "retract-closure",
        ck.iter().zip(&cf).all(|(&big, &small)| !big || small),
        || format!("classes of f x 1 = {ck:?}, of f = {cf:?}"),
    );

    // Both lifting axioms against fixed pools and one random partner.
    for p in fibration_pool() {
        let rp = ctx.classify(&p)?;
        lifting_axiom(ctx, "lifting-left", &f, &rf, &p, &rp)?;
    }
    for i in cofibration_pool() {
        let ri = ctx.classify(&i)?;
        lifting_axiom(ctx, "lifting-right", &i, &ri, &f, &rf)?;
    }
    let q = random_functor(&mut ctx.rng, PARTNER);
    ctx.record(&q);
    let rq = ctx.classify(&q)?;
    lifting_axiom(ctx, "lifting-left", &f, &rf, &q, &rq)?;
    lifting_axiom(ctx, "lifting-right", &q, &rq, &f, &rf)?;

    for mode in FactorMode::ALL {
        let w = factor(&f, mode, ctx.limits)?;
        ctx.classified += 2;
        let back = compose_functors(&w.right, &w.left)? == f;
        ctx.check(&format!("factor-{}", mode.name()), back);
    }
    Ok(())
}

pub(super) fn generators(ctx: &mut Ctx) -> Result<()> {
    let f = random_functor(&mut ctx.rng, ctx.caps);
    ctx.record(&f);
    let r = ctx.classify(&f)?;
    let iso_bad = find_unliftable_square(&generating_trivial_cofibration(), &f, ctx.limits)?;
    ctx.check_with(
        "fibration-iff-rlp",
        r.is_fibration == iso_bad.is_none(),
        || {
            format!(
                "is_fibration = {}, unliftable square against 1 -> Iso = {}",
                r.is_fibration,
                iso_bad.is_some()
            )
        },
    );
    let mut rlp_all = true;
    for i in generating_cofibrations() {
        if find_unliftable_square(&i, &f, ctx.limits)?.is_some() {
            rlp_all = false;
            break;
        }
    }
    ctx.check_with(
        "trivial-fibration-iff-rlp",
        r.is_trivial_fibration == rlp_all,
        || {
            format!(
                "is_trivial_fibration = {}, rlp against generators = {rlp_all}",
                r.is_trivial_fibration
            )
        },
    );
    Ok(())
}

pub(super) fn pseudolimit_criterion(ctx: &mut Ctx) -> Result<()> {
    let f = random_functor(&mut ctx.rng, ctx.caps);
    ctx.record(&f);
    let r = ctx.classify(&f)?;
    let c = check_pseudolimit_fibration_criterion(&f)?;
    ctx.check_with(
        "criterion-agrees",
        c.agrees() && c.is_isofibration == r.is_fibration,
        || {
            format!(
                "isofibration = {}, section data = {}",
                c.is_isofibration, c.has_section_data
            )
        },
    );
    let pl = pseudolimit_of_arrow(&f);
    let rd = ctx.classify(&pl.d)?;
    let rv = ctx.classify(&pl.v)?;
    ctx.check("d-weak-equivalence", rd.is_weak_equivalence);
    ctx.check("v-fibration", rv.is_fibration);
    ctx.check(
        "v-trivial-iff-f-equivalence",
        rv.is_trivial_fibration == r.is_weak_equivalence,
    );
    if pl.cat.num_objects() <= 12 {
        let probe = NamedCat::One.arc();
        ctx.check(
            "universal-at-point",
            pl.verify_universal(&probe, true, ctx.limits)?,
        );
    }
    Ok(())
}

/// Fibrations to test a trivial cofibration against: the pool, the
/// pseudolimit parts of a random small functor, and those of `f` itself.
fn sampled_fibrations(ctx: &mut Ctx, f: &FinFunctor) -> Vec<FinFunctor> {
    let mut out = fibration_pool();
    let q = random_functor(&mut ctx.rng, PARTNER);
    ctx.record(&q);
    out.push(pseudolimit_of_arrow(&q).v);
    if f.domain().num_objects() <= 3 && f.codomain().num_objects() <= 3 {
        out.push(pseudolimit_of_arrow(f).v);
    }
    out
}

pub(super) fn pseudocolimit(ctx: &mut Ctx) -> Result<()> {
    let f = random_functor(&mut ctx.rng, ctx.caps);
    ctx.record(&f);
    let rf = ctx.classify(&f)?;
    let pc = pseudocolimit_of_arrow(&f);
    ctx.check("composes-back", compose_functors(&pc.e, &pc.i)? == f);
    let ri = ctx.classify(&pc.i)?;
    let re = ctx.classify(&pc.e)?;
    ctx.check("i-cofibration", ri.is_cofibration);
    ctx.check("e-trivial-fibration", re.is_trivial_fibration);
    if rf.is_weak_equivalence {
        ctx.check("i-trivial-cofibration", ri.is_trivial_cofibration);
        for p in sampled_fibrations(ctx, &f) {
            let rp = ctx.classify(&p)?;
            if !rp.is_fibration {
                ctx.check("sampled-is-fibration", false);
                continue;
            }
            let bad = find_unliftable_square(&pc.i, &p, ctx.limits)?;
            ctx.check("i-lifts-against-fibrations", bad.is_none());
        }
    }
    Ok(())
}

/// A random cofibration: from the pool, a pseudocolimit inclusion, or a full
/// subcategory inclusion.
fn random_cofibration(ctx: &mut Ctx) -> FinFunctor {
    match ctx.rng.gen_range(0..3) {
        0 => cofibration_pool()
            .choose(&mut ctx.rng)
            .expect("nonempty")
            .clone(),
        1 => {
            let tiny = Caps {
                max_objects: 2,
                max_morphisms: 4,
            };
            pseudocolimit_of_arrow(&random_functor(&mut ctx.rng, tiny)).i
        }
        _ => {
            let c = crate::corpus::random_category(&mut ctx.rng, PARTNER);
            let objs: Vec<_> = c.objects().filter(|_| ctx.rng.gen_bool(0.5)).collect();
            crate::catlim::full_subcategory(&c, &objs).inclusion
        }
    }
}

/// A random fibration: from the pool, a pseudolimit projection, or a
/// product projection.
fn random_fibration(ctx: &mut Ctx) -> FinFunctor {
    match ctx.rng.gen_range(0..3) {
        0 => fibration_pool()
            .choose(&mut ctx.rng)
            .expect("nonempty")
            .clone(),
        1 => {
            let tiny = Caps {
                max_objects: 2,
                max_morphisms: 4,
            };
            pseudolimit_of_arrow(&random_functor(&mut ctx.rng, tiny)).v
        }
        _ => {
            let c = crate::corpus::random_category(
                &mut ctx.rng,
                Caps {
                    max_objects: 2,
                    max_morphisms: 4,
                },
            );
            let k = [
                NamedCat::FreeIso.arc(),
                NamedCat::TwoDiscrete.arc(),
                NamedCat::One.arc(),
            ]
            .choose(&mut ctx.rng)
            .expect("nonempty")
            .clone();
            product(&c, &k).left
        }
    }
}

pub(super) fn enrichment(ctx: &mut Ctx) -> Result<()> {
    let i = random_cofibration(ctx);
    let p = random_fibration(ctx);
    ctx.record(&i);
    ctx.record(&p);
    let ri = ctx.classify(&i)?;
    let rp = ctx.classify(&p)?;
    ctx.check("sample-classes", ri.is_cofibration && rp.is_fibration);
    let r = corner_map(&i, &p, ctx.limits)?;
    ctx.classified += 2;
    let rc = ctx.classify(&r.corner)?;
    ctx.check_with(
        "corner-isofibration",
        r.is_isofibration && rc.is_fibration,
        || format!("corner isofibration = {}", r.is_isofibration),
    );
    if ri.is_weak_equivalence || rp.is_weak_equivalence {
        ctx.check_with(
            "corner-equivalence",
            r.is_equivalence && rc.is_weak_equivalence,
            || {
                format!(
                    "i trivial = {}, p trivial = {}",
                    ri.is_weak_equivalence, rp.is_weak_equivalence
                )
            },
        );
    }
    Ok(())
}
