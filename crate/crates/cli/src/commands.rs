use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Value};
use thiserror::Error;

use catmodel::catlim::{
    coequifier as coequify, coinserter_bounded, pseudocolimit_of_arrow, pseudolimit_of_arrow,
    CoinserterOutcome,
};
use catmodel::corpus::small_probes;
use catmodel::model::{
    classify_with, corner_map, factor as factorize, solve_lift, ClassReport, FactorMode,
    LiftOutcome,
};
use catmodel::text::{parse, write_category, write_functor, Document, ParseError};
use catmodel::verify::{default_limits, run_suite, SuiteConfig, Verdict};
use catmodel::weights::{verify_defining_iso, weighted_limit as build_limit};
use catmodel::{compose_functors, Error, FinCat, FinFunctor, NamedCat, NatTransform};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(Error::Resource(_)) => 3,
            CliError::Lib(Error::Consistency(_)) => 1,
            _ => 2,
        }
    }
}

/// A finished command: the JSON document, the text summary and the exit
/// status.
pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub status: u8,
}

impl Outcome {
    fn new(json: Value, text: String, ok: bool) -> Outcome {
        Outcome {
            json,
            text,
            status: if ok { 0 } else { 1 },
        }
    }
}

pub fn load(path: &Path) -> Result<Document, CliError> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse(&src).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn functor<'a>(doc: &'a Document, name: &str) -> Result<&'a FinFunctor, CliError> {
    doc.functor(name)
        .ok_or_else(|| CliError::Usage(format!("no functor named `{name}`")))
}

fn transformation<'a>(doc: &'a Document, name: &str) -> Result<&'a NatTransform, CliError> {
    doc.transformations
        .get(name)
        .ok_or_else(|| CliError::Usage(format!("no transformation named `{name}`")))
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn tool() -> Value {
    json!({ "name": "catmodel", "version": env!("CARGO_PKG_VERSION") })
}

fn size(c: &FinCat) -> String {
    format!("{} objects, {} arrows", c.num_objects(), c.num_morphisms())
}

fn class_lines(name: &str, r: &ClassReport) -> String {
    format!(
        "{name}: weak_equivalence={} fibration={} cofibration={} trivial_fibration={} trivial_cofibration={}\n",
        r.is_weak_equivalence, r.is_fibration, r.is_cofibration, r.is_trivial_fibration, r.is_trivial_cofibration
    )
}

/// Universal-property checks against small probes; a size guard leaves the
/// property unchecked rather than failed.
fn universal(
    check: impl Fn(&Arc<FinCat>) -> catmodel::Result<bool>,
) -> Result<Option<bool>, CliError> {
    let mut all = true;
    for probe in [NamedCat::One.arc(), NamedCat::Arrow.arc()] {
        match check(&probe) {
            Ok(ok) => all &= ok,
            Err(Error::Resource(_)) => return Ok(None),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(Some(all))
}

fn universal_text(u: Option<bool>) -> &'static str {
    match u {
        Some(true) => "holds",
        Some(false) => "FAILS",
        None => "unchecked (size guard)",
    }
}

pub fn classify(doc: &Document, name: &str) -> Result<Outcome, CliError> {
    let f = functor(doc, name)?;
    let limits = default_limits();
    let r = classify_with(f, limits)?;
    let ok = r.revalidate(limits)?;
    let text = format!("{}witnesses revalidate: {ok}\n", class_lines(name, &r));
    Ok(Outcome::new(
        json!({ "tool": tool(), "command": "classify", "functor": name, "report": to_json(&r), "witnesses_revalidate": ok }),
        text,
        ok,
    ))
}

pub fn factor(doc: &Document, name: &str, mode: &str) -> Result<Outcome, CliError> {
    let f = functor(doc, name)?;
    let mode = FactorMode::parse(mode)
        .ok_or_else(|| CliError::Usage(format!("unknown factorization mode `{mode}`")))?;
    let w = factorize(f, mode, default_limits())?;
    let (l, r) = (&w.left_report, &w.right_report);
    let ok = match mode {
        FactorMode::WeThenFib => l.is_weak_equivalence && r.is_fibration,
        FactorMode::CofThenTrivFib => l.is_cofibration && r.is_trivial_fibration,
        FactorMode::TrivCofThenFib => l.is_trivial_cofibration && r.is_fibration,
    };
    let mid = w.left.codomain();
    let mut text = format!(
        "{name} = right . left ({}), middle: {}\n",
        mode.name(),
        size(mid)
    );
    text += &class_lines("left", l);
    text += &class_lines("right", r);
    text += "\n";
    text += &write_category("Middle", mid);
    Ok(Outcome::new(
        json!({ "tool": tool(), "command": "factor", "functor": name, "witness": to_json(&w), "classes_hold": ok }),
        text,
        ok,
    ))
}

pub fn lift(doc: &Document, name: &str) -> Result<Outcome, CliError> {
    let sq = doc
        .squares
        .get(name)
        .ok_or_else(|| CliError::Usage(format!("no square named `{name}`")))?;
    let out = solve_lift(sq, default_limits())?;
    let (ok, text) = match &out {
        LiftOutcome::Lift(w) => {
            let good =
                compose_functors(w, &sq.i)? == sq.top && compose_functors(&sq.p, w)? == sq.bottom;
            (
                good,
                format!("lift found\n\n{}", write_functor("lift", w, "B", "C")),
            )
        }
        LiftOutcome::NoLift => (true, "no lift\n".to_string()),
    };
    Ok(Outcome::new(
        json!({ "tool": tool(), "command": "lift", "square": name, "outcome": to_json(&out) }),
        text,
        ok,
    ))
}

pub fn corner(doc: &Document, i: &str, p: &str) -> Result<Outcome, CliError> {
    let (fi, fp) = (functor(doc, i)?, functor(doc, p)?);
    let r = corner_map(fi, fp, default_limits())?;
    let ok = r.conditions_hold();
    let text = format!(
        "corner [{i}, {p}]: {} -> {}\nisofibration={} equivalence={}\ni: cofibration={} trivial={}\np: fibration={} trivial={}\nconditions hold: {ok}\n",
        size(r.corner.domain()),
        size(r.corner.codomain()),
        r.is_isofibration,
        r.is_equivalence,
        r.i_cofibration,
        r.i_trivial,
        r.p_fibration,
        r.p_trivial
    );
    Ok(Outcome::new(
        json!({ "tool": tool(), "command": "corner", "i": i, "p": p, "report": to_json(&r), "conditions_hold": ok }),
        text,
        ok,
    ))
}

pub fn pseudolimit(doc: &Document, name: &str) -> Result<Outcome, CliError> {
    let f = functor(doc, name)?;
    let limits = default_limits();
    let pl = pseudolimit_of_arrow(f);
    let rd = classify_with(&pl.d, limits)?;
    let rv = classify_with(&pl.v, limits)?;
    let back = compose_functors(&pl.v, &pl.d)? == *f;
    let u = universal(|probe| pl.verify_universal(probe, true, limits))?;
    let ok = back && rd.is_weak_equivalence && rv.is_fibration && u != Some(false);
    let mut text = format!("pseudolimit of {name}: {}\n", size(&pl.cat));
    text += &class_lines("d", &rd);
    text += &class_lines("v", &rv);
    let _ = writeln!(
        text,
        "v . d = {name}: {back}\nuniversal property: {}\n",
        universal_text(u)
    );
    text += &write_category("L", &pl.cat);
    Ok(Outcome::new(
        json!({
            "tool": tool(), "command": "pseudolimit", "functor": name,
            "category": to_json(&*pl.cat), "u": to_json(&pl.u), "v": to_json(&pl.v), "d": to_json(&pl.d),
            "lambda": to_json(&pl.lambda), "zeta": to_json(&pl.zeta),
            "d_weak_equivalence": rd.is_weak_equivalence, "v_fibration": rv.is_fibration, "universal": u,
        }),
        text,
        ok,
    ))
}

pub fn pseudocolimit(doc: &Document, name: &str) -> Result<Outcome, CliError> {
    let f = functor(doc, name)?;
    let limits = default_limits();
    let pc = pseudocolimit_of_arrow(f);
    let ri = classify_with(&pc.i, limits)?;
    let re = classify_with(&pc.e, limits)?;
    let back = compose_functors(&pc.e, &pc.i)? == *f;
    let u = universal(|probe| pc.verify_universal(probe, limits))?;
    let ok = back && ri.is_cofibration && re.is_trivial_fibration && u != Some(false);
    let mut text = format!("pseudocolimit of {name}: {}\n", size(&pc.cat));
    text += &class_lines("i", &ri);
    text += &class_lines("e", &re);
    let _ = writeln!(
        text,
        "e . i = {name}: {back}\nuniversal property: {}\n",
        universal_text(u)
    );
    text += &write_category("C", &pc.cat);
    Ok(Outcome::new(
        json!({
            "tool": tool(), "command": "pseudocolimit", "functor": name,
            "category": to_json(&*pc.cat), "i": to_json(&pc.i), "j": to_json(&pc.j), "e": to_json(&pc.e),
            "lambda": to_json(&pc.lambda), "epsilon": to_json(&pc.epsilon),
            "i_cofibration": ri.is_cofibration, "e_trivial_fibration": re.is_trivial_fibration, "universal": u,
        }),
        text,
        ok,
    ))
}

pub fn coequifier(doc: &Document, alpha: &str, beta: &str) -> Result<Outcome, CliError> {
    let (a, b) = (transformation(doc, alpha)?, transformation(doc, beta)?);
    let limits = default_limits();
    let w = coequify(a, b)?;
    let equal = a
        .components()
        .iter()
        .zip(b.components())
        .all(|(&x, &y)| w.p.on_morphism(x) == w.p.on_morphism(y));
    let u = universal(|probe| w.verify_universal(a, b, probe, limits))?;
    let ok = equal && u != Some(false);
    let text = format!(
        "coequifier of {alpha}, {beta}: {}\ncoequifies: {equal}\nuniversal property: {}\n\n{}",
        size(&w.quotient),
        universal_text(u),
        write_category("Q", &w.quotient)
    );
    Ok(Outcome::new(
        json!({
            "tool": tool(), "command": "coequifier", "alpha": alpha, "beta": beta,
            "category": to_json(&*w.quotient), "p": to_json(&w.p), "classes": w.classes, "universal": u,
        }),
        text,
        ok,
    ))
}

pub fn coinserter(doc: &Document, f: &str, g: &str, bound: u64) -> Result<Outcome, CliError> {
    let (ff, fg) = (functor(doc, f)?, functor(doc, g)?);
    let limits = default_limits();
    match coinserter_bounded(ff, fg, bound)? {
        CoinserterOutcome::Finite(c) => {
            let u = universal(|probe| c.verify_universal(ff, fg, probe, limits))?;
            let ok = u != Some(false);
            let text = format!(
                "coinserter of {f}, {g}: {}\nuniversal property: {}\n\n{}",
                size(&c.cat),
                universal_text(u),
                write_category("K", &c.cat)
            );
            Ok(Outcome::new(
                json!({
                    "tool": tool(), "command": "coinserter", "f": f, "g": g, "bound": bound, "outcome": "finite",
                    "category": to_json(&*c.cat), "p": to_json(&c.p), "cell": to_json(&c.cell), "universal": u,
                }),
                text,
                ok,
            ))
        }
        CoinserterOutcome::Diverged {
            frontier,
            created,
            cyclic,
        } => {
            let text =
                format!(
                "coinserter of {f}, {g}: diverged after {created} arrows (level {frontier}){}\n",
                if cyclic { "; the coinserter is infinite" } else { "" }
            );
            Ok(Outcome {
                json: json!({
                    "tool": tool(), "command": "coinserter", "f": f, "g": g, "bound": bound, "outcome": "diverged",
                    "level": frontier, "created": created, "infinite": cyclic,
                }),
                text,
                status: 3,
            })
        }
    }
}

pub fn weighted_limit(
    doc: &Document,
    j: &str,
    s: &str,
    probe_size: usize,
) -> Result<Outcome, CliError> {
    let get = |n: &str| {
        doc.weights
            .get(n)
            .ok_or_else(|| CliError::Usage(format!("no weight named `{n}`")))
    };
    let (wj, ws) = (get(j)?, get(s)?);
    let limits = default_limits();
    let lim = build_limit(wj, ws, limits)?;
    let mut reports = Vec::new();
    for probe in small_probes(probe_size) {
        reports.push(verify_defining_iso(wj, ws, &probe, limits)?);
    }
    let ok = reports.iter().all(|r| r.holds());
    let mut text = format!("weighted limit {{{j}, {s}}}: {}\n", size(&lim.cat));
    for r in &reports {
        let _ = writeln!(
            text,
            "defining isomorphism on {}: {} ({} objects, {} arrows)",
            r.probe,
            if r.holds() { "holds" } else { "FAILS" },
            r.lhs_objects,
            r.lhs_morphisms
        );
    }
    text += "\n";
    text += &write_category("Lim", &lim.cat);
    Ok(Outcome::new(
        json!({
            "tool": tool(), "command": "weighted-limit", "weight": j, "diagram": s,
            "category": to_json(&*lim.cat), "cones": to_json(&lim.maps), "defining_iso": to_json(&reports),
        }),
        text,
        ok,
    ))
}

pub fn verify(config: &SuiteConfig) -> Result<Outcome, CliError> {
    let report = run_suite(config);
    let mut text = format!(
        "{} seed {} count {}: {} passed, {} failed, {} skipped; {} functors classified, {} consistency faults\n",
        config.suite.name(),
        config.seed,
        config.count,
        report.passed,
        report.failed,
        report.skipped,
        report.classified,
        report.consistency_faults
    );
    if let Some(ms) = report.wall_time_ms {
        let _ = writeln!(text, "wall time: {ms} ms");
    }
    for case in report.cases.iter().filter(|c| c.verdict == Verdict::Fail) {
        let _ = write!(text, "case {} (seed {}) failed:", case.index, case.seed);
        for c in case.checks.iter().filter(|c| !c.ok) {
            let _ = write!(text, " {}", c.name);
            if let Some(n) = &c.note {
                let _ = write!(text, " [{n}]");
            }
        }
        if let Some(d) = &case.detail {
            let _ = write!(text, " {d}");
        }
        text.push('\n');
    }
    Ok(Outcome::new(to_json(&report), text, report.all_passed()))
}
