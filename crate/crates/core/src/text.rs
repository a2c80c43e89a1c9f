//! Plain-text definitions of categories, functors, transformations, lifting
//! squares and weights.
//!
//! ```text
//! category Walk
//!   objects: a b c
//!   arrows: f: a -> b ; g: b -> c ; h: a -> c
//!   compose: g.f = h
//!
//! functor F : Walk -> Arrow
//!   objects: a |-> 0 ; b |-> 1 ; c |-> 1
//!   arrows: f |-> f ; g |-> id_1 ; h |-> f
//! ```
//!
//! A block starts with an unindented header line; its clauses are indented
//! and may come in any order. Blocks may refer to each other in any order.
//! Identities are implicit and named `id_<object>`. `#` starts a comment.
//!
//! The built-in categories `0`, `1`, `2`, `Arrow`, `ParallelPair` and `Iso`
//! are always available and may be shadowed.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;
use std::sync::Arc;

use thiserror::Error;

use crate::fincat::{FinCat, FinFunctor, MorId, NamedCat, NatTransform, ObjId};
use crate::model::LiftingProblem;
use crate::weights::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Everything defined in one input, by name.
#[derive(Debug, Clone, Default)]
pub struct Document {
    pub categories: BTreeMap<String, Arc<FinCat>>,
    pub functors: BTreeMap<String, FinFunctor>,
    pub transformations: BTreeMap<String, NatTransform>,
    pub squares: BTreeMap<String, LiftingProblem>,
    pub weights: BTreeMap<String, Weight>,
}

impl Document {
    pub fn category(&self, name: &str) -> Option<&Arc<FinCat>> {
        self.categories.get(name)
    }

    pub fn functor(&self, name: &str) -> Option<&FinFunctor> {
        self.functors.get(name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Category,
    Functor,
    Transformation,
    Square,
    Weight,
}

#[derive(Debug)]
struct Clause {
    line: usize,
    key: String,
    value: String,
}

#[derive(Debug)]
struct Block {
    line: usize,
    kind: Kind,
    name: String,
    /// Header words after the name.
    rest: Vec<String>,
    clauses: Vec<Clause>,
}

impl Block {
    fn clause(&self, key: &str) -> Result<Option<&Clause>, ParseError> {
        let mut found = self.clauses.iter().filter(|c| c.key == key);
        let first = found.next();
        if let Some(dup) = found.next() {
            return err(
                dup.line,
                format!("clause `{key}` given twice in `{}`", self.name),
            );
        }
        Ok(first)
    }

    fn required(&self, key: &str) -> Result<&Clause, ParseError> {
        self.clause(key)?.ok_or_else(|| ParseError {
            line: self.line,
            message: format!("`{}` is missing its `{key}` clause", self.name),
        })
    }

    fn check_keys(&self, allowed: &[&str]) -> Result<(), ParseError> {
        for c in &self.clauses {
            if !allowed.contains(&c.key.as_str()) {
                return err(c.line, format!("unknown clause `{}`", c.key));
            }
        }
        Ok(())
    }
}

const RESERVED: &[char] = &[';', ':', '.', '=', '|', '#'];

fn valid_name(s: &str) -> bool {
    !s.is_empty()
        && !s.contains(char::is_whitespace)
        && !s.contains(RESERVED)
        && s != "->"
        && s != "=>"
}

fn check_name(line: usize, s: &str) -> Result<(), ParseError> {
    if valid_name(s) {
        Ok(())
    } else {
        err(line, format!("`{s}` is not a valid name"))
    }
}

fn split_blocks(src: &str) -> Result<Vec<Block>, ParseError> {
    let mut blocks: Vec<Block> = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let line = i + 1;
        let text = raw.split('#').next().unwrap_or("");
        if text.trim().is_empty() {
            continue;
        }
        if !text.starts_with(char::is_whitespace) {
            let words: Vec<&str> = text.split_whitespace().collect();
            let kind = match words[0] {
                "category" => Kind::Category,
                "functor" => Kind::Functor,
                "transformation" => Kind::Transformation,
                "square" => Kind::Square,
                "weight" => Kind::Weight,
                other => return err(line, format!("expected a definition, found `{other}`")),
            };
            let Some(name) = words.get(1) else {
                return err(line, format!("`{}` needs a name", words[0]));
            };
            check_name(line, name)?;
            blocks.push(Block {
                line,
                kind,
                name: name.to_string(),
                rest: words[2..].iter().map(|s| s.to_string()).collect(),
                clauses: Vec::new(),
            });
            continue;
        }
        let Some(block) = blocks.last_mut() else {
            return err(line, "indented line outside of any definition");
        };
        let text = text.trim();
        // `at x: C` and `on m: F` carry their own colon after the subject.
        let (key, value) = if let Some(rest) = text
            .strip_prefix("at ")
            .or_else(|| text.strip_prefix("on "))
        {
            let Some((subject, value)) = rest.split_once(':') else {
                return err(
                    line,
                    "expected `at <object>: <category>` or `on <arrow>: <functor>`",
                );
            };
            (
                format!("{} {}", &text[..2], subject.trim()),
                value.trim().to_string(),
            )
        } else {
            let Some((key, value)) = text.split_once(':') else {
                return err(line, format!("expected `<clause>: ...`, found `{text}`"));
            };
            (key.trim().to_string(), value.trim().to_string())
        };
        block.clauses.push(Clause { line, key, value });
    }
    Ok(blocks)
}

/// Items of a `;`-separated list, skipping empty ones.
fn items(value: &str) -> impl Iterator<Item = &str> {
    value.split(';').map(str::trim).filter(|s| !s.is_empty())
}

/// `lhs <sep> rhs` with both sides single names.
fn pair<'a>(line: usize, item: &'a str, sep: &str) -> Result<(&'a str, &'a str), ParseError> {
    let Some((l, r)) = item.split_once(sep) else {
        return err(line, format!("expected `x {sep} y`, found `{item}`"));
    };
    let (l, r) = (l.trim(), r.trim());
    check_name(line, l)?;
    check_name(line, r)?;
    Ok((l, r))
}

fn builtins() -> BTreeMap<String, Arc<FinCat>> {
    let mut out = BTreeMap::new();
    for tag in NamedCat::ALL {
        let c = tag.arc();
        out.insert(c.name().to_string(), c);
    }
    out
}

fn parse_category(b: &Block) -> Result<FinCat, ParseError> {
    b.check_keys(&["objects", "arrows", "compose"])?;
    if !b.rest.is_empty() {
        return err(b.line, "unexpected words after the category name");
    }
    let mut objects: Vec<String> = Vec::new();
    if let Some(c) = b.clause("objects")? {
        for o in c.value.split_whitespace() {
            check_name(c.line, o)?;
            if objects.iter().any(|x| x == o) {
                return err(c.line, format!("object `{o}` declared twice"));
            }
            objects.push(o.to_string());
        }
    }
    let obj_of: HashMap<&str, ObjId> = objects
        .iter()
        .enumerate()
        .map(|(i, o)| (o.as_str(), i))
        .collect();
    let mut arrows: Vec<(String, ObjId, ObjId)> = objects
        .iter()
        .enumerate()
        .map(|(i, o)| (format!("id_{o}"), i, i))
        .collect();
    let mut mor_of: HashMap<String, MorId> = arrows
        .iter()
        .enumerate()
        .map(|(i, a)| (a.0.clone(), i))
        .collect();
    if let Some(c) = b.clause("arrows")? {
        for item in items(&c.value) {
            let Some((name, ends)) = item.split_once(':') else {
                return err(
                    c.line,
                    format!("expected `name: source -> target`, found `{item}`"),
                );
            };
            let name = name.trim();
            check_name(c.line, name)?;
            let words: Vec<&str> = ends.split_whitespace().collect();
            let [s, "->", t] = words[..] else {
                return err(c.line, format!("expected `source -> target` for `{name}`"));
            };
            let look = |o: &str| {
                obj_of.get(o).copied().ok_or_else(|| ParseError {
                    line: c.line,
                    message: format!("unknown object `{o}`"),
                })
            };
            let (s, t) = (look(s)?, look(t)?);
            if mor_of.contains_key(name) {
                return err(
                    c.line,
                    format!("arrow `{name}` declared twice or shadows an identity"),
                );
            }
            mor_of.insert(name.to_string(), arrows.len());
            arrows.push((name.to_string(), s, t));
        }
    }
    let n = objects.len();
    let mut composites = BTreeMap::new();
    for g in 0..arrows.len() {
        for f in 0..arrows.len() {
            if arrows[f].2 != arrows[g].1 {
                continue;
            }
            if g < n {
                composites.insert((g, f), f);
            } else if f < n {
                composites.insert((g, f), g);
            }
        }
    }
    if let Some(c) = b.clause("compose")? {
        for item in items(&c.value) {
            let Some((lhs, rhs)) = item.split_once('=') else {
                return err(c.line, format!("expected `g.f = h`, found `{item}`"));
            };
            let Some((g, f)) = lhs.trim().split_once('.') else {
                return err(c.line, format!("expected `g.f` on the left of `{item}`"));
            };
            let look = |m: &str| {
                mor_of.get(m.trim()).copied().ok_or_else(|| ParseError {
                    line: c.line,
                    message: format!("unknown arrow `{}`", m.trim()),
                })
            };
            let (g, f, h) = (look(g)?, look(f)?, look(rhs)?);
            if arrows[f].2 != arrows[g].1 {
                return err(c.line, format!("`{item}`: the arrows are not composable"));
            }
            if arrows[h].1 != arrows[f].1 || arrows[h].2 != arrows[g].2 {
                return err(
                    c.line,
                    format!("`{item}`: the composite has the wrong endpoints"),
                );
            }
            if let Some(&old) = composites.get(&(g, f)) {
                if old != h {
                    return err(
                        c.line,
                        format!("`{item}` contradicts an earlier or implicit composite"),
                    );
                }
            }
            composites.insert((g, f), h);
        }
    }
    for g in n..arrows.len() {
        for f in n..arrows.len() {
            if arrows[f].2 == arrows[g].1 && !composites.contains_key(&(g, f)) {
                return err(
                    b.line,
                    format!(
                        "`{}`: composite {}.{} is not declared",
                        b.name, arrows[g].0, arrows[f].0
                    ),
                );
            }
        }
    }
    let raw = crate::fincat::RawCat {
        name: b.name.clone(),
        objects,
        arrows,
        identities: (0..n).collect(),
        composites,
    };
    raw.into_cat()
        .or_else(|e| err(b.line, format!("`{}` is not a category: {e}", b.name)))
}

fn lookup<'a, T>(
    map: &'a BTreeMap<String, T>,
    line: usize,
    what: &str,
    name: &str,
) -> Result<&'a T, ParseError> {
    map.get(name).ok_or_else(|| ParseError {
        line,
        message: format!("unknown {what} `{name}`"),
    })
}

fn object_in(cat: &FinCat, line: usize, name: &str) -> Result<ObjId, ParseError> {
    cat.find_object(name).ok_or_else(|| ParseError {
        line,
        message: format!("`{}` has no object `{name}`", cat.name()),
    })
}

fn morphism_in(cat: &FinCat, line: usize, name: &str) -> Result<MorId, ParseError> {
    if let Some(m) = cat.find_morphism(name) {
        return Ok(m);
    }
    // Identities of built-in and generated categories may carry other names.
    if let Some(x) = name.strip_prefix("id_").and_then(|o| cat.find_object(o)) {
        return Ok(cat.identity(x));
    }
    err(line, format!("`{}` has no arrow `{name}`", cat.name()))
}

/// `name : A -> B` (or `=>`) after the block name.
fn signature<'a>(b: &'a Block, arrow: &str) -> Result<(&'a str, &'a str), ParseError> {
    match &b.rest[..] {
        [colon, a, sep, c] if colon == ":" && sep == arrow => Ok((a, c)),
        _ => err(b.line, format!("expected `{} : X {arrow} Y`", b.name)),
    }
}

fn parse_functor(
    b: &Block,
    cats: &BTreeMap<String, Arc<FinCat>>,
) -> Result<FinFunctor, ParseError> {
    b.check_keys(&["objects", "arrows"])?;
    let (a, c) = signature(b, "->")?;
    let dom = lookup(cats, b.line, "category", a)?.clone();
    let cod = lookup(cats, b.line, "category", c)?.clone();
    let mut obj = vec![None; dom.num_objects()];
    if let Some(cl) = b.clause("objects")? {
        for item in items(&cl.value) {
            let (x, y) = pair(cl.line, item, "|->")?;
            let x = object_in(&dom, cl.line, x)?;
            if obj[x].replace(object_in(&cod, cl.line, y)?).is_some() {
                return err(
                    cl.line,
                    format!("object `{}` mapped twice", dom.object_name(x)),
                );
            }
        }
    }
    let obj: Vec<ObjId> = obj
        .into_iter()
        .enumerate()
        .map(|(x, y)| {
            y.ok_or_else(|| ParseError {
                line: b.line,
                message: format!(
                    "`{}`: object `{}` is not mapped",
                    b.name,
                    dom.object_name(x)
                ),
            })
        })
        .collect::<Result<_, _>>()?;
    let mut mor: Vec<Option<MorId>> = dom
        .morphisms()
        .map(|m| dom.is_identity(m).then(|| cod.identity(obj[dom.src(m)])))
        .collect();
    if let Some(cl) = b.clause("arrows")? {
        for item in items(&cl.value) {
            let (x, y) = pair(cl.line, item, "|->")?;
            let x = morphism_in(&dom, cl.line, x)?;
            let y = morphism_in(&cod, cl.line, y)?;
            if dom.is_identity(x) {
                if mor[x] != Some(y) {
                    return err(cl.line, "identities must go to identities");
                }
                continue;
            }
            if mor[x].replace(y).is_some() {
                return err(
                    cl.line,
                    format!("arrow `{}` mapped twice", dom.morphism_name(x)),
                );
            }
        }
    }
    let mor: Vec<MorId> = mor
        .into_iter()
        .enumerate()
        .map(|(m, y)| {
            y.ok_or_else(|| ParseError {
                line: b.line,
                message: format!(
                    "`{}`: arrow `{}` is not mapped",
                    b.name,
                    dom.morphism_name(m)
                ),
            })
        })
        .collect::<Result<_, _>>()?;
    FinFunctor::new(dom, cod, obj, mor)
        .or_else(|e| err(b.line, format!("`{}` is not a functor: {e}", b.name)))
}

fn parse_transformation(
    b: &Block,
    functors: &BTreeMap<String, FinFunctor>,
) -> Result<NatTransform, ParseError> {
    b.check_keys(&["components"])?;
    let (f, g) = signature(b, "=>")?;
    let f = lookup(functors, b.line, "functor", f)?;
    let g = lookup(functors, b.line, "functor", g)?;
    let (dom, cod) = (f.domain().clone(), f.codomain().clone());
    let mut comps = vec![None; dom.num_objects()];
    if let Some(cl) = b.clause("components")? {
        for item in items(&cl.value) {
            let (x, m) = pair(cl.line, item, "|->")?;
            let x = object_in(&dom, cl.line, x)?;
            if comps[x].replace(morphism_in(&cod, cl.line, m)?).is_some() {
                return err(
                    cl.line,
                    format!("component at `{}` given twice", dom.object_name(x)),
                );
            }
        }
    }
    let comps: Vec<MorId> = comps
        .into_iter()
        .enumerate()
        .map(|(x, m)| {
            m.ok_or_else(|| ParseError {
                line: b.line,
                message: format!("`{}`: no component at `{}`", b.name, dom.object_name(x)),
            })
        })
        .collect::<Result<_, _>>()?;
    NatTransform::new(f.clone(), g.clone(), comps).or_else(|e| {
        err(
            b.line,
            format!("`{}` is not a natural transformation: {e}", b.name),
        )
    })
}

fn parse_square(
    b: &Block,
    functors: &BTreeMap<String, FinFunctor>,
) -> Result<LiftingProblem, ParseError> {
    b.check_keys(&["left", "right", "top", "bottom"])?;
    if !b.rest.is_empty() {
        return err(b.line, "unexpected words after the square name");
    }
    let get = |key: &str| -> Result<FinFunctor, ParseError> {
        let c = b.required(key)?;
        lookup(functors, c.line, "functor", &c.value).cloned()
    };
    let (i, p, top, bottom) = (get("left")?, get("right")?, get("top")?, get("bottom")?);
    LiftingProblem::new(i, p, top, bottom).or_else(|e| {
        err(
            b.line,
            format!("`{}` is not a commuting square: {e}", b.name),
        )
    })
}

fn parse_weight(
    b: &Block,
    cats: &BTreeMap<String, Arc<FinCat>>,
    functors: &BTreeMap<String, FinFunctor>,
) -> Result<Weight, ParseError> {
    let base = match &b.rest[..] {
        [over, base] if over == "over" => lookup(cats, b.line, "category", base)?.clone(),
        _ => return err(b.line, format!("expected `weight {} over <base>`", b.name)),
    };
    let mut at: Vec<Option<Arc<FinCat>>> = vec![None; base.num_objects()];
    let mut on: Vec<Option<FinFunctor>> = vec![None; base.num_morphisms()];
    for c in &b.clauses {
        if let Some(x) = c.key.strip_prefix("at ") {
            let x = object_in(&base, c.line, x)?;
            let v = lookup(cats, c.line, "category", &c.value)?.clone();
            if at[x].replace(v).is_some() {
                return err(
                    c.line,
                    format!("value at `{}` given twice", base.object_name(x)),
                );
            }
        } else if let Some(m) = c.key.strip_prefix("on ") {
            let m = morphism_in(&base, c.line, m)?;
            let v = lookup(functors, c.line, "functor", &c.value)?.clone();
            if on[m].replace(v).is_some() {
                return err(
                    c.line,
                    format!("action of `{}` given twice", base.morphism_name(m)),
                );
            }
        } else {
            return err(c.line, format!("unknown clause `{}`", c.key));
        }
    }
    let at: Vec<Arc<FinCat>> = at
        .into_iter()
        .enumerate()
        .map(|(x, v)| {
            v.ok_or_else(|| ParseError {
                line: b.line,
                message: format!("`{}`: no value at `{}`", b.name, base.object_name(x)),
            })
        })
        .collect::<Result<_, _>>()?;
    let mut actions = Vec::with_capacity(base.num_morphisms());
    for m in base.morphisms() {
        // `m: d -> c` acts as a functor W(c) -> W(d).
        let (d, c) = (base.src(m), base.tgt(m));
        let f = match on[m].take() {
            Some(f) => f,
            None if base.is_identity(m) => FinFunctor::identity(&at[c]),
            None => {
                return err(
                    b.line,
                    format!(
                        "`{}`: no action given for `{}`",
                        b.name,
                        base.morphism_name(m)
                    ),
                )
            }
        };
        let f = f
            .with_domain(at[c].clone())
            .and_then(|f| f.with_codomain(at[d].clone()))
            .or_else(|_| {
                err(
                    b.line,
                    format!(
                        "`{}`: the action of `{}` must go from the value at `{}` to the value at `{}`",
                        b.name,
                        base.morphism_name(m),
                        base.object_name(c),
                        base.object_name(d)
                    ),
                )
            })?;
        actions.push(f);
    }
    Weight::new(base, at, actions)
        .or_else(|e| err(b.line, format!("`{}` is not a weight: {e}", b.name)))
}

/// Parse a whole document. Names must be unique within each kind.
pub fn parse(src: &str) -> Result<Document, ParseError> {
    let blocks = split_blocks(src)?;
    let mut seen: HashSet<(u8, &str)> = HashSet::new();
    for b in &blocks {
        if !seen.insert((b.kind as u8, b.name.as_str())) {
            return err(b.line, format!("`{}` is defined twice", b.name));
        }
    }
    let of = |k: Kind| blocks.iter().filter(move |b| b.kind == k);
    let mut doc = Document {
        categories: builtins(),
        ..Document::default()
    };
    for b in of(Kind::Category) {
        let c = parse_category(b)?;
        doc.categories.insert(b.name.clone(), Arc::new(c));
    }
    for b in of(Kind::Functor) {
        let f = parse_functor(b, &doc.categories)?;
        doc.functors.insert(b.name.clone(), f);
    }
    for b in of(Kind::Transformation) {
        let t = parse_transformation(b, &doc.functors)?;
        doc.transformations.insert(b.name.clone(), t);
    }
    for b in of(Kind::Square) {
        let s = parse_square(b, &doc.functors)?;
        doc.squares.insert(b.name.clone(), s);
    }
    for b in of(Kind::Weight) {
        let w = parse_weight(b, &doc.categories, &doc.functors)?;
        doc.weights.insert(b.name.clone(), w);
    }
    Ok(doc)
}

/// Printable object and arrow names for a category: reserved characters
/// become `_`, and clashes get a numeric suffix. Identities are `id_<obj>`.
fn printable_names(c: &FinCat) -> (Vec<String>, Vec<String>) {
    fn clean(s: &str, fallback: String) -> String {
        let t: String = s
            .chars()
            .map(|ch| {
                if ch.is_whitespace() || RESERVED.contains(&ch) {
                    '_'
                } else {
                    ch
                }
            })
            .collect();
        if valid_name(&t) {
            t
        } else {
            fallback
        }
    }
    fn fresh(taken: &mut HashSet<String>, want: String) -> String {
        let mut name = want.clone();
        let mut k = 1;
        while !taken.insert(name.clone()) {
            name = format!("{want}_{k}");
            k += 1;
        }
        name
    }
    let mut taken = HashSet::new();
    let objs: Vec<String> = c
        .objects()
        .map(|x| fresh(&mut taken, clean(c.object_name(x), format!("o{x}"))))
        .collect();
    let mut taken: HashSet<String> = objs.iter().map(|o| format!("id_{o}")).collect();
    let mors = c
        .morphisms()
        .map(|m| {
            if c.is_identity(m) {
                format!("id_{}", objs[c.src(m)])
            } else {
                fresh(&mut taken, clean(c.morphism_name(m), format!("m{m}")))
            }
        })
        .collect();
    (objs, mors)
}

/// Render a category block. Composites with an identity are left implicit.
pub fn write_category(name: &str, c: &FinCat) -> String {
    let (objs, mors) = printable_names(c);
    let mut out = format!("category {name}\n  objects: {}\n", objs.join(" "));
    let arrows: Vec<String> = c
        .morphisms()
        .filter(|&m| !c.is_identity(m))
        .map(|m| format!("{}: {} -> {}", mors[m], objs[c.src(m)], objs[c.tgt(m)]))
        .collect();
    if !arrows.is_empty() {
        let _ = writeln!(out, "  arrows: {}", arrows.join(" ; "));
    }
    let mut comps = Vec::new();
    for g in c.morphisms().filter(|&m| !c.is_identity(m)) {
        for &f in c.incoming(c.src(g)) {
            if !c.is_identity(f) {
                comps.push(format!("{}.{} = {}", mors[g], mors[f], mors[c.comp(g, f)]));
            }
        }
    }
    if !comps.is_empty() {
        let _ = writeln!(out, "  compose: {}", comps.join(" ; "));
    }
    out
}

/// Render a functor block between categories written under the given names.
pub fn write_functor(name: &str, f: &FinFunctor, dom: &str, cod: &str) -> String {
    let (a, b) = (f.domain(), f.codomain());
    let (ao, am) = printable_names(a);
    let (bo, bm) = printable_names(b);
    let mut out = format!("functor {name} : {dom} -> {cod}\n");
    if a.num_objects() > 0 {
        let objs: Vec<String> = a
            .objects()
            .map(|x| format!("{} |-> {}", ao[x], bo[f.on_object(x)]))
            .collect();
        let _ = writeln!(out, "  objects: {}", objs.join(" ; "));
    }
    let arrows: Vec<String> = a
        .morphisms()
        .filter(|&m| !a.is_identity(m))
        .map(|m| format!("{} |-> {}", am[m], bm[f.on_morphism(m)]))
        .collect();
    if !arrows.is_empty() {
        let _ = writeln!(out, "  arrows: {}", arrows.join(" ; "));
    }
    out
}

/// A self-contained document holding `f` and both of its categories.
pub fn write_functor_document(name: &str, f: &FinFunctor) -> String {
    let same = Arc::ptr_eq(f.domain(), f.codomain());
    let dom = format!("{name}_dom");
    let cod = if same {
        dom.clone()
    } else {
        format!("{name}_cod")
    };
    let mut out = write_category(&dom, f.domain());
    if !same {
        out.push('\n');
        out.push_str(&write_category(&cod, f.codomain()));
    }
    out.push('\n');
    out.push_str(&write_functor(name, f, &dom, &cod));
    out
}
