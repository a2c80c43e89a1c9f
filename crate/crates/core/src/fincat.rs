//! Finite categories, functors and natural transformations.
//!
//! A [`FinCat`] stores its composition table fully materialized: for every
//! arrow `g` there is a row indexed by the arrows ending at `src(g)`, so a
//! composite lookup is two array reads. Values are immutable once built and
//! are always valid; unvalidated tables live in [`RawCat`].

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, FunctorError, LawViolation, Result};

pub type ObjId = usize;
pub type MorId = usize;

const NONE: usize = usize::MAX;

/// A finite category with a total composition table.
#[derive(Clone)]
pub struct FinCat {
    name: String,
    obj_names: Vec<String>,
    mor_names: Vec<String>,
    src: Vec<ObjId>,
    tgt: Vec<ObjId>,
    ident: Vec<MorId>,
    incoming: Vec<Vec<MorId>>,
    outgoing: Vec<Vec<MorId>>,
    in_pos: Vec<usize>,
    homs: Vec<Vec<MorId>>,
    post: Vec<Vec<MorId>>,
    inverse: Vec<Option<MorId>>,
}

impl PartialEq for FinCat {
    /// Equality of tables; names are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.obj_names.len() == other.obj_names.len()
            && self.src == other.src
            && self.tgt == other.tgt
            && self.ident == other.ident
            && self.post == other.post
    }
}

impl Eq for FinCat {}

impl fmt::Debug for FinCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FinCat({}: {} objects, {} arrows)",
            self.name,
            self.num_objects(),
            self.num_morphisms()
        )
    }
}

impl FinCat {
    /// Assemble a category from arrow data and a composite oracle, then check
    /// every law. `compose` is consulted for every composable pair `(g, f)`.
    pub fn from_parts(
        name: impl Into<String>,
        obj_names: Vec<String>,
        arrows: Vec<(String, ObjId, ObjId)>,
        ident: Vec<MorId>,
        compose: impl FnMut(MorId, MorId) -> Option<MorId>,
    ) -> Result<FinCat, LawViolation> {
        let cat = Self::assemble(name.into(), obj_names, arrows, ident, compose)?;
        cat.check_laws()?;
        Ok(cat.with_inverses())
    }

    fn assemble(
        name: String,
        obj_names: Vec<String>,
        arrows: Vec<(String, ObjId, ObjId)>,
        ident: Vec<MorId>,
        mut compose: impl FnMut(MorId, MorId) -> Option<MorId>,
    ) -> Result<FinCat, LawViolation> {
        let n = obj_names.len();
        let m = arrows.len();
        let mut mor_names = Vec::with_capacity(m);
        let mut src = Vec::with_capacity(m);
        let mut tgt = Vec::with_capacity(m);
        for (i, (name, s, t)) in arrows.into_iter().enumerate() {
            if s >= n || t >= n {
                return Err(LawViolation::EndpointOutOfRange { arrow: i });
            }
            mor_names.push(name);
            src.push(s);
            tgt.push(t);
        }
        if ident.len() != n {
            return Err(LawViolation::BadIdentity {
                object: ident.len().min(n),
            });
        }
        for (x, &i) in ident.iter().enumerate() {
            if i >= m || src[i] != x || tgt[i] != x {
                return Err(LawViolation::BadIdentity { object: x });
            }
        }
        let mut incoming = vec![Vec::new(); n];
        let mut outgoing = vec![Vec::new(); n];
        let mut in_pos = vec![0; m];
        let mut homs = vec![Vec::new(); n * n];
        for f in 0..m {
            in_pos[f] = incoming[tgt[f]].len();
            incoming[tgt[f]].push(f);
            outgoing[src[f]].push(f);
            homs[src[f] * n + tgt[f]].push(f);
        }
        let mut post = Vec::with_capacity(m);
        for g in 0..m {
            let mut row = Vec::with_capacity(incoming[src[g]].len());
            for &f in &incoming[src[g]] {
                match compose(g, f) {
                    Some(h) if h >= m => return Err(LawViolation::UnknownArrow(h)),
                    Some(h) => row.push(h),
                    None => return Err(LawViolation::MissingComposite { g, f }),
                }
            }
            post.push(row);
        }
        Ok(FinCat {
            name,
            obj_names,
            mor_names,
            src,
            tgt,
            ident,
            incoming,
            outgoing,
            in_pos,
            homs,
            post,
            inverse: Vec::new(),
        })
    }

    /// Like [`FinCat::from_parts`] but skips the associativity sweep; for
    /// constructions whose composition is associative by construction
    /// (vertical composition, componentwise composition).
    pub(crate) fn from_parts_associative(
        name: impl Into<String>,
        obj_names: Vec<String>,
        arrows: Vec<(String, ObjId, ObjId)>,
        ident: Vec<MorId>,
        compose: impl FnMut(MorId, MorId) -> Option<MorId>,
    ) -> Result<FinCat, LawViolation> {
        let cat = Self::assemble(name.into(), obj_names, arrows, ident, compose)?;
        cat.check_units_and_endpoints()?;
        Ok(cat.with_inverses())
    }

    fn check_laws(&self) -> Result<(), LawViolation> {
        self.check_units_and_endpoints()?;
        self.check_associativity()
    }

    fn check_units_and_endpoints(&self) -> Result<(), LawViolation> {
        let m = self.num_morphisms();
        for f in 0..m {
            let left = self.ident[self.tgt[f]];
            let got = self.comp(left, f);
            if got != f {
                return Err(LawViolation::IdentityLaw {
                    identity: left,
                    f,
                    got,
                });
            }
            let right = self.ident[self.src[f]];
            let got = self.comp(f, right);
            if got != f {
                return Err(LawViolation::IdentityLaw {
                    identity: right,
                    f,
                    got,
                });
            }
        }
        for g in 0..m {
            for &f in &self.incoming[self.src[g]] {
                let h = self.post[g][self.in_pos[f]];
                if self.src[h] != self.src[f] || self.tgt[h] != self.tgt[g] {
                    return Err(LawViolation::CompositeEndpoints { g, f, h });
                }
            }
        }
        Ok(())
    }

    fn check_associativity(&self) -> Result<(), LawViolation> {
        for g in self.morphisms() {
            for &f in &self.incoming[self.src[g]] {
                let gf = self.comp(g, f);
                for &h in &self.outgoing[self.tgt[g]] {
                    if self.comp(h, gf) != self.comp(self.comp(h, g), f) {
                        return Err(LawViolation::Associativity { h, g, f });
                    }
                }
            }
        }
        Ok(())
    }

    fn with_inverses(mut self) -> Self {
        let m = self.num_morphisms();
        self.inverse = (0..m)
            .map(|f| {
                let (s, t) = (self.src[f], self.tgt[f]);
                self.hom(t, s)
                    .iter()
                    .copied()
                    .find(|&g| self.comp(g, f) == self.ident[s] && self.comp(f, g) == self.ident[t])
            })
            .collect();
        self
    }

    /// Re-check every law on the stored table.
    pub fn validate(&self) -> Result<(), LawViolation> {
        self.check_laws()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn num_objects(&self) -> usize {
        self.obj_names.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.src.len()
    }

    pub fn objects(&self) -> std::ops::Range<ObjId> {
        0..self.num_objects()
    }

    pub fn morphisms(&self) -> std::ops::Range<MorId> {
        0..self.num_morphisms()
    }

    pub fn object_name(&self, x: ObjId) -> &str {
        &self.obj_names[x]
    }

    pub fn morphism_name(&self, f: MorId) -> &str {
        &self.mor_names[f]
    }

    pub fn object_names(&self) -> &[String] {
        &self.obj_names
    }

    pub fn find_object(&self, name: &str) -> Option<ObjId> {
        self.obj_names.iter().position(|n| n == name)
    }

    pub fn find_morphism(&self, name: &str) -> Option<MorId> {
        self.mor_names.iter().position(|n| n == name)
    }

    pub fn src(&self, f: MorId) -> ObjId {
        self.src[f]
    }

    pub fn tgt(&self, f: MorId) -> ObjId {
        self.tgt[f]
    }

    pub fn identity(&self, x: ObjId) -> MorId {
        self.ident[x]
    }

    pub fn is_identity(&self, f: MorId) -> bool {
        self.ident[self.src[f]] == f
    }

    /// Arrows `x -> y`, in id order.
    pub fn hom(&self, x: ObjId, y: ObjId) -> &[MorId] {
        &self.homs[x * self.num_objects() + y]
    }

    /// Arrows with target `x`.
    pub fn incoming(&self, x: ObjId) -> &[MorId] {
        &self.incoming[x]
    }

    /// Arrows with source `x`.
    pub fn outgoing(&self, x: ObjId) -> &[MorId] {
        &self.outgoing[x]
    }

    /// `g ∘ f`, or `None` when `src(g) != tgt(f)`.
    pub fn compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        (self.src[g] == self.tgt[f]).then(|| self.post[g][self.in_pos[f]])
    }

    /// `g ∘ f` for a pair known to be composable.
    #[inline]
    pub fn comp(&self, g: MorId, f: MorId) -> MorId {
        debug_assert_eq!(self.src[g], self.tgt[f]);
        let h = self.post[g][self.in_pos[f]];
        debug_assert_ne!(h, NONE);
        h
    }

    pub fn inverse(&self, f: MorId) -> Option<MorId> {
        self.inverse[f]
    }

    pub fn is_iso(&self, f: MorId) -> bool {
        self.inverse[f].is_some()
    }

    /// Isomorphisms `x -> y`.
    pub fn isos(&self, x: ObjId, y: ObjId) -> impl Iterator<Item = MorId> + '_ {
        self.hom(x, y).iter().copied().filter(|&f| self.is_iso(f))
    }

    /// True when some non-identity arrow is invertible.
    pub fn has_nontrivial_isos(&self) -> bool {
        self.morphisms()
            .any(|f| !self.is_identity(f) && self.is_iso(f))
    }

    pub fn to_raw(&self) -> RawCat {
        let mut composites = BTreeMap::new();
        for g in self.morphisms() {
            for &f in &self.incoming[self.src[g]] {
                composites.insert((g, f), self.comp(g, f));
            }
        }
        RawCat {
            name: self.name.clone(),
            objects: self.obj_names.clone(),
            arrows: self
                .morphisms()
                .map(|f| (self.mor_names[f].clone(), self.src[f], self.tgt[f]))
                .collect(),
            identities: self.ident.clone(),
            composites,
        }
    }

    /// The discrete category on the given object names.
    pub fn discrete(name: impl Into<String>, objects: Vec<String>) -> FinCat {
        let arrows = objects
            .iter()
            .enumerate()
            .map(|(i, o)| (format!("id_{o}"), i, i))
            .collect();
        let ident = (0..objects.len()).collect();
        FinCat::from_parts(name, objects, arrows, ident, |g, _| Some(g))
            .expect("discrete category is valid")
    }

    /// The chaotic (indiscrete) category: exactly one arrow between any two objects.
    pub fn chaotic(name: impl Into<String>, objects: Vec<String>) -> FinCat {
        let n = objects.len();
        let mut arrows = Vec::with_capacity(n * n);
        for s in 0..n {
            for t in 0..n {
                let label = if s == t {
                    format!("id_{}", objects[s])
                } else {
                    format!("{}>{}", objects[s], objects[t])
                };
                arrows.push((label, s, t));
            }
        }
        let ident = (0..n).map(|x| x * n + x).collect();
        FinCat::from_parts(name, objects, arrows, ident, |g, f| {
            let s = f / n;
            let t = g % n;
            Some(s * n + t)
        })
        .expect("chaotic category is valid")
    }

    /// The one-object category of the cyclic group of the given order.
    pub fn cyclic_group(order: usize) -> FinCat {
        assert!(order > 0);
        let arrows = (0..order)
            .map(|k| {
                let label = if k == 0 {
                    "id_*".to_string()
                } else {
                    format!("r{k}")
                };
                (label, 0, 0)
            })
            .collect();
        FinCat::from_parts(
            format!("C{order}"),
            vec!["*".into()],
            arrows,
            vec![0],
            |g, f| Some((g + f) % order),
        )
        .expect("cyclic group is valid")
    }

    /// The one-object category with a single non-identity idempotent.
    pub fn idempotent_monoid() -> FinCat {
        FinCat::from_parts(
            "Idem",
            vec!["*".into()],
            vec![("id_*".into(), 0, 0), ("e".into(), 0, 0)],
            vec![0],
            |g, f| Some(g.max(f)),
        )
        .expect("idempotent monoid is valid")
    }

    /// The opposite category, with the same object and arrow ids.
    pub fn opposite(&self) -> FinCat {
        let arrows = self
            .morphisms()
            .map(|f| (self.mor_names[f].clone(), self.tgt[f], self.src[f]))
            .collect();
        FinCat::from_parts_associative(
            format!("{}^op", self.name),
            self.obj_names.clone(),
            arrows,
            self.ident.clone(),
            |g, f| self.compose(f, g),
        )
        .expect("opposite of a category is a category")
    }

    /// The skeletal category of finite sets `{0, .., n-1}` for `n <= max`
    /// and all functions between them. Arrow names list the images.
    pub fn finite_sets(max: usize) -> FinCat {
        let mut arrows = Vec::new();
        let mut funcs: Vec<Vec<usize>> = Vec::new();
        let mut index = std::collections::HashMap::new();
        for n in 0..=max {
            for m in 0..=max {
                let count = m.pow(n as u32);
                for code in 0..count {
                    let mut f = Vec::with_capacity(n);
                    let mut c = code;
                    for _ in 0..n {
                        f.push(c % m);
                        c /= m;
                    }
                    let name = format!(
                        "[{}]:{n}>{m}",
                        f.iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    );
                    index.insert((n, m, f.clone()), arrows.len());
                    arrows.push((name, n, m));
                    funcs.push(f);
                }
            }
        }
        let ident = (0..=max)
            .map(|n| index[&(n, n, (0..n).collect::<Vec<_>>())])
            .collect();
        let objects = (0..=max).map(|n| n.to_string()).collect();
        let ends = arrows.clone();
        FinCat::from_parts_associative(format!("Set<={max}"), objects, arrows, ident, |g, f| {
            let (n, m) = (ends[f].1, ends[g].2);
            let h: Vec<usize> = funcs[f].iter().map(|&x| funcs[g][x]).collect();
            index.get(&(n, m, h)).copied()
        })
        .expect("finite sets form a category")
    }

    /// True when this category is chaotic: every hom-set has exactly one element.
    pub fn is_chaotic(&self) -> bool {
        self.homs.iter().all(|h| h.len() == 1)
    }

    pub fn is_discrete(&self) -> bool {
        self.morphisms().all(|f| self.is_identity(f))
    }
}

/// An unvalidated category table, as produced by parsers or by hand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawCat {
    pub name: String,
    pub objects: Vec<String>,
    pub arrows: Vec<(String, ObjId, ObjId)>,
    pub identities: Vec<MorId>,
    /// `(g, f) -> g ∘ f`.
    #[serde(with = "crate::dump::composite_list")]
    pub composites: BTreeMap<(MorId, MorId), MorId>,
}

impl RawCat {
    /// Confirm every category law, or return the first violation.
    pub fn validate(&self) -> Result<(), LawViolation> {
        self.clone().into_cat().map(|_| ())
    }

    pub fn into_cat(self) -> Result<FinCat, LawViolation> {
        let m = self.arrows.len();
        for (&(g, f), &h) in &self.composites {
            if g >= m {
                return Err(LawViolation::UnknownArrow(g));
            }
            if f >= m {
                return Err(LawViolation::UnknownArrow(f));
            }
            if h >= m {
                return Err(LawViolation::UnknownArrow(h));
            }
            let (_, gs, _) = self.arrows[g];
            let (_, _, ft) = self.arrows[f];
            if gs != ft {
                return Err(LawViolation::SpuriousComposite { g, f });
            }
        }
        let composites = self.composites;
        FinCat::from_parts(
            self.name,
            self.objects,
            self.arrows,
            self.identities,
            |g, f| composites.get(&(g, f)).copied(),
        )
    }
}

/// The small categories used throughout: 0, 1, 2, the arrow, the parallel
/// pair and the free-living isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NamedCat {
    Zero,
    One,
    TwoDiscrete,
    Arrow,
    ParallelPair,
    FreeIso,
}

impl NamedCat {
    pub const ALL: [NamedCat; 6] = [
        NamedCat::Zero,
        NamedCat::One,
        NamedCat::TwoDiscrete,
        NamedCat::Arrow,
        NamedCat::ParallelPair,
        NamedCat::FreeIso,
    ];

    pub fn build(self) -> FinCat {
        let ids2 = |a: &str, b: &str| vec![(format!("id_{a}"), 0, 0), (format!("id_{b}"), 1, 1)];
        match self {
            NamedCat::Zero => FinCat::from_parts("0", vec![], vec![], vec![], |_, _| None)
                .expect("empty category"),
            NamedCat::One => FinCat::discrete("1", vec!["*".into()]),
            NamedCat::TwoDiscrete => FinCat::discrete("2", vec!["x".into(), "y".into()]),
            NamedCat::Arrow => {
                let mut arrows = ids2("0", "1");
                arrows.push(("f".into(), 0, 1));
                FinCat::from_parts(
                    "Arrow",
                    vec!["0".into(), "1".into()],
                    arrows,
                    vec![0, 1],
                    |g, f| Some(if g <= 1 { f } else { g }),
                )
                .expect("arrow category")
            }
            NamedCat::ParallelPair => {
                let mut arrows = ids2("0", "1");
                arrows.push(("u".into(), 0, 1));
                arrows.push(("v".into(), 0, 1));
                FinCat::from_parts(
                    "ParallelPair",
                    vec!["0".into(), "1".into()],
                    arrows,
                    vec![0, 1],
                    |g, f| Some(if g <= 1 { f } else { g }),
                )
                .expect("parallel pair")
            }
            NamedCat::FreeIso => {
                let mut arrows = ids2("0", "1");
                arrows.push(("u".into(), 0, 1));
                arrows.push(("v".into(), 1, 0));
                FinCat::from_parts(
                    "Iso",
                    vec!["0".into(), "1".into()],
                    arrows,
                    vec![0, 1],
                    |g, f| {
                        Some(match (g, f) {
                            (0 | 1, f) => f,
                            (g, 0 | 1) => g,
                            (2, 3) => 1,
                            (3, 2) => 0,
                            _ => return None,
                        })
                    },
                )
                .expect("free-living isomorphism")
            }
        }
    }

    pub fn arc(self) -> Arc<FinCat> {
        Arc::new(self.build())
    }
}

/// The named category for a tag.
pub fn named(tag: NamedCat) -> FinCat {
    tag.build()
}

/// A functor between finite categories, stored as two lookup tables.
#[derive(Clone)]
pub struct FinFunctor {
    dom: Arc<FinCat>,
    cod: Arc<FinCat>,
    obj: Vec<ObjId>,
    mor: Vec<MorId>,
}

impl PartialEq for FinFunctor {
    fn eq(&self, other: &Self) -> bool {
        self.obj == other.obj
            && self.mor == other.mor
            && same_cat(&self.dom, &other.dom)
            && same_cat(&self.cod, &other.cod)
    }
}

impl Eq for FinFunctor {}

impl fmt::Debug for FinFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FinFunctor({} -> {}, obj {:?}, mor {:?})",
            self.dom.name(),
            self.cod.name(),
            self.obj,
            self.mor
        )
    }
}

/// Table equality with a pointer fast path.
pub fn same_cat(a: &Arc<FinCat>, b: &Arc<FinCat>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl FinFunctor {
    /// Build and check functoriality exhaustively.
    pub fn new(
        dom: Arc<FinCat>,
        cod: Arc<FinCat>,
        obj: Vec<ObjId>,
        mor: Vec<MorId>,
    ) -> Result<FinFunctor, FunctorError> {
        let f = FinFunctor { dom, cod, obj, mor };
        f.validate()?;
        Ok(f)
    }

    pub(crate) fn new_unchecked(
        dom: Arc<FinCat>,
        cod: Arc<FinCat>,
        obj: Vec<ObjId>,
        mor: Vec<MorId>,
    ) -> FinFunctor {
        let f = FinFunctor { dom, cod, obj, mor };
        debug_assert_eq!(f.validate(), Ok(()));
        f
    }

    pub fn validate(&self) -> Result<(), FunctorError> {
        let (a, b) = (&*self.dom, &*self.cod);
        if self.obj.len() != a.num_objects() {
            return Err(FunctorError::Length {
                expected: a.num_objects(),
                got: self.obj.len(),
            });
        }
        if self.mor.len() != a.num_morphisms() {
            return Err(FunctorError::Length {
                expected: a.num_morphisms(),
                got: self.mor.len(),
            });
        }
        if let Some(&o) = self.obj.iter().find(|&&o| o >= b.num_objects()) {
            return Err(FunctorError::OutOfRange(o));
        }
        if let Some(&m) = self.mor.iter().find(|&&m| m >= b.num_morphisms()) {
            return Err(FunctorError::OutOfRange(m));
        }
        for f in a.morphisms() {
            let image = self.mor[f];
            if b.src(image) != self.obj[a.src(f)] || b.tgt(image) != self.obj[a.tgt(f)] {
                return Err(FunctorError::Endpoints(f));
            }
        }
        for x in a.objects() {
            if self.mor[a.identity(x)] != b.identity(self.obj[x]) {
                return Err(FunctorError::Identity(x));
            }
        }
        for g in a.morphisms() {
            for &f in a.incoming(a.src(g)) {
                if self.mor[a.comp(g, f)] != b.comp(self.mor[g], self.mor[f]) {
                    return Err(FunctorError::Composition { g, f });
                }
            }
        }
        Ok(())
    }

    pub fn identity(cat: &Arc<FinCat>) -> FinFunctor {
        FinFunctor {
            dom: cat.clone(),
            cod: cat.clone(),
            obj: cat.objects().collect(),
            mor: cat.morphisms().collect(),
        }
    }

    /// The constant functor at an object of the codomain.
    pub fn constant(dom: &Arc<FinCat>, cod: &Arc<FinCat>, at: ObjId) -> FinFunctor {
        FinFunctor {
            dom: dom.clone(),
            cod: cod.clone(),
            obj: vec![at; dom.num_objects()],
            mor: vec![cod.identity(at); dom.num_morphisms()],
        }
    }

    /// The unique functor out of the empty category.
    pub fn initial(cod: &Arc<FinCat>) -> FinFunctor {
        FinFunctor {
            dom: NamedCat::Zero.arc(),
            cod: cod.clone(),
            obj: vec![],
            mor: vec![],
        }
    }

    /// The unique functor to the one-object category `one`.
    pub fn terminal(dom: &Arc<FinCat>, one: &Arc<FinCat>) -> FinFunctor {
        assert_eq!(one.num_morphisms(), 1, "target must be terminal");
        FinFunctor::constant(dom, one, 0)
    }

    /// The functor `One -> cod` picking an object.
    pub fn point(cod: &Arc<FinCat>, at: ObjId) -> FinFunctor {
        FinFunctor::constant(&NamedCat::One.arc(), cod, at)
    }

    pub fn domain(&self) -> &Arc<FinCat> {
        &self.dom
    }

    pub fn codomain(&self) -> &Arc<FinCat> {
        &self.cod
    }

    pub fn on_object(&self, x: ObjId) -> ObjId {
        self.obj[x]
    }

    pub fn on_morphism(&self, f: MorId) -> MorId {
        self.mor[f]
    }

    pub fn object_map(&self) -> &[ObjId] {
        &self.obj
    }

    pub fn morphism_map(&self) -> &[MorId] {
        &self.mor
    }

    pub fn is_identity(&self) -> bool {
        same_cat(&self.dom, &self.cod)
            && self.obj.iter().enumerate().all(|(i, &o)| i == o)
            && self.mor.iter().enumerate().all(|(i, &m)| i == m)
    }

    pub fn is_injective_on_objects(&self) -> bool {
        let mut seen = vec![false; self.cod.num_objects()];
        self.obj
            .iter()
            .all(|&o| !std::mem::replace(&mut seen[o], true))
    }

    /// Replace the codomain by a table-equal category (for example one
    /// obtained by re-parsing).
    pub fn with_codomain(mut self, cod: Arc<FinCat>) -> Result<FinFunctor> {
        if !same_cat(&self.cod, &cod) {
            return Err(Error::shape("replacement codomain differs"));
        }
        self.cod = cod;
        Ok(self)
    }

    pub fn with_domain(mut self, dom: Arc<FinCat>) -> Result<FinFunctor> {
        if !same_cat(&self.dom, &dom) {
            return Err(Error::shape("replacement domain differs"));
        }
        self.dom = dom;
        Ok(self)
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &FinFunctor) -> Result<FinFunctor> {
        compose_functors(self, f)
    }
}

/// The composite `g ∘ f`; requires `codomain(f) = domain(g)`.
pub fn compose_functors(g: &FinFunctor, f: &FinFunctor) -> Result<FinFunctor> {
    if !same_cat(&f.cod, &g.dom) {
        return Err(Error::shape(format!(
            "cannot compose {} -> {} after {} -> {}",
            g.dom.name(),
            g.cod.name(),
            f.dom.name(),
            f.cod.name()
        )));
    }
    let h = FinFunctor {
        dom: f.dom.clone(),
        cod: g.cod.clone(),
        obj: f.obj.iter().map(|&x| g.obj[x]).collect(),
        mor: f.mor.iter().map(|&m| g.mor[m]).collect(),
    };
    h.validate()?;
    Ok(h)
}

/// Which side a functor is whiskered on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    /// `H ∘ α`: postcompose with a functor out of the common codomain.
    Post,
    /// `α ∘ H`: precompose with a functor into the common domain.
    Pre,
}

/// A natural transformation between parallel functors.
#[derive(Clone, PartialEq, Eq)]
pub struct NatTransform {
    source: FinFunctor,
    target: FinFunctor,
    components: Vec<MorId>,
}

impl fmt::Debug for NatTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NatTransform({:?})", self.components)
    }
}

impl NatTransform {
    pub fn new(
        source: FinFunctor,
        target: FinFunctor,
        components: Vec<MorId>,
    ) -> Result<NatTransform> {
        if !same_cat(&source.dom, &target.dom) || !same_cat(&source.cod, &target.cod) {
            return Err(Error::shape("transformation between non-parallel functors"));
        }
        let t = NatTransform {
            source,
            target,
            components,
        };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn new_unchecked(
        source: FinFunctor,
        target: FinFunctor,
        components: Vec<MorId>,
    ) -> NatTransform {
        let t = NatTransform {
            source,
            target,
            components,
        };
        debug_assert_eq!(t.validate(), Ok(()));
        t
    }

    pub fn validate(&self) -> Result<(), FunctorError> {
        let (a, b) = (&*self.source.dom, &*self.source.cod);
        if self.components.len() != a.num_objects() {
            return Err(FunctorError::Length {
                expected: a.num_objects(),
                got: self.components.len(),
            });
        }
        for x in a.objects() {
            let c = self.components[x];
            if c >= b.num_morphisms()
                || b.src(c) != self.source.obj[x]
                || b.tgt(c) != self.target.obj[x]
            {
                return Err(FunctorError::Component(x));
            }
        }
        for f in a.morphisms() {
            let lhs = b.comp(self.target.mor[f], self.components[a.src(f)]);
            let rhs = b.comp(self.components[a.tgt(f)], self.source.mor[f]);
            if lhs != rhs {
                return Err(FunctorError::Naturality(f));
            }
        }
        Ok(())
    }

    pub fn identity(f: &FinFunctor) -> NatTransform {
        let comps = f.obj.iter().map(|&x| f.cod.identity(x)).collect();
        NatTransform {
            source: f.clone(),
            target: f.clone(),
            components: comps,
        }
    }

    pub fn source(&self) -> &FinFunctor {
        &self.source
    }

    pub fn target(&self) -> &FinFunctor {
        &self.target
    }

    pub fn components(&self) -> &[MorId] {
        &self.components
    }

    pub fn component(&self, x: ObjId) -> MorId {
        self.components[x]
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
            && self
                .components
                .iter()
                .all(|&c| self.source.cod.is_identity(c))
    }

    /// True iff every component is an isomorphism.
    pub fn is_invertible(&self) -> bool {
        self.components.iter().all(|&c| self.source.cod.is_iso(c))
    }

    pub fn inverse(&self) -> Option<NatTransform> {
        let comps = self
            .components
            .iter()
            .map(|&c| self.source.cod.inverse(c))
            .collect::<Option<Vec<_>>>()?;
        Some(NatTransform::new_unchecked(
            self.target.clone(),
            self.source.clone(),
            comps,
        ))
    }
}

/// `β · α`, componentwise.
pub fn vertical_compose(beta: &NatTransform, alpha: &NatTransform) -> Result<NatTransform> {
    if alpha.target != beta.source {
        return Err(Error::shape(
            "vertical composition of non-matching transformations",
        ));
    }
    let cat = &alpha.source.cod;
    let comps = alpha
        .components
        .iter()
        .zip(&beta.components)
        .map(|(&a, &b)| cat.comp(b, a))
        .collect();
    Ok(NatTransform::new_unchecked(
        alpha.source.clone(),
        beta.target.clone(),
        comps,
    ))
}

/// Whisker a transformation by a functor on the given side.
pub fn whisker(functor: &FinFunctor, alpha: &NatTransform, side: Side) -> Result<NatTransform> {
    match side {
        Side::Post => {
            let source = compose_functors(functor, &alpha.source)?;
            let target = compose_functors(functor, &alpha.target)?;
            let comps = alpha.components.iter().map(|&c| functor.mor[c]).collect();
            Ok(NatTransform::new_unchecked(source, target, comps))
        }
        Side::Pre => {
            let source = compose_functors(&alpha.source, functor)?;
            let target = compose_functors(&alpha.target, functor)?;
            let comps = functor.obj.iter().map(|&x| alpha.components[x]).collect();
            Ok(NatTransform::new_unchecked(source, target, comps))
        }
    }
}

/// Whether `alpha` is invertible.
pub fn is_invertible(alpha: &NatTransform) -> bool {
    alpha.is_invertible()
}

/// The generating cofibrations `0 -> 1`, `2 -> Arrow`, `ParallelPair -> Arrow`
/// followed by the generating trivial cofibration `1 -> Iso`.
pub fn generating_maps() -> Vec<FinFunctor> {
    let zero = NamedCat::Zero.arc();
    let one = NamedCat::One.arc();
    let two = NamedCat::TwoDiscrete.arc();
    let arrow = NamedCat::Arrow.arc();
    let pair = NamedCat::ParallelPair.arc();
    let iso = NamedCat::FreeIso.arc();
    vec![
        FinFunctor::new_unchecked(zero, one, vec![], vec![]),
        FinFunctor::new_unchecked(two, arrow.clone(), vec![0, 1], vec![0, 1]),
        FinFunctor::new_unchecked(pair, arrow, vec![0, 1], vec![0, 1, 2, 2]),
        FinFunctor::new_unchecked(NamedCat::One.arc(), iso, vec![0], vec![0]),
    ]
}

/// The three generating cofibrations.
pub fn generating_cofibrations() -> Vec<FinFunctor> {
    generating_maps().into_iter().take(3).collect()
}

/// The generating trivial cofibration `1 -> Iso` at object 0.
pub fn generating_trivial_cofibration() -> FinFunctor {
    generating_maps().pop().expect("four generators")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(tag: NamedCat) -> Arc<FinCat> {
        tag.arc()
    }

    #[test]
    fn named_sizes() {
        let sizes: Vec<_> = NamedCat::ALL
            .iter()
            .map(|t| {
                let c = t.build();
                (c.num_objects(), c.num_morphisms())
            })
            .collect();
        assert_eq!(sizes, vec![(0, 0), (1, 1), (2, 2), (2, 3), (2, 4), (2, 4)]);
    }

    #[test]
    fn free_iso_is_valid_and_chaotic() {
        let iso = NamedCat::FreeIso.build();
        assert!(iso.validate().is_ok());
        assert!(iso.is_chaotic());
        assert_eq!(iso.inverse(2), Some(3));
        assert!(iso.has_nontrivial_isos());
        assert!(!NamedCat::Arrow.build().has_nontrivial_isos());
    }

    #[test]
    fn corrupted_identity_law_is_reported() {
        let mut raw = NamedCat::Arrow.build().to_raw();
        raw.composites.insert((2, 0), 1);
        assert_eq!(
            raw.validate(),
            Err(LawViolation::IdentityLaw {
                identity: 0,
                f: 2,
                got: 1
            })
        );

        let mut raw = NamedCat::ParallelPair.build().to_raw();
        raw.composites.insert((2, 0), 3);
        assert_eq!(
            raw.validate(),
            Err(LawViolation::IdentityLaw {
                identity: 0,
                f: 2,
                got: 3
            })
        );
    }

    #[test]
    fn missing_and_spurious_composites() {
        let mut raw = NamedCat::Arrow.build().to_raw();
        raw.composites.remove(&(2, 0));
        assert_eq!(
            raw.validate(),
            Err(LawViolation::MissingComposite { g: 2, f: 0 })
        );

        let mut raw = NamedCat::Arrow.build().to_raw();
        raw.composites.insert((2, 2), 2);
        assert_eq!(
            raw.validate(),
            Err(LawViolation::SpuriousComposite { g: 2, f: 2 })
        );
    }

    #[test]
    fn associativity_failure_detected() {
        // One object, arrows id, a, b with a.a = b, a.b = a, b.a = a, b.b = b:
        // (a.a).a = b.a = a but a.(a.a) = a.b = a ... pick a broken table.
        let table = |g: usize, f: usize| -> usize {
            match (g, f) {
                (0, x) | (x, 0) => x,
                (1, 1) => 2,
                (1, 2) => 2,
                (2, 1) => 1,
                (2, 2) => 2,
                _ => unreachable!(),
            }
        };
        let r = FinCat::from_parts(
            "bad",
            vec!["*".into()],
            vec![("id".into(), 0, 0), ("a".into(), 0, 0), ("b".into(), 0, 0)],
            vec![0],
            |g, f| Some(table(g, f)),
        );
        assert!(matches!(r, Err(LawViolation::Associativity { .. })));
    }

    #[test]
    fn identity_functor_composition() {
        let a = arc(NamedCat::Arrow);
        let id = FinFunctor::identity(&a);
        assert_eq!(compose_functors(&id, &id).unwrap(), id);
    }

    #[test]
    fn constants_compose_to_constant() {
        let arrow = arc(NamedCat::Arrow);
        let one = arc(NamedCat::One);
        let iso = arc(NamedCat::FreeIso);
        let collapse = FinFunctor::terminal(&arrow, &one);
        let at0 = FinFunctor::constant(&one, &iso, 0);
        let h = compose_functors(&at0, &collapse).unwrap();
        assert_eq!(h, FinFunctor::constant(&arrow, &iso, 0));
    }

    #[test]
    fn domain_mismatch_rejected() {
        let arrow = arc(NamedCat::Arrow);
        let iso = arc(NamedCat::FreeIso);
        let f = FinFunctor::identity(&arrow);
        let g = FinFunctor::identity(&iso);
        assert!(matches!(compose_functors(&g, &f), Err(Error::Shape(_))));
    }

    #[test]
    fn transformations_between_points() {
        let iso = arc(NamedCat::FreeIso);
        let p0 = FinFunctor::point(&iso, 0);
        let p1 = FinFunctor::point(&iso, 1);
        let u = NatTransform::new(p0.clone(), p1.clone(), vec![2]).unwrap();
        assert!(u.is_invertible());
        let back = u.inverse().unwrap();
        assert!(vertical_compose(&back, &u).unwrap().is_identity());

        let arrow = arc(NamedCat::Arrow);
        let q0 = FinFunctor::point(&arrow, 0);
        let q1 = FinFunctor::point(&arrow, 1);
        let f = NatTransform::new(q0, q1, vec![2]).unwrap();
        assert!(!is_invertible(&f));
        assert!(is_invertible(&NatTransform::identity(&p0)));
    }

    #[test]
    fn whiskering_by_collapse() {
        let iso = arc(NamedCat::FreeIso);
        let one = arc(NamedCat::One);
        let p0 = FinFunctor::point(&iso, 0);
        let p1 = FinFunctor::point(&iso, 1);
        let u = NatTransform::new(p0, p1, vec![2]).unwrap();
        let collapse = FinFunctor::terminal(&iso, &one);
        let w = whisker(&collapse, &u, Side::Post).unwrap();
        assert!(w.is_identity());
        let pre = whisker(&FinFunctor::identity(&one), &u, Side::Pre).unwrap();
        assert_eq!(pre, u);
    }

    #[test]
    fn generators_shape() {
        let gens = generating_maps();
        assert_eq!(gens.len(), 4);
        assert!(gens[1].is_injective_on_objects());
        assert_eq!(gens[2].morphism_map()[2], gens[2].morphism_map()[3]);
        let one = arc(NamedCat::One);
        let back = FinFunctor::terminal(gens[3].codomain(), &one);
        assert!(compose_functors(&back, &gens[3]).unwrap().is_identity());
    }

    #[test]
    fn broken_functor_rejected() {
        let arrow = arc(NamedCat::Arrow);
        let pair = arc(NamedCat::ParallelPair);
        // identities must be preserved
        let r = FinFunctor::new(arrow.clone(), pair.clone(), vec![0, 1], vec![0, 0, 2]);
        assert!(matches!(
            r,
            Err(FunctorError::Endpoints(_)) | Err(FunctorError::Identity(_))
        ));
        let ok = FinFunctor::new(arrow, pair, vec![0, 1], vec![0, 1, 3]);
        assert!(ok.is_ok());
    }
}
