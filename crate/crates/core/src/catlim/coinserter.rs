//! Coinserters: freely adjoin a 2-cell `σ: pf ⇒ pg` to `B`.
//!
//! An arrow of the coinserter is a word `b_k σ_{a_k} ... σ_{a_1} b_0` with
//! `b_j` arrows of `B`, modulo the naturality relations
//! `σ_{a'} f(m) = g(m) σ_a` for `m: a -> a'`. Both sides have the same number
//! of `σ`s, so words are grouped by that count (their level) and each level
//! is a finite set quotiented by union-find.

use std::collections::HashMap;
use std::ops::ControlFlow;
use std::sync::Arc;

use crate::error::{Error, ResourceError, Result};
use crate::fincat::{
    compose_functors, whisker, FinCat, FinFunctor, MorId, NatTransform, ObjId, Side,
};
use crate::search::{FunctorSearch, SearchLimits, TransformSearch};
use crate::unionfind::UnionFind;

/// Cap on the number of raw words examined at one level.
const MAX_WORDS_PER_LEVEL: usize = 2_000_000;

/// `parts[k] σ_{sigmas[k-1]} ... σ_{sigmas[0]} parts[0]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    pub parts: Vec<MorId>,
    pub sigmas: Vec<ObjId>,
}

impl Word {
    pub fn level(&self) -> usize {
        self.sigmas.len()
    }
}

#[derive(Debug, Clone)]
pub struct Coinserter {
    pub cat: Arc<FinCat>,
    pub p: FinFunctor,
    /// The universal 2-cell `p∘f ⇒ p∘g`.
    pub cell: NatTransform,
    /// A representative word for each arrow of `cat`.
    pub words: Vec<Word>,
    index: HashMap<Word, MorId>,
}

impl Coinserter {
    /// The arrow a word denotes, if the word is well formed.
    pub fn class_of(&self, w: &Word) -> Option<MorId> {
        self.index.get(w).copied()
    }
}

#[derive(Debug, Clone)]
pub enum CoinserterOutcome {
    Finite(Box<Coinserter>),
    /// The budget ran out. `cyclic` records that the `σ`-chains can be
    /// extended forever, in which case the coinserter is certainly infinite.
    Diverged {
        frontier: usize,
        created: usize,
        cyclic: bool,
    },
}

impl CoinserterOutcome {
    pub fn finite(self) -> Option<Coinserter> {
        match self {
            CoinserterOutcome::Finite(c) => Some(*c),
            CoinserterOutcome::Diverged { .. } => None,
        }
    }
}

/// Whether `a -> a'` iff `hom_B(g a, f a')` is nonempty has a cycle.
fn sigma_graph_cyclic(f: &FinFunctor, g: &FinFunctor) -> bool {
    let a = f.domain();
    let b = f.codomain();
    let n = a.num_objects();
    let adj: Vec<Vec<ObjId>> = a
        .objects()
        .map(|x| {
            a.objects()
                .filter(|&y| !b.hom(g.on_object(x), f.on_object(y)).is_empty())
                .collect()
        })
        .collect();
    // 0 unvisited, 1 on stack, 2 done
    let mut state = vec![0u8; n];
    for start in 0..n {
        if state[start] != 0 {
            continue;
        }
        let mut stack = vec![(start, 0usize)];
        state[start] = 1;
        while let Some(&mut (x, ref mut next)) = stack.last_mut() {
            if *next < adj[x].len() {
                let y = adj[x][*next];
                *next += 1;
                match state[y] {
                    0 => {
                        state[y] = 1;
                        stack.push((y, 0));
                    }
                    1 => return true,
                    _ => {}
                }
            } else {
                state[x] = 2;
                stack.pop();
            }
        }
    }
    false
}

pub fn coinserter_bounded(f: &FinFunctor, g: &FinFunctor, bound: u64) -> Result<CoinserterOutcome> {
    if !crate::fincat::same_cat(f.domain(), g.domain())
        || !crate::fincat::same_cat(f.codomain(), g.codomain())
    {
        return Err(Error::shape("coinserter of non-parallel functors"));
    }
    let a = f.domain().clone();
    let b = f.codomain().clone();
    let cyclic = sigma_graph_cyclic(f, g);

    let word_src = |w: &Word| b.src(w.parts[0]);
    let word_tgt = |w: &Word| b.tgt(*w.parts.last().expect("nonempty"));

    let mut words: Vec<Word> = b
        .morphisms()
        .map(|m| Word {
            parts: vec![m],
            sigmas: vec![],
        })
        .collect();
    let mut labels: Vec<MorId> = b.morphisms().collect();
    let mut reps: Vec<Word> = words.clone();
    let mut level_start = 0;
    let mut created = 0usize;

    loop {
        let prev = level_start..words.len();
        level_start = words.len();
        for w in prev {
            let t = word_tgt(&words[w]);
            for x in a.objects() {
                if f.on_object(x) != t {
                    continue;
                }
                for &next in b.outgoing(g.on_object(x)) {
                    let mut nw = words[w].clone();
                    nw.sigmas.push(x);
                    nw.parts.push(next);
                    words.push(nw);
                }
            }
            if words.len() - level_start > MAX_WORDS_PER_LEVEL {
                return Err(ResourceError {
                    what: "coinserter words per level".into(),
                    limit: MAX_WORDS_PER_LEVEL as u64,
                }
                .into());
            }
        }
        let level = &words[level_start..];
        if level.is_empty() {
            break;
        }
        let local: HashMap<&Word, usize> = level.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut uf = UnionFind::new(level.len());
        for (i, w) in level.iter().enumerate() {
            for j in 0..w.level() {
                let part = w.parts[j];
                let s = b.src(part);
                for x in a.objects() {
                    for &m in a.hom(x, w.sigmas[j]) {
                        let fm = f.on_morphism(m);
                        for &c in b.hom(s, f.on_object(x)) {
                            if b.comp(fm, c) != part {
                                continue;
                            }
                            let mut moved = w.clone();
                            moved.sigmas[j] = x;
                            moved.parts[j] = c;
                            moved.parts[j + 1] = b.comp(w.parts[j + 1], g.on_morphism(m));
                            uf.union(i, local[&moved]);
                        }
                    }
                }
            }
        }
        let (local_labels, k) = uf.labels();
        let base = reps.len();
        let mut seen = vec![false; k];
        for (i, &l) in local_labels.iter().enumerate() {
            labels.push(base + l);
            if !seen[l] {
                seen[l] = true;
                reps.push(level[i].clone());
            }
        }
        created += k;
        if created as u64 > bound {
            return Ok(CoinserterOutcome::Diverged {
                frontier: k,
                created,
                cyclic,
            });
        }
    }

    let index: HashMap<Word, MorId> = words.iter().cloned().zip(labels.iter().copied()).collect();
    let render = |w: &Word| -> String {
        if w.level() == 0 {
            return b.morphism_name(w.parts[0]).to_string();
        }
        let mut out = Vec::new();
        for j in (0..w.parts.len()).rev() {
            if !b.is_identity(w.parts[j]) {
                out.push(b.morphism_name(w.parts[j]).to_string());
            }
            if j > 0 {
                out.push(format!("s_{}", a.object_name(w.sigmas[j - 1])));
            }
        }
        out.join(".")
    };
    let arrows = reps
        .iter()
        .map(|w| (render(w), word_src(w), word_tgt(w)))
        .collect();
    let ident = b.objects().map(|x| b.identity(x)).collect();
    let cat = FinCat::from_parts_associative(
        format!("Coins({})", b.name()),
        b.object_names().to_vec(),
        arrows,
        ident,
        |h, k| {
            let (w2, w1) = (&reps[h], &reps[k]);
            let mut parts = w1.parts.clone();
            let last = parts.pop().expect("nonempty");
            parts.push(b.compose(w2.parts[0], last)?);
            parts.extend_from_slice(&w2.parts[1..]);
            let mut sigmas = w1.sigmas.clone();
            sigmas.extend_from_slice(&w2.sigmas);
            index.get(&Word { parts, sigmas }).copied()
        },
    )
    .expect("coinserter presentation closes to a category");
    let cat = Arc::new(cat);
    let p = FinFunctor::new_unchecked(
        b.clone(),
        cat.clone(),
        b.objects().collect(),
        b.morphisms().collect(),
    );
    let pf = compose_functors(&p, f)?;
    let pg = compose_functors(&p, g)?;
    let comps = a
        .objects()
        .map(|x| {
            index[&Word {
                parts: vec![b.identity(f.on_object(x)), b.identity(g.on_object(x))],
                sigmas: vec![x],
            }]
        })
        .collect();
    let cell = NatTransform::new(pf, pg, comps)?;
    Ok(CoinserterOutcome::Finite(Box::new(Coinserter {
        cat,
        p,
        cell,
        words: reps,
        index,
    })))
}

impl Coinserter {
    /// `c ↦ (c∘p, c·σ)` is a bijection from functors out of the coinserter
    /// onto pairs `(q: B -> X, τ: qf ⇒ qg)`.
    pub fn verify_universal(
        &self,
        f: &FinFunctor,
        g: &FinFunctor,
        probe: &Arc<FinCat>,
        limits: SearchLimits,
    ) -> Result<bool> {
        let mut images = std::collections::HashSet::new();
        let outs = FunctorSearch::new(&self.cat, probe).limits(limits).all()?;
        for c in &outs {
            let q = compose_functors(c, &self.p)?;
            let tau = whisker(c, &self.cell, Side::Post)?;
            images.insert((q.morphism_map().to_vec(), tau.components().to_vec()));
        }
        if images.len() != outs.len() {
            return Ok(false);
        }
        let mut pairs = 0usize;
        let mut ok = true;
        for q in FunctorSearch::new(f.codomain(), probe)
            .limits(limits)
            .all()?
        {
            let qf = compose_functors(&q, f)?;
            let qg = compose_functors(&q, g)?;
            TransformSearch::new(&qf, &qg)
                .limits(limits)
                .for_each(|comps| {
                    pairs += 1;
                    ok &= images.contains(&(q.morphism_map().to_vec(), comps.to_vec()));
                    ControlFlow::Continue(())
                })?;
        }
        Ok(ok && pairs == outs.len())
    }
}
