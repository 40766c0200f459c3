//! Constructive linkage: path surgeries on fixed path systems.
//!
//! A [`TemplateContext`] holds internally disjoint minimal `(s1, t1)`-paths
//! `P_j` in `D - {s2, t2}` and `(s2, t2)`-paths `Q_i` in `D - {s1, t1}`,
//! together with the first and last vertex `z_i`, `w_i` of each `Q_i` in
//! `S = ∪ V(P_j) \ {s1, t1}`. Each template splices segments of these paths
//! with single arcs into a candidate walk, shortcuts any cycles, and pairs
//! the result with the paths collected so far. A template may fail to fire;
//! it can never emit an invalid pair because every pair goes through
//! [`LinkageWitness::new`].
//!
//! [`link_with_certificate`] retries with rotated flow decompositions and
//! falls back to the exact solver when no template fires.

mod scsplit;
mod smp;
mod split;

use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use crate::classes::{is_semicomplete_multipartite, is_semicomplete_split, split_partition};
use crate::connectivity::{disjoint_path_system_with, is_k_strong, is_minimal, local_connectivity_without, PathSystem};
use crate::error::{Error, Result};
use crate::graph::{Digraph, VertexId};
use crate::linkage::{two_disjoint_paths, LinkageOutcome, LinkageQuery, LinkageWitness, Provenance};
use crate::path::Path;

pub use scsplit::{apply_scsplit_templates, claim_prefix_templates, scsplit_case, ScSplitCase};
pub use smp::apply_smp_shortcut;
pub use split::apply_split_templates;

/// Number of rotated decompositions tried before the exact fallback.
pub const ROTATIONS: usize = 8;

/// Which theorem's construction to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Split digraph, three `(s_i, t_i)`- and four `(s_{3-i}, t_{3-i})`-paths.
    Split,
    /// Semicomplete split digraph, three paths on each side.
    ScSplit,
    /// 6-strong semicomplete multipartite digraph.
    Smp,
    /// Semicomplete split digraph with only three and two paths. Nothing is
    /// promised; used to look for counterexamples.
    ScSplitWeak,
}

impl Mode {
    /// `(paths_p, paths_q)` sizes.
    pub fn system_sizes(self) -> (usize, usize) {
        match self {
            Mode::Split => (3, 4),
            Mode::ScSplit => (3, 3),
            Mode::Smp => (4, 1),
            Mode::ScSplitWeak => (3, 2),
        }
    }
}

/// Path systems and anchors for one query.
///
/// When `swapped` is set the hypotheses only held with the two terminal pairs
/// exchanged; `query` is then the swapped query and witnesses are mapped back
/// by [`link_with_certificate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemplateContext {
    pub mode: Mode,
    pub query: LinkageQuery,
    pub swapped: bool,
    pub paths_p: PathSystem,
    pub paths_q: PathSystem,
    /// First vertex of `Q_i` in `S`, if any.
    pub z_anchors: Vec<Option<VertexId>>,
    /// Last vertex of `Q_i` in `S`, if any.
    pub w_anchors: Vec<Option<VertexId>>,
    /// Successor of `s1` on each `P_j`.
    pub succ_s: Vec<VertexId>,
    /// Predecessor of `t1` on each `P_j`.
    pub pred_t: Vec<VertexId>,
    pub rotation: usize,
    s_set: FixedBitSet,
}

impl TemplateContext {
    pub fn p(&self, j: usize) -> &Path {
        &self.paths_p.paths[j]
    }

    pub fn q(&self, i: usize) -> &Path {
        &self.paths_q.paths[i]
    }

    pub fn in_s(&self, x: VertexId) -> bool {
        self.s_set.contains(x.index())
    }

    /// `(j, position)` of `x` on the unique `P_j` through it.
    pub fn locate(&self, x: VertexId) -> Option<(usize, usize)> {
        if !self.in_s(x) {
            return None;
        }
        self.paths_p.paths.iter().enumerate().find_map(|(j, p)| p.position(x).map(|pos| (j, pos)))
    }

    /// Index of the `Q_i` through an interior vertex `x`.
    pub fn q_owner(&self, x: VertexId) -> Option<usize> {
        self.paths_q.paths.iter().position(|q| q.interior().contains(&x))
    }

    /// The same systems read backwards, as a context of `rd = d.reverse()`
    /// for the query `(t1, s1, t2, s2)`.
    pub fn reversed(&self, rd: &Digraph) -> TemplateContext {
        let flip = |sys: &PathSystem| PathSystem {
            source: sys.sink,
            sink: sys.source,
            paths: sys.paths.iter().map(Path::reversed).collect(),
        };
        anchored(
            rd,
            self.mode,
            self.query.reversed(),
            self.swapped,
            flip(&self.paths_p),
            flip(&self.paths_q),
            self.rotation,
        )
    }

    /// Check the systems, minimality and anchor definitions against `d`.
    pub fn check_invariants(&self, d: &Digraph) -> Result<()> {
        let q = &self.query;
        self.paths_p.validate(d)?;
        self.paths_q.validate(d)?;
        if self.paths_p.source != q.s1
            || self.paths_p.sink != q.t1
            || self.paths_q.source != q.s2
            || self.paths_q.sink != q.t2
        {
            return Err(Error::domain("path systems do not match the query terminals"));
        }
        let (np, nq) = self.mode.system_sizes();
        if self.paths_p.len() != np || self.paths_q.len() != nq {
            return Err(Error::domain("path systems have the wrong size"));
        }
        for p in &self.paths_p.paths {
            if p.contains(q.s2) || p.contains(q.t2) || !is_minimal(d, p) {
                return Err(Error::domain("a P path meets s2/t2 or is not minimal"));
            }
        }
        for p in &self.paths_q.paths {
            if p.contains(q.s1) || p.contains(q.t1) || !is_minimal(d, p) {
                return Err(Error::domain("a Q path meets s1/t1 or is not minimal"));
            }
        }
        for (i, qi) in self.paths_q.paths.iter().enumerate() {
            let hits: Vec<VertexId> = qi.vertices().iter().copied().filter(|&x| self.in_s(x)).collect();
            if self.z_anchors[i] != hits.first().copied() || self.w_anchors[i] != hits.last().copied() {
                return Err(Error::domain(format!("anchors of Q_{i} are not its first/last vertices in S")));
            }
        }
        for (j, p) in self.paths_p.paths.iter().enumerate() {
            if p.successor(q.s1) != Some(self.succ_s[j]) || p.predecessor(q.t1) != Some(self.pred_t[j]) {
                return Err(Error::domain(format!("successor/predecessor of P_{j} are wrong")));
            }
        }
        Ok(())
    }
}

fn require_class(d: &Digraph, mode: Mode) -> Result<()> {
    let ok = match mode {
        Mode::Split => split_partition(d).is_some(),
        Mode::ScSplit | Mode::ScSplitWeak => is_semicomplete_split(d, None)?,
        Mode::Smp => is_semicomplete_multipartite(d).is_some(),
    };
    if ok {
        Ok(())
    } else {
        let class = match mode {
            Mode::Split => "split",
            Mode::ScSplit | Mode::ScSplitWeak => "semicomplete split",
            Mode::Smp => "semicomplete multipartite",
        };
        Err(Error::domain(format!("digraph is not {class}")))
    }
}

/// Orientation in which the local-connectivity premise of `mode` holds:
/// `Some(false)` as given, `Some(true)` with the pairs exchanged.
pub fn premise_orientation(d: &Digraph, q: &LinkageQuery, mode: Mode) -> Result<Option<bool>> {
    q.check(d)?;
    if mode == Mode::Smp {
        return Ok(is_k_strong(d, 6).then_some(false));
    }
    let k1 = local_connectivity_without(d, q.s1, q.t1, &[q.s2, q.t2])?;
    let k2 = local_connectivity_without(d, q.s2, q.t2, &[q.s1, q.t1])?;
    let (np, nq) = mode.system_sizes();
    Ok(if k1 >= np && k2 >= nq {
        Some(false)
    } else if mode != Mode::ScSplit && k2 >= np && k1 >= nq {
        Some(true)
    } else {
        None
    })
}

/// Class check, premise check, and path systems for `rotation`.
pub fn build_context(d: &Digraph, q: &LinkageQuery, mode: Mode) -> Result<TemplateContext> {
    build_context_rotated(d, q, mode, 0)
}

pub fn build_context_rotated(d: &Digraph, q: &LinkageQuery, mode: Mode, rotation: usize) -> Result<TemplateContext> {
    q.check(d)?;
    require_class(d, mode)?;
    let swapped = match premise_orientation(d, q, mode)? {
        Some(s) => s,
        None if mode == Mode::Smp => return Err(Error::Hypothesis("digraph is not 6-strong".into())),
        None => {
            let (np, nq) = mode.system_sizes();
            return Err(Error::Hypothesis(format!(
                "need {np} and {nq} internally disjoint paths for the two terminal pairs"
            )));
        }
    };
    let query = if swapped { q.swapped() } else { *q };
    Ok(context_for(d, query, swapped, mode, rotation).expect("premise checked above"))
}

impl TemplateContext {
    /// A context over caller-chosen path systems: `paths_p` runs from `s1`
    /// to `t1` in `D - {s2, t2}` and `paths_q` from `s2` to `t2` in
    /// `D - {s1, t1}`, each at least as large as `mode` requires. The
    /// premises of `mode` are not rechecked beyond the system sizes.
    pub fn from_systems(
        d: &Digraph,
        mode: Mode,
        query: LinkageQuery,
        paths_p: PathSystem,
        paths_q: PathSystem,
    ) -> Result<TemplateContext> {
        query.check(d)?;
        let (np, nq) = mode.system_sizes();
        for (sys, (s, t), avoid, need) in [
            (&paths_p, (query.s1, query.t1), [query.s2, query.t2], np),
            (&paths_q, (query.s2, query.t2), [query.s1, query.t1], nq),
        ] {
            if (sys.source, sys.sink) != (s, t) {
                return Err(Error::domain("path system has the wrong ends"));
            }
            if sys.len() < need {
                return Err(Error::domain(format!("need {need} paths, got {}", sys.len())));
            }
            sys.validate(d)?;
            if sys.paths.iter().any(|p| avoid.iter().any(|&x| p.contains(x))) {
                return Err(Error::domain("path system meets the other pair's terminals"));
            }
        }
        Ok(anchored(d, mode, query, false, paths_p, paths_q, 0))
    }
}

fn context_for(
    d: &Digraph,
    query: LinkageQuery,
    swapped: bool,
    mode: Mode,
    rotation: usize,
) -> Option<TemplateContext> {
    let (np, nq) = mode.system_sizes();
    let q = query;
    let paths_p = disjoint_path_system_with(d, q.s1, q.t1, np, &[q.s2, q.t2], rotation).ok()??;
    let paths_q = disjoint_path_system_with(d, q.s2, q.t2, nq, &[q.s1, q.t1], rotation).ok()??;
    Some(anchored(d, mode, query, swapped, paths_p, paths_q, rotation))
}

fn anchored(
    d: &Digraph,
    mode: Mode,
    query: LinkageQuery,
    swapped: bool,
    paths_p: PathSystem,
    paths_q: PathSystem,
    rotation: usize,
) -> TemplateContext {
    let s_set = paths_p.interior_set(d.order());
    let hits =
        |p: &Path| -> Vec<VertexId> { p.vertices().iter().copied().filter(|x| s_set.contains(x.index())).collect() };
    let z_anchors = paths_q.paths.iter().map(|p| hits(p).first().copied()).collect();
    let w_anchors = paths_q.paths.iter().map(|p| hits(p).last().copied()).collect();
    let succ_s = paths_p.paths.iter().map(|p| p.vertices()[1]).collect();
    let pred_t = paths_p.paths.iter().map(|p| p.vertices()[p.vertices().len() - 2]).collect();
    TemplateContext { mode, query, swapped, paths_p, paths_q, z_anchors, w_anchors, succ_s, pred_t, rotation, s_set }
}

/// `P[x, y]` as a slice, when `x` is not after `y` on `P`.
pub(crate) fn seg(p: &Path, x: VertexId, y: VertexId) -> Option<Vec<VertexId>> {
    let i = p.position(x)?;
    let j = p.position(y)?;
    (i <= j).then(|| p.vertices()[i..=j].to_vec())
}

/// Concatenate pieces; a piece starting where the previous one ended is
/// glued, otherwise an arc between them is implied.
pub(crate) fn join(pieces: &[Option<Vec<VertexId>>]) -> Option<Vec<VertexId>> {
    let mut out: Vec<VertexId> = Vec::new();
    for piece in pieces {
        let piece = piece.as_ref()?;
        let skip = usize::from(out.last().is_some() && out.last() == piece.first());
        out.extend_from_slice(&piece[skip..]);
    }
    Some(out)
}

pub(crate) fn one(x: VertexId) -> Option<Vec<VertexId>> {
    Some(vec![x])
}

/// Turn a walk into a path by cutting out every closed sub-walk. Returns
/// `None` when some step is not an arc.
pub(crate) fn walk_to_path(d: &Digraph, walk: &[VertexId]) -> Option<Path> {
    if walk.is_empty() || walk.windows(2).any(|w| !d.has_arc(w[0], w[1])) {
        return None;
    }
    let mut out: Vec<VertexId> = Vec::with_capacity(walk.len());
    for &x in walk {
        if let Some(i) = out.iter().position(|&y| y == x) {
            out.truncate(i + 1);
        } else {
            out.push(x);
        }
    }
    Path::new(d, out).ok()
}

/// Candidate pools and pairing for one engine run.
pub(crate) struct Engine<'a> {
    pub d: &'a Digraph,
    pub ctx: &'a TemplateContext,
    p_pool: Vec<Path>,
    q_pool: Vec<Path>,
    seen: HashSet<Vec<VertexId>>,
}

impl<'a> Engine<'a> {
    pub fn new(d: &'a Digraph, ctx: &'a TemplateContext) -> Self {
        Engine { d, ctx, p_pool: ctx.paths_p.paths.clone(), q_pool: ctx.paths_q.paths.clone(), seen: HashSet::new() }
    }

    fn witness(&self, p: &Path, q: &Path, id: &'static str) -> Option<LinkageWitness> {
        if !p.is_disjoint(q) {
            return None;
        }
        let prov = Provenance::Template { id, reversed: false };
        LinkageWitness::new(self.d, &self.ctx.query, p.clone(), q.clone(), prov).ok()
    }

    /// Pair every pooled `(s1, t1)`-path with every pooled `(s2, t2)`-path.
    pub fn pair_pools(&self, id: &'static str) -> Option<LinkageWitness> {
        for p in &self.p_pool {
            for q in &self.q_pool {
                if let Some(w) = self.witness(p, q, id) {
                    return Some(w);
                }
            }
        }
        None
    }

    /// Offer a candidate `(s1, t1)`-walk.
    pub fn p(&mut self, id: &'static str, walk: Option<Vec<VertexId>>) -> Option<LinkageWitness> {
        let path = self.admit(walk, self.ctx.query.s1, self.ctx.query.t1)?;
        let hit = self.q_pool.iter().find_map(|q| self.witness(&path, q, id));
        self.p_pool.push(path);
        hit
    }

    /// Offer a candidate `(s2, t2)`-walk.
    pub fn q(&mut self, id: &'static str, walk: Option<Vec<VertexId>>) -> Option<LinkageWitness> {
        let path = self.admit(walk, self.ctx.query.s2, self.ctx.query.t2)?;
        let hit = self.p_pool.iter().find_map(|p| self.witness(p, &path, id));
        self.q_pool.push(path);
        hit
    }

    fn admit(&mut self, walk: Option<Vec<VertexId>>, s: VertexId, t: VertexId) -> Option<Path> {
        let walk = walk?;
        if walk.first() != Some(&s) || walk.last() != Some(&t) {
            return None;
        }
        let path = walk_to_path(self.d, &walk)?;
        self.seen.insert(path.vertices().to_vec()).then_some(path)
    }
}

/// Return early from a template function when a candidate fires.
macro_rules! fire {
    ($e:expr) => {
        if let Some(w) = $e {
            return Some(w);
        }
    };
}
pub(crate) use fire;

/// Every `(s, t)`-path with at most `max_len` arcs avoiding `blocked`,
/// in lexicographic order of vertex ids.
pub(crate) fn short_paths(d: &Digraph, s: VertexId, t: VertexId, blocked: &[VertexId], max_len: usize) -> Vec<Path> {
    fn go(
        d: &Digraph,
        t: VertexId,
        max_len: usize,
        stack: &mut Vec<VertexId>,
        banned: &mut FixedBitSet,
        out: &mut Vec<Path>,
    ) {
        let cur = *stack.last().expect("stack starts with s");
        if cur == t {
            out.push(Path::from_trusted(stack.clone()));
            return;
        }
        if stack.len() > max_len {
            return;
        }
        for w in d.out_neighbors(cur) {
            if !banned.contains(w.index()) {
                banned.insert(w.index());
                stack.push(w);
                go(d, t, max_len, stack, banned, out);
                stack.pop();
                banned.set(w.index(), false);
            }
        }
    }
    let mut banned = FixedBitSet::with_capacity(d.order());
    for x in blocked {
        banned.insert(x.index());
    }
    banned.insert(s.index());
    let mut out = Vec::new();
    go(d, t, max_len, &mut vec![s], &mut banned, &mut out);
    out
}

/// The template engine for `ctx.mode`, in the context's orientation.
pub fn apply_templates(d: &Digraph, ctx: &TemplateContext) -> Result<Option<LinkageWitness>> {
    Ok(match ctx.mode {
        Mode::Split => apply_split_templates(d, ctx),
        Mode::ScSplit | Mode::ScSplitWeak => apply_scsplit_templates(d, ctx),
        Mode::Smp => apply_smp_shortcut(d, ctx)?,
    })
}

/// Try the rotated contexts in order; returns the witness in the orientation
/// of `q`.
pub fn link_by_templates(d: &Digraph, q: &LinkageQuery, mode: Mode) -> Result<Option<LinkageWitness>> {
    let first = build_context(d, q, mode)?;
    let mut tried: Vec<(Vec<Path>, Vec<Path>)> = Vec::new();
    for rotation in 0..ROTATIONS {
        let ctx = if rotation == 0 {
            first.clone()
        } else {
            match context_for(d, first.query, first.swapped, mode, rotation) {
                Some(c) => c,
                None => continue,
            }
        };
        let key = (ctx.paths_p.paths.clone(), ctx.paths_q.paths.clone());
        if tried.contains(&key) {
            continue;
        }
        tried.push(key);
        if let Some(w) = apply_templates(d, &ctx)? {
            return Ok(Some(if ctx.swapped { w.swapped() } else { w }));
        }
    }
    Ok(None)
}

/// Disjoint `(s1, t1)`- and `(s2, t2)`-paths under the premises of `mode`.
///
/// Runs the template engine over up to [`ROTATIONS`] decompositions and then
/// the exact solver with `budget` nodes. Errors: unmet premises
/// ([`Error::Hypothesis`]), class mismatch ([`Error::Domain`]), a proof of
/// non-linkage from the fallback ([`Error::TheoremRefuted`], except in
/// [`Mode::ScSplitWeak`] where nothing is promised and the verdict is
/// reported as [`Error::Domain`]), and budget exhaustion.
pub fn link_with_certificate(d: &Digraph, q: &LinkageQuery, mode: Mode, budget: u64) -> Result<LinkageWitness> {
    if let Some(w) = link_by_templates(d, q, mode)? {
        return Ok(w);
    }
    match two_disjoint_paths(d, q, budget)? {
        LinkageOutcome::Linked(w) => Ok(w),
        LinkageOutcome::BudgetExceeded => Err(Error::BudgetExceeded(budget)),
        LinkageOutcome::NotLinked if mode == Mode::ScSplitWeak => {
            Err(Error::domain(format!("no linkage for {}", q.display(d))))
        }
        LinkageOutcome::NotLinked => {
            Err(Error::TheoremRefuted(format!("{} has no disjoint pair although the premises hold", q.display(d))))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::fig1_counterexample;
    use crate::graph::v;
    use crate::linkage::DEFAULT_BUDGET;

    #[test]
    fn walk_shortcuts_cycles() {
        let d = Digraph::from_arcs(5, [(0, 1), (1, 2), (2, 1), (1, 3), (3, 4), (2, 3)]).unwrap();
        let p = walk_to_path(&d, &[v(0), v(1), v(2), v(1), v(3), v(4)]).unwrap();
        assert_eq!(p.vertices(), &[v(0), v(1), v(3), v(4)]);
        assert!(walk_to_path(&d, &[v(0), v(2)]).is_none());
    }

    #[test]
    fn join_glues_shared_endpoints() {
        let w = join(&[Some(vec![v(0), v(1)]), Some(vec![v(1), v(2)]), one(v(5))]).unwrap();
        assert_eq!(w, vec![v(0), v(1), v(2), v(5)]);
        assert!(join(&[Some(vec![v(0)]), None]).is_none());
    }

    #[test]
    fn fig1_fails_split_premise() {
        let (d, _, q) = fig1_counterexample();
        assert!(matches!(build_context(&d, &q, Mode::Split), Err(Error::Hypothesis(_))));
        assert!(matches!(link_with_certificate(&d, &q, Mode::Split, DEFAULT_BUDGET), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn complete_digraph_contexts() {
        let d = Digraph::complete(8);
        let q = LinkageQuery::of(0, 1, 2, 3);
        let ctx = build_context(&d, &q, Mode::ScSplit).unwrap();
        ctx.check_invariants(&d).unwrap();
        assert_eq!((ctx.paths_p.len(), ctx.paths_q.len()), (3, 3));
        let w = link_with_certificate(&Digraph::complete(7), &q, Mode::ScSplit, DEFAULT_BUDGET).unwrap();
        assert!(w.provenance.is_template());
        let w = link_with_certificate(&Digraph::complete(7), &q, Mode::Smp, DEFAULT_BUDGET).unwrap();
        assert_eq!(w.provenance, Provenance::Shortcut);
    }

    #[test]
    fn class_mismatch_is_domain_error() {
        let d = Digraph::cycle(6);
        let q = LinkageQuery::of(0, 1, 2, 3);
        assert!(matches!(build_context(&d, &q, Mode::ScSplit), Err(Error::Domain(_))));
        assert!(matches!(build_context(&d, &q, Mode::Smp), Err(Error::Domain(_))));
    }

    #[test]
    fn short_path_enumeration() {
        let d = Digraph::complete(5);
        let ps = short_paths(&d, v(0), v(1), &[v(2)], 2);
        let got: Vec<_> = ps.iter().map(|p| p.vertices().to_vec()).collect();
        assert_eq!(got, vec![vec![v(0), v(1)], vec![v(0), v(3), v(1)], vec![v(0), v(4), v(1)]]);
    }
}
