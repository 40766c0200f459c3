//! Simple digraphs over dense vertex ids.
//!
//! A [`Digraph`] is frozen once built: neighbourhoods are stored as bitsets in
//! both directions so that adjacency tests, deletions and reachability sweeps
//! stay cheap at the sizes this crate works with. All mutation goes through
//! [`DigraphBuilder`].

use std::collections::{HashSet, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::path::Path;

/// Dense vertex index into the owning digraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for VertexId {
    #[inline]
    fn from(i: usize) -> Self {
        VertexId(i as u32)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Shorthand for building vertex ids in tests and fixtures.
#[inline]
pub fn v(i: usize) -> VertexId {
    VertexId::from(i)
}

/// A digraph without loops or parallel arcs.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    out: Vec<FixedBitSet>,
    inc: Vec<FixedBitSet>,
    arcs: usize,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("order", &self.order())
            .field("arcs", &self.arcs().map(|(a, b)| (self.name(a), self.name(b))).collect::<Vec<_>>())
            .finish()
    }
}

/// Outcome of [`Digraph::dominance`] for two disjoint vertex sets `X`, `Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dominance {
    /// Every vertex of `X` dominates every vertex of `Y`.
    pub arrow: bool,
    /// No arc runs from `Y` back to `X`.
    pub no_back: bool,
    /// `arrow && no_back`.
    pub maps_to: bool,
}

/// Translation between a parent digraph and a subdigraph produced by
/// [`Digraph::induced`] or [`Digraph::delete_vertices`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reindex {
    to_parent: Vec<VertexId>,
    to_child: Vec<Option<VertexId>>,
}

impl Reindex {
    pub fn parent(&self, child: VertexId) -> VertexId {
        self.to_parent[child.index()]
    }

    pub fn child(&self, parent: VertexId) -> Option<VertexId> {
        self.to_child.get(parent.index()).copied().flatten()
    }

    /// Parent ids of the child vertices, in child order.
    pub fn parents(&self) -> &[VertexId] {
        &self.to_parent
    }

    /// Lift a path of the subdigraph to parent coordinates.
    pub fn path_to_parent(&self, path: &Path) -> Path {
        Path::from_trusted(path.vertices().iter().map(|&x| self.parent(x)).collect())
    }
}

/// Mutable staging area for a [`Digraph`].
#[derive(Debug, Clone)]
pub struct DigraphBuilder {
    out: Vec<FixedBitSet>,
    arcs: usize,
    labels: Option<Vec<String>>,
}

impl DigraphBuilder {
    pub fn new(order: usize) -> Self {
        DigraphBuilder { out: vec![FixedBitSet::with_capacity(order); order], arcs: 0, labels: None }
    }

    pub fn order(&self) -> usize {
        self.out.len()
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        check_labels(&labels, self.order())?;
        self.labels = Some(labels);
        Ok(self)
    }

    fn check(&self, x: VertexId) -> Result<()> {
        if x.index() < self.out.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: x.index(), order: self.out.len() })
        }
    }

    /// Add `a -> b`, rejecting loops and duplicates.
    pub fn add_arc(&mut self, a: VertexId, b: VertexId) -> Result<()> {
        self.check(a)?;
        self.check(b)?;
        if a == b {
            return Err(Error::Loop(a));
        }
        if self.out[a.index()].contains(b.index()) {
            return Err(Error::DuplicateArc(a, b));
        }
        self.out[a.index()].insert(b.index());
        self.arcs += 1;
        Ok(())
    }

    /// Add `a -> b` if absent. Returns whether the arc was new.
    pub fn insert_arc(&mut self, a: VertexId, b: VertexId) -> Result<bool> {
        match self.add_arc(a, b) {
            Ok(()) => Ok(true),
            Err(Error::DuplicateArc(..)) => Ok(false),
            Err(e) => Err(e),
        }
    }

    pub fn has_arc(&self, a: VertexId, b: VertexId) -> bool {
        self.out.get(a.index()).is_some_and(|s| s.contains(b.index()))
    }

    pub fn build(self) -> Digraph {
        let n = self.out.len();
        let mut inc = vec![FixedBitSet::with_capacity(n); n];
        for (a, outs) in self.out.iter().enumerate() {
            for b in outs.ones() {
                inc[b].insert(a);
            }
        }
        Digraph { out: self.out, inc, arcs: self.arcs, labels: self.labels }
    }
}

fn check_labels(labels: &[String], order: usize) -> Result<()> {
    if labels.len() != order {
        return Err(Error::LabelCount { labels: labels.len(), order });
    }
    let mut seen = HashSet::new();
    for l in labels {
        if l.is_empty() || l.chars().any(|c| c.is_whitespace() || matches!(c, ',' | '=' | '#' | ':')) {
            return Err(Error::InvalidLabel(l.clone()));
        }
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

impl Digraph {
    /// Build from an arc list; loops and duplicates are errors.
    pub fn from_arcs(order: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut b = DigraphBuilder::new(order);
        for (x, y) in arcs {
            b.add_arc(x.into(), y.into())?;
        }
        Ok(b.build())
    }

    /// Bidirected complete digraph on `order` vertices.
    pub fn complete(order: usize) -> Self {
        let mut b = DigraphBuilder::new(order);
        for x in 0..order {
            for y in 0..order {
                if x != y {
                    b.add_arc(x.into(), y.into()).expect("fresh arc");
                }
            }
        }
        b.build()
    }

    /// Directed cycle `0 -> 1 -> ... -> order-1 -> 0`.
    pub fn cycle(order: usize) -> Self {
        Digraph::from_arcs(order, (0..order).map(|i| (i, (i + 1) % order))).expect("cycle arcs")
    }

    pub fn order(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + Clone {
        (0..self.order()).map(VertexId::from)
    }

    pub fn contains(&self, x: VertexId) -> bool {
        x.index() < self.order()
    }

    pub fn check_vertex(&self, x: VertexId) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: x.index(), order: self.order() })
        }
    }

    #[inline]
    pub fn has_arc(&self, a: VertexId, b: VertexId) -> bool {
        self.out.get(a.index()).is_some_and(|s| s.contains(b.index()))
    }

    /// At least one of `a -> b`, `b -> a` is present.
    #[inline]
    pub fn adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.has_arc(a, b) || self.has_arc(b, a)
    }

    pub fn out_neighbors(&self, x: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.out[x.index()].ones().map(VertexId::from)
    }

    pub fn in_neighbors(&self, x: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.inc[x.index()].ones().map(VertexId::from)
    }

    pub fn out_set(&self, x: VertexId) -> &FixedBitSet {
        &self.out[x.index()]
    }

    pub fn in_set(&self, x: VertexId) -> &FixedBitSet {
        &self.inc[x.index()]
    }

    pub fn out_degree(&self, x: VertexId) -> usize {
        self.out[x.index()].count_ones(..)
    }

    pub fn in_degree(&self, x: VertexId) -> usize {
        self.inc[x.index()].count_ones(..)
    }

    /// Arcs in ascending `(tail, head)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.out.iter().enumerate().flat_map(|(a, s)| s.ones().map(move |b| (VertexId::from(a), VertexId::from(b))))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: VertexId) -> Option<&str> {
        self.labels.as_ref().and_then(|l| l.get(x.index())).map(String::as_str)
    }

    /// Label if present, decimal index otherwise.
    pub fn name(&self, x: VertexId) -> String {
        match self.label(x) {
            Some(l) => l.to_owned(),
            None => x.to_string(),
        }
    }

    /// Resolve a vertex by label, or by decimal index when the digraph is unlabeled.
    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        match &self.labels {
            Some(labels) => labels.iter().position(|l| l == name).map(VertexId::from),
            None => name.parse::<usize>().ok().filter(|&i| i < self.order()).map(VertexId::from),
        }
    }

    /// Same digraph with `labels` attached.
    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        check_labels(&labels, self.order())?;
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn to_builder(&self) -> DigraphBuilder {
        DigraphBuilder { out: self.out.clone(), arcs: self.arcs, labels: self.labels.clone() }
    }

    pub fn vertex_set<'a>(&self, xs: impl IntoIterator<Item = &'a VertexId>) -> Result<FixedBitSet> {
        let mut s = FixedBitSet::with_capacity(self.order());
        for &x in xs {
            self.check_vertex(x)?;
            s.insert(x.index());
        }
        Ok(s)
    }

    /// The digraph with every arc reversed.
    pub fn reverse(&self) -> Digraph {
        Digraph { out: self.inc.clone(), inc: self.out.clone(), arcs: self.arcs, labels: self.labels.clone() }
    }

    /// Subdigraph induced by `keep`, reindexed in ascending parent order.
    pub fn induced(&self, keep: &[VertexId]) -> Result<(Digraph, Reindex)> {
        let set = self.vertex_set(keep)?;
        Ok(self.induced_by_set(&set))
    }

    pub(crate) fn induced_by_set(&self, set: &FixedBitSet) -> (Digraph, Reindex) {
        let to_parent: Vec<VertexId> = set.ones().map(VertexId::from).collect();
        let mut to_child = vec![None; self.order()];
        for (i, &p) in to_parent.iter().enumerate() {
            to_child[p.index()] = Some(VertexId::from(i));
        }
        let mut b = DigraphBuilder::new(to_parent.len());
        for (ci, &p) in to_parent.iter().enumerate() {
            for q in self.out[p.index()].ones() {
                if let Some(cj) = to_child[q] {
                    b.out[ci].insert(cj.index());
                    b.arcs += 1;
                }
            }
        }
        if let Some(labels) = &self.labels {
            b.labels = Some(to_parent.iter().map(|p| labels[p.index()].clone()).collect());
        }
        (b.build(), Reindex { to_parent, to_child })
    }

    /// `D \ X`: delete `drop` and every incident arc.
    pub fn delete_vertices(&self, drop: &[VertexId]) -> Result<(Digraph, Reindex)> {
        let mut keep = self.vertex_set(drop)?;
        keep.toggle_range(..);
        Ok(self.induced_by_set(&keep))
    }

    /// Evaluate `X -> Y`, `X => Y` and `X |-> Y`.
    pub fn dominance(&self, xs: &[VertexId], ys: &[VertexId]) -> Result<Dominance> {
        let xset = self.vertex_set(xs)?;
        let yset = self.vertex_set(ys)?;
        if xs.is_empty() || ys.is_empty() {
            return Err(Error::domain("dominance needs two nonempty vertex sets"));
        }
        if !xset.is_disjoint(&yset) {
            return Err(Error::domain("dominance needs disjoint vertex sets"));
        }
        let arrow = xset.ones().all(|x| yset.is_subset(&self.out[x]));
        let no_back = yset.ones().all(|y| self.out[y].is_disjoint(&xset));
        Ok(Dominance { arrow, no_back, maps_to: arrow && no_back })
    }

    /// Vertices reachable from `from` without entering `blocked`.
    /// `from` itself is always included unless it is blocked.
    pub fn reachable_avoiding(&self, from: VertexId, blocked: &FixedBitSet) -> FixedBitSet {
        let mut seen = FixedBitSet::with_capacity(self.order());
        if blocked.contains(from.index()) {
            return seen;
        }
        let mut stack = vec![from.index()];
        seen.insert(from.index());
        while let Some(x) = stack.pop() {
            for y in self.out[x].ones() {
                if !seen.contains(y) && !blocked.contains(y) {
                    seen.insert(y);
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// Breadth-first shortest `from -> to` path using only vertices of
    /// `allowed`; ties go to the lowest-numbered out-neighbour.
    pub fn shortest_path_within(&self, from: VertexId, to: VertexId, allowed: &FixedBitSet) -> Option<Vec<VertexId>> {
        self.bfs_within(from, to, allowed, false)
    }

    /// Like [`Digraph::shortest_path_within`] but never uses the arc `from -> to`.
    pub(crate) fn shortest_detour_within(
        &self,
        from: VertexId,
        to: VertexId,
        allowed: &FixedBitSet,
    ) -> Option<Vec<VertexId>> {
        self.bfs_within(from, to, allowed, true)
    }

    fn bfs_within(
        &self,
        from: VertexId,
        to: VertexId,
        allowed: &FixedBitSet,
        skip_direct: bool,
    ) -> Option<Vec<VertexId>> {
        if !allowed.contains(from.index()) || !allowed.contains(to.index()) {
            return None;
        }
        let n = self.order();
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        parent[from.index()] = from.index();
        queue.push_back(from.index());
        while let Some(x) = queue.pop_front() {
            if x == to.index() {
                let mut seq = vec![VertexId::from(x)];
                let mut cur = x;
                while cur != from.index() {
                    cur = parent[cur];
                    seq.push(VertexId::from(cur));
                }
                seq.reverse();
                return Some(seq);
            }
            for y in self.out[x].ones() {
                if skip_direct && x == from.index() && y == to.index() {
                    continue;
                }
                if parent[y] == usize::MAX && allowed.contains(y) {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// Shortest `from -> to` path avoiding `blocked`.
    pub fn shortest_path_avoiding(&self, from: VertexId, to: VertexId, blocked: &FixedBitSet) -> Option<Vec<VertexId>> {
        let mut allowed = blocked.clone();
        allowed.grow(self.order());
        allowed.toggle_range(..);
        self.shortest_path_within(from, to, &allowed)
    }

    /// Strongly connected (vacuously true for order ≤ 1).
    pub fn is_strong(&self) -> bool {
        self.is_strong_avoiding(&FixedBitSet::with_capacity(self.order()))
    }

    /// Whether `D - blocked` is strongly connected.
    pub fn is_strong_avoiding(&self, blocked: &FixedBitSet) -> bool {
        let Some(root) = (0..self.order()).find(|&i| !blocked.contains(i)) else {
            return true;
        };
        let alive = self.order() - blocked.count_ones(..);
        let fwd = self.reachable_avoiding(VertexId::from(root), blocked);
        if fwd.count_ones(..) != alive {
            return false;
        }
        self.reverse().reachable_avoiding(VertexId::from(root), blocked).count_ones(..) == alive
    }
}
