//! Exact 2-linkage: disjoint `(s1, t1)`- and `(s2, t2)`-paths.
//!
//! The problem is NP-complete on general digraphs, so [`two_disjoint_paths`]
//! is a complete backtracking search with a node budget. It enumerates paths
//! for one terminal pair depth-first and prunes a branch as soon as either its
//! own sink or the other pair's connection becomes unreachable.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Digraph, VertexId};
use crate::path::Path;

/// Search-tree node budget used when callers do not pick one.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Four distinct terminals `(s1, t1, s2, t2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LinkageQuery {
    pub s1: VertexId,
    pub t1: VertexId,
    pub s2: VertexId,
    pub t2: VertexId,
}

impl LinkageQuery {
    pub fn new(s1: VertexId, t1: VertexId, s2: VertexId, t2: VertexId) -> Result<Self> {
        let q = LinkageQuery { s1, t1, s2, t2 };
        let ts = q.terminals();
        for i in 0..4 {
            for j in i + 1..4 {
                if ts[i] == ts[j] {
                    return Err(Error::domain(format!("terminal {} is repeated", ts[i])));
                }
            }
        }
        Ok(q)
    }

    /// Query from raw indices; panics on repeated terminals.
    pub fn of(s1: usize, t1: usize, s2: usize, t2: usize) -> Self {
        LinkageQuery::new(s1.into(), t1.into(), s2.into(), t2.into()).expect("distinct terminals")
    }

    pub fn terminals(&self) -> [VertexId; 4] {
        [self.s1, self.t1, self.s2, self.t2]
    }

    pub fn check(&self, d: &Digraph) -> Result<()> {
        for x in self.terminals() {
            d.check_vertex(x)?;
        }
        LinkageQuery::new(self.s1, self.t1, self.s2, self.t2).map(|_| ())
    }

    /// The two pairs exchanged.
    pub fn swapped(&self) -> Self {
        LinkageQuery { s1: self.s2, t1: self.t2, s2: self.s1, t2: self.t1 }
    }

    /// The equivalent query on `D.reverse()`: `(t1, s1, t2, s2)`.
    pub fn reversed(&self) -> Self {
        LinkageQuery { s1: self.t1, t1: self.s1, s2: self.t2, t2: self.s2 }
    }

    pub fn display<'a>(&'a self, d: &'a Digraph) -> impl fmt::Display + 'a {
        QueryDisplay { q: self, d }
    }
}

struct QueryDisplay<'a> {
    q: &'a LinkageQuery,
    d: &'a Digraph,
}

impl fmt::Display for QueryDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.d;
        write!(f, "({}, {}, {}, {})", d.name(self.q.s1), d.name(self.q.t1), d.name(self.q.s2), d.name(self.q.t2))
    }
}

/// Where a witness came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    ExactSearch,
    /// A constructive template; `reversed` marks witnesses found on the
    /// reversed digraph and mapped back.
    Template {
        id: &'static str,
        reversed: bool,
    },
    /// A short `(s1, t1)`-path whose removal leaves `s2 -> t2` reachable.
    Shortcut,
}

impl Provenance {
    pub fn is_template(&self) -> bool {
        !matches!(self, Provenance::ExactSearch)
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::ExactSearch => f.write_str("exact-search"),
            Provenance::Template { id, reversed: false } => write!(f, "template:{id}"),
            Provenance::Template { id, reversed: true } => write!(f, "template:{id}@reverse"),
            Provenance::Shortcut => f.write_str("shortcut"),
        }
    }
}

/// Disjoint `(s1, t1)`- and `(s2, t2)`-paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkageWitness {
    pub p1: Path,
    pub p2: Path,
    pub provenance: Provenance,
}

impl LinkageWitness {
    pub fn new(d: &Digraph, q: &LinkageQuery, p1: Path, p2: Path, provenance: Provenance) -> Result<Self> {
        let w = LinkageWitness { p1, p2, provenance };
        w.validate(d, q)?;
        Ok(w)
    }

    pub fn validate(&self, d: &Digraph, q: &LinkageQuery) -> Result<()> {
        self.p1.validate(d)?;
        self.p2.validate(d)?;
        if self.p1.first() != q.s1 || self.p1.last() != q.t1 {
            return Err(Error::EndpointMismatch("first path does not run s1 -> t1".into()));
        }
        if self.p2.first() != q.s2 || self.p2.last() != q.t2 {
            return Err(Error::EndpointMismatch("second path does not run s2 -> t2".into()));
        }
        if !self.p1.is_disjoint(&self.p2) {
            return Err(Error::domain("linkage paths share a vertex"));
        }
        Ok(())
    }

    /// Witness for the swapped query.
    pub fn swapped(self) -> Self {
        LinkageWitness { p1: self.p2, p2: self.p1, provenance: self.provenance }
    }

    /// Witness for the reversed digraph and [`LinkageQuery::reversed`].
    pub fn reversed(self) -> Self {
        let provenance = match self.provenance {
            Provenance::Template { id, reversed } => Provenance::Template { id, reversed: !reversed },
            other => other,
        };
        LinkageWitness { p1: self.p1.reversed(), p2: self.p2.reversed(), provenance }
    }
}

/// Result of a budgeted search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinkageOutcome {
    Linked(LinkageWitness),
    /// Proven: no disjoint pair exists.
    NotLinked,
    BudgetExceeded,
}

enum Step {
    Found(Vec<VertexId>, Vec<VertexId>),
    Dead,
    Budget,
}

struct Search<'a> {
    d: &'a Digraph,
    t: VertexId,
    s_other: VertexId,
    t_other: VertexId,
    budget: u64,
    nodes: u64,
    on_path: FixedBitSet,
    path: Vec<VertexId>,
}

impl Search<'_> {
    fn dfs(&mut self, cur: VertexId) -> Step {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Step::Budget;
        }
        if let Some(other) = self.d.shortest_path_avoiding(self.s_other, self.t_other, &self.on_path) {
            if cur == self.t {
                return Step::Found(self.path.clone(), other);
            }
        } else {
            return Step::Dead;
        }
        let mut blocked = self.on_path.clone();
        blocked.set(cur.index(), false);
        blocked.insert(self.s_other.index());
        blocked.insert(self.t_other.index());
        if !self.d.reachable_avoiding(cur, &blocked).contains(self.t.index()) {
            return Step::Dead;
        }
        let nexts: Vec<VertexId> = self.d.out_neighbors(cur).filter(|w| !blocked.contains(w.index())).collect();
        for w in nexts {
            self.on_path.insert(w.index());
            self.path.push(w);
            match self.dfs(w) {
                Step::Dead => {}
                done => return done,
            }
            self.path.pop();
            self.on_path.set(w.index(), false);
        }
        Step::Dead
    }
}

/// Exact decision with witness. `NotLinked` is a proof of non-existence;
/// running out of `budget` search nodes is reported separately.
pub fn two_disjoint_paths(d: &Digraph, q: &LinkageQuery, budget: u64) -> Result<LinkageOutcome> {
    q.check(d)?;
    // Enumerate paths for the pair with the smaller out-degree sum.
    let load = |a: VertexId, b: VertexId| d.out_degree(a) + d.out_degree(b);
    let swap = load(q.s1, q.t1) > load(q.s2, q.t2);
    let (s, t, so, to) = if swap { (q.s2, q.t2, q.s1, q.t1) } else { (q.s1, q.t1, q.s2, q.t2) };
    let mut search = Search {
        d,
        t,
        s_other: so,
        t_other: to,
        budget,
        nodes: 0,
        on_path: FixedBitSet::with_capacity(d.order()),
        path: vec![s],
    };
    search.on_path.insert(s.index());
    match search.dfs(s) {
        Step::Found(mine, other) => {
            let (a, b) = if swap { (other, mine) } else { (mine, other) };
            let w = LinkageWitness::new(d, q, Path::new(d, a)?, Path::new(d, b)?, Provenance::ExactSearch)?;
            Ok(LinkageOutcome::Linked(w))
        }
        Step::Dead => Ok(LinkageOutcome::NotLinked),
        Step::Budget => Ok(LinkageOutcome::BudgetExceeded),
    }
}

/// Whether `(D, s1, t1, s2, t2)` is good, with no search budget.
pub fn is_good_tuple(d: &Digraph, q: &LinkageQuery) -> Result<bool> {
    Ok(matches!(two_disjoint_paths(d, q, u64::MAX)?, LinkageOutcome::Linked(_)))
}

/// Verdict of [`is_2_linked`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwoLinked {
    Linked,
    /// The lexicographically first quadruple that is not good.
    Counterexample(LinkageQuery),
}

/// All ordered quadruples of distinct vertices, lexicographically.
pub fn quadruples(n: usize) -> impl Iterator<Item = LinkageQuery> {
    (0..n).flat_map(move |a| {
        (0..n).flat_map(move |b| {
            (0..n).flat_map(move |c| {
                (0..n).filter_map(move |e| {
                    let distinct = a != b && a != c && a != e && b != c && b != e && c != e;
                    distinct.then(|| LinkageQuery::of(a, b, c, e))
                })
            })
        })
    })
}

/// Whether every quadruple of distinct vertices is a good tuple.
pub fn is_2_linked(d: &Digraph) -> Result<TwoLinked> {
    if d.order() < 4 {
        return Err(Error::domain("2-linkage needs at least four vertices"));
    }
    for q in quadruples(d.order()) {
        if !is_good_tuple(d, &q)? {
            return Ok(TwoLinked::Counterexample(q));
        }
    }
    Ok(TwoLinked::Linked)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_direct_arcs() {
        let d = Digraph::from_arcs(4, [(0, 1), (2, 3)]).unwrap();
        let q = LinkageQuery::of(0, 1, 2, 3);
        match two_disjoint_paths(&d, &q, DEFAULT_BUDGET).unwrap() {
            LinkageOutcome::Linked(w) => {
                assert_eq!(w.p1.vertices().len(), 2);
                assert_eq!(w.p2.vertices().len(), 2);
                assert_eq!(w.provenance, Provenance::ExactSearch);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn shared_bottleneck_is_not_linked() {
        // both pairs must pass through vertex 4
        let d = Digraph::from_arcs(5, [(0, 4), (2, 4), (4, 1), (4, 3)]).unwrap();
        assert_eq!(two_disjoint_paths(&d, &LinkageQuery::of(0, 1, 2, 3), 100).unwrap(), LinkageOutcome::NotLinked);
    }

    #[test]
    fn budget_is_distinct_from_no() {
        let d = Digraph::complete(6);
        let q = LinkageQuery::of(0, 1, 2, 3);
        assert_eq!(two_disjoint_paths(&d, &q, 0).unwrap(), LinkageOutcome::BudgetExceeded);
    }

    #[test]
    fn query_validation() {
        assert!(LinkageQuery::new(0.into(), 1.into(), 0.into(), 3.into()).is_err());
        let d = Digraph::complete(3);
        assert!(two_disjoint_paths(&d, &LinkageQuery::of(0, 1, 2, 3), 10).is_err());
        assert!(is_2_linked(&d).is_err());
    }

    #[test]
    fn complete_graphs_are_linked() {
        assert_eq!(is_2_linked(&Digraph::complete(5)).unwrap(), TwoLinked::Linked);
        let k6 = Digraph::complete(6);
        assert!(is_good_tuple(&k6, &LinkageQuery::of(5, 0, 3, 2)).unwrap());
    }

    #[test]
    fn quadruple_order() {
        let qs: Vec<_> = quadruples(4).collect();
        assert_eq!(qs.len(), 24);
        assert_eq!(qs[0], LinkageQuery::of(0, 1, 2, 3));
        assert_eq!(qs[1], LinkageQuery::of(0, 1, 3, 2));
    }

    #[test]
    fn witness_rejects_overlap() {
        let d = Digraph::complete(5);
        let q = LinkageQuery::of(0, 1, 2, 3);
        let p1 = Path::new(&d, vec![0.into(), 4.into(), 1.into()]).unwrap();
        let p2 = Path::new(&d, vec![2.into(), 4.into(), 3.into()]).unwrap();
        assert!(LinkageWitness::new(&d, &q, p1, p2, Provenance::ExactSearch).is_err());
    }
}
