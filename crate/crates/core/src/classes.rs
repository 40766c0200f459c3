//! Recognition of split, semicomplete, tournament, semicomplete split and
//! semicomplete multipartite digraphs.
//!
//! Adjacency here is always that of the underlying undirected graph: `u` and
//! `v` are adjacent when at least one of `u -> v`, `v -> u` is an arc. A
//! digraph is split exactly when its underlying graph is split, so recognition
//! runs the degree-sequence test of Hammer and Simeone on the underlying graph
//! and then picks a canonical partition.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Digraph, VertexId};

/// `V(D) = V1 ⊎ V2` with `V1` independent and `V2` semicomplete.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SplitPartition {
    v1: Vec<VertexId>,
    v2: Vec<VertexId>,
}

impl SplitPartition {
    /// Both sides are stored sorted and deduplicated; nothing else is checked
    /// until [`validate_partition`].
    pub fn new(mut v1: Vec<VertexId>, mut v2: Vec<VertexId>) -> Self {
        v1.sort_unstable();
        v1.dedup();
        v2.sort_unstable();
        v2.dedup();
        SplitPartition { v1, v2 }
    }

    /// `V1 = v1` and `V2` the remaining vertices of a digraph of this order.
    pub fn from_v1(order: usize, v1: Vec<VertexId>) -> Self {
        let v2 = (0..order).map(VertexId::from).filter(|x| !v1.contains(x)).collect();
        SplitPartition::new(v1, v2)
    }

    pub fn v1(&self) -> &[VertexId] {
        &self.v1
    }

    pub fn v2(&self) -> &[VertexId] {
        &self.v2
    }

    pub fn in_v1(&self, x: VertexId) -> bool {
        self.v1.binary_search(&x).is_ok()
    }

    pub fn swapped(&self) -> SplitPartition {
        SplitPartition { v1: self.v2.clone(), v2: self.v1.clone() }
    }
}

fn underlying_degree(d: &Digraph, x: VertexId) -> usize {
    let mut s = d.out_set(x).clone();
    s.union_with(d.in_set(x));
    s.count_ones(..)
}

fn check_cover(d: &Digraph, p: &SplitPartition) -> Result<()> {
    let mut seen = FixedBitSet::with_capacity(d.order());
    for &x in p.v1.iter().chain(&p.v2) {
        d.check_vertex(x)?;
        if seen.put(x.index()) {
            return Err(Error::domain(format!("vertex {x} lies on both sides of the partition")));
        }
    }
    if seen.count_ones(..) != d.order() {
        return Err(Error::domain("partition does not cover every vertex"));
    }
    Ok(())
}

fn independent(d: &Digraph, xs: &[VertexId]) -> bool {
    xs.iter().enumerate().all(|(i, &a)| xs[i + 1..].iter().all(|&b| !d.adjacent(a, b)))
}

fn clique(d: &Digraph, xs: &[VertexId]) -> bool {
    xs.iter().enumerate().all(|(i, &a)| xs[i + 1..].iter().all(|&b| d.adjacent(a, b)))
}

/// Whether `p` is a split partition of `d`: both sides nonempty, `V1`
/// independent, `V2` semicomplete. Sets that overlap or fail to cover `V(D)`
/// are an error rather than `false`.
pub fn validate_partition(d: &Digraph, p: &SplitPartition) -> Result<bool> {
    check_cover(d, p)?;
    Ok(!p.v1.is_empty() && !p.v2.is_empty() && independent(d, &p.v1) && clique(d, &p.v2))
}

/// A split partition of `d`, if one exists.
///
/// Among all valid partitions the one with the largest `V2` is returned, ties
/// broken by the lexicographically smallest sorted `V2`.
pub fn split_partition(d: &Digraph) -> Option<SplitPartition> {
    let n = d.order();
    if n < 2 {
        return None;
    }
    let deg: Vec<usize> = d.vertices().map(|x| underlying_degree(d, x)).collect();
    let mut order: Vec<VertexId> = d.vertices().collect();
    order.sort_by(|a, b| deg[b.index()].cmp(&deg[a.index()]).then(a.cmp(b)));

    // m = max { i : d_i >= i - 1 } with 1-based ranks.
    let m = (1..=n).filter(|&i| deg[order[i - 1].index()] + 1 >= i).max().unwrap_or(0);
    let head: usize = order[..m].iter().map(|x| deg[x.index()]).sum();
    let tail: usize = order[m..].iter().map(|x| deg[x.index()]).sum();
    if head != m * (m - 1) + tail {
        return None;
    }

    let mut k: Vec<VertexId> = order[..m].to_vec();
    k.sort_unstable();
    // Grow to a maximum clique whose complement stays independent.
    loop {
        let grow = d.vertices().find(|x| !k.contains(x) && k.iter().all(|&y| d.adjacent(*x, y)));
        match grow {
            Some(x) => {
                k.push(x);
                k.sort_unstable();
            }
            None => break,
        }
    }

    if k.len() == n {
        // Underlying graph is complete; V1 must still be nonempty.
        let last = VertexId::from(n - 1);
        return Some(SplitPartition::from_v1(n, vec![last]));
    }

    // Any two maximum split cliques differ in at most one vertex, so the
    // single swaps of `k` enumerate every optimal V2.
    let rest: Vec<VertexId> = d.vertices().filter(|x| !k.contains(x)).collect();
    let mut best = k.clone();
    for &u in &k {
        for &w in &rest {
            if d.adjacent(u, w) {
                continue;
            }
            if !k.iter().all(|&y| y == u || d.adjacent(w, y)) {
                continue;
            }
            if !rest.iter().all(|&y| y == w || !d.adjacent(u, y)) {
                continue;
            }
            let mut cand: Vec<VertexId> = k.iter().copied().filter(|&y| y != u).chain([w]).collect();
            cand.sort_unstable();
            if cand < best {
                best = cand;
            }
        }
    }
    let v1 = d.vertices().filter(|x| !best.contains(x)).collect();
    Some(SplitPartition::new(v1, best))
}

/// Every pair of distinct vertices is adjacent.
pub fn is_semicomplete(d: &Digraph) -> bool {
    let all: Vec<VertexId> = d.vertices().collect();
    clique(d, &all)
}

/// Every pair of distinct vertices is joined by exactly one arc.
pub fn is_tournament(d: &Digraph) -> bool {
    d.vertices().all(|a| d.vertices().filter(|&b| b > a).all(|b| d.has_arc(a, b) != d.has_arc(b, a)))
}

/// The partition certifying that `d` is a semicomplete split digraph.
///
/// Every vertex with a non-neighbour is forced into `V1`, so `V1` is that set
/// when it is nonempty; for semicomplete `d` a singleton `{n-1}` is used.
pub fn semicomplete_split_partition(d: &Digraph) -> Option<SplitPartition> {
    let n = d.order();
    if n < 2 {
        return None;
    }
    let lonely: Vec<VertexId> = d.vertices().filter(|&x| underlying_degree(d, x) + 1 < n).collect();
    if lonely.is_empty() {
        return Some(SplitPartition::from_v1(n, vec![VertexId::from(n - 1)]));
    }
    if lonely.len() == n || !independent(d, &lonely) {
        return None;
    }
    let p = SplitPartition::from_v1(n, lonely);
    // V2 vertices are adjacent to everything by construction of `lonely`.
    Some(p)
}

/// Semicomplete split test. With an explicit partition only that partition is
/// checked, and an invalid split partition is an error.
pub fn is_semicomplete_split(d: &Digraph, partition: Option<&SplitPartition>) -> Result<bool> {
    match partition {
        None => Ok(semicomplete_split_partition(d).is_some()),
        Some(p) => {
            if !validate_partition(d, p)? {
                return Err(Error::domain("not a split partition of this digraph"));
            }
            Ok(p.v1.iter().all(|&a| p.v2.iter().all(|&b| d.adjacent(a, b))))
        }
    }
}

/// Partite sets if `d` is semicomplete multipartite (at least two parts,
/// non-adjacency an equivalence relation), sorted by smallest member.
pub fn is_semicomplete_multipartite(d: &Digraph) -> Option<Vec<Vec<VertexId>>> {
    let n = d.order();
    let mut part_of = vec![usize::MAX; n];
    let mut parts: Vec<Vec<VertexId>> = Vec::new();
    for x in d.vertices() {
        if part_of[x.index()] != usize::MAX {
            continue;
        }
        let class: Vec<VertexId> = d.vertices().filter(|&y| y == x || !d.adjacent(x, y)).collect();
        for &y in &class {
            if part_of[y.index()] != usize::MAX {
                return None;
            }
            part_of[y.index()] = parts.len();
        }
        parts.push(class);
    }
    // Transitivity: members of one class are pairwise non-adjacent and
    // adjacent to everything outside.
    for class in &parts {
        if !independent(d, class) {
            return None;
        }
    }
    for a in d.vertices() {
        for b in d.vertices().filter(|&b| b > a) {
            if part_of[a.index()] != part_of[b.index()] && !d.adjacent(a, b) {
                return None;
            }
        }
    }
    (parts.len() >= 2).then_some(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::v;

    fn ids(xs: &[usize]) -> Vec<VertexId> {
        xs.iter().map(|&i| v(i)).collect()
    }

    #[test]
    fn partition_validation() {
        let k3 = Digraph::complete(3);
        let p = SplitPartition::new(ids(&[0]), ids(&[1, 2]));
        assert!(validate_partition(&k3, &p).unwrap());
        let p = SplitPartition::new(ids(&[0, 1]), ids(&[2]));
        assert!(!validate_partition(&k3, &p).unwrap());
        let p = SplitPartition::new(ids(&[0]), ids(&[1]));
        assert!(validate_partition(&k3, &p).is_err());
        let p = SplitPartition::new(ids(&[0, 1]), ids(&[1, 2]));
        assert!(validate_partition(&k3, &p).is_err());
        let p = SplitPartition::new(vec![], ids(&[0, 1, 2]));
        assert!(!validate_partition(&k3, &p).unwrap());
    }

    #[test]
    fn four_cycle_is_not_split() {
        assert_eq!(split_partition(&Digraph::cycle(4)), None);
    }

    #[test]
    fn single_arc_split() {
        let d = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        let p = split_partition(&d).unwrap();
        assert!(validate_partition(&d, &p).unwrap());
        assert_eq!(p.v2(), &[v(0)]);
    }

    #[test]
    fn complete_graph_keeps_v1_nonempty() {
        let p = split_partition(&Digraph::complete(4)).unwrap();
        assert_eq!(p.v1(), &[v(3)]);
        assert_eq!(p.v2(), &ids(&[0, 1, 2]));
    }

    #[test]
    fn tournament_and_semicomplete() {
        let tt = Digraph::from_arcs(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(is_tournament(&tt));
        assert!(is_semicomplete(&tt));
        let k2 = Digraph::complete(2);
        assert!(!is_tournament(&k2));
        assert!(is_semicomplete(&Digraph::complete(4)));
    }

    #[test]
    fn star_is_semicomplete_split() {
        // centre 0 bidirected to leaves 1..4
        let d = Digraph::from_arcs(5, (1..5).flat_map(|i| [(0, i), (i, 0)])).unwrap();
        assert!(is_semicomplete_split(&d, None).unwrap());
        let p = semicomplete_split_partition(&d).unwrap();
        assert_eq!(p.v2(), &[v(0)]);
        assert!(is_semicomplete_split(&d, Some(&p)).unwrap());
        let bad = SplitPartition::new(ids(&[0, 1]), ids(&[2, 3, 4]));
        assert!(is_semicomplete_split(&d, Some(&bad)).is_err());
    }

    #[test]
    fn semicomplete_is_semicomplete_split() {
        let k = Digraph::complete(4);
        assert!(is_semicomplete_split(&k, None).unwrap());
        let p = SplitPartition::new(ids(&[2]), ids(&[0, 1, 3]));
        assert!(is_semicomplete_split(&k, Some(&p)).unwrap());
    }

    #[test]
    fn bipartite_multipartite() {
        let d = Digraph::from_arcs(4, [(0, 2), (2, 0), (0, 3), (3, 0), (1, 2), (2, 1), (1, 3), (3, 1)]).unwrap();
        assert_eq!(is_semicomplete_multipartite(&d), Some(vec![ids(&[0, 1]), ids(&[2, 3])]));
        assert_eq!(is_semicomplete_multipartite(&Digraph::from_arcs(3, []).unwrap()), None);
        // path 0-1-2 plus isolated-ish 3: non-adjacency not transitive
        let p = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(is_semicomplete_multipartite(&p), Some(vec![ids(&[0, 2]), ids(&[1])]));
        let q = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(is_semicomplete_multipartite(&q), None);
    }
}
