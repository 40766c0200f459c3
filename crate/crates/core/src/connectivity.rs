//! Menger machinery: local connectivity, internally disjoint path systems,
//! k-strong tests, separators and minimal paths.
//!
//! Local connectivity `κ(x, y)` is computed as a unit-capacity maximum flow on
//! the vertex-split network: every vertex `v` other than `x`, `y` becomes
//! `v_in -> v_out` with capacity one and every arc `u -> w` becomes
//! `u_out -> w_in`. A direct arc `x -> y` is therefore one path with no
//! internal vertices. Augmenting paths are found breadth-first; `κ ≤ n`, so the
//! total work is `O(n·m)`.
//!
//! Path systems are read off the flow by always following the first saturated
//! out-arc in adjacency order, which is ascending vertex id rotated by the
//! caller-supplied `rotation`. Every extracted path is then replaced by a
//! shortest path inside the subdigraph induced by its own vertex set. One
//! breadth-first pass is enough for minimality: a shortest path `P'` of
//! `D⟨V(P)⟩` is also shortest in `D⟨V(P')⟩`, which is a subdigraph of
//! `D⟨V(P)⟩`.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Digraph, VertexId};
use crate::path::Path;

/// Internally disjoint `source -> sink` paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSystem {
    pub source: VertexId,
    pub sink: VertexId,
    pub paths: Vec<Path>,
}

impl PathSystem {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Check every path against `d`, the endpoints, and pairwise internal
    /// disjointness.
    pub fn validate(&self, d: &Digraph) -> Result<()> {
        for (i, p) in self.paths.iter().enumerate() {
            p.validate(d)?;
            if p.first() != self.source || p.last() != self.sink {
                return Err(Error::EndpointMismatch(format!(
                    "path {i} runs {} -> {}, expected {} -> {}",
                    p.first(),
                    p.last(),
                    self.source,
                    self.sink
                )));
            }
            for (j, q) in self.paths[..i].iter().enumerate() {
                if p == q || !p.is_internally_disjoint(q) {
                    return Err(Error::domain(format!("paths {j} and {i} are not internally disjoint")));
                }
            }
        }
        Ok(())
    }

    /// Union of interior vertices.
    pub fn interior_set(&self, order: usize) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(order);
        for p in &self.paths {
            for x in p.interior() {
                s.insert(x.index());
            }
        }
        s
    }
}

struct FlowNet {
    // Edge `e` and its residual twin `e ^ 1`.
    to: Vec<usize>,
    cap: Vec<u8>,
    adj: Vec<Vec<usize>>,
    source: usize,
    sink: usize,
}

impl FlowNet {
    fn build(d: &Digraph, x: VertexId, y: VertexId, blocked: &FixedBitSet, rotation: usize) -> FlowNet {
        let n = d.order();
        let mut net = FlowNet {
            to: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); 2 * n],
            source: 2 * x.index() + 1,
            sink: 2 * y.index(),
        };
        let alive = |v: usize| !blocked.contains(v) || v == x.index() || v == y.index();
        for v in 0..n {
            if alive(v) && v != x.index() && v != y.index() {
                net.add(2 * v, 2 * v + 1);
            }
        }
        for u in 0..n {
            if !alive(u) || u == y.index() {
                continue;
            }
            let outs: Vec<usize> =
                d.out_set(VertexId::from(u)).ones().filter(|&w| alive(w) && w != x.index()).collect();
            if outs.is_empty() {
                continue;
            }
            let r = rotation % outs.len();
            for &w in outs[r..].iter().chain(&outs[..r]) {
                net.add(2 * u + 1, 2 * w);
            }
        }
        net
    }

    fn add(&mut self, a: usize, b: usize) {
        let e = self.to.len();
        self.to.push(b);
        self.cap.push(1);
        self.adj[a].push(e);
        self.to.push(a);
        self.cap.push(0);
        self.adj[b].push(e + 1);
    }

    fn augment(&mut self) -> bool {
        let mut via = vec![usize::MAX; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        let mut queue = VecDeque::from([self.source]);
        seen[self.source] = true;
        while let Some(a) = queue.pop_front() {
            if a == self.sink {
                break;
            }
            for &e in &self.adj[a] {
                let b = self.to[e];
                if self.cap[e] > 0 && !seen[b] {
                    seen[b] = true;
                    via[b] = e;
                    queue.push_back(b);
                }
            }
        }
        if !seen[self.sink] {
            return false;
        }
        let mut cur = self.sink;
        while cur != self.source {
            let e = via[cur];
            self.cap[e] -= 1;
            self.cap[e ^ 1] += 1;
            cur = self.to[e ^ 1];
        }
        true
    }

    fn max_flow(&mut self, limit: usize) -> usize {
        let mut flow = 0;
        while flow < limit && self.augment() {
            flow += 1;
        }
        flow
    }

    /// Decompose the current flow into vertex sequences.
    fn paths(&mut self) -> Vec<Vec<VertexId>> {
        let mut out = Vec::new();
        let mut used = vec![false; self.to.len()];
        loop {
            let mut seq = vec![VertexId::from(self.source / 2)];
            let mut node = self.source;
            let mut progressed = false;
            while node != self.sink {
                let next = self.adj[node].iter().copied().find(|&e| e % 2 == 0 && self.cap[e] == 0 && !used[e]);
                let Some(e) = next else { break };
                used[e] = true;
                progressed = true;
                let w_in = self.to[e];
                seq.push(VertexId::from(w_in / 2));
                node = if w_in == self.sink { w_in } else { w_in + 1 };
            }
            if !progressed {
                return out;
            }
            out.push(seq);
        }
    }
}

fn check_pair(d: &Digraph, x: VertexId, y: VertexId) -> Result<()> {
    d.check_vertex(x)?;
    d.check_vertex(y)?;
    if x == y {
        return Err(Error::domain("local connectivity needs two distinct vertices"));
    }
    Ok(())
}

/// `κ_D(x, y)`: the maximum number of internally disjoint `(x, y)`-paths.
pub fn local_connectivity(d: &Digraph, x: VertexId, y: VertexId) -> Result<usize> {
    local_connectivity_without(d, x, y, &[])
}

/// `κ_{D - X}(x, y)` without materialising `D - X`.
pub fn local_connectivity_without(d: &Digraph, x: VertexId, y: VertexId, deleted: &[VertexId]) -> Result<usize> {
    check_pair(d, x, y)?;
    let blocked = d.vertex_set(deleted)?;
    if blocked.contains(x.index()) || blocked.contains(y.index()) {
        return Err(Error::domain("endpoints must not be deleted"));
    }
    Ok(FlowNet::build(d, x, y, &blocked, 0).max_flow(usize::MAX))
}

/// `k` internally disjoint minimal `(x, y)`-paths, or `None` when `κ < k`.
pub fn disjoint_path_system(d: &Digraph, x: VertexId, y: VertexId, k: usize) -> Result<Option<PathSystem>> {
    disjoint_path_system_with(d, x, y, k, &[], 0)
}

/// [`disjoint_path_system`] inside `D - deleted`, with neighbour lists
/// rotated by `rotation` before augmenting and decomposing. Paths are in the
/// coordinates of `d`.
pub fn disjoint_path_system_with(
    d: &Digraph,
    x: VertexId,
    y: VertexId,
    k: usize,
    deleted: &[VertexId],
    rotation: usize,
) -> Result<Option<PathSystem>> {
    check_pair(d, x, y)?;
    if k == 0 {
        return Err(Error::domain("path systems need k >= 1"));
    }
    let blocked = d.vertex_set(deleted)?;
    if blocked.contains(x.index()) || blocked.contains(y.index()) {
        return Err(Error::domain("endpoints must not be deleted"));
    }
    let mut net = FlowNet::build(d, x, y, &blocked, rotation);
    if net.max_flow(k) < k {
        return Ok(None);
    }
    let paths = net.paths().into_iter().map(|seq| make_minimal(d, &Path::from_trusted(seq))).collect();
    Ok(Some(PathSystem { source: x, sink: y, paths }))
}

/// At least `k + 1` vertices and `κ(x, y) ≥ k` for every ordered pair.
pub fn is_k_strong(d: &Digraph, k: usize) -> bool {
    let n = d.order();
    if n < k + 1 {
        return false;
    }
    if k == 0 {
        return true;
    }
    // Cheap necessary condition first.
    if d.vertices().any(|x| d.out_degree(x) < k || d.in_degree(x) < k) {
        return false;
    }
    let none = FixedBitSet::with_capacity(n);
    d.vertices().all(|x| d.vertices().filter(|&y| y != x).all(|y| FlowNet::build(d, x, y, &none, 0).max_flow(k) >= k))
}

/// Largest `k` with `d` k-strong (0 when not strong).
pub fn strong_connectivity(d: &Digraph) -> usize {
    let n = d.order();
    if n < 2 || !d.is_strong() {
        return 0;
    }
    let none = FixedBitSet::with_capacity(n);
    d.vertices()
        .flat_map(|x| d.vertices().filter(move |&y| y != x).map(move |y| (x, y)))
        .map(|(x, y)| FlowNet::build(d, x, y, &none, 0).max_flow(usize::MAX))
        .min()
        .unwrap_or(0)
        .min(n - 1)
}

/// Whether `D - S` has no `(s, t)`-path.
pub fn is_separator(d: &Digraph, sep: &[VertexId], s: VertexId, t: VertexId) -> Result<bool> {
    check_pair(d, s, t)?;
    let blocked = d.vertex_set(sep)?;
    if blocked.contains(s.index()) || blocked.contains(t.index()) {
        return Err(Error::domain("a separator must avoid both endpoints"));
    }
    Ok(!d.reachable_avoiding(s, &blocked).contains(t.index()))
}

/// A shortest `(first, last)`-path of `D⟨V(P)⟩`. When `P` has at least two
/// arcs the arc `first -> last` is not used, so the result stays a detour.
pub fn make_minimal(d: &Digraph, p: &Path) -> Path {
    let allowed = p.vertex_set(d.order());
    let seq = if p.len() >= 2 {
        d.shortest_detour_within(p.first(), p.last(), &allowed)
    } else {
        d.shortest_path_within(p.first(), p.last(), &allowed)
    };
    Path::from_trusted(seq.expect("the path itself connects its endpoints"))
}

/// No shorter path between the endpoints exists inside `D⟨V(P)⟩`, apart from
/// the direct arc.
pub fn is_minimal(d: &Digraph, p: &Path) -> bool {
    make_minimal(d, p).len() == p.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::v;

    #[test]
    fn direct_arc_plus_detour() {
        let d = Digraph::from_arcs(4, [(1, 3), (1, 2), (2, 3)]).unwrap();
        assert_eq!(local_connectivity(&d, v(1), v(3)).unwrap(), 2);
        let sys = disjoint_path_system(&d, v(1), v(3), 2).unwrap().unwrap();
        sys.validate(&d).unwrap();
        assert!(local_connectivity(&d, v(1), v(1)).is_err());
    }

    #[test]
    fn not_enough_paths() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(disjoint_path_system(&d, v(0), v(2), 2).unwrap(), None);
        assert!(disjoint_path_system(&d, v(0), v(2), 0).is_err());
    }

    #[test]
    fn complete_and_cycle_strongness() {
        assert!(is_k_strong(&Digraph::complete(7), 6));
        assert!(!is_k_strong(&Digraph::complete(7), 7));
        assert!(!is_k_strong(&Digraph::cycle(5), 2));
        assert!(is_k_strong(&Digraph::cycle(5), 1));
        assert_eq!(strong_connectivity(&Digraph::complete(5)), 4);
        assert_eq!(strong_connectivity(&Digraph::cycle(5)), 1);
    }

    #[test]
    fn direct_arc_defeats_every_separator() {
        let d = Digraph::from_arcs(3, [(0, 1), (0, 2), (2, 1)]).unwrap();
        assert!(!is_separator(&d, &[v(2)], v(0), v(1)).unwrap());
        assert!(is_separator(&d, &[v(2)], v(0), v(1)).is_ok());
        assert!(is_separator(&d, &[v(0)], v(0), v(1)).is_err());
        let e = Digraph::from_arcs(3, [(0, 2), (2, 1)]).unwrap();
        assert!(is_separator(&e, &[v(2)], v(0), v(1)).unwrap());
    }

    #[test]
    fn chord_forces_shortcut() {
        // u=0 x=1 y=2 v=3 ; arcs u->x, x->y, y->v, u->y
        let d = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (0, 2)]).unwrap();
        let p = Path::new(&d, vec![v(0), v(1), v(2), v(3)]).unwrap();
        let m = make_minimal(&d, &p);
        assert_eq!(m.vertices(), &[v(0), v(2), v(3)]);
        assert_eq!(make_minimal(&d, &m), m);
        assert!(!is_minimal(&d, &p));
        assert!(is_minimal(&d, &m));
    }

    #[test]
    fn deleted_vertices_are_avoided() {
        let d = Digraph::complete(5);
        assert_eq!(local_connectivity_without(&d, v(0), v(1), &[v(2), v(3)]).unwrap(), 2);
        let sys = disjoint_path_system_with(&d, v(0), v(1), 2, &[v(2), v(3)], 1).unwrap().unwrap();
        sys.validate(&d).unwrap();
        assert!(sys.paths.iter().all(|p| !p.contains(v(2)) && !p.contains(v(3))));
        assert!(local_connectivity_without(&d, v(0), v(1), &[v(0)]).is_err());
    }
}
