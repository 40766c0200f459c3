//! Brute-force reference implementations, independent of the library's
//! algorithms. Vertex sets are `u32` bitmasks, so these only work up to 32
//! vertices and are meant for much smaller inputs.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use splitlink::{v, Digraph, DigraphBuilder, LinkageQuery};

pub fn adjacency(d: &Digraph) -> Vec<u32> {
    let mut out = vec![0u32; d.order()];
    for (a, b) in d.arcs() {
        out[a.index()] |= 1 << b.index();
    }
    out
}

/// Every simple path from `s` to `t` avoiding `blocked`, as vertex lists.
pub fn simple_paths(adj: &[u32], s: usize, t: usize, blocked: u32) -> Vec<Vec<usize>> {
    fn go(adj: &[u32], t: usize, blocked: u32, path: &mut Vec<usize>, seen: u32, out: &mut Vec<Vec<usize>>) {
        let x = *path.last().unwrap();
        if x == t {
            out.push(path.clone());
            return;
        }
        for y in 0..adj.len() {
            let bit = 1 << y;
            if adj[x] & bit != 0 && seen & bit == 0 && blocked & bit == 0 {
                path.push(y);
                go(adj, t, blocked, path, seen | bit, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    if blocked & (1 << s) != 0 || blocked & (1 << t) != 0 {
        return out;
    }
    go(adj, t, blocked, &mut vec![s], 1 << s, &mut out);
    out
}

fn interior_mask(p: &[usize]) -> u32 {
    p[1..p.len() - 1].iter().fold(0, |m, &x| m | 1 << x)
}

fn vertex_mask(p: &[usize]) -> u32 {
    p.iter().fold(0, |m, &x| m | 1 << x)
}

/// Largest family of pairwise internally disjoint `(s, t)`-paths, by
/// exhaustive search over all simple paths.
pub fn brute_kappa(d: &Digraph, s: usize, t: usize, deleted: &[usize]) -> usize {
    let adj = adjacency(d);
    let blocked = deleted.iter().fold(0, |m, &x| m | 1 << x);
    let mut masks: Vec<u32> = simple_paths(&adj, s, t, blocked).iter().map(|p| interior_mask(p)).collect();
    masks.sort_by_key(|m| m.count_ones());
    masks.dedup();
    fn best(masks: &[u32], from: usize, used: u32, count: usize, top: &mut usize) {
        *top = (*top).max(count);
        for i in from..masks.len() {
            if masks[i] & used == 0 {
                best(masks, i + 1, used | masks[i], count + 1, top);
            }
        }
    }
    let mut top = 0;
    best(&masks, 0, 0, 0, &mut top);
    top
}

fn reaches_all(adj: &[u32], alive: u32) -> bool {
    let Some(start) = (0..adj.len()).find(|&x| alive & (1 << x) != 0) else {
        return true;
    };
    let closure = |fwd: bool| {
        let mut seen = 1u32 << start;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for y in 0..adj.len() {
                let arc = if fwd { adj[x] & (1 << y) != 0 } else { adj[y] & (1 << x) != 0 };
                if arc && alive & (1 << y) != 0 && seen & (1 << y) == 0 {
                    seen |= 1 << y;
                    stack.push(y);
                }
            }
        }
        seen
    };
    closure(true) == alive && closure(false) == alive
}

/// `D - X` is strong for every `X` with `|X| < k`, and `|V| > k`.
pub fn brute_k_strong(d: &Digraph, k: usize) -> bool {
    let n = d.order();
    if n < k + 1 {
        return false;
    }
    let adj = adjacency(d);
    let all = (1u32 << n) - 1;
    (0..=all).filter(|x: &u32| (x.count_ones() as usize) < k).all(|x| reaches_all(&adj, all & !x))
}

/// Whether some `(s1, t1)`-path and `(s2, t2)`-path are vertex-disjoint.
pub fn brute_linked(d: &Digraph, q: &LinkageQuery) -> bool {
    let adj = adjacency(d);
    let [s1, t1, s2, t2] = q.terminals().map(|x| x.index());
    let ps = simple_paths(&adj, s1, t1, 1 << s2 | 1 << t2);
    let qs: Vec<u32> = simple_paths(&adj, s2, t2, 1 << s1 | 1 << t1).iter().map(|p| vertex_mask(p)).collect();
    ps.iter().any(|p| {
        let m = vertex_mask(p);
        qs.iter().any(|&q| q & m == 0)
    })
}

/// Some 2-colouring with a nonempty independent side and a nonempty
/// semicomplete side.
pub fn brute_is_split(d: &Digraph) -> bool {
    let n = d.order();
    let adj = adjacency(d);
    let adjacent = |a: usize, b: usize| adj[a] & (1 << b) != 0 || adj[b] & (1 << a) != 0;
    (1u32..(1 << n) - 1).any(|v1| {
        (0..n).all(|a| {
            (a + 1..n).all(|b| {
                let (ia, ib) = (v1 & (1 << a) != 0, v1 & (1 << b) != 0);
                match (ia, ib) {
                    (true, true) => !adjacent(a, b),
                    (false, false) => adjacent(a, b),
                    _ => true,
                }
            })
        })
    })
}

/// A uniformly random digraph with arc probability `p`.
pub fn random_digraph(n: usize, p: f64, seed: u64) -> Digraph {
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut b = DigraphBuilder::new(n);
    for a in 0..n {
        for c in 0..n {
            if a != c && rng.gen_bool(p) {
                b.add_arc(v(a), v(c)).unwrap();
            }
        }
    }
    b.build()
}

/// A random query of four distinct vertices.
pub fn random_query(n: usize, seed: u64) -> LinkageQuery {
    let mut rng = SplitMix64::seed_from_u64(seed ^ 0xA5A5);
    let t = rand::seq::index::sample(&mut rng, n, 4).into_vec();
    LinkageQuery::of(t[0], t[1], t[2], t[3])
}

/// Whether no strictly shorter path with the same ends lies inside the span
/// of `p`. The direct arc between the ends only counts for one-arc paths.
pub fn brute_minimal(d: &Digraph, p: &[usize]) -> bool {
    let adj = adjacency(d);
    let span = vertex_mask(p);
    let (s, t) = (p[0], *p.last().unwrap());
    let len = p.len() - 1;
    simple_paths(&adj, s, t, !span).iter().map(|q| q.len() - 1).filter(|&l| len == 1 || l >= 2).all(|l| l >= len)
}
