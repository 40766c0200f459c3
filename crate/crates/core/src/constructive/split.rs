//! Templates for split digraphs with three `(s1, t1)`-paths and four
//! `(s2, t2)`-paths.

use super::{fire, join, one, seg, short_paths, Engine, TemplateContext};
use crate::graph::{Digraph, VertexId};
use crate::linkage::LinkageWitness;
use crate::path::Path;

/// One pigeonhole choice: `z_{i'}` before `z_{j'}` on `P_{i0}`, `w_{k'}`
/// before `w_{l'}` on `P_{j0}`; `b`, `a` are the last two interior vertices
/// of `P_{i0}` and `c`, `d` the first two of `P_{j0}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Pigeonhole {
    pub i0: usize,
    pub j0: usize,
    pub ip: usize,
    pub jp: usize,
    pub kp: usize,
    pub lp: usize,
    pub a: VertexId,
    pub b: VertexId,
    pub c: VertexId,
    pub d: VertexId,
}

/// Ordered pairs `(i, j)` of distinct `Q` indices whose anchors lie on `p`
/// with `anchor(i)` first.
pub(crate) fn ordered_anchor_pairs(p: &Path, anchors: &[Option<VertexId>]) -> Vec<(usize, usize)> {
    let pos = |i: usize| anchors[i].and_then(|x| p.position(x));
    let mut out = Vec::new();
    for i in 0..anchors.len() {
        for j in 0..anchors.len() {
            if let (Some(x), Some(y)) = (pos(i), pos(j)) {
                if x < y {
                    out.push((i, j));
                }
            }
        }
    }
    out
}

/// Last two interior vertices `(a, b)` of `p`.
pub(crate) fn tail_pair(p: &Path) -> Option<(VertexId, VertexId)> {
    let v = p.vertices();
    (v.len() >= 4).then(|| (v[v.len() - 3], v[v.len() - 2]))
}

/// First two interior vertices `(c, d)` of `p`.
pub(crate) fn head_pair(p: &Path) -> Option<(VertexId, VertexId)> {
    let v = p.vertices();
    (v.len() >= 4).then(|| (v[1], v[2]))
}

pub(crate) fn pigeonholes(ctx: &TemplateContext) -> Vec<Pigeonhole> {
    let np = ctx.paths_p.len();
    let mut out = Vec::new();
    for i0 in 0..np {
        let Some((a, b)) = tail_pair(ctx.p(i0)) else {
            continue;
        };
        let zs = ordered_anchor_pairs(ctx.p(i0), &ctx.z_anchors);
        for j0 in 0..np {
            let Some((c, d)) = head_pair(ctx.p(j0)) else {
                continue;
            };
            let ws = ordered_anchor_pairs(ctx.p(j0), &ctx.w_anchors);
            for &(ip, jp) in &zs {
                for &(kp, lp) in &ws {
                    out.push(Pigeonhole { i0, j0, ip, jp, kp, lp, a, b, c, d });
                }
            }
        }
    }
    out
}

/// `x` on `q` strictly after (`after = true`) or before `from`, lying on
/// `pk`, chosen nearest to `t1` (after) or to `s1` (before) along `pk`.
pub(crate) fn crossing(q: &Path, from: VertexId, pk: &Path, after: bool) -> Option<VertexId> {
    let at = q.position(from)?;
    let side: &[VertexId] = if after { &q.vertices()[at + 1..] } else { &q.vertices()[..at] };
    let hits = side.iter().copied().filter_map(|x| pk.position(x).filter(|&i| i > 0 && i < pk.len()).map(|i| (i, x)));
    if after {
        hits.max().map(|(_, x)| x)
    } else {
        hits.min().map(|(_, x)| x)
    }
}

/// Reroute `Q_r[s2, xr] ∘ P[xr, u] ∘ uv ∘ P[v, xq] ∘ Q_q[xq, t2]` for every
/// back arc `u -> v` of `P` with `u` at or after `xr` and `v` at or before
/// `xq`.
pub(crate) fn back_arcs(
    e: &mut Engine,
    id: &'static str,
    pk: &Path,
    (xr, qr): (VertexId, &Path),
    (xq, qq): (VertexId, &Path),
) -> Option<LinkageWitness> {
    let (s2, t2) = (e.ctx.query.s2, e.ctx.query.t2);
    let d = e.d;
    let (ir, iq) = (pk.position(xr)?, pk.position(xq)?);
    let v = pk.vertices();
    for &u in &v[ir..v.len() - 1] {
        for &w in &v[1..=iq] {
            if u != w && d.has_arc(u, w) {
                fire!(e.q(id, join(&[seg(qr, s2, xr), seg(pk, xr, u), seg(pk, w, xq), seg(qq, xq, t2)])));
            }
        }
    }
    None
}

/// Split-mode engine in the context's orientation.
pub fn apply_split_templates(d: &Digraph, ctx: &TemplateContext) -> Option<LinkageWitness> {
    let mut e = Engine::new(d, ctx);
    let q = ctx.query;
    fire!(e.pair_pools("S3-disjoint-pair"));
    // Three interior vertices miss one of four internally disjoint Q_i.
    for p in short_paths(d, q.s1, q.t1, &[q.s2, q.t2], 4) {
        fire!(e.p("S3-short-path", Some(p.into_vertices())));
    }
    for ph in pigeonholes(ctx) {
        fire!(pigeonhole_templates(&mut e, &ph));
    }
    None
}

fn pigeonhole_templates(e: &mut Engine, ph: &Pigeonhole) -> Option<LinkageWitness> {
    let ctx = e.ctx;
    let q = ctx.query;
    let (s1, t1, s2, t2) = (q.s1, q.t1, q.s2, q.t2);
    let Pigeonhole { i0, j0, ip, jp, kp, lp, a, b, c, d } = *ph;
    let (pi, pj) = (ctx.p(i0), ctx.p(j0));
    let z = |i: usize| ctx.z_anchors[i].expect("pigeonhole anchors exist");
    let w = |i: usize| ctx.w_anchors[i].expect("pigeonhole anchors exist");
    let heads = [(z(ip), seg(ctx.q(ip), s2, z(ip))), (z(jp), seg(ctx.q(jp), s2, z(jp)))];
    let tails = [(w(kp), seg(ctx.q(kp), w(kp), t2)), (w(lp), seg(ctx.q(lp), w(lp), t2))];

    // c adjacent to a or b.
    for f in [a, b] {
        for (zi, head) in &heads {
            for (wk, tail) in &tails {
                fire!(e.q("S3-C1-case1", join(&[head.clone(), seg(pi, *zi, f), seg(pj, c, *wk), tail.clone()])));
            }
        }
    }
    fire!(e.p("S3-C1-case2", join(&[one(s1), one(c), one(a), one(b), one(t1)])));
    fire!(e.p("S3-C1-case2", join(&[one(s1), one(c), one(b), one(t1)])));
    // b adjacent to d.
    for (zi, head) in &heads {
        for (wk, tail) in &tails {
            fire!(e.q("S3-C1-bd", join(&[head.clone(), seg(pi, *zi, b), seg(pj, d, *wk), tail.clone()])));
        }
    }
    fire!(e.p("S3-C1-bd", join(&[one(s1), one(c), one(d), one(b), one(t1)])));
    // a -> d, else d -> a and s1 c d a b t1.
    for (zi, head) in &heads {
        for (wk, tail) in &tails {
            fire!(e.q("S3-C2-ad", join(&[head.clone(), seg(pi, *zi, a), seg(pj, d, *wk), tail.clone()])));
        }
    }
    fire!(e.p("S3-C2-ad", join(&[one(s1), one(c), one(d), one(a), one(b), one(t1)])));

    let (Some(qa), Some(qb), Some(qc), Some(qd)) = (ctx.q_owner(a), ctx.q_owner(b), ctx.q_owner(c), ctx.q_owner(d))
    else {
        return None;
    };
    let (za, head_a) = heads[0].clone();
    let (wk, tail_k) = tails[0].clone();
    for k0 in (0..ctx.paths_p.len()).filter(|&k| k != i0 && k != j0) {
        let pk = ctx.p(k0);
        fire!(e.q("S3-C3-reroute", join(&[head_a.clone(), seg(pi, za, a), seg(ctx.q(qa), a, t2)])));
        fire!(e.q("S3-C3-reroute", join(&[head_a.clone(), seg(pi, za, b), seg(ctx.q(qb), b, t2)])));
        fire!(e.q("S3-C3-reroute", join(&[seg(ctx.q(qc), s2, c), seg(pj, c, wk), tail_k.clone()])));
        fire!(e.q("S3-C3-reroute", join(&[seg(ctx.q(qd), s2, d), seg(pj, d, wk), tail_k.clone()])));

        let (Some(x1), Some(x2), Some(x3), Some(x4)) = (
            crossing(ctx.q(qa), a, pk, true),
            crossing(ctx.q(qb), b, pk, true),
            crossing(ctx.q(qc), c, pk, false),
            crossing(ctx.q(qd), d, pk, false),
        ) else {
            continue;
        };
        let late = [(x1, ctx.q(qa)), (x2, ctx.q(qb))];
        let early = [(x3, ctx.q(qc)), (x4, ctx.q(qd))];
        for &(xq, q_q) in &late {
            for &(xr, q_r) in &early {
                fire!(e.q("S3-C3-cross", join(&[seg(q_r, s2, xr), seg(pk, xr, xq), seg(q_q, xq, t2)])));
            }
        }
        for &lq in &late {
            for &er in &early {
                fire!(back_arcs(e, "S3-C4-back-arc", pk, er, lq));
            }
        }
        for &(xq, _) in &late {
            fire!(e.p("S3-final-d-x", join(&[seg(pj, s1, d), seg(pk, xq, t1)])));
            fire!(e.p("S3-final-d-x", join(&[seg(pk, s1, xq), one(d), seg(pi, a, t1)])));
        }
    }
    None
}
