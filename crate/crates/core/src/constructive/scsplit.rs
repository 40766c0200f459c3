//! Templates for semicomplete split digraphs with three paths on each side.
//!
//! The engine runs the forward templates and then the same templates on the
//! reversed digraph with the reversed systems, mapping any witness back.

use super::split::{back_arcs, crossing, head_pair, ordered_anchor_pairs, pigeonholes, tail_pair, Pigeonhole};
use super::{fire, join, one, seg, short_paths, Engine, TemplateContext};
use crate::graph::{Digraph, VertexId};
use crate::linkage::LinkageWitness;

/// How the anchors `z_i`, `w_i` are spread over `P_1..P_3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScSplitCase {
    /// Two `z`'s share a path and two `w`'s share a path.
    One,
    /// Two `z`'s share a path; the `w`'s are on distinct paths.
    Two,
    /// The reverse of [`ScSplitCase::Two`].
    TwoMirror,
    /// Every path carries at most one `z` and at most one `w`.
    Three,
    /// Some `Q_i` misses `S`, so an original pair is already disjoint.
    Unanchored,
}

fn crowded(ctx: &TemplateContext, anchors: &[Option<VertexId>]) -> bool {
    (0..ctx.paths_p.len()).any(|j| anchors.iter().filter(|x| x.is_some_and(|x| ctx.p(j).contains(x))).count() >= 2)
}

pub fn scsplit_case(ctx: &TemplateContext) -> ScSplitCase {
    if ctx.z_anchors.iter().chain(&ctx.w_anchors).any(Option::is_none) {
        return ScSplitCase::Unanchored;
    }
    match (crowded(ctx, &ctx.z_anchors), crowded(ctx, &ctx.w_anchors)) {
        (true, true) => ScSplitCase::One,
        (true, false) => ScSplitCase::Two,
        (false, true) => ScSplitCase::TwoMirror,
        (false, false) => ScSplitCase::Three,
    }
}

/// Disjoint original pairs, short `(s1, t1)`-paths, and the
/// `t_1^j -> s_1^k` bridge. When none of these fire on a not-good instance,
/// every `t_1^j` with some `z_i` on `P_j` and every `s_1^k` with some `w_i`
/// on `P_k` lies in the independent side.
pub fn claim_prefix_templates(d: &Digraph, ctx: &TemplateContext) -> Option<LinkageWitness> {
    prefix(&mut Engine::new(d, ctx))
}

fn prefix(e: &mut Engine) -> Option<LinkageWitness> {
    let ctx = e.ctx;
    let q = ctx.query;
    fire!(e.pair_pools("S4-disjoint-pair"));
    // Two interior vertices miss one of three internally disjoint Q_i.
    let max_len = ctx.paths_q.len();
    for p in short_paths(e.d, q.s1, q.t1, &[q.s2, q.t2], max_len) {
        fire!(e.p("S4-short-path", Some(p.into_vertices())));
    }
    let nq = ctx.paths_q.len();
    for i in 0..nq {
        let Some((j, _)) = ctx.z_anchors[i].and_then(|z| ctx.locate(z)) else {
            continue;
        };
        for i2 in 0..nq {
            let Some((k, _)) = ctx.w_anchors[i2].and_then(|w| ctx.locate(w)) else {
                continue;
            };
            let (z, w) = (ctx.z_anchors[i].unwrap(), ctx.w_anchors[i2].unwrap());
            let walk = join(&[
                seg(ctx.q(i), q.s2, z),
                seg(ctx.p(j), z, ctx.pred_t[j]),
                seg(ctx.p(k), ctx.succ_s[k], w),
                seg(ctx.q(i2), w, q.t2),
            ]);
            fire!(e.q("S4-C1-bridge", walk));
        }
    }
    None
}

/// `Q_i[s2, z_i] ∘ P_j[z_i, w_{i2}] ∘ Q_{i2}[w_{i2}, t2]` whenever both
/// anchors sit on `P_j` in that order.
fn zw_direct(e: &mut Engine) -> Option<LinkageWitness> {
    let ctx = e.ctx;
    let q = ctx.query;
    for j in 0..ctx.paths_p.len() {
        let p = ctx.p(j);
        let nq = ctx.paths_q.len();
        for i in 0..nq {
            for i2 in 0..nq {
                let (Some(z), Some(w)) = (ctx.z_anchors[i], ctx.w_anchors[i2]) else {
                    continue;
                };
                let walk = join(&[seg(ctx.q(i), q.s2, z), seg(p, z, w), seg(ctx.q(i2), w, q.t2)]);
                fire!(e.q("S4-zw-direct", walk));
            }
        }
    }
    None
}

fn case_one(e: &mut Engine, ph: &Pigeonhole) -> Option<LinkageWitness> {
    let ctx = e.ctx;
    let q = ctx.query;
    let (s1, t1, s2, t2) = (q.s1, q.t1, q.s2, q.t2);
    let Pigeonhole { i0, j0, ip, kp, lp, a, b, c, d, .. } = *ph;
    let (pi, pj) = (ctx.p(i0), ctx.p(j0));
    let zi = ctx.z_anchors[ip].expect("pigeonhole anchors exist");
    let head = seg(ctx.q(ip), s2, zi);
    let tails: Vec<_> = [kp, lp]
        .into_iter()
        .map(|k| {
            let w = ctx.w_anchors[k].expect("pigeonhole anchors exist");
            (w, seg(ctx.q(k), w, t2))
        })
        .collect();

    for (wk, tail) in &tails {
        fire!(e.q("S4-C1-ac", join(&[head.clone(), seg(pi, zi, a), seg(pj, c, *wk), tail.clone()])));
    }
    fire!(e.p("S4-C1-cab", join(&[one(s1), one(c), one(a), one(b), one(t1)])));

    let (Some(qa), Some(qb), Some(qc)) = (ctx.q_owner(a), ctx.q_owner(b), ctx.q_owner(c)) else {
        return None;
    };
    let (wk, tail_k) = tails[0].clone();
    for k0 in (0..ctx.paths_p.len()).filter(|&k| k != i0 && k != j0) {
        let pk = ctx.p(k0);
        fire!(e.q("S4-C1-reroute", join(&[head.clone(), seg(pi, zi, a), seg(ctx.q(qa), a, t2)])));
        fire!(e.q("S4-C1-reroute", join(&[head.clone(), seg(pi, zi, b), seg(ctx.q(qb), b, t2)])));
        fire!(e.q("S4-C1-reroute", join(&[seg(ctx.q(qc), s2, c), seg(pj, c, wk), tail_k.clone()])));

        let (Some(x1), Some(x2), Some(x3)) =
            (crossing(ctx.q(qa), a, pk, true), crossing(ctx.q(qb), b, pk, true), crossing(ctx.q(qc), c, pk, false))
        else {
            continue;
        };
        let q3 = ctx.q(qc);
        let late = [(x1, ctx.q(qa)), (x2, ctx.q(qb))];
        for &(xq, q_q) in &late {
            fire!(e.q("S4-C1-cross", join(&[seg(q3, s2, x3), seg(pk, x3, xq), seg(q_q, xq, t2)])));
        }
        for &lq in &late {
            fire!(back_arcs(e, "S4-C1-back-arc", pk, (x3, q3), lq));
        }
        // Final dichotomies on c–x and d–x3.
        for (wl, tail) in &tails {
            fire!(e.q("S4-C1-final", join(&[seg(q3, s2, x3), seg(pj, d, *wl), tail.clone()])));
        }
        for &(xb, _) in &late {
            fire!(e.p("S4-C1-final", join(&[one(s1), one(c), seg(pk, xb, t1)])));
            fire!(e.p("S4-C1-final", join(&[seg(pk, s1, xb), one(c), one(a), one(b), one(t1)])));
        }
        fire!(e.p("S4-C1-final", join(&[seg(pj, s1, d), seg(pk, x3, t1)])));
    }
    None
}

fn case_two(e: &mut Engine) -> Option<LinkageWitness> {
    let ctx = e.ctx;
    let q = ctx.query;
    let (s1, t1, s2, t2) = (q.s1, q.t1, q.s2, q.t2);
    let np = ctx.paths_p.len();
    let nq = ctx.paths_q.len();
    for i0 in 0..np {
        let pi = ctx.p(i0);
        let Some((a, b)) = tail_pair(pi) else {
            continue;
        };
        for (ip, _) in ordered_anchor_pairs(pi, &ctx.z_anchors) {
            let zi = ctx.z_anchors[ip].expect("paired anchors exist");
            let head = seg(ctx.q(ip), s2, zi);
            for j3 in (0..np).filter(|&j| j != i0) {
                let pj = ctx.p(j3);
                let Some((c, _)) = head_pair(pj) else {
                    continue;
                };
                for i3 in (0..nq).filter(|&i| ctx.w_anchors[i].is_some_and(|w| pj.contains(w))) {
                    let w3 = ctx.w_anchors[i3].unwrap();
                    let tail3 = seg(ctx.q(i3), w3, t2);
                    fire!(e.q("S4-C2-ac", join(&[head.clone(), seg(pi, zi, a), seg(pj, c, w3), tail3.clone()])));
                    fire!(e.p("S4-C2-cab", join(&[one(s1), one(c), one(a), one(b), one(t1)])));
                    if let Some(qc) = ctx.q_owner(c) {
                        fire!(e.q("S4-C2-detour", join(&[seg(ctx.q(qc), s2, c), seg(pj, c, w3), tail3.clone()])));
                    }
                }
                for i1 in (0..nq).filter(|&i| ctx.w_anchors[i].is_some_and(|w| pi.contains(w))) {
                    let w1 = ctx.w_anchors[i1].unwrap();
                    let walk =
                        join(&[head.clone(), seg(pi, zi, a), seg(pi, ctx.succ_s[i0], w1), seg(ctx.q(i1), w1, t2)]);
                    fire!(e.q("S4-C2-detour", walk));
                }
            }
        }
    }
    None
}

fn case_three(e: &mut Engine) -> Option<LinkageWitness> {
    let ctx = e.ctx;
    let q = ctx.query;
    let (s1, t1, s2, t2) = (q.s1, q.t1, q.s2, q.t2);
    let np = ctx.paths_p.len();
    let nq = ctx.paths_q.len();
    // A long P_j with w before z: go round through the bypass arcs.
    for j in 0..np {
        let p = ctx.p(j);
        let v = p.vertices();
        if v.len() < 6 {
            continue;
        }
        let (s, t) = (ctx.succ_s[j], ctx.pred_t[j]);
        let (u1, v1) = (v[2], v[v.len() - 3]);
        for i in 0..nq {
            for i2 in 0..nq {
                let (Some(z), Some(w)) = (ctx.z_anchors[i], ctx.w_anchors[i2]) else {
                    continue;
                };
                let walk =
                    join(&[seg(ctx.q(i), s2, z), seg(p, z, t), seg(p, u1, v1), seg(p, s, w), seg(ctx.q(i2), w, t2)]);
                fire!(e.q("S4-C5-trail", walk));
            }
        }
    }
    // s2 hops onto a stretch of one P_j and off again.
    for j in 0..np {
        let inner = ctx.p(j).interior();
        for (x, &u) in inner.iter().enumerate() {
            for &w in &inner[x..] {
                fire!(e.q("S4-C3-hop", join(&[one(s2), seg(ctx.p(j), u, w), one(t2)])));
            }
        }
    }
    // Rigid structure: every P_j = s1 s_1^j y_j t_1^j t1.
    let ys: Vec<VertexId> = (0..np).filter(|&j| ctx.p(j).len() == 4).map(|j| ctx.p(j).vertices()[2]).collect();
    for &y in &ys {
        for &ta in &ctx.pred_t {
            for &sc in &ctx.succ_s {
                fire!(e.q("S4-C3-y-dichotomy", join(&[one(s2), one(ta), one(y), one(sc), one(t2)])));
                fire!(e.p("S4-C3-y-dichotomy", join(&[one(s1), one(sc), one(y), one(ta), one(t1)])));
            }
        }
    }
    None
}

fn forward(d: &Digraph, ctx: &TemplateContext) -> Option<LinkageWitness> {
    let mut e = Engine::new(d, ctx);
    fire!(prefix(&mut e));
    for ph in pigeonholes(ctx) {
        fire!(case_one(&mut e, &ph));
    }
    fire!(zw_direct(&mut e));
    fire!(case_two(&mut e));
    fire!(case_three(&mut e));
    None
}

/// Semicomplete-split engine in the context's orientation.
pub fn apply_scsplit_templates(d: &Digraph, ctx: &TemplateContext) -> Option<LinkageWitness> {
    fire!(forward(d, ctx));
    let rd = d.reverse();
    let rctx = ctx.reversed(&rd);
    let w = forward(&rd, &rctx)?.reversed();
    LinkageWitness::new(d, &ctx.query, w.p1, w.p2, w.provenance).ok()
}
