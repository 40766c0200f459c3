//! 6-strong semicomplete multipartite digraphs: four `(s1, t1)`-paths and
//! one `(s2, t2)`-path.

use super::{fire, join, one, seg, short_paths, Engine, Mode, TemplateContext};
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::linkage::{LinkageWitness, Provenance};
use crate::path::Path;

/// Short-path shortcut, then the tail-jump surgeries around `z` and `w`.
///
/// A context can only be built for a 6-strong semicomplete multipartite
/// digraph, so deleting a path with at most three interior vertices leaves
/// `D - P` strong and the breadth-first `(s2, t2)`-path always exists.
pub fn apply_smp_shortcut(d: &Digraph, ctx: &TemplateContext) -> Result<Option<LinkageWitness>> {
    if ctx.mode != Mode::Smp {
        return Err(Error::domain("context was not built for semicomplete multipartite digraphs"));
    }
    let q = ctx.query;
    for p in short_paths(d, q.s1, q.t1, &[q.s2, q.t2], 4) {
        let blocked = p.vertex_set(d.order());
        if let Some(other) = d.shortest_path_avoiding(q.s2, q.t2, &blocked) {
            let w = LinkageWitness::new(d, &q, p, Path::new(d, other)?, Provenance::Shortcut)?;
            return Ok(Some(w));
        }
    }
    Ok(surgeries(&mut Engine::new(d, ctx)))
}

fn surgeries(e: &mut Engine) -> Option<LinkageWitness> {
    let ctx = e.ctx;
    let q = ctx.query;
    let (s2, t2) = (q.s2, q.t2);
    fire!(e.pair_pools("S5-disjoint-pair"));
    let q1 = ctx.q(0);
    let (z, w) = (ctx.z_anchors[0]?, ctx.w_anchors[0]?);
    let (jz, _) = ctx.locate(z)?;
    let (j0, _) = ctx.locate(w)?;
    let (pz, pw) = (ctx.p(jz), ctx.p(j0));
    let tm = ctx.pred_t[jz];
    let sp = ctx.succ_s[j0];
    let spp = pw.successor(sp)?;
    for s in [sp, spp] {
        fire!(e.q("S5-tail-jump", join(&[seg(q1, s2, z), seg(pz, z, tm), seg(pw, s, w), seg(q1, w, t2)])));
    }
    let before_t = ctx.pred_t[j0];
    for &u in seg(pw, spp, before_t)?.iter() {
        let walk = join(&[seg(q1, s2, z), seg(pz, z, tm), seg(pw, spp, u), one(sp), seg(q1, sp, t2)]);
        fire!(e.q("S5-u-detour", walk));
    }
    None
}
