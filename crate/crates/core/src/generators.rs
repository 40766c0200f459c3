//! Instance factories: the 13-vertex split counterexample and seeded random
//! families.
//!
//! Randomness comes from SplitMix64 (`rand_xoshiro::SplitMix64`), whose output
//! stream is fixed by its published constants, so a [`GenSpec`] reproduces the
//! same digraph on every platform. When `k_strong > 0` the generator rejection
//! samples from one continuing stream until the instance is k-strong. For the
//! split families a dense `p_arc` (≥ 0.5) and `n2 ≥ k + 1` keep the rejection
//! rate reasonable.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classes::SplitPartition;
use crate::connectivity::is_k_strong;
use crate::graph::{Digraph, DigraphBuilder, VertexId};
use crate::linkage::LinkageQuery;

/// Random family selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Fig1,
    RandomSplit,
    RandomScSplit,
    RandomSmp,
    RandomTournament,
    RandomSemicomplete,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Fig1,
        Family::RandomSplit,
        Family::RandomScSplit,
        Family::RandomSmp,
        Family::RandomTournament,
        Family::RandomSemicomplete,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Fig1 => "fig1",
            Family::RandomSplit => "random-split",
            Family::RandomScSplit => "random-scsplit",
            Family::RandomSmp => "random-smp",
            Family::RandomTournament => "random-tournament",
            Family::RandomSemicomplete => "random-semicomplete",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| GenError::InvalidSpec(format!("unknown family `{s}`")))
    }
}

/// Parameters of one random instance.
///
/// `n1`/`n2` are the independent and semicomplete side sizes for the split
/// families; for the other families the order is `n1 + n2`. `parts` is the
/// number of partite sets for `random-smp` (0 picks `max(2, n / 2)`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub family: Family,
    pub n1: usize,
    pub n2: usize,
    pub parts: usize,
    pub p_arc: f64,
    pub p_bidir: f64,
    pub k_strong: usize,
    pub seed: u64,
    pub max_attempts: usize,
}

pub const DEFAULT_MAX_ATTEMPTS: usize = 500;

impl GenSpec {
    pub fn new(family: Family, n1: usize, n2: usize) -> Self {
        GenSpec {
            family,
            n1,
            n2,
            parts: 0,
            p_arc: 0.5,
            p_bidir: 0.3,
            k_strong: 0,
            seed: 0,
            max_attempts: DEFAULT_MAX_ATTEMPTS,
        }
    }

    pub fn order(&self) -> usize {
        if self.family == Family::Fig1 {
            13
        } else {
            self.n1 + self.n2
        }
    }

    pub fn validate(&self) -> Result<(), GenError> {
        let prob = |name: &str, p: f64| {
            if (0.0..=1.0).contains(&p) {
                Ok(())
            } else {
                Err(GenError::InvalidSpec(format!("{name} = {p} is not a probability")))
            }
        };
        prob("p_arc", self.p_arc)?;
        prob("p_bidir", self.p_bidir)?;
        if self.family == Family::Fig1 {
            return Ok(());
        }
        if self.k_strong > 0 && self.order() < self.k_strong + 1 {
            return Err(GenError::InvalidSpec(format!("{} vertices cannot be {}-strong", self.order(), self.k_strong)));
        }
        match self.family {
            Family::RandomSplit | Family::RandomScSplit if self.n1 == 0 || self.n2 == 0 => {
                Err(GenError::InvalidSpec("split families need n1 >= 1 and n2 >= 1".into()))
            }
            Family::RandomSmp if self.order() < 2 => Err(GenError::InvalidSpec("need at least two vertices".into())),
            Family::RandomSmp if self.parts == 1 || self.parts > self.order() => {
                Err(GenError::InvalidSpec(format!("cannot split {} vertices into {} parts", self.order(), self.parts)))
            }
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error("no {k}-strong instance after {attempts} attempts")]
    Exhausted { k: usize, attempts: usize },
}

/// A generated digraph with its class certificate.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub digraph: Digraph,
    pub partition: Option<SplitPartition>,
    pub parts: Option<Vec<Vec<VertexId>>>,
    /// Number of rejection-sampling draws, including the accepted one.
    pub attempts: usize,
}

/// Labels of the counterexample digraph, in vertex-id order.
pub const FIG1_LABELS: [&str; 13] = ["s1", "t1", "s2", "t2", "x1", "x2", "x3", "y1", "y2", "y3", "z1", "z2", "z3"];

/// The 13-vertex split digraph with `κ_{D-{s2,t2}}(s1,t1) = 3`,
/// `κ_{D-{s1,t1}}(s2,t2) = 3` and no disjoint `(s1,t1)`-, `(s2,t2)`-paths.
///
/// Ids: `s1=0 t1=1 s2=2 t2=3`, `x_i = 3+i`, `y_i = 6+i`, `z_i = 9+i`.
pub fn fig1_counterexample() -> (Digraph, SplitPartition, LinkageQuery) {
    let (s1, t1, s2, t2) = (0usize, 1usize, 2usize, 3usize);
    let x = |i: usize| 4 + (i - 1) % 3;
    let y = |i: usize| 7 + (i - 1) % 3;
    let z = |i: usize| 10 + (i - 1) % 3;
    let mut arcs: Vec<(usize, usize)> = vec![(y(1), y(2)), (y(2), y(3)), (y(3), y(1))];
    arcs.extend([(s1, s2), (t1, s2), (s1, t2), (t1, t2), (t1, s1), (t2, s2)]);
    for i in 1..=3 {
        // {s1} |-> X, Z |-> {t1}, {t1} |-> Y, Y |-> {s1}
        arcs.extend([(s1, x(i)), (z(i), t1), (t1, y(i)), (y(i), s1)]);
        // x_i -> y_i -> z_i
        arcs.extend([(x(i), y(i)), (y(i), z(i))]);
        // X ∪ Y |-> {s2}, {s2} |-> Z, {t2} |-> Y ∪ Z, X |-> {t2}
        arcs.extend([(x(i), s2), (y(i), s2), (s2, z(i)), (t2, y(i)), (t2, z(i)), (x(i), t2)]);
        // z_i -> y_{i+1} -> x_{i+2}
        arcs.extend([(z(i), y(i + 1)), (y(i + 1), x(i + 2))]);
    }
    let d = Digraph::from_arcs(13, arcs)
        .expect("construction has no loops or repeated arcs")
        .with_labels(FIG1_LABELS)
        .expect("labels are unique");
    let v1 = (1..=3).flat_map(|i| [x(i), z(i)]).map(VertexId::from).collect();
    let partition = SplitPartition::from_v1(13, v1);
    (d, partition, LinkageQuery::of(s1, t1, s2, t2))
}

/// Put an arc (or both) on the pair `a, b`.
fn join(b: &mut DigraphBuilder, rng: &mut SplitMix64, a: usize, c: usize, p_bidir: f64) {
    let (a, c) = (VertexId::from(a), VertexId::from(c));
    if rng.gen_bool(p_bidir) {
        b.add_arc(a, c).expect("fresh pair");
        b.add_arc(c, a).expect("fresh pair");
    } else if rng.gen_bool(0.5) {
        b.add_arc(a, c).expect("fresh pair");
    } else {
        b.add_arc(c, a).expect("fresh pair");
    }
}

fn draw(spec: &GenSpec, rng: &mut SplitMix64) -> Instance {
    let n = spec.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut b = DigraphBuilder::new(n);
    let mut partition = None;
    let mut parts = None;
    match spec.family {
        Family::Fig1 => unreachable!("handled by the caller"),
        Family::RandomTournament | Family::RandomSemicomplete => {
            let p_bidir = if spec.family == Family::RandomTournament { 0.0 } else { spec.p_bidir };
            for a in 0..n {
                for c in a + 1..n {
                    join(&mut b, rng, a, c, p_bidir);
                }
            }
        }
        Family::RandomSplit | Family::RandomScSplit => {
            perm.shuffle(rng);
            let (side1, side2) = perm.split_at(spec.n1);
            for (i, &a) in side2.iter().enumerate() {
                for &c in &side2[i + 1..] {
                    join(&mut b, rng, a, c, spec.p_bidir);
                }
            }
            for &a in side1 {
                for &c in side2 {
                    if spec.family == Family::RandomScSplit {
                        join(&mut b, rng, a, c, spec.p_bidir);
                    } else {
                        if rng.gen_bool(spec.p_arc) {
                            b.add_arc(a.into(), c.into()).expect("fresh arc");
                        }
                        if rng.gen_bool(spec.p_arc) {
                            b.add_arc(c.into(), a.into()).expect("fresh arc");
                        }
                    }
                }
            }
            partition = Some(SplitPartition::new(
                side1.iter().map(|&a| a.into()).collect(),
                side2.iter().map(|&a| a.into()).collect(),
            ));
        }
        Family::RandomSmp => {
            let count = if spec.parts == 0 { (n / 2).max(2) } else { spec.parts };
            perm.shuffle(rng);
            let mut part_of = vec![0usize; n];
            for (i, &a) in perm.iter().enumerate() {
                part_of[a] = if i < count { i } else { rng.gen_range(0..count) };
            }
            for a in 0..n {
                for c in a + 1..n {
                    if part_of[a] != part_of[c] {
                        join(&mut b, rng, a, c, spec.p_bidir);
                    }
                }
            }
            let mut ps: Vec<Vec<VertexId>> = vec![Vec::new(); count];
            for (a, &p) in part_of.iter().enumerate() {
                ps[p].push(a.into());
            }
            ps.sort();
            parts = Some(ps);
        }
    }
    Instance { digraph: b.build(), partition, parts, attempts: 1 }
}

/// Seeded instance of `spec.family`.
pub fn random_instance(spec: &GenSpec) -> Result<Instance, GenError> {
    spec.validate()?;
    if spec.family == Family::Fig1 {
        let (digraph, partition, _) = fig1_counterexample();
        return Ok(Instance { digraph, partition: Some(partition), parts: None, attempts: 1 });
    }
    let k = spec.k_strong;
    // Each independent vertex has at most n2 out-neighbours.
    if k > 0 && matches!(spec.family, Family::RandomSplit | Family::RandomScSplit) && spec.n1 > 0 && spec.n2 < k {
        return Err(GenError::Exhausted { k, attempts: 0 });
    }
    let mut rng = SplitMix64::seed_from_u64(spec.seed);
    let attempts = if k == 0 { 1 } else { spec.max_attempts };
    for attempt in 1..=attempts {
        let mut inst = draw(spec, &mut rng);
        if k == 0 || is_k_strong(&inst.digraph, k) {
            inst.attempts = attempt;
            return Ok(inst);
        }
    }
    Err(GenError::Exhausted { k, attempts })
}

/// Derive a child seed from a parent seed and a stream index.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut rng = SplitMix64::seed_from_u64(seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    rng.gen()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{
        is_semicomplete, is_semicomplete_multipartite, is_semicomplete_split, is_tournament, split_partition,
        validate_partition,
    };

    #[test]
    fn fig1_shape() {
        let (d, p, q) = fig1_counterexample();
        assert_eq!(d.order(), 13);
        assert_eq!(d.arc_count(), 51);
        assert!(validate_partition(&d, &p).unwrap());
        assert_eq!(p.v1().len(), 6);
        assert_eq!(d.name(q.s1), "s1");
        assert_eq!(d.name(q.t2), "t2");
    }

    #[test]
    fn tournament_is_deterministic() {
        let mut spec = GenSpec::new(Family::RandomTournament, 0, 7);
        spec.seed = 1;
        let a = random_instance(&spec).unwrap();
        let b = random_instance(&spec).unwrap();
        assert!(is_tournament(&a.digraph));
        assert_eq!(a, b);
        spec.seed = 2;
        assert_ne!(random_instance(&spec).unwrap().digraph, a.digraph);
    }

    #[test]
    fn split_family_contract() {
        for seed in 0..20 {
            let mut spec = GenSpec::new(Family::RandomSplit, 3, 5);
            spec.seed = seed;
            let inst = random_instance(&spec).unwrap();
            let p = inst.partition.unwrap();
            assert!(validate_partition(&inst.digraph, &p).unwrap());
            assert!(split_partition(&inst.digraph).is_some());
        }
    }

    #[test]
    fn scsplit_and_smp_contracts() {
        for seed in 0..20 {
            let mut spec = GenSpec::new(Family::RandomScSplit, 3, 4);
            spec.seed = seed;
            let inst = random_instance(&spec).unwrap();
            assert!(is_semicomplete_split(&inst.digraph, inst.partition.as_ref()).unwrap());

            let mut spec = GenSpec::new(Family::RandomSmp, 3, 5);
            spec.seed = seed;
            spec.parts = 3;
            let inst = random_instance(&spec).unwrap();
            assert_eq!(is_semicomplete_multipartite(&inst.digraph), inst.parts);

            let mut spec = GenSpec::new(Family::RandomSemicomplete, 2, 4);
            spec.seed = seed;
            assert!(is_semicomplete(&random_instance(&spec).unwrap().digraph));
        }
    }

    #[test]
    fn impossible_strongness_is_exhausted() {
        let mut spec = GenSpec::new(Family::RandomSplit, 3, 5);
        spec.k_strong = 6;
        assert!(matches!(random_instance(&spec), Err(GenError::Exhausted { k: 6, .. })));
    }

    #[test]
    fn invalid_specs() {
        let mut spec = GenSpec::new(Family::RandomSplit, 3, 5);
        spec.p_arc = 1.5;
        assert!(matches!(random_instance(&spec), Err(GenError::InvalidSpec(_))));
        let mut spec = GenSpec::new(Family::RandomSplit, 1, 2);
        spec.k_strong = 3;
        assert!(matches!(random_instance(&spec), Err(GenError::InvalidSpec(_))));
        assert!("random-split".parse::<Family>().is_ok());
        assert!("nope".parse::<Family>().is_err());
    }
}
