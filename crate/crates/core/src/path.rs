//! Directed paths and the slice/concatenation algebra used by path surgery.

use std::collections::HashSet;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Digraph, VertexId};

/// Which end of a [`Path::subpath`] slice is kept.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bounds {
    /// `P[x, y]`
    Closed,
    /// `P[x, y)`, the slice stops just before `y`.
    HalfOpen,
}

/// A sequence of distinct vertices, each consecutive pair an arc of the
/// digraph it was validated against.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    vertices: Vec<VertexId>,
}

impl Path {
    /// Validate `vertices` as a path of `d`.
    pub fn new(d: &Digraph, vertices: Vec<VertexId>) -> Result<Path> {
        let p = Path { vertices };
        p.validate(d)?;
        Ok(p)
    }

    pub fn trivial(x: VertexId) -> Path {
        Path { vertices: vec![x] }
    }

    pub(crate) fn from_trusted(vertices: Vec<VertexId>) -> Path {
        debug_assert!(!vertices.is_empty());
        Path { vertices }
    }

    /// Re-check the path invariants against `d`.
    pub fn validate(&self, d: &Digraph) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(Error::EmptyPath);
        }
        let mut seen = FixedBitSet::with_capacity(d.order());
        for &x in &self.vertices {
            d.check_vertex(x)?;
            if seen.put(x.index()) {
                return Err(Error::RepeatedVertex(x));
            }
        }
        for w in self.vertices.windows(2) {
            if !d.has_arc(w[0], w[1]) {
                return Err(Error::MissingArc(w[0], w[1]));
            }
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<VertexId> {
        self.vertices
    }

    pub fn first(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last(&self) -> VertexId {
        *self.vertices.last().expect("paths are nonempty")
    }

    /// Number of arcs.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    /// A single-vertex path has no arcs.
    pub fn is_trivial(&self) -> bool {
        self.vertices.len() == 1
    }

    /// Vertices strictly between the endpoints.
    pub fn interior(&self) -> &[VertexId] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }

    pub fn contains(&self, x: VertexId) -> bool {
        self.vertices.contains(&x)
    }

    pub fn position(&self, x: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&y| y == x)
    }

    pub fn predecessor(&self, x: VertexId) -> Option<VertexId> {
        self.position(x).filter(|&i| i > 0).map(|i| self.vertices[i - 1])
    }

    pub fn successor(&self, x: VertexId) -> Option<VertexId> {
        self.position(x).and_then(|i| self.vertices.get(i + 1).copied())
    }

    /// `P[x, y]` or `P[x, y)`.
    pub fn subpath(&self, x: VertexId, y: VertexId, bounds: Bounds) -> Result<Path> {
        let i = self.position(x).ok_or_else(|| Error::domain(format!("vertex {x} is not on the path")))?;
        let j = self.position(y).ok_or_else(|| Error::domain(format!("vertex {y} is not on the path")))?;
        if i > j {
            return Err(Error::domain(format!("vertex {x} comes after {y} on the path")));
        }
        let end = match bounds {
            Bounds::Closed => j + 1,
            Bounds::HalfOpen => j,
        };
        if end <= i {
            return Err(Error::domain("half-open slice from a vertex to itself is empty"));
        }
        Ok(Path { vertices: self.vertices[i..end].to_vec() })
    }

    /// `P ∘ Q`, requiring the last vertex of `P` to be the first of `Q`.
    pub fn concat(&self, other: &Path) -> Result<Path> {
        if self.last() != other.first() {
            return Err(Error::EndpointMismatch(format!(
                "left path ends at {} but right path starts at {}",
                self.last(),
                other.first()
            )));
        }
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        let mut seen = HashSet::with_capacity(vertices.len());
        for &x in &vertices {
            if !seen.insert(x) {
                return Err(Error::RepeatedVertex(x));
            }
        }
        Ok(Path { vertices })
    }

    /// The same vertices in reverse order; a path of `D.reverse()`.
    pub fn reversed(&self) -> Path {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Path { vertices }
    }

    pub fn is_disjoint(&self, other: &Path) -> bool {
        self.vertices.iter().all(|x| !other.contains(*x))
    }

    /// Shared vertices, if any, are endpoints of both paths.
    pub fn is_internally_disjoint(&self, other: &Path) -> bool {
        self.interior().iter().all(|x| !other.contains(*x)) && other.interior().iter().all(|x| !self.contains(*x))
    }

    pub fn vertex_set(&self, order: usize) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(order);
        for x in &self.vertices {
            s.insert(x.index());
        }
        s
    }

    /// Render with vertex names from `d`, e.g. `s1 -> x1 -> t1`.
    pub fn display<'a>(&'a self, d: &'a Digraph) -> impl fmt::Display + 'a {
        PathDisplay { path: self, d }
    }
}

struct PathDisplay<'a> {
    path: &'a Path,
    d: &'a Digraph,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &x) in self.path.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(" -> ")?;
            }
            f.write_str(&self.d.name(x))?;
        }
        Ok(())
    }
}

/// Unvalidated vertex names read from a file or the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawPath(pub Vec<String>);

impl RawPath {
    pub fn resolve(&self, d: &Digraph) -> Result<Path> {
        let vertices = self
            .0
            .iter()
            .map(|name| d.vertex_by_name(name).ok_or_else(|| Error::domain(format!("unknown vertex `{name}`"))))
            .collect::<Result<Vec<_>>>()?;
        Path::new(d, vertices)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::v;

    fn line(n: usize) -> (Digraph, Path) {
        let d = Digraph::from_arcs(n, (0..n - 1).map(|i| (i, i + 1))).unwrap();
        let p = Path::new(&d, (0..n).map(v).collect()).unwrap();
        (d, p)
    }

    #[test]
    fn subpath_slices() {
        // a b c d e = 0 1 2 3 4
        let (_, p) = line(5);
        assert_eq!(p.subpath(v(1), v(3), Bounds::Closed).unwrap().vertices(), &[v(1), v(2), v(3)]);
        assert_eq!(p.subpath(v(0), v(0), Bounds::Closed).unwrap().vertices(), &[v(0)]);
        assert_eq!(p.subpath(v(1), v(3), Bounds::HalfOpen).unwrap().vertices(), &[v(1), v(2)]);
        assert!(p.subpath(v(3), v(1), Bounds::Closed).is_err());
        assert!(p.subpath(v(1), v(9), Bounds::Closed).is_err());
        assert!(p.subpath(v(2), v(2), Bounds::HalfOpen).is_err());
    }

    #[test]
    fn concat_rules() {
        let abc = Path::from_trusted(vec![v(0), v(1), v(2)]);
        let cde = Path::from_trusted(vec![v(2), v(3), v(4)]);
        assert_eq!(abc.concat(&cde).unwrap().vertices(), &[v(0), v(1), v(2), v(3), v(4)]);
        let a = Path::trivial(v(0));
        let ab = Path::from_trusted(vec![v(0), v(1)]);
        assert_eq!(a.concat(&ab).unwrap(), ab);
        let cda = Path::from_trusted(vec![v(2), v(3), v(0)]);
        assert_eq!(abc.concat(&cda), Err(Error::RepeatedVertex(v(0))));
        assert!(matches!(ab.concat(&cde), Err(Error::EndpointMismatch(_))));
    }

    #[test]
    fn validation() {
        let (d, _) = line(4);
        assert_eq!(Path::new(&d, vec![v(0), v(2)]), Err(Error::MissingArc(v(0), v(2))));
        assert_eq!(Path::new(&d, vec![]), Err(Error::EmptyPath));
        let d2 = Digraph::from_arcs(3, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(Path::new(&d2, vec![v(0), v(1), v(0)]), Err(Error::RepeatedVertex(v(0))));
    }

    #[test]
    fn neighbours_on_path() {
        let (d, p) = line(4);
        assert_eq!(p.len(), 3);
        assert_eq!(p.interior(), &[v(1), v(2)]);
        assert_eq!(p.predecessor(v(0)), None);
        assert_eq!(p.predecessor(v(2)), Some(v(1)));
        assert_eq!(p.successor(v(3)), None);
        assert!(p.reversed().validate(&d.reverse()).is_ok());
        assert_eq!(p.display(&d).to_string(), "0 -> 1 -> 2 -> 3");
    }

    #[test]
    fn disjointness() {
        let p = Path::from_trusted(vec![v(0), v(1), v(4)]);
        let q = Path::from_trusted(vec![v(0), v(2), v(4)]);
        let r = Path::from_trusted(vec![v(5), v(6)]);
        assert!(p.is_internally_disjoint(&q));
        assert!(!p.is_disjoint(&q));
        assert!(p.is_disjoint(&r));
        let s = Path::from_trusted(vec![v(0), v(4), v(7)]);
        assert!(!p.is_internally_disjoint(&s));
    }
}
