//! Simplicial complexes on the vertex set `{1, .., n}`.
//!
//! A complex is stored by its facets (the inclusion-maximal faces); the full
//! face family is derived on demand. The empty face is always a face: it
//! indexes the degree-one generator `t` of the toric ring.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("input contains no non-empty facet")]
    EmptyInput,
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(u32),
    #[error("vertex {0} lies in no facet")]
    UncoveredVertex(u32),
    #[error("{0} is not a facet of the complex")]
    NotAFacet(Face),
}

/// A face: a sorted, duplicate-free subset of `{1, .., n}`, possibly empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(Vec<u32>);

impl Face {
    pub fn new(mut verts: Vec<u32>) -> Self {
        verts.sort_unstable();
        verts.dedup();
        Face(verts)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn verts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    pub fn union(&self, other: &Face) -> Face {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Face::new(v)
    }

    pub fn intersection(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| other.contains(*v)).collect())
    }

    pub fn without(&self, v: u32) -> Face {
        Face(self.0.iter().copied().filter(|w| *w != v).collect())
    }

    pub fn with(&self, v: u32) -> Face {
        let mut w = self.0.clone();
        w.push(v);
        Face::new(w)
    }

    /// Bit mask with bit `v-1` set for each vertex `v`. Valid for `n <= 64`.
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0u64, |m, v| m | (1u64 << (v - 1)))
    }

    pub fn from_mask(mask: u64) -> Face {
        Face((0..64).filter(|b| mask >> b & 1 == 1).map(|b| b as u32 + 1).collect())
    }

    /// Canonical order used for face enumeration: cardinality, then lexicographic.
    pub fn canonical_cmp(&self, other: &Face) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// The 1-skeleton of a complex, stored as adjacency bit masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonGraph {
    n: u32,
    adj: Vec<u64>,
}

impl SkeletonGraph {
    pub fn new(n: u32, edges: &[(u32, u32)]) -> Self {
        let mut adj = vec![0u64; n as usize];
        for &(a, b) in edges {
            assert!(a != b && a >= 1 && b >= 1 && a <= n && b <= n);
            adj[a as usize - 1] |= 1 << (b - 1);
            adj[b as usize - 1] |= 1 << (a - 1);
        }
        SkeletonGraph { n, adj }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        a != b && self.adj[a as usize - 1] >> (b - 1) & 1 == 1
    }

    /// Neighbours of `v` as a bit mask.
    pub fn neighbors(&self, v: u32) -> u64 {
        self.adj[v as usize - 1]
    }

    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for a in 1..=self.n {
            for b in a + 1..=self.n {
                if self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn complement(&self) -> SkeletonGraph {
        let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let adj = (0..self.n as usize)
            .map(|i| !self.adj[i] & full & !(1u64 << i))
            .collect();
        SkeletonGraph { n: self.n, adj }
    }
}

/// A plain family of faces, as returned by `restriction`. It need not cover
/// the whole vertex set, so it is not a `SimplicialComplex`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceFamily {
    n: u32,
    faces: Vec<Face>,
}

impl FaceFamily {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn contains(&self, f: &Face) -> bool {
        self.faces.iter().any(|g| g == f)
    }

    /// Graph on `{1, .., n}` whose edges are the two-element faces of the family.
    pub fn skeleton(&self) -> SkeletonGraph {
        let edges: Vec<(u32, u32)> = self
            .faces
            .iter()
            .filter(|f| f.len() == 2)
            .map(|f| (f.verts()[0], f.verts()[1]))
            .collect();
        SkeletonGraph::new(self.n, &edges)
    }
}

/// A permutation `F_1 < .. < F_m` of the facet list such that every `F_i` is a
/// leaf of the complex generated by `F_1, .., F_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafOrder {
    facets: Vec<Face>,
}

impl LeafOrder {
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Re-checks the leaf property of every prefix directly from the definition.
    pub fn verify(&self) -> bool {
        (1..=self.facets.len()).all(|i| {
            let prefix = &self.facets[..i];
            is_leaf_of(&self.facets[i - 1], prefix)
        })
    }
}

/// `F` is a leaf of the facet set `facets` if some other facet (a branch)
/// contains every intersection of `F` with the remaining facets. A single
/// facet counts as a leaf.
pub(crate) fn is_leaf_of(f: &Face, facets: &[Face]) -> bool {
    let others: Vec<&Face> = facets.iter().filter(|h| *h != f).collect();
    if others.is_empty() {
        return true;
    }
    let mut joined = Face::empty();
    for h in &others {
        joined = joined.union(&f.intersection(h));
    }
    others.iter().any(|g| joined.is_subset(g))
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    n: u32,
    facets: Vec<Vec<u32>>,
}

/// A simplicial complex on `{1, .., n}`: every vertex lies in some facet and
/// the facets form an antichain under inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: u32,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Normalizes a raw facet list: drops empty sets and faces contained in
    /// another, sorts canonically, and checks vertex range and coverage.
    pub fn new(n: u32, raw: Vec<Vec<u32>>) -> Result<Self, ComplexError> {
        if n == 0 || raw.is_empty() {
            return Err(ComplexError::EmptyInput);
        }
        let mut faces = Vec::new();
        for r in raw {
            for &v in &r {
                if v == 0 || v > n {
                    return Err(ComplexError::VertexOutOfRange(v));
                }
            }
            let f = Face::new(r);
            if !f.is_empty() {
                faces.push(f);
            }
        }
        if faces.is_empty() {
            return Err(ComplexError::EmptyInput);
        }
        faces.sort();
        faces.dedup();
        let mut facets: Vec<Face> = Vec::new();
        for f in &faces {
            if !faces.iter().any(|g| g != f && f.is_subset(g)) {
                facets.push(f.clone());
            }
        }
        facets.sort_by(|a, b| a.canonical_cmp(b));
        for v in 1..=n {
            if !facets.iter().any(|f| f.contains(v)) {
                return Err(ComplexError::UncoveredVertex(v));
            }
        }
        Ok(SimplicialComplex { n, facets })
    }

    pub fn from_json(s: &str) -> Result<Self, String> {
        let raw: ComplexJson = serde_json::from_str(s).map_err(|e| e.to_string())?;
        SimplicialComplex::new(raw.n, raw.facets).map_err(|e| e.to_string())
    }

    pub fn to_json(&self) -> String {
        let raw = ComplexJson {
            n: self.n,
            facets: self.facets.iter().map(|f| f.verts().to_vec()).collect(),
        };
        serde_json::to_string(&raw).expect("complex serializes")
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_facet(&self, f: &Face) -> bool {
        self.facets.iter().any(|g| g == f)
    }

    pub fn is_face(&self, f: &Face) -> bool {
        self.facets.iter().any(|g| f.is_subset(g))
    }

    /// All faces including the empty face, ordered by (cardinality, lex).
    pub fn faces(&self) -> Vec<Face> {
        let mut set = BTreeSet::new();
        for f in &self.facets {
            for mask_bits in 0..(1u64 << f.len()) {
                let verts: Vec<u32> = f
                    .verts()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask_bits >> i & 1 == 1)
                    .map(|(_, v)| *v)
                    .collect();
                set.insert(Face(verts));
            }
        }
        let mut out: Vec<Face> = set.into_iter().collect();
        out.sort_by(|a, b| a.canonical_cmp(b));
        out
    }

    /// The restriction `{F in Delta : F subseteq W}`.
    pub fn restriction(&self, w: &[u32]) -> Result<FaceFamily, ComplexError> {
        for &v in w {
            if v == 0 || v > self.n {
                return Err(ComplexError::VertexOutOfRange(v));
            }
        }
        let wf = Face::new(w.to_vec());
        let faces = self.faces().into_iter().filter(|f| f.is_subset(&wf)).collect();
        Ok(FaceFamily { n: self.n, faces })
    }

    /// The 1-skeleton: edges are the two-element faces.
    pub fn skeleton(&self) -> SkeletonGraph {
        let mut edges = Vec::new();
        for f in &self.facets {
            let vs = f.verts();
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    edges.push((vs[i], vs[j]));
                }
            }
        }
        SkeletonGraph::new(self.n, &edges)
    }

    /// True iff the complex is the clique complex of its skeleton,
    /// i.e. every clique of the skeleton is a face.
    pub fn is_flag(&self) -> bool {
        let g = self.skeleton();
        crate::graph::maximal_cliques(&g)
            .iter()
            .all(|m| self.is_face(&Face::from_mask(*m)))
    }

    /// Vertices of the facet `f` that belong to no other facet.
    pub fn free_vertices(&self, f: &Face) -> Result<Vec<u32>, ComplexError> {
        if !self.is_facet(f) {
            return Err(ComplexError::NotAFacet(f.clone()));
        }
        Ok(f.verts()
            .iter()
            .copied()
            .filter(|&v| self.facets.iter().filter(|g| g.contains(v)).count() == 1)
            .collect())
    }

    /// Searches for a leaf order by extending a prefix one facet at a time,
    /// candidates tried lexicographically, with backtracking. The result is
    /// the lexicographically smallest valid order. `None` means the complex
    /// is not a quasi-forest.
    pub fn leaf_order(&self) -> Option<LeafOrder> {
        fn extend(chosen: &mut Vec<Face>, remaining: &mut Vec<Face>) -> bool {
            if remaining.is_empty() {
                return true;
            }
            for idx in 0..remaining.len() {
                let cand = remaining[idx].clone();
                chosen.push(cand.clone());
                if is_leaf_of(&cand, chosen) {
                    remaining.remove(idx);
                    if extend(chosen, remaining) {
                        return true;
                    }
                    remaining.insert(idx, cand);
                }
                chosen.pop();
            }
            false
        }
        let mut remaining = self.facets.clone();
        remaining.sort();
        let mut chosen = Vec::new();
        if extend(&mut chosen, &mut remaining) {
            Some(LeafOrder { facets: chosen })
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn face(v: &[u32]) -> Face {
        Face::new(v.to_vec())
    }

    #[test]
    fn validate_prunes_subsets() {
        let c = SimplicialComplex::new(2, vec![vec![1, 2], vec![2]]).unwrap();
        assert_eq!(c.facets(), &[face(&[1, 2])]);
    }

    #[test]
    fn validate_keeps_normalized_input() {
        let c = SimplicialComplex::new(3, vec![vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(c, fixtures::e3());
    }

    #[test]
    fn validate_rejects_uncovered_vertex() {
        let err = SimplicialComplex::new(3, vec![vec![1, 2]]).unwrap_err();
        assert_eq!(err, ComplexError::UncoveredVertex(3));
    }

    #[test]
    fn validate_rejects_bad_input() {
        assert_eq!(
            SimplicialComplex::new(2, vec![]).unwrap_err(),
            ComplexError::EmptyInput
        );
        assert_eq!(
            SimplicialComplex::new(2, vec![vec![1, 3]]).unwrap_err(),
            ComplexError::VertexOutOfRange(3)
        );
        assert_eq!(
            SimplicialComplex::new(2, vec![vec![]]).unwrap_err(),
            ComplexError::EmptyInput
        );
    }

    #[test]
    fn faces_of_single_edge() {
        let c = fixtures::e1();
        let fs = c.faces();
        assert_eq!(fs, vec![face(&[]), face(&[1]), face(&[2]), face(&[1, 2])]);
    }

    #[test]
    fn face_counts() {
        assert_eq!(fixtures::e3().faces().len(), 6);
        assert_eq!(fixtures::e2().faces().len(), 7);
        assert_eq!(fixtures::d1().faces().len(), 26);
    }

    #[test]
    fn restriction_examples() {
        let e3 = fixtures::e3();
        let r = e3.restriction(&[1, 3]).unwrap();
        assert_eq!(r.faces(), &[face(&[]), face(&[1]), face(&[3])]);
        let r = e3.restriction(&[2, 3]).unwrap();
        assert_eq!(r.faces(), &[face(&[]), face(&[2]), face(&[3]), face(&[2, 3])]);
        let e2 = fixtures::e2();
        let r = e2.restriction(&[1, 2]).unwrap();
        assert_eq!(r.faces(), &[face(&[]), face(&[1]), face(&[2]), face(&[1, 2])]);
        assert!(e3.restriction(&[4]).is_err());
    }

    #[test]
    fn restriction_to_full_vertex_set_is_faces() {
        for c in [fixtures::e1(), fixtures::e2(), fixtures::e3(), fixtures::d1()] {
            let all: Vec<u32> = (1..=c.n()).collect();
            assert_eq!(c.restriction(&all).unwrap().faces(), c.faces().as_slice());
        }
    }

    #[test]
    fn skeleton_examples() {
        assert_eq!(fixtures::e1().skeleton().edges(), vec![(1, 2)]);
        assert_eq!(fixtures::e2().skeleton().edges(), vec![(1, 2), (1, 3), (2, 3)]);
        let d1 = fixtures::d1().skeleton();
        assert_eq!(d1.edge_count(), 12);
        assert!(d1.has_edge(3, 10) && d1.has_edge(1, 2) && !d1.has_edge(1, 4));
    }

    #[test]
    fn flag_examples() {
        assert!(!fixtures::e2().is_flag());
        assert!(fixtures::e3().is_flag());
        assert!(fixtures::d1().is_flag());
        assert!(!fixtures::d2().is_flag());
    }

    #[test]
    fn free_vertex_examples() {
        let e3 = fixtures::e3();
        assert_eq!(e3.free_vertices(&face(&[1, 2])).unwrap(), vec![1]);
        let e2 = fixtures::e2();
        assert!(e2.free_vertices(&face(&[1, 2])).unwrap().is_empty());
        let e1 = fixtures::e1();
        assert_eq!(e1.free_vertices(&face(&[1, 2])).unwrap(), vec![1, 2]);
        assert!(matches!(
            e3.free_vertices(&face(&[1])),
            Err(ComplexError::NotAFacet(_))
        ));
    }

    #[test]
    fn leaf_order_examples() {
        let lo = fixtures::e3().leaf_order().expect("path is a quasi-forest");
        assert!(lo.verify());
        assert_eq!(lo.facets().len(), 2);
        assert!(fixtures::e2().leaf_order().is_none());
        let lo = fixtures::d1().leaf_order().expect("d1 is a quasi-forest");
        assert!(lo.verify());
    }

    #[test]
    fn singleton_facets_are_allowed() {
        let c = SimplicialComplex::new(3, vec![vec![1, 2], vec![3]]).unwrap();
        assert_eq!(c.free_vertices(&face(&[3])).unwrap(), vec![3]);
        assert!(c.leaf_order().is_some());
    }
}
