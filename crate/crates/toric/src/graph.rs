//! Decision procedures on the skeleton graph: minimal vertex covers, perfect
//! and chordal recognition, the odd cycle condition, unmixedness, and the
//! face cover number of the complex.

use thiserror::Error;

use crate::complex::{Face, SimplicialComplex, SkeletonGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {n} vertices, over the configured cap {cap}")]
    SizeCapExceeded { n: u32, cap: u32 },
}

/// Default vertex cap for the explicit odd-hole search behind `is_perfect`.
pub const DEFAULT_PERFECT_CAP: u32 = 12;

/// The complete list of minimal vertex covers, each sorted, the list ordered
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCoverSet {
    covers: Vec<Vec<u32>>,
}

impl VertexCoverSet {
    pub fn covers(&self) -> &[Vec<u32>] {
        &self.covers
    }

    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }
}

/// A minimum-cardinality face cover: faces of the complex whose union is the
/// whole vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceCover {
    faces: Vec<Face>,
}

impl FaceCover {
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn size(&self) -> usize {
        self.faces.len()
    }
}

/// All maximal cliques, as vertex bit masks, via Bron-Kerbosch with pivoting.
pub fn maximal_cliques(g: &SkeletonGraph) -> Vec<u64> {
    fn expand(g: &SkeletonGraph, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        // pivot: vertex of p|x with most neighbours in p
        let mut pivot = 0;
        let mut best = -1i64;
        let mut px = p | x;
        while px != 0 {
            let v = px.trailing_zeros();
            px &= px - 1;
            let deg = (g.neighbors(v + 1) & p).count_ones() as i64;
            if deg > best {
                best = deg;
                pivot = v;
            }
        }
        let mut cand = p & !g.neighbors(pivot + 1);
        while cand != 0 {
            let v = cand.trailing_zeros();
            cand &= cand - 1;
            let vb = 1u64 << v;
            let nv = g.neighbors(v + 1);
            expand(g, r | vb, p & nv, x & nv, out);
            p &= !vb;
            x |= vb;
        }
    }
    let full = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut out = Vec::new();
    expand(g, 0, full, 0, &mut out);
    out.sort_unstable();
    out
}

/// Enumerates minimal vertex covers as complements of maximal independent
/// sets. An edgeless graph has the single minimal cover `{}`.
pub fn minimal_vertex_covers(g: &SkeletonGraph) -> VertexCoverSet {
    let full = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut covers: Vec<Vec<u32>> = maximal_cliques(&g.complement())
        .into_iter()
        .map(|ind| Face::from_mask(full & !ind).verts().to_vec())
        .collect();
    covers.sort();
    covers.dedup();
    VertexCoverSet { covers }
}

/// True iff all minimal vertex covers have the same cardinality.
pub fn is_unmixed(covers: &VertexCoverSet) -> bool {
    covers
        .covers()
        .windows(2)
        .all(|w| w[0].len() == w[1].len())
}

/// All induced cycles of odd length >= `min_len` as vertex masks. An induced
/// cycle is determined by its vertex set, so masks deduplicate naturally.
fn induced_odd_cycles(g: &SkeletonGraph, min_len: usize) -> Vec<u64> {
    let mut found = std::collections::HashSet::new();
    let n = g.n();
    // Paths start at the smallest vertex of the cycle and only use larger ones.
    fn extend(
        g: &SkeletonGraph,
        start: u32,
        path: &mut Vec<u32>,
        path_mask: u64,
        min_len: usize,
        found: &mut std::collections::HashSet<u64>,
    ) {
        let last = *path.last().unwrap();
        let mut cand = g.neighbors(last) & !path_mask;
        while cand != 0 {
            let v = cand.trailing_zeros() + 1;
            cand &= cand - 1;
            if v <= start {
                continue;
            }
            // Induced: v may touch the path only at `last`, plus `start` when closing.
            let touches = g.neighbors(v) & path_mask;
            let last_bit = 1u64 << (last - 1);
            let start_bit = 1u64 << (start - 1);
            if touches == last_bit | start_bit && path.len() >= 2 {
                let cycle_len = path.len() + 1;
                if cycle_len >= min_len && cycle_len % 2 == 1 {
                    found.insert(path_mask | (1 << (v - 1)));
                }
            } else if touches == last_bit {
                path.push(v);
                extend(g, start, path, path_mask | (1 << (v - 1)), min_len, found);
                path.pop();
            }
        }
    }
    for start in 1..=n {
        let mut path = vec![start];
        extend(g, start, &mut path, 1 << (start - 1), min_len, &mut found);
    }
    let mut out: Vec<u64> = found.into_iter().collect();
    out.sort_unstable();
    out
}

fn has_odd_hole(g: &SkeletonGraph) -> bool {
    !induced_odd_cycles(g, 5).is_empty()
}

/// Perfect graph test by explicit odd-hole search in the graph and its
/// complement, guarded by a vertex cap.
pub fn is_perfect(g: &SkeletonGraph, cap: u32) -> Result<bool, GraphError> {
    if g.n() > cap {
        return Err(GraphError::SizeCapExceeded { n: g.n(), cap });
    }
    Ok(!has_odd_hole(g) && !has_odd_hole(&g.complement()))
}

/// Chordality via maximum cardinality search and perfect-elimination check.
pub fn is_chordal(g: &SkeletonGraph) -> bool {
    let n = g.n() as usize;
    if n == 0 {
        return true;
    }
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut order = Vec::with_capacity(n); // MCS order, later vertices eliminated first
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by_key(|&v| weight[v])
            .unwrap();
        numbered[v] = true;
        order.push(v);
        let mut nb = g.neighbors(v as u32 + 1);
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if !numbered[u] {
                weight[u] += 1;
            }
        }
    }
    // Eliminate in reverse MCS order; earlier MCS vertices are "later" for v.
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for (i, &v) in order.iter().enumerate().rev() {
        let _ = i;
        let mut later = g.neighbors(v as u32 + 1);
        let mut later_mask = 0u64;
        while later != 0 {
            let u = later.trailing_zeros() as usize;
            later &= later - 1;
            if pos[u] < pos[v] {
                later_mask |= 1 << u;
            }
        }
        if later_mask == 0 {
            continue;
        }
        // parent: the latest-numbered of the earlier neighbours
        let mut parent = 0usize;
        let mut best = 0usize;
        let mut m = later_mask;
        let mut first = true;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            if first || pos[u] > best {
                best = pos[u];
                parent = u;
                first = false;
            }
        }
        let rest = later_mask & !(1 << parent);
        if rest & !g.neighbors(parent as u32 + 1) != 0 {
            return false;
        }
    }
    true
}

/// The odd cycle condition: any two vertex-disjoint induced odd cycles are
/// joined by at least one edge.
pub fn odd_cycle_condition(g: &SkeletonGraph) -> bool {
    let cycles = induced_odd_cycles(g, 3);
    for (i, &a) in cycles.iter().enumerate() {
        for &b in &cycles[i + 1..] {
            if a & b != 0 {
                continue;
            }
            let mut joined = false;
            let mut m = a;
            while m != 0 {
                let v = m.trailing_zeros() + 1;
                m &= m - 1;
                if g.neighbors(v) & b != 0 {
                    joined = true;
                    break;
                }
            }
            if !joined {
                return false;
            }
        }
    }
    true
}

/// Exact minimum face cover by branch and bound over the facets.
/// Restricting the search to facets is sound: faces are closed under subsets.
pub fn face_cover_number(c: &SimplicialComplex) -> FaceCover {
    let n = c.n();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let facets: Vec<u64> = c.facets().iter().map(|f| f.mask()).collect();
    let max_size = facets.iter().map(|m| m.count_ones()).max().unwrap() as usize;

    // greedy upper bound
    let mut covered = 0u64;
    let mut greedy = Vec::new();
    while covered != full {
        let best = facets
            .iter()
            .enumerate()
            .max_by_key(|(_, m)| (*m & !covered).count_ones())
            .unwrap()
            .0;
        covered |= facets[best];
        greedy.push(best);
    }

    let mut best: Vec<usize> = greedy;
    fn search(
        facets: &[u64],
        full: u64,
        max_size: usize,
        covered: u64,
        chosen: &mut Vec<usize>,
        best: &mut Vec<usize>,
    ) {
        if covered == full {
            if chosen.len() < best.len() {
                *best = chosen.clone();
            }
            return;
        }
        let missing = (full & !covered).count_ones() as usize;
        if chosen.len() + missing.div_ceil(max_size) >= best.len() {
            return;
        }
        let pivot = (full & !covered).trailing_zeros();
        for (i, &m) in facets.iter().enumerate() {
            if m >> pivot & 1 == 1 {
                chosen.push(i);
                search(facets, full, max_size, covered | m, chosen, best);
                chosen.pop();
            }
        }
    }
    search(&facets, full, max_size, 0, &mut Vec::new(), &mut best);

    let faces: Vec<Face> = best.iter().map(|&i| c.facets()[i].clone()).collect();
    debug_assert_eq!(faces.iter().fold(0u64, |m, f| m | f.mask()), full);
    FaceCover { faces }
}
