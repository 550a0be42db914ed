//! Named example complexes used throughout tests, docs, and the CLI corpus.

use crate::complex::SimplicialComplex;

/// Single edge on two vertices.
pub fn e1() -> SimplicialComplex {
    SimplicialComplex::new(2, vec![vec![1, 2]]).unwrap()
}

/// Boundary of a triangle: all three edges on `[3]`, but not the triangle.
pub fn e2() -> SimplicialComplex {
    SimplicialComplex::new(3, vec![vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap()
}

/// Path on three vertices, the smallest interesting quasi-forest.
pub fn e3() -> SimplicialComplex {
    SimplicialComplex::new(3, vec![vec![1, 2], vec![2, 3]]).unwrap()
}

/// Two vertex-disjoint triangle boundaries on `[6]`.
pub fn t2() -> SimplicialComplex {
    SimplicialComplex::new(
        6,
        vec![
            vec![1, 2],
            vec![2, 3],
            vec![1, 3],
            vec![4, 5],
            vec![5, 6],
            vec![4, 6],
        ],
    )
    .unwrap()
}

fn d1_facets() -> Vec<Vec<u32>> {
    vec![
        vec![1, 2, 3],
        vec![4, 5, 6],
        vec![7, 8, 9],
        vec![3, 10],
        vec![6, 10],
        vec![9, 10],
    ]
}

/// Three triangles hanging off a hub vertex; flag with a chordal skeleton.
pub fn d1() -> SimplicialComplex {
    SimplicialComplex::new(10, d1_facets()).unwrap()
}

/// `d1` with the face `{1,2,3}` removed (its boundary edges stay).
pub fn d2() -> SimplicialComplex {
    SimplicialComplex::new(10, remove_top(d1_facets(), &[1, 2, 3])).unwrap()
}

/// `d2` with the face `{4,5,6}` removed as well.
pub fn d3() -> SimplicialComplex {
    SimplicialComplex::new(10, remove_top(remove_top(d1_facets(), &[1, 2, 3]), &[4, 5, 6])).unwrap()
}

/// `d3` with the face `{7,8,9}` removed as well; purely 1-dimensional.
pub fn d4() -> SimplicialComplex {
    SimplicialComplex::new(
        10,
        remove_top(
            remove_top(remove_top(d1_facets(), &[1, 2, 3]), &[4, 5, 6]),
            &[7, 8, 9],
        ),
    )
    .unwrap()
}

/// Removes a single face from a facet list, replacing it by its boundary.
fn remove_top(facets: Vec<Vec<u32>>, gone: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for f in facets {
        if f == gone {
            for i in 0..f.len() {
                let mut b = f.clone();
                b.remove(i);
                out.push(b);
            }
        } else {
            out.push(f);
        }
    }
    out
}

/// All shipped fixtures with their corpus names.
pub fn all() -> Vec<(&'static str, SimplicialComplex)> {
    vec![
        ("e1", e1()),
        ("e2", e2()),
        ("e3", e3()),
        ("t2", t2()),
        ("d1", d1()),
        ("d2", d2()),
        ("d3", d3()),
        ("d4", d4()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d_family_face_counts_drop_by_one() {
        assert_eq!(d1().faces().len(), 26);
        assert_eq!(d2().faces().len(), 25);
        assert_eq!(d3().faces().len(), 24);
        assert_eq!(d4().faces().len(), 23);
    }

    #[test]
    fn d_family_shares_one_skeleton() {
        let s = d1().skeleton();
        assert_eq!(d2().skeleton(), s);
        assert_eq!(d3().skeleton(), s);
        assert_eq!(d4().skeleton(), s);
    }
}
