//! Facet enumeration for the cone spanned by the semigroup generators, by the
//! incremental double description method in exact big-integer arithmetic.
//!
//! The generators all have positive last coordinate, so the cone is pointed;
//! facet normals of the primal cone are exactly the extreme rays of the dual
//! cone `{c : <c, v> >= 0 for every generator v}`, which is what the
//! incremental step below maintains.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ConeError;

/// Fraction-free Gaussian elimination rank (Bareiss update rule).
fn rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                m[i][j] = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut m: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[k][k] * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

fn minor(m: &[Vec<BigInt>], del_row: usize, del_col: usize) -> Vec<Vec<BigInt>> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != del_row)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(j, _)| *j != del_col)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

fn gcd_normalize(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        g = g.gcd(x);
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        *x = &*x / &g;
    }
}

/// Set of constraint indices a ray is tight at, as a small bit set.
#[derive(Clone)]
struct TightSet(Vec<u64>);

impl TightSet {
    fn new(words: usize) -> Self {
        TightSet(vec![0; words])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersect(&self, other: &TightSet) -> TightSet {
        TightSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn indices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (w, word) in self.0.iter().enumerate() {
            let mut m = *word;
            while m != 0 {
                out.push(w * 64 + m.trailing_zeros() as usize);
                m &= m - 1;
            }
        }
        out
    }
}

struct Ray {
    coords: Vec<BigInt>,
    tight: TightSet,
}

/// Enumerates the primitive facet normals of `cone(gens)`, each nonnegative
/// on every generator. Requires the generators to span the ambient space.
pub fn facet_forms(gens: &[Vec<i64>]) -> Result<Vec<Vec<i64>>, ConeError> {
    let d = gens[0].len();
    let cons: Vec<Vec<BigInt>> = gens
        .iter()
        .map(|g| g.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let words = cons.len().div_ceil(64);

    // initial simplicial cone from d independent constraints
    let mut basis_idx: Vec<usize> = Vec::new();
    let mut basis_rows: Vec<Vec<BigInt>> = Vec::new();
    for (i, c) in cons.iter().enumerate() {
        let mut probe = basis_rows.clone();
        probe.push(c.clone());
        if rank(probe) > basis_rows.len() {
            basis_rows.push(c.clone());
            basis_idx.push(i);
            if basis_idx.len() == d {
                break;
            }
        }
    }
    if basis_idx.len() < d {
        return Err(ConeError::DegenerateCone);
    }

    let det = determinant(&basis_rows);
    debug_assert!(!det.is_zero());
    let det_neg = det.is_negative();
    let mut rays: Vec<Ray> = Vec::with_capacity(d);
    for j in 0..d {
        // coords[i] = +-cofactor so that <basis_row_k, ray_j> = |det| * delta_kj
        let mut coords: Vec<BigInt> = (0..d)
            .map(|i| {
                let c = determinant(&minor(&basis_rows, j, i));
                let c = if (i + j) % 2 == 1 { -c } else { c };
                if det_neg {
                    -c
                } else {
                    c
                }
            })
            .collect();
        gcd_normalize(&mut coords);
        let mut tight = TightSet::new(words);
        for (k, &bi) in basis_idx.iter().enumerate() {
            if k != j {
                tight.set(bi);
            }
        }
        rays.push(Ray { coords, tight });
    }

    for (ci, con) in cons.iter().enumerate() {
        if basis_idx.contains(&ci) {
            continue;
        }
        let evals: Vec<BigInt> = rays
            .iter()
            .map(|r| con.iter().zip(&r.coords).map(|(a, b)| a * b).sum())
            .collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| evals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| evals[i].is_negative()).collect();

        let mut fresh: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &m in &neg {
                let common = rays[p].tight.intersect(&rays[m].tight);
                if common.count() + 2 < d {
                    continue;
                }
                let idx = common.indices();
                let sub: Vec<Vec<BigInt>> = idx.iter().map(|&i| cons[i].clone()).collect();
                if rank(sub) != d - 2 {
                    continue;
                }
                let mut coords: Vec<BigInt> = (0..d)
                    .map(|i| &evals[p] * &rays[m].coords[i] - &evals[m] * &rays[p].coords[i])
                    .collect();
                gcd_normalize(&mut coords);
                let mut tight = common;
                tight.set(ci);
                fresh.push(Ray { coords, tight });
            }
        }
        let mut kept: Vec<Ray> = Vec::new();
        for (i, mut r) in rays.drain(..).enumerate() {
            if evals[i].is_zero() {
                r.tight.set(ci);
            }
            if !evals[i].is_negative() {
                kept.push(r);
            }
        }
        rays = kept;
        rays.extend(fresh);
    }

    let mut out: Vec<Vec<i64>> = rays
        .iter()
        .map(|r| {
            r.coords
                .iter()
                .map(|x| x.to_i64().ok_or(ConeError::Overflow))
                .collect::<Result<Vec<i64>, _>>()
        })
        .collect::<Result<_, _>>()?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadrant_in_dim_two() {
        // gens e1, e2: facets are the coordinate forms
        let forms = facet_forms(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(forms, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn edge_cone_has_four_facets() {
        // single edge on two vertices: generators of the toric cone in Z^3
        let gens = vec![vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]];
        let forms = facet_forms(&gens).unwrap();
        assert_eq!(
            forms,
            vec![
                vec![-1, 0, 1],
                vec![0, -1, 1],
                vec![0, 1, 0],
                vec![1, 0, 0]
            ]
        );
    }

    #[test]
    fn degenerate_input_is_rejected() {
        assert!(matches!(
            facet_forms(&[vec![1, 0, 0], vec![0, 1, 0]]),
            Err(ConeError::DegenerateCone)
        ));
    }
}
