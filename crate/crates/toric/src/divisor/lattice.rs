//! Integer matrix routines for the class-group presentation: Smith normal
//! form invariants and a Hermite-style echelon basis used to reduce divisor
//! classes to a canonical coset representative.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

fn big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Diagonal invariants `d_1 | d_2 | ..` of an integer matrix.
pub fn smith_invariants(m: &[Vec<i64>]) -> Vec<u64> {
    let mut a = big(m);
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut invariants = Vec::new();
    let mut top = 0usize;
    while top < rows && top < cols {
        // find a nonzero pivot
        let mut pivot = None;
        'search: for i in top..rows {
            for j in top..cols {
                if !a[i][j].is_zero() {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap(top, pi);
        for row in a.iter_mut() {
            row.swap(top, pj);
        }
        // reduce row and column below/right of the pivot until it divides everything
        loop {
            let mut again = false;
            for i in top + 1..rows {
                if !a[i][top].is_zero() {
                    let q = a[i][top].div_floor(&a[top][top]);
                    for j in top..cols {
                        let s = &a[top][j] * &q;
                        a[i][j] = &a[i][j] - s;
                    }
                    if !a[i][top].is_zero() {
                        a.swap(top, i);
                        again = true;
                    }
                }
            }
            for j in top + 1..cols {
                if !a[top][j].is_zero() {
                    let q = a[top][j].div_floor(&a[top][top]);
                    for row in a.iter_mut().take(rows).skip(top) {
                        let s = &row[top] * &q;
                        row[j] = &row[j] - s;
                    }
                    if !a[top][j].is_zero() {
                        for row in a.iter_mut() {
                            row.swap(top, j);
                        }
                        again = true;
                    }
                }
            }
            if !again {
                break;
            }
        }
        // pivot must divide the whole remaining block
        let mut fixed = true;
        'divcheck: for i in top + 1..rows {
            for j in top + 1..cols {
                if !(&a[i][j] % &a[top][top]).is_zero() {
                    // fold the offending row into the pivot row and restart
                    for jj in top..cols {
                        let add = a[i][jj].clone();
                        a[top][jj] += add;
                    }
                    fixed = false;
                    break 'divcheck;
                }
            }
        }
        if !fixed {
            continue;
        }
        if a[top][top].is_negative() {
            let v = -a[top][top].clone();
            a[top][top] = v;
        }
        invariants.push(a[top][top].to_u64().expect("invariant fits u64"));
        top += 1;
    }
    invariants
}

/// Row-style Hermite echelon basis of the lattice spanned by the rows of `m`,
/// with pivot columns taken in the given column order (the identity order of
/// the caller's choosing). Pivots are positive and entries above each pivot
/// are reduced into `[0, pivot)`.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    /// Echelon rows over the original column indexing.
    pub rows: Vec<Vec<i64>>,
    /// Pivot column of each row.
    pub pivots: Vec<usize>,
}

pub fn row_hermite(m: &[Vec<i64>]) -> EchelonBasis {
    let mut a = big(m);
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // gcd elimination in column c among rows r..
        loop {
            let mut nz: Vec<usize> = (r..rows).filter(|&i| !a[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            nz.sort_by_key(|&i| a[i][c].abs());
            let p = nz[0];
            a.swap(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if !a[i][c].is_zero() {
                    let q = a[i][c].div_floor(&a[r][c]);
                    for j in 0..cols {
                        let s = &a[r][j] * &q;
                        a[i][j] = &a[i][j] - s;
                    }
                    if !a[i][c].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if a[r][c].is_zero() {
            continue;
        }
        if a[r][c].is_negative() {
            for j in 0..cols {
                let v = -a[r][j].clone();
                a[r][j] = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    // reduce entries above each pivot
    for (ri, &c) in pivots.iter().enumerate() {
        for i in 0..ri {
            let q = a[i][c].div_floor(&a[ri][c]);
            if q.is_zero() {
                continue;
            }
            for j in 0..cols {
                let s = &a[ri][j] * &q;
                a[i][j] = &a[i][j] - s;
            }
        }
    }
    let rows_out = a
        .into_iter()
        .take(pivots.len())
        .map(|row| {
            row.into_iter()
                .map(|x| x.to_i64().expect("echelon entry fits i64"))
                .collect()
        })
        .collect();
    EchelonBasis {
        rows: rows_out,
        pivots,
    }
}

impl EchelonBasis {
    /// Canonical representative of `v` modulo the row lattice: the pivot-column
    /// entries are reduced into `[0, pivot)` row by row.
    pub fn reduce(&self, v: &[i64]) -> Vec<i64> {
        let mut v: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let p = BigInt::from(row[c]);
            let q = v[c].div_floor(&p);
            if q.is_zero() {
                continue;
            }
            for (vj, rj) in v.iter_mut().zip(row) {
                let s = BigInt::from(*rj) * &q;
                *vj = &*vj - s;
            }
        }
        v.into_iter()
            .map(|x| x.to_i64().expect("reduced entry fits i64"))
            .collect()
    }

    /// Whether `v` lies in the row lattice.
    pub fn contains(&self, v: &[i64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smith_of_diagonal() {
        assert_eq!(smith_invariants(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(smith_invariants(&[vec![1, 0], vec![0, 1]]), vec![1, 1]);
    }

    #[test]
    fn smith_of_rank_deficient() {
        assert_eq!(smith_invariants(&[vec![2, 4], vec![1, 2]]), vec![1]);
        assert_eq!(smith_invariants(&[vec![0, 0], vec![0, 0]]), Vec::<u64>::new());
    }

    #[test]
    fn smith_with_torsion() {
        // Z^2 / <(2,0),(0,2)> = (Z/2)^2
        assert_eq!(smith_invariants(&[vec![2, 0], vec![0, 2]]), vec![2, 2]);
    }

    #[test]
    fn hermite_reduction_is_canonical() {
        // lattice <(1,0,-1),(0,1,1)> in Z^3
        let basis = row_hermite(&[vec![1, 0, -1], vec![0, 1, 1]]);
        assert_eq!(basis.pivots, vec![0, 1]);
        let r1 = basis.reduce(&[3, 2, 0]);
        let r2 = basis.reduce(&[0, 0, 1]);
        // (3,2,0) = 3*(1,0,-1) + 2*(0,1,1) + (0,0,1)
        assert_eq!(r1, r2);
        assert!(basis.contains(&[1, 1, 0]));
        assert!(!basis.contains(&[0, 0, 1]));
    }
}
