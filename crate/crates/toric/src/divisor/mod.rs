//! The divisor class group of a normal toric ring of a complex, presented as
//! the cokernel of the facet-evaluation matrix, together with the canonical
//! module class, the a-invariant, and the Gorenstein decision. Wherever the
//! theory provides both a structural formula and a general construction, both
//! are computed and compared.

mod lattice;

use thiserror::Error;

use crate::complex::{Face, SimplicialComplex};
use crate::cone::{Cone, ConeError, MonomialPrime, Normality, PrimeKind};
use crate::graph::{face_cover_number, VertexCoverSet};

pub use lattice::{row_hermite, smith_invariants, EchelonBasis};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DivisorError {
    #[error("the semigroup is not normal; class-group theory does not apply")]
    NotNormal,
    #[error("formula precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error(transparent)]
    Cone(#[from] ConeError),
}

/// The class group `Z^m / im(M)` where row `i` of `M` is the support form of
/// the `i`-th height-one monomial prime evaluated on the standard basis.
#[derive(Debug, Clone)]
pub struct ClassGroupPresentation {
    /// Number of height-one monomial primes (= facets), the rank of the free
    /// divisor group the presentation quotients.
    pub prime_count: usize,
    /// `m x (n+1)` evaluation matrix.
    pub relation_matrix: Vec<Vec<i64>>,
    /// Diagonal Smith invariants `d_1 | d_2 | ..` of the relation matrix.
    pub invariants: Vec<u64>,
    /// Free rank of the cokernel.
    pub rank: usize,
    /// Invariant factors greater than one.
    pub torsion: Vec<u64>,
    /// Number of primes containing `t`.
    pub t_prime_count: usize,
    basis: EchelonBasis,
}

/// A divisor class in reduced coordinates over the canonical prime order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorClass {
    pub coeffs: Vec<i64>,
}

impl DivisorClass {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&x| x == 0)
    }
}

/// Builds the presentation. Requires normality: every statement this module
/// makes about `Cl` presumes it.
pub fn class_group(
    primes: &[MonomialPrime],
    normality: &Normality,
) -> Result<ClassGroupPresentation, DivisorError> {
    if !normality.normal {
        return Err(DivisorError::NotNormal);
    }
    let m = primes.len();
    let relation_matrix: Vec<Vec<i64>> = primes.iter().map(|p| p.form.coeffs.clone()).collect();
    let invariants = smith_invariants(&relation_matrix);
    let rank = m - invariants.len();
    let torsion: Vec<u64> = invariants.iter().copied().filter(|&d| d > 1).collect();
    // the image lattice in Z^m is spanned by the columns of M
    let cols = relation_matrix[0].len();
    let transposed: Vec<Vec<i64>> = (0..cols)
        .map(|j| relation_matrix.iter().map(|r| r[j]).collect())
        .collect();
    let basis = row_hermite(&transposed);
    Ok(ClassGroupPresentation {
        prime_count: m,
        relation_matrix,
        invariants,
        rank,
        torsion,
        t_prime_count: primes.iter().filter(|p| p.contains_t()).count(),
        basis,
    })
}

impl ClassGroupPresentation {
    /// Canonical representative of a divisor-class vector modulo principal
    /// divisors.
    pub fn reduce(&self, v: &[i64]) -> DivisorClass {
        DivisorClass {
            coeffs: self.basis.reduce(v),
        }
    }

    /// Whether a divisor vector is principal.
    pub fn is_principal(&self, v: &[i64]) -> bool {
        self.basis.contains(v)
    }
}

/// The relation vector of `div(t)`: coefficient `f_i(e_{n+1})` at each prime
/// containing `t`, zero elsewhere. It is principal by construction; the
/// boolean records the check.
pub fn div_t(primes: &[MonomialPrime], cg: &ClassGroupPresentation) -> (Vec<i64>, bool) {
    let v: Vec<i64> = primes
        .iter()
        .map(|p| if p.contains_t() { p.t_coeff } else { 0 })
        .collect();
    let principal = cg.is_principal(&v);
    (v, principal)
}

/// The class of the canonical module from its general description: the sum
/// of every height-one monomial prime class, reduced.
pub fn canonical_class_general(
    primes: &[MonomialPrime],
    cg: &ClassGroupPresentation,
) -> DivisorClass {
    cg.reduce(&vec![1i64; primes.len()])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaMode {
    /// Coefficients `n - |C_j| + 1` on the cover primes.
    FlagPerfect,
    /// Coefficients `n - |C_j|`; valid because `(t)` is radical there.
    QuasiForest,
}

/// The structural formula for the canonical class, expressed over the cover
/// primes and reduced. The mode's combinatorial precondition is enforced.
pub fn canonical_class_formula(
    primes: &[MonomialPrime],
    cg: &ClassGroupPresentation,
    n: u32,
    mode: FormulaMode,
    flag: bool,
    perfect: bool,
    quasi_forest: bool,
) -> Result<DivisorClass, DivisorError> {
    match mode {
        FormulaMode::FlagPerfect if !(flag && perfect) => {
            return Err(DivisorError::PreconditionViolated(
                "complex is not flag with a perfect skeleton",
            ))
        }
        FormulaMode::QuasiForest if !quasi_forest => {
            return Err(DivisorError::PreconditionViolated(
                "complex is not a quasi-forest",
            ))
        }
        _ => {}
    }
    let offset = match mode {
        FormulaMode::FlagPerfect => 1,
        FormulaMode::QuasiForest => 0,
    };
    let v: Vec<i64> = primes
        .iter()
        .map(|p| match &p.kind {
            PrimeKind::Cover(c) => i64::from(n) - c.len() as i64 + offset,
            _ => 0,
        })
        .collect();
    Ok(cg.reduce(&v))
}

/// How the a-invariant was obtained, with both sides recorded when the
/// face-cover formula applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AInvariant {
    pub value: i64,
    /// Least height of an interior lattice point.
    pub interior_height: u32,
    /// The face cover number, when `(t)` is radical and the formula applies.
    pub face_cover_number: Option<usize>,
    /// `Some(true)` when both routes were computed and agree.
    pub formula_agrees: Option<bool>,
}

/// The a-invariant `-(least degree of the canonical module)`. When `(t)` is
/// radical the face-cover formula is computed as well and checked against the
/// interior probe.
pub fn a_invariant(
    c: &SimplicialComplex,
    cone: &Cone,
    normality: &Normality,
    t_radical: bool,
    cap: u32,
    budget: u64,
) -> Result<AInvariant, DivisorError> {
    if !normality.normal {
        return Err(DivisorError::NotNormal);
    }
    let (height, _) = cone.min_interior_height(cap, budget)?;
    if t_radical {
        let cover = face_cover_number(c);
        let agrees = cover.size() + 1 == height as usize;
        Ok(AInvariant {
            value: -(height as i64),
            interior_height: height,
            face_cover_number: Some(cover.size()),
            formula_agrees: Some(agrees),
        })
    } else {
        Ok(AInvariant {
            value: -(height as i64),
            interior_height: height,
            face_cover_number: None,
            formula_agrees: None,
        })
    }
}

/// Searches for a partition of the vertex set into pairwise disjoint facets
/// that each have a free vertex.
pub fn free_vertex_partition(c: &SimplicialComplex) -> Option<Vec<Face>> {
    let n = c.n();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let candidates: Vec<(u64, Face)> = c
        .facets()
        .iter()
        .filter(|f| !c.free_vertices(f).unwrap().is_empty())
        .map(|f| (f.mask(), f.clone()))
        .collect();
    fn search(covered: u64, full: u64, candidates: &[(u64, Face)], chosen: &mut Vec<Face>) -> bool {
        if covered == full {
            return true;
        }
        let pivot = (full & !covered).trailing_zeros();
        for (m, f) in candidates {
            if m >> pivot & 1 == 1 && m & covered == 0 {
                chosen.push(f.clone());
                if search(covered | m, full, candidates, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    if search(0, full, &candidates, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

/// The Gorenstein decision with its evidence. For quasi-forests the three
/// computable conditions (trivial canonical class, unmixed skeleton, and a
/// free-vertex facet partition) are all evaluated; they must agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GorensteinReport {
    pub gorenstein: bool,
    pub omega_zero: bool,
    pub unmixed: bool,
    pub partition: Option<Vec<Face>>,
    pub quasi_forest: bool,
    /// `Some` exactly for quasi-forests, where the equivalence is a theorem.
    pub routes_agree: Option<bool>,
}

pub fn is_gorenstein(
    c: &SimplicialComplex,
    covers: &VertexCoverSet,
    omega: &DivisorClass,
    quasi_forest: bool,
) -> GorensteinReport {
    let omega_zero = omega.is_zero();
    let unmixed = crate::graph::is_unmixed(covers);
    let partition = free_vertex_partition(c);
    let routes_agree = if quasi_forest {
        Some(omega_zero == unmixed && unmixed == partition.is_some())
    } else {
        None
    };
    GorensteinReport {
        gorenstein: omega_zero,
        omega_zero,
        unmixed,
        partition,
        quasi_forest,
        routes_agree,
    }
}
