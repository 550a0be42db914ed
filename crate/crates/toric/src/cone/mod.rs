//! The affine semigroup of a complex and its cone: one lattice point per
//! face, exact facet enumeration, height-one monomial primes, the normality
//! decision, monomial valuations, and the interior-point probe behind the
//! a-invariant.

mod dd;
mod scan;

use std::collections::HashMap;
use std::sync::Mutex;

use thiserror::Error;

use crate::complex::{Face, SimplicialComplex};
use crate::graph::VertexCoverSet;

pub use scan::{HeightScan, Step};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConeError {
    #[error("generators do not span the ambient lattice")]
    DegenerateCone,
    #[error("lattice point enumeration exceeded the configured budget")]
    SizeCapExceeded,
    #[error("no interior point found up to the height cap {0}")]
    SearchBudgetExceeded(u32),
    #[error("coordinate facet x_{0} missing from the enumeration")]
    MissingCoordinateFacet(u32),
    #[error("cover facet for {0:?} missing from the enumeration")]
    MissingCoverFacet(Vec<u32>),
    #[error("facet coefficients exceed i64")]
    Overflow,
}

/// Default budget for the number of lattice points visited per scan.
pub const DEFAULT_POINT_BUDGET: u64 = 50_000_000;

/// A primitive integer linear form vanishing on a facet of the cone and
/// nonnegative on all generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportForm {
    /// Coefficients in `Z^(n+1)`; the last entry pairs with the t-degree.
    pub coeffs: Vec<i64>,
    /// Indices (into the face list) of the generators the form vanishes on.
    pub incident: Vec<usize>,
}

impl SupportForm {
    /// The valuation of a monomial with exponent vector `u` at the height-one
    /// prime cut out by this form.
    pub fn eval(&self, u: &[i64]) -> i64 {
        self.coeffs.iter().zip(u).map(|(a, b)| a * b).sum()
    }
}

/// The valuation `<v_f, v_u>` of a lattice point at a height-one monomial prime.
pub fn valuation(form: &SupportForm, u: &[i64]) -> i64 {
    form.eval(u)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeKind {
    /// The prime of all generators whose face contains vertex `i`; form `x_i`.
    Coordinate(u32),
    /// The prime `P_C` of a minimal vertex cover; form `-sum_{i not in C} x_i + x_{n+1}`.
    Cover(Vec<u32>),
    /// A facet beyond the coordinate and cover families.
    Extra,
}

/// A height-one monomial prime: a facet of the cone together with the
/// generators it contains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialPrime {
    pub kind: PrimeKind,
    pub form: SupportForm,
    /// Indices of faces `F` with `f(p_F) > 0`, i.e. the generators `x_F t` of the prime.
    pub generators: Vec<usize>,
    /// `f(e_{n+1})`; positive exactly when the prime contains `t`.
    pub t_coeff: i64,
}

impl MonomialPrime {
    pub fn contains_t(&self) -> bool {
        self.t_coeff > 0
    }
}

/// Outcome of the normality scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normality {
    pub normal: bool,
    /// Heights 1..=bound were scanned (or up to the witness height).
    pub bound: u32,
    /// A cone lattice point that is not a sum of generators, if one was found.
    pub witness: Option<Vec<i64>>,
}

impl Normality {
    pub fn witness_height(&self) -> Option<u32> {
        self.witness.as_ref().map(|w| w[w.len() - 1] as u32)
    }
}

/// The lattice point `p_F = sum_{i in F} e_i + e_{n+1}` of a face.
pub fn lattice_point(f: &Face, n: u32) -> Vec<i64> {
    let mut p = vec![0i64; n as usize + 1];
    for &v in f.verts() {
        p[v as usize - 1] = 1;
    }
    p[n as usize] = 1;
    p
}

/// The generator points of the semigroup, one per face, in face order.
pub fn generators(c: &SimplicialComplex) -> Vec<Vec<i64>> {
    c.faces().iter().map(|f| lattice_point(f, c.n())).collect()
}

/// The cone of a complex: generators, facet support forms, and the scans
/// that depend on them. Construction runs the double description method.
pub struct Cone {
    n: usize,
    faces: Vec<Face>,
    gens: Vec<Vec<i64>>,
    forms: Vec<SupportForm>,
    raw_forms: Vec<Vec<i64>>,
    member_cache: Mutex<HashMap<Vec<i64>, bool>>,
}

impl Cone {
    pub fn new(c: &SimplicialComplex) -> Result<Self, ConeError> {
        let faces = c.faces();
        let gens: Vec<Vec<i64>> = faces.iter().map(|f| lattice_point(f, c.n())).collect();
        Self::from_generators(c.n() as usize, faces, gens)
    }

    fn from_generators(
        n: usize,
        faces: Vec<Face>,
        gens: Vec<Vec<i64>>,
    ) -> Result<Self, ConeError> {
        let raw_forms = dd::facet_forms(&gens)?;
        let forms = raw_forms
            .iter()
            .map(|coeffs| {
                let incident = gens
                    .iter()
                    .enumerate()
                    .filter(|(_, g)| coeffs.iter().zip(*g).map(|(a, b)| a * b).sum::<i64>() == 0)
                    .map(|(i, _)| i)
                    .collect();
                SupportForm {
                    coeffs: coeffs.clone(),
                    incident,
                }
            })
            .collect();
        Ok(Cone {
            n,
            faces,
            gens,
            forms,
            raw_forms,
            member_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.gens
    }

    /// Complete, canonically sorted list of facet support forms.
    pub fn support_forms(&self) -> &[SupportForm] {
        &self.forms
    }

    pub fn in_cone(&self, u: &[i64]) -> bool {
        self.forms.iter().all(|f| f.eval(u) >= 0)
    }

    /// Tags every facet as a coordinate prime, a cover prime, or extra, and
    /// orders them canonically: coordinates by vertex, covers in cover order,
    /// extras by coefficient vector. The coordinate and cover facets always
    /// exist; their absence signals an internal inconsistency.
    pub fn classify_primes(
        &self,
        covers: &VertexCoverSet,
    ) -> Result<Vec<MonomialPrime>, ConeError> {
        let n = self.n;
        let mut coordinate: Vec<Option<MonomialPrime>> = vec![None; n];
        let mut cover: Vec<Option<MonomialPrime>> = vec![None; covers.len()];
        let mut extra: Vec<MonomialPrime> = Vec::new();

        let cover_forms: Vec<Vec<i64>> = covers
            .covers()
            .iter()
            .map(|c| {
                let mut f = vec![-1i64; n + 1];
                for &v in c {
                    f[v as usize - 1] = 0;
                }
                f[n] = 1;
                f
            })
            .collect();

        for form in &self.forms {
            let generators: Vec<usize> = (0..self.gens.len())
                .filter(|i| !form.incident.contains(i))
                .collect();
            let t_coeff = form.coeffs[n];
            let kind = if let Some(i) = coordinate_index(&form.coeffs) {
                coordinate[i] = Some(MonomialPrime {
                    kind: PrimeKind::Coordinate(i as u32 + 1),
                    form: form.clone(),
                    generators: generators.clone(),
                    t_coeff,
                });
                continue;
            } else if let Some(j) = cover_forms.iter().position(|cf| *cf == form.coeffs) {
                cover[j] = Some(MonomialPrime {
                    kind: PrimeKind::Cover(covers.covers()[j].clone()),
                    form: form.clone(),
                    generators: generators.clone(),
                    t_coeff,
                });
                continue;
            } else {
                PrimeKind::Extra
            };
            extra.push(MonomialPrime {
                kind,
                form: form.clone(),
                generators,
                t_coeff,
            });
        }

        let mut out = Vec::with_capacity(self.forms.len());
        for (i, p) in coordinate.into_iter().enumerate() {
            out.push(p.ok_or(ConeError::MissingCoordinateFacet(i as u32 + 1))?);
        }
        for (j, p) in cover.into_iter().enumerate() {
            out.push(p.ok_or_else(|| ConeError::MissingCoverFacet(covers.covers()[j].clone()))?);
        }
        extra.sort_by(|a, b| a.form.coeffs.cmp(&b.form.coeffs));
        out.extend(extra);
        Ok(out)
    }

    /// Decides whether the semigroup is normal by scanning heights
    /// `1..=bound`: at height 1 every cone lattice point must be a generator;
    /// above, every cone lattice point must drop into the cone after removing
    /// some generator. By induction this is exactly membership in the
    /// semigroup, and a failing point is a witness of non-normality.
    pub fn is_normal(&self, bound: u32, budget: u64) -> Result<Normality, ConeError> {
        let scan = HeightScan::new(self.n, &self.raw_forms);
        // gen_evals[g][f]: value of form f at generator g
        let gen_order = self.gens_by_size_desc();
        let gen_evals: Vec<Vec<i64>> = gen_order
            .iter()
            .map(|&g| self.forms.iter().map(|f| f.eval(&self.gens[g])).collect())
            .collect();
        let gen_masks: Vec<u64> = gen_order.iter().map(|&g| self.faces[g].mask()).collect();
        let gen_set: std::collections::HashSet<&[i64]> =
            self.gens.iter().map(|g| g.as_slice()).collect();

        let mut budget = budget;
        for k in 1..=bound {
            let mut witness: Option<Vec<i64>> = None;
            scan.enumerate(k, 0, &mut budget, &mut |u, evals| {
                let ok = if k == 1 {
                    gen_set.contains(u)
                } else {
                    let low_mask = low_mask(u);
                    gen_masks.iter().enumerate().any(|(gi, &m)| {
                        m & low_mask == m
                            && gen_evals[gi].iter().zip(evals).all(|(ge, e)| e - ge >= 0)
                    })
                };
                if ok {
                    Step::Continue
                } else {
                    witness = Some(u.to_vec());
                    Step::Stop
                }
            })?;
            if let Some(w) = witness {
                return Ok(Normality {
                    normal: false,
                    bound: k,
                    witness: Some(w),
                });
            }
        }
        Ok(Normality {
            normal: true,
            bound,
            witness: None,
        })
    }

    fn gens_by_size_desc(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.gens.len()).collect();
        order.sort_by_key(|&g| std::cmp::Reverse(self.faces[g].len()));
        order
    }

    /// True iff `u` is a sum of `u_last` generator points.
    pub fn membership(&self, u: &[i64]) -> bool {
        if u.len() != self.n + 1 || u[self.n] < 0 || u.iter().any(|&x| x < 0) {
            return false;
        }
        let mut cache = self.member_cache.lock().unwrap();
        self.member_rec(u, &mut cache)
    }

    fn member_rec(&self, u: &[i64], cache: &mut HashMap<Vec<i64>, bool>) -> bool {
        if u[self.n] == 0 {
            return u.iter().all(|&x| x == 0);
        }
        if let Some(&r) = cache.get(u) {
            return r;
        }
        // membership implies cone membership, so prune outside the cone
        let result = self.in_cone(u)
            && self.gens.iter().any(|g| {
                g.iter().zip(u).all(|(a, b)| a <= b) && {
                    let rest: Vec<i64> = u.iter().zip(g).map(|(a, b)| a - b).collect();
                    self.member_rec(&rest, cache)
                }
            });
        cache.insert(u.to_vec(), result);
        result
    }

    /// Smallest height carrying a lattice point strictly inside every facet,
    /// together with one such point. For a normal semigroup this is the least
    /// degree of a generator of the canonical module.
    pub fn min_interior_height(&self, cap: u32, budget: u64) -> Result<(u32, Vec<i64>), ConeError> {
        let scan = HeightScan::new(self.n, &self.raw_forms);
        let mut budget = budget;
        for k in 1..=cap {
            let mut found: Option<Vec<i64>> = None;
            scan.enumerate(k, 1, &mut budget, &mut |u, _| {
                found = Some(u.to_vec());
                Step::Stop
            })?;
            if let Some(u) = found {
                return Ok((k, u));
            }
        }
        Err(ConeError::SearchBudgetExceeded(cap))
    }

    /// All cone lattice points at one height, in lexicographic order.
    pub fn points_at_height(&self, k: u32, budget: u64) -> Result<Vec<Vec<i64>>, ConeError> {
        let scan = HeightScan::new(self.n, &self.raw_forms);
        let mut out = Vec::new();
        let mut budget = budget;
        scan.enumerate(k, 0, &mut budget, &mut |u, _| {
            out.push(u.to_vec());
            Step::Continue
        })?;
        Ok(out)
    }
}

fn coordinate_index(coeffs: &[i64]) -> Option<usize> {
    let mut idx = None;
    for (i, &c) in coeffs.iter().enumerate() {
        match c {
            0 => {}
            1 if idx.is_none() && i + 1 < coeffs.len() => idx = Some(i),
            _ => return None,
        }
    }
    idx
}

fn low_mask(u: &[i64]) -> u64 {
    u[..u.len() - 1]
        .iter()
        .enumerate()
        .fold(0u64, |m, (i, &x)| if x >= 1 { m | (1 << i) } else { m })
}

/// The two sides of the height-one-prime characterization: the cone side
/// (normal with no extra facets) must agree with the combinatorial side
/// (flag complex with perfect skeleton).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HealthyBread {
    pub cone_side: bool,
    pub combinatorial_side: bool,
}

impl HealthyBread {
    pub fn agree(&self) -> bool {
        self.cone_side == self.combinatorial_side
    }

    pub fn value(&self) -> bool {
        self.cone_side
    }
}

/// Evaluates both sides of the characterization from already-computed parts.
pub fn healthybread_check(
    primes: &[MonomialPrime],
    normal: bool,
    flag: bool,
    perfect: bool,
) -> HealthyBread {
    let no_extra = primes.iter().all(|p| !matches!(p.kind, PrimeKind::Extra));
    HealthyBread {
        cone_side: normal && no_extra,
        combinatorial_side: flag && perfect,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::minimal_vertex_covers;

    const BUDGET: u64 = DEFAULT_POINT_BUDGET;

    fn cone_of(c: &SimplicialComplex) -> Cone {
        Cone::new(c).unwrap()
    }

    #[test]
    fn generator_examples() {
        let g = generators(&fixtures::e1());
        assert_eq!(
            g,
            vec![vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]]
        );
        assert_eq!(generators(&fixtures::e3()).len(), 6);
        assert_eq!(generators(&fixtures::e2()).len(), 7);
    }

    #[test]
    fn facet_forms_of_fixtures() {
        let forms: Vec<Vec<i64>> = cone_of(&fixtures::e1())
            .support_forms()
            .iter()
            .map(|f| f.coeffs.clone())
            .collect();
        assert_eq!(
            forms,
            vec![
                vec![-1, 0, 1],
                vec![0, -1, 1],
                vec![0, 1, 0],
                vec![1, 0, 0]
            ]
        );
        let forms: Vec<Vec<i64>> = cone_of(&fixtures::e3())
            .support_forms()
            .iter()
            .map(|f| f.coeffs.clone())
            .collect();
        assert_eq!(
            forms,
            vec![
                vec![-1, 0, -1, 1],
                vec![0, -1, 0, 1],
                vec![0, 0, 1, 0],
                vec![0, 1, 0, 0],
                vec![1, 0, 0, 0]
            ]
        );
        let e2 = cone_of(&fixtures::e2());
        assert_eq!(e2.support_forms().len(), 7);
        assert!(e2
            .support_forms()
            .iter()
            .any(|f| f.coeffs == vec![-1, -1, -1, 2]));
    }

    #[test]
    fn every_form_is_primitive_nonnegative_and_facet_rank() {
        for (_, c) in fixtures::all() {
            let cone = cone_of(&c);
            for f in cone.support_forms() {
                let g = f.coeffs.iter().fold(0i64, |a, &b| {
                    num_integer::gcd(a, b.abs())
                });
                assert_eq!(g, 1, "form {:?} not primitive", f.coeffs);
                for gen in cone.generators() {
                    assert!(f.eval(gen) >= 0);
                }
                // incident generators span a hyperplane
                assert!(f.incident.len() >= cone.n());
            }
        }
    }

    #[test]
    fn classify_primes_examples() {
        let e1 = fixtures::e1();
        let primes = cone_of(&e1)
            .classify_primes(&minimal_vertex_covers(&e1.skeleton()))
            .unwrap();
        let counts = kind_counts(&primes);
        assert_eq!(counts, (2, 2, 0));
        assert_eq!(primes.iter().filter(|p| p.contains_t()).count(), 2);

        let e2 = fixtures::e2();
        let primes = cone_of(&e2)
            .classify_primes(&minimal_vertex_covers(&e2.skeleton()))
            .unwrap();
        assert_eq!(kind_counts(&primes), (3, 3, 1));
        let extra: Vec<&MonomialPrime> = primes
            .iter()
            .filter(|p| matches!(p.kind, PrimeKind::Extra))
            .collect();
        assert_eq!(extra.len(), 1);
        assert_eq!(extra[0].form.coeffs, vec![-1, -1, -1, 2]);
        assert_eq!(extra[0].t_coeff, 2);

        let e3 = fixtures::e3();
        let primes = cone_of(&e3)
            .classify_primes(&minimal_vertex_covers(&e3.skeleton()))
            .unwrap();
        assert_eq!(kind_counts(&primes), (3, 2, 0));
    }

    fn kind_counts(primes: &[MonomialPrime]) -> (usize, usize, usize) {
        let c = primes
            .iter()
            .filter(|p| matches!(p.kind, PrimeKind::Coordinate(_)))
            .count();
        let v = primes
            .iter()
            .filter(|p| matches!(p.kind, PrimeKind::Cover(_)))
            .count();
        let e = primes
            .iter()
            .filter(|p| matches!(p.kind, PrimeKind::Extra))
            .count();
        (c, v, e)
    }

    #[test]
    fn extra_prime_of_e2_is_generated_by_t_and_the_vertices() {
        let e2 = fixtures::e2();
        let cone = cone_of(&e2);
        let primes = cone
            .classify_primes(&minimal_vertex_covers(&e2.skeleton()))
            .unwrap();
        let extra = primes
            .iter()
            .find(|p| matches!(p.kind, PrimeKind::Extra))
            .unwrap();
        let gens: Vec<&Face> = extra.generators.iter().map(|&i| &cone.faces()[i]).collect();
        let expect: Vec<Face> = vec![
            Face::empty(),
            Face::new(vec![1]),
            Face::new(vec![2]),
            Face::new(vec![3]),
        ];
        assert_eq!(gens, expect.iter().collect::<Vec<_>>());
    }

    #[test]
    fn normality_examples() {
        assert!(cone_of(&fixtures::e1()).is_normal(2, BUDGET).unwrap().normal);
        assert!(cone_of(&fixtures::e2()).is_normal(3, BUDGET).unwrap().normal);
        let t2 = cone_of(&fixtures::t2()).is_normal(6, BUDGET).unwrap();
        assert!(!t2.normal);
        assert_eq!(t2.witness, Some(vec![1, 1, 1, 1, 1, 1, 3]));
        assert_eq!(t2.witness_height(), Some(3));
    }

    #[test]
    fn valuation_examples() {
        let e2 = fixtures::e2();
        let cone = cone_of(&e2);
        let primes = cone
            .classify_primes(&minimal_vertex_covers(&e2.skeleton()))
            .unwrap();
        let t_point = vec![0, 0, 0, 1];
        for p in &primes {
            match &p.kind {
                PrimeKind::Cover(_) => assert_eq!(valuation(&p.form, &t_point), 1),
                PrimeKind::Extra => assert_eq!(valuation(&p.form, &t_point), 2),
                PrimeKind::Coordinate(i) => {
                    let mut e = vec![0, 0, 0, 0];
                    e[*i as usize - 1] = 1;
                    assert_eq!(valuation(&p.form, &e), 1);
                    let mut other = vec![0, 0, 0, 0];
                    other[*i as usize % 3] = 1;
                    assert_eq!(valuation(&p.form, &other), 0);
                }
            }
        }
    }

    #[test]
    fn membership_examples() {
        let e2 = cone_of(&fixtures::e2());
        assert!(e2.membership(&[1, 1, 1, 2]));
        assert!(!e2.membership(&[1, 1, 1, 1]));
        let e1 = cone_of(&fixtures::e1());
        assert!(e1.membership(&[1, 1, 2]));
    }

    #[test]
    fn interior_heights() {
        assert_eq!(
            cone_of(&fixtures::e1()).min_interior_height(6, BUDGET).unwrap(),
            (2, vec![1, 1, 2])
        );
        let (h, _) = cone_of(&fixtures::e3()).min_interior_height(8, BUDGET).unwrap();
        assert_eq!(h, 3);
        let (h, _) = cone_of(&fixtures::e2()).min_interior_height(8, BUDGET).unwrap();
        assert_eq!(h, 2);
    }

    #[test]
    fn healthybread_examples() {
        use crate::graph::is_perfect;
        for (name, c, expected) in [
            ("e2", fixtures::e2(), false),
            ("e3", fixtures::e3(), true),
            ("d1", fixtures::d1(), true),
        ] {
            let cone = cone_of(&c);
            let covers = minimal_vertex_covers(&c.skeleton());
            let primes = cone.classify_primes(&covers).unwrap();
            let normal = cone.is_normal(c.n(), BUDGET).unwrap().normal;
            let hb = healthybread_check(
                &primes,
                normal,
                c.is_flag(),
                is_perfect(&c.skeleton(), 12).unwrap(),
            );
            assert!(hb.agree(), "{name}: sides disagree");
            assert_eq!(hb.value(), expected, "{name}");
        }
    }
}
