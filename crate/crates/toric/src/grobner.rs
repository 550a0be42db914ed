//! The quasi-forest machinery: the block/cardinality face order, the two
//! families of quadratic binomials in the defining ideal, degrevlex leading
//! terms, Buchberger verification, standard-monomial normal forms, the
//! radicality of `(t)`, and a degree-bounded kernel oracle that double-checks
//! the basis against the raw multigrading.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::complex::{Face, LeafOrder, SimplicialComplex};
use crate::cone::{lattice_point, Cone, ConeError, MonomialPrime};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrobnerError {
    #[error("complex is not a quasi-forest")]
    NotQuasiForest,
    #[error("binomial y{0}y{1} - y{2}y{3} does not lie in the toric ideal")]
    NotInKernel(usize, usize, usize, usize),
    #[error("declared lead of y{0}y{1} - y{2}y{3} is not the degrevlex leading term")]
    LeadingTermMismatch(usize, usize, usize, usize),
    #[error("kernel oracle exceeded the configured monomial budget")]
    SizeCapExceeded,
    #[error(transparent)]
    Cone(#[from] ConeError),
}

/// The total order `G_1 > .. > G_p` on the faces of a quasi-forest: faces are
/// grouped into blocks `A_i` by the leaf order, blocks ordered first, then
/// cardinality, ties broken lexicographically. `G_1` is the empty face.
#[derive(Debug, Clone)]
pub struct FaceOrder {
    n: u32,
    faces: Vec<Face>,
    blocks: Vec<usize>,
    points: Vec<Vec<i64>>,
    leaf_facets: Vec<Face>,
}

impl FaceOrder {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Faces in order; `faces()[0]` is the empty face `G_1`.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Block index (0-based) of each face under the leaf order.
    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn leaf_facets(&self) -> &[Face] {
        &self.leaf_facets
    }

    pub fn index_of(&self, f: &Face) -> Option<usize> {
        self.faces.iter().position(|g| g == f)
    }

    /// The multigrading of a monomial: the image of its exponent vector under
    /// `y_i -> x_{G_i} t`, as a lattice point in `Z^(n+1)`.
    pub fn pi_image(&self, mono: &[usize]) -> Vec<i64> {
        let mut img = vec![0i64; self.n as usize + 1];
        for &i in mono {
            for (a, b) in img.iter_mut().zip(&self.points[i]) {
                *a += b;
            }
        }
        img
    }
}

/// Builds the face order of a quasi-forest from a leaf order.
pub fn face_order(c: &SimplicialComplex, lo: &LeafOrder) -> FaceOrder {
    let leaf_facets: Vec<Face> = lo.facets().to_vec();
    let mut tagged: Vec<(usize, Face)> = c
        .faces()
        .into_iter()
        .map(|g| {
            let block = leaf_facets
                .iter()
                .position(|f| g.is_subset(f))
                .expect("every face lies in some facet");
            (block, g)
        })
        .collect();
    tagged.sort_by(|(ba, a), (bb, b)| {
        ba.cmp(bb)
            .then_with(|| a.len().cmp(&b.len()))
            .then_with(|| a.verts().cmp(b.verts()))
    });
    let blocks: Vec<usize> = tagged.iter().map(|(b, _)| *b).collect();
    let faces: Vec<Face> = tagged.into_iter().map(|(_, g)| g).collect();
    let points = faces.iter().map(|f| lattice_point(f, c.n())).collect();
    FaceOrder {
        n: c.n(),
        faces,
        blocks,
        points,
        leaf_facets,
    }
}

/// A pure quadratic difference `y_i y_j - y_r y_s` in the defining ideal,
/// with `y_i y_j` the degrevlex lead. One relation can arise from both rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialRelation {
    pub lead: (usize, usize),
    pub trail: (usize, usize),
    /// Lead faces lie in a common facet; trail is intersection and union.
    pub from_f: bool,
    /// Cross-block rule: the vertex moved from the earlier face to the later.
    pub g_witness: Option<u32>,
}

/// Generates all binomials of the two families, deduplicated by (lead, trail)
/// and sorted.
pub fn generate_basis(fo: &FaceOrder) -> Vec<BinomialRelation> {
    let p = fo.len();
    let mut seen: BTreeMap<((usize, usize), (usize, usize)), BinomialRelation> = BTreeMap::new();

    // family (i): incomparable faces of a common facet; trail = intersection, union
    for i in 0..p {
        for j in i + 1..p {
            let gi = &fo.faces[i];
            let gj = &fo.faces[j];
            if gi.is_subset(gj) || gj.is_subset(gi) {
                continue;
            }
            let union = gi.union(gj);
            if !fo.leaf_facets.iter().any(|f| union.is_subset(f)) {
                continue;
            }
            let r = fo.index_of(&gi.intersection(gj)).expect("intersection is a face");
            let s = fo.index_of(&union).expect("union is a face");
            let key = ((i, j), (r.min(s), r.max(s)));
            seen.entry(key)
                .and_modify(|b| b.from_f = true)
                .or_insert(BinomialRelation {
                    lead: key.0,
                    trail: key.1,
                    from_f: true,
                    g_witness: None,
                });
        }
    }

    // family (ii): G_i in an earlier block than G_j, moving a vertex of
    // G_i that lies in G_j's facet but not in G_j
    for i in 0..p {
        for j in i + 1..p {
            let (bi, bj) = (fo.blocks[i], fo.blocks[j]);
            if bi >= bj {
                continue;
            }
            let gi = &fo.faces[i];
            let gj = &fo.faces[j];
            let fj = &fo.leaf_facets[bj];
            for &x in gi.verts() {
                if !fj.contains(x) || gj.contains(x) {
                    continue;
                }
                let r = fo.index_of(&gi.without(x)).expect("subface is a face");
                let s = fo.index_of(&gj.with(x)).expect("face inside the block facet");
                let key = ((i, j), (r.min(s), r.max(s)));
                seen.entry(key)
                    .and_modify(|b| {
                        if b.g_witness.is_none() {
                            b.g_witness = Some(x);
                        }
                    })
                    .or_insert(BinomialRelation {
                        lead: key.0,
                        trail: key.1,
                        from_f: false,
                        g_witness: Some(x),
                    });
            }
        }
    }

    seen.into_values().collect()
}

/// Degree-reverse-lexicographic comparison of exponent vectors over
/// `y_1 > .. > y_p`: higher total degree wins, ties go to the monomial whose
/// exponent difference has a negative last nonzero entry.
pub fn degrevlex_cmp(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let da: u64 = a.iter().map(|&x| u64::from(x)).sum();
    let db: u64 = b.iter().map(|&x| u64::from(x)).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.len()).rev() {
        let d = i64::from(a[i]) - i64::from(b[i]);
        if d != 0 {
            return if d < 0 { Ordering::Greater } else { Ordering::Less };
        }
    }
    Ordering::Equal
}

fn pair_exp(pair: (usize, usize), p: usize) -> Vec<u32> {
    let mut e = vec![0u32; p];
    e[pair.0] += 1;
    e[pair.1] += 1;
    e
}

/// Computes the degrevlex leading pair of a binomial and checks it is the
/// declared lead.
pub fn degrevlex_leading(
    b: &BinomialRelation,
    p: usize,
) -> Result<(usize, usize), GrobnerError> {
    let lead = pair_exp(b.lead, p);
    let trail = pair_exp(b.trail, p);
    if degrevlex_cmp(&lead, &trail) == std::cmp::Ordering::Greater {
        Ok(b.lead)
    } else {
        Err(GrobnerError::LeadingTermMismatch(
            b.lead.0, b.lead.1, b.trail.0, b.trail.1,
        ))
    }
}

/// One rewrite `y_i y_j -> y_r y_s` if the lead of `b` divides `mono`.
fn try_rewrite(mono: &mut [u32], b: &BinomialRelation) -> bool {
    let (i, j) = b.lead;
    if mono[i] >= 1 && mono[j] >= 1 && (i != j || mono[i] >= 2) {
        mono[i] -= 1;
        mono[j] -= 1;
        mono[b.trail.0] += 1;
        mono[b.trail.1] += 1;
        true
    } else {
        false
    }
}

/// The unique standard monomial congruent to `mono`, by first-match rewriting.
/// Every rewrite strictly decreases the monomial in degrevlex, so this ends.
pub fn normal_form(mono: &[u32], basis: &[BinomialRelation]) -> Vec<u32> {
    let mut m = mono.to_vec();
    'outer: loop {
        for b in basis {
            if try_rewrite(&mut m, b) {
                continue 'outer;
            }
        }
        return m;
    }
}

/// Like [`normal_form`] but `pick` chooses among the applicable rewrites, for
/// confluence checks.
pub fn normal_form_with(
    mono: &[u32],
    basis: &[BinomialRelation],
    mut pick: impl FnMut(usize) -> usize,
) -> Vec<u32> {
    let mut m = mono.to_vec();
    loop {
        let applicable: Vec<usize> = basis
            .iter()
            .enumerate()
            .filter(|(_, b)| {
                let (i, j) = b.lead;
                m[i] >= 1 && m[j] >= 1 && (i != j || m[i] >= 2)
            })
            .map(|(k, _)| k)
            .collect();
        if applicable.is_empty() {
            return m;
        }
        let b = &basis[applicable[pick(applicable.len())]];
        try_rewrite(&mut m, b);
    }
}

fn is_standard(mono: &[usize], leads: &[(usize, usize)]) -> bool {
    !leads
        .iter()
        .any(|&(a, b)| mono.contains(&a) && mono.contains(&b))
}

/// Buchberger's criterion for the binomial basis: every S-pair must reduce to
/// zero. Pairs with coprime leads are skipped unless `exhaustive` is set;
/// their S-polynomials always reduce by the product criterion.
pub fn buchberger_verify(
    fo: &FaceOrder,
    basis: &[BinomialRelation],
    exhaustive: bool,
) -> Result<bool, GrobnerError> {
    let p = fo.len();
    for b in basis {
        let lead_img = fo.pi_image(&[b.lead.0, b.lead.1]);
        let trail_img = fo.pi_image(&[b.trail.0, b.trail.1]);
        if lead_img != trail_img {
            return Err(GrobnerError::NotInKernel(
                b.lead.0, b.lead.1, b.trail.0, b.trail.1,
            ));
        }
        degrevlex_leading(b, p)?;
    }
    for (a, b1) in basis.iter().enumerate() {
        for b2 in basis.iter().skip(a + 1) {
            let shared = [b1.lead.0, b1.lead.1]
                .iter()
                .filter(|v| [b2.lead.0, b2.lead.1].contains(v))
                .count();
            if shared == 0 && !exhaustive {
                continue;
            }
            // lcm of two squarefree quadratic leads
            let mut lcm = vec![0u32; p];
            for &v in &[b1.lead.0, b1.lead.1, b2.lead.0, b2.lead.1] {
                lcm[v] = 1;
            }
            let m1 = s_branch(&lcm, b1);
            let m2 = s_branch(&lcm, b2);
            if normal_form(&m1, basis) != normal_form(&m2, basis) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `(lcm / lead) * trail` as an exponent vector.
fn s_branch(lcm: &[u32], b: &BinomialRelation) -> Vec<u32> {
    let mut m = lcm.to_vec();
    m[b.lead.0] -= 1;
    m[b.lead.1] -= 1;
    m[b.trail.0] += 1;
    m[b.trail.1] += 1;
    m
}

/// Which argument established radicality of `(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RadicalRoute {
    /// Quasi-forest: radical by the structure theorem, no search needed.
    Structural,
    /// All semigroup elements up to this height were checked directly.
    SemanticUpTo(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Radicality {
    pub radical: bool,
    pub route: RadicalRoute,
    /// A monomial in every minimal prime of `(t)` but not in `(t)`.
    pub witness: Option<Vec<i64>>,
}

/// Radicality for quasi-forests needs no search.
pub fn t_is_radical_structural() -> Radicality {
    Radicality {
        radical: true,
        route: RadicalRoute::Structural,
        witness: None,
    }
}

/// Bounded semantic check: enumerates semigroup elements by height and looks
/// for one that has positive valuation at every minimal prime of `(t)` yet is
/// not divisible by `t`. Sound for normal semigroups, where valuations govern
/// membership in the primes.
pub fn t_is_radical_semantic(
    cone: &Cone,
    primes: &[MonomialPrime],
    bound: u32,
    budget: u64,
) -> Result<Radicality, GrobnerError> {
    let n = cone.n();
    let t_forms: Vec<&[i64]> = primes
        .iter()
        .filter(|p| p.contains_t())
        .map(|p| p.form.coeffs.as_slice())
        .collect();
    let mut prev: std::collections::BTreeSet<Vec<i64>> = std::collections::BTreeSet::new();
    prev.insert(vec![0i64; n + 1]);
    let mut remaining = budget;
    for h in 1..=bound {
        let mut layer: std::collections::BTreeSet<Vec<i64>> = std::collections::BTreeSet::new();
        for s in &prev {
            for g in cone.generators() {
                layer.insert(s.iter().zip(g).map(|(a, b)| a + b).collect());
            }
        }
        if layer.len() as u64 > remaining {
            return Err(GrobnerError::SizeCapExceeded);
        }
        remaining -= layer.len() as u64;
        for u in &layer {
            let in_all_t_primes = t_forms
                .iter()
                .all(|f| f.iter().zip(u).map(|(a, b)| a * b).sum::<i64>() > 0);
            if !in_all_t_primes {
                continue;
            }
            let mut shifted = u.clone();
            shifted[n] -= 1;
            if !prev.contains(&shifted) {
                return Ok(Radicality {
                    radical: false,
                    route: RadicalRoute::SemanticUpTo(h),
                    witness: Some(u.clone()),
                });
            }
        }
        prev = layer;
    }
    Ok(Radicality {
        radical: true,
        route: RadicalRoute::SemanticUpTo(bound),
        witness: None,
    })
}

/// Monomials up to degree `d` grouped by multigrading.
#[derive(Debug, Clone)]
pub struct KernelOracle {
    /// All pairs of distinct monomials with the same image, i.e. all kernel
    /// binomials up to degree `d`, as sorted index multisets.
    pub pairs: Vec<(Vec<usize>, Vec<usize>)>,
    /// Two *standard* monomials with the same image, should any exist. A
    /// correct Groebner basis makes this impossible.
    pub standard_collision: Option<(Vec<usize>, Vec<usize>)>,
    pub monomials_seen: u64,
}

#[allow(clippy::too_many_arguments)]
fn oracle_rec(
    fo: &FaceOrder,
    d: u32,
    start: usize,
    mono: &mut Vec<usize>,
    img: &mut Vec<i64>,
    groups: &mut BTreeMap<Vec<i64>, Vec<Vec<usize>>>,
    seen: &mut u64,
    cap: u64,
) -> Result<(), GrobnerError> {
    if !mono.is_empty() {
        *seen += 1;
        if *seen > cap {
            return Err(GrobnerError::SizeCapExceeded);
        }
        groups.entry(img.clone()).or_default().push(mono.clone());
    }
    if mono.len() == d as usize {
        return Ok(());
    }
    for i in start..fo.len() {
        mono.push(i);
        for (a, b) in img.iter_mut().zip(&fo.points[i]) {
            *a += b;
        }
        oracle_rec(fo, d, i, mono, img, groups, seen, cap)?;
        mono.pop();
        for (a, b) in img.iter_mut().zip(&fo.points[i]) {
            *a -= b;
        }
    }
    Ok(())
}

/// Groups all monomials of degree `<= d` in the face variables by their
/// multigrading. `leads` are the basis leading pairs used to decide
/// standardness. `cap` bounds the number of monomials visited.
pub fn kernel_oracle(
    fo: &FaceOrder,
    leads: &[(usize, usize)],
    d: u32,
    cap: u64,
) -> Result<KernelOracle, GrobnerError> {
    let mut groups: BTreeMap<Vec<i64>, Vec<Vec<usize>>> = BTreeMap::new();
    let mut mono: Vec<usize> = Vec::new();
    let mut seen = 0u64;
    let mut img = vec![0i64; fo.n as usize + 1];
    oracle_rec(fo, d, 0, &mut mono, &mut img, &mut groups, &mut seen, cap)?;

    let mut pairs = Vec::new();
    let mut standard_collision = None;
    for monos in groups.values() {
        if monos.len() < 2 {
            continue;
        }
        for (i, a) in monos.iter().enumerate() {
            for b in monos.iter().skip(i + 1) {
                pairs.push((a.clone(), b.clone()));
                if standard_collision.is_none()
                    && is_standard(a, leads)
                    && is_standard(b, leads)
                {
                    standard_collision = Some((a.clone(), b.clone()));
                }
            }
        }
    }
    Ok(KernelOracle {
        pairs,
        standard_collision,
        monomials_seen: seen,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn order_of(c: &SimplicialComplex) -> FaceOrder {
        face_order(c, &c.leaf_order().expect("quasi-forest"))
    }

    fn face(v: &[u32]) -> Face {
        Face::new(v.to_vec())
    }

    #[test]
    fn face_order_of_path() {
        let fo = order_of(&fixtures::e3());
        let faces: Vec<Face> = fo.faces().to_vec();
        assert_eq!(
            faces,
            vec![
                face(&[]),
                face(&[1]),
                face(&[2]),
                face(&[1, 2]),
                face(&[3]),
                face(&[2, 3])
            ]
        );
        assert_eq!(fo.blocks(), &[0, 0, 0, 0, 1, 1]);
    }

    #[test]
    fn face_order_of_edge_and_singleton() {
        let fo = order_of(&fixtures::e1());
        assert_eq!(
            fo.faces().to_vec(),
            vec![face(&[]), face(&[1]), face(&[2]), face(&[1, 2])]
        );
        let single = SimplicialComplex::new(1, vec![vec![1]]).unwrap();
        let fo = order_of(&single);
        assert_eq!(fo.faces().to_vec(), vec![face(&[]), face(&[1])]);
    }

    #[test]
    fn basis_of_path_is_the_three_spec_binomials() {
        let fo = order_of(&fixtures::e3());
        let basis = generate_basis(&fo);
        let got: Vec<((usize, usize), (usize, usize))> =
            basis.iter().map(|b| (b.lead, b.trail)).collect();
        // y2y3 - y1y4, y3y5 - y1y6, y4y5 - y2y6 in 1-based variables
        assert_eq!(
            got,
            vec![((1, 2), (0, 3)), ((2, 4), (0, 5)), ((3, 4), (1, 5))]
        );
        // the middle one arises from both families
        assert!(basis[1].from_f && basis[1].g_witness == Some(2));
        assert!(basis[0].from_f && basis[0].g_witness.is_none());
        assert!(!basis[2].from_f && basis[2].g_witness == Some(2));
    }

    #[test]
    fn basis_of_edge_and_simplex() {
        let fo = order_of(&fixtures::e1());
        let basis = generate_basis(&fo);
        assert_eq!(basis.len(), 1);
        assert_eq!((basis[0].lead, basis[0].trail), ((1, 2), (0, 3)));

        let single = SimplicialComplex::new(1, vec![vec![1]]).unwrap();
        assert!(generate_basis(&order_of(&single)).is_empty());
    }

    #[test]
    fn declared_leads_are_degrevlex_leads() {
        for c in [fixtures::e1(), fixtures::e3(), fixtures::d1()] {
            let fo = order_of(&c);
            let basis = generate_basis(&fo);
            for b in &basis {
                assert_eq!(degrevlex_leading(b, fo.len()).unwrap(), b.lead);
            }
        }
    }

    #[test]
    fn degrevlex_rejects_a_swapped_binomial() {
        let fo = order_of(&fixtures::e3());
        let b = BinomialRelation {
            lead: (0, 3),
            trail: (1, 2),
            from_f: true,
            g_witness: None,
        };
        assert!(matches!(
            degrevlex_leading(&b, fo.len()),
            Err(GrobnerError::LeadingTermMismatch(..))
        ));
    }

    #[test]
    fn buchberger_on_fixtures() {
        for c in [fixtures::e1(), fixtures::e3(), fixtures::d1()] {
            let fo = order_of(&c);
            let basis = generate_basis(&fo);
            assert_eq!(buchberger_verify(&fo, &basis, false), Ok(true));
            assert_eq!(buchberger_verify(&fo, &basis, true), Ok(true));
        }
    }

    #[test]
    fn removing_a_basis_element_leaks_a_standard_collision() {
        let fo = order_of(&fixtures::e3());
        let basis = generate_basis(&fo);
        for drop in 0..basis.len() {
            let mutant: Vec<BinomialRelation> = basis
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != drop)
                .map(|(_, b)| b.clone())
                .collect();
            let leads: Vec<(usize, usize)> = mutant.iter().map(|b| b.lead).collect();
            let oracle = kernel_oracle(&fo, &leads, 2, 100_000).unwrap();
            assert!(
                oracle.standard_collision.is_some(),
                "dropping binomial {drop} should break standard-monomial uniqueness"
            );
        }
    }

    #[test]
    fn normal_form_examples() {
        let fo = order_of(&fixtures::e3());
        let basis = generate_basis(&fo);
        let p = fo.len();
        let mut m = vec![0u32; p];
        m[1] = 1;
        m[2] = 1; // y2y3
        let mut expect = vec![0u32; p];
        expect[0] = 1;
        expect[3] = 1; // y1y4
        assert_eq!(normal_form(&m, &basis), expect);

        let mut m = vec![0u32; p];
        m[3] = 1;
        m[4] = 1; // y4y5
        let mut expect = vec![0u32; p];
        expect[1] = 1;
        expect[5] = 1; // y2y6
        assert_eq!(normal_form(&m, &basis), expect);

        let mut m = vec![0u32; p];
        m[0] = 2; // y1^2 is already standard
        assert_eq!(normal_form(&m, &basis), m);
    }

    #[test]
    fn radicality_of_the_fixtures() {
        let e2 = fixtures::e2();
        let cone = Cone::new(&e2).unwrap();
        let covers = crate::graph::minimal_vertex_covers(&e2.skeleton());
        let primes = cone.classify_primes(&covers).unwrap();
        let r = t_is_radical_semantic(&cone, &primes, 6, 10_000_000).unwrap();
        assert!(!r.radical);
        assert_eq!(r.witness, Some(vec![1, 1, 1, 2]));

        for c in [fixtures::e1(), fixtures::e3()] {
            let cone = Cone::new(&c).unwrap();
            let covers = crate::graph::minimal_vertex_covers(&c.skeleton());
            let primes = cone.classify_primes(&covers).unwrap();
            let r = t_is_radical_semantic(&cone, &primes, 6, 10_000_000).unwrap();
            assert!(r.radical, "quasi-forest fixtures have radical (t)");
            assert!(t_is_radical_structural().radical);
        }
    }

    #[test]
    fn kernel_oracle_of_path_at_degree_two() {
        let fo = order_of(&fixtures::e3());
        let basis = generate_basis(&fo);
        let leads: Vec<(usize, usize)> = basis.iter().map(|b| b.lead).collect();
        let oracle = kernel_oracle(&fo, &leads, 2, 100_000).unwrap();
        let expect: Vec<(Vec<usize>, Vec<usize>)> = vec![
            (vec![0, 3], vec![1, 2]),
            (vec![0, 5], vec![2, 4]),
            (vec![1, 5], vec![3, 4]),
        ];
        let mut got = oracle.pairs.clone();
        got.sort();
        assert_eq!(got, expect);
        assert!(oracle.standard_collision.is_none());
    }

    #[test]
    fn kernel_pairs_of_edge_reduce_to_equal_normal_forms() {
        let fo = order_of(&fixtures::e1());
        let basis = generate_basis(&fo);
        let leads: Vec<(usize, usize)> = basis.iter().map(|b| b.lead).collect();
        let d2 = kernel_oracle(&fo, &leads, 2, 100_000).unwrap();
        assert_eq!(d2.pairs, vec![(vec![0, 3], vec![1, 2])]);
        let d3 = kernel_oracle(&fo, &leads, 3, 100_000).unwrap();
        assert!(!d3.pairs.is_empty());
        for (a, b) in &d3.pairs {
            let ea = to_exp(a, fo.len());
            let eb = to_exp(b, fo.len());
            assert_eq!(normal_form(&ea, &basis), normal_form(&eb, &basis));
        }
    }

    fn to_exp(mono: &[usize], p: usize) -> Vec<u32> {
        let mut e = vec![0u32; p];
        for &i in mono {
            e[i] += 1;
        }
        e
    }

    #[test]
    fn oracle_cap_is_enforced() {
        let fo = order_of(&fixtures::d1());
        assert!(matches!(
            kernel_oracle(&fo, &[], 4, 100),
            Err(GrobnerError::SizeCapExceeded)
        ));
    }
}
