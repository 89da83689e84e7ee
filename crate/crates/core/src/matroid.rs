//! Matroid recognition, partial stars, the canonical complexes `Δ_m`, and
//! the invariants that classify rank-2 matroid complexes.
//!
//! A complex of dimension at most one is a matroid exactly when its
//! 1-skeleton is complete multipartite. Three independent recognisers are
//! kept: the restriction scan ([`MatroidTest::Definitional`]), the
//! vertex/edge link condition ([`MatroidTest::Fast`]), and the
//! anti-clique extraction behind [`extract_partition`].

use serde::{Deserialize, Serialize};

use crate::complex::{full_mask, vertex_bit, vertices_of, SimplicialComplex, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Vertex count above which the `2^n` restriction scan is refused.
pub const DEFINITIONAL_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatroidTest {
    /// Every restriction to a vertex subset is pure.
    Definitional,
    /// Dimension ≤ 1 only: pure, and every vertex link meets every edge.
    Fast,
}

pub fn is_matroid(complex: &SimplicialComplex, mode: MatroidTest) -> Result<bool> {
    match mode {
        MatroidTest::Definitional => is_matroid_definitional(complex),
        MatroidTest::Fast => is_matroid_fast(complex),
    }
}

fn is_matroid_definitional(complex: &SimplicialComplex) -> Result<bool> {
    let n = complex.n();
    if n > DEFINITIONAL_LIMIT {
        return Err(Error::TooLarge(n, DEFINITIONAL_LIMIT));
    }
    let facets = complex.facets();
    let mut scratch: Vec<VertexSet> = Vec::with_capacity(facets.len());
    for within in 1..=full_mask(n) {
        if !restriction_is_pure(facets, within, &mut scratch) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Purity of `Δ|W` straight from the facets: the restricted faces are
/// generated by the traces `F ∩ W`, and every trace must lie in a trace of
/// maximum size.
fn restriction_is_pure(facets: &[VertexSet], within: VertexSet, traces: &mut Vec<VertexSet>) -> bool {
    traces.clear();
    let mut top = 0;
    for &f in facets {
        let t = f & within;
        if t != 0 {
            top = top.max(t.count_ones());
            traces.push(t);
        }
    }
    traces
        .iter()
        .filter(|t| t.count_ones() < top)
        .all(|&small| traces.iter().any(|&big| big.count_ones() == top && small & !big == 0))
}

fn is_matroid_fast(complex: &SimplicialComplex) -> Result<bool> {
    let dim = complex.dim();
    if dim > 1 {
        return Err(Error::WrongDim { expected: 1, got: dim });
    }
    if dim <= 0 {
        return Ok(true);
    }
    if !complex.is_pure() {
        return Ok(false);
    }
    let links: Vec<VertexSet> = (1..=complex.n()).map(|v| complex.neighbors(v)).collect();
    Ok(links.iter().all(|&link| complex.facets().iter().all(|&edge| link & edge != 0)))
}

/// `v` is adjacent to every other vertex.
pub fn is_center(complex: &SimplicialComplex, v: usize) -> Result<bool> {
    if v == 0 || v > complex.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: complex.n() });
    }
    Ok(complex.neighbors(v) == complex.vertex_mask() & !vertex_bit(v))
}

/// The k-fold partial star avoiding `v`: new vertices `n+1..=n+k`, each
/// coned over the link of `v`, added to the faces of `complex`.
pub fn partial_star(complex: &SimplicialComplex, v: usize, k: usize) -> Result<SimplicialComplex> {
    let n = complex.n();
    if v == 0 || v > n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    if k == 0 {
        return Err(Error::BadCount);
    }
    if n + k > MAX_VERTICES {
        return Err(Error::BadVertexCount(n + k));
    }
    let bit = vertex_bit(v);
    let link_facets: Vec<VertexSet> = complex.facets().iter().filter(|&&f| f & bit != 0).map(|f| f & !bit).collect();
    let mut facets = complex.facets().to_vec();
    for w in n + 1..=n + k {
        facets.extend(link_facets.iter().map(|l| l | vertex_bit(w)));
    }
    SimplicialComplex::from_masks(n + k, facets)
}

/// Nonnegative sequence `(m_1, ..., m_s)`, `s ≥ 1`, indexing `Δ_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MSequence(Vec<usize>);

impl MSequence {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyMSequence);
        }
        Ok(MSequence(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Vertex count `s + Σ m_i`.
    pub fn vertex_count(&self) -> usize {
        self.0.len() + self.0.iter().sum::<usize>()
    }

    pub fn from_partition(lambda: &Partition) -> Self {
        MSequence(lambda.m_sequence())
    }
}

/// `Δ_m = S^{m_s}_s ⋯ S^{m_1}_1 K_s`.
pub fn construct_delta_m(m: &MSequence) -> Result<SimplicialComplex> {
    let n = m.vertex_count();
    if n > MAX_VERTICES {
        return Err(Error::BadVertexCount(n));
    }
    let mut complex = SimplicialComplex::complete_graph(m.entries().len())?;
    for (i, &count) in m.entries().iter().enumerate() {
        if count > 0 {
            complex = partial_star(&complex, i + 1, count)?;
        }
    }
    Ok(complex)
}

/// Representative of the class `Δ_λ`.
pub fn construct_from_partition(lambda: &Partition) -> Result<SimplicialComplex> {
    construct_delta_m(&MSequence::from_partition(lambda))
}

/// `D_i` = number of vertices of degree `i`, for `i` in `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn counts(&self) -> &[usize] {
        &self.0
    }
}

fn require_rank2_matroid(complex: &SimplicialComplex) -> Result<()> {
    let dim = complex.dim();
    if dim > 1 {
        return Err(Error::WrongDim { expected: 1, got: dim });
    }
    if complex.n() == 0 {
        return Err(Error::EmptyComplex);
    }
    if !is_matroid_fast(complex)? {
        return Err(Error::NotMatroid);
    }
    Ok(())
}

pub fn degree_sequence(complex: &SimplicialComplex) -> Result<DegreeSequence> {
    require_rank2_matroid(complex)?;
    Ok(raw_degree_sequence(complex))
}

pub(crate) fn raw_degree_sequence(complex: &SimplicialComplex) -> DegreeSequence {
    let n = complex.n();
    let mut counts = vec![0; n];
    for v in 1..=n {
        counts[complex.degree(v)] += 1;
    }
    DegreeSequence(counts)
}

/// Isomorphism of rank-2 matroid complexes by degree sequence. Not an
/// isomorphism test for general graphs, hence the matroid check.
pub fn iso_dim1(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<bool> {
    Ok(degree_sequence(a)? == degree_sequence(b)?)
}

/// Connected components of the complement of the 1-skeleton, each required
/// to be independent in `complex`. Ordered by decreasing size, ties by the
/// smallest vertex.
pub fn anticlique_blocks(complex: &SimplicialComplex) -> Result<Vec<VertexSet>> {
    let dim = complex.dim();
    if dim > 1 {
        return Err(Error::WrongDim { expected: 1, got: dim });
    }
    let n = complex.n();
    if n == 0 {
        return Err(Error::EmptyComplex);
    }
    let full = full_mask(n);
    let neighbors: Vec<VertexSet> = (1..=n).map(|v| complex.neighbors(v)).collect();
    let non_neighbors = |v: usize| full & !neighbors[v - 1] & !vertex_bit(v);

    let mut blocks: Vec<VertexSet> = Vec::new();
    let mut unseen = full;
    while unseen != 0 {
        let start = unseen.trailing_zeros() as usize + 1;
        let mut block = vertex_bit(start);
        let mut frontier = block;
        while frontier != 0 {
            let reach = vertices_of(frontier).fold(0, |acc, v| acc | non_neighbors(v));
            frontier = reach & !block;
            block |= reach;
        }
        unseen &= !block;
        if vertices_of(block).any(|v| neighbors[v - 1] & block != 0) {
            return Err(Error::NotMatroid);
        }
        blocks.push(block);
    }
    blocks.sort_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.trailing_zeros().cmp(&b.trailing_zeros())));
    Ok(blocks)
}

/// The partition `λ_Δ` of block sizes; succeeds iff the complex is a
/// matroid of dimension at most one.
pub fn extract_partition(complex: &SimplicialComplex) -> Result<Partition> {
    let blocks = anticlique_blocks(complex)?;
    Partition::new(blocks.iter().map(|b| b.count_ones()).collect())
}

/// Size of every maximal clique of a rank-2 matroid, `ℓ(λ_Δ)`.
pub fn max_clique_size(complex: &SimplicialComplex) -> Result<usize> {
    Ok(extract_partition(complex)?.len())
}

/// Whether the isomorphism class contains a shifted complex: at most one
/// block of size above one.
pub fn is_shifted_class(complex: &SimplicialComplex) -> Result<bool> {
    let lambda = extract_partition(complex)?;
    Ok(lambda.parts().iter().filter(|&&p| p > 1).count() <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::full_mask;

    fn c(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::new(n, facets).unwrap()
    }

    fn both(cx: &SimplicialComplex) -> (bool, bool) {
        (is_matroid(cx, MatroidTest::Definitional).unwrap(), is_matroid(cx, MatroidTest::Fast).unwrap())
    }

    fn star_over_triangle() -> SimplicialComplex {
        construct_delta_m(&MSequence::new(vec![3, 0, 0]).unwrap()).unwrap()
    }

    fn two_by_two() -> SimplicialComplex {
        construct_delta_m(&MSequence::new(vec![2, 2]).unwrap()).unwrap()
    }

    #[test]
    fn impure_triangle_with_edges_is_not_matroid() {
        let cx = c(4, &[&[1, 2], &[1, 3], &[2, 3, 4]]);
        assert!(!is_matroid(&cx, MatroidTest::Definitional).unwrap());
        assert!(matches!(is_matroid(&cx, MatroidTest::Fast), Err(Error::WrongDim { .. })));
    }

    #[test]
    fn paths() {
        let p4 = c(4, &[&[1, 2], &[2, 3], &[3, 4]]);
        assert_eq!(both(&p4), (false, false));
        assert_eq!(extract_partition(&p4), Err(Error::NotMatroid));
        let p3 = c(3, &[&[1, 2], &[2, 3]]);
        assert_eq!(both(&p3), (true, true));
        assert_eq!(extract_partition(&p3).unwrap().to_string(), "2+1");
    }

    #[test]
    fn isolated_vertex_plus_edge_is_impure() {
        let cx = SimplicialComplex::from_graph(3, &[(1, 2)]).unwrap();
        assert_eq!(both(&cx), (false, false));
        assert!(extract_partition(&cx).is_err());
    }

    #[test]
    fn definitional_limit() {
        let big = SimplicialComplex::points(21).unwrap();
        assert_eq!(is_matroid(&big, MatroidTest::Definitional), Err(Error::TooLarge(21, 20)));
        assert!(is_matroid(&big, MatroidTest::Fast).unwrap());
    }

    #[test]
    fn star_over_triangle_structure() {
        let s3 = star_over_triangle();
        assert_eq!(s3.n(), 6);
        assert_eq!(
            s3.facet_lists(),
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![2, 3],
                vec![2, 4],
                vec![2, 5],
                vec![2, 6],
                vec![3, 4],
                vec![3, 5],
                vec![3, 6]
            ]
        );
        let centers: Vec<usize> = (1..=6).filter(|&v| is_center(&s3, v).unwrap()).collect();
        assert_eq!(centers, vec![2, 3]);
        // link of vertex 1 is {2}, {3}
        assert_eq!(s3.vertex_link(1).unwrap().original_facets(), vec![0b010, 0b100]);
        assert_eq!(extract_partition(&s3).unwrap().to_string(), "4+1+1");
        assert_eq!(max_clique_size(&s3).unwrap(), 3);
        assert!(is_shifted_class(&s3).unwrap());
        assert_eq!(s3, partial_star(&SimplicialComplex::complete_graph(3).unwrap(), 1, 3).unwrap());
    }

    #[test]
    fn two_by_two_structure() {
        let t22 = two_by_two();
        let k2 = SimplicialComplex::complete_graph(2).unwrap();
        let built = partial_star(&partial_star(&k2, 1, 2).unwrap(), 2, 2).unwrap();
        assert_eq!(t22, built);
        assert!(t22.is_face(vertex_bit(3) | vertex_bit(5)));
        assert!(t22.is_face(vertex_bit(3) | vertex_bit(6)));
        assert!((1..=6).all(|v| !is_center(&t22, v).unwrap()));
        assert_eq!(
            anticlique_blocks(&t22).unwrap(),
            vec![0b001101, 0b110010] // {1,3,4}, {2,5,6}
        );
        assert!(!is_shifted_class(&t22).unwrap());
        assert_eq!(degree_sequence(&t22).unwrap().counts(), &[0, 0, 0, 6, 0, 0]);
        assert!(!iso_dim1(&star_over_triangle(), &t22).unwrap());
        assert_eq!(t22.h_vector().entries(), &[1, 4, 4]);
        assert_eq!(star_over_triangle().h_vector().entries(), &[1, 4, 4]);
    }

    #[test]
    fn cone_apex_is_center() {
        let cone = SimplicialComplex::points(4).unwrap().cone().unwrap();
        assert!(is_center(&cone, 5).unwrap());
        assert_eq!(is_center(&cone, 6), Err(Error::VertexOutOfRange { vertex: 6, n: 5 }));
    }

    #[test]
    fn delta_m_examples() {
        let d111 = construct_delta_m(&MSequence::new(vec![1, 1, 1]).unwrap()).unwrap();
        assert_eq!(d111.n(), 6);
        assert_eq!(d111.edges().len(), 12);
        assert_eq!(d111.h_vector().entries(), &[1, 4, 7]);
        assert_eq!(
            construct_delta_m(&MSequence::new(vec![0, 0, 0, 0]).unwrap()).unwrap(),
            SimplicialComplex::complete_graph(4).unwrap()
        );
        let zero_dim = construct_delta_m(&MSequence::new(vec![4]).unwrap()).unwrap();
        assert_eq!(zero_dim, SimplicialComplex::points(5).unwrap());
        assert_eq!(MSequence::new(vec![]), Err(Error::EmptyMSequence));
    }

    #[test]
    fn permuted_m_sequences_are_isomorphic() {
        let a = construct_delta_m(&MSequence::new(vec![2, 2, 0]).unwrap()).unwrap();
        let b = construct_delta_m(&MSequence::new(vec![0, 2, 2]).unwrap()).unwrap();
        assert!(iso_dim1(&a, &b).unwrap());
        let perm = [3, 1, 4, 6, 2, 5, 7];
        assert!(iso_dim1(&a, &a.permuted(&perm).unwrap()).unwrap());
    }

    #[test]
    fn complete_graph_invariants() {
        for n in 2..=7 {
            let k = SimplicialComplex::complete_graph(n).unwrap();
            assert_eq!(extract_partition(&k).unwrap().parts(), vec![1; n].as_slice());
            assert_eq!(max_clique_size(&k).unwrap(), n);
            assert!(is_shifted_class(&k).unwrap());
        }
    }

    #[test]
    fn non_matroid_rejected_by_invariants() {
        let p4 = c(4, &[&[1, 2], &[2, 3], &[3, 4]]);
        assert_eq!(degree_sequence(&p4), Err(Error::NotMatroid));
        assert_eq!(max_clique_size(&p4), Err(Error::NotMatroid));
        let tri = SimplicialComplex::simplex(3).unwrap();
        assert!(matches!(extract_partition(&tri), Err(Error::WrongDim { .. })));
    }

    #[test]
    fn partial_star_errors() {
        let k3 = SimplicialComplex::complete_graph(3).unwrap();
        assert_eq!(partial_star(&k3, 1, 0), Err(Error::BadCount));
        assert_eq!(partial_star(&k3, 4, 1), Err(Error::VertexOutOfRange { vertex: 4, n: 3 }));
    }

    #[test]
    fn extraction_reconstructs_delta_m() {
        for m in [vec![3, 1, 0, 2], vec![1, 1], vec![0, 5], vec![2, 0, 0, 0, 1]] {
            let ms = MSequence::new(m.clone()).unwrap();
            let cx = construct_delta_m(&ms).unwrap();
            assert!(is_matroid(&cx, MatroidTest::Definitional).unwrap());
            let mut expect: Vec<u32> = m.iter().map(|&x| x as u32 + 1).collect();
            expect.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(extract_partition(&cx).unwrap().parts(), expect.as_slice());
            assert_eq!(cx.n(), ms.vertex_count());
            assert!(full_mask(cx.n()) == cx.vertex_mask());
        }
    }
}
