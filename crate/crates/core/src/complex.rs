//! Finite simplicial complexes on `{1..n}` stored by their facets.
//!
//! Vertex sets are `u32` bitmasks: vertex `i` is bit `i - 1`, so complexes
//! have at most 31 vertices. Every face operation is a mask operation.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numbers::binomial_i;

/// A set of vertices as a bitmask; vertex `i` is bit `i - 1`.
pub type VertexSet = u32;

pub const MAX_VERTICES: usize = 31;

#[inline]
pub fn vertex_bit(v: usize) -> VertexSet {
    debug_assert!((1..=MAX_VERTICES).contains(&v));
    1 << (v - 1)
}

/// Mask of the full vertex set `{1..n}`.
#[inline]
pub fn full_mask(n: usize) -> VertexSet {
    if n == 0 {
        0
    } else {
        u32::MAX >> (32 - n)
    }
}

/// Vertices of a mask in ascending order (1-based).
pub fn vertices_of(mask: VertexSet) -> impl Iterator<Item = usize> + Clone {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let v = rest.trailing_zeros() as usize + 1;
            rest &= rest - 1;
            Some(v)
        }
    })
}

pub fn mask_of(vertices: &[usize], n: usize) -> Result<VertexSet> {
    vertices.iter().try_fold(0, |acc, &v| {
        if v == 0 || v > n {
            Err(Error::VertexOutOfRange { vertex: v, n })
        } else {
            Ok(acc | vertex_bit(v))
        }
    })
}

/// Lexicographic order on the sorted vertex lists of two masks.
pub fn lex_cmp(a: VertexSet, b: VertexSet) -> Ordering {
    vertices_of(a).cmp(vertices_of(b))
}

/// All submasks of `mask`, including `0` and `mask` itself.
pub(crate) fn submasks(mask: VertexSet) -> impl Iterator<Item = VertexSet> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

/// Inclusion-maximal members of `sets`, sorted lexicographically.
pub(crate) fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| s & !k == 0) {
            kept.push(s);
        }
    }
    kept.sort_unstable_by(|a, b| lex_cmp(*a, *b));
    kept
}

/// Renumber the bits of `mask` that lie in `support` to consecutive low bits.
fn compress(mask: VertexSet, support: VertexSet) -> VertexSet {
    let mut out = 0;
    for (i, v) in vertices_of(support).enumerate() {
        if mask & vertex_bit(v) != 0 {
            out |= 1 << i;
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ComplexJson", into = "ComplexJson")]
pub struct SimplicialComplex {
    n: usize,
    /// Antichain of facets, sorted lexicographically by vertex list.
    facets: Vec<VertexSet>,
}

/// On-disk form: `{"n": 4, "facets": [[1,2],[1,3],[2,3,4]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexJson {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

impl TryFrom<ComplexJson> for SimplicialComplex {
    type Error = Error;

    fn try_from(json: ComplexJson) -> Result<Self> {
        SimplicialComplex::new(json.n, &json.facets)
    }
}

impl From<SimplicialComplex> for ComplexJson {
    fn from(c: SimplicialComplex) -> Self {
        ComplexJson { n: c.n, facets: c.facet_lists() }
    }
}

/// A complex together with the original label of each of its vertices:
/// vertex `i` of `complex` was vertex `labels[i - 1]` of the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeled {
    pub complex: SimplicialComplex,
    pub labels: Vec<usize>,
}

impl Relabeled {
    fn from_masks(sets: Vec<VertexSet>) -> Self {
        let support = sets.iter().fold(0, |acc, s| acc | s);
        if support == 0 {
            return Relabeled { complex: SimplicialComplex::empty_face(), labels: Vec::new() };
        }
        let labels: Vec<usize> = vertices_of(support).collect();
        let facets = sets.into_iter().map(|s| compress(s, support)).collect();
        Relabeled { complex: SimplicialComplex::from_masks_unchecked(labels.len(), facets), labels }
    }

    /// Facets translated back to the source complex's vertex labels.
    pub fn original_facets(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = self
            .complex
            .facets()
            .iter()
            .map(|&f| vertices_of(f).fold(0, |acc, v| acc | vertex_bit(self.labels[v - 1])))
            .collect();
        out.sort_unstable_by(|a, b| lex_cmp(*a, *b));
        out
    }
}

impl SimplicialComplex {
    /// The complex generated by `facets` on `{1..n}`. Non-maximal sets are
    /// dropped; every vertex in `1..=n` must occur in some facet.
    pub fn new<I, F>(n: usize, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: AsRef<[usize]>,
    {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::BadVertexCount(n));
        }
        let masks = facets.into_iter().map(|f| mask_of(f.as_ref(), n)).collect::<Result<Vec<_>>>()?;
        Self::from_masks(n, masks)
    }

    pub fn from_masks(n: usize, masks: Vec<VertexSet>) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::BadVertexCount(n));
        }
        if masks.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let full = full_mask(n);
        let mut union = 0;
        for &m in &masks {
            if m == 0 {
                return Err(Error::EmptyFacet);
            }
            if m & !full != 0 {
                let vertex = (m & !full).trailing_zeros() as usize + 1;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            union |= m;
        }
        if union != full {
            let ghost = (!union & full).trailing_zeros() as usize + 1;
            return Err(Error::GhostVertex(ghost));
        }
        Ok(Self::from_masks_unchecked(n, masks))
    }

    pub(crate) fn from_masks_unchecked(n: usize, masks: Vec<VertexSet>) -> Self {
        SimplicialComplex { n, facets: maximal_sets(masks) }
    }

    /// The complex `{∅}` with no vertices; the link of a facet.
    pub fn empty_face() -> Self {
        SimplicialComplex { n: 0, facets: vec![0] }
    }

    /// The full simplex on `n` vertices.
    pub fn simplex(n: usize) -> Result<Self> {
        Self::from_masks(n, vec![full_mask(n)])
    }

    /// The complete graph `K_n` as a complex of dimension `min(n - 1, 1)`.
    pub fn complete_graph(n: usize) -> Result<Self> {
        if n == 1 {
            return Self::from_masks(1, vec![1]);
        }
        Self::simplex(n)?.skeleton(1)
    }

    /// `n` isolated vertices.
    pub fn points(n: usize) -> Result<Self> {
        Self::from_masks(n, (1..=n).map(vertex_bit).collect())
    }

    /// A graph on `{1..n}` given by its edges, isolated vertices included as
    /// 0-dimensional facets.
    pub fn from_graph(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut masks: Vec<VertexSet> = Vec::with_capacity(edges.len() + n);
        for &(a, b) in edges {
            masks.push(mask_of(&[a, b], n)?);
        }
        masks.extend((1..=n.min(MAX_VERTICES)).map(vertex_bit));
        Self::from_masks(n, masks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| vertices_of(f).collect()).collect()
    }

    pub fn vertex_mask(&self) -> VertexSet {
        full_mask(self.n)
    }

    /// `-1` for the empty-face complex.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.count_ones() as isize).max().unwrap_or(0) - 1
    }

    pub fn is_face(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|&f| face & !f == 0)
    }

    /// Every face including `∅`, ordered by size and then lexicographically.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for &f in &self.facets {
            seen.extend(submasks(f));
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort_unstable_by(|a, b| a.count_ones().cmp(&b.count_ones()).then(lex_cmp(*a, *b)));
        out
    }

    pub fn is_pure(&self) -> bool {
        let size = self.facets[0].count_ones();
        self.facets.iter().all(|f| f.count_ones() == size)
    }

    pub fn f_vector(&self) -> FVector {
        let len = (self.dim() + 2) as usize;
        let mut counts = vec![0u64; len];
        for face in self.faces() {
            counts[face.count_ones() as usize] += 1;
        }
        FVector(counts)
    }

    pub fn h_vector(&self) -> HVector {
        self.f_vector().to_h_vector()
    }

    /// Neighbours of `v` in the 1-skeleton.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        let bit = vertex_bit(v);
        self.facets.iter().filter(|&&f| f & bit != 0).fold(0, |acc, f| acc | f) & !bit
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count_ones() as usize
    }

    /// Edges of the 1-skeleton as 2-element masks, lexicographically sorted.
    pub fn edges(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = Vec::new();
        for &f in &self.facets {
            for (i, a) in vertices_of(f).enumerate() {
                for b in vertices_of(f).skip(i + 1) {
                    out.push(vertex_bit(a) | vertex_bit(b));
                }
            }
        }
        out.sort_unstable_by(|a, b| lex_cmp(*a, *b));
        out.dedup();
        out
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn check_mask(&self, mask: VertexSet) -> Result<()> {
        let outside = mask & !self.vertex_mask();
        if outside != 0 {
            let vertex = outside.trailing_zeros() as usize + 1;
            Err(Error::VertexOutOfRange { vertex, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Faces contained in `within`, relabelled to `1..|within|` in ascending
    /// original order.
    pub fn restrict(&self, within: VertexSet) -> Result<Relabeled> {
        self.check_mask(within)?;
        let parts: Vec<VertexSet> = self.facets.iter().map(|f| f & within).filter(|&f| f != 0).collect();
        if parts.is_empty() {
            return Err(Error::EmptyRestriction);
        }
        Ok(Relabeled::from_masks(parts))
    }

    /// The deletion of `v`.
    pub fn delete(&self, v: usize) -> Result<Relabeled> {
        self.check_vertex(v)?;
        self.restrict(self.vertex_mask() & !vertex_bit(v))
    }

    /// `{G : G ∩ F = ∅, G ∪ F ∈ Δ}`. Linking at a facet yields `{∅}`.
    pub fn link(&self, face: VertexSet) -> Result<Relabeled> {
        if !self.is_face(face) {
            return Err(Error::NotAFace);
        }
        let parts: Vec<VertexSet> = self.facets.iter().filter(|&&f| f & face == face).map(|f| f & !face).collect();
        Ok(Relabeled::from_masks(parts))
    }

    pub fn vertex_link(&self, v: usize) -> Result<Relabeled> {
        self.check_vertex(v)?;
        self.link(vertex_bit(v))
    }

    /// Cone with apex `n + 1`.
    pub fn cone(&self) -> Result<Self> {
        let apex = self.n + 1;
        if apex > MAX_VERTICES {
            return Err(Error::BadVertexCount(apex));
        }
        let facets = self.facets.iter().map(|f| f | vertex_bit(apex)).collect();
        Ok(Self::from_masks_unchecked(apex, facets))
    }

    /// Faces of dimension at most `k`.
    pub fn skeleton(&self, k: usize) -> Result<Self> {
        let dim = self.dim();
        if k as isize > dim {
            return Err(Error::BadSkeletonDim { k: k as isize, dim });
        }
        let size = k as u32 + 1;
        let mut out = Vec::new();
        for &f in &self.facets {
            if f.count_ones() <= size {
                out.push(f);
            } else {
                out.extend(submasks(f).filter(|s| s.count_ones() == size));
            }
        }
        Ok(Self::from_masks_unchecked(self.n, out))
    }

    /// 1-skeleton of the cone.
    pub fn cone_1_skeleton(&self) -> Result<Self> {
        self.cone()?.skeleton(1)
    }

    /// The same complex with vertex `v` renamed to `perm[v - 1]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::BadVertexCount(perm.len()));
        }
        let facets =
            self.facets.iter().map(|&f| vertices_of(f).fold(0, |acc, v| acc | vertex_bit(perm[v - 1]))).collect();
        Self::from_masks(self.n, facets)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("complex serialises")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// `(f_{-1}, f_0, ..., f_d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(Vec<u64>);

impl FVector {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.first() != Some(&1) {
            return Err(Error::MalformedFVector("f_{-1} must be 1".into()));
        }
        Ok(FVector(entries))
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    /// `h_k = Σ_{i≤k} (-1)^{k-i} C(d+1-i, k-i) f_{i-1}`.
    pub fn to_h_vector(&self) -> HVector {
        let top = self.0.len() as i64 - 1; // d + 1
        let h = (0..=top)
            .map(|k| {
                (0..=k)
                    .map(|i| {
                        let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                        sign * binomial_i(top - i, k - i) * self.0[i as usize] as i64
                    })
                    .sum()
            })
            .collect();
        HVector(h)
    }
}

/// `(h_0, ..., h_{d+1})` with `h_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct HVector(Vec<i64>);

impl TryFrom<Vec<i64>> for HVector {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        HVector::new(v)
    }
}

impl From<HVector> for Vec<i64> {
    fn from(h: HVector) -> Self {
        h.0
    }
}

impl HVector {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.first() != Some(&1) {
            return Err(Error::MalformedHVector("h_0 must be 1".into()));
        }
        Ok(HVector(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Drop trailing zeros; `h_0` always stays.
    pub fn trimmed(&self) -> HVector {
        let mut v = self.0.clone();
        while v.len() > 1 && v.last() == Some(&0) {
            v.pop();
        }
        HVector(v)
    }

    /// Inverse transform, `f_{k-1} = Σ_{i≤k} C(d+1-i, k-i) h_i`.
    pub fn to_f_vector(&self) -> Result<FVector> {
        let top = self.0.len() as i64 - 1;
        let f = (0..=top)
            .map(|k| {
                let v: i64 = (0..=k).map(|i| binomial_i(top - i, k - i) * self.0[i as usize]).sum();
                u64::try_from(v).map_err(|_| Error::MalformedHVector(format!("gives negative f_{}", k - 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FVector(f))
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, h) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{h}")?;
        }
        write!(f, ")")
    }
}

/// Parses `1,4,7` or `(1,4,7)`.
impl FromStr for HVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let entries = inner
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::MalformedHVector(format!("bad entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        HVector::new(entries)
    }
}
