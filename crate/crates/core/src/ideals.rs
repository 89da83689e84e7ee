//! Monomial ideals: Stanley–Reisner ideals of complexes of dimension at most
//! one, the witness ideals `J_λ`, Hilbert functions of artinian quotients,
//! socles and purity.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::complex::{full_mask, lex_cmp, maximal_sets, vertex_bit, vertices_of, SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::matroid::{anticlique_blocks, is_matroid, MatroidTest};
use crate::partition::Partition;

/// Largest vertex count for which face tables are built exhaustively.
pub const FACE_TABLE_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(vars: usize) -> Self {
        Monomial { exps: vec![0; vars] }
    }

    /// `x_i`, 1-based.
    pub fn var(vars: usize, i: usize) -> Self {
        let mut m = Monomial::one(vars);
        m.exps[i - 1] = 1;
        m
    }

    /// `x_F` for a vertex set `F`.
    pub fn squarefree(vars: usize, support: VertexSet) -> Self {
        let mut m = Monomial::one(vars);
        for v in vertices_of(support) {
            m.exps[v - 1] = 1;
        }
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Vertex set of the variables present.
    pub fn support(&self) -> VertexSet {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).fold(0, |acc, (i, _)| acc | vertex_bit(i + 1))
    }

    pub fn times_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[i - 1] += 1;
        m
    }

    /// 1-based index of the last variable present, `0` for the unit.
    fn last_var(&self) -> usize {
        self.exps.iter().rposition(|&e| e > 0).map_or(0, |i| i + 1)
    }

    /// Parse `x1^2*x3` (or `1`) as a monomial in `vars` variables.
    pub fn parse(text: &str, vars: usize) -> Result<Self> {
        let text = text.trim();
        let bad = || Error::MalformedMonomial(text.to_string());
        let mut m = Monomial::one(vars);
        if text == "1" {
            return Ok(m);
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let body = factor.strip_prefix('x').ok_or_else(bad)?;
            let (index, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e.parse::<u32>().map_err(|_| bad())?),
                None => (body, 1),
            };
            let index: usize = index.parse().map_err(|_| bad())?;
            if index == 0 || index > vars {
                return Err(Error::VariableMismatch { expected: vars, got: index });
            }
            m.exps[index - 1] += exp;
        }
        Ok(m)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let factors = self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| {
            if e == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{e}", i + 1)
            }
        });
        write!(f, "{}", factors.format("*"))
    }
}

/// By degree, then exponent vectors in decreasing order (`x1^2`, `x1*x2`,
/// `x2^2`, ...).
fn graded_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.exps.cmp(&a.exps))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "IdealJson", into = "IdealJson")]
pub struct MonomialIdeal {
    vars: usize,
    gens: Vec<Monomial>,
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    vars: usize,
    gens: Vec<Vec<u32>>,
}

impl TryFrom<IdealJson> for MonomialIdeal {
    type Error = Error;

    fn try_from(j: IdealJson) -> Result<Self> {
        MonomialIdeal::new(j.vars, j.gens.into_iter().map(Monomial::new).collect())
    }
}

impl From<MonomialIdeal> for IdealJson {
    fn from(i: MonomialIdeal) -> Self {
        IdealJson { vars: i.vars, gens: i.gens.into_iter().map(|m| m.exps).collect() }
    }
}

impl MonomialIdeal {
    /// Keeps only the minimal generators.
    pub fn new(vars: usize, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(bad) = gens.iter().find(|g| g.vars() != vars) {
            return Err(Error::VariableMismatch { expected: vars, got: bad.vars() });
        }
        let mut gens = gens;
        gens.sort_by(graded_cmp);
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        Ok(MonomialIdeal { vars, gens: minimal })
    }

    /// `⟨x_1, ..., x_v⟩^d`.
    pub fn power_of_maximal(vars: usize, d: u32) -> Self {
        MonomialIdeal { vars, gens: monomials_of_degree(vars, d) }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn is_artinian(&self) -> bool {
        let pure_powers: Vec<usize> =
            self.gens.iter().filter(|g| g.support().count_ones() <= 1).map(|g| g.last_var()).collect();
        pure_powers.contains(&0) || (1..=self.vars).all(|i| pure_powers.contains(&i))
    }

    /// `I : x_i`.
    pub fn colon_by_variable(&self, i: usize) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut g = g.clone();
                g.exps[i - 1] = g.exps[i - 1].saturating_sub(1);
                g
            })
            .collect();
        MonomialIdeal::new(self.vars, gens).expect("same variable count")
    }

    /// `I + ⟨x_i⟩`.
    pub fn plus_variable(&self, i: usize) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.push(Monomial::var(self.vars, i));
        MonomialIdeal::new(self.vars, gens).expect("same variable count")
    }

    /// One generator per line.
    pub fn to_text(&self) -> String {
        self.gens.iter().map(|g| format!("{g}\n")).collect()
    }

    pub fn from_text(text: &str, vars: usize) -> Result<Self> {
        let gens = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| Monomial::parse(l, vars))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(vars, gens)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ideal serialises")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// All monomials of degree `d` in `vars` variables, in graded order.
pub fn monomials_of_degree(vars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; vars];
    fn fill(pos: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos + 1 >= current.len() {
            if let Some(last) = current.last_mut() {
                *last = left;
                out.push(Monomial::new(current.clone()));
            } else if left == 0 {
                out.push(Monomial::new(Vec::new()));
            }
            return;
        }
        for e in (0..=left).rev() {
            current[pos] = e;
            fill(pos + 1, left - e, current, out);
        }
        current[pos] = 0;
    }
    fill(0, d, &mut current, &mut out);
    out
}

/// Standard monomials of each degree, from `1` up to the last nonempty
/// degree.
fn standard_monomials_by_degree(ideal: &MonomialIdeal) -> Result<Vec<Vec<Monomial>>> {
    if !ideal.is_artinian() {
        return Err(Error::NotArtinian);
    }
    let unit = Monomial::one(ideal.vars);
    let mut layers: Vec<Vec<Monomial>> = Vec::new();
    let mut layer = if ideal.contains(&unit) { Vec::new() } else { vec![unit] };
    while !layer.is_empty() {
        // every divisor of a standard monomial is standard, so each one of
        // the next degree is reached from exactly one predecessor by
        // multiplying with a variable at or after its last variable
        let next: Vec<Monomial> = layer
            .iter()
            .flat_map(|u| (u.last_var().max(1)..=ideal.vars).map(move |i| u.times_var(i)))
            .filter(|m| !ideal.contains(m))
            .collect();
        layers.push(layer);
        layer = next;
    }
    Ok(layers)
}

pub fn standard_monomials_of_degree(ideal: &MonomialIdeal, d: u32) -> Result<Vec<Monomial>> {
    Ok(standard_monomials_by_degree(ideal)?.into_iter().nth(d as usize).unwrap_or_default())
}

/// `dim_k (S/I)_d` for `d = 0` up to the last nonzero value.
pub fn hilbert_function(ideal: &MonomialIdeal) -> Result<Vec<u64>> {
    Ok(standard_monomials_by_degree(ideal)?.iter().map(|l| l.len() as u64).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocleReport {
    pub socle: Vec<Monomial>,
    pub socle_degrees: Vec<u32>,
    pub is_pure: bool,
    pub is_level: bool,
}

/// Standard monomials that are maximal under divisibility.
pub fn maximal_standard_monomials(ideal: &MonomialIdeal) -> Result<Vec<Monomial>> {
    let socle = standard_monomials_by_degree(ideal)?
        .into_iter()
        .flatten()
        .filter(|u| (1..=ideal.vars).all(|i| ideal.contains(&u.times_var(i))))
        .collect();
    Ok(socle)
}

pub fn socle_and_purity(ideal: &MonomialIdeal) -> Result<SocleReport> {
    let socle = maximal_standard_monomials(ideal)?;
    let socle_degrees: Vec<u32> = socle.iter().map(Monomial::degree).sorted().dedup().collect();
    let pure = socle_degrees.len() <= 1;
    Ok(SocleReport { socle, socle_degrees, is_pure: pure, is_level: pure })
}

/// Generated by the monomials of the minimal non-faces.
pub fn stanley_reisner(complex: &SimplicialComplex) -> Result<MonomialIdeal> {
    let n = complex.n();
    if n > FACE_TABLE_LIMIT {
        return Err(Error::TooLarge(n, FACE_TABLE_LIMIT));
    }
    let size = 1usize << n;
    let mut is_face = vec![false; size];
    for &f in complex.facets() {
        is_face[f as usize] = true;
    }
    for mask in (0..size).rev() {
        if is_face[mask] {
            for v in vertices_of(mask as VertexSet) {
                is_face[mask & !(vertex_bit(v) as usize)] = true;
            }
        }
    }
    let mut minimal_nonfaces: Vec<VertexSet> = (1..size)
        .filter(|&mask| {
            !is_face[mask] && vertices_of(mask as VertexSet).all(|v| is_face[mask & !(vertex_bit(v) as usize)])
        })
        .map(|mask| mask as VertexSet)
        .collect();
    minimal_nonfaces.sort_by(|&a, &b| a.count_ones().cmp(&b.count_ones()).then(lex_cmp(a, b)));
    let gens = minimal_nonfaces.into_iter().map(|s| Monomial::squarefree(n, s)).collect();
    let ideal = MonomialIdeal::new(n, gens)?;
    if complex.dim() == 1 && is_matroid(complex, MatroidTest::Fast)? {
        let blocks = anticlique_blocks(complex)?;
        debug_assert_eq!(ideal, sr_ideal_from_blocks(n, &blocks)?);
    }
    Ok(ideal)
}

/// `Σ m̂²_σ + m̂³` on `n` variables: every squarefree quadric inside a block
/// and every squarefree cubic.
pub fn sr_ideal_from_blocks(n: usize, blocks: &[VertexSet]) -> Result<MonomialIdeal> {
    let mut gens = Vec::new();
    for &b in blocks {
        for pair in vertices_of(b).combinations(2) {
            gens.push(Monomial::squarefree(n, vertex_bit(pair[0]) | vertex_bit(pair[1])));
        }
    }
    for triple in (1..=n).combinations(3) {
        gens.push(Monomial::squarefree(n, triple.iter().fold(0, |acc, &v| acc | vertex_bit(v))));
    }
    MonomialIdeal::new(n, gens)
}

/// The complex whose faces are the supports of squarefree monomials outside
/// `ideal`. `max_dim` bounds the dimension accepted.
pub fn complex_from_ideal(ideal: &MonomialIdeal, max_dim: Option<isize>) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = ideal.vars();
    if n == 0 || n > 31 {
        return Err(Error::BadVertexCount(n));
    }
    if n > FACE_TABLE_LIMIT {
        return Err(Error::TooLarge(n, FACE_TABLE_LIMIT));
    }
    let supports: Vec<VertexSet> = ideal.gens().iter().map(Monomial::support).collect();
    if let Some(ghost) = (1..=n).find(|&v| supports.iter().any(|&s| s & !vertex_bit(v) == 0)) {
        return Err(Error::GhostVertex(ghost));
    }
    let faces: Vec<VertexSet> = (1..=full_mask(n)).filter(|&mask| supports.iter().all(|&s| s & mask != s)).collect();
    let complex = SimplicialComplex::from_masks(n, maximal_sets(faces))?;
    if let Some(max) = max_dim {
        if complex.dim() > max {
            return Err(Error::DimTooHigh { got: complex.dim(), max });
        }
    }
    Ok(complex)
}

/// `J_λ`: with `m_i = λ_i - 1` and consecutive blocks `σ_i` of `m_i`
/// variables among `x_1..x_{n-2}`, every degree-2 monomial inside a block
/// plus every degree-3 monomial. For `λ = n` and `λ = (n-1)+1` it is the
/// square of the maximal ideal in `n-1` and `n-2` variables.
pub fn witness_ideal(lambda: &Partition) -> MonomialIdeal {
    let n = lambda.n();
    if lambda.len() == 1 {
        return MonomialIdeal::power_of_maximal(n - 1, 2);
    }
    if lambda.largest() as usize == n - 1 {
        return MonomialIdeal::power_of_maximal(n - 2, 2);
    }
    let vars = n - 2;
    let mut gens = monomials_of_degree(vars, 3);
    let mut start = 0;
    for m in lambda.m_sequence() {
        let block = &(start..start + m).collect::<Vec<_>>();
        for (i, &a) in block.iter().enumerate() {
            for &b in &block[i..] {
                let mut g = Monomial::one(vars);
                g.exps[a] += 1;
                g.exps[b] += 1;
                gens.push(g);
            }
        }
        start += m;
    }
    MonomialIdeal::new(vars, gens).expect("consistent variable count")
}

/// A set partition of `{1..n}`, blocks sorted by smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<VertexSet>,
}

impl SetPartition {
    pub fn new(n: usize, mut blocks: Vec<VertexSet>) -> Result<Self> {
        if n == 0 || n > 31 {
            return Err(Error::BadVertexCount(n));
        }
        if blocks.contains(&0) {
            return Err(Error::EmptyFacet);
        }
        let mut seen: VertexSet = 0;
        for &b in &blocks {
            if b & seen != 0 {
                return Err(Error::MalformedPartition("blocks overlap".into()));
            }
            seen |= b;
        }
        if seen != full_mask(n) {
            return Err(Error::MalformedPartition("blocks do not cover the vertices".into()));
        }
        blocks.sort_by_key(|b| b.trailing_zeros());
        Ok(SetPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.blocks.iter().map(|b| b.count_ones()).collect()).expect("blocks are nonempty")
    }
}

/// Every set partition of `{1..|λ|}` whose block sizes are the parts of `λ`.
pub fn set_partitions_subordinate(lambda: &Partition) -> Vec<SetPartition> {
    let n = lambda.n();
    let mut sizes: Vec<u32> = lambda.parts().to_vec();
    let mut out = Vec::new();
    let mut blocks = Vec::new();
    fn go(n: usize, free: VertexSet, sizes: &mut Vec<u32>, blocks: &mut Vec<VertexSet>, out: &mut Vec<SetPartition>) {
        if free == 0 {
            out.push(SetPartition::new(n, blocks.clone()).expect("valid by construction"));
            return;
        }
        let first = free.trailing_zeros() as usize + 1;
        let rest = free & !vertex_bit(first);
        let choices: Vec<u32> = sizes.iter().copied().dedup().collect();
        for size in choices {
            let at = sizes.iter().position(|&s| s == size).expect("present");
            sizes.remove(at);
            for others in vertices_of(rest).combinations(size as usize - 1) {
                let block = others.iter().fold(vertex_bit(first), |acc, &v| acc | vertex_bit(v));
                blocks.push(block);
                go(n, free & !block, sizes, blocks, out);
                blocks.pop();
            }
            sizes.insert(at, size);
        }
    }
    go(n, full_mask(n), &mut sizes, &mut blocks, &mut out);
    out
}

/// The complete multipartite graph with the blocks as parts; a single block
/// gives `n` isolated vertices.
pub fn complex_of_set_partition(sp: &SetPartition) -> SimplicialComplex {
    let n = sp.n();
    if sp.blocks().len() == 1 {
        return SimplicialComplex::points(n).expect("n in range");
    }
    let block_of = |v: usize| sp.blocks().iter().position(|&b| b & vertex_bit(v) != 0);
    let edges: Vec<(usize, usize)> =
        (1..=n).tuple_combinations().filter(|&(a, b)| block_of(a) != block_of(b)).collect();
    SimplicialComplex::from_graph(n, &edges).expect("every vertex has a neighbour")
}

impl FromStr for MonomialIdeal {
    type Err = Error;

    /// JSON form only; the text form needs the variable count.
    fn from_str(s: &str) -> Result<Self> {
        MonomialIdeal::from_json(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classification::h_of_partition;
    use crate::matroid::construct_from_partition;
    use crate::partition::partitions_of;

    fn m(text: &str, vars: usize) -> Monomial {
        Monomial::parse(text, vars).unwrap()
    }

    fn ideal(gens: &[&str], vars: usize) -> MonomialIdeal {
        MonomialIdeal::new(vars, gens.iter().map(|g| m(g, vars)).collect()).unwrap()
    }

    fn strings(ms: &[Monomial]) -> Vec<String> {
        ms.iter().map(|m| m.to_string()).collect()
    }

    #[test]
    fn monomial_text() {
        assert_eq!(m("x1^2*x3", 3).exponents(), &[2, 0, 1]);
        assert_eq!(m("x1^2*x3", 3).to_string(), "x1^2*x3");
        assert_eq!(m("1", 2).to_string(), "1");
        assert_eq!(m("x2*x2", 2).to_string(), "x2^2");
        assert!(Monomial::parse("y1", 2).is_err());
        assert!(Monomial::parse("x3", 2).is_err());
        assert!(Monomial::parse("x1^a", 2).is_err());
    }

    #[test]
    fn ideal_minimalises_and_orders() {
        let i = ideal(&["x1^2*x2", "x2^2", "x1^2", "x1*x2"], 2);
        assert_eq!(strings(i.gens()), ["x1^2", "x1*x2", "x2^2"]);
        assert!(MonomialIdeal::new(2, vec![Monomial::one(3)]).is_err());
    }

    #[test]
    fn json_and_text_round_trip() {
        let i = ideal(&["x1^2", "x1*x2", "x2^3"], 2);
        assert_eq!(i.to_json(), r#"{"vars":2,"gens":[[2,0],[1,1],[0,3]]}"#);
        assert_eq!(MonomialIdeal::from_json(&i.to_json()).unwrap(), i);
        assert_eq!(i.to_text(), "x1^2\nx1*x2\nx2^3\n");
        assert_eq!(MonomialIdeal::from_text(&i.to_text(), 2).unwrap(), i);
    }

    #[test]
    fn hilbert_function_examples() {
        let i = ideal(&["x1^2", "x1*x2", "x2^3"], 2);
        assert_eq!(hilbert_function(&i).unwrap(), vec![1, 2, 1]);
        let r = socle_and_purity(&i).unwrap();
        assert_eq!(strings(&r.socle), ["x1", "x2^2"]);
        assert_eq!(r.socle_degrees, vec![1, 2]);
        assert!(!r.is_pure && !r.is_level);

        let sq = MonomialIdeal::power_of_maximal(4, 2);
        assert_eq!(hilbert_function(&sq).unwrap(), vec![1, 4]);
        let r = socle_and_purity(&sq).unwrap();
        assert_eq!(strings(&r.socle), ["x1", "x2", "x3", "x4"]);
        assert!(r.is_pure);

        let not_artinian = ideal(&["x1^2"], 2);
        assert_eq!(hilbert_function(&not_artinian), Err(Error::NotArtinian));
        assert_eq!(socle_and_purity(&not_artinian), Err(Error::NotArtinian));
    }

    #[test]
    fn witness_examples() {
        let j = witness_ideal(&"3+1+1".parse().unwrap());
        assert_eq!(j.vars(), 3);
        assert!(j.gens().contains(&m("x1^2", 3)));
        assert!(j.gens().contains(&m("x1*x2", 3)));
        assert!(j.gens().contains(&m("x2^2", 3)));
        assert!(j.gens().contains(&m("x3^3", 3)));
        assert_eq!(hilbert_function(&j).unwrap(), vec![1, 3, 3]);
        let r = socle_and_purity(&j).unwrap();
        assert_eq!(strings(&r.socle), ["x1*x3", "x2*x3", "x3^2"]);
        assert!(r.is_pure);

        let j = witness_ideal(&"2+2+2".parse().unwrap());
        assert_eq!(j.vars(), 4);
        assert_eq!(strings(&j.gens()[..3]), ["x1^2", "x2^2", "x3^2"]);
        assert_eq!(hilbert_function(&j).unwrap(), vec![1, 4, 7]);

        assert_eq!(hilbert_function(&witness_ideal(&"5+1".parse().unwrap())).unwrap(), vec![1, 4]);
        assert_eq!(hilbert_function(&witness_ideal(&"4".parse().unwrap())).unwrap(), vec![1, 3]);
        assert_eq!(hilbert_function(&witness_ideal(&"1+1".parse().unwrap())).unwrap(), vec![1]);
        assert_eq!(hilbert_function(&witness_ideal(&"1".parse().unwrap())).unwrap(), vec![1]);
    }

    #[test]
    fn witness_realises_every_hvector() {
        for n in 1..=8 {
            for lam in partitions_of(n) {
                let j = witness_ideal(&lam);
                let want: Vec<u64> = h_of_partition(&lam).trimmed().entries().iter().map(|&x| x as u64).collect();
                assert_eq!(hilbert_function(&j).unwrap(), want, "{lam}");
                assert!(socle_and_purity(&j).unwrap().is_pure, "{lam}");
            }
        }
    }

    #[test]
    fn stanley_reisner_examples() {
        let k4 = SimplicialComplex::complete_graph(4).unwrap();
        let i = stanley_reisner(&k4).unwrap();
        assert_eq!(strings(i.gens()), ["x1*x2*x3", "x1*x2*x4", "x1*x3*x4", "x2*x3*x4"]);
        assert_eq!(complex_from_ideal(&i, Some(1)).unwrap(), k4);

        let path = SimplicialComplex::from_graph(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(strings(stanley_reisner(&path).unwrap().gens()), ["x1*x3"]);

        let two_points = ideal(&["x1*x2"], 2);
        assert_eq!(complex_from_ideal(&two_points, None).unwrap(), SimplicialComplex::points(2).unwrap());
    }

    #[test]
    fn stanley_reisner_of_two_triangles_partition() {
        // anti-cliques {1,3,4} and {2,5,6}
        let edges: Vec<(usize, usize)> =
            [1, 3, 4].iter().flat_map(|&a| [2, 5, 6].iter().map(move |&b| (a.min(b), a.max(b)))).collect();
        let c = SimplicialComplex::from_graph(6, &edges).unwrap();
        let i = stanley_reisner(&c).unwrap();
        let quadrics: Vec<String> = i.gens().iter().filter(|g| g.degree() == 2).map(|g| g.to_string()).collect();
        assert_eq!(quadrics, ["x1*x3", "x1*x4", "x2*x5", "x2*x6", "x3*x4", "x5*x6"]);
        assert!(i.gens().iter().all(|g| g.degree() <= 3));
        assert_eq!(complex_from_ideal(&i, Some(1)).unwrap(), c);
    }

    #[test]
    fn complex_from_ideal_errors() {
        assert_eq!(complex_from_ideal(&ideal(&["x1^2"], 2), None), Err(Error::NotSquarefree));
        assert_eq!(complex_from_ideal(&ideal(&["x1"], 2), None), Err(Error::GhostVertex(1)));
        assert_eq!(complex_from_ideal(&ideal(&["x1*x2*x3*x4"], 4), Some(1)), Err(Error::DimTooHigh { got: 2, max: 1 }));
    }

    #[test]
    fn sr_matches_block_form_for_partition_complexes() {
        for n in 2..=7 {
            for lam in partitions_of(n).filter(|l| l.len() >= 2) {
                let c = construct_from_partition(&lam).unwrap();
                let blocks = anticlique_blocks(&c).unwrap();
                assert_eq!(stanley_reisner(&c).unwrap(), sr_ideal_from_blocks(n, &blocks).unwrap());
            }
        }
    }

    #[test]
    fn subordinate_set_partitions() {
        let sps = set_partitions_subordinate(&"2+1".parse().unwrap());
        let blocks: Vec<Vec<VertexSet>> = sps.iter().map(|s| s.blocks().to_vec()).collect();
        assert_eq!(blocks, vec![vec![0b011, 0b100], vec![0b101, 0b010], vec![0b001, 0b110]]);
        assert_eq!(set_partitions_subordinate(&"2+2".parse().unwrap()).len(), 3);
        assert_eq!(set_partitions_subordinate(&"3+2+1".parse().unwrap()).len(), 60);
        for sp in set_partitions_subordinate(&"3+2+2".parse().unwrap()) {
            assert_eq!(sp.shape().to_string(), "3+2+2");
        }
        assert!(SetPartition::new(3, vec![0b011, 0b110]).is_err());
        assert!(SetPartition::new(3, vec![0b011]).is_err());
    }

    #[test]
    fn colon_and_plus_variable_split_hilbert_function() {
        let j = witness_ideal(&"3+2+1".parse().unwrap());
        let whole = hilbert_function(&j).unwrap();
        let colon = hilbert_function(&j.colon_by_variable(1)).unwrap();
        let plus = hilbert_function(&j.plus_variable(1)).unwrap();
        for (d, &value) in whole.iter().enumerate() {
            let shifted = if d == 0 { 0 } else { colon.get(d - 1).copied().unwrap_or(0) };
            assert_eq!(value, shifted + plus.get(d).copied().unwrap_or(0));
        }
    }
}
