//! Exhaustive census of every graph on `n ≤ 7` labeled vertices, used as
//! ground truth for the classification.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::classification::{count_labeled, h_of_partition, is_matroid_hvector, MembershipMode};
use crate::complex::{full_mask, submasks, vertex_bit, vertices_of, HVector, SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::ideals::set_partitions_subordinate;
use crate::matroid::{construct_from_partition, extract_partition, is_matroid, raw_degree_sequence, MatroidTest};
use crate::numbers::{binomial, partition_count};
use crate::partition::{partitions_of, Partition};

pub const CENSUS_LIMIT: usize = 7;
/// Brute-force permutation isomorphism is only run up to this size.
pub const BRUTE_ISO_LIMIT: usize = 6;

/// Edges of `K_n` in the order `12, 13, ..., 1n, 23, ...`; bit `k` of a
/// graph code selects edge `k`.
pub fn edge_list(n: usize) -> Vec<(usize, usize)> {
    (1..=n).tuple_combinations().collect()
}

pub fn graph_of_code(n: usize, code: u32) -> SimplicialComplex {
    let edges: Vec<(usize, usize)> =
        edge_list(n).into_iter().enumerate().filter(|(k, _)| code >> k & 1 == 1).map(|(_, e)| e).collect();
    SimplicialComplex::from_graph(n, &edges).expect("n is in range")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusClass {
    pub partition: Partition,
    pub hvector: HVector,
    /// Graph codes, increasing.
    pub members: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HVectorGroup {
    pub hvector: HVector,
    pub partitions: Vec<Partition>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusCounts {
    pub graphs: u64,
    pub labeled: u64,
    /// One-dimensional classes.
    pub classes: u64,
    /// Distinct h-vectors of one-dimensional classes.
    pub distinct_hvectors: u64,
}

/// A disagreement between recognition routes on one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RouteMismatch {
    pub code: u32,
    pub definitional: bool,
    pub fast: bool,
    pub extraction: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatroidCensus {
    pub n: usize,
    /// Graph codes passing the definitional test, increasing.
    pub labeled_matroids: Vec<u32>,
    /// Ordered by partition, reverse-lexicographic; the 0-dimensional class
    /// `λ = n` comes first.
    pub classes: Vec<CensusClass>,
    /// One-dimensional classes only, h-vectors decreasing.
    pub hvector_groups: Vec<HVectorGroup>,
    pub counts: CensusCounts,
    pub mismatches: Vec<RouteMismatch>,
}

impl MatroidCensus {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("census serialises")
    }

    pub fn class(&self, lambda: &Partition) -> Option<&CensusClass> {
        self.classes.iter().find(|c| &c.partition == lambda)
    }
}

pub fn enumerate_matroids(n: usize) -> Result<MatroidCensus> {
    enumerate_matroids_ordered(n, false)
}

/// As [`enumerate_matroids`], scanning codes in decreasing order when
/// `reverse` is set. The result does not depend on the order.
pub fn enumerate_matroids_ordered(n: usize, reverse: bool) -> Result<MatroidCensus> {
    if !(2..=CENSUS_LIMIT).contains(&n) {
        return Err(Error::TooLarge(n, CENSUS_LIMIT));
    }
    let edges = binomial(n as u64, 2) as u32;
    let total: u32 = 1 << edges;
    const CHUNK: u32 = 1 << 12;
    let chunks: Vec<u32> =
        if reverse { (0..total.div_ceil(CHUNK)).rev().collect() } else { (0..total.div_ceil(CHUNK)).collect() };

    type Partial = (Vec<(u32, Partition)>, Vec<RouteMismatch>);
    let scan = |chunk: u32| -> Partial {
        let lo = chunk * CHUNK;
        let hi = (lo + CHUNK).min(total);
        let codes: Box<dyn Iterator<Item = u32>> = if reverse { Box::new((lo..hi).rev()) } else { Box::new(lo..hi) };
        let mut found = Vec::new();
        let mut mismatches = Vec::new();
        for code in codes {
            let g = graph_of_code(n, code);
            let fast = is_matroid(&g, MatroidTest::Fast).expect("graphs have dimension at most one");
            let definitional = is_matroid(&g, MatroidTest::Definitional).expect("n is below the limit");
            let extracted = extract_partition(&g).ok();
            if fast != definitional || definitional != extracted.is_some() {
                mismatches.push(RouteMismatch { code, definitional, fast, extraction: extracted.is_some() });
            }
            if definitional {
                if let Some(lambda) = extracted {
                    found.push((code, lambda));
                }
            }
        }
        (found, mismatches)
    };
    let (mut found, mut mismatches): Partial = chunks.into_par_iter().map(scan).reduce(
        || (Vec::new(), Vec::new()),
        |mut a, b| {
            a.0.extend(b.0);
            a.1.extend(b.1);
            a
        },
    );
    found.sort_by_key(|&(code, _)| code);
    mismatches.sort_by_key(|m| m.code);

    let mut by_class: BTreeMap<Partition, Vec<u32>> = BTreeMap::new();
    for (code, lambda) in &found {
        by_class.entry(lambda.clone()).or_default().push(*code);
    }
    let classes: Vec<CensusClass> = by_class
        .into_iter()
        .rev()
        .map(|(partition, members)| CensusClass { hvector: h_of_partition(&partition), partition, members })
        .collect();

    let mut groups: BTreeMap<HVector, Vec<Partition>> = BTreeMap::new();
    for c in classes.iter().filter(|c| c.partition.len() >= 2) {
        groups.entry(c.hvector.clone()).or_default().push(c.partition.clone());
    }
    let hvector_groups: Vec<HVectorGroup> =
        groups.into_iter().rev().map(|(hvector, partitions)| HVectorGroup { hvector, partitions }).collect();

    let counts = CensusCounts {
        graphs: total as u64,
        labeled: found.len() as u64,
        classes: classes.iter().filter(|c| c.partition.len() >= 2).count() as u64,
        distinct_hvectors: hvector_groups.len() as u64,
    };
    Ok(MatroidCensus {
        n,
        labeled_matroids: found.into_iter().map(|(code, _)| code).collect(),
        classes,
        hvector_groups,
        counts,
        mismatches,
    })
}

/// Largest vertex set all of whose pairs are edges, by scanning every
/// subset.
pub fn brute_max_clique(g: &SimplicialComplex) -> usize {
    let n = g.n();
    let adjacent = |a: usize, b: usize| g.is_face(vertex_bit(a) | vertex_bit(b));
    submasks(full_mask(n))
        .filter(|&s| vertices_of(s).tuple_combinations().all(|(a, b)| adjacent(a, b)))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Whether some vertex permutation maps the edges of `a` onto those of `b`.
pub fn brute_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
    let n = a.n();
    if n != b.n() || a.edges().len() != b.edges().len() {
        return false;
    }
    let target: BTreeSet<VertexSet> = b.edges().into_iter().collect();
    let source = a.edges();
    (0..n).permutations(n).any(|p| {
        source.iter().all(|&e| {
            let image = vertices_of(e).fold(0, |acc, v| acc | vertex_bit(p[v - 1] + 1));
            target.contains(&image)
        })
    })
}

/// `B(0..=n)` from the Bell triangle.
pub fn bell_numbers(n: usize) -> Vec<u128> {
    let mut bells = vec![1u128];
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![*row.last().expect("row is nonempty")];
        for &x in &row {
            let last = *next.last().expect("row is nonempty");
            next.push(last + x);
        }
        bells.push(next[0]);
        row = next;
    }
    bells
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscheckItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub n: usize,
    pub items: Vec<CrosscheckItem>,
}

impl CrosscheckReport {
    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn to_text(&self) -> String {
        self.items
            .iter()
            .map(|i| format!("{} {}: {}\n", if i.passed { "PASS" } else { "FAIL" }, i.name, i.detail))
            .collect()
    }
}

fn item(name: &str, passed: bool, detail: String) -> CrosscheckItem {
    CrosscheckItem { name: name.to_string(), passed, detail }
}

/// Compare the census at `n` against the closed forms.
pub fn crosscheck_report(n: usize) -> Result<CrosscheckReport> {
    let census = enumerate_matroids(n)?;
    let mut items = Vec::new();

    let dim1 = census.classes.iter().filter(|c| c.partition.len() >= 2).count() as u128;
    let dim0 = census.classes.iter().filter(|c| c.partition.len() == 1).count() as u128;
    items.push(item(
        "class count",
        dim1 == partition_count(n) - 1 && dim0 == 1,
        format!("{dim1} one-dimensional + {dim0} zero-dimensional, p({n}) = {}", partition_count(n)),
    ));

    let mut bad_counts = Vec::new();
    for lambda in partitions_of(n) {
        let seen = census.class(&lambda).map_or(0, |c| c.members.len()) as u128;
        let formula = count_labeled(&lambda)?;
        let brute = set_partitions_subordinate(&lambda).len() as u128;
        if seen != formula || seen != brute {
            bad_counts.push(format!("{lambda}: census {seen}, formula {formula}, set partitions {brute}"));
        }
    }
    items.push(item(
        "labeled class sizes",
        bad_counts.is_empty(),
        if bad_counts.is_empty() { "every class matches".into() } else { bad_counts.join("; ") },
    ));

    let bell = bell_numbers(n)[n];
    items.push(item(
        "labeled total",
        census.counts.labeled as u128 == bell,
        format!("{} labeled, B({n}) = {bell}", census.counts.labeled),
    ));

    let realized: BTreeSet<HVector> = census.hvector_groups.iter().map(|g| g.hvector.clone()).collect();
    let accepted: BTreeSet<HVector> = (0..=binomial(n as u64 - 1, 2) as i64)
        .map(|h2| HVector::new(vec![1, n as i64 - 2, h2]).expect("h_0 = 1"))
        .filter(|h| is_matroid_hvector(h, MembershipMode::Closed).expect("well-formed").is_matroid)
        .collect();
    items.push(item(
        "realized h-vectors",
        realized == accepted,
        format!("{} realized, {} accepted", realized.len(), accepted.len()),
    ));

    items.push(item(
        "recognition routes agree",
        census.mismatches.is_empty(),
        format!("{} graphs, {} mismatches", census.counts.graphs, census.mismatches.len()),
    ));

    let mut by_degrees: BTreeMap<_, BTreeSet<Partition>> = BTreeMap::new();
    let mut iso_failures = Vec::new();
    for class in &census.classes {
        let representative = construct_from_partition(&class.partition)?;
        for &code in &class.members {
            let g = graph_of_code(n, code);
            by_degrees.entry(raw_degree_sequence(&g)).or_default().insert(class.partition.clone());
            if n <= BRUTE_ISO_LIMIT && !brute_isomorphic(&g, &representative) {
                iso_failures.push(code);
            }
        }
    }
    let merged = by_degrees.values().filter(|s| s.len() > 1).count();
    let degree_classes_ok = by_degrees.len() == census.classes.len() && merged == 0;
    items.push(item(
        "isomorphism classes",
        degree_classes_ok && iso_failures.is_empty(),
        format!(
            "{} degree sequences for {} classes, {} members not isomorphic to their representative{}",
            by_degrees.len(),
            census.classes.len(),
            iso_failures.len(),
            if n <= BRUTE_ISO_LIMIT { "" } else { " (permutation check skipped)" }
        ),
    ));

    let mut clique_failures = Vec::new();
    for class in &census.classes {
        for &code in &class.members {
            let size = brute_max_clique(&graph_of_code(n, code));
            if size != class.partition.len() {
                clique_failures.push(format!("{code}: {size} vs {}", class.partition));
            }
        }
    }
    items.push(item(
        "maximum clique",
        clique_failures.is_empty(),
        if clique_failures.is_empty() { "equals the number of parts".into() } else { clique_failures.join("; ") },
    ));

    Ok(CrosscheckReport { n, items })
}

/// [`crosscheck_report`], failing on the first mismatch.
pub fn crosscheck(n: usize) -> Result<CrosscheckReport> {
    let report = crosscheck_report(n)?;
    if report.all_passed() {
        Ok(report)
    } else {
        Err(Error::AssertionFailure(report.to_text()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_triangle() {
        assert_eq!(bell_numbers(8), vec![1, 1, 2, 5, 15, 52, 203, 877, 4140]);
    }

    #[test]
    fn small_censuses() {
        let c2 = enumerate_matroids(2).unwrap();
        assert_eq!(c2.labeled_matroids, vec![0, 1]);

        let c3 = enumerate_matroids(3).unwrap();
        let sizes: Vec<(String, usize)> =
            c3.classes.iter().map(|c| (c.partition.to_string(), c.members.len())).collect();
        assert_eq!(sizes, [("3".to_string(), 1), ("2+1".to_string(), 3), ("1+1+1".to_string(), 1)]);

        assert_eq!(enumerate_matroids(4).unwrap().counts.labeled, 15);
        assert_eq!(enumerate_matroids(1), Err(Error::TooLarge(1, CENSUS_LIMIT)));
        assert_eq!(enumerate_matroids(8), Err(Error::TooLarge(8, CENSUS_LIMIT)));
    }

    #[test]
    fn census_six() {
        let c = enumerate_matroids(6).unwrap();
        assert_eq!(c.counts.classes, 10);
        assert_eq!(c.counts.distinct_hvectors, 8);
        assert_eq!(c.counts.labeled, 203);
        assert!(c.mismatches.is_empty());
    }

    #[test]
    fn order_independent() {
        assert_eq!(enumerate_matroids_ordered(5, true).unwrap(), enumerate_matroids(5).unwrap());
    }

    #[test]
    fn crosscheck_small() {
        for n in 2..=5 {
            let r = crosscheck(n).unwrap();
            assert_eq!(r.items.len(), 7);
        }
    }

    #[test]
    fn brute_helpers() {
        let path = SimplicialComplex::from_graph(3, &[(1, 2), (2, 3)]).unwrap();
        let other = SimplicialComplex::from_graph(3, &[(1, 3), (2, 3)]).unwrap();
        assert!(brute_isomorphic(&path, &other));
        assert!(!brute_isomorphic(&path, &SimplicialComplex::complete_graph(3).unwrap()));
        assert_eq!(brute_max_clique(&path), 2);
        assert_eq!(brute_max_clique(&SimplicialComplex::points(3).unwrap()), 1);
    }
}
