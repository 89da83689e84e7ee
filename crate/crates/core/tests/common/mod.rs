#![allow(dead_code)]

use itertools::Itertools;
use rank2::complex::{full_mask, vertex_bit, vertices_of};
use rank2::ideals::{complex_of_set_partition, set_partitions_subordinate};
use rank2::matroid::{anticlique_blocks, construct_from_partition, extract_partition};
use rank2::partition::partitions_of;
use rank2::{SimplicialComplex, VertexSet};

/// Every labeled matroid of dimension one on `n` vertices.
pub fn labeled_dim1_matroids(n: usize) -> Vec<SimplicialComplex> {
    partitions_of(n)
        .filter(|l| l.len() >= 2)
        .flat_map(|l| set_partitions_subordinate(&l))
        .map(|sp| complex_of_set_partition(&sp))
        .collect()
}

/// Every loopless matroid complex of dimension two on `n` vertices, found
/// by basis exchange over families of triples.
pub fn labeled_dim2_matroids(n: usize) -> Vec<SimplicialComplex> {
    let triples: Vec<VertexSet> =
        (1..=n).combinations(3).map(|t| t.iter().fold(0, |acc, &v| acc | vertex_bit(v))).collect();
    let index_of = |t: VertexSet| triples.iter().position(|&x| x == t);
    let mut out = Vec::new();
    for family in 1u32..(1 << triples.len()) {
        let bases: Vec<VertexSet> = (0..triples.len()).filter(|&i| family >> i & 1 == 1).map(|i| triples[i]).collect();
        if bases.iter().fold(0, |a, b| a | b) != full_mask(n) {
            continue;
        }
        let exchange = bases.iter().all(|&b1| {
            bases.iter().all(|&b2| {
                vertices_of(b1 & !b2).all(|x| {
                    vertices_of(b2 & !b1)
                        .any(|y| index_of((b1 & !vertex_bit(x)) | vertex_bit(y)).is_some_and(|i| family >> i & 1 == 1))
                })
            })
        });
        if exchange {
            out.push(SimplicialComplex::from_masks(n, bases).unwrap());
        }
    }
    out
}

pub fn all_matroids_up_to(n_max: usize) -> Vec<SimplicialComplex> {
    let mut all = Vec::new();
    for n in 1..=n_max {
        all.push(SimplicialComplex::points(n).unwrap());
        all.extend(labeled_dim1_matroids(n));
        if n >= 3 {
            all.extend(labeled_dim2_matroids(n));
        }
    }
    all
}

/// The block bijection sending `c`'s anti-cliques onto those of the
/// representative of its class, checked edge by edge.
pub fn explicit_isomorphism(c: &SimplicialComplex) -> bool {
    let lambda = extract_partition(c).unwrap();
    let rep = construct_from_partition(&lambda).unwrap();
    let from = anticlique_blocks(c).unwrap();
    let to = anticlique_blocks(&rep).unwrap();
    let mut perm = vec![0; c.n()];
    for (a, b) in from.iter().zip(&to) {
        assert_eq!(a.count_ones(), b.count_ones());
        for (u, v) in vertices_of(*a).zip(vertices_of(*b)) {
            perm[u - 1] = v;
        }
    }
    c.permuted(&perm).unwrap() == rep
}
