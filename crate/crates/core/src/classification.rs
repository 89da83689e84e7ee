//! h-vectors of rank-2 matroid complexes: formulas from partitions,
//! membership decisions, class and labelled counts, and sanity checks.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use serde::Serialize;

use crate::complex::HVector;
use crate::error::{Error, Result};
use crate::numbers::{binomial, factorial, partition_count};
use crate::partition::{partitions_of, Partition};

/// `h(Δ_λ)`: `(1, n-1)` for a single part, else `(1, n-2, C(n-1,2) - |λ|_2)`.
pub fn h_of_partition(lambda: &Partition) -> HVector {
    let n = lambda.n() as i64;
    let entries = if lambda.len() == 1 {
        vec![1, n - 1]
    } else {
        vec![1, n - 2, binomial(n as u64 - 1, 2) as i64 - lambda.weight2() as i64]
    };
    HVector::new(entries).expect("h_0 = 1")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MembershipMode {
    /// Scan partitions of `h_1 + 2` for one with the right `|λ|_2`.
    Closed,
    /// Memoised recursion on `x(m-x)` / `h' + x(m-x+1)`; no witnesses.
    Recursive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HVectorMembership {
    pub is_matroid: bool,
    /// Partitions realising the vector, lexicographically ascending. Always
    /// empty in recursive mode.
    pub witnesses: Vec<Partition>,
}

/// Decide whether `h` is the h-vector of a matroid complex of dimension at
/// most one. Accepts `(1, h1)` (0-dimensional) and `(1, h1, h2)`.
pub fn is_matroid_hvector(h: &HVector, mode: MembershipMode) -> Result<HVectorMembership> {
    let e = h.entries();
    if e.iter().any(|&x| x < 0) {
        return Err(Error::MalformedHVector(format!("negative entry in {h}")));
    }
    match e.len() {
        2 => {
            let witnesses = match mode {
                MembershipMode::Closed => vec![Partition::new(vec![e[1] as u32 + 1])?],
                MembershipMode::Recursive => Vec::new(),
            };
            Ok(HVectorMembership { is_matroid: true, witnesses })
        }
        3 => {
            let (m, h2) = (e[1], e[2]);
            match mode {
                MembershipMode::Closed => {
                    let witnesses = closed_form_witnesses(m as usize, h2);
                    Ok(HVectorMembership { is_matroid: !witnesses.is_empty(), witnesses })
                }
                MembershipMode::Recursive => {
                    let mut memo = HashMap::new();
                    Ok(HVectorMembership { is_matroid: recursive_member(m, h2, &mut memo), witnesses: Vec::new() })
                }
            }
        }
        _ => Err(Error::MalformedHVector(format!("{h} is not of the form (1,h1) or (1,h1,h2)"))),
    }
}

fn closed_form_witnesses(m: usize, h2: i64) -> Vec<Partition> {
    let n = m + 2;
    let top = binomial(n as u64 - 1, 2) as i64;
    if h2 > top {
        return Vec::new();
    }
    let mut out: Vec<Partition> =
        partitions_of(n).filter(|lam| lam.len() >= 2 && top - lam.weight2() as i64 == h2).collect();
    out.sort();
    out
}

/// `(1, m, h2)` is a matroid h-vector iff for some `⌊m/2⌋ ≤ x ≤ m` either
/// `h2 = x(m-x)`, or `h2 = h' + x(m-x+1)` with `(1, x-1, h')` a matroid
/// h-vector.
fn recursive_member(m: i64, h2: i64, memo: &mut HashMap<(i64, i64), bool>) -> bool {
    if m < 0 || h2 < 0 {
        return false;
    }
    if let Some(&known) = memo.get(&(m, h2)) {
        return known;
    }
    let found = (m / 2..=m).any(|x| {
        if h2 == x * (m - x) {
            return true;
        }
        let rest = h2 - x * (m - x + 1);
        rest >= 0 && recursive_member(x - 1, rest, memo)
    });
    memo.insert((m, h2), found);
    found
}

/// Isomorphism classes of 1-dimensional matroid complexes on `n` vertices,
/// `p(n) - 1`.
pub fn count_classes(n: usize) -> u128 {
    partition_count(n).saturating_sub(1)
}

/// Labelled complexes in the class `Δ_λ`: the number of set partitions of
/// `{1..n}` with block sizes `λ`, `n! / Π (a_j! · j!^{a_j})`.
pub fn count_labeled(lambda: &Partition) -> Result<u128> {
    let mut value = factorial(lambda.n() as u32).ok_or(Error::Overflow)?;
    for (part, mult) in lambda.multiplicities() {
        let block = factorial(part).ok_or(Error::Overflow)?;
        let mut denom = factorial(mult as u32).ok_or(Error::Overflow)?;
        for _ in 0..mult {
            denom = denom.checked_mul(block).ok_or(Error::Overflow)?;
        }
        value /= denom;
    }
    Ok(value)
}

pub fn count_labeled_big(lambda: &Partition) -> BigUint {
    let fact = |k: u64| (1..=k).fold(BigUint::from(1u32), |acc, i| acc * i);
    let mut denom = BigUint::from(1u32);
    for (part, mult) in lambda.multiplicities() {
        denom *= fact(mult as u64) * fact(part as u64).pow(mult as u32);
    }
    fact(lambda.n() as u64) / denom
}

/// All labelled matroid complexes of dimension ≤ 1 on `{1..n}`; equals the
/// Bell number `B(n)`.
pub fn total_labeled(n: usize) -> Result<u128> {
    partitions_of(n).try_fold(0u128, |acc, lam| acc.checked_add(count_labeled(&lam)?).ok_or(Error::Overflow))
}

pub fn total_labeled_big(n: usize) -> BigUint {
    partitions_of(n).map(|lam| count_labeled_big(&lam)).sum()
}

/// One entry per distinct h-vector of the 1-dimensional classes on `n`
/// vertices, `h_2` descending; partitions in reverse-lexicographic order.
pub fn distinct_hvectors(n: usize) -> Vec<(HVector, Vec<Partition>)> {
    let mut groups: BTreeMap<HVector, Vec<Partition>> = BTreeMap::new();
    for lam in partitions_of(n).filter(|l| l.len() >= 2) {
        groups.entry(h_of_partition(&lam)).or_default().push(lam);
    }
    groups.into_iter().rev().collect()
}

/// The h-vectors shared by two or more non-isomorphic classes.
pub fn duplicate_hvectors(n: usize) -> Vec<(HVector, Vec<Partition>)> {
    distinct_hvectors(n).into_iter().filter(|(_, parts)| parts.len() > 1).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SanityCheck {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SanityReport {
    pub hvector: HVector,
    pub checks: Vec<SanityCheck>,
}

impl SanityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Brown–Colbourn partial sums `(-1)^j Σ_{i≤j} (-α)^i h_i` for `j` over
/// the trimmed vector; nonnegative, and strictly positive when `α > 1`.
pub fn brown_colbourn(h: &HVector, alpha: i64) -> bool {
    let t = h.trimmed();
    let mut sum: i128 = 0;
    let mut power: i128 = 1;
    for (j, &hj) in t.entries().iter().enumerate() {
        sum += power * hj as i128;
        power *= -(alpha as i128);
        let signed = if j % 2 == 0 { sum } else { -sum };
        if signed < 0 || (alpha > 1 && signed == 0) {
            return false;
        }
    }
    true
}

/// Numeric checks that every rank-2 matroid h-vector must satisfy.
pub fn hvector_sanity(h: &HVector) -> SanityReport {
    let e = h.entries();
    let mut checks = Vec::new();
    let mut push = |name: &str, passed: bool| checks.push(SanityCheck { name: name.to_string(), passed });

    push("nonnegative", e.iter().all(|&x| x >= 0));
    for alpha in 1..=3 {
        push(&format!("brown-colbourn alpha={alpha}"), brown_colbourn(h, alpha));
    }
    if e.len() == 3 {
        let (m, h2) = (e[1], e[2]);
        push("no h2 strictly between 0 and m-1", !(0 < h2 && h2 < m - 1));
        push("no h2 strictly between m and 2(m-2) when m >= 6", !(m >= 6 && m < h2 && h2 < 2 * (m - 2)));
        push("h2 at most C(m+1,2)", h2 <= binomial(m as u64 + 1, 2) as i64);
    }
    SanityReport { hvector: h.clone(), checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn h(s: &str) -> HVector {
        s.parse().unwrap()
    }

    fn closed(s: &str) -> HVectorMembership {
        is_matroid_hvector(&h(s), MembershipMode::Closed).unwrap()
    }

    fn recursive(s: &str) -> bool {
        is_matroid_hvector(&h(s), MembershipMode::Recursive).unwrap().is_matroid
    }

    #[test]
    fn h_vectors_of_partitions() {
        assert_eq!(h_of_partition(&p("2+2+2")), h("1,4,7"));
        assert_eq!(h_of_partition(&p("3+3")), h("1,4,4"));
        assert_eq!(h_of_partition(&p("6")), h("1,5"));
        assert_eq!(h_of_partition(&p("1+1+1")), h("1,1,1"));
        assert_eq!(h_of_partition(&p("4+1")), h("1,3,0"));
    }

    #[test]
    fn membership_examples() {
        assert!(!closed("1,4,5").is_matroid);
        assert!(!recursive("1,4,5"));
        assert!(closed("1,7,13").is_matroid);
        assert!(recursive("1,7,13"));
        assert!(!closed("1,3,1").is_matroid);
        assert!(!recursive("1,3,1"));
        assert_eq!(closed("1,4,4").witnesses, vec![p("3+3"), p("4+1+1")]);
        assert_eq!(closed("1,4,7").witnesses, vec![p("2+2+2"), p("3+1+1+1")]);
        assert_eq!(closed("1,5").witnesses, vec![p("6")]);
        assert!(closed("1,0,0").is_matroid);
        assert!(!closed("1,2,4").is_matroid);
    }

    #[test]
    fn membership_errors() {
        let bad = HVector::new(vec![1, -1, 2]).unwrap();
        assert!(matches!(is_matroid_hvector(&bad, MembershipMode::Closed), Err(Error::MalformedHVector(_))));
        let long = HVector::new(vec![1, 2, 3, 4]).unwrap();
        assert!(is_matroid_hvector(&long, MembershipMode::Recursive).is_err());
        assert!(HVector::new(vec![2, 1]).is_err());
    }

    #[test]
    fn modes_agree() {
        for m in 0..=12i64 {
            for h2 in 0..=binomial(m as u64 + 1, 2) as i64 {
                let v = HVector::new(vec![1, m, h2]).unwrap();
                let a = is_matroid_hvector(&v, MembershipMode::Closed).unwrap().is_matroid;
                let b = is_matroid_hvector(&v, MembershipMode::Recursive).unwrap().is_matroid;
                assert_eq!(a, b, "{v}");
            }
        }
    }

    #[test]
    fn easy_families_are_matroid() {
        for m in 3..=12i64 {
            for h2 in [m, m - 1, 2 * (m - 1), 2 * (m - 2), 3 * m - 5] {
                assert!(recursive(&format!("1,{m},{h2}")), "(1,{m},{h2})");
            }
        }
    }

    #[test]
    fn counts() {
        assert_eq!(count_classes(6), 10);
        assert_eq!(count_classes(7), 14);
        assert_eq!(count_labeled(&p("2+2+2")).unwrap(), 15);
        assert_eq!(count_labeled(&p("3+1+1+1")).unwrap(), 20);
        assert_eq!(total_labeled(4).unwrap(), 15);
        assert_eq!(total_labeled(7).unwrap(), 877);
        assert_eq!(total_labeled_big(7), BigUint::from(877u32));
        assert_eq!(count_labeled(&p("40")), Err(Error::Overflow));
        assert_eq!(count_labeled_big(&p("40")), BigUint::from(1u32));
        assert_eq!(count_labeled_big(&p("20+20")), BigUint::from(crate::numbers::binomial(40, 20) / 2));
    }

    #[test]
    fn distinct_groups() {
        let six = distinct_hvectors(6);
        assert_eq!(six.len(), 8);
        let h2s: Vec<i64> = six.iter().map(|(h, _)| h.entries()[2]).collect();
        assert_eq!(h2s, vec![10, 9, 8, 7, 6, 4, 3, 0]);
        let dup6 = duplicate_hvectors(6);
        assert_eq!(dup6.len(), 2);
        assert_eq!(dup6[0], (h("1,4,7"), vec![p("3+1+1+1"), p("2+2+2")]));
        assert_eq!(dup6[1], (h("1,4,4"), vec![p("4+1+1"), p("3+3")]));

        assert_eq!(distinct_hvectors(7).len(), 12);
        let dup7 = duplicate_hvectors(7);
        assert_eq!(dup7[0], (h("1,5,12"), vec![p("3+1+1+1+1"), p("2+2+2+1")]));
        assert_eq!(dup7[1], (h("1,5,9"), vec![p("4+1+1+1"), p("3+3+1")]));

        let three = distinct_hvectors(3);
        assert_eq!(three.len(), 2);
        assert!(duplicate_hvectors(3).is_empty());
    }

    #[test]
    fn equal_hvectors_iff_equal_weight2() {
        for n in 2..=14 {
            let parts: Vec<Partition> = partitions_of(n).filter(|l| l.len() >= 2).collect();
            for a in &parts {
                for b in &parts {
                    assert_eq!(h_of_partition(a) == h_of_partition(b), a.weight2() == b.weight2());
                }
            }
        }
    }

    #[test]
    fn sanity_examples() {
        let r = hvector_sanity(&h("1,4,7"));
        assert!(r.all_passed(), "{r:?}");
        assert!(hvector_sanity(&h("1,5,4")).all_passed());
        assert!(hvector_sanity(&h("1,5,0")).all_passed());
        // untrimmed cone vector violates the inequality at alpha = 1
        assert!(!brown_colbourn_untrimmed(&[1, 5, 0]));
        assert!(!hvector_sanity(&h("1,4,1")).all_passed());
        assert!(!hvector_sanity(&h("1,7,8")).all_passed());
    }

    fn brown_colbourn_untrimmed(e: &[i64]) -> bool {
        let mut sum = 0i64;
        for (j, &x) in e.iter().enumerate() {
            sum += (-1i64).pow(j as u32) * x;
            if (-1i64).pow(j as u32) * sum < 0 {
                return false;
            }
        }
        true
    }
}
