//! Brute-force model of the quotient poset of binary words under rotation.
//!
//! Nothing here reuses the canonicalization or matching code of the builder.
//! Letters are read off [`Word::get`] into this module's own support masks
//! (bit `p` set iff position `p` holds a 1) and compared by direct rotation
//! scans.

use std::collections::HashMap;

use crate::error::{check_range, Result, ScdError};
use crate::exec::Exec;
use crate::word::{Necklace, Word};

pub const DEFAULT_ORACLE_LIMIT: usize = 14;
pub const ORACLE_HARD_CAP: usize = 20;

fn support(w: &Word) -> u64 {
    (0..w.len()).fold(0u64, |acc, p| acc | ((w.get(p) as u64) << p))
}

fn rotate_support(s: u64, n: usize, by: usize) -> u64 {
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    if by == 0 {
        s
    } else {
        ((s << by) | (s >> (n - by))) & full
    }
}

/// Reads support `s` starting at `start` and compares with reading `t` from
/// `0`, letter by letter, under `1 ≺ 0`.
fn rotation_beats(s: u64, start: usize, n: usize) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    for p in 0..n {
        let a = (s >> ((start + p) % n)) & 1;
        let b = (s >> p) & 1;
        match (a, b) {
            (1, 0) => return Ordering::Less,
            (0, 1) => return Ordering::Greater,
            _ => {}
        }
    }
    Ordering::Equal
}

/// True iff the word with support `s` is no larger than any of its rotations.
fn is_least_rotation(s: u64, n: usize) -> bool {
    (1..n).all(|start| rotation_beats(s, start, n) != std::cmp::Ordering::Less)
}

fn word_from_support(s: u64, n: usize) -> Word {
    let letters: Vec<u8> = (0..n).map(|p| ((s >> p) & 1) as u8).collect();
    Word::from_letters(&letters).expect("oracle builds valid words")
}

/// `u <= v` in the quotient order: some rotation of `u` has its 1's inside
/// the 1's of `v`.
pub fn necklace_leq(u: &Necklace, v: &Necklace) -> Result<bool> {
    if u.len() != v.len() {
        return Err(ScdError::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(support_leq(support(u.word()), support(v.word()), u.len()))
}

fn support_leq(u: u64, v: u64, n: usize) -> bool {
    (0..n).any(|by| rotate_support(u, n, by) & !v == 0)
}

#[derive(Debug, Clone)]
pub struct QuotientPoset {
    n: usize,
    /// Least rotations, grouped by rank ascending.
    elements: Vec<Word>,
    supports: Vec<u64>,
    index: HashMap<Word, usize>,
    /// `up_covers[i]` lists every `j` covering `i`.
    up_covers: Vec<Vec<usize>>,
    rank_sizes: Vec<usize>,
}

impl QuotientPoset {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Word] {
        &self.elements
    }

    pub fn rank_sizes(&self) -> &[usize] {
        &self.rank_sizes
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn contains(&self, u: &Necklace) -> bool {
        self.index.contains_key(u.word())
    }

    pub fn rank_of(&self, i: usize) -> usize {
        self.supports[i].count_ones() as usize
    }

    /// Order relation on element indices.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        support_leq(self.supports[i], self.supports[j], self.n)
    }

    pub fn up_covers(&self, i: usize) -> &[usize] {
        &self.up_covers[i]
    }

    /// All cover pairs `(lower, upper)` as element indices.
    pub fn covers(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.up_covers
            .iter()
            .enumerate()
            .flat_map(|(i, ups)| ups.iter().map(move |&j| (i, j)))
    }

    /// True iff `upper` covers `lower`. Necklaces not in the poset are never
    /// related.
    pub fn is_cover(&self, lower: &Necklace, upper: &Necklace) -> bool {
        match (self.index_of(lower.word()), self.index_of(upper.word())) {
            (Some(i), Some(j)) => self.up_covers[i].binary_search(&j).is_ok(),
            _ => false,
        }
    }
}

pub fn build_poset(n: usize) -> Result<QuotientPoset> {
    build_poset_with(n, DEFAULT_ORACLE_LIMIT, Exec::default())
}

pub fn build_poset_with(n: usize, limit: usize, exec: Exec) -> Result<QuotientPoset> {
    check_range(n, limit.min(ORACLE_HARD_CAP))?;
    let mut supports = least_rotation_supports(n, exec);
    supports.sort_by(|&a, &b| {
        a.count_ones()
            .cmp(&b.count_ones())
            .then_with(|| rotation_cmp(a, b, n))
    });
    let elements: Vec<Word> = supports.iter().map(|&s| word_from_support(s, n)).collect();
    let index = elements.iter().enumerate().map(|(i, w)| (*w, i)).collect();
    let mut rank_sizes = vec![0usize; n + 1];
    for s in &supports {
        rank_sizes[s.count_ones() as usize] += 1;
    }
    let mut rank_start = vec![0usize; n + 2];
    for k in 0..=n {
        rank_start[k + 1] = rank_start[k] + rank_sizes[k];
    }
    let ids: Vec<usize> = (0..supports.len()).collect();
    let up_covers = exec.map(&ids, |&i| {
        let k = supports[i].count_ones() as usize;
        if k == n {
            return Vec::new();
        }
        (rank_start[k + 1]..rank_start[k + 2])
            .filter(|&j| support_leq(supports[i], supports[j], n))
            .collect()
    });
    Ok(QuotientPoset {
        n,
        elements,
        supports,
        index,
        up_covers,
        rank_sizes,
    })
}

fn rotation_cmp(a: u64, b: u64, n: usize) -> std::cmp::Ordering {
    for p in 0..n {
        match ((a >> p) & 1, (b >> p) & 1) {
            (1, 0) => return std::cmp::Ordering::Less,
            (0, 1) => return std::cmp::Ordering::Greater,
            _ => {}
        }
    }
    std::cmp::Ordering::Equal
}

fn least_rotation_supports(n: usize, exec: Exec) -> Vec<u64> {
    exec.flat_map_range(1u64 << n, 1 << 12, |range| {
        range.filter(|&s| is_least_rotation(s, n)).collect()
    })
}

/// Rank sizes by direct enumeration, without building the order.
pub fn rank_sizes_by_enumeration(n: usize, exec: Exec) -> Result<Vec<usize>> {
    check_range(n, ORACLE_HARD_CAP)?;
    let mut sizes = vec![0usize; n + 1];
    for s in least_rotation_supports(n, exec) {
        sizes[s.count_ones() as usize] += 1;
    }
    Ok(sizes)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn totient(d: u64) -> u64 {
    (1..=d).filter(|&k| gcd(k, d) == 1).count() as u64
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Number of binary necklaces of length `n`, by Burnside's lemma.
pub fn burnside_count(n: usize) -> u128 {
    let n = n as u64;
    let total: u128 = (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| totient(d) as u128 * (1u128 << (n / d)))
        .sum();
    total / n as u128
}

/// Number of binary necklaces of length `n` with exactly `k` ones.
pub fn burnside_rank_count(n: usize, k: usize) -> u128 {
    let (n, k) = (n as u64, k as u64);
    if k > n {
        return 0;
    }
    let g = gcd(n, k);
    let total: u128 = (1..=g)
        .filter(|d| g.is_multiple_of(*d))
        .map(|d| totient(d) as u128 * binomial(n / d, k / d))
        .sum();
    total / n as u128
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankProfileReport {
    pub n: usize,
    pub rank_sizes: Vec<usize>,
    pub symmetric: bool,
    pub unimodal: bool,
    pub matches_burnside: bool,
    pub findings: Vec<String>,
}

impl RankProfileReport {
    pub fn ok(&self) -> bool {
        self.findings.is_empty()
    }
}

pub fn is_unimodal(seq: &[usize]) -> bool {
    let peak = seq
        .iter()
        .enumerate()
        .max_by_key(|&(_, v)| v)
        .map_or(0, |(i, _)| i);
    seq[..=peak.min(seq.len().saturating_sub(1))]
        .windows(2)
        .all(|w| w[0] <= w[1])
        && seq[peak..].windows(2).all(|w| w[0] >= w[1])
}

pub fn check_rank_profile(n: usize) -> Result<RankProfileReport> {
    check_rank_profile_with(n, Exec::default())
}

pub fn check_rank_profile_with(n: usize, exec: Exec) -> Result<RankProfileReport> {
    let rank_sizes = rank_sizes_by_enumeration(n, exec)?;
    let mut findings = Vec::new();
    let symmetric = (0..=n).all(|k| rank_sizes[k] == rank_sizes[n - k]);
    if !symmetric {
        findings.push(format!("rank sizes {rank_sizes:?} are not symmetric"));
    }
    let unimodal = is_unimodal(&rank_sizes);
    if !unimodal {
        findings.push(format!("rank sizes {rank_sizes:?} are not unimodal"));
    }
    let mut matches_burnside = true;
    for (k, &size) in rank_sizes.iter().enumerate() {
        let expected = burnside_rank_count(n, k);
        if size as u128 != expected {
            matches_burnside = false;
            findings.push(format!("rank {k}: enumerated {size}, formula gives {expected}"));
        }
    }
    let total: usize = rank_sizes.iter().sum();
    if total as u128 != burnside_count(n) {
        matches_burnside = false;
        findings.push(format!("total {total} differs from formula {}", burnside_count(n)));
    }
    Ok(RankProfileReport {
        n,
        rank_sizes,
        symmetric,
        unimodal,
        matches_burnside,
        findings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nk(s: &str) -> Necklace {
        s.parse().unwrap()
    }

    #[test]
    fn leq_examples() {
        assert!(necklace_leq(&nk("01001"), &nk("11110")).unwrap());
        assert!(necklace_leq(&nk("101010"), &nk("101010")).unwrap());
        assert!(!necklace_leq(&nk("101010"), &nk("111000")).unwrap());
        assert!(matches!(
            necklace_leq(&nk("10"), &nk("100")),
            Err(ScdError::LengthMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn poset_small_cases() {
        let p = build_poset(6).unwrap();
        assert_eq!(p.rank_sizes(), &[1, 1, 3, 4, 3, 1, 1]);
        assert_eq!(p.len(), 14);

        let p = build_poset(1).unwrap();
        assert_eq!(p.rank_sizes(), &[1, 1]);
        assert_eq!(p.covers().collect::<Vec<_>>(), vec![(0, 1)]);

        let p = build_poset(4).unwrap();
        assert!(p.is_cover(&nk("1010"), &nk("1110")));
        for (i, j) in p.covers() {
            assert_eq!(p.rank_of(i) + 1, p.rank_of(j));
        }
    }

    #[test]
    fn poset_range() {
        assert!(build_poset(0).is_err());
        assert!(build_poset(15).is_err());
        assert!(build_poset_with(21, 30, Exec::Sequential).is_err());
    }

    #[test]
    fn burnside_values() {
        let counts: Vec<u128> = (1..=10).map(burnside_count).collect();
        assert_eq!(counts, [2, 3, 4, 6, 8, 14, 20, 36, 60, 108]);
        assert_eq!(burnside_rank_count(6, 3), 4);
        assert_eq!(burnside_rank_count(6, 0), 1);
        assert_eq!(burnside_rank_count(4, 2), 2);
    }

    #[test]
    fn rank_profiles() {
        let r = check_rank_profile(6).unwrap();
        assert!(r.ok() && r.symmetric && r.unimodal && r.matches_burnside);
        let r = check_rank_profile(1).unwrap();
        assert_eq!(r.rank_sizes, [1, 1]);
        assert!(r.ok());
        assert!(check_rank_profile(12).unwrap().matches_burnside);
    }

    #[test]
    fn unimodality() {
        assert!(is_unimodal(&[1, 1, 3, 4, 3, 1, 1]));
        assert!(is_unimodal(&[1]));
        assert!(!is_unimodal(&[1, 3, 2, 3, 1]));
    }
}
