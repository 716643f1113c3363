//! Test-only reference implementations. Nothing here calls the crate's
//! canonicalization, matching or chain code; words are plain letter vectors.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

pub type Letters = Vec<u8>;

pub fn letters(s: &str) -> Letters {
    s.bytes().map(|b| b - b'0').collect()
}

pub fn show(w: &[u8]) -> String {
    w.iter().map(|l| char::from(b'0' + l)).collect()
}

/// `a` before `b` under `1 ≺ 0`.
pub fn lyndon_less(a: &[u8], b: &[u8]) -> bool {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return *x == 1;
        }
    }
    false
}

/// Word read cyclically from `start`.
pub fn read_from(w: &[u8], start: usize) -> Letters {
    (0..w.len()).map(|p| w[(start + p) % w.len()]).collect()
}

/// Every start giving the least rotation, by scanning all rotations.
pub fn least_starts(w: &[u8]) -> Vec<usize> {
    let n = w.len();
    let mut best = read_from(w, 0);
    for s in 1..n {
        let r = read_from(w, s);
        if lyndon_less(&r, &best) {
            best = r;
        }
    }
    (0..n).filter(|&s| read_from(w, s) == best).collect()
}

pub fn least_rotation(w: &[u8]) -> Letters {
    read_from(w, least_starts(w)[0])
}

/// Pairs `(zero, one)` and leftover positions from the removal procedure,
/// choosing uniformly among all currently removable `0 1` neighbours.
pub fn removal_match<R: Rng>(w: &[u8], rng: &mut R) -> (BTreeSet<(usize, usize)>, Vec<usize>) {
    let mut alive: Vec<usize> = (0..w.len()).collect();
    let mut pairs = BTreeSet::new();
    loop {
        let m = alive.len();
        if m < 2 {
            break;
        }
        let candidates: Vec<usize> = (0..m)
            .filter(|&i| w[alive[i]] == 0 && w[alive[(i + 1) % m]] == 1)
            .collect();
        let Some(&i) = candidates.choose(rng) else {
            break;
        };
        let (z, o) = (alive[i], alive[(i + 1) % m]);
        pairs.insert((z, o));
        alive.retain(|&p| p != z && p != o);
    }
    (pairs, alive)
}

/// Removal procedure with the leftmost removable pair taken each time.
pub fn first_match(w: &[u8]) -> (BTreeSet<(usize, usize)>, Vec<usize>) {
    let mut alive: Vec<usize> = (0..w.len()).collect();
    let mut pairs = BTreeSet::new();
    'outer: loop {
        let m = alive.len();
        if m < 2 {
            break;
        }
        for i in 0..m {
            let (z, o) = (alive[i], alive[(i + 1) % m]);
            if w[z] == 0 && w[o] == 1 {
                pairs.insert((z, o));
                alive.retain(|&p| p != z && p != o);
                continue 'outer;
            }
        }
        break;
    }
    (pairs, alive)
}

pub fn partner_in(pairs: &BTreeSet<(usize, usize)>, pos: usize) -> Option<usize> {
    pairs
        .iter()
        .find_map(|&(z, o)| if z == pos { Some(o) } else if o == pos { Some(z) } else { None })
}

pub fn ones(w: &[u8]) -> usize {
    w.iter().filter(|&&l| l == 1).count()
}

/// All least rotations of length `n`, rank ascending.
pub fn all_necklaces(n: usize) -> Vec<Letters> {
    let mut set = BTreeSet::new();
    for bits in 0u64..(1 << n) {
        let w: Letters = (0..n).map(|p| ((bits >> p) & 1) as u8).collect();
        set.insert(least_rotation(&w));
    }
    let mut v: Vec<Letters> = set.into_iter().collect();
    v.sort_by_key(|w| ones(w));
    v
}

/// Upper-half descent step on a word held in a fixed frame: flips the
/// rightmost unmatched 1 as seen from the word's Lyndon frame. Returns the
/// flipped position.
pub fn upper_step_in_frame(w: &mut Letters) -> usize {
    let n = w.len();
    let (_, unmatched) = first_match(w);
    let s = least_starts(w)[0];
    let &p = unmatched
        .iter()
        .filter(|&&p| w[p] == 1)
        .max_by_key(|&&p| (p + n - s) % n)
        .expect("upper-half word has an unmatched 1");
    w[p] = 0;
    p
}

/// The chain below `top` following the literal descent rule: above the
/// middle flip the rightmost unmatched 1 of the Lyndon expression and
/// remember the pair this creates; below it undo the most recently created
/// pair by turning its remaining 1 into a 0.
pub fn literal_descent(top: &[u8]) -> Vec<Letters> {
    let n = top.len();
    let mut w = top.to_vec();
    let mut history: Vec<(usize, usize)> = Vec::new();
    let mut out = vec![least_rotation(&w)];
    while 2 * ones(&w) > n {
        let p = upper_step_in_frame(&mut w);
        let (pairs, _) = first_match(&w);
        if let Some(q) = partner_in(&pairs, p) {
            history.push((p, q));
        }
        out.push(least_rotation(&w));
    }
    while let Some((_, q)) = history.pop() {
        assert_eq!(w[q], 1, "most recent pair lost its 1");
        w[q] = 0;
        out.push(least_rotation(&w));
    }
    out
}

/// Upper-half step on a least rotation, returning the least rotation of the
/// result.
pub fn literal_phi_upper(w: &[u8]) -> Letters {
    let mut x = w.to_vec();
    upper_step_in_frame(&mut x);
    least_rotation(&x)
}

/// Decomposition by the literal rules: tops are the necklaces of rank at
/// least `n/2` that no upper-half necklace steps down to.
pub fn literal_scd(n: usize) -> Vec<Vec<Letters>> {
    let all = all_necklaces(n);
    let images: BTreeSet<Letters> = all
        .iter()
        .filter(|w| 2 * ones(w) > n)
        .map(|w| literal_phi_upper(w))
        .collect();
    let mut tops: Vec<&Letters> = all
        .iter()
        .filter(|w| 2 * ones(w) >= n && !images.contains(*w))
        .collect();
    tops.sort_by(|a, b| {
        ones(b).cmp(&ones(a)).then_with(|| {
            if lyndon_less(a, b) {
                std::cmp::Ordering::Less
            } else if a == b {
                std::cmp::Ordering::Equal
            } else {
                std::cmp::Ordering::Greater
            }
        })
    });
    tops.into_iter().map(|t| literal_descent(t)).collect()
}

/// `u <= v`: some rotation of `u` has its 1's inside the 1's of `v`.
pub fn brute_leq(u: &[u8], v: &[u8]) -> bool {
    (0..u.len()).any(|s| {
        let r = read_from(u, s);
        r.iter().zip(v).all(|(a, b)| *a <= *b)
    })
}
