//! Acceptance criteria. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any fails.

mod common;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::time::{Duration, Instant};

use necklace_scd::crystal::{self, dual_scd, weight};
use necklace_scd::oracle::{build_poset, burnside_rank_count, check_rank_profile, is_unimodal};
use necklace_scd::*;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn nk(s: &str) -> Necklace {
    s.parse().unwrap()
}

fn strs(c: &[Necklace]) -> Vec<String> {
    c.iter().map(|e| e.to_string()).collect()
}

/// Criterion 1: Worked examples reproduced exactly.
fn golden_examples() -> Outcome {
    let (c, _) = canonical_rotation(&"00011101001100111001".parse().unwrap());
    ensure(c.to_string() == "11101001100111001000", || format!("canonical form {c}"))?;

    let src: Word = "1101100110".parse().unwrap();
    let m = cyclic_match(&src);
    let p = *m.unmatched_ones().last().unwrap();
    let in_frame = src.with_letter(p, 0);
    let image = phi(&Necklace::from_word(&src)).unwrap();
    ensure(in_frame.to_string() == "1101000110", || format!("phi in input frame {in_frame}"))?;
    ensure(image.to_string() == "1101101000", || format!("phi canonical {image}"))?;
    ensure(Necklace::from_word(&in_frame) == image, || "frames disagree".into())?;

    let mut walk = vec![nk("1111011001011110000")];
    while let Some(next) = phi(walk.last().unwrap()) {
        walk.push(next);
    }
    let expected = [
        "1111011001011110000",
        "1111011001011100000",
        "1111011001011000000",
        "1111010001011000000",
    ];
    ensure(strs(&walk) == expected, || format!("chain {:?}", strs(&walk)))?;

    ensure(is_highest_weight_lemma(&nk("1111001110001110")), || "1111001110001110 not highest".into())?;
    ensure(!is_highest_weight_lemma(&nk("11100010110")), || "11100010110 highest".into())?;
    let head = string_of(&nk("11100010110")).head.necklace;
    ensure(head == nk("11110010110"), || format!("head of 11100010110 is {head}"))?;
    ensure(!is_highest_weight_lemma(&nk("11110100")), || "11110100 highest".into())?;
    let head = string_of(&nk("11110100")).head.necklace;
    ensure(head == nk("11110110"), || format!("head of 11110100 is {head}"))?;
    Ok("canonical form, phi step, 19-letter chain and three highest-weight examples".into())
}

/// Criterion 2: Every decomposition for n = 1..=16 verifies in under 60 s.
fn scd_sweep() -> Outcome {
    let start = Instant::now();
    for n in 1..=16 {
        let s = build_scd(n).map_err(|e| format!("n = {n}: {e}"))?;
        let r = verify_scd(&s, 14);
        ensure(r.ok(), || format!("n = {n}: {:?}", r.failures))?;
        ensure(r.oracle_saturation == (n <= 14), || format!("n = {n}: wrong saturation mode"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("n=1..16 verified, oracle covers for n<=14, {elapsed:.2?}"))
}

/// Criterion 3: phi is injective on every rank.
fn injectivity() -> Outcome {
    let mut checked = 0usize;
    for n in 1..=14 {
        let mut seen: HashMap<Necklace, Necklace> = HashMap::new();
        for u in enumerate_necklaces(n).unwrap() {
            if let Some(v) = phi(&u) {
                ensure(v.rank() + 1 == u.rank(), || format!("phi({u}) = {v} skips a rank"))?;
                if let Some(other) = seen.insert(v, u) {
                    return Err(format!("phi({other}) = phi({u}) = {v}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} phi steps, no collisions, n<=14"))
}

/// Criterion 4: Chain-count ledger and rank profile.
fn chain_ledger() -> Outcome {
    for n in 1..=14 {
        let sizes = build_poset(n).unwrap().rank_sizes().to_vec();
        let s = build_scd(n).unwrap();
        let size = |k: usize| sizes.get(k).copied().unwrap_or(0);
        for k in (n / 2 + 1)..=n {
            let tops = s.chains().iter().filter(|c| c.top().rank() == k).count();
            ensure(tops == size(k) - size(k + 1), || {
                format!("n = {n}, rank {k}: {tops} tops vs {} - {}", size(k), size(k + 1))
            })?;
        }
        ensure(s.chains().len() == size(n / 2), || {
            format!("n = {n}: {} chains vs middle rank size {}", s.chains().len(), size(n / 2))
        })?;
        let width = *sizes.iter().max().unwrap();
        ensure(s.chains().len() == width, || format!("n = {n}: chain count is not the width"))?;
    }
    for n in 1..=20 {
        let r = check_rank_profile(n).map_err(|e| e.to_string())?;
        ensure(r.symmetric && r.unimodal && r.matches_burnside, || {
            format!("n = {n}: {:?}", r.findings)
        })?;
        ensure(is_unimodal(&r.rank_sizes), || format!("n = {n} not unimodal"))?;
        for (k, &c) in r.rank_sizes.iter().enumerate() {
            ensure(c as u128 == burnside_rank_count(n, k), || format!("n = {n}, rank {k}"))?;
        }
    }
    Ok("ledger exact for n<=14; profiles symmetric, unimodal, formula-exact for n<=20".into())
}

/// Criterion 5: Crystal strings are the chains; the word-level highest-weight test
/// matches the non-image test; string weights run L, L-2, ..., -L.
fn crystal_equivalence() -> Outcome {
    let mut strings_checked = 0usize;
    for n in 1..=14 {
        let s = build_scd(n).unwrap();
        let all = enumerate_necklaces(n).unwrap();
        let images: HashSet<Necklace> = all
            .iter()
            .filter(|u| u.is_upper())
            .map(|u| phi_upper(u).unwrap())
            .collect();

        let mut strings: BTreeSet<Vec<Necklace>> = BTreeSet::new();
        for u in &all {
            let top = 2 * u.rank() >= n && !images.contains(u);
            let lemma = is_highest_weight_lemma(u);
            ensure(lemma == top, || format!("lemma({u}) = {lemma}, non-image = {top}"))?;
            let raised = crystal::e(u);
            ensure(raised.is_none() == top, || format!("e({u}) = {raised:?} but top = {top}"))?;
            if raised.is_some() {
                continue;
            }
            let mut string = vec![*u];
            while let Some(next) = crystal::f(string.last().unwrap()) {
                string.push(next);
            }
            let l = weight(u);
            ensure(string.len() as i64 == l + 1, || format!("string from {u} has length {}", string.len()))?;
            for (i, x) in string.iter().enumerate() {
                ensure(weight(x) == l - 2 * i as i64, || format!("weight of {x} in string of {u}"))?;
            }
            let via = string_of(string.last().unwrap());
            ensure(via.necklaces() == string, || format!("string_of disagrees below {u}"))?;
            strings.insert(string);
        }
        let chains: BTreeSet<Vec<Necklace>> = s.chains().iter().map(|c| c.elements().to_vec()).collect();
        ensure(strings == chains, || format!("n = {n}: strings differ from chains"))?;
        strings_checked += strings.len();
    }
    Ok(format!("{strings_checked} strings equal chains for n<=14"))
}

/// Criterion 6: Random-order removal gives the same matching as the main pass.
fn matching_confluence() -> Outcome {
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed_cafe);
    let mut total = 0usize;
    for n in 1..=16 {
        for _ in 0..1000 {
            let letters: Vec<u8> = (0..n).map(|_| rng.gen_range(0..=1)).collect();
            let w = Word::from_letters(&letters).unwrap();
            let m = cyclic_match(&w);
            let (pairs, mut rest) = common::removal_match(&letters, &mut rng);
            rest.sort_unstable();
            let main: BTreeSet<(usize, usize)> = m.pairs().iter().copied().collect();
            ensure(main == pairs && m.unmatched() == rest.as_slice(), || {
                format!("{w}: {main:?} / {:?} vs {pairs:?} / {rest:?}", m.unmatched())
            })?;
            ensure(is_noncrossing(&m), || format!("{w}: crossing pairs"))?;
            let kinds: HashSet<u8> = m.unmatched().iter().map(|&p| w.get(p)).collect();
            ensure(kinds.len() <= 1, || format!("{w}: mixed unmatched letters"))?;
            total += 1;
        }
    }
    Ok(format!("{total} random words, n<=16"))
}

/// Criterion 7: Reverse-complement is an involution, negates weight, and carries the
/// decomposition to another valid one with tops sent to bottoms.
fn involution_suite() -> Outcome {
    for n in 1..=12 {
        let s = build_scd(n).unwrap();
        for u in enumerate_necklaces(n).unwrap() {
            let v = involution(&u);
            ensure(involution(&v) == u, || format!("involution not involutive at {u}"))?;
            ensure(weight(&v) == -weight(&u), || format!("weight not negated at {u}"))?;
        }
        let dual = dual_scd(&s);
        let r = verify_scd(&dual, 14);
        ensure(r.ok(), || format!("n = {n}: dual fails {:?}", r.failures))?;
        let bottoms: HashSet<Necklace> = dual.chains().iter().map(|c| *c.bottom()).collect();
        for c in s.chains() {
            ensure(bottoms.contains(&involution(c.top())), || {
                format!("image of top {} is not a bottom of the dual", c.top())
            })?;
        }
    }
    Ok("n<=12: involutive, weight-negating, dual decomposition verifies".into())
}

/// Criterion 8: Small cases, first derived with the literal reference descent.
fn hand_derived_cases() -> Outcome {
    let show = |chains: Vec<Vec<Vec<u8>>>| -> Vec<Vec<String>> {
        chains
            .into_iter()
            .map(|c| c.iter().map(|w| common::show(w)).collect())
            .collect()
    };
    let four = vec![vec!["1111", "1110", "1100", "1000", "0000"], vec!["1010"]];
    let six = vec![
        vec!["111111", "111110", "111100", "111000", "110000", "100000", "000000"],
        vec!["111010", "110010", "101000"],
        vec!["110110", "110100", "100100"],
        vec!["101010"],
    ];
    for (n, expected) in [(4, four), (6, six)] {
        let reference = show(common::literal_scd(n));
        ensure(reference == expected, || format!("reference n = {n}: {reference:?}"))?;
        let built: Vec<Vec<String>> = build_scd(n)
            .unwrap()
            .chains()
            .iter()
            .map(|c| strs(c.elements()))
            .collect();
        ensure(built == expected, || format!("built n = {n}: {built:?}"))?;
    }
    Ok("n=4 {5,1} and n=6 {7,3,3,1} match reference and build".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 worked examples", golden_examples),
        ("2 SCD validity sweep", scd_sweep),
        ("3 injectivity", injectivity),
        ("4 chain/rank ledger", chain_ledger),
        ("5 crystal equivalence", crystal_equivalence),
        ("6 matching confluence", matching_confluence),
        ("7 involution suite", involution_suite),
        ("8 hand-derived small cases", hand_derived_cases),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run)
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("[PASS] criterion {name} ({elapsed:.2?}): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {name} ({elapsed:.2?}): {detail}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 8 acceptance criteria passed");
}
