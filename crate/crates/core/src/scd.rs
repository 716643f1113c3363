//! Whole-poset symmetric chain decomposition and its verifier.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::chains::{self, phi_upper, Chain};
use crate::error::{Result, ScdError};
use crate::exec::Exec;
use crate::oracle::{self, burnside_count, burnside_rank_count, necklace_leq};
use crate::word::{enumerate_necklaces_with, is_canonical, Necklace, DEFAULT_MAX_N};

#[derive(Debug, Clone)]
pub struct Scd {
    n: usize,
    chains: Vec<Chain>,
    index: HashMap<Necklace, (usize, usize)>,
}

impl Scd {
    /// Wraps chains and derives the index (first occurrence wins). No
    /// structural checks; run [`verify_scd`] for those.
    pub fn from_chains(n: usize, chains: Vec<Chain>) -> Scd {
        let mut index = HashMap::new();
        for (ci, chain) in chains.iter().enumerate() {
            for (d, e) in chain.elements().iter().enumerate() {
                index.entry(*e).or_insert((ci, d));
            }
        }
        Scd { n, chains, index }
    }

    /// Wraps chains together with a caller-supplied index, unchecked.
    pub fn from_raw_parts(
        n: usize,
        chains: Vec<Chain>,
        index: HashMap<Necklace, (usize, usize)>,
    ) -> Scd {
        Scd { n, chains, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn chains(&self) -> &[Chain] {
        &self.chains
    }

    pub fn index(&self) -> &HashMap<Necklace, (usize, usize)> {
        &self.index
    }

    /// `(chain id, depth)` of `u`.
    pub fn locate(&self, u: &Necklace) -> Option<(usize, usize)> {
        self.index.get(u).copied()
    }

    pub fn chain_lengths(&self) -> Vec<usize> {
        self.chains.iter().map(Chain::len).collect()
    }

    pub fn element_count(&self) -> usize {
        self.chains.iter().map(Chain::len).sum()
    }

    pub fn to_document(&self) -> ScdDocument {
        ScdDocument {
            n: self.n,
            chain_count: self.chains.len(),
            chains: self
                .chains
                .iter()
                .map(|c| ChainDocument {
                    top: c.top().to_string(),
                    top_rank: c.top().rank(),
                    bottom_rank: c.bottom().rank(),
                    elements: c.elements().iter().map(|e| e.to_string()).collect(),
                })
                .collect(),
        }
    }

    pub fn from_document(doc: &ScdDocument) -> Result<Scd> {
        if doc.chain_count != doc.chains.len() {
            return Err(ScdError::Document(format!(
                "chain_count {} but {} chains listed",
                doc.chain_count,
                doc.chains.len()
            )));
        }
        let mut chains = Vec::with_capacity(doc.chains.len());
        for (ci, cd) in doc.chains.iter().enumerate() {
            let mut elements = Vec::with_capacity(cd.elements.len());
            for s in &cd.elements {
                let w: crate::word::Word = s.parse()?;
                if w.len() != doc.n {
                    return Err(ScdError::Document(format!(
                        "chain {ci}: word {s} has length {} but n = {}",
                        w.len(),
                        doc.n
                    )));
                }
                if !is_canonical(&w) {
                    return Err(ScdError::Document(format!(
                        "chain {ci}: word {s} is not in canonical form"
                    )));
                }
                elements.push(Necklace::from_word(&w));
            }
            let chain = Chain::from_elements(elements)?;
            if chain.top().to_string() != cd.top
                || chain.top().rank() != cd.top_rank
                || chain.bottom().rank() != cd.bottom_rank
            {
                return Err(ScdError::Document(format!(
                    "chain {ci}: top/rank fields disagree with its elements"
                )));
            }
            chains.push(chain);
        }
        Ok(Scd::from_chains(doc.n, chains))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("document serializes")
    }

    pub fn from_json(s: &str) -> Result<Scd> {
        let doc: ScdDocument =
            serde_json::from_str(s).map_err(|e| ScdError::Document(e.to_string()))?;
        Scd::from_document(&doc)
    }

    /// One line per chain: id, top rank, bottom rank, length, elements.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n={} chains={}", self.n, self.chains.len());
        for (ci, c) in self.chains.iter().enumerate() {
            let _ = writeln!(
                out,
                "{ci:>4}  top_rank={:<3} bottom_rank={:<3} len={:<3} {c}",
                c.top().rank(),
                c.bottom().rank(),
                c.len()
            );
        }
        out
    }

    /// Graphviz digraph with one cluster per chain and edges pointing down.
    pub fn render_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph scd_{} {{", self.n);
        let _ = writeln!(out, "  rankdir=TB;");
        let _ = writeln!(out, "  node [shape=box, fontname=\"monospace\"];");
        for (ci, c) in self.chains.iter().enumerate() {
            let _ = writeln!(out, "  subgraph cluster_{ci} {{");
            let _ = writeln!(out, "    label=\"chain {ci}\";");
            for e in c.elements() {
                let _ = writeln!(out, "    \"{e}\";");
            }
            for pair in c.elements().windows(2) {
                let _ = writeln!(out, "    \"{}\" -> \"{}\";", pair[0], pair[1]);
            }
            let _ = writeln!(out, "  }}");
        }
        let _ = writeln!(out, "}}");
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScdDocument {
    pub n: usize,
    pub chain_count: usize,
    pub chains: Vec<ChainDocument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainDocument {
    pub top: String,
    pub top_rank: usize,
    pub bottom_rank: usize,
    pub elements: Vec<String>,
}

pub fn build_scd(n: usize) -> Result<Scd> {
    build_scd_with(n, DEFAULT_MAX_N, Exec::default())
}

/// Chain tops are the necklaces of rank at least `n/2` that are not an image
/// of [`phi_upper`]; each top generates its chain by its flip schedule.
/// Chains are ordered by top rank descending, then by top word.
pub fn build_scd_with(n: usize, max_n: usize, exec: Exec) -> Result<Scd> {
    let necklaces = enumerate_necklaces_with(n, max_n, exec)?;
    let upper: Vec<Necklace> = necklaces.iter().filter(|u| u.is_upper()).copied().collect();
    let images: HashSet<Necklace> = exec
        .map(&upper, |u| phi_upper(u).expect("upper half"))
        .into_iter()
        .collect();
    if images.len() != upper.len() {
        return Err(ScdError::Integrity(format!(
            "phi_upper maps {} necklaces onto only {} images for n = {n}",
            upper.len(),
            images.len()
        )));
    }
    let mut tops: Vec<Necklace> = necklaces
        .iter()
        .filter(|u| 2 * u.rank() >= n && !images.contains(u))
        .copied()
        .collect();
    tops.sort_by(|a, b| b.rank().cmp(&a.rank()).then_with(|| a.cmp(b)));
    let chains = exec
        .map(&tops, |t| Chain::from_top(*t))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let scd = Scd::from_chains(n, chains);
    if scd.element_count() != necklaces.len() || scd.index.len() != necklaces.len() {
        return Err(ScdError::Integrity(format!(
            "chains for n = {n} hold {} entries ({} distinct) but there are {} necklaces",
            scd.element_count(),
            scd.index.len(),
            necklaces.len()
        )));
    }
    Ok(scd)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub chain_count: usize,
    pub chain_lengths: Vec<usize>,
    /// Whether cover relations were checked against the materialized poset
    /// (as opposed to rank step plus an order test).
    pub oracle_saturation: bool,
    pub partition_ok: bool,
    pub symmetry_ok: bool,
    pub saturation_ok: bool,
    pub injectivity_ok: bool,
    pub counts_ok: bool,
    pub failures: Vec<String>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        let lengths: Vec<String> = self.chain_lengths.iter().map(|l| l.to_string()).collect();
        format!("chains={} lengths=[{}]", self.chain_count, lengths.join(","))
    }
}

/// Up to this many findings are recorded per check.
const MAX_FINDINGS: usize = 20;

struct Findings {
    all: Vec<String>,
}

impl Findings {
    fn check(&mut self, label: &str, found: Vec<String>) -> bool {
        let ok = found.is_empty();
        let total = found.len();
        self.all.extend(found.into_iter().take(MAX_FINDINGS));
        if total > MAX_FINDINGS {
            self.all
                .push(format!("{label}: {} further findings omitted", total - MAX_FINDINGS));
        }
        ok
    }
}

pub fn verify_scd(s: &Scd, oracle_limit: usize) -> VerificationReport {
    verify_scd_with(s, oracle_limit, Exec::default())
}

/// Checks partition, chain symmetry, saturation, per-rank injectivity of
/// [`chains::phi`] and the chain-count ledger. With `n <= oracle_limit`
/// elements and covers come from the materialized oracle poset; above it
/// elements come from the enumerator (cross-checked against the necklace
/// count formula) and each chain step is tested as a rank step plus
/// [`necklace_leq`].
pub fn verify_scd_with(s: &Scd, oracle_limit: usize, exec: Exec) -> VerificationReport {
    let n = s.n;
    let mut f = Findings { all: Vec::new() };
    let poset = if n <= oracle_limit.min(oracle::ORACLE_HARD_CAP) {
        oracle::build_poset_with(n, oracle_limit, exec).ok()
    } else {
        None
    };

    let (reference, rank_sizes): (Vec<Necklace>, Vec<usize>) = match &poset {
        Some(p) => (
            p.elements().iter().map(|w| Necklace::from_canonical_unchecked(*w)).collect(),
            p.rank_sizes().to_vec(),
        ),
        None => {
            let list = enumerate_necklaces_with(n, crate::word::HARD_MAX_N, exec).unwrap_or_default();
            let sizes = (0..=n).map(|k| burnside_rank_count(n, k) as usize).collect();
            (list, sizes)
        }
    };

    // (a) partition
    let mut found = Vec::new();
    if poset.is_none() && reference.len() as u128 != burnside_count(n) {
        found.push(format!(
            "enumerated {} necklaces, formula gives {}",
            reference.len(),
            burnside_count(n)
        ));
    }
    let reference_set: HashSet<Necklace> = reference.iter().copied().collect();
    let mut seen: HashMap<Necklace, (usize, usize)> = HashMap::new();
    for (ci, c) in s.chains.iter().enumerate() {
        if c.is_empty() {
            found.push(format!("chain {ci} is empty"));
        }
        for (d, e) in c.elements().iter().enumerate() {
            if e.len() != n {
                found.push(format!("chain {ci}: {e} has length {} != {n}", e.len()));
            }
            if !reference_set.contains(e) {
                found.push(format!("chain {ci}: {e} is not a necklace of length {n}"));
            }
            if let Some((cj, dj)) = seen.insert(*e, (ci, d)) {
                found.push(format!("{e} appears in chain {cj} at depth {dj} and chain {ci} at depth {d}"));
            }
            if s.index.get(e) != Some(&(ci, d)) {
                found.push(format!(
                    "index places {e} at {:?} but it sits in chain {ci} at depth {d}",
                    s.index.get(e)
                ));
            }
        }
    }
    for r in &reference {
        if !seen.contains_key(r) {
            found.push(format!("{r} is in no chain"));
        }
    }
    if s.index.len() != seen.len() {
        found.push(format!(
            "index has {} entries for {} distinct chain elements",
            s.index.len(),
            seen.len()
        ));
    }
    let partition_ok = f.check("partition", found);

    // (b) symmetry
    let found: Vec<String> = s
        .chains
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_empty() && !c.is_symmetric())
        .map(|(ci, c)| {
            format!(
                "chain {ci} runs from rank {} to {}; ranks do not sum to {n}",
                c.top().rank(),
                c.bottom().rank()
            )
        })
        .collect();
    let symmetry_ok = f.check("symmetry", found);

    // (c) saturation
    let found: Vec<String> = exec
        .map(&s.chains, |c| {
            c.elements()
                .windows(2)
                .filter(|pair| {
                    let (upper, lower) = (&pair[0], &pair[1]);
                    match &poset {
                        Some(p) => !p.is_cover(lower, upper),
                        None => {
                            upper.rank() != lower.rank() + 1
                                || !necklace_leq(lower, upper).unwrap_or(false)
                        }
                    }
                })
                .map(|pair| format!("{} -> {} is not a cover relation", pair[0], pair[1]))
                .collect::<Vec<_>>()
        })
        .into_iter()
        .flatten()
        .collect();
    let saturation_ok = f.check("saturation", found);

    // (d) injectivity of phi on each rank
    let images = exec.map(&reference, chains::phi);
    let mut found = Vec::new();
    let mut preimage: HashMap<Necklace, Necklace> = HashMap::new();
    for (u, img) in reference.iter().zip(&images) {
        if let Some(v) = img {
            if v.rank() + 1 != u.rank() {
                found.push(format!("phi({u}) = {v} does not drop rank by one"));
            }
            if let Some(other) = preimage.insert(*v, *u) {
                found.push(format!("phi({other}) = phi({u}) = {v}"));
            }
        }
    }
    let injectivity_ok = f.check("injectivity", found);

    // (e) chain-count ledger
    let mut found = Vec::new();
    let size = |k: usize| rank_sizes.get(k).copied().unwrap_or(0);
    let mut tops_by_rank = vec![0usize; n + 1];
    for c in &s.chains {
        if !c.is_empty() && c.top().rank() <= n {
            tops_by_rank[c.top().rank()] += 1;
        }
    }
    for (k, &count) in tops_by_rank.iter().enumerate() {
        if 2 * k < n {
            if count != 0 {
                found.push(format!("{count} chains have top rank {k} below n/2"));
            }
        } else {
            let expected = size(k) - size(k + 1).min(size(k));
            if size(k) < size(k + 1) || count != expected {
                found.push(format!(
                    "{count} chains topped at rank {k}; rank sizes give {} - {} = {expected}",
                    size(k),
                    size(k + 1)
                ));
            }
        }
    }
    let middle = size(n / 2);
    if s.chains.len() != middle {
        found.push(format!(
            "{} chains but the middle rank {} has {middle} elements",
            s.chains.len(),
            n / 2
        ));
    }
    let counts_ok = f.check("counts", found);

    VerificationReport {
        n,
        chain_count: s.chains.len(),
        chain_lengths: s.chain_lengths(),
        oracle_saturation: poset.is_some(),
        partition_ok,
        symmetry_ok,
        saturation_ok,
        injectivity_ok,
        counts_ok,
        failures: f.all,
    }
}
