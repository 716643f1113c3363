//! Descent through symmetric chains.
//!
//! On necklaces with more 1's than 0's, [`phi_upper`] changes the rightmost
//! unmatched 1 of the canonical word into a 0. A chain is generated from its
//! top by changing the top's unmatched 1's into 0's from right to left, all in
//! the top's own frame, canonicalizing after each step.
//!
//! A necklace on its own carries no descent history, so lower-half descent is
//! answered by reconstructing the whole chain: jump to the mirrored partner in
//! the upper half, climb to the top by inverting [`phi_upper`], then generate.

use std::fmt;

use crate::error::{Result, ScdError};
use crate::matching::cyclic_match;
use crate::word::{Necklace, Word};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Chain {
    top: Necklace,
    elements: Vec<Necklace>,
    flip_schedule: Vec<usize>,
}

impl Chain {
    /// Generates the chain headed by `top`. `top` must not have more 0's than
    /// 1's.
    pub fn from_top(top: Necklace) -> Result<Chain> {
        if 2 * top.rank() < top.len() {
            return Err(ScdError::Domain(format!(
                "chain top {top} has rank {} below n/2 = {}/2",
                top.rank(),
                top.len()
            )));
        }
        let mut flip_schedule = cyclic_match(top.word()).unmatched_ones().to_vec();
        flip_schedule.reverse();
        let mut elements = Vec::with_capacity(flip_schedule.len() + 1);
        elements.push(top);
        let mut current: Word = *top.word();
        for &pos in &flip_schedule {
            current = current.with_letter(pos, 0);
            elements.push(Necklace::from_word(&current));
        }
        Ok(Chain {
            top,
            elements,
            flip_schedule,
        })
    }

    /// Builds a chain from explicit elements without checking them against
    /// the generation rule. Used to hold decompositions read from outside or
    /// derived from another one.
    pub fn from_elements(elements: Vec<Necklace>) -> Result<Chain> {
        let top = *elements
            .first()
            .ok_or_else(|| ScdError::Document("chain has no elements".into()))?;
        let mut flip_schedule = cyclic_match(top.word()).unmatched_ones().to_vec();
        flip_schedule.reverse();
        Ok(Chain {
            top,
            elements,
            flip_schedule,
        })
    }

    pub fn top(&self) -> &Necklace {
        &self.top
    }

    pub fn bottom(&self) -> &Necklace {
        self.elements.last().expect("chains are non-empty")
    }

    pub fn elements(&self) -> &[Necklace] {
        &self.elements
    }

    /// Positions in the top's canonical word, decreasing.
    pub fn flip_schedule(&self) -> &[usize] {
        &self.flip_schedule
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn n(&self) -> usize {
        self.top.len()
    }

    pub fn depth_of(&self, u: &Necklace) -> Option<usize> {
        self.elements.iter().position(|e| e == u)
    }

    /// Top rank plus bottom rank equals `n`.
    pub fn is_symmetric(&self) -> bool {
        self.top.rank() + self.bottom().rank() == self.n()
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.elements.iter().map(|e| e.to_string())).finish()
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(" -> ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PartnerResult {
    pub partner: Necklace,
    /// `rank(partner) - rank(input)`.
    pub r: usize,
}

/// Position, in `v`'s canonical word, of the 1 that [`phi_upper`] flips.
pub fn phi_upper_flip_position(v: &Necklace) -> Result<usize> {
    if !v.is_upper() {
        return Err(ScdError::Domain(format!(
            "phi_upper needs more 1's than 0's; {v} has rank {} with n = {}",
            v.rank(),
            v.len()
        )));
    }
    let m = cyclic_match(v.word());
    Ok(*m
        .unmatched_ones()
        .last()
        .expect("a word with more 1's than 0's has an unmatched 1"))
}

pub fn phi_upper(v: &Necklace) -> Result<Necklace> {
    let pos = phi_upper_flip_position(v)?;
    Ok(Necklace::from_word(&v.word().with_letter(pos, 0)))
}

/// Changes every unmatched 0 of `u` into a 1.
pub fn symmetric_partner(u: &Necklace) -> Result<PartnerResult> {
    if u.is_upper() {
        return Err(ScdError::Domain(format!(
            "symmetric_partner needs at least as many 0's as 1's; {u} has rank {} with n = {}",
            u.rank(),
            u.len()
        )));
    }
    let m = cyclic_match(u.word());
    let raised = m
        .unmatched_zeros()
        .iter()
        .fold(*u.word(), |w, &p| w.with_letter(p, 1));
    Ok(PartnerResult {
        partner: Necklace::from_word(&raised),
        r: m.unmatched_zeros().len(),
    })
}

/// The unique upper-half necklace `w` with `phi_upper(w) == u`, if any.
///
/// Panics if two distinct preimages exist; that would contradict injectivity
/// of `phi_upper`.
pub fn raise_upper(u: &Necklace) -> Option<Necklace> {
    let mut found: Option<Necklace> = None;
    for z in u.word().zero_positions() {
        let cand = Necklace::from_word(&u.word().with_letter(z, 1));
        if !cand.is_upper() || found == Some(cand) {
            continue;
        }
        if phi_upper(&cand).ok() == Some(*u) {
            if let Some(prev) = found {
                panic!("phi_upper is not injective: {prev} and {cand} both map to {u}");
            }
            found = Some(cand);
        }
    }
    found
}

/// Top of the chain containing `u`.
pub fn chain_top(u: &Necklace) -> Necklace {
    let mut top = if u.is_upper() {
        *u
    } else {
        symmetric_partner(u).expect("lower half checked").partner
    };
    while let Some(up) = raise_upper(&top) {
        top = up;
    }
    top
}

/// The chain containing `u` and `u`'s depth below its top.
///
/// Panics if `u` is missing from the chain reconstructed for it.
pub fn chain_of(u: &Necklace) -> (Chain, usize) {
    let top = chain_top(u);
    let chain = Chain::from_top(top).expect("climb ends at rank >= n/2");
    let depth = chain
        .depth_of(u)
        .unwrap_or_else(|| panic!("{u} is not in the chain {chain} reconstructed for it"));
    (chain, depth)
}

/// One step down the chain; `None` at a chain bottom.
pub fn phi(u: &Necklace) -> Option<Necklace> {
    if u.is_upper() {
        return Some(phi_upper(u).expect("upper half checked"));
    }
    let (chain, depth) = chain_of(u);
    chain.elements().get(depth + 1).copied()
}

/// One step up the chain; `None` at a chain top.
pub fn phi_inverse(u: &Necklace) -> Option<Necklace> {
    let (chain, depth) = chain_of(u);
    depth.checked_sub(1).map(|d| chain.elements()[d])
}
