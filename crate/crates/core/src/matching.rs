//! Cyclic parenthesization of a binary word.
//!
//! A 0 immediately followed (cyclically, skipping letters already paired) by
//! a 1 forms a pair; pairing repeats until no such 0 remains. Reading 0 as
//! `(` and 1 as `)`, the fixed point is computed with one stack pass plus a
//! wrap-around step that pairs the trailing unmatched 0's with the leading
//! unmatched 1's, innermost first.

use std::fmt;

use crate::error::{Result, ScdError};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnmatchedKind {
    Ones,
    Zeros,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    word: Word,
    /// `(zero_pos, one_pos)`, sorted by `zero_pos`.
    pairs: Vec<(usize, usize)>,
    /// Ascending.
    unmatched: Vec<usize>,
    kind: UnmatchedKind,
}

impl Matching {
    /// Assembles a matching from explicit parts. Checks only that positions are
    /// in range and each is used exactly once; letters are not inspected, so
    /// this also builds deliberately invalid matchings for tests.
    pub fn from_parts(word: Word, pairs: Vec<(usize, usize)>, unmatched: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for p in pairs.iter().flat_map(|&(z, o)| [z, o]).chain(unmatched.iter().copied()) {
            if p >= n || seen[p] {
                return Err(ScdError::Domain(format!(
                    "position {p} out of range or used twice in a matching of length {n}"
                )));
            }
            seen[p] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(ScdError::Domain("matching does not cover every position".into()));
        }
        let mut pairs = pairs;
        pairs.sort_unstable();
        let mut unmatched = unmatched;
        unmatched.sort_unstable();
        let kind = match unmatched.first() {
            None => UnmatchedKind::None,
            Some(&p) if word.get(p) == 1 => UnmatchedKind::Ones,
            Some(_) => UnmatchedKind::Zeros,
        };
        Ok(Matching {
            word,
            pairs,
            unmatched,
            kind,
        })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn unmatched(&self) -> &[usize] {
        &self.unmatched
    }

    pub fn unmatched_kind(&self) -> UnmatchedKind {
        self.kind
    }

    pub fn is_fully_matched(&self) -> bool {
        self.unmatched.is_empty()
    }

    pub fn unmatched_ones(&self) -> &[usize] {
        match self.kind {
            UnmatchedKind::Ones => &self.unmatched,
            _ => &[],
        }
    }

    pub fn unmatched_zeros(&self) -> &[usize] {
        match self.kind {
            UnmatchedKind::Zeros => &self.unmatched,
            _ => &[],
        }
    }

    pub fn partner(&self, pos: usize) -> Option<usize> {
        self.pairs.iter().find_map(|&(z, o)| {
            if z == pos {
                Some(o)
            } else if o == pos {
                Some(z)
            } else {
                None
            }
        })
    }

    /// Bracket line: `(` under the 0 of a pair, `)` under its 1, `.` under
    /// unmatched letters.
    pub fn render_brackets(&self) -> String {
        let mut line = vec!['.'; self.word.len()];
        for &(z, o) in &self.pairs {
            line[z] = '(';
            line[o] = ')';
        }
        line.into_iter().collect()
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.word)?;
        write!(f, "{}", self.render_brackets())
    }
}

pub fn cyclic_match(w: &Word) -> Matching {
    let n = w.len();
    let mut open: Vec<usize> = Vec::new();
    let mut loose_ones: Vec<usize> = Vec::new();
    let mut pairs = Vec::with_capacity(n / 2);
    for p in 0..n {
        if w.get(p) == 0 {
            open.push(p);
        } else if let Some(z) = open.pop() {
            pairs.push((z, p));
        } else {
            loose_ones.push(p);
        }
    }
    // Linear leftovers look like `)))(((`; close them across the boundary.
    let wrap = open.len().min(loose_ones.len());
    for k in 0..wrap {
        pairs.push((open[open.len() - 1 - k], loose_ones[k]));
    }
    let (unmatched, kind) = if loose_ones.len() > wrap {
        (loose_ones[wrap..].to_vec(), UnmatchedKind::Ones)
    } else if open.len() > wrap {
        (open[..open.len() - wrap].to_vec(), UnmatchedKind::Zeros)
    } else {
        (Vec::new(), UnmatchedKind::None)
    };
    pairs.sort_unstable();
    Matching {
        word: *w,
        pairs,
        unmatched,
        kind,
    }
}

/// True iff `x` lies strictly inside the cyclic arc running forward from `a`
/// to `b`.
pub(crate) fn strictly_inside(a: usize, b: usize, x: usize, n: usize) -> bool {
    let span = (b + n - a) % n;
    let off = (x + n - a) % n;
    off > 0 && off < span
}

fn chords_cross(a: (usize, usize), b: (usize, usize), n: usize) -> bool {
    let (p, q) = a;
    let (r, s) = b;
    if p == r || p == s || q == r || q == s {
        return false;
    }
    strictly_inside(p, q, r, n) != strictly_inside(p, q, s, n)
}

/// No two pairs cross, and no chord between two unmatched positions crosses
/// a pair.
pub fn is_noncrossing(m: &Matching) -> bool {
    let n = m.word.len();
    let pairs = &m.pairs;
    for (i, &a) in pairs.iter().enumerate() {
        if pairs[i + 1..].iter().any(|&b| chords_cross(a, b, n)) {
            return false;
        }
    }
    for (i, &u) in m.unmatched.iter().enumerate() {
        for &v in &m.unmatched[i + 1..] {
            if pairs.iter().any(|&p| chords_cross((u, v), p, n)) {
                return false;
            }
        }
    }
    true
}
