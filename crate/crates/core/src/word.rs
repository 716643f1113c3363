//! Binary words, cyclic rotations and necklaces.
//!
//! Words are ordered lexicographically with `1 ≺ 0`: at the first position
//! where two words differ, the one holding a 1 is smaller. Every "smallest
//! rotation" in the crate uses this comparator. Under it a necklace's
//! canonical representative always starts with its longest run of 1's,
//! e.g. `00011101001100111001` canonicalizes to `11101001100111001000`.
//!
//! Positions are 0-indexed from the left. Internally a word of length `n` is
//! an `n`-bit integer with position 0 in the most significant bit, so
//! `1 ≺ 0` order is exactly descending numeric order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{check_range, Result, ScdError};
use crate::exec::Exec;

/// Longest word the packed representation holds.
pub const MAX_WORD_LEN: usize = 64;

/// Default upper bound on `n` for exhaustive necklace enumeration.
pub const DEFAULT_MAX_N: usize = 24;

/// Largest `n` any enumeration accepts, whatever limit the caller asks for.
pub const HARD_MAX_N: usize = 32;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Word {
    bits: u64,
    len: u8,
}

fn mask(len: usize) -> u64 {
    if len == 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl Word {
    /// Builds a word from letters, each of which must be 0 or 1.
    pub fn from_letters(letters: &[u8]) -> Result<Self> {
        let render = || letters.iter().map(|l| l.to_string()).collect::<String>();
        if letters.is_empty() {
            return Err(ScdError::Parse {
                input: String::new(),
                reason: "word must be non-empty".into(),
            });
        }
        if letters.len() > MAX_WORD_LEN {
            return Err(ScdError::Parse {
                input: render(),
                reason: format!("word longer than {MAX_WORD_LEN} letters"),
            });
        }
        let mut bits = 0u64;
        for &l in letters {
            if l > 1 {
                return Err(ScdError::Parse {
                    input: render(),
                    reason: format!("letter {l} is not 0 or 1"),
                });
            }
            bits = (bits << 1) | l as u64;
        }
        Ok(Word {
            bits,
            len: letters.len() as u8,
        })
    }

    /// Builds a word from its packed form (position 0 in bit `len - 1`).
    pub fn from_bits(bits: u64, len: usize) -> Result<Self> {
        if len == 0 || len > MAX_WORD_LEN {
            return Err(ScdError::Range {
                n: len,
                max: MAX_WORD_LEN,
            });
        }
        if bits & !mask(len) != 0 {
            return Err(ScdError::Domain(format!(
                "bits {bits:#x} do not fit in {len} positions"
            )));
        }
        Ok(Word {
            bits,
            len: len as u8,
        })
    }

    pub(crate) fn from_bits_unchecked(bits: u64, len: usize) -> Self {
        debug_assert!((1..=MAX_WORD_LEN).contains(&len) && bits & !mask(len) == 0);
        Word {
            bits,
            len: len as u8,
        }
    }

    pub fn constant(letter: u8, len: usize) -> Result<Self> {
        Word::from_letters(&vec![letter; len])
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    /// Always false; words have at least one letter.
    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn get(&self, pos: usize) -> u8 {
        debug_assert!(pos < self.len());
        ((self.bits >> (self.len() - 1 - pos)) & 1) as u8
    }

    /// The word with position `pos` set to `letter`.
    pub fn with_letter(&self, pos: usize, letter: u8) -> Word {
        assert!(pos < self.len(), "position {pos} out of range for length {}", self.len());
        let bit = 1u64 << (self.len() - 1 - pos);
        let bits = if letter == 0 {
            self.bits & !bit
        } else {
            self.bits | bit
        };
        Word { bits, ..*self }
    }

    pub fn letters(&self) -> Vec<u8> {
        (0..self.len()).map(|p| self.get(p)).collect()
    }

    /// Number of 1's.
    #[inline]
    pub fn ones(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn zeros(&self) -> usize {
        self.len() - self.ones()
    }

    /// Positions holding a 1, left to right.
    pub fn one_positions(&self) -> Vec<usize> {
        (0..self.len()).filter(|&p| self.get(p) == 1).collect()
    }

    /// Positions holding a 0, left to right.
    pub fn zero_positions(&self) -> Vec<usize> {
        (0..self.len()).filter(|&p| self.get(p) == 0).collect()
    }

    /// Compares under `1 ≺ 0`. Words of different length compare by length.
    pub fn lyndon_cmp(&self, other: &Word) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| other.bits.cmp(&self.bits))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lyndon_cmp(other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in 0..self.len() {
            f.write_str(if self.get(p) == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = ScdError;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(ScdError::Parse {
                    input: s.to_string(),
                    reason: format!("unexpected character {other:?}"),
                }),
            })
            .collect::<Result<Vec<u8>>>()?;
        if letters.is_empty() {
            return Err(ScdError::Parse {
                input: s.to_string(),
                reason: "word must be non-empty".into(),
            });
        }
        Word::from_letters(&letters).map_err(|e| match e {
            ScdError::Parse { reason, .. } => ScdError::Parse {
                input: s.to_string(),
                reason,
            },
            other => other,
        })
    }
}

/// Rotation amount in `[0, n)`; rotating the source word by it yields the
/// canonical word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RotationOffset(pub usize);

impl fmt::Display for RotationOffset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[inline]
fn rotate_bits(bits: u64, len: usize, by: usize) -> u64 {
    // Position p moves to p + by, i.e. bit index drops by `by`.
    if by == 0 {
        return bits;
    }
    ((bits >> by) | (bits << (len - by))) & mask(len)
}

/// Rotates so that position `p` of the result holds the letter at
/// position `(p - i) mod n` of `w`. Negative `i` rotates the other way.
pub fn rotate(w: &Word, i: i64) -> Word {
    let n = w.len();
    let by = i.rem_euclid(n as i64) as usize;
    Word::from_bits_unchecked(rotate_bits(w.bits, n, by), n)
}

/// Start index of the least rotation under `1 ≺ 0` (Booth's failure-function
/// scan over the doubled word).
fn least_rotation_start(w: &Word) -> usize {
    let n = w.len();
    // Key 0 for letter 1 and key 1 for letter 0 turns `1 ≺ 0` into `<`.
    let key = |j: usize| 1 - w.get(j % n);
    let mut fail: Vec<isize> = vec![-1; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = key(j);
        let mut i = fail[j - k - 1];
        while i != -1 && sj != key(k + i as usize + 1) {
            if sj < key(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = fail[i as usize];
        }
        if i == -1 && sj != key(k) {
            if sj < key(k) {
                k = j;
            }
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    k % n
}

/// Smallest `d > 0` with `rotate(w, d) == w`; divides `n`.
pub fn primitive_period(w: &Word) -> usize {
    let n = w.len();
    (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .find(|&d| d == n || rotate_bits(w.bits, n, d) == w.bits)
        .unwrap_or(n)
}

/// The least rotation of `w` under `1 ≺ 0` and the smallest offset `i` with
/// `rotate(w, i)` equal to it.
pub fn canonical_rotation(w: &Word) -> (Word, RotationOffset) {
    let n = w.len();
    let start = least_rotation_start(w);
    // canonical[p] = w[p + start], so the witnessing rotation is -start.
    let canonical = rotate(w, -(start as i64));
    let period = primitive_period(&canonical);
    let offset = (n - start % period) % period;
    debug_assert_eq!(rotate(w, offset as i64), canonical);
    (canonical, RotationOffset(offset))
}

/// True iff `w` is its own least rotation. Scans rotations on the packed
/// form, which is cheaper than [`canonical_rotation`] in tight loops.
pub fn is_canonical(w: &Word) -> bool {
    let n = w.len();
    (1..n).all(|by| rotate_bits(w.bits, n, by) <= w.bits)
}

/// Every start index `s` such that reading `w` from `s` cyclically gives the
/// canonical word. More than one exactly when `w` is periodic.
pub fn canonical_starts(w: &Word) -> Vec<usize> {
    let n = w.len();
    let best = (0..n)
        .map(|s| rotate_bits(w.bits, n, (n - s) % n))
        .max()
        .unwrap_or(w.bits);
    (0..n)
        .filter(|&s| rotate_bits(w.bits, n, (n - s) % n) == best)
        .collect()
}

/// Reverses the letters and exchanges 0 with 1.
pub fn complement_reverse(w: &Word) -> Word {
    let n = w.len();
    let rev = w.bits.reverse_bits() >> (64 - n);
    Word::from_bits_unchecked(!rev & mask(n), n)
}

/// A rotation class of binary words, held as its canonical representative.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Necklace {
    canonical: Word,
}

impl Necklace {
    pub fn from_word(w: &Word) -> Self {
        Necklace {
            canonical: canonical_rotation(w).0,
        }
    }

    /// Wraps a word already known to be canonical.
    pub(crate) fn from_canonical_unchecked(w: Word) -> Self {
        debug_assert!(is_canonical(&w), "{w} is not canonical");
        Necklace { canonical: w }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(Necklace::from_word(&s.parse()?))
    }

    #[inline]
    pub fn word(&self) -> &Word {
        &self.canonical
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of 1's; the grading of the quotient poset.
    #[inline]
    pub fn rank(&self) -> usize {
        self.canonical.ones()
    }

    /// More 1's than 0's.
    #[inline]
    pub fn is_upper(&self) -> bool {
        2 * self.rank() > self.len()
    }
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canonical.fmt(f)
    }
}

impl fmt::Debug for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Necklace({})", self.canonical)
    }
}

impl FromStr for Necklace {
    type Err = ScdError;

    fn from_str(s: &str) -> Result<Self> {
        Necklace::parse(s)
    }
}

/// All necklaces of length `n`, ordered by rank ascending and then by
/// canonical word under `1 ≺ 0`.
pub fn enumerate_necklaces(n: usize) -> Result<Vec<Necklace>> {
    enumerate_necklaces_with(n, DEFAULT_MAX_N, Exec::default())
}

pub fn enumerate_necklaces_with(n: usize, max_n: usize, exec: Exec) -> Result<Vec<Necklace>> {
    check_range(n, max_n.min(HARD_MAX_N))?;
    let total = 1u64 << n;
    let mut out = exec.flat_map_range(total, 1 << 12, |range| {
        range
            .map(|bits| Word::from_bits_unchecked(bits, n))
            .filter(is_canonical)
            .map(Necklace::from_canonical_unchecked)
            .collect()
    });
    out.sort_by(|a, b| a.rank().cmp(&b.rank()).then_with(|| a.cmp(b)));
    Ok(out)
}
