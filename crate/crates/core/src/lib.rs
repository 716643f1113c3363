//! Symmetric chain decomposition of binary necklaces.
//!
//! Necklaces of length `n` (binary words up to rotation), ordered by
//! containment of 1's after rotation and graded by the number of 1's, split
//! into symmetric saturated chains. The descent map that walks each chain is
//! computed from the cyclic `01` bracketing of canonical words, and the same
//! map serves as the lowering operator of a cyclic sl2 crystal whose strings
//! are the chains.
//!
//! * [`word`]: words, rotations, canonical forms, necklace enumeration
//! * [`matching`]: cyclic bracketing
//! * [`chains`]: descent map, its inverse, chain reconstruction
//! * [`scd`]: full decomposition, verification, JSON/DOT/text output
//! * [`oracle`]: brute-force poset used to certify the decomposition
//! * [`crystal`]: crystal operators, highest-weight test, involution
//!
//! ```
//! use necklace_scd::{build_scd, verify_scd};
//!
//! let scd = build_scd(6).unwrap();
//! assert_eq!(scd.chain_lengths(), vec![7, 3, 3, 1]);
//! assert!(verify_scd(&scd, 14).ok());
//! ```

pub mod chains;
pub mod crystal;
pub mod error;
pub mod exec;
pub mod matching;
pub mod oracle;
pub mod scd;
pub mod word;

pub use chains::{chain_of, phi, phi_inverse, phi_upper, symmetric_partner, Chain, PartnerResult};
pub use crystal::{
    crystal_graph, involution, is_highest_weight_lemma, string_of, CrystalGraph, CrystalNode,
    CrystalString,
};
pub use error::{Result, ScdError};
pub use exec::Exec;
pub use matching::{cyclic_match, is_noncrossing, Matching, UnmatchedKind};
pub use oracle::{build_poset, check_rank_profile, necklace_leq, QuotientPoset, RankProfileReport};
pub use scd::{build_scd, verify_scd, Scd, ScdDocument, VerificationReport};
pub use word::{
    canonical_rotation, complement_reverse, enumerate_necklaces, rotate, Necklace, RotationOffset,
    Word,
};
