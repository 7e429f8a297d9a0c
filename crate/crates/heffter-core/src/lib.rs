//! Tight Heffter arrays H(m,n) over finite fields F_q with q = 2mn+1.
//!
//! An H(m,n) is an m×n matrix whose entries form a half-set of the additive
//! group of F_q and whose rows and columns are all zero-sum. This crate
//! builds such arrays through rank-one factorizations of half-sets, verifies
//! every defining property, computes multiplier groups both directly and
//! through factor stabilizers, classifies parameter pairs, and runs bounded
//! exhaustive searches on the small open cases.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the command
//! line live in the companion `heffter-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod array;
pub mod constructions;
pub mod cyclotomy;
pub mod error;
pub mod field;
pub mod search;

pub use array::{
    partial_sums, Check, CheckFailure, HeffterArray, MultiplierGroup, RankOneFactors,
    SimplicityMode, VerificationReport,
};
pub use constructions::{
    agreeable_parameters, classify_pair, construct_agreeable, construct_perfect,
    odd_part_radical, AgreeableParams, PairClass,
};
pub use cyclotomy::{cyclotomic_class, subgroup_of_order, CosetSpec, ElementSet};
pub use error::{Error, Result};
pub use field::{prime_power_decompose, Field, FieldElement, MAX_FIELD_ORDER};
pub use search::{scan_pairs, search_rank_one, SearchConfig, SearchOutcome, SearchStrategy};
