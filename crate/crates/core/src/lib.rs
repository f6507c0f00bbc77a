//! Binary cyclic locally repairable codes.
//!
//! Builds cyclic codes of length `2^m - 1` from their zeros, certifies
//! locality and availability by exhaustive low-weight dual search, computes
//! or brackets the minimum distance, evaluates the dimension bounds that
//! apply to locality-2 codes, and simulates local and global erasure repair.

pub mod bits;
pub mod bounds;
pub mod code;
pub mod constructions;
pub mod contraction;
pub mod distance;
pub mod error;
pub mod gf;
pub mod locality;
pub mod matrix;
pub mod poly;
pub mod repair;
pub mod report;

pub use bits::BitVec;
pub use bounds::{evaluate, BoundReport, Verdict};
pub use code::{all_defining_sets, defining_sets, CodeFile, CyclicCode, DefiningSet};
pub use constructions::{construct, ClaimedDistance, ConstructionResult, Family};
pub use distance::{min_distance, DistanceConfig, DistanceEstimate};
pub use error::{Error, Result};
pub use gf::{cyclotomic_cosets, CyclotomicCoset, FieldElement, GaloisField};
pub use locality::{
    extract_independent_cover, find_disjoint_groups, find_low_weight_duals, verify_availability,
    verify_locality, AvailabilityCertificate, LocalityCertificate, ParityCheck, RepairGroup,
};
pub use matrix::BinaryMatrix;
pub use poly::BinaryPolynomial;
pub use repair::{
    choose_repair_set, erasure_decode, local_repair, repair_all, ErasurePattern, RepairTrace,
};
pub use report::{analyze, search, AnalysisConfig, AnalysisReport, SearchConfig, SearchResult};
