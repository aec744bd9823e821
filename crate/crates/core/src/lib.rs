//! Exact combinatorics of quasi-circular domain weights.
//!
//! A weight `(m_1, ..., m_n)` is a strictly increasing tuple of positive
//! integers with gcd 1. This crate decides membership in the recursively
//! defined weight class, builds the obstruction sets each new weight has to
//! avoid, lists resonances `m_i + Σ_{r<j} m_r k_r = m_j`, enumerates
//! admissible extensions, and counts them in closed form for pairs of primes.
//!
//! ```
//! use qcweights::{is_in_class, obstruction_set, Backend, WeightTuple};
//!
//! let w = WeightTuple::new(vec![3, 7, 11]).unwrap();
//! let verdict = is_in_class(&w);
//! assert!(verdict.in_class);
//! assert_eq!(verdict.witnesses, vec![2]);
//!
//! let iset = obstruction_set(&[3, 7], 2, Backend::Apery).unwrap();
//! assert_eq!(iset.elements(), &[12, 13, 14, 15, 16, 17, 18, 19]);
//! ```

pub mod cli;
pub mod counting;
pub mod error;
pub mod scan;
pub mod semigroup;
pub mod weights;

pub use counting::{
    closed_form, closed_form_count, is_prime, s_partition, table_d, table_f, ClosedForm,
    ClosedFormKind, CountReport, SPartition,
};
pub use error::{Error, Result};
pub use semigroup::{
    build_apery, build_sieve, obstruction_set_fast, AperyTable, Representability,
    RepresentabilityTable,
};
pub use weights::{
    c_exponent, check_n3_criteria, enumerate_admissible, is_in_class, obstruction_set, r_value,
    resonances, validate_weight, zero_set_equivalence_check, Backend, Failure, MembershipVerdict,
    MultiIndex, N3Criterion, ObstructionSet, ResonanceWitness, WeightTuple,
};
