//! Exact construction and verification of strongly regular graphs from
//! p-ary bent functions.
//!
//! The pipeline: compute the Walsh spectrum of a function
//! `f: GF(p^(2k)) -> GF(p)` with exact cyclotomic-integer arithmetic, decide
//! bentness and (weak) regularity, check the homogeneity/evenness bundle that
//! the partial-difference-set constructions need, then build the subsets
//!
//! * `D`   - nonzero roots of f,
//! * `D_S` - preimages of the nonzero squares,
//! * `D_S'`- preimages of all squares,
//! * `D_N` - preimages of the non-squares,
//!
//! predict their `(v, d, lambda_1, lambda_2)` parameters in closed form, and
//! verify everything by exhaustive difference counting, common-neighbour
//! counting on the Cayley graphs, association-scheme intersection numbers and
//! GF(p)-ranks of adjacency matrices. Every check is exact integer
//! arithmetic; nothing is sampled or approximated.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live in
//! the companion `bentsrg-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bent;
pub mod cyclotomic;
pub mod error;
pub mod field;
pub mod groupring;
pub mod pds;
pub mod ranklab;
pub mod scheme;

pub use error::Error;
