//! Shared test oracles.
//!
//! Everything in this tree is deliberately independent of the library's own
//! algorithms: fusion numbers come from the Verlinde S-matrix rather than the
//! closed-form range, dimensions from Freudenthal's recursion rather than the
//! Weyl product, characters from direct lattice sums and fermionic products.
//! Each test target includes the subset it needs.
#![allow(dead_code)]

pub mod affine_freudenthal;
pub mod fermion;
pub mod freudenthal;
pub mod partitions;
pub mod theta_brute;
pub mod verlinde;
