//! Generalized Newton complementary duals of monomial ideals, cellular resolutions
//! of the duals of strongly stable and shifted stable ideals, and an exact homology
//! oracle to check them against.
//!
//! Monomials are exponent vectors over `x_1..x_n`; every ideal is stored by its
//! minimal generators. Start from [`dual::generalized_dual`], build complexes with
//! [`cellres::build_borel_complex`] or [`cellres::build_planar_complex`], and compare
//! with [`oracle::betti_oracle`].

pub mod betti;
pub mod cli;
pub mod cellres;
pub mod dual;
pub mod error;
pub mod ferrers;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod monomial;
pub mod oracle;
pub mod sample;
pub mod stability;
pub mod suite;
pub mod toric;
