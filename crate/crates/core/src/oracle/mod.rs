//! Ground truth independent of the cellular constructions: exact ranks, reduced
//! homology, and multigraded Betti numbers from upper Koszul complexes.

pub mod betti;
pub mod homology;
pub mod linalg;

pub use betti::{
    bayer_sturmfels, betti_oracle, betti_oracle_over, has_linear_resolution, is_acyclic_leq,
    lcm_lattice,
};
pub use homology::{simplicial_chain_complex, ChainComplex};
pub use linalg::{exact_rank, exact_rank_rational, Field, IntMatrix};
