//! Labeled cell complexes supporting cellular resolutions of dual ideals.

pub mod borel;
pub mod complex;
pub mod free;
pub mod planar;

pub use borel::build_borel_complex;
pub use complex::{taylor_complex, Cell, CellDescriptor, LabeledCellComplex};
pub use free::{betti_from_complex, free_complex, is_minimal, FreeComplex, FreeEntry, FreeGenerator};
pub use planar::build_planar_complex;
