//! Input documents and SVG output.

pub mod document;
pub mod svg;

pub use document::IdealDocument;
pub use svg::complex_svg;
