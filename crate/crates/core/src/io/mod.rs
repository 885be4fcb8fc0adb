//! JSON documents, the Euclidean embedding used for drawing, and SVG output.

pub mod embed;
pub mod json;
pub mod svg;

pub use embed::EuclideanEmbedding;
pub use json::{parse_document, to_json, Document, PointSet};
pub use svg::{render_document, RenderSpec};
