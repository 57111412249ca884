//! Reading, writing and generating maps, plus JSON and DOT exports.

pub mod corpus;
pub mod document;
pub mod dot;
pub mod export;
pub mod generate;
pub mod planar_code;
