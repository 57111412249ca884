//! The JSON map document: `num_darts`, `vertex_rotations` and an optional
//! `name`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::map::{build_map, MapError, PlanarMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("parse error: {0}")]
    Invalid(String),
    #[error(transparent)]
    Map(#[from] MapError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub num_darts: usize,
    pub vertex_rotations: Vec<Vec<usize>>,
}

impl MapDocument {
    pub fn from_map(map: &PlanarMap, name: Option<&str>) -> Self {
        MapDocument {
            name: name.map(str::to_string),
            num_darts: map.num_darts(),
            vertex_rotations: map.rotations().to_vec(),
        }
    }

    /// Field-level checks that do not need the map structure.
    fn check_fields(&self) -> Result<(), DocumentError> {
        if self.num_darts % 2 == 1 {
            return Err(DocumentError::Invalid(format!("num_darts: {} is odd", self.num_darts)));
        }
        let mut seen = vec![false; self.num_darts];
        for (v, rot) in self.vertex_rotations.iter().enumerate() {
            for &d in rot {
                if d >= self.num_darts {
                    return Err(DocumentError::Invalid(format!(
                        "vertex_rotations[{v}]: dart {d} >= num_darts {}",
                        self.num_darts
                    )));
                }
                if std::mem::replace(&mut seen[d], true) {
                    return Err(DocumentError::Invalid(format!("vertex_rotations[{v}]: dart {d} appears twice")));
                }
            }
        }
        if let Some(d) = seen.iter().position(|s| !s) {
            return Err(DocumentError::Invalid(format!("vertex_rotations: dart {d} is missing")));
        }
        Ok(())
    }

    pub fn to_map(&self) -> Result<PlanarMap, DocumentError> {
        self.check_fields()?;
        Ok(build_map(self.vertex_rotations.clone())?)
    }

    /// One rotation per line; byte-stable.
    pub fn to_text(&self) -> String {
        let mut out = String::from("{\n");
        if let Some(name) = &self.name {
            out += &format!("  \"name\": {},\n", serde_json::to_string(name).expect("strings serialize"));
        }
        out += &format!("  \"num_darts\": {},\n  \"vertex_rotations\": [\n", self.num_darts);
        for (i, rot) in self.vertex_rotations.iter().enumerate() {
            let darts: Vec<String> = rot.iter().map(usize::to_string).collect();
            let sep = if i + 1 < self.vertex_rotations.len() { "," } else { "" };
            out += &format!("    [{}]{sep}\n", darts.join(", "));
        }
        out += "  ]\n}\n";
        out
    }
}

pub fn parse_document(text: &str) -> Result<MapDocument, DocumentError> {
    serde_json::from_str(text).map_err(|e| DocumentError::Parse(e.to_string()))
}

/// Parse and validate a map document.
pub fn parse_map_document(text: &str) -> Result<PlanarMap, DocumentError> {
    parse_document(text)?.to_map()
}

pub fn emit_map_document(map: &PlanarMap, name: Option<&str>) -> String {
    MapDocument::from_map(map, name).to_text()
}
