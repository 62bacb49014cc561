//! The JSON map file format.
//!
//! ```text
//! {"flags":4,"sigma":[[0,2],[1,3]],"alpha":[[0,1],[2,3]],"root":0}
//! ```
//!
//! Cycles are written in canonical order; flags missing from a cycle list are
//! fixed points. Output always compacts flag labels to `0..flags`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::map::GeneralMap;
use crate::perm::{Flag, Permutation};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct MapRecord {
    pub flags: usize,
    pub sigma: Vec<Vec<Flag>>,
    pub alpha: Vec<Vec<Flag>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub root: Option<Flag>,
}

impl MapRecord {
    /// Serializes a map, compacting labels. The root, if any, is renamed too.
    pub fn from_map(map: &GeneralMap, root: Option<Flag>) -> Self {
        let (compact, rename) = map.compact();
        MapRecord {
            flags: compact.flag_count(),
            sigma: compact.sigma().cycles(),
            alpha: compact.alpha().cycles(),
            root: root.map(|r| rename[r]),
        }
    }

    /// Builds the (unvalidated) pair of permutations described by the record.
    pub fn to_unchecked(&self) -> Result<GeneralMap> {
        Ok(GeneralMap::from_parts_unchecked(
            Permutation::from_cycles(self.flags, &self.sigma)?,
            Permutation::from_cycles(self.flags, &self.alpha)?,
        ))
    }

    pub fn to_map(&self) -> Result<GeneralMap> {
        let map = self.to_unchecked()?;
        GeneralMap::new(map.sigma().clone(), map.alpha().clone())
    }
}

/// Parses the JSON text of a map record.
pub fn parse_record(text: &str) -> Result<MapRecord> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Renders a map as a single JSON line (no trailing newline).
pub fn write_map(map: &GeneralMap, root: Option<Flag>) -> String {
    serde_json::to_string(&MapRecord::from_map(map, root)).expect("records always serialize")
}
