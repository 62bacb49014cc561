pub mod cli;
pub mod dfs;
pub mod diagram;
pub mod error;
pub mod interlace;
pub mod io;
pub mod layout;
pub mod map;
pub mod perm;
pub mod poset;
pub mod quasi_tree;
pub mod word;
pub mod word_enum;

pub use diagram::BicoloredDiagram;
pub use error::{Error, Result};
pub use interlace::{DirectedInterlacement, InterlacementGraph};
pub use map::{Diagnostic, EulerCounts, GeneralMap, RootedMap, UnderlyingGraph};
pub use perm::{Flag, FlagSet, Permutation};
pub use quasi_tree::{EdgeId, EdgeSubset};
pub use word::OccurrenceWord;
