use thiserror::Error;

use crate::perm::Flag;
use crate::quasi_tree::EdgeId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("permutations act on different flag sets")]
    DomainMismatch,
    #[error("not a permutation: {0}")]
    NotBijective(String),
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("general map is not connected ({components} components)")]
    Disconnected { components: usize },
    #[error("flag {0} is not a flag of the map")]
    UnknownFlag(Flag),
    #[error("{0} is not an edge of the map")]
    UnknownEdge(EdgeId),
    #[error("edge {0} is a bridge and cannot be deleted")]
    Bridge(EdgeId),
    #[error("edge {0} is a separating loop and cannot be contracted")]
    SeparatingLoop(EdgeId),
    #[error("edge subset is not a quasi-tree (tour has {cycles} cycles)")]
    NotQuasiTree { cycles: usize },
    #[error("edge subset is not a spanning tree")]
    NotSpanningTree,
    #[error("chords {0} and {1} do not interlace")]
    NotInterlaced(EdgeId, EdgeId),
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("{0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("size guard exceeded: {0}")]
    Guard(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("word lacks property {0}")]
    MissingProperty(&'static str),
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("parse error: {0}")]
    Parse(String),
}
