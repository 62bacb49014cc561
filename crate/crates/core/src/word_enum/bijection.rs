use std::collections::BTreeSet;

use crate::dfs::{dfs, DfsPolicy};
use crate::diagram::BicoloredDiagram;
use crate::error::{Error, Result};
use crate::map::RootedMap;
use crate::quasi_tree::EdgeSubset;
use crate::word::OccurrenceWord;
use crate::word_enum::properties::has_p;

/// The rooted loopless map of a word with property P together with its tree,
/// the sinks of the oriented interlacement. Flags are word positions.
pub fn word_to_map_with_tree(w: &OccurrenceWord) -> Result<(RootedMap, EdgeSubset)> {
    if !has_p(w)? {
        return Err(Error::MissingProperty("P"));
    }
    if w.is_empty() {
        return Err(Error::InvalidWord(
            "the empty word has no rooted map".into(),
        ));
    }
    let sinks: BTreeSet<usize> = w.directed_interlacement().sinks().into_iter().collect();
    BicoloredDiagram::from_word(w, &sinks)?.reconstruct()
}

pub fn word_to_map(w: &OccurrenceWord) -> Result<RootedMap> {
    Ok(word_to_map_with_tree(w)?.0)
}

/// The canonical tour word of the quasi-tree `s`.
pub fn tree_word(m: &RootedMap, s: &EdgeSubset) -> Result<OccurrenceWord> {
    Ok(BicoloredDiagram::of(m, s)?
        .double_occurrence_word()
        .canonical())
}

/// The canonical tour word of the Late DFS-tree.
pub fn map_to_word(m: &RootedMap) -> OccurrenceWord {
    tree_word(m, &dfs(m, DfsPolicy::Late).tree).expect("a DFS-tree is a quasi-tree")
}
