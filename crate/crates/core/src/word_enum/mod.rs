//! Enumeration of 1-2 occurrence words, the word properties characterizing
//! loopless maps, their decompositions and the resulting counts.

mod bijection;
mod counts;
mod decompose;
mod generate;
mod properties;
mod series;

pub use bijection::{map_to_word, tree_word, word_to_map, word_to_map_with_tree};
pub use counts::{count_g, count_m, count_n, count_planar_loopless, count_t, CountTable};
pub use decompose::{decompose_nprime, decompose_q, NprimeDecomposition, QDecomposition};
pub use generate::{for_each_word, gen_words, word_count, WORD_GUARD};
pub use properties::{has_n, has_nprime, has_p, has_q, Property};
pub use series::{verify_f_equation, FEquationReport, FunctionalEquation, Mismatch, SERIES_GUARD};
