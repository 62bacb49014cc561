//! The `mapwords` command line.
//!
//! Maps are read from the optional path argument or standard input in the
//! JSON map format; words are positional strings. Exit codes: 0 on success,
//! 1 on a domain or input error, 2 on a usage error.

use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::dfs::{dfs, is_tremaux, DfsPolicy};
use crate::diagram::BicoloredDiagram;
use crate::error::{Error, Result};
use crate::io::{parse_record, write_map};
use crate::layout::layout;
use crate::map::{Diagnostic, GeneralMap, RootedMap};
use crate::poset::build_poset;
use crate::quasi_tree::{EdgeId, EdgeSubset};
use crate::word::OccurrenceWord;
use crate::word_enum::{
    count_g, count_planar_loopless, count_t, for_each_word, map_to_word, tree_word,
    verify_f_equation, word_to_map, FunctionalEquation, Property,
};

#[derive(Parser, Debug)]
#[command(
    name = "mapwords",
    version,
    about = "Combinatorial maps, quasi-trees and chord diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct MapInput {
    /// Map file; standard input when omitted.
    path: Option<String>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct PolicyFlags {
    #[arg(long)]
    early: bool,
    #[arg(long)]
    late: bool,
}

#[derive(Args, Debug)]
#[group(multiple = false)]
struct QuasiTreeMode {
    /// Print the number of quasi-trees (default).
    #[arg(long)]
    count: bool,
    /// Print every quasi-tree, one per line.
    #[arg(long)]
    list: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormArg {
    Published,
    Decomposition,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that the input is a valid general map.
    Validate(MapInput),
    /// Print the dual map.
    Dual(MapInput),
    /// Print the genus, one line per component if disconnected.
    Genus(MapInput),
    /// Print the tour permutation of an edge set.
    Tour {
        #[arg(long)]
        set: EdgeSubset,
        #[command(flatten)]
        input: MapInput,
    },
    /// Count or list quasi-trees.
    Quasitrees {
        #[command(flatten)]
        mode: QuasiTreeMode,
        #[command(flatten)]
        input: MapInput,
    },
    /// Delete a non-bridge edge.
    Delete {
        #[arg(long)]
        edge: EdgeId,
        #[command(flatten)]
        input: MapInput,
    },
    /// Contract an edge that is not a separating loop.
    Contract {
        #[arg(long)]
        edge: EdgeId,
        #[command(flatten)]
        input: MapInput,
    },
    /// Print the chord diagram of a quasi-tree.
    Diagram {
        #[arg(long)]
        tree: EdgeSubset,
        #[command(flatten)]
        input: MapInput,
    },
    /// Print the rooted loopless map of a word with property P.
    Word2map { word: String },
    /// Print the tour word of a quasi-tree (default: the Late DFS-tree).
    Map2word {
        #[arg(long)]
        tree: Option<EdgeSubset>,
        #[command(flatten)]
        input: MapInput,
    },
    /// Run the Early or Late depth-first search.
    Dfs {
        #[command(flatten)]
        policy: PolicyFlags,
        #[command(flatten)]
        input: MapInput,
    },
    /// Test the Trémaux property of a spanning tree.
    Tremaux {
        #[arg(long)]
        tree: EdgeSubset,
        #[command(flatten)]
        input: MapInput,
    },
    /// Print the quasi-tree poset.
    Poset(MapInput),
    /// Pivot two interlaced chords of a quasi-tree diagram.
    Pivot {
        /// Two edge ids `E,F`.
        #[arg(long)]
        edges: String,
        /// Quasi-tree (default: the Late DFS-tree).
        #[arg(long)]
        tree: Option<EdgeSubset>,
        #[command(flatten)]
        input: MapInput,
    },
    /// Print every diagram reachable by pivots, one per line.
    PivotClass {
        #[arg(long)]
        tree: Option<EdgeSubset>,
        #[command(flatten)]
        input: MapInput,
    },
    /// Count rooted loopless maps, or words with Q (N′ with --planar).
    CountLoopless {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        planar: bool,
        #[arg(long)]
        unmatched: Option<usize>,
    },
    /// List words with `n` matched and `m` unmatched symbols.
    GenWords {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        m: usize,
        /// P, Q, N or Nprime.
        #[arg(long)]
        filter: Option<Property>,
    },
    /// Check the functional equation of the N′ counts.
    VerifyF {
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = FormArg::Published)]
        form: FormArg,
    },
    /// Print the two-polygon layout of a quasi-tree.
    Layout {
        #[arg(long)]
        tree: EdgeSubset,
        #[command(flatten)]
        input: MapInput,
    },
}

/// Exit code and text of one invocation.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command, reading
/// standard input from `stdin` when no map path is given.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(cli.command, stdin) {
        Ok(mut text) => {
            if !text.ends_with('\n') {
                text.push('\n');
            }
            Outcome {
                code: 0,
                stdout: text,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn read_text(input: &MapInput, stdin: &mut dyn Read) -> Result<String> {
    let mut text = String::new();
    match &input.path {
        Some(path) => {
            text =
                std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
        }
        None => {
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Error::Parse(format!("standard input: {e}")))?;
        }
    }
    Ok(text)
}

fn read_map(input: &MapInput, stdin: &mut dyn Read) -> Result<(GeneralMap, Option<usize>)> {
    let record = parse_record(&read_text(input, stdin)?)?;
    Ok((record.to_map()?, record.root))
}

fn read_rooted(input: &MapInput, stdin: &mut dyn Read) -> Result<RootedMap> {
    let (map, root) = read_map(input, stdin)?;
    match root {
        Some(r) => RootedMap::new(map, r),
        None => RootedMap::at_min_flag(map),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output types always serialize")
}

fn tree_or_late(m: &RootedMap, tree: Option<EdgeSubset>) -> EdgeSubset {
    tree.unwrap_or_else(|| dfs(m, DfsPolicy::Late).tree)
}

fn parse_pair(text: &str) -> Result<(EdgeId, EdgeId)> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let parse = |s: &str| {
        s.parse::<EdgeId>()
            .map_err(|_| Error::Parse(format!("bad edge id {s:?}")))
    };
    match parts.as_slice() {
        [e, f] => Ok((parse(e)?, parse(f)?)),
        _ => Err(Error::Parse(format!(
            "expected two edge ids E,F, got {text:?}"
        ))),
    }
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|s| s + "\n").collect()
}

fn keep_root(map: &GeneralMap, root: Option<usize>) -> Option<usize> {
    root.filter(|&r| map.contains_flag(r))
}

fn execute(command: Command, stdin: &mut dyn Read) -> Result<String> {
    match command {
        Command::Validate(input) => {
            let record = parse_record(&read_text(&input, stdin)?)?;
            match record.to_unchecked()?.validate() {
                Diagnostic::Ok => Ok("ok".into()),
                Diagnostic::Violation(v) => Err(Error::InvalidMap(v)),
            }
        }
        Command::Dual(input) => {
            let (map, root) = read_map(&input, stdin)?;
            Ok(write_map(&map.dual(), root))
        }
        Command::Genus(input) => {
            let (map, _) = read_map(&input, stdin)?;
            let parts = map.component_maps();
            if parts.len() <= 1 {
                return Ok(map.genus()?.to_string());
            }
            Ok(lines(parts.iter().enumerate().map(|(i, c)| {
                format!(
                    "component {i}: {}",
                    c.genus().expect("components are connected")
                )
            })))
        }
        Command::Tour { set, input } => {
            let (map, _) = read_map(&input, stdin)?;
            Ok(map.tour(&set)?.to_string())
        }
        Command::Quasitrees { mode, input } => {
            let (map, _) = read_map(&input, stdin)?;
            if mode.list {
                Ok(lines(map.list_quasi_trees()?.iter().map(|s| s.to_string())))
            } else {
                Ok(map.count_quasi_trees().to_string())
            }
        }
        Command::Delete { edge, input } => {
            let (map, root) = read_map(&input, stdin)?;
            let out = map.delete(edge)?;
            Ok(write_map(&out, keep_root(&out, root)))
        }
        Command::Contract { edge, input } => {
            let (map, root) = read_map(&input, stdin)?;
            let out = map.contract(edge)?;
            Ok(write_map(&out, keep_root(&out, root)))
        }
        Command::Diagram { tree, input } => {
            let m = read_rooted(&input, stdin)?;
            Ok(json(&BicoloredDiagram::of(&m, &tree)?))
        }
        Command::Word2map { word } => {
            let (w, _) = OccurrenceWord::parse(&word)?;
            let m = word_to_map(&w)?;
            Ok(write_map(m.map(), Some(m.root())))
        }
        Command::Map2word { tree, input } => {
            let m = read_rooted(&input, stdin)?;
            let w = match tree {
                Some(t) => tree_word(&m, &t)?,
                None => map_to_word(&m),
            };
            Ok(w.to_letters())
        }
        Command::Dfs { policy, input } => {
            let m = read_rooted(&input, stdin)?;
            let p = if policy.early {
                DfsPolicy::Early
            } else {
                DfsPolicy::Late
            };
            Ok(json(&dfs(&m, p)))
        }
        Command::Tremaux { tree, input } => {
            let m = read_rooted(&input, stdin)?;
            Ok(is_tremaux(&m, &tree)?.to_string())
        }
        Command::Poset(input) => {
            let m = read_rooted(&input, stdin)?;
            Ok(json(&build_poset(&m)?))
        }
        Command::Pivot { edges, tree, input } => {
            let (e, f) = parse_pair(&edges)?;
            let m = read_rooted(&input, stdin)?;
            let s = tree_or_late(&m, tree);
            Ok(json(&BicoloredDiagram::of(&m, &s)?.pivot(e, f)?))
        }
        Command::PivotClass { tree, input } => {
            let m = read_rooted(&input, stdin)?;
            let s = tree_or_late(&m, tree);
            let class = BicoloredDiagram::of(&m, &s)?.pivot_class()?;
            Ok(lines(class.iter().map(json)))
        }
        Command::CountLoopless {
            n,
            planar,
            unmatched,
        } => Ok(match (planar, unmatched) {
            (false, m) => count_g(n, m.unwrap_or(0)),
            (true, None) => count_planar_loopless(n),
            (true, Some(m)) => count_t(n, m)?,
        }
        .to_string()),
        Command::GenWords { n, m, filter } => {
            let mut out = String::new();
            let mut failure = None;
            for_each_word(n, m, |w| {
                if failure.is_some() {
                    return;
                }
                let keep = match filter {
                    None => true,
                    Some(p) => match p.holds(w) {
                        Ok(k) => k,
                        Err(e) => {
                            failure = Some(e);
                            false
                        }
                    },
                };
                if keep {
                    out.push_str(&w.to_letters());
                    out.push('\n');
                }
            })?;
            match failure {
                Some(e) => Err(e),
                None => Ok(out),
            }
        }
        Command::VerifyF { degree, form } => {
            let form = match form {
                FormArg::Published => FunctionalEquation::Published,
                FormArg::Decomposition => FunctionalEquation::Decomposition,
            };
            Ok(json(&verify_f_equation(degree, form)?))
        }
        Command::Layout { tree, input } => {
            let m = read_rooted(&input, stdin)?;
            Ok(json(&layout(&m, &tree)?))
        }
    }
}
