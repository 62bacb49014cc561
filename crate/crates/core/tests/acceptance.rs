//! Acceptance suite: one PASS or FAIL line per criterion, nonzero exit if
//! any criterion fails.

mod common;

use std::collections::{BTreeSet, HashSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use mapwords::dfs::{
    check_planar_dfs_duality, dfs, is_early, is_late, is_tremaux, is_two_connected, DfsPolicy,
};
use mapwords::diagram::for_each_bicolored_matching;
use mapwords::poset::build_poset;
use mapwords::word_enum::{
    count_g, count_planar_loopless, for_each_word, has_n, has_p, verify_f_equation,
    FunctionalEquation,
};
use mapwords::{BicoloredDiagram, FlagSet, Permutation};
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const PUBLISHED_G: [&str; 20] = [
    "1",
    "3",
    "14",
    "87",
    "672",
    "6204",
    "66719",
    "820395",
    "11370212",
    "175583880",
    "2992513416",
    "55838871492",
    "1132934744671",
    "24846387327825",
    "585953052416226",
    "14791975514747882",
    "398109420366969728",
    "11382340640393570304",
    "344600158836813725696",
    "11015256001205535506432",
];

const PLANAR_LOOPLESS: [u64; 7] = [1, 3, 13, 68, 399, 2530, 16965];

fn within(start: Instant, limit: Duration, detail: String) -> Outcome {
    let took = start.elapsed();
    if took > limit {
        Err(format!("{detail}; took {took:.2?}, limit {limit:?}"))
    } else {
        Ok(detail)
    }
}

fn recurrence_regression() -> Outcome {
    let start = Instant::now();
    let mismatches: Vec<String> = PUBLISHED_G
        .iter()
        .enumerate()
        .filter_map(|(k, want)| {
            let got = count_g(k + 1, 0).to_string();
            (got != *want).then(|| format!("n={}: computed {got}, listed {want}", k + 1))
        })
        .collect();
    if !mismatches.is_empty() {
        return Err(format!(
            "{} of 20 values differ: {}",
            mismatches.len(),
            mismatches.join("; ")
        ));
    }
    within(
        start,
        Duration::from_secs(5),
        "all 20 values reproduced".into(),
    )
}

fn p_words_oracle() -> Outcome {
    let start = Instant::now();
    let mut counts = Vec::new();
    for n in 1..=7 {
        let mut count = 0u64;
        let mut total = 0u64;
        let mut failure = None;
        for_each_word(n, 0, |w| {
            total += 1;
            match has_p(w) {
                Ok(true) => count += 1,
                Ok(false) => {}
                Err(e) => failure = Some(e.to_string()),
            }
        })
        .map_err(|e| e.to_string())?;
        if let Some(e) = failure {
            return Err(e);
        }
        if BigUint::from(count) != count_g(n, 0) {
            return Err(format!(
                "n={n}: {count} P-words, recurrence {}",
                count_g(n, 0)
            ));
        }
        if n == 7 && total != 135_135 {
            return Err(format!("n=7 enumerated {total} words"));
        }
        counts.push(count.to_string());
    }
    within(
        start,
        Duration::from_secs(120),
        format!("P-word counts {}", counts.join(", ")),
    )
}

fn planar_formula() -> Outcome {
    let mut counts = Vec::new();
    for n in 1..=7 {
        let mut count = 0u64;
        for_each_word(n, 0, |w| {
            if has_n(w).unwrap_or(false) {
                count += 1;
            }
        })
        .map_err(|e| e.to_string())?;
        let formula = count_planar_loopless(n);
        if BigUint::from(count) != formula || count != PLANAR_LOOPLESS[n - 1] {
            return Err(format!("n={n}: {count} N-words, formula {formula}"));
        }
        counts.push(count.to_string());
    }
    Ok(format!("N-word counts {}", counts.join(", ")))
}

fn bijection_totals() -> Outcome {
    let mut totals = Vec::new();
    for m in 1..=4 {
        let mut pairs = BTreeSet::new();
        let mut failure = None;
        for_each_bicolored_matching(m, |d| {
            let result = d.reconstruct().and_then(|(map, s)| {
                let back = BicoloredDiagram::of(&map, &s)?;
                let (canon, rename) = map.canonical_form();
                let s: Vec<usize> = s
                    .iter()
                    .map(|e| {
                        let [a, b] = map.map().edge_flags(e);
                        rename[a].min(rename[b])
                    })
                    .collect();
                Ok((back == d, canon.canonical_code(), s))
            });
            match result {
                Ok((true, code, s)) => {
                    pairs.insert((code, s));
                }
                Ok((false, ..)) => failure = Some("round trip changed a diagram".to_string()),
                Err(e) => failure = Some(e.to_string()),
            }
        });
        if let Some(f) = failure {
            return Err(format!("m={m}: {f}"));
        }
        let expected: usize = (m + 1..=2 * m).product();
        if pairs.len() != expected {
            return Err(format!("m={m}: {} pairs, expected {expected}", pairs.len()));
        }
        totals.push(pairs.len().to_string());
    }
    Ok(format!(
        "pairs {} for m=1..4; m=2 gives {} (the figure caption says 8)",
        totals.join(", "),
        totals[1]
    ))
}

fn deletion_contraction() -> Outcome {
    let mut r = rng(0xC5);
    for i in 0..500 {
        let m = r.gen_range(1..=6);
        let map = random_map(&mut r, m);
        let listed = map
            .map()
            .list_quasi_trees()
            .map_err(|e| e.to_string())?
            .len();
        let counted = map.map().count_quasi_trees();
        if counted != BigUint::from(listed) {
            return Err(format!(
                "map {i}: recursion {counted}, enumeration {listed}"
            ));
        }
    }
    Ok("500 random maps agree".into())
}

fn exchange() -> Outcome {
    let mut maps = 0;
    let mut pairs = 0u64;
    for m in 1..=5 {
        for map in rooted_maps(m) {
            maps += 1;
            let quasi: Vec<u32> = map
                .map()
                .list_quasi_trees()
                .map_err(|e| e.to_string())?
                .iter()
                .map(|s| to_mask(map.map(), s))
                .collect();
            let set: HashSet<u32> = quasi.iter().copied().collect();
            for &a in &quasi {
                for &b in quasi.iter().filter(|&&b| b != a) {
                    pairs += 1;
                    let diff = a ^ b;
                    for e in (0..m).filter(|&e| diff >> e & 1 == 1) {
                        let ok = (0..m)
                            .filter(|&f| f != e && diff >> f & 1 == 1)
                            .any(|f| set.contains(&(a ^ 1 << e ^ 1 << f)));
                        if !ok {
                            return Err(format!("violation on a map with {m} edges"));
                        }
                    }
                }
            }
        }
    }
    Ok(format!(
        "{maps} rooted maps, {pairs} ordered pairs, zero violations"
    ))
}

fn pivot_semantics() -> Outcome {
    let mut r = rng(0x71);
    let mut checked = 0;
    while checked < 1000 {
        let m = r.gen_range(2..=8);
        let d = random_diagram(&mut r, m);
        let pairs = d.interlacement_graph().edges();
        let Some(&(e, f)) = pairs.choose(&mut r) else {
            continue;
        };
        let (map, s) = d.reconstruct().map_err(|e| e.to_string())?;
        let pivoted = d.pivot(e, f).map_err(|e| e.to_string())?;
        let direct = BicoloredDiagram::of(&map, &s.toggled(e, f)).map_err(|e| e.to_string())?;
        if pivoted != direct {
            return Err(format!("pivot {e},{f} differs from the exchanged diagram"));
        }
        checked += 1;
    }
    Ok("1000 triples equal".into())
}

fn dfs_laws() -> Outcome {
    let mut maps = 0;
    let mut planar_instances = 0;
    for m in 1..=5 {
        for map in rooted_maps(m) {
            maps += 1;
            let early = dfs(&map, DfsPolicy::Early).tree;
            let late = dfs(&map, DfsPolicy::Late).tree;
            let ok = is_tremaux(&map, &early).map_err(|e| e.to_string())?
                && is_tremaux(&map, &late).map_err(|e| e.to_string())?
                && is_early(&map, &early).map_err(|e| e.to_string())?
                && is_late(&map, &late).map_err(|e| e.to_string())?;
            if !ok {
                return Err(format!("pattern law fails on a map with {m} edges"));
            }
            if map.map().genus().map_err(|e| e.to_string())? != 0 || !is_two_connected(map.map()) {
                continue;
            }
            for t in spanning_trees_oracle(map.map()) {
                if !is_tremaux(&map, &t).map_err(|e| e.to_string())? {
                    continue;
                }
                planar_instances += 1;
                let report = check_planar_dfs_duality(&map, &t).map_err(|e| e.to_string())?;
                if !report.dichotomy_holds {
                    return Err(format!("duality dichotomy fails: {report:?}"));
                }
            }
        }
    }
    Ok(format!(
        "{maps} rooted maps; dichotomy on {planar_instances} planar 2-connected DFS instances"
    ))
}

fn poset_extremes() -> Outcome {
    let mut maps = 0;
    for m in 1..=4 {
        for map in rooted_maps(m) {
            maps += 1;
            let p = build_poset(&map).map_err(|e| e.to_string())?;
            let late = dfs(&map, DfsPolicy::Late).tree;
            let upper = dfs(&map.dual(), DfsPolicy::Late)
                .tree
                .complement_in(map.map());
            if p.minimum() != Some(&late) || p.maximum() != Some(&upper) {
                return Err(format!("extremes differ on a map with {m} edges"));
            }
        }
    }
    Ok(format!("{maps} rooted maps"))
}

fn functional_equation() -> Outcome {
    let report = verify_f_equation(6, FunctionalEquation::Published).map_err(|e| e.to_string())?;
    for &(n, m, ref v) in &report.t {
        if m == 0 && n >= 1 && *v != PLANAR_LOOPLESS[n - 1].to_string() {
            return Err(format!("T({n},0) = {v}"));
        }
    }
    if report.holds {
        return Ok("equation holds to total degree 6".into());
    }
    let mismatch = report
        .first_mismatch
        .map(|x| {
            format!(
                "first mismatch at x^{} y^{}: lhs {}, rhs {}",
                x.n, x.m, x.lhs, x.rhs
            )
        })
        .unwrap_or_default();
    let alt = verify_f_equation(6, FunctionalEquation::Decomposition).map_err(|e| e.to_string())?;
    Err(format!(
        "T(n,0) agrees; {mismatch}; the form derived from the decomposition {}",
        if alt.holds { "holds" } else { "also fails" }
    ))
}

fn permutation_law() -> Outcome {
    let mut r = rng(0x21);
    for i in 0..10_000 {
        let n = r.gen_range(1..=12);
        let mut a: Vec<usize> = (0..n).collect();
        let mut b = a.clone();
        a.shuffle(&mut r);
        b.shuffle(&mut r);
        let sigma = Permutation::from_images(a).map_err(|e| e.to_string())?;
        let mu = Permutation::from_images(b).map_err(|e| e.to_string())?;
        let sub = FlagSet::from_flags(n, (0..n).filter(|_| r.gen_bool(0.5)));
        let mu_cut = mu.cut_out(&sub);
        let lhs = sigma
            .cut_out(&sub)
            .compose(&mu_cut)
            .map_err(|e| e.to_string())?;
        let rhs = sigma
            .compose(&mu_cut)
            .map_err(|e| e.to_string())?
            .cut_out(&sub);
        let lhs_r = sigma
            .restrict(&sub)
            .compose(&mu.restrict(&sub))
            .map_err(|e| e.to_string())?;
        let rhs_r = sigma
            .compose(&mu_cut)
            .map_err(|e| e.to_string())?
            .restrict(&sub);
        if lhs != rhs || lhs_r != rhs_r {
            return Err(format!("triple {i} violates the identity"));
        }
    }
    Ok("10000 triples".into())
}

fn planar_spanning_trees() -> Outcome {
    let mut r = rng(0x12);
    for i in 0..200 {
        let m = r.gen_range(1..=10);
        let (map, _) = random_planar_pair(&mut r, m);
        if map.map().genus().map_err(|e| e.to_string())? != 0 {
            return Err(format!("map {i} is not planar"));
        }
        let trees = spanning_trees_oracle(map.map()).len();
        let quasi = map.map().count_quasi_trees();
        if quasi != BigUint::from(trees) {
            return Err(format!(
                "map {i}: {quasi} quasi-trees, {trees} spanning trees"
            ));
        }
    }
    Ok("200 random planar maps agree".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("recurrence regression", recurrence_regression),
        ("P-word oracle", p_words_oracle),
        ("planar closed formula", planar_formula),
        ("bijection totals", bijection_totals),
        ("deletion-contraction vs enumeration", deletion_contraction),
        ("exchange property", exchange),
        ("pivot semantics", pivot_semantics),
        ("DFS laws", dfs_laws),
        ("poset extremes", poset_extremes),
        ("functional equation", functional_equation),
        ("permutation law", permutation_law),
        (
            "planar quasi-trees are spanning trees",
            planar_spanning_trees,
        ),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let (tag, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("{tag} {:>2} {name} ({took:.2?}): {detail}", i + 1);
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
