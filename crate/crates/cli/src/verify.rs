//! `verify`: named theorem checks, one JSON line each:
//! `{"check": NAME, "status": "pass" | "fail", "detail": TEXT}`.
//!
//! Path checks run up to `--paths`, cycle checks up to `--cycles`. Checks
//! with a heavier inner loop cap their range further (see each check).
//! Output is deterministic for fixed limits.

use std::collections::{BTreeSet, HashSet};
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use arith_core::algebra::critical_group_of;
use arith_core::bijections::{
    apply_plan, f_map, f_map_inductive, omega_inverse, plan_from_structure, rotate_triangulation,
    structure_from_triangulation, triangulation_from_structure, word_decode, word_encode, BallotWord,
    Triangulation,
};
use arith_core::combinatorics::{aigner_schulze_count, catalan, cycle_total, CountTable};
use arith_core::json::structure_from_json;
use arith_core::oracle::{brute_force_cycle, brute_force_path};
use arith_core::transforms::{rotate_structure, subdivide};
use arith_core::{cycle_enum, omega, path_enum, ArithmeticalStructure, BigUint, Multiset};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use crate::{CliError, CliResult, VerifyArgs};

type Outcome = std::result::Result<String, String>;

#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub paths: usize,
    pub cycles: usize,
}

type Check = fn(&Limits) -> Outcome;

pub const CHECKS: &[(&str, Check)] = &[
    ("path-totals", path_totals),
    ("path-refinement", path_refinement),
    ("d-entry", d_entry),
    ("d-sum", d_sum),
    ("cycle-totals", cycle_totals),
    ("critical-group", critical_groups),
    ("identities", identities),
    ("oracle", oracle),
    ("bijections", bijections),
    ("f-map", fmap),
    ("literals", literals),
    ("aigner-schulze", aigner_schulze),
    ("subdivision-invariance", subdivision_invariance),
];

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn paths(n: usize) -> std::result::Result<Vec<ArithmeticalStructure>, String> {
    Ok(path_enum::enumerate_paths(n).map_err(err)?.collect())
}

fn cycles(n: usize) -> std::result::Result<Vec<ArithmeticalStructure>, String> {
    Ok(cycle_enum::enumerate_cycles(n).map_err(err)?.collect())
}

fn range(lo: usize, hi: usize) -> String {
    if hi < lo {
        "empty range".into()
    } else {
        format!("n={lo}..{hi}")
    }
}

fn same_table(what: &str, got: CountTable, want: CountTable) -> Result<(), String> {
    let (got, want) = (got.nonzero(), want.nonzero());
    ensure!(got == want, "{what} at n={}: got {:?}, expected {:?}", want.n, got.rows, want.rows);
    Ok(())
}

fn path_totals(l: &Limits) -> Outcome {
    for n in 2..=l.paths {
        let count = path_enum::enumerate_paths(n).map_err(err)?.count();
        ensure!(BigUint::from(count) == catalan(n as u64 - 1), "n={n}: {count} structures");
    }
    Ok(range(2, l.paths))
}

fn path_refinement(l: &Limits) -> Outcome {
    for n in 2..=l.paths {
        same_table("r(1) census", path_enum::census_by_r1(n).map_err(err)?, CountTable::path_by_r1(n as u64))?;
    }
    Ok(range(2, l.paths))
}

/// Every position, up to n = 10.
fn d_entry(l: &Limits) -> Outcome {
    let hi = l.paths.min(10);
    for n in 2..=hi {
        for i in 1..=n {
            let got = path_enum::census_by_d_entry(n, i).map_err(err)?;
            same_table(&format!("d_{i} census"), got, CountTable::path_by_d_entry(n as u64))?;
        }
    }
    Ok(range(2, hi))
}

fn d_sum(l: &Limits) -> Outcome {
    for n in 2..=l.paths {
        let got = path_enum::census_by_dsum(n).map_err(err)?;
        let (lo, hi) = (2 * n as u64 - 2, 3 * n as u64 - 4);
        let keys: Vec<u64> = got.clone().nonzero().rows.keys().copied().collect();
        let support: Vec<u64> = (lo..=hi.max(lo)).collect();
        ensure!(keys == support, "n={n}: support {keys:?}");
        same_table("d-sum census", got, CountTable::path_by_dsum(n as u64))?;
    }
    Ok(range(2, l.paths))
}

fn cycle_totals(l: &Limits) -> Outcome {
    for n in 2..=l.cycles {
        let all = cycles(n)?;
        ensure!(BigUint::from(all.len()) == cycle_total(n as u64), "n={n}: {} structures", all.len());
        let distinct: HashSet<&ArithmeticalStructure> = all.iter().collect();
        ensure!(distinct.len() == all.len(), "n={n}: duplicates");
        same_table("r(1) census", cycle_enum::census_by_r1_cycle(n).map_err(err)?, CountTable::cycle_by_r1(n as u64))?;
    }
    Ok(range(2, l.cycles))
}

/// Paths up to 10, cycles up to 9.
fn critical_groups(l: &Limits) -> Outcome {
    let (hp, hc) = (l.paths.min(10), l.cycles.min(9));
    for n in 2..=hp {
        for s in paths(n)? {
            let g = critical_group_of(&s);
            ensure!(g.torsion.is_empty(), "P_{n}, r={:?}: torsion {}", s.r_u64(), g.torsion_string());
        }
    }
    for n in 2..=hc {
        for s in cycles(n)? {
            let g = critical_group_of(&s);
            let k = s.r_ones();
            let want: Vec<BigUint> = if k == 1 { vec![] } else { vec![BigUint::from(k)] };
            ensure!(g.torsion == want, "C_{n}, r={:?}: torsion {}", s.r_u64(), g.torsion_string());
        }
    }
    Ok(format!("paths {}, cycles {}", range(2, hp), range(2, hc)))
}

fn identities(l: &Limits) -> Outcome {
    for n in 2..=l.paths {
        for s in paths(n)? {
            ensure!(s.d_sum() == BigUint::from(3 * n - 2 - s.r_ones()), "P_{n}, r={:?}", s.r_u64());
        }
    }
    for n in 2..=l.cycles {
        for s in cycles(n)? {
            ensure!(s.d_sum() == BigUint::from(3 * n - s.r_ones()), "C_{n}, r={:?}", s.r_u64());
        }
    }
    Ok(format!("paths {}, cycles {}", range(2, l.paths), range(2, l.cycles)))
}

fn r_set(list: &[ArithmeticalStructure]) -> BTreeSet<Vec<u64>> {
    list.iter().map(|s| s.r_u64().expect("small")).collect()
}

/// Paths up to 10, cycles up to 8.
fn oracle(l: &Limits) -> Outcome {
    let (hp, hc) = (l.paths.min(10), l.cycles.min(8));
    for n in 2..=hp {
        ensure!(brute_force_path(n).map_err(err)? == r_set(&paths(n)?), "P_{n}: sets differ");
    }
    for n in 2..=hc {
        ensure!(brute_force_cycle(n).map_err(err)? == r_set(&cycles(n)?), "C_{n}: sets differ");
    }
    Ok(format!("paths {}, cycles {}", range(2, hp), range(2, hc)))
}

/// Plans and words up to 10, omega up to 8, equivariance up to 7.
fn bijections(l: &Limits) -> Outcome {
    let hp = l.paths.min(10);
    for n in 2..=hp {
        for s in paths(n)? {
            let plan = plan_from_structure(&s).map_err(err)?;
            ensure!(apply_plan(&plan, n).map_err(err)? == s, "plan round trip fails at r={:?}", s.r_u64());
            let w = word_encode(&s).map_err(err)?;
            ensure!(word_decode(&w, n).map_err(err)? == s, "word round trip fails at r={:?}", s.r_u64());
        }
    }
    let hc = l.cycles.min(8);
    for n in 2..=hc {
        for m in Multiset::all_up_to(n, n - 1) {
            let s = omega(&m).map_err(err)?;
            ensure!(omega_inverse(&s).map_err(err)? == m, "omega round trip fails at {m}");
            if n <= 7 {
                for t in 0..n as i64 {
                    let lhs = omega(&m.rotated(t)).map_err(err)?;
                    let rhs = rotate_structure(&s, t).map_err(err)?;
                    ensure!(lhs == rhs, "equivariance fails at {m}, t={t}");
                }
            }
        }
    }
    Ok(format!("plans and words {}, omega {}", range(2, hp), range(2, hc)))
}

/// Words of length up to 8.
fn fmap(l: &Limits) -> Outcome {
    let hi = l.paths.saturating_sub(2).min(8);
    for k in 0..=hi {
        let words: Vec<BallotWord> = BallotWord::all(k).collect();
        ensure!(BigUint::from(words.len()) == catalan(k as u64 + 1), "length {k}: {} words", words.len());
        let mut images = HashSet::new();
        for w in &words {
            let f = f_map(w);
            ensure!(f == f_map_inductive(w), "definitions differ at {w}");
            images.insert(f);
            let mut x = w.clone();
            for _ in 0..k + 3 {
                x = f_map(&x);
            }
            ensure!(x == *w, "order is not {} at {w}", k + 3);
        }
        ensure!(images.len() == words.len(), "length {k}: not injective");
        for s in paths(k + 2)? {
            let t = triangulation_from_structure(&s).map_err(err)?;
            let rotated = structure_from_triangulation(&rotate_triangulation(&t)).map_err(err)?;
            let lhs = word_encode(&rotated).map_err(err)?;
            ensure!(lhs == f_map(&word_encode(&s).map_err(err)?), "conjugation fails at r={:?}", s.r_u64());
        }
    }
    Ok(format!("word lengths 0..{hi}"))
}

const F3_TABLE: [([usize; 3], [usize; 3]); 14] = [
    ([1, 1, 1], [0, 2, 2]),
    ([0, 1, 1], [1, 2, 2]),
    ([0, 0, 1], [1, 1, 2]),
    ([1, 1, 2], [0, 2, 3]),
    ([0, 1, 2], [1, 2, 3]),
    ([0, 0, 2], [1, 1, 3]),
    ([1, 1, 3], [0, 0, 2]),
    ([0, 1, 3], [0, 1, 2]),
    ([0, 0, 3], [0, 1, 1]),
    ([1, 2, 2], [0, 0, 3]),
    ([0, 2, 2], [0, 1, 3]),
    ([0, 0, 0], [1, 1, 1]),
    ([1, 2, 3], [0, 0, 0]),
    ([0, 2, 3], [0, 0, 1]),
];

fn literals(_: &Limits) -> Outcome {
    let mut c2: Vec<Vec<u64>> = cycles(2)?.iter().map(|s| s.r_u64().expect("small")).collect();
    c2.sort();
    ensure!(c2 == [vec![1, 1], vec![1, 2], vec![2, 1]], "C_2 structures {c2:?}");

    let plan = arith_core::SubdivisionPlan::new(2, vec![1, 2, 2]).map_err(err)?;
    let a5 = apply_plan(&plan, 5).map_err(err)?;
    ensure!(a5.d_u64() == [2, 3, 1, 2, 3] && a5.r_u64() == Some(vec![1, 2, 5, 3, 1]), "A_5(1,2,2) = {a5:?}");

    for (from, to) in F3_TABLE {
        let w = BallotWord::new(from.to_vec()).map_err(err)?;
        ensure!(f_map(&w).entries() == to, "f_3{from:?} = {}", f_map(&w));
    }

    for (ms, want) in [([1, 1, 3, 5], [3, 2, 3, 1, 2, 1]), ([1, 1, 4, 4], [3, 2, 1, 3, 2, 1])] {
        let m = Multiset::new(6, ms.to_vec()).map_err(err)?;
        let r = omega(&m).map_err(err)?.r_u64();
        ensure!(r.as_deref() == Some(&want[..]), "omega{ms:?} = {r:?}");
    }

    let pentagon = Triangulation::new(5, [[0, 1, 4], [1, 3, 4], [1, 2, 3]]).map_err(err)?;
    ensure!(pentagon.quiddity() == [1, 3, 1, 2, 2], "pentagon quiddity {:?}", pentagon.quiddity());
    let hexagon = Triangulation::new(6, [[0, 1, 5], [1, 4, 5], [1, 2, 4], [2, 3, 4]]).map_err(err)?;
    ensure!(hexagon.quiddity() == [1, 3, 2, 1, 3, 2], "hexagon quiddity {:?}", hexagon.quiddity());
    Ok("C_2, A_5(1,2,2), f_3 table, omega examples, quiddities".into())
}

/// Structures on P_{n+2} with r(1) = 2, counted by d(1), for n up to 10.
fn aigner_schulze(l: &Limits) -> Outcome {
    let hi = l.paths.saturating_sub(2).min(10);
    for n in 1..=hi {
        let got = path_enum::census_d_ones_given_two_r_ones(n + 2).map_err(err)?;
        for k in 0..=n as u64 + 2 {
            let want = if k == 0 { BigUint::default() } else { aigner_schulze_count(n as u64, k) };
            ensure!(got.get(k) == want, "n={n}, d(1)={k}: {} vs {want}", got.get(k));
        }
    }
    Ok(range(1, hi))
}

/// 100 seeded samples per family and n, up to 9.
fn subdivision_invariance(l: &Limits) -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut samples = 0;
    let (hp, hc) = (l.paths.min(9), l.cycles.min(9));
    for (list, lo) in (2..=hp).map(|n| (paths(n), 2)).chain((2..=hc).map(|n| (cycles(n), 1))) {
        let list = list?;
        for _ in 0..100 {
            let s = &list[rng.gen_range(0..list.len())];
            let i = rng.gen_range(lo..=s.n());
            let t = subdivide(s, i).map_err(err)?;
            let (a, b) = (critical_group_of(s), critical_group_of(&t));
            ensure!(a.torsion == b.torsion, "r={:?} at {i}: {} vs {}", s.r_u64(), a.torsion_string(), b.torsion_string());
            samples += 1;
        }
    }
    Ok(format!("{samples} samples"))
}

/// Validates every line of a JSON-lines file as a structure.
pub fn check_structures(path: &Path) -> Outcome {
    let file = File::open(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut count = 0;
    for (k, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(err)?;
        if line.trim().is_empty() {
            continue;
        }
        let v: Value = serde_json::from_str(&line).map_err(|e| format!("line {}: {e}", k + 1))?;
        structure_from_json(&v).map_err(|e| format!("line {}: {e}", k + 1))?;
        count += 1;
    }
    Ok(format!("{count} structures valid"))
}

pub fn run(a: &VerifyArgs, out: &mut dyn Write) -> CliResult<()> {
    let names: Vec<&str> = CHECKS.iter().map(|c| c.0).chain(["structures"]).collect();
    if let Some(only) = &a.only {
        if !names.contains(&only.as_str()) {
            return Err(CliError::Usage(format!("unknown check {only:?}; known: {}", names.join(", "))));
        }
        if only == "structures" && a.structures.is_none() {
            return Err(CliError::Usage("--only structures needs --structures FILE".into()));
        }
    }
    let selected = |name: &str| a.only.as_deref().is_none_or(|o| o == name);
    let limits = Limits { paths: a.paths, cycles: a.cycles };
    let mut failed = 0;
    let mut report = |name: &str, outcome: Outcome| -> CliResult<()> {
        let (status, detail) = match outcome {
            Ok(d) => ("pass", d),
            Err(d) => {
                failed += 1;
                ("fail", d)
            }
        };
        writeln!(out, "{}", json!({"check": name, "status": status, "detail": detail}))?;
        Ok(())
    };
    for (name, check) in CHECKS {
        if selected(name) {
            report(name, check(&limits))?;
        }
    }
    if let Some(path) = &a.structures {
        if selected("structures") {
            report("structures", check_structures(path))?;
        }
    }
    if failed > 0 {
        return Err(CliError::Failed(format!("{failed} check(s) failed")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use arith_core::Graph;
    use num_traits::One;

    #[test]
    fn small_limits_pass() {
        let l = Limits { paths: 6, cycles: 5 };
        for (name, check) in CHECKS {
            assert!(check(&l).is_ok(), "{name}: {:?}", check(&l));
        }
    }

    #[test]
    fn corrupted_row_is_named() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("s.jsonl");
        std::fs::write(
            &p,
            "{\"graph\":{\"kind\":\"path\",\"n\":3},\"d\":[2,1,2],\"r\":[1,2,1]}\n\
             {\"graph\":{\"kind\":\"path\",\"n\":3},\"d\":[2,2,2],\"r\":[1,2,1]}\n",
        )
        .unwrap();
        let e = check_structures(&p).unwrap_err();
        assert!(e.starts_with("line 2:") && e.contains("row"), "{e}");
    }

    #[test]
    fn r1_one_means_trivial() {
        let s = ArithmeticalStructure::from_r_u64(Graph::cycle(2).unwrap(), &[2, 1]).unwrap();
        assert!(critical_group_of(&s).torsion.is_empty());
        assert!(s.r()[1].is_one());
    }
}
