use std::io::Write;

use arith_core::algebra::critical_group_of;
use arith_core::combinatorics::{cycle_total, path_total, CountTable};
use arith_core::json::{big_to_json, graph_from_json, structure_from_json, structure_to_string};
use arith_core::oracle::{
    brute_force_cycle, brute_force_cycle_bounded, brute_force_general, brute_force_path, brute_force_path_bounded,
    star_structures,
};
use arith_core::transforms::{rotate_structure, smooth, subdivide};
use arith_core::{cycle_enum, path_enum, ArithmeticalStructure, BigUint, Graph, Multiset};
use rayon::prelude::*;
use serde_json::Value;

use crate::cache::{self, CacheWriter};
use crate::output::{write_table, Record, RecordSink};
use crate::{
    read_stdin_json, CliError, CliResult, CountArgs, CountKey, EnumerateArgs, Family, OracleArgs, OracleTarget,
    TransformArgs,
};

const CHUNK: usize = 4096;

fn family_graph(family: Family, n: usize) -> CliResult<Graph> {
    Ok(match family {
        Family::Paths => Graph::path(n)?,
        Family::Cycles => Graph::cycle(n)?,
    })
}

fn check_position(n: usize, i: usize) -> CliResult<()> {
    if i < 1 || i > n {
        return Err(CliError::Usage(format!("--position {i} outside 1..={n}")));
    }
    Ok(())
}

pub fn count_table(a: &CountArgs) -> CliResult<CountTable> {
    let n = a.n;
    family_graph(a.family, n)?;
    let nu = n as u64;
    let t = match (a.family, a.by, a.enumerate) {
        (Family::Paths, CountKey::R1, false) => CountTable::path_by_r1(nu),
        (Family::Paths, CountKey::R1, true) => path_enum::census_by_r1(n)?,
        (Family::Paths, CountKey::Dsum, false) => CountTable::path_by_dsum(nu),
        (Family::Paths, CountKey::Dsum, true) => path_enum::census_by_dsum(n)?,
        (Family::Paths, CountKey::DEntry, false) => {
            check_position(n, a.position)?;
            CountTable::path_by_d_entry(nu)
        }
        (Family::Paths, CountKey::DEntry, true) => {
            check_position(n, a.position)?;
            path_enum::census_by_d_entry(n, a.position)?
        }
        (Family::Paths, CountKey::DOnes, false) => CountTable::path_by_d_ones_with_two_r_ones(nu),
        (Family::Paths, CountKey::DOnes, true) => path_enum::census_d_ones_given_two_r_ones(n)?,
        (Family::Cycles, CountKey::R1, false) => CountTable::cycle_by_r1(nu),
        (Family::Cycles, CountKey::R1, true) => cycle_enum::census_by_r1_cycle(n)?,
        (Family::Cycles, CountKey::Dsum, false) => {
            // sum d = 3n - r(1)
            let mut t = CountTable::new(nu);
            for (k, v) in CountTable::cycle_by_r1(nu).rows {
                t.add(3 * nu - k, v);
            }
            t
        }
        (Family::Cycles, CountKey::Dsum, true) => {
            cycle_enum::census_by(n, |s| u64::try_from(&s.d_sum()).ok())?
        }
        (Family::Cycles, CountKey::DEntry, _) => {
            check_position(n, a.position)?;
            cycle_enum::census_by_d_entry_cycle(n, a.position)?
        }
        (Family::Cycles, CountKey::DOnes, _) => {
            cycle_enum::census_by(n, |s| (s.r_ones() == 2).then_some(s.d_ones() as u64))?
        }
    };
    Ok(t.nonzero())
}

pub fn count(a: &CountArgs, out: &mut dyn Write) -> CliResult<()> {
    write_table(&count_table(a)?, a.format, out)
}

/// Maps `items` through `f` in parallel, one chunk at a time, and hands
/// the results to `sink` in input order.
fn ordered_par_map<I, T, U, F, S>(items: I, f: F, mut sink: S) -> CliResult<()>
where
    I: Iterator<Item = T>,
    T: Send,
    U: Send,
    F: Fn(T) -> CliResult<U> + Sync,
    S: FnMut(U) -> CliResult<()>,
{
    let mut items = items.peekable();
    while items.peek().is_some() {
        let chunk: Vec<T> = items.by_ref().take(CHUNK).collect();
        let mapped: Vec<CliResult<U>> = chunk.into_par_iter().map(&f).collect();
        for u in mapped {
            sink(u?)?;
        }
    }
    Ok(())
}

fn expected_count(family: Family, n: usize) -> BigUint {
    match family {
        Family::Paths => path_total(n as u64),
        Family::Cycles => cycle_total(n as u64),
    }
}

pub fn enumerate(a: &EnumerateArgs, out: &mut dyn Write) -> CliResult<()> {
    let n = a.n;
    family_graph(a.family, n)?;
    let cycles = a.family == Family::Cycles;
    let keep = |rec: &Record| a.r1.is_none_or(|k| rec.r1() == k);
    let mut sink = RecordSink::new(a.format, out, cycles)?;
    let count = expected_count(a.family, n);

    if let Some(dir) = &a.cache {
        if let Some(hit) = cache::open(dir, a.family, n, &count)? {
            for rec in hit.rows()? {
                let rec = rec?;
                if keep(&rec) {
                    sink.write(&rec)?;
                }
            }
            return sink.finish();
        }
    }

    let mut writer = match &a.cache {
        Some(dir) => Some(CacheWriter::create(dir, a.family, n, &count)?),
        None => None,
    };
    let mut index = 0u64;
    let mut emit = |rec: Record| -> CliResult<()> {
        if let Some(w) = writer.as_mut() {
            w.push(&rec)?;
        }
        if keep(&rec) {
            sink.write(&rec)?;
        }
        Ok(())
    };
    match a.family {
        Family::Paths => {
            for s in path_enum::enumerate_paths(n)? {
                index += 1;
                emit(Record::new(index, &s, None))?;
            }
        }
        Family::Cycles => {
            let sets = Multiset::all_up_to(n, n - 1);
            ordered_par_map(
                sets,
                |m| {
                    let s = arith_core::omega(&m)?;
                    Ok((m, s))
                },
                |(m, s)| {
                    index += 1;
                    emit(Record::new(index, &s, Some(&m)))
                },
            )?;
        }
    }
    sink.finish()?;
    if let Some(w) = writer {
        w.commit()?;
    }
    Ok(())
}

pub fn transform(a: &TransformArgs, input: &Value, out: &mut dyn Write) -> CliResult<()> {
    let s = structure_from_json(input)?;
    let t = match (a.subdivide, a.smooth, a.rotate) {
        (Some(i), _, _) => subdivide(&s, i)?,
        (_, Some(i), _) => smooth(&s, i)?,
        (_, _, Some(c)) => rotate_structure(&s, c)?,
        _ => return Err(CliError::Usage("one of --subdivide, --smooth, --rotate is required".into())),
    };
    writeln!(out, "{}", structure_to_string(&t))?;
    Ok(())
}

pub fn critical_group(input: &Value, out: &mut dyn Write) -> CliResult<()> {
    let s = structure_from_json(input)?;
    let g = critical_group_of(&s);
    let torsion: Vec<Value> = g.torsion.iter().map(big_to_json).collect();
    writeln!(out, "{}", Value::Array(torsion))?;
    writeln!(out, "{}", g.torsion_string())?;
    Ok(())
}

fn need_n(a: &OracleArgs) -> CliResult<usize> {
    a.n.ok_or_else(|| CliError::Usage(format!("oracle {:?} needs N", a.target).to_lowercase()))
}

pub fn oracle(a: &OracleArgs, out: &mut dyn Write) -> CliResult<()> {
    let structures: Vec<ArithmeticalStructure> = match a.target {
        OracleTarget::Paths | OracleTarget::Cycles => {
            let n = need_n(a)?;
            let paths = a.target == OracleTarget::Paths;
            let vectors = match (paths, a.bound) {
                (true, None) => brute_force_path(n)?,
                (true, Some(b)) => brute_force_path_bounded(n, b)?,
                (false, None) => brute_force_cycle(n)?,
                (false, Some(b)) => brute_force_cycle_bounded(n, b)?,
            };
            let g = family_graph(if paths { Family::Paths } else { Family::Cycles }, n)?;
            vectors
                .iter()
                .map(|r| ArithmeticalStructure::from_r_u64(g.clone(), r))
                .collect::<Result<_, _>>()?
        }
        OracleTarget::Star => star_structures(need_n(a)?, a.cap)?
            .iter()
            .map(|s| s.to_structure())
            .collect::<Result<_, _>>()?,
        OracleTarget::General => {
            let v = read_stdin_json()?;
            let g = graph_from_json(v.get("graph").unwrap_or(&v))?;
            let found = brute_force_general(&g, a.r_max, a.budget)?;
            if found.possibly_incomplete {
                eprintln!("arith: entries of r capped at {}; the list may be incomplete", a.r_max);
            }
            found
                .vectors
                .iter()
                .map(|r| ArithmeticalStructure::from_r_u64(g.clone(), r))
                .collect::<Result<_, _>>()?
        }
    };
    let mut sink = RecordSink::new(a.format, out, false)?;
    for (i, s) in structures.iter().enumerate() {
        sink.write(&Record::new(i as u64 + 1, s, None))?;
    }
    sink.finish()
}
