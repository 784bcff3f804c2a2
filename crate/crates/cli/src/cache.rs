//! On-disk enumeration cache: `DIR/{family}-{n}.jsonl`, a header line
//! `{"schema_version", "family", "n", "count"}` followed by one JSON row
//! per structure. A hit is trusted once its header and row count match.

use std::fs::{self, File};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use arith_core::BigUint;
use serde_json::{json, Value};
use tempfile::NamedTempFile;

use crate::output::Record;
use crate::{CliResult, Family};

pub const SCHEMA_VERSION: u64 = 1;

pub fn cache_path(dir: &Path, family: Family, n: usize) -> PathBuf {
    dir.join(format!("{}-{n}.jsonl", family.name()))
}

fn header(family: Family, n: usize, count: &BigUint) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "family": family.name(),
        "n": n,
        "count": count.to_string(),
    })
}

/// Opens a cached file whose header and row count match. Anything else
/// counts as a miss.
pub fn open(dir: &Path, family: Family, n: usize, count: &BigUint) -> CliResult<Option<CachedRows>> {
    let path = cache_path(dir, family, n);
    let Ok(file) = File::open(&path) else { return Ok(None) };
    let mut lines = BufReader::new(file).lines();
    let Some(first) = lines.next().transpose()? else { return Ok(None) };
    if serde_json::from_str::<Value>(&first).ok() != Some(header(family, n, count)) {
        return Ok(None);
    }
    let mut rows = 0u64;
    for line in lines {
        if !line?.trim().is_empty() {
            rows += 1;
        }
    }
    if BigUint::from(rows) != *count {
        return Ok(None);
    }
    Ok(Some(CachedRows { path }))
}

pub struct CachedRows {
    path: PathBuf,
}

impl CachedRows {
    pub fn rows(&self) -> CliResult<impl Iterator<Item = CliResult<Record>>> {
        let lines = BufReader::new(File::open(&self.path)?).lines().skip(1);
        Ok(lines.filter_map(|line| match line {
            Ok(l) if l.trim().is_empty() => None,
            Ok(l) => Some(serde_json::from_str::<Value>(&l).map_err(Into::into).and_then(|v| Record::from_json(&v))),
            Err(e) => Some(Err(e.into())),
        }))
    }
}

/// Writes a cache file next to its final location and renames it into
/// place on [`CacheWriter::commit`].
pub struct CacheWriter {
    tmp: BufWriter<NamedTempFile>,
    dest: PathBuf,
}

impl CacheWriter {
    pub fn create(dir: &Path, family: Family, n: usize, count: &BigUint) -> CliResult<Self> {
        fs::create_dir_all(dir)?;
        let mut tmp = BufWriter::new(NamedTempFile::new_in(dir)?);
        writeln!(tmp, "{}", header(family, n, count))?;
        Ok(CacheWriter { tmp, dest: cache_path(dir, family, n) })
    }

    pub fn push(&mut self, rec: &Record) -> CliResult<()> {
        writeln!(self.tmp, "{}", rec.to_json())?;
        Ok(())
    }

    pub fn commit(self) -> CliResult<()> {
        let tmp = self.tmp.into_inner().map_err(|e| e.into_error())?;
        tmp.persist(&self.dest).map_err(|e| e.error)?;
        Ok(())
    }
}
