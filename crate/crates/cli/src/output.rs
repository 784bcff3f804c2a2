//! Row schemas shared by `enumerate`, `oracle` and `count`.
//!
//! A structure row has the fields `index`, `d`, `r`, `r1`, `dsum` and, for
//! cycles, `multiset`. JSON rows also carry `graph`. In CSV, vectors are
//! joined with `;` and the multiset with `,`.

use std::io::Write;

use arith_core::combinatorics::CountTable;
use arith_core::json::{big_from_json, big_to_json, graph_from_json, graph_to_json, vec_from_json, vec_to_json};
use arith_core::{ArithmeticalStructure, BigUint, Graph, GraphKind, Multiset};
use num_traits::One;
use serde_json::{json, Map, Value};

use crate::{CliError, CliResult, Format};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub index: u64,
    pub graph: Graph,
    pub d: Vec<BigUint>,
    pub r: Vec<BigUint>,
    pub multiset: Option<Vec<usize>>,
}

fn join(v: &[BigUint]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(";")
}

fn split(s: &str, sep: char, what: &str) -> CliResult<Vec<BigUint>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(sep)
        .map(|x| x.trim().parse().map_err(|_| CliError::Failed(format!("bad {what} entry {x:?}"))))
        .collect()
}

impl Record {
    pub fn new(index: u64, s: &ArithmeticalStructure, multiset: Option<&Multiset>) -> Self {
        Record {
            index,
            graph: s.graph().clone(),
            d: s.d().to_vec(),
            r: s.r().to_vec(),
            multiset: multiset.map(|m| m.elements().to_vec()),
        }
    }

    pub fn r1(&self) -> usize {
        self.r.iter().filter(|x| x.is_one()).count()
    }

    pub fn dsum(&self) -> BigUint {
        self.d.iter().sum()
    }

    /// Validates the row as a structure.
    pub fn structure(&self) -> CliResult<ArithmeticalStructure> {
        Ok(ArithmeticalStructure::validate(self.graph.clone(), self.d.clone(), self.r.clone())?)
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("index".into(), json!(self.index));
        m.insert("graph".into(), graph_to_json(&self.graph));
        m.insert("d".into(), vec_to_json(&self.d));
        m.insert("r".into(), vec_to_json(&self.r));
        m.insert("r1".into(), json!(self.r1()));
        m.insert("dsum".into(), big_to_json(&self.dsum()));
        if let Some(ms) = &self.multiset {
            m.insert("multiset".into(), json!(ms));
        }
        Value::Object(m)
    }

    /// Reads a JSON row without checking the structure equations.
    pub fn from_json(v: &Value) -> CliResult<Self> {
        let index = v.get("index").and_then(Value::as_u64).ok_or_else(|| missing("index"))?;
        let graph = graph_from_json(v.get("graph").ok_or_else(|| missing("graph"))?)?;
        let d = vec_from_json(v.get("d").ok_or_else(|| missing("d"))?, "d")?;
        let r = vec_from_json(v.get("r").ok_or_else(|| missing("r"))?, "r")?;
        let multiset = match v.get("multiset") {
            None => None,
            Some(m) => Some(serde_json::from_value(m.clone())?),
        };
        Ok(Record { index, graph, d, r, multiset })
    }

    pub fn csv_header(with_multiset: bool) -> Vec<&'static str> {
        let mut h = vec!["index", "d", "r", "r1", "dsum"];
        if with_multiset {
            h.push("multiset");
        }
        h
    }

    pub fn to_csv(&self) -> Vec<String> {
        let mut row = vec![
            self.index.to_string(),
            join(&self.d),
            join(&self.r),
            self.r1().to_string(),
            self.dsum().to_string(),
        ];
        if let Some(ms) = &self.multiset {
            row.push(ms.iter().map(ToString::to_string).collect::<Vec<_>>().join(","));
        }
        row
    }

    /// Reads a CSV row. The graph is a path or cycle on `len(d)` vertices.
    pub fn from_csv(kind: GraphKind, row: &csv::StringRecord) -> CliResult<Self> {
        let field = |i: usize, name: &str| row.get(i).ok_or_else(|| missing(name));
        let index = field(0, "index")?
            .parse()
            .map_err(|_| CliError::Failed(format!("bad index {:?}", &row[0])))?;
        let d = split(field(1, "d")?, ';', "d")?;
        let r = split(field(2, "r")?, ';', "r")?;
        let graph = Graph::make(kind, d.len())?;
        let multiset = match row.get(5) {
            None => None,
            Some(s) => Some(
                split(s, ',', "multiset")?
                    .into_iter()
                    .map(|x| usize::try_from(&x).map_err(|_| CliError::Failed("multiset entry too large".into())))
                    .collect::<CliResult<Vec<usize>>>()?,
            ),
        };
        let rec = Record { index, graph, d, r, multiset };
        if field(3, "r1")? != rec.r1().to_string() || field(4, "dsum")? != rec.dsum().to_string() {
            return Err(CliError::Failed(format!("row {index}: r1 or dsum disagrees with d and r")));
        }
        Ok(rec)
    }
}

fn missing(name: &str) -> CliError {
    CliError::Failed(format!("field {name} missing"))
}

/// Writes structure rows in either format.
pub enum RecordSink<'a> {
    Json(&'a mut dyn Write),
    Csv(csv::Writer<&'a mut dyn Write>),
}

impl<'a> RecordSink<'a> {
    pub fn new(format: Format, out: &'a mut dyn Write, with_multiset: bool) -> CliResult<Self> {
        Ok(match format {
            Format::Json => RecordSink::Json(out),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(Record::csv_header(with_multiset))?;
                RecordSink::Csv(w)
            }
        })
    }

    pub fn write(&mut self, rec: &Record) -> CliResult<()> {
        match self {
            RecordSink::Json(out) => writeln!(out, "{}", rec.to_json())?,
            RecordSink::Csv(w) => w.write_record(rec.to_csv())?,
        }
        Ok(())
    }

    pub fn finish(self) -> CliResult<()> {
        if let RecordSink::Csv(mut w) = self {
            w.flush()?;
        }
        Ok(())
    }
}

pub fn write_table(t: &CountTable, format: Format, out: &mut dyn Write) -> CliResult<()> {
    match format {
        Format::Json => {
            for (k, v) in &t.rows {
                writeln!(out, "{}", json!({"n": t.n, "key": k, "count": big_to_json(v)}))?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "key", "count"])?;
            for (k, v) in &t.rows {
                w.write_record([t.n.to_string(), k.to_string(), v.to_string()])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// Reads a table written by [`write_table`] in JSON form.
pub fn table_from_json_lines(text: &str) -> CliResult<CountTable> {
    let mut t = CountTable::default();
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let v: Value = serde_json::from_str(line)?;
        t.n = v["n"].as_u64().ok_or_else(|| missing("n"))?;
        let k = v["key"].as_u64().ok_or_else(|| missing("key"))?;
        t.add(k, big_from_json(&v["count"])?);
    }
    Ok(t)
}
