//! `bijection MODE`: each mode reads one JSON value and picks its direction
//! from the shape. An object with a `graph` field is a structure and is
//! encoded; anything else is decoded to a structure.
//!
//! | mode            | encoded form                                  |
//! |-----------------|-----------------------------------------------|
//! | `plan`          | `{"m": 3, "b": [1, 2]}`                       |
//! | `word`          | `{"word": [0, 1, 2]}`                         |
//! | `triangulation` | `{"size": 5, "triangles": [[0, 1, 4], ..]}`   |
//! | `multiset`      | `{"n": 6, "multiset": [1, 1, 3, 5]}`          |
//!
//! `frieze-rotate` rotates: a word goes to its image under `f`, a path
//! structure or triangulation goes to the rotated triangulation's form.

use std::io::Write;

use arith_core::bijections::{
    apply_plan, f_map, normalize_plan, omega_inverse, plan_from_structure, rotate_triangulation,
    structure_from_triangulation, triangulation_from_structure, word_decode, word_encode, BallotWord,
    SubdivisionPlan, Triangulation,
};
use arith_core::json::{structure_from_json, structure_to_json};
use arith_core::{omega, Multiset};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::{BijectionMode, CliError, CliResult};

fn field<T: DeserializeOwned>(v: &Value, name: &str) -> CliResult<T> {
    let x = v.get(name).ok_or_else(|| CliError::Failed(format!("field {name} missing")))?;
    serde_json::from_value(x.clone()).map_err(|e| CliError::Failed(format!("field {name}: {e}")))
}

fn word_json(w: &BallotWord) -> Value {
    json!({ "word": w.entries() })
}

fn triangulation_json(t: &Triangulation) -> Value {
    let triangles: Vec<&[usize; 3]> = t.triangles().collect();
    json!({ "size": t.size(), "triangles": triangles, "quiddity": t.quiddity() })
}

fn read_triangulation(v: &Value) -> CliResult<Triangulation> {
    let triangles: Vec<[usize; 3]> = field(v, "triangles")?;
    Ok(Triangulation::new(field(v, "size")?, triangles)?)
}

fn read_plan(v: &Value) -> CliResult<SubdivisionPlan> {
    let m: usize = field(v, "m")?;
    let b: Vec<usize> = field(v, "b")?;
    Ok(normalize_plan(m, &b)?)
}

pub fn convert(mode: BijectionMode, input: &Value) -> CliResult<Value> {
    let is_structure = input.get("graph").is_some();
    let out = match (mode, is_structure) {
        (BijectionMode::Plan, true) => {
            let p = plan_from_structure(&structure_from_json(input)?)?;
            json!({ "m": p.m(), "b": p.b() })
        }
        (BijectionMode::Plan, false) => {
            let p = read_plan(input)?;
            structure_to_json(&apply_plan(&p, p.n())?)
        }
        (BijectionMode::Word, true) => word_json(&word_encode(&structure_from_json(input)?)?),
        (BijectionMode::Word, false) => {
            let w = BallotWord::new(field(input, "word")?)?;
            let n = w.len() + 2;
            structure_to_json(&word_decode(&w, n)?)
        }
        (BijectionMode::Triangulation, true) => {
            triangulation_json(&triangulation_from_structure(&structure_from_json(input)?)?)
        }
        (BijectionMode::Triangulation, false) => {
            structure_to_json(&structure_from_triangulation(&read_triangulation(input)?)?)
        }
        (BijectionMode::Multiset, true) => {
            let m = omega_inverse(&structure_from_json(input)?)?;
            json!({ "n": m.n(), "multiset": m.elements() })
        }
        (BijectionMode::Multiset, false) => {
            let m = Multiset::new(field(input, "n")?, field(input, "multiset")?)?;
            structure_to_json(&omega(&m)?)
        }
        (BijectionMode::FriezeRotate, true) => {
            let t = triangulation_from_structure(&structure_from_json(input)?)?;
            structure_to_json(&structure_from_triangulation(&rotate_triangulation(&t))?)
        }
        (BijectionMode::FriezeRotate, false) if input.get("word").is_some() => {
            word_json(&f_map(&BallotWord::new(field(input, "word")?)?))
        }
        (BijectionMode::FriezeRotate, false) => triangulation_json(&rotate_triangulation(&read_triangulation(input)?)),
    };
    Ok(out)
}

pub fn run(mode: BijectionMode, input: &Value, out: &mut dyn Write) -> CliResult<()> {
    writeln!(out, "{}", convert(mode, input)?)?;
    Ok(())
}
