//! JSON form of a structure:
//!
//! ```json
//! {"graph": {"kind": "path", "n": 4}, "d": [1, 3, 1, 2], "r": [1, 1, 2, 1]}
//! ```
//!
//! `n` is the vertex count for every kind. General graphs also carry
//! `"adj"`, the adjacency matrix. Integers above `2^53` are written as
//! decimal strings; either form is accepted on input.

use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKind};
use crate::structure::ArithmeticalStructure;

/// Largest integer every IEEE double represents exactly.
pub const MAX_SAFE: u64 = 1 << 53;

pub fn big_to_json(x: &BigUint) -> Value {
    match u64::try_from(x) {
        Ok(v) if v <= MAX_SAFE => Value::from(v),
        _ => Value::String(x.to_string()),
    }
}

pub fn big_from_json(v: &Value) -> Result<BigUint> {
    match v {
        Value::Number(n) => n
            .as_u64()
            .map(BigUint::from)
            .ok_or_else(|| Error::Parse(format!("{n} is not a nonnegative integer"))),
        Value::String(s) if !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) => {
            s.parse().map_err(|_| Error::Parse(format!("bad integer {s:?}")))
        }
        other => Err(Error::Parse(format!("expected an integer, got {other}"))),
    }
}

pub fn vec_to_json(v: &[BigUint]) -> Value {
    Value::Array(v.iter().map(big_to_json).collect())
}

pub fn vec_from_json(v: &Value, name: &str) -> Result<Vec<BigUint>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("{name} must be an array")))?
        .iter()
        .map(big_from_json)
        .collect()
}

pub fn graph_to_json(g: &Graph) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), json!(g.kind().name()));
    m.insert("n".into(), json!(g.n()));
    if g.kind() == GraphKind::General {
        m.insert("adj".into(), json!(g.adjacency_matrix()));
    }
    Value::Object(m)
}

pub fn graph_from_json(v: &Value) -> Result<Graph> {
    let kind = v
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("graph.kind missing".into()))?;
    let kind = GraphKind::parse(kind)?;
    let n = v.get("n").and_then(Value::as_u64).map(|n| n as usize);
    match kind {
        GraphKind::General => {
            let adj: Vec<Vec<u32>> = serde_json::from_value(
                v.get("adj").cloned().ok_or_else(|| Error::Parse("graph.adj missing".into()))?,
            )
            .map_err(|e| Error::Parse(format!("graph.adj: {e}")))?;
            let g = Graph::general(adj)?;
            if n.is_some_and(|n| n != g.n()) {
                return Err(Error::GraphMismatch("n disagrees with adj".into()));
            }
            Ok(g)
        }
        _ => {
            let n = n.ok_or_else(|| Error::Parse("graph.n missing".into()))?;
            match kind {
                GraphKind::Path => Graph::path(n),
                GraphKind::Cycle => Graph::cycle(n),
                _ => Graph::star(n.saturating_sub(1)),
            }
        }
    }
}

pub fn structure_to_json(s: &ArithmeticalStructure) -> Value {
    json!({
        "graph": graph_to_json(s.graph()),
        "d": vec_to_json(s.d()),
        "r": vec_to_json(s.r()),
    })
}

/// Reads a structure. Either of `d` and `r` may be omitted; whatever is
/// present is validated.
pub fn structure_from_json(v: &Value) -> Result<ArithmeticalStructure> {
    let g = graph_from_json(v.get("graph").ok_or_else(|| Error::Parse("graph missing".into()))?)?;
    let d = v.get("d").map(|x| vec_from_json(x, "d")).transpose()?;
    let r = v.get("r").map(|x| vec_from_json(x, "r")).transpose()?;
    match (d, r) {
        (Some(d), Some(r)) => ArithmeticalStructure::validate(g, d, r),
        (Some(d), None) => ArithmeticalStructure::from_d(g, d),
        (None, Some(r)) => ArithmeticalStructure::from_r(g, r),
        (None, None) => Err(Error::Parse("need d or r".into())),
    }
}

pub fn parse_structure(text: &str) -> Result<ArithmeticalStructure> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    structure_from_json(&v)
}

/// One-line JSON text.
pub fn structure_to_string(s: &ArithmeticalStructure) -> String {
    structure_to_json(s).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::subdivide_path;
    use proptest::prelude::*;

    /// Subdivides next to the largest entry each time, which grows `r`
    /// like the Fibonacci numbers.
    fn huge_path(steps: usize) -> ArithmeticalStructure {
        let mut s = ArithmeticalStructure::laplacian(Graph::path(2).unwrap());
        for _ in 0..steps {
            let r = s.r();
            let top = (0..r.len()).max_by_key(|&i| r[i].clone()).unwrap();
            let nb = if top == 0 || (top + 1 < r.len() && r[top + 1] > r[top - 1]) { top + 1 } else { top - 1 };
            let pos = top.max(nb) + 1;
            s = subdivide_path(&s, pos).unwrap();
        }
        s
    }

    #[test]
    fn example_text() {
        let s = ArithmeticalStructure::from_r_u64(Graph::path(4).unwrap(), &[1, 1, 2, 1]).unwrap();
        assert_eq!(
            structure_to_string(&s),
            r#"{"d":[1,3,1,2],"graph":{"kind":"path","n":4},"r":[1,1,2,1]}"#
        );
        assert_eq!(parse_structure(&structure_to_string(&s)).unwrap(), s);
    }

    #[test]
    fn large_values_become_strings() {
        let s = huge_path(90);
        let max = s.r().iter().max().unwrap();
        assert!(*max > BigUint::from(MAX_SAFE));
        let v = structure_to_json(&s);
        assert!(v["r"].as_array().unwrap().iter().any(Value::is_string));
        assert_eq!(parse_structure(&v.to_string()).unwrap(), s);
    }

    #[test]
    fn boundary_of_safe_range() {
        assert_eq!(big_to_json(&BigUint::from(MAX_SAFE)), json!(MAX_SAFE));
        assert_eq!(big_to_json(&BigUint::from(MAX_SAFE + 1)), json!((MAX_SAFE + 1).to_string()));
        assert!(big_from_json(&json!(-1)).is_err());
        assert!(big_from_json(&json!(1.5)).is_err());
        assert!(big_from_json(&json!("12a")).is_err());
        assert!(big_from_json(&json!("")).is_err());
    }

    #[test]
    fn other_kinds() {
        let c = ArithmeticalStructure::from_r_u64(Graph::cycle(2).unwrap(), &[2, 1]).unwrap();
        assert_eq!(parse_structure(&structure_to_string(&c)).unwrap(), c);
        let st = ArithmeticalStructure::laplacian(Graph::star(3).unwrap());
        assert_eq!(parse_structure(&structure_to_string(&st)).unwrap(), st);
        let g = Graph::general(vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]).unwrap();
        let k3 = ArithmeticalStructure::laplacian(g);
        let text = structure_to_string(&k3);
        assert!(text.contains("adj"));
        assert_eq!(parse_structure(&text).unwrap(), k3);
    }

    #[test]
    fn partial_and_bad_input() {
        let s = parse_structure(r#"{"graph":{"kind":"cycle","n":3},"d":[2,2,2]}"#).unwrap();
        assert_eq!(s.r_u64().unwrap(), vec![1, 1, 1]);
        let s = parse_structure(r#"{"graph":{"kind":"path","n":3},"r":[1,"2",1]}"#).unwrap();
        assert_eq!(s.d_u64(), vec![2, 1, 2]);
        assert!(parse_structure(r#"{"graph":{"kind":"path","n":3},"d":[2,2,2],"r":[1,1,1]}"#).is_err());
        assert!(parse_structure(r#"{"graph":{"kind":"path","n":3}}"#).is_err());
        assert!(parse_structure("not json").is_err());
        assert!(parse_structure(r#"{"graph":{"kind":"torus","n":3},"d":[2,2,2]}"#).is_err());
    }

    proptest! {
        #[test]
        fn integer_codec_round_trips(bytes in proptest::collection::vec(any::<u8>(), 0..40)) {
            let x = BigUint::from_bytes_le(&bytes);
            let text = big_to_json(&x).to_string();
            let back: Value = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(big_from_json(&back).unwrap(), x);
        }

        #[test]
        fn path_structures_round_trip(picks in proptest::collection::vec(any::<u32>(), 0..120)) {
            let mut s = ArithmeticalStructure::laplacian(Graph::path(2).unwrap());
            for p in picks {
                let pos = 2 + p as usize % (s.n() - 1);
                s = subdivide_path(&s, pos).unwrap();
            }
            prop_assert_eq!(parse_structure(&structure_to_string(&s)).unwrap(), s);
        }
    }
}
