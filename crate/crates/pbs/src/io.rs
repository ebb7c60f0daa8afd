//! JSON and CSV interchange for every object the crate computes.
//!
//! JSON is the canonical format; CSV exists only for flat tables (matrices
//! and statistic distributions). The conventions, chosen so that exactness
//! survives serialization:
//!
//! * **Rationals** serialize as strings: `"5/3"`, or `"7"` when the
//!   denominator is `1`. CSV cells use the same rendering.
//! * **`f`-/`h`-vectors and local `h` coefficients** serialize as JSON
//!   integer arrays. Integers of any size are emitted literally (no
//!   floating-point detour), which standard JSON permits and this crate's
//!   parser reads back exactly.
//! * **Complexes** are `{"ground": n, "facets": [[1,2],[3]]}` with 1-based
//!   vertex labels; `"ground"` may be omitted on input, in which case the
//!   largest label mentioned is used.
//! * **Subdivision dictionaries** map each new label to its meaning:
//!   `{"1": {"orig": 1}, "5": {"bary": [1,2]}}`.
//!
//! Parse errors keep `serde_json`'s position annotations (`line … column …`)
//! so a malformed file can be fixed by looking at the message.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::localh::LocalHPolynomial;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::spectral::{ClassifiedVector, EigenDecomposition};
use crate::subdivision::{Subdivision, SubdivisionDictionary, SubdivisionVertex};
use crate::transform::TransformMatrix;

/// A `BigInt` as a literal JSON number (exact at any size).
fn integer_value(x: &BigInt) -> Value {
    let number = serde_json::from_str::<serde_json::Number>(&x.to_string())
        .expect("a decimal integer literal is a JSON number");
    Value::Number(number)
}

/// An exact integer vector as a JSON array of numbers.
pub fn integer_vector_to_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(integer_value).collect())
}

/// Reads a JSON array of integers (arbitrary size) back into `BigInt`s.
///
/// # Errors
///
/// Returns [`Error::Json`] if the value is not an array of integers.
pub fn integer_vector_from_json(value: &Value) -> Result<Vec<BigInt>> {
    let items = value
        .as_array()
        .ok_or_else(|| Error::Json { reason: "expected a JSON array of integers".into() })?;
    items
        .iter()
        .map(|item| match item {
            Value::Number(n) => BigInt::from_str(&n.to_string()).map_err(|_| Error::Json {
                reason: format!("expected an integer, found {n}"),
            }),
            other => Err(Error::Json { reason: format!("expected an integer, found {other}") }),
        })
        .collect()
}

/// Parses a JSON document containing an integer array.
///
/// # Errors
///
/// Returns [`Error::Json`] (position-annotated) on malformed JSON.
pub fn integer_vector_from_json_str(s: &str) -> Result<Vec<BigInt>> {
    let value: Value =
        serde_json::from_str(s).map_err(|e| Error::Json { reason: e.to_string() })?;
    integer_vector_from_json(&value)
}

/// A rational as its canonical JSON string: `"p/q"`, or `"n"` for integers.
pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

/// A rational vector as a JSON array of `"p/q"` strings.
pub fn rational_vector_to_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_to_json).collect())
}

/// Reads a JSON array of `"p/q"` strings back into rationals.
///
/// # Errors
///
/// Returns [`Error::Json`] on a non-array, and [`Error::Parse`] for a string
/// that is not a rational.
pub fn rational_vector_from_json(value: &Value) -> Result<Vec<Rational>> {
    let items = value
        .as_array()
        .ok_or_else(|| Error::Json { reason: "expected a JSON array of rationals".into() })?;
    items
        .iter()
        .map(|item| match item {
            Value::String(s) => parse_rational(s),
            other => Err(Error::Json {
                reason: format!("expected a \"p/q\" string, found {other}"),
            }),
        })
        .collect()
}

#[derive(Deserialize)]
struct ComplexDocument {
    #[serde(default)]
    ground: Option<u32>,
    facets: Vec<Vec<u32>>,
}

/// A simplicial complex as `{"ground": n, "facets": [[…], …]}`.
pub fn complex_to_json(k: &SimplicialComplex) -> Value {
    json!({
        "ground": k.ground_size(),
        "facets": k.facets(),
    })
}

/// Renders [`complex_to_json`] with one facet per line:
///
/// ```text
/// {
///   "ground": 4,
///   "facets": [
///     [1,2,3],
///     [3,4]
///   ]
/// }
/// ```
pub fn complex_to_json_string(k: &SimplicialComplex) -> String {
    let mut s = String::from("{\n");
    s.push_str(&format!("  \"ground\": {},\n", k.ground_size()));
    s.push_str("  \"facets\": [\n");
    let rendered: Vec<String> = k
        .facets()
        .iter()
        .map(|f| format!("    {}", serde_json::to_string(f).expect("facet serializes")))
        .collect();
    s.push_str(&rendered.join(",\n"));
    s.push_str("\n  ]\n}\n");
    s
}

/// Parses a complex from its JSON document. `"ground"` is optional.
///
/// # Errors
///
/// Returns [`Error::Json`] (position-annotated) on malformed JSON, and the
/// usual construction errors ([`Error::InvalidVertex`],
/// [`Error::EmptyFacetList`]) on invalid content.
pub fn complex_from_json_str(s: &str) -> Result<SimplicialComplex> {
    let doc: ComplexDocument =
        serde_json::from_str(s).map_err(|e| Error::Json { reason: e.to_string() })?;
    SimplicialComplex::from_facets(doc.facets, doc.ground)
}

/// A subdivision dictionary as a label → meaning map, with labels as JSON
/// object keys in numeric order.
pub fn dictionary_to_json(dict: &SubdivisionDictionary) -> Value {
    let mut map = Map::new();
    for (label, vertex) in dict.iter() {
        let meaning = match vertex {
            SubdivisionVertex::Original(v) => json!({ "orig": v }),
            SubdivisionVertex::Barycenter(face) => json!({ "bary": face }),
        };
        map.insert(label.to_string(), meaning);
    }
    Value::Object(map)
}

/// Renders [`dictionary_to_json`] with one label per line, in numeric label
/// order (object renderings sort keys lexicographically, which scrambles
/// two-digit labels).
pub fn dictionary_to_json_string(dict: &SubdivisionDictionary) -> String {
    let mut s = String::from("{\n");
    let rendered: Vec<String> = dict
        .iter()
        .map(|(label, vertex)| {
            let meaning = match vertex {
                SubdivisionVertex::Original(v) => format!("{{\"orig\":{v}}}"),
                SubdivisionVertex::Barycenter(face) => format!(
                    "{{\"bary\":{}}}",
                    serde_json::to_string(face).expect("face serializes")
                ),
            };
            format!("  \"{label}\": {meaning}")
        })
        .collect();
    s.push_str(&rendered.join(",\n"));
    s.push_str("\n}\n");
    s
}

/// A full subdivision as `{"level", "complex", "dictionary"}`.
pub fn subdivision_to_json(sd: &Subdivision) -> Value {
    json!({
        "level": sd.level(),
        "complex": complex_to_json(sd.complex()),
        "dictionary": dictionary_to_json(sd.dictionary()),
    })
}

/// A single integer vector as one compact JSON line, e.g. `[1,4,6,4,1]`.
pub fn integer_vector_to_json_line(v: &[BigInt]) -> String {
    let mut s = serde_json::to_string(&integer_vector_to_json(v))
        .expect("integer vector serializes");
    s.push('\n');
    s
}

/// A sequence of integer vectors as a JSON array with one vector per line.
pub fn integer_vectors_to_json_block<'a, I>(vectors: I) -> String
where
    I: IntoIterator<Item = &'a [BigInt]>,
{
    let rendered: Vec<String> = vectors
        .into_iter()
        .map(|v| {
            format!(
                "  {}",
                serde_json::to_string(&integer_vector_to_json(v))
                    .expect("integer vector serializes")
            )
        })
        .collect();
    format!("[\n{}\n]\n", rendered.join(",\n"))
}

/// A transform matrix as `{"d", "level", "kind", "rows"}` with rational
/// string entries.
pub fn matrix_to_json(m: &TransformMatrix) -> Value {
    let rows: Vec<Value> = (0..m.matrix().rows())
        .map(|i| rational_vector_to_json(m.matrix().row(i)))
        .collect();
    json!({
        "d": m.d(),
        "level": m.level(),
        "kind": m.kind().to_string(),
        "rows": rows,
    })
}

/// A transform matrix as CSV: one line per row, entries in rational string
/// form, no header.
pub fn matrix_to_csv(m: &TransformMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.matrix().rows() {
        let cells: Vec<String> = m.matrix().row(i).iter().map(format_rational).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

fn classified_vector_to_json(c: &ClassifiedVector) -> Value {
    json!({
        "shape": c.shape.to_string(),
        "coordinate_sum": rational_to_json(&c.coordinate_sum),
        "vector": rational_vector_to_json(&c.vector),
    })
}

/// An eigendecomposition as JSON: eigenvalues as rational strings, each with
/// its multiplicity, eigenvectors, and coordinate sums.
pub fn eigen_to_json(dec: &EigenDecomposition) -> Value {
    let pairs: Vec<Value> = dec
        .pairs
        .iter()
        .map(|p| {
            json!({
                "eigenvalue": rational_to_json(&p.eigenvalue),
                "multiplicity": p.multiplicity,
                "coordinate_sums": rational_vector_to_json(&p.coordinate_sums),
                "vectors": p.vectors.iter()
                    .map(|v| rational_vector_to_json(v))
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "d": dec.d,
        "level": dec.level,
        "kind": dec.kind.to_string(),
        "eigenpairs": pairs,
    })
}

/// A structured unit-eigenvalue basis as a JSON array of classified vectors.
pub fn unit_basis_to_json(basis: &[ClassifiedVector]) -> Value {
    Value::Array(basis.iter().map(classified_vector_to_json).collect())
}

/// A local `h`-polynomial as `{"d", "level", "coefficients"}` with integer
/// coefficients.
pub fn local_h_to_json(p: &LocalHPolynomial) -> Value {
    json!({
        "d": p.d(),
        "level": p.level(),
        "coefficients": integer_vector_to_json(p.coefficients()),
    })
}

/// Pretty-prints any JSON value with a trailing newline (the one rendering
/// every CLI output goes through, so output bytes are deterministic).
pub fn to_pretty_string(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON value serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};
    use crate::subdivision::partial_subdivision;
    use crate::transform::h_transform;

    #[test]
    fn complex_round_trip() {
        let k = SimplicialComplex::from_facets(vec![vec![1, 2, 3], vec![3, 4]], None).unwrap();
        let s = complex_to_json_string(&k);
        let back = complex_from_json_str(&s).unwrap();
        assert_eq!(back, k);
    }

    #[test]
    fn complex_parse_reports_position() {
        let err = complex_from_json_str("{\"facets\": [[1, 2\n]").unwrap_err();
        match err {
            Error::Json { reason } => assert!(reason.contains("line"), "got: {reason}"),
            other => panic!("expected Json error, got {other:?}"),
        }
    }

    #[test]
    fn ground_defaults_to_max_label() {
        let k = complex_from_json_str("{\"facets\": [[2, 5]]}").unwrap();
        assert_eq!(k.ground_size(), 5);
        let explicit = complex_from_json_str("{\"ground\": 9, \"facets\": [[2, 5]]}").unwrap();
        assert_eq!(explicit.ground_size(), 9);
    }

    #[test]
    fn big_integer_vectors_round_trip() {
        let big = BigInt::from_str("123456789012345678901234567890123456789").unwrap();
        let v = vec![BigInt::from(1), big.clone(), BigInt::from(-7)];
        let json = integer_vector_to_json(&v);
        let rendered = serde_json::to_string(&json).unwrap();
        assert!(rendered.contains("123456789012345678901234567890123456789"));
        assert_eq!(integer_vector_from_json_str(&rendered).unwrap(), v);
    }

    #[test]
    fn rational_vectors_round_trip() {
        let v = vec![rat(0), ratio(5, 3), ratio(-7, 2)];
        let json = rational_vector_to_json(&v);
        assert_eq!(json, json!(["0", "5/3", "-7/2"]));
        assert_eq!(rational_vector_from_json(&json).unwrap(), v);
    }

    #[test]
    fn dictionary_format() {
        let sd = partial_subdivision(&SimplicialComplex::simplex(3), 2).unwrap();
        let json = dictionary_to_json(sd.dictionary());
        assert_eq!(json["1"], json!({ "orig": 1 }));
        assert_eq!(json["4"], json!({ "bary": [1, 2, 3] }));
    }

    #[test]
    fn matrix_renderings() {
        let m = h_transform(3, 2).unwrap();
        let json = matrix_to_json(&m);
        assert_eq!(json["kind"], json!("h"));
        assert_eq!(json["rows"][1], json!(["1", "2", "1", "1"]));
        let csv = matrix_to_csv(&m);
        assert_eq!(csv, "1,0,0,0\n1,2,1,1\n1,1,2,1\n0,0,0,1\n");
    }

    #[test]
    fn local_h_rendering() {
        let p = crate::localh::local_h(4, 2).unwrap();
        let json = local_h_to_json(&p);
        assert_eq!(json["coefficients"], json!([0, 1, 1, 1, 0]));
    }

    #[test]
    fn eigen_rendering_has_rational_strings() {
        let dec = crate::spectral::eigen_decompose(4, 2, crate::transform::TransformKind::H)
            .unwrap();
        let json = eigen_to_json(&dec);
        assert_eq!(json["eigenpairs"][0]["eigenvalue"], json!("1"));
        assert_eq!(json["eigenpairs"][2]["eigenvalue"], json!("12"));
        assert_eq!(json["eigenpairs"][2]["multiplicity"], json!(1));
    }
}
