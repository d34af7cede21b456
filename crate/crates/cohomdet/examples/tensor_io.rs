//! Reading and writing the JSON interchange formats: form tensors (closed,
//! boundary, order-m) and full gluing instances — the same formats the
//! command-line tool consumes.
//!
//! Run with: cargo run --example tensor_io

use cohomdet::gluing::GluingInstance;
use cohomdet::{det_form, BasisPair, Form};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // A form tensor lists only its nonzero entries, with one-based indices.
    // Unknown fields, out-of-range indices, duplicate entries, and tensors
    // violating the symmetry laws are all rejected at parse time.
    let closed_json = r#"{
        "kind": "closed",
        "n": 3,
        "entries": [
            { "idx": [1, 2, 3], "val": 4 },
            { "idx": [2, 3, 1], "val": 4 },
            { "idx": [3, 1, 2], "val": 4 },
            { "idx": [2, 1, 3], "val": -4 },
            { "idx": [1, 3, 2], "val": -4 },
            { "idx": [3, 2, 1], "val": -4 }
        ]
    }"#;
    let form: Form = serde_json::from_str(closed_json)?;
    println!("parsed a {} form of rank {}", form.kind(), form.n());
    let d = det_form(&form, &BasisPair::standard_for(&form))?;
    println!("its determinant: {d}");

    // Serialization reproduces the same sparse shape.
    let round_tripped = serde_json::to_string_pretty(&form)?;
    let reparsed: Form = serde_json::from_str(&round_tripped)?;
    assert_eq!(
        det_form(&reparsed, &BasisPair::standard_for(&reparsed))?,
        d
    );
    println!("round-trip through JSON preserves the determinant");

    // Malformed input never panics; it reports what went wrong.
    let bad = closed_json.replace("\"val\": 4 }", "\"val\": 5 }");
    match serde_json::from_str::<Form>(&bad) {
        Err(err) => println!("mismatched alternating values rejected: {err}"),
        Ok(_) => panic!("expected a rejection"),
    }

    // Gluing instances bundle the glued form, the filled form, the integer
    // push-forward matrix, and the case bookkeeping in one document.
    let instance_json = r#"{
        "case_tag": 1,
        "f_M": {
            "kind": "boundary",
            "n": 3,
            "entries": [
                { "idx": [1, 1, 2], "val": 9 },
                { "idx": [1, 2, 1], "val": -9 }
            ]
        },
        "iota": [[1, 0], [0, 1], [0, 0]]
    }"#;
    let instance: GluingInstance = serde_json::from_str(instance_json)?;
    let report = instance.verify()?;
    println!(
        "case {} instance verifies: lhs = {}, rhs = {}",
        report.case_tag.number(),
        report.lhs,
        report.rhs
    );

    // Reports serialize with the polynomials as canonical text, so they are
    // stable targets for downstream tooling.
    println!("report as JSON:\n{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}
