//! Tour of the exact polynomial layer: parsing, arithmetic, grading, and
//! exact division over the integer polynomial ring Z[a1, ..., an].
//!
//! Run with: cargo run --example polynomial_ring

use cohomdet::{Homogeneity, IntPoly, Monomial};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Polynomials live in a fixed number of variables and print in a
    // canonical order (descending graded-lexicographic), so equal values
    // always print identically.
    let p = IntPoly::parse("2*a1^2*a3 - a2 + 1", 3)?;
    let q = IntPoly::parse("a1 + a3", 3)?;
    println!("p           = {p}");
    println!("q           = {q}");
    println!("p + q       = {}", &p + &q);
    println!("p * q       = {}", &p * &q);
    println!("-p          = {}", -&p);

    // The canonical text round-trips exactly.
    let round_trip = IntPoly::parse(&(&p * &q).to_string(), 3)?;
    assert_eq!(round_trip, &p * &q);
    println!("round-trip  = {round_trip}");

    // Coefficients are arbitrary-precision: no overflow, ever.
    let big = IntPoly::parse("1000000000000*a1", 3)?.pow(4);
    println!("big power   = {big}");

    // The grading is what the determinant theory runs on: every extracted
    // determinant is homogeneous of a predicted degree.
    for text in ["a1*a2 - a3^2", "a1 + a2^2", "0"] {
        let poly = IntPoly::parse(text, 3)?;
        match poly.homogeneity() {
            Homogeneity::Homogeneous(d) => println!("{text:<12} is homogeneous of degree {d}"),
            Homogeneity::Mixed => println!("{text:<12} mixes degrees"),
            Homogeneity::Zero => println!("{text:<12} is the zero polynomial"),
        }
    }

    // Exact division: the quotient of a true multiple is recovered exactly,
    // and anything else reports a remainder instead of truncating.
    let product = &p * &q;
    println!("(p*q)/q     = {}", product.exact_div(&q)?);
    let indivisible = IntPoly::parse("a1^2 + 1", 3)?;
    println!("(a1^2+1)/q  -> {}", indivisible.exact_div(&q).unwrap_err());

    // Terms iterate in canonical order as (monomial, coefficient) pairs.
    let leading: (&Monomial, _) = p.terms().next_back().expect("p is nonzero");
    println!("leading term of p: {:?} with coefficient {}", leading.0, leading.1);
    Ok(())
}
