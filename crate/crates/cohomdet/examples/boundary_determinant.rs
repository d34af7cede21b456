//! The boundary-case determinant: the pairing matrix is (n-1) x n, one row
//! short of square, and striking each column yields minors that agree on a
//! single polynomial d of degree n - 2 via det theta(i) = (-1)^i * a_i * d.
//!
//! Run with: cargo run --example boundary_determinant

use cohomdet::{det_boundary, BasisPair, BoundaryForm, IntPoly};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Rank 2: the form is determined by one pairing value D, and d = D.
    let d_value = 7;
    let f = BoundaryForm::from_skew(2, &[([0, 0, 1], d_value)])?;
    let bases = BasisPair::standard(2, 1);
    let d = det_boundary(&f, &bases)?;
    println!("rank-2 pairing with value {d_value}: d = {d}");
    assert_eq!(d, IntPoly::constant(2, d_value));

    // The two struck minors carry the alternating sign pattern.
    let theta = f.theta(&bases)?;
    println!(
        "theta = [{}, {}]",
        theta.entry(0, 0),
        theta.entry(0, 1)
    );
    for col in 0..2 {
        let minor = theta.strike_col(col)?.det()?;
        println!("det theta({}) = {minor}", col + 1);
    }

    // Rank 3: entries are skew in the last two slots; d is now linear. This
    // tensor is the restriction of the rank-3 volume form to a boundary pair.
    let g = BoundaryForm::from_skew(
        3,
        &[([0, 1, 2], 1), ([1, 0, 2], -1)],
    )?;
    let bases3 = BasisPair::standard(3, 2);
    let d3 = det_boundary(&g, &bases3)?;
    println!("restricted volume form: d = {d3}");

    let theta3 = g.theta(&bases3)?;
    println!("theta at the standard bases:");
    for i in 0..2 {
        let row: Vec<String> = (0..3).map(|j| theta3.entry(i, j).to_string()).collect();
        println!("  [{}]", row.join(", "));
    }
    for col in 0..3 {
        let minor = theta3.strike_col(col)?.det()?;
        let sign = if col % 2 == 0 { "-" } else { "+" };
        println!(
            "det theta({}) = {minor}   (predicted {sign}a{} * d)",
            col + 1,
            col + 1
        );
    }

    // Mixed ranks of the two modules are allowed in the bases: the a-side
    // has rank n, the b-side rank n - 1, each changed independently.
    let moved = BasisPair::new(
        cohomdet::IntMatrix::from_rows(vec![vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]])?,
        cohomdet::IntMatrix::from_rows(vec![vec![0, 1], vec![1, 0]])?,
    )?;
    let d3_moved = det_boundary(&g, &moved)?;
    println!("after changing both bases: d = {d3_moved}");
    assert_eq!(d3_moved, -&d3);
    Ok(())
}
