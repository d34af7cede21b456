//! The closed-case determinant: a rank-n alternating trilinear form has an
//! n x n matrix of struck-minor quotients that all agree on one polynomial
//! d of degree n - 3, recovered here from scratch.
//!
//! Run with: cargo run --example closed_determinant

use cohomdet::forms::levi_civita_3;
use cohomdet::{
    change_basis, det_closed, det_closed_z, det_sign_refined, BasisPair, ClosedForm, Form,
    IntMatrix, IntPoly, Orientation,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // The scaled volume form on a rank-3 lattice: f(x, y, z) = c * det(x|y|z).
    let c = 2;
    let f = levi_civita_3(c);
    let std = BasisPair::standard(3, 3);

    // Its determinant is the constant c^2.
    let d = det_closed(&f, &std)?;
    println!("volume form scaled by {c}: d = {d}");
    assert_eq!(d, IntPoly::constant(3, c * c));

    // Behind the scenes: every struck minor of the pairing matrix theta
    // factors as (-1)^(i+j) * a_i * a_j * d.
    let theta = f.theta(&std)?;
    println!("theta at the standard bases:");
    for i in 0..3 {
        let row: Vec<String> = (0..3).map(|j| theta.entry(i, j).to_string()).collect();
        println!("  [{}]", row.join(", "));
    }
    for (i, j) in [(0, 0), (1, 2), (2, 0)] {
        let minor = theta.strike(i, j)?.det()?;
        println!("det theta({}, {}) = {minor}", i + 1, j + 1);
    }

    // Even ranks are degenerate: theta is antisymmetric and singular, so its
    // adjugate is antisymmetric too and every minor — hence d — vanishes.
    let g4 = ClosedForm::from_alternating(
        4,
        &[([0, 1, 2], 1), ([0, 1, 3], 2), ([0, 2, 3], -1), ([1, 2, 3], 3)],
    )?;
    assert!(det_closed_z(&g4)?.is_zero());
    println!("rank-4 determinants vanish identically: d = {}", det_closed_z(&g4)?);

    // Rank 5: two volume blocks sharing their first class. The determinant
    // is the square of the shared class, a polynomial of degree n - 3 = 2.
    let g = ClosedForm::from_alternating(5, &[([0, 1, 2], 1), ([0, 3, 4], 1)])?;
    let d5 = det_closed_z(&g)?;
    println!("rank-5 two-block form: d = {d5}");
    assert_eq!(d5, IntPoly::parse("a1^2", 5)?);

    // Changing both bases by unimodular matrices scales d by the product of
    // their determinants — so the joint computation over Z is invariant.
    let p = IntMatrix::from_rows(vec![
        vec![1, 0, 0, 0, 0],
        vec![2, 1, 0, 0, 0],
        vec![0, -1, 1, 0, 0],
        vec![3, 0, 0, 1, 0],
        vec![0, 0, -2, 0, 1],
    ])?;
    let moved = BasisPair::new(p.clone(), p)?;
    let d5_moved = det_closed(&g, &moved)?;
    println!("after a simultaneous basis change: d = {d5_moved}");
    assert_eq!(d5_moved, d5);
    assert_eq!(change_basis(&d5, &BasisPair::standard(5, 5), &moved)?, d5_moved);

    // An orientation refines the sign of the answer.
    let refined = det_sign_refined(&Form::Closed(g), Orientation::Negative)?;
    println!("with the opposite orientation:     d = {refined}");
    assert_eq!(refined, -&d5);
    Ok(())
}
