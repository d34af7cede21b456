//! The order-m generalization: an (m+2)-linear form whose order-0 contraction
//! vanishes has a pairing matrix with degree-m polynomial entries, and its
//! struck minors still agree on one determinant, now of degree m(n-1) - 1.
//!
//! Run with: cargo run --example massey_determinant

use cohomdet::{
    det_boundary, det_massey, massey_f0, BasisPair, BoundaryForm, FormError, IntPoly, MasseyForm,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // An order-2 form on a rank-2 lattice: the tensor has one b-slot and
    // three module slots, stored flat with the b-slot outermost.
    let n = 2usize;
    let m = 2usize;
    let mut tensor = vec![0i64; (n - 1) * n.pow((m + 1) as u32)];
    tensor[0b010] = 1; // f(b1; a1, a2, a1) =  1
    tensor[0b100] = -1; // f(b1; a2, a1, a1) = -1
    let f = MasseyForm::new(n, m, tensor)?;
    println!("order-{m} form on rank {n}:");
    println!("  f(b1; a1, a2, a1) = {}", f.value(0, &[0, 1, 0]));
    println!("  f(b1; a2, a1, a1) = {}", f.value(0, &[1, 0, 0]));

    // Its pairing matrix has quadratic entries, and the determinant has
    // degree m(n-1) - 1 = 1.
    let bases = BasisPair::standard(n, n - 1);
    let theta = f.theta(&bases)?;
    println!(
        "theta = [{}, {}]",
        theta.entry(0, 0),
        theta.entry(0, 1)
    );
    let d = det_massey(&f, &bases)?;
    println!("d = {d}");
    assert_eq!(d, IntPoly::variable(n, 0));

    // The construction only applies when the order-0 contraction vanishes;
    // the constructor enforces that hypothesis.
    let mut bad = vec![0i64; (n - 1) * n.pow((m + 1) as u32)];
    bad[0] = 1; // f(b1; a1, a1, a1) = 1 contributes a1^3 to the contraction
    let rows = massey_f0(&bad, n, m)?;
    println!("order-0 contraction of the bad tensor: {}", rows[0]);
    match MasseyForm::new(n, m, bad) {
        Err(FormError::F0Nonzero { row, value }) => {
            println!("rejected as expected: row {row} contracts to {value}")
        }
        other => panic!("expected an F0Nonzero rejection, got {other:?}"),
    }

    // At order 1 the generalization collapses to the boundary case: the same
    // tensor gives the same determinant through either computation.
    let boundary = BoundaryForm::from_skew(3, &[([0, 1, 2], 5), ([1, 0, 2], -2), ([1, 0, 1], 1)])?;
    let lifted = MasseyForm::from_boundary(&boundary);
    let bases3 = BasisPair::standard(3, 2);
    let via_boundary = det_boundary(&boundary, &bases3)?;
    let via_massey = det_massey(&lifted, &bases3)?;
    println!("order-1 check: boundary gives {via_boundary}, order-1 form gives {via_massey}");
    assert_eq!(via_boundary, via_massey);
    Ok(())
}
