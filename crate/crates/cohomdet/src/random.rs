//! Seeded random generators for forms, bases, matrices, and gluing
//! instances.
//!
//! Every generator is a pure function of the caller's RNG, so test suites
//! and examples stay reproducible by seeding. Entry magnitudes are kept
//! small on purpose: the library computes exactly over arbitrary-precision
//! integers, and modest inputs keep rank-5 and rank-6 determinants fast.

use rand::Rng;

use crate::forms::{BoundaryForm, ClosedForm, MasseyForm};
use crate::gluing::GluingInstance;
use crate::polyring::{IntMatrix, IntPoly, PolyMatrix};

/// A random unimodular matrix: the identity transformed by `2n + 4`
/// elementary row operations (adds, swaps, negations), with entries capped
/// at 32 in absolute value so downstream arithmetic stays small.
pub fn unimodular(n: usize, rng: &mut impl Rng) -> IntMatrix {
    assert!(n >= 1, "unimodular matrices need rank >= 1");
    let mut rows = vec![vec![0i64; n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = 1;
    }
    for _ in 0..2 * n + 4 {
        match rng.random_range(0..4u32) {
            0 | 1 => {
                let i = rng.random_range(0..n);
                let j = rng.random_range(0..n);
                let s: i64 = if rng.random_bool(0.5) { 1 } else { -1 };
                if i != j {
                    let source = rows[j].clone();
                    let fits = rows[i]
                        .iter()
                        .zip(&source)
                        .all(|(a, b)| (a + s * b).abs() <= 32);
                    if fits {
                        for (a, b) in rows[i].iter_mut().zip(&source) {
                            *a += s * b;
                        }
                    }
                }
            }
            2 => {
                let i = rng.random_range(0..n);
                let j = rng.random_range(0..n);
                rows.swap(i, j);
            }
            _ => {
                let i = rng.random_range(0..n);
                for a in rows[i].iter_mut() {
                    *a = -*a;
                }
            }
        }
    }
    IntMatrix::from_rows(rows).expect("row operations preserve the square shape")
}

/// A random alternating form of rank `n >= 3` with generator values in
/// `[-bound, bound]`.
pub fn closed_form(n: usize, bound: i64, rng: &mut impl Rng) -> ClosedForm {
    assert!(n >= 3, "closed forms need rank >= 3");
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let v = rng.random_range(-bound..=bound);
                if v != 0 {
                    entries.push(([i, j, k], v));
                }
            }
        }
    }
    ClosedForm::from_alternating(n, &entries)
        .expect("strictly increasing triples are always valid generators")
}

/// A random boundary form of rank `n >= 2` with generator values in
/// `[-bound, bound]`.
pub fn boundary_form(n: usize, bound: i64, rng: &mut impl Rng) -> BoundaryForm {
    assert!(n >= 2, "boundary forms need rank >= 2");
    let mut entries = Vec::new();
    for x in 0..n - 1 {
        for j in 0..n {
            for k in j + 1..n {
                let v = rng.random_range(-bound..=bound);
                if v != 0 {
                    entries.push(([x, j, k], v));
                }
            }
        }
    }
    BoundaryForm::from_skew(n, &entries).expect("ordered pairs are always valid generators")
}

/// A random order-`m` Massey form: a raw random tensor antisymmetrized over
/// its first two module slots, which forces every `f0` contraction to vanish
/// symbolically (each contraction pairs a monomial with its slot-swapped
/// negative) while generically keeping theta and the determinant nonzero.
pub fn massey_form(n: usize, m: usize, bound: i64, rng: &mut impl Rng) -> MasseyForm {
    assert!(n >= 2, "Massey forms need rank >= 2");
    assert!(m >= 1, "Massey forms need order >= 1");
    let tail = n.pow((m - 1) as u32);
    let stride = n.pow((m + 1) as u32);
    let raw: Vec<i64> = (0..(n - 1) * stride)
        .map(|_| rng.random_range(-bound..=bound))
        .collect();
    let mut tensor = vec![0i64; raw.len()];
    for x in 0..n - 1 {
        for p in 0..n {
            for q in 0..n {
                for rest in 0..tail {
                    let fwd = x * stride + (p * n + q) * tail + rest;
                    let swapped = x * stride + (q * n + p) * tail + rest;
                    tensor[fwd] = raw[fwd] - raw[swapped];
                }
            }
        }
    }
    MasseyForm::new(n, m, tensor)
        .expect("antisymmetrizing the first two module slots kills every f0 contraction")
}

/// A raw order-`m` tensor whose first `f0` contraction is nonzero: the
/// coefficient of the pure power `a1^(m+1)` in row one is pinned to 1, so
/// [`MasseyForm::new`] must reject it. Used to exercise the validator.
pub fn massey_raw_with_nonzero_f0(n: usize, m: usize, bound: i64, rng: &mut impl Rng) -> Vec<i64> {
    assert!(n >= 2 && m >= 1);
    let stride = n.pow((m + 1) as u32);
    let mut tensor: Vec<i64> = (0..(n - 1) * stride)
        .map(|_| rng.random_range(-bound..=bound))
        .collect();
    // Only the all-ones index tuple contributes to a1^(m+1), so this single
    // entry decides that coefficient.
    tensor[0] = 1;
    tensor
}

/// A random polynomial in `num_vars` variables with up to four terms, each
/// of total degree at most `max_degree` and coefficient magnitude at most
/// `bound`.
pub fn poly(num_vars: usize, max_degree: u32, bound: i64, rng: &mut impl Rng) -> IntPoly {
    assert!(num_vars >= 1 && bound >= 1);
    let mut p = IntPoly::zero(num_vars);
    for _ in 0..rng.random_range(1..=4) {
        let mut exps = vec![0u32; num_vars];
        for _ in 0..rng.random_range(0..=max_degree) {
            exps[rng.random_range(0..num_vars)] += 1;
        }
        let magnitude = rng.random_range(1..=bound);
        let coeff = if rng.random_bool(0.5) { magnitude } else { -magnitude };
        p += &IntPoly::monomial(num_vars, &exps, coeff);
    }
    p
}

/// A random `(n-1) x n` polynomial matrix whose columns sum to zero: the
/// last column is the negated sum of the others.
pub fn column_sum_zero_matrix(
    n: usize,
    num_vars: usize,
    max_degree: u32,
    bound: i64,
    rng: &mut impl Rng,
) -> PolyMatrix {
    assert!(n >= 2);
    let entries: Vec<Vec<IntPoly>> = (0..n - 1)
        .map(|_| {
            let mut row: Vec<IntPoly> =
                (0..n - 1).map(|_| poly(num_vars, max_degree, bound, rng)).collect();
            let mut last = IntPoly::zero(num_vars);
            for e in &row {
                last -= e;
            }
            row.push(last);
            row
        })
        .collect();
    PolyMatrix::from_fn(n - 1, n, num_vars, |r, c| entries[r][c].clone())
        .expect("shape fixed by construction")
}

/// A random instance whose boundary form has an identically zero last row,
/// the configuration whose determinant must vanish outright.
pub fn case1_instance(n: usize, bound: i64, rng: &mut impl Rng) -> GluingInstance {
    assert!(n >= 3, "case 1 instances need rank >= 3");
    let mut head = vec![0i64; (n - 2) * n * n];
    for x in 0..n - 2 {
        for j in 0..n {
            for k in j + 1..n {
                let v = rng.random_range(-bound..=bound);
                head[(x * n + j) * n + k] = v;
                head[(x * n + k) * n + j] = -v;
            }
        }
    }
    GluingInstance::case1(n, head).expect("generated head tensor is skew")
}

/// A random instance built from an alternating cup tensor and an
/// antisymmetric pairing matrix, the configuration whose pushed-forward
/// determinant must vanish.
pub fn case2_instance(n: usize, bound: i64, rng: &mut impl Rng) -> GluingInstance {
    assert!(n >= 4, "case 2 instances need rank >= 4");
    let cup = closed_form(n - 1, bound, rng);
    let mut pairing = vec![vec![0i64; n - 1]; n - 1];
    for j in 0..n - 1 {
        for k in j + 1..n - 1 {
            let v = rng.random_range(-bound..=bound);
            pairing[j][k] = v;
            pairing[k][j] = -v;
        }
    }
    let pairing = IntMatrix::from_rows(pairing).expect("square by construction");
    GluingInstance::case2(&cup, &pairing).expect("generated pairing is antisymmetric")
}

/// A random instance of the torsion-scaled identity: a rank-`(n-1)` boundary
/// form extended by a coupling block and a single corner pairing `k * m`.
pub fn case3_instance(n: usize, bound: i64, rng: &mut impl Rng) -> GluingInstance {
    assert!(n >= 3, "case 3 instances need rank >= 3");
    let fbar = boundary_form(n - 1, bound, rng);
    let coupling = IntMatrix::from_rows(
        (0..n - 2)
            .map(|_| (0..n - 1).map(|_| rng.random_range(-bound..=bound)).collect())
            .collect(),
    )
    .expect("rectangular by construction");
    let k = rng.random_range(1..=3);
    let m = rng.random_range(1..=3);
    let tors_m = rng.random_range(1..=5);
    GluingInstance::case3(&fbar, &coupling, k, m, tors_m)
        .expect("generated coupling data is always consistent")
}

/// A random instance of the relabeling identity: the boundary restriction of
/// a rank-`n` alternating form, compared against the closed determinant.
pub fn case4_instance(n: usize, bound: i64, rng: &mut impl Rng) -> GluingInstance {
    assert!(n >= 3, "case 4 instances need rank >= 3");
    let fbar = closed_form(n, bound, rng);
    let k = rng.random_range(1..=3);
    let tors_mbar = rng.random_range(1..=5);
    GluingInstance::case4(&fbar, k, tors_mbar).expect("restrictions are always consistent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::One;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn unimodular_matrices_have_unit_determinant() {
        let mut rng = StdRng::seed_from_u64(0x0c0ffee);
        for _ in 0..50 {
            let n = rng.random_range(1..=6);
            let u = unimodular(n, &mut rng);
            let det = u.det().unwrap();
            assert!(det == BigInt::one() || det == -BigInt::one(), "det = {det}");
        }
    }

    #[test]
    fn massey_generator_always_passes_validation() {
        let mut rng = StdRng::seed_from_u64(0x0dd);
        for n in 2..=4usize {
            for m in 1..=3usize {
                let f = massey_form(n, m, 4, &mut rng);
                assert_eq!((f.n(), f.m()), (n, m));
            }
        }
    }

    #[test]
    fn nonzero_f0_tensors_are_rejected() {
        let mut rng = StdRng::seed_from_u64(0xbad);
        for _ in 0..10 {
            let n = rng.random_range(2..=4);
            let m = rng.random_range(1..=3);
            let raw = massey_raw_with_nonzero_f0(n, m, 3, &mut rng);
            assert!(MasseyForm::new(n, m, raw).is_err(), "n={n} m={m}");
        }
    }

    #[test]
    fn column_sum_zero_matrix_columns_really_sum_to_zero() {
        let mut rng = StdRng::seed_from_u64(0x501d);
        let z = column_sum_zero_matrix(4, 2, 2, 5, &mut rng);
        for r in 0..3 {
            let mut sum = IntPoly::zero(2);
            for c in 0..4 {
                sum += z.entry(r, c);
            }
            assert!(sum.is_zero());
        }
    }
}
