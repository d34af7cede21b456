//! Acceptance suite: nine exact, property-based criteria.
//!
//! Each criterion is one test that prints a single summary line (visible
//! with `cargo test --test acceptance -- --nocapture`); the test name says
//! which criterion it is. Everything is computed over arbitrary-precision
//! integers and compared with exact equality — there are no tolerances
//! anywhere, only wall-clock budgets on the two big suites.

use std::time::Instant;

use cohomdet::corpus;
use cohomdet::forms::levi_civita_3;
use cohomdet::random;
use cohomdet::{
    change_basis, det_boundary, det_closed, det_closed_z, det_massey, massey_f0, BasisPair,
    BoundaryForm, CaseTag, ClosedForm, Form, FormError, Homogeneity, IntPoly, MasseyForm,
    PolyMatrix,
};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn pass(name: &str, detail: &str, start: Instant) {
    println!(
        "acceptance {name}: pass ({detail}, {:.2}s)",
        start.elapsed().as_secs_f64()
    );
}

/// Degree-or-zero check shared by the property suites.
fn assert_degree(d: &IntPoly, expected: u32, what: &str) {
    match d.homogeneity() {
        Homogeneity::Zero => {}
        Homogeneity::Homogeneous(got) if got == expected => {}
        other => panic!("{what}: expected degree {expected} (or zero), got {other:?}"),
    }
}

#[test]
fn criterion_1_boundary_minor_consistency() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0xacc0_0001);
    let mut minors = 0usize;
    for trial in 0..300usize {
        let n = 2 + trial % 5; // 2..=6, 60 forms each
        let f = random::boundary_form(n, 9, &mut rng);
        let bases = BasisPair::standard(n, n - 1);
        let d = det_boundary(&f, &bases).unwrap();
        assert_degree(&d, (n - 2) as u32, "boundary determinant");
        // The per-minor relation det theta(i) = (-1)^i * a_i * d, checked
        // against the raw struck determinants.
        let theta = f.theta(&bases).unwrap();
        for col in 0..n {
            let minor = theta.strike_col(col).unwrap().det().unwrap();
            let sign = if col % 2 == 0 { -1 } else { 1 };
            let expected = (&IntPoly::variable(n, col) * &d).scaled(sign);
            assert_eq!(minor, expected, "n={n} struck column {col}");
            minors += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "criterion 1 exceeded its 30 s budget: {elapsed:?}"
    );
    pass(
        "criterion 1",
        &format!("300 boundary forms, ranks 2-6, {minors} struck minors exact"),
        start,
    );
}

#[test]
fn criterion_2_closed_minor_consistency_and_z_invariance() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0xacc0_0002);
    let mut minors = 0usize;
    let mut changes = 0usize;
    for (n, count) in [(3usize, 100usize), (4, 60), (5, 28), (6, 12)] {
        for _ in 0..count {
            let f = random::closed_form(n, 9, &mut rng);
            let std = BasisPair::standard(n, n);
            let d = det_closed(&f, &std).unwrap();
            assert_degree(&d, (n - 3) as u32, "closed determinant");
            let theta = f.theta(&std).unwrap();
            for i in 0..n {
                for j in 0..n {
                    let minor = theta.strike(i, j).unwrap().det().unwrap();
                    let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                    let divisor = &IntPoly::variable(n, i) * &IntPoly::variable(n, j);
                    assert_eq!(minor, (&divisor * &d).scaled(sign), "n={n} minor ({i},{j})");
                    minors += 1;
                }
            }
            // det over Z: invariant under simultaneous unimodular changes.
            for _ in 0..10 {
                let p = random::unimodular(n, &mut rng);
                let pair = BasisPair::new(p.clone(), p).unwrap();
                assert_eq!(det_closed(&f, &pair).unwrap(), d, "n={n} changed basis");
                changes += 1;
            }
        }
    }
    pass(
        "criterion 2",
        &format!("200 closed forms, {minors} minors exact, {changes} unimodular changes invariant"),
        start,
    );
}

#[test]
fn criterion_3_change_of_basis_law() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0xacc0_0003);
    for trial in 0..200usize {
        let step = trial / 3;
        match trial % 3 {
            0 => {
                let n = 3 + step % 2;
                let f = random::closed_form(n, 5, &mut rng);
                let std = BasisPair::standard(n, n);
                let moved = BasisPair::new(
                    random::unimodular(n, &mut rng),
                    random::unimodular(n, &mut rng),
                )
                .unwrap();
                let d = det_closed(&f, &std).unwrap();
                assert_eq!(
                    det_closed(&f, &moved).unwrap(),
                    change_basis(&d, &std, &moved).unwrap(),
                    "closed n={n} trial={trial}"
                );
            }
            1 => {
                let n = 2 + step % 3;
                let f = random::boundary_form(n, 6, &mut rng);
                let std = BasisPair::standard(n, n - 1);
                let moved = BasisPair::new(
                    random::unimodular(n, &mut rng),
                    random::unimodular(n - 1, &mut rng),
                )
                .unwrap();
                let d = det_boundary(&f, &std).unwrap();
                assert_eq!(
                    det_boundary(&f, &moved).unwrap(),
                    change_basis(&d, &std, &moved).unwrap(),
                    "boundary n={n} trial={trial}"
                );
            }
            _ => {
                let n = 2 + step % 2;
                let m = 1 + step % 2;
                let f = random::massey_form(n, m, 4, &mut rng);
                let std = BasisPair::standard(n, n - 1);
                let moved = BasisPair::new(
                    random::unimodular(n, &mut rng),
                    random::unimodular(n - 1, &mut rng),
                )
                .unwrap();
                let d = det_massey(&f, &std).unwrap();
                assert_eq!(
                    det_massey(&f, &moved).unwrap(),
                    change_basis(&d, &std, &moved).unwrap(),
                    "massey n={n} m={m} trial={trial}"
                );
            }
        }
    }
    pass("criterion 3", "200 (form, a', b') triples transform by [a'/a][b'/b]", start);
}

#[test]
fn criterion_4_degree_law() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0xacc0_0004);
    let mut checked = 0usize;
    for trial in 0..30usize {
        let n = 2 + trial % 4;
        let f = random::boundary_form(n, 7, &mut rng);
        let d = det_boundary(&f, &BasisPair::standard(n, n - 1)).unwrap();
        assert_degree(&d, (n - 2) as u32, "boundary");
        checked += 1;
    }
    for trial in 0..30usize {
        let n = 3 + trial % 3;
        let f = random::closed_form(n, 7, &mut rng);
        let d = det_closed_z(&f).unwrap();
        assert_degree(&d, (n - 3) as u32, "closed");
        checked += 1;
    }
    for trial in 0..30usize {
        let n = 2 + trial % 2;
        let m = 1 + trial % 3;
        let f = random::massey_form(n, m, 4, &mut rng);
        let d = det_massey(&f, &BasisPair::standard(n, n - 1)).unwrap();
        assert_degree(&d, (m * (n - 1) - 1) as u32, "massey");
        checked += 1;
    }
    // The zero form is the degenerate case the law's "(or zero)" covers.
    let zero = ClosedForm::new(4, vec![0; 64]).unwrap();
    assert_eq!(det_closed_z(&zero).unwrap().homogeneity(), Homogeneity::Zero);
    checked += 1;
    pass(
        "criterion 4",
        &format!("{checked} determinants homogeneous of n-3 / n-2 / m(n-1)-1 (or zero)"),
        start,
    );
}

#[test]
fn criterion_5_column_sum_zero_claim() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0xacc0_0005);
    for trial in 0..100usize {
        let n = 2 + trial % 4;
        let vars = 1 + trial % 3;
        let z = random::column_sum_zero_matrix(n, vars, 2, 6, &mut rng);
        let mut witness: Option<IntPoly> = None;
        for col in 0..n {
            let minor = z.strike_col(col).unwrap().det().unwrap();
            let signed = if col % 2 == 0 { -minor } else { minor };
            match &witness {
                None => witness = Some(signed),
                Some(w) => assert_eq!(w, &signed, "trial={trial} n={n} col={col}"),
            }
        }
    }
    pass(
        "criterion 5",
        "100 column-sum-zero matrices have index-independent signed struck minors",
        start,
    );
}

#[test]
fn criterion_6_massey_reduction_and_f0_rejection() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0xacc0_0006);
    for trial in 0..100usize {
        let n = 2 + trial % 3;
        let f = random::boundary_form(n, 6, &mut rng);
        let massey = MasseyForm::from_boundary(&f);
        let bases = BasisPair::standard(n, n - 1);
        assert_eq!(
            det_massey(&massey, &bases).unwrap(),
            det_boundary(&f, &bases).unwrap(),
            "trial={trial} n={n}"
        );
    }
    for trial in 0..100usize {
        let n = 2 + trial % 3;
        let m = 1 + trial % 3;
        let raw = random::massey_raw_with_nonzero_f0(n, m, 3, &mut rng);
        let rows = massey_f0(&raw, n, m).unwrap();
        assert!(
            rows.iter().any(|p| !p.is_zero()),
            "trial={trial}: planted contraction vanished"
        );
        assert!(
            matches!(
                MasseyForm::new(n, m, raw),
                Err(FormError::F0Nonzero { .. })
            ),
            "trial={trial}: validator accepted a nonzero-f0 tensor"
        );
    }
    pass(
        "criterion 6",
        "100 order-1 reductions exact and 100 nonzero-f0 tensors rejected",
        start,
    );
}

#[test]
fn criterion_7_gluing_identities() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0xacc0_0007);
    let mut torsion_checked = 0usize;
    for trial in 0..200usize {
        for case in 1..=4u8 {
            let n = match case {
                2 => 4 + trial % 2,
                _ => 3 + trial % 3,
            };
            let inst = match case {
                1 => random::case1_instance(n, 4, &mut rng),
                2 => random::case2_instance(n, 4, &mut rng),
                3 => random::case3_instance(n, 4, &mut rng),
                _ => random::case4_instance(n, 4, &mut rng),
            };
            let report = inst.verify().unwrap();
            assert!(
                report.passed(),
                "case {case} n={n} trial={trial}: {}",
                report.detail
            );
            if case == 3 {
                // Independent restatement of the torsion-weighted identity:
                // tors_M * iota(d_M) = -tors_Mbar * ell * d(fbar), with
                // ell = k * alpha_{ell_index} and tors_Mbar = m * tors_M.
                let d_m = det_boundary(inst.glued_form(), &BasisPair::standard(n, n - 1))
                    .unwrap();
                let Some(Form::Boundary(fbar)) = inst.filled_form() else {
                    panic!("case 3 carries a boundary filled form");
                };
                let d_bar =
                    det_boundary(fbar, &BasisPair::standard(n - 1, n - 2)).unwrap();
                let (tors_m, tors_mbar) = inst.torsion_orders();
                assert_eq!(tors_mbar, inst.m() * tors_m);
                let ell = IntPoly::variable(n - 1, inst.ell_index().unwrap() - 1)
                    .scaled(inst.k());
                let lhs = inst.iota_star(&d_m).unwrap().scaled(tors_m);
                let rhs = (&ell * &d_bar).scaled(-tors_mbar);
                assert_eq!(lhs, rhs, "case 3 torsion identity, n={n} trial={trial}");
                torsion_checked += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 60.0,
        "criterion 7 exceeded its 60 s budget: {elapsed:?}"
    );
    pass(
        "criterion 7",
        &format!("800 instances verified (200 per case), {torsion_checked} torsion-weighted checks"),
        start,
    );
}

#[test]
fn criterion_8_corpus_regression() {
    let start = Instant::now();
    corpus::self_check().unwrap_or_else(|e| panic!("{e}"));
    // The three pinned regressions, bit-exact.
    for (name, expected) in [
        ("three-torus", "1"),
        ("unit-pairing-rank2", "1"),
        ("torus-filling-rank3", "-a3"),
    ] {
        let entry = corpus::get(name).unwrap_or_else(|| panic!("missing corpus entry {name}"));
        assert_eq!(entry.expected_d, expected, "{name} frozen value drifted");
        entry.self_check().unwrap_or_else(|e| panic!("{e}"));
    }
    let torus_fill = corpus::get("torus-filling-rank3").unwrap();
    let corpus::CorpusPayload::Instance(inst) = &torus_fill.payload else {
        panic!("torus-filling-rank3 is an instance entry");
    };
    let report = inst.verify().unwrap();
    assert!(report.passed());
    assert_eq!(report.case_tag, CaseTag::Case4);
    pass(
        "criterion 8",
        "all corpus entries reproduce their frozen determinants bit-exactly",
        start,
    );
}

/// Plain recursive Laplace expansion along the first row — an independent
/// determinant oracle sharing no code with the fraction-free production
/// algorithm.
fn cofactor_det(m: &PolyMatrix) -> IntPoly {
    let n = m.rows();
    assert_eq!(n, m.cols(), "oracle needs a square matrix");
    if n == 1 {
        return m.entry(0, 0).clone();
    }
    let mut acc = IntPoly::zero(m.num_vars());
    for j in 0..n {
        if m.entry(0, j).is_zero() {
            continue;
        }
        let sub = PolyMatrix::from_fn(n - 1, n - 1, m.num_vars(), |r, c| {
            m.entry(r + 1, if c < j { c } else { c + 1 }).clone()
        })
        .unwrap();
        let term = m.entry(0, j) * &cofactor_det(&sub);
        if j % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

#[test]
fn criterion_9_hand_verified_anchors() {
    let start = Instant::now();
    // Closed anchors: the scaled rank-3 volume form has determinant c^2,
    // re-extracted here from every minor with the cofactor oracle.
    for c in [1i64, 2, 3] {
        let f = levi_civita_3(c);
        let std = BasisPair::standard(3, 3);
        let theta = f.theta(&std).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let minor = cofactor_det(&theta.strike(i, j).unwrap());
                let divisor = &IntPoly::variable(3, i) * &IntPoly::variable(3, j);
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                let d = minor.exact_div(&divisor).unwrap().scaled(sign);
                assert_eq!(d, IntPoly::constant(3, c * c), "c={c} minor ({i},{j})");
            }
        }
        assert_eq!(det_closed_z(&f).unwrap(), IntPoly::constant(3, c * c));
    }
    // Boundary anchors: rank 2 with pairing value D has determinant D, with
    // the struck-minor signs exactly as the extraction convention demands.
    for d_val in [-3i64, 0, 7] {
        let f = BoundaryForm::from_skew(2, &[([0, 0, 1], d_val)]).unwrap();
        let bases = BasisPair::standard(2, 1);
        let theta = f.theta(&bases).unwrap();
        let d = IntPoly::constant(2, d_val);
        // det theta(1) = -a1 * D and det theta(2) = a2 * D.
        assert_eq!(
            cofactor_det(&theta.strike_col(0).unwrap()),
            (&IntPoly::variable(2, 0) * &d).scaled(-1)
        );
        assert_eq!(
            cofactor_det(&theta.strike_col(1).unwrap()),
            &IntPoly::variable(2, 1) * &d
        );
        assert_eq!(det_boundary(&f, &bases).unwrap(), d);
    }
    pass(
        "criterion 9",
        "Levi-Civita c^2 and rank-2 pairing anchors reproduced by the cofactor oracle",
        start,
    );
}
