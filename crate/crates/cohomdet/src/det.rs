//! Determinant extraction, bases, and transformation laws.
//!
//! For a closed form the theta matrix is `n x n` and every struck minor
//! satisfies `det theta(i; j) = (-1)^(i+j) * a_i * b_j * d` for one common
//! polynomial `d`; for boundary and Massey forms theta is `(n-1) x n` and
//! `det theta(i) = (-1)^i * a_i * d`. Here `a_i` and `b_j` are the *dual*
//! linear forms of the chosen bases, i.e. the rows of the inverse-transpose
//! transition matrices expressed in standard dual coordinates.
//!
//! The extraction functions compute **every** struck minor, divide each one
//! exactly, and insist on a single common quotient. That cross-check is the
//! built-in self-test of the whole pipeline: an input that sneaks past
//! validation, or an arithmetic bug, surfaces here as
//! [`DetError::InconsistentMinors`] or [`DetError::NotDivisible`] rather
//! than as a silently wrong answer.
//!
//! Determinants transform by the unit `[a'/a][b'/b]` under change of bases
//! ([`change_basis`]), are basis-independent over `Z` for closed forms with
//! both bases equal ([`det_closed_z`]), and acquire a sign from an
//! orientation of the underlying modules ([`det_sign_refined`]).

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::forms::{BoundaryForm, ClosedForm, Form, FormError, MasseyForm};
use crate::polyring::{IntMatrix, IntPoly, PolyError, PolyMatrix};

/// Errors from determinant extraction.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DetError {
    /// A basis matrix is not square or does not match the form's ranks.
    #[error("basis has wrong shape: {0}")]
    BasisShape(String),
    /// A basis matrix has determinant other than +1 or -1.
    #[error("basis is not unimodular (determinant {0})")]
    NotUnimodular(BigInt),
    /// A struck minor was not divisible by its dual-form divisor. For valid
    /// inputs this cannot happen; it indicates a corrupted tensor or an
    /// internal bug.
    #[error("minor {index:?} is not divisible by its dual linear forms: {source}")]
    NotDivisible {
        index: Vec<usize>,
        source: PolyError,
    },
    /// Two struck minors produced different candidate determinants.
    #[error("struck minors disagree: minor {first_index:?} gives `{first_value}` but minor {second_index:?} gives `{second_value}`")]
    InconsistentMinors {
        first_index: Vec<usize>,
        first_value: String,
        second_index: Vec<usize>,
        second_value: String,
    },
    /// The extracted determinant failed the homogeneity self-check.
    #[error("extracted determinant `{value}` is not homogeneous of degree {expected}")]
    DegreeViolation { value: String, expected: u32 },
    /// An orientation sign other than +1 or -1 was supplied.
    #[error("orientation sign must be +1 or -1, got {0}")]
    BadOrientation(i64),
    /// Form-level failure (shape checks inside theta construction).
    #[error(transparent)]
    Form(#[from] FormError),
    /// Arithmetic failure from the polynomial layer.
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A pair of unimodular bases: `a` for the rank-`n` module whose dual
/// variables the polynomials live in, `b` for the companion module (rank `n`
/// for closed forms, rank `n-1` for boundary and Massey forms).
///
/// Rows are basis vectors in standard coordinates. Unimodularity is enforced
/// at construction, so both transition matrices are invertible over `Z` and
/// every [`BasisPair`] in circulation is legitimate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisPair {
    a: IntMatrix,
    b: IntMatrix,
}

impl BasisPair {
    /// Validates that both matrices are square and unimodular.
    pub fn new(a: IntMatrix, b: IntMatrix) -> Result<Self, DetError> {
        for basis in [&a, &b] {
            if !basis.is_square() {
                return Err(DetError::BasisShape(format!(
                    "basis matrices must be square, got {}x{}",
                    basis.rows(),
                    basis.cols()
                )));
            }
            let det = basis.det()?;
            if det != BigInt::one() && det != -BigInt::one() {
                return Err(DetError::NotUnimodular(det));
            }
        }
        Ok(BasisPair { a, b })
    }

    /// The standard bases: identity matrices of the given ranks.
    pub fn standard(a_rank: usize, b_rank: usize) -> Self {
        BasisPair {
            a: IntMatrix::identity(a_rank),
            b: IntMatrix::identity(b_rank),
        }
    }

    /// The standard bases sized for the given form (`b` has rank `n` for
    /// closed forms and `n-1` otherwise).
    pub fn standard_for(form: &Form) -> Self {
        match form {
            Form::Closed(f) => BasisPair::standard(f.n(), f.n()),
            Form::Boundary(f) => BasisPair::standard(f.n(), f.n() - 1),
            Form::Massey(f) => BasisPair::standard(f.n(), f.n() - 1),
        }
    }

    pub fn a(&self) -> &IntMatrix {
        &self.a
    }

    pub fn b(&self) -> &IntMatrix {
        &self.b
    }

    /// Dual linear forms of the `a` basis in standard dual coordinates: row
    /// `i` of `(a^T)^{-1}`, as the polynomial `sum_k c_{ik} * a_k`.
    fn dual_a(&self) -> Vec<IntPoly> {
        dual_forms(&self.a)
    }

    /// Dual linear forms of the `b` basis.
    fn dual_b(&self) -> Vec<IntPoly> {
        dual_forms(&self.b)
    }

    /// The transition unit `[a'/a] * [b'/b]` from `self` to `other`: the
    /// product of the determinants of the two transition matrices, which is
    /// `+1` or `-1` because all bases are unimodular.
    pub fn transition_sign_to(&self, other: &BasisPair) -> Result<i64, DetError> {
        if self.a.rows() != other.a.rows() || self.b.rows() != other.b.rows() {
            return Err(DetError::BasisShape(
                "basis pairs have different ranks".into(),
            ));
        }
        // det(A' A^{-1}) = det(A') * det(A) when det(A) = +-1.
        let sign_a = unit_sign(&self.a.det()?) * unit_sign(&other.a.det()?);
        let sign_b = unit_sign(&self.b.det()?) * unit_sign(&other.b.det()?);
        Ok(sign_a * sign_b)
    }
}

fn unit_sign(d: &BigInt) -> i64 {
    if d == &BigInt::one() {
        1
    } else {
        -1
    }
}

fn dual_forms(basis: &IntMatrix) -> Vec<IntPoly> {
    let dual = basis
        .transpose()
        .inverse_unimodular()
        .expect("BasisPair matrices are unimodular by construction");
    let n = dual.cols();
    (0..dual.rows())
        .map(|i| {
            let mut form = IntPoly::zero(n);
            for k in 0..n {
                let c = dual.entry(i, k);
                if c != 0 {
                    form += &IntPoly::variable(n, k).scaled(c);
                }
            }
            form
        })
        .collect()
}

/// An orientation of the underlying based modules, recorded as a sign
/// relative to the standard concatenated basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub enum Orientation {
    Positive,
    Negative,
}

impl Orientation {
    pub fn sign(self) -> i64 {
        match self {
            Orientation::Positive => 1,
            Orientation::Negative => -1,
        }
    }

    pub fn from_sign(sign: i64) -> Result<Self, DetError> {
        match sign {
            1 => Ok(Orientation::Positive),
            -1 => Ok(Orientation::Negative),
            other => Err(DetError::BadOrientation(other)),
        }
    }
}

impl TryFrom<i64> for Orientation {
    type Error = DetError;

    fn try_from(sign: i64) -> Result<Self, Self::Error> {
        Orientation::from_sign(sign)
    }
}

impl From<Orientation> for i64 {
    fn from(o: Orientation) -> i64 {
        o.sign()
    }
}

impl std::str::FromStr for Orientation {
    type Err = DetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "1" | "+1" => Ok(Orientation::Positive),
            "-1" => Ok(Orientation::Negative),
            other => Err(DetError::BadOrientation(
                other.parse::<i64>().unwrap_or(0),
            )),
        }
    }
}

/// Divides every struck minor of a `(n-1) x n` theta matrix by its signed
/// dual form and checks that all `n` candidates agree.
fn extract_common_single(
    theta: &PolyMatrix,
    duals: &[IntPoly],
    expected_degree: u32,
) -> Result<IntPoly, DetError> {
    let n = theta.cols();
    let mut common: Option<(IntPoly, usize)> = None;
    for col in 0..n {
        let minor = theta.strike_col(col)?.det()?;
        let quotient = minor
            .exact_div(&duals[col])
            .map_err(|source| DetError::NotDivisible {
                index: vec![col + 1],
                source,
            })?;
        // Struck column `col` is index col+1 in 1-based terms; the lemma's
        // sign there is (-1)^(col+1).
        let candidate = if col % 2 == 0 { -quotient } else { quotient };
        match &common {
            None => common = Some((candidate, col)),
            Some((first, first_col)) => {
                if *first != candidate {
                    return Err(DetError::InconsistentMinors {
                        first_index: vec![first_col + 1],
                        first_value: first.to_string(),
                        second_index: vec![col + 1],
                        second_value: candidate.to_string(),
                    });
                }
            }
        }
    }
    let (d, _) = common.expect("theta has at least two columns");
    check_degree(d, expected_degree)
}

fn check_degree(d: IntPoly, expected: u32) -> Result<IntPoly, DetError> {
    if d.is_homogeneous_of(expected) {
        Ok(d)
    } else {
        Err(DetError::DegreeViolation {
            value: d.to_string(),
            expected,
        })
    }
}

/// The determinant `d(f, a, b)` of a closed form: the common value of
/// `(-1)^(i+j) * det theta(i; j) / (a_i * b_j)` over all `n^2` struck
/// minors. Homogeneous of degree `n - 3`.
pub fn det_closed(f: &ClosedForm, bases: &BasisPair) -> Result<IntPoly, DetError> {
    let n = f.n();
    let theta = f.theta(bases)?;
    let dual_a = bases.dual_a();
    let dual_b = bases.dual_b();
    let mut common: Option<(IntPoly, (usize, usize))> = None;
    for i in 0..n {
        for j in 0..n {
            let minor = theta.strike(i, j)?.det()?;
            let divisor = &dual_a[i] * &dual_b[j];
            let quotient =
                minor
                    .exact_div(&divisor)
                    .map_err(|source| DetError::NotDivisible {
                        index: vec![i + 1, j + 1],
                        source,
                    })?;
            // (-1)^(i+j) has the same parity for 0- and 1-based indices.
            let candidate = if (i + j) % 2 == 0 { quotient } else { -quotient };
            match &common {
                None => common = Some((candidate, (i, j))),
                Some((first, first_at)) => {
                    if *first != candidate {
                        return Err(DetError::InconsistentMinors {
                            first_index: vec![first_at.0 + 1, first_at.1 + 1],
                            first_value: first.to_string(),
                            second_index: vec![i + 1, j + 1],
                            second_value: candidate.to_string(),
                        });
                    }
                }
            }
        }
    }
    let (d, _) = common.expect("closed forms have rank at least 3");
    check_degree(d, (n - 3) as u32)
}

/// The basis-independent determinant of a closed form over `Z`: `d(f, a, a)`
/// does not depend on the unimodular basis `a` at all, so it is evaluated on
/// the standard basis.
pub fn det_closed_z(f: &ClosedForm) -> Result<IntPoly, DetError> {
    det_closed(f, &BasisPair::standard(f.n(), f.n()))
}

/// The determinant `d(f, a, b)` of a boundary form: the common value of
/// `(-1)^i * det theta(i) / a_i` over all `n` struck-column minors.
/// Homogeneous of degree `n - 2`.
pub fn det_boundary(f: &BoundaryForm, bases: &BasisPair) -> Result<IntPoly, DetError> {
    let theta = f.theta(bases)?;
    extract_common_single(&theta, &bases.dual_a(), (f.n() - 2) as u32)
}

/// The determinant of an order-`m` Massey form, extracted exactly like the
/// boundary case but from degree-`m` theta entries. Homogeneous of degree
/// `m*(n-1) - 1`. At `m = 1` this agrees with [`det_boundary`] on the same
/// tensor.
pub fn det_massey(f: &MasseyForm, bases: &BasisPair) -> Result<IntPoly, DetError> {
    let theta = f.theta(bases)?;
    let expected = (f.m() * (f.n() - 1) - 1) as u32;
    extract_common_single(&theta, &bases.dual_a(), expected)
}

/// Dispatch on the form kind, with standard-shape bases checked inside each
/// extraction.
pub fn det_form(form: &Form, bases: &BasisPair) -> Result<IntPoly, DetError> {
    match form {
        Form::Closed(f) => det_closed(f, bases),
        Form::Boundary(f) => det_boundary(f, bases),
        Form::Massey(f) => det_massey(f, bases),
    }
}

/// Transports a determinant computed at `from` to the bases `to` by the
/// change-of-basis law `d(f, a', b') = [a'/a][b'/b] * d(f, a, b)`: only the
/// sign can change, because all transitions are unimodular.
pub fn change_basis(
    d: &IntPoly,
    from: &BasisPair,
    to: &BasisPair,
) -> Result<IntPoly, DetError> {
    let sign = from.transition_sign_to(to)?;
    Ok(d.scaled(sign))
}

/// The orientation-refined determinant at the standard bases:
/// `orientation.sign() * d(f, std, std)`. For any other unimodular bases the
/// plain determinant differs from this value exactly by the orientation sign
/// of those bases relative to the standard ones.
pub fn det_sign_refined(form: &Form, orientation: Orientation) -> Result<IntPoly, DetError> {
    let d = det_form(form, &BasisPair::standard_for(form))?;
    Ok(d.scaled(orientation.sign()))
}
