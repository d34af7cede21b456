//! The canonical multivariate polynomial type over `Z`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::PolyError;

/// An exponent vector, ordered graded-lexicographically (total degree first,
/// then lexicographic with the first variable heaviest).
///
/// The length of the vector is the ambient variable count; every monomial of
/// a given [`IntPoly`] has the same length.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    /// The monomial `1` in `num_vars` variables (all exponents zero).
    pub fn unit(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    /// Builds a monomial from an explicit exponent vector.
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// Total degree (sum of exponents).
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The exponent vector.
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(x, y)| x + y)
                .collect(),
        )
    }

    /// Component-wise division, or `None` when some exponent would go
    /// negative.
    fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(x, y)| x.checked_sub(*y))
            .collect::<Option<Vec<u32>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Homogeneity classification of a polynomial.
///
/// The zero polynomial is homogeneous of every degree, so it gets its own
/// marker rather than an arbitrary degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial (homogeneous of any degree).
    Zero,
    /// Every term has the given total degree.
    Homogeneous(u32),
    /// Terms of at least two distinct total degrees are present.
    Mixed,
}

/// A multivariate polynomial over `Z` in variables `a1 .. an`, always held in
/// canonical form: term keys are unique exponent vectors of length
/// [`num_vars`](IntPoly::num_vars), no coefficient is zero, and iteration is
/// in graded-lex order.
///
/// Equality, hashing of rendered text, and serialization are therefore all
/// deterministic. Binary operators panic when the operands disagree on the
/// variable count; that is a programming error, not an input error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    num_vars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl IntPoly {
    /// The zero polynomial in `num_vars` variables.
    pub fn zero(num_vars: usize) -> Self {
        IntPoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial `1`.
    pub fn one(num_vars: usize) -> Self {
        IntPoly::constant(num_vars, 1)
    }

    /// A constant polynomial.
    pub fn constant(num_vars: usize, value: impl Into<BigInt>) -> Self {
        let mut p = IntPoly::zero(num_vars);
        p.insert_term(Monomial::unit(num_vars), value.into());
        p
    }

    /// The variable `a(index+1)` as a polynomial (`index` is zero-based).
    ///
    /// # Panics
    /// Panics when `index >= num_vars`.
    pub fn variable(num_vars: usize, index: usize) -> Self {
        assert!(
            index < num_vars,
            "variable index {index} out of range for {num_vars} variables"
        );
        let mut exps = vec![0u32; num_vars];
        exps[index] = 1;
        IntPoly::monomial(num_vars, &exps, 1)
    }

    /// A single term `coeff * a1^e1 * ... * an^en`.
    ///
    /// # Panics
    /// Panics when `exponents.len() != num_vars`.
    pub fn monomial(num_vars: usize, exponents: &[u32], coeff: impl Into<BigInt>) -> Self {
        assert_eq!(
            exponents.len(),
            num_vars,
            "exponent vector length must equal the variable count"
        );
        let mut p = IntPoly::zero(num_vars);
        p.insert_term(Monomial::new(exponents.to_vec()), coeff.into());
        p
    }

    /// Number of ambient variables.
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Number of (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the given exponent vector (zero when absent).
    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms
            .get(&Monomial::new(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Total degree of the leading term, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Classifies the polynomial as zero, homogeneous of one degree, or
    /// mixed.
    pub fn homogeneity(&self) -> Homogeneity {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => Homogeneity::Zero,
            Some(first) => {
                if degrees.all(|d| d == first) {
                    Homogeneity::Homogeneous(first)
                } else {
                    Homogeneity::Mixed
                }
            }
        }
    }

    /// True when the polynomial is zero or homogeneous of exactly `degree`.
    pub fn is_homogeneous_of(&self, degree: u32) -> bool {
        match self.homogeneity() {
            Homogeneity::Zero => true,
            Homogeneity::Homogeneous(d) => d == degree,
            Homogeneity::Mixed => false,
        }
    }

    /// The polynomial multiplied by an integer scalar.
    pub fn scaled(&self, scalar: impl Into<BigInt>) -> IntPoly {
        let c: BigInt = scalar.into();
        if c.is_zero() {
            return IntPoly::zero(self.num_vars);
        }
        IntPoly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * &c))
                .collect(),
        }
    }

    /// `self^exponent` by repeated multiplication (`self^0 = 1`).
    pub fn pow(&self, exponent: u32) -> IntPoly {
        let mut out = IntPoly::one(self.num_vars);
        for _ in 0..exponent {
            out = &out * self;
        }
        out
    }

    /// Leading term in graded-lex order. `None` for the zero polynomial.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Exact division in `Z[a1..an]`.
    ///
    /// Returns the unique `q` with `self = q * divisor` when it exists, and
    /// [`PolyError::NotDivisible`] otherwise. Division is performed by
    /// repeated leading-term elimination, which over an integral domain
    /// terminates with zero remainder exactly when the divisor divides the
    /// dividend.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly, PolyError> {
        if divisor.num_vars != self.num_vars {
            return Err(PolyError::DimensionMismatch(format!(
                "dividend has {} variables, divisor has {}",
                self.num_vars, divisor.num_vars
            )));
        }
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let not_divisible = || PolyError::NotDivisible {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        let (div_mono, div_coeff) = divisor.leading_term().expect("divisor is nonzero");
        let mut remainder = self.clone();
        let mut quotient = IntPoly::zero(self.num_vars);
        while let Some((rem_mono, rem_coeff)) = remainder.leading_term() {
            let mono = rem_mono.try_div(div_mono).ok_or_else(not_divisible)?;
            if !(rem_coeff % div_coeff).is_zero() {
                return Err(not_divisible());
            }
            let coeff = rem_coeff / div_coeff;
            let mut step = IntPoly::zero(self.num_vars);
            step.insert_term(mono, coeff);
            remainder -= &(&step * divisor);
            quotient += &step;
        }
        Ok(quotient)
    }

    /// Applies the linear variable substitution `a_i -> sum_j map[i][j] b_j`.
    ///
    /// `map` must have one row per variable of `self`; the result lives in
    /// `map.cols()` variables. This is a ring homomorphism, which is what
    /// makes it legitimate to push determinants and products through it.
    pub fn substitute_linear(&self, map: &IntMatrix) -> Result<IntPoly, PolyError> {
        if map.rows() != self.num_vars {
            return Err(PolyError::DimensionMismatch(format!(
                "substitution matrix has {} rows but the polynomial has {} variables",
                map.rows(),
                self.num_vars
            )));
        }
        let target_vars = map.cols();
        let images: Vec<IntPoly> = (0..map.rows())
            .map(|i| {
                let mut form = IntPoly::zero(target_vars);
                for j in 0..target_vars {
                    let c = map.entry(i, j);
                    if c != 0 {
                        form += &IntPoly::variable(target_vars, j).scaled(c);
                    }
                }
                form
            })
            .collect();
        let mut out = IntPoly::zero(target_vars);
        for (mono, coeff) in &self.terms {
            let mut term = IntPoly::constant(target_vars, coeff.clone());
            for (i, &e) in mono.exponents().iter().enumerate() {
                if e > 0 {
                    term = &term * &images[i].pow(e);
                }
            }
            out += &term;
        }
        Ok(out)
    }

    /// Adds `coeff * mono`, dropping the key when the sum cancels to zero.
    pub(super) fn insert_term(&mut self, mono: Monomial, coeff: BigInt) {
        debug_assert_eq!(mono.exponents().len(), self.num_vars);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn assert_compatible(&self, other: &IntPoly) {
        assert_eq!(
            self.num_vars, other.num_vars,
            "polynomials live in different variable counts"
        );
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c))
                .collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        -&self
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        self.assert_compatible(rhs);
        for (m, c) in &rhs.terms {
            self.insert_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        self.assert_compatible(rhs);
        for (m, c) in &rhs.terms {
            self.insert_term(m.clone(), -c);
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        self.assert_compatible(rhs);
        let mut out = IntPoly::zero(self.num_vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.insert_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

/// Convenience: `is_one` for sign handling during rendering.
pub(super) fn coeff_is_one(c: &BigInt) -> bool {
    c.abs().is_one()
}
