//! Solid-torus gluing instances and their determinant identities.
//!
//! An instance packages the boundary form `f_M` of a manifold-with-boundary
//! together with the data of a solid-torus filling: the push-forward map
//! `iota` on first cohomology, the form of the filled manifold when one is
//! present, and the integer invariants that relate the two determinants.
//! [`GluingInstance::verify`] recomputes both sides of the identity that the
//! instance's case predicts and reports whether they agree.
//!
//! The four cases, tagged by [`CaseTag`]:
//!
//! 1. **Case 1** — the filling leaves a boundary bigger than a torus and the
//!    restriction map has image rank one: the determinant of `f_M` vanishes
//!    identically.
//! 2. **Case 2** — a single torus boundary whose filling drops the first
//!    Betti number: the *pushed-forward* determinant vanishes, even though
//!    the determinant itself is generically nonzero.
//! 3. **Case 3** — boundary bigger than a torus, image rank two: the pushed
//!    determinant equals `-m * ell * d(fbar)` for the filled manifold's
//!    boundary form `fbar`, where `ell = k * alpha_l` is an integer multiple
//!    of one dual variable and the torsion orders scale by `m`.
//! 4. **Case 4** — a single torus boundary whose filling preserves the first
//!    Betti number: the filled manifold is closed, and the pushed determinant
//!    equals `(-1)^n * iota(a_n) * d(fbar)` up to the recorded orientation
//!    sign; the torsion orders scale by `k`.
//!
//! All verification happens at the standard bases; the change-of-basis law
//! transports the identities anywhere else.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::det::{det_boundary, det_closed_z, BasisPair, DetError, Orientation};
use crate::forms::{BoundaryForm, ClosedForm, Form, FormError, TensorJson};
use crate::polyring::{IntMatrix, IntPoly, PolyError};

/// Errors from building, validating, or verifying gluing instances.
#[derive(Debug, Error)]
pub enum GluingError {
    /// The requested configuration cannot occur: when the boundary is larger
    /// than a single torus, the restriction map never has image rank zero.
    #[error("vacuous configuration: image rank zero forces the boundary to be a single torus")]
    VacuousCase,
    /// Structurally invalid instance data.
    #[error("invalid gluing input: {0}")]
    InvalidInput(String),
    /// Determinant extraction failed while verifying; reports which side.
    #[error("determinant extraction failed for the {side}: {source}")]
    Extraction {
        side: &'static str,
        source: DetError,
    },
    /// Form-level validation failure.
    #[error(transparent)]
    Form(#[from] FormError),
    /// Polynomial arithmetic failure.
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn invalid(msg: impl Into<String>) -> GluingError {
    GluingError::InvalidInput(msg.into())
}

/// Which of the four gluing identities an instance claims.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum CaseTag {
    Case1,
    Case2,
    Case3,
    Case4,
}

impl CaseTag {
    pub fn number(self) -> u8 {
        match self {
            CaseTag::Case1 => 1,
            CaseTag::Case2 => 2,
            CaseTag::Case3 => 3,
            CaseTag::Case4 => 4,
        }
    }
}

impl TryFrom<u8> for CaseTag {
    type Error = GluingError;

    fn try_from(tag: u8) -> Result<Self, Self::Error> {
        match tag {
            1 => Ok(CaseTag::Case1),
            2 => Ok(CaseTag::Case2),
            3 => Ok(CaseTag::Case3),
            4 => Ok(CaseTag::Case4),
            other => Err(invalid(format!("case tag must be 1..=4, got {other}"))),
        }
    }
}

impl From<CaseTag> for u8 {
    fn from(tag: CaseTag) -> u8 {
        tag.number()
    }
}

/// Classifies a filling by the shape of its cohomology maps: `image_rank` is
/// the rank of the restriction-to-boundary image, `single_torus` says
/// whether the remaining boundary is exactly one torus, and `b1_m` /
/// `b1_mbar` are the first Betti numbers before and after filling.
pub fn classify_case(
    image_rank: usize,
    single_torus: bool,
    b1_m: usize,
    b1_mbar: usize,
) -> Result<CaseTag, GluingError> {
    if single_torus {
        if b1_mbar + 1 == b1_m {
            Ok(CaseTag::Case2)
        } else if b1_mbar == b1_m {
            Ok(CaseTag::Case4)
        } else {
            Err(invalid(format!(
                "filling along a torus changes the first Betti number by 0 or 1, not {b1_m} -> {b1_mbar}"
            )))
        }
    } else {
        match image_rank {
            0 => Err(GluingError::VacuousCase),
            1 => Ok(CaseTag::Case1),
            2 => Ok(CaseTag::Case3),
            other => Err(invalid(format!(
                "the restriction image of a torus piece has rank at most 2, got {other}"
            ))),
        }
    }
}

/// Did a verification succeed?
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// The outcome of verifying one instance: both sides of the predicted
/// identity (in canonical text when serialized), a verdict, and a short
/// explanation of what was checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(into = "GluingReportJson")]
pub struct GluingReport {
    pub case_tag: CaseTag,
    pub lhs: IntPoly,
    pub rhs: IntPoly,
    pub verdict: Verdict,
    pub detail: String,
}

impl GluingReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Serialize)]
struct GluingReportJson {
    case_tag: u8,
    lhs: String,
    rhs: String,
    verdict: Verdict,
    detail: String,
}

impl From<GluingReport> for GluingReportJson {
    fn from(report: GluingReport) -> Self {
        GluingReportJson {
            case_tag: report.case_tag.number(),
            lhs: report.lhs.to_string(),
            rhs: report.rhs.to_string(),
            verdict: report.verdict,
            detail: report.detail,
        }
    }
}

/// One solid-torus filling with everything needed to verify its determinant
/// identity. Construct via the four case constructors or deserialize from
/// JSON; both paths run the same validation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GluingInstanceJson", into = "GluingInstanceJson")]
pub struct GluingInstance {
    case: CaseTag,
    f_m: BoundaryForm,
    f_mbar: Option<Form>,
    iota: IntMatrix,
    k: i64,
    m: i64,
    tors_m: i64,
    tors_mbar: i64,
    ell_index: Option<usize>,
    s0: Option<Orientation>,
}

/// The map that keeps the first `n - 1` dual directions and kills the last:
/// the push-forward on first cohomology when the filled meridian is the
/// `n`-th basis direction.
fn kill_last(n: usize) -> IntMatrix {
    let mut rows = vec![vec![0i64; n - 1]; n];
    for (i, row) in rows.iter_mut().enumerate().take(n - 1) {
        row[i] = 1;
    }
    IntMatrix::from_rows(rows).expect("rectangular by construction")
}

fn is_permutation(matrix: &IntMatrix) -> bool {
    if !matrix.is_square() {
        return false;
    }
    let n = matrix.rows();
    let mut seen = vec![false; n];
    for i in 0..n {
        let mut hit = None;
        for j in 0..n {
            match matrix.entry(i, j) {
                0 => {}
                1 if hit.is_none() => hit = Some(j),
                _ => return false,
            }
        }
        match hit {
            Some(j) if !seen[j] => seen[j] = true,
            _ => return false,
        }
    }
    true
}

impl GluingInstance {
    /// Case 1: a boundary form whose last first-slot row vanishes. `head` is
    /// the dense `(n-2) x n x n` top block, skew in its last two slots.
    pub fn case1(n: usize, head: Vec<i64>) -> Result<Self, GluingError> {
        if n < 3 {
            return Err(invalid("case 1 instances need rank n >= 3"));
        }
        if head.len() != (n - 2) * n * n {
            return Err(invalid(format!(
                "case 1 head tensor must have {} entries, got {}",
                (n - 2) * n * n,
                head.len()
            )));
        }
        let mut tensor = vec![0i64; (n - 1) * n * n];
        tensor[..head.len()].copy_from_slice(&head);
        let f_m = BoundaryForm::new(n, tensor)?;
        GluingInstance {
            case: CaseTag::Case1,
            f_m,
            f_mbar: None,
            iota: kill_last(n),
            k: 1,
            m: 1,
            tors_m: 1,
            tors_mbar: 1,
            ell_index: None,
            s0: None,
        }
        .validated()
    }

    /// Case 2: the glued form determined by an alternating rank-`(n-1)` cup
    /// tensor and an antisymmetric `(n-1) x (n-1)` pairing with the filled
    /// direction.
    pub fn case2(cup: &ClosedForm, pairing: &IntMatrix) -> Result<Self, GluingError> {
        let nb = cup.n();
        let n = nb + 1;
        if pairing.rows() != nb || pairing.cols() != nb {
            return Err(invalid(format!(
                "case 2 pairing must be {nb} x {nb}, got {} x {}",
                pairing.rows(),
                pairing.cols()
            )));
        }
        for i in 0..nb {
            for j in 0..nb {
                if pairing.entry(i, j) != -pairing.entry(j, i) {
                    return Err(invalid("case 2 pairing must be antisymmetric"));
                }
            }
        }
        let mut tensor = vec![0i64; (n - 1) * n * n];
        for i in 0..nb {
            for j in 0..nb {
                for k in 0..nb {
                    tensor[(i * n + j) * n + k] = cup.value(i, j, k);
                }
            }
        }
        for i in 0..nb {
            for k in 0..nb {
                tensor[(i * n + (n - 1)) * n + k] = pairing.entry(i, k);
                tensor[(i * n + k) * n + (n - 1)] = -pairing.entry(i, k);
            }
        }
        let f_m = BoundaryForm::new(n, tensor)?;
        GluingInstance {
            case: CaseTag::Case2,
            f_m,
            f_mbar: None,
            iota: kill_last(n),
            k: 1,
            m: 1,
            tors_m: 1,
            tors_mbar: 1,
            ell_index: None,
            s0: None,
        }
        .validated()
    }

    /// Case 3: extends the filled manifold's boundary form `fbar` (rank
    /// `n-1`) by a coupling block `coupling` (`(n-2) x (n-1)`, the pairings
    /// with the filled direction) and a single corner pairing `k * m` in the
    /// last row. The filled torsion order is `m * tors_m`.
    pub fn case3(
        fbar: &BoundaryForm,
        coupling: &IntMatrix,
        k: i64,
        m: i64,
        tors_m: i64,
    ) -> Result<Self, GluingError> {
        let nb = fbar.n();
        let n = nb + 1;
        if coupling.rows() != nb - 1 || coupling.cols() != nb {
            return Err(invalid(format!(
                "case 3 coupling must be {} x {nb}, got {} x {}",
                nb - 1,
                coupling.rows(),
                coupling.cols()
            )));
        }
        if k < 1 || m < 1 || tors_m < 1 {
            return Err(invalid("case 3 needs k, m, and tors_M all >= 1"));
        }
        let corner = k
            .checked_mul(m)
            .ok_or_else(|| invalid("corner pairing k * m overflows"))?;
        let tors_mbar = m
            .checked_mul(tors_m)
            .ok_or_else(|| invalid("torsion order m * tors_M overflows"))?;
        let mut tensor = vec![0i64; (n - 1) * n * n];
        for x in 0..nb - 1 {
            for j in 0..nb {
                for kk in 0..nb {
                    tensor[(x * n + j) * n + kk] = fbar.value(x, j, kk);
                }
            }
            for j in 0..nb {
                tensor[(x * n + j) * n + (n - 1)] = coupling.entry(x, j);
                tensor[(x * n + (n - 1)) * n + j] = -coupling.entry(x, j);
            }
        }
        let last = n - 2;
        tensor[(last * n + (n - 2)) * n + (n - 1)] = corner;
        tensor[(last * n + (n - 1)) * n + (n - 2)] = -corner;
        let f_m = BoundaryForm::new(n, tensor)?;
        GluingInstance {
            case: CaseTag::Case3,
            f_m,
            f_mbar: Some(Form::Boundary(fbar.clone())),
            iota: kill_last(n),
            k,
            m,
            tors_m,
            tors_mbar,
            ell_index: Some(n - 1),
            s0: None,
        }
        .validated()
    }

    /// Case 4: the boundary restriction of a closed rank-`n` form `fbar`,
    /// with identity push-forward. The glued torsion order is `k *
    /// tors_mbar` and the induced orientation sign at standard bases is
    /// `(-1)^n`.
    pub fn case4(fbar: &ClosedForm, k: i64, tors_mbar: i64) -> Result<Self, GluingError> {
        let n = fbar.n();
        if k < 1 || tors_mbar < 1 {
            return Err(invalid("case 4 needs k and tors_Mbar both >= 1"));
        }
        let tors_m = k
            .checked_mul(tors_mbar)
            .ok_or_else(|| invalid("torsion order k * tors_Mbar overflows"))?;
        let s0 = if n % 2 == 0 {
            Orientation::Positive
        } else {
            Orientation::Negative
        };
        GluingInstance {
            case: CaseTag::Case4,
            f_m: fbar.boundary_restriction(),
            f_mbar: Some(Form::Closed(fbar.clone())),
            iota: IntMatrix::identity(n),
            k,
            m: 1,
            tors_m,
            tors_mbar,
            ell_index: Some(n),
            s0: Some(s0),
        }
        .validated()
    }

    fn validated(self) -> Result<Self, GluingError> {
        self.validate()?;
        Ok(self)
    }

    fn validate(&self) -> Result<(), GluingError> {
        let n = self.f_m.n();
        if self.k < 1 || self.m < 1 || self.tors_m < 1 || self.tors_mbar < 1 {
            return Err(invalid(
                "k, m, and both torsion orders must be positive integers",
            ));
        }
        if self.iota.rows() != n {
            return Err(invalid(format!(
                "iota must have one row per dual variable ({n}), got {}",
                self.iota.rows()
            )));
        }
        match self.case {
            CaseTag::Case1 => {
                if n < 3 {
                    return Err(invalid("case 1 instances need rank n >= 3"));
                }
                self.expect_no_filled_form()?;
                self.expect_iota_cols(n - 1)?;
                for j in 0..n {
                    for k in 0..n {
                        if self.f_m.value(n - 2, j, k) != 0 {
                            return Err(invalid(
                                "case 1 requires the last row of the glued form to vanish",
                            ));
                        }
                    }
                }
            }
            CaseTag::Case2 => {
                if n < 4 {
                    return Err(invalid("case 2 instances need rank n >= 4"));
                }
                self.expect_no_filled_form()?;
                self.expect_iota_kills_last(n)?;
                for i in 0..n - 1 {
                    for j in 0..n - 1 {
                        for k in 0..n - 1 {
                            if self.f_m.value(i, j, k) != -self.f_m.value(j, i, k) {
                                return Err(invalid(
                                    "case 2 requires the bulk block to be alternating in all three slots",
                                ));
                            }
                        }
                    }
                }
                for i in 0..n - 1 {
                    for k in 0..n - 1 {
                        if self.f_m.value(i, n - 1, k) != -self.f_m.value(k, n - 1, i) {
                            return Err(invalid(
                                "case 2 requires an antisymmetric pairing block",
                            ));
                        }
                    }
                }
            }
            CaseTag::Case3 => {
                if n < 3 {
                    return Err(invalid("case 3 instances need rank n >= 3"));
                }
                let fbar = match &self.f_mbar {
                    Some(Form::Boundary(f)) => f,
                    _ => {
                        return Err(invalid(
                            "case 3 carries the filled manifold's boundary-type form",
                        ))
                    }
                };
                if fbar.n() != n - 1 {
                    return Err(invalid(format!(
                        "case 3 filled form must have rank {}, got {}",
                        n - 1,
                        fbar.n()
                    )));
                }
                self.expect_iota_kills_last(n)?;
                let ell = self
                    .ell_index
                    .ok_or_else(|| invalid("case 3 needs ell_index"))?;
                if !(1..=n - 1).contains(&ell) {
                    return Err(invalid(format!(
                        "case 3 ell_index must be in 1..={}, got {ell}",
                        n - 1
                    )));
                }
                if self.s0.is_some() {
                    return Err(invalid("only case 4 carries an orientation sign"));
                }
                let corner = self
                    .k
                    .checked_mul(self.m)
                    .ok_or_else(|| invalid("corner pairing k * m overflows"))?;
                for j in 0..n {
                    for kk in 0..n {
                        let expected = if (j, kk) == (n - 2, n - 1) {
                            corner
                        } else if (j, kk) == (n - 1, n - 2) {
                            -corner
                        } else {
                            0
                        };
                        if self.f_m.value(n - 2, j, kk) != expected {
                            return Err(invalid(
                                "case 3 last row must vanish apart from the corner pairing k * m",
                            ));
                        }
                    }
                }
                match self.m.checked_mul(self.tors_m) {
                    Some(t) if t == self.tors_mbar => {}
                    _ => {
                        return Err(invalid(
                            "case 3 torsion orders must satisfy tors_Mbar = m * tors_M",
                        ))
                    }
                }
            }
            CaseTag::Case4 => {
                if n < 3 {
                    return Err(invalid("case 4 instances need rank n >= 3"));
                }
                let fbar = match &self.f_mbar {
                    Some(Form::Closed(f)) => f,
                    _ => {
                        return Err(invalid(
                            "case 4 carries the filled manifold's closed-type form",
                        ))
                    }
                };
                if fbar.n() != n {
                    return Err(invalid(format!(
                        "case 4 filled form must have rank {n}, got {}",
                        fbar.n()
                    )));
                }
                if !is_permutation(&self.iota) {
                    return Err(invalid(
                        "case 4 push-forward must be a permutation of the dual variables",
                    ));
                }
                let ell = self
                    .ell_index
                    .ok_or_else(|| invalid("case 4 needs ell_index"))?;
                if !(1..=n).contains(&ell) {
                    return Err(invalid(format!(
                        "case 4 ell_index must be in 1..={n}, got {ell}"
                    )));
                }
                if self.s0.is_none() {
                    return Err(invalid("case 4 needs the orientation sign s0"));
                }
                match self.k.checked_mul(self.tors_mbar) {
                    Some(t) if t == self.tors_m => {}
                    _ => {
                        return Err(invalid(
                            "case 4 torsion orders must satisfy tors_M = k * tors_Mbar",
                        ))
                    }
                }
            }
        }
        Ok(())
    }

    fn expect_no_filled_form(&self) -> Result<(), GluingError> {
        if self.f_mbar.is_some() {
            return Err(invalid(
                "only cases 3 and 4 carry the filled manifold's form",
            ));
        }
        if self.ell_index.is_some() {
            return Err(invalid("only cases 3 and 4 carry ell_index"));
        }
        if self.s0.is_some() {
            return Err(invalid("only case 4 carries an orientation sign"));
        }
        Ok(())
    }

    fn expect_iota_cols(&self, cols: usize) -> Result<(), GluingError> {
        if self.iota.cols() != cols {
            return Err(invalid(format!(
                "iota must have {cols} columns, got {}",
                self.iota.cols()
            )));
        }
        Ok(())
    }

    fn expect_iota_kills_last(&self, n: usize) -> Result<(), GluingError> {
        self.expect_iota_cols(n - 1)?;
        if (0..n - 1).any(|j| self.iota.entry(n - 1, j) != 0) {
            return Err(invalid(
                "the filled direction's row of iota must vanish in this case",
            ));
        }
        Ok(())
    }

    pub fn case_tag(&self) -> CaseTag {
        self.case
    }

    /// The glued manifold's boundary form.
    pub fn glued_form(&self) -> &BoundaryForm {
        &self.f_m
    }

    /// The filled manifold's form, for the cases that carry one.
    pub fn filled_form(&self) -> Option<&Form> {
        self.f_mbar.as_ref()
    }

    /// The push-forward matrix on dual variables (rows index the glued
    /// manifold's variables).
    pub fn push_forward_matrix(&self) -> &IntMatrix {
        &self.iota
    }

    /// Torsion orders `(tors_M, tors_Mbar)` of the glued and filled
    /// manifolds.
    pub fn torsion_orders(&self) -> (i64, i64) {
        (self.tors_m, self.tors_mbar)
    }

    /// Multiplicity of the meridian class in the attaching curve.
    pub fn k(&self) -> i64 {
        self.k
    }

    /// Order of the attaching curve's class in the filled manifold's torsion.
    pub fn m(&self) -> i64 {
        self.m
    }

    /// One-based index of the distinguished dual variable entering the
    /// linear form `ell`, where a case uses one.
    pub fn ell_index(&self) -> Option<usize> {
        self.ell_index
    }

    /// Applies the push-forward to a polynomial in the glued manifold's dual
    /// variables.
    pub fn iota_star(&self, p: &IntPoly) -> Result<IntPoly, GluingError> {
        Ok(p.substitute_linear(&self.iota)?)
    }

    /// The linear form `ell = k * alpha_{ell_index}` in the filled
    /// manifold's variables.
    fn ell(&self, num_vars: usize) -> Result<IntPoly, GluingError> {
        let index = self
            .ell_index
            .ok_or_else(|| invalid("this case carries no ell_index"))?;
        Ok(IntPoly::variable(num_vars, index - 1).scaled(self.k))
    }

    /// Recomputes both sides of this instance's predicted identity and
    /// reports the outcome. Cases 3 and 4 check the torsion-weighted
    /// corollary alongside the exact identity.
    pub fn verify(&self) -> Result<GluingReport, GluingError> {
        let n = self.f_m.n();
        let d_m = det_boundary(&self.f_m, &BasisPair::standard(n, n - 1)).map_err(|source| {
            GluingError::Extraction {
                side: "glued manifold's form",
                source,
            }
        })?;
        let (lhs, rhs, torsion) = match self.case {
            CaseTag::Case1 => (d_m, IntPoly::zero(n), None),
            CaseTag::Case2 => (self.iota_star(&d_m)?, IntPoly::zero(n - 1), None),
            CaseTag::Case3 => {
                let fbar = match &self.f_mbar {
                    Some(Form::Boundary(f)) => f,
                    _ => unreachable!("validated: case 3 carries a boundary form"),
                };
                let d_bar = det_boundary(fbar, &BasisPair::standard(n - 1, n - 2)).map_err(
                    |source| GluingError::Extraction {
                        side: "filled manifold's form",
                        source,
                    },
                )?;
                let ell = self.ell(n - 1)?;
                let lhs = self.iota_star(&d_m)?;
                let rhs = -&(&ell * &d_bar).scaled(self.m);
                let t_lhs = lhs.scaled(self.tors_m);
                let t_rhs = (&ell * &d_bar).scaled(-self.tors_mbar);
                (lhs, rhs, Some((t_lhs, t_rhs)))
            }
            CaseTag::Case4 => {
                let fbar = match &self.f_mbar {
                    Some(Form::Closed(f)) => f,
                    _ => unreachable!("validated: case 4 carries a closed form"),
                };
                let d_bar = det_closed_z(fbar).map_err(|source| GluingError::Extraction {
                    side: "filled manifold's form",
                    source,
                })?;
                let sign: i64 = if n % 2 == 0 { 1 } else { -1 };
                let image_last = self.iota_star(&IntPoly::variable(n, n - 1))?;
                let lhs = self.iota_star(&d_m)?;
                let rhs = (&image_last * &d_bar).scaled(sign);
                let ell = self.ell(n)?;
                let s0 = self.s0.expect("validated: case 4 carries s0");
                let t_lhs = lhs.scaled(self.tors_m);
                let t_rhs = (&ell * &d_bar).scaled(s0.sign() * self.tors_mbar);
                (lhs, rhs, Some((t_lhs, t_rhs)))
            }
        };
        let exact_ok = lhs == rhs;
        let torsion_ok = torsion.as_ref().map(|(l, r)| l == r);
        let verdict = if exact_ok && torsion_ok != Some(false) {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        let detail = match (exact_ok, torsion_ok) {
            (true, None) => "exact identity holds".to_string(),
            (true, Some(true)) => format!(
                "exact identity and torsion-weighted corollary both hold (torsion orders {} and {})",
                self.tors_m, self.tors_mbar
            ),
            (true, Some(false)) => "exact identity holds but the torsion-weighted corollary fails".to_string(),
            (false, _) => "exact identity fails".to_string(),
        };
        Ok(GluingReport {
            case_tag: self.case,
            lhs,
            rhs,
            verdict,
            detail,
        })
    }
}

/// The JSON wire format of an instance. `k`, `m`, and the torsion orders
/// default to 1 when omitted; `f_Mbar`, `ell_index`, and `s0` are only
/// present for the cases that carry them.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GluingInstanceJson {
    case_tag: u8,
    #[serde(rename = "f_M")]
    f_m: TensorJson,
    #[serde(rename = "f_Mbar", default, skip_serializing_if = "Option::is_none")]
    f_mbar: Option<TensorJson>,
    iota: Vec<Vec<i64>>,
    #[serde(default = "unit")]
    k: i64,
    #[serde(default = "unit")]
    m: i64,
    #[serde(rename = "tors_M", default = "unit")]
    tors_m: i64,
    #[serde(rename = "tors_Mbar", default = "unit")]
    tors_mbar: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ell_index: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    s0: Option<i64>,
}

fn unit() -> i64 {
    1
}

impl TryFrom<GluingInstanceJson> for GluingInstance {
    type Error = GluingError;

    fn try_from(json: GluingInstanceJson) -> Result<Self, Self::Error> {
        let case = CaseTag::try_from(json.case_tag)?;
        let f_m = match Form::try_from(json.f_m)? {
            Form::Boundary(f) => f,
            other => {
                return Err(invalid(format!(
                    "the glued form must be boundary-type, got {}",
                    other.kind()
                )))
            }
        };
        let f_mbar = json.f_mbar.map(Form::try_from).transpose()?;
        let iota = IntMatrix::from_rows(json.iota)?;
        let s0 = json
            .s0
            .map(Orientation::from_sign)
            .transpose()
            .map_err(|_| invalid("s0 must be +1 or -1"))?;
        GluingInstance {
            case,
            f_m,
            f_mbar,
            iota,
            k: json.k,
            m: json.m,
            tors_m: json.tors_m,
            tors_mbar: json.tors_mbar,
            ell_index: json.ell_index,
            s0,
        }
        .validated()
    }
}

impl From<GluingInstance> for GluingInstanceJson {
    fn from(inst: GluingInstance) -> Self {
        GluingInstanceJson {
            case_tag: inst.case.number(),
            f_m: TensorJson::from(Form::Boundary(inst.f_m)),
            f_mbar: inst.f_mbar.map(TensorJson::from),
            iota: inst.iota.to_rows(),
            k: inst.k,
            m: inst.m,
            tors_m: inst.tors_m,
            tors_mbar: inst.tors_mbar,
            ell_index: inst.ell_index,
            s0: inst.s0.map(|o| o.sign()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn poly(text: &str, vars: usize) -> IntPoly {
        IntPoly::parse(text, vars).expect("test polynomial parses")
    }

    #[test]
    fn case3_minimal_hand_instance() {
        // fbar of rank 2 with pairing value 1, zero coupling, k = m = 1:
        // d(f_M) = -a2, both sides equal -alpha2.
        let fbar = BoundaryForm::from_skew(2, &[([0, 0, 1], 1)]).unwrap();
        let coupling = IntMatrix::new(1, 2, vec![0, 0]).unwrap();
        let inst = GluingInstance::case3(&fbar, &coupling, 1, 1, 1).unwrap();
        let d_m = det_boundary(inst.glued_form(), &BasisPair::standard(3, 2)).unwrap();
        assert_eq!(d_m, poly("-a2", 3));
        let report = inst.verify().unwrap();
        assert!(report.passed(), "{}", report.detail);
        assert_eq!(report.lhs, poly("-a2", 2));
        assert_eq!(report.rhs, poly("-a2", 2));
    }

    #[test]
    fn case4_levi_civita_hand_instance() {
        let fbar = crate::forms::levi_civita_3(1);
        let inst = GluingInstance::case4(&fbar, 2, 3).unwrap();
        assert_eq!(inst.torsion_orders(), (6, 3));
        let report = inst.verify().unwrap();
        assert!(report.passed(), "{}", report.detail);
        assert_eq!(report.lhs, poly("-a3", 3));
        assert_eq!(report.rhs, poly("-a3", 3));
    }

    #[test]
    fn random_instances_verify_in_every_case() {
        let mut rng = StdRng::seed_from_u64(0x91e);
        for trial in 0..10 {
            for (case, inst) in [
                (1, crate::random::case1_instance(4, 3, &mut rng)),
                (2, crate::random::case2_instance(4, 3, &mut rng)),
                (3, crate::random::case3_instance(4, 3, &mut rng)),
                (4, crate::random::case4_instance(4, 3, &mut rng)),
            ] {
                let report = inst.verify().unwrap();
                assert!(
                    report.passed(),
                    "case {case} trial {trial}: {}",
                    report.detail
                );
                assert_eq!(report.case_tag.number(), case);
            }
        }
    }

    #[test]
    fn case2_determinant_is_nonzero_before_push_forward() {
        // The push-forward kills the determinant, not the determinant itself.
        // That only has content from rank 5 on (see the companion test), so
        // sample rank 5 and insist on finding an instance with d != 0.
        let mut rng = StdRng::seed_from_u64(7);
        let mut saw_nonzero = false;
        for _ in 0..10 {
            let inst = crate::random::case2_instance(5, 3, &mut rng);
            let d =
                det_boundary(inst.glued_form(), &BasisPair::standard(5, 4)).unwrap();
            if !d.is_zero() {
                saw_nonzero = true;
                assert!(inst.iota_star(&d).unwrap().is_zero());
            }
        }
        assert!(saw_nonzero, "every sampled case-2 determinant vanished");
    }

    #[test]
    fn case2_rank4_determinant_vanishes_outright() {
        // At rank 4 the case-2 determinant is identically zero, not merely
        // killed by the push-forward: the bulk-plus-pairing block assembles
        // into an odd-size antisymmetric matrix Theta with Theta * a = -a4 * w,
        // whose adjugate is a rank-one product v * v^T with v in its kernel,
        // so every replaced-column minor contains the factor v . w =
        // -(v^T Theta a) / a4 = 0. From rank 5 on the analogous matrix has
        // even size and the determinant is generically nonzero.
        let mut rng = StdRng::seed_from_u64(8);
        for _ in 0..10 {
            let inst = crate::random::case2_instance(4, 3, &mut rng);
            let d =
                det_boundary(inst.glued_form(), &BasisPair::standard(4, 3)).unwrap();
            assert!(d.is_zero());
        }
    }

    #[test]
    fn classification_covers_the_case_table() {
        assert_eq!(classify_case(1, false, 5, 4).unwrap(), CaseTag::Case1);
        assert_eq!(classify_case(2, false, 5, 4).unwrap(), CaseTag::Case3);
        assert_eq!(classify_case(1, true, 5, 4).unwrap(), CaseTag::Case2);
        assert_eq!(classify_case(1, true, 5, 5).unwrap(), CaseTag::Case4);
        assert!(matches!(
            classify_case(0, false, 5, 4),
            Err(GluingError::VacuousCase)
        ));
        assert!(matches!(
            classify_case(3, false, 5, 4),
            Err(GluingError::InvalidInput(_))
        ));
        assert!(matches!(
            classify_case(1, true, 5, 3),
            Err(GluingError::InvalidInput(_))
        ));
    }

    #[test]
    fn instances_roundtrip_through_json() {
        let mut rng = StdRng::seed_from_u64(0x150);
        for inst in [
            crate::random::case1_instance(4, 3, &mut rng),
            crate::random::case2_instance(5, 2, &mut rng),
            crate::random::case3_instance(4, 3, &mut rng),
            crate::random::case4_instance(3, 2, &mut rng),
        ] {
            let text = serde_json::to_string(&inst).unwrap();
            let back: GluingInstance = serde_json::from_str(&text).unwrap();
            assert_eq!(back, inst);
        }
    }

    #[test]
    fn tampered_instances_are_rejected() {
        let mut rng = StdRng::seed_from_u64(0xbe11);
        let inst = crate::random::case3_instance(3, 2, &mut rng);
        let mut value = serde_json::to_value(&inst).unwrap();

        // Corner pairing no longer equals k * m.
        value["k"] = serde_json::json!(5);
        assert!(serde_json::from_value::<GluingInstance>(value.clone()).is_err());

        // Torsion relation broken.
        value["k"] = serde_json::json!(1);
        value["tors_Mbar"] = serde_json::json!(9999);
        assert!(serde_json::from_value::<GluingInstance>(value.clone()).is_err());

        // Unknown fields are rejected outright.
        value["tors_Mbar"] = serde_json::to_value(inst.torsion_orders().1).unwrap();
        value["surprise"] = serde_json::json!(1);
        assert!(serde_json::from_value::<GluingInstance>(value).is_err());

        // Case 4 with a non-permutation push-forward.
        let inst4 = crate::random::case4_instance(3, 2, &mut rng);
        let mut value4 = serde_json::to_value(&inst4).unwrap();
        value4["iota"] = serde_json::json!([[1, 0, 0], [0, 1, 0], [0, 1, 0]]);
        assert!(serde_json::from_value::<GluingInstance>(value4).is_err());
    }

    #[test]
    fn report_serializes_with_canonical_polynomial_text() {
        let fbar = crate::forms::levi_civita_3(1);
        let inst = GluingInstance::case4(&fbar, 1, 1).unwrap();
        let report = inst.verify().unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["case_tag"], 4);
        assert_eq!(json["lhs"], "-a3");
        assert_eq!(json["rhs"], "-a3");
        assert_eq!(json["verdict"], "pass");
    }

    #[test]
    fn mismatched_identity_reports_fail_not_error() {
        // Hand-build a case-1 instance, then corrupt it into claiming case 2
        // semantics is not possible through validation; instead check that a
        // legitimate instance whose identity is broken by edited tensor data
        // fails verification. Case 3 with an edited filled form does this:
        // the filled form is consistent data but predicts a different rhs.
        let fbar = BoundaryForm::from_skew(2, &[([0, 0, 1], 1)]).unwrap();
        let coupling = IntMatrix::new(1, 2, vec![0, 0]).unwrap();
        let inst = GluingInstance::case3(&fbar, &coupling, 1, 1, 1).unwrap();
        let mut value = serde_json::to_value(&inst).unwrap();
        // Replace the filled form by one with pairing value 2; the embedded
        // copy inside f_M still has pairing value 1.
        value["f_Mbar"]["entries"] = serde_json::json!([
            { "idx": [1, 1, 2], "val": 2 },
            { "idx": [1, 2, 1], "val": -2 }
        ]);
        let tampered: GluingInstance = serde_json::from_value(value).unwrap();
        let report = tampered.verify().unwrap();
        assert!(!report.passed());
        assert_eq!(report.detail, "exact identity fails");
    }
}
