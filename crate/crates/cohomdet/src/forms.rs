//! Validated input tensors and their theta matrices.
//!
//! Three kinds of integer tensor enter the determinant machinery:
//!
//! * [`ClosedForm`] — a fully alternating trilinear form `f(x, y, z)` on a
//!   rank-`n` free module (`n >= 3`), the shape of a triple cup product on
//!   the first cohomology of a closed oriented 3-manifold;
//! * [`BoundaryForm`] — a trilinear form `f(b, x, y)` whose first slot comes
//!   from a rank-`n-1` module and which is skew in its last two slots
//!   (`n >= 2`), the shape carried by a manifold whose boundary has positive
//!   genus;
//! * [`MasseyForm`] — an order-`m` generalization `f(b, x1, ..., x_{m+1})`
//!   subject to the vanishing of the full contraction [`massey_f0`], the
//!   hypothesis under which a common determinant exists at all.
//!
//! Tensors are stored densely and validated exhaustively at construction, so
//! a value of one of these types is always a legitimate input downstream.
//! Each form knows how to build its theta matrix over `Z[a1..an]` for a
//! chosen pair of bases; determinant extraction from those matrices lives in
//! [`crate::det`].
//!
//! Entries of theta are expressed in the dual coordinates of the *standard*
//! basis, printed `a1 .. an`. Chosen bases enter only through the vectors
//! they supply; this keeps every polynomial in one fixed coordinate system
//! no matter which bases are in play.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::det::BasisPair;
use crate::polyring::{IntPoly, PolyError, PolyMatrix};

/// Errors raised while validating or deserializing a form tensor.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormError {
    /// The rank is below the minimum for the requested kind.
    #[error("rank {n} is too small for a {kind} form (minimum {min})")]
    RankTooSmall {
        kind: &'static str,
        n: usize,
        min: usize,
    },
    /// The Massey order `m` must be at least 1.
    #[error("massey order must be at least 1")]
    OrderTooSmall,
    /// A dense tensor had the wrong number of entries.
    #[error("tensor has {got} entries, expected {expected}")]
    TensorSize { expected: usize, got: usize },
    /// An alternating-symmetry check failed. Indices are 1-based, matching
    /// the JSON interchange format; `swap` names the two slots (1-based)
    /// whose transposition is violated.
    #[error("tensor is not alternating at index {index:?}: swapping slots {} and {} does not negate the entry", swap.0, swap.1)]
    NotAlternating {
        index: Vec<usize>,
        swap: (usize, usize),
    },
    /// Skew-symmetry in the last two slots failed. Indices are 1-based.
    #[error("tensor is not skew in its last two slots at index {index:?}")]
    NotSkew { index: Vec<usize> },
    /// The full Massey contraction `f0` is nonzero, so no common determinant
    /// can exist. `row` is the 1-based first-slot index of the first nonzero
    /// contraction.
    #[error("massey hypothesis fails: f0 is nonzero at row {row} (f0 = {value})")]
    F0Nonzero { row: usize, value: String },
    /// A sparse entry index has the wrong arity or is out of range
    /// (1-based).
    #[error("entry index {index:?} is invalid: {reason}")]
    BadIndex { index: Vec<usize>, reason: String },
    /// The same index appears twice in a sparse entry list.
    #[error("duplicate entry index {index:?}")]
    DuplicateIndex { index: Vec<usize> },
    /// The `kind` field of a tensor file was not recognized.
    #[error("unknown form kind `{0}` (expected closed, boundary, or massey)")]
    UnknownKind(String),
    /// The `m` field is required for massey tensors and forbidden otherwise.
    #[error("{0}")]
    OrderField(String),
    /// A basis matrix does not match the form's module ranks.
    #[error("basis has wrong shape: {0}")]
    BasisShape(String),
    /// Arithmetic failure bubbled up from the polynomial layer.
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Enumerates all `len`-tuples over `0..n` in lexicographic order.
fn tuples(n: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.pow(len as u32);
    (0..total).map(move |code| {
        let mut tuple = vec![0usize; len];
        let mut rest = code;
        for slot in (0..len).rev() {
            tuple[slot] = rest % n;
            rest /= n;
        }
        tuple
    })
}

/// A fully alternating integer trilinear form on a rank-`n` module, `n >= 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    n: usize,
    tensor: Vec<i64>,
}

impl ClosedForm {
    /// Validates a dense row-major `n x n x n` tensor.
    ///
    /// Checks the two adjacent-slot transpositions at every index; together
    /// they generate the full symmetric group on three slots, so this is an
    /// exhaustive alternation check (and forces zeros on repeated indices).
    pub fn new(n: usize, tensor: Vec<i64>) -> Result<Self, FormError> {
        if n < 3 {
            return Err(FormError::RankTooSmall {
                kind: "closed",
                n,
                min: 3,
            });
        }
        if tensor.len() != n * n * n {
            return Err(FormError::TensorSize {
                expected: n * n * n,
                got: tensor.len(),
            });
        }
        let at = |i: usize, j: usize, k: usize| tensor[(i * n + j) * n + k];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if at(j, i, k) != -at(i, j, k) {
                        return Err(FormError::NotAlternating {
                            index: vec![i + 1, j + 1, k + 1],
                            swap: (1, 2),
                        });
                    }
                    if at(i, k, j) != -at(i, j, k) {
                        return Err(FormError::NotAlternating {
                            index: vec![i + 1, j + 1, k + 1],
                            swap: (2, 3),
                        });
                    }
                }
            }
        }
        Ok(ClosedForm { n, tensor })
    }

    /// Builds the alternating form generated by values on strictly increasing
    /// triples: each `([i, j, k], v)` with `i < j < k` (zero-based) sets all
    /// six signed permutations.
    pub fn from_alternating(n: usize, entries: &[([usize; 3], i64)]) -> Result<Self, FormError> {
        if n < 3 {
            return Err(FormError::RankTooSmall {
                kind: "closed",
                n,
                min: 3,
            });
        }
        let mut tensor = vec![0i64; n * n * n];
        for &([i, j, k], v) in entries {
            if !(i < j && j < k && k < n) {
                return Err(FormError::BadIndex {
                    index: vec![i + 1, j + 1, k + 1],
                    reason: "generator triples must be strictly increasing and in range".into(),
                });
            }
            // (perm, sign) over the six permutations of (i, j, k).
            let perms: [([usize; 3], i64); 6] = [
                ([i, j, k], 1),
                ([j, k, i], 1),
                ([k, i, j], 1),
                ([j, i, k], -1),
                ([i, k, j], -1),
                ([k, j, i], -1),
            ];
            for ([p, q, r], sign) in perms {
                tensor[(p * n + q) * n + r] += sign * v;
            }
        }
        ClosedForm::new(n, tensor)
    }

    /// Rank of the underlying module.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Tensor entry `f(e_i, e_j, e_k)` (zero-based).
    pub fn value(&self, i: usize, j: usize, k: usize) -> i64 {
        assert!(i < self.n && j < self.n && k < self.n, "index out of range");
        self.tensor[(i * self.n + j) * self.n + k]
    }

    /// The dense tensor, row-major.
    pub fn tensor(&self) -> &[i64] {
        &self.tensor
    }

    /// The theta matrix for a pair of rank-`n` bases: entry `(i, j)` is the
    /// degree-1 polynomial `sum_k f(a_i, b_j, e_k) * a_k` in standard dual
    /// coordinates, where `a_i` runs over the rows of `bases.a` and `b_j`
    /// over the rows of `bases.b`.
    pub fn theta(&self, bases: &BasisPair) -> Result<PolyMatrix, FormError> {
        let n = self.n;
        if bases.a().rows() != n || bases.a().cols() != n {
            return Err(FormError::BasisShape(format!(
                "first basis must be {n}x{n} for a closed form of rank {n}"
            )));
        }
        if bases.b().rows() != n || bases.b().cols() != n {
            return Err(FormError::BasisShape(format!(
                "second basis must be {n}x{n} for a closed form of rank {n}"
            )));
        }
        let matrix = PolyMatrix::from_fn(n, n, n, |i, j| {
            let mut entry = IntPoly::zero(n);
            for k in 0..n {
                let mut coeff: i128 = 0;
                for p in 0..n {
                    let ap = bases.a().entry(i, p);
                    if ap == 0 {
                        continue;
                    }
                    for q in 0..n {
                        let bq = bases.b().entry(j, q);
                        if bq != 0 {
                            coeff += i128::from(ap)
                                * i128::from(bq)
                                * i128::from(self.value(p, q, k));
                        }
                    }
                }
                if coeff != 0 {
                    let c = i64::try_from(coeff).expect("theta coefficient overflowed i64");
                    entry += &IntPoly::variable(n, k).scaled(c);
                }
            }
            entry
        })?;
        Ok(matrix)
    }

    /// The boundary-type form obtained by restricting the first slot to the
    /// first `n - 1` basis directions (the shape that arises when a single
    /// boundary torus is filled in: the relative classes map onto the first
    /// `n - 1` absolute ones).
    pub fn boundary_restriction(&self) -> BoundaryForm {
        let n = self.n;
        let mut tensor = vec![0i64; (n - 1) * n * n];
        for x in 0..n - 1 {
            for j in 0..n {
                for k in 0..n {
                    tensor[(x * n + j) * n + k] = self.value(x, j, k);
                }
            }
        }
        BoundaryForm::new(n, tensor).expect("restriction of an alternating form is skew")
    }
}

/// An integer trilinear form `f(b, x, y)`, skew in its last two slots, whose
/// first slot ranges over a rank-`n-1` module and whose last two range over a
/// rank-`n` module, `n >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryForm {
    n: usize,
    tensor: Vec<i64>,
}

impl BoundaryForm {
    /// Validates a dense row-major `(n-1) x n x n` tensor.
    pub fn new(n: usize, tensor: Vec<i64>) -> Result<Self, FormError> {
        if n < 2 {
            return Err(FormError::RankTooSmall {
                kind: "boundary",
                n,
                min: 2,
            });
        }
        if tensor.len() != (n - 1) * n * n {
            return Err(FormError::TensorSize {
                expected: (n - 1) * n * n,
                got: tensor.len(),
            });
        }
        let at = |x: usize, j: usize, k: usize| tensor[(x * n + j) * n + k];
        for x in 0..n - 1 {
            for j in 0..n {
                for k in 0..n {
                    if at(x, k, j) != -at(x, j, k) {
                        return Err(FormError::NotSkew {
                            index: vec![x + 1, j + 1, k + 1],
                        });
                    }
                }
            }
        }
        Ok(BoundaryForm { n, tensor })
    }

    /// Builds the skew form generated by values on ordered pairs: each
    /// `([x, j, k], v)` with `j < k` (zero-based) sets `f(b_x, e_j, e_k) = v`
    /// and `f(b_x, e_k, e_j) = -v`.
    pub fn from_skew(n: usize, entries: &[([usize; 3], i64)]) -> Result<Self, FormError> {
        if n < 2 {
            return Err(FormError::RankTooSmall {
                kind: "boundary",
                n,
                min: 2,
            });
        }
        let mut tensor = vec![0i64; (n - 1) * n * n];
        for &([x, j, k], v) in entries {
            if !(x < n - 1 && j < k && k < n) {
                return Err(FormError::BadIndex {
                    index: vec![x + 1, j + 1, k + 1],
                    reason: "generator entries need x < n-1 and j < k <= n-1 (zero-based)".into(),
                });
            }
            tensor[(x * n + j) * n + k] += v;
            tensor[(x * n + k) * n + j] -= v;
        }
        BoundaryForm::new(n, tensor)
    }

    /// Rank `n` of the module carrying the last two slots; the first slot has
    /// rank `n - 1`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Tensor entry `f(b_x, e_j, e_k)` (zero-based; `x < n - 1`).
    pub fn value(&self, x: usize, j: usize, k: usize) -> i64 {
        assert!(
            x < self.n - 1 && j < self.n && k < self.n,
            "index out of range"
        );
        self.tensor[(x * self.n + j) * self.n + k]
    }

    /// The dense tensor, row-major.
    pub fn tensor(&self) -> &[i64] {
        &self.tensor
    }

    /// The `(n-1) x n` theta matrix: entry `(i, j)` is
    /// `sum_k f(b_i, a_j, e_k) * a_k`, with `b_i` over the rows of `bases.b`
    /// (rank `n-1`) and `a_j` over the rows of `bases.a` (rank `n`).
    pub fn theta(&self, bases: &BasisPair) -> Result<PolyMatrix, FormError> {
        let n = self.n;
        check_boundary_bases(bases, n)?;
        let matrix = PolyMatrix::from_fn(n - 1, n, n, |i, j| {
            let mut entry = IntPoly::zero(n);
            for k in 0..n {
                let mut coeff: i128 = 0;
                for u in 0..n - 1 {
                    let bu = bases.b().entry(i, u);
                    if bu == 0 {
                        continue;
                    }
                    for p in 0..n {
                        let ap = bases.a().entry(j, p);
                        if ap != 0 {
                            coeff += i128::from(bu)
                                * i128::from(ap)
                                * i128::from(self.value(u, p, k));
                        }
                    }
                }
                if coeff != 0 {
                    let c = i64::try_from(coeff).expect("theta coefficient overflowed i64");
                    entry += &IntPoly::variable(n, k).scaled(c);
                }
            }
            entry
        })?;
        Ok(matrix)
    }
}

fn check_boundary_bases(bases: &BasisPair, n: usize) -> Result<(), FormError> {
    if bases.a().rows() != n || bases.a().cols() != n {
        return Err(FormError::BasisShape(format!(
            "first basis must be {n}x{n} for a form of rank {n}"
        )));
    }
    if bases.b().rows() != n - 1 || bases.b().cols() != n - 1 {
        return Err(FormError::BasisShape(format!(
            "second basis must be {}x{} for a form of rank {n}",
            n - 1,
            n - 1
        )));
    }
    Ok(())
}

/// The full contraction of a raw Massey tensor with dual monomials:
/// `f0(b_x) = sum f(b_x, e_{i1}, ..., e_{i_{m+1}}) * a_{i1} * ... * a_{i_{m+1}}`.
///
/// A Massey tensor admits a common determinant exactly when every one of
/// these `n - 1` polynomials vanishes, so [`MasseyForm::new`] rejects any
/// tensor for which some row is nonzero. The contraction is
/// basis-independent, which is why evaluating it on the standard basis is a
/// complete check.
pub fn massey_f0(tensor: &[i64], n: usize, m: usize) -> Result<Vec<IntPoly>, FormError> {
    if n < 2 {
        return Err(FormError::RankTooSmall {
            kind: "massey",
            n,
            min: 2,
        });
    }
    if m < 1 {
        return Err(FormError::OrderTooSmall);
    }
    let slot_count = m + 1;
    let stride = n.pow(slot_count as u32);
    let expected = (n - 1) * stride;
    if tensor.len() != expected {
        return Err(FormError::TensorSize {
            expected,
            got: tensor.len(),
        });
    }
    let mut rows = Vec::with_capacity(n - 1);
    for x in 0..n - 1 {
        let mut acc = IntPoly::zero(n);
        for (code, tuple) in tuples(n, slot_count).enumerate() {
            let v = tensor[x * stride + code];
            if v != 0 {
                let mut exps = vec![0u32; n];
                for &slot in &tuple {
                    exps[slot] += 1;
                }
                acc += &IntPoly::monomial(n, &exps, v);
            }
        }
        rows.push(acc);
    }
    Ok(rows)
}

/// An order-`m` Massey-type form: `f(b, x1, ..., x_{m+1})` with the first
/// slot over a rank-`n-1` module, the remaining `m+1` slots over a rank-`n`
/// module, and every full contraction [`massey_f0`] equal to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MasseyForm {
    n: usize,
    m: usize,
    tensor: Vec<i64>,
}

impl MasseyForm {
    /// Validates a dense row-major `(n-1) x n^(m+1)` tensor, including the
    /// symbolic vanishing of all `f0` contractions.
    pub fn new(n: usize, m: usize, tensor: Vec<i64>) -> Result<Self, FormError> {
        let rows = massey_f0(&tensor, n, m)?;
        if let Some((x, value)) = rows.iter().enumerate().find(|(_, p)| !p.is_zero()) {
            return Err(FormError::F0Nonzero {
                row: x + 1,
                value: value.to_string(),
            });
        }
        Ok(MasseyForm { n, m, tensor })
    }

    /// Reinterprets a boundary form as the order-1 Massey form with the same
    /// tensor (the two storage layouts coincide, and skewness in the last two
    /// slots is exactly the vanishing of `f0`).
    pub fn from_boundary(form: &BoundaryForm) -> MasseyForm {
        MasseyForm::new(form.n(), 1, form.tensor().to_vec())
            .expect("a skew tensor has zero f0 contractions")
    }

    /// Rank `n` of the module carrying the last `m+1` slots.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The Massey order `m >= 1`.
    pub fn m(&self) -> usize {
        self.m
    }

    /// The dense tensor, row-major.
    pub fn tensor(&self) -> &[i64] {
        &self.tensor
    }

    /// Tensor entry `f(b_x, e_{ks[0]}, ..., e_{ks[m]})` (zero-based).
    pub fn value(&self, x: usize, ks: &[usize]) -> i64 {
        assert_eq!(ks.len(), self.m + 1, "need m+1 module indices");
        assert!(x < self.n - 1, "first-slot index out of range");
        let mut code = 0usize;
        for &k in ks {
            assert!(k < self.n, "module index out of range");
            code = code * self.n + k;
        }
        self.tensor[x * self.n.pow((self.m + 1) as u32) + code]
    }

    /// The `(n-1) x n` theta matrix with degree-`m` entries: entry `(i, j)`
    /// is `sum f(b_i, a_j, e_{k1}, ..., e_{km}) * a_{k1} * ... * a_{km}`.
    ///
    /// The defining sum is independent of the basis used to expand it (see
    /// the basis-independence test), so entries are computed by expanding
    /// over the standard basis regardless of `bases`; the chosen bases enter
    /// through the vectors `b_i` and `a_j` only.
    pub fn theta(&self, bases: &BasisPair) -> Result<PolyMatrix, FormError> {
        let n = self.n;
        let m = self.m;
        check_boundary_bases(bases, n)?;
        let tail = n.pow(m as u32);
        let matrix = PolyMatrix::from_fn(n - 1, n, n, |i, j| {
            let mut entry = IntPoly::zero(n);
            for (code, tuple) in tuples(n, m).enumerate() {
                let mut coeff: i128 = 0;
                for u in 0..n - 1 {
                    let bu = bases.b().entry(i, u);
                    if bu == 0 {
                        continue;
                    }
                    for p in 0..n {
                        let ap = bases.a().entry(j, p);
                        if ap != 0 {
                            // Slot layout: first module index is the column
                            // argument, the trailing m indices are the tuple.
                            let v = self.tensor
                                [u * (n * tail) + p * tail + code];
                            coeff += i128::from(bu) * i128::from(ap) * i128::from(v);
                        }
                    }
                }
                if coeff != 0 {
                    let mut exps = vec![0u32; n];
                    for &slot in &tuple {
                        exps[slot] += 1;
                    }
                    let c = i64::try_from(coeff).expect("theta coefficient overflowed i64");
                    entry += &IntPoly::monomial(n, &exps, c);
                }
            }
            entry
        })?;
        Ok(matrix)
    }
}

/// Any validated form, tagged by kind — the payload of tensor files and
/// corpus entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TensorJson", into = "TensorJson")]
pub enum Form {
    Closed(ClosedForm),
    Boundary(BoundaryForm),
    Massey(MasseyForm),
}

impl Form {
    pub fn kind(&self) -> &'static str {
        match self {
            Form::Closed(_) => "closed",
            Form::Boundary(_) => "boundary",
            Form::Massey(_) => "massey",
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Form::Closed(f) => f.n(),
            Form::Boundary(f) => f.n(),
            Form::Massey(f) => f.n(),
        }
    }
}

/// The JSON interchange schema for form tensors.
///
/// ```json
/// {
///   "kind": "closed" | "boundary" | "massey",
///   "n": 3,
///   "m": 2,                         // massey only
///   "entries": [ { "idx": [1, 2, 3], "val": 1 }, ... ]
/// }
/// ```
///
/// Indices are 1-based. Omitted entries are zero; entries may appear in any
/// order; a duplicated index is an error.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorJson {
    pub kind: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub entries: Vec<TensorEntryJson>,
}

/// One sparse tensor entry: 1-based index vector and integer value.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorEntryJson {
    pub idx: Vec<usize>,
    pub val: i64,
}

/// Fills a dense tensor from sparse 1-based entries.
///
/// `slot_ranks[s]` is the rank of slot `s`; indices must satisfy
/// `1 <= idx[s] <= slot_ranks[s]`. Duplicate indices are rejected even when
/// the values agree.
fn dense_from_entries(
    slot_ranks: &[usize],
    entries: &[TensorEntryJson],
) -> Result<Vec<i64>, FormError> {
    let size: usize = slot_ranks.iter().product();
    let mut tensor = vec![0i64; size];
    let mut seen = vec![false; size];
    for entry in entries {
        if entry.idx.len() != slot_ranks.len() {
            return Err(FormError::BadIndex {
                index: entry.idx.clone(),
                reason: format!("expected {} indices", slot_ranks.len()),
            });
        }
        let mut code = 0usize;
        for (slot, (&ix, &rank)) in entry.idx.iter().zip(slot_ranks).enumerate() {
            if ix == 0 || ix > rank {
                return Err(FormError::BadIndex {
                    index: entry.idx.clone(),
                    reason: format!("slot {} must lie in 1..={rank}", slot + 1),
                });
            }
            code = code * rank + (ix - 1);
        }
        if seen[code] {
            return Err(FormError::DuplicateIndex {
                index: entry.idx.clone(),
            });
        }
        seen[code] = true;
        tensor[code] = entry.val;
    }
    Ok(tensor)
}

/// Emits the nonzero entries of a dense tensor as sparse 1-based entries in
/// lexicographic index order (deterministic for a given tensor).
fn entries_from_dense(slot_ranks: &[usize], tensor: &[i64]) -> Vec<TensorEntryJson> {
    let mut out = Vec::new();
    for (code, &val) in tensor.iter().enumerate() {
        if val == 0 {
            continue;
        }
        let mut idx = vec![0usize; slot_ranks.len()];
        let mut rest = code;
        for slot in (0..slot_ranks.len()).rev() {
            idx[slot] = rest % slot_ranks[slot] + 1;
            rest /= slot_ranks[slot];
        }
        out.push(TensorEntryJson { idx, val });
    }
    out
}

impl TryFrom<TensorJson> for Form {
    type Error = FormError;

    fn try_from(json: TensorJson) -> Result<Self, Self::Error> {
        let n = json.n;
        match json.kind.as_str() {
            "closed" => {
                if json.m.is_some() {
                    return Err(FormError::OrderField(
                        "field `m` is only valid for massey tensors".into(),
                    ));
                }
                if n < 3 {
                    return Err(FormError::RankTooSmall {
                        kind: "closed",
                        n,
                        min: 3,
                    });
                }
                let tensor = dense_from_entries(&[n, n, n], &json.entries)?;
                Ok(Form::Closed(ClosedForm::new(n, tensor)?))
            }
            "boundary" => {
                if json.m.is_some() {
                    return Err(FormError::OrderField(
                        "field `m` is only valid for massey tensors".into(),
                    ));
                }
                if n < 2 {
                    return Err(FormError::RankTooSmall {
                        kind: "boundary",
                        n,
                        min: 2,
                    });
                }
                let tensor = dense_from_entries(&[n - 1, n, n], &json.entries)?;
                Ok(Form::Boundary(BoundaryForm::new(n, tensor)?))
            }
            "massey" => {
                let m = json.m.ok_or_else(|| {
                    FormError::OrderField("massey tensors require the field `m`".into())
                })?;
                if n < 2 {
                    return Err(FormError::RankTooSmall {
                        kind: "massey",
                        n,
                        min: 2,
                    });
                }
                if m < 1 {
                    return Err(FormError::OrderTooSmall);
                }
                let mut ranks = vec![n - 1];
                ranks.extend(std::iter::repeat_n(n, m + 1));
                let tensor = dense_from_entries(&ranks, &json.entries)?;
                Ok(Form::Massey(MasseyForm::new(n, m, tensor)?))
            }
            other => Err(FormError::UnknownKind(other.to_string())),
        }
    }
}

impl From<Form> for TensorJson {
    fn from(form: Form) -> Self {
        match form {
            Form::Closed(f) => TensorJson {
                kind: "closed".into(),
                n: f.n(),
                m: None,
                entries: entries_from_dense(&[f.n(), f.n(), f.n()], f.tensor()),
            },
            Form::Boundary(f) => TensorJson {
                kind: "boundary".into(),
                n: f.n(),
                m: None,
                entries: entries_from_dense(&[f.n() - 1, f.n(), f.n()], f.tensor()),
            },
            Form::Massey(f) => {
                let mut ranks = vec![f.n() - 1];
                ranks.extend(std::iter::repeat_n(f.n(), f.m() + 1));
                TensorJson {
                    kind: "massey".into(),
                    n: f.n(),
                    m: Some(f.m()),
                    entries: entries_from_dense(&ranks, f.tensor()),
                }
            }
        }
    }
}

/// The rank-3 Levi-Civita form scaled by `c`: `f(e_i, e_j, e_k) = c *
/// sign(ijk)`. The `c = 1` case is the triple cup product of the 3-torus.
pub fn levi_civita_3(c: i64) -> ClosedForm {
    ClosedForm::from_alternating(3, &[([0, 1, 2], c)]).expect("levi-civita is alternating")
}

#[cfg(test)]
// Tests spell tensor offsets as explicit layout arithmetic, zeros included.
#[allow(clippy::identity_op, clippy::erasing_op)]
mod tests {
    use super::*;
    use crate::det::BasisPair;
    use crate::polyring::IntMatrix;

    fn poly(text: &str, vars: usize) -> IntPoly {
        IntPoly::parse(text, vars).expect("test polynomial parses")
    }

    #[test]
    fn levi_civita_is_alternating_and_scaled() {
        let f = levi_civita_3(2);
        assert_eq!(f.value(0, 1, 2), 2);
        assert_eq!(f.value(1, 0, 2), -2);
        assert_eq!(f.value(2, 0, 1), 2);
        assert_eq!(f.value(0, 0, 2), 0);
    }

    #[test]
    fn closed_validation_rejects_repeated_index_value() {
        // f(e1, e1, e2) = 1 cannot be alternating.
        let mut tensor = vec![0i64; 27];
        tensor[(0 * 3 + 0) * 3 + 1] = 1;
        let err = ClosedForm::new(3, tensor).unwrap_err();
        match err {
            FormError::NotAlternating { index, .. } => assert_eq!(index, vec![1, 1, 2]),
            other => panic!("expected NotAlternating, got {other:?}"),
        }
    }

    #[test]
    fn closed_validation_rejects_same_sign_swap() {
        // f(e1,e2,e3) = 1 and f(e2,e1,e3) = 1 violate the (1,2) swap.
        let mut tensor = vec![0i64; 27];
        tensor[(0 * 3 + 1) * 3 + 2] = 1;
        tensor[(1 * 3 + 0) * 3 + 2] = 1;
        let err = ClosedForm::new(3, tensor).unwrap_err();
        assert!(matches!(err, FormError::NotAlternating { .. }));
    }

    #[test]
    fn closed_rank_minimum_is_three() {
        assert!(matches!(
            ClosedForm::new(2, vec![0; 8]),
            Err(FormError::RankTooSmall { min: 3, .. })
        ));
    }

    #[test]
    fn boundary_validation_accepts_skew_and_rejects_diagonal() {
        let ok = BoundaryForm::from_skew(2, &[([0, 0, 1], 5)]).unwrap();
        assert_eq!(ok.value(0, 0, 1), 5);
        assert_eq!(ok.value(0, 1, 0), -5);

        let mut tensor = vec![0i64; 1 * 2 * 2];
        tensor[0] = 1; // f(b1, a1, a1) = 1
        let err = BoundaryForm::new(2, tensor).unwrap_err();
        match err {
            FormError::NotSkew { index } => assert_eq!(index, vec![1, 1, 1]),
            other => panic!("expected NotSkew, got {other:?}"),
        }
    }

    #[test]
    fn theta_closed_levi_civita_standard_is_the_pinned_matrix() {
        let f = levi_civita_3(1);
        let bases = BasisPair::standard(3, 3);
        let theta = f.theta(&bases).unwrap();
        let expect = [
            ["0", "a3", "-a2"],
            ["-a3", "0", "a1"],
            ["a2", "-a1", "0"],
        ];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(theta.entry(i, j), &poly(expect[i][j], 3), "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn theta_closed_diagonal_vanishes_for_equal_bases() {
        // g(x, x) = 0 by alternation, for any alternating form and basis.
        let f = ClosedForm::from_alternating(4, &[([0, 1, 2], 3), ([0, 1, 3], -2), ([1, 2, 3], 7)])
            .unwrap();
        let p = IntMatrix::from_rows(vec![
            vec![1, 2, 0, 0],
            vec![0, 1, 0, 0],
            vec![3, 0, 1, 0],
            vec![1, 1, 0, 1],
        ])
        .unwrap();
        let bases = BasisPair::new(p.clone(), p).unwrap();
        let theta = f.theta(&bases).unwrap();
        for i in 0..4 {
            assert!(theta.entry(i, i).is_zero(), "diagonal entry {i}");
        }
    }

    #[test]
    fn theta_transforms_by_left_and_right_transition_matrices() {
        let f = ClosedForm::from_alternating(4, &[([0, 1, 2], 1), ([1, 2, 3], -2), ([0, 2, 3], 5)])
            .unwrap();
        let p = IntMatrix::from_rows(vec![
            vec![1, 0, 0, 0],
            vec![2, 1, 0, 0],
            vec![0, 0, 0, -1],
            vec![0, 0, 1, 1],
        ])
        .unwrap();
        let q = IntMatrix::from_rows(vec![
            vec![0, 1, 0, 0],
            vec![-1, 0, 0, 0],
            vec![0, 3, 1, 0],
            vec![0, 0, 0, 1],
        ])
        .unwrap();
        let std = BasisPair::standard(4, 4);
        let moved = BasisPair::new(p.clone(), q.clone()).unwrap();
        let theta_std = f.theta(&std).unwrap();
        let theta_moved = f.theta(&moved).unwrap();
        let predicted = theta_std
            .int_mul_left(&p)
            .unwrap()
            .int_mul_right(&q.transpose())
            .unwrap();
        assert_eq!(theta_moved, predicted);
    }

    #[test]
    fn theta_boundary_rank2_pinned_example() {
        // f(b1, a1, a2) = D gives theta = [D*a2, -D*a1].
        let f = BoundaryForm::from_skew(2, &[([0, 0, 1], 7)]).unwrap();
        let theta = f.theta(&BasisPair::standard(2, 1)).unwrap();
        assert_eq!(theta.rows(), 1);
        assert_eq!(theta.cols(), 2);
        assert_eq!(theta.entry(0, 0), &poly("7*a2", 2));
        assert_eq!(theta.entry(0, 1), &poly("-7*a1", 2));
    }

    #[test]
    fn theta_boundary_weighted_column_sum_vanishes() {
        // sum_j theta_{i,j} * a_j = f0-type contraction = 0 for skew forms.
        let f = BoundaryForm::from_skew(
            4,
            &[([0, 0, 1], 3), ([0, 2, 3], -2), ([1, 1, 2], 4), ([2, 0, 3], 9)],
        )
        .unwrap();
        let theta = f.theta(&BasisPair::standard(4, 3)).unwrap();
        for i in 0..3 {
            let mut acc = IntPoly::zero(4);
            for j in 0..4 {
                acc += &(theta.entry(i, j) * &IntPoly::variable(4, j));
            }
            assert!(acc.is_zero(), "weighted column sum of row {i}");
        }
    }

    #[test]
    fn massey_f0_vanishes_exactly_for_skew_order_one() {
        let skew = BoundaryForm::from_skew(3, &[([0, 0, 2], 2), ([1, 1, 2], -3)]).unwrap();
        let rows = massey_f0(skew.tensor(), 3, 1).unwrap();
        assert!(rows.iter().all(IntPoly::is_zero));

        // A symmetric violation: f(b1, a1, a1) = 1 contracts to a1^2.
        let mut tensor = vec![0i64; 2 * 3 * 3];
        tensor[0] = 1;
        let rows = massey_f0(&tensor, 3, 1).unwrap();
        assert_eq!(rows[0], poly("a1^2", 3));
        assert!(rows[1].is_zero());
        assert!(matches!(
            MasseyForm::new(3, 1, tensor),
            Err(FormError::F0Nonzero { row: 1, .. })
        ));
    }

    #[test]
    fn massey_order_one_theta_matches_boundary_theta() {
        let f = BoundaryForm::from_skew(
            3,
            &[([0, 0, 1], 1), ([0, 1, 2], -4), ([1, 0, 2], 2)],
        )
        .unwrap();
        let massey = MasseyForm::from_boundary(&f);
        let bases = BasisPair::standard(3, 2);
        assert_eq!(massey.theta(&bases).unwrap(), f.theta(&bases).unwrap());
    }

    #[test]
    fn massey_order_two_theta_expands_the_double_sum() {
        // f(b1, a1, a2, a1) = 1, f(b1, a2, a1, a1) = -1 (skew in the first
        // two module slots): theta = [a1*a2, -a1^2].
        let n = 2;
        let mut tensor = vec![0i64; 1 * 8];
        tensor[0 * 4 + 1 * 2 + 0] = 1; // (a1, a2, a1)
        tensor[1 * 4 + 0 * 2 + 0] = -1; // (a2, a1, a1)
        let f = MasseyForm::new(n, 2, tensor).unwrap();
        let theta = f.theta(&BasisPair::standard(2, 1)).unwrap();
        assert_eq!(theta.entry(0, 0), &poly("a1*a2", 2));
        assert_eq!(theta.entry(0, 1), &poly("-a1^2", 2));
    }

    #[test]
    fn massey_order_two_antisymmetrized_tail_gives_zero_theta() {
        // Skew in the *last* two module slots: both f0 and the theta sum
        // contract those slots symmetrically, so theta vanishes entirely.
        let mut tensor = vec![0i64; 1 * 8];
        tensor[0 * 4 + 0 * 2 + 1] = 1; // (a1, a1, a2)
        tensor[0 * 4 + 1 * 2 + 0] = -1; // (a1, a2, a1)
        let f = MasseyForm::new(2, 2, tensor).unwrap();
        let theta = f.theta(&BasisPair::standard(2, 1)).unwrap();
        assert!(theta.is_zero());
    }

    #[test]
    fn massey_theta_is_independent_of_the_expansion_basis() {
        // Expanding g over a non-standard basis a' = P * std (with dual
        // variables mapped back through (P^T)^{-1}) must reproduce the
        // standard expansion. This is the basis-independence of the defining
        // sum, checked directly against an independent implementation.
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(0x9a5e);
        for _ in 0..10 {
            let n = 3usize;
            let m = 2usize;
            // Random tensor antisymmetrized in the first two module slots so
            // that f0 = 0.
            let tail = n.pow((m + 1) as u32);
            let mut raw = vec![0i64; (n - 1) * tail];
            for v in raw.iter_mut() {
                *v = rng.random_range(-3..=3);
            }
            let mut tensor = vec![0i64; (n - 1) * tail];
            for x in 0..n - 1 {
                for p in 0..n {
                    for q in 0..n {
                        for r in 0..n {
                            let fwd = raw[x * tail + (p * n + q) * n + r];
                            let rev = raw[x * tail + (q * n + p) * n + r];
                            tensor[x * tail + (p * n + q) * n + r] = fwd - rev;
                        }
                    }
                }
            }
            let f = MasseyForm::new(n, m, tensor.clone()).unwrap();
            let standard = f.theta(&BasisPair::standard(n, n - 1)).unwrap();

            // Independent expansion over the basis a' = rows of P.
            let p_mat = crate::random::unimodular(n, &mut rng);
            let dual = p_mat.transpose().inverse_unimodular().unwrap();
            let dual_form = |row: usize| {
                let mut form = IntPoly::zero(n);
                for k in 0..n {
                    let c = dual.entry(row, k);
                    if c != 0 {
                        form += &IntPoly::variable(n, k).scaled(c);
                    }
                }
                form
            };
            let oracle = PolyMatrix::from_fn(n - 1, n, n, |i, j| {
                let mut acc = IntPoly::zero(n);
                for j1 in 0..n {
                    for j2 in 0..n {
                        // f(b_i, e_j, a'_{j1}, a'_{j2}) by multilinearity.
                        let mut v: i64 = 0;
                        for q in 0..n {
                            for r in 0..n {
                                v += p_mat.entry(j1, q)
                                    * p_mat.entry(j2, r)
                                    * tensor[i * tail + (j * n + q) * n + r];
                            }
                        }
                        if v != 0 {
                            acc += &(&dual_form(j1) * &dual_form(j2)).scaled(v);
                        }
                    }
                }
                acc
            })
            .unwrap();
            assert_eq!(standard, oracle);
        }
    }

    #[test]
    fn tensor_json_roundtrip_and_errors() {
        let f = Form::Closed(levi_civita_3(1));
        let text = serde_json::to_string(&f).unwrap();
        let back: Form = serde_json::from_str(&text).unwrap();
        assert_eq!(back, f);

        // Entries in scrambled order parse to the same form.
        let scrambled = r#"{"kind":"closed","n":3,"entries":[
            {"idx":[3,1,2],"val":1},{"idx":[1,2,3],"val":1},{"idx":[2,3,1],"val":1},
            {"idx":[2,1,3],"val":-1},{"idx":[1,3,2],"val":-1},{"idx":[3,2,1],"val":-1}]}"#;
        let parsed: Form = serde_json::from_str(scrambled).unwrap();
        assert_eq!(parsed, f);

        // Duplicate index is an error even with matching values.
        let dup = r#"{"kind":"boundary","n":2,"entries":[
            {"idx":[1,1,2],"val":1},{"idx":[1,1,2],"val":1}]}"#;
        assert!(serde_json::from_str::<Form>(dup).is_err());

        // Unknown kind.
        let unk = r#"{"kind":"cubic","n":3,"entries":[]}"#;
        assert!(serde_json::from_str::<Form>(unk).is_err());

        // Out-of-range index.
        let oor = r#"{"kind":"boundary","n":2,"entries":[{"idx":[2,1,2],"val":1}]}"#;
        assert!(serde_json::from_str::<Form>(oor).is_err());

        // Missing m for massey.
        let nom = r#"{"kind":"massey","n":2,"entries":[]}"#;
        assert!(serde_json::from_str::<Form>(nom).is_err());
    }

    #[test]
    fn boundary_restriction_drops_the_last_first_slot_row() {
        let f = levi_civita_3(1);
        let restricted = f.boundary_restriction();
        assert_eq!(restricted.n(), 3);
        assert_eq!(restricted.value(0, 1, 2), 1);
        assert_eq!(restricted.value(1, 0, 2), -1);
    }
}
