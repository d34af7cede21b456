//! Bundled regression examples with frozen expected determinants.
//!
//! Each entry is a JSON file embedded at compile time: a named form or
//! gluing instance, a plain-language note on where its expected value comes
//! from, and the expected determinant in canonical text. [`self_check`]
//! recomputes everything and compares against the frozen values, so the
//! corpus doubles as an end-to-end regression suite for the whole pipeline
//! (parsing, validation, theta construction, extraction, verification).
//
// TODO: add a genuinely higher-order entry — the order-2 form of the
// Borromean-rings complement — once its tensor has been transcribed and
// hand-checked; the bundled Massey example is small enough to verify by eye
// but has rank 2 only.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::det::{det_boundary, det_form, BasisPair, DetError};
use crate::forms::Form;
use crate::gluing::{GluingError, GluingInstance};
use crate::polyring::{IntPoly, PolyError};

/// Errors from checking corpus entries against their frozen values.
#[derive(Debug, Error)]
pub enum CorpusError {
    /// The recomputed determinant disagrees with the frozen one.
    #[error("corpus entry `{name}`: expected determinant `{expected}` but computed `{got}`")]
    Mismatch {
        name: String,
        expected: String,
        got: String,
    },
    /// An instance entry failed its gluing identity.
    #[error("corpus entry `{name}`: gluing verification failed: {detail}")]
    VerificationFailed { name: String, detail: String },
    /// Determinant extraction failed.
    #[error("corpus entry `{name}`: {source}")]
    Det {
        name: String,
        #[source]
        source: DetError,
    },
    /// Instance verification errored (as opposed to failing).
    #[error("corpus entry `{name}`: {source}")]
    Gluing {
        name: String,
        #[source]
        source: GluingError,
    },
    /// The frozen expected value does not parse.
    #[error("corpus entry `{name}`: frozen expected value does not parse: {source}")]
    BadExpected {
        name: String,
        #[source]
        source: PolyError,
    },
}

/// What a corpus entry carries: a standalone form or a full gluing instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum CorpusPayload {
    #[serde(rename = "form")]
    Form(Form),
    #[serde(rename = "instance")]
    Instance(GluingInstance),
}

/// One bundled example: a named payload plus the frozen determinant it must
/// reproduce at the standard bases.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub name: String,
    pub description: String,
    /// Where the frozen value comes from (hand expansion, pinned identity,
    /// ...), in plain language.
    pub derivation: String,
    /// Canonical text of the expected determinant at standard bases.
    pub expected_d: String,
    pub payload: CorpusPayload,
}

impl CorpusEntry {
    /// Rank of the payload's dual-variable ring.
    pub fn rank(&self) -> usize {
        match &self.payload {
            CorpusPayload::Form(form) => form.n(),
            CorpusPayload::Instance(inst) => inst.glued_form().n(),
        }
    }

    /// The frozen expected determinant, parsed.
    pub fn expected(&self) -> Result<IntPoly, CorpusError> {
        IntPoly::parse(&self.expected_d, self.rank()).map_err(|source| CorpusError::BadExpected {
            name: self.name.clone(),
            source,
        })
    }

    /// Recomputes the entry's determinant (and, for instances, re-verifies
    /// the gluing identity) and compares against the frozen value.
    pub fn self_check(&self) -> Result<(), CorpusError> {
        let expected = self.expected()?;
        let computed = match &self.payload {
            CorpusPayload::Form(form) => det_form(form, &BasisPair::standard_for(form))
                .map_err(|source| CorpusError::Det {
                    name: self.name.clone(),
                    source,
                })?,
            CorpusPayload::Instance(inst) => {
                let report = inst.verify().map_err(|source| CorpusError::Gluing {
                    name: self.name.clone(),
                    source,
                })?;
                if !report.passed() {
                    return Err(CorpusError::VerificationFailed {
                        name: self.name.clone(),
                        detail: report.detail,
                    });
                }
                let n = inst.glued_form().n();
                det_boundary(inst.glued_form(), &BasisPair::standard(n, n - 1)).map_err(
                    |source| CorpusError::Det {
                        name: self.name.clone(),
                        source,
                    },
                )?
            }
        };
        if computed == expected {
            Ok(())
        } else {
            Err(CorpusError::Mismatch {
                name: self.name.clone(),
                expected: self.expected_d.clone(),
                got: computed.to_string(),
            })
        }
    }
}

const SOURCES: &[&str] = &[
    include_str!("../corpus/three-torus.json"),
    include_str!("../corpus/unit-pairing-rank2.json"),
    include_str!("../corpus/order2-massey-rank2.json"),
    include_str!("../corpus/torus-filling-rank3.json"),
];

static CORPUS: OnceLock<Vec<CorpusEntry>> = OnceLock::new();

/// All bundled entries, in listing order.
pub fn entries() -> &'static [CorpusEntry] {
    CORPUS.get_or_init(|| {
        SOURCES
            .iter()
            .map(|text| serde_json::from_str(text).expect("embedded corpus entries are valid"))
            .collect()
    })
}

/// The entry names, in listing order.
pub fn names() -> Vec<&'static str> {
    entries().iter().map(|e| e.name.as_str()).collect()
}

/// Looks an entry up by name.
pub fn get(name: &str) -> Option<&'static CorpusEntry> {
    entries().iter().find(|e| e.name == name)
}

/// Self-checks every entry, stopping at the first failure.
pub fn self_check() -> Result<(), CorpusError> {
    for entry in entries() {
        entry.self_check()?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_loads_and_names_are_unique() {
        let names = names();
        assert_eq!(names.len(), SOURCES.len());
        let mut sorted = names.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len(), "duplicate corpus names");
    }

    #[test]
    fn every_entry_self_checks() {
        for entry in entries() {
            entry.self_check().unwrap_or_else(|e| panic!("{e}"));
        }
    }

    #[test]
    fn lookup_by_name_works() {
        assert!(get("three-torus").is_some());
        assert!(get("no-such-entry").is_none());
        assert_eq!(get("three-torus").unwrap().rank(), 3);
    }

    #[test]
    fn kinds_cover_all_three_forms_and_an_instance() {
        let mut kinds: Vec<&str> = entries()
            .iter()
            .map(|e| match &e.payload {
                CorpusPayload::Form(f) => f.kind(),
                CorpusPayload::Instance(_) => "instance",
            })
            .collect();
        kinds.sort_unstable();
        assert_eq!(kinds, vec!["boundary", "closed", "instance", "massey"]);
    }

    #[test]
    fn a_tampered_expected_value_is_caught() {
        let mut entry = get("three-torus").unwrap().clone();
        entry.expected_d = "2".into();
        let err = entry.self_check().unwrap_err();
        assert!(matches!(err, CorpusError::Mismatch { .. }), "{err}");
    }
}
