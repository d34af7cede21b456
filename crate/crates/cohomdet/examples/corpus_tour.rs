//! Walk the bundled corpus: small hand-derived instances whose determinants
//! are frozen as canonical text and re-checked against fresh computation.
//!
//! Run with: cargo run --example corpus_tour

use cohomdet::corpus::{self, CorpusPayload};
use cohomdet::{det_form, BasisPair};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for entry in corpus::entries() {
        println!("{} (rank {})", entry.name, entry.rank());
        println!("  {}", entry.description);
        println!("  derivation: {}", entry.derivation);

        // Recompute the frozen value from the raw payload.
        let recomputed = match &entry.payload {
            CorpusPayload::Form(form) => {
                det_form(form, &BasisPair::standard_for(form))?
            }
            CorpusPayload::Instance(instance) => {
                let report = instance.verify()?;
                assert!(report.passed(), "{}", report.detail);
                let form = instance.glued_form();
                det_form(
                    &cohomdet::Form::Boundary(form.clone()),
                    &BasisPair::standard_for(&cohomdet::Form::Boundary(form.clone())),
                )?
            }
        };
        println!("  frozen d:   {}", entry.expected_d);
        println!("  recomputed: {recomputed}");
        assert_eq!(recomputed.to_string(), entry.expected_d);
        println!();
    }

    // The library exposes the same check as one call.
    corpus::self_check()?;
    println!("corpus self-check: all {} entries pass", corpus::entries().len());
    Ok(())
}
