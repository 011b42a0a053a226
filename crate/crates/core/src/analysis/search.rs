use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::canon::canonical_form;
use crate::congruence::{
    all_congruences_from, congruence_lattice, join_irreducible_congruences, ConCaps,
};
use crate::construction::{
    enumerate_slim_rectangular, CzedliSchmidtSequence, EnumeratedLattice, EnumerationBounds,
};
use crate::error::ConstructionError;
use crate::lattice::PlanarLattice;

/// Record of a search that found nothing: a claim about a finite range only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExhaustionCertificate {
    pub bounds: EnumerationBounds,
    pub corpus_size: usize,
    /// SHA-256 over the canonical forms of the corpus, in order, as hex.
    pub corpus_hash: String,
}

#[derive(Debug, Clone)]
pub enum SearchOutcome {
    Witness {
        sequence: CzedliSchmidtSequence,
        lattice: PlanarLattice,
    },
    Exhausted(ExhaustionCertificate),
}

impl SearchOutcome {
    pub fn is_exhausted(&self) -> bool {
        matches!(self, SearchOutcome::Exhausted(_))
    }
}

pub fn corpus_hash(corpus: &[EnumeratedLattice]) -> String {
    let mut h = Sha256::new();
    for e in corpus {
        h.update((e.form.as_bytes().len() as u32).to_le_bytes());
        h.update(e.form.as_bytes());
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// Whether `Con L` is isomorphic to `target`; `None` when `Con L` is too large to build.
pub fn congruence_lattice_matches(l: &PlanarLattice, target: &PlanarLattice) -> Option<bool> {
    let ji = join_irreducible_congruences(l);
    if ji.downset_count() != target.len() as u64 {
        return Some(false);
    }
    let all = all_congruences_from(l, &ji, ConCaps::default()).ok()?;
    let con = congruence_lattice(&all).ok()?;
    Some(canonical_form(&con) == canonical_form(target))
}

/// Scans an enumerated corpus for a lattice whose congruence lattice is `target`; the
/// first witness in corpus order wins.
pub fn search_corpus(
    target: &PlanarLattice,
    bounds: EnumerationBounds,
    corpus: &[EnumeratedLattice],
) -> SearchOutcome {
    let hit = corpus
        .par_iter()
        .position_first(|e| congruence_lattice_matches(&e.lattice, target) == Some(true));
    match hit {
        Some(i) => SearchOutcome::Witness {
            sequence: corpus[i].sequence.clone(),
            lattice: corpus[i].lattice.clone(),
        },
        None => SearchOutcome::Exhausted(ExhaustionCertificate {
            bounds,
            corpus_size: corpus.len(),
            corpus_hash: corpus_hash(corpus),
        }),
    }
}

pub fn representability_search(
    target: &PlanarLattice,
    bounds: EnumerationBounds,
) -> Result<SearchOutcome, ConstructionError> {
    let corpus = enumerate_slim_rectangular(bounds)?;
    Ok(search_corpus(target, bounds, &corpus.lattices))
}
