//! On-disk enumeration cache: one `<digest>.seq` record per lattice plus an index per
//! bound triple. Records are replayed and their canonical forms re-checked on load, so a
//! stale or damaged cache only costs a recomputation.

use std::fs;
use std::path::{Path, PathBuf};

use crate::canon::canonical_form;
use crate::construction::{
    enumerate_slim_rectangular, replay, EnumeratedLattice, Enumeration, EnumerationBounds,
};
use crate::error::IoError;
use crate::io::script::{
    parse_sequence, parse_sequence_one_line, sequence_one_line, serialize_sequence,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Miss,
}

#[derive(Debug, Clone)]
pub struct EnumerationCache {
    dir: PathBuf,
}

impl EnumerationCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        EnumerationCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn index_path(&self, b: EnumerationBounds) -> PathBuf {
        self.dir.join(format!(
            "index-{}-{}-{}.txt",
            b.max_elements, b.max_grid, b.max_forks
        ))
    }

    fn record_path(&self, digest: &str) -> PathBuf {
        self.dir.join(format!("{digest}.seq"))
    }

    fn load(&self, bounds: EnumerationBounds) -> Option<Enumeration> {
        let index = fs::read_to_string(self.index_path(bounds)).ok()?;
        let mut lines = index.lines();
        if lines.next()? != "slimlat-enumeration 1" {
            return None;
        }
        let mut lattices = Vec::new();
        let mut invariant_violations = Vec::new();
        for line in lines {
            if let Some(digest) = line.strip_prefix("lattice ") {
                let seq =
                    parse_sequence(&fs::read_to_string(self.record_path(digest)).ok()?).ok()?;
                let lattice = replay(&seq).ok()?;
                let form = canonical_form(&lattice);
                if form.digest() != digest {
                    return None;
                }
                lattices.push(EnumeratedLattice {
                    sequence: seq,
                    lattice,
                    form,
                });
            } else {
                let pair = line.strip_prefix("violation ")?;
                let (a, b) = pair.split_once(" | ")?;
                invariant_violations.push((
                    parse_sequence_one_line(a).ok()?,
                    parse_sequence_one_line(b).ok()?,
                ));
            }
        }
        if !lattices.windows(2).all(|w| w[0].form < w[1].form) {
            return None;
        }
        Some(Enumeration {
            bounds,
            lattices,
            invariant_violations,
        })
    }

    fn store(&self, e: &Enumeration) -> Result<(), IoError> {
        fs::create_dir_all(&self.dir)?;
        let mut index = String::from("slimlat-enumeration 1\n");
        for x in &e.lattices {
            let digest = x.form.digest();
            fs::write(self.record_path(&digest), serialize_sequence(&x.sequence))?;
            index.push_str(&format!("lattice {digest}\n"));
        }
        for (a, b) in &e.invariant_violations {
            index.push_str(&format!(
                "violation {} | {}\n",
                sequence_one_line(a),
                sequence_one_line(b)
            ));
        }
        // write-then-rename so readers never see a partial index
        let path = self.index_path(e.bounds);
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, index)?;
        fs::rename(tmp, path)?;
        Ok(())
    }

    /// The enumeration for `bounds`, from the cache when a valid entry exists.
    pub fn enumerate(
        &self,
        bounds: EnumerationBounds,
    ) -> Result<(Enumeration, CacheStatus), IoError> {
        if let Some(e) = self.load(bounds) {
            return Ok((e, CacheStatus::Hit));
        }
        let e = enumerate_slim_rectangular(bounds)?;
        self.store(&e)?;
        Ok((e, CacheStatus::Miss))
    }
}
