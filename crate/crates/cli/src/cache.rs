//! On-disk cache of class polynomials.
//!
//! Entries are addressed by (type, class invariant label, code version).
//! Each entry carries a digest of its contents and a few poset nodes with
//! their Möbius values; a hit is only trusted if the digest matches and one
//! of the nodes recomputes to the stored value.

use std::collections::HashSet;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use toric_core::cohomology::{complement_poincare, degree_one_character};
use toric_core::lattice::IntMatrix;
use toric_core::poset::{fixed_poset, interval_mobius};
use toric_core::weyl::orbits_on_roots;
use toric_core::{Error, Poly, RootSystem};

const VERSION: &str = env!("CARGO_PKG_VERSION");
const PROBES: usize = 8;
/// Probes are drawn from low ranks so that rechecking stays cheap.
const PROBE_MAX_RANK: usize = 3;

#[derive(Serialize, Deserialize)]
struct Probe {
    orbits: Vec<Vec<usize>>,
    mobius: i64,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    system: String,
    label: String,
    version: String,
    poincare: Poly,
    probes: Vec<Probe>,
}

#[derive(Serialize, Deserialize)]
struct Stored {
    digest: String,
    entry: Entry,
}

fn digest(entry: &Entry) -> Result<String, Error> {
    // hash the key-sorted value form so the digest ignores field order
    let canonical = serde_json::to_string(&serde_json::to_value(entry)?)?;
    Ok(hex(&Sha256::digest(canonical.as_bytes())))
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

pub struct ResultCache {
    dir: PathBuf,
}

fn xorshift(state: &mut u64) -> u64 {
    *state ^= *state << 13;
    *state ^= *state >> 7;
    *state ^= *state << 17;
    *state
}

impl ResultCache {
    pub fn open(dir: &Path) -> Result<Self, Error> {
        std::fs::create_dir_all(dir)?;
        Ok(ResultCache { dir: dir.to_path_buf() })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, system: &str, label: &str) -> PathBuf {
        let digest = Sha256::digest(format!("{system}\n{label}\n{VERSION}").as_bytes());
        self.dir.join(format!("poly-{system}")).join(format!("{}.json", hex(&digest[..12])))
    }

    /// `P(T_Φ, t)(g)` from the cache if a verified entry exists, otherwise
    /// computed and stored.
    pub fn poincare(&self, rs: &RootSystem, g: &IntMatrix, label: &str, node_budget: usize) -> Result<Poly, Error> {
        let system = rs.cartan_type().to_string();
        let path = self.path(&system, label);
        if let Ok(text) = std::fs::read_to_string(&path) {
            match self.verify(&text, rs, g, &system, label, node_budget) {
                Ok(p) => return Ok(p),
                Err(e) => eprintln!("warning: discarding cache entry {}: {e}", path.display()),
            }
        }
        let poset = fixed_poset(rs, g, node_budget)?;
        let poly = complement_poincare(&poset, g)?;
        let candidates: Vec<usize> = (0..poset.len()).filter(|&i| poset.nodes()[i].rank <= PROBE_MAX_RANK).collect();
        let mut state = u64::from_le_bytes(Sha256::digest(label.as_bytes())[..8].try_into().unwrap()) | 1;
        let probes = (0..PROBES.min(candidates.len()))
            .map(|_| {
                let i = candidates[(xorshift(&mut state) % candidates.len() as u64) as usize];
                Probe { orbits: poset.node_orbits(i), mobius: poset.nodes()[i].mobius }
            })
            .collect();
        let entry = Entry { system, label: label.to_string(), version: VERSION.into(), poincare: poly.clone(), probes };
        std::fs::create_dir_all(path.parent().unwrap())?;
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        std::fs::write(&tmp, serde_json::to_string(&Stored { digest: digest(&entry)?, entry })?)?;
        std::fs::rename(tmp, &path)?;
        Ok(poly)
    }

    fn verify(
        &self,
        text: &str,
        rs: &RootSystem,
        g: &IntMatrix,
        system: &str,
        label: &str,
        node_budget: usize,
    ) -> Result<Poly, Error> {
        let Stored { digest: stored, entry } = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        if digest(&entry)? != stored {
            return Err(Error::Schema("digest mismatch".into()));
        }
        if entry.system != system || entry.label != label || entry.version != VERSION {
            return Err(Error::Schema("key mismatch".into()));
        }
        let p = &entry.poincare;
        if p.coeff(0) != 1 || p.degree() > Some(rs.rank()) || p.coeff(1) != degree_one_character(rs, g)? {
            return Err(Error::Schema("stored polynomial fails the degree-one check".into()));
        }
        if entry.probes.is_empty() {
            return Err(Error::Schema("no probes".into()));
        }
        let seed = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_nanos() as u64).unwrap_or(1);
        let probe = &entry.probes[(seed % entry.probes.len() as u64) as usize];
        let orbits: HashSet<Vec<usize>> = orbits_on_roots(g, rs)?.into_iter().collect();
        if !probe.orbits.iter().all(|o| orbits.contains(o)) {
            return Err(Error::Schema("probe orbits are not orbits of this element".into()));
        }
        let mu = interval_mobius(rs.rank(), rs.roots(), probe.orbits.clone(), false, node_budget)?;
        if mu != probe.mobius {
            return Err(Error::Schema(format!("probe Möbius value {} recomputes to {mu}", probe.mobius)));
        }
        Ok(entry.poincare)
    }
}
