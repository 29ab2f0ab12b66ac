//! Character tables of Weyl groups and decomposition of class functions.

mod dixon;
mod io;
mod labels;
pub mod oracles;
mod symmetric;

use serde::{Deserialize, Serialize};

use crate::cohomology::ClassPolynomial;
use crate::error::{Error, Result};
use crate::roots::{Family, RootSystem};
use crate::weyl::{ClassInvariants, ConjugacyClasses, WeylGroup};

pub use dixon::{dixon_table, dixon_table_with_prime, DEFAULT_DIXON_BUDGET};
pub use io::{load_table, load_table_for, save_table, table_from_json, table_to_json};
pub use labels::{label_phi, PhiAlignment, PhiLabel, PhiNaming, TieRule};
pub use symmetric::{cycle_type_of_class, partitions, symmetric_character, symmetric_group_table, type_a_table};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    #[serde(rename = "type")]
    pub type_label: String,
    pub rank: usize,
    pub order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub label: String,
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariants: Option<ClassInvariants>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Irreducible {
    pub name: String,
    pub values: Vec<i64>,
}

/// Irreducible characters as integer vectors over the classes. The first
/// class is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub group: GroupInfo,
    pub classes: Vec<ClassEntry>,
    pub irreducibles: Vec<Irreducible>,
}

impl CharacterTable {
    pub fn order(&self) -> usize {
        self.group.order
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.irreducibles.iter().map(|c| c.values[0]).collect()
    }

    pub fn names(&self) -> Vec<String> {
        self.irreducibles.iter().map(|c| c.name.clone()).collect()
    }

    /// `Σ_C |C| a(C) b(C)`; divide by `|W|` for the inner product.
    pub fn weighted_product(&self, a: &[i64], b: &[i64]) -> i128 {
        self.classes.iter().zip(a.iter().zip(b)).map(|(c, (&x, &y))| c.size as i128 * x as i128 * y as i128).sum()
    }

    /// Checks shape, identity-first ordering, and both orthogonality
    /// relations exactly.
    pub fn check_orthogonality(&self) -> Result<()> {
        let r = self.classes.len();
        let order = self.group.order as i128;
        if self.irreducibles.len() != r {
            return Err(Error::Orthogonality(format!("{} characters for {r} classes", self.irreducibles.len())));
        }
        if self.classes.iter().map(|c| c.size).sum::<usize>() != self.group.order {
            return Err(Error::Orthogonality("class sizes do not sum to the group order".into()));
        }
        if self.classes.first().map(|c| c.size) != Some(1) {
            return Err(Error::Orthogonality("first class must be the identity".into()));
        }
        for c in &self.irreducibles {
            if c.values.len() != r {
                return Err(Error::Schema(format!("{}: {} values for {r} classes", c.name, c.values.len())));
            }
        }
        for (i, a) in self.irreducibles.iter().enumerate() {
            for (j, b) in self.irreducibles.iter().enumerate().skip(i) {
                let expect = if i == j { order } else { 0 };
                if self.weighted_product(&a.values, &b.values) != expect {
                    return Err(Error::Orthogonality(format!("rows {} and {}", a.name, b.name)));
                }
            }
        }
        for i in 0..r {
            for j in i..r {
                let s: i128 = self.irreducibles.iter().map(|c| c.values[i] as i128 * c.values[j] as i128).sum();
                let expect = if i == j { order / self.classes[i].size as i128 } else { 0 };
                if s != expect || (i == j && order % self.classes[i].size as i128 != 0) {
                    return Err(Error::Orthogonality(format!("columns {i} and {j}")));
                }
            }
        }
        Ok(())
    }

    /// Reorders the columns to follow `labels`, matching by class label.
    pub fn align_to_labels(&self, labels: &[String]) -> Result<CharacterTable> {
        if labels.len() != self.classes.len() {
            return Err(Error::ClassAlignment(format!(
                "table has {} classes, group has {}",
                self.classes.len(),
                labels.len()
            )));
        }
        let perm = labels
            .iter()
            .map(|l| {
                self.classes
                    .iter()
                    .position(|c| &c.label == l)
                    .ok_or_else(|| Error::ClassAlignment(format!("no class labelled {l}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut sorted = perm.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != perm.len() {
            return Err(Error::ClassAlignment("duplicate class labels".into()));
        }
        Ok(CharacterTable {
            group: self.group.clone(),
            classes: perm.iter().map(|&i| self.classes[i].clone()).collect(),
            irreducibles: self
                .irreducibles
                .iter()
                .map(|c| Irreducible { name: c.name.clone(), values: perm.iter().map(|&i| c.values[i]).collect() })
                .collect(),
        })
    }

    pub fn align_to(&self, classes: &ConjugacyClasses) -> Result<CharacterTable> {
        let aligned = self.align_to_labels(&classes.labels())?;
        for (entry, &size) in aligned.classes.iter().zip(classes.sizes()) {
            if entry.size != size {
                return Err(Error::ClassAlignment(format!("class {} has size {size}, table says {}", entry.label, entry.size)));
            }
        }
        Ok(aligned)
    }
}

pub(crate) fn class_entries(classes: &ConjugacyClasses) -> Vec<ClassEntry> {
    classes
        .labels()
        .into_iter()
        .zip(classes.invariants())
        .map(|(label, inv)| ClassEntry { label, size: inv.size, invariants: Some(inv.clone()) })
        .collect()
}

const BUNDLED_E7: &str = include_str!("../../data/character-table-E7.json");

/// The character table of `group` with conventional names: partitions in
/// type A, `φ_d^e` labels otherwise (tie-broken and ordered by the bundled
/// alignment data when present). Columns follow `classes`.
pub fn weyl_character_table(
    rs: &RootSystem,
    group: &WeylGroup,
    classes: &ConjugacyClasses,
    budget: usize,
) -> Result<PhiNamedTable> {
    if rs.cartan_type().family == Family::A {
        return Ok(PhiNamedTable { table: type_a_table(rs, group, classes)?, ties_from_data: false });
    }
    let type_label = rs.cartan_type().to_string();
    if type_label == "E7" {
        // computing W(E7)'s table takes minutes; it ships precomputed
        let table = table_from_json(BUNDLED_E7)?.align_to(classes)?;
        return Ok(PhiNamedTable { table, ties_from_data: false });
    }
    let raw = dixon_table(group, classes, budget)?;
    let alignment = PhiAlignment::builtin(&type_label);
    let named = label_phi(&raw, rs, group, classes, alignment.as_ref())?;
    Ok(PhiNamedTable { table: named.table, ties_from_data: named.ties_from_data })
}

/// A named character table plus whether its tie-breaking came from data.
#[derive(Clone, Debug)]
pub struct PhiNamedTable {
    pub table: CharacterTable,
    pub ties_from_data: bool,
}

/// Multiplicities of each irreducible in each cohomology degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionTable {
    pub names: Vec<String>,
    /// `rows[i][k]` is the multiplicity of character `k` in degree `i`.
    pub rows: Vec<Vec<i64>>,
}

impl DecompositionTable {
    /// Multiplicities summed over all degrees.
    pub fn total(&self) -> Vec<i64> {
        (0..self.names.len()).map(|k| self.rows.iter().map(|r| r[k]).sum()).collect()
    }

    pub fn column(&self, name: &str) -> Option<Vec<i64>> {
        let k = self.names.iter().position(|n| n == name)?;
        Some(self.rows.iter().map(|r| r[k]).collect())
    }
}

/// `mult(χ, i) = (1/|W|) Σ_C |C| χ(C) c_i(C)`, required to be a
/// nonnegative integer.
pub fn decompose(classpoly: &ClassPolynomial, table: &CharacterTable) -> Result<DecompositionTable> {
    let table = if table.classes.iter().map(|c| &c.label).eq(classpoly.labels.iter()) {
        table.clone()
    } else {
        table.align_to_labels(&classpoly.labels)?
    };
    let order = table.order() as i128;
    if classpoly.group_order != table.order() {
        return Err(Error::ClassAlignment("group orders differ".into()));
    }
    let rows = (0..=classpoly.rank)
        .map(|i| {
            let values = classpoly.degree_values(i);
            table
                .irreducibles
                .iter()
                .map(|chi| {
                    let s = table.weighted_product(&chi.values, &values);
                    if s % order != 0 {
                        return Err(Error::NonIntegralMultiplicity { character: chi.name.clone(), degree: i });
                    }
                    let m = s / order;
                    if m < 0 {
                        return Err(Error::NegativeMultiplicity { character: chi.name.clone(), degree: i, value: m });
                    }
                    i64::try_from(m).map_err(|_| Error::Overflow("multiplicity"))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DecompositionTable { names: table.names(), rows })
}
