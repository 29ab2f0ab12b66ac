//! `φ_d^e` names: `d` is the degree and `e` the first symmetric power of
//! the reflection representation containing the character.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{CharacterTable, Irreducible};
use crate::error::{Error, Result};
use crate::lattice::{power_traces, symmetric_traces};
use crate::roots::RootSystem;
use crate::weyl::{ConjugacyClasses, WeylGroup};

const BUILTIN: &[(&str, &str)] = &[
    ("G2", include_str!("../../data/phi-G2.json")),
    ("F4", include_str!("../../data/phi-F4.json")),
    ("E6", include_str!("../../data/phi-E6.json")),
    ("E7", include_str!("../../data/phi-E7.json")),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PhiLabel {
    pub degree: i64,
    pub e: usize,
    /// Set when several characters share `(degree, e)`.
    pub sub: Option<usize>,
}

impl PhiLabel {
    pub fn latex(&self) -> String {
        format!("\\{self}")
    }
}

impl fmt::Display for PhiLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sub {
            Some(k) => write!(f, "phi_{{{},{}}}^{{{}}}", self.degree, k, self.e),
            None => write!(f, "phi_{{{}}}^{{{}}}", self.degree, self.e),
        }
    }
}

/// Among the characters sharing `(degree, e)`, the one taking `value` on
/// the class labelled `class` receives subscript 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TieRule {
    pub degree: i64,
    pub e: usize,
    pub class: String,
    pub value: i64,
}

/// Presentation data for one group: tie resolution against published
/// tables and an optional column order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiAlignment {
    #[serde(rename = "type")]
    pub type_label: String,
    #[serde(default)]
    pub ties: Vec<TieRule>,
    #[serde(default)]
    pub order: Vec<String>,
}

impl PhiAlignment {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// The alignment shipped with the crate, if any.
    pub fn builtin(type_label: &str) -> Option<Self> {
        BUILTIN
            .iter()
            .find(|(t, _)| *t == type_label)
            .map(|(_, text)| Self::from_json(text).expect("bundled alignment data is valid"))
    }
}

/// Result of [`label_phi`].
#[derive(Clone, Debug)]
pub struct PhiNaming {
    /// The input table with renamed and reordered irreducibles.
    pub table: CharacterTable,
    pub labels: Vec<PhiLabel>,
    /// Whether ties were resolved by alignment data rather than the
    /// built-in value order.
    pub ties_from_data: bool,
}

/// `Sym^e` of the reflection representation on each class, `e = 0..=max_e`.
fn symmetric_power_characters(group: &WeylGroup, classes: &ConjugacyClasses, max_e: usize) -> Result<Vec<Vec<i128>>> {
    classes
        .representatives()
        .iter()
        .map(|&r| {
            let p: Vec<i128> = power_traces(&group.element(r), max_e)?.into_iter().map(i128::from).collect();
            symmetric_traces(&p, max_e)
        })
        .collect()
}

/// Names every irreducible of `table` (whose columns must follow `classes`)
/// by its `φ_d^e` label.
///
/// Characters sharing `(d, e)` are ordered by their value vectors in class
/// order, largest first, unless `alignment` pins the pair. Columns follow
/// `alignment.order` when it lists exactly the computed names, and
/// `(d, e, subscript)` otherwise.
pub fn label_phi(
    table: &CharacterTable,
    rs: &RootSystem,
    group: &WeylGroup,
    classes: &ConjugacyClasses,
    alignment: Option<&PhiAlignment>,
) -> Result<PhiNaming> {
    let table = table.align_to(classes)?;
    // every irreducible occurs in the coinvariant algebra, whose top degree
    // is the number of positive roots
    let max_e = rs.positive_roots().len();
    let sym = symmetric_power_characters(group, classes, max_e)?;
    let order = table.order() as i128;
    let mut keyed: Vec<((i64, usize), Irreducible)> = Vec::with_capacity(table.irreducibles.len());
    for chi in &table.irreducibles {
        let e = (0..=max_e)
            .find(|&e| {
                let s: i128 = table
                    .classes
                    .iter()
                    .zip(&chi.values)
                    .zip(&sym)
                    .map(|((c, &x), h)| c.size as i128 * x as i128 * h[e])
                    .sum();
                s / order != 0
            })
            .ok_or_else(|| Error::Internal(format!("{} does not occur in any symmetric power", chi.name)))?;
        keyed.push(((chi.values[0], e), chi.clone()));
    }

    let mut groups: BTreeMap<(i64, usize), Vec<Irreducible>> = BTreeMap::new();
    for (k, chi) in keyed {
        groups.entry(k).or_default().push(chi);
    }
    let mut ties_from_data = false;
    let mut named: Vec<(PhiLabel, Irreducible)> = Vec::new();
    for ((degree, e), mut members) in groups {
        members.sort_by(|a, b| b.values.cmp(&a.values));
        if members.len() == 1 {
            named.push((PhiLabel { degree, e, sub: None }, members.remove(0)));
            continue;
        }
        let rule = alignment.and_then(|a| a.ties.iter().find(|t| t.degree == degree && t.e == e));
        if let Some(rule) = rule {
            let col = table
                .classes
                .iter()
                .position(|c| c.label == rule.class)
                .ok_or_else(|| Error::ClassAlignment(format!("alignment refers to unknown class {}", rule.class)))?;
            let hits: Vec<usize> = (0..members.len()).filter(|&i| members[i].values[col] == rule.value).collect();
            if hits.len() != 1 {
                return Err(Error::ClassAlignment(format!(
                    "alignment for degree {degree}, e = {e} matches {} characters",
                    hits.len()
                )));
            }
            let first = members.remove(hits[0]);
            members.insert(0, first);
            ties_from_data = true;
        }
        for (k, chi) in members.into_iter().enumerate() {
            named.push((PhiLabel { degree, e, sub: Some(k + 1) }, chi));
        }
    }

    let names: Vec<String> = named.iter().map(|(l, _)| l.to_string()).collect();
    if let Some(order) = alignment.map(|a| &a.order).filter(|o| !o.is_empty()) {
        let mut a = order.clone();
        let mut b = names.clone();
        a.sort();
        b.sort();
        if a == b {
            named.sort_by_key(|(l, _)| order.iter().position(|n| *n == l.to_string()));
        }
    }
    let labels: Vec<PhiLabel> = named.iter().map(|(l, _)| *l).collect();
    let irreducibles = named
        .into_iter()
        .map(|(l, chi)| Irreducible { name: l.to_string(), values: chi.values })
        .collect();
    Ok(PhiNaming { table: CharacterTable { irreducibles, ..table }, labels, ties_from_data })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{dixon_table, DEFAULT_DIXON_BUDGET};
    use crate::weyl::DEFAULT_GROUP_BUDGET;

    fn setup(label: &str) -> (RootSystem, WeylGroup, ConjugacyClasses) {
        let rs = RootSystem::from_label(label, None).unwrap();
        let g = WeylGroup::enumerate(&rs, DEFAULT_GROUP_BUDGET).unwrap();
        let cc = g.conjugacy_classes(&rs).unwrap();
        (rs, g, cc)
    }

    fn named(label: &str) -> PhiNaming {
        let (rs, g, cc) = setup(label);
        let t = dixon_table(&g, &cc, DEFAULT_DIXON_BUDGET).unwrap();
        label_phi(&t, &rs, &g, &cc, PhiAlignment::builtin(label).as_ref()).unwrap()
    }

    #[test]
    fn g2_names() {
        let n = named("G2");
        assert_eq!(
            n.table.names(),
            ["phi_{1}^{0}", "phi_{1}^{6}", "phi_{1,1}^{3}", "phi_{1,2}^{3}", "phi_{2}^{1}", "phi_{2}^{2}"]
        );
        // the top-degree linear character is the determinant
        let (_, g, cc) = setup("G2");
        let det: Vec<i64> = cc
            .representatives()
            .iter()
            .map(|&r| {
                let e = g.element(r);
                let p = power_traces(&e, 2).unwrap();
                crate::lattice::exterior_traces(&p, 2).unwrap()[2]
            })
            .collect();
        assert_eq!(n.table.irreducibles[1].values, det);
        // the reflection representation itself
        let std: Vec<i64> = cc.representatives().iter().map(|&r| g.element(r).trace()).collect();
        assert_eq!(n.table.irreducibles[4].values, std);
        assert_eq!(n.labels[0], PhiLabel { degree: 1, e: 0, sub: None });
        assert_eq!(n.labels[2].latex(), "\\phi_{1,1}^{3}");
    }

    #[test]
    fn f4_names_are_distinct() {
        let n = named("F4");
        let mut names = n.table.names();
        assert_eq!(names[0], "phi_{1}^{0}");
        assert!(n.ties_from_data);
        names.sort();
        names.dedup();
        assert_eq!(names.len(), 25);
    }

    #[test]
    fn bundled_data_parses() {
        for (t, _) in BUILTIN {
            assert_eq!(PhiAlignment::builtin(t).unwrap().type_label, *t);
        }
        assert!(PhiAlignment::builtin("B3").is_none());
        assert!(matches!(PhiAlignment::from_json("{}"), Err(Error::Schema(_))));
    }
}
