//! JSON persistence for character tables.

use std::path::Path;

use super::CharacterTable;
use crate::error::{Error, Result};
use crate::weyl::ConjugacyClasses;

pub fn table_to_json(table: &CharacterTable) -> Result<String> {
    let mut s = serde_json::to_string_pretty(table)?;
    s.push('\n');
    Ok(s)
}

/// Parses and validates a table: schema, then exact orthogonality.
pub fn table_from_json(text: &str) -> Result<CharacterTable> {
    let table: CharacterTable = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    table.check_orthogonality()?;
    Ok(table)
}

pub fn save_table(path: &Path, table: &CharacterTable) -> Result<()> {
    std::fs::write(path, table_to_json(table)?)?;
    Ok(())
}

pub fn load_table(path: &Path) -> Result<CharacterTable> {
    table_from_json(&std::fs::read_to_string(path)?)
}

/// Loads a table and reorders its columns to match `classes` by invariant
/// label; the group type and order must agree.
pub fn load_table_for(path: &Path, type_label: &str, classes: &ConjugacyClasses) -> Result<CharacterTable> {
    let table = load_table(path)?;
    if table.group.type_label != type_label {
        return Err(Error::ClassAlignment(format!("table is for {}, expected {type_label}", table.group.type_label)));
    }
    table.align_to(classes)
}
