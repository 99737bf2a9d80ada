use std::fmt;

use yangian_core::relations::{registry, Case};

/// One registered check as shown by `--list`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogueEntry {
    pub name: &'static str,
    pub anchor: &'static str,
    pub cases: Vec<Case>,
    pub documented_mismatch: bool,
}

impl CatalogueEntry {
    pub fn sizes(&self) -> &'static str {
        if self.cases == [Case::Sp] {
            "even N ≥ 2"
        } else if self.cases.contains(&Case::Sp) {
            "N ≥ 2, even for sp"
        } else {
            "N ≥ 2"
        }
    }
}

impl fmt::Display for CatalogueEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cases: Vec<&str> = self.cases.iter().map(|c| c.name()).collect();
        let only = if self.cases.len() == 1 { " only" } else { "" };
        write!(f, "{}: {}; {}{only}, {}", self.name, self.anchor, cases.join(" and "), self.sizes())?;
        if self.documented_mismatch {
            f.write_str("; documented mismatch allowed")?;
        }
        Ok(())
    }
}

pub fn list_checks() -> Vec<CatalogueEntry> {
    registry()
        .iter()
        .map(|c| CatalogueEntry {
            name: c.name,
            anchor: c.anchor,
            cases: c.cases.to_vec(),
            documented_mismatch: c.documented_mismatch,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_lines() {
        let all = list_checks();
        assert!(all.len() >= 10);
        let blocks = all.iter().find(|e| e.name == "reflection_blocks").unwrap();
        assert!(blocks.to_string().contains("; so only, N ≥ 2"));
        let general = all.iter().find(|e| e.name == "reflection_principal_general").unwrap();
        assert!(general.to_string().contains("so and sp"));
        assert!(general.to_string().ends_with("documented mismatch allowed"));
    }
}
