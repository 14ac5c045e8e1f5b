//! Named families, cycle notation, group files and the built-in catalog.

mod cycles;
mod families;
pub mod field;
mod file;

pub use cycles::{format_cycles, parse_cycles};
pub use families::{make_family, FamilySpec, PSL3_2_GENERATORS};
pub use file::{load_group_file, parse_group_file, render_group_file, save_group_file};

use crate::group::PermGroup;
use crate::series::is_soluble;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Family(FamilySpec),
    File(String),
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub group: PermGroup,
    pub soluble: bool,
    pub source: Source,
}

impl CatalogEntry {
    pub fn new(name: String, group: PermGroup, source: Source) -> Self {
        let soluble = is_soluble(&group);
        CatalogEntry {
            name,
            group,
            soluble,
            source,
        }
    }

    pub fn from_family(spec: FamilySpec) -> crate::Result<Self> {
        let group = make_family(spec)?;
        Ok(CatalogEntry::new(spec.label(), group, Source::Family(spec)))
    }
}

/// Family specs of the built-in catalog, in catalog order.
pub fn builtin_specs() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    specs.extend((1..=20).map(FamilySpec::Cyclic));
    specs.extend((3..=20).map(FamilySpec::Dihedral));
    specs.extend((2..=7).map(FamilySpec::Symmetric));
    specs.extend((3..=7).map(FamilySpec::Alternating));
    specs.extend([2, 3, 5, 7, 11, 13].map(FamilySpec::Agl1));
    specs.push(FamilySpec::FrobeniusPq { p: 11, q: 23 });
    specs.push(FamilySpec::Sl2(5));
    specs.extend([4, 5, 7, 8, 9, 11, 13].map(FamilySpec::Psl2));
    specs.push(FamilySpec::Psl3_2);
    specs
}

/// Built-in catalog filtered to groups of order at most `max_order`.
pub fn builtin_catalog(max_order: u128) -> Vec<CatalogEntry> {
    builtin_specs()
        .into_iter()
        .filter(|s| s.expected_order() <= max_order)
        .map(|s| CatalogEntry::from_family(s).expect("built-in specs are valid"))
        .collect()
}
