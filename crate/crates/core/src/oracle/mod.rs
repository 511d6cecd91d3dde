//! Brute-force cross-checks that do not depend on the structure theory:
//! exhaustive enumeration of small groups, catalogs of small nonabelian
//! groups, normal subgroups and the literal definition of JN2.

mod catalog;
mod enumerate;
mod normal;

pub use catalog::{
    constructed_catalog_upto, exhaustive_catalog_upto, nonabelian_catalog_upto, CatalogEntry,
    GroupCatalog, Provenance, EXHAUSTIVE_LIMIT, NONABELIAN_CATALOG_LIMIT,
};
pub use enumerate::{enumerate_groups_exhaustive, DEFAULT_ENUMERATION_BUDGET};
pub use normal::{
    conjugacy_classes, is_jn2_by_definition, is_just_nonabelian, normal_subgroups,
    NORMAL_SUBGROUP_LIMIT,
};
