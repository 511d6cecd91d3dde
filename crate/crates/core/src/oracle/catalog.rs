use std::fmt;
use std::fs;
use std::path::Path;

use super::enumerate::enumerate_groups_exhaustive;
use crate::fingroup::io::write_cayley;
use crate::fingroup::{
    alternating, cyclic, dicyclic, dihedral, direct_product, elementary_abelian, symmetric,
    FiniteGroup,
};
use crate::{Error, Result};

/// Largest order up to which [`nonabelian_catalog_upto`] is complete.
pub const NONABELIAN_CATALOG_LIMIT: usize = 15;

/// Largest order enumerated exhaustively by default.
pub const EXHAUSTIVE_LIMIT: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Machine-verified complete at this order.
    Exhaustive,
    /// Built from known constructions; completeness is classical.
    Constructed,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Exhaustive => "exhaustive",
            Provenance::Constructed => "constructed",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub order: usize,
    pub group: FiniteGroup,
    pub provenance: Provenance,
}

impl CatalogEntry {
    pub fn name(&self) -> String {
        self.group
            .label()
            .map_or_else(|| format!("order{}", self.order), str::to_string)
    }
}

#[derive(Clone, Debug, Default)]
pub struct GroupCatalog {
    pub max_order: usize,
    pub entries: Vec<CatalogEntry>,
}

impl GroupCatalog {
    pub fn tier(&self, order: usize) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(move |e| e.order == order)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// File name of entry `i`: `order<k>_<index>.grp`, indexed from 1 within
    /// each order.
    pub fn file_name(&self, i: usize) -> String {
        let order = self.entries[i].order;
        let index = self.entries[..i]
            .iter()
            .filter(|e| e.order == order)
            .count()
            + 1;
        format!("order{order}_{index}.grp")
    }

    /// Writes one Cayley-table file per entry plus `index.txt`, whose lines
    /// are `<file> <order> <provenance> <name>`.
    pub fn export(&self, dir: impl AsRef<Path>) -> Result<Vec<String>> {
        let dir = dir.as_ref();
        fs::create_dir_all(dir)?;
        let mut index = String::new();
        let mut names = Vec::new();
        for (i, e) in self.entries.iter().enumerate() {
            let file = self.file_name(i);
            fs::write(dir.join(&file), write_cayley(&e.group))?;
            index.push_str(&format!(
                "{file} {} {} {}\n",
                e.order,
                e.provenance,
                e.name()
            ));
            names.push(file);
        }
        fs::write(dir.join("index.txt"), index)?;
        Ok(names)
    }
}

/// Known groups of order `k`, used to name enumerated groups.
fn named_candidates(k: usize) -> Vec<FiniteGroup> {
    let mut out = vec![cyclic(k)];
    for (p, e) in [(2usize, 2), (2, 3), (3, 2), (2, 4)] {
        if p.pow(e) == k {
            out.push(elementary_abelian(p, e));
        }
    }
    if k >= 6 && k % 2 == 0 {
        out.push(dihedral(k));
    }
    if k >= 8 && k % 4 == 0 {
        out.push(dicyclic(k));
    }
    for a in 2..k {
        if k % a == 0 && a <= k / a {
            if let (Ok(x), Ok(y)) = (cyclic(a), cyclic(k / a)) {
                out.push(direct_product(&x, &y));
            }
        }
    }
    if k == 12 {
        out.push(alternating(4));
    }
    out.into_iter().filter_map(Result::ok).collect()
}

fn name_of(g: &FiniteGroup) -> Result<Option<String>> {
    for c in named_candidates(g.order()) {
        if g.order_profile() == c.order_profile() && g.is_isomorphic(&c)?.is_some() {
            return Ok(c
                .label()
                .map(|l| l.replace("Dic8", "Q8").replace("D6", "S3")));
        }
    }
    Ok(None)
}

/// Every group of each order `1..=max_order`, enumerated exhaustively.
pub fn exhaustive_catalog_upto(max_order: usize, budget: u64) -> Result<GroupCatalog> {
    let mut entries = Vec::new();
    for k in 1..=max_order {
        for g in enumerate_groups_exhaustive(k, budget)? {
            let g = match name_of(&g)? {
                Some(name) => g.with_label(name),
                None => g,
            };
            entries.push(CatalogEntry {
                order: k,
                group: g,
                provenance: Provenance::Exhaustive,
            });
        }
    }
    Ok(GroupCatalog { max_order, entries })
}

/// The nonabelian groups of order at most `max_order ≤ 15`.
///
/// Tiers up to order 8 are checked against exhaustive enumeration and tagged
/// as such; larger tiers are constructed.
pub fn nonabelian_catalog_upto(max_order: usize) -> Result<GroupCatalog> {
    if max_order > NONABELIAN_CATALOG_LIMIT {
        return Err(Error::ParamRange(format!(
            "the nonabelian catalog is complete only up to order {NONABELIAN_CATALOG_LIMIT}"
        )));
    }
    let constructed = [
        symmetric(3)?.with_label("S3"),
        dihedral(8)?,
        dicyclic(8)?.with_label("Q8"),
        dihedral(10)?,
        dihedral(12)?,
        alternating(4)?,
        dicyclic(12)?,
        dihedral(14)?,
    ];
    let mut entries: Vec<CatalogEntry> = constructed
        .into_iter()
        .filter(|g| g.order() <= max_order)
        .map(|g| CatalogEntry {
            order: g.order(),
            group: g,
            provenance: Provenance::Constructed,
        })
        .collect();
    for (i, x) in entries.iter().enumerate() {
        for y in &entries[..i] {
            if x.order == y.order && x.group.is_isomorphic(&y.group)?.is_some() {
                return Err(Error::Internal(format!(
                    "catalog entries {} and {} are isomorphic",
                    x.name(),
                    y.name()
                )));
            }
        }
    }
    for k in 1..=max_order.min(EXHAUSTIVE_LIMIT) {
        let enumerated: Vec<FiniteGroup> =
            enumerate_groups_exhaustive(k, super::DEFAULT_ENUMERATION_BUDGET)?
                .into_iter()
                .filter(|g| !g.is_abelian())
                .collect();
        let tier: Vec<usize> = (0..entries.len())
            .filter(|&i| entries[i].order == k)
            .collect();
        if tier.len() != enumerated.len() {
            return Err(Error::Internal(format!(
                "order {k}: catalog has {} nonabelian groups, enumeration finds {}",
                tier.len(),
                enumerated.len()
            )));
        }
        for &i in &tier {
            let mut matched = false;
            for g in &enumerated {
                if entries[i].group.is_isomorphic(g)?.is_some() {
                    matched = true;
                    break;
                }
            }
            if !matched {
                return Err(Error::Internal(format!(
                    "{} is missing from the enumeration",
                    entries[i].name()
                )));
            }
            entries[i].provenance = Provenance::Exhaustive;
        }
    }
    Ok(GroupCatalog { max_order, entries })
}

/// Further constructed groups up to `max_order`, abelian and nonabelian, for
/// broad cross-checks: cyclic, elementary abelian, dihedral, dicyclic, small
/// direct products and a few permutation groups.
pub fn constructed_catalog_upto(max_order: usize) -> Result<GroupCatalog> {
    let mut groups: Vec<FiniteGroup> = Vec::new();
    for k in 1..=max_order {
        groups.push(cyclic(k)?);
        if k >= 6 && k % 2 == 0 {
            groups.push(dihedral(k)?);
        }
        if k >= 8 && k % 4 == 0 {
            groups.push(dicyclic(k)?);
        }
    }
    for (p, e) in [(2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 2), (3, 3)] {
        groups.push(elementary_abelian(p, e)?);
    }
    groups.push(symmetric(4)?);
    groups.push(alternating(4)?);
    let factors = [
        cyclic(2)?,
        cyclic(3)?,
        cyclic(4)?,
        symmetric(3)?.with_label("S3"),
        dihedral(8)?,
        dicyclic(8)?.with_label("Q8"),
        alternating(4)?,
    ];
    for (i, x) in factors.iter().enumerate() {
        for y in &factors[i..] {
            groups.push(direct_product(x, y)?);
        }
    }
    let entries = groups
        .into_iter()
        .filter(|g| g.order() <= max_order)
        .map(|g| CatalogEntry {
            order: g.order(),
            group: g,
            provenance: Provenance::Constructed,
        })
        .collect();
    Ok(GroupCatalog { max_order, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::io::read_cayley_file;

    #[test]
    fn nonabelian_tiers() {
        let c = nonabelian_catalog_upto(15).unwrap();
        assert_eq!(c.len(), 8);
        assert_eq!(c.tier(12).count(), 3);
        assert_eq!(c.tier(8).count(), 2);
        assert_eq!(c.tier(15).count(), 0);
        assert!(c.tier(8).all(|e| e.provenance == Provenance::Exhaustive));
        assert!(c.tier(12).all(|e| e.provenance == Provenance::Constructed));
        assert!(nonabelian_catalog_upto(16).is_err());
    }

    #[test]
    fn exhaustive_names() {
        let c = exhaustive_catalog_upto(8, super::super::DEFAULT_ENUMERATION_BUDGET).unwrap();
        let names: Vec<String> = c.tier(8).map(CatalogEntry::name).collect();
        assert_eq!(names.len(), 5);
        for expected in ["C8", "E(2^3)", "D8", "Q8"] {
            assert!(names.iter().any(|n| n == expected), "{names:?}");
        }
        assert_eq!(c.tier(6).filter(|e| e.name() == "S3").count(), 1);
    }

    #[test]
    fn export_round_trip() {
        let c = nonabelian_catalog_upto(8).unwrap();
        let dir = std::env::temp_dir().join(format!("braidquot-catalog-{}", std::process::id()));
        let files = c.export(&dir).unwrap();
        assert_eq!(files, ["order6_1.grp", "order8_1.grp", "order8_2.grp"]);
        let index = fs::read_to_string(dir.join("index.txt")).unwrap();
        assert_eq!(index.lines().next(), Some("order6_1.grp 6 exhaustive S3"));
        let back = read_cayley_file(dir.join("order8_2.grp")).unwrap();
        assert!(back.is_isomorphic(&c.entries[2].group).unwrap().is_some());
        fs::remove_dir_all(dir).unwrap();
    }

    #[test]
    fn constructed_catalog_bounds() {
        let c = constructed_catalog_upto(64).unwrap();
        assert!(c.entries.iter().all(|e| e.order <= 64));
        assert!(c.entries.iter().any(|e| e.order == 64));
    }
}
