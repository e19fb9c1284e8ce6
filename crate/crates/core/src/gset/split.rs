//! Splitting a G-set with isotropy outside a family into free Weyl-sets.
//!
//! An equivariant map `G/H → X` is determined by the image `x` of `eH`, which
//! must satisfy `H ⊆ Stab(x)`; it is injective exactly when `Stab(x) = H`.
//! So `Map_G^inj(G/H, X)` is the set of points with stabilizer exactly `H`,
//! on which `W_G(H)` acts freely.

use super::{fixed_points, orbit_type, GSet, GSetType};
use crate::error::{Error, Result};
use crate::families::Family;
use crate::group_core::GroupRef;

#[derive(Clone, Debug)]
pub struct SplitPart {
    pub class: usize,
    /// Number of free `W_G(H)`-orbits.
    pub rank: usize,
    /// `Map_G^inj(G/H, X)` as a `W_G(H)`-set.
    pub injective_maps: GSet,
}

/// One part per subgroup class outside the family, ranks possibly zero.
#[derive(Clone, Debug)]
pub struct FSplitting {
    pub group: GroupRef,
    pub parts: Vec<SplitPart>,
}

impl FSplitting {
    pub fn rank(&self, class: usize) -> usize {
        self.parts
            .iter()
            .find(|p| p.class == class)
            .map_or(0, |p| p.rank)
    }
}

/// `Map_G^inj(G/H, X)` for `H` the representative of `class`.
pub fn injective_maps(x: &GSet, class: usize) -> GSet {
    let g = x.group();
    let h = g.subgroup_class(class).representative();
    let fp = fixed_points(x, class);
    let exact: Vec<usize> = (0..fp.set.size())
        .filter(|&i| x.stabilizer(fp.points[i]) == *h)
        .collect();
    fp.set.restrict_to_points(&exact)
}

pub fn f_split(x: &GSet, f: &Family) -> Result<FSplitting> {
    let g = x.group();
    let ty = orbit_type(x);
    if let Some((c, _)) = ty.entries().find(|&(c, _)| f.contains(c)) {
        return Err(Error::IsotropyInFamily(format!(
            "orbit type G/{} lies in the family",
            g.subgroup_class(c).name()
        )));
    }
    let parts = (0..g.subgroup_classes().len())
        .filter(|&c| !f.contains(c))
        .map(|class| {
            let maps = injective_maps(x, class);
            let weyl = maps.group().order();
            debug_assert!(maps.is_free());
            debug_assert_eq!(maps.size() % weyl, 0);
            SplitPart {
                class,
                rank: maps.size() / weyl,
                injective_maps: maps,
            }
        })
        .collect();
    Ok(FSplitting {
        group: g.clone(),
        parts,
    })
}

pub fn f_assemble(s: &FSplitting) -> GSetType {
    GSetType::from_multiplicities(s.parts.iter().map(|p| (p.class, p.rank)))
}
