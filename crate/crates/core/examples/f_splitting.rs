//! Splitting a C6-set with isotropy outside {e} into free Weyl-sets.

use std::sync::Arc;

use equisep::families::Family;
use equisep::group_core::make_group;
use equisep::gset::{f_assemble, f_split, GSetType};

fn main() -> equisep::Result<()> {
    let g = Arc::new(make_group("C6")?);
    let f = Family::from_classes(&g, [g.trivial_class()])?;
    let x = GSetType::from_multiplicities([(1, 2), (2, 3), (3, 1)]).realize(&g);
    let split = f_split(&x, &f)?;
    for part in &split.parts {
        let class = g.subgroup_class(part.class);
        println!(
            "H={:<3} |W|={} injective maps={:<2} rank={}",
            class.name(),
            class.weyl_order(),
            part.injective_maps.size(),
            part.rank
        );
    }
    println!("reassembled: {}", f_assemble(&split).label(&g));
    Ok(())
}
