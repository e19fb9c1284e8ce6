//! Primitive idempotents of the Burnside ring: one block exactly when G is solvable.

use equisep::burnside::idempotent_block_count;
use equisep::group_core::{group_flags, make_group, perfect_subgroup_classes};

fn main() -> equisep::Result<()> {
    for spec in ["C6", "S4", "A4", "A5", "S5", "C2xA5"] {
        let g = make_group(spec)?;
        let perfect: Vec<&str> = perfect_subgroup_classes(&g)
            .iter()
            .map(|c| c.name())
            .collect();
        println!(
            "{spec:<6} |G|={:<4} solvable={:<5} blocks={} perfect={perfect:?}",
            g.order(),
            group_flags(&g).is_solvable,
            idempotent_block_count(&g),
        );
    }
    Ok(())
}
