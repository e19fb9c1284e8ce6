//! Conjugacy classes of subgroups of S4, with normalizers and Weyl groups.

use equisep::group_core::{make_group, weyl_group};

fn main() -> equisep::Result<()> {
    let g = make_group("S4")?;
    println!(
        "|S4| = {}, {} classes of subgroups",
        g.order(),
        g.subgroup_classes().len()
    );
    for class in g.subgroup_classes() {
        let w = weyl_group(&g, class.representative());
        println!(
            "{:<5} order {:>2}  conjugates {:>2}  |N| {:>2}  |W| {:>2}",
            class.name(),
            class.order(),
            class.class_size(),
            class.normalizer_order(),
            w.order()
        );
    }
    Ok(())
}
