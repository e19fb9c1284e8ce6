//! IC, RC and separable closedness at every subgroup, for several coefficients.

use equisep::conditions::{stage_report, RingDescriptor};
use equisep::group_core::make_group;

fn main() -> equisep::Result<()> {
    let coefficients = [
        RingDescriptor::sphere(),
        RingDescriptor::integers(),
        RingDescriptor::prime_field(3)?,
    ];
    for spec in ["C4", "C6"] {
        let g = make_group(spec)?;
        for r in &coefficients {
            println!("G = {spec}, R = {}", r.name);
            for k in 0..g.subgroup_classes().len() {
                let s = stage_report(&g, r, k)?;
                println!(
                    "  K={:<3} |W|={} ic={:<5} rc={:<5} sep={:<5} {}",
                    s.subgroup, s.weyl_order, s.ic.holds, s.rc.holds, s.sep_closed, s.rc.reason
                );
            }
        }
    }
    Ok(())
}
