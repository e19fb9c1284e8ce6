//! Every separable algebra is standard for a p-group: print the truncated
//! classification groupoid for Q8.

use std::sync::Arc;

use equisep::classifier::classify;
use equisep::conditions::RingDescriptor;
use equisep::families::Family;
use equisep::group_core::make_group;

fn main() -> equisep::Result<()> {
    let g = Arc::new(make_group("Q8")?);
    let out = classify(&g, &RingDescriptor::sphere(), 6, &Family::empty())?;
    println!("verdict: {:?}", out.verdict);
    for c in &out.census {
        println!(
            "  |X|={:<2} |Aut|={:<6} {}",
            c.cardinality, c.aut_order, c.label
        );
    }
    Ok(())
}
