//! For C6 the two algebras glued from 1 x 1 along (id, id) and (id, swap) are
//! not isomorphic, so some separable algebra is not standard. C30 fails the
//! conditions at proper subgroups and gets no witness.

use std::sync::Arc;

use equisep::classifier::{witness_nonstandard, WitnessSearch};
use equisep::conditions::RingDescriptor;
use equisep::group_core::make_group;

fn main() -> equisep::Result<()> {
    for spec in ["C6", "C10", "C30", "C8"] {
        let g = Arc::new(make_group(spec)?);
        match witness_nonstandard(&g, &RingDescriptor::sphere())? {
            WitnessSearch::Found(w) => {
                println!(
                    "{spec}: eta = {}, {} components over the corner",
                    w.eta_string(),
                    w.fiber_size
                );
                for orbit in &w.certificate {
                    println!("    {{{}}}", orbit.join(", "));
                }
            }
            WitnessSearch::Absent { reasons, .. } => {
                println!("{spec}: no witness");
                for r in reasons {
                    println!("    {r}");
                }
            }
        }
    }
    Ok(())
}
