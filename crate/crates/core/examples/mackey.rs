//! Restricting an induced G-set, directly and through double cosets.

use std::sync::Arc;

use equisep::group_core::{make_group, Perm};
use equisep::gset::{induce, mackey_decompose, orbit_type, restrict, GSet};

fn main() -> equisep::Result<()> {
    let g = Arc::new(make_group("S4")?);
    let h = Arc::new(make_group("perm:4:(1 2 3 4);(1 3)")?);
    let k = Arc::new(make_group("perm:4:(1 2 3);(1 2)")?);
    // Y = K/<(1 2)>, so G x_K Y = S4/<(1 2)>
    let l = k.subgroup_generated_by(&[Perm::from_cycles(4, "(1 2)")?])?;
    let y = GSet::cosets(k.clone(), &l);
    let direct = restrict(&induce(&g, &y)?, &h)?;
    let split = mackey_decompose(&g, &h, &y)?;
    println!("res(ind Y)  = {}", orbit_type(&direct).label(&h));
    println!("Mackey sum  = {}", orbit_type(&split).label(&h));
    Ok(())
}
