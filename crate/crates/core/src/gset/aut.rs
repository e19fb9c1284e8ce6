use super::GSet;
use crate::error::Result;
use crate::group_core::{Group, Perm};

struct Orbit {
    class: usize,
    base: usize,
    /// `(point, t)` with `t·base = point`, for every point of the orbit.
    transversal: Vec<(usize, usize)>,
}

/// The group of G-equivariant bijections of `x`, acting on its points.
///
/// Orbits of the same type are identified through base points whose
/// stabilizer is exactly the class representative `H`; the group is then
/// generated by right translations by `N_G(H)` on one orbit of each type and
/// by swaps of adjacent orbits of the same type, giving `∏ W_G(H) ≀ Σ_n`.
pub fn aut_group(x: &GSet) -> Result<Group> {
    let g = x.group();
    let mut orbits: Vec<Orbit> = Vec::new();
    for orbit in x.orbits() {
        let (class, c) = g.class_of(&x.stabilizer(orbit[0]));
        let base = x.act(g.inv(c), orbit[0]);
        let mut transversal = vec![(base, Group::IDENTITY)];
        let mut seen = vec![false; x.size()];
        seen[base] = true;
        let mut i = 0;
        while i < transversal.len() {
            let (p, t) = transversal[i];
            for &s in g.generators() {
                let q = x.act(s, p);
                if !seen[q] {
                    seen[q] = true;
                    transversal.push((q, g.mul(s, t)));
                }
            }
            i += 1;
        }
        orbits.push(Orbit {
            class,
            base,
            transversal,
        });
    }
    orbits.sort_by_key(|o| o.class);

    let mut gens = Vec::new();
    for (i, o) in orbits.iter().enumerate() {
        let first_of_type = i == 0 || orbits[i - 1].class != o.class;
        if first_of_type {
            let rep = g.subgroup_class(o.class).representative();
            let normalizer = g.normalizer(rep);
            for n in g.subgroup_generators(&normalizer) {
                let mut images: Vec<usize> = (0..x.size()).collect();
                for &(p, t) in &o.transversal {
                    images[p] = x.act(g.mul(t, n), o.base);
                }
                gens.push(Perm::from_images_unchecked(images));
            }
        } else {
            let prev = &orbits[i - 1];
            let mut images: Vec<usize> = (0..x.size()).collect();
            for &(p, t) in &prev.transversal {
                images[p] = x.act(t, o.base);
            }
            for &(p, t) in &o.transversal {
                images[p] = x.act(t, prev.base);
            }
            gens.push(Perm::from_images_unchecked(images));
        }
    }
    Group::generated(x.size(), gens, g.max_order())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::group_core::make_group;
    use crate::gset::GSetType;

    #[test]
    fn aut_group_examples() {
        let c6 = Arc::new(make_group("C6").unwrap());
        assert_eq!(aut_group(&GSet::trivial(c6.clone(), 2)).unwrap().order(), 2);
        let free = GSet::cosets(c6.clone(), &c6.trivial_subgroup());
        assert_eq!(aut_group(&free).unwrap().order(), 6);
        let x = GSetType::from_multiplicities([(1, 2)]).realize(&c6);
        assert_eq!(aut_group(&x).unwrap().order(), 18);
        assert!(aut_group(&GSet::empty(c6)).unwrap().is_trivial());
    }

    #[test]
    fn automorphisms_are_equivariant() {
        let s3 = Arc::new(make_group("S3").unwrap());
        let x = GSetType::from_multiplicities([(0, 1), (1, 2), (3, 1)]).realize(&s3);
        let aut = aut_group(&x).unwrap();
        // |W(e)|·|W(C2)|²·2!·|W(S3)| = 6·1·2·1
        assert_eq!(aut.order(), 12);
        for phi in aut.elements() {
            for g in 0..s3.order() {
                for p in 0..x.size() {
                    assert_eq!(phi.apply(x.act(g, p)), x.act(g, phi.apply(p)));
                }
            }
        }
    }
}
