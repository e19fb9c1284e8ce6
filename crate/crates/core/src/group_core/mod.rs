//! Finite permutation groups: construction, subgroup classes, Weyl groups,
//! double cosets and structural predicates.

mod group;
mod lattice;
mod parse;
mod perm;

pub use group::{Group, GroupRef, Subgroup, DEFAULT_MAX_ORDER};
pub use lattice::SubgroupClass;
pub use parse::{make_group, make_group_bounded};
pub use perm::Perm;

use serde::Serialize;

use crate::error::{Error, Result};

/// All conjugacy classes of subgroups, sorted by (order, canonical key).
pub fn subgroup_conjugacy_classes(g: &Group) -> &[SubgroupClass] {
    g.subgroup_classes()
}

/// `W_G(H) = N_G(H)/H` realized on the cosets of `H` in `N_G(H)`, with a
/// lift of each Weyl element back to an element of `G`.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub group: GroupRef,
    /// `lifts[w]` is an element of `N_G(H)` (index into `G`) mapping to `w`.
    pub lifts: Vec<usize>,
    pub normalizer: Subgroup,
}

pub fn weyl_group(g: &Group, h: &Subgroup) -> Group {
    let WeylGroup { group, .. } = weyl_data(g, h);
    std::sync::Arc::try_unwrap(group).expect("fresh Arc")
}

pub fn weyl_data(g: &Group, h: &Subgroup) -> WeylGroup {
    let normalizer = g.normalizer(h);
    // number cosets nH of H in N by their minimal element
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for &n in normalizer.elements() {
        if coset_of[n] == usize::MAX {
            for &x in h.elements() {
                coset_of[g.mul(n, x)] = reps.len();
            }
            reps.push(n);
        }
    }
    let degree = reps.len();
    let action = |n: usize| {
        Perm::from_images_unchecked(reps.iter().map(|&r| coset_of[g.mul(n, r)]).collect())
    };
    let gens: Vec<Perm> = g
        .subgroup_generators(&normalizer)
        .into_iter()
        .map(action)
        .collect();
    let group = Group::generated(degree, gens, g.max_order()).expect("quotient of a bounded group");
    let mut lifts = vec![usize::MAX; group.order()];
    for &n in normalizer.elements() {
        let w = group
            .index_of(&action(n))
            .expect("image lies in the Weyl group");
        if lifts[w] == usize::MAX {
            lifts[w] = n;
        }
    }
    WeylGroup {
        group: std::sync::Arc::new(group),
        lifts,
        normalizer,
    }
}

/// `H \ G / K` with representatives (the minimal element of each double coset).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCosetDecomposition {
    pub representatives: Vec<usize>,
    pub sizes: Vec<usize>,
    /// Double coset index of every element of `G`.
    pub assignment: Vec<usize>,
}

impl DoubleCosetDecomposition {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }
}

pub fn double_cosets(g: &Group, h: &Subgroup, k: &Subgroup) -> Result<DoubleCosetDecomposition> {
    for (name, s) in [("H", h), ("K", k)] {
        g.subgroup_from_elements(s.elements())
            .map_err(|e| Error::NotSubgroup(format!("{name}: {e}")))?;
    }
    let n = g.order();
    let mut assignment = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    let mut sizes = Vec::new();
    for x in 0..n {
        if assignment[x] != usize::MAX {
            continue;
        }
        let id = representatives.len();
        let mut size = 0;
        for &a in h.elements() {
            let ax = g.mul(a, x);
            for &b in k.elements() {
                let y = g.mul(ax, b);
                if assignment[y] == usize::MAX {
                    assignment[y] = id;
                    size += 1;
                }
            }
        }
        representatives.push(x);
        sizes.push(size);
    }
    Ok(DoubleCosetDecomposition {
        representatives,
        sizes,
        assignment,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupFlags {
    pub order: usize,
    pub is_trivial: bool,
    /// Nontrivial group of prime-power order.
    pub is_p_group: bool,
    pub prime: Option<u64>,
    pub is_solvable: bool,
    pub prime_divisors: Vec<u64>,
}

pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Derived series `G ⊇ [G,G] ⊇ ...`, ending where it stabilizes.
pub fn derived_series(g: &Group) -> Vec<Subgroup> {
    let mut series = vec![g.whole()];
    loop {
        let last = series.last().unwrap();
        let next = g.commutator_subgroup(last);
        if next == *last {
            return series;
        }
        series.push(next);
    }
}

pub fn group_flags(g: &Group) -> GroupFlags {
    let order = g.order();
    let primes = prime_divisors(order as u64);
    let is_p_group = primes.len() == 1;
    GroupFlags {
        order,
        is_trivial: order == 1,
        is_p_group,
        prime: if is_p_group { Some(primes[0]) } else { None },
        is_solvable: derived_series(g).last().unwrap().is_trivial(),
        prime_divisors: primes,
    }
}

/// Classes of perfect subgroups (`[H,H] = H`), the trivial subgroup included.
pub fn perfect_subgroup_classes(g: &Group) -> Vec<&SubgroupClass> {
    g.subgroup_classes()
        .iter()
        .filter(|c| g.commutator_subgroup(c.representative()) == *c.representative())
        .collect()
}
