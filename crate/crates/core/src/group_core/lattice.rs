//! Conjugacy classes of subgroups by cyclic extension.
//!
//! Starting from the trivial subgroup, every class representative `U` is
//! extended by each element `g ∉ U` to `⟨U, g⟩`. Any subgroup `V` is
//! `⟨U, g⟩` for some proper subgroup `U`, and conjugating `V` moves `U` onto
//! its class representative, so extending representatives only reaches every
//! class.

use std::collections::HashMap;

use super::group::{Group, Subgroup};

/// A conjugacy class of subgroups of a fixed group.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    index: usize,
    representative: Subgroup,
    class_size: usize,
    normalizer_order: usize,
    canonical_key: Vec<u8>,
    name: String,
}

impl SubgroupClass {
    /// Position in the sorted class list of the parent group.
    pub fn index(&self) -> usize {
        self.index
    }

    /// Lexicographically minimal member of the class.
    pub fn representative(&self) -> &Subgroup {
        &self.representative
    }

    pub fn order(&self) -> usize {
        self.representative.order()
    }

    /// Number of subgroups in the class.
    pub fn class_size(&self) -> usize {
        self.class_size
    }

    pub fn normalizer_order(&self) -> usize {
        self.normalizer_order
    }

    /// `|W_G(H)| = |N_G(H)| / |H|`.
    pub fn weyl_order(&self) -> usize {
        self.normalizer_order / self.order()
    }

    /// Big-endian `u32` encoding of the representative's sorted element indices.
    pub fn canonical_key(&self) -> &[u8] {
        &self.canonical_key
    }

    /// 64-bit FNV-1a digest of the canonical key, as 16 hex digits.
    pub fn key_digest(&self) -> String {
        let mut h: u64 = 0xcbf29ce484222325;
        for &b in &self.canonical_key {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
        format!("{h:016x}")
    }

    /// Short human-readable name: `e`, `G`, or `H<order>` with a letter suffix
    /// when several classes share an order.
    pub fn name(&self) -> &str {
        &self.name
    }
}

pub(crate) struct SubgroupLattice {
    pub(crate) classes: Vec<SubgroupClass>,
    /// Every subgroup, keyed by its sorted elements, mapped to its class and
    /// an element `g` with `subgroup = g·rep·g⁻¹`.
    pub(crate) lookup: HashMap<Vec<usize>, (usize, usize)>,
    /// `subconj[k][h]`: class `k` is subconjugate to class `h`.
    pub(crate) subconj: Vec<Vec<bool>>,
}

struct Found {
    rep: Subgroup,
    conjugates: Vec<(Subgroup, usize)>,
}

impl SubgroupLattice {
    pub(crate) fn compute(g: &Group) -> SubgroupLattice {
        let n = g.order();
        let mut found: Vec<Found> = Vec::new();
        let mut known: HashMap<Vec<usize>, usize> = HashMap::new();

        let mut add = |v: Subgroup, found: &mut Vec<Found>| {
            if known.contains_key(v.elements()) {
                return;
            }
            let id = found.len();
            let mut conjugates: Vec<(Subgroup, usize)> = Vec::new();
            for x in 0..n {
                let c = g.conjugate(&v, x);
                if !known.contains_key(c.elements()) {
                    known.insert(c.elements().to_vec(), id);
                    conjugates.push((c, x));
                }
            }
            let rep = conjugates.iter().map(|(c, _)| c).min().unwrap().clone();
            found.push(Found { rep, conjugates });
        };

        add(g.trivial_subgroup(), &mut found);
        let mut next = 0;
        while next < found.len() {
            let rep = found[next].rep.clone();
            let base_gens = g.subgroup_generators(&rep);
            let mut tried = vec![false; n];
            for x in rep.elements() {
                tried[*x] = true;
            }
            for x in 0..n {
                if tried[x] {
                    continue;
                }
                // ⟨U, x⟩ = ⟨U, x·u⟩ for u ∈ U
                for &u in rep.elements() {
                    tried[g.mul(x, u)] = true;
                }
                let mut gens = base_gens.clone();
                gens.push(x);
                let v = g.closure(&gens);
                add(v, &mut found);
            }
            next += 1;
        }

        found.sort_by(|a, b| {
            (a.rep.order(), a.rep.elements()).cmp(&(b.rep.order(), b.rep.elements()))
        });

        let mut per_order: HashMap<usize, usize> = HashMap::new();
        for f in &found {
            *per_order.entry(f.rep.order()).or_default() += 1;
        }
        let mut seen_order: HashMap<usize, usize> = HashMap::new();

        let mut classes = Vec::with_capacity(found.len());
        let mut lookup = HashMap::new();
        for (i, f) in found.iter().enumerate() {
            let order = f.rep.order();
            let ordinal = {
                let c = seen_order.entry(order).or_default();
                *c += 1;
                *c - 1
            };
            let name = if order == 1 {
                "e".to_string()
            } else if order == n {
                "G".to_string()
            } else if per_order[&order] == 1 {
                format!("H{order}")
            } else if per_order[&order] <= 26 {
                format!("H{order}{}", (b'a' + ordinal as u8) as char)
            } else {
                format!("H{order}_{ordinal}")
            };
            let canonical_key = f
                .rep
                .elements()
                .iter()
                .flat_map(|&x| (x as u32).to_be_bytes())
                .collect();
            // The conjugators above map the first-found member onto each
            // conjugate; re-express them relative to the minimal representative.
            let (_, to_rep) = f.conjugates.iter().find(|(c, _)| *c == f.rep).unwrap();
            let from_rep = g.inv(*to_rep);
            for (c, x) in &f.conjugates {
                lookup.insert(c.elements().to_vec(), (i, g.mul(*x, from_rep)));
            }
            classes.push(SubgroupClass {
                index: i,
                representative: f.rep.clone(),
                class_size: f.conjugates.len(),
                normalizer_order: n / f.conjugates.len(),
                canonical_key,
                name,
            });
        }

        let c = found.len();
        let mut subconj = vec![vec![false; c]; c];
        for k in 0..c {
            for h in 0..c {
                let ko = found[k].rep.order();
                let ho = found[h].rep.order();
                if !ho.is_multiple_of(ko) {
                    continue;
                }
                subconj[k][h] = found[h]
                    .conjugates
                    .iter()
                    .any(|(conj, _)| found[k].rep.is_subset_of(conj));
            }
        }

        SubgroupLattice {
            classes,
            lookup,
            subconj,
        }
    }
}

impl Group {
    /// Conjugacy classes of subgroups, sorted by (order, canonical key).
    /// Computed once on first use.
    pub fn subgroup_classes(&self) -> &[SubgroupClass] {
        &self.lattice().classes
    }

    pub fn subgroup_class(&self, index: usize) -> &SubgroupClass {
        &self.lattice().classes[index]
    }

    /// Class of an arbitrary subgroup, together with `g` such that
    /// `h = g·rep·g⁻¹`.
    pub fn class_of(&self, h: &Subgroup) -> (usize, usize) {
        self.lattice().lookup[h.elements()]
    }

    /// Whether class `k` is subconjugate to class `h`.
    pub fn is_subconjugate(&self, k: usize, h: usize) -> bool {
        self.lattice().subconj[k][h]
    }

    /// Class index of the trivial subgroup (always 0).
    pub fn trivial_class(&self) -> usize {
        0
    }

    /// Class index of the whole group (always last).
    pub fn whole_class(&self) -> usize {
        self.subgroup_classes().len() - 1
    }

    /// Every subgroup (not just class representatives), in no fixed order.
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        self.lattice()
            .lookup
            .keys()
            .map(|k| Subgroup::from_sorted(k.clone()))
            .collect()
    }
}
