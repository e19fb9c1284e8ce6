use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use super::lattice::SubgroupLattice;
use super::perm::Perm;
use crate::error::{Error, Result};

/// Default bound on the order of any group the library will enumerate.
pub const DEFAULT_MAX_ORDER: usize = 2000;

/// A finite permutation group with all of its elements enumerated.
///
/// Elements are stored sorted lexicographically by image list, so element
/// index order agrees with the lexicographic order on permutations and the
/// identity always has index 0.
pub struct Group {
    degree: usize,
    generators: Vec<usize>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    max_order: usize,
    table: OnceLock<Table>,
    lattice: OnceLock<SubgroupLattice>,
}

struct Table {
    mul: Vec<u32>,
    inv: Vec<u32>,
}

/// A subgroup of a fixed parent [`Group`], as a sorted list of element indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Sorted element indices into the parent group.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&g| other.contains(g))
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub(crate) fn from_sorted(elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup { elements }
    }
}

impl Group {
    /// Closes `generators` under composition (breadth-first, Dimino style),
    /// failing as soon as more than `max_order` elements appear.
    pub fn generated(degree: usize, generators: Vec<Perm>, max_order: usize) -> Result<Group> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::Parse(format!(
                    "generator {g} has degree {} but the group acts on {degree} points",
                    g.degree()
                )));
            }
        }
        let identity = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(identity.clone());
        queue.push_back(identity);
        while let Some(x) = queue.pop_front() {
            for s in &generators {
                let y = s.compose(&x);
                if !seen.contains(&y) {
                    if seen.len() >= max_order {
                        return Err(Error::ResourceBound { bound: max_order });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort();
        Ok(Self::from_sorted_elements(
            degree,
            elements,
            &generators,
            max_order,
        ))
    }

    /// `elements` must be sorted, closed, and contain every generator.
    fn from_sorted_elements(
        degree: usize,
        elements: Vec<Perm>,
        generators: &[Perm],
        max_order: usize,
    ) -> Group {
        let index: HashMap<Perm, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut gens: Vec<usize> = generators
            .iter()
            .map(|g| index[g])
            .filter(|&i| i != 0)
            .collect();
        gens.sort_unstable();
        gens.dedup();
        Group {
            degree,
            generators: gens,
            elements,
            index,
            max_order,
            table: OnceLock::new(),
            lattice: OnceLock::new(),
        }
    }

    pub fn trivial(degree: usize) -> Group {
        Self::from_sorted_elements(degree, vec![Perm::identity(degree)], &[], DEFAULT_MAX_ORDER)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// Generator indices (never the identity).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_perms(&self) -> Vec<Perm> {
        self.generators
            .iter()
            .map(|&g| self.elements[g].clone())
            .collect()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub const IDENTITY: usize = 0;

    fn table(&self) -> &Table {
        self.table.get_or_init(|| {
            let n = self.elements.len();
            let mut mul = vec![0u32; n * n];
            let mut inv = vec![0u32; n];
            for (a, pa) in self.elements.iter().enumerate() {
                for (b, pb) in self.elements.iter().enumerate() {
                    mul[a * n + b] = self.index[&pa.compose(pb)] as u32;
                }
                inv[a] = self.index[&pa.inverse()] as u32;
            }
            Table { mul, inv }
        })
    }

    /// Index of `a ∘ b`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table().mul[a * self.elements.len() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.table().inv[a] as usize
    }

    /// `g x g⁻¹`.
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != Self::IDENTITY {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted((0..self.order()).collect())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_sorted(vec![Self::IDENTITY])
    }

    /// The subgroup generated by the given elements.
    pub fn closure(&self, gens: &[usize]) -> Subgroup {
        let n = self.order();
        let mut mask = vec![false; n];
        let mut list = vec![Self::IDENTITY];
        mask[Self::IDENTITY] = true;
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            for &s in gens {
                let y = self.mul(x, s);
                if !mask[y] {
                    mask[y] = true;
                    list.push(y);
                }
            }
            i += 1;
        }
        list.sort_unstable();
        Subgroup::from_sorted(list)
    }

    /// Validates that `elements` form a subgroup.
    pub fn subgroup_from_elements(&self, elements: &[usize]) -> Result<Subgroup> {
        let mut els: Vec<usize> = elements.to_vec();
        els.sort_unstable();
        els.dedup();
        if els.iter().any(|&g| g >= self.order()) {
            return Err(Error::NotSubgroup("element index out of range".into()));
        }
        let sub = Subgroup::from_sorted(els);
        if !sub.contains(Self::IDENTITY) {
            return Err(Error::NotSubgroup("identity missing".into()));
        }
        for &a in sub.elements() {
            for &b in sub.elements() {
                if !sub.contains(self.mul(a, b)) {
                    return Err(Error::NotSubgroup(format!(
                        "not closed: {} ∘ {} escapes",
                        self.elements[a], self.elements[b]
                    )));
                }
            }
        }
        Ok(sub)
    }

    /// The subgroup generated by permutations, all of which must lie in `self`.
    pub fn subgroup_generated_by(&self, perms: &[Perm]) -> Result<Subgroup> {
        let gens = perms
            .iter()
            .map(|p| {
                self.index_of(p)
                    .ok_or_else(|| Error::NotSubgroup(format!("{p} is not an element")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.closure(&gens))
    }

    /// Locates another group, acting on the same points, as a subgroup of `self`.
    pub fn embed(&self, other: &Group) -> Result<Subgroup> {
        if other.degree != self.degree {
            return Err(Error::NotSubgroup(format!(
                "degree {} differs from {}",
                other.degree, self.degree
            )));
        }
        let mut els = other
            .elements
            .iter()
            .map(|p| {
                self.index_of(p)
                    .ok_or_else(|| Error::NotSubgroup(format!("{p} is not an element")))
            })
            .collect::<Result<Vec<_>>>()?;
        els.sort_unstable();
        Ok(Subgroup::from_sorted(els))
    }

    /// A small generating set, chosen greedily in element order.
    pub fn subgroup_generators(&self, h: &Subgroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = self.trivial_subgroup();
        for &g in h.elements() {
            if !current.contains(g) {
                gens.push(g);
                current = self.closure(&gens);
                if current.order() == h.order() {
                    break;
                }
            }
        }
        gens
    }

    /// Materializes a subgroup as a group in its own right, acting on the same points.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> Group {
        let gens: Vec<Perm> = self
            .subgroup_generators(h)
            .into_iter()
            .map(|g| self.elements[g].clone())
            .collect();
        let elements: Vec<Perm> = h
            .elements()
            .iter()
            .map(|&g| self.elements[g].clone())
            .collect();
        Self::from_sorted_elements(self.degree, elements, &gens, self.max_order)
    }

    /// `g H g⁻¹`.
    pub fn conjugate(&self, h: &Subgroup, g: usize) -> Subgroup {
        let mut els: Vec<usize> = h.elements().iter().map(|&x| self.conj(g, x)).collect();
        els.sort_unstable();
        Subgroup::from_sorted(els)
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let els = (0..self.order())
            .filter(|&g| h.elements().iter().all(|&x| h.contains(self.conj(g, x))))
            .collect();
        Subgroup::from_sorted(els)
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        Subgroup::from_sorted(
            a.elements()
                .iter()
                .copied()
                .filter(|&g| b.contains(g))
                .collect(),
        )
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.normalizer(h).order() == self.order()
    }

    /// `[H, H]`, generated by all commutators of elements of `h`.
    pub fn commutator_subgroup(&self, h: &Subgroup) -> Subgroup {
        let mut comms: Vec<usize> = Vec::new();
        let mut mask = vec![false; self.order()];
        for &a in h.elements() {
            for &b in h.elements() {
                let c = self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)));
                if !mask[c] {
                    mask[c] = true;
                    comms.push(c);
                }
            }
        }
        self.closure(&comms)
    }

    /// Left coset index of each element of `g` relative to `h`, with cosets
    /// numbered in order of their minimal element. Returns the map together
    /// with the transversal of minimal coset representatives.
    pub fn left_cosets(&self, h: &Subgroup) -> (Vec<usize>, Vec<usize>) {
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for &x in h.elements() {
                coset_of[self.mul(g, x)] = id;
            }
        }
        (coset_of, reps)
    }

    pub(crate) fn lattice(&self) -> &SubgroupLattice {
        self.lattice.get_or_init(|| SubgroupLattice::compute(self))
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generator_perms())
            .finish()
    }
}

impl PartialEq for Group {
    /// Equality of element sets on the same points.
    fn eq(&self, other: &Group) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for Group {}

/// Groups are shared freely between G-sets and groupoids.
pub type GroupRef = Arc<Group>;
