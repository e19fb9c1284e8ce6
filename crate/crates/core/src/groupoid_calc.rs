//! Skeletal finite groupoids, functors between them, and `π0` of pullbacks.
//!
//! A groupoid is stored as one object per component together with its
//! automorphism group. For functors `f: B → D` and `g: C → D`, the components
//! of the pullback lying over a pair `(b, c)` with `f(b) = g(c) = d` are in
//! bijection with the double cosets
//!
//! ```text
//! g(Aut_C(c)) \ Aut_D(d) / f(Aut_B(b))
//! ```
//!
//! where `Aut_C(c)` acts through `γ ↦ g(γ)⁻¹` (the anchor `η` is the identity
//! in a skeletal model).

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::sync::{Arc, OnceLock};

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::Family;
use crate::group_core::{double_cosets, make_group, Group, GroupRef, Perm, Subgroup};
use crate::gset::{aut_group, GSetType};

#[derive(Clone, Debug)]
pub struct Component {
    pub label: String,
    pub aut: GroupRef,
}

#[derive(Clone, Debug, Default)]
pub struct FiniteGroupoid {
    components: Vec<Component>,
}

impl FiniteGroupoid {
    pub fn new(components: Vec<Component>) -> Result<FiniteGroupoid> {
        let mut seen = HashSet::new();
        for c in &components {
            if !seen.insert(c.label.as_str()) {
                return Err(Error::Precondition(format!(
                    "duplicate component label {:?}",
                    c.label
                )));
            }
        }
        Ok(FiniteGroupoid { components })
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn find(&self, label: &str) -> Option<usize> {
        self.components.iter().position(|c| c.label == label)
    }
}

impl PartialEq for FiniteGroupoid {
    fn eq(&self, other: &Self) -> bool {
        self.components.len() == other.components.len()
            && self
                .components
                .iter()
                .zip(&other.components)
                .all(|(a, b)| a.label == b.label && a.aut == b.aut)
    }
}

/// A homomorphism between finite groups, stored as a full image table.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: GroupRef,
    target: GroupRef,
    images: Vec<usize>,
}

impl GroupHom {
    /// Extends images of the source's generators, verifying every relation.
    pub fn from_generator_images(
        source: GroupRef,
        target: GroupRef,
        generator_images: &[usize],
    ) -> Result<GroupHom> {
        if generator_images.len() != source.generators().len() {
            return Err(Error::NotHomomorphism(format!(
                "{} images for {} generators",
                generator_images.len(),
                source.generators().len()
            )));
        }
        if generator_images.iter().any(|&i| i >= target.order()) {
            return Err(Error::NotHomomorphism("image out of range".into()));
        }
        let mut images = vec![usize::MAX; source.order()];
        images[Group::IDENTITY] = Group::IDENTITY;
        let mut queue = VecDeque::from([Group::IDENTITY]);
        while let Some(x) = queue.pop_front() {
            for (&s, &t) in source.generators().iter().zip(generator_images) {
                let y = source.mul(s, x);
                let img = target.mul(t, images[x]);
                if images[y] == usize::MAX {
                    images[y] = img;
                    queue.push_back(y);
                } else if images[y] != img {
                    return Err(Error::NotHomomorphism(
                        "generator images violate a relation".into(),
                    ));
                }
            }
        }
        Ok(GroupHom {
            source,
            target,
            images,
        })
    }

    /// Images given as permutations of the target.
    pub fn from_generator_perms(
        source: GroupRef,
        target: GroupRef,
        generator_images: &[Perm],
    ) -> Result<GroupHom> {
        let idx = generator_images
            .iter()
            .map(|p| {
                target
                    .index_of(p)
                    .ok_or_else(|| Error::NotHomomorphism(format!("{p} is not in the target")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_generator_images(source, target, &idx)
    }

    pub fn trivial(source: GroupRef, target: GroupRef) -> GroupHom {
        let images = vec![Group::IDENTITY; source.order()];
        GroupHom {
            source,
            target,
            images,
        }
    }

    /// Every homomorphism, by brute force over generator images.
    pub fn all(source: &GroupRef, target: &GroupRef) -> Vec<GroupHom> {
        let k = source.generators().len();
        let m = target.order();
        let mut out = Vec::new();
        let mut choice = vec![0usize; k];
        loop {
            if let Ok(h) = Self::from_generator_images(source.clone(), target.clone(), &choice) {
                out.push(h);
            }
            let mut i = 0;
            loop {
                if i == k {
                    return out;
                }
                choice[i] += 1;
                if choice[i] < m {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }

    pub fn source(&self) -> &GroupRef {
        &self.source
    }

    pub fn target(&self) -> &GroupRef {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn image(&self) -> Subgroup {
        let mut els = self.images.clone();
        els.sort_unstable();
        els.dedup();
        self.target
            .subgroup_from_elements(&els)
            .expect("image of a homomorphism")
    }

    pub fn is_injective(&self) -> bool {
        self.image().order() == self.source.order()
    }
}

#[derive(Clone, Debug)]
pub struct GroupoidFunctor {
    source: FiniteGroupoid,
    target: FiniteGroupoid,
    component_map: Vec<usize>,
    aut_maps: Vec<GroupHom>,
}

impl GroupoidFunctor {
    pub fn new(
        source: FiniteGroupoid,
        target: FiniteGroupoid,
        component_map: Vec<usize>,
        aut_maps: Vec<GroupHom>,
    ) -> Result<GroupoidFunctor> {
        if component_map.len() != source.len() || aut_maps.len() != source.len() {
            return Err(Error::Precondition(
                "one component image and one homomorphism per source component".into(),
            ));
        }
        for (i, (&t, h)) in component_map.iter().zip(&aut_maps).enumerate() {
            if t >= target.len() {
                return Err(Error::Precondition(format!(
                    "component {i} maps out of range"
                )));
            }
            if *h.source != *source.components[i].aut || *h.target != *target.components[t].aut {
                return Err(Error::NotHomomorphism(format!(
                    "homomorphism for component {:?} has the wrong source or target",
                    source.components[i].label
                )));
            }
        }
        Ok(GroupoidFunctor {
            source,
            target,
            component_map,
            aut_maps,
        })
    }

    pub fn source(&self) -> &FiniteGroupoid {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroupoid {
        &self.target
    }

    pub fn component_map(&self) -> &[usize] {
        &self.component_map
    }

    pub fn aut_map(&self, component: usize) -> &GroupHom {
        &self.aut_maps[component]
    }

    /// Whether this functor is an equivalence of groupoids.
    pub fn is_equivalence(&self) -> bool {
        let mut hit = vec![false; self.target.len()];
        for &t in &self.component_map {
            if hit[t] {
                return false;
            }
            hit[t] = true;
        }
        hit.iter().all(|&h| h)
            && self
                .aut_maps
                .iter()
                .all(|h| h.is_injective() && h.source.order() == h.target.order())
    }
}

/// One component of a pullback groupoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PullbackComponent {
    /// Source components `(b, c)`.
    pub base: (usize, usize),
    pub base_labels: (String, String),
    /// The common target component `d`.
    pub target: usize,
    /// Minimal element (index into `Aut_D(d)`) of the double coset.
    pub eta_rep: usize,
    pub eta: Perm,
    /// Position of this double coset within its base pair.
    pub fiber_index: usize,
    /// Number of components over this base pair.
    pub fiber_size: usize,
    /// Number of elements of `Aut_D(d)` in the double coset.
    pub coset_size: usize,
    /// Order of the automorphism group `{(β, γ) : g(γ)·δ = δ·f(β)}`.
    pub aut_order: usize,
}

/// JSON form of a pullback component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PullbackComponentJson {
    pub base: [String; 2],
    pub eta_rep: String,
    pub fiber_index: usize,
    pub aut_order: usize,
}

impl PullbackComponent {
    pub fn to_json(&self) -> PullbackComponentJson {
        PullbackComponentJson {
            base: [self.base_labels.0.clone(), self.base_labels.1.clone()],
            eta_rep: self.eta.to_string(),
            fiber_index: self.fiber_index,
            aut_order: self.aut_order,
        }
    }
}

fn check_common_target(f: &GroupoidFunctor, g: &GroupoidFunctor) -> Result<()> {
    if f.target != g.target {
        return Err(Error::MismatchedTargets);
    }
    Ok(())
}

/// `π0` of the pullback of `f: B → D` and `g: C → D`, one entry per component,
/// ordered by base pair and then by double coset representative.
pub fn pullback_pi0(f: &GroupoidFunctor, g: &GroupoidFunctor) -> Result<Vec<PullbackComponent>> {
    check_common_target(f, g)?;
    let mut out = Vec::new();
    for (b, &db) in f.component_map.iter().enumerate() {
        for (c, &dc) in g.component_map.iter().enumerate() {
            if db != dc {
                continue;
            }
            let aut_d = &f.target.components[db].aut;
            let fb = &f.aut_maps[b];
            let gc = &g.aut_maps[c];
            // γ ↦ g(γ)⁻¹ has the same image as g
            let dcs = double_cosets(aut_d, &gc.image(), &fb.image())?;
            let product = fb.source.order() * gc.source.order();
            for (i, (&rep, &size)) in dcs.representatives.iter().zip(&dcs.sizes).enumerate() {
                out.push(PullbackComponent {
                    base: (b, c),
                    base_labels: (
                        f.source.components[b].label.clone(),
                        g.source.components[c].label.clone(),
                    ),
                    target: db,
                    eta_rep: rep,
                    eta: aut_d.element(rep).clone(),
                    fiber_index: i,
                    fiber_size: dcs.len(),
                    coset_size: size,
                    aut_order: product / size,
                });
            }
        }
    }
    Ok(out)
}

/// Largest automorphism group the brute-force oracle will enumerate.
pub const BRUTE_FORCE_MAX_AUT: usize = 64;

#[derive(Clone, Debug)]
pub struct BruteForceComponent {
    pub base: (usize, usize),
    /// The objects `(b, c, η)` in this component, by `η` index, sorted.
    pub etas: Vec<usize>,
    /// Automorphisms `(β, γ)`, acting on the disjoint union of the points of
    /// `Aut_B(b)` and `Aut_C(c)`.
    pub aut: GroupRef,
}

#[derive(Clone, Debug)]
pub struct BruteForcePullback {
    pub components: Vec<BruteForceComponent>,
}

impl BruteForcePullback {
    pub fn to_groupoid(&self) -> FiniteGroupoid {
        FiniteGroupoid {
            components: self
                .components
                .iter()
                .map(|c| Component {
                    label: format!("({},{},{})", c.base.0, c.base.1, c.etas[0]),
                    aut: c.aut.clone(),
                })
                .collect(),
        }
    }
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Materializes the pullback: objects `(b, c, η)` with `η ∈ Aut_D(f(b))`,
/// morphisms `(β, γ): (b, c, η) → (b, c, η')` whenever `η'·f(β) = g(γ)·η`,
/// components by union-find.
pub fn brute_force_pullback(
    f: &GroupoidFunctor,
    g: &GroupoidFunctor,
) -> Result<BruteForcePullback> {
    check_common_target(f, g)?;
    let too_big = |grp: &GroupRef| grp.order() > BRUTE_FORCE_MAX_AUT;
    if f.source
        .components
        .iter()
        .chain(&g.source.components)
        .chain(&f.target.components)
        .any(|c| too_big(&c.aut))
    {
        return Err(Error::ResourceBound {
            bound: BRUTE_FORCE_MAX_AUT,
        });
    }
    let mut components = Vec::new();
    for (b, &db) in f.component_map.iter().enumerate() {
        for (c, &dc) in g.component_map.iter().enumerate() {
            if db != dc {
                continue;
            }
            let d = &f.target.components[db].aut;
            let fb = &f.aut_maps[b];
            let gc = &g.aut_maps[c];
            let (aut_b, aut_c) = (&fb.source, &gc.source);
            let n = d.order();
            let mut dsu = Dsu((0..n).collect());
            let mut stabilizers: Vec<Vec<Perm>> = vec![Vec::new(); n];
            let total = aut_b.degree() + aut_c.degree();
            for eta in 0..n {
                for beta in 0..aut_b.order() {
                    for gamma in 0..aut_c.order() {
                        // η' = g(γ)·η·f(β)⁻¹
                        let target = d.mul(d.mul(gc.apply(gamma), eta), d.inv(fb.apply(beta)));
                        dsu.union(eta, target);
                        if target == eta {
                            stabilizers[eta].push(
                                aut_b
                                    .element(beta)
                                    .shifted(0, total)
                                    .compose(&aut_c.element(gamma).shifted(aut_b.degree(), total)),
                            );
                        }
                    }
                }
            }
            let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for eta in 0..n {
                groups.entry(dsu.find(eta)).or_default().push(eta);
            }
            for (_, etas) in groups {
                let rep = etas[0];
                let aut = Group::generated(
                    total,
                    stabilizers[rep].clone(),
                    d.max_order().max(BRUTE_FORCE_MAX_AUT * BRUTE_FORCE_MAX_AUT),
                )?;
                components.push(BruteForceComponent {
                    base: (b, c),
                    etas,
                    aut: Arc::new(aut),
                });
            }
        }
    }
    Ok(BruteForcePullback { components })
}

/// The component `1^{×n}` of separable algebras over an indecomposable unit,
/// with automorphism group `Σ_n`.
pub fn unit_power_component(n: usize, unit_indecomposable: bool) -> Result<Component> {
    if !unit_indecomposable {
        return Err(Error::Precondition(
            "automorphisms of 1^n are only Σ_n when the unit is indecomposable".into(),
        ));
    }
    let aut = if n == 0 {
        Group::trivial(0)
    } else {
        make_group(&format!("S{n}"))?
    };
    Ok(Component {
        label: format!("1^{n}"),
        aut: Arc::new(aut),
    })
}

/// `Σ_2^r` acting on `2r` points, factor `i` swapping `2i` and `2i+1`.
pub fn sigma2_power(r: usize) -> Result<Group> {
    if r == 0 {
        return Ok(Group::trivial(0));
    }
    let spec = vec!["S2"; r].join("x");
    make_group(&spec)
}

/// The diagonal `Σ_2 → Σ_2^r`.
pub fn diagonal_hom(sigma2: &GroupRef, power: &GroupRef) -> Result<GroupHom> {
    let r = power.degree() / 2;
    let all_swaps = Perm::from_images((0..2 * r).map(|i| i ^ 1).collect())?;
    GroupHom::from_generator_perms(sigma2.clone(), power.clone(), &[all_swaps])
}

/// Reads an element of `Σ_2^r` as a tuple of `id`/`swap`.
pub fn sigma2_tuple(p: &Perm) -> Vec<&'static str> {
    (0..p.degree() / 2)
        .map(|i| {
            if p.apply(2 * i) == 2 * i {
                "id"
            } else {
                "swap"
            }
        })
        .collect()
}

/// Every G-set type with isotropy outside `F` and cardinality at most `max_size`,
/// ordered by cardinality and then by orbit multiplicities.
pub fn truncated_types(g: &Group, f: &Family, max_size: usize) -> Vec<GSetType> {
    let orbit_sizes: Vec<(usize, usize)> = g
        .subgroup_classes()
        .iter()
        .filter(|c| !f.contains(c.index()))
        .map(|c| (c.index(), g.order() / c.order()))
        .filter(|&(_, s)| s <= max_size)
        .collect();
    let mut out = Vec::new();
    let mut mult = vec![0usize; orbit_sizes.len()];
    fn rec(
        i: usize,
        budget: usize,
        sizes: &[(usize, usize)],
        mult: &mut Vec<usize>,
        out: &mut Vec<GSetType>,
    ) {
        if i == sizes.len() {
            out.push(GSetType::from_multiplicities(
                sizes.iter().zip(mult.iter()).map(|(&(c, _), &n)| (c, n)),
            ));
            return;
        }
        let s = sizes[i].1;
        for n in 0..=budget / s {
            mult[i] = n;
            rec(i + 1, budget - n * s, sizes, mult, out);
        }
        mult[i] = 0;
    }
    rec(0, max_size, &orbit_sizes, &mut mult, &mut out);
    out.sort_by_key(|t| (t.cardinality(g), t.clone()));
    out
}

/// The groupoid of finite G-sets with isotropy outside `F` and at most
/// `max_size` points, one component per isomorphism class, the empty set included.
pub fn truncated_gset_groupoid(
    g: &GroupRef,
    f: &Family,
    max_size: usize,
) -> Result<FiniteGroupoid> {
    let components = truncated_types(g, f, max_size)
        .into_iter()
        .map(|t| {
            let aut = aut_group(&t.realize(g))?;
            Ok(Component {
                label: t.label(g),
                aut: Arc::new(aut),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    FiniteGroupoid::new(components)
}

fn small_groups() -> &'static [GroupRef] {
    static GROUPS: OnceLock<Vec<GroupRef>> = OnceLock::new();
    GROUPS.get_or_init(|| {
        [
            "C1", "C2", "C3", "C4", "C2xC2", "S3", "C5", "C6", "C7", "C8", "D4", "Q8", "C2xC4",
            "C2xC2xC2",
        ]
        .iter()
        .map(|s| Arc::new(make_group(s).expect("catalog group")))
        .collect()
    })
}

fn random_groupoid<R: Rng>(rng: &mut R, prefix: &str, max_components: usize) -> FiniteGroupoid {
    let n = rng.gen_range(1..=max_components);
    FiniteGroupoid {
        components: (0..n)
            .map(|i| Component {
                label: format!("{prefix}{i}"),
                aut: small_groups().choose(rng).unwrap().clone(),
            })
            .collect(),
    }
}

fn random_functor<R: Rng>(
    rng: &mut R,
    source: FiniteGroupoid,
    target: &FiniteGroupoid,
) -> GroupoidFunctor {
    let mut component_map = Vec::new();
    let mut aut_maps = Vec::new();
    for c in &source.components {
        let t = rng.gen_range(0..target.len());
        let homs = GroupHom::all(&c.aut, &target.components[t].aut);
        component_map.push(t);
        aut_maps.push(homs.choose(rng).unwrap().clone());
    }
    GroupoidFunctor::new(source, target.clone(), component_map, aut_maps)
        .expect("random functor is well formed")
}

/// A random cospan `B → D ← C` of skeletal groupoids with at most
/// `max_components` components each and automorphism groups of order ≤ 8.
pub fn random_cospan<R: Rng>(
    rng: &mut R,
    max_components: usize,
) -> (GroupoidFunctor, GroupoidFunctor) {
    let d = random_groupoid(rng, "d", max_components);
    let b = random_groupoid(rng, "b", max_components);
    let c = random_groupoid(rng, "c", max_components);
    let f = random_functor(rng, b, &d);
    let g = random_functor(rng, c, &d);
    (f, g)
}
