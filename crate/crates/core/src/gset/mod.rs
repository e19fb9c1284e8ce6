//! Finite G-sets as explicit action tables.
//!
//! Isomorphism of G-sets is decided by comparing [`GSetType`]s, which are a
//! complete invariant.

mod aut;
mod split;

pub use aut::aut_group;
pub use split::{f_assemble, f_split, injective_maps, FSplitting, SplitPart};

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group_core::{double_cosets, weyl_data, Group, GroupRef, Perm, Subgroup, WeylGroup};

/// A finite G-set: `table[g * size + x] = g·x`.
#[derive(Clone)]
pub struct GSet {
    group: GroupRef,
    size: usize,
    table: Vec<usize>,
}

impl GSet {
    /// Extends an action given on the group's generators (in the order of
    /// [`Group::generators`]) to the whole group, rejecting inconsistent input.
    pub fn from_generator_action(group: GroupRef, size: usize, images: &[Perm]) -> Result<GSet> {
        if images.len() != group.generators().len() {
            return Err(Error::InvalidAction(format!(
                "{} generator images for {} generators",
                images.len(),
                group.generators().len()
            )));
        }
        if let Some(p) = images.iter().find(|p| p.degree() != size) {
            return Err(Error::InvalidAction(format!(
                "generator image {p} does not act on {size} points"
            )));
        }
        let n = group.order();
        let mut rows: Vec<Option<Perm>> = vec![None; n];
        rows[Group::IDENTITY] = Some(Perm::identity(size));
        let mut queue = VecDeque::from([Group::IDENTITY]);
        while let Some(x) = queue.pop_front() {
            let px = rows[x].clone().unwrap();
            for (&s, ps) in group.generators().iter().zip(images) {
                let y = group.mul(s, x);
                let py = ps.compose(&px);
                match &rows[y] {
                    None => {
                        rows[y] = Some(py);
                        queue.push_back(y);
                    }
                    Some(existing) if *existing != py => {
                        return Err(Error::InvalidAction(
                            "generator images violate a relation of the group".into(),
                        ))
                    }
                    Some(_) => {}
                }
            }
        }
        let mut table = Vec::with_capacity(n * size);
        for row in rows {
            table.extend_from_slice(row.unwrap().images());
        }
        Ok(GSet { group, size, table })
    }

    /// Validates a full action table (`table[g * size + x]`).
    pub fn from_table(group: GroupRef, size: usize, table: Vec<usize>) -> Result<GSet> {
        let n = group.order();
        if table.len() != n * size {
            return Err(Error::InvalidAction("table has the wrong length".into()));
        }
        let x = GSet { group, size, table };
        for g in 0..n {
            Perm::from_images(x.row(g).to_vec())
                .map_err(|_| Error::InvalidAction(format!("row {g} is not a bijection")))?;
        }
        if (0..size).any(|p| x.act(Group::IDENTITY, p) != p) {
            return Err(Error::InvalidAction(
                "identity does not act trivially".into(),
            ));
        }
        for &s in x.group.generators() {
            for g in 0..n {
                let sg = x.group.mul(s, g);
                if (0..size).any(|p| x.act(sg, p) != x.act(s, x.act(g, p))) {
                    return Err(Error::InvalidAction("table is not a group action".into()));
                }
            }
        }
        Ok(x)
    }

    fn from_fn(group: GroupRef, size: usize, f: impl Fn(usize, usize) -> usize) -> GSet {
        let n = group.order();
        let mut table = Vec::with_capacity(n * size);
        for g in 0..n {
            for p in 0..size {
                table.push(f(g, p));
            }
        }
        GSet { group, size, table }
    }

    pub fn empty(group: GroupRef) -> GSet {
        GSet {
            group,
            size: 0,
            table: Vec::new(),
        }
    }

    /// `n` points with trivial action.
    pub fn trivial(group: GroupRef, n: usize) -> GSet {
        Self::from_fn(group, n, |_, p| p)
    }

    /// Left cosets `G/H`, numbered by minimal element; coset 0 is `eH`.
    pub fn cosets(group: GroupRef, h: &Subgroup) -> GSet {
        let (coset_of, reps) = group.left_cosets(h);
        let g2 = group.clone();
        Self::from_fn(group, reps.len(), move |g, i| coset_of[g2.mul(g, reps[i])])
    }

    /// Concatenates point sets; all parts must share the same group.
    pub fn disjoint_union(group: GroupRef, parts: &[GSet]) -> Result<GSet> {
        if parts.iter().any(|p| *p.group != *group) {
            return Err(Error::InvalidAction(
                "disjoint union of sets over different groups".into(),
            ));
        }
        let size = parts.iter().map(|p| p.size).sum();
        let mut table = Vec::with_capacity(group.order() * size);
        for g in 0..group.order() {
            let mut offset = 0;
            for p in parts {
                table.extend(p.row(g).iter().map(|&y| y + offset));
                offset += p.size;
            }
        }
        Ok(GSet { group, size, table })
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.table[g * self.size + x]
    }

    pub fn row(&self, g: usize) -> &[usize] {
        &self.table[g * self.size..(g + 1) * self.size]
    }

    /// Orbits, each sorted, listed in order of their minimal point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size];
        let mut out = Vec::new();
        for start in 0..self.size {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut i = 0;
            while i < orbit.len() {
                let x = orbit[i];
                for &s in self.group.generators() {
                    let y = self.act(s, x);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn stabilizer(&self, x: usize) -> Subgroup {
        let els: Vec<usize> = (0..self.group.order())
            .filter(|&g| self.act(g, x) == x)
            .collect();
        self.group
            .subgroup_from_elements(&els)
            .expect("stabilizers are subgroups")
    }

    /// Whether every point has trivial stabilizer.
    pub fn is_free(&self) -> bool {
        (1..self.group.order()).all(|g| (0..self.size).all(|x| self.act(g, x) != x))
    }

    /// Points whose stabilizer is not conjugate to the given class.
    pub fn points_outside_class(&self, class: usize) -> Vec<usize> {
        (0..self.size)
            .filter(|&x| self.group.class_of(&self.stabilizer(x)).0 != class)
            .collect()
    }

    /// Deletes every orbit of type `G/K`, keeping the order of the remaining points.
    pub fn without_class(&self, class: usize) -> GSet {
        self.restrict_to_points(&self.points_outside_class(class))
    }

    /// Sub-G-set on an invariant set of points, renumbered in the given order.
    fn restrict_to_points(&self, points: &[usize]) -> GSet {
        let mut new_id = vec![usize::MAX; self.size];
        for (i, &p) in points.iter().enumerate() {
            new_id[p] = i;
        }
        let src = self.clone();
        let pts = points.to_vec();
        Self::from_fn(self.group.clone(), points.len(), move |g, i| {
            let y = new_id[src.act(g, pts[i])];
            debug_assert_ne!(y, usize::MAX, "point set is not invariant");
            y
        })
    }
}

impl fmt::Debug for GSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GSet")
            .field("group_order", &self.group.order())
            .field("size", &self.size)
            .finish()
    }
}

/// Isomorphism class of a finite G-set: multiplicity of each orbit type `G/H`,
/// keyed by subgroup class index. The empty map is the empty G-set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GSetType {
    entries: BTreeMap<usize, usize>,
}

/// JSON form of one orbit type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GSetTypeEntry {
    pub subgroup_order: usize,
    pub class_key: String,
    pub class_name: String,
    pub multiplicity: usize,
}

impl GSetType {
    pub fn empty() -> GSetType {
        GSetType::default()
    }

    /// Zero multiplicities are dropped.
    pub fn from_multiplicities(entries: impl IntoIterator<Item = (usize, usize)>) -> GSetType {
        let mut t = GSetType::default();
        for (c, n) in entries {
            if n > 0 {
                *t.entries.entry(c).or_default() += n;
            }
        }
        t
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.entries.iter().map(|(&c, &n)| (c, n))
    }

    pub fn multiplicity(&self, class: usize) -> usize {
        self.entries.get(&class).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ n_i · [G : H_i]`.
    pub fn cardinality(&self, g: &Group) -> usize {
        self.entries
            .iter()
            .map(|(&c, &n)| n * g.order() / g.subgroup_class(c).order())
            .sum()
    }

    /// Deletes every orbit of the given type.
    pub fn without_class(&self, class: usize) -> GSetType {
        let mut t = self.clone();
        t.entries.remove(&class);
        t
    }

    /// `G/e + 2*G/H2`, or `0` for the empty G-set.
    pub fn label(&self, g: &Group) -> String {
        if self.entries.is_empty() {
            return "0".to_string();
        }
        self.entries
            .iter()
            .map(|(&c, &n)| {
                let name = g.subgroup_class(c).name();
                if n == 1 {
                    format!("G/{name}")
                } else {
                    format!("{n}*G/{name}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn to_json_entries(&self, g: &Group) -> Vec<GSetTypeEntry> {
        self.entries
            .iter()
            .map(|(&c, &n)| {
                let class = g.subgroup_class(c);
                GSetTypeEntry {
                    subgroup_order: class.order(),
                    class_key: class.key_digest(),
                    class_name: class.name().to_string(),
                    multiplicity: n,
                }
            })
            .collect()
    }

    /// A concrete G-set of this type: orbits `G/rep` concatenated in class order.
    pub fn realize(&self, g: &GroupRef) -> GSet {
        let parts: Vec<GSet> = self
            .entries
            .iter()
            .flat_map(|(&c, &n)| {
                let orbit = GSet::cosets(g.clone(), g.subgroup_class(c).representative());
                std::iter::repeat_n(orbit, n)
            })
            .collect();
        GSet::disjoint_union(g.clone(), &parts).expect("same group")
    }
}

/// Decomposes `X ≅ ⊔ n_i · G/H_i`.
pub fn orbit_type(x: &GSet) -> GSetType {
    GSetType::from_multiplicities(x.orbits().into_iter().map(|orbit| {
        let (class, _) = x.group.class_of(&x.stabilizer(orbit[0]));
        (class, 1)
    }))
}

/// `X^K` with its residual `W_G(K)`-action.
pub struct FixedPoints {
    pub weyl: WeylGroup,
    /// Fixed points as a `W_G(K)`-set.
    pub set: GSet,
    /// The original point behind each point of `set`.
    pub points: Vec<usize>,
}

/// Fixed points of the representative of subgroup class `class`.
pub fn fixed_points(x: &GSet, class: usize) -> FixedPoints {
    let k = x.group.subgroup_class(class).representative().clone();
    fixed_points_of(x, &k)
}

pub fn fixed_points_of(x: &GSet, k: &Subgroup) -> FixedPoints {
    fixed_points_with(x, k, weyl_data(&x.group, k))
}

pub(crate) fn fixed_points_with(x: &GSet, k: &Subgroup, weyl: WeylGroup) -> FixedPoints {
    let points: Vec<usize> = (0..x.size)
        .filter(|&p| k.elements().iter().all(|&g| x.act(g, p) == p))
        .collect();
    let mut new_id = vec![usize::MAX; x.size];
    for (i, &p) in points.iter().enumerate() {
        new_id[p] = i;
    }
    let lifts = weyl.lifts.clone();
    let src = x.clone();
    let pts = points.clone();
    let set = GSet::from_fn(weyl.group.clone(), points.len(), move |w, i| {
        new_id[src.act(lifts[w], pts[i])]
    });
    FixedPoints { weyl, set, points }
}

/// Number of points fixed by every element of `k`.
pub fn fixed_point_count(x: &GSet, k: &Subgroup) -> usize {
    (0..x.size)
        .filter(|&p| k.elements().iter().all(|&g| x.act(g, p) == p))
        .count()
}

/// Maps each element of `sub` (a group on the same points) to its index in `parent`.
fn embedding(parent: &Group, sub: &Group) -> Result<Vec<usize>> {
    sub.elements()
        .iter()
        .map(|p| {
            parent
                .index_of(p)
                .ok_or_else(|| Error::NotSubgroup(format!("{p} is not an element")))
        })
        .collect()
}

/// `G ×_K Y`, where `K` is the group of `y` and must be a subgroup of `g`.
/// Points are `(coset i, y)` numbered `i * |Y| + y`, cosets by minimal element.
pub fn induce(g: &GroupRef, y: &GSet) -> Result<GSet> {
    let k = g.embed(&y.group)?;
    let emb = embedding(g, &y.group)?;
    let mut local = vec![usize::MAX; g.order()];
    for (i, &e) in emb.iter().enumerate() {
        local[e] = i;
    }
    let (coset_of, reps) = g.left_cosets(&k);
    let ys = y.size;
    let g2 = g.clone();
    let y2 = y.clone();
    Ok(GSet::from_fn(g.clone(), reps.len() * ys, move |a, p| {
        let (i, yp) = (p / ys, p % ys);
        let b = g2.mul(a, reps[i]);
        let j = coset_of[b];
        let kk = g2.mul(g2.inv(reps[j]), b);
        j * ys + y2.act(local[kk], yp)
    }))
}

/// Restricts the action of `x` to a subgroup `h` (a group on the same points).
pub fn restrict(x: &GSet, h: &GroupRef) -> Result<GSet> {
    let emb = embedding(&x.group, h)?;
    let src = x.clone();
    Ok(GSet::from_fn(h.clone(), x.size, move |a, p| {
        src.act(emb[a], p)
    }))
}

/// `⊔_{g ∈ H\G/K} H ×_{H ∩ gKg⁻¹} (Y twisted by g)`, an `H`-set isomorphic to
/// `res_H (G ×_K Y)`. `K` is the group of `y`.
pub fn mackey_decompose(g: &GroupRef, h: &GroupRef, y: &GSet) -> Result<GSet> {
    let hs = g.embed(h)?;
    let ks = g.embed(&y.group)?;
    let emb_k = embedding(g, &y.group)?;
    let mut local_k = vec![usize::MAX; g.order()];
    for (i, &e) in emb_k.iter().enumerate() {
        local_k[e] = i;
    }
    let dc = double_cosets(g, &hs, &ks)?;
    let mut parts = Vec::with_capacity(dc.len());
    for &r in &dc.representatives {
        let kr = g.conjugate(&ks, r);
        let l = g.intersection(&hs, &kr);
        let l_group: GroupRef = Arc::new(g.subgroup_as_group(&l));
        let emb_l = embedding(g, &l_group)?;
        let r_inv = g.inv(r);
        let g2 = g.clone();
        let y2 = y.clone();
        let lk = local_k.clone();
        // l·y = (r⁻¹ l r)·y
        let twisted = GSet::from_fn(l_group, y.size, move |a, p| {
            let k_elem = g2.mul(g2.mul(r_inv, emb_l[a]), r);
            y2.act(lk[k_elem], p)
        });
        parts.push(induce(h, &twisted)?);
    }
    GSet::disjoint_union(h.clone(), &parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_core::make_group;

    fn grp(spec: &str) -> GroupRef {
        Arc::new(make_group(spec).unwrap())
    }

    fn sub_group(g: &GroupRef, class: usize) -> GroupRef {
        Arc::new(g.subgroup_as_group(g.subgroup_class(class).representative()))
    }

    #[test]
    fn orbit_type_examples() {
        let c2 = grp("C2");
        let regular = GSet::cosets(c2.clone(), &c2.trivial_subgroup());
        assert_eq!(
            orbit_type(&regular),
            GSetType::from_multiplicities([(0, 1)])
        );

        let c6 = grp("C6");
        let t = GSet::trivial(c6.clone(), 2);
        assert_eq!(
            orbit_type(&t),
            GSetType::from_multiplicities([(c6.whole_class(), 2)])
        );

        // S3 on its three letters: stabilizer of a point has order 2
        let s3 = grp("S3");
        let natural = GSet::from_generator_action(s3.clone(), 3, &s3.generator_perms()).unwrap();
        let ty = orbit_type(&natural);
        assert_eq!(ty.entries().collect::<Vec<_>>(), vec![(1, 1)]);
        assert_eq!(s3.subgroup_class(1).order(), 2);
        assert_eq!(ty.cardinality(&s3), 3);
    }

    #[test]
    fn invalid_actions_are_rejected() {
        let c3 = grp("C3");
        // a transposition cannot be the image of an element of order 3
        let bad = Perm::from_cycles(2, "(1 2)").unwrap();
        assert!(matches!(
            GSet::from_generator_action(c3.clone(), 2, &[bad]),
            Err(Error::InvalidAction(_))
        ));
        assert!(GSet::from_table(c3.clone(), 1, vec![0, 0]).is_err());
        let c2 = grp("C2");
        assert!(GSet::from_table(c2.clone(), 2, vec![0, 1, 0, 0]).is_err());
        assert!(GSet::from_table(c2, 2, vec![0, 1, 1, 0]).is_ok());
    }

    #[test]
    fn fixed_point_examples() {
        let c6 = grp("C6");
        let pt = GSet::trivial(c6.clone(), 1);
        for c in 0..4 {
            assert_eq!(fixed_points(&pt, c).set.size(), 1);
        }
        let free = GSet::cosets(c6.clone(), &c6.trivial_subgroup());
        let fp = fixed_points(&free, 0);
        assert_eq!(fp.set.size(), 6);
        assert_eq!(fp.weyl.group.order(), 6);
        assert!(fp.set.is_free());

        // C6/C2 fixed by C2: all three cosets, a free C3-orbit
        let x = GSet::cosets(c6.clone(), c6.subgroup_class(1).representative());
        let fp = fixed_points(&x, 1);
        assert_eq!(fp.set.size(), 3);
        assert_eq!(fp.weyl.group.order(), 3);
        assert!(fp.set.is_free());
        assert_eq!(fp.set.orbits().len(), 1);
    }

    #[test]
    fn induce_and_restrict_examples() {
        let s3 = grp("S3");
        let y = GSet::trivial(s3.clone(), 2);
        assert_eq!(orbit_type(&induce(&s3, &y).unwrap()), orbit_type(&y));

        let c2 = sub_group(&s3, 1);
        let pt = GSet::trivial(c2.clone(), 1);
        let ind = induce(&s3, &pt).unwrap();
        assert_eq!(ind.size(), 3);
        assert_eq!(orbit_type(&ind), GSetType::from_multiplicities([(1, 1)]));

        let c6 = grp("C6");
        let x = GSet::cosets(c6.clone(), c6.subgroup_class(1).representative());
        let c3 = sub_group(&c6, 2);
        let r = restrict(&x, &c3).unwrap();
        assert!(r.is_free());
        assert_eq!(r.orbits().len(), 1);
    }

    #[test]
    fn mackey_examples() {
        let s3 = grp("S3");
        let c2 = sub_group(&s3, 1);
        let pt = GSet::trivial(c2.clone(), 1);
        let m = mackey_decompose(&s3, &c2, &pt).unwrap();
        assert_eq!(m.size(), 3);
        // H/H ⊔ H/e
        assert_eq!(
            orbit_type(&m),
            GSetType::from_multiplicities([(0, 1), (1, 1)])
        );

        // K = e: one free H-orbit per coset H\G
        let e = sub_group(&s3, 0);
        let pt = GSet::trivial(e, 1);
        let m = mackey_decompose(&s3, &c2, &pt).unwrap();
        assert_eq!(orbit_type(&m), GSetType::from_multiplicities([(0, 3)]));

        // H = G: the induced set itself
        let m = mackey_decompose(&s3, &s3, &GSet::trivial(c2.clone(), 1)).unwrap();
        assert_eq!(
            orbit_type(&m),
            orbit_type(&induce(&s3, &GSet::trivial(c2, 1)).unwrap())
        );
    }

    #[test]
    fn labels() {
        let c6 = grp("C6");
        assert_eq!(GSetType::empty().label(&c6), "0");
        let t = GSetType::from_multiplicities([(0, 1), (1, 2)]);
        assert_eq!(t.label(&c6), "G/e + 2*G/H2");
        assert_eq!(t.cardinality(&c6), 12);
        assert_eq!(orbit_type(&t.realize(&c6)), t);
    }
}
