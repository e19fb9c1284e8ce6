//! Brute-force oracles over plain image vectors, sharing no code with the
//! library beyond reading a group's generators.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use equisep::group_core::Group;

pub type P = Vec<usize>;

/// The groups of order at most 24 used across the suites.
pub const CORPUS: [&str; 15] = [
    "C1", "C2", "C3", "C4", "C2xC2", "C5", "S3", "C6", "C7", "C8", "D4", "Q8", "C9", "A4", "S4",
];

pub fn compose(a: &P, b: &P) -> P {
    b.iter().map(|&i| a[i]).collect()
}

pub fn inverse(a: &P) -> P {
    let mut out = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        out[j] = i;
    }
    out
}

/// All elements generated by `gens`, sorted.
pub fn close(degree: usize, gens: &[P]) -> Vec<P> {
    let id: P = (0..degree).collect();
    let mut seen: HashSet<P> = HashSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(x) = stack.pop() {
        for s in gens {
            let y = compose(s, &x);
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    let mut v: Vec<P> = seen.into_iter().collect();
    v.sort();
    v
}

pub fn elements_of(g: &Group) -> Vec<P> {
    let gens: Vec<P> = g
        .generator_perms()
        .iter()
        .map(|p| p.images().to_vec())
        .collect();
    close(g.degree(), &gens)
}

/// Every subgroup, by closing `⟨S, x⟩` from the trivial subgroup until stable.
pub fn all_subgroups(degree: usize, elements: &[P]) -> Vec<BTreeSet<P>> {
    let id: P = (0..degree).collect();
    let trivial = BTreeSet::from([id]);
    let mut found: HashSet<BTreeSet<P>> = HashSet::from([trivial.clone()]);
    // each subgroup is carried with the generators it was built from
    let mut frontier: Vec<(BTreeSet<P>, Vec<P>)> = vec![(trivial, Vec::new())];
    while let Some((s, gens)) = frontier.pop() {
        for x in elements {
            if s.contains(x) {
                continue;
            }
            let mut more = gens.clone();
            more.push(x.clone());
            let t: BTreeSet<P> = close(degree, &more).into_iter().collect();
            if found.insert(t.clone()) {
                frontier.push((t, more));
            }
        }
    }
    found.into_iter().collect()
}

pub fn conjugate(h: &BTreeSet<P>, g: &P) -> BTreeSet<P> {
    let gi = inverse(g);
    h.iter().map(|x| compose(&compose(g, x), &gi)).collect()
}

/// Subgroups grouped into conjugacy classes, each class as its member list,
/// sorted by order.
pub fn subgroup_classes(g: &Group) -> Vec<Vec<BTreeSet<P>>> {
    let els = elements_of(g);
    let subs = all_subgroups(g.degree(), &els);
    let mut seen: HashSet<BTreeSet<P>> = HashSet::new();
    let mut classes = Vec::new();
    for h in &subs {
        if seen.contains(h) {
            continue;
        }
        let class: BTreeSet<BTreeSet<P>> = els.iter().map(|x| conjugate(h, x)).collect();
        seen.extend(class.iter().cloned());
        classes.push(class.into_iter().collect::<Vec<_>>());
    }
    classes.sort_by_key(|c| (c[0].len(), c.len()));
    classes
}

/// Number of multisets of orbits with total size at most `n`.
pub fn count_gsets(orbit_sizes: &[usize], n: usize) -> usize {
    // ways[s] = multisets of exactly s points
    let mut ways = vec![0usize; n + 1];
    ways[0] = 1;
    for &size in orbit_sizes {
        for s in size..=n {
            ways[s] += ways[s - size];
        }
    }
    ways.iter().sum()
}

/// Orbit sizes `[G:H]`, one per conjugacy class of subgroups.
pub fn orbit_sizes(g: &Group) -> Vec<usize> {
    let order = elements_of(g).len();
    subgroup_classes(g)
        .iter()
        .map(|c| order / c[0].len())
        .collect()
}

pub fn prime_factors(mut n: usize) -> Vec<usize> {
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

pub fn is_nontrivial_p_group(order: usize) -> bool {
    prime_factors(order).len() == 1
}

fn is_normal_in(h: &BTreeSet<P>, k: &BTreeSet<P>) -> bool {
    h.is_subset(k) && k.iter().all(|x| conjugate(h, x) == *h)
}

/// Components of the relation generated by conjugacy and by `H ◁ K` with
/// `[K : H]` prime.
/// These index the primitive idempotents of the Burnside ring.
pub fn prime_index_components(g: &Group) -> usize {
    let els = elements_of(g);
    let subs = all_subgroups(g.degree(), &els);
    let index: HashMap<&BTreeSet<P>, usize> =
        subs.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut parent: Vec<usize> = (0..subs.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for h in &subs {
        for k in &subs {
            if k.len() > h.len()
                && k.len() % h.len() == 0
                && prime_factors(k.len() / h.len()) == [k.len() / h.len()]
                && is_normal_in(h, k)
            {
                let (a, b) = (find(&mut parent, index[h]), find(&mut parent, index[k]));
                parent[a] = b;
            }
        }
    }
    for h in &subs {
        for x in &els {
            let (a, b) = (
                find(&mut parent, index[h]),
                find(&mut parent, index[&conjugate(h, x)]),
            );
            parent[a] = b;
        }
    }
    let roots: HashSet<usize> = (0..subs.len()).map(|i| find(&mut parent, i)).collect();
    roots.len()
}

/// Number of cosets `xH` fixed by every element of `K`, i.e. with `x⁻¹Kx ⊆ H`.
pub fn mark(elements: &[P], h: &BTreeSet<P>, k: &BTreeSet<P>) -> usize {
    let mut cosets: HashSet<BTreeSet<P>> = HashSet::new();
    for x in elements {
        let coset: BTreeSet<P> = h.iter().map(|y| compose(x, y)).collect();
        if cosets.contains(&coset) {
            continue;
        }
        let xi = inverse(x);
        if k.iter().all(|z| h.contains(&compose(&compose(&xi, z), x))) {
            cosets.insert(coset);
        }
    }
    cosets.len()
}

/// Orbits of `{0,1}^r` under `(a, b)·t = a + t + b` with `a`, `b` diagonal:
/// the two-sided action of `Σ_2` on `Σ_2^r` through the diagonal.
pub fn diagonal_orbits(r: usize) -> Vec<BTreeSet<Vec<u8>>> {
    let mut seen = HashSet::new();
    let mut orbits = Vec::new();
    for bits in 0..(1u32 << r) {
        let t: Vec<u8> = (0..r).map(|i| ((bits >> i) & 1) as u8).collect();
        if seen.contains(&t) {
            continue;
        }
        let mut orbit = BTreeSet::new();
        for a in 0..2u8 {
            for b in 0..2u8 {
                orbit.insert(t.iter().map(|&x| x ^ a ^ b).collect::<Vec<u8>>());
            }
        }
        seen.extend(orbit.iter().cloned());
        orbits.push(orbit);
    }
    orbits
}

pub fn render_tuple(t: &[u8]) -> String {
    let parts: Vec<&str> = t
        .iter()
        .map(|&b| if b == 0 { "id" } else { "swap" })
        .collect();
    format!("({})", parts.join(","))
}

/// Number of injective equivariant maps `G/H → X`, by building each candidate map.
pub fn injective_map_count(x: &equisep::gset::GSet, h: &[usize]) -> usize {
    let g = x.group();
    let cosets: Vec<usize> = {
        let mut reps = Vec::new();
        let mut covered = HashSet::new();
        for a in 0..g.order() {
            if covered.insert(a) {
                reps.push(a);
                for &y in h {
                    covered.insert(g.mul(a, y));
                }
            }
        }
        reps
    };
    (0..x.size())
        .filter(|&p| h.iter().all(|&y| x.act(y, p) == p))
        .filter(|&p| {
            let images: HashSet<usize> = cosets.iter().map(|&a| x.act(a, p)).collect();
            images.len() == cosets.len()
        })
        .count()
}
