mod common;

use std::collections::{BTreeMap, HashSet};
use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use equisep::burnside::{table_of_marks, BurnsideElement};
use equisep::classifier::{
    classify, expected_aut_order, localization_functor, standard_algebra, Verdict,
};
use equisep::conditions::RingDescriptor;
use equisep::families::{closure, minimal_additions, Family};
use equisep::group_core::{group_flags, make_group, perfect_subgroup_classes, GroupRef};
use equisep::groupoid_calc::{
    brute_force_pullback, diagonal_hom, pullback_pi0, random_cospan, sigma2_power, Component,
    FiniteGroupoid, GroupoidFunctor,
};
use equisep::gset::{aut_group, fixed_point_count, GSet, GSetType};

fn corpus() -> &'static [GroupRef] {
    static GROUPS: OnceLock<Vec<GroupRef>> = OnceLock::new();
    GROUPS.get_or_init(|| {
        common::CORPUS
            .iter()
            .map(|s| Arc::new(make_group(s).unwrap()))
            .collect()
    })
}

/// A G-set from a list of class picks, skipping classes in `f` and orbits
/// that would overflow `max_size`.
fn build(g: &GroupRef, f: &Family, picks: &[usize], max_size: usize) -> GSet {
    let n = g.subgroup_classes().len();
    let mut size = 0;
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in picks {
        let c = p % n;
        let orbit = g.order() / g.subgroup_class(c).order();
        if !f.contains(c) && size + orbit <= max_size {
            size += orbit;
            *mult.entry(c).or_default() += 1;
        }
    }
    GSetType::from_multiplicities(mult).realize(g)
}

/// Equivariant bijections counted by choosing an image for one base point per orbit.
fn brute_aut_count(x: &GSet) -> usize {
    let orbits = x.orbits();
    fn rec(x: &GSet, orbits: &[Vec<usize>], i: usize, used: &mut Vec<bool>) -> usize {
        if i == orbits.len() {
            return 1;
        }
        let g = x.group();
        let base = orbits[i][0];
        let mut total = 0;
        for y in 0..x.size() {
            if used[y] {
                continue;
            }
            // φ(a·base) = a·y must be well defined and land on unused points
            let mut image = vec![usize::MAX; x.size()];
            let mut ok = true;
            for a in 0..g.order() {
                let (p, q) = (x.act(a, base), x.act(a, y));
                if image[p] == usize::MAX {
                    image[p] = q;
                } else if image[p] != q {
                    ok = false;
                    break;
                }
            }
            let targets: HashSet<usize> = orbits[i].iter().map(|&p| image[p]).collect();
            if !ok || targets.len() != orbits[i].len() || targets.iter().any(|&q| used[q]) {
                continue;
            }
            for &q in &targets {
                used[q] = true;
            }
            total += rec(x, orbits, i + 1, used);
            for &q in &targets {
                used[q] = false;
            }
        }
        total
    }
    rec(x, &orbits, 0, &mut vec![false; x.size()])
}

#[test]
fn subgroup_classes_match_brute_force() {
    for (spec, g) in common::CORPUS.iter().zip(corpus()) {
        let oracle = common::subgroup_classes(g);
        let classes = g.subgroup_classes();
        assert_eq!(classes.len(), oracle.len(), "{spec}");
        let mut ours: Vec<(usize, usize)> = classes
            .iter()
            .map(|c| (c.order(), c.class_size()))
            .collect();
        let mut theirs: Vec<(usize, usize)> =
            oracle.iter().map(|c| (c[0].len(), c.len())).collect();
        ours.sort_unstable();
        theirs.sort_unstable();
        assert_eq!(ours, theirs, "{spec}");
    }
}

#[test]
fn solvable_iff_only_trivial_perfect_subgroup() {
    for spec in common::CORPUS.iter().chain(&["A5", "S5", "C2xA5"]) {
        let g = make_group(spec).unwrap();
        let perfect = perfect_subgroup_classes(&g);
        let only_trivial = perfect.len() == 1 && perfect[0].order() == 1;
        assert_eq!(group_flags(&g).is_solvable, only_trivial, "{spec}");
    }
}

#[test]
fn diagonal_fiber_counts() {
    let s2: GroupRef = Arc::new(sigma2_power(1).unwrap());
    for r in 1..=6 {
        let pow: GroupRef = Arc::new(sigma2_power(r).unwrap());
        let d = FiniteGroupoid::new(vec![Component {
            label: "d".into(),
            aut: pow.clone(),
        }])
        .unwrap();
        let side = |l: &str| {
            FiniteGroupoid::new(vec![Component {
                label: l.into(),
                aut: s2.clone(),
            }])
            .unwrap()
        };
        let delta = diagonal_hom(&s2, &pow).unwrap();
        let f = GroupoidFunctor::new(side("b"), d.clone(), vec![0], vec![delta.clone()]).unwrap();
        let g = GroupoidFunctor::new(side("c"), d, vec![0], vec![delta]).unwrap();
        let expected = common::diagonal_orbits(r).len();
        assert_eq!(expected, 1 << (r - 1));
        assert_eq!(pullback_pi0(&f, &g).unwrap().len(), expected, "r = {r}");
        assert_eq!(
            brute_force_pullback(&f, &g).unwrap().components.len(),
            expected,
            "r = {r}"
        );
    }
}

#[test]
fn p_groups_are_all_standard_with_matching_counts() {
    let p_groups = [
        "C2",
        "C3",
        "C4",
        "C5",
        "C7",
        "C8",
        "C9",
        "C11",
        "C13",
        "C16",
        "C2xC2",
        "C2xC4",
        "C2xC2xC2",
        "D4",
        "Q8",
        "D8",
        "C4xC4",
        "C2xC8",
        "C2xD4",
        "C2xQ8",
        "C2xC2xC2xC2",
    ];
    for spec in p_groups {
        let g: GroupRef = Arc::new(make_group(spec).unwrap());
        let expected = common::count_gsets(&common::orbit_sizes(&g), 5);
        for r in [RingDescriptor::sphere(), RingDescriptor::integers()] {
            let out = classify(&g, &r, 5, &Family::empty()).unwrap();
            assert_eq!(out.verdict, Verdict::AllStandard, "{spec}");
            assert_eq!(out.census.len(), expected, "{spec}");
            for c in &out.census {
                assert_eq!(
                    c.aut_order,
                    expected_aut_order(&g, &c.gset_type),
                    "{spec} {}",
                    c.label
                );
            }
        }
    }
}

#[test]
fn localization_is_compatible_with_orbit_deletion() {
    use rand::seq::SliceRandom;
    use rand::Rng;
    const N: usize = 5;
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for i in 0..100 {
        let g = corpus().choose(&mut rng).unwrap();
        let n = g.subgroup_classes().len();
        let seed: Vec<usize> = (0..rng.gen_range(0..=1))
            .map(|_| rng.gen_range(0..n))
            .collect();
        let f = closure(g, seed);
        let Some(&k) = minimal_additions(g, &f).choose(&mut rng) else {
            continue;
        };
        let picks: Vec<usize> = (0..4).map(|_| rng.gen_range(0..n)).collect();
        let x = build(g, &f, &picks, N);
        let l = localization_functor(g, &f, k, N).unwrap();
        let src = l
            .source()
            .find(&standard_algebra(g, &f, &x).unwrap())
            .unwrap();
        let image = &l.target().components()[l.component_map()[src]].label;
        let local = standard_algebra(g, &f.with(k), &x.without_class(k)).unwrap();
        assert_eq!(*image, local, "instance {i}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn marks_are_fixed_point_counts(gi in 0usize..15, picks in prop::collection::vec(0usize..64, 0..4)) {
        let g = &corpus()[gi];
        let x = build(g, &Family::empty(), &picks, 24);
        let tom = table_of_marks(g);
        let t = equisep::gset::orbit_type(&x);
        let ghost = BurnsideElement::from_type(&t, &tom).marks(&tom);
        for (k, class) in g.subgroup_classes().iter().enumerate() {
            prop_assert_eq!(ghost[k] as usize, fixed_point_count(&x, class.representative()));
        }
        prop_assert_eq!(BurnsideElement::from_marks(&ghost, &tom), Some(BurnsideElement::from_type(&t, &tom)));
    }

    #[test]
    fn cosets_have_fixed_points_iff_subconjugate(gi in 0usize..15, h in 0usize..64, k in 0usize..64) {
        let g = &corpus()[gi];
        let n = g.subgroup_classes().len();
        let (h, k) = (h % n, k % n);
        let x = GSet::cosets(g.clone(), g.subgroup_class(h).representative());
        let fixed = fixed_point_count(&x, g.subgroup_class(k).representative());
        prop_assert_eq!(fixed > 0, g.is_subconjugate(k, h));
    }

    #[test]
    fn aut_order_formula(gi in 0usize..15, picks in prop::collection::vec(0usize..64, 0..5)) {
        let g = &corpus()[gi];
        let x = build(g, &Family::empty(), &picks, 10);
        let t = equisep::gset::orbit_type(&x);
        let aut = aut_group(&x).unwrap();
        prop_assert_eq!(aut.order(), expected_aut_order(g, &t));
        prop_assert_eq!(aut.order(), brute_aut_count(&x));
    }

    #[test]
    fn pullback_formula_matches_brute_force(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, g) = random_cospan(&mut rng, 4);
        let formula = pullback_pi0(&f, &g).unwrap();
        let brute = brute_force_pullback(&f, &g).unwrap();
        prop_assert_eq!(formula.len(), brute.components.len());
        let mut a: Vec<_> = formula.iter().map(|c| (c.base, c.aut_order)).collect();
        let mut b: Vec<_> = brute.components.iter().map(|c| (c.base, c.aut.order())).collect();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
        // orbit-stabilizer for the two-sided action on Aut_D
        for c in &formula {
            let b = f.source().components()[c.base.0].aut.order();
            let cc = g.source().components()[c.base.1].aut.order();
            prop_assert_eq!(c.coset_size * c.aut_order, b * cc);
        }
    }
}
