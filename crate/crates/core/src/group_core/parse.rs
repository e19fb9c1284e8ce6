//! The group-spec mini-language.
//!
//! ```text
//! spec    := "perm:" degree ":" gen (";" gen)*  |  factor ("x" factor)*
//! factor  := "C" n | "D" n | "S" n | "A" n | "Q8" | "1"
//! gen     := cycles in 1-based notation, e.g. (1 2 3)(4 5)
//! ```
//!
//! `D<n>` is the dihedral group of order `2n`. Direct products act on the
//! disjoint union of the factors' points.

use super::group::{Group, DEFAULT_MAX_ORDER};
use super::perm::Perm;
use crate::error::{Error, Result};

/// Parses a group spec with the default order bound.
pub fn make_group(spec: &str) -> Result<Group> {
    make_group_bounded(spec, DEFAULT_MAX_ORDER)
}

pub fn make_group_bounded(spec: &str, max_order: usize) -> Result<Group> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("perm:") {
        let (degree, gens) = rest
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected perm:<degree>:<gens> in {spec:?}")))?;
        let degree: usize = degree
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad degree {degree:?}")))?;
        if degree == 0 {
            return Err(Error::Parse("degree must be positive".into()));
        }
        let gens = gens
            .split(';')
            .filter(|s| !s.trim().is_empty())
            .map(|s| Perm::from_cycles(degree, s))
            .collect::<Result<Vec<_>>>()?;
        return Group::generated(degree, gens, max_order);
    }
    if spec.is_empty() {
        return Err(Error::Parse("empty group spec".into()));
    }
    let factors = spec
        .split('x')
        .map(|f| factor_generators(f.trim()))
        .collect::<Result<Vec<_>>>()?;
    let degree: usize = factors.iter().map(|(d, _)| d).sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for (d, fg) in &factors {
        gens.extend(fg.iter().map(|g| g.shifted(offset, degree)));
        offset += d;
    }
    Group::generated(degree, gens, max_order)
}

fn cycles(degree: usize, text: &str) -> Perm {
    Perm::from_cycles(degree, text).expect("built-in generator")
}

fn long_cycle(n: usize) -> Perm {
    Perm::from_images_unchecked((0..n).map(|i| (i + 1) % n).collect())
}

fn factor_generators(factor: &str) -> Result<(usize, Vec<Perm>)> {
    if factor == "1" {
        return Ok((1, vec![]));
    }
    if factor == "Q8" {
        return Ok((8, quaternion_generators()));
    }
    let mut chars = factor.chars();
    let family = chars
        .next()
        .ok_or_else(|| Error::Parse("empty factor".into()))?;
    let n: usize = chars
        .as_str()
        .parse()
        .map_err(|_| Error::Parse(format!("bad group factor {factor:?}")))?;
    if n == 0 {
        return Err(Error::Parse(format!("{factor:?}: index must be positive")));
    }
    let gens = match family {
        'C' => (n, vec![long_cycle(n)]),
        'D' => match n {
            1 => (2, vec![cycles(2, "(1 2)")]),
            2 => (4, vec![cycles(4, "(1 2)(3 4)"), cycles(4, "(1 3)(2 4)")]),
            _ => {
                let reflection = Perm::from_images_unchecked((0..n).map(|i| (n - i) % n).collect());
                (n, vec![long_cycle(n), reflection])
            }
        },
        'S' => match n {
            1 => (1, vec![]),
            _ => (n, vec![cycles(n, "(1 2)"), long_cycle(n)]),
        },
        'A' => (
            n,
            (3..=n).map(|k| cycles(n, &format!("(1 2 {k})"))).collect(),
        ),
        _ => return Err(Error::Parse(format!("unknown group family in {factor:?}"))),
    };
    Ok(gens)
}

/// Left-regular representation of Q8 on {±1, ±i, ±j, ±k}.
fn quaternion_generators() -> Vec<Perm> {
    // unit index: 0=1, 1=i, 2=j, 3=k; element = (sign, unit), point = 4*sign + unit
    fn unit_mul(a: usize, b: usize) -> (bool, usize) {
        match (a, b) {
            (0, x) | (x, 0) => (false, x),
            (x, y) if x == y => (true, 0),
            (1, 2) => (false, 3),
            (2, 3) => (false, 1),
            (3, 1) => (false, 2),
            (2, 1) => (true, 3),
            (3, 2) => (true, 1),
            (1, 3) => (true, 2),
            _ => unreachable!(),
        }
    }
    let left_mul = |unit: usize| {
        let images = (0..8)
            .map(|p| {
                let (neg, u) = unit_mul(unit, p % 4);
                let sign = (p / 4 == 1) ^ neg;
                4 * sign as usize + u
            })
            .collect();
        Perm::from_images_unchecked(images)
    };
    vec![left_mul(1), left_mul(2)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_families_have_expected_orders() {
        for (spec, order) in [
            ("C1", 1),
            ("1", 1),
            ("C6", 6),
            ("D1", 2),
            ("D2", 4),
            ("D4", 8),
            ("D5", 10),
            ("S1", 1),
            ("S3", 6),
            ("S4", 24),
            ("A2", 1),
            ("A4", 12),
            ("A5", 60),
            ("Q8", 8),
            ("C2xC2xC2", 8),
            ("C3 x C3", 9),
            ("perm:4:(1 2 3 4);(1 3)", 8),
            ("perm:3:", 1),
        ] {
            assert_eq!(make_group(spec).unwrap().order(), order, "{spec}");
        }
    }

    #[test]
    fn malformed_specs_are_parse_errors() {
        for spec in [
            "",
            "X3",
            "C",
            "C0",
            "Cx",
            "perm:3",
            "perm:0:()",
            "perm:3:(1 5)",
            "C2x",
        ] {
            assert!(
                matches!(make_group(spec), Err(Error::Parse(_))),
                "{spec} should not parse"
            );
        }
    }

    #[test]
    fn bound_rejects_large_groups() {
        assert_eq!(
            make_group("S7").unwrap_err(),
            Error::ResourceBound {
                bound: DEFAULT_MAX_ORDER
            }
        );
        assert!(make_group_bounded("S5", 100).is_err());
        assert_eq!(make_group_bounded("S5", 120).unwrap().order(), 120);
    }

    #[test]
    fn q8_has_a_unique_involution() {
        let g = make_group("Q8").unwrap();
        let involutions = (0..8).filter(|&x| g.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
    }
}
