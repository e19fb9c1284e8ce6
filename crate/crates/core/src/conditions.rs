//! Coefficient descriptors and the per-subgroup IC, RC and separably-closed
//! checks.
//!
//! Coefficients are described symbolically. Only inflated coefficients with
//! trivial Weyl action are modeled, so `Φ^K R` is `R` itself.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::burnside::{is_indecomposable_mod, sphere_ic};
use crate::error::{Error, Result};
use crate::group_core::{prime_divisors, weyl_group, Group};

pub type Predicate = Arc<dyn Fn(u64) -> bool + Send + Sync>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingKind {
    Sphere,
    Integers,
    PrimeField(u64),
    Custom,
}

/// What we know about a coefficient ring `A` (or spectrum) at the level of `π0`.
#[derive(Clone)]
pub struct RingDescriptor {
    pub name: String,
    pub kind: RingKind,
    /// Whether `π0` is a discrete commutative ring (as opposed to a spectrum).
    pub discrete: bool,
    pub indecomposable: bool,
    /// Whether `A/n` is indecomposable.
    pub indecomposable_mod: Predicate,
    /// Whether `A` has no `n`-torsion.
    pub torsion_free: Predicate,
    pub invertible_primes: InvertiblePrimes,
    pub separably_closed: bool,
    /// A ring map `A → B` along which RC propagates back to `A`.
    pub rc_witness_map_to: Option<Box<RingDescriptor>>,
    /// Whether the `G`-equivariant coefficient is inflated from the trivial group.
    pub inflated: bool,
    /// Whether `π0` of the equivariant unit is the Burnside ring `A(G)`.
    pub unit_pi0_burnside: bool,
    /// Whether the Weyl groups act trivially on the geometric fixed points.
    pub weyl_action_trivial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvertiblePrimes {
    None,
    /// Every prime except those listed.
    AllExcept(BTreeSet<u64>),
    Only(BTreeSet<u64>),
}

impl InvertiblePrimes {
    pub fn contains(&self, p: u64) -> bool {
        match self {
            InvertiblePrimes::None => false,
            InvertiblePrimes::AllExcept(s) => !s.contains(&p),
            InvertiblePrimes::Only(s) => s.contains(&p),
        }
    }
}

impl fmt::Debug for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingDescriptor")
            .field("name", &self.name)
            .field("kind", &self.kind)
            .finish_non_exhaustive()
    }
}

impl RingDescriptor {
    pub fn integers() -> RingDescriptor {
        RingDescriptor {
            name: "Z".into(),
            kind: RingKind::Integers,
            discrete: true,
            indecomposable: true,
            indecomposable_mod: Arc::new(is_indecomposable_mod),
            torsion_free: Arc::new(|_| true),
            invertible_primes: InvertiblePrimes::None,
            separably_closed: true,
            rc_witness_map_to: None,
            inflated: true,
            unit_pi0_burnside: true,
            weyl_action_trivial: true,
        }
    }

    /// The sphere spectrum; `π0 = Z` and the unit map `S → Z` carries RC.
    pub fn sphere() -> RingDescriptor {
        RingDescriptor {
            name: "sphere".into(),
            kind: RingKind::Sphere,
            discrete: false,
            rc_witness_map_to: Some(Box::new(Self::integers())),
            ..Self::integers()
        }
    }

    pub fn prime_field(p: u64) -> Result<RingDescriptor> {
        if prime_divisors(p) != [p] {
            return Err(Error::Unsupported(format!("F_{p}: {p} is not prime")));
        }
        Ok(RingDescriptor {
            name: format!("F{p}"),
            kind: RingKind::PrimeField(p),
            discrete: true,
            indecomposable: true,
            indecomposable_mod: Arc::new(move |n| n % p == 0),
            torsion_free: Arc::new(move |n| n % p != 0),
            invertible_primes: InvertiblePrimes::AllExcept(BTreeSet::from([p])),
            separably_closed: false,
            rc_witness_map_to: None,
            inflated: true,
            unit_pi0_burnside: false,
            weyl_action_trivial: true,
        })
    }

    /// Parses `sphere`, `Z` or `Fp:<p>`.
    pub fn parse(spec: &str) -> Result<RingDescriptor> {
        match spec.trim() {
            "sphere" | "S" => Ok(Self::sphere()),
            "Z" => Ok(Self::integers()),
            s => match s.strip_prefix("Fp:") {
                Some(p) => {
                    let p: u64 = p
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad prime in {s:?}")))?;
                    Self::prime_field(p)
                }
                None => Err(Error::Unsupported(format!("unknown coefficients {s:?}"))),
            },
        }
    }
}

/// `Φ^K R` for an inflated coefficient `R`.
pub fn geometric_fixed_points(r: &RingDescriptor, _k: usize) -> Result<RingDescriptor> {
    if !r.inflated {
        return Err(Error::Unsupported(format!(
            "geometric fixed points of non-inflated {}",
            r.name
        )));
    }
    Ok(r.clone())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub holds: bool,
    pub reason: String,
    /// The trivial-Weyl-group convention was used.
    pub convention: bool,
}

impl Check {
    fn new(holds: bool, reason: impl Into<String>) -> Check {
        Check {
            holds,
            reason: reason.into(),
            convention: false,
        }
    }

    fn by_convention(what: &str) -> Check {
        Check {
            holds: true,
            reason: format!("{what}: W trivial, taken to hold by convention"),
            convention: true,
        }
    }
}

fn require_trivial_action(r: &RingDescriptor) -> Result<()> {
    if r.weyl_action_trivial {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "{}: only trivial Weyl actions are supported",
            r.name
        )))
    }
}

/// IC for `R` with trivial `W`-action: `R^{hW}` and `R^{tW}` indecomposable.
pub fn check_ic(r: &RingDescriptor, w: &Group) -> Result<Check> {
    require_trivial_action(r)?;
    let n = w.order() as u64;
    if n == 1 {
        return Ok(Check::by_convention("IC"));
    }
    Ok(match r.kind {
        RingKind::Sphere => {
            let holds = sphere_ic(w);
            let reason = if holds {
                format!("IC: |W| = {n} is a prime power")
            } else {
                format!("IC: |W| = {n} is not a prime power, so Z/{n} decomposes")
            };
            Check::new(holds, reason)
        }
        _ if r.discrete => {
            if !r.indecomposable {
                Check::new(false, format!("IC: {} is decomposable", r.name))
            } else if !(r.indecomposable_mod)(n) {
                Check::new(false, format!("IC: {}/{n} is decomposable", r.name))
            } else {
                Check::new(
                    true,
                    format!("IC: {} and {}/{n} are indecomposable", r.name, r.name),
                )
            }
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "IC for non-discrete {} is not modeled",
                r.name
            )))
        }
    })
}

/// RC for `R` with trivial `W`-action, from the torsion/invertibility criterion
/// for discrete rings, propagated back along `rc_witness_map_to`.
pub fn check_rc(r: &RingDescriptor, w: &Group) -> Result<Check> {
    require_trivial_action(r)?;
    let n = w.order() as u64;
    if n == 1 {
        return Ok(Check::by_convention("RC"));
    }
    if r.discrete {
        let invertible: Vec<u64> = prime_divisors(n)
            .into_iter()
            .filter(|&p| r.invertible_primes.contains(p))
            .collect();
        if (r.torsion_free)(n) && invertible.is_empty() {
            return Ok(Check::new(
                true,
                format!(
                    "RC: {} is {n}-torsion free with no prime of {n} invertible",
                    r.name
                ),
            ));
        }
        if let Some(b) = &r.rc_witness_map_to {
            return propagate(r, b, w);
        }
        let why = if !invertible.is_empty() {
            format!("{invertible:?} invertible")
        } else {
            format!("{n}-torsion present")
        };
        return Ok(Check::new(
            false,
            format!("RC: criterion does not apply to {} ({why})", r.name),
        ));
    }
    match &r.rc_witness_map_to {
        Some(b) => propagate(r, b, w),
        None => Ok(Check::new(
            false,
            format!("RC: no criterion for {}", r.name),
        )),
    }
}

fn propagate(r: &RingDescriptor, b: &RingDescriptor, w: &Group) -> Result<Check> {
    let inner = check_rc(b, w)?;
    Ok(Check::new(
        inner.holds,
        format!("RC: via the map {} → {}; {}", r.name, b.name, inner.reason),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageReport {
    pub class: usize,
    pub subgroup: String,
    pub weyl_order: usize,
    pub weyl_is_p_group: bool,
    pub ic: Check,
    pub rc: Check,
    pub sep_closed: bool,
}

/// JSON form of a stage report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageReportJson {
    pub subgroup: String,
    pub weyl_order: usize,
    pub ic: bool,
    pub rc: bool,
    pub sep_closed: bool,
    pub reasons: Vec<String>,
    pub convention_flags: Vec<String>,
}

impl StageReport {
    pub fn passed(&self) -> bool {
        self.ic.holds && self.rc.holds && self.sep_closed
    }

    pub fn trivial_weyl_convention_used(&self) -> bool {
        self.ic.convention || self.rc.convention
    }

    pub fn to_json(&self) -> StageReportJson {
        let mut reasons = vec![self.ic.reason.clone(), self.rc.reason.clone()];
        if !self.sep_closed {
            reasons.push("not separably closed".into());
        }
        let mut convention_flags = Vec::new();
        if self.ic.convention {
            convention_flags.push("trivial_weyl_ic".into());
        }
        if self.rc.convention {
            convention_flags.push("trivial_weyl_rc".into());
        }
        StageReportJson {
            subgroup: self.subgroup.clone(),
            weyl_order: self.weyl_order,
            ic: self.ic.holds,
            rc: self.rc.holds,
            sep_closed: self.sep_closed,
            reasons,
            convention_flags,
        }
    }
}

pub fn stage_report(g: &Group, r: &RingDescriptor, class: usize) -> Result<StageReport> {
    let phi = geometric_fixed_points(r, class)?;
    let k = g.subgroup_class(class);
    let w = weyl_group(g, k.representative());
    let divisors = prime_divisors(w.order() as u64);
    Ok(StageReport {
        class,
        subgroup: k.name().to_string(),
        weyl_order: w.order(),
        weyl_is_p_group: divisors.len() == 1,
        ic: check_ic(&phi, &w)?,
        rc: check_rc(&phi, &w)?,
        sep_closed: phi.separably_closed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_core::make_group;

    fn grp(s: &str) -> Group {
        make_group(s).unwrap()
    }

    #[test]
    fn geometric_fixed_points_of_inflated_rings() {
        for r in [RingDescriptor::sphere(), RingDescriptor::integers()] {
            let phi = geometric_fixed_points(&r, 3).unwrap();
            assert_eq!(phi.kind, r.kind);
        }
        let f3 = RingDescriptor::prime_field(3).unwrap();
        assert_eq!(
            geometric_fixed_points(&f3, 0).unwrap().kind,
            RingKind::PrimeField(3)
        );
        let custom = RingDescriptor {
            kind: RingKind::Custom,
            inflated: false,
            ..RingDescriptor::integers()
        };
        assert!(geometric_fixed_points(&custom, 0).is_err());
    }

    #[test]
    fn ic_examples() {
        let z = RingDescriptor::integers();
        assert!(check_ic(&z, &grp("C2")).unwrap().holds);
        assert!(!check_ic(&z, &grp("C6")).unwrap().holds);
        assert!(
            !check_ic(&RingDescriptor::sphere(), &grp("C6"))
                .unwrap()
                .holds
        );
        let trivial = check_ic(&z, &grp("C1")).unwrap();
        assert!(trivial.holds && trivial.convention);
        let twisted = RingDescriptor {
            weyl_action_trivial: false,
            ..z
        };
        assert!(check_ic(&twisted, &grp("C2")).is_err());
    }

    #[test]
    fn rc_examples() {
        assert!(
            check_rc(&RingDescriptor::integers(), &grp("C6"))
                .unwrap()
                .holds
        );
        let via = check_rc(&RingDescriptor::sphere(), &grp("Q8")).unwrap();
        assert!(via.holds);
        assert!(via.reason.contains("sphere → Z"));
        let f5 = RingDescriptor::prime_field(5).unwrap();
        assert!(!check_rc(&f5, &grp("C2")).unwrap().holds);
        // F5 has 5-torsion, so the criterion is silent for C5
        assert!(!check_rc(&f5, &grp("C5")).unwrap().holds);
    }

    #[test]
    fn rc_propagates_along_chains() {
        let chained = RingDescriptor {
            name: "T".into(),
            kind: RingKind::Custom,
            discrete: false,
            rc_witness_map_to: Some(Box::new(RingDescriptor::sphere())),
            ..RingDescriptor::integers()
        };
        let check = check_rc(&chained, &grp("C6")).unwrap();
        assert!(check.holds);
        assert!(check.reason.contains("T → sphere") && check.reason.contains("sphere → Z"));
    }

    #[test]
    fn stage_report_examples() {
        let s = RingDescriptor::sphere();
        let c4 = grp("C4");
        assert!(stage_report(&c4, &s, 0).unwrap().passed());
        let c6 = grp("C6");
        let at_e = stage_report(&c6, &s, 0).unwrap();
        assert!(!at_e.ic.holds);
        assert_eq!(at_e.weyl_order, 6);
        let at_c2 = stage_report(&c6, &s, 1).unwrap();
        assert_eq!((at_c2.subgroup.as_str(), at_c2.weyl_order), ("H2", 3));
        assert!(at_c2.passed());
        let top = stage_report(&c6, &s, c6.whole_class()).unwrap();
        assert!(top.passed() && top.trivial_weyl_convention_used());
        assert_eq!(top.to_json().convention_flags.len(), 2);
    }

    #[test]
    fn parse_descriptors() {
        assert_eq!(RingDescriptor::parse("Z").unwrap().kind, RingKind::Integers);
        assert_eq!(
            RingDescriptor::parse("Fp:7").unwrap().kind,
            RingKind::PrimeField(7)
        );
        assert!(matches!(
            RingDescriptor::parse("Fp:6"),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            RingDescriptor::parse("Fp:x"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            RingDescriptor::parse("KU"),
            Err(Error::Unsupported(_))
        ));
    }
}
