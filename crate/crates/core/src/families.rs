//! Families of subgroups and exhaustive filtrations.
//!
//! A family is stored as a set of subgroup class indices of a fixed group and
//! is closed under subconjugation.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group_core::Group;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Family {
    classes: BTreeSet<usize>,
}

impl Family {
    pub fn empty() -> Family {
        Family::default()
    }

    pub fn all(g: &Group) -> Family {
        Family {
            classes: (0..g.subgroup_classes().len()).collect(),
        }
    }

    /// Builds a family from explicit classes, rejecting sets that are not
    /// closed under subconjugation.
    pub fn from_classes(g: &Group, classes: impl IntoIterator<Item = usize>) -> Result<Family> {
        let f = Family {
            classes: classes.into_iter().collect(),
        };
        if !f.is_closed(g) {
            return Err(Error::Precondition(
                "class set is not closed under subconjugation".into(),
            ));
        }
        Ok(f)
    }

    pub fn contains(&self, class: usize) -> bool {
        self.classes.contains(&class)
    }

    pub fn classes(&self) -> impl Iterator<Item = usize> + '_ {
        self.classes.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn is_all(&self, g: &Group) -> bool {
        self.classes.len() == g.subgroup_classes().len()
    }

    pub fn is_closed(&self, g: &Group) -> bool {
        let n = g.subgroup_classes().len();
        self.classes.iter().all(|&h| {
            h < n && (0..n).all(|k| !g.is_subconjugate(k, h) || self.classes.contains(&k))
        })
    }

    /// `F ∪ {(K)}`; the caller is responsible for `K` being addable.
    pub fn with(&self, class: usize) -> Family {
        let mut classes = self.classes.clone();
        classes.insert(class);
        Family { classes }
    }

    /// Class names, for display.
    pub fn names<'g>(&self, g: &'g Group) -> Vec<&'g str> {
        self.classes
            .iter()
            .map(|&c| g.subgroup_class(c).name())
            .collect()
    }
}

/// Smallest family containing the seed classes.
pub fn closure(g: &Group, seed: impl IntoIterator<Item = usize>) -> Family {
    let seed: Vec<usize> = seed.into_iter().collect();
    let n = g.subgroup_classes().len();
    Family {
        classes: (0..n)
            .filter(|&k| seed.iter().any(|&h| g.is_subconjugate(k, h)))
            .collect(),
    }
}

/// Classes `K ∉ F` all of whose proper subgroups lie in `F`.
pub fn minimal_additions(g: &Group, f: &Family) -> Vec<usize> {
    let n = g.subgroup_classes().len();
    (0..n)
        .filter(|&k| !f.contains(k))
        .filter(|&k| (0..n).all(|j| j == k || !g.is_subconjugate(j, k) || f.contains(j)))
        .collect()
}

/// `F_0 ⊆ F_1 ⊆ ... ⊆ F_n = All`, each step adding one class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Filtration {
    pub stages: Vec<Family>,
    pub added: Vec<usize>,
}

/// Adds classes in ascending (order, canonical key), which is class index order.
pub fn exhaustive_filtration(g: &Group, start: &Family) -> Result<Filtration> {
    if !start.is_closed(g) {
        return Err(Error::Precondition("starting set is not a family".into()));
    }
    let mut stages = vec![start.clone()];
    let mut added = Vec::new();
    loop {
        let current = stages.last().unwrap();
        let Some(&next) = minimal_additions(g, current).first() else {
            break;
        };
        added.push(next);
        stages.push(current.with(next));
    }
    Ok(Filtration { stages, added })
}
