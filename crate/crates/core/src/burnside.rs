//! Tables of marks, the Burnside ring, and the indecomposability criteria
//! built on it.

use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

use crate::group_core::{perfect_subgroup_classes, prime_divisors, weyl_data, Group, GroupRef};
use crate::gset::{fixed_points_with, GSet, GSetType};

/// `marks[h][k] = |(G/H)^K|` over subgroup classes in ascending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableOfMarks {
    pub names: Vec<String>,
    pub orders: Vec<usize>,
    pub marks: Vec<Vec<u64>>,
}

/// JSON form of a table of marks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableOfMarksJson {
    pub classes: Vec<String>,
    pub orders: Vec<usize>,
    pub keys: Vec<String>,
    pub marks: Vec<Vec<u64>>,
}

pub fn table_of_marks(g: &GroupRef) -> TableOfMarks {
    let classes = g.subgroup_classes();
    let cosets: Vec<GSet> = classes
        .iter()
        .map(|c| GSet::cosets(g.clone(), c.representative()))
        .collect();
    let n = classes.len();
    let mut marks = vec![vec![0u64; n]; n];
    for (k, class) in classes.iter().enumerate() {
        let rep = class.representative();
        let weyl = weyl_data(g, rep);
        for (h, x) in cosets.iter().enumerate() {
            if g.is_subconjugate(k, h) {
                marks[h][k] = fixed_points_with(x, rep, weyl.clone()).set.size() as u64;
            }
        }
    }
    TableOfMarks {
        names: classes.iter().map(|c| c.name().to_string()).collect(),
        orders: classes.iter().map(|c| c.order()).collect(),
        marks,
    }
}

impl TableOfMarks {
    pub fn len(&self) -> usize {
        self.marks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.marks.is_empty()
    }

    pub fn to_json(&self, g: &Group) -> TableOfMarksJson {
        TableOfMarksJson {
            classes: self.names.clone(),
            orders: self.orders.clone(),
            keys: g
                .subgroup_classes()
                .iter()
                .map(|c| c.key_digest())
                .collect(),
            marks: self.marks.clone(),
        }
    }

    /// Right-aligned text table, rows `G/H`, columns `K`.
    pub fn to_text(&self) -> String {
        let width = self
            .marks
            .iter()
            .flatten()
            .map(|m| m.to_string().len())
            .chain(self.names.iter().map(|n| n.len()))
            .max()
            .unwrap_or(1);
        let label_width = self.names.iter().map(|n| n.len() + 2).max().unwrap_or(3);
        let mut out = String::new();
        let _ = write!(out, "{:label_width$}", "");
        for name in &self.names {
            let _ = write!(out, " {name:>width$}");
        }
        out.push('\n');
        for (row, name) in self.marks.iter().zip(&self.names) {
            let _ = write!(out, "{:label_width$}", format!("G/{name}"));
            for m in row {
                let _ = write!(out, " {m:>width$}");
            }
            out.push('\n');
        }
        out
    }
}

/// An element of `A(G)` in the basis of orbits `[G/H]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurnsideElement {
    pub coefficients: Vec<i64>,
}

impl BurnsideElement {
    pub fn from_type(t: &GSetType, tom: &TableOfMarks) -> BurnsideElement {
        let mut coefficients = vec![0; tom.len()];
        for (c, n) in t.entries() {
            coefficients[c] = n as i64;
        }
        BurnsideElement { coefficients }
    }

    pub fn one(tom: &TableOfMarks) -> BurnsideElement {
        let mut coefficients = vec![0; tom.len()];
        coefficients[tom.len() - 1] = 1;
        BurnsideElement { coefficients }
    }

    /// Ghost coordinates: `marks[K] = Σ_H c_H · |(G/H)^K|`.
    pub fn marks(&self, tom: &TableOfMarks) -> Vec<i64> {
        (0..tom.len())
            .map(|k| {
                self.coefficients
                    .iter()
                    .zip(&tom.marks)
                    .map(|(c, row)| c * row[k] as i64)
                    .sum()
            })
            .collect()
    }

    /// Inverts the ghost map; `None` when the marks are not those of an
    /// integral element.
    pub fn from_marks(marks: &[i64], tom: &TableOfMarks) -> Option<BurnsideElement> {
        let n = tom.len();
        let mut c = vec![0i64; n];
        // column k only involves rows h ≥ k, so solve from the top class down
        for k in (0..n).rev() {
            let partial: i64 = (k + 1..n).map(|h| c[h] * tom.marks[h][k] as i64).sum();
            let rest = marks[k] - partial;
            let d = tom.marks[k][k] as i64;
            if rest % d != 0 {
                return None;
            }
            c[k] = rest / d;
        }
        Some(BurnsideElement { coefficients: c })
    }

    pub fn add(&self, other: &BurnsideElement) -> BurnsideElement {
        BurnsideElement {
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Product, computed in the ghost ring.
    pub fn mul(&self, other: &BurnsideElement, tom: &TableOfMarks) -> BurnsideElement {
        let m: Vec<i64> = self
            .marks(tom)
            .iter()
            .zip(other.marks(tom))
            .map(|(a, b)| a * b)
            .collect();
        Self::from_marks(&m, tom).expect("A(G) is closed under products")
    }
}

/// Number of primitive idempotents of `A(G)`: by Dress, one per conjugacy
/// class of perfect subgroups.
pub fn idempotent_block_count(g: &Group) -> usize {
    perfect_subgroup_classes(g).len()
}

/// Whether `Z/n` is indecomposable (`n = 0` encodes `Z`). The zero ring
/// `Z/1` is not.
pub fn is_indecomposable_mod(n: u64) -> bool {
    n == 0 || (n > 1 && prime_divisors(n).len() == 1)
}

/// Whether the sphere with trivial `W`-action satisfies IC. The two rings
/// to test reduce to `Z` and `Z/|W|`.
pub fn sphere_ic(w: &Group) -> bool {
    let order = w.order() as u64;
    order > 1 && is_indecomposable_mod(0) && is_indecomposable_mod(order)
}

/// Whether the marks row of `G/H` is a nonzero constant.
pub fn degree_is_constant(tom: &TableOfMarks, class: usize) -> bool {
    let row = &tom.marks[class];
    row[0] != 0 && row.iter().all(|&m| m == row[0])
}
