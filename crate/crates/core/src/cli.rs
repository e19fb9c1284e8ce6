//! Command-line front end. `run` returns the exit code and the rendered output
//! so it can be exercised without spawning a process.

use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::burnside::{idempotent_block_count, table_of_marks};
use crate::classifier::{classify, witness_nonstandard, WitnessSearch};
use crate::conditions::{stage_report, RingDescriptor, StageReport};
use crate::error::{Error, Result};
use crate::families::Family;
use crate::group_core::{
    group_flags, make_group_bounded, perfect_subgroup_classes, GroupRef, DEFAULT_MAX_ORDER,
};
use crate::groupoid_calc::{
    brute_force_pullback, pullback_pi0, random_cospan, PullbackComponentJson,
};

pub const MAX_ORDER_ENV: &str = "EQUISEP_MAX_ORDER";

#[derive(Parser, Debug)]
#[command(
    name = "equisep",
    about = "Separable algebras in equivariant module categories"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(clap::Args, Debug, Clone)]
pub struct GroupArgs {
    /// Group spec: C4, D4, S3, A5, Q8, C2xC3, perm:<degree>:(1 2);(1 2 3)
    #[arg(long)]
    pub group: String,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(clap::Args, Debug, Clone)]
pub struct CoeffArgs {
    /// sphere, Z or Fp:<p>
    #[arg(long, default_value = "sphere")]
    pub coeff: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Conjugacy classes of subgroups.
    Subgroups(GroupArgs),
    /// Table of marks.
    Marks(GroupArgs),
    /// Idempotent blocks of the Burnside ring.
    Burnside(GroupArgs),
    /// IC / RC / separably-closed report for every subgroup class.
    Conditions {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        coeff: CoeffArgs,
    },
    /// Classify separable algebras up to a G-set size bound.
    Classify {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        coeff: CoeffArgs,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
    },
    /// Non-standard separable algebra witness.
    Witness {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        coeff: CoeffArgs,
    },
    /// Pullback π0 on a random cospan of groupoids, checked by brute force.
    PullbackDemo {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 2,
        Error::ResourceBound { .. } => 3,
        _ => 1,
    }
}

/// The group-order bound, from the environment if set.
pub fn max_order_from_env() -> Result<usize> {
    match std::env::var(MAX_ORDER_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{MAX_ORDER_ENV}={v:?} is not a positive integer"))),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

/// Runs the CLI on `argv` (program name first).
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let result = max_order_from_env().and_then(|bound| dispatch(&cli.command, bound));
    match result {
        Ok(out) => (0, out),
        Err(e) => (exit_code(&e), format!("error: {e}\n")),
    }
}

fn load_group(spec: &str, bound: usize) -> Result<GroupRef> {
    Ok(Arc::new(make_group_bounded(spec, bound)?))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn dispatch(cmd: &Command, bound: usize) -> Result<String> {
    match cmd {
        Command::Subgroups(a) => subgroups(&load_group(&a.group, bound)?, a.format),
        Command::Marks(a) => {
            let g = load_group(&a.group, bound)?;
            let tom = table_of_marks(&g);
            Ok(match a.format {
                Format::Text => tom.to_text(),
                Format::Json => to_json(&tom.to_json(&g)),
            })
        }
        Command::Burnside(a) => burnside(&load_group(&a.group, bound)?, a.format),
        Command::Conditions { group, coeff } => {
            let r = RingDescriptor::parse(&coeff.coeff)?;
            let g = load_group(&group.group, bound)?;
            let stages = (0..g.subgroup_classes().len())
                .map(|k| stage_report(&g, &r, k))
                .collect::<Result<Vec<_>>>()?;
            Ok(match group.format {
                Format::Text => stage_table(&stages),
                Format::Json => {
                    to_json(&stages.iter().map(StageReport::to_json).collect::<Vec<_>>())
                }
            })
        }
        Command::Classify {
            group,
            coeff,
            max_size,
        } => {
            let r = RingDescriptor::parse(&coeff.coeff)?;
            let g = load_group(&group.group, bound)?;
            let out = classify(&g, &r, *max_size, &Family::empty())?;
            Ok(match group.format {
                Format::Json => to_json(&out.to_json(&g)),
                Format::Text => {
                    let json = out.to_json(&g);
                    let mut s = format!("verdict: {:?}\n\n", out.verdict);
                    s.push_str(&stage_table(&out.stages));
                    if let Some(census) = &json.groupoid {
                        let _ = writeln!(s, "\ncomponents: {}", census.len());
                        for c in census {
                            let _ = writeln!(
                                s,
                                "  size={:<3} aut_order={:<6} {}",
                                c.cardinality, c.aut_order, c.label
                            );
                        }
                    }
                    if let Some(w) = &out.witness {
                        s.push('\n');
                        s.push_str(&witness_text(&w.eta_string(), w.fiber_size, &w.certificate));
                    }
                    for n in &out.notes {
                        let _ = writeln!(s, "note: {n}");
                    }
                    s
                }
            })
        }
        Command::Witness { group, coeff } => {
            let r = RingDescriptor::parse(&coeff.coeff)?;
            let g = load_group(&group.group, bound)?;
            let search = witness_nonstandard(&g, &r)?;
            Ok(match (group.format, &search) {
                (Format::Json, WitnessSearch::Found(w)) => to_json(&w.to_json(&g)),
                (
                    Format::Json,
                    WitnessSearch::Absent {
                        reasons,
                        failing_stages,
                    },
                ) => to_json(&json!({
                    "witness": null,
                    "reasons": reasons,
                    "failing_stages": failing_stages.iter().map(StageReport::to_json).collect::<Vec<_>>(),
                })),
                (Format::Text, WitnessSearch::Found(w)) => {
                    witness_text(&w.eta_string(), w.fiber_size, &w.certificate)
                }
                (Format::Text, WitnessSearch::Absent { reasons, .. }) => {
                    let mut s = String::from("no witness\n");
                    for r in reasons {
                        let _ = writeln!(s, "  {r}");
                    }
                    s
                }
            })
        }
        Command::PullbackDemo { seed, format } => pullback_demo(*seed, *format),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupClassJson {
    pub name: String,
    pub order: usize,
    pub class_size: usize,
    pub normalizer_order: usize,
    pub weyl_order: usize,
    pub key: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupsJson {
    pub order: usize,
    pub classes: Vec<SubgroupClassJson>,
}

fn subgroups(g: &GroupRef, format: Format) -> Result<String> {
    let classes: Vec<SubgroupClassJson> = g
        .subgroup_classes()
        .iter()
        .map(|c| SubgroupClassJson {
            name: c.name().to_string(),
            order: c.order(),
            class_size: c.class_size(),
            normalizer_order: c.normalizer_order(),
            weyl_order: c.weyl_order(),
            key: c.key_digest(),
        })
        .collect();
    Ok(match format {
        Format::Json => to_json(&SubgroupsJson {
            order: g.order(),
            classes,
        }),
        Format::Text => {
            let mut s = format!("|G| = {}, {} classes\n", g.order(), classes.len());
            let _ = writeln!(
                s,
                "{:<10} {:>6} {:>6} {:>6} {:>6}  key",
                "class", "order", "size", "|N|", "|W|"
            );
            for c in &classes {
                let _ = writeln!(
                    s,
                    "{:<10} {:>6} {:>6} {:>6} {:>6}  {}",
                    c.name, c.order, c.class_size, c.normalizer_order, c.weyl_order, c.key
                );
            }
            s
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BurnsideJson {
    pub order: usize,
    pub blocks: usize,
    pub solvable: bool,
    pub perfect_classes: Vec<String>,
}

fn burnside(g: &GroupRef, format: Format) -> Result<String> {
    let report = BurnsideJson {
        order: g.order(),
        blocks: idempotent_block_count(g),
        solvable: group_flags(g).is_solvable,
        perfect_classes: perfect_subgroup_classes(g)
            .iter()
            .map(|c| c.name().to_string())
            .collect(),
    };
    Ok(match format {
        Format::Json => to_json(&report),
        Format::Text => format!(
            "order={}\nblocks={}\nsolvable={}\nperfect: {}\n",
            report.order,
            report.blocks,
            report.solvable,
            report.perfect_classes.join(", ")
        ),
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn stage_table(stages: &[StageReport]) -> String {
    let mut s = format!(
        "{:<10} {:>5} {:>4} {:>4} {:>4}  notes\n",
        "K", "|W|", "IC", "RC", "sep"
    );
    for st in stages {
        let j = st.to_json();
        let notes = if j.convention_flags.is_empty() {
            if st.passed() {
                String::new()
            } else {
                j.reasons
                    .iter()
                    .zip([st.ic.holds, st.rc.holds, st.sep_closed])
                    .filter(|(_, ok)| !ok)
                    .map(|(r, _)| r.as_str())
                    .collect::<Vec<_>>()
                    .join("; ")
            }
        } else {
            format!("convention: {}", j.convention_flags.join(", "))
        };
        let line = format!(
            "{:<10} {:>5} {:>4} {:>4} {:>4}  {}",
            st.subgroup,
            st.weyl_order,
            yes_no(st.ic.holds),
            yes_no(st.rc.holds),
            yes_no(st.sep_closed),
            notes
        );
        s.push_str(line.trim_end());
        s.push('\n');
    }
    s
}

fn witness_text(eta: &str, fiber_size: usize, certificate: &[Vec<String>]) -> String {
    let mut s = format!("fiber_size={fiber_size}\neta={eta}\ncertificate:\n");
    for orbit in certificate {
        let _ = writeln!(s, "  {{{}}}", orbit.join(", "));
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PullbackDemoJson {
    pub seed: u64,
    pub components: Vec<PullbackComponentJson>,
    pub brute_force_components: usize,
    pub agree: bool,
}

fn pullback_demo(seed: u64, format: Format) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (f, g) = random_cospan(&mut rng, 4);
    let comps = pullback_pi0(&f, &g)?;
    let brute = brute_force_pullback(&f, &g)?;
    let mut brute_orders: Vec<(usize, usize, usize)> = brute
        .components
        .iter()
        .map(|c| (c.base.0, c.base.1, c.aut.order()))
        .collect();
    let mut formula_orders: Vec<(usize, usize, usize)> = comps
        .iter()
        .map(|c| (c.base.0, c.base.1, c.aut_order))
        .collect();
    brute_orders.sort_unstable();
    formula_orders.sort_unstable();
    let report = PullbackDemoJson {
        seed,
        components: comps.iter().map(|c| c.to_json()).collect(),
        brute_force_components: brute.components.len(),
        agree: brute_orders == formula_orders,
    };
    Ok(match format {
        Format::Json => to_json(&report),
        Format::Text => {
            let mut s = format!("seed={seed}\ncomponents={}\n", report.components.len());
            for c in &report.components {
                let _ = writeln!(
                    s,
                    "  ({}, {}) eta={} fiber_index={} aut_order={}",
                    c.base[0], c.base[1], c.eta_rep, c.fiber_index, c.aut_order
                );
            }
            let _ = writeln!(
                s,
                "brute_force_components={}\nagree={}",
                report.brute_force_components, report.agree
            );
            s
        }
    })
}
