//! Command-line interface. Every command renders one report, as JSON by
//! default or as text with `--human`. Exit status: 0 on success, 1 when a
//! verification fails, 2 on usage errors.

pub mod parse;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::curves::{square_tiling, CurveEnumeration, CurveReport, Monodromy};
use crate::graph::{validate_realizable, GraphOfGroups};
use crate::group::{build_group_with_cap, GroupSpec, DEFAULT_ORDER_CAP};
use crate::matcher::{match_curves_with_cap, MatchQuery};
use crate::padic::{mumford_pairing_check, parse_rational, run_padic, PadicConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "origami", version, about = "Normal origamis, their curves, and p-adic origami verification")]
pub struct Cli {
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Emit JSON (the default)
    #[arg(long, global = true, conflicts_with = "human")]
    pub json: bool,
    /// Emit a human-readable table
    #[arg(long, global = true)]
    pub human: bool,
    /// Largest group order to build
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    pub max_order: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate the origami curves of a Galois group, e.g. `A5` or `D5xC3`
    EnumerateCurves {
        group: String,
        /// Include unramified curves
        #[arg(long)]
        trivial: bool,
    },
    /// Verify a p-adic origami config (TOML or JSON)
    VerifyPadic { config: PathBuf },
    /// Match by ramification index and automorphism type
    Match {
        /// Query file with `group`, `ramification` and optional `aut_type`
        config: Option<PathBuf>,
        #[arg(long, conflicts_with = "config", requires = "ramification")]
        group: Option<String>,
        #[arg(long)]
        ramification: Option<u32>,
        /// `galois_only` or `extended_by_involution`
        #[arg(long)]
        aut_type: Option<String>,
        #[arg(long)]
        automorphism_order: Option<u64>,
    },
    /// Count curves for every group of the listed families
    Survey {
        /// Comma-separated families among C, D, A4, S4, A5, DxC, A4xC
        #[arg(long, default_value = "C,D,A4,S4,A5,DxC,A4xC")]
        families: String,
        /// Cap on the family parameters n and m
        #[arg(long)]
        seed_order: Option<u32>,
    },
    /// Square tiling of the origami with monodromy (a, b)
    Tiling {
        group: String,
        a: String,
        b: String,
        /// Emit Graphviz instead of a report
        #[arg(long)]
        dot: bool,
    },
    /// Realizability diagnostics for a graph of groups in JSON
    GraphCheck {
        graph: PathBuf,
        #[arg(long)]
        p: u64,
        /// Emit Graphviz instead of a report
        #[arg(long)]
        dot: bool,
    },
    /// Pairing check for the hyperelliptic family at λ = q − 1
    PairingCheck {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
}

/// Result of one invocation, written out by the binary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

fn render<T: Serialize>(value: &T, human: Option<String>, code: i32) -> Outcome {
    let stdout = match human {
        Some(text) => text,
        None => serde_json::to_string_pretty(value).expect("reports serialize") + "\n",
    };
    Outcome { code, stdout, stderr: String::new() }
}

fn group_arg(text: &str) -> Result<GroupSpec, Outcome> {
    parse::parse_group_spec(text).map_err(|e| Outcome::usage(format!("group `{text}`: {e}")))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match execute(cli) {
        Ok(o) | Err(o) => o,
    }
}

fn execute(cli: &Cli) -> Result<Outcome, Outcome> {
    let human = cli.output.human;
    let cap = cli.output.max_order;
    match &cli.command {
        Command::EnumerateCurves { group, trivial } => {
            let spec = group_arg(group)?;
            let g = build_group_with_cap(&spec, cap).map_err(Outcome::usage)?;
            let e = CurveEnumeration::run_with_cap(&g, cap).map_err(Outcome::usage)?;
            let report = CurveReport::new(&g, e.curves()).filter_trivial(*trivial);
            Ok(render(&report, human.then(|| report.to_human()), EXIT_OK))
        }
        Command::VerifyPadic { config } => {
            let cfg = PadicConfig::load(config).map_err(Outcome::usage)?;
            let spec = cfg.to_spec().map_err(Outcome::usage)?;
            let report = run_padic(&spec);
            let text = human.then(|| {
                let mut t = format!(
                    "{} at p = {}, shape {}, target {}\n",
                    report.entry, report.p, report.shape, report.target_group
                );
                for r in &report.homomorphism.relators {
                    t.push_str(&format!("  relator {:<20} -> {:<20} {}\n", r.name, r.value, if r.holds { "ok" } else { "FAIL" }));
                }
                t.push_str(&format!("  image order {} of {}\n", report.homomorphism.image_order, report.homomorphism.target_order));
                if let Some(s) = &report.schottky {
                    for v in &s.vertex_groups {
                        t.push_str(&format!("  vertex group {} embeds: {}\n", v.name, v.injective));
                    }
                }
                t.push_str(&format!(
                    "  verified: {}, |H| = {}, r = {}, genus = {}\n",
                    report.verified,
                    report.galois_order,
                    report.ramification,
                    report.genus.map_or("-".to_string(), |g| g.to_string())
                ));
                for d in &report.diagnostics {
                    t.push_str(&format!("  ! {d}\n"));
                }
                t
            });
            Ok(render(&report, text, if report.verified { EXIT_OK } else { EXIT_FAILED }))
        }
        Command::Match { config, group, ramification, aut_type, automorphism_order } => {
            let query = match (config, group) {
                (Some(path), _) => {
                    let text = std::fs::read_to_string(path).map_err(|e| Outcome::usage(format!("{}: {e}", path.display())))?;
                    let parsed = if path.extension().is_some_and(|e| e == "json") {
                        serde_json::from_str::<MatchQuery>(&text).map_err(|e| e.to_string())
                    } else {
                        toml::from_str::<MatchQuery>(&text).map_err(|e| e.to_string())
                    };
                    parsed.map_err(|e| Outcome::usage(format!("{}: {e}", path.display())))?
                }
                (None, Some(g)) => {
                    let aut_type = match aut_type {
                        Some(t) => Some(
                            serde_json::from_value(serde_json::Value::String(t.clone()))
                                .map_err(|_| Outcome::usage(format!("unknown aut type `{t}`")))?,
                        ),
                        None => None,
                    };
                    MatchQuery {
                        group: group_arg(g)?,
                        ramification: ramification.expect("required by clap"),
                        aut_type,
                        automorphism_order: *automorphism_order,
                    }
                }
                (None, None) => return Err(Outcome::usage("give a query file or --group and --ramification")),
            };
            let report = match_curves_with_cap(&query, cap).map_err(Outcome::usage)?;
            Ok(render(&report, human.then(|| report.to_human()), EXIT_OK))
        }
        Command::Survey { families, seed_order } => {
            let families = survey::parse_families(families).map_err(Outcome::usage)?;
            let report = survey::run(&families, cap, seed_order.unwrap_or(cap as u32));
            Ok(render(&report, human.then(|| report.to_human()), EXIT_OK))
        }
        Command::Tiling { group, a, b, dot } => {
            let spec = group_arg(group)?;
            let g = build_group_with_cap(&spec, cap).map_err(Outcome::usage)?;
            let a = parse::parse_element(&g, a).map_err(|e| Outcome::usage(format!("a: {e}")))?;
            let b = parse::parse_element(&g, b).map_err(|e| Outcome::usage(format!("b: {e}")))?;
            let tiling = square_tiling(&g, Monodromy { a, b });
            let code = if tiling.is_connected() { EXIT_OK } else { EXIT_FAILED };
            if *dot {
                return Ok(Outcome { code, stdout: tiling.to_dot(&g), stderr: String::new() });
            }
            let text = human.then(|| {
                let mut t = format!("{} squares, connected: {}\n", tiling.squares(), tiling.is_connected());
                for s in 0..tiling.squares() {
                    t.push_str(&format!("  {s}: right {}, up {}\n", tiling.right[s], tiling.up[s]));
                }
                t
            });
            Ok(render(&tiling, text, code))
        }
        Command::GraphCheck { graph, p, dot } => {
            let text = std::fs::read_to_string(graph).map_err(|e| Outcome::usage(format!("{}: {e}", graph.display())))?;
            let g: GraphOfGroups = serde_json::from_str(&text).map_err(|e| Outcome::usage(format!("{}: {e}", graph.display())))?;
            if *dot {
                return Ok(Outcome { code: EXIT_OK, stdout: g.to_dot(), stderr: String::new() });
            }
            let report = validate_realizable(&g, *p);
            let code = if report.passed() { EXIT_OK } else { EXIT_FAILED };
            let text = human.then(|| {
                let mut t = format!("genus {}, ends {} (formula {})\n", report.genus, report.end_markers, report.end_formula);
                for c in &report.checks {
                    t.push_str(&format!("  {:<22} {}  {}\n", c.name, if c.passed { "ok" } else { "FAIL" }, c.detail));
                }
                t
            });
            Ok(render(&report, text, code))
        }
        Command::PairingCheck { p, q } => {
            let q = parse_rational(q).map_err(Outcome::usage)?;
            let report = mumford_pairing_check(*p, &q).map_err(Outcome::usage)?;
            let code = if report.passed { EXIT_OK } else { EXIT_FAILED };
            let text = human.then(|| {
                let mut t = format!("p = {}, q = {}, λ = {}\n", report.p, report.q, report.lambda);
                for l in &report.lines {
                    t.push_str(&format!("  |{}| = {} (expected {}) {}\n", l.measured, l.abs, l.expected, if l.holds { "ok" } else { "FAIL" }));
                }
                t.push_str(&format!("  passed: {}\n", report.passed));
                t
            });
            Ok(render(&report, text, code))
        }
    }
}

pub mod survey {
    //! Curve counts over explicit group families.

    use serde::Serialize;

    use crate::curves::CurveEnumeration;
    use crate::group::{build_group_with_cap, GroupSpec};

    #[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
    pub enum Family {
        C,
        D,
        A4,
        S4,
        A5,
        DxC,
        A4xC,
    }

    pub fn parse_families(text: &str) -> Result<Vec<Family>, String> {
        text.split(',')
            .map(|f| match f.trim() {
                "C" => Ok(Family::C),
                "D" => Ok(Family::D),
                "A4" => Ok(Family::A4),
                "S4" => Ok(Family::S4),
                "A5" => Ok(Family::A5),
                "DxC" => Ok(Family::DxC),
                "A4xC" => Ok(Family::A4xC),
                other => Err(format!("unknown family `{other}`")),
            })
            .collect()
    }

    /// Groups of the family with order at most `max_order` and parameters at most `seed`.
    pub fn members(family: Family, max_order: usize, seed: u32) -> Vec<GroupSpec> {
        let cap = |o: u64| o <= max_order as u64;
        match family {
            Family::C => (1..=seed).filter(|&n| cap(n as u64)).map(GroupSpec::Cyclic).collect(),
            Family::D => (3..=seed).filter(|&n| cap(2 * n as u64)).map(GroupSpec::Dihedral).collect(),
            Family::A4 => cap(12).then_some(GroupSpec::Alternating(4)).into_iter().collect(),
            Family::S4 => cap(24).then_some(GroupSpec::Symmetric(4)).into_iter().collect(),
            Family::A5 => cap(60).then_some(GroupSpec::Alternating(5)).into_iter().collect(),
            Family::DxC => (3..=seed)
                .flat_map(|n| (2..=seed).map(move |m| (n, m)))
                .filter(|&(n, m)| cap(2 * n as u64 * m as u64))
                .map(|(n, m)| GroupSpec::product(GroupSpec::Dihedral(n), GroupSpec::Cyclic(m)))
                .collect(),
            Family::A4xC => (2..=seed)
                .filter(|&m| cap(12 * m as u64))
                .map(|m| GroupSpec::product(GroupSpec::Alternating(4), GroupSpec::Cyclic(m)))
                .collect(),
        }
    }

    #[derive(Clone, Debug, PartialEq, Eq, Serialize)]
    pub struct SurveyRow {
        pub group: GroupSpec,
        pub order: usize,
        pub curves: usize,
        pub ramified_curves: usize,
        pub ramifications: Vec<u32>,
        /// More than one curve.
        pub flagged: bool,
    }

    #[derive(Clone, Debug, PartialEq, Eq, Serialize)]
    pub struct SurveyReport {
        pub max_order: usize,
        pub seed_order: u32,
        pub rows: Vec<SurveyRow>,
        pub flagged: usize,
        /// Surveys cover explicit families only, never all groups of an order.
        pub partial: bool,
    }

    impl SurveyReport {
        pub fn to_human(&self) -> String {
            let mut out = format!("survey up to order {} (family parameters ≤ {})\n", self.max_order, self.seed_order);
            for r in &self.rows {
                out.push_str(&format!(
                    "  {:<12} order {:>4}  curves {:>2}  r = {:?}{}\n",
                    r.group.to_string(),
                    r.order,
                    r.curves,
                    r.ramifications,
                    if r.flagged { "  *" } else { "" }
                ));
            }
            out.push_str(&format!("{} group(s) with more than one curve\n", self.flagged));
            out
        }
    }

    pub fn run(families: &[Family], max_order: usize, seed: u32) -> SurveyReport {
        let mut rows = Vec::new();
        for &f in families {
            for spec in members(f, max_order, seed) {
                let Ok(g) = build_group_with_cap(&spec, max_order) else { continue };
                let Ok(e) = CurveEnumeration::run_with_cap(&g, max_order) else { continue };
                let ramifications: Vec<u32> = e.curves().iter().map(|c| c.ramification).collect();
                rows.push(SurveyRow {
                    group: spec,
                    order: g.order(),
                    curves: ramifications.len(),
                    ramified_curves: ramifications.iter().filter(|&&r| r > 1).count(),
                    flagged: ramifications.len() > 1,
                    ramifications,
                });
            }
        }
        let flagged = rows.iter().filter(|r| r.flagged).count();
        SurveyReport { max_order, seed_order: seed, rows, flagged, partial: true }
    }
}
