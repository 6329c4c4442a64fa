//! Subcommand implementations. Every command produces one text artifact
//! (printed to stdout and optionally written to --out) plus an exit code:
//! 0 success/Proven, 1 Refuted (witness emitted), 2 inconclusive or
//! no-violation-within-bound, 3 input error.

use std::path::PathBuf;

use anyhow::{anyhow, bail};
use clap::{Parser, Subcommand};
use serde_json::json;

use dual_artin_core::artin::{well_stabilized_check, WellStabilized};
use dual_artin_core::braid::BraidWord;
use dual_artin_core::coxeter::{CoxeterMatrix, CoxeterSystem};
use dual_artin_core::free::{star_apply, FreeGroup, FreeWord};
use dual_artin_core::interval::{
    build_interval, ElementTransitivity, PanVerdict, PresentationStyle,
};
use dual_artin_core::products::{
    compose, compose_graph, right_angled, verify_main_theorem, verify_stabilizer_product,
    BoundedVerdict, ProductKind, ProductSystem, VerifyCaps,
};
use dual_artin_core::Error;

use crate::cache::{cache_key, Cache, Lookup};
use crate::formats;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "dual-artin",
    version,
    about = "Dual Artin groups from Coxeter systems: Hurwitz orbits, noncrossing intervals, presentations, and product theorem verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Directory for the content-addressed artifact cache.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Node bound for Hurwitz orbit and interval construction.
    #[arg(long, global = true, default_value_t = 5000)]
    pub orbit_cap: usize,

    /// Node bound for per-element transitivity and star searches.
    #[arg(long, global = true, default_value_t = 5000)]
    pub search_cap: usize,

    /// Element bound when tabulating a spherical free factor.
    #[arg(long, global = true, default_value_t = 20000)]
    pub factor_cap: usize,

    /// Braid word length bound for exhaustive stabilizer-support checks.
    #[arg(long, global = true, default_value_t = 5)]
    pub braid_cap: usize,

    /// Also write the artifact to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the noncrossing partition interval [1,h]_T.
    Interval {
        #[arg(long)]
        system: PathBuf,
        /// dot | json
        #[arg(long, default_value = "dot")]
        format: String,
    },
    /// Enumerate the reduced T-words of an element of the interval.
    Redwords {
        #[arg(long)]
        system: PathBuf,
        /// Word in the simple generators, e.g. "1 2 1" (1-based).
        #[arg(long)]
        element: String,
        /// text | json
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Hurwitz orbit of the Coxeter tuple.
    Orbit {
        #[arg(long)]
        system: PathBuf,
        /// json | dot
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Check Hurwitz transitivity on Red_T(a) for every interval element.
    PanTransitive {
        #[arg(long)]
        system: PathBuf,
    },
    /// Compare the Hurwitz stabilizers of the Coxeter tuple in W and in
    /// Art(W,S).
    WellStabilized {
        #[arg(long)]
        system: PathBuf,
    },
    /// Emit a presentation of the dual Artin group.
    Presentation {
        #[arg(long)]
        system: PathBuf,
        /// hurwitz | interval
        #[arg(long, default_value = "hurwitz")]
        style: String,
        /// text | gap | json
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Image of a standard Artin generator word under the morphism to the
    /// dual group.
    Psi {
        #[arg(long)]
        system: PathBuf,
        /// Signed generator word, e.g. "1 2 -1".
        #[arg(long)]
        word: String,
    },
    /// Compose systems into a free, direct or graph product.
    Product {
        /// free | direct | graph | right-angled
        #[arg(long)]
        kind: String,
        /// Factor system files (not used for right-angled).
        #[arg(long, num_args = 0..)]
        factors: Vec<PathBuf>,
        /// Edges like "1-2,2-3" (graph and right-angled kinds).
        #[arg(long)]
        edges: Option<String>,
        /// Vertex count for right-angled systems.
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Verify the hypotheses of the isomorphism theorem on a product.
    VerifyTheorems {
        /// free | direct | graph | right-angled
        #[arg(long)]
        kind: String,
        #[arg(long, num_args = 0..)]
        factors: Vec<PathBuf>,
        #[arg(long)]
        edges: Option<String>,
        #[arg(long)]
        rank: Option<usize>,
        /// text | json
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Apply a braid to a free-group word through the star action.
    StarDemo {
        #[arg(long)]
        rank: usize,
        /// Braid word, e.g. "1 -2".
        #[arg(long)]
        braid: String,
        /// Free word (defaults to g = f_1...f_n).
        #[arg(long)]
        word: Option<String>,
    },
}

pub struct Outcome {
    pub exit: i32,
    pub output: String,
}

fn ok(output: String) -> Outcome {
    Outcome {
        exit: EXIT_OK,
        output,
    }
}

/// Compute-or-reuse through the cache; corrupt entries are recomputed and
/// overwritten.
fn cached(
    cache_dir: &Option<PathBuf>,
    key_parts: &[&str],
    compute: impl FnOnce() -> anyhow::Result<String>,
) -> anyhow::Result<String> {
    let Some(dir) = cache_dir else {
        return compute();
    };
    let cache = Cache::new(dir)?;
    let key = cache_key(key_parts);
    match cache.get(&key) {
        Lookup::Hit(payload) => Ok(payload),
        Lookup::Miss | Lookup::Corrupt => {
            let payload = compute()?;
            cache.put(&key, &payload)?;
            Ok(payload)
        }
    }
}

fn load(path: &std::path::Path) -> anyhow::Result<(CoxeterMatrix, CoxeterSystem, String)> {
    let matrix = formats::load_system(path)?;
    let canonical = formats::system_json(&matrix).to_string();
    let sys = CoxeterSystem::new(matrix.clone());
    Ok((matrix, sys, canonical))
}

fn pan_exit(v: &PanVerdict) -> i32 {
    match v {
        PanVerdict::Proven => EXIT_OK,
        PanVerdict::Refuted { .. } => EXIT_REFUTED,
        PanVerdict::NoViolationWithinBound => EXIT_INCONCLUSIVE,
    }
}

fn build_product(
    kind: &str,
    factors: &[PathBuf],
    edges: &Option<String>,
    rank: &Option<usize>,
) -> anyhow::Result<ProductSystem> {
    match kind {
        "free" | "direct" => {
            if factors.len() < 2 {
                bail!("{kind} product needs at least two --factors");
            }
            let mats = factors
                .iter()
                .map(|p| formats::load_system(p))
                .collect::<anyhow::Result<Vec<_>>>()?;
            let kind = if kind == "free" {
                ProductKind::Free
            } else {
                ProductKind::Direct
            };
            Ok(compose(mats, kind)?)
        }
        "graph" => {
            if factors.is_empty() {
                bail!("graph product needs --factors");
            }
            let mats = factors
                .iter()
                .map(|p| formats::load_system(p))
                .collect::<anyhow::Result<Vec<_>>>()?;
            let edges = formats::parse_edges(edges.as_deref().unwrap_or(""))?;
            Ok(compose_graph(mats, &edges)?)
        }
        "right-angled" => {
            let n = rank.ok_or_else(|| anyhow!("right-angled needs --rank"))?;
            let edges = formats::parse_edges(edges.as_deref().unwrap_or(""))?;
            Ok(right_angled(n, &edges)?)
        }
        other => bail!("unknown product kind {other:?}"),
    }
}

fn well_stabilized_text(v: &WellStabilized) -> (i32, String) {
    match v {
        WellStabilized::Proven => (EXIT_OK, String::from("Proven")),
        WellStabilized::Refuted(witness) => (
            EXIT_REFUTED,
            format!("Refuted, witness braid {:?}", witness.letters()),
        ),
        WellStabilized::Inconclusive => (EXIT_INCONCLUSIVE, String::from("Inconclusive")),
    }
}

pub fn execute(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Interval { system, format } => {
            let (_, sys, canonical) = load(system)?;
            let cap = cli.orbit_cap.to_string();
            let payload = cached(
                &cli.cache_dir,
                &[&canonical, "interval", &cap, format],
                || {
                    let poset = build_interval(&sys, cli.orbit_cap);
                    match format.as_str() {
                        "dot" => Ok(formats::poset_dot(&poset)),
                        "json" => Ok(format!("{:#}\n", formats::poset_json(&poset))),
                        other => bail!("unknown format {other:?}"),
                    }
                },
            )?;
            Ok(ok(payload))
        }
        Command::Redwords {
            system,
            element,
            format,
        } => {
            let (_, sys, _) = load(system)?;
            let word: Vec<usize> = formats::parse_int_list(element)?
                .into_iter()
                .map(|l| {
                    if l <= 0 {
                        bail!("element word letters are positive 1-based indices")
                    } else {
                        Ok(l as usize - 1)
                    }
                })
                .collect::<anyhow::Result<_>>()?;
            let a = sys.word_to_element(&word)?;
            let poset = build_interval(&sys, cli.orbit_cap);
            let red = poset.red_words(&a)?;
            let output = match format.as_str() {
                "text" => {
                    let mut out = format!(
                        "element {}  reduced T-words{}:\n",
                        sys.element_name(&a),
                        if red.complete { "" } else { " (discovered subset)" }
                    );
                    for w in &red.words {
                        let names: Vec<String> =
                            w.iter().map(|t| sys.element_name(t)).collect();
                        out.push_str(&format!("  ({})\n", names.join(", ")));
                    }
                    out
                }
                "json" => format!(
                    "{:#}\n",
                    json!({
                        "schema": "dual-artin/redwords/1",
                        "element": sys.element_name(&a),
                        "complete": red.complete,
                        "words": red
                            .words
                            .iter()
                            .map(|w| w.iter().map(|t| sys.element_name(t)).collect::<Vec<_>>())
                            .collect::<Vec<_>>(),
                    })
                ),
                other => bail!("unknown format {other:?}"),
            };
            Ok(ok(output))
        }
        Command::Orbit { system, format } => {
            let (_, sys, canonical) = load(system)?;
            let cap = cli.orbit_cap.to_string();
            let payload = cached(&cli.cache_dir, &[&canonical, "orbit", &cap, format], || {
                let orbit =
                    dual_artin_core::hurwitz_orbit(&sys, &sys.coxeter_tuple(), cli.orbit_cap);
                match format.as_str() {
                    "json" => Ok(format!("{:#}\n", formats::orbit_json(&sys, &orbit))),
                    "dot" => Ok(formats::orbit_dot(&sys, &orbit)),
                    other => bail!("unknown format {other:?}"),
                }
            })?;
            Ok(ok(payload))
        }
        Command::PanTransitive { system } => {
            let (_, sys, _) = load(system)?;
            let poset = build_interval(&sys, cli.orbit_cap);
            let report = poset.pan_transitive_check(cli.search_cap);
            let mut output = String::new();
            for (idx, verdict) in report.per_element.iter().enumerate() {
                output.push_str(&format!(
                    "  {}: {}\n",
                    poset.system().element_name(poset.element(idx)),
                    match verdict {
                        ElementTransitivity::Transitive => "transitive",
                        ElementTransitivity::NotTransitive => "NOT transitive",
                        ElementTransitivity::Unknown => "unknown within bound",
                    }
                ));
            }
            let overall = match &report.overall {
                PanVerdict::Proven => String::from("Proven"),
                PanVerdict::Refuted { element_index } => format!(
                    "Refuted at element {}",
                    poset.system().element_name(poset.element(*element_index))
                ),
                PanVerdict::NoViolationWithinBound => String::from("NoViolationWithinBound"),
            };
            output.push_str(&format!("pan-transitive: {overall}\n"));
            Ok(Outcome {
                exit: pan_exit(&report.overall),
                output,
            })
        }
        Command::WellStabilized { system } => {
            let (_, sys, _) = load(system)?;
            match well_stabilized_check(&sys, cli.orbit_cap, cli.factor_cap) {
                Ok(verdict) => {
                    let (exit, text) = well_stabilized_text(&verdict);
                    Ok(Outcome {
                        exit,
                        output: format!("well-stabilized: {text}\n"),
                    })
                }
                Err(Error::UnsupportedSystem(msg)) => Ok(Outcome {
                    exit: EXIT_INCONCLUSIVE,
                    output: format!("well-stabilized: Inconclusive (unsupported system: {msg})\n"),
                }),
                Err(e) => Err(e.into()),
            }
        }
        Command::Presentation {
            system,
            style,
            format,
        } => {
            let (_, sys, _) = load(system)?;
            let style = match style.as_str() {
                "hurwitz" => PresentationStyle::Hurwitz,
                "interval" => PresentationStyle::Interval,
                other => bail!("unknown style {other:?}"),
            };
            let poset = build_interval(&sys, cli.orbit_cap);
            match poset.presentation(style) {
                Ok(pres) => {
                    let output = match format.as_str() {
                        "text" => formats::presentation_text(&sys, &pres),
                        "gap" => formats::presentation_gap(&sys, &pres),
                        "json" => format!("{:#}\n", formats::presentation_json(&sys, &pres)),
                        other => bail!("unknown format {other:?}"),
                    };
                    Ok(ok(output))
                }
                Err(Error::IncompleteInterval) => Ok(Outcome {
                    exit: EXIT_INCONCLUSIVE,
                    output: format!(
                        "interval did not close within --orbit-cap {}\n",
                        cli.orbit_cap
                    ),
                }),
                Err(e) => Err(e.into()),
            }
        }
        Command::Psi { system, word } => {
            let (_, sys, _) = load(system)?;
            let letters = formats::parse_int_list(word)?;
            let poset = build_interval(&sys, cli.orbit_cap);
            let image = poset.psi_image(&letters)?;
            let pres = poset.presentation(PresentationStyle::Hurwitz)?;
            let legend = crate::formats::presentation_text(&sys, &pres);
            let mut output = String::from(legend.lines().next().unwrap_or(""));
            output.push('\n');
            output.push_str(&format!(
                "psi({:?}) = {}\n",
                letters,
                if image.is_empty() {
                    String::from("1")
                } else {
                    image
                        .iter()
                        .map(|&l| {
                            if l > 0 {
                                format!("t{l}")
                            } else {
                                format!("t{}^-1", -l)
                            }
                        })
                        .collect::<Vec<_>>()
                        .join(" ")
                }
            ));
            Ok(ok(output))
        }
        Command::Product {
            kind,
            factors,
            edges,
            rank,
        } => {
            let ps = build_product(kind, factors, edges, rank)?;
            let mut value = formats::system_json(ps.composed());
            value["decomposition"] = json!(ps.describe());
            Ok(ok(format!("{value:#}\n")))
        }
        Command::VerifyTheorems {
            kind,
            factors,
            edges,
            rank,
            format,
        } => {
            let ps = build_product(kind, factors, edges, rank)?;
            let caps = VerifyCaps {
                orbit_cap: cli.orbit_cap,
                search_cap: cli.search_cap,
                factor_cap: cli.factor_cap,
            };
            let report = verify_main_theorem(&ps, caps)?;
            let support = if ps.kind() == ProductKind::Free {
                Some(verify_stabilizer_product(&ps, cli.braid_cap)?)
            } else {
                None
            };
            let (ws_exit, ws_text) = well_stabilized_text(&report.well_stabilized);
            let pan_text = match &report.pan.composed {
                PanVerdict::Proven => String::from("Proven"),
                PanVerdict::Refuted { element_index } => {
                    format!("Refuted (element index {element_index})")
                }
                PanVerdict::NoViolationWithinBound => String::from("NoViolationWithinBound"),
            };
            let support_text = match &support {
                None => String::from("n/a"),
                Some(BoundedVerdict::ProvenWithinBound) => format!(
                    "no violation among words of length <= {}",
                    cli.braid_cap
                ),
                Some(BoundedVerdict::Refuted(w)) => {
                    format!("REFUTED by braid {:?}", w.letters())
                }
            };
            let exit = if matches!(support, Some(BoundedVerdict::Refuted(_)))
                || ws_exit == EXIT_REFUTED
                || pan_exit(&report.pan.composed) == EXIT_REFUTED
            {
                EXIT_REFUTED
            } else if ws_exit == EXIT_OK && report.pan.composed == PanVerdict::Proven {
                EXIT_OK
            } else {
                EXIT_INCONCLUSIVE
            };
            let output = match format.as_str() {
                "text" => {
                    let mut out = String::new();
                    out.push_str(&format!(
                        "system: {} (rank {})\n",
                        report.description, report.rank
                    ));
                    out.push_str(&format!("well-stabilized: {ws_text}\n"));
                    out.push_str(&format!(
                        "pan-transitive (composed): {pan_text} (orbit cap {}, search cap {})\n",
                        caps.orbit_cap, caps.search_cap
                    ));
                    let factor_texts: Vec<String> = report
                        .pan
                        .factor_verdicts
                        .iter()
                        .map(|v| match v {
                            PanVerdict::Proven => String::from("Proven"),
                            PanVerdict::Refuted { .. } => String::from("Refuted"),
                            PanVerdict::NoViolationWithinBound => {
                                String::from("NoViolationWithinBound")
                            }
                        })
                        .collect();
                    out.push_str(&format!(
                        "pan-transitive (factors): {}\n",
                        factor_texts.join(", ")
                    ));
                    out.push_str(&format!("stabilizer support: {support_text}\n"));
                    out.push_str(&format!(
                        "isomorphism hypotheses: {}\n",
                        if report.hypotheses_proven() {
                            "both Proven"
                        } else if report.refuted() {
                            "REFUTED"
                        } else {
                            "not fully certified within the bounds"
                        }
                    ));
                    out
                }
                "json" => {
                    let ws = match &report.well_stabilized {
                        WellStabilized::Proven => json!("Proven"),
                        WellStabilized::Refuted(w) => {
                            json!({"Refuted": w.letters()})
                        }
                        WellStabilized::Inconclusive => json!("Inconclusive"),
                    };
                    let pan = |v: &PanVerdict| match v {
                        PanVerdict::Proven => json!("Proven"),
                        PanVerdict::Refuted { element_index } => {
                            json!({"Refuted": element_index})
                        }
                        PanVerdict::NoViolationWithinBound => json!("NoViolationWithinBound"),
                    };
                    format!(
                        "{:#}\n",
                        json!({
                            "schema": "dual-artin/theorem-report/1",
                            "system": report.description,
                            "rank": report.rank,
                            "well_stabilized": ws,
                            "pan_transitive_composed": pan(&report.pan.composed),
                            "pan_transitive_factors": report
                                .pan
                                .factor_verdicts
                                .iter()
                                .map(pan)
                                .collect::<Vec<_>>(),
                            "stabilizer_support": support_text,
                            "caps": {
                                "orbit": caps.orbit_cap,
                                "search": caps.search_cap,
                                "factor": caps.factor_cap,
                                "braid": cli.braid_cap,
                            },
                            "hypotheses_proven": report.hypotheses_proven(),
                        })
                    )
                }
                other => bail!("unknown format {other:?}"),
            };
            Ok(Outcome { exit, output })
        }
        Command::StarDemo { rank, braid, word } => {
            let letters = formats::parse_int_list(braid)?;
            let braid = BraidWord::new(*rank, letters)
                .map_err(|e| anyhow!("bad braid word: {e}"))?;
            let fg = FreeGroup::new(*rank);
            let input = match word {
                Some(w) => FreeWord::new(*rank, formats::parse_int_list(w)?)
                    .map_err(|e| anyhow!("bad free word: {e}"))?,
                None => fg.full_product(),
            };
            let result = star_apply(&braid, &input)?;
            let show = |w: &FreeWord| {
                if w.is_identity() {
                    String::from("1")
                } else {
                    w.letters()
                        .iter()
                        .map(|&l| {
                            if l > 0 {
                                format!("f{l}")
                            } else {
                                format!("f{}^-1", -l)
                            }
                        })
                        .collect::<Vec<_>>()
                        .join(" ")
                }
            };
            let mut output = format!(
                "braid {:?} * ({}) = {}\n",
                braid.letters(),
                show(&input),
                show(&result)
            );
            if word.is_none() {
                output.push_str("(the full product g is fixed by every braid)\n");
            }
            Ok(ok(output))
        }
    }
}
