//! `artin`: command-line surface over the decision procedures.
//!
//! Verdicts go to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 input or schema error, 2 violated precondition (named on stderr),
//! 3 failed internal self-check.

pub mod report;

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;

use artin_core::abelianize;
use artin_core::classifier;
use artin_core::decompose::{self, KernelResult};
use artin_core::error::{Error, ErrorCategory, Result};
use artin_core::evenfc;
use artin_core::graph::{CliqueSplit, LabeledGraph, SeparatorOutcome, VertexSet};
use artin_core::oracles::{self, IntegerMatrix, RewriteOutcome};
use artin_core::presentation::{self, GroupPresentation};
use artin_core::word::GeneratorWord;

#[derive(Parser)]
#[command(
    name = "artin",
    about = "Structural decision procedures for Artin groups given by labeled graphs",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Vertex cap for the brute-force oracles.
    #[arg(long, global = true, default_value_t = 7)]
    pub max_brute: usize,
}

#[derive(Subcommand)]
pub enum Command {
    /// Parse and validate a graph; echo the canonical form.
    Validate { input: Option<PathBuf> },
    /// Even / FC / spherical / coherent / irreducible summary.
    Classify { input: Option<PathBuf> },
    /// Coherence verdict with a witness when incoherent.
    Coherence { input: Option<PathBuf> },
    /// Rank and class map of the abelianization.
    Abelianize { input: Option<PathBuf> },
    /// Full decomposition of a coherent group.
    Decompose { input: Option<PathBuf> },
    /// Kernel of the tree action for a splitting (computed or supplied).
    Kernel {
        input: Option<PathBuf>,
        /// Comma-separated vertices of the first side.
        #[arg(long)]
        g1: Option<String>,
        /// Comma-separated vertices of the second side.
        #[arg(long)]
        g2: Option<String>,
        /// Comma-separated vertices of the intersection (may be empty).
        #[arg(long)]
        delta: Option<String>,
    },
    /// Split off the star of one vertex.
    Split {
        #[arg(long)]
        vertex: String,
        input: Option<PathBuf>,
    },
    /// Centralizer structure of a generator or a standard parabolic subgroup.
    Centralizer {
        #[arg(long, conflicts_with = "subset")]
        vertex: Option<String>,
        /// Comma-separated vertex subset.
        #[arg(long)]
        subset: Option<String>,
        input: Option<PathBuf>,
    },
    /// Normalizer bound for a standard parabolic subgroup.
    Normalizer {
        #[arg(long)]
        subset: String,
        input: Option<PathBuf>,
    },
    /// Acylindricity report for the group or a standard parabolic subgroup.
    Acyl {
        #[arg(long)]
        subset: Option<String>,
        input: Option<PathBuf>,
    },
    /// Standard presentation; `--coxeter` adds the squared generators.
    Present {
        #[arg(long)]
        coxeter: bool,
        input: Option<PathBuf>,
    },
    /// Every applicable analysis in one document.
    Report { input: Option<PathBuf> },
    /// Brute-force and numeric cross-checks.
    Oracle {
        #[command(subcommand)]
        oracle: OracleCommand,
    },
}

#[derive(Subcommand)]
pub enum OracleCommand {
    /// Positive definiteness of the cosine matrix.
    Pd { input: Option<PathBuf> },
    /// Exhaustive chordality check.
    BruteChordal { input: Option<PathBuf> },
    /// Exhaustive forbidden-square search.
    BrutePattern { input: Option<PathBuf> },
    /// Smith normal form of the abelianized relation matrix.
    Snf { input: Option<PathBuf> },
    /// Bounded word-problem search in a dihedral group.
    Rewrite {
        /// Even edge label 2k.
        #[arg(long)]
        label: u32,
        /// Left word, e.g. "a w a^-1".
        #[arg(long)]
        left: String,
        /// Right word.
        #[arg(long)]
        right: String,
        /// State budget for the search.
        #[arg(long, default_value_t = 1_000_000)]
        depth: usize,
    },
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            match e.category() {
                ErrorCategory::Input => 1,
                ErrorCategory::Precondition => 2,
                ErrorCategory::Internal => 3,
            }
        }
    }
}

fn load_graph(input: &Option<PathBuf>) -> Result<LabeledGraph> {
    let text = match input {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)
            .map_err(|e| Error::MalformedInput(format!("cannot read {}: {e}", path.display())))?,
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::MalformedInput(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    LabeledGraph::parse_json(&text)
}

fn parse_subset(g: &LabeledGraph, csv: &str) -> Result<VertexSet> {
    let names: Vec<&str> = csv
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    g.vertex_set(&names)
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) -> Result<()> {
    if json {
        let doc = serde_json::to_string_pretty(value)
            .map_err(|e| Error::InternalInconsistency(format!("serialization failed: {e}")))?;
        println!("{doc}");
    } else {
        let rendered = text();
        print!("{rendered}");
        if !rendered.ends_with('\n') {
            println!();
        }
    }
    Ok(())
}

fn fmt_set(names: &[String]) -> String {
    format!("{{{}}}", names.join(", "))
}

fn execute(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Validate { input } => {
            let g = load_graph(input)?;
            emit(cli.json, &g, || {
                format!(
                    "valid: {} vertices, {} edges\n{}",
                    g.vertex_count(),
                    g.edge_count(),
                    g.to_json()
                )
            })
        }
        Command::Classify { input } => {
            let g = load_graph(input)?;
            let summary = report::classify(&g);
            emit(cli.json, &summary, || {
                report::render_classify_text(&summary)
            })
        }
        Command::Coherence { input } => {
            let g = load_graph(input)?;
            let verdict = classifier::coherence(&g);
            emit(cli.json, &verdict, || verdict.to_string())
        }
        Command::Abelianize { input } => {
            let g = load_graph(input)?;
            let ab = abelianize::abelianization(&g);
            emit(cli.json, &ab, || {
                let classes: Vec<String> = ab
                    .classes()
                    .iter()
                    .map(|(v, c)| format!("{v} -> {c}"))
                    .collect();
                format!("rank {}\nclasses: {}", ab.rank, classes.join(", "))
            })
        }
        Command::Decompose { input } => {
            let g = load_graph(input)?;
            let tree = decompose::coherent_decomposition(&g)?;
            let rendered = presentation::render_tree(&tree);
            #[derive(Serialize)]
            struct Doc {
                tree: artin_core::decompose::DecompositionTree,
                rendered: String,
            }
            let doc = Doc { tree, rendered };
            emit(cli.json, &doc, || doc.rendered.clone())
        }
        Command::Kernel {
            input,
            g1,
            g2,
            delta,
        } => {
            let g = load_graph(input)?;
            let split =
                match (g1, g2) {
                    (Some(g1), Some(g2)) => CliqueSplit {
                        g1: parse_subset(&g, g1)?,
                        g2: parse_subset(&g, g2)?,
                        delta: match delta {
                            Some(d) => parse_subset(&g, d)?,
                            None => VertexSet::from_sorted(Vec::new()),
                        },
                    },
                    (None, None) => match g.find_clique_separator()? {
                        SeparatorOutcome::Split(split) => decompose::refine_split(&g, &split)?,
                        SeparatorOutcome::NotSplittable => return Err(Error::NoSuitableSplit(
                            "the graph is complete or too small to split; pass --g1/--g2/--delta"
                                .to_owned(),
                        )),
                    },
                    _ => {
                        return Err(Error::MalformedInput(
                            "--g1 and --g2 must be given together".to_owned(),
                        ))
                    }
                };
            let kernel = decompose::bass_serre_kernel(&g, &split)?;
            #[derive(Serialize)]
            struct Doc {
                g1: Vec<String>,
                g2: Vec<String>,
                delta: Vec<String>,
                kernel: KernelResult,
            }
            let doc = Doc {
                g1: split.g1.names(&g),
                g2: split.g2.names(&g),
                delta: split.delta.names(&g),
                kernel,
            };
            emit(cli.json, &doc, || {
                let mut out = format!(
                    "split: g1 = {}, g2 = {}, delta = {}\n",
                    fmt_set(&doc.g1),
                    fmt_set(&doc.g2),
                    fmt_set(&doc.delta)
                );
                if doc.kernel.s.is_empty() {
                    out.push_str("kernel of the tree action: trivial");
                } else {
                    out.push_str(&format!(
                        "kernel of the tree action: A_{} x A_{}",
                        fmt_set(&doc.kernel.s),
                        fmt_set(&doc.kernel.complement)
                    ));
                }
                out
            })
        }
        Command::Split { vertex, input } => {
            let g = load_graph(input)?;
            let split = decompose::vertex_split(&g, vertex)?;
            emit(cli.json, &split, || {
                format!(
                    "A = A{} *_{{A{}}} A{}\nleft = {}, right = {}, over = {}",
                    fmt_set(&split.left),
                    fmt_set(&split.over),
                    fmt_set(&split.right),
                    fmt_set(&split.left),
                    fmt_set(&split.right),
                    fmt_set(&split.over)
                )
            })
        }
        Command::Centralizer {
            vertex,
            subset,
            input,
        } => {
            let g = load_graph(input)?;
            match (vertex, subset) {
                (Some(v), None) => {
                    let c = evenfc::vertex_centralizer(&g, v)?;
                    let pres = presentation::centralizer_presentation(&c);
                    let star = presentation::star_semidirect_presentation(&c);
                    #[derive(Serialize)]
                    struct Doc {
                        centralizer: evenfc::CentralizerStructure,
                        presentation: GroupPresentation,
                        star_presentation: GroupPresentation,
                    }
                    let doc = Doc {
                        centralizer: c,
                        presentation: pres,
                        star_presentation: star,
                    };
                    emit(cli.json, &doc, || {
                        let mut out = format!(
                            "C({}) = <{}> x L\n",
                            doc.centralizer.actor, doc.centralizer.actor
                        );
                        for gen in &doc.centralizer.generators {
                            match &gen.factored {
                                Some(f) => out
                                    .push_str(&format!("  {} = {}   [{f}]\n", gen.name, gen.word)),
                                None => out.push_str(&format!("  {}\n", gen.name)),
                            }
                        }
                        out.push_str(&format!("L graph: {}\n", doc.centralizer.l_graph.to_json()));
                        out.push_str(&format!("presentation: {}\n", doc.presentation.text()));
                        out.push_str(&format!(
                            "star presentation (semidirect): {}\n",
                            doc.star_presentation.text()
                        ));
                        out
                    })
                }
                (None, Some(s)) => {
                    let set = parse_subset(&g, s)?;
                    let gens = evenfc::parabolic_centralizer_generators(&g, &set)?;
                    emit(cli.json, &gens, || {
                        let mut out = format!(
                            "centralizer generators for A_{}:\n",
                            fmt_set(&set.names(&g))
                        );
                        for gen in &gens {
                            match &gen.factored {
                                Some(f) => out
                                    .push_str(&format!("  {} = {}   [{f}]\n", gen.name, gen.word)),
                                None => out.push_str(&format!("  {}\n", gen.name)),
                            }
                        }
                        out
                    })
                }
                _ => Err(Error::MalformedInput(
                    "pass exactly one of --vertex or --subset".to_owned(),
                )),
            }
        }
        Command::Normalizer { subset, input } => {
            let g = load_graph(input)?;
            let set = parse_subset(&g, subset)?;
            let verdict = evenfc::normalizer_classify(&g, &set)?;
            emit(cli.json, &verdict, || {
                let mut out = match &verdict.case {
                    evenfc::NormalizerCase::Equal { s } => {
                        format!("N(A_{}) = A_{}\n", fmt_set(s), fmt_set(s))
                    }
                    evenfc::NormalizerCase::ProductBound { t1, t2 } => {
                        format!("N(A_S) <= A_{} x A_{}\n", fmt_set(t1), fmt_set(t2))
                    }
                    evenfc::NormalizerCase::SemidirectBound { l_graph, s } => format!(
                        "A_{} is free abelian and N(A_{}) <= L x A_{} with L over {}\n",
                        fmt_set(s),
                        fmt_set(s),
                        fmt_set(s),
                        l_graph.to_json()
                    ),
                };
                if !verdict.removed_vertices.is_empty() {
                    out.push_str(&format!(
                        "removed vertices: {}\n",
                        verdict.removed_vertices.join(", ")
                    ));
                }
                if let Some(z) = &verdict.z {
                    out.push_str(&format!("central part Z = {}\n", fmt_set(z)));
                }
                out
            })
        }
        Command::Acyl { subset, input } => {
            let g = load_graph(input)?;
            let set = match subset {
                Some(s) => Some(parse_subset(&g, s)?),
                None => None,
            };
            let report = evenfc::acyl_report(&g, set.as_ref())?;
            emit(cli.json, &report, || {
                let mut out = format!("target: {}\n{}\n", fmt_set(&report.target), report.overall);
                for f in &report.factors {
                    out.push_str(&format!("  {}: {}\n", fmt_set(&f.vertices), f.verdict));
                }
                out
            })
        }
        Command::Present { coxeter, input } => {
            let g = load_graph(input)?;
            let pres = GroupPresentation::from_graph(&g, *coxeter);
            emit(cli.json, &pres, || pres.text())
        }
        Command::Report { input } => {
            let g = load_graph(input)?;
            let doc = report::build_report(&g)?;
            emit(cli.json, &doc, || report::render_report_text(&doc))
        }
        Command::Oracle { oracle } => match oracle {
            OracleCommand::Pd { input } => {
                let g = load_graph(input)?;
                let pd = oracles::cosine_matrix_pd(&g);
                emit(cli.json, &pd, || format!("positive definite: {pd}"))
            }
            OracleCommand::BruteChordal { input } => {
                let g = load_graph(input)?;
                let chordal = oracles::brute_chordal(&g, cli.max_brute)?;
                emit(cli.json, &chordal, || format!("chordal: {chordal}"))
            }
            OracleCommand::BrutePattern { input } => {
                let g = load_graph(input)?;
                let hits = oracles::brute_pattern(&g, cli.max_brute)?;
                emit(cli.json, &hits, || {
                    if hits.is_empty() {
                        "no forbidden squares".to_owned()
                    } else {
                        hits.iter()
                            .map(ToString::to_string)
                            .collect::<Vec<_>>()
                            .join("\n")
                    }
                })
            }
            OracleCommand::Snf { input } => {
                let g = load_graph(input)?;
                let snf = oracles::smith_normal_form(&IntegerMatrix::abelianized_relations(&g));
                #[derive(Serialize)]
                struct Doc {
                    divisors: Vec<i128>,
                    free_rank: usize,
                }
                let doc = Doc {
                    divisors: snf.divisors,
                    free_rank: snf.free_rank,
                };
                emit(cli.json, &doc, || {
                    format!("divisors: {:?}, free rank: {}", doc.divisors, doc.free_rank)
                })
            }
            OracleCommand::Rewrite {
                label,
                left,
                right,
                depth,
            } => {
                let w1 = GeneratorWord::parse(left)?;
                let w2 = GeneratorWord::parse(right)?;
                let outcome = oracles::bounded_rewrite_equal(*label, &w1, &w2, *depth)?;
                #[derive(Serialize)]
                struct Doc {
                    outcome: String,
                    budget_exceeded: bool,
                }
                let doc = match outcome {
                    RewriteOutcome::Equal => Doc {
                        outcome: "equal".to_owned(),
                        budget_exceeded: false,
                    },
                    RewriteOutcome::Unknown { budget_exceeded } => Doc {
                        outcome: "unknown".to_owned(),
                        budget_exceeded,
                    },
                };
                emit(cli.json, &doc, || {
                    if doc.budget_exceeded {
                        format!("{} (budget exceeded)", doc.outcome)
                    } else {
                        doc.outcome.clone()
                    }
                })
            }
        },
    }
}
