//! The aggregated report: every applicable analysis of one input graph,
//! with inapplicable sections listed under `skipped`.

use serde::Serialize;

use artin_core::abelianize::{self, AbelianizationMap};
use artin_core::classifier::{self, CoherenceVerdict, DerivedSubgroupVerdict, SphericalVerdict};
use artin_core::decompose::{self, DecompositionTree, KernelResult, NormalSubgroupReport};
use artin_core::error::{Error, ErrorCategory, Result};
use artin_core::evenfc::{self, AcylReport, CentralizerStructure};
use artin_core::graph::{LabeledGraph, SeparatorOutcome};
use artin_core::presentation::{self, GroupPresentation};

#[derive(Debug, Clone, Serialize)]
pub struct ClassifySummary {
    pub even: bool,
    pub fc: bool,
    pub even_fc: bool,
    pub spherical: SphericalVerdict,
    pub coherent: bool,
    pub irreducible: bool,
    pub irreducible_factors: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionSection {
    pub tree: DecompositionTree,
    pub rendered: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SplitSection {
    pub g1: Vec<String>,
    pub g2: Vec<String>,
    pub delta: Vec<String>,
    pub kernel: KernelResult,
}

#[derive(Debug, Clone, Serialize)]
pub struct EvenFcSection {
    pub centralizers: Vec<CentralizerStructure>,
    pub acyl: AcylReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct SkippedSection {
    pub section: String,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDoc {
    pub graph: LabeledGraph,
    pub presentation: String,
    pub classification: ClassifySummary,
    pub coherence: CoherenceVerdict,
    pub derived_subgroup: DerivedSubgroupVerdict,
    pub abelianization: AbelianizationMap,
    pub decomposition: Option<DecompositionSection>,
    pub kernel: Option<SplitSection>,
    pub normal_subgroup: Option<NormalSubgroupReport>,
    pub evenfc: Option<EvenFcSection>,
    pub skipped: Vec<SkippedSection>,
}

pub fn classify(g: &LabeledGraph) -> ClassifySummary {
    let factors = classifier::irreducible_factors(g);
    ClassifySummary {
        even: classifier::is_even(g),
        fc: classifier::is_fc(g),
        even_fc: classifier::is_even_fc(g),
        spherical: classifier::spherical_type(g),
        coherent: classifier::coherence(g).coherent,
        irreducible: factors.len() == 1,
        irreducible_factors: factors.iter().map(|f| f.names(g)).collect(),
    }
}

/// Run every applicable section. Precondition failures are recorded under
/// `skipped`; internal self-check failures propagate.
pub fn build_report(g: &LabeledGraph) -> Result<ReportDoc> {
    let classification = classify(g);
    if classification.spherical.pd_crosscheck != classification.spherical.is_spherical {
        return Err(Error::InternalInconsistency(
            "structural sphericity disagrees with the numeric cross-check".to_owned(),
        ));
    }
    let coherence = classifier::coherence(g);
    let mut skipped = Vec::new();
    let mut skip = |section: &str, reason: String| {
        skipped.push(SkippedSection {
            section: section.to_owned(),
            reason,
        });
    };

    let decomposition = match decompose::coherent_decomposition(g) {
        Ok(tree) => {
            let rendered = presentation::render_tree(&tree);
            Some(DecompositionSection { tree, rendered })
        }
        Err(e) if e.category() == ErrorCategory::Precondition => {
            skip("decomposition", e.to_string());
            None
        }
        Err(e) => return Err(e),
    };

    let kernel = if coherence.coherent && !g.is_complete() {
        match g.find_clique_separator()? {
            SeparatorOutcome::Split(split) => {
                let refined = decompose::refine_split(g, &split)?;
                let kernel = decompose::bass_serre_kernel(g, &refined)?;
                Some(SplitSection {
                    g1: refined.g1.names(g),
                    g2: refined.g2.names(g),
                    delta: refined.delta.names(g),
                    kernel,
                })
            }
            SeparatorOutcome::NotSplittable => {
                return Err(Error::InternalInconsistency(
                    "non-complete chordal graph must split".to_owned(),
                ))
            }
        }
    } else {
        let reason = if coherence.coherent {
            "a complete graph does not split as a proper amalgam".to_owned()
        } else {
            format!("{coherence}")
        };
        skip("kernel", reason);
        None
    };

    let normal_subgroup = match decompose::normal_subgroup_report(g, None) {
        Ok(report) => Some(report),
        Err(e) if e.category() == ErrorCategory::Precondition => {
            skip("normal_subgroup", e.to_string());
            None
        }
        Err(e) => return Err(e),
    };

    let evenfc = if classifier::is_even_fc(g) {
        let mut centralizers = Vec::new();
        for v in g.vertex_names() {
            centralizers.push(evenfc::vertex_centralizer(g, v)?);
        }
        Some(EvenFcSection {
            centralizers,
            acyl: evenfc::acyl_report(g, None)?,
        })
    } else {
        skip(
            "evenfc",
            "requires even FC-type (even labels, two 2s in every triangle)".to_owned(),
        );
        None
    };

    Ok(ReportDoc {
        graph: g.clone(),
        presentation: GroupPresentation::from_graph(g, false).text(),
        classification,
        derived_subgroup: classifier::derived_subgroup_free(g),
        abelianization: abelianize::abelianization(g),
        coherence,
        decomposition,
        kernel,
        normal_subgroup,
        evenfc,
        skipped,
    })
}

fn fmt_set(names: &[String]) -> String {
    format!("{{{}}}", names.join(", "))
}

pub fn render_classify_text(c: &ClassifySummary) -> String {
    let mut out = String::new();
    out.push_str(&format!("even: {}\n", c.even));
    out.push_str(&format!("fc: {}\n", c.fc));
    out.push_str(&format!("even-fc: {}\n", c.even_fc));
    out.push_str(&format!("spherical: {}\n", c.spherical.summary()));
    out.push_str(&format!("coherent: {}\n", c.coherent));
    out.push_str(&format!("irreducible: {}\n", c.irreducible));
    let blocks: Vec<String> = c.irreducible_factors.iter().map(|f| fmt_set(f)).collect();
    out.push_str(&format!("factors: {}\n", blocks.join(" x ")));
    out
}

pub fn render_report_text(r: &ReportDoc) -> String {
    let mut out = String::new();
    out.push_str(&format!("presentation: {}\n\n", r.presentation));
    out.push_str("[classification]\n");
    out.push_str(&render_classify_text(&r.classification));
    out.push_str(&format!("\n[coherence]\n{}\n", r.coherence));
    out.push_str(&format!(
        "derived subgroup: {}\n",
        match (r.derived_subgroup.free, r.derived_subgroup.trivial) {
            (_, true) => "trivial (the group is abelian)",
            (true, false) => "free",
            (false, false) => "not free",
        }
    ));
    out.push_str(&format!(
        "\n[abelianization]\nrank {}\n",
        r.abelianization.rank
    ));
    let classes: Vec<String> = r
        .abelianization
        .classes()
        .iter()
        .map(|(v, c)| format!("{v} -> {c}"))
        .collect();
    out.push_str(&format!("classes: {}\n", classes.join(", ")));
    if let Some(d) = &r.decomposition {
        out.push_str(&format!("\n[decomposition]\n{}\n", d.rendered));
    }
    if let Some(k) = &r.kernel {
        out.push_str(&format!(
            "\n[kernel]\nsplit: g1 = {}, g2 = {}, delta = {}\n",
            fmt_set(&k.g1),
            fmt_set(&k.g2),
            fmt_set(&k.delta)
        ));
        if k.kernel.s.is_empty() {
            out.push_str("kernel of the tree action: trivial\n");
        } else {
            out.push_str(&format!(
                "kernel of the tree action: A_{} (free abelian direct factor; complement {})\n",
                fmt_set(&k.kernel.s),
                fmt_set(&k.kernel.complement)
            ));
        }
    }
    if let Some(nsr) = &r.normal_subgroup {
        out.push_str(&format!(
            "\n[normal subgroups]\nfor any non-trivial finitely generated normal subgroup N:\n- {}\n- {}\n",
            nsr.case_quotient, nsr.case_kernel
        ));
    }
    if let Some(e) = &r.evenfc {
        out.push_str("\n[even FC calculus]\n");
        for c in &e.centralizers {
            let gens: Vec<String> = c
                .generators
                .iter()
                .map(|g| {
                    if g.name == g.word.to_string() {
                        g.name.clone()
                    } else {
                        format!("{} = {}", g.name, g.word)
                    }
                })
                .collect();
            out.push_str(&format!(
                "C({}) = <{}> x L; generators: {}\n",
                c.actor,
                c.actor,
                gens.join(", ")
            ));
        }
        out.push_str(&format!("acyl: {}\n", e.acyl.overall));
        for f in &e.acyl.factors {
            out.push_str(&format!("  {}: {}\n", fmt_set(&f.vertices), f.verdict));
        }
    }
    if !r.skipped.is_empty() {
        out.push_str("\n[skipped]\n");
        for s in &r.skipped {
            out.push_str(&format!("{}: {}\n", s.section, s.reason));
        }
    }
    out
}
