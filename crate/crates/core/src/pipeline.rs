//! End-to-end analysis of one surface: orbit, Veech group, homology, automorphisms, monodromy,
//! isotypic decomposition and the Zariski-closure dimension sandwich.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::affine::{AffineContext, AffineElement, AutMatrices};
use crate::aut::{automorphisms, AutGroup, HomRep};
use crate::catalog::{self, named_basis, NamedBasis};
use crate::decomp::{isotypic_decomposition, myz_upper_bound, IsotypicReport, UpperBound};
use crate::error::{Error, Result};
use crate::homology::{format_chain, holonomy, ChainVector, HomologyBasis};
use crate::lie::{conjugation_span, find_unipotents, unipotent_log, Generator, LieSpan, SpanOptions, Verdict};
use crate::linalg::{fmt_q, Matrix, Q};
use num::Zero;
use crate::orbit::{orbit, short_generators, veech_generators, OrbitGraph, DEFAULT_ORBIT_CAP};
use crate::origami::{Origami, SurfaceFile};
use crate::sl2z::GroupWord;

/// Which homology basis to report matrices in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BasisMode {
    /// Straight curves and combinations named after the catalog entry.
    Paper,
    /// A tree-cotree integral basis and an integral zero-holonomy basis.
    #[default]
    Auto,
}

impl FromStr for BasisMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(BasisMode::Paper),
            "auto" => Ok(BasisMode::Auto),
            _ => Err(Error::Input(format!("unknown basis mode {s:?} (expected paper or auto)"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    /// Longest conjugating word for the Lie span.
    pub max_word_len: usize,
    /// Longest monodromy word searched for unipotents.
    pub unipotent_word_len: usize,
    /// Longest SL(2,Z) word tried when picking short Veech generators.
    pub generator_word_len: usize,
    pub orbit_cap: usize,
    pub basis: BasisMode,
    pub brackets: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_word_len: 8,
            unipotent_word_len: 3,
            generator_word_len: 6,
            orbit_cap: DEFAULT_ORBIT_CAP,
            basis: BasisMode::Auto,
            brackets: true,
        }
    }
}

/// The homology bases everything is expressed in.
#[derive(Clone, Debug)]
pub struct Bases {
    pub full: Vec<ChainVector>,
    pub full_names: Vec<String>,
    pub zero: Vec<ChainVector>,
    pub zero_names: Vec<String>,
}

impl Bases {
    pub fn auto(hb: &HomologyBasis) -> Bases {
        let full = hb.cycles.clone();
        let zero = hb.zero_holonomy_basis();
        let n = hb.n();
        Bases {
            full_names: full.iter().map(|c| format_chain(c, n)).collect(),
            zero_names: zero.iter().map(|c| format_chain(c, n)).collect(),
            full,
            zero,
        }
    }

    pub fn named(o: &Origami, nb: &NamedBasis) -> Bases {
        Bases {
            full: nb.cycles(o),
            full_names: nb.curve_names(),
            zero: nb.zero_holonomy_cycles(o),
            zero_names: nb.zero_holonomy_names(),
        }
    }

    pub fn for_mode(hb: &HomologyBasis, name: Option<&str>, mode: BasisMode) -> Result<Bases> {
        match mode {
            BasisMode::Auto => Ok(Bases::auto(hb)),
            BasisMode::Paper => {
                let name = name.ok_or_else(|| Error::NoNamedBasis("surface read from file".into()))?;
                Ok(Bases::named(hb.origami(), &named_basis(name)?))
            }
        }
    }
}

pub struct VeechStage {
    pub orbit: OrbitGraph,
    pub schreier: Vec<GroupWord>,
    pub short: Vec<GroupWord>,
}

pub fn veech_stage(o: &Origami, cfg: &RunConfig) -> Result<VeechStage> {
    let orbit = orbit(o, cfg.orbit_cap)?;
    let schreier = veech_generators(&orbit);
    let short = short_generators(&orbit, cfg.generator_word_len)?;
    Ok(VeechStage { orbit, schreier, short })
}

pub struct HomologyStage {
    pub hb: HomologyBasis,
    pub bases: Bases,
    pub omega: Matrix,
    pub omega_zero: Matrix,
    /// `2 × 2g` holonomy of the full basis.
    pub holonomy: Matrix,
}

pub fn homology_stage(o: &Origami, name: Option<&str>, cfg: &RunConfig) -> Result<HomologyStage> {
    let hb = HomologyBasis::new(o);
    let bases = Bases::for_mode(&hb, name, cfg.basis)?;
    let omega = hb.intersection_form(&bases.full)?;
    let omega_zero = hb.intersection_form(&bases.zero)?;
    let holonomy = holonomy_matrix(&bases.full, o.n());
    Ok(HomologyStage { hb, bases, omega, omega_zero, holonomy })
}

pub fn holonomy_matrix(basis: &[ChainVector], n: usize) -> Matrix {
    let cols: Vec<Vec<Q>> = basis
        .iter()
        .map(|c| {
            let (x, y) = holonomy(c, n);
            vec![x, y]
        })
        .collect();
    Matrix::from_columns(&cols, 2)
}

pub struct AutStage {
    pub group: AutGroup,
    pub rep: HomRep,
    pub rep_zero: HomRep,
}

pub fn aut_stage(ctx: &AffineContext) -> Result<AutStage> {
    let group = automorphisms(ctx.origami());
    let mats = ctx.aut_matrices()?;
    let generators: Vec<usize> = group.generators.iter().map(|g| group.index_of(g).expect("generator in group")).collect();
    let rep = |pick: fn(&AutMatrices) -> &Matrix, dim: usize| HomRep {
        elements: group.elements.clone(),
        matrices: mats.iter().map(|m| pick(m).clone()).collect(),
        generators: generators.clone(),
        dim,
    };
    let rep_full = rep(|m| &m.full, ctx.full_basis.len());
    let rep_zero = rep(|m| &m.zero, ctx.zero_basis.len());
    Ok(AutStage { group, rep: rep_full, rep_zero })
}

pub fn affine_context(h: &HomologyStage) -> AffineContext {
    AffineContext::new(h.hb.clone(), h.bases.full.clone(), h.bases.zero.clone())
}

pub fn monodromy_stage(ctx: &AffineContext, words: &[GroupWord]) -> Result<Vec<AffineElement>> {
    ctx.monodromy_generators(words)
}

pub struct DecompStage {
    pub report: IsotypicReport,
    pub bound: Result<UpperBound>,
}

pub fn decompose_stage(h: &HomologyStage, a: &AutStage) -> Result<DecompStage> {
    let report = isotypic_decomposition(&a.rep, &a.group.conjugacy_classes(), &h.holonomy, Some(&h.omega))?;
    let bound = myz_upper_bound(&report);
    Ok(DecompStage { report, bound })
}

pub struct ZariskiStage {
    pub unipotents: Vec<(String, Matrix)>,
    pub span: LieSpan,
    pub verdict: Verdict,
}

/// Generators of the monodromy group on the zero-holonomy basis, named by their Veech words,
/// followed by the automorphism generators.
pub fn monodromy_group_generators(elements: &[AffineElement], a: &AutStage) -> Result<Vec<Generator>> {
    let mut gens: Vec<Generator> = elements
        .iter()
        .map(|e| Generator::new(format!("α({})", e.word), e.matrix_zero.clone()))
        .collect::<Result<_>>()?;
    for (k, &i) in a.rep_zero.generators.iter().enumerate() {
        gens.push(Generator::new(format!("ρ(π{})", k + 1), a.rep_zero.matrices[i].clone())?);
    }
    Ok(gens)
}

pub fn zariski_stage(elements: &[AffineElement], a: &AutStage, bound: &UpperBound, cfg: &RunConfig) -> Result<ZariskiStage> {
    let dim = a.rep_zero.dim;
    let all = monodromy_group_generators(elements, a)?;
    let affine_only = &all[..elements.len()];
    let unipotents = find_unipotents(affine_only, dim, cfg.unipotent_word_len);
    let seeds = unipotents
        .iter()
        .map(|(w, m)| Ok((format!("log {w}"), unipotent_log(m)?)))
        .collect::<Result<Vec<_>>>()?;
    let opts = SpanOptions { max_word_len: cfg.max_word_len, brackets: cfg.brackets, target: Some(bound.dim) };
    let span = conjugation_span(&all, &seeds, dim, opts);
    let verdict = Verdict::new(span.dimension(), bound);
    Ok(ZariskiStage { unipotents, span, verdict })
}

/// Results of every stage for one surface.
pub struct Analysis {
    pub name: Option<String>,
    pub origami: Origami,
    pub config: RunConfig,
    pub veech: VeechStage,
    pub homology: HomologyStage,
    pub aut: AutStage,
    pub context: AffineContext,
    pub monodromy: Vec<AffineElement>,
    pub decomposition: DecompStage,
    pub zariski: Option<ZariskiStage>,
}

impl Analysis {
    pub fn run(o: &Origami, name: Option<&str>, cfg: &RunConfig) -> Result<Analysis> {
        let veech = veech_stage(o, cfg)?;
        let homology = homology_stage(o, name, cfg)?;
        let context = affine_context(&homology);
        let aut = aut_stage(&context)?;
        let monodromy = monodromy_stage(&context, &veech.short)?;
        let decomposition = decompose_stage(&homology, &aut)?;
        let zariski = match &decomposition.bound {
            Ok(b) => Some(zariski_stage(&monodromy, &aut, b, cfg)?),
            Err(_) => None,
        };
        Ok(Analysis {
            name: name.map(str::to_string),
            origami: o.clone(),
            config: cfg.clone(),
            veech,
            homology,
            aut,
            context,
            monodromy,
            decomposition,
            zariski,
        })
    }

    pub fn verdict(&self) -> Result<&Verdict> {
        match (&self.zariski, &self.decomposition.bound) {
            (Some(z), _) => Ok(&z.verdict),
            (None, Err(e)) => Err(e.clone()),
            (None, Ok(_)) => unreachable!("zariski stage runs whenever the bound exists"),
        }
    }
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::from(m.to_strings())
}

fn vector_json(v: &[Q]) -> Value {
    Value::from(v.iter().map(fmt_q).collect::<Vec<_>>())
}

fn words_json(ws: &[GroupWord]) -> Value {
    Value::from(ws.iter().map(ToString::to_string).collect::<Vec<_>>())
}

pub fn surface_json(o: &Origami) -> Value {
    json!({
        "n": o.n(),
        "sigma_h": o.sigma_h().to_string(),
        "sigma_v": o.sigma_v().to_string(),
        "genus": o.genus(),
        "singularities": o.singularity_profile(),
    })
}

pub fn orbit_json(v: &VeechStage) -> Value {
    json!({
        "size": v.orbit.size(),
        "tree_words": words_json(&v.orbit.tree_words),
    })
}

pub fn veech_json(v: &VeechStage) -> Value {
    json!({
        "index": v.orbit.size(),
        "words": words_json(&v.short),
        "matrices": v.short.iter().map(|w| w.matrix().0.to_vec()).collect::<Vec<_>>(),
        "schreier_words": words_json(&v.schreier),
    })
}

/// A chain as a map from edge names (`h3`, `v12`) to nonzero coefficients.
pub fn chain_json(c: &[Q], n: usize) -> Value {
    let map: serde_json::Map<String, Value> = c
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| {
            let edge = if i < n { format!("h{}", i + 1) } else { format!("v{}", i - n + 1) };
            (edge, Value::from(fmt_q(x)))
        })
        .collect();
    Value::Object(map)
}

pub fn homology_json(h: &HomologyStage) -> Value {
    let n = h.hb.n();
    let cycles = |names: &[String], basis: &[ChainVector]| -> Vec<Value> {
        names
            .iter()
            .zip(basis)
            .map(|(name, c)| {
                let (x, y) = holonomy(c, n);
                json!({"name": name, "chain": chain_json(c, n), "holonomy": [fmt_q(&x), fmt_q(&y)]})
            })
            .collect()
    };
    json!({
        "genus": h.hb.genus(),
        "rank": h.hb.rank(),
        "basis": cycles(&h.bases.full_names, &h.bases.full),
        "zero_holonomy_basis": cycles(&h.bases.zero_names, &h.bases.zero),
        "intersection_form": matrix_json(&h.omega),
        "zero_holonomy_intersection_form": matrix_json(&h.omega_zero),
    })
}

pub fn aut_json(a: &AutStage) -> Value {
    json!({
        "order": a.group.order(),
        "abelian": a.group.is_abelian(),
        "label": a.group.label(),
        "generators": a.group.generators.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "generator_matrices": a.rep.generators.iter().map(|&i| matrix_json(&a.rep.matrices[i])).collect::<Vec<_>>(),
    })
}

pub fn monodromy_json(h: &HomologyStage, gens: &[AffineElement]) -> Value {
    json!({
        "basis": h.bases.zero_names,
        "generators": gens.iter().map(|e| json!({
            "word": e.word.to_string(),
            "relabeling": e.relabeling.to_string(),
            "matrix": matrix_json(&e.matrix_zero),
            "matrix_full": matrix_json(&e.matrix_full),
        })).collect::<Vec<_>>(),
    })
}

pub fn decompose_json(d: &DecompStage) -> Value {
    let comps: Vec<Value> = d
        .report
        .components
        .iter()
        .map(|c| {
            json!({
                "dimension": c.dim(),
                "multiplicity": c.multiplicity,
                "irreducible_dimension": c.irreducible_dim,
                "centralizer_dimension": c.centralizer_dim,
                "block_commutant_dimension": c.block_commutant_dim,
                "algebra": c.algebra.to_string(),
                "tautological": c.is_tautological(),
                "copies_equivalent": c.copies_equivalent,
                "class_sum_eigenvalues": vector_json(&c.class_sum_eigenvalues),
                "copies": c.copies.iter().map(|copy| copy.iter().map(|v| vector_json(v)).collect::<Vec<_>>()).collect::<Vec<_>>(),
            })
        })
        .collect();
    let bound = match &d.bound {
        Ok(b) => json!({"dimension": b.dim, "group": b.group_name, "factors": b.factors}),
        Err(e) => json!({"error": e.to_string()}),
    };
    json!({
        "components": comps,
        "total_dimension": d.report.total_dim,
        "non_orthogonal_pairs": d.report.non_orthogonal,
        "upper_bound": bound,
    })
}

pub fn zariski_json(z: &ZariskiStage) -> Value {
    json!({
        "lower_dim": z.verdict.lower_dim,
        "upper_dim": z.verdict.upper_dim,
        "group_name": z.verdict.group_name,
        "certified": z.verdict.certified,
        "unipotents": z.unipotents.iter().map(|(w, _)| w.clone()).collect::<Vec<_>>(),
        "witnesses": z.span.witnesses.iter().map(|w| w.description.clone()).collect::<Vec<_>>(),
    })
}

impl Analysis {
    pub fn to_json(&self) -> Value {
        json!({
            "surface": surface_json(&self.origami),
            "name": self.name,
            "orbit": orbit_json(&self.veech),
            "veech": veech_json(&self.veech),
            "homology": homology_json(&self.homology),
            "aut": aut_json(&self.aut),
            "monodromy": monodromy_json(&self.homology, &self.monodromy),
            "decompose": decompose_json(&self.decomposition),
            "zariski": self.zariski.as_ref().map(zariski_json),
        })
    }
}

/// One subcommand of the command-line tool.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    Orbit,
    Veech,
    Homology,
    Aut,
    Monodromy,
    Decompose,
    Zariski,
    Pipeline,
}

/// Resolves a catalog name or a JSON surface file.
pub fn load_surface(name: Option<&str>, file: Option<&Path>) -> Result<(Origami, Option<String>)> {
    match (name, file) {
        (Some(_), Some(_)) => Err(Error::Input("give either a catalog name or --file, not both".into())),
        (None, None) => Err(Error::Input("no surface given (catalog name or --file <path>)".into())),
        (None, Some(path)) => Ok((read_surface_file(path)?, None)),
        (Some(arg), None) => {
            if catalog::NAMES.contains(&arg) {
                return Ok((catalog::catalog(arg)?, Some(arg.to_string())));
            }
            let path = Path::new(arg);
            if path.extension().is_some_and(|e| e == "json") || path.is_file() {
                Ok((read_surface_file(path)?, None))
            } else {
                Err(Error::UnknownName(arg.to_string()))
            }
        }
    }
}

fn read_surface_file(path: &Path) -> Result<Origami> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    SurfaceFile::from_json(&text)
}

/// The outcome of one subcommand: its JSON report and, for the last stages, the verdict.
pub struct StageReport {
    pub json: Value,
    pub verdict: Option<Verdict>,
}

impl StageReport {
    /// One closing line summarizing the verdict.
    pub fn summary(&self) -> Option<String> {
        self.verdict.as_ref().map(|v| {
            if v.upper_dim == 0 && v.certified {
                "trivial monodromy group".to_string()
            } else if v.certified {
                format!("{}, certified", v.group_name)
            } else {
                format!("{}, not certified (lower {}, upper {})", v.group_name, v.lower_dim, v.upper_dim)
            }
        })
    }

    /// Success unless the verdict is missing certification.
    pub fn status(&self) -> Result<()> {
        self.verdict.as_ref().map_or(Ok(()), Verdict::check)
    }
}

pub fn run_stage(stage: Stage, o: &Origami, name: Option<&str>, cfg: &RunConfig) -> Result<StageReport> {
    let json = match stage {
        Stage::Orbit => {
            let g = orbit(o, cfg.orbit_cap)?;
            json!({"size": g.size(), "tree_words": words_json(&g.tree_words)})
        }
        Stage::Veech => veech_json(&veech_stage(o, cfg)?),
        Stage::Homology => homology_json(&homology_stage(o, name, cfg)?),
        Stage::Aut => {
            let h = homology_stage(o, name, cfg)?;
            let mut v = aut_json(&aut_stage(&affine_context(&h))?);
            v["basis"] = Value::from(h.bases.full_names.clone());
            v
        }
        Stage::Monodromy => {
            let v = veech_stage(o, cfg)?;
            let h = homology_stage(o, name, cfg)?;
            monodromy_json(&h, &monodromy_stage(&affine_context(&h), &v.short)?)
        }
        Stage::Decompose => {
            let h = homology_stage(o, name, cfg)?;
            let a = aut_stage(&affine_context(&h))?;
            decompose_json(&decompose_stage(&h, &a)?)
        }
        Stage::Zariski | Stage::Pipeline => {
            let a = Analysis::run(o, name, cfg)?;
            let verdict = a.verdict()?.clone();
            let json = if stage == Stage::Pipeline {
                a.to_json()
            } else {
                zariski_json(a.zariski.as_ref().expect("verdict exists"))
            };
            return Ok(StageReport { json, verdict: Some(verdict) });
        }
    };
    Ok(StageReport { json, verdict: None })
}

/// Renders a JSON report as indented `key: value` lines, matrices row by row.
pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    write_text(&mut out, v, 0, None);
    out
}

fn is_matrix(v: &Value) -> bool {
    matches!(v, Value::Array(rows) if !rows.is_empty() && rows.iter().all(|r| matches!(r, Value::Array(xs) if xs.iter().all(|x| !x.is_array() && !x.is_object()))))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn write_text(out: &mut String, v: &Value, indent: usize, key: Option<&str>) {
    let pad = "  ".repeat(indent);
    let label = key.map(|k| format!("{k}: ")).unwrap_or_default();
    match v {
        Value::Object(map) => {
            if key.is_some() {
                let _ = writeln!(out, "{pad}{}", label.trim_end());
            }
            let inner = if key.is_some() { indent + 1 } else { indent };
            for (k, x) in map {
                write_text(out, x, inner, Some(k));
            }
        }
        Value::Array(xs) if is_matrix(v) => {
            let _ = writeln!(out, "{pad}{}", label.trim_end());
            let cells: Vec<Vec<String>> = xs.iter().map(|r| r.as_array().unwrap().iter().map(scalar).collect()).collect();
            let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
            for row in cells {
                let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                let _ = writeln!(out, "{pad}  [ {} ]", line.join(" "));
            }
        }
        Value::Array(xs) if xs.iter().all(|x| !x.is_array() && !x.is_object()) => {
            let _ = writeln!(out, "{pad}{label}{}", xs.iter().map(scalar).collect::<Vec<_>>().join(", "));
        }
        Value::Array(xs) => {
            let _ = writeln!(out, "{pad}{}", label.trim_end());
            for (i, x) in xs.iter().enumerate() {
                write_text(out, x, indent + 1, Some(&format!("[{i}]")));
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{label}{}", scalar(other));
        }
    }
}
