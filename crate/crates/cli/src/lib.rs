//! Command-line surface for `aspec`: every subcommand prints one JSON value.

use std::fs;
use std::path::Path;
use std::sync::Arc;

use aspec_core::completion::{complete, default_order, local_function_ring, verify_family_props, LocalFunctionRing};
use aspec_core::hull::hull;
use aspec_core::json::{hull_json, matrix_rows, AlgebraJson, HullInput, ModuleJson};
use aspec_core::module::{ext1, simple_modules};
use aspec_core::pointed::{hausdorff_kernel_bounded, tangent_algebra, truncated_local_quotient};
use aspec_core::poly::Presentation;
use aspec_core::sheaf::{compare_stalks, direct_section, sheafify, structure_presheaf, Section, Sections, Variant};
use aspec_core::topology::{generate_topology, is_irreducible, FiniteTopology, PointSet};
use aspec_core::verify::verify_paper;
use aspec_core::{fixtures, Algebra, AspecError, FixtureCatalog, ModuleRep, Scalar, Vector};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "aspec", version, about = "Completions, local-function rings and aSpec sheaves of finite-dimensional algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check associativity and the unit law.
    Validate(AlgebraArgs),
    /// Jacobson radical and its nilpotency index.
    Radical(AlgebraArgs),
    /// One simple module per Wedderburn block.
    Simples(AlgebraArgs),
    /// Ext^1 dimensions and cocycles between the chosen modules.
    Ext(FamilyArgs),
    /// Tangent algebra of the chosen family.
    Tangent(FamilyArgs),
    /// Hull of the chosen family up to the given order.
    Hull(FamilyArgs),
    /// Endomorphism completion and its family checks.
    Completion(FamilyArgs),
    /// Local-function ring inside the completion.
    Localring(FamilyArgs),
    /// Truncated local ring of a commutative presentation at a point.
    Localize(LocalizeArgs),
    /// Points, sub-basis sets and opens of aSpec.
    Topology(TopologyArgs),
    /// Structure presheaf, a sheafification, stalks and findings.
    Sheaf(SheafArgs),
    /// Presheaf, sheaf and direct stalks at a set of points.
    Stalk(StalkArgs),
    /// Run every claim check over the fixture catalog.
    VerifyPaper(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    /// Write the JSON here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<String>,
    /// Exit 1 when the result carries findings.
    #[arg(long, global = true)]
    pub strict: bool,
}

#[derive(Args, Debug)]
pub struct AlgebraArgs {
    /// Catalog name (FIX-UT2, ...) or path to an algebra JSON file.
    #[arg(long)]
    pub algebra: String,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    #[arg(long)]
    pub algebra: Option<String>,
    /// `all`, comma-separated simple labels (S1,S2), or a module JSON file.
    #[arg(long, default_value = "all")]
    pub modules: String,
    #[arg(long)]
    pub order: Option<usize>,
    /// Hull file written by `aspec hull`; replaces --algebra/--modules/--order.
    #[arg(long)]
    pub hull: Option<String>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct LocalizeArgs {
    /// Catalog name (affine-line, dual, parabola, axes, fat2) or JSON file.
    #[arg(long)]
    pub presentation: String,
    /// Comma-separated coordinates.
    #[arg(long)]
    pub point: String,
    #[arg(long)]
    pub order: usize,
    /// Also compute the bounded Hausdorff kernel in degrees up to this.
    #[arg(long)]
    pub degree: Option<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct TopologyArgs {
    #[arg(long)]
    pub algebra: String,
    /// Comma-separated elements such as `e11,e11+e22,2*x-1`.
    #[arg(long)]
    pub subbasis: Option<String>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct SheafArgs {
    #[arg(long)]
    pub algebra: String,
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long, default_value = "standard")]
    pub variant: String,
    #[arg(long)]
    pub subbasis: Option<String>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct StalkArgs {
    #[arg(long)]
    pub algebra: String,
    /// Comma-separated point labels (S1,S2).
    #[arg(long)]
    pub points: String,
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long, default_value = "standard")]
    pub variant: String,
    #[arg(long)]
    pub subbasis: Option<String>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub order: Option<usize>,
    /// Print the one-line-per-row text rendering instead of JSON.
    #[arg(long)]
    pub text: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug)]
pub enum CliError {
    Domain(AspecError),
    Input(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(AspecError::Parse(_)) | CliError::Input(_) => 2,
            CliError::Domain(_) => 1,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            CliError::Domain(e) => json!({ "error": error_kind(e), "message": e.to_string() }),
            CliError::Input(msg) => json!({ "error": "Input", "message": msg }),
        }
    }
}

impl From<AspecError> for CliError {
    fn from(e: AspecError) -> Self {
        CliError::Domain(e)
    }
}

fn error_kind(e: &AspecError) -> &'static str {
    match e {
        AspecError::NotAssociative(..) => "NotAssociative",
        AspecError::BadUnit(_) => "BadUnit",
        AspecError::Malformed(_) => "Malformed",
        AspecError::NotAnIdeal => "NotAnIdeal",
        AspecError::NotSplit(_) => "NotSplit",
        AspecError::NotSimple(_) => "NotSimple",
        AspecError::DuplicateModule(..) => "DuplicateModule",
        AspecError::BadModule(_) => "BadModule",
        AspecError::BadMorphism(_) => "BadMorphism",
        AspecError::PointNotOnVariety(_) => "PointNotOnVariety",
        AspecError::IdempotentsNotPreserved => "IdempotentsNotPreserved",
        AspecError::ContractedNotSimple(_) => "ContractedNotSimple",
        AspecError::KernelObstruction(_) => "KernelObstruction",
        AspecError::DimensionMismatch(_) => "DimensionMismatch",
        AspecError::Parse(_) => "ParseError",
    }
}

type CliResult<T> = Result<T, CliError>;

/// A command's JSON together with whether it carries findings.
pub struct Outcome {
    pub value: Value,
    pub text: Option<String>,
    pub findings: bool,
}

fn plain(value: Value) -> Outcome {
    Outcome {
        value,
        text: None,
        findings: false,
    }
}

fn read_json(path: &str) -> CliResult<Value> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{path}: {e}")))
}

pub fn load_algebra(spec: &str) -> CliResult<Algebra> {
    if let Some(a) = fixtures::by_name(spec) {
        return Ok(a);
    }
    if !Path::new(spec).exists() {
        return Err(CliError::Input(format!("{spec:?} is neither a catalog name nor a file")));
    }
    let parsed: AlgebraJson = serde_json::from_value(read_json(spec)?)
        .map_err(|e| CliError::Input(format!("{spec}: {e}")))?;
    let stem = Path::new(spec).file_stem().and_then(|s| s.to_str()).unwrap_or("A");
    Ok(parsed.to_algebra(stem)?)
}

fn load_modules(a: &Arc<Algebra>, spec: &str) -> CliResult<Vec<ModuleRep>> {
    let simples = || simple_modules(a).map_err(CliError::from);
    if spec == "all" {
        return simples();
    }
    if Path::new(spec).exists() {
        let v = read_json(spec)?;
        let list: Vec<ModuleJson> = match v {
            Value::Array(_) => serde_json::from_value(v),
            other => serde_json::from_value(other).map(|m| vec![m]),
        }
        .map_err(|e| CliError::Input(format!("{spec}: {e}")))?;
        return list.iter().map(|m| m.to_module(a).map_err(CliError::from)).collect();
    }
    let all = simples()?;
    spec.split(',')
        .map(|label| {
            all.iter()
                .find(|m| m.label() == label.trim())
                .cloned()
                .ok_or_else(|| CliError::Input(format!("no simple module labelled {label:?}")))
        })
        .collect()
}

fn load_presentation(spec: &str) -> CliResult<Presentation> {
    if let Some(p) = FixtureCatalog::standard().presentation(spec) {
        return Ok(p.clone());
    }
    serde_json::from_value(read_json(spec)?).map_err(|e| CliError::Input(format!("{spec}: {e}")))
}

fn parse_scalar(s: &str) -> CliResult<Scalar> {
    s.trim().parse().map_err(|_| CliError::Input(format!("bad scalar {s:?}")))
}

/// Parses `2*e11 - e12 + 1/2*e22` over the basis labels of `a`.
pub fn parse_element(a: &Algebra, text: &str) -> CliResult<Vector> {
    let mut v = a.zero();
    let normalized = text.replace('-', "+-");
    for term in normalized.split('+').map(str::trim).filter(|t| !t.is_empty()) {
        let (neg, body) = match term.strip_prefix('-') {
            Some(rest) => (true, rest.trim()),
            None => (false, term),
        };
        let (coeff, label) = match body.rsplit_once('*') {
            Some((c, l)) => (parse_scalar(c)?, l.trim()),
            None => (Scalar::one(), body),
        };
        let k = a
            .label_index(label)
            .ok_or_else(|| CliError::Input(format!("unknown basis label {label:?}")))?;
        let c = if neg { -coeff } else { coeff };
        v[k] += &c;
    }
    Ok(v)
}

fn subbasis(a: &Algebra, spec: &Option<String>) -> CliResult<Option<Vec<Vector>>> {
    spec.as_ref()
        .map(|s| s.split(',').map(|f| parse_element(a, f)).collect())
        .transpose()
}

fn family_inputs(args: &FamilyArgs) -> CliResult<(Arc<Algebra>, Vec<ModuleRep>, usize)> {
    if let Some(path) = &args.hull {
        let input = HullInput::parse(&read_json(path)?)?;
        let a = Arc::new(input.algebra.to_algebra("A")?);
        let family = input
            .modules
            .iter()
            .map(|m| m.to_module(&a))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok((a, family, input.requested_order));
    }
    let spec = args
        .algebra
        .as_deref()
        .ok_or_else(|| CliError::Input("either --algebra or --hull is required".into()))?;
    let a = Arc::new(load_algebra(spec)?);
    let family = load_modules(&a, &args.modules)?;
    let order = args.order.unwrap_or_else(|| default_order(&a));
    Ok((a, family, order))
}

fn cmd_validate(args: &AlgebraArgs) -> CliResult<Outcome> {
    let a = load_algebra(&args.algebra)?;
    a.validate()?;
    Ok(plain(json!({ "algebra": a.name(), "dim": a.dim(), "valid": true })))
}

fn cmd_radical(args: &AlgebraArgs) -> CliResult<Outcome> {
    let a = load_algebra(&args.algebra)?;
    a.validate()?;
    let rad = aspec_core::algebra::jacobson_radical(&a);
    Ok(plain(json!({
        "algebra": a.name(),
        "dim": rad.dim(),
        "basis": rad.basis(),
        "nilpotency_index": rad.nilpotency_index(&a),
    })))
}

fn cmd_simples(args: &AlgebraArgs) -> CliResult<Outcome> {
    let a = Arc::new(load_algebra(&args.algebra)?);
    a.validate()?;
    let simples = simple_modules(&a)?;
    Ok(plain(json!({
        "algebra": a.name(),
        "count": simples.len(),
        "modules": simples.iter().map(ModuleJson::from).collect::<Vec<_>>(),
    })))
}

fn ext_dims(family: &[ModuleRep]) -> CliResult<Vec<Vec<usize>>> {
    Ok(aspec_core::verify::ext_table(family)?)
}

fn cmd_ext(args: &FamilyArgs) -> CliResult<Outcome> {
    let (a, family, _) = family_inputs(args)?;
    let mut entries = Vec::new();
    for m in &family {
        for n in &family {
            let e = ext1(m, n)?;
            let cocycles: Vec<Value> = e
                .cocycles
                .iter()
                .map(|c| {
                    let per_basis: serde_json::Map<String, Value> = a
                        .labels()
                        .iter()
                        .zip(c)
                        .map(|(l, x)| (l.clone(), json!(matrix_rows(x))))
                        .collect();
                    Value::Object(per_basis)
                })
                .collect();
            entries.push(json!({ "source": m.label(), "target": n.label(), "dim": e.dim, "cocycles": cocycles }));
        }
    }
    Ok(plain(json!({
        "algebra": a.name(),
        "modules": family.iter().map(ModuleRep::label).collect::<Vec<_>>(),
        "table": ext_dims(&family)?,
        "entries": entries,
    })))
}

fn cmd_tangent(args: &FamilyArgs) -> CliResult<Outcome> {
    let (_, family, _) = family_inputs(args)?;
    let table = ext_dims(&family)?;
    let t = tangent_algebra(&table)?;
    Ok(plain(json!({
        "ext_table": table,
        "dim": t.dim(),
        "algebra": AlgebraJson::from(t.carrier.as_ref()),
    })))
}

fn cmd_hull(args: &FamilyArgs) -> CliResult<Outcome> {
    let (a, family, order) = family_inputs(args)?;
    let (h, map) = hull(&a, &family, order)?;
    Ok(plain(hull_json(&a, &family, &h, &map)))
}

fn cmd_completion(args: &FamilyArgs) -> CliResult<Outcome> {
    let (a, family, order) = family_inputs(args)?;
    let c = complete(&a, &family, order)?;
    let props = verify_family_props(&c)?;
    let findings = !(props.complete && props.simples_recovered && props.idempotent);
    Ok(Outcome {
        value: json!({
            "algebra": a.name(),
            "order": c.hull.order,
            "hull_dim": c.hull.dim(),
            "dim": c.carrier().dim(),
            "rho": matrix_rows(&c.rho.matrix),
            "rho_bijective": c.rho.is_bijective(),
            "complete": props.complete,
            "simples_recovered": props.simples_recovered,
            "idempotent": props.idempotent,
        }),
        text: None,
        findings,
    })
}

fn local_ring_json(lf: &LocalFunctionRing) -> Value {
    json!({
        "dim": lf.carrier.dim(),
        "algebra": AlgebraJson::from(lf.carrier.carrier.as_ref()),
        "rho": matrix_rows(&lf.rho.matrix),
        "rho_kernel_dim": lf.kernel.dim(),
        "idempotents": lf.carrier.idempotents,
    })
}

fn cmd_localring(args: &FamilyArgs) -> CliResult<Outcome> {
    let (a, family, order) = family_inputs(args)?;
    let c = complete(&a, &family, order)?;
    let lf = local_function_ring(&c)?;
    let mut v = local_ring_json(&lf);
    v["completion_dim"] = json!(c.carrier().dim());
    Ok(plain(v))
}

fn cmd_localize(args: &LocalizeArgs) -> CliResult<Outcome> {
    let pres = load_presentation(&args.presentation)?;
    let point = args.point.split(',').map(parse_scalar).collect::<CliResult<Vec<_>>>()?;
    let local = truncated_local_quotient(&pres, &point, args.order)?;
    let mut v = json!({
        "presentation": pres,
        "point": point,
        "order": args.order,
        "dim": local.carrier.dim(),
        "algebra": AlgebraJson::from(&local.carrier),
    });
    if let Some(d) = args.degree {
        let slice = hausdorff_kernel_bounded(&pres, &point, d, args.order)?;
        let elements: Vec<String> = slice.elements().iter().map(|p| pres.render(p)).collect();
        v["hausdorff_kernel"] = json!({ "degree": d, "dim": slice.dim(), "elements": elements });
    }
    Ok(plain(v))
}

fn topology_for(a: &Arc<Algebra>, spec: &Option<String>) -> CliResult<FiniteTopology> {
    a.validate()?;
    let ps = PointSet::simples(a)?;
    let fs = subbasis(a, spec)?;
    Ok(generate_topology(&ps, fs.as_deref()))
}

fn topology_json(t: &FiniteTopology) -> Value {
    let ps = &t.points;
    let points: Vec<Value> = ps
        .points
        .iter()
        .map(|p| json!({ "label": p.label, "dim": p.module.dim(), "simple": p.simple, "witness": p.witness }))
        .collect();
    let subbasis: Vec<Value> = t
        .subbasis
        .iter()
        .map(|(f, m)| json!({ "element": f, "set": ps.labels(*m) }))
        .collect();
    json!({
        "points": points,
        "subbasis": subbasis,
        "opens": t.opens.iter().map(|&u| ps.labels(u)).collect::<Vec<_>>(),
        "irreducible": is_irreducible(t),
    })
}

fn cmd_topology(args: &TopologyArgs) -> CliResult<Outcome> {
    let a = Arc::new(load_algebra(&args.algebra)?);
    let t = topology_for(&a, &args.subbasis)?;
    Ok(plain(topology_json(&t)))
}

fn section_json(t: &FiniteTopology, s: &Section) -> Value {
    json!({
        "open": t.points.labels(s.open),
        "dim": s.dim(),
        "algebra": AlgebraJson::from(s.algebra.as_ref()),
    })
}

fn restrictions_json(data: &Sections) -> Vec<Value> {
    let t = &data.topology;
    data.restrictions
        .iter()
        .filter(|((i, j), _)| i != j)
        .map(|(&(i, j), m)| {
            json!({
                "from": t.points.labels(t.opens[i]),
                "to": t.points.labels(t.opens[j]),
                "matrix": matrix_rows(m),
            })
        })
        .collect()
}

fn cmd_sheaf(args: &SheafArgs) -> CliResult<Outcome> {
    let a = Arc::new(load_algebra(&args.algebra)?);
    let variant: Variant = args.variant.parse()?;
    let t = topology_for(&a, &args.subbasis)?;
    let order = args.order.unwrap_or_else(|| default_order(&a));
    let pre = structure_presheaf(&t, order)?;
    let sheaf = sheafify(&pre, variant)?;
    let stalks = compare_stalks(&t, order)?;
    let mut findings: Vec<String> = pre.findings.clone();
    let pre_axioms = pre.data.check_axioms();
    if !pre_axioms.holds() {
        findings.push("the structure presheaf is not a sheaf".into());
    }
    let axioms = sheaf.data.check_axioms();
    if !axioms.holds() {
        findings.push(format!("the {} sheafification fails the sheaf axioms", args.variant));
    }
    for r in &stalks {
        if !(r.presheaf_agrees && r.standard_agrees && r.paper_limit_agrees) {
            findings.push(format!(
                "stalks at {{{}}} disagree: presheaf {}, standard {}, paper-limit {}, direct {}",
                r.points.join(","),
                r.presheaf_dim,
                r.standard_dim,
                r.paper_limit_dim,
                r.direct_dim
            ));
        }
    }
    let has_findings = !findings.is_empty();
    let value = json!({
        "algebra": a.name(),
        "order": order,
        "variant": variant,
        "topology": topology_json(&t),
        "opens": t.opens.iter().map(|&u| t.points.labels(u)).collect::<Vec<_>>(),
        "presheaf": {
            "section_dims": pre.data.sections.iter().map(Section::dim).collect::<Vec<_>>(),
            "restrictions": restrictions_json(&pre.data),
            "functorial": pre.data.is_functorial(),
            "axioms": pre_axioms,
        },
        "sheaf": {
            "section_dims": sheaf.data.sections.iter().map(Section::dim).collect::<Vec<_>>(),
            "sections": sheaf.data.sections.iter().map(|s| section_json(&t, s)).collect::<Vec<_>>(),
            "restrictions": restrictions_json(&sheaf.data),
            "functorial": sheaf.data.is_functorial(),
            "axioms": axioms,
        },
        "stalks": stalks,
        "findings": findings,
    });
    Ok(Outcome {
        findings: has_findings,
        value,
        text: None,
    })
}

fn cmd_stalk(args: &StalkArgs) -> CliResult<Outcome> {
    let a = Arc::new(load_algebra(&args.algebra)?);
    let variant: Variant = args.variant.parse()?;
    let t = topology_for(&a, &args.subbasis)?;
    let order = args.order.unwrap_or_else(|| default_order(&a));
    let mut pts = 0u64;
    for label in args.points.split(',').map(str::trim) {
        let i = t
            .points
            .points
            .iter()
            .position(|p| p.label == label)
            .ok_or_else(|| CliError::Input(format!("no point labelled {label:?}")))?;
        pts |= 1 << i;
    }
    let pre = structure_presheaf(&t, order)?;
    let sheaf = sheafify(&pre, variant)?;
    let direct = direct_section(&t, pts, order)?;
    let (u, ps) = pre.data.stalk(pts);
    let (_, ss) = sheaf.data.stalk(pts);
    let presheaf_agrees = aspec_core::sheaf::sections_isomorphic(ps, &direct);
    let sheaf_agrees = aspec_core::sheaf::sections_isomorphic(ss, &direct);
    Ok(Outcome {
        value: json!({
            "points": t.points.labels(pts),
            "minimal_open": t.points.labels(u),
            "variant": variant,
            "presheaf_dim": ps.dim(),
            "sheaf_dim": ss.dim(),
            "direct_dim": direct.dim(),
            "presheaf_agrees": presheaf_agrees,
            "sheaf_agrees": sheaf_agrees,
            "direct": section_json(&t, &direct),
        }),
        text: None,
        findings: !(presheaf_agrees && sheaf_agrees),
    })
}

fn cmd_verify(args: &VerifyArgs) -> CliResult<Outcome> {
    let report = verify_paper(args.order);
    let findings = report.findings().next().is_some();
    Ok(Outcome {
        findings,
        text: args.text.then(|| report.render_text()),
        value: report.to_json(),
    })
}

fn output_of(cmd: &Command) -> &Output {
    match cmd {
        Command::Validate(a) | Command::Radical(a) | Command::Simples(a) => &a.output,
        Command::Ext(a) | Command::Tangent(a) | Command::Hull(a) | Command::Completion(a) | Command::Localring(a) => &a.output,
        Command::Localize(a) => &a.output,
        Command::Topology(a) => &a.output,
        Command::Sheaf(a) => &a.output,
        Command::Stalk(a) => &a.output,
        Command::VerifyPaper(a) => &a.output,
    }
}

pub fn execute(cmd: &Command) -> CliResult<Outcome> {
    match cmd {
        Command::Validate(a) => cmd_validate(a),
        Command::Radical(a) => cmd_radical(a),
        Command::Simples(a) => cmd_simples(a),
        Command::Ext(a) => cmd_ext(a),
        Command::Tangent(a) => cmd_tangent(a),
        Command::Hull(a) => cmd_hull(a),
        Command::Completion(a) => cmd_completion(a),
        Command::Localring(a) => cmd_localring(a),
        Command::Localize(a) => cmd_localize(a),
        Command::Topology(a) => cmd_topology(a),
        Command::Sheaf(a) => cmd_sheaf(a),
        Command::Stalk(a) => cmd_stalk(a),
        Command::VerifyPaper(a) => cmd_verify(a),
    }
}

/// Runs a parsed command, writing its JSON (or error JSON) and returning
/// the exit code.
pub fn run(cli: &Cli) -> i32 {
    let output = output_of(&cli.command);
    match execute(&cli.command) {
        Ok(outcome) => {
            let body = match &outcome.text {
                Some(t) => t.clone(),
                None => format!("{}\n", serde_json::to_string_pretty(&outcome.value).expect("JSON serializes")),
            };
            let written = match &output.out {
                Some(path) => fs::write(path, body).map_err(|e| format!("{path}: {e}")),
                None => {
                    print!("{body}");
                    Ok(())
                }
            };
            match written {
                Err(msg) => {
                    eprintln!("{}", CliError::Input(msg).to_json());
                    2
                }
                Ok(()) if output.strict && outcome.findings => 1,
                Ok(()) => 0,
            }
        }
        Err(e) => {
            println!("{}", serde_json::to_string_pretty(&e.to_json()).expect("JSON serializes"));
            e.exit_code()
        }
    }
}
