//! Command-line front end: analyze user-supplied models, construct catalog
//! surfaces, run the verification suite, and emit text or JSON.
//!
//! Exit codes: 0 when all requested checks pass, 1 on a failed verification
//! or computation, 2 on input parse errors.

use std::io::Read;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::arith::field::Rat;
use crate::basechange::{
    cyclic_cover, model_from_j, pullback, redei_cover, riemann_hurwitz_check,
    BranchPoint, CoverMap,
};
use crate::catalog::{
    construct_surface, distinct_configs, find_record,
    mp_k3_survey, records, verify_group, verify_surface, CoverRecipe, Recipe,
};
use crate::fibers::{
    nori_extremality_check, surface_report, FiberConfiguration,
    SurfaceReport,
};
use crate::grouptheory::{group_data, CongruenceGroup, DEFAULT_LEVEL_BOUND};
use crate::parse::{
    cubic_from_json, equation_string, model_from_json, model_to_json, parse_equation,
    parse_rational, parse_rf,
};
use crate::weierstrass::{cubic_to_weierstrass, quadratic_twist, WeierstrassModel};

#[derive(Parser)]
#[command(
    name = "emsurf",
    about = "Exact reconstruction and verification of semistable elliptic \
             modular surfaces over the projective line"
)]
pub struct Cli {
    /// Emit JSON on stdout (and machine-readable errors on stderr)
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Fiber table and surface report for a Weierstrass model
    ///
    /// INPUT is a long-Weierstrass equation such as
    /// "y^2 + x*y = x^3 - 36/(t - 1728)*x - 1/(t - 1728)", a model JSON
    /// object {a1..a6, coordinate}, or a marked plane cubic JSON object
    /// {coeffs, point, coordinate}. Prefix with '@' to read from a file,
    /// or pass '-' to read stdin.
    Analyze { input: String },
    /// Construct a catalog surface by its recipe and report on it
    Construct {
        label: String,
        /// Override the cover parameter (a nonzero rational "p/q")
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Verify one catalog entry: group data and, when applicable, surface
    Verify {
        label: String,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, default_value_t = DEFAULT_LEVEL_BOUND)]
        level_bound: u64,
    },
    /// Verify the whole catalog: 33 group rows and 31 surface rows
    VerifyAll {
        #[arg(long, default_value_t = DEFAULT_LEVEL_BOUND)]
        level_bound: u64,
    },
    /// Build a cyclic self-cover of the line ramified at two points
    Cover {
        /// First branch point: a rational number or "inf"
        #[arg(required_unless_present = "redei", conflicts_with = "redei")]
        a: Option<String>,
        /// Second branch point: a rational number or "inf"
        #[arg(required_unless_present = "redei", conflicts_with = "redei")]
        b: Option<String>,
        /// Covering degree
        #[arg(short, long, default_value_t = 2)]
        degree: u32,
        /// Ramify at the two conjugate roots of this monic irreducible
        /// quadratic (e.g. "t^2 - 11*t - 1") instead of rational points
        #[arg(long)]
        redei: Option<String>,
        #[arg(long)]
        lambda: Option<String>,
        /// Model to pull back along the cover (same formats as analyze)
        #[arg(long)]
        pullback: Option<String>,
    },
    /// Quadratic twist of a model, or the twist-to-semistable pipeline
    Twist {
        /// Model to twist (same formats as analyze); required with --delta
        #[arg(required_unless_present = "from_j", conflicts_with = "from_j")]
        input: Option<String>,
        /// Squarefree twisting polynomial, e.g. "t^2 - 3*t + 1"
        #[arg(long, required_unless_present = "from_j")]
        delta: Option<String>,
        /// Build y² + xy = x³ − 36/(j−1728)·x − 1/(j−1728) from this
        /// j-invariant and twist it semistable
        #[arg(long)]
        from_j: Option<String>,
    },
    /// All quadratic base changes of the six Euler-number-12 surfaces
    /// branched at cusp pairs: the K3 survey
    MpSurvey,
    /// Coset enumeration data for a congruence subgroup label
    GroupInfo {
        label: String,
        #[arg(long, default_value_t = DEFAULT_LEVEL_BOUND)]
        level_bound: u64,
    },
}

/// What went wrong, bucketed by exit code.
enum Failure {
    /// Exit 2: the input could not be parsed.
    Parse(String),
    /// Exit 1: a check failed or a computation was impossible.
    Check(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Check(_) => 1,
        }
    }
    fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Check(m) => m,
        }
    }
    fn kind(&self) -> &'static str {
        match self {
            Failure::Parse(_) => "parse",
            Failure::Check(_) => "check",
        }
    }
}

fn parse_err(e: impl std::fmt::Display) -> Failure {
    Failure::Parse(e.to_string())
}

fn check_err(e: impl std::fmt::Display) -> Failure {
    Failure::Check(e.to_string())
}

type Out = Result<(String, Value), Failure>;

/// Parses and runs a command line; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // help/version go to stdout with status 0; usage errors exit 2
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let json = cli.json;
    match dispatch(cli.command) {
        Ok((text, value)) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                println!("{text}");
            }
            0
        }
        Err(f) => {
            if json {
                eprintln!(
                    "{}",
                    json!({ "error": f.message(), "kind": f.kind() })
                );
            } else {
                eprintln!("error: {}", f.message());
            }
            f.code()
        }
    }
}

fn dispatch(cmd: Command) -> Out {
    match cmd {
        Command::Analyze { input } => analyze_cmd(&input),
        Command::Construct { label, lambda } => construct_cmd(&label, lambda.as_deref()),
        Command::Verify { label, lambda, level_bound } => {
            verify_cmd(&label, lambda.as_deref(), level_bound)
        }
        Command::VerifyAll { level_bound } => verify_all_cmd(level_bound),
        Command::Cover { a, b, degree, redei, lambda, pullback } => {
            cover_cmd(a.as_deref(), b.as_deref(), degree, redei.as_deref(),
                      lambda.as_deref(), pullback.as_deref())
        }
        Command::Twist { input, delta, from_j } => {
            twist_cmd(input.as_deref(), delta.as_deref(), from_j.as_deref())
        }
        Command::MpSurvey => survey_cmd(),
        Command::GroupInfo { label, level_bound } => group_info_cmd(&label, level_bound),
    }
}

// --- input handling ---

fn read_input(arg: &str) -> Result<String, Failure> {
    if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(parse_err)?;
        return Ok(buf);
    }
    if let Some(path) = arg.strip_prefix('@') {
        return std::fs::read_to_string(path).map_err(parse_err);
    }
    Ok(arg.to_string())
}

fn model_input(arg: &str) -> Result<WeierstrassModel<Rat>, Failure> {
    let src = read_input(arg)?;
    let src = src.trim();
    if src.starts_with('{') {
        let v: Value = serde_json::from_str(src).map_err(parse_err)?;
        if v.get("coeffs").is_some() {
            let (cubic, coordinate) = cubic_from_json(&v).map_err(parse_err)?;
            return cubic_to_weierstrass(&cubic, &coordinate).map_err(check_err);
        }
        return model_from_json(&v).map_err(parse_err);
    }
    parse_equation(src).map_err(parse_err)
}

fn lambda_input(arg: Option<&str>) -> Result<Option<Rat>, Failure> {
    match arg {
        None => Ok(None),
        Some(s) => parse_rational(s).map(Some).map_err(parse_err),
    }
}

// --- shared report rendering ---

fn configuration_json(config: &FiberConfiguration<Rat>, var: &str) -> Value {
    Value::Array(
        config
            .fibers
            .iter()
            .map(|f| {
                json!({
                    "place": f.place.to_string_with_var(var),
                    "degree": f.degree(),
                    "type": f.kodaira.to_string(),
                    "v_c4": f.v_c4,
                    "v_c6": f.v_c6,
                    "v_delta": f.v_delta,
                })
            })
            .collect(),
    )
}

fn fiber_table(config: &FiberConfiguration<Rat>, var: &str) -> String {
    let mut rows = vec![(
        "place".to_string(),
        "type".to_string(),
        "deg".to_string(),
        "v(c4)".to_string(),
        "v(c6)".to_string(),
        "v(D)".to_string(),
    )];
    for f in &config.fibers {
        rows.push((
            f.place.to_string_with_var(var),
            f.kodaira.to_string(),
            f.degree().to_string(),
            f.v_c4.map_or("inf".into(), |v| v.to_string()),
            f.v_c6.map_or("inf".into(), |v| v.to_string()),
            f.v_delta.to_string(),
        ));
    }
    let w0 = rows.iter().map(|r| r.0.len()).max().unwrap();
    let w1 = rows.iter().map(|r| r.1.len()).max().unwrap();
    rows.iter()
        .map(|(a, b, c, d, e, f)| {
            format!("{a:<w0$}  {b:<w1$}  {c:>3}  {d:>5}  {e:>5}  {f:>5}")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Text and JSON forms of a full surface report. `extremal` is None when
/// the check does not apply (no singular fibers or not semistable).
fn report_output(
    m: &WeierstrassModel<Rat>,
    report: &SurfaceReport<Rat>,
) -> (String, Value) {
    let var = &m.coordinate;
    let mut text = format!("equation: {}\n", equation_string(m));
    let extremal = if report.semistable && !report.configuration.fibers.is_empty() {
        nori_extremality_check(m).ok().map(|n| n.extremal)
    } else {
        None
    };
    if report.configuration.fibers.is_empty() {
        text.push_str(
            "no singular fibers; Euler number 0; not an elliptic modular surface datum",
        );
    } else {
        text.push_str(&fiber_table(&report.configuration, var));
        text.push_str(&format!(
            "\nEuler number {}, chi {}, p_g {}, semistable: {}, extremal: {}",
            report.euler_number,
            report.chi,
            report.p_g,
            if report.semistable { "yes" } else { "no" },
            match extremal {
                Some(true) => "yes",
                Some(false) => "no",
                None => "n/a",
            },
        ));
    }
    let value = json!({
        "equation": equation_string(m),
        "model": model_to_json(m),
        "fibers": configuration_json(&report.configuration, var),
        "euler_number": report.euler_number,
        "chi": report.chi,
        "p_g": report.p_g,
        "semistable": report.semistable,
        "extremal": extremal,
    });
    (text, value)
}

// --- subcommands ---

fn analyze_cmd(input: &str) -> Out {
    let m = model_input(input)?;
    let report = surface_report(&m).map_err(check_err)?;
    Ok(report_output(&m, &report))
}

fn recipe_string(recipe: &Recipe) -> String {
    match recipe {
        Recipe::Unsupported => "index-6 group; no associated surface".into(),
        Recipe::Direct => "direct model".into(),
        Recipe::Pullback { base, cover } => match cover {
            CoverRecipe::Cyclic { a, b, d, lambda } => format!(
                "pullback of {base} along a degree-{d} cyclic cover ramified at \
                 {} and {} (lambda = {lambda})",
                a.label(),
                b.label()
            ),
            CoverRecipe::Verbatim(_) => {
                format!("pullback of {base} along its displayed covering map")
            }
        },
    }
}

fn construct_cmd(label: &str, lambda: Option<&str>) -> Out {
    let record = find_record(label).map_err(parse_err)?;
    let lambda = lambda_input(lambda)?;
    let model = construct_surface(label, lambda.as_ref()).map_err(check_err)?;
    let report = surface_report(&model).map_err(check_err)?;
    let (body, mut value) = report_output(&model, &report);
    let recipe = recipe_string(&record.recipe);
    let text = format!(
        "{label} (index {})\nrecipe: {recipe}\n{body}",
        record.index
    );
    value["label"] = json!(label);
    value["index"] = json!(record.index);
    value["recipe"] = json!(recipe);
    Ok((text, value))
}

fn group_row_json(v: &crate::catalog::GroupVerification) -> Value {
    json!({
        "label": v.name,
        "pass": v.all_pass(),
        "index": v.data.index,
        "cusp_widths": v.data.cusp_widths,
        "genus": v.data.genus,
        "torsion_free": v.data.torsion_free,
    })
}

fn surface_row_json(v: &crate::catalog::SurfaceVerification) -> Value {
    json!({
        "label": v.name,
        "pass": v.all_pass(),
        "euler_number": v.euler_number,
        "widths": v.widths,
        "semistable": v.semistable,
        "extremal": v.extremal,
    })
}

fn verify_cmd(label: &str, lambda: Option<&str>, level_bound: u64) -> Out {
    let record = find_record(label).map_err(parse_err)?;
    let lambda = lambda_input(lambda)?;
    let g = verify_group(&record, level_bound).map_err(check_err)?;
    let mut rows = vec![format!(
        "group   {:<22} {}",
        label,
        if g.all_pass() { "pass" } else { "FAIL" }
    )];
    let mut all = g.all_pass();
    let mut value = json!({ "group": group_row_json(&g) });
    if !matches!(record.recipe, Recipe::Unsupported) {
        let s = verify_surface(&record, lambda.as_ref()).map_err(check_err)?;
        rows.push(format!(
            "surface {:<22} {}",
            label,
            if s.all_pass() { "pass" } else { "FAIL" }
        ));
        all = all && s.all_pass();
        value["surface"] = surface_row_json(&s);
    }
    value["all_pass"] = json!(all);
    let text = rows.join("\n");
    if all {
        Ok((text, value))
    } else {
        Err(Failure::Check(format!("verification failed\n{text}")))
    }
}

fn verify_all_cmd(level_bound: u64) -> Out {
    let mut lines = vec![];
    let mut groups = vec![];
    let mut surfaces = vec![];
    let mut all = true;
    for record in records() {
        let g = verify_group(&record, level_bound).map_err(check_err)?;
        all = all && g.all_pass();
        lines.push(format!(
            "group   {:<22} {}",
            record.name,
            if g.all_pass() { "pass" } else { "FAIL" }
        ));
        groups.push(group_row_json(&g));
    }
    for record in records() {
        if matches!(record.recipe, Recipe::Unsupported) {
            continue;
        }
        let s = verify_surface(&record, None).map_err(check_err)?;
        all = all && s.all_pass();
        lines.push(format!(
            "surface {:<22} {}  e = {:>2}, widths {:?}",
            record.name,
            if s.all_pass() { "pass" } else { "FAIL" },
            s.euler_number,
            s.widths,
        ));
        surfaces.push(surface_row_json(&s));
    }
    lines.push(format!(
        "{} groups, {} surfaces: {}",
        groups.len(),
        surfaces.len(),
        if all { "all pass" } else { "FAILURES" }
    ));
    let text = lines.join("\n");
    let value = json!({ "groups": groups, "surfaces": surfaces, "all_pass": all });
    if all {
        Ok((text, value))
    } else {
        Err(Failure::Check(format!("verification failed\n{text}")))
    }
}

fn branch_input(arg: &str) -> Result<BranchPoint<Rat>, Failure> {
    if arg == "inf" || arg == "infinity" {
        return Ok(BranchPoint::Infinity);
    }
    parse_rational(arg).map(BranchPoint::Finite).map_err(parse_err)
}

fn cover_cmd(
    a: Option<&str>,
    b: Option<&str>,
    degree: u32,
    redei: Option<&str>,
    lambda: Option<&str>,
    pullback_input: Option<&str>,
) -> Out {
    let (cover, rh): (CoverMap<Rat>, bool) = match redei {
        Some(q) => {
            let q = parse_rf(q).map_err(parse_err)?;
            let q = q
                .as_poly()
                .cloned()
                .ok_or_else(|| Failure::Parse("quadratic must be a polynomial".into()))?;
            let cover = redei_cover(&q, degree).map_err(check_err)?;
            // total ramification exactly over the conjugate roots of q
            // means the pullback of q is a d-th power of a squarefree
            // quadratic, which already exhausts 2d − 2
            let pulled = crate::arith::ratfunc::poly_compose(&q, &cover.map);
            let parts: Vec<_> = pulled
                .num()
                .squarefree_decomposition()
                .into_iter()
                .filter(|(p, _)| !p.is_constant())
                .collect();
            let rh = parts.len() == 1
                && parts[0].1 == degree as usize
                && parts[0].0.degree() == Some(2);
            (cover, rh)
        }
        None => {
            let a = branch_input(a.unwrap())?;
            let b = branch_input(b.unwrap())?;
            let lambda = lambda_input(lambda)?.unwrap_or_else(num::One::one);
            let cover = cyclic_cover(&a, &b, degree, lambda).map_err(check_err)?;
            let rh = riemann_hurwitz_check(&cover, &[a, b]);
            (cover, rh)
        }
    };
    let mut text = format!(
        "map: t = {}\ndegree: {}\nriemann-hurwitz: {}",
        cover.map.to_string_with_var("s"),
        cover.degree,
        if rh { "pass" } else { "FAIL" }
    );
    let mut value = json!({
        "map": cover.map.to_string_with_var("s"),
        "degree": cover.degree,
        "riemann_hurwitz": rh,
    });
    if let Some(input) = pullback_input {
        let base = model_input(input)?;
        let pulled = pullback(&base, &cover).clear_denominators();
        let report = surface_report(&pulled).map_err(check_err)?;
        let (body, v) = report_output(&pulled, &report);
        text.push_str("\n");
        text.push_str(&body);
        value["pullback"] = v;
    }
    if rh {
        Ok((text, value))
    } else {
        Err(Failure::Check(format!("cover is ramified outside its branch points\n{text}")))
    }
}

fn twist_cmd(input: Option<&str>, delta: Option<&str>, from_j: Option<&str>) -> Out {
    if let Some(jsrc) = from_j {
        let j = parse_rf(jsrc).map_err(parse_err)?;
        let start = model_from_j(&j, "t");
        let outcome =
            crate::basechange::twist_to_semistable(&start).map_err(check_err)?;
        let report = surface_report(&outcome.twisted).map_err(check_err)?;
        let (body, v) = report_output(&outcome.twisted, &report);
        let text = format!(
            "delta1: {}\ndelta2: {}\nstarred fibers after first twist: {}\n{body}",
            outcome.delta1.to_string_with_var("t"),
            outcome.delta2.to_string_with_var("t"),
            outcome.intermediate_starred,
        );
        let value = json!({
            "delta1": outcome.delta1.to_string_with_var("t"),
            "delta2": outcome.delta2.to_string_with_var("t"),
            "intermediate_starred": outcome.intermediate_starred,
            "result": v,
        });
        return Ok((text, value));
    }
    let m = model_input(input.unwrap())?;
    let delta = parse_rf(delta.unwrap()).map_err(parse_err)?;
    let delta = delta
        .as_poly()
        .cloned()
        .ok_or_else(|| Failure::Parse("delta must be a polynomial".into()))?;
    let twisted = quadratic_twist(&m, &delta)
        .map_err(check_err)?
        .clear_denominators();
    let report = surface_report(&twisted).map_err(check_err)?;
    Ok(report_output(&twisted, &report))
}

fn survey_cmd() -> Out {
    let entries = mp_k3_survey().map_err(check_err)?;
    let mut lines = vec![];
    let mut rows = vec![];
    for e in &entries {
        lines.push(format!(
            "{:<20} ({}, {}): {:?}  e = {}",
            e.base, e.branch.0, e.branch.1, e.config, e.euler_number
        ));
        rows.push(json!({
            "base": e.base,
            "branch": [e.branch.0, e.branch.1],
            "config": e.config,
            "euler_number": e.euler_number,
        }));
    }
    let distinct = distinct_configs(&entries);
    lines.push(format!("{} distinct configurations:", distinct.len()));
    for c in &distinct {
        lines.push(format!("  {c:?}"));
    }
    let value = json!({ "entries": rows, "distinct_configurations": distinct });
    Ok((lines.join("\n"), value))
}

fn group_info_cmd(label: &str, level_bound: u64) -> Out {
    let group = CongruenceGroup::parse(label).map_err(parse_err)?;
    let data = group_data(&group, level_bound).map_err(check_err)?;
    let text = format!(
        "label: {}\nlevel: {}\nindex: {}\ncusp widths: {:?}\ne2: {}, e3: {}\n\
         genus: {}\ntorsion-free: {}",
        data.label,
        data.level,
        data.index,
        data.cusp_widths,
        data.e2,
        data.e3,
        data.genus,
        data.torsion_free,
    );
    let value = json!({
        "label": data.label,
        "level": data.level,
        "index": data.index,
        "widths": data.cusp_widths,
        "e2": data.e2,
        "e3": data.e3,
        "genus": data.genus,
        "torsion_free": data.torsion_free,
    });
    Ok((text, value))
}
