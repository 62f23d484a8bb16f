//! Command-line front end: reads algebra description files and prints
//! sorted `key=value` reports.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use symquiver::algebra::{AlgebraTable, FormSearch, FormVerdict, DEFAULT_MAX_LEN};
use symquiver::census::{
    all_periods_divide_4, indecomposable_census, omega_closure_check, CensusMethod, CensusOptions,
};
use symquiver::classify::{classify_structural, lemma1_report, verify_family, ClassifyReport};
use symquiver::families::Family;
use symquiver::linalg::PrimeField;
use symquiver::rep::{fitting_split, is_isomorphic, is_simple, simple};
use symquiver::specfile::SpecFile;
use symquiver::syzygy::{
    dimension_identity, four_term_sequence, omega_period, Period, DEFAULT_PERIOD_BOUND,
};
use symquiver::{Error, Result};

use report::{index_key, join, Report};

#[derive(Parser, Debug)]
#[command(name = "symquiver", version, about = "Bound quiver algebras over prime fields")]
struct Cli {
    /// Print the report as a JSON object instead of key=value lines.
    #[arg(long, global = true)]
    json: bool,
    /// Exit with code 4 when a verdict rests on random sampling only.
    #[arg(long, global = true)]
    strict: bool,
    /// Seed for the randomized fallbacks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Longest path length tried while building the algebra.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_LEN)]
    max_len: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    I,
    Ii,
    Iii,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::I => Family::I,
            FamilyArg::Ii => Family::II,
            FamilyArg::Iii => Family::III,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Auto,
    Raw,
    Extension,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the algebra and report its dimensions.
    Check { file: PathBuf },
    /// Search for a symmetrizing form and test the socle properties.
    Symmetric { file: PathBuf },
    /// Ω-periods of the simple modules and the four-term sequences.
    Periods {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_PERIOD_BOUND)]
        bound: usize,
    },
    /// The three-condition equivalence report.
    Lemma1 { file: PathBuf },
    /// Match the algebra against the three families.
    Classify { file: PathBuf },
    /// Write the description file of a family member.
    Family {
        #[arg(long = "type", value_enum)]
        kind: FamilyArg,
        #[arg(long)]
        param: usize,
        #[arg(long, default_value_t = 2)]
        p: u32,
        /// Output path; the description goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify, then run every check for the matched family.
    VerifyFamily {
        file: PathBuf,
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// Indecomposable modules up to a total dimension.
    Census {
        file: PathBuf,
        /// Defaults to the dimension of the algebra.
        #[arg(long)]
        max_dim: Option<usize>,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        #[arg(long, default_value_t = DEFAULT_PERIOD_BOUND)]
        bound: usize,
    },
    /// The module rad(P)/soc(P) at a vertex.
    Heart {
        file: PathBuf,
        #[arg(long)]
        vertex: String,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotAdmissible { .. } | Error::PathSpaceTooLarge { .. } | Error::CensusCapExceeded { .. } => 3,
        Error::NotSymmetric
        | Error::NotConnected
        | Error::PremiseFails(_)
        | Error::PeriodHypothesisFails { .. }
        | Error::MissingForm
        | Error::RelationViolated(_)
        | Error::AlgebraMismatch
        | Error::ZeroModule => 1,
        _ => 2,
    }
}

struct Loaded {
    spec: SpecFile,
    alg: AlgebraTable,
}

impl Loaded {
    fn vertex(&self, v: usize) -> &str {
        &self.spec.vertex_ids[v]
    }

    fn arrow(&self, a: usize) -> &str {
        &self.spec.quiver.arrow(a).name
    }
}

fn load(file: &Path, max_len: usize) -> Result<Loaded> {
    let text = std::fs::read_to_string(file).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("{}: {e}", file.display()),
    })?;
    let spec = SpecFile::parse(&text)?;
    let alg = spec.build(max_len)?;
    Ok(Loaded { spec, alg })
}

fn run(cli: &Cli) -> Result<Report> {
    let seed = cli.seed;
    match &cli.command {
        Command::Check { file } => check(&load(file, cli.max_len)?),
        Command::Symmetric { file } => symmetric(&load(file, cli.max_len)?, seed),
        Command::Periods { file, bound } => periods(&load(file, cli.max_len)?, *bound, seed),
        Command::Lemma1 { file } => lemma1(&load(file, cli.max_len)?, seed),
        Command::Classify { file } => {
            let l = load(file, cli.max_len)?;
            let mut r = Report::default();
            classification(&mut r, &l, &classify_structural(&l.alg));
            Ok(r)
        }
        Command::Family { kind, param, p, out } => family(*kind, *param, *p, out.as_deref()),
        Command::VerifyFamily { file, max_dim } => verify(&load(file, cli.max_len)?, *max_dim, seed),
        Command::Census {
            file,
            max_dim,
            method,
            bound,
        } => census(&load(file, cli.max_len)?, *max_dim, *method, *bound, seed),
        Command::Heart { file, vertex } => heart(&load(file, cli.max_len)?, vertex, seed),
    }
}

fn check(l: &Loaded) -> Result<Report> {
    let a = &l.alg;
    let mut r = Report::default();
    r.set("p", a.field().p());
    r.set("vertices", a.vertex_count());
    r.set("arrows", a.quiver().arrows().len());
    r.set("relations", a.relations().len());
    r.set("dim", a.dim());
    for v in 0..a.vertex_count() {
        r.set(format!("dim.P_{}", l.vertex(v)), a.projective_dim(v));
    }
    r.set("loewy_length", a.loewy_length());
    r.set("vanishing_length", a.vanishing_length());
    r.set("admissible", true);
    r.set("selfinjective", a.is_selfinjective());
    r.set("connected", a.quiver().is_connected());
    Ok(r)
}

fn symmetric(l: &Loaded, seed: u64) -> Result<Report> {
    let a = &l.alg;
    let mut r = Report::default();
    let verdict = a.find_symmetrizing_form(seed);
    r.certify(verdict.is_certain());
    match &verdict {
        FormVerdict::Symmetric { method, .. } => {
            r.set("symmetric", true);
            let m = match method {
                FormSearch::Structured => "structured".to_string(),
                FormSearch::Exhaustive => "exhaustive".to_string(),
                FormSearch::Random { seed } => format!("random(seed={seed})"),
            };
            r.set("form_search", m);
        }
        FormVerdict::NotSymmetric { certified, .. } => {
            r.set("symmetric", false);
            r.set("form_search", if *certified { "exhaustive" } else { "random" });
            r.fail("algebra is not symmetric");
        }
    }
    r.set("certified", verdict.is_certain());
    r.set("selfinjective", a.is_selfinjective());
    r.set("property_a", !a.quiver().has_sink_or_source());
    let pb = a.check_property_b();
    r.set("property_b", pb.holds);
    if let Some((i, j, _)) = pb.witness {
        r.set("property_b_witness", format!("e_{} L e_{}", l.vertex(i), l.vertex(j)));
    }
    let pc = a.check_property_c();
    r.set("property_c", pc.holds);
    r.set(
        "socle_monomials",
        join(pc.socle_monomials.iter().map(|p| p.display(a.quiver()))),
    );
    r.set("property_c_failures", pc.failures.len());
    if verdict.form().is_some() {
        if !pb.holds {
            r.fail("symmetric algebra with socle meeting an off-diagonal piece");
        }
        if !pc.holds {
            r.fail("symmetric algebra with a vanishing rotation of a socle monomial");
        }
    }
    Ok(r)
}

fn periods(l: &Loaded, bound: usize, seed: u64) -> Result<Report> {
    let a = &l.alg;
    let mut r = Report::default();
    r.set("bound", bound);
    for v in 0..a.vertex_count() {
        let name = format!("S_{}", l.vertex(v));
        let pr = omega_period(a, &simple(a, v), bound, seed)?;
        r.certify(pr.certified);
        r.set(format!("period.{name}"), &pr.period);
        r.set(format!("omega_dims.{name}"), join(&pr.dims));
        // Syzygies reaching zero settle the question; only a live sequence
        // cut off by the bound is a resource failure.
        if matches!(pr.period, Period::AperiodicUpTo(_)) && pr.dims.last() != Some(&0) {
            r.bound_hit = true;
        }
        if !pr.period.divides_four() {
            continue;
        }
        let id = dimension_identity(a, v, seed)?;
        r.set(
            format!("identity.{name}"),
            format!(
                "{}+{}={}+{}={}+{}",
                id.omega2, id.p_i, id.p_plus, id.s_i, id.p_minus, id.s_i
            ),
        );
        r.set(format!("identity_holds.{name}"), id.holds());
        let seq = four_term_sequence(a, v, seed)?;
        r.certify(seq.certified);
        r.set(format!("sequence_dims.{name}"), join(seq.dims()));
        r.set(format!("sequence_exact.{name}"), seq.holds());
        if !id.holds() {
            r.fail(format!("dimension identity violated at {name}"));
        }
        if !seq.holds() {
            r.fail(format!("four-term exact sequence fails at {name}"));
        }
    }
    Ok(r)
}

fn lemma1(l: &Loaded, seed: u64) -> Result<Report> {
    let a = &l.alg;
    let rep = lemma1_report(a, seed)?;
    let mut r = Report::default();
    r.certify(rep.certified);
    r.set(
        "condition_a",
        rep.condition_a.map_or("false".into(), |(i, j)| {
            format!("Omega^2(S_{}) = S_{}", l.vertex(i), l.vertex(j))
        }),
    );
    r.set("condition_b", rep.condition_b.map_or("false".into(), |x| l.arrow(x).to_string()));
    r.set(
        "condition_c",
        rep.condition_c.map_or("false".into(), |(i, d)| format!("vertex {} dim {d}", l.vertex(i))),
    );
    for (v, d) in rep.dims.iter().enumerate() {
        r.set(format!("dims.{}", l.vertex(v)), format!("{},{},{}", d[0], d[1], d[2]));
    }
    for (v, p) in rep.simple_periods.iter().enumerate() {
        r.set(format!("period.S_{}", l.vertex(v)), p);
    }
    r.set("equivalence_ok", rep.equivalence_ok);
    r.set(
        "finite_type_conclusion",
        rep.finite_type_conclusion.map_or("none".into(), |s| s.to_string()),
    );
    r.set("conclusion_ok", rep.conclusion_ok);
    if let Some((found, expected)) = rep.nakayama_count {
        r.set("census_count", found);
        r.set("loewy_sum", expected);
    }
    r.set("premise", &rep.premise);
    r.set("certified", rep.certified);
    if !rep.equivalence_ok {
        r.fail("three-condition equivalence violated");
    }
    if !rep.conclusion_ok {
        r.fail("Nakayama conclusion violated");
    }
    Ok(r)
}

fn classification(r: &mut Report, l: &Loaded, c: &ClassifyReport) {
    r.set("family", c.family_name());
    if let (Some(f), Some(p)) = (c.family, c.param) {
        r.set(if f == Family::III { "t" } else { "n" }, p);
        r.set("vertex_map", join(c.vertex_map.iter().map(|&v| l.vertex(v))));
        r.set("arrow_map", join(c.arrow_map.iter().map(|&a| l.arrow(a))));
        r.set(
            "rescaling",
            c.rescaling.map_or("none".into(), |(a, k)| format!("{}*{k}", l.arrow(c.arrow_map[a]))),
        );
        for (k, e) in c.evidence.iter().enumerate() {
            r.set(index_key("evidence", k, c.evidence.len(), "relation"), e);
        }
    }
}

fn family(kind: FamilyArg, param: usize, p: u32, out: Option<&Path>) -> Result<Report> {
    let fam: Family = kind.into();
    let field = PrimeField::new(p)?;
    let spec = SpecFile::from(fam.generate(param, field)?);
    let text = spec.to_text();
    let mut r = Report::default();
    match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| Error::Parse {
                line: 0,
                msg: format!("{}: {e}", path.display()),
            })?;
            r.set("out", path.display());
        }
        None => print!("{text}"),
    }
    r.set("family", fam.name());
    r.set("param", param);
    r.set("p", p);
    r.set("relations", spec.relations.len());
    Ok(r)
}

fn verify(l: &Loaded, max_dim: Option<usize>, seed: u64) -> Result<Report> {
    let a = &l.alg;
    let c = classify_structural(a);
    let mut r = Report::default();
    classification(&mut r, l, &c);
    if c.family.is_none() {
        r.fail("algebra matches none of the three families");
        return Ok(r);
    }
    let v = verify_family(a, &c, max_dim, seed)?;
    r.certify(v.certified);
    for (k, ch) in v.checks.iter().enumerate() {
        r.set(index_key("check", k, v.checks.len(), "claim"), ch.claim);
        r.set(index_key("check", k, v.checks.len(), "passed"), ch.passed);
        if !ch.detail.is_empty() {
            r.set(index_key("check", k, v.checks.len(), "detail"), &ch.detail);
        }
        if !ch.passed {
            r.fail(ch.claim);
        }
    }
    if let Some(cen) = &v.census {
        r.set("census_max_dim", cen.max_dim);
        r.set("census_count", cen.entries.len());
        r.set("census_non_projective", cen.non_projective().count());
    }
    r.set("passed", v.passed());
    r.set("certified", v.certified);
    Ok(r)
}

fn census(l: &Loaded, max_dim: Option<usize>, method: MethodArg, bound: usize, seed: u64) -> Result<Report> {
    let a = &l.alg;
    let d = max_dim.unwrap_or(a.dim());
    let opts = CensusOptions {
        method: match method {
            MethodArg::Auto => CensusMethod::Auto,
            MethodArg::Raw => CensusMethod::Raw,
            MethodArg::Extension => CensusMethod::Extension,
        },
        period_bound: bound,
        seed,
        ..CensusOptions::default()
    };
    let c = indecomposable_census(a, d, opts)?;
    let mut r = Report::default();
    r.certify(c.certified);
    r.set("max_dim", d);
    r.set("p", c.p);
    r.set("method", format!("{:?}", c.method).to_lowercase());
    r.set("exhaustive", c.exhaustive);
    r.set("count", c.entries.len());
    r.set("non_projective", c.non_projective().count());
    let n = c.entries.len();
    for (k, e) in c.entries.iter().enumerate() {
        r.set(index_key("entry", k, n, "dimvec"), join(e.dims()));
        r.set(index_key("entry", k, n, "period"), &e.period);
        r.set(index_key("entry", k, n, "projective"), e.projective);
    }
    let (ok, bad) = all_periods_divide_4(&c);
    r.set("all_periods_divide_4", ok);
    r.set("exceptions", join(bad.iter().map(|k| k + 1)));
    match a.find_symmetrizing_form(seed).form() {
        Some(form) => {
            let cl = omega_closure_check(a, &c, form, seed)?;
            r.set("omega_closed", cl.closed);
            r.set("open_boundary", cl.open_boundary);
        }
        None => r.set("omega_closed", "unavailable"),
    }
    r.set("certified", c.certified);
    Ok(r)
}

fn heart(l: &Loaded, vertex: &str, seed: u64) -> Result<Report> {
    let a = &l.alg;
    let v = l
        .spec
        .vertex_ids
        .iter()
        .position(|id| id == vertex)
        .ok_or_else(|| Error::Parse {
            line: 0,
            msg: format!("unknown vertex `{vertex}`"),
        })?;
    let (h, _) = symquiver::rep::heart(a, v)?;
    let mut r = Report::default();
    r.set("vertex", vertex);
    r.set("dimvec", join(h.dims()));
    r.set("dim", h.total_dim());
    let d = fitting_split(a, &h, seed)?;
    r.certify(d.certified);
    r.set("summands", d.summands.len());
    for (k, s) in d.summands.iter().enumerate() {
        r.set(index_key("summand", k, d.summands.len(), "dimvec"), join(s.rep.dims()));
    }
    r.set("simple", is_simple(&h));
    if is_simple(&h) {
        let j = (0..a.vertex_count()).find(|&j| h.dims()[j] == 1).unwrap();
        let iso = is_isomorphic(a, &h, &simple(a, j), seed)?;
        r.set("isomorphic_to", format!("S_{}", l.vertex(j)));
        r.certify(iso.is_certain());
    }
    r.set("certified", !r.uncertified);
    Ok(r)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.json));
            for claim in &report.failed {
                eprintln!("failed: {claim}");
            }
            let code = if !report.failed.is_empty() {
                1
            } else if report.bound_hit {
                3
            } else if cli.strict && report.uncertified {
                4
            } else {
                0
            };
            ExitCode::from(code)
        }
        Err(e) => {
            if cli.json {
                println!("{}", serde_json::json!({ "error": e.to_string() }));
            } else {
                println!("error={e}");
            }
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
