//! Command-line front end. `main.rs` only calls [`main`].
//!
//! Exit codes: 0 when every check passes (warnings allowed), 1 when a check
//! fails, 2 for usage or input errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::charclass::{kclass, verify_kclass_lemmas};
use crate::error::{Error, Result};
use crate::fixtures::{Fixtures, FIXTURE_ENV};
use crate::hilbert::{self, SurfaceBetti};
use crate::invariants::{
    fo_form, g2_quantity, hk_report, hodge_to_chi, hodge_to_poincare, mirror_sum_check, phi_cap, phi_lemma_check,
    phi_small, qk_constraint, spin7_report, HodgeDiamond, PoincarePoly, QkBetti,
};
use crate::manifolds::{chi_from_chern, divisibility_suite, gamma, psi, theorem_checks, ChernNumbers};
use crate::report::{csv_field, latex_escape, Check, Report};
use crate::symmetric::{DEFAULT_MAX_DIM, DIM_CEILING};
use crate::verify::{self, Suite, VerifyConfig};

#[derive(Debug, Parser)]
#[command(name = "chernhodge", version, about = "Exact characteristic classes, Betti and Hodge invariants")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    pub format: Format,

    /// Directory holding a replacement `reference.toml`.
    #[arg(long, global = true, env = FIXTURE_ENV)]
    pub fixtures: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print K(n,k), the weight-n class pairing to chi^(k)(-1)/((-1)^k k!).
    Kclass(KclassArgs),
    /// Betti numbers of the Hilbert scheme of m points on a surface.
    Hilb(SurfaceArgs),
    /// Betti numbers of the m-th symmetric product of a surface.
    Sym(SurfaceArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Invariants and constraint reports for user data.
    Invariants(InvariantArgs),
}

#[derive(Debug, Args)]
pub struct KclassArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Substitution to apply; only `c1=0` is supported.
    #[arg(long)]
    pub subst: Option<String>,
    /// Also compare against the closed forms for this n.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Args)]
pub struct SurfaceArgs {
    /// `k3`, `torus`, `cp2`, or a JSON file `{"d":4,"betti":[..]}`.
    #[arg(long)]
    pub surface: String,
    #[arg(long)]
    pub m: usize,
    /// Largest accepted m.
    #[arg(long, default_value_t = hilbert::DEFAULT_CAP)]
    pub cap: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    pub suite: SuiteArg,
    #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
    pub n_max: usize,
    #[arg(long, default_value_t = 8)]
    pub m_max: usize,
    #[arg(long, default_value_t = 8)]
    pub g_max: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Lemmas,
    Theorems,
    Hilbert,
    Moduli,
    Holonomy,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Lemmas => Suite::Lemmas,
            SuiteArg::Theorems => Suite::Theorems,
            SuiteArg::Hilbert => Suite::Hilbert,
            SuiteArg::Moduli => Suite::Moduli,
            SuiteArg::Holonomy => Suite::Holonomy,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "input")]
pub struct InputFile {
    /// Poincare polynomial `{"d":8,"betti":[..]}` of a closed oriented manifold.
    #[arg(long)]
    pub betti: Option<PathBuf>,
    /// Hodge diamond `{"n":2,"h":[[..],..]}` with `h[p][q]`.
    #[arg(long)]
    pub hodge: Option<PathBuf>,
    /// Chern numbers `{"n":3,"c1_zero":true,"pairings":{"c3":-200,..}}`.
    #[arg(long)]
    pub chern: Option<PathBuf>,
    /// Primitive Betti numbers `{"m":7,"beta":[..]}` of a quaternion-Kahler manifold.
    #[arg(long)]
    pub qk: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InvariantArgs {
    #[command(flatten)]
    pub input: InputFile,
    /// Holonomy to check Betti data against; inferred from the dimension
    /// when omitted (7: g2, 8: spin7, other 4m: hk).
    #[arg(long, value_enum)]
    pub holonomy: Option<Holonomy>,
    /// `b4^-` for the Spin(7) report.
    #[arg(long)]
    pub b4_minus: Option<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Holonomy {
    Hk,
    G2,
    Spin7,
    Qk,
    None,
}

/// Named values plus an optional report, rendered in any [`Format`].
#[derive(Debug, Default, Serialize)]
pub struct Output {
    #[serde(flatten)]
    pub values: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<Report>,
    /// LaTeX body used in place of the value table.
    #[serde(skip)]
    pub latex: Option<String>,
}

impl Output {
    fn set(&mut self, key: &str, value: impl Serialize) {
        self.values.insert(key.to_string(), serde_json::to_value(value).expect("serializable"));
    }

    fn add_report(&mut self, r: Report) {
        match &mut self.report {
            Some(existing) => existing.extend(r),
            None => self.report = Some(r),
        }
    }

    pub fn failed(&self) -> bool {
        self.report.as_ref().is_some_and(|r| !r.ok())
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("serializable") + "\n",
            Format::Table => {
                let w = self.values.keys().map(|k| k.len()).max().unwrap_or(0);
                let mut out = String::new();
                for (k, v) in &self.values {
                    out.push_str(&format!("{k:<w$}  {}\n", plain(v)));
                }
                if let Some(r) = &self.report {
                    if !self.values.is_empty() {
                        out.push('\n');
                    }
                    out.push_str(&r.to_table());
                }
                out
            }
            Format::Csv => {
                let mut out = String::new();
                if !self.values.is_empty() {
                    out.push_str("quantity,value\n");
                    for (k, v) in &self.values {
                        out.push_str(&format!("{},{}\n", csv_field(k), csv_field(&plain(v))));
                    }
                }
                if let Some(r) = &self.report {
                    if !out.is_empty() {
                        out.push('\n');
                    }
                    out.push_str(&r.to_csv());
                }
                out
            }
            Format::Latex => {
                let mut out = String::new();
                if let Some(body) = &self.latex {
                    out.push_str(&format!("\\[ {body} \\]\n"));
                } else if !self.values.is_empty() {
                    out.push_str("\\begin{tabular}{ll}\n");
                    for (k, v) in &self.values {
                        out.push_str(&format!("{} & {} \\\\\n", latex_escape(k), latex_escape(&plain(v))));
                    }
                    out.push_str("\\end{tabular}\n");
                }
                if let Some(r) = &self.report {
                    out.push_str(&r.to_latex());
                }
                out
            }
        }
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn parse_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    serde_json::from_str(&read(path)?).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

pub fn cmd_kclass(args: &KclassArgs) -> Result<Output> {
    if !(1..=DIM_CEILING).contains(&args.n) {
        return Err(Error::OutOfRange { what: "n", value: args.n as i64, min: 1, max: DIM_CEILING as i64 });
    }
    if args.k > args.n {
        return Err(Error::OutOfRange { what: "k", value: args.k as i64, min: 0, max: args.n as i64 });
    }
    let mut class = kclass(args.n, args.k)?;
    match args.subst.as_deref().map(|s| s.replace(' ', "")) {
        None => {}
        Some(s) if s == "c1=0" => class = class.with_c1_zero(),
        Some(s) => return Err(Error::Input(format!("unsupported substitution '{s}' (only c1=0)"))),
    }
    let mut out = Output::default();
    out.set("n", args.n);
    out.set("k", args.k);
    if let Some(s) = &args.subst {
        out.set("subst", s);
    }
    out.set("class", class.render());
    out.latex = Some(class.render_latex());
    if args.verify {
        out.add_report(verify_kclass_lemmas(args.n)?);
    }
    Ok(out)
}

fn betti_values(out: &mut Output, p: &PoincarePoly) -> Result<()> {
    out.set("d", p.d);
    out.set("betti", &p.betti);
    out.set("euler", p.euler());
    if p.d.is_multiple_of(2) {
        out.set("Phi", phi_cap(p)?);
        if p.euler() != 0 {
            out.set("phi", phi_small(p)?);
        }
    }
    Ok(())
}

pub fn cmd_surface(args: &SurfaceArgs, hilb: bool) -> Result<Output> {
    let s = SurfaceBetti::resolve(&args.surface)?;
    let p = if hilb {
        hilbert::hilb_poincare_capped(&s, args.m, args.cap)?
    } else {
        hilbert::sym_product_poincare_capped(&s, args.m, args.cap)?
    };
    let mut out = Output::default();
    out.set("surface", s.b);
    out.set("m", args.m);
    betti_values(&mut out, &p)?;
    Ok(out)
}

pub fn cmd_verify(args: &VerifyArgs, fx: &Fixtures) -> Result<Output> {
    let cfg = VerifyConfig { n_max: args.n_max, m_max: args.m_max, g_max: args.g_max };
    let report = verify::run_with(args.suite.into(), &cfg, fx)?;
    let mut out = Output::default();
    out.set("suite", Suite::from(args.suite).to_string());
    out.report = Some(report);
    Ok(out)
}

pub fn cmd_invariants(args: &InvariantArgs) -> Result<Output> {
    let input = &args.input;
    let mut out = Output::default();
    if let Some(path) = &input.betti {
        let mut p: PoincarePoly = parse_json(path)?;
        p.connected = true;
        p.closed_oriented = true;
        p.validate()?;
        betti_values(&mut out, &p)?;
        let holonomy = args.holonomy.unwrap_or(match p.d {
            7 => Holonomy::G2,
            8 => Holonomy::Spin7,
            d if d % 4 == 0 => Holonomy::Hk,
            _ => Holonomy::None,
        });
        out.set("holonomy", format!("{holonomy:?}").to_lowercase());
        match holonomy {
            Holonomy::Hk => {
                if let Ok((lhs, rhs)) = fo_form(&p) {
                    out.set("m_e", lhs.to_string());
                    out.set("fo_rhs", rhs.to_string());
                }
                out.add_report(hk_report(&p)?);
            }
            Holonomy::G2 => {
                let v = g2_quantity(&p)?;
                out.set("P'(-1)", v);
                let mut r = Report::new();
                r.push(Check::expect(v == 0, "G2 P'(-1) = 0", "P'(-1) = -b3 + 3b2 - 5b1 + 7 = 0", format!("P'(-1) = {v}")));
                out.add_report(r);
            }
            Holonomy::Spin7 => out.add_report(spin7_report(&p, args.b4_minus, None)?),
            Holonomy::Qk => {
                let b = QkBetti::from_poincare(&p)?;
                out.add_report(qk_report(&b));
            }
            Holonomy::None => {}
        }
    } else if let Some(path) = &input.hodge {
        let h: HodgeDiamond = parse_json(path)?;
        h.validate()?;
        let p = hodge_to_poincare(&h);
        out.set("n", h.n);
        out.set("chi", hodge_to_chi(&h).coeffs);
        betti_values(&mut out, &p)?;
        let mut r = Report::new();
        r.push(phi_lemma_check(&h)?);
        if h.n.is_multiple_of(2) {
            r.push(mirror_sum_check(&h)?);
        }
        out.add_report(r);
    } else if let Some(path) = &input.chern {
        let data: ChernNumbers = serde_json::from_str(&read(path)?).map_err(|e| Error::Input(e.to_string()))?;
        let chi = chi_from_chern(&data)?;
        out.set("n", data.dim());
        out.set("euler", data.euler()?);
        out.set("chi", &chi.coeffs);
        if data.euler()? != 0 {
            out.set("gamma", gamma(&data)?);
            out.set("psi", psi(&chi)?);
        }
        out.add_report(theorem_checks(&data, None)?);
        out.add_report(divisibility_suite(&data)?);
    } else if let Some(path) = &input.qk {
        let b: QkBetti = parse_json(path)?;
        b.validate()?;
        out.set("m", b.m);
        out.set("beta", &b.beta);
        out.set("constraint", qk_constraint(&b));
        out.add_report(qk_report(&b));
    }
    Ok(out)
}

fn qk_report(b: &QkBetti) -> Report {
    let v = qk_constraint(b);
    let mut r = Report::new();
    r.push(Check::expect(
        v.is_zero(),
        "quaternion-Kahler constraint",
        "sum_k k(m+1-k)(m+1-2k) beta_2k = 0",
        format!("sum = {v}"),
    ));
    r
}

pub fn dispatch(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Kclass(a) => cmd_kclass(a),
        Command::Hilb(a) => cmd_surface(a, true),
        Command::Sym(a) => cmd_surface(a, false),
        Command::Verify(a) => cmd_verify(a, &Fixtures::load_from(cli.fixtures.as_deref())?),
        Command::Invariants(a) => cmd_invariants(a),
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(out) => {
            print!("{}", out.render(cli.format));
            if out.failed() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            if cli.format == Format::Json {
                println!("{}", json!({ "error": e.to_string() }));
            }
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
