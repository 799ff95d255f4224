//! Library half of the `gi` command: argument model, document I/O and
//! dispatch to `ginv-core`.

pub mod decimal;
pub mod document;
pub mod literal;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use ginv_core::{
    self as core, BothRoute, EqCase, EqSolution, ExactMatrix, ExactScalar, Form, GiReport,
    InverseKind, MatrixPoly, ProjectorKind, Representation, Side, SolveReport, WeightPair,
    WorkBudget,
};
use serde_json::{json, Map, Value};
use thiserror::Error;

pub use document::{load_matrix, MatrixDocument, Render};
pub use literal::{parse_scalar, ParseError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Verification(_) => 4,
        }
    }
}

impl From<core::Error> for CliError {
    fn from(e: core::Error) -> Self {
        match e {
            core::Error::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            core::Error::VerificationFailed(_) => CliError::Verification(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "gi", version, about = "Exact generalized inverses and Cramer-rule solvers")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Input matrix A (JSON, `.csv` for real matrices, `-` for stdin).
    #[arg(long = "in", global = true, value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// Right-hand side: vector for `solve`, matrix for `mateq` and `ode`.
    #[arg(long, global = true, value_name = "PATH")]
    pub rhs: Option<PathBuf>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Render scalars as decimals rounded to K fractional digits.
    #[arg(long, global = true, value_name = "K")]
    pub decimal: Option<usize>,
    /// Minor-sum work budget.
    #[arg(long, global = true, value_name = "N")]
    pub budget: Option<u64>,
    /// Worker threads; defaults to all cores.
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = FormArg::Auto)]
    pub form: FormArg,
    /// Re-check the result against its defining equations; exit 4 on failure.
    #[arg(long, global = true)]
    pub check: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    Auto,
    Row,
    Column,
}

impl From<FormArg> for Form {
    fn from(f: FormArg) -> Self {
        match f {
            FormArg::Auto => Form::Auto,
            FormArg::Row => Form::Row,
            FormArg::Column => Form::Column,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WhichArg {
    /// A⁺A
    In,
    /// AA⁺
    Out,
    /// AAᴰ
    DrazinLeft,
    /// AᴰA
    DrazinRight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveKind {
    Lsmin,
    Drazin,
    Wdrazin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EqArg {
    Ax,
    Xa,
    Axb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EqKind {
    Ls,
    Drazin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Db,
    Da,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    Mp,
    Wmp,
    Drazin,
    Group,
    Wdrazin,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Moore-Penrose inverse A⁺.
    Pinv,
    /// Weighted Moore-Penrose inverse with Hermitian positive definite weights.
    Wpinv {
        #[arg(long = "M", value_name = "PATH")]
        m: PathBuf,
        #[arg(long = "N", value_name = "PATH")]
        n: PathBuf,
    },
    /// Drazin inverse Aᴰ.
    Dinv,
    /// Group inverse (index at most one).
    Ginv,
    /// W-weighted Drazin inverse.
    Wdinv {
        #[arg(long = "W", value_name = "PATH")]
        w: PathBuf,
    },
    /// Orthogonal or Drazin projector.
    Proj {
        #[arg(long, value_enum)]
        which: WhichArg,
    },
    /// Cramer-rule solution of a vector system.
    Solve {
        #[arg(long, value_enum)]
        kind: SolveKind,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
        /// Weight W, for `--kind wdrazin`.
        #[arg(long = "W", value_name = "PATH")]
        w: Option<PathBuf>,
    },
    /// Matrix equations AX = B, XA = B, AXB = D.
    Mateq {
        #[arg(long, value_enum)]
        eq: EqArg,
        #[arg(long, value_enum)]
        kind: EqKind,
        /// Right factor B of AXB = D (D is `--rhs`).
        #[arg(long, value_name = "PATH")]
        b: Option<PathBuf>,
        /// Contraction order for AXB = D.
        #[arg(long, value_enum, default_value_t = RouteArg::Db)]
        route: RouteArg,
    },
    /// Polynomial partial solution of X' + AX = B (left) or X' + XA = B (right).
    Ode {
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
    },
    /// Check a candidate X (`--x`) against the defining equations of an inverse of A.
    Verify {
        #[arg(long, value_enum)]
        kind: VerifyKind,
        #[arg(long = "x", value_name = "PATH")]
        x: PathBuf,
        #[arg(long = "M", value_name = "PATH")]
        m: Option<PathBuf>,
        #[arg(long = "N", value_name = "PATH")]
        n: Option<PathBuf>,
        #[arg(long = "W", value_name = "PATH")]
        w: Option<PathBuf>,
    },
}

struct Ctx<'a> {
    g: &'a Global,
    render: Render,
    budget: WorkBudget,
}

impl Ctx<'_> {
    fn a(&self) -> Result<ExactMatrix, CliError> {
        self.required(self.g.input.as_deref(), "--in")
    }

    fn rhs(&self) -> Result<ExactMatrix, CliError> {
        self.required(self.g.rhs.as_deref(), "--rhs")
    }

    fn required(&self, p: Option<&Path>, flag: &str) -> Result<ExactMatrix, CliError> {
        let p = p.ok_or_else(|| CliError::Input(format!("{flag} is required for this command")))?;
        load_matrix(p)
    }

    fn form(&self) -> Form {
        self.g.form.into()
    }

    fn check(&self, a: &ExactMatrix, x: &ExactMatrix, kind: &InverseKind) -> Result<(), CliError> {
        if !self.g.check {
            return Ok(());
        }
        let report = core::verify_defining_equations(a, x, kind)?;
        if report.all_hold() {
            Ok(())
        } else {
            Err(CliError::Verification(format!(
                "result fails {}",
                report.failed().join(", ")
            )))
        }
    }

    fn report(&self, name: &str, rep: &GiReport) -> MatrixDocument {
        let mut doc = self.render.matrix(&rep.inverse);
        doc.name = Some(name.to_string());
        doc.denominator = Some(self.render.scalar(&rep.denominator));
        doc.extra.insert("rank".into(), json!(rep.rank_used));
        doc.extra.insert("index".into(), json!(rep.index_used));
        doc.extra
            .insert("representation".into(), json!(representation_name(rep.representation)));
        doc
    }
}

fn representation_name(r: Representation) -> &'static str {
    match r {
        Representation::ColumnForm => "column_form",
        Representation::RowForm => "row_form",
        Representation::FullRankAdjoint => "full_rank_adjoint",
    }
}

fn case_name(c: EqCase) -> String {
    match c {
        EqCase::LsLeft { full_rank } => format!("ls_left{}", if full_rank { "_full_rank" } else { "" }),
        EqCase::LsRight { full_rank } => format!("ls_right{}", if full_rank { "_full_rank" } else { "" }),
        EqCase::LsBoth(k) => format!("ls_both_{}", format!("{k:?}").to_lowercase()),
        EqCase::DrazinLeft => "drazin_left".into(),
        EqCase::DrazinRight => "drazin_right".into(),
        EqCase::DrazinBoth => "drazin_both".into(),
    }
}

fn as_vector(m: &ExactMatrix) -> Result<Vec<ExactScalar>, CliError> {
    if m.rows() == 1 || m.cols() == 1 {
        Ok(m.entries().to_vec())
    } else {
        Err(CliError::Input(format!(
            "--rhs must be a row or column vector, got {}x{}",
            m.rows(),
            m.cols()
        )))
    }
}

fn to_value(doc: &MatrixDocument) -> Value {
    serde_json::to_value(doc).expect("documents serialize")
}

fn solve_doc(ctx: &Ctx, rep: &SolveReport) -> Value {
    let mut doc = ctx.render.matrix(&rep.solution);
    doc.name = Some("solve".into());
    doc.extra.insert("rank".into(), json!(rep.rank_used));
    doc.extra.insert("index".into(), json!(rep.index_used));
    doc.extra
        .insert("residual_norm_sq".into(), json!(ctx.render.scalar(&rep.residual_norm_sq)));
    doc.extra.insert("range_condition".into(), json!(rep.range_condition));
    to_value(&doc)
}

fn eq_doc(ctx: &Ctx, sol: &EqSolution) -> Value {
    let mut doc = ctx.render.matrix(&sol.x);
    doc.name = Some("mateq".into());
    doc.extra.insert("case".into(), json!(case_name(sol.case)));
    doc.extra.insert("ranks".into(), json!([sol.ranks.0, sol.ranks.1]));
    doc.extra.insert("indices".into(), json!([sol.indices.0, sol.indices.1]));
    doc.extra
        .insert("residual_norm_sq".into(), json!(ctx.render.scalar(&sol.residual_norm_sq)));
    doc.extra.insert("constraint_holds".into(), json!(sol.constraint_holds));
    to_value(&doc)
}

fn poly_doc(ctx: &Ctx, p: &MatrixPoly) -> Value {
    let (rows, cols) = p.shape();
    let coefficients: Vec<Value> = p
        .coefficients()
        .iter()
        .map(|c| to_value(&ctx.render.matrix(c)))
        .collect();
    let mut out = Map::new();
    out.insert("name".into(), json!("ode"));
    out.insert("rows".into(), json!(rows));
    out.insert("cols".into(), json!(cols));
    out.insert("degree".into(), json!(p.degree()));
    out.insert("coefficients".into(), Value::Array(coefficients));
    Value::Object(out)
}

fn weights(m: Option<&Path>, n: Option<&Path>, a: &ExactMatrix) -> Result<WeightPair, CliError> {
    let m = match m {
        Some(p) => load_matrix(p)?,
        None => ExactMatrix::identity(a.rows()),
    };
    let n = match n {
        Some(p) => load_matrix(p)?,
        None => ExactMatrix::identity(a.cols()),
    };
    Ok(WeightPair::new(m, n)?)
}

/// Runs one command and returns the JSON result text.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let g = &cli.global;
    let ctx = Ctx {
        g,
        render: g.decimal.map_or(Render::Exact, Render::Decimal),
        budget: g.budget.map_or_else(WorkBudget::default, WorkBudget),
    };
    let value = match &cli.command {
        Command::Pinv => {
            let a = ctx.a()?;
            let rep = core::mp_inverse(&a, ctx.form(), ctx.budget)?;
            ctx.check(&a, &rep.inverse, &InverseKind::Mp)?;
            to_value(&ctx.report("pinv", &rep))
        }
        Command::Wpinv { m, n } => {
            let a = ctx.a()?;
            let w = weights(Some(m), Some(n), &a)?;
            let rep = core::weighted_mp_inverse(&a, &w, ctx.form(), ctx.budget)?;
            ctx.check(&a, &rep.inverse, &InverseKind::WeightedMp(w))?;
            to_value(&ctx.report("wpinv", &rep))
        }
        Command::Dinv => {
            let a = ctx.a()?;
            let rep = core::drazin_inverse(&a, ctx.form(), ctx.budget)?;
            ctx.check(&a, &rep.inverse, &InverseKind::Drazin)?;
            to_value(&ctx.report("dinv", &rep))
        }
        Command::Ginv => {
            let a = ctx.a()?;
            let rep = core::group_inverse(&a, ctx.form(), ctx.budget)?;
            ctx.check(&a, &rep.inverse, &InverseKind::Group)?;
            to_value(&ctx.report("ginv", &rep))
        }
        Command::Wdinv { w } => {
            let a = ctx.a()?;
            let w = load_matrix(w)?;
            let rep = core::w_drazin_inverse(&a, &w, ctx.form(), ctx.budget)?;
            ctx.check(&a, &rep.inverse, &InverseKind::WDrazin(w))?;
            to_value(&ctx.report("wdinv", &rep))
        }
        Command::Proj { which } => {
            let a = ctx.a()?;
            let kind = match which {
                WhichArg::In => ProjectorKind::In,
                WhichArg::Out => ProjectorKind::Out,
                WhichArg::DrazinLeft => ProjectorKind::DrazinLeft,
                WhichArg::DrazinRight => ProjectorKind::DrazinRight,
            };
            let p = core::projector(&a, kind, ctx.budget)?;
            let mut doc = ctx.render.matrix(&p);
            doc.name = Some("proj".into());
            to_value(&doc)
        }
        Command::Solve { kind, side, w } => {
            let a = ctx.a()?;
            let y = as_vector(&ctx.rhs()?)?;
            let rep = match (kind, side) {
                (SolveKind::Lsmin, SideArg::Left) => core::ls_min_norm_solve(&a, &y, ctx.budget)?,
                (SolveKind::Lsmin, SideArg::Right) => core::ls_min_norm_solve_row(&y, &a, ctx.budget)?,
                (SolveKind::Drazin, SideArg::Left) => core::drazin_solve(&a, &y, ctx.budget)?,
                (SolveKind::Drazin, SideArg::Right) => core::drazin_solve_row(&y, &a, ctx.budget)?,
                (SolveKind::Wdrazin, SideArg::Left) => {
                    let w = ctx.required(w.as_deref(), "--W")?;
                    core::w_drazin_solve(&a, &w, &y, ctx.budget)?
                }
                (SolveKind::Wdrazin, SideArg::Right) => {
                    return Err(CliError::Input("--kind wdrazin supports only --side left".into()))
                }
            };
            solve_doc(&ctx, &rep)
        }
        Command::Mateq { eq, kind, b, route } => {
            let a = ctx.a()?;
            let rhs = ctx.rhs()?;
            let route = match route {
                RouteArg::Db => BothRoute::ViaDB,
                RouteArg::Da => BothRoute::ViaDA,
            };
            let sol = match (eq, kind) {
                (EqArg::Ax, EqKind::Ls) => core::ls_solve_left(&a, &rhs, ctx.budget)?,
                (EqArg::Ax, EqKind::Drazin) => core::dz_solve_left(&a, &rhs, ctx.budget)?,
                (EqArg::Xa, EqKind::Ls) => core::ls_solve_right(&a, &rhs, ctx.budget)?,
                (EqArg::Xa, EqKind::Drazin) => core::dz_solve_right(&a, &rhs, ctx.budget)?,
                (EqArg::Axb, kind) => {
                    let b = ctx.required(b.as_deref(), "--b")?;
                    match kind {
                        EqKind::Ls => core::ls_solve_both_route(&a, &b, &rhs, route, ctx.budget)?,
                        EqKind::Drazin => core::dz_solve_both_route(&a, &b, &rhs, route, ctx.budget)?,
                    }
                }
            };
            eq_doc(&ctx, &sol)
        }
        Command::Ode { side } => {
            let a = ctx.a()?;
            let b = ctx.rhs()?;
            let (p, side) = match side {
                SideArg::Left => (core::ode_left_partial(&a, &b, ctx.budget)?, Side::Left),
                SideArg::Right => (core::ode_right_partial(&a, &b, ctx.budget)?, Side::Right),
            };
            if g.check && !core::substitute_check(&p, &a, &b, side)?.0 {
                return Err(CliError::Verification("partial solution fails substitution".into()));
            }
            poly_doc(&ctx, &p)
        }
        Command::Verify { kind, x, m, n, w } => {
            let a = ctx.a()?;
            let x = load_matrix(x)?;
            let kind = match kind {
                VerifyKind::Mp => InverseKind::Mp,
                VerifyKind::Wmp => InverseKind::WeightedMp(weights(m.as_deref(), n.as_deref(), &a)?),
                VerifyKind::Drazin => InverseKind::Drazin,
                VerifyKind::Group => InverseKind::Group,
                VerifyKind::Wdrazin => InverseKind::WDrazin(ctx.required(w.as_deref(), "--W")?),
            };
            let report = core::verify_defining_equations(&a, &x, &kind)?;
            let equations: Vec<Value> = report
                .equations
                .iter()
                .map(|e| json!({ "name": e.name, "holds": e.holds }))
                .collect();
            json!({ "name": "verify", "all_hold": report.all_hold(), "equations": equations })
        }
    };
    Ok(serde_json::to_string_pretty(&value).expect("json values serialize") + "\n")
}

/// Executes `cli`, writes the result, and returns the exit code.
pub fn run(cli: &Cli) -> i32 {
    if let Some(n) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("gi: {e}");
            return 2;
        }
    }
    let result = execute(cli).and_then(|text| match &cli.global.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("gi: {e}");
            e.exit_code()
        }
    }
}
