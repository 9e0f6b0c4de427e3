//! `ternary`: command-line front end for the ternary-core library.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use ternary_core::apolarity::{harmonic, invariant_a, trilinear};
use ternary_core::fiber::{appendix, d_fiber_check, fermat_fiber, named_quartic, FiberReport, FiberStatus, NamedQuartic};
use ternary_core::groebner::{verify_groebner, MonomialOrder, OrderedPoly};
use ternary_core::jacobian::{kappa, RhoEvaluation};
use ternary_core::lie::{check_lie_identity, sl3_basis, Derivation};
use ternary_core::{arith, Error, TernaryForm, VariableFamily};

#[derive(Parser)]
#[command(name = "ternary", version, about = "Exact computations with the harmonic contravariant of ternary forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for data-parallel kernels.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Args)]
struct FormArgs {
    /// A homogeneous form in x, y, z.
    #[arg(long, conflicts_with = "named")]
    form: Option<String>,

    /// One of Fer, Fer', C0, C1, C2, C3, D, Q, Klein.
    #[arg(long)]
    named: Option<String>,

    /// Degree; inferred from the form when omitted.
    #[arg(long)]
    n: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// The dual form h_n(q) = J_n(q, q).
    Harmonic(FormArgs),
    /// t_n(q1, q2, q3); pass --form three times.
    Trilinear {
        #[arg(long = "form", num_args = 1, required = true)]
        forms: Vec<String>,
        #[arg(long)]
        n: Option<u32>,
    },
    /// The cubic invariant A_n(q) = t_n(q, q, q).
    InvariantA(FormArgs),
    /// rho_n(q) = det(R_n) / kappa_n.
    Rho(FormArgs),
    /// kappa_n, the product of i!j!k! over degree-n monomials.
    Kappa {
        #[arg(long)]
        n: u32,
    },
    /// Checks <h_n(q), g q> = 0 for the sl_3 basis or one derivation.
    LieCheck {
        #[command(flatten)]
        form: FormArgs,
        /// e.g. "x*dx - y*dy"; defaults to the whole basis.
        #[arg(long)]
        derivation: Option<String>,
    },
    /// Buchberger's criterion on polynomials in r, s1, s2, s3, t1, t2, t3.
    GbVerify {
        /// A generator; repeat for several. Defaults to the Fermat fiber basis.
        #[arg(long = "poly")]
        polys: Vec<String>,
    },
    /// Degree and points of the fiber of h_4 over u^4 + v^4 + w^4.
    FiberFermat,
    /// Q over D, and with --deadline the full solve over D.
    FiberD {
        /// Seconds allowed for the full solve; omit to skip it.
        #[arg(long)]
        deadline: Option<u64>,
    },
    /// Prints a named quartic, or all of them.
    Named {
        name: Option<String>,
        #[arg(long = "named")]
        named: Option<String>,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Verification(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(String, Value, bool), Failure>;

fn parse_form(text: &str, n: Option<u32>) -> Result<TernaryForm, Failure> {
    let f = TernaryForm::parse_any(text)?;
    match n {
        Some(n) => Ok(f.with_degree(n)?),
        None => Ok(f),
    }
}

fn resolve(args: &FormArgs) -> Result<TernaryForm, Failure> {
    match (&args.form, &args.named) {
        (Some(t), None) => parse_form(t, args.n),
        (None, Some(name)) => {
            let (_, f) = named_quartic(name)?;
            match args.n {
                Some(n) if n != f.degree() => Err(Error::DegreeMismatch(f.degree(), n).into()),
                _ => Ok(f),
            }
        }
        _ => Err(Failure::Usage("pass exactly one of --form or --named".into())),
    }
}

fn primal(f: TernaryForm) -> Result<TernaryForm, Failure> {
    if f.family() != VariableFamily::Primal {
        return Err(Error::FamilyMismatch(f.family(), VariableFamily::Primal).into());
    }
    Ok(f)
}

fn fiber_text(r: &FiberReport) -> String {
    let mut out = format!(
        "target: {}\nstatus: {}\ndegree: {}\n",
        r.target,
        match r.status {
            FiberStatus::Complete => "complete",
            FiberStatus::Partial => "partial",
        },
        r.degree.map_or("unknown".into(), |d| d.to_string())
    );
    for p in &r.points {
        out.push_str(&format!(
            "point [{}] multiplicity {} {}{}: {}\n",
            p.coords.join(", "),
            p.multiplicity.map_or("?".into(), |m| m.to_string()),
            if p.reduced { "reduced" } else { "non-reduced" },
            p.name.as_ref().map_or(String::new(), |n| format!(" ({n})")),
            p.quartic
        ));
    }
    if !r.evidence.multiplicity_profile.is_empty() {
        let parts: Vec<String> = r
            .evidence
            .multiplicity_profile
            .iter()
            .map(|[m, k]| format!("{k} x multiplicity {m}"))
            .collect();
        out.push_str(&format!("profile: {}\n", parts.join(", ")));
    }
    for n in &r.evidence.notes {
        out.push_str(&format!("note: {n}\n"));
    }
    out.trim_end().to_string()
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Harmonic(a) => {
            let q = primal(resolve(a)?)?;
            let h = harmonic(&q)?;
            Ok((h.to_string(), json!({ "form": q.to_string(), "n": q.degree(), "harmonic": h.to_string() }), true))
        }
        Command::Trilinear { forms, n } => {
            if forms.len() != 3 {
                return Err(Failure::Usage(format!("trilinear needs three --form arguments, got {}", forms.len())));
            }
            let q: Vec<TernaryForm> = forms
                .iter()
                .map(|t| parse_form(t, *n).and_then(primal))
                .collect::<Result<_, _>>()?;
            let t = arith::rational_to_string(&trilinear(&q[0], &q[1], &q[2])?);
            let shown: Vec<String> = q.iter().map(ToString::to_string).collect();
            Ok((t.clone(), json!({ "forms": shown, "value": t }), true))
        }
        Command::InvariantA(a) => {
            let q = primal(resolve(a)?)?;
            let v = arith::rational_to_string(&invariant_a(&q)?);
            Ok((v.clone(), json!({ "form": q.to_string(), "n": q.degree(), "value": v }), true))
        }
        Command::Rho(a) => {
            let q = primal(resolve(a)?)?;
            let e = RhoEvaluation::evaluate(&q)?;
            let text = match e.factored() {
                Some(f) => format!("{f}\n{}", e.rho),
                None => e.rho.clone(),
            };
            Ok((text, serde_json::to_value(&e).expect("serializable"), true))
        }
        Command::Kappa { n } => {
            let k = kappa(*n);
            let f = arith::factor_small(&k, u64::from(*n) + 1).map(|f| arith::format_factorization(false, &f));
            let text = match &f {
                Some(f) => format!("{f}\n{k}"),
                None => k.to_string(),
            };
            Ok((text, json!({ "n": n, "kappa": k.to_string(), "factored": f }), true))
        }
        Command::LieCheck { form, derivation } => {
            let q = primal(resolve(form)?)?;
            let gs: Vec<Derivation> = match derivation {
                Some(d) => vec![d.parse()?],
                None => sl3_basis().to_vec(),
            };
            let mut lines = Vec::new();
            let mut rows = Vec::new();
            let mut ok = true;
            for g in gs {
                let v = check_lie_identity(&q, &g)?;
                ok &= num_traits_zero(&v);
                let s = arith::rational_to_string(&v);
                lines.push(format!("{g}: {s}"));
                rows.push(json!({ "derivation": g.to_string(), "value": s }));
            }
            Ok((lines.join("\n"), json!({ "form": q.to_string(), "checks": rows, "holds": ok }), ok))
        }
        Command::GbVerify { polys } => {
            let order = MonomialOrder::fiber();
            let g: Vec<OrderedPoly> = if polys.is_empty() {
                appendix::appendix_basis()
            } else {
                polys
                    .iter()
                    .map(|p| OrderedPoly::parse(p, order))
                    .collect::<Result<_, _>>()?
            };
            let r = verify_groebner(&g);
            let text = format!(
                "{} ({} pairs, {} failures)\ninitial ideal: {}",
                if r.passed() { "Groebner basis" } else { "not a Groebner basis" },
                r.pairs,
                r.failures.len(),
                r.initial_ideal.join(", ")
            );
            let ok = r.passed();
            Ok((text, serde_json::to_value(&r).expect("serializable"), ok))
        }
        Command::FiberFermat => {
            let r = fermat_fiber()?;
            Ok((fiber_text(&r), serde_json::to_value(&r).expect("serializable"), true))
        }
        Command::FiberD { deadline } => {
            let r = d_fiber_check(deadline.map(|s| Instant::now() + Duration::from_secs(s)))?;
            Ok((fiber_text(&r), serde_json::to_value(&r).expect("serializable"), true))
        }
        Command::Named { name, named } => match name.as_ref().or(named.as_ref()) {
            Some(n) => {
                let (q, f) = named_quartic(n)?;
                Ok((f.to_string(), json!({ "name": q.name(), "form": f.to_string() }), true))
            }
            None => {
                let all: Vec<(NamedQuartic, TernaryForm)> = NamedQuartic::ALL.iter().map(|q| (*q, q.form())).collect();
                let text = all.iter().map(|(q, f)| format!("{}: {f}", q.name())).collect::<Vec<_>>().join("\n");
                let v: Vec<Value> = all.iter().map(|(q, f)| json!({ "name": q.name(), "form": f.to_string() })).collect();
                Ok((text, Value::Array(v), true))
            }
        },
    }
}

fn num_traits_zero(v: &ternary_core::BigRational) -> bool {
    v.numer() == &ternary_core::BigInt::from(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok((text, value, ok)) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
            } else {
                println!("{text}");
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(1)
        }
    }
}
