//! `psatz`: certify, verify and inspect nonnegativity certificates from the command line.
//!
//! Exit codes: 0 success, 1 negative target or invalid certificate, 2 parse or usage error,
//! 3 unsupported set, 4 any other refusal.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use psatz_core::arith::set_factor_seed;
use psatz_core::certgen::{cantor_certify, irrational_ray_certify};
use psatz_core::certificate::{from_json, to_json};
use psatz_core::io::{certificate_latex, parse_poly_in, parse_poly_list, parse_set, render_endpoint, render_poly, render_set};
use psatz_core::semialg::{natural_generators, saturation_module, saturation_preordering_noncompact, solve_generators};
use psatz_core::{
    certify_generated, certify_with, is_nonneg_on, verify, Certificate, CertifyConfig, Polynomial, Refusal, RefusalReason, SemiAlgSet,
};

const CITE_PREORDERING: &str =
    "noncompact K_S with rational boundary: the preordering of S is saturated iff S contains the natural generators of K_S up to positive scaling";
const CITE_MODULE_COMPACT: &str = "compact K: the quadratic module of the natural generators is archimedean, hence saturated";
const CITE_MODULE_NONCOMPACT: &str =
    "noncompact K: the quadratic module of the natural generators is saturated iff there is at most one generator, or two with an isolated point";

#[derive(Parser)]
#[command(name = "psatz", version, about = "Exact univariate Positivstellensatz certificates over Q")]
struct Cli {
    /// Seed for the randomized parts of exact factoring; results do not depend on it.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,
    /// Variable symbol used in polynomial input and output.
    #[arg(long = "var", global = true, default_value = "x")]
    var: String,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Certify f >= 0 on K and print the certificate as JSON.
    Certify {
        #[arg(long)]
        poly: String,
        /// Set description, e.g. "[0,1] U [2,inf)".
        #[arg(long, required_unless_present = "gens", conflicts_with = "gens")]
        set: Option<String>,
        /// Generators "g1; g2; ..." describing K = {g_i >= 0}, instead of --set.
        #[arg(long)]
        gens: Option<String>,
        /// Write the JSON certificate here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Cap on refinement rounds in the search loops.
        #[arg(long)]
        max_iter: Option<usize>,
        /// Print the certificate as LaTeX on stdout.
        #[arg(long)]
        latex: bool,
    },
    /// Check a JSON certificate exactly; prints the report as JSON.
    Verify {
        #[arg(long)]
        cert: PathBuf,
        /// Also require the generators to be the natural generators of this set, up to positive scaling.
        #[arg(long)]
        set: Option<String>,
        /// Treat a violated degree bound as invalid.
        #[arg(long)]
        check_degree_bound: bool,
    },
    /// Decide f >= 0 on K; prints a witness when it fails.
    CheckPos {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        set: String,
    },
    /// Print the natural generators of K, one per line.
    NaturalGens {
        #[arg(long)]
        set: String,
    },
    /// Print the set K_S = {x : g >= 0 for all g in S}.
    SolveSet {
        #[arg(long)]
        gens: String,
    },
    /// Decide saturation of the preordering of S, or with --module of the quadratic module.
    Saturation {
        #[arg(long, required_unless_present = "set")]
        gens: Option<String>,
        /// With --module: the set whose natural generators form the module.
        #[arg(long, requires = "module", conflicts_with = "gens")]
        set: Option<String>,
        #[arg(long)]
        module: bool,
    },
    /// Certify f >= 0 on the middle-thirds Cantor set.
    Cantor {
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 12)]
        max_level: u32,
    },
    /// Certify f >= 0 on [c, inf), c the largest real root of an irreducible polynomial.
    Ray {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        minpoly: String,
    },
}

/// `println!` that tolerates a closed stdout, as when piped into `head`.
macro_rules! say {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

/// A failure carrying its exit code.
struct Exit(u8, String);

type Out = Result<(), Exit>;

fn parse_error(what: &str, e: impl std::fmt::Display) -> Exit {
    Exit(2, format!("cannot parse {what}: {e}"))
}

fn refusal_exit(r: &Refusal) -> Exit {
    let mut msg = format!("refused: {}: {}", r.reason.as_str(), r.detail);
    if let Some(w) = &r.witness {
        msg.push_str(&format!("\nwitness: {}", render_endpoint(w)));
    }
    if let Some(c) = &r.citation {
        msg.push_str(&format!("\ncitation: {c}"));
    }
    if let Some(l) = r.required_level {
        msg.push_str(&format!("\nrequired level: {l}"));
    }
    let code = match r.reason {
        RefusalReason::NotNonnegative => 1,
        RefusalReason::UnsupportedEndpointDegree
        | RefusalReason::NotFinitelyGenerated
        | RefusalReason::DegreeLimitExceeded
        | RefusalReason::EmptySet => 3,
        _ => 4,
    };
    Exit(code, msg)
}

fn poly(src: &str, var: &str) -> Result<Polynomial, Exit> {
    parse_poly_in(src, var).map_err(|e| parse_error("polynomial", e))
}

fn set(src: &str) -> Result<SemiAlgSet, Exit> {
    parse_set(src).map_err(|e| parse_error("set", e))
}

fn gens(src: &str, var: &str) -> Result<Vec<Polynomial>, Exit> {
    parse_poly_list(src, var).map_err(|e| parse_error("generators", e))
}

fn emit(c: &Certificate, out: Option<&PathBuf>, latex: bool) -> Out {
    let json = to_json(c);
    match out {
        Some(path) => fs::write(path, json + "\n").map_err(|e| Exit(4, format!("cannot write {}: {e}", path.display())))?,
        None if !latex => say!("{json}"),
        None => {}
    }
    if latex {
        say!("{}", certificate_latex(c));
    }
    Ok(())
}

fn run(cli: Cli) -> Out {
    let var = cli.var.as_str();
    match cli.cmd {
        Cmd::Certify { poly: p, set: s, gens: g, out, max_iter, latex } => {
            let f = poly(&p, var)?;
            let mut cfg = CertifyConfig::default();
            if let Some(n) = max_iter {
                cfg.max_refinements = n;
            }
            let res = match (s, g) {
                (Some(s), _) => certify_with(&f, &set(&s)?, &cfg),
                (None, Some(g)) => certify_generated(&f, &gens(&g, var)?, &cfg),
                (None, None) => unreachable!("clap requires one of --set and --gens"),
            };
            let mut c = res.map_err(|r| refusal_exit(&r))?;
            c.variable = var.to_string();
            emit(&c, out.as_ref(), latex)
        }
        Cmd::Verify { cert, set: s, check_degree_bound } => {
            let text = fs::read_to_string(&cert).map_err(|e| Exit(2, format!("cannot read {}: {e}", cert.display())))?;
            let c = from_json(&text).map_err(|e| parse_error("certificate", e))?;
            let k = s.as_deref().map(set).transpose()?;
            let mut rep = verify(&c, k.as_ref());
            // Naming a set asks for the naturality check, so a mismatch fails the command.
            if rep.generators_natural == Some(false) {
                rep.valid = false;
            }
            if check_degree_bound && !rep.degree_bound_ok {
                rep.valid = false;
                rep.messages.push("degree bound violated".into());
            }
            say!("{}", serde_json::to_string_pretty(&rep).expect("report serializes"));
            if rep.valid {
                Ok(())
            } else {
                Err(Exit(1, "certificate is invalid".into()))
            }
        }
        Cmd::CheckPos { poly: p, set: s } => {
            let (f, k) = (poly(&p, var)?, set(&s)?);
            let rep = is_nonneg_on(&f, &k).map_err(|e| Exit(4, e.to_string()))?;
            if rep.nonnegative {
                say!("verdict: nonnegative");
                return Ok(());
            }
            say!("verdict: negative");
            if let Some(w) = &rep.witness {
                say!("witness: {}", render_endpoint(w));
            }
            Err(Exit(1, String::new()))
        }
        Cmd::NaturalGens { set: s } => {
            let n = natural_generators(&set(&s)?).map_err(|r| refusal_exit(&r))?;
            for g in &n.gens {
                say!("{}", render_poly(g, var));
            }
            Ok(())
        }
        Cmd::SolveSet { gens: g } => {
            let k = solve_generators(&gens(&g, var)?).map_err(|r| refusal_exit(&r))?;
            say!("{}", render_set(&k));
            Ok(())
        }
        Cmd::Saturation { gens: g, set: s, module } => {
            let (verdict, cite) = if module {
                let k = match (s, g) {
                    (Some(s), _) => set(&s)?,
                    (None, Some(g)) => solve_generators(&gens(&g, var)?).map_err(|r| refusal_exit(&r))?,
                    (None, None) => unreachable!("clap requires one of --gens and --set"),
                };
                let v = saturation_module(&k).map_err(|r| refusal_exit(&r))?;
                (v, if k.is_compact() { CITE_MODULE_COMPACT } else { CITE_MODULE_NONCOMPACT })
            } else {
                let s = gens(g.as_deref().unwrap_or_default(), var)?;
                (saturation_preordering_noncompact(&s).map_err(|r| refusal_exit(&r))?, CITE_PREORDERING)
            };
            say!("{verdict}");
            say!("criterion: {cite}");
            Ok(())
        }
        Cmd::Cantor { poly: p, max_level } => {
            let f = poly(&p, var)?;
            let (rep, mut c) = cantor_certify(&f, max_level).map_err(|r| refusal_exit(&r))?;
            c.variable = var.to_string();
            say!("level: {}", rep.level);
            say!("{}", to_json(&c));
            Ok(())
        }
        Cmd::Ray { poly: p, minpoly } => {
            let (f, m) = (poly(&p, var)?, poly(&minpoly, var)?);
            let mut d = irrational_ray_certify(&f, &m).map_err(|r| refusal_exit(&r))?;
            d.certificate.variable = var.to_string();
            if let Some(r) = &d.r {
                eprintln!("r = {}", psatz_core::io::render_rational(r));
            }
            say!("{}", to_json(&d.certificate));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    set_factor_seed(cli.seed);
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Exit(code, msg)) => {
            if !msg.is_empty() {
                eprintln!("{msg}");
            }
            ExitCode::from(code)
        }
    }
}
