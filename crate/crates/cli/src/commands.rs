use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use supercapelli_core::capelli::{sigma_normalize, sp_star, symbol_preimage, CapelliSolver};
use supercapelli_core::exactmath::MultiPoly;
use supercapelli_core::hooks::{
    enumerate_hooks, frobenius_point, gamma_map, gamma_star_map, HookParams, HookPartition, Theta,
};
use supercapelli_core::superlie::{gelfand_element, parse_uea, q_projection, HcSign, SuperDims};
use supercapelli_core::weyl::{spherical_vector, t_sigma, CapelliData, SuperPerm, WModel};
use supercapelli_core::{Error, Result};

use crate::cache::Cache;
use crate::suites::{run_suite, SuiteOptions, SUITES};

#[derive(Parser, Debug)]
#[command(name = "supercapelli", version, about = "Capelli operators on S^2(C^{m|2n}) in exact arithmetic")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Directory for memoized results (falls back to SUPERCAPELLI_CACHE).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Hc,
    Interp,
    Both,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Rank {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
}

#[derive(Args, Debug, Clone)]
pub struct Hook {
    #[command(flatten)]
    pub rank: Rank,
    /// Comma-separated parts, e.g. "2,1"; empty for the empty partition.
    #[arg(long, allow_hyphen_values = true)]
    pub partition: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the (m|n)-hook partitions of a given size.
    Hooks {
        #[command(flatten)]
        rank: Rank,
        #[arg(long, default_value = "1/2")]
        theta: String,
        #[arg(long)]
        size: u32,
        /// Include every size up to --size.
        #[arg(long)]
        upto: bool,
    },
    /// Γ(b).
    Gamma {
        #[command(flatten)]
        hook: Hook,
        #[arg(long, default_value = "1/2")]
        theta: String,
    },
    /// Γ*(b), the highest weight labelled by b.
    GammaStar {
        #[command(flatten)]
        hook: Hook,
    },
    /// Frobenius coordinates F(b).
    Frobenius {
        #[command(flatten)]
        hook: Hook,
        #[arg(long, default_value = "1/2")]
        theta: String,
    },
    /// str(𝐄^d) in gl(m|n) and its Harish-Chandra projection.
    Gelfand {
        #[command(flatten)]
        rank: Rank,
        #[arg(long)]
        d: usize,
    },
    /// Harish-Chandra projection of an element of U(gl(m|n)).
    Hc {
        #[command(flatten)]
        rank: Rank,
        #[arg(long, conflicts_with = "minus")]
        plus: bool,
        #[arg(long)]
        minus: bool,
        /// Inline expression such as "E(1,1b)E(1b,1)", or a file containing one.
        #[arg(long)]
        expr: String,
    },
    /// t_σ on S^2(C^{m|n}).
    TSigma {
        #[command(flatten)]
        rank: Rank,
        /// One-line notation, e.g. "2,1,4,3".
        #[arg(long)]
        sigma: String,
    },
    /// The Capelli operator D_λ, λ = Γ*(b), on S^2(C^{m|2n}).
    CapelliOp {
        #[command(flatten)]
        hook: Hook,
    },
    /// Central preimages: of the symbol t_σ (--sigma) or of D_λ (--partition).
    CapelliPreimage {
        #[command(flatten)]
        rank: Rank,
        #[arg(long, conflicts_with = "partition")]
        sigma: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        partition: Option<String>,
    },
    /// The eigenvalue polynomial c_λ.
    CPoly {
        #[command(flatten)]
        hook: Hook,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// The spherical polynomial d_λ.
    DPoly {
        #[command(flatten)]
        hook: Hook,
    },
    /// The spherical vector 𝐝_λ in 𝒫^d(W).
    Spherical {
        #[command(flatten)]
        hook: Hook,
    },
    /// The shifted super Jack polynomial SP*_b.
    SpStar {
        #[command(flatten)]
        hook: Hook,
        #[arg(long, default_value = "1/2")]
        theta: String,
    },
    /// Run a verification suite (or "all").
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, requires = "n")]
        m: Option<usize>,
        #[arg(long, requires = "m")]
        n: Option<usize>,
        #[arg(long)]
        dmax: Option<usize>,
    },
}

/// What a command produced: a JSON value and its text rendering, plus
/// whether every check it performed passed.
pub struct Output {
    pub json: Value,
    pub text: String,
    pub pass: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output { json, text, pass: true }
    }
}

fn theta(s: &str) -> Result<Theta> {
    match s.trim() {
        "1/2" | "half" | "0.5" => Ok(Theta::Half),
        "1" | "one" => Ok(Theta::One),
        _ => Err(Error::InvalidInput(format!("theta must be 1/2 or 1, got {s:?}"))),
    }
}

fn params(rank: Rank, t: Theta) -> HookParams {
    HookParams { m: rank.m, n: rank.n, theta: t }
}

fn partition(hook: &Hook, t: Theta) -> Result<HookPartition> {
    HookPartition::parse(&hook.partition, params(hook.rank, t))
}

fn poly_output(label: String, p: &MultiPoly) -> Output {
    Output::ok(serde_json::to_value(p.to_json()).expect("polynomial JSON"), format!("{label} = {p}"))
}

fn cached(cache: &Cache, key: Value, f: impl FnOnce() -> Result<Value>) -> Result<Value> {
    cache.get_or_compute(&key, f)
}

pub fn execute(cli: &Cli) -> Result<Output> {
    let cache = Cache::resolve(cli.cache_dir.as_deref());
    match &cli.command {
        Command::Hooks { rank, theta: t, size, upto } => {
            let hooks = enumerate_hooks(params(*rank, theta(t)?), *size, *upto);
            let names: Vec<String> = hooks.iter().map(|b| b.to_string()).collect();
            Ok(Output::ok(json!({ "partitions": names }), names.join("\n")))
        }
        Command::Gamma { hook, theta: t } => {
            let w = gamma_map(&partition(hook, theta(t)?)?);
            Ok(Output::ok(w.to_json(), w.to_string()))
        }
        Command::GammaStar { hook } => {
            let w = gamma_star_map(&partition(hook, Theta::Half)?)?;
            Ok(Output::ok(w.to_json(), w.to_string()))
        }
        Command::Frobenius { hook, theta: t } => {
            let f = frobenius_point(&partition(hook, theta(t)?)?);
            let show = |v: &[supercapelli_core::exactmath::Rational]| {
                v.iter().map(supercapelli_core::exactmath::fmt_rational).collect::<Vec<_>>()
            };
            let text = format!("x = ({}) y = ({})", show(&f.x).join(","), show(&f.y).join(","));
            Ok(Output::ok(json!({ "x": show(&f.x), "y": show(&f.y) }), text))
        }
        Command::Gelfand { rank, d } => {
            let dims = SuperDims::new(rank.m, rank.n);
            let z = gelfand_element(dims, *d)?;
            let hc = z.hc_plus();
            let json = json!({ "element": z.to_json(), "hc_plus": hc.to_json() });
            Ok(Output::ok(json, format!("str(E^{d}) = {z}\nHC+ = {hc}")))
        }
        Command::Hc { rank, plus: _, minus, expr } => {
            let dims = SuperDims::new(rank.m, rank.n);
            let text = match std::fs::read_to_string(expr) {
                Ok(s) => s,
                Err(_) => expr.clone(),
            };
            let a = parse_uea(dims, text.trim())?;
            let sign = if *minus { HcSign::Minus } else { HcSign::Plus };
            let p = supercapelli_core::superlie::hc_project(&a, sign);
            let mut json = json!({ "hc": p.to_json() });
            if rank.n % 2 == 0 {
                json["q"] = serde_json::to_value(q_projection(&p, dims)?.to_json()).expect("polynomial JSON");
            }
            Ok(Output::ok(json, format!("HC{} = {p}", if *minus { "-" } else { "+" })))
        }
        Command::TSigma { rank, sigma } => {
            let model = std::sync::Arc::new(WModel::new(SuperDims::new(rank.m, rank.n)));
            let t = t_sigma(&model, &SuperPerm::parse(sigma)?)?;
            Ok(Output::ok(t.to_json(), t.to_string()))
        }
        Command::CapelliOp { hook } => {
            let b = partition(hook, Theta::Half)?;
            let key = json!({ "kind": "capelli-op", "m": hook.rank.m, "n": hook.rank.n, "partition": b.parts() });
            let json = cached(&cache, key, || {
                let op = CapelliData::new(hook.rank.m, hook.rank.n).capelli_operator(&b)?;
                Ok(json!({ "partition": b.to_string(), "text": op.to_string(), "operator": op.to_json() }))
            })?;
            let text = format!("D{b} = {}", json["text"].as_str().unwrap_or_default());
            Ok(Output::ok(json, text))
        }
        Command::CapelliPreimage { rank, sigma, partition: part } => match (sigma, part) {
            (Some(s), _) => {
                let sigma = SuperPerm::parse(s)?;
                let dec = sigma_normalize(&sigma)?;
                let z = symbol_preimage(SuperDims::new(rank.m, rank.n), &sigma)?;
                let json = json!({ "decomposition": dec.to_json(), "preimage": z.to_json() });
                let text = format!("blocks {:?}\nz = {z}", dec.lengths());
                Ok(Output::ok(json, text))
            }
            (None, Some(p)) => {
                let b = HookPartition::parse(p, HookParams::half(rank.m, rank.n))?;
                let mut solver = CapelliSolver::new(rank.m, rank.n);
                let z = solver.z_lambda(&b)?;
                let pass = solver.preimage_image(&b)? == solver.capelli_operator(&b)?;
                let json = json!({ "partition": b.to_string(), "preimage": z.to_json(), "verified": pass });
                Ok(Output { json, text: format!("z{b} = {z}\nρ̌(z) = D: {pass}"), pass })
            }
            (None, None) => Err(Error::InvalidInput("give --sigma or --partition".into())),
        },
        Command::CPoly { hook, method } => {
            let b = partition(hook, Theta::Half)?;
            let mut solver = CapelliSolver::new(hook.rank.m, hook.rank.n);
            let hc = matches!(method, Method::Hc | Method::Both).then(|| solver.c_poly_hc(&b)).transpose()?;
            let interp = matches!(method, Method::Interp | Method::Both).then(|| solver.c_poly_interp(&b)).transpose()?;
            let agree = match (&hc, &interp) {
                (Some(a), Some(b)) => a == b,
                _ => true,
            };
            let chosen = hc.as_ref().or(interp.as_ref()).expect("one method ran");
            let mut json = chosen.to_json();
            if *method == Method::Both {
                json["routes_agree"] = json!(agree);
            }
            let mut text = format!("c{b} = {}", chosen.poly);
            if *method == Method::Both {
                text.push_str(&format!("\nHC and interpolation routes agree: {agree}"));
            }
            Ok(Output { json, text, pass: agree })
        }
        Command::DPoly { hook } => {
            let b = partition(hook, Theta::Half)?;
            let p = CapelliSolver::new(hook.rank.m, hook.rank.n).spherical_poly(&b)?;
            Ok(poly_output(format!("d{b}"), &p))
        }
        Command::Spherical { hook } => {
            let b = partition(hook, Theta::Half)?;
            let key = json!({ "kind": "spherical", "m": hook.rank.m, "n": hook.rank.n, "partition": b.parts() });
            let json = cached(&cache, key, || {
                let v = spherical_vector(&mut CapelliData::new(hook.rank.m, hook.rank.n), &b)?;
                Ok(json!({ "partition": b.to_string(), "text": v.render("y"), "vector": v.to_json() }))
            })?;
            let text = format!("d{b} = {}", json["text"].as_str().unwrap_or_default());
            Ok(Output::ok(json, text))
        }
        Command::SpStar { hook, theta: t } => {
            let b = partition(hook, theta(t)?)?;
            Ok(poly_output(format!("SP*{b}"), &sp_star(&b)?))
        }
        Command::Verify { suite, m, n, dmax } => {
            let opts = SuiteOptions { rank: m.zip(*n), dmax: *dmax };
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let mut reports = Vec::new();
            for name in names {
                reports.push(run_suite(name, &opts)?);
            }
            let pass = reports.iter().all(|r| r.pass());
            let json = if reports.len() == 1 {
                reports[0].to_json()
            } else {
                json!({ "pass": pass, "suites": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>() })
            };
            let text = reports.iter().map(|r| r.to_text()).collect::<Vec<_>>().join("\n");
            Ok(Output { json, text, pass })
        }
    }
}

/// Exit code for a library error: 2 for bad input, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidInput(_)
        | Error::Parse(_)
        | Error::FrameMismatch(_)
        | Error::LengthMismatch { .. }
        | Error::ContextMismatch(_) => 2,
        _ => 1,
    }
}
