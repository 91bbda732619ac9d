//! Command-line front end. [`run`] parses arguments, writes the result to
//! stdout and returns the process exit code.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::atoms::atom_index_sets;
use crate::base::BaseWord;
use crate::ctd::{anti_distinguished_diagram, ctd, distinguished_to_anti_walk, weight_for_base};
use crate::diagram::{arrow_diagram, cap_diagram, WeightDiagram};
use crate::error::Error;
use crate::oracle::run_verification_suite;
use crate::render::{render_ascii, render_json, render_svg, Overlay, Window};
use crate::roots::IncomparableSet;
use crate::tails::{
    dagger_weight, hwt, longtail_via_arrows, longtail_via_caps, longtail_via_ctd, phi, psi,
    s_value, search_tail_gap_with_jobs, sigma_lambda, witness_base, DaggerDiagram,
};
use crate::weight::ShiftedWeight;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "glmn",
    version,
    about = "Weight diagrams, bases and tails for gl(m|n)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Json,
    Svg,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Ascii)]
    format: Format,
    /// First displayed position.
    #[arg(long, allow_hyphen_values = true)]
    from: Option<i64>,
    /// Last displayed position.
    #[arg(long, allow_hyphen_values = true)]
    to: Option<i64>,
}

#[derive(Args, Debug)]
#[group(required = false, multiple = false)]
struct BaseChoice {
    /// Base as an e/d word such as "eddeed".
    #[arg(long)]
    base: Option<String>,
    /// Base by its incomparable root set, e.g. "1:3,2:4".
    #[arg(long, allow_hyphen_values = true)]
    set: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Weight diagram of a dominant weight, or of its transport to a base.
    Diagram {
        #[arg(allow_hyphen_values = true)]
        weight: String,
        #[command(flatten)]
        base: BaseChoice,
        #[command(flatten)]
        out: Output,
    },
    /// Arrow diagram: endpoints k_i and counts M_i.
    Arrows {
        #[arg(allow_hyphen_values = true)]
        weight: String,
        #[command(flatten)]
        out: Output,
    },
    /// Cap diagram.
    Caps {
        #[arg(allow_hyphen_values = true)]
        weight: String,
        #[command(flatten)]
        out: Output,
    },
    /// Change-of-tableau diagram.
    Ctd {
        #[arg(allow_hyphen_values = true)]
        weight: String,
        #[command(flatten)]
        out: Output,
    },
    /// Highest weight with respect to another base.
    Transport {
        #[arg(allow_hyphen_values = true)]
        weight: String,
        #[command(flatten)]
        base: BaseChoice,
        #[command(flatten)]
        out: Output,
    },
    /// Diagram at the anti-distinguished base.
    Anti {
        #[arg(allow_hyphen_values = true)]
        weight: String,
        #[command(flatten)]
        out: Output,
    },
    /// Highest weights along the walk from the distinguished to the anti-distinguished base.
    Walk {
        #[arg(allow_hyphen_values = true)]
        weight: String,
        #[command(flatten)]
        out: Output,
    },
    /// Atom decomposition.
    Atoms {
        #[arg(allow_hyphen_values = true)]
        weight: String,
        #[command(flatten)]
        out: Output,
    },
    /// tail(λ).
    Tail {
        #[arg(allow_hyphen_values = true)]
        weight: String,
        #[command(flatten)]
        out: Output,
    },
    /// longtail(λ).
    Longtail {
        #[arg(allow_hyphen_values = true)]
        weight: String,
        #[command(flatten)]
        out: Output,
    },
    /// All distinct transported highest weights.
    Hwt {
        #[arg(allow_hyphen_values = true)]
        weight: String,
        #[command(flatten)]
        out: Output,
    },
    /// The stacked diagram Φ(λ).
    Phi {
        #[arg(allow_hyphen_values = true)]
        weight: String,
        #[command(flatten)]
        out: Output,
    },
    /// Inverse of Φ on a diagram given as "p:SYM,p:SYM,...".
    Psi {
        #[arg(allow_hyphen_values = true)]
        diagram: String,
        #[command(flatten)]
        out: Output,
    },
    /// Run the oracle suite over all dominant weights of gl(m|n) in [0, bound].
    Verify {
        m: usize,
        n: usize,
        #[arg(long, default_value_t = 6)]
        bound: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Search for weights with tail < longtail in [0, 2·bound].
    Search {
        m: usize,
        n: usize,
        #[arg(long, default_value_t = 6)]
        bound: u32,
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[command(flatten)]
        out: Output,
    },
}

enum Failure {
    Usage(String),
    Input(Error),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

type CmdResult = std::result::Result<String, Failure>;

fn weight(s: &str) -> Result<ShiftedWeight, Error> {
    let w: ShiftedWeight = s.parse()?;
    w.check_dominant()?;
    Ok(w)
}

fn resolve_base(choice: &BaseChoice, lambda: &ShiftedWeight) -> Result<Option<BaseWord>, Error> {
    let (m, n) = (lambda.m(), lambda.n());
    let sigma = match (&choice.base, &choice.set) {
        (Some(b), _) => b.parse::<BaseWord>()?,
        (None, Some(s)) => BaseWord::from_incomparable_set(&s.parse::<IncomparableSet>()?, m, n)?,
        (None, None) => return Ok(None),
    };
    sigma.check_dims(lambda)?;
    Ok(Some(sigma))
}

fn show(d: &WeightDiagram, overlays: &[Overlay], out: &Output) -> CmdResult {
    let w = Window::fit(d, overlays, out.from, out.to)?;
    Ok(match out.format {
        Format::Ascii => render_ascii(d, overlays, w),
        Format::Json => render_json(d, overlays, w) + "\n",
        Format::Svg => render_svg(d, overlays, w),
    })
}

fn no_svg(out: &Output, cmd: &str) -> std::result::Result<(), Failure> {
    if out.format == Format::Svg {
        return Err(Failure::Usage(format!(
            "{cmd} has no svg output; use ascii or json"
        )));
    }
    Ok(())
}

fn json_line(v: serde_json::Value) -> String {
    v.to_string() + "\n"
}

fn execute(cmd: Command) -> CmdResult {
    match cmd {
        Command::Diagram {
            weight: w,
            base,
            out,
        } => {
            let lambda = weight(&w)?;
            let nu = match resolve_base(&base, &lambda)? {
                Some(sigma) => ctd(&lambda)?.transport(&lambda, &sigma)?,
                None => lambda,
            };
            show(&WeightDiagram::of(&nu), &[], &out)
        }
        Command::Arrows { weight: w, out } => {
            let lambda = weight(&w)?;
            let a = arrow_diagram(&lambda)?;
            if out.format == Format::Json {
                return Ok(json_line(
                    json!({ "starts": a.starts, "k": a.ends, "M": a.counts }),
                ));
            }
            let mut s = show(&WeightDiagram::of(&lambda), &[Overlay::arrows(&a)], &out)?;
            if out.format == Format::Ascii {
                let k: Vec<String> = a.ends.iter().map(i64::to_string).collect();
                let mm: Vec<String> = a.counts.iter().map(usize::to_string).collect();
                s.push_str(&format!("k = {}\nM = {}\n", k.join(" "), mm.join(" ")));
            }
            Ok(s)
        }
        Command::Caps { weight: w, out } => {
            let lambda = weight(&w)?;
            let c = cap_diagram(&lambda)?;
            if out.format == Format::Json {
                return Ok(json_line(json!({ "caps": c.caps })));
            }
            let mut s = show(&WeightDiagram::of(&lambda), &[Overlay::caps(&c)], &out)?;
            if out.format == Format::Ascii {
                let caps: Vec<String> = c.caps.iter().map(|(a, b)| format!("({a},{b})")).collect();
                s.push_str(&format!("caps = {}\n", caps.join(" ")));
            }
            Ok(s)
        }
        Command::Ctd { weight: w, out } => {
            no_svg(&out, "ctd")?;
            let c = ctd(&weight(&w)?)?;
            Ok(match out.format {
                Format::Json => c.to_json() + "\n",
                _ => c.to_ascii(),
            })
        }
        Command::Transport {
            weight: w,
            base,
            out,
        } => {
            let lambda = weight(&w)?;
            let sigma = resolve_base(&base, &lambda)?
                .ok_or_else(|| Failure::Usage("transport needs --base or --set".into()))?;
            let nu = ctd(&lambda)?.transport(&lambda, &sigma)?;
            match out.format {
                Format::Json => Ok(json_line(json!({
                    "base": sigma.to_string(),
                    "set": sigma.incomparable_set().to_string(),
                    "shifted": nu.to_string(),
                    "unshifted": weight_for_base(&lambda, &sigma)?.to_string(),
                }))),
                Format::Ascii => Ok(format!("{nu}\n")),
                Format::Svg => show(&WeightDiagram::of(&nu), &[], &out),
            }
        }
        Command::Anti { weight: w, out } => {
            show(&anti_distinguished_diagram(&weight(&w)?)?, &[], &out)
        }
        Command::Walk { weight: w, out } => {
            no_svg(&out, "walk")?;
            let lambda = weight(&w)?;
            let (m, n) = (lambda.m(), lambda.n());
            let steps = distinguished_to_anti_walk(&lambda)?;
            if out.format == Format::Json {
                let v: Vec<_> = steps
                    .iter()
                    .enumerate()
                    .map(|(t, nu)| json!({ "step": t, "base": BaseWord::walk_base(m, n, m - t).to_string(), "weight": nu.to_string() }))
                    .collect();
                return Ok(json_line(json!(v)));
            }
            let all: Vec<WeightDiagram> = steps.iter().map(WeightDiagram::of).collect();
            let lo = all.iter().filter_map(WeightDiagram::min_position).min();
            let hi = all.iter().filter_map(WeightDiagram::max_position).max();
            let span =
                WeightDiagram::from_positions(&lo.into_iter().chain(hi).collect::<Vec<_>>(), &[]);
            let win = Window::fit(&span, &[], out.from, out.to)?;
            let mut s = String::new();
            for (t, (nu, d)) in steps.iter().zip(&all).enumerate() {
                let line: String = win
                    .positions()
                    .map(|p| crate::render::glyph(d.cell(p)))
                    .collect();
                s.push_str(&format!(
                    "{line}  {}  {nu}\n",
                    BaseWord::walk_base(m, n, m - t)
                ));
            }
            s.push_str(&format!("positions {}..{}\n", win.from, win.to));
            Ok(s)
        }
        Command::Atoms { weight: w, out } => {
            no_svg(&out, "atoms")?;
            let lambda = weight(&w)?;
            let dec = atom_index_sets(&lambda)?;
            if out.format == Format::Json {
                let v: Vec<_> = dec
                    .atoms
                    .iter()
                    .map(|a| {
                        json!({
                            "indices": a.indices(),
                            "segment": [a.segment.start, a.segment.end],
                            "weight": a.weight(&lambda).to_string(),
                        })
                    })
                    .collect();
                return Ok(json_line(json!(v)));
            }
            Ok(dec
                .atoms
                .iter()
                .map(|a| {
                    format!(
                        "{a}  [{},{}]  {}\n",
                        a.segment.start,
                        a.segment.end,
                        a.weight(&lambda)
                    )
                })
                .collect())
        }
        Command::Tail { weight: w, out } => {
            no_svg(&out, "tail")?;
            let lambda = weight(&w)?;
            let dagger = dagger_weight(&lambda)?;
            let t = s_value(&dagger);
            Ok(match out.format {
                Format::Json => json_line(json!({
                    "tail": t,
                    "sigma_lambda": sigma_lambda(&lambda)?.to_string(),
                    "dagger_weight": dagger.to_string(),
                })),
                _ => format!("{t}\n"),
            })
        }
        Command::Longtail { weight: w, out } => {
            no_svg(&out, "longtail")?;
            let lambda = weight(&w)?;
            let lt = longtail_via_arrows(&lambda)?;
            Ok(match out.format {
                Format::Json => json_line(json!({
                    "longtail": lt,
                    "via_ctd": longtail_via_ctd(&lambda)?,
                    "via_arrows": lt,
                    "via_caps": longtail_via_caps(&lambda)?,
                    "witness_base": witness_base(&lambda)?.to_string(),
                })),
                _ => format!("{lt}\n"),
            })
        }
        Command::Hwt { weight: w, out } => {
            no_svg(&out, "hwt")?;
            let all = hwt(&weight(&w)?)?;
            let strs: Vec<String> = all.iter().map(ShiftedWeight::to_string).collect();
            Ok(match out.format {
                Format::Json => json_line(json!(strs)),
                _ => strs.iter().map(|s| format!("{s}\n")).collect(),
            })
        }
        Command::Phi { weight: w, out } => {
            let d = phi(&weight(&w)?)?;
            let mut s = show(d.diagram(), &[], &out)?;
            if out.format == Format::Ascii {
                match d.stack() {
                    Some((p, k)) => s.push_str(&format!("dagger at {p}, multiplicity {k}\n")),
                    None => s.push_str("typical: no dagger\n"),
                }
            }
            Ok(s)
        }
        Command::Psi { diagram, out } => {
            no_svg(&out, "psi")?;
            let d = DaggerDiagram::new(diagram.parse()?)?;
            let lambda = psi(&d)?;
            Ok(match out.format {
                Format::Json => json_line(json!({ "weight": lambda.to_string() })),
                _ => format!("{lambda}\n"),
            })
        }
        Command::Verify { m, n, bound, out } => {
            no_svg(&out, "verify")?;
            let report = run_verification_suite(m, n, bound);
            let s = match out.format {
                Format::Json => report.to_json() + "\n",
                _ => {
                    let mut s = format!(
                        "gl({m}|{n}) bound {bound}: {} checks, {} mismatches\n",
                        report.checked,
                        report.mismatches.len()
                    );
                    for mm in &report.mismatches {
                        s.push_str(&format!(
                            "{} on {}: expected {} got {}\n",
                            mm.check, mm.input, mm.expected, mm.got
                        ));
                    }
                    s
                }
            };
            if report.is_ok() {
                Ok(s)
            } else {
                Err(Failure::Mismatch(s))
            }
        }
        Command::Search {
            m,
            n,
            bound,
            jobs,
            out,
        } => {
            no_svg(&out, "search")?;
            let found = search_tail_gap_with_jobs(m, n, bound, jobs);
            Ok(found
                .iter()
                .map(|g| match out.format {
                    Format::Json => g.to_json_line() + "\n",
                    _ => format!(
                        "{}\ttail {}\tlongtail {}\t{}\t{}\n",
                        g.weight, g.tail, g.longtail, g.sigma_lambda, g.witness_base
                    ),
                })
                .collect())
        }
    }
}

/// Parse `args` (program name first), write output to `stdout` and
/// diagnostics to `stderr`, and return the exit code.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command) {
        Ok(s) => {
            let _ = stdout.write_all(s.as_bytes());
            EXIT_OK
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Input(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INPUT
        }
        Err(Failure::Mismatch(report)) => {
            let _ = stdout.write_all(report.as_bytes());
            let _ = writeln!(stderr, "error: verification found mismatches");
            EXIT_MISMATCH
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(
        args,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
