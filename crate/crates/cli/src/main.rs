use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use affine_crystal::crystal::{
    canonical_oracle, e_op, explore, f_op, good_addable, good_removable, i_word, is_highest_weight,
    reduce_word, weight_coeffs,
};
use affine_crystal::isom::{
    canonical_for_rank, canonical_inverse, component_vertices, pseudoperiods, replay, to_cylindric,
};
use affine_crystal::multipartition::check_e;
use affine_crystal::rsk::rs_with_size;
use affine_crystal::symbol::{build_symbol, default_size};
use affine_crystal::{ChargedMultipartition, Error, Mode, Step, StepLog};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "affine-crystal",
    version,
    about = "Fock-space crystals in affine type A"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the symbol of a charged multipartition, top row first.
    Symbol {
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        p: Option<i64>,
        /// Only used to validate `e`; the symbol does not depend on it.
        #[arg(long)]
        e: Option<i64>,
    },
    /// Test a predicate; exits 0 when it holds and 1 when it does not.
    Check {
        predicate: Predicate,
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        e: i64,
    },
    /// Print the i-word, its reduction and the good nodes.
    Word {
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        e: i64,
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
        /// Select nodes by content instead of residue.
        #[arg(long)]
        inf: bool,
    },
    /// Apply a comma-separated list of operators such as `f0,f1,e0`, left to right.
    Apply {
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        e: i64,
        #[arg(long, allow_hyphen_values = true)]
        ops: String,
        /// Use content-indexed operators.
        #[arg(long)]
        inf: bool,
    },
    /// Schensted insertion of the reading word: the image and its recording symbol.
    Rsk {
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        e: i64,
        #[arg(long)]
        p: Option<i64>,
    },
    /// Iterate `rs ∘ ξ` until the result is cylindric, then list its pseudoperiods.
    Reduce {
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        e: i64,
        #[arg(long)]
        trace: bool,
    },
    /// The canonical FLOTW image.
    Canonical {
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        e: i64,
        /// Write the step log here.
        #[arg(long)]
        log: Option<PathBuf>,
        #[arg(long)]
        trace: bool,
        /// Size the log so that it inverts every vertex up to this rank.
        #[arg(long)]
        max_rank: Option<usize>,
    },
    /// Undo `canonical` using its step log.
    Invert {
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        e: i64,
        #[arg(long)]
        log: PathBuf,
    },
    /// The part of the crystal graph reachable in at most `depth` steps.
    Graph {
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        e: i64,
        #[arg(long)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The vertices of the component of the input, up to a rank.
    Vertices {
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        e: i64,
        #[arg(long)]
        max_rank: usize,
    },
    /// The canonical image computed through the highest weight vertex.
    Oracle {
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        e: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Predicate {
    /// The charge lies in S_e.
    #[value(name = "s-e")]
    SE,
    /// The charge lies in D_e.
    #[value(name = "d-e")]
    DE,
    Cylindric,
    Flotw,
    HighestWeight,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Text,
}

enum Failure {
    Lib(Error),
    Usage(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::Lib(err)
    }
}

type Outcome = Result<(String, u8), Failure>;

fn parse(text: &str) -> Result<ChargedMultipartition, Failure> {
    Ok(text.parse()?)
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|err| Failure::Io(format!("{}: {err}", path.display())))
}

fn mode_for(e: i64, inf: bool) -> Mode {
    if inf {
        Mode::Infinite
    } else {
        Mode::Finite(e)
    }
}

fn check_index(e: i64, i: i64, inf: bool) -> Result<(), Failure> {
    if !inf && !(0..e).contains(&i) {
        return Err(Failure::Lib(Error::Domain(format!(
            "residue {i} is outside 0..{e}"
        ))));
    }
    Ok(())
}

fn parse_ops(ops: &str) -> Result<Vec<(bool, i64)>, Failure> {
    ops.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let raise = match t.as_bytes()[0] {
                b'f' => false,
                b'e' => true,
                _ => {
                    return Err(Failure::Usage(format!(
                        "bad operator `{t}`: expected f<i> or e<i>"
                    )))
                }
            };
            let i = t[1..]
                .parse()
                .map_err(|_| Failure::Usage(format!("bad operator index in `{t}`")))?;
            Ok((raise, i))
        })
        .collect()
}

fn line(out: &mut String, text: impl std::fmt::Display) {
    writeln!(out, "{text}").expect("writing to a string");
}

fn run(cmd: Command) -> Outcome {
    let mut out = String::new();
    match cmd {
        Command::Symbol { input, p, e } => {
            if let Some(e) = e {
                check_e(e)?;
            }
            let m = parse(&input)?;
            line(&mut out, build_symbol(&m, p)?);
        }
        Command::Check {
            predicate,
            input,
            e,
        } => {
            check_e(e)?;
            let m = parse(&input)?;
            let holds = match predicate {
                Predicate::SE => m.charge().in_s_e(e),
                Predicate::DE => m.charge().in_d_e(e),
                Predicate::Cylindric => m.is_cylindric(e),
                Predicate::Flotw => m.is_flotw(e),
                Predicate::HighestWeight => is_highest_weight(&m, e)?,
            };
            line(&mut out, holds);
            return Ok((out, if holds { 0 } else { 1 }));
        }
        Command::Word { input, e, i, inf } => {
            check_e(e)?;
            check_index(e, i, inf)?;
            let m = parse(&input)?;
            let mode = mode_for(e, inf);
            let word = i_word(&m, mode, i);
            let nodes: Vec<String> = word.entries().iter().map(|(_, n)| n.to_string()).collect();
            let show =
                |n: Option<_>| n.map_or("-".to_string(), |n: affine_crystal::Node| n.to_string());
            line(&mut out, format_args!("word: {word}"));
            line(&mut out, format_args!("nodes: {}", nodes.join(" ")));
            line(&mut out, format_args!("reduced: {}", reduce_word(&word)));
            line(
                &mut out,
                format_args!("good addable: {}", show(good_addable(&m, mode, i))),
            );
            line(
                &mut out,
                format_args!("good removable: {}", show(good_removable(&m, mode, i))),
            );
        }
        Command::Apply { input, e, ops, inf } => {
            check_e(e)?;
            let ops = parse_ops(&ops)?;
            for &(_, i) in &ops {
                check_index(e, i, inf)?;
            }
            let mode = mode_for(e, inf);
            let mut cur = Some(parse(&input)?);
            for (raise, i) in ops {
                cur = cur.and_then(|m| {
                    if raise {
                        e_op(&m, mode, i)
                    } else {
                        f_op(&m, mode, i)
                    }
                });
            }
            match cur {
                Some(m) => line(&mut out, m),
                None => line(&mut out, "0"),
            }
        }
        Command::Rsk { input, e, p } => {
            check_e(e)?;
            let m = parse(&input)?;
            let p = p.unwrap_or_else(|| default_size(&m));
            let (image, q) = rs_with_size(&m, p)?;
            line(&mut out, &image);
            line(&mut out, Step::Rs { p, q });
        }
        Command::Reduce { input, e, trace } => {
            check_e(e)?;
            let m = parse(&input)?;
            let (cyl, rounds, steps) = to_cylindric(&m, e)?;
            if trace {
                write_trace(&mut out, &m, &StepLog::new(steps), e)?;
            }
            line(&mut out, &cyl);
            line(&mut out, format_args!("m={rounds}"));
            for pp in pseudoperiods(&cyl, e)? {
                let nodes: Vec<String> = pp.nodes.iter().map(|n| n.to_string()).collect();
                line(
                    &mut out,
                    format_args!("pseudoperiod alpha={} {}", pp.alpha, nodes.join(" ")),
                );
            }
        }
        Command::Canonical {
            input,
            e,
            log,
            trace,
            max_rank,
        } => {
            check_e(e)?;
            let m = parse(&input)?;
            let res = canonical_for_rank(&m, e, max_rank.unwrap_or(0))?;
            if canonical_inverse(&res.image, &res.log, e)? != m {
                return Err(Error::Internal(format!("the log of {m} does not invert")).into());
            }
            if trace {
                write_trace(&mut out, &m, &res.log, e)?;
            }
            line(&mut out, &res.image);
            let widths: Vec<String> = res.widths.iter().map(usize::to_string).collect();
            line(
                &mut out,
                format_args!(
                    "m={} t={} u={} widths={}",
                    res.m,
                    res.t,
                    res.u,
                    widths.join(",")
                ),
            );
            if let Some(path) = log {
                fs::write(&path, res.log.to_string())
                    .map_err(|err| Failure::Io(format!("{}: {err}", path.display())))?;
            }
        }
        Command::Invert { input, e, log } => {
            check_e(e)?;
            let image = parse(&input)?;
            let log: StepLog = read(&log)?.parse()?;
            line(&mut out, canonical_inverse(&image, &log, e)?);
        }
        Command::Graph {
            input,
            e,
            depth,
            format,
        } => {
            check_e(e)?;
            let graph = explore(&parse(&input)?, e, depth)?;
            out = match format {
                Format::Dot => graph.to_dot(),
                Format::Text => graph.to_text(),
            };
        }
        Command::Vertices { input, e, max_rank } => {
            check_e(e)?;
            for v in component_vertices(&parse(&input)?, e, max_rank)? {
                line(&mut out, v);
            }
        }
        Command::Oracle { input, e } => {
            check_e(e)?;
            let m = parse(&input)?;
            let (image, charge) = canonical_oracle(&m, e)?;
            let w = weight_coeffs(&m, e)?;
            let coeffs: Vec<String> = w.coeffs().iter().map(i64::to_string).collect();
            let charge: Vec<String> = charge.as_slice().iter().map(i64::to_string).collect();
            line(&mut out, &image);
            line(&mut out, format_args!("charge={}", charge.join(",")));
            line(&mut out, format_args!("weight={}", coeffs.join(",")));
        }
    }
    Ok((out, 0))
}

fn write_trace(
    out: &mut String,
    m: &ChargedMultipartition,
    log: &StepLog,
    e: i64,
) -> Result<(), Failure> {
    line(out, format_args!("start: {m}"));
    for (step, stage) in log.iter().zip(replay(m, log, e)?) {
        let tag = if stage.is_cylindric(e) {
            " [cylindric]"
        } else {
            ""
        };
        line(out, format_args!("{step}"));
        line(out, format_args!("  -> {stage}{tag}"));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(failure) => {
            let (msg, code) = match failure {
                Failure::Lib(err @ Error::Parse { .. }) => (err.to_string(), 2),
                Failure::Lib(err @ Error::Domain(_)) => (err.to_string(), 3),
                Failure::Lib(err @ Error::Internal(_)) => (err.to_string(), 4),
                Failure::Usage(msg) => (msg, 2),
                Failure::Io(msg) => (msg, 3),
            };
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
