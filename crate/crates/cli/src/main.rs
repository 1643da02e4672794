use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use actsep_core::families::{self, FamilyAct, FAMILIES};
use actsep_core::monoid::ReesMatrixSpec;
use actsep_core::separability::{self, check_condition, Condition};
use actsep_core::text::{self, ParsedAct};
use actsep_core::{Error, FiniteAct, FiniteMonoid, SearchLimits};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "actsep",
    version,
    about = "Separability checks for finite monoid acts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check monoid or act axioms.
    Validate {
        #[arg(long, conflicts_with = "act", required_unless_present = "act")]
        monoid: Option<PathBuf>,
        #[arg(long, requires = "monoid_file")]
        act: Option<PathBuf>,
        #[arg(long)]
        monoid_file: Option<PathBuf>,
    },
    /// Check one separability condition on an act.
    Check {
        #[command(flatten)]
        input: ActInput,
        #[arg(long)]
        condition: Condition,
        #[arg(long)]
        json: bool,
        /// Write each certificate to this directory.
        #[arg(long)]
        certificates: Option<PathBuf>,
    },
    /// Find a least-index congruence separating an element from a set.
    Separate {
        #[command(flatten)]
        input: ActInput,
        #[arg(long)]
        element: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        from: Vec<usize>,
        #[arg(long)]
        max_index: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the least index of a separating congruence.
    MinIndex {
        #[command(flatten)]
        input: ActInput,
        #[arg(long)]
        element: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        from: Vec<usize>,
    },
    /// Build a Rees matrix monoid over a group and report on its sandwich matrix.
    Rees {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_delimiter = ',', num_args = 1)]
        normalize: Option<Vec<usize>>,
        #[arg(long)]
        rank: bool,
        #[arg(long)]
        mod_subgroup: Option<PathBuf>,
    },
    /// Example families.
    Family {
        #[command(subcommand)]
        command: FamilyCommand,
    },
}

#[derive(Args)]
struct ActInput {
    #[arg(long)]
    act: PathBuf,
    #[arg(long)]
    monoid_file: PathBuf,
}

#[derive(Args)]
struct FamilySelect {
    #[arg(long)]
    name: String,
    #[arg(long = "param", value_parser = parse_param)]
    params: Vec<(String, i64)>,
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Build an instance, verify its facts, optionally compare with goldens.
    Run {
        #[command(flatten)]
        select: FamilySelect,
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// List families and parameter ranges.
    List,
    /// Write an instance's monoid, act and facts to a directory.
    Dump {
        #[command(flatten)]
        select: FamilySelect,
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_param(s: &str) -> Result<(String, i64), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected key=value, got {s:?}"))?;
    let v = v.parse().map_err(|_| format!("{v:?} is not an integer"))?;
    Ok((k.to_string(), v))
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SearchSpaceTooLarge(_)
            | Error::RightIdealEnumerationTooLarge(_)
            | Error::ClosureTooLarge(_) => 4,
            Error::UnknownFamily(_)
            | Error::ParamOutOfRange { .. }
            | Error::OutOfRange(..)
            | Error::ElementInForbiddenSet(_)
            | Error::PreconditionViolated(_) => 2,
            _ => 3,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        msg: msg.into(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_monoid(path: &Path) -> Result<(String, Arc<FiniteMonoid>), Failure> {
    let (name, m) = text::parse_monoid(&read(path)?)?;
    Ok((name, Arc::new(m)))
}

fn load_act(input: &ActInput) -> Result<(String, FiniteAct), Failure> {
    let (monoid_name, monoid) = load_monoid(&input.monoid_file)?;
    match text::parse_act(&read(&input.act)?, monoid, &monoid_name)? {
        (name, ParsedAct::Total(a)) => Ok((name, a)),
        (_, ParsedAct::Partial(_)) => Err(usage("this command needs a total act")),
    }
}

fn validate(
    monoid: Option<PathBuf>,
    act: Option<PathBuf>,
    monoid_file: Option<PathBuf>,
) -> Result<u8, Failure> {
    let verdict = match (monoid, act, monoid_file) {
        (Some(m), None, _) => text::parse_monoid(&read(&m)?)
            .map(|(name, m)| format!("valid monoid {name} order {}", m.order())),
        (None, Some(a), Some(mf)) => {
            let text_m = read(&mf)?;
            let text_a = read(&a)?;
            text::parse_monoid(&text_m).and_then(|(mname, m)| {
                text::parse_act(&text_a, Arc::new(m), &mname).map(|(name, act)| match act {
                    ParsedAct::Total(a) => format!("valid act {name} size {}", a.size()),
                    ParsedAct::Partial(a) => format!("valid partialact {name} size {}", a.size()),
                })
            })
        }
        _ => return Err(usage("give --monoid F, or --act F with --monoid-file F")),
    };
    match verdict {
        Ok(line) => {
            println!("{line}");
            Ok(0)
        }
        Err(e) => {
            println!("invalid: {e}");
            Ok(1)
        }
    }
}

fn family_instance(select: &FamilySelect) -> Result<families::FamilyInstance, Failure> {
    let mut params = BTreeMap::new();
    for (k, v) in &select.params {
        if params.insert(k.clone(), *v).is_some() {
            return Err(usage(format!("parameter {k} given twice")));
        }
    }
    Ok(families::build(&select.name, &params)?)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let limits = SearchLimits::from_env();
    match cli.command {
        Command::Validate {
            monoid,
            act,
            monoid_file,
        } => validate(monoid, act, monoid_file),
        Command::Check {
            input,
            condition,
            json,
            certificates,
        } => {
            let (name, act) = load_act(&input)?;
            let report = check_condition(&act, condition, &limits)?;
            let record = report.to_record(&name);
            if json {
                println!("{}", record.to_json());
            } else {
                print!("{}", record.to_text());
            }
            if let Some(dir) = certificates {
                fs::create_dir_all(&dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
                for (i, cert) in report.certificates.iter().enumerate() {
                    write(
                        &dir.join(format!("{name}_{condition}_{i:04}.cert")),
                        &text::write_certificate(&name, cert),
                    )?;
                }
            }
            Ok(if report.holds { 0 } else { 1 })
        }
        Command::Separate {
            input,
            element,
            from,
            max_index,
            out,
        } => {
            let (name, act) = load_act(&input)?;
            match separability::separate(&act, element, &from, max_index, &limits)? {
                Some(cert) => {
                    let text = text::write_certificate(&name, &cert);
                    match out {
                        Some(path) => write(&path, &text)?,
                        None => print!("{text}"),
                    }
                    Ok(0)
                }
                None => {
                    println!("none within bound");
                    Ok(1)
                }
            }
        }
        Command::MinIndex {
            input,
            element,
            from,
        } => {
            let (_, act) = load_act(&input)?;
            println!(
                "{}",
                separability::min_index(&act, element, &from, &limits)?
            );
            Ok(0)
        }
        Command::Rees {
            group,
            rows,
            cols,
            matrix,
            normalize,
            rank,
            mod_subgroup,
        } => {
            let (_, g) = load_monoid(&group)?;
            let sandwich = text::parse_matrix(&read(&matrix)?)?;
            let mut spec = ReesMatrixSpec::new((*g).clone(), rows, cols, sandwich)?;
            if let Some(anchor) = normalize {
                let [i0, j0] = anchor[..] else {
                    return Err(usage("--normalize takes i0,j0"));
                };
                spec = spec.normalize(i0, j0)?;
                println!("normalized i0={i0} j0={j0}");
                for row in spec.sandwich() {
                    let parts: Vec<String> = row.iter().map(usize::to_string).collect();
                    println!("{}", parts.join(" "));
                }
            }
            if rank {
                let subgroup = match mod_subgroup {
                    Some(path) => Some(text::parse_index_list(&read(&path)?)?),
                    None => None,
                };
                let r = spec.rank(subgroup.as_deref())?;
                println!("r_I={} r_J={} rank={}", r.r_i, r.r_j, r.rank);
            } else if mod_subgroup.is_some() {
                return Err(usage("--mod-subgroup needs --rank"));
            }
            if !rank {
                let built = spec.build();
                print!("{}", text::write_monoid("rees", &built.monoid));
            }
            Ok(0)
        }
        Command::Family { command } => match command {
            FamilyCommand::List => {
                for (name, params) in FAMILIES {
                    println!("{name} {params}");
                }
                Ok(0)
            }
            FamilyCommand::Run { select, golden } => {
                let inst = family_instance(&select)?;
                let report = inst.verify(&limits);
                let text = report.to_text();
                print!("{text}");
                let mut code = if report.all_passed() { 0 } else { 1 };
                if let Some(dir) = golden {
                    let path = dir.join(format!("{}.txt", inst.stem()));
                    let expected = read(&path)?;
                    if expected != text {
                        eprintln!("output differs from {}", path.display());
                        code = 1;
                    }
                }
                Ok(code)
            }
            FamilyCommand::Dump { select, out } => {
                let inst = family_instance(&select)?;
                let stem = inst.stem();
                fs::create_dir_all(&out).map_err(|e| usage(format!("{}: {e}", out.display())))?;
                write(
                    &out.join(format!("{stem}.monoid")),
                    &text::write_monoid(&stem, &inst.monoid),
                )?;
                match &inst.act {
                    FamilyAct::Total(a) => write(
                        &out.join(format!("{stem}.act")),
                        &text::write_act(&stem, &stem, a),
                    )?,
                    FamilyAct::Partial(a) => write(
                        &out.join(format!("{stem}.partialact")),
                        &text::write_partial_act(&stem, &stem, a),
                    )?,
                }
                let mut facts = String::new();
                for (k, v) in &inst.marked {
                    facts.push_str(&format!("marked {k} {v}\n"));
                }
                for f in &inst.expected {
                    facts.push_str(&format!("fact {}\n", inst.describe(f)));
                }
                write(&out.join(format!("{stem}.facts")), &facts)?;
                println!("{}", out.join(&stem).display());
                Ok(0)
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
