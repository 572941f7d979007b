use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use ternalg::{
    bicrossed_product, check_bialgebra, check_comultiplicative, check_compatibility,
    check_hom_associativity, check_hom_coassociativity, check_matched_pair, check_multiplicative,
    check_trimodule, dualize_algebra, dualize_bialgebra, dualize_coalgebra, dualize_linear_map,
    fixtures, semidirect_product, sign_variant, yau_twist, ActionMode, AssocMode, LawReport,
    TrimoduleLevel,
};

use crate::error::CliError;
use crate::format::{self, Structure};
use crate::report::{law_records, sha256_hex, ReportDocument};

#[derive(Debug, Parser)]
#[command(name = "ternalg", version, about = "Check and construct ternary hom-structures given by structure constants")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the laws of a structure file; exit 0 if all pass, 1 on violations.
    Check(CheckArgs),
    /// Twist a classical algebra by an endomorphism.
    Twist {
        file: PathBuf,
        /// Map file holding the endomorphism.
        #[arg(long)]
        endo: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dual of an algebra, coalgebra, bialgebra or map.
    Dualize {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Semidirect product of an algebra with a module carrying its actions.
    Semidirect {
        algebra: PathBuf,
        module: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bicrossed product of a matched pair.
    Doublecross {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Negate the product and/or the coproduct of a bialgebra.
    Signflip {
        file: PathBuf,
        #[arg(long)]
        mu: bool,
        #[arg(long)]
        delta: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write one of the built-in example structures.
    Fixture {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(FIXTURE_NAMES))]
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, clap::Args)]
pub struct CheckArgs {
    pub file: PathBuf,
    #[arg(long, value_enum, default_value_t = Mode::Total)]
    pub mode: Mode,
    #[arg(long, value_enum, default_value_t = Law::All)]
    pub law: Law,
    /// Trimodule: only the re-association conditions (the default).
    #[arg(long, conflicts_with = "full")]
    pub quasi: bool,
    /// Trimodule and matched pair: add the extra conditions.
    #[arg(long)]
    pub full: bool,
    /// Print the report document as JSON.
    #[arg(long)]
    pub json: bool,
    /// Algebra acting on a module file.
    #[arg(long)]
    pub algebra: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Total,
    Partial,
    Weak,
}

impl Mode {
    fn assoc(self) -> AssocMode {
        match self {
            Mode::Total => AssocMode::Total,
            Mode::Partial => AssocMode::Partial,
            Mode::Weak => AssocMode::Weak,
        }
    }

    fn action(self) -> Result<ActionMode, CliError> {
        match self {
            Mode::Total => Ok(ActionMode::Total),
            Mode::Partial => Ok(ActionMode::Partial),
            Mode::Weak => Err(CliError::Usage(
                "action conditions have no weak mode; use total or partial".into(),
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Law {
    Assoc,
    Coassoc,
    Multiplicative,
    Compat,
    Bialgebra,
    Trimodule,
    Matchedpair,
    All,
}

pub const FIXTURE_NAMES: [&str; 13] = [
    "ep1", "p2h", "rho_ep1", "et1", "t2", "rho1", "rho2", "t2h1", "t2h2", "pb2", "tb2", "eq1", "eq2",
];

pub fn fixture(name: &str) -> Option<Structure> {
    Some(match name {
        "ep1" => Structure::Algebra(fixtures::p2()),
        "p2h" => Structure::Algebra(fixtures::p2h()),
        "rho_ep1" => Structure::Map(fixtures::p2_endomorphism(2, 3)),
        "et1" | "t2" => Structure::Algebra(fixtures::t2()),
        "rho1" => Structure::Map(fixtures::rho1()),
        "rho2" => Structure::Map(fixtures::rho2()),
        "t2h1" => Structure::Algebra(fixtures::t2h1()),
        "t2h2" => Structure::Algebra(fixtures::t2h2()),
        "pb2" => Structure::Bialgebra(fixtures::pb2()),
        "tb2" => Structure::Bialgebra(fixtures::tb2()),
        "eq1" => Structure::Bialgebra(fixtures::eq1()),
        "eq2" => Structure::Bialgebra(fixtures::eq2()),
        _ => return None,
    })
}

fn read(path: &Path) -> Result<(Vec<u8>, Structure), CliError> {
    let shown = path.display().to_string();
    let bytes = std::fs::read(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| CliError::Format(format!("{shown}: not UTF-8")))?;
    let s = format::parse(&text).map_err(|e| e.in_file(&shown))?;
    Ok((bytes, s))
}

fn expect_kind(s: &Structure, path: &Path, kinds: &[&str]) -> Result<(), CliError> {
    if kinds.contains(&s.kind()) {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "{}: expected a file of kind {}, found {}",
            path.display(),
            kinds.join(" or "),
            s.kind()
        )))
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn mismatch(law: Law, kind: &str) -> CliError {
    let law = law.to_possible_value().expect("no skipped variants");
    CliError::Usage(format!("law {} does not apply to a {kind} file", law.get_name()))
}

fn law_report(args: &CheckArgs, s: &Structure) -> Result<LawReport, CliError> {
    let mode = args.mode.assoc();
    let mut out = LawReport::new(format!("check.{}", s.kind()));
    let law = args.law;
    match s {
        Structure::Algebra(a) => match law {
            Law::Assoc => out.absorb(check_hom_associativity(a, mode)),
            Law::Multiplicative => out.absorb(check_multiplicative(a)),
            Law::All => {
                out.absorb(check_hom_associativity(a, mode));
                out.absorb(check_multiplicative(a));
            }
            _ => return Err(mismatch(law, s.kind())),
        },
        Structure::Coalgebra(c) => match law {
            Law::Coassoc => out.absorb(check_hom_coassociativity(c, mode)),
            Law::Multiplicative => out.absorb(check_comultiplicative(c)),
            Law::All => {
                out.absorb(check_hom_coassociativity(c, mode));
                out.absorb(check_comultiplicative(c));
            }
            _ => return Err(mismatch(law, s.kind())),
        },
        Structure::Bialgebra(b) => match law {
            Law::Assoc => out.absorb(check_hom_associativity(b.alg(), mode)),
            Law::Coassoc => out.absorb(check_hom_coassociativity(b.coalg(), mode)),
            Law::Multiplicative => {
                out.absorb(check_multiplicative(b.alg()));
                out.absorb(check_comultiplicative(b.coalg()));
            }
            Law::Compat => out.absorb(check_compatibility(b)),
            Law::Bialgebra => out.absorb(check_bialgebra(b, mode)),
            Law::All => {
                out.absorb(check_bialgebra(b, mode));
                out.absorb(check_multiplicative(b.alg()));
                out.absorb(check_comultiplicative(b.coalg()));
            }
            _ => return Err(mismatch(law, s.kind())),
        },
        Structure::Module(m) => match law {
            Law::Trimodule | Law::All => {
                let Some(path) = &args.algebra else {
                    return Err(CliError::Usage(
                        "checking a module file needs --algebra <file>".into(),
                    ));
                };
                let (_, a) = read(path)?;
                expect_kind(&a, path, &["algebra"])?;
                let Structure::Algebra(a) = a else { unreachable!() };
                let level = if args.full { TrimoduleLevel::Full } else { TrimoduleLevel::Quasi };
                out.absorb(check_trimodule(&a, &m.module, &m.actions, args.mode.action()?, level)?);
            }
            _ => return Err(mismatch(law, s.kind())),
        },
        Structure::MatchedPair(mp) => match law {
            Law::Matchedpair | Law::All => {
                out.absorb(check_matched_pair(mp, args.mode.action()?, args.full))
            }
            _ => return Err(mismatch(law, s.kind())),
        },
        Structure::Map(_) => return Err(mismatch(law, s.kind())),
    }
    Ok(out)
}

pub fn check(args: &CheckArgs) -> Result<(ReportDocument, i32), CliError> {
    let (bytes, s) = read(&args.file)?;
    let report = law_report(args, &s)?;
    let algebra_sha256 = match (&s, &args.algebra) {
        (Structure::Module(_), Some(p)) => {
            let bytes = std::fs::read(p).map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            })?;
            Some(sha256_hex(&bytes))
        }
        _ => None,
    };
    let law = args.law.to_possible_value().expect("no skipped variants");
    let doc = ReportDocument {
        tool: "ternalg".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        input_sha256: sha256_hex(&bytes),
        algebra_sha256,
        kind: s.kind().into(),
        law: law.get_name().into(),
        mode: format!("{:?}", args.mode).to_lowercase(),
        passed: report.passed(),
        laws: law_records(&report),
    };
    let code = if doc.passed { 0 } else { 1 };
    Ok((doc, code))
}

fn construct(command: &Command) -> Result<(Structure, &Option<PathBuf>), CliError> {
    Ok(match command {
        Command::Check(_) => unreachable!("not a construction"),
        Command::Twist { file, endo, out } => {
            let (_, a) = read(file)?;
            let (_, rho) = read(endo)?;
            expect_kind(&a, file, &["algebra"])?;
            expect_kind(&rho, endo, &["map"])?;
            let (Structure::Algebra(a), Structure::Map(rho)) = (a, rho) else { unreachable!() };
            (Structure::Algebra(yau_twist(&a, &rho)?), out)
        }
        Command::Dualize { file, out } => {
            let (_, s) = read(file)?;
            let dual = match s {
                Structure::Algebra(a) => Structure::Coalgebra(dualize_algebra(&a)),
                Structure::Coalgebra(c) => Structure::Algebra(dualize_coalgebra(&c)),
                Structure::Bialgebra(b) => Structure::Bialgebra(dualize_bialgebra(&b)),
                Structure::Map(m) => Structure::Map(dualize_linear_map(&m)),
                other => {
                    expect_kind(&other, file, &["algebra", "coalgebra", "bialgebra", "map"])?;
                    unreachable!()
                }
            };
            (dual, out)
        }
        Command::Semidirect { algebra, module, out } => {
            let (_, a) = read(algebra)?;
            let (_, m) = read(module)?;
            expect_kind(&a, algebra, &["algebra"])?;
            expect_kind(&m, module, &["module"])?;
            let (Structure::Algebra(a), Structure::Module(m)) = (a, m) else { unreachable!() };
            (Structure::Algebra(semidirect_product(&a, &m.module, &m.actions)?), out)
        }
        Command::Doublecross { file, out } => {
            let (_, s) = read(file)?;
            expect_kind(&s, file, &["matched_pair"])?;
            let Structure::MatchedPair(mp) = s else { unreachable!() };
            (Structure::Algebra(bicrossed_product(&mp)?), out)
        }
        Command::Signflip { file, mu, delta, out } => {
            let (_, s) = read(file)?;
            expect_kind(&s, file, &["bialgebra"])?;
            let Structure::Bialgebra(b) = s else { unreachable!() };
            (Structure::Bialgebra(sign_variant(&b, *mu, *delta)), out)
        }
        Command::Fixture { name, out } => {
            let s = fixture(name).ok_or_else(|| CliError::Usage(format!("unknown fixture {name}")))?;
            (s, out)
        }
    })
}

/// Runs one command and returns the exit code; errors map to 2.
pub fn run(cli: &Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::Check(args) => {
            let (doc, code) = check(args)?;
            let text = if args.json { doc.to_json() } else { doc.to_text() };
            print!("{text}");
            Ok(code)
        }
        other => {
            let (s, out) = construct(other)?;
            emit(&format::serialize(&s), out)?;
            Ok(0)
        }
    }
}

/// Sizes the global thread pool from `TERNALG_THREADS`; 0 means sequential.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("TERNALG_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("TERNALG_THREADS must be a non-negative integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n.max(1))
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot size the thread pool: {e}")))
}
