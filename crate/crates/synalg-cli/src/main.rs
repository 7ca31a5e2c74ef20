//! Command line frontend: minimize automata, print transition and syntactic
//! monoids, run the context oracle, the dual construction, free lifts, and
//! the randomized cross-validation sweeps.
//!
//! Exit codes: 0 success, 1 property failure, 2 validation failure, 3 size
//! guard, 4 usage.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use synalg::automaton::DAutomaton;
use synalg::check::{run_checks, CheckConfig, CheckKind};
use synalg::duality::{verify_mindual, verify_syndual, RegularLanguageHandle};
use synalg::error::Error;
use synalg::free::Alphabet;
use synalg::json::{emit_monoid, parse_automaton_file, write_automaton_file, MonoidFormat};
use synalg::minimize::minimize;
use synalg::regex::compile_regex;
use synalg::syntactic::{
    syntactic_monoid, syntactic_partition_oracle, transition_monoid, RecognizingPair,
};
use synalg::variety::{VarietySpec, VarietyTag};

#[derive(Parser)]
#[command(name = "synalg", about = "syntactic algebras of regular languages", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Automaton file in the strict JSON schema.
    #[arg(short = 'i', long = "input")]
    input: Option<PathBuf>,
    /// Regular expression over the declared alphabet (classical languages).
    #[arg(long = "regex")]
    regex: Option<String>,
    /// Alphabet for `--regex`, e.g. `ab`.
    #[arg(long = "alphabet")]
    alphabet: Option<String>,
}

impl InputArgs {
    fn load(&self) -> Result<DAutomaton, Error> {
        match (&self.input, &self.regex) {
            (Some(path), None) => parse_automaton_file(path),
            (None, Some(regex)) => {
                let alphabet = Alphabet::from_str(
                    self.alphabet
                        .as_deref()
                        .ok_or_else(|| Error::Config("--regex requires --alphabet".into()))?,
                )?;
                compile_regex(regex, &alphabet)
            }
            _ => Err(Error::Config("provide exactly one of -i FILE or --regex R".into())),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Table,
    Json,
}

impl From<OutFormat> for MonoidFormat {
    fn from(f: OutFormat) -> MonoidFormat {
        match f {
            OutFormat::Table => MonoidFormat::Table,
            OutFormat::Json => MonoidFormat::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LiftTarget {
    Pointed,
    Involution,
    Jsl,
    Vect,
}

#[derive(Subcommand)]
enum Command {
    /// Minimize an automaton and write it back out.
    Minimize {
        #[command(flatten)]
        input: InputArgs,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        #[arg(long = "report")]
        report: Option<PathBuf>,
    },
    /// Print the transition monoid of the automaton as given.
    Transmon {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long = "out", value_enum, default_value = "table")]
        out: OutFormat,
    },
    /// Print the syntactic monoid (transition monoid of the minimal automaton).
    Synmon {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long = "out", value_enum, default_value = "table")]
        out: OutFormat,
    },
    /// Group enumerated free elements by the syntactic congruence.
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long = "maxlen", default_value_t = 4)]
        maxlen: usize,
    },
    /// Dual route: derivatives of the reversed language, atoms, dual monoid,
    /// and the isomorphism verdict against the direct construction.
    Dualize {
        #[command(flatten)]
        input: InputArgs,
        /// Write each atom's minimal DFA into this directory.
        #[arg(long = "atoms-dir")]
        atoms_dir: Option<PathBuf>,
    },
    /// Lift a classical DFA to another variety by the free construction.
    Lift {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long = "to", value_enum)]
        to: LiftTarget,
        /// Field size for `--to vect`.
        #[arg(short = 'p', long = "p", default_value_t = 2)]
        p: u32,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Run the randomized cross-validation sweeps.
    Check {
        #[arg(long = "seed", default_value_t = 0)]
        seed: u64,
        #[arg(long = "instances", default_value_t = 25)]
        instances: usize,
        #[arg(long = "max-base-states", default_value_t = 3)]
        max_base_states: usize,
        #[arg(long = "alphabet-size", default_value_t = 2)]
        alphabet_size: usize,
        /// Comma-separated subset of set,pointed,involution,jsl,vect.
        #[arg(long = "varieties", default_value = "set,pointed,involution,jsl,vect")]
        varieties: String,
        /// Comma-separated subset of the check names.
        #[arg(
            long = "checks",
            default_value = "tran-eq-oracle,universal-property,duality,minimize-idempotent,recognition"
        )]
        checks: String,
        /// Directory for replay files of failing instances.
        #[arg(long = "replay-dir", default_value = ".")]
        replay_dir: PathBuf,
    },
}

fn parse_varieties(s: &str) -> Result<Vec<VarietyTag>, Error> {
    s.split(',')
        .map(|part| match part.trim() {
            "set" => Ok(VarietyTag::Set),
            "pointed" => Ok(VarietyTag::Pointed),
            "involution" => Ok(VarietyTag::Involution),
            "jsl" => Ok(VarietyTag::Semilattice),
            "vect" => Ok(VarietyTag::Vect(2)),
            other => Err(Error::Config(format!("unknown variety {other:?}"))),
        })
        .collect()
}

fn parse_checks(s: &str) -> Result<Vec<CheckKind>, Error> {
    s.split(',')
        .map(|part| {
            CheckKind::from_name(part.trim())
                .ok_or_else(|| Error::Config(format!("unknown check {part:?}")))
        })
        .collect()
}

fn print_pair(pair: &RecognizingPair, alphabet: &Alphabet, out: OutFormat) {
    print!("{}", emit_monoid(pair, out.into(), alphabet));
}

fn run() -> Result<ExitCode, Error> {
    if let Ok(guard) = std::env::var("SYNALG_SIZE_GUARD") {
        let limit: usize = guard
            .parse()
            .map_err(|_| Error::Config(format!("bad SYNALG_SIZE_GUARD value {guard:?}")))?;
        synalg::guard::set_carrier_limit(limit);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version are successful exits; everything else is usage
            if e.use_stderr() {
                eprint!("{e}");
                return Ok(ExitCode::from(4));
            }
            print!("{e}");
            return Ok(ExitCode::SUCCESS);
        }
    };
    match cli.command {
        Command::Minimize { input, output, report } => {
            let a = input.load()?;
            let (min, rep) = minimize(&a)?;
            write_automaton_file(&min, &output)?;
            if let Some(report_path) = report {
                let witnesses: Vec<String> =
                    rep.witness_words.iter().map(|w| w.render(&min.alphabet)).collect();
                let value = serde_json::json!({
                    "reachable_size": rep.reachable_size,
                    "minimal_size": rep.minimal_size,
                    "observability_blocks": rep.partition.len(),
                    "witnesses": witnesses,
                });
                std::fs::write(
                    &report_path,
                    serde_json::to_string_pretty(&value).expect("report") + "\n",
                )?;
            }
            println!(
                "minimized: {} -> {} states ({} reachable)",
                a.size(),
                min.size(),
                rep.reachable_size
            );
        }
        Command::Transmon { input, out } => {
            let a = input.load()?;
            let pair = transition_monoid(&a)?;
            print_pair(&pair, &a.alphabet, out);
        }
        Command::Synmon { input, out } => {
            let a = input.load()?;
            let syn = syntactic_monoid(&a)?;
            print_pair(&syn.pair, &a.alphabet, out);
        }
        Command::Oracle { input, maxlen } => {
            let a = input.load()?;
            let classes = syntactic_partition_oracle(&a, maxlen)?;
            println!("{} classes on enumerated elements of length <= {maxlen}", classes.len());
            for (i, class) in classes.iter().enumerate() {
                let members: Vec<String> =
                    class.iter().map(|u| u.render(&a.alphabet)).collect();
                println!("class {i} ({}): {}", class.len(), members.join(" "));
            }
        }
        Command::Dualize { input, atoms_dir } => {
            let a = input.load()?;
            let l = RegularLanguageHandle::new(&a)?;
            let report = verify_syndual(&l)?;
            let dual = &report.dual;
            println!(
                "generators (two-sided derivatives of the reversal): {}",
                dual.variety.generators.len()
            );
            println!("atoms: {}", dual.variety.atom_count());
            for (i, witness) in dual.witnesses.iter().enumerate() {
                let (_, handle) = &dual.variety.atoms[i];
                println!(
                    "  atom {i}: witness {} ({} DFA states)",
                    a.alphabet.render_word(witness),
                    handle.size()
                );
                if let Some(dir) = &atoms_dir {
                    std::fs::create_dir_all(dir)?;
                    write_automaton_file(handle.dfa(), &dir.join(format!("atom{i}.json")))?;
                }
            }
            // dual monoid printed as a recognizing pair: letters act from the
            // initial atom, outputs sample the language at the witnesses
            let e_on_letters: Vec<usize> = (0..a.alphabet.len())
                .map(|letter| dual.transitions[letter][dual.initial])
                .collect();
            let f: Vec<usize> =
                dual.witnesses.iter().map(|w| usize::from(l.contains(w))).collect();
            let pair = RecognizingPair {
                monoid: dual.monoid.clone(),
                e_on_letters,
                f,
                variety: VarietySpec::new(VarietyTag::Set)?,
            };
            print!("{}", emit_monoid(&pair, MonoidFormat::Table, &a.alphabet));
            let min_ok = verify_mindual(&l)?;
            println!(
                "syntactic monoid isomorphic to dual monoid: {}",
                if report.iso { "yes" } else { "NO" }
            );
            println!(
                "minimal automaton matches atoms of the left-derivative closure: {}",
                if min_ok { "yes" } else { "NO" }
            );
            if !report.iso || !min_ok {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Lift { input, to, p, output } => {
            let a = input.load()?;
            let target = match to {
                LiftTarget::Pointed => VarietySpec::new(VarietyTag::Pointed)?,
                LiftTarget::Involution => VarietySpec::new(VarietyTag::Involution)?,
                LiftTarget::Jsl => VarietySpec::new(VarietyTag::Semilattice)?,
                LiftTarget::Vect => VarietySpec::new(VarietyTag::Vect(p))?,
            };
            let lifted = synalg::automaton::lift_automaton(&a, &target)?;
            write_automaton_file(&lifted, &output)?;
            println!("lifted {} states to {} ({})", a.size(), lifted.size(), target.tag());
        }
        Command::Check {
            seed,
            instances,
            max_base_states,
            alphabet_size,
            varieties,
            checks,
            replay_dir,
        } => {
            let cfg = CheckConfig {
                seed,
                instance_count: instances,
                max_base_states,
                alphabet_size,
                varieties: parse_varieties(&varieties)?,
                checks: parse_checks(&checks)?,
            };
            let report = run_checks(&cfg)?;
            print!("{}", report.render());
            if !report.passed() {
                for suite in &report.results {
                    for failure in &suite.failures {
                        let name = format!(
                            "synalg-replay-{}-{}-{}.json",
                            failure.check.name(),
                            failure.variety.short_name(),
                            failure.index
                        );
                        let path = replay_dir.join(name);
                        std::fs::write(
                            &path,
                            serde_json::to_string_pretty(&failure.replay).expect("replay") + "\n",
                        )?;
                        eprintln!("replay written to {}", path.display());
                    }
                }
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
