//! Command-line front end: composing, generating, varying, rendering and
//! decomposing patterns from the shell.
//!
//! Exit codes: 0 on success, 1 for validation and color errors, 2 for
//! I/O errors, 64 for usage errors. Error paths write a one-line
//! diagnostic to standard error and nothing to standard output.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ostinato::budgen::{generate, BudGeneratingSystem, Mode, RandomSource};
use ostinato::render::{
    render, to_abc, to_json_events, AbcHeader, Note, RootedScale, Scale, Tempo,
};
use ostinato::text::{
    format_tree, parse_degree_pattern, parse_multipattern, parse_pattern, parse_rhythm_pattern,
    parse_tree, scan_token_warnings, PatternLibrary,
};
use ostinato::variations::VariationSpec;
use ostinato::CompositionTree;

#[derive(Parser)]
#[command(name = "ostinato", version, about = "Composable musical patterns")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Graft one multi-pattern into a slot of another.
    Compose {
        /// Receiving multi-pattern, e.g. ". -2 -1 . 0 ; 0 1 . . 1".
        #[arg(allow_hyphen_values = true)]
        left: String,
        /// Multi-pattern grafted into the slot.
        #[arg(allow_hyphen_values = true)]
        right: String,
        /// Slot to graft into, numbered from 1.
        #[arg(long)]
        at: usize,
    },
    /// Evaluate a parenthesized composition tree.
    EvalTree {
        /// Tree file, or `-` for standard input. `(name child ...)` is a
        /// node, `_` a leaf; `eps`, `rest` and `downup` are built in.
        input: String,
        /// Library file of named patterns: one `name = pattern` per line.
        #[arg(long)]
        library: Option<PathBuf>,
    },
    /// Run a generating system.
    Generate {
        /// System file (JSON).
        #[arg(long)]
        system: PathBuf,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Number of iterations.
        #[arg(short = 'k', long = "steps")]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the derivation trace to this file (JSON).
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Build a variation system from a base pattern, optionally running it.
    Vary {
        #[arg(long, value_enum)]
        kind: VaryKind,
        /// Base pattern (one voice).
        #[arg(long, allow_hyphen_values = true)]
        pattern: String,
        /// tem: largest stretch, in rest units.
        #[arg(long)]
        stretch: Option<usize>,
        /// rhy: rhythm word, e.g. "xx.x." (`x` beat, `.` rest).
        #[arg(long)]
        rhythm: Option<String>,
        /// har/arp: chord or arpeggio degrees, e.g. "0 5 -7".
        #[arg(long, allow_hyphen_values = true)]
        degrees: Option<String>,
        /// Write the system file here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also generate: number of iterations.
        #[arg(short = 'k', long = "steps")]
        steps: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Partial)]
        mode: ModeArg,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Interpret a multi-pattern as a musical phrase.
    Render {
        /// Multi-pattern text, or `-` for standard input.
        #[arg(allow_hyphen_values = true)]
        pattern: String,
        /// Built-in name (major, harmonic-minor, natural-minor,
        /// hirajoshi) or comma-separated parts, e.g. "2,1,4,1,4".
        #[arg(long)]
        scale: String,
        /// Root note as step:octave, e.g. "9:3".
        #[arg(long)]
        root: String,
        /// Eighth notes per minute.
        #[arg(long, default_value_t = 128)]
        tempo: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Abc)]
        format: FormatArg,
        #[arg(long, default_value = "")]
        title: String,
        #[arg(long, default_value = "Am")]
        key: String,
        #[arg(long, default_value_t = 1)]
        index: u32,
    },
    /// Express a one-voice pattern as a tree over the three generators.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        pattern: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Partial,
    Full,
    Colored,
}

impl From<ModeArg> for Mode {
    fn from(mode: ModeArg) -> Mode {
        match mode {
            ModeArg::Partial => Mode::Partial,
            ModeArg::Full => Mode::Full,
            ModeArg::Colored => Mode::Colored,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VaryKind {
    Tem,
    Rhy,
    Har,
    Arp,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Abc,
    Json,
}

enum CliError {
    Domain(ostinato::Error),
    Io {
        path: String,
        source: std::io::Error,
    },
    Usage(String),
}

impl From<ostinato::Error> for CliError {
    fn from(error: ostinato::Error) -> Self {
        CliError::Domain(error)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Domain(error) => write!(f, "{error}"),
            CliError::Io { path, source } => write!(f, "{path}: {source}"),
            CliError::Usage(message) => write!(f, "{message}"),
        }
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Io { .. } => 2,
            CliError::Usage(_) => 64,
        }
    }
}

fn read_input(path_or_dash: &str) -> Result<String, CliError> {
    if path_or_dash == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|source| CliError::Io {
                path: "<stdin>".into(),
                source,
            })?;
        Ok(text)
    } else {
        read_file(Path::new(path_or_dash))
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn parse_scale(text: &str) -> Result<Scale, CliError> {
    if let Some(scale) = Scale::named(text) {
        return Ok(scale);
    }
    if text.contains(',') || text.chars().all(|c| c.is_ascii_digit()) {
        let parts = text
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|_| CliError::Usage(format!("bad scale part {part:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(Scale::new(parts)?);
    }
    Err(CliError::Usage(format!(
        "unknown scale {text:?}: use a built-in name or comma-separated parts"
    )))
}

fn parse_root(text: &str, eta: u32) -> Result<Note, CliError> {
    let (step, octave) = text
        .split_once(':')
        .ok_or_else(|| CliError::Usage(format!("bad root {text:?}: expected step:octave")))?;
    let step: u32 = step
        .parse()
        .map_err(|_| CliError::Usage(format!("bad root step {step:?}")))?;
    let octave: i32 = octave
        .parse()
        .map_err(|_| CliError::Usage(format!("bad root octave {octave:?}")))?;
    Ok(Note::new(step, octave, eta)?)
}

/// Runs the generation part shared by `generate` and `vary`.
fn run_generation(
    system: &BudGeneratingSystem,
    mode: Mode,
    steps: usize,
    seed: u64,
    trace_path: Option<&Path>,
) -> Result<String, CliError> {
    let mut rng = RandomSource::new(seed);
    let (result, trace) = generate(system, mode, steps, &mut rng)?;
    if let Some(path) = trace_path {
        write_file(path, &trace.to_json())?;
    }
    Ok(format!("{result}\n"))
}

fn execute(command: Command) -> Result<String, CliError> {
    match command {
        Command::Compose { left, right, at } => {
            let left = parse_multipattern(&left)?;
            let right = parse_multipattern(&right)?;
            Ok(format!("{}\n", left.compose(at, &right)?))
        }

        Command::EvalTree { input, library } => {
            let text = read_input(&input)?;
            let library = match library {
                Some(path) => PatternLibrary::parse(&read_file(&path)?)?,
                None => PatternLibrary::new(),
            };
            let tree = parse_tree(&text, &library)?;
            let voices = infer_voice_count(&tree);
            Ok(format!("{}\n", tree.eval(voices)?))
        }

        Command::Generate {
            system,
            mode,
            steps,
            seed,
            trace,
        } => {
            let system = BudGeneratingSystem::from_json(&read_file(&system)?)?;
            run_generation(&system, mode.into(), steps, seed, trace.as_deref())
        }

        Command::Vary {
            kind,
            pattern,
            stretch,
            rhythm,
            degrees,
            out,
            steps,
            seed,
            mode,
            trace,
        } => {
            let base = parse_pattern(&pattern)?;
            let spec = match kind {
                VaryKind::Tem => VariationSpec::Temporize {
                    base,
                    max_stretch: stretch
                        .ok_or_else(|| CliError::Usage("--kind tem needs --stretch".into()))?,
                },
                VaryKind::Rhy => VariationSpec::Rhythmize {
                    base,
                    rhythm: parse_rhythm_pattern(
                        &rhythm
                            .ok_or_else(|| CliError::Usage("--kind rhy needs --rhythm".into()))?,
                    )?,
                },
                VaryKind::Har => VariationSpec::Harmonize {
                    base,
                    chord: parse_degree_pattern(
                        &degrees
                            .ok_or_else(|| CliError::Usage("--kind har needs --degrees".into()))?,
                    )?,
                },
                VaryKind::Arp => VariationSpec::Arpeggiate {
                    base,
                    arpeggio: parse_degree_pattern(
                        &degrees
                            .ok_or_else(|| CliError::Usage("--kind arp needs --degrees".into()))?,
                    )?,
                },
            };
            let system = spec.build()?;
            let mut output = String::new();
            match out {
                Some(path) => write_file(&path, &system.to_json())?,
                None => output.push_str(&system.to_json()),
            }
            if let Some(steps) = steps {
                output.push_str(&run_generation(
                    &system,
                    mode.into(),
                    steps,
                    seed,
                    trace.as_deref(),
                )?);
            }
            Ok(output)
        }

        Command::Render {
            pattern,
            scale,
            root,
            tempo,
            format,
            title,
            key,
            index,
        } => {
            let text = if pattern == "-" {
                read_input("-")?
            } else {
                pattern
            };
            for warning in scan_token_warnings(&text) {
                eprintln!("warning: {warning}");
            }
            let pattern = parse_multipattern(&text)?;
            let scale = parse_scale(&scale)?;
            if scale.has_zero_parts() {
                eprintln!(
                    "warning: the scale has zero-width steps; distinct degrees will share a pitch"
                );
            }
            let root = parse_root(&root, scale.eta())?;
            let rooted = RootedScale::new(scale, root)?;
            let phrase = render(&pattern, &rooted, Tempo::new(tempo)?)?;
            match format {
                FormatArg::Abc => {
                    let header = AbcHeader { index, title, key };
                    Ok(to_abc(&phrase, &header)?)
                }
                FormatArg::Json => Ok(to_json_events(&phrase)),
            }
        }

        Command::Decompose { pattern } => {
            let pattern = parse_pattern(&pattern)?;
            let tree = pattern.decompose();
            let names = std::collections::HashMap::new();
            Ok(format!("{}\n", format_tree(&tree, &names)?))
        }
    }
}

/// Voice count of the first labelled node; a bare leaf defaults to one.
fn infer_voice_count(tree: &CompositionTree) -> usize {
    match tree {
        CompositionTree::Leaf => 1,
        CompositionTree::Node { label, .. } => label.voice_count(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(error) => {
            let code = match error.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = error.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli.command) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(error.code())
        }
    }
}
