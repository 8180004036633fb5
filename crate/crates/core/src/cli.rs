//! Command-line front end. `run` parses arguments, writes the report to
//! `out` and returns the exit status: 0 on success, 1 on a processing
//! error or a failed reproduction check, 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::corpus::Corpus;
use crate::decoder;
use crate::diffalign::{cohens_f_from_eta, effect_size, group_stats, word_diff, PUBLISHED_COUNTS};
use crate::encoder::{parse_stream, render_stream};
use crate::evalmetrics::{bleu, bleu_line, chrf, chrf_line, meteor, meteor_line};
use crate::pipeline::{Pipeline, DATA_DIR_ENV};
use crate::reproduce;
use crate::Error;

#[derive(Debug, Parser)]
#[command(name = "pucci", version, about = "Italian to French interlingua translation and its evaluation")]
struct Cli {
    /// Directory with keys.tsv, lexicon.tsv, simplify.tsv, corrections.tsv
    /// and fixtures/.
    #[arg(long, global = true, env = DATA_DIR_ENV)]
    data_dir: Option<PathBuf>,
    /// Lexicon TSV replacing the shipped one.
    #[arg(long, global = true)]
    lexicon: Option<PathBuf>,
    /// Correction rules TSV replacing the shipped ones.
    #[arg(long, global = true)]
    rules: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Simplify and encode Italian text into the ideogram stream.
    Encode {
        #[arg(long, default_value = "it-fr")]
        pair: String,
        /// Fixture id or file path.
        #[arg(long = "in")]
        input: String,
    },
    /// Decode an ideogram stream into French.
    Decode {
        #[arg(long, default_value = "it-fr")]
        pair: String,
        #[arg(long = "in")]
        input: String,
    },
    /// Translate Italian text into French.
    Translate {
        #[arg(long, default_value = "it-fr")]
        pair: String,
        #[arg(long = "in")]
        input: String,
        /// Print every intermediate stage.
        #[arg(long)]
        trace: bool,
    },
    /// Word-level diff; prints `removals=<n> additions=<m>`.
    Diff {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Also print the aligned hunks.
        #[arg(long)]
        listing: bool,
    },
    /// Score a candidate against a reference.
    Score {
        #[arg(long, value_enum, default_value = "all")]
        metric: Metric,
        #[arg(long)]
        candidate: String,
        #[arg(long)]
        reference: String,
    },
    /// Group means and effect size from the published diff counts.
    Stats,
    /// Regenerate every table and check it against the published numbers.
    Reproduce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Metric {
    Bleu,
    Chrf,
    Meteor,
    All,
}

enum Failure {
    Usage(String),
    Run(Error),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Run(e)
    }
}

/// Parse `args` (program name first) and execute.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = write!(out, "{}", e.render());
            return code;
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(out, "error: {msg}");
            2
        }
        Err(Failure::Run(e)) => {
            let _ = writeln!(out, "error: {e}");
            1
        }
        Err(Failure::Checks) => 1,
    }
}

fn check_pair(pair: &str) -> Result<(), Failure> {
    if pair == "it-fr" {
        Ok(())
    } else {
        Err(Failure::Usage(format!("unsupported language pair `{pair}`; only it-fr")))
    }
}

struct Context {
    data_dir: Option<PathBuf>,
    lexicon: Option<PathBuf>,
    rules: Option<PathBuf>,
}

impl Context {
    fn corpus(&self) -> Result<Corpus, Failure> {
        match &self.data_dir {
            Some(d) if d.join("fixtures").join("manifest.tsv").exists() => {
                Ok(Corpus::from_dir(&d.join("fixtures"))?)
            }
            _ => Ok(Corpus::embedded()),
        }
    }

    fn pipeline(&self) -> Result<Pipeline, Failure> {
        for p in [&self.data_dir, &self.lexicon, &self.rules].into_iter().flatten() {
            if !p.exists() {
                return Err(Failure::Usage(format!("no such path `{}`", p.display())));
            }
        }
        let mut p = match &self.data_dir {
            Some(d) => Pipeline::from_dir(d)?,
            None => Pipeline::embedded()?,
        };
        if let Some(l) = &self.lexicon {
            p = p.with_lexicon(l)?;
        }
        if let Some(r) = &self.rules {
            p = p.with_corrections(r)?;
        }
        Ok(p)
    }

    /// A fixture id, else a readable file.
    fn text(&self, spec: &str) -> Result<String, Failure> {
        let corpus = self.corpus()?;
        if let Ok(f) = corpus.get(spec) {
            return Ok(f.text.clone());
        }
        let path = Path::new(spec);
        if path.is_file() {
            return std::fs::read_to_string(path).map_err(|e| Failure::Run(Error::io(path, e)));
        }
        Err(Failure::Usage(format!(
            "`{spec}` is neither a fixture id nor a file; fixtures: {}",
            corpus.ids().join(", ")
        )))
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let ctx = Context {
        data_dir: cli.data_dir,
        lexicon: cli.lexicon,
        rules: cli.rules,
    };
    let mut emit = |s: String| {
        let _ = writeln!(out, "{s}");
    };
    match cli.command {
        Command::Encode { pair, input } => {
            check_pair(&pair)?;
            let text = ctx.text(&input)?;
            let p = ctx.pipeline()?;
            let stream = p.encode(&p.simplify(&text)).map_err(Error::from)?;
            emit(render_stream(&stream));
        }
        Command::Decode { pair, input } => {
            check_pair(&pair)?;
            let text = ctx.text(&input)?;
            let p = ctx.pipeline()?;
            let stream = parse_stream(&text).map_err(Error::from)?;
            emit(decoder::decode(&stream, &p).map_err(Error::from)?);
        }
        Command::Translate { pair, input, trace } => {
            check_pair(&pair)?;
            let text = ctx.text(&input)?;
            let p = ctx.pipeline()?;
            if trace {
                let t = decoder::trace(&text, &p).map_err(Error::from)?;
                emit(format!("simplified: {}", t.simplified));
                emit(format!("stream:\n{}", render_stream(&t.stream)));
                emit(format!("realized: {}", decoder::detokenize(&t.realized)));
                emit(format!("syntactic: {}", decoder::detokenize(&t.syntactic)));
                emit(format!("morphological: {}", decoder::detokenize(&t.morphological)));
                emit(format!("output: {}", t.output));
            } else {
                emit(decoder::translate(&text, &p).map_err(Error::from)?);
            }
        }
        Command::Diff { a, b, listing } => {
            let d = word_diff(&ctx.text(&a)?, &ctx.text(&b)?);
            emit(d.summary_line());
            if listing {
                emit(d.listing().trim_end().to_string());
            }
        }
        Command::Score {
            metric,
            candidate,
            reference,
        } => {
            let c = ctx.text(&candidate)?;
            let r = ctx.text(&reference)?;
            if matches!(metric, Metric::Bleu | Metric::All) {
                emit(bleu_line(&bleu(&c, &r)));
            }
            if matches!(metric, Metric::Chrf | Metric::All) {
                emit(chrf_line(&chrf(&c, &r)));
            }
            if matches!(metric, Metric::Meteor | Metric::All) {
                emit(meteor_line(&meteor(&c, &r)));
            }
        }
        Command::Stats => {
            let g1 = PUBLISHED_COUNTS[..3].to_vec();
            let g23 = PUBLISHED_COUNTS[3..].to_vec();
            let means = group_stats(&[g1.clone(), g23.clone()]).map_err(Error::from)?;
            let flat = |g: &[(u32, u32)]| -> Vec<f64> {
                g.iter().flat_map(|&(r, a)| [f64::from(r), f64::from(a)]).collect()
            };
            let e = effect_size(&[flat(&g1), flat(&g23)]).map_err(Error::from)?;
            emit(format!(
                "group=1 mean={:.2} sum={} n={}",
                means[0].rounded(2),
                means[0].sum,
                means[0].count
            ));
            emit(format!(
                "group=2_3 mean={:.2} sum={} n={}",
                means[1].rounded(2),
                means[1].sum,
                means[1].count
            ));
            emit(format!(
                "anova eta_squared={:.6} cohens_f={:.6}",
                e.eta_squared, e.cohens_f
            ));
            emit(format!(
                "identity eta_squared={} cohens_f={:.6}",
                reproduce::PUBLISHED_ETA_SQUARED,
                cohens_f_from_eta(reproduce::PUBLISHED_ETA_SQUARED)
            ));
        }
        Command::Reproduce => {
            let report = reproduce::run(&ctx.pipeline()?, &ctx.corpus()?)?;
            let _ = write!(out, "{}", report.render());
            if !report.passed() {
                return Err(Failure::Checks);
            }
        }
    }
    Ok(())
}
