//! `bihom`: check and build BiHom-structured algebras stored as JSON
//! documents.
//!
//! Exit codes: 0 when a check passes or an object is built, 1 when a check
//! fails, 2 for unreadable input or bad usage.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context as _, Result};
use bihom::algebra::{Kind, Slot, StructuredAlgebra};
use bihom::check::{check_algebra, check_with_kind};
use bihom::constructions::{
    commutator_poisson, dendriform_sum, derived_algebra, prepoisson_subadjacent, subadjacent_lie, yau_twist,
    DerivedVariant,
};
use bihom::identity::CheckReport;
use bihom::io::{emit_document, emit_matrices, emit_report, parse_matrices, read_document, Document};
use bihom::linalg::{Matrix, Scalar};
use bihom::matched::{bowtie_sum, check_matched_compatibility, matched_pair_prerequisites, MatchedPair};
use bihom::modules::{check_module, check_module_as, regular_bimodule, semidirect_product, twist_bimodule};
use bihom::ooperator::{
    check_o_operator, check_rota_baxter, o_induced_dendriform, o_induced_prelie, o_induced_prepoisson,
    rb_induced_prepoisson, search_rota_baxter, Convention, OOperator,
};
use clap::{Parser, Subcommand, ValueEnum};

/// Witnesses shown in the plain-text report.
const SHOWN_WITNESSES: usize = 10;

#[derive(Parser)]
#[command(name = "bihom", version, about = "Exact checks and constructions for BiHom-structured algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of an algebra, module, matched pair or O-operator.
    Check {
        file: PathBuf,
        /// Class to check against; the stricter of this and the declared kind wins.
        #[arg(long)]
        kind: Option<String>,
        /// Emit the report as canonical JSON.
        #[arg(long)]
        json: bool,
    },
    /// Build a new object from validated inputs.
    Build {
        #[command(subcommand)]
        what: Build,
    },
    /// Exhaustive searches.
    Search {
        #[command(subcommand)]
        what: Search,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Canonical,
    Swapped,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Canonical => Convention::Canonical,
            ConventionArg::Swapped => Convention::Swapped,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Linear,
    Doubling,
}

#[derive(Subcommand)]
enum Build {
    /// Yau twist of an algebra (two maps) or module (four maps: a1, a2, b1, b2).
    Twist {
        file: PathBuf,
        /// Matrix-list document holding the twisting maps.
        #[arg(long)]
        maps: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Subadjacent structure: pre-Poisson to Poisson, pre-Lie to Lie,
    /// dendriform to associative, associative to commutator Poisson,
    /// Poisson to its bracket.
    Subadjacent {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Direct sum of two algebras of the same kind.
    Sum {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Semidirect product of a module with its base.
    Semidirect {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Bowtie sum of a matched pair.
    Bowtie {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Pre-structure on the module space of an O-operator.
    FromOOperator {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "canonical")]
        convention: ConventionArg,
        /// Emit the structure transported to the image of T instead.
        #[arg(long)]
        image: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Pre-structure induced by a Rota-Baxter operator of weight zero.
    FromRotaBaxter {
        file: PathBuf,
        /// Matrix-list document holding exactly one operator.
        #[arg(long)]
        operator: PathBuf,
        #[arg(long, value_enum, default_value = "canonical")]
        convention: ConventionArg,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Derived algebra of order n.
    Derived {
        file: PathBuf,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "linear")]
        variant: VariantArg,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Search {
    /// Rota-Baxter operators with entries from a finite set.
    Rb {
        file: PathBuf,
        /// Comma-separated candidate entries, integers or p/q.
        #[arg(long)]
        entries: String,
        /// Largest number of candidates examined.
        #[arg(long, default_value_t = 1_000_000)]
        limit: u64,
        /// Examine only the first `limit` candidates instead of refusing.
        #[arg(long)]
        truncate: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

/// A finished command: text for stdout and whether it counts as success.
struct Outcome {
    text: String,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(o) => {
            print!("{}", o.text);
            ExitCode::from(if o.ok { 0 } else { 1 })
        }
        Err(e) => match e.downcast_ref::<bihom::Error>() {
            Some(bihom::Error::CheckFailed { what, check, report }) => {
                eprintln!("error: {what} failed its {check} check");
                print!("{}", report.render(SHOWN_WITNESSES));
                ExitCode::from(1)
            }
            _ => {
                eprintln!("error: {e:#}");
                ExitCode::from(2)
            }
        },
    }
}

fn run(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Check { file, kind, json } => {
            let kind = kind.map(|k| Kind::parse(&k).ok_or_else(|| anyhow!("unknown kind {k:?}"))).transpose()?;
            let report = check_document(&load(&file)?, kind)?;
            let text = if json { emit_report(&report) } else { report.render(SHOWN_WITNESSES) };
            Ok(Outcome { text, ok: report.passed() })
        }
        Command::Build { what } => build(what),
        Command::Search { what: Search::Rb { file, entries, limit, truncate, out } } => {
            let alg = load_algebra(&file)?;
            let entries = parse_entries(&entries)?;
            let found = search_rota_baxter(&alg, &entries, limit, truncate)?;
            let text = emit_matrices(&found);
            match out {
                Some(path) => {
                    write(&path, &text)?;
                    Ok(Outcome { text: format!("{} operators written to {}\n", found.len(), path.display()), ok: true })
                }
                None => Ok(Outcome { text, ok: true }),
            }
        }
    }
}

fn load(path: &Path) -> Result<Document> {
    Ok(read_document(path).with_context(|| format!("reading {}", path.display()))?.0)
}

fn load_algebra(path: &Path) -> Result<StructuredAlgebra> {
    match load(path)? {
        Document::Algebra(a) => Ok(a),
        other => bail!("{}: expected an algebra document, found {}", path.display(), other.payload_name()),
    }
}

fn load_matrices(path: &Path) -> Result<Vec<Matrix>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_matrices(&text).with_context(|| format!("reading {}", path.display()))
}

fn parse_entries(csv: &str) -> Result<Vec<Scalar>> {
    csv.split(',')
        .map(|s| s.trim().parse::<Scalar>().map_err(|e| anyhow!("entry {s:?}: {e}")))
        .collect()
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn check_document(doc: &Document, kind: Option<Kind>) -> Result<CheckReport> {
    let same_kind = |declared: Kind| match kind {
        Some(k) if k != declared => bail!("--kind {k} does not apply to a {declared} {}", doc.payload_name()),
        _ => Ok(()),
    };
    Ok(match doc {
        Document::Algebra(a) => match kind {
            Some(k) => check_with_kind(a, k)?,
            None => check_algebra(a)?,
        },
        Document::Module(m) => match kind {
            Some(k) => check_module_as(m, k)?,
            None => check_module(m)?,
        },
        Document::MatchedPair(p) => {
            same_kind(p.kind())?;
            let mut r = matched_pair_prerequisites(p)?;
            r.merge(check_matched_compatibility(p)?);
            r
        }
        Document::OOperator(o) => {
            same_kind(o.module().kind())?;
            check_o_operator(o)?
        }
    })
}

fn built(doc: Document, out: Option<PathBuf>) -> Result<Outcome> {
    let text = emit_document(&doc);
    match out {
        Some(path) => {
            write(&path, &text)?;
            Ok(Outcome { text: format!("{} written to {}\n", doc.payload_name(), path.display()), ok: true })
        }
        None => Ok(Outcome { text, ok: true }),
    }
}

/// Fails with the report unless `alg` satisfies its declared class.
fn validated(alg: StructuredAlgebra, what: &str) -> Result<StructuredAlgebra> {
    let r = check_algebra(&alg)?;
    if !r.passed() {
        let mut text = format!("error: {what} is not a {} algebra\n", alg.kind());
        text.push_str(&r.render(SHOWN_WITNESSES));
        return Err(anyhow!(CheckFailure(text)));
    }
    Ok(alg)
}

#[derive(Debug)]
struct CheckFailure(String);

impl std::fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CheckFailure {}

fn build(what: Build) -> Result<Outcome> {
    let result = build_inner(what);
    match result {
        Err(e) if e.downcast_ref::<CheckFailure>().is_some() => Ok(Outcome { text: e.to_string(), ok: false }),
        other => other,
    }
}

fn build_inner(what: Build) -> Result<Outcome> {
    match what {
        Build::Twist { file, maps, out } => {
            let maps = load_matrices(&maps)?;
            match (load(&file)?, maps.as_slice()) {
                (Document::Algebra(a), [a1, a2]) => {
                    let a = validated(a, "the input")?;
                    built(Document::Algebra(yau_twist(&a, a1, a2)?), out)
                }
                (Document::Module(m), [a1, a2, b1, b2]) => built(Document::Module(twist_bimodule(&m, a1, a2, b1, b2)?), out),
                (doc, ms) => bail!("cannot twist a {} with {} maps", doc.payload_name(), ms.len()),
            }
        }
        Build::Subadjacent { file, out } => {
            let a = validated(load_algebra(&file)?, "the input")?;
            let s = match a.kind() {
                Kind::NcPrePoisson => prepoisson_subadjacent(&a)?,
                Kind::PreLie => subadjacent_lie(&a)?,
                Kind::Dendriform => dendriform_sum(&a)?,
                Kind::Associative => commutator_poisson(&a)?,
                Kind::NcPoisson => a.restrict(Kind::Lie, &[Slot::Bracket])?,
                k => bail!("no subadjacent structure for a {k} algebra"),
            };
            built(Document::Algebra(s), out)
        }
        Build::Sum { first, second, out } => {
            let (a, b) = (load_algebra(&first)?, load_algebra(&second)?);
            if a.kind() != b.kind() {
                bail!("summands have kinds {} and {}", a.kind(), b.kind());
            }
            let kind = a.kind();
            let zero = |n: usize, m: usize| {
                kind.action_slots().iter().map(|s| (*s, bihom::linalg::Tensor3::zeros(n, m, m))).collect()
            };
            let (da, db) = (a.dim(), b.dim());
            let p = MatchedPair::new(kind, a, b, zero(da, db), zero(db, da))?;
            built(Document::Algebra(bowtie_sum(&p)?), out)
        }
        Build::Semidirect { file, out } => match load(&file)? {
            Document::Module(m) => built(Document::Algebra(semidirect_product(&m)?), out),
            doc => bail!("expected a module document, found {}", doc.payload_name()),
        },
        Build::Bowtie { file, out } => match load(&file)? {
            Document::MatchedPair(p) => built(Document::Algebra(bowtie_sum(&p)?), out),
            doc => bail!("expected a matched_pair document, found {}", doc.payload_name()),
        },
        Build::FromOOperator { file, convention, image, out } => {
            let o = match load(&file)? {
                Document::OOperator(o) => o,
                doc => bail!("expected an o_operator document, found {}", doc.payload_name()),
            };
            built(Document::Algebra(from_operator(&o, convention.into(), image)?), out)
        }
        Build::FromRotaBaxter { file, operator, convention, out } => {
            let a = load_algebra(&file)?;
            let r = match load_matrices(&operator)?.as_slice() {
                [r] => r.clone(),
                ms => bail!("expected one operator, found {}", ms.len()),
            };
            let conv = convention.into();
            let s = if a.kind() == Kind::NcPoisson {
                rb_induced_prepoisson(&a, &r, conv)?
            } else {
                let a = validated(a, "the input")?;
                let rep = check_rota_baxter(&a, &r)?;
                if !rep.passed() {
                    let text = format!("error: the operator is not Rota-Baxter\n{}", rep.render(SHOWN_WITNESSES));
                    return Err(anyhow!(CheckFailure(text)));
                }
                from_operator(&OOperator::new(regular_bimodule(&a)?, r)?, conv, false)?
            };
            built(Document::Algebra(s), out)
        }
        Build::Derived { file, n, variant, out } => {
            let v = match variant {
                VariantArg::Linear => DerivedVariant::Linear,
                VariantArg::Doubling => DerivedVariant::Doubling,
            };
            built(Document::Algebra(derived_algebra(&load_algebra(&file)?, n, v)?), out)
        }
    }
}

fn from_operator(o: &OOperator, conv: Convention, image: bool) -> Result<StructuredAlgebra> {
    let base = o.module().kind();
    if image && base != Kind::NcPoisson {
        bail!("--image needs a Poisson O-operator");
    }
    Ok(match base {
        Kind::Associative => o_induced_dendriform(o, conv)?,
        Kind::Lie => o_induced_prelie(o)?,
        Kind::NcPoisson => {
            let (v, img) = o_induced_prepoisson(o, conv)?;
            if image { img.algebra } else { v }
        }
        k => bail!("no induced structure for a {k} O-operator"),
    })
}
