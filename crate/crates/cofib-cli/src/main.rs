use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use cofib::canonical::canonical_form;
use cofib::certfile::{deserialize, serialize, serialize_cofibrant, CertificateFile};
use cofib::certificate::{verify, verify_cofibrant, Status, VerificationReport};
use cofib::enumerate::{counts_table, enumerate, ENUMERATION_LIMIT};
use cofib::suite::{run_suite, DEFAULT_SEED};
use cofib::text::{parse_poset, printable_labels, write_poset, PosetFile};
use cofib::witness::analyze;
use cofib::{Error, Poset};

#[derive(Parser)]
#[command(name = "cofib", version, about = "Cofibrancy certificates for finite posets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a poset, build a witness and verify it.
    Analyze {
        file: PathBuf,
        /// Write the cofibrancy certificate here, and each minimum
        /// inclusion next to it as `<path>.min-<label>`.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Re-check a certificate file against a poset file.
    Verify { certificate: PathBuf, poset: PathBuf },
    /// Count posets up to isomorphism.
    Enumerate {
        n: usize,
        /// Write one poset file per class with exactly `n` elements.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Run the acceptance checks and print the theorem status matrix.
    PaperSuite {
        /// Report results that rest on the single-subdivision axiom as conditional.
        #[arg(long)]
        strict_axioms: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

enum Failure {
    /// Verification failed or no witness was found.
    Check(String),
    /// Unreadable or malformed input.
    Input(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Input(_) => 2,
        }
    }
}

fn input(e: Error) -> Failure {
    Failure::Input(e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_poset(path: &Path) -> Result<PosetFile, Failure> {
    parse_poset(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn cmd_analyze(file: &Path, emit: Option<&Path>) -> Result<(), Failure> {
    let f = load_poset(file)?;
    let p = Arc::new(f.poset);
    println!("poset {}: {} elements", f.name, p.len());
    let a = match analyze(&p) {
        Ok(a) => a,
        Err(e @ (Error::NoWitness(_) | Error::Unverified(_))) => {
            println!("classification: {}", cofib::shapes::classify(&p));
            return Err(Failure::Check(e.to_string()));
        }
        Err(e) => return Err(Failure::Check(format!("no witness route: {e}"))),
    };
    println!("classification: {}", a.classification);
    let r = &a.report;
    println!("route: {} (theorem {}, category {})", r.route, r.theorem, r.category);
    for note in &r.notes {
        println!("note: {note}");
    }
    let (cof, mins) = r.statuses(false);
    println!("cofibrant: {cof}");
    let labels = printable_labels(&p);
    for (m, s) in &mins {
        println!("  minimum {}: {s}", labels[*m]);
    }
    let ok = mins.iter().filter(|(_, s)| *s != Status::Failed).count();
    let mins_ok = ok == mins.len() && mins.len() == p.minimal_elements().len();
    println!("minima: {ok}/{} {}", mins.len(), if mins_ok { "VERIFIED" } else { "FAILED" });
    if let Some(path) = emit {
        write(path, &serialize_cofibrant(&r.certificate))?;
        for (m, c) in &r.minimum_certificates {
            let mut name = path.as_os_str().to_owned();
            name.push(format!(".min-{}", labels[*m]));
            write(Path::new(&name), &serialize(c))?;
        }
        println!("wrote {}", path.display());
    }
    if cof == Status::Failed || !mins_ok {
        return Err(Failure::Check("verification failed".into()));
    }
    Ok(())
}

fn print_report(r: &VerificationReport) -> Result<(), Failure> {
    println!("checks: {}", r.checks.len());
    match r.first_failure() {
        None => {
            println!("verdict: {}", r.status(false));
            Ok(())
        }
        Some(f) => {
            println!("first failure: {f}");
            println!("verdict: FAILED");
            Err(Failure::Check(format!("{} at {} fails", f.rule, f.path)))
        }
    }
}

fn cmd_verify(cert: &Path, poset: &Path) -> Result<(), Failure> {
    let file = deserialize(&read(cert)?).map_err(|e| Failure::Input(format!("{}: {e}", cert.display())))?;
    let f = load_poset(poset)?;
    let want = canonical_form(&f.poset).map_err(input)?;
    let object: Arc<Poset> = match &file {
        CertificateFile::Cofibrant { cert, .. } => cert.object.clone(),
        CertificateFile::Cofibration(c) => c.conclusion.target.clone(),
    };
    let have = canonical_form(&object).map_err(input)?;
    let declared = match &file {
        CertificateFile::Cofibrant { key: Some(k), .. } => k.clone(),
        _ => have.clone(),
    };
    if have != want || declared != want {
        println!("ObjectMismatch: the certificate is about a different poset than {}", f.name);
        return Err(Failure::Check("ObjectMismatch".into()));
    }
    match &file {
        CertificateFile::Cofibrant { cert, .. } => print_report(&verify_cofibrant(cert)),
        CertificateFile::Cofibration(c) => print_report(&verify(c)),
    }
}

fn cmd_enumerate(n: usize, dump: Option<&Path>) -> Result<(), Failure> {
    if n == 0 || n > ENUMERATION_LIMIT {
        return Err(Failure::Input(format!("n must be between 1 and {ENUMERATION_LIMIT}")));
    }
    let rows = counts_table(n).map_err(|e| Failure::Check(e.to_string()))?;
    println!("n  total  connected  semilattices  join  meet  chains  zigzags  trees  gluable  glued");
    for r in &rows {
        let glued = r.glued.map_or("-".to_string(), |g| g.to_string());
        println!(
            "{:<2} {:>5}  {:>9}  {:>12}  {:>4}  {:>4}  {:>6}  {:>7}  {:>5}  {:>7}  {:>5}",
            r.n, r.total, r.connected, r.semilattices, r.join, r.meet, r.chains, r.zigzags, r.trees, r.gluable, glued
        );
    }
    if let Some(dir) = dump {
        fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
        let entries = enumerate(n).map_err(input)?;
        for (i, e) in entries.iter().enumerate() {
            let name = format!("n{n}_{i:03}");
            write(&dir.join(format!("{name}.poset")), &write_poset(&name, &e.representative))?;
        }
        println!("wrote {} classes to {}", entries.len(), dir.display());
    }
    Ok(())
}

fn cmd_paper_suite(strict: bool, seed: u64) -> Result<(), Failure> {
    let r = run_suite(seed, strict);
    print!("{}", r.render());
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Check("acceptance criteria failed".into()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Analyze { file, emit } => cmd_analyze(file, emit.as_deref()),
        Command::Verify { certificate, poset } => cmd_verify(certificate, poset),
        Command::Enumerate { n, dump } => cmd_enumerate(*n, dump.as_deref()),
        Command::PaperSuite { strict_axioms, seed } => cmd_paper_suite(*strict_axioms, *seed),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Check(m) => eprintln!("error: {m}"),
                Failure::Input(m) => eprintln!("input error: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
