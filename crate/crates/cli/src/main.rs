use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mtc_core::format::{read_hopf, write_hopf};
use mtc_core::report::{
    fusion_doc, modular_doc, report_doc, structure_suite, verify_doc, verlinde_doc, Document,
};
use mtc_core::zoo::{describe, generate, EXAMPLE_NAMES};
use mtc_core::{Error, HopfData};

/// Environment variable overriding the example data directory.
const DATA_DIR_ENV: &str = "MTC_DATA_DIR";

#[derive(Parser)]
#[command(name = "mtc", version, about = "Exact checks for quasitriangular and ribbon Hopf algebras")]
struct Cli {
    /// Omit the generation timestamp so that reports are byte-identical across runs.
    #[arg(long, global = true)]
    no_timestamp: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify every shipped structure of a file.
    Verify { file: String },
    /// Write the Drinfeld double with its canonical R-matrix.
    Double {
        file: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Non-degeneracy report for a quasitriangular file.
    Report { file: String },
    /// S and T operators, SL₂(Z) scalars and the S-transform.
    Modular { file: String },
    /// Fusion rules of the listed simple modules.
    Fusion { file: String },
    /// Semisimple and categorical Verlinde formulas.
    Verlinde { file: String },
    /// Write a bundled example, or every example and a manifest for `all`.
    Gen {
        name: String,
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Json(_) | Error::Field(_) | Error::Dimension(_) => 2,
        Error::MissingStructure(_) => 3,
        Error::Degenerate(_) => 4,
        Error::MissingSimples(_) => 5,
        Error::UnknownExample(_) => 2,
        Error::Verification(_) | Error::Io(_) => 1,
    }
}

fn data_dir() -> PathBuf {
    std::env::var_os(DATA_DIR_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data"))
}

/// A path as given, or else an example file in the data directory.
fn resolve(file: &str) -> PathBuf {
    let p = PathBuf::from(file);
    if p.exists() {
        return p;
    }
    let dir = data_dir();
    for candidate in [dir.join(file), dir.join(format!("{file}.json"))] {
        if candidate.exists() {
            return candidate;
        }
    }
    p
}

fn load(file: &str) -> Result<HopfData, Error> {
    let path = resolve(file);
    if !path.exists() {
        return Err(Error::Parse(format!("{file}: no such file")));
    }
    read_hopf(&path)
}

fn emit(mut doc: Document, stamp: bool) -> u8 {
    if stamp {
        doc.stamp();
    }
    print!("{}", doc.render());
    u8::from(!doc.passed)
}

fn gen_all(dir: &Path) -> Result<(), Error> {
    std::fs::create_dir_all(dir)?;
    let mut manifest = Vec::new();
    for name in EXAMPLE_NAMES {
        let h = generate(name)?;
        let d = describe(name, &h)?;
        write_hopf(&h, &dir.join(&d.file))?;
        println!("wrote {}", dir.join(&d.file).display());
        manifest.push(d);
    }
    let text = serde_json::to_string_pretty(&manifest)? + "\n";
    std::fs::write(dir.join("manifest.json"), text)?;
    println!("wrote {}", dir.join("manifest.json").display());
    Ok(())
}

fn run(cli: &Cli) -> Result<u8, Error> {
    let stamp = !cli.no_timestamp;
    match &cli.command {
        Command::Verify { file } => Ok(emit(verify_doc(&load(file)?), stamp)),
        Command::Double { file, output } => {
            let h = load(file)?;
            if let Some(v) = structure_suite(&h).first_failure() {
                return Err(Error::Verification(v.to_string()));
            }
            let d = h.drinfeld_double()?;
            let doc = verify_doc(&d);
            write_hopf(&d, output)?;
            eprintln!("wrote {} (dim {})", output.display(), d.dim());
            Ok(emit(doc, stamp))
        }
        Command::Report { file } => Ok(emit(report_doc(&load(file)?)?, stamp)),
        Command::Modular { file } => Ok(emit(modular_doc(&load(file)?)?, stamp)),
        Command::Fusion { file } => Ok(emit(fusion_doc(&load(file)?)?, stamp)),
        Command::Verlinde { file } => Ok(emit(verlinde_doc(&load(file)?)?, stamp)),
        Command::Gen { name, output } if name == "all" => gen_all(output).map(|_| 0),
        Command::Gen { name, output } => {
            let h = generate(name)?;
            write_hopf(&h, output)?;
            eprintln!("wrote {}", output.display());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
