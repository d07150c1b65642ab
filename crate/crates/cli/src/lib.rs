//! The `afp` command-line tool.
//!
//! Exit codes: `0` for success and for every mathematical verdict, `1` when
//! an axiom check fails, `2` for malformed input or usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use afp_core::andre::{AndreSide, AndreSpec};
use afp_core::collineation::{classify, classify_ternary, translation_candidate};
use afp_core::formats::{self, FormatError};
use afp_core::gf::{FiniteField, GaloisGroup};
use afp_core::plane::{AffinePlane, CoordinateFrame};
use afp_core::quasifield::QuasiField;
use afp_core::ternary::{find_isomorphism, find_isotopism, TernaryRing};

#[derive(Debug, Parser)]
#[command(name = "afp", version, about = "Finite affine planes, ternary rings and quasi-fields")]
struct Cli {
    /// Worker threads for parallel searches (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Print timing information to standard error.
    #[arg(long, short, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the addition and multiplication tables of GF(p^n).
    Gf {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
        /// Also write the field as a QF file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build an Andre quasi-field.
    Andre(AndreArgs),
    /// Plane operations.
    Plane {
        #[command(subcommand)]
        command: PlaneCommand,
    },
    /// Check the axioms of a stored structure.
    Check {
        kind: Kind,
        file: PathBuf,
    },
    /// Coordinatize a plane with respect to a frame.
    Coordinatize {
        plane: PathBuf,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        z: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Search for an isomorphism between two ternary rings.
    Iso { first: PathBuf, second: PathBuf },
    /// Search for an isotopism between two ternary rings.
    Isotopy { first: PathBuf, second: PathBuf },
    /// Construct and verify the translation taking one point to another.
    Translate {
        plane: PathBuf,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        /// Write the translation as a COLL file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether the plane of a quasi-field or ternary ring is Desarguesian.
    Classify { file: PathBuf },
    /// Convert between QF and TRS files.
    Convert {
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Args)]
struct AndreArgs {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    n: usize,
    /// Degree of the fixed field over the prime field.
    #[arg(long)]
    subfield_deg: usize,
    /// Comma-separated generator exponents, one per norm-image element in
    /// increasing encoding; the first must be 0.
    #[arg(long, value_delimiter = ',')]
    phi: Vec<usize>,
    #[arg(long, value_enum, default_value_t = Side::Left)]
    side: Side,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum PlaneCommand {
    /// Build the plane of a ternary ring.
    Build {
        trs: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Ternary,
    Quasifield,
    Plane,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Side {
    Left,
    Right,
}

/// Why a command did not succeed.
#[derive(Debug)]
enum Failure {
    /// An axiom check failed (exit 1).
    Check(String),
    /// Malformed input or arguments (exit 2).
    Input(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Check(_) => 1,
            Failure::Input(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Check(m) | Failure::Input(m) => m,
        }
    }
}

fn input(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

type Outcome = Result<(), Failure>;

/// Runs the tool with the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

/// Runs the tool, writing the report to `out` and diagnostics to `err`.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let started = Instant::now();
    let mut report = Vec::new();
    let result = match cli.jobs {
        Some(0) => Err(Failure::Input("--jobs must be at least 1".into())),
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| dispatch(cli.command, &mut report)),
            Err(e) => Err(input(e)),
        },
        None => dispatch(cli.command, &mut report),
    };
    let result = result.and(out.write_all(&report).map_err(|e| input(format!("cannot write output: {e}"))));
    if cli.verbose {
        let _ = writeln!(err, "elapsed {:.3?}", started.elapsed());
    }
    match result {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "afp: {}", f.message());
            f.code()
        }
    }
}

fn dispatch(command: Command, out: &mut Vec<u8>) -> Outcome {
    match command {
        Command::Gf { p, n, out: path } => gf(p, n, path.as_deref(), out),
        Command::Andre(args) => andre(args, out),
        Command::Plane { command: PlaneCommand::Build { trs, out: path } } => plane_build(&trs, &path, out),
        Command::Check { kind, file } => check(kind, &file, out),
        Command::Coordinatize { plane, l, m, z, out: path } => coordinatize(&plane, CoordinateFrame { l, m, z }, &path, out),
        Command::Iso { first, second } => iso(&first, &second, out),
        Command::Isotopy { first, second } => isotopy(&first, &second, out),
        Command::Translate { plane, from, to, out: path } => translate(&plane, from, to, path.as_deref(), out),
        Command::Classify { file } => classify_file(&file, out),
        Command::Convert { input, out: path } => convert(&input, &path, out),
    }
}

macro_rules! say {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).map_err(|e| Failure::Input(format!("cannot write output: {e}")))
    };
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Outcome {
    std::fs::write(path, text).map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))
}

fn parsed<T>(path: &Path, r: Result<T, FormatError>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_validated_trs(path: &Path) -> Result<TernaryRing, Failure> {
    let mut t = parsed(path, formats::read_trs(&read(path)?))?;
    t.validate().map_err(|e| Failure::Check(format!("{}: {e}", path.display())))?;
    Ok(t)
}

fn join(values: impl IntoIterator<Item = impl ToString>) -> String {
    values.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn gf(p: usize, n: usize, path: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let k = FiniteField::new(p, n).map_err(input)?;
    let q = k.order();
    say!(out, "field GF({q}) = GF({p}^{n})")?;
    say!(out, "modulus {}", join(k.modulus()))?;
    say!(out, "generator {}", k.generator())?;
    for (name, table) in [("add", k.add_table()), ("mul", k.mul_table())] {
        say!(out, "{name}")?;
        for row in table.chunks(q) {
            say!(out, "{}", join(row))?;
        }
    }
    if let Some(path) = path {
        let qf = QuasiField::from_field(&k).map_err(input)?;
        write(path, &formats::write_qf(&qf))?;
    }
    Ok(())
}

fn andre(args: AndreArgs, out: &mut dyn Write) -> Outcome {
    let field = Arc::new(FiniteField::new(args.p, args.n).map_err(input)?);
    let group = Arc::new(GaloisGroup::new(&field, args.subfield_deg).map_err(input)?);
    if args.phi.first() != Some(&0) {
        return Err(Failure::Input("--phi must start with 0, since phi(1) is the identity".into()));
    }
    let spec = AndreSpec::new(field, group, args.phi).map_err(input)?;
    let side = match args.side {
        Side::Left => AndreSide::Left,
        Side::Right => AndreSide::Right,
    };
    let k = spec.build(side).map_err(input)?;
    say!(out, "field GF({})", spec.field().order())?;
    say!(out, "group order {} generator x -> x^({}^{})", spec.group().order(), args.p, args.subfield_deg)?;
    say!(out, "fixed field {}", join(spec.fixed_field()))?;
    say!(out, "norm image {}", join(spec.norm_image()))?;
    say!(out, "phi {}", join(spec.phi()))?;
    say!(out, "side {}", if side == AndreSide::Left { "left" } else { "right" })?;
    say!(out, "predicts associative {}", yes_no(spec.predicts_associative()))?;
    say!(out, "predicts right-distributive {}", yes_no(spec.predicts_right_distributive()))?;
    say!(out, "{}", k.check_vw())?;
    if let Some(path) = args.out {
        write(&path, &formats::write_qf(&k))?;
    }
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn plane_build(trs: &Path, path: &Path, out: &mut dyn Write) -> Outcome {
    let t = read_validated_trs(trs)?;
    let plane = AffinePlane::from_ternary(&t).map_err(input)?;
    say!(out, "points {} lines {}", plane.point_count(), plane.line_count())?;
    write(path, &formats::write_aplane(&plane))
}

fn check(kind: Kind, path: &Path, out: &mut dyn Write) -> Outcome {
    let text = read(path)?;
    let (report, ok) = match kind {
        Kind::Ternary => {
            let r = parsed(path, formats::read_trs(&text))?.check_axioms();
            (r.to_string(), r.all_pass())
        }
        Kind::Quasifield => {
            let r = parsed(path, formats::read_qf(&text))?.check_vw();
            (r.to_string(), r.is_left() || r.is_right())
        }
        Kind::Plane => {
            let r = parsed(path, formats::read_aplane(&text))?.check_axioms();
            (r.to_string(), r.all_pass())
        }
    };
    say!(out, "{report}")?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Check(format!("{}: axiom check failed", path.display())))
    }
}

fn read_plane(path: &Path) -> Result<AffinePlane, Failure> {
    parsed(path, formats::read_aplane(&read(path)?))
}

fn coordinatize(plane: &Path, frame: CoordinateFrame, path: &Path, out: &mut dyn Write) -> Outcome {
    let p = read_plane(plane)?;
    let report = p.check_axioms();
    if !report.all_pass() {
        say!(out, "{report}")?;
        return Err(Failure::Check(format!("{}: plane axioms fail", plane.display())));
    }
    let (ring, coords) = p.coordinatize(frame).map_err(input)?;
    say!(out, "order {}", coords.order())?;
    say!(out, "origin {}", coords.origin())?;
    say!(out, "labels {}", join(coords.labels()))?;
    write(path, &formats::write_trs(&ring))
}

fn iso(a: &Path, b: &Path, out: &mut dyn Write) -> Outcome {
    let (s, t) = (read_validated_trs(a)?, read_validated_trs(b)?);
    match find_isomorphism(&s, &t).map_err(input)? {
        Some(map) => say!(out, "isomorphic\nmap {}", join(map)),
        None => say!(out, "not isomorphic"),
    }
}

fn isotopy(a: &Path, b: &Path, out: &mut dyn Write) -> Outcome {
    let (s, t) = (read_validated_trs(a)?, read_validated_trs(b)?);
    match find_isotopism(&s, &t).map_err(input)? {
        Some(iso) => say!(out, "isotopic\nF {}\nG {}\nH {}", join(&iso.f), join(&iso.g), join(&iso.h)),
        None => say!(out, "not isotopic"),
    }
}

fn translate(plane: &Path, from: usize, to: usize, path: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let p = read_plane(plane)?;
    let report = p.check_axioms();
    if !report.all_pass() {
        say!(out, "{report}")?;
        return Err(Failure::Check(format!("{}: plane axioms fail", plane.display())));
    }
    match translation_candidate(&p, from, to).map_err(input)? {
        Some(cert) => {
            say!(out, "translation")?;
            say!(out, "trace classes {}", join(&cert.trace_classes))?;
            say!(out, "fixed-point-free {}", yes_no(cert.fixed_point_free))?;
            if let Some(path) = path {
                write(path, &formats::write_coll(cert.perm()))?;
            }
            Ok(())
        }
        None => say!(out, "no translation"),
    }
}

enum Structure {
    Qf(QuasiField),
    Trs(TernaryRing),
}

fn read_structure(path: &Path) -> Result<Structure, Failure> {
    let text = read(path)?;
    if text.starts_with("QF ") {
        Ok(Structure::Qf(parsed(path, formats::read_qf(&text))?))
    } else if text.starts_with("TRS ") {
        Ok(Structure::Trs(parsed(path, formats::read_trs(&text))?))
    } else {
        Err(Failure::Input(format!("{}: line 1: expected a QF or TRS header", path.display())))
    }
}

fn classify_file(path: &Path, out: &mut dyn Write) -> Outcome {
    let result = match read_structure(path)? {
        Structure::Qf(k) => {
            let r = k.check_vw();
            if !r.is_left() && !r.is_right() {
                say!(out, "{r}")?;
                return Err(Failure::Check(format!("{}: not a quasi-field", path.display())));
            }
            classify(&k)
        }
        Structure::Trs(mut t) => {
            t.validate().map_err(|e| Failure::Check(format!("{}: {e}", path.display())))?;
            classify_ternary(&t)
        }
    };
    say!(out, "{}", result.map_err(input)?)
}

fn convert(from: &Path, path: &Path, out: &mut dyn Write) -> Outcome {
    match read_structure(from)? {
        Structure::Qf(k) => {
            let t = k.to_ternary().map_err(|e| Failure::Check(format!("{}: {e}", from.display())))?;
            say!(out, "wrote TRS of order {}", t.order())?;
            write(path, &formats::write_trs(&t))
        }
        Structure::Trs(mut t) => {
            t.validate().map_err(|e| Failure::Check(format!("{}: {e}", from.display())))?;
            match QuasiField::from_ternary(&t).map_err(input)? {
                Some(k) => {
                    say!(out, "wrote QF of order {}", k.order())?;
                    write(path, &formats::write_qf(&k))
                }
                None => Err(Failure::Check(format!("{}: ternary ring is not linear", from.display()))),
            }
        }
    }
}
