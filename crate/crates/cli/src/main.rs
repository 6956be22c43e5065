use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hopf_galois::braiding::check_qt_element;
use hopf_galois::families::{braided_line, c_object, default_prime, hnd, qt_congruence, r_s, HndParams};
use hopf_galois::galois::{
    azumaya_check, check_cocycle, check_galois, cocycle_twist, cotensor, gamma_map, galois_invariant,
    has_normal_basis, opposite_galois, upsilon, CocycleData, GaloisObject,
};
use hopf_galois::hopf::{verify_algebra, verify_hopf};
use hopf_galois::modcat::{algebra_linearity, verify_comodule_algebra, verify_module_algebra, BraidedHopf};
use hopf_galois::{Error, Field, Matrix, Rationals};
use hopf_galois_cli::files::{
    prime_field, AlgebraFile, Codec, FamilyJson, FieldJson, FileError, InvariantJson,
};
use hopf_galois_cli::report::Report;
use serde_json::Value;

#[derive(Parser)]
#[command(name = "hopfcalc", version, about = "Exact computations with Hopf algebras, braidings and Galois objects")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the axioms of a structure stored in a JSON file.
    Verify {
        kind: VerifyKind,
        file: PathBuf,
        /// Hopf algebra acting or coacting; defaults to the file's `over` entry.
        #[arg(long)]
        over: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Emit H(n, d), the braided line B, or a two-dimensional Galois object over B.
    Family {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Comma-separated odd exponents d_1,...,d_n.
        #[arg(long, default_value = "")]
        d: String,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        p: Option<u64>,
        /// Emit the braided line instead of H(n, d).
        #[arg(long)]
        line: bool,
        /// Emit C(a; alpha), written `a:alpha_1,...,alpha_{n-1}`.
        #[arg(long, value_name = "A:ALPHA")]
        object: Option<String>,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Operations on Galois objects.
    Galois {
        op: GaloisOp,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        over: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        emit: Option<PathBuf>,
        /// Cocycle values sigma(e_i (x) e_j), row-major, comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VerifyKind {
    Hopf,
    Algebra,
    Qt,
    ModuleAlgebra,
    ComoduleAlgebra,
    Galois,
    Azumaya,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GaloisOp {
    Cotensor,
    Opposite,
    Invariant,
    NormalBasis,
    Twist,
    Upsilon,
    Roundtrip,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    File(#[from] FileError),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

impl From<hopf_galois::exact::ExactError> for CliError {
    fn from(e: hopf_galois::exact::ExactError) -> Self {
        CliError::Core(e.into())
    }
}

impl From<hopf_galois::hopf::HopfError> for CliError {
    fn from(e: hopf_galois::hopf::HopfError) -> Self {
        CliError::Core(e.into())
    }
}

struct Outcome {
    stdout: String,
    pass: bool,
}

impl Outcome {
    fn report(r: Report) -> Self {
        Outcome {
            pass: r.pass,
            stdout: r.to_json(),
        }
    }
}

/// Errors that mean "the input is well-formed but the property fails".
fn is_mathematical(e: &Error) -> bool {
    matches!(
        e,
        Error::Verification(_)
            | Error::BraidingNotBLinear(_)
            | Error::MonodromyFails
            | Error::NotClosed(_)
            | Error::NotAzumaya(_)
            | Error::NotGalois(_)
            | Error::NotClassifiableShape(_)
            | Error::SearchBudgetExceeded(_)
    )
}

macro_rules! with_field {
    ($fj:expr, $codec:ident => $body:expr) => {
        match $fj {
            FieldJson::Prime { .. } => {
                let $codec = Codec::new(prime_field($fj)?, $fj.clone());
                $body
            }
            FieldJson::Rational => {
                let $codec = Codec::new(Rationals, $fj.clone());
                $body
            }
        }
    };
}

fn read_opt(p: &Option<PathBuf>) -> Result<Option<AlgebraFile>, CliError> {
    Ok(p.as_deref().map(AlgebraFile::read).transpose()?)
}

fn verify<F: Field>(
    codec: &Codec<F>,
    kind: VerifyKind,
    file: &AlgebraFile,
    over: Option<&AlgebraFile>,
    seed: u64,
) -> Result<Outcome, CliError> {
    let (check, rep) = match kind {
        VerifyKind::Hopf => {
            let b = codec.braided_hopf(file)?;
            let rep = if b.cat().is_vect() { verify_hopf(b.hopf(), None)? } else { b.verify()? };
            ("hopf", rep)
        }
        VerifyKind::Algebra => {
            let alg = codec.algebra(file)?;
            let mut rep = verify_algebra(&alg)?;
            if file.ambient.is_some() {
                let cat = codec.category(file)?;
                let carrier = codec.carrier(file, &cat)?;
                rep.extend(algebra_linearity(&cat, &alg, &carrier));
            }
            ("algebra", rep)
        }
        VerifyKind::Qt => {
            let h = codec.hopf(file)?;
            ("qt", check_qt_element(&h, &codec.rmatrix_element(file)?)?)
        }
        VerifyKind::ModuleAlgebra => {
            let h = codec.over(file, over)?;
            ("module-algebra", verify_module_algebra(&h, &codec.module_algebra(file, &h)?)?)
        }
        VerifyKind::ComoduleAlgebra => {
            let h = codec.over(file, over)?;
            ("comodule-algebra", verify_comodule_algebra(&h, &codec.comodule_algebra(file, &h)?)?)
        }
        VerifyKind::Galois => {
            let h = codec.over(file, over)?;
            ("galois", check_galois(&h, &codec.comodule_algebra(file, &h)?)?)
        }
        VerifyKind::Azumaya => {
            let alg = codec.algebra(file)?;
            let cat = if over.is_some() || file.over.is_some() {
                codec.over(file, over)?.cat().clone()
            } else {
                codec.category(file)?
            };
            let carrier = codec.carrier(file, &cat)?;
            ("azumaya", azumaya_check(&alg, &cat.braid(&carrier, &carrier))?)
        }
    };
    Ok(Outcome::report(Report::from_axioms(check, &rep, seed)))
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse().map_err(|_| CliError::Usage(format!("bad {what} entry {x:?}"))))
        .collect()
}

fn deliver(file: &AlgebraFile, emit: &Option<PathBuf>) -> Result<Outcome, CliError> {
    match emit {
        Some(path) => {
            file.write(path)?;
            Ok(Outcome {
                stdout: format!("{}\n", path.display()),
                pass: true,
            })
        }
        None => Ok(Outcome {
            stdout: file.to_json(),
            pass: true,
        }),
    }
}

#[allow(clippy::too_many_arguments)]
fn family(
    n: usize,
    m: usize,
    d: &str,
    s: Option<usize>,
    p: Option<u64>,
    line: bool,
    object: Option<&str>,
    emit: &Option<PathBuf>,
) -> Result<Outcome, CliError> {
    let params = HndParams::new(n, m, parse_list(d, "d")?);
    params.validate()?;
    let prime = p.unwrap_or_else(|| default_prime(m));
    let header = FieldJson::Prime {
        p: prime,
        omega_order: Some(2 * m as u64),
    };
    let codec = Codec::new(prime_field(&header)?, header);
    let f = codec.field();
    let meta = FamilyJson {
        n,
        m,
        d: params.d.clone(),
        s,
    };
    if !line && object.is_none() {
        let h = hnd(&params, f)?;
        let ds: Vec<String> = params.d.iter().map(usize::to_string).collect();
        let mut file = codec.emit_hopf(&format!("H({n},{m},({}))", ds.join(",")), &h);
        if let Some(s) = s {
            codec.emit_rmatrix(&mut file, r_s(&h, m, s)?.element());
        }
        file.family = Some(meta);
        return deliver(&file, emit);
    }
    let s = s.ok_or_else(|| CliError::Usage("--s is required for the braided line".into()))?;
    if !qt_congruence(&params).contains(&s) {
        return Err(CliError::Usage(format!("s = {s} does not give a quasi-triangular structure")));
    }
    let b = braided_line(&params, s, f)?;
    let mut bfile = codec.emit_braided("B", &b);
    bfile.family = Some(meta);
    let Some(obj) = object else {
        return deliver(&bfile, emit);
    };
    let (a_txt, alpha_txt) = obj.split_once(':').unwrap_or((obj, ""));
    let a = f.parse(a_txt.trim())?;
    let alpha: Vec<u64> = parse_list::<String>(alpha_txt, "alpha")?
        .iter()
        .map(|x| f.parse(x))
        .collect::<Result<_, _>>()?;
    let t = c_object(&params, &b, &a, &alpha)?;
    let mut file = codec.emit_comodule_algebra("C", &t, &bfile);
    file.invariant = Some(invariant_json(f, &a, &alpha));
    deliver(&file, emit)
}

fn invariant_json<F: Field>(f: &F, a: &F::Elem, alpha: &[F::Elem]) -> InvariantJson {
    InvariantJson {
        a: f.format(a),
        alpha: alpha.iter().map(|x| f.format(x)).collect(),
    }
}

fn galois_object<F: Field>(
    codec: &Codec<F>,
    b: &BraidedHopf<F>,
    file: &AlgebraFile,
) -> Result<GaloisObject<F>, CliError> {
    Ok(GaloisObject::new(b, codec.comodule_algebra(file, b)?)?)
}

fn matrix_json<F: Field>(m: &Matrix<F>) -> Value {
    let f = m.field();
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(|x| Value::String(f.format(x))).collect()))
            .collect(),
    )
}

fn galois<F: Field>(
    codec: &Codec<F>,
    op: GaloisOp,
    files: &[AlgebraFile],
    over: Option<&AlgebraFile>,
    seed: u64,
    emit: &Option<PathBuf>,
    sigma: Option<&str>,
) -> Result<Outcome, CliError> {
    let first = &files[0];
    let over_file = || -> Result<AlgebraFile, CliError> {
        over.or(first.over.as_deref())
            .cloned()
            .ok_or_else(|| CliError::Usage(format!("{}: no Hopf algebra to work over", first.name)))
    };
    match op {
        GaloisOp::Cotensor => {
            let [s_file, t_file] = files else {
                return Err(CliError::Usage("cotensor takes two files".into()));
            };
            let of = over_file()?;
            let b = codec.braided_hopf(&of)?;
            let (s, t) = (galois_object(codec, &b, s_file)?, galois_object(codec, &b, t_file)?);
            let st = cotensor(&b, &s, &t)?;
            let name = format!("{} box {}", s_file.name, t_file.name);
            deliver(&codec.emit_comodule_algebra(&name, st.object(), &of), emit)
        }
        GaloisOp::Opposite => {
            let of = over_file()?;
            let b = codec.braided_hopf(&of)?;
            let op = opposite_galois(&b, &galois_object(codec, &b, first)?)?;
            deliver(&codec.emit_comodule_algebra(&format!("{}^op", first.name), op.object(), &of), emit)
        }
        GaloisOp::Invariant => {
            let of = over_file()?;
            let meta = first
                .family_metadata()
                .or(of.family.as_ref())
                .ok_or_else(|| CliError::Usage("the invariant needs family parameters".into()))?;
            let b = codec.braided_hopf(&of)?;
            let (a, alpha) = galois_invariant(&meta.params(), &b, &galois_object(codec, &b, first)?)?;
            let inv = invariant_json(codec.field(), &a, &alpha);
            Ok(Outcome {
                stdout: serde_json::to_string(&inv).expect("serializable"),
                pass: true,
            })
        }
        GaloisOp::NormalBasis => {
            let b = codec.braided_hopf(&over_file()?)?;
            let found = has_normal_basis(&b, &galois_object(codec, &b, first)?, seed)?;
            let r = Report::single("normal-basis", "colinear isomorphism to H", found.is_some(), seed);
            Ok(Outcome::report(match found {
                Some(m) => r.with_witness(matrix_json(&m)),
                None => r,
            }))
        }
        GaloisOp::Twist => {
            let b = codec.braided_hopf(first)?;
            let vals = parse_list::<String>(sigma.unwrap_or(""), "sigma")?;
            let f = codec.field();
            let n2 = b.dim() * b.dim();
            if vals.len() != n2 {
                return Err(CliError::Usage(format!("--sigma needs {n2} values")));
            }
            let row = vals.iter().map(|x| f.parse(x)).collect::<Result<Vec<_>, _>>()?;
            let sigma = Matrix::from_rows(f, vec![row])?;
            let rep = check_cocycle(&b, &sigma)?;
            if !rep.passed() {
                return Ok(Outcome::report(Report::from_axioms("cocycle", &rep, seed)));
            }
            let t = cocycle_twist(&b, &CocycleData::new(&b, sigma)?)?;
            let mut of = first.clone();
            of.over = None;
            deliver(&codec.emit_comodule_algebra(&format!("{}_sigma", first.name), t.object(), &of), emit)
        }
        GaloisOp::Upsilon => {
            let of = over_file()?;
            let h = codec.braided_hopf(&of)?;
            let up = upsilon(&h, &codec.module_algebra(first, &h)?)?;
            let name = format!("Upsilon({})", first.name);
            deliver(&codec.emit_comodule_algebra(&name, up.object.object(), &of), emit)
        }
        GaloisOp::Roundtrip => {
            let b = codec.braided_hopf(&over_file()?)?;
            let (_, ok, dim) = gamma_map(&b, &galois_object(codec, &b, first)?)?;
            let r = Report::single("roundtrip", "gamma is an isomorphism", ok, seed);
            Ok(Outcome::report(r.with_witness(Value::from(dim as u64))))
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.cmd {
        Cmd::Verify { kind, file, over, seed } => {
            let f = AlgebraFile::read(file)?;
            let over = read_opt(over)?;
            with_field!(&f.field, codec => verify(&codec, *kind, &f, over.as_ref(), *seed))
        }
        Cmd::Family { n, m, d, s, p, line, object, emit } => {
            family(*n, *m, d, *s, *p, *line, object.as_deref(), emit)
        }
        Cmd::Galois { op, files, over, seed, emit, sigma } => {
            let loaded = files
                .iter()
                .map(|p| AlgebraFile::read(p))
                .collect::<Result<Vec<_>, _>>()?;
            let over = read_opt(over)?;
            let fj = loaded[0].field.clone();
            with_field!(&fj, codec => galois(&codec, *op, &loaded, over.as_ref(), *seed, emit, sigma.as_deref()))
        }
    }
}

fn check_name(cmd: &Cmd) -> String {
    match cmd {
        Cmd::Verify { kind, .. } => kind.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default(),
        Cmd::Family { .. } => "family".into(),
        Cmd::Galois { op, .. } => op.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default(),
    }
}

fn seed_of(cmd: &Cmd) -> u64 {
    match cmd {
        Cmd::Verify { seed, .. } | Cmd::Galois { seed, .. } => *seed,
        Cmd::Family { .. } => 0,
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit_stdout(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes());
    if !text.ends_with('\n') {
        let _ = out.write_all(b"\n");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            emit_stdout(&out.stdout);
            ExitCode::from(if out.pass { 0 } else { 1 })
        }
        Err(CliError::Core(e)) if is_mathematical(&e) => {
            let r = Report::single(&check_name(&cli.cmd), &e.to_string(), false, seed_of(&cli.cmd));
            emit_stdout(&r.to_json());
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
