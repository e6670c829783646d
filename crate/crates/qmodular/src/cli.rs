//! Command-line surface: quantize, collapse analysis, plot-data emission,
//! and the verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
//! 3 domain error.

use crate::error::Error;
use crate::qrat::{quantize, BaseChoice, Branch};
use crate::reps::RepId;
use crate::special::{
    collapse_condition, collapse_roots, format_sig, psi_at_complex_fast, psi_at_rational_fast,
    AffineValue, SpecValue,
};
use crate::words::{parse_word, ExtendedRational};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use std::io::Write;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Parser)]
#[command(name = "qmodular", version, about = "Exact quantizations of the modular group")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum RepArg {
    Mgo,
    Plus,
    Minus,
}

impl From<RepArg> for RepId {
    fn from(r: RepArg) -> RepId {
        match r {
            RepArg::Mgo => RepId::Mgo,
            RepArg::Plus => RepId::Plus,
            RepArg::Minus => RepId::Minus,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BranchArg {
    Sharp,
    Flat,
    Unit,
    Ratfn,
}

impl From<BranchArg> for Branch {
    fn from(b: BranchArg) -> Branch {
        match b {
            BranchArg::Sharp => Branch::Sharp,
            BranchArg::Flat => Branch::Flat,
            BranchArg::Unit => Branch::Unit,
            BranchArg::Ratfn => Branch::RatFn,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Print the quantization of a rational, symbolically or specialized.
    Quantize(QuantizeArgs),
    /// Collapse-locus analysis of a word in T, S, L, U, V, K.
    Collapse(CollapseArgs),
    /// Emit plot data (CSV or SVG) for the specialized quantization maps.
    Plot(PlotArgs),
    /// The Jimm involution and its golden branches at a rational.
    Jimm(JimmArgs),
    /// Run a named verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct QuantizeArgs {
    /// Rational input: `num`, `num/den`, or `inf`.
    #[arg(allow_hyphen_values = true)]
    x: String,
    #[arg(long, value_enum, default_value = "mgo")]
    rep: RepArg,
    #[arg(long, value_enum, default_value = "sharp")]
    branch: BranchArg,
    /// Specialize at q = r (`num/den` or `rootK/N` for exp(2 pi i K/N)).
    #[arg(long, allow_hyphen_values = true)]
    at: Option<String>,
}

#[derive(Args)]
struct CollapseArgs {
    /// Word text, e.g. `(T^3 S)^4`.
    word: String,
    #[arg(long, value_enum, default_value = "mgo")]
    rep: RepArg,
    /// Also refine and classify the roots of the collapse polynomial.
    #[arg(long)]
    roots: bool,
}

#[derive(Args)]
struct PlotArgs {
    /// Specialization value (`num/den` or `rootK/N`) for Farey mode.
    #[arg(long, conflicts_with = "circle", allow_hyphen_values = true)]
    r: Option<String>,
    /// Fixed x; plot its value while r traces the unit circle.
    #[arg(long, allow_hyphen_values = true)]
    circle: Option<String>,
    /// Number of unit-circle samples (circle mode), >= 8.
    #[arg(long, default_value_t = 360)]
    samples: u32,
    /// Farey denominator bound (Farey mode), >= 1.
    #[arg(long, default_value_t = 50)]
    farey: u32,
    /// Interval bounds for Farey mode.
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true)]
    interval: Option<Vec<String>>,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    #[arg(long, value_enum, default_value = "mgo")]
    rep: RepArg,
    #[arg(long, value_enum, default_value = "sharp")]
    branch: BranchArg,
    /// Output path; stdout when omitted.
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args)]
struct JimmArgs {
    /// Rational input: `num`, `num/den`, or `inf`.
    #[arg(allow_hyphen_values = true)]
    x: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// relations | table1 | equivariance | golden | jimm | q1conj
    #[arg(long)]
    suite: String,
}

/// Parsed specialization argument: exact rational or unit-circle sample.
enum RValue {
    Rational(BigRational),
    Circle(Complex64),
}

fn parse_r(text: &str) -> Result<RValue, Error> {
    if let Some(rest) = text.strip_prefix("root") {
        let (k, n) = rest.split_once('/').ok_or(Error::Syntax {
            pos: 0,
            msg: format!("expected rootK/N, got '{text}'"),
        })?;
        let k: u32 = k.parse().map_err(|_| Error::Syntax { pos: 0, msg: "bad K".into() })?;
        let n: u32 = n.parse().map_err(|_| Error::Syntax { pos: 0, msg: "bad N".into() })?;
        if n == 0 {
            return Err(Error::domain("rootK/N needs N >= 1"));
        }
        let angle = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64);
        return Ok(RValue::Circle(Complex64::new(angle.cos(), angle.sin())));
    }
    let x: ExtendedRational = text.parse()?;
    if x.is_infinity() {
        return Err(Error::domain("r must be finite"));
    }
    let r = BigRational::new(x.num().clone(), x.den().clone());
    if r == BigRational::from_integer(BigInt::from(0)) {
        return Err(Error::domain("r = 0 is outside every specialization"));
    }
    Ok(RValue::Rational(r))
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Syntax { .. } => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    }
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap uses exit code 2 for usage errors, 0 for --help/--version
            e.exit();
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Quantize(args) => cmd_quantize(args),
        Command::Collapse(args) => cmd_collapse(args),
        Command::Plot(args) => cmd_plot(args),
        Command::Jimm(args) => cmd_jimm(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn cmd_jimm(args: JimmArgs) -> Result<i32, Error> {
    let x: ExtendedRational = args.x.parse()?;
    match crate::jimm::jimm_ext(&x) {
        Ok(j) => println!("J      = {j}"),
        Err(e) => println!("J      undefined ({e})"),
    }
    println!("Jsharp = {}", crate::jimm::jimm_sharp(&x));
    println!("Jflat  = {}", crate::jimm::jimm_flat(&x));
    Ok(EXIT_OK)
}

fn cmd_quantize(args: QuantizeArgs) -> Result<i32, Error> {
    let x: ExtendedRational = args.x.parse()?;
    let base = BaseChoice::new(args.rep.into(), args.branch.into())?;
    match args.at {
        None => {
            println!("{}", quantize(&x, base));
        }
        Some(at) => match parse_r(&at)? {
            RValue::Rational(r) => match psi_at_rational_fast(&x, &r, base)? {
                AffineValue::Finite(v) => println!("{v}"),
                AffineValue::Infinity => println!("inf"),
            },
            RValue::Circle(r) => match psi_at_complex_fast(&x, r, base)? {
                Some(v) => println!("{}", crate::special::format_complex(v)),
                None => println!("inf"),
            },
        },
    }
    Ok(EXIT_OK)
}

fn cmd_collapse(args: CollapseArgs) -> Result<i32, Error> {
    let w = parse_word(&args.word)?;
    let rep: RepId = args.rep.into();
    let cond = collapse_condition(&w, rep)?;
    if cond.always() {
        println!("word: {w}");
        println!("collapses identically: the word evaluates to the projective identity");
        return Ok(EXIT_OK);
    }
    println!("word: {w}");
    println!("condition: {}", cond.condition_string());
    println!("off_diagonal: {}", cond.off_diagonal_string());
    if args.roots {
        match cond.off_diagonal_int() {
            Some(poly) if !poly.is_zero() => {
                let report = collapse_roots(&poly)?;
                print!("{report}");
            }
            Some(_) => println!("off-diagonal condition is identically zero"),
            None => {
                return Err(Error::domain(
                    "root analysis needs an integer collapse polynomial (this one has omega parts)",
                ))
            }
        }
    }
    Ok(EXIT_OK)
}

struct PlotRow {
    x_num: BigInt,
    x_den: BigInt,
    x_float: f64,
    y_re: f64,
    y_im: f64,
    flag: &'static str,
}

impl PlotRow {
    fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.x_num, self.x_den, self.x_float, self.y_re, self.y_im, self.flag
        )
    }
}

const POLE_MAGNITUDE: f64 = 1e12;

fn cmd_plot(args: PlotArgs) -> Result<i32, Error> {
    let base = BaseChoice::new(args.rep.into(), args.branch.into())?;
    let rows = if let Some(xtext) = &args.circle {
        if args.samples < 8 {
            return Err(Error::domain("circle mode needs at least 8 samples"));
        }
        let x: ExtendedRational = xtext.parse()?;
        circle_rows(&x, args.samples, base)?
    } else {
        let rtext = args
            .r
            .as_ref()
            .ok_or_else(|| Error::domain("plot needs --r or --circle"))?;
        if args.farey < 1 {
            return Err(Error::domain("Farey bound must be >= 1"));
        }
        let (lo, hi) = match &args.interval {
            Some(v) => {
                let a: ExtendedRational = v[0].parse()?;
                let b: ExtendedRational = v[1].parse()?;
                if a.is_infinity() || b.is_infinity() {
                    return Err(Error::domain("interval bounds must be finite"));
                }
                (
                    BigRational::new(a.num().clone(), a.den().clone()),
                    BigRational::new(b.num().clone(), b.den().clone()),
                )
            }
            None => (
                BigRational::from_integer(BigInt::from(0)),
                BigRational::from_integer(BigInt::from(3)),
            ),
        };
        farey_rows(&parse_r(rtext)?, args.farey, &lo, &hi, base)?
    };
    let mut text = String::from("x_num,x_den,x_float,y_re,y_im,flag\n");
    for row in &rows {
        text.push_str(&row.csv());
        text.push('\n');
    }
    let payload = match args.format {
        FormatArg::Csv => text,
        FormatArg::Svg => render_svg(&rows),
    };
    match args.output {
        Some(path) => {
            std::fs::write(&path, payload)
                .map_err(|e| Error::domain(format!("cannot write {path}: {e}")))?;
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(payload.as_bytes())
                .map_err(|e| Error::domain(e.to_string()))?;
        }
    }
    Ok(EXIT_OK)
}

fn farey_rows(
    r: &RValue,
    bound: u32,
    lo: &BigRational,
    hi: &BigRational,
    base: BaseChoice,
) -> Result<Vec<PlotRow>, Error> {
    use rayon::prelude::*;
    let xs = crate::special::farey_interval(bound, lo, hi);
    let rows: Result<Vec<PlotRow>, Error> = xs
        .par_iter()
        .map(|x| -> Result<PlotRow, Error> {
            let (y_re, y_im, flag) = match r {
                RValue::Rational(rr) => match psi_at_rational_fast(x, rr, base)? {
                    AffineValue::Finite(SpecValue::Rational(v)) => {
                        (v.to_f64().unwrap_or(f64::NAN), 0.0, "ok")
                    }
                    AffineValue::Finite(v) => {
                        let z = v.to_complex();
                        (z.re, z.im, "ok")
                    }
                    AffineValue::Infinity => (f64::INFINITY, 0.0, "pole"),
                },
                RValue::Circle(rc) => match psi_at_complex_fast(x, *rc, base)? {
                    Some(v) if v.norm() <= POLE_MAGNITUDE => (v.re, v.im, "ok"),
                    _ => (f64::INFINITY, 0.0, "pole"),
                },
            };
            Ok(PlotRow {
                x_num: x.num().clone(),
                x_den: x.den().clone(),
                x_float: x.to_f64(),
                y_re,
                y_im,
                flag,
            })
        })
        .collect();
    // farey_interval is sorted ascending already; keep the order
    rows
}

fn circle_rows(x: &ExtendedRational, samples: u32, base: BaseChoice) -> Result<Vec<PlotRow>, Error> {
    use rayon::prelude::*;
    let rows: Result<Vec<PlotRow>, Error> = (0..samples)
        .into_par_iter()
        .map(|k| -> Result<PlotRow, Error> {
            let (y_re, y_im, flag) = if k == 0 {
                // r = 1 exactly: psi is the identity there
                let one = BigRational::from_integer(BigInt::from(1));
                match psi_at_rational_fast(x, &one, base)? {
                    AffineValue::Finite(SpecValue::Rational(v)) => {
                        (v.to_f64().unwrap_or(f64::NAN), 0.0, "ok")
                    }
                    AffineValue::Finite(v) => {
                        let z = v.to_complex();
                        (z.re, z.im, "ok")
                    }
                    AffineValue::Infinity => (f64::INFINITY, 0.0, "pole"),
                }
            } else {
                let angle = 2.0 * std::f64::consts::PI * (k as f64) / (samples as f64);
                let r = Complex64::new(angle.cos(), angle.sin());
                match psi_at_complex_fast(x, r, base)? {
                    Some(v) if v.norm() <= POLE_MAGNITUDE => (v.re, v.im, "ok"),
                    _ => (f64::INFINITY, 0.0, "pole"),
                }
            };
            // the sample index as a reduced fraction of the full turn
            let g = num_integer::gcd(k, samples);
            Ok(PlotRow {
                x_num: BigInt::from(k / g),
                x_den: BigInt::from(samples / g),
                x_float: (k as f64) / (samples as f64),
                y_re,
                y_im,
                flag,
            })
        })
        .collect();
    rows
}

/// Deterministic scatter rendering of the rows; depends only on the CSV
/// content.
fn render_svg(rows: &[PlotRow]) -> String {
    const W: f64 = 800.0;
    const H: f64 = 600.0;
    const MARGIN: f64 = 40.0;
    let finite: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.flag == "ok" && r.y_re.is_finite() && r.y_im.is_finite())
        .map(|r| {
            if r.y_im == 0.0 {
                (r.x_float, r.y_re)
            } else {
                (r.y_re, r.y_im)
            }
        })
        .collect();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &finite {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    if finite.is_empty() {
        x0 = 0.0;
        x1 = 1.0;
        y0 = 0.0;
        y1 = 1.0;
    }
    if x1 - x0 < 1e-12 {
        x1 = x0 + 1.0;
    }
    if y1 - y0 < 1e-12 {
        y1 = y0 + 1.0;
    }
    let sx = |x: f64| MARGIN + (x - x0) / (x1 - x0) * (W - 2.0 * MARGIN);
    let sy = |y: f64| H - MARGIN - (y - y0) / (y1 - y0) * (H - 2.0 * MARGIN);
    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" viewBox=\"0 0 {W} {H}\">\n"
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    svg.push_str(&format!(
        "<rect x=\"{MARGIN}\" y=\"{MARGIN}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
        W - 2.0 * MARGIN,
        H - 2.0 * MARGIN
    ));
    svg.push_str(&format!(
        "<text x=\"{MARGIN}\" y=\"{}\" font-size=\"12\">[{}, {}] x [{}, {}]</text>\n",
        H - MARGIN / 2.0,
        format_sig(x0),
        format_sig(x1),
        format_sig(y0),
        format_sig(y1)
    ));
    for &(x, y) in &finite {
        svg.push_str(&format!(
            "<circle cx=\"{:.4}\" cy=\"{:.4}\" r=\"2\" fill=\"steelblue\"/>\n",
            sx(x),
            sy(y)
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, Error> {
    match crate::verify::suite_by_name(&args.suite) {
        Some(report) => {
            print!("{}", report.render());
            Ok(if report.all_pass() { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        None => Err(Error::Syntax {
            pos: 0,
            msg: format!(
                "unknown suite '{}'; expected relations|table1|equivariance|golden|jimm|q1conj",
                args.suite
            ),
        }),
    }
}
