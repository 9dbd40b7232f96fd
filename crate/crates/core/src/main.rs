use std::io::{self, Write};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Map, Number, Value};

use sigma_convolve::arith::{render, Natural, Rational};
use sigma_convolve::convolution::{w_brute, w_reduce, ConvolutionError, PairId};
use sigma_convolve::deltaforms::{DeltaForms, Level14Form};
use sigma_convolve::eta::{expand, ligozat_check, EtaError, EtaQuotientSpec};
use sigma_convolve::modforms::{decompose, squared_combination, Basis28};
use sigma_convolve::representations::{r4_table, r7_closed, r7_from_table, r7_via_w};
use sigma_convolve::suite::{self, Catalog};
use sigma_convolve::CuspTable;

const EXIT_USAGE: u8 = 1;
const EXIT_MISMATCH: u8 = 2;
const EXIT_IDENTITY: u8 = 3;
const EXIT_DOMAIN: u8 = 4;

#[derive(Parser)]
#[command(name = "sigma-convolve", version, about = "Exact divisor convolution sums and level-28 modular identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum WabMode {
    Formula,
    Brute,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum R7Mode {
    Closed,
    ViaW,
    Enumerate,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate W(a,b)(n) for 1 <= n <= n-max.
    Wab {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        a: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        b: u64,
        #[arg(long)]
        n_max: u64,
        #[arg(long, value_enum, default_value = "both")]
        mode: WabMode,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Tabulate R7(n) for 1 <= n <= n-max.
    R7 {
        #[arg(long)]
        n_max: u64,
        #[arg(long, value_enum, default_value = "all")]
        mode: R7Mode,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Coefficients of a level-7 or level-14 cusp form for 1 <= n <= terms.
    Delta {
        /// One of 4,7 | 4,14,1 | 4,14,2
        #[arg(long)]
        form: String,
        #[arg(long)]
        terms: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Ligozat report and q-expansion of an eta quotient.
    Eta {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        level: u64,
        /// Comma-separated delta:exponent pairs, e.g. "1:5,2:-1,7:5,14:-1"
        #[arg(long, allow_hyphen_values = true)]
        spec: String,
        /// Number of coefficients to print, starting at q^0
        #[arg(long, default_value_t = 10)]
        terms: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Run every identity check.
    Verify {
        #[arg(long, env = "SIGMA_CONVOLVE_ORDER", default_value_t = 100)]
        order: usize,
        #[arg(long, value_enum, default_value = "text")]
        report: ReportFormat,
    },
    /// Solve (a L(q^a) - b L(q^b))^2 on the M4(G0(28)) basis and print the coefficients as JSON.
    Decompose {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        a: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        b: u64,
        /// Highest q-power matched; at least 16
        #[arg(long, default_value_t = 16)]
        n_max: usize,
        #[arg(long, env = "SIGMA_CONVOLVE_ORDER", default_value_t = 100)]
        order: usize,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(EXIT_USAGE, e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::new(EXIT_USAGE, e.to_string())
    }
}

impl From<ConvolutionError> for Failure {
    fn from(e: ConvolutionError) -> Self {
        Failure::new(EXIT_DOMAIN, e.to_string())
    }
}

/// A table cell: integers go out as JSON numbers, everything else as strings.
enum Cell {
    Int(String),
    Text(String),
}

impl Cell {
    fn nat(n: &Natural) -> Self {
        Cell::Int(n.to_string())
    }

    fn rational(r: &Rational) -> Self {
        if r.is_integer() {
            Cell::Int(r.numer().to_string())
        } else {
            Cell::Text(render(r))
        }
    }

    fn text(&self) -> &str {
        match self {
            Cell::Int(s) | Cell::Text(s) => s,
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(s) => Value::Number(Number::from_str(s).expect("integer literal")),
            Cell::Text(s) => Value::String(s.clone()),
        }
    }
}

fn emit_table(format: Format, header: &[&str], rows: &[Vec<Cell>]) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(&mut out);
            w.write_record(header)?;
            for row in rows {
                w.write_record(row.iter().map(Cell::text))?;
            }
            w.flush()?;
        }
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> =
                        header.iter().zip(row).map(|(k, c)| (k.to_string(), c.json())).collect();
                    Value::Object(obj)
                })
                .collect();
            serde_json::to_writer_pretty(&mut out, &items).map_err(io::Error::from)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn flag(matches: bool) -> Cell {
    Cell::Int(if matches { "1" } else { "0" }.into())
}

fn cmd_wab(a: u64, b: u64, n_max: u64, mode: WabMode, format: Format) -> Result<(), Failure> {
    let g = sigma_convolve::arith::gcd(a, b);
    let reduced = PairId::new(a / g, b / g);
    if !matches!(mode, WabMode::Brute) && !reduced.has_closed_form() {
        return Err(Failure::new(
            EXIT_DOMAIN,
            format!("no closed form for W({a},{b}) (reduces to {reduced}); use --mode brute"),
        ));
    }
    let cusp = CuspTable::new(n_max as usize);
    let mut rows = Vec::new();
    let mut mismatch = false;
    for n in 1..=n_max {
        let row = match mode {
            WabMode::Formula => vec![Cell::Int(n.to_string()), Cell::nat(&w_reduce(a, b, n, &cusp)?)],
            WabMode::Brute => vec![Cell::Int(n.to_string()), Cell::nat(&w_brute(a, b, n))],
            WabMode::Both => {
                let f = w_reduce(a, b, n, &cusp)?;
                let br = w_brute(a, b, n);
                mismatch |= f != br;
                vec![Cell::Int(n.to_string()), Cell::nat(&f), Cell::nat(&br), flag(f == br)]
            }
        };
        rows.push(row);
    }
    let header: &[&str] = match mode {
        WabMode::Formula => &["n", "w_formula"],
        WabMode::Brute => &["n", "w_brute"],
        WabMode::Both => &["n", "w_formula", "w_brute", "match"],
    };
    emit_table(format, header, &rows)?;
    if mismatch {
        return Err(Failure::new(EXIT_MISMATCH, "closed form and direct sum disagree"));
    }
    Ok(())
}

fn cmd_r7(n_max: u64, mode: R7Mode, format: Format) -> Result<(), Failure> {
    let cusp = CuspTable::new(n_max as usize);
    let r4 = match mode {
        R7Mode::Enumerate | R7Mode::All => r4_table(n_max),
        _ => Vec::new(),
    };
    let mut rows = Vec::new();
    let mut mismatch = false;
    for n in 1..=n_max {
        let nc = Cell::Int(n.to_string());
        let row = match mode {
            R7Mode::Closed => vec![nc, Cell::nat(&r7_closed(n, &cusp)?)],
            R7Mode::ViaW => vec![nc, Cell::nat(&r7_via_w(n, &cusp)?)],
            R7Mode::Enumerate => vec![nc, Cell::nat(&r7_from_table(&r4, n))],
            R7Mode::All => {
                let closed = r7_closed(n, &cusp)?;
                let via_w = r7_via_w(n, &cusp)?;
                let direct = r7_from_table(&r4, n);
                let ok = closed == direct && via_w == direct;
                mismatch |= !ok;
                vec![nc, Cell::nat(&closed), Cell::nat(&via_w), Cell::nat(&direct), flag(ok)]
            }
        };
        rows.push(row);
    }
    let header: &[&str] = match mode {
        R7Mode::Closed => &["n", "closed"],
        R7Mode::ViaW => &["n", "via_w"],
        R7Mode::Enumerate => &["n", "enumerate"],
        R7Mode::All => &["n", "closed", "via_w", "enumerate", "match"],
    };
    emit_table(format, header, &rows)?;
    if mismatch {
        return Err(Failure::new(EXIT_MISMATCH, "R7 evaluations disagree"));
    }
    Ok(())
}

fn cmd_delta(form: &str, terms: usize, format: Format) -> Result<(), Failure> {
    let forms = DeltaForms::new(terms.max(1));
    let series = match form.replace(' ', "").as_str() {
        "4,7" => forms.delta_4_7(),
        "4,14,1" => forms.delta_4_14(Level14Form::First),
        "4,14,2" => forms.delta_4_14(Level14Form::Second),
        other => {
            return Err(Failure::new(EXIT_USAGE, format!("unknown form {other:?}; expected 4,7 | 4,14,1 | 4,14,2")))
        }
    };
    let rows: Vec<Vec<Cell>> = (1..=terms)
        .map(|n| vec![Cell::Int(n.to_string()), Cell::rational(&series.coeffs()[n])])
        .collect();
    emit_table(format, &["n", "coefficient"], &rows)
}

fn cmd_eta(level: u64, spec: &str, terms: usize, format: ReportFormat) -> Result<(), Failure> {
    let spec = EtaQuotientSpec::parse(level, spec).map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
    let report = ligozat_check(&spec);
    let coeffs = if terms == 0 {
        Ok(Vec::new())
    } else {
        expand(&spec, terms - 1).map(|s| s.into_coeffs())
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match format {
        ReportFormat::Text => {
            writeln!(out, "level={} spec={}", spec.level(), spec)?;
            writeln!(out, "weight_k={}", render(&report.weight_k))?;
            writeln!(out, "s_value={}", render(&report.s_value))?;
            writeln!(out, "cond_i={}", report.cond_i)?;
            writeln!(out, "cond_ii={}", report.cond_ii)?;
            for (d, v) in &report.cusp_orders {
                writeln!(out, "cusp_order[{d}]={}", render(v))?;
            }
            writeln!(out, "cond_iii={}", report.cond_iii)?;
            writeln!(out, "cond_iii_strict={}", report.cond_iii_strict)?;
            writeln!(out, "cond_iv={}", report.cond_iv)?;
            writeln!(out, "cond_v={}", report.cond_v)?;
            writeln!(out, "is_modular={}", report.is_modular)?;
            writeln!(out, "is_cusp={}", report.is_cusp)?;
            if let Ok(c) = &coeffs {
                let joined: Vec<String> = c.iter().map(render).collect();
                writeln!(out, "coefficients={}", joined.join(","))?;
            }
        }
        ReportFormat::Json => {
            let mut obj = Map::new();
            obj.insert("level".into(), Value::from(spec.level()));
            obj.insert("spec".into(), Value::from(spec.to_string()));
            obj.insert("weight_k".into(), Cell::rational(&report.weight_k).json());
            obj.insert("s_value".into(), Cell::rational(&report.s_value).json());
            obj.insert("cond_i".into(), Value::from(report.cond_i));
            obj.insert("cond_ii".into(), Value::from(report.cond_ii));
            let orders: Map<String, Value> = report
                .cusp_orders
                .iter()
                .map(|(d, v)| (d.to_string(), Cell::rational(v).json()))
                .collect();
            obj.insert("cusp_orders".into(), Value::Object(orders));
            obj.insert("cond_iii".into(), Value::from(report.cond_iii));
            obj.insert("cond_iii_strict".into(), Value::from(report.cond_iii_strict));
            obj.insert("cond_iv".into(), Value::from(report.cond_iv));
            obj.insert("cond_v".into(), Value::from(report.cond_v));
            obj.insert("is_modular".into(), Value::from(report.is_modular));
            obj.insert("is_cusp".into(), Value::from(report.is_cusp));
            if let Ok(c) = &coeffs {
                obj.insert("coefficients".into(), Value::Array(c.iter().map(|r| Cell::rational(r).json()).collect()));
            }
            serde_json::to_writer_pretty(&mut out, &Value::Object(obj)).map_err(io::Error::from)?;
            writeln!(out)?;
        }
    }
    match coeffs {
        Ok(_) => Ok(()),
        Err(e @ (EtaError::FractionalExponent { .. } | EtaError::NegativeValuation { .. })) => {
            Err(Failure::new(EXIT_DOMAIN, e.to_string()))
        }
        Err(e) => Err(Failure::new(EXIT_USAGE, e.to_string())),
    }
}

fn cmd_verify(order: usize, format: ReportFormat) -> Result<(), Failure> {
    let report = suite::run(&Catalog::published(), order);
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match format {
        ReportFormat::Text => {
            for r in &report.identities {
                let status = if r.passed { "PASS" } else { "FAIL" };
                let sturm = match (r.level, r.sturm_bound) {
                    (Some(l), Some(s)) => format!("level={l} sturm={s}"),
                    _ => "coefficientwise".to_string(),
                };
                write!(out, "{status}  {}  [{sturm} order={}]", r.name, r.verified_order)?;
                if !r.detail.is_empty() {
                    write!(out, "  {}", r.detail)?;
                }
                writeln!(out)?;
            }
            let passed = report.identities.iter().filter(|r| r.passed).count();
            writeln!(out, "{passed}/{} identities verified", report.identities.len())?;
        }
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut out, &report).map_err(io::Error::from)?;
            writeln!(out)?;
        }
    }
    match report.first_failure() {
        Some(f) => Err(Failure::new(EXIT_IDENTITY, format!("identity failed: {}", f.name))),
        None => Ok(()),
    }
}

fn cmd_decompose(a: u64, b: u64, n_max: usize, order: usize) -> Result<(), Failure> {
    let order = order.max(n_max);
    let basis = Basis28::new(order).map_err(|e| Failure::new(EXIT_DOMAIN, e.to_string()))?;
    let target = squared_combination(a, b, order);
    let v = decompose(&target, &basis, n_max).map_err(|e| Failure::new(EXIT_DOMAIN, e.to_string()))?;
    let mut obj = Map::new();
    obj.insert("a".into(), Value::from(a));
    obj.insert("b".into(), Value::from(b));
    obj.insert("n_max".into(), Value::from(n_max));
    let x: Map<String, Value> = v.x.iter().map(|(t, c)| (t.to_string(), Value::from(render(c)))).collect();
    obj.insert("x".into(), Value::Object(x));
    obj.insert("y".into(), Value::Array(v.y.iter().map(|c| Value::from(render(c))).collect()));
    let stdout = io::stdout();
    let mut out = stdout.lock();
    serde_json::to_writer_pretty(&mut out, &Value::Object(obj)).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Wab { a, b, n_max, mode, format } => cmd_wab(a, b, n_max, mode, format),
        Command::R7 { n_max, mode, format } => cmd_r7(n_max, mode, format),
        Command::Delta { form, terms, format } => cmd_delta(&form, terms, format),
        Command::Eta { level, spec, terms, format } => cmd_eta(level, &spec, terms, format),
        Command::Verify { order, report } => cmd_verify(order, report),
        Command::Decompose { a, b, n_max, order } => cmd_decompose(a, b, n_max, order),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
