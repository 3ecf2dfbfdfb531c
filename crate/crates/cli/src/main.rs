use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use braidlink::braiding::{
    evaluate_configurations, evaluate_recursive, evaluate_single_pass, format_symbol,
    is_eigenword, parse_symbol,
};
use braidlink::coalgebra::{functional_from_symbol, hopf_evaluate, realized_functional};
use braidlink::descent::descending_invariants;
use braidlink::lie::LyndonBasis;
use braidlink::membership::depth_with;
use braidlink::tensor::bch_of_word;
use braidlink::words::{load_presentation, parse_word, Alphabet, Presentation};
use braidlink::{Error, Scalar, Q};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(name = "braidlink", version, about = "Letter-braiding and Hopf invariants of group words")]
struct Cli {
    /// Write the JSON report here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Largest weight cutoff accepted.
    #[arg(long, env = "BRAIDLINK_MAX_WEIGHT", default_value_t = 8, hide_env_values = true, global = true)]
    weight_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Group {
    /// Comma-separated generator names (free group).
    #[arg(long)]
    alphabet: Option<String>,

    /// Presentation as a JSON file path or inline JSON text.
    #[arg(long)]
    presentation: Option<String>,
}

impl Group {
    fn load(&self) -> braidlink::Result<Presentation> {
        match (&self.alphabet, &self.presentation) {
            (Some(a), _) => Ok(Presentation::free(Alphabet::from_csv(a)?)),
            (None, Some(p)) => load_presentation(p),
            (None, None) => unreachable!("clap requires one of the two"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Recursive,
    Singlepass,
    Config,
    Bch,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a braiding symbol on a word.
    Eval {
        #[arg(long)]
        symbol: String,
        #[arg(long)]
        word: String,
        #[command(flatten)]
        group: Group,
        #[arg(long, value_enum, default_value = "all")]
        method: Method,
        /// Cutoff for the BCH evaluation; defaults to the symbol weight.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_weight: Option<u64>,
    },
    /// Descending invariants of a presented group up to a weight.
    Invariants {
        #[command(flatten)]
        group: Group,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_weight: u64,
        /// Omit the tree-symbol rendering of each invariant.
        #[arg(long)]
        no_symbols: bool,
    },
    /// Rational lower central series depth of a word.
    Depth {
        #[command(flatten)]
        group: Group,
        #[arg(long)]
        word: String,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_weight: u64,
    },
    /// Truncated logarithm of a word.
    Bch {
        #[arg(long)]
        word: String,
        #[arg(long)]
        alphabet: String,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_weight: u64,
    },
    /// Lyndon basis of the free Lie algebra up to a weight.
    Basis {
        #[arg(long)]
        alphabet: String,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_weight: u64,
    },
}

enum Failure {
    Input(String),
    Semantic(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_parse_error() || matches!(e, Error::Io(_)) {
            Failure::Input(e.to_string())
        } else {
            Failure::Semantic(e.to_string())
        }
    }
}

fn capped(k: u64, cap: usize) -> Result<usize, Failure> {
    let k = k as usize;
    if k > cap {
        return Err(Error::CutoffTooLarge { requested: k, cap }.into());
    }
    Ok(k)
}

fn ratio(x: &Q) -> Value {
    Value::String(x.to_ratio_string())
}

fn eval(
    symbol: &str,
    word: &str,
    group: &Group,
    method: Method,
    max_weight: Option<u64>,
    cap: usize,
) -> Result<Value, Failure> {
    let p = group.load()?;
    let alphabet = p.alphabet();
    let s = parse_symbol::<Q>(symbol, alphabet)?;
    let w = parse_word(word, alphabet)?;
    let wants = |m: Method| method == Method::All || method == m;

    let mut values = Map::new();
    let mut braided = Vec::new();
    for (m, name, f) in [
        (Method::Recursive, "recursive", evaluate_recursive::<Q> as fn(&_, &_) -> Q),
        (Method::Singlepass, "singlepass", evaluate_single_pass::<Q>),
        (Method::Config, "config", evaluate_configurations::<Q>),
    ] {
        if wants(m) {
            let v = f(&s, &w);
            values.insert(name.into(), ratio(&v));
            braided.push(v);
        }
    }
    let consistent = braided.windows(2).all(|p| p[0] == p[1]);
    if !consistent {
        return Err(Failure::Semantic(format!(
            "braiding evaluations disagree: {}",
            Value::Object(values)
        )));
    }

    let eigenword = is_eigenword(&s, &w);
    let mut report = Map::new();
    report.insert("symbol".into(), json!(format_symbol(&s, alphabet)));
    report.insert("word".into(), json!(w.format(alphabet)));
    report.insert("alphabet".into(), json!(alphabet.names()));
    let mut bch = None;
    if wants(Method::Bch) {
        let k = capped(max_weight.unwrap_or(s.weight().max(1) as u64), cap)?;
        let basis = LyndonBasis::new(alphabet.len(), k)?;
        let harrison = hopf_evaluate(&basis, &functional_from_symbol(&basis, &s), &w)?;
        let realized = hopf_evaluate(&basis, &realized_functional(&basis, &s), &w)?;
        values.insert("bch".into(), ratio(&harrison));
        values.insert("bch_realized".into(), ratio(&realized));
        report.insert("max_weight".into(), json!(k));
        bch = Some(harrison);
    }
    report.insert("values".into(), Value::Object(values));
    if braided.len() > 1 {
        report.insert("braiding_consistent".into(), json!(consistent));
    }
    report.insert("eigenword".into(), json!(eigenword));
    if let (Some(b), Some(h)) = (braided.first(), &bch) {
        report.insert("agreement".into(), json!(b == h));
    }
    Ok(Value::Object(report))
}

fn bch(word: &str, alphabet: &str, k: usize) -> Result<Value, Failure> {
    let alphabet = Alphabet::from_csv(alphabet)?;
    let w = parse_word(word, &alphabet)?;
    let log = bch_of_word::<Q>(&w, k)?;
    let mut tensor = Map::new();
    for n in 1..=k {
        let part: Map<String, Value> = log
            .weight_part(n)
            .iter()
            .map(|(m, c)| (alphabet.monomial_string(m), ratio(c)))
            .collect();
        if !part.is_empty() {
            tensor.insert(n.to_string(), Value::Object(part));
        }
    }
    let basis = LyndonBasis::new(alphabet.len(), k)?;
    let coords = basis.lie_coordinates(&log)?;
    let lie: Vec<Value> = (0..basis.len())
        .filter(|&i| *coords.coord(i) != Q::from_int(0))
        .map(|i| {
            json!({
                "word": basis.word_string(i, &alphabet),
                "bracket": basis.element(i).bracket.format(&alphabet),
                "coefficient": ratio(coords.coord(i)),
            })
        })
        .collect();
    Ok(json!({
        "word": w.format(&alphabet),
        "max_weight": k,
        "tensor": tensor,
        "lie": lie,
    }))
}

fn basis(alphabet: &str, k: usize) -> Result<Value, Failure> {
    let alphabet = Alphabet::from_csv(alphabet)?;
    let basis = LyndonBasis::new(alphabet.len(), k)?;
    let dims: Vec<usize> = (1..=k).map(|n| basis.weight_range(n).len()).collect();
    let elements: Vec<Value> = (0..basis.len())
        .map(|i| {
            let expansion: Map<String, Value> = basis
                .element(i)
                .expansion
                .iter()
                .map(|(m, c)| (alphabet.monomial_string(m), json!(c)))
                .collect();
            json!({
                "index": i,
                "word": basis.word_string(i, &alphabet),
                "weight": basis.weight_of(i),
                "bracket": basis.element(i).bracket.format(&alphabet),
                "expansion": expansion,
            })
        })
        .collect();
    Ok(json!({
        "alphabet": alphabet.names(),
        "max_weight": k,
        "dimensions": dims,
        "elements": elements,
    }))
}

fn run(cli: &Cli) -> Result<Value, Failure> {
    let cap = cli.weight_cap;
    match &cli.command {
        Command::Eval { symbol, word, group, method, max_weight } => {
            eval(symbol, word, group, *method, *max_weight, cap)
        }
        Command::Invariants { group, max_weight, no_symbols } => {
            let k = capped(*max_weight, cap)?;
            let e = descending_invariants::<Q>(&group.load()?, k)?;
            Ok(e.to_json(!no_symbols))
        }
        Command::Depth { group, word, max_weight } => {
            let k = capped(*max_weight, cap)?;
            let p = group.load()?;
            let w = parse_word(word, p.alphabet())?;
            let e = descending_invariants::<Q>(&p, k)?;
            Ok(depth_with(&w, &e)?.to_json(&e))
        }
        Command::Bch { word, alphabet, max_weight } => bch(word, alphabet, capped(*max_weight, cap)?),
        Command::Basis { alphabet, max_weight } => basis(alphabet, capped(*max_weight, cap)?),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(v) => v,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Semantic(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(3);
        }
    };
    let text = serde_json::to_string_pretty(&report).expect("reports serialize");
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text + "\n") {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => {
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
        }
    }
    ExitCode::SUCCESS
}
