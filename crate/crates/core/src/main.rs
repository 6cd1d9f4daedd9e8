//! `kntab`: command-line front end for the type C tableau toolchain.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kn_tableaux::alphabet::{format_vector, parse_partition, parse_vector, Rank, Word};
use kn_tableaux::crystal::generate_crystal;
use kn_tableaux::demazure::{atom_polynomial, demazure_atom, demazure_crystal, key_polynomial};
use kn_tableaux::error::Error;
use kn_tableaux::evacuation::{evacuate_insertion, evacuate_jdt};
use kn_tableaux::insertion::robinson_schensted;
use kn_tableaux::jdt::rectify;
use kn_tableaux::keys::{left_key, right_key};
use kn_tableaux::tableaux::{parse_skew_tableau, parse_tableau, KNTableau};
use kn_tableaux::weyl::{bruhat_leq, minimal_coset_rep, reduce_vector, SignedPermutation};

#[derive(Parser)]
#[command(name = "kntab", version, about = "Kashiwara-Nakashima tableau toolchain for type C")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    Poly,
}

#[derive(Args)]
struct CommonOut {
    /// Rank n of the alphabet [±n]; inferred from the input when omitted.
    #[arg(long)]
    n: Option<Rank>,
    /// Render barred letters with overbars instead of minus signs.
    #[arg(long)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Insert a word, printing P (and optionally the Q shapes).
    Insert {
        word: String,
        /// Also print the oscillating tableau of shapes.
        #[arg(long)]
        shapes: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        out: CommonOut,
    },
    /// Rectify a skew tableau ("." marks inner cells).
    Rectify {
        tableau: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        out: CommonOut,
    },
    /// Right or left key of a tableau.
    Key {
        tableau: String,
        #[arg(long, conflicts_with = "left")]
        right: bool,
        #[arg(long)]
        left: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        out: CommonOut,
    },
    /// Generate the crystal graph of shape λ.
    Crystal {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        n: Rank,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        pretty: bool,
    },
    /// Demazure characters and atoms.
    Demazure {
        #[command(subcommand)]
        which: DemazureCmd,
    },
    /// Bruhat-order comparisons on B_n.
    Bruhat {
        #[command(subcommand)]
        which: BruhatCmd,
    },
    /// Minimal coset representatives and reduced vectors.
    Coset {
        #[command(subcommand)]
        which: CosetCmd,
    },
    /// Evacuation (the Lusztig involution).
    Evacuate {
        tableau: String,
        #[arg(long, value_enum, default_value = "insert")]
        method: Method,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        out: CommonOut,
    },
    /// Re-run the acceptance suite (optionally a single criterion).
    Verify {
        #[arg(long)]
        criterion: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Insert,
    Jdt,
}

#[derive(Subcommand)]
enum DemazureCmd {
    /// κ_v, the Demazure character.
    Char(DemazureArgs),
    /// The atom U(v), listing its tableaux (or κ̂_v with --format poly).
    Atom(DemazureArgs),
}

#[derive(Args)]
struct DemazureArgs {
    #[arg(long)]
    vector: String,
    #[arg(long)]
    n: Rank,
    #[arg(long, value_enum, default_value = "poly")]
    format: Format,
    #[arg(long)]
    pretty: bool,
}

#[derive(Subcommand)]
enum BruhatCmd {
    /// Compare two signed permutations, e.g. "[2 -3 1]".
    Cmp { sigma: String, rho: String },
}

#[derive(Subcommand)]
enum CosetCmd {
    /// σ_v, the minimal length coset representative.
    Minrep {
        #[arg(long)]
        vector: String,
        /// Optional λ; must match the orbit of the vector.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// ṽ, the reduced vector.
    Reduce {
        #[arg(long)]
        vector: String,
    },
}

/// Overbar rendering: "-3" becomes "3̄".
fn prettify(s: &str) -> String {
    let mut out = String::new();
    for tok in s.split(' ') {
        if !out.is_empty() {
            out.push(' ');
        }
        if let Some(rest) = tok.strip_prefix('-') {
            if rest.chars().all(|c| c.is_ascii_digit()) && !rest.is_empty() {
                out.push_str(rest);
                out.push('\u{0304}');
                continue;
            }
        }
        out.push_str(tok);
    }
    out
}

fn render(s: String, pretty: bool) -> String {
    if pretty {
        prettify(&s)
    } else {
        s
    }
}

fn tableau_json(t: &KNTableau) -> Value {
    let rows: Vec<Vec<i64>> = t
        .rows()
        .iter()
        .map(|row| row.iter().map(|l| l.value()).collect())
        .collect();
    json!({
        "n": t.n(),
        "outer": t.shape().parts(),
        "inner": [],
        "rows": rows,
    })
}

fn print_tableau(t: &KNTableau, format: Format, pretty: bool) {
    match format {
        Format::Json => println!("{}", tableau_json(t)),
        _ => println!("{}", render(t.to_string(), pretty)),
    }
}

fn infer_rank(requested: Option<Rank>, min_rank: Rank) -> Result<Rank, Error> {
    match requested {
        Some(n) if n >= min_rank => Ok(n),
        Some(n) => Err(Error::Parse(format!(
            "--n {n} is too small for the letters in the input (need ≥ {min_rank})"
        ))),
        None if min_rank > 0 => Ok(min_rank),
        None => Ok(1),
    }
}

fn rank_of_tableau_text(requested: Option<Rank>, text: &str) -> Result<Rank, Error> {
    let max_abs = text
        .split(|c: char| c == '/' || c.is_whitespace())
        .filter_map(|tok| tok.parse::<i64>().ok())
        .map(|v| v.unsigned_abs() as usize)
        .max()
        .unwrap_or(0);
    infer_rank(requested, max_abs)
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Insert { word, shapes, format, out } => {
            let parsed: Word = word.parse()?;
            let n = infer_rank(out.n, parsed.min_rank())?;
            let (p, q) = robinson_schensted(n, &parsed);
            match format {
                Format::Json => {
                    let qs: Vec<Vec<i64>> =
                        q.shapes().iter().map(|s| s.parts().to_vec()).collect();
                    let mut doc = json!({ "p": tableau_json(&p) });
                    if shapes {
                        doc["q"] = json!(qs);
                    }
                    println!("{doc}");
                }
                _ => {
                    println!("{}", render(p.to_string(), out.pretty));
                    if shapes {
                        let parts: Vec<String> =
                            q.shapes().iter().map(|s| s.to_string()).collect();
                        println!("{}", parts.join(" "));
                    }
                }
            }
            Ok(())
        }
        Command::Rectify { tableau, format, out } => {
            let n = rank_of_tableau_text(out.n, &tableau)?;
            let skew = parse_skew_tableau(n, &tableau)?;
            let t = rectify(&skew)?;
            print_tableau(&t, format, out.pretty);
            Ok(())
        }
        Command::Key { tableau, right, left, format, out } => {
            if right == left {
                return Err(Error::Parse("choose exactly one of --right/--left".into()));
            }
            let n = rank_of_tableau_text(out.n, &tableau)?;
            let t = parse_tableau(n, &tableau)?;
            let key = if right { right_key(&t) } else { left_key(&t) };
            print_tableau(&key, format, out.pretty);
            Ok(())
        }
        Command::Crystal { shape, n, format, pretty } => {
            let lambda = parse_partition(&shape)?;
            let graph = generate_crystal(&lambda, n)?;
            match format {
                Format::Dot => print!("{}", graph.to_dot()),
                Format::Json => {
                    let vertices: Vec<Value> = graph.vertices().iter().map(tableau_json).collect();
                    let edges: Vec<Value> = graph
                        .edges()
                        .iter()
                        .map(|(s, c, d)| json!({ "source": s, "color": c, "target": d }))
                        .collect();
                    println!("{}", json!({ "vertices": vertices, "edges": edges }));
                }
                _ => {
                    for t in graph.vertices() {
                        println!("{}", render(t.to_string(), pretty));
                    }
                    eprintln!("{} vertices, {} edges", graph.len(), graph.edges().len());
                }
            }
            Ok(())
        }
        Command::Demazure { which } => {
            let (args, atom) = match which {
                DemazureCmd::Char(a) => (a, false),
                DemazureCmd::Atom(a) => (a, true),
            };
            let v = parse_vector(&args.vector)?;
            if v.len() != args.n {
                return Err(Error::Parse(format!(
                    "--vector must have {} entries for --n {}",
                    args.n, args.n
                )));
            }
            match args.format {
                Format::Json => {
                    let set = if atom {
                        demazure_atom(args.n, &v)?
                    } else {
                        demazure_crystal(args.n, &v)?
                    };
                    let poly = if atom {
                        atom_polynomial(args.n, &v)?
                    } else {
                        key_polynomial(args.n, &v)?
                    };
                    let tableaux: Vec<Value> = set.iter().map(tableau_json).collect();
                    let terms: Vec<Value> = poly
                        .terms()
                        .map(|(w, c)| json!({ "weight": w, "coeff": c }))
                        .collect();
                    println!("{}", json!({ "tableaux": tableaux, "terms": terms }));
                }
                Format::Poly => {
                    let poly = if atom {
                        atom_polynomial(args.n, &v)?
                    } else {
                        key_polynomial(args.n, &v)?
                    };
                    println!("{poly}");
                }
                _ => {
                    let set = if atom {
                        demazure_atom(args.n, &v)?
                    } else {
                        demazure_crystal(args.n, &v)?
                    };
                    for t in &set {
                        println!("{}", render(t.to_string(), args.pretty));
                    }
                }
            }
            Ok(())
        }
        Command::Bruhat { which } => {
            let BruhatCmd::Cmp { sigma, rho } = which;
            let sigma: SignedPermutation = sigma.parse()?;
            let rho: SignedPermutation = rho.parse()?;
            if sigma.n() != rho.n() {
                return Err(Error::Parse("the two windows must have the same rank".into()));
            }
            println!("leq: {}", bruhat_leq(&sigma, &rho));
            println!("geq: {}", bruhat_leq(&rho, &sigma));
            Ok(())
        }
        Command::Coset { which } => match which {
            CosetCmd::Minrep { vector, lambda } => {
                let v = parse_vector(&vector)?;
                if let Some(lam) = lambda {
                    let lam = parse_partition(&lam)?;
                    if kn_tableaux::alphabet::orbit_partition(&v) != lam {
                        return Err(Error::OrbitMismatch);
                    }
                }
                println!("{}", minimal_coset_rep(v.len(), &v));
                Ok(())
            }
            CosetCmd::Reduce { vector } => {
                let v = parse_vector(&vector)?;
                println!("{}", format_vector(&reduce_vector(&v)));
                Ok(())
            }
        },
        Command::Evacuate { tableau, method, format, out } => {
            let n = rank_of_tableau_text(out.n, &tableau)?;
            let t = parse_tableau(n, &tableau)?;
            let ev = match method {
                Method::Insert => evacuate_insertion(&t),
                Method::Jdt => evacuate_jdt(&t)?,
            };
            print_tableau(&ev, format, out.pretty);
            Ok(())
        }
        Command::Verify { criterion } => {
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            let ok = match criterion {
                Some(id) => {
                    let result = kn_tableaux::verify::run_criterion(id)?;
                    use std::io::Write;
                    match &result {
                        Ok(()) => writeln!(out, "criterion {id}: PASS").unwrap(),
                        Err(msg) => writeln!(out, "criterion {id}: FAIL — {msg}").unwrap(),
                    }
                    result.is_ok()
                }
                None => kn_tableaux::verify::run_all(&mut out).expect("stdout"),
            };
            if ok {
                Ok(())
            } else {
                Err(Error::Invalid("acceptance criteria failed".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e @ Error::Parse(_)) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(1)
        }
    }
}
