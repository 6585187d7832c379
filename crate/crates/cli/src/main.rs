//! Command-line front end for the `superlie` library.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use superlie::assoc::{
    collect, collect_through, scheme_basis, verify_basis, CollectedDisplay, Scheme,
};
use superlie::{
    normal_form, parse_alphabet, parse_expression, parse_word, Alphabet, Error, HallBasis,
    SuperBasis,
};

#[derive(Parser)]
#[command(
    name = "superlie",
    version,
    about = "Bases and normal forms in free Lie superalgebras over the integers"
)]
struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List a super basis up to a weight.
    Basis {
        /// Generators with parities, e.g. "x:odd y:even".
        #[arg(long)]
        alphabet: String,
        #[arg(long, default_value_t = 8)]
        weight: usize,
        /// hall, lyndon or shirshov.
        #[arg(long, default_value = "hall")]
        scheme: Scheme,
    },
    /// Rewrite an expression in Hall super basis coordinates.
    Reduce {
        #[arg(long)]
        alphabet: String,
        /// Expression such as "[x,x,y] - 2*[y,x,x]".
        #[arg(long)]
        expr: String,
        #[arg(long, default_value_t = 8)]
        weight: usize,
    },
    /// Collect an associative word into basic products.
    Collect {
        #[arg(long)]
        alphabet: String,
        #[arg(long)]
        word: String,
        /// Stop after collecting the given basic commutator (a generator name
        /// or bracket expression) instead of collecting fully.
        #[arg(long)]
        through: Option<String>,
    },
    /// Check rank against cardinality in each weight.
    Verify {
        #[arg(long)]
        alphabet: String,
        #[arg(long, default_value_t = 6)]
        weight: usize,
        #[arg(long, default_value = "hall")]
        scheme: Scheme,
    },
    /// Print the super basis dimension of each weight.
    Dims {
        #[arg(long)]
        alphabet: String,
        #[arg(long, default_value_t = 8)]
        weight: usize,
    },
}

/// Rendered output: text for the terminal and the JSON equivalent.
struct Output {
    text: String,
    json: Value,
}

fn basis(alphabet: &Alphabet, weight: usize, scheme: Scheme) -> Result<Output, Error> {
    let elements = scheme_basis(alphabet, weight, scheme)?;
    let mut text = String::new();
    for (i, e) in elements.iter().enumerate() {
        text.push_str(&format!(
            "{i}\tweight {}\t{}\t{}\n",
            e.weight(),
            e.parity(),
            e.term.display(alphabet)
        ));
    }
    let json = json!({
        "alphabet": alphabet.to_string(),
        "scheme": scheme.to_string(),
        "max_weight": weight,
        "elements": elements.iter().enumerate().map(|(i, e)| e.to_json(alphabet, i)).collect::<Vec<_>>(),
    });
    Ok(Output { text, json })
}

fn reduce(alphabet: &Alphabet, expr: &str, weight: usize) -> Result<Output, Error> {
    let p = parse_expression(expr, alphabet)?;
    let sb = SuperBasis::new(alphabet, weight)?;
    let nf = normal_form(&p, &sb)?;
    Ok(Output {
        text: format!("{nf}\n"),
        json: nf.to_json(),
    })
}

fn collect_word(alphabet: &Alphabet, word: &str, through: Option<&str>) -> Result<Output, Error> {
    let w = parse_word(word, alphabet)?;
    let hall = HallBasis::new(alphabet, w.len().max(1))?;
    let poly = match through {
        None => collect(&w, &hall)?,
        Some(stage) => {
            let p = parse_expression(stage, alphabet)?;
            let term = match p.iter().next() {
                Some((t, c)) if p.len() == 1 && *c == 1.into() => t.clone(),
                _ => {
                    return Err(Error::Domain(format!(
                        "--through expects a single basic commutator, got {stage:?}"
                    )))
                }
            };
            let idx = hall.index_of(&term).ok_or_else(|| {
                Error::Domain(format!(
                    "{stage} is not a basic commutator of weight <= {}",
                    w.len()
                ))
            })?;
            collect_through(&w, &hall, idx)?
        }
    };
    let display = CollectedDisplay {
        poly: &poly,
        hall: &hall,
    };
    Ok(Output {
        text: format!("{display}\n"),
        json: display.to_json(),
    })
}

fn verify(alphabet: &Alphabet, weight: usize, scheme: Scheme) -> Result<Output, Error> {
    let reports = verify_basis(alphabet, weight, scheme)?;
    let ok = reports.iter().all(|r| r.ok());
    let mut text: String = reports.iter().map(|r| format!("{r}\n")).collect();
    text.push_str(if ok { "ok\n" } else { "FAILED\n" });
    let json = json!({
        "alphabet": alphabet.to_string(),
        "scheme": scheme.to_string(),
        "ok": ok,
        "weights": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
    });
    Ok(Output { text, json })
}

fn dims(alphabet: &Alphabet, weight: usize) -> Result<Output, Error> {
    let d = SuperBasis::new(alphabet, weight)?.dims();
    let text = d.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    Ok(Output {
        text: format!("{text}\n"),
        json: json!({ "alphabet": alphabet.to_string(), "dims": d }),
    })
}

fn run(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Basis {
            alphabet,
            weight,
            scheme,
        } => basis(&parse_alphabet(alphabet)?, *weight, *scheme),
        Command::Reduce {
            alphabet,
            expr,
            weight,
        } => reduce(&parse_alphabet(alphabet)?, expr, *weight),
        Command::Collect {
            alphabet,
            word,
            through,
        } => collect_word(&parse_alphabet(alphabet)?, word, through.as_deref()),
        Command::Verify {
            alphabet,
            weight,
            scheme,
        } => verify(&parse_alphabet(alphabet)?, *weight, *scheme),
        Command::Dims { alphabet, weight } => dims(&parse_alphabet(alphabet)?, *weight),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 2,
        Error::Capacity { .. } => 3,
        Error::Structural(_) | Error::Domain(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("serializable")
                );
            } else {
                print!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("superlie: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
