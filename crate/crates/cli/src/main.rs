//! Command-line front end for the super tableau toolkit.
//!
//! Exit codes: 0 success (or a true predicate), 1 false predicate or failed
//! check, 2 input error, 3 resource budget exceeded.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use superplactic::alphabet::SignedAlphabet;
use superplactic::error::Error;
use superplactic::growth::{dual_equivalent, grw_traced, parse_recording, psi};
use superplactic::insertion::{insert_left, insert_right, skew_product, tableau_of_word};
use superplactic::lr::{lr_coefficient, verify_lr_identity, Budget};
use superplactic::plactic::{
    equivalent, equivalent_bfs, greene_col, greene_row, shape_from_greene, DEFAULT_MAX_CLASS,
};
use superplactic::tableau::{
    enumerate_skew, format_skew_tableau, format_tableau, parse_skew_tableau, parse_tableau,
};
use superplactic::taquin::{rectify_traced, SlideRecord};
use superplactic::{Partition, SkewShape, SkewTableau};

#[derive(Parser)]
#[command(name = "superplactic", version, about = "Super Young tableau toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct AlphabetArg {
    /// SIGMA alphabet file: one `<symbol> <0|1>` per line.
    #[arg(long, value_name = "FILE")]
    alphabet: String,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a TBL tableau file and reprint it canonically.
    Validate {
        #[command(flatten)]
        alphabet: AlphabetArg,
        /// TBL file (`.` marks inner cells of a skew tableau).
        file: String,
    },
    /// Insert the letters of a word into the empty tableau.
    Build {
        #[command(flatten)]
        alphabet: AlphabetArg,
        /// Whitespace-separated symbols.
        #[arg(long)]
        word: String,
    },
    /// Right- or left-insert a single letter into a tableau.
    Insert {
        #[command(flatten)]
        alphabet: AlphabetArg,
        /// TBL file holding a straight tableau.
        file: String,
        /// Letter to insert on the right (row insertion).
        #[arg(long, conflicts_with = "left")]
        right: Option<String>,
        /// Letter to insert on the left (column insertion).
        #[arg(long)]
        left: Option<String>,
    },
    /// Decide whether two words are super plactic equivalent.
    Equiv {
        #[command(flatten)]
        alphabet: AlphabetArg,
        first: String,
        second: String,
        /// Decide with the breadth-first relation closure instead of
        /// insertion.
        #[arg(long)]
        bfs: bool,
        /// Bound on the BFS congruence class size.
        #[arg(long, default_value_t = DEFAULT_MAX_CLASS)]
        max_class: usize,
    },
    /// Greene invariants and the shape they induce.
    Greene {
        #[command(flatten)]
        alphabet: AlphabetArg,
        #[arg(long)]
        word: String,
    },
    /// Rectify a skew tableau by jeu de taquin.
    Rectify {
        #[command(flatten)]
        alphabet: AlphabetArg,
        file: String,
        /// Emit one JSON slide record per line before the result.
        #[arg(long)]
        trace: bool,
    },
    /// Evacuate a tableau; prints the opposite alphabet, then the result.
    Evacuate {
        #[command(flatten)]
        alphabet: AlphabetArg,
        file: String,
    },
    /// Insertion product of two (possibly skew) tableaux.
    Product {
        #[command(flatten)]
        alphabet: AlphabetArg,
        first: String,
        second: String,
    },
    /// Run the growth-diagram correspondence on a recording and a skew
    /// tableau; prints the diagram, the rectification and the skew
    /// recording.
    Growth {
        #[command(flatten)]
        alphabet: AlphabetArg,
        /// TBL file holding the skew tableau.
        file: String,
        /// Recording tableau file (TBL syntax with labels 1..m).
        #[arg(long)]
        record: String,
    },
    /// Decide dual equivalence of two skew tableaux of the same shape.
    Dualeq {
        #[command(flatten)]
        alphabet: AlphabetArg,
        first: String,
        second: String,
    },
    /// Move a skew tableau to another rectification fiber.
    Psi {
        #[command(flatten)]
        alphabet: AlphabetArg,
        /// TBL file holding the skew tableau S.
        file: String,
        /// TBL file holding the target tableau of shape Rec(S).
        target: String,
    },
    /// Littlewood-Richardson coefficients of a skew shape.
    Lr {
        #[command(flatten)]
        alphabet: AlphabetArg,
        /// Skew shape, e.g. `4,3,1/2,1`.
        #[arg(long)]
        shape: String,
        /// Report only this coefficient.
        #[arg(long)]
        nu: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Verify the identity S_{λ/μ} = Σ_ν c_{λ,μ}^ν S_ν by enumeration.
    SchurCheck {
        #[command(flatten)]
        alphabet: AlphabetArg,
        #[arg(long)]
        shape: String,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all super tableaux of a shape.
    Enumerate {
        #[command(flatten)]
        alphabet: AlphabetArg,
        #[arg(long)]
        shape: String,
        /// Print only the number of tableaux.
        #[arg(long)]
        count: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Resource(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn read_file(path: &str) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("{path}: {e}"),
    })
}

fn in_file(path: &str) -> impl Fn(Error) -> Error + '_ {
    move |err| match err {
        Error::Parse { line, msg } => Error::Parse {
            line,
            msg: format!("{path}: {msg}"),
        },
        Error::RowCondition { row, col, msg } => Error::RowCondition {
            row,
            col,
            msg: format!("{path}: {msg}"),
        },
        Error::ColumnCondition { row, col, msg } => Error::ColumnCondition {
            row,
            col,
            msg: format!("{path}: {msg}"),
        },
        Error::Shape(msg) => Error::Shape(format!("{path}: {msg}")),
        other => other,
    }
}

fn load_alphabet(arg: &AlphabetArg) -> Result<SignedAlphabet, Error> {
    SignedAlphabet::parse(&read_file(&arg.alphabet)?).map_err(in_file(&arg.alphabet))
}

fn load_skew(path: &str, a: &SignedAlphabet) -> Result<SkewTableau, Error> {
    parse_skew_tableau(&read_file(path)?, a).map_err(in_file(path))
}

fn parse_letter(a: &SignedAlphabet, tok: &str) -> Result<superplactic::Letter, Error> {
    a.get(tok).ok_or_else(|| Error::Parse {
        line: 0,
        msg: format!("unknown symbol {tok:?}"),
    })
}

fn predicate(result: bool) -> ExitCode {
    println!("{result}");
    if result {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn print_trace(trace: &[SlideRecord]) {
    for record in trace {
        println!(
            "{}",
            serde_json::to_string(record).expect("slide records serialize")
        );
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Validate { alphabet, file } => {
            let a = load_alphabet(&alphabet)?;
            let t = load_skew(&file, &a)?;
            print!("{}", format_skew_tableau(&t, &a));
            Ok(ExitCode::SUCCESS)
        }
        Command::Build { alphabet, word } => {
            let a = load_alphabet(&alphabet)?;
            let w = a.parse_word(&word)?;
            print!("{}", format_tableau(&tableau_of_word(&w), &a));
            Ok(ExitCode::SUCCESS)
        }
        Command::Insert {
            alphabet,
            file,
            right,
            left,
        } => {
            let a = load_alphabet(&alphabet)?;
            let t = load_skew(&file, &a)?.into_tableau()?;
            let result = match (right, left) {
                (Some(sym), None) => insert_right(&t, parse_letter(&a, &sym)?),
                (None, Some(sym)) => insert_left(parse_letter(&a, &sym)?, &t),
                _ => {
                    return Err(Error::Precondition(
                        "pass exactly one of --right or --left".into(),
                    ))
                }
            };
            print!("{}", format_tableau(&result, &a));
            Ok(ExitCode::SUCCESS)
        }
        Command::Equiv {
            alphabet,
            first,
            second,
            bfs,
            max_class,
        } => {
            let a = load_alphabet(&alphabet)?;
            let (w, v) = (a.parse_word(&first)?, a.parse_word(&second)?);
            let answer = if bfs {
                equivalent_bfs(&w, &v, max_class)?
            } else {
                equivalent(&w, &v)
            };
            Ok(predicate(answer))
        }
        Command::Greene { alphabet, word } => {
            let a = load_alphabet(&alphabet)?;
            let w = a.parse_word(&word)?;
            let shape = shape_from_greene(&w)?;
            let conj = shape.conjugate();
            for k in 1..=shape.height() {
                println!("l_{k} = {}", greene_row(&w, k)?);
            }
            for k in 1..=conj.height() {
                println!("lt_{k} = {}", greene_col(&w, k)?);
            }
            println!("shape {shape}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Rectify {
            alphabet,
            file,
            trace,
        } => {
            let a = load_alphabet(&alphabet)?;
            let s = load_skew(&file, &a)?;
            let (t, records) = rectify_traced(&s);
            if trace {
                print_trace(&records);
            }
            print!("{}", format_tableau(&t, &a));
            Ok(ExitCode::SUCCESS)
        }
        Command::Evacuate { alphabet, file } => {
            let a = load_alphabet(&alphabet)?;
            let t = load_skew(&file, &a)?.into_tableau()?;
            let op = a.opposite();
            let result = superplactic::evacuation::evacuate(&t, &a);
            print!("{}", op.to_sigma());
            println!();
            print!("{}", format_tableau(&result, &op));
            Ok(ExitCode::SUCCESS)
        }
        Command::Product {
            alphabet,
            first,
            second,
        } => {
            let a = load_alphabet(&alphabet)?;
            let s = load_skew(&first, &a)?;
            let u = load_skew(&second, &a)?;
            print!("{}", format_tableau(&skew_product(&s, &u), &a));
            Ok(ExitCode::SUCCESS)
        }
        Command::Growth {
            alphabet,
            file,
            record,
        } => {
            let a = load_alphabet(&alphabet)?;
            let s = load_skew(&file, &a)?;
            let r = parse_recording(&read_file(&record)?).map_err(in_file(&record))?;
            let (t, rp, diagram) = grw_traced(&r, &s)?;
            print!("{diagram}");
            println!();
            print!("{}", format_tableau(&t, &a));
            println!();
            print!("{rp}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Dualeq {
            alphabet,
            first,
            second,
        } => {
            let a = load_alphabet(&alphabet)?;
            let s = load_skew(&first, &a)?;
            let u = load_skew(&second, &a)?;
            Ok(predicate(dual_equivalent(&s, &u)?))
        }
        Command::Psi {
            alphabet,
            file,
            target,
        } => {
            let a = load_alphabet(&alphabet)?;
            let s = load_skew(&file, &a)?;
            let tp = parse_tableau(&read_file(&target)?, &a).map_err(in_file(&target))?;
            print!("{}", format_skew_tableau(&psi(&s, &tp)?, &a));
            Ok(ExitCode::SUCCESS)
        }
        Command::Lr {
            alphabet,
            shape,
            nu,
            json,
        } => {
            let a = load_alphabet(&alphabet)?;
            let shape: SkewShape = shape.parse()?;
            let budget = Budget::default();
            match nu {
                Some(nu) => {
                    let nu: Partition = nu.parse()?;
                    let c = lr_coefficient(shape.outer(), shape.inner(), &nu, &a, &budget)?;
                    println!("{nu} {c}");
                }
                None => {
                    let report = verify_lr_identity(shape.outer(), shape.inner(), &a, &budget)?;
                    if json {
                        println!(
                            "{}",
                            serde_json::to_string(&report).expect("report serializes")
                        );
                    } else {
                        for entry in &report.entries {
                            println!("{} {}", entry.nu, entry.coefficient);
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::SchurCheck {
            alphabet,
            shape,
            json,
        } => {
            let a = load_alphabet(&alphabet)?;
            let shape: SkewShape = shape.parse()?;
            match verify_lr_identity(shape.outer(), shape.inner(), &a, &Budget::default()) {
                Ok(report) => {
                    if json {
                        println!(
                            "{}",
                            serde_json::to_string(&report).expect("report serializes")
                        );
                    } else {
                        print!("{report}");
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(Error::Invariant(msg)) => {
                    eprintln!("identity failed: {msg}");
                    Ok(ExitCode::from(1))
                }
                Err(other) => Err(other),
            }
        }
        Command::Enumerate {
            alphabet,
            shape,
            count,
        } => {
            let a = load_alphabet(&alphabet)?;
            let shape: SkewShape = shape.parse()?;
            let all = enumerate_skew(&shape, &a);
            if count {
                println!("{}", all.len());
            } else {
                for (i, t) in all.iter().enumerate() {
                    if i > 0 {
                        println!();
                    }
                    print!("{}", format_skew_tableau(t, &a));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
