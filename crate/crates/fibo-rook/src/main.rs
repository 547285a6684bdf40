use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fibo_rook::format::{render_csv, render_json, render_text, OutputFormat};
use fibo_rook::verify::{self, Bounds, Suite};
use fibo_rook_core::boards::{
    file_placements, file_weight, mixed_placements, mixed_weight, rook_placements, rook_weight, MixedMode,
};
use fibo_rook_core::fibtiles::{rank, unrank, zeckendorf};
use fibo_rook_core::stirling::triangle;
use fibo_rook_core::{Family, FerrersBoard, LevelSeq, QPoly, Tiling};

/// Exact q-Fibonacci-Stirling numbers, Fibonacci tilings and Ferrers-board
/// placements.
#[derive(Parser)]
#[command(name = "fibo-rook", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the triangle of one family for rows up to MAX_N.
    Table {
        /// SF, SFbar, cF or cFbar
        family: Family,
        max_n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Rank of a tiling given as a level sequence such as (1,0,2).
    Rank { n: usize, seq: LevelSeq },
    /// Level sequence of the tiling of height N with rank M.
    Unrank { n: usize, m: u64 },
    /// Zeckendorf indices of M, largest first.
    Zeck { m: u64 },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        suite: Suite,
        #[arg(long, default_value_t = Bounds::default().max_n, value_parser = positive)]
        max_n: usize,
        #[arg(long, default_value_t = Bounds::default().max_x, value_parser = positive)]
        max_x: usize,
        #[arg(long, default_value_t = Bounds::default().series_order, value_parser = positive)]
        series_order: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// Print witnesses for failed checks.
        #[arg(long)]
        trace: bool,
    },
    /// List the placements of one kind on a board with their weights.
    Placements {
        /// F(b1,...,bn) or B(n)
        board: FerrersBoard,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Number of tilings (file and rook placements).
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Rows below the bar (mixed placements).
        #[arg(long, default_value_t = 1, value_parser = positive)]
        x: usize,
        #[arg(long)]
        barred: bool,
    },
    /// Exploratory checks with no claimed outcome.
    Explore {
        #[command(subcommand)]
        what: Explore,
    },
}

#[derive(Subcommand)]
enum Explore {
    /// Whether ||(-1)^(n-k) cF(n,k)|| and ||SF(n,k)|| are mutually inverse.
    UnbarredInverse {
        #[arg(long, default_value_t = 8, value_parser = positive)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    File,
    Rook,
    Mixed,
    Aug,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn thread_pool() -> Result<rayon::ThreadPool, String> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("FIBO_ROOK_THREADS") {
        let n = positive(&v).map_err(|e| format!("FIBO_ROOK_THREADS={v:?}: {e}"))?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| e.to_string())
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn weight_line(i: usize, w: &QPoly) -> String {
    format!("# placement {} weight {w}", i + 1)
}

fn placements(board: &FerrersBoard, kind: Kind, k: usize, x: usize, barred: bool) -> Result<String, String> {
    let mut out = String::new();
    let mut total = QPoly::zero();
    let mut push = |i: usize, w: QPoly, lines: Vec<String>| {
        out.push_str(&weight_line(i, &w));
        out.push('\n');
        for l in lines {
            out.push_str(&l);
            out.push('\n');
        }
        total += w;
    };
    match kind {
        Kind::File | Kind::Rook if k > board.len() => {
            return Err(format!("k={k} exceeds the {} columns of {board}", board.len()))
        }
        Kind::File => {
            for (i, p) in file_placements(board, k).iter().enumerate() {
                let e = file_weight(board, p, barred).map_err(|e| e.to_string())?;
                push(i, QPoly::q_pow(e), p.dump());
            }
        }
        Kind::Rook => {
            for (i, p) in rook_placements(board, k).iter().enumerate() {
                let e = rook_weight(board, p, barred).map_err(|e| e.to_string())?;
                push(i, QPoly::q_pow(e), p.dump());
            }
        }
        Kind::Mixed | Kind::Aug => {
            let mode = if matches!(kind, Kind::Mixed) { MixedMode::Plain } else { MixedMode::Augmented };
            for (i, p) in mixed_placements(board, x, mode).iter().enumerate() {
                let w = mixed_weight(board, x, p, mode, barred).map_err(|e| e.to_string())?;
                push(i, w, p.dump());
            }
        }
    }
    out.push_str(&format!("# total {total}\n"));
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match cli.command {
        Command::Table { family, max_n, format } => {
            let t = triangle(family, max_n);
            let s = match format {
                OutputFormat::Text => render_text(&t),
                OutputFormat::Json => render_json(&t),
                OutputFormat::Csv => render_csv(&t),
            };
            print!("{s}");
        }
        Command::Rank { n, seq } => match rank(n, &Tiling::from_level_seq(&seq)) {
            Ok(r) => println!("{r}"),
            Err(e) => return usage(e),
        },
        Command::Unrank { n, m } => match unrank(n, m) {
            Ok(t) => println!("{}", t.to_level_seq()),
            Err(e) => return usage(e),
        },
        Command::Zeck { m } => {
            if m == 0 {
                return usage("zeck needs m >= 1");
            }
            println!("{}", zeckendorf(m));
        }
        Command::Verify {
            suite,
            max_n,
            max_x,
            series_order,
            format,
            trace,
        } => {
            let pool = match thread_pool() {
                Ok(p) => p,
                Err(e) => return usage(e),
            };
            let bounds = Bounds {
                max_n,
                max_x,
                series_order,
            };
            let report = pool.install(|| verify::run(suite, bounds, trace));
            match format {
                OutputFormat::Text => print!("{}", report.render_text()),
                OutputFormat::Json => print!("{}", report.render_json()),
                OutputFormat::Csv => {
                    println!("status,suite,check,detail");
                    for r in &report.results {
                        println!("{},{},{},{}", r.status, r.suite, csv_field(&r.check), csv_field(&r.detail));
                    }
                }
            }
            if report.failed() {
                return ExitCode::from(1);
            }
        }
        Command::Placements {
            board,
            kind,
            k,
            x,
            barred,
        } => match placements(&board, kind, k, x, barred) {
            Ok(s) => print!("{s}"),
            Err(e) => return usage(e),
        },
        Command::Explore {
            what: Explore::UnbarredInverse { max_n },
        } => match verify::unbarred_inverse(max_n) {
            None => println!("unbarred pair is inverse for every dimension up to {max_n}"),
            Some(d) => println!("unbarred pair is not inverse; first failing dimension {d}"),
        },
    }
    ExitCode::SUCCESS
}
