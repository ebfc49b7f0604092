use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use minbin_core::codes::monic_divisors;
use minbin_core::{
    defining_set, enumerate_distance_two_codes, factor_binomial, factorize,
    is_free_of_binomials, min_binomial, oracle_distance_two, oracle_min_binomial, poly_order,
    Error, Field, Poly,
};

/// Minimal binomial multiples, binomial factorization and distance-2
/// constacyclic codes over finite fields.
#[derive(Parser)]
#[command(name = "minbin", version)]
struct Cli {
    /// Also print polynomials in human-readable form.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PolyArgs {
    /// Field as p^e, e.g. 3^2.
    #[arg(long)]
    field: Field,
    /// Ascending coefficient codes, e.g. 1,0,1 for 1 + X^2.
    #[arg(long)]
    poly: String,
}

#[derive(Args)]
struct BinomialArgs {
    /// Field as p^e, e.g. 3^2.
    #[arg(long)]
    field: Field,
    /// Length N of X^N - lambda.
    #[arg(short = 'N', value_name = "N")]
    length: u64,
    /// Element code of lambda.
    #[arg(long)]
    lambda: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Field parameters and canonical modulus.
    Field {
        /// Field as p^e.
        field: Field,
    },
    /// Order of a polynomial.
    Ord(PolyArgs),
    /// Minimal binomial multiple.
    Minbin {
        #[command(flatten)]
        args: PolyArgs,
        /// Cross-check against brute-force search.
        #[arg(long)]
        oracle: bool,
    },
    /// Whether a polynomial is free of binomials, with d_f.
    Free(PolyArgs),
    /// Order and cyclotomic-coset decomposition of the defining set.
    Defset(PolyArgs),
    /// Irreducible factorization of X^N - lambda.
    FactorBinomial(BinomialArgs),
    /// Constacyclic codes of length N with minimum distance 2.
    Codes2 {
        #[command(flatten)]
        args: BinomialArgs,
        /// Cross-check against brute-force weight-2 search.
        #[arg(long)]
        oracle: bool,
    },
}

enum Failure {
    Core(Error),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn parse_poly(args: &PolyArgs) -> Result<Poly, Error> {
    Poly::parse(&args.field, &args.poly)
}

fn run(cli: &Cli) -> Result<Vec<String>, Failure> {
    let mut out = Vec::new();
    match &cli.command {
        Command::Field { field } => {
            let modulus = Poly::new(field, field.modulus().to_vec());
            out.push(format!(
                "p={} e={} q={} modulus={} generator={}",
                field.p(),
                field.e(),
                field.q(),
                modulus,
                field.generator()
            ));
            if cli.pretty {
                out.push(format!("modulus: {}", modulus.pretty()));
            }
        }
        Command::Ord(args) => {
            out.push(poly_order(&parse_poly(args)?)?.to_string());
        }
        Command::Minbin { args, oracle } => {
            let f = parse_poly(args)?;
            let r = min_binomial(&f)?;
            if *oracle {
                let bound = (args.field.p() as u64).pow(r.u) * r.m;
                match oracle_min_binomial(&f, bound) {
                    Ok(found) if found == (r.n, r.lambda) => {}
                    Ok((n, l)) => {
                        return Err(Failure::Mismatch(format!(
                            "oracle found X^{n} - {l}, theory gives X^{} - {}",
                            r.n, r.lambda
                        )))
                    }
                    Err(e) => return Err(Failure::Mismatch(format!("oracle: {e}"))),
                }
            }
            out.push(r.to_string());
            if cli.pretty {
                out.push(format!("X^{} - {}", r.n, r.lambda));
            }
        }
        Command::Free(args) => {
            let (free, d_f) = is_free_of_binomials(&parse_poly(args)?)?;
            out.push(format!("free={free} d_f={d_f}"));
        }
        Command::Defset(args) => {
            let t = defining_set(&parse_poly(args)?)?;
            out.push(format!("m={}", t.modulus));
            for c in &t.cosets {
                out.push(c.to_string());
            }
        }
        Command::FactorBinomial(b) => {
            let fact = factor_binomial(&b.field, b.length, b.lambda)?;
            out.push(fact.to_string());
            if cli.pretty {
                let parts: Vec<String> = fact
                    .factors
                    .iter()
                    .map(|(g, k)| match k {
                        1 => format!("({})", g.pretty()),
                        k => format!("({})^{k}", g.pretty()),
                    })
                    .collect();
                out.push(parts.join(" * "));
            }
        }
        Command::Codes2 { args: b, oracle } => {
            let codes = enumerate_distance_two_codes(&b.field, b.length, b.lambda)?;
            if *oracle {
                let big = Poly::binomial(&b.field, b.length as usize, b.lambda);
                let mut expected = Vec::new();
                for (g, _) in monic_divisors(&factorize(&big)?) {
                    let deg = g.degree().unwrap_or(0) as u64;
                    if deg > 0 && deg < b.length && oracle_distance_two(&g, b.length, b.lambda)? {
                        expected.push(g);
                    }
                }
                expected.sort();
                let got: Vec<&Poly> = codes.iter().map(|c| &c.generator).collect();
                if got != expected.iter().collect::<Vec<_>>() {
                    return Err(Failure::Mismatch(format!(
                        "oracle finds {} codes, enumeration {}",
                        expected.len(),
                        got.len()
                    )));
                }
            }
            for c in &codes {
                out.push(c.to_string());
                if cli.pretty {
                    out.push(format!("  g = {}", c.generator.pretty()));
                }
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(lines) => {
            let mut stdout = std::io::stdout().lock();
            for line in lines {
                // A closed pipe (e.g. `| head`) is not an error.
                if writeln!(stdout, "{line}").is_err() {
                    break;
                }
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Core(e @ Error::Parse(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("oracle mismatch: {msg}");
            ExitCode::from(3)
        }
    }
}
