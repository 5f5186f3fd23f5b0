//! Command-line front end: parses a presentation file, runs one pipeline and
//! renders the result as text or as line records.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gbseries::chains::{enumerate_chains, ChainTable, ObstructionSet};
use gbseries::commutative::{diamond_check, normal_monomials_for};
use gbseries::noncommutative::{diamond_check_nc, normal_words};
use gbseries::parser::{format_monomial, format_polynomial};
use gbseries::quotient::{
    euler_check, groebner, hilbert_chains, hilbert_closed_form, hilbert_normal_words, obstructions,
    Groebner,
};
use gbseries::series::{LeadingTerms, TruncatedSeries};
use gbseries::{parse_presentation, Error, OrderScheme, Presentation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_GRADING: i32 = 3;
pub const EXIT_SATURATION: i32 = 4;
pub const EXIT_DISAGREEMENT: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "gbseries",
    version,
    about = "Groebner bases and Hilbert series of finitely presented algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Groebner basis of the relations.
    Gb {
        #[command(flatten)]
        common: Common,
        /// Print the reduced basis.
        #[arg(long)]
        reduced: bool,
    },
    /// Hilbert series of the quotient algebra.
    Hilbert {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Method::NormalWords)]
        method: Method,
    },
    /// Anick chains of the obstruction set.
    Chains {
        #[command(flatten)]
        common: Common,
        /// Maximum number of chain words listed per n.
        #[arg(long, default_value_t = 20)]
        cap: usize,
    },
    /// Normal words (or monomials) per degree.
    NormalWords {
        #[command(flatten)]
        common: Common,
        /// Maximum number of words listed per degree.
        #[arg(long, default_value_t = 20)]
        cap: usize,
    },
    /// S-polynomial criterion and, for graded quotients, the Euler identity.
    Check {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Presentation file.
    pub input: PathBuf,
    /// Completion bound for noncommutative bases; also the default series degree.
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_degree: u32,
    /// Truncation degree of series (defaults to --max-degree).
    #[arg(long)]
    pub degree: Option<u32>,
    /// Override the order declared in the file.
    #[arg(long, value_enum)]
    pub order: Option<OrderArg>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

impl Common {
    fn degree(&self) -> usize {
        self.degree.unwrap_or(self.max_degree) as usize
    }

    fn max_degree(&self) -> usize {
        self.max_degree as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    NormalWords,
    Chains,
    ClosedForm,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Lex,
    Deglex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Records,
}

/// Exit status and the text written to each stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn failure(code: i32, message: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: message,
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotGraded { .. } | Error::WeightedGroebner => EXIT_GRADING,
            Error::Unsaturated { .. } | Error::MaxDegreeTooSmall { .. } => EXIT_SATURATION,
            _ => EXIT_USAGE,
        };
        let mut message = format!("error: {e}");
        if matches!(e, Error::MaxDegreeTooSmall { .. }) {
            message.push_str(" (raise --max-degree)");
        }
        Failure { code, message }
    }
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Outcome {
    let common = match &cli.command {
        Command::Gb { common, .. }
        | Command::Hilbert { common, .. }
        | Command::Chains { common, .. }
        | Command::NormalWords { common, .. }
        | Command::Check { common } => common,
    };
    let p = match load(common) {
        Ok(p) => p,
        Err(f) => return Outcome::failure(f.code, f.message),
    };
    let mut out = String::new();
    let result = match &cli.command {
        Command::Gb { reduced, .. } => gb(&p, common, *reduced, &mut out),
        Command::Hilbert { method, .. } => hilbert(&p, common, *method, &mut out),
        Command::Chains { cap, .. } => chains(&p, common, *cap, &mut out),
        Command::NormalWords { cap, .. } => normal(&p, common, *cap, &mut out),
        Command::Check { .. } => check(&p, common, &mut out),
    };
    match result {
        Ok(code) => Outcome {
            code,
            stdout: out,
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: f.code,
            stdout: out,
            stderr: f.message,
        },
    }
}

fn load(common: &Common) -> Result<Presentation, Failure> {
    let text = std::fs::read_to_string(&common.input).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("error: cannot read {}: {e}", common.input.display()),
    })?;
    let mut p = parse_presentation(&text).map_err(|e| Failure {
        code: EXIT_PARSE,
        message: format!("{}: {e}", common.input.display()),
    })?;
    if let Some(o) = common.order {
        let scheme = match o {
            OrderArg::Lex => OrderScheme::Lex,
            OrderArg::Deglex => OrderScheme::DegLex,
        };
        p.ring = p.ring.with_scheme(scheme)?;
    }
    Ok(p)
}

fn gb(p: &Presentation, common: &Common, reduced: bool, out: &mut String) -> Result<i32, Failure> {
    let records = common.format == Format::Records;
    let lines: Vec<String> = match groebner(p, common.max_degree(), reduced)? {
        Groebner::Commutative(g) => {
            let mut elements = g.elements().to_vec();
            gbseries::reduction::sort_by_leading(&mut elements, g.order());
            elements
                .iter()
                .map(|e| format_polynomial(e, &p.ring))
                .collect()
        }
        Groebner::NonCommutative(c) => {
            let lines: Vec<String> = c
                .basis
                .iter()
                .map(|e| format_polynomial(e, &p.ring))
                .collect();
            write_basis(out, &lines, records);
            if records {
                writeln!(out, "saturated {}", c.saturated).unwrap();
            } else {
                writeln!(out, "saturated: {}", c.saturated).unwrap();
                writeln!(out, "completion bound: {}", c.complete_to_degree).unwrap();
            }
            return Ok(EXIT_OK);
        }
    };
    write_basis(out, &lines, records);
    Ok(EXIT_OK)
}

fn write_basis(out: &mut String, lines: &[String], records: bool) {
    for (i, l) in lines.iter().enumerate() {
        if records {
            writeln!(out, "basis {i} {l}").unwrap();
        } else {
            writeln!(out, "{l}").unwrap();
        }
    }
}

fn series_by(p: &Presentation, common: &Common, method: Method) -> Result<TruncatedSeries, Error> {
    let (d, bound) = (common.degree(), common.max_degree());
    match method {
        Method::NormalWords => hilbert_normal_words(p, d, bound),
        Method::Chains => hilbert_chains(p, d, bound),
        Method::ClosedForm => hilbert_closed_form(p, d),
        Method::All => unreachable!("expanded by the caller"),
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::NormalWords => "normal-words",
        Method::Chains => "chains",
        Method::ClosedForm => "closed-form",
        Method::All => "all",
    }
}

/// `1/(...)` when the inverse series is a polynomial of degree below the
/// truncation degree, or the series itself when it is such a polynomial.
pub fn rational_form(h: &TruncatedSeries) -> Option<String> {
    let d = h.degree();
    match h.last_nonzero() {
        Some(k) if k < d => return Some(h.to_polynomial_string()),
        None => return Some("0".into()),
        _ => {}
    }
    let inv = h.inverse().ok()?;
    match inv.last_nonzero() {
        Some(k) if k < d => Some(format!("1/({})", inv.to_polynomial_string())),
        _ => None,
    }
}

fn write_series(out: &mut String, h: &TruncatedSeries, records: bool) {
    for (d, c) in h.coefficients().iter().enumerate() {
        if records {
            writeln!(out, "hilbert {d} {c}").unwrap();
        } else {
            writeln!(out, "H[{d}] = {c}").unwrap();
        }
    }
    if !records {
        if let Some(r) = rational_form(h) {
            writeln!(out, "H(t) = {r}").unwrap();
        }
    }
}

fn hilbert(
    p: &Presentation,
    common: &Common,
    method: Method,
    out: &mut String,
) -> Result<i32, Failure> {
    let records = common.format == Format::Records;
    if method != Method::All {
        let h = series_by(p, common, method)?;
        write_series(out, &h, records);
        return Ok(EXIT_OK);
    }
    let mut results: Vec<(Method, TruncatedSeries)> = Vec::new();
    for m in [Method::NormalWords, Method::Chains, Method::ClosedForm] {
        match series_by(p, common, m) {
            Ok(h) => results.push((m, h)),
            Err(Error::ClosedFormUnavailable(_)) => {}
            Err(e) => return Err(e.into()),
        }
    }
    for (m, h) in &results {
        if records {
            writeln!(out, "method {}", method_name(*m)).unwrap();
        } else {
            writeln!(out, "method: {}", method_name(*m)).unwrap();
        }
        write_series(out, h, records);
    }
    let (first, rest) = results.split_first().expect("normal words always run");
    let disagree: Vec<&str> = rest
        .iter()
        .filter(|(_, h)| h != &first.1)
        .map(|(m, _)| method_name(*m))
        .collect();
    if disagree.is_empty() {
        return Ok(EXIT_OK);
    }
    let message = format!(
        "DISAGREEMENT: {} differs from {}",
        disagree.join(", "),
        method_name(first.0)
    );
    writeln!(out, "{message}").unwrap();
    Err(Failure {
        code: EXIT_DISAGREEMENT,
        message,
    })
}

/// Generator names of the surviving alphabet of an obstruction set.
fn surviving_names(p: &Presentation, f: &ObstructionSet) -> Vec<String> {
    f.generators()
        .iter()
        .map(|&g| p.ring.generators()[g].clone())
        .collect()
}

fn chains(p: &Presentation, common: &Common, cap: usize, out: &mut String) -> Result<i32, Failure> {
    let records = common.format == Format::Records;
    let d = common.degree();
    let f = obstructions(p, d, common.max_degree())?;
    let table = enumerate_chains(&f, d as i64 - 1, d)?;
    let names = surviving_names(p, &f);
    let h = hilbert_chains(p, d, common.max_degree())?;
    if records {
        for n in -1..=table.max_n() {
            for (deg, count) in counts_by_degree(&f, &table, n) {
                writeln!(out, "chain {n} {deg} {count}").unwrap();
            }
        }
        write_series(out, &h, true);
        return Ok(EXIT_OK);
    }
    write!(out, "n\\deg").unwrap();
    for deg in 0..=d {
        write!(out, " {deg:>4}").unwrap();
    }
    out.push('\n');
    for n in -1..=table.max_n() {
        let mut row = vec![0usize; d + 1];
        for (deg, count) in counts_by_degree(&f, &table, n) {
            row[deg] = count;
        }
        write!(out, "{n:>5}").unwrap();
        for c in row {
            write!(out, " {c:>4}").unwrap();
        }
        out.push('\n');
    }
    for n in 1..=table.max_n() {
        let cs = table.chains(n);
        let shown: Vec<String> = cs
            .iter()
            .take(cap)
            .map(|c| {
                let g = c.word.slice(0, c.word.len() - c.tail_len);
                format!(
                    "{}|{}",
                    format_monomial(&g, &names),
                    format_monomial(&c.tail(), &names)
                )
            })
            .collect();
        write!(out, "chains n={n}: {}", shown.join(", ")).unwrap();
        if cs.len() > cap {
            write!(out, " (+{} more)", cs.len() - cap).unwrap();
        }
        out.push('\n');
    }
    write_series(out, &h, false);
    Ok(EXIT_OK)
}

fn counts_by_degree(f: &ObstructionSet, table: &ChainTable, n: i64) -> Vec<(usize, usize)> {
    let mut counts: Vec<(usize, usize)> = Vec::new();
    for c in table.chains(n) {
        let w = f.weight(&c.word);
        match counts.last_mut() {
            Some((deg, k)) if *deg == w => *k += 1,
            _ => counts.push((w, 1)),
        }
    }
    counts
}

fn normal(p: &Presentation, common: &Common, cap: usize, out: &mut String) -> Result<i32, Failure> {
    let records = common.format == Format::Records;
    let d = common.degree();
    let names = p.ring.generators();
    let g = groebner(p, common.max_degree(), false)?;
    let per_degree: Vec<Vec<String>> = match g.leading_terms() {
        LeadingTerms::Monomials(leads) => {
            normal_monomials_for(&leads, p.ring.nvars(), p.ring.order(), d)
                .iter()
                .map(|ms| ms.iter().map(|m| format_monomial(m, names)).collect())
                .collect()
        }
        LeadingTerms::Words {
            words,
            complete_to_degree,
            saturated,
        } => {
            if !saturated && complete_to_degree < d {
                return Err(Error::Unsaturated {
                    complete_to: complete_to_degree,
                    requested: d,
                }
                .into());
            }
            normal_words(&words, p.ring.nvars(), d)
                .iter()
                .map(|ws| ws.iter().map(|w| format_monomial(w, names)).collect())
                .collect()
        }
    };
    for (deg, words) in per_degree.iter().enumerate() {
        let shown = &words[..words.len().min(cap)];
        if records {
            for w in shown {
                writeln!(out, "normal {deg} {w}").unwrap();
            }
            continue;
        }
        write!(out, "degree {deg} ({})", words.len()).unwrap();
        if !shown.is_empty() {
            write!(out, ": {}", shown.join(", ")).unwrap();
        }
        if words.len() > cap {
            write!(out, " (+{} more)", words.len() - cap).unwrap();
        }
        out.push('\n');
    }
    Ok(EXIT_OK)
}

fn check(p: &Presentation, common: &Common, out: &mut String) -> Result<i32, Failure> {
    let bound = common.max_degree();
    let mut ok = true;
    match groebner(p, bound, true)? {
        Groebner::Commutative(g) => {
            let r = diamond_check(&g);
            ok &= r.passed();
            writeln!(
                out,
                "diamond: {} ({} pairs, {} failing)",
                verdict(r.passed()),
                r.pairs_checked,
                r.failures.len()
            )
            .unwrap();
        }
        Groebner::NonCommutative(c) => {
            let r = diamond_check_nc(&c.basis, &c.order, bound);
            ok &= r.passed();
            writeln!(
                out,
                "diamond: {} ({} overlaps up to degree {bound}, {} failing, {} above the bound)",
                verdict(r.passed()),
                r.overlaps_checked,
                r.failures.len(),
                r.skipped_above_bound
            )
            .unwrap();
        }
    }
    match euler_check(p, common.degree(), bound) {
        Ok(r) => {
            ok &= r.passed();
            writeln!(
                out,
                "euler: {} (degree {})",
                verdict(r.passed()),
                common.degree()
            )
            .unwrap();
            if !r.passed() {
                writeln!(out, "euler residuals: {}", r.residuals).unwrap();
            }
        }
        Err(Error::NotGraded { relation, .. }) => {
            writeln!(
                out,
                "euler: skipped (relation {relation} is not homogeneous)"
            )
            .unwrap();
        }
        Err(Error::TrivialQuotient) => {
            writeln!(out, "euler: skipped (trivial quotient)").unwrap();
        }
        Err(e) => return Err(e.into()),
    }
    if ok {
        Ok(EXIT_OK)
    } else {
        Err(Failure {
            code: EXIT_DISAGREEMENT,
            message: "check failed".into(),
        })
    }
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "ok"
    } else {
        "FAILED"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_forms() {
        let h = TruncatedSeries::from_i64s(&[1, 2, 3, 4, 5, 6]);
        assert_eq!(rational_form(&h).as_deref(), Some("1/(1 - 2t + t^2)"));
        let finite = TruncatedSeries::from_i64s(&[1, 3, 3, 1, 0]);
        assert_eq!(
            rational_form(&finite).as_deref(),
            Some("1 + 3t + 3t^2 + t^3")
        );
        let fib = TruncatedSeries::from_i64s(&[1, 1, 2, 3, 5, 8]);
        assert_eq!(rational_form(&fib).as_deref(), Some("1/(1 - t - t^2)"));
        let no_margin = TruncatedSeries::from_i64s(&[1, 2]);
        assert_eq!(rational_form(&no_margin), None);
        assert_eq!(
            rational_form(&TruncatedSeries::zero(3)).as_deref(),
            Some("0")
        );
    }

    #[test]
    fn command_line_defaults() {
        let cli = Cli::try_parse_from(["gbseries", "hilbert", "file.txt"]).unwrap();
        let Command::Hilbert { common, method } = cli.command else {
            panic!("wrong subcommand");
        };
        assert_eq!(method, Method::NormalWords);
        assert_eq!(common.max_degree(), 12);
        assert_eq!(common.degree(), 12);
        assert_eq!(common.format, Format::Text);
        assert!(Cli::try_parse_from(["gbseries", "gb", "f", "--max-degree", "0"]).is_err());
    }
}
