//! Command-line interface.
//!
//! Exit codes: 0 success, 1 validation failure (bad algebra, failed
//! verification), 2 parse/usage errors, 3 internal invariant breach (a
//! computed polarization that does not verify).

use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::Serialize;

use crate::catalog;
use crate::error::Error;
use crate::free_step2::{
    build_free_step2, closed_form_spanning_set, polarize_free, FreeStep2Layout,
};
use crate::lie::{Functional, LieAlgebra};
use crate::parse::{emit_algebra, parse_document, parse_functional, AlgebraDocument, MAX_DIM};
use crate::polarize::{polarize_auto, polarize_basic, polarize_refined, PolarizationResult};
use crate::rational::{format_combination, format_combination_ordered, format_vector};
use crate::subspace::Subspace;
use crate::verify::{verify_polarization, FailureWitness, VerificationReport};

macro_rules! w {
    ($dst:expr, $($arg:tt)*) => { let _ = writeln!($dst, $($arg)*); };
}

#[derive(Parser)]
#[command(
    name = "vergne",
    version,
    about = "Exact Vergne polarizing subalgebras of nilpotent Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate an algebra file ("-" reads stdin)
    Validate { file: String },
    /// Compute a polarizing subalgebra for a functional
    Polarize {
        /// Algebra file ("-" reads stdin)
        file: String,
        /// Functional values, comma-separated rationals
        #[arg(long)]
        ell: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Emit machine-readable JSON on stdout
        #[arg(long)]
        json: bool,
        /// Also print the radical of every leading submatrix
        #[arg(long)]
        trace: bool,
    },
    /// Generate the free step-2 algebra on m generators
    FreeStep2 {
        m: usize,
        /// Write the algebra file here ("-" writes it to stdout)
        #[arg(long)]
        emit: Option<String>,
    },
    /// Closed-form polarization on the free step-2 algebra
    PolarizeFree {
        m: usize,
        #[arg(long)]
        ell: String,
        #[arg(long)]
        json: bool,
    },
    /// Check a claimed polarizing subalgebra
    Verify {
        /// Algebra file ("-" reads stdin)
        file: String,
        #[arg(long)]
        ell: String,
        /// Basis vectors, semicolon-separated lists of comma-separated rationals
        #[arg(long)]
        basis: String,
    },
    /// List or show the built-in algebras
    Catalog {
        #[arg(long)]
        list: bool,
        /// Print the named algebra in file format
        #[arg(long)]
        show: Option<String>,
    },
    /// Polarize one algebra against many functionals, one per line
    Batch {
        /// Algebra file ("-" reads stdin)
        file: String,
        /// File of functionals, one comma-separated list per line
        #[arg(long)]
        ells: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Basic,
    Refined,
    Auto,
}

#[derive(Serialize)]
struct JsonOut {
    algebra_dim: usize,
    method: String,
    p_basis: Vec<Vec<String>>,
    dim_p: usize,
    orbit_dim: usize,
    verified: bool,
}

/// Run the CLI against explicit arguments and streams; returns the exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    w!(out, "{e}");
                    return 0;
                }
                _ => 2,
            };
            w!(err, "{e}");
            return code;
        }
    };
    match cli.command {
        Command::Validate { file } => cmd_validate(&file, out, err),
        Command::Polarize {
            file,
            ell,
            method,
            json,
            trace,
        } => cmd_polarize(&file, &ell, method, json, trace, out, err),
        Command::FreeStep2 { m, emit } => cmd_free_step2(m, emit.as_deref(), out, err),
        Command::PolarizeFree { m, ell, json } => cmd_polarize_free(m, &ell, json, out, err),
        Command::Verify { file, ell, basis } => cmd_verify(&file, &ell, &basis, out, err),
        Command::Catalog { list, show } => cmd_catalog(list, show.as_deref(), out, err),
        Command::Batch { file, ells } => cmd_batch(&file, &ells, out, err),
    }
}

fn read_input(path: &str) -> std::io::Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
    }
}

fn exit_code_for(error: &Error) -> i32 {
    if error.is_parse() {
        2
    } else {
        1
    }
}

fn report_error(error: &Error, doc: Option<&AlgebraDocument>, err: &mut dyn Write) -> i32 {
    match doc.and_then(|d| d.span_for_error(error)) {
        Some(span) => {
            w!(err, "error at line {}: {error}", span.line);
        }
        None => {
            w!(err, "error: {error}");
        }
    }
    exit_code_for(error)
}

fn load_document(path: &str, err: &mut dyn Write) -> Result<AlgebraDocument, i32> {
    let text = match read_input(path) {
        Ok(text) => text,
        Err(e) => {
            w!(err, "error: cannot read `{path}`: {e}");
            return Err(2);
        }
    };
    parse_document(&text).map_err(|e| report_error(&e, None, err))
}

fn load_algebra(path: &str, err: &mut dyn Write) -> Result<LieAlgebra, i32> {
    let doc = load_document(path, err)?;
    doc.build().map_err(|e| report_error(&e, Some(&doc), err))
}

fn parse_ell(text: &str, n: usize, err: &mut dyn Write) -> Result<Functional, i32> {
    parse_functional(text, n).map_err(|e| report_error(&e, None, err))
}

fn nonzero_bracket_count(g: &LieAlgebra) -> usize {
    let mut count = 0;
    for i in 1..=g.n() {
        for j in i + 1..=g.n() {
            if g.bracket_basis(i, j).iter().any(|c| !c.is_zero()) {
                count += 1;
            }
        }
    }
    count
}

fn cmd_validate(file: &str, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match load_algebra(file, err) {
        Ok(g) => {
            w!(
                out,
                "ok: dim {}, center dim {}, {} bracket relation(s)",
                g.n(),
                g.center_dim(),
                nonzero_bracket_count(&g)
            );
            0
        }
        Err(code) => code,
    }
}

fn span_line(subspace: &Subspace, names: &[String]) -> String {
    if subspace.is_zero() {
        return "span{}".to_string();
    }
    let combos: Vec<String> = subspace
        .basis()
        .iter()
        .map(|v| format_combination(v, names))
        .collect();
    format!("span{{{}}}", combos.join(", "))
}

fn print_trace(result: &PolarizationResult, names: &[String], sink: &mut dyn Write) {
    let Some(trace) = &result.per_j_nullspaces else {
        return;
    };
    w!(sink, "radical trace:");
    for (j, radical) in trace {
        w!(
            sink,
            "  j={j}  dim {}  {}",
            radical.dim(),
            span_line(radical, names)
        );
    }
}

fn print_basis(p: &Subspace, names: &[String], out: &mut dyn Write) {
    w!(out, "p basis:");
    for v in p.basis() {
        w!(out, "  {}  =  {}", format_vector(v), format_combination(v, names));
    }
}

fn json_out(g_dim: usize, result: &PolarizationResult, verified: bool) -> String {
    let payload = JsonOut {
        algebra_dim: g_dim,
        method: result.method.to_string(),
        p_basis: result
            .p_basis
            .basis()
            .iter()
            .map(|v| v.iter().map(ToString::to_string).collect())
            .collect(),
        dim_p: result.p_basis.dim(),
        orbit_dim: result.orbit_dim,
        verified,
    };
    serde_json::to_string_pretty(&payload).expect("schema serializes")
}

/// Verify and print one polarization result; returns the exit code.
fn finish_polarization(
    g: &LieAlgebra,
    ell: &Functional,
    result: &PolarizationResult,
    json: bool,
    trace: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let report = match verify_polarization(g, ell, &result.p_basis) {
        Ok(report) => report,
        Err(e) => return report_error(&e, None, err),
    };
    if !report.all_ok() {
        w!(
            err,
            "internal error: computed subspace failed verification \
             (subalgebra {}, isotropic {}, dim {} of expected {})",
            report.is_subalgebra,
            report.is_isotropic,
            report.actual_dim,
            report.expected_dim
        );
        return 3;
    }
    if trace {
        // Keep stdout machine-readable under --json.
        let sink: &mut dyn Write = if json { err } else { out };
        print_trace(result, g.basis_names(), sink);
    }
    if json {
        w!(out, "{}", json_out(g.n(), result, true));
    } else {
        w!(out, "method: {}", result.method);
        w!(out, "orbit dim: {}", result.orbit_dim);
        w!(out, "dim p: {}", result.p_basis.dim());
        print_basis(&result.p_basis, g.basis_names(), out);
        w!(out, "verified: true");
    }
    0
}

fn cmd_polarize(
    file: &str,
    ell_text: &str,
    method: MethodArg,
    json: bool,
    trace: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let g = match load_algebra(file, err) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let ell = match parse_ell(ell_text, g.n(), err) {
        Ok(ell) => ell,
        Err(code) => return code,
    };
    let computed = match method {
        MethodArg::Basic => polarize_basic(&g, &ell),
        MethodArg::Refined => polarize_refined(&g, &ell),
        MethodArg::Auto => polarize_auto(&g, &ell),
    };
    let result = match computed {
        Ok(result) => result,
        Err(e) => return report_error(&e, None, err),
    };
    if !json {
        w!(out, "algebra: dim {}, center dim {}", g.n(), g.center_dim());
        w!(out, "functional: {}", format_vector(ell.values()));
    }
    finish_polarization(&g, &ell, &result, json, trace, out, err)
}

fn guard_generator_count(m: usize, err: &mut dyn Write) -> Result<FreeStep2Layout, i32> {
    let layout = FreeStep2Layout::new(m).map_err(|e| report_error(&e, None, err))?;
    if layout.n() > MAX_DIM {
        w!(
            err,
            "error: m = {m} gives dimension {} over the supported limit {MAX_DIM}",
            layout.n()
        );
        return Err(1);
    }
    Ok(layout)
}

fn cmd_free_step2(
    m: usize,
    emit: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    if let Err(code) = guard_generator_count(m, err) {
        return code;
    }
    let (g, layout) = match build_free_step2(m) {
        Ok(pair) => pair,
        Err(e) => return report_error(&e, None, err),
    };
    let summary = format!(
        "free step-2 algebra on {m} generators: dim {}, center dim {}",
        layout.n(),
        layout.central_dim()
    );
    match emit {
        None => {
            w!(out, "{summary}");
            w!(out, "basis: {}", g.basis_names().join(" "));
            0
        }
        Some("-") => {
            // The algebra file owns stdout; the summary moves aside.
            w!(err, "{summary}");
            let _ = write!(out, "{}", emit_algebra(&g));
            0
        }
        Some(path) => {
            if let Err(e) = std::fs::write(path, emit_algebra(&g)) {
                w!(err, "error: cannot write `{path}`: {e}");
                return 1;
            }
            w!(out, "{summary}");
            w!(out, "wrote {path}");
            0
        }
    }
}

fn cmd_polarize_free(
    m: usize,
    ell_text: &str,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let layout = match guard_generator_count(m, err) {
        Ok(layout) => layout,
        Err(code) => return code,
    };
    let (g, _) = build_free_step2(m).expect("count already checked");
    let ell = match parse_ell(ell_text, layout.n(), err) {
        Ok(ell) => ell,
        Err(code) => return code,
    };
    let result = match polarize_free(&layout, &ell) {
        Ok(result) => {
            if !json {
                w!(out, "algebra: dim {}, center dim {}", g.n(), g.center_dim());
                w!(out, "functional: {}", format_vector(ell.values()));
                print_spanning_lines(&layout, &ell, &g, out);
            }
            result
        }
        Err(Error::ZariskiViolation { order }) => {
            w!(
                err,
                "warning: closed form does not apply (generator block of order {order} \
                 is singular); falling back to the general algorithm"
            );
            match polarize_basic(&g, &ell) {
                Ok(result) => {
                    if !json {
                        w!(out, "algebra: dim {}, center dim {}", g.n(), g.center_dim());
                        w!(out, "functional: {}", format_vector(ell.values()));
                    }
                    result
                }
                Err(e) => return report_error(&e, None, err),
            }
        }
        Err(e) => return report_error(&e, None, err),
    };
    finish_polarization(&g, &ell, &result, json, false, out, err)
}

fn print_spanning_lines(
    layout: &FreeStep2Layout,
    ell: &Functional,
    g: &LieAlgebra,
    out: &mut dyn Write,
) {
    let Ok(lines) = closed_form_spanning_set(layout, ell) else {
        return;
    };
    let names = g.basis_names();
    w!(out, "closed-form spanning set:");
    let center_names: Vec<&str> = names[..layout.central_dim()]
        .iter()
        .map(String::as_str)
        .collect();
    w!(out, "  center: {}", center_names.join(", "));
    for line in lines.iter().skip(layout.central_dim()) {
        // Show each line with its defining generator first.
        let leading = line
            .iter()
            .rposition(|c| !c.is_zero())
            .expect("spanning lines are nonzero");
        let mut order: Vec<usize> = vec![leading];
        order.extend((0..line.len()).filter(|&i| i != leading));
        w!(out, "  {}", format_combination_ordered(line, names, &order));
    }
}

fn cmd_verify(
    file: &str,
    ell_text: &str,
    basis_text: &str,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let g = match load_algebra(file, err) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let ell = match parse_ell(ell_text, g.n(), err) {
        Ok(ell) => ell,
        Err(code) => return code,
    };
    let mut vectors = Vec::new();
    for chunk in basis_text.split(';') {
        match parse_functional(chunk, g.n()) {
            Ok(f) => vectors.push(f.values().to_vec()),
            Err(e) => return report_error(&e, None, err),
        }
    }
    let p = Subspace::from_vectors(g.n(), vectors);
    let report = match verify_polarization(&g, &ell, &p) {
        Ok(report) => report,
        Err(e) => return report_error(&e, None, err),
    };
    print_report(&report, &g, out);
    if report.all_ok() {
        0
    } else {
        1
    }
}

fn print_report(report: &VerificationReport, g: &LieAlgebra, out: &mut dyn Write) {
    let names = g.basis_names();
    w!(out, "subalgebra: {}", report.is_subalgebra);
    w!(out, "isotropic: {}", report.is_isotropic);
    w!(
        out,
        "dimension: {} of expected {}",
        report.actual_dim,
        report.expected_dim
    );
    for witness in &report.witnesses {
        match witness {
            FailureWitness::NotClosed { x, y, bracket } => {
                w!(
                    out,
                    "  witness (not closed): [{}, {}] = {}",
                    format_combination(x, names),
                    format_combination(y, names),
                    format_combination(bracket, names)
                );
            }
            FailureWitness::NotIsotropic { x, y, pairing } => {
                w!(
                    out,
                    "  witness (not isotropic): l[{}, {}] = {pairing}",
                    format_combination(x, names),
                    format_combination(y, names)
                );
            }
        }
    }
    w!(out, "polarization: {}", report.all_ok());
}

fn cmd_catalog(list: bool, show: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match show {
        Some(name) => match catalog::find(name) {
            Ok(entry) => {
                let _ = write!(out, "# {}\n{}", entry.description, emit_algebra(&entry.algebra));
                0
            }
            Err(e) => {
                w!(err, "error: {e}");
                1
            }
        },
        None => {
            let _ = list; // listing is also the default
            let entries = catalog::entries();
            let width = entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
            for entry in entries {
                w!(
                    out,
                    "{:width$}  dim {:2}  center {:2}  {}",
                    entry.name,
                    entry.algebra.n(),
                    entry.algebra.center_dim(),
                    entry.description
                );
            }
            0
        }
    }
}

fn cmd_batch(file: &str, ells_path: &str, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let g = match load_algebra(file, err) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let ells_text = match read_input(ells_path) {
        Ok(text) => text,
        Err(e) => {
            w!(err, "error: cannot read `{ells_path}`: {e}");
            return 2;
        }
    };
    let names = g.basis_names();
    let mut index = 0;
    for (line_no, raw) in ells_text.lines().enumerate() {
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        index += 1;
        let ell = match parse_functional(trimmed, g.n()) {
            Ok(ell) => ell,
            Err(e) => {
                w!(err, "error at line {}: {e}", line_no + 1);
                return 2;
            }
        };
        let result = match polarize_auto(&g, &ell) {
            Ok(result) => result,
            Err(e) => return report_error(&e, None, err),
        };
        let report = match verify_polarization(&g, &ell, &result.p_basis) {
            Ok(report) => report,
            Err(e) => return report_error(&e, None, err),
        };
        if !report.all_ok() {
            w!(err, "internal error: result {index} failed verification");
            return 3;
        }
        w!(out, "[{index}] ell = {}", format_vector(ell.values()));
        w!(
            out,
            "    method {}  dim p {}  orbit {}  verified true",
            result.method,
            result.p_basis.dim(),
            result.orbit_dim
        );
        w!(out, "    p = {}", span_line(&result.p_basis, names));
    }
    if index == 0 {
        w!(err, "warning: no functionals found in `{ells_path}`");
    }
    0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_vec(args: &[&str]) -> (i32, String, String) {
        let argv: Vec<String> = std::iter::once("vergne".to_string())
            .chain(args.iter().map(ToString::to_string))
            .collect();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(&argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn catalog_listing_and_show() {
        let (code, out, _) = run_vec(&["catalog"]);
        assert_eq!(code, 0);
        assert!(out.contains("heisenberg"));
        assert!(out.contains("free5"));
        let (code, out, _) = run_vec(&["catalog", "--show", "heisenberg"]);
        assert_eq!(code, 0);
        assert!(out.contains("dim 3"));
        assert!(out.contains("[3,2] = Z1"));
        let (code, _, err) = run_vec(&["catalog", "--show", "nope"]);
        assert_eq!(code, 1);
        assert!(err.contains("unknown catalog entry"));
    }

    #[test]
    fn unknown_subcommand_is_a_usage_error() {
        let (code, _, err) = run_vec(&["frobnicate"]);
        assert_eq!(code, 2);
        assert!(!err.is_empty());
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_vec(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("polarize"));
    }

    #[test]
    fn free_step2_summary() {
        let (code, out, _) = run_vec(&["free-step2", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("dim 6, center dim 3"));
        assert!(out.contains("Z12 Z13 Z23 Z1 Z2 Z3"));
        let (code, _, err) = run_vec(&["free-step2", "1"]);
        assert_eq!(code, 1);
        assert!(err.contains("at least 2 generators"));
    }

    #[test]
    fn free_step2_emit_to_stdout_is_pure_file() {
        let (code, out, err) = run_vec(&["free-step2", "3", "--emit", "-"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("# basis:"));
        assert!(crate::parse::parse_algebra(&out).is_ok());
        assert!(err.contains("free step-2 algebra on 3 generators"));
    }

    #[test]
    fn polarize_free_worked_example_text() {
        let (code, out, _) = run_vec(&["polarize-free", "3", "--ell", "1,2,3,0,0,0"]);
        assert_eq!(code, 0);
        assert!(out.contains("Z3 + 3*Z1 - 2*Z2"), "{out}");
        assert!(out.contains("verified: true"));
        assert!(out.contains("dim p: 5"));
        assert!(out.contains("orbit dim: 2"));
    }

    #[test]
    fn polarize_free_falls_back_off_the_zariski_set() {
        let (code, out, err) = run_vec(&["polarize-free", "3", "--ell", "0,5,7,0,0,0"]);
        assert_eq!(code, 0);
        assert!(err.contains("falling back"));
        assert!(out.contains("method: basic"));
        assert!(out.contains("verified: true"));
    }

    #[test]
    fn generator_count_guard() {
        let (code, _, err) = run_vec(&["free-step2", "50"]);
        assert_eq!(code, 1);
        assert!(err.contains("limit"));
    }
}
