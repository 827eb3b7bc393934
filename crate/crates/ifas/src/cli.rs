//! Argument parsing and the four subcommands. [`run`] does all the work so
//! the binary and the tests share one code path.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ifas_core::barhom::{
    bar_apply, cyclic_homology, dihedral_homology_rational, hochschild_homology, reflexive_homology, BarError,
    TensorBasis, TensorElement,
};
use ifas_core::factorize::{factor_d_hplus, factor_delta_h, factor_reflexive};
use ifas_core::invalg::{builtin, InvolutiveAlgebra, BUILTIN_NAMES};
use ifas_core::linalg::{HomologyGroup, Ring};
use ifas_core::ncsets::NCMorphism;

use crate::formats::algebra::parse_algebra;
use crate::formats::morphism::{parse_morphism, parse_morphisms};
use crate::output::{render_table, OutputFormat, TableHeader};
use crate::sample::DEFAULT_SEED;
use crate::verify::{self, Selector, VerifyConfig};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ifas", version, about = "Involutive non-commutative sets, their factorizations and bar homology")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Factor morphisms as Δ ∘ D ∘ H⁺ and check the reconstruction.
    Factorize {
        /// Also factor through ΔRᵒᵖ ∘ H⁺; refuses morphisms that move 0.
        #[arg(long)]
        based: bool,
        /// A morphism such as `1 -> 0 ; 0: 1- 0+`; read from stdin (one per line) when absent.
        morphism: Option<String>,
    },
    /// Run a verification sweep.
    Verify {
        #[arg(value_enum)]
        selector: Selector,
        /// Largest object [n] considered.
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        /// Random samples per sampled sweep.
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Print H_0 … H_N of an involutive algebra.
    Homology {
        #[arg(value_enum)]
        theory: Theory,
        #[command(flatten)]
        source: AlgebraSource,
        /// Coefficient ring Q, Z or F<p>; overrides the ring of an algebra file.
        #[arg(long, value_parser = parse_ring)]
        ring: Option<Ring>,
        /// Largest degree N.
        #[arg(long, default_value_t = 4)]
        degrees: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Human)]
        format: OutputFormat,
    },
    /// Apply the bar construction of an algebra to a basis tensor.
    Bar {
        #[command(flatten)]
        source: AlgebraSource,
        /// Coefficient ring Q, Z or F<p>; overrides the ring of an algebra file.
        #[arg(long, value_parser = parse_ring)]
        ring: Option<Ring>,
        morphism: String,
        /// Basis indices a_0 … a_n of the input tensor.
        #[arg(required = true, num_args = 1..)]
        indices: Vec<usize>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "algebra_source")]
pub struct AlgebraSource {
    /// Algebra file (see the README for the format).
    #[arg(long)]
    pub algebra: Option<PathBuf>,
    /// One of the built-in algebras.
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(BUILTIN_NAMES))]
    pub builtin: Option<String>,
}

fn parse_ring(s: &str) -> Result<Ring, String> {
    s.parse().map_err(|e: ifas_core::linalg::LinalgError| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theory {
    Hochschild,
    Reflexive,
    Cyclic,
    Dihedral,
}

impl Theory {
    fn name(self) -> &'static str {
        match self {
            Theory::Hochschild => "hochschild",
            Theory::Reflexive => "reflexive",
            Theory::Cyclic => "cyclic",
            Theory::Dihedral => "dihedral",
        }
    }
}

/// Parses `args` (program name first) and runs the command. Returns the exit code.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Factorize { based, morphism } => factorize(based, morphism, stdin),
        Command::Verify { selector, max_n, samples, seed } => {
            verify_cmd(selector, VerifyConfig { max_n, samples: samples as usize, seed })
        }
        Command::Homology { theory, source, ring, degrees, format } => homology(theory, &source, ring, degrees, format),
        Command::Bar { source, ring, morphism, indices } => bar(&source, ring, &morphism, &indices),
    };
    match result {
        Ok((code, text)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}

type Outcome = Result<(i32, String), String>;

fn factorize(based: bool, morphism: Option<String>, stdin: &mut dyn Read) -> Outcome {
    let morphisms = match morphism {
        Some(text) => vec![parse_morphism(&text).map_err(|e| e.to_string())?],
        None => {
            let mut text = String::new();
            stdin.read_to_string(&mut text).map_err(|e| e.to_string())?;
            let parsed = parse_morphisms(&text).map_err(|e| e.to_string())?;
            if parsed.is_empty() {
                return Err("no morphism on stdin".into());
            }
            parsed
        }
    };
    let mut out = String::new();
    let mut all_ok = true;
    for (k, f) in morphisms.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        all_ok &= factorize_one(f, based, &mut out)?;
    }
    Ok((if all_ok { EXIT_PASS } else { EXIT_FAIL }, out))
}

fn factorize_one(f: &NCMorphism, based: bool, out: &mut String) -> Result<bool, String> {
    let dh = factor_delta_h(f);
    let split = factor_d_hplus(&dh.g);
    let _ = writeln!(out, "input: {f}");
    let _ = writeln!(out, "phi = {}", dh.phi_morphism());
    let _ = writeln!(out, "g = {}", dh.g);
    let _ = writeln!(out, "d = {}", split.d);
    let _ = writeln!(out, "h = {}", split.h);
    let mut ok = dh.reconstruct() == *f && split.d.compose(&split.h).as_ref() == Ok(&dh.g);
    if based {
        let refl = factor_reflexive(f).map_err(|e| format!("{f}: {e}"))?;
        let _ = writeln!(out, "rho = {}", refl.rho);
        ok &= refl.reconstruct() == *f;
    }
    let _ = writeln!(out, "reconstruction: {}", if ok { "ok" } else { "FAILED" });
    Ok(ok)
}

fn verify_cmd(selector: Selector, config: VerifyConfig) -> Outcome {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "verify {}: max_n = {}, samples = {}, seed = {}",
        selector.name(),
        config.max_n,
        config.samples,
        config.seed
    );
    let reports = verify::run(selector, &config);
    for r in &reports {
        if let Some(e) = &r.error {
            return Err(format!("{}: {e}", r.name));
        }
        let _ = writeln!(out, "{r}");
    }
    let passed = reports.iter().all(verify::CheckReport::passed);
    let _ = writeln!(out, "{}", if passed { "all checks passed" } else { "some checks FAILED" });
    Ok((if passed { EXIT_PASS } else { EXIT_FAIL }, out))
}

fn load_algebra(source: &AlgebraSource, ring: Option<Ring>) -> Result<(String, InvolutiveAlgebra), String> {
    if let Some(name) = &source.builtin {
        let a = builtin(name, ring.unwrap_or(Ring::Rationals)).map_err(|e| e.to_string())?;
        return Ok((name.clone(), a));
    }
    let path = source.algebra.as_ref().expect("clap requires one source");
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let a = parse_algebra(&text, ring).map_err(|e| format!("{}: {e}", path.display()))?;
    let report = a.validate();
    if !report.is_valid() {
        let first = report.failures.first().map(ToString::to_string).unwrap_or_default();
        return Err(format!("{}: not an involutive algebra: {first}", path.display()));
    }
    Ok((path.display().to_string(), a))
}

fn homology(theory: Theory, source: &AlgebraSource, ring: Option<Ring>, degrees: usize, format: OutputFormat) -> Outcome {
    let (name, a) = load_algebra(source, ring)?;
    let m = a.regular_bimodule();
    let groups: Result<Vec<HomologyGroup>, BarError> = match theory {
        Theory::Hochschild => hochschild_homology(&a, &m, degrees),
        Theory::Reflexive => reflexive_homology(&a, &m, degrees),
        Theory::Cyclic => cyclic_homology(&a, degrees),
        Theory::Dihedral => dihedral_homology_rational(&a, degrees),
    };
    let groups = groups.map_err(|e| match e {
        BarError::RingNotRational(r) => format!("dihedral homology is only computed over Q, not {r}"),
        other => other.to_string(),
    })?;
    let header = TableHeader { theory: theory.name(), algebra: &name, ring: a.ring() };
    Ok((EXIT_PASS, render_table(&header, &groups, format)))
}

fn bar(source: &AlgebraSource, ring: Option<Ring>, morphism: &str, indices: &[usize]) -> Outcome {
    let (_, a) = load_algebra(source, ring)?;
    let f = parse_morphism(morphism).map_err(|e| e.to_string())?;
    if indices.len() != f.source() + 1 {
        return Err(format!("{} has source [{}], which needs {} indices", f, f.source(), f.source() + 1));
    }
    let basis = TensorBasis::new(a.dim(), a.dim(), f.source());
    let x = TensorElement::basis_tensor(a.ring(), basis, indices.to_vec()).map_err(|e| e.to_string())?;
    let y = bar_apply(&a, &f, &x).map_err(|e| e.to_string())?;
    let mut out = String::new();
    if y.is_zero() {
        out.push_str("0\n");
    }
    let names = a.basis_names();
    for (idx, c) in y.coefficients() {
        let word: Vec<&str> = idx.iter().map(|&i| names[i].as_str()).collect();
        let _ = writeln!(out, "{c} * {}", word.join(" (x) "));
    }
    Ok((EXIT_PASS, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("ifas").chain(args.iter().copied());
        let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn factorize_identity() {
        let (code, out, _) = call(&["factorize", "2 -> 2 ; 0: 0+ ; 1: 1+ ; 2: 2+"], "");
        assert_eq!(code, 0);
        assert!(out.contains("g = [0+, 1+, 2+]"), "{out}");
        assert!(out.contains("d = [0+, 1+, 2+]"), "{out}");
        assert!(out.contains("h = [0+, 1+, 2+]"), "{out}");
    }

    #[test]
    fn factorize_reads_stdin_and_checks_basedness() {
        let (code, out, _) = call(&["factorize", "--based"], "0 -> 0 ; 0: 0-\n1 -> 1 ; 0: 0+ ; 1: 1-\n");
        assert_eq!(code, 0, "{out}");
        assert_eq!(out.matches("reconstruction: ok").count(), 2);
        let (code, _, err) = call(&["factorize", "--based", "1 -> 1 ; 0: 1+ ; 1: 0+"], "");
        assert_eq!(code, 2);
        assert!(err.contains("basepoint"), "{err}");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["verify", "nonsense"], "").0, 2);
        assert_eq!(call(&["verify", "all", "--samples", "0"], "").0, 2);
        assert_eq!(call(&["homology", "cyclic"], "").0, 2);
        assert_eq!(call(&["homology", "cyclic", "--builtin", "ground", "--ring", "R"], "").0, 2);
        assert_eq!(call(&["--help"], "").0, 0);
    }

    #[test]
    fn bar_evaluation() {
        let (code, out, _) = call(&["bar", "--builtin", "dual_numbers_minus", "1 -> 0 ; 0: 1- 0+", "1", "1"], "");
        assert_eq!(code, 0);
        assert_eq!(out, "0\n");
        let (code, out, _) = call(&["bar", "--builtin", "group_c2", "1 -> 0 ; 0: 1- 0+", "1", "1"], "");
        assert_eq!(code, 0);
        assert_eq!(out, "1 * 1\n");
    }
}
