//! The `tiv` command line.
//!
//! Exit codes: 0 on success or a passed check, 1 when a verification fails,
//! 2 for usage and format errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::action::{
    check_invariance, lie_invariant_space, GroupKind, InvarianceReport, LieParts, TensorFunction,
};
use crate::error::{Error, Result};
use crate::invariants::{
    classical_invariants, evaluate_u, hyperdet_nn1, pencil_degenerate, substitute_u, Generators,
    UForm,
};
use crate::pencil::{
    block_det, block_det_value, classify_format, pencil_coefficients_interp,
    pencil_coefficients_subset, pencil_values, pencil_values_subset, FormatClass,
    IndeterminateTensor, PencilInvariants, RatTensor,
};
use crate::polyring::{Polynomial, Rational, Ring};
use crate::tensor_file::TensorFile;

#[derive(Debug, Parser)]
#[command(name = "tiv", version, about = "Exact invariants of m x n x 2 tensors")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficients f_{k,n-k} of det(xX + yY).
    Pencil(PencilArgs),
    /// Block-determinant invariant of an m x n x 2 format with m < n.
    Blockdet(BlockdetArgs),
    /// Randomized exact invariance check.
    Check(CheckArgs),
    /// Rewrite an invariant in the pencil coefficients U_k = f_{k,n-k}.
    Subduct(SubductArgs),
    /// Hyperdeterminant of an n x n x 2 tensor and its degeneracy.
    Hyperdet(HyperdetArgs),
    /// Basis of the polynomials of one degree killed by the Lie algebras.
    LieKernel(LieKernelArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Subset,
    Interp,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Group {
    Slsl,
    Slslsl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Part {
    Slm,
    Sln,
    Sl2,
}

#[derive(Debug, Args)]
pub struct TensorSource {
    /// Work with indeterminate entries (the default without --input).
    #[arg(long, conflicts_with = "input")]
    pub symbolic: bool,
    /// Tensor JSON file.
    #[arg(short, long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PencilArgs {
    #[arg(long)]
    pub n: Option<usize>,
    /// Row count; defaults to n.
    #[arg(long)]
    pub m: Option<usize>,
    #[command(flatten)]
    pub source: TensorSource,
    #[arg(long, value_enum, default_value = "subset")]
    pub method: Method,
    /// One term per line.
    #[arg(long)]
    pub pretty: bool,
}

#[derive(Debug, Args)]
pub struct BlockdetArgs {
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[command(flatten)]
    pub source: TensorSource,
    #[arg(long)]
    pub pretty: bool,
}

#[derive(Debug, Args)]
pub struct PolySource {
    /// Polynomial text in T[i,j,k] (or U<k> with --u-form).
    #[arg(long, conflicts_with = "poly_file")]
    pub poly: Option<String>,
    #[arg(long)]
    pub poly_file: Option<PathBuf>,
}

impl PolySource {
    fn text(&self) -> Result<Option<String>> {
        match (&self.poly, &self.poly_file) {
            (Some(s), _) => Ok(Some(s.clone())),
            (None, Some(path)) => Ok(Some(std::fs::read_to_string(path)?)),
            (None, None) => Ok(None),
        }
    }
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Row count; defaults to n.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "slslsl")]
    pub group: Group,
    #[arg(long, default_value_t = 25)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub poly: PolySource,
    /// Read the polynomial in U0..Un, standing for the pencil coefficients.
    #[arg(long)]
    pub u_form: bool,
}

#[derive(Debug, Args)]
pub struct SubductArgs {
    #[arg(long)]
    pub n: usize,
    /// The names f0..fn may be used for f_{0,n}..f_{n,0}.
    #[command(flatten)]
    pub poly: PolySource,
    #[arg(long)]
    pub pretty: bool,
}

#[derive(Debug, Args)]
pub struct HyperdetArgs {
    #[arg(long)]
    pub n: Option<usize>,
    #[command(flatten)]
    pub source: TensorSource,
    /// With --symbolic, print the expansion in T[i,j,k] instead of the U-form.
    #[arg(long)]
    pub expand: bool,
    #[arg(long)]
    pub pretty: bool,
}

#[derive(Debug, Args)]
pub struct LieKernelArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub degree: u32,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "slm,sln")]
    pub parts: Vec<Part>,
    #[arg(long)]
    pub pretty: bool,
}

fn show(p: &Polynomial, pretty: bool) -> String {
    if pretty {
        p.to_pretty_string()
    } else {
        p.to_string()
    }
}

/// Loads `--input` and reconciles it with the `--m`/`--n` flags.
fn load_tensor(
    source: &TensorSource,
    m: Option<usize>,
    n: Option<usize>,
) -> Result<(usize, usize, Option<RatTensor>)> {
    let Some(path) = &source.input else {
        let n = n.ok_or_else(|| Error::TensorFile("--n is required without --input".into()))?;
        return Ok((m.unwrap_or(n), n, None));
    };
    let file = TensorFile::load(path)?;
    if m.is_some_and(|m| m != file.m) || n.is_some_and(|n| n != file.n) {
        return Err(Error::TensorFile(format!(
            "file holds a {}x{}x2 tensor, flags ask for another format",
            file.m, file.n
        )));
    }
    Ok((file.m, file.n, file.tensor()?))
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Pencil(a) => pencil(a, out),
        Command::Blockdet(a) => blockdet(a, out),
        Command::Check(a) => check(a, out),
        Command::Subduct(a) => subduct(a, out),
        Command::Hyperdet(a) => hyperdet(a, out),
        Command::LieKernel(a) => lie_kernel(a, out),
    }
}

fn label(n: usize, k: usize) -> String {
    format!("f_{{{k},{}}}", n - k)
}

fn pencil(a: PencilArgs, out: &mut dyn Write) -> Result<i32> {
    let (m, n, tensor) = load_tensor(&a.source, a.m, a.n)?;
    if m != n {
        return Err(Error::NotSquare { m, n });
    }
    match tensor {
        None => {
            let t = IndeterminateTensor::new(n, n);
            let compute = |method: Method| -> Result<PencilInvariants> {
                match method {
                    Method::Interp => pencil_coefficients_interp(&t),
                    _ => pencil_coefficients_subset(&t),
                }
            };
            let f = compute(a.method)?;
            for (k, p) in f.coeffs().iter().enumerate() {
                let body = show(p, a.pretty);
                if a.pretty {
                    writeln!(out, "{} =\n{body}", label(n, k))?;
                } else {
                    writeln!(out, "{} = {body}", label(n, k))?;
                }
            }
            if a.method == Method::Both {
                return agree(compute(Method::Interp)?.coeffs() == f.coeffs(), out);
            }
        }
        Some(t) => {
            let values = match a.method {
                Method::Interp => pencil_values(&t)?,
                _ => pencil_values_subset(&t)?,
            };
            for (k, v) in values.iter().enumerate() {
                writeln!(out, "{} = {v}", label(n, k))?;
            }
            if a.method == Method::Both {
                return agree(pencil_values(&t)? == values, out);
            }
        }
    }
    Ok(0)
}

fn agree(same: bool, out: &mut dyn Write) -> Result<i32> {
    if same {
        writeln!(out, "methods agree")?;
        Ok(0)
    } else {
        writeln!(out, "methods disagree")?;
        Ok(1)
    }
}

fn blockdet(a: BlockdetArgs, out: &mut dyn Write) -> Result<i32> {
    let (m, n, tensor) = load_tensor(&a.source, a.m, a.n)?;
    if m >= n {
        return Err(Error::UnsupportedFormat {
            m,
            n,
            reason: "the block determinant needs 1 <= m < n".into(),
        });
    }
    let class = classify_format(m, n)?;
    if let FormatClass::Trivial { .. } = class {
        writeln!(out, "{class}")?;
        return Ok(0);
    }
    match tensor {
        None => writeln!(out, "{}", show(&block_det(m, n)?, a.pretty))?,
        Some(t) => writeln!(out, "{}", block_det_value(&t)?)?,
    }
    Ok(0)
}

fn report(name: &str, rep: &InvarianceReport, out: &mut dyn Write) -> Result<bool> {
    match &rep.counterexample {
        None => {
            writeln!(out, "PASS {name}: {}/{} samples", rep.passed, rep.samples)?;
            Ok(true)
        }
        Some(ce) => {
            writeln!(
                out,
                "FAIL {name}: {}/{} samples; first failure at sample {}",
                rep.passed, rep.samples, ce.sample
            )?;
            writeln!(out, "  f(t)   = {}", ce.value)?;
            writeln!(out, "  f(g.t) = {}", ce.transformed_value)?;
            let json = serde_json::to_string(&TensorFile::from_tensor(&ce.tensor))?;
            writeln!(out, "  t = {json}")?;
            writeln!(out, "  P = {:?}", ce.element.p())?;
            writeln!(out, "  Q = {:?}", ce.element.q())?;
            writeln!(out, "  R = {:?}", ce.element.r())?;
            Ok(false)
        }
    }
}

fn check(a: CheckArgs, out: &mut dyn Write) -> Result<i32> {
    let n = a.n;
    let m = a.m.unwrap_or(n);
    let kind = match a.group {
        Group::Slsl => GroupKind::SlSl,
        Group::Slslsl => GroupKind::SlSlSl,
    };
    let mut targets: Vec<(String, Box<dyn TensorFunction>)> = Vec::new();
    if let Some(text) = a.poly.text()? {
        if a.u_form {
            if m != n {
                return Err(Error::NotSquare { m, n });
            }
            let g = Polynomial::parse(&Ring::u_ring(n), &text)?;
            targets.push((text.trim().to_string(), Box::new(UForm::new(g, n)?)));
        } else {
            let p = Polynomial::parse(&Ring::tensor(m, n), &text)?;
            targets.push((text.trim().to_string(), Box::new(p)));
        }
    } else {
        match classify_format(m, n)? {
            FormatClass::Square { .. } if kind == GroupKind::SlSl => {
                let f = pencil_coefficients_subset(&IndeterminateTensor::new(n, n))?;
                for (k, p) in f.coeffs().iter().enumerate() {
                    targets.push((label(n, k), Box::new(p.clone())));
                }
            }
            FormatClass::Square { .. } => {
                for (i, g) in classical_invariants(n)?.into_iter().enumerate() {
                    targets.push((
                        format!("classical invariant {}", i + 1),
                        Box::new(UForm::new(g, n)?),
                    ));
                }
            }
            FormatClass::SingleGenerator { .. } => {
                let (lo, hi) = (m.min(n), m.max(n));
                if (lo, hi) != (m, n) {
                    return Err(Error::UnsupportedFormat {
                        m,
                        n,
                        reason: "the block determinant is set up for m < n".into(),
                    });
                }
                targets.push(("block determinant".into(), Box::new(block_det(m, n)?)));
            }
            class @ FormatClass::Trivial { .. } => {
                writeln!(out, "{class}; nothing to check")?;
                return Ok(0);
            }
        }
    }
    let mut all = true;
    for (name, f) in &targets {
        if f.format() != (m, n) {
            return Err(Error::Shape(format!(
                "`{name}` is not a function of {m}x{n}x2 tensors"
            )));
        }
        let rep = check_invariance(f.as_ref(), kind, a.samples, a.seed)?;
        all &= report(name, &rep, out)?;
    }
    Ok(if all { 0 } else { 1 })
}

fn subduct(a: SubductArgs, out: &mut dyn Write) -> Result<i32> {
    let n = a.n;
    let text = a
        .poly
        .text()?
        .ok_or_else(|| Error::TensorFile("one of --poly or --poly-file is required".into()))?;
    let names: Vec<String> = (0..=n).map(|k| format!("f{k}")).collect();
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let ring = Ring::tensor_with(n, n, &name_refs);
    let raw = Polynomial::parse(&ring, &text)?;
    let mut gens = Generators::new(n)?;
    let target = gens.ring().clone();
    let nt = 2 * n * n;
    let images: Vec<Polynomial> = (0..ring.len())
        .map(|i| {
            if i < nt {
                Polynomial::var_index(&target, i)
            } else {
                gens.f(i - nt).clone()
            }
        })
        .collect();
    let p = raw.substitute_indexed(&target, &images)?;
    let s = gens.subduct(&p)?;
    writeln!(out, "U-form: {}", show(&s.u, a.pretty))?;
    writeln!(out, "remainder: {}", show(&s.remainder, a.pretty))?;
    Ok(if s.remainder.is_zero() { 0 } else { 1 })
}

fn hyperdet(a: HyperdetArgs, out: &mut dyn Write) -> Result<i32> {
    let (m, n, tensor) = load_tensor(&a.source, None, a.n)?;
    if m != n {
        return Err(Error::NotSquare { m, n });
    }
    let h = hyperdet_nn1(n)?;
    match tensor {
        None if a.expand => writeln!(out, "{}", show(&substitute_u(&h, n)?, a.pretty))?,
        None => writeln!(out, "{}", show(&h, a.pretty))?,
        Some(t) => {
            let value: Rational = evaluate_u(&h, &t)?;
            let d = pencil_degenerate(&t)?;
            writeln!(out, "value: {value}")?;
            let verdict = match (d.degenerate, d.identically_zero) {
                (true, true) => "degenerate (det(xX + yY) vanishes identically)",
                (true, false) => "degenerate",
                (false, _) => "non-degenerate",
            };
            writeln!(out, "{verdict}")?;
        }
    }
    Ok(0)
}

fn lie_kernel(a: LieKernelArgs, out: &mut dyn Write) -> Result<i32> {
    let parts = LieParts {
        sl_m: a.parts.contains(&Part::Slm),
        sl_n: a.parts.contains(&Part::Sln),
        sl_2: a.parts.contains(&Part::Sl2),
    };
    let basis = lie_invariant_space(a.m, a.n, a.degree, parts)?;
    writeln!(out, "dimension: {}", basis.len())?;
    for (i, b) in basis.iter().enumerate() {
        writeln!(out, "b{} = {}", i + 1, show(b, a.pretty))?;
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let cli = Cli::try_parse_from(std::iter::once("tiv").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        let code = run(cli, &mut buf).unwrap_or(2);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn pencil_n1() {
        let (code, out) = run_args(&["pencil", "--n", "1", "--symbolic"]);
        assert_eq!(code, 0);
        assert_eq!(out, "f_{0,1} = T[1,1,2]\nf_{1,0} = T[1,1,1]\n");
    }

    #[test]
    fn pencil_nonsquare_is_usage_error() {
        assert_eq!(run_args(&["pencil", "--m", "2", "--n", "3"]).0, 2);
    }

    #[test]
    fn blockdet_verdicts() {
        let (code, out) = run_args(&["blockdet", "--m", "2", "--n", "5"]);
        assert_eq!((code, out.trim()), (0, "trivial: K (invariant ring is K)"));
        assert_eq!(run_args(&["blockdet", "--m", "3", "--n", "3"]).0, 2);
    }

    #[test]
    fn subduct_with_generator_names() {
        let (code, out) = run_args(&["subduct", "--n", "2", "--poly", "f1^2 - 4*f0*f2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "U-form: U1^2 - 4*U2*U0\nremainder: 0\n");
    }

    #[test]
    fn lie_kernel_dimension() {
        let (code, out) = run_args(&["lie-kernel", "--m", "2", "--n", "2", "--degree", "2"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("dimension: 3\n"));
    }
}
