//! Command-line front end: every operation of the library behind one
//! subcommand each, with deterministic JSON on stdout.
//!
//! Exit codes: 0 for success (and for verification sweeps that pass), 1 for a
//! verification sweep that fails, 2 for usage or domain errors. Domain errors
//! print a machine-readable envelope with a stable error code.

use std::io::{self, Write};

use clap::{Parser, Subcommand};
use serde::Serialize;

use spinrep::corners::{corner_report, minimal_k_types, CornerReport};
use spinrep::duals::{KType, MType};
use spinrep::elementary::{ElementaryRep, Nu};
use spinrep::halfint::{HalfInt, Weight};
use spinrep::output::{render, CommandResult, ErrorEnvelope, SpectrumDto, SubquotientDto};
use spinrep::subquotient::{decompose, CaseTag, SubqLabel, Subquotient};
use spinrep::verify::run_verify;
use spinrep::{
    elementary_equivalent, enumerate_ghat0, ghat_family, in_ghat0, lambda_class, nu_sigma,
    pairs_for_lambda, q_of_unitary_even, qv_class, unitary_map_odd, Error, GhatClass, GhatIndex,
    LambdaClass, LambdaPair, Result,
};

#[derive(Parser)]
#[command(name = "spinrep", version, about = "Exact classification computations for Spin(n,1)")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Infinitesimal character of an elementary representation.
    Infchar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        nu: String,
    },
    /// Reducibility (and, when irreducible, unitarity) of an elementary
    /// representation.
    Reducible {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        nu: String,
    },
    /// Irreducible subquotients at a reducible parameter.
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        nu: String,
    },
    /// K-types of one subquotient out to a coordinate height.
    Spectrum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        nu: String,
        /// Subquotient name: tau, omega, omega+, or omega-.
        #[arg(long)]
        label: String,
        /// Largest coordinate absolute value to enumerate.
        #[arg(long)]
        height: String,
    },
    /// Corners, fundamental corners, and minimal K-types of a family member
    /// (even n).
    Corners {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: String,
        /// Class name: tau1, tau2, ..., omega+, omega-, or omega.
        #[arg(long)]
        index: String,
    },
    /// The family of irreducible classes over one infinitesimal character.
    ClassifyLambda {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: String,
    },
    /// All unitary non-elementary classes with lambda_1 at most the bound.
    EnumerateGhat0 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bound: String,
    },
    /// Brute-force verification sweeps (tokens 1-5, partition, corners).
    Verify {
        #[arg(long)]
        theorem: String,
        /// Restrict to one n (default: every n the sweep covers).
        #[arg(long)]
        n: Option<usize>,
        /// Window bound (default: the sweep's standard window).
        #[arg(long)]
        bound: Option<String>,
    },
}

#[derive(Serialize)]
struct RepInputs {
    n: usize,
    sigma: String,
    nu: String,
}

#[derive(Serialize)]
struct SpectrumInputs {
    n: usize,
    sigma: String,
    nu: String,
    label: SubqLabel,
    height: HalfInt,
}

#[derive(Serialize)]
struct CornersInputs {
    n: usize,
    lambda: String,
    index: GhatIndex,
}

#[derive(Serialize)]
struct LambdaInputs {
    n: usize,
    lambda: String,
}

#[derive(Serialize)]
struct BoundInputs {
    n: usize,
    bound: HalfInt,
}

#[derive(Serialize)]
struct VerifyInputs {
    theorem: String,
    n: Option<usize>,
    bound: Option<HalfInt>,
}

#[derive(Serialize)]
struct InfcharPayload {
    lambda_vector: Weight,
    dominant: Weight,
    family: String,
}

#[derive(Serialize)]
struct ReduciblePayload {
    reducible: bool,
    nu_sigma: Option<HalfInt>,
    /// None at reducible parameters, where the question moves to the
    /// subquotients.
    unitary: Option<bool>,
}

#[derive(Serialize)]
struct DecomposePayload {
    count: usize,
    subquotients: Vec<SubquotientDto>,
}

#[derive(Serialize)]
struct SpectrumPayload {
    label: SubqLabel,
    case: CaseTag,
    spectrum: SpectrumDto,
    count: usize,
    k_types: Vec<KType>,
}

#[derive(Serialize)]
struct CornersPayload {
    lambda: Weight,
    index: GhatIndex,
    corners: CornerReport,
    distinct_fundamental: usize,
    minimal_k_types: Vec<KType>,
    unitary: bool,
    /// The corner value parametrizing the class when unitary.
    q: Option<KType>,
}

#[derive(Serialize)]
struct EquivDto {
    sigma: String,
    nu: String,
}

#[derive(Serialize)]
struct RealizationDto {
    sigma: String,
    nu: HalfInt,
    label: SubqLabel,
    case: CaseTag,
}

#[derive(Serialize)]
struct ClassDto {
    index: GhatIndex,
    unitary: bool,
    in_ghat0: bool,
    finite_dimensional: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    elementary_equivalent: Option<EquivDto>,
    realizations: Vec<RealizationDto>,
    spectrum: SpectrumDto,
    /// q (even n, unitary classes) or q^V (odd n).
    k_type: Option<KType>,
}

#[derive(Serialize)]
struct ClassifyPayload {
    lambda_class: LambdaClass,
    pairs: Vec<LambdaPair>,
    classes: Vec<ClassDto>,
}

#[derive(Serialize)]
struct Ghat0Entry {
    lambda: Weight,
    index: GhatIndex,
    k_type: KType,
}

#[derive(Serialize)]
struct Ghat0Payload {
    count: usize,
    classes: Vec<Ghat0Entry>,
}

fn parse_rep(n: usize, sigma: &str, nu: &str) -> Result<ElementaryRep> {
    let sigma = MType::new(n, sigma.parse::<Weight>()?)?;
    let nu = nu.parse::<Nu>()?;
    Ok(ElementaryRep::new(sigma, nu))
}

fn find_subquotient(subs: Vec<Subquotient>, label: SubqLabel) -> Result<Subquotient> {
    subs.into_iter()
        .find(|s| s.label() == label)
        .ok_or_else(|| Error::BadIndex(label.to_string()))
}

fn class_k_type(class: &GhatClass) -> Result<Option<KType>> {
    if class.n().is_multiple_of(2) {
        if class.is_unitary() {
            q_of_unitary_even(class).map(Some)
        } else {
            Ok(None)
        }
    } else {
        qv_class(class).map(Some)
    }
}

fn class_dto(class: &GhatClass) -> Result<ClassDto> {
    let equivalent = elementary_equivalent(class)?.map(|rep| EquivDto {
        sigma: rep.sigma().to_string(),
        nu: rep.nu().to_string(),
    });
    Ok(ClassDto {
        index: class.index(),
        unitary: class.is_unitary(),
        in_ghat0: in_ghat0(class)?,
        finite_dimensional: class.is_finite_dimensional(),
        elementary_equivalent: equivalent,
        realizations: class
            .realizations()
            .iter()
            .map(|sub| RealizationDto {
                sigma: sub.sigma().to_string(),
                nu: sub.nu(),
                label: sub.label(),
                case: sub.case(),
            })
            .collect(),
        spectrum: SpectrumDto::of(class.spectrum()),
        k_type: class_k_type(class)?,
    })
}

/// Write one line to stdout. A broken pipe means the reader stopped
/// consuming, which is a normal way for output to end, not a failure.
fn emit(line: &str) {
    let mut out = io::stdout().lock();
    let written = writeln!(out, "{line}").and_then(|()| out.flush());
    if let Err(err) = written {
        if err.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("spinrep: cannot write output: {err}");
        std::process::exit(2);
    }
}

fn run(cmd: Cmd, pretty: bool) -> Result<i32> {
    match cmd {
        Cmd::Infchar { n, sigma, nu } => {
            let rep = parse_rep(n, &sigma, &nu)?;
            let infchar = rep.dominant_infchar()?;
            let inputs = RepInputs {
                n,
                sigma: rep.sigma().to_string(),
                nu: rep.nu().to_string(),
            };
            let payload = InfcharPayload {
                lambda_vector: rep.lambda_param()?,
                dominant: infchar.lambda,
                family: infchar.family.to_string(),
            };
            emit(&render(&CommandResult::new("infchar", inputs, payload), pretty));
            Ok(0)
        }
        Cmd::Reducible { n, sigma, nu } => {
            let rep = parse_rep(n, &sigma, &nu)?;
            let inputs = RepInputs {
                n,
                sigma: rep.sigma().to_string(),
                nu: rep.nu().to_string(),
            };
            let reducible = rep.is_reducible();
            let payload = ReduciblePayload {
                reducible,
                nu_sigma: nu_sigma(rep.sigma()),
                unitary: if reducible {
                    None
                } else {
                    Some(rep.is_unitary_elementary()?)
                },
            };
            emit(&render(&CommandResult::new("reducible", inputs, payload), pretty));
            Ok(0)
        }
        Cmd::Decompose { n, sigma, nu } => {
            let rep = parse_rep(n, &sigma, &nu)?;
            let inputs = RepInputs {
                n,
                sigma: rep.sigma().to_string(),
                nu: rep.nu().to_string(),
            };
            let subs = decompose(&rep)?;
            let payload = DecomposePayload {
                count: subs.len(),
                subquotients: subs.iter().map(SubquotientDto::of).collect(),
            };
            emit(&render(&CommandResult::new("decompose", inputs, payload), pretty));
            Ok(0)
        }
        Cmd::Spectrum {
            n,
            sigma,
            nu,
            label,
            height,
        } => {
            let rep = parse_rep(n, &sigma, &nu)?;
            let label = label.parse::<SubqLabel>()?;
            let height = height.parse::<HalfInt>()?;
            let inputs = SpectrumInputs {
                n,
                sigma: rep.sigma().to_string(),
                nu: rep.nu().to_string(),
                label,
                height,
            };
            let sub = find_subquotient(decompose(&rep)?, label)?;
            let k_types = sub.spectrum().enumerate(height);
            let payload = SpectrumPayload {
                label: sub.label(),
                case: sub.case(),
                spectrum: SpectrumDto::of(sub.spectrum()),
                count: k_types.len(),
                k_types,
            };
            emit(&render(&CommandResult::new("spectrum", inputs, payload), pretty));
            Ok(0)
        }
        Cmd::Corners { n, lambda, index } => {
            let lambda = lambda.parse::<Weight>()?;
            let index = index.parse::<GhatIndex>()?;
            let inputs = CornersInputs {
                n,
                lambda: lambda.to_string(),
                index,
            };
            let family = ghat_family(n, &lambda)?;
            let class = family
                .iter()
                .find(|c| c.index() == index)
                .ok_or_else(|| Error::BadIndex(index.to_string()))?;
            let report = corner_report(class.canonical())?;
            let payload = CornersPayload {
                lambda,
                index,
                distinct_fundamental: report.distinct_fundamental(),
                corners: report,
                minimal_k_types: minimal_k_types(class.canonical()),
                unitary: class.is_unitary(),
                q: class_k_type(class)?,
            };
            emit(&render(&CommandResult::new("corners", inputs, payload), pretty));
            Ok(0)
        }
        Cmd::ClassifyLambda { n, lambda } => {
            let lambda = lambda.parse::<Weight>()?;
            let inputs = LambdaInputs {
                n,
                lambda: lambda.to_string(),
            };
            let class = lambda_class(n, &lambda)?;
            let payload = if class == LambdaClass::NotInLambda {
                ClassifyPayload {
                    lambda_class: class,
                    pairs: Vec::new(),
                    classes: Vec::new(),
                }
            } else {
                ClassifyPayload {
                    lambda_class: class,
                    pairs: pairs_for_lambda(n, &lambda)?,
                    classes: ghat_family(n, &lambda)?
                        .iter()
                        .map(class_dto)
                        .collect::<Result<Vec<_>>>()?,
                }
            };
            emit(&render(&CommandResult::new("classify-lambda", inputs, payload), pretty));
            Ok(0)
        }
        Cmd::EnumerateGhat0 { n, bound } => {
            let bound = bound.parse::<HalfInt>()?;
            let inputs = BoundInputs { n, bound };
            let classes = enumerate_ghat0(n, bound)?;
            let entries = classes
                .iter()
                .map(|class| {
                    let k_type = if n % 2 == 0 {
                        q_of_unitary_even(class)?
                    } else {
                        unitary_map_odd(class)?
                    };
                    Ok(Ghat0Entry {
                        lambda: class.lambda().clone(),
                        index: class.index(),
                        k_type,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let payload = Ghat0Payload {
                count: entries.len(),
                classes: entries,
            };
            emit(&render(&CommandResult::new("enumerate-ghat0", inputs, payload), pretty));
            Ok(0)
        }
        Cmd::Verify { theorem, n, bound } => {
            let bound = bound.map(|b| b.parse::<HalfInt>()).transpose()?;
            let inputs = VerifyInputs {
                theorem: theorem.clone(),
                n,
                bound,
            };
            let report = run_verify(&theorem, n, bound)?;
            let pass = report.pass;
            emit(&render(&CommandResult::new("verify", inputs, report), pretty));
            Ok(if pass { 0 } else { 1 })
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli.cmd, cli.pretty) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            emit(&render(&ErrorEnvelope::of(&err), cli.pretty));
            std::process::exit(2);
        }
    }
}
