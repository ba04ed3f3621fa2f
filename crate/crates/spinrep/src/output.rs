//! JSON envelopes and payload shapes for the CLI.
//!
//! Every command prints exactly one JSON document built from the typed
//! structs here; field order is fixed by struct declaration order and all
//! scalars render canonically ("a" or "a/2"), so identical inputs produce
//! byte-identical output.

use serde::Serialize;

use crate::halfint::{HalfInt, ParityClass, Weight};
use crate::subquotient::{CaseTag, SpectrumConstraint, SubqLabel, Subquotient};
use crate::Error;

pub const SCHEMA_VERSION: &str = "1";

/// Envelope for a successful command.
#[derive(Serialize)]
pub struct CommandResult<I: Serialize, P: Serialize> {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub inputs: I,
    pub payload: P,
}

impl<I: Serialize, P: Serialize> CommandResult<I, P> {
    pub fn new(command: &'static str, inputs: I, payload: P) -> CommandResult<I, P> {
        CommandResult {
            schema_version: SCHEMA_VERSION,
            command,
            inputs,
            payload,
        }
    }
}

#[derive(Serialize)]
pub struct ErrorBody {
    pub code: &'static str,
    pub message: String,
}

/// Envelope printed on any domain or parse failure, before exiting 2.
#[derive(Serialize)]
pub struct ErrorEnvelope {
    pub schema_version: &'static str,
    pub error: ErrorBody,
}

impl ErrorEnvelope {
    pub fn of(err: &Error) -> ErrorEnvelope {
        ErrorEnvelope {
            schema_version: SCHEMA_VERSION,
            error: ErrorBody {
                code: err.code(),
                message: err.to_string(),
            },
        }
    }
}

/// One line by default, indented with --pretty.
pub fn render<T: Serialize>(value: &T, pretty: bool) -> String {
    let out = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    };
    out.expect("command output serializes")
}

#[derive(Serialize)]
pub struct RangeDto {
    pub min: HalfInt,
    pub max: Option<HalfInt>,
}

/// A K-spectrum as the CLI reports it: parity coset plus coordinate bounds.
#[derive(Serialize)]
pub struct SpectrumDto {
    pub parity: ParityClass,
    pub finite: bool,
    pub ranges: Vec<RangeDto>,
}

impl SpectrumDto {
    pub fn of(spec: &SpectrumConstraint) -> SpectrumDto {
        SpectrumDto {
            parity: spec.parity(),
            finite: spec.is_finite(),
            ranges: spec
                .ranges()
                .iter()
                .map(|r| RangeDto { min: r.lo, max: r.hi })
                .collect(),
        }
    }
}

/// Original parameters when decomposition normalized them away.
#[derive(Serialize)]
pub struct NormalizedFrom {
    pub sigma: String,
    pub nu: String,
}

/// One irreducible subquotient with its parameters and flags.
#[derive(Serialize)]
pub struct SubquotientDto {
    pub label: SubqLabel,
    pub case: CaseTag,
    pub sigma: String,
    pub nu: HalfInt,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normalized_from: Option<NormalizedFrom>,
    pub spectrum: SpectrumDto,
    pub unitary: bool,
    pub finite_dimensional: bool,
    pub infinitesimal_character: Weight,
}

impl SubquotientDto {
    pub fn of(sub: &Subquotient) -> SubquotientDto {
        let parent = sub.parent();
        SubquotientDto {
            label: sub.label(),
            case: sub.case(),
            sigma: sub.sigma().to_string(),
            nu: sub.nu(),
            normalized_from: sub.normalized().then(|| NormalizedFrom {
                sigma: parent.sigma().to_string(),
                nu: parent.nu().to_string(),
            }),
            spectrum: SpectrumDto::of(sub.spectrum()),
            unitary: sub.is_unitary(),
            finite_dimensional: sub.is_finite_dimensional(),
            infinitesimal_character: sub
                .dominant_infchar()
                .expect("reducible parameters determine an infinitesimal character")
                .lambda,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elementary::{ElementaryRep, Nu};
    use crate::subquotient::decompose;

    #[test]
    fn error_envelope_carries_code() {
        let rendered = render(&ErrorEnvelope::of(&Error::UnsupportedN(3)), false);
        assert!(rendered.contains("\"code\":\"unsupported_n\""));
        assert!(rendered.starts_with("{\"schema_version\":\"1\",\"error\""));
    }

    #[test]
    fn subquotient_dto_round_trip_fields() {
        let rep = ElementaryRep::new(
            crate::duals::MType::new(4, crate::wt![0]).unwrap(),
            Nu::from_half(HalfInt::from_twice(3)),
        );
        let subs = decompose(&rep).unwrap();
        let dto = SubquotientDto::of(&subs[0]);
        let text = render(&dto, false);
        assert!(text.contains("\"case\":\"Even_c\""));
        assert!(text.contains("\"normalized_from\"") == subs[0].normalized());
    }

    #[test]
    fn pretty_toggle_changes_layout_not_content() {
        let value = CommandResult::new("demo", (), 7u8);
        let flat = render(&value, false);
        let pretty = render(&value, true);
        assert_ne!(flat, pretty);
        let a: serde_json::Value = serde_json::from_str(&flat).unwrap();
        let b: serde_json::Value = serde_json::from_str(&pretty).unwrap();
        assert_eq!(a, b);
    }
}
