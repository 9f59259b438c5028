//! Shared plumbing for the commands: field construction with the optional
//! constants-file override, descriptor parsing, and the analyze pipeline
//! (transform, classify, Condition A) that several commands start from.

use std::fs;

use bentsrg_core::bent::{
    classify_regularity, condition_a, parse_descriptor, walsh_transform, ConditionAReport, PFunc,
    WalshSpectrum,
};
use bentsrg_core::field::{make_field, make_field_from, FieldConstants, FieldCtx};
use bentsrg_core::pds::DsetKind;

use crate::report::FieldReport;

/// Environment variable naming an alternative field-constants file.
pub const CONSTANTS_ENV: &str = "BENTSRG_FIELD_CONSTANTS";

/// A usage-level failure; maps to exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<bentsrg_core::Error> for UsageError {
    fn from(e: bentsrg_core::Error) -> Self {
        UsageError(e.to_string())
    }
}

pub fn build_field(p: u64, n: u8, modulus: Option<&[u8]>) -> Result<FieldCtx, UsageError> {
    match std::env::var(CONSTANTS_ENV) {
        Ok(path) => {
            let text = fs::read_to_string(&path)
                .map_err(|e| UsageError(format!("{CONSTANTS_ENV}={path}: {e}")))?;
            let constants = FieldConstants::parse(&text)?;
            Ok(make_field_from(p, n, modulus, &constants)?)
        }
        Err(_) => Ok(make_field(p, n, modulus)?),
    }
}

pub fn parse_kinds(kinds: &[String]) -> Result<Vec<DsetKind>, UsageError> {
    if kinds.is_empty() {
        return Ok(DsetKind::ALL.to_vec());
    }
    kinds
        .iter()
        .map(|s| {
            DsetKind::parse(s).ok_or_else(|| {
                UsageError(format!("unknown kind `{s}` (use D, D_S, D_Sprime, D_N)"))
            })
        })
        .collect()
}

/// Everything the downstream commands need about one analyzed function.
pub struct Analysis {
    pub ctx: FieldCtx,
    pub function: PFunc,
    pub spectrum: WalshSpectrum,
    /// Present only for even n (classification needs an integer p^(n/2)).
    pub condition_a: Option<ConditionAReport>,
}

pub fn analyze(p: u64, n: u8, modulus: Option<&[u8]>, descriptor: &str) -> Result<Analysis, UsageError> {
    let ctx = build_field(p, n, modulus)?;
    let function = parse_descriptor(&ctx, descriptor)?;
    let spectrum = walsh_transform(&ctx, &function);
    let (spectrum, condition_a) = if n % 2 == 0 {
        let spectrum = classify_regularity(spectrum)
            .expect("even-degree classification cannot fail");
        let report = condition_a(&ctx, &function, &spectrum);
        (spectrum, Some(report))
    } else {
        (spectrum, None)
    };
    Ok(Analysis { ctx, function, spectrum, condition_a })
}

impl Analysis {
    pub fn field_report(&self) -> FieldReport {
        FieldReport {
            p: u64::from(self.ctx.p()),
            n: self.ctx.n(),
            modulus: self.ctx.modulus().to_vec(),
        }
    }

    pub fn regularity_label(&self) -> Option<&'static str> {
        use bentsrg_core::bent::Regularity::*;
        self.spectrum.regularity().map(|r| match r {
            Regular => "regular",
            WeaklyRegular => "weakly-regular",
            NonWeaklyRegular => "non-weakly-regular",
            NotBent => "not-bent",
        })
    }

    /// Filesystem-friendly tag for export names.
    pub fn file_stem(&self) -> String {
        self.function
            .name()
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
            .collect()
    }
}
