use std::fs;
use std::path::Path;

use biderlab::algebra::{build_algebra, Algebra, Element, Preset};
use biderlab::format;
use biderlab::linalg::parse_rational;
use biderlab::poly::{MultilinearPolynomial, NamedPoly};
use biderlab::report::InputDigest;
use sha2::{Digest, Sha256};

use crate::commands::CliError;

pub fn digest(label: &str, bytes: &[u8]) -> InputDigest {
    InputDigest {
        path: label.to_string(),
        sha256: hex::encode(Sha256::digest(bytes)),
    }
}

pub fn read(path: &Path) -> Result<(String, InputDigest), CliError> {
    let text =
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let d = digest(&path.display().to_string(), text.as_bytes());
    Ok((text, d))
}

/// Loads an algebra file or a `preset:` spec. With `checked = false` only the
/// shape of the table is validated.
pub fn algebra(source: &str, checked: bool) -> Result<(Algebra, InputDigest), CliError> {
    if let Some(spec) = source.strip_prefix("preset:") {
        let alg = build_algebra(&spec.parse::<Preset>()?)?;
        return Ok((alg, digest(source, source.as_bytes())));
    }
    let (text, d) = read(Path::new(source))?;
    let alg = if checked {
        format::parse_algebra(&text)?
    } else {
        format::parse_algebra_unchecked(&text)?
    };
    Ok((alg, d))
}

pub fn polynomial(source: &str) -> Result<(MultilinearPolynomial, InputDigest), CliError> {
    if let Ok(name) = source.parse::<NamedPoly>() {
        return Ok((
            MultilinearPolynomial::named(name),
            digest(source, source.as_bytes()),
        ));
    }
    let (text, d) = read(Path::new(source))?;
    Ok((format::parse_polynomial(&text)?, d))
}

pub fn coordinates(text: &str, dim: usize) -> Result<Element, CliError> {
    let coords = text
        .split(',')
        .map(|s| parse_rational(s.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    if coords.len() != dim {
        return Err(CliError::Usage(format!(
            "idempotent has {} coordinates, algebra has dimension {dim}",
            coords.len()
        )));
    }
    Ok(Element(coords))
}
