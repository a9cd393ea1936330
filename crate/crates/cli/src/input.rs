// SPDX-License-Identifier: Apache-2.0

//! Command-line inputs: algebras, scalars, metrics and sign patterns.

use std::fs;

use einkahler_core::catalog;
use einkahler_core::exactla::{self, Matrix, Scalar};
use einkahler_core::notation::parse_algebra;
use einkahler_core::LieAlgebra;

use crate::CliError;

/// Catalog key, `@path` to a UTF-8 notation file, or inline structure equations.
pub fn algebra(arg: &str) -> Result<LieAlgebra, CliError> {
    if let Some(path) = arg.strip_prefix('@') {
        let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
        let text: String = text
            .lines()
            .filter(|l| !l.trim_start().starts_with('#'))
            .collect::<Vec<_>>()
            .join("");
        return Ok(parse_algebra(&text)?);
    }
    if let Some(g) = catalog::lookup(arg) {
        return Ok(g);
    }
    if !arg.contains("e^") && !arg.contains(',') && arg.trim() != "0" {
        return Err(CliError::Input(format!("unknown catalog key '{arg}'")));
    }
    Ok(parse_algebra(arg)?)
}

pub fn scalar(text: &str) -> Result<Scalar, CliError> {
    exactla::parse_scalar(text.trim())
        .ok_or_else(|| CliError::Input(format!("not a rational number: '{text}'")))
}

/// Comma-separated rationals; the empty string is the empty list.
pub fn scalars(text: &str) -> Result<Vec<Scalar>, CliError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(scalar).collect()
}

/// `a,b,c` (diagonal) or `a,b;c,d` (rows).
pub fn metric(text: &str, dim: usize) -> Result<Matrix, CliError> {
    let m = if text.contains(';') {
        let rows: Vec<Vec<Scalar>> = text.split(';').map(scalars).collect::<Result<_, _>>()?;
        if rows.iter().any(|r| r.len() != rows.len()) {
            return Err(CliError::Input(
                "metric rows must form a square matrix".into(),
            ));
        }
        Matrix::from_rows(rows)
    } else {
        Matrix::diagonal(&scalars(text)?)
    };
    if m.rows() != dim {
        return Err(CliError::Input(format!(
            "metric has size {}, algebra has dimension {dim}",
            m.rows()
        )));
    }
    Ok(m)
}

/// `all` or a pattern such as `+-+` / `1,-1,1`.
pub fn signs(text: &str) -> Result<Option<Vec<i8>>, CliError> {
    let text = text.trim();
    if text == "all" {
        return Ok(None);
    }
    let parsed: Option<Vec<i8>> = if text.contains(',') {
        text.split(',')
            .map(|t| match t.trim() {
                "1" | "+1" | "+" => Some(1),
                "-1" | "-" => Some(-1),
                _ => None,
            })
            .collect()
    } else {
        text.chars()
            .map(|c| match c {
                '+' => Some(1),
                '-' => Some(-1),
                _ => None,
            })
            .collect()
    };
    parsed
        .map(Some)
        .ok_or_else(|| CliError::Input(format!("bad sign pattern '{text}'")))
}
