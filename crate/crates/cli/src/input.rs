//! Reading permutations, matrices, integer grids and ideals from
//! command-line arguments or files.

use std::path::Path;

use schubert::asm::{parse_int_grid, PartialAsm};
use schubert::error::{Error, Result};
use schubert::groebner::Ideal;
use schubert::perm::Permutation;
use schubert::poly::{Polynomial, Var};

/// Inline text, or the contents of the file when `arg` names one.
fn text_of(arg: &str) -> Result<String> {
    let path = Path::new(arg);
    if path.is_file() {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Invalid(format!("cannot read {arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

pub fn permutation(arg: &str) -> Result<Permutation> {
    text_of(arg)?.trim().parse()
}

/// A matrix, or the permutation matrix of a comma list.
pub fn matrix(arg: &str) -> Result<PartialAsm> {
    let text = text_of(arg)?;
    let looks_like_grid = text.contains(';') || text.trim().contains(char::is_whitespace);
    if !looks_like_grid {
        if let Ok(w) = text.trim().parse::<Permutation>() {
            return Ok(w.to_matrix());
        }
    }
    PartialAsm::parse(&text)
}

pub fn grid(arg: &str) -> Result<Vec<Vec<u32>>> {
    parse_int_grid(&text_of(arg)?)?
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| {
                    u32::try_from(v)
                        .map_err(|_| Error::InvalidRankTable(format!("negative entry {v}")))
                })
                .collect()
        })
        .collect()
}

/// `MxN`, e.g. `4x4`.
pub fn size(arg: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("size '{arg}' is not of the form MxN"));
    let (m, n) = arg.split_once(['x', 'X']).ok_or_else(bad)?;
    Ok((m.trim().parse().map_err(|_| bad())?, n.trim().parse().map_err(|_| bad())?))
}

/// Generators separated by `;`. Without an explicit size the grid is the
/// smallest one holding every variable.
pub fn ideal_from_generators(text: &str, size_arg: Option<&str>) -> Result<Ideal> {
    let gens = text_of(text)?
        .split([';', '\n'])
        .map(str::trim)
        .filter(|g| !g.is_empty())
        .map(str::parse)
        .collect::<Result<Vec<Polynomial>>>()?;
    let (rows, cols) = match size_arg {
        Some(s) => size(s)?,
        None => gens
            .iter()
            .flat_map(Polynomial::variables)
            .fold((0, 0), |(m, n), v| match v {
                Var::Z(i, j) => (m.max(i as usize), n.max(j as usize)),
                _ => (m, n),
            }),
    };
    Ideal::new(gens, rows, cols)
}
