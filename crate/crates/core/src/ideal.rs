//! Determinantal ideals of permutations and partial ASMs, their
//! antidiagonal initial ideals, and initial ideals for diagonal orders.

use std::fmt;
use std::str::FromStr;

use crate::asm::PartialAsm;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::monomial::MonomialIdeal;
use crate::perm::CellSet;
use crate::poly::{antidiagonal_monomial, generic_minor, Polynomial, TermOrder};

/// A northwest rank condition: the `rank + 1` minors of the
/// `row x col` corner of the generic matrix vanish.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct EssentialBox {
    pub row: u32,
    pub col: u32,
    pub rank: u32,
}

/// Cells where both the row prefix sum and the column prefix sum vanish.
pub fn asm_diagram(a: &PartialAsm) -> CellSet {
    let (m, n) = (a.rows(), a.cols());
    let mut col_prefix = vec![0i32; n];
    let mut cells = Vec::new();
    for i in 1..=m {
        let mut row_prefix = 0i32;
        for j in 1..=n {
            row_prefix += a.get(i, j) as i32;
            col_prefix[j - 1] += a.get(i, j) as i32;
            if row_prefix == 0 && col_prefix[j - 1] == 0 {
                cells.push((i as u32, j as u32));
            }
        }
    }
    cells.into_iter().collect()
}

/// Southeast corners of the diagram, with their rank bounds, row-major.
pub fn essential_boxes(a: &PartialAsm) -> Vec<EssentialBox> {
    let rk = a.rank_table();
    asm_diagram(a)
        .southeast_corners()
        .iter()
        .map(|(i, j)| EssentialBox {
            row: i,
            col: j,
            rank: rk.get(i as usize, j as usize),
        })
        .collect()
}

/// Every cell with its rank; generates the same ideal as the essential boxes.
pub fn all_boxes(a: &PartialAsm) -> Vec<EssentialBox> {
    let rk = a.rank_table();
    let mut out = Vec::new();
    for i in 1..=a.rows() {
        for j in 1..=a.cols() {
            out.push(EssentialBox {
                row: i as u32,
                col: j as u32,
                rank: rk.get(i, j),
            });
        }
    }
    out
}

fn subsets(n: u32, k: usize) -> Vec<Vec<u32>> {
    fn go(start: u32, n: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            if (n - v + 1) as usize + cur.len() < k {
                break;
            }
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Row and column index sets of the minors a box contributes.
fn box_minors(b: &EssentialBox) -> Vec<(Vec<u32>, Vec<u32>)> {
    let k = b.rank as usize + 1;
    if k > b.row.min(b.col) as usize {
        return Vec::new();
    }
    let rows = subsets(b.row, k);
    let cols = subsets(b.col, k);
    let mut out = Vec::with_capacity(rows.len() * cols.len());
    for r in &rows {
        for c in &cols {
            out.push((r.clone(), c.clone()));
        }
    }
    out
}

pub fn generators_of_boxes(boxes: &[EssentialBox]) -> Vec<Polynomial> {
    boxes
        .iter()
        .flat_map(box_minors)
        .map(|(r, c)| generic_minor(&r, &c))
        .collect()
}

/// Minors of the essential boxes: boxes row-major, minors ordered by
/// row set and then column set.
pub fn fulton_generators(a: &PartialAsm) -> Vec<Polynomial> {
    generators_of_boxes(&essential_boxes(a))
}

/// The ASM ideal with the matrix and its rank table attached.
pub fn schubert_ideal(a: &PartialAsm) -> Ideal {
    Ideal::new(fulton_generators(a), a.rows(), a.cols())
        .expect("minors stay inside the grid")
        .with_asm(a.clone())
}

/// Generated by the antidiagonal terms of the Fulton generators.
pub fn antidiagonal_initial(a: &PartialAsm) -> MonomialIdeal {
    let gens = essential_boxes(a)
        .iter()
        .flat_map(box_minors)
        .map(|(r, c)| antidiagonal_monomial(&r, &c))
        .collect();
    MonomialIdeal::new(gens, a.rows(), a.cols()).expect("monomials stay inside the grid")
}

/// Length for permutation matrices, codimension of the antidiagonal
/// initial ideal otherwise.
pub fn codimension(a: &PartialAsm) -> Result<usize> {
    if let Some(w) = a.to_permutation() {
        return Ok(w.length());
    }
    antidiagonal_initial(a).codim()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagonalOrder {
    /// Lex with the southeast corner largest.
    LexSE,
    /// Lex with the northwest corner largest.
    LexNW,
    /// Graded reverse lex penalising the southwest corner most.
    RevLex,
}

impl DiagonalOrder {
    pub fn term_order(self, m: usize, n: usize) -> TermOrder {
        match self {
            DiagonalOrder::LexSE => TermOrder::diag_lex_se(m, n),
            DiagonalOrder::LexNW => TermOrder::diag_lex_nw(m, n),
            DiagonalOrder::RevLex => TermOrder::diag_revlex(m, n),
        }
    }
}

impl FromStr for DiagonalOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "lexse" | "se" => Ok(DiagonalOrder::LexSE),
            "lexnw" | "nw" => Ok(DiagonalOrder::LexNW),
            "revlex" => Ok(DiagonalOrder::RevLex),
            _ => Err(Error::Parse(format!(
                "unknown order '{s}' (expected lex-se, lex-nw or revlex)"
            ))),
        }
    }
}

impl fmt::Display for DiagonalOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiagonalOrder::LexSE => "lex-se",
            DiagonalOrder::LexNW => "lex-nw",
            DiagonalOrder::RevLex => "revlex",
        })
    }
}

/// Largest matrix size accepted by `diagonal_initial`.
pub const MAX_DIAGONAL_SIZE: usize = 6;

/// Initial ideal of the ASM ideal under one of the diagonal orders.
pub fn diagonal_initial(a: &PartialAsm, order: DiagonalOrder, budget: usize) -> Result<MonomialIdeal> {
    let size = a.rows().max(a.cols());
    if size > MAX_DIAGONAL_SIZE {
        return Err(Error::SizeGuard {
            what: "diagonal initial ideal size",
            limit: MAX_DIAGONAL_SIZE,
            got: size,
        });
    }
    schubert_ideal(a).initial_ideal(&order.term_order(a.rows(), a.cols()), budget)
}
