//! Schubert, double Schubert and Grothendieck polynomials, the raj
//! statistic, and Castelnuovo-Mumford regularity.

use std::collections::HashMap;
use std::str::FromStr;

use crate::asm::PartialAsm;
use crate::error::{Error, Result};
use crate::ideal::antidiagonal_initial;
use crate::monomial::DEFAULT_LATTICE_LIMIT;
use crate::perm::Permutation;
use crate::pipedream::pipe_dreams_nonreduced;
use crate::poly::{Coeff, Monomial, Polynomial, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchubertAlgorithm {
    DividedDifference,
    Transition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrothendieckAlgorithm {
    DividedDifference,
    PipeDream,
}

impl FromStr for SchubertAlgorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "divideddifference" | "dd" => Ok(SchubertAlgorithm::DividedDifference),
            "transition" => Ok(SchubertAlgorithm::Transition),
            _ => Err(Error::Parse(format!("unknown Schubert algorithm '{s}'"))),
        }
    }
}

impl FromStr for GrothendieckAlgorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "divideddifference" | "dd" => Ok(GrothendieckAlgorithm::DividedDifference),
            "pipedream" => Ok(GrothendieckAlgorithm::PipeDream),
            _ => Err(Error::Parse(format!("unknown Grothendieck algorithm '{s}'"))),
        }
    }
}

fn staircase(n: usize) -> Polynomial {
    Polynomial::monomial(Monomial::from_pairs(
        (1..n as u32).map(|i| (Var::X(i), n as u32 - i)),
    ))
}

fn double_staircase(n: usize) -> Polynomial {
    let mut p = Polynomial::one();
    for i in 1..n as u32 {
        for j in 1..=(n as u32 - i) {
            p = &p * &(&Polynomial::x(i) - &Polynomial::y(j));
        }
    }
    p
}

/// Walk up from `w` to the longest element through the largest ascent at
/// each step, then apply `op` back down.
fn descend(w: &Permutation, top: Polynomial, op: impl Fn(&Polynomial, u32) -> Polynomial) -> Polynomial {
    let n = w.len();
    let mut path = Vec::new();
    let mut u = w.clone();
    while let Some(i) = (1..n).rev().find(|&i| u.at(i) < u.at(i + 1)) {
        path.push(i);
        u = u.times_simple(i);
    }
    debug_assert_eq!(u, Permutation::longest(n));
    let mut p = top;
    for &i in path.iter().rev() {
        p = op(&p, i as u32);
    }
    p
}

pub fn schubert_polynomial(w: &Permutation, algorithm: SchubertAlgorithm) -> Polynomial {
    match algorithm {
        SchubertAlgorithm::DividedDifference => {
            descend(w, staircase(w.len()), Polynomial::divided_difference)
        }
        SchubertAlgorithm::Transition => {
            let mut memo = HashMap::new();
            transition(&w.trimmed(), &mut memo)
        }
    }
}

fn transition(w: &Permutation, memo: &mut HashMap<Permutation, Polynomial>) -> Polynomial {
    if w.is_identity() {
        return Polynomial::one();
    }
    if let Some(p) = memo.get(w) {
        return p.clone();
    }
    let n = w.len();
    let r = *w.descents().last().expect("non-identity has a descent");
    let s = (r + 1..=n).rev().find(|&s| w.at(s) < w.at(r)).unwrap();
    let v = w.times_transposition(r, s);
    let len = w.length();
    let mut p = &Polynomial::x(r as u32) * &transition(&v.trimmed(), memo);
    for q in 1..r {
        let u = v.times_transposition(q, r);
        if u.length() == len {
            p = &p + &transition(&u.trimmed(), memo);
        }
    }
    memo.insert(w.clone(), p.clone());
    p
}

pub fn double_schubert_polynomial(w: &Permutation) -> Polynomial {
    descend(w, double_staircase(w.len()), Polynomial::divided_difference)
}

pub fn grothendieck_polynomial(w: &Permutation, algorithm: GrothendieckAlgorithm) -> Result<Polynomial> {
    match algorithm {
        GrothendieckAlgorithm::DividedDifference => Ok(descend(
            w,
            staircase(w.len()),
            Polynomial::isobaric_divided_difference,
        )),
        GrothendieckAlgorithm::PipeDream => {
            let len = w.length();
            let mut p = Polynomial::zero();
            for d in pipe_dreams_nonreduced(w)? {
                let sign = if (d.crosses().len() - len) % 2 == 0 { 1 } else { -1 };
                p = &p + &Polynomial::monomial(d.x_monomial()).scale(&Coeff::from_integer(sign.into()));
            }
            Ok(p)
        }
    }
}

/// Per position, the suffix length minus the longest increasing
/// subsequence of the suffix that starts at that position.
pub fn raj_code(w: &Permutation) -> Vec<usize> {
    let v = w.one_line();
    let n = v.len();
    let mut longest = vec![1usize; n];
    for i in (0..n).rev() {
        for j in i + 1..n {
            if v[j] > v[i] {
                longest[i] = longest[i].max(longest[j] + 1);
            }
        }
    }
    (0..n).map(|i| (n - i) - longest[i]).collect()
}

pub fn raj_index(w: &Permutation) -> usize {
    raj_code(w).iter().sum()
}

/// Regularity of the quotient by the determinantal ideal of `w`.
pub fn permutation_regularity(w: &Permutation) -> usize {
    raj_index(w) - w.length()
}

/// Regularity of the quotient by an ASM ideal, through its squarefree
/// antidiagonal initial ideal unless the matrix is a permutation.
pub fn asm_regularity(a: &PartialAsm) -> Result<usize> {
    asm_regularity_with_limit(a, DEFAULT_LATTICE_LIMIT)
}

pub fn asm_regularity_with_limit(a: &PartialAsm, limit: usize) -> Result<usize> {
    if let Some(w) = a.to_permutation() {
        return Ok(permutation_regularity(&w));
    }
    Ok(antidiagonal_initial(a).betti_with_limit(limit)?.regularity())
}
