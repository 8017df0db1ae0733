//! Matrix Schubert components of ASM ideals, recognition of ASM ideals,
//! and sums, intersections and Cohen-Macaulayness at the ideal level.

use crate::asm::{common_square, entrywise_extreme, asm_sum, Extreme, PartialAsm, RankTable};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::ideal::{antidiagonal_initial, schubert_ideal};
use crate::monomial::MonomialIdeal;
use crate::perm::{demazure_product, Permutation};
use crate::poly::Var;

/// Anything whose components can be read off from an antidiagonal
/// initial ideal.
pub enum Decomposable<'a> {
    Monomial(&'a MonomialIdeal),
    Ideal(&'a Ideal),
    Asm(&'a PartialAsm),
}

impl<'a> From<&'a MonomialIdeal> for Decomposable<'a> {
    fn from(m: &'a MonomialIdeal) -> Self {
        Decomposable::Monomial(m)
    }
}

impl<'a> From<&'a Ideal> for Decomposable<'a> {
    fn from(i: &'a Ideal) -> Self {
        Decomposable::Ideal(i)
    }
}

impl<'a> From<&'a PartialAsm> for Decomposable<'a> {
    fn from(a: &'a PartialAsm) -> Self {
        Decomposable::Asm(a)
    }
}

/// Permutations read from the minimal primes, in the order of the primes
/// with repeats dropped.
pub fn schubert_decompose<'a>(input: impl Into<Decomposable<'a>>, budget: usize) -> Result<Vec<Permutation>> {
    match input.into() {
        Decomposable::Monomial(m) => decompose_monomial(m),
        Decomposable::Ideal(i) => {
            let init = i.initial_ideal(&i.antidiagonal_order(), budget)?;
            decompose_monomial(&init)
        }
        Decomposable::Asm(a) => decompose_monomial(&antidiagonal_initial(a)),
    }
}

fn decompose_monomial(m: &MonomialIdeal) -> Result<Vec<Permutation>> {
    let ambient = m.rows().max(m.cols());
    let mut out: Vec<Permutation> = Vec::new();
    for prime in m.minimal_primes()? {
        let w = prime_permutation(&prime, ambient)?;
        if !out.contains(&w) {
            out.push(w);
        }
    }
    Ok(out)
}

/// Demazure product of the word read from a prime's cells row by row,
/// right to left within a row.
pub fn prime_permutation(prime: &[Var], ambient: usize) -> Result<Permutation> {
    let mut cells = prime
        .iter()
        .map(|v| match *v {
            Var::Z(i, j) => Ok((i as usize, j as usize)),
            other => Err(Error::Internal(format!("non-matrix variable {other} in a prime"))),
        })
        .collect::<Result<Vec<_>>>()?;
    cells.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let word: Vec<usize> = cells.iter().map(|&(i, j)| i + j - 1).collect();
    Ok(demazure_product(&word, ambient))
}

pub fn perm_set_of_asm(a: &PartialAsm) -> Result<Vec<Permutation>> {
    decompose_monomial(&antidiagonal_initial(a))
}

/// The ASM whose rank table is the entrywise maximum over the given
/// permutations, restricted to a `rows x cols` corner.
pub fn max_asm(perms: &[Permutation], rows: usize, cols: usize) -> Result<PartialAsm> {
    let n = perms
        .iter()
        .map(Permutation::len)
        .max()
        .ok_or_else(|| Error::Invalid("empty list of permutations".into()))?
        .max(rows)
        .max(cols);
    let tables: Vec<RankTable> = perms.iter().map(|w| w.padded(n).rank_table()).collect();
    let raw = entrywise_extreme(&tables, Extreme::Max)?;
    let normalized = RankTable::from_matrix(&raw.to_rows())?;
    Ok(normalized.to_asm()?.corner(rows, cols))
}

/// Whether `ideal` equals an ASM ideal; on success the ASM is attached.
pub fn is_asm_ideal(ideal: &mut Ideal, budget: usize) -> Result<bool> {
    let perms = schubert_decompose(&*ideal, budget)?;
    let candidate = max_asm(&perms, ideal.rows(), ideal.cols())?;
    let found = ideal.equals(&schubert_ideal(&candidate), budget)?;
    if found {
        ideal.attach_asm(candidate);
    }
    Ok(found)
}

pub fn get_asm(ideal: &Ideal) -> Result<PartialAsm> {
    ideal.asm().cloned()
}

pub fn bruhat_minimal(perms: &[Permutation]) -> Vec<Permutation> {
    let n = perms.iter().map(Permutation::len).max().unwrap_or(0);
    let padded: Vec<Permutation> = perms.iter().map(|w| w.padded(n)).collect();
    let mut out: Vec<Permutation> = Vec::new();
    for (k, w) in padded.iter().enumerate() {
        let dominated = padded
            .iter()
            .enumerate()
            .any(|(l, v)| l != k && v != w && v.bruhat_leq(w));
        if !dominated && !out.contains(w) {
            out.push(w.clone());
        }
    }
    out
}

/// Whether the union of the matrix Schubert varieties of `perms` is an
/// ASM variety, decided on rank tables alone.
pub fn is_asm_union(perms: &[Permutation]) -> Result<bool> {
    if perms.is_empty() {
        return Err(Error::Invalid("empty list of permutations".into()));
    }
    let minimal = bruhat_minimal(perms);
    let n = minimal[0].len();
    let a = max_asm(&minimal, n, n)?;
    let mut found: Vec<Permutation> = perm_set_of_asm(&a)?.iter().map(|w| w.padded(n)).collect();
    let mut expected = minimal;
    found.sort();
    expected.sort();
    Ok(found == expected)
}

/// The ASM ideal of the sum, with its matrix cached.
pub fn schubert_add(list: &[PartialAsm]) -> Result<Ideal> {
    Ok(schubert_ideal(&asm_sum(list)?))
}

/// Intersection of the ASM ideals, after bringing all matrices to a
/// common square size.
pub fn schubert_intersect(list: &[PartialAsm], budget: usize) -> Result<Ideal> {
    let squares = common_square(list);
    let mut iter = squares.iter();
    let first = iter
        .next()
        .ok_or_else(|| Error::Invalid("empty list of ASMs".into()))?;
    let mut acc = schubert_ideal(first);
    for a in iter {
        acc = acc.intersect(&schubert_ideal(a), budget)?;
    }
    Ok(acc)
}

/// Cohen-Macaulayness of the quotient by the ASM ideal, decided on the
/// antidiagonal initial ideal.
pub fn is_schubert_cm(a: &PartialAsm) -> Result<bool> {
    if a.to_permutation().is_some() {
        return Ok(true);
    }
    antidiagonal_initial(a).is_cohen_macaulay()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asm::perm_set_brute_force;
    use crate::groebner::DEFAULT_BUDGET;

    fn w(s: &str) -> Permutation {
        Permutation::from_digits(s).unwrap()
    }

    fn m(s: &str) -> PartialAsm {
        PartialAsm::parse(s).unwrap()
    }

    #[test]
    fn three_by_three_example() {
        let a = m("0 1 0; 1 -1 1; 0 1 0");
        assert_eq!(perm_set_of_asm(&a).unwrap(), vec![w("312"), w("231")]);
        let i = schubert_ideal(&a);
        assert_eq!(schubert_decompose(&i, DEFAULT_BUDGET).unwrap(), vec![w("312"), w("231")]);
    }

    #[test]
    fn permutation_ideals_are_prime() {
        for u in Permutation::all(4) {
            let i = schubert_ideal(&u.to_matrix());
            assert_eq!(schubert_decompose(&i, DEFAULT_BUDGET).unwrap(), vec![u.clone()]);
            assert_eq!(perm_set_of_asm(&u.to_matrix()).unwrap(), vec![u.clone()]);
        }
    }

    #[test]
    fn intersection_recognised() {
        let mut i = schubert_intersect(&[w("3412").to_matrix(), w("3241").to_matrix()], DEFAULT_BUDGET).unwrap();
        assert!(matches!(get_asm(&i), Err(Error::NoAsmAttached)));
        let mut perms = schubert_decompose(&i, DEFAULT_BUDGET).unwrap();
        perms.sort();
        assert_eq!(perms, vec![w("3241"), w("3412")]);
        assert!(is_asm_ideal(&mut i, DEFAULT_BUDGET).unwrap());
        assert_eq!(get_asm(&i).unwrap(), m("0 0 1 0; 0 1 0 0; 1 -1 0 1; 0 1 0 0"));
        assert!(is_schubert_cm(&get_asm(&i).unwrap()).unwrap());
        assert!(is_asm_union(&[w("3412"), w("3241")]).unwrap());
    }

    #[test]
    fn trivial_recognition() {
        let mut i = Ideal::new(schubert_ideal(&w("2143").to_matrix()).generators().to_vec(), 4, 4).unwrap();
        assert!(is_asm_ideal(&mut i, DEFAULT_BUDGET).unwrap());
        assert_eq!(get_asm(&i).unwrap(), w("2143").to_matrix());
        assert!(is_asm_union(&[w("2143")]).unwrap());
        let a = m("0 1 0; 1 -1 1; 0 1 0");
        assert_eq!(get_asm(&schubert_ideal(&a)).unwrap(), a);
    }

    #[test]
    fn add_and_intersect() {
        let a = m("0 1 0; 1 -1 1; 0 1 0");
        let id = PartialAsm::identity(3);
        let sum = schubert_add(&[a.clone(), id]).unwrap();
        assert!(sum.equals(&schubert_ideal(&a), DEFAULT_BUDGET).unwrap());
        let twice = schubert_intersect(&[a.clone(), a.clone()], DEFAULT_BUDGET).unwrap();
        assert!(twice.equals(&schubert_ideal(&a), DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn non_cm_five_by_five() {
        let b = m("0 0 1 0 0; 0 0 0 1 0; 1 0 -1 0 1; 0 1 0 0 0; 0 0 1 0 0");
        assert!(!is_schubert_cm(&b).unwrap());
        assert!(is_schubert_cm(&w("2143").to_matrix()).unwrap());
    }

    #[test]
    fn brute_force_agrees_on_small_asms() {
        for n in 1..=4 {
            for a in crate::asm::enumerate_asms(n).unwrap() {
                let mut ours: Vec<Permutation> =
                    perm_set_of_asm(&a).unwrap().iter().map(|u| u.padded(n)).collect();
                ours.sort();
                assert_eq!(ours, perm_set_brute_force(&a).unwrap(), "{}", a.to_text());
            }
        }
    }
}
