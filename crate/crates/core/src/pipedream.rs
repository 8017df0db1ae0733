//! Pipe dreams on the staircase, ladder-move enumeration, and the
//! facets of the associated subword complexes.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{demazure_product, Permutation};
use crate::poly::{Monomial, Polynomial, Var};

/// Largest size for reduced pipe dream enumeration.
pub const MAX_REDUCED_SIZE: usize = 8;
/// Largest size for enumeration of non-reduced pipe dreams.
pub const MAX_NONREDUCED_SIZE: usize = 6;

/// Crosses in the staircase `i + j <= n` of an `n x n` grid.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct PipeDream {
    size: usize,
    crosses: BTreeSet<(u32, u32)>,
}

impl PipeDream {
    pub fn new(size: usize, crosses: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let crosses: BTreeSet<(u32, u32)> = crosses.into_iter().collect();
        for &(i, j) in &crosses {
            if i == 0 || j == 0 || (i + j) as usize > size {
                return Err(Error::InvalidPipeDream(format!(
                    "cross ({i},{j}) lies outside the staircase of size {size}"
                )));
            }
        }
        Ok(PipeDream { size, crosses })
    }

    pub fn empty(size: usize) -> Self {
        PipeDream {
            size,
            crosses: BTreeSet::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn crosses(&self) -> &BTreeSet<(u32, u32)> {
        &self.crosses
    }

    pub fn has_cross(&self, i: u32, j: u32) -> bool {
        self.crosses.contains(&(i, j))
    }

    /// Rows top to bottom, right to left within a row; a cross at
    /// `(i, j)` reads as the letter `i + j - 1`.
    pub fn reading_word(&self) -> Vec<usize> {
        let mut cells: Vec<(u32, u32)> = self.crosses.iter().copied().collect();
        cells.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        cells.iter().map(|&(i, j)| (i + j - 1) as usize).collect()
    }

    pub fn permutation(&self) -> Permutation {
        demazure_product(&self.reading_word(), self.size)
    }

    pub fn is_reduced(&self) -> bool {
        self.permutation().length() == self.crosses.len()
    }

    /// The bottom dream of `w`: row `i` holds crosses in the first
    /// `c_i` columns, `c` the Lehmer code.
    pub fn bottom(w: &Permutation) -> PipeDream {
        let code = w.lehmer_code();
        let crosses = code
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| (1..=c as u32).map(move |j| (i as u32 + 1, j)));
        PipeDream::new(w.len().max(1), crosses).expect("Lehmer code fits the staircase")
    }

    /// Moves available from this dream.
    pub fn ladder_moves(&self) -> Vec<PipeDream> {
        let mut out = Vec::new();
        for &(i, j) in &self.crosses {
            if self.has_cross(i, j + 1) {
                continue;
            }
            let mut r = i - 1;
            while r >= 1 && self.has_cross(r, j) && self.has_cross(r, j + 1) {
                r -= 1;
            }
            if r >= 1 && !self.has_cross(r, j) && !self.has_cross(r, j + 1) {
                let mut crosses = self.crosses.clone();
                crosses.remove(&(i, j));
                crosses.insert((r, j + 1));
                out.push(PipeDream {
                    size: self.size,
                    crosses,
                });
            }
        }
        out
    }

    /// The monomial with one factor `x[i]` per cross in row `i`.
    pub fn x_monomial(&self) -> Monomial {
        Monomial::from_vars(self.crosses.iter().map(|&(i, _)| Var::X(i)))
    }

    /// Complement of the crosses within the full grid.
    pub fn facet(&self) -> Vec<(u32, u32)> {
        let n = self.size as u32;
        let mut out = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if !self.has_cross(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `n` lines of `+` (cross) and `/` (elbow).
    pub fn render(&self) -> String {
        let n = self.size as u32;
        (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j| if self.has_cross(i, j) { '+' } else { '/' })
                    .collect::<String>()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn parse(text: &str) -> Result<PipeDream> {
        let lines: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .collect();
        let n = lines.len();
        let mut crosses = Vec::new();
        for (i, line) in lines.iter().enumerate() {
            if line.chars().count() != n {
                return Err(Error::InvalidPipeDream(format!(
                    "line {} has {} tiles, expected {n}",
                    i + 1,
                    line.chars().count()
                )));
            }
            for (j, c) in line.chars().enumerate() {
                match c {
                    '+' => crosses.push((i as u32 + 1, j as u32 + 1)),
                    '/' => {}
                    _ => {
                        return Err(Error::InvalidPipeDream(format!("unknown tile '{c}'")));
                    }
                }
            }
        }
        PipeDream::new(n, crosses)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let crosses: Vec<[u32; 2]> = self.crosses.iter().map(|&(i, j)| [i, j]).collect();
        serde_json::json!({"size": self.size, "crosses": crosses})
    }
}

impl fmt::Display for PipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn sort_canonical(dreams: &mut [PipeDream]) {
    dreams.sort_by(|a, b| a.crosses.iter().cmp(b.crosses.iter()));
}

fn guard(w: &Permutation, limit: usize, what: &'static str) -> Result<()> {
    if w.len() > limit {
        return Err(Error::SizeGuard {
            what,
            limit,
            got: w.len(),
        });
    }
    Ok(())
}

/// Reduced pipe dreams of `w`: the closure of the bottom dream under
/// ladder moves, in lexicographic order of the sorted cross lists.
pub fn pipe_dreams(w: &Permutation) -> Result<Vec<PipeDream>> {
    guard(w, MAX_REDUCED_SIZE, "pipe dream size")?;
    let start = PipeDream::bottom(w);
    let mut seen: BTreeSet<PipeDream> = BTreeSet::new();
    let mut queue = VecDeque::from([start.clone()]);
    seen.insert(start);
    while let Some(d) = queue.pop_front() {
        for e in d.ladder_moves() {
            if seen.insert(e.clone()) {
                queue.push_back(e);
            }
        }
    }
    let mut out: Vec<PipeDream> = seen.into_iter().collect();
    sort_canonical(&mut out);
    Ok(out)
}

/// All staircase cross sets whose Demazure product is `w`.
pub fn pipe_dreams_nonreduced(w: &Permutation) -> Result<Vec<PipeDream>> {
    guard(w, MAX_NONREDUCED_SIZE, "non-reduced pipe dream size")?;
    let n = w.len().max(1);
    let mut cells: Vec<(u32, u32)> = Vec::new();
    for i in 1..=n as u32 {
        for j in (1..=n as u32).rev() {
            if (i + j) as usize <= n {
                cells.push((i, j));
            }
        }
    }
    let target = w.padded(n);
    let mut out = Vec::new();
    let mut chosen: Vec<(u32, u32)> = Vec::new();
    fn go(
        k: usize,
        cells: &[(u32, u32)],
        prefix: Permutation,
        target: &Permutation,
        chosen: &mut Vec<(u32, u32)>,
        out: &mut Vec<PipeDream>,
        n: usize,
    ) {
        if k == cells.len() {
            if &prefix == target {
                out.push(PipeDream::new(n, chosen.iter().copied()).unwrap());
            }
            return;
        }
        go(k + 1, cells, prefix.clone(), target, chosen, out, n);
        let (i, j) = cells[k];
        let s = (i + j - 1) as usize;
        let extended = if prefix.at(s) < prefix.at(s + 1) {
            prefix.times_simple(s)
        } else {
            prefix
        };
        if extended.bruhat_leq(target) {
            chosen.push((i, j));
            go(k + 1, cells, extended, target, chosen, out, n);
            chosen.pop();
        }
    }
    go(0, &cells, Permutation::identity(n), &target, &mut chosen, &mut out, n);
    sort_canonical(&mut out);
    Ok(out)
}

/// Facets of the subword complex: complements of the reduced pipe dreams.
pub fn subword_facets(w: &Permutation) -> Result<Vec<Vec<(u32, u32)>>> {
    Ok(pipe_dreams(w)?.iter().map(PipeDream::facet).collect())
}

/// Sum of `x^D` over the reduced pipe dreams.
pub fn pipe_dream_schubert(w: &Permutation) -> Result<Polynomial> {
    let mut p = Polynomial::zero();
    for d in pipe_dreams(w)? {
        p = &p + &Polynomial::monomial(d.x_monomial());
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Permutation {
        Permutation::from_digits(s).unwrap()
    }

    fn dream(n: usize, c: &[(u32, u32)]) -> PipeDream {
        PipeDream::new(n, c.iter().copied()).unwrap()
    }

    fn brute_force(p: &Permutation) -> Vec<PipeDream> {
        let n = p.len();
        let cells: Vec<(u32, u32)> = (1..=n as u32)
            .flat_map(|i| (1..=n as u32).map(move |j| (i, j)))
            .filter(|&(i, j)| (i + j) as usize <= n)
            .collect();
        let mut out = Vec::new();
        for mask in 0u32..1 << cells.len() {
            if mask.count_ones() as usize != p.length() {
                continue;
            }
            let d = dream(n, &cells.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &c)| c).collect::<Vec<_>>());
            if d.is_reduced() && &d.permutation() == p {
                out.push(d);
            }
        }
        sort_canonical(&mut out);
        out
    }

    #[test]
    fn permutations_of_dreams() {
        assert_eq!(dream(6, &[(1, 1), (1, 3), (1, 5)]).permutation(), w("214365"));
        assert!(dream(3, &[]).permutation().is_identity());
        let d = dream(3, &[(1, 1), (1, 2), (2, 1)]);
        assert_eq!(d.reading_word(), vec![2, 1, 2]);
        assert_eq!(d.permutation(), w("321"));
        assert!(d.is_reduced());
        assert!(dream(6, &[(1, 1), (1, 3), (1, 5)]).is_reduced());
        assert!(PipeDream::new(3, [(2, 2)]).is_err());
    }

    #[test]
    fn non_reduced_example() {
        // word 1,1 collapses to s1
        let d = dream(3, &[(1, 1), (2, 1)]);
        assert_eq!(d.reading_word(), vec![1, 2]);
        assert!(d.is_reduced());
        let e = dream(4, &[(1, 2), (2, 1)]);
        assert_eq!(e.reading_word(), vec![2, 2]);
        assert!(!e.is_reduced());
    }

    #[test]
    fn bottom_dreams() {
        assert_eq!(PipeDream::bottom(&w("2143")), dream(4, &[(1, 1), (3, 1)]));
        assert!(PipeDream::bottom(&w("1234")).crosses().is_empty());
        let full = PipeDream::bottom(&Permutation::longest(4));
        assert_eq!(full.crosses().len(), 6);
        for p in Permutation::all(5) {
            let b = PipeDream::bottom(&p);
            assert!(b.is_reduced());
            assert_eq!(b.permutation(), p);
        }
    }

    #[test]
    fn ladder_closure_matches_brute_force() {
        for n in 1..=4 {
            for p in Permutation::all(n) {
                let dreams = pipe_dreams(&p).unwrap();
                assert_eq!(dreams, brute_force(&p), "{p}");
                for d in &dreams {
                    assert!(d.is_reduced());
                    assert_eq!(d.permutation(), p);
                }
            }
        }
    }

    #[test]
    fn listed_examples() {
        let d = pipe_dreams(&w("214365")).unwrap();
        assert_eq!(d[0], dream(6, &[(1, 1), (1, 3), (1, 5)]));
        assert_eq!(
            d[0].render(),
            "+/+/+/\n//////\n//////\n//////\n//////\n//////"
        );
        assert_eq!(pipe_dreams(&w("1234")).unwrap(), vec![PipeDream::empty(4)]);
        assert_eq!(pipe_dreams(&w("2143")).unwrap().len(), 3);
        assert_eq!(subword_facets(&w("216354")).unwrap().len(), 35);
        let facets = subword_facets(&w("2143")).unwrap();
        assert!(facets.iter().all(|f| f.len() == 14));
        assert_eq!(subword_facets(&w("123")).unwrap(), vec![PipeDream::empty(3).facet()]);
        assert!(pipe_dreams(&Permutation::identity(9)).is_err());
    }

    #[test]
    fn nonreduced_lists() {
        assert_eq!(pipe_dreams_nonreduced(&w("123")).unwrap(), vec![PipeDream::empty(3)]);
        assert_eq!(
            pipe_dreams_nonreduced(&w("21")).unwrap(),
            vec![dream(2, &[(1, 1)])]
        );
        for p in Permutation::all(4) {
            let all = pipe_dreams_nonreduced(&p).unwrap();
            let reduced: Vec<PipeDream> = all.iter().filter(|d| d.is_reduced()).cloned().collect();
            assert_eq!(reduced, pipe_dreams(&p).unwrap());
            assert!(all.iter().all(|d| d.permutation() == p));
        }
        assert!(pipe_dreams_nonreduced(&Permutation::identity(7)).is_err());
    }

    #[test]
    fn render_parse_roundtrip() {
        for p in Permutation::all(4) {
            for d in pipe_dreams_nonreduced(&p).unwrap() {
                assert_eq!(PipeDream::parse(&d.render()).unwrap(), d);
            }
        }
        assert_eq!(PipeDream::empty(2).render(), "//\n//");
        assert!(PipeDream::parse("+x\n//").is_err());
        assert!(PipeDream::parse("++\n//").is_err());
    }
}
