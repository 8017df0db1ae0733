//! Permutations in one-line notation and the combinatorics attached to
//! them: Rothe diagrams, essential sets, Bruhat order, Demazure products
//! and pattern avoidance.
//!
//! Positions and values are 1-based throughout, matching the way the
//! objects are written by hand. The permutation matrix of `w` has its
//! ones at `(i, w(i))`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::asm::{PartialAsm, RankTable};
use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &e in &entries {
            let e = e as usize;
            if e == 0 || e > n {
                return Err(Error::InvalidPermutation(format!(
                    "entry {e} out of range 1..={n}"
                )));
            }
            if seen[e] {
                return Err(Error::InvalidPermutation(format!("duplicate entry {e}")));
            }
            seen[e] = true;
        }
        Ok(Permutation(entries))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    /// The longest element `n n-1 ... 1`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n as u32).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn one_line(&self) -> &[u32] {
        &self.0
    }

    /// `w(i)` for a 1-based position; positions past the end are fixed.
    pub fn at(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.0.len() {
            self.0[i - 1]
        } else {
            i as u32
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Pad with fixed points up to size `n` (no-op when already that large).
    pub fn padded(&self, n: usize) -> Self {
        let mut v = self.0.clone();
        for k in v.len() + 1..=n {
            v.push(k as u32);
        }
        Permutation(v)
    }

    /// Drop trailing fixed points.
    pub fn trimmed(&self) -> Self {
        let mut v = self.0.clone();
        while let Some(&last) = v.last() {
            if last as usize == v.len() {
                v.pop();
            } else {
                break;
            }
        }
        Permutation(v)
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Right descents `{i : w(i) > w(i+1)}`.
    pub fn descents(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p[0] > p[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Lehmer code: `c_i = #{j > i : w(j) < w(i)}`.
    pub fn lehmer_code(&self) -> Vec<usize> {
        let w = &self.0;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count())
            .collect()
    }

    /// Right multiplication by the simple transposition `s_i`, i.e. swap
    /// positions `i` and `i+1` (the permutation is padded if needed).
    pub fn times_simple(&self, i: usize) -> Self {
        let mut v = self.padded(i + 1).0;
        v.swap(i - 1, i);
        Permutation(v)
    }

    /// Right multiplication by the transposition of positions `a` and `b`.
    pub fn times_transposition(&self, a: usize, b: usize) -> Self {
        let mut v = self.padded(a.max(b)).0;
        v.swap(a - 1, b - 1);
        Permutation(v)
    }

    /// `rk_w(i, j) = #{k <= i : w(k) <= j}` as a full `n x n` table.
    pub fn rank_table(&self) -> RankTable {
        if self.is_empty() {
            return Permutation::identity(1).rank_table();
        }
        let n = self.len();
        let mut values = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let above = if i > 0 { values[(i - 1) * n + j] } else { 0 };
                let left_in_row = (self.0[i] as usize <= j + 1) as u32;
                values[i * n + j] = above + left_in_row;
            }
        }
        RankTable::from_values_unchecked(n, n, values)
    }

    /// The empty permutation gives the 1 x 1 identity, its smallest padding.
    pub fn to_matrix(&self) -> PartialAsm {
        if self.is_empty() {
            return PartialAsm::identity(1);
        }
        let n = self.len();
        let mut rows = vec![vec![0i8; n]; n];
        for (i, &v) in self.0.iter().enumerate() {
            rows[i][v as usize - 1] = 1;
        }
        PartialAsm::new(rows).expect("permutation matrices are ASMs")
    }

    /// The Rothe diagram `{(i,j) : w(i) > j, w^-1(j) > i}`.
    pub fn rothe_diagram(&self) -> CellSet {
        let inv = self.inverse();
        let n = self.len();
        let mut cells = BTreeSet::new();
        for i in 1..=n {
            for j in 1..=n {
                if self.at(i) as usize > j && inv.at(j) as usize > i {
                    cells.insert((i as u32, j as u32));
                }
            }
        }
        CellSet(cells)
    }

    pub fn essential_set(&self) -> CellSet {
        self.rothe_diagram().southeast_corners()
    }

    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        contains_pattern(&self.0, &pattern.0)
    }

    pub fn avoids_all(&self, patterns: &[Permutation]) -> bool {
        patterns.iter().all(|p| !self.contains_pattern(p))
    }

    pub fn is_in_class(&self, class: PatternClass) -> bool {
        self.avoids_all(&class.patterns())
    }

    pub fn is_vexillary(&self) -> bool {
        self.is_in_class(PatternClass::Vexillary)
    }

    pub fn is_cdg(&self) -> bool {
        self.is_in_class(PatternClass::Cdg)
    }

    pub fn is_cartwright_sturmfels(&self) -> bool {
        self.is_in_class(PatternClass::CartwrightSturmfels)
    }

    /// Bruhat order `self <= other`: the rank table of `self` dominates
    /// that of `other` pointwise. Sizes are equalized by padding.
    pub fn bruhat_leq(&self, other: &Permutation) -> bool {
        let n = self.len().max(other.len());
        let a = self.padded(n).rank_table();
        let b = other.padded(n).rank_table();
        a.dominates(&b)
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<u32> = (1..=n as u32).collect();
        loop {
            out.push(Permutation(current.clone()));
            if !next_lex_permutation(&mut current) {
                break;
            }
        }
        out
    }
}

fn next_lex_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Demazure (0-Hecke) product of a word in simple generators, folding
/// left to right: a letter acts only when it increases length. The
/// result lives in `S_n` with `n = max(ambient, max letter + 1)`.
pub fn demazure_product(word: &[usize], ambient: usize) -> Permutation {
    let n = word.iter().map(|&i| i + 1).max().unwrap_or(0).max(ambient);
    let mut v: Vec<u32> = (1..=n as u32).collect();
    for &i in word {
        assert!(i >= 1, "generator indices start at 1");
        if v[i - 1] < v[i] {
            v.swap(i - 1, i);
        }
    }
    Permutation(v)
}

fn contains_pattern(w: &[u32], p: &[u32]) -> bool {
    if p.len() > w.len() {
        return false;
    }
    if p.is_empty() {
        return true;
    }
    let mut chosen = Vec::with_capacity(p.len());
    search_pattern(w, p, 0, &mut chosen)
}

// Depth-first over index choices; `chosen` holds values of w picked so far.
fn search_pattern(w: &[u32], p: &[u32], start: usize, chosen: &mut Vec<u32>) -> bool {
    let k = chosen.len();
    if k == p.len() {
        return true;
    }
    let remaining = p.len() - k;
    for idx in start..=w.len() - remaining {
        let v = w[idx];
        let consistent = chosen
            .iter()
            .zip(p)
            .all(|(&c, &pc)| (c < v) == (pc < p[k]));
        if consistent {
            chosen.push(v);
            if search_pattern(w, p, idx + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Named pattern-avoidance classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternClass {
    Vexillary,
    Cdg,
    CartwrightSturmfels,
}

const VEXILLARY_PATTERNS: &[&str] = &["2143"];
const CDG_PATTERNS: &[&str] = &[
    "13254", "21543", "214635", "215364", "215634", "241635", "315264", "4261735",
];
const CARTWRIGHT_STURMFELS_PATTERNS: &[&str] = &[
    "12543", "13254", "13524", "13542", "21543", "125364", "125634", "215364", "215634", "315264",
    "315624", "315642",
];

impl PatternClass {
    pub fn patterns(self) -> Vec<Permutation> {
        let list = match self {
            PatternClass::Vexillary => VEXILLARY_PATTERNS,
            PatternClass::Cdg => CDG_PATTERNS,
            PatternClass::CartwrightSturmfels => CARTWRIGHT_STURMFELS_PATTERNS,
        };
        list.iter()
            .map(|s| Permutation::from_digits(s).expect("pattern table is valid"))
            .collect()
    }
}

impl FromStr for PatternClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "vexillary" | "vex" => Ok(PatternClass::Vexillary),
            "cdg" => Ok(PatternClass::Cdg),
            "cartwrightsturmfels" | "cs" => Ok(PatternClass::CartwrightSturmfels),
            other => Err(Error::Parse(format!("unknown pattern class '{other}'"))),
        }
    }
}

impl Permutation {
    /// Parse a string of single digits such as `"2143"` (sizes below 10).
    pub fn from_digits(s: &str) -> Result<Self> {
        let entries = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::Parse(format!("'{c}' is not a digit")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(entries)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Comma-separated one-line notation, e.g. `2,1,5,4,3`. Braces and
    /// spaces are tolerated.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('{').trim_end_matches('}');
        if body.trim().is_empty() {
            return Permutation::new(Vec::new());
        }
        let entries = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry '{}'", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(entries)
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// A finite set of 1-based `(row, col)` cells, iterated row-major.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct CellSet(pub BTreeSet<(u32, u32)>);

impl CellSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, cell: (u32, u32)) -> bool {
        self.0.contains(&cell)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().copied()
    }

    /// Cells whose south and east neighbours are both outside the set.
    pub fn southeast_corners(&self) -> CellSet {
        CellSet(
            self.0
                .iter()
                .copied()
                .filter(|&(i, j)| !self.contains((i + 1, j)) && !self.contains((i, j + 1)))
                .collect(),
        )
    }
}

impl FromIterator<(u32, u32)> for CellSet {
    fn from_iter<T: IntoIterator<Item = (u32, u32)>>(iter: T) -> Self {
        CellSet(iter.into_iter().collect())
    }
}

impl fmt::Display for CellSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(i, j)| format!("({i},{j})")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_permutation_pads_to_identity() {
        let e: Permutation = "".parse().unwrap();
        assert_eq!(e.to_matrix(), PartialAsm::identity(1));
        assert_eq!(e.rank_table(), Permutation::identity(1).rank_table());
    }

    fn p(s: &str) -> Permutation {
        Permutation::from_digits(s).unwrap()
    }

    fn cells(v: &[(u32, u32)]) -> CellSet {
        v.iter().copied().collect()
    }

    #[test]
    fn construction_validates() {
        assert_eq!(Permutation::new(vec![2, 1, 5, 4, 3]).unwrap(), p("21543"));
        assert!(Permutation::new(vec![1]).unwrap().is_identity());
        let err = Permutation::new(vec![2, 2, 1]).unwrap_err();
        assert!(err.to_string().contains("duplicate entry"));
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 4]).is_err());
    }

    #[test]
    fn parse_and_display() {
        let w: Permutation = "2,1,5,4,3".parse().unwrap();
        assert_eq!(w.to_string(), "2,1,5,4,3");
        let w: Permutation = "{2, 1, 5, 4, 3}".parse().unwrap();
        assert_eq!(w, p("21543"));
        assert!("2,x".parse::<Permutation>().is_err());
    }

    #[test]
    fn lengths() {
        assert_eq!(p("21543").length(), 4);
        assert_eq!(Permutation::identity(6).length(), 0);
        assert_eq!(p("2143").length(), 2);
    }

    #[test]
    fn descent_sets() {
        assert_eq!(p("2143").descents(), vec![1, 3]);
        assert!(Permutation::identity(5).descents().is_empty());
        assert_eq!(p("21543").descents(), vec![1, 3, 4]);
    }

    #[test]
    fn rothe_diagrams() {
        assert_eq!(
            p("21543").rothe_diagram(),
            cells(&[(1, 1), (3, 3), (3, 4), (4, 3)])
        );
        assert!(Permutation::identity(4).rothe_diagram().is_empty());
        assert_eq!(p("321").rothe_diagram(), cells(&[(1, 1), (1, 2), (2, 1)]));
        assert_eq!(
            p("21543").rothe_diagram().to_string(),
            "{(1,1),(3,3),(3,4),(4,3)}"
        );
    }

    #[test]
    fn essential_sets() {
        assert_eq!(p("21543").essential_set(), cells(&[(1, 1), (3, 4), (4, 3)]));
        assert!(Permutation::identity(3).essential_set().is_empty());
        assert_eq!(p("321").essential_set(), cells(&[(1, 2), (2, 1)]));
    }

    #[test]
    fn pattern_containment() {
        assert!(p("72581364").contains_pattern(&p("2143")));
        assert!(Permutation::identity(4).contains_pattern(&p("12")));
        assert!(p("21543").contains_pattern(&p("2143")));
        assert!(!p("1234").contains_pattern(&p("21")));
        assert!(!p("12").contains_pattern(&p("123")));
    }

    #[test]
    fn avoidance() {
        let w: Permutation = "1,6,9,2,4,7,3,5,8".parse().unwrap();
        assert!(w.avoids_all(&[p("2143")]));
        assert!(p("21543").avoids_all(&[]));
        let w = p("4261735");
        assert!(!w.avoids_all(&[w.clone()]));
    }

    #[test]
    fn pattern_classes() {
        assert!(!p("72581364").is_vexillary());
        assert!("1,6,9,2,4,7,3,5,8".parse::<Permutation>().unwrap().is_vexillary());
        assert!(!p("5721643").is_cdg());
        assert!(p("1357246").is_cdg());
        assert!(!p("312654").is_cartwright_sturmfels());
        assert!(p("635214").is_cartwright_sturmfels());
        assert_eq!(PatternClass::Cdg.patterns().len(), 8);
        assert_eq!(PatternClass::CartwrightSturmfels.patterns().len(), 12);
        assert_eq!("cdg".parse::<PatternClass>().unwrap(), PatternClass::Cdg);
    }

    #[test]
    fn bruhat_examples() {
        for w in Permutation::all(3) {
            assert!(Permutation::identity(3).bruhat_leq(&w));
        }
        assert!(p("312").bruhat_leq(&p("321")));
        assert!(!p("312").bruhat_leq(&p("231")));
        assert!(!p("231").bruhat_leq(&p("312")));
        // padding
        assert!(p("21").bruhat_leq(&p("321")));
    }

    #[test]
    fn demazure_examples() {
        assert_eq!(demazure_product(&[1, 3, 5], 6), p("214365"));
        assert!(demazure_product(&[], 3).is_identity());
        assert_eq!(demazure_product(&[1, 1], 2), p("21"));
        assert_eq!(demazure_product(&[2, 1, 2], 3), p("321"));
        assert_eq!(demazure_product(&[1, 2, 1, 2], 3), p("321"));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Permutation::all(1).len(), 1);
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(Permutation::all(3)[0], p("123"));
        assert_eq!(Permutation::all(3)[5], p("321"));
    }

    #[test]
    fn padding_and_trimming() {
        assert_eq!(p("21").padded(4), p("2134"));
        assert_eq!(p("2134").trimmed(), p("21"));
        assert_eq!(p("21").at(7), 7);
    }
}
