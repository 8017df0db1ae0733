//! Partial alternating sign matrices, rank tables, completion, and
//! exhaustive or random ASM generation.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest size `enumerate_asms` accepts without an explicit override.
pub const MAX_ENUMERATION_SIZE: usize = 7;

/// Environment variable naming the directory for cached ASM lists.
pub const DATA_DIR_ENV: &str = "SCHUBERT_DATA_DIR";

/// An `m x n` matrix with entries in {-1, 0, 1} whose row and column
/// prefix sums all lie in {0, 1}.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i8>>", into = "Vec<Vec<i8>>")]
pub struct PartialAsm {
    rows: usize,
    cols: usize,
    entries: Vec<i8>,
}

impl PartialAsm {
    pub fn new(rows: Vec<Vec<i8>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.len());
        if m == 0 || n == 0 {
            return Err(Error::InvalidAsm("matrix must be nonempty".into()));
        }
        if let Some(i) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::InvalidAsm(format!(
                "row {} has {} entries, expected {n}",
                i + 1,
                rows[i].len()
            )));
        }
        let entries: Vec<i8> = rows.into_iter().flatten().collect();
        Self::from_entries(m, n, entries)
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<i8>) -> Result<Self> {
        assert_eq!(entries.len(), rows * cols);
        for (k, &e) in entries.iter().enumerate() {
            if !(-1..=1).contains(&e) {
                return Err(Error::InvalidAsm(format!(
                    "entry {e} at ({},{}) is not in {{-1,0,1}}",
                    k / cols + 1,
                    k % cols + 1
                )));
            }
        }
        for i in 0..rows {
            let mut sum = 0i32;
            for j in 0..cols {
                sum += entries[i * cols + j] as i32;
                if !(0..=1).contains(&sum) {
                    return Err(Error::InvalidAsm(format!(
                        "row {} prefix sum {sum} at column {}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        for j in 0..cols {
            let mut sum = 0i32;
            for i in 0..rows {
                sum += entries[i * cols + j] as i32;
                if !(0..=1).contains(&sum) {
                    return Err(Error::InvalidAsm(format!(
                        "column {} prefix sum {sum} at row {}",
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(PartialAsm {
            rows,
            cols,
            entries,
        })
    }

    pub fn identity(n: usize) -> Self {
        Permutation::identity(n).to_matrix()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at 1-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn to_rows(&self) -> Vec<Vec<i8>> {
        self.entries.chunks(self.cols).map(|r| r.to_vec()).collect()
    }

    pub fn row_sum(&self, i: usize) -> i32 {
        (1..=self.cols).map(|j| self.get(i, j) as i32).sum()
    }

    pub fn col_sum(&self, j: usize) -> i32 {
        (1..=self.rows).map(|i| self.get(i, j) as i32).sum()
    }

    /// Square with every full row and column summing to one.
    pub fn is_asm(&self) -> bool {
        self.rows == self.cols
            && (1..=self.rows).all(|i| self.row_sum(i) == 1)
            && (1..=self.cols).all(|j| self.col_sum(j) == 1)
    }

    pub fn is_permutation_matrix(&self) -> bool {
        self.is_asm() && self.entries.iter().all(|&e| e >= 0)
    }

    pub fn to_permutation(&self) -> Option<Permutation> {
        if !self.is_permutation_matrix() {
            return None;
        }
        let one_line = (1..=self.rows)
            .map(|i| (1..=self.cols).find(|&j| self.get(i, j) == 1).unwrap() as u32)
            .collect();
        Permutation::new(one_line).ok()
    }

    /// `rk_A(a, b)`: the sum of the entries in the northwest `a x b` block.
    pub fn rank_table(&self) -> RankTable {
        let (m, n) = (self.rows, self.cols);
        let mut values = vec![0u32; m * n];
        for i in 0..m {
            let mut row_prefix = 0i32;
            for j in 0..n {
                row_prefix += self.entries[i * n + j] as i32;
                let above = if i > 0 { values[(i - 1) * n + j] as i32 } else { 0 };
                values[i * n + j] = (above + row_prefix) as u32;
            }
        }
        RankTable {
            rows: m,
            cols: n,
            values,
        }
    }

    /// Direct sum with an identity block so the result is `size x size`.
    /// Only valid for ASMs.
    pub fn padded(&self, size: usize) -> PartialAsm {
        debug_assert!(self.is_asm());
        if size <= self.rows {
            return self.clone();
        }
        let mut rows = self.to_rows();
        for r in rows.iter_mut() {
            r.resize(size, 0);
        }
        for k in self.rows..size {
            let mut r = vec![0; size];
            r[k] = 1;
            rows.push(r);
        }
        PartialAsm::new(rows).expect("direct sum of ASMs is an ASM")
    }

    /// The northwest `m x n` corner.
    pub fn corner(&self, m: usize, n: usize) -> PartialAsm {
        let rows = (1..=m.min(self.rows))
            .map(|i| (1..=n.min(self.cols)).map(|j| self.get(i, j)).collect())
            .collect();
        PartialAsm::new(rows).expect("corners of partial ASMs are partial ASMs")
    }

    /// Extend to a square ASM whose northwest corner is `self`.
    ///
    /// Rows summing to zero receive a one in a fresh column, columns
    /// summing to zero a one in a fresh row; both in top-to-bottom and
    /// left-to-right order. The size `m + (#zero-sum columns)` is the
    /// least possible: each zero-sum column needs a one below row `m`,
    /// and every added column contributes a nonnegative amount below.
    pub fn complete(&self) -> PartialAsm {
        if self.is_asm() {
            return self.clone();
        }
        let (m, n) = (self.rows, self.cols);
        let deficient_rows: Vec<usize> = (1..=m).filter(|&i| self.row_sum(i) == 0).collect();
        let deficient_cols: Vec<usize> = (1..=n).filter(|&j| self.col_sum(j) == 0).collect();
        let k = m + deficient_cols.len();
        debug_assert_eq!(k, n + deficient_rows.len());
        let mut rows = self.to_rows();
        for r in rows.iter_mut() {
            r.resize(k, 0);
        }
        rows.resize(k, vec![0; k]);
        for (t, &i) in deficient_rows.iter().enumerate() {
            rows[i - 1][n + t] = 1;
        }
        for (t, &j) in deficient_cols.iter().enumerate() {
            rows[m + t][j - 1] = 1;
        }
        let out = PartialAsm::new(rows).expect("completion is a valid ASM");
        debug_assert!(out.is_asm());
        out
    }

    /// Parse the matrix text format: one row per line (or separated by
    /// `;`), entries separated by whitespace or commas. Decorations of
    /// the form `| ... |` are ignored.
    pub fn parse(s: &str) -> Result<PartialAsm> {
        PartialAsm::new(parse_int_grid(s)?.into_iter().map(to_i8_row).collect::<Result<_>>()?)
    }

    /// Plain matrix text: one row per line, entries space-separated.
    pub fn to_text(&self) -> String {
        render_plain(&self.to_rows())
    }

    /// Bar-delimited layout with left-aligned columns.
    pub fn to_display(&self) -> String {
        render_barred(&self.to_rows())
    }
}

fn to_i8_row(r: Vec<i64>) -> Result<Vec<i8>> {
    r.into_iter()
        .map(|v| i8::try_from(v).map_err(|_| Error::InvalidAsm(format!("entry {v} out of range"))))
        .collect()
}

/// Parse a grid of integers; rows are split on newlines or `;`.
pub fn parse_int_grid(s: &str) -> Result<Vec<Vec<i64>>> {
    let mut rows = Vec::new();
    for line in s.split(['\n', ';']) {
        let line = line.trim().trim_matches('|').trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad matrix entry '{t}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Parse("empty matrix".into()));
    }
    Ok(rows)
}

fn render_plain<T: fmt::Display>(rows: &[Vec<T>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

fn render_barred<T: fmt::Display>(rows: &[Vec<T>]) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(|v| v.to_string()).collect())
        .collect();
    let ncols = cells.first().map_or(0, |r| r.len());
    let widths: Vec<usize> = (0..ncols)
        .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(1))
        .collect();
    cells
        .iter()
        .map(|r| {
            let body: Vec<String> = r
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:<w$}"))
                .collect();
            format!("| {} |", body.join(" "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

impl FromStr for PartialAsm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PartialAsm::parse(s)
    }
}

impl TryFrom<Vec<Vec<i8>>> for PartialAsm {
    type Error = Error;

    fn try_from(rows: Vec<Vec<i8>>) -> Result<Self> {
        PartialAsm::new(rows)
    }
}

impl From<PartialAsm> for Vec<Vec<i8>> {
    fn from(a: PartialAsm) -> Self {
        a.to_rows()
    }
}

impl fmt::Display for PartialAsm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_display())
    }
}

impl fmt::Debug for PartialAsm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_rows())
    }
}

/// Values `rk(i, j)` with unit steps along rows and columns and
/// `rk(0, .) = rk(., 0) = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct RankTable {
    rows: usize,
    cols: usize,
    values: Vec<u32>,
}

impl RankTable {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let (m, n, values) = flatten(rows).map_err(Error::InvalidRankTable)?;
        let t = RankTable {
            rows: m,
            cols: n,
            values,
        };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn from_values_unchecked(rows: usize, cols: usize, values: Vec<u32>) -> Self {
        RankTable { rows, cols, values }
    }

    fn validate(&self) -> Result<()> {
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                let v = self.get(i, j) as i64;
                let up = self.get_or_zero(i - 1, j) as i64;
                let left = self.get_or_zero(i, j - 1) as i64;
                if !(0..=1).contains(&(v - up)) || !(0..=1).contains(&(v - left)) {
                    return Err(Error::InvalidRankTable(format!(
                        "entry {v} at ({i},{j}) is not a unit step from its neighbours"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.values[(i - 1) * self.cols + (j - 1)]
    }

    fn get_or_zero(&self, i: usize, j: usize) -> u32 {
        if i == 0 || j == 0 {
            0
        } else {
            self.get(i, j)
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.values.chunks(self.cols).map(|r| r.to_vec()).collect()
    }

    /// Pointwise `self >= other`. Tables must have the same shape.
    pub fn dominates(&self, other: &RankTable) -> bool {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.values.iter().zip(&other.values).all(|(a, b)| a >= b)
    }

    /// The greatest rank table bounded above by `matrix` pointwise,
    /// computed as a decreasing fixpoint.
    pub fn from_matrix(matrix: &[Vec<u32>]) -> Result<RankTable> {
        let (m, n, bound) = flatten(matrix.to_vec()).map_err(Error::InvalidRankTable)?;
        let mut r: Vec<u32> = (0..m * n)
            .map(|k| bound[k].min((k / n + 1).min(k % n + 1) as u32))
            .collect();
        let at = |r: &[u32], i: usize, j: usize| -> Option<u32> {
            if i >= m || j >= n {
                None
            } else {
                Some(r[i * n + j])
            }
        };
        loop {
            let mut changed = false;
            for i in 0..m {
                for j in 0..n {
                    let mut v = r[i * n + j];
                    let up = if i == 0 { 0 } else { r[(i - 1) * n + j] };
                    let left = if j == 0 { 0 } else { r[i * n + j - 1] };
                    v = v.min(up + 1).min(left + 1);
                    if let Some(down) = at(&r, i + 1, j) {
                        v = v.min(down);
                    }
                    if let Some(right) = at(&r, i, j + 1) {
                        v = v.min(right);
                    }
                    if v != r[i * n + j] {
                        r[i * n + j] = v;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let t = RankTable {
            rows: m,
            cols: n,
            values: r,
        };
        t.validate()?;
        Ok(t)
    }

    /// Inverse of [`PartialAsm::rank_table`] by inclusion-exclusion.
    pub fn to_asm(&self) -> Result<PartialAsm> {
        self.validate()?;
        let (m, n) = (self.rows, self.cols);
        let mut entries = Vec::with_capacity(m * n);
        for i in 1..=m {
            for j in 1..=n {
                let e = self.get(i, j) as i64 - self.get_or_zero(i - 1, j) as i64
                    - self.get_or_zero(i, j - 1) as i64
                    + self.get_or_zero(i - 1, j - 1) as i64;
                entries.push(e as i8);
            }
        }
        PartialAsm::from_entries(m, n, entries)
            .map_err(|e| Error::InvalidRankTable(format!("not the table of a partial ASM: {e}")))
    }

    pub fn to_text(&self) -> String {
        render_plain(&self.to_rows())
    }

    pub fn to_display(&self) -> String {
        render_barred(&self.to_rows())
    }
}

fn flatten<T: Copy>(rows: Vec<Vec<T>>) -> std::result::Result<(usize, usize, Vec<T>), String> {
    let m = rows.len();
    let n = rows.first().map_or(0, |r| r.len());
    if m == 0 || n == 0 {
        return Err("table must be nonempty".into());
    }
    if rows.iter().any(|r| r.len() != n) {
        return Err("table must be rectangular".into());
    }
    Ok((m, n, rows.into_iter().flatten().collect()))
}

impl TryFrom<Vec<Vec<u32>>> for RankTable {
    type Error = Error;

    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        RankTable::new(rows)
    }
}

impl From<RankTable> for Vec<Vec<u32>> {
    fn from(t: RankTable) -> Self {
        t.to_rows()
    }
}

impl fmt::Display for RankTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_display())
    }
}

impl fmt::Debug for RankTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_rows())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extreme {
    Min,
    Max,
}

/// Pointwise minimum or maximum of equally-shaped rank tables.
pub fn entrywise_extreme(tables: &[RankTable], mode: Extreme) -> Result<RankTable> {
    let first = tables
        .first()
        .ok_or_else(|| Error::Invalid("empty list of rank tables".into()))?;
    let mut values = first.values.clone();
    for t in &tables[1..] {
        if (t.rows, t.cols) != (first.rows, first.cols) {
            return Err(Error::InvalidRankTable(format!(
                "shape {}x{} differs from {}x{}",
                t.rows, t.cols, first.rows, first.cols
            )));
        }
        for (v, &w) in values.iter_mut().zip(&t.values) {
            *v = match mode {
                Extreme::Min => (*v).min(w),
                Extreme::Max => (*v).max(w),
            };
        }
    }
    let out = RankTable {
        rows: first.rows,
        cols: first.cols,
        values,
    };
    out.validate()?;
    Ok(out)
}

/// Complete every matrix and pad all of them to a common square size.
pub fn common_square(list: &[PartialAsm]) -> Vec<PartialAsm> {
    let completed: Vec<PartialAsm> = list.iter().map(PartialAsm::complete).collect();
    let size = completed.iter().map(|a| a.rows()).max().unwrap_or(0);
    completed.into_iter().map(|a| a.padded(size)).collect()
}

/// The ASM whose rank table is the entrywise minimum of the summands'.
pub fn asm_sum(list: &[PartialAsm]) -> Result<PartialAsm> {
    if list.is_empty() {
        return Err(Error::Invalid("empty list of ASMs".into()));
    }
    let tables: Vec<RankTable> = common_square(list).iter().map(|a| a.rank_table()).collect();
    entrywise_extreme(&tables, Extreme::Min)?.to_asm()
}

/// All `n x n` ASMs in row-major lexicographic order of entries
/// (with -1 < 0 < 1).
pub fn enumerate_asms(n: usize) -> Result<Vec<PartialAsm>> {
    if n == 0 {
        return Err(Error::Invalid("ASM size must be positive".into()));
    }
    if n > MAX_ENUMERATION_SIZE {
        return Err(Error::SizeGuard {
            what: "ASM enumeration size",
            limit: MAX_ENUMERATION_SIZE,
            got: n,
        });
    }
    Ok(enumerate_asms_unguarded(n))
}

/// Enumeration without the size guard.
pub fn enumerate_asms_unguarded(n: usize) -> Vec<PartialAsm> {
    let rows = asm_rows(n);
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    let mut col_state = vec![0u8; n];
    extend_rows(n, &rows, &mut col_state, &mut chosen, &mut out);
    out
}

// Rows are {-1,0,1} vectors with row prefix sums in {0,1} and total 1,
// listed in lexicographic order.
fn asm_rows(n: usize) -> Vec<Vec<i8>> {
    fn go(n: usize, prefix: &mut Vec<i8>, sum: i8, out: &mut Vec<Vec<i8>>) {
        if prefix.len() == n {
            if sum == 1 {
                out.push(prefix.clone());
            }
            return;
        }
        for e in [-1i8, 0, 1] {
            let s = sum + e;
            if (0..=1).contains(&s) {
                prefix.push(e);
                go(n, prefix, s, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::with_capacity(n), 0, &mut out);
    out
}

fn extend_rows(
    n: usize,
    rows: &[Vec<i8>],
    col_state: &mut [u8],
    chosen: &mut Vec<usize>,
    out: &mut Vec<PartialAsm>,
) {
    if chosen.len() == n {
        if col_state.iter().all(|&c| c == 1) {
            let entries = chosen.iter().flat_map(|&r| rows[r].iter().copied()).collect();
            out.push(PartialAsm {
                rows: n,
                cols: n,
                entries,
            });
        }
        return;
    }
    // Remaining rows can raise each column sum by at most one net, but the
    // total must reach n: prune when too few ones are left to place.
    let remaining = n - chosen.len();
    let missing = col_state.iter().filter(|&&c| c == 0).count();
    if missing > remaining {
        return;
    }
    for (idx, row) in rows.iter().enumerate() {
        let ok = row
            .iter()
            .zip(col_state.iter())
            .all(|(&e, &c)| (0..=1).contains(&(c as i8 + e)));
        if !ok {
            continue;
        }
        for (c, &e) in col_state.iter_mut().zip(row) {
            *c = (*c as i8 + e) as u8;
        }
        chosen.push(idx);
        extend_rows(n, rows, col_state, chosen, out);
        chosen.pop();
        for (c, &e) in col_state.iter_mut().zip(row) {
            *c = (*c as i8 - e) as u8;
        }
    }
}

/// `count` ASMs drawn uniformly from `enumerate_asms(n)` with a seeded
/// generator. Without replacement, `count` may not exceed the total.
pub fn random_asms(n: usize, count: usize, seed: u64, with_replacement: bool) -> Result<Vec<PartialAsm>> {
    let all = enumerate_asms(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if with_replacement {
        Ok((0..count)
            .map(|_| all[rng.gen_range(0..all.len())].clone())
            .collect())
    } else {
        if count > all.len() {
            return Err(Error::Invalid(format!(
                "cannot draw {count} distinct ASMs from {} of size {n}",
                all.len()
            )));
        }
        Ok(all
            .choose_multiple(&mut rng, count)
            .cloned()
            .collect())
    }
}

/// Bruhat-minimal permutations `w` with `rk_w <= rk_A`, by exhaustive
/// scan of `S_n` after completing `A`.
pub fn perm_set_brute_force(a: &PartialAsm) -> Result<Vec<Permutation>> {
    const LIMIT: usize = 6;
    let a = a.complete();
    let n = a.rows();
    if n > LIMIT {
        return Err(Error::SizeGuard {
            what: "brute-force perm(A) size",
            limit: LIMIT,
            got: n,
        });
    }
    let rk = a.rank_table();
    let above: Vec<(Permutation, RankTable)> = Permutation::all(n)
        .into_iter()
        .map(|w| {
            let t = w.rank_table();
            (w, t)
        })
        .filter(|(_, t)| rk.dominates(t))
        .collect();
    let mut out: Vec<Permutation> = above
        .iter()
        .filter(|(w, t)| {
            !above
                .iter()
                .any(|(v, s)| v != w && s.dominates(t))
        })
        .map(|(w, _)| w.clone())
        .collect();
    out.sort();
    Ok(out)
}

/// Text serialization of a list of matrices: blank-line separated blocks.
pub fn write_asm_list(list: &[PartialAsm]) -> String {
    let mut s = list
        .iter()
        .map(|a| a.to_text())
        .collect::<Vec<_>>()
        .join("\n\n");
    s.push('\n');
    s
}

pub fn read_asm_list(text: &str) -> Result<Vec<PartialAsm>> {
    text.split("\n\n")
        .map(str::trim)
        .filter(|b| !b.is_empty())
        .map(PartialAsm::parse)
        .collect()
}

/// File-backed cache of ASM enumerations.
#[derive(Debug, Clone)]
pub struct AsmStore {
    dir: PathBuf,
}

impl AsmStore {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        AsmStore { dir: dir.into() }
    }

    /// Directory from the environment, if set.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(DATA_DIR_ENV).map(AsmStore::new)
    }

    pub fn path_for(&self, n: usize) -> PathBuf {
        self.dir.join(format!("asm_{n}.txt"))
    }

    /// Load the list for size `n`, enumerating and writing it on a miss.
    pub fn full_list(&self, n: usize) -> Result<Vec<PartialAsm>> {
        let path = self.path_for(n);
        if path.exists() {
            let text = read_file(&path)?;
            let list = read_asm_list(&text)?;
            if list.iter().all(|a| a.rows() == n && a.is_asm()) {
                return Ok(list);
            }
            return Err(Error::Invalid(format!(
                "cached list {} is corrupt",
                path.display()
            )));
        }
        let list = enumerate_asms(n)?;
        fs::create_dir_all(&self.dir)
            .map_err(|e| Error::Invalid(format!("cannot create {}: {e}", self.dir.display())))?;
        fs::write(&path, write_asm_list(&list))
            .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display())))?;
        Ok(list)
    }
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))
}
