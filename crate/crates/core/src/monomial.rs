//! Squarefree monomial ideals in the generic-matrix variables, their
//! Stanley-Reisner complexes, rational homology, and Betti numbers via
//! Hochster's formula on the lcm lattice.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use rustc_hash::{FxHashMap, FxHashSet};

use crate::error::{Error, Result};
use crate::poly::{z_vars, Monomial, Polynomial, Var};

/// Default cap on the number of lcm-lattice elements.
pub const DEFAULT_LATTICE_LIMIT: usize = 200_000;

/// Largest vertex count for which a complex is indexed densely.
const DENSE_BITS: usize = 22;

/// A monomial ideal of the polynomial ring on the `rows x cols` generic matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
    rows: usize,
    cols: usize,
}

impl MonomialIdeal {
    pub fn new(gens: Vec<Monomial>, rows: usize, cols: usize) -> Result<Self> {
        for m in &gens {
            for v in m.support() {
                match v {
                    Var::Z(i, j) if i as usize <= rows && j as usize <= cols => {}
                    _ => {
                        return Err(Error::Invalid(format!(
                            "variable {v} is not in the {rows}x{cols} grid"
                        )))
                    }
                }
            }
        }
        Ok(MonomialIdeal {
            gens: MonomialIdeal::minimalize(gens),
            rows,
            cols,
        })
    }

    /// Drop duplicates and non-minimal generators; sort by degree, then
    /// lexicographically on the row-major variable lists.
    pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        gens.dedup();
        let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !out.iter().any(|h| h.divides(&g)) {
                out.push(g);
            }
        }
        out
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal {
            gens: MonomialIdeal::minimalize(self.gens.iter().map(Monomial::radical).collect()),
            rows: self.rows,
            cols: self.cols,
        }
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Invalid("monomial ideals live in different rings".into()));
        }
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)))
            .collect();
        MonomialIdeal::new(gens, self.rows, self.cols)
    }

    /// Ambient variables, row-major.
    pub fn variables(&self) -> Vec<Var> {
        z_vars(self.rows, self.cols)
    }

    fn vertex_index(&self) -> Result<FxHashMap<Var, usize>> {
        let vars = self.variables();
        if vars.len() > 128 {
            return Err(Error::SizeGuard {
                what: "number of ring variables",
                limit: 128,
                got: vars.len(),
            });
        }
        Ok(vars.into_iter().enumerate().map(|(k, v)| (v, k)).collect())
    }

    /// Generator supports as bitmasks over the ambient variables.
    fn masks(&self) -> Result<Vec<u128>> {
        let idx = self.vertex_index()?;
        Ok(minimal_masks(
            self.gens
                .iter()
                .map(|m| m.support().fold(0u128, |acc, v| acc | 1 << idx[&v]))
                .collect(),
        ))
    }

    fn unmask(&self, mask: u128) -> Vec<Var> {
        let vars = self.variables();
        bits(mask).map(|k| vars[k]).collect()
    }

    /// Minimal primes of the radical, each as its sorted variable list,
    /// in lexicographic order.
    pub fn minimal_primes(&self) -> Result<Vec<Vec<Var>>> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let covers = minimal_transversals(&self.masks()?);
        let mut primes: Vec<Vec<Var>> = covers.into_iter().map(|c| self.unmask(c)).collect();
        primes.sort();
        Ok(primes)
    }

    pub fn codim(&self) -> Result<usize> {
        Ok(self
            .minimal_primes()?
            .iter()
            .map(Vec::len)
            .min()
            .unwrap_or(0))
    }

    /// Facets are the complements of the minimal primes, in prime order.
    pub fn stanley_reisner(&self) -> Result<SimplicialComplex> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let vars = self.variables();
        let full = full_mask(vars.len());
        let mut covers = minimal_transversals(&self.masks()?);
        covers.sort_by_key(|&c| self.unmask(c));
        Ok(SimplicialComplex {
            vertices: vars,
            facets: covers.into_iter().map(|c| full & !c).collect(),
        })
    }

    /// Multigraded Betti numbers of the quotient ring.
    pub fn betti(&self) -> Result<BettiTable> {
        self.betti_with_limit(DEFAULT_LATTICE_LIMIT)
    }

    pub fn betti_with_limit(&self, limit: usize) -> Result<BettiTable> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let masks = self.radical().masks()?;
        let lattice = lcm_lattice(&masks, limit)?;
        let entries: Vec<(u128, Vec<usize>)> = lattice
            .par_iter()
            .map_init(HomologyScratch::default, |scratch, &sigma| {
                (sigma, hochster_homology(&masks, sigma, scratch))
            })
            .collect();
        let mut table = BTreeMap::new();
        for (sigma, ranks) in entries {
            let size = sigma.count_ones() as usize;
            // ranks[k] is the reduced homology in degree k - 1
            for (k, &r) in ranks.iter().enumerate() {
                if r > 0 {
                    let i = size - k;
                    table.insert((i, self.unmask(sigma)), r);
                }
            }
        }
        Ok(BettiTable { entries: table })
    }

    pub fn pdim(&self) -> Result<usize> {
        Ok(self.betti()?.pdim())
    }

    pub fn regularity(&self) -> Result<usize> {
        Ok(self.betti()?.regularity())
    }

    /// Cohen-Macaulayness of the quotient: projective dimension equals codimension.
    pub fn is_cohen_macaulay(&self) -> Result<bool> {
        Ok(self.pdim()? == self.codim()?)
    }

    /// `{rows, cols, generators}` with each generator in polynomial JSON.
    pub fn to_json(&self) -> serde_json::Value {
        let gens: Vec<serde_json::Value> = self
            .gens
            .iter()
            .map(|g| Polynomial::monomial(g.clone()).to_json())
            .collect();
        serde_json::json!({"rows": self.rows, "cols": self.cols, "generators": gens})
    }

    pub fn from_json(v: &serde_json::Value) -> Result<MonomialIdeal> {
        let bad = |what: &str| Error::Parse(format!("monomial ideal JSON: {what}"));
        let dim = |key: &str| {
            v.get(key)
                .and_then(serde_json::Value::as_u64)
                .map(|x| x as usize)
                .ok_or_else(|| bad(&format!("missing {key}")))
        };
        let mut gens = Vec::new();
        for g in v
            .get("generators")
            .and_then(serde_json::Value::as_array)
            .ok_or_else(|| bad("missing generators"))?
        {
            let p = Polynomial::from_json(g)?;
            let mut terms = p.terms();
            match (terms.next(), terms.next()) {
                (Some((m, c)), None) if c.is_one() => gens.push(m.clone()),
                _ => return Err(bad("generators must be monic monomials")),
            }
        }
        MonomialIdeal::new(gens, dim("rows")?, dim("cols")?)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "monomialIdeal ({})", gens.join(", "))
    }
}

fn full_mask(n: usize) -> u128 {
    if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

fn bits(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let k = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(k)
        }
    })
}

fn minimal_masks(mut masks: Vec<u128>) -> Vec<u128> {
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks.dedup();
    let mut out: Vec<u128> = Vec::with_capacity(masks.len());
    for m in masks {
        if !out.iter().any(|&o| o & m == o) {
            out.push(m);
        }
    }
    out
}

/// Minimal vertex covers of a hypergraph, by Berge's incremental method.
pub fn minimal_transversals(edges: &[u128]) -> Vec<u128> {
    let mut trans = vec![0u128];
    for &e in edges {
        let mut next = Vec::with_capacity(trans.len());
        for &t in &trans {
            if t & e != 0 {
                next.push(t);
            } else {
                next.extend(bits(e).map(|v| t | 1 << v));
            }
        }
        trans = minimal_masks(next);
    }
    trans
}

/// All joins of nonempty sets of generators, plus the empty set.
fn lcm_lattice(gens: &[u128], limit: usize) -> Result<Vec<u128>> {
    let mut seen: FxHashSet<u128> = FxHashSet::default();
    seen.insert(0);
    let mut frontier: Vec<u128> = Vec::new();
    for &g in gens {
        if seen.insert(g) {
            frontier.push(g);
        }
    }
    while let Some(a) = frontier.pop() {
        for &g in gens {
            let j = a | g;
            if seen.insert(j) {
                if seen.len() > limit {
                    return Err(Error::LatticeTooLarge(limit));
                }
                frontier.push(j);
            }
        }
    }
    let mut out: Vec<u128> = seen.into_iter().collect();
    out.sort_by_key(|m| (m.count_ones(), *m));
    Ok(out)
}

/// Reduced homology of the Stanley-Reisner complex restricted to
/// `sigma`: subsets of `sigma` containing no generator.
fn hochster_homology(gens: &[u128], sigma: u128, scratch: &mut HomologyScratch) -> Vec<usize> {
    let verts: Vec<usize> = bits(sigma).collect();
    let local: Vec<u32> = gens
        .iter()
        .filter(|&&g| g & sigma == g)
        .map(|&g| {
            verts
                .iter()
                .enumerate()
                .filter(|(_, &v)| g >> v & 1 == 1)
                .fold(0u32, |acc, (k, _)| acc | 1 << k)
        })
        .collect();
    let s = verts.len();
    if s > 32 {
        // enumeration would be hopeless; callers guard lattice size first
        panic!("induced subcomplex on {s} vertices");
    }
    let faces = independent_sets(s, &local);
    scratch.reduced_homology(s, &faces)
}

/// Subsets of `0..s` that contain none of `gens`, in DFS order.
fn independent_sets(s: usize, gens: &[u32]) -> Vec<u32> {
    let by_vertex: Vec<Vec<u32>> = (0..s)
        .map(|v| gens.iter().copied().filter(|g| g >> v & 1 == 1).collect())
        .collect();
    let mut out = vec![0u32];
    let mut stack: Vec<(u32, usize)> = vec![(0, 0)];
    while let Some((face, start)) = stack.pop() {
        for v in start..s {
            let next = face | 1 << v;
            if by_vertex[v].iter().all(|&g| g & next != g) {
                out.push(next);
                stack.push((next, v + 1));
            }
        }
    }
    out
}

/// Reusable buffers for homology computations.
#[derive(Default)]
pub struct HomologyScratch {
    dense: Vec<u32>,
}

const NONE: u32 = u32::MAX;

enum FaceIndex<'a> {
    Dense(&'a mut Vec<u32>),
    Hashed(FxHashMap<u32, u32>),
}

impl FaceIndex<'_> {
    fn get(&self, f: u32) -> u32 {
        match self {
            FaceIndex::Dense(v) => v[f as usize],
            FaceIndex::Hashed(m) => m.get(&f).copied().unwrap_or(NONE),
        }
    }
}

impl HomologyScratch {
    /// Reduced Betti numbers of the complex whose faces (empty face
    /// included, closed under subsets) are `faces` over vertices `0..s`.
    /// Entry `k` of the result is the rank in degree `k - 1`.
    pub fn reduced_homology(&mut self, s: usize, faces: &[u32]) -> Vec<usize> {
        let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
        let mut index = if s <= DENSE_BITS {
            if self.dense.len() < 1 << s {
                self.dense = vec![NONE; 1 << s];
            }
            for (k, &f) in faces.iter().enumerate() {
                self.dense[f as usize] = k as u32;
            }
            FaceIndex::Dense(&mut self.dense)
        } else {
            FaceIndex::Hashed(
                faces
                    .iter()
                    .enumerate()
                    .map(|(k, &f)| (f, k as u32))
                    .collect(),
            )
        };
        let ranks = homology_core(s, faces, &index, top);
        if let FaceIndex::Dense(buf) = &mut index {
            for &f in faces {
                buf[f as usize] = NONE;
            }
        }
        ranks
    }
}

fn homology_core(s: usize, faces: &[u32], index: &FaceIndex<'_>, top: usize) -> Vec<usize> {
    let n = faces.len();
    let full: u32 = if s == 32 { u32::MAX } else { (1u32 << s) - 1 };
    let mut alive = vec![true; n];
    let mut n_faces = vec![0u32; n];
    let mut n_cofaces = vec![0u32; n];
    for (k, &f) in faces.iter().enumerate() {
        n_faces[k] = f.count_ones();
        let mut free = full & !f;
        let mut c = 0;
        while free != 0 {
            let b = free & free.wrapping_neg();
            free ^= b;
            if index.get(f | b) != NONE {
                c += 1;
            }
        }
        n_cofaces[k] = c;
    }
    let mut queue: Vec<u32> = (0..n as u32)
        .filter(|&k| n_faces[k as usize] == 1 || n_cofaces[k as usize] == 1)
        .collect();

    let remove = |k: usize, alive: &mut Vec<bool>, n_faces: &mut Vec<u32>, n_cofaces: &mut Vec<u32>, queue: &mut Vec<u32>| {
        alive[k] = false;
        let f = faces[k];
        let mut b = f;
        while b != 0 {
            let bit = b & b.wrapping_neg();
            b ^= bit;
            let j = index.get(f ^ bit) as usize;
            if alive[j] {
                n_cofaces[j] -= 1;
                if n_cofaces[j] == 1 {
                    queue.push(j as u32);
                }
            }
        }
        let mut free = full & !f;
        while free != 0 {
            let bit = free & free.wrapping_neg();
            free ^= bit;
            let j = index.get(f | bit);
            if j != NONE && alive[j as usize] {
                let j = j as usize;
                n_faces[j] -= 1;
                if n_faces[j] == 1 {
                    queue.push(j as u32);
                }
            }
        }
    };

    while let Some(k) = queue.pop() {
        let k = k as usize;
        if !alive[k] {
            continue;
        }
        let f = faces[k];
        if n_faces[k] == 1 {
            // coreduction: pair with the unique live face
            let mut b = f;
            let mut partner = None;
            while b != 0 {
                let bit = b & b.wrapping_neg();
                b ^= bit;
                let j = index.get(f ^ bit) as usize;
                if alive[j] {
                    partner = Some(j);
                    break;
                }
            }
            let j = partner.expect("live face exists");
            remove(k, &mut alive, &mut n_faces, &mut n_cofaces, &mut queue);
            remove(j, &mut alive, &mut n_faces, &mut n_cofaces, &mut queue);
        } else if n_cofaces[k] == 1 {
            let mut free = full & !f;
            let mut partner = None;
            while free != 0 {
                let bit = free & free.wrapping_neg();
                free ^= bit;
                let j = index.get(f | bit);
                if j != NONE && alive[j as usize] {
                    partner = Some(j as usize);
                    break;
                }
            }
            let j = partner.expect("live coface exists");
            remove(k, &mut alive, &mut n_faces, &mut n_cofaces, &mut queue);
            remove(j, &mut alive, &mut n_faces, &mut n_cofaces, &mut queue);
        }
    }

    // exact elimination on the remaining cells, grouped by degree
    let mut by_dim: Vec<Vec<usize>> = vec![Vec::new(); top + 1];
    for k in 0..n {
        if alive[k] {
            by_dim[faces[k].count_ones() as usize].push(k);
        }
    }
    let mut ranks = vec![0usize; top + 2];
    for d in 1..=top {
        if by_dim[d].is_empty() || by_dim[d - 1].is_empty() {
            continue;
        }
        let row_of: FxHashMap<usize, usize> = by_dim[d - 1]
            .iter()
            .enumerate()
            .map(|(r, &k)| (k, r))
            .collect();
        let columns: Vec<Vec<(usize, i64)>> = by_dim[d]
            .iter()
            .map(|&k| {
                let f = faces[k];
                let mut col = Vec::new();
                // sign (-1)^position of the removed vertex
                for (pos, v) in (0..32).filter(|v| f >> v & 1 == 1).enumerate() {
                    let j = index.get(f ^ 1 << v) as usize;
                    if let Some(&r) = row_of.get(&j) {
                        col.push((r, if pos % 2 == 0 { 1 } else { -1 }));
                    }
                }
                col
            })
            .collect();
        ranks[d] = sparse_rank(&columns);
    }
    (0..=top)
        .map(|d| by_dim[d].len() - ranks[d] - ranks.get(d + 1).copied().unwrap_or(0))
        .collect()
}

/// Rank over the rationals of a sparse integer matrix given by columns.
pub fn sparse_rank(columns: &[Vec<(usize, i64)>]) -> usize {
    let mut pivots: FxHashMap<usize, BTreeMap<usize, BigRational>> = FxHashMap::default();
    let mut rank = 0;
    for col in columns {
        let mut v: BTreeMap<usize, BigRational> = col
            .iter()
            .map(|&(r, c)| (r, BigRational::from_integer(c.into())))
            .collect();
        loop {
            let Some((&r, _)) = v.iter().next_back() else {
                break;
            };
            match pivots.get(&r) {
                Some(p) => {
                    let factor = v[&r].clone();
                    for (&pr, pc) in p {
                        let e = v.entry(pr).or_insert_with(BigRational::zero);
                        *e -= &factor * pc;
                        if e.is_zero() {
                            v.remove(&pr);
                        }
                    }
                }
                None => {
                    let lead = v[&r].clone();
                    for c in v.values_mut() {
                        *c /= &lead;
                    }
                    debug_assert!(v[&r].is_one());
                    pivots.insert(r, v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// A simplicial complex given by its facets over labelled vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<Var>,
    facets: Vec<u128>,
}

impl SimplicialComplex {
    /// Facets are given as vertex index lists; non-maximal ones are dropped.
    pub fn new(vertices: Vec<Var>, facets: &[Vec<usize>]) -> Result<Self> {
        if vertices.len() > 128 {
            return Err(Error::SizeGuard {
                what: "number of vertices",
                limit: 128,
                got: vertices.len(),
            });
        }
        let mut masks = Vec::new();
        for f in facets {
            let mut m = 0u128;
            for &v in f {
                if v >= vertices.len() {
                    return Err(Error::Invalid(format!("vertex {v} out of range")));
                }
                m |= 1 << v;
            }
            masks.push(m);
        }
        masks.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
        let mut kept: Vec<u128> = Vec::new();
        for m in masks {
            if !kept.iter().any(|&k| k & m == m) {
                kept.push(m);
            }
        }
        kept.sort();
        Ok(SimplicialComplex {
            vertices,
            facets: kept,
        })
    }

    pub fn vertices(&self) -> &[Var] {
        &self.vertices
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Facets as sorted vertex lists.
    pub fn facets(&self) -> Vec<Vec<Var>> {
        self.facets
            .iter()
            .map(|&f| bits(f).map(|k| self.vertices[k]).collect())
            .collect()
    }

    pub fn dimension(&self) -> isize {
        self.facets
            .iter()
            .map(|f| f.count_ones() as isize - 1)
            .max()
            .unwrap_or(-2)
    }

    /// Ranks of reduced homology in degrees `-1..=dim`; the void complex
    /// (no faces at all) gives an empty list.
    pub fn reduced_homology(&self) -> Result<Vec<usize>> {
        if self.facets.is_empty() {
            return Ok(Vec::new());
        }
        let used: u128 = self.facets.iter().fold(0, |a, &f| a | f);
        let top = self.dimension() + 2;
        if self.facets.iter().fold(used, |a, &f| a & f) != 0 {
            // a cone
            return Ok(vec![0; top as usize]);
        }
        let verts: Vec<usize> = bits(used).collect();
        if verts.len() > 32 {
            return Err(Error::SizeGuard {
                what: "vertices for face enumeration",
                limit: 32,
                got: verts.len(),
            });
        }
        let local_facets: Vec<u32> = self
            .facets
            .iter()
            .map(|&f| {
                verts
                    .iter()
                    .enumerate()
                    .filter(|(_, &v)| f >> v & 1 == 1)
                    .fold(0u32, |a, (k, _)| a | 1 << k)
            })
            .collect();
        let mut faces: FxHashSet<u32> = FxHashSet::default();
        for &f in &local_facets {
            // all subsets of f
            let mut sub = f;
            loop {
                faces.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        let faces: Vec<u32> = faces.into_iter().collect();
        let mut ranks = HomologyScratch::default().reduced_homology(verts.len(), &faces);
        ranks.resize(top as usize, 0);
        Ok(ranks)
    }

    /// The link of a face given as a vertex index mask.
    pub fn link(&self, face: u128) -> SimplicialComplex {
        let facets: Vec<u128> = self
            .facets
            .iter()
            .filter(|&&f| f & face == face)
            .map(|&f| f & !face)
            .collect();
        let mut kept: Vec<u128> = Vec::new();
        let mut sorted = facets;
        sorted.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
        for m in sorted {
            if !kept.iter().any(|&k| k & m == m) {
                kept.push(m);
            }
        }
        kept.sort();
        SimplicialComplex {
            vertices: self.vertices.clone(),
            facets: kept,
        }
    }

    /// All faces as vertex index masks.
    pub fn faces(&self) -> Vec<u128> {
        let mut set: FxHashSet<u128> = FxHashSet::default();
        for &f in &self.facets {
            let mut sub = f;
            loop {
                set.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        let mut v: Vec<u128> = set.into_iter().collect();
        v.sort();
        v
    }
}

/// Nonzero multigraded Betti numbers keyed by `(i, multidegree)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Vec<Var>), usize>,
}

impl BettiTable {
    pub fn entries(&self) -> &BTreeMap<(usize, Vec<Var>), usize> {
        &self.entries
    }

    pub fn get(&self, i: usize, sigma: &[Var]) -> usize {
        self.entries.get(&(i, sigma.to_vec())).copied().unwrap_or(0)
    }

    /// Total Betti numbers indexed by homological degree.
    pub fn totals(&self) -> Vec<usize> {
        let mut out = vec![0; self.pdim() + 1];
        for ((i, _), &r) in &self.entries {
            out[*i] += r;
        }
        out
    }

    /// Graded Betti numbers `(i, j) -> rank` with `j` the total degree.
    pub fn graded(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for ((i, s), &r) in &self.entries {
            *out.entry((*i, s.len())).or_insert(0) += r;
        }
        out
    }

    pub fn pdim(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    pub fn regularity(&self) -> usize {
        self.entries
            .keys()
            .map(|(i, s)| s.len() - i)
            .max()
            .unwrap_or(0)
    }

    /// One row per homological degree: `i: {multidegree -> rank, ...}`.
    /// Entries with multidegrees as single-term polynomial JSON.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|((i, s), r)| {
                let m = Polynomial::monomial(Monomial::from_vars(s.iter().copied())).to_json();
                serde_json::json!({"i": i, "multidegree": m, "rank": r})
            })
            .collect();
        serde_json::json!({
            "entries": entries,
            "totals": self.totals(),
            "pdim": self.pdim(),
            "regularity": self.regularity(),
        })
    }

    pub fn render(&self) -> String {
        let mut rows: BTreeMap<usize, Vec<String>> = BTreeMap::new();
        for ((i, s), r) in &self.entries {
            let m = if s.is_empty() {
                "1".to_string()
            } else {
                Monomial::from_vars(s.iter().copied()).to_string()
            };
            rows.entry(*i).or_default().push(format!("{m} -> {r}"));
        }
        rows.into_iter()
            .map(|(i, items)| format!("{i}: {{{}}}", items.join(", ")))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(s: &str) -> Monomial {
        let p: crate::poly::Polynomial = s.parse().unwrap();
        let m = p.terms().next().unwrap().0.clone();
        m
    }

    fn ideal(gens: &[&str], n: usize) -> MonomialIdeal {
        MonomialIdeal::new(gens.iter().map(|g| mono(g)).collect(), n, n).unwrap()
    }

    #[test]
    fn json_round_trip() {
        let i = ideal(&["z[1,1]", "z[1,2]^2*z[2,1]", "z[2,2]*z[3,1]"], 3);
        assert_eq!(MonomialIdeal::from_json(&i.to_json()).unwrap(), i);
        let doubled = serde_json::json!({"rows": 2, "cols": 2, "generators": [[{"coefficient": "2", "exponents": [["z", 1, 1, 1]]}]]});
        assert!(MonomialIdeal::from_json(&doubled).is_err());
    }

    // Naive homology: dense rational ranks of all boundary maps.
    fn naive_homology(faces: &[u32]) -> Vec<usize> {
        let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap();
        let mut by_dim: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
        for &f in faces {
            by_dim[f.count_ones() as usize].push(f);
        }
        let mut ranks = vec![0; top + 2];
        for d in 1..=top {
            let cols: Vec<Vec<(usize, i64)>> = by_dim[d]
                .iter()
                .map(|&f| {
                    let mut col = Vec::new();
                    let mut pos = 0;
                    for v in 0..32 {
                        if f >> v & 1 == 1 {
                            let g = f ^ 1 << v;
                            let r = by_dim[d - 1].iter().position(|&h| h == g).unwrap();
                            col.push((r, if pos % 2 == 0 { 1 } else { -1 }));
                            pos += 1;
                        }
                    }
                    col
                })
                .collect();
            ranks[d] = sparse_rank(&cols);
        }
        (0..=top)
            .map(|d| by_dim[d].len() - ranks[d] - ranks[d + 1])
            .collect()
    }

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let verts = (1..=n as u32).map(Var::X).collect();
        let f: Vec<Vec<usize>> = facets.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::new(verts, &f).unwrap()
    }

    #[test]
    fn homology_of_small_complexes() {
        let circle = complex(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(circle.reduced_homology().unwrap(), vec![0, 0, 1]);
        let point = complex(1, &[&[0]]);
        assert_eq!(point.reduced_homology().unwrap(), vec![0, 0]);
        let sphere: Vec<Vec<usize>> = (0..5)
            .map(|skip| (0..5).filter(|&v| v != skip).collect())
            .collect();
        let refs: Vec<&[usize]> = sphere.iter().map(|v| v.as_slice()).collect();
        assert_eq!(complex(5, &refs).reduced_homology().unwrap(), vec![0, 0, 0, 0, 1]);
        let empty_face_only = complex(2, &[&[]]);
        assert_eq!(empty_face_only.reduced_homology().unwrap(), vec![1]);
        let two_points = complex(2, &[&[0], &[1]]);
        assert_eq!(two_points.reduced_homology().unwrap(), vec![0, 1]);
    }

    #[test]
    fn engine_matches_naive_ranks() {
        // independence complexes of random small hypergraphs
        let mut state = 11u64;
        let mut next = |m: u64| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            (state >> 33) % m
        };
        for _ in 0..300 {
            let s = 3 + next(7) as usize;
            let gens: Vec<u32> = (0..1 + next(6))
                .map(|_| {
                    let mut g = 0u32;
                    for _ in 0..1 + next(3) {
                        g |= 1 << next(s as u64);
                    }
                    g
                })
                .collect();
            let faces = independent_sets(s, &gens);
            let fast = HomologyScratch::default().reduced_homology(s, &faces);
            let mut slow = naive_homology(&faces);
            slow.truncate(fast.len());
            assert_eq!(fast, slow, "gens {gens:?} on {s} vertices");
        }
    }

    #[test]
    fn transversals() {
        let i = ideal(&["z[1,1]*z[1,2]"], 2);
        assert_eq!(
            i.minimal_primes().unwrap(),
            vec![vec![Var::Z(1, 1)], vec![Var::Z(1, 2)]]
        );
        let zero = MonomialIdeal::new(vec![], 2, 2).unwrap();
        assert_eq!(zero.minimal_primes().unwrap(), vec![Vec::<Var>::new()]);
        assert_eq!(zero.codim().unwrap(), 0);
        let unit = MonomialIdeal::new(vec![Monomial::one()], 2, 2).unwrap();
        assert_eq!(unit.codim(), Err(Error::UnitIdeal));
    }

    #[test]
    fn transversals_match_subset_scan() {
        let mut state = 5u64;
        let mut next = |m: u64| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(3);
            (state >> 33) % m
        };
        for _ in 0..200 {
            let nv = 9usize;
            let edges: Vec<u128> = (0..1 + next(5))
                .map(|_| (0..1 + next(3)).fold(0u128, |g, _| g | 1 << next(nv as u64)))
                .collect();
            let mut fast = minimal_transversals(&edges);
            fast.sort();
            let covers: Vec<u128> = (0..1u128 << nv)
                .filter(|&c| edges.iter().all(|&e| e & c != 0))
                .collect();
            let mut slow: Vec<u128> = covers
                .iter()
                .copied()
                .filter(|&c| !covers.iter().any(|&d| d != c && d & c == d))
                .collect();
            slow.sort();
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn codim_of_eight_generator_ideal() {
        let i = ideal(
            &[
                "z[1,1]", "z[1,2]", "z[2,1]", "z[2,2]", "z[1,3]*z[3,1]", "z[1,3]*z[3,2]",
                "z[2,3]*z[3,1]", "z[2,3]*z[3,2]",
            ],
            5,
        );
        assert_eq!(i.codim().unwrap(), 6);
        assert_eq!(i.minimal_primes().unwrap().len(), 2);
    }

    #[test]
    fn koszul_and_path() {
        let b = ideal(&["z[1,1]", "z[1,2]"], 2).betti().unwrap();
        assert_eq!(b.totals(), vec![1, 2, 1]);
        let b = ideal(&["z[1,1]*z[1,2]", "z[1,2]*z[2,1]"], 2).betti().unwrap();
        assert_eq!(b.totals(), vec![1, 2, 1]);
        assert_eq!(b.pdim(), 2);
        assert_eq!(b.regularity(), 1);
        let zero = MonomialIdeal::new(vec![], 2, 2).unwrap();
        assert_eq!(zero.betti().unwrap().totals(), vec![1]);
        assert_eq!(zero.pdim().unwrap(), 0);
        assert_eq!(zero.regularity().unwrap(), 0);
        assert!(zero.is_cohen_macaulay().unwrap());
    }

    #[test]
    fn betti_matches_full_scan() {
        let mut state = 17u64;
        let mut next = |m: u64| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(7);
            (state >> 33) % m
        };
        let vars = z_vars(3, 3);
        for _ in 0..40 {
            let gens: Vec<Monomial> = (0..1 + next(5))
                .map(|_| Monomial::from_vars((0..1 + next(3)).map(|_| vars[next(9) as usize])))
                .collect();
            let i = MonomialIdeal::new(gens, 3, 3).unwrap();
            let fast = i.betti().unwrap();
            let masks = i.masks().unwrap();
            let mut slow = BTreeMap::new();
            for sigma in 0..1u128 << 9 {
                let ranks = hochster_homology(&masks, sigma, &mut HomologyScratch::default());
                let size = sigma.count_ones() as usize;
                for (k, &r) in ranks.iter().enumerate() {
                    if r > 0 {
                        slow.insert((size - k, i.unmask(sigma)), r);
                    }
                }
            }
            assert_eq!(fast.entries, slow, "{i}");
        }
    }

    #[test]
    fn stanley_reisner_facets() {
        let zero = MonomialIdeal::new(vec![], 2, 2).unwrap();
        let k = zero.stanley_reisner().unwrap();
        assert_eq!(k.facets(), vec![z_vars(2, 2)]);
        let i = ideal(&["z[1,1]*z[2,2]"], 2);
        assert_eq!(i.stanley_reisner().unwrap().facet_count(), 2);
    }

    #[test]
    fn display() {
        let i = ideal(&["z[2,2]*z[3,1]", "z[1,2]", "z[1,3]*z[2,2]", "z[1,1]", "z[1,3]*z[2,1]"], 4);
        assert_eq!(
            i.to_string(),
            "monomialIdeal (z[1,1], z[1,2], z[1,3]*z[2,1], z[1,3]*z[2,2], z[2,2]*z[3,1])"
        );
    }
}
