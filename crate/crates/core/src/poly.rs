//! Sparse multivariate polynomials with exact rational coefficients over
//! the variables `z[i,j]`, `x[i]`, `y[i]`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub type Coeff = BigRational;

/// Ring variables. The derived order (all `z` row-major, then `x`, then
/// `y`) is the natural order used when no priority is given.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Z(u32, u32),
    X(u32),
    Y(u32),
    /// Auxiliary elimination variable, never part of a result.
    T,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Z(i, j) => write!(f, "z[{i},{j}]"),
            Var::X(i) => write!(f, "x[{i}]"),
            Var::Y(i) => write!(f, "y[{i}]"),
            Var::T => f.write_str("t"),
        }
    }
}

/// Variables of the `m x n` generic matrix in row-major order.
pub fn z_vars(m: usize, n: usize) -> Vec<Var> {
    let mut v = Vec::with_capacity(m * n);
    for i in 1..=m as u32 {
        for j in 1..=n as u32 {
            v.push(Var::Z(i, j));
        }
    }
    v
}

/// A monomial as a sorted list of `(variable, exponent)` with positive exponents.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn from_vars(vars: impl IntoIterator<Item = Var>) -> Self {
        Monomial::from_pairs(vars.into_iter().map(|v| (v, 1)))
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|k| self.0[k].1)
            .unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = Var> + '_ {
        self.0.iter().map(|&(v, _)| v)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&(_, e)| e == 1)
    }

    fn merge(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        while i < a.len() || j < b.len() {
            let (v, e) = if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                i += 1;
                (a[i - 1].0, f(a[i - 1].1, 0))
            } else if i == a.len() || b[j].0 < a[i].0 {
                j += 1;
                (b[j - 1].0, f(0, b[j - 1].1))
            } else {
                i += 1;
                j += 1;
                (a[i - 1].0, f(a[i - 1].1, b[j - 1].1))
            };
            if e > 0 {
                out.push((v, e));
            }
        }
        Monomial(out)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| a + b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge(other, u32::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.merge(other, u32::min)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(self.merge(other, |a, b| a - b))
    }

    /// The squarefree part.
    pub fn radical(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, _)| (v, 1)).collect())
    }

    /// Apply a variable renaming, which must be injective on the support.
    pub fn map_vars(&self, f: impl Fn(Var) -> Var) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| (f(v), e)))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    GRevLex,
}

/// A monomial order given by a kind and a variable priority list
/// (highest first). Variables missing from the list rank below all
/// listed ones, in natural order.
#[derive(Debug, Clone)]
pub struct TermOrder {
    kind: OrderKind,
    priority: Vec<Var>,
    rank: HashMap<Var, usize>,
}

impl PartialEq for TermOrder {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.priority == other.priority
    }
}

impl Eq for TermOrder {}

impl TermOrder {
    pub fn new(kind: OrderKind, priority: Vec<Var>) -> Self {
        let rank = priority.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        TermOrder {
            kind,
            priority,
            rank,
        }
    }

    pub fn lex(priority: Vec<Var>) -> Self {
        TermOrder::new(OrderKind::Lex, priority)
    }

    pub fn grevlex(priority: Vec<Var>) -> Self {
        TermOrder::new(OrderKind::GRevLex, priority)
    }

    /// Graded reverse lexicographic order over the natural variable order.
    pub fn natural() -> Self {
        TermOrder::grevlex(Vec::new())
    }

    /// Lex with `z[1,n] > ... > z[1,1] > z[2,n] > ... > z[m,1]`; the lead
    /// term of every minor of the generic matrix is its antidiagonal.
    pub fn antidiagonal(m: usize, n: usize) -> Self {
        let mut p = Vec::with_capacity(m * n);
        for i in 1..=m as u32 {
            for j in (1..=n as u32).rev() {
                p.push(Var::Z(i, j));
            }
        }
        TermOrder::lex(p)
    }

    /// Lex with `z[n,n]` largest, reverse row-major.
    pub fn diag_lex_se(m: usize, n: usize) -> Self {
        let mut p = z_vars(m, n);
        p.reverse();
        TermOrder::lex(p)
    }

    /// Lex with `z[1,1]` largest, row-major.
    pub fn diag_lex_nw(m: usize, n: usize) -> Self {
        TermOrder::lex(z_vars(m, n))
    }

    /// Graded reverse lex whose most penalised variable is `z[m,1]`,
    /// then `z[m,2]`, ..., up to `z[1,n]` which is penalised least.
    pub fn diag_revlex(m: usize, n: usize) -> Self {
        let mut p = Vec::with_capacity(m * n);
        for i in 1..=m as u32 {
            for j in (1..=n as u32).rev() {
                p.push(Var::Z(i, j));
            }
        }
        TermOrder::grevlex(p)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[Var] {
        &self.priority
    }

    /// Sort key: smaller key means higher priority.
    pub fn key(&self, v: Var) -> (usize, Var) {
        match self.rank.get(&v) {
            Some(&k) => (k, v),
            None => (usize::MAX, v),
        }
    }

    /// The support of `m` with exponents, highest priority first.
    fn ranked(&self, m: &Monomial) -> Vec<((usize, Var), u32)> {
        let mut v: Vec<_> = m.0.iter().map(|&(x, e)| (self.key(x), e)).collect();
        v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        match self.kind {
            OrderKind::Lex => {
                let (ra, rb) = (self.ranked(a), self.ranked(b));
                for k in 0.. {
                    match (ra.get(k), rb.get(k)) {
                        (None, None) => return Ordering::Equal,
                        (Some(_), None) => return Ordering::Greater,
                        (None, Some(_)) => return Ordering::Less,
                        (Some(x), Some(y)) => {
                            if x.0 != y.0 {
                                // the one containing the higher-priority variable wins
                                return if x.0 < y.0 {
                                    Ordering::Greater
                                } else {
                                    Ordering::Less
                                };
                            }
                            if x.1 != y.1 {
                                return x.1.cmp(&y.1);
                            }
                        }
                    }
                }
                unreachable!()
            }
            OrderKind::GRevLex => {
                let d = a.degree().cmp(&b.degree());
                if d != Ordering::Equal {
                    return d;
                }
                let (ra, rb) = (self.ranked(a), self.ranked(b));
                let (mut i, mut j) = (ra.len(), rb.len());
                while i > 0 || j > 0 {
                    let x = if i > 0 { Some(ra[i - 1]) } else { None };
                    let y = if j > 0 { Some(rb[j - 1]) } else { None };
                    match (x, y) {
                        (Some(x), Some(y)) if x.0 == y.0 => {
                            if x.1 != y.1 {
                                return y.1.cmp(&x.1);
                            }
                            i -= 1;
                            j -= 1;
                        }
                        // lowest-priority variable present in only one side
                        (Some(x), Some(y)) => {
                            return if x.0 > y.0 {
                                Ordering::Less
                            } else {
                                Ordering::Greater
                            };
                        }
                        (Some(_), None) => return Ordering::Less,
                        (None, Some(_)) => return Ordering::Greater,
                        (None, None) => unreachable!(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// Exact multivariate polynomial.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Coeff>,
}

fn int(n: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(n))
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn integer(n: i64) -> Self {
        Polynomial::constant(int(n))
    }

    pub fn var(v: Var) -> Self {
        Polynomial::monomial(Monomial::var(v))
    }

    pub fn z(i: u32, j: u32) -> Self {
        Polynomial::var(Var::Z(i, j))
    }

    pub fn x(i: u32) -> Self {
        Polynomial::var(Var::X(i))
    }

    pub fn y(i: u32) -> Self {
        Polynomial::var(Var::Y(i))
    }

    pub fn monomial(m: Monomial) -> Self {
        Polynomial::term(Coeff::one(), m)
    }

    pub fn term(c: Coeff, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Terms sorted descending in `ord`.
    pub fn sorted_terms(&self, ord: &TermOrder) -> Vec<(&Monomial, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| ord.cmp(b.0, a.0));
        v
    }

    pub fn lead_term(&self, ord: &TermOrder) -> Result<(Monomial, Coeff)> {
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(a.0, b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Highest total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    /// The sum of the terms of a given degree.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut v: Vec<Var> = self.terms.keys().flat_map(|m| m.support()).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, d)| (m.clone(), d * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(n, c)| (n.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Rename variables; the map must be injective on the variables present.
    pub fn map_vars(&self, f: impl Fn(Var) -> Var) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.map_vars(&f), c.clone())))
    }

    /// Exchange `x[i]` and `x[i+1]`.
    pub fn swap_x(&self, i: u32) -> Polynomial {
        self.map_vars(|v| match v {
            Var::X(k) if k == i => Var::X(i + 1),
            Var::X(k) if k == i + 1 => Var::X(i),
            other => other,
        })
    }

    /// Substitute polynomials for variables.
    pub fn substitute(&self, f: impl Fn(Var) -> Option<Polynomial>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone());
            for &(v, e) in m.pairs() {
                let base = f(v).unwrap_or_else(|| Polynomial::var(v));
                t = &t * &base.pow(e);
            }
            out = &out + &t;
        }
        out
    }

    /// Divided difference `(f - s_i f) / (x_i - x_{i+1})`, computed
    /// monomial by monomial.
    pub fn divided_difference(&self, i: u32) -> Polynomial {
        let (xi, xj) = (Var::X(i), Var::X(i + 1));
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let a = m.exponent(xi);
            let b = m.exponent(xj);
            if a == b {
                continue;
            }
            let rest = Monomial(
                m.0.iter()
                    .copied()
                    .filter(|&(v, _)| v != xi && v != xj)
                    .collect(),
            );
            let (lo, hi, sign) = if a > b { (b, a, 1) } else { (a, b, -1) };
            // x^lo y^lo (x^p - y^p)/(x - y) with p = hi - lo
            let p = hi - lo;
            let coeff = c * int(sign);
            for k in 0..p {
                let mono = rest.mul(&Monomial::from_pairs([(xi, lo + p - 1 - k), (xj, lo + k)]));
                out.add_term(mono, coeff.clone());
            }
        }
        out
    }

    /// The operator `f -> d_i(f - x_{i+1} f)`.
    pub fn isobaric_divided_difference(&self, i: u32) -> Polynomial {
        let g = self - &(&Polynomial::x(i + 1) * self);
        g.divided_difference(i)
    }

    /// Exact division, failing if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let ord = TermOrder::natural();
        let (dm, dc) = divisor.lead_term(&ord)?;
        let mut rem = self.clone();
        let mut quot = Polynomial::zero();
        while !rem.is_zero() {
            let (lm, lc) = rem.lead_term(&ord)?;
            let qm = lm
                .checked_div(&dm)
                .ok_or_else(|| Error::Internal(format!("inexact division of {self} by {divisor}")))?;
            let qc = lc / &dc;
            let t = Polynomial::term(qc, qm);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Ok(quot)
    }

    /// Evaluate with every variable replaced by `f(v)`.
    pub fn evaluate(&self, f: impl Fn(Var) -> Coeff) -> Coeff {
        let mut total = Coeff::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.pairs() {
                let x = f(v);
                for _ in 0..e {
                    t *= &x;
                }
            }
            total += t;
        }
        total
    }

    /// Render with terms in descending `ord`.
    pub fn render(&self, ord: &TermOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.sorted_terms(ord).into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&m.to_string());
            } else {
                s.push_str(&format!("{abs}*{m}"));
            }
        }
        s
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .sorted_terms(&TermOrder::natural())
            .into_iter()
            .map(|(m, c)| {
                let exps: Vec<Value> = m
                    .pairs()
                    .iter()
                    .map(|&(v, e)| match v {
                        Var::Z(i, j) => json!(["z", i, j, e]),
                        Var::X(i) => json!(["x", i, e]),
                        Var::Y(i) => json!(["y", i, e]),
                        Var::T => json!(["t", e]),
                    })
                    .collect();
                json!({"coefficient": c.to_string(), "exponents": exps})
            })
            .collect();
        Value::Array(terms)
    }

    pub fn from_json(v: &Value) -> Result<Polynomial> {
        let bad = |what: &str| Error::Parse(format!("polynomial JSON: {what}"));
        let mut p = Polynomial::zero();
        for t in v.as_array().ok_or_else(|| bad("expected a list of terms"))? {
            let c: Coeff = t
                .get("coefficient")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("missing coefficient"))?
                .parse()
                .map_err(|_| bad("bad coefficient"))?;
            let mut pairs = Vec::new();
            for e in t
                .get("exponents")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing exponents"))?
            {
                let e = e.as_array().ok_or_else(|| bad("bad exponent entry"))?;
                let fam = e.first().and_then(Value::as_str).ok_or_else(|| bad("missing family"))?;
                let nums: Vec<u32> = e[1..]
                    .iter()
                    .map(|x| x.as_u64().and_then(|x| u32::try_from(x).ok()))
                    .collect::<Option<_>>()
                    .ok_or_else(|| bad("bad index"))?;
                let (var, exp) = match (fam, nums.as_slice()) {
                    ("z", [i, j, k]) if *i > 0 && *j > 0 => (Var::Z(*i, *j), *k),
                    ("x", [i, k]) if *i > 0 => (Var::X(*i), *k),
                    ("y", [i, k]) if *i > 0 => (Var::Y(*i), *k),
                    ("t", [k]) => (Var::T, *k),
                    _ => return Err(bad("unknown variable")),
                };
                pairs.push((var, exp));
            }
            p.add_term(Monomial::from_pairs(pairs), c);
        }
        Ok(p)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&TermOrder::natural()))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&int(-1))
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Determinant of the submatrix of the generic matrix on the given rows
/// and columns, by Laplace expansion along the first row.
pub fn generic_minor(rows: &[u32], cols: &[u32]) -> Polynomial {
    assert_eq!(rows.len(), cols.len(), "minor needs a square index set");
    assert!(!rows.is_empty());
    fn expand(rows: &[u32], cols: &[u32]) -> Polynomial {
        if rows.len() == 1 {
            return Polynomial::z(rows[0], cols[0]);
        }
        let mut out = Polynomial::zero();
        for (k, &c) in cols.iter().enumerate() {
            let rest: Vec<u32> = cols.iter().copied().filter(|&d| d != c).collect();
            let sub = expand(&rows[1..], &rest);
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let term = sub.mul_monomial(&Monomial::var(Var::Z(rows[0], c)));
            out = if sign == 1 { &out + &term } else { &out - &term };
        }
        out
    }
    expand(rows, cols)
}

/// The antidiagonal monomial `z[r1,c_k] z[r2,c_{k-1}] ... z[r_k,c_1]`.
pub fn antidiagonal_monomial(rows: &[u32], cols: &[u32]) -> Monomial {
    Monomial::from_vars(
        rows.iter()
            .zip(cols.iter().rev())
            .map(|(&r, &c)| Var::Z(r, c)),
    )
}

// ---- text grammar ----

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn index(&mut self) -> Result<u32> {
        let n = self.number()?;
        u32::try_from(n)
            .ok()
            .filter(|&k| k >= 1)
            .ok_or_else(|| self.err("variable index must be a positive integer"))
    }

    fn coefficient(&mut self) -> Result<Coeff> {
        let num = self.number()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den = self.number()?;
            if den.is_zero() {
                return Err(self.err("zero denominator"));
            }
            Ok(Coeff::new(num, den))
        } else {
            Ok(Coeff::from_integer(num))
        }
    }

    fn variable(&mut self) -> Result<Var> {
        let c = self.peek().ok_or_else(|| self.err("expected a variable"))?;
        self.pos += 1;
        match c {
            b'z' => {
                self.expect(b'[')?;
                let i = self.index()?;
                self.expect(b',')?;
                let j = self.index()?;
                self.expect(b']')?;
                Ok(Var::Z(i, j))
            }
            b'x' | b'y' => {
                self.expect(b'[')?;
                let i = self.index()?;
                self.expect(b']')?;
                Ok(if c == b'x' { Var::X(i) } else { Var::Y(i) })
            }
            b't' => Ok(Var::T),
            _ => {
                self.pos -= 1;
                Err(self.err("expected a variable"))
            }
        }
    }

    fn factor(&mut self, coeff: &mut Coeff, pairs: &mut Vec<(Var, u32)>) -> Result<()> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                *coeff *= self.coefficient()?;
            }
            _ => {
                let v = self.variable()?;
                let e = if self.eat(b'^') {
                    u32::try_from(self.number()?).map_err(|_| self.err("exponent too large"))?
                } else {
                    1
                };
                pairs.push((v, e));
            }
        }
        Ok(())
    }

    fn term(&mut self) -> Result<(Monomial, Coeff)> {
        let mut coeff = Coeff::one();
        let mut pairs = Vec::new();
        self.factor(&mut coeff, &mut pairs)?;
        while self.eat(b'*') {
            self.factor(&mut coeff, &mut pairs)?;
        }
        Ok((Monomial::from_pairs(pairs), coeff))
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let mut p = Polynomial::zero();
        let mut sign = if self.eat(b'-') {
            -1
        } else {
            self.eat(b'+');
            1
        };
        loop {
            let (m, c) = self.term()?;
            p.add_term(m, c * int(sign));
            if self.eat(b'+') {
                sign = 1;
            } else if self.eat(b'-') {
                sign = -1;
            } else {
                break;
            }
        }
        if self.peek().is_some() {
            return Err(self.err("unexpected character"));
        }
        Ok(p)
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parser {
            s: s.as_bytes(),
            pos: 0,
        }
        .polynomial()
    }
}
