//! Buchberger's algorithm over the rationals, plus ideal-level operations
//! built on it: membership, equality, trimming, and intersection.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::asm::{PartialAsm, RankTable};
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::poly::{Monomial, OrderKind, Polynomial, TermOrder, Var};

/// Default cap on the number of S-pair reductions per basis computation.
pub const DEFAULT_BUDGET: usize = 200_000;

type Exp = Vec<u16>;

/// Dense representation local to one computation: terms ascending, so
/// the lead term is last.
#[derive(Clone, Debug)]
struct DPoly {
    terms: Vec<(Exp, BigRational)>,
}

struct Ring {
    vars: Vec<Var>,
    kind: OrderKind,
}

impl Ring {
    fn new(polys: &[&Polynomial], ord: &TermOrder) -> Ring {
        let mut vars: Vec<Var> = polys.iter().flat_map(|p| p.variables()).collect();
        vars.sort_by_key(|&v| ord.key(v));
        vars.dedup();
        Ring {
            vars,
            kind: ord.kind(),
        }
    }

    fn cmp(&self, a: &Exp, b: &Exp) -> Ordering {
        match self.kind {
            OrderKind::Lex => a.cmp(b),
            OrderKind::GRevLex => {
                let da: u32 = a.iter().map(|&e| e as u32).sum();
                let db: u32 = b.iter().map(|&e| e as u32).sum();
                da.cmp(&db).then_with(|| {
                    for k in (0..a.len()).rev() {
                        if a[k] != b[k] {
                            return b[k].cmp(&a[k]);
                        }
                    }
                    Ordering::Equal
                })
            }
        }
    }

    fn to_dense(&self, p: &Polynomial) -> Result<DPoly> {
        let mut terms: Vec<(Exp, BigRational)> = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            let mut e = vec![0u16; self.vars.len()];
            for &(v, k) in m.pairs() {
                let idx = self.vars.iter().position(|&w| w == v).unwrap();
                e[idx] = u16::try_from(k)
                    .map_err(|_| Error::Invalid("exponent too large for the Gröbner engine".into()))?;
            }
            terms.push((e, c.clone()));
        }
        terms.sort_by(|a, b| self.cmp(&a.0, &b.0));
        Ok(DPoly { terms })
    }

    fn to_poly(&self, p: &DPoly) -> Polynomial {
        Polynomial::from_terms(p.terms.iter().map(|(e, c)| (self.monomial(e), c.clone())))
    }

    fn monomial(&self, e: &Exp) -> Monomial {
        Monomial::from_pairs(
            e.iter()
                .zip(&self.vars)
                .filter(|(&k, _)| k > 0)
                .map(|(&k, &v)| (v, k as u32)),
        )
    }

    /// `p - c * x^shift * q`.
    fn sub_mul(&self, p: &DPoly, c: &BigRational, shift: &Exp, q: &DPoly) -> DPoly {
        let scaled: Vec<(Exp, BigRational)> = q
            .terms
            .iter()
            .map(|(e, d)| (add_exp(e, shift), d * c))
            .collect();
        let (a, b) = (&p.terms, &scaled);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match self.cmp(&a[i].0, &b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0.clone(), -b[j].1.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = &a[i].1 - &b[j].1;
                    if !s.is_zero() {
                        out.push((a[i].0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(e, d)| (e.clone(), -d.clone())));
        DPoly { terms: out }
    }

    /// Fully reduce `p` modulo `basis`.
    fn reduce(&self, mut p: DPoly, basis: &[&DPoly]) -> DPoly {
        let mut rem: Vec<(Exp, BigRational)> = Vec::new();
        while let Some((lm, lc)) = p.terms.last().cloned() {
            let reducer = basis.iter().find(|g| divides(lead(g), &lm));
            match reducer {
                Some(g) => {
                    let shift = sub_exp(&lm, lead(g));
                    let c = &lc / &g.terms.last().unwrap().1;
                    p = self.sub_mul(&p, &c, &shift, g);
                }
                None => {
                    p.terms.pop();
                    rem.push((lm, lc));
                }
            }
        }
        rem.reverse();
        DPoly { terms: rem }
    }

    fn s_poly(&self, f: &DPoly, g: &DPoly) -> DPoly {
        let l = lcm_exp(lead(f), lead(g));
        let cf = &f.terms.last().unwrap().1;
        let cg = &g.terms.last().unwrap().1;
        let a = DPoly {
            terms: f
                .terms
                .iter()
                .map(|(e, c)| (add_exp(e, &sub_exp(&l, lead(f))), c / cf))
                .collect(),
        };
        self.sub_mul(&a, &(BigRational::one() / cg), &sub_exp(&l, lead(g)), g)
    }
}

fn lead(p: &DPoly) -> &Exp {
    &p.terms.last().expect("nonzero polynomial").0
}

fn make_monic(p: &mut DPoly) {
    if let Some((_, lc)) = p.terms.last() {
        let inv = BigRational::one() / lc;
        for t in p.terms.iter_mut() {
            t.1 = &t.1 * &inv;
        }
    }
}

fn divides(a: &Exp, b: &Exp) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn add_exp(a: &Exp, b: &Exp) -> Exp {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_exp(a: &Exp, b: &Exp) -> Exp {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn lcm_exp(a: &Exp, b: &Exp) -> Exp {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &Exp, b: &Exp) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

fn degree(e: &Exp) -> u32 {
    e.iter().map(|&k| k as u32).sum()
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Exp,
}

struct Engine<'r> {
    ring: &'r Ring,
    polys: Vec<DPoly>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl Engine<'_> {
    fn update(&mut self, h: usize) {
        let lh = lead(&self.polys[h]).clone();
        let mut candidates: Vec<Pair> = self
            .active
            .iter()
            .map(|&g| Pair {
                i: g,
                j: h,
                lcm: lcm_exp(lead(&self.polys[g]), &lh),
            })
            .collect();
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = candidates.pop() {
            let is_coprime = coprime(lead(&self.polys[p.i]), &lh);
            let dominated = candidates
                .iter()
                .chain(kept.iter())
                .any(|q| divides(&q.lcm, &p.lcm));
            if is_coprime || !dominated {
                kept.push(p);
            }
        }
        let fresh: Vec<Pair> = kept
            .into_iter()
            .filter(|p| !coprime(lead(&self.polys[p.i]), &lh))
            .collect();
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(divides(&lh, &p.lcm)
                && lcm_exp(lead(&polys[p.i]), &lh) != p.lcm
                && lcm_exp(lead(&polys[p.j]), &lh) != p.lcm)
        });
        self.pairs.extend(fresh);
        self.active
            .retain(|&g| !divides(&lh, lead(&polys[g])));
        self.active.push(h);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let ring = self.ring;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                degree(&a.lcm)
                    .cmp(&degree(&b.lcm))
                    .then_with(|| ring.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn add(&mut self, mut p: DPoly) {
        make_monic(&mut p);
        self.polys.push(p);
        let h = self.polys.len() - 1;
        self.update(h);
    }

    fn active_polys(&self) -> Vec<&DPoly> {
        self.active.iter().map(|&k| &self.polys[k]).collect()
    }
}

/// Reduced Gröbner basis with the default budget.
pub fn groebner_basis(gens: &[Polynomial], ord: &TermOrder) -> Result<Vec<Polynomial>> {
    groebner_basis_with_budget(gens, ord, DEFAULT_BUDGET)
}

/// Reduced Gröbner basis: monic, interreduced, sorted by lead monomial
/// in descending order.
pub fn groebner_basis_with_budget(
    gens: &[Polynomial],
    ord: &TermOrder,
    budget: usize,
) -> Result<Vec<Polynomial>> {
    let refs: Vec<&Polynomial> = gens.iter().collect();
    let ring = Ring::new(&refs, ord);
    let mut engine = Engine {
        ring: &ring,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    let mut input: Vec<DPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| ring.to_dense(g))
        .collect::<Result<_>>()?;
    input.sort_by(|a, b| ring.cmp(lead(a), lead(b)));
    for g in input {
        let r = ring.reduce(g, &engine.active_polys());
        if !r.terms.is_empty() {
            engine.add(r);
        }
    }
    let mut reductions = 0usize;
    while let Some(pair) = engine.next_pair() {
        reductions += 1;
        if reductions > budget {
            return Err(Error::BudgetExceeded(budget));
        }
        let s = ring.s_poly(&engine.polys[pair.i], &engine.polys[pair.j]);
        let r = ring.reduce(s, &engine.active_polys());
        if !r.terms.is_empty() {
            engine.add(r);
        }
    }
    let mut basis: Vec<DPoly> = engine.active.iter().map(|&k| engine.polys[k].clone()).collect();
    // interreduce tails
    for k in 0..basis.len() {
        let others: Vec<&DPoly> = basis
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != k)
            .map(|(_, p)| p)
            .collect();
        let mut head = basis[k].clone();
        let top = head.terms.pop().unwrap();
        let mut tail = ring.reduce(head, &others);
        tail.terms.push(top);
        make_monic(&mut tail);
        basis[k] = tail;
    }
    basis.sort_by(|a, b| ring.cmp(lead(b), lead(a)));
    Ok(basis.iter().map(|p| ring.to_poly(p)).collect())
}

/// Normal form of `f` modulo `basis` (which should be a Gröbner basis
/// for the result to be canonical).
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], ord: &TermOrder) -> Polynomial {
    let mut refs: Vec<&Polynomial> = basis.iter().collect();
    refs.push(f);
    let ring = Ring::new(&refs, ord);
    let dense: Vec<DPoly> = basis
        .iter()
        .filter(|b| !b.is_zero())
        .map(|b| ring.to_dense(b).expect("exponents fit"))
        .collect();
    let dref: Vec<&DPoly> = dense.iter().collect();
    ring.to_poly(&ring.reduce(ring.to_dense(f).expect("exponents fit"), &dref))
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &TermOrder) -> Polynomial {
    let ring = Ring::new(&[f, g], ord);
    let (a, b) = (ring.to_dense(f).unwrap(), ring.to_dense(g).unwrap());
    ring.to_poly(&ring.s_poly(&a, &b))
}

/// Minimal generators of the lead-term ideal.
pub fn initial_ideal(gens: &[Polynomial], ord: &TermOrder) -> Result<Vec<Monomial>> {
    initial_ideal_with_budget(gens, ord, DEFAULT_BUDGET)
}

pub fn initial_ideal_with_budget(
    gens: &[Polynomial],
    ord: &TermOrder,
    budget: usize,
) -> Result<Vec<Monomial>> {
    let basis = groebner_basis_with_budget(gens, ord, budget)?;
    let leads = basis
        .iter()
        .map(|g| g.lead_term(ord).map(|t| t.0))
        .collect::<Result<Vec<_>>>()?;
    Ok(MonomialIdeal::minimalize(leads))
}

/// Cached ASM data attached to an ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsmCache {
    pub asm: PartialAsm,
    pub rank_table: RankTable,
}

/// An ideal of the polynomial ring over the `rows x cols` generic matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    gens: Vec<Polynomial>,
    rows: usize,
    cols: usize,
    cache: Option<AsmCache>,
}

impl Ideal {
    pub fn new(gens: Vec<Polynomial>, rows: usize, cols: usize) -> Result<Ideal> {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            for v in g.variables() {
                match v {
                    Var::Z(i, j) if i as usize <= rows && j as usize <= cols => {}
                    Var::Z(..) => {
                        return Err(Error::Invalid(format!(
                            "variable {v} lies outside the {rows}x{cols} grid"
                        )))
                    }
                    _ => {
                        return Err(Error::Invalid(format!(
                            "ideal generators may only use z variables, found {v}"
                        )))
                    }
                }
            }
        }
        Ok(Ideal {
            gens,
            rows,
            cols,
            cache: None,
        })
    }

    pub fn generators(&self) -> &[Polynomial] {
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

    pub fn cache(&self) -> Option<&AsmCache> {
        self.cache.as_ref()
    }

    pub fn attach_asm(&mut self, asm: PartialAsm) {
        let rank_table = asm.rank_table();
        self.cache = Some(AsmCache { asm, rank_table });
    }

    pub fn with_asm(mut self, asm: PartialAsm) -> Ideal {
        self.attach_asm(asm);
        self
    }

    /// The attached ASM.
    pub fn asm(&self) -> Result<&PartialAsm> {
        self.cache.as_ref().map(|c| &c.asm).ok_or(Error::NoAsmAttached)
    }

    /// `{rows, cols, generators, asm}`; `asm` is null without a cache.
    pub fn to_json(&self) -> serde_json::Value {
        let gens: Vec<serde_json::Value> = self.gens.iter().map(Polynomial::to_json).collect();
        let asm = match &self.cache {
            Some(c) => serde_json::to_value(&c.asm).expect("matrices serialize"),
            None => serde_json::Value::Null,
        };
        serde_json::json!({"rows": self.rows, "cols": self.cols, "generators": gens, "asm": asm})
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Ideal> {
        let bad = |what: &str| Error::Parse(format!("ideal JSON: {what}"));
        let dim = |key: &str| {
            v.get(key)
                .and_then(serde_json::Value::as_u64)
                .map(|x| x as usize)
                .ok_or_else(|| bad(&format!("missing {key}")))
        };
        let gens = v
            .get("generators")
            .and_then(serde_json::Value::as_array)
            .ok_or_else(|| bad("missing generators"))?
            .iter()
            .map(Polynomial::from_json)
            .collect::<Result<Vec<_>>>()?;
        let mut ideal = Ideal::new(gens, dim("rows")?, dim("cols")?)?;
        match v.get("asm") {
            None | Some(serde_json::Value::Null) => {}
            Some(a) => {
                let asm: PartialAsm =
                    serde_json::from_value(a.clone()).map_err(|e| bad(&e.to_string()))?;
                ideal.attach_asm(asm);
            }
        }
        Ok(ideal)
    }

    pub fn antidiagonal_order(&self) -> TermOrder {
        TermOrder::antidiagonal(self.rows, self.cols)
    }

    /// Reduced Gröbner basis in the antidiagonal order.
    pub fn groebner_basis(&self, budget: usize) -> Result<Vec<Polynomial>> {
        groebner_basis_with_budget(&self.gens, &self.antidiagonal_order(), budget)
    }

    pub fn initial_ideal(&self, ord: &TermOrder, budget: usize) -> Result<MonomialIdeal> {
        let gens = initial_ideal_with_budget(&self.gens, ord, budget)?;
        MonomialIdeal::new(gens, self.rows, self.cols)
    }

    pub fn contains(&self, f: &Polynomial, budget: usize) -> Result<bool> {
        let ord = self.antidiagonal_order();
        let basis = groebner_basis_with_budget(&self.gens, &ord, budget)?;
        Ok(normal_form(f, &basis, &ord).is_zero())
    }

    /// Same ideal, compared through reduced bases in the antidiagonal order.
    pub fn equals(&self, other: &Ideal, budget: usize) -> Result<bool> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Invalid(format!(
                "ideals live in different rings ({}x{} vs {}x{})",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.groebner_basis(budget)? == other.groebner_basis(budget)?)
    }

    /// Intersection by elimination of an auxiliary variable `t` from
    /// `t*I + (1-t)*J`.
    pub fn intersect(&self, other: &Ideal, budget: usize) -> Result<Ideal> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Invalid("ideals live in different rings".into()));
        }
        let t = Polynomial::var(Var::T);
        let one_minus_t = &Polynomial::one() - &t;
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|f| &t * f).collect();
        gens.extend(other.gens.iter().map(|g| &one_minus_t * g));
        let mut priority = vec![Var::T];
        priority.extend(self.antidiagonal_order().priority().iter().copied());
        let ord = TermOrder::lex(priority);
        let basis = groebner_basis_with_budget(&gens, &ord, budget)?;
        let kept = basis
            .into_iter()
            .filter(|g| !g.variables().contains(&Var::T))
            .collect();
        Ideal::new(kept, self.rows, self.cols)
    }

    /// A minimal generating set for a homogeneous ideal: the reduced
    /// antidiagonal basis, thinned by increasing degree, sorted by
    /// degree and then ascending in the natural order.
    pub fn trim(&self, budget: usize) -> Result<Vec<Polynomial>> {
        let ord = self.antidiagonal_order();
        let natural = TermOrder::natural();
        let mut basis = self.groebner_basis(budget)?;
        basis.sort_by(|a, b| {
            a.degree().cmp(&b.degree()).then_with(|| {
                let la = a.lead_term(&natural).unwrap().0;
                let lb = b.lead_term(&natural).unwrap().0;
                natural.cmp(&la, &lb)
            })
        });
        let mut kept: Vec<Polynomial> = Vec::new();
        let mut kept_basis: Vec<Polynomial> = Vec::new();
        for f in basis {
            if !kept.is_empty() && normal_form(&f, &kept_basis, &ord).is_zero() {
                continue;
            }
            kept.push(f);
            kept_basis = groebner_basis_with_budget(&kept, &ord, budget)?;
        }
        Ok(kept)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::generic_minor;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn assert_s_pairs_vanish(basis: &[Polynomial], ord: &TermOrder) {
        for a in basis {
            for b in basis {
                let s = s_polynomial(a, b, ord);
                assert!(normal_form(&s, basis, ord).is_zero(), "S({a}, {b}) does not reduce");
            }
        }
    }

    #[test]
    fn linear_example() {
        let ord = TermOrder::lex(vec![Var::X(1), Var::X(2), Var::X(3)]);
        let gb = groebner_basis(&[p("x[1] - x[2]"), p("x[2] - x[3]")], &ord).unwrap();
        assert_eq!(gb, vec![p("x[1] - x[3]"), p("x[2] - x[3]")]);
        assert_s_pairs_vanish(&gb, &ord);
    }

    #[test]
    fn single_monomial() {
        let ord = TermOrder::natural();
        let gb = groebner_basis(&[p("z[1,2]*z[2,1]")], &ord).unwrap();
        assert_eq!(gb, vec![p("z[1,2]*z[2,1]")]);
        let gb = groebner_basis(&[p("3*z[1,2]*z[2,1]")], &ord).unwrap();
        assert_eq!(gb, vec![p("z[1,2]*z[2,1]")]);
        assert!(groebner_basis(&[], &ord).unwrap().is_empty());
        assert_eq!(groebner_basis(&[p("2")], &ord).unwrap(), vec![p("1")]);
    }

    #[test]
    fn twisted_cubic() {
        let ord = TermOrder::grevlex(vec![Var::X(1), Var::X(2), Var::X(3), Var::X(4)]);
        let gens = [
            p("x[1]*x[3] - x[2]^2"),
            p("x[2]*x[4] - x[3]^2"),
            p("x[1]*x[4] - x[2]*x[3]"),
        ];
        let gb = groebner_basis(&gens, &ord).unwrap();
        assert_eq!(gb.len(), 3);
        assert_s_pairs_vanish(&gb, &ord);
        let lex = TermOrder::lex(vec![Var::X(1), Var::X(2), Var::X(3), Var::X(4)]);
        let gb = groebner_basis(&gens, &lex).unwrap();
        assert_s_pairs_vanish(&gb, &lex);
        for g in &gens {
            assert!(normal_form(g, &gb, &lex).is_zero());
        }
    }

    #[test]
    fn shuffled_generators_give_same_basis() {
        let ord = TermOrder::antidiagonal(3, 3);
        let mut gens = vec![
            generic_minor(&[1, 2], &[1, 2]),
            generic_minor(&[2, 3], &[2, 3]),
            p("z[1,3] + z[3,1]"),
            generic_minor(&[1, 3], &[1, 3]),
        ];
        let a = groebner_basis(&gens, &ord).unwrap();
        assert_s_pairs_vanish(&a, &ord);
        gens.reverse();
        gens.swap(0, 2);
        assert_eq!(groebner_basis(&gens, &ord).unwrap(), a);
    }

    #[test]
    fn budget_guard() {
        let ord = TermOrder::grevlex(vec![Var::X(1), Var::X(2), Var::X(3), Var::X(4)]);
        let gens = [
            p("x[1]*x[3] - x[2]^2"),
            p("x[2]*x[4] - x[3]^2"),
            p("x[1]*x[4] - x[2]*x[3]"),
        ];
        assert_eq!(
            groebner_basis_with_budget(&gens, &ord, 0),
            Err(Error::BudgetExceeded(0))
        );
    }

    #[test]
    fn intersections() {
        let i = Ideal::new(vec![p("z[1,1]")], 2, 2).unwrap();
        let j = Ideal::new(vec![p("z[1,2]")], 2, 2).unwrap();
        let k = i.intersect(&j, DEFAULT_BUDGET).unwrap();
        assert_eq!(k.generators(), &[p("z[1,1]*z[1,2]")]);
        let m = generic_minor(&[1, 2], &[1, 2]);
        let a = Ideal::new(vec![m.clone(), p("z[1,1]")], 2, 2).unwrap();
        assert!(a.intersect(&a, DEFAULT_BUDGET).unwrap().equals(&a, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn membership_and_equality() {
        let m = generic_minor(&[1, 2], &[1, 2]);
        let a = Ideal::new(vec![m.clone(), p("z[1,1]")], 2, 2).unwrap();
        let b = Ideal::new(vec![p("z[1,1]"), p("z[1,2]*z[2,1]")], 2, 2).unwrap();
        assert!(a.equals(&b, DEFAULT_BUDGET).unwrap());
        assert!(a.contains(&p("z[1,1]*z[2,2]"), DEFAULT_BUDGET).unwrap());
        assert!(!a.contains(&p("z[2,2]"), DEFAULT_BUDGET).unwrap());
        let c = Ideal::new(vec![p("z[1,1]")], 2, 2).unwrap();
        assert!(!a.equals(&c, DEFAULT_BUDGET).unwrap());
        assert!(Ideal::new(vec![p("z[3,1]")], 2, 2).is_err());
        assert!(Ideal::new(vec![p("x[1]")], 2, 2).is_err());
    }

    #[test]
    fn json_round_trip() {
        let a = PartialAsm::new(vec![vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]]).unwrap();
        let i = Ideal::new(vec![p("z[1,1]"), p("z[1,2]*z[2,1] - z[1,1]*z[2,2]")], 3, 3)
            .unwrap()
            .with_asm(a);
        assert_eq!(Ideal::from_json(&i.to_json()).unwrap(), i);
        let bare = Ideal::new(vec![p("z[1,1]")], 2, 2).unwrap();
        assert_eq!(Ideal::from_json(&bare.to_json()).unwrap(), bare);
    }

    #[test]
    fn trimming() {
        let m = generic_minor(&[1, 2], &[1, 2]);
        let i = Ideal::new(vec![m, p("z[1,1]"), p("z[1,1]*z[2,2]")], 2, 2).unwrap();
        let t = i.trim(DEFAULT_BUDGET).unwrap();
        assert_eq!(t, vec![p("z[1,1]"), p("z[1,2]*z[2,1]")]);
    }
}
