//! Schreyer resolutions and their minimization.
//!
//! Starting from a reduced Gröbner basis of `I`, the S-pair syzygies of a
//! module Gröbner basis form a Gröbner basis of the syzygy module for the
//! order induced by the leading terms (Schreyer's theorem). Iterating gives a
//! free resolution of `S/I`; over a graded ring it is then made minimal by
//! repeatedly splitting off isomorphisms given by nonzero constant entries.

use super::{buchberger, GroebnerBasis, GroebnerError, Limits};
use crate::poly::{MPoly, Monomial, MonomialOrder, RingRef};
use crate::rational::Rat;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::time::Instant;

/// Matrix with polynomial entries, `rows x cols`, acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: RingRef,
    rows: usize,
    cols: usize,
    data: Vec<MPoly>,
}

impl PolyMatrix {
    pub fn zeros(ring: &RingRef, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            data: vec![MPoly::zero(ring); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &MPoly {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: MPoly) {
        self.data[r * self.cols + c] = p;
    }

    pub fn column(&self, c: usize) -> Vec<MPoly> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = PolyMatrix::zeros(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = MPoly::zero(&self.ring);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(MPoly::is_zero)
    }

    /// Entries as canonical text, row-major.
    pub fn to_text_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).to_text()).collect())
            .collect()
    }

    fn find_unit(&self) -> Option<(usize, usize)> {
        (0..self.rows)
            .flat_map(|r| (0..self.cols).map(move |c| (r, c)))
            .find(|&(r, c)| {
                let e = self.get(r, c);
                !e.is_zero() && e.is_constant()
            })
    }

    fn delete_row(&mut self, r: usize) {
        self.data.drain(r * self.cols..(r + 1) * self.cols);
        self.rows -= 1;
    }

    fn delete_col(&mut self, c: usize) {
        let cols = self.cols;
        let mut k = 0;
        self.data.retain(|_| {
            let keep = k % cols != c;
            k += 1;
            keep
        });
        self.cols -= 1;
    }
}

/// A finite free resolution `0 <- F_0 <- F_1 <- ... <- F_k <- 0` of `S/I`.
/// `maps()[t]` is the matrix of `F_{t+1} -> F_t`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    ring: RingRef,
    maps: Vec<PolyMatrix>,
    betti: Vec<usize>,
    /// Every consecutive composite was verified to vanish and the
    /// construction did not stop early.
    pub exact: bool,
    /// Stopped at the length bound with a nonzero syzygy module remaining.
    pub truncated: bool,
    /// The unit-splitting minimization ran on homogeneous input, so the
    /// result is the minimal graded resolution.
    pub minimal: bool,
}

impl FreeResolution {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn maps(&self) -> &[PolyMatrix] {
        &self.maps
    }

    pub fn betti(&self) -> &[usize] {
        &self.betti
    }

    /// Number of nonzero maps, i.e. the projective dimension of `S/I` when
    /// the resolution is minimal.
    pub fn length(&self) -> usize {
        self.betti.iter().rposition(|&b| b > 0).unwrap_or(0)
    }

    pub fn composites_vanish(&self) -> bool {
        self.maps.windows(2).all(|w| w[0].mul(&w[1]).is_zero())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(t, &b)| if t % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

pub fn betti(res: &FreeResolution) -> Vec<usize> {
    res.betti.clone()
}

type Term = (Monomial, usize, Rat);

#[derive(Clone, Debug)]
struct BasisLead {
    mono: Monomial,
    comp: usize,
    total: Monomial,
}

/// Leading-term data of every free module built so far; `levels[k - 1]`
/// describes the basis of `F_k`.
struct Frame {
    order: MonomialOrder,
    nvars: usize,
    levels: Vec<Vec<BasisLead>>,
}

impl Frame {
    fn cmp(&self, level: usize, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        if level == 0 {
            return self.order.cmp(a.0, b.0).then_with(|| b.1.cmp(&a.1));
        }
        let la = &self.levels[level - 1][a.1];
        let lb = &self.levels[level - 1][b.1];
        let c = self.order.cmp(&a.0.mul(&la.total), &b.0.mul(&lb.total));
        if c != Ordering::Equal {
            return c;
        }
        self.cmp(level - 1, (&a.0.mul(&la.mono), la.comp), (&b.0.mul(&lb.mono), lb.comp))
            .then_with(|| b.1.cmp(&a.1))
    }

    fn canonical(&self, level: usize, mut terms: Vec<Term>) -> Vec<Term> {
        terms.sort_by(|x, y| self.cmp(level, (&y.0, y.1), (&x.0, x.1)));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == t.0 && last.1 == t.1 {
                    last.2 += t.2;
                    continue;
                }
            }
            if out.last().is_some_and(|l| l.2.is_zero()) {
                out.pop();
            }
            out.push(t);
        }
        if out.last().is_some_and(|l| l.2.is_zero()) {
            out.pop();
        }
        out
    }

    /// `a - c * m * b` at the given level.
    fn sub_mul(&self, level: usize, a: Vec<Term>, c: &Rat, m: &Monomial, b: &[Term]) -> Vec<Term> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut ai = a.into_iter().peekable();
        let mut bi = b.iter().map(|(t, k, v)| (t.mul(m), *k, -(v * c))).peekable();
        loop {
            let ord = match (ai.peek(), bi.peek()) {
                (Some(x), Some(y)) => self.cmp(level, (&x.0, x.1), (&y.0, y.1)),
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (None, None) => break,
            };
            match ord {
                Ordering::Greater => out.push(ai.next().unwrap()),
                Ordering::Less => out.push(bi.next().unwrap()),
                Ordering::Equal => {
                    let x = ai.next().unwrap();
                    let y = bi.next().unwrap();
                    let s = x.2 + y.2;
                    if !s.is_zero() {
                        out.push((x.0, x.1, s));
                    }
                }
            }
        }
        out
    }
}

fn lex_desc(a: &Monomial, b: &Monomial) -> Ordering {
    MonomialOrder::Lex.cmp(b, a)
}

/// Sorts module Gröbner basis elements by (lead component, lex-decreasing
/// lead monomial) so the Schreyer iteration stops after at most `nvars`
/// steps.
fn sort_for_schreyer(elems: &mut [Vec<Term>]) {
    elems.sort_by(|x, y| x[0].1.cmp(&y[0].1).then_with(|| lex_desc(&x[0].0, &y[0].0)));
}

struct Budget<'a> {
    limits: &'a Limits,
    spent: u64,
}

impl Budget<'_> {
    fn tick(&mut self) -> Result<(), GroebnerError> {
        self.spent += 1;
        let over = |reason: &str| GroebnerError::ResourceLimit {
            reason: reason.to_string(),
            pairs_processed: self.spent,
            max_degree_reached: 0,
        };
        if self.spent > self.limits.max_pairs {
            return Err(over("syzygy pair limit"));
        }
        if self.limits.deadline.is_some_and(|d| Instant::now() >= d) {
            return Err(over("timeout"));
        }
        Ok(())
    }
}

/// Schreyer syzygies of the monic module Gröbner basis `elems` living at
/// `level`. Returns elements of the next level (not yet sorted).
fn schreyer_step(frame: &Frame, level: usize, elems: &[Vec<Term>], budget: &mut Budget<'_>) -> Result<Vec<Vec<Term>>, GroebnerError> {
    let leads: Vec<(&Monomial, usize)> = elems.iter().map(|e| (&e[0].0, e[0].1)).collect();
    let masks: Vec<u128> = leads.iter().map(|(m, _)| m.support()).collect();
    let mut out = Vec::new();
    for i in 0..elems.len() {
        // Candidate multipliers m_ij = lcm / lead_i for j > i in the same component.
        let mut cands: Vec<(usize, Monomial)> = (i + 1..elems.len())
            .filter(|&j| leads[j].1 == leads[i].1)
            .map(|j| (j, leads[i].0.quotient_of(&leads[i].0.lcm(leads[j].0))))
            .collect();
        // Keep inclusion-minimal multipliers, first index wins on ties.
        let mut keep: Vec<(usize, Monomial)> = Vec::new();
        cands.sort_by(|a, b| a.1.degree().cmp(&b.1.degree()).then(a.0.cmp(&b.0)));
        for (j, m) in cands {
            if !keep.iter().any(|(_, k)| k.divides(&m)) {
                keep.push((j, m));
            }
        }
        keep.sort_by_key(|(j, _)| *j);
        for (j, mij) in keep {
            budget.tick()?;
            let mji = leads[j].0.quotient_of(&leads[i].0.lcm(leads[j].0));
            // S-vector m_ij g_i - m_ji g_j, then divide by the basis.
            let gi: Vec<Term> = elems[i].iter().map(|(t, k, c)| (t.mul(&mij), *k, c.clone())).collect();
            let mut rest = frame.sub_mul(level, gi, &Rat::one(), &mji, &elems[j]);
            let mut syz: Vec<Term> = vec![(mij.clone(), i, Rat::one()), (mji.clone(), j, -Rat::one())];
            while let Some((m, comp, c)) = rest.first().cloned() {
                let mask = m.support();
                let Some(l) = (0..elems.len()).find(|&l| {
                    leads[l].1 == comp && masks[l] & !mask == 0 && leads[l].0.divides(&m)
                }) else {
                    unreachable!("S-vector of a Gröbner basis must top-reduce to zero");
                };
                let q = leads[l].0.quotient_of(&m);
                rest = frame.sub_mul(level, rest, &c, &q, &elems[l]);
                syz.push((q, l, -c));
            }
            let syz = frame.canonical(level + 1, syz);
            debug_assert!(syz[0].0 == mij && syz[0].1 == i);
            out.push(syz);
        }
    }
    Ok(out)
}

fn to_matrix(ring: &RingRef, rows: usize, cols: &[Vec<Term>]) -> PolyMatrix {
    let mut buckets: Vec<Vec<Vec<(Monomial, Rat)>>> = vec![vec![Vec::new(); rows]; cols.len()];
    for (c, v) in cols.iter().enumerate() {
        for (m, r, k) in v {
            buckets[c][*r].push((m.clone(), k.clone()));
        }
    }
    let mut out = PolyMatrix::zeros(ring, rows, cols.len());
    for (c, col) in buckets.into_iter().enumerate() {
        for (r, terms) in col.into_iter().enumerate() {
            out.set(r, c, MPoly::from_terms(ring, terms));
        }
    }
    out
}

/// Level-1 syzygies of the basis: each entry is a vector of coefficients
/// `(a_1, ..., a_s)` with `sum a_i g_i = 0`, where `g_i` are the basis
/// generators in their stored order. Together they generate the syzygy
/// module.
pub fn syzygies(gb: &GroebnerBasis) -> Result<Vec<Vec<MPoly>>, GroebnerError> {
    let ring = gb.ring();
    let frame = Frame {
        order: ring.order(),
        nvars: ring.nvars(),
        levels: vec![gb
            .generators()
            .iter()
            .map(|g| {
                let lm = g.leading_monomial().unwrap().clone();
                BasisLead { mono: lm.clone(), comp: 0, total: lm }
            })
            .collect()],
    };
    let elems: Vec<Vec<Term>> = gb
        .generators()
        .iter()
        .map(|g| g.terms().iter().map(|(m, c)| (m.clone(), 0, c.clone())).collect())
        .collect();
    let limits = Limits::default();
    let mut budget = Budget { limits: &limits, spent: 0 };
    let syz = schreyer_step(&frame, 0, &elems, &mut budget)?;
    let m = to_matrix(ring, gb.len(), &syz);
    Ok((0..m.cols()).map(|c| m.column(c)).collect())
}

/// Free resolution of `S/<gens>`, minimized when the generators are
/// homogeneous. At most `max_len` maps are built; reaching the bound with a
/// nonzero syzygy module left sets `truncated`.
pub fn free_resolution(gens: &[MPoly], max_len: usize, limits: &Limits) -> Result<FreeResolution, GroebnerError> {
    let gb = buchberger(gens, limits)?;
    let homogeneous = gens.iter().all(MPoly::is_homogeneous);
    resolve_from_basis(&gb, max_len, limits, homogeneous)
}

pub fn resolve_from_basis(
    gb: &GroebnerBasis,
    max_len: usize,
    limits: &Limits,
    homogeneous: bool,
) -> Result<FreeResolution, GroebnerError> {
    let ring = gb.ring().clone();
    let mut budget = Budget { limits, spent: 0 };
    let mut frame = Frame {
        order: ring.order(),
        nvars: ring.nvars(),
        levels: Vec::new(),
    };
    let mut maps: Vec<PolyMatrix> = Vec::new();
    let mut truncated = false;

    let mut elems: Vec<Vec<Term>> = gb
        .generators()
        .iter()
        .map(|g| g.terms().iter().map(|(m, c)| (m.clone(), 0, c.clone())).collect())
        .collect();
    sort_for_schreyer(&mut elems);
    let mut rank_prev = 1usize;
    let mut level = 0usize;
    while !elems.is_empty() {
        if maps.len() == max_len {
            truncated = true;
            break;
        }
        maps.push(to_matrix(&ring, rank_prev, &elems));
        // The current elements become the basis of the next free module.
        let prev_totals: Vec<Monomial> = if level == 0 {
            vec![Monomial::one(frame.nvars)]
        } else {
            frame.levels[level - 1].iter().map(|b| b.total.clone()).collect()
        };
        frame.levels.push(
            elems
                .iter()
                .map(|e| BasisLead {
                    mono: e[0].0.clone(),
                    comp: e[0].1,
                    total: e[0].0.mul(&prev_totals[e[0].1]),
                })
                .collect(),
        );
        let mut next = schreyer_step(&frame, level, &elems, &mut budget)?;
        sort_for_schreyer(&mut next);
        rank_prev = elems.len();
        elems = next;
        level += 1;
    }

    let mut betti = vec![1usize];
    betti.extend(maps.iter().map(PolyMatrix::cols));
    if homogeneous {
        minimize(&mut maps, &mut betti);
    }
    let mut res = FreeResolution {
        ring,
        maps,
        betti,
        exact: false,
        truncated,
        minimal: homogeneous,
    };
    while res.maps.last().is_some_and(|m| m.cols() == 0) {
        res.maps.pop();
        res.betti.pop();
    }
    res.exact = !truncated && res.composites_vanish();
    Ok(res)
}

/// Splits off every isomorphism `S -> S` given by a nonzero constant entry,
/// until none is left.
fn minimize(maps: &mut [PolyMatrix], betti: &mut [usize]) {
    while let Some((t, a, b)) = maps
        .iter()
        .enumerate()
        .find_map(|(t, m)| m.find_unit().map(|(a, b)| (t, a, b)))
    {
        let m = &maps[t];
        let u_inv = m.get(a, b).constant_term().recip();
        let mut next = PolyMatrix::zeros(&m.ring, m.rows, m.cols);
        for r in 0..m.rows {
            for c in 0..m.cols {
                let e = m.get(r, c);
                let new = if r == a || c == b || m.get(a, c).is_zero() || m.get(r, b).is_zero() {
                    e.clone()
                } else {
                    let corr = &(m.get(r, b) * m.get(a, c)).scale(&u_inv);
                    e - corr
                };
                next.set(r, c, new);
            }
        }
        next.delete_row(a);
        next.delete_col(b);
        maps[t] = next;
        if t > 0 {
            maps[t - 1].delete_col(a);
        }
        if t + 1 < maps.len() {
            maps[t + 1].delete_row(b);
        }
        betti[t] -= 1;
        betti[t + 1] -= 1;
    }
}
