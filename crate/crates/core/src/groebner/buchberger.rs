//! Buchberger's algorithm with the Gebauer–Möller installation of the
//! product and chain criteria, normal selection strategy.

use super::reduce::{normal_form, top_reduce, Divisor};
use super::{GroebnerError, Limits};
use crate::poly::{MPoly, Monomial, MonomialOrder, RingRef};
use crate::rational::Rat;
use num_traits::One;
use std::cmp::Ordering;
use std::time::Instant;

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuchbergerStats {
    pub pairs_processed: u64,
    pub max_degree: u32,
    pub zero_reductions: u64,
}

pub(crate) struct Engine<'l> {
    ring: RingRef,
    polys: Vec<MPoly>,
    /// Indices into `polys` forming the current basis.
    basis: Vec<usize>,
    pairs: Vec<Pair>,
    limits: &'l Limits,
    pub stats: BuchbergerStats,
}

impl<'l> Engine<'l> {
    pub fn new(ring: &RingRef, limits: &'l Limits) -> Self {
        Engine {
            ring: ring.clone(),
            polys: Vec::new(),
            basis: Vec::new(),
            pairs: Vec::new(),
            limits,
            stats: BuchbergerStats::default(),
        }
    }

    /// Seeds the engine with a set already known to be a Gröbner basis; no
    /// pairs among its members are scheduled.
    pub fn seed_basis(&mut self, gb: &[MPoly]) {
        for g in gb {
            self.polys.push(g.monic());
            self.basis.push(self.polys.len() - 1);
        }
    }

    fn divisors(&self) -> Vec<Divisor<'_>> {
        self.basis.iter().map(|&k| Divisor::new(&self.polys[k])).collect()
    }

    /// Reduces `f` against the current basis and inserts it if nonzero.
    /// Returns `true` when the ideal became the unit ideal.
    pub fn insert(&mut self, f: &MPoly) -> bool {
        let h = {
            let divs = self.divisors();
            top_reduce(&self.ring, f.clone(), &divs)
        };
        if h.is_zero() {
            self.stats.zero_reductions += 1;
            return false;
        }
        let h = h.monic();
        let unit = h.leading_monomial().unwrap().is_one();
        self.update(h);
        unit
    }

    fn update(&mut self, h: MPoly) {
        self.polys.push(h);
        let hk = self.polys.len() - 1;
        let lh = self.polys[hk].leading_monomial().unwrap().clone();

        let cand: Vec<Pair> = self
            .basis
            .iter()
            .map(|&g| Pair {
                i: g,
                j: hk,
                lcm: lh.lcm(self.polys[g].leading_monomial().unwrap()),
            })
            .collect();
        let lead_of = |p: &Pair, polys: &[MPoly]| polys[p.i].leading_monomial().unwrap().clone();

        // Chain criterion among the new pairs, coprime pairs survive this stage.
        let mut kept: Vec<Pair> = Vec::new();
        for (idx, p) in cand.iter().enumerate() {
            let lg = lead_of(p, &self.polys);
            let coprime = lg.coprime(&lh);
            let dominated = cand[idx + 1..].iter().any(|q| q.lcm.divides(&p.lcm))
                || kept.iter().any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p.clone());
            }
        }
        // Product criterion.
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|p| !lead_of(p, &self.polys).coprime(&lh))
            .collect();

        // Old pairs made redundant by h.
        let polys = &self.polys;
        self.pairs.retain(|p| {
            if !lh.divides(&p.lcm) {
                return true;
            }
            let li = polys[p.i].leading_monomial().unwrap();
            let lj = polys[p.j].leading_monomial().unwrap();
            li.lcm(&lh) == p.lcm || lj.lcm(&lh) == p.lcm
        });
        self.pairs.extend(new_pairs);

        self.basis
            .retain(|&g| !lh.divides(polys[g].leading_monomial().unwrap()));
        self.basis.push(hk);
    }

    fn select(&mut self) -> Option<Pair> {
        let order = self.ring.order();
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| pair_cmp(order, a, b))
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn check_limits(&self, pair_deg: u32) -> Result<(), GroebnerError> {
        let exceeded = |reason: &str| GroebnerError::ResourceLimit {
            reason: reason.to_string(),
            pairs_processed: self.stats.pairs_processed,
            max_degree_reached: self.stats.max_degree,
        };
        if self.stats.pairs_processed >= self.limits.max_pairs {
            return Err(exceeded("S-pair limit"));
        }
        if pair_deg > self.limits.max_degree {
            return Err(exceeded("degree limit"));
        }
        if let Some(deadline) = self.limits.deadline {
            if Instant::now() >= deadline {
                return Err(exceeded("timeout"));
            }
        }
        Ok(())
    }

    pub fn run(&mut self) -> Result<(), GroebnerError> {
        while let Some(pair) = self.select() {
            self.check_limits(pair.lcm.degree())?;
            self.stats.pairs_processed += 1;
            self.stats.max_degree = self.stats.max_degree.max(pair.lcm.degree());
            let s = spoly(&self.polys[pair.i], &self.polys[pair.j], &pair.lcm);
            if self.insert(&s) {
                // Unit ideal: nothing left to do.
                self.pairs.clear();
                break;
            }
        }
        Ok(())
    }

    /// Minimal basis made monic and fully inter-reduced, sorted by leading
    /// monomial in decreasing order.
    pub fn reduced_basis(&self) -> Vec<MPoly> {
        let order = self.ring.order();
        let mut gens: Vec<MPoly> = self.basis.iter().map(|&k| self.polys[k].clone()).collect();
        if gens.iter().any(|g| g.leading_monomial().unwrap().is_one()) {
            return vec![MPoly::one(&self.ring)];
        }
        gens.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
        let mut out = Vec::with_capacity(gens.len());
        for k in 0..gens.len() {
            let others: Vec<Divisor<'_>> = gens
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, g)| Divisor::new(g))
                .collect();
            // The head is irreducible by minimality; reduce the tail only.
            let g = &gens[k];
            let (head, tail) = g.terms().split_first().unwrap();
            let tail = MPoly::from_sorted(&self.ring, tail.to_vec());
            let tail = normal_form(&self.ring, &tail, &others);
            let mut terms = vec![head.clone()];
            terms.extend(tail.into_terms());
            out.push(MPoly::from_sorted(&self.ring, terms));
        }
        out
    }
}

fn pair_cmp(order: MonomialOrder, a: &Pair, b: &Pair) -> Ordering {
    a.lcm
        .degree()
        .cmp(&b.lcm.degree())
        .then_with(|| order.cmp(&a.lcm, &b.lcm))
        .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
}

/// S-polynomial of two monic polynomials with the given lcm of leads.
pub(crate) fn spoly(f: &MPoly, g: &MPoly, lcm: &Monomial) -> MPoly {
    let order = f.ring().order();
    let mf = f.leading_monomial().unwrap().quotient_of(lcm);
    let mg = g.leading_monomial().unwrap().quotient_of(lcm);
    let fm = f.mul_term(&mf, &Rat::one());
    let terms = super::reduce::sub_mul_owned(order, fm.into_terms(), &Rat::one(), &mg, g.terms(), true);
    MPoly::from_sorted(f.ring(), terms)
}
