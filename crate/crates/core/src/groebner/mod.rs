//! Gröbner bases, ideal queries, dimension, syzygies and free resolutions.

mod buchberger;
pub mod cache;
mod dim;
mod radical;
mod reduce;
pub mod resolution;

pub use buchberger::BuchbergerStats;
pub use dim::{krull_dim, max_independent_set};
pub use radical::{radical_member, radical_member_gb};
pub use resolution::{betti, free_resolution, syzygies, FreeResolution};

use crate::poly::{same_ring, MPoly, PolyError, RingRef};
use buchberger::Engine;
use reduce::Divisor;
use sha2::{Digest, Sha256};
use std::time::Instant;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error("no generators given")]
    EmptyInput,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("{reason} exceeded after {pairs_processed} S-pairs (maximal pair degree {max_degree_reached})")]
    ResourceLimit {
        reason: String,
        pairs_processed: u64,
        max_degree_reached: u32,
    },
    #[error("resolution requires homogeneous generators")]
    NotHomogeneous,
    #[error("cache: {0}")]
    Cache(String),
}

/// Resource bounds for a Gröbner computation. Exceeding any of them aborts
/// with [`GroebnerError::ResourceLimit`]; a partial basis is never returned.
#[derive(Clone, Debug)]
pub struct Limits {
    pub max_pairs: u64,
    pub max_degree: u32,
    pub deadline: Option<Instant>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_pairs: 1_000_000,
            max_degree: 30,
            deadline: None,
        }
    }
}

impl Limits {
    pub fn with_timeout(mut self, timeout: std::time::Duration) -> Self {
        self.deadline = Some(Instant::now() + timeout);
        self
    }
}

/// A reduced Gröbner basis. Generators are monic, inter-reduced and sorted
/// by decreasing leading monomial; the monomial order is the one of the ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: RingRef,
    generators: Vec<MPoly>,
    reduced: bool,
    provenance: String,
}

impl GroebnerBasis {
    pub(crate) fn from_parts(ring: &RingRef, generators: Vec<MPoly>, provenance: String) -> Self {
        GroebnerBasis {
            ring: ring.clone(),
            generators,
            reduced: true,
            provenance,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn order(&self) -> crate::poly::MonomialOrder {
        self.ring.order()
    }

    pub fn generators(&self) -> &[MPoly] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Hex SHA-256 of the ring, order and input generators this basis was
    /// computed from.
    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_constant() && !self.generators[0].is_zero()
    }

    pub fn leading_monomials(&self) -> Vec<crate::poly::Monomial> {
        self.generators
            .iter()
            .filter_map(|g| g.leading_monomial().cloned())
            .collect()
    }

    pub fn normal_form(&self, f: &MPoly) -> Result<MPoly, GroebnerError> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(PolyError::RingMismatch.into());
        }
        let divs: Vec<Divisor<'_>> = self.generators.iter().map(Divisor::new).collect();
        Ok(reduce::normal_form(&self.ring, f, &divs))
    }

    pub fn ideal_member(&self, f: &MPoly) -> Result<bool, GroebnerError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Every generator of `other` lies in this ideal.
    pub fn contains_all(&self, others: &[MPoly]) -> Result<bool, GroebnerError> {
        for g in others {
            if !self.ideal_member(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Gröbner basis of this ideal plus `extra`, reusing the basis instead
    /// of recomputing pairs among its members.
    pub fn extend(&self, extra: &[MPoly], limits: &Limits) -> Result<GroebnerBasis, GroebnerError> {
        for f in extra {
            if !same_ring(f.ring(), &self.ring) {
                return Err(PolyError::RingMismatch.into());
            }
        }
        let mut all = self.generators.clone();
        all.extend(extra.iter().cloned());
        let provenance = provenance_hash(&self.ring, &all);
        let mut engine = Engine::new(&self.ring, limits);
        engine.seed_basis(&self.generators);
        run_engine(&mut engine, extra)?;
        Ok(GroebnerBasis::from_parts(&self.ring, engine.reduced_basis(), provenance))
    }
}

fn run_engine(engine: &mut Engine<'_>, gens: &[MPoly]) -> Result<(), GroebnerError> {
    for g in gens {
        if g.is_zero() {
            continue;
        }
        if engine.insert(g) {
            return Ok(());
        }
    }
    engine.run()
}

/// Hex SHA-256 over the ring description and the canonical text of the
/// generators, in input order.
pub fn provenance_hash(ring: &RingRef, gens: &[MPoly]) -> String {
    let mut h = Sha256::new();
    h.update(ring.names().join(",").as_bytes());
    h.update(b"\n");
    h.update(ring.order().name().as_bytes());
    for g in gens {
        h.update(b"\n");
        h.update(g.to_text().as_bytes());
    }
    hex::encode(h.finalize())
}

/// Reduced Gröbner basis of the ideal generated by `gens` in the order of
/// their ring. Deterministic for a fixed input list.
pub fn buchberger(gens: &[MPoly], limits: &Limits) -> Result<GroebnerBasis, GroebnerError> {
    buchberger_with_stats(gens, limits).map(|(gb, _)| gb)
}

pub fn buchberger_with_stats(
    gens: &[MPoly],
    limits: &Limits,
) -> Result<(GroebnerBasis, BuchbergerStats), GroebnerError> {
    let ring = gens.first().ok_or(GroebnerError::EmptyInput)?.ring().clone();
    if gens.iter().any(|g| !same_ring(g.ring(), &ring)) {
        return Err(PolyError::RingMismatch.into());
    }
    let provenance = provenance_hash(&ring, gens);
    let mut engine = Engine::new(&ring, limits);
    run_engine(&mut engine, gens)?;
    let basis = engine.reduced_basis();
    Ok((GroebnerBasis::from_parts(&ring, basis, provenance), engine.stats))
}
