use super::{same_ring, MPoly, PolyError, RingRef};
use crate::rational::Rat;

/// A polynomial map into the Lie algebra: one [`MPoly`] per basis
/// coordinate, all over the same ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GVec {
    ring: RingRef,
    entries: Vec<MPoly>,
}

impl GVec {
    pub fn new(ring: &RingRef, entries: Vec<MPoly>) -> Result<Self, PolyError> {
        if entries.iter().any(|e| !same_ring(e.ring(), ring)) {
            return Err(PolyError::RingMismatch);
        }
        Ok(GVec { ring: ring.clone(), entries })
    }

    pub fn zero(ring: &RingRef, dim: usize) -> Self {
        GVec {
            ring: ring.clone(),
            entries: vec![MPoly::zero(ring); dim],
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[MPoly] {
        &self.entries
    }

    pub fn entry(&self, k: usize) -> &MPoly {
        &self.entries[k]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(MPoly::is_zero)
    }

    pub fn eval(&self, point: &[Rat]) -> Result<Vec<Rat>, PolyError> {
        self.entries.iter().map(|e| e.eval(point)).collect()
    }

    pub fn scale(&self, c: &Rat) -> GVec {
        GVec {
            ring: self.ring.clone(),
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
        }
    }

    pub fn mul_poly(&self, p: &MPoly) -> Result<GVec, PolyError> {
        Ok(GVec {
            ring: self.ring.clone(),
            entries: self.entries.iter().map(|e| e.try_mul(p)).collect::<Result<_, _>>()?,
        })
    }

    pub fn try_add(&self, other: &GVec) -> Result<GVec, PolyError> {
        if !same_ring(&self.ring, &other.ring) || self.dim() != other.dim() {
            return Err(PolyError::RingMismatch);
        }
        Ok(GVec {
            ring: self.ring.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.try_add(b))
                .collect::<Result<_, _>>()?,
        })
    }

    /// Applies a polynomial map entrywise (e.g. a ring morphism).
    pub fn map<F>(&self, target: &RingRef, mut f: F) -> Result<GVec, PolyError>
    where
        F: FnMut(&MPoly) -> Result<MPoly, PolyError>,
    {
        let entries = self.entries.iter().map(&mut f).collect::<Result<Vec<_>, _>>()?;
        GVec::new(target, entries)
    }
}

impl std::fmt::Display for GVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_text()).collect();
        write!(f, "({})", parts.join(", "))
    }
}
