use super::{buchberger, GroebnerBasis, GroebnerError, Limits};
use crate::poly::{same_ring, MPoly, PolyError, RingRef};
use crate::rational::Rat;
use num_traits::One;

/// Rabinowitsch test: `f` lies in the radical of `<gens>` iff
/// `1 ∈ <gens, 1 - w f>` with `w` a fresh variable.
pub fn radical_member(f: &MPoly, gens: &[MPoly], limits: &Limits) -> Result<bool, GroebnerError> {
    let gb = buchberger(gens, limits)?;
    radical_member_gb(f, &gb, limits)
}

/// As [`radical_member`], starting from a precomputed basis of the ideal.
/// The basis stays a Gröbner basis after adjoining `w` as the smallest
/// variable, so only pairs involving `1 - w f` are formed.
pub fn radical_member_gb(f: &MPoly, gb: &GroebnerBasis, limits: &Limits) -> Result<bool, GroebnerError> {
    if !same_ring(f.ring(), gb.ring()) {
        return Err(PolyError::RingMismatch.into());
    }
    let (ext, map) = fresh_extension(gb.ring());
    let w = ext.nvars() - 1;
    let lifted: Vec<MPoly> = gb.generators().iter().map(|g| g.embed(&ext, &map)).collect();
    let base = GroebnerBasis::from_parts(&ext, lifted, gb.provenance().to_string());
    let wf = MPoly::var(&ext, w).try_mul(&f.embed(&ext, &map))?;
    let rabinowitsch = MPoly::constant(&ext, Rat::one()).try_sub(&wf)?;
    Ok(base.extend(&[rabinowitsch], limits)?.is_unit())
}

fn fresh_extension(ring: &RingRef) -> (RingRef, Vec<usize>) {
    let mut name = String::from("w");
    while ring.index_of(&name).is_some() {
        name.push('_');
    }
    let map: Vec<usize> = (0..ring.nvars()).collect();
    (ring.extended(&name), map)
}
