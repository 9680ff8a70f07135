use super::GroebnerBasis;

/// Krull dimension of `S / I` computed from the leading-term ideal: the
/// largest set of variables containing the support of no leading monomial.
/// `None` for the unit ideal (the quotient is the zero ring).
pub fn krull_dim(gb: &GroebnerBasis) -> Option<usize> {
    max_independent_set(gb).map(|s| s.len())
}

/// A maximal independent set of variables modulo the leading-term ideal,
/// as a sorted list of variable indices.
pub fn max_independent_set(gb: &GroebnerBasis) -> Option<Vec<usize>> {
    let n = gb.ring().nvars();
    assert!(n <= 128, "at most 128 variables supported");
    let mut sets: Vec<u128> = gb.leading_monomials().iter().map(|m| m.support()).collect();
    if sets.contains(&0) {
        return None;
    }
    // Only inclusion-minimal supports matter for hitting.
    sets.sort_by_key(|s| s.count_ones());
    sets.dedup();
    let mut minimal: Vec<u128> = Vec::new();
    for s in sets {
        if !minimal.iter().any(|&m| (m & s) == m) {
            minimal.push(s);
        }
    }
    let all: u128 = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut best = (n + 1, all);
    search(&minimal, 0, 0, &mut best);
    let hitting = best.1;
    Some((0..n).filter(|&i| hitting & (1u128 << i) == 0).collect())
}

/// Branch and bound for a minimum transversal of `sets`.
fn search(sets: &[u128], chosen: u128, count: usize, best: &mut (usize, u128)) {
    if count >= best.0 {
        return;
    }
    let Some(open) = sets.iter().find(|&&s| s & chosen == 0) else {
        *best = (count, chosen);
        return;
    };
    if count + 1 >= best.0 {
        return;
    }
    let mut bits = *open;
    while bits != 0 {
        let b = bits & bits.wrapping_neg();
        search(sets, chosen | b, count + 1, best);
        bits &= bits - 1;
    }
}
