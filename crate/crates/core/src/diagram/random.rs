use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{AlphaCurve, BetaCurve, HeegaardDatum};

/// Deterministic pseudo-random valid datum with `d` closed α-curves, `l` arcs
/// and between 1 and `max_crossings` crossings on each β-curve. Every β_j
/// meets α_j, so every closed α-curve carries a crossing.
pub fn random_datum(seed: u64, d: usize, l: usize, max_crossings: usize) -> HeegaardDatum {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_crossings = max_crossings.max(1);
    let mut alpha_closed: Vec<AlphaCurve> =
        (0..d).map(|i| AlphaCurve { crossings: Vec::new(), name: format!("alpha{}", i + 1) }).collect();
    let mut arcs: Vec<AlphaCurve> =
        (0..l).map(|i| AlphaCurve { crossings: Vec::new(), name: format!("a{}", i + 1) }).collect();
    let mut beta = Vec::with_capacity(d);
    let mut next_id = 0usize;
    for j in 0..d {
        let k = rng.gen_range(1..=max_crossings);
        let forced = rng.gen_range(0..k);
        let mut crossings = Vec::with_capacity(k);
        for p in 0..k {
            let target = if p == forced { j } else { rng.gen_range(0..d + l) };
            let id = format!("x{}", next_id);
            next_id += 1;
            if target < d {
                alpha_closed[target].crossings.push(id.clone());
            } else {
                arcs[target - d].crossings.push(id.clone());
            }
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            crossings.push((id, sign));
        }
        let basepoint_index = rng.gen_range(0..k);
        beta.push(BetaCurve { basepoint_index, crossings, name: format!("beta{}", j + 1) });
    }
    for c in alpha_closed.iter_mut().chain(arcs.iter_mut()) {
        c.crossings.shuffle(&mut rng);
    }
    HeegaardDatum { alpha_closed, arcs, beta }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_data_are_valid_and_consistent() {
        for seed in 0..100 {
            let d = random_datum(seed, 1 + (seed as usize % 2), seed as usize % 3, 6);
            assert!(d.validate().is_valid(), "seed {}", seed);
            assert!(d.fox_consistency().unwrap(), "seed {}", seed);
            assert_eq!(random_datum(seed, d.d(), d.l(), 6), d);
        }
    }
}
