#![allow(dead_code)]

use chernhodge::invariants::{HodgeDiamond, PoincarePoly};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Betti list of length `d + 1` with `b_0 = 1` and Poincare duality.
pub fn random_dual_betti(rng: &mut ChaCha8Rng, d: usize, max: i64) -> Vec<i64> {
    let mut b = vec![0; d + 1];
    for j in 0..=d / 2 {
        let v = if j == 0 { 1 } else { rng.gen_range(0..=max) };
        b[j] = v;
        b[d - j] = v;
    }
    b
}

/// Diamond with conjugation symmetry and Serre duality: choose
/// `h^{p,q}` on `p <= q`, `p + q <= n`, fill the rest by symmetry.
pub fn random_kahler_diamond(rng: &mut ChaCha8Rng, n: usize, max: i64) -> HodgeDiamond {
    let mut h = vec![vec![-1i64; n + 1]; n + 1];
    for p in 0..=n {
        for q in p..=n {
            if p + q > n {
                continue;
            }
            let v = if p == 0 && q == 0 { 1 } else { rng.gen_range(0..=max) };
            for (a, b) in [(p, q), (q, p), (n - p, n - q), (n - q, n - p)] {
                h[a][b] = v;
            }
        }
    }
    debug_assert!(h.iter().flatten().all(|&v| v >= 0));
    HodgeDiamond::new(h).unwrap()
}

pub fn manifold(b: &[i64]) -> PoincarePoly {
    PoincarePoly::manifold(b.to_vec()).unwrap()
}
