//! Reproducible curve sampling.
//!
//! The generator is the 64-bit linear congruential generator
//!
//! ```text
//! state ← state · 6364136223846793005 + 1442695040888963407  (mod 2⁶⁴)
//! ```
//!
//! seeded with `state = seed` and emitting the high 32 bits of the state after
//! each step. `below(n)` returns `next_u32() mod n`. These few lines are the
//! whole contract, so any implementation can reproduce a run from its seed.

use crate::curve::CurveParams;
use crate::scalar::{Fp, PrimeField};

const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;

#[derive(Clone, Debug)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        (self.state >> 32) as u32
    }

    /// Uniform-ish in [0, n); n must be nonzero.
    pub fn below(&mut self, n: u32) -> u32 {
        assert!(n > 0, "empty range");
        self.next_u32() % n
    }
}

/// `count` valid curves over F_p. Pairs (a, b) are drawn as `a = below(p)`,
/// `b = below(p)` and rejected when b(a² − 4b) = 0.
pub fn random_curves(seed: u64, field: PrimeField, count: usize) -> Vec<CurveParams<Fp>> {
    let mut rng = Lcg::new(seed);
    let p = field.modulus();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let a = rng.below(p) as i64;
        let b = rng.below(p) as i64;
        if let Ok(c) = CurveParams::new(field.elem(a), field.elem(b)) {
            out.push(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_outputs_are_fixed() {
        let mut rng = Lcg::new(0);
        // state₁ = INCREMENT, state₂ = INCREMENT·(MULTIPLIER + 1)
        assert_eq!(rng.next_u32(), (INCREMENT >> 32) as u32);
        let s2 = INCREMENT.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        assert_eq!(rng.next_u32(), (s2 >> 32) as u32);
    }

    #[test]
    fn curves_are_valid_and_reproducible() {
        let f = PrimeField::new(101).unwrap();
        let first = random_curves(7, f, 25);
        let again = random_curves(7, f, 25);
        assert_eq!(first.len(), 25);
        for (c, d) in first.iter().zip(&again) {
            assert_eq!(c, d);
            assert!(c.a().value() < 101 && c.b().value() != 0);
        }
        assert_ne!(random_curves(8, f, 25), first);
    }
}
