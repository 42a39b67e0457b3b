use crate::hash::fmix64;

const MULTIPLIER: u64 = 6_364_136_223_846_793_005;
const INCREMENT: u64 = 1_442_695_040_888_963_407;

/// Seeded 64-bit linear congruential generator.
///
/// State update: `s = s * 6364136223846793005 + 1442695040888963407 (mod 2^64)`.
/// Output: the state passed through the same avalanche finalizer as
/// [`mixer_hash`](crate::mixer_hash). Bounded draws use the high 64 bits
/// of `output * bound`. Nothing here depends on platform or crate versions,
/// so a given seed yields the same workload everywhere.
#[derive(Debug, Clone)]
pub struct Lcg64 {
    state: u64,
}

impl Lcg64 {
    pub fn new(seed: u64) -> Self {
        Lcg64 { state: seed }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        fmix64(self.state)
    }

    /// Uniform-ish value in `0..bound` (multiply-shift, no rejection).
    #[inline]
    pub fn below(&mut self, bound: u64) -> u64 {
        ((u128::from(self.next_u64()) * u128::from(bound)) >> 64) as u64
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_stream() {
        let a: Vec<_> = {
            let mut r = Lcg64::new(42);
            (0..5).map(|_| r.next_u64()).collect()
        };
        let mut r = Lcg64::new(42);
        let b: Vec<_> = (0..5).map(|_| r.next_u64()).collect();
        assert_eq!(a, b);
        assert_ne!(Lcg64::new(43).next_u64(), a[0]);
        // First output for seed 0 is fmix64(INCREMENT).
        assert_eq!(Lcg64::new(0).next_u64(), fmix64(INCREMENT));
    }

    #[test]
    fn bounded_draws() {
        let mut r = Lcg64::new(7);
        let mut hist = [0u32; 10];
        for _ in 0..100_000 {
            hist[r.below(10) as usize] += 1;
        }
        assert!(
            hist.iter().all(|&h| (9_000..11_000).contains(&h)),
            "{hist:?}"
        );
        assert_eq!(r.below(1), 0);
        let u = r.unit();
        assert!((0.0..1.0).contains(&u));
    }

    #[test]
    fn shuffle_is_permutation() {
        let mut v: Vec<u32> = (0..100).collect();
        Lcg64::new(1).shuffle(&mut v);
        assert_ne!(v, (0..100).collect::<Vec<_>>());
        v.sort_unstable();
        assert_eq!(v, (0..100).collect::<Vec<_>>());
    }
}
