//! Fixed-seed deterministic sampling for the property suites. Coordinates
//! stay in a small integer range so failures reproduce exactly and norms
//! stay desk-sized.

use crate::algebra::{AlgebraSpec, Element};
use crate::fractions::{classify, ClassTag};
use std::sync::Arc;

pub const COORD_BOUND: i64 = 3;

/// SplitMix64. Not cryptographic; chosen for stable cross-platform output.
#[derive(Debug, Clone)]
pub struct Sampler {
    state: u64,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform-ish integer in `[lo, hi]` inclusive.
    pub fn i64_in(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }

    pub fn usize_in(&mut self, lo: usize, hi: usize) -> usize {
        self.i64_in(lo as i64, hi as i64) as usize
    }

    pub fn coord(&mut self) -> i64 {
        self.i64_in(-COORD_BOUND, COORD_BOUND)
    }

    pub fn element(&mut self, alg: &Arc<AlgebraSpec>) -> Element {
        let coords: Vec<i64> = (0..alg.dim()).map(|_| self.coord()).collect();
        Element::from_i64_coords(alg, &coords).expect("coords fit the algebra")
    }

    /// An element with zero scalar part.
    pub fn imaginary(&mut self, alg: &Arc<AlgebraSpec>) -> Element {
        let mut coords: Vec<i64> = (0..alg.dim()).map(|_| self.coord()).collect();
        coords[0] = 0;
        Element::from_i64_coords(alg, &coords).expect("coords fit the algebra")
    }

    pub fn nonzero(&mut self, alg: &Arc<AlgebraSpec>) -> Element {
        loop {
            let e = self.element(alg);
            if !e.is_zero() {
                return e;
            }
        }
    }

    pub fn invertible(&mut self, alg: &Arc<AlgebraSpec>) -> Element {
        loop {
            let e = self.element(alg);
            if classify(&e).tag == ClassTag::Invertible {
                return e;
            }
        }
    }

    /// A nonzero element of the scalar part.
    pub fn nonzero_scalar_elem(&mut self, alg: &Arc<AlgebraSpec>) -> Element {
        loop {
            let v = self.coord();
            if v != 0 {
                let mut coords = vec![0i64; alg.dim()];
                coords[0] = v;
                return Element::from_i64_coords(alg, &coords).expect("coords fit");
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog;
    use crate::scalar::ScalarRing;

    #[test]
    fn sampling_is_deterministic() {
        let alg = catalog("quaternion", ScalarRing::Rationals).unwrap();
        let mut a = Sampler::new(7);
        let mut b = Sampler::new(7);
        for _ in 0..32 {
            assert_eq!(a.element(&alg), b.element(&alg));
        }
    }

    #[test]
    fn ranges_are_respected() {
        let mut s = Sampler::new(0);
        for _ in 0..200 {
            let v = s.coord();
            assert!((-COORD_BOUND..=COORD_BOUND).contains(&v));
        }
        let alg = catalog("split_complex", ScalarRing::Rationals).unwrap();
        for _ in 0..50 {
            assert!(s.imaginary(&alg).re_part().is_zero());
            assert!(!s.nonzero(&alg).is_zero());
            assert!(!s.invertible(&alg).norm_form().unwrap().is_zero());
        }
    }
}
