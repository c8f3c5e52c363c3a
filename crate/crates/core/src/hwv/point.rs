use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::field::PrimeField;

/// A linear form on `m` coordinates over a prime field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearForm(pub Vec<u64>);

impl LinearForm {
    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// The form `x_i` (0-based `i`).
    pub fn unit(m: usize, i: usize) -> Self {
        let mut v = vec![0; m];
        v[i] = 1;
        LinearForm(v)
    }

    fn random(rng: &mut ChaCha8Rng, field: &PrimeField, m: usize) -> Self {
        LinearForm((0..m).map(|_| rng.gen_range(0..field.modulus())).collect())
    }
}

/// The product `l_1 ... l_n` of `n` linear forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChowPoint {
    pub forms: Vec<LinearForm>,
}

/// The power sum `l_1^n + ... + l_k^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowPoint {
    pub forms: Vec<LinearForm>,
}

/// SplitMix64 step; turns a master seed and an index into an independent
/// stream seed so that parallel and serial runs draw identical points.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn random_chow_point(field: &PrimeField, m: usize, n: usize, seed: u64) -> ChowPoint {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    ChowPoint {
        forms: (0..n).map(|_| LinearForm::random(&mut rng, field, m)).collect(),
    }
}

pub fn random_pow_point(field: &PrimeField, m: usize, k: usize, seed: u64) -> PowPoint {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    PowPoint {
        forms: (0..k).map(|_| LinearForm::random(&mut rng, field, m)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_points_are_reproducible() {
        let f = PrimeField::default();
        let a = random_chow_point(&f, 3, 6, 42);
        assert_eq!(a, random_chow_point(&f, 3, 6, 42));
        assert_eq!(a.forms.len(), 6);
        assert!(a.forms.iter().all(|l| l.dim() == 3 && l.coords().iter().all(|&c| c < f.modulus())));
        assert_ne!(a, random_chow_point(&f, 3, 6, 43));
        let p = random_pow_point(&f, 3, 4, 7);
        assert_eq!(p.forms.len(), 4);
        assert_ne!(derive_seed(1, 0), derive_seed(1, 1));
        assert_ne!(derive_seed(1, 0), derive_seed(2, 0));
    }
}
