use num_bigint::BigInt;

use super::Rational;

/// `H_n^{(m)} = sum_{i=1}^{n} 1/i^m`, with `H_0^{(m)} = 0`.
pub fn harmonic(n: u64, m: u32) -> Rational {
    (1..=n)
        .map(|i| {
            Rational::new(BigInt::from(1), num_traits::pow(BigInt::from(i), m as usize)).unwrap()
        })
        .sum()
}

/// Prefix table of generalized harmonic numbers of a fixed order.
///
/// Grows monotonically; once warmed up it is only read, so sharing a
/// `&HarmonicCache` across threads needs no locking.
#[derive(Debug, Clone)]
pub struct HarmonicCache {
    order: u32,
    values: Vec<Rational>,
}

impl HarmonicCache {
    pub fn new(order: u32) -> Self {
        assert!(order >= 1, "harmonic order must be positive");
        HarmonicCache { order, values: vec![Rational::zero()] }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn ensure(&mut self, n: u64) {
        while (self.values.len() as u64) <= n {
            let i = self.values.len() as u64;
            let term = Rational::new(
                BigInt::from(1),
                num_traits::pow(BigInt::from(i), self.order as usize),
            )
            .unwrap();
            let next = self.values.last().unwrap() + &term;
            self.values.push(next);
        }
    }

    /// Panics if `n` is past the warmed-up range.
    pub fn get(&self, n: u64) -> &Rational {
        self.values
            .get(n as usize)
            .unwrap_or_else(|| panic!("harmonic cache of order {} not warmed to {n}", self.order))
    }
}

/// First- and second-order harmonic numbers, warmed up to a common bound.
#[derive(Debug, Clone)]
pub struct Harmonics {
    h1: HarmonicCache,
    h2: HarmonicCache,
}

impl Harmonics {
    pub fn new(n_max: u64) -> Self {
        let mut h1 = HarmonicCache::new(1);
        let mut h2 = HarmonicCache::new(2);
        h1.ensure(n_max);
        h2.ensure(n_max);
        Harmonics { h1, h2 }
    }

    pub fn bound(&self) -> u64 {
        self.h1.len() as u64 - 1
    }

    /// `H_n`
    pub fn h(&self, n: u64) -> &Rational {
        self.h1.get(n)
    }

    /// `H_n^{(2)}`
    pub fn h2(&self, n: u64) -> &Rational {
        self.h2.get(n)
    }
}
