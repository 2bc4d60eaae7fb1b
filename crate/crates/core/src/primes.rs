//! Growable prime sieve.
//!
//! The fingerprinting code sweeps primes in increasing order until it finds
//! one separating a string from its collider set, so the cache grows on
//! demand by re-sieving to a doubled limit.

/// Incrementally sieved list of primes, 1-indexed via [`nth`](Self::nth).
pub struct PrimeCache {
    primes: Vec<u64>,
    limit: u64,
}

impl Default for PrimeCache {
    fn default() -> Self {
        Self::new()
    }
}

impl PrimeCache {
    pub fn new() -> Self {
        let mut c = PrimeCache { primes: Vec::new(), limit: 0 };
        c.grow_to(1 << 10);
        c
    }

    /// The j-th prime, 1-based: nth(1) = 2, nth(2) = 3, ...
    pub fn nth(&mut self, j: usize) -> u64 {
        assert!(j >= 1);
        while self.primes.len() < j {
            let next = self.limit.saturating_mul(2).max(1 << 10);
            self.grow_to(next);
        }
        self.primes[j - 1]
    }

    /// Primes in increasing order, extending the sieve as needed.
    pub fn iter_from_start(&mut self) -> PrimeIter<'_> {
        PrimeIter { cache: self, next: 0 }
    }

    fn grow_to(&mut self, new_limit: u64) {
        let n = new_limit as usize;
        let mut composite = vec![false; n + 1];
        self.primes.clear();
        for p in 2..=n {
            if !composite[p] {
                self.primes.push(p as u64);
                let mut q = p * p;
                while q <= n {
                    composite[q] = true;
                    q += p;
                }
            }
        }
        self.limit = new_limit;
    }
}

pub struct PrimeIter<'a> {
    cache: &'a mut PrimeCache,
    next: usize,
}

impl Iterator for PrimeIter<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        self.next += 1;
        Some(self.cache.nth(self.next))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_primes() {
        let mut c = PrimeCache::new();
        let first: Vec<u64> = c.iter_from_start().take(10).collect();
        assert_eq!(first, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn grows_on_demand() {
        let mut c = PrimeCache::new();
        // The 10_000th prime.
        assert_eq!(c.nth(10_000), 104_729);
    }
}
