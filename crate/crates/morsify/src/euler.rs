//! Bernoulli-Euler updown numbers.
//!
//! `Kbar_m` counts the linear orders of `m` values that alternate in the
//! pattern forced on critical values of a monic polynomial: reading left to
//! right, the step from position `k` to `k+1` ascends exactly when `m - k` is
//! even, so the final step always descends into the rightmost local minimum.
//! The sequence starts `1, 1, 1, 2, 5, 16, 61, 272, 1385, ...` and has
//! exponential generating function `tan(t) + sec(t)`.
//!
//! The numbers are produced by the Seidel boustrophedon triangle
//!
//! ```text
//! E(0,0) = 1,   E(m,0) = 0,   E(m,k) = E(m,k-1) + E(m-1,m-k),
//! ```
//!
//! whose diagonal `E(m,m)` is `Kbar_m`. Everything else in the crate reaches
//! the sequence through this module; [`updown_count_bruteforce`] is the
//! independent ground truth used to pin the triangle down in tests.

use crate::error::{check_guard, Result};
use crate::Count;

/// Largest `m` accepted by [`updown_count_bruteforce`] (`9! = 362880`
/// orders to scan).
pub const BRUTEFORCE_MAX_M: usize = 9;

/// Prefix `Kbar_0 ..= Kbar_max` of the updown sequence, growable in place.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerSequence {
    values: Vec<Count>,
    // Boustrophedon row for the last computed index; the next row is folded
    // against it in reverse.
    row: Vec<Count>,
}

impl EulerSequence {
    /// The sequence computed through `max_index` inclusive.
    pub fn new(max_index: usize) -> Self {
        let mut seq = EulerSequence {
            values: vec![Count::from(1)],
            row: vec![Count::from(1)],
        };
        seq.extend_to(max_index);
        seq
    }

    /// Grows the prefix so that `Kbar_m` is available.
    pub fn extend_to(&mut self, m: usize) {
        while self.values.len() <= m {
            let i = self.values.len();
            let mut next = Vec::with_capacity(i + 1);
            next.push(Count::from(0));
            for k in 1..=i {
                let v = &next[k - 1] + &self.row[i - k];
                next.push(v);
            }
            self.values.push(next[i].clone());
            self.row = next;
        }
    }

    /// `Kbar_m`; panics if `m` is beyond the computed prefix.
    pub fn get(&self, m: usize) -> &Count {
        &self.values[m]
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[Count] {
        &self.values
    }
}

/// `Kbar_0 ..= Kbar_max_index` via the boustrophedon triangle.
pub fn euler_numbers(max_index: usize) -> EulerSequence {
    EulerSequence::new(max_index)
}

/// Counts the alternating orders of `m` values directly, by scanning all
/// `m!` permutations. Ground truth for [`euler_numbers`].
pub fn updown_count_bruteforce(m: usize) -> Result<Count> {
    check_guard("euler_bruteforce_m", m as u64, BRUTEFORCE_MAX_M as u64)?;
    if m == 0 {
        return Ok(Count::from(1));
    }
    let mut perm: Vec<u8> = (1..=m as u8).collect();
    let mut hits = 0u64;
    foreach_permutation(&mut perm, &mut |p| {
        if is_updown(p) {
            hits += 1;
        }
    });
    Ok(Count::from(hits))
}

/// The step `k -> k+1` (1-based) must ascend exactly when `m - k` is even.
fn is_updown(p: &[u8]) -> bool {
    let m = p.len();
    for k in 1..m {
        let ascends = p[k - 1] < p[k];
        if ascends != ((m - k) % 2 == 0) {
            return false;
        }
    }
    true
}

/// Heap's algorithm, visiting every permutation of `items` exactly once.
pub(crate) fn foreach_permutation<F: FnMut(&[u8])>(items: &mut [u8], visit: &mut F) {
    let n = items.len();
    let mut c = vec![0usize; n];
    visit(items);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            visit(items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn seq_u64(max: usize) -> Vec<u64> {
        euler_numbers(max)
            .values()
            .iter()
            .map(|v| u64::try_from(v).unwrap())
            .collect()
    }

    #[test]
    fn small_values() {
        assert_eq!(seq_u64(6), vec![1, 1, 1, 2, 5, 16, 61]);
        assert_eq!(seq_u64(0), vec![1]);
    }

    #[test]
    fn continues_past_the_seed() {
        let s = seq_u64(9);
        assert_eq!(s[7], 272);
        assert_eq!(s[8], 1385);
        assert_eq!(s[9], 7936);
    }

    #[test]
    fn extend_matches_fresh_computation() {
        let mut grown = euler_numbers(3);
        grown.extend_to(9);
        assert_eq!(grown, euler_numbers(9));
    }

    #[test]
    fn strictly_increasing_from_index_two() {
        let s = euler_numbers(20);
        for m in 2..20 {
            assert!(s.get(m) < s.get(m + 1), "not increasing at m = {m}");
        }
        for v in s.values() {
            assert!(v > &Count::from(0));
        }
    }

    #[test]
    fn bruteforce_pins_the_triangle() {
        for m in 0..=BRUTEFORCE_MAX_M {
            assert_eq!(
                updown_count_bruteforce(m).unwrap(),
                *euler_numbers(m).get(m),
                "mismatch at m = {m}"
            );
        }
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(updown_count_bruteforce(0).unwrap(), Count::from(1));
        assert_eq!(updown_count_bruteforce(4).unwrap(), Count::from(5));
        assert_eq!(updown_count_bruteforce(7).unwrap(), Count::from(272));
    }

    #[test]
    fn bruteforce_guard() {
        match updown_count_bruteforce(10) {
            Err(Error::Guard { guard, limit, actual }) => {
                assert_eq!(guard, "euler_bruteforce_m");
                assert_eq!((limit, actual), (9, 10));
            }
            other => panic!("expected guard refusal, got {other:?}"),
        }
    }
}
