//! Brute-force set-partition enumeration, used as an independent oracle for
//! Stirling, Bell and r-Whitney numbers.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Default limit on `n + r` for [`enumerate_colored_partitions`]. Bell(10)
/// is about 116k partitions; the count grows super-exponentially after that.
pub const DEFAULT_ENUMERATION_CAP: usize = 10;

/// Iterator over all set partitions of `{0, ..., n-1}` as restricted growth
/// strings: `block[i]` is the block index of element `i`, `block[0] = 0`, and
/// `block[i] <= 1 + max(block[..i])`.
pub struct RestrictedGrowth {
    block: Vec<usize>,
    // prefix maxima: max[i] = max(block[..=i])
    max: Vec<usize>,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize) -> Self {
        RestrictedGrowth { block: vec![0; n], max: vec![0; n], done: false }
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let current = self.block.clone();
        let n = self.block.len();
        // advance to the lexicographic successor
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.block[i] <= self.max[i - 1] {
                self.block[i] += 1;
                self.max[i] = self.max[i - 1].max(self.block[i]);
                for j in i + 1..n {
                    self.block[j] = 0;
                    self.max[j] = self.max[i];
                }
                break;
            }
        }
        Some(current)
    }
}

/// Counts coloured partitions of `{1, ..., n+r}` into `k + r` nonempty blocks
/// in which the distinguished elements `1..=r` lie in distinct blocks, block
/// minima are uncoloured, elements of blocks holding a distinguished element
/// are uncoloured, and every remaining element takes one of `m` colours.
///
/// `n = r = 0` returns 1 by convention. Fails when `n + r` exceeds `cap`.
pub fn enumerate_colored_partitions(n: usize, k: usize, m: u32, r: usize, cap: usize) -> Result<BigUint> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let size = n + r;
    if size > cap {
        return Err(Error::EnumerationCap { size, cap });
    }
    if size == 0 {
        return Ok(if k == 0 { BigUint::one() } else { BigUint::zero() });
    }
    if k > n {
        return Ok(BigUint::zero());
    }
    let blocks = k + r;
    let colours = BigUint::from(m);
    let mut total = BigUint::zero();
    for assignment in RestrictedGrowth::new(size) {
        let used = assignment.iter().max().map_or(0, |b| b + 1);
        if used != blocks {
            continue;
        }
        // Elements 0..r are distinguished. In a restricted growth string
        // they sit in distinct blocks exactly when block[i] = i for i < r,
        // and those are then blocks 0..r.
        if (0..r).any(|i| assignment[i] != i) {
            continue;
        }
        let mut seen = vec![false; blocks];
        let mut coloured = 0u32;
        for &b in &assignment {
            if !seen[b] {
                seen[b] = true; // block minimum
            } else if b >= r {
                coloured += 1;
            }
        }
        total += colours.pow(coloured);
    }
    Ok(total)
}

/// Number of partitions of an `n`-set into exactly `k` blocks, by recursively
/// choosing the block that contains the smallest remaining element.
pub fn count_partitions(n: usize, k: usize) -> u64 {
    assert!(n < 64, "bitmask enumeration needs n < 64");
    let all = if n == 0 { 0 } else { (1u64 << n) - 1 };
    count_mask(all, k)
}

fn count_mask(rest: u64, k: usize) -> u64 {
    if rest == 0 {
        return u64::from(k == 0);
    }
    if k == 0 {
        return 0;
    }
    let low = rest & rest.wrapping_neg();
    let others = rest & !low;
    let mut total = 0;
    // every subset of `others` joins `low` in its block
    let mut sub = others;
    loop {
        total += count_mask(others & !sub, k - 1);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & others;
    }
    total
}

/// Bell number by brute-force partition counting.
pub fn bell_number(n: usize) -> u64 {
    (0..=n).map(|k| count_partitions(n, k)).sum()
}
