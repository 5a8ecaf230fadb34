//! The ruler sequence `s_i = 1 + (trailing zero bits of i)`, its prefix
//! sums, and the check that the length-`k` prefix is the lightest window of
//! length `k` anywhere in the sequence.
//!
//! The sequence starts `1, 2, 1, 3, 1, 2, 1, 4, ...` (OEIS A001511). Its
//! prefix sums give the bottom edges of the bars of a disk.

use crate::error::{param, Error, Result};

/// `s_i`, read off the binary representation of `i`.
pub fn ruler(i: u64) -> Result<u32> {
    if i == 0 {
        return Err(param("ruler sequence is indexed from 1"));
    }
    Ok(i.trailing_zeros() + 1)
}

/// `s_i` from the self-similarity of the sequence: odd terms are 1, and
/// dropping them and decrementing the even terms gives the sequence back,
/// so `s_{2k} = s_k + 1`.
///
/// Kept alongside [`ruler`] as an independent route for cross-checking.
pub fn ruler_recursive(i: u64) -> Result<u32> {
    if i == 0 {
        return Err(param("ruler sequence is indexed from 1"));
    }
    let mut i = i;
    let mut s = 1;
    while i.is_multiple_of(2) {
        i /= 2;
        s += 1;
    }
    Ok(s)
}

/// `s_1 + ... + s_i` without a table. Every `j ≤ i` contributes 1, and each
/// power of two `2^t` contributes one more for each of its `⌊i/2^t⌋`
/// multiples, which totals `2i − popcount(i)`.
pub fn partial_sum(i: u64) -> Result<i64> {
    let doubled = i
        .checked_mul(2)
        .ok_or(Error::Overflow("ruler partial sum"))?;
    let sum = doubled - u64::from(i.count_ones());
    i64::try_from(sum).map_err(|_| Error::Overflow("ruler partial sum"))
}

/// Eagerly built prefix sums of the ruler sequence; `sums[i] = s_1 + ... + s_i`.
///
/// The table never grows after construction: lookups past `limit` fail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixTable {
    limit: u64,
    sums: Vec<i64>,
}

impl PrefixTable {
    pub fn new(limit: u64) -> Result<Self> {
        if limit == 0 {
            return Err(param("prefix table limit must be positive"));
        }
        let len = usize::try_from(limit)
            .ok()
            .and_then(|l| l.checked_add(1))
            .ok_or(Error::Overflow("prefix table size"))?;
        let mut sums = Vec::with_capacity(len);
        sums.push(0i64);
        let mut acc = 0i64;
        for i in 1..=limit {
            acc = acc
                .checked_add(i64::from(ruler(i)?))
                .ok_or(Error::Overflow("ruler prefix sum"))?;
            sums.push(acc);
        }
        Ok(Self { limit, sums })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn sums(&self) -> &[i64] {
        &self.sums
    }

    /// `s_1 + ... + s_i`; zero for `i = 0`.
    pub fn prefix_sum(&self, i: u64) -> Result<i64> {
        if i > self.limit {
            return Err(Error::Range {
                index: i,
                limit: self.limit,
            });
        }
        Ok(self.sums[i as usize])
    }

    /// Bottom edge `y_i = s_1 + ... + s_{i-1}` of bar `B_i`.
    pub fn bar_y(&self, i: u64) -> Result<i64> {
        if i == 0 {
            return Err(param("bars are indexed from 1"));
        }
        self.prefix_sum(i - 1)
    }

    /// Sum of the window `s_r + ... + s_{r+k-1}`.
    pub fn window_sum(&self, k: u64, r: u64) -> Result<i64> {
        if k == 0 || r == 0 {
            return Err(param("window length and start must be positive"));
        }
        let end = r.checked_add(k - 1).ok_or(Error::Overflow("window end"))?;
        Ok(self.prefix_sum(end)? - self.prefix_sum(r - 1)?)
    }

    /// Whether the length-`k` prefix weighs no more than the window starting at `r`.
    pub fn check_lemma1(&self, k: u64, r: u64) -> Result<bool> {
        let window = self.window_sum(k, r)?;
        Ok(self.prefix_sum(k)? <= window)
    }

    /// Checks every window of length `1..=k_max` that fits inside the table.
    /// Returns the first failing `(k, r)` in `(k, r)` order, if any.
    pub fn first_lemma1_failure(&self, k_max: u64) -> Result<Option<(u64, u64)>> {
        if k_max > self.limit {
            return Err(Error::Range {
                index: k_max,
                limit: self.limit,
            });
        }
        for k in 1..=k_max {
            for r in 1..=(self.limit - k + 1) {
                if !self.check_lemma1(k, r)? {
                    return Ok(Some((k, r)));
                }
            }
        }
        Ok(None)
    }
}

/// Outcome of an exhaustive window check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lemma1Summary {
    pub k_max: u64,
    pub r_max: u64,
    pub windows_checked: u64,
    pub first_failure: Option<(u64, u64)>,
}

/// Checks all windows with length `1..=k_max` and start `1..=r_max`.
pub fn check_lemma1_range(k_max: u64, r_max: u64) -> Result<Lemma1Summary> {
    if k_max == 0 || r_max == 0 {
        return Err(param("--k-max and --r-max must be positive"));
    }
    let limit = r_max
        .checked_add(k_max - 1)
        .ok_or(Error::Overflow("window end"))?;
    let table = PrefixTable::new(limit)?;
    let mut windows_checked = 0;
    for k in 1..=k_max {
        for r in 1..=r_max {
            windows_checked += 1;
            if !table.check_lemma1(k, r)? {
                return Ok(Lemma1Summary {
                    k_max,
                    r_max,
                    windows_checked,
                    first_failure: Some((k, r)),
                });
            }
        }
    }
    Ok(Lemma1Summary {
        k_max,
        r_max,
        windows_checked,
        first_failure: None,
    })
}
