//! Exact counting: Catalan, Motzkin and Riordan numbers, binomials, and the
//! two closed-form distributions of pattern counts over Dyck paths.

use std::fmt;

use crate::error::CountError;

/// Exact nonnegative integer. All arithmetic is checked and reports overflow
/// instead of wrapping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CountValue(u128);

impl CountValue {
    pub const ZERO: CountValue = CountValue(0);
    pub const ONE: CountValue = CountValue(1);

    pub fn new(v: u128) -> Self {
        CountValue(v)
    }

    pub fn get(self) -> u128 {
        self.0
    }

    pub fn checked_add(self, rhs: CountValue, what: &'static str) -> Result<CountValue, CountError> {
        self.0
            .checked_add(rhs.0)
            .map(CountValue)
            .ok_or(CountError::Overflow(what))
    }

    pub fn checked_sub(self, rhs: CountValue, what: &'static str) -> Result<CountValue, CountError> {
        self.0
            .checked_sub(rhs.0)
            .map(CountValue)
            .ok_or(CountError::Overflow(what))
    }

    pub fn checked_mul(self, rhs: CountValue, what: &'static str) -> Result<CountValue, CountError> {
        self.0
            .checked_mul(rhs.0)
            .map(CountValue)
            .ok_or(CountError::Overflow(what))
    }

    /// Converts to `u64`, failing if the value does not fit.
    pub fn to_u64(self) -> Option<u64> {
        u64::try_from(self.0).ok()
    }
}

impl From<u64> for CountValue {
    fn from(v: u64) -> Self {
        CountValue(v as u128)
    }
}

impl From<usize> for CountValue {
    fn from(v: usize) -> Self {
        CountValue(v as u128)
    }
}

impl fmt::Display for CountValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn binomial(n: usize, k: usize) -> Result<CountValue, CountError> {
    if k > n {
        return Ok(CountValue::ZERO);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) is C(n, i + 1), always an integer.
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or(CountError::Overflow("binomial"))?
            / (i as u128 + 1);
    }
    Ok(CountValue(acc))
}

/// The first `len` Catalan numbers, via `C(m+1) = sum C(i) C(m-i)`.
pub fn catalan_sequence(len: usize) -> Result<Vec<CountValue>, CountError> {
    let mut seq: Vec<CountValue> = Vec::with_capacity(len);
    for m in 0..len {
        if m == 0 {
            seq.push(CountValue::ONE);
            continue;
        }
        let mut sum = CountValue::ZERO;
        for i in 0..m {
            let term = seq[i].checked_mul(seq[m - 1 - i], "catalan")?;
            sum = sum.checked_add(term, "catalan")?;
        }
        seq.push(sum);
    }
    Ok(seq)
}

/// The first `len` Motzkin numbers, via
/// `M(m) = M(m-1) + sum_{k=0}^{m-2} M(k) M(m-2-k)`.
pub fn motzkin_sequence(len: usize) -> Result<Vec<CountValue>, CountError> {
    let mut seq: Vec<CountValue> = Vec::with_capacity(len);
    for m in 0..len {
        if m < 2 {
            seq.push(CountValue::ONE);
            continue;
        }
        let mut sum = seq[m - 1];
        for k in 0..=m - 2 {
            let term = seq[k].checked_mul(seq[m - 2 - k], "motzkin")?;
            sum = sum.checked_add(term, "motzkin")?;
        }
        seq.push(sum);
    }
    Ok(seq)
}

/// The first `len` Riordan numbers, using `M(m) = R(m) + R(m+1)`.
pub fn riordan_sequence(len: usize) -> Result<Vec<CountValue>, CountError> {
    let motz = motzkin_sequence(len)?;
    let mut seq = Vec::with_capacity(len);
    for m in 0..len {
        if m == 0 {
            seq.push(CountValue::ONE);
        } else {
            let prev: CountValue = seq[m - 1];
            seq.push(motz[m - 1].checked_sub(prev, "riordan")?);
        }
    }
    Ok(seq)
}

pub fn catalan(n: usize) -> Result<CountValue, CountError> {
    Ok(catalan_sequence(n + 1)?[n])
}

pub fn motzkin(n: usize) -> Result<CountValue, CountError> {
    Ok(motzkin_sequence(n + 1)?[n])
}

pub fn riordan(n: usize) -> Result<CountValue, CountError> {
    Ok(riordan_sequence(n + 1)?[n])
}

/// Number of Dyck n-paths with exactly `k` occurrences of `UDU`:
/// `C(n-1, k) * M(n-1-k)`.
pub fn formula_udu(n: usize, k: usize) -> Result<CountValue, CountError> {
    if n == 0 {
        return Err(CountError::SizeOutOfRange(n));
    }
    if k > n - 1 {
        return Err(CountError::KOutOfRange { n, k });
    }
    binomial(n - 1, k)?.checked_mul(motzkin(n - 1 - k)?, "formula_udu")
}

/// Number of Dyck n-paths with exactly `k` occurrences of `DDU`:
/// `C(n-1, 2k) * 2^(n-1-2k) * C(k)`.
pub fn formula_ddu(n: usize, k: usize) -> Result<CountValue, CountError> {
    if n == 0 {
        return Err(CountError::SizeOutOfRange(n));
    }
    if 2 * k > n - 1 {
        return Err(CountError::KOutOfRange { n, k });
    }
    let exp = (n - 1 - 2 * k) as u32;
    let pow = 2u128
        .checked_pow(exp)
        .map(CountValue)
        .ok_or(CountError::Overflow("formula_ddu"))?;
    binomial(n - 1, 2 * k)?
        .checked_mul(pow, "formula_ddu")?
        .checked_mul(catalan(k)?, "formula_ddu")
}
