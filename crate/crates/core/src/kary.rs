//! Exact arithmetic over the k-ary rationals `Z[1/k]`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A non-negative value `numerator · k^(-exponent)` in canonical form.
///
/// Canonical: if `exponent > 0` then `k` does not divide `numerator`;
/// zero is `(0, 0)`. Equality is therefore structural. Values above 1 are
/// allowed and keep exponent 0 once the fraction vanishes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KRational {
    base: u32,
    num: BigUint,
    exp: u64,
}

fn check_base(k: u32) -> Result<()> {
    if k < 2 {
        Err(Error::BaseTooSmall(k))
    } else {
        Ok(())
    }
}

impl KRational {
    /// `a · k^(-n)`, reduced.
    pub fn new(k: u32, a: impl Into<BigUint>, n: u64) -> Result<Self> {
        check_base(k)?;
        Ok(Self::canonical(k, a.into(), n))
    }

    fn canonical(k: u32, mut num: BigUint, mut exp: u64) -> Self {
        if num.is_zero() {
            return KRational { base: k, num, exp: 0 };
        }
        let kb = BigUint::from(k);
        while exp > 0 {
            let (q, r) = num.div_rem(&kb);
            if !r.is_zero() {
                break;
            }
            num = q;
            exp -= 1;
        }
        KRational { base: k, num, exp }
    }

    pub fn zero(k: u32) -> Self {
        assert!(k >= 2, "base must be at least 2");
        KRational { base: k, num: BigUint::zero(), exp: 0 }
    }

    pub fn one(k: u32) -> Self {
        assert!(k >= 2, "base must be at least 2");
        KRational { base: k, num: BigUint::one(), exp: 0 }
    }

    /// `k^(-n)`, the measure of a single word of length `n`.
    pub fn unit(k: u32, n: u64) -> Self {
        assert!(k >= 2, "base must be at least 2");
        KRational { base: k, num: BigUint::one(), exp: n }
    }

    pub fn from_integer(k: u32, a: impl Into<BigUint>) -> Self {
        assert!(k >= 2, "base must be at least 2");
        KRational { base: k, num: a.into(), exp: 0 }
    }

    /// Exact sum with an explicit base, so that the empty sum is defined.
    pub fn sum<'a>(k: u32, items: impl IntoIterator<Item = &'a KRational>) -> Self {
        items.into_iter().fold(Self::zero(k), |acc, x| &acc + x)
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn numerator(&self) -> &BigUint {
        &self.num
    }

    pub fn exponent(&self) -> u64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.exp == 0 && self.num.is_one()
    }

    fn same_base(&self, other: &Self) -> Result<()> {
        if self.base == other.base {
            Ok(())
        } else {
            Err(Error::BaseMismatch(self.base, other.base))
        }
    }

    fn aligned(&self, other: &Self) -> (BigUint, BigUint, u64) {
        let e = self.exp.max(other.exp);
        let kb = BigUint::from(self.base);
        let a = &self.num * kb.pow(to_u32(e - self.exp));
        let b = &other.num * kb.pow(to_u32(e - other.exp));
        (a, b, e)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_base(other)?;
        let (a, b, e) = self.aligned(other);
        Ok(Self::canonical(self.base, a + b, e))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_base(other)?;
        let (a, b, e) = self.aligned(other);
        if a < b {
            return Err(Error::NegativeResult);
        }
        Ok(Self::canonical(self.base, a - b, e))
    }

    pub fn try_cmp(&self, other: &Self) -> Result<Ordering> {
        self.same_base(other)?;
        let (a, b, _) = self.aligned(other);
        Ok(a.cmp(&b))
    }

    /// `self · k^j`.
    pub fn scale_pow(&self, j: i64) -> Self {
        if j >= 0 {
            let j = j as u64;
            if j <= self.exp {
                Self::canonical(self.base, self.num.clone(), self.exp - j)
            } else {
                let extra = BigUint::from(self.base).pow(to_u32(j - self.exp));
                Self::canonical(self.base, &self.num * extra, 0)
            }
        } else {
            Self::canonical(self.base, self.num.clone(), self.exp + j.unsigned_abs())
        }
    }

    /// The numerator with every factor of `k` removed (0 for zero).
    pub fn reduced_numerator(&self) -> BigUint {
        let kb = BigUint::from(self.base);
        let mut n = self.num.clone();
        if n.is_zero() {
            return n;
        }
        loop {
            let (q, r) = n.div_rem(&kb);
            if !r.is_zero() {
                return n;
            }
            n = q;
        }
    }

    /// Integer part and base-k fraction digits; no trailing zero digit.
    pub fn digits(&self) -> (BigUint, Vec<u32>) {
        let kb = BigUint::from(self.base);
        let scale = kb.pow(to_u32(self.exp));
        let (int, mut rem) = self.num.div_rem(&scale);
        let mut frac = vec![0u32; self.exp as usize];
        for slot in frac.iter_mut().rev() {
            let (q, r) = rem.div_rem(&kb);
            *slot = r.to_u32().expect("digit below k");
            rem = q;
        }
        (int, frac)
    }

    /// Inverse of [`KRational::digits`].
    pub fn from_digits(k: u32, int: impl Into<BigUint>, frac: &[u32]) -> Result<Self> {
        check_base(k)?;
        let kb = BigUint::from(k);
        let mut num: BigUint = int.into();
        for &d in frac {
            if d >= k {
                return Err(Error::LetterOutOfRange { letter: d, k });
            }
            num = num * &kb + BigUint::from(d);
        }
        Ok(Self::canonical(k, num, frac.len() as u64))
    }

    /// Sum of all base-k digits reduced into `{1..k-1}`.
    pub fn digit_sum_class(&self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroValue);
        }
        let (int, frac) = self.digits();
        let mut s: u64 = frac.iter().map(|&d| d as u64).sum();
        s += int_digits(&int, self.base).iter().map(|&d| d as u64).sum::<u64>();
        Ok(class_mod(s, self.base))
    }

    /// Parse the textual form produced by `Display`.
    pub fn parse(k: u32, s: &str) -> Result<Self> {
        check_base(k)?;
        let s = s.trim();
        let bad = || Error::parse(0, format!("bad {k}-ary number {s:?}"));
        let (ip, fp) = match s.split_once('.') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let int_digits = parse_digit_group(k, ip).ok_or_else(bad)?;
        let frac = match fp {
            Some(f) => {
                let d = parse_digit_group(k, f).ok_or_else(bad)?;
                if d.is_empty() || d.last() == Some(&0) {
                    return Err(bad());
                }
                d
            }
            None => Vec::new(),
        };
        if int_digits.is_empty() || (int_digits.len() > 1 && int_digits[0] == 0) {
            return Err(bad());
        }
        let kb = BigUint::from(k);
        let int = int_digits
            .iter()
            .fold(BigUint::zero(), |acc, &d| acc * &kb + BigUint::from(d));
        Self::from_digits(k, int, &frac)
    }
}

/// Reduce a non-negative integer into `{1..k-1}` modulo `k-1`.
pub fn class_mod(n: u64, k: u32) -> u32 {
    let m = (k - 1) as u64;
    match n % m {
        0 => m as u32,
        r => r as u32,
    }
}

fn to_u32(e: u64) -> u32 {
    u32::try_from(e).expect("exponent fits in u32")
}

fn int_digits(n: &BigUint, k: u32) -> Vec<u32> {
    if n.is_zero() {
        return vec![0];
    }
    let mut d = n.to_radix_be(k);
    d.shrink_to_fit();
    d.into_iter().map(u32::from).collect()
}

fn parse_digit_group(k: u32, s: &str) -> Option<Vec<u32>> {
    if k <= 10 {
        s.chars()
            .map(|c| c.to_digit(10).filter(|&d| d < k))
            .collect()
    } else if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        inner
            .split(',')
            .map(|t| t.trim().parse::<u32>().ok().filter(|&d| d < k))
            .collect()
    } else {
        s.parse::<u32>().ok().filter(|&d| d < k).map(|d| vec![d])
    }
}

fn write_group(f: &mut fmt::Formatter<'_>, k: u32, d: &[u32], force_brackets: bool) -> fmt::Result {
    if k <= 10 {
        for x in d {
            write!(f, "{x}")?;
        }
        Ok(())
    } else if d.len() == 1 && !force_brackets {
        write!(f, "{}", d[0])
    } else {
        let parts: Vec<String> = d.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Display for KRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (int, frac) = self.digits();
        write_group(f, self.base, &int_digits(&int, self.base), false)?;
        if !frac.is_empty() {
            f.write_str(".")?;
            write_group(f, self.base, &frac, true)?;
        }
        Ok(())
    }
}

impl fmt::Debug for KRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}^{} ({}, base {})", self.num, self.base, self.exp, self, self.base)
    }
}

impl PartialOrd for KRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.try_cmp(other).ok()
    }
}

/// Panics on base mismatch; use [`KRational::checked_add`] to handle it.
impl Add for &KRational {
    type Output = KRational;
    fn add(self, rhs: &KRational) -> KRational {
        self.checked_add(rhs).expect("KRational addition")
    }
}

impl Add for KRational {
    type Output = KRational;
    fn add(self, rhs: KRational) -> KRational {
        &self + &rhs
    }
}

/// Panics on base mismatch or a negative result.
impl Sub for &KRational {
    type Output = KRational;
    fn sub(self, rhs: &KRational) -> KRational {
        self.checked_sub(rhs).expect("KRational subtraction")
    }
}

impl Sub for KRational {
    type Output = KRational;
    fn sub(self, rhs: KRational) -> KRational {
        &self - &rhs
    }
}
