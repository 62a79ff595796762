//! The base-F numeral system.
//!
//! With origin `k`, position `s` has radix `r_s = (k+s)_F` and weight
//! `w_s = k_F (k+1)_F ... (k+s-1)_F`, so `w_{s+1} = w_s * r_s`. A numeral is the
//! digit vector `(c_0, c_1, ..., c_m)` with `c_s < r_s`, stored least
//! significant first, and it denotes `sum c_s * w_s`. Positions whose radix is
//! 1 (e.g. the first two Fibonacci positions for `k = 1`) always hold 0 and
//! are kept so that numerals print in their familiar `(0,0,1,2,...)` shape.

mod text;
mod zeckendorf;

pub use text::parse_digits;
pub use zeckendorf::{zeckendorf, zeckendorf_basis, Zeckendorf};

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::sequences::FSequence;

/// Maximum number of positions scanned while looking for growing radices.
pub const SCAN_HORIZON: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FBaseNumeral {
    sequence: Arc<FSequence>,
    origin: usize,
    digits: Vec<BigUint>,
}

fn radix(sequence: &FSequence, origin: usize, position: usize) -> Result<BigUint> {
    sequence
        .term(origin + position)
        .map_err(|e| match e {
            Error::IndexBeyondExplicitList { .. } => Error::NonRepresentable,
            e => e,
        })
}

fn normalize(digits: &mut Vec<BigUint>) {
    while digits.last().is_some_and(Zero::is_zero) {
        digits.pop();
    }
}

fn check_origin(origin: usize) -> Result<()> {
    if origin == 0 {
        Err(Error::InvalidOrigin(origin))
    } else {
        Ok(())
    }
}

/// Checks digit bounds without building a numeral.
fn validate(sequence: &FSequence, origin: usize, digits: &[BigUint]) -> Result<()> {
    check_origin(origin)?;
    for (position, digit) in digits.iter().enumerate() {
        if digit.is_zero() {
            continue;
        }
        let bound = sequence
            .term(origin + position)
            .map_err(|_| Error::DigitOutOfRange { position })?;
        if *digit >= bound {
            return Err(Error::DigitOutOfRange { position });
        }
    }
    Ok(())
}

/// `sum c_s * w_s` for an unchecked digit vector.
pub fn decode_digits(sequence: &FSequence, origin: usize, digits: &[BigUint]) -> Result<BigUint> {
    validate(sequence, origin, digits)?;
    let mut value = BigUint::zero();
    let mut weight = BigUint::one();
    for (s, digit) in digits.iter().enumerate() {
        if !digit.is_zero() {
            value += digit * &weight;
        }
        if s + 1 < digits.len() {
            weight *= sequence.term(origin + s)?;
        }
    }
    Ok(value)
}

impl FBaseNumeral {
    /// Validates digit bounds and strips trailing zeros.
    pub fn new(sequence: Arc<FSequence>, origin: usize, mut digits: Vec<BigUint>) -> Result<Self> {
        validate(&sequence, origin, &digits)?;
        normalize(&mut digits);
        Ok(FBaseNumeral {
            sequence,
            origin,
            digits,
        })
    }

    pub fn from_u64s(sequence: Arc<FSequence>, origin: usize, digits: &[u64]) -> Result<Self> {
        Self::new(sequence, origin, digits.iter().map(|&d| BigUint::from(d)).collect())
    }

    pub fn zero(sequence: Arc<FSequence>, origin: usize) -> Result<Self> {
        Self::new(sequence, origin, Vec::new())
    }

    pub fn sequence(&self) -> &Arc<FSequence> {
        &self.sequence
    }

    pub fn origin(&self) -> usize {
        self.origin
    }

    /// Normalized digits, least significant first. Empty for zero.
    pub fn digits(&self) -> &[BigUint] {
        &self.digits
    }

    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    /// The natural number this numeral denotes.
    pub fn decode(&self) -> BigUint {
        let mut value = BigUint::zero();
        let mut weight = BigUint::one();
        for (s, digit) in self.digits.iter().enumerate() {
            if !digit.is_zero() {
                value += digit * &weight;
            }
            if s + 1 < self.digits.len() {
                // Validated on construction, so the term exists.
                weight *= self.radix(s).expect("validated radix");
            }
        }
        value
    }

    fn radix(&self, position: usize) -> Result<BigUint> {
        radix(&self.sequence, self.origin, position)
    }

    /// Base-F representation of `alpha` by repeated Euclidean division,
    /// starting from the largest weight not exceeding `alpha`.
    pub fn encode(alpha: &BigUint, sequence: Arc<FSequence>, origin: usize) -> Result<Self> {
        check_origin(origin)?;
        let mut weights = Vec::new();
        let mut weight = BigUint::one();
        if !alpha.is_zero() {
            loop {
                let s = weights.len();
                if s >= SCAN_HORIZON {
                    return Err(Error::NonRepresentable);
                }
                let next = &weight * radix(&sequence, origin, s)?;
                weights.push(core::mem::replace(&mut weight, next));
                if weight > *alpha {
                    break;
                }
            }
        }
        let mut digits = Vec::with_capacity(weights.len());
        let mut rest = alpha.clone();
        for w in weights.iter().rev() {
            let (q, r) = rest.div_rem(w);
            digits.push(q);
            rest = r;
        }
        digits.reverse();
        normalize(&mut digits);
        Ok(FBaseNumeral {
            sequence,
            origin,
            digits,
        })
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.origin != other.origin {
            return Err(Error::OriginMismatch);
        }
        if !Arc::ptr_eq(&self.sequence, &other.sequence) && self.sequence != other.sequence {
            return Err(Error::SequenceMismatch);
        }
        Ok(())
    }

    /// Digit-wise sum of two digit vectors plus an initial carry, with the
    /// radix changing from position to position.
    fn carry_sum(&self, other: &[BigUint], carry_in: BigUint) -> Result<Self> {
        let mut digits = Vec::with_capacity(self.digits.len().max(other.len()) + 1);
        let mut carry = carry_in;
        let mut s = 0;
        while s < self.digits.len() || s < other.len() || !carry.is_zero() {
            if s >= SCAN_HORIZON {
                return Err(Error::NonRepresentable);
            }
            let mut d = carry;
            if let Some(a) = self.digits.get(s) {
                d += a;
            }
            if let Some(b) = other.get(s) {
                d += b;
            }
            let r = self.radix(s)?;
            if d < r {
                carry = BigUint::zero();
                digits.push(d);
            } else {
                let (q, rem) = d.div_rem(&r);
                carry = q;
                digits.push(rem);
            }
            s += 1;
        }
        normalize(&mut digits);
        Ok(FBaseNumeral {
            sequence: self.sequence.clone(),
            origin: self.origin,
            digits,
        })
    }

    /// Adds one ball at position 0; a full box empties and passes a single
    /// container on to the next position.
    pub fn successor(&self) -> Result<Self> {
        self.carry_sum(&[], BigUint::one())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        self.carry_sum(&other.digits, BigUint::zero())
    }

    /// The `<=_V` order: decided by the most significant differing digit.
    pub fn compare_lex_v(&self, other: &Self) -> Result<Ordering> {
        self.check_compatible(other)?;
        let zero = BigUint::zero();
        let len = self.digits.len().max(other.digits.len());
        for s in (0..len).rev() {
            let a = self.digits.get(s).unwrap_or(&zero);
            let b = other.digits.get(s).unwrap_or(&zero);
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return Ok(ord),
            }
        }
        Ok(Ordering::Equal)
    }

    /// `((k)_F - 1, (k+1)_F - 1, ..., (k+m-1)_F - 1)`, the largest numeral
    /// below weight `w_m`.
    pub fn max_prefix(sequence: Arc<FSequence>, origin: usize, m: usize) -> Result<Self> {
        check_origin(origin)?;
        let digits = (0..m)
            .map(|s| sequence.term(origin + s).map(|r| r - 1u32))
            .collect::<Result<Vec<_>>>()?;
        Self::new(sequence, origin, digits)
    }

    /// Decodes with the ordinary rising factorial of `k_F` as weights,
    /// `k_F (k_F + 1) ... (k_F + s - 1)`, instead of `k_F (k+1)_F ...`.
    /// The two agree for the natural sequence only.
    pub fn decode_not_upside_down(&self) -> BigUint {
        let base = self.sequence.term(self.origin).expect("validated radix");
        let mut value = BigUint::zero();
        let mut weight = BigUint::one();
        for (s, digit) in self.digits.iter().enumerate() {
            value += digit * &weight;
            weight *= &base + s;
        }
        value
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib() -> Arc<FSequence> {
        Arc::new(FSequence::fibonacci())
    }

    fn num(seq: &Arc<FSequence>, digits: &[u64]) -> FBaseNumeral {
        FBaseNumeral::from_u64s(seq.clone(), 1, digits).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn worked_fibonacci_values() {
        let f = fib();
        assert_eq!(num(&f, &[0, 0, 1, 2, 4]).decode(), big(29));
        assert_eq!(num(&f, &[0, 0, 1, 1]).decode(), big(3));
        assert_eq!(num(&f, &[]).decode(), big(0));
        assert_eq!(num(&f, &[0, 0, 0, 0, 4]).decode(), big(24));
    }

    #[test]
    fn digit_bounds() {
        let f = fib();
        assert_eq!(
            FBaseNumeral::from_u64s(f.clone(), 1, &[1]),
            Err(Error::DigitOutOfRange { position: 0 })
        );
        assert_eq!(
            FBaseNumeral::from_u64s(f.clone(), 1, &[0, 0, 2]),
            Err(Error::DigitOutOfRange { position: 2 })
        );
        assert_eq!(
            decode_digits(&f, 1, &[big(0), big(0), big(1), big(3)]),
            Err(Error::DigitOutOfRange { position: 3 })
        );
        assert_eq!(
            FBaseNumeral::zero(f, 0),
            Err(Error::InvalidOrigin(0))
        );
    }

    #[test]
    fn encode_examples() {
        let f = fib();
        let n = FBaseNumeral::encode(&big(29), f.clone(), 1).unwrap();
        assert_eq!(n, num(&f, &[0, 0, 1, 2, 4]));
        assert!(FBaseNumeral::encode(&big(0), f.clone(), 3).unwrap().is_zero());
        let two = Arc::new(FSequence::constant(2).unwrap());
        let eleven = FBaseNumeral::encode(&big(11), two.clone(), 1).unwrap();
        assert_eq!(eleven, num(&two, &[1, 1, 0, 1]));
    }

    #[test]
    fn encode_not_representable() {
        let ones = Arc::new(FSequence::constant(1).unwrap());
        assert!(FBaseNumeral::encode(&big(0), ones.clone(), 1).is_ok());
        assert_eq!(
            FBaseNumeral::encode(&big(1), ones, 1),
            Err(Error::NonRepresentable)
        );
        let short = Arc::new(FSequence::explicit([1u64, 2, 3].map(big).to_vec()).unwrap());
        // weights 1, 2, 6 then the list runs out.
        assert!(FBaseNumeral::encode(&big(5), short.clone(), 1).is_ok());
        assert_eq!(
            FBaseNumeral::encode(&big(6), short, 1),
            Err(Error::NonRepresentable)
        );
    }

    #[test]
    fn successor_transitions() {
        let f = fib();
        assert_eq!(num(&f, &[0, 0, 1, 2]).successor().unwrap(), num(&f, &[0, 0, 0, 0, 1]));
        // 6 + 1 = 1 * 2_F! + 1 * 4_F!; (0,0,1,1) denotes 3, not 7.
        let seven = num(&f, &[0, 0, 0, 0, 1]).successor().unwrap();
        assert_eq!(seven, num(&f, &[0, 0, 1, 0, 1]));
        assert_eq!(seven.decode(), big(7));
        assert_eq!(num(&f, &[0, 0, 1, 1]).decode(), big(3));
        assert_eq!(num(&f, &[]).successor().unwrap().decode(), big(1));
    }

    #[test]
    fn addition() {
        let f = fib();
        let sum = num(&f, &[0, 0, 1, 2]).add(&num(&f, &[0, 0, 1, 0])).unwrap();
        assert_eq!(sum, num(&f, &[0, 0, 0, 0, 1]));
        let x = num(&f, &[0, 0, 1, 2, 4]);
        assert_eq!(x.add(&num(&f, &[])).unwrap(), x);
        let nat = Arc::new(FSequence::natural());
        let a = num(&nat, &[0, 1]);
        assert_eq!(a.add(&a).unwrap(), num(&nat, &[0, 0, 1]));
        let two = num(&nat, &[0, 0, 1]);
        assert_eq!(two.add(&two).unwrap(), num(&nat, &[0, 0, 2]));
        // c_0 is bounded by 1_F = 1.
        assert_eq!(
            FBaseNumeral::from_u64s(nat.clone(), 1, &[1, 1]),
            Err(Error::DigitOutOfRange { position: 0 })
        );
        let other = FBaseNumeral::zero(f.clone(), 2).unwrap();
        assert_eq!(x.add(&other), Err(Error::OriginMismatch));
        assert_eq!(x.add(&num(&nat, &[])), Err(Error::SequenceMismatch));
    }

    #[test]
    fn lex_v_order() {
        let f = fib();
        let cmp = |a: &[u64], b: &[u64]| num(&f, a).compare_lex_v(&num(&f, b)).unwrap();
        assert_eq!(cmp(&[0, 0, 1, 0], &[0, 0, 0, 1]), Ordering::Less);
        assert_eq!(cmp(&[0, 0, 1, 2, 4], &[0, 0, 1, 2, 4]), Ordering::Equal);
        assert_eq!(cmp(&[0, 0, 1, 1], &[0, 0, 0, 2]), Ordering::Less);
        assert_eq!(cmp(&[0, 0, 0, 0, 1], &[0, 0, 1, 2]), Ordering::Greater);
    }

    #[test]
    fn max_prefix_examples() {
        let nat = Arc::new(FSequence::natural());
        let x = FBaseNumeral::max_prefix(nat.clone(), 1, 3).unwrap();
        assert_eq!(x, num(&nat, &[0, 1, 2]));
        assert_eq!(x.decode(), big(5));
        let two = Arc::new(FSequence::constant(2).unwrap());
        assert_eq!(FBaseNumeral::max_prefix(two, 1, 4).unwrap().decode(), big(15));
        let f = fib();
        let y = FBaseNumeral::max_prefix(f.clone(), 1, 4).unwrap();
        assert_eq!(y, num(&f, &[0, 0, 1, 2]));
        assert_eq!(y.decode(), big(5));
    }

    #[test]
    fn not_upside_down_agrees_for_natural() {
        let nat = Arc::new(FSequence::natural());
        for k in 1..4 {
            let x = FBaseNumeral::max_prefix(nat.clone(), k, 5).unwrap();
            assert_eq!(x.decode(), x.decode_not_upside_down());
        }
        assert_eq!(num(&fib(), &[]).decode_not_upside_down(), big(0));
    }
}
