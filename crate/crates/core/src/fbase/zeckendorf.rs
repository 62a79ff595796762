//! Zeckendorf representation over the distinct Fibonacci values 1, 2, 3, 5, 8, ...

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Digits over [`zeckendorf_basis`], least significant first. Each digit is
/// 0 or 1 and no two consecutive digits are both 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Zeckendorf {
    digits: Vec<bool>,
}

/// The first `len` distinct Fibonacci values `1, 2, 3, 5, ...`.
pub fn zeckendorf_basis(len: usize) -> Vec<BigUint> {
    let mut basis: Vec<BigUint> = Vec::with_capacity(len);
    for i in 0..len {
        let next = match i {
            0 => BigUint::one(),
            1 => BigUint::from(2u32),
            _ => &basis[i - 1] + &basis[i - 2],
        };
        basis.push(next);
    }
    basis
}

/// Greedy representation: repeatedly take the largest Fibonacci value that
/// still fits.
pub fn zeckendorf(alpha: &BigUint) -> Zeckendorf {
    let mut basis = zeckendorf_basis(2);
    while basis.last().is_some_and(|b| b <= alpha) {
        let n = basis.len();
        let next = &basis[n - 1] + &basis[n - 2];
        basis.push(next);
    }
    let mut digits = alloc::vec![false; basis.len()];
    let mut rest = alpha.clone();
    for (i, b) in basis.iter().enumerate().rev() {
        if *b <= rest {
            rest -= b;
            digits[i] = true;
        }
    }
    while digits.last() == Some(&false) {
        digits.pop();
    }
    Zeckendorf { digits }
}

impl Zeckendorf {
    pub fn digits(&self) -> &[bool] {
        &self.digits
    }

    /// The Fibonacci values used, largest first.
    pub fn terms(&self) -> Vec<BigUint> {
        let basis = zeckendorf_basis(self.digits.len());
        self.digits
            .iter()
            .zip(basis)
            .filter_map(|(&d, b)| d.then_some(b))
            .rev()
            .collect()
    }

    pub fn value(&self) -> BigUint {
        self.terms().iter().fold(BigUint::zero(), |acc, t| acc + t)
    }
}

/// `21+8+3`; zero prints as `0`.
impl fmt::Display for Zeckendorf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}
