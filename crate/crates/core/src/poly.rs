//! Polynomials over GF(2) with bit-packed coefficients.
//!
//! Bit `i` holds the coefficient of `x^i`. Values are immutable: every
//! operation returns a new polynomial with its degree recomputed.

use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};
use crate::gf::{FieldElement, GaloisField};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryPolynomial {
    words: Vec<u64>,
    degree: Option<usize>,
}

fn shl_xor_into(dst: &mut Vec<u64>, src: &[u64], shift: usize) {
    let word_shift = shift / 64;
    let bit_shift = shift % 64;
    let needed = src.len() + word_shift + 1;
    if dst.len() < needed {
        dst.resize(needed, 0);
    }
    for (i, &w) in src.iter().enumerate() {
        if w == 0 {
            continue;
        }
        dst[i + word_shift] ^= w << bit_shift;
        if bit_shift != 0 {
            dst[i + word_shift + 1] ^= w >> (64 - bit_shift);
        }
    }
}

impl BinaryPolynomial {
    fn from_raw(mut words: Vec<u64>) -> Self {
        while words.last() == Some(&0) {
            words.pop();
        }
        let degree = words
            .last()
            .map(|w| (words.len() - 1) * 64 + 63 - w.leading_zeros() as usize);
        Self { words, degree }
    }

    pub fn zero() -> Self {
        Self::from_raw(Vec::new())
    }

    pub fn one() -> Self {
        Self::from_raw(vec![1])
    }

    /// The monomial `x^e`.
    pub fn monomial(e: usize) -> Self {
        Self::from_exponents([e])
    }

    /// Sum of `x^e` over the given exponents; repeated exponents cancel.
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exponents: I) -> Self {
        let mut words = Vec::new();
        for e in exponents {
            if words.len() <= e / 64 {
                words.resize(e / 64 + 1, 0);
            }
            words[e / 64] ^= 1u64 << (e % 64);
        }
        Self::from_raw(words)
    }

    pub fn from_mask(mask: u64) -> Self {
        Self::from_raw(vec![mask])
    }

    /// `x^n - 1` (equal to `x^n + 1` over GF(2)).
    pub fn x_n_minus_one(n: usize) -> Self {
        Self::from_exponents([0, n])
    }

    /// `None` for the zero polynomial.
    #[inline]
    pub fn degree(&self) -> Option<usize> {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.degree.is_none()
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn exponents(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                out.push(wi * 64 + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Low 64 coefficients as a mask; `None` if the degree exceeds 63.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn poly_mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut acc = Vec::new();
        for e in self.exponents() {
            shl_xor_into(&mut acc, &other.words, e);
        }
        Self::from_raw(acc)
    }

    /// Euclidean division: returns `(q, r)` with `self = q * divisor + r`
    /// and `deg r < deg divisor`.
    pub fn poly_divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree.ok_or(Error::DivisionByZero)?;
        let mut rem = self.words.clone();
        let mut quot: Vec<u64> = Vec::new();
        let mut cur = self.degree;
        while let Some(deg) = cur {
            if deg < dd {
                break;
            }
            let shift = deg - dd;
            shl_xor_into(&mut rem, &divisor.words, shift);
            if quot.len() <= shift / 64 {
                quot.resize(shift / 64 + 1, 0);
            }
            quot[shift / 64] |= 1u64 << (shift % 64);
            cur = highest_bit_below(&rem, deg);
        }
        Ok((Self::from_raw(quot), Self::from_raw(rem)))
    }

    /// Horner evaluation at a field element.
    pub fn poly_eval(&self, field: &GaloisField, at: FieldElement) -> FieldElement {
        let Some(deg) = self.degree else {
            return FieldElement::ZERO;
        };
        let mut acc = FieldElement::ZERO;
        for i in (0..=deg).rev() {
            acc = field.mul(acc, at);
            if self.coeff(i) {
                acc = acc + FieldElement::ONE;
            }
        }
        acc
    }

    /// `x^deg · p(1/x)`.
    pub fn reciprocal(&self) -> Self {
        match self.degree {
            None => Self::zero(),
            Some(d) => Self::from_exponents(self.exponents().into_iter().map(|e| d - e)),
        }
    }

    /// Hex string of the coefficient mask, constant term in the least
    /// significant bit; most significant digit first, no prefix.
    pub fn to_hex(&self) -> String {
        let Some(deg) = self.degree else {
            return "0".to_string();
        };
        let digits = deg / 4 + 1;
        (0..digits)
            .rev()
            .map(|d| {
                let nibble = (self.words[d * 4 / 64] >> (d * 4 % 64)) & 0xf;
                char::from_digit(nibble as u32, 16).unwrap()
            })
            .collect()
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t
            .strip_prefix("0x")
            .or_else(|| t.strip_prefix("0X"))
            .unwrap_or(t);
        if t.is_empty() {
            return Err(Error::InvalidHex(s.to_string()));
        }
        let mut exps = Vec::new();
        for (pos, ch) in t.chars().rev().enumerate() {
            let nibble = ch
                .to_digit(16)
                .ok_or_else(|| Error::InvalidHex(s.to_string()))?;
            for b in 0..4 {
                if (nibble >> b) & 1 == 1 {
                    exps.push(pos * 4 + b);
                }
            }
        }
        Ok(Self::from_exponents(exps))
    }
}

fn highest_bit_below(words: &[u64], limit: usize) -> Option<usize> {
    // Bits at or above `limit` are already clear.
    let top = (limit / 64).min(words.len().checked_sub(1)?);
    (0..=top)
        .rev()
        .find(|&wi| words[wi] != 0)
        .map(|wi| wi * 64 + 63 - words[wi].leading_zeros() as usize)
}

impl Add for &BinaryPolynomial {
    type Output = BinaryPolynomial;
    fn add(self, rhs: Self) -> BinaryPolynomial {
        let len = self.words.len().max(rhs.words.len());
        let words = (0..len)
            .map(|i| self.words.get(i).unwrap_or(&0) ^ rhs.words.get(i).unwrap_or(&0))
            .collect();
        BinaryPolynomial::from_raw(words)
    }
}

impl Mul for &BinaryPolynomial {
    type Output = BinaryPolynomial;
    fn mul(self, rhs: Self) -> BinaryPolynomial {
        self.poly_mul(rhs)
    }
}

impl fmt::Display for BinaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .exponents()
            .into_iter()
            .rev()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for BinaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(exps: &[usize]) -> BinaryPolynomial {
        BinaryPolynomial::from_exponents(exps.iter().copied())
    }

    #[test]
    fn x15_minus_one_factorization() {
        let g = p(&[0, 5]);
        let h = p(&[0, 5, 10]);
        assert_eq!(g.poly_mul(&h), BinaryPolynomial::x_n_minus_one(15));
        let (q, r) = BinaryPolynomial::x_n_minus_one(15).poly_divrem(&h).unwrap();
        assert_eq!(q, g);
        assert!(r.is_zero());
    }

    #[test]
    fn identities() {
        let a = p(&[0, 3, 7, 70]);
        assert_eq!(a.poly_mul(&BinaryPolynomial::one()), a);
        assert_eq!(p(&[0, 1]).poly_mul(&p(&[0, 1])), p(&[0, 2]));
        let (q, r) = a.poly_divrem(&a).unwrap();
        assert_eq!(q, BinaryPolynomial::one());
        assert!(r.is_zero());
        let (q, r) = p(&[0, 2]).poly_divrem(&p(&[0, 3])).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, p(&[0, 2]));
    }

    #[test]
    fn division_by_zero_rejected() {
        assert!(matches!(
            p(&[1]).poly_divrem(&BinaryPolynomial::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn degree_tracks_leading_term() {
        assert_eq!(BinaryPolynomial::zero().degree(), None);
        assert_eq!(p(&[0, 64]).degree(), Some(64));
        assert_eq!((&p(&[0, 64]) + &p(&[64])).degree(), Some(0));
    }

    #[test]
    fn hex_round_trip() {
        let h = p(&[0, 5, 10]);
        assert_eq!(h.to_hex(), "421");
        assert_eq!(BinaryPolynomial::from_hex("0x421").unwrap(), h);
        assert_eq!(BinaryPolynomial::zero().to_hex(), "0");
        assert_eq!(p(&[0, 6]).to_hex(), "41");
        let big = p(&[0, 9, 27, 100]);
        assert_eq!(BinaryPolynomial::from_hex(&big.to_hex()).unwrap(), big);
        assert!(BinaryPolynomial::from_hex("zz").is_err());
    }

    #[test]
    fn reciprocal_reverses() {
        assert_eq!(p(&[0, 1, 3]).reciprocal(), p(&[0, 2, 3]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, 1, 10]).to_string(), "x^10 + x + 1");
    }
}
