//! GF(2^m) arithmetic via log/antilog tables, cyclotomic cosets modulo
//! `n = 2^m - 1`, and minimal polynomials of powers of the primitive element.

use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};
use crate::poly::BinaryPolynomial;

pub const MIN_DEGREE: u32 = 2;
pub const MAX_DEGREE: u32 = 16;

/// Default primitive polynomial for each supported extension degree, as a
/// coefficient mask with the constant term in bit 0.
pub fn default_primitive_mask(m: u32) -> Option<u64> {
    Some(match m {
        2 => 0x7,  // x^2 + x + 1
        3 => 0xb,  // x^3 + x + 1
        4 => 0x13, // x^4 + x + 1
        5 => 0x25, // x^5 + x^2 + 1
        // α^9 must be a root of 1 + y + y^3 for the availability family.
        6 => 0x61,     // x^6 + x^5 + 1
        7 => 0x83,     // x^7 + x + 1
        8 => 0x11d,    // x^8 + x^4 + x^3 + x^2 + 1
        9 => 0x211,    // x^9 + x^4 + 1
        10 => 0x409,   // x^10 + x^3 + 1
        11 => 0x805,   // x^11 + x^2 + 1
        12 => 0x1053,  // x^12 + x^6 + x^4 + x + 1
        13 => 0x201b,  // x^13 + x^4 + x^3 + x + 1
        14 => 0x4443,  // x^14 + x^10 + x^6 + x + 1
        15 => 0x8003,  // x^15 + x + 1
        16 => 0x1100b, // x^16 + x^12 + x^3 + x + 1
        _ => return None,
    })
}

/// An element of GF(2^m) in polynomial-basis coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub const fn new(bits: u16) -> Self {
        FieldElement(bits)
    }

    pub const fn bits(self) -> u16 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Self) -> Self {
        FieldElement(self.0 ^ rhs.0)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#06b}", self.0)
    }
}

/// GF(2^m) with a fixed primitive element `α` (the class of `x` modulo the
/// primitive polynomial).
#[derive(Clone)]
pub struct GaloisField {
    m: u32,
    primitive_poly: BinaryPolynomial,
    // exp[i] = α^i for i in 0..2n, doubled so products skip a modulo.
    exp: Vec<u16>,
    log: Vec<u16>,
}

impl GaloisField {
    /// Field with the built-in primitive polynomial for `m`.
    pub fn new(m: u32) -> Result<Self> {
        let mask = default_primitive_mask(m).ok_or(Error::UnsupportedDegree(m))?;
        Self::with_polynomial(m, BinaryPolynomial::from_mask(mask))
    }

    /// Field defined by a caller-supplied polynomial, which must have degree
    /// `m` and be primitive.
    pub fn with_polynomial(m: u32, poly: BinaryPolynomial) -> Result<Self> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) {
            return Err(Error::UnsupportedDegree(m));
        }
        let not_primitive = || Error::NotPrimitive {
            m,
            poly: poly.to_hex(),
        };
        if poly.degree() != Some(m as usize) || !poly.coeff(0) {
            return Err(not_primitive());
        }
        let mask = poly.to_mask().ok_or_else(not_primitive)? as u32;
        let size = 1usize << m;
        let n = size - 1;
        let mut exp = vec![0u16; 2 * n];
        let mut log = vec![0u16; size];
        let mut seen = vec![false; size];
        let mut cur: u32 = 1;
        for (i, slot) in exp.iter_mut().enumerate().take(n) {
            if seen[cur as usize] {
                // α has order i < n.
                return Err(not_primitive());
            }
            seen[cur as usize] = true;
            *slot = cur as u16;
            log[cur as usize] = i as u16;
            cur <<= 1;
            if cur & (1 << m) != 0 {
                cur ^= mask;
            }
        }
        if cur != 1 {
            return Err(not_primitive());
        }
        exp.copy_within(0..n, n);
        Ok(Self {
            m,
            primitive_poly: poly,
            exp,
            log,
        })
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Order of the multiplicative group, `2^m - 1`.
    #[inline]
    pub fn order(&self) -> usize {
        (1usize << self.m) - 1
    }

    pub fn primitive_poly(&self) -> &BinaryPolynomial {
        &self.primitive_poly
    }

    pub fn element(&self, bits: u16) -> Option<FieldElement> {
        ((bits as usize) < (1usize << self.m)).then_some(FieldElement(bits))
    }

    /// `α^e` with `e` reduced modulo `n`.
    #[inline]
    pub fn alpha_pow(&self, e: usize) -> FieldElement {
        FieldElement(self.exp[e % self.order()])
    }

    /// Discrete log base `α`; `None` for zero.
    #[inline]
    pub fn log(&self, a: FieldElement) -> Option<usize> {
        (!a.is_zero()).then(|| self.log[a.0 as usize] as usize)
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        FieldElement(self.exp[self.log[a.0 as usize] as usize + self.log[b.0 as usize] as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        let l = self.log(a)?;
        Some(self.alpha_pow(self.order() - l))
    }

    pub fn pow(&self, a: FieldElement, e: usize) -> FieldElement {
        match self.log(a) {
            None if e == 0 => FieldElement::ONE,
            None => FieldElement::ZERO,
            Some(l) => self.alpha_pow((l * (e % self.order())) % self.order()),
        }
    }

    /// Minimal polynomial over GF(2) of `α^exponent`: the product of
    /// `(x - α^j)` over the cyclotomic coset of `exponent`.
    pub fn minimal_polynomial(&self, exponent: usize) -> BinaryPolynomial {
        let coset = CyclotomicCoset::containing(self.order(), exponent);
        // Coefficients in GF(2^m), index = power of x.
        let mut coeffs = vec![FieldElement::ONE];
        for &j in coset.members() {
            let root = self.alpha_pow(j);
            let mut next = vec![FieldElement::ZERO; coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] = next[i + 1] + c;
                next[i] = next[i] + self.mul(c, root);
            }
            coeffs = next;
        }
        BinaryPolynomial::from_exponents(coeffs.iter().enumerate().filter_map(|(i, c)| {
            debug_assert!(c.0 <= 1, "minimal polynomial coefficient outside GF(2)");
            (c.0 == 1).then_some(i)
        }))
    }
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GaloisField")
            .field("m", &self.m)
            .field("primitive_poly", &self.primitive_poly)
            .finish()
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.primitive_poly == other.primitive_poly
    }
}

impl Eq for GaloisField {}

/// Orbit of an exponent under `j -> 2j mod n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicCoset {
    n: usize,
    members: Vec<usize>,
}

impl CyclotomicCoset {
    /// Coset of `j mod n`. `n` must be odd.
    pub fn containing(n: usize, j: usize) -> Self {
        debug_assert!(n % 2 == 1);
        let start = j % n;
        let mut members = vec![start];
        let mut cur = (2 * start) % n;
        while cur != start {
            members.push(cur);
            cur = (2 * cur) % n;
        }
        members.sort_unstable();
        Self { n, members }
    }

    pub fn modulus(&self) -> usize {
        self.n
    }

    pub fn representative(&self) -> usize {
        self.members[0]
    }

    /// Sorted ascending.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Partition of `{0, …, n-1}` into cyclotomic cosets, ordered by
/// representative.
pub fn cyclotomic_cosets(n: usize) -> Result<Vec<CyclotomicCoset>> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenModulus(n));
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for j in 0..n {
        if seen[j] {
            continue;
        }
        let c = CyclotomicCoset::containing(n, j);
        for &x in c.members() {
            seen[x] = true;
        }
        out.push(c);
    }
    Ok(out)
}
