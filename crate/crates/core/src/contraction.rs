//! Contraction of a 2-local binary code with stride repair groups onto an
//! additive code over GF(4).
//!
//! Each group `{i, i + n/3, i + 2n/3}` carries an even-weight projection, so
//! it takes one of four values, read as a GF(4) symbol:
//!
//! | projection | symbol | encoding |
//! |------------|--------|----------|
//! | 000        | 0      | 00       |
//! | 011        | 1      | 01       |
//! | 101        | ω      | 10       |
//! | 110        | ω̄      | 11       |
//!
//! The map is GF(2)-linear, and every nonzero symbol has binary weight 2, so
//! the binary distance is exactly twice the GF(4) Hamming distance.

use std::fmt;
use std::ops::Add;

use serde::Serialize;

use crate::bits::BitVec;
use crate::code::CyclicCode;
use crate::error::{Error, Result};
use crate::locality::RepairGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum F4 {
    Zero,
    One,
    Omega,
    OmegaBar,
}

impl F4 {
    pub fn bits(self) -> u8 {
        match self {
            F4::Zero => 0b00,
            F4::One => 0b01,
            F4::Omega => 0b10,
            F4::OmegaBar => 0b11,
        }
    }

    pub fn from_bits(b: u8) -> F4 {
        match b & 0b11 {
            0b00 => F4::Zero,
            0b01 => F4::One,
            0b10 => F4::Omega,
            _ => F4::OmegaBar,
        }
    }

    /// Symbol for a group projection `(first, second, third)`; `None` for
    /// odd-weight patterns.
    pub fn from_projection(p: [bool; 3]) -> Option<F4> {
        match p {
            [false, false, false] => Some(F4::Zero),
            [false, true, true] => Some(F4::One),
            [true, false, true] => Some(F4::Omega),
            [true, true, false] => Some(F4::OmegaBar),
            _ => None,
        }
    }
}

impl Add for F4 {
    type Output = F4;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: F4) -> F4 {
        F4::from_bits(self.bits() ^ rhs.bits())
    }
}

impl fmt::Display for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            F4::Zero => "0",
            F4::One => "1",
            F4::Omega => "w",
            F4::OmegaBar => "W",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct F4Codeword {
    pub symbols: Vec<F4>,
}

impl F4Codeword {
    pub fn weight(&self) -> usize {
        self.symbols.iter().filter(|s| **s != F4::Zero).count()
    }

    pub fn add(&self, other: &F4Codeword) -> F4Codeword {
        F4Codeword {
            symbols: self
                .symbols
                .iter()
                .zip(&other.symbols)
                .map(|(a, b)| *a + *b)
                .collect(),
        }
    }
}

impl fmt::Display for F4Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Parameters of the contracted code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct F4Image {
    pub length: usize,
    /// `log2` of the number of codewords; equals `k` of the binary code.
    pub log2_size: usize,
    /// Minimum Hamming distance over GF(4); `None` when the code was too
    /// large to enumerate.
    pub distance: Option<usize>,
}

/// Maps one binary word to GF(4); the word must have even parity on every
/// stride group.
pub fn contract_word(word: &BitVec) -> Result<F4Codeword> {
    let n = word.len();
    if !n.is_multiple_of(3) {
        return Err(Error::NotStrideGroups);
    }
    let third = n / 3;
    let symbols = (0..third)
        .map(|i| {
            let p = [word.get(i), word.get(i + third), word.get(i + 2 * third)];
            F4::from_projection(p).ok_or_else(|| Error::BadProjection {
                group: i,
                pattern: p.iter().map(|b| if *b { '1' } else { '0' }).collect(),
            })
        })
        .collect::<Result<Vec<F4>>>()?;
    Ok(F4Codeword { symbols })
}

fn check_stride_groups(n: usize, groups: &[RepairGroup]) -> Result<()> {
    if !n.is_multiple_of(3) || groups.len() != n / 3 {
        return Err(Error::NotStrideGroups);
    }
    let third = n / 3;
    let mut seen = vec![false; third];
    for g in groups {
        let mut c = g.coordinates.clone();
        c.sort_unstable();
        let ok = c.len() == 3 && c[0] < third && c[1] == c[0] + third && c[2] == c[0] + 2 * third;
        if !ok || seen[c[0]] {
            return Err(Error::NotStrideGroups);
        }
        seen[c[0]] = true;
    }
    Ok(())
}

/// Contracts `code` over its stride repair groups.
///
/// Generator rows are checked group by group (the allowed projections form
/// a subspace, so this covers every codeword). The image distance is found
/// by enumerating all `2^k` codewords when that is within `budget`.
pub fn contract_to_f4(code: &CyclicCode, groups: &[RepairGroup], budget: u64) -> Result<F4Image> {
    let n = code.n();
    check_stride_groups(n, groups)?;
    let g = code.generator_matrix();
    let images: Vec<F4Codeword> = g.rows().iter().map(contract_word).collect::<Result<_>>()?;
    let k = code.k();
    let distance = (k < 64 && (1u64 << k) <= budget).then(|| {
        let len = n / 3;
        let mut cur = F4Codeword {
            symbols: vec![F4::Zero; len],
        };
        let mut best = usize::MAX;
        for i in 1u64..(1u64 << k) {
            cur = cur.add(&images[i.trailing_zeros() as usize]);
            best = best.min(cur.weight());
        }
        best
    });
    Ok(F4Image {
        length: n / 3,
        log2_size: k,
        distance,
    })
}

/// All `2^k` image codewords, in Gray-code order starting from zero.
pub fn image_codewords(code: &CyclicCode) -> Result<Vec<F4Codeword>> {
    let images: Vec<F4Codeword> = code
        .generator_matrix()
        .rows()
        .iter()
        .map(contract_word)
        .collect::<Result<_>>()?;
    let k = code.k();
    assert!(k < 32, "image too large to materialize");
    let mut cur = F4Codeword {
        symbols: vec![F4::Zero; code.n() / 3],
    };
    let mut out = vec![cur.clone()];
    for i in 1u64..(1u64 << k) {
        cur = cur.add(&images[i.trailing_zeros() as usize]);
        out.push(cur.clone());
    }
    Ok(out)
}
