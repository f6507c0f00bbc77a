//! Binary cyclic codes of length `n = 2^m - 1` given by their zeros.
//!
//! Coordinates are 0-indexed `0..n`; codeword bit `i` is the coefficient of
//! `x^i`, so a cyclic shift is multiplication by `x` modulo `x^n - 1`.

use serde::{Deserialize, Serialize};

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::gf::{cyclotomic_cosets, CyclotomicCoset, GaloisField};
use crate::matrix::BinaryMatrix;
use crate::poly::BinaryPolynomial;

/// Exponents `j` with `g(α^j) = 0`; always a union of cyclotomic cosets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DefiningSet {
    n: usize,
    zeros: Vec<usize>,
}

impl DefiningSet {
    /// Validates range and closure under `j -> 2j mod n`. Duplicates are
    /// dropped and the result is stored sorted.
    pub fn new<I: IntoIterator<Item = usize>>(n: usize, zeros: I) -> Result<Self> {
        let mut present = vec![false; n];
        for j in zeros {
            if j >= n {
                return Err(Error::ZeroOutOfRange(j, n));
            }
            present[j] = true;
        }
        for j in 0..n {
            if present[j] && !present[(2 * j) % n] {
                return Err(Error::NotTwoClosed(j, (2 * j) % n));
            }
        }
        Ok(Self {
            n,
            zeros: (0..n).filter(|&j| present[j]).collect(),
        })
    }

    /// Union of the cosets containing each listed exponent.
    pub fn from_cosets<I: IntoIterator<Item = usize>>(n: usize, reps: I) -> Self {
        let mut zeros: Vec<usize> = reps
            .into_iter()
            .flat_map(|r| CyclotomicCoset::containing(n, r).members().to_vec())
            .collect();
        zeros.sort_unstable();
        zeros.dedup();
        Self { n, zeros }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn zeros(&self) -> &[usize] {
        &self.zeros
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.zeros.binary_search(&(j % self.n)).is_ok()
    }

    pub fn union(&self, other: &DefiningSet) -> DefiningSet {
        assert_eq!(self.n, other.n);
        let mut zeros = self.zeros.clone();
        zeros.extend_from_slice(&other.zeros);
        zeros.sort_unstable();
        zeros.dedup();
        DefiningSet { n: self.n, zeros }
    }

    /// Representatives (smallest members) of the cosets making up the set.
    pub fn coset_representatives(&self) -> Vec<usize> {
        let mut reps: Vec<usize> = self
            .zeros
            .iter()
            .map(|&j| CyclotomicCoset::containing(self.n, j).representative())
            .collect();
        reps.dedup();
        reps.sort_unstable();
        reps.dedup();
        reps
    }

    /// Zeros of the dual code: `{-j mod n : j not a zero}`.
    pub fn dual(&self) -> DefiningSet {
        let n = self.n;
        let mut zeros: Vec<usize> = (0..n)
            .filter(|j| !self.contains(*j))
            .map(|j| (n - j) % n)
            .collect();
        zeros.sort_unstable();
        DefiningSet { n, zeros }
    }

    /// Length of the longest run of cyclically consecutive exponents.
    pub fn longest_run(&self) -> usize {
        let n = self.n;
        if self.zeros.len() == n {
            return n;
        }
        let Some(start) = (0..n).find(|j| !self.contains(*j)) else {
            return n;
        };
        let (mut best, mut cur) = (0, 0);
        for step in 1..=n {
            if self.contains((start + step) % n) {
                cur += 1;
                best = best.max(cur);
            } else {
                cur = 0;
            }
        }
        best
    }
}

#[derive(Clone, Debug)]
pub struct CyclicCode {
    field: GaloisField,
    zeros: DefiningSet,
    g: BinaryPolynomial,
    h: BinaryPolynomial,
}

impl CyclicCode {
    /// Builds the code whose generator polynomial vanishes exactly on
    /// `α^j` for `j` in the defining set.
    pub fn new(field: GaloisField, zeros: DefiningSet) -> Result<Self> {
        let n = field.order();
        if zeros.n() != n {
            return Err(Error::ZeroOutOfRange(zeros.n(), n));
        }
        if zeros.is_empty() || zeros.len() >= n {
            return Err(Error::TrivialDefiningSet {
                size: zeros.len(),
                n,
            });
        }
        let g = zeros
            .coset_representatives()
            .into_iter()
            .fold(BinaryPolynomial::one(), |acc, rep| {
                acc.poly_mul(&field.minimal_polynomial(rep))
            });
        let (h, rem) = BinaryPolynomial::x_n_minus_one(n).poly_divrem(&g)?;
        debug_assert!(rem.is_zero());
        Ok(Self { field, zeros, g, h })
    }

    /// Convenience: default field for `m`, zeros given as raw exponents.
    pub fn from_zeros<I: IntoIterator<Item = usize>>(m: u32, zeros: I) -> Result<Self> {
        let field = GaloisField::new(m)?;
        let set = DefiningSet::new(field.order(), zeros)?;
        Self::new(field, set)
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn defining_set(&self) -> &DefiningSet {
        &self.zeros
    }

    pub fn n(&self) -> usize {
        self.field.order()
    }

    pub fn k(&self) -> usize {
        self.n() - self.zeros.len()
    }

    /// Generator polynomial.
    pub fn g(&self) -> &BinaryPolynomial {
        &self.g
    }

    /// Check polynomial, `(x^n - 1) / g`.
    pub fn h(&self) -> &BinaryPolynomial {
        &self.h
    }

    /// Rows are the shifts `x^i g(x)` for `i < k`.
    pub fn generator_matrix(&self) -> BinaryMatrix {
        let n = self.n();
        let base = self.poly_to_word(&self.g);
        BinaryMatrix::new(n, (0..self.k()).map(|i| base.rotate(i)).collect())
    }

    /// Rows are the shifts of the reversal of `h`, `n - k` of them.
    pub fn parity_check_matrix(&self) -> BinaryMatrix {
        let n = self.n();
        let k = self.k();
        let rev = BitVec::from_positions(n, self.h.exponents().into_iter().map(|e| k - e));
        BinaryMatrix::new(n, (0..n - k).map(|i| rev.rotate(i)).collect())
    }

    /// Non-systematic encoding `u(x) g(x)`.
    pub fn encode(&self, message: &BitVec) -> BitVec {
        assert_eq!(message.len(), self.k());
        let u = BinaryPolynomial::from_exponents(message.iter_ones());
        self.poly_to_word(&u.poly_mul(&self.g))
    }

    pub fn contains(&self, word: &BitVec) -> bool {
        if word.len() != self.n() {
            return false;
        }
        let w = BinaryPolynomial::from_exponents(word.iter_ones());
        w.poly_divrem(&self.g)
            .map(|(_, r)| r.is_zero())
            .unwrap_or(false)
    }

    pub fn poly_to_word(&self, p: &BinaryPolynomial) -> BitVec {
        let n = self.n();
        let mut v = BitVec::zeros(n);
        for e in p.exponents() {
            v.flip(e % n);
        }
        v
    }

    /// `1 +` longest run of consecutive zeros.
    pub fn bch_bound(&self) -> usize {
        self.zeros.longest_run() + 1
    }

    /// The dual code, generated by the reciprocal of `h`.
    pub fn dual_code(&self) -> CyclicCode {
        CyclicCode::new(self.field.clone(), self.zeros.dual())
            .expect("dual of a proper defining set is proper")
    }

    pub fn to_file(&self) -> CodeFile {
        CodeFile {
            m: self.field.m(),
            n: self.n(),
            primitive_poly_hex: self.field.primitive_poly().to_hex(),
            zeros: self.zeros.zeros().to_vec(),
            g_hex: self.g.to_hex(),
            h_hex: self.h.to_hex(),
            k: self.k(),
        }
    }

    /// Rebuilds from `zeros` and checks every stored derived field.
    pub fn from_file(file: &CodeFile) -> Result<Self> {
        let poly = BinaryPolynomial::from_hex(&file.primitive_poly_hex)?;
        let field = GaloisField::with_polynomial(file.m, poly)?;
        if file.n != field.order() {
            return Err(Error::CodeFile(format!(
                "n = {} but 2^m - 1 = {}",
                file.n,
                field.order()
            )));
        }
        let set = DefiningSet::new(file.n, file.zeros.iter().copied())?;
        let code = CyclicCode::new(field, set)?;
        let check = |field: &'static str, stored: &str, computed: String| -> Result<()> {
            let stored_poly = BinaryPolynomial::from_hex(stored)?;
            if stored_poly.to_hex() != computed {
                return Err(Error::HexMismatch {
                    field,
                    stored: stored.to_string(),
                    computed,
                });
            }
            Ok(())
        };
        check("g_hex", &file.g_hex, code.g.to_hex())?;
        check("h_hex", &file.h_hex, code.h.to_hex())?;
        if file.k != code.k() {
            return Err(Error::CodeFile(format!(
                "stored k = {} but recomputed k = {}",
                file.k,
                code.k()
            )));
        }
        Ok(code)
    }
}

/// On-disk JSON form of a cyclic code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub m: u32,
    pub n: usize,
    pub primitive_poly_hex: String,
    pub zeros: Vec<usize>,
    pub g_hex: String,
    pub h_hex: String,
    pub k: usize,
}

impl CodeFile {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("code file serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

/// Every 2-closed defining set for length `2^m - 1` other than the empty and
/// full sets, in order of the coset-subset bitmask.
pub fn defining_sets(m: u32) -> Result<impl Iterator<Item = DefiningSet>> {
    let n = (1usize << m) - 1;
    let cosets = cyclotomic_cosets(n)?;
    if cosets.len() >= 64 {
        return Err(Error::SearchSpaceTooLarge(m));
    }
    let total = 1u64 << cosets.len();
    let reps: Vec<usize> = cosets.iter().map(|c| c.representative()).collect();
    Ok((1..total - 1).map(move |mask| {
        DefiningSet::from_cosets(
            n,
            reps.iter()
                .enumerate()
                .filter(|(i, _)| (mask >> i) & 1 == 1)
                .map(|(_, &r)| r),
        )
    }))
}

/// Number of sets yielded by [`defining_sets`].
pub fn defining_set_count(m: u32) -> Result<u64> {
    let n = (1usize << m) - 1;
    let c = cyclotomic_cosets(n)?.len();
    if c >= 64 {
        return Err(Error::SearchSpaceTooLarge(m));
    }
    Ok((1u64 << c) - 2)
}

pub fn all_defining_sets(m: u32) -> Result<Vec<DefiningSet>> {
    Ok(defining_sets(m)?.collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c1_15() -> CyclicCode {
        CyclicCode::from_zeros(4, [0, 3, 6, 9, 12]).unwrap()
    }

    #[test]
    fn c1_length_15_polynomials() {
        let c = c1_15();
        assert_eq!(c.g(), &BinaryPolynomial::from_exponents([0, 5]));
        assert_eq!(c.h(), &BinaryPolynomial::from_exponents([0, 5, 10]));
        assert_eq!(c.k(), 10);
    }

    #[test]
    fn c2_length_15_dimension() {
        let c = CyclicCode::from_zeros(4, [0, 3, 6, 9, 12, 1, 2, 4, 8]).unwrap();
        assert_eq!(c.k(), 6);
        assert_eq!(c.bch_bound(), 6);
    }

    #[test]
    fn rejects_non_closed_and_trivial_sets() {
        assert!(matches!(
            CyclicCode::from_zeros(4, [1, 3]),
            Err(Error::NotTwoClosed(1, 2))
        ));
        assert!(matches!(
            CyclicCode::from_zeros(4, []),
            Err(Error::TrivialDefiningSet { .. })
        ));
        assert!(matches!(
            CyclicCode::from_zeros(4, 0..15),
            Err(Error::TrivialDefiningSet { .. })
        ));
        assert!(matches!(
            CyclicCode::from_zeros(4, [15]),
            Err(Error::ZeroOutOfRange(15, 15))
        ));
    }

    #[test]
    fn g_vanishes_exactly_on_zeros() {
        let c = CyclicCode::from_zeros(6, DefiningSet::from_cosets(63, [0, 1, 5]).zeros().to_vec())
            .unwrap();
        let f = c.field();
        for j in 0..63 {
            assert_eq!(
                c.g().poly_eval(f, f.alpha_pow(j)).is_zero(),
                c.defining_set().contains(j)
            );
        }
    }

    #[test]
    fn bch_runs() {
        assert_eq!(c1_15().bch_bound(), 2);
        let d10 = CyclicCode::from_zeros(
            4,
            DefiningSet::from_cosets(15, [0, 3, 1, 14]).zeros().to_vec(),
        )
        .unwrap();
        assert_eq!(d10.k(), 2);
        assert_eq!(d10.bch_bound(), 10);
    }

    #[test]
    fn generator_and_parity_check_are_orthogonal() {
        let c = c1_15();
        let g = c.generator_matrix();
        let h = c.parity_check_matrix();
        assert_eq!(g.rank(), 10);
        assert_eq!(h.rank(), 5);
        assert!(g.mul_transpose(&h).is_zero());
    }

    #[test]
    fn dual_is_generated_by_reciprocal_of_h() {
        let c = c1_15();
        let d = c.dual_code();
        assert_eq!(d.k(), 5);
        assert_eq!(d.g(), &c.h().reciprocal());
        for i in 0..5 {
            assert!(d.contains(&BitVec::from_positions(15, [i, i + 5, i + 10])));
        }
        assert!(d
            .generator_matrix()
            .same_row_space(&c.parity_check_matrix()));
    }

    #[test]
    fn code_file_round_trip_and_tamper_detection() {
        let c = c1_15();
        let file = c.to_file();
        assert_eq!(file.g_hex, "21");
        assert_eq!(file.h_hex, "421");
        assert_eq!(file.primitive_poly_hex, "13");
        let back = CyclicCode::from_file(&CodeFile::from_json(&file.to_json()).unwrap()).unwrap();
        assert_eq!(back.g(), c.g());
        let mut bad = file.clone();
        bad.g_hex = "23".into();
        assert!(matches!(
            CyclicCode::from_file(&bad),
            Err(Error::HexMismatch { field: "g_hex", .. })
        ));
        let mut bad_k = file;
        bad_k.k = 9;
        assert!(matches!(
            CyclicCode::from_file(&bad_k),
            Err(Error::CodeFile(_))
        ));
    }

    #[test]
    fn defining_set_enumeration_mod_15() {
        let sets = all_defining_sets(4).unwrap();
        assert_eq!(sets.len(), 30);
        assert!(sets.iter().all(|s| !s.is_empty() && s.len() < 15));
    }
}
