//! Erasure repair: single-coordinate local repair through one check, global
//! decoding by GF(2) elimination, and repair-set selection under contention.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::bits::BitVec;
use crate::code::CyclicCode;
use crate::error::{Error, Result};
use crate::locality::{AvailabilityCertificate, ParityCheck};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ErasurePattern {
    erased: BTreeSet<usize>,
}

impl ErasurePattern {
    pub fn new<I: IntoIterator<Item = usize>>(n: usize, erased: I) -> Result<Self> {
        let erased: BTreeSet<usize> = erased.into_iter().collect();
        if let Some(&bad) = erased.iter().find(|&&i| i >= n) {
            return Err(Error::CoordinateOutOfRange(bad, n));
        }
        Ok(Self { erased })
    }

    pub fn contains(&self, i: usize) -> bool {
        self.erased.contains(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.erased.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.erased.len()
    }

    pub fn is_empty(&self) -> bool {
        self.erased.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RepairMethod {
    Local,
    Global,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepairTrace {
    pub coordinate: usize,
    pub reads: Vec<usize>,
    pub value: bool,
    pub method: RepairMethod,
}

/// Recovers coordinate `i` as the XOR of the other bits on `check`'s support.
/// Bits of `word` at erased positions are ignored.
pub fn local_repair(
    word: &BitVec,
    erased: &ErasurePattern,
    i: usize,
    check: &ParityCheck,
) -> Result<RepairTrace> {
    if !check.contains(i) {
        return Err(Error::CheckMissesCoordinate(i));
    }
    let reads: Vec<usize> = check
        .support()
        .iter()
        .copied()
        .filter(|&j| j != i)
        .collect();
    if let Some(&j) = reads.iter().find(|&&j| erased.contains(j)) {
        return Err(Error::RepairSetErased(j));
    }
    let value = reads.iter().fold(false, |acc, &j| acc ^ word.get(j));
    Ok(RepairTrace {
        coordinate: i,
        reads,
        value,
        method: RepairMethod::Local,
    })
}

/// Fills in every erased position by solving `H_E x_E = H_S y_S`.
///
/// Fails with a codeword supported inside the erasures when the erased
/// columns of `H` are dependent, which cannot happen for fewer than `d`
/// erasures.
pub fn erasure_decode(code: &CyclicCode, word: &BitVec, erased: &ErasurePattern) -> Result<BitVec> {
    let n = code.n();
    assert_eq!(word.len(), n);
    if erased.is_empty() {
        return Ok(word.clone());
    }
    let h = code.parity_check_matrix();
    let columns = h.transpose();
    let positions: Vec<usize> = erased.iter().collect();

    let mut surviving = word.clone();
    for &e in &positions {
        surviving.set(e, false);
    }
    let syndrome = h.mul_vec(&surviving);

    // Column basis in pivot form, each with the erased columns it combines.
    let mut basis: Vec<(usize, BitVec, BitVec)> = Vec::new();
    for (idx, &e) in positions.iter().enumerate() {
        let mut v = columns.row(e).clone();
        let mut combo = BitVec::from_positions(positions.len(), [idx]);
        for (p, b, c) in &basis {
            if v.get(*p) {
                v.xor_assign(b);
                combo.xor_assign(c);
            }
        }
        match v.first_one() {
            Some(p) => basis.push((p, v, combo)),
            None => {
                return Err(Error::AmbiguousErasures {
                    witness: combo.iter_ones().map(|i| positions[i]).collect(),
                })
            }
        }
    }

    let mut residual = syndrome;
    let mut solution = BitVec::zeros(positions.len());
    for (p, b, c) in &basis {
        if residual.get(*p) {
            residual.xor_assign(b);
            solution.xor_assign(c);
        }
    }
    if !residual.is_zero() {
        return Err(Error::InconsistentWord);
    }
    let mut out = surviving;
    for i in solution.iter_ones() {
        out.set(positions[i], true);
    }
    Ok(out)
}

/// First certified repair set for `i` that reads nothing in `busy`.
pub fn choose_repair_set<'a>(
    cert: &'a AvailabilityCertificate,
    i: usize,
    busy: &BTreeSet<usize>,
) -> Option<&'a ParityCheck> {
    cert.checks_for(i)
        .iter()
        .find(|c| c.support().iter().all(|&j| j == i || !busy.contains(&j)))
}

/// Repairs every erased coordinate, locally when some check in `checks`
/// avoids the other erasures and globally otherwise.
pub fn repair_all(
    code: &CyclicCode,
    word: &BitVec,
    erased: &ErasurePattern,
    checks: &[ParityCheck],
) -> Result<(BitVec, Vec<RepairTrace>)> {
    let mut out = word.clone();
    let mut traces = Vec::new();
    let mut pending = Vec::new();
    for i in erased.iter() {
        let local = checks
            .iter()
            .filter(|c| c.contains(i))
            .find_map(|c| local_repair(word, erased, i, c).ok());
        match local {
            Some(t) => {
                out.set(i, t.value);
                traces.push(t);
            }
            None => pending.push(i),
        }
    }
    if !pending.is_empty() {
        let decoded = erasure_decode(code, word, erased)?;
        let reads: Vec<usize> = (0..code.n()).filter(|j| !erased.contains(*j)).collect();
        for i in pending {
            out.set(i, decoded.get(i));
            traces.push(RepairTrace {
                coordinate: i,
                reads: reads.clone(),
                value: decoded.get(i),
                method: RepairMethod::Global,
            });
        }
        traces.sort_by_key(|t| t.coordinate);
    }
    Ok((out, traces))
}
