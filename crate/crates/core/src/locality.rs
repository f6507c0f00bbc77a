//! Locality and availability certification.
//!
//! Everything here works from the complete list of low-weight dual
//! codewords, so a negative answer is a proof rather than a missed sample.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bits::BitVec;
use crate::code::CyclicCode;
use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;

/// A dual codeword, viewed as a repair equation over its support.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParityCheck {
    support: Vec<usize>,
    vector: BitVec,
}

impl ParityCheck {
    pub fn new(n: usize, mut support: Vec<usize>) -> Self {
        support.sort_unstable();
        support.dedup();
        let vector = BitVec::from_positions(n, support.iter().copied());
        Self { support, vector }
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn as_vector(&self) -> &BitVec {
        &self.vector
    }

    pub fn weight(&self) -> usize {
        self.support.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.support.binary_search(&i).is_ok()
    }

    /// True when every codeword has even parity on the support.
    pub fn is_dual_of(&self, code: &CyclicCode) -> bool {
        is_dual_word(&code.generator_matrix(), &self.vector)
    }
}

impl Serialize for ParityCheck {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.support.serialize(s)
    }
}

pub(crate) fn is_dual_word(generator: &BinaryMatrix, v: &BitVec) -> bool {
    generator.rows().iter().all(|row| !row.dot(v))
}

/// A set of coordinates that repair each other through one check.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RepairGroup {
    pub coordinates: Vec<usize>,
}

/// Column syndromes of `G`: column `j` as a `k`-bit key.
fn column_keys(code: &CyclicCode) -> Vec<Vec<u64>> {
    let gt = code.generator_matrix().transpose();
    gt.rows().iter().map(|r| r.words().to_vec()).collect()
}

fn xor_into(acc: &mut [u64], other: &[u64]) {
    for (a, b) in acc.iter_mut().zip(other) {
        *a ^= b;
    }
}

/// Calls `f(subset, syndrome)` for every `size`-subset of `lo..n` in
/// lexicographic order.
fn for_each_subset<F: FnMut(&[usize], &[u64])>(
    keys: &[Vec<u64>],
    lo: usize,
    size: usize,
    width: usize,
    f: &mut F,
) {
    fn go<F: FnMut(&[usize], &[u64])>(
        keys: &[Vec<u64>],
        start: usize,
        left: usize,
        chosen: &mut Vec<usize>,
        acc: &mut Vec<u64>,
        f: &mut F,
    ) {
        if left == 0 {
            f(chosen, acc);
            return;
        }
        let n = keys.len();
        for j in start..=n.saturating_sub(left) {
            chosen.push(j);
            xor_into(acc, &keys[j]);
            go(keys, j + 1, left - 1, chosen, acc, f);
            xor_into(acc, &keys[j]);
            chosen.pop();
        }
    }
    let mut chosen = Vec::with_capacity(size);
    let mut acc = vec![0u64; width];
    go(keys, lo, size, &mut chosen, &mut acc, f);
}

/// Every dual codeword of weight exactly `w`, sorted by support.
///
/// Supports are split as a sorted prefix of `⌊w/2⌋` coordinates and a
/// suffix of the rest; prefixes are hashed by syndrome and each suffix is
/// matched against prefixes ending before it, so every support is found
/// exactly once. For `w > 5` with a dual of dimension at most 28 the dual
/// is enumerated directly instead.
pub fn find_low_weight_duals(code: &CyclicCode, w: usize) -> Vec<ParityCheck> {
    let n = code.n();
    if w == 0 || w > n {
        return Vec::new();
    }
    let mut found = if w > 5 && n - code.k() <= 28 {
        duals_by_enumeration(code, w)
    } else {
        duals_meet_in_middle(code, w)
    };
    found.sort();
    found
}

fn duals_meet_in_middle(code: &CyclicCode, w: usize) -> Vec<ParityCheck> {
    let n = code.n();
    let keys = column_keys(code);
    let width = keys.first().map_or(0, Vec::len);
    let a = w / 2;
    let b = w - a;

    // syndrome -> prefixes (stored flat, `a` entries each)
    let mut table: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
    for_each_subset(&keys, 0, a, width, &mut |s, syn| {
        table.entry(syn.to_vec()).or_default().extend_from_slice(s);
    });

    let mut out = Vec::new();
    for_each_subset(&keys, 0, b, width, &mut |s, syn| {
        let Some(prefixes) = table.get(syn) else {
            return;
        };
        if a == 0 {
            out.push(ParityCheck::new(n, s.to_vec()));
            return;
        }
        for p in prefixes.chunks_exact(a) {
            if p[a - 1] < s[0] {
                let mut support = p.to_vec();
                support.extend_from_slice(s);
                out.push(ParityCheck::new(n, support));
            }
        }
    });
    out
}

fn duals_by_enumeration(code: &CyclicCode, w: usize) -> Vec<ParityCheck> {
    let n = code.n();
    let h = code.parity_check_matrix();
    let rows: Vec<&BitVec> = h.rows().iter().collect();
    let mut cur = BitVec::zeros(n);
    let mut out = Vec::new();
    for i in 1u64..(1u64 << rows.len()) {
        cur.xor_assign(rows[i.trailing_zeros() as usize]);
        if cur.weight() == w {
            out.push(ParityCheck::new(n, cur.support()));
        }
    }
    out
}

/// Outcome of a locality check: a covering witness per coordinate.
#[derive(Clone, Debug, Serialize)]
pub struct LocalityCertificate {
    pub r: usize,
    pub certified: bool,
    /// For each coordinate, the first check (in support order) containing it.
    pub witness: Vec<Option<ParityCheck>>,
    pub uncovered: Vec<usize>,
    /// All dual codewords of weight `r + 1`.
    #[serde(skip)]
    pub checks: Vec<ParityCheck>,
}

/// Every coordinate lies in the support of some weight-`(r+1)` dual word.
pub fn verify_locality(code: &CyclicCode, r: usize) -> LocalityCertificate {
    let n = code.n();
    let checks = find_low_weight_duals(code, r + 1);
    let mut witness: Vec<Option<ParityCheck>> = vec![None; n];
    for c in &checks {
        for &i in c.support() {
            if witness[i].is_none() {
                witness[i] = Some(c.clone());
            }
        }
    }
    let uncovered: Vec<usize> = (0..n).filter(|&i| witness[i].is_none()).collect();
    LocalityCertificate {
        r,
        certified: uncovered.is_empty(),
        witness,
        uncovered,
        checks,
    }
}

/// A linearly independent subset of `checks` whose supports still cover
/// `0..n`.
///
/// Checks are scanned in support order and kept when they raise the rank or
/// reach a new coordinate; the kept list is then pruned from the back while
/// coverage survives. The result is minimal under removal, not necessarily
/// minimum.
pub fn extract_independent_cover(checks: &[ParityCheck], n: usize) -> Result<Vec<ParityCheck>> {
    let mut sorted: Vec<ParityCheck> = checks.to_vec();
    sorted.sort();
    sorted.dedup();

    let mut cover = vec![0usize; n];
    for c in &sorted {
        for &i in c.support() {
            cover[i] += 1;
        }
    }
    if let Some(i) = cover.iter().position(|&c| c == 0) {
        return Err(Error::NotCovering(i));
    }

    let mut basis: Vec<(usize, BitVec)> = Vec::new();
    let mut covered = vec![false; n];
    let mut kept = Vec::new();
    for c in sorted {
        let new_coord = c.support().iter().any(|&i| !covered[i]);
        let raises_rank = reduce(&basis, c.as_vector()).is_some_and(|r| {
            let p = r.first_one().unwrap();
            basis.push((p, r));
            true
        });
        if raises_rank || new_coord {
            for &i in c.support() {
                covered[i] = true;
            }
            kept.push(c);
        }
    }

    let mut counts = vec![0usize; n];
    for c in &kept {
        for &i in c.support() {
            counts[i] += 1;
        }
    }
    let mut idx = kept.len();
    while idx > 0 {
        idx -= 1;
        if kept[idx].support().iter().all(|&i| counts[i] > 1) {
            for &i in kept[idx].support() {
                counts[i] -= 1;
            }
            kept.remove(idx);
        }
    }
    Ok(kept)
}

/// Reduces `v` against a pivot basis; `None` when `v` is in the span.
fn reduce(basis: &[(usize, BitVec)], v: &BitVec) -> Option<BitVec> {
    let mut v = v.clone();
    for (p, b) in basis {
        if v.get(*p) {
            v.xor_assign(b);
        }
    }
    (!v.is_zero()).then_some(v)
}

/// GF(2) rank of a list of checks.
pub fn check_rank(checks: &[ParityCheck]) -> usize {
    let Some(first) = checks.first() else {
        return 0;
    };
    BinaryMatrix::new(
        first.as_vector().len(),
        checks.iter().map(|c| c.as_vector().clone()).collect(),
    )
    .rank()
}

/// Partition of the coordinates into `n/(r+1)` repair groups, each the
/// support of a dual word of weight `r + 1`.
///
/// The stride pattern `{i, i + n/(r+1), …}` is tried first; otherwise an
/// exact-cover search over all weight-`(r+1)` dual words runs. Returns
/// `None` when `r + 1` does not divide `n` or no partition exists.
pub fn find_disjoint_groups(code: &CyclicCode, r: usize) -> Option<Vec<RepairGroup>> {
    let n = code.n();
    if r == 0 || !n.is_multiple_of(r + 1) {
        return None;
    }
    let stride = n / (r + 1);
    let g = code.generator_matrix();
    let stride_groups: Vec<Vec<usize>> = (0..stride)
        .map(|i| (0..=r).map(|j| i + j * stride).collect())
        .collect();
    if stride_groups
        .iter()
        .all(|s| is_dual_word(&g, &BitVec::from_positions(n, s.iter().copied())))
    {
        return Some(
            stride_groups
                .into_iter()
                .map(|coordinates| RepairGroup { coordinates })
                .collect(),
        );
    }

    let checks = find_low_weight_duals(code, r + 1);
    let mut by_coord: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (ci, c) in checks.iter().enumerate() {
        for &i in c.support() {
            by_coord[i].push(ci);
        }
    }
    let mut used = vec![false; n];
    let mut chosen = Vec::new();
    if exact_cover(&checks, &by_coord, &mut used, &mut chosen) {
        let mut groups: Vec<RepairGroup> = chosen
            .into_iter()
            .map(|ci| RepairGroup {
                coordinates: checks[ci].support().to_vec(),
            })
            .collect();
        groups.sort_by(|a, b| a.coordinates.cmp(&b.coordinates));
        Some(groups)
    } else {
        None
    }
}

fn exact_cover(
    checks: &[ParityCheck],
    by_coord: &[Vec<usize>],
    used: &mut [bool],
    chosen: &mut Vec<usize>,
) -> bool {
    let Some(i) = used.iter().position(|u| !u) else {
        return true;
    };
    for &ci in &by_coord[i] {
        let s = checks[ci].support();
        if s.iter().any(|&j| used[j]) {
            continue;
        }
        for &j in s {
            used[j] = true;
        }
        chosen.push(ci);
        if exact_cover(checks, by_coord, used, chosen) {
            return true;
        }
        chosen.pop();
        for &j in s {
            used[j] = false;
        }
    }
    false
}

/// Per-coordinate repair sets meeting pairwise only in the coordinate.
#[derive(Clone, Debug, Serialize)]
pub struct AvailabilityCertificate {
    pub r: usize,
    pub t: usize,
    /// False when the greedy search (used for `t > 3`) produced the sets.
    pub exhaustive: bool,
    pub per_coordinate: Vec<Vec<ParityCheck>>,
}

impl AvailabilityCertificate {
    pub fn checks_for(&self, i: usize) -> &[ParityCheck] {
        &self.per_coordinate[i]
    }

    /// Independent re-check of every listed set: membership in the dual,
    /// weight, containment of the coordinate and pairwise intersections.
    pub fn validate(&self, code: &CyclicCode) -> bool {
        let g = code.generator_matrix();
        self.per_coordinate.len() == code.n()
            && self.per_coordinate.iter().enumerate().all(|(i, sets)| {
                sets.len() >= self.t
                    && sets.iter().all(|c| {
                        c.weight() == self.r + 1 && c.contains(i) && is_dual_word(&g, c.as_vector())
                    })
                    && sets.iter().enumerate().all(|(a, ca)| {
                        sets[a + 1..].iter().all(|cb| {
                            let common: Vec<usize> = ca
                                .support()
                                .iter()
                                .copied()
                                .filter(|x| cb.contains(*x))
                                .collect();
                            common == [i]
                        })
                    })
            })
    }
}

fn meets_only_at(a: &ParityCheck, b: &ParityCheck, i: usize) -> bool {
    a.support().iter().all(|x| *x == i || !b.contains(*x))
}

/// Finds, for each coordinate, `t` weight-`(r+1)` dual words through it that
/// pairwise share only that coordinate.
pub fn verify_availability(
    code: &CyclicCode,
    r: usize,
    t: usize,
) -> Result<AvailabilityCertificate> {
    let checks = find_low_weight_duals(code, r + 1);
    availability_from_checks(code.n(), &checks, r, t)
}

pub(crate) fn availability_from_checks(
    n: usize,
    checks: &[ParityCheck],
    r: usize,
    t: usize,
) -> Result<AvailabilityCertificate> {
    let exhaustive = t <= 3;
    let mut per_coordinate = Vec::with_capacity(n);
    for i in 0..n {
        let through: Vec<&ParityCheck> = checks.iter().filter(|c| c.contains(i)).collect();
        let picked = if exhaustive {
            let mut chosen = Vec::new();
            pick_exhaustive(&through, i, t, 0, &mut chosen).then_some(chosen)
        } else {
            let mut chosen: Vec<&ParityCheck> = Vec::new();
            for c in &through {
                if chosen.iter().all(|p| meets_only_at(p, c, i)) {
                    chosen.push(c);
                }
            }
            (chosen.len() >= t).then_some(chosen)
        };
        match picked {
            Some(sets) => per_coordinate.push(sets.into_iter().cloned().collect()),
            None => return Err(Error::AvailabilityFailed(i, t)),
        }
    }
    Ok(AvailabilityCertificate {
        r,
        t,
        exhaustive,
        per_coordinate,
    })
}

fn pick_exhaustive<'a>(
    through: &[&'a ParityCheck],
    i: usize,
    t: usize,
    start: usize,
    chosen: &mut Vec<&'a ParityCheck>,
) -> bool {
    if chosen.len() == t {
        return true;
    }
    for idx in start..through.len() {
        let c = through[idx];
        if chosen.iter().all(|p| meets_only_at(p, c, i)) {
            chosen.push(c);
            if pick_exhaustive(through, i, t, idx + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Largest `t` certified by [`verify_availability`], scanning upward from 1.
pub fn max_availability(code: &CyclicCode, r: usize) -> (usize, Option<AvailabilityCertificate>) {
    let checks = find_low_weight_duals(code, r + 1);
    let mut best = (0, None);
    for t in 1.. {
        match availability_from_checks(code.n(), &checks, r, t) {
            Ok(cert) => best = (t, Some(cert)),
            Err(_) => break,
        }
    }
    best
}
