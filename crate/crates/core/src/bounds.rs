//! Closed-form distance and dimension bounds for binary LRCs, all in exact
//! integer arithmetic.

use serde::Serialize;

use crate::distance::DistanceEstimate;
use crate::error::{Error, Result};

/// Singleton-type bound for locality `r`: `d ≤ n - k - ⌈k/r⌉ + 2`.
pub fn lrc_singleton_bound(n: usize, k: usize, r: usize) -> i64 {
    assert!(r >= 1 && k >= 1 && k <= n);
    n as i64 - k as i64 - k.div_ceil(r) as i64 + 2
}

fn check_even_m(m: u32) -> Result<usize> {
    if !m.is_multiple_of(2) || m <= 2 || m > 62 {
        return Err(Error::RequiresEvenM);
    }
    Ok((1usize << m) - 1)
}

/// Largest dimension of a binary code of length `2^m - 1`, distance 6 and
/// disjoint locality-2 groups: `2(2^m - 1)/3 - m`.
pub fn thm1_dimension_bound(m: u32) -> Result<usize> {
    let n = check_even_m(m)?;
    Ok(2 * n / 3 - m as usize)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KParity {
    Even,
    Any,
}

/// Distance-10 analogue: `2n/3 - 2m` for even `k`, one more otherwise.
pub fn thm2_dimension_bound(m: u32, parity: KParity) -> Result<usize> {
    let n = check_even_m(m)?;
    let even = 2 * n / 3 - 2 * m as usize;
    Ok(match parity {
        KParity::Even => even,
        KParity::Any => even + 1,
    })
}

/// `⌈log2 v⌉` for `v ≥ 1`.
fn ceil_log2(v: u128) -> u32 {
    assert!(v >= 1);
    if v.is_power_of_two() {
        v.trailing_zeros()
    } else {
        128 - v.leading_zeros()
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// `⌊log2(4^{n'} / V)⌋` where `V` is the GF(4) Hamming ball of radius
/// `(d' - 1)/2`. Since `4^{n'}` is a power of two this is
/// `2n' - ⌈log2 V⌉`.
pub fn f4_hamming_size_bound(n_prime: usize, d_prime: usize) -> Result<i64> {
    if d_prime != 3 && d_prime != 5 {
        return Err(Error::UnsupportedDistance(d_prime));
    }
    let radius = (d_prime - 1) / 2;
    let np = n_prime as u128;
    let volume: u128 = (0..=radius as u128)
        .map(|i| binomial(np, i) * 3u128.pow(i as u32))
        .sum();
    Ok(2 * n_prime as i64 - ceil_log2(volume) as i64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    MetWithEquality,
    Slack,
    Violated,
    /// Within the bound, but equality is unconfirmed because the distance
    /// estimate is an interval.
    ConsistentNotConfirmed,
    NotApplicable,
}

impl Verdict {
    pub fn is_violation(self) -> bool {
        self == Verdict::Violated
    }
}

/// What the bounds need to know about an analyzed code.
#[derive(Clone, Debug)]
pub struct BoundInputs<'a> {
    pub m: u32,
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub locality_certified: bool,
    pub disjoint_groups: bool,
    pub distance: &'a DistanceEstimate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub singleton: Verdict,
    pub thm1: Verdict,
    pub thm2: Verdict,
    pub f4_hamming: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub singleton_d_max: Option<i64>,
    pub thm1_k_max: Option<usize>,
    /// Even-`k` form.
    pub thm2_k_max: Option<usize>,
    pub thm2_k_max_any_parity: Option<usize>,
    pub f4_hamming_k_max: Option<i64>,
    /// For even `m > 8` the distance-6 dimension bound holds even without
    /// disjoint repair groups.
    pub thm1_without_disjoint_groups: bool,
    pub verdicts: Verdicts,
}

impl BoundReport {
    pub fn any_violation(&self) -> bool {
        let v = &self.verdicts;
        [v.singleton, v.thm1, v.thm2, v.f4_hamming]
            .iter()
            .any(|x| x.is_violation())
    }
}

fn distance_verdict(bound: i64, d: &DistanceEstimate) -> Verdict {
    if d.lower as i64 > bound {
        Verdict::Violated
    } else if !d.exact {
        Verdict::ConsistentNotConfirmed
    } else if d.lower as i64 == bound {
        Verdict::MetWithEquality
    } else {
        Verdict::Slack
    }
}

fn dimension_verdict(bound: i64, k: usize, exact: bool) -> Verdict {
    let k = k as i64;
    if k > bound {
        Verdict::Violated
    } else if k < bound {
        Verdict::Slack
    } else if exact {
        Verdict::MetWithEquality
    } else {
        Verdict::ConsistentNotConfirmed
    }
}

pub fn evaluate(input: &BoundInputs) -> BoundReport {
    let d = input.distance;
    let local2 = input.r == 2 && input.locality_certified;
    let even_m = input.m.is_multiple_of(2) && input.m > 2;

    let singleton_d_max = (input.locality_certified && input.r >= 1)
        .then(|| lrc_singleton_bound(input.n, input.k, input.r));
    let singleton = singleton_d_max.map_or(Verdict::NotApplicable, |b| distance_verdict(b, d));

    let thm1_without_disjoint_groups = even_m && input.m > 8;
    let thm1_applies =
        local2 && even_m && d.lower >= 6 && (input.disjoint_groups || thm1_without_disjoint_groups);
    let thm1_k_max = thm1_applies.then(|| thm1_dimension_bound(input.m).unwrap());
    let thm1 = thm1_k_max.map_or(Verdict::NotApplicable, |b| {
        dimension_verdict(b as i64, input.k, d.exact)
    });

    let thm2_applies = local2 && even_m && d.lower >= 10 && input.disjoint_groups;
    let thm2_k_max = thm2_applies.then(|| thm2_dimension_bound(input.m, KParity::Even).unwrap());
    let thm2_k_max_any_parity =
        thm2_applies.then(|| thm2_dimension_bound(input.m, KParity::Any).unwrap());
    let thm2 = match (thm2_k_max, thm2_k_max_any_parity) {
        (Some(even), Some(any)) => {
            let b = if input.k.is_multiple_of(2) { even } else { any };
            dimension_verdict(b as i64, input.k, d.exact)
        }
        _ => Verdict::NotApplicable,
    };

    let d_prime = if d.lower >= 10 {
        Some(5)
    } else if d.lower >= 6 {
        Some(3)
    } else {
        None
    };
    let f4_hamming_k_max = d_prime
        .filter(|_| local2 && input.disjoint_groups && input.n.is_multiple_of(3))
        .map(|dp| f4_hamming_size_bound(input.n / 3, dp).unwrap());
    let f4_hamming = f4_hamming_k_max.map_or(Verdict::NotApplicable, |b| {
        dimension_verdict(b, input.k, d.exact)
    });

    BoundReport {
        singleton_d_max,
        thm1_k_max,
        thm2_k_max,
        thm2_k_max_any_parity,
        f4_hamming_k_max,
        thm1_without_disjoint_groups,
        verdicts: Verdicts {
            singleton,
            thm1,
            thm2,
            f4_hamming,
        },
    }
}
