//! Whole-code analysis and the defining-set search built on it.

use serde::Serialize;

use crate::bounds::{evaluate, BoundInputs, BoundReport};
use crate::code::{defining_set_count, defining_sets, CyclicCode};
use crate::contraction::{contract_to_f4, F4Image};
use crate::distance::{min_distance, DistanceConfig, DistanceEstimate};
use crate::error::Result;
use crate::gf::GaloisField;
use crate::locality::{
    find_disjoint_groups, max_availability, verify_availability, verify_locality,
    AvailabilityCertificate, ParityCheck,
};

#[derive(Clone, Debug)]
pub struct AnalysisConfig {
    pub r: usize,
    /// Availability to certify; `None` searches for the largest.
    pub t: Option<usize>,
    pub distance: DistanceConfig,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        Self {
            r: 2,
            t: None,
            distance: DistanceConfig::default(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalitySummary {
    pub r: usize,
    pub certified: bool,
    pub uncovered: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AvailabilitySummary {
    pub t: usize,
    pub certified: bool,
    /// False when the certificate came from the greedy search.
    pub exhaustive: bool,
    pub repair_sets_of_0: Vec<ParityCheck>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Seeds {
    pub distance: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub m: u32,
    pub n: usize,
    pub k: usize,
    pub zeros: Vec<usize>,
    pub distance: DistanceEstimate,
    pub bch_bound: usize,
    pub locality: LocalitySummary,
    pub disjoint_groups: Option<Vec<Vec<usize>>>,
    pub availability: AvailabilitySummary,
    pub f4_image: Option<F4Image>,
    pub seeds: Seeds,
    pub budget: u64,
    pub bounds: BoundReport,
}

impl AnalysisReport {
    pub fn any_violation(&self) -> bool {
        self.bounds.any_violation()
    }
}

fn availability(code: &CyclicCode, r: usize, t: Option<usize>) -> AvailabilitySummary {
    let (t, cert): (usize, Option<AvailabilityCertificate>) = match t {
        Some(t) => (t, verify_availability(code, r, t).ok()),
        None => max_availability(code, r),
    };
    AvailabilitySummary {
        t,
        certified: cert.is_some(),
        exhaustive: cert.as_ref().is_none_or(|c| c.exhaustive),
        repair_sets_of_0: cert.map(|c| c.checks_for(0).to_vec()).unwrap_or_default(),
    }
}

pub fn analyze(code: &CyclicCode, config: &AnalysisConfig) -> AnalysisReport {
    let r = config.r;
    let distance = min_distance(code, &config.distance);
    let loc = verify_locality(code, r);
    let groups = if loc.certified {
        find_disjoint_groups(code, r)
    } else {
        None
    };
    let f4_image = groups
        .as_ref()
        .filter(|_| r == 2)
        .and_then(|g| contract_to_f4(code, g, config.distance.budget).ok());
    let availability = if loc.certified {
        availability(code, r, config.t)
    } else {
        AvailabilitySummary {
            t: config.t.unwrap_or(0),
            certified: false,
            exhaustive: true,
            repair_sets_of_0: Vec::new(),
        }
    };
    let bounds = evaluate(&BoundInputs {
        m: code.field().m(),
        n: code.n(),
        k: code.k(),
        r,
        locality_certified: loc.certified,
        disjoint_groups: groups.is_some(),
        distance: &distance,
    });
    AnalysisReport {
        m: code.field().m(),
        n: code.n(),
        k: code.k(),
        zeros: code.defining_set().zeros().to_vec(),
        bch_bound: code.bch_bound(),
        locality: LocalitySummary {
            r,
            certified: loc.certified,
            uncovered: loc.uncovered,
        },
        disjoint_groups: groups.map(|gs| gs.into_iter().map(|g| g.coordinates).collect()),
        availability,
        f4_image,
        seeds: Seeds {
            distance: config.distance.seed,
        },
        budget: config.distance.budget,
        bounds,
        distance,
    }
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub r: usize,
    pub require_locality: bool,
    pub distance: DistanceConfig,
    /// Stop after this many defining sets; the outcome is then partial.
    pub max_sets: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            r: 2,
            require_locality: false,
            distance: DistanceConfig {
                budget: 1 << 20,
                ..DistanceConfig::default()
            },
            max_sets: 4096,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub zeros: Vec<usize>,
    pub n: usize,
    pub k: usize,
    pub distance: DistanceEstimate,
    pub locality_r: Option<usize>,
    pub availability_t: usize,
    pub bound_verdicts: BoundReport,
    /// No other locality-certified entry has `k` and guaranteed `d` both at
    /// least as large, with one strictly larger.
    pub pareto: bool,
    pub partial: bool,
    pub seed: u64,
    pub budget: u64,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub results: Vec<SearchResult>,
    pub examined: u64,
    pub total: u64,
    pub partial: bool,
}

/// Analyzes every nonempty proper defining set of length `2^m - 1`, sorted
/// by guaranteed distance then dimension, both descending.
pub fn search(field: &GaloisField, config: &SearchConfig) -> Result<SearchOutcome> {
    let m = field.m();
    let total = defining_set_count(m)?;
    let r = config.r;
    let mut results = Vec::new();
    let mut examined = 0u64;
    for set in defining_sets(m)? {
        if examined == config.max_sets {
            break;
        }
        examined += 1;
        let code = CyclicCode::new(field.clone(), set)?;
        let loc = verify_locality(&code, r);
        if config.require_locality && !loc.certified {
            continue;
        }
        let distance = min_distance(&code, &config.distance);
        let groups = loc.certified && find_disjoint_groups(&code, r).is_some();
        let availability_t = if loc.certified {
            max_availability(&code, r).0
        } else {
            0
        };
        let bound_verdicts = evaluate(&BoundInputs {
            m,
            n: code.n(),
            k: code.k(),
            r,
            locality_certified: loc.certified,
            disjoint_groups: groups,
            distance: &distance,
        });
        results.push(SearchResult {
            zeros: code.defining_set().zeros().to_vec(),
            n: code.n(),
            k: code.k(),
            distance,
            locality_r: loc.certified.then_some(r),
            availability_t,
            bound_verdicts,
            pareto: false,
            partial: false,
            seed: config.distance.seed,
            budget: config.distance.budget,
        });
    }
    let partial = examined < total;
    mark_pareto(&mut results);
    for res in &mut results {
        res.partial = partial;
    }
    results.sort_by(|a, b| {
        b.distance
            .lower
            .cmp(&a.distance.lower)
            .then(b.k.cmp(&a.k))
            .then_with(|| a.zeros.cmp(&b.zeros))
    });
    Ok(SearchOutcome {
        results,
        examined,
        total,
        partial,
    })
}

fn mark_pareto(results: &mut [SearchResult]) {
    let local: Vec<(usize, usize)> = results
        .iter()
        .filter(|x| x.locality_r.is_some())
        .map(|x| (x.k, x.distance.lower))
        .collect();
    for res in results.iter_mut().filter(|x| x.locality_r.is_some()) {
        let (k, d) = (res.k, res.distance.lower);
        res.pareto = !local
            .iter()
            .any(|&(k2, d2)| k2 >= k && d2 >= d && (k2 > k || d2 > d));
    }
}
