//! End-to-end checks over the headline results, one PASS/FAIL line each.
//! Runs without the libtest harness so the lines always reach stdout.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cyclic_lrc::bounds::{
    f4_hamming_size_bound, lrc_singleton_bound, thm1_dimension_bound, thm2_dimension_bound, KParity,
};
use cyclic_lrc::constructions::{
    construction_1, construction_2, construction_available, construction_d10,
};
use cyclic_lrc::contraction::{contract_to_f4, image_codewords};
use cyclic_lrc::distance::DistanceMethod;
use cyclic_lrc::{
    all_defining_sets, analyze, cyclotomic_cosets, erasure_decode, find_disjoint_groups,
    local_repair, min_distance, verify_availability, verify_locality, AnalysisConfig,
    BinaryPolynomial, BitVec, CyclicCode, DefiningSet, DistanceConfig, ErasurePattern, Verdict,
};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = fn() -> String;

fn criterion_1() -> String {
    let code = construction_1(4, 2).unwrap().code;
    assert_eq!(code.g(), &BinaryPolynomial::from_exponents([0, 5]));
    assert_eq!(code.h(), &BinaryPolynomial::from_exponents([0, 5, 10]));
    assert_eq!(code.k(), 10);
    let rep = analyze(&code, &AnalysisConfig::default());
    assert_eq!(rep.distance.exact_value(), Some(2));
    assert_eq!(rep.bounds.singleton_d_max, Some(2));
    assert_eq!(rep.bounds.verdicts.singleton, Verdict::MetWithEquality);
    "[15,10,2], g = x^5+1, h = 1+x^5+x^10, LRC Singleton bound 2 met".into()
}

fn criterion_2() -> String {
    let code = construction_2(4).unwrap().code;
    let d = min_distance(&code, &DistanceConfig::default());
    assert_eq!((code.n(), code.k()), (15, 6));
    assert_eq!(d.method, DistanceMethod::Enumeration);
    assert_eq!(d.exact_value(), Some(6));
    assert_eq!(thm1_dimension_bound(4).unwrap(), code.k());
    assert_eq!(lrc_singleton_bound(15, 6, 2), 8);
    let rep = analyze(&code, &AnalysisConfig::default());
    assert_eq!(rep.bounds.verdicts.thm1, Verdict::MetWithEquality);
    assert_eq!(rep.bounds.verdicts.singleton, Verdict::Slack);
    "[15,6,6] by enumeration, k = 6 = dimension bound, Singleton 8 (slack)".into()
}

fn criterion_3() -> String {
    let code = construction_d10(4).unwrap().code;
    let d = min_distance(&code, &DistanceConfig::default());
    assert_eq!((code.n(), code.k()), (15, 2));
    assert_eq!(d.method, DistanceMethod::Enumeration);
    assert_eq!(d.exact_value(), Some(10));
    let g = code.generator_matrix();
    let weights: Vec<usize> = [g.row(0).clone(), g.row(1).clone(), g.row(0).xor(g.row(1))]
        .iter()
        .map(BitVec::weight)
        .collect();
    assert_eq!(weights, vec![10, 10, 10]);
    assert_eq!(thm2_dimension_bound(4, KParity::Even).unwrap(), 2);
    "[15,2,10], all 3 nonzero codewords weigh 10, k = 2 = even-k bound".into()
}

fn criterion_4() -> String {
    let code = construction_2(6).unwrap().code;
    let d = min_distance(&code, &DistanceConfig::default());
    assert_eq!((code.n(), code.k()), (63, 36));
    assert_eq!(code.bch_bound(), 6);
    let w = BitVec::from_positions(63, d.witness.clone().unwrap());
    assert_eq!(w.weight(), 6);
    assert!(code.contains(&w));
    assert_eq!(d.exact_value(), Some(6));
    assert_eq!(thm1_dimension_bound(6).unwrap(), 36);
    format!(
        "[63,36,6], BCH 6 + weight-6 codeword {:?}",
        d.witness.unwrap()
    )
}

fn criterion_5() -> String {
    let code = construction_d10(6).unwrap().code;
    let d = min_distance(&code, &DistanceConfig::default());
    assert_eq!((code.n(), code.k()), (63, 30));
    assert_eq!(code.bch_bound(), 10);
    assert_eq!(d.lower, 10);
    assert!(d.upper >= 10);
    let w = BitVec::from_positions(63, d.witness.clone().unwrap());
    assert!(code.contains(&w) && w.weight() == d.upper);
    assert_eq!(thm2_dimension_bound(6, KParity::Even).unwrap(), 30);
    format!(
        "[63,30], BCH 10, found weight {} (seed {:#x}), {}",
        d.upper,
        d.seed.unwrap_or_default(),
        if d.exact { "exact" } else { "unresolved" }
    )
}

fn criterion_6() -> String {
    let code = construction_available(6).unwrap().code;
    assert_eq!((code.n(), code.k()), (63, 27));
    assert_eq!(code.h(), &BinaryPolynomial::from_exponents([0, 9, 27]));
    assert_eq!(code.bch_bound(), 4);
    let d = min_distance(&code, &DistanceConfig::default());
    let w = BitVec::from_positions(63, d.witness.clone().unwrap());
    assert!(code.contains(&w) && w.weight() == 4);
    assert_eq!(d.exact_value(), Some(4));
    let cert = verify_availability(&code, 2, 3).unwrap();
    assert!(cert.exhaustive && cert.validate(&code));
    for i in 0..63 {
        assert_eq!(cert.checks_for(i).len(), 3);
    }
    let sets = cert.checks_for(0);
    for a in 0..3 {
        for b in a + 1..3 {
            let x: BTreeSet<usize> = sets[a].support().iter().copied().collect();
            let y: BTreeSet<usize> = sets[b].support().iter().copied().collect();
            assert_eq!(x.intersection(&y).copied().collect::<Vec<_>>(), vec![0]);
        }
    }
    let shown: Vec<&[usize]> = sets.iter().map(|c| c.support()).collect();
    format!("[63,27,4], h = 1+x^9+x^27, t = 3 on all 63 coordinates, sets of 0: {shown:?}")
}

fn criterion_7() -> String {
    let code = construction_2(4).unwrap().code;
    let groups = find_disjoint_groups(&code, 2).unwrap();
    let img = contract_to_f4(&code, &groups, 1 << 20).unwrap();
    assert_eq!((img.length, img.log2_size, img.distance), (5, 6, Some(3)));
    let words: BTreeSet<String> = image_codewords(&code)
        .unwrap()
        .iter()
        .map(|w| w.to_string())
        .collect();
    assert_eq!(words.len(), 64);
    let sphere = 1 + 3 * img.length;
    assert_eq!(words.len() * sphere, 4usize.pow(img.length as u32));
    assert_eq!(f4_hamming_size_bound(5, 3).unwrap(), 6);
    "GF(4) image (5, 2^6, 3), 64 * 16 = 4^5".into()
}

fn criterion_8() -> String {
    let code = construction_2(4).unwrap().code;
    let loc = verify_locality(&code, 2);
    assert!(loc.certified);
    let g = code.generator_matrix();
    let codewords: Vec<BitVec> = (0u64..64)
        .map(|m| g.left_mul(&BitVec::from_words(6, vec![m])))
        .collect();
    let mut local = 0;
    for cw in &codewords {
        for i in 0..15 {
            let erased = ErasurePattern::new(15, [i]).unwrap();
            let mut damaged = cw.clone();
            damaged.flip(i);
            let check = loc.witness[i].as_ref().unwrap();
            let t = local_repair(&damaged, &erased, i, check).unwrap();
            assert_eq!(t.reads.len(), 2);
            assert_eq!(t.value, cw.get(i));
            local += 1;
        }
    }
    let mut patterns = 0;
    let mut idx = [0usize, 1, 2, 3, 4];
    loop {
        let erased = ErasurePattern::new(15, idx).unwrap();
        for cw in &codewords {
            let mut damaged = cw.clone();
            for &e in &idx {
                damaged.set(e, false);
            }
            assert_eq!(&erasure_decode(&code, &damaged, &erased).unwrap(), cw);
        }
        patterns += 1;
        let Some(p) = (0..5).rev().find(|&p| idx[p] < 15 - 5 + p) else {
            break;
        };
        idx[p] += 1;
        for q in p + 1..5 {
            idx[q] = idx[q - 1] + 1;
        }
    }
    assert_eq!(patterns, 3003);
    format!("{local} local repairs with 2 reads, {patterns} five-erasure patterns x 64 codewords")
}

fn criterion_9() -> String {
    assert_eq!(lrc_singleton_bound(15, 10, 2), 2);
    assert_eq!(lrc_singleton_bound(15, 6, 2), 8);
    let k1: Vec<usize> = [4, 6, 8]
        .iter()
        .map(|&m| thm1_dimension_bound(m).unwrap())
        .collect();
    assert_eq!(k1, vec![6, 36, 162]);
    assert_eq!(thm2_dimension_bound(4, KParity::Even).unwrap(), 2);
    assert_eq!(thm2_dimension_bound(4, KParity::Any).unwrap(), 3);
    assert_eq!(f4_hamming_size_bound(5, 5).unwrap(), 3);
    "Singleton {2, 8}, dimension {6, 36, 162}, distance-10 {2, 3}, GF(4) packing 3".into()
}

fn random_set(rng: &mut ChaCha8Rng, m: u32) -> DefiningSet {
    let n = (1usize << m) - 1;
    let reps: Vec<usize> = cyclotomic_cosets(n)
        .unwrap()
        .iter()
        .map(|c| c.representative())
        .collect();
    loop {
        let chosen: Vec<usize> = reps
            .iter()
            .copied()
            .filter(|_| rng.random::<bool>())
            .collect();
        if !chosen.is_empty() && chosen.len() < reps.len() {
            return DefiningSet::from_cosets(n, chosen);
        }
    }
}

/// Minimum weight over all nonzero multiples `a(x) g(x)` with `deg a < k`.
fn multiple_oracle(code: &CyclicCode) -> usize {
    (1u64..1 << code.k())
        .map(|mask| {
            let a = BinaryPolynomial::from_mask(mask);
            a.poly_mul(code.g()).weight()
        })
        .min()
        .unwrap()
}

fn criterion_10() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0010);
    let ms = [4u32, 6, 8];
    for trial in 0..200 {
        let m = ms[trial % 3];
        let n = (1usize << m) - 1;
        let set = random_set(&mut rng, m);
        let code = CyclicCode::from_zeros(m, set.zeros().iter().copied()).unwrap();
        assert_eq!(
            code.g().poly_mul(code.h()),
            BinaryPolynomial::x_n_minus_one(n)
        );
        assert!(code
            .generator_matrix()
            .mul_transpose(&code.parity_check_matrix())
            .is_zero());
        let back = code.dual_code().dual_code();
        assert_eq!(back.defining_set(), code.defining_set());
        assert_eq!(back.g(), code.g());
    }
    let sets = all_defining_sets(4).unwrap();
    for set in &sets {
        let code = CyclicCode::from_zeros(4, set.zeros().iter().copied()).unwrap();
        let d = min_distance(&code, &DistanceConfig::default());
        assert_eq!(
            d.exact_value(),
            Some(multiple_oracle(&code)),
            "zeros {:?}",
            set.zeros()
        );
    }
    format!(
        "200 random defining sets over m in {{4,6,8}}, {} m=4 distances match",
        sets.len()
    )
}

fn main() -> ExitCode {
    let checks: [(&str, Check, u64); 10] = [
        ("construction 1, m=4, r=2", criterion_1, 1),
        ("construction 2, m=4", criterion_2, 1),
        ("distance-10 construction, m=4", criterion_3, 1),
        ("construction 2, m=6", criterion_4, 60),
        ("distance-10 construction, m=6", criterion_5, 120),
        ("availability construction, m=6", criterion_6, 60),
        ("GF(4) contraction, m=4", criterion_7, 1),
        ("repair exhaustion on [15,6,6]", criterion_8, 10),
        ("bound formulas", criterion_9, 1),
        ("property suites", criterion_10, 120),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (i, (name, f, limit)) in checks.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f));
        let elapsed = start.elapsed();
        let within = elapsed <= Duration::from_secs(*limit);
        let (ok, detail) = match outcome {
            Ok(detail) if within => (true, detail),
            Ok(detail) => (false, format!("{detail}; too slow")),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                (false, msg)
            }
        };
        if !ok {
            failures += 1;
        }
        println!(
            "{} {:>2} {name}: {detail} [{:.2}s / {limit}s]",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("{} of {} passed", checks.len() - failures, checks.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
