use std::collections::BTreeSet;

use cyclic_lrc::constructions::{
    construction_1, construction_2, construction_available, construction_d10,
};
use cyclic_lrc::{
    choose_repair_set, erasure_decode, find_low_weight_duals, local_repair, verify_availability,
    BitVec, CyclicCode, ErasurePattern, Error,
};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn all_codewords(code: &CyclicCode) -> Vec<BitVec> {
    let g = code.generator_matrix();
    (0u64..1 << code.k())
        .map(|m| g.left_mul(&BitVec::from_words(code.k(), vec![m])))
        .collect()
}

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..size).collect();
    if size == 0 {
        return vec![vec![]];
    }
    loop {
        out.push(idx.clone());
        let Some(p) = (0..size).rev().find(|&p| idx[p] < n - size + p) else {
            return out;
        };
        idx[p] += 1;
        for q in p + 1..size {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

#[test]
fn every_check_repairs_every_coordinate_on_length_15() {
    for code in [
        construction_1(4, 2).unwrap().code,
        construction_2(4).unwrap().code,
        construction_d10(4).unwrap().code,
    ] {
        let checks = find_low_weight_duals(&code, 3);
        let words = all_codewords(&code);
        for cw in &words {
            for c in &checks {
                for &i in c.support() {
                    let erased = ErasurePattern::new(15, [i]).unwrap();
                    let mut damaged = cw.clone();
                    damaged.flip(i);
                    let t = local_repair(&damaged, &erased, i, c).unwrap();
                    assert_eq!(t.reads.len(), 2);
                    assert!(!t.reads.contains(&i));
                    assert_eq!(t.value, cw.get(i));
                }
            }
        }
    }
}

#[test]
fn sampled_local_repair_on_length_63() {
    let code = construction_available(6).unwrap().code;
    let cert = verify_availability(&code, 2, 3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(63);
    for _ in 0..10_000 {
        let msg: Vec<bool> = (0..code.k()).map(|_| rng.random::<bool>()).collect();
        let cw = code.encode(&BitVec::from_bools(&msg));
        let i = rng.random_range(0..63);
        let erased = ErasurePattern::new(63, [i]).unwrap();
        for c in cert.checks_for(i) {
            let t = local_repair(&cw, &erased, i, c).unwrap();
            assert_eq!(t.value, cw.get(i));
        }
    }
}

#[test]
fn erasures_below_distance_always_decode() {
    for (code, d) in [
        (construction_2(4).unwrap().code, 6),
        (construction_d10(4).unwrap().code, 10),
    ] {
        let words = all_codewords(&code);
        for size in 1..d {
            for pattern in subsets(15, size) {
                let erased = ErasurePattern::new(15, pattern.iter().copied()).unwrap();
                for cw in &words {
                    let mut damaged = cw.clone();
                    for &e in &pattern {
                        damaged.set(e, true);
                    }
                    assert_eq!(&erasure_decode(&code, &damaged, &erased).unwrap(), cw);
                }
            }
        }
    }
}

#[test]
fn some_pattern_of_d_erasures_fails_with_codeword_witness() {
    let code = construction_2(4).unwrap().code;
    let zero = BitVec::zeros(15);
    let mut failures = 0;
    for pattern in subsets(15, 6) {
        let erased = ErasurePattern::new(15, pattern.iter().copied()).unwrap();
        if let Err(Error::AmbiguousErasures { witness }) = erasure_decode(&code, &zero, &erased) {
            let w = BitVec::from_positions(15, witness.iter().copied());
            assert!(code.contains(&w) && !w.is_zero());
            assert!(witness.iter().all(|i| pattern.contains(i)));
            failures += 1;
        }
    }
    assert!(failures > 0);
}

#[test]
fn concurrent_repairs_of_one_coordinate_read_disjoint_sets() {
    let code = construction_available(6).unwrap().code;
    let cert = verify_availability(&code, 2, 3).unwrap();
    for i in 0..63 {
        let mut busy = BTreeSet::new();
        let mut reads: Vec<BTreeSet<usize>> = Vec::new();
        while let Some(c) = choose_repair_set(&cert, i, &busy) {
            let r: BTreeSet<usize> = c.support().iter().copied().filter(|&j| j != i).collect();
            assert!(reads.iter().all(|prev| prev.is_disjoint(&r)));
            busy.extend(r.iter().copied());
            reads.push(r);
        }
        assert_eq!(reads.len(), 3);
    }
}
