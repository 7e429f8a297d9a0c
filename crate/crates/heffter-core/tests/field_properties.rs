//! Field-level invariants: primitive element orders across every supported
//! order up to 10^4, the discrete-log homomorphism, and randomized field
//! axiom checks.

use std::sync::Arc;

use heffter_core::arith;
use heffter_core::{Field, FieldElement};

fn all_prime_powers(limit: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    for q in 2..=limit {
        if let Some(pk) = arith::prime_power_decompose(q).unwrap() {
            out.push(pk);
        }
    }
    out
}

#[test]
fn primitive_element_has_full_order_everywhere() {
    for (p, k) in all_prime_powers(10_000) {
        let f = Field::new(p, k, None).unwrap();
        let q = f.order();
        let r = f.primitive_element();
        assert_eq!(f.pow(r, (q - 1) as i64).unwrap(), f.one(), "r^(q-1) != 1 for q={q}");
        for s in arith::distinct_prime_factors(q - 1) {
            assert_ne!(
                f.pow(r, ((q - 1) / s) as i64).unwrap(),
                f.one(),
                "r has order dividing (q-1)/{s} for q={q}"
            );
        }
    }
}

#[test]
fn discrete_log_is_a_homomorphism() {
    for (p, k) in [(19, 1), (5, 2), (7, 2), (3, 4), (181, 1)] {
        let f = Field::new(p, k, None).unwrap();
        let q = f.order();
        let units: Vec<FieldElement> = f.units().collect();
        for &x in &units {
            for &y in &units {
                let lhs = f.discrete_log(f.mul(x, y)).unwrap();
                let rhs = (f.discrete_log(x).unwrap() + f.discrete_log(y).unwrap()) % (q - 1);
                assert_eq!(lhs, rhs);
            }
        }
    }
}

/// Small deterministic generator for the axiom spot checks.
struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}

#[test]
fn field_axioms_hold_on_random_triples() {
    for (p, k) in [(19, 1), (5, 2), (31, 1), (7, 3), (2, 8), (181, 1)] {
        let f = Field::new(p, k, None).unwrap();
        let q = f.order();
        let all: Vec<FieldElement> = f.elements().collect();
        let mut rng = SplitMix(q);
        for _ in 0..10_000 {
            let a = all[(rng.next() % q) as usize];
            let b = all[(rng.next() % q) as usize];
            let c = all[(rng.next() % q) as usize];
            assert_eq!(f.add(a, b), f.add(b, a));
            assert_eq!(f.mul(a, b), f.mul(b, a));
            assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            assert_eq!(f.add(a, f.neg(a)), f.zero());
            assert_eq!(f.sub(a, b), f.add(a, f.neg(b)));
            if !b.is_zero() {
                assert_eq!(f.mul(f.div(a, b).unwrap(), b), a);
            }
        }
    }
}

#[test]
fn make_field_is_deterministic() {
    for (p, k) in [(19, 1), (5, 2), (7, 3), (2, 8), (1009, 1)] {
        let a = Field::new(p, k, None).unwrap();
        let b = Field::new(p, k, None).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.primitive_element(), b.primitive_element());
        let xs: Vec<u32> = a.units().map(|x| x.encoding()).collect();
        let ys: Vec<u32> = b.units().map(|x| x.encoding()).collect();
        assert_eq!(xs, ys);
    }
}

#[test]
fn powers_match_repeated_multiplication() {
    let f = Arc::new(Field::new(7, 3, None).unwrap());
    for x in f.units().step_by(17) {
        let mut acc = f.one();
        for e in 0..12i64 {
            assert_eq!(f.pow(x, e).unwrap(), acc);
            assert_eq!(f.pow(x, -e).unwrap(), f.inv(acc).unwrap());
            acc = f.mul(acc, x);
        }
    }
}

#[test]
fn fields_are_immutable_and_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<Field>();
    assert_send_sync::<heffter_core::HeffterArray>();
    assert_send_sync::<heffter_core::ElementSet>();

    let f = Arc::new(Field::new(181, 1, None).unwrap());
    let handles: Vec<_> = (0..4)
        .map(|t| {
            let f = Arc::clone(&f);
            std::thread::spawn(move || {
                let mut acc = 0u64;
                for x in f.units().skip(t) {
                    acc = (acc + f.discrete_log(x).unwrap()) % 997;
                }
                acc
            })
        })
        .collect();
    let results: Vec<u64> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    assert_eq!(results.len(), 4);
}
