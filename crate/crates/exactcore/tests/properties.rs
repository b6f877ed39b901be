//! Property suites for the exact substrate: evaluation homomorphism,
//! product rule, substitution composition, rank invariance under
//! scrambling, Monte Carlo generic rank agreement, kernel correctness,
//! and PSNF operation-log replay.

use exactcore::matrix::{generic_rank, MatPoly, MatQ};
use exactcore::poly::QPoly;
use exactcore::psnf::{apply_ops, psnf, CoeffField};
use exactcore::rat::{rat, Rat};
use exactcore::{MatRF, Mono, QRatFunc};
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

const NVARS: u32 = 4;

fn arb_mono(max_deg: u16) -> impl Strategy<Value = Mono> {
    proptest::collection::vec((0..NVARS, 0..=max_deg), 0..3)
        .prop_map(|pairs| {
            let mut m: HashMap<u32, u16> = HashMap::new();
            for (v, e) in pairs {
                *m.entry(v).or_insert(0) += e;
            }
            Mono::from_pairs(m.into_iter().collect())
        })
}

fn arb_poly(max_terms: usize) -> impl Strategy<Value = QPoly> {
    proptest::collection::vec((arb_mono(3), -9i64..=9), 0..=max_terms).prop_map(|terms| {
        terms
            .into_iter()
            .fold(QPoly::zero(), |acc, (m, c)| &acc + &QPoly::monomial(m, rat(c)))
    })
}

fn arb_point() -> impl Strategy<Value = Vec<Rat>> {
    proptest::collection::vec((-7i64..=7, 1i64..=5), NVARS as usize)
        .prop_map(|v| v.into_iter().map(|(n, d)| exactcore::rat::ratio(n, d)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evaluation_homomorphism(p in arb_poly(8), q in arb_poly(8), pt in arb_point()) {
        let f = |v: u32| pt[v as usize].clone();
        let lhs = (&p * &q).eval(&f);
        let rhs = p.eval(&f) * q.eval(&f);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_rule(p in arb_poly(6), q in arb_poly(6), v in 0..NVARS) {
        let lhs = (&p * &q).derivative(v);
        let rhs = &(&p * &q.derivative(v)) + &(&q * &p.derivative(v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn disjoint_substitution_commutes(p in arb_poly(6), a in arb_poly(3), b in arb_poly(3)) {
        // substitute v0 -> a (a avoiding v0, v1), v1 -> b likewise; composed
        // simultaneous substitution equals sequential in either order
        let clean = |q: &QPoly| {
            let mut map = HashMap::new();
            map.insert(0u32, QPoly::var(2));
            map.insert(1u32, QPoly::var(3));
            q.substitute(&map)
        };
        let a = clean(&a);
        let b = clean(&b);
        let mut both = HashMap::new();
        both.insert(0u32, a.clone());
        both.insert(1u32, b.clone());
        let mut first = HashMap::new();
        first.insert(0u32, a);
        let mut second = HashMap::new();
        second.insert(1u32, b);
        let sim = p.substitute(&both);
        let seq = p.substitute(&first).substitute(&second);
        prop_assert_eq!(sim, seq);
    }
}

#[test]
fn rank_invariant_under_scrambling() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..100 {
        let rows = rng.gen_range(1..=8);
        let cols = rng.gen_range(1..=8);
        let m = MatQ::from_rows(
            (0..rows)
                .map(|_| {
                    (0..cols)
                        .map(|_| {
                            if rng.gen_bool(0.3) {
                                Rat::zero()
                            } else {
                                rat(rng.gen_range(-5..=5))
                            }
                        })
                        .collect()
                })
                .collect(),
        );
        let r = m.rank();
        // random invertible row and column scrambles
        let p = random_invertible(rows, &mut rng);
        let q = random_invertible(cols, &mut rng);
        assert_eq!(p.mul(&m).mul(&q).rank(), r);
    }
}

fn random_invertible(n: usize, rng: &mut impl Rng) -> MatQ {
    loop {
        let m = MatQ::from_rows(
            (0..n)
                .map(|_| (0..n).map(|_| rat(rng.gen_range(-4..=4))).collect())
                .collect(),
        );
        if m.rank() == n {
            return m;
        }
    }
}

#[test]
fn generic_rank_dominates_and_agrees_at_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let rows = rng.gen_range(1..=6);
        let cols = rng.gen_range(1..=6);
        let m = MatPoly::from_rows(
            (0..rows)
                .map(|_| {
                    (0..cols)
                        .map(|_| {
                            // degree <= 2 in up to 3 variables
                            let mut p = QPoly::zero();
                            for _ in 0..rng.gen_range(0..3) {
                                let v1 = rng.gen_range(0..3u32);
                                let m = if rng.gen_bool(0.5) {
                                    Mono::var(v1)
                                } else {
                                    Mono::var(v1).mul(&Mono::var(rng.gen_range(0..3u32)))
                                };
                                p = &p + &QPoly::monomial(m, rat(rng.gen_range(-3..=3)));
                            }
                            p
                        })
                        .collect()
                })
                .collect(),
        );
        let gr = generic_rank(&m, &mut rng, 3);
        // dominates the rank at any specific point
        let vals: HashMap<u32, Rat> = (0..3u32).map(|v| (v, rat(rng.gen_range(-4..=4)))).collect();
        let at_point = m.eval(&|v| vals.get(&v).cloned().unwrap_or_else(Rat::zero)).rank();
        assert!(gr.rank >= at_point);
        // agrees with the deterministic symbolic fallback
        assert_eq!(gr.rank, m.rank_over_fraction_field());
    }
}

#[test]
fn kernel_vectors_are_independent_and_annihilated() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..50 {
        let rows = rng.gen_range(1..=6);
        let cols = rng.gen_range(1..=6);
        let m = MatQ::from_rows(
            (0..rows)
                .map(|_| (0..cols).map(|_| rat(rng.gen_range(-5..=5))).collect())
                .collect(),
        );
        let k = m.kernel_basis();
        assert_eq!(k.len(), cols - m.rank());
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        if !k.is_empty() {
            let km = MatQ::from_rows(k);
            assert_eq!(km.rank(), km.rows);
        }
    }
}

#[test]
fn psnf_replay_and_rank_split() {
    let reg = exactcore::VarRegistry::new();
    let t = reg.intern("t1");
    let u = reg.intern("u");
    let w = reg.intern("w");
    let field = CoeffField::rational_in([t]);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..40 {
        let rows = rng.gen_range(1..=5);
        let cols = rng.gen_range(1..=5);
        let m = MatRF::from_rows(
            (0..rows)
                .map(|_| {
                    (0..cols)
                        .map(|_| {
                            let mut p = QPoly::zero();
                            for _ in 0..rng.gen_range(0..3) {
                                let vars = [t, u, w];
                                let v1 = vars[rng.gen_range(0..3)];
                                p = &p + &QPoly::monomial(Mono::var(v1), rat(rng.gen_range(-3..=3)));
                            }
                            if rng.gen_bool(0.4) {
                                p = &p + &QPoly::constant(rat(rng.gen_range(-2..=2)));
                            }
                            QRatFunc::from_poly(p)
                        })
                        .collect()
                })
                .collect(),
        );
        let r = psnf(&m, &field);
        // replaying the logged operations reproduces the reduced matrix
        assert_eq!(apply_ops(&m, &r.ops), r.reduced);
        // identity block is exact
        for i in 0..r.identity_size {
            for j in 0..r.identity_size {
                let expect = if i == j { QRatFunc::one() } else { QRatFunc::zero() };
                assert_eq!(r.reduced[(i, j)], expect);
            }
        }
        // no unit left in the residual
        for i in 0..r.residual.rows {
            for j in 0..r.residual.cols {
                assert!(!field.is_unit(&r.residual[(i, j)]));
            }
        }
        // s + generic_rank(B) = generic_rank(M): compare via dense evaluation
        // at random values of the non-field variables over Q(t)
        let rank_m = m.rank();
        let rank_b = r.residual.rank();
        // rank over the big field Q(t,u,w) of the whole matrix:
        assert_eq!(r.identity_size + rank_b, rank_m);
    }
}
