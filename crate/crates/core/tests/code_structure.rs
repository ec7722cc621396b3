mod common;

use std::collections::HashMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rankweight::codes::{
    coordinate_extension, dual_of_vector_hamming_enumerator, dual_of_vector_rank_enumerator, elementary_extension,
    gabidulin_code, vector_dual, LinearCode, Metric, DEFAULT_GUARD,
};
use rankweight::linalg;
use rankweight::qpoly::{a_poly, ParamPoly};
use rankweight::{Gf, QContext};

use common::{random_base_matrix, random_code, random_shape, random_vector, vector_of_rank, Towers};

#[test]
fn full_rank_count_recurrence() {
    // A_{r,r}: rank-r words in <v_r>⊥, v_r of length r and rank r
    let mut towers = Towers::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for q in [2u32, 3] {
        let ctx = QContext::new(q as u64).unwrap();
        for m in 1..=3u32 {
            let t = towers.get(q, 1, m);
            let mut prev = BigInt::from(1);
            for r in 1..=(m as usize).min(3) {
                let v = vector_of_rank(&mut rng, &t, r, r);
                let w = vector_dual(t.clone(), &v).unwrap().weight_enumerator(Metric::Rank, DEFAULT_GUARD).unwrap();
                let a_rr = w.coeff(r);
                let expect = ctx.alpha(m as i64, (r - 1) as u64) - ctx.pow((r - 1) as u64) * &prev;
                assert_eq!(a_rr, expect, "q={q} m={m} r={r}");
                prev = a_rr;
            }
        }
    }
}

#[test]
fn extension_enumerator_is_independent_of_b() {
    let mut towers = Towers::default();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for (q, m, n, k, s) in [(2u32, 2u32, 2usize, 1usize, 1usize), (2, 3, 2, 1, 2), (3, 2, 2, 1, 1), (2, 2, 3, 1, 2)] {
        let t = towers.get(q, 1, m);
        let ctx = QContext::new(q as u64).unwrap();
        let c0 = random_code(&mut rng, &t, n, k);
        let w0 = c0.weight_enumerator(Metric::Rank, DEFAULT_GUARD).unwrap();
        let predicted = ParamPoly::from_hom(ctx, &w0.poly).q_product(&a_poly(ctx, s)).unwrap().eval(m as i64);
        let coord = coordinate_extension(&c0, s).unwrap().weight_enumerator(Metric::Rank, DEFAULT_GUARD).unwrap();
        assert_eq!(coord.poly, predicted);
        for _ in 0..6 {
            let b = random_base_matrix(&mut rng, &t, s, n);
            let ext = elementary_extension(&c0, &b).unwrap();
            let w = ext.weight_enumerator(Metric::Rank, DEFAULT_GUARD).unwrap();
            assert_eq!(w.poly, predicted, "q={q} m={m} n={n} k={k} s={s}");
        }
    }
}

#[test]
fn dual_of_vector_is_an_extension_of_a_distance_two_code() {
    let mut towers = Towers::default();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for (q, m, n) in [(2u32, 2u32, 3usize), (2, 3, 3), (3, 2, 3), (2, 2, 4)] {
        let t = towers.get(q, 1, m);
        for r in 1..=(m as usize).min(n) {
            let v = vector_of_rank(&mut rng, &t, n, r);
            let perp = vector_dual(t.clone(), &v).unwrap().weight_enumerator(Metric::Rank, DEFAULT_GUARD).unwrap();
            let vr = vector_of_rank(&mut rng, &t, r, r);
            let c0 = vector_dual(t.clone(), &vr).unwrap();
            assert_eq!((c0.n(), c0.k()), (r, r - 1));
            if r >= 2 {
                assert_eq!(c0.minimum_distance(Metric::Rank, DEFAULT_GUARD).unwrap(), 2);
            }
            let b = random_base_matrix(&mut rng, &t, n - r, r);
            let ext = elementary_extension(&c0, &b).unwrap();
            assert_eq!(ext.weight_enumerator(Metric::Rank, DEFAULT_GUARD).unwrap(), perp, "q={q} m={m} n={n} r={r}");
        }
    }
}

#[test]
fn dual_of_vector_enumerators_depend_only_on_weight() {
    let mut towers = Towers::default();
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for (q, m, n) in [(2u32, 2u32, 3usize), (3, 1, 3), (2, 3, 2), (3, 2, 2), (2, 1, 5)] {
        let t = towers.get(q, 1, m);
        let ctx = QContext::new(q as u64).unwrap();
        let mut seen_rank: HashMap<usize, _> = HashMap::new();
        let mut seen_ham: HashMap<usize, _> = HashMap::new();
        for _ in 0..30 {
            let v = random_vector(&mut rng, &t, n);
            let perp = vector_dual(t.clone(), &v).unwrap();
            let (wr, wh) = perp.enumerators(DEFAULT_GUARD, 1).unwrap();
            let r = linalg::rank_norm(&t, &v);
            let h = linalg::hamming_weight(&v);
            assert_eq!(wr.poly, dual_of_vector_rank_enumerator(ctx, r, n, m as usize).unwrap());
            assert_eq!(wh.poly, dual_of_vector_hamming_enumerator(ctx, h, n, m as usize).unwrap());
            assert_eq!(seen_rank.entry(r).or_insert_with(|| wr.clone()), &wr);
            assert_eq!(seen_ham.entry(h).or_insert_with(|| wh.clone()), &wh);
        }
    }
}

#[test]
fn mds_dual_of_full_weight_vector() {
    let mut towers = Towers::default();
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for (q, m, r) in [(2u32, 2u32, 3usize), (3, 1, 3), (2, 3, 2), (3, 2, 2)] {
        let t = towers.get(q, 1, m);
        let qm = BigInt::from(t.size());
        let v: Vec<Gf> = (0..r).map(|_| Gf(rng.gen_range(1..t.size()))).collect();
        let w = vector_dual(t.clone(), &v).unwrap().weight_enumerator(Metric::Hamming, DEFAULT_GUARD).unwrap();
        let full = rankweight::codes::hamming_full_space(&qm, r);
        let alt = rankweight::HomPoly::from_i64s(&[1, -1]).pow(r);
        let expect = full.add(&alt.scale(&(&qm - 1))).unwrap().div_exact(&qm).unwrap();
        assert_eq!(w.poly, expect);
        assert_eq!(w.min_weight(), Some(2));
    }
}

#[test]
fn duals_of_gabidulin_codes_are_mrd() {
    let mut towers = Towers::default();
    for (q, m) in [(2u32, 2u32), (2, 3), (2, 4), (3, 2), (3, 3)] {
        let t = towers.get(q, 1, m);
        let a = t.primitive();
        for n in 1..=m as usize {
            let g: Vec<Gf> = (0..n).map(|i| t.pow(a, i as i64).unwrap()).collect();
            for k in 1..=n {
                if common::size_of(q, m, k as u32) > 1 << 16 || common::size_of(q, m, (n - k) as u32) > 1 << 16 {
                    continue;
                }
                let c = gabidulin_code(t.clone(), k, &g).unwrap();
                assert!(c.is_mrd(DEFAULT_GUARD).unwrap(), "q={q} m={m} n={n} k={k}");
                if k < n {
                    assert!(c.dual().is_mrd(DEFAULT_GUARD).unwrap(), "dual q={q} m={m} n={n} k={k}");
                }
            }
        }
    }
}

#[test]
fn full_space_counts_match_num_rank_u() {
    let mut towers = Towers::default();
    for (q, m, n) in [(2u32, 2u32, 3usize), (3, 2, 2), (2, 3, 4), (3, 1, 4)] {
        let t = towers.get(q, 1, m);
        let ctx = QContext::new(q as u64).unwrap();
        let w = LinearCode::full_space(t, n).weight_enumerator(Metric::Rank, DEFAULT_GUARD).unwrap();
        for u in 0..=n {
            let expect = if u <= m as usize { ctx.num_rank_u(m as u64, n as u64, u as u64).unwrap() } else { 0.into() };
            assert_eq!(w.coeff(u), expect);
        }
        assert_eq!(w.poly, a_poly(ctx, n).eval(m as i64));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dual_is_orthogonal_and_involutive(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (q, m, n, k) = random_shape(&mut rng);
        let mut towers = Towers::default();
        let t = towers.get(q, 1, m);
        let c = random_code(&mut rng, &t, n, k);
        let d = c.dual();
        prop_assert_eq!(c.k() + d.k(), n);
        for row in d.generator().row_vecs() {
            for g in c.generator().row_vecs() {
                prop_assert!(linalg::dot(&t, &row, &g).is_zero());
            }
        }
        prop_assert!(d.dual().same_code(&c));
    }

    #[test]
    fn rank_weight_bounded_by_hamming_weight(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (q, m, n, k) = random_shape(&mut rng);
        let mut towers = Towers::default();
        let t = towers.get(q, 1, m);
        let c = random_code(&mut rng, &t, n, k);
        for w in c.codewords(DEFAULT_GUARD).unwrap().iter().take(512) {
            let r = linalg::rank_norm(&t, w);
            prop_assert!(r <= linalg::hamming_weight(w));
            prop_assert!(r <= (m as usize).min(n));
        }
        if k >= 1 {
            let dr = c.minimum_distance(Metric::Rank, DEFAULT_GUARD).unwrap();
            let dh = c.minimum_distance(Metric::Hamming, DEFAULT_GUARD).unwrap();
            prop_assert!(dr <= dh && dh <= n - k + 1);
        }
    }

    #[test]
    fn parallel_and_serial_enumeration_agree(seed: u64, workers in 2usize..9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (q, m, n, k) = random_shape(&mut rng);
        let mut towers = Towers::default();
        let t = towers.get(q, 1, m);
        let c = random_code(&mut rng, &t, n, k);
        prop_assert_eq!(c.enumerators(DEFAULT_GUARD, workers).unwrap(), c.enumerators(DEFAULT_GUARD, 1).unwrap());
    }
}

#[test]
fn prime_power_base_fields() {
    // q = 4 and q = 9 exercise the two-layer tower
    let mut towers = Towers::default();
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for (p, s, m, n, k) in [(2u32, 2u32, 2u32, 3usize, 1usize), (3, 2, 1, 3, 1), (2, 2, 1, 4, 2)] {
        let t = towers.get(p, s, m);
        let c = random_code(&mut rng, &t, n, k);
        common::transform_checks(&c).unwrap();
    }
}
