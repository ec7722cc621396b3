mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rankweight::codes::{gabidulin_code, CodeParams, Metric, DEFAULT_GUARD};
use rankweight::macwilliams::{
    binomial_moment, gaussian_forward, gaussian_inverse, mrd_rank_distribution, rank_macwilliams,
};
use rankweight::{Gf, QContext};

use common::{random_code, random_shape, transform_checks, Towers};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn analytic_duals_match_enumeration(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (q, m, n, k) = random_shape(&mut rng);
        let mut towers = Towers::default();
        let c = random_code(&mut rng, &towers.get(q, 1, m), n, k);
        if let Err(e) = transform_checks(&c) {
            return Err(TestCaseError::fail(e));
        }
    }

    #[test]
    fn binomial_moments_below_dual_distance(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (q, m, n, k) = random_shape(&mut rng);
        let mut towers = Towers::default();
        let c = random_code(&mut rng, &towers.get(q, 1, m), n, k);
        let dual = c.dual();
        let d_dual = if dual.k() == 0 { n + 1 } else { dual.minimum_distance(Metric::Rank, DEFAULT_GUARD).unwrap() };
        let a = c.weight_enumerator(Metric::Rank, DEFAULT_GUARD).unwrap();
        for nu in 0..d_dual.min(n + 1) {
            prop_assert!(binomial_moment(&a, &c.params(), nu as u64, d_dual as u64).unwrap().holds());
        }
        prop_assert!(binomial_moment(&a, &c.params(), d_dual as u64, d_dual as u64).is_err());
    }

    #[test]
    fn gaussian_inversion_round_trips(q in prop::sample::select(vec![2u64, 3, 4]), b in prop::collection::vec(-1000i64..1000, 1..10)) {
        let ctx = QContext::new(q).unwrap();
        let b: Vec<BigInt> = b.into_iter().map(BigInt::from).collect();
        prop_assert_eq!(gaussian_inverse(ctx, &gaussian_forward(ctx, &b)), b.clone());
        prop_assert_eq!(gaussian_forward(ctx, &gaussian_inverse(ctx, &b)), b);
    }
}

#[test]
fn mrd_distribution_matches_gabidulin_codes() {
    let mut towers = Towers::default();
    for (p, s, m) in [(2u32, 1u32, 1u32), (2, 1, 2), (2, 1, 3), (2, 1, 4), (3, 1, 2), (3, 1, 3), (2, 2, 2)] {
        let t = towers.get(p, s, m);
        let q = t.q();
        let a = t.primitive();
        for n in 1..=m as usize {
            let g: Vec<Gf> = (0..n).map(|i| t.pow(a, i as i64).unwrap()).collect();
            for k in 1..=n {
                if common::size_of(q, m, k as u32) > 1 << 16 {
                    continue;
                }
                let c = gabidulin_code(t.clone(), k, &g).unwrap();
                let params = CodeParams::new(q as u64, m as u64, n as u64, k as u64).unwrap();
                let predicted = mrd_rank_distribution(&params).unwrap();
                assert_eq!(c.weight_enumerator(Metric::Rank, DEFAULT_GUARD).unwrap(), predicted);
                assert_eq!(rank_macwilliams(&predicted, &params).unwrap(), mrd_rank_distribution(&params.dual()).unwrap());
            }
        }
    }
}
