use proptest::prelude::*;
use rankweight::linalg::{expand_vector, rank, rank_norm, rank_norm_by_span};
use rankweight::{FieldSpec, FieldTower, Gf};

fn towers() -> Vec<FieldTower> {
    [(2, 1, 1), (2, 1, 4), (3, 1, 3), (5, 1, 2), (2, 2, 3), (3, 2, 2), (7, 1, 1), (2, 1, 9)]
        .into_iter()
        .map(|(p, s, m)| FieldTower::new(p, s, m).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn field_axioms(idx in 0usize..8, raw in any::<(u32, u32, u32)>()) {
        let t = &towers()[idx];
        let (a, b, c) = (Gf(raw.0 % t.size()), Gf(raw.1 % t.size()), Gf(raw.2 % t.size()));
        prop_assert_eq!(t.add(a, t.add(b, c)), t.add(t.add(a, b), c));
        prop_assert_eq!(t.mul(a, t.mul(b, c)), t.mul(t.mul(a, b), c));
        prop_assert_eq!(t.mul(a, t.add(b, c)), t.add(t.mul(a, b), t.mul(a, c)));
        prop_assert_eq!(t.mul(a, b), t.mul(b, a));
        prop_assert_eq!(t.add(a, t.neg(a)), Gf::ZERO);
        prop_assert_eq!(t.sub(t.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(t.mul(a, t.inv(a).unwrap()), Gf::ONE);
            prop_assert_eq!(t.pow(a, -3).unwrap(), t.inv(t.pow(a, 3).unwrap()).unwrap());
        }
        // Frobenius is a ring map fixing exactly GF(q)
        prop_assert_eq!(t.frobenius(t.add(a, b), 1), t.add(t.frobenius(a, 1), t.frobenius(b, 1)));
        prop_assert_eq!(t.frobenius(t.mul(a, b), 1), t.mul(t.frobenius(a, 1), t.frobenius(b, 1)));
        prop_assert_eq!(t.frobenius(a, t.m()), a);
        prop_assert_eq!(t.frobenius(a, 1) == a, a.0 < t.q());
        // expansion is GF(q)-linear and round-trips
        let sum: Vec<u32> = t.expand(a).iter().zip(t.expand(b)).map(|(x, y)| t.add(Gf(*x), Gf(y)).0).collect();
        prop_assert_eq!(t.expand(t.add(a, b)), sum);
        prop_assert_eq!(t.from_base_coords(&t.expand(a)).unwrap(), a);
        prop_assert_eq!(t.from_prime_coords(&t.prime_coords(a)).unwrap(), a);
    }

    #[test]
    fn rank_norm_routes_agree(idx in 0usize..6, raw in prop::collection::vec(any::<u32>(), 1..6)) {
        let t = &towers()[idx];
        let v: Vec<Gf> = raw.iter().map(|x| Gf(x % t.size())).collect();
        let r = rank_norm(t, &v);
        prop_assert_eq!(r, rank(t, &expand_vector(t, &v)));
        prop_assert_eq!(r, rank_norm_by_span(t, &v));
    }
}

#[test]
fn resolved_specs_rebuild_identical_towers() {
    for t in towers() {
        let spec = t.spec();
        let json = serde_json::to_string(&spec).unwrap();
        let back: FieldSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(FieldTower::from_spec(&back).unwrap(), t);
    }
}

#[test]
fn primitive_element_generates_the_multiplicative_group() {
    for t in towers() {
        let mut seen = std::collections::HashSet::new();
        let mut x = Gf::ONE;
        for _ in 0..t.size() - 1 {
            seen.insert(x);
            x = t.mul(x, t.primitive());
        }
        assert_eq!(x, Gf::ONE);
        assert_eq!(seen.len() as u32, t.size() - 1);
    }
}
