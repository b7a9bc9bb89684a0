mod common;

use common::{massive_params, params, rational};
use galext_core::group_cocycle::{
    apply_coboundary, associativity_defect, element_distance, exact_associativity_defect, exact_homomorphism_defect,
    homomorphism_defect, random_element, random_exact_element, wrap_angle, CocycleLaw, ExactElement, GalileiLaw,
    GroupElement, GroupKind, Theorem2Map, Trivializer,
};
use galext_core::{ExtensionParams, Rational};
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-12;

fn law_for(kind: GroupKind, p: &ExtensionParams) -> GalileiLaw<f64> {
    let p = match kind {
        GroupKind::Extended => p.without_l(),
        GroupKind::Covering => p.clone(),
    };
    GalileiLaw::new(kind, &p).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn cocycle_identity_holds(p in params(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for kind in GroupKind::ALL {
            let law = law_for(kind, &p);
            for _ in 0..200 {
                let (g, h, f) = (random_element(&mut rng, kind), random_element(&mut rng, kind), random_element(&mut rng, kind));
                let d = associativity_defect(&law, &g, &h, &f);
                prop_assert!(d < TOL, "{:?} defect {}", kind, d);
            }
        }
    }

    #[test]
    fn exact_mode_is_associative(p in params(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for kind in GroupKind::ALL {
            let p = match kind {
                GroupKind::Extended => p.without_l(),
                GroupKind::Covering => p.clone(),
            };
            let law = GalileiLaw::<Rational>::new(kind, &p).unwrap();
            for _ in 0..20 {
                let (g, h, f) = (random_exact_element(&mut rng), random_exact_element(&mut rng), random_exact_element(&mut rng));
                prop_assert!(exact_associativity_defect(&law, &g, &h, &f).is_zero());
                let inv = law.inverse(&g);
                prop_assert_eq!(law.compose(&g, &inv), ExactElement::identity());
            }
        }
    }

    #[test]
    fn inverse_is_two_sided(p in params(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for kind in GroupKind::ALL {
            let law = law_for(kind, &p);
            for _ in 0..50 {
                let g = random_element(&mut rng, kind);
                let inv = law.inverse(&g);
                let e = GroupElement::identity();
                prop_assert!(element_distance(kind, &law.compose(&g, &inv), &e) < TOL);
                prop_assert!(element_distance(kind, &law.compose(&inv, &g), &e) < TOL);
            }
        }
    }

    #[test]
    fn k_removing_map_is_a_homomorphism(p in massive_params(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for kind in GroupKind::ALL {
            let from = law_for(kind, &p);
            let to = law_for(kind, &p.without_k());
            let map = Theorem2Map::<f64>::new(&p).unwrap();
            for _ in 0..100 {
                let (g, h) = (random_element(&mut rng, kind), random_element(&mut rng, kind));
                prop_assert!(homomorphism_defect(&from, &to, |x| map.apply(x), &g, &h) < TOL);
            }
        }
        let from = GalileiLaw::<Rational>::new(GroupKind::Covering, &p).unwrap();
        let to = GalileiLaw::<Rational>::new(GroupKind::Covering, &p.without_k()).unwrap();
        let map = Theorem2Map::<Rational>::new(&p).unwrap();
        for _ in 0..20 {
            let (g, h) = (random_exact_element(&mut rng), random_exact_element(&mut rng));
            prop_assert!(exact_homomorphism_defect(&from, &to, |x| map.apply(x), &g, &h).is_zero());
        }
    }

    #[test]
    fn coboundary_shift_stays_associative(p in params(), a in rational(), seed in any::<u64>()) {
        let a = galext_core::rational::rational_to_f64(&a);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let zetas: Vec<Trivializer> = vec![
            Box::new(move |g: &GroupElement| a * g.tau * g.u[0] + g.v[1]),
            Box::new(|g: &GroupElement| (g.v[0] * g.v[0] + g.v[1] * g.v[1]) * g.tau.sin()),
            Box::new(|g: &GroupElement| g.theta.cos() * g.u[1]),
        ];
        for zeta in zetas {
            let law = apply_coboundary(law_for(GroupKind::Covering, &p), zeta);
            for _ in 0..50 {
                let (g, h, f) = (random_element(&mut rng, GroupKind::Covering), random_element(&mut rng, GroupKind::Covering), random_element(&mut rng, GroupKind::Covering));
                prop_assert!(associativity_defect(&law, &g, &h, &f) < TOL);
            }
        }
    }

    #[test]
    fn pure_coboundary_is_associative(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let law = apply_coboundary(law_for(GroupKind::Extended, &ExtensionParams::zero()), Box::new(|g: &GroupElement| g.u[0] * g.v[1] - g.tau));
        for _ in 0..50 {
            let (g, h, f) = (random_element(&mut rng, GroupKind::Extended), random_element(&mut rng, GroupKind::Extended), random_element(&mut rng, GroupKind::Extended));
            prop_assert!(associativity_defect(&law, &g, &h, &f) < TOL);
        }
    }

    #[test]
    fn cover_reproduces_extended_without_l(p in params(), seed in any::<u64>()) {
        let p = p.without_l();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ext = law_for(GroupKind::Extended, &p);
        let cov = law_for(GroupKind::Covering, &p);
        for _ in 0..50 {
            let (g, h) = (random_element(&mut rng, GroupKind::Extended), random_element(&mut rng, GroupKind::Extended));
            let mut c = cov.compose(&g, &h);
            c.theta = wrap_angle(c.theta);
            prop_assert!(element_distance(GroupKind::Extended, &c, &ext.compose(&g, &h)) < TOL);
        }
    }
}

#[test]
fn normalization_is_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let law = law_for(GroupKind::Covering, &ExtensionParams::from_ints(3, -2, 5));
    let e = GroupElement::identity();
    for _ in 0..100 {
        let g = random_element(&mut rng, GroupKind::Covering);
        assert_eq!(law.exponent(&g, &e), 0.0);
        assert_eq!(law.exponent(&e, &g), 0.0);
    }
}
