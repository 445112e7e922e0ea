use std::collections::BTreeMap;
use std::sync::Arc;

use proptest::prelude::*;
use taumap::artranslation::{is_injective, tau, tau_inverse, tau_inverse_via_copresentation};
use taumap::corpus::{nakayama_family, random_monomial_algebras, RandomShape};
use taumap::k0::{
    decide_tau_map, invert_to_tau_inverse_map, is_tau_map_on, nakayama_tau_map, tau_map_feasible,
    Status,
};
use taumap::nakayama::Direction;
use taumap::repr::{
    ext1_dim, image, injective_envelope, is_isomorphic, is_uniserial, kernel, projective_cover,
    radical, socle, top,
};
use taumap::{MonomialAlgebra, Representation, StandardKind};

fn random_algebra(seed: u64) -> Arc<MonomialAlgebra> {
    random_monomial_algebras(1, seed, RandomShape::default()).remove(0)
}

fn standard(a: &Arc<MonomialAlgebra>, kind: StandardKind) -> Vec<Representation> {
    (0..a.vertex_count())
        .map(|v| Representation::standard(a, kind, v).unwrap())
        .collect()
}

/// Simples, projectives, injectives and radicals of projectives.
fn test_modules(a: &Arc<MonomialAlgebra>) -> Vec<Representation> {
    let mut out = Vec::new();
    for kind in [
        StandardKind::Simple,
        StandardKind::Projective,
        StandardKind::Injective,
    ] {
        out.extend(standard(a, kind));
    }
    for p in standard(a, StandardKind::Projective) {
        let r = radical(&p).0;
        if !r.is_zero() {
            out.push(r);
        }
    }
    out
}

/// Multiset of vertices, one per basis vector, as a sorted list.
fn vertex_multiset(dims: &[usize]) -> Vec<usize> {
    dims.iter()
        .enumerate()
        .flat_map(|(v, &d)| std::iter::repeat_n(v, d))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cartan_of_opposite_is_transpose(seed in any::<u64>()) {
        let a = random_algebra(seed);
        prop_assert_eq!(a.opposite().cartan_matrix(), a.cartan_matrix().transpose());
        prop_assert_eq!(a.cartan_matrix().sum() as usize, a.dim());
    }

    #[test]
    fn covers_are_minimal(seed in any::<u64>()) {
        let a = random_algebra(seed);
        for m in test_modules(&a) {
            let cover = projective_cover(&m).unwrap();
            prop_assert!(cover.map.is_surjective());
            let mut s = cover.sum.summands.clone();
            s.sort();
            prop_assert_eq!(s, vertex_multiset(top(&m).0.dims()));

            let env = injective_envelope(&m).unwrap();
            prop_assert!(env.map.is_injective());
            let mut s = env.sum.summands.clone();
            s.sort();
            prop_assert_eq!(s, vertex_multiset(socle(&m).0.dims()));
        }
    }

    #[test]
    fn rank_nullity(seed in any::<u64>()) {
        let a = random_algebra(seed);
        for m in test_modules(&a) {
            let f = projective_cover(&m).unwrap().map;
            let (k, _) = kernel(&f);
            let (i, _) = image(&f);
            for v in 0..a.vertex_count() {
                prop_assert_eq!(k.dims()[v] + i.dims()[v], f.domain().dims()[v]);
            }
            prop_assert_eq!(i.dims(), m.dims());
        }
    }

    #[test]
    fn ext_between_simples_counts_arrows(seed in any::<u64>()) {
        let a = random_algebra(seed);
        let q = a.quiver();
        for s in 0..a.vertex_count() {
            for t in 0..a.vertex_count() {
                let arrows = q.out_arrows(s).filter(|&x| q.arrow(x).target == t).count();
                prop_assert_eq!(ext1_dim(&a, s, t).unwrap(), arrows);
            }
        }
    }

    #[test]
    fn nakayama_means_uniserial(seed in any::<u64>()) {
        let a = random_algebra(seed);
        let uniserial = standard(&a, StandardKind::Projective).iter().all(is_uniserial)
            && standard(&a, StandardKind::Injective).iter().all(is_uniserial);
        prop_assert_eq!(a.is_nakayama(), uniserial);
    }

    #[test]
    fn translates_of_simples(seed in any::<u64>()) {
        let a = random_algebra(seed);
        let sinks = a.quiver().sources_and_sinks().1;
        for (v, s) in standard(&a, StandardKind::Simple).into_iter().enumerate() {
            let t = tau(&s).unwrap();
            // simple projectives sit at sinks
            prop_assert_eq!(t.is_zero(), sinks.contains(&v));
            if !t.is_zero() {
                prop_assert!(!is_injective(&t).unwrap());
                prop_assert!(is_isomorphic(&tau_inverse(&t).unwrap(), &s).unwrap());
            }
            let dual = tau_inverse(&s).unwrap();
            let cop = tau_inverse_via_copresentation(&s).unwrap();
            prop_assert!(is_isomorphic(&dual, &cop).unwrap());
        }
        for p in standard(&a, StandardKind::Projective) {
            prop_assert!(tau(&p).unwrap().is_zero());
        }
        for i in standard(&a, StandardKind::Injective) {
            prop_assert!(tau_inverse(&i).unwrap().is_zero());
        }
    }

    #[test]
    fn verdict_is_consistent(seed in any::<u64>()) {
        let a = random_algebra(seed);
        let v = decide_tau_map(&a).unwrap();
        for c in &v.components {
            let (sub, _) = a.restrict(&c.vertices).unwrap();
            if c.status == Status::Exists && !sub.quiver().is_acyclic() {
                prop_assert!(sub.is_nakayama());
            }
        }
        if let Some(w) = &v.witness {
            prop_assert_eq!(v.status, Status::Exists);
            prop_assert!(is_tau_map_on(w, &standard(&a, StandardKind::Simple)).unwrap());
        }
    }
}

#[test]
fn nakayama_map_is_a_feasible_solution() {
    for k in nakayama_family(4, 5, 4, 4).unwrap() {
        let n = k.vertex_count();
        let phi = nakayama_tau_map(&k);
        let mut constraints = Vec::new();
        let mut modules = Vec::new();
        for info in k.enumerate_indecomposables() {
            let m = k.module(info.module).unwrap();
            if let Some(t) = k.translate(info.module, Direction::Tau).unwrap() {
                constraints.push((k.dim_vector(info.module).unwrap(), k.dim_vector(t).unwrap()));
            }
            modules.push(m);
        }
        assert!(is_tau_map_on(&phi, &modules).unwrap());
        let solved = tau_map_feasible(n, &constraints).expect("a τ-map exists");
        for (d, t) in &constraints {
            assert_eq!(&solved.mul_vec(d), t);
        }
    }
}

#[test]
fn cyclic_inverse_map_undoes_tau() {
    for k in nakayama_family(4, 5, 0, 0).unwrap() {
        let a = k.algebra();
        let phi = nakayama_tau_map(&k);
        let inv = invert_to_tau_inverse_map(&phi, a).unwrap();
        for info in k.enumerate_indecomposables() {
            if let Some(t) = k.translate(info.module, Direction::TauInverse).unwrap() {
                assert_eq!(
                    inv.mul_vec(&k.dim_vector(info.module).unwrap()),
                    k.dim_vector(t).unwrap()
                );
            }
        }
    }
}

#[test]
fn extra_projective_columns_are_free() {
    // x picks the image of each projective simple; any choice is still a τ-map
    let k = taumap::KupischSeries::linear(&[3, 2, 1]).unwrap();
    let mut x = BTreeMap::new();
    x.insert(2, vec![5, -1, 7]);
    let phi = taumap::k0::build_nakayama_tau_map(&k, &x).unwrap();
    let modules: Vec<Representation> = k
        .enumerate_indecomposables()
        .iter()
        .map(|i| k.module(i.module).unwrap())
        .collect();
    assert!(is_tau_map_on(&phi, &modules).unwrap());
    assert_eq!(phi.column(2), vec![5, -1, 7]);
}
