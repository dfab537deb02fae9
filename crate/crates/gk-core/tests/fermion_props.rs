//! Exhaustive CAR and Clifford-generator suites for the tensor-product
//! representation, plus the rep_map homomorphism on random elements.

use gk_core::{
    build_clifford_generators, build_fermion_rep, car_check, rep_map, CliffordElement, Complex64,
    DenseMatrix, Multivector, Signature,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn car_relations_hold_exactly_up_to_six_modes() {
    for modes in 1..=6 {
        let rep = build_fermion_rep(modes).unwrap();
        let report = car_check(&rep);
        assert_eq!(report.theta_theta, 0.0, "N = {modes}");
        assert_eq!(report.del_del, 0.0, "N = {modes}");
        assert_eq!(report.del_theta, 0.0, "N = {modes}");
    }
}

#[test]
fn generators_are_nilpotent_exactly() {
    for modes in 1..=6 {
        let rep = build_fermion_rep(modes).unwrap();
        for m in rep.theta.iter().chain(&rep.del) {
            assert_eq!(m.matmul(m).unwrap().max_abs(), 0.0, "N = {modes}");
        }
    }
}

#[test]
fn euclidean_generators_anticommute_exactly() {
    for modes in 1..=5 {
        let rep = build_fermion_rep(modes).unwrap();
        let sig = Signature::euclidean(2 * modes).unwrap();
        let gens = build_clifford_generators(&rep, sig).unwrap();
        let dim = rep.dim();
        let two_id = DenseMatrix::identity(dim).scale(Complex64::new(2.0, 0.0));
        for (a, ga) in gens.iter().enumerate() {
            for (b, gb) in gens.iter().enumerate() {
                let anti = ga.anticommutator(gb).unwrap();
                if a == b {
                    assert_eq!(anti, two_id, "N = {modes}, pair ({a},{b})");
                } else {
                    assert_eq!(anti.max_abs(), 0.0, "N = {modes}, pair ({a},{b})");
                }
            }
        }
    }
}

fn random_element(sig: Signature, rng: &mut StdRng) -> CliffordElement {
    let n = sig.n();
    let terms = (0..5).map(|_| {
        let mask = rng.gen_range(0..1u32 << n);
        let c = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        (mask, c)
    });
    CliffordElement::from_multivector(sig, Multivector::from_terms(n, terms).unwrap()).unwrap()
}

#[test]
fn rep_map_is_an_algebra_homomorphism() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    for modes in 1..=3usize {
        let rep = build_fermion_rep(modes).unwrap();
        let sig = Signature::euclidean(2 * modes).unwrap();
        let gens = build_clifford_generators(&rep, sig).unwrap();
        for _ in 0..100 {
            let a = random_element(sig, &mut rng);
            let b = random_element(sig, &mut rng);
            let product_image = rep_map(&a.geometric_product(&b).unwrap(), &gens).unwrap();
            let image_product = rep_map(&a, &gens)
                .unwrap()
                .matmul(&rep_map(&b, &gens).unwrap())
                .unwrap();
            let residual = product_image.max_abs_diff(&image_product).unwrap();
            assert!(residual < 1e-9, "N = {modes}, residual = {residual:e}");

            let sum_image = rep_map(&a.add(&b).unwrap(), &gens).unwrap();
            let image_sum = rep_map(&a, &gens)
                .unwrap()
                .add(&rep_map(&b, &gens).unwrap())
                .unwrap();
            assert!(sum_image.max_abs_diff(&image_sum).unwrap() < 1e-12);
        }
    }
}
