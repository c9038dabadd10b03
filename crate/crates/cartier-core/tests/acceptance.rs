//! End-to-end acceptance suite.
//!
//! Each test exercises one headline guarantee of the library over seeded
//! random corpora and prints a `[PASS] criterion N: …` line on success (run
//! with `cargo test --test acceptance -- --nocapture` to see them).  Every
//! comparison is exact — rational arithmetic leaves no tolerance to hide in.

use std::sync::Arc;
use std::time::{Duration, Instant};

use cartier_core::cartier_ring::{
    check_cartier_ring_relations, check_t13_presentations, check_t14_presentations,
    check_tij_braid_relations, rep_beta, rep_beta_inv, rep_gamma, ModuleRep,
};
use cartier_core::families::{
    build_en, build_en_twisted, build_h2, en_algebra, rmatrix_power_closed_form, EnBasisIndex,
    EnSpec, H2Sign,
};
use cartier_core::precartier::{
    check_chi13_bialgebra, check_chi13_quasi, check_infinitesimal_braid, check_infinitesimal_qqybe,
    check_qybe, chi_braid_set, quantize, theta_set, twist_chi, upsilon_set, verify_cartier,
    verify_precartier, PreCartier, Scale,
};
use cartier_core::quasibialgebra::{gauge_twist, verify_quasibialgebra, verify_quasitriangular};
use cartier_core::scalar::{GaussRat, HPoly};
use cartier_core::tensor::TensorElement;
use cartier_core::FiniteAlgebra;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn int_matrix(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<GaussRat>> {
    (0..n)
        .map(|_| {
            (0..n)
                .map(|_| GaussRat::from_int(rng.gen_range(-3i64..=3)))
                .collect()
        })
        .collect()
}

fn random_spec(rng: &mut ChaCha8Rng, n: usize) -> EnSpec {
    let a = int_matrix(rng, n);
    let b = int_matrix(rng, n);
    EnSpec::new(n, a, b)
}

fn negated(m: &[Vec<GaussRat>]) -> Vec<Vec<GaussRat>> {
    m.iter().map(|row| row.iter().map(|c| -c).collect()).collect()
}

fn is_skew(m: &[Vec<GaussRat>]) -> bool {
    let n = m.len();
    (0..n).all(|i| (0..n).all(|j| (&m[i][j] + &m[j][i]).is_zero()))
}

fn flat(g_flag: bool, subset: &[usize], n: usize) -> u16 {
    EnBasisIndex {
        g_flag,
        subset: subset.to_vec(),
    }
    .flat(n)
}

/// `1 ⊗ g`: the gauge element whose twist produces the nontrivial family.
fn gauge_element(algebra: &Arc<FiniteAlgebra>, n: usize) -> TensorElement {
    TensorElement::basis(algebra.clone(), &[0, flat(true, &[], n)])
}

/// `Σ c_{kl} g x_k ⊗ x_l` over the `E(n)` basis.
fn pairing(algebra: &Arc<FiniteAlgebra>, n: usize, c: &[Vec<GaussRat>]) -> TensorElement {
    let mut out = TensorElement::zero(algebra.clone(), 2);
    for k in 1..=n {
        for l in 1..=n {
            if c[k - 1][l - 1].is_zero() {
                continue;
            }
            let term = TensorElement::basis(
                algebra.clone(),
                &[flat(true, &[k], n), flat(false, &[l], n)],
            );
            out = &out + &term.scale_gauss(&c[k - 1][l - 1]);
        }
    }
    out
}

#[test]
fn criterion_01_family_axioms_hold_on_random_parameters() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for n in [1usize, 2] {
        for _ in 0..20 {
            let spec = random_spec(&mut rng, n);
            let start = Instant::now();
            let p = build_en(&spec, 0);
            assert!(
                verify_quasibialgebra(p.base()).all_passed(),
                "quasi-bialgebra axioms failed for {spec:?}"
            );
            assert!(
                verify_quasitriangular(p.qt()).all_passed(),
                "quasitriangular axioms failed for {spec:?}"
            );
            assert!(
                verify_precartier(&p).all_passed(),
                "infinitesimal axioms failed for {spec:?}"
            );
            assert!(
                start.elapsed() < Duration::from_secs(10),
                "instance exceeded the 10 s budget"
            );
        }
    }
    println!(
        "[PASS] criterion 1: E(1) and E(2) pass all quasi-bialgebra, quasitriangular, and \
         infinitesimal axioms on 20 random integer parameter pairs each"
    );
}

#[test]
fn criterion_02_cartier_exactly_for_skew_symmetric_parameters() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    let mut skew_seen = 0;
    let mut non_skew_seen = 0;
    for trial in 0..20 {
        let a = int_matrix(&mut rng, 2);
        let b = if trial % 2 == 0 {
            // Random skew-symmetric matrix: free upper triangle, forced rest.
            let c = GaussRat::from_int(rng.gen_range(-3i64..=3));
            vec![
                vec![GaussRat::zero(), c.clone()],
                vec![-&c, GaussRat::zero()],
            ]
        } else {
            int_matrix(&mut rng, 2)
        };
        let skew = is_skew(&b);
        if skew {
            skew_seen += 1;
        } else {
            non_skew_seen += 1;
        }
        let p = build_en(&EnSpec::new(2, a, b.clone()), 0);
        assert_eq!(
            verify_cartier(&p),
            skew,
            "Cartier condition disagreed with skew-symmetry for b = {b:?}"
        );
    }
    assert!(skew_seen > 0 && non_skew_seen > 0, "corpus must exercise both outcomes");
    println!(
        "[PASS] criterion 2: the Cartier condition holds exactly when the infinitesimal \
         parameter matrix is skew-symmetric (20 random E(2) instances)"
    );
}

#[test]
fn criterion_03_twisted_family_matches_its_closed_forms() {
    let n = 2;
    let spec = EnSpec::new(
        n,
        vec![
            vec![GaussRat::from_int(1), GaussRat::from_int(-2)],
            vec![GaussRat::from_int(3), GaussRat::ratio(1, 2)],
        ],
        vec![
            vec![GaussRat::from_int(2), GaussRat::from_int(1)],
            vec![GaussRat::from_int(-1), GaussRat::from_int(3)],
        ],
    );
    let tp = build_en_twisted(&spec, 0);
    let algebra = tp.algebra().clone();
    let g = flat(true, &[], n);

    // Reassociator, left and right counit constraints.
    assert_eq!(
        tp.base().reassociator(),
        &TensorElement::basis(algebra.clone(), &[0, 0, g])
    );
    assert_eq!(tp.base().ell(), &TensorElement::basis(algebra.clone(), &[g]));
    assert_eq!(tp.base().r_elt(), &TensorElement::unit(algebra.clone(), 1));

    // Twisted coproduct on the generators.
    assert_eq!(
        tp.base().coproduct().image(g),
        &TensorElement::basis(algebra.clone(), &[g, g])
    );
    for i in 1..=n {
        let xi = flat(false, &[i], n);
        let expected = &TensorElement::basis(algebra.clone(), &[xi, 0])
            - &TensorElement::basis(algebra.clone(), &[g, xi]);
        assert_eq!(tp.base().coproduct().image(xi), &expected);
    }

    // Twisted R-matrix closed form.
    let signed_half_sum = (&(&(&TensorElement::unit(algebra.clone(), 2)
        - &TensorElement::basis(algebra.clone(), &[0, g]))
        - &TensorElement::basis(algebra.clone(), &[g, 0]))
        - &TensorElement::basis(algebra.clone(), &[g, g]))
        .scale_gauss(&GaussRat::ratio(-1, 2));
    let expected_r = &signed_half_sum * &pairing(&algebra, n, &negated(spec.a())).exp().unwrap();
    assert_eq!(tp.qt().rmatrix(), &expected_r);

    // Twisting the infinitesimal R-matrix negates its parameter matrix.
    let plain = build_en(&spec, 0);
    let f = gauge_element(plain.algebra(), n);
    let twisted = twist_chi(&plain, &f).unwrap();
    assert_eq!(twisted.chi(), &pairing(&algebra, n, &negated(spec.b())));

    // Every verifier passes on the twisted structure.
    for p in [&tp, &twisted] {
        assert!(verify_quasibialgebra(p.base()).all_passed());
        assert!(verify_quasitriangular(p.qt()).all_passed());
        assert!(verify_precartier(p).all_passed());
    }
    println!(
        "[PASS] criterion 3: the twisted E(2) member reproduces the closed forms for its \
         reassociator, counit constraints, coproduct, R-matrix, and twisted infinitesimal \
         R-matrix, and passes every verifier"
    );
}

#[test]
fn criterion_04_h2_verifies_with_closed_form_inverse() {
    for (sign, opposite) in [(H2Sign::Plus, H2Sign::Minus), (H2Sign::Minus, H2Sign::Plus)] {
        let qt = build_h2(sign, 0);
        assert!(verify_quasibialgebra(qt.base()).all_passed());
        assert!(verify_quasitriangular(&qt).all_passed());

        // R⁻¹ = 1⊗1 − (1 ∓ i) p₋⊗p₋, i.e. the opposite sign's coefficient.
        let algebra = qt.algebra().clone();
        let half = HPoly::constant(GaussRat::ratio(1, 2), 0);
        let p_minus = &TensorElement::single(algebra.clone(), &[0], half.clone())
            - &TensorElement::single(algebra.clone(), &[1], half);
        let expected_inv = &TensorElement::unit(algebra, 2)
            - &p_minus.outer(&p_minus).scale_gauss(&opposite.r_coefficient());
        assert_eq!(qt.rmatrix_inv(), &expected_inv);
    }
    println!(
        "[PASS] criterion 4: both H(2) structures pass the quasi-bialgebra and \
         quasitriangular axioms and invert to the closed form 1⊗1 − (1 ∓ i) p₋⊗p₋"
    );
}

fn corpus(seed: u64) -> Vec<EnSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..50).map(|k| random_spec(&mut rng, 1 + k % 2)).collect()
}

#[test]
fn criterion_05_conjugated_families_satisfy_the_braid_identities() {
    for spec in corpus(105) {
        let p = build_en(&spec, 0);
        assert!(
            check_chi13_bialgebra(&p).unwrap(),
            "leg-1,3 compatibility failed for {spec:?}"
        );
        assert!(check_infinitesimal_braid(&chi_braid_set(&p).unwrap()).all_passed());
        assert!(check_infinitesimal_braid(&theta_set(&p)).all_passed());
        assert!(check_infinitesimal_braid(&upsilon_set(&p)).all_passed());

        let tp = build_en_twisted(&spec, 0);
        assert!(
            check_chi13_quasi(&tp),
            "twisted leg-1,3 compatibility failed for {spec:?}"
        );
        assert!(check_infinitesimal_braid(&theta_set(&tp)).all_passed());
        assert!(check_infinitesimal_braid(&upsilon_set(&tp)).all_passed());
    }
    println!(
        "[PASS] criterion 5: leg-1,3 compatibility and the infinitesimal braid relations \
         for the conjugated families hold on 50 random E(1)/E(2) instances, twisted and \
         untwisted"
    );
}

#[test]
fn criterion_06_yang_baxter_identities_hold_on_the_same_corpus() {
    for spec in corpus(105) {
        let p = build_en(&spec, 0);
        assert!(check_qybe(p.qt()), "Yang–Baxter failed for {spec:?}");
        assert!(
            check_infinitesimal_qqybe(&p),
            "infinitesimal Yang–Baxter failed for {spec:?}"
        );

        let tp = build_en_twisted(&spec, 0);
        assert!(check_qybe(tp.qt()), "twisted Yang–Baxter failed for {spec:?}");
        assert!(
            check_infinitesimal_qqybe(&tp),
            "twisted infinitesimal Yang–Baxter failed for {spec:?}"
        );
    }
    println!(
        "[PASS] criterion 6: the quasi quantum Yang–Baxter equation and its infinitesimal \
         companion hold on the same 50-instance corpus, twisted and untwisted"
    );
}

#[test]
fn criterion_07_quantization_lifts_and_commutes_with_twisting() {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    for scale in [Scale::One, Scale::Half] {
        for order in [1usize, 2, 3] {
            for n in [1usize, 2] {
                let spec = random_spec(&mut rng, n);
                let p = build_en(&spec, order);
                let quantized = quantize(&p, scale, order).unwrap();
                assert!(
                    verify_quasitriangular(&quantized).all_passed(),
                    "quantized structure failed at scale {scale}, order {order}, {spec:?}"
                );

                // The first-order deformation direction is scale·χ exactly.
                let transition = p.qt().rmatrix_inv() * quantized.rmatrix();
                let h1 = transition.h_coefficient(1);
                let expected = p.chi().h_coefficient(0).scale_gauss(&scale.as_gauss());
                assert_eq!(h1, expected);
            }
        }
    }

    // Quantizing then twisting equals twisting then quantizing on E(2).
    for scale in [Scale::One, Scale::Half] {
        for order in [1usize, 2, 3] {
            let spec = random_spec(&mut rng, 2);
            let p = build_en(&spec, order);
            let f = gauge_element(p.algebra(), 2);
            let twist_then_quantize = quantize(&twist_chi(&p, &f).unwrap(), scale, order).unwrap();
            let quantize_then_twist = gauge_twist(&quantize(&p, scale, order).unwrap(), &f).unwrap();
            assert_eq!(twist_then_quantize, quantize_then_twist);
        }
    }
    println!(
        "[PASS] criterion 7: quantization at scales 1 and 1/2 passes the quasitriangular \
         axioms at truncation orders 1–3, deforms in the direction scale·χ, and commutes \
         with gauge twisting on E(2)"
    );
}

#[test]
fn criterion_08_closed_form_powers_match_direct_powering() {
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    for n in 1..=3usize {
        let algebra = en_algebra(n, 0);
        for _ in 0..20 {
            let a = int_matrix(&mut rng, n);
            let t = pairing(&algebra, n, &a);
            let mut direct = TensorElement::unit(algebra.clone(), 2);
            for k in 0..=n {
                assert_eq!(
                    rmatrix_power_closed_form(&a, k, 0),
                    direct,
                    "closed form disagreed at n = {n}, k = {k}, a = {a:?}"
                );
                direct = &direct * &t;
            }
            // Above the generator count everything vanishes.
            assert!(direct.is_zero());
            assert!(rmatrix_power_closed_form(&a, n + 1, 0).is_zero());
        }
    }
    println!(
        "[PASS] criterion 8: the determinant closed form for R-matrix exponent powers \
         matches direct tensor powering for k ≤ n ≤ 3 on 20 random matrices per size"
    );
}

#[test]
fn criterion_09_ring_relations_hold_in_regular_representations() {
    let mut rng = ChaCha8Rng::seed_from_u64(109);
    for _ in 0..10 {
        let spec = random_spec(&mut rng, 1);
        let p = build_en(&spec, 0);
        let module = ModuleRep::regular(p.algebra());
        assert!(
            check_cartier_ring_relations(&p, &module, 3).unwrap().all_passed(),
            "three-strand relations failed for {spec:?}"
        );
        let start = Instant::now();
        assert!(
            check_cartier_ring_relations(&p, &module, 4).unwrap().all_passed(),
            "four-strand relations failed for {spec:?}"
        );
        assert!(
            start.elapsed() < Duration::from_secs(60),
            "four-strand check exceeded the 60 s budget"
        );
    }

    // Corrupting γ with a group-like term must break the mixed relation.
    let p = build_en(&random_spec(&mut rng, 1), 0);
    let g = flat(true, &[], 1);
    let corrupted = PreCartier::new(
        p.qt().clone(),
        &p.chi().clone() + &TensorElement::basis(p.algebra().clone(), &[g, g]),
    )
    .unwrap();
    let module = ModuleRep::regular(corrupted.algebra());
    let report = check_cartier_ring_relations(&corrupted, &module, 3).unwrap();
    assert!(report.failed_tags().contains(&"mixed"));
    println!(
        "[PASS] criterion 9: the braid, distant-commutation, and mixed relations hold on \
         3 and 4 strands of the E(1) regular module for 10 random parameter pairs, and a \
         corrupted infinitesimal generator fails the mixed relation"
    );
}

#[test]
fn criterion_10_transported_operators_agree_and_satisfy_their_relations() {
    let spec1 = EnSpec::new(
        1,
        vec![vec![GaussRat::from_int(2)]],
        vec![vec![GaussRat::from_int(-3)]],
    );
    let spec2 = EnSpec::new(
        2,
        vec![
            vec![GaussRat::from_int(1), GaussRat::from_int(-1)],
            vec![GaussRat::from_int(2), GaussRat::from_int(1)],
        ],
        vec![
            vec![GaussRat::from_int(1), GaussRat::from_int(2)],
            vec![GaussRat::from_int(-2), GaussRat::from_int(1)],
        ],
    );
    for spec in [&spec1, &spec2] {
        let p = build_en(spec, 0);
        let module = ModuleRep::regular(p.algebra());
        assert!(check_t13_presentations(&p, &module).unwrap().all_passed());
        assert!(check_t14_presentations(&p, &module).unwrap().all_passed());
        assert!(check_tij_braid_relations(&p, &module).unwrap().all_passed());
    }

    // Negative control: skipping the braiding conjugation and letting χ act
    // on legs 1,3 directly yields a different operator.
    let p = build_en(&spec2, 0);
    let module = ModuleRep::regular(p.algebra());
    let s23 = rep_beta(&p, &module, 2, 3).unwrap();
    let s23_inv = rep_beta_inv(&p, &module, 2, 3).unwrap();
    let t12 = rep_gamma(&p, &module, 1, 3).unwrap();
    let conjugated = &s23_inv * &(&t12 * &s23);
    let naive = module.act(p.chi(), &[1, 3], 3).unwrap();
    assert_ne!(conjugated, naive);
    println!(
        "[PASS] criterion 10: the leg-1,3 and leg-1,4 operator presentations agree and \
         the transported operators satisfy the infinitesimal braid relations on the E(1) \
         and E(2) regular modules; the unconjugated placement is rejected"
    );
}
