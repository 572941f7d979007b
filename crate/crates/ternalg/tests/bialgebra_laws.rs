mod common;

use std::collections::BTreeSet;

use common::*;
use rand_chacha::ChaCha8Rng;
use ternalg::*;

fn all_fixtures() -> Vec<TernaryBialgebra> {
    vec![fixtures::pb2(), fixtures::tb2(), fixtures::eq1(), fixtures::eq2()]
}

/// Random bialgebras of dimension ≤ 2: plain random, with one side trivial,
/// or a random change of basis of a fixture.
fn sample(r: &mut ChaCha8Rng) -> TernaryBialgebra {
    let n = dim(r, 2);
    match pick(r, &[0, 1, 2, 3]) {
        0 => bialgebra(r, n),
        1 => {
            let a = algebra(r, n);
            let c = TernaryCoalgebra::new(Tensor4::cube(n, D), a.alpha1().clone(), a.alpha2().clone());
            TernaryBialgebra::new(a, c.unwrap()).unwrap()
        }
        2 => {
            let c = coalgebra(r, n);
            let a = TernaryAlgebra::new(Tensor4::cube(n, D), c.alpha1().clone(), c.alpha2().clone());
            TernaryBialgebra::new(a.unwrap(), c).unwrap()
        }
        _ => {
            let b = pick(r, &all_fixtures());
            let b = sign_variant(&b, gen_bool(r, 0.5), gen_bool(r, 0.5));
            transport(&b, &invertible(r, 2))
        }
    }
}

fn clause_classes(report: &LawReport) -> BTreeSet<String> {
    report
        .failing_laws()
        .iter()
        .map(|l| l.split('.').next().unwrap().to_string())
        .collect()
}

#[test]
fn duals_keep_the_verdict() {
    let mut r = rng(51);
    let mut cases = all_fixtures();
    cases.extend((0..50).map(|_| sample(&mut r)));
    let mut passes = 0;
    for b in &cases {
        let dual = dualize_bialgebra(b);
        for mode in AssocMode::ALL {
            let primal = check_bialgebra(b, mode).passed();
            assert_eq!(check_bialgebra(&dual, mode).passed(), primal, "{mode:?} {b:?}");
            passes += primal as usize;
        }
        assert_eq!(check_compatibility(&dual).passed(), check_compatibility(b).passed());
    }
    assert!(passes > 10, "{passes}");
}

#[test]
fn sign_variants_share_the_verdict() {
    let mut r = rng(52);
    let mut cases: Vec<(TernaryBialgebra, AssocMode)> =
        vec![(fixtures::pb2(), AssocMode::Partial), (fixtures::eq2(), AssocMode::Partial)];
    cases.push((fixtures::tb2(), AssocMode::Total));
    for _ in 0..60 {
        let b = sample(&mut r);
        let mode = pick(&mut r, &AssocMode::ALL);
        cases.push((b, mode));
    }
    for (b, mode) in cases {
        let base = check_bialgebra(&b, mode);
        for (fm, fd) in [(false, false), (true, false), (false, true), (true, true)] {
            let v = check_bialgebra(&sign_variant(&b, fm, fd), mode);
            assert_eq!(v.passed(), base.passed());
            assert_eq!(clause_classes(&v), clause_classes(&base));
        }
    }
    let tb2 = check_bialgebra(&fixtures::tb2(), AssocMode::Total);
    assert_eq!(clause_classes(&tb2), BTreeSet::from(["compat".to_string()]));
}

#[test]
fn trivial_products_and_coproducts_are_compatible() {
    let mut r = rng(53);
    for _ in 0..60 {
        let n = dim(&mut r, 3);
        let a = algebra(&mut r, n);
        let zero_c = TernaryCoalgebra::new(Tensor4::cube(n, D), a.alpha1().clone(), a.alpha2().clone());
        assert!(check_compatibility(&TernaryBialgebra::new(a, zero_c.unwrap()).unwrap()).passed());
        let c = coalgebra(&mut r, n);
        let zero_a = TernaryAlgebra::new(Tensor4::cube(n, D), c.alpha1().clone(), c.alpha2().clone());
        assert!(check_compatibility(&TernaryBialgebra::new(zero_a.unwrap(), c).unwrap()).passed());
    }
}

#[test]
fn equivalences_transport_verdicts() {
    let mut r = rng(54);
    for _ in 0..40 {
        let b1 = sample(&mut r);
        let f = invertible(&mut r, b1.dim());
        let b2 = transport(&b1, &f);
        assert!(check_bialgebra_equivalence(&f, &b1, &b2).unwrap().passed());
        for mode in AssocMode::ALL {
            assert_eq!(check_bialgebra(&b1, mode).passed(), check_bialgebra(&b2, mode).passed());
        }
    }
    let singular = Matrix::from_int_rows(&[&[1, 1], &[1, 1]], D);
    let b = fixtures::pb2();
    let r = check_bialgebra_equivalence(&singular, &b, &b).unwrap();
    assert!(r.violations_of("equivalence.invertible").next().is_some());
}

#[test]
fn sigma_form_agrees_with_element_form() {
    let mut r = rng(55);
    let mut passes = 0;
    for _ in 0..150 {
        let b = sample(&mut r);
        let element = check_compatibility(&b);
        let sigma = check_compatibility_sigma_form(&b);
        assert_eq!(sigma.passed(), element.passed());
        assert_eq!(sigma.violations.len(), element.violations.len());
        passes += element.passed() as usize;
    }
    assert!(passes > 30 && passes < 150, "{passes}");
}

/// Only the reading that flips slots (1,2) and (4,5) reproduces the element
/// form residual at every triple.
#[test]
fn sigma_slot_reading() {
    let mut r = rng(56);
    let cases: Vec<TernaryBialgebra> = (0..40).map(|_| sample(&mut r)).collect();
    let readings = [
        [(0, 1), (3, 4)],
        [(0, 1), (2, 3)],
        [(1, 2), (3, 4)],
        [(1, 2), (2, 3)],
    ];
    let agreeing: Vec<_> = readings
        .iter()
        .filter(|flips| {
            cases.iter().all(|b| {
                let sigma = check_compatibility_sigma_form_with(b, &flips[..]);
                let element = check_compatibility(b);
                let key = |r: &LawReport| -> Vec<_> {
                    r.violations.iter().map(|v| (v.indices.clone(), v.residual.to_string())).collect()
                };
                key(&sigma) == key(&element)
            })
        })
        .collect();
    assert_eq!(agreeing, vec![&[(0, 1), (3, 4)]]);
}

#[test]
fn displayed_identity_agreement_rate() {
    let mut r = rng(57);
    let mut agree = 0;
    let total = 40;
    for _ in 0..total {
        let b = sample(&mut r);
        let literal = compatibility_identity_check(&b).passed();
        agree += (literal == check_compatibility(&b).passed()) as usize;
    }
    eprintln!("displayed compatibility identity agrees with the element form on {agree}/{total}");
    for mode in AssocMode::ALL {
        let zero = TernaryCoalgebra::zero(2, D);
        let a = TernaryAlgebra::new(fixtures::t2h1().mu().clone(), zero.alpha1().clone(), zero.alpha2().clone());
        let b = TernaryBialgebra::new(a.unwrap(), zero).unwrap();
        assert!(compatibility_identity_check(&b).passed(), "{mode:?}");
    }
    assert!(compatibility_identity_check(&fixtures::pb2()).passed());
}
