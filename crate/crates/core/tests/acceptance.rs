//! Acceptance gate: one test per criterion, each printing a PASS/FAIL line.
//! Everything is exact arithmetic; there are no tolerances to tune.

use hauscat::doctrine::{build_subcategory, doctrine_laws, extend_to_dist, saturation_check};
use hauscat::error::Error;
use hauscat::fixtures;
use hauscat::hausdorff::{
    self, conical_from_subset, directed_hausdorff, hausdorff_category, hausdorff_on_dist,
    hausdorff_on_functor, is_cauchy, is_conical, weight_class_all, weight_class_conical,
    weight_class_representable, SubsetWeight,
};
use hauscat::laws;
use hauscat::presheaf::{
    colim, enumerate_presheaves, kan_extension, presheaf_hom, Presheaf, PresheafCat,
};
use hauscat::qcat::{self, Distributor, QCategory, QFunctor};
use hauscat::quantaloid::{Quantaloid, Value};
use hauscat::rational::ExtRational;
use hauscat::report::LawStatus;
use std::sync::Arc;

fn ext(s: &str) -> Value {
    Value::Ext(s.parse::<ExtRational>().unwrap())
}

fn announce(criterion: &str, ok: bool) {
    println!("acceptance {criterion}: {}", if ok { "PASS" } else { "FAIL" });
}

fn line_fixture() -> Arc<QCategory> {
    let q = Arc::new(Quantaloid::lawvere());
    Arc::new(
        QCategory::new(
            q,
            vec!["0".into(), "1".into(), "4".into()],
            vec![0, 0, 0],
            vec![
                vec![ext("0"), ext("1"), ext("4")],
                vec![ext("1"), ext("0"), ext("3")],
                vec![ext("4"), ext("3"), ext("0")],
            ],
        )
        .unwrap(),
    )
}

fn two_point_metric() -> Arc<QCategory> {
    let q = Arc::new(Quantaloid::lawvere());
    Arc::new(
        QCategory::new(
            q,
            vec!["p".into(), "q".into()],
            vec![0, 0],
            vec![vec![ext("0"), ext("1")], vec![ext("1"), ext("0")]],
        )
        .unwrap(),
    )
}

/// Every preorder with at most `n` elements.
fn preorders_up_to(n: usize) -> Vec<Arc<QCategory>> {
    (1..=n).flat_map(fixtures::all_preorders).collect()
}

#[test]
fn criterion_1_residuation_suite() {
    let mut quantaloids = fixtures::builtin_quantaloids();
    let mut r = fixtures::rng(0xC1);
    for tag in 0..5 {
        quantaloids.push(fixtures::random_table_quantaloid(&mut r, tag));
    }
    assert!(quantaloids.len() >= 9);
    for q in &quantaloids {
        assert!(q.validate().is_empty(), "{} fails quantaloid axioms", q.name());
        assert_eq!(laws::galois_lifting(q).unwrap(), None, "{}", q.name());
        assert_eq!(laws::galois_extension(q).unwrap(), None, "{}", q.name());
        assert_eq!(laws::lemma1(q).unwrap(), None, "{}", q.name());
        assert_eq!(laws::lemma2(q).unwrap(), None, "{}", q.name());
        assert_eq!(laws::lemma3(q).unwrap(), None, "{}", q.name());
    }
    let mut r = fixtures::rng(0xC1A);
    assert_eq!(laws::lawvere_galois(&mut r, 512).unwrap(), None);
    announce("criterion 1 (residuation and lemmas 1-3)", true);
}

#[test]
fn criterion_2_yoneda_and_classification() {
    // exhaustive Yoneda on enumerable fixtures with up to four objects
    let mut r = fixtures::rng(0xC2);
    let mut fixtures_list: Vec<Arc<QCategory>> = preorders_up_to(3);
    for q in fixtures::builtin_quantaloids() {
        for _ in 0..3 {
            fixtures_list.push(fixtures::random_category(&mut r, &q, 4).unwrap());
        }
    }
    for cat in &fixtures_list {
        for phi in enumerate_presheaves(cat, 20_000).unwrap() {
            for a in 0..cat.len() {
                if cat.type_of(a) != phi.q_type() {
                    continue;
                }
                let repr = Presheaf::representable(cat.clone(), a);
                assert_eq!(
                    presheaf_hom(&repr, &phi).unwrap(),
                    *phi.value(a),
                    "Yoneda fails at {} / {}",
                    cat.object_id(a),
                    phi.canonical_key()
                );
            }
        }
    }
    // 200 seeded spot checks over the Lawvere quantale
    for _ in 0..200 {
        let space = fixtures::random_metric_space(&mut r, 6).unwrap();
        let phi = fixtures::random_presheaf(&mut r, &space).unwrap();
        for a in 0..space.len() {
            let repr = Presheaf::representable(space.clone(), a);
            assert_eq!(presheaf_hom(&repr, &phi).unwrap(), *phi.value(a));
        }
    }
    // 100 seeded classification round-trips
    for k in 0..100 {
        let base = fixtures::random_preorder(&mut r, 3).unwrap();
        let other = fixtures::random_preorder(&mut r, 3).unwrap();
        let pcat = PresheafCat::full(base.clone(), 20_000).unwrap();
        let phi = fixtures::random_distributor(&mut r, &other, &base).unwrap();
        let classified = pcat.classify(&phi).unwrap();
        assert_eq!(pcat.declassify(&classified).unwrap(), phi, "case {k}");
        assert_eq!(pcat.classify(&pcat.declassify(&classified).unwrap()).unwrap(), classified);
    }
    announce("criterion 2 (yoneda and classification)", true);
}

#[test]
fn criterion_3_colimit_universal_property_and_kan() {
    let mut r = fixtures::rng(0xC3);
    let mut returns = 0;
    for case in 0..100 {
        let a = fixtures::random_preorder(&mut r, 3).unwrap();
        let b = fixtures::random_preorder(&mut r, 3).unwrap();
        let c = fixtures::random_preorder(&mut r, 3).unwrap();
        let Some(f) = fixtures::random_functor(&mut r, &b, &c, 16) else { continue };
        let phi = fixtures::random_distributor(&mut r, &a, &b).unwrap();
        if let Ok(k) = colim(&phi, &f) {
            returns += 1;
            assert_eq!(
                k.induced_right(),
                Distributor::lifting(&phi, &f.induced_right()).unwrap(),
                "case {case}: universal property not exact"
            );
        }
        // Kan extension against the exhaustive least-functor search
        let Some(g) = fixtures::random_functor(&mut r, &b, &a, 16) else { continue };
        let above: Vec<QFunctor> = laws::all_functors(&a, &c)
            .unwrap()
            .into_iter()
            .filter(|h| {
                h.compose(&g)
                    .and_then(|hg| qcat::functor_leq(&f, &hg))
                    .unwrap_or(false)
            })
            .collect();
        match kan_extension(&f, &g) {
            Ok(kan) => {
                assert!(qcat::functor_leq(&f, &kan.compose(&g).unwrap()).unwrap(), "case {case}");
                for h in &above {
                    assert!(qcat::functor_leq(&kan, h).unwrap(), "case {case}: kan not least");
                }
            }
            Err(Error::NotCocomplete { .. }) => {
                let target = Distributor::lifting(&g.induced_right(), &f.induced_right()).unwrap();
                assert!(
                    above.iter().all(|h| h.induced_right() != target),
                    "case {case}: search found a pointwise extension but colim failed"
                );
            }
            Err(e) => panic!("case {case}: {e}"),
        }
    }
    assert!(returns >= 20, "too few existing colimits sampled: {returns}");
    announce("criterion 3 (colimit universal property and kan)", true);
}

#[test]
fn criterion_4_free_doctrine_laws() {
    for (i, cat) in preorders_up_to(2).iter().enumerate() {
        let entries = doctrine_laws(&weight_class_all(), cat, &format!("preorder{i}"), 20_000).unwrap();
        for e in &entries {
            assert_eq!(e.status, LawStatus::Pass, "{e:?}");
        }
        // monad laws for some chain-quantale categories as well
        let q = Arc::new(Quantaloid::chain(3));
        let mut r = fixtures::rng(0xC4 + i as u64);
        let ccat = fixtures::random_category(&mut r, &q, 2).unwrap();
        let entries = doctrine_laws(&weight_class_all(), &ccat, "chain-cat", 20_000).unwrap();
        for e in &entries {
            assert_eq!(e.status, LawStatus::Pass, "{e:?}");
        }
    }
    announce("criterion 4 (free cocompletion monad and KZ laws)", true);
}

#[test]
fn criterion_5_conical_machinery() {
    // agreement with brute force on every presheaf of every small preorder
    for cat in preorders_up_to(4) {
        for phi in enumerate_presheaves(&cat, 20_000).unwrap() {
            assert_eq!(
                is_conical(&phi).unwrap(),
                laws::conical_by_brute_force(&phi).unwrap(),
                "disagreement at {}",
                phi.canonical_key()
            );
        }
    }
    // the rational negative on the symmetric two-point space
    let cat = two_point_metric();
    let half = Presheaf::new(cat.clone(), 0, vec![ext("1/2"), ext("1/2")]).unwrap();
    assert!(half.validate().is_empty());
    assert!(!is_conical(&half).unwrap());
    for a in 0..2 {
        assert!(is_conical(&Presheaf::representable(cat.clone(), a)).unwrap());
    }
    // saturation of the conical class at budget 500
    let entries = saturation_check(&weight_class_conical(), 500, 500).unwrap();
    for e in &entries {
        assert_eq!(e.status, LawStatus::Pass, "{e:?}");
    }
    announce("criterion 5 (conical membership and saturation)", true);
}

#[test]
fn criterion_6_hausdorff_closed_form() {
    // three-way equality on at least 10 seeded spaces and all tiny preorders
    let mut r = fixtures::rng(0xC6);
    let mut bases: Vec<Arc<QCategory>> = Vec::new();
    for _ in 0..10 {
        bases.push(fixtures::random_metric_space(&mut r, 6).unwrap());
    }
    bases.extend(preorders_up_to(4));
    for base in &bases {
        let h = hausdorff_category(base).unwrap();
        let slice = build_subcategory(&weight_class_conical(), base).unwrap();
        assert_eq!(slice.pcat.cat(), h.cat());
        let closed = hausdorff_on_dist(&Distributor::identity(base.clone()), &h, &h).unwrap();
        let extended = extend_to_dist(&Distributor::identity(base.clone()), &slice, &slice).unwrap();
        for t in 0..h.pcat().len() {
            for s in 0..h.pcat().len() {
                let hom = h.cat().hom_value(t, s);
                assert_eq!(hom, closed.value(t, s), "closed form differs");
                assert_eq!(hom, extended.value(t, s), "extension differs");
            }
        }
    }
    // the line fixture distances, exactly
    let line = line_fixture();
    let s01 = SubsetWeight::from_ids(line.clone(), 0, &["0", "1"]).unwrap();
    let s4 = SubsetWeight::from_ids(line.clone(), 0, &["4"]).unwrap();
    assert_eq!(directed_hausdorff(&s01, &s4).unwrap(), ext("4"));
    assert_eq!(directed_hausdorff(&s4, &s01).unwrap(), ext("3"));
    // singleton distances and self-distance on metric fixtures
    for base in bases.iter().filter(|b| !b.quantaloid().enumerable()) {
        let n = base.len();
        for x in 0..n {
            for y in 0..n {
                let sx = SubsetWeight::new(base.clone(), 0, vec![x]).unwrap();
                let sy = SubsetWeight::new(base.clone(), 0, vec![y]).unwrap();
                assert_eq!(directed_hausdorff(&sx, &sy).unwrap(), *base.hom_value(x, y));
            }
        }
        let all = SubsetWeight::new(base.clone(), 0, (0..n).collect()).unwrap();
        assert_eq!(directed_hausdorff(&all, &all).unwrap(), ext("0"));
    }
    announce("criterion 6 (hausdorff closed form and distances)", true);
}

#[test]
fn criterion_7a_hausdorff_monad_laws() {
    for (i, cat) in preorders_up_to(2).iter().enumerate() {
        let entries = doctrine_laws(&weight_class_conical(), cat, &format!("preorder{i}"), 20_000).unwrap();
        for e in &entries {
            assert_eq!(e.status, LawStatus::Pass, "{e:?}");
        }
    }
    announce("criterion 7a (hausdorff monad and KZ laws)", true);
}

#[test]
fn criterion_7b_extension_normality_laxity_and_joins() {
    let mut r = fixtures::rng(0xC7);
    let mut join_failures: Vec<String> = Vec::new();
    for case in 0..200 {
        let a = fixtures::random_preorder(&mut r, 3).unwrap();
        let b = fixtures::random_preorder(&mut r, 3).unwrap();
        let c = fixtures::random_preorder(&mut r, 2).unwrap();
        let ha = hausdorff_category(&a).unwrap();
        let hb = hausdorff_category(&b).unwrap();
        let hc = hausdorff_category(&c).unwrap();
        // normality
        let ext_id = hausdorff_on_dist(&Distributor::identity(a.clone()), &ha, &ha).unwrap();
        assert_eq!(
            ext_id,
            Distributor::identity(ha.cat().clone()),
            "case {case}: normality fails"
        );
        // laxity
        let phi = fixtures::random_distributor(&mut r, &a, &b).unwrap();
        let psi = fixtures::random_distributor(&mut r, &b, &c).unwrap();
        let h_phi = hausdorff_on_dist(&phi, &ha, &hb).unwrap();
        let h_psi = hausdorff_on_dist(&psi, &hb, &hc).unwrap();
        let h_comp = hausdorff_on_dist(&Distributor::compose(&psi, &phi).unwrap(), &ha, &hc).unwrap();
        assert!(
            Distributor::compose(&h_psi, &h_phi).unwrap().leq(&h_comp).unwrap(),
            "case {case}: laxity fails"
        );
        // join preservation, as stated: exact equality
        let phi2 = fixtures::random_distributor(&mut r, &a, &b).unwrap();
        let joined = Distributor::join(a.clone(), b.clone(), &[&phi, &phi2]).unwrap();
        let lhs = hausdorff_on_dist(&joined, &ha, &hb).unwrap();
        let rhs = Distributor::join(
            ha.cat().clone(),
            hb.cat().clone(),
            &[&h_phi, &hausdorff_on_dist(&phi2, &ha, &hb).unwrap()],
        )
        .unwrap();
        assert!(rhs.leq(&lhs).unwrap(), "case {case}: even lax join preservation fails");
        if lhs != rhs {
            join_failures.push(format!("case {case}"));
        }
    }
    let ok = join_failures.is_empty();
    announce("criterion 7b (H' normality, laxity, join preservation)", ok);
    assert!(
        ok,
        "exact join preservation of H' is refuted on {} of 200 seeded fixtures \
         (e.g. {}); the property is mathematically false in general - see the \
         pinned counterexample test `join_preservation_of_the_extension_is_refutable` \
         and the decisions ledger. Normality and laxity passed on all 200.",
        join_failures.len(),
        join_failures.first().unwrap()
    );
}

#[test]
fn criterion_7c_extension_square_on_functors() {
    let mut r = fixtures::rng(0xC7C);
    let mut checked = 0;
    while checked < 100 {
        let a = fixtures::random_preorder(&mut r, 3).unwrap();
        let b = fixtures::random_preorder(&mut r, 3).unwrap();
        let Some(f) = fixtures::random_functor(&mut r, &a, &b, 16) else { continue };
        let ha = hausdorff_category(&a).unwrap();
        let hb = hausdorff_category(&b).unwrap();
        let h_f = hausdorff_on_functor(&f, &ha, &hb).unwrap();
        let lhs = extend_to_dist(&f.induced_left(), &ha.slice, &hb.slice).unwrap();
        assert_eq!(lhs, h_f.induced_left(), "square fails at case {checked}");
        checked += 1;
    }
    announce("criterion 7c (extension of induced distributors)", true);
}

#[test]
fn criterion_8_cauchy() {
    // agreement with exhaustive right-adjoint search
    for cat in preorders_up_to(3) {
        for phi in enumerate_presheaves(&cat, 20_000).unwrap() {
            assert_eq!(
                is_cauchy(&phi).unwrap(),
                laws::cauchy_by_brute_force(&phi).unwrap(),
                "disagreement at {}",
                phi.canonical_key()
            );
        }
    }
    // completion is an equivalence on 50 seeded preorders with <= 4 elements
    let mut r = fixtures::rng(0xC8);
    for case in 0..50 {
        let cat = fixtures::random_preorder(&mut r, 4).unwrap();
        let cc = hausdorff::cauchy_completion(&cat, 20_000).unwrap();
        assert!(qcat::is_equivalence(&cc.unit).unwrap(), "case {case}");
        for phi in enumerate_presheaves(&cat, 20_000).unwrap() {
            assert_eq!(
                is_cauchy(&phi).unwrap(),
                laws::cauchy_by_brute_force(&phi).unwrap(),
                "case {case} at {}",
                phi.canonical_key()
            );
        }
    }
    // the representable class gives an identity-like doctrine everywhere
    for cat in preorders_up_to(3) {
        let slice = build_subcategory(&weight_class_representable(), &cat).unwrap();
        assert!(qcat::is_equivalence(&slice.unit).unwrap());
    }
    announce("criterion 8 (cauchy presheaves and completion)", true);
}

/// Conical subsets behave like the paper's image formula under functors;
/// exercised here because criterion 7 relies on the action.
#[test]
fn functor_action_sanity() {
    let mut r = fixtures::rng(0xA11);
    for _ in 0..40 {
        let a = fixtures::random_preorder(&mut r, 3).unwrap();
        let b = fixtures::random_preorder(&mut r, 3).unwrap();
        let Some(f) = fixtures::random_functor(&mut r, &a, &b, 16) else { continue };
        let ha = hausdorff_category(&a).unwrap();
        let hb = hausdorff_category(&b).unwrap();
        let by_images = hausdorff_on_functor(&f, &ha, &hb).unwrap();
        let by_transport = ha.pcat().transport(&f.induced_left(), hb.pcat()).unwrap();
        assert_eq!(by_images, by_transport);
        // generator image really generates the image presheaf
        for (i, gens) in ha.generators.iter().enumerate() {
            let image: Vec<usize> = gens.iter().map(|&x| f.apply(x)).collect();
            let w = SubsetWeight::new(b.clone(), ha.cat().type_of(i), image).unwrap();
            let direct = conical_from_subset(&w).unwrap();
            assert_eq!(
                hb.pcat().member(by_images.apply(i)),
                &direct.underlying
            );
        }
    }
}
