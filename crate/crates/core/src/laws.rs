//! Law suites: seeded, budgeted property runs over the whole kernel.
//! Every suite is a pure function of (suite, budget, seed) and reports one
//! entry per checked law instance family.

use crate::doctrine::{self, build_subcategory, dist_in_class, extend_to_dist, factor_through};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::hausdorff::{
    self, canonical_generators, conical_certificate, conical_colimit_two_ways, directed_hausdorff,
    hausdorff_category, hausdorff_on_dist, hausdorff_on_functor, is_cauchy, is_conical,
    SubsetWeight,
};
use crate::lattice::SupLattice;
use crate::presheaf::{
    colim, enumerate_presheaves, kan_extension, presheaf_hom, Presheaf, PresheafCat,
};
use crate::qcat::{self, Distributor, QCategory, QFunctor};
use crate::quantaloid::{Arrow, Quantaloid, Value};
use crate::report::{LawEntry, LawReport};
use rand::seq::IndexedRandom;
use rand::Rng as _;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

pub const SUITES: [&str; 6] = ["lattice", "quantaloid", "dist", "presheaf", "doctrine", "hausdorff"];

/// Runs one suite (or `all`) and returns the sorted report.
pub fn run_suite(suite: &str, budget: usize, seed: u64) -> Result<LawReport> {
    let mut report = LawReport::new(suite, seed, budget);
    match suite {
        "lattice" => suite_lattice(&mut report, budget, seed)?,
        "quantaloid" => suite_quantaloid(&mut report, budget, seed)?,
        "dist" => suite_dist(&mut report, budget, seed)?,
        "presheaf" => suite_presheaf(&mut report, budget, seed)?,
        "doctrine" => suite_doctrine(&mut report, budget, seed)?,
        "hausdorff" => suite_hausdorff(&mut report, budget, seed)?,
        "all" => {
            for s in SUITES {
                let sub = run_suite(s, budget, seed)?;
                report.extend(sub.entries.into_iter().map(|mut e| {
                    e.fixture = format!("{s}:{}", e.fixture);
                    e
                }));
            }
        }
        other => return Err(Error::parse(format!("unknown suite {other:?}"))),
    }
    Ok(report.finish())
}

fn lattice_fixtures() -> Vec<(String, SupLattice)> {
    let mut out = Vec::new();
    for n in 1..=5 {
        out.push((format!("chain{n}"), SupLattice::chain((0..n).map(|i| i.to_string()).collect())));
    }
    out.push((
        "diamond".into(),
        SupLattice::from_pairs(
            vec!["bot".into(), "x".into(), "y".into(), "top".into()],
            &[
                ("bot".into(), "x".into()),
                ("bot".into(), "y".into()),
                ("x".into(), "top".into()),
                ("y".into(), "top".into()),
            ],
        )
        .unwrap(),
    ));
    // powerset of a 3-element set, ordered by inclusion
    let ids: Vec<String> = (0..8u32).map(|m| format!("s{m}")).collect();
    let leq = (0..8).map(|a| (0..8).map(|b| a & b == a).collect()).collect();
    out.push(("powerset3".into(), SupLattice::from_relation(ids, leq).unwrap()));
    out
}

fn suite_lattice(report: &mut LawReport, budget: usize, seed: u64) -> Result<()> {
    let mut r = fixtures::rng(seed);
    for (name, lat) in lattice_fixtures() {
        report.push(LawEntry::check("lattice-axioms", &name, lat.validate().is_empty(), || {
            format!("{:?}", lat.validate())
        }));
        let n = lat.len();
        let samples = (budget / 6).clamp(8, 64);
        let mut bad = None;
        for _ in 0..samples {
            let size = r.random_range(0..=n);
            let subset: Vec<usize> = (0..size).map(|_| r.random_range(0..n)).collect();
            let j = lat.join(&subset)?;
            if !subset.iter().all(|&s| lat.leq(s, j)) {
                bad = Some(format!("join {:?} not an upper bound", subset));
                break;
            }
            if let Some(u) = (0..n).find(|&u| subset.iter().all(|&s| lat.leq(s, u)) && !lat.leq(j, u)) {
                bad = Some(format!("join {subset:?} not least: beaten by #{u}"));
                break;
            }
            let m = lat.meet(&subset)?;
            if !subset.iter().all(|&s| lat.leq(m, s)) {
                bad = Some(format!("meet {:?} not a lower bound", subset));
                break;
            }
            if let Some(l) = (0..n).find(|&l| subset.iter().all(|&s| lat.leq(l, s)) && !lat.leq(l, m)) {
                bad = Some(format!("meet {subset:?} not greatest: beaten by #{l}"));
                break;
            }
            // idempotent, commutative, associative as set operations
            let mut doubled = subset.clone();
            doubled.extend(subset.iter().rev());
            if lat.join(&doubled)? != j || lat.meet(&doubled)? != m {
                bad = Some(format!("join/meet of {subset:?} not invariant under duplication"));
                break;
            }
            let mid = subset.len() / 2;
            let split = lat.join(&[lat.join(&subset[..mid])?, lat.join(&subset[mid..])?])?;
            if split != j {
                bad = Some(format!("join of {subset:?} not associative"));
                break;
            }
        }
        report.push(LawEntry::check("join-meet-universal", &name, bad.is_none(), || bad.clone().unwrap()));
    }
    Ok(())
}

pub fn quantaloid_fixtures(seed: u64, random_count: usize) -> Vec<Arc<Quantaloid>> {
    let mut out = fixtures::builtin_quantaloids();
    let mut r = fixtures::rng(seed.wrapping_add(0x51ab));
    for tag in 0..random_count {
        out.push(fixtures::random_table_quantaloid(&mut r, tag));
    }
    out
}

/// Every arrow of an enumerable quantaloid.
fn all_arrows(q: &Quantaloid) -> Result<Vec<Arrow>> {
    let mut out = Vec::new();
    for x in 0..q.object_count() {
        for y in 0..q.object_count() {
            for v in q.hom_elements(x, y)? {
                out.push(Arrow::new(x, y, v));
            }
        }
    }
    Ok(out)
}

pub fn galois_lifting(q: &Quantaloid) -> Result<Option<String>> {
    let arrows = all_arrows(q)?;
    for g in &arrows {
        for h in arrows.iter().filter(|h| h.dst == g.dst) {
            let lift = q.lifting(g, h)?;
            for x in q.hom_elements(h.src, g.src)? {
                let x = Arrow::new(h.src, g.src, x);
                let lhs = q.value_leq(x.src, g.dst, &q.compose(g, &x)?.value, &h.value)?;
                let rhs = q.value_leq(x.src, x.dst, &x.value, &lift.value)?;
                if lhs != rhs {
                    return Ok(Some(format!(
                        "g={} h={} x={}",
                        q.render_value(g.src, g.dst, &g.value),
                        q.render_value(h.src, h.dst, &h.value),
                        q.render_value(x.src, x.dst, &x.value)
                    )));
                }
            }
        }
    }
    Ok(None)
}

pub fn galois_extension(q: &Quantaloid) -> Result<Option<String>> {
    let arrows = all_arrows(q)?;
    for f in &arrows {
        for h in arrows.iter().filter(|h| h.src == f.src) {
            let ext = q.extension(f, h)?;
            for x in q.hom_elements(f.dst, h.dst)? {
                let x = Arrow::new(f.dst, h.dst, x);
                let lhs = q.value_leq(f.src, x.dst, &q.compose(&x, f)?.value, &h.value)?;
                let rhs = q.value_leq(x.src, x.dst, &x.value, &ext.value)?;
                if lhs != rhs {
                    return Ok(Some(format!(
                        "f={} h={} x={}",
                        q.render_value(f.src, f.dst, &f.value),
                        q.render_value(h.src, h.dst, &h.value),
                        q.render_value(x.src, x.dst, &x.value)
                    )));
                }
            }
        }
    }
    Ok(None)
}

pub fn lemma1(q: &Quantaloid) -> Result<Option<String>> {
    let arrows = all_arrows(q)?;
    for g in &arrows {
        if let Some(g_star) = q.right_adjoint(g)? {
            for h in arrows.iter().filter(|h| h.dst == g.dst) {
                let lift = q.lifting(g, h)?;
                let via_adjoint = q.compose(&g_star, h)?;
                if lift.value != via_adjoint.value {
                    return Ok(Some(format!(
                        "[g,h] differs from g*∘h at g={} h={}",
                        q.render_value(g.src, g.dst, &g.value),
                        q.render_value(h.src, h.dst, &h.value)
                    )));
                }
                // therefore [g,-] preserves binary joins
                for h2 in arrows.iter().filter(|h2| h2.src == h.src && h2.dst == h.dst) {
                    let join = q.join_values(h.src, h.dst, &[h.value.clone(), h2.value.clone()])?;
                    let lift_join = q.lifting(g, &Arrow::new(h.src, h.dst, join))?;
                    let join_lifts = q.join_values(
                        h.src,
                        g.src,
                        &[lift.value.clone(), q.lifting(g, h2)?.value],
                    )?;
                    if lift_join.value != join_lifts {
                        return Ok(Some("[g,-] fails to preserve a join".into()));
                    }
                }
            }
        }
        if let Some(f_shriek) = q.left_adjoint(g)? {
            for h in arrows.iter().filter(|h| h.src == g.src) {
                let ext = q.extension(g, h)?;
                let via_adjoint = q.compose(h, &f_shriek)?;
                if ext.value != via_adjoint.value {
                    return Ok(Some(format!(
                        "{{f,h}} differs from h∘f! at f={} h={}",
                        q.render_value(g.src, g.dst, &g.value),
                        q.render_value(h.src, h.dst, &h.value)
                    )));
                }
            }
        }
    }
    Ok(None)
}

pub fn lemma2(q: &Quantaloid) -> Result<Option<String>> {
    let arrows = all_arrows(q)?;
    // commutative diagram: f : A→D, g : B→D, j : D→E, h := j∘g : B→E, i : C→E
    for g in &arrows {
        for j in arrows.iter().filter(|j| j.src == g.dst) {
            let h = q.compose(j, g)?;
            for f in arrows.iter().filter(|f| f.dst == g.dst) {
                for i in arrows.iter().filter(|i| i.dst == j.dst) {
                    let lhs = q.compose(&q.lifting(i, &h)?, &q.lifting(g, f)?)?;
                    let rhs = q.lifting(i, &q.compose(j, f)?)?;
                    if !q.value_leq(lhs.src, lhs.dst, &lhs.value, &rhs.value)? {
                        return Ok(Some(format!(
                            "[i,h]∘[g,f] above [i,j∘f] at g={} j={} f={} i={}",
                            q.render_value(g.src, g.dst, &g.value),
                            q.render_value(j.src, j.dst, &j.value),
                            q.render_value(f.src, f.dst, &f.value),
                            q.render_value(i.src, i.dst, &i.value)
                        )));
                    }
                    let adjoints = [
                        q.right_adjoint(f)?,
                        q.right_adjoint(g)?,
                        q.right_adjoint(&h)?,
                        q.right_adjoint(i)?,
                        q.right_adjoint(j)?,
                    ];
                    if let [Some(_), Some(g_star), Some(_), Some(_), Some(_)] = adjoints {
                        let gg_star = q.compose(g, &g_star)?;
                        if gg_star.value == q.identity_value(g.dst) && lhs.value != rhs.value {
                            return Ok(Some(format!(
                                "equality case fails at g={} j={} f={} i={}",
                                q.render_value(g.src, g.dst, &g.value),
                                q.render_value(j.src, j.dst, &j.value),
                                q.render_value(f.src, f.dst, &f.value),
                                q.render_value(i.src, i.dst, &i.value)
                            )));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

pub fn lemma3(q: &Quantaloid) -> Result<Option<String>> {
    let arrows = all_arrows(q)?;
    for f in &arrows {
        let Some(f_star) = q.right_adjoint(f)? else { continue };
        if q.compose(&f_star, f)?.value != q.identity_value(f.src) {
            continue;
        }
        for x in &arrows {
            if x.dst != f.src {
                continue;
            }
            for y in arrows.iter().filter(|y| y.src == x.src && y.dst == x.dst) {
                let lhs = q.lifting(&q.compose(f, x)?, &q.compose(f, y)?)?;
                let rhs = q.lifting(x, y)?;
                if lhs.value != rhs.value {
                    return Ok(Some(format!(
                        "[f∘x,f∘y] ≠ [x,y] at f={} x={} y={}",
                        q.render_value(f.src, f.dst, &f.value),
                        q.render_value(x.src, x.dst, &x.value),
                        q.render_value(y.src, y.dst, &y.value)
                    )));
                }
            }
        }
    }
    Ok(None)
}

/// Sampled Galois check for the symbolic Lawvere quantale.
pub fn lawvere_galois(r: &mut ChaCha8Rng, samples: usize) -> Result<Option<String>> {
    let q = Quantaloid::lawvere();
    let grid = ["0", "1/3", "1/2", "1", "3/2", "2", "7/2", "10", "inf"];
    let pick = |r: &mut ChaCha8Rng| -> Arrow {
        Arrow::new(0, 0, Value::Ext(grid.choose(r).unwrap().parse().unwrap()))
    };
    for _ in 0..samples {
        let g = pick(r);
        let h = pick(r);
        let x = pick(r);
        let lift = q.lifting(&g, &h)?;
        let lhs = q.value_leq(0, 0, &q.compose(&g, &x)?.value, &h.value)?;
        let rhs = q.value_leq(0, 0, &x.value, &lift.value)?;
        if lhs != rhs {
            return Ok(Some(format!("g={:?} h={:?} x={:?}", g.value, h.value, x.value)));
        }
        let ext = q.extension(&g, &h)?;
        let lhs = q.value_leq(0, 0, &q.compose(&x, &g)?.value, &h.value)?;
        let rhs = q.value_leq(0, 0, &x.value, &ext.value)?;
        if lhs != rhs {
            return Ok(Some(format!("extension: f={:?} h={:?} x={:?}", g.value, h.value, x.value)));
        }
    }
    Ok(None)
}

fn suite_quantaloid(report: &mut LawReport, budget: usize, seed: u64) -> Result<()> {
    let qs = quantaloid_fixtures(seed, 5);
    for q in &qs {
        let name = q.name().to_string();
        report.push(LawEntry::check("quantaloid-axioms", &name, q.validate().is_empty(), || {
            format!("{:?}", q.validate())
        }));
        for (law, outcome) in [
            ("residuation-galois-lifting", galois_lifting(q)?),
            ("residuation-galois-extension", galois_extension(q)?),
            ("lemma1-adjoint-lifting", lemma1(q)?),
            ("lemma2-square", lemma2(q)?),
            ("lemma3-cancellation", lemma3(q)?),
        ] {
            report.push(LawEntry::check(law, &name, outcome.is_none(), || outcome.clone().unwrap()));
        }
    }
    let mut r = fixtures::rng(seed.wrapping_add(1));
    let outcome = lawvere_galois(&mut r, budget.clamp(32, 512))?;
    report.push(LawEntry::check(
        "residuation-galois-lawvere",
        "lawvere",
        outcome.is_none(),
        || outcome.clone().unwrap(),
    ));
    Ok(())
}

/// Every valid distributor between two small categories over an enumerable
/// quantaloid. Returns `None` when the search space is too large.
pub fn all_distributors(dom: &Arc<QCategory>, cod: &Arc<QCategory>, cap: usize) -> Result<Option<Vec<Distributor>>> {
    let q = dom.quantaloid().clone();
    let mut domain_sizes = Vec::new();
    for b in 0..cod.len() {
        for a in 0..dom.len() {
            domain_sizes.push(q.hom_elements(dom.type_of(a), cod.type_of(b))?.len());
        }
    }
    let mut total = 1usize;
    for s in &domain_sizes {
        total = match total.checked_mul(*s) {
            Some(t) if t <= cap => t,
            _ => return Ok(None),
        };
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; domain_sizes.len()];
    loop {
        let mut matrix = Vec::with_capacity(cod.len());
        for b in 0..cod.len() {
            let mut row = Vec::with_capacity(dom.len());
            for a in 0..dom.len() {
                row.push(Value::Elem(choice[b * dom.len() + a]));
            }
            matrix.push(row);
        }
        let d = Distributor::new(dom.clone(), cod.clone(), matrix)?;
        if d.validate().is_empty() {
            out.push(d);
        }
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return Ok(Some(out));
            }
            choice[pos] += 1;
            if choice[pos] < domain_sizes[pos] {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

fn suite_dist(report: &mut LawReport, budget: usize, seed: u64) -> Result<()> {
    let mut r = fixtures::rng(seed.wrapping_add(2));
    let qs = quantaloid_fixtures(seed, 2);
    let rounds = (budget / 8).clamp(4, 64);
    for (qi, q) in qs.iter().enumerate() {
        let name = format!("{}#{qi}", q.name());
        let mut assoc_bad = None;
        let mut unit_bad = None;
        let mut join_bad = None;
        let mut adjoint_bad = None;
        let mut functoriality_bad = None;
        for _ in 0..rounds {
            let a = fixtures::random_category(&mut r, q, 3)?;
            let b = fixtures::random_category(&mut r, q, 3)?;
            let c = fixtures::random_category(&mut r, q, 3)?;
            let phi = fixtures::random_distributor(&mut r, &a, &b)?;
            let psi = fixtures::random_distributor(&mut r, &b, &c)?;
            let theta = fixtures::random_distributor(&mut r, &c, &a)?;
            let left = Distributor::compose(&Distributor::compose(&theta, &psi)?, &phi)?;
            let right = Distributor::compose(&theta, &Distributor::compose(&psi, &phi)?)?;
            if left != right {
                assoc_bad = Some("⊗ not associative on sampled triple".to_string());
            }
            let ida = Distributor::identity(a.clone());
            let idb = Distributor::identity(b.clone());
            if Distributor::compose(&phi, &ida)? != phi || Distributor::compose(&idb, &phi)? != phi {
                unit_bad = Some("identity distributor is not neutral".to_string());
            }
            let phi2 = fixtures::random_distributor(&mut r, &a, &b)?;
            let joined = Distributor::join(a.clone(), b.clone(), &[&phi, &phi2])?;
            let lhs = Distributor::compose(&psi, &joined)?;
            let rhs = Distributor::join(
                a.clone(),
                c.clone(),
                &[&Distributor::compose(&psi, &phi)?, &Distributor::compose(&psi, &phi2)?],
            )?;
            if lhs != rhs {
                join_bad = Some("⊗ fails to preserve a join on the right".to_string());
            }
            if let Some(f) = fixtures::random_functor(&mut r, &a, &b, 16) {
                let l = f.induced_left();
                let rd = f.induced_right();
                let unit_ok = Distributor::identity(a.clone()).leq(&Distributor::compose(&rd, &l)?)?;
                let counit_ok = Distributor::compose(&l, &rd)?.leq(&Distributor::identity(b.clone()))?;
                if !(unit_ok && counit_ok) {
                    adjoint_bad = Some("induced pair fails unit/counit".to_string());
                }
                if let Some(g) = fixtures::random_functor(&mut r, &b, &c, 16) {
                    let composite = g.compose(&f)?;
                    if composite.induced_left() != Distributor::compose(&g.induced_left(), &f.induced_left())? {
                        functoriality_bad = Some("induced_left not functorial".to_string());
                    }
                }
            }
        }
        for (law, bad) in [
            ("dist-associativity", assoc_bad),
            ("dist-identity", unit_bad),
            ("dist-join-preservation", join_bad),
            ("induced-adjunction", adjoint_bad),
            ("induced-functoriality", functoriality_bad),
        ] {
            report.push(LawEntry::check(law, &name, bad.is_none(), || bad.clone().unwrap()));
        }
    }

    // brute-force Galois characterization on small BOOL instances
    let boolean = Arc::new(Quantaloid::boolean());
    let mut lifting_bad = None;
    let mut extension_bad = None;
    for round in 0..(budget / 40).clamp(2, 8) {
        let a = fixtures::random_preorder(&mut r, 3)?;
        let b = fixtures::random_preorder(&mut r, 3)?;
        let c = fixtures::random_preorder(&mut r, 2)?;
        let _ = &boolean;
        let psi = fixtures::random_distributor(&mut r, &b, &c)?;
        let theta = fixtures::random_distributor(&mut r, &a, &c)?;
        let lifted = Distributor::lifting(&psi, &theta)?;
        if !lifted.validate().is_empty() {
            lifting_bad = Some(format!("round {round}: lifting is not a distributor"));
            break;
        }
        if let Some(all) = all_distributors(&a, &b, 4096)? {
            let mut solutions = Vec::new();
            for x in &all {
                let holds = Distributor::compose(&psi, x)?.leq(&theta)?;
                if holds != x.leq(&lifted)? {
                    lifting_bad = Some(format!("round {round}: Galois mismatch"));
                    break;
                }
                if holds {
                    solutions.push(x);
                }
            }
            let joined = Distributor::join(a.clone(), b.clone(), &solutions)?;
            if joined != lifted {
                lifting_bad = Some(format!("round {round}: join of solutions differs"));
            }
        }
        let phi = fixtures::random_distributor(&mut r, &a, &b)?;
        let theta2 = fixtures::random_distributor(&mut r, &a, &c)?;
        let extended = Distributor::extension(&phi, &theta2)?;
        if let Some(all) = all_distributors(&b, &c, 4096)? {
            for x in &all {
                let holds = Distributor::compose(x, &phi)?.leq(&theta2)?;
                if holds != x.leq(&extended)? {
                    extension_bad = Some(format!("round {round}: Galois mismatch"));
                    break;
                }
            }
        }
    }
    report.push(LawEntry::check("dist-lifting-galois", "bool-brute", lifting_bad.is_none(), || {
        lifting_bad.clone().unwrap()
    }));
    report.push(LawEntry::check("dist-extension-galois", "bool-brute", extension_bad.is_none(), || {
        extension_bad.clone().unwrap()
    }));
    Ok(())
}

pub fn enumerable_bases(seed: u64, max_objects: usize, count: usize) -> Result<Vec<(String, Arc<QCategory>)>> {
    let mut r = fixtures::rng(seed.wrapping_add(3));
    let mut out = Vec::new();
    let qs = fixtures::builtin_quantaloids();
    for k in 0..count {
        let q = &qs[k % qs.len()];
        let cat = fixtures::random_category(&mut r, q, max_objects)?;
        out.push((format!("{}-cat{k}", q.name()), cat));
    }
    Ok(out)
}

fn suite_presheaf(report: &mut LawReport, budget: usize, seed: u64) -> Result<()> {
    let mut r = fixtures::rng(seed.wrapping_add(4));

    // Yoneda, exhaustively on enumerable fixtures
    for (name, cat) in enumerable_bases(seed, 3, 4)? {
        let mut bad = None;
        'outer: for phi in enumerate_presheaves(&cat, 4096)? {
            for a in 0..cat.len() {
                if cat.type_of(a) != phi.q_type() {
                    continue;
                }
                let repr = Presheaf::representable(cat.clone(), a);
                if presheaf_hom(&repr, &phi)? != *phi.value(a) {
                    bad = Some(format!("at object {} and presheaf {}", cat.object_id(a), phi.canonical_key()));
                    break 'outer;
                }
            }
        }
        report.push(LawEntry::check("yoneda-pointwise", &name, bad.is_none(), || bad.clone().unwrap()));

        let pcat = PresheafCat::full(cat.clone(), 4096)?;
        report.push(LawEntry::check(
            "yoneda-fully-faithful",
            &name,
            qcat::is_fully_faithful(&pcat.yoneda()?),
            || "Yoneda embedding not fully faithful".into(),
        ));
    }

    // Yoneda spot checks over the Lawvere quantale
    let mut bad = None;
    for k in 0..budget.clamp(20, 400) {
        let space = fixtures::random_metric_space(&mut r, 5)?;
        let phi = fixtures::random_presheaf(&mut r, &space)?;
        let a = r.random_range(0..space.len());
        let repr = Presheaf::representable(space.clone(), a);
        if presheaf_hom(&repr, &phi)? != *phi.value(a) {
            bad = Some(format!("case {k}"));
            break;
        }
    }
    report.push(LawEntry::check("yoneda-lawvere-spot", "metric-samples", bad.is_none(), || {
        bad.clone().unwrap()
    }));

    // classification: round-trips and naturality
    let mut roundtrip_bad = None;
    let mut naturality_bad = None;
    let mut transport_join_bad = None;
    for k in 0..(budget / 4).clamp(8, 100) {
        let base = fixtures::random_preorder(&mut r, 3)?;
        let other = fixtures::random_preorder(&mut r, 3)?;
        let pcat = PresheafCat::full(base.clone(), 4096)?;
        let phi = fixtures::random_distributor(&mut r, &other, &base)?;
        let classified = pcat.classify(&phi)?;
        if pcat.declassify(&classified)? != phi {
            roundtrip_bad = Some(format!("case {k}: declassify∘classify ≠ id"));
            break;
        }
        let back = pcat.classify(&pcat.declassify(&classified)?)?;
        if back != classified {
            roundtrip_bad = Some(format!("case {k}: classify∘declassify ≠ id"));
            break;
        }
        // naturality: classify(Ψ⊗Φ) = (Ψ⊗-) ∘ classify(Φ)
        let target = fixtures::random_preorder(&mut r, 3)?;
        let psi = fixtures::random_distributor(&mut r, &base, &target)?;
        let ptarget = PresheafCat::full(target.clone(), 4096)?;
        let lhs = ptarget.classify(&Distributor::compose(&psi, &phi)?)?;
        let rhs = pcat.transport(&psi, &ptarget)?.compose(&classified)?;
        if lhs != rhs {
            naturality_bad = Some(format!("case {k}"));
            break;
        }
        // the transport functor preserves local joins of distributors
        let psi2 = fixtures::random_distributor(&mut r, &base, &target)?;
        let joined = Distributor::join(base.clone(), target.clone(), &[&psi, &psi2])?;
        for member in pcat.members() {
            let md = member.to_distributor();
            let lhs = Distributor::compose(&joined, &md)?;
            let c1 = Distributor::compose(&psi, &md)?;
            let c2 = Distributor::compose(&psi2, &md)?;
            let rhs = Distributor::join(md.dom().clone(), target.clone(), &[&c1, &c2])?;
            if lhs != rhs {
                transport_join_bad = Some(format!("case {k} at {}", member.canonical_key()));
                break;
            }
        }
    }
    report.push(LawEntry::check("classify-roundtrip", "seeded", roundtrip_bad.is_none(), || {
        roundtrip_bad.clone().unwrap()
    }));
    report.push(LawEntry::check("classification-naturality", "seeded", naturality_bad.is_none(), || {
        naturality_bad.clone().unwrap()
    }));
    report.push(LawEntry::check("transport-join-preservation", "seeded", transport_join_bad.is_none(), || {
        transport_join_bad.clone().unwrap()
    }));

    // colimits: universal property, representable weights, Kan agreement
    let mut universal_bad = None;
    let mut repr_weight_bad = None;
    let mut kan_bad = None;
    for k in 0..(budget / 2).clamp(16, 200) {
        let a = fixtures::random_preorder(&mut r, 3)?;
        let b = fixtures::random_preorder(&mut r, 3)?;
        let c = fixtures::random_preorder(&mut r, 3)?;
        let Some(f) = fixtures::random_functor(&mut r, &b, &c, 16) else { continue };
        let phi = fixtures::random_distributor(&mut r, &a, &b)?;
        if let Ok(k_f) = colim(&phi, &f) {
            let lhs = k_f.induced_right();
            let rhs = Distributor::lifting(&phi, &f.induced_right())?;
            if lhs != rhs {
                universal_bad = Some(format!("case {k}: defining equation violated"));
                break;
            }
        }
        // representable weight picks out F(a) up to isomorphism
        let pick = r.random_range(0..b.len());
        let weight = Presheaf::representable(b.clone(), pick).to_distributor();
        if let Ok(sel) = colim(&weight, &f) {
            let chosen = sel.apply(0);
            let want = f.apply(pick);
            let ok = c.object_leq(chosen, want)? && c.object_leq(want, chosen)?;
            if !ok {
                repr_weight_bad = Some(format!("case {k}: got {} wanted {}", c.object_id(chosen), c.object_id(want)));
                break;
            }
        } else {
            repr_weight_bad = Some(format!("case {k}: representable-weighted colimit missing"));
            break;
        }
        // Kan extension vs exhaustive least-functor search
        let Some(g) = fixtures::random_functor(&mut r, &b, &a, 16) else { continue };
        let above: Vec<QFunctor> = all_functors(&a, &c)?
            .into_iter()
            .filter(|h| {
                h.compose(&g)
                    .and_then(|hg| qcat::functor_leq(&f, &hg))
                    .unwrap_or(false)
            })
            .collect();
        match kan_extension(&f, &g) {
            Ok(kan) => {
                let mut least = qcat::functor_leq(&f, &kan.compose(&g)?)?;
                for h in &above {
                    least = least && qcat::functor_leq(&kan, h)?;
                }
                if !least {
                    kan_bad = Some(format!("case {k}: kan result is not the least bound"));
                    break;
                }
            }
            Err(Error::NotCocomplete { .. }) => {
                // no candidate may satisfy the pointwise universal property
                let target = Distributor::lifting(&g.induced_right(), &f.induced_right())?;
                if let Some(h) = above.iter().find(|h| h.induced_right() == target) {
                    kan_bad = Some(format!(
                        "case {k}: search found a pointwise extension {:?} but colim failed",
                        h.map()
                    ));
                    break;
                }
            }
            Err(e) => return Err(e),
        }
    }
    report.push(LawEntry::check("colim-universal-property", "seeded", universal_bad.is_none(), || {
        universal_bad.clone().unwrap()
    }));
    report.push(LawEntry::check("colim-representable-weight", "seeded", repr_weight_bad.is_none(), || {
        repr_weight_bad.clone().unwrap()
    }));
    report.push(LawEntry::check("kan-least-functor", "seeded", kan_bad.is_none(), || {
        kan_bad.clone().unwrap()
    }));

    // free monad laws on tiny fixtures via the maximal class
    for (name, cat) in enumerable_bases(seed.wrapping_add(40), 2, 2)? {
        let entries = doctrine::doctrine_laws(&hausdorff::weight_class_all(), &cat, &name, 20_000)?;
        report.extend(entries.into_iter().map(|mut e| {
            e.law = format!("free-{}", e.law);
            e
        }));
    }
    Ok(())
}

/// Every functor between two small categories.
pub fn all_functors(dom: &Arc<QCategory>, cod: &Arc<QCategory>) -> Result<Vec<QFunctor>> {
    let candidates: Vec<Vec<usize>> = (0..dom.len()).map(|a| cod.objects_of_type(dom.type_of(a))).collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; dom.len()];
    loop {
        let map: Vec<usize> = choice.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
        if let Ok(f) = QFunctor::new(dom.clone(), cod.clone(), map) {
            out.push(f);
        }
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return Ok(out);
            }
            choice[pos] += 1;
            if choice[pos] < candidates[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

fn suite_doctrine(report: &mut LawReport, budget: usize, seed: u64) -> Result<()> {
    let mut r = fixtures::rng(seed.wrapping_add(5));
    let classes = [
        hausdorff::weight_class_conical(),
        hausdorff::weight_class_representable(),
        hausdorff::weight_class_cauchy(),
        hausdorff::weight_class_all(),
    ];

    for class in &classes {
        let entries = doctrine::saturation_check(class, budget.clamp(20, 500), seed)?;
        report.extend(entries.into_iter().map(|mut e| {
            e.law = format!("saturation-{}/{}", class.name(), e.law);
            e
        }));
    }

    for (name, cat) in enumerable_bases(seed.wrapping_add(50), 2, 2)? {
        for class in &classes {
            let entries = doctrine::doctrine_laws(class, &cat, &name, 20_000)?;
            report.extend(entries.into_iter().map(|mut e| {
                e.law = format!("{}-{}", class.name(), e.law);
                e
            }));
        }
    }

    // extension to distributors: normality, laxity, join preservation,
    // cotabulation, naturality of the embedding
    let conical = hausdorff::weight_class_conical();
    let mut normal_bad = None;
    let mut lax_bad = None;
    let mut join_bad = None;
    let mut cotab_bad = None;
    let mut natural_bad = None;
    for k in 0..(budget / 10).clamp(4, 40) {
        let a = fixtures::random_preorder(&mut r, 3)?;
        let b = fixtures::random_preorder(&mut r, 3)?;
        let c = fixtures::random_preorder(&mut r, 2)?;
        let slice_a = build_subcategory(&conical, &a)?;
        let slice_b = build_subcategory(&conical, &b)?;
        let slice_c = build_subcategory(&conical, &c)?;
        let ext_id = extend_to_dist(&Distributor::identity(a.clone()), &slice_a, &slice_a)?;
        if ext_id != Distributor::identity(slice_a.pcat.cat().clone()) {
            normal_bad = Some(format!("case {k}"));
            break;
        }
        let phi = fixtures::random_distributor(&mut r, &a, &b)?;
        let psi = fixtures::random_distributor(&mut r, &b, &c)?;
        let ext_phi = extend_to_dist(&phi, &slice_a, &slice_b)?;
        let ext_psi = extend_to_dist(&psi, &slice_b, &slice_c)?;
        let ext_comp = extend_to_dist(&Distributor::compose(&psi, &phi)?, &slice_a, &slice_c)?;
        if !Distributor::compose(&ext_psi, &ext_phi)?.leq(&ext_comp)? {
            lax_bad = Some(format!("case {k}"));
            break;
        }
        let phi2 = fixtures::random_distributor(&mut r, &a, &b)?;
        let joined = Distributor::join(a.clone(), b.clone(), &[&phi, &phi2])?;
        let lhs = extend_to_dist(&joined, &slice_a, &slice_b)?;
        let rhs = Distributor::join(
            slice_a.pcat.cat().clone(),
            slice_b.pcat.cat().clone(),
            &[&ext_phi, &extend_to_dist(&phi2, &slice_a, &slice_b)?],
        )?;
        if lhs != rhs {
            join_bad = Some(format!("case {k}"));
            break;
        }
        // cotabulation of a class distributor through its factorization
        if let Some(class_phi) = fixtures::random_class_distributor(&mut r, &slice_b, &a, 16)? {
            debug_assert!(dist_in_class(&class_phi, &conical)?);
            let i_phi = factor_through(&class_phi, &conical, &slice_b)?;
            let recovered = (0..b.len()).all(|bb| {
                (0..a.len()).all(|aa| {
                    class_phi.value(bb, aa)
                        == slice_b.pcat.cat().hom_value(slice_b.unit.apply(bb), i_phi.apply(aa))
                })
            });
            if !recovered {
                cotab_bad = Some(format!("case {k}"));
                break;
            }
        }
        // naturality: P(F) ∘ J_A = J_B ∘ C(F) on members
        if let Some(f) = fixtures::random_functor(&mut r, &a, &b, 16) {
            let pa = PresheafCat::full(a.clone(), 4096)?;
            let pb = PresheafCat::full(b.clone(), 4096)?;
            let j_a = doctrine::embedding(&slice_a, &pa)?;
            let j_b = doctrine::embedding(&slice_b, &pb)?;
            let lhs = pa.on_functor(&f, &pb)?.compose(&j_a)?;
            let rhs = j_b.compose(&doctrine::on_functor(&f, &slice_a, &slice_b)?)?;
            if lhs != rhs {
                natural_bad = Some(format!("case {k}"));
                break;
            }
        }
    }
    for (law, bad) in [
        ("extend-normality", normal_bad),
        ("extend-laxity", lax_bad),
        ("extend-join-preservation", join_bad),
        ("cotabulation-identity", cotab_bad),
        ("embedding-naturality", natural_bad),
    ] {
        report.push(LawEntry::check(law, "seeded", bad.is_none(), || bad.clone().unwrap()));
    }
    Ok(())
}

/// Brute-force conicity: search over every subset of same-typed objects.
pub fn conical_by_brute_force(phi: &Presheaf) -> Result<bool> {
    let base = phi.base();
    let of_type = base.objects_of_type(phi.q_type());
    let n = of_type.len();
    for mask in 0u64..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| of_type[i]).collect();
        let w = SubsetWeight::new(base.clone(), phi.q_type(), members)?;
        if hausdorff::conical_from_subset(&w)?.underlying == *phi {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Brute-force Cauchy test: search all valid right-adjoint candidates.
pub fn cauchy_by_brute_force(phi: &Presheaf) -> Result<bool> {
    let base = phi.base().clone();
    let q = base.quantaloid().clone();
    let x = phi.q_type();
    let singleton = Arc::new(QCategory::singleton(q.clone(), x));
    let sizes: Vec<usize> = (0..base.len())
        .map(|a| q.hom_elements(base.type_of(a), x).map(|v| v.len()))
        .collect::<Result<Vec<_>>>()?;
    let mut choice = vec![0usize; base.len()];
    let phi_dist = phi.to_distributor();
    loop {
        let matrix = vec![choice.iter().map(|&i| Value::Elem(i)).collect::<Vec<_>>()];
        let psi = Distributor::new(base.clone(), singleton.clone(), matrix)?;
        if psi.validate().is_empty() {
            let counit = Distributor::compose(&phi_dist, &psi)?.leq(&Distributor::identity(base.clone()))?;
            let unit_val = Distributor::compose(&psi, &phi_dist)?;
            let unit = q.value_leq(x, x, &q.identity_value(x), unit_val.value(0, 0))?;
            if counit && unit {
                return Ok(true);
            }
        }
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return Ok(false);
            }
            choice[pos] += 1;
            if choice[pos] < sizes[pos] {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

fn suite_hausdorff(report: &mut LawReport, budget: usize, seed: u64) -> Result<()> {
    let mut r = fixtures::rng(seed.wrapping_add(6));
    let conical = hausdorff::weight_class_conical();

    // three-way hom equality on metric spaces and preorders
    let mut three_way_bad = None;
    let mut spaces: Vec<(String, Arc<QCategory>)> = Vec::new();
    for k in 0..(budget / 40).clamp(3, 10) {
        spaces.push((format!("metric{k}"), fixtures::random_metric_space(&mut r, 4)?));
    }
    for k in 0..(budget / 60).clamp(2, 6) {
        spaces.push((format!("preorder{k}"), fixtures::random_preorder(&mut r, 3)?));
    }
    'spaces: for (name, space) in &spaces {
        let h = hausdorff_category(space)?;
        let slice = build_subcategory(&conical, space)?;
        let closed = hausdorff_on_dist(&Distributor::identity(space.clone()), &h, &h)?;
        let extended = extend_to_dist(&Distributor::identity(space.clone()), &slice, &slice)?;
        if slice.pcat.cat() != h.cat() {
            three_way_bad = Some(format!("{name}: class build differs from subset build"));
            break;
        }
        for t in 0..h.pcat().len() {
            for s in 0..h.pcat().len() {
                let hom = h.cat().hom_value(t, s);
                if hom != closed.value(t, s) || hom != extended.value(t, s) {
                    three_way_bad = Some(format!("{name}: entry ({t},{s})"));
                    break 'spaces;
                }
            }
        }
    }
    report.push(LawEntry::check("hausdorff-three-way-hom", "seeded", three_way_bad.is_none(), || {
        three_way_bad.clone().unwrap()
    }));

    // subset-level distance laws on metric fixtures
    let mut singleton_bad = None;
    let mut self_zero_bad = None;
    let mut triangle_bad = None;
    for (name, space) in spaces.iter().filter(|(n, _)| n.starts_with("metric")) {
        let n = space.len();
        for x in 0..n {
            for y in 0..n {
                let sx = SubsetWeight::new(space.clone(), 0, vec![x])?;
                let sy = SubsetWeight::new(space.clone(), 0, vec![y])?;
                if directed_hausdorff(&sx, &sy)? != *space.hom_value(x, y) {
                    singleton_bad = Some(format!("{name}: ({x},{y})"));
                }
            }
        }
        let all: Vec<usize> = (0..n).collect();
        let s_all = SubsetWeight::new(space.clone(), 0, all)?;
        let q = space.quantaloid();
        if directed_hausdorff(&s_all, &s_all)? != q.identity_value(0) {
            self_zero_bad = Some(name.clone());
        }
        // composition axiom of H(A) is the triangle property of the distance
        let h = hausdorff_category(space)?;
        if !h.cat().validate().is_empty() {
            triangle_bad = Some(name.clone());
        }
    }
    for (law, bad) in [
        ("hausdorff-singleton-distance", singleton_bad),
        ("hausdorff-self-distance-identity", self_zero_bad),
        ("hausdorff-triangle", triangle_bad),
    ] {
        report.push(LawEntry::check(law, "metric-fixtures", bad.is_none(), || bad.clone().unwrap()));
    }

    // functor action and the commuting square with the distributor extension
    let mut action_bad = None;
    let mut square_bad = None;
    let mut lax_bad = None;
    let mut join_bad = None;
    for k in 0..(budget / 10).clamp(4, 50) {
        let a = fixtures::random_preorder(&mut r, 3)?;
        let b = fixtures::random_preorder(&mut r, 3)?;
        let ha = hausdorff_category(&a)?;
        let hb = hausdorff_category(&b)?;
        if let Some(f) = fixtures::random_functor(&mut r, &a, &b, 16) {
            let by_images = hausdorff_on_functor(&f, &ha, &hb)?;
            let by_transport = ha.pcat().transport(&f.induced_left(), hb.pcat())?;
            if by_images != by_transport {
                action_bad = Some(format!("case {k}"));
                break;
            }
            let lhs = extend_to_dist(&f.induced_left(), &ha.slice, &hb.slice)?;
            let rhs = by_images.induced_left();
            if lhs != rhs {
                square_bad = Some(format!("case {k}"));
                break;
            }
        }
        let c = fixtures::random_preorder(&mut r, 2)?;
        let hc = hausdorff_category(&c)?;
        let phi = fixtures::random_distributor(&mut r, &a, &b)?;
        let psi = fixtures::random_distributor(&mut r, &b, &c)?;
        let h_phi = hausdorff_on_dist(&phi, &ha, &hb)?;
        let h_psi = hausdorff_on_dist(&psi, &hb, &hc)?;
        let h_comp = hausdorff_on_dist(&Distributor::compose(&psi, &phi)?, &ha, &hc)?;
        if !Distributor::compose(&h_psi, &h_phi)?.leq(&h_comp)? {
            lax_bad = Some(format!("case {k}"));
            break;
        }
        let phi2 = fixtures::random_distributor(&mut r, &a, &b)?;
        let joined = Distributor::join(a.clone(), b.clone(), &[&phi, &phi2])?;
        let lhs = hausdorff_on_dist(&joined, &ha, &hb)?;
        let rhs = Distributor::join(
            ha.cat().clone(),
            hb.cat().clone(),
            &[&h_phi, &hausdorff_on_dist(&phi2, &ha, &hb)?],
        )?;
        if lhs != rhs {
            join_bad = Some(format!("case {k}"));
            break;
        }
    }
    for (law, bad) in [
        ("hausdorff-functor-action", action_bad),
        ("hausdorff-extension-square", square_bad),
        ("hausdorff-dist-laxity", lax_bad),
        ("hausdorff-dist-join-preservation", join_bad),
    ] {
        report.push(LawEntry::check(law, "seeded", bad.is_none(), || bad.clone().unwrap()));
    }

    // conicity agreement with brute force, including the rational negative
    let mut conical_bad = None;
    'conical: for k in 0..(budget / 20).clamp(2, 12) {
        let cat = fixtures::random_preorder(&mut r, 4)?;
        for phi in enumerate_presheaves(&cat, 4096)? {
            let fast = is_conical(&phi)?;
            let brute = conical_by_brute_force(&phi)?;
            if fast != brute {
                conical_bad = Some(format!("case {k} at {}", phi.canonical_key()));
                break 'conical;
            }
            if let Some(cert) = conical_certificate(&phi)? {
                if cert.generators != canonical_generators(&phi)? {
                    conical_bad = Some(format!("case {k}: certificate not canonical"));
                    break 'conical;
                }
            }
        }
    }
    report.push(LawEntry::check("conical-brute-agreement", "seeded", conical_bad.is_none(), || {
        conical_bad.clone().unwrap()
    }));

    // Cauchy agreement and completion equivalence over preorders
    let mut cauchy_bad = None;
    let mut completion_bad = None;
    for k in 0..(budget / 20).clamp(2, 12) {
        let cat = fixtures::random_preorder(&mut r, 4)?;
        for phi in enumerate_presheaves(&cat, 4096)? {
            let fast = is_cauchy(&phi)?;
            let brute = cauchy_by_brute_force(&phi)?;
            if fast != brute {
                cauchy_bad = Some(format!("case {k} at {}", phi.canonical_key()));
                break;
            }
        }
        let cc = hausdorff::cauchy_completion(&cat, 4096)?;
        if !qcat::is_equivalence(&cc.unit)? {
            completion_bad = Some(format!("case {k}"));
            break;
        }
    }
    report.push(LawEntry::check("cauchy-brute-agreement", "seeded", cauchy_bad.is_none(), || {
        cauchy_bad.clone().unwrap()
    }));
    report.push(LawEntry::check("cauchy-completion-equivalence", "preorders", completion_bad.is_none(), || {
        completion_bad.clone().unwrap()
    }));

    // order-theoretic vs weighted conical colimits
    let mut prop_bad = None;
    for k in 0..(budget / 10).clamp(4, 40) {
        let cat = fixtures::random_preorder(&mut r, 3)?;
        let size = r.random_range(0..=cat.len());
        let family: Vec<usize> = (0..size).map(|_| r.random_range(0..cat.len())).collect();
        let (order, weighted) = conical_colimit_two_ways(&cat, &family)?;
        let agree = match (order, weighted) {
            (Some(o), Some(c)) => cat.object_leq(o, c)? && cat.object_leq(c, o)?,
            (None, None) => true,
            _ => false,
        };
        if !agree {
            prop_bad = Some(format!("case {k}: order gives {order:?}, colimit gives {weighted:?}"));
            break;
        }
    }
    report.push(LawEntry::check("conical-colimit-two-routes", "seeded", prop_bad.is_none(), || {
        prop_bad.clone().unwrap()
    }));

    // Hausdorff doctrine monad laws on tiny fixtures
    for (name, cat) in enumerable_bases(seed.wrapping_add(60), 2, 2)? {
        let entries = doctrine::doctrine_laws(&conical, &cat, &name, 20_000)?;
        report.extend(entries.into_iter().map(|mut e| {
            e.law = format!("hausdorff-{}", e.law);
            e
        }));
    }
    Ok(())
}
