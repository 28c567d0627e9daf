//! Saturated weight classes as pluggable oracles, the full subcategories
//! `C(A)` of presheaf categories they carve out, the extension of the induced
//! doctrine to distributors, and the law harness backing the class-vs-doctrine
//! correspondence.

use crate::error::{Error, Result};
use crate::presheaf::{column, presheaf_hom, Presheaf, PresheafCat};
use crate::qcat::{self, Distributor, QCategory, QFunctor};
use crate::report::LawEntry;
use std::sync::Arc;

type ContainsFn = dyn Fn(&Presheaf) -> Result<bool> + Send + Sync;
type EnumerateFn = dyn Fn(&Arc<QCategory>) -> Result<Vec<Presheaf>> + Send + Sync;

/// A class of presheaves: a membership oracle plus an optional enumerator of
/// all members over a given base.
#[derive(Clone)]
pub struct WeightClass {
    name: String,
    contains: Arc<ContainsFn>,
    enumerate: Option<Arc<EnumerateFn>>,
}

impl std::fmt::Debug for WeightClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("WeightClass").field("name", &self.name).finish()
    }
}

impl WeightClass {
    pub fn new(
        name: impl Into<String>,
        contains: Arc<ContainsFn>,
        enumerate: Option<Arc<EnumerateFn>>,
    ) -> Self {
        WeightClass {
            name: name.into(),
            contains,
            enumerate,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn contains(&self, p: &Presheaf) -> Result<bool> {
        (self.contains)(p)
    }

    pub fn can_enumerate(&self) -> bool {
        self.enumerate.is_some()
    }

    /// All members over a base, or `NotEnumerable`.
    pub fn enumerate_on(&self, base: &Arc<QCategory>) -> Result<Vec<Presheaf>> {
        match &self.enumerate {
            Some(f) => f(base),
            None => Err(Error::NotEnumerable(format!("class {} has no enumerator", self.name))),
        }
    }
}

/// The slice of a sub-doctrine at one category: `C(A)` together with the
/// unit `I_A : A → C(A)` factoring the Yoneda embedding.
#[derive(Debug, Clone)]
pub struct DoctrineSlice {
    pub pcat: PresheafCat,
    pub unit: QFunctor,
}

/// Whether every column presheaf of the distributor is a class member.
pub fn dist_in_class(phi: &Distributor, class: &WeightClass) -> Result<bool> {
    for b in 0..phi.dom().len() {
        if !class.contains(&column(phi, b))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Materializes `C(A)`: the full subcategory of `P(A)` on the class members,
/// with the factorized Yoneda unit.
pub fn build_subcategory(class: &WeightClass, base: &Arc<QCategory>) -> Result<DoctrineSlice> {
    let members = class.enumerate_on(base)?;
    let pcat = PresheafCat::build(base.clone(), members)?;
    let unit = pcat.yoneda()?;
    Ok(DoctrineSlice { pcat, unit })
}

/// The inclusion `J_A : C(A) → P(A)` into a materialized full presheaf
/// category.
pub fn embedding(slice: &DoctrineSlice, full: &PresheafCat) -> Result<QFunctor> {
    let map = slice
        .pcat
        .members()
        .iter()
        .map(|p| {
            full.find(p).ok_or_else(|| {
                Error::invalid("doctrine", format!("member {} missing from P(A)", p.canonical_key()))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    QFunctor::new(slice.pcat.cat().clone(), full.cat().clone(), map)
}

/// The unique factorization `I_Φ : A → C(B)` of the classifying functor of
/// `Φ : A ⇸ B`; exists precisely when `Φ` lies in the class.
pub fn factor_through(phi: &Distributor, class: &WeightClass, slice_cod: &DoctrineSlice) -> Result<QFunctor> {
    let mut map = Vec::with_capacity(phi.dom().len());
    for b in 0..phi.dom().len() {
        let col = column(phi, b);
        if !class.contains(&col)? {
            return Err(Error::NotInClass {
                class: class.name.clone(),
                at: phi.dom().object_id(b).to_string(),
            });
        }
        let ix = slice_cod.pcat.find(&col).ok_or_else(|| Error::NotInClass {
            class: class.name.clone(),
            at: phi.dom().object_id(b).to_string(),
        })?;
        map.push(ix);
    }
    QFunctor::new(phi.dom().clone(), slice_cod.pcat.cat().clone(), map)
}

/// The extension of the doctrine to a distributor `Φ : A ⇸ B`: the
/// distributor `C(A) ⇸ C(B)` with entries `P(B)(t, Φ ⊗ s)`.
pub fn extend_to_dist(phi: &Distributor, slice_dom: &DoctrineSlice, slice_cod: &DoctrineSlice) -> Result<Distributor> {
    if !qcat::same_category(phi.dom(), slice_dom.pcat.base()) || !qcat::same_category(phi.cod(), slice_cod.pcat.base()) {
        return Err(Error::TypeMismatch("slices do not match the distributor ends".into()));
    }
    let mut matrix = Vec::with_capacity(slice_cod.pcat.len());
    let shifted: Vec<Presheaf> = (0..slice_dom.pcat.len())
        .map(|s| {
            let composed = Distributor::compose(phi, &slice_dom.pcat.member(s).to_distributor())?;
            Presheaf::from_distributor(&composed)
        })
        .collect::<Result<Vec<_>>>()?;
    for t in 0..slice_cod.pcat.len() {
        let mut row = Vec::with_capacity(slice_dom.pcat.len());
        for shifted_s in &shifted {
            row.push(presheaf_hom(slice_cod.pcat.member(t), shifted_s)?);
        }
        matrix.push(row);
    }
    Distributor::new(slice_dom.pcat.cat().clone(), slice_cod.pcat.cat().clone(), matrix)
}

/// The functor action `C(F) : C(A) → C(B)` of the doctrine.
pub fn on_functor(f: &QFunctor, slice_dom: &DoctrineSlice, slice_cod: &DoctrineSlice) -> Result<QFunctor> {
    slice_dom.pcat.transport(&f.induced_left(), &slice_cod.pcat)
}

/// The multiplication `μ_A : C(C(A)) → C(A)`: each member weight on `C(A)`
/// is collapsed by `colim(φ, J_A)`, which lands back in the class when the
/// class is saturated.
pub fn multiplication(slice: &DoctrineSlice, outer: &DoctrineSlice) -> Result<QFunctor> {
    if !qcat::same_category(outer.pcat.base(), slice.pcat.cat()) {
        return Err(Error::TypeMismatch("outer slice must live over C(A)".into()));
    }
    let eval = slice.pcat.declassify(&QFunctor::identity(slice.pcat.cat().clone()))?;
    let map = (0..outer.pcat.len())
        .map(|i| {
            let composed = Distributor::compose(&eval, &outer.pcat.member(i).to_distributor())?;
            let collapsed = Presheaf::from_distributor(&composed)?;
            slice.pcat.find(&collapsed).ok_or_else(|| {
                Error::invalid(
                    "doctrine multiplication",
                    format!("collapse of {} left the class", outer.pcat.member(i).canonical_key()),
                )
            })
        })
        .collect::<Result<Vec<_>>>()?;
    QFunctor::new(outer.pcat.cat().clone(), slice.pcat.cat().clone(), map)
}

/// Refutation sampling for the saturation conditions: representable
/// membership on every fixture, and closure of class-column distributors
/// under composition. A clean report is evidence, not proof.
pub fn saturation_check(class: &WeightClass, budget: usize, seed: u64) -> Result<Vec<LawEntry>> {
    let mut out = Vec::new();
    let mut r = crate::fixtures::rng(seed);
    let mut bases: Vec<(String, Arc<QCategory>)> = Vec::new();
    for k in 0..3 {
        bases.push((format!("preorder-{k}"), crate::fixtures::random_preorder(&mut r, 3)?));
    }
    let chain2 = Arc::new(crate::quantaloid::Quantaloid::chain(2));
    bases.push(("chain2-cat".into(), crate::fixtures::random_category(&mut r, &chain2, 2)?));
    bases.push(("metric".into(), crate::fixtures::random_metric_space(&mut r, 3)?));

    let mut slices = Vec::new();
    for (name, base) in &bases {
        match build_subcategory(class, base) {
            Ok(slice) => {
                let mut ok = true;
                for a in 0..base.len() {
                    if !class.contains(&Presheaf::representable(base.clone(), a))? {
                        out.push(LawEntry::fail(
                            "representables-in-class",
                            name.clone(),
                            format!("representable at {} is not a member", base.object_id(a)),
                        ));
                        ok = false;
                        break;
                    }
                }
                if ok {
                    out.push(LawEntry::pass("representables-in-class", name.clone()));
                }
                slices.push((name.clone(), base.clone(), slice));
            }
            Err(Error::NotEnumerable(_)) => continue,
            Err(Error::InvalidFunctor(e)) => {
                // Yoneda fails to factor: a missing representable.
                out.push(LawEntry::fail("representables-in-class", name.clone(), e));
            }
            Err(e) => return Err(e),
        }
    }

    let mut checked = 0usize;
    let mut failures = 0usize;
    'sampling: for round in 0..budget.max(1) {
        if checked >= budget || slices.is_empty() {
            break;
        }
        for ((mid_name, mid_base, mid_slice), (cod_name, _, cod_slice)) in
            slices.iter().flat_map(|m| slices.iter().map(move |c| (m, c)))
        {
            if checked >= budget {
                break 'sampling;
            }
            let dom = crate::fixtures::random_preorder(&mut r, 2)?;
            let Some(phi) = crate::fixtures::random_class_distributor(&mut r, mid_slice, &dom, 16)? else {
                continue;
            };
            let Some(psi) = crate::fixtures::random_class_distributor(&mut r, cod_slice, mid_base, 16)? else {
                continue;
            };
            checked += 1;
            let composite = Distributor::compose(&psi, &phi)?;
            if !dist_in_class(&composite, class)? {
                failures += 1;
                out.push(LawEntry::fail(
                    "composition-closure",
                    format!("{mid_name}->{cod_name} round {round}"),
                    "composite left the class".to_string(),
                ));
            }
        }
    }
    if failures == 0 {
        out.push(LawEntry::check(
            "composition-closure",
            format!("{checked} sampled pairs"),
            checked > 0 || slices.is_empty(),
            || "no composable pairs could be sampled".into(),
        ));
    }
    Ok(out)
}

/// Exhaustive search for a left adjoint to the unit `I_A`.
pub fn left_adjoint_to_unit(slice: &DoctrineSlice, budget: usize) -> Result<Option<QFunctor>> {
    let base = slice.pcat.base().clone();
    let ccat = slice.pcat.cat().clone();
    let candidates: Vec<Vec<usize>> = (0..ccat.len())
        .map(|i| base.objects_of_type(ccat.type_of(i)))
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return Ok(None);
    }
    candidates
        .iter()
        .try_fold(1usize, |acc, c| acc.checked_mul(c.len()).filter(|&t| t <= budget))
        .ok_or(Error::BudgetExceeded { needed: usize::MAX, budget })?;
    let mut choice = vec![0usize; ccat.len()];
    loop {
        let map: Vec<usize> = choice.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
        if let Ok(l) = QFunctor::new(ccat.clone(), base.clone(), map) {
            if qcat::is_adjoint_pair(&l, &slice.unit)? {
                return Ok(Some(l));
            }
        }
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return Ok(None);
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

/// Runs the full sub-KZ-doctrine law suite for one class over one enumerable
/// base category. `fixture` names the base in the report.
pub fn doctrine_laws(
    class: &WeightClass,
    base: &Arc<QCategory>,
    fixture: &str,
    budget: usize,
) -> Result<Vec<LawEntry>> {
    let mut out = Vec::new();
    let slice = match build_subcategory(class, base) {
        Ok(slice) => {
            out.push(LawEntry::pass("unit-factorization", fixture));
            slice
        }
        Err(e @ (Error::InvalidFunctor(_) | Error::Invalid { .. })) => {
            // Yoneda does not factor through the members: the class is
            // missing a representable. Report and stop.
            out.push(LawEntry::fail("unit-factorization", fixture, e.to_string()));
            return Ok(out);
        }
        Err(e) => return Err(e),
    };

    // (1) the unit is fully faithful
    out.push(LawEntry::check(
        "unit-fully-faithful",
        fixture,
        qcat::is_fully_faithful(&slice.unit),
        || "I_A is not fully faithful".into(),
    ));

    // (2) the Kan extension of Yoneda through the unit is the inclusion:
    // pointwise, the presheaf a ↦ C(A)(I_A a, t) must equal t itself.
    let mut kan_ok = true;
    let mut kan_bad = String::new();
    for (t, member) in slice.pcat.members().iter().enumerate() {
        let values: Vec<_> = (0..base.len())
            .map(|a| slice.pcat.cat().hom_value(slice.unit.apply(a), t).clone())
            .collect();
        let kan_t = Presheaf::new(base.clone(), slice.pcat.cat().type_of(t), values)?;
        if kan_t != *member {
            kan_ok = false;
            kan_bad = format!("at member {}", member.canonical_key());
            break;
        }
    }
    out.push(LawEntry::check("kan-embedding-identity", fixture, kan_ok, || kan_bad.clone()));

    if base.quantaloid().enumerable() {
        let full = PresheafCat::full(base.clone(), budget)?;
        let j = embedding(&slice, &full)?;
        out.push(LawEntry::check(
            "embedding-fully-faithful",
            fixture,
            qcat::is_fully_faithful(&j),
            || "J_A is not fully faithful".into(),
        ));
        // (7) class recovery: members of C(A) are exactly the members of the
        // class among all presheaves.
        let mut by_oracle = Vec::new();
        for p in full.members() {
            if class.contains(p)? {
                by_oracle.push(p.canonical_key());
            }
        }
        let built: Vec<String> = slice.pcat.members().iter().map(|p| p.canonical_key()).collect();
        out.push(LawEntry::check("class-recovery", fixture, by_oracle == built, || {
            format!("oracle gives {:?}, subcategory has {:?}", by_oracle, built)
        }));
    }

    // (3) multiplication closure and (4,5) monad + KZ laws.
    let outer = build_subcategory(class, slice.pcat.cat())?;
    let mu = match multiplication(&slice, &outer) {
        Ok(mu) => mu,
        Err(e) => {
            out.push(LawEntry::fail("mult-closure", fixture, e.to_string()));
            return Ok(out);
        }
    };
    out.push(LawEntry::pass("mult-closure", fixture));

    let eta_ca = &outer.unit;
    let c_eta = on_functor(&slice.unit, &slice, &outer)?;
    let id_ca = QFunctor::identity(slice.pcat.cat().clone());
    out.push(LawEntry::check(
        "monad-unit-right",
        fixture,
        qcat::functor_iso(&mu.compose(eta_ca)?, &id_ca)?,
        || "μ ∘ η_{C(A)} is not the identity".into(),
    ));
    out.push(LawEntry::check(
        "monad-unit-left",
        fixture,
        qcat::functor_iso(&mu.compose(&c_eta)?, &id_ca)?,
        || "μ ∘ C(η_A) is not the identity".into(),
    ));
    out.push(LawEntry::check(
        "kz-inequation",
        fixture,
        qcat::functor_leq(&c_eta, eta_ca)?,
        || "C(η_A) is not below η_{C(A)}".into(),
    ));

    // associativity needs one more level
    match build_subcategory(class, outer.pcat.cat()) {
        Ok(outer2) => {
            let mu_outer = multiplication(&outer, &outer2)?;
            let c_mu = on_functor(&mu, &outer2, &outer)?;
            let lhs = mu.compose(&c_mu)?;
            let rhs = mu.compose(&mu_outer)?;
            out.push(LawEntry::check(
                "monad-associativity",
                fixture,
                qcat::functor_iso(&lhs, &rhs)?,
                || "μ ∘ C(μ) differs from μ ∘ μ_{C(A)}".into(),
            ));
        }
        Err(Error::BudgetExceeded { needed, budget }) => {
            out.push(LawEntry::fail(
                "monad-associativity",
                fixture,
                format!("C(C(C(A))) exceeds budget: needed {needed}, budget {budget}"),
            ));
        }
        Err(e) => return Err(e),
    }

    // (6) algebra correspondence: the base admits all member-weighted
    // colimits iff the unit has a left adjoint.
    let mut all_colims = true;
    for member in slice.pcat.members() {
        if crate::presheaf::colim(&member.to_distributor(), &QFunctor::identity(base.clone())).is_err() {
            all_colims = false;
            break;
        }
    }
    let has_adjoint = left_adjoint_to_unit(&slice, budget)?.is_some();
    out.push(LawEntry::check(
        "algebra-correspondence",
        fixture,
        all_colims == has_adjoint,
        || format!("colimits-exist = {all_colims} but left-adjoint-exists = {has_adjoint}"),
    ));

    Ok(out)
}
