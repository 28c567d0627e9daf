//! Presheaves and presheaf categories: Yoneda, classification of
//! distributors, weighted colimits, pointwise Kan extensions, and the free
//! cocompletion monad.
//!
//! A presheaf on `A` of type `X` is a distributor from the one-object
//! category on `X` into `A`; it is stored as its value vector
//! `values[a] : X → ta`.

use crate::error::{Error, Result};
use crate::lattice::Violation;
use crate::qcat::{same_category, Distributor, QCategory, QFunctor};
use crate::quantaloid::{Arrow, Value};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Default cap on materialized presheaf categories.
pub const DEFAULT_PRESHEAF_BUDGET: usize = 20_000;

#[derive(Debug, Clone, PartialEq)]
pub struct Presheaf {
    base: Arc<QCategory>,
    q_type: usize,
    values: Vec<Value>,
}

impl Presheaf {
    pub fn new(base: Arc<QCategory>, q_type: usize, values: Vec<Value>) -> Result<Self> {
        if values.len() != base.len() {
            return Err(Error::invalid("presheaf", "one value per base object required"));
        }
        if q_type >= base.quantaloid().object_count() {
            return Err(Error::invalid("presheaf", "unknown type object"));
        }
        Ok(Presheaf { base, q_type, values })
    }

    /// The representable presheaf `A(-, a)`.
    pub fn representable(base: Arc<QCategory>, a: usize) -> Self {
        let values = (0..base.len()).map(|b| base.hom_value(b, a).clone()).collect();
        let q_type = base.type_of(a);
        Presheaf { base, q_type, values }
    }

    /// The all-bottom presheaf of a given type.
    pub fn bottom(base: Arc<QCategory>, q_type: usize) -> Result<Self> {
        let q = base.quantaloid().clone();
        let values = (0..base.len())
            .map(|a| q.bottom(q_type, base.type_of(a)))
            .collect::<Result<Vec<_>>>()?;
        Presheaf::new(base, q_type, values)
    }

    pub fn base(&self) -> &Arc<QCategory> {
        &self.base
    }

    pub fn q_type(&self) -> usize {
        self.q_type
    }

    pub fn value(&self, a: usize) -> &Value {
        &self.values[a]
    }

    pub fn values(&self) -> &[Value] {
        &self.values
    }

    /// The underlying distributor from the one-object category.
    pub fn to_distributor(&self) -> Distributor {
        let singleton = Arc::new(QCategory::singleton(self.base.quantaloid().clone(), self.q_type));
        let matrix = self.values.iter().map(|v| vec![v.clone()]).collect();
        Distributor::new(singleton, self.base.clone(), matrix).expect("presheaf matrix is well-shaped")
    }

    /// Reads a presheaf back off a distributor with one-object domain.
    pub fn from_distributor(d: &Distributor) -> Result<Self> {
        if d.dom().len() != 1 {
            return Err(Error::invalid("presheaf", "domain is not a one-object category"));
        }
        let q_type = d.dom().type_of(0);
        let values = (0..d.cod().len()).map(|a| d.value(a, 0).clone()).collect();
        Presheaf::new(d.cod().clone(), q_type, values)
    }

    /// Action axiom `A(a',a) ∘ φ(a) <= φ(a')`, exhaustively.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let q = self.base.quantaloid();
        for a1 in 0..self.base.len() {
            for a0 in 0..self.base.len() {
                let ok = q
                    .compose_values(
                        self.q_type,
                        self.base.type_of(a0),
                        self.base.type_of(a1),
                        self.base.hom_value(a1, a0),
                        &self.values[a0],
                    )
                    .and_then(|c| q.value_leq(self.q_type, self.base.type_of(a1), &c, &self.values[a1]));
                if !matches!(ok, Ok(true)) {
                    out.push(Violation(format!(
                        "presheaf action fails at ({},{})",
                        self.base.object_id(a1),
                        self.base.object_id(a0)
                    )));
                }
            }
        }
        out
    }

    pub fn leq(&self, other: &Presheaf) -> Result<bool> {
        self.check_parallel(other)?;
        let q = self.base.quantaloid();
        for a in 0..self.base.len() {
            if !q.value_leq(self.q_type, self.base.type_of(a), &self.values[a], &other.values[a])? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_parallel(&self, other: &Presheaf) -> Result<()> {
        if !same_category(&self.base, &other.base) {
            return Err(Error::BaseMismatch);
        }
        if self.q_type != other.q_type {
            return Err(Error::TypeMismatch("presheaves of different types".into()));
        }
        Ok(())
    }

    /// Pointwise join of parallel presheaves; the empty join is the bottom.
    pub fn join(base: Arc<QCategory>, q_type: usize, family: &[&Presheaf]) -> Result<Presheaf> {
        let q = base.quantaloid().clone();
        for p in family {
            if !same_category(&p.base, &base) || p.q_type != q_type {
                return Err(Error::BaseMismatch);
            }
        }
        let values = (0..base.len())
            .map(|a| {
                let parts: Vec<Value> = family.iter().map(|p| p.values[a].clone()).collect();
                q.join_values(q_type, base.type_of(a), &parts)
            })
            .collect::<Result<Vec<_>>>()?;
        Presheaf::new(base, q_type, values)
    }

    /// The least presheaf above a raw value vector: one action pass through
    /// the hom matrix.
    pub fn saturate(base: Arc<QCategory>, q_type: usize, raw: Vec<Value>) -> Result<Presheaf> {
        let q = base.quantaloid().clone();
        let mut values = Vec::with_capacity(base.len());
        for a1 in 0..base.len() {
            let mut parts = Vec::with_capacity(base.len());
            for a0 in 0..base.len() {
                parts.push(q.compose_values(
                    q_type,
                    base.type_of(a0),
                    base.type_of(a1),
                    base.hom_value(a1, a0),
                    &raw[a0],
                )?);
            }
            values.push(q.join_values(q_type, base.type_of(a1), &parts)?);
        }
        Presheaf::new(base, q_type, values)
    }

    /// A stable, order-defining serialization: the type id followed by all
    /// values in base object order.
    pub fn canonical_key(&self) -> String {
        let q = self.base.quantaloid();
        let vals: Vec<String> = (0..self.base.len())
            .map(|a| q.render_value(self.q_type, self.base.type_of(a), &self.values[a]))
            .collect();
        format!("{}[{}]", q.object_id(self.q_type), vals.join(","))
    }
}

/// The single hom element `P(A)(ψ, φ)`: the largest arrow `x : tφ → tψ`
/// with `ψ(a) ∘ x <= φ(a)` for every `a`.
pub fn presheaf_hom(psi: &Presheaf, phi: &Presheaf) -> Result<Value> {
    if !same_category(&psi.base, &phi.base) {
        return Err(Error::BaseMismatch);
    }
    let q = psi.base.quantaloid();
    let mut parts = Vec::with_capacity(psi.base.len());
    for a in 0..psi.base.len() {
        let g = Arrow::new(psi.q_type, psi.base.type_of(a), psi.values[a].clone());
        let h = Arrow::new(phi.q_type, phi.base.type_of(a), phi.values[a].clone());
        parts.push(q.lifting(&g, &h)?.value);
    }
    q.meet_values(phi.q_type, psi.q_type, &parts)
}

/// All presheaves on an enumerable base, sorted by canonical key.
pub fn enumerate_presheaves(base: &Arc<QCategory>, budget: usize) -> Result<Vec<Presheaf>> {
    let q = base.quantaloid().clone();
    if !q.enumerable() {
        return Err(Error::NotEnumerable(format!(
            "presheaves over {} cannot be enumerated",
            q.name()
        )));
    }
    let n = base.len();
    let mut found: Vec<Presheaf> = Vec::new();
    for x in 0..q.object_count() {
        let mut partial: Vec<Value> = Vec::new();
        search(base, &q, x, n, &mut partial, &mut found, budget)?;
    }
    found.sort_by_key(|p| p.canonical_key());
    return Ok(found);

    /// Checks the action pairs involving the most recently assigned object.
    fn consistent(base: &Arc<QCategory>, q: &Arc<crate::quantaloid::Quantaloid>, x: usize, partial: &[Value]) -> Result<bool> {
        let k = partial.len() - 1;
        for a in 0..partial.len() {
            for (hi, lo) in [(a, k), (k, a)] {
                let composed = q.compose_values(
                    x,
                    base.type_of(lo),
                    base.type_of(hi),
                    base.hom_value(hi, lo),
                    &partial[lo],
                )?;
                if !q.value_leq(x, base.type_of(hi), &composed, &partial[hi])? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn search(
        base: &Arc<QCategory>,
        q: &Arc<crate::quantaloid::Quantaloid>,
        x: usize,
        n: usize,
        partial: &mut Vec<Value>,
        found: &mut Vec<Presheaf>,
        budget: usize,
    ) -> Result<()> {
        if partial.len() == n {
            if found.len() + 1 > budget {
                return Err(Error::BudgetExceeded { needed: found.len() + 1, budget });
            }
            found.push(Presheaf::new(base.clone(), x, partial.clone())?);
            return Ok(());
        }
        let a = partial.len();
        for v in q.hom_elements(x, base.type_of(a))? {
            partial.push(v);
            if consistent(base, q, x, partial)? {
                search(base, q, x, n, partial, found, budget)?;
            }
            partial.pop();
        }
        Ok(())
    }
}

/// A materialized full subcategory of a presheaf category: the member
/// presheaves together with the Q-category they form under `presheaf_hom`.
#[derive(Debug, Clone, PartialEq)]
pub struct PresheafCat {
    base: Arc<QCategory>,
    cat: Arc<QCategory>,
    members: Vec<Presheaf>,
    index: BTreeMap<String, usize>,
}

impl PresheafCat {
    /// Builds the category on a list of presheaves over a common base;
    /// members are deduplicated by exact value equality and sorted by
    /// canonical key, so object order is input-order independent.
    pub fn build(base: Arc<QCategory>, members: Vec<Presheaf>) -> Result<Self> {
        let mut index = BTreeMap::new();
        let mut sorted: Vec<Presheaf> = Vec::new();
        let mut keyed: Vec<(String, Presheaf)> = members
            .into_iter()
            .map(|p| {
                if !same_category(p.base(), &base) {
                    return Err(Error::BaseMismatch);
                }
                Ok((p.canonical_key(), p))
            })
            .collect::<Result<Vec<_>>>()?;
        keyed.sort_by(|l, r| l.0.cmp(&r.0));
        keyed.dedup_by(|l, r| l.0 == r.0);
        for (key, p) in keyed {
            index.insert(key, sorted.len());
            sorted.push(p);
        }
        let n = sorted.len();
        let mut hom = vec![vec![Value::Elem(0); n]; n];
        #[allow(clippy::needless_range_loop)]
        for i in 0..n {
            for j in 0..n {
                hom[i][j] = presheaf_hom(&sorted[i], &sorted[j])?;
            }
        }
        let objects = sorted.iter().map(|p| p.canonical_key()).collect();
        let types = sorted.iter().map(|p| p.q_type()).collect();
        let cat = Arc::new(QCategory::new(base.quantaloid().clone(), objects, types, hom)?);
        Ok(PresheafCat { base, cat, members: sorted, index })
    }

    /// The full presheaf category on an enumerable base.
    pub fn full(base: Arc<QCategory>, budget: usize) -> Result<Self> {
        let members = enumerate_presheaves(&base, budget)?;
        Self::build(base, members)
    }

    pub fn base(&self) -> &Arc<QCategory> {
        &self.base
    }

    pub fn cat(&self) -> &Arc<QCategory> {
        &self.cat
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Presheaf] {
        &self.members
    }

    pub fn member(&self, ix: usize) -> &Presheaf {
        &self.members[ix]
    }

    pub fn find(&self, p: &Presheaf) -> Option<usize> {
        self.index.get(&p.canonical_key()).copied().filter(|&i| self.members[i] == *p)
    }

    fn locate(&self, p: &Presheaf) -> Result<usize> {
        self.find(p).ok_or_else(|| {
            Error::invalid("presheaf category", format!("presheaf {} is not an object", p.canonical_key()))
        })
    }

    /// The Yoneda embedding `a ↦ A(-, a)` into this category.
    pub fn yoneda(&self) -> Result<QFunctor> {
        let map = (0..self.base.len())
            .map(|a| self.locate(&Presheaf::representable(self.base.clone(), a)))
            .collect::<Result<Vec<_>>>()?;
        QFunctor::new(self.base.clone(), self.cat.clone(), map)
    }

    /// Classifies `Φ : B ⇸ base` as the functor `b ↦ Φ(-, b)`.
    pub fn classify(&self, phi: &Distributor) -> Result<QFunctor> {
        if !same_category(phi.cod(), &self.base) {
            return Err(Error::TypeMismatch("distributor does not land in this base".into()));
        }
        let map = (0..phi.dom().len())
            .map(|b| self.locate(&column(phi, b)))
            .collect::<Result<Vec<_>>>()?;
        QFunctor::new(phi.dom().clone(), self.cat.clone(), map)
    }

    /// Reads back the distributor classified by `F : B → P(base)`.
    pub fn declassify(&self, f: &QFunctor) -> Result<Distributor> {
        if !same_category(f.cod(), &self.cat) {
            return Err(Error::TypeMismatch("functor does not land in this presheaf category".into()));
        }
        let matrix = (0..self.base.len())
            .map(|a| (0..f.dom().len()).map(|b| self.members[f.apply(b)].value(a).clone()).collect())
            .collect();
        Distributor::new(f.dom().clone(), self.base.clone(), matrix)
    }

    /// The functor `Ψ ⊗ - ` between presheaf categories, for `Ψ : base ⇸ B`.
    pub fn transport(&self, psi: &Distributor, target: &PresheafCat) -> Result<QFunctor> {
        if !same_category(psi.dom(), &self.base) || !same_category(psi.cod(), &target.base) {
            return Err(Error::TypeMismatch("transport needs Ψ : base ⇸ target-base".into()));
        }
        let map = (0..self.len())
            .map(|i| {
                let composed = Distributor::compose(psi, &self.members[i].to_distributor())?;
                target.locate(&Presheaf::from_distributor(&composed)?)
            })
            .collect::<Result<Vec<_>>>()?;
        QFunctor::new(self.cat.clone(), target.cat.clone(), map)
    }

    /// Functor action of the free doctrine: `P(F) = B(-, F-) ⊗ -`.
    pub fn on_functor(&self, f: &QFunctor, target: &PresheafCat) -> Result<QFunctor> {
        self.transport(&f.induced_left(), target)
    }
}

/// The column presheaf `Φ(-, b)` of a distributor.
pub fn column(phi: &Distributor, b: usize) -> Presheaf {
    let values = (0..phi.cod().len()).map(|a| phi.value(a, b).clone()).collect();
    Presheaf::new(phi.cod().clone(), phi.dom().type_of(b), values).expect("column is well-shaped")
}

/// Result of a colimit search: the chosen functor plus, for every domain
/// object, the full set of objects satisfying the universal property.
#[derive(Debug, Clone)]
pub struct ColimOutcome {
    pub functor: QFunctor,
    pub witnesses: Vec<Vec<usize>>,
}

/// The `Φ`-weighted colimit of `F`, searched against the defining equation
/// `C(K-, -) = [Φ, C(F-, -)]`. Among tied witnesses the smallest object id
/// wins.
pub fn colim_with_witnesses(phi: &Distributor, f: &QFunctor) -> Result<ColimOutcome> {
    if !same_category(phi.cod(), f.dom()) {
        return Err(Error::TypeMismatch("weight codomain must be the functor domain".into()));
    }
    let c_cat = f.cod().clone();
    let required = Distributor::lifting(phi, &f.induced_right())?;
    let a_cat = phi.dom().clone();
    let mut witnesses: Vec<Vec<usize>> = Vec::with_capacity(a_cat.len());
    let mut map = Vec::with_capacity(a_cat.len());
    for a in 0..a_cat.len() {
        let mut here = Vec::new();
        for k in 0..c_cat.len() {
            if c_cat.type_of(k) != a_cat.type_of(a) {
                continue;
            }
            if (0..c_cat.len()).all(|c| c_cat.hom_value(k, c) == required.value(a, c)) {
                here.push(k);
            }
        }
        let chosen = here
            .iter()
            .copied()
            .min_by(|&l, &r| c_cat.object_id(l).cmp(c_cat.object_id(r)))
            .ok_or_else(|| Error::NotCocomplete { at: a_cat.object_id(a).to_string() })?;
        map.push(chosen);
        witnesses.push(here);
    }
    let functor = QFunctor::new(a_cat, c_cat, map)
        .map_err(|e| Error::invalid("colimit", format!("witness map is not a functor: {e}")))?;
    Ok(ColimOutcome { functor, witnesses })
}

pub fn colim(phi: &Distributor, f: &QFunctor) -> Result<QFunctor> {
    colim_with_witnesses(phi, f).map(|o| o.functor)
}

/// Colimit of a presheaf-category-valued functor: always exists, computed by
/// classification as `classify(declassify(F) ⊗ Φ)`.
pub fn colim_in_presheaf(phi: &Distributor, f: &QFunctor, target: &PresheafCat) -> Result<QFunctor> {
    let composed = Distributor::compose(&target.declassify(f)?, phi)?;
    target.classify(&composed)
}

/// Pointwise left Kan extension of `F` through `G`: the `C(G-,-)`-weighted
/// colimit of `F`.
pub fn kan_extension(f: &QFunctor, g: &QFunctor) -> Result<QFunctor> {
    if !same_category(f.dom(), g.dom()) {
        return Err(Error::TypeMismatch("kan extension needs a common domain".into()));
    }
    colim(&g.induced_right(), f)
}

/// The multiplication `P(P(A)) → P(A)` of the free cocompletion monad:
/// `φ ↦ colim(φ, 1_{P(A)})`.
pub fn free_mult(pcat: &PresheafCat, ppcat: &PresheafCat) -> Result<QFunctor> {
    if !same_category(ppcat.base(), pcat.cat()) {
        return Err(Error::TypeMismatch("outer category must be presheaves on the inner one".into()));
    }
    let eval = pcat.declassify(&QFunctor::identity(pcat.cat().clone()))?;
    let map = (0..ppcat.len())
        .map(|i| {
            let composed = Distributor::compose(&eval, &ppcat.member(i).to_distributor())?;
            let collapsed = Presheaf::from_distributor(&composed)?;
            pcat.find(&collapsed).ok_or_else(|| {
                Error::invalid("free multiplication", format!("collapse of {} missing", ppcat.member(i).canonical_key()))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    QFunctor::new(ppcat.cat().clone(), pcat.cat().clone(), map)
}

/// The unit of the free cocompletion monad: the Yoneda embedding.
pub fn free_unit(pcat: &PresheafCat) -> Result<QFunctor> {
    pcat.yoneda()
}

/// Whether a category admits a left adjoint to its Yoneda embedding, by
/// exhaustive search over object maps.
pub fn is_cocomplete(cat: &Arc<QCategory>, budget: usize) -> Result<bool> {
    let pcat = PresheafCat::full(cat.clone(), budget)?;
    let yon = pcat.yoneda()?;
    let candidates: Vec<Vec<usize>> = (0..pcat.len())
        .map(|i| cat.objects_of_type(pcat.cat().type_of(i)))
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return Ok(false); // a presheaf type has no object at all
    }
    candidates
        .iter()
        .try_fold(1usize, |acc, c| acc.checked_mul(c.len()).filter(|&t| t <= budget))
        .ok_or(Error::BudgetExceeded { needed: usize::MAX, budget })?;
    let mut choice = vec![0usize; pcat.len()];
    loop {
        let map: Vec<usize> = choice.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
        if let Ok(l) = QFunctor::new(pcat.cat().clone(), cat.clone(), map) {
            if crate::qcat::is_adjoint_pair(&l, &yon)? {
                return Ok(true);
            }
        }
        // advance the mixed-radix counter
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return Ok(false);
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
