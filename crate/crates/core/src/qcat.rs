//! Categories enriched in a quantaloid, their functors and distributors, and
//! the quantaloid Dist(Q): matrix composition, local joins, liftings and
//! extensions, induced adjoint distributors, and the standard predicates.

use crate::error::{Error, Result};
use crate::lattice::Violation;
use crate::quantaloid::{Arrow, Quantaloid, Value};
use std::sync::Arc;

/// A Q-category: typed objects with a hom matrix `hom[a'][a] : ta → ta'`
/// satisfying the identity and composition axioms.
#[derive(Debug, Clone, PartialEq)]
pub struct QCategory {
    quantaloid: Arc<Quantaloid>,
    objects: Vec<String>,
    types: Vec<usize>,
    hom: Vec<Vec<Value>>,
}

pub fn same_quantaloid(a: &Arc<Quantaloid>, b: &Arc<Quantaloid>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub fn same_category(a: &Arc<QCategory>, b: &Arc<QCategory>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl QCategory {
    /// Builds a category after shape checks only; axioms are reported by
    /// [`QCategory::validate`].
    pub fn new(
        quantaloid: Arc<Quantaloid>,
        objects: Vec<String>,
        types: Vec<usize>,
        hom: Vec<Vec<Value>>,
    ) -> Result<Self> {
        let n = objects.len();
        if types.len() != n || hom.len() != n || hom.iter().any(|row| row.len() != n) {
            return Err(Error::invalid("category", "hom matrix shape does not match objects"));
        }
        for &t in &types {
            if t >= quantaloid.object_count() {
                return Err(Error::invalid("category", "type function hits unknown quantaloid object"));
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for id in &objects {
            if !seen.insert(id.clone()) {
                return Err(Error::invalid("category", format!("duplicate object id {id:?}")));
            }
        }
        Ok(QCategory { quantaloid, objects, types, hom })
    }

    /// The one-object category on a quantaloid object, with identity hom.
    pub fn singleton(quantaloid: Arc<Quantaloid>, q_object: usize) -> Self {
        let id = quantaloid.identity_value(q_object);
        QCategory {
            quantaloid,
            objects: vec!["*".into()],
            types: vec![q_object],
            hom: vec![vec![id]],
        }
    }

    /// The least category structure above a seed matrix: identities are
    /// joined onto the diagonal and composites are joined in until fixpoint.
    pub fn from_generators(
        quantaloid: Arc<Quantaloid>,
        objects: Vec<String>,
        types: Vec<usize>,
        seed: Vec<Vec<Value>>,
    ) -> Result<Self> {
        let mut cat = QCategory::new(quantaloid, objects, types, seed)?;
        let q = cat.quantaloid.clone();
        let n = cat.len();
        for a in 0..n {
            let id = q.identity_value(cat.types[a]);
            cat.hom[a][a] = q.join_values(
                cat.types[a],
                cat.types[a],
                &[cat.hom[a][a].clone(), id],
            )?;
        }
        loop {
            let mut changed = false;
            for a2 in 0..n {
                for a0 in 0..n {
                    let mut parts = vec![cat.hom[a2][a0].clone()];
                    for a1 in 0..n {
                        parts.push(q.compose_values(
                            cat.types[a0],
                            cat.types[a1],
                            cat.types[a2],
                            &cat.hom[a2][a1],
                            &cat.hom[a1][a0],
                        )?);
                    }
                    let joined = q.join_values(cat.types[a0], cat.types[a2], &parts)?;
                    if joined != cat.hom[a2][a0] {
                        cat.hom[a2][a0] = joined;
                        changed = true;
                    }
                }
            }
            if !changed {
                return Ok(cat);
            }
        }
    }

    pub fn quantaloid(&self) -> &Arc<Quantaloid> {
        &self.quantaloid
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn object_ids(&self) -> &[String] {
        &self.objects
    }

    pub fn object_id(&self, ix: usize) -> &str {
        &self.objects[ix]
    }

    pub fn object_index(&self, id: &str) -> Result<usize> {
        self.objects
            .iter()
            .position(|o| o == id)
            .ok_or_else(|| Error::invalid("category", format!("unknown object {id:?}")))
    }

    pub fn type_of(&self, ix: usize) -> usize {
        self.types[ix]
    }

    pub fn types(&self) -> &[usize] {
        &self.types
    }

    /// Raw hom value `A(a', a)`.
    pub fn hom_value(&self, a_prime: usize, a: usize) -> &Value {
        &self.hom[a_prime][a]
    }

    pub fn hom_arrow(&self, a_prime: usize, a: usize) -> Arrow {
        Arrow::new(self.types[a], self.types[a_prime], self.hom[a_prime][a].clone())
    }

    /// Objects of a given type, in object order.
    pub fn objects_of_type(&self, q_object: usize) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.types[a] == q_object).collect()
    }

    /// The underlying order on objects: `a <= a'` iff they share a type and
    /// the identity is below `A(a, a')`.
    pub fn object_leq(&self, a: usize, a_prime: usize) -> Result<bool> {
        if self.types[a] != self.types[a_prime] {
            return Ok(false);
        }
        let t = self.types[a];
        self.quantaloid
            .value_leq(t, t, &self.quantaloid.identity_value(t), &self.hom[a][a_prime])
    }

    /// Exhaustive check of the identity and composition axioms.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let q = &self.quantaloid;
        let n = self.len();
        for a in 0..n {
            let t = self.types[a];
            match q.value_leq(t, t, &q.identity_value(t), &self.hom[a][a]) {
                Ok(true) => {}
                Ok(false) => out.push(Violation(format!(
                    "identity axiom fails at {}: 1 not below hom({0},{0})",
                    self.objects[a]
                ))),
                Err(e) => out.push(Violation(format!("hom({0},{0}) ill-typed: {e}", self.objects[a]))),
            }
        }
        for a2 in 0..n {
            for a1 in 0..n {
                for a0 in 0..n {
                    let composite = q.compose_values(
                        self.types[a0],
                        self.types[a1],
                        self.types[a2],
                        &self.hom[a2][a1],
                        &self.hom[a1][a0],
                    );
                    let ok = composite.and_then(|c| {
                        q.value_leq(self.types[a0], self.types[a2], &c, &self.hom[a2][a0])
                    });
                    match ok {
                        Ok(true) => {}
                        Ok(false) => out.push(Violation(format!(
                            "composition axiom fails at ({},{},{})",
                            self.objects[a2], self.objects[a1], self.objects[a0]
                        ))),
                        Err(e) => out.push(Violation(format!(
                            "hom entries at ({},{},{}) ill-typed: {e}",
                            self.objects[a2], self.objects[a1], self.objects[a0]
                        ))),
                    }
                }
            }
        }
        out
    }
}

/// A type-preserving, hom-non-decreasing map of Q-categories.
#[derive(Debug, Clone, PartialEq)]
pub struct QFunctor {
    dom: Arc<QCategory>,
    cod: Arc<QCategory>,
    map: Vec<usize>,
}

impl QFunctor {
    /// Builds and fully validates the functor axioms.
    pub fn new(dom: Arc<QCategory>, cod: Arc<QCategory>, map: Vec<usize>) -> Result<Self> {
        let f = Self::new_unchecked(dom, cod, map)?;
        let violations = f.validate();
        if let Some(v) = violations.first() {
            return Err(Error::InvalidFunctor(v.0.clone()));
        }
        Ok(f)
    }

    /// Shape checks only; pair with [`QFunctor::validate`].
    pub fn new_unchecked(dom: Arc<QCategory>, cod: Arc<QCategory>, map: Vec<usize>) -> Result<Self> {
        if !same_quantaloid(dom.quantaloid(), cod.quantaloid()) {
            return Err(Error::TypeMismatch("functor across different quantaloids".into()));
        }
        if map.len() != dom.len() {
            return Err(Error::InvalidFunctor("object map has wrong length".into()));
        }
        if map.iter().any(|&b| b >= cod.len()) {
            return Err(Error::InvalidFunctor("object map hits unknown codomain object".into()));
        }
        Ok(QFunctor { dom, cod, map })
    }

    pub fn identity(cat: Arc<QCategory>) -> Self {
        let map = (0..cat.len()).collect();
        QFunctor { dom: cat.clone(), cod: cat, map }
    }

    pub fn dom(&self) -> &Arc<QCategory> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<QCategory> {
        &self.cod
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &QFunctor) -> Result<QFunctor> {
        if !same_category(&other.cod, &self.dom) {
            return Err(Error::TypeMismatch("functor composition domains do not match".into()));
        }
        Ok(QFunctor {
            dom: other.dom.clone(),
            cod: self.cod.clone(),
            map: other.map.iter().map(|&a| self.map[a]).collect(),
        })
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let q = self.dom.quantaloid();
        for a in 0..self.dom.len() {
            if self.dom.type_of(a) != self.cod.type_of(self.map[a]) {
                out.push(Violation(format!(
                    "type not preserved at {}: t({}) differs",
                    self.dom.object_id(a),
                    self.cod.object_id(self.map[a])
                )));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for a1 in 0..self.dom.len() {
            for a0 in 0..self.dom.len() {
                let lhs = self.dom.hom_value(a1, a0);
                let rhs = self.cod.hom_value(self.map[a1], self.map[a0]);
                match q.value_leq(self.dom.type_of(a0), self.dom.type_of(a1), lhs, rhs) {
                    Ok(true) => {}
                    Ok(false) => out.push(Violation(format!(
                        "functoriality fails at ({},{})",
                        self.dom.object_id(a1),
                        self.dom.object_id(a0)
                    ))),
                    Err(e) => out.push(Violation(format!("ill-typed comparison: {e}"))),
                }
            }
        }
        out
    }

    /// The left adjoint induced distributor `B(-, F-) : A ⇸ B`.
    pub fn induced_left(&self) -> Distributor {
        let matrix = (0..self.cod.len())
            .map(|b| (0..self.dom.len()).map(|a| self.cod.hom_value(b, self.map[a]).clone()).collect())
            .collect();
        Distributor {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            matrix,
        }
    }

    /// The right adjoint induced distributor `B(F-, -) : B ⇸ A`.
    pub fn induced_right(&self) -> Distributor {
        let matrix = (0..self.dom.len())
            .map(|a| (0..self.cod.len()).map(|b| self.cod.hom_value(self.map[a], b).clone()).collect())
            .collect();
        Distributor {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            matrix,
        }
    }
}

/// `F <= G` in the (pre)order on parallel functors.
pub fn functor_leq(f: &QFunctor, g: &QFunctor) -> Result<bool> {
    if !same_category(&f.dom, &g.dom) || !same_category(&f.cod, &g.cod) {
        return Err(Error::TypeMismatch("functor order needs parallel functors".into()));
    }
    f.induced_left().leq(&g.induced_left())
}

/// Isomorphism in the functor order: mutual `functor_leq`.
pub fn functor_iso(f: &QFunctor, g: &QFunctor) -> Result<bool> {
    Ok(functor_leq(f, g)? && functor_leq(g, f)?)
}

pub fn is_fully_faithful(f: &QFunctor) -> bool {
    (0..f.dom.len()).all(|a1| {
        (0..f.dom.len()).all(|a0| f.dom.hom_value(a1, a0) == f.cod.hom_value(f.map[a1], f.map[a0]))
    })
}

/// `F ⊣ G` via the distributor criterion `B(F-, -) = A(-, G-)`.
pub fn is_adjoint_pair(f: &QFunctor, g: &QFunctor) -> Result<bool> {
    if !same_category(&f.cod, &g.dom) || !same_category(&g.cod, &f.dom) {
        return Err(Error::TypeMismatch("adjoint pair must be opposed".into()));
    }
    Ok(f.induced_right() == g.induced_left())
}

pub fn is_equivalence(f: &QFunctor) -> Result<bool> {
    if !is_fully_faithful(f) {
        return Ok(false);
    }
    let q = f.cod.quantaloid();
    'outer: for b in 0..f.cod.len() {
        for a in 0..f.dom.len() {
            let fa = f.map[a];
            if f.cod.type_of(b) != f.cod.type_of(fa) {
                continue;
            }
            let t = f.cod.type_of(b);
            let id = q.identity_value(t);
            if q.value_leq(t, t, &id, f.cod.hom_value(b, fa))?
                && q.value_leq(t, t, &id, f.cod.hom_value(fa, b))?
            {
                continue 'outer;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// A distributor `Φ : A ⇸ B`: a matrix `matrix[b][a] : ta → tb` compatible
/// with both category actions.
#[derive(Debug, Clone, PartialEq)]
pub struct Distributor {
    dom: Arc<QCategory>,
    cod: Arc<QCategory>,
    matrix: Vec<Vec<Value>>,
}

impl Distributor {
    pub fn new(dom: Arc<QCategory>, cod: Arc<QCategory>, matrix: Vec<Vec<Value>>) -> Result<Self> {
        if !same_quantaloid(dom.quantaloid(), cod.quantaloid()) {
            return Err(Error::TypeMismatch("distributor across different quantaloids".into()));
        }
        if matrix.len() != cod.len() || matrix.iter().any(|row| row.len() != dom.len()) {
            return Err(Error::invalid("distributor", "matrix shape does not match categories"));
        }
        Ok(Distributor { dom, cod, matrix })
    }

    /// The identity distributor: the hom matrix of the category.
    pub fn identity(cat: Arc<QCategory>) -> Self {
        let matrix = (0..cat.len())
            .map(|b| (0..cat.len()).map(|a| cat.hom_value(b, a).clone()).collect())
            .collect();
        Distributor { dom: cat.clone(), cod: cat, matrix }
    }

    /// All-bottom distributor.
    pub fn bottom(dom: Arc<QCategory>, cod: Arc<QCategory>) -> Result<Self> {
        let q = dom.quantaloid().clone();
        let matrix = (0..cod.len())
            .map(|b| {
                (0..dom.len())
                    .map(|a| q.bottom(dom.type_of(a), cod.type_of(b)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Distributor::new(dom, cod, matrix)
    }

    pub fn dom(&self) -> &Arc<QCategory> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<QCategory> {
        &self.cod
    }

    pub fn value(&self, b: usize, a: usize) -> &Value {
        &self.matrix[b][a]
    }

    pub fn matrix(&self) -> &Vec<Vec<Value>> {
        &self.matrix
    }

    /// Matrix composition `Ψ ⊗ Φ` with join-of-composites entries.
    pub fn compose(psi: &Distributor, phi: &Distributor) -> Result<Distributor> {
        if !same_category(&psi.dom, &phi.cod) {
            return Err(Error::TypeMismatch("distributor composition needs matching middle".into()));
        }
        let q = phi.dom.quantaloid().clone();
        let mid = &phi.cod;
        let mut matrix = Vec::with_capacity(psi.cod.len());
        for c in 0..psi.cod.len() {
            let mut row = Vec::with_capacity(phi.dom.len());
            for a in 0..phi.dom.len() {
                let mut parts = Vec::with_capacity(mid.len());
                for b in 0..mid.len() {
                    parts.push(q.compose_values(
                        phi.dom.type_of(a),
                        mid.type_of(b),
                        psi.cod.type_of(c),
                        &psi.matrix[c][b],
                        &phi.matrix[b][a],
                    )?);
                }
                row.push(q.join_values(phi.dom.type_of(a), psi.cod.type_of(c), &parts)?);
            }
            matrix.push(row);
        }
        Ok(Distributor {
            dom: phi.dom.clone(),
            cod: psi.cod.clone(),
            matrix,
        })
    }

    /// Elementwise join of a parallel family; the empty family is the bottom.
    pub fn join(dom: Arc<QCategory>, cod: Arc<QCategory>, family: &[&Distributor]) -> Result<Distributor> {
        for phi in family {
            if !same_category(&phi.dom, &dom) || !same_category(&phi.cod, &cod) {
                return Err(Error::TypeMismatch("join needs parallel distributors".into()));
            }
        }
        let q = dom.quantaloid().clone();
        let mut matrix = Vec::with_capacity(cod.len());
        for b in 0..cod.len() {
            let mut row = Vec::with_capacity(dom.len());
            for a in 0..dom.len() {
                let parts: Vec<Value> = family.iter().map(|phi| phi.matrix[b][a].clone()).collect();
                row.push(q.join_values(dom.type_of(a), cod.type_of(b), &parts)?);
            }
            matrix.push(row);
        }
        Distributor::new(dom, cod, matrix)
    }

    pub fn leq(&self, other: &Distributor) -> Result<bool> {
        if !same_category(&self.dom, &other.dom) || !same_category(&self.cod, &other.cod) {
            return Err(Error::TypeMismatch("order needs parallel distributors".into()));
        }
        let q = self.dom.quantaloid();
        for b in 0..self.cod.len() {
            for a in 0..self.dom.len() {
                if !q.value_leq(
                    self.dom.type_of(a),
                    self.cod.type_of(b),
                    &self.matrix[b][a],
                    &other.matrix[b][a],
                )? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Lifting in Dist(Q): the largest `X : A ⇸ B` with `Ψ ⊗ X <= Θ`,
    /// computed as a meet of pointwise liftings.
    pub fn lifting(psi: &Distributor, theta: &Distributor) -> Result<Distributor> {
        if !same_category(&psi.cod, &theta.cod) {
            return Err(Error::TypeMismatch("lifting needs a common codomain".into()));
        }
        let q = psi.dom.quantaloid().clone();
        let (a_cat, b_cat, c_cat) = (&theta.dom, &psi.dom, &psi.cod);
        let mut matrix = Vec::with_capacity(b_cat.len());
        for b in 0..b_cat.len() {
            let mut row = Vec::with_capacity(a_cat.len());
            for a in 0..a_cat.len() {
                let mut parts = Vec::with_capacity(c_cat.len());
                for c in 0..c_cat.len() {
                    let g = Arrow::new(b_cat.type_of(b), c_cat.type_of(c), psi.matrix[c][b].clone());
                    let h = Arrow::new(a_cat.type_of(a), c_cat.type_of(c), theta.matrix[c][a].clone());
                    parts.push(q.lifting(&g, &h)?.value);
                }
                row.push(q.meet_values(a_cat.type_of(a), b_cat.type_of(b), &parts)?);
            }
            matrix.push(row);
        }
        Ok(Distributor {
            dom: a_cat.clone(),
            cod: b_cat.clone(),
            matrix,
        })
    }

    /// Extension in Dist(Q): the largest `X : B ⇸ C` with `X ⊗ Φ <= Θ`.
    pub fn extension(phi: &Distributor, theta: &Distributor) -> Result<Distributor> {
        if !same_category(&phi.dom, &theta.dom) {
            return Err(Error::TypeMismatch("extension needs a common domain".into()));
        }
        let q = phi.dom.quantaloid().clone();
        let (a_cat, b_cat, c_cat) = (&phi.dom, &phi.cod, &theta.cod);
        let mut matrix = Vec::with_capacity(c_cat.len());
        for c in 0..c_cat.len() {
            let mut row = Vec::with_capacity(b_cat.len());
            for b in 0..b_cat.len() {
                let mut parts = Vec::with_capacity(a_cat.len());
                for a in 0..a_cat.len() {
                    let f = Arrow::new(a_cat.type_of(a), b_cat.type_of(b), phi.matrix[b][a].clone());
                    let h = Arrow::new(a_cat.type_of(a), c_cat.type_of(c), theta.matrix[c][a].clone());
                    parts.push(q.extension(&f, &h)?.value);
                }
                row.push(q.meet_values(b_cat.type_of(b), c_cat.type_of(c), &parts)?);
            }
            matrix.push(row);
        }
        Ok(Distributor {
            dom: b_cat.clone(),
            cod: c_cat.clone(),
            matrix,
        })
    }

    /// Exhaustive check of both action axioms.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let q = self.dom.quantaloid();
        let (a_cat, b_cat) = (&self.dom, &self.cod);
        for b in 0..b_cat.len() {
            for a1 in 0..a_cat.len() {
                for a0 in 0..a_cat.len() {
                    let acted = q
                        .compose_values(
                            a_cat.type_of(a0),
                            a_cat.type_of(a1),
                            b_cat.type_of(b),
                            &self.matrix[b][a1],
                            a_cat.hom_value(a1, a0),
                        )
                        .and_then(|c| {
                            q.value_leq(a_cat.type_of(a0), b_cat.type_of(b), &c, &self.matrix[b][a0])
                        });
                    if !matches!(acted, Ok(true)) {
                        out.push(Violation(format!(
                            "domain action fails at ({},{},{})",
                            b_cat.object_id(b),
                            a_cat.object_id(a1),
                            a_cat.object_id(a0)
                        )));
                    }
                }
            }
        }
        for b1 in 0..b_cat.len() {
            for b0 in 0..b_cat.len() {
                for a in 0..a_cat.len() {
                    let acted = q
                        .compose_values(
                            a_cat.type_of(a),
                            b_cat.type_of(b0),
                            b_cat.type_of(b1),
                            b_cat.hom_value(b1, b0),
                            &self.matrix[b0][a],
                        )
                        .and_then(|c| {
                            q.value_leq(a_cat.type_of(a), b_cat.type_of(b1), &c, &self.matrix[b1][a])
                        });
                    if !matches!(acted, Ok(true)) {
                        out.push(Violation(format!(
                            "codomain action fails at ({},{},{})",
                            b_cat.object_id(b1),
                            b_cat.object_id(b0),
                            a_cat.object_id(a)
                        )));
                    }
                }
            }
        }
        out
    }

    /// The least valid distributor above a raw matrix: both actions are
    /// applied by pre- and post-composing with the identity distributors.
    pub fn saturate(dom: Arc<QCategory>, cod: Arc<QCategory>, matrix: Vec<Vec<Value>>) -> Result<Distributor> {
        let raw = Distributor::new(dom.clone(), cod.clone(), matrix)?;
        let with_cod = Distributor::compose(&Distributor::identity(cod), &raw)?;
        Distributor::compose(&with_cod, &Distributor::identity(dom))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ExtRational;

    fn arc(q: Quantaloid) -> Arc<Quantaloid> {
        Arc::new(q)
    }

    /// The preorder x <= y over BOOL as a Q-category.
    pub(crate) fn bool_chain2() -> Arc<QCategory> {
        let q = arc(Quantaloid::boolean());
        let t = Value::Elem(1);
        let f = Value::Elem(0);
        Arc::new(
            QCategory::new(
                q,
                vec!["x".into(), "y".into()],
                vec![0, 0],
                // A(a',a) = true iff a' is below a in the preorder
                vec![vec![t.clone(), t.clone()], vec![f, t]],
            )
            .unwrap(),
        )
    }

    fn law_cat(dists: &[&[&str]]) -> Arc<QCategory> {
        let q = arc(Quantaloid::lawvere());
        let n = dists.len();
        let matrix: Vec<Vec<Value>> = (0..n)
            .map(|i| (0..n).map(|j| Value::Ext(dists[i][j].parse::<ExtRational>().unwrap())).collect())
            .collect();
        let objects = (0..n).map(|i| format!("p{i}")).collect();
        Arc::new(QCategory::new(q, objects, vec![0; n], matrix).unwrap())
    }

    #[test]
    fn chain_category_is_valid() {
        let cat = bool_chain2();
        assert!(cat.validate().is_empty());
        // x <= y in the object order
        assert!(cat.object_leq(0, 1).unwrap());
        assert!(!cat.object_leq(1, 0).unwrap());
    }

    #[test]
    fn identity_distributor_is_unit() {
        let cat = bool_chain2();
        let id = Distributor::identity(cat.clone());
        let composed = Distributor::compose(&id, &id).unwrap();
        assert_eq!(composed, id);
        assert!(id.validate().is_empty());
    }

    #[test]
    fn metric_category_composition() {
        // three points on a line: 0, 1, 4
        let cat = law_cat(&[
            &["0", "1", "4"],
            &["1", "0", "3"],
            &["4", "3", "0"],
        ]);
        assert!(cat.validate().is_empty());
        let id = Distributor::identity(cat.clone());
        let sq = Distributor::compose(&id, &id).unwrap();
        // d is already triangle-closed, so composing with itself changes nothing
        assert_eq!(sq, id);
    }

    #[test]
    fn induced_distributors_are_adjoint() {
        let cat = bool_chain2();
        let f = QFunctor::identity(cat.clone());
        assert_eq!(f.induced_left(), Distributor::identity(cat.clone()));
        assert_eq!(f.induced_right(), Distributor::identity(cat.clone()));
        // unit and counit of the induced adjunction
        let unit_rhs = Distributor::compose(&f.induced_right(), &f.induced_left()).unwrap();
        assert!(Distributor::identity(cat.clone()).leq(&unit_rhs).unwrap());
        let counit_lhs = Distributor::compose(&f.induced_left(), &f.induced_right()).unwrap();
        assert!(counit_lhs.leq(&Distributor::identity(cat)).unwrap());
    }

    #[test]
    fn functor_order_is_pointwise_on_preorders() {
        let cat = bool_chain2();
        let fx = QFunctor::new(cat.clone(), cat.clone(), vec![0, 0]).unwrap();
        let fy = QFunctor::new(cat.clone(), cat.clone(), vec![0, 1]).unwrap();
        assert!(functor_leq(&fx, &fy).unwrap());
        assert!(!functor_leq(&fy, &fx).unwrap());
        assert!(functor_iso(&fx, &fx).unwrap());
    }

    #[test]
    fn functor_order_is_a_preorder_not_a_partial_order() {
        // two isomorphic but distinct objects: the pointwise-distinct
        // constant functors are mutually below each other
        let q = arc(Quantaloid::boolean());
        let t = Value::Elem(1);
        let codiscrete = Arc::new(
            QCategory::new(
                q,
                vec!["x".into(), "y".into()],
                vec![0, 0],
                vec![vec![t.clone(), t.clone()], vec![t.clone(), t]],
            )
            .unwrap(),
        );
        let fx = QFunctor::new(codiscrete.clone(), codiscrete.clone(), vec![0, 0]).unwrap();
        let fy = QFunctor::new(codiscrete.clone(), codiscrete, vec![1, 1]).unwrap();
        assert_ne!(fx, fy);
        assert!(functor_leq(&fx, &fy).unwrap());
        assert!(functor_leq(&fy, &fx).unwrap());
    }

    #[test]
    fn constant_collapse_is_not_fully_faithful() {
        let cat = bool_chain2();
        let collapse = QFunctor::new(cat.clone(), cat.clone(), vec![1, 1]).unwrap();
        assert!(!is_fully_faithful(&collapse));
        assert!(is_fully_faithful(&QFunctor::identity(cat)));
    }

    #[test]
    fn galois_connection_is_adjoint_pair() {
        let cat = bool_chain2();
        // floor ⊣ inclusion on the 2-chain: here identity ⊣ identity
        let idf = QFunctor::identity(cat.clone());
        assert!(is_adjoint_pair(&idf, &idf).unwrap());
        // collapse-to-top is left adjoint to collapse-to-top? No: check a
        // genuine non-adjoint pair.
        let collapse = QFunctor::new(cat.clone(), cat.clone(), vec![1, 1]).unwrap();
        assert!(!is_adjoint_pair(&collapse, &idf).unwrap());
    }

    #[test]
    fn equivalence_detects_missing_iso_class() {
        let cat = bool_chain2();
        let q = cat.quantaloid().clone();
        let single = Arc::new(QCategory::singleton(q, 0));
        let incl = QFunctor::new(single.clone(), cat.clone(), vec![1]).unwrap();
        assert!(is_fully_faithful(&incl));
        assert!(!is_equivalence(&incl).unwrap(), "misses the iso-class of x");
        assert!(is_equivalence(&QFunctor::identity(cat)).unwrap());
    }

    #[test]
    fn invalid_functor_is_rejected() {
        let cat = bool_chain2();
        // y ↦ x, x ↦ y is not monotone
        assert!(QFunctor::new(cat.clone(), cat, vec![1, 0]).is_err());
    }

    #[test]
    fn dist_lifting_galois_small() {
        let cat = bool_chain2();
        let id = Distributor::identity(cat.clone());
        let lifted = Distributor::lifting(&id, &id).unwrap();
        assert_eq!(lifted, id, "lifting of the identity through itself");
        let ext = Distributor::extension(&id, &id).unwrap();
        assert_eq!(ext, id);
    }

    #[test]
    fn saturate_produces_valid_distributor() {
        let cat = bool_chain2();
        let raw = vec![
            vec![Value::Elem(0), Value::Elem(1)],
            vec![Value::Elem(0), Value::Elem(0)],
        ];
        let phi = Distributor::saturate(cat.clone(), cat, raw).unwrap();
        assert!(phi.validate().is_empty());
    }
}
