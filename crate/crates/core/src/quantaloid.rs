//! Quantaloids: hom sup-lattices, join-preserving composition, identities,
//! and the residuation operations (liftings and extensions).
//!
//! Two value regimes sit behind one interface: finite table-driven instances
//! (every hom an explicit [`SupLattice`]) and the symbolic Lawvere quantale of
//! extended nonnegative rationals with closed-form residuation.

use crate::error::{Error, Result};
use crate::lattice::{SupLattice, Violation};
use crate::rational::ExtRational;
use std::collections::BTreeMap;
use std::fmt;

/// An element of some hom: a lattice element index or a Lawvere value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Value {
    Elem(usize),
    Ext(ExtRational),
}

/// An arrow of a quantaloid: source and destination object indices plus a
/// value in `hom(src, dst)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub src: usize,
    pub dst: usize,
    pub value: Value,
}

impl Arrow {
    pub fn new(src: usize, dst: usize, value: Value) -> Self {
        Arrow { src, dst, value }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Backend {
    Table {
        objects: Vec<String>,
        /// hom(x, y) keyed by (x, y): arrows from x to y.
        homs: BTreeMap<(usize, usize), SupLattice>,
        /// compose for (x, y, z): `[g][f]` with g in hom(y,z), f in hom(x,y),
        /// result in hom(x,z).
        compose: BTreeMap<(usize, usize, usize), Vec<Vec<usize>>>,
        identities: Vec<usize>,
    },
    Lawvere,
}

/// A small quantaloid, immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Quantaloid {
    name: String,
    backend: Backend,
}

impl fmt::Display for Quantaloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl Quantaloid {
    /// The two-element Boolean quantale: one object, `compose = and`.
    pub fn boolean() -> Self {
        let lat = SupLattice::chain(vec!["false".into(), "true".into()]);
        let compose = vec![vec![0, 0], vec![0, 1]];
        Self::one_object_table("bool", lat, compose, 1).expect("bool is valid")
    }

    /// The n-element chain quantale with `compose = min` and identity the top.
    pub fn chain(n: usize) -> Self {
        assert!(n >= 1, "chain quantale needs at least one element");
        let lat = SupLattice::chain((0..n).map(|i| i.to_string()).collect());
        let compose = (0..n).map(|g| (0..n).map(|f| g.min(f)).collect()).collect();
        Self::one_object_table(&format!("chain:{n}"), lat, compose, n - 1).expect("chain is valid")
    }

    /// Lawvere's quantale of extended nonnegative rationals: the quantale
    /// order is the reversed numeric order, composition is truncated addition.
    pub fn lawvere() -> Self {
        Quantaloid {
            name: "lawvere".into(),
            backend: Backend::Lawvere,
        }
    }

    /// Selects a built-in by name: `bool`, `chain:n`, or `lawvere`.
    pub fn builtin(name: &str) -> Result<Self> {
        if name == "bool" {
            Ok(Self::boolean())
        } else if name == "lawvere" {
            Ok(Self::lawvere())
        } else if let Some(n) = name.strip_prefix("chain:") {
            let n: usize = n
                .parse()
                .map_err(|_| Error::parse(format!("bad chain size in {name:?}")))?;
            if n == 0 {
                return Err(Error::parse("chain size must be positive"));
            }
            Ok(Self::chain(n))
        } else {
            Err(Error::parse(format!("unknown built-in quantaloid {name:?}")))
        }
    }

    /// One-object table quantale.
    pub fn one_object_table(
        name: &str,
        hom: SupLattice,
        compose: Vec<Vec<usize>>,
        identity: usize,
    ) -> Result<Self> {
        let mut homs = BTreeMap::new();
        homs.insert((0, 0), hom);
        let mut compose_map = BTreeMap::new();
        compose_map.insert((0, 0, 0), compose);
        Self::table(name, vec!["*".into()], homs, compose_map, vec![identity])
    }

    /// General table quantaloid. Checks shape and coverage, not the axioms;
    /// run [`Quantaloid::validate`] for those.
    pub fn table(
        name: &str,
        objects: Vec<String>,
        homs: BTreeMap<(usize, usize), SupLattice>,
        compose: BTreeMap<(usize, usize, usize), Vec<Vec<usize>>>,
        identities: Vec<usize>,
    ) -> Result<Self> {
        let n = objects.len();
        if identities.len() != n {
            return Err(Error::invalid("quantaloid", "one identity per object required"));
        }
        for x in 0..n {
            for y in 0..n {
                if !homs.contains_key(&(x, y)) {
                    return Err(Error::invalid(
                        "quantaloid",
                        format!("missing hom({},{})", objects[x], objects[y]),
                    ));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let table = compose.get(&(x, y, z)).ok_or_else(|| {
                        Error::invalid(
                            "quantaloid",
                            format!("missing compose table {}|{}|{}", objects[x], objects[y], objects[z]),
                        )
                    })?;
                    let ng = homs[&(y, z)].len();
                    let nf = homs[&(x, y)].len();
                    let nr = homs[&(x, z)].len();
                    if table.len() != ng || table.iter().any(|row| row.len() != nf) {
                        return Err(Error::invalid(
                            "quantaloid",
                            format!("compose table {}|{}|{} has wrong shape", objects[x], objects[y], objects[z]),
                        ));
                    }
                    if table.iter().flatten().any(|&r| r >= nr) {
                        return Err(Error::invalid(
                            "quantaloid",
                            format!("compose table {}|{}|{} has out-of-range result", objects[x], objects[y], objects[z]),
                        ));
                    }
                }
            }
        }
        for (x, &id) in identities.iter().enumerate() {
            if id >= homs[&(x, x)].len() {
                return Err(Error::invalid("quantaloid", format!("identity of {} out of range", objects[x])));
            }
        }
        Ok(Quantaloid {
            name: name.into(),
            backend: Backend::Table { objects, homs, compose, identities },
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// True iff every hom is a finite lattice.
    pub fn enumerable(&self) -> bool {
        matches!(self.backend, Backend::Table { .. })
    }

    pub fn objects(&self) -> Vec<String> {
        match &self.backend {
            Backend::Table { objects, .. } => objects.clone(),
            Backend::Lawvere => vec!["*".into()],
        }
    }

    pub fn object_count(&self) -> usize {
        match &self.backend {
            Backend::Table { objects, .. } => objects.len(),
            Backend::Lawvere => 1,
        }
    }

    pub fn object_index(&self, id: &str) -> Result<usize> {
        match &self.backend {
            Backend::Table { objects, .. } => objects
                .iter()
                .position(|o| o == id)
                .ok_or_else(|| Error::TypeMismatch(format!("unknown object {id:?} in {}", self.name))),
            Backend::Lawvere => {
                if id == "*" {
                    Ok(0)
                } else {
                    Err(Error::TypeMismatch(format!("unknown object {id:?} in lawvere")))
                }
            }
        }
    }

    pub fn object_id(&self, ix: usize) -> String {
        match &self.backend {
            Backend::Table { objects, .. } => objects[ix].clone(),
            Backend::Lawvere => "*".into(),
        }
    }

    pub fn hom_lattice(&self, src: usize, dst: usize) -> Result<&SupLattice> {
        match &self.backend {
            Backend::Table { homs, .. } => Ok(&homs[&(src, dst)]),
            Backend::Lawvere => Err(Error::NotEnumerable("lawvere homs are infinite".into())),
        }
    }

    /// All elements of `hom(src, dst)`; enumerable backends only.
    pub fn hom_elements(&self, src: usize, dst: usize) -> Result<Vec<Value>> {
        let lat = self.hom_lattice(src, dst)?;
        Ok((0..lat.len()).map(Value::Elem).collect())
    }

    fn expect_elem(&self, v: &Value) -> Result<usize> {
        match v {
            Value::Elem(e) => Ok(*e),
            Value::Ext(_) => Err(Error::TypeMismatch("rational value in a table quantaloid".into())),
        }
    }

    fn expect_ext<'v>(&self, v: &'v Value) -> Result<&'v ExtRational> {
        match v {
            Value::Ext(r) => Ok(r),
            Value::Elem(_) => Err(Error::TypeMismatch("lattice element in the lawvere quantale".into())),
        }
    }

    /// Order of `hom(src, dst)`. For Lawvere this is the reversed numeric
    /// order: `a <= b` iff `a >= b` as numbers.
    pub fn value_leq(&self, src: usize, dst: usize, a: &Value, b: &Value) -> Result<bool> {
        match &self.backend {
            Backend::Table { .. } => {
                let lat = self.hom_lattice(src, dst)?;
                Ok(lat.leq(self.expect_elem(a)?, self.expect_elem(b)?))
            }
            Backend::Lawvere => Ok(self.expect_ext(a)? >= self.expect_ext(b)?),
        }
    }

    pub fn join_values(&self, src: usize, dst: usize, values: &[Value]) -> Result<Value> {
        match &self.backend {
            Backend::Table { .. } => {
                let lat = self.hom_lattice(src, dst)?;
                let ixs: Vec<usize> = values.iter().map(|v| self.expect_elem(v)).collect::<Result<_>>()?;
                Ok(Value::Elem(lat.join(&ixs)?))
            }
            Backend::Lawvere => {
                // Join is the numeric infimum; the empty join is the bottom ∞.
                let mut acc = ExtRational::Infinity;
                for v in values {
                    acc = acc.min(self.expect_ext(v)?.clone());
                }
                Ok(Value::Ext(acc))
            }
        }
    }

    pub fn meet_values(&self, src: usize, dst: usize, values: &[Value]) -> Result<Value> {
        match &self.backend {
            Backend::Table { .. } => {
                let lat = self.hom_lattice(src, dst)?;
                let ixs: Vec<usize> = values.iter().map(|v| self.expect_elem(v)).collect::<Result<_>>()?;
                Ok(Value::Elem(lat.meet(&ixs)?))
            }
            Backend::Lawvere => {
                // Meet is the numeric supremum; the empty meet is the top 0.
                let mut acc = ExtRational::zero();
                for v in values {
                    acc = acc.max(self.expect_ext(v)?.clone());
                }
                Ok(Value::Ext(acc))
            }
        }
    }

    pub fn bottom(&self, src: usize, dst: usize) -> Result<Value> {
        self.join_values(src, dst, &[])
    }

    pub fn top(&self, src: usize, dst: usize) -> Result<Value> {
        self.meet_values(src, dst, &[])
    }

    pub fn identity(&self, x: usize) -> Arrow {
        match &self.backend {
            Backend::Table { identities, .. } => Arrow::new(x, x, Value::Elem(identities[x])),
            Backend::Lawvere => Arrow::new(0, 0, Value::Ext(ExtRational::zero())),
        }
    }

    pub fn identity_value(&self, x: usize) -> Value {
        self.identity(x).value
    }

    /// `g ∘ f` for `f: X→Y`, `g: Y→Z`.
    pub fn compose(&self, g: &Arrow, f: &Arrow) -> Result<Arrow> {
        if f.dst != g.src {
            return Err(Error::TypeMismatch(format!(
                "cannot compose: f lands in {} but g starts at {}",
                self.object_id(f.dst),
                self.object_id(g.src)
            )));
        }
        let value = self.compose_values(f.src, f.dst, g.dst, &g.value, &f.value)?;
        Ok(Arrow::new(f.src, g.dst, value))
    }

    /// Raw composition on values: `g in hom(y,z)`, `f in hom(x,y)`.
    pub fn compose_values(&self, x: usize, y: usize, z: usize, g: &Value, f: &Value) -> Result<Value> {
        match &self.backend {
            Backend::Table { compose, .. } => {
                let g = self.expect_elem(g)?;
                let f = self.expect_elem(f)?;
                Ok(Value::Elem(compose[&(x, y, z)][g][f]))
            }
            Backend::Lawvere => Ok(Value::Ext(self.expect_ext(g)?.add(self.expect_ext(f)?))),
        }
    }

    /// The lifting `[g, h]` of `h: A→C` through `g: B→C`: the largest
    /// `x: A→B` with `g ∘ x <= h`.
    pub fn lifting(&self, g: &Arrow, h: &Arrow) -> Result<Arrow> {
        if g.dst != h.dst {
            return Err(Error::TypeMismatch("lifting needs a common codomain".into()));
        }
        let (a, b, c) = (h.src, g.src, g.dst);
        match &self.backend {
            Backend::Table { .. } => {
                let mut solutions = Vec::new();
                for x in self.hom_elements(a, b)? {
                    let gx = self.compose_values(a, b, c, &g.value, &x)?;
                    if self.value_leq(a, c, &gx, &h.value)? {
                        solutions.push(x);
                    }
                }
                Ok(Arrow::new(a, b, self.join_values(a, b, &solutions)?))
            }
            Backend::Lawvere => {
                let gv = self.expect_ext(&g.value)?;
                let hv = self.expect_ext(&h.value)?;
                Ok(Arrow::new(a, b, Value::Ext(hv.monus(gv))))
            }
        }
    }

    /// The extension `{f, h}` of `h: A→C` through `f: A→B`: the largest
    /// `x: B→C` with `x ∘ f <= h`.
    pub fn extension(&self, f: &Arrow, h: &Arrow) -> Result<Arrow> {
        if f.src != h.src {
            return Err(Error::TypeMismatch("extension needs a common domain".into()));
        }
        let (a, b, c) = (f.src, f.dst, h.dst);
        match &self.backend {
            Backend::Table { .. } => {
                let mut solutions = Vec::new();
                for x in self.hom_elements(b, c)? {
                    let xf = self.compose_values(a, b, c, &x, &f.value)?;
                    if self.value_leq(a, c, &xf, &h.value)? {
                        solutions.push(x);
                    }
                }
                Ok(Arrow::new(b, c, self.join_values(b, c, &solutions)?))
            }
            Backend::Lawvere => {
                let fv = self.expect_ext(&f.value)?;
                let hv = self.expect_ext(&h.value)?;
                Ok(Arrow::new(b, c, Value::Ext(hv.monus(fv))))
            }
        }
    }

    /// Right adjoint of `f`, if any. The only candidate is the lifting of the
    /// identity through `f`; the counit then holds by construction and only
    /// the unit needs checking.
    pub fn right_adjoint(&self, f: &Arrow) -> Result<Option<Arrow>> {
        let candidate = self.lifting(f, &self.identity(f.dst))?;
        let gf = self.compose(&candidate, f)?;
        let unit_ok = self.value_leq(f.src, f.src, &self.identity_value(f.src), &gf.value)?;
        Ok(unit_ok.then_some(candidate))
    }

    /// Left adjoint of `f`, if any; dual to [`Quantaloid::right_adjoint`].
    pub fn left_adjoint(&self, f: &Arrow) -> Result<Option<Arrow>> {
        let candidate = self.extension(f, &self.identity(f.src))?;
        let fg = self.compose(f, &candidate)?;
        let unit_ok = self.value_leq(f.dst, f.dst, &self.identity_value(f.dst), &fg.value)?;
        Ok(unit_ok.then_some(candidate))
    }

    /// Exhaustive axiom check for enumerable instances: hom completeness,
    /// unit laws, associativity, and join preservation in each variable.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let Backend::Table { objects, homs, identities, .. } = &self.backend else {
            return out; // symbolic instances are valid by construction
        };
        let n = objects.len();
        for x in 0..n {
            for y in 0..n {
                let lat = &homs[&(x, y)];
                for v in lat.validate() {
                    out.push(Violation(format!("hom({},{}): {}", objects[x], objects[y], v)));
                }
            }
        }
        if !out.is_empty() {
            return out; // axiom scans below assume complete homs
        }
        let id = |x: usize| Value::Elem(identities[x]);
        for x in 0..n {
            for y in 0..n {
                for f in self.hom_elements(x, y).unwrap() {
                    let left = self.compose_values(x, y, y, &id(y), &f).unwrap();
                    if left != f {
                        out.push(Violation(format!(
                            "unit law fails: 1_{} ∘ {} ≠ {}",
                            objects[y],
                            self.render_value(x, y, &f),
                            self.render_value(x, y, &f)
                        )));
                    }
                    let right = self.compose_values(x, x, y, &f, &id(x)).unwrap();
                    if right != f {
                        out.push(Violation(format!(
                            "unit law fails: {} ∘ 1_{} ≠ {}",
                            self.render_value(x, y, &f),
                            objects[x],
                            self.render_value(x, y, &f)
                        )));
                    }
                }
            }
        }
        for w in 0..n {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        for h in self.hom_elements(y, z).unwrap() {
                            for g in self.hom_elements(x, y).unwrap() {
                                for f in self.hom_elements(w, x).unwrap() {
                                    let hg = self.compose_values(x, y, z, &h, &g).unwrap();
                                    let lhs = self.compose_values(w, x, z, &hg, &f).unwrap();
                                    let gf = self.compose_values(w, x, y, &g, &f).unwrap();
                                    let rhs = self.compose_values(w, y, z, &h, &gf).unwrap();
                                    if lhs != rhs {
                                        out.push(Violation(format!(
                                            "associativity fails at ({},{},{})",
                                            self.render_value(y, z, &h),
                                            self.render_value(x, y, &g),
                                            self.render_value(w, x, &f)
                                        )));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let bot_xy = self.bottom(x, y).unwrap();
                    let bot_xz = self.bottom(x, z).unwrap();
                    let bot_yz = self.bottom(y, z).unwrap();
                    for g in self.hom_elements(y, z).unwrap() {
                        if self.compose_values(x, y, z, &g, &bot_xy).unwrap() != bot_xz {
                            out.push(Violation(format!(
                                "compose({},-) does not preserve the empty join",
                                self.render_value(y, z, &g)
                            )));
                        }
                        let fs = self.hom_elements(x, y).unwrap();
                        for f1 in &fs {
                            for f2 in &fs {
                                let join = self.join_values(x, y, &[f1.clone(), f2.clone()]).unwrap();
                                let lhs = self.compose_values(x, y, z, &g, &join).unwrap();
                                let c1 = self.compose_values(x, y, z, &g, f1).unwrap();
                                let c2 = self.compose_values(x, y, z, &g, f2).unwrap();
                                let rhs = self.join_values(x, z, &[c1, c2]).unwrap();
                                if lhs != rhs {
                                    out.push(Violation(format!(
                                        "compose({},-) fails on the join of {} and {}",
                                        self.render_value(y, z, &g),
                                        self.render_value(x, y, f1),
                                        self.render_value(x, y, f2)
                                    )));
                                }
                            }
                        }
                    }
                    for f in self.hom_elements(x, y).unwrap() {
                        if self.compose_values(x, y, z, &bot_yz, &f).unwrap() != bot_xz {
                            out.push(Violation(format!(
                                "compose(-,{}) does not preserve the empty join",
                                self.render_value(x, y, &f)
                            )));
                        }
                        let gs = self.hom_elements(y, z).unwrap();
                        for g1 in &gs {
                            for g2 in &gs {
                                let join = self.join_values(y, z, &[g1.clone(), g2.clone()]).unwrap();
                                let lhs = self.compose_values(x, y, z, &join, &f).unwrap();
                                let c1 = self.compose_values(x, y, z, g1, &f).unwrap();
                                let c2 = self.compose_values(x, y, z, g2, &f).unwrap();
                                let rhs = self.join_values(x, z, &[c1, c2]).unwrap();
                                if lhs != rhs {
                                    out.push(Violation(format!(
                                        "compose(-,{}) fails on the join of {} and {}",
                                        self.render_value(x, y, &f),
                                        self.render_value(y, z, g1),
                                        self.render_value(y, z, g2)
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Human/JSON form of a value of `hom(src, dst)`.
    pub fn render_value(&self, src: usize, dst: usize, v: &Value) -> String {
        match (&self.backend, v) {
            (Backend::Table { homs, .. }, Value::Elem(e)) => homs[&(src, dst)].id_of(*e).to_string(),
            (Backend::Lawvere, Value::Ext(r)) => r.to_string(),
            _ => "<mismatched value>".into(),
        }
    }

    /// Parses a rendered value back into `hom(src, dst)`.
    pub fn parse_value(&self, src: usize, dst: usize, text: &str) -> Result<Value> {
        match &self.backend {
            Backend::Table { homs, .. } => Ok(Value::Elem(homs[&(src, dst)].index_of(text)?)),
            Backend::Lawvere => {
                let r: ExtRational = text.parse().map_err(|e| Error::parse(format!("{e}")))?;
                Ok(Value::Ext(r))
            }
        }
    }

    pub fn lawvere_value(r: ExtRational) -> Value {
        Value::Ext(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ext(s: &str) -> Value {
        Value::Ext(s.parse().unwrap())
    }

    fn law_arrow(s: &str) -> Arrow {
        Arrow::new(0, 0, ext(s))
    }

    #[test]
    fn bool_compose_is_and() {
        let q = Quantaloid::boolean();
        let t = q.identity(0); // true
        let composed = q.compose(&t, &t).unwrap();
        assert_eq!(composed.value, Value::Elem(1));
        assert!(q.validate().is_empty());
    }

    #[test]
    fn lawvere_compose_is_truncated_addition() {
        let q = Quantaloid::lawvere();
        let c = q.compose(&law_arrow("2"), &law_arrow("1.5")).unwrap();
        assert_eq!(c.value, ext("3.5"));
        let c = q.compose(&law_arrow("inf"), &law_arrow("1")).unwrap();
        assert_eq!(c.value, ext("inf"));
    }

    #[test]
    fn chain_compose_is_min() {
        let q = Quantaloid::chain(3);
        let c = q
            .compose(&Arrow::new(0, 0, Value::Elem(1)), &Arrow::new(0, 0, Value::Elem(2)))
            .unwrap();
        assert_eq!(c.value, Value::Elem(1));
        assert!(q.validate().is_empty());
    }

    #[test]
    fn lifting_examples() {
        let q = Quantaloid::boolean();
        // x must satisfy true ∧ x <= false, so x = false.
        let lift = q
            .lifting(&Arrow::new(0, 0, Value::Elem(1)), &Arrow::new(0, 0, Value::Elem(0)))
            .unwrap();
        assert_eq!(lift.value, Value::Elem(0));

        let law = Quantaloid::lawvere();
        let lift = law.lifting(&law_arrow("2"), &law_arrow("5")).unwrap();
        assert_eq!(lift.value, ext("3"));
        // Lifting through the identity gives the arrow back.
        let h = law_arrow("7/3");
        assert_eq!(law.lifting(&law.identity(0), &h).unwrap().value, h.value);
        // Infinity conventions.
        assert_eq!(law.lifting(&law_arrow("inf"), &law_arrow("inf")).unwrap().value, ext("0"));
        assert_eq!(law.lifting(&law_arrow("inf"), &law_arrow("3")).unwrap().value, ext("0"));
        assert_eq!(law.lifting(&law_arrow("3"), &law_arrow("inf")).unwrap().value, ext("inf"));
    }

    #[test]
    fn extension_examples() {
        let q = Quantaloid::boolean();
        // Any x satisfies x ∧ false <= h, so the extension is true.
        for h in [0usize, 1] {
            let e = q
                .extension(&Arrow::new(0, 0, Value::Elem(0)), &Arrow::new(0, 0, Value::Elem(h)))
                .unwrap();
            assert_eq!(e.value, Value::Elem(1));
        }
        let law = Quantaloid::lawvere();
        assert_eq!(law.extension(&law_arrow("1"), &law_arrow("4")).unwrap().value, ext("3"));
        let h = law_arrow("9/2");
        assert_eq!(law.extension(&law.identity(0), &h).unwrap().value, h.value);
    }

    #[test]
    fn right_adjoints() {
        let law = Quantaloid::lawvere();
        let adj = law.right_adjoint(&law_arrow("0")).unwrap();
        assert_eq!(adj.map(|a| a.value), Some(ext("0")));
        assert!(law.right_adjoint(&law_arrow("1")).unwrap().is_none());

        let q = Quantaloid::boolean();
        let adj = q.right_adjoint(&q.identity(0)).unwrap().unwrap();
        assert_eq!(adj.value, Value::Elem(1));
        // identity has itself as right adjoint everywhere
        let c = Quantaloid::chain(4);
        let adj = c.right_adjoint(&c.identity(0)).unwrap().unwrap();
        assert_eq!(adj.value, c.identity_value(0));
    }

    #[test]
    fn type_mismatch_is_rejected() {
        let q = Quantaloid::boolean();
        let law = Quantaloid::lawvere();
        assert!(q.compose(&law_arrow("1"), &law_arrow("1")).is_err());
        assert!(law.compose(&Arrow::new(0, 0, Value::Elem(0)), &law_arrow("1")).is_err());
    }

    #[test]
    fn validate_catches_broken_unit() {
        // compose = second projection is associative but has no two-sided unit
        // for the declared identity; g ∘ f = f makes 1 ∘ f = f fine but
        // f ∘ 1 = 1 breaks the other unit law.
        let lat = SupLattice::chain(vec!["0".into(), "1".into()]);
        let compose = vec![vec![0, 1], vec![0, 1]];
        let q = Quantaloid::one_object_table("proj", lat, compose, 1).unwrap();
        let report = q.validate();
        assert!(report.iter().any(|v| v.0.contains("unit law fails")), "{report:?}");
    }

    #[test]
    fn validate_catches_non_associative_compose() {
        // g ∘ f := g and-not f is not associative
        let lat = SupLattice::chain(vec!["0".into(), "1".into()]);
        let compose = vec![vec![0, 0], vec![1, 0]];
        let q = Quantaloid::one_object_table("andnot", lat, compose, 0).unwrap();
        let report = q.validate();
        assert!(report.iter().any(|v| v.0.contains("associativity fails at")), "{report:?}");
    }

    #[test]
    fn validate_catches_join_preservation_failure() {
        // A non-distributive five-element lattice (N5) with meet composition
        // fails join preservation.
        let lat = SupLattice::from_pairs(
            vec!["bot".into(), "a".into(), "b".into(), "c".into(), "top".into()],
            &[
                ("bot".into(), "a".into()),
                ("bot".into(), "c".into()),
                ("a".into(), "b".into()),
                ("b".into(), "top".into()),
                ("c".into(), "top".into()),
            ],
        )
        .unwrap();
        let n = lat.len();
        let mut compose = vec![vec![0; n]; n];
        #[allow(clippy::needless_range_loop)]
        for g in 0..n {
            for f in 0..n {
                compose[g][f] = lat.meet(&[g, f]).unwrap();
            }
        }
        let top = lat.index_of("top").unwrap();
        let q = Quantaloid::one_object_table("n5-meet", lat, compose, top).unwrap();
        let report = q.validate();
        assert!(
            report.iter().any(|v| v.0.contains("fails on the join")),
            "N5 meet-composition should fail join preservation: {report:?}"
        );
    }
}
