//! Finite sup-lattices: an explicit order table with joins and meets of
//! arbitrary subsets, computed by exhaustive scan and memoized pairwise.
//!
//! Element ids are strings; inside a lattice an element is addressed by its
//! index into [`SupLattice::elements`].

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A finite complete lattice given by its full order relation.
///
/// Construction never requires completeness: [`SupLattice::validate`] reports
/// every violated axiom instead, so deliberately broken tables can be
/// inspected. `join`/`meet` return an error on incomplete lattices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupLattice {
    ids: Vec<String>,
    index: BTreeMap<String, usize>,
    leq: Vec<Vec<bool>>,
    /// Pairwise least upper bounds, present when every pair has one.
    lub: Option<Vec<Vec<usize>>>,
    glb: Option<Vec<Vec<usize>>>,
    bottom: Option<usize>,
    top: Option<usize>,
}

/// One violated lattice axiom, in human-readable form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation(pub String);

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl SupLattice {
    /// Builds from an explicit boolean order table, as given (no closure).
    pub fn from_relation(ids: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = ids.len();
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(Error::invalid("lattice", "order table is not square"));
        }
        let mut index = BTreeMap::new();
        for (i, id) in ids.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(Error::invalid("lattice", format!("duplicate element id {id:?}")));
            }
        }
        let mut lat = SupLattice {
            ids,
            index,
            leq,
            lub: None,
            glb: None,
            bottom: None,
            top: None,
        };
        lat.precompute();
        Ok(lat)
    }

    /// Builds from a list of related pairs: reflexive-transitive closure is
    /// applied, then antisymmetry is enforced (an error names the cycle).
    pub fn from_pairs(ids: Vec<String>, pairs: &[(String, String)]) -> Result<Self> {
        let n = ids.len();
        let mut index = BTreeMap::new();
        for (i, id) in ids.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(Error::invalid("lattice", format!("duplicate element id {id:?}")));
            }
        }
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            leq[i][i] = true;
        }
        for (x, y) in pairs {
            let xi = *index.get(x).ok_or_else(|| Error::ElementNotInLattice { element: x.clone() })?;
            let yi = *index.get(y).ok_or_else(|| Error::ElementNotInLattice { element: y.clone() })?;
            leq[xi][yi] = true;
        }
        // Floyd-Warshall style transitive closure.
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::invalid(
                        "lattice",
                        format!("antisymmetry fails: {} <= {} <= {}", ids[i], ids[j], ids[i]),
                    ));
                }
            }
        }
        Self::from_relation(ids, leq)
    }

    /// A total order `ids[0] < ids[1] < ...`.
    pub fn chain(ids: Vec<String>) -> Self {
        let n = ids.len();
        let leq = (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect();
        Self::from_relation(ids, leq).expect("chain is a valid lattice")
    }

    fn precompute(&mut self) {
        let n = self.len();
        self.bottom = (0..n).find(|&b| (0..n).all(|j| self.leq[b][j]));
        self.top = (0..n).find(|&t| (0..n).all(|j| self.leq[j][t]));
        let mut lub = vec![vec![0usize; n]; n];
        let mut glb = vec![vec![0usize; n]; n];
        let mut lub_ok = n == 0 || self.bottom.is_some();
        let mut glb_ok = n == 0 || self.top.is_some();
        for i in 0..n {
            for j in 0..n {
                match self.scan_lub(&[i, j]) {
                    Some(k) => lub[i][j] = k,
                    None => lub_ok = false,
                }
                match self.scan_glb(&[i, j]) {
                    Some(k) => glb[i][j] = k,
                    None => glb_ok = false,
                }
            }
        }
        self.lub = lub_ok.then_some(lub);
        self.glb = glb_ok.then_some(glb);
    }

    fn scan_lub(&self, subset: &[usize]) -> Option<usize> {
        let n = self.len();
        let uppers: Vec<usize> = (0..n)
            .filter(|&u| subset.iter().all(|&s| self.leq[s][u]))
            .collect();
        uppers
            .iter()
            .copied()
            .find(|&u| uppers.iter().all(|&v| self.leq[u][v]))
    }

    fn scan_glb(&self, subset: &[usize]) -> Option<usize> {
        let n = self.len();
        let lowers: Vec<usize> = (0..n)
            .filter(|&l| subset.iter().all(|&s| self.leq[l][s]))
            .collect();
        lowers
            .iter()
            .copied()
            .find(|&l| lowers.iter().all(|&v| self.leq[v][l]))
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.ids
    }

    pub fn id_of(&self, ix: usize) -> &str {
        &self.ids[ix]
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| Error::ElementNotInLattice { element: id.to_string() })
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn bottom(&self) -> Result<usize> {
        self.bottom.ok_or_else(|| Error::NoJoin { subset: "{}".into() })
    }

    pub fn top(&self) -> Result<usize> {
        self.top.ok_or_else(|| Error::NoMeet { subset: "{}".into() })
    }

    /// Least upper bound of a subset; the empty join is the bottom.
    pub fn join(&self, subset: &[usize]) -> Result<usize> {
        for &s in subset {
            if s >= self.len() {
                return Err(Error::ElementNotInLattice { element: format!("#{s}") });
            }
        }
        let mut acc = self.bottom()?;
        if let Some(lub) = &self.lub {
            for &s in subset {
                acc = lub[acc][s];
            }
            return Ok(acc);
        }
        self.scan_lub(subset).ok_or_else(|| Error::NoJoin {
            subset: self.render_subset(subset),
        })
    }

    /// Greatest lower bound of a subset; the empty meet is the top.
    pub fn meet(&self, subset: &[usize]) -> Result<usize> {
        for &s in subset {
            if s >= self.len() {
                return Err(Error::ElementNotInLattice { element: format!("#{s}") });
            }
        }
        let mut acc = self.top()?;
        if let Some(glb) = &self.glb {
            for &s in subset {
                acc = glb[acc][s];
            }
            return Ok(acc);
        }
        self.scan_glb(subset).ok_or_else(|| Error::NoMeet {
            subset: self.render_subset(subset),
        })
    }

    fn render_subset(&self, subset: &[usize]) -> String {
        let names: Vec<&str> = subset.iter().map(|&s| self.ids[s].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Checks every lattice axiom, naming each violated instance.
    ///
    /// Completeness is checked on the empty set and all pairs; for a finite
    /// poset that is equivalent to all subsets having least upper bounds.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = self.len();
        for i in 0..n {
            if !self.leq[i][i] {
                out.push(Violation(format!("leq({},{}) false", self.ids[i], self.ids[i])));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.leq[i][j] && self.leq[j][k] && !self.leq[i][k] {
                        out.push(Violation(format!(
                            "transitivity fails: {} <= {} <= {} but not {} <= {}",
                            self.ids[i], self.ids[j], self.ids[k], self.ids[i], self.ids[k]
                        )));
                    }
                }
                if i != j && self.leq[i][j] && self.leq[j][i] {
                    out.push(Violation(format!(
                        "antisymmetry fails between {} and {}",
                        self.ids[i], self.ids[j]
                    )));
                }
            }
        }
        if n > 0 && self.bottom.is_none() {
            out.push(Violation("join of {} undefined (no bottom)".into()));
        }
        for i in 0..n {
            for j in i..n {
                if self.scan_lub(&[i, j]).is_none() {
                    out.push(Violation(format!(
                        "join of {{{},{}}} undefined",
                        self.ids[i], self.ids[j]
                    )));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.is_empty() || (self.lub.is_some() && self.glb.is_some())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> SupLattice {
        SupLattice::chain(vec!["0".into(), "1".into(), "2".into()])
    }

    /// {bot, x, y, top} with x and y incomparable.
    pub(crate) fn diamond() -> SupLattice {
        SupLattice::from_pairs(
            vec!["bot".into(), "x".into(), "y".into(), "top".into()],
            &[
                ("bot".into(), "x".into()),
                ("bot".into(), "y".into()),
                ("x".into(), "top".into()),
                ("y".into(), "top".into()),
            ],
        )
        .unwrap()
    }

    #[test]
    fn chain_joins_and_meets() {
        let l = chain3();
        assert_eq!(l.join(&[1, 2]).unwrap(), 2);
        assert_eq!(l.meet(&[1, 2]).unwrap(), 1);
        assert_eq!(l.join(&[]).unwrap(), 0, "empty join is bottom");
        assert_eq!(l.meet(&[]).unwrap(), 2, "empty meet is top");
    }

    #[test]
    fn diamond_join_of_incomparables_is_top() {
        let l = diamond();
        let x = l.index_of("x").unwrap();
        let y = l.index_of("y").unwrap();
        assert_eq!(l.id_of(l.join(&[x, y]).unwrap()), "top");
        assert_eq!(l.id_of(l.meet(&[x, y]).unwrap()), "bot");
    }

    #[test]
    fn foreign_element_is_an_error() {
        let l = chain3();
        assert!(matches!(l.join(&[7]), Err(Error::ElementNotInLattice { .. })));
        assert!(l.index_of("missing").is_err());
    }

    #[test]
    fn validate_reports_missing_reflexivity() {
        let mut leq = vec![vec![false; 2]; 2];
        leq[0][0] = true; // leq(b,b) deliberately absent
        leq[0][1] = true;
        leq[1][1] = false;
        let l = SupLattice::from_relation(vec!["a".into(), "b".into()], leq).unwrap();
        let report = l.validate();
        assert!(report.iter().any(|v| v.0 == "leq(b,b) false"), "{report:?}");
    }

    #[test]
    fn validate_reports_missing_join() {
        // Two maximal elements over a common bottom: {a, b} has no lub.
        let l = SupLattice::from_pairs(
            vec!["bot".into(), "a".into(), "b".into()],
            &[("bot".into(), "a".into()), ("bot".into(), "b".into())],
        )
        .unwrap();
        let report = l.validate();
        assert!(report.iter().any(|v| v.0 == "join of {a,b} undefined"), "{report:?}");
        assert!(!l.is_complete());
        assert!(matches!(l.join(&[1, 2]), Err(Error::NoJoin { .. })));
    }

    #[test]
    fn valid_chain_has_empty_report() {
        assert!(chain3().validate().is_empty());
        assert!(diamond().validate().is_empty());
    }

    #[test]
    fn closure_detects_cycles() {
        let res = SupLattice::from_pairs(
            vec!["a".into(), "b".into()],
            &[("a".into(), "b".into()), ("b".into(), "a".into())],
        );
        assert!(res.is_err());
    }
}
