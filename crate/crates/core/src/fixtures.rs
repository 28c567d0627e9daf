//! Seeded generators for law suites: random quantaloids from families known
//! to satisfy the axioms, and random categories, functors, distributors and
//! presheaves obtained by saturating random seed data.

use crate::doctrine::DoctrineSlice;
use crate::error::Result;
use crate::lattice::SupLattice;
use crate::presheaf::Presheaf;
use crate::qcat::{Distributor, QCategory, QFunctor};
use crate::quantaloid::{Quantaloid, Value};
use crate::rational::ExtRational;
use rand::seq::IndexedRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::sync::Arc;

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

/// The enumerable built-ins used across suites.
pub fn builtin_quantaloids() -> Vec<Arc<Quantaloid>> {
    vec![
        Arc::new(Quantaloid::boolean()),
        Arc::new(Quantaloid::chain(2)),
        Arc::new(Quantaloid::chain(3)),
        Arc::new(Quantaloid::chain(4)),
    ]
}

/// A random table quantaloid from one of four valid families: min-chains,
/// meet-frames on products of chains, truncated-addition cost chains, and
/// two-object relational quantaloids. Homs stay at five elements or fewer.
pub fn random_table_quantaloid(r: &mut ChaCha8Rng, tag: usize) -> Arc<Quantaloid> {
    match r.random_range(0..4u32) {
        0 => {
            let n = r.random_range(2..=5usize);
            Arc::new(Quantaloid::chain(n))
        }
        1 => Arc::new(product_frame(tag)),
        2 => {
            let n = r.random_range(2..=5usize);
            Arc::new(cost_chain(tag, n))
        }
        _ => {
            let big_first = r.random_bool(0.5);
            Arc::new(relational_pair(tag, big_first))
        }
    }
}

/// The 2×2 product of chains (a diamond frame) with meet composition.
fn product_frame(tag: usize) -> Quantaloid {
    let ids: Vec<String> = (0..2)
        .flat_map(|i| (0..2).map(move |j| format!("{i}{j}")))
        .collect();
    let n = ids.len();
    let coord = |k: usize| (k / 2, k % 2);
    let leq = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let (ai, aj) = coord(a);
                    let (bi, bj) = coord(b);
                    ai <= bi && aj <= bj
                })
                .collect()
        })
        .collect();
    let lat = SupLattice::from_relation(ids, leq).expect("product of chains is a lattice");
    let mut compose = vec![vec![0usize; n]; n];
    #[allow(clippy::needless_range_loop)]
    for g in 0..n {
        for f in 0..n {
            compose[g][f] = lat.meet(&[g, f]).expect("frames have meets");
        }
    }
    let top = lat.top().unwrap();
    Quantaloid::one_object_table(&format!("frame2x2-{tag}"), lat, compose, top).unwrap()
}

/// A chain of costs `0..n` under truncated addition; the quantale order is
/// the reversed numeric order, so the identity 0 is the top.
fn cost_chain(tag: usize, n: usize) -> Quantaloid {
    let ids: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let leq = (0..n).map(|i| (0..n).map(|j| i >= j).collect()).collect();
    let lat = SupLattice::from_relation(ids, leq).unwrap();
    let compose = (0..n)
        .map(|g| (0..n).map(|f| (g + f).min(n - 1)).collect())
        .collect();
    Quantaloid::one_object_table(&format!("cost{n}-{tag}"), lat, compose, 0).unwrap()
}

/// The quantaloid of relations between two fixed finite sets of sizes 1 and
/// 2 (or 2 and 1): homs are powerset lattices, composition is relational.
fn relational_pair(tag: usize, big_first: bool) -> Quantaloid {
    let sizes = if big_first { [2usize, 1] } else { [1usize, 2] };
    let objects: Vec<String> = vec!["X".into(), "Y".into()];
    let mut homs = BTreeMap::new();
    let mut compose = BTreeMap::new();
    let powerset = |rows: usize, cols: usize| -> SupLattice {
        let bits = rows * cols;
        let count = 1usize << bits;
        let ids: Vec<String> = (0..count).map(|m| format!("r{m}")).collect();
        let leq = (0..count).map(|a| (0..count).map(|b| a & b == a).collect()).collect();
        SupLattice::from_relation(ids, leq).unwrap()
    };
    for x in 0..2 {
        for y in 0..2 {
            homs.insert((x, y), powerset(sizes[x], sizes[y]));
        }
    }
    // bit k of a relation X→Y encodes the pair (k / |Y|, k % |Y|)
    for x in 0..2 {
        for y in 0..2 {
            for z in 0..2 {
                let (sx, sy, sz) = (sizes[x], sizes[y], sizes[z]);
                let ng = 1usize << (sy * sz);
                let nf = 1usize << (sx * sy);
                let mut table = vec![vec![0usize; nf]; ng];
                #[allow(clippy::needless_range_loop)]
                for g in 0..ng {
                    for f in 0..nf {
                        let mut result = 0usize;
                        for i in 0..sx {
                            for k in 0..sz {
                                let reachable = (0..sy).any(|j| {
                                    f & (1 << (i * sy + j)) != 0 && g & (1 << (j * sz + k)) != 0
                                });
                                if reachable {
                                    result |= 1 << (i * sz + k);
                                }
                            }
                        }
                        table[g][f] = result;
                    }
                }
                compose.insert((x, y, z), table);
            }
        }
    }
    let identities = (0..2)
        .map(|x| {
            let s = sizes[x];
            (0..s).fold(0usize, |acc, i| acc | (1 << (i * s + i)))
        })
        .collect();
    Quantaloid::table(&format!("rel-{}-{tag}", if big_first { "21" } else { "12" }), objects, homs, compose, identities)
        .unwrap()
}

/// A random value of `hom(x, y)`.
pub fn random_value(r: &mut ChaCha8Rng, q: &Quantaloid, x: usize, y: usize) -> Value {
    if q.enumerable() {
        let n = q.hom_lattice(x, y).expect("enumerable").len();
        Value::Elem(r.random_range(0..n))
    } else {
        let grid = ["0", "1/2", "1", "3/2", "2", "3", "5", "inf"];
        let pick = grid.choose(r).unwrap();
        Value::Ext(pick.parse::<ExtRational>().unwrap())
    }
}

/// A random valid category over the quantaloid: a random seed matrix
/// saturated to the least category structure above it.
pub fn random_category(r: &mut ChaCha8Rng, q: &Arc<Quantaloid>, max_objects: usize) -> Result<Arc<QCategory>> {
    let n = r.random_range(1..=max_objects.max(1));
    let objects: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
    let types: Vec<usize> = (0..n).map(|_| r.random_range(0..q.object_count())).collect();
    let seed: Vec<Vec<Value>> = (0..n)
        .map(|i| (0..n).map(|j| random_value(r, q, types[j], types[i])).collect())
        .collect();
    Ok(Arc::new(QCategory::from_generators(q.clone(), objects, types, seed)?))
}

/// A random generalized metric space: finite distances drawn from a grid,
/// zero diagonal and triangle closure imposed by saturation.
pub fn random_metric_space(r: &mut ChaCha8Rng, max_points: usize) -> Result<Arc<QCategory>> {
    let q = Arc::new(Quantaloid::lawvere());
    let n = r.random_range(1..=max_points.max(1));
    let objects: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let grid = ["0", "1/2", "1", "3/2", "2", "3", "4", "11/2"];
    let seed: Vec<Vec<Value>> = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| Value::Ext(grid.choose(r).unwrap().parse::<ExtRational>().unwrap()))
                .collect()
        })
        .collect();
    Ok(Arc::new(QCategory::from_generators(q, objects, vec![0; n], seed)?))
}

/// A random preorder over BOOL: a random relation, saturated.
pub fn random_preorder(r: &mut ChaCha8Rng, max_elements: usize) -> Result<Arc<QCategory>> {
    let q = Arc::new(Quantaloid::boolean());
    let n = r.random_range(1..=max_elements.max(1));
    let objects: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let seed: Vec<Vec<Value>> = (0..n)
        .map(|_| (0..n).map(|_| Value::Elem(usize::from(r.random_bool(0.4)))).collect())
        .collect();
    Ok(Arc::new(QCategory::from_generators(q, objects, vec![0; n], seed)?))
}

/// Every preorder on `n` labeled elements, as BOOL categories.
pub fn all_preorders(n: usize) -> Vec<Arc<QCategory>> {
    assert!(n <= 4, "exhaustive preorder listing is meant for tiny sizes");
    let q = Arc::new(Quantaloid::boolean());
    let objects: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let off_diag: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j)
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << off_diag.len()) {
        let mut rel = vec![vec![false; n]; n];
        for (bit, &(i, j)) in off_diag.iter().enumerate() {
            rel[i][j] = mask & (1 << bit) != 0;
        }
        for (i, row) in rel.iter_mut().enumerate() {
            row[i] = true;
        }
        let transitive = (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| !(rel[i][j] && rel[j][k]) || rel[i][k]))
        });
        if !transitive {
            continue;
        }
        let hom = (0..n)
            .map(|i| (0..n).map(|j| Value::Elem(usize::from(rel[i][j]))).collect())
            .collect();
        out.push(Arc::new(
            QCategory::new(q.clone(), objects.clone(), vec![0; n], hom).expect("well-shaped"),
        ));
    }
    out
}

/// Rejection-sampled random functor; falls back to constant maps, and gives
/// up with `None` when the codomain cannot receive one.
pub fn random_functor(
    r: &mut ChaCha8Rng,
    dom: &Arc<QCategory>,
    cod: &Arc<QCategory>,
    tries: usize,
) -> Option<QFunctor> {
    let candidates: Vec<Vec<usize>> = (0..dom.len())
        .map(|a| cod.objects_of_type(dom.type_of(a)))
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return None;
    }
    for _ in 0..tries {
        let map: Vec<usize> = candidates.iter().map(|c| *c.choose(r).unwrap()).collect();
        if let Ok(f) = QFunctor::new(dom.clone(), cod.clone(), map) {
            return Some(f);
        }
    }
    // constant candidates, in codomain order
    if dom.types().iter().all(|&t| t == dom.type_of(0)) {
        for c in cod.objects_of_type(dom.type_of(0)) {
            if let Ok(f) = QFunctor::new(dom.clone(), cod.clone(), vec![c; dom.len()]) {
                return Some(f);
            }
        }
    }
    None
}

/// A random valid distributor: random entries saturated by both actions.
pub fn random_distributor(r: &mut ChaCha8Rng, dom: &Arc<QCategory>, cod: &Arc<QCategory>) -> Result<Distributor> {
    let q = dom.quantaloid().clone();
    let matrix: Vec<Vec<Value>> = (0..cod.len())
        .map(|b| (0..dom.len()).map(|a| random_value(r, &q, dom.type_of(a), cod.type_of(b))).collect())
        .collect();
    Distributor::saturate(dom.clone(), cod.clone(), matrix)
}

/// A random valid presheaf of a random type.
pub fn random_presheaf(r: &mut ChaCha8Rng, base: &Arc<QCategory>) -> Result<Presheaf> {
    let q = base.quantaloid().clone();
    let x = r.random_range(0..q.object_count());
    let raw: Vec<Value> = (0..base.len()).map(|a| random_value(r, &q, x, base.type_of(a))).collect();
    Presheaf::saturate(base.clone(), x, raw)
}

/// A random distributor whose columns are members of the class, built by
/// declassifying a random functor into the materialized subcategory.
pub fn random_class_distributor(
    r: &mut ChaCha8Rng,
    slice_cod: &DoctrineSlice,
    dom: &Arc<QCategory>,
    tries: usize,
) -> Result<Option<Distributor>> {
    match random_functor(r, dom, slice_cod.pcat.cat(), tries) {
        Some(f) => Ok(Some(slice_cod.pcat.declassify(&f)?)),
        None => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_quantaloids_are_valid() {
        let mut r = rng(11);
        for tag in 0..8 {
            let q = random_table_quantaloid(&mut r, tag);
            assert!(q.validate().is_empty(), "{} fails validation", q.name());
        }
    }

    #[test]
    fn generated_structures_are_valid() {
        let mut r = rng(3);
        for quantaloid in builtin_quantaloids() {
            let cat = random_category(&mut r, &quantaloid, 3).unwrap();
            assert!(cat.validate().is_empty());
            let cat2 = random_category(&mut r, &quantaloid, 3).unwrap();
            let dist = random_distributor(&mut r, &cat, &cat2).unwrap();
            assert!(dist.validate().is_empty());
            let p = random_presheaf(&mut r, &cat).unwrap();
            assert!(p.validate().is_empty());
            if let Some(f) = random_functor(&mut r, &cat, &cat2, 20) {
                assert!(f.validate().is_empty());
            }
        }
        let m = random_metric_space(&mut r, 5).unwrap();
        assert!(m.validate().is_empty());
    }

    #[test]
    fn preorder_listing_matches_known_counts() {
        // OEIS A000798 over labeled preorders: 1, 1, 4, 29, 355
        assert_eq!(all_preorders(1).len(), 1);
        assert_eq!(all_preorders(2).len(), 4);
        assert_eq!(all_preorders(3).len(), 29);
        assert_eq!(all_preorders(4).len(), 355);
        for cat in all_preorders(3) {
            assert!(cat.validate().is_empty());
        }
    }

    #[test]
    fn generators_are_deterministic() {
        let mut r1 = rng(99);
        let mut r2 = rng(99);
        let a = random_metric_space(&mut r1, 6).unwrap();
        let b = random_metric_space(&mut r2, 6).unwrap();
        assert_eq!(a, b);
    }
}
