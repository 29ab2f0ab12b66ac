//! Posets of stable modules of exponents.
//!
//! A node is the span `N` of a union of `g`-orbits of exponent vectors,
//! recorded together with the set of all orbits lying in `N`. Since every
//! node is spanned by the vectors it contains, the orbit set determines the
//! module, and reverse inclusion of intersections is subset order on orbit
//! sets.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{is_saturated, saturate, IntMatrix, LatticeModule};
use crate::roots::RootSystem;
use crate::weyl::orbits_on_roots;

/// Default cap on the number of poset nodes.
pub const DEFAULT_NODE_BUDGET: usize = 5_000_000;

pub const MAX_ORBITS: usize = 256;

/// Bitset over at most 256 orbits.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitSet([u64; 4]);

impl OrbitSet {
    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.0[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub fn len(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0 == [0; 4]
    }

    #[inline]
    pub fn is_subset(&self, other: &OrbitSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..MAX_ORBITS).filter(move |&i| self.contains(i))
    }
}

/// Exponent vectors of a hypertoric arrangement given directly, one per
/// hypertorus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CustomArrangement {
    pub rank: usize,
    pub vectors: Vec<Vec<i64>>,
}

impl CustomArrangement {
    /// Validates the vectors and collapses duplicates and negatives, which
    /// define the same hypertorus. The first occurrence fixes the order; each
    /// kept vector is oriented with its first nonzero entry positive.
    pub fn new(rank: usize, vectors: Vec<Vec<i64>>) -> Result<Self> {
        let mut kept: Vec<Vec<i64>> = Vec::new();
        for v in vectors {
            if v.len() != rank {
                return Err(Error::DimensionMismatch { expected: rank, found: v.len() });
            }
            let Some(&lead) = v.iter().find(|&&x| x != 0) else {
                return Err(Error::Schema("zero exponent vector".into()));
            };
            let v: Vec<i64> = if lead < 0 {
                v.iter().map(|x| x.checked_neg().ok_or(Error::Overflow("exponent vector"))).collect::<Result<_>>()?
            } else {
                v
            };
            if !kept.contains(&v) {
                kept.push(v);
            }
        }
        if kept.len() > MAX_ORBITS {
            return Err(Error::TooManyHypertori(kept.len()));
        }
        Ok(CustomArrangement { rank, vectors: kept })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: CustomArrangement = serde_json::from_str(text)?;
        Self::new(raw.rank, raw.vectors)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PosetNode {
    pub module: LatticeModule,
    #[serde(skip)]
    pub orbit_set: OrbitSet,
    pub rank: usize,
    pub mobius: i64,
}

/// The poset of spans of unions of orbits, with Möbius values `μ(Z, top)`.
#[derive(Clone, Debug)]
pub struct FixedPoset {
    ambient_rank: usize,
    vectors: Vec<Vec<i64>>,
    orbits: Vec<Vec<usize>>,
    nodes: Vec<PosetNode>,
    saturated_spans: bool,
}

impl FixedPoset {
    /// Worklist closure from the zero module: every node is extended by each
    /// orbit it does not contain, and the resulting span is recorded with
    /// all orbits it contains. This reaches exactly the spans of unions of
    /// orbits without enumerating the unions.
    ///
    /// With `saturate_spans`, each span is replaced by its saturation, which
    /// gives the poset of the associated linear arrangement.
    pub fn build(
        ambient_rank: usize,
        vectors: Vec<Vec<i64>>,
        orbits: Vec<Vec<usize>>,
        saturate_spans: bool,
        node_budget: usize,
    ) -> Result<Self> {
        if orbits.len() > MAX_ORBITS {
            return Err(Error::TooManyHypertori(orbits.len()));
        }
        for v in &vectors {
            if v.len() != ambient_rank {
                return Err(Error::DimensionMismatch { expected: ambient_rank, found: v.len() });
            }
        }
        // -O spans the same module as O; only one of each pair is used to extend
        let index: HashMap<&[i64], usize> = orbits
            .iter()
            .enumerate()
            .flat_map(|(o, members)| members.iter().map(move |&i| (i, o)))
            .map(|(i, o)| (vectors[i].as_slice(), o))
            .collect();
        let extenders: Vec<usize> = (0..orbits.len())
            .filter(|&o| {
                let neg: Vec<i64> = vectors[orbits[o][0]].iter().map(|x| -x).collect();
                index.get(neg.as_slice()).map_or(true, |&p| p >= o)
            })
            .collect();

        let orbit_vectors: Vec<Vec<&[i64]>> =
            orbits.iter().map(|m| m.iter().map(|&i| vectors[i].as_slice()).collect()).collect();
        let span = |parent: &LatticeModule, o: usize| -> Result<LatticeModule> {
            let m = parent.join(&orbit_vectors[o])?;
            if saturate_spans {
                saturate(&m)
            } else {
                Ok(m)
            }
        };
        let close = |base: OrbitSet, module: &LatticeModule| -> OrbitSet {
            let mut set = base;
            for (o, members) in orbits.iter().enumerate() {
                if !set.contains(o) && module.contains(&vectors[members[0]]) {
                    set.insert(o);
                }
            }
            set
        };

        let top = LatticeModule::zero(ambient_rank);
        let top_set = close(OrbitSet::default(), &top);
        let mut nodes = vec![PosetNode { module: top, orbit_set: top_set, rank: 0, mobius: 0 }];
        let mut seen: HashMap<OrbitSet, usize> = HashMap::from([(top_set, 0)]);
        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            let mut found: Vec<(OrbitSet, usize, usize)> = frontier
                .par_iter()
                .map(|&p| {
                    let parent = &nodes[p];
                    let mut out = Vec::new();
                    for &o in &extenders {
                        if parent.orbit_set.contains(o) {
                            continue;
                        }
                        let m = span(&parent.module, o)?;
                        let mut base = parent.orbit_set;
                        base.insert(o);
                        let set = close(base, &m);
                        if !seen.contains_key(&set) {
                            out.push((set, p, o));
                        }
                    }
                    Ok(out)
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .flatten()
                .collect();
            found.par_sort_unstable();
            found.dedup_by_key(|c| c.0);
            if nodes.len() + found.len() > node_budget {
                return Err(Error::NodeBudgetExceeded(node_budget));
            }
            let fresh: Vec<PosetNode> = found
                .par_iter()
                .map(|&(set, p, o)| {
                    let module = span(&nodes[p].module, o)?;
                    Ok(PosetNode { rank: module.rank(), module, orbit_set: set, mobius: 0 })
                })
                .collect::<Result<_>>()?;
            frontier.clear();
            for node in fresh {
                seen.insert(node.orbit_set, nodes.len());
                frontier.push(nodes.len());
                nodes.push(node);
            }
        }
        nodes.sort_by(|a, b| (a.rank, a.orbit_set.len(), a.module.key()).cmp(&(b.rank, b.orbit_set.len(), b.module.key())));

        let mut poset = FixedPoset { ambient_rank, vectors, orbits, nodes, saturated_spans: saturate_spans };
        poset.compute_mobius()?;
        poset.spot_check_order()?;
        Ok(poset)
    }

    /// `μ(top) = 1`, `μ(Y) = -Σ μ(Z)` over the nodes `Z` strictly above `Y`,
    /// i.e. with orbit set strictly inside that of `Y`.
    fn compute_mobius(&mut self) -> Result<()> {
        let mut order: Vec<usize> = (0..self.nodes.len()).collect();
        order.sort_by_key(|&i| self.nodes[i].orbit_set.len());
        let mut done: Vec<(OrbitSet, i64)> = Vec::new();
        let mut start = 0;
        while start < order.len() {
            let pc = self.nodes[order[start]].orbit_set.len();
            let end = start + order[start..].iter().take_while(|&&i| self.nodes[i].orbit_set.len() == pc).count();
            let values: Vec<i64> = order[start..end]
                .par_iter()
                .map(|&y| {
                    let ys = self.nodes[y].orbit_set;
                    if self.nodes[y].rank == 0 {
                        return Ok(1);
                    }
                    let mut acc = 0i64;
                    for (zs, mu) in &done {
                        if zs.is_subset(&ys) {
                            acc = acc.checked_sub(*mu).ok_or(Error::Overflow("Möbius function"))?;
                        }
                    }
                    Ok(acc)
                })
                .collect::<Result<_>>()?;
            for (&y, &mu) in order[start..end].iter().zip(&values) {
                self.nodes[y].mobius = mu;
                if mu != 0 {
                    done.push((self.nodes[y].orbit_set, mu));
                }
            }
            start = end;
        }
        Ok(())
    }

    /// Compares orbit-set containment with module containment on a
    /// deterministic sample of node pairs.
    fn spot_check_order(&self) -> Result<()> {
        let n = self.nodes.len() as u64;
        let mut state = 0x9e37_79b9_7f4a_7c15u64 ^ n;
        for _ in 0..32.min(n * n) {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let a = &self.nodes[(state % n) as usize];
            let b = &self.nodes[((state >> 32) % n) as usize];
            if a.orbit_set.is_subset(&b.orbit_set) != b.module.contains_module(&a.module) {
                return Err(Error::Internal("poset order disagrees with module containment".into()));
            }
        }
        Ok(())
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// The orbits (as vector-index lists) contained in node `i`.
    pub fn node_orbits(&self, i: usize) -> Vec<Vec<usize>> {
        self.nodes[i].orbit_set.iter().map(|o| self.orbits[o].clone()).collect()
    }

    pub fn nodes(&self) -> &[PosetNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.vectors
    }

    /// Whether spans were saturated, i.e. this is the linear poset.
    pub fn is_linear(&self) -> bool {
        self.saturated_spans
    }

    /// Whether `Z ≤ Z'`: the intersection `Z` lies in `Z'`.
    pub fn le(&self, z: usize, z_prime: usize) -> bool {
        self.nodes[z_prime].orbit_set.is_subset(&self.nodes[z].orbit_set)
    }

    /// Node counts indexed by rank.
    pub fn counts_by_rank(&self) -> Vec<usize> {
        let mut v = vec![0; self.ambient_rank + 1];
        for node in &self.nodes {
            v[node.rank] += 1;
        }
        v
    }

    /// Sums of Möbius values indexed by rank.
    pub fn mobius_by_rank(&self) -> Vec<i64> {
        let mut v = vec![0; self.ambient_rank + 1];
        for node in &self.nodes {
            v[node.rank] += node.mobius;
        }
        v
    }

    /// Whether every node module is saturated, i.e. taking complex spans is
    /// an isomorphism onto the linear poset.
    pub fn all_saturated(&self) -> Result<bool> {
        let flags = self.nodes.par_iter().map(|n| is_saturated(&n.module)).collect::<Result<Vec<_>>>()?;
        Ok(flags.into_iter().all(|b| b))
    }

    /// Pairs `(lower, upper)` where `upper` covers `lower`. Cubic in the
    /// worst case; intended for exports of moderate posets.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        (0..self.nodes.len())
            .into_par_iter()
            .flat_map_iter(|y| {
                let ys = self.nodes[y].orbit_set;
                let above: Vec<usize> = (0..self.nodes.len())
                    .filter(|&z| z != y && self.nodes[z].orbit_set.is_subset(&ys) && self.nodes[z].orbit_set != ys)
                    .collect();
                let covers: Vec<(usize, usize)> = above
                    .iter()
                    .filter(|&&z| {
                        let zs = self.nodes[z].orbit_set;
                        !above.iter().any(|&w| w != z && zs.is_subset(&self.nodes[w].orbit_set))
                    })
                    .map(|&z| (y, z))
                    .collect();
                covers
            })
            .collect()
    }

    pub fn export(&self) -> Result<PosetExport> {
        let nodes = self
            .nodes
            .iter()
            .map(|n| {
                Ok(NodeExport {
                    basis: n.module.basis().row_iter().map(|r| r.to_vec()).collect(),
                    rank: n.rank,
                    orbits: n.orbit_set.iter().collect(),
                    mobius: n.mobius,
                    saturated: is_saturated(&n.module)?,
                })
            })
            .collect::<Result<_>>()?;
        Ok(PosetExport {
            ambient_rank: self.ambient_rank,
            linear: self.saturated_spans,
            orbits: self.orbits.iter().map(|o| o.iter().map(|&i| self.vectors[i].clone()).collect()).collect(),
            nodes,
            covers: self.cover_relations(),
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NodeExport {
    pub basis: Vec<Vec<i64>>,
    pub rank: usize,
    pub orbits: Vec<usize>,
    pub mobius: i64,
    pub saturated: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PosetExport {
    pub ambient_rank: usize,
    pub linear: bool,
    pub orbits: Vec<Vec<Vec<i64>>>,
    pub nodes: Vec<NodeExport>,
    /// `(lower, upper)` node index pairs.
    pub covers: Vec<(usize, usize)>,
}

/// The toric poset of `rs` fixed by `g`.
pub fn fixed_poset(rs: &RootSystem, g: &IntMatrix, node_budget: usize) -> Result<FixedPoset> {
    FixedPoset::build(rs.rank(), rs.roots(), orbits_on_roots(g, rs)?, false, node_budget)
}

/// The poset of the linear arrangement of `rs` fixed by `g`.
pub fn hyperplane_poset(rs: &RootSystem, g: &IntMatrix, node_budget: usize) -> Result<FixedPoset> {
    FixedPoset::build(rs.rank(), rs.roots(), orbits_on_roots(g, rs)?, true, node_budget)
}

pub fn custom_poset(arr: &CustomArrangement, linear: bool, node_budget: usize) -> Result<FixedPoset> {
    let orbits = (0..arr.vectors.len()).map(|i| vec![i]).collect();
    FixedPoset::build(arr.rank, arr.vectors.clone(), orbits, linear, node_budget)
}

/// `μ` of the span of `orbits`, computed from scratch on the interval below
/// it. `orbits` must be every orbit contained in that span, so that this is
/// an independent recomputation of the corresponding value in the full
/// poset.
pub fn interval_mobius(
    ambient_rank: usize,
    vectors: Vec<Vec<i64>>,
    orbits: Vec<Vec<usize>>,
    saturate_spans: bool,
    node_budget: usize,
) -> Result<i64> {
    let k = orbits.len();
    let sub = FixedPoset::build(ambient_rank, vectors, orbits, saturate_spans, node_budget)?;
    sub.nodes
        .iter()
        .find(|n| n.orbit_set.len() as usize == k)
        .map(|n| n.mobius)
        .ok_or_else(|| Error::Internal("interval has no top element".into()))
}

/// Whether `N ↦ N ⊗ C` is an isomorphism of posets for `(rs, g)`.
pub fn tau_is_isomorphism(rs: &RootSystem, g: &IntMatrix, node_budget: usize) -> Result<bool> {
    fixed_poset(rs, g, node_budget)?.all_saturated()
}
