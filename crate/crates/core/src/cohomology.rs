//! Equivariant Poincaré polynomials of intersections and complements.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{exterior_traces, power_traces, smith_quotient, torsion_fixed_count, IntMatrix, LatticeModule};
use crate::poly::Poly;
use crate::poset::{fixed_poset, FixedPoset};
use crate::roots::RootSystem;
use crate::weyl::{line_orbits, ClassInvariants, ConjugacyClasses, WeylGroup};

/// `P(Z, t)(g)` for the intersection `Z = Hom(M/N, C*)`: the number of
/// components fixed by `g` times the exterior-power traces of `g` on the
/// free part of `M/N`.
pub fn intersection_poincare(module: &LatticeModule, g: &IntMatrix) -> Result<Poly> {
    let q = smith_quotient(module)?;
    let action = q.action(g)?;
    let fixed = torsion_fixed_count(g, &q)?;
    let f = q.free_rank();
    let p = power_traces(&action.free, f)?;
    let e = exterior_traces(&p, f)?;
    let m = i64::try_from(fixed).map_err(|_| Error::Overflow("fixed component count"))?;
    Poly::new(e).checked_scale(m)
}

/// `Σ μ(N) (-t)^{rank N} P(N, t)(g)` over the nodes of `poset`, which must
/// have been built for `g`. For a linear poset every intersection is a
/// linear space and contributes `1`.
pub fn complement_poincare(poset: &FixedPoset, g: &IntMatrix) -> Result<Poly> {
    let terms: Vec<Poly> = poset
        .nodes()
        .par_iter()
        .filter(|n| n.mobius != 0)
        .map(|n| {
            let base = if poset.is_linear() { Poly::constant(1) } else { intersection_poincare(&n.module, g)? };
            let sign = if n.rank % 2 == 0 { n.mobius } else { -n.mobius };
            base.shift_scale(sign, n.rank)
        })
        .collect::<Result<_>>()?;
    terms.iter().try_fold(Poly::zero(), |acc, t| acc.checked_add(t))
}

/// `P(T_Φ, t)(g)` for the toric arrangement of `rs`.
pub fn toric_poincare(rs: &RootSystem, g: &IntMatrix, node_budget: usize) -> Result<Poly> {
    complement_poincare(&fixed_poset(rs, g, node_budget)?, g)
}

/// `t^{2n} p(1/t)`.
pub fn compactly_supported(p: &Poly, n: usize) -> Result<Poly> {
    p.compactly_supported(n)
}

/// A class function with values in integer polynomials.
#[derive(Clone, Debug, Serialize)]
pub struct ClassPolynomial {
    pub system: String,
    pub rank: usize,
    pub group_order: usize,
    pub labels: Vec<String>,
    pub sizes: Vec<usize>,
    #[serde(skip)]
    pub invariants: Vec<ClassInvariants>,
    pub polys: Vec<Poly>,
}

impl ClassPolynomial {
    /// Coefficient of `t^i` on each class.
    pub fn degree_values(&self, i: usize) -> Vec<i64> {
        self.polys.iter().map(|p| p.coeff(i)).collect()
    }

    /// Sanity checks that hold for every equivariant Poincaré polynomial of
    /// a connected variety: constant term 1 and the character bound.
    pub fn check_bounds(&self) -> Result<()> {
        let id = &self.polys[0];
        for (c, p) in self.polys.iter().enumerate() {
            if p.coeff(0) != 1 {
                return Err(Error::Internal(format!("class {c}: constant term {}", p.coeff(0))));
            }
            for i in 0..=self.rank {
                if p.coeff(i).abs() > id.coeff(i) {
                    return Err(Error::Internal(format!("class {c}: |c_{i}| exceeds the identity value")));
                }
            }
        }
        Ok(())
    }
}

/// Evaluates the toric complement polynomial on every conjugacy class.
pub fn equivariant_table(
    rs: &RootSystem,
    group: &WeylGroup,
    classes: &ConjugacyClasses,
    node_budget: usize,
) -> Result<ClassPolynomial> {
    let polys = classes
        .representatives()
        .par_iter()
        .map(|&r| toric_poincare(rs, &group.element(r), node_budget))
        .collect::<Result<Vec<_>>>()?;
    let table = ClassPolynomial {
        system: rs.cartan_type().to_string(),
        rank: rs.rank(),
        group_order: group.order(),
        labels: classes.labels(),
        sizes: classes.sizes().to_vec(),
        invariants: classes.invariants().to_vec(),
        polys,
    };
    table.check_bounds()?;
    Ok(table)
}

/// `Tr(g, M) + #{positive-root lines fixed by g}`, the expected degree-one
/// coefficient.
pub fn degree_one_character(rs: &RootSystem, g: &IntMatrix) -> Result<i64> {
    let fixed_lines = line_orbits(g, rs)?.iter().filter(|o| o.len() == 1).count() as i64;
    Ok(g.trace() + fixed_lines)
}
