//! Registry of explicit cover-germ families and the pipeline from defining
//! functions to ramification branches, branch-curve parametrizations,
//! monodromy datasets and enumerated monodromy groups.

pub mod registry;
pub mod verify;

pub use registry::{klein_rows, theorem_rows, FamilyId, KleinRow, Variant};
pub use verify::{verify_klein_identities, verify_row, KleinReport, RowReport};

use crate::error::{Error, Result};
use crate::series::factor::squarefree_factor;
use crate::series::jacobian;
use crate::series::mpoly::MPoly;
use crate::series::puiseux::{normalize_param, params_equal_up_to_scaling, PuiseuxBranch};
use crate::series::trunc::{TruncSeries, VanishingOrder};
use crate::singclass::factor_branches;

/// A germ of finite cover u = f1(z, w), v = f2(z, w).
#[derive(Clone, Debug)]
pub struct CoverGerm {
    pub f1: MPoly,
    pub f2: MPoly,
    pub degree: usize,
    pub family: FamilyId,
}

/// One branch of the ramification divisor, with its multiplicity in the
/// Jacobian and the local ramification index e = multiplicity + 1.
#[derive(Clone, Debug)]
pub struct RamBranch {
    pub branch: PuiseuxBranch,
    pub mult_in_j: u32,
    pub e: u32,
}

/// A branch of the ramification that maps onto a given branch curve: the
/// sheet-cycle length e and the restriction degree delta of the cover along
/// it.
#[derive(Clone, Copy, Debug)]
pub struct Contributor {
    pub ram_index: usize,
    pub e: u32,
    pub delta: u32,
}

/// A reduced parametrized branch of the branch curve B = F(R_red).
#[derive(Clone, Debug)]
pub struct BranchCurve {
    pub u: TruncSeries,
    pub v: TruncSeries,
    pub contributors: Vec<Contributor>,
}

impl BranchCurve {
    /// Multiplicity of the branch at the origin.
    pub fn multiplicity(&self) -> u32 {
        let o = |s: &TruncSeries| match s.ord() {
            VanishingOrder::Finite(n) => Some(n),
            VanishingOrder::InfiniteUpToCap(_) => None,
        };
        match (o(&self.u), o(&self.v)) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => 0,
        }
    }

    /// Branch normal form of the reduced parametrization.
    pub fn normalized(&self) -> Result<PuiseuxBranch> {
        normalize_param(&self.u, &self.v)
    }

    /// Cycle type of a meridian around this branch, padded with fixed points
    /// up to the local degree.
    pub fn meridian_class(&self, degree: usize) -> Result<Vec<usize>> {
        let mut parts: Vec<usize> = Vec::new();
        for c in &self.contributors {
            for _ in 0..c.delta {
                parts.push(c.e as usize);
            }
        }
        let total: usize = parts.iter().sum();
        if total > degree {
            return Err(Error::InconsistentDegrees);
        }
        parts.extend(std::iter::repeat(1).take(degree - total));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(parts)
    }
}

/// Branches of the ramification divisor J(f) = 0, with multiplicities.
pub fn ramification(g: &CoverGerm, trunc: u32) -> Result<Vec<RamBranch>> {
    let j = jacobian(&g.f1, &g.f2);
    if j.is_zero() {
        return Err(Error::BadParams("degenerate germ: vanishing Jacobian".into()));
    }
    let mut out = Vec::new();
    for (factor, mult) in squarefree_factor(&j)? {
        for branch in factor_branches(&factor, trunc)? {
            out.push(RamBranch { branch, mult_in_j: mult, e: mult + 1 });
        }
    }
    Ok(out)
}

/// Push the ramification branches through (f1, f2), reduce each image by
/// its exponent gcd (the restriction degree delta), and merge branches with
/// the same reduced image.
pub fn branch_images(g: &CoverGerm, rams: &[RamBranch], _trunc: u32) -> Result<Vec<BranchCurve>> {
    let mut curves: Vec<BranchCurve> = Vec::new();
    for (ram_index, rb) in rams.iter().enumerate() {
        let (x, y) = rb.branch.param();
        let u = g.f1.eval_series(&x, &y);
        let v = g.f2.eval_series(&x, &y);
        let mut delta = 0u32;
        for k in u.terms.keys().chain(v.terms.keys()) {
            delta = num::integer::gcd(delta, *k);
        }
        if delta == 0 {
            return Err(Error::BadParams("ramification branch maps to the origin".into()));
        }
        let ur = u.compress(delta);
        let vr = v.compress(delta);
        let contributor = Contributor { ram_index, e: rb.e, delta };
        match curves
            .iter_mut()
            .find(|c| params_equal_up_to_scaling(&(c.u.clone(), c.v.clone()), &(ur.clone(), vr.clone())))
        {
            Some(c) => c.contributors.push(contributor),
            None => curves.push(BranchCurve { u: ur, v: vr, contributors: vec![contributor] }),
        }
    }
    Ok(curves)
}

/// Per-curve meridian cycle types; the full dataset additionally repeats
/// each curve's class once per fiber point (its multiplicity).
pub fn monodromy_classes(g: &CoverGerm, curves: &[BranchCurve]) -> Result<Vec<Vec<usize>>> {
    curves.iter().map(|c| c.meridian_class(g.degree)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use registry::build_family;

    #[test]
    fn simple_cyclic_cover() {
        // u = z, v = w^4: one ramification branch w = 0 with e = 4
        let g = build_family(&FamilyId::F1_1).unwrap();
        let rams = ramification(&g, 32).unwrap();
        assert_eq!(rams.len(), 1);
        assert_eq!(rams[0].e, 4);
        let curves = branch_images(&g, &rams, 32).unwrap();
        assert_eq!(curves.len(), 1);
        assert_eq!(curves[0].multiplicity(), 1);
        assert_eq!(curves[0].meridian_class(4).unwrap(), vec![4]);
    }

    #[test]
    fn double_double_cover() {
        // u = z^2, v = w^2: branches z = 0 and w = 0, each e = 2, delta = 2
        let g = build_family(&FamilyId::F2_1).unwrap();
        let rams = ramification(&g, 32).unwrap();
        assert_eq!(rams.len(), 2);
        assert!(rams.iter().all(|r| r.e == 2));
        let curves = branch_images(&g, &rams, 32).unwrap();
        assert_eq!(curves.len(), 2);
        for c in &curves {
            assert_eq!(c.contributors[0].delta, 2);
            assert_eq!(c.meridian_class(4).unwrap(), vec![2, 2]);
        }
    }

    #[test]
    fn triple_plus_transposition() {
        // u = z, v = w^4 - z^n w^3 (n = 1): branches w = 0 (e = 3) and
        // 4w = 3z (e = 2); images are v = 0 and 4^4 v + 3^3 u^4 = 0
        let g = build_family(&FamilyId::F4_1 { n: 1, variant: Variant::Proof }).unwrap();
        let rams = ramification(&g, 40).unwrap();
        assert_eq!(rams.len(), 2);
        let mut es: Vec<u32> = rams.iter().map(|r| r.e).collect();
        es.sort_unstable();
        assert_eq!(es, vec![2, 3]);
        let curves = branch_images(&g, &rams, 40).unwrap();
        assert_eq!(curves.len(), 2);
        let mut classes: Vec<Vec<usize>> = monodromy_classes(&g, &curves).unwrap();
        classes.sort();
        assert_eq!(classes, vec![vec![2, 1, 1], vec![3, 1]]);
    }

    #[test]
    fn merged_images() {
        // the n = 2k+1 member of the family v = w^4 - 2 z^n w^2 has
        // the tangent pair branch with delta = 2 and image class (2,2)
        let g = build_family(&FamilyId::F3_1 { n: 3 }).unwrap();
        let rams = ramification(&g, 48).unwrap();
        let curves = branch_images(&g, &rams, 48).unwrap();
        assert_eq!(curves.len(), 2);
        let mut classes = monodromy_classes(&g, &curves).unwrap();
        classes.sort();
        assert_eq!(classes, vec![vec![2, 1, 1], vec![2, 2]]);
    }
}
