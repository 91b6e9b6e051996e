//! The equisingularity invariant of a curve germ (per-branch multiplicity
//! and characteristic exponents plus the pairwise intersection matrix) and
//! classification against the taxonomy, with self-computed reference models
//! as the matching oracle.

use crate::error::{Error, Result};
use crate::label::SingularityLabel;

use crate::series::mpoly::MPoly;
use crate::series::puiseux::{
    eval_defining_along, newton_puiseux, normalize_param, Axis, PuiseuxBranch,
};
use crate::series::trunc::VanishingOrder;
use crate::series::squarefree_factor;
use serde::Serialize;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Per-branch topological data.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct BranchData {
    pub mult: u32,
    pub char_exponents: Vec<u64>,
}

/// The invariant: branch data plus the symmetric pairwise intersection
/// matrix, canonicalized over branch orderings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquisingInvariant {
    pub branches: Vec<BranchData>,
    pub matrix: Vec<Vec<u64>>,
}

impl EquisingInvariant {
    pub fn display(&self) -> String {
        let bs: Vec<String> = self
            .branches
            .iter()
            .map(|b| format!("(m={}, chars={:?})", b.mult, b.char_exponents))
            .collect();
        format!("branches [{}], matrix {:?}", bs.join(", "), self.matrix)
    }
}

/// Branches (reduced) of the curve f = 0 at the origin, handling vertical
/// components and discarding factors that are units at the origin.
pub fn curve_branches(f: &MPoly, trunc: u32) -> Result<Vec<PuiseuxBranch>> {
    let mut out = Vec::new();
    for (factor, _mult) in squarefree_factor(f)? {
        out.extend(factor_branches(&factor, trunc)?);
    }
    Ok(out)
}

/// Branches of a single square-free factor (empty for units).
pub fn factor_branches(factor: &MPoly, trunc: u32) -> Result<Vec<PuiseuxBranch>> {
    if !factor.coeff((0, 0)).is_zero() {
        return Ok(vec![]); // unit at the origin
    }
    if factor.degree_y().unwrap_or(0) == 0 {
        // pure x-part vanishing at the origin: the vertical axis
        return Ok(vec![PuiseuxBranch::axis_branch(Axis::YParam, trunc)]);
    }
    newton_puiseux(factor, trunc)
}

/// Re-orient a branch so the component of smaller order is the parameter.
fn reorient(b: &PuiseuxBranch) -> Result<PuiseuxBranch> {
    let (u, v) = b.param();
    normalize_param(&u, &v)
}

/// Multiplicity and characteristic exponents of one branch. Uses a
/// harmless diagonal rescaling to stay inside the coefficient field.
pub fn branch_data(b: &PuiseuxBranch) -> Result<BranchData> {
    let (u, v) = b.param();
    // pick the smaller-order component and scale its leading coefficient to
    // 1 (a coordinate scaling; invisible to the invariant)
    let (mut lead_side, mut other, axis) = match (u.ord(), v.ord()) {
        (VanishingOrder::InfiniteUpToCap(_), _) => {
            return Ok(BranchData { mult: 1, char_exponents: vec![] })
        }
        (_, VanishingOrder::InfiniteUpToCap(_)) => {
            return Ok(BranchData { mult: 1, char_exponents: vec![] })
        }
        (VanishingOrder::Finite(a), VanishingOrder::Finite(bo)) => {
            if a <= bo {
                (u.clone(), v.clone(), Axis::XParam)
            } else {
                (v.clone(), u.clone(), Axis::YParam)
            }
        }
    };
    let lead = lead_side.leading().unwrap().1.clone();
    lead_side = lead_side.scale(&lead.inv());
    let _ = axis;
    let nb = normalize_param(&lead_side, &other)?;
    other = nb.series.clone();
    let _ = other;
    let mult = nb.ram;
    let mut d = mult as u64;
    let mut chars = Vec::new();
    for (e, _) in &nb.series.terms {
        if d == 1 {
            break;
        }
        let e = *e as u64;
        if e % d != 0 {
            chars.push(e);
            d = num::integer::gcd(d, e);
        }
    }
    if d != 1 {
        return Err(Error::TruncationTooSmall(nb.series.cap));
    }
    Ok(BranchData { mult, char_exponents: chars })
}

/// Intersection multiplicity of two distinct branches, computed by
/// substituting each parametrization into the defining polynomial of the
/// other; the two directions must agree.
pub fn intersection_multiplicity(b1: &PuiseuxBranch, b2: &PuiseuxBranch) -> Result<u64> {
    let n1 = reorient(b1)?;
    let n2 = reorient(b2)?;
    let s12 = eval_defining_along(&n2, &n1)?;
    let s21 = eval_defining_along(&n1, &n2)?;
    match (s12.ord(), s21.ord()) {
        (VanishingOrder::Finite(a), VanishingOrder::Finite(b)) => {
            if a != b {
                return Err(Error::TruncationTooSmall(s12.cap.min(s21.cap)));
            }
            Ok(a as u64)
        }
        _ => Err(Error::TruncationTooSmall(s12.cap.min(s21.cap))),
    }
}

/// The canonical equisingularity invariant of a list of pairwise distinct
/// branches.
pub fn invariant_of(branches: &[PuiseuxBranch]) -> Result<EquisingInvariant> {
    let n = branches.len();
    let mut data = Vec::with_capacity(n);
    for b in branches {
        data.push(branch_data(b)?);
    }
    let mut matrix = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let m = intersection_multiplicity(&branches[i], &branches[j])?;
            matrix[i][j] = m;
            matrix[j][i] = m;
        }
    }
    Ok(canonicalize(data, matrix))
}

fn canonicalize(data: Vec<BranchData>, matrix: Vec<Vec<u64>>) -> EquisingInvariant {
    let n = data.len();
    let mut order: Vec<usize> = (0..n).collect();
    let mut best: Option<EquisingInvariant> = None;
    permute(&mut order, 0, &mut |perm| {
        let branches: Vec<BranchData> = perm.iter().map(|&i| data[i].clone()).collect();
        let m: Vec<Vec<u64>> = perm
            .iter()
            .map(|&i| perm.iter().map(|&j| matrix[i][j]).collect())
            .collect();
        let cand = EquisingInvariant { branches, matrix: m };
        let better = match &best {
            None => true,
            Some(b) => (&cand.branches, &cand.matrix) < (&b.branches, &b.matrix),
        };
        if better {
            best = Some(cand);
        }
    });
    best.unwrap_or(EquisingInvariant { branches: vec![], matrix: vec![] })
}

fn permute(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Result of classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Known { canonical: SingularityLabel, aliases: Vec<SingularityLabel> },
    Unknown(EquisingInvariant),
}

impl Classification {
    pub fn label(&self) -> Option<&SingularityLabel> {
        match self {
            Classification::Known { canonical, .. } => Some(canonical),
            Classification::Unknown(_) => None,
        }
    }
    pub fn display(&self) -> String {
        match self {
            Classification::Known { canonical, aliases } => {
                if aliases.len() > 1 {
                    let alts: Vec<String> =
                        aliases.iter().skip(1).map(|l| l.to_string()).collect();
                    format!("{canonical} (= {})", alts.join(" = "))
                } else {
                    canonical.to_string()
                }
            }
            Classification::Unknown(inv) => format!("UNKNOWN [{}]", inv.display()),
        }
    }
}

/// Reference invariant of a taxonomy label, computed from its defining
/// equation through the same pipeline and memoized.
pub fn reference_model(label: &SingularityLabel, trunc: u32) -> Result<EquisingInvariant> {
    label.check_params()?;
    static CACHE: OnceLock<Mutex<HashMap<(SingularityLabel, u32), EquisingInvariant>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (label.table_form(), trunc);
    if let Some(inv) = cache.lock().unwrap().get(&key) {
        return Ok(inv.clone());
    }
    let f = label.defining_poly(["u", "v"]);
    let branches = curve_branches(&f, trunc)?;
    let inv = invariant_of(&branches)?;
    cache.lock().unwrap().insert(key, inv.clone());
    Ok(inv)
}

/// Match an invariant against the taxonomy: derive the unique candidate
/// label from the branch structure, then verify it against the reference
/// model computed from the candidate's own defining equation.
pub fn classify(inv: &EquisingInvariant, trunc: u32) -> Result<Classification> {
    let candidate = derive_candidate(inv);
    if let Some(label) = candidate {
        let reference = reference_model(&label, trunc)?;
        if &reference == inv {
            return Ok(Classification::Known {
                canonical: label.canonical(),
                aliases: label.aliases(),
            });
        }
    }
    Ok(Classification::Unknown(inv.clone()))
}

fn derive_candidate(inv: &EquisingInvariant) -> Option<SingularityLabel> {
    use SingularityLabel as L;
    let bs = &inv.branches;
    match bs.len() {
        1 => {
            let b = &bs[0];
            match (b.mult, b.char_exponents.as_slice()) {
                (1, []) => Some(L::A(0)),
                (2, [c]) => Some(L::A(*c as u32 - 1)),
                (3, [c]) => {
                    let c = *c as u32;
                    let beta = c % 3;
                    if beta == 0 {
                        None
                    } else {
                        Some(L::T3NB { n: c / 3, beta })
                    }
                }
                _ => None,
            }
        }
        2 => {
            let (b1, b2) = (&bs[0], &bs[1]);
            let j = inv.matrix[0][1];
            let smooth = |b: &BranchData| b.mult == 1 && b.char_exponents.is_empty();
            if smooth(b1) && smooth(b2) {
                return Some(L::A(2 * j as u32 - 1));
            }
            let cusp_char = |b: &BranchData| -> Option<u64> {
                if b.mult == 2 && b.char_exponents.len() == 1 {
                    Some(b.char_exponents[0])
                } else {
                    None
                }
            };
            match (smooth(b1), cusp_char(b1), smooth(b2), cusp_char(b2)) {
                (true, _, false, Some(c)) | (false, Some(c), true, _) => {
                    if j == c && c >= 3 {
                        Some(L::T3Odd { n: c as u32 })
                    } else if j % 2 == 0 && c > j {
                        let k = (j / 2) as u32;
                        let n = (c - j - 1) as u32;
                        if k >= 1 && n % 2 == 0 {
                            Some(L::T3Even { k, n })
                        } else {
                            None
                        }
                    } else {
                        None
                    }
                }
                (false, Some(c1), false, Some(c2)) => {
                    if j == 4 && c1 % 2 == 1 && c2 % 2 == 1 {
                        Some(L::T4 { n1: ((c1 - 1) / 2) as u32, n2: ((c2 - 1) / 2) as u32 })
                    } else {
                        None
                    }
                }
                _ => None,
            }
        }
        3 => {
            if !bs.iter().all(|b| b.mult == 1 && b.char_exponents.is_empty()) {
                return None;
            }
            let mut ints = vec![inv.matrix[0][1], inv.matrix[0][2], inv.matrix[1][2]];
            ints.sort_unstable();
            let (p, q, r) = (ints[0], ints[1], ints[2]);
            if p == q && q == r {
                Some(L::T3Odd { n: 2 * p as u32 })
            } else if p == q && r > q {
                Some(L::T3Even { k: p as u32, n: (2 * (r - p) - 1) as u32 })
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Classify the germ of f = 0 at the origin, with the stability re-check:
/// the classification at truncation N and N + 4 must agree.
pub fn classify_curve(f: &MPoly, trunc: u32) -> Result<Classification> {
    let inv1 = invariant_of(&curve_branches(f, trunc)?)?;
    let inv2 = invariant_of(&curve_branches(f, trunc + 4)?)?;
    if inv1 != inv2 {
        return Err(Error::TruncationTooSmall(trunc));
    }
    classify(&inv1, trunc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::coeff::Coeff;
    use crate::series::parse_mpoly;

    fn classify_str(s: &str, n: u32) -> Classification {
        let f = parse_mpoly(s, ["u", "v"]).unwrap();
        classify_curve(&f, n).unwrap()
    }

    #[test]
    fn basics() {
        use SingularityLabel as L;
        assert_eq!(classify_str("u*v", 20).label(), Some(&L::A(1)));
        assert_eq!(classify_str("v^2 - u^3", 20).label(), Some(&L::A(2)));
        assert_eq!(classify_str("v^3 - u^7", 40).label(), Some(&L::T3NB { n: 2, beta: 1 }));
        assert_eq!(classify_str("v^2 - u^4", 20).label(), Some(&L::A(3)));
        assert_eq!(classify_str("u*(v^2 - u^2)", 20).label(), Some(&L::D(4)));
        assert_eq!(classify_str("v*((v-u)^2 - u^5)", 40).label(), Some(&L::T3Even { k: 1, n: 2 }).map(|l| l.canonical()).as_ref());
    }

    #[test]
    fn cusp_axis_contact() {
        // v = 0 against (t^2, -t^(8k+4)) at k = 1: contact 12
        let f = parse_mpoly("v + u^6", ["u", "v"]).unwrap();
        let b = &newton_puiseux(&f, 40).unwrap()[0];
        // unreduced image parametrization has the doubled exponents
        let unreduced = PuiseuxBranch {
            ram: 2,
            series: crate::series::TruncSeries::monomial(Coeff::from_int(-1), 12, 40),
            axis: Axis::XParam,
        };
        let axis = PuiseuxBranch::axis_branch(Axis::XParam, 40);
        let s = eval_defining_along(&axis, &unreduced).unwrap();
        assert_eq!(s.ord().finite(), Some(12));
        let _ = b;
        // two transverse smooth branches meet with multiplicity 1
        let l1 = &newton_puiseux(&parse_mpoly("v - u", ["u", "v"]).unwrap(), 20).unwrap()[0];
        let l2 = &newton_puiseux(&parse_mpoly("v + u", ["u", "v"]).unwrap(), 20).unwrap()[0];
        assert_eq!(intersection_multiplicity(l1, l2).unwrap(), 1);
        // parabola against its tangent axis: 2
        let par = &newton_puiseux(&parse_mpoly("v - u^2", ["u", "v"]).unwrap(), 20).unwrap()[0];
        let ax = PuiseuxBranch::axis_branch(Axis::XParam, 20);
        assert_eq!(intersection_multiplicity(par, &ax).unwrap(), 2);
    }

    #[test]
    fn invariant_examples() {
        // cusp: one branch, mult 2, char 3
        let f = parse_mpoly("v^2 - u^3", ["u", "v"]).unwrap();
        let inv = invariant_of(&curve_branches(&f, 30).unwrap()).unwrap();
        assert_eq!(inv.branches, vec![BranchData { mult: 2, char_exponents: vec![3] }]);
        // node: two smooth branches meeting once
        let f = parse_mpoly("u*v", ["u", "v"]).unwrap();
        let inv = invariant_of(&curve_branches(&f, 30).unwrap()).unwrap();
        assert_eq!(inv.branches.len(), 2);
        assert_eq!(inv.matrix[0][1], 1);
        // v((v-u)^2 - u^5): three-branch pattern of the even-contact type
        let f = parse_mpoly("v*((v-u)^2 - u^5)", ["u", "v"]).unwrap();
        let inv = invariant_of(&curve_branches(&f, 40).unwrap()).unwrap();
        assert_eq!(inv.branches.len(), 2);
        let reference = reference_model(&SingularityLabel::T3Even { k: 1, n: 2 }, 40).unwrap();
        assert_eq!(inv, reference);
    }

    #[test]
    fn round_trips() {
        use SingularityLabel as L;
        let mut labels: Vec<L> = Vec::new();
        for n in 0..=12 {
            labels.push(L::A(n));
        }
        for n in 4..=12 {
            labels.push(L::D(n));
        }
        labels.extend([L::E6, L::E7, L::E8]);
        for n in 0..=3 {
            for beta in 1..=2 {
                labels.push(L::T3NB { n, beta });
            }
        }
        for k in 1..=4 {
            for n in 0..=5 {
                labels.push(L::T3Even { k, n });
            }
        }
        for n in 2..=12 {
            labels.push(L::T3Odd { n });
        }
        for n1 in 1..=2 {
            for n2 in 1..=2 {
                labels.push(L::T4 { n1, n2 });
            }
        }
        for l in labels {
            let trunc = 96;
            let inv = reference_model(&l, trunc).unwrap();
            let c = classify(&inv, trunc).unwrap();
            match c {
                Classification::Known { canonical, aliases } => {
                    assert_eq!(canonical, l.canonical(), "label {l}");
                    assert!(aliases.contains(&l.canonical()), "aliases of {l}");
                }
                Classification::Unknown(inv) => panic!("{l} unclassified: {}", inv.display()),
            }
        }
    }

    #[test]
    fn alias_identities_computed() {
        use SingularityLabel as L;
        let t = 64;
        assert_eq!(reference_model(&L::E6, t).unwrap(), reference_model(&L::T3Odd { n: 3 }, t).unwrap());
        assert_eq!(reference_model(&L::E7, t).unwrap(), reference_model(&L::T3NB { n: 1, beta: 1 }, t).unwrap());
        assert_eq!(reference_model(&L::E8, t).unwrap(), reference_model(&L::T3NB { n: 1, beta: 2 }, t).unwrap());
        assert_eq!(reference_model(&L::D(4), t).unwrap(), reference_model(&L::T3Odd { n: 2 }, t).unwrap());
        assert_eq!(reference_model(&L::D(5), t).unwrap(), reference_model(&L::T3Even { k: 1, n: 0 }, t).unwrap());
        assert_eq!(reference_model(&L::D(6), t).unwrap(), reference_model(&L::T3Even { k: 1, n: 1 }, t).unwrap());
    }

    #[test]
    fn reparametrization_stable() {
        let f = parse_mpoly("v^2 - u^5", ["u", "v"]).unwrap();
        let b = &newton_puiseux(&f, 30).unwrap()[0];
        let scaled = b.rescale(&Coeff::from_int(2));
        assert_eq!(branch_data(b).unwrap(), branch_data(&scaled).unwrap());
    }

    #[test]
    fn symmetric_intersections_on_reference_pairs() {
        use SingularityLabel as L;
        for l in [L::T3Even { k: 2, n: 1 }, L::T3Odd { n: 5 }, L::T4 { n1: 1, n2: 2 }, L::D(7)] {
            let f = l.defining_poly(["u", "v"]);
            let bs = curve_branches(&f, 64).unwrap();
            for i in 0..bs.len() {
                for j in (i + 1)..bs.len() {
                    // intersection_multiplicity already checks both
                    // directions agree
                    let _ = intersection_multiplicity(&bs[i], &bs[j]).unwrap();
                }
            }
        }
    }
}
