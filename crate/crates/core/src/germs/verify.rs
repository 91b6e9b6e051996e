//! End-to-end row verification: ramification type, branch-curve type,
//! dataset, and enumerated monodromy groups against the expected table.

use super::registry::{
    build_family, expectations, icosa_phi, icosa_psi, icosa_theta, klein_pipeline_enabled,
    octa_phi, octa_psi, octa_theta, tetra_phi, tetra_psi, tetra_theta, FamilyId,
    GroupExpectation, Variant,
};
use super::{branch_images, monodromy_classes, ramification, BranchCurve, CoverGerm};
use crate::braid::braid_monodromy;
use crate::error::{Error, Result};
use crate::homenum::{classify_conjugacy, enumerate, generated_labels, DatasetSpec, MonodromyDataset};
use crate::label::SingularityLabel;
use crate::perm::{contains_alternating, PermGroup, DEFAULT_CAP};
use crate::present::{zvk_presentation, Presentation};
use crate::series::coeff::Coeff;
use crate::series::mpoly::MPoly;
use crate::series::puiseux::PuiseuxBranch;
use crate::series::{hessian, jacobian};
use crate::singclass::{classify, intersection_multiplicity, invariant_of, EquisingInvariant};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct RowReport {
    pub family: String,
    pub truncation: u32,
    pub ramification_type: Option<String>,
    pub branch_type: String,
    pub dataset: String,
    pub solutions: usize,
    pub classes: usize,
    pub groups: Vec<String>,
    pub expected_branch_type: Option<String>,
    pub expected_group: Option<String>,
    pub expected_ramification_type: Option<String>,
    pub informational: bool,
    pub pass: bool,
    pub note: String,
}

struct Analysis {
    ram_invariant: EquisingInvariant,
    curves: Vec<BranchCurve>,
    normalized: Vec<PuiseuxBranch>,
    branch_invariant: EquisingInvariant,
    classes: Vec<Vec<usize>>,
}

fn analyze(germ: &CoverGerm, trunc: u32, with_classes: bool) -> Result<Analysis> {
    let rams = ramification(germ, trunc)?;
    let ram_branches: Vec<PuiseuxBranch> = rams.iter().map(|r| r.branch.clone()).collect();
    let ram_invariant = invariant_of(&ram_branches)?;
    let curves = branch_images(germ, &rams, trunc)?;
    let normalized: Vec<PuiseuxBranch> =
        curves.iter().map(|c| c.normalized()).collect::<Result<_>>()?;
    let branch_invariant = invariant_of(&normalized)?;
    let classes = if with_classes { monodromy_classes(germ, &curves)? } else { vec![] };
    Ok(Analysis { ram_invariant, curves, normalized, branch_invariant, classes })
}

/// Default truncation: a slack factor of four over the largest exponent in
/// the defining functions.
pub fn default_truncation(germ: &CoverGerm) -> u32 {
    let m = germ.f1.max_exponent().max(germ.f2.max_exponent());
    (4 * (1 + m)).clamp(32, 512)
}

/// Run the full pipeline for one family instance and compare against the
/// expected invariants. Truncation doubles automatically when too small.
pub fn verify_row(id: &FamilyId, trunc: Option<u32>) -> Result<RowReport> {
    let germ = build_family(id)?;
    let mut n = trunc.unwrap_or_else(|| default_truncation(&germ));
    loop {
        match verify_row_at(&germ, id, n) {
            Err(Error::TruncationTooSmall(_)) if n < 512 => n = (n * 2).min(512),
            other => return other,
        }
    }
}

fn verify_row_at(germ: &CoverGerm, id: &FamilyId, trunc: u32) -> Result<RowReport> {
    let expect = expectations(id);
    let informational = matches!(
        id,
        FamilyId::F4_6 { variant: Variant::Theorem, .. } | FamilyId::F4_1 { variant: Variant::Theorem, .. }
    );
    let is_klein = matches!(id, FamilyId::Klein(_));
    let klein_pipeline = match id {
        FamilyId::Klein(row) => klein_pipeline_enabled(row),
        _ => true,
    };

    let mut report = RowReport {
        family: id.to_string(),
        truncation: trunc,
        ramification_type: None,
        branch_type: String::new(),
        dataset: String::new(),
        solutions: 0,
        classes: 0,
        groups: vec![],
        expected_branch_type: expect.branch_type.as_ref().map(|l| l.canonical().to_string()),
        expected_group: expect.group.as_ref().map(|g| g.to_string()),
        expected_ramification_type: expect.ramification_type.as_ref().map(|l| l.canonical().to_string()),
        informational,
        pass: true,
        note: String::new(),
    };

    if is_klein && !klein_pipeline {
        report.branch_type = expect
            .branch_type
            .as_ref()
            .map(|l| l.canonical().to_string())
            .unwrap_or_default();
        report.note = "branch type as stated; pipeline runs only on the low-degree rows".into();
        return Ok(report);
    }

    // Full analysis at the working truncation and the stability re-check.
    let run = (|| -> Result<(Analysis, Analysis)> {
        let a1 = analyze(germ, trunc, !is_klein)?;
        let a2 = analyze(germ, trunc + 4, !is_klein)?;
        Ok((a1, a2))
    })();
    let (a1, a2) = match run {
        Ok(x) => x,
        Err(Error::UnsupportedCoefficientField(msg)) if informational => {
            report.branch_type = format!("not computable over Q(sqrt(-3), i): {msg}");
            report.note = "this printed form leaves the coefficient field; the companion form is the verified one".into();
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    if a1.ram_invariant != a2.ram_invariant
        || a1.branch_invariant != a2.branch_invariant
        || a1.classes != a2.classes
    {
        return Err(Error::TruncationTooSmall(trunc));
    }

    // Ramification divisor type.
    let tr = classify(&a1.ram_invariant, trunc)?;
    report.ramification_type = Some(tr.display());
    if let Some(expected) = &expect.ramification_type {
        if tr.label().map(|l| l.same_type(expected)) != Some(true) {
            report.pass = false;
            report.note = format!(
                "ramification type mismatch: computed {} expected {}",
                tr.display(),
                expected.canonical()
            );
        }
    }

    // Branch curve type.
    let tb = classify(&a1.branch_invariant, trunc)?;
    report.branch_type = tb.display();
    let tb_label = match (tb.label(), &expect.branch_type) {
        (Some(l), Some(expected)) => {
            if !l.same_type(expected) {
                report.pass = false;
                report.note = format!(
                    "branch type mismatch: computed {} expected {}",
                    tb.display(),
                    expected.canonical()
                );
            }
            Some(l.clone())
        }
        (Some(l), None) => Some(l.clone()),
        (None, _) => {
            report.pass = false;
            report.note = format!("branch curve not classified: {}", tb.display());
            None
        }
    };

    if is_klein {
        return Ok(report);
    }

    // Dataset and enumeration.
    let label = match tb_label {
        Some(l) => l,
        None => return Ok(report),
    };
    let slots = dataset_slots(&label, &a1)?;
    let ds_classes: Vec<Vec<usize>> = slots.iter().map(|&i| a1.classes[i].clone()).collect();
    let ds = MonodromyDataset::new(germ.degree, ds_classes);
    report.dataset = ds.display();
    let presentation = presentation_for(&label, ds.classes.len())?;
    let tuples = enumerate(&presentation, &DatasetSpec::Classes(ds), true);
    let classes = classify_conjugacy(&tuples);
    report.solutions = tuples.len();
    report.classes = classes.len();
    if tuples.is_empty() {
        report.pass = false;
        report.note = "no monodromy solutions for the derived dataset".into();
        return Ok(report);
    }
    match &expect.group {
        Some(GroupExpectation::Label(expected)) => {
            let labels = generated_labels(&classes);
            report.groups = labels.iter().map(|l| l.to_string()).collect();
            if labels != vec![expected.clone()] {
                report.pass = false;
                report.note = format!("group mismatch: computed {:?} expected {expected}", report.groups);
            }
        }
        Some(ge) => {
            let (want_order, degree) = match ge {
                GroupExpectation::FullSymmetric { degree } => (factorial(*degree), *degree),
                GroupExpectation::FullAlternating { degree } => (factorial(*degree) / 2, *degree),
                GroupExpectation::Label(_) => unreachable!(),
            };
            let mut ok = true;
            for c in &classes {
                let g = PermGroup::generate_lazy(&c.representative.images, degree, DEFAULT_CAP);
                if g.order() != Some(want_order) || !contains_alternating(&g, DEFAULT_CAP)? {
                    ok = false;
                }
            }
            report.groups = vec![ge.to_string()];
            if !ok {
                report.pass = false;
                report.note = "generated group does not match the parity rule".into();
            }
        }
        None => {}
    }
    Ok(report)
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Assign branch curves to generator slots in the convention the
/// closed-form presentations use.
fn dataset_slots(label: &SingularityLabel, a: &Analysis) -> Result<Vec<usize>> {
    use SingularityLabel as L;
    let curves = &a.curves;
    let mults: Vec<u32> = curves.iter().map(|c| c.multiplicity()).collect();
    let pair_and_rest = |a: &Analysis| -> Result<(usize, usize, usize)> {
        // the twisted pair is the two branches with maximal mutual contact
        assert_eq!(curves.len(), 3);
        let mut best = (0, 1, 0u64);
        for i in 0..3 {
            for j in (i + 1)..3 {
                let m = intersection_multiplicity(&a.normalized[i], &a.normalized[j])?;
                if m > best.2 {
                    best = (i, j, m);
                }
            }
        }
        let rest = (0..3).find(|x| *x != best.0 && *x != best.1).unwrap();
        Ok((best.0, best.1, rest))
    };
    let by_mult = |want: u32| -> Option<usize> { mults.iter().position(|&m| m == want) };
    let slots = match label.table_form() {
        L::A(0) => {
            assert_eq!(curves.len(), 1);
            vec![0]
        }
        L::A(_) => {
            if curves.len() == 1 {
                vec![0, 0]
            } else {
                // order by meridian class, larger cycles first
                let mut idx = vec![0, 1];
                idx.sort_by(|&x, &y| a.classes[y].cmp(&a.classes[x]));
                idx
            }
        }
        L::T3NB { .. } => {
            assert_eq!(curves.len(), 1);
            vec![0, 0, 0]
        }
        L::D(_) => {
            if curves.len() == 2 {
                let line = by_mult(1).ok_or(Error::InconsistentDegrees)?;
                let cusp = 1 - line;
                vec![line, cusp, cusp]
            } else {
                let (p1, p2, line) = pair_and_rest(a)?;
                vec![line, p1, p2]
            }
        }
        L::T3Even { .. } => {
            if curves.len() == 2 {
                let cusp = by_mult(2).ok_or(Error::InconsistentDegrees)?;
                let line = 1 - cusp;
                vec![cusp, cusp, line]
            } else {
                let (p1, p2, line) = pair_and_rest(a)?;
                vec![p1, p2, line]
            }
        }
        L::T3Odd { n } => {
            if n % 2 == 1 {
                let cusp = by_mult(2).ok_or(Error::InconsistentDegrees)?;
                let line = 1 - cusp;
                vec![cusp, line, cusp]
            } else {
                vec![0, 1, 2]
            }
        }
        L::T4 { .. } => {
            assert_eq!(curves.len(), 2);
            vec![0, 0, 1, 1]
        }
        _ => return Err(Error::UnsupportedLabel(label.to_string())),
    };
    Ok(slots)
}

fn presentation_for(label: &SingularityLabel, rank: usize) -> Result<Presentation> {
    use SingularityLabel as L;
    let p = match label.table_form() {
        L::A(0) => Presentation::free(1),
        L::T4 { .. } => Presentation::free(4),
        other => zvk_presentation(&braid_monodromy(&other)?),
    };
    if p.rank != rank {
        return Err(Error::InconsistentDegrees);
    }
    Ok(p)
}

// ---------- invariant-form identities ----------

#[derive(Clone, Debug, Serialize)]
pub struct KleinIdentityItem {
    pub name: String,
    pub constant: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct KleinReport {
    pub items: Vec<KleinIdentityItem>,
    pub pass: bool,
}

/// Exact scalar c with f = c * g, when one exists.
pub fn proportionality(f: &MPoly, g: &MPoly) -> Option<Coeff> {
    if f.is_zero() || g.is_zero() {
        return None;
    }
    let keys_f: Vec<_> = f.terms.keys().collect();
    let keys_g: Vec<_> = g.terms.keys().collect();
    if keys_f != keys_g {
        return None;
    }
    let e0 = keys_f[0];
    let c = f.coeff(*e0).div(&g.coeff(*e0));
    if f == &g.scale(&c) {
        Some(c)
    } else {
        None
    }
}

/// For each polyhedral triple: the Hessian of phi is proportional to psi
/// and the Jacobian of (phi, psi) is proportional to theta, with exact
/// nonzero constants.
pub fn verify_klein_identities() -> KleinReport {
    let triples = [
        ("tetrahedral", tetra_phi(), tetra_psi(), tetra_theta()),
        ("octahedral", octa_phi(), octa_psi(), octa_theta()),
        ("icosahedral", icosa_phi(), icosa_psi(), icosa_theta()),
    ];
    let mut items = Vec::new();
    for (name, phi, psi, theta) in triples {
        let h = hessian(&phi);
        let c1 = proportionality(&h, &psi);
        items.push(KleinIdentityItem {
            name: format!("{name}: hessian(phi) = c * psi"),
            constant: c1.as_ref().map(|c| c.to_string()).unwrap_or_else(|| "none".into()),
            pass: c1.map(|c| !c.is_zero()).unwrap_or(false),
        });
        let j = jacobian(&phi, &psi);
        let c2 = proportionality(&j, &theta);
        items.push(KleinIdentityItem {
            name: format!("{name}: jacobian(phi, psi) = c * theta"),
            constant: c2.as_ref().map(|c| c.to_string()).unwrap_or_else(|| "none".into()),
            pass: c2.map(|c| !c.is_zero()).unwrap_or(false),
        });
    }
    let pass = items.iter().all(|i| i.pass);
    KleinReport { items, pass }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::germs::registry::KleinRow;

    #[test]
    fn klein_identities_hold() {
        let r = verify_klein_identities();
        for item in &r.items {
            assert!(item.pass, "{}: c = {}", item.name, item.constant);
        }
        // the tetrahedral Hessian constant is 48 sqrt(-3)
        let h = hessian(&tetra_phi());
        let c = proportionality(&h, &tetra_psi()).unwrap();
        assert_eq!(c, Coeff::sqrt_m3().mul(&Coeff::from_int(48)));
        // and the octahedral one is -25
        let h = hessian(&octa_phi());
        let c = proportionality(&h, &octa_psi()).unwrap();
        assert_eq!(c, Coeff::from_int(-25));
    }

    #[test]
    fn smallest_rows() {
        for (id, tb, g) in [
            (FamilyId::F1_1, "A_0", "Z4"),
            (FamilyId::F2_1, "A_1", "Kl4"),
            (FamilyId::F3_1 { n: 1 }, "A_3", "D4"),
            (FamilyId::F3_2 { n: 1 }, "D_5", "D4"),
            (FamilyId::F4_1 { n: 1, variant: Variant::Proof }, "A_7", "S4"),
        ] {
            let r = verify_row(&id, None).unwrap();
            assert!(r.pass, "{id:?}: {r:?}");
            assert!(r.branch_type.starts_with(tb), "{id:?}: {}", r.branch_type);
            assert_eq!(r.groups, vec![g.to_string()], "{id:?}");
        }
    }

    #[test]
    fn triple_point_rows() {
        for id in [
            FamilyId::F4_2 { n: 0, beta: 1 },
            FamilyId::F4_2 { n: 0, beta: 2 },
            FamilyId::F4_3 { n: 0, m: 1 },
            FamilyId::F4_4 { n: 0, m: 1 },
            FamilyId::F4_5 { k: 1, m: 1 },
            FamilyId::F4_6 { n: 1, m: 1, variant: Variant::Proof },
            FamilyId::F4_7 { m: 1 },
            FamilyId::F4_8 { n1: 1, n2: 1 },
        ] {
            let r = verify_row(&id, None).unwrap();
            assert!(r.pass, "{id:?}: {r:?}");
        }
    }

    #[test]
    fn theorem_variant_of_discrepant_row_is_reported() {
        let r = verify_row(&FamilyId::F4_6 { n: 1, m: 1, variant: Variant::Theorem }, None).unwrap();
        assert!(r.informational);
        assert!(r.pass); // informational rows never fail the run
    }

    #[test]
    fn higher_degree_family() {
        let r = verify_row(&FamilyId::Fmnk { m: 1, n: 1, k: 1 }, None).unwrap();
        assert!(r.pass, "{r:?}");
        assert!(r.branch_type.starts_with("A_5"), "{}", r.branch_type);
        assert_eq!(r.groups, vec!["S3".to_string()]);
        let r = verify_row(&FamilyId::Fmnk { m: 2, n: 2, k: 1 }, None).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.groups, vec!["A5".to_string()]);
    }

    #[test]
    fn klein_pipeline_rows() {
        for (id, tb) in [
            (FamilyId::Klein(KleinRow::K1), "A_2"),
            (FamilyId::Klein(KleinRow::K2_2 { p: 2 }), "A_1"),
            (FamilyId::Klein(KleinRow::K2_2 { p: 3 }), "A_2"),
            (FamilyId::Klein(KleinRow::K2_2 { p: 4 }), "A_3"),
            (FamilyId::Klein(KleinRow::K3 { n1: 2, n2: 3 }), "A_1"),
        ] {
            let r = verify_row(&id, None).unwrap();
            assert!(r.pass, "{id:?}: {r:?}");
            assert!(r.branch_type.starts_with(tb), "{id:?}: {}", r.branch_type);
        }
    }
}
