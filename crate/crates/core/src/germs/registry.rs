//! The family registry: explicit defining functions for every classified
//! four-sheeted germ, the binomial-integral family of higher degree, and
//! the Galois smooth-cover rows, together with the expected invariants.

use super::CoverGerm;
use crate::error::{Error, Result};
use crate::label::SingularityLabel;
use crate::perm::SubgroupLabel;
use crate::series::mpoly::{parse_mpoly, MPoly};
use std::fmt;

/// Which written form of a family to use when the two disagree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// The form whose ramification factorization is printed alongside it;
    /// this is the canonical registry entry.
    Proof,
    /// The displayed classification-table form, reported for comparison.
    Theorem,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Proof => write!(f, "proof"),
            Variant::Theorem => write!(f, "theorem"),
        }
    }
}

/// Galois smooth-cover rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum KleinRow {
    K1,
    K2_1 { p: u32, q: u32 },
    K2_2 { p: u32 },
    K2_3 { q: u32 },
    K3 { n1: u32, n2: u32 },
    /// Rows 4..22: compositions of the polyhedral invariant forms.
    KForm(u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilyId {
    F1_1,
    F2_1,
    F3_1 { n: u32 },
    F3_2 { n: u32 },
    F4_1 { n: u32, variant: Variant },
    F4_2 { n: u32, beta: u32 },
    F4_3 { n: u32, m: u32 },
    F4_4 { n: u32, m: u32 },
    F4_5 { k: u32, m: u32 },
    F4_6 { n: u32, m: u32, variant: Variant },
    F4_7 { m: u32 },
    F4_8 { n1: u32, n2: u32 },
    Fmnk { m: u32, n: u32, k: u32 },
    Klein(KleinRow),
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilyId::*;
        match self {
            F1_1 => write!(f, "F1_1"),
            F2_1 => write!(f, "F2_1"),
            F3_1 { n } => write!(f, "F3_1:n={n}"),
            F3_2 { n } => write!(f, "F3_2:n={n}"),
            F4_1 { n, variant } => write!(f, "F4_1:n={n}[{variant}]"),
            F4_2 { n, beta } => write!(f, "F4_2:n={n},beta={beta}"),
            F4_3 { n, m } => write!(f, "F4_3:n={n},m={m}"),
            F4_4 { n, m } => write!(f, "F4_4:n={n},m={m}"),
            F4_5 { k, m } => write!(f, "F4_5:k={k},m={m}"),
            F4_6 { n, m, variant } => write!(f, "F4_6:n={n},m={m}[{variant}]"),
            F4_7 { m } => write!(f, "F4_7:m={m}"),
            F4_8 { n1, n2 } => write!(f, "F4_8:n1={n1},n2={n2}"),
            Fmnk { m, n, k } => write!(f, "Fmnk:m={m},n={n},k={k}"),
            Klein(KleinRow::K1) => write!(f, "K1"),
            Klein(KleinRow::K2_1 { p, q }) => write!(f, "K2_1:p={p},q={q}"),
            Klein(KleinRow::K2_2 { p }) => write!(f, "K2_2:p={p}"),
            Klein(KleinRow::K2_3 { q }) => write!(f, "K2_3:q={q}"),
            Klein(KleinRow::K3 { n1, n2 }) => write!(f, "K3:n1={n1},n2={n2}"),
            Klein(KleinRow::KForm(i)) => write!(f, "K{i}"),
        }
    }
}

/// Parse ids like "F4_3:n=0,m=1", "Fmnk:m=1,n=2,k=1", "K2_2:p=3". A trailing
/// "[proof]" or "[theorem]" selects the variant where one applies.
pub fn parse_family(text: &str) -> Result<FamilyId> {
    let mut s = text.trim();
    let mut variant = Variant::Proof;
    if let Some(rest) = s.strip_suffix("[proof]") {
        s = rest;
    } else if let Some(rest) = s.strip_suffix("[theorem]") {
        variant = Variant::Theorem;
        s = rest;
    }
    let (name, args) = match s.split_once(':') {
        Some((n, a)) => (n, a),
        None => (s, ""),
    };
    let mut kv = std::collections::BTreeMap::new();
    if !args.is_empty() {
        for pair in args.split(',') {
            let (k, v) = pair
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got '{pair}'")))?;
            let v: u32 = v.trim().parse().map_err(|_| Error::Parse(format!("bad value '{v}'")))?;
            kv.insert(k.trim().to_string(), v);
        }
    }
    let get = |k: &str| -> Result<u32> {
        kv.get(k).copied().ok_or_else(|| Error::Parse(format!("missing parameter '{k}'")))
    };
    let id = match name {
        "F1_1" => FamilyId::F1_1,
        "F2_1" => FamilyId::F2_1,
        "F3_1" => FamilyId::F3_1 { n: get("n")? },
        "F3_2" => FamilyId::F3_2 { n: get("n")? },
        "F4_1" => FamilyId::F4_1 { n: get("n")?, variant },
        "F4_2" => FamilyId::F4_2 { n: get("n")?, beta: get("beta")? },
        "F4_3" => FamilyId::F4_3 { n: get("n")?, m: get("m")? },
        "F4_4" => FamilyId::F4_4 { n: get("n")?, m: get("m")? },
        "F4_5" => FamilyId::F4_5 { k: get("k")?, m: get("m")? },
        "F4_6" => FamilyId::F4_6 { n: get("n")?, m: get("m")?, variant },
        "F4_7" => FamilyId::F4_7 { m: get("m")? },
        "F4_8" => FamilyId::F4_8 { n1: get("n1")?, n2: get("n2")? },
        "Fmnk" => FamilyId::Fmnk { m: get("m")?, n: get("n")?, k: get("k")? },
        "K1" => FamilyId::Klein(KleinRow::K1),
        "K2_1" => FamilyId::Klein(KleinRow::K2_1 { p: get("p")?, q: get("q")? }),
        "K2_2" => FamilyId::Klein(KleinRow::K2_2 { p: get("p")? }),
        "K2_3" => FamilyId::Klein(KleinRow::K2_3 { q: get("q")? }),
        "K3" => FamilyId::Klein(KleinRow::K3 { n1: get("n1")?, n2: get("n2")? }),
        other => {
            if let Some(num) = other.strip_prefix('K') {
                let i: u32 = num.parse().map_err(|_| Error::Parse(format!("unknown family '{other}'")))?;
                if (4..=22).contains(&i) {
                    FamilyId::Klein(KleinRow::KForm(i))
                } else {
                    return Err(Error::Parse(format!("unknown family '{other}'")));
                }
            } else {
                return Err(Error::Parse(format!("unknown family '{other}'")));
            }
        }
    };
    Ok(id)
}

fn zw(s: &str) -> MPoly {
    parse_mpoly(s, ["z", "w"]).expect("registry polynomial parses")
}

// The classical invariant forms of the binary polyhedral groups.
pub fn tetra_phi() -> MPoly {
    zw("z^4 + 2*sqrt(-3)*z^2*w^2 + w^4")
}
pub fn tetra_psi() -> MPoly {
    zw("z^4 - 2*sqrt(-3)*z^2*w^2 + w^4")
}
pub fn tetra_theta() -> MPoly {
    zw("z^5*w - z*w^5")
}
pub fn octa_phi() -> MPoly {
    zw("z^5*w - z*w^5")
}
pub fn octa_psi() -> MPoly {
    zw("z^8 + 14*z^4*w^4 + w^8")
}
pub fn octa_theta() -> MPoly {
    zw("z^12 - 33*z^8*w^4 - 33*z^4*w^8 + w^12")
}
pub fn icosa_phi() -> MPoly {
    zw("z^11*w + 11*z^6*w^6 - z*w^11")
}
pub fn icosa_psi() -> MPoly {
    zw("-z^20 + 228*z^15*w^5 - 494*z^10*w^10 - 228*z^5*w^15 - w^20")
}
pub fn icosa_theta() -> MPoly {
    zw("z^30 + 522*z^25*w^5 - 10005*z^20*w^10 - 10005*z^10*w^20 - 522*z^5*w^25 + w^30")
}

pub fn build_family(id: &FamilyId) -> Result<CoverGerm> {
    use FamilyId::*;
    let bad = |msg: &str| Err(Error::BadParams(format!("{id}: {msg}")));
    let (f1, f2, degree) = match id {
        F1_1 => (zw("z"), zw("w^4"), 4),
        F2_1 => (zw("z^2"), zw("w^2"), 4),
        F3_1 { n } => {
            if *n < 1 {
                return bad("n >= 1");
            }
            (zw("z"), zw(&format!("w^4 - 2*z^{n}*w^2")), 4)
        }
        F3_2 { n } => {
            if *n < 1 {
                return bad("n >= 1");
            }
            (zw("z^2"), zw(&format!("w^2 - z^{}", 2 * n + 1)), 4)
        }
        F4_1 { n, variant } => {
            if *n < 1 {
                return bad("n >= 1");
            }
            let f2 = match variant {
                Variant::Proof => zw(&format!("w^4 - z^{n}*w^3")),
                Variant::Theorem => zw(&format!("w^4 + z^{n}*w^3")),
            };
            (zw("z"), f2, 4)
        }
        F4_2 { n, beta } => {
            if !(*beta == 1 || *beta == 2) {
                return bad("beta in {1, 2}");
            }
            (zw("z"), zw(&format!("w^4 + 4*w*z^{}", 3 * n + beta)), 4)
        }
        F4_3 { n, m } => {
            if *m < 1 {
                return bad("m >= 1");
            }
            let f2 = format!(
                "w^4 - (8/3)*z^{m}*w^3 + 2*z^{}*w^2 - 2*z^{}*w^2",
                2 * m,
                2 * (m + n) + 1
            );
            (zw("z"), zw(&f2), 4)
        }
        F4_4 { n, m } => {
            if *m < 1 {
                return bad("m >= 1");
            }
            let f2 = format!("w^4 + 12*z^{}*w^3 - 2*z^{}*w^2", m + n + 1, 2 * m + 1);
            (zw("z"), zw(&f2), 4)
        }
        F4_5 { k, m } => {
            if *m < 1 || *k < 1 {
                return bad("m, k >= 1");
            }
            let f2 = format!(
                "w^4 - (8/3)*(z^{m} + 2*z^{mk})*w^3 + 2*(z^{m2} + 4*z^{a} + 3*z^{b})*w^2",
                m = m,
                mk = m + k,
                m2 = 2 * m,
                a = 2 * m + k,
                b = 2 * (m + k)
            );
            (zw("z"), zw(&f2), 4)
        }
        F4_6 { n, m, variant } => {
            if *m < 1 || *n < 1 {
                return bad("m, n >= 1");
            }
            let f2 = match variant {
                Variant::Proof => format!(
                    "w^4 - (4/3)*(3*z^{m} + z^{mn})*w^3 + 4*(z^{m2} + z^{a})*w^2",
                    m = m,
                    mn = m + n,
                    m2 = 2 * m,
                    a = 2 * m + n
                ),
                Variant::Theorem => format!(
                    "w^4 - (4/3)*(z^{m} + 3*z^{mn})*w^3 + 4*(z^{m2} + z^{a})*w^2",
                    m = m,
                    mn = m + n,
                    m2 = 2 * m,
                    a = 2 * m + n
                ),
            };
            (zw("z"), zw(&f2), 4)
        }
        F4_7 { m } => {
            if *m < 1 {
                return bad("m >= 1");
            }
            let f2 = format!("w^4 - (16/3)*z^{m}*w^3 + 6*z^{}*w^2", 2 * m);
            (zw("z"), zw(&f2), 4)
        }
        F4_8 { n1, n2 } => {
            if *n1 < 1 || *n2 < 1 {
                return bad("n1, n2 >= 1");
            }
            (
                zw(&format!("z^2 + w^{}", 2 * n1 + 1)),
                zw(&format!("w^2 + z^{}", 2 * n2 + 1)),
                4,
            )
        }
        Fmnk { m, n, k } => {
            if *m < 1 || *n < 1 || *k < 1 {
                return bad("m, n, k >= 1");
            }
            // v = integral of w^m (w - z^k)^n dw, expanded binomially
            let mut terms: Vec<String> = Vec::new();
            for i in 0..=*n {
                let sign = if (*n - i) % 2 == 0 { "+" } else { "-" };
                let binom = num::integer::binomial(*n as u64, i as u64);
                terms.push(format!(
                    "{sign} ({binom}/{den})*z^{ze}*w^{we}",
                    den = m + i + 1,
                    ze = k * (n - i),
                    we = m + i + 1
                ));
            }
            (zw("z"), zw(&terms.join(" ")), (m + n + 1) as usize)
        }
        Klein(row) => return build_klein(id, row),
    };
    Ok(CoverGerm { f1, f2, degree, family: id.clone() })
}

fn build_klein(id: &FamilyId, row: &KleinRow) -> Result<CoverGerm> {
    use KleinRow::*;
    let bad = |msg: &str| Err(Error::BadParams(format!("{id}: {msg}")));
    let (f1, f2, degree) = match row {
        K1 => (zw("z^2 + z*w + w^2"), zw("z^2*w + z*w^2"), 6),
        K2_1 { p, q } => {
            if *p < 2 || *q < 2 {
                return bad("p, q >= 2");
            }
            (
                zw(&format!("z^{pq} + w^{pq}", pq = p * q)),
                zw(&format!("z^{q}*w^{q}")),
                2 * (p * q * q) as usize
            )
        }
        K2_2 { p } => {
            if *p < 2 {
                return bad("p >= 2");
            }
            (zw(&format!("z^{p} + w^{p}")), zw("z*w"), 2 * *p as usize)
        }
        K2_3 { q } => {
            if *q < 2 {
                return bad("q >= 2");
            }
            (zw(&format!("z^{q} + w^{q}")), zw(&format!("z^{q}*w^{q}")), 2 * (q * q) as usize)
        }
        K3 { n1, n2 } => {
            if *n1 < 2 || *n2 < 2 {
                return bad("n1, n2 >= 2 (smaller values degenerate to a smooth branch locus)");
            }
            (zw(&format!("z^{n1}")), zw(&format!("w^{n2}")), (n1 * n2) as usize)
        }
        KForm(i) => {
            let (f1, f2) = match i {
                4 => (tetra_psi(), tetra_theta()),
                5 => (tetra_phi().pow(3), tetra_theta()),
                6 => (tetra_phi(), tetra_psi().pow(3)),
                7 => (tetra_phi().pow(3), tetra_psi().pow(3)),
                8 => (octa_psi(), octa_theta()),
                9 => (octa_psi(), octa_theta().pow(2)),
                10 => (octa_psi().pow(3), octa_theta()),
                11 => (octa_phi().pow(4), octa_psi().pow(3)),
                12 => (octa_phi(), octa_psi()),
                13 => (octa_phi().pow(2), octa_theta()),
                14 => (octa_phi(), octa_theta().pow(2)),
                15 => (octa_phi().pow(2), octa_theta().pow(2)),
                16 => (icosa_psi(), icosa_theta()),
                17 => (icosa_psi(), icosa_theta().pow(2)),
                18 => (icosa_psi().pow(3), icosa_theta()),
                19 => (icosa_phi().pow(5), icosa_psi().pow(3)),
                20 => (icosa_phi(), icosa_theta()),
                21 => (icosa_phi(), icosa_theta().pow(2)),
                22 => (icosa_phi(), icosa_psi()),
                _ => return bad("row in 4..=22"),
            };
            (f1, f2, 0)
        }
    };
    Ok(CoverGerm { f1, f2, degree, family: id.clone() })
}

/// What the classification table expects.
#[derive(Clone, Debug)]
pub enum GroupExpectation {
    Label(SubgroupLabel),
    FullSymmetric { degree: usize },
    FullAlternating { degree: usize },
}

impl fmt::Display for GroupExpectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpectation::Label(l) => write!(f, "{l}"),
            GroupExpectation::FullSymmetric { degree } => write!(f, "S{degree}"),
            GroupExpectation::FullAlternating { degree } => write!(f, "A{degree}"),
        }
    }
}

pub struct Expectations {
    pub branch_type: Option<SingularityLabel>,
    pub group: Option<GroupExpectation>,
    pub ramification_type: Option<SingularityLabel>,
}

pub fn expectations(id: &FamilyId) -> Expectations {
    use FamilyId::*;
    use SingularityLabel as L;
    use SubgroupLabel as G;
    let lbl = |l: SingularityLabel| Some(l);
    let grp = |g: SubgroupLabel| Some(GroupExpectation::Label(g));
    let (branch_type, group, ramification_type) = match id {
        F1_1 => (lbl(L::A(0)), grp(G::Z4), lbl(L::A(0))),
        F2_1 => (lbl(L::A(1)), grp(G::Kl4), lbl(L::A(1))),
        F3_1 { n } => (
            lbl(L::A(4 * n - 1)),
            grp(G::D4),
            lbl(if *n == 1 { L::A(1) } else { L::T3Odd { n: *n } }),
        ),
        F3_2 { n } => (lbl(L::D(2 * n + 3)), grp(G::D4), lbl(L::A(1))),
        F4_1 { n, .. } => (lbl(L::A(8 * n - 1)), grp(G::S4), lbl(L::A(2 * n - 1))),
        F4_2 { n, beta } => (
            lbl(L::T3NB { n: 4 * n + beta, beta: *beta }),
            grp(G::S4),
            lbl(L::T3NB { n: *n, beta: *beta }),
        ),
        F4_3 { n, m } => (
            lbl(L::T3Even { k: 4 * m, n: 6 * n + 2 }),
            grp(G::S4),
            lbl(L::T3Even { k: *m, n: 2 * n }),
        ),
        F4_4 { n, m } => (
            lbl(L::T3Even { k: 4 * m + 2, n: 2 * n }),
            grp(G::S4),
            lbl(L::T3Odd { n: 2 * m + 1 }),
        ),
        F4_5 { k, m } => (
            lbl(L::T3Even { k: 4 * m, n: 6 * k - 1 }),
            grp(G::S4),
            lbl(L::T3Even { k: *m, n: 2 * k - 1 }),
        ),
        F4_6 { n, m, variant } => match variant {
            Variant::Proof => (
                lbl(L::T3Even { k: 4 * m, n: 2 * n - 1 }),
                grp(G::S4),
                lbl(L::T3Odd { n: 2 * m }),
            ),
            Variant::Theorem => (lbl(L::T3Even { k: 4 * m, n: 2 * n - 1 }), grp(G::S4), None),
        },
        F4_7 { m } => (lbl(L::T3Odd { n: 8 * m }), grp(G::S4), lbl(L::T3Odd { n: 2 * m })),
        F4_8 { n1, n2 } => (lbl(L::T4 { n1: *n1, n2: *n2 }), grp(G::S4), lbl(L::A(1))),
        Fmnk { m, n, k } => {
            let d = (m + n + 1) as usize;
            let g = if m % 2 == 0 && n % 2 == 0 {
                Some(GroupExpectation::FullAlternating { degree: d })
            } else {
                Some(GroupExpectation::FullSymmetric { degree: d })
            };
            (lbl(L::A(2 * k * (m + n + 1) - 1)), g, lbl(L::A(2 * k - 1)))
        }
        Klein(row) => {
            use KleinRow::*;
            let t = match row {
                K1 => Some(L::A(2)),
                K2_1 { p, .. } => Some(L::D(p + 2)),
                K2_2 { p } => Some(L::A(p - 1)),
                K2_3 { .. } => Some(L::A(3)),
                K3 { .. } => Some(L::A(1)),
                KForm(i) => Some(match i {
                    4 | 8 | 16 => L::A(2),
                    5 | 10 | 18 | 21 => L::A(3),
                    6 | 9 | 17 => L::A(5),
                    7 | 11 | 19 => L::D(4),
                    12 => L::E6,
                    13 => L::E7,
                    14 => L::A(7),
                    15 => L::D(6),
                    20 => L::A(4),
                    22 => L::E8,
                    _ => unreachable!(),
                }),
            };
            (t, None, None)
        }
    };
    Expectations { branch_type, group, ramification_type }
}

/// Does this Galois row run the branch-type pipeline (as opposed to being
/// reported as stated)?
pub fn klein_pipeline_enabled(row: &KleinRow) -> bool {
    match row {
        KleinRow::K1 => true,
        KleinRow::K2_2 { p } => *p <= 4,
        KleinRow::K3 { n1, n2 } => *n1 <= 3 && *n2 <= 3,
        _ => false,
    }
}

/// Every classification-table row at the given parameter bound; two-parameter
/// triple-point families are capped at 2 (their tuples grow quadratically).
pub fn theorem_rows(max_param: u32) -> Vec<FamilyId> {
    use FamilyId::*;
    let mut rows = vec![F1_1, F2_1];
    let p1 = 1..=max_param;
    let p2 = 1..=max_param.min(2);
    for n in p1.clone() {
        rows.push(F3_1 { n });
        rows.push(F3_2 { n });
        rows.push(F4_1 { n, variant: Variant::Proof });
        rows.push(F4_1 { n, variant: Variant::Theorem });
        rows.push(F4_7 { m: n });
    }
    for n in 0..=max_param.min(2) {
        for beta in 1..=2 {
            rows.push(F4_2 { n, beta });
        }
    }
    for a in p2.clone() {
        for b in p2.clone() {
            rows.push(F4_3 { n: a - 1, m: b });
            rows.push(F4_4 { n: a - 1, m: b });
            rows.push(F4_5 { k: a, m: b });
            rows.push(F4_6 { n: a, m: b, variant: Variant::Proof });
            rows.push(F4_6 { n: a, m: b, variant: Variant::Theorem });
            rows.push(F4_8 { n1: a, n2: b });
        }
    }
    rows
}

/// The Galois smooth-cover rows, at small parameters where parametrized.
pub fn klein_rows() -> Vec<FamilyId> {
    use KleinRow::*;
    let mut rows = vec![FamilyId::Klein(K1)];
    for p in 2..=4 {
        rows.push(FamilyId::Klein(K2_2 { p }));
    }
    rows.push(FamilyId::Klein(K2_1 { p: 2, q: 2 }));
    rows.push(FamilyId::Klein(K2_3 { q: 2 }));
    for n1 in 2..=3 {
        for n2 in 2..=3 {
            rows.push(FamilyId::Klein(K3 { n1, n2 }));
        }
    }
    for i in 4..=22 {
        rows.push(FamilyId::Klein(KForm(i)));
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_parsing() {
        for text in ["F4_3:n=0,m=1", "F1_1", "Fmnk:m=1,n=2,k=1", "K2_2:p=3", "F4_6:n=1,m=1[theorem]"] {
            let id = parse_family(text).unwrap();
            let rt = parse_family(&id.to_string()).unwrap();
            assert_eq!(id, rt, "{text}");
        }
        assert!(parse_family("F9_9").is_err());
        assert!(build_family(&FamilyId::F3_1 { n: 0 }).is_err());
    }

    #[test]
    fn binomial_integral_family() {
        // Fmnk(1,1,1): v = w^3/3 - z w^2/2
        let g = build_family(&FamilyId::Fmnk { m: 1, n: 1, k: 1 }).unwrap();
        let expect = zw("(1/3)*w^3 - (1/2)*z*w^2");
        assert_eq!(g.f2, expect);
        assert_eq!(g.degree, 3);
        // derivative recovers w^m (w - z^k)^n
        let dv = g.f2.partial_y();
        assert_eq!(dv, zw("w^2 - z*w"));
    }

    #[test]
    fn klein_row_1_functions() {
        let g = build_family(&FamilyId::Klein(KleinRow::K1)).unwrap();
        assert_eq!(g.f1, zw("z^2 + z*w + w^2"));
        assert_eq!(g.f2, zw("z^2*w + z*w^2"));
    }

    #[test]
    fn theorem_row_sweep_counts() {
        let rows = theorem_rows(1);
        assert!(rows.iter().any(|r| matches!(r, FamilyId::F4_2 { n: 0, beta: 1 })));
        assert!(rows.iter().any(|r| matches!(r, FamilyId::F4_8 { n1: 1, n2: 1 })));
    }
}
