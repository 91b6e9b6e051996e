//! Brute-force enumeration of monodromy homomorphisms into S_d subject to
//! presentation relators and dataset constraints, classified up to
//! conjugation and up to the Hurwitz action of allowed braids.

use crate::braid::{automorphism_equal, braid_monodromy, BraidWord};
use crate::error::{Error, Result};
use crate::label::SingularityLabel;
use crate::perm::{cycle_type_string, group_label, PermGroup, Permutation, SubgroupLabel, DEFAULT_CAP};
use crate::present::{reference, zvk_presentation, Presentation};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// Ordered list of cycle types, one per geometric generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyDataset {
    pub degree: usize,
    pub classes: Vec<Vec<usize>>,
}

impl MonodromyDataset {
    pub fn new(degree: usize, classes: Vec<Vec<usize>>) -> Self {
        for c in &classes {
            assert_eq!(c.iter().sum::<usize>(), degree, "cycle type must partition the degree");
        }
        MonodromyDataset { degree, classes }
    }

    /// Parse "3,1|2,1,1" as a list of cycle types of the given degree.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let mut classes = Vec::new();
        for part in text.split('|') {
            let mut ct: Vec<usize> = part
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad cycle length '{t}'"))))
                .collect::<Result<_>>()?;
            let sum: usize = ct.iter().sum();
            if sum > degree {
                return Err(Error::Parse(format!("cycle type '{part}' exceeds degree {degree}")));
            }
            // pad with fixed points
            ct.extend(std::iter::repeat(1).take(degree - sum));
            ct.sort_unstable_by(|a, b| b.cmp(a));
            classes.push(ct);
        }
        Ok(MonodromyDataset::new(degree, classes))
    }

    pub fn display(&self) -> String {
        self.classes.iter().map(|c| cycle_type_string(c)).collect::<Vec<_>>().join("|")
    }
}

/// Either prescribed cycle types or all of S_d per generator.
#[derive(Clone, Debug)]
pub enum DatasetSpec {
    Classes(MonodromyDataset),
    Wildcard { degree: usize, rank: usize },
}

impl DatasetSpec {
    pub fn degree(&self) -> usize {
        match self {
            DatasetSpec::Classes(ds) => ds.degree,
            DatasetSpec::Wildcard { degree, .. } => *degree,
        }
    }
    pub fn rank(&self) -> usize {
        match self {
            DatasetSpec::Classes(ds) => ds.classes.len(),
            DatasetSpec::Wildcard { rank, .. } => *rank,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct HomTuple {
    pub images: Vec<Permutation>,
}

impl HomTuple {
    pub fn display(&self) -> String {
        self.images.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassMode {
    Conjugacy,
    ConjugacyHurwitz,
}

#[derive(Clone, Debug)]
pub struct HomClass {
    pub representative: HomTuple,
    pub orbit_size: usize,
    pub mode: ClassMode,
}

fn symmetric_group(d: usize) -> Vec<Permutation> {
    if d == 1 {
        return vec![Permutation::identity(1)];
    }
    let gens = vec![
        Permutation::from_cycles(d, &[vec![1, 2]]).unwrap(),
        Permutation::from_cycles(d, &[(1..=d).collect::<Vec<_>>()]).unwrap(),
    ];
    PermGroup::generate(&gens, d, 10_000_000).unwrap().elements.unwrap()
}

/// All tuples with components in the prescribed classes satisfying every
/// relator, optionally restricted to tuples generating a transitive group.
pub fn enumerate(p: &Presentation, ds: &DatasetSpec, transitive_only: bool) -> Vec<HomTuple> {
    let d = ds.degree();
    assert_eq!(p.rank, ds.rank(), "presentation rank must match dataset length");
    let sd = symmetric_group(d);
    let pools: Vec<Vec<Permutation>> = match ds {
        DatasetSpec::Classes(ds) => ds
            .classes
            .iter()
            .map(|ct| sd.iter().filter(|p| &p.cycle_type() == ct).cloned().collect())
            .collect(),
        DatasetSpec::Wildcard { rank, .. } => vec![sd.clone(); *rank],
    };
    let mut out = Vec::new();
    let mut idx = vec![0usize; p.rank];
    if pools.iter().any(|pool| pool.is_empty()) {
        return out;
    }
    loop {
        let images: Vec<Permutation> = idx.iter().enumerate().map(|(i, &j)| pools[i][j].clone()).collect();
        let ok = p.satisfied_by(&images)
            && (!transitive_only || PermGroup::generate_lazy(&images, d, DEFAULT_CAP).is_transitive());
        if ok {
            out.push(HomTuple { images });
        }
        let mut pos = 0;
        loop {
            if pos == p.rank {
                out.sort();
                return out;
            }
            idx[pos] += 1;
            if idx[pos] < pools[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn conj_tuple(t: &HomTuple, g: &Permutation) -> HomTuple {
    HomTuple { images: t.images.iter().map(|p| p.conjugate_by(g)).collect() }
}

fn canonical_rep(t: &HomTuple, sd: &[Permutation]) -> (HomTuple, usize) {
    let mut orbit: BTreeSet<HomTuple> = BTreeSet::new();
    for g in sd {
        orbit.insert(conj_tuple(t, g));
    }
    let size = orbit.len();
    (orbit.into_iter().next().unwrap(), size)
}

/// Orbits under simultaneous conjugation by S_d.
pub fn classify_conjugacy(tuples: &[HomTuple]) -> Vec<HomClass> {
    if tuples.is_empty() {
        return vec![];
    }
    let d = tuples[0].images[0].degree();
    let sd = symmetric_group(d);
    let mut classes: BTreeMap<HomTuple, usize> = BTreeMap::new();
    for t in tuples {
        let (rep, _) = canonical_rep(t, &sd);
        *classes.entry(rep).or_insert(0) += 1;
    }
    classes
        .into_iter()
        .map(|(representative, orbit_size)| HomClass { representative, orbit_size, mode: ClassMode::Conjugacy })
        .collect()
}

/// The Hurwitz move of one braid letter on a permutation tuple.
pub fn hurwitz_apply(b: &BraidWord, t: &HomTuple) -> HomTuple {
    assert_eq!(b.strands, t.images.len());
    let mut v = t.images.clone();
    for &l in &b.letters {
        let i = (l.unsigned_abs() as usize) - 1;
        if l > 0 {
            // (x, y) -> (x y x^-1, x): conjugation written left-to-right
            let xi = v[i].inverse().then(&v[i + 1]).then(&v[i]);
            let new_i = xi;
            v[i + 1] = v[i].clone();
            v[i] = new_i;
        } else {
            let yi = v[i + 1].then(&v[i]).then(&v[i + 1].inverse());
            v[i] = v[i + 1].clone();
            v[i + 1] = yi;
        }
    }
    HomTuple { images: v }
}

/// Orbits under the group generated by the allowed braids together with
/// simultaneous conjugation. Errors when an allowed braid maps some input
/// tuple outside the input set.
pub fn hurwitz_orbits(tuples: &[HomTuple], allowed: &[BraidWord]) -> Result<Vec<HomClass>> {
    if tuples.is_empty() {
        return Ok(vec![]);
    }
    let d = tuples[0].images[0].degree();
    let sd = symmetric_group(d);
    let mut rep_of: BTreeMap<HomTuple, HomTuple> = BTreeMap::new();
    let mut input_reps: BTreeSet<HomTuple> = BTreeSet::new();
    for t in tuples {
        let (rep, _) = canonical_rep(t, &sd);
        rep_of.insert(t.clone(), rep.clone());
        input_reps.insert(rep);
    }
    // union-find over canonical conjugacy representatives
    let reps: Vec<HomTuple> = input_reps.iter().cloned().collect();
    let index = |t: &HomTuple| reps.binary_search(t);
    let mut parent: Vec<usize> = (0..reps.len()).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, rep) in reps.iter().enumerate() {
        for b in allowed {
            for w in [b.clone(), b.inverse()] {
                let moved = hurwitz_apply(&w, rep);
                let (mrep, _) = canonical_rep(&moved, &sd);
                match index(&mrep) {
                    Ok(j) => {
                        let (a, b2) = (find(&mut parent, i), find(&mut parent, j));
                        if a != b2 {
                            parent[a] = b2;
                        }
                    }
                    Err(_) => return Err(Error::IncompatibleBraid),
                }
            }
        }
    }
    let mut orbit_sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for t in tuples {
        let rep = &rep_of[t];
        let root = find(&mut parent, index(rep).unwrap());
        *orbit_sizes.entry(root).or_insert(0) += 1;
    }
    Ok(orbit_sizes
        .into_iter()
        .map(|(root, orbit_size)| HomClass {
            representative: reps[root].clone(),
            orbit_size,
            mode: ClassMode::ConjugacyHurwitz,
        })
        .collect())
}

/// Group labels generated by the tuples (one per conjugacy class).
pub fn generated_labels(classes: &[HomClass]) -> Vec<SubgroupLabel> {
    let mut labels: BTreeSet<SubgroupLabel> = BTreeSet::new();
    for c in classes {
        let d = c.representative.images[0].degree();
        let g = PermGroup::generate_lazy(&c.representative.images, d, DEFAULT_CAP);
        labels.insert(group_label(&g));
    }
    labels.into_iter().collect()
}

// ---------- lemma registry ----------

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub lemma: String,
    pub params: BTreeMap<String, i64>,
    pub solutions: usize,
    pub classes: usize,
    pub hurwitz_orbits: Option<usize>,
    pub labels: Vec<String>,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

pub fn known_lemmas() -> Vec<&'static str> {
    vec![
        "a-3cycle-transposition-window",
        "a-double-transposition",
        "d-odd-dataset",
        "t3nb-transpositions",
        "t3e-sole-transpositions",
        "t3e-window-transpositions",
        "t3e-even-contact-count",
    ]
}

/// Run one registered verification instance.
///
/// Ids bind a presentation family and dataset to the claim being checked:
/// existence windows, soleness (a single conjugacy class), or single
/// Hurwitz orbits under the allowed braids.
pub fn verify_lemma(lemma_id: &str, params: &BTreeMap<String, i64>) -> Result<LemmaReport> {
    let get = |k: &str| -> Result<i64> {
        params.get(k).copied().ok_or_else(|| Error::BadParams(format!("missing parameter '{k}'")))
    };
    let mk_report = |solutions: usize,
                     classes: usize,
                     hurwitz: Option<usize>,
                     labels: Vec<SubgroupLabel>,
                     expected: String,
                     computed: String,
                     pass: bool| LemmaReport {
        lemma: lemma_id.to_string(),
        params: params.clone(),
        solutions,
        classes,
        hurwitz_orbits: hurwitz,
        labels: labels.iter().map(|l| l.to_string()).collect(),
        expected,
        computed,
        pass,
    };
    match lemma_id {
        // Transitive (3-cycle, transposition) solutions of (g1 g2)^k = (g2 g1)^k
        // exist exactly when 4 divides k, and form one conjugacy class.
        "a-3cycle-transposition-window" => {
            let k = get("k")? as u32;
            let p = reference::a_family(2 * k - 1); // relator (g1 g2)^k = (g2 g1)^k
            let ds = MonodromyDataset::new(4, vec![vec![3, 1], vec![2, 1, 1]]);
            let tuples = enumerate(&p, &DatasetSpec::Classes(ds), true);
            let classes = classify_conjugacy(&tuples);
            let labels = generated_labels(&classes);
            let expect_exist = k % 4 == 0;
            let pass = if expect_exist {
                !tuples.is_empty() && classes.len() == 1 && labels == vec![SubgroupLabel::S4]
            } else {
                tuples.is_empty()
            };
            Ok(mk_report(
                tuples.len(),
                classes.len(),
                None,
                labels,
                format!("solutions iff k = 0 mod 4 (k = {k}); one class"),
                format!("{} solutions, {} classes", tuples.len(), classes.len()),
                pass,
            ))
        }
        // Dataset ((2,2), transposition) on the two-generator presentation:
        // group D4, sole.
        "a-double-transposition" => {
            let n = get("n")? as u32;
            let p = zvk_presentation(&braid_monodromy(&SingularityLabel::A(4 * n - 1))?);
            let ds = MonodromyDataset::new(4, vec![vec![2, 2], vec![2, 1, 1]]);
            let tuples = enumerate(&p, &DatasetSpec::Classes(ds), true);
            let classes = classify_conjugacy(&tuples);
            let labels = generated_labels(&classes);
            let pass = !tuples.is_empty() && classes.len() == 1 && labels == vec![SubgroupLabel::D4];
            Ok(mk_report(
                tuples.len(),
                classes.len(),
                None,
                labels,
                "one class, group D4".into(),
                format!("{} classes", classes.len()),
                pass,
            ))
        }
        // D_{2k+3} with dataset ((2,2), transposition, transposition):
        // group D4, sole, forced images.
        "d-odd-dataset" => {
            let k = get("k")? as u32;
            let p = zvk_presentation(&braid_monodromy(&SingularityLabel::D(2 * k + 3))?);
            let ds = MonodromyDataset::new(4, vec![vec![2, 2], vec![2, 1, 1], vec![2, 1, 1]]);
            let tuples = enumerate(&p, &DatasetSpec::Classes(ds), true);
            let classes = classify_conjugacy(&tuples);
            let labels = generated_labels(&classes);
            let forced = HomTuple {
                images: vec![
                    Permutation::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap(),
                    Permutation::from_cycles(4, &[vec![1, 3]]).unwrap(),
                    Permutation::from_cycles(4, &[vec![2, 4]]).unwrap(),
                ],
            };
            let has_forced = {
                let sd = symmetric_group(4);
                let (want, _) = canonical_rep(&forced, &sd);
                classes.iter().any(|c| c.representative == want)
            };
            let pass = classes.len() == 1 && labels == vec![SubgroupLabel::D4] && has_forced;
            Ok(mk_report(
                tuples.len(),
                classes.len(),
                None,
                labels,
                "one class, group D4, images (1,2)(3,4), (1,3), (2,4) up to conjugacy".into(),
                format!("{} classes", classes.len()),
                pass,
            ))
        }
        // Triple point with transposition dataset: group S4, sole.
        "t3nb-transpositions" => {
            let n = get("n")? as u32;
            let beta = get("beta")? as u32;
            let p = zvk_presentation(&braid_monodromy(&SingularityLabel::T3NB { n: 4 * n + beta, beta })?);
            let ds = MonodromyDataset::new(4, vec![vec![2, 1, 1]; 3]);
            let tuples = enumerate(&p, &DatasetSpec::Classes(ds), true);
            let classes = classify_conjugacy(&tuples);
            let labels = generated_labels(&classes);
            let pass = classes.len() == 1 && labels == vec![SubgroupLabel::S4];
            Ok(mk_report(
                tuples.len(),
                classes.len(),
                None,
                labels,
                "one class, group S4".into(),
                format!("{} classes", classes.len()),
                pass,
            ))
        }
        // Even-contact type with subscripts (8k+2n+4, 8k+4): transposition
        // dataset forces S4 and is sole (single conjugacy class).
        "t3e-sole-transpositions" => {
            let k = get("k")? as u32;
            let n = get("n")? as u32;
            let p = zvk_presentation(&braid_monodromy(&SingularityLabel::T3Even { k: 4 * k + 2, n: 2 * n })?);
            let ds = MonodromyDataset::new(4, vec![vec![2, 1, 1]; 3]);
            let tuples = enumerate(&p, &DatasetSpec::Classes(ds), true);
            let classes = classify_conjugacy(&tuples);
            let labels = generated_labels(&classes);
            let pass = classes.len() == 1 && labels == vec![SubgroupLabel::S4];
            Ok(mk_report(
                tuples.len(),
                classes.len(),
                None,
                labels,
                "one class, group S4".into(),
                format!("{} classes", classes.len()),
                pass,
            ))
        }
        // Even-contact type with subscripts (8m+2n, 8m): transposition
        // solutions exist iff n = 3j+1; then S4, and the a_1-moves merge the
        // conjugacy classes into a single Hurwitz orbit.
        "t3e-window-transpositions" => {
            let m = get("m")? as u32;
            let n = get("n")? as u32;
            if n == 0 {
                return Err(Error::BadParams("n must be positive for this family".into()));
            }
            let braid = braid_monodromy(&SingularityLabel::T3Even { k: 4 * m, n: 2 * n })?;
            let p = zvk_presentation(&braid);
            let ds = MonodromyDataset::new(4, vec![vec![2, 1, 1]; 3]);
            let tuples = enumerate(&p, &DatasetSpec::Classes(ds), true);
            let classes = classify_conjugacy(&tuples);
            let labels = generated_labels(&classes);
            let expect_exist = n % 3 == 1;
            let (orbits, pass) = if expect_exist {
                let allowed = vec![BraidWord::gen(3, 1)];
                check_allowed_commute(&braid, &allowed)?;
                let orb = hurwitz_orbits(&tuples, &allowed)?;
                let ok = !tuples.is_empty() && orb.len() == 1 && labels == vec![SubgroupLabel::S4];
                (Some(orb.len()), ok)
            } else {
                (None, tuples.is_empty())
            };
            Ok(mk_report(
                tuples.len(),
                classes.len(),
                orbits,
                labels,
                format!("solutions iff n = 1 mod 3 (n = {n}); single Hurwitz orbit"),
                format!("{} solutions, {} classes", tuples.len(), classes.len()),
                pass,
            ))
        }
        // Even-contact type with subscripts (8m+2n-1, 8m): transposition
        // dataset; unique class for n = 0, 1, 2 mod 3 except that n = 3j > 0
        // allows at most two deformation classes.
        "t3e-even-contact-count" => {
            let m = get("m")? as u32;
            let n = get("n")? as u32;
            let label = if n == 0 {
                SingularityLabel::T3Odd { n: 8 * m }
            } else {
                SingularityLabel::T3Even { k: 4 * m, n: 2 * n - 1 }
            };
            let braid = braid_monodromy(&label)?;
            let p = zvk_presentation(&braid);
            let ds = MonodromyDataset::new(4, vec![vec![2, 1, 1]; 3]);
            let tuples = enumerate(&p, &DatasetSpec::Classes(ds), true);
            let classes = classify_conjugacy(&tuples);
            let labels = generated_labels(&classes);
            let allowed = if n == 0 {
                vec![BraidWord::gen(3, 1), BraidWord::gen(3, 2)]
            } else {
                vec![BraidWord::gen(3, 1), crate::braid::parse_braid("a2 a1^2 a2", 3)?]
            };
            check_allowed_commute(&braid, &allowed)?;
            let orbits = hurwitz_orbits(&tuples, &allowed)?;
            let expected_orbits: usize = if n == 0 || n % 3 != 0 { 1 } else { 2 };
            let pass = !tuples.is_empty()
                && labels == vec![SubgroupLabel::S4]
                && orbits.len() <= expected_orbits;
            Ok(mk_report(
                tuples.len(),
                classes.len(),
                Some(orbits.len()),
                labels,
                format!("group S4; at most {expected_orbits} deformation class(es)"),
                format!("{} classes, {} orbits", classes.len(), orbits.len()),
                pass,
            ))
        }
        other => Err(Error::UnknownLemma(other.to_string())),
    }
}

/// The Hurwitz moves preserve relator satisfaction when the allowed braids
/// commute with the monodromy braid; checked via the faithful action.
fn check_allowed_commute(monodromy: &BraidWord, allowed: &[BraidWord]) -> Result<()> {
    for b in allowed {
        if !automorphism_equal(&monodromy.concat(b), &b.concat(monodromy)) {
            return Err(Error::IncompatibleBraid);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(d: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(d, &cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn window_existence() {
        for k in 1..=8 {
            let mut params = BTreeMap::new();
            params.insert("k".to_string(), k);
            let r = verify_lemma("a-3cycle-transposition-window", &params).unwrap();
            assert!(r.pass, "k={k}: {r:?}");
            assert_eq!(r.solutions > 0, k % 4 == 0, "k={k}");
        }
    }

    #[test]
    fn transposition_window_mod3() {
        let mut existing = Vec::new();
        for n in 1..=7 {
            let mut params = BTreeMap::new();
            params.insert("m".to_string(), 1);
            params.insert("n".to_string(), n);
            let r = verify_lemma("t3e-window-transpositions", &params).unwrap();
            assert!(r.pass, "n={n}: {r:?}");
            if r.solutions > 0 {
                existing.push(n);
            }
        }
        assert_eq!(existing, vec![1, 4, 7]);
    }

    #[test]
    fn kl4_from_commuting_double_transpositions() {
        // relator [g1, g2], dataset ((2,2), (2,2)), transitive: Kl4 only
        let p = zvk_presentation(&braid_monodromy(&SingularityLabel::A(1)).unwrap());
        let ds = MonodromyDataset::new(4, vec![vec![2, 2], vec![2, 2]]);
        let tuples = enumerate(&p, &DatasetSpec::Classes(ds), true);
        assert!(!tuples.is_empty());
        let classes = classify_conjugacy(&tuples);
        let labels = generated_labels(&classes);
        assert_eq!(labels, vec![SubgroupLabel::Kl4]);
    }

    #[test]
    fn free_wildcard_enumeration() {
        // free group, wildcard classes, d = 2, transitive: pairs with at
        // least one transposition: 4*... S_2 pairs: total 4, transitive ones
        // have at least one nonidentity: 3
        let p = Presentation::free(2);
        let tuples = enumerate(&p, &DatasetSpec::Wildcard { degree: 2, rank: 2 }, true);
        assert_eq!(tuples.len(), 3);
    }

    #[test]
    fn conjugacy_partition() {
        let p = Presentation::free(2);
        let ds = MonodromyDataset::new(4, vec![vec![3, 1], vec![2, 1, 1]]);
        let tuples = enumerate(&p, &DatasetSpec::Classes(ds), false);
        let classes = classify_conjugacy(&tuples);
        let total: usize = classes.iter().map(|c| c.orbit_size).sum();
        assert_eq!(total, tuples.len());
        // all conjugates of ((1,2,3), (3,4)): one class of size 24
        let seed = HomTuple { images: vec![perm(4, &[&[1, 2, 3]]), perm(4, &[&[3, 4]])] };
        let sd = symmetric_group(4);
        let mut orbit: BTreeSet<HomTuple> = BTreeSet::new();
        for g in &sd {
            orbit.insert(conj_tuple(&seed, g));
        }
        assert_eq!(orbit.len(), 24);
        let cls = classify_conjugacy(&orbit.iter().cloned().collect::<Vec<_>>());
        assert_eq!(cls.len(), 1);
        assert_eq!(cls[0].orbit_size, 24);
    }

    #[test]
    fn hurwitz_product_invariant_and_conj_commutes() {
        let t = HomTuple {
            images: vec![perm(4, &[&[1, 2]]), perm(4, &[&[1, 3]]), perm(4, &[&[1, 4]])],
        };
        let prod = |t: &HomTuple| {
            t.images.iter().fold(Permutation::identity(4), |acc, p| acc.then(p))
        };
        for letters in [vec![1], vec![2], vec![-1], vec![1, 2, 1]] {
            let b = BraidWord::new(3, letters);
            let moved = hurwitz_apply(&b, &t);
            assert_eq!(prod(&moved), prod(&t));
            // commutes with simultaneous conjugation
            let g = perm(4, &[&[1, 2, 3, 4]]);
            let a = hurwitz_apply(&b, &conj_tuple(&t, &g));
            let bb = conj_tuple(&hurwitz_apply(&b, &t), &g);
            assert_eq!(a, bb);
        }
    }

    #[test]
    fn three_solutions_one_orbit() {
        // the three transposition choices for the third generator merge
        // under a_1-moves
        let mut params = BTreeMap::new();
        params.insert("m".to_string(), 1);
        params.insert("n".to_string(), 1);
        let r = verify_lemma("t3e-window-transpositions", &params).unwrap();
        assert_eq!(r.classes, 3);
        assert_eq!(r.hurwitz_orbits, Some(1));
    }

    #[test]
    fn empty_allowed_set_gives_conjugacy() {
        let p = Presentation::free(2);
        let ds = MonodromyDataset::new(4, vec![vec![2, 1, 1], vec![2, 1, 1]]);
        let tuples = enumerate(&p, &DatasetSpec::Classes(ds), false);
        let conj = classify_conjugacy(&tuples);
        let hur = hurwitz_orbits(&tuples, &[]).unwrap();
        assert_eq!(conj.len(), hur.len());
    }

    #[test]
    fn sole_lemmas() {
        for (id, ps) in [
            ("a-double-transposition", vec![("n", 1)]),
            ("d-odd-dataset", vec![("k", 1)]),
            ("d-odd-dataset", vec![("k", 2)]),
            ("t3nb-transpositions", vec![("n", 0), ("beta", 1)]),
            ("t3nb-transpositions", vec![("n", 0), ("beta", 2)]),
            ("t3e-sole-transpositions", vec![("k", 0), ("n", 1)]),
            ("t3e-sole-transpositions", vec![("k", 1), ("n", 0)]),
        ] {
            let params: BTreeMap<String, i64> = ps.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
            let r = verify_lemma(id, &params).unwrap();
            assert!(r.pass, "{id} {:?}: {r:?}", r.params);
        }
    }

    #[test]
    fn even_contact_counts() {
        // n = 3j > 0: at most two deformation classes; otherwise one
        for (n, _experienced) in [(1u32, 1usize), (2, 1), (3, 2), (6, 2)] {
            let mut params = BTreeMap::new();
            params.insert("m".to_string(), 1);
            params.insert("n".to_string(), n as i64);
            let r = verify_lemma("t3e-even-contact-count", &params).unwrap();
            assert!(r.pass, "n={n}: {r:?}");
        }
        // n = 0 goes through the axis-pair family with full braid moves
        let mut params = BTreeMap::new();
        params.insert("m".to_string(), 1);
        params.insert("n".to_string(), 0);
        let r = verify_lemma("t3e-even-contact-count", &params).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.hurwitz_orbits, Some(1));
    }

    #[test]
    fn unknown_lemma_rejected() {
        assert!(matches!(
            verify_lemma("nope", &BTreeMap::new()),
            Err(Error::UnknownLemma(_))
        ));
    }
}
