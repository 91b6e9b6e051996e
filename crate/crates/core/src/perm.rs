//! Exact permutation-group arithmetic on {1..d}: generation, transitivity,
//! subgroup identification, relatively simple subgroups, coset actions.

use crate::error::{Error, Result};
use std::collections::{BTreeSet, HashSet};
use std::fmt;

pub const DEFAULT_CAP: usize = 1_000_000;

/// A permutation of {1..d}, stored as 0-based images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Permutation { images: (0..d as u16).collect() }
    }

    /// From 1-based images: images[i] is where point i+1 goes.
    pub fn from_images_1based(images: &[usize]) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        let mut v = Vec::with_capacity(d);
        for &x in images {
            if x < 1 || x > d || seen[x - 1] {
                return Err(Error::Parse("not a bijection".into()));
            }
            seen[x - 1] = true;
            v.push((x - 1) as u16);
        }
        Ok(Permutation { images: v })
    }

    /// From disjoint cycles in 1-based points.
    pub fn from_cycles(d: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut v: Vec<u16> = (0..d as u16).collect();
        let mut moved = vec![false; d];
        for cyc in cycles {
            for win in 0..cyc.len() {
                let a = cyc[win];
                let b = cyc[(win + 1) % cyc.len()];
                if a < 1 || a > d || b < 1 || b > d {
                    return Err(Error::Parse(format!("point out of range 1..{d}")));
                }
                if moved[a - 1] {
                    return Err(Error::Parse("cycles not disjoint".into()));
                }
                moved[a - 1] = true;
                v[a - 1] = (b - 1) as u16;
            }
        }
        Ok(Permutation { images: v })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// Left-to-right product: apply self first, then other.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: self.images.iter().map(|&i| other.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut v = vec![0u16; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            v[j as usize] = i as u16;
        }
        Permutation { images: v }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u16 == j)
    }

    /// Conjugate self by g: g^-1 * self * g in left-to-right convention,
    /// i.e. the relabeling of self along g.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().then(self).then(g)
    }

    pub fn pow(&self, e: i64) -> Permutation {
        let d = self.degree();
        let mut acc = Permutation::identity(d);
        let base = if e >= 0 { self.clone() } else { self.inverse() };
        for _ in 0..e.unsigned_abs() {
            acc = acc.then(&base);
        }
        acc
    }

    pub fn order(&self) -> usize {
        self.cycle_type().into_iter().fold(1, num::integer::lcm)
    }

    /// Multiset of cycle lengths, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for s in 0..d {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = self.apply(i);
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    pub fn is_even(&self) -> bool {
        self.cycle_type().iter().map(|l| l - 1).sum::<usize>() % 2 == 0
    }

    /// Cycles of length >= 2, 1-based, each cycle starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for s in 0..d {
            if seen[s] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i + 1);
                i = self.apply(i);
            }
            if cyc.len() >= 2 {
                out.push(cyc);
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cyc in cycles {
            write!(f, "({})", cyc.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parse cycle notation like "(1,2,3)(4,5)"; identity is "()".
pub fn parse_permutation(text: &str, d: usize) -> Result<Permutation> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s == "()" || s.is_empty() {
        return Permutation::from_cycles(d, &[]);
    }
    let mut cycles = Vec::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(Error::Parse("expected '('".into()));
        }
        let close = rest.find(')').ok_or_else(|| Error::Parse("missing ')'".into()))?;
        let inner = &rest[1..close];
        if !inner.is_empty() {
            let pts: std::result::Result<Vec<usize>, _> = inner.split(',').map(|p| p.parse::<usize>()).collect();
            let pts = pts.map_err(|_| Error::Parse("bad point".into()))?;
            if pts.len() >= 2 {
                cycles.push(pts);
            }
        }
        rest = &rest[close + 1..];
    }
    Permutation::from_cycles(d, &cycles)
}

/// Cycle-type partition rendered like "2,1,1".
pub fn cycle_type_string(ct: &[usize]) -> String {
    ct.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
}

/// A permutation group with (optionally) materialized elements.
#[derive(Clone, Debug)]
pub struct PermGroup {
    pub degree: usize,
    pub generators: Vec<Permutation>,
    /// Sorted element list, when the closure fit under the cap.
    pub elements: Option<Vec<Permutation>>,
}

/// Labels for transitive subgroups of S_4 (plus generic fallbacks).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SubgroupLabel {
    Z4,
    Kl4,
    D4,
    A4,
    S4,
    Cyclic(usize),
    Other(usize),
}

impl fmt::Display for SubgroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgroupLabel::Z4 => write!(f, "Z4"),
            SubgroupLabel::Kl4 => write!(f, "Kl4"),
            SubgroupLabel::D4 => write!(f, "D4"),
            SubgroupLabel::A4 => write!(f, "A4"),
            SubgroupLabel::S4 => write!(f, "S4"),
            SubgroupLabel::Cyclic(n) => write!(f, "Z{n}"),
            SubgroupLabel::Other(n) => write!(f, "G{n}"),
        }
    }
}

impl PermGroup {
    /// Breadth-first closure of the generators; errors past the cap.
    pub fn generate(gens: &[Permutation], d: usize, cap: usize) -> Result<PermGroup> {
        match Self::generate_lazy(gens, d, cap) {
            g if g.elements.is_some() => Ok(g),
            _ => Err(Error::CapExceeded { cap }),
        }
    }

    /// Like `generate` but marks the group unmaterialized instead of failing.
    pub fn generate_lazy(gens: &[Permutation], d: usize, cap: usize) -> PermGroup {
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &gens {
            assert_eq!(g.degree(), d, "generator degree mismatch");
        }
        let mut set: HashSet<Permutation> = HashSet::new();
        set.insert(Permutation::identity(d));
        let mut frontier: Vec<Permutation> = vec![Permutation::identity(d)];
        while let Some(p) = frontier.pop() {
            for g in &gens {
                let q = p.then(g);
                if set.insert(q.clone()) {
                    if set.len() > cap {
                        return PermGroup { degree: d, generators: gens, elements: None };
                    }
                    frontier.push(q);
                }
            }
        }
        let mut elements: Vec<Permutation> = set.into_iter().collect();
        elements.sort();
        PermGroup { degree: d, generators: gens, elements: Some(elements) }
    }

    pub fn order(&self) -> Option<usize> {
        self.elements.as_ref().map(|e| e.len())
    }

    pub fn contains(&self, p: &Permutation) -> Option<bool> {
        self.elements.as_ref().map(|e| e.binary_search(p).is_ok())
    }

    pub fn orbit_of(&self, point: usize) -> BTreeSet<usize> {
        let mut orbit = BTreeSet::new();
        orbit.insert(point);
        let mut frontier = vec![point];
        while let Some(x) = frontier.pop() {
            for g in &self.generators {
                for h in [g.apply(x), g.inverse().apply(x)] {
                    if orbit.insert(h) {
                        frontier.push(h);
                    }
                }
            }
        }
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.degree > 0 && self.orbit_of(0).len() == self.degree
    }

    /// Block-system test; meaningful for transitive groups.
    pub fn is_primitive(&self) -> bool {
        let d = self.degree;
        if d <= 2 {
            return true;
        }
        if !self.is_transitive() {
            return false;
        }
        for beta in 1..d {
            // minimal block containing {0, beta} via union-find refinement
            let mut parent: Vec<usize> = (0..d).collect();
            fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
                while parent[x] != x {
                    parent[x] = parent[parent[x]];
                    x = parent[x];
                }
                x
            }
            let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
                let (ra, rb) = (find(parent, a), find(parent, b));
                if ra != rb {
                    parent[ra] = rb;
                }
            };
            union(&mut parent, 0, beta);
            let mut changed = true;
            while changed {
                changed = false;
                for g in &self.generators {
                    for x in 0..d {
                        for y in (x + 1)..d {
                            if find(&mut parent, x) == find(&mut parent, y) {
                                let (gx, gy) = (g.apply(x), g.apply(y));
                                if find(&mut parent, gx) != find(&mut parent, gy) {
                                    union(&mut parent, gx, gy);
                                    changed = true;
                                }
                            }
                        }
                    }
                }
            }
            let root0 = find(&mut parent, 0);
            let size = (0..d).filter(|&x| find(&mut parent, x) == root0).count();
            if size != d {
                return false;
            }
        }
        true
    }
}

/// Identify a transitive subgroup of S_4 by its order and cycle census.
pub fn identify_s4_subgroup(g: &PermGroup) -> Result<SubgroupLabel> {
    if g.degree != 4 {
        return Err(Error::NotDegree4(g.degree));
    }
    if !g.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let elems = g.elements.as_ref().ok_or(Error::CapExceeded { cap: 0 })?;
    match elems.len() {
        4 => {
            if elems.iter().any(|p| p.cycle_type() == vec![4]) {
                Ok(SubgroupLabel::Z4)
            } else {
                debug_assert!(elems
                    .iter()
                    .all(|p| p.is_identity() || p.cycle_type() == vec![2, 2]));
                Ok(SubgroupLabel::Kl4)
            }
        }
        8 => Ok(SubgroupLabel::D4),
        12 => Ok(SubgroupLabel::A4),
        24 => Ok(SubgroupLabel::S4),
        n => Ok(SubgroupLabel::Other(n)),
    }
}

/// Generic labeling used in reports: the S_4 census when it applies, else
/// cyclic/other by order.
pub fn group_label(g: &PermGroup) -> SubgroupLabel {
    if g.degree == 4 && g.is_transitive() {
        if let Ok(l) = identify_s4_subgroup(g) {
            return l;
        }
    }
    let n = g.order().unwrap_or(0);
    let cyclic = g.elements.as_ref().map(|e| e.iter().any(|p| p.order() == n)).unwrap_or(false);
    if cyclic {
        SubgroupLabel::Cyclic(n)
    } else {
        SubgroupLabel::Other(n)
    }
}

/// All subgroups of a materialized group, as sorted element lists.
fn all_subgroups(g: &PermGroup) -> Result<Vec<Vec<Permutation>>> {
    let elems = g.elements.as_ref().ok_or(Error::CapExceeded { cap: 0 })?;
    let d = g.degree;
    let mut seen: HashSet<Vec<Permutation>> = HashSet::new();
    let trivial = vec![Permutation::identity(d)];
    seen.insert(trivial.clone());
    let mut frontier = vec![trivial];
    while let Some(h) = frontier.pop() {
        for x in elems {
            if h.binary_search(x).is_ok() {
                continue;
            }
            let mut gens: Vec<Permutation> = h.clone();
            gens.push(x.clone());
            let closure = PermGroup::generate(&gens, d, elems.len())?;
            let list = closure.elements.unwrap();
            if seen.insert(list.clone()) {
                frontier.push(list);
            }
        }
    }
    let mut out: Vec<Vec<Permutation>> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// One representative per conjugacy class of relatively simple subgroups
/// (subgroups containing no nontrivial normal subgroup of G), paired with
/// the index (G : H). Representatives are the lexicographically least
/// element lists in their class.
pub fn relatively_simple_subgroups(g: &PermGroup) -> Result<Vec<(Vec<Permutation>, usize)>> {
    let elems = g.elements.as_ref().ok_or(Error::CapExceeded { cap: 0 })?;
    let subs = all_subgroups(g)?;
    // conjugacy classes of subgroups
    let mut class_of: Vec<usize> = (0..subs.len()).collect();
    let index_of = |list: &Vec<Permutation>| subs.binary_search(list).expect("closed");
    for (i, h) in subs.iter().enumerate() {
        for x in elems {
            let mut conj: Vec<Permutation> = h.iter().map(|p| p.conjugate_by(x)).collect();
            conj.sort();
            let j = index_of(&conj);
            let (a, b) = (class_of[i].min(class_of[j]), class_of[i].max(class_of[j]));
            if a != b {
                for c in class_of.iter_mut() {
                    if *c == b {
                        *c = a;
                    }
                }
            }
        }
    }
    // normal subgroups: singleton conjugacy classes, proper and nontrivial
    let mut normals: Vec<&Vec<Permutation>> = Vec::new();
    for (i, h) in subs.iter().enumerate() {
        if h.len() == 1 || h.len() == elems.len() {
            continue;
        }
        let class_size = class_of.iter().filter(|&&c| c == class_of[i]).count();
        if class_size == 1 {
            normals.push(h);
        }
    }
    let contains_all = |h: &Vec<Permutation>, n: &Vec<Permutation>| n.iter().all(|p| h.binary_search(p).is_ok());
    let mut out: Vec<(Vec<Permutation>, usize)> = Vec::new();
    let mut taken: HashSet<usize> = HashSet::new();
    for (i, _h) in subs.iter().enumerate() {
        if !taken.insert(class_of[i]) {
            continue;
        }
        // representative: lexicographically least member of the class
        let rep = subs
            .iter()
            .enumerate()
            .filter(|(j, _)| class_of[*j] == class_of[i])
            .map(|(_, s)| s)
            .min()
            .unwrap();
        if normals.iter().any(|n| contains_all(rep, n)) {
            continue;
        }
        out.push((rep.clone(), elems.len() / rep.len()));
    }
    out.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    Ok(out)
}

/// The action of G on the right cosets of H, as a permutation group of
/// degree (G : H). Transitive; faithful exactly when H is relatively simple.
pub fn coset_action(g: &PermGroup, h: &[Permutation]) -> Result<PermGroup> {
    let elems = g.elements.as_ref().ok_or(Error::CapExceeded { cap: 0 })?;
    let mut hs: Vec<Permutation> = h.to_vec();
    hs.sort();
    // cosets Hg as sorted element lists
    let mut cosets: Vec<Vec<Permutation>> = Vec::new();
    let mut coset_of: Vec<usize> = Vec::new();
    for x in elems {
        let mut cs: Vec<Permutation> = hs.iter().map(|p| p.then(x)).collect();
        cs.sort();
        match cosets.iter().position(|c| *c == cs) {
            Some(i) => coset_of.push(i),
            None => {
                cosets.push(cs);
                coset_of.push(cosets.len() - 1);
            }
        }
    }
    let n = cosets.len();
    let elem_index = |p: &Permutation| elems.binary_search(p).expect("group closed");
    let mut gens = Vec::new();
    for gen in &g.generators {
        let mut images = vec![0usize; n];
        for (i, coset) in cosets.iter().enumerate() {
            let moved = coset[0].then(gen);
            images[i] = coset_of[elem_index(&moved)] + 1;
        }
        gens.push(Permutation::from_images_1based(&images)?);
    }
    Ok(PermGroup::generate_lazy(&gens, n, DEFAULT_CAP))
}

/// Does G contain the full alternating group A_d?
///
/// Materialized groups are decided exactly. Unmaterialized ones go through
/// the Jordan route: transitive + primitive + an exhibited 3-cycle built
/// from short conjugated words proves containment; otherwise CapExceeded.
pub fn contains_alternating(g: &PermGroup, cap: usize) -> Result<bool> {
    let d = g.degree;
    if d <= 2 {
        return Ok(true);
    }
    if let Some(elems) = &g.elements {
        // exact: every 3-cycle present?
        let mut c3 = Vec::new();
        for a in 1..=d {
            for b in 1..=d {
                for c in 1..=d {
                    if a < b && b < c {
                        c3.push((a, b, c));
                    }
                }
            }
        }
        for (a, b, c) in c3 {
            for cyc in [vec![a, b, c], vec![a, c, b]] {
                let p = Permutation::from_cycles(d, &[cyc])?;
                if elems.binary_search(&p).is_err() {
                    return Ok(false);
                }
            }
        }
        return Ok(true);
    }
    if !g.is_transitive() {
        return Ok(false);
    }
    if !g.is_primitive() {
        return Err(Error::CapExceeded { cap });
    }
    // search for a 3-cycle among conjugated words and their products
    let mut lot: Vec<Permutation> = Vec::new();
    let mut basis: Vec<Permutation> = Vec::new();
    for gen in &g.generators {
        basis.push(gen.clone());
        basis.push(gen.inverse());
    }
    for a in &basis {
        for b in &basis {
            let mut ai = Permutation::identity(d);
            for _ in 0..=d {
                let w = ai.inverse().then(b).then(&ai);
                lot.push(w);
                ai = ai.then(a);
            }
        }
    }
    lot.sort();
    lot.dedup();
    let is_three_cycle = |p: &Permutation| {
        let ct = p.cycle_type();
        ct.first() == Some(&3) && ct.iter().skip(1).all(|&l| l == 1)
    };
    let mut candidates: Vec<Permutation> = lot.clone();
    for x in &lot {
        for y in &lot {
            candidates.push(x.then(&y.inverse()));
        }
    }
    for c in &candidates {
        let ord = c.order();
        if ord % 3 == 0 {
            let p = c.pow((ord / 3) as i64);
            if is_three_cycle(&p) {
                return Ok(true);
            }
        }
    }
    Err(Error::CapExceeded { cap })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(d: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(d, &cycles).unwrap()
    }

    #[test]
    fn cycle_types() {
        assert_eq!(Permutation::identity(4).cycle_type(), vec![1, 1, 1, 1]);
        assert_eq!(p(4, &[&[1, 2, 3, 4]]).cycle_type(), vec![4]);
        assert_eq!(p(4, &[&[1, 2], &[3, 4]]).cycle_type(), vec![2, 2]);
    }

    #[test]
    fn product_convention_left_to_right() {
        // (1,2,3) then (3,4) should be (1,2,4,3)
        let t1 = p(4, &[&[1, 2, 3]]);
        let t2 = p(4, &[&[3, 4]]);
        assert_eq!(t1.then(&t2), p(4, &[&[1, 2, 4, 3]]));
        assert_eq!(t2.then(&t1), p(4, &[&[1, 2, 3, 4]]));
    }

    #[test]
    fn generate_examples() {
        let g = PermGroup::generate(&[p(4, &[&[1, 2, 3]]), p(4, &[&[3, 4]])], 4, 1000).unwrap();
        assert_eq!(g.order(), Some(24));
        let g = PermGroup::generate(&[Permutation::identity(4)], 4, 1000).unwrap();
        assert_eq!(g.order(), Some(1));
        let g = PermGroup::generate(&[p(4, &[&[1, 2], &[3, 4]]), p(4, &[&[1, 3]])], 4, 1000).unwrap();
        assert_eq!(g.order(), Some(8));
        assert_eq!(identify_s4_subgroup(&g).unwrap(), SubgroupLabel::D4);
    }

    #[test]
    fn generate_idempotent() {
        let g = PermGroup::generate(&[p(4, &[&[1, 2, 3, 4]])], 4, 1000).unwrap();
        let again = PermGroup::generate(g.elements.as_ref().unwrap(), 4, 1000).unwrap();
        assert_eq!(g.elements, again.elements);
    }

    #[test]
    fn transitivity() {
        let s4 = PermGroup::generate(&[p(4, &[&[1, 2]]), p(4, &[&[1, 2, 3, 4]])], 4, 100).unwrap();
        assert!(s4.is_transitive());
        let g = PermGroup::generate(&[p(4, &[&[1, 2]])], 4, 100).unwrap();
        assert!(!g.is_transitive());
        let kl4 = PermGroup::generate(&[p(4, &[&[1, 2], &[3, 4]]), p(4, &[&[1, 3], &[2, 4]])], 4, 100).unwrap();
        assert!(kl4.is_transitive());
        assert_eq!(identify_s4_subgroup(&kl4).unwrap(), SubgroupLabel::Kl4);
    }

    #[test]
    fn census_labels() {
        let z4 = PermGroup::generate(&[p(4, &[&[1, 2, 3, 4]])], 4, 100).unwrap();
        assert_eq!(identify_s4_subgroup(&z4).unwrap(), SubgroupLabel::Z4);
        let d4 = PermGroup::generate(&[p(4, &[&[1, 2], &[3, 4]]), p(4, &[&[1, 3]])], 4, 100).unwrap();
        assert_eq!(identify_s4_subgroup(&d4).unwrap(), SubgroupLabel::D4);
        let a4 = PermGroup::generate(&[p(4, &[&[1, 2, 3]]), p(4, &[&[2, 3, 4]])], 4, 100).unwrap();
        assert_eq!(identify_s4_subgroup(&a4).unwrap(), SubgroupLabel::A4);
    }

    #[test]
    fn cycle_type_is_class_function_d5() {
        let s5 = PermGroup::generate(&[p(5, &[&[1, 2]]), p(5, &[&[1, 2, 3, 4, 5]])], 5, 200).unwrap();
        let elems = s5.elements.as_ref().unwrap();
        for a in elems.iter().take(40) {
            for g in elems {
                assert_eq!(a.cycle_type(), a.conjugate_by(g).cycle_type());
            }
        }
    }

    #[test]
    fn relatively_simple_examples() {
        // A_4: indices {12, 6, 4}
        let a4 = PermGroup::generate(&[p(4, &[&[1, 2, 3]]), p(4, &[&[2, 3, 4]])], 4, 100).unwrap();
        let rs = relatively_simple_subgroups(&a4).unwrap();
        let mut idx: Vec<usize> = rs.iter().map(|(_, i)| *i).collect();
        idx.sort_unstable();
        assert_eq!(idx, vec![4, 6, 12]);

        // Q_8 as a subgroup of S_8 (regular representation): only index 8
        let i_img = Permutation::from_images_1based(&[2, 1, 4, 3, 6, 5, 8, 7]).unwrap();
        // quaternion group: i = (1,2,4,3)(5,7,8,6)-style; build via two generators
        let qi = Permutation::from_cycles(8, &[vec![1, 2, 4, 3], vec![5, 7, 8, 6]]).unwrap();
        let qj = Permutation::from_cycles(8, &[vec![1, 5, 4, 8], vec![2, 6, 3, 7]]).unwrap();
        let q8 = PermGroup::generate(&[qi, qj], 8, 100).unwrap();
        assert_eq!(q8.order(), Some(8));
        let _ = i_img;
        let rs = relatively_simple_subgroups(&q8).unwrap();
        let idx: Vec<usize> = rs.iter().map(|(_, i)| *i).collect();
        assert_eq!(idx, vec![8]);

        // S_3: indices {6, 3}
        let s3 = PermGroup::generate(&[p(3, &[&[1, 2]]), p(3, &[&[1, 2, 3]])], 3, 100).unwrap();
        let rs = relatively_simple_subgroups(&s3).unwrap();
        let mut idx: Vec<usize> = rs.iter().map(|(_, i)| *i).collect();
        idx.sort_unstable();
        assert_eq!(idx, vec![3, 6]);
    }

    #[test]
    fn coset_actions() {
        // A_4 on cosets of an order-2 subgroup: faithful transitive degree 6
        let a4 = PermGroup::generate(&[p(4, &[&[1, 2, 3]]), p(4, &[&[2, 3, 4]])], 4, 100).unwrap();
        let h = vec![Permutation::identity(4), p(4, &[&[1, 2], &[3, 4]])];
        let act = coset_action(&a4, &h).unwrap();
        assert_eq!(act.degree, 6);
        assert!(act.is_transitive());
        assert_eq!(act.order(), Some(12));

        // H = G: degree 1
        let act = coset_action(&a4, a4.elements.as_ref().unwrap()).unwrap();
        assert_eq!(act.degree, 1);

        // S_3 on cosets of <(1,2)>: natural degree-3 action
        let s3 = PermGroup::generate(&[p(3, &[&[1, 2]]), p(3, &[&[1, 2, 3]])], 3, 100).unwrap();
        let h = vec![Permutation::identity(3), p(3, &[&[1, 2]])];
        let act = coset_action(&s3, &h).unwrap();
        assert_eq!(act.degree, 3);
        assert_eq!(act.order(), Some(6));

        // Cayley embedding is faithful of degree |G|
        let kl4 = PermGroup::generate(&[p(4, &[&[1, 2], &[3, 4]]), p(4, &[&[1, 3], &[2, 4]])], 4, 100).unwrap();
        let act = coset_action(&kl4, &[Permutation::identity(4)]).unwrap();
        assert_eq!(act.degree, 4);
        assert_eq!(act.order(), Some(4));
    }

    #[test]
    fn alternating_containment() {
        let g = PermGroup::generate(&[p(5, &[&[1, 2, 5]]), p(5, &[&[3, 4, 5]])], 5, 1000).unwrap();
        assert_eq!(g.order(), Some(60));
        assert!(contains_alternating(&g, 1000).unwrap());
        let g = PermGroup::generate(&[p(4, &[&[1, 2, 4]]), p(4, &[&[3, 4]])], 4, 1000).unwrap();
        assert_eq!(g.order(), Some(24));
        assert!(contains_alternating(&g, 1000).unwrap());
        let g = PermGroup::generate(&[p(4, &[&[1, 2]])], 4, 1000).unwrap();
        assert!(!contains_alternating(&g, 1000).unwrap());
    }

    #[test]
    fn alternating_containment_beyond_cap() {
        // m = n = 5: degree 11, group too big to materialize
        let tau = Permutation::from_cycles(11, &[vec![1, 2, 3, 4, 5, 11]]).unwrap();
        let sigma = Permutation::from_cycles(11, &[vec![6, 7, 8, 9, 10, 11]]).unwrap();
        let g = PermGroup::generate_lazy(&[tau, sigma], 11, 100_000);
        assert!(g.elements.is_none());
        assert!(contains_alternating(&g, 100_000).unwrap());
    }

    #[test]
    fn parse_print_round_trip() {
        let q = p(5, &[&[1, 2, 3], &[4, 5]]);
        assert_eq!(q.to_string(), "(1,2,3)(4,5)");
        assert_eq!(parse_permutation("(1,2,3)(4,5)", 5).unwrap(), q);
        assert_eq!(parse_permutation("()", 3).unwrap(), Permutation::identity(3));
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }
}
