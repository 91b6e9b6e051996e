//! Braid words on Artin generators, the induced right action on free-group
//! generator tuples, and the closed-form braid monodromy table for the
//! supported singularity types.

use crate::error::{Error, Result};
use crate::label::SingularityLabel;
use std::fmt;

/// A braid word: letters are signed generator indices, +i for a_i and -i
/// for its inverse, with 1 <= i < strands. Words are kept unreduced; the
/// faithful free-group action is the equality oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Self {
        for &l in &letters {
            assert!(l != 0 && (l.unsigned_abs() as usize) < strands, "letter out of range");
        }
        BraidWord { strands, letters }
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: vec![] }
    }

    pub fn gen(strands: usize, i: usize) -> Self {
        BraidWord::new(strands, vec![i as i32])
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.strands, other.strands);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands, letters }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> BraidWord {
        let mut letters = Vec::with_capacity(self.letters.len() * e as usize);
        for _ in 0..e {
            letters.extend_from_slice(&self.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// The full twist Delta_m = (a_1 a_2 ... a_{m-1})^m, central in Br_m.
pub fn full_twist(m: usize) -> BraidWord {
    assert!(m >= 2);
    let block: Vec<i32> = (1..m as i32).collect();
    let mut letters = Vec::with_capacity(m * (m - 1));
    for _ in 0..m {
        letters.extend_from_slice(&block);
    }
    BraidWord { strands: m, letters }
}

/// A word in the free group on generators g_1..g_rank: letters are signed
/// indices; stored freely reduced.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    pub rank: usize,
    pub letters: Vec<i32>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        FreeWord { rank, letters: vec![] }
    }

    pub fn gen(rank: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= rank);
        FreeWord { rank, letters: vec![i as i32] }
    }

    pub fn from_letters(rank: usize, letters: Vec<i32>) -> Self {
        let mut w = FreeWord { rank, letters: vec![] };
        for l in letters {
            assert!(l != 0 && (l.unsigned_abs() as usize) <= rank);
            w.push(l);
        }
        w
    }

    fn push(&mut self, l: i32) {
        if self.letters.last() == Some(&-l) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        assert_eq!(self.rank, other.rank);
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord { rank: self.rank, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    pub fn conjugate_by(&self, g: &FreeWord) -> FreeWord {
        g.mul(self).mul(&g.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Cyclically reduced copy (for display).
    pub fn cyclically_reduced(&self) -> FreeWord {
        let mut l = self.letters.clone();
        while l.len() >= 2 && l.first() == l.last().map(|x| -x).as_ref() {
            l.remove(0);
            l.pop();
        }
        FreeWord { rank: self.rank, letters: l }
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        // run-length collapse into powers
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == l {
                j += 1;
            }
            let e = (j - i) as i32 * l.signum();
            let name = format!("g{}", l.unsigned_abs());
            if e == 1 {
                parts.push(name);
            } else {
                parts.push(format!("{name}^{e}"));
            }
            i = j;
        }
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The standard tuple (g_1, ..., g_m).
pub fn standard_tuple(m: usize) -> Vec<FreeWord> {
    (1..=m).map(|i| FreeWord::gen(m, i)).collect()
}

/// Right action of a braid word on a tuple of free words, letter by letter:
/// a_i sends (.., w_i, w_{i+1}, ..) to (.., w_i w_{i+1} w_i^-1, w_i, ..).
pub fn act(b: &BraidWord, tuple: &[FreeWord]) -> Vec<FreeWord> {
    assert_eq!(tuple.len(), b.strands, "tuple length must equal strand count");
    let mut t: Vec<FreeWord> = tuple.to_vec();
    for &l in &b.letters {
        let i = (l.unsigned_abs() as usize) - 1;
        if l > 0 {
            let new_i = t[i].mul(&t[i + 1]).mul(&t[i].inverse());
            t[i + 1] = t[i].clone();
            t[i] = new_i;
        } else {
            let new_i1 = t[i + 1].inverse().mul(&t[i]).mul(&t[i + 1]);
            t[i] = t[i + 1].clone();
            t[i + 1] = new_i1;
        }
    }
    t
}

/// Exact equality of induced free-group automorphisms; sound and complete
/// because the Artin representation is faithful.
pub fn automorphism_equal(b1: &BraidWord, b2: &BraidWord) -> bool {
    assert_eq!(b1.strands, b2.strands, "strand counts must match");
    let t = standard_tuple(b1.strands);
    act(b1, &t) == act(b2, &t)
}

/// Closed-form braid monodromy for the supported singularity labels.
///
/// Strand counts follow the multiplicity of the singularity: 2 for the
/// A-family, 3 for the D and triple-point families. The two T3 subscript
/// families are keyed on defining-equation parameters.
pub fn braid_monodromy(label: &SingularityLabel) -> Result<BraidWord> {
    use SingularityLabel::*;
    let b = match label.table_form() {
        A(n) => BraidWord::gen(2, 1).pow(n + 1),
        D(n) => {
            assert!(n >= 4);
            full_twist(3).concat(&BraidWord::gen(3, 2).pow(n - 4))
        }
        T3NB { n, beta } => {
            let ab = BraidWord::new(3, vec![1, 2]);
            full_twist(3).pow(n).concat(&ab.pow(beta))
        }
        T3Even { k, n } => full_twist(3).pow(k).concat(&BraidWord::gen(3, 1).pow(n + 1)),
        T3Odd { n } => BraidWord::new(3, vec![1, 2, 1]).pow(n),
        other => return Err(Error::UnsupportedLabel(other.to_string())),
    };
    Ok(b)
}

/// Parse "a1 a2^-1 a1^3" as a braid word on the given strand count.
pub fn parse_braid(text: &str, strands: usize) -> Result<BraidWord> {
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        let rest = tok
            .strip_prefix('a')
            .ok_or_else(|| Error::Parse(format!("expected generator like a1, got '{tok}'")))?;
        let (idx_s, exp) = match rest.split_once('^') {
            Some((i, e)) => (i, e.parse::<i32>().map_err(|_| Error::Parse("bad exponent".into()))?),
            None => (rest, 1),
        };
        let idx: usize = idx_s.parse().map_err(|_| Error::Parse("bad generator index".into()))?;
        if idx == 0 || idx >= strands {
            return Err(Error::Parse(format!("generator a{idx} out of range for {strands} strands")));
        }
        let l = idx as i32 * exp.signum();
        for _ in 0..exp.unsigned_abs() {
            letters.push(if exp >= 0 { idx as i32 } else { -(idx as i32) });
        }
        let _ = l;
    }
    Ok(BraidWord::new(strands, letters))
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == l {
                j += 1;
            }
            let e = (j - i) as i32 * l.signum();
            let name = format!("a{}", l.unsigned_abs());
            if e == 1 {
                parts.push(name);
            } else {
                parts.push(format!("{name}^{e}"));
            }
            i = j;
        }
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_twist_shape() {
        assert_eq!(full_twist(2).letters, vec![1, 1]);
        let d3 = full_twist(3);
        assert_eq!(d3.letters.len(), 6);
        assert_eq!(d3.letters, vec![1, 2, 1, 2, 1, 2]);
    }

    #[test]
    fn action_basics() {
        let t = standard_tuple(2);
        let a1 = BraidWord::gen(2, 1);
        let r = act(&a1, &t);
        assert_eq!(r[0], FreeWord::from_letters(2, vec![1, 2, -1]));
        assert_eq!(r[1], FreeWord::gen(2, 1));
        // inverse then forward is the identity
        let t3 = standard_tuple(3);
        let w = BraidWord::new(3, vec![-1, 1]);
        assert_eq!(act(&w, &t3), t3);
        // empty braid
        assert_eq!(act(&BraidWord::identity(3), &t3), t3);
    }

    #[test]
    fn full_twist_is_global_conjugation() {
        let m = 3;
        let t = standard_tuple(m);
        let d = full_twist(m);
        let r = act(&d, &t);
        let c = FreeWord::from_letters(m, vec![1, 2, 3]);
        for i in 0..m {
            assert_eq!(r[i], t[i].conjugate_by(&c));
        }
    }

    #[test]
    fn braid_relations() {
        for m in 2..=5usize {
            for i in 1..m - 1 {
                let lhs = BraidWord::new(m, vec![i as i32, i as i32 + 1, i as i32]);
                let rhs = BraidWord::new(m, vec![i as i32 + 1, i as i32, i as i32 + 1]);
                assert!(automorphism_equal(&lhs, &rhs));
            }
            for i in 1..m {
                for k in 1..m {
                    if (i as i32 - k as i32).abs() >= 2 {
                        let lhs = BraidWord::new(m, vec![i as i32, k as i32]);
                        let rhs = BraidWord::new(m, vec![k as i32, i as i32]);
                        assert!(automorphism_equal(&lhs, &rhs));
                    }
                }
            }
        }
        assert!(!automorphism_equal(&BraidWord::gen(3, 1), &BraidWord::gen(3, 2)));
    }

    #[test]
    fn twist_identities() {
        // (a2 a1^2 a2) a1^2 = Delta_3
        let lhs = parse_braid("a2 a1^2 a2 a1^2", 3).unwrap();
        assert!(automorphism_equal(&lhs, &full_twist(3)));
        // a2 a1^2 a2 commutes with a1
        let u = parse_braid("a2 a1^2 a2 a1", 3).unwrap();
        let v = parse_braid("a1 a2 a1^2 a2", 3).unwrap();
        assert!(automorphism_equal(&u, &v));
        // half twist squared is the full twist
        let h = BraidWord::new(3, vec![1, 2, 1]);
        assert!(automorphism_equal(&h.pow(2), &full_twist(3)));
    }

    #[test]
    fn monodromy_table() {
        use crate::label::SingularityLabel as L;
        assert_eq!(braid_monodromy(&L::A(3)).unwrap().to_string(), "a1^4");
        assert_eq!(braid_monodromy(&L::D(5)).unwrap().to_string(), "a1 a2 a1 a2 a1 a2^2");
        let t = braid_monodromy(&L::T3NB { n: 2, beta: 1 }).unwrap();
        assert_eq!(t.len(), 14);
        let t = braid_monodromy(&L::T3Odd { n: 2 }).unwrap();
        assert_eq!(t.letters, vec![1, 2, 1, 1, 2, 1]);
        assert!(braid_monodromy(&L::T4 { n1: 1, n2: 1 }).is_err());
        // aliases route through the table
        assert!(braid_monodromy(&L::E7).is_ok());
    }

    #[test]
    fn parse_round_trip() {
        let b = parse_braid("a1 a2^-1 a1^3", 3).unwrap();
        assert_eq!(b.letters, vec![1, -2, 1, 1, 1]);
        assert_eq!(b.to_string(), "a1 a2^-1 a1^3");
    }
}
