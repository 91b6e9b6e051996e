//! Presentations of local fundamental groups from braid monodromy words,
//! and the finite-quotient equivalence oracle used to compare them.

use crate::braid::{act, standard_tuple, BraidWord, FreeWord};
use crate::perm::{PermGroup, Permutation};
use std::fmt;

/// A finite presentation on generators g_1..g_rank. Relators are stored
/// freely reduced; trivial relators are dropped but counted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub rank: usize,
    pub relators: Vec<FreeWord>,
    pub trivial_dropped: usize,
}

impl Presentation {
    pub fn new(rank: usize, relators: Vec<FreeWord>) -> Self {
        let mut kept = Vec::new();
        let mut dropped = 0;
        for r in relators {
            assert_eq!(r.rank, rank);
            if r.is_identity() {
                dropped += 1;
            } else {
                kept.push(r);
            }
        }
        Presentation { rank, relators: kept, trivial_dropped: dropped }
    }

    pub fn free(rank: usize) -> Self {
        Presentation { rank, relators: vec![], trivial_dropped: 0 }
    }

    pub fn relator_length(&self) -> usize {
        self.relators.iter().map(|r| r.letters.len()).sum()
    }

    /// Does the assignment g_i -> images[i] satisfy every relator?
    pub fn satisfied_by(&self, images: &[Permutation]) -> bool {
        assert_eq!(images.len(), self.rank);
        let d = images[0].degree();
        self.relators.iter().all(|r| {
            let mut acc = Permutation::identity(d);
            for &l in &r.letters {
                let p = &images[(l.unsigned_abs() as usize) - 1];
                acc = if l > 0 { acc.then(p) } else { acc.then(&p.inverse()) };
            }
            acc.is_identity()
        })
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (1..=self.rank).map(|i| format!("g{i}")).collect();
        let rels: Vec<String> = self.relators.iter().map(|r| r.cyclically_reduced().to_string()).collect();
        write!(f, "< {} | {} >", gens.join(" "), rels.join(", "))
    }
}

/// The presentation with relators g_i^-1 * (g_i)b, one per strand.
pub fn zvk_presentation(b: &BraidWord) -> Presentation {
    let m = b.strands;
    let t = standard_tuple(m);
    let image = act(b, &t);
    let relators = (0..m)
        .map(|i| t[i].inverse().mul(&image[i]))
        .collect();
    Presentation::new(m, relators)
}

/// All homomorphism tuples into S_d satisfying the relators (the full
/// |S_d|^rank search; callers keep d and rank small).
pub fn hom_set(p: &Presentation, d: usize) -> Vec<Vec<Permutation>> {
    let sd = PermGroup::generate_lazy(
        &[
            Permutation::from_cycles(d, &[vec![1, 2]]).unwrap(),
            Permutation::from_cycles(d, &[(1..=d).collect::<Vec<_>>()]).unwrap(),
        ],
        d,
        usize::MAX,
    );
    let elems = sd.elements.expect("symmetric group materializes");
    let mut out = Vec::new();
    let mut tuple: Vec<usize> = vec![0; p.rank];
    loop {
        let images: Vec<Permutation> = tuple.iter().map(|&i| elems[i].clone()).collect();
        if p.satisfied_by(&images) {
            out.push(images);
        }
        // increment
        let mut pos = 0;
        loop {
            if pos == p.rank {
                return out;
            }
            tuple[pos] += 1;
            if tuple[pos] < elems.len() {
                break;
            }
            tuple[pos] = 0;
            pos += 1;
        }
    }
}

/// Do two presentations of the same rank have exactly the same sets of
/// relation-satisfying tuples in S_d?
pub fn hom_set_equivalent(p1: &Presentation, p2: &Presentation, d: usize) -> bool {
    assert_eq!(p1.rank, p2.rank, "ranks must match");
    let a = hom_set(p1, d);
    let b = hom_set(p2, d);
    a == b
}

/// Hand-built reference presentations for the closed-form families, written
/// from the explicit relator shapes rather than through the braid action.
pub mod reference {
    use super::Presentation;
    use crate::braid::FreeWord;

    fn w(rank: usize, letters: &[i32]) -> FreeWord {
        FreeWord::from_letters(rank, letters.to_vec())
    }

    fn repeat(pattern: &[i32], times: u32) -> Vec<i32> {
        let mut v = Vec::new();
        for _ in 0..times {
            v.extend_from_slice(pattern);
        }
        v
    }

    fn inv(letters: &[i32]) -> Vec<i32> {
        letters.iter().rev().map(|l| -l).collect()
    }

    /// One relator equating one word to another: lhs * rhs^-1.
    fn relator(rank: usize, lhs: Vec<i32>, rhs: Vec<i32>) -> FreeWord {
        let mut v = lhs;
        v.extend(inv(&rhs));
        w(rank, &v)
    }

    /// Two generators, relator (g1 g2)^k g1^(1-delta) = (g2 g1)^k g2^(1-delta)
    /// where n = 2k - delta.
    pub fn a_family(n: u32) -> Presentation {
        let delta = n % 2;
        let k = (n + delta) / 2;
        let mut lhs = repeat(&[1, 2], k);
        let mut rhs = repeat(&[2, 1], k);
        if delta == 0 {
            lhs.push(1);
            rhs.push(2);
        }
        Presentation::new(2, vec![relator(2, lhs, rhs)])
    }

    /// Triple point with one tangent direction, beta = 1 or 2.
    pub fn t3_nb(n: u32, beta: u32) -> Presentation {
        let c = [1, 2, 3];
        let conj = |power: u32, inner: i32| -> Vec<i32> {
            let mut v = repeat(&c, power);
            v.push(inner);
            v.extend(inv(&repeat(&c, power)));
            v
        };
        let rels = if beta == 1 {
            vec![
                relator(3, vec![1], conj(n + 1, 3)),
                relator(3, vec![2], conj(n, 1)),
                relator(3, vec![3], conj(n, 2)),
            ]
        } else {
            vec![
                relator(3, vec![1], conj(n + 1, 2)),
                relator(3, vec![2], conj(n + 1, 3)),
                relator(3, vec![3], conj(n, 1)),
            ]
        };
        Presentation::new(3, rels)
    }

    /// Even-contact triple point, odd twisting: relators of the shape
    ///   g1 = C (g1 g2)^n g1 g2 g1^-1 (g1 g2)^-n C^-1,
    ///   g2 = C (g1 g2)^n g1 (g1 g2)^-n C^-1,
    ///   g3 = C g3 C^-1,           with C = (g1 g2 g3)^cpow.
    pub fn t3_even_odd_twist(cpow: u32, n: u32) -> Presentation {
        let c = repeat(&[1, 2, 3], cpow);
        let ci = inv(&c);
        let ab = repeat(&[1, 2], n);
        let abi = inv(&ab);
        let mk = |inner: Vec<i32>| -> Vec<i32> {
            let mut v = c.clone();
            v.extend(ab.clone());
            v.extend(inner);
            v.extend(abi.clone());
            v.extend(ci.clone());
            v
        };
        let rels = vec![
            relator(3, vec![1], mk(vec![1, 2, -1])),
            relator(3, vec![2], mk(vec![1])),
            relator(3, vec![3], {
                let mut v = c.clone();
                v.push(3);
                v.extend(ci.clone());
                v
            }),
        ];
        Presentation::new(3, rels)
    }

    /// Even-contact triple point, even twisting: conjugation by (g1 g2)^n
    /// inside the C-conjugation.
    pub fn t3_even_even_twist(cpow: u32, n: u32) -> Presentation {
        let c = repeat(&[1, 2, 3], cpow);
        let ci = inv(&c);
        let ab = repeat(&[1, 2], n);
        let abi = inv(&ab);
        let mk = |inner: i32| -> Vec<i32> {
            let mut v = c.clone();
            v.extend(ab.clone());
            v.push(inner);
            v.extend(abi.clone());
            v.extend(ci.clone());
            v
        };
        let rels = vec![
            relator(3, vec![1], mk(1)),
            relator(3, vec![2], mk(2)),
            relator(3, vec![3], {
                let mut v = c.clone();
                v.push(3);
                v.extend(ci.clone());
                v
            }),
        ];
        Presentation::new(3, rels)
    }

    /// D-family: one transverse line plus a pair twisted j extra half-turns,
    /// n = j + 4. The line is generator 1; the pair is (g2, g3).
    pub fn d_family(n: u32) -> Presentation {
        assert!(n >= 4);
        let c = [1, 2, 3];
        let cv = c.to_vec();
        let ci = inv(&cv);
        let j = n - 4;
        let mk = |inner: Vec<i32>| -> Vec<i32> {
            let mut v = cv.clone();
            v.extend(inner);
            v.extend(ci.clone());
            v
        };
        let rels = if j % 2 == 1 {
            // odd extra twisting a_2^(2s+1), s = (j-1)/2
            let s = (j - 1) / 2;
            let bc = repeat(&[2, 3], s);
            let bci = inv(&bc);
            let wrap = |inner: Vec<i32>| {
                let mut v = bc.clone();
                v.extend(inner);
                v.extend(bci.clone());
                v
            };
            vec![
                relator(3, vec![1], mk(vec![1])),
                relator(3, vec![2], mk(wrap(vec![2, 3, -2]))),
                relator(3, vec![3], mk(wrap(vec![2]))),
            ]
        } else {
            let s = j / 2;
            let bc = repeat(&[2, 3], s);
            let bci = inv(&bc);
            let wrap = |inner: i32| {
                let mut v = bc.clone();
                v.push(inner);
                v.extend(bci.clone());
                v
            };
            vec![
                relator(3, vec![1], mk(vec![1])),
                relator(3, vec![2], mk(wrap(2))),
                relator(3, vec![3], mk(wrap(3))),
            ]
        };
        Presentation::new(3, rels)
    }

    /// Axis through a pair: powers of the half twist h with
    /// h(g1, g2, g3) = ((g1 g2) g3 (g1 g2)^-1, g1 g2 g1^-1, g1).
    pub fn t3_odd(n: u32) -> Presentation {
        let j = n / 2;
        let c = repeat(&[1, 2, 3], j);
        let ci = inv(&c);
        let mk = |inner: Vec<i32>| -> Vec<i32> {
            let mut v = c.clone();
            v.extend(inner);
            v.extend(ci.clone());
            v
        };
        let rels = if n % 2 == 0 {
            vec![
                relator(3, vec![1], mk(vec![1])),
                relator(3, vec![2], mk(vec![2])),
                relator(3, vec![3], mk(vec![3])),
            ]
        } else {
            vec![
                relator(3, vec![1], mk(vec![1, 2, 3, -2, -1])),
                relator(3, vec![2], mk(vec![1, 2, -1])),
                relator(3, vec![3], mk(vec![1])),
            ]
        };
        Presentation::new(3, rels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{braid_monodromy, parse_braid};
    use crate::label::SingularityLabel as L;

    #[test]
    fn zvk_commutator_for_a1() {
        let p = zvk_presentation(&parse_braid("a1^2", 2).unwrap());
        assert_eq!(p.relators.len(), 2);
        // both relators are conjugates of the commutator [g1, g2]
        let homs = hom_set(&p, 3);
        // commuting pairs in S_3: count pairs with xy = yx: 18
        assert_eq!(homs.len(), 18);
    }

    #[test]
    fn zvk_trivial_for_empty_braid() {
        let p = zvk_presentation(&BraidWord::identity(3));
        assert_eq!(p.relators.len(), 0);
        assert_eq!(p.trivial_dropped, 3);
    }

    #[test]
    fn a_family_matches_zvk() {
        for n in 1..=6u32 {
            let b = braid_monodromy(&L::A(n)).unwrap();
            let p = zvk_presentation(&b);
            let q = reference::a_family(n);
            assert!(hom_set_equivalent(&p, &q, 4), "A_{n}");
        }
    }

    #[test]
    fn distinct_quotients_detected() {
        let p2 = zvk_presentation(&parse_braid("a1^2", 2).unwrap());
        let p3 = zvk_presentation(&parse_braid("a1^3", 2).unwrap());
        assert!(!hom_set_equivalent(&p2, &p3, 3));
        assert!(hom_set_equivalent(&p2, &p2, 3));
    }

    #[test]
    fn conjugation_equivariance() {
        let b = braid_monodromy(&L::T3NB { n: 1, beta: 1 }).unwrap();
        let p = zvk_presentation(&b);
        let homs = hom_set(&p, 4);
        let g = Permutation::from_cycles(4, &[vec![1, 2, 3]]).unwrap();
        for h in homs.iter().take(50) {
            let conj: Vec<Permutation> = h.iter().map(|x| x.conjugate_by(&g)).collect();
            assert!(p.satisfied_by(&conj));
        }
        // trivial homomorphism always satisfies
        let ident = vec![Permutation::identity(4); 3];
        assert!(p.satisfied_by(&ident));
    }

    #[test]
    fn display_format() {
        let p = zvk_presentation(&parse_braid("a1^2", 2).unwrap());
        let s = p.to_string();
        assert!(s.starts_with("< g1 g2 |"), "{s}");
    }
}
