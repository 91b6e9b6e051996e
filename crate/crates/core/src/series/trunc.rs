//! Truncated univariate series in a parameter t with exact coefficients.
//!
//! A `TruncSeries` knows its coefficients for every exponent strictly below
//! `cap`. Polynomial (exact) data uses `cap = EXACT`. All arithmetic tracks
//! the correct cap of the result, so vanishing orders read off a series are
//! trustworthy up to its cap.

use super::coeff::Coeff;
use std::collections::BTreeMap;
use std::fmt;

/// Cap value meaning "known to all orders".
pub const EXACT: u32 = u32::MAX;

#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    pub terms: BTreeMap<u32, Coeff>,
    pub cap: u32,
}

/// Vanishing order of a truncated series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VanishingOrder {
    Finite(u32),
    /// All coefficients below the cap vanish.
    InfiniteUpToCap(u32),
}

impl VanishingOrder {
    pub fn finite(self) -> Option<u32> {
        match self {
            VanishingOrder::Finite(n) => Some(n),
            VanishingOrder::InfiniteUpToCap(_) => None,
        }
    }
}

impl TruncSeries {
    pub fn zero(cap: u32) -> Self {
        TruncSeries { terms: BTreeMap::new(), cap }
    }

    pub fn monomial(c: Coeff, e: u32, cap: u32) -> Self {
        let mut s = TruncSeries::zero(cap);
        if !c.is_zero() && e < cap {
            s.terms.insert(e, c);
        }
        s
    }

    pub fn constant(c: Coeff, cap: u32) -> Self {
        TruncSeries::monomial(c, 0, cap)
    }

    pub fn from_terms(terms: Vec<(u32, Coeff)>, cap: u32) -> Self {
        let mut s = TruncSeries::zero(cap);
        for (e, c) in terms {
            if e < cap && !c.is_zero() {
                let entry = s.terms.entry(e).or_insert_with(Coeff::zero);
                *entry = entry.add(&c);
                if entry.is_zero() {
                    s.terms.remove(&e);
                }
            }
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn ord(&self) -> VanishingOrder {
        match self.terms.keys().next() {
            Some(&e) => VanishingOrder::Finite(e),
            None => VanishingOrder::InfiniteUpToCap(self.cap),
        }
    }

    pub fn coeff(&self, e: u32) -> Coeff {
        self.terms.get(&e).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn leading(&self) -> Option<(u32, &Coeff)> {
        self.terms.iter().next().map(|(e, c)| (*e, c))
    }

    fn prune(&mut self) {
        let cap = self.cap;
        self.terms.retain(|e, c| *e < cap && !c.is_zero());
    }

    pub fn truncate(&self, cap: u32) -> TruncSeries {
        let mut s = self.clone();
        s.cap = s.cap.min(cap);
        s.prune();
        s
    }

    pub fn add(&self, o: &TruncSeries) -> TruncSeries {
        let mut s = TruncSeries::zero(self.cap.min(o.cap));
        s.terms = self.terms.clone();
        for (e, c) in &o.terms {
            let entry = s.terms.entry(*e).or_insert_with(Coeff::zero);
            *entry = entry.add(c);
        }
        s.prune();
        s
    }

    pub fn sub(&self, o: &TruncSeries) -> TruncSeries {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> TruncSeries {
        TruncSeries { terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(), cap: self.cap }
    }

    pub fn scale(&self, c: &Coeff) -> TruncSeries {
        if c.is_zero() {
            return TruncSeries::zero(self.cap);
        }
        TruncSeries { terms: self.terms.iter().map(|(e, k)| (*e, k.mul(c))).collect(), cap: self.cap }
    }

    /// Multiply by the monomial c * t^e.
    pub fn mul_monomial(&self, c: &Coeff, e: u32) -> TruncSeries {
        let cap = self.cap.saturating_add(e);
        let mut s = TruncSeries::zero(cap);
        if c.is_zero() {
            return s;
        }
        for (k, v) in &self.terms {
            s.terms.insert(k + e, v.mul(c));
        }
        s
    }

    pub fn mul(&self, o: &TruncSeries) -> TruncSeries {
        // Knowing a mod t^c1 and b mod t^c2, the product is known mod
        // t^min(c1 + ord b, c2 + ord a).
        let o1 = match self.ord() {
            VanishingOrder::Finite(n) => n,
            VanishingOrder::InfiniteUpToCap(c) => c,
        };
        let o2 = match o.ord() {
            VanishingOrder::Finite(n) => n,
            VanishingOrder::InfiniteUpToCap(c) => c,
        };
        let cap = self.cap.saturating_add(o2).min(o.cap.saturating_add(o1));
        let mut acc: BTreeMap<u32, Coeff> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = e1 + e2;
                if e >= cap {
                    continue;
                }
                let entry = acc.entry(e).or_insert_with(Coeff::zero);
                *entry = entry.add(&c1.mul(c2));
            }
        }
        let mut s = TruncSeries { terms: acc, cap };
        s.prune();
        s
    }

    pub fn pow(&self, e: u32) -> TruncSeries {
        let mut acc = TruncSeries::constant(Coeff::one(), EXACT);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitute t -> t^k (stretch exponents).
    pub fn stretch(&self, k: u32) -> TruncSeries {
        assert!(k >= 1);
        TruncSeries {
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
            cap: self.cap.saturating_mul(k),
        }
    }

    /// Divide every exponent by k; panics unless all exponents are multiples.
    pub fn compress(&self, k: u32) -> TruncSeries {
        assert!(k >= 1);
        TruncSeries {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    assert!(e % k == 0, "exponent {e} not divisible by {k}");
                    (e / k, c.clone())
                })
                .collect(),
            cap: if self.cap == EXACT { EXACT } else { self.cap / k },
        }
    }

    /// Substitute another series for t. Requires ord(inner) >= 1.
    pub fn compose(&self, inner: &TruncSeries) -> TruncSeries {
        if let VanishingOrder::Finite(0) = inner.ord() {
            panic!("composition requires the inner series to vanish at 0");
        }
        let cap = effective_compose_cap(self, inner);
        let mut acc = TruncSeries::zero(cap);
        // Horner over descending exponents: acc = acc*inner^(gap) + c
        let entries: Vec<(u32, Coeff)> = self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        let mut prev: Option<u32> = None;
        for (e, c) in entries.iter().rev() {
            if let Some(p) = prev {
                for _ in 0..(p - e) {
                    acc = acc.mul(inner);
                }
            }
            acc = acc.add(&TruncSeries::constant(c.clone(), cap));
            prev = Some(*e);
        }
        if let Some(p) = prev {
            for _ in 0..p {
                acc = acc.mul(inner);
            }
        }
        acc.truncate(cap)
    }

    /// Multiplicative inverse of a unit series (nonzero constant term).
    pub fn invert_unit(&self) -> TruncSeries {
        let c0 = self.coeff(0);
        assert!(!c0.is_zero(), "not a unit series");
        let cap = self.cap;
        if cap == EXACT {
            // An exact polynomial still only has a series inverse; the caller
            // must truncate first.
            panic!("invert_unit requires a finite cap");
        }
        // Newton at full working precision; the error order doubles per step.
        let mut inv = TruncSeries::constant(c0.inv(), cap);
        let one = TruncSeries::constant(Coeff::one(), cap);
        for _ in 0..64 {
            let err = one.sub(&self.mul(&inv).truncate(cap));
            if err.is_zero() {
                break;
            }
            inv = inv.add(&inv.mul(&err)).truncate(cap);
        }
        inv.cap = cap;
        inv
    }

    /// e-th root of a unit series with constant term 1.
    pub fn unit_root(&self, e: u32) -> TruncSeries {
        assert!(self.coeff(0).is_one(), "unit_root wants constant term 1");
        assert!(self.cap != EXACT, "unit_root requires a finite cap");
        let cap = self.cap;
        let mut r = TruncSeries::constant(Coeff::one(), cap);
        let one = TruncSeries::constant(Coeff::one(), cap);
        let inv_e = Coeff::from_int(e as i64).inv();
        for _ in 0..64 {
            let re = r.pow(e).truncate(cap);
            let quot = self.mul(&re.invert_unit()).truncate(cap);
            let delta = quot.sub(&one).scale(&inv_e);
            if delta.is_zero() {
                break;
            }
            r = r.add(&r.mul(&delta)).truncate(cap);
        }
        r.cap = cap;
        r
    }
}

fn effective_compose_cap(outer: &TruncSeries, inner: &TruncSeries) -> u32 {
    let io = match inner.ord() {
        VanishingOrder::Finite(n) => n.max(1),
        VanishingOrder::InfiniteUpToCap(c) => c,
    };
    // outer known below cap_o: error term t_outer^cap_o gives ord io*cap_o;
    // inner known below cap_i: error appears at ord cap_i at the earliest
    // (multiplied by outer ord >= 0 ... conservative: cap_i).
    let a = outer.cap.saturating_mul(io);
    a.min(inner.cap)
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")?;
        } else {
            let parts: Vec<String> = self
                .terms
                .iter()
                .map(|(e, c)| match e {
                    0 => format!("{c}"),
                    1 => format!("({c})*t"),
                    _ => format!("({c})*t^{e}"),
                })
                .collect();
            write!(f, "{}", parts.join(" + "))?;
        }
        if self.cap != EXACT {
            write!(f, " + O(t^{})", self.cap)?;
        }
        Ok(())
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> Coeff {
        Coeff::from_int(n)
    }

    #[test]
    fn mul_caps() {
        // (t + O(t^5)) * (t^2 + O(t^6)) known mod t^min(5+2, 6+1) = t^7
        let a = TruncSeries::monomial(c(1), 1, 5);
        let b = TruncSeries::monomial(c(1), 2, 6);
        let p = a.mul(&b);
        assert_eq!(p.cap, 7);
        assert_eq!(p.coeff(3), c(1));
    }

    #[test]
    fn invert_and_root() {
        // 1 + t
        let s = TruncSeries::from_terms(vec![(0, c(1)), (1, c(1))], 16);
        let inv = s.invert_unit();
        let prod = s.mul(&inv);
        assert_eq!(prod.coeff(0), c(1));
        for e in 1..16 {
            assert!(prod.coeff(e).is_zero(), "e={e}");
        }
        let r = s.unit_root(3);
        let r3 = r.pow(3).truncate(16);
        assert_eq!(r3.coeff(0), c(1));
        assert_eq!(r3.coeff(1), c(1));
        for e in 2..16 {
            assert!(r3.coeff(e).is_zero(), "e={e}");
        }
    }

    #[test]
    fn compose_simple() {
        // f(t) = t^2, inner = t + t^2: f(inner) = t^2 + 2t^3 + t^4
        let f = TruncSeries::monomial(c(1), 2, 10);
        let inner = TruncSeries::from_terms(vec![(1, c(1)), (2, c(1))], 10);
        let g = f.compose(&inner);
        assert_eq!(g.coeff(2), c(1));
        assert_eq!(g.coeff(3), c(2));
        assert_eq!(g.coeff(4), c(1));
    }
}
