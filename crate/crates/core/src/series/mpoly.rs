//! Sparse exact polynomials in two named variables.

use super::coeff::{Coeff, Q};
use super::trunc::TruncSeries;
use crate::error::{Error, Result};
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exponent pair: (exponent of the first variable, exponent of the second).
pub type Exp = (u32, u32);

#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    pub vars: [String; 2],
    pub terms: BTreeMap<Exp, Coeff>,
}

impl MPoly {
    pub fn zero(vars: [&str; 2]) -> Self {
        MPoly { vars: [vars[0].to_string(), vars[1].to_string()], terms: BTreeMap::new() }
    }

    pub fn constant(vars: [&str; 2], c: Coeff) -> Self {
        let mut p = MPoly::zero(vars);
        p.set((0, 0), c);
        p
    }

    pub fn monomial(vars: [&str; 2], c: Coeff, e: Exp) -> Self {
        let mut p = MPoly::zero(vars);
        p.set(e, c);
        p
    }

    pub fn var_x(vars: [&str; 2]) -> Self {
        MPoly::monomial(vars, Coeff::one(), (1, 0))
    }

    pub fn var_y(vars: [&str; 2]) -> Self {
        MPoly::monomial(vars, Coeff::one(), (0, 1))
    }

    pub fn set(&mut self, e: Exp, c: Coeff) {
        if c.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, c);
        }
    }

    pub fn coeff(&self, e: Exp) -> Coeff {
        self.terms.get(&e).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn vars_match(&self, o: &MPoly) -> bool {
        self.vars == o.vars
    }

    pub fn names(&self) -> [&str; 2] {
        [&self.vars[0], &self.vars[1]]
    }

    pub fn add(&self, o: &MPoly) -> MPoly {
        debug_assert!(self.vars_match(o));
        let mut p = self.clone();
        for (e, c) in &o.terms {
            let cur = p.coeff(*e).add(c);
            p.set(*e, cur);
        }
        p
    }

    pub fn sub(&self, o: &MPoly) -> MPoly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> MPoly {
        MPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect() }
    }

    pub fn mul(&self, o: &MPoly) -> MPoly {
        debug_assert!(self.vars_match(o));
        let mut acc: BTreeMap<Exp, Coeff> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = (e1.0 + e2.0, e1.1 + e2.1);
                let entry = acc.entry(e).or_insert_with(Coeff::zero);
                *entry = entry.add(&c1.mul(c2));
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MPoly { vars: self.vars.clone(), terms: acc }
    }

    pub fn scale(&self, c: &Coeff) -> MPoly {
        if c.is_zero() {
            return MPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        }
        MPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, k)| (*e, k.mul(c))).collect() }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::constant([&self.vars[0], &self.vars[1]], Coeff::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn partial_x(&self) -> MPoly {
        let mut p = MPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            if e.0 > 0 {
                p.set((e.0 - 1, e.1), c.mul(&Coeff::from_int(e.0 as i64)));
            }
        }
        p
    }

    pub fn partial_y(&self) -> MPoly {
        let mut p = MPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            if e.1 > 0 {
                p.set((e.0, e.1 - 1), c.mul(&Coeff::from_int(e.1 as i64)));
            }
        }
        p
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.0).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.1).max()
    }

    pub fn max_exponent(&self) -> u32 {
        self.terms.keys().map(|e| e.0.max(e.1)).max().unwrap_or(0)
    }

    /// Order of vanishing of f(0, y) in y; None if f(0, y) == 0.
    pub fn ord_y_at_x0(&self) -> Option<u32> {
        self.terms.keys().filter(|e| e.0 == 0).map(|e| e.1).min()
    }

    /// Is every monomial divisible by x?
    pub fn divisible_by_x(&self) -> bool {
        !self.is_zero() && self.terms.keys().all(|e| e.0 > 0)
    }

    pub fn divisible_by_y(&self) -> bool {
        !self.is_zero() && self.terms.keys().all(|e| e.1 > 0)
    }

    pub fn divide_x_power(&self, k: u32) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    assert!(e.0 >= k);
                    ((e.0 - k, e.1), c.clone())
                })
                .collect(),
        }
    }

    pub fn divide_y_power(&self, k: u32) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    assert!(e.1 >= k);
                    ((e.0, e.1 - k), c.clone())
                })
                .collect(),
        }
    }

    /// View as a polynomial in y with coefficients Vec<(x-exp, Coeff)>.
    pub fn y_coefficients(&self) -> Vec<Vec<(u32, Coeff)>> {
        let dy = self.degree_y().map(|d| d as usize + 1).unwrap_or(0);
        let mut out = vec![Vec::new(); dy];
        for (e, c) in &self.terms {
            out[e.1 as usize].push((e.0, c.clone()));
        }
        out
    }

    pub fn from_y_coefficients(vars: [&str; 2], coeffs: &[Vec<(u32, Coeff)>]) -> MPoly {
        let mut p = MPoly::zero(vars);
        for (j, cs) in coeffs.iter().enumerate() {
            for (i, c) in cs {
                let cur = p.coeff((*i, j as u32)).add(c);
                p.set((*i, j as u32), cur);
            }
        }
        p
    }

    /// Swap the two variables (x <-> y).
    pub fn swap_vars(&self) -> MPoly {
        MPoly {
            vars: [self.vars[1].clone(), self.vars[0].clone()],
            terms: self.terms.iter().map(|(e, c)| ((e.1, e.0), c.clone())).collect(),
        }
    }

    /// Rename variables without touching exponents.
    pub fn with_vars(&self, vars: [&str; 2]) -> MPoly {
        MPoly { vars: [vars[0].to_string(), vars[1].to_string()], terms: self.terms.clone() }
    }

    /// Evaluate at a pair of truncated series.
    pub fn eval_series(&self, x: &TruncSeries, y: &TruncSeries) -> TruncSeries {
        let cap = x.cap.min(y.cap);
        let coeffs = self.y_coefficients();
        let mut acc = TruncSeries::zero(cap);
        // Horner in y, highest power first.
        for cs in coeffs.iter().rev() {
            acc = acc.mul(y);
            let mut row = TruncSeries::zero(cap);
            for (i, c) in cs {
                row = row.add(&x.pow(*i).scale(c));
            }
            acc = acc.add(&row);
        }
        acc
    }

    /// Substitute x -> x^q and y -> x^p * (c + y), used by the branch
    /// expansion. Exact polynomial output.
    pub fn np_substitute(&self, q: u32, p: u32, c: &Coeff) -> MPoly {
        let vars = self.names();
        let mut acc = MPoly::zero(vars);
        // y_new-degree d term: coeff * x^(i*q + j*p) * (c + y)^j
        for (e, k) in &self.terms {
            let (i, j) = *e;
            let xpow = i * q + j * p;
            // (c + y)^j expanded by binomials
            let mut bin = Q::one();
            for t in 0..=j {
                // C(j, t) * c^(j-t) * y^t
                let coeff = k.mul(&Coeff::from_rational(bin.clone())).mul(&c.pow(j - t));
                let cur = acc.coeff((xpow, t)).add(&coeff);
                acc.set((xpow, t), cur);
                bin = bin * Q::from_integer((j - t).into()) / Q::from_integer((t + 1).into());
            }
        }
        acc
    }

    /// Minimal x-exponent over all monomials.
    pub fn min_x_exponent(&self) -> u32 {
        self.terms.keys().map(|e| e.0).min().unwrap_or(0)
    }

    /// Normalize to an integral primitive form: rational content removed,
    /// leading (graded-lex, y-major) coefficient made positive when rational.
    pub fn normalized_integral(&self) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        // Collect all rational components to compute a common scalar.
        let mut nums: Vec<Q> = Vec::new();
        for c in self.terms.values() {
            for part in [&c.a, &c.b, &c.c, &c.d] {
                if !part.is_zero() {
                    nums.push(part.clone());
                }
            }
        }
        let mut denom_lcm = num::BigInt::one();
        for n in &nums {
            denom_lcm = num::integer::lcm(denom_lcm, n.denom().clone());
        }
        let mut numer_gcd = num::BigInt::zero();
        for n in &nums {
            let scaled = n * Q::from_integer(denom_lcm.clone());
            numer_gcd = num::integer::gcd(numer_gcd, scaled.numer().clone());
        }
        let mut scalar = Q::from_integer(denom_lcm) / Q::from_integer(numer_gcd);
        // Sign: leading term by (y-degree, x-degree).
        let lead = self
            .terms
            .keys()
            .max_by_key(|e| (e.1, e.0))
            .cloned()
            .unwrap();
        let lc = self.coeff(lead);
        let lead_sign = if !lc.a.is_zero() {
            lc.a.is_negative()
        } else if !lc.b.is_zero() {
            lc.b.is_negative()
        } else if !lc.c.is_zero() {
            lc.c.is_negative()
        } else {
            lc.d.is_negative()
        };
        if lead_sign {
            scalar = -scalar;
        }
        self.scale(&Coeff::from_rational(scalar))
    }
}

// ---------- parsing ----------

/// Parse a polynomial in the two declared variables. Grammar:
/// expr := term (('+'|'-') term)*, term := factor ('*' factor)*,
/// factor := base ('^' int)?, base := var | number | '(' expr ')' | 'sqrt(-3)'.
pub fn parse_mpoly(text: &str, vars: [&str; 2]) -> Result<MPoly> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0, vars };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(Error::Parse(format!("unexpected input at byte {}", p.pos)));
    }
    Ok(e)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    vars: [&'a str; 2],
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut neg = false;
        if self.eat('-') {
            neg = true;
        } else {
            let _ = self.eat('+');
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            if self.eat('+') {
                let t = self.term()?;
                acc = acc.add(&t);
            } else if self.eat('-') {
                let t = self.term()?;
                acc = acc.sub(&t);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MPoly> {
        let base = self.base()?;
        if self.eat('^') {
            let n = self.integer()?;
            if n < 0 {
                return Err(Error::Parse("negative exponent".into()));
            }
            return Ok(base.pow(n as u32));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<MPoly> {
        self.skip_ws();
        let c = self.peek().ok_or_else(|| Error::Parse("unexpected end of input".into()))?;
        if c == '(' {
            self.pos += 1;
            let e = self.expr()?;
            if !self.eat(')') {
                return Err(Error::Parse("expected ')'".into()));
            }
            return Ok(e);
        }
        if c.is_ascii_digit() {
            let n = self.integer()?;
            // allow rational "a/b"
            if self.eat('/') {
                let d = self.integer()?;
                if d == 0 {
                    return Err(Error::Parse("division by zero".into()));
                }
                return Ok(MPoly::constant(self.vars, Coeff::from_ratio(n, d)));
            }
            return Ok(MPoly::constant(self.vars, Coeff::from_int(n)));
        }
        if c.is_alphabetic() {
            let start = self.pos;
            while self.pos < self.chars.len()
                && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
            {
                self.pos += 1;
            }
            let word: String = self.chars[start..self.pos].iter().collect();
            if word == "sqrt" {
                // expect (-3)
                if self.eat('(') && self.eat('-') {
                    let n = self.integer()?;
                    if n == 3 && self.eat(')') {
                        return Ok(MPoly::constant(self.vars, Coeff::sqrt_m3()));
                    }
                }
                return Err(Error::Parse("only sqrt(-3) is supported".into()));
            }
            if word == self.vars[0] {
                return Ok(MPoly::var_x(self.vars));
            }
            if word == self.vars[1] {
                return Ok(MPoly::var_y(self.vars));
            }
            return Err(Error::Parse(format!("unknown identifier '{word}'")));
        }
        Err(Error::Parse(format!("unexpected character '{c}'")))
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let mut neg = false;
        if self.eat('-') {
            neg = true;
        }
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse("expected integer".into()));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        let v: i64 = s.parse().map_err(|_| Error::Parse("integer overflow".into()))?;
        Ok(if neg { -v } else { v })
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // y-major lex, highest first
        let mut keys: Vec<Exp> = self.terms.keys().cloned().collect();
        keys.sort_by_key(|e| std::cmp::Reverse((e.1, e.0)));
        let mut out = String::new();
        for (idx, e) in keys.iter().enumerate() {
            let c = self.coeff(*e);
            let mono = {
                let mut parts: Vec<String> = Vec::new();
                if e.0 > 0 {
                    parts.push(if e.0 == 1 {
                        self.vars[0].clone()
                    } else {
                        format!("{}^{}", self.vars[0], e.0)
                    });
                }
                if e.1 > 0 {
                    parts.push(if e.1 == 1 {
                        self.vars[1].clone()
                    } else {
                        format!("{}^{}", self.vars[1], e.1)
                    });
                }
                parts.join("*")
            };
            let (sign, abs) = coeff_sign_split(&c);
            if idx == 0 {
                if sign {
                    out.push_str("-");
                }
            } else if sign {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let cs = coeff_factor_string(&abs);
            if mono.is_empty() {
                out.push_str(&cs.unwrap_or_else(|| "1".to_string()));
            } else {
                if let Some(cs) = cs {
                    out.push_str(&cs);
                    out.push('*');
                }
                out.push_str(&mono);
            }
        }
        write!(f, "{out}")
    }
}

fn coeff_sign_split(c: &Coeff) -> (bool, Coeff) {
    // Pull out a leading minus when the first nonzero rational component is
    // negative.
    let first = [&c.a, &c.b, &c.c, &c.d].into_iter().find(|x| !x.is_zero());
    if let Some(x) = first {
        if x.is_negative() {
            return (true, c.neg());
        }
    }
    (false, c.clone())
}

fn coeff_factor_string(c: &Coeff) -> Option<String> {
    if c.is_one() {
        return None;
    }
    if c.is_rational() && c.a.denom().is_one() {
        return Some(format!("{}", c.a.numer()));
    }
    Some(format!("({c})"))
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = parse_mpoly("v^2 - u^3", ["u", "v"]).unwrap();
        assert_eq!(p.to_string(), "v^2 - u^3");
        let p = parse_mpoly("w^4 - (8/3)*z^2*w^3", ["z", "w"]).unwrap();
        assert_eq!(p.coeff((2, 3)), Coeff::from_ratio(-8, 3));
        let p = parse_mpoly("z^4 + 2*sqrt(-3)*z^2*w^2 + w^4", ["z", "w"]).unwrap();
        assert_eq!(p.coeff((2, 2)), Coeff::sqrt_m3().mul(&Coeff::from_int(2)));
        let round = parse_mpoly(&p.to_string(), ["z", "w"]).unwrap();
        assert_eq!(p, round);
    }

    #[test]
    fn jacobian_shape() {
        // handled in series::mod tests
        let f = parse_mpoly("z^2", ["z", "w"]).unwrap();
        assert_eq!(f.partial_x().to_string(), "2*z");
        assert!(f.partial_y().is_zero());
    }

    #[test]
    fn np_substitution() {
        // f = y^2 - x^3, substitute q=2, p=3, c=1: f(t^2, t^3(1+y))
        let f = parse_mpoly("y^2 - x^3", ["x", "y"]).unwrap();
        let g = f.np_substitute(2, 3, &Coeff::one());
        // = t^6 (1+y)^2 - t^6 = t^6 (2y + y^2)
        assert_eq!(g.min_x_exponent(), 6);
        let g = g.divide_x_power(6);
        assert_eq!(g.coeff((0, 0)), Coeff::zero());
        assert_eq!(g.coeff((0, 1)), Coeff::from_int(2));
        assert_eq!(g.coeff((0, 2)), Coeff::one());
    }

    #[test]
    fn eval_series() {
        use super::super::trunc::TruncSeries;
        let f = parse_mpoly("y^2 - x^3", ["x", "y"]).unwrap();
        let x = TruncSeries::monomial(Coeff::one(), 2, 64);
        let y = TruncSeries::monomial(Coeff::one(), 3, 64);
        let v = f.eval_series(&x, &y);
        assert!(v.is_zero());
    }
}
