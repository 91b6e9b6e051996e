//! Exact scalars in the field Q(s, i) where s = sqrt(-3) and i = sqrt(-1).
//!
//! Every element is stored as a + b*s + c*i + d*s*i with rational a, b, c, d.
//! The field contains all 12th roots of unity, which is what the branch
//! expansions and Klein invariant forms need. Arithmetic is exact; there is
//! no rounding anywhere.

use num::bigint::BigInt;
use num::{BigRational, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// a + b*sqrt(-3) + c*i + d*sqrt(-3)*i
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coeff {
    pub a: Q,
    pub b: Q,
    pub c: Q,
    pub d: Q,
}

impl Coeff {
    pub fn zero() -> Self {
        Coeff { a: Q::zero(), b: Q::zero(), c: Q::zero(), d: Q::zero() }
    }

    pub fn one() -> Self {
        Coeff { a: Q::one(), b: Q::zero(), c: Q::zero(), d: Q::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Coeff { a: q(n), ..Coeff::zero() }
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Coeff { a: qr(n, d), ..Coeff::zero() }
    }

    pub fn from_rational(a: Q) -> Self {
        Coeff { a, ..Coeff::zero() }
    }

    /// sqrt(-3)
    pub fn sqrt_m3() -> Self {
        Coeff { b: Q::one(), ..Coeff::zero() }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Coeff { c: Q::one(), ..Coeff::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Q> {
        if self.is_rational() {
            Some(&self.a)
        } else {
            None
        }
    }

    pub fn mul(&self, o: &Coeff) -> Coeff {
        // Fast path: both rational.
        if self.is_rational() && o.is_rational() {
            return Coeff { a: &self.a * &o.a, ..Coeff::zero() };
        }
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        // s^2 = -3, i^2 = -1, (si)^2 = 3, s*i = si, s*si = -3i, i*si = -s
        Coeff {
            a: a1 * a2 - q(3) * (b1 * b2) - c1 * c2 + q(3) * (d1 * d2),
            b: a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2,
            c: a1 * c2 + c1 * a2 - q(3) * (b1 * d2) - q(3) * (d1 * b2),
            d: a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        }
    }

    pub fn add(&self, o: &Coeff) -> Coeff {
        Coeff { a: &self.a + &o.a, b: &self.b + &o.b, c: &self.c + &o.c, d: &self.d + &o.d }
    }

    pub fn sub(&self, o: &Coeff) -> Coeff {
        Coeff { a: &self.a - &o.a, b: &self.b - &o.b, c: &self.c - &o.c, d: &self.d - &o.d }
    }

    pub fn neg(&self) -> Coeff {
        Coeff { a: -&self.a, b: -&self.b, c: -&self.c, d: -&self.d }
    }

    /// Inverse via the tower Q(s)(i): with x = p + q*i (p, q in Q(s)),
    /// x^-1 = conj(x) / (p^2 + q^2), and norms in Q(s) reduce to Q.
    pub fn inv(&self) -> Coeff {
        assert!(!self.is_zero(), "division by zero");
        if self.is_rational() {
            return Coeff { a: self.a.recip(), ..Coeff::zero() };
        }
        // p = (a, b), q = (c, d) as elements of Q(s)
        let p = (self.a.clone(), self.b.clone());
        let qq = (self.c.clone(), self.d.clone());
        // n = p^2 + q^2 in Q(s)
        let n = k_add(&k_mul(&p, &p), &k_mul(&qq, &qq));
        let n_inv = k_inv(&n);
        // conj over i: p - q*i
        let re = k_mul(&p, &n_inv);
        let im = k_mul(&(-qq.0.clone(), -qq.1.clone()), &n_inv);
        Coeff { a: re.0, b: re.1, c: im.0, d: im.1 }
    }

    pub fn div(&self, o: &Coeff) -> Coeff {
        self.mul(&o.inv())
    }

    pub fn pow(&self, mut e: u32) -> Coeff {
        let mut base = self.clone();
        let mut acc = Coeff::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// One square root in the field, if it exists there.
    pub fn sqrt(&self) -> Option<Coeff> {
        if self.is_zero() {
            return Some(Coeff::zero());
        }
        if self.c.is_zero() && self.d.is_zero() {
            // Element of K = Q(s).
            let x = (self.a.clone(), self.b.clone());
            if let Some(r) = k_sqrt(&x) {
                return Some(Coeff { a: r.0, b: r.1, ..Coeff::zero() });
            }
            // Try i * sqrt(-x).
            if let Some(r) = k_sqrt(&(-x.0.clone(), -x.1.clone())) {
                return Some(Coeff { c: r.0, d: r.1, ..Coeff::zero() });
            }
            return None;
        }
        // General element p + q*i: look for r + t*i with r, t in K.
        let p = (self.a.clone(), self.b.clone());
        let qq = (self.c.clone(), self.d.clone());
        let norm = k_add(&k_mul(&p, &p), &k_mul(&qq, &qq));
        let s = k_sqrt(&norm)?;
        for sg in [s.clone(), (-s.0.clone(), -s.1.clone())] {
            let half = (qr(1, 2), Q::zero());
            let r2 = k_mul(&k_add(&p, &sg), &half);
            if let Some(r) = k_sqrt(&r2) {
                if r.0.is_zero() && r.1.is_zero() {
                    continue;
                }
                let t = k_mul(&qq, &k_mul(&k_inv(&r), &half));
                let cand = Coeff { a: r.0, b: r.1, c: t.0, d: t.1 };
                if cand.mul(&cand) == *self {
                    return Some(cand);
                }
            }
        }
        None
    }

    /// One cube root; only rationals are supported (that covers every
    /// expansion the registered families need).
    pub fn cbrt(&self) -> Option<Coeff> {
        let r = self.as_rational()?;
        let rn = rational_nth_root(r, 3)?;
        Some(Coeff::from_rational(rn))
    }

    /// One k-th root in the field, if representable.
    pub fn kth_root(&self, k: u32) -> Option<Coeff> {
        if k == 0 {
            return None;
        }
        if k == 1 {
            return Some(self.clone());
        }
        if self.is_zero() {
            return Some(Coeff::zero());
        }
        if k % 2 == 0 {
            return self.sqrt().and_then(|r| r.kth_root(k / 2));
        }
        if k % 3 == 0 {
            return self.cbrt().and_then(|r| r.kth_root(k / 3));
        }
        // Odd k coprime to 3: rational roots only.
        let r = self.as_rational()?;
        Some(Coeff::from_rational(rational_nth_root(r, k)?))
    }

    /// A primitive k-th root of unity, for k dividing 12.
    pub fn root_of_unity(k: u32) -> Option<Coeff> {
        match k {
            1 => Some(Coeff::one()),
            2 => Some(Coeff::from_int(-1)),
            3 => Some(Coeff { a: qr(-1, 2), b: qr(1, 2), ..Coeff::zero() }),
            4 => Some(Coeff::i()),
            6 => Some(Coeff { a: qr(1, 2), b: qr(1, 2), ..Coeff::zero() }),
            12 => Some(Coeff { c: qr(1, 2), d: qr(-1, 2), ..Coeff::zero() }),
            _ => None,
        }
    }

    /// Complex-number value, for the floating-point oracles in tests.
    pub fn to_complex(&self) -> (f64, f64) {
        let f = |x: &Q| -> f64 {
            let n = x.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
            let d = x.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
            n / d
        };
        let s3 = 3.0_f64.sqrt();
        // a + b*i*sqrt3 + c*i + d*i*i*sqrt3 = (a - d*sqrt3) + (b*sqrt3 + c) i
        (f(&self.a) - f(&self.d) * s3, f(&self.b) * s3 + f(&self.c))
    }
}

// --- arithmetic in the subfield K = Q(s), elements as (a, b) = a + b*s ---

fn k_add(x: &(Q, Q), y: &(Q, Q)) -> (Q, Q) {
    (&x.0 + &y.0, &x.1 + &y.1)
}

fn k_mul(x: &(Q, Q), y: &(Q, Q)) -> (Q, Q) {
    (&x.0 * &y.0 - q(3) * (&x.1 * &y.1), &x.0 * &y.1 + &x.1 * &y.0)
}

fn k_inv(x: &(Q, Q)) -> (Q, Q) {
    let n = &x.0 * &x.0 + q(3) * (&x.1 * &x.1);
    assert!(!n.is_zero());
    (&x.0 / &n, -&x.1 / &n)
}

/// Square root of a + b*s inside Q(s), if it exists.
fn k_sqrt(x: &(Q, Q)) -> Option<(Q, Q)> {
    let (a, b) = x;
    if b.is_zero() {
        if let Some(r) = rational_sqrt(a) {
            return Some((r, Q::zero()));
        }
        // a = -3 y^2?
        let y2 = -a / q(3);
        if let Some(y) = rational_sqrt(&y2) {
            return Some((Q::zero(), y));
        }
        return None;
    }
    // (x + y s)^2 = x^2 - 3y^2 + 2xy s
    let disc = a * a + q(3) * (b * b);
    let t = rational_sqrt(&disc)?;
    for sg in [t.clone(), -t] {
        let x2 = (a + &sg) / q(2);
        if let Some(xr) = rational_sqrt(&x2) {
            if !xr.is_zero() {
                let y = b / (q(2) * &xr);
                return Some((xr, y));
            }
        }
    }
    None
}

/// Exact rational square root, if the argument is a perfect square.
pub fn rational_sqrt(r: &Q) -> Option<Q> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Q::new(n, d))
    } else {
        None
    }
}

/// Exact rational k-th root (k odd allows negative arguments).
pub fn rational_nth_root(r: &Q, k: u32) -> Option<Q> {
    let neg = r.is_negative();
    if neg && k % 2 == 0 {
        return None;
    }
    let abs = r.abs();
    let n = abs.numer().nth_root(k);
    let d = abs.denom().nth_root(k);
    let powi = |x: &BigInt| -> BigInt { num::pow::pow(x.clone(), k as usize) };
    if &powi(&n) == abs.numer() && &powi(&d) == abs.denom() {
        let root = Q::new(n, d);
        Some(if neg { -root } else { root })
    } else {
        None
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        let rat = |x: &Q| -> String {
            if x.denom().is_one() {
                format!("{}", x.numer())
            } else {
                format!("({}/{})", x.numer(), x.denom())
            }
        };
        if !self.a.is_zero() {
            parts.push(rat(&self.a));
        }
        if !self.b.is_zero() {
            parts.push(format!("{}*sqrt(-3)", rat(&self.b)));
        }
        if !self.c.is_zero() {
            parts.push(format!("{}*i", rat(&self.c)));
        }
        if !self.d.is_zero() {
            parts.push(format!("{}*sqrt(-3)*i", rat(&self.d)));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! ops_impl {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl<'a> $trait<&'a Coeff> for &Coeff {
            type Output = Coeff;
            fn $method(self, o: &'a Coeff) -> Coeff {
                Coeff::$inner(self, o)
            }
        }
    };
}

ops_impl!(Add, add, add);
ops_impl!(Sub, sub, sub);
ops_impl!(Mul, mul, mul);
ops_impl!(Div, div, div);

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_relations() {
        let s = Coeff::sqrt_m3();
        let i = Coeff::i();
        assert_eq!(s.mul(&s), Coeff::from_int(-3));
        assert_eq!(i.mul(&i), Coeff::from_int(-1));
        let si = s.mul(&i);
        assert_eq!(si.mul(&si), Coeff::from_int(3));
    }

    #[test]
    fn inverse_round_trip() {
        let x = Coeff {
            a: qr(2, 3),
            b: qr(-1, 5),
            c: qr(7, 2),
            d: qr(1, 1),
        };
        assert!(x.mul(&x.inv()).is_one());
        let y = Coeff { a: qr(1, 2), b: qr(1, 2), ..Coeff::zero() };
        assert!(y.mul(&y.inv()).is_one());
    }

    #[test]
    fn sqrt_cases() {
        // sqrt(4) = 2
        assert_eq!(Coeff::from_int(4).sqrt(), Some(Coeff::from_int(2)));
        // sqrt(-4) = 2i
        let r = Coeff::from_int(-4).sqrt().unwrap();
        assert_eq!(r.mul(&r), Coeff::from_int(-4));
        // sqrt(-3) representable
        let r = Coeff::from_int(-3).sqrt().unwrap();
        assert_eq!(r.mul(&r), Coeff::from_int(-3));
        // sqrt(3) = -sqrt(-3)*i (or its negative)
        let r = Coeff::from_int(3).sqrt().unwrap();
        assert_eq!(r.mul(&r), Coeff::from_int(3));
        // sqrt(2) does not exist here
        assert_eq!(Coeff::from_int(2).sqrt(), None);
        // sqrt of zeta_3 exists (it is zeta_6)
        let z3 = Coeff::root_of_unity(3).unwrap();
        let r = z3.sqrt().unwrap();
        assert_eq!(r.mul(&r), z3);
    }

    #[test]
    fn roots_of_unity() {
        for k in [1u32, 2, 3, 4, 6, 12] {
            let z = Coeff::root_of_unity(k).unwrap();
            assert!(z.pow(k).is_one(), "zeta_{k}^{k} != 1");
            for j in 1..k {
                assert!(!z.pow(j).is_one(), "zeta_{k}^{j} == 1 early");
            }
        }
    }

    #[test]
    fn kth_roots() {
        assert_eq!(Coeff::from_int(-8).cbrt(), Some(Coeff::from_int(-2)));
        assert_eq!(Coeff::from_int(-1).cbrt(), Some(Coeff::from_int(-1)));
        let x = Coeff::from_int(16).kth_root(4).unwrap();
        assert_eq!(x.pow(4), Coeff::from_int(16));
        assert_eq!(Coeff::from_ratio(27, 8).cbrt(), Some(Coeff::from_ratio(3, 2)));
    }
}
