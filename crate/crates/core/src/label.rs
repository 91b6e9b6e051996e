//! The singularity-type taxonomy: ADE labels and the triple/quadruple point
//! families, with their defining equations, aliases, and text formats.

use crate::error::{Error, Result};
use crate::series::coeff::Coeff;
use crate::series::mpoly::MPoly;
use std::fmt;

/// Taxonomy labels. The two bracketed T3 families are keyed on the
/// defining-equation parameters:
/// `T3Even { k, n }` is the germ v((v - u^k)^2 - u^(2k+n+1)) = 0 and prints
/// with the subscript pair (2k+n, 2k); `T3Odd { n }` is v(v^2 - u^n) = 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SingularityLabel {
    /// v^2 - u^(n+1), n >= 0
    A(u32),
    /// u(v^2 - u^(n-2)), n >= 4
    D(u32),
    E6,
    E7,
    E8,
    /// v^3 - u^(3n+beta), n >= 0, beta in {1, 2}
    T3NB { n: u32, beta: u32 },
    /// v((v - u^k)^2 - u^(2k+n+1)), k >= 1, n >= 0
    T3Even { k: u32, n: u32 },
    /// v(v^2 - u^n), n >= 2
    T3Odd { n: u32 },
    /// (v^2 - u^(2n1+1))(u^2 - v^(2n2+1)), n1, n2 >= 1; unordered pair
    T4 { n1: u32, n2: u32 },
}

use SingularityLabel as L;

impl SingularityLabel {
    pub fn check_params(&self) -> Result<()> {
        let ok = match self {
            L::A(_) | L::E6 | L::E7 | L::E8 => true,
            L::D(n) => *n >= 4,
            L::T3NB { beta, .. } => *beta == 1 || *beta == 2,
            L::T3Even { k, .. } => *k >= 1,
            L::T3Odd { n } => *n >= 2,
            L::T4 { n1, n2 } => *n1 >= 1 && *n2 >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::BadParams(format!("{self}")))
        }
    }

    /// Resolve the E aliases to the family carrying the braid-monodromy and
    /// defining-equation data.
    pub fn table_form(&self) -> SingularityLabel {
        match self {
            L::E6 => L::T3Odd { n: 3 },
            L::E7 => L::T3NB { n: 1, beta: 1 },
            L::E8 => L::T3NB { n: 1, beta: 2 },
            other => other.clone(),
        }
    }

    /// Display-canonical tag: alias collisions resolve toward the ADE names.
    pub fn canonical(&self) -> SingularityLabel {
        match self {
            L::T3NB { n: 0, beta: 1 } => L::A(0),
            L::T3NB { n: 0, beta: 2 } => L::A(2),
            L::T3NB { n: 1, beta: 1 } => L::E7,
            L::T3NB { n: 1, beta: 2 } => L::E8,
            L::T3Odd { n: 2 } => L::D(4),
            L::T3Odd { n: 3 } => L::E6,
            L::T3Even { k: 1, n } => L::D(n + 5),
            L::D(5) => L::D(5),
            L::T4 { n1, n2 } => L::T4 { n1: (*n1).min(*n2), n2: (*n1).max(*n2) },
            other => other.clone(),
        }
    }

    /// All labels naming the same singularity type, canonical tag first.
    pub fn aliases(&self) -> Vec<SingularityLabel> {
        let canon = self.canonical();
        let mut out = vec![canon.clone()];
        match canon {
            L::A(0) => out.push(L::T3NB { n: 0, beta: 1 }),
            L::A(2) => out.push(L::T3NB { n: 0, beta: 2 }),
            L::E7 => out.push(L::T3NB { n: 1, beta: 1 }),
            L::E8 => out.push(L::T3NB { n: 1, beta: 2 }),
            L::E6 => out.push(L::T3Odd { n: 3 }),
            L::D(4) => out.push(L::T3Odd { n: 2 }),
            L::D(n) if n >= 5 => out.push(L::T3Even { k: 1, n: n - 5 }),
            _ => {}
        }
        out
    }

    pub fn same_type(&self, other: &SingularityLabel) -> bool {
        self.canonical() == other.canonical()
    }

    /// Defining equation in the given variables (first = u, second = v).
    pub fn defining_poly(&self, vars: [&str; 2]) -> MPoly {
        let u = MPoly::var_x(vars);
        let v = MPoly::var_y(vars);
        let one = Coeff::one();
        let _ = one;
        match self.table_form() {
            L::A(n) => v.pow(2).sub(&u.pow(n + 1)),
            L::D(n) => u.mul(&v.pow(2).sub(&u.pow(n - 2))),
            L::T3NB { n, beta } => v.pow(3).sub(&u.pow(3 * n + beta)),
            L::T3Even { k, n } => {
                let inner = v.sub(&u.pow(k)).pow(2).sub(&u.pow(2 * k + n + 1));
                v.mul(&inner)
            }
            L::T3Odd { n } => v.mul(&v.pow(2).sub(&u.pow(n))),
            L::T4 { n1, n2 } => {
                let f1 = v.pow(2).sub(&u.pow(2 * n1 + 1));
                let f2 = u.pow(2).sub(&v.pow(2 * n2 + 1));
                f1.mul(&f2)
            }
            L::E6 | L::E7 | L::E8 => unreachable!("resolved by table_form"),
        }
    }

    /// The subscript pair (2k+n, 2k) for the even-contact family, plus the
    /// doubled variant (4k+n, 4k) that some statements use; reported both
    /// ways because the two conventions coexist.
    pub fn subscript_pairs(&self) -> Option<((u32, u32), (u32, u32))> {
        match self {
            L::T3Even { k, n } => Some(((2 * k + n, 2 * k), (4 * k + n, 4 * k))),
            _ => None,
        }
    }
}

impl fmt::Display for SingularityLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            L::A(n) => write!(f, "A_{n}"),
            L::D(n) => write!(f, "D_{n}"),
            L::E6 => write!(f, "E_6"),
            L::E7 => write!(f, "E_7"),
            L::E8 => write!(f, "E_8"),
            L::T3NB { n, beta } => write!(f, "T3({n},{beta})"),
            L::T3Even { k, n } => write!(f, "T3[{},{}]", 2 * k + n, 2 * k),
            L::T3Odd { n } => write!(f, "T3[n-1,n:{n}]"),
            L::T4 { n1, n2 } => write!(f, "T4[{},{}]", 2 * n1, 2 * n2),
        }
    }
}

/// Parse a label in the printed formats: "A_7", "D_5", "E_6", "T3(2,1)",
/// "T3[10,8]", "T3[n-1,n:4]", "T4[2,2]".
pub fn parse_label(text: &str) -> Result<SingularityLabel> {
    let s = text.trim();
    let parse_u32 = |x: &str| -> Result<u32> {
        x.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad number '{x}'")))
    };
    if let Some(rest) = s.strip_prefix("A_") {
        return Ok(L::A(parse_u32(rest)?));
    }
    if let Some(rest) = s.strip_prefix("D_") {
        let n = parse_u32(rest)?;
        let l = L::D(n);
        l.check_params()?;
        return Ok(l);
    }
    match s {
        "E_6" => return Ok(L::E6),
        "E_7" => return Ok(L::E7),
        "E_8" => return Ok(L::E8),
        _ => {}
    }
    if let Some(rest) = s.strip_prefix("T3(") {
        let inner = rest.strip_suffix(')').ok_or_else(|| Error::Parse("missing ')'".into()))?;
        let (a, b) = inner.split_once(',').ok_or_else(|| Error::Parse("expected T3(n,beta)".into()))?;
        let l = L::T3NB { n: parse_u32(a)?, beta: parse_u32(b)? };
        l.check_params()?;
        return Ok(l);
    }
    if let Some(rest) = s.strip_prefix("T3[n-1,n:") {
        let inner = rest.strip_suffix(']').ok_or_else(|| Error::Parse("missing ']'".into()))?;
        let l = L::T3Odd { n: parse_u32(inner)? };
        l.check_params()?;
        return Ok(l);
    }
    if let Some(rest) = s.strip_prefix("T3[") {
        let inner = rest.strip_suffix(']').ok_or_else(|| Error::Parse("missing ']'".into()))?;
        let (a, b) = inner.split_once(',').ok_or_else(|| Error::Parse("expected T3[p,q]".into()))?;
        let p = parse_u32(a)?;
        let q = parse_u32(b)?;
        if q == p + 1 {
            let l = L::T3Odd { n: q };
            l.check_params()?;
            return Ok(l);
        }
        if q % 2 == 0 && q >= 2 && p >= q {
            return Ok(L::T3Even { k: q / 2, n: p - q });
        }
        return Err(Error::Parse(format!("subscript pair ({p},{q}) is not in the taxonomy")));
    }
    if let Some(rest) = s.strip_prefix("T4[") {
        let inner = rest.strip_suffix(']').ok_or_else(|| Error::Parse("missing ']'".into()))?;
        let (a, b) = inner.split_once(',').ok_or_else(|| Error::Parse("expected T4[2n1,2n2]".into()))?;
        let (x, y) = (parse_u32(a)?, parse_u32(b)?);
        if x % 2 != 0 || y % 2 != 0 || x == 0 || y == 0 {
            return Err(Error::Parse("T4 subscripts must be positive even numbers".into()));
        }
        return Ok(L::T4 { n1: x / 2, n2: y / 2 });
    }
    Err(Error::Parse(format!("unrecognized label '{s}'")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for l in [
            L::A(7),
            L::D(5),
            L::E6,
            L::E8,
            L::T3NB { n: 2, beta: 1 },
            L::T3Even { k: 4, n: 2 },
            L::T3Odd { n: 4 },
            L::T4 { n1: 1, n2: 1 },
        ] {
            let s = l.to_string();
            assert_eq!(parse_label(&s).unwrap(), l, "{s}");
        }
        assert_eq!(parse_label("T3[10,8]").unwrap(), L::T3Even { k: 4, n: 2 });
        assert_eq!(parse_label("T3[n-1,n:4]").unwrap(), L::T3Odd { n: 4 });
    }

    #[test]
    fn alias_structure() {
        assert_eq!(L::T3NB { n: 1, beta: 1 }.canonical(), L::E7);
        assert_eq!(L::T3NB { n: 1, beta: 2 }.canonical(), L::E8);
        assert_eq!(L::T3Odd { n: 3 }.canonical(), L::E6);
        assert_eq!(L::T3Odd { n: 2 }.canonical(), L::D(4));
        assert_eq!(L::T3Even { k: 1, n: 0 }.canonical(), L::D(5));
        assert_eq!(L::T3Even { k: 1, n: 1 }.canonical(), L::D(6));
        assert!(L::E6.same_type(&L::T3Odd { n: 3 }));
        assert_eq!(L::T4 { n1: 2, n2: 1 }.canonical(), L::T4 { n1: 1, n2: 2 });
    }

    #[test]
    fn subscripts_reported_both_ways() {
        let l = L::T3Even { k: 2, n: 3 };
        assert_eq!(l.subscript_pairs(), Some(((7, 4), (11, 8))));
    }

    #[test]
    fn defining_polys() {
        let p = L::E8.defining_poly(["u", "v"]);
        assert_eq!(p.to_string(), "v^3 - u^5");
        let p = L::T3Even { k: 1, n: 2 }.defining_poly(["u", "v"]);
        // v((v-u)^2 - u^5)
        assert_eq!(p.degree_y(), Some(3));
    }
}
