//! Exact bivariate polynomial and truncated Puiseux-series arithmetic.

pub mod coeff;
pub mod factor;
pub mod mpoly;
pub mod puiseux;
pub mod trunc;

pub use coeff::Coeff;
pub use mpoly::{parse_mpoly, MPoly};
pub use puiseux::{newton_puiseux, substitute, Axis, PuiseuxBranch};
pub use trunc::{TruncSeries, VanishingOrder, EXACT};

use crate::error::Result;

/// Jacobian determinant det [[df1/dx, df1/dy], [df2/dx, df2/dy]].
pub fn jacobian(f1: &MPoly, f2: &MPoly) -> MPoly {
    assert!(f1.vars_match(f2), "jacobian requires matching variables");
    f1.partial_x().mul(&f2.partial_y()).sub(&f1.partial_y().mul(&f2.partial_x()))
}

/// Hessian determinant f_xx * f_yy - f_xy^2.
pub fn hessian(f: &MPoly) -> MPoly {
    let fxx = f.partial_x().partial_x();
    let fyy = f.partial_y().partial_y();
    let fxy = f.partial_x().partial_y();
    fxx.mul(&fyy).sub(&fxy.mul(&fxy))
}

/// Least exponent with a nonzero coefficient, or the infinite-up-to-cap flag.
pub fn vanishing_order(s: &TruncSeries) -> VanishingOrder {
    s.ord()
}

/// Sylvester resultant eliminating the second variable.
pub fn resultant(f: &MPoly, g: &MPoly) -> Result<MPoly> {
    factor::resultant(f, g)
}

/// Square-free factorization (with respect to the second variable) refined
/// by the linear/quadratic splitting the pipeline needs.
pub fn squarefree_factor(f: &MPoly) -> Result<Vec<(MPoly, u32)>> {
    factor::squarefree_factor(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobian_examples() {
        let zw = ["z", "w"];
        let f1 = parse_mpoly("z^2", zw).unwrap();
        let f2 = parse_mpoly("w^2", zw).unwrap();
        assert_eq!(jacobian(&f1, &f2).to_string(), "4*z*w");

        let f1 = parse_mpoly("z", zw).unwrap();
        let f2 = parse_mpoly("w^4 - z*w^3", zw).unwrap();
        // n = 1: 4w^3 - 3zw^2
        assert_eq!(jacobian(&f1, &f2).to_string(), "4*w^3 - 3*z*w^2");

        // antisymmetry and jacobian(f, f) = 0
        let g = parse_mpoly("z^3 + w^2 - 2*z*w", zw).unwrap();
        assert!(jacobian(&g, &g).is_zero());
        assert_eq!(jacobian(&f2, &f1), jacobian(&f1, &f2).neg());
    }

    #[test]
    fn jacobian_of_triple_product_family() {
        // u = z, v = w^4 - (16/3) z^m w^3 + 6 z^{2m} w^2 at m = 1:
        // dv/dw = 4 w (w - z)(w - 3z)
        let zw = ["z", "w"];
        let f1 = parse_mpoly("z", zw).unwrap();
        let f2 = parse_mpoly("w^4 - (16/3)*z*w^3 + 6*z^2*w^2", zw).unwrap();
        let j = jacobian(&f1, &f2);
        let expected = parse_mpoly("4*w*(w - z)*(w - 3*z)", zw).unwrap();
        assert_eq!(j, expected);
    }

    #[test]
    fn hessian_examples() {
        let zw = ["z", "w"];
        let f = parse_mpoly("z*w", zw).unwrap();
        assert_eq!(hessian(&f).to_string(), "-1");
    }
}
