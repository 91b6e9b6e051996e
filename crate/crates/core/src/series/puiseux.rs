//! Newton-Puiseux expansion of plane curve branches at the origin, branch
//! normalization, and defining polynomials of parametrized branches.
//!
//! A branch is stored as a parametrization: one variable equals t^e, the
//! other is a truncated series in t with exact coefficients. Conjugate
//! expansions (differing by a root of unity in t) are merged into a single
//! branch; the ramification index e records the merge.

use super::coeff::Coeff;
use super::factor::{find_all_roots, polygon_edges};
use super::mpoly::MPoly;
use super::trunc::{TruncSeries, VanishingOrder, EXACT};
use crate::error::{Error, Result};

/// Which variable carries the pure power t^e.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    /// x = t^e, y = series(t)
    XParam,
    /// y = t^e, x = series(t)
    YParam,
}

#[derive(Clone, PartialEq, Eq)]
pub struct PuiseuxBranch {
    pub ram: u32,
    pub series: TruncSeries,
    pub axis: Axis,
}

impl PuiseuxBranch {
    pub fn axis_branch(axis: Axis, cap: u32) -> Self {
        PuiseuxBranch { ram: 1, series: TruncSeries::zero(cap), axis }
    }

    pub fn cap(&self) -> u32 {
        self.series.cap
    }

    /// The pair (x(t), y(t)).
    pub fn param(&self) -> (TruncSeries, TruncSeries) {
        let mono = TruncSeries::monomial(Coeff::one(), self.ram, EXACT);
        match self.axis {
            Axis::XParam => (mono, self.series.clone()),
            Axis::YParam => (self.series.clone(), mono),
        }
    }

    /// Reparametrize t -> c*t.
    pub fn rescale(&self, c: &Coeff) -> PuiseuxBranch {
        assert!(!c.is_zero());
        // x(t) = t^e picks up c^e; renormalize so it stays t^e: this is only
        // a well-formed branch again if we fold c^e into the series instead.
        // We instead return the branch whose param equals (c^e t^e, s(ct)),
        // renormalized: substitute t -> t/c^... Simplest faithful version:
        // scale the series coefficients by c^k and leave the axis power
        // alone; this corresponds to the reparametrization t -> c t followed
        // by the coordinate scaling that restores the axis monomial, which
        // the equisingularity invariant must not see.
        let mut s = TruncSeries::zero(self.series.cap);
        for (e, k) in &self.series.terms {
            s.terms.insert(*e, k.mul(&c.pow(*e)));
        }
        PuiseuxBranch { ram: self.ram, series: s, axis: self.axis }
    }
}

impl std::fmt::Debug for PuiseuxBranch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (a, b) = match self.axis {
            Axis::XParam => ("x", "y"),
            Axis::YParam => ("y", "x"),
        };
        write!(f, "{a}=t^{}, {b}={}", self.ram, self.series)
    }
}

/// Branches at the origin of f(x, y) = 0 with y expanded in fractional
/// powers of x. Preconditions: f(0,0) = 0, x does not divide f. For a
/// square-free f each branch appears once.
pub fn newton_puiseux(f: &MPoly, trunc: u32) -> Result<Vec<PuiseuxBranch>> {
    if f.is_zero() || !f.coeff((0, 0)).is_zero() {
        return Err(Error::NotAtOrigin);
    }
    if f.divisible_by_x() {
        return Err(Error::Parse("input divisible by x; strip vertical components first".into()));
    }
    let mut out = Vec::new();
    let mut g = f.clone();
    if g.divisible_by_y() {
        out.push(PuiseuxBranch::axis_branch(Axis::XParam, trunc));
        g = g.divide_y_power(1);
        while g.divisible_by_y() {
            // non-square-free caller; keep one axis branch
            g = g.divide_y_power(1);
        }
    }
    if g.ord_y_at_x0().map(|d| d == 0).unwrap_or(true) {
        return Ok(out);
    }
    let seeds = expand(&g, trunc, 0)?;
    for (e, seed) in seeds {
        let series = refine(&g, e, seed, trunc)?;
        out.push(PuiseuxBranch { ram: e, series, axis: Axis::XParam });
    }
    Ok(out)
}

/// Structural expansion: returns (e, seed series) per branch, where the seed
/// contains all terms found during the polygon recursion.
fn expand(f: &MPoly, trunc: u32, depth: usize) -> Result<Vec<(u32, TruncSeries)>> {
    if depth > 128 {
        return Err(Error::TruncationTooSmall(trunc));
    }
    let mut out = Vec::new();
    for (q, p, phi) in polygon_edges(f) {
        let roots = find_all_roots(&phi)?;
        for (t0, r) in roots {
            if t0.is_zero() {
                continue;
            }
            let c = t0.kth_root(q).ok_or_else(|| {
                Error::UnsupportedCoefficientField(format!("no {q}-th root of {t0} in the field"))
            })?;
            let f1 = f.np_substitute(q, p, &c);
            let m = f1.min_x_exponent();
            let f1 = f1.divide_x_power(m);
            if r == 1 {
                // simple root: the tail is an integer-exponent series,
                // recovered later by refinement; record the seed term only.
                let seed = TruncSeries::monomial(c.clone(), p, EXACT);
                out.push((q, seed));
            } else {
                for (e1, s1) in expand(&f1, trunc, depth + 1)? {
                    // x = x1^q, y = x1^p (c + y1), with x1 = t^e1
                    let inner = s1.add(&TruncSeries::constant(c.clone(), s1.cap));
                    let series = inner.mul_monomial(&Coeff::one(), p * e1);
                    out.push((q * e1, series));
                }
            }
        }
    }
    Ok(out)
}

/// Newton refinement of a seed against the original polynomial.
///
/// Iterates on exact polynomial approximants; a Newton iterate is correct
/// only to order (residual order) - (order of f_y along the branch), so the
/// loop runs until the exact residual vanishes to order trunc + ord(f_y)
/// before truncating the series at trunc.
fn refine(f: &MPoly, e: u32, seed: TruncSeries, trunc: u32) -> Result<TruncSeries> {
    let x = TruncSeries::monomial(Coeff::one(), e, EXACT);
    let fy = f.partial_y();
    let mut s = seed.clone();
    s.cap = EXACT;
    for _ in 0..256 {
        // exact residual: f and s are polynomials
        let resid = f.eval_series(&x, &s);
        debug_assert_eq!(resid.cap, EXACT);
        let dv = fy.eval_series(&x, &s);
        let nord = match dv.leading() {
            Some((o, _)) => o,
            None => return Err(Error::TruncationTooSmall(trunc)),
        };
        let rord = match resid.ord() {
            VanishingOrder::InfiniteUpToCap(_) => {
                let mut out = s.truncate(trunc);
                out.cap = trunc;
                return Ok(out);
            }
            VanishingOrder::Finite(o) => o,
        };
        if rord >= trunc + nord {
            let mut out = s.truncate(trunc);
            out.cap = trunc;
            return Ok(out);
        }
        if rord < nord {
            return Err(Error::TruncationTooSmall(trunc));
        }
        // Newton step: s -= resid / fy, dividing out the t^nord shift and
        // inverting the remaining unit at working precision.
        let work = trunc + nord + 4;
        let shift_down = |series: &TruncSeries| {
            let mut out = TruncSeries::zero(series.cap.saturating_sub(nord).min(work));
            for (k, c) in &series.terms {
                if *k >= nord && k - nord < out.cap {
                    out.terms.insert(k - nord, c.clone());
                }
            }
            out
        };
        let unit = shift_down(&dv).truncate(work);
        let resid_shifted = shift_down(&resid).truncate(work);
        let delta = resid_shifted.mul(&unit.invert_unit());
        let mut next = s.sub(&delta);
        next = next.truncate(work);
        next.cap = EXACT;
        s = next;
    }
    Err(Error::TruncationTooSmall(trunc))
}

/// Evaluate a polynomial along a branch.
pub fn substitute(f: &MPoly, b: &PuiseuxBranch) -> TruncSeries {
    let (x, y) = b.param();
    f.eval_series(&x, &y)
}

/// Bring a parametrization (u(t), v(t)) to branch normal form: the component
/// of smaller vanishing order becomes t^e exactly. Fails when the needed
/// root of the leading coefficient does not exist in the field.
pub fn normalize_param(u: &TruncSeries, v: &TruncSeries) -> Result<PuiseuxBranch> {
    let uo = u.ord();
    let vo = v.ord();
    let (axis, lead_series, other) = match (uo, vo) {
        (VanishingOrder::InfiniteUpToCap(_), VanishingOrder::InfiniteUpToCap(_)) => {
            return Err(Error::Parse("zero parametrization".into()))
        }
        (VanishingOrder::InfiniteUpToCap(c), VanishingOrder::Finite(_)) => {
            // u identically 0 below cap: the branch is the u-axis
            return normalize_axis(Axis::YParam, v, c);
        }
        (VanishingOrder::Finite(_), VanishingOrder::InfiniteUpToCap(c)) => {
            return normalize_axis(Axis::XParam, u, c);
        }
        (VanishingOrder::Finite(a), VanishingOrder::Finite(b)) => {
            if a <= b {
                (Axis::XParam, u, v)
            } else {
                (Axis::YParam, v, u)
            }
        }
    };
    let (e, lead) = lead_series.leading().map(|(o, c)| (o, c.clone())).unwrap();
    let cap = lead_series.cap.min(other.cap);
    let root = lead
        .inv()
        .kth_root(e)
        .ok_or_else(|| Error::UnsupportedCoefficientField(format!("no {e}-th root of {lead}")))?;
    // lead_series(t) = lead * t^e * (1 + h(t)). Find t = tau*G(tau) with
    // lead_series(t(tau)) = tau^e, i.e. G = root * (1 + h(tau G))^(-1/e).
    let rel_cap = cap.saturating_sub(e).max(1);
    let mut h = TruncSeries::zero(rel_cap);
    for (k, c) in &lead_series.terms {
        if *k > e {
            h.terms.insert(k - e, c.div(&lead));
        }
    }
    let g = if h.is_zero() {
        TruncSeries::constant(root.clone(), rel_cap)
    } else {
        let mut g = TruncSeries::constant(root.clone(), rel_cap);
        for _ in 0..64 {
            // t(tau) = tau*g(tau); compute h(tau*g)
            let t_of_tau = g.mul_monomial(&Coeff::one(), 1);
            let hc = h.compose(&t_of_tau).truncate(rel_cap);
            let one_plus = TruncSeries::constant(Coeff::one(), rel_cap).add(&hc);
            let new_g = one_plus.invert_unit().unit_root(e).scale(&root).truncate(rel_cap);
            if new_g == g {
                break;
            }
            g = new_g;
        }
        g
    };
    let t_of_tau = g.mul_monomial(&Coeff::one(), 1);
    // sanity: lead_series(t(tau)) == tau^e up to cap
    debug_assert!({
        let check = lead_series.compose(&t_of_tau).truncate(cap);
        check.terms.len() == 1 && check.coeff(e).is_one()
    });
    let series = other.compose(&t_of_tau).truncate(cap);
    Ok(PuiseuxBranch { ram: e, series, axis })
}

fn normalize_axis(axis: Axis, lead_series: &TruncSeries, othercap: u32) -> Result<PuiseuxBranch> {
    // The other component vanishes identically (up to its cap): this is a
    // coordinate axis; normalize the parametrizing component to t.
    let (e, _) = lead_series.leading().map(|(o, c)| (o, c.clone())).unwrap();
    let _ = e;
    Ok(PuiseuxBranch { ram: 1, series: TruncSeries::zero(othercap), axis })
}

/// Defining polynomial of a normalized branch: the product over conjugates
/// of (v - s(zeta^j sigma)) with sigma^e = u (axis roles swap for YParam).
/// Returned as coefficients of powers of the non-parametric variable, each a
/// series in the parametric variable.
pub fn defining_poly(b: &PuiseuxBranch) -> Result<Vec<TruncSeries>> {
    let e = b.ram;
    let zeta = Coeff::root_of_unity(e)
        .ok_or_else(|| Error::UnsupportedCoefficientField(format!("no primitive {e}-th root of unity")))?;
    let cap_sigma = b.series.cap;
    // polynomial in V with coefficients series in sigma; index = power of V
    let mut poly: Vec<TruncSeries> = vec![TruncSeries::constant(Coeff::one(), cap_sigma)];
    for j in 0..e {
        let zj = zeta.pow(j);
        // s(zeta^j sigma)
        let mut sj = TruncSeries::zero(cap_sigma);
        for (k, c) in &b.series.terms {
            sj.terms.insert(*k, c.mul(&zj.pow(*k)));
        }
        // multiply poly by (V - sj)
        let mut next: Vec<TruncSeries> = vec![TruncSeries::zero(cap_sigma); poly.len() + 1];
        for (i, coeffs) in poly.iter().enumerate() {
            next[i + 1] = next[i + 1].add(coeffs);
            next[i] = next[i].add(&coeffs.mul(&sj).neg());
        }
        poly = next;
    }
    // exponents must all be multiples of e; compress sigma^e -> u
    let mut out = Vec::with_capacity(poly.len());
    for c in poly {
        for (k, _) in &c.terms {
            if k % e != 0 {
                return Err(Error::TruncationTooSmall(cap_sigma));
            }
        }
        out.push(c.compress(e));
    }
    Ok(out)
}

/// Evaluate the defining polynomial of `of` along the parametrization of
/// `along`; the vanishing order is the intersection multiplicity when both
/// branches are primitive and distinct.
pub fn eval_defining_along(of: &PuiseuxBranch, along: &PuiseuxBranch) -> Result<TruncSeries> {
    let coeffs = defining_poly(of)?;
    let (x, y) = along.param();
    // variable roles of `of`: parametric variable is x for XParam, y for YParam
    let (par, other) = match of.axis {
        Axis::XParam => (&x, &y),
        Axis::YParam => (&y, &x),
    };
    let mut acc = TruncSeries::zero(par.cap.min(other.cap));
    for c in coeffs.iter().rev() {
        acc = acc.mul(other);
        // c is a series in the parametric variable: compose with par
        let cval = if c.is_zero() {
            TruncSeries::zero(c.cap.saturating_mul(match par.ord() {
                VanishingOrder::Finite(o) => o.max(1),
                VanishingOrder::InfiniteUpToCap(cc) => cc,
            }))
        } else if c.terms.keys().all(|k| *k == 0) {
            TruncSeries::constant(c.coeff(0), acc.cap.max(1))
        } else {
            c.compose(par)
        };
        acc = acc.add(&cval);
    }
    Ok(acc)
}

/// Are two parametrized curves equal up to the reparametrization t -> c t?
pub fn params_equal_up_to_scaling(a: &(TruncSeries, TruncSeries), b: &(TruncSeries, TruncSeries)) -> bool {
    let (au, av) = a;
    let (bu, bv) = b;
    let sup = |s: &TruncSeries| -> Vec<u32> { s.terms.keys().cloned().collect() };
    if sup(au) != sup(bu) || sup(av) != sup(bv) {
        return false;
    }
    // collect ratios b_k / a_k = c^k
    let mut pairs: Vec<(u32, Coeff)> = Vec::new();
    for (x, y) in [(au, bu), (av, bv)] {
        for (k, c) in &x.terms {
            pairs.push((*k, y.coeff(*k).div(c)));
        }
    }
    if pairs.is_empty() {
        return true;
    }
    // find c^g for g = gcd of exponents via Bezout, then check consistency
    let mut g: i64 = 0;
    for (k, _) in &pairs {
        g = num::integer::gcd(g, *k as i64);
    }
    if g == 0 {
        return pairs.iter().all(|(_, r)| r.is_one());
    }
    // Bezout combination: find c^g as product of ratios^coeffs
    let mut cg = Coeff::one();
    let mut cur = 0i64;
    for (k, r) in &pairs {
        // incremental extended gcd
        let (d, s, t) = ext_gcd(cur, *k as i64);
        // new combination: cg^s * r^t gives c^d
        cg = pow_signed(&cg, s).mul(&pow_signed(r, t));
        cur = d;
        if cur == g {
            break;
        }
    }
    if cur != g {
        return false;
    }
    for (k, r) in &pairs {
        let expo = (*k as i64) / g;
        if pow_signed(&cg, expo) != *r {
            return false;
        }
    }
    true
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if a == 0 {
        return (b, 0, 1);
    }
    let (d, x, y) = ext_gcd(b % a, a);
    (d, y - (b / a) * x, x)
}

fn pow_signed(c: &Coeff, e: i64) -> Coeff {
    if e >= 0 {
        c.pow(e as u32)
    } else {
        c.inv().pow((-e) as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::mpoly::parse_mpoly;

    fn branches(s: &str, n: u32) -> Vec<PuiseuxBranch> {
        let f = parse_mpoly(s, ["x", "y"]).unwrap();
        newton_puiseux(&f, n).unwrap()
    }

    #[test]
    fn cusp() {
        let bs = branches("y^2 - x^3", 24);
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].ram, 2);
        assert_eq!(bs[0].series.coeff(3), Coeff::one());
        // residual vanishes
        let f = parse_mpoly("y^2 - x^3", ["x", "y"]).unwrap();
        let r = substitute(&f, &bs[0]);
        assert!(r.ord().finite().is_none());
    }

    #[test]
    fn tangent_pair() {
        // (y - x)^2 - x^5: one branch e=2, y = t^2 +- t^5
        let bs = branches("(y - x)^2 - x^5", 24);
        assert_eq!(bs.len(), 1);
        let b = &bs[0];
        assert_eq!(b.ram, 2);
        assert_eq!(b.series.coeff(2), Coeff::one());
        assert!(!b.series.coeff(5).is_zero());
    }

    #[test]
    fn smooth_pair_splits() {
        // y^2 - x^2(1+x): two smooth branches y = +-x sqrt(1+x)
        let bs = branches("y^2 - x^2 - x^3", 20);
        assert_eq!(bs.len(), 2);
        assert!(bs.iter().all(|b| b.ram == 1));
    }

    #[test]
    fn axis_and_cusp() {
        // y(y^2 - x^3)
        let bs = branches("y^3 - x^3*y", 24);
        assert_eq!(bs.len(), 2);
        let rams: Vec<u32> = bs.iter().map(|b| b.ram).collect();
        assert!(rams.contains(&1) && rams.contains(&2));
    }

    #[test]
    fn triple_contact_example() {
        // w^2 - z^{2k+1} + 3 z^{k+n+1} w: branch e=2 with the correction
        // term -(3/2) t^{2(k+n+1)}. At k=n=1 that is t^6; at k=1, n=2, t^8.
        let f = parse_mpoly("y^2 - x^3 + 3*x^3*y", ["x", "y"]).unwrap();
        let bs = newton_puiseux(&f, 24).unwrap();
        assert_eq!(bs.len(), 1);
        let b = &bs[0];
        assert_eq!(b.ram, 2);
        assert_eq!(b.series.coeff(3), Coeff::one());
        assert_eq!(b.series.coeff(6), Coeff::from_ratio(-3, 2));

        let f = parse_mpoly("y^2 - x^3 + 3*x^4*y", ["x", "y"]).unwrap();
        let bs = newton_puiseux(&f, 24).unwrap();
        assert_eq!(bs[0].series.coeff(8), Coeff::from_ratio(-3, 2));
    }

    #[test]
    fn residual_orders() {
        for s in ["y^2 - x^5", "y^3 - x^4", "y^4 - x^2", "(y - x^2)*(y + x^2) - x^7"] {
            let f = parse_mpoly(s, ["x", "y"]).unwrap();
            for b in newton_puiseux(&f, 32).unwrap() {
                let r = substitute(&f, &b);
                match r.ord() {
                    VanishingOrder::Finite(o) => assert!(o >= 32, "{s}: ord {o}"),
                    VanishingOrder::InfiniteUpToCap(_) => {}
                }
            }
        }
    }

    #[test]
    fn normalize_and_defining() {
        // param (3t^2, 2t^3): normalized v-series has char exponent 3
        let u = TruncSeries::monomial(Coeff::from_int(3), 2, 40);
        let v = TruncSeries::monomial(Coeff::from_int(2), 3, 40);
        let b = normalize_param(&u, &v).unwrap();
        assert_eq!(b.ram, 2);
        assert_eq!(b.axis, Axis::XParam);
        let lead = b.series.leading().unwrap();
        assert_eq!(lead.0, 3);
        // defining polynomial: v^2 - (lead)^2 u^3: evaluating along the
        // original parametrization vanishes
        let db = defining_poly(&b).unwrap();
        assert_eq!(db.len(), 3);
    }

    #[test]
    fn intersection_of_cusp_and_axis() {
        // cusp (t^2, t^3) against v = 0
        let f = parse_mpoly("y^2 - x^3", ["x", "y"]).unwrap();
        let cusp = &newton_puiseux(&f, 30).unwrap()[0];
        let axis = PuiseuxBranch::axis_branch(Axis::XParam, 30);
        let s = eval_defining_along(&axis, cusp).unwrap();
        assert_eq!(s.ord().finite(), Some(3));
        let s = eval_defining_along(cusp, &axis).unwrap();
        assert_eq!(s.ord().finite(), Some(3));
    }

    #[test]
    fn scaling_equality() {
        // (3t^2, 2t^3) vs (3/4 t^2, -1/4 t^3): equal via t -> -t/2
        let a = (
            TruncSeries::monomial(Coeff::from_int(3), 2, 30),
            TruncSeries::monomial(Coeff::from_int(2), 3, 30),
        );
        let b = (
            TruncSeries::monomial(Coeff::from_ratio(3, 4), 2, 30),
            TruncSeries::monomial(Coeff::from_ratio(-1, 4), 3, 30),
        );
        assert!(params_equal_up_to_scaling(&a, &b));
        let c = (
            TruncSeries::monomial(Coeff::from_int(3), 2, 30),
            TruncSeries::monomial(Coeff::from_int(5), 3, 30),
        );
        assert!(!params_equal_up_to_scaling(&a, &c));
    }
}
