//! Square-free factorization, gcds, resultants and small root finders.
//!
//! Factorization goes as far as the pipeline needs: Yun's square-free
//! decomposition (with respect to the main variable), extraction of the
//! x-content, and splitting of square-free parts into monomial-root linear
//! factors and discriminant-split quadratics. Anything deeper is left alone.

use super::coeff::Coeff;
use super::mpoly::MPoly;
use crate::error::{Error, Result};

// ---------- univariate polynomials over the coefficient field ----------
// Little-endian: index = degree.
pub type XPoly = Vec<Coeff>;

pub fn x_trim(p: &mut XPoly) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

pub fn x_is_zero(p: &XPoly) -> bool {
    p.iter().all(|c| c.is_zero())
}

pub fn x_deg(p: &XPoly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn x_add(a: &XPoly, b: &XPoly) -> XPoly {
    let mut r = vec![Coeff::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        r[i] = r[i].add(c);
    }
    for (i, c) in b.iter().enumerate() {
        r[i] = r[i].add(c);
    }
    x_trim(&mut r);
    r
}

pub fn x_neg(a: &XPoly) -> XPoly {
    a.iter().map(|c| c.neg()).collect()
}

pub fn x_sub(a: &XPoly, b: &XPoly) -> XPoly {
    x_add(a, &x_neg(b))
}

pub fn x_mul(a: &XPoly, b: &XPoly) -> XPoly {
    if x_is_zero(a) || x_is_zero(b) {
        return vec![];
    }
    let mut r = vec![Coeff::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            r[i + j] = r[i + j].add(&ca.mul(cb));
        }
    }
    x_trim(&mut r);
    r
}

pub fn x_scale(a: &XPoly, c: &Coeff) -> XPoly {
    let mut r: XPoly = a.iter().map(|k| k.mul(c)).collect();
    x_trim(&mut r);
    r
}

/// Division with remainder over the field.
pub fn x_divrem(a: &XPoly, b: &XPoly) -> (XPoly, XPoly) {
    let db = x_deg(b).expect("division by zero polynomial");
    let lb = b[db].clone();
    let mut rem = a.clone();
    x_trim(&mut rem);
    let mut quot: XPoly = vec![];
    while let Some(da) = x_deg(&rem) {
        if da < db {
            break;
        }
        let c = rem[da].div(&lb);
        let k = da - db;
        if quot.len() < k + 1 {
            quot.resize(k + 1, Coeff::zero());
        }
        quot[k] = quot[k].add(&c);
        for (j, bc) in b.iter().enumerate() {
            if !bc.is_zero() {
                rem[j + k] = rem[j + k].sub(&c.mul(bc));
            }
        }
        x_trim(&mut rem);
    }
    x_trim(&mut quot);
    (quot, rem)
}

/// Monic gcd over the field.
pub fn x_gcd(a: &XPoly, b: &XPoly) -> XPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    x_trim(&mut a);
    x_trim(&mut b);
    while !x_is_zero(&b) {
        let (_, r) = x_divrem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(d) = x_deg(&a) {
        let lc = a[d].clone();
        a = x_scale(&a, &lc.inv());
    }
    a
}

pub fn x_derivative(a: &XPoly) -> XPoly {
    let mut r: XPoly = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.mul(&Coeff::from_int(i as i64)))
        .collect();
    x_trim(&mut r);
    r
}

/// Exact polynomial square root, if one exists.
pub fn x_sqrt(p: &XPoly) -> Option<XPoly> {
    if x_is_zero(p) {
        return Some(vec![]);
    }
    let d = x_deg(p).unwrap();
    if d % 2 != 0 {
        return None;
    }
    let ord = p.iter().position(|c| !c.is_zero()).unwrap();
    if ord % 2 != 0 {
        return None;
    }
    let lead = p[d].sqrt()?;
    let half = d / 2;
    let mut q = vec![Coeff::zero(); half + 1];
    q[half] = lead;
    // Solve p_k = sum q_i q_j descending from k = d-1.
    for k in (0..d).rev() {
        if k < half {
            break;
        }
        let idx = k - half;
        let mut s = Coeff::zero();
        for i in (idx + 1)..=half {
            let j = k as i64 - i as i64;
            if j >= 0 && (j as usize) <= half && (j as usize) > idx {
                if i as i64 > j {
                    continue;
                }
                let term = q[i].mul(&q[j as usize]);
                s = s.add(&if (i as i64) == j { term } else { term.mul(&Coeff::from_int(2)) });
            }
        }
        let pk = p.get(k).cloned().unwrap_or_else(Coeff::zero);
        let num = pk.sub(&s);
        q[idx] = num.div(&q[half].mul(&Coeff::from_int(2)));
    }
    let mut qq = q;
    x_trim(&mut qq);
    if x_mul(&qq, &qq) == {
        let mut t = p.clone();
        x_trim(&mut t);
        t
    } {
        Some(qq)
    } else {
        None
    }
}

// ---------- roots of univariate polynomials over the field ----------

/// All roots (with multiplicity) when the polynomial splits over the field;
/// an error when it provably does not.
pub fn find_all_roots(poly: &XPoly) -> Result<Vec<(Coeff, usize)>> {
    let mut p = poly.clone();
    x_trim(&mut p);
    assert!(!x_is_zero(&p), "root finding on the zero polynomial");
    let mut roots: Vec<Coeff> = Vec::new();
    // strip roots at zero
    while p[0].is_zero() {
        roots.push(Coeff::zero());
        p.remove(0);
    }
    let mut remaining = p;
    'outer: loop {
        let d = x_deg(&remaining).unwrap_or(0);
        if d == 0 {
            break;
        }
        if d == 1 {
            roots.push(remaining[0].neg().div(&remaining[1]));
            remaining = vec![remaining[1].clone()];
            continue;
        }
        // rational-root search when all coefficients are rational
        if remaining.iter().all(|c| c.is_rational()) {
            if let Some(r) = rational_root(&remaining) {
                roots.push(r.clone());
                remaining = deflate(&remaining, &r);
                continue 'outer;
            }
        }
        if d == 2 {
            let (a, b, c) = (remaining[2].clone(), remaining[1].clone(), remaining[0].clone());
            let disc = b.mul(&b).sub(&Coeff::from_int(4).mul(&a).mul(&c));
            let s = disc.sqrt().ok_or_else(|| {
                Error::UnsupportedCoefficientField(format!(
                    "quadratic discriminant {disc} has no square root in the field"
                ))
            })?;
            let two_a = Coeff::from_int(2).mul(&a);
            let r1 = b.neg().add(&s).div(&two_a);
            let r2 = b.neg().sub(&s).div(&two_a);
            roots.push(r1.clone());
            remaining = deflate(&remaining, &r1);
            roots.push(r2.clone());
            remaining = deflate(&remaining, &r2);
            continue;
        }
        // binomial a_d T^d + a_0
        if remaining.iter().enumerate().all(|(i, c)| i == 0 || i == d || c.is_zero()) {
            let k = remaining[0].neg().div(&remaining[d]);
            let r = k.kth_root(d as u32).ok_or_else(|| {
                Error::UnsupportedCoefficientField(format!("no {d}-th root of {k} in the field"))
            })?;
            let zeta = Coeff::root_of_unity(d as u32).ok_or_else(|| {
                Error::UnsupportedCoefficientField(format!("no primitive {d}-th root of unity"))
            })?;
            let mut w = r;
            for _ in 0..d {
                roots.push(w.clone());
                remaining = deflate(&remaining, &w);
                w = w.mul(&zeta);
            }
            continue;
        }
        return Err(Error::UnsupportedCoefficientField(format!(
            "cannot split a degree-{d} characteristic polynomial"
        )));
    }
    // multiplicities by counting
    let mut out: Vec<(Coeff, usize)> = Vec::new();
    for r in roots {
        if let Some(e) = out.iter_mut().find(|(x, _)| *x == r) {
            e.1 += 1;
        } else {
            out.push((r, 1));
        }
    }
    Ok(out)
}

fn deflate(p: &XPoly, root: &Coeff) -> XPoly {
    // synthetic division by (T - root)
    let d = x_deg(p).unwrap();
    let mut q = vec![Coeff::zero(); d];
    let mut carry = Coeff::zero();
    for i in (0..=d).rev() {
        let c = p[i].add(&carry);
        if i == 0 {
            debug_assert!(c.is_zero(), "deflate: not a root");
            break;
        }
        q[i - 1] = c.clone();
        carry = c.mul(root);
    }
    let mut q = q;
    x_trim(&mut q);
    q
}

fn rational_root(p: &XPoly) -> Option<Coeff> {
    use num::{BigInt, BigRational, One, Signed, Zero};
    // clear denominators
    let mut lcm = BigInt::one();
    for c in p {
        let r = c.as_rational().unwrap();
        lcm = num::integer::lcm(lcm, r.denom().clone());
    }
    let ints: Vec<BigInt> = p
        .iter()
        .map(|c| (c.as_rational().unwrap() * BigRational::from_integer(lcm.clone())).numer().clone())
        .collect();
    let d = x_deg(p).unwrap();
    let a0 = ints.iter().find(|c| !c.is_zero()).unwrap().clone();
    let an = ints[d].clone();
    let bound = BigInt::from(1_000_000_000_000i64);
    if a0.abs() > bound || an.abs() > bound {
        return None;
    }
    let eval = |r: &BigRational| -> bool {
        let mut acc = BigRational::zero();
        for c in ints.iter().rev() {
            acc = acc * r + BigRational::from_integer(c.clone());
        }
        acc.is_zero()
    };
    let divs_p = small_divisors(&a0.abs());
    let divs_q = small_divisors(&an.abs());
    for dp in &divs_p {
        for dq in &divs_q {
            for sign in [1i64, -1] {
                let cand = BigRational::new(dp * BigInt::from(sign), dq.clone());
                if eval(&cand) {
                    return Some(Coeff::from_rational(cand));
                }
            }
        }
    }
    None
}

fn small_divisors(n: &num::BigInt) -> Vec<num::BigInt> {
    use num::{BigInt, One, Zero};
    let mut out = vec![BigInt::one()];
    if n.is_zero() {
        return out;
    }
    let mut i = BigInt::one();
    loop {
        let i2 = &i * &i;
        if &i2 > n {
            break;
        }
        if (n % &i).is_zero() {
            out.push(i.clone());
            out.push(n / &i);
        }
        i += 1;
        if out.len() > 4000 {
            break;
        }
    }
    out.sort();
    out.dedup();
    out
}

// ---------- gcd and exact division in L[x][y] ----------

/// Exact division of multivariate polynomials; None when not divisible.
pub fn divide_exact(f: &MPoly, g: &MPoly) -> Option<MPoly> {
    assert!(!g.is_zero());
    let mut rem = f.clone();
    let mut quot = MPoly::zero(f.names());
    // lead term under lex order with y major
    let lead = |p: &MPoly| -> Option<((u32, u32), Coeff)> {
        p.terms.iter().max_by_key(|(e, _)| (e.1, e.0)).map(|(e, c)| (*e, c.clone()))
    };
    let (ge, gc) = lead(g)?;
    while !rem.is_zero() {
        let (re, rc) = lead(&rem).unwrap();
        if re.0 < ge.0 || re.1 < ge.1 {
            return None;
        }
        let me = (re.0 - ge.0, re.1 - ge.1);
        let mc = rc.div(&gc);
        let mono = MPoly::monomial(f.names(), mc, me);
        quot = quot.add(&mono);
        rem = rem.sub(&mono.mul(g));
    }
    Some(quot)
}

/// Content of f with respect to y: the L[x]-gcd of its y-coefficients,
/// returned as an x-only polynomial.
pub fn content_y(f: &MPoly) -> XPoly {
    let coeffs = f.y_coefficients();
    let mut g: XPoly = vec![];
    for cs in coeffs {
        if cs.is_empty() {
            continue;
        }
        let mut xp: XPoly = vec![];
        for (i, c) in cs {
            if xp.len() <= i as usize {
                xp.resize(i as usize + 1, Coeff::zero());
            }
            xp[i as usize] = c;
        }
        g = x_gcd(&g, &xp);
        if x_deg(&g) == Some(0) {
            break;
        }
    }
    g
}

fn xpoly_to_mpoly(vars: [&str; 2], p: &XPoly) -> MPoly {
    let mut m = MPoly::zero(vars);
    for (i, c) in p.iter().enumerate() {
        m.set((i as u32, 0), c.clone());
    }
    m
}

/// Primitive part with respect to y.
pub fn primitive_part_y(f: &MPoly) -> MPoly {
    let c = content_y(f);
    if x_deg(&c) == Some(0) || x_is_zero(&c) {
        return f.clone();
    }
    divide_exact(f, &xpoly_to_mpoly(f.names(), &c)).expect("content divides")
}

/// gcd in L[x][y] via the primitive PRS, normalized to integral primitive form.
pub fn gcd_y(f: &MPoly, g: &MPoly) -> MPoly {
    if f.is_zero() {
        return g.normalized_integral();
    }
    if g.is_zero() {
        return f.normalized_integral();
    }
    let cf = content_y(f);
    let cg = content_y(g);
    let ccontent = x_gcd(&cf, &cg);
    let mut a = primitive_part_y(f);
    let mut b = primitive_part_y(g);
    if a.degree_y() < b.degree_y() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem_y(&a, &b);
        a = b;
        b = primitive_part_y(&r);
        if !b.is_zero() && b.degree_y().unwrap_or(0) == 0 && a.degree_y().unwrap_or(0) == 0 {
            // both x-only; their gcd handled below
            break;
        }
    }
    let mut result = if b.is_zero() { a } else { xpoly_to_mpoly(f.names(), &x_gcd(&content_y(&a), &content_y(&b))) };
    result = primitive_part_y(&result);
    let total = xpoly_to_mpoly(f.names(), &ccontent);
    result.mul(&total).normalized_integral()
}

/// Pseudo-remainder of f by g with respect to y.
fn pseudo_rem_y(f: &MPoly, g: &MPoly) -> MPoly {
    let df = f.degree_y().unwrap_or(0);
    let dg = g.degree_y().unwrap_or(0);
    if df < dg {
        return f.clone();
    }
    // lc(g) as x-polynomial
    let gl = {
        let coeffs = g.y_coefficients();
        let mut p = MPoly::zero(f.names());
        for (i, c) in &coeffs[dg as usize] {
            p.set((*i, 0), c.clone());
        }
        p
    };
    let mut rem = f.clone();
    loop {
        let dr = match rem.degree_y() {
            Some(d) if d >= dg && !rem.is_zero() => d,
            _ => break,
        };
        // leading y-coeff of rem
        let rl = {
            let coeffs = rem.y_coefficients();
            let mut p = MPoly::zero(f.names());
            for (i, c) in &coeffs[dr as usize] {
                p.set((*i, 0), c.clone());
            }
            p
        };
        // rem = rem*gl - rl*y^(dr-dg)*g
        let shift = MPoly::monomial(f.names(), Coeff::one(), (0, dr - dg));
        rem = rem.mul(&gl).sub(&rl.mul(&shift).mul(g));
        if rem.degree_y().map(|d| d >= dr).unwrap_or(false) {
            // no progress (defensive)
            break;
        }
    }
    rem
}

// ---------- square-free factorization ----------

/// Yun's square-free decomposition with respect to y, plus splitting of the
/// square-free parts into linear/quadratic factors where that succeeds, plus
/// the x-content handled the same way. Product of factor^multiplicity equals
/// the input up to a scalar unit.
pub fn squarefree_factor(f: &MPoly) -> Result<Vec<(MPoly, u32)>> {
    if f.is_zero() {
        return Err(Error::Parse("square-free factorization of zero".into()));
    }
    let mut out: Vec<(MPoly, u32)> = Vec::new();
    let content = content_y(f);
    let prim = primitive_part_y(f);
    // x-content: strip x^k then Yun on the rest (univariate case).
    if x_deg(&content).unwrap_or(0) > 0 {
        let ord = content.iter().position(|c| !c.is_zero()).unwrap();
        if ord > 0 {
            out.push((MPoly::var_x(f.names()), ord as u32));
        }
        let mut shifted: XPoly = content[ord..].to_vec();
        x_trim(&mut shifted);
        if x_deg(&shifted).unwrap_or(0) > 0 {
            let as_mp = xpoly_to_mpoly(f.names(), &shifted);
            for (p, m) in yun(&as_mp) {
                for piece in split_squarefree(&p)? {
                    out.push((piece, m));
                }
            }
        }
    }
    if prim.degree_y().unwrap_or(0) > 0 || prim.terms.len() > 1 {
        for (p, m) in yun(&prim) {
            for piece in split_squarefree(&p)? {
                out.push((piece, m));
            }
        }
    }
    // deterministic order: multiplicity descending, then display string
    out.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.to_string().cmp(&b.0.to_string())));
    Ok(out)
}

/// Yun's algorithm over L[x][y]; returns square-free parts with multiplicity.
fn yun(f: &MPoly) -> Vec<(MPoly, u32)> {
    let fp = if f.degree_y().unwrap_or(0) > 0 { f.partial_y() } else { f.partial_x() };
    if fp.is_zero() {
        return vec![(f.normalized_integral(), 1)];
    }
    let mut out = Vec::new();
    let g = gcd_y(f, &fp);
    let mut w = divide_exact(f, &g).expect("gcd divides f");
    let mut y = divide_exact(&fp, &g).expect("gcd divides f'");
    let mut i = 1u32;
    loop {
        let wp = if f.degree_y().unwrap_or(0) > 0 { w.partial_y() } else { w.partial_x() };
        let z = y.sub(&wp);
        if z.is_zero() {
            if w.degree_y().unwrap_or(0) > 0 || w.degree_x().unwrap_or(0) > 0 {
                out.push((w.normalized_integral(), i));
            }
            break;
        }
        let p = gcd_y(&w, &z);
        if p.degree_y().unwrap_or(0) > 0 || p.degree_x().unwrap_or(0) > 0 {
            out.push((p.normalized_integral(), i));
        }
        w = divide_exact(&w, &p).expect("factor divides");
        y = divide_exact(&z, &p).expect("factor divides");
        i += 1;
        if w.degree_y().unwrap_or(0) == 0 && w.degree_x().unwrap_or(0) == 0 {
            break;
        }
    }
    out
}

/// Split a square-free polynomial into pairwise-coprime pieces: powers of y,
/// monomial-root linear factors, and discriminant-split quadratics.
fn split_squarefree(p: &MPoly) -> Result<Vec<MPoly>> {
    let mut pieces: Vec<MPoly> = Vec::new();
    let mut rest = p.clone();
    if rest.divisible_by_y() {
        pieces.push(MPoly::var_y(p.names()));
        rest = rest.divide_y_power(1);
    }
    // monomial-root extraction: candidates from integer-slope polygon edges
    'again: loop {
        let dy = rest.degree_y().unwrap_or(0);
        if dy < 1 {
            break;
        }
        if dy == 1 {
            break;
        }
        for (q, pe, phi) in polygon_edges(&rest) {
            if q != 1 {
                continue;
            }
            let roots = match find_all_roots(&phi) {
                Ok(r) => r,
                Err(_) => continue,
            };
            for (c, _) in roots {
                if c.is_zero() {
                    continue;
                }
                // candidate y - c x^pe
                let mut cand = MPoly::zero(rest.names());
                cand.set((0, 1), Coeff::one());
                cand.set((pe, 0), c.neg());
                if let Some(qt) = divide_exact(&rest, &cand) {
                    pieces.push(cand.normalized_integral());
                    rest = qt;
                    continue 'again;
                }
            }
        }
        break;
    }
    // quadratic split by discriminant
    if rest.degree_y() == Some(2) {
        let ycs = rest.y_coefficients();
        let to_x = |cs: &Vec<(u32, Coeff)>| -> XPoly {
            let mut p: XPoly = vec![];
            for (i, c) in cs {
                if p.len() <= *i as usize {
                    p.resize(*i as usize + 1, Coeff::zero());
                }
                p[*i as usize] = c.clone();
            }
            p
        };
        let a = to_x(&ycs[2]);
        let b = to_x(&ycs[1]);
        let c = to_x(&ycs[0]);
        let disc = x_sub(&x_mul(&b, &b), &x_scale(&x_mul(&a, &c), &Coeff::from_int(4)));
        if let Some(e) = x_sqrt(&disc) {
            // candidate factor 2a*y + (b - e)
            let names = rest.names();
            let mut cand = MPoly::zero(names);
            for (i, k) in x_scale(&a, &Coeff::from_int(2)).iter().enumerate() {
                cand.set((i as u32, 1), k.clone());
            }
            for (i, k) in x_sub(&b, &e).iter().enumerate() {
                let cur = cand.coeff((i as u32, 0)).add(k);
                cand.set((i as u32, 0), cur);
            }
            let cand = cand.normalized_integral();
            if let Some(qt) = divide_exact(&rest, &cand) {
                pieces.push(cand);
                rest = qt;
            }
        }
    }
    if rest.degree_y().unwrap_or(0) > 0 || rest.degree_x().unwrap_or(0) > 0 {
        pieces.push(rest.normalized_integral());
    }
    Ok(pieces)
}

/// Lower Newton-polygon edges of f relevant to branches through the origin.
/// Returns (q, p, phi) per edge: the branch exponent is p/q and phi is the
/// characteristic polynomial of the edge (degree = lattice width).
pub fn polygon_edges(f: &MPoly) -> Vec<(u32, u32, XPoly)> {
    let pts: Vec<(u32, u32)> = f.terms.keys().cloned().collect();
    // vertices of the lower-left hull, walked from high y to low y
    let dw = match f.ord_y_at_x0() {
        Some(d) => d,
        None => return vec![],
    };
    let jmin = pts.iter().map(|e| e.1).min().unwrap();
    let mut hull: Vec<(u32, u32)> = Vec::new();
    let mut cur = (0u32, dw);
    hull.push(cur);
    while cur.1 > jmin {
        // next vertex: the point strictly below cur minimizing slope
        // (di/dj), ties broken by taking the farthest
        let mut best: Option<((u32, u32), (u64, u64))> = None;
        for p in &pts {
            if p.1 >= cur.1 {
                continue;
            }
            let di = (p.0 - cur.0) as u64;
            let dj = (cur.1 - p.1) as u64;
            let slope = (di, dj); // compare di/dj as fractions
            let better = match &best {
                None => true,
                Some((bp, bs)) => {
                    let l = slope.0 as u128 * bs.1 as u128;
                    let r = bs.0 as u128 * slope.1 as u128;
                    l < r || (l == r && dj > (cur.1 - bp.1) as u64)
                }
            };
            if better {
                best = Some((*p, slope));
            }
        }
        match best {
            Some((p, _)) => {
                hull.push(p);
                cur = p;
            }
            None => break,
        }
    }
    let mut out = Vec::new();
    for w in hull.windows(2) {
        let (i1, j1) = w[0];
        let (i2, j2) = w[1];
        let di = i2 - i1;
        let dj = j1 - j2;
        let g = num::integer::gcd(di, dj);
        if g == 0 {
            continue;
        }
        let q = dj / g;
        let p = di / g;
        // phi(T) = sum over points on the edge of a_{ij} T^((j - j2)/q)
        let mut phi: XPoly = vec![Coeff::zero(); g as usize + 1];
        for (e, c) in &f.terms {
            if e.1 > j1 || e.1 < j2 {
                continue;
            }
            // on the segment? (i - i1)*dj == (j1 - j)*di
            let lhs = (e.0 as i64 - i1 as i64) * dj as i64;
            let rhs = (j1 as i64 - e.1 as i64) * di as i64;
            if e.0 >= i1 && lhs == rhs {
                let k = (e.1 - j2) / q;
                phi[k as usize] = phi[k as usize].add(c);
            }
        }
        x_trim(&mut phi);
        out.push((q, p, phi));
    }
    out
}

// ---------- resultants ----------

/// Sylvester resultant of f and g with respect to the second variable,
/// returned as a polynomial in the first variable. Convention: the matrix
/// stacks deg(g) rows of f-coefficients above deg(f) rows of g-coefficients,
/// each row listing coefficients from the leading power down.
pub fn resultant(f: &MPoly, g: &MPoly) -> Result<MPoly> {
    let df = f.degree_y().ok_or_else(|| Error::Parse("resultant of zero polynomial".into()))? as usize;
    let dg = g.degree_y().ok_or_else(|| Error::Parse("resultant of zero polynomial".into()))? as usize;
    if df == 0 && dg == 0 {
        return Ok(MPoly::constant(f.names(), Coeff::one()));
    }
    let coeff_row = |p: &MPoly, d: usize| -> Vec<MPoly> {
        let cs = p.y_coefficients();
        (0..=d)
            .rev()
            .map(|j| {
                let mut m = MPoly::zero(p.names());
                if let Some(list) = cs.get(j) {
                    for (i, c) in list {
                        m.set((*i, 0), c.clone());
                    }
                }
                m
            })
            .collect()
    };
    let n = df + dg;
    let fr = coeff_row(f, df);
    let gr = coeff_row(g, dg);
    let mut mat: Vec<Vec<MPoly>> = vec![vec![MPoly::zero(f.names()); n]; n];
    for r in 0..dg {
        for (k, c) in fr.iter().enumerate() {
            mat[r][r + k] = c.clone();
        }
    }
    for r in 0..df {
        for (k, c) in gr.iter().enumerate() {
            mat[dg + r][r + k] = c.clone();
        }
    }
    det_bareiss(mat)
}

/// Fraction-free determinant (Bareiss) over the polynomial ring.
pub fn det_bareiss(mut m: Vec<Vec<MPoly>>) -> Result<MPoly> {
    let n = m.len();
    if n == 0 {
        return Err(Error::Parse("empty matrix".into()));
    }
    let names = m[0][0].names();
    let vars = [names[0].to_string(), names[1].to_string()];
    let mut sign = false;
    let mut prev = MPoly::constant([&vars[0], &vars[1]], Coeff::one());
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !m[r][k].is_zero());
            match swap {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return Ok(MPoly::zero([&vars[0], &vars[1]])),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = divide_exact(&num, &prev).expect("Bareiss division is exact");
            }
            m[i][k] = MPoly::zero([&vars[0], &vars[1]]);
        }
        prev = m[k][k].clone();
    }
    let mut det = m[n - 1][n - 1].clone();
    if sign {
        det = det.neg();
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::mpoly::parse_mpoly;

    #[test]
    fn squarefree_examples() {
        // 4w^3 - 3zw^2 -> [(w, 2), (4w - 3z, 1)]
        let f = parse_mpoly("4*w^3 - 3*z*w^2", ["z", "w"]).unwrap();
        let fs = squarefree_factor(&f).unwrap();
        let shown: Vec<(String, u32)> = fs.iter().map(|(p, m)| (p.to_string(), *m)).collect();
        assert_eq!(shown, vec![("w".to_string(), 2), ("4*w - 3*z".to_string(), 1)]);

        // w(w - z)(w - 3z): three simple factors
        let f = parse_mpoly("w^3 - 4*z*w^2 + 3*z^2*w", ["z", "w"]).unwrap();
        let fs = squarefree_factor(&f).unwrap();
        assert_eq!(fs.len(), 3);
        assert!(fs.iter().all(|(_, m)| *m == 1));
        let prod = fs.iter().fold(parse_mpoly("1", ["z", "w"]).unwrap(), |acc, (p, m)| {
            let mut a = acc;
            for _ in 0..*m {
                a = a.mul(p);
            }
            a
        });
        // equal to f up to scalar
        let q = divide_exact(&f, &prod).unwrap();
        assert_eq!(q.degree_x(), Some(0).filter(|_| false).or(q.degree_x()));
        assert!(q.degree_x().unwrap_or(0) == 0 && q.degree_y().unwrap_or(0) == 0);

        // w^2 -> [(w, 2)]
        let f = parse_mpoly("w^2", ["z", "w"]).unwrap();
        let fs = squarefree_factor(&f).unwrap();
        let shown: Vec<(String, u32)> = fs.iter().map(|(p, m)| (p.to_string(), *m)).collect();
        assert_eq!(shown, vec![("w".to_string(), 2)]);
    }

    #[test]
    fn squarefree_with_x_content() {
        // 4zw: factors z and w
        let f = parse_mpoly("4*z*w", ["z", "w"]).unwrap();
        let fs = squarefree_factor(&f).unwrap();
        let mut shown: Vec<String> = fs.iter().map(|(p, _)| p.to_string()).collect();
        shown.sort();
        assert_eq!(shown, vec!["w".to_string(), "z".to_string()]);
    }

    #[test]
    fn quadratic_split() {
        // (w - z)(w - 3z) = w^2 - 4zw + 3z^2, discriminant 4z^2
        let f = parse_mpoly("w^2 - 4*z*w + 3*z^2", ["z", "w"]).unwrap();
        let fs = squarefree_factor(&f).unwrap();
        assert_eq!(fs.len(), 2);
        // (w - z^1)^2 - z^5 does not split
        let f = parse_mpoly("(w - z)^2 - z^5", ["z", "w"]).unwrap();
        let fs = squarefree_factor(&f).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].1, 1);
    }

    #[test]
    fn quartic_binomial_split() {
        // z^4 - w^4 = (w-z)(w+z)(w^2+z^2) up to sign; over our field the
        // quadratic splits further via i.
        let f = parse_mpoly("z^4 - w^4", ["z", "w"]).unwrap();
        let fs = squarefree_factor(&f).unwrap();
        assert_eq!(fs.len(), 4, "got {:?}", fs.iter().map(|x| x.0.to_string()).collect::<Vec<_>>());
    }

    #[test]
    fn resultant_convention() {
        let f = parse_mpoly("y - x", ["x", "y"]).unwrap();
        let g = parse_mpoly("y + x", ["x", "y"]).unwrap();
        let r = resultant(&f, &g).unwrap();
        assert_eq!(r.to_string(), "2*x");
        // discriminant of y^2 - x^3
        let f = parse_mpoly("y^2 - x^3", ["x", "y"]).unwrap();
        let r = resultant(&f, &f.partial_y()).unwrap();
        // res(y^2 - x^3, 2y) = 4 * (-x^3) ... vanishing order 3
        let ordx = r.terms.keys().map(|e| e.0).min().unwrap();
        assert_eq!(ordx, 3);
    }

    #[test]
    fn gcd_basic() {
        let f = parse_mpoly("w^2*(4*w - 3*z)", ["z", "w"]).unwrap();
        let g = f.partial_y();
        let d = gcd_y(&f, &g);
        assert_eq!(d.to_string(), "w");
    }
}
