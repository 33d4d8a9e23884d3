//! Exact univariate polynomials over the rationals.
//!
//! Besides ring arithmetic this module provides the real-root machinery the
//! function model relies on: square-free reduction, Descartes-based isolation
//! of roots in an open interval, and bisection refinement with exact sign
//! evaluation. Roots found at rational bisection points are returned exactly;
//! the rest are refined to a width of 1e-14.

use crate::error::{Error, Result};
use crate::rational::{rat, rat_i, Rat};
use num_traits::{Signed, ToPrimitive, Zero};

/// Polynomial with rational coefficients in ascending powers.
/// The zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, k: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat_i(i as i64 + 1))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Poly {
        let mut out = vec![Rat::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + 1] = c / rat_i(i as i64 + 1);
        }
        Poly::new(out)
    }

    /// Definite integral over [lo, hi].
    pub fn integral(&self, lo: &Rat, hi: &Rat) -> Rat {
        let f = self.antiderivative();
        f.eval(hi) - f.eval(lo)
    }

    /// p(c0 + c1 * t), expanded.
    pub fn compose_affine(&self, c0: &Rat, c1: &Rat) -> Poly {
        let lin = Poly::new(vec![c0.clone(), c1.clone()]);
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// Euclidean division; panics on zero divisor.
    fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let mut rem = self.coeffs.clone();
        let dn = divisor.coeffs.len();
        if rem.len() < dn {
            return (Poly::zero(), Poly::new(rem));
        }
        let lead = divisor.coeffs.last().unwrap().clone();
        let mut quot = vec![Rat::zero(); rem.len() - dn + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dn - 1] / &lead;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    let v = &rem[k + j] - &(d * &c);
                    rem[k + j] = v;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dn - 1);
        (Poly::new(quot), Poly::new(rem))
    }

    fn monic(&self) -> Poly {
        match self.coeffs.last() {
            Some(lead) if !lead.is_zero() => {
                let inv = Rat::from_integer(1.into()) / lead;
                self.scale(&inv)
            }
            _ => Poly::zero(),
        }
    }

    fn gcd(a: &Poly, b: &Poly) -> Poly {
        let mut a = a.monic();
        let mut b = b.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    /// Square-free part: self / gcd(self, self').
    pub fn squarefree(&self) -> Poly {
        if self.degree() < 2 {
            return self.clone();
        }
        let g = Poly::gcd(self, &self.derivative());
        if g.degree() == 0 {
            return self.clone();
        }
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero());
        q
    }

    /// Divides out an exact rational root; the remainder must vanish.
    fn deflate(&self, root: &Rat) -> Poly {
        let divisor = Poly::new(vec![-root.clone(), rat_i(1)]);
        let (q, r) = self.div_rem(&divisor);
        debug_assert!(r.is_zero(), "deflating a non-root");
        q
    }

    fn sign_at(&self, t: &Rat) -> i32 {
        let v = self.eval(t);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }
}

/// Number of sign variations among the nonzero coefficients.
fn sign_variations(p: &Poly) -> usize {
    let mut count = 0;
    let mut last = 0i32;
    for c in &p.coeffs {
        if c.is_zero() {
            continue;
        }
        let s = if c.is_positive() { 1 } else { -1 };
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Descartes bound on the number of roots of `p` in the open interval
/// (lo, hi): exact when it returns 0 or 1 and `p` is square-free.
fn descartes_count(p: &Poly, lo: &Rat, hi: &Rat) -> usize {
    // map (lo, hi) onto (0, 1), then (0, 1) onto (0, inf)
    let span = hi - lo;
    let on_unit = p.compose_affine(lo, &span);
    let reversed = Poly::new(on_unit.coeffs.iter().rev().cloned().collect());
    let shifted = reversed.compose_affine(&rat_i(1), &rat_i(1));
    sign_variations(&shifted)
}

enum RootLoc {
    Exact(Rat),
    Bracket(Rat, Rat),
}

fn isolate_rec(p: &Poly, lo: Rat, hi: Rat, depth: u32, out: &mut Vec<RootLoc>) -> Result<()> {
    if depth > 160 {
        return Err(Error::Internal("root isolation exceeded depth limit".into()));
    }
    match descartes_count(p, &lo, &hi) {
        0 => Ok(()),
        1 => {
            out.push(RootLoc::Bracket(lo, hi));
            Ok(())
        }
        _ => {
            let mid = (&lo + &hi) / rat_i(2);
            let mut q = p.clone();
            if q.sign_at(&mid) == 0 {
                out.push(RootLoc::Exact(mid.clone()));
                q = q.deflate(&mid);
            }
            isolate_rec(&q, lo, mid.clone(), depth + 1, out)?;
            isolate_rec(&q, mid, hi, depth + 1, out)
        }
    }
}

fn bisection_width() -> Rat {
    rat(1, 100_000_000_000_000) // 1e-14
}

/// Refines an isolating bracket of a simple root by sign bisection.
fn refine_bracket(p: &Poly, mut lo: Rat, mut hi: Rat, width: &Rat) -> Rat {
    let s_lo = p.sign_at(&lo);
    if s_lo == 0 {
        return lo;
    }
    if p.sign_at(&hi) == 0 {
        return hi;
    }
    debug_assert_ne!(s_lo, p.sign_at(&hi), "bracket does not straddle a root");
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / rat_i(2);
        let s = p.sign_at(&mid);
        if s == 0 {
            return mid;
        }
        if s == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (&lo + &hi) / rat_i(2)
}

/// Distinct real roots of `p` strictly inside (lo, hi), sorted ascending.
/// Roots hit exactly during subdivision come back as exact rationals; the
/// rest are bisection midpoints accurate to 1e-14.
pub fn roots_in_open(p: &Poly, lo: &Rat, hi: &Rat) -> Result<Vec<Rat>> {
    if p.is_zero() || p.degree() == 0 || lo >= hi {
        return Ok(Vec::new());
    }
    let mut sf = p.squarefree();
    while sf.degree() >= 1 && sf.sign_at(lo) == 0 {
        sf = sf.deflate(lo);
    }
    while sf.degree() >= 1 && sf.sign_at(hi) == 0 {
        sf = sf.deflate(hi);
    }
    if sf.degree() < 1 {
        return Ok(Vec::new());
    }
    let mut locs = Vec::new();
    isolate_rec(&sf, lo.clone(), hi.clone(), 0, &mut locs)?;
    let width = bisection_width();
    let mut roots: Vec<Rat> = locs
        .into_iter()
        .map(|loc| match loc {
            RootLoc::Exact(r) => r,
            RootLoc::Bracket(a, b) => refine_bracket(&sf, a, b, &width),
        })
        .collect();
    roots.sort();
    roots.dedup();
    Ok(roots)
}

/// Points splitting [lo, hi] into intervals on which `p` is monotone:
/// the roots of p' inside the open interval.
pub fn critical_points(p: &Poly, lo: &Rat, hi: &Rat) -> Result<Vec<Rat>> {
    roots_in_open(&p.derivative(), lo, hi)
}

/// Exact range (min, max) of `p` over the closed interval [lo, hi].
/// Extremal values at irrational critical points carry an error that is
/// quadratic in the 1e-14 bisection width, i.e. far below f64 resolution.
pub fn range_on(p: &Poly, lo: &Rat, hi: &Rat) -> Result<(Rat, Rat)> {
    let mut min = p.eval(lo);
    let mut max = min.clone();
    let mut consider = |v: Rat| {
        if v < min {
            min = v;
        } else if v > max {
            max = v;
        }
    };
    consider(p.eval(hi));
    for r in critical_points(p, lo, hi)? {
        consider(p.eval(&r));
    }
    Ok((min, max))
}

/// Total variation of `p` over [lo, hi]: the sum of |increments| over the
/// maximal monotone runs. Splitting at spurious (even-multiplicity) critical
/// points does not change the sum.
pub fn variation_on(p: &Poly, lo: &Rat, hi: &Rat) -> Result<Rat> {
    if lo >= hi {
        return Ok(Rat::zero());
    }
    let mut total = Rat::zero();
    let mut prev = p.eval(lo);
    for r in critical_points(p, lo, hi)? {
        let v = p.eval(&r);
        total += (&v - &prev).abs();
        prev = v;
    }
    total += (p.eval(hi) - prev).abs();
    Ok(total)
}

/// Root of a monotone polynomial bracketing a sign change on [lo, hi],
/// by bisection to 1e-14. Returns the rational midpoint (or the exact root
/// when bisection lands on it).
pub fn monotone_root(p: &Poly, lo: &Rat, hi: &Rat) -> Rat {
    refine_bracket(p, lo.clone(), hi.clone(), &bisection_width())
}
