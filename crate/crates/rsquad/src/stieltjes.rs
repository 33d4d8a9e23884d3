//! Riemann-Stieltjes integrals over the function model.
//!
//! `rs_integral_exact` evaluates the integral of f*g du in closed form:
//! polynomial integration of f*g*u' on each piece plus the jump
//! contributions f(t0) g(t0) (u(t0+) - u(t0-)) at the discontinuities of u,
//! one-sided at the cut points. `rs_integral_refine` is an independent
//! float oracle built from refining midpoint-tagged sums; the two routes are
//! cross-checked in the test suite and never share code.

use crate::error::{Error, Result};
use crate::funcmodel::{PiecewiseFunc, Side};
use crate::rational::{rat_from_f64, rat_to_f64, Rat};
use num_traits::{Signed, Zero};

/// Value of a Riemann-Stieltjes integral with its provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct RsIntegralResult {
    pub value: Rat,
    pub exact: bool,
    /// Zero when exact; the last observed refinement difference otherwise.
    pub error_radius: Rat,
}

pub(crate) fn check_same_domain(fs: &[&PiecewiseFunc]) -> Result<()> {
    for w in fs.windows(2) {
        if w[0].domain() != w[1].domain() {
            return Err(Error::Domain("functions live on different domains".into()));
        }
    }
    Ok(())
}

fn check_subinterval(f: &PiecewiseFunc, c: &Rat, d: &Rat) -> Result<()> {
    if c < f.lo() || d > f.hi() {
        return Err(Error::Domain("[c, d] is not inside the domain".into()));
    }
    if c > d {
        return Err(Error::Domain("inverted integration interval".into()));
    }
    Ok(())
}

/// Product value f(t) * g(t) on a given side.
fn product_eval(f: &PiecewiseFunc, g: &PiecewiseFunc, t: &Rat, side: Side) -> Result<Rat> {
    Ok(f.eval(t, side)? * g.eval(t, side)?)
}

/// Existence: wherever the integrator jumps inside [c, d], the integrand
/// f*g must be continuous (one-sidedly at the cut points).
fn check_existence(
    f: &PiecewiseFunc,
    g: &PiecewiseFunc,
    u: &PiecewiseFunc,
    c: &Rat,
    d: &Rat,
) -> Result<()> {
    for j in u.discontinuities() {
        if &j.at < c || &j.at > d {
            continue;
        }
        let at = product_eval(f, g, &j.at, Side::At)?;
        let left_ok = &j.at == c || product_eval(f, g, &j.at, Side::Left)? == at;
        let right_ok = &j.at == d || product_eval(f, g, &j.at, Side::Right)? == at;
        if !(left_ok && right_ok) {
            return Err(Error::SharedDiscontinuity { at: rat_to_f64(&j.at) });
        }
    }
    Ok(())
}

/// Merged breakpoints of several functions restricted to [c, d], with the
/// cut points included.
fn merged_breakpoints(fs: &[&PiecewiseFunc], c: &Rat, d: &Rat) -> Vec<Rat> {
    let mut pts: Vec<Rat> = vec![c.clone(), d.clone()];
    for f in fs {
        pts.extend(f.breakpoints().into_iter().filter(|t| t > c && t < d));
    }
    pts.sort();
    pts.dedup();
    pts
}

/// Exact value of the integral of f*g du over [c, d].
pub(crate) fn rs_exact_value(
    f: &PiecewiseFunc,
    g: &PiecewiseFunc,
    u: &PiecewiseFunc,
    c: &Rat,
    d: &Rat,
) -> Result<Rat> {
    check_same_domain(&[f, g, u])?;
    check_subinterval(f, c, d)?;
    if c == d {
        return Ok(Rat::zero());
    }
    check_existence(f, g, u, c, d)?;
    let mut total = Rat::zero();
    let pts = merged_breakpoints(&[f, g, u], c, d);
    for w in pts.windows(2) {
        let (s, e) = (&w[0], &w[1]);
        let integrand = f
            .poly_on(s, e)
            .mul(g.poly_on(s, e))
            .mul(&u.poly_on(s, e).derivative());
        total += integrand.integral(s, e);
    }
    for j in u.discontinuities() {
        if &j.at < c || &j.at > d {
            continue;
        }
        let weight = product_eval(f, g, &j.at, Side::At)?;
        let jump = if &j.at == c {
            &j.right - &j.value
        } else if &j.at == d {
            &j.value - &j.left
        } else {
            &j.right - &j.left
        };
        total += weight * jump;
    }
    Ok(total)
}

/// Exact Riemann-Stieltjes integral of f*g du over [c, d].
pub fn rs_integral_exact(
    f: &PiecewiseFunc,
    g: &PiecewiseFunc,
    u: &PiecewiseFunc,
    c: &Rat,
    d: &Rat,
) -> Result<RsIntegralResult> {
    Ok(RsIntegralResult {
        value: rs_exact_value(f, g, u, c, d)?,
        exact: true,
        error_radius: Rat::zero(),
    })
}

pub(crate) const MAX_DOUBLINGS: u32 = 24;

/// Refining midpoint-tagged Riemann-Stieltjes sums over dyadic partitions of
/// the base segments. Doubles until two successive estimates differ by less
/// than `tol`; returns (value, last difference).
pub(crate) fn refine_sum(
    integrand_at: &dyn Fn(f64) -> f64,
    integrator_at: &dyn Fn(f64) -> f64,
    base_points: &[f64],
    tol: f64,
) -> Result<(f64, f64)> {
    let mut prev: Option<f64> = None;
    for level in 0..=MAX_DOUBLINGS {
        let cells = 1u64 << level;
        let mut sum = 0.0;
        for w in base_points.windows(2) {
            let (s, e) = (w[0], w[1]);
            let h = (e - s) / cells as f64;
            let mut u_left = integrator_at(s);
            for i in 0..cells {
                let right = if i + 1 == cells { e } else { s + (i + 1) as f64 * h };
                let u_right = integrator_at(right);
                let tag = s + (i as f64 + 0.5) * h;
                sum += integrand_at(tag) * (u_right - u_left);
                u_left = u_right;
            }
        }
        if let Some(p) = prev {
            let diff = (sum - p).abs();
            if diff < tol {
                return Ok((sum, diff));
            }
        }
        prev = Some(sum);
    }
    Err(Error::NoConvergence(MAX_DOUBLINGS))
}

/// Refining-sum oracle for the integral of f*g du over [c, d]. Partitions
/// always include the breakpoints of f, g and u; tags sit at cell midpoints
/// so jumps are never sampled directly.
pub fn rs_integral_refine(
    f: &PiecewiseFunc,
    g: &PiecewiseFunc,
    u: &PiecewiseFunc,
    c: &Rat,
    d: &Rat,
    tol: f64,
) -> Result<RsIntegralResult> {
    check_same_domain(&[f, g, u])?;
    check_subinterval(f, c, d)?;
    if tol <= 0.0 {
        return Err(Error::InvalidParams("tolerance must be positive".into()));
    }
    if c == d {
        return Ok(RsIntegralResult { value: Rat::zero(), exact: false, error_radius: Rat::zero() });
    }
    check_existence(f, g, u, c, d)?;
    let base: Vec<f64> = {
        let mut pts: Vec<f64> = merged_breakpoints(&[f, g, u], c, d)
            .iter()
            .map(rat_to_f64)
            .collect();
        pts.dedup();
        pts
    };
    let fv = f.to_f64();
    let gv = g.to_f64();
    let uv = u.to_f64();
    let integrand = |t: f64| fv.eval(t, Side::At) * gv.eval(t, Side::At);
    let integrator = |t: f64| uv.eval(t, Side::At);
    let (value, diff) = refine_sum(&integrand, &integrator, &base, tol)?;
    Ok(RsIntegralResult {
        value: rat_from_f64(value)?,
        exact: false,
        error_radius: rat_from_f64(diff)?,
    })
}

/// Exact supremum of |g| over [c, d], accounting for one-sided limits and
/// override values.
pub fn sup_abs(g: &PiecewiseFunc, c: &Rat, d: &Rat) -> Result<Rat> {
    check_subinterval(g, c, d)?;
    let (mn, mx) = g.range(c, d)?;
    Ok(if mn.clone().abs() > mx.clone().abs() { mn.abs() } else { mx.abs() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcmodel::parse_funcspec;
    use crate::poly::Poly;
    use crate::rational::{rat, rat_i};

    fn one() -> PiecewiseFunc {
        PiecewiseFunc::constant(rat(0, 1), rat(1, 1), rat_i(1))
    }

    fn ident() -> PiecewiseFunc {
        PiecewiseFunc::identity(rat(0, 1), rat(1, 1))
    }

    #[test]
    fn exact_against_hand_values() {
        // f = t^2, u = t^3: integral of 3 t^4 = 3/5
        let f = PiecewiseFunc::from_poly(rat(0, 1), rat(1, 1), Poly::new(vec![rat_i(0), rat_i(0), rat_i(1)]));
        let u = PiecewiseFunc::from_poly(rat(0, 1), rat(1, 1), Poly::new(vec![rat_i(0), rat_i(0), rat_i(0), rat_i(1)]));
        let r = rs_integral_exact(&f, &one(), &u, &rat(0, 1), &rat(1, 1)).unwrap();
        assert!(r.exact);
        assert_eq!(r.value, rat(3, 5));
    }

    #[test]
    fn spike_integrand_contributes_nothing() {
        let f = PiecewiseFunc::spike(rat(0, 1), rat(1, 1), rat(1, 2), rat(1, 2)).unwrap();
        let r = rs_integral_exact(&f, &one(), &ident(), &rat(0, 1), &rat(1, 1)).unwrap();
        assert_eq!(r.value, rat(0, 1));
    }

    #[test]
    fn step_integrator_samples_the_integrand() {
        // u jumps by 1 at b: integral = f(1) * 1 = 0 for f(t) = t - 1
        let f = PiecewiseFunc::from_poly(rat(0, 1), rat(1, 1), Poly::new(vec![rat_i(-1), rat_i(1)]));
        let u = PiecewiseFunc::step(rat(0, 1), rat(1, 1), rat(1, 1)).unwrap();
        let r = rs_integral_exact(&f, &one(), &u, &rat(0, 1), &rat(1, 1)).unwrap();
        assert_eq!(r.value, rat(0, 1));
        // unit step at an interior point picks up f there exactly
        let t0 = rat(3, 8);
        let u2 = PiecewiseFunc::step(rat(0, 1), rat(1, 1), t0.clone()).unwrap();
        let r2 = rs_integral_exact(&f, &one(), &u2, &rat(0, 1), &rat(1, 1)).unwrap();
        assert_eq!(r2.value, f.value(&t0).unwrap());
    }

    #[test]
    fn shared_discontinuity_is_rejected() {
        let f = PiecewiseFunc::step(rat(0, 1), rat(1, 1), rat(1, 2)).unwrap();
        let u = PiecewiseFunc::step(rat(0, 1), rat(1, 1), rat(1, 2)).unwrap();
        assert!(matches!(
            rs_integral_exact(&f, &one(), &u, &rat(0, 1), &rat(1, 1)),
            Err(Error::SharedDiscontinuity { .. })
        ));
    }

    #[test]
    fn refine_matches_exact() {
        let f = PiecewiseFunc::from_poly(rat(0, 1), rat(1, 1), Poly::new(vec![rat_i(0), rat_i(0), rat_i(1)]));
        let u = PiecewiseFunc::from_poly(rat(0, 1), rat(1, 1), Poly::new(vec![rat_i(0), rat_i(0), rat_i(0), rat_i(1)]));
        let r = rs_integral_refine(&f, &one(), &u, &rat(0, 1), &rat(1, 1), 1e-9).unwrap();
        assert!(!r.exact);
        assert!((rat_to_f64(&r.value) - 0.6).abs() < 1e-7);

        let flat = rs_integral_refine(&one(), &one(), &ident(), &rat(0, 1), &rat(1, 1), 1e-9).unwrap();
        assert!((rat_to_f64(&flat.value) - 1.0).abs() < 1e-9);

        let r3 = rs_integral_refine(&ident(), &ident(), &ident(), &rat(0, 1), &rat(1, 1), 1e-9).unwrap();
        assert!((rat_to_f64(&r3.value) - 1.0 / 3.0).abs() < 1e-7);
    }

    #[test]
    fn refine_handles_jumps_in_u() {
        // a jump in the integrator degrades the refining rate to first order,
        // so the oracle is queried at a matching tolerance
        let f = PiecewiseFunc::from_poly(rat(0, 1), rat(1, 1), Poly::new(vec![rat_i(1), rat_i(2)]));
        let u = PiecewiseFunc::step(rat(0, 1), rat(1, 1), rat(1, 3)).unwrap();
        let exact = rs_exact_value(&f, &one(), &u, &rat(0, 1), &rat(1, 1)).unwrap();
        assert_eq!(exact, f.value(&rat(1, 3)).unwrap());
        let r = rs_integral_refine(&f, &one(), &u, &rat(0, 1), &rat(1, 1), 1e-6).unwrap();
        assert!((rat_to_f64(&r.value) - rat_to_f64(&exact)).abs() < 1e-5);
    }

    #[test]
    fn interval_additivity_and_linearity() {
        let f = parse_funcspec(
            r#"{"domain":[0,1],"pieces":[{"from":0,"to":"1/2","poly":[0,1]},{"from":"1/2","to":1,"poly":["1/2",0,1]}]}"#,
        )
        .unwrap();
        let g = PiecewiseFunc::from_poly(rat(0, 1), rat(1, 1), Poly::new(vec![rat_i(1), rat_i(1)]));
        let u = parse_funcspec(
            r#"{"domain":[0,1],"pieces":[{"from":0,"to":"2/3","poly":[0,0,1]},{"from":"2/3","to":1,"poly":["1/9",0,0,1]}]}"#,
        )
        .unwrap();
        let whole = rs_exact_value(&f, &g, &u, &rat(0, 1), &rat(1, 1)).unwrap();
        for e in [rat(1, 4), rat(1, 2), rat(2, 3), rat(9, 10)] {
            let a = rs_exact_value(&f, &g, &u, &rat(0, 1), &e).unwrap();
            let b = rs_exact_value(&f, &g, &u, &e, &rat(1, 1)).unwrap();
            assert_eq!(a + b, whole);
        }
        // additive in f
        let f2 = PiecewiseFunc::from_poly(rat(0, 1), rat(1, 1), Poly::new(vec![rat(3, 7), rat_i(-2)]));
        let sum_f = rs_exact_value(&f, &g, &u, &rat(0, 1), &rat(1, 1)).unwrap()
            + rs_exact_value(&f2, &g, &u, &rat(0, 1), &rat(1, 1)).unwrap();
        let f_plus = parse_funcspec(
            r#"{"domain":[0,1],"pieces":[{"from":0,"to":"1/2","poly":["3/7",-1]},{"from":"1/2","to":1,"poly":["13/14",-2,1]}]}"#,
        )
        .unwrap();
        let combined = rs_exact_value(&f_plus, &g, &u, &rat(0, 1), &rat(1, 1)).unwrap();
        assert_eq!(combined, sum_f);
    }

    #[test]
    fn integration_by_parts() {
        let f = PiecewiseFunc::from_poly(rat(0, 1), rat(1, 1), Poly::new(vec![rat_i(1), rat_i(1), rat_i(1)]));
        let u = parse_funcspec(
            r#"{"domain":[0,1],"pieces":[{"from":0,"to":"1/2","poly":[0,1]},{"from":"1/2","to":1,"poly":[1,1]}]}"#,
        )
        .unwrap();
        let one = one();
        let lhs = rs_exact_value(&f, &one, &u, &rat(0, 1), &rat(1, 1)).unwrap()
            + rs_exact_value(&u, &one, &f, &rat(0, 1), &rat(1, 1)).unwrap();
        let rhs = f.value(&rat(1, 1)).unwrap() * u.value(&rat(1, 1)).unwrap()
            - f.value(&rat(0, 1)).unwrap() * u.value(&rat(0, 1)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn sup_abs_examples() {
        assert_eq!(sup_abs(&one(), &rat(1, 4), &rat(3, 4)).unwrap(), rat_i(1));
        let hump = PiecewiseFunc::from_poly(rat(0, 1), rat(1, 1), Poly::new(vec![rat_i(0), rat_i(1), rat_i(-1)]));
        assert_eq!(sup_abs(&hump, &rat(0, 1), &rat(1, 1)).unwrap(), rat(1, 4));
        let slope = PiecewiseFunc::from_poly(rat(0, 1), rat(1, 1), Poly::new(vec![rat_i(1), rat_i(-2)]));
        assert_eq!(sup_abs(&slope, &rat(0, 1), &rat(1, 1)).unwrap(), rat_i(1));
    }
}
