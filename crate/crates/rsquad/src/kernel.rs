//! The three-branch kernel K(t; x) whose integral against df equals the
//! quadrature error.
//!
//! With Phi(t) = integral of g du from a to t, the kernel is Phi shifted by a
//! per-branch constant:
//!
//! - on [a, x]:          K = Phi(t) - alpha Phi(x)
//! - on (x, a+b-x]:      K = Phi(t) - (1-alpha) Phi(m) - alpha Phi(x)
//! - on (a+b-x, b]:      K = Phi(t) - (1-alpha) Phi(b) - alpha Phi(x)
//!
//! so it is reconstructed exactly as a piecewise polynomial with jumps at x,
//! a+b-x and at the discontinuities of u. For nonnegative g and monotone u
//! the kernel is nondecreasing inside each piece, which reduces suprema and
//! |K|-integrals to endpoint values plus at most one sign crossing per piece.

use crate::error::{Error, Result};
use crate::funcmodel::{Piece, PiecewiseFunc, PointOverride, Side};
use crate::poly::{self, Poly};
use crate::rational::{rat_i, rat_to_f64, Rat};
use crate::rules;
use crate::stieltjes;
use num_traits::{Signed, Zero};

/// Interval, evaluation point and weight parameter of the quadrature family.
///
/// The evaluation point is restricted to [a, (a+b)/2]: beyond the midpoint
/// the middle kernel branch inverts and the closed-form bounds lose
/// soundness, so such requests are rejected outright.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureParams {
    a: Rat,
    b: Rat,
    x: Rat,
    alpha: Rat,
}

impl QuadratureParams {
    pub fn new(a: Rat, b: Rat, x: Rat, alpha: Rat) -> Result<Self> {
        if a >= b {
            return Err(Error::InvalidParams("interval [a, b] is empty or inverted".into()));
        }
        if alpha < Rat::zero() || alpha > rat_i(1) {
            return Err(Error::InvalidParams("alpha must lie in [0, 1]".into()));
        }
        let mid = (&a + &b) / rat_i(2);
        if x < a || x > mid {
            return Err(Error::InvalidParams(
                "evaluation point x must lie in [a, (a+b)/2]".into(),
            ));
        }
        Ok(QuadratureParams { a, b, x, alpha })
    }

    pub fn from_f64(a: f64, b: f64, x: f64, alpha: f64) -> Result<Self> {
        Self::new(
            crate::rational::rat_from_f64(a)?,
            crate::rational::rat_from_f64(b)?,
            crate::rational::rat_from_f64(x)?,
            crate::rational::rat_from_f64(alpha)?,
        )
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn x(&self) -> &Rat {
        &self.x
    }

    pub fn alpha(&self) -> &Rat {
        &self.alpha
    }

    pub fn midpoint(&self) -> Rat {
        (&self.a + &self.b) / rat_i(2)
    }

    /// The reflected node a + b - x.
    pub fn companion(&self) -> Rat {
        &self.a + &self.b - &self.x
    }

    pub(crate) fn check_domain(&self, f: &PiecewiseFunc) -> Result<()> {
        if f.lo() != &self.a || f.hi() != &self.b {
            return Err(Error::Domain(
                "quadrature parameters do not match the function domain".into(),
            ));
        }
        Ok(())
    }
}

/// Branch intervals of the kernel together with the one-sided values at the
/// interval endpoints and branch boundaries.
#[derive(Debug, Clone)]
pub struct KernelBreakdown {
    pub branch1: (Rat, Rat),
    pub branch2: (Rat, Rat),
    pub branch3: (Rat, Rat),
    /// (t, left value, right value); at a and b the missing side repeats the
    /// point value.
    pub branch_values_at_endpoints: Vec<(Rat, Rat, Rat)>,
}

/// Cumulative integral Phi(t) of g du from a, as an exact piecewise
/// polynomial. At a jump of u the point value carries the left half of the
/// jump, matching the endpoint convention of `rs_integral_exact`.
fn cumulative(g: &PiecewiseFunc, u: &PiecewiseFunc) -> PiecewiseFunc {
    let (a, b) = (g.lo().clone(), g.hi().clone());
    let mut points: Vec<Rat> = g.breakpoints();
    points.extend(u.breakpoints());
    points.sort();
    points.dedup();
    let jump_at = |t: &Rat| -> Option<(Rat, Rat)> {
        // (left part, right part) of the jump mass g(t) * du at t
        let value = u.eval(t, Side::At).expect("in domain");
        let left = if t > u.lo() { u.eval(t, Side::Left).expect("in domain") } else { value.clone() };
        let right = if t < u.hi() { u.eval(t, Side::Right).expect("in domain") } else { value.clone() };
        if left == value && value == right {
            return None;
        }
        let gt = g.value(t).expect("in domain");
        Some((&gt * (&value - &left), gt * (&right - &value)))
    };
    let mut pieces = Vec::new();
    let mut overrides = Vec::new();
    let mut running = Rat::zero(); // value of Phi approaching the next point
    for w in points.windows(2) {
        let (s, e) = (&w[0], &w[1]);
        if let Some((left_part, right_part)) = jump_at(s) {
            if s == &a {
                // Phi(a) = 0; only the right part of a jump at a is crossed
                running = right_part;
            } else {
                let at_value = &running + &left_part;
                overrides.push(PointOverride { at: s.clone(), value: at_value.clone() });
                running = at_value + right_part;
            }
        }
        let integrand = g.poly_on(s, e).mul(&u.poly_on(s, e).derivative());
        let anti = integrand.antiderivative();
        let shifted = anti.add(&Poly::constant(&running - anti.eval(s)));
        running = shifted.eval(e);
        pieces.push(Piece { from: s.clone(), to: e.clone(), poly: shifted });
    }
    if let Some((left_part, _)) = jump_at(&b) {
        overrides.push(PointOverride { at: b.clone(), value: running + left_part });
    }
    PiecewiseFunc::new_unchecked_degree((a, b), pieces, overrides)
        .expect("cumulative preserves the piece layout")
}

/// Reconstructs the kernel as an exact piecewise function. Pieces are split
/// at x, (a+b)/2 and a+b-x so every piece lies inside one branch.
pub(crate) fn build_kernel(
    g: &PiecewiseFunc,
    u: &PiecewiseFunc,
    p: &QuadratureParams,
) -> Result<PiecewiseFunc> {
    stieltjes::check_same_domain(&[g, u])?;
    p.check_domain(g)?;
    let phi = cumulative(g, u);
    let mid = p.midpoint();
    let comp = p.companion();
    let phi_x = phi.value(&p.x).expect("x in domain");
    let phi_m = phi.value(&mid).expect("midpoint in domain");
    let phi_b = phi.value(&p.b).expect("b in domain");
    let one_minus = rat_i(1) - &p.alpha;
    let shift_for = |t: &Rat| -> Rat {
        // branch constant subtracted from Phi; boundaries resolve left
        if t <= &p.x {
            &p.alpha * &phi_x
        } else if t <= &comp {
            &one_minus * &phi_m + &p.alpha * &phi_x
        } else {
            &one_minus * &phi_b + &p.alpha * &phi_x
        }
    };
    let mut cuts = phi.breakpoints();
    cuts.extend([p.x.clone(), mid, comp]);
    cuts.sort();
    cuts.dedup();
    let mut pieces = Vec::new();
    for w in cuts.windows(2) {
        let (s, e) = (&w[0], &w[1]);
        let c = shift_for(e); // (s, e] lies in the branch owning e
        pieces.push(Piece {
            from: s.clone(),
            to: e.clone(),
            poly: phi.poly_on(s, e).sub(&Poly::constant(c)),
        });
    }
    let mut overrides: Vec<PointOverride> = phi
        .overrides()
        .iter()
        .map(|o| PointOverride { at: o.at.clone(), value: &o.value - shift_for(&o.at) })
        .collect();
    if p.x == p.a {
        // branch 1 degenerates to the single point a where K(a) = 0
        overrides.retain(|o| o.at != p.a);
        overrides.push(PointOverride { at: p.a.clone(), value: Rat::zero() });
    }
    PiecewiseFunc::new_unchecked_degree((p.a.clone(), p.b.clone()), pieces, overrides)
}

fn check_weight_nonnegative(g: &PiecewiseFunc) -> Result<()> {
    let (mn, _) = g.range(&g.lo().clone(), &g.hi().clone())?;
    if mn.is_negative() {
        return Err(Error::NotNonnegativeWeight { min: rat_to_f64(&mn) });
    }
    Ok(())
}

fn check_monotone_integrator(u: &PiecewiseFunc) -> Result<()> {
    if !u.regularity().monotone_nondecreasing {
        return Err(Error::NotMonotoneIntegrator);
    }
    Ok(())
}

/// Kernel value at t with one-sided semantics; at a branch boundary the
/// left/right sides evaluate the adjacent branch formulas.
pub fn kernel_eval(
    g: &PiecewiseFunc,
    u: &PiecewiseFunc,
    p: &QuadratureParams,
    t: &Rat,
    side: Side,
) -> Result<Rat> {
    let k = build_kernel(g, u, p)?;
    k.eval(t, side)
}

/// Branch intervals and endpoint values of the kernel.
pub fn kernel_breakdown(
    g: &PiecewiseFunc,
    u: &PiecewiseFunc,
    p: &QuadratureParams,
) -> Result<KernelBreakdown> {
    let k = build_kernel(g, u, p)?;
    let mid = p.midpoint();
    let comp = p.companion();
    let mut values = Vec::new();
    for t in [p.a.clone(), p.x.clone(), mid, comp, p.b.clone()] {
        let at = k.eval(&t, Side::At)?;
        let left = if &t > p.a() { k.eval(&t, Side::Left)? } else { at.clone() };
        let right = if &t < p.b() { k.eval(&t, Side::Right)? } else { at };
        values.push((t, left, right));
    }
    values.dedup_by(|a, b| a.0 == b.0);
    Ok(KernelBreakdown {
        branch1: (p.a.clone(), p.x.clone()),
        branch2: (p.x.clone(), p.companion()),
        branch3: (p.companion(), p.b.clone()),
        branch_values_at_endpoints: values,
    })
}

/// Exact supremum of |K| over [a, b].
///
/// Requires g >= 0 and monotone u so that K is nondecreasing inside each
/// branch; the supremum is then attained among one-sided values at the piece
/// boundaries (branch cuts and jumps of u).
pub fn kernel_sup(g: &PiecewiseFunc, u: &PiecewiseFunc, p: &QuadratureParams) -> Result<Rat> {
    check_weight_nonnegative(g)?;
    check_monotone_integrator(u)?;
    let k = build_kernel(g, u, p)?;
    let mut best = Rat::zero();
    let mut consider = |v: Rat| {
        let v = v.abs();
        if v > best {
            best = v;
        }
    };
    for t in k.breakpoints() {
        consider(k.eval(&t, Side::At)?);
        if &t > p.a() {
            consider(k.eval(&t, Side::Left)?);
        }
        if &t < p.b() {
            consider(k.eval(&t, Side::Right)?);
        }
    }
    Ok(best)
}

/// Splits every kernel piece at its sign crossing (at most one per piece for
/// monotone pieces) and returns |K| as an exact piecewise function.
fn abs_kernel(k: &PiecewiseFunc) -> PiecewiseFunc {
    let mut pieces = Vec::new();
    for piece in k.pieces() {
        let lo_val = piece.poly.eval(&piece.from);
        let hi_val = piece.poly.eval(&piece.to);
        if !lo_val.is_negative() && !hi_val.is_negative() {
            pieces.push(piece.clone());
        } else if !lo_val.is_positive() && !hi_val.is_positive() {
            pieces.push(Piece { from: piece.from.clone(), to: piece.to.clone(), poly: piece.poly.neg() });
        } else {
            let root = poly::monotone_root(&piece.poly, &piece.from, &piece.to);
            let (first, second) = if lo_val.is_negative() {
                (piece.poly.neg(), piece.poly.clone())
            } else {
                (piece.poly.clone(), piece.poly.neg())
            };
            pieces.push(Piece { from: piece.from.clone(), to: root.clone(), poly: first });
            pieces.push(Piece { from: root, to: piece.to.clone(), poly: second });
        }
    }
    let overrides = k
        .overrides()
        .iter()
        .map(|o| PointOverride { at: o.at.clone(), value: o.value.abs() })
        .collect();
    PiecewiseFunc::new_unchecked_degree((k.lo().clone(), k.hi().clone()), pieces, overrides)
        .expect("sign splitting preserves the piece layout")
}

/// Exact integral of |K(t)| dt over [a, b].
pub fn kernel_l1_dt(g: &PiecewiseFunc, u: &PiecewiseFunc, p: &QuadratureParams) -> Result<Rat> {
    check_weight_nonnegative(g)?;
    check_monotone_integrator(u)?;
    let k = build_kernel(g, u, p)?;
    let abs_k = abs_kernel(&k);
    let mut total = Rat::zero();
    for piece in abs_k.pieces() {
        total += piece.poly.integral(&piece.from, &piece.to);
    }
    Ok(total)
}

/// Exact Riemann-Stieltjes integral of |K(t)| df(t) over [a, b]; f must be
/// monotone nondecreasing and must not share a discontinuity with |K|.
pub fn kernel_l1_df(
    g: &PiecewiseFunc,
    u: &PiecewiseFunc,
    f: &PiecewiseFunc,
    p: &QuadratureParams,
) -> Result<Rat> {
    check_weight_nonnegative(g)?;
    check_monotone_integrator(u)?;
    if !f.regularity().monotone_nondecreasing {
        return Err(Error::NotMonotoneIntegrand);
    }
    let k = build_kernel(g, u, p)?;
    let abs_k = abs_kernel(&k);
    let one = PiecewiseFunc::constant(p.a.clone(), p.b.clone(), rat_i(1));
    stieltjes::rs_exact_value(&abs_k, &one, f, &p.a.clone(), &p.b.clone())
}

const IDENTITY_ORACLE_TOL: f64 = 1e-10;

/// Residual of the error identity: [Q(f,u,g; x,alpha) - integral of f g du]
/// minus the integral of K df.
///
/// The K-integral is taken from the refining oracle when f is continuous
/// (second-order convergence, independent of the exact evaluator) and from
/// the exact kernel reconstruction otherwise, where refining sums against a
/// jumping integrator would stall at first order.
pub fn identity_residual(
    f: &PiecewiseFunc,
    g: &PiecewiseFunc,
    u: &PiecewiseFunc,
    p: &QuadratureParams,
) -> Result<Rat> {
    stieltjes::check_same_domain(&[f, g, u])?;
    p.check_domain(f)?;
    let q = rules::quad(f, g, u, p)?;
    let total = stieltjes::rs_exact_value(f, g, u, &p.a.clone(), &p.b.clone())?;
    let k = build_kernel(g, u, p)?;
    let k_df = integral_k_df(&k, f, p)?;
    Ok(q - total - k_df)
}

fn integral_k_df(k: &PiecewiseFunc, f: &PiecewiseFunc, p: &QuadratureParams) -> Result<Rat> {
    let one = PiecewiseFunc::constant(p.a.clone(), p.b.clone(), rat_i(1));
    if !f.discontinuities().is_empty() {
        return stieltjes::rs_exact_value(k, &one, f, &p.a.clone(), &p.b.clone());
    }
    // f is continuous, so no discontinuity of K can be shared: run the
    // independent refining oracle
    let mut base: Vec<Rat> = k.breakpoints();
    base.extend(f.breakpoints());
    base.sort();
    base.dedup();
    let base_f64: Vec<f64> = {
        let mut v: Vec<f64> = base.iter().map(rat_to_f64).collect();
        v.dedup();
        v
    };
    let kv = k.to_f64();
    let fv = f.to_f64();
    let (value, _) = stieltjes::refine_sum(
        &|t| kv.eval(t, Side::At),
        &|t| fv.eval(t, Side::At),
        &base_f64,
        IDENTITY_ORACLE_TOL,
    )?;
    crate::rational::rat_from_f64(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcmodel::parse_funcspec;
    use crate::rational::rat;

    fn setup(x: (i64, i64), alpha: (i64, i64)) -> (PiecewiseFunc, PiecewiseFunc, QuadratureParams) {
        let g = PiecewiseFunc::constant(rat(0, 1), rat(1, 1), rat_i(1));
        let u = PiecewiseFunc::identity(rat(0, 1), rat(1, 1));
        let p = QuadratureParams::new(rat(0, 1), rat(1, 1), rat(x.0, x.1), rat(alpha.0, alpha.1)).unwrap();
        (g, u, p)
    }

    #[test]
    fn params_reject_bad_input() {
        assert!(QuadratureParams::new(rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1)).is_err());
        assert!(QuadratureParams::new(rat(0, 1), rat(1, 1), rat(0, 1), rat(2, 1)).is_err());
        // x beyond the midpoint is rejected
        assert!(QuadratureParams::new(rat(0, 1), rat(1, 1), rat(3, 4), rat(0, 1)).is_err());
        assert!(QuadratureParams::new(rat(0, 1), rat(1, 1), rat(1, 2), rat(1, 1)).is_ok());
    }

    #[test]
    fn eval_walks_the_three_branches() {
        let (g, u, p) = setup((1, 4), (0, 1));
        // K = t on [0, 1/4], t - 1/2 on (1/4, 3/4], t - 1 on (3/4, 1]
        assert_eq!(kernel_eval(&g, &u, &p, &rat(1, 5), Side::At).unwrap(), rat(1, 5));
        assert_eq!(kernel_eval(&g, &u, &p, &rat(1, 2), Side::At).unwrap(), rat(0, 1));
        assert_eq!(kernel_eval(&g, &u, &p, &rat(9, 10), Side::At).unwrap(), rat(-1, 10));
        // one-sided values at the branch cut x
        assert_eq!(kernel_eval(&g, &u, &p, &rat(1, 4), Side::At).unwrap(), rat(1, 4));
        assert_eq!(kernel_eval(&g, &u, &p, &rat(1, 4), Side::Right).unwrap(), rat(-1, 4));
    }

    #[test]
    fn sup_examples() {
        let (g, u, p) = setup((1, 4), (0, 1));
        assert_eq!(kernel_sup(&g, &u, &p).unwrap(), rat(1, 4));
        let (g, u, p) = setup((1, 2), (1, 2));
        assert_eq!(kernel_sup(&g, &u, &p).unwrap(), rat(1, 4));
        // x = a with alpha = 1/2: single effective branch t - 1/4, sup 3/4,
        // larger than the consolidated closed form 1/2
        let (g, u, p) = setup((0, 1), (1, 2));
        assert_eq!(kernel_sup(&g, &u, &p).unwrap(), rat(3, 4));
        assert_eq!(kernel_eval(&g, &u, &p, &rat(0, 1), Side::At).unwrap(), rat(0, 1));
        assert_eq!(kernel_eval(&g, &u, &p, &rat(0, 1), Side::Right).unwrap(), rat(-1, 4));
    }

    #[test]
    fn sup_requires_hypotheses() {
        let (_, u, p) = setup((1, 4), (0, 1));
        let g_neg = PiecewiseFunc::from_poly(rat(0, 1), rat(1, 1), Poly::new(vec![rat(1, 2), rat_i(-2)]));
        assert!(matches!(kernel_sup(&g_neg, &u, &p), Err(Error::NotNonnegativeWeight { .. })));
        let g = PiecewiseFunc::constant(rat(0, 1), rat(1, 1), rat_i(1));
        let u_dec = PiecewiseFunc::from_poly(rat(0, 1), rat(1, 1), Poly::new(vec![rat_i(1), rat_i(-1)]));
        assert!(matches!(kernel_sup(&g, &u_dec, &p), Err(Error::NotMonotoneIntegrator)));
    }

    #[test]
    fn l1_dt_examples() {
        let (g, u, p) = setup((1, 2), (0, 1));
        assert_eq!(kernel_l1_dt(&g, &u, &p).unwrap(), rat(1, 4));
        let (g, u, p) = setup((1, 2), (1, 1));
        assert_eq!(kernel_l1_dt(&g, &u, &p).unwrap(), rat(1, 4));
        let g = PiecewiseFunc::constant(rat(0, 1), rat(1, 1), rat_i(1));
        let u_flat = PiecewiseFunc::constant(rat(0, 1), rat(1, 1), rat(7, 3));
        let p = QuadratureParams::new(rat(0, 1), rat(1, 1), rat(1, 4), rat(1, 3)).unwrap();
        assert_eq!(kernel_l1_dt(&g, &u_flat, &p).unwrap(), rat(0, 1));
    }

    #[test]
    fn l1_df_examples() {
        let (g, u, p) = setup((1, 2), (1, 1));
        // f(t) = t reduces to the dt integral
        let f_id = PiecewiseFunc::identity(rat(0, 1), rat(1, 1));
        assert_eq!(kernel_l1_df(&g, &u, &f_id, &p).unwrap(), kernel_l1_dt(&g, &u, &p).unwrap());
        // constant f kills the integral
        let f_c = PiecewiseFunc::constant(rat(0, 1), rat(1, 1), rat(5, 1));
        assert_eq!(kernel_l1_df(&g, &u, &f_c, &p).unwrap(), rat(0, 1));
        // f = t^2: integral of |t - 1/2| 2t dt = 1/4
        let f_sq = PiecewiseFunc::from_poly(rat(0, 1), rat(1, 1), Poly::new(vec![rat_i(0), rat_i(0), rat_i(1)]));
        assert_eq!(kernel_l1_df(&g, &u, &f_sq, &p).unwrap(), rat(1, 4));
    }

    #[test]
    fn kernel_with_jumping_integrator() {
        // u steps by 1 at 1/2: Phi jumps there, K inherits the jump
        let g = PiecewiseFunc::constant(rat(0, 1), rat(1, 1), rat_i(1));
        let u = PiecewiseFunc::step(rat(0, 1), rat(1, 1), rat(1, 2)).unwrap();
        let p = QuadratureParams::new(rat(0, 1), rat(1, 1), rat(1, 4), rat(0, 1)).unwrap();
        // Phi = 0 before 1/2, 1 from 1/2 on; branch 2 subtracts Phi(m) = 1
        assert_eq!(kernel_eval(&g, &u, &p, &rat(3, 8), Side::At).unwrap(), rat(-1, 1));
        assert_eq!(kernel_eval(&g, &u, &p, &rat(1, 2), Side::Left).unwrap(), rat(-1, 1));
        assert_eq!(kernel_eval(&g, &u, &p, &rat(1, 2), Side::At).unwrap(), rat(0, 1));
        assert_eq!(kernel_eval(&g, &u, &p, &rat(5, 8), Side::At).unwrap(), rat(0, 1));
        assert_eq!(kernel_sup(&g, &u, &p).unwrap(), rat(1, 1));
    }

    #[test]
    fn identity_residual_examples() {
        // f = t^2, g = 1, u = t, x = 1/4, alpha = 0: both sides equal -1/48
        let f = PiecewiseFunc::from_poly(rat(0, 1), rat(1, 1), Poly::new(vec![rat_i(0), rat_i(0), rat_i(1)]));
        let g = PiecewiseFunc::constant(rat(0, 1), rat(1, 1), rat_i(1));
        let u = PiecewiseFunc::identity(rat(0, 1), rat(1, 1));
        let p = QuadratureParams::new(rat(0, 1), rat(1, 1), rat(1, 4), rat(0, 1)).unwrap();
        let r = identity_residual(&f, &g, &u, &p).unwrap();
        assert!(rat_to_f64(&r).abs() < 1e-9, "residual {}", rat_to_f64(&r));

        // constant f: all terms vanish identically
        let f_c = PiecewiseFunc::constant(rat(0, 1), rat(1, 1), rat(3, 1));
        let r = identity_residual(&f_c, &g, &u, &p).unwrap();
        assert!(rat_to_f64(&r).abs() < 1e-10);

        // f = t, g = t, u = t^2, x = 1/2, alpha = 1/3
        let f_id = PiecewiseFunc::identity(rat(0, 1), rat(1, 1));
        let g_id = PiecewiseFunc::identity(rat(0, 1), rat(1, 1));
        let u_sq = PiecewiseFunc::from_poly(rat(0, 1), rat(1, 1), Poly::new(vec![rat_i(0), rat_i(0), rat_i(1)]));
        let p = QuadratureParams::new(rat(0, 1), rat(1, 1), rat(1, 2), rat(1, 3)).unwrap();
        let r = identity_residual(&f_id, &g_id, &u_sq, &p).unwrap();
        assert!(rat_to_f64(&r).abs() < 1e-9);
    }

    #[test]
    fn identity_residual_with_jumping_f_uses_exact_route() {
        let f = parse_funcspec(
            r#"{"domain":[0,1],"pieces":[{"from":0,"to":"3/8","poly":[0,1]},{"from":"3/8","to":1,"poly":[1,0,1]}]}"#,
        )
        .unwrap();
        let g = PiecewiseFunc::constant(rat(0, 1), rat(1, 1), rat_i(1));
        let u = PiecewiseFunc::identity(rat(0, 1), rat(1, 1));
        let p = QuadratureParams::new(rat(0, 1), rat(1, 1), rat(1, 4), rat(1, 2)).unwrap();
        // the exact route makes the identity hold to the last bit
        assert_eq!(identity_residual(&f, &g, &u, &p).unwrap(), rat(0, 1));
    }

    #[test]
    fn breakdown_reports_branch_cuts() {
        let (g, u, p) = setup((1, 4), (1, 2));
        let b = kernel_breakdown(&g, &u, &p).unwrap();
        assert_eq!(b.branch1, (rat(0, 1), rat(1, 4)));
        assert_eq!(b.branch2, (rat(1, 4), rat(3, 4)));
        assert_eq!(b.branch3, (rat(3, 4), rat(1, 1)));
        assert_eq!(b.branch_values_at_endpoints.len(), 5);
    }
}
