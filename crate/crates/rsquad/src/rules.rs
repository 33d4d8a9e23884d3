//! The companion quadrature family
//!
//!   Q(f,u,g; x,alpha) = (1-alpha) [ f(x) I(a,m) + f(a+b-x) I(m,b) ]
//!                     +   alpha   [ f(a) I(a,x) + f(b)     I(x,b) ]
//!
//! with m = (a+b)/2 and I(c,d) the Riemann-Stieltjes integral of g du over
//! [c,d], plus its named special cases. Point values of f use the `at`
//! semantics of the function model; the sharpness constructions depend on
//! values at isolated jumps, so this is load-bearing.

use crate::error::{Error, Result};
use crate::funcmodel::PiecewiseFunc;
use crate::kernel::QuadratureParams;
use crate::rational::{rat, rat_i, Rat};
use crate::stieltjes;

/// Named members of the family; each kind pins (x, alpha).
#[derive(Debug, Clone, PartialEq)]
pub enum RuleKind {
    General { x: Rat, alpha: Rat },
    /// alpha = 0: two-point Ostrowski-type rule at x and a+b-x.
    Ostrowski { x: Rat },
    /// alpha = 1/3, x = (a+b)/2: Simpson-type rule.
    Simpson,
    /// alpha = 1/2: mean of the Ostrowski and trapezoid branches.
    Average { x: Rat },
    /// alpha = 1: generalized trapezoid rule.
    GeneralizedTrapezoid { x: Rat },
}

impl RuleKind {
    /// Resolves the kind into quadrature parameters on [a, b].
    pub fn params(&self, a: &Rat, b: &Rat) -> Result<QuadratureParams> {
        let mid = (a + b) / rat_i(2);
        match self {
            RuleKind::General { x, alpha } => {
                QuadratureParams::new(a.clone(), b.clone(), x.clone(), alpha.clone())
            }
            RuleKind::Ostrowski { x } => {
                QuadratureParams::new(a.clone(), b.clone(), x.clone(), rat_i(0))
            }
            RuleKind::Simpson => QuadratureParams::new(a.clone(), b.clone(), mid, rat(1, 3)),
            RuleKind::Average { x } => {
                QuadratureParams::new(a.clone(), b.clone(), x.clone(), rat(1, 2))
            }
            RuleKind::GeneralizedTrapezoid { x } => {
                QuadratureParams::new(a.clone(), b.clone(), x.clone(), rat_i(1))
            }
        }
    }
}

/// Integral of g du over [c, d] (helper for the rule weights).
fn g_mass(g: &PiecewiseFunc, u: &PiecewiseFunc, c: &Rat, d: &Rat) -> Result<Rat> {
    let one = PiecewiseFunc::constant(g.lo().clone(), g.hi().clone(), rat_i(1));
    stieltjes::rs_exact_value(g, &one, u, c, d)
}

/// Evaluates the companion quadrature rule exactly.
pub fn quad(
    f: &PiecewiseFunc,
    g: &PiecewiseFunc,
    u: &PiecewiseFunc,
    p: &QuadratureParams,
) -> Result<Rat> {
    stieltjes::check_same_domain(&[f, g, u])?;
    p.check_domain(f)?;
    let m = p.midpoint();
    let comp = p.companion();
    let alpha = p.alpha();
    let one_minus = rat_i(1) - alpha;
    let left_half = g_mass(g, u, p.a(), &m)?;
    let right_half = g_mass(g, u, &m, p.b())?;
    let to_x = g_mass(g, u, p.a(), p.x())?;
    let from_x = g_mass(g, u, p.x(), p.b())?;
    let companion_part = f.value(p.x())? * left_half + f.value(&comp)? * right_half;
    let trapezoid_part = f.value(p.a())? * to_x + f.value(p.b())? * from_x;
    Ok(one_minus * companion_part + alpha * trapezoid_part)
}

/// Evaluates a named rule; identical to `quad` at the kind's parameters.
pub fn quad_named(
    f: &PiecewiseFunc,
    g: &PiecewiseFunc,
    u: &PiecewiseFunc,
    kind: &RuleKind,
) -> Result<Rat> {
    let p = kind.params(f.lo(), f.hi())?;
    quad(f, g, u, &p)
}

/// Parameter validation shared with the bounds layer: reject evaluation
/// points past the midpoint even when the caller builds params elsewhere.
pub fn check_params(p: &QuadratureParams) -> Result<()> {
    if p.x() < p.a() || p.x() > &p.midpoint() {
        return Err(Error::InvalidParams(
            "evaluation point x must lie in [a, (a+b)/2]".into(),
        ));
    }
    Ok(())
}
