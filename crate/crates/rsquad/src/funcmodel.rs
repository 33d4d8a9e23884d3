//! Exact model of real functions on a closed interval: contiguous polynomial
//! pieces plus isolated point overrides.
//!
//! The model is closed under antiderivatives, admits exact total variation
//! and exact Riemann-Stieltjes integration, and can express jump
//! discontinuities two ways: a mismatch between adjacent pieces, or a point
//! override whose value differs from the surrounding limits. At a boundary
//! shared by two pieces the point value defaults to the left piece unless
//! overridden.

use crate::error::{Error, Result};
use crate::poly::{self, Poly};
use crate::rational::{format_rat, parse_number, rat_i, rat_to_f64, Rat};
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

/// Which value of the function to take at a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    At,
    Right,
}

/// Maximum polynomial degree accepted from external input.
pub const MAX_DEGREE: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct Piece {
    pub from: Rat,
    pub to: Rat,
    pub poly: Poly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PointOverride {
    pub at: Rat,
    pub value: Rat,
}

/// A discontinuity: the point value together with both one-sided limits.
/// At the domain endpoints the missing limit is set to the point value.
#[derive(Debug, Clone, PartialEq)]
pub struct JumpPoint {
    pub at: Rat,
    pub left: Rat,
    pub value: Rat,
    pub right: Rat,
}

impl JumpPoint {
    /// |value - left| + |right - value|.
    pub fn magnitude(&self) -> Rat {
        (&self.value - &self.left).abs() + (&self.right - &self.value).abs()
    }
}

/// Machine-checked regularity facts about a function.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularityCertificate {
    pub total_variation: Rat,
    /// Least Lipschitz constant on the domain; absent if the function jumps.
    pub lipschitz_constant: Option<Rat>,
    pub monotone_nondecreasing: bool,
    pub continuous: bool,
    pub jump_points: Vec<JumpPoint>,
}

/// Piecewise-polynomial function with isolated point overrides.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseFunc {
    lo: Rat,
    hi: Rat,
    pieces: Vec<Piece>,
    overrides: Vec<PointOverride>,
}

impl PiecewiseFunc {
    /// Builds and validates a function; external entry point, enforces the
    /// degree cap.
    pub fn new(
        domain: (Rat, Rat),
        pieces: Vec<Piece>,
        overrides: Vec<PointOverride>,
    ) -> Result<Self> {
        Self::build(domain, pieces, overrides, true)
    }

    /// Internal constructor for derived objects (antiderivatives, kernels)
    /// whose degree may exceed the input cap.
    pub(crate) fn new_unchecked_degree(
        domain: (Rat, Rat),
        pieces: Vec<Piece>,
        overrides: Vec<PointOverride>,
    ) -> Result<Self> {
        Self::build(domain, pieces, overrides, false)
    }

    fn build(
        domain: (Rat, Rat),
        mut pieces: Vec<Piece>,
        mut overrides: Vec<PointOverride>,
        cap_degree: bool,
    ) -> Result<Self> {
        let (lo, hi) = domain;
        if lo >= hi {
            return Err(Error::Parse(format!(
                "domain [{}, {}] is empty or inverted",
                format_rat(&lo),
                format_rat(&hi)
            )));
        }
        if pieces.is_empty() {
            return Err(Error::Parse("no pieces".into()));
        }
        pieces.sort_by(|a, b| a.from.cmp(&b.from));
        for p in &pieces {
            if p.from >= p.to {
                return Err(Error::Parse(format!(
                    "piece [{}, {}] is empty or inverted",
                    format_rat(&p.from),
                    format_rat(&p.to)
                )));
            }
            if cap_degree && p.poly.degree() > MAX_DEGREE {
                return Err(Error::Parse(format!(
                    "polynomial degree {} exceeds the cap {}",
                    p.poly.degree(),
                    MAX_DEGREE
                )));
            }
        }
        if pieces[0].from != lo || pieces.last().unwrap().to != hi {
            return Err(Error::Parse("pieces do not cover the domain".into()));
        }
        for w in pieces.windows(2) {
            if w[0].to != w[1].from {
                return Err(Error::Parse(format!(
                    "gap or overlap between pieces at {} vs {}",
                    format_rat(&w[0].to),
                    format_rat(&w[1].from)
                )));
            }
        }
        overrides.sort_by(|a, b| a.at.cmp(&b.at));
        for w in overrides.windows(2) {
            if w[0].at == w[1].at {
                return Err(Error::Parse(format!(
                    "duplicate override at {}",
                    format_rat(&w[0].at)
                )));
            }
        }
        for o in &overrides {
            if o.at < lo || o.at > hi {
                return Err(Error::Parse(format!(
                    "override at {} outside the domain",
                    format_rat(&o.at)
                )));
            }
        }
        let f = PiecewiseFunc { lo, hi, pieces, overrides };
        // drop overrides that restate the underlying piece value
        let kept: Vec<PointOverride> = f
            .overrides
            .iter()
            .filter(|o| f.piece_value(&o.at) != o.value)
            .cloned()
            .collect();
        Ok(PiecewiseFunc { overrides: kept, ..f })
    }

    /// Constant function c on [a, b].
    pub fn constant(a: Rat, b: Rat, c: Rat) -> Self {
        Self::new((a.clone(), b.clone()), vec![Piece { from: a, to: b, poly: Poly::constant(c) }], vec![])
            .expect("constant function is valid")
    }

    /// The identity u(t) = t on [a, b].
    pub fn identity(a: Rat, b: Rat) -> Self {
        Self::from_poly(a, b, Poly::new(vec![rat_i(0), rat_i(1)]))
    }

    /// Single polynomial piece on [a, b].
    pub fn from_poly(a: Rat, b: Rat, poly: Poly) -> Self {
        Self::new((a.clone(), b.clone()), vec![Piece { from: a, to: b, poly }], vec![])
            .expect("single-piece function is valid")
    }

    /// Zero everywhere except value v at one point.
    pub fn spike(a: Rat, b: Rat, at: Rat, v: Rat) -> Result<Self> {
        Self::new(
            (a.clone(), b.clone()),
            vec![Piece { from: a, to: b, poly: Poly::zero() }],
            vec![PointOverride { at, value: v }],
        )
    }

    /// Unit step: 0 for t < c, 1 for t >= c.
    pub fn step(a: Rat, b: Rat, c: Rat) -> Result<Self> {
        if c < a || c > b {
            return Err(Error::Domain(format!("step point {} outside domain", format_rat(&c))));
        }
        if c == a {
            return Ok(Self::constant(a, b, rat_i(1)));
        }
        if c == b {
            return Self::new(
                (a.clone(), b.clone()),
                vec![Piece { from: a, to: b.clone(), poly: Poly::zero() }],
                vec![PointOverride { at: b, value: rat_i(1) }],
            );
        }
        Self::new(
            (a.clone(), b.clone()),
            vec![
                Piece { from: a, to: c.clone(), poly: Poly::zero() },
                Piece { from: c.clone(), to: b, poly: Poly::constant(rat_i(1)) },
            ],
            vec![PointOverride { at: c, value: rat_i(1) }],
        )
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn domain(&self) -> (&Rat, &Rat) {
        (&self.lo, &self.hi)
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn overrides(&self) -> &[PointOverride] {
        &self.overrides
    }

    /// True when the function equals the constant c at every point.
    pub fn is_identically(&self, c: &Rat) -> bool {
        self.overrides.is_empty()
            && self.pieces.iter().all(|p| p.poly == Poly::constant(c.clone()) || (c.is_zero() && p.poly.is_zero()))
    }

    fn check_in_domain(&self, t: &Rat) -> Result<()> {
        if t < &self.lo || t > &self.hi {
            return Err(Error::Domain(format!(
                "t = {} outside [{}, {}]",
                format_rat(t),
                format_rat(&self.lo),
                format_rat(&self.hi)
            )));
        }
        Ok(())
    }

    /// Index of the piece owning t for point values and left limits
    /// (boundaries belong to the left piece).
    fn left_index(&self, t: &Rat) -> usize {
        self.pieces.partition_point(|p| &p.to < t).min(self.pieces.len() - 1)
    }

    /// Index of the piece owning t for right limits
    /// (boundaries belong to the right piece).
    fn right_index(&self, t: &Rat) -> usize {
        self.pieces.partition_point(|p| &p.to <= t).min(self.pieces.len() - 1)
    }

    /// Piece value at t ignoring overrides (boundary resolves left).
    fn piece_value(&self, t: &Rat) -> Rat {
        self.pieces[self.left_index(t)].poly.eval(t)
    }

    /// One-sided limit or point value at t.
    pub fn eval(&self, t: &Rat, side: Side) -> Result<Rat> {
        self.check_in_domain(t)?;
        match side {
            Side::Left => {
                if t == &self.lo {
                    return Err(Error::Domain("left limit requested at the left endpoint".into()));
                }
                Ok(self.pieces[self.left_index(t)].poly.eval(t))
            }
            Side::Right => {
                if t == &self.hi {
                    return Err(Error::Domain("right limit requested at the right endpoint".into()));
                }
                Ok(self.pieces[self.right_index(t)].poly.eval(t))
            }
            Side::At => {
                if let Ok(i) = self.overrides.binary_search_by(|o| o.at.cmp(t)) {
                    return Ok(self.overrides[i].value.clone());
                }
                Ok(self.piece_value(t))
            }
        }
    }

    /// Point value; t must lie in the domain.
    pub fn value(&self, t: &Rat) -> Result<Rat> {
        self.eval(t, Side::At)
    }

    /// All piece boundaries and override points, sorted, including both
    /// domain endpoints.
    pub fn breakpoints(&self) -> Vec<Rat> {
        let mut pts: Vec<Rat> = self.pieces.iter().map(|p| p.from.clone()).collect();
        pts.push(self.hi.clone());
        pts.extend(self.overrides.iter().map(|o| o.at.clone()));
        pts.sort();
        pts.dedup();
        pts
    }

    /// Points where the function is discontinuous, with one-sided limits.
    pub fn discontinuities(&self) -> Vec<JumpPoint> {
        let mut candidates: Vec<Rat> = self
            .pieces
            .iter()
            .skip(1)
            .map(|p| p.from.clone())
            .chain(self.overrides.iter().map(|o| o.at.clone()))
            .collect();
        candidates.sort();
        candidates.dedup();
        let mut out = Vec::new();
        for at in candidates {
            let value = self.eval(&at, Side::At).expect("candidate in domain");
            let left = if at > self.lo {
                self.eval(&at, Side::Left).expect("interior left limit")
            } else {
                value.clone()
            };
            let right = if at < self.hi {
                self.eval(&at, Side::Right).expect("interior right limit")
            } else {
                value.clone()
            };
            if left != value || value != right {
                out.push(JumpPoint { at, left, value, right });
            }
        }
        out
    }

    /// True if left limit, value and right limit agree at t.
    pub fn continuous_at(&self, t: &Rat) -> bool {
        let value = match self.eval(t, Side::At) {
            Ok(v) => v,
            Err(_) => return false,
        };
        if t > &self.lo && self.eval(t, Side::Left).expect("in domain") != value {
            return false;
        }
        if t < &self.hi && self.eval(t, Side::Right).expect("in domain") != value {
            return false;
        }
        true
    }

    /// The polynomial valid on the open interval (s, e); the interval must
    /// not straddle a piece boundary.
    pub(crate) fn poly_on(&self, s: &Rat, e: &Rat) -> &Poly {
        let mid = (s + e) / rat_i(2);
        &self.pieces[self.left_index(&mid)].poly
    }

    /// Exact total variation over [c, d]: polynomial variation per piece via
    /// root isolation of the derivative, plus jump magnitudes (one-sided at
    /// the cut points c and d).
    pub fn total_variation(&self, c: &Rat, d: &Rat) -> Result<Rat> {
        self.check_in_domain(c)?;
        self.check_in_domain(d)?;
        if c > d {
            return Err(Error::Domain("total variation over inverted interval".into()));
        }
        if c == d {
            return Ok(Rat::zero());
        }
        let mut total = Rat::zero();
        for p in &self.pieces {
            let s = if &p.from > c { &p.from } else { c };
            let e = if &p.to < d { &p.to } else { d };
            if s < e {
                total += poly::variation_on(&p.poly, s, e)?;
            }
        }
        for j in self.discontinuities() {
            if &j.at < c || &j.at > d {
                continue;
            }
            if &j.at == c {
                total += (&j.right - &j.value).abs();
            } else if &j.at == d {
                total += (&j.value - &j.left).abs();
            } else {
                total += j.magnitude();
            }
        }
        Ok(total)
    }

    /// Exact range (min, max) of the function over [c, d], accounting for
    /// one-sided limits and override values.
    pub fn range(&self, c: &Rat, d: &Rat) -> Result<(Rat, Rat)> {
        self.check_in_domain(c)?;
        self.check_in_domain(d)?;
        if c > d {
            return Err(Error::Domain("range over inverted interval".into()));
        }
        let mut min: Option<Rat> = None;
        let mut max: Option<Rat> = None;
        let mut consider = |v: Rat| {
            if min.as_ref().is_none_or(|m| &v < m) {
                min = Some(v.clone());
            }
            if max.as_ref().is_none_or(|m| &v > m) {
                max = Some(v);
            }
        };
        if c == d {
            let v = self.eval(c, Side::At)?;
            return Ok((v.clone(), v));
        }
        for p in &self.pieces {
            let s = if &p.from > c { &p.from } else { c };
            let e = if &p.to < d { &p.to } else { d };
            if s < e {
                let (lo, hi) = poly::range_on(&p.poly, s, e)?;
                consider(lo);
                consider(hi);
            }
        }
        for o in &self.overrides {
            if &o.at >= c && &o.at <= d {
                consider(o.value.clone());
            }
        }
        consider(self.eval(c, Side::At)?);
        consider(self.eval(d, Side::At)?);
        Ok((min.unwrap(), max.unwrap()))
    }

    /// Regularity certificate: exact variation, Lipschitz constant when the
    /// function is continuous, monotonicity and the discontinuity list.
    pub fn regularity(&self) -> RegularityCertificate {
        let jump_points = self.discontinuities();
        let continuous = jump_points.is_empty();
        let total_variation = self
            .total_variation(&self.lo.clone(), &self.hi.clone())
            .expect("variation over own domain");
        let lipschitz_constant = if continuous {
            let mut best = Rat::zero();
            for p in &self.pieces {
                let d = p.poly.derivative();
                let (mn, mx) = poly::range_on(&d, &p.from, &p.to).expect("derivative range");
                let sup = if mn.abs() > mx.abs() { mn.abs() } else { mx.abs() };
                if sup > best {
                    best = sup;
                }
            }
            Some(best)
        } else {
            None
        };
        let pieces_nondecreasing = self.pieces.iter().all(|p| {
            let d = p.poly.derivative();
            if d.is_zero() {
                return true;
            }
            let (mn, _) = poly::range_on(&d, &p.from, &p.to).expect("derivative range");
            !mn.is_negative()
        });
        let jumps_nondecreasing = jump_points
            .iter()
            .all(|j| j.left <= j.value && j.value <= j.right);
        RegularityCertificate {
            total_variation,
            lipschitz_constant,
            monotone_nondecreasing: pieces_nondecreasing && jumps_nondecreasing,
            continuous,
            jump_points,
        }
    }

    /// Continuous antiderivative F with F(a) = 0 and F' = f on each piece.
    /// Point overrides have measure zero and are ignored.
    pub fn antiderivative(&self) -> PiecewiseFunc {
        let mut pieces = Vec::with_capacity(self.pieces.len());
        let mut offset = Rat::zero();
        for p in &self.pieces {
            let anti = p.poly.antiderivative();
            let start = anti.eval(&p.from);
            let shifted = anti.add(&Poly::constant(&offset - &start));
            offset = shifted.eval(&p.to);
            pieces.push(Piece { from: p.from.clone(), to: p.to.clone(), poly: shifted });
        }
        PiecewiseFunc::new_unchecked_degree((self.lo.clone(), self.hi.clone()), pieces, vec![])
            .expect("antiderivative preserves the piece layout")
    }

    /// The same function on a domain shifted by s.
    pub fn translate(&self, s: &Rat) -> PiecewiseFunc {
        let shift = |p: &Poly| p.compose_affine(&-s.clone(), &rat_i(1));
        let pieces = self
            .pieces
            .iter()
            .map(|p| Piece { from: &p.from + s, to: &p.to + s, poly: shift(&p.poly) })
            .collect();
        let overrides = self
            .overrides
            .iter()
            .map(|o| PointOverride { at: &o.at + s, value: o.value.clone() })
            .collect();
        PiecewiseFunc::new_unchecked_degree((&self.lo + s, &self.hi + s), pieces, overrides)
            .expect("translation preserves validity")
    }

    /// Float-arithmetic view for the refining oracles.
    pub fn to_f64(&self) -> F64Func {
        F64Func {
            lo: rat_to_f64(&self.lo),
            hi: rat_to_f64(&self.hi),
            ends: self.pieces.iter().map(|p| rat_to_f64(&p.to)).collect(),
            polys: self.pieces.iter().map(|p| p.poly.coeffs_f64()).collect(),
            overrides: self
                .overrides
                .iter()
                .map(|o| (rat_to_f64(&o.at), rat_to_f64(&o.value)))
                .collect(),
        }
    }
}

/// Float mirror of a [`PiecewiseFunc`] for oracle computations.
#[derive(Debug, Clone)]
pub struct F64Func {
    lo: f64,
    hi: f64,
    ends: Vec<f64>,
    polys: Vec<Vec<f64>>,
    overrides: Vec<(f64, f64)>,
}

impl F64Func {
    fn horner(coeffs: &[f64], t: f64) -> f64 {
        coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c)
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn eval(&self, t: f64, side: Side) -> f64 {
        let idx = match side {
            Side::Right => self.ends.partition_point(|e| *e <= t),
            _ => self.ends.partition_point(|e| *e < t),
        }
        .min(self.polys.len() - 1);
        if matches!(side, Side::At) {
            if let Ok(i) = self
                .overrides
                .binary_search_by(|(at, _)| at.partial_cmp(&t).expect("finite"))
            {
                return self.overrides[i].1;
            }
        }
        Self::horner(&self.polys[idx], t)
    }
}

// ---------------------------------------------------------------------------
// funcspec parsing and canonical serialization
// ---------------------------------------------------------------------------

fn number_from_value(v: &Value, what: &str) -> Result<Rat> {
    match v {
        Value::Number(n) => parse_number(&n.to_string()),
        Value::String(s) => parse_number(s),
        other => Err(Error::Parse(format!("{what}: expected a number, got {other}"))),
    }
}

fn expect_array<'v>(v: &'v Value, what: &str) -> Result<&'v Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("{what}: expected an array")))
}

/// Parses a funcspec document:
/// `{"domain": [a, b], "pieces": [{"from", "to", "poly": [c0, ..]}, ..],
///   "points": [{"at", "value"}, ..]}`.
/// Numbers may be JSON numbers, decimal strings, or exact rationals "p/q".
pub fn parse_funcspec(text: &str) -> Result<PiecewiseFunc> {
    let doc: Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("funcspec: {e}")))?;
    let obj = doc
        .as_object()
        .ok_or_else(|| Error::Parse("funcspec: expected a JSON object".into()))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "domain" | "pieces" | "points") {
            return Err(Error::Parse(format!("funcspec: unknown key `{key}`")));
        }
    }
    let domain = expect_array(
        obj.get("domain")
            .ok_or_else(|| Error::Parse("funcspec: missing `domain`".into()))?,
        "domain",
    )?;
    if domain.len() != 2 {
        return Err(Error::Parse("domain: expected [a, b]".into()));
    }
    let lo = number_from_value(&domain[0], "domain[0]")?;
    let hi = number_from_value(&domain[1], "domain[1]")?;
    let pieces_val = expect_array(
        obj.get("pieces")
            .ok_or_else(|| Error::Parse("funcspec: missing `pieces`".into()))?,
        "pieces",
    )?;
    let mut pieces = Vec::with_capacity(pieces_val.len());
    for (i, pv) in pieces_val.iter().enumerate() {
        let po = pv
            .as_object()
            .ok_or_else(|| Error::Parse(format!("pieces[{i}]: expected an object")))?;
        let from = number_from_value(
            po.get("from")
                .ok_or_else(|| Error::Parse(format!("pieces[{i}]: missing `from`")))?,
            "from",
        )?;
        let to = number_from_value(
            po.get("to")
                .ok_or_else(|| Error::Parse(format!("pieces[{i}]: missing `to`")))?,
            "to",
        )?;
        let coeffs = expect_array(
            po.get("poly")
                .ok_or_else(|| Error::Parse(format!("pieces[{i}]: missing `poly`")))?,
            "poly",
        )?
        .iter()
        .map(|c| number_from_value(c, "poly coefficient"))
        .collect::<Result<Vec<Rat>>>()?;
        pieces.push(Piece { from, to, poly: Poly::new(coeffs) });
    }
    let mut overrides = Vec::new();
    if let Some(points) = obj.get("points") {
        for (i, ov) in expect_array(points, "points")?.iter().enumerate() {
            let oo = ov
                .as_object()
                .ok_or_else(|| Error::Parse(format!("points[{i}]: expected an object")))?;
            let at = number_from_value(
                oo.get("at")
                    .ok_or_else(|| Error::Parse(format!("points[{i}]: missing `at`")))?,
                "at",
            )?;
            let value = number_from_value(
                oo.get("value")
                    .ok_or_else(|| Error::Parse(format!("points[{i}]: missing `value`")))?,
                "value",
            )?;
            overrides.push(PointOverride { at, value });
        }
    }
    PiecewiseFunc::new((lo, hi), pieces, overrides)
}

/// Canonical serialization: pieces and points ascending, every number in
/// exact rational text form. `parse_funcspec` of the output reproduces the
/// function exactly.
pub fn serialize_funcspec(f: &PiecewiseFunc) -> String {
    let num = |r: &Rat| Value::String(format_rat(r));
    let pieces: Vec<Value> = f
        .pieces()
        .iter()
        .map(|p| {
            json!({
                "from": num(&p.from),
                "to": num(&p.to),
                "poly": p.poly.coeffs().iter().map(num).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut doc = json!({
        "domain": [num(f.lo()), num(f.hi())],
        "pieces": pieces,
    });
    if !f.overrides().is_empty() {
        let points: Vec<Value> = f
            .overrides()
            .iter()
            .map(|o| json!({ "at": num(&o.at), "value": num(&o.value) }))
            .collect();
        doc["points"] = Value::Array(points);
    }
    doc.to_string()
}
