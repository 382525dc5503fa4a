//! Coefficients of the symmetric 14-step method and its phase-fitted variants.
//!
//! Every method shares the a-weights `[1, -2, 2, -1, 0, ..., 0, -1, 2, -2, 1]`;
//! only the b-weights differ. The phase-fitted b-weights are ratios of long
//! trigonometric polynomials whose numerator and denominator both vanish to
//! high order as `v -> 0`, so they are evaluated in extended precision with a
//! budget that grows like `m * log2(1/v)`, and replaced by their truncated
//! Taylor series below `v_switch`.

mod expr;
mod tables;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use astro_float::BigFloat;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ext::{to_f64, Ctx};
use expr::{Monomial, Node, TrigTable};

/// Exact rational number with arbitrary-precision parts, always in lowest terms.
pub type Rational = BigRational;

/// Number of steps of the method.
pub const STEPS: usize = 14;

/// The a-weights shared by every method in the family.
pub const A_PATTERN: [i64; 15] = [1, -2, 2, -1, 0, 0, 0, 0, 0, 0, 0, -1, 2, -2, 1];

/// b_1..b_7 of the classical method.
pub const CLASSICAL_B: [(i64, i64); 7] = [
    (433489274083, 237758976000),
    (-28417333297, 4953312000),
    (930518896733, 39626496000),
    (-176930551859, 2971987200),
    (7854755921, 65228800),
    (-146031020287, 825552000),
    (577045151693, 2830464000),
];

/// Error constant of the classical method (coefficient of h^16 y^(16)).
pub const ERROR_CONSTANT: (i64, i64) = (152802083671, 2853107712000);

/// Series coefficients are tabulated through this power of v.
pub const SERIES_DEGREE: u32 = 10;

/// Largest v accepted by [`taylor_b`]. The truncation error there is about
/// 1e-5 relative for the most heavily fitted method.
pub const TAYLOR_RADIUS: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodId {
    Classical,
    PFD0,
    PFD1,
    PFD2,
    PFD3,
    PFD4,
    PFD5,
    PFD6,
}

impl MethodId {
    pub const ALL: [MethodId; 8] = [
        MethodId::Classical,
        MethodId::PFD0,
        MethodId::PFD1,
        MethodId::PFD2,
        MethodId::PFD3,
        MethodId::PFD4,
        MethodId::PFD5,
        MethodId::PFD6,
    ];

    pub const FITTED: [MethodId; 7] = [
        MethodId::PFD0,
        MethodId::PFD1,
        MethodId::PFD2,
        MethodId::PFD3,
        MethodId::PFD4,
        MethodId::PFD5,
        MethodId::PFD6,
    ];

    /// Number of vanished phase-lag derivatives; -1 for the classical method.
    pub fn derivative_count(self) -> i32 {
        match self.fitted_index() {
            Some(i) => i as i32,
            None => -1,
        }
    }

    pub fn fitted(i: usize) -> Option<Self> {
        Self::FITTED.get(i).copied()
    }

    pub fn fitted_index(self) -> Option<usize> {
        Self::FITTED.iter().position(|m| *m == self)
    }

    pub fn slug(self) -> &'static str {
        match self {
            MethodId::Classical => "classical",
            MethodId::PFD0 => "pfd0",
            MethodId::PFD1 => "pfd1",
            MethodId::PFD2 => "pfd2",
            MethodId::PFD3 => "pfd3",
            MethodId::PFD4 => "pfd4",
            MethodId::PFD5 => "pfd5",
            MethodId::PFD6 => "pfd6",
        }
    }
}

impl fmt::Display for MethodId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.fitted_index() {
            Some(i) => write!(f, "PF-D{i}"),
            None => write!(f, "Classical"),
        }
    }
}

impl FromStr for MethodId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase().replace(['-', '_'], "");
        if t == "classical" || t == "qt" {
            return Ok(MethodId::Classical);
        }
        t.strip_prefix("pfd")
            .and_then(|d| d.parse::<usize>().ok())
            .and_then(MethodId::fitted)
            .ok_or_else(|| Error::InvalidInput(format!("unknown method '{s}'")))
    }
}

/// The 15 a- and b-weights of one method at one fitted frequency.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientSet {
    pub method: MethodId,
    pub v: f64,
    pub a: [f64; 15],
    pub b: [f64; 15],
    /// Mantissa bits of the evaluation that produced `b` (53 for plain doubles).
    pub precision_bits_used: usize,
}

impl CoefficientSet {
    fn from_half(method: MethodId, v: f64, half: &[f64; 7], bits: usize) -> Self {
        let mut b = [0.0; 15];
        for (j, x) in half.iter().enumerate() {
            b[j + 1] = *x;
            b[13 - j] = *x;
        }
        CoefficientSet {
            method,
            v,
            a: A_PATTERN.map(|x| x as f64),
            b,
            precision_bits_used: bits,
        }
    }

    /// b_1..b_7.
    pub fn b_half(&self) -> [f64; 7] {
        std::array::from_fn(|j| self.b[j + 1])
    }
}

/// Exact weights; rationals serialize as `"numerator/denominator"` strings.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExactCoefficientSet {
    pub method: MethodId,
    #[serde(serialize_with = "ser_rationals")]
    pub a: Vec<Rational>,
    #[serde(serialize_with = "ser_rationals")]
    pub b: Vec<Rational>,
}

fn ser_rationals<S: Serializer>(xs: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|r| format!("{}/{}", r.numer(), r.denom())))
}

impl ExactCoefficientSet {
    pub fn to_f64(&self) -> CoefficientSet {
        CoefficientSet {
            method: self.method,
            v: 0.0,
            a: std::array::from_fn(|j| rational_to_f64(&self.a[j])),
            b: std::array::from_fn(|j| rational_to_f64(&self.b[j])),
            precision_bits_used: 53,
        }
    }
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub(crate) fn ratio(n: i128, d: i128) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact classical weights.
pub fn classical_coefficients() -> ExactCoefficientSet {
    let a = A_PATTERN
        .iter()
        .map(|x| BigRational::from_integer(BigInt::from(*x)))
        .collect();
    let mut b = vec![Rational::zero(); 15];
    for (j, (n, d)) in CLASSICAL_B.iter().enumerate() {
        b[j + 1] = ratio(*n as i128, *d as i128);
        b[13 - j] = b[j + 1].clone();
    }
    ExactCoefficientSet {
        method: MethodId::Classical,
        a,
        b,
    }
}

/// Where the closed-form denominator vanishes and how fast it does so at v = 0.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CancellationProfile {
    pub method: MethodId,
    pub denominator_zero_order: u32,
    pub pole_locations: Vec<f64>,
}

/// Zeros of the denominator in `(0, v_max]`, ascending.
pub fn cancellation_profile(method: MethodId, v_max: f64) -> CancellationProfile {
    let Some(i) = method.fitted_index() else {
        return CancellationProfile {
            method,
            denominator_zero_order: 0,
            pole_locations: Vec::new(),
        };
    };
    let c = &compiled()[i];
    let mut poles = Vec::new();
    for ((is_cos, k), _) in &c.den.trig {
        // cos(K v/2) = 0 at v = (2n+1)pi/K, sin(K v/2) = 0 at v = 2 n pi/K
        let k = *k as f64;
        let mut n = 0u32;
        loop {
            let z = if *is_cos {
                (2 * n + 1) as f64 * std::f64::consts::PI / k
            } else {
                2.0 * (n + 1) as f64 * std::f64::consts::PI / k
            };
            if z > v_max {
                break;
            }
            poles.push(z);
            n += 1;
        }
    }
    poles.sort_by(f64::total_cmp);
    poles.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    CancellationProfile {
        method,
        denominator_zero_order: c.den.zero_order() as u32,
        pole_locations: poles,
    }
}

struct Component {
    /// Explicit numerator prefactor divided by the denominator.
    scale: Monomial,
    /// Remaining numerator factors (`true` multiplies, `false` divides).
    rest: Vec<(Node, bool)>,
}

struct Compiled {
    den: Monomial,
    den_rest: Vec<(Node, bool)>,
    comps: Vec<Option<Component>>,
    /// Cancellation order left after the prefactors are removed.
    m_eff: i32,
    kmax: u32,
}

fn compiled() -> &'static [Compiled] {
    static CELL: OnceLock<Vec<Compiled>> = OnceLock::new();
    CELL.get_or_init(|| {
        (0..7)
            .map(|i| {
                let dn = expr::parse(tables::DENOM[i]).expect("denominator table parses");
                let (den, den_rest) = expr::split_monomial(&dn);
                let mut kmax = 14u32.max(expr::max_k(&dn));
                let mut m_eff = 0;
                let comps = tables::NUMER[i]
                    .iter()
                    .map(|src| {
                        src.map(|s| {
                            let n = expr::parse(s).expect("numerator table parses");
                            kmax = kmax.max(expr::max_k(&n));
                            let (mono, rest) = expr::split_monomial(&n);
                            kmax = kmax.max(mono.max_k());
                            m_eff = m_eff.max(den.zero_order() - mono.zero_order());
                            Component {
                                scale: mono.divide(&den),
                                rest,
                            }
                        })
                    })
                    .collect();
                Compiled {
                    den,
                    den_rest,
                    comps,
                    m_eff,
                    kmax,
                }
            })
            .collect()
    })
}

/// Tunables of the coefficient dispatcher.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoeffOptions {
    /// Below this v the truncated series is used.
    pub v_switch: f64,
    /// Largest accepted fitted frequency.
    pub v_max: f64,
    /// Exclusion radius around denominator zeros.
    pub pole_radius: f64,
    /// Minimum mantissa bits for closed-form evaluation.
    pub precision_floor: usize,
    /// Give up beyond this many bits.
    pub precision_cap: usize,
}

impl Default for CoeffOptions {
    fn default() -> Self {
        CoeffOptions {
            v_switch: 0.05,
            v_max: 6.0,
            pole_radius: 1e-3,
            precision_floor: 64,
            precision_cap: 4096,
        }
    }
}

/// Result of one extended-precision closed-form evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedForm {
    pub b: [f64; 7],
    /// Estimated componentwise relative error, never below one ulp.
    pub rel_error: f64,
    pub bits: usize,
}

/// Starting precision for the closed forms at `v`.
pub fn precision_budget(method: MethodId, v: f64, floor: usize) -> usize {
    let Some(i) = method.fitted_index() else {
        return floor;
    };
    let c = &compiled()[i];
    let lg = (1.0 / v).log2().max(0.0);
    // components rebuilt from the defining conditions lose a few more orders
    let extra = if c.comps.iter().any(Option::is_none) {
        8.0
    } else {
        0.0
    };
    let bits = 53.0 + 20.0 + (c.m_eff as f64 + extra) * lg;
    let bits = (bits.ceil() as usize).max(floor);
    bits.div_ceil(64) * 64
}

fn check_pole(method: MethodId, v: f64, radius: f64) -> Result<()> {
    let prof = cancellation_profile(method, v + radius + 1.0);
    for pole in prof.pole_locations {
        if (v - pole).abs() < radius {
            return Err(Error::PoleProximity {
                method,
                v,
                pole,
                radius,
            });
        }
    }
    Ok(())
}

/// b_1..b_7 from the closed forms, evaluated with `precision_bits` mantissa
/// bits and checked against a second evaluation with 64 more.
pub fn closed_form_b(method: MethodId, v: f64, precision_bits: usize) -> Result<ClosedForm> {
    closed_form_b_with(
        method,
        v,
        precision_bits,
        CoeffOptions::default().pole_radius,
    )
}

fn closed_form_b_with(
    method: MethodId,
    v: f64,
    precision_bits: usize,
    pole_radius: f64,
) -> Result<ClosedForm> {
    let i = method.fitted_index().ok_or_else(|| {
        Error::InvalidInput("closed forms exist only for phase-fitted methods".into())
    })?;
    if !(v > 0.0 && v.is_finite()) {
        return Err(Error::InvalidFrequency {
            method,
            v,
            v_max: f64::INFINITY,
        });
    }
    check_pole(method, v, pole_radius)?;
    let p = precision_bits.max(64);
    let lo = eval_closed(i, v, p);
    let hi = eval_closed(i, v, p + 64);
    let mut err = 0.0f64;
    let mut b = [0.0; 7];
    for j in 0..7 {
        let x = to_f64(&lo[j]);
        let y = to_f64(&hi[j]);
        let d = to_f64(&lo[j].sub(&hi[j], p + 64, astro_float::RoundingMode::ToEven));
        err = err.max(if y == 0.0 { d.abs() } else { (d / y).abs() });
        if !x.is_finite() || !y.is_finite() {
            err = f64::INFINITY;
        }
        b[j] = y;
    }
    if !(err <= 1e-12) {
        return Err(Error::PrecisionInsufficient {
            method,
            v,
            bits: p,
            digits: if err.is_finite() { -err.log10() } else { 0.0 },
        });
    }
    Ok(ClosedForm {
        b,
        rel_error: err.max(f64::EPSILON),
        bits: p,
    })
}

fn eval_closed(i: usize, v: f64, p: usize) -> Vec<BigFloat> {
    let c = &compiled()[i];
    let mut ctx = Ctx::new(p);
    let vb = ctx.f64(v);
    let t = TrigTable::new(&mut ctx, &vb, c.kmax);
    let mut den_rest = ctx.int(1);
    for (node, up) in &c.den_rest {
        let x = expr::eval(node, &ctx, &vb, &t);
        den_rest = if *up {
            ctx.mul(&den_rest, &x)
        } else {
            ctx.div(&den_rest, &x)
        };
    }
    let mut out: Vec<Option<BigFloat>> = c
        .comps
        .iter()
        .map(|comp| {
            comp.as_ref().map(|comp| {
                let mut acc = expr::eval_monomial(&comp.scale, &mut ctx, &vb, &t);
                for (node, up) in &comp.rest {
                    let x = expr::eval(node, &ctx, &vb, &t);
                    acc = if *up {
                        ctx.mul(&acc, &x)
                    } else {
                        ctx.div(&acc, &x)
                    };
                }
                ctx.div(&acc, &den_rest)
            })
        })
        .collect();
    if out.iter().any(Option::is_none) {
        complete(i, &mut out, &mut ctx, &vb, &t);
    }
    out.into_iter().map(|x| x.expect("completed")).collect()
}

/// Rebuild missing b-components from the conditions that define the method:
/// the moment conditions C_2 = ... = C_{2(6-i)} = 0 and the vanishing of the
/// phase-lag numerator and its first i derivatives at s = v.
fn complete(i: usize, b: &mut [Option<BigFloat>], ctx: &mut Ctx, v: &BigFloat, t: &TrigTable) {
    let rows = defining_rows(i, ctx, v, t);
    let unknown: Vec<usize> = (0..7).filter(|m| b[*m].is_none()).collect();
    assert_eq!(unknown.len(), 2, "completion handles exactly two unknowns");
    let reduced: Vec<([BigFloat; 2], BigFloat)> = rows
        .iter()
        .map(|(coef, rhs)| {
            let mut r = rhs.clone();
            for m in 0..7 {
                if let Some(x) = &b[m] {
                    r = ctx.sub(&r, &ctx.mul(&coef[m], x));
                }
            }
            let c0 = coef[unknown[0]].clone();
            let c1 = coef[unknown[1]].clone();
            let scale = if c0.abs().cmp(&c1.abs()).unwrap_or(0) >= 0 {
                c0.abs()
            } else {
                c1.abs()
            };
            if scale.is_zero() {
                return ([c0, c1], r);
            }
            (
                [ctx.div(&c0, &scale), ctx.div(&c1, &scale)],
                ctx.div(&r, &scale),
            )
        })
        .collect();
    // the best-conditioned pair of equations
    let mut best: Option<(usize, usize, BigFloat)> = None;
    for p in 0..reduced.len() {
        for q in p + 1..reduced.len() {
            let det = ctx.sub(
                &ctx.mul(&reduced[p].0[0], &reduced[q].0[1]),
                &ctx.mul(&reduced[p].0[1], &reduced[q].0[0]),
            );
            let better = match &best {
                None => true,
                Some((_, _, d)) => det.abs().cmp(&d.abs()).unwrap_or(0) > 0,
            };
            if better {
                best = Some((p, q, det));
            }
        }
    }
    let (p, q, det) = best.expect("at least two defining conditions");
    let (r0, r1) = (&reduced[p], &reduced[q]);
    let x0 = ctx.div(
        &ctx.sub(&ctx.mul(&r0.1, &r1.0[1]), &ctx.mul(&r0.0[1], &r1.1)),
        &det,
    );
    let x1 = ctx.div(
        &ctx.sub(&ctx.mul(&r0.0[0], &r1.1), &ctx.mul(&r0.1, &r1.0[0])),
        &det,
    );
    b[unknown[0]] = Some(x0);
    b[unknown[1]] = Some(x1);
}

/// Linear conditions `sum_m coef[m] b_{m+1} = rhs` satisfied by PF-Di.
fn defining_rows(
    i: usize,
    ctx: &mut Ctx,
    v: &BigFloat,
    t: &TrigTable,
) -> Vec<([BigFloat; 7], BigFloat)> {
    let mut rows = Vec::new();
    for q in 1..=(6 - i) {
        let big_q = 2 * q as u32;
        let coef = std::array::from_fn(|m| {
            let m = m + 1;
            let mut s = BigInt::zero();
            let js: &[usize] = if m < 7 { &[m, 14 - m] } else { &[7] };
            for j in js {
                s += BigInt::from(*j).pow(big_q - 2);
            }
            let r = BigRational::from_integer(s);
            ctx.rational(&r)
        });
        let mut s = BigInt::zero();
        for (j, a) in A_PATTERN.iter().enumerate() {
            s += BigInt::from(j).pow(big_q) * BigInt::from(*a);
        }
        let rhs = BigRational::new(s, BigInt::from(big_q * (big_q - 1)));
        let rhs = ctx.rational(&rhs);
        rows.push((coef, rhs));
    }
    for k in 0..=i {
        // d^k/ds^k of cos(j s) at s = v
        let dcos = |ctx: &Ctx, j: usize, n: usize| -> BigFloat {
            let (c, s) = (&t.cos[2 * j], &t.sin[2 * j]);
            let base = match n % 4 {
                0 => c.clone(),
                1 => s.neg(),
                2 => c.neg(),
                _ => s.clone(),
            };
            ctx.mul(&ctx.powi(&ctx.int(j as i64), n), &base)
        };
        // d^k/ds^k of s^2 * w_j(s), w_0 = 1, w_j = 2 cos(j s)
        let dw = |ctx: &Ctx, j: usize| -> BigFloat {
            let mut r = ctx.mul(&ctx.mul(v, v), &dcos(ctx, j, k));
            if k >= 1 {
                let f = ctx.mul(&ctx.int(2 * k as i64), v);
                r = ctx.add(&r, &ctx.mul(&f, &dcos(ctx, j, k - 1)));
            }
            if k >= 2 {
                let f = ctx.int((k * (k - 1)) as i64);
                r = ctx.add(&r, &ctx.mul(&f, &dcos(ctx, j, k - 2)));
            }
            if j == 0 {
                r
            } else {
                ctx.mul(&ctx.int(2), &r)
            }
        };
        let coef = std::array::from_fn(|m| dw(ctx, 6 - m));
        let mut rhs = ctx.zero();
        for m in 0..=3usize {
            // a_m multiplies w_{7-m}
            let w = ctx.mul(&ctx.int(2 * A_PATTERN[m]), &dcos(ctx, 7 - m, k));
            rhs = ctx.sub(&rhs, &w);
        }
        rows.push((coef, rhs));
    }
    rows
}

fn series_table() -> &'static [[[f64; 6]; 7]; 7] {
    static CELL: OnceLock<[[[f64; 6]; 7]; 7]> = OnceLock::new();
    CELL.get_or_init(|| {
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                std::array::from_fn(|k| {
                    let (n, d) = tables::SERIES[i][j][k];
                    rational_to_f64(&ratio(n, d))
                })
            })
        })
    })
}

/// Exact series coefficients of b_1..b_7 in powers v^0, v^2, ..., v^10.
pub fn series_coefficients(method: MethodId) -> Vec<[Rational; 6]> {
    match method.fitted_index() {
        Some(i) => (0..7)
            .map(|j| {
                std::array::from_fn(|k| {
                    let (n, d) = tables::SERIES[i][j][k];
                    ratio(n, d)
                })
            })
            .collect(),
        None => CLASSICAL_B
            .iter()
            .map(|(n, d)| {
                std::array::from_fn(|k| {
                    if k == 0 {
                        ratio(*n as i128, *d as i128)
                    } else {
                        Rational::zero()
                    }
                })
            })
            .collect(),
    }
}

/// b_1..b_7 from the truncated series (through v^10).
pub fn taylor_b(method: MethodId, v: f64) -> Result<[f64; 7]> {
    if !(v.abs() <= TAYLOR_RADIUS) {
        return Err(Error::OutOfValidityRange {
            method,
            v,
            radius: TAYLOR_RADIUS,
        });
    }
    let Some(i) = method.fitted_index() else {
        return Ok(classical_coefficients().to_f64().b_half());
    };
    let u = v * v;
    let tab = &series_table()[i];
    Ok(std::array::from_fn(|j| {
        tab[j].iter().rev().fold(0.0, |acc, c| acc * u + c)
    }))
}

/// Coefficients of `method` fitted at `v`, with default options.
pub fn coefficients(method: MethodId, v: f64) -> Result<CoefficientSet> {
    coefficients_with(method, v, &CoeffOptions::default())
}

/// Coefficients of `method` fitted at `v`. The classical method ignores `v`.
pub fn coefficients_with(method: MethodId, v: f64, opts: &CoeffOptions) -> Result<CoefficientSet> {
    if method == MethodId::Classical {
        let mut c = classical_coefficients().to_f64();
        c.v = v;
        return Ok(c);
    }
    if !(v > 0.0 && v <= opts.v_max) {
        return Err(Error::InvalidFrequency {
            method,
            v,
            v_max: opts.v_max,
        });
    }
    if v < opts.v_switch {
        let b = taylor_b(method, v)?;
        return Ok(CoefficientSet::from_half(method, v, &b, 53));
    }
    let mut p = precision_budget(method, v, opts.precision_floor);
    loop {
        let can_grow = p * 2 <= opts.precision_cap;
        match closed_form_b_with(method, v, p, opts.pole_radius) {
            Ok(cf) if cf.rel_error <= 4.0 * f64::EPSILON || !can_grow => {
                return Ok(CoefficientSet::from_half(method, v, &cf.b, cf.bits));
            }
            Err(Error::PrecisionInsufficient { .. }) | Ok(_) if can_grow => p *= 2,
            other => return other.map(|cf| CoefficientSet::from_half(method, v, &cf.b, cf.bits)),
        }
    }
}

/// Relative gap between the two branches at `v`, worst component.
pub fn branch_gap(method: MethodId, v: f64) -> Result<f64> {
    let t = taylor_b(method, v)?;
    let p = precision_budget(method, v, 64);
    let c = closed_form_b(method, v, p)?;
    Ok((0..7)
        .map(|j| ((t[j] - c.b[j]) / c.b[j]).abs())
        .fold(0.0, f64::max))
}
