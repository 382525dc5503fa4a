//! Phase-lag functional, its derivatives at the fitted frequency, and the
//! algebraic order conditions.
//!
//! With `A_j = a_{7-j} + s^2 b_{7-j}`, the phase lag is
//! `PL(s) = (A_0 + 2 sum_{j=1..7} A_j cos(j s)) / (2 sum_{j=1..7} j^2 A_j)`.
//! Everything is evaluated in extended precision: the numerator is the
//! difference of O(1) terms and is as small as `s^16` for the classical method.

use astro_float::BigFloat;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::coefficients::{
    coefficients, CoefficientSet, ExactCoefficientSet, MethodId, Rational, ERROR_CONSTANT,
};
use crate::error::{Error, Result};
use crate::ext::{to_f64, Ctx};

/// Working precision of the extended phase-lag evaluation.
pub const PHASE_LAG_BITS: usize = 320;

/// The eight distinct stencil weights `A_j(s) = a_{7-j} + s^2 b_{7-j}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StencilWeights {
    #[serde(rename = "A")]
    pub a: [f64; 8],
    pub s: f64,
    pub v: f64,
}

pub fn stencil_weights(coeffs: &CoefficientSet, s: f64) -> StencilWeights {
    StencilWeights {
        a: std::array::from_fn(|j| coeffs.a[7 - j] + s * s * coeffs.b[7 - j]),
        s,
        v: coeffs.v,
    }
}

fn big_weights(ctx: &Ctx, a: &[BigFloat], b: &[BigFloat], s: &BigFloat) -> Vec<BigFloat> {
    let s2 = ctx.mul(s, s);
    (0..8)
        .map(|j| ctx.add(&a[7 - j], &ctx.mul(&s2, &b[7 - j])))
        .collect()
}

/// Numerator and denominator of the phase lag.
fn nd(ctx: &mut Ctx, a: &[BigFloat], b: &[BigFloat], s: &BigFloat) -> (BigFloat, BigFloat) {
    let w = big_weights(ctx, a, b, s);
    let c1 = ctx.cos(s);
    let s1 = ctx.sin(s);
    let (mut c, mut sn) = (c1.clone(), s1.clone());
    let mut num = ctx.zero();
    let mut den = ctx.zero();
    for (j, wj) in w.iter().enumerate().skip(1) {
        if j > 1 {
            let nc = ctx.sub(&ctx.mul(&c, &c1), &ctx.mul(&sn, &s1));
            sn = ctx.add(&ctx.mul(&sn, &c1), &ctx.mul(&c, &s1));
            c = nc;
        }
        num = ctx.add(&num, &ctx.mul(wj, &c));
        den = ctx.add(&den, &ctx.mul(&ctx.int((j * j) as i64), wj));
    }
    let two = ctx.int(2);
    (ctx.add(&w[0], &ctx.mul(&two, &num)), ctx.mul(&two, &den))
}

fn ratio_checked(ctx: &Ctx, n: &BigFloat, d: &BigFloat, scale: f64, s: f64) -> Result<BigFloat> {
    if to_f64(d).abs() <= 1e-14 * scale.max(1.0) {
        return Err(Error::DegenerateDenominator { s });
    }
    Ok(ctx.div(n, d))
}

fn weight_scale(a: &[f64; 15], b: &[f64; 15], s: f64) -> f64 {
    (1..8)
        .map(|j| (j * j) as f64 * (a[7 - j].abs() + s * s * b[7 - j].abs()))
        .sum()
}

/// Phase lag of `coeffs` at `s`, the weights taken as exact binary values.
pub fn phase_lag(coeffs: &CoefficientSet, s: f64) -> Result<f64> {
    let mut ctx = Ctx::new(PHASE_LAG_BITS);
    let a: Vec<BigFloat> = coeffs.a.iter().map(|x| ctx.f64(*x)).collect();
    let b: Vec<BigFloat> = coeffs.b.iter().map(|x| ctx.f64(*x)).collect();
    let sb = ctx.f64(s);
    let (n, d) = nd(&mut ctx, &a, &b, &sb);
    let r = ratio_checked(&ctx, &n, &d, weight_scale(&coeffs.a, &coeffs.b, s), s)?;
    Ok(to_f64(&r))
}

/// Numerator `A_0 + 2 sum A_j cos(j s)` alone, the quantity the fitting annihilates.
pub fn phase_lag_numerator(coeffs: &CoefficientSet, s: f64) -> f64 {
    let mut ctx = Ctx::new(PHASE_LAG_BITS);
    let a: Vec<BigFloat> = coeffs.a.iter().map(|x| ctx.f64(*x)).collect();
    let b: Vec<BigFloat> = coeffs.b.iter().map(|x| ctx.f64(*x)).collect();
    let sb = ctx.f64(s);
    to_f64(&nd(&mut ctx, &a, &b, &sb).0)
}

/// Phase lag of exact weights, evaluated with `bits` mantissa bits.
pub fn phase_lag_exact(coeffs: &ExactCoefficientSet, s: f64, bits: usize) -> Result<f64> {
    let mut ctx = Ctx::new(bits.max(64));
    let a: Vec<BigFloat> = coeffs.a.iter().map(|x| ctx.rational(x)).collect();
    let b: Vec<BigFloat> = coeffs.b.iter().map(|x| ctx.rational(x)).collect();
    let sb = ctx.f64(s);
    let (n, d) = nd(&mut ctx, &a, &b, &sb);
    let f = coeffs.to_f64();
    let r = ratio_checked(&ctx, &n, &d, weight_scale(&f.a, &f.b, s), s)?;
    Ok(to_f64(&r))
}

/// A finite-difference estimate with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Derivative {
    pub value: f64,
    pub error: f64,
    pub step: f64,
}

/// k-th derivative of `s -> phase_lag(coefficients(method, v), s)` at `s = v`.
///
/// Central differences of order two with step `eps^(1/(k+2))`, `eps` the unit
/// roundoff of the extended evaluation; the error estimate is the gap to the
/// same formula at twice the step.
pub fn phase_lag_derivative(method: MethodId, v: f64, k: u32) -> Result<Derivative> {
    if k == 0 {
        return Err(Error::InvalidInput(
            "derivative order must be at least 1".into(),
        ));
    }
    let coeffs = coefficients(method, v)?;
    derivative_of(&coeffs, v, k)
}

/// Same as [`phase_lag_derivative`] for an explicit coefficient set.
pub fn derivative_of(coeffs: &CoefficientSet, s0: f64, k: u32) -> Result<Derivative> {
    let mut ctx = Ctx::new(PHASE_LAG_BITS);
    let a: Vec<BigFloat> = coeffs.a.iter().map(|x| ctx.f64(*x)).collect();
    let b: Vec<BigFloat> = coeffs.b.iter().map(|x| ctx.f64(*x)).collect();
    let scale = weight_scale(&coeffs.a, &coeffs.b, s0);
    let eps = (2f64).powi(-(PHASE_LAG_BITS as i32));
    let h = eps.powf(1.0 / (k as f64 + 2.0));
    let d1 = central(&mut ctx, &a, &b, s0, h, k, scale)?;
    let d2 = central(&mut ctx, &a, &b, s0, 2.0 * h, k, scale)?;
    let value = to_f64(&d1);
    let error = to_f64(&ctx.sub(&d1, &d2)).abs() / 3.0;
    Ok(Derivative {
        value,
        error,
        step: h,
    })
}

fn central(
    ctx: &mut Ctx,
    a: &[BigFloat],
    b: &[BigFloat],
    s0: f64,
    h: f64,
    k: u32,
    scale: f64,
) -> Result<BigFloat> {
    // delta^k f / h^k with nodes s0 + (k/2 - i) h
    let hb = ctx.f64(h);
    let s0b = ctx.f64(s0);
    let mut acc = ctx.zero();
    let mut binom = BigInt::one();
    for i in 0..=k {
        if i > 0 {
            binom = binom * BigInt::from(k - i + 1) / BigInt::from(i);
        }
        // offset (k - 2i)/2 * h, exact in binary
        let off = ctx.div(
            &ctx.mul(&ctx.int(k as i64 - 2 * i as i64), &hb),
            &ctx.int(2),
        );
        let s = ctx.add(&s0b, &off);
        let (n, d) = nd(ctx, a, b, &s);
        let pl = ratio_checked(ctx, &n, &d, scale, s0)?;
        let w = ctx.big_int(&binom);
        let term = ctx.mul(&w, &pl);
        acc = if i % 2 == 0 {
            ctx.add(&acc, &term)
        } else {
            ctx.sub(&acc, &term)
        };
    }
    Ok(ctx.div(&acc, &ctx.powi(&hb, k as usize)))
}

/// C_0..C_qmax of the truncation-error expansion.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderConditionVector<T> {
    pub c: Vec<T>,
    pub qmax: usize,
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Exact order conditions of exact weights.
pub fn order_conditions_exact(
    coeffs: &ExactCoefficientSet,
    qmax: usize,
) -> OrderConditionVector<Rational> {
    let moment = |w: &[Rational], q: usize| -> Rational {
        w.iter().enumerate().fold(Rational::zero(), |acc, (j, x)| {
            acc + x * BigRational::from_integer(BigInt::from(j).pow(q as u32))
        })
    };
    let c = (0..=qmax)
        .map(|q| {
            let fa = BigRational::from_integer(factorial(q));
            let mut cq = moment(&coeffs.a, q) / fa;
            if q >= 2 {
                let fb = BigRational::from_integer(factorial(q - 2));
                cq -= moment(&coeffs.b, q - 2) / fb;
            }
            cq
        })
        .collect();
    OrderConditionVector { c, qmax }
}

/// Order conditions of floating weights, summed in extended precision.
pub fn order_conditions(coeffs: &CoefficientSet, qmax: usize) -> OrderConditionVector<f64> {
    let mut ctx = Ctx::new(256);
    let moment = |ctx: &mut Ctx, w: &[f64; 15], q: usize| -> BigFloat {
        let mut acc = ctx.zero();
        for (j, x) in w.iter().enumerate() {
            let jq = ctx.big_int(&BigInt::from(j).pow(q as u32));
            acc = ctx.add(&acc, &ctx.mul(&jq, &ctx.f64(*x)));
        }
        acc
    };
    let c = (0..=qmax)
        .map(|q| {
            let fq = ctx.big_int(&factorial(q));
            let ma = moment(&mut ctx, &coeffs.a, q);
            let mut cq = ctx.div(&ma, &fq);
            if q >= 2 {
                let fb = ctx.big_int(&factorial(q - 2));
                let mb = moment(&mut ctx, &coeffs.b, q - 2);
                cq = ctx.sub(&cq, &ctx.div(&mb, &fb));
            }
            to_f64(&cq)
        })
        .collect();
    OrderConditionVector { c, qmax }
}

/// One term `coefficient * omega^omega_power * y^(derivative_order)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlteTerm {
    pub derivative_order: u32,
    pub omega_power: u32,
    #[serde(serialize_with = "ser_rational")]
    pub coefficient: Rational,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

/// Leading truncation error: `common_factor * sum terms`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Plte {
    #[serde(serialize_with = "ser_rational")]
    pub common_factor: Rational,
    pub terms: Vec<PlteTerm>,
}

pub fn plte_polynomial(method: MethodId) -> Plte {
    let common_factor = BigRational::new(ERROR_CONSTANT.0.into(), ERROR_CONSTANT.1.into());
    let n = (method.derivative_count() + 1) as u32;
    let mut binom = BigInt::one();
    let mut terms = Vec::new();
    for k in 0..=n {
        if k > 0 {
            binom = binom * BigInt::from(n - k + 1) / BigInt::from(k);
        }
        terms.push(PlteTerm {
            derivative_order: 16 - 2 * k,
            omega_power: 2 * k,
            coefficient: BigRational::from_integer(binom.clone()),
        });
    }
    Plte {
        common_factor,
        terms,
    }
}
