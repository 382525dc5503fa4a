//! Thin wrapper over `astro_float` so call sites read like ordinary arithmetic.

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign, WORD_BIT_SIZE};
use num_bigint::BigInt;
use num_rational::BigRational;

const RM: RoundingMode = RoundingMode::ToEven;

pub(crate) struct Ctx {
    pub p: usize,
    cc: Consts,
}

impl Ctx {
    pub fn new(p: usize) -> Self {
        let cc = Consts::new().expect("constant cache allocation");
        Ctx { p, cc }
    }

    pub fn f64(&self, x: f64) -> BigFloat {
        BigFloat::from_f64(x, self.p.max(64))
    }

    pub fn int(&self, i: i64) -> BigFloat {
        BigFloat::from_i64(i, self.p)
    }

    pub fn uint(&self, i: u64) -> BigFloat {
        BigFloat::from_u64(i, self.p)
    }

    pub fn big_int(&mut self, i: &BigInt) -> BigFloat {
        BigFloat::parse(&i.to_string(), Radix::Dec, self.p, RM, &mut self.cc)
    }

    pub fn rational(&mut self, r: &BigRational) -> BigFloat {
        let n = self.big_int(r.numer());
        let d = self.big_int(r.denom());
        self.div(&n, &d)
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.p, RM)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.p, RM)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.p, RM)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.p, RM)
    }

    pub fn powi(&self, a: &BigFloat, n: usize) -> BigFloat {
        a.powi(n, self.p, RM)
    }

    pub fn cos(&mut self, a: &BigFloat) -> BigFloat {
        a.cos(self.p, RM, &mut self.cc)
    }

    pub fn sin(&mut self, a: &BigFloat) -> BigFloat {
        a.sin(self.p, RM, &mut self.cc)
    }

    pub fn zero(&self) -> BigFloat {
        BigFloat::from_u64(0, self.p)
    }
}

/// Nearest `f64` (ties resolved on the 128 leading mantissa bits).
pub(crate) fn to_f64(x: &BigFloat) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_inf_pos() {
        return f64::INFINITY;
    }
    if x.is_inf_neg() {
        return f64::NEG_INFINITY;
    }
    let Some((words, _, sign, exp, _)) = x.as_raw_parts() else {
        return f64::NAN;
    };
    // value = 0.m * 2^exp, words little-endian
    let mut top: u128 = 0;
    let mut taken = 0usize;
    for w in words.iter().rev() {
        if taken + WORD_BIT_SIZE > 128 {
            break;
        }
        top = (top << WORD_BIT_SIZE) | (*w as u128);
        taken += WORD_BIT_SIZE;
    }
    if top == 0 {
        return 0.0;
    }
    let m = top as f64;
    let e = exp as i32 - taken as i32;
    let r = scale2(m, e);
    if sign == Sign::Neg {
        -r
    } else {
        r
    }
}

fn scale2(mut m: f64, mut e: i32) -> f64 {
    while e > 1000 {
        m *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        m *= 2f64.powi(-1000);
        e += 1000;
    }
    m * 2f64.powi(e)
}
