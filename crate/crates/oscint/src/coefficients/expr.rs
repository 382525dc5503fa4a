//! Parser and extended-precision evaluator for the tabulated closed forms.
//!
//! Grammar: integers, `v`, `cK` / `sK` for cos(K v/2) / sin(K v/2), the four
//! binary operators, unary minus, `^` with an integer exponent, parentheses.

use std::collections::BTreeMap;

use astro_float::BigFloat;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::ext::Ctx;

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Node {
    Num(u64),
    V,
    Cos(u32),
    Sin(u32),
    Neg(Box<Node>),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Div(Box<Node>, Box<Node>),
    Pow(Box<Node>, u32),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(u64),
    V,
    Cos(u32),
    Sin(u32),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<Tok>, String> {
    let b = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |i: &mut usize| -> Result<u64, String> {
        let start = *i;
        while *i < b.len() && b[*i].is_ascii_digit() {
            *i += 1;
        }
        src[start..*i]
            .parse::<u64>()
            .map_err(|e| format!("bad integer at {start}: {e}"))
    };
    while i < b.len() {
        match b[i] {
            c if c.is_ascii_whitespace() => i += 1,
            c if c.is_ascii_digit() => out.push(Tok::Num(digits(&mut i)?)),
            b'v' => {
                out.push(Tok::V);
                i += 1;
            }
            b'c' | b's' => {
                let cos = b[i] == b'c';
                i += 1;
                let k = digits(&mut i)? as u32;
                out.push(if cos { Tok::Cos(k) } else { Tok::Sin(k) });
            }
            c @ (b'+' | b'-' | b'*' | b'/' | b'^' | b'(' | b')') => {
                out.push(Tok::Op(c as char));
                i += 1;
            }
            c => return Err(format!("unexpected '{}' at {i}", c as char)),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some(Tok::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn sum(&mut self) -> Result<Node, String> {
        let mut lhs = self.product()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.product()?;
            lhs = if op == '+' {
                Node::Add(Box::new(lhs), Box::new(rhs))
            } else {
                Node::Sub(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn product(&mut self) -> Result<Node, String> {
        let mut lhs = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = if op == '*' {
                Node::Mul(Box::new(lhs), Box::new(rhs))
            } else {
                Node::Div(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Node, String> {
        if self.peek_op() == Some('-') {
            self.pos += 1;
            return Ok(Node::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Node, String> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            match self.toks.get(self.pos) {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    return Ok(Node::Pow(Box::new(base), *n as u32));
                }
                _ => return Err(format!("expected exponent at token {}", self.pos)),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Node, String> {
        let t = self
            .toks
            .get(self.pos)
            .cloned()
            .ok_or_else(|| "unexpected end".to_string())?;
        self.pos += 1;
        match t {
            Tok::Num(n) => Ok(Node::Num(n)),
            Tok::V => Ok(Node::V),
            Tok::Cos(k) => Ok(Node::Cos(k)),
            Tok::Sin(k) => Ok(Node::Sin(k)),
            Tok::Op('(') => {
                let e = self.sum()?;
                if self.peek_op() != Some(')') {
                    return Err(format!("missing ')' at token {}", self.pos));
                }
                self.pos += 1;
                Ok(e)
            }
            Tok::Op(c) => Err(format!("unexpected '{c}' at token {}", self.pos - 1)),
        }
    }
}

pub(crate) fn parse(src: &str) -> Result<Node, String> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
    };
    let e = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(format!("trailing input at token {}", p.pos));
    }
    Ok(e)
}

/// Trig symbol: `(is_cos, K)` for cos/sin(K v/2).
pub(crate) type TrigKey = (bool, u32);

/// Product of explicit factors: `coef * v^v_pow * prod trig^e`.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Monomial {
    pub coef: BigRational,
    pub v_pow: i32,
    pub trig: BTreeMap<TrigKey, i32>,
}

impl Monomial {
    fn one() -> Self {
        Monomial {
            coef: BigRational::one(),
            v_pow: 0,
            trig: BTreeMap::new(),
        }
    }

    /// Order of the zero at v = 0 (sine factors and powers of v vanish there).
    pub fn zero_order(&self) -> i32 {
        self.v_pow
            + self
                .trig
                .iter()
                .filter(|((is_cos, _), _)| !is_cos)
                .map(|(_, e)| *e)
                .sum::<i32>()
    }

    pub fn divide(&self, other: &Monomial) -> Monomial {
        let mut trig = self.trig.clone();
        for (k, e) in &other.trig {
            *trig.entry(*k).or_insert(0) -= e;
        }
        trig.retain(|_, e| *e != 0);
        Monomial {
            coef: &self.coef / &other.coef,
            v_pow: self.v_pow - other.v_pow,
            trig,
        }
    }

    pub fn max_k(&self) -> u32 {
        self.trig.keys().map(|(_, k)| *k).max().unwrap_or(0)
    }
}

/// Split the top-level product chain into explicit monomial factors and the
/// remaining factors, which carry all of the cancellation.
pub(crate) fn split_monomial(node: &Node) -> (Monomial, Vec<(Node, bool)>) {
    let mut mono = Monomial::one();
    let mut rest = Vec::new();
    collect(node, true, &mut mono, &mut rest);
    (mono, rest)
}

fn collect(node: &Node, up: bool, mono: &mut Monomial, rest: &mut Vec<(Node, bool)>) {
    let sign = if up { 1 } else { -1 };
    match node {
        Node::Mul(a, b) => {
            collect(a, up, mono, rest);
            collect(b, up, mono, rest);
        }
        Node::Div(a, b) => {
            collect(a, up, mono, rest);
            collect(b, !up, mono, rest);
        }
        Node::Neg(a) => {
            mono.coef = -mono.coef.clone();
            collect(a, up, mono, rest);
        }
        Node::Num(n) => {
            let n = BigRational::from_integer(BigInt::from(*n));
            mono.coef = if up { &mono.coef * n } else { &mono.coef / n };
        }
        Node::V => mono.v_pow += sign,
        Node::Cos(k) => *mono.trig.entry((true, *k)).or_insert(0) += sign,
        Node::Sin(k) => *mono.trig.entry((false, *k)).or_insert(0) += sign,
        Node::Pow(base, e) if is_atom(base) => {
            for _ in 0..*e {
                collect(base, up, mono, rest);
            }
        }
        other => rest.push((other.clone(), up)),
    }
}

fn is_atom(n: &Node) -> bool {
    matches!(n, Node::V | Node::Cos(_) | Node::Sin(_) | Node::Num(_))
}

pub(crate) fn max_k(node: &Node) -> u32 {
    match node {
        Node::Cos(k) | Node::Sin(k) => *k,
        Node::Num(_) | Node::V => 0,
        Node::Neg(a) | Node::Pow(a, _) => max_k(a),
        Node::Add(a, b) | Node::Sub(a, b) | Node::Mul(a, b) | Node::Div(a, b) => {
            max_k(a).max(max_k(b))
        }
    }
}

/// cos(K v/2) and sin(K v/2) for K = 0..=kmax, built by angle addition from
/// a single cos/sin evaluation.
pub(crate) struct TrigTable {
    pub cos: Vec<BigFloat>,
    pub sin: Vec<BigFloat>,
}

impl TrigTable {
    pub fn new(ctx: &mut Ctx, v: &BigFloat, kmax: u32) -> Self {
        let half = ctx.div(v, &ctx.int(2));
        let c1 = ctx.cos(&half);
        let s1 = ctx.sin(&half);
        let mut cos = vec![ctx.int(1), c1.clone()];
        let mut sin = vec![ctx.zero(), s1.clone()];
        for k in 2..=kmax.max(1) as usize {
            let c = ctx.sub(&ctx.mul(&cos[k - 1], &c1), &ctx.mul(&sin[k - 1], &s1));
            let s = ctx.add(&ctx.mul(&sin[k - 1], &c1), &ctx.mul(&cos[k - 1], &s1));
            cos.push(c);
            sin.push(s);
        }
        TrigTable { cos, sin }
    }
}

pub(crate) fn eval(node: &Node, ctx: &Ctx, v: &BigFloat, t: &TrigTable) -> BigFloat {
    match node {
        Node::Num(n) => ctx.uint(*n),
        Node::V => v.clone(),
        Node::Cos(k) => t.cos[*k as usize].clone(),
        Node::Sin(k) => t.sin[*k as usize].clone(),
        Node::Neg(a) => eval(a, ctx, v, t).neg(),
        Node::Add(a, b) => ctx.add(&eval(a, ctx, v, t), &eval(b, ctx, v, t)),
        Node::Sub(a, b) => ctx.sub(&eval(a, ctx, v, t), &eval(b, ctx, v, t)),
        Node::Mul(a, b) => ctx.mul(&eval(a, ctx, v, t), &eval(b, ctx, v, t)),
        Node::Div(a, b) => ctx.div(&eval(a, ctx, v, t), &eval(b, ctx, v, t)),
        Node::Pow(a, e) => ctx.powi(&eval(a, ctx, v, t), *e as usize),
    }
}

pub(crate) fn eval_monomial(m: &Monomial, ctx: &mut Ctx, v: &BigFloat, t: &TrigTable) -> BigFloat {
    let mut acc = ctx.rational(&m.coef);
    let mul_pow = |acc: BigFloat, x: &BigFloat, e: i32| -> BigFloat {
        if e == 0 {
            return acc;
        }
        let p = ctx.powi(x, e.unsigned_abs() as usize);
        if e > 0 {
            ctx.mul(&acc, &p)
        } else {
            ctx.div(&acc, &p)
        }
    };
    acc = mul_pow(acc, v, m.v_pow);
    for ((is_cos, k), e) in &m.trig {
        let x = if *is_cos {
            &t.cos[*k as usize]
        } else {
            &t.sin[*k as usize]
        };
        acc = mul_pow(acc, x, *e);
    }
    acc
}
