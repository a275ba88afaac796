//! Exact sparse multivariate polynomials over arbitrary-precision integers.
//!
//! The canonical text rendering (descending graded-lex term order, explicit
//! signs, `*` between factors) is the comparison key used by the golden tests
//! and by the CLI, so [`MPoly::to_canonical_string`] must stay stable.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Result, WchromError};

type Exponents = SmallVec<[u16; 4]>;

/// Exponent vector ordered graded-lex: total degree first, then
/// lexicographically by variable position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Exponents);

impl Monomial {
    fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => self.0.cmp(&other.0),
            ord => ord,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Fixed display precedence for the variable names used by the library.
/// Unknown names sort after these, alphabetically.
fn var_rank(name: &str) -> (usize, &str) {
    const ORDER: [&str; 9] = ["q", "qt", "v", "x", "y", "w", "wt", "t", "s"];
    match ORDER.iter().position(|&n| n == name) {
        Some(i) => (i, name),
        None => (ORDER.len(), name),
    }
}

fn canonical_var_order(a: &str, b: &str) -> Ordering {
    var_rank(a).cmp(&var_rank(b))
}

/// Sparse polynomial in a fixed ordered list of variables with `BigInt`
/// coefficients. The variable list is kept minimal and canonically ordered;
/// binary operations unify variable lists by name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { vars: Vec::new(), terms: BTreeMap::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c: BigInt = c.into();
        let mut p = MPoly::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial(SmallVec::new()), c);
        }
        p
    }

    pub fn one() -> Self {
        MPoly::constant(1)
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        let mut e: Exponents = SmallVec::new();
        e.push(1);
        terms.insert(Monomial(e), BigInt::one());
        MPoly { vars: vec![name.to_string()], terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Iterate terms as (variable-name/exponent pairs, coefficient).
    pub fn terms(&self) -> impl Iterator<Item = (Vec<(&str, u16)>, &BigInt)> {
        self.terms.iter().map(move |(m, c)| {
            let spt = m
                .0
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(i, &e)| (self.vars[i].as_str(), e))
                .collect();
            (spt, c)
        })
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
        // Drop variables that no longer occur so equal polynomials compare equal.
        let n = self.vars.len();
        let mut used = vec![false; n];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        if used.iter().all(|&u| u) && self.terms.keys().all(|m| m.0.len() == n) {
            return;
        }
        let keep: Vec<usize> = (0..n).filter(|&i| used[i]).collect();
        let vars: Vec<String> = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let terms = std::mem::take(&mut self.terms)
            .into_iter()
            .map(|(m, c)| {
                let e: Exponents =
                    keep.iter().map(|&i| m.0.get(i).copied().unwrap_or(0)).collect();
                (Monomial(e), c)
            })
            .collect();
        self.vars = vars;
        self.terms = terms;
    }

    /// Remap `self` onto a superset variable list. `map[i]` gives the position
    /// of `self.vars[i]` in the target list.
    fn remap(&self, target: &[String], map: &[usize]) -> BTreeMap<Monomial, BigInt> {
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut e: Exponents = SmallVec::from_elem(0, target.len());
                for (i, &exp) in m.0.iter().enumerate() {
                    e[map[i]] = exp;
                }
                (Monomial(e), c.clone())
            })
            .collect()
    }

    fn unified(a: &MPoly, b: &MPoly) -> (Vec<String>, BTreeMap<Monomial, BigInt>, BTreeMap<Monomial, BigInt>) {
        if a.vars == b.vars {
            return (a.vars.clone(), a.terms.clone(), b.terms.clone());
        }
        let mut vars: Vec<String> = a.vars.iter().chain(b.vars.iter()).cloned().collect();
        vars.sort_by(|x, y| canonical_var_order(x, y));
        vars.dedup();
        let pos = |name: &str| vars.iter().position(|v| v == name).unwrap();
        let amap: Vec<usize> = a.vars.iter().map(|v| pos(v)).collect();
        let bmap: Vec<usize> = b.vars.iter().map(|v| pos(v)).collect();
        (vars.clone(), a.remap(&vars, &amap), b.remap(&vars, &bmap))
    }

    pub fn add_ref(&self, other: &MPoly) -> MPoly {
        let (vars, mut at, bt) = MPoly::unified(self, other);
        for (m, c) in bt {
            let entry = at.entry(m).or_insert_with(BigInt::zero);
            *entry += c;
        }
        let mut p = MPoly { vars, terms: at };
        p.prune();
        p
    }

    pub fn sub_ref(&self, other: &MPoly) -> MPoly {
        let (vars, mut at, bt) = MPoly::unified(self, other);
        for (m, c) in bt {
            let entry = at.entry(m).or_insert_with(BigInt::zero);
            *entry -= c;
        }
        let mut p = MPoly { vars, terms: at };
        p.prune();
        p
    }

    pub fn mul_ref(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero();
        }
        let (vars, at, bt) = MPoly::unified(self, other);
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &at {
            for (mb, cb) in &bt {
                let e: Exponents = ma
                    .0
                    .iter()
                    .zip(mb.0.iter())
                    .map(|(&x, &y)| x.checked_add(y).expect("exponent overflow"))
                    .collect();
                let entry = terms.entry(Monomial(e)).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        let mut p = MPoly { vars, terms };
        p.prune();
        p
    }

    pub fn neg_ref(&self) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> MPoly {
        let c: BigInt = c.into();
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * &c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut acc = MPoly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    /// Degree in one variable; 0 when absent or zero polynomial.
    pub fn degree_in(&self, var: &str) -> u16 {
        match self.vars.iter().position(|v| v == var) {
            None => 0,
            Some(i) => self
                .terms
                .keys()
                .map(|m| m.0.get(i).copied().unwrap_or(0))
                .max()
                .unwrap_or(0),
        }
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    /// Coefficient of `var^k`: a polynomial in the remaining variables.
    pub fn coeff_of(&self, var: &str, k: u16) -> MPoly {
        let Some(i) = self.vars.iter().position(|v| v == var) else {
            return if k == 0 { self.clone() } else { MPoly::zero() };
        };
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.0.get(i).copied().unwrap_or(0) == k {
                let mut e = m.0.clone();
                e[i] = 0;
                terms.insert(Monomial(e), c.clone());
            }
        }
        let mut p = MPoly { vars: self.vars.clone(), terms };
        p.prune();
        p
    }

    /// Substitute polynomials for variables; unbound variables pass through.
    pub fn substitute(&self, bindings: &HashMap<String, MPoly>) -> MPoly {
        if self.is_zero() {
            return MPoly::zero();
        }
        let bound: Vec<Option<&MPoly>> =
            self.vars.iter().map(|v| bindings.get(v)).collect();
        if bound.iter().all(|b| b.is_none()) {
            return self.clone();
        }
        // Per-variable power cache keeps repeated substitution cheap.
        let mut pow_cache: Vec<HashMap<u16, MPoly>> =
            self.vars.iter().map(|_| HashMap::new()).collect();
        let mut acc = MPoly::zero();
        for (m, c) in &self.terms {
            let mut term = MPoly::constant(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match bound[i] {
                    None => {
                        let mut mono = MPoly::var(&self.vars[i]);
                        mono = mono.pow(e as u32);
                        term = term.mul_ref(&mono);
                    }
                    Some(repl) => {
                        let p = pow_cache[i]
                            .entry(e)
                            .or_insert_with(|| repl.pow(e as u32))
                            .clone();
                        term = term.mul_ref(&p);
                    }
                }
            }
            acc = acc.add_ref(&term);
        }
        acc
    }

    pub fn substitute_one(&self, var: &str, value: &MPoly) -> MPoly {
        let mut b = HashMap::new();
        b.insert(var.to_string(), value.clone());
        self.substitute(&b)
    }

    /// Evaluate with every variable bound to an exact rational.
    pub fn eval_rational(&self, bindings: &HashMap<String, BigRational>) -> Result<BigRational> {
        for v in &self.vars {
            if !bindings.contains_key(v) {
                return Err(WchromError::UnboundVariable(v.clone()));
            }
        }
        let vals: Vec<&BigRational> = self.vars.iter().map(|v| &bindings[v]).collect();
        let mut pow_cache: Vec<HashMap<u16, BigRational>> =
            self.vars.iter().map(|_| HashMap::new()).collect();
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = pow_cache[i]
                    .entry(e)
                    .or_insert_with(|| crate::poly::rational_pow(vals[i], e))
                    .clone();
                t *= p;
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn eval_f64(&self, bindings: &HashMap<String, f64>) -> Result<f64> {
        for v in &self.vars {
            if !bindings.contains_key(v) {
                return Err(WchromError::UnboundVariable(v.clone()));
            }
        }
        let vals: Vec<f64> = self.vars.iter().map(|v| bindings[v]).collect();
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            let mut t = c.to_f64().unwrap_or(f64::NAN);
            for (i, &e) in m.0.iter().enumerate() {
                t *= vals[i].powi(e as i32);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Keep one variable, bind all others to exact rationals, producing a
    /// dense univariate slice with rational coefficients.
    pub fn slice(&self, keep: &str, fixed: &HashMap<String, BigRational>) -> Result<UniSlice> {
        for v in &self.vars {
            if v != keep && !fixed.contains_key(v) {
                return Err(WchromError::UnboundVariable(v.clone()));
            }
        }
        let deg = self.degree_in(keep) as usize;
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        let ki = self.vars.iter().position(|v| v == keep);
        let mut pow_cache: Vec<HashMap<u16, BigRational>> =
            self.vars.iter().map(|_| HashMap::new()).collect();
        for (m, c) in &self.terms {
            let mut t = BigRational::from(c.clone());
            let mut k = 0usize;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if Some(i) == ki {
                    k = e as usize;
                    continue;
                }
                let val = &fixed[&self.vars[i]];
                let p = pow_cache[i]
                    .entry(e)
                    .or_insert_with(|| crate::poly::rational_pow(val, e))
                    .clone();
                t *= p;
            }
            coeffs[k] += t;
        }
        let mut s = UniSlice { var: keep.to_string(), coeffs };
        s.trim();
        Ok(s)
    }

    /// Exact division. Returns `None` when `self` is not a multiple of `d`
    /// within integer-coefficient polynomials.
    pub fn divide_exact(&self, d: &MPoly) -> Option<MPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while !rem.is_zero() {
            // Re-unify every round: cancellation can prune variables from the
            // remainder, which would break positional exponent alignment.
            let (vars, rt, dt) = MPoly::unified(&rem, d);
            let rem_u = MPoly { vars: vars.clone(), terms: rt };
            let d_u = MPoly { vars: vars.clone(), terms: dt };
            let (dlm, dlc) = d_u.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone()))?;
            let (rlm, rlc) =
                rem_u.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone()))?;
            let mut e: Exponents = SmallVec::with_capacity(rlm.0.len());
            for (i, &re) in rlm.0.iter().enumerate() {
                let de = dlm.0[i];
                if re < de {
                    return None;
                }
                e.push(re - de);
            }
            if (&rlc % &dlc) != BigInt::zero() {
                return None;
            }
            let qc = &rlc / &dlc;
            let mut tterms = BTreeMap::new();
            tterms.insert(Monomial(e), qc);
            let t = MPoly { vars, terms: tterms };
            quot = quot.add_ref(&t);
            rem = rem_u.sub_ref(&t.mul_ref(&d_u));
        }
        Some(quot)
    }

    pub fn is_divisible_by(&self, d: &MPoly) -> bool {
        self.divide_exact(d).is_some()
    }

    /// Rewrite in the shifted basis qt = q-1, wt = w-1 (and generally
    /// `name` -> `name`t for the requested variables).
    pub fn to_shifted_basis(&self, shifts: &[(&str, &str)]) -> MPoly {
        let mut bindings = HashMap::new();
        for (from, to) in shifts {
            bindings.insert(
                from.to_string(),
                MPoly::var(to).add_ref(&MPoly::one()),
            );
        }
        self.substitute(&bindings)
    }

    /// Inverse of [`MPoly::to_shifted_basis`].
    pub fn from_shifted_basis(&self, shifts: &[(&str, &str)]) -> MPoly {
        let mut bindings = HashMap::new();
        for (from, to) in shifts {
            bindings.insert(
                to.to_string(),
                MPoly::var(from).sub_ref(&MPoly::one()),
            );
        }
        self.substitute(&bindings)
    }

    pub fn all_coefficients_positive(&self) -> bool {
        !self.is_zero() && self.terms.values().all(|c| c.is_positive())
    }

    /// Canonical rendering: descending graded-lex, explicit signs, `*` and `^`.
    pub fn to_canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            let constant_term = m.0.iter().all(|&e| e == 0);
            if !abs.is_one() || constant_term {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if e == 1 {
                    factors.push(self.vars[i].clone());
                } else {
                    factors.push(format!("{}^{}", self.vars[i], e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Parse the canonical grammar (plus parentheses, so factored golden
    /// expressions can be written verbatim).
    pub fn parse(text: &str) -> Result<MPoly> {
        Parser::new(text).parse_all()
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

/// Parse `a/b`, a decimal like `-0.25`, or an integer, all exactly.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    use std::str::FromStr;
    let bad = |s: &str| WchromError::InvalidArgument(format!("cannot parse `{s}` as a rational"));
    let t = s.trim();
    if let Some((a, b)) = t.split_once('/') {
        let num = BigInt::from_str(a.trim()).map_err(|_| bad(s))?;
        let den = BigInt::from_str(b.trim()).map_err(|_| bad(s))?;
        if den.is_zero() {
            return Err(bad(s));
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        let digits = format!("{whole}{frac}");
        let num = BigInt::from_str(&digits).map_err(|_| bad(s))?;
        let den = BigInt::from(10u32).pow(frac.len() as u32);
        return Ok(BigRational::new(num, den));
    }
    let num = BigInt::from_str(t).map_err(|_| bad(s))?;
    Ok(BigRational::from_integer(num))
}

macro_rules! impl_binops {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                self.$inner(rhs)
            }
        }
        impl $trait for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                self.$inner(&rhs)
            }
        }
        impl $trait<&MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                self.$inner(rhs)
            }
        }
        impl $trait<MPoly> for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                self.$inner(&rhs)
            }
        }
    };
}

impl_binops!(Add, add, add_ref);
impl_binops!(Sub, sub, sub_ref);
impl_binops!(Mul, mul, mul_ref);

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.neg_ref()
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.neg_ref()
    }
}

pub fn rational_pow(base: &BigRational, e: u16) -> BigRational {
    let mut acc = BigRational::one();
    let mut b = base.clone();
    let mut e = e as u32;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { bytes: text.as_bytes(), pos: 0 }
    }

    fn parse_all(mut self) -> Result<MPoly> {
        let p = self.expr()?;
        self.skip_ws();
        if self.pos != self.bytes.len() {
            return Err(self.err("trailing input"));
        }
        Ok(p)
    }

    fn err(&self, msg: &str) -> WchromError {
        WchromError::PolyParse(format!("{msg} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg_ref()
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add_ref(&t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub_ref(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = acc.mul_ref(&f);
                }
                // Implicit multiplication before '(' or a letter, as in "2(w-1)".
                Some(c) if c == b'(' || c.is_ascii_alphabetic() => {
                    let f = self.factor()?;
                    acc = acc.mul_ref(&f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MPoly> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.err("expected exponent"));
            }
            let e: u32 = std::str::from_utf8(&self.bytes[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| self.err("exponent out of range"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<MPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = std::str::from_utf8(&self.bytes[start..self.pos])
                    .unwrap()
                    .parse()
                    .unwrap();
                Ok(MPoly::constant(n))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                self.pos += 1;
                while self.pos < self.bytes.len()
                    && (self.bytes[self.pos].is_ascii_alphanumeric()
                        || self.bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                Ok(MPoly::var(name))
            }
            _ => Err(self.err("expected factor")),
        }
    }
}

/// Dense univariate polynomial with exact rational coefficients, produced by
/// slicing an [`MPoly`] at fixed values of the other variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniSlice {
    pub var: String,
    pub coeffs: Vec<BigRational>,
}

impl UniSlice {
    pub fn new(var: &str, coeffs: Vec<BigRational>) -> Self {
        let mut s = UniSlice { var: var.to_string(), coeffs };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().map(|c| c.is_zero()) == Some(true) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.coeffs.push(BigRational::zero());
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }

    pub fn derivative(&self) -> UniSlice {
        if self.degree() == 0 {
            return UniSlice::new(&self.var, vec![BigRational::zero()]);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from(BigInt::from(k)))
            .collect();
        UniSlice::new(&self.var, coeffs)
    }

    /// 1-norm of the coefficient vector, for residual certification.
    pub fn coeff_norm_f64(&self) -> f64 {
        self.coeffs.iter().map(|c| c.to_f64().map(f64::abs).unwrap_or(f64::NAN)).sum()
    }
}

/// Coefficient of `q^j` in a (q,w) polynomial: a polynomial in w.
pub fn coeff_alpha(ph: &MPoly, j: u16) -> MPoly {
    ph.coeff_of("q", j)
}

/// Coefficient of `w^j` in a (q,w) polynomial: a polynomial in q.
pub fn coeff_beta(ph: &MPoly, j: u16) -> MPoly {
    ph.coeff_of("w", j)
}

/// beta_j with its guaranteed (q-1) factor removed.
pub fn beta_bar(ph: &MPoly, j: u16) -> Result<MPoly> {
    let b = coeff_beta(ph, j);
    let q1 = MPoly::var("q") - MPoly::one();
    b.divide_exact(&q1)
        .ok_or_else(|| WchromError::Internal(format!("w^{j} coefficient lacks its q-1 factor")))
}
