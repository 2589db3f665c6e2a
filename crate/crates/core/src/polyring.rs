//! Exact Laurent polynomials and rational functions in `q` over the integers.
//!
//! [`LaurentPoly`] stores a dense coefficient vector starting at the lowest
//! exponent present. Every constructor and arithmetic result is canonical:
//! the first and last stored coefficients are nonzero, and zero is the empty
//! vector with `min_exp == 0`. Structural equality is therefore polynomial
//! equality.
//!
//! [`RatFun`] is a plain numerator/denominator pair. It is never reduced by a
//! gcd; only powers of `q` are moved out of the denominator. Equality is decided
//! by cross-multiplication, and congruences modulo powers of a cyclotomic
//! polynomial go through [`RatFun::phi_valuation`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

use crate::cyclotomic::{cyclo, CyclotomicModulus};
use crate::error::{Error, Result};

/// Below this length (of the shorter factor) multiplication is schoolbook.
const KRONECKER_THRESHOLD: usize = 24;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^exp`.
    pub fn monomial<C: Into<BigInt>>(c: C, exp: i64) -> Self {
        Self::from_coeffs(exp, vec![c.into()])
    }

    /// `1 - q^exp`.
    pub fn one_minus_q_pow(exp: i64) -> Self {
        Self::one() - Self::monomial(1, exp)
    }

    /// Builds `sum coeffs[i] * q^(min_exp + i)` and canonicalizes.
    pub fn from_coeffs(min_exp: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { min_exp, coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(min_exp: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(min_exp, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        let trailing = self.coeffs.iter().rev().take_while(|c| c.is_zero()).count();
        self.coeffs.truncate(self.coeffs.len() - trailing);
        let leading = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if leading == self.coeffs.len() {
            self.coeffs.clear();
            self.min_exp = 0;
            return;
        }
        if leading > 0 {
            self.coeffs.drain(..leading);
            self.min_exp += leading as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_exp == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for `c * q^e` with `c != 0`.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Lowest exponent present; 0 for the zero polynomial.
    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Highest exponent present, `None` for zero.
    pub fn max_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_exp + self.coeffs.len() as i64 - 1)
        }
    }

    /// Degree as an ordinary polynomial (same as `max_exp`).
    pub fn degree(&self) -> Option<i64> {
        self.max_exp()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let idx = exp - self.min_exp;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Iterates over `(exponent, coefficient)` for nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Value at an integer point; `None` at `q = 0` when a negative power is present.
    pub fn eval_int(&self, x: i64) -> Option<BigInt> {
        if x == 0 {
            return if self.min_exp < 0 {
                None
            } else {
                Some(self.coeff(0))
            };
        }
        if x == 1 {
            return Some(self.eval_one());
        }
        let x = BigInt::from(x);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        // acc is the value of q^(-min_exp) * self
        match self.min_exp.cmp(&0) {
            Ordering::Equal => Some(acc),
            Ordering::Greater => Some(acc * x.pow(self.min_exp as u32)),
            Ordering::Less => {
                let d = x.pow((-self.min_exp) as u32);
                // only integral when divisible; callers use this on polynomials
                if (&acc % &d).is_zero() {
                    Some(acc / d)
                } else {
                    None
                }
            }
        }
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            min_exp: self.min_exp + e,
            coeffs: self.coeffs.clone(),
        }
    }

    fn shifted(mut self, e: i64) -> Self {
        if !self.is_zero() {
            self.min_exp += e;
        }
        self
    }

    /// Multiplies by `q^(-min_exp)` so that the constant term is nonzero.
    pub fn strip_monomial(&self) -> Self {
        self.shift(-self.min_exp)
    }

    pub fn scale<C: Into<BigInt>>(&self, c: C) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|x| x * &c).collect(),
        }
    }

    /// Substitutes `q -> q^m` for `m >= 1`.
    pub fn substitute_power(&self, m: i64) -> Self {
        assert!(m >= 1, "substitute_power needs m >= 1");
        if self.is_zero() || m == 1 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * m as usize + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * m as usize] = c.clone();
        }
        Self::from_coeffs(self.min_exp * m, coeffs)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Long division by a monic ordinary polynomial of degree >= 1.
    ///
    /// Requires `self.min_exp() >= 0`. Returns `(quot, rem)` with
    /// `self = quot * divisor + rem` and `deg rem < deg divisor`.
    pub fn divmod_monic(&self, divisor: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly)> {
        if self.min_exp < 0 {
            return Err(Error::Division(format!(
                "dividend has negative exponent q^{}",
                self.min_exp
            )));
        }
        let dg = match divisor.degree() {
            Some(d) if d >= 1 && divisor.min_exp >= 0 => d as usize,
            _ => {
                return Err(Error::Division(format!(
                    "divisor must be an ordinary polynomial of degree >= 1, got {divisor}"
                )))
            }
        };
        if !divisor.leading_coeff().is_some_and(|c| c.is_one()) {
            return Err(Error::Division(format!("divisor is not monic: {divisor}")));
        }
        let Some(df) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        let df = df as usize;
        if df < dg {
            return Ok((Self::zero(), self.clone()));
        }

        // dense copy from exponent 0
        let mut rem = vec![BigInt::zero(); df + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            rem[self.min_exp as usize + i] = c.clone();
        }
        let shift = divisor.min_exp as usize;
        let lower: Vec<(usize, &BigInt)> = divisor.coeffs[..dg - shift]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(t, c)| (t + shift, c))
            .collect();
        let mut quot = vec![BigInt::zero(); df - dg + 1];
        for i in (dg..=df).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut rem[i]);
            let base = i - dg;
            for &(t, g) in &lower {
                sub_mul_assign(&mut rem[base + t], &c, g);
            }
            quot[base] = c;
        }
        rem.truncate(dg);
        Ok((Self::from_coeffs(0, quot), Self::from_coeffs(0, rem)))
    }

    /// Remainder of `q^(-min_exp) * self` modulo a monic polynomial.
    pub fn reduce_mod(&self, modulus: &LaurentPoly) -> Result<LaurentPoly> {
        Ok(self.strip_monomial().divmod_monic(modulus)?.1)
    }

    /// Exact quotient by a monic polynomial, `None` if the remainder is nonzero.
    pub fn div_exact_monic(&self, divisor: &LaurentPoly) -> Result<Option<LaurentPoly>> {
        let (quot, rem) = self.divmod_monic(divisor)?;
        Ok(rem.is_zero().then_some(quot))
    }

    /// Multiplicity of `Phi_n(q)` as a factor; `None` for the zero polynomial.
    pub fn phi_multiplicity(&self, n: u64) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let phi = cyclo(n);
        let mut current = self.strip_monomial();
        let mut count = 0;
        loop {
            match current
                .div_exact_monic(&phi)
                .expect("stripped poly and monic Phi_n")
            {
                Some(q) => {
                    current = q;
                    count += 1;
                }
                None => return Some(count),
            }
        }
    }
}

#[inline]
fn sub_mul_assign(target: &mut BigInt, c: &BigInt, g: &BigInt) {
    if g.is_one() {
        *target -= c;
    } else if (-g).is_one() {
        *target += c;
    } else {
        *target -= c * g;
    }
}

/// Whether `f` vanishes modulo `m`, with the remainder of `q^(-min_exp(f)) f` as witness.
///
/// `q` is a unit modulo `Phi_n(q)^k` because `Phi_n(0) = +-1`, so the shift
/// does not change whether the residue class is zero.
pub fn congruent_zero(f: &LaurentPoly, m: &CyclotomicModulus) -> (bool, LaurentPoly) {
    let rem = f
        .reduce_mod(m.poly())
        .expect("cyclotomic moduli are monic of degree >= 1");
    (rem.is_zero(), rem)
}

// ---------------------------------------------------------------------------
// multiplication

fn mul_schoolbook(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] += x * y;
        }
    }
    out
}

fn split_signs(a: &[BigInt]) -> (Vec<BigUint>, Option<Vec<BigUint>>) {
    let mut pos = Vec::with_capacity(a.len());
    let mut neg = Vec::with_capacity(a.len());
    let mut any_neg = false;
    for c in a {
        match c.sign() {
            Sign::Minus => {
                any_neg = true;
                pos.push(BigUint::zero());
                neg.push(c.magnitude().clone());
            }
            _ => {
                pos.push(c.magnitude().clone());
                neg.push(BigUint::zero());
            }
        }
    }
    (pos, any_neg.then_some(neg))
}

fn max_bits(a: &[BigUint]) -> u64 {
    a.iter().map(|c| c.bits()).max().unwrap_or(0)
}

fn pack(a: &[BigUint], slot: u64) -> BigUint {
    let total_bits = a.len() as u64 * slot;
    let mut words = vec![0u32; (total_bits / 32 + 2) as usize];
    for (i, c) in a.iter().enumerate() {
        let base = i as u64 * slot;
        for (t, d) in c.iter_u32_digits().enumerate() {
            let pos = base + 32 * t as u64;
            let w = (pos / 32) as usize;
            let sh = pos % 32;
            words[w] |= d << sh;
            if sh > 0 {
                words[w + 1] |= d >> (32 - sh);
            }
        }
    }
    BigUint::new(words)
}

fn unpack(x: &BigUint, slot: u64, len: usize) -> Vec<BigUint> {
    let digits = x.to_u32_digits();
    let read = |pos: u64| -> u32 {
        let w = (pos / 32) as usize;
        let sh = pos % 32;
        let lo = digits.get(w).copied().unwrap_or(0) >> sh;
        if sh == 0 {
            lo
        } else {
            lo | digits.get(w + 1).copied().unwrap_or(0) << (32 - sh)
        }
    };
    let words_per_slot = slot.div_ceil(32);
    let tail_bits = slot - 32 * (words_per_slot - 1);
    (0..len)
        .map(|i| {
            let base = i as u64 * slot;
            let mut ws: Vec<u32> = (0..words_per_slot).map(|t| read(base + 32 * t)).collect();
            if tail_bits < 32 {
                if let Some(last) = ws.last_mut() {
                    *last &= (1u32 << tail_bits) - 1;
                }
            }
            BigUint::new(ws)
        })
        .collect()
}

/// Kronecker substitution: evaluate both factors at a power of two large
/// enough that no product coefficient overflows its slot, multiply the two
/// integers, and read the coefficients back.
fn mul_kronecker_unsigned(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let len = a.len() + b.len() - 1;
    let ba = max_bits(a);
    let bb = max_bits(b);
    if ba == 0 || bb == 0 {
        return vec![BigUint::zero(); len];
    }
    let terms = a.len().min(b.len()) as u64;
    let slot = ba + bb + (64 - terms.leading_zeros() as u64) + 1;
    let prod = pack(a, slot) * pack(b, slot);
    unpack(&prod, slot, len)
}

fn mul_kronecker(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (ap, an) = split_signs(a);
    let (bp, bn) = split_signs(b);
    let to_int = |v: Vec<BigUint>| -> Vec<BigInt> { v.into_iter().map(BigInt::from).collect() };
    let mut out = to_int(mul_kronecker_unsigned(&ap, &bp));
    let mut accumulate = |x: &[BigUint], y: &[BigUint], negate: bool| {
        for (o, c) in out.iter_mut().zip(mul_kronecker_unsigned(x, y)) {
            if negate {
                *o -= BigInt::from(c);
            } else {
                *o += BigInt::from(c);
            }
        }
    };
    if let Some(an) = &an {
        accumulate(an, &bp, true);
        if let Some(bn) = &bn {
            accumulate(an, bn, false);
        }
    }
    if let Some(bn) = &bn {
        accumulate(&ap, bn, true);
    }
    out
}

fn mul_dense(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.len().min(b.len()) < KRONECKER_THRESHOLD {
        mul_schoolbook(a, b)
    } else {
        mul_kronecker(a, b)
    }
}

/// Schoolbook product regardless of size. Exposed for cross-checking the
/// fast path.
pub fn mul_naive(f: &LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
    if f.is_zero() || g.is_zero() {
        return LaurentPoly::zero();
    }
    LaurentPoly::from_coeffs(f.min_exp + g.min_exp, mul_schoolbook(&f.coeffs, &g.coeffs))
}

// ---------------------------------------------------------------------------
// operator impls

fn add_into(acc: &mut LaurentPoly, other: &LaurentPoly, negate: bool) {
    if other.is_zero() {
        return;
    }
    if acc.is_zero() {
        *acc = if negate {
            -other.clone()
        } else {
            other.clone()
        };
        return;
    }
    let lo = acc.min_exp.min(other.min_exp);
    let hi = acc.max_exp().unwrap().max(other.max_exp().unwrap());
    if lo < acc.min_exp {
        let pad = (acc.min_exp - lo) as usize;
        acc.coeffs
            .splice(0..0, std::iter::repeat_n(BigInt::zero(), pad));
        acc.min_exp = lo;
    }
    acc.coeffs.resize((hi - lo + 1) as usize, BigInt::zero());
    let off = (other.min_exp - lo) as usize;
    for (i, c) in other.coeffs.iter().enumerate() {
        if negate {
            acc.coeffs[off + i] -= c;
        } else {
            acc.coeffs[off + i] += c;
        }
    }
    acc.normalize();
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        add_into(self, rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        add_into(self, rhs, true);
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if self.is_monomial() && self.coeffs[0].is_one() {
            return rhs.shift(self.min_exp);
        }
        if rhs.is_monomial() && rhs.coeffs[0].is_one() {
            return self.shift(rhs.min_exp);
        }
        LaurentPoly::from_coeffs(
            self.min_exp + rhs.min_exp,
            mul_dense(&self.coeffs, &rhs.coeffs),
        )
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

/// Canonical rendering: increasing exponents, e.g. `q^-2 + 1 + 3*q^5`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let mag = c.magnitude();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}*")?;
                    }
                    if e == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

// ---------------------------------------------------------------------------
// rational functions

/// Multiplicity of `Phi_n` in a rational function, `Infinite` for zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn at_least(self, k: i64) -> bool {
        match self {
            Valuation::Infinite => true,
            Valuation::Finite(v) => v >= k,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone)]
pub struct RatFun {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFun {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::from_parts(num, den))
    }

    /// Moves the power of `q` out of the denominator; `den` must be nonzero.
    fn from_parts(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::from_poly(LaurentPoly::zero());
        }
        let e = den.min_exp();
        Self {
            num: num.shifted(-e),
            den: den.shifted(-e),
        }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value when the denominator is a monomial unit `+-q^e`
    /// or divides the numerator exactly.
    pub fn to_poly(&self) -> Option<LaurentPoly> {
        if self.den.is_monomial() {
            let c = &self.den.coeffs()[0];
            if c.is_one() {
                return Some(self.num.shift(-self.den.min_exp()));
            }
            if (-c).is_one() {
                return Some(-self.num.shift(-self.den.min_exp()));
            }
        }
        let den = self.den.strip_monomial();
        let lead = den.leading_coeff()?;
        let (monic_den, sign) = if lead.is_one() {
            (den.clone(), false)
        } else if (-lead).is_one() {
            (-den.clone(), true)
        } else {
            return None;
        };
        if monic_den.degree() == Some(0) {
            let p = self.num.shift(-self.den.min_exp());
            return Some(if sign { -p } else { p });
        }
        let shift = self.num.min_exp().min(0);
        let num = self.num.shift(-shift);
        let quot = num.div_exact_monic(&monic_den).ok()??;
        let quot = quot.shift(shift - self.den.min_exp());
        Some(if sign { -quot } else { quot })
    }

    pub fn scale<C: Into<BigInt>>(&self, c: C) -> Self {
        Self::from_parts(self.num.scale(c), self.den.clone())
    }

    /// `Phi_n`-adic valuation: multiplicity in the numerator minus in the denominator.
    pub fn phi_valuation(&self, n: u64) -> Valuation {
        match self.num.phi_multiplicity(n) {
            None => Valuation::Infinite,
            Some(vn) => {
                let vd = self
                    .den
                    .phi_multiplicity(n)
                    .expect("denominator is nonzero");
                Valuation::Finite(vn as i64 - vd as i64)
            }
        }
    }

    /// Valuation of `self - other` at `Phi_n`; congruence modulo `Phi_n^k`
    /// means a result of at least `k`.
    pub fn valuation_diff(&self, other: &RatFun, n: u64) -> Valuation {
        (self - other).phi_valuation(n)
    }

    fn combine(&self, other: &RatFun, negate: bool) -> RatFun {
        let (num, den) = if self.den == other.den {
            let num = if negate {
                &self.num - &other.num
            } else {
                &self.num + &other.num
            };
            (num, self.den.clone())
        } else {
            let l = &self.num * &other.den;
            let r = &other.num * &self.den;
            let num = if negate { l - r } else { l + r };
            (num, &self.den * &other.den)
        };
        RatFun::from_parts(num, den)
    }
}

impl Add<&RatFun> for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        self.combine(rhs, false)
    }
}

impl Sub<&RatFun> for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self.combine(rhs, true)
    }
}

impl Mul<&RatFun> for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::from_parts(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Add for RatFun {
    type Output = RatFun;
    fn add(self, rhs: RatFun) -> RatFun {
        &self + &rhs
    }
}

impl Sub for RatFun {
    type Output = RatFun;
    fn sub(self, rhs: RatFun) -> RatFun {
        &self - &rhs
    }
}

impl Mul for RatFun {
    type Output = RatFun;
    fn mul(self, rhs: RatFun) -> RatFun {
        &self * &rhs
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -self.num,
            den: self.den,
        }
    }
}

impl From<LaurentPoly> for RatFun {
    fn from(p: LaurentPoly) -> Self {
        RatFun::from_poly(p)
    }
}

impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFun {}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}
