//! q-integers, q-shifted factorials, Gaussian binomials, the Andrews–Baxter
//! q-trinomial, their classical integer counterparts, the mod-3 Legendre
//! symbol and the closed form `R_n(q)`.

use std::fmt;
use std::sync::{Arc, LazyLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::polyring::LaurentPoly;

static QBINOM: LazyLock<Memo<(i64, i64), LaurentPoly>> = LazyLock::new(Memo::new);
static QTRINOM: LazyLock<Memo<(i64, i64), LaurentPoly>> = LazyLock::new(Memo::new);

/// `[m]_q = 1 + q + ... + q^(m-1)`.
pub fn qint(m: u64) -> LaurentPoly {
    LaurentPoly::from_coeffs(0, vec![BigInt::one(); m as usize])
}

/// `(q;q)_n = (1-q)(1-q^2)...(1-q^n)`.
pub fn qpoch(n: u64) -> LaurentPoly {
    (1..=n as i64).fold(LaurentPoly::one(), |acc, i| mul_one_minus_q_pow(&acc, i))
}

/// `f * (1 - q^m)` in one pass.
fn mul_one_minus_q_pow(f: &LaurentPoly, m: i64) -> LaurentPoly {
    f - &f.shift(m)
}

/// Exact quotient `f / (1 - q^m)` for a polynomial `f` divisible by it.
fn div_one_minus_q_pow(f: &LaurentPoly, m: i64) -> LaurentPoly {
    debug_assert!(m >= 1 && f.min_exp() >= 0);
    let f = f.strip_monomial();
    let shift = f.min_exp();
    let m = m as usize;
    let src = f.coeffs();
    // h_i = f_i + h_{i-m}
    let mut h: Vec<BigInt> = Vec::with_capacity(src.len());
    for (i, c) in src.iter().enumerate() {
        let v = if i >= m { c + &h[i - m] } else { c.clone() };
        h.push(v);
    }
    let keep = src.len().saturating_sub(m);
    assert!(
        h[keep..].iter().all(Zero::is_zero),
        "inexact division by 1 - q^{m}"
    );
    h.truncate(keep);
    LaurentPoly::from_coeffs(shift, h)
}

/// Gaussian binomial `[n k]_q`; zero unless `0 <= k <= n`.
///
/// Each row is walked with `[n k] = [n k-1] (1 - q^(n-k+1)) / (1 - q^k)`,
/// which only needs exact division by two-term binomials, and every
/// intermediate entry is memoized.
pub fn qbinom(n: i64, k: i64) -> Arc<LaurentPoly> {
    if k < 0 || k > n {
        return Arc::new(LaurentPoly::zero());
    }
    let k = k.min(n - k);
    QBINOM.get_or_init(&(n, k), || {
        if k == 0 {
            return LaurentPoly::one();
        }
        let prev = qbinom(n, k - 1);
        div_one_minus_q_pow(&mul_one_minus_q_pow(&prev, n - k + 1), k)
    })
}

/// The Andrews–Baxter q-trinomial
/// `sum_k q^(k(k+j)) [n k]_q [n-k k+j]_q`.
///
/// Any integer `j` is accepted; terms whose inner binomial falls out of range
/// vanish.
pub fn qtrinom(n: i64, j: i64) -> Arc<LaurentPoly> {
    if n < 0 {
        return Arc::new(LaurentPoly::zero());
    }
    QTRINOM.get_or_init(&(n, j), || {
        let lo = 0.max(-j);
        let mut acc = LaurentPoly::zero();
        // 2k + j <= n
        let mut k = lo;
        while 2 * k + j <= n {
            let term = &*qbinom(n, k) * &*qbinom(n - k, k + j);
            acc += &term.shift(k * (k + j));
            k += 1;
        }
        acc
    })
}

/// Binomial coefficient `a(a-1)...(a-b+1) / b!`; zero for `b < 0`.
///
/// For `a >= 0` this is zero when `b > a`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    if a >= 0 && b > a {
        return BigInt::zero();
    }
    let b = if a >= 0 { b.min(a - b) } else { b };
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

/// Coefficient of `x^j` in `(1 + x + 1/x)^n`, as `sum_k C(n,k) C(n-k,k+j)`.
pub fn trinom(n: i64, j: i64) -> BigInt {
    (0..=n).map(|k| binom(n, k) * binom(n - k, k + j)).sum()
}

/// Legendre symbol modulo 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mod3Symbol {
    Zero,
    Plus,
    Minus,
}

impl Mod3Symbol {
    pub fn value(self) -> i64 {
        match self {
            Mod3Symbol::Zero => 0,
            Mod3Symbol::Plus => 1,
            Mod3Symbol::Minus => -1,
        }
    }
}

impl fmt::Display for Mod3Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

pub fn legendre3(x: i64) -> Mod3Symbol {
    match x.rem_euclid(3) {
        0 => Mod3Symbol::Zero,
        1 => Mod3Symbol::Plus,
        _ => Mod3Symbol::Minus,
    }
}

/// `s * q^(num/den)`. A zero symbol short-circuits to 0 without looking at
/// the exponent, which is how the fractional exponents in the mod-3 formulas
/// are guarded.
pub fn symbol_monomial(s: Mod3Symbol, num: i64, den: i64) -> Result<LaurentPoly> {
    assert!(den > 0, "exponent denominator must be positive");
    if s == Mod3Symbol::Zero {
        return Ok(LaurentPoly::zero());
    }
    let (exp, rem) = num.div_rem(&den);
    if rem != 0 {
        return Err(Error::NonIntegralExponent { num, den });
    }
    Ok(LaurentPoly::monomial(s.value(), exp))
}

/// Residue class of `n` modulo 3 together with the `m` of the matching
/// branch: `n = 3m`, `n = 3m + 1` or `n = 3m - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mod3Branch {
    ThreeM(i64),
    ThreeMPlusOne(i64),
    ThreeMMinusOne(i64),
}

impl Mod3Branch {
    pub fn of(n: i64) -> Self {
        match n.rem_euclid(3) {
            0 => Mod3Branch::ThreeM(n / 3),
            1 => Mod3Branch::ThreeMPlusOne((n - 1) / 3),
            _ => Mod3Branch::ThreeMMinusOne((n + 1) / 3),
        }
    }
}

fn sign_pow(m: i64) -> i64 {
    if m.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `R_n(q)`:
/// `(-1)^m (1 + q^m) q^(m(3m-1)/2)` for `n = 3m`,
/// `(-1)^m q^(m(3m+1)/2)` for `n = 3m + 1`,
/// `(-1)^m q^(m(3m-1)/2)` for `n = 3m - 1`.
///
/// `n = 0` lands in the first branch with `m = 0` and gives 2.
pub fn r_n(n: u64) -> LaurentPoly {
    let n = n as i64;
    match Mod3Branch::of(n) {
        Mod3Branch::ThreeM(m) => {
            let base = LaurentPoly::monomial(sign_pow(m), m * (3 * m - 1) / 2);
            &base + &base.shift(m)
        }
        Mod3Branch::ThreeMPlusOne(m) => LaurentPoly::monomial(sign_pow(m), m * (3 * m + 1) / 2),
        Mod3Branch::ThreeMMinusOne(m) => LaurentPoly::monomial(sign_pow(m), m * (3 * m - 1) / 2),
    }
}
