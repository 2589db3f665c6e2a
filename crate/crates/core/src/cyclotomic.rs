//! Cyclotomic polynomials and their powers, built by exact division in `Z[q]`.

use std::sync::{Arc, LazyLock};

use crate::memo::Memo;
use crate::polyring::LaurentPoly;

static CYCLO: LazyLock<Memo<u64, LaurentPoly>> = LazyLock::new(Memo::new);
static CYCLO_POW: LazyLock<Memo<(u64, u32), CyclotomicModulus>> = LazyLock::new(Memo::new);

/// `Phi_n(q)^k`, expanded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicModulus {
    n: u64,
    k: u32,
    poly: LaurentPoly,
}

impl CyclotomicModulus {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Monic, `min_exp == 0`, degree `k * totient(n)`.
    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }
}

/// Proper divisors of `n` in increasing order.
fn proper_divisors(n: u64) -> Vec<u64> {
    (1..n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// The `n`-th cyclotomic polynomial, `(q^n - 1) / prod_{d | n, d < n} Phi_d`.
///
/// Panics if `n == 0` or if any of the divisions is inexact (which would be
/// an arithmetic bug, not a recoverable condition).
pub fn cyclo(n: u64) -> Arc<LaurentPoly> {
    assert!(n >= 1, "cyclotomic index must be positive");
    CYCLO.get_or_init(&n, || {
        let mut acc = LaurentPoly::from_i64s(0, &[-1]) + LaurentPoly::monomial(1, n as i64);
        for d in proper_divisors(n) {
            let (quot, rem) = acc
                .divmod_monic(&cyclo(d))
                .expect("Phi_d is monic of degree >= 1");
            assert!(
                rem.is_zero(),
                "inexact division by Phi_{d} while building Phi_{n}"
            );
            acc = quot;
        }
        acc
    })
}

pub fn cyclo_pow(n: u64, k: u32) -> Arc<CyclotomicModulus> {
    assert!(
        n >= 1 && k >= 1,
        "cyclotomic modulus needs n >= 1 and k >= 1"
    );
    CYCLO_POW.get_or_init(&(n, k), || CyclotomicModulus {
        n,
        k,
        poly: cyclo(n).pow(k),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(0, c)
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclo(1), p(&[-1, 1]));
        assert_eq!(*cyclo(2), p(&[1, 1]));
        assert_eq!(*cyclo(5), p(&[1, 1, 1, 1, 1]));
        assert_eq!(*cyclo(6), p(&[1, -1, 1]));
        assert_eq!(*cyclo(12), p(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn powers() {
        assert_eq!(*cyclo_pow(3, 1).poly(), p(&[1, 1, 1]));
        assert_eq!(*cyclo_pow(1, 2).poly(), p(&[1, -2, 1]));
        assert_eq!(*cyclo_pow(3, 2).poly(), p(&[1, 2, 3, 2, 1]));
        let m = cyclo_pow(10, 3);
        assert_eq!((m.n(), m.k()), (10, 3));
        assert_eq!(m.poly().degree(), Some(12));
    }

    #[test]
    fn phi_105_has_coefficient_minus_two() {
        let phi = cyclo(105);
        assert_eq!(phi.degree(), Some(48));
        assert_eq!(phi.coeff(7), BigInt::from(-2));
    }

    #[test]
    fn totient_values() {
        let expected = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, &t) in expected.iter().enumerate() {
            assert_eq!(totient(i as u64 + 1), t);
        }
    }
}
