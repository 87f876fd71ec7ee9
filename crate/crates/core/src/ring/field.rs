//! Exact coefficient fields: 𝔽p for a prime p < 2³¹ and ℚ with
//! arbitrary-precision numerator/denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A coefficient field descriptor. Cheap to copy; performs all arithmetic
/// on [`FieldElem`] values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    /// Prime field with modulus `p` (assumed prime, p < 2³¹).
    Fp(u32),
    /// The rationals.
    Q,
}

/// An exact scalar. `Fp` values are reduced to `[0, p)`; `Rat` values are
/// kept in lowest terms with positive denominator (num-rational's invariant).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Fp(u32),
    Rat(BigRational),
}

impl Field {
    pub fn zero(&self) -> FieldElem {
        match self {
            Field::Fp(_) => FieldElem::Fp(0),
            Field::Q => FieldElem::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> FieldElem {
        match self {
            Field::Fp(_) => FieldElem::Fp(1),
            Field::Q => FieldElem::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, n: i64) -> FieldElem {
        match self {
            Field::Fp(p) => {
                let p = *p as i64;
                FieldElem::Fp(n.rem_euclid(p) as u32)
            }
            Field::Q => FieldElem::Rat(BigRational::from_integer(BigInt::from(n))),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElem {
        match self {
            Field::Fp(p) => {
                let p_big = BigInt::from(*p);
                let r = ((n % &p_big) + &p_big) % &p_big;
                let digits = r.to_u32_digits();
                FieldElem::Fp(*digits.1.first().unwrap_or(&0))
            }
            Field::Q => FieldElem::Rat(BigRational::from_integer(n.clone())),
        }
    }

    pub fn is_zero(&self, a: &FieldElem) -> bool {
        match a {
            FieldElem::Fp(x) => *x == 0,
            FieldElem::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self, a: &FieldElem) -> bool {
        match a {
            FieldElem::Fp(x) => *x == 1,
            FieldElem::Rat(r) => r.is_one(),
        }
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        match (self, a, b) {
            (Field::Fp(p), FieldElem::Fp(x), FieldElem::Fp(y)) => {
                FieldElem::Fp(((*x as u64 + *y as u64) % *p as u64) as u32)
            }
            (Field::Q, FieldElem::Rat(x), FieldElem::Rat(y)) => FieldElem::Rat(x + y),
            _ => panic!("field element does not belong to this field"),
        }
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        match (self, a) {
            (Field::Fp(p), FieldElem::Fp(x)) => {
                FieldElem::Fp(if *x == 0 { 0 } else { p - x })
            }
            (Field::Q, FieldElem::Rat(x)) => FieldElem::Rat(-x),
            _ => panic!("field element does not belong to this field"),
        }
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        match (self, a, b) {
            (Field::Fp(p), FieldElem::Fp(x), FieldElem::Fp(y)) => {
                FieldElem::Fp(((*x as u64 * *y as u64) % *p as u64) as u32)
            }
            (Field::Q, FieldElem::Rat(x), FieldElem::Rat(y)) => FieldElem::Rat(x * y),
            _ => panic!("field element does not belong to this field"),
        }
    }

    /// Multiplicative inverse of a nonzero element. Panics on zero.
    pub fn inv(&self, a: &FieldElem) -> FieldElem {
        match (self, a) {
            (Field::Fp(p), FieldElem::Fp(x)) => {
                assert!(*x != 0, "inverse of zero");
                // extended Euclid on (x, p)
                let (mut r0, mut r1) = (*x as i64, *p as i64);
                let (mut s0, mut s1) = (1i64, 0i64);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (s0, s1) = (s1, s0 - q * s1);
                }
                debug_assert_eq!(r0, 1, "modulus not prime or element not invertible");
                FieldElem::Fp(s0.rem_euclid(*p as i64) as u32)
            }
            (Field::Q, FieldElem::Rat(x)) => {
                assert!(!x.is_zero(), "inverse of zero");
                FieldElem::Rat(x.recip())
            }
            _ => panic!("field element does not belong to this field"),
        }
    }

    pub fn div(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.mul(a, &self.inv(b))
    }

    /// Renders a scalar for the textual polynomial format. 𝔽p values use the
    /// symmetric representative so small negative coefficients print as such.
    pub fn format(&self, a: &FieldElem) -> String {
        match (self, a) {
            (Field::Fp(p), FieldElem::Fp(x)) => {
                let s = if *x > p / 2 {
                    *x as i64 - *p as i64
                } else {
                    *x as i64
                };
                s.to_string()
            }
            (Field::Q, FieldElem::Rat(r)) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            _ => panic!("field element does not belong to this field"),
        }
    }

    /// True when the formatted representative is negative (used by printers
    /// to fold signs into `-` separators).
    pub fn is_negative_rep(&self, a: &FieldElem) -> bool {
        match (self, a) {
            (Field::Fp(p), FieldElem::Fp(x)) => *x > p / 2,
            (Field::Q, FieldElem::Rat(r)) => r.is_negative(),
            _ => panic!("field element does not belong to this field"),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Fp(p) => write!(f, "F{p}"),
            Field::Q => write!(f, "Q"),
        }
    }
}
