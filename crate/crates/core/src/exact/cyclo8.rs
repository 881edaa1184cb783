use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{impl_field_ops, Field};

/// An element `a0 + a1*z + a2*z^2 + a3*z^3` of the cyclotomic field Q(z),
/// where `z` is a primitive 8th root of unity (`z^4 = -1`).
///
/// The coefficient vector is the unique representation, so derived equality
/// is field equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclo8 {
    coeffs: [BigRational; 4],
}

impl Cyclo8 {
    pub fn new(coeffs: [BigRational; 4]) -> Self {
        Cyclo8 { coeffs }
    }

    pub fn from_ints(a: [i64; 4]) -> Self {
        Cyclo8 {
            coeffs: a.map(|v| BigRational::from_integer(BigInt::from(v))),
        }
    }

    pub fn rational(q: BigRational) -> Self {
        Cyclo8 {
            coeffs: [q, BigRational::zero(), BigRational::zero(), BigRational::zero()],
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::rational(BigRational::new(num.into(), den.into()))
    }

    /// The generator `z`.
    pub fn zeta() -> Self {
        Self::from_ints([0, 1, 0, 0])
    }

    /// `z - z^3`, whose square is 2.
    pub fn sqrt2() -> Self {
        Self::from_ints([0, 1, 0, -1])
    }

    /// `z + z^3`, whose square is -2.
    pub fn sqrt_minus2() -> Self {
        Self::from_ints([0, 1, 0, 1])
    }

    /// `z^2`, whose square is -1.
    pub fn i() -> Self {
        Self::from_ints([0, 0, 1, 0])
    }

    pub fn coeffs(&self) -> &[BigRational; 4] {
        &self.coeffs
    }

    /// The rational value if the element lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Image under the automorphism `z -> z^k`, `k` odd.
    fn conjugate(&self, k: usize) -> Self {
        let mut out: [BigRational; 4] = std::array::from_fn(|_| BigRational::zero());
        for (j, c) in self.coeffs.iter().enumerate() {
            let e = (j * k) % 8;
            if e < 4 {
                out[e] += c;
            } else {
                out[e - 4] -= c;
            }
        }
        Cyclo8 { coeffs: out }
    }
}

impl Field for Cyclo8 {
    fn zero() -> Self {
        Self::from_ints([0; 4])
    }

    fn one() -> Self {
        Self::from_ints([1, 0, 0, 0])
    }

    fn from_i64(v: i64) -> Self {
        Self::from_ints([v, 0, 0, 0])
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn add(&self, other: &Self) -> Self {
        Cyclo8 {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &other.coeffs[i]),
        }
    }

    fn sub(&self, other: &Self) -> Self {
        Cyclo8 {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &other.coeffs[i]),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        if let Some(q) = other.as_rational() {
            return Cyclo8 {
                coeffs: std::array::from_fn(|i| &self.coeffs[i] * q),
            };
        }
        if let Some(q) = self.as_rational() {
            return Cyclo8 {
                coeffs: std::array::from_fn(|i| q * &other.coeffs[i]),
            };
        }
        let mut out: [BigRational; 4] = std::array::from_fn(|_| BigRational::zero());
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let p = a * b;
                // z^4 = -1
                if i + j < 4 {
                    out[i + j] += p;
                } else {
                    out[i + j - 4] -= p;
                }
            }
        }
        Cyclo8 { coeffs: out }
    }

    fn neg(&self) -> Self {
        Cyclo8 {
            coeffs: std::array::from_fn(|i| -&self.coeffs[i]),
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(Self::rational(q.recip()));
        }
        // a * (s3 a)(s5 a)(s7 a) is the norm, a rational number.
        let cofactor = self.conjugate(3).mul(&self.conjugate(5)).mul(&self.conjugate(7));
        let norm = self.mul(&cofactor);
        let n = norm
            .as_rational()
            .expect("norm of a cyclotomic element is rational")
            .clone();
        let inv_n = n.recip();
        Some(Cyclo8 {
            coeffs: std::array::from_fn(|i| &cofactor.coeffs[i] * &inv_n),
        })
    }
}

impl_field_ops!(Cyclo8);

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Cyclo8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let mono = match j {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{j}"),
            };
            if mono.is_empty() {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", fmt_rational(&mag))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclo8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo8({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distinguished_square_roots() {
        assert_eq!(Cyclo8::sqrt2().pow(2), Cyclo8::from_i64(2));
        assert_eq!(Cyclo8::sqrt_minus2().pow(2), Cyclo8::from_i64(-2));
        assert_eq!(Cyclo8::i().pow(2), Cyclo8::from_i64(-1));
        assert_eq!(Cyclo8::zeta().pow(4), Cyclo8::from_i64(-1));
        assert_eq!(Cyclo8::zeta().pow(8), Cyclo8::one());
    }

    #[test]
    fn inverse_of_zeta_is_minus_zeta_cubed() {
        let z = Cyclo8::zeta();
        assert_eq!(z.inv().unwrap(), Cyclo8::from_ints([0, 0, 0, -1]));
    }

    #[test]
    fn inverse_of_sqrt2() {
        let s = Cyclo8::sqrt2();
        let half = Cyclo8::from_ratio(1, 2);
        assert_eq!(s.inv().unwrap(), s.mul(&half));
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(Cyclo8::zero().inv().is_none());
    }

    #[test]
    fn display() {
        assert_eq!(Cyclo8::sqrt2().to_string(), "z - z^3");
        assert_eq!(Cyclo8::from_ints([-1, 0, 2, 0]).to_string(), "-1 + 2*z^2");
        assert_eq!(Cyclo8::from_ratio(-3, 4).to_string(), "-3/4");
    }
}
