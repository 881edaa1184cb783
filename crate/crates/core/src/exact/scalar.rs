use std::fmt;

use super::cyclo8::Cyclo8;
use super::field::{impl_field_ops, Field};
use super::poly::{Poly, RatFunc};

/// Element of the working field Q(z)(l): either a constant of Q(z), or a
/// reduced rational function in the family parameter `l` (lambda) with Q(z)
/// coefficients.
///
/// The representation is canonical: a ratio whose numerator and denominator
/// are both constant is always stored as `Const`.
#[derive(Clone, PartialEq)]
pub enum Scalar {
    Const(Cyclo8),
    Ratio(RatFunc<Cyclo8>),
}

/// Rational function in the family parameter with Q(z) coefficients.
pub type LambdaRational = RatFunc<Cyclo8>;

impl Scalar {
    pub fn lambda() -> Self {
        Scalar::Ratio(RatFunc::x())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::Const(Cyclo8::from_ratio(num, den))
    }

    fn from_ratfunc(r: RatFunc<Cyclo8>) -> Self {
        match r.as_constant() {
            Some(c) => Scalar::Const(c),
            None => Scalar::Ratio(r),
        }
    }

    fn to_ratfunc(&self) -> RatFunc<Cyclo8> {
        match self {
            Scalar::Const(c) => RatFunc::constant(c.clone()),
            Scalar::Ratio(r) => r.clone(),
        }
    }

    pub fn as_const(&self) -> Option<&Cyclo8> {
        match self {
            Scalar::Const(c) => Some(c),
            Scalar::Ratio(_) => None,
        }
    }

    /// True when the value involves the family parameter.
    pub fn depends_on_lambda(&self) -> bool {
        matches!(self, Scalar::Ratio(_))
    }

    /// Substitutes a value for the family parameter. `None` when the
    /// denominator vanishes at that value.
    pub fn substitute_lambda(&self, value: &Scalar) -> Option<Scalar> {
        match self {
            Scalar::Const(_) => Some(self.clone()),
            Scalar::Ratio(r) => r.eval_into(value, |c| Scalar::Const(c.clone())),
        }
    }

    /// Substitutes `l := value` where `value` is a rational function of the
    /// curve parameter.
    pub fn substitute_lambda_t(&self, value: &TRational) -> Option<TRational> {
        match self {
            Scalar::Const(_) => Some(TRational::constant(self.clone())),
            Scalar::Ratio(r) => r.eval_into(value, |c| TRational::constant(Scalar::Const(c.clone()))),
        }
    }
}

impl From<Cyclo8> for Scalar {
    fn from(c: Cyclo8) -> Self {
        Scalar::Const(c)
    }
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::Const(Cyclo8::zero())
    }

    fn one() -> Self {
        Scalar::Const(Cyclo8::one())
    }

    fn from_i64(v: i64) -> Self {
        Scalar::Const(Cyclo8::from_i64(v))
    }

    fn is_zero(&self) -> bool {
        match self {
            Scalar::Const(c) => c.is_zero(),
            Scalar::Ratio(_) => false,
        }
    }

    fn is_one(&self) -> bool {
        match self {
            Scalar::Const(c) => c.is_one(),
            Scalar::Ratio(_) => false,
        }
    }

    fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Scalar::Const(a), Scalar::Const(b)) => Scalar::Const(a.add(b)),
            _ => Self::from_ratfunc(self.to_ratfunc().add(&other.to_ratfunc())),
        }
    }

    fn sub(&self, other: &Self) -> Self {
        match (self, other) {
            (Scalar::Const(a), Scalar::Const(b)) => Scalar::Const(a.sub(b)),
            _ => Self::from_ratfunc(self.to_ratfunc().sub(&other.to_ratfunc())),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Scalar::Const(a), Scalar::Const(b)) => Scalar::Const(a.mul(b)),
            (Scalar::Const(a), _) | (_, Scalar::Const(a)) if a.is_zero() => Self::zero(),
            _ => Self::from_ratfunc(self.to_ratfunc().mul(&other.to_ratfunc())),
        }
    }

    fn neg(&self) -> Self {
        match self {
            Scalar::Const(a) => Scalar::Const(a.neg()),
            Scalar::Ratio(r) => Scalar::Ratio(r.neg()),
        }
    }

    fn inv(&self) -> Option<Self> {
        match self {
            Scalar::Const(a) => a.inv().map(Scalar::Const),
            Scalar::Ratio(r) => r.inv().map(Self::from_ratfunc),
        }
    }
}

impl_field_ops!(Scalar);

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Const(c) => write!(f, "{c}"),
            Scalar::Ratio(r) => write!(f, "{}", r.display_with("l")),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

/// Polynomial in the curve parameter `t` with [`Scalar`] coefficients.
pub type TPoly = Poly<Scalar>;

/// Rational function in the curve parameter `t` with [`Scalar`] coefficients.
pub type TRational = RatFunc<Scalar>;

impl_field_ops!(TRational);

/// Renders a curve-parameter rational function in `t`.
pub fn display_t(r: &TRational) -> String {
    r.display_with("t")
}

/// `t`.
pub fn t() -> TRational {
    TRational::x()
}

/// Embeds a scalar as a constant function of `t`.
pub fn t_const(s: Scalar) -> TRational {
    TRational::constant(s)
}
