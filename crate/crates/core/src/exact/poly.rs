use std::fmt;

use super::field::Field;

/// Dense univariate polynomial, coefficients stored lowest degree first and
/// kept trimmed (no trailing zeros; the zero polynomial is empty).
#[derive(Clone, PartialEq)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Field::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate itself.
    pub fn x() -> Self {
        Self::new(vec![F::zero(), F::one()])
    }

    /// `c * x^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        let mut v = vec![F::zero(); k];
        v.push(c);
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Multiplicity of the root `x = 0`; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).add(&other.coeff(k))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).sub(&other.coeff(k))).collect())
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(Field::neg).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("polynomial division by zero");
        let lead_inv = divisor.coeffs[d].inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let Some(n) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if n < d {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![F::zero(); n - d + 1];
        for k in (0..=n - d).rev() {
            let c = rem[k + d].mul(&lead_inv);
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&c.mul(b));
            }
            quot[k] = c;
        }
        rem.truncate(d);
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc.mul(x).add(c))
    }

    /// Horner evaluation at a point of another field, embedding coefficients
    /// through `embed`.
    pub fn eval_into<G: Field>(&self, x: &G, embed: impl Fn(&F) -> G) -> G {
        self.coeffs
            .iter()
            .rev()
            .fold(G::zero(), |acc, c| acc.mul(x).add(&embed(c)))
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Renders the polynomial in the variable `var`, using syntax the scalar
    /// parser accepts.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let compound = s.contains(" + ") || s.contains(" - ") || s.contains('(');
            let (neg, body) = if !compound && s.starts_with('-') {
                (true, s[1..].to_string())
            } else {
                (false, s)
            };
            let body = if compound { format!("({body})") } else { body };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&body);
            } else if body == "1" {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{body}*{mono}"));
            }
        }
        out
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.display_with("x"))
    }
}

/// A reduced quotient `num / den` of polynomials: `gcd(num, den) = 1` and
/// `den` is monic. The zero function is stored as `0 / 1`, so equality of
/// representations is equality of functions.
#[derive(Clone, PartialEq)]
pub struct RatFunc<F> {
    num: Poly<F>,
    den: Poly<F>,
}

/// t-adic order of a rational function: `Finite(v)` for `t^v * unit`, or
/// `Infinite` for the zero function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Order {
    Finite(i64),
    Infinite,
}

impl Order {
    pub fn is_regular(self) -> bool {
        match self {
            Order::Finite(v) => v >= 0,
            Order::Infinite => true,
        }
    }
}

impl<F: Field> RatFunc<F> {
    /// Builds and reduces `num / den`; `None` when `den` is zero.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::from_poly(Poly::zero()));
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_constant() {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead.is_one() {
            Some(RatFunc { num, den })
        } else {
            let li = lead.inv().expect("nonzero leading coefficient");
            Some(RatFunc {
                num: num.scale(&li),
                den: den.scale(&li),
            })
        }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// The indeterminate.
    pub fn x() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn numer(&self) -> &Poly<F> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The value as a polynomial when the denominator is constant.
    pub fn as_poly(&self) -> Option<Poly<F>> {
        // den is monic, so a constant denominator is exactly 1
        self.is_polynomial().then(|| self.num.clone())
    }

    pub fn as_constant(&self) -> Option<F> {
        (self.den.is_constant() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    /// Order of vanishing at `x = 0`.
    pub fn order_at_zero(&self) -> Order {
        match (self.num.valuation(), self.den.valuation()) {
            (None, _) => Order::Infinite,
            (Some(a), Some(b)) => Order::Finite(a as i64 - b as i64),
            (Some(_), None) => unreachable!("denominator is nonzero"),
        }
    }

    /// Value at `x = 0`; `None` if there is a pole there.
    pub fn eval_at_zero(&self) -> Option<F> {
        if !self.order_at_zero().is_regular() {
            return None;
        }
        let d = self.den.coeff(0);
        self.num.coeff(0).div(&d)
    }

    /// Value at `x = v`; `None` if the denominator vanishes there.
    pub fn eval(&self, v: &F) -> Option<F> {
        self.num.eval(v).div(&self.den.eval(v))
    }

    /// Substitutes `x := r`, where `r` lives in another field, embedding
    /// coefficients through `embed`. `None` if the denominator vanishes.
    pub fn eval_into<G: Field>(&self, r: &G, embed: impl Fn(&F) -> G) -> Option<G> {
        let n = self.num.eval_into(r, &embed);
        let d = self.den.eval_into(r, &embed);
        n.div(&d)
    }

    pub fn display_with(&self, var: &str) -> String {
        if self.den.is_constant() {
            self.num.display_with(var)
        } else {
            format!(
                "({})/({})",
                self.num.display_with(var),
                self.den.display_with(var)
            )
        }
    }
}

impl<F: Field> Field for RatFunc<F> {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    fn from_i64(v: i64) -> Self {
        Self::constant(F::from_i64(v))
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.den.is_constant() && self.num.is_constant() && self.num.coeff(0).is_one()
    }

    fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone()).expect("nonzero denominator");
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::new(num, self.den.mul(&other.den)).expect("nonzero denominator")
    }

    fn sub(&self, other: &Self) -> Self {
        Field::add(self, &Field::neg(other))
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_polynomial() && other.is_polynomial() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den)).expect("nonzero denominator")
    }

    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Self::new(self.den.clone(), self.num.clone())
    }
}

impl<F: Field> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x"))
    }
}

impl<F: Field> fmt::Debug for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self.display_with("x"))
    }
}
