//! Rational functions: quotients of `QPoly` kept fully reduced (numerator and
//! denominator coprime, denominator monic in the lex order).

use crate::poly::{poly_gcd, QPoly};
use crate::rat::Rat;
use crate::vars::VarId;
use crate::CoreError;
use num_traits::One;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct QRatFunc {
    num: QPoly,
    den: QPoly,
}

impl QRatFunc {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self, CoreError> {
        if den.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return QRatFunc {
                num,
                den: QPoly::one(),
            };
        }
        let (mut num, mut den) = (num, den);
        if !den.is_constant() {
            let g = poly_gcd(&num, &den);
            if !g.is_constant() {
                num = num.exact_div(&g).expect("gcd divides");
                den = den.exact_div(&g).expect("gcd divides");
            }
        }
        // make the denominator monic
        let lc = den.leading().expect("nonzero").1.clone();
        if !lc.is_one() {
            let inv = Rat::one() / lc;
            den = den.scale(&inv);
            num = num.scale(&inv);
        }
        QRatFunc { num, den }
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRatFunc {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(QPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_poly(&self) -> Option<QPoly> {
        self.den.as_constant().map(|c| self.num.scale(&(Rat::one() / c)))
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.den.is_constant() {
            self.as_poly().and_then(|p| p.as_constant())
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self, CoreError> {
        if self.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    /// All variables in numerator or denominator.
    pub fn vars_all(&self, f: impl Fn(VarId) -> bool + Copy) -> bool {
        self.num.vars_all(f) && self.den.vars_all(f)
    }

    /// Size heuristic for pivot selection.
    pub fn size(&self) -> usize {
        self.num.num_terms() + self.den.num_terms()
    }

    pub fn total_degree(&self) -> u32 {
        self.num.total_degree() + self.den.total_degree()
    }

    /// Evaluate at a rational point (must not zero the denominator).
    pub fn eval(&self, f: &impl Fn(VarId) -> Rat) -> Result<Rat, CoreError> {
        let d = self.den.eval(f);
        if d == Rat::from_integer(0.into()) {
            return Err(CoreError::DivisionByZero);
        }
        Ok(self.num.eval(f) / d)
    }
}

impl fmt::Debug for QRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?})/({:?})", self.num, self.den)
        }
    }
}

impl Add for &QRatFunc {
    type Output = QRatFunc;
    fn add(self, o: &QRatFunc) -> QRatFunc {
        if self.den == o.den {
            return QRatFunc::reduced(&self.num + &o.num, self.den.clone());
        }
        let num = &(&self.num * &o.den) + &(&o.num * &self.den);
        QRatFunc::reduced(num, &self.den * &o.den)
    }
}

impl Sub for &QRatFunc {
    type Output = QRatFunc;
    fn sub(self, o: &QRatFunc) -> QRatFunc {
        if self.den == o.den {
            return QRatFunc::reduced(&self.num - &o.num, self.den.clone());
        }
        let num = &(&self.num * &o.den) - &(&o.num * &self.den);
        QRatFunc::reduced(num, &self.den * &o.den)
    }
}

impl Mul for &QRatFunc {
    type Output = QRatFunc;
    fn mul(self, o: &QRatFunc) -> QRatFunc {
        if self.is_zero() || o.is_zero() {
            return QRatFunc::zero();
        }
        // cross-reduce before multiplying to keep degrees down
        let g1 = poly_gcd(&self.num, &o.den);
        let g2 = poly_gcd(&o.num, &self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = o.den.exact_div(&g1).expect("gcd divides");
        let n2 = o.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        QRatFunc::reduced(&n1 * &n2, &d1 * &d2)
    }
}

impl Div for &QRatFunc {
    type Output = QRatFunc;
    fn div(self, o: &QRatFunc) -> QRatFunc {
        self * &o.inv().expect("division by zero rational function")
    }
}

impl Neg for &QRatFunc {
    type Output = QRatFunc;
    fn neg(self) -> QRatFunc {
        QRatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use crate::vars::VarRegistry;

    #[test]
    fn reduction_and_field_ops() {
        let reg = VarRegistry::new();
        let t = reg.intern("t1");
        let tp = QPoly::var(t);
        let one = QPoly::one();
        // (t^2 - 1)/(t - 1) reduces to t + 1
        let f = QRatFunc::new(&(&tp * &tp) - &one, &tp - &one).unwrap();
        assert_eq!(f, QRatFunc::from_poly(&tp + &one));
        // 1/t + 1/t = 2/t
        let invt = QRatFunc::new(one.clone(), tp.clone()).unwrap();
        let two_over_t = QRatFunc::new(QPoly::constant(rat(2)), tp.clone()).unwrap();
        assert_eq!(&invt + &invt, two_over_t);
        // t * (1/t) = 1
        assert_eq!(&QRatFunc::from_poly(tp.clone()) * &invt, QRatFunc::one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(QRatFunc::new(QPoly::one(), QPoly::zero()).is_err());
    }
}
