use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gcd::poly_gcd;
use super::laurent::{exact_div, QTLaurent};
use super::ExactError;

/// Element of the fraction field `Q(q, t)`, stored as `num / den`.
///
/// Every constructor reduces by the polynomial gcd, moves monomial factors
/// into the numerator and makes the denominator monic in the canonical term
/// order. Equality is still decided by cross-multiplication.
#[derive(Clone)]
pub struct QTFraction {
    num: QTLaurent,
    den: QTLaurent,
}

impl QTFraction {
    pub fn new(num: QTLaurent, den: QTLaurent) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(Self::reduced(num, den))
    }

    pub fn zero() -> Self {
        Self::from(QTLaurent::zero())
    }

    pub fn one() -> Self {
        Self::from(QTLaurent::one())
    }

    pub fn integer(n: i64) -> Self {
        Self::from(QTLaurent::integer(n))
    }

    pub fn num(&self) -> &QTLaurent {
        &self.num
    }

    pub fn den(&self) -> &QTLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn reduced(num: QTLaurent, den: QTLaurent) -> Self {
        if num.is_zero() {
            return Self {
                num,
                den: QTLaurent::one(),
            };
        }
        let (nq, nt) = num.min_exponents();
        let (dq, dt) = den.min_exponents();
        let np = num.shift(-nq, -nt);
        let dp = den.shift(-dq, -dt);
        let (np, dp) = if dp.as_constant().is_some() {
            (np, dp)
        } else {
            let g = poly_gcd(&np, &dp);
            if g.as_constant().is_some() {
                (np, dp)
            } else {
                (
                    exact_div(&np, &g).expect("gcd divides numerator"),
                    exact_div(&dp, &g).expect("gcd divides denominator"),
                )
            }
        };
        let lead = dp.leading_term().map(|(_, c)| c.clone()).unwrap();
        let inv = lead.recip();
        Self {
            num: np.shift(nq - dq, nt - dt).scale(&inv),
            den: dp.scale(&inv),
        }
    }

    /// The numerator if the denominator is a unit.
    pub fn as_laurent(&self) -> Option<QTLaurent> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    pub fn to_laurent(&self) -> Result<QTLaurent, ExactError> {
        self.as_laurent().ok_or(ExactError::NotDivisible)
    }

    pub fn recip(&self) -> Result<Self, ExactError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: i32) -> Result<Self, ExactError> {
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ExactError> {
        Ok(self * &rhs.recip()?)
    }

    /// Monomial substitution applied to numerator and denominator.
    pub fn substitute_monomial(&self, q_image: (i32, i32), t_image: (i32, i32)) -> Self {
        Self::reduced(
            self.num.substitute_monomial(q_image, t_image),
            self.den.substitute_monomial(q_image, t_image),
        )
    }

    pub fn swap_qt(&self) -> Self {
        self.substitute_monomial((0, 1), (1, 0))
    }

    pub fn eval(&self, q: &BigRational, t: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(q, t)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(q, t)? / d)
    }
}

impl From<QTLaurent> for QTFraction {
    fn from(p: QTLaurent) -> Self {
        Self {
            num: p,
            den: QTLaurent::one(),
        }
    }
}

impl From<i64> for QTFraction {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl PartialEq for QTFraction {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for QTFraction {}

impl PartialEq<QTLaurent> for QTFraction {
    fn eq(&self, other: &QTLaurent) -> bool {
        self.num == other * &self.den
    }
}

impl fmt::Display for QTFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for QTFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QTFraction({self})")
    }
}

impl<'a> Add<&'a QTFraction> for &'a QTFraction {
    type Output = QTFraction;
    fn add(self, rhs: &QTFraction) -> QTFraction {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return QTFraction::from(&self.num + &rhs.num);
            }
            return QTFraction::reduced(&self.num + &rhs.num, self.den.clone());
        }
        QTFraction::reduced(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a QTFraction> for &'a QTFraction {
    type Output = QTFraction;
    fn sub(self, rhs: &QTFraction) -> QTFraction {
        self + &(-rhs)
    }
}

impl Neg for &QTFraction {
    type Output = QTFraction;
    fn neg(self) -> QTFraction {
        QTFraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<'a> Mul<&'a QTFraction> for &'a QTFraction {
    type Output = QTFraction;
    fn mul(self, rhs: &QTFraction) -> QTFraction {
        if self.is_zero() || rhs.is_zero() {
            return QTFraction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QTFraction::from(&self.num * &rhs.num);
        }
        QTFraction::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero; use [`QTFraction::checked_div`] otherwise.
impl<'a> Div<&'a QTFraction> for &'a QTFraction {
    type Output = QTFraction;
    fn div(self, rhs: &QTFraction) -> QTFraction {
        self.checked_div(rhs).expect("division by zero fraction")
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for QTFraction {
            type Output = QTFraction;
            fn $m(self, rhs: QTFraction) -> QTFraction {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl Neg for QTFraction {
    type Output = QTFraction;
    fn neg(self) -> QTFraction {
        -&self
    }
}

impl Zero for QTFraction {
    fn zero() -> Self {
        QTFraction::zero()
    }
    fn is_zero(&self) -> bool {
        QTFraction::is_zero(self)
    }
}

impl One for QTFraction {
    fn one() -> Self {
        QTFraction::one()
    }
}
