use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ExactError;

/// Exponent pair `(e_q, e_t)` of a monomial `q^e_q t^e_t`.
pub type Exponent = (i32, i32);

/// Bivariate Laurent polynomial in `q` and `t` with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality
/// of polynomials.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QTLaurent {
    terms: BTreeMap<Exponent, BigRational>,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl QTLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn monomial(c: BigRational, eq: i32, et: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((eq, et), c);
        }
        Self { terms }
    }

    /// `q^e`
    pub fn q_pow(e: i32) -> Self {
        Self::monomial(BigRational::one(), e, 0)
    }

    /// `t^e`
    pub fn t_pow(e: i32) -> Self {
        Self::monomial(BigRational::one(), 0, e)
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn t() -> Self {
        Self::t_pow(1)
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, BigRational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, e: Exponent, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, eq: i32, et: i32) -> BigRational {
        self.terms.get(&(eq, et)).cloned().unwrap_or_else(BigRational::zero)
    }

    /// A single term `c q^a t^b`.
    pub fn as_monomial(&self) -> Option<(Exponent, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        match self.as_monomial() {
            Some(((0, 0), c)) => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_free_of_t(&self) -> bool {
        self.terms.keys().all(|&(_, et)| et == 0)
    }

    /// Smallest exponents of `q` and of `t` occurring (`(0, 0)` for zero).
    pub fn min_exponents(&self) -> Exponent {
        if self.is_zero() {
            return (0, 0);
        }
        let mq = self.terms.keys().map(|e| e.0).min().unwrap();
        let mt = self.terms.keys().map(|e| e.1).min().unwrap();
        (mq, mt)
    }

    pub fn max_exponents(&self) -> Exponent {
        if self.is_zero() {
            return (0, 0);
        }
        let mq = self.terms.keys().map(|e| e.0).max().unwrap();
        let mt = self.terms.keys().map(|e| e.1).max().unwrap();
        (mq, mt)
    }

    /// True when no negative exponent occurs.
    pub fn is_polynomial(&self) -> bool {
        let (mq, mt) = self.min_exponents();
        mq >= 0 && mt >= 0
    }

    /// All coefficients are nonnegative integers and no exponent is negative.
    pub fn is_counting_polynomial(&self) -> bool {
        self.is_polynomial() && self.terms.values().all(|c| c.is_integer() && !c.is_negative())
    }

    /// Multiply by the monomial `q^dq t^dt`.
    pub fn shift(&self, dq: i32, dt: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + dq, b + dt), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute monomials: `q -> q^a t^b`, `t -> q^c t^d`, given as
    /// `q_image = (a, b)` and `t_image = (c, d)`.
    pub fn substitute_monomial(&self, q_image: Exponent, t_image: Exponent) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(eq, et), c)| {
            (
                (eq * q_image.0 + et * t_image.0, eq * q_image.1 + et * t_image.1),
                c.clone(),
            )
        }))
    }

    /// Exchange the roles of `q` and `t`.
    pub fn swap_qt(&self) -> Self {
        self.substitute_monomial((0, 1), (1, 0))
    }

    /// Set `q = 0`. Fails if a negative power of `q` occurs.
    pub fn at_q_zero(&self) -> Result<Self, ExactError> {
        if self.terms.keys().any(|e| e.0 < 0) {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(Self {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.0 == 0)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        })
    }

    /// Set `t = 0`. Fails if a negative power of `t` occurs.
    pub fn at_t_zero(&self) -> Result<Self, ExactError> {
        self.swap_qt().at_q_zero().map(|f| f.swap_qt())
    }

    /// Evaluate at rational points; `None` if a negative power of zero occurs.
    pub fn eval(&self, q: &BigRational, t: &BigRational) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (&(eq, et), c) in &self.terms {
            acc += c * rpow(q, eq)? * rpow(t, et)?;
        }
        Some(acc)
    }

    /// Evaluate a `t`-free polynomial at an integer `q`.
    pub fn eval_q(&self, q: i64) -> Option<BigRational> {
        self.eval(&rat(q), &BigRational::zero())
    }

    /// Leading term in the canonical print order (descending total degree,
    /// then descending `q`-exponent).
    pub fn leading_term(&self) -> Option<(Exponent, &BigRational)> {
        self.terms
            .iter()
            .max_by_key(|(&(a, b), _)| (a + b, a))
            .map(|(e, c)| (*e, c))
    }

    pub fn sorted_terms(&self) -> Vec<(Exponent, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c)).collect();
        v.sort_by_key(|&((a, b), _)| std::cmp::Reverse((a + b, a)));
        v
    }
}

fn rpow(x: &BigRational, e: i32) -> Option<BigRational> {
    if e < 0 && x.is_zero() {
        return None;
    }
    if e == 0 {
        return Some(BigRational::one());
    }
    Some(num_traits::Pow::pow(x, e))
}

impl From<i64> for QTLaurent {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl fmt::Display for QTLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((eq, et), c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let mut factors = Vec::new();
            if !abs.is_one() || (eq == 0 && et == 0) {
                factors.push(abs.to_string());
            }
            for (var, e) in [("q", eq), ("t", et)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for QTLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QTLaurent({self})")
    }
}

impl<'a> Add<&'a QTLaurent> for &'a QTLaurent {
    type Output = QTLaurent;
    fn add(self, rhs: &QTLaurent) -> QTLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QTLaurent {
    type Output = QTLaurent;
    fn add(mut self, rhs: QTLaurent) -> QTLaurent {
        self += &rhs;
        self
    }
}

impl AddAssign<&QTLaurent> for QTLaurent {
    fn add_assign(&mut self, rhs: &QTLaurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&QTLaurent> for QTLaurent {
    fn sub_assign(&mut self, rhs: &QTLaurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl AddAssign for QTLaurent {
    fn add_assign(&mut self, rhs: QTLaurent) {
        *self += &rhs;
    }
}

impl SubAssign for QTLaurent {
    fn sub_assign(&mut self, rhs: QTLaurent) {
        *self -= &rhs;
    }
}

impl<'a> Sub<&'a QTLaurent> for &'a QTLaurent {
    type Output = QTLaurent;
    fn sub(self, rhs: &QTLaurent) -> QTLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for QTLaurent {
    type Output = QTLaurent;
    fn sub(mut self, rhs: QTLaurent) -> QTLaurent {
        self -= &rhs;
        self
    }
}

impl Neg for &QTLaurent {
    type Output = QTLaurent;
    fn neg(self) -> QTLaurent {
        QTLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Neg for QTLaurent {
    type Output = QTLaurent;
    fn neg(self) -> QTLaurent {
        -&self
    }
}

impl<'a> Mul<&'a QTLaurent> for &'a QTLaurent {
    type Output = QTLaurent;
    fn mul(self, rhs: &QTLaurent) -> QTLaurent {
        poly_mul(self, rhs)
    }
}

impl Mul for QTLaurent {
    type Output = QTLaurent;
    fn mul(self, rhs: QTLaurent) -> QTLaurent {
        poly_mul(&self, &rhs)
    }
}

/// Product of two Laurent polynomials, in canonical form.
pub fn poly_mul(a: &QTLaurent, b: &QTLaurent) -> QTLaurent {
    if a.is_zero() || b.is_zero() {
        return QTLaurent::zero();
    }
    if let Some(((0, 0), c)) = a.as_monomial() {
        return b.scale(c);
    }
    if let Some(((0, 0), c)) = b.as_monomial() {
        return a.scale(c);
    }
    let mut acc: std::collections::HashMap<Exponent, BigRational> =
        std::collections::HashMap::with_capacity(a.len() * b.len());
    for (&(a1, a2), ca) in &a.terms {
        for (&(b1, b2), cb) in &b.terms {
            let e = (a1 + b1, a2 + b2);
            let v = ca * cb;
            match acc.get_mut(&e) {
                Some(x) => *x += v,
                None => {
                    acc.insert(e, v);
                }
            }
        }
    }
    QTLaurent {
        terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
    }
}

/// Exact quotient `f / g` in the Laurent ring, or `NotDivisible`.
pub fn exact_div(f: &QTLaurent, g: &QTLaurent) -> Result<QTLaurent, ExactError> {
    if g.is_zero() {
        return Err(ExactError::ZeroDenominator);
    }
    if f.is_zero() {
        return Ok(QTLaurent::zero());
    }
    if let Some(((gq, gt), c)) = g.as_monomial() {
        return Ok(f.shift(-gq, -gt).scale(&c.recip()));
    }
    // Strip monomial factors; a quotient exists iff the stripped divisor
    // divides the stripped dividend in the polynomial ring.
    let (fq, ft) = f.min_exponents();
    let (gq, gt) = g.min_exponents();
    let fp = f.shift(-fq, -ft);
    let gp = g.shift(-gq, -gt);
    let h = poly_div_exact(&fp, &gp)?;
    Ok(h.shift(fq - gq, ft - gt))
}

/// Division of genuine polynomials, lex order with `t` dominant.
fn poly_div_exact(f: &QTLaurent, g: &QTLaurent) -> Result<QTLaurent, ExactError> {
    let lex_lead = |p: &QTLaurent| -> Option<(Exponent, BigRational)> {
        p.terms
            .iter()
            .max_by_key(|(&(a, b), _)| (b, a))
            .map(|(e, c)| (*e, c.clone()))
    };
    let (glead, gc) = lex_lead(g).expect("nonzero divisor");
    let ginv = gc.recip();
    let mut rem = f.clone();
    let mut quot = QTLaurent::zero();
    while let Some(((rq, rt), rc)) = lex_lead(&rem) {
        if rq < glead.0 || rt < glead.1 {
            return Err(ExactError::NotDivisible);
        }
        let (dq, dt) = (rq - glead.0, rt - glead.1);
        let c = rc * &ginv;
        for (&(a, b), v) in &g.terms {
            rem.add_term((a + dq, b + dt), -(v * &c));
        }
        quot.add_term((dq, dt), c);
    }
    Ok(quot)
}

/// `[k] = 1 + q + ... + q^(k-1)`.
pub fn q_integer(k: u32) -> QTLaurent {
    QTLaurent::from_terms((0..k as i32).map(|i| ((i, 0), BigRational::one())))
}

/// `[k]! = [k][k-1]...[1]`.
pub fn q_factorial(k: u32) -> QTLaurent {
    (1..=k).fold(QTLaurent::one(), |acc, i| &acc * &q_integer(i))
}

/// `[pi]! = [pi_1]! ... [pi_l]!` for a composition `pi`.
pub fn pi_factorial(parts: &[usize]) -> QTLaurent {
    parts
        .iter()
        .fold(QTLaurent::one(), |acc, &p| &acc * &q_factorial(p as u32))
}
