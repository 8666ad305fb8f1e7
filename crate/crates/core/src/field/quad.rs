use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, Zero};

use super::{ExactScalar, Scalar};

/// Integer types usable as the base of the exact fields.
pub trait IntBase:
    Integer + Signed + Clone + Hash + fmt::Debug + fmt::Display + FromPrimitive + 'static
{
}

impl<T> IntBase for T where
    T: Integer + Signed + Clone + Hash + fmt::Debug + fmt::Display + FromPrimitive + 'static
{
}

/// An element `a + b√d` of the real quadratic field `Q(√d)`.
///
/// `d` is square-free and positive. Elements with `b = 0` are normalized to
/// `d = 1`, so a rational number has a single representation and can be
/// combined with elements of any quadratic field. Combining two irrational
/// elements of different fields panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quad<T: IntBase> {
    a: Ratio<T>,
    b: Ratio<T>,
    d: u32,
}

fn is_square_free(d: u32) -> bool {
    let mut p = 2u32;
    while p * p <= d {
        if d.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

impl<T: IntBase> Quad<T> {
    /// `a + b√d`. Panics when `d` is zero or not square-free.
    pub fn new(a: Ratio<T>, b: Ratio<T>, d: u32) -> Self {
        assert!(d >= 1 && is_square_free(d), "√{d}: discriminant must be square-free");
        Self::normalized(a, b, d)
    }

    pub fn rational(a: Ratio<T>) -> Self {
        Quad { a, b: Ratio::zero(), d: 1 }
    }

    /// `√d` itself.
    pub fn sqrt(d: u32) -> Self {
        Self::new(Ratio::zero(), Ratio::one(), d)
    }

    fn normalized(a: Ratio<T>, b: Ratio<T>, d: u32) -> Self {
        if d == 1 {
            Quad { a: a + b, b: Ratio::zero(), d: 1 }
        } else if b.is_zero() {
            Quad { a, b, d: 1 }
        } else {
            Quad { a, b, d }
        }
    }

    pub fn a(&self) -> &Ratio<T> {
        &self.a
    }

    pub fn b(&self) -> &Ratio<T> {
        &self.b
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn join(d1: u32, d2: u32) -> u32 {
        match (d1, d2) {
            (1, d) | (d, 1) => d,
            (x, y) if x == y => x,
            (x, y) => panic!("cannot combine elements of Q(√{x}) and Q(√{y})"),
        }
    }

    /// Galois conjugate `a - b√d`.
    pub fn conjugate(&self) -> Self {
        Quad { a: self.a.clone(), b: -self.b.clone(), d: self.d }
    }

    /// Field norm `a² - d·b²`.
    pub fn norm(&self) -> Ratio<T> {
        let d = Ratio::from_integer(T::from_u32(self.d).expect("discriminant fits"));
        self.a.clone() * self.a.clone() - d * self.b.clone() * self.b.clone()
    }

    /// Multiplicative inverse; panics on zero.
    pub fn recip(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "division by zero in Q(√{})", self.d);
        Quad::normalized(self.a.clone() / n.clone(), -self.b.clone() / n, self.d)
    }

    /// Sign of the real number, computed exactly.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Ratio::zero());
        let sb = self.b.cmp(&Ratio::zero());
        if sb == Ordering::Equal || sa == sb {
            return if sa == Ordering::Equal { sb } else { sa };
        }
        if sa == Ordering::Equal {
            return sb;
        }
        // opposite signs: compare a² with d·b²
        let d = Ratio::from_integer(T::from_u32(self.d).expect("discriminant fits"));
        let lhs = self.a.clone() * self.a.clone();
        let rhs = d * self.b.clone() * self.b.clone();
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn to_f64(&self) -> f64
    where
        T: num_traits::ToPrimitive,
    {
        let f = |r: &Ratio<T>| r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN);
        f(&self.a) + f(&self.b) * (self.d as f64).sqrt()
    }
}

impl<T: IntBase> Add for Quad<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let d = Self::join(self.d, rhs.d);
        Quad::normalized(self.a + rhs.a, self.b + rhs.b, d)
    }
}

impl<T: IntBase> Sub for Quad<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let d = Self::join(self.d, rhs.d);
        Quad::normalized(self.a - rhs.a, self.b - rhs.b, d)
    }
}

impl<T: IntBase> Mul for Quad<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let d = Self::join(self.d, rhs.d);
        let dr = Ratio::from_integer(T::from_u32(d).expect("discriminant fits"));
        let a = self.a.clone() * rhs.a.clone() + dr * self.b.clone() * rhs.b.clone();
        let b = self.a * rhs.b + self.b * rhs.a;
        Quad::normalized(a, b, d)
    }
}

impl<T: IntBase> Div for Quad<T> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.recip()
    }
}

impl<T: IntBase> Neg for Quad<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Quad { a: -self.a, b: -self.b, d: self.d }
    }
}

impl<T: IntBase> Zero for Quad<T> {
    fn zero() -> Self {
        Quad::rational(Ratio::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<T: IntBase> One for Quad<T> {
    fn one() -> Self {
        Quad::rational(Ratio::one())
    }
}

impl<T: IntBase> PartialOrd for Quad<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by real value.
impl<T: IntBase> Ord for Quad<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).signum()
    }
}

impl<T: IntBase> Scalar for Quad<T> {
    fn from_ratio(num: i64, den: i64) -> Self {
        let n = T::from_i64(num).expect("numerator fits base type");
        let m = T::from_i64(den).expect("denominator fits base type");
        Quad::rational(Ratio::new(n, m))
    }
}

impl<T: IntBase> fmt::Display for Quad<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let root = format!("√{}", self.d);
        let b = if self.b.is_one() {
            root
        } else if (-self.b.clone()).is_one() {
            format!("-{root}")
        } else {
            format!("{}{root}", self.b)
        };
        if self.a.is_zero() {
            write!(f, "{b}")
        } else if b.starts_with('-') {
            write!(f, "{}{b}", self.a)
        } else {
            write!(f, "{}+{b}", self.a)
        }
    }
}

impl<T: IntBase> ExactScalar for Quad<T> {
    /// `[a, b, d]` with `a` and `b` as exact rational strings.
    fn to_json(&self) -> serde_json::Value {
        serde_json::json!([self.a.to_string(), self.b.to_string(), self.d])
    }
}
