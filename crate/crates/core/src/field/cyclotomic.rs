use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::Ratio;
use num_traits::{One, Zero};

use super::quad::IntBase;
use super::{ExactScalar, Scalar};

/// An element of the cyclotomic field `Q(ζ_M)`, stored as a polynomial in
/// `ζ_M` of degree below `φ(M)` with rational coefficients.
///
/// Rational elements are normalized to conductor 1 so they mix with any field;
/// combining irrational elements of different conductors panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclotomic<T: IntBase> {
    conductor: u32,
    coeffs: Vec<Ratio<T>>,
}

/// Coefficients of the cyclotomic polynomial `Φ_m`, lowest degree first.
fn cyclotomic_poly(m: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("cache lock").get(&m) {
        return p.clone();
    }
    // x^m - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            let div = cyclotomic_poly(d);
            num = exact_divide(&num, &div);
        }
    }
    let p = Arc::new(num);
    cache.lock().expect("cache lock").insert(m, p.clone());
    p
}

fn exact_divide(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    let mut quot = vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

impl<T: IntBase> Cyclotomic<T> {
    pub fn rational(r: Ratio<T>) -> Self {
        let coeffs = if r.is_zero() { vec![] } else { vec![r] };
        Cyclotomic { conductor: 1, coeffs }
    }

    /// `ζ_M^e` for a primitive `M`-th root of unity `ζ_M`.
    pub fn zeta(conductor: u32, e: i64) -> Self {
        assert!(conductor >= 1);
        let e = e.rem_euclid(conductor as i64) as usize;
        let mut coeffs = vec![Ratio::zero(); e + 1];
        coeffs[e] = Ratio::one();
        Self::reduced(conductor, coeffs)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Ratio<T>] {
        &self.coeffs
    }

    fn reduced(conductor: u32, mut coeffs: Vec<Ratio<T>>) -> Self {
        let phi = cyclotomic_poly(conductor);
        let k = phi.len() - 1;
        if coeffs.len() > k {
            for i in (k..coeffs.len()).rev() {
                let c = std::mem::replace(&mut coeffs[i], Ratio::zero());
                if c.is_zero() {
                    continue;
                }
                for (j, &pj) in phi[..k].iter().enumerate() {
                    if pj != 0 {
                        let pj = Ratio::from_integer(T::from_i64(pj).expect("coefficient fits"));
                        coeffs[i - k + j] = coeffs[i - k + j].clone() - c.clone() * pj;
                    }
                }
            }
            coeffs.truncate(k);
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let conductor = if coeffs.len() <= 1 { 1 } else { conductor };
        Cyclotomic { conductor, coeffs }
    }

    fn join(m1: u32, m2: u32) -> u32 {
        match (m1, m2) {
            (1, m) | (m, 1) => m,
            (x, y) if x == y => x,
            (x, y) => panic!("cannot combine elements of Q(ζ_{x}) and Q(ζ_{y})"),
        }
    }

    fn coeff(&self, i: usize) -> Ratio<T> {
        self.coeffs.get(i).cloned().unwrap_or_else(Ratio::zero)
    }

    fn zip_with(self, rhs: Self, f: impl Fn(Ratio<T>, Ratio<T>) -> Ratio<T>) -> Self {
        let m = Self::join(self.conductor, rhs.conductor);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| f(self.coeff(i), rhs.coeff(i))).collect();
        Self::reduced(m, coeffs)
    }
}

impl<T: IntBase> Add for Cyclotomic<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<T: IntBase> Sub for Cyclotomic<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl<T: IntBase> Mul for Cyclotomic<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let m = Self::join(self.conductor, rhs.conductor);
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![Ratio::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::reduced(m, out)
    }
}

impl<T: IntBase> Neg for Cyclotomic<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<T: IntBase> Zero for Cyclotomic<T> {
    fn zero() -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: IntBase> One for Cyclotomic<T> {
    fn one() -> Self {
        Self::rational(Ratio::one())
    }
}

impl<T: IntBase> Scalar for Cyclotomic<T> {
    fn from_ratio(num: i64, den: i64) -> Self {
        let n = T::from_i64(num).expect("numerator fits base type");
        let d = T::from_i64(den).expect("denominator fits base type");
        Self::rational(Ratio::new(n, d))
    }
}

impl<T: IntBase> PartialOrd for Cyclotomic<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Representation order (conductor, then coefficients); not a field order.
impl<T: IntBase> Ord for Cyclotomic<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.conductor.cmp(&other.conductor).then_with(|| {
            let len = self.coeffs.len().max(other.coeffs.len());
            (0..len)
                .map(|i| self.coeff(i).cmp(&other.coeff(i)))
                .find(|o| *o != Ordering::Equal)
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl<T: IntBase> fmt::Display for Cyclotomic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = match i {
                0 => c.to_string(),
                _ if c.is_one() => format!("ζ{}^{i}", self.conductor),
                _ => format!("{c}ζ{}^{i}", self.conductor),
            };
            if !first && !term.starts_with('-') {
                write!(f, "+")?;
            }
            write!(f, "{term}")?;
            first = false;
        }
        Ok(())
    }
}

impl<T: IntBase> ExactScalar for Cyclotomic<T> {
    fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "conductor": self.conductor,
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Cyclotomic<i64>;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(*cyclotomic_poly(9), vec![1, 0, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn roots_of_unity_multiply() {
        for m in [3u32, 4, 5, 8, 12, 20, 24] {
            let z = C::zeta(m, 1);
            let mut p = C::one();
            for k in 1..=m {
                p = p * z.clone();
                assert_eq!(p == C::one(), k == m, "ζ_{m}^{k}");
            }
        }
    }

    #[test]
    fn cosine_identities() {
        // 2cos(π/3) = 1 with ζ = ζ_6
        let z = C::zeta(6, 1);
        assert_eq!(z.clone() + C::zeta(6, -1), C::one());
        // (ζ_8 + ζ_8⁻¹)² = 2
        let c = C::zeta(8, 1) + C::zeta(8, -1);
        assert_eq!(c.clone() * c, C::from_int(2));
        // sum of all primitive 5th roots is -1
        let s = (1..5).fold(C::zero(), |acc, k| acc + C::zeta(5, k));
        assert_eq!(s, -C::one());
    }

    #[test]
    fn rational_elements_normalize() {
        let x = C::zeta(12, 6);
        assert_eq!(x.conductor(), 1);
        assert_eq!(x, -C::one());
    }
}
