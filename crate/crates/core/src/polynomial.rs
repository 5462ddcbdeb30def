//! Univariate polynomials in `k` with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Coefficients indexed by power, lowest first, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| integer(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `k`.
    pub fn var() -> Self {
        Self::from_integers(&[0, 1])
    }

    /// `k + c`.
    pub fn linear(c: i64) -> Self {
        Self::from_integers(&[c, 1])
    }

    /// `k^e`.
    pub fn monomial(e: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = BigRational::one();
        Polynomial { coeffs }
    }

    /// `k(k-1)...(k-n+1)`.
    pub fn falling_factorial(n: usize) -> Self {
        (0..n).fold(Self::one(), |acc, i| acc * Self::linear(-(i as i64)))
    }

    /// `k(k+1)...(k+n-1)`.
    pub fn rising_factorial(n: usize) -> Self {
        (0..n).fold(Self::one(), |acc, i| acc * Self::linear(i as i64))
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> BigRational {
        self.coeffs.get(power).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, k: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * k + c)
    }

    pub fn eval_int(&self, k: i64) -> BigRational {
        self.eval(&integer(k))
    }

    /// Value at an integer point when that value is itself an integer.
    pub fn eval_integer(&self, k: i64) -> Option<BigInt> {
        let v = self.eval_int(k);
        v.is_integer().then(|| v.to_integer())
    }

    /// `p(k + c)`.
    pub fn shift(&self, c: i64) -> Self {
        let lin = Self::linear(c);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, x| acc * lin.clone() + Self::constant(x.clone()))
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc * self.clone())
    }

    /// Divides by `(k - r)` when `r` is a root, returning the quotient.
    fn divide_root(&self, r: &BigRational) -> Option<Self> {
        if self.is_zero() || !self.eval(r).is_zero() {
            return None;
        }
        let d = self.coeffs.len() - 1;
        let mut q = vec![BigRational::zero(); d];
        let mut carry = BigRational::zero();
        for i in (1..=d).rev() {
            carry = &carry * r + &self.coeffs[i];
            q[i - 1] = carry.clone();
        }
        Some(Self::new(q))
    }

    /// Splits the polynomial as `c · ∏ (k - r)^e` over integer roots, when it
    /// splits completely. Roots are returned with multiplicity.
    pub fn integer_factorization(&self) -> Option<(BigRational, Vec<i64>)> {
        if self.is_zero() {
            return None;
        }
        let mut rest = self.clone();
        let mut roots = Vec::new();
        let bound = self.cauchy_root_bound()?;
        'outer: while rest.degree().unwrap_or(0) > 0 {
            for r in root_candidates(bound) {
                if let Some(q) = rest.divide_root(&integer(r)) {
                    roots.push(r);
                    rest = q;
                    continue 'outer;
                }
            }
            return None;
        }
        roots.sort_by_key(|&r| (r.unsigned_abs(), r < 0));
        Some((rest.leading_coefficient(), roots))
    }

    fn cauchy_root_bound(&self) -> Option<i64> {
        let lead = self.leading_coefficient();
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| (c / &lead).abs())
            .fold(BigRational::zero(), |a, b| if b > a { b } else { a });
        (max.ceil().to_integer() + BigInt::one())
            .to_i64()
            .filter(|&b| b <= 1 << 20)
    }

    /// Factored form such as `k(k-1)^2` or `(1/2)k(k+1)`, if the polynomial
    /// splits over the integers.
    pub fn factored(&self) -> Option<String> {
        let (lead, roots) = self.integer_factorization()?;
        if roots.is_empty() {
            return None;
        }
        let mut out = String::new();
        if lead == -BigRational::one() {
            out.push('-');
        } else if !lead.is_one() {
            out.push_str(&paren_coeff(&lead));
        }
        let mut i = 0;
        while i < roots.len() {
            let r = roots[i];
            let mult = roots[i..].iter().take_while(|&&x| x == r).count();
            let base = match r {
                0 => "k".to_string(),
                r if r > 0 => format!("(k-{r})"),
                r => format!("(k+{})", -r),
            };
            out.push_str(&base);
            if mult > 1 {
                out.push_str(&format!("^{mult}"));
            }
            i += mult;
        }
        Some(out)
    }

    /// Coefficients as `"num/den"` strings, lowest power first.
    pub fn to_coefficient_strings(&self) -> Vec<String> {
        self.coeffs
            .iter()
            .map(|c| format!("{}/{}", c.numer(), c.denom()))
            .collect()
    }

    pub fn from_coefficient_strings<S: AsRef<str>>(items: &[S]) -> Result<Self, String> {
        items
            .iter()
            .map(|s| {
                let s = s.as_ref();
                let (n, d) = s.split_once('/').unwrap_or((s, "1"));
                let n: BigInt = n.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
                let d: BigInt = d.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
                if d.is_zero() {
                    return Err(format!("zero denominator in {s:?}"));
                }
                Ok(BigRational::new(n, d))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }
}

fn root_candidates(bound: i64) -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..=bound).flat_map(|r| [r, -r]))
}

fn paren_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("({}/{})", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    /// Expanded form with exact coefficients, e.g. `k^3 - 2k^2 + k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let mag = c.abs();
            if e == 0 {
                if mag.is_integer() {
                    write!(f, "{}", mag.to_integer())?;
                } else {
                    write!(f, "{}/{}", mag.numer(), mag.denom())?;
                }
                continue;
            }
            if !mag.is_one() {
                write!(f, "{}", paren_coeff(&mag))?;
            }
            if e == 1 {
                write!(f, "k")?;
            } else {
                write!(f, "k^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_coefficient_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(d)?;
        Polynomial::from_coefficient_strings(&items).map_err(D::Error::custom)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn trims_and_degree() {
        let p = Polynomial::from_integers(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(Polynomial::from_integers(&[0, 0]).degree(), None);
        assert!(Polynomial::from_integers(&[0]).is_zero());
    }

    #[test]
    fn display_expanded() {
        let p3 = Polynomial::from_integers(&[0, 1, -2, 1]);
        assert_eq!(p3.to_string(), "k^3 - 2k^2 + k");
        let half = Polynomial::new(vec![rational(0, 1), rational(1, 2), rational(1, 2)]);
        assert_eq!(half.to_string(), "(1/2)k^2 + (1/2)k");
        assert_eq!(Polynomial::from_integers(&[-3]).to_string(), "-3");
        assert_eq!(Polynomial::constant(rational(-1, 2)).to_string(), "-1/2");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::from_integers(&[1, -1]).to_string(), "-k + 1");
    }

    #[test]
    fn factored_forms() {
        let p3 = Polynomial::from_integers(&[0, 1, -2, 1]);
        assert_eq!(p3.factored().as_deref(), Some("k(k-1)^2"));
        let rising = Polynomial::rising_factorial(2).scale(&rational(1, 2));
        assert_eq!(rising.factored().as_deref(), Some("(1/2)k(k+1)"));
        assert_eq!(
            Polynomial::falling_factorial(3).factored().as_deref(),
            Some("k(k-1)(k-2)")
        );
        // C_4: k^4 - 4k^3 + 6k^2 - 3k = k(k-1)(k^2-3k+3), not split
        assert_eq!(Polynomial::from_integers(&[0, -3, 6, -4, 1]).factored(), None);
        assert_eq!(Polynomial::from_integers(&[5]).factored(), None);
    }

    #[test]
    fn shift_and_eval() {
        let p = Polynomial::falling_factorial(3);
        let q = p.shift(-2);
        for k in -3..8 {
            assert_eq!(q.eval_int(k), p.eval_int(k - 2));
        }
        assert_eq!(Polynomial::var().pow(3), Polynomial::monomial(3));
    }

    #[test]
    fn coefficient_strings_round_trip() {
        let p = Polynomial::new(vec![rational(-1, 3), rational(0, 1), rational(7, 2)]);
        let s = p.to_coefficient_strings();
        assert_eq!(s, vec!["-1/3", "0/1", "7/2"]);
        assert_eq!(Polynomial::from_coefficient_strings(&s).unwrap(), p);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"["-1/3","0/1","7/2"]"#);
        assert_eq!(serde_json::from_str::<Polynomial>(&json).unwrap(), p);
        assert!(Polynomial::from_coefficient_strings(&["1/0"]).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((-20i64..20, 1i64..6), 0..6)
            .prop_map(|cs| Polynomial::new(cs.into_iter().map(|(n, d)| rational(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn ring_ops_agree_with_evaluation(p in arb_poly(), q in arb_poly(), k in -6i64..6) {
            prop_assert_eq!((&p + &q).eval_int(k), p.eval_int(k) + q.eval_int(k));
            prop_assert_eq!((&p - &q).eval_int(k), p.eval_int(k) - q.eval_int(k));
            prop_assert_eq!((&p * &q).eval_int(k), p.eval_int(k) * q.eval_int(k));
            prop_assert_eq!(p.shift(3).eval_int(k), p.eval_int(k + 3));
        }

        #[test]
        fn factorization_reconstructs(roots in proptest::collection::vec(-4i64..6, 1..5), c in 1i64..5) {
            let p = roots.iter().fold(Polynomial::constant(rational(1, c)), |acc, &r| acc * Polynomial::linear(-r));
            let (lead, found) = p.integer_factorization().unwrap();
            let mut a = roots.clone();
            a.sort();
            let mut b = found.clone();
            b.sort();
            prop_assert_eq!(a, b);
            prop_assert_eq!(lead, rational(1, c));
        }
    }
}
