use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{Scalar, ScalarKind};

/// Exponent vector with trailing zeros trimmed, so variable count is implicit.
pub type Exponents = Vec<i32>;

fn trim(mut e: Exponents) -> Exponents {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

fn padded_cmp(a: &[i32], b: &[i32]) -> std::cmp::Ordering {
    let len = a.len().max(b.len());
    (0..len)
        .map(|i| a.get(i).copied().unwrap_or(0).cmp(&b.get(i).copied().unwrap_or(0)))
        .find(|o| o.is_ne())
        .unwrap_or(std::cmp::Ordering::Equal)
}

fn combine(a: &[i32], b: &[i32], f: impl Fn(i32, i32) -> i32) -> Exponents {
    let len = a.len().max(b.len());
    trim(
        (0..len)
            .map(|i| f(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0)))
            .collect(),
    )
}

/// Integer Laurent polynomial in variables `x1, x2, ...`, stored sparsely.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPolynomial {
    pub fn monomial(exponents: Exponents, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(trim(exponents), coeff);
        }
        Self { terms }
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(Vec::new(), BigInt::from(c))
    }

    /// The variable `x_{index+1}`.
    pub fn var(index: usize) -> Self {
        let mut e = vec![0; index + 1];
        e[index] = 1;
        Self::monomial(e, BigInt::one())
    }

    pub fn vars(count: usize) -> Vec<Self> {
        (0..count).map(Self::var).collect()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn has_positive_coefficients(&self) -> bool {
        self.terms.values().all(Signed::is_positive)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc * self.clone())
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Lexicographically largest term, comparing exponents as zero-padded.
    fn lead(&self) -> Option<(&Exponents, &BigInt)> {
        self.terms.iter().max_by(|a, b| padded_cmp(a.0, b.0))
    }

    /// Per-variable minimum and maximum exponents.
    fn degree_box(&self) -> (Vec<i32>, Vec<i32>) {
        let len = self.terms.keys().map(Vec::len).max().unwrap_or(0);
        let col = |i: usize| self.terms.keys().map(move |e| e.get(i).copied().unwrap_or(0));
        (
            (0..len).map(|i| col(i).min().unwrap_or(0)).collect(),
            (0..len).map(|i| col(i).max().unwrap_or(0)).collect(),
        )
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self`.
    ///
    /// Long division in lexicographic order. Degrees in each variable are
    /// additive under multiplication, so quotient terms outside the box
    /// `[min(p) - min(d), max(p) - max(d)]` prove non-divisibility.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (dl_e, dl_c) = divisor.lead()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (plo, phi) = self.degree_box();
        let (dlo, dhi) = divisor.degree_box();
        let len = plo.len().max(dlo.len());
        let get = |v: &Vec<i32>, i: usize| v.get(i).copied().unwrap_or(0);
        let lo: Vec<i32> = (0..len).map(|i| get(&plo, i) - get(&dlo, i)).collect();
        let hi: Vec<i32> = (0..len).map(|i| get(&phi, i) - get(&dhi, i)).collect();
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        while let Some((re, rc)) = rem.lead() {
            let (q, r) = rc.div_rem(dl_c);
            if !r.is_zero() {
                return None;
            }
            let qe = combine(re, dl_e, |a, b| a - b);
            let inside = (0..len).all(|i| (lo[i]..=hi[i]).contains(&get(&qe, i)));
            if !inside || qe.len() > len {
                return None;
            }
            let step = Self::monomial(qe, q);
            rem = rem - step.clone() * divisor.clone();
            quotient = quotient + step;
        }
        Some(quotient)
    }

    pub fn substitute<T: Scalar>(&self, point: &[T]) -> Option<T> {
        let mut total = T::zero();
        for (e, c) in &self.terms {
            let mut term = bigint_scalar::<T>(c);
            for (i, &k) in e.iter().enumerate() {
                let x = point.get(i)?;
                let f = if k >= 0 {
                    (0..k).fold(T::one(), |acc, _| acc * x.clone())
                } else {
                    let p = (0..-k).fold(T::one(), |acc, _| acc * x.clone());
                    T::one().checked_div(&p)?
                };
                term = term * f;
            }
            total = total + term;
        }
        Some(total)
    }

    /// Numerator polynomial and denominator exponents with `self = num / x^den`.
    pub fn split(&self) -> (Self, Exponents) {
        let len = self.terms.keys().map(Vec::len).max().unwrap_or(0);
        let den: Exponents = (0..len)
            .map(|i| {
                self.terms
                    .keys()
                    .map(|e| -e.get(i).copied().unwrap_or(0))
                    .max()
                    .unwrap_or(0)
                    .max(0)
            })
            .collect();
        let shift = Self::monomial(den.clone(), BigInt::one());
        (self.clone() * shift, trim(den))
    }
}

fn bigint_scalar<T: Scalar>(c: &BigInt) -> T {
    let base = T::from_i64(1 << 30);
    let mut digits = Vec::new();
    let mut m = c.abs();
    let radix = BigInt::from(1i64 << 30);
    while !m.is_zero() {
        let (q, r) = m.div_rem(&radix);
        digits.push(i64::try_from(r).expect("digit"));
        m = q;
    }
    let v = digits
        .iter()
        .rev()
        .fold(T::zero(), |acc, &d| acc * base.clone() + T::from_i64(d));
    if c.is_negative() {
        -v
    } else {
        v
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &[i32]) -> fmt::Result {
    let mut first = true;
    for (i, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "x{}", i + 1)?;
        if k != 1 {
            write!(f, "^{k}")?;
        }
    }
    Ok(())
}

fn degree(e: &[i32]) -> i32 {
    e.iter().sum()
}

impl fmt::Display for LaurentPolynomial {
    /// `numerator/denominator` with graded term order, e.g. `(1 + x2^2)/x1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let (num, den) = self.split();
        let mut terms: Vec<_> = num.terms.iter().collect();
        terms.sort_by(|a, b| {
            degree(a.0)
                .cmp(&degree(b.0))
                .then_with(|| b.0.cmp(a.0))
        });
        let wrap = terms.len() > 1 && !den.is_empty();
        if wrap {
            write!(f, "(")?;
        }
        for (n, (e, c)) in terms.iter().enumerate() {
            let constant = e.iter().all(|&k| k == 0);
            let mag = c.abs();
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if constant {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, e)?;
            }
        }
        if wrap {
            write!(f, ")")?;
        }
        if !den.is_empty() {
            write!(f, "/")?;
            let factors = den.iter().filter(|&&k| k != 0).count();
            if factors > 1 {
                write!(f, "(")?;
            }
            write_monomial(f, &den)?;
            if factors > 1 {
                write!(f, ")")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for LaurentPolynomial {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for LaurentPolynomial {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for LaurentPolynomial {
    type Output = Self;
    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for LaurentPolynomial {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(combine(ea, eb, |a, b| a + b), ca * cb);
            }
        }
        out
    }
}

impl Zero for LaurentPolynomial {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPolynomial {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl Scalar for LaurentPolynomial {
    const KIND: ScalarKind = ScalarKind::Laurent;

    fn from_i64(v: i64) -> Self {
        Self::constant(v)
    }

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        self.div_exact(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division_and_display() {
        let [x1, x2] = [LaurentPolynomial::var(0), LaurentPolynomial::var(1)];
        let num = LaurentPolynomial::one() + x2.pow(2);
        let q = num.div_exact(&x1).unwrap();
        assert_eq!(q.to_string(), "(1 + x2^2)/x1");
        let p = (x1.clone() + x2.clone()) * (x1.clone() - x2.clone() + LaurentPolynomial::one());
        assert_eq!(p.div_exact(&(x1.clone() + x2.clone())).unwrap(), x1.clone() - x2.clone() + LaurentPolynomial::one());
        assert!((x1.clone() + LaurentPolynomial::one()).div_exact(&(x2 + LaurentPolynomial::one())).is_none());
    }
}
