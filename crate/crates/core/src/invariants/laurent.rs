use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer Laurent polynomial `Σ c_i t^i`.
///
/// Stored densely from the lowest exponent; no leading or trailing zero
/// coefficients are kept, and the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c · t^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        Self::from_coeffs(e, vec![c.into()])
    }

    /// Polynomial with coefficients `c_0, c_1, ...` starting at `t^low`.
    pub fn from_coeffs(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(low: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low_exponent(&self) -> i64 {
        self.low
    }

    pub fn high_exponent(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    /// Exponent span `high − low`; zero for constants.
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let i = e - self.low;
        if i < 0 || i as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Coefficients from the lowest exponent upwards.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeffs_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| i64::try_from(c).ok()).collect()
    }

    pub fn shift(&self, by: i64) -> Self {
        LaurentPoly { low: if self.is_zero() { 0 } else { self.low + by }, coeffs: self.coeffs.clone() }
    }

    pub fn eval(&self, t: &BigInt) -> Option<BigInt> {
        if t.is_zero() && self.low < 0 {
            return None;
        }
        // Horner over the polynomial part, then multiply by t^low.
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        if self.low >= 0 {
            Some(acc * t.pow(self.low as u32))
        } else {
            let d = t.pow((-self.low) as u32);
            let (q, r) = acc.div_rem(&d);
            r.is_zero().then_some(q)
        }
    }

    pub fn eval_i64(&self, t: i64) -> BigInt {
        match t {
            1 => self.coeffs.iter().sum(),
            -1 => self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if (self.low + i as i64).rem_euclid(2) == 0 { c.clone() } else { -c })
                .sum(),
            _ => self.eval(&BigInt::from(t)).expect("integer evaluation of a Laurent polynomial"),
        }
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        if d.coeffs.len() == 1 {
            let c = &d.coeffs[0];
            let mut out = Vec::with_capacity(self.coeffs.len());
            for x in &self.coeffs {
                let (q, r) = x.div_rem(c);
                if !r.is_zero() {
                    return None;
                }
                out.push(q);
            }
            return Some(LaurentPoly { low: self.low - d.low, coeffs: out });
        }
        // long division from the top coefficient down
        let dn = d.coeffs.len();
        if self.coeffs.len() < dn {
            return None;
        }
        let lead = d.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let qn = rem.len() - dn + 1;
        let mut q = vec![BigInt::zero(); qn];
        for i in (0..qn).rev() {
            let top = &rem[i + dn - 1];
            if top.is_zero() {
                continue;
            }
            let (qi, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &qi * dc;
            }
            q[i] = qi;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(LaurentPoly::from_coeffs(self.low - d.low, q))
    }

    /// Shifts to lowest exponent 0 with a positive constant coefficient.
    pub fn normalized(&self) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        let p = LaurentPoly { low: 0, coeffs: self.coeffs.clone() };
        if p.coeffs[0].is_negative() {
            -p
        } else {
            p
        }
    }

    /// `coeff(i) = ± coeff(deg − i)` for all `i` after normalization.
    pub fn is_palindromic_up_to_sign(&self) -> bool {
        let n = self.coeffs.len();
        (0..n).all(|i| self.coeffs[i].abs() == self.coeffs[n - 1 - i].abs())
    }

    /// `p(t^{-1})`.
    pub fn invert_variable(&self) -> LaurentPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly::from_coeffs(-self.high_exponent(), coeffs)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let high = self.high_exponent().max(o.high_exponent());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + i] += c;
        }
        for (i, c) in o.coeffs.iter().enumerate() {
            coeffs[(o.low - low) as usize + i] += c;
        }
        LaurentPoly::from_coeffs(low, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        self + &(-o.clone())
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.coeffs.iter().enumerate() {
                coeffs[i + j] += x * y;
            }
        }
        LaurentPoly::from_coeffs(self.low + o.low, coeffs)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: LaurentPoly) -> LaurentPoly {
        &self + &o
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: LaurentPoly) -> LaurentPoly {
        &self - &o
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: LaurentPoly) -> LaurentPoly {
        &self * &o
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.low + i as i64;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || e == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}
