//! Integer Laurent polynomials in `v`, with `v² = q`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

/// `Σ coeffs[k] · v^{low + k}`, normalized so that the zero polynomial has no
/// coefficients and otherwise both end coefficients are nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    low: i32,
    coeffs: Vec<i128>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: i128) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · v^k`.
    pub fn monomial(c: i128, k: i32) -> Self {
        Laurent { low: k, coeffs: vec![c] }.normalized()
    }

    /// `q^k = v^{2k}`.
    pub fn q_pow(k: i32) -> Self {
        Self::monomial(1, 2 * k)
    }

    pub fn from_coeffs(low: i32, coeffs: Vec<i128>) -> Self {
        Laurent { low, coeffs }.normalized()
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == self.coeffs.len() {
            return Laurent::zero();
        }
        self.coeffs.drain(..lead);
        self.low += lead as i32;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low_degree(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn high_degree(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, k: i32) -> i128 {
        let idx = k - self.low;
        if idx < 0 {
            return 0;
        }
        self.coeffs.get(idx as usize).copied().unwrap_or(0)
    }

    /// `(c, k)` if this is `c · v^k` with `c ≠ 0`.
    pub fn as_monomial(&self) -> Option<(i128, i32)> {
        (self.coeffs.len() == 1).then(|| (self.coeffs[0], self.low))
    }

    /// Value at `v = 1`, i.e. `q = 1`.
    pub fn at_one(&self) -> i128 {
        self.coeffs.iter().sum()
    }

    pub fn scale(&self, c: i128) -> Self {
        Laurent {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
        .normalized()
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn add_scaled_shift(&mut self, other: &Laurent, c: i128, k: i32) {
        if other.is_zero() || c == 0 {
            return;
        }
        let olow = other.low + k;
        if self.is_zero() {
            self.low = olow;
            self.coeffs = other.coeffs.iter().map(|x| x * c).collect();
            *self = std::mem::take(self).normalized();
            return;
        }
        let new_low = self.low.min(olow);
        let new_high = (self.low + self.coeffs.len() as i32).max(olow + other.coeffs.len() as i32);
        if new_low < self.low {
            let pad = (self.low - new_low) as usize;
            let mut v = vec![0i128; pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.low = new_low;
        }
        self.coeffs.resize((new_high - self.low) as usize, 0);
        let off = (olow - self.low) as usize;
        for (i, x) in other.coeffs.iter().enumerate() {
            self.coeffs[off + i] += x * c;
        }
        *self = std::mem::take(self).normalized();
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out.add_scaled_shift(rhs, 1, 0);
        out
    }
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(self, rhs: Laurent) -> Laurent {
        &self + &rhs
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        self.add_scaled_shift(rhs, 1, 0);
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out.add_scaled_shift(rhs, -1, 0);
        out
    }
}

impl Sub for Laurent {
    type Output = Laurent;
    fn sub(self, rhs: Laurent) -> Laurent {
        &self - &rhs
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        self.scale(-1)
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        self.scale(-1)
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Laurent::from_coeffs(self.low + rhs.low, coeffs)
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, rhs: Laurent) -> Laurent {
        &self * &rhs
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let k = self.low + i as i32;
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        f.write_str("v")?;
                    } else {
                        write!(f, "v^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for Laurent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
