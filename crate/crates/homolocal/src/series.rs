//! Certified truncated series and exact integer Laurent polynomials.
//!
//! A [`TruncatedSeries`] knows its coefficients exactly for every index up to
//! a window top: below `lo` all coefficients are zero, inside `lo..=hi` they
//! are stored, and above `hi` they are unknown (absent, never zero-filled).
//! [`ZPoly`] is an exact integer Laurent polynomial used for closed forms and
//! for padding factors like (1+t)^k.

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TruncatedSeries {
    lo: i64,
    coeffs: Vec<u64>,
}

impl TruncatedSeries {
    pub fn new(lo: i64, coeffs: Vec<u64>) -> Self {
        TruncatedSeries { lo, coeffs }
    }

    pub fn window_lo(&self) -> i64 {
        self.lo
    }

    /// Largest index whose coefficient is certified.
    pub fn window_hi(&self) -> i64 {
        self.lo + self.coeffs.len() as i64 - 1
    }

    /// Some(c) for certified indices (zero below the window), None above.
    pub fn get(&self, i: i64) -> Option<u64> {
        if i < self.lo {
            Some(0)
        } else if i <= self.window_hi() {
            Some(self.coeffs[(i - self.lo) as usize])
        } else {
            None
        }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.coeffs.iter().enumerate().map(|(k, &v)| (self.lo + k as i64, v))
    }

    /// Largest certified index with a nonzero coefficient.
    pub fn sup_nonzero(&self) -> Option<i64> {
        self.iter().filter(|&(_, v)| v != 0).map(|(i, _)| i).max()
    }

    /// Smallest index with a nonzero coefficient (the order of the series).
    pub fn order(&self) -> Option<i64> {
        self.iter().find(|&(_, v)| v != 0).map(|(i, _)| i)
    }

    pub fn is_zero_within_window(&self) -> bool {
        self.coeffs.iter().all(|&v| v == 0)
    }

    /// True when the final certified coefficient is nonzero, i.e. the series
    /// may well continue past the window.
    pub fn tail_alive(&self) -> bool {
        self.coeffs.last().is_some_and(|&v| v != 0)
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let lo = self.lo.min(other.lo);
        let hi = self.window_hi().min(other.window_hi());
        let mut coeffs = Vec::new();
        for i in lo..=hi {
            coeffs.push(self.get(i).unwrap() + other.get(i).unwrap());
        }
        TruncatedSeries { lo, coeffs }
    }

    /// Multiplies by an exact polynomial with non-negative coefficients.
    /// The certified top drops by the polynomial's lowest exponent offset:
    /// coefficient i of the product needs input coefficients back to
    /// i - min(supp q), so it is certified for i <= hi + min(supp q).
    pub fn mul_poly(&self, q: &ZPoly) -> TruncatedSeries {
        assert!(q.coeffs().iter().all(|&c| c >= 0), "series product needs non-negative factor");
        if q.is_zero() {
            return TruncatedSeries::new(self.lo, vec![0; self.coeffs.len()]);
        }
        let qlo = q.min_support().unwrap();
        let lo = self.lo + qlo;
        let hi = self.window_hi() + qlo;
        let mut coeffs = vec![0u64; (hi - lo + 1) as usize];
        for i in lo..=hi {
            let mut acc = 0u64;
            for (j, c) in q.iter() {
                if c == 0 {
                    continue;
                }
                let s = self.get(i - j).expect("window arithmetic keeps products certified");
                acc += (c as u64) * s;
            }
            coeffs[(i - lo) as usize] = acc;
        }
        TruncatedSeries { lo, coeffs }
    }

    /// Coefficientwise comparison self <= other over the common certified
    /// window. Returns the first violating index on failure.
    pub fn leq(&self, other: &TruncatedSeries) -> std::result::Result<i64, i64> {
        let lo = self.lo.min(other.lo);
        let hi = self.window_hi().min(other.window_hi());
        for i in lo..=hi {
            if self.get(i).unwrap() > other.get(i).unwrap() {
                return Err(i);
            }
        }
        Ok(hi)
    }

    /// Exact equality over the common certified window; Err(first mismatch).
    pub fn eq_window(&self, other: &TruncatedSeries) -> std::result::Result<i64, i64> {
        let lo = self.lo.min(other.lo);
        let hi = self.window_hi().min(other.window_hi());
        for i in lo..=hi {
            if self.get(i).unwrap() != other.get(i).unwrap() {
                return Err(i);
            }
        }
        Ok(hi)
    }

    pub fn to_zpoly(&self) -> ZPoly {
        ZPoly::new(self.lo, self.coeffs.iter().map(|&v| v as i64).collect())
    }

    /// Restricts the certified window to `..=hi`.
    pub fn truncate_hi(&self, hi: i64) -> TruncatedSeries {
        if hi >= self.window_hi() {
            return self.clone();
        }
        let keep = (hi - self.lo + 1).max(0) as usize;
        TruncatedSeries::new(self.lo, self.coeffs[..keep].to_vec())
    }
}

/// Exact integer Laurent polynomial: full support is known.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZPoly {
    lo: i64,
    coeffs: Vec<i64>,
}

impl ZPoly {
    pub fn new(lo: i64, coeffs: Vec<i64>) -> Self {
        let mut p = ZPoly { lo, coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        ZPoly { lo: 0, coeffs: vec![] }
    }

    pub fn one() -> Self {
        ZPoly { lo: 0, coeffs: vec![1] }
    }

    /// The monomial c * t^k.
    pub fn monomial(c: i64, k: i64) -> Self {
        ZPoly::new(k, vec![c])
    }

    /// 1 + t
    pub fn one_plus_t() -> Self {
        ZPoly::new(0, vec![1, 1])
    }

    /// 1 - t
    pub fn one_minus_t() -> Self {
        ZPoly::new(0, vec![1, -1])
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.lo += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_support(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.lo)
    }

    pub fn max_support(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.lo + self.coeffs.len() as i64 - 1)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn get(&self, i: i64) -> i64 {
        if i < self.lo || i - self.lo >= self.coeffs.len() as i64 {
            0
        } else {
            self.coeffs[(i - self.lo) as usize]
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().enumerate().map(|(k, &v)| (self.lo + k as i64, v))
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = self.max_support().unwrap().max(other.max_support().unwrap());
        let mut coeffs = vec![0i64; (hi - lo + 1) as usize];
        for (i, v) in self.iter().chain(other.iter()) {
            coeffs[(i - lo) as usize] += v;
        }
        ZPoly::new(lo, coeffs)
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly::new(self.lo, self.coeffs.iter().map(|&c| -c).collect())
    }

    pub fn sub(&self, other: &ZPoly) -> ZPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let lo = self.lo + other.lo;
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        ZPoly::new(lo, coeffs)
    }

    pub fn pow(&self, mut e: u32) -> ZPoly {
        let mut acc = ZPoly::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// t^s * p(1/t): coefficient at i becomes the coefficient at s - i.
    pub fn reverse_at(&self, s: i64) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let hi = self.max_support().unwrap();
        let new_lo = s - hi;
        let coeffs = self.coeffs.iter().rev().copied().collect();
        ZPoly::new(new_lo, coeffs)
    }

    /// Exact quotient if `other` divides `self` over the integers.
    pub fn div_exact(&self, other: &ZPoly) -> Option<ZPoly> {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        let lead_other = *other.coeffs.last().unwrap();
        let mut rem = self.clone();
        let mut q = ZPoly::zero();
        while !rem.is_zero() && rem.coeffs.len() >= other.coeffs.len() {
            let lead_rem = *rem.coeffs.last().unwrap();
            if lead_rem % lead_other != 0 {
                return None;
            }
            let c = lead_rem / lead_other;
            let k = rem.max_support().unwrap() - other.max_support().unwrap();
            let term = ZPoly::monomial(c, k);
            q = q.add(&term);
            rem = rem.sub(&other.mul(&term));
        }
        rem.is_zero().then_some(q)
    }

    /// Power series expansion of self/denom on indices `lo_out..=hi_out`.
    /// `denom` must have an invertible (+-1) lowest coefficient so the
    /// expansion stays integral.
    pub fn expand_div(&self, denom: &ZPoly, lo_out: i64, hi_out: i64) -> ZPoly {
        assert!(!denom.is_zero(), "division by zero series");
        let dlo = denom.min_support().unwrap();
        let d0 = denom.get(dlo);
        assert!(d0 == 1 || d0 == -1, "series division needs unit lowest coefficient");
        if self.is_zero() {
            return ZPoly::zero();
        }
        let start = self.min_support().unwrap() - dlo;
        let mut out: Vec<i64> = Vec::new();
        let lo = start.min(lo_out);
        for i in lo..=hi_out {
            // q_i = (num_{i+dlo} - sum_{j<i} q_j d_{i-j+dlo}) / d0
            let mut acc = self.get(i + dlo);
            for (k, &qj) in out.iter().enumerate() {
                let j = lo + k as i64;
                acc -= qj * denom.get(i - j + dlo);
            }
            out.push(acc / d0);
        }
        ZPoly::new(lo, out)
    }

    /// The certified-series view of an exact polynomial, windowed at `hi`.
    pub fn to_series(&self, hi: i64) -> TruncatedSeries {
        let lo = self.min_support().unwrap_or(0).min(0);
        let coeffs = (lo..=hi)
            .map(|i| {
                let c = self.get(i);
                assert!(c >= 0, "series coefficients must be non-negative");
                c as u64
            })
            .collect();
        TruncatedSeries::new(lo, coeffs)
    }
}
