use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A prime field F_p with 2 <= p < 2^31. Elements are stored as `u64`
/// values already reduced modulo p, so products fit in a `u64` without
/// overflow (p^2 < 2^62).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    p: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(FieldSpec { p })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce_i64(&self, v: i64) -> u64 {
        let m = v.rem_euclid(self.p as i64);
        m as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a * b) % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat: a^(p-2). Panics on zero.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_gate() {
        assert!(FieldSpec::new(2).is_ok());
        assert!(FieldSpec::new(101).is_ok());
        assert!(FieldSpec::new(2147483647).is_ok()); // 2^31 - 1 is prime
        assert_eq!(FieldSpec::new(1), Err(Error::InvalidPrime(1)));
        assert_eq!(FieldSpec::new(4), Err(Error::InvalidPrime(4)));
        assert_eq!(FieldSpec::new(91), Err(Error::InvalidPrime(91))); // 7 * 13
        assert!(FieldSpec::new(1 << 31).is_err());
    }

    #[test]
    fn arithmetic_mod_101() {
        let f = FieldSpec::new(101).unwrap();
        assert_eq!(f.add(100, 5), 4);
        assert_eq!(f.sub(3, 7), 97);
        assert_eq!(f.mul(50, 50), 2500 % 101);
        assert_eq!(f.mul(13, f.inv(13)), 1);
        assert_eq!(f.neg(0), 0);
        assert_eq!(f.reduce_i64(-1), 100);
    }

    #[test]
    fn inverses_everywhere_small() {
        for p in [2u64, 3, 5, 7, 31] {
            let f = FieldSpec::new(p).unwrap();
            for a in 1..p {
                assert_eq!(f.mul(a, f.inv(a)), 1, "p={p} a={a}");
            }
        }
    }
}
