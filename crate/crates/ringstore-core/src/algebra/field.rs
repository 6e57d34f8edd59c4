//! Prime-field arithmetic context and elements.

use super::AlgebraError;

/// Largest supported modulus. Keeps `a * b` inside `u64` and keeps the
/// trial-division primality check cheap.
pub const MAX_MODULUS: u64 = 1 << 31;

/// A prime field GF(p), identified by its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u64,
}

impl FieldSpec {
    /// Creates the field GF(p). The modulus is checked for primality by
    /// trial division.
    pub fn new(p: u64) -> Result<Self, AlgebraError> {
        if p >= MAX_MODULUS {
            return Err(AlgebraError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        Ok(FieldSpec { p })
    }

    /// The binary field GF(2).
    pub fn gf2() -> Self {
        FieldSpec { p: 2 }
    }

    /// The smallest prime >= `n`.
    pub fn smallest_prime_at_least(n: u64) -> Result<Self, AlgebraError> {
        let mut candidate = n.max(2);
        loop {
            if candidate >= MAX_MODULUS {
                return Err(AlgebraError::ModulusTooLarge(candidate));
            }
            if is_prime(candidate) {
                return Ok(FieldSpec { p: candidate });
            }
            candidate += 1;
        }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// Wraps an integer into the field, reducing modulo p.
    pub fn element(&self, value: u64) -> FieldElement {
        FieldElement {
            value: value % self.p,
            field: *self,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    // Raw-value arithmetic. Inputs must already be reduced; every operation
    // returns a reduced value.

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    /// Multiplicative inverse of a nonzero value, by extended Euclid.
    pub fn inv(&self, a: u64) -> Result<u64, AlgebraError> {
        if a == 0 {
            return Err(AlgebraError::ZeroInverse);
        }
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "modulus is prime, gcd must be 1");
        Ok(t0.rem_euclid(self.p as i64) as u64)
    }
}

/// A value in [0, p) tagged with its field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldElement {
    value: u64,
    field: FieldSpec,
}

impl FieldElement {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement, AlgebraError> {
        self.same_field(other)?;
        Ok(self.field.element(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement, AlgebraError> {
        self.same_field(other)?;
        Ok(self.field.element(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement, AlgebraError> {
        self.same_field(other)?;
        Ok(self.field.element(self.field.mul(self.value, other.value)))
    }

    /// Multiplicative inverse. Fails on zero.
    pub fn inv(&self) -> Result<FieldElement, AlgebraError> {
        Ok(self.field.element(self.field.inv(self.value)?))
    }

    fn same_field(&self, other: &FieldElement) -> Result<(), AlgebraError> {
        if self.field != other.field {
            return Err(AlgebraError::FieldMismatch {
                left: self.field.prime(),
                right: other.field.prime(),
            });
        }
        Ok(())
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_primes() {
        for bad in [0, 1, 4, 6, 9, 15, 100] {
            assert!(FieldSpec::new(bad).is_err(), "{bad} accepted as prime");
        }
        for good in [2, 3, 5, 7, 11, 101, 65_537] {
            assert!(FieldSpec::new(good).is_ok(), "{good} rejected");
        }
    }

    #[test]
    fn inverse_identities() {
        let gf11 = FieldSpec::new(11).unwrap();
        assert_eq!(gf11.element(1).inv().unwrap().value(), 1);
        assert_eq!(gf11.element(6).inv().unwrap().value(), 2);
        let gf2 = FieldSpec::gf2();
        assert_eq!(gf2.element(1).inv().unwrap().value(), 1);
    }

    #[test]
    fn zero_has_no_inverse() {
        let gf5 = FieldSpec::new(5).unwrap();
        assert!(matches!(
            gf5.element(0).inv(),
            Err(AlgebraError::ZeroInverse)
        ));
    }

    #[test]
    fn every_unit_is_invertible() {
        for p in [2u64, 3, 5, 11, 101] {
            let field = FieldSpec::new(p).unwrap();
            for a in 1..p {
                let b = field.inv(a).unwrap();
                assert_eq!(field.mul(a, b), 1, "inv({a}) wrong in GF({p})");
            }
        }
    }

    #[test]
    fn mixed_field_arithmetic_is_rejected() {
        let a = FieldSpec::new(5).unwrap().element(3);
        let b = FieldSpec::new(7).unwrap().element(3);
        assert!(matches!(a.add(&b), Err(AlgebraError::FieldMismatch { .. })));
    }

    #[test]
    fn smallest_prime_search() {
        assert_eq!(FieldSpec::smallest_prime_at_least(8).unwrap().prime(), 11);
        assert_eq!(FieldSpec::smallest_prime_at_least(11).unwrap().prime(), 11);
        assert_eq!(FieldSpec::smallest_prime_at_least(1).unwrap().prime(), 2);
        assert_eq!(FieldSpec::smallest_prime_at_least(85).unwrap().prime(), 89);
    }
}
