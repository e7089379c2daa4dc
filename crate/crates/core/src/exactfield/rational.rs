use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{Signed, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (maintained by `num_rational`).
pub type Rat = num_rational::BigRational;

/// `n` as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n / d` as a rational.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Exact square root of a non-negative rational, if it is a perfect square.
///
/// A reduced fraction is a square iff numerator and denominator both are.
pub fn sqrt_exact(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(Rat::zero());
    }
    let num_root = r.numer().sqrt();
    let den_root = r.denom().sqrt();
    if &(&num_root * &num_root) == r.numer() && &(&den_root * &den_root) == r.denom() {
        Some(Rat::new(num_root, den_root))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_exact_detects_squares() {
        assert_eq!(sqrt_exact(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(sqrt_exact(&rat_int(0)), Some(rat_int(0)));
        assert_eq!(sqrt_exact(&rat_int(5)), None);
        assert_eq!(sqrt_exact(&rat_int(377)), None);
        assert_eq!(sqrt_exact(&rat(-4, 1)), None);
        assert_eq!(sqrt_exact(&rat(49, 36)), Some(rat(7, 6)));
    }

    #[test]
    fn rationals_are_canonical() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(3, -6), rat(-1, 2));
        assert_eq!(rat(1, 3) + rat(1, 6), rat(1, 2));
    }
}
