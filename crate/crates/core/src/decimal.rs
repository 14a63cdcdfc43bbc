//! Fixed-point decimal rendering of exact rationals (round half to even).

use alloc::string::String;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// `x * 10^places` rounded to the nearest integer, ties to even.
pub fn round_scaled(x: &BigRational, places: u32) -> BigInt {
    let scaled = x * BigRational::from_integer(BigInt::from(10u32).pow(places));
    let (num, den) = (scaled.numer(), scaled.denom());
    let (q, r) = num.div_mod_floor(den);
    let twice = &r * 2u32;
    match twice.cmp(den) {
        core::cmp::Ordering::Less => q,
        core::cmp::Ordering::Greater => q + 1u32,
        core::cmp::Ordering::Equal => {
            if q.is_even() {
                q
            } else {
                q + 1u32
            }
        }
    }
}

/// Formats an integer `n` as `n / 10^places` with exactly `places` fraction
/// digits.
pub fn format_scaled(n: &BigInt, places: u32) -> String {
    let places = places as usize;
    let digits = n.abs().to_str_radix(10);
    let mut out = String::new();
    if n.is_negative() {
        out.push('-');
    }
    if places == 0 {
        out.push_str(&digits);
        return out;
    }
    if digits.len() <= places {
        out.push_str("0.");
        for _ in 0..places - digits.len() {
            out.push('0');
        }
        out.push_str(&digits);
    } else {
        let split = digits.len() - places;
        out.push_str(&digits[..split]);
        out.push('.');
        out.push_str(&digits[split..]);
    }
    out
}

pub fn render(x: &BigRational, places: u32) -> String {
    let n = round_scaled(x, places);
    if n.is_zero() {
        // no "-0.000"
        return format_scaled(&BigInt::zero(), places);
    }
    format_scaled(&n, places)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rounding_half_even() {
        assert_eq!(render(&q(5, 2), 0), "2");
        assert_eq!(render(&q(7, 2), 0), "4");
        assert_eq!(render(&q(-5, 2), 0), "-2");
        assert_eq!(render(&q(1, 8), 2), "0.12");
        assert_eq!(render(&q(3, 8), 2), "0.38");
        assert_eq!(render(&q(1, 3), 4), "0.3333");
        assert_eq!(render(&q(2, 3), 4), "0.6667");
    }

    #[test]
    fn formatting() {
        assert_eq!(render(&q(-1, 1000), 2), "0.00");
        assert_eq!(render(&q(12345, 100), 1), "123.4");
        assert_eq!(render(&q(-12345, 100), 3), "-123.450");
        assert_eq!(render(&q(7, 1), 0), "7");
        assert_eq!(render(&q(1, 200), 3), "0.005");
    }
}
