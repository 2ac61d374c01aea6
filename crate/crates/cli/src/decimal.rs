//! Floats written as 17-significant-digit decimals.
//!
//! `{:.16e}` prints exactly 17 significant digits, and Rust's float parser is
//! correctly rounded, so every finite `f64` comes back with the same bits.
//! The digits go into the JSON verbatim through `serde_json`'s
//! arbitrary-precision numbers.

use prodbasis::C64;
use serde::de::Error as _;
use serde::ser::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Number;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decimal(pub f64);

impl Decimal {
    pub fn to_text(self) -> String {
        format!("{:.16e}", self.0)
    }
}

impl Serialize for Decimal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return Err(S::Error::custom(format!(
                "cannot write non-finite value {}",
                self.0
            )));
        }
        let number: Number = self.to_text().parse().map_err(S::Error::custom)?;
        number.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Decimal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let number = Number::deserialize(deserializer)?;
        let value: f64 = number.as_str().parse().map_err(D::Error::custom)?;
        if !value.is_finite() {
            return Err(D::Error::custom(format!("number {number} is out of range")));
        }
        Ok(Decimal(value))
    }
}

/// A complex amplitude as `[re, im]`.
pub type Amplitude = [Decimal; 2];

pub fn amplitude(z: C64) -> Amplitude {
    [Decimal(z.re), Decimal(z.im)]
}

pub fn complex(a: &Amplitude) -> C64 {
    C64::new(a[0].0, a[1].0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn round_trip(x: f64) -> f64 {
        let text = serde_json::to_string(&Decimal(x)).unwrap();
        serde_json::from_str::<Decimal>(&text).unwrap().0
    }

    #[test]
    fn awkward_values_survive() {
        for x in [
            0.0,
            -0.0,
            1.0,
            0.1,
            1.0 / 3.0,
            std::f64::consts::FRAC_1_SQRT_2,
            f64::MIN_POSITIVE,
            5e-324,
            f64::MAX,
            -f64::EPSILON,
        ] {
            assert_eq!(round_trip(x).to_bits(), x.to_bits(), "{x:e}");
        }
    }

    #[test]
    fn text_has_seventeen_digits() {
        assert_eq!(
            serde_json::to_string(&Decimal(0.5)).unwrap(),
            "5.0000000000000000e-1"
        );
        assert_eq!(
            serde_json::to_string(&Decimal(-0.0)).unwrap(),
            "-0.0000000000000000e+0"
        );
    }

    #[test]
    fn integers_and_plain_decimals_parse() {
        assert_eq!(serde_json::from_str::<Decimal>("1").unwrap(), Decimal(1.0));
        assert_eq!(
            serde_json::from_str::<Decimal>("-0.25").unwrap(),
            Decimal(-0.25)
        );
    }

    #[test]
    fn non_finite_values_are_refused() {
        assert!(serde_json::to_string(&Decimal(f64::NAN)).is_err());
        assert!(serde_json::from_str::<Decimal>("1e400").is_err());
        assert!(serde_json::from_str::<Decimal>("\"1.0\"").is_err());
    }
}
