//! Exact edge weights and the unreachable sentinel.
//!
//! Weights are fixed-point decimals with six fractional digits, stored as an
//! integer count of micro-units. Integral inputs therefore add exactly, and
//! traces compare bit-for-bit regardless of platform float behaviour.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Micro-units per whole distance unit.
pub const SCALE: u64 = 1_000_000;
const FRACTION_DIGITS: usize = 6;

/// Largest whole-unit magnitude accepted by the parser. Keeps every sum over
/// any realistic path far below `u64::MAX` micro-units.
pub const MAX_INTEGRAL: u64 = 1_000_000_000;

/// A non-negative exact distance, or [`Weight::INFINITY`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(u64);

impl Weight {
    pub const ZERO: Weight = Weight(0);
    /// Absorbing sentinel for "no edge" and "not reached". Orders above every
    /// finite weight.
    pub const INFINITY: Weight = Weight(u64::MAX);

    /// Whole-unit weight.
    pub fn from_units(units: u64) -> Weight {
        assert!(units <= MAX_INTEGRAL, "weight {units} exceeds {MAX_INTEGRAL}");
        Weight(units * SCALE)
    }

    pub fn from_micros(micros: u64) -> Weight {
        assert!(micros != u64::MAX, "micro count collides with INFINITY");
        Weight(micros)
    }

    pub fn micros(self) -> Option<u64> {
        self.is_finite().then_some(self.0)
    }

    pub fn is_finite(self) -> bool {
        self.0 != u64::MAX
    }

    pub fn is_infinite(self) -> bool {
        !self.is_finite()
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Adds two weights; any infinite operand yields infinity. A finite sum
    /// that would not fit saturates to infinity as well.
    pub fn saturating_add(self, other: Weight) -> Weight {
        if self.is_infinite() || other.is_infinite() {
            return Weight::INFINITY;
        }
        match self.0.checked_add(other.0) {
            Some(sum) if sum != u64::MAX => Weight(sum),
            _ => Weight::INFINITY,
        }
    }

    /// Two-decimal rendering used by trace tables, e.g. `4.00`. Rounds half up.
    pub fn to_fixed2(self) -> String {
        if self.is_infinite() {
            return "INF".to_string();
        }
        let hundredths = (self.0 + SCALE / 200) / (SCALE / 100);
        format!("{}.{:02}", hundredths / 100, hundredths % 100)
    }

    /// Nearest `f64`, for reporting only.
    pub fn to_f64(self) -> f64 {
        if self.is_infinite() {
            f64::INFINITY
        } else {
            self.0 as f64 / SCALE as f64
        }
    }
}

/// Free-function form of [`Weight::saturating_add`].
pub fn saturating_add(a: Weight, b: Weight) -> Weight {
    a.saturating_add(b)
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            return f.write_str("INF");
        }
        write_fixed(f, false, self.0)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn write_fixed(f: &mut fmt::Formatter<'_>, negative: bool, micros: u64) -> fmt::Result {
    let sign = if negative { "-" } else { "" };
    let whole = micros / SCALE;
    let frac = micros % SCALE;
    if frac == 0 {
        return write!(f, "{sign}{whole}");
    }
    let digits = format!("{frac:0width$}", width = FRACTION_DIGITS);
    write!(f, "{sign}{whole}.{}", digits.trim_end_matches('0'))
}

/// A matrix entry as written in an input file, before validation. Finite
/// values may be negative or zero here; [`crate::graph::validate`] reports them.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub enum Entry {
    /// Signed micro-units.
    Finite(i64),
    Infinite,
}

impl Entry {
    pub fn units(units: i64) -> Entry {
        Entry::Finite(units * SCALE as i64)
    }

    /// The entry as a [`Weight`], or `None` when it is negative.
    pub fn to_weight(self) -> Option<Weight> {
        match self {
            Entry::Infinite => Some(Weight::INFINITY),
            Entry::Finite(m) if m >= 0 => Some(Weight(m as u64)),
            Entry::Finite(_) => None,
        }
    }
}

impl From<Weight> for Entry {
    fn from(w: Weight) -> Entry {
        match w.micros() {
            Some(m) => Entry::Finite(m as i64),
            None => Entry::Infinite,
        }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Entry::Infinite => f.write_str("INF"),
            Entry::Finite(m) => write_fixed(f, m < 0, m.unsigned_abs()),
        }
    }
}

impl fmt::Debug for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseWeightError(pub String);

impl fmt::Display for ParseWeightError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not a weight: `{}`", self.0)
    }
}

impl std::error::Error for ParseWeightError {}

impl FromStr for Entry {
    type Err = ParseWeightError;

    /// Accepts `INF` (any case) or a decimal literal with at most six
    /// fractional digits, optionally signed.
    fn from_str(token: &str) -> Result<Entry, ParseWeightError> {
        let err = || ParseWeightError(token.to_string());
        if token.eq_ignore_ascii_case("inf") {
            return Ok(Entry::Infinite);
        }
        let (negative, body) = match token.as_bytes().first() {
            Some(b'-') => (true, &token[1..]),
            Some(b'+') => (false, &token[1..]),
            _ => (false, token),
        };
        let (whole, frac) = match body.split_once('.') {
            Some((w, f)) => (w, f),
            None => (body, ""),
        };
        if whole.is_empty() && frac.is_empty() {
            return Err(err());
        }
        let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
        if !all_digits(whole) || !all_digits(frac) {
            return Err(err());
        }
        let frac = frac.trim_end_matches('0');
        if frac.len() > FRACTION_DIGITS {
            return Err(err());
        }
        let whole: u64 = if whole.is_empty() {
            0
        } else {
            whole.parse().map_err(|_| err())?
        };
        if whole > MAX_INTEGRAL {
            return Err(err());
        }
        let frac_micros: u64 = if frac.is_empty() {
            0
        } else {
            format!("{frac:0<width$}", width = FRACTION_DIGITS)
                .parse()
                .map_err(|_| err())?
        };
        let micros = (whole * SCALE + frac_micros) as i64;
        Ok(Entry::Finite(if negative { -micros } else { micros }))
    }
}

impl FromStr for Weight {
    type Err = ParseWeightError;

    fn from_str(token: &str) -> Result<Weight, ParseWeightError> {
        token
            .parse::<Entry>()?
            .to_weight()
            .ok_or_else(|| ParseWeightError(token.to_string()))
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Weight, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl PartialEq<u64> for Weight {
    fn eq(&self, units: &u64) -> bool {
        *units <= MAX_INTEGRAL && *self == Weight::from_units(*units)
    }
}
