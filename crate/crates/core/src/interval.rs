//! Outward-rounded interval arithmetic over MPFR floats.
//!
//! Two interval flavors cover the two domains the bounds live in:
//! [`LogInterval`] encloses a real number that is the natural log of some
//! positive quantity, [`ValueInterval`] encloses a real number directly.
//! Every operation rounds the lower endpoint toward minus infinity and the
//! upper endpoint toward plus infinity, so a true value contained in the
//! inputs is contained in the output.
//!
//! Exact rational inputs enter an interval through a single directed-rounding
//! conversion, so quantities like `(1 + lambda)^d` are assembled exactly in
//! `Rational` arithmetic first and pay one rounding step total.

use rug::float::Round;
use rug::ops::{AddAssignRound, AssignRound, DivAssignRound, MulAssignRound, SubAssignRound};
use rug::{Float, Rational};

/// Default starting precision in bits for interval evaluation.
pub const DEFAULT_PREC: u32 = 256;

/// Hard ceiling for precision escalation.
pub const MAX_PREC: u32 = 4096;

/// Precision ladder starting at `prec`, doubling, capped at
/// `max(MAX_PREC, prec)`.
pub fn precision_ladder(prec: u32) -> Vec<u32> {
    let cap = MAX_PREC.max(prec);
    let mut out = Vec::new();
    let mut p = prec.max(2);
    while p <= cap {
        out.push(p);
        if p == cap {
            break;
        }
        p = (p * 2).min(cap);
    }
    out
}

fn float_from_rational(r: &Rational, prec: u32, round: Round) -> Float {
    let mut f = Float::new(prec);
    f.assign_round(r, round);
    f
}

/// Enclosure `[lo, hi]` of the natural log of a positive quantity.
///
/// The enclosed number itself may be any real (logs of quantities below 1
/// are negative). Endpoints are MPFR floats at a fixed working precision.
#[derive(Clone, Debug)]
pub struct LogInterval {
    lo: Float,
    hi: Float,
}

impl LogInterval {
    /// The degenerate interval `[0, 0]`, the log of 1.
    pub fn zero(prec: u32) -> Self {
        LogInterval {
            lo: Float::new(prec),
            hi: Float::new(prec),
        }
    }

    /// Enclosure of `ln(r)` for a positive rational.
    ///
    /// Panics if `r <= 0`.
    pub fn ln_rational(r: &Rational, prec: u32) -> Self {
        assert!(r.cmp0() == std::cmp::Ordering::Greater, "ln of non-positive rational");
        let mut lo = float_from_rational(r, prec, Round::Down);
        lo.ln_round(Round::Down);
        let mut hi = float_from_rational(r, prec, Round::Up);
        hi.ln_round(Round::Up);
        LogInterval { lo, hi }
    }

    /// Enclosure built from already-directed endpoints.
    pub fn from_endpoints(lo: Float, hi: Float) -> Self {
        debug_assert!(lo <= hi || lo.is_nan() || hi.is_nan());
        LogInterval { lo, hi }
    }

    pub fn lo(&self) -> &Float {
        &self.lo
    }

    pub fn hi(&self) -> &Float {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.lo.prec().max(self.hi.prec())
    }

    /// Sum of two log intervals (log of a product).
    pub fn add(&self, other: &LogInterval) -> LogInterval {
        let mut lo = self.lo.clone();
        lo.add_assign_round(&other.lo, Round::Down);
        let mut hi = self.hi.clone();
        hi.add_assign_round(&other.hi, Round::Up);
        LogInterval { lo, hi }
    }

    pub fn add_assign(&mut self, other: &LogInterval) {
        self.lo.add_assign_round(&other.lo, Round::Down);
        self.hi.add_assign_round(&other.hi, Round::Up);
    }

    /// Difference `self - other` (log of a ratio).
    pub fn sub(&self, other: &LogInterval) -> LogInterval {
        let mut lo = self.lo.clone();
        lo.sub_assign_round(&other.hi, Round::Down);
        let mut hi = self.hi.clone();
        hi.sub_assign_round(&other.lo, Round::Up);
        LogInterval { lo, hi }
    }

    /// Scale by an exact rational (log of a power). Handles either sign of `q`.
    pub fn scale(&self, q: &Rational) -> LogInterval {
        match q.cmp0() {
            std::cmp::Ordering::Equal => LogInterval::zero(self.prec()),
            std::cmp::Ordering::Greater => {
                let mut lo = self.lo.clone();
                lo.mul_assign_round(q, Round::Down);
                let mut hi = self.hi.clone();
                hi.mul_assign_round(q, Round::Up);
                LogInterval { lo, hi }
            }
            std::cmp::Ordering::Less => {
                let mut lo = self.hi.clone();
                lo.mul_assign_round(q, Round::Down);
                let mut hi = self.lo.clone();
                hi.mul_assign_round(q, Round::Up);
                LogInterval { lo, hi }
            }
        }
    }

    /// Exponential, landing in the value domain. Always positive.
    pub fn exp(&self) -> ValueInterval {
        let mut lo = self.lo.clone();
        lo.exp_round(Round::Down);
        let mut hi = self.hi.clone();
        hi.exp_round(Round::Up);
        ValueInterval { lo, hi }
    }

    /// Upper bound on `hi - lo` as an MPFR float (rounded up).
    pub fn width(&self) -> Float {
        let mut w = self.hi.clone();
        w.sub_assign_round(&self.lo, Round::Up);
        w
    }

    /// `true` when every point of `self` is `<=` every point of `other`.
    pub fn certainly_le(&self, other: &LogInterval) -> bool {
        self.hi <= other.lo
    }

    /// `true` when every point of `self` is `<` every point of `other`.
    pub fn certainly_lt(&self, other: &LogInterval) -> bool {
        self.hi < other.lo
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.cmp0().map_or(false, |c| c != std::cmp::Ordering::Greater)
            && self.hi.cmp0().map_or(false, |c| c != std::cmp::Ordering::Less)
    }

    /// `true` when the intervals share at least one point.
    pub fn overlaps(&self, other: &LogInterval) -> bool {
        !(self.hi < other.lo || other.hi < self.lo)
    }

    /// `true` when `self` lies inside `other` (endpoint equality allowed).
    pub fn nested_in(&self, other: &LogInterval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn to_f64_bounds(&self) -> (f64, f64) {
        (
            self.lo.to_f64_round(Round::Down),
            self.hi.to_f64_round(Round::Up),
        )
    }

    /// Decimal endpoint strings with enough digits to reproduce the binary
    /// endpoints, lower endpoint rounded down and upper rounded up.
    pub fn decimal_endpoints(&self) -> (String, String) {
        let digits = decimal_digits(self.prec());
        (
            float_to_decimal(&self.lo, digits, Round::Down),
            float_to_decimal(&self.hi, digits, Round::Up),
        )
    }
}

/// Enclosure `[lo, hi]` of a real number in the value domain.
#[derive(Clone, Debug)]
pub struct ValueInterval {
    lo: Float,
    hi: Float,
}

impl ValueInterval {
    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        ValueInterval {
            lo: float_from_rational(r, prec, Round::Down),
            hi: float_from_rational(r, prec, Round::Up),
        }
    }

    pub fn from_endpoints(lo: Float, hi: Float) -> Self {
        debug_assert!(lo <= hi || lo.is_nan() || hi.is_nan());
        ValueInterval { lo, hi }
    }

    pub fn zero(prec: u32) -> Self {
        ValueInterval {
            lo: Float::new(prec),
            hi: Float::new(prec),
        }
    }

    pub fn lo(&self) -> &Float {
        &self.lo
    }

    pub fn hi(&self) -> &Float {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.lo.prec().max(self.hi.prec())
    }

    pub fn add(&self, other: &ValueInterval) -> ValueInterval {
        let mut lo = self.lo.clone();
        lo.add_assign_round(&other.lo, Round::Down);
        let mut hi = self.hi.clone();
        hi.add_assign_round(&other.hi, Round::Up);
        ValueInterval { lo, hi }
    }

    pub fn sub(&self, other: &ValueInterval) -> ValueInterval {
        let mut lo = self.lo.clone();
        lo.sub_assign_round(&other.hi, Round::Down);
        let mut hi = self.hi.clone();
        hi.sub_assign_round(&other.lo, Round::Up);
        ValueInterval { lo, hi }
    }

    /// General interval product: directed min/max over endpoint products.
    pub fn mul(&self, other: &ValueInterval) -> ValueInterval {
        let prec = self.prec().max(other.prec());
        let pairs = [
            (&self.lo, &other.lo),
            (&self.lo, &other.hi),
            (&self.hi, &other.lo),
            (&self.hi, &other.hi),
        ];
        let mut lo: Option<Float> = None;
        let mut hi: Option<Float> = None;
        for (a, b) in pairs {
            let mut down = Float::with_val_round(prec, a, Round::Down).0;
            down.mul_assign_round(b, Round::Down);
            let mut up = Float::with_val_round(prec, a, Round::Up).0;
            up.mul_assign_round(b, Round::Up);
            lo = Some(match lo {
                Some(cur) => if down < cur { down } else { cur },
                None => down,
            });
            hi = Some(match hi {
                Some(cur) => if up > cur { up } else { cur },
                None => up,
            });
        }
        ValueInterval {
            lo: lo.unwrap(),
            hi: hi.unwrap(),
        }
    }

    /// Product with an exact rational of either sign.
    pub fn mul_rational(&self, q: &Rational) -> ValueInterval {
        match q.cmp0() {
            std::cmp::Ordering::Equal => ValueInterval::zero(self.prec()),
            std::cmp::Ordering::Greater => {
                let mut lo = self.lo.clone();
                lo.mul_assign_round(q, Round::Down);
                let mut hi = self.hi.clone();
                hi.mul_assign_round(q, Round::Up);
                ValueInterval { lo, hi }
            }
            std::cmp::Ordering::Less => {
                let mut lo = self.hi.clone();
                lo.mul_assign_round(q, Round::Down);
                let mut hi = self.lo.clone();
                hi.mul_assign_round(q, Round::Up);
                ValueInterval { lo, hi }
            }
        }
    }

    /// Reciprocal. Panics unless the interval is strictly positive.
    pub fn recip(&self) -> ValueInterval {
        assert!(self.is_strictly_positive(), "recip of interval not strictly positive");
        let prec = self.prec();
        let mut lo = Float::with_val_round(prec, 1u32, Round::Down).0;
        lo.div_assign_round(&self.hi, Round::Down);
        let mut hi = Float::with_val_round(prec, 1u32, Round::Up).0;
        hi.div_assign_round(&self.lo, Round::Up);
        ValueInterval { lo, hi }
    }

    /// Natural log, landing in the log domain. `None` unless strictly positive.
    pub fn ln(&self) -> Option<LogInterval> {
        if !self.is_strictly_positive() {
            return None;
        }
        let mut lo = self.lo.clone();
        lo.ln_round(Round::Down);
        let mut hi = self.hi.clone();
        hi.ln_round(Round::Up);
        Some(LogInterval { lo, hi })
    }

    pub fn neg(&self) -> ValueInterval {
        ValueInterval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.lo.cmp0() == Some(std::cmp::Ordering::Greater)
    }

    pub fn is_strictly_negative(&self) -> bool {
        self.hi.cmp0() == Some(std::cmp::Ordering::Less)
    }

    pub fn contains_zero(&self) -> bool {
        !self.is_strictly_positive() && !self.is_strictly_negative()
    }

    pub fn certainly_le(&self, other: &ValueInterval) -> bool {
        self.hi <= other.lo
    }

    pub fn certainly_lt(&self, other: &ValueInterval) -> bool {
        self.hi < other.lo
    }

    pub fn overlaps(&self, other: &ValueInterval) -> bool {
        !(self.hi < other.lo || other.hi < self.lo)
    }

    pub fn nested_in(&self, other: &ValueInterval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn width(&self) -> Float {
        let mut w = self.hi.clone();
        w.sub_assign_round(&self.lo, Round::Up);
        w
    }

    pub fn to_f64_bounds(&self) -> (f64, f64) {
        (
            self.lo.to_f64_round(Round::Down),
            self.hi.to_f64_round(Round::Up),
        )
    }

    /// Decimal endpoint strings, outward-rounded, with enough digits for
    /// the working precision.
    pub fn decimal_endpoints(&self) -> (String, String) {
        let digits = decimal_digits(self.prec());
        (
            float_to_decimal(&self.lo, digits, Round::Down),
            float_to_decimal(&self.hi, digits, Round::Up),
        )
    }
}

/// Enclosure of `base^expo` for positive rational `base` and rational `expo`,
/// via `exp(expo * ln(base))` with one rounding step per transcendental.
pub fn rational_pow(base: &Rational, expo: &Rational, prec: u32) -> ValueInterval {
    LogInterval::ln_rational(base, prec).scale(expo).exp()
}

/// Log-domain enclosure of `base^expo`, i.e. `expo * ln(base)`.
pub fn rational_pow_log(base: &Rational, expo: &Rational, prec: u32) -> LogInterval {
    LogInterval::ln_rational(base, prec).scale(expo)
}

fn decimal_digits(prec: u32) -> usize {
    (prec as f64 * std::f64::consts::LOG10_2).ceil() as usize + 2
}

fn float_to_decimal(f: &Float, digits: usize, round: Round) -> String {
    if f.is_infinite() {
        return if f.is_sign_negative() { "-inf".into() } else { "inf".into() };
    }
    if f.is_nan() {
        return "nan".into();
    }
    let (sign, mantissa, exp) = f.to_sign_string_exp_round(10, Some(digits), round);
    if mantissa.chars().all(|c| c == '0') {
        return "0".into();
    }
    let s = if sign { "-" } else { "" };
    format!("{}0.{}e{}", s, mantissa, exp.unwrap_or(0))
}
