//! Log-scaled complex arithmetic.
//!
//! `|D0(k)|` grows like `e^{(1+B)|Im k|}`, which overflows f64 well inside the
//! search regions we care about (indicator estimates sample `|k|` up to a few
//! hundred). A [`ScaledComplex`] carries `mantissa · e^{exponent}` with the
//! exponent on the natural-log scale, so magnitudes are representable for any
//! practical `|Im k|` while phases stay in the mantissa.

use num_complex::Complex64;

/// Exponent gap beyond which the smaller addend underflows to exact zero.
/// e^{-60} ≈ 8.8e-27 is far below the 1e-14 relative guarantee of addition.
const ADD_UNDERFLOW_GAP: f64 = 60.0;

/// A complex value `mantissa · e^{exponent}`.
///
/// After normalization either `mantissa == 0` (and `exponent == 0`), or
/// `1 ≤ |mantissa| < e`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledComplex {
    pub mantissa: Complex64,
    pub exponent: f64,
}

impl ScaledComplex {
    pub fn zero() -> Self {
        Self { mantissa: Complex64::new(0.0, 0.0), exponent: 0.0 }
    }

    pub fn one() -> Self {
        Self { mantissa: Complex64::new(1.0, 0.0), exponent: 0.0 }
    }

    pub fn from_complex(z: Complex64) -> Self {
        Self { mantissa: z, exponent: 0.0 }.normalized()
    }

    pub fn from_real(x: f64) -> Self {
        Self::from_complex(Complex64::new(x, 0.0))
    }

    /// Value `m · e^{e}` for arbitrary mantissa/exponent.
    pub fn from_parts(mantissa: Complex64, exponent: f64) -> Self {
        Self { mantissa, exponent }.normalized()
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa == Complex64::new(0.0, 0.0)
    }

    /// Renormalize so that `1 ≤ |mantissa| < e`.
    pub fn normalized(mut self) -> Self {
        let a = self.mantissa.norm();
        if a == 0.0 {
            return Self::zero();
        }
        debug_assert!(a.is_finite(), "non-finite mantissa in scaled arithmetic");
        let shift = a.ln().floor();
        if shift != 0.0 {
            self.mantissa /= shift.exp();
            self.exponent += shift;
            // one more nudge if rounding left |m| marginally outside [1, e)
            let b = self.mantissa.norm();
            if b < 1.0 {
                self.mantissa *= std::f64::consts::E;
                self.exponent -= 1.0;
            } else if b >= std::f64::consts::E {
                self.mantissa /= std::f64::consts::E;
                self.exponent += 1.0;
            }
        }
        self
    }

    /// ln|value|; −∞ for zero.
    pub fn log_abs(&self) -> f64 {
        if self.is_zero() {
            f64::NEG_INFINITY
        } else {
            self.mantissa.norm().ln() + self.exponent
        }
    }

    /// Phase of the value (the exponent is real-positive, so this is the
    /// mantissa's argument).
    pub fn arg(&self) -> f64 {
        self.mantissa.arg()
    }

    /// Collapse to a plain complex number. Overflows to ±inf when the
    /// exponent exceeds ~709; callers must know the magnitude is moderate.
    pub fn to_complex(&self) -> Complex64 {
        self.mantissa * self.exponent.exp()
    }

    pub fn conj(&self) -> Self {
        Self { mantissa: self.mantissa.conj(), exponent: self.exponent }
    }

    pub fn neg(&self) -> Self {
        Self { mantissa: -self.mantissa, exponent: self.exponent }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self { mantissa: self.mantissa * other.mantissa, exponent: self.exponent + other.exponent }
            .normalized()
    }

    pub fn mul_complex(&self, z: Complex64) -> Self {
        Self { mantissa: self.mantissa * z, exponent: self.exponent }.normalized()
    }

    pub fn mul_real(&self, x: f64) -> Self {
        self.mul_complex(Complex64::new(x, 0.0))
    }

    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by scaled zero");
        if self.is_zero() {
            return Self::zero();
        }
        Self { mantissa: self.mantissa / other.mantissa, exponent: self.exponent - other.exponent }
            .normalized()
    }

    pub fn div_complex(&self, z: Complex64) -> Self {
        Self { mantissa: self.mantissa / z, exponent: self.exponent }.normalized()
    }

    /// Exponent-aligned addition. The smaller term is dropped exactly when the
    /// exponent gap exceeds [`ADD_UNDERFLOW_GAP`].
    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return *other;
        }
        if other.is_zero() {
            return *self;
        }
        let (hi, lo) = if self.exponent >= other.exponent { (self, other) } else { (other, self) };
        let gap = hi.exponent - lo.exponent;
        if gap > ADD_UNDERFLOW_GAP {
            return *hi;
        }
        Self { mantissa: hi.mantissa + lo.mantissa * (-gap).exp(), exponent: hi.exponent }
            .normalized()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// |self − other| / |other| computed without leaving the log scale.
    pub fn rel_diff(&self, other: &Self) -> f64 {
        if other.is_zero() {
            return if self.is_zero() { 0.0 } else { f64::INFINITY };
        }
        (self.sub(other).log_abs() - other.log_abs()).exp()
    }
}

/// sin(k) as a scaled value: `(e^{ik} − e^{−ik}) / 2i` with the `e^{|Im k|}`
/// envelope moved into the exponent, so no intermediate overflows.
pub fn scaled_sin(k: Complex64) -> ScaledComplex {
    let s = k.im.abs();
    let up = Complex64::new(-k.im - s, k.re).exp(); // e^{ik} e^{-s}
    let dn = Complex64::new(k.im - s, -k.re).exp(); // e^{-ik} e^{-s}
    ScaledComplex::from_parts((up - dn) / Complex64::new(0.0, 2.0), s)
}

/// cos(k) as a scaled value.
pub fn scaled_cos(k: Complex64) -> ScaledComplex {
    let s = k.im.abs();
    let up = Complex64::new(-k.im - s, k.re).exp();
    let dn = Complex64::new(k.im - s, -k.re).exp();
    ScaledComplex::from_parts((up + dn) / 2.0, s)
}

/// e^{i c k} for real `c` as a scaled value.
pub fn scaled_exp_ik(c: f64, k: Complex64) -> ScaledComplex {
    ScaledComplex::from_parts(Complex64::new(0.0, c * k.re).exp(), -c * k.im)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn roundtrip(z: Complex64) -> Complex64 {
        ScaledComplex::from_complex(z).to_complex()
    }

    #[test]
    fn normalization_range() {
        for &x in &[1e-300, 3e-7, 0.5, 1.0, 2.7, 1e12, 8e288] {
            let s = ScaledComplex::from_complex(Complex64::new(x, -0.3 * x));
            let a = s.mantissa.norm();
            assert!((1.0..std::f64::consts::E).contains(&a), "|m| = {a} for x = {x}");
        }
        assert!(ScaledComplex::zero().is_zero());
    }

    #[test]
    fn mul_add_preserve_value() {
        let a = Complex64::new(3.7, -1.2);
        let b = Complex64::new(-0.4, 2.9);
        let sa = ScaledComplex::from_complex(a);
        let sb = ScaledComplex::from_complex(b);
        assert_relative_eq!(sa.mul(&sb).to_complex().re, (a * b).re, max_relative = 1e-14);
        assert_relative_eq!(sa.mul(&sb).to_complex().im, (a * b).im, max_relative = 1e-14);
        assert_relative_eq!(sa.add(&sb).to_complex().re, (a + b).re, max_relative = 1e-14);
        assert_relative_eq!(sa.add(&sb).to_complex().im, (a + b).im, max_relative = 1e-14);
    }

    #[test]
    fn add_underflows_far_apart_terms() {
        let big = ScaledComplex::from_parts(Complex64::new(1.3, 0.0), 100.0);
        let small = ScaledComplex::from_parts(Complex64::new(2.0, 1.0), 100.0 - 61.0);
        let sum = big.add(&small);
        assert_eq!(sum, big);
    }

    #[test]
    fn scaled_trig_matches_library_at_moderate_k() {
        for &k in &[
            Complex64::new(2.0, 0.0),
            Complex64::new(-5.0, 3.0),
            Complex64::new(17.3, -8.1),
            Complex64::new(0.1, 0.7),
        ] {
            let s = scaled_sin(k).to_complex();
            let c = scaled_cos(k).to_complex();
            assert_relative_eq!(s.re, k.sin().re, max_relative = 1e-12, epsilon = 1e-12);
            assert_relative_eq!(s.im, k.sin().im, max_relative = 1e-12, epsilon = 1e-12);
            assert_relative_eq!(c.re, k.cos().re, max_relative = 1e-12, epsilon = 1e-12);
            assert_relative_eq!(c.im, k.cos().im, max_relative = 1e-12, epsilon = 1e-12);
        }
    }

    #[test]
    fn scaled_trig_survives_huge_imaginary_part() {
        let k = Complex64::new(3.0, 800.0); // sin overflows f64 by ~e^91
        let s = scaled_sin(k);
        assert!(s.mantissa.norm().is_finite());
        assert_relative_eq!(s.log_abs(), 800.0 - std::f64::consts::LN_2, epsilon = 1e-9);
    }

    #[test]
    fn roundtrip_is_identity_for_moderate_values() {
        for &z in &[Complex64::new(1e-8, 2.0), Complex64::new(-44.0, 1e3)] {
            let r = roundtrip(z);
            assert_relative_eq!(r.re, z.re, max_relative = 1e-14);
            assert_relative_eq!(r.im, z.im, max_relative = 1e-14);
        }
    }

    #[test]
    fn rel_diff_detects_scale() {
        let a = ScaledComplex::from_parts(Complex64::new(1.0, 0.0), 50.0);
        let b = ScaledComplex::from_parts(Complex64::new(1.0, 0.0), 50.0).mul_real(1.0 + 1e-9);
        assert!(a.rel_diff(&b) < 1.1e-9);
    }
}
