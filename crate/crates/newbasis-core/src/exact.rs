//! Exact arithmetic: arbitrary-precision rationals and the cyclotomic field
//! Q(ζ_60).
//!
//! Conductor 60 is fixed once and for all: every element order appearing in
//! the group catalog divides 60, so a single field hosts every character
//! value. Elements are kept in canonical reduced form on the power basis
//! ζ^0..ζ^15 (φ(60) = 16), reduced modulo the 60th cyclotomic polynomial.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// Rational from an integer pair, `den > 0` enforced by `BigRational::new`.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub const CONDUCTOR: usize = 60;
pub const PHI: usize = 16; // φ(60)

/// Coefficients of the n-th cyclotomic polynomial, ascending degree.
/// Computed by dividing x^n - 1 by Φ_d for all proper divisors d of n.
fn cyclotomic_poly(n: usize) -> Vec<i64> {
    if n == 1 {
        return vec![-1, 1];
    }
    // x^n - 1
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_poly(d);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    num
}

/// Exact division of integer polynomials (panics on nonzero remainder).
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem: Vec<i64> = num.to_vec();
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1, "divisor must be monic");
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        q[k] = c;
        if c != 0 {
            for (i, &dc) in den.iter().enumerate() {
                rem[k + i] -= c * dc;
            }
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "non-exact polynomial division");
    q
}

/// Rewrite table: ζ^k for k in 0..60 expressed on the basis ζ^0..ζ^15.
fn power_table() -> &'static Vec<[i64; PHI]> {
    static TABLE: OnceLock<Vec<[i64; PHI]>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let phi60 = cyclotomic_poly(CONDUCTOR);
        assert_eq!(phi60.len(), PHI + 1);
        assert_eq!(phi60[PHI], 1);
        let mut table: Vec<[i64; PHI]> = Vec::with_capacity(CONDUCTOR);
        let mut cur = [0i64; PHI];
        cur[0] = 1;
        table.push(cur);
        for _ in 1..CONDUCTOR {
            // multiply by ζ, reduce the overflow term with ζ^16 = -Σ c_i ζ^i
            let top = cur[PHI - 1];
            let mut next = [0i64; PHI];
            for i in (1..PHI).rev() {
                next[i] = cur[i - 1];
            }
            next[0] = 0;
            if top != 0 {
                for i in 0..PHI {
                    next[i] -= top * phi60[i];
                }
            }
            table.push(next);
            cur = next;
        }
        table
    })
}

/// An element of Q(ζ_60) in canonical reduced form.
#[derive(Clone, PartialEq, Eq)]
pub struct CycloNumber {
    coeffs: Vec<Rational>, // length 16, basis ζ^0..ζ^15
}

impl CycloNumber {
    pub fn zero() -> Self {
        CycloNumber {
            coeffs: vec![Rational::zero(); PHI],
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        let mut c = vec![Rational::zero(); PHI];
        c[0] = q;
        CycloNumber { coeffs: c }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }

    /// ζ_60^k, any integer k.
    pub fn zeta60_pow(k: i64) -> Self {
        let k = k.rem_euclid(CONDUCTOR as i64) as usize;
        let row = &power_table()[k];
        let mut c = vec![Rational::zero(); PHI];
        for i in 0..PHI {
            if row[i] != 0 {
                c[i] = rat_int(row[i]);
            }
        }
        CycloNumber { coeffs: c }
    }

    /// ζ_n^k embedded as ζ_60^{60k/n}. `n` must divide 60.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(
            n > 0 && CONDUCTOR % n as usize == 0,
            "order {} does not divide {}",
            n,
            CONDUCTOR
        );
        Self::zeta60_pow((CONDUCTOR as i64 / n as i64) * k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Rational::is_zero)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        CycloNumber {
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Galois twist ζ ↦ ζ^k, gcd(k,60) = 1.
    pub fn galois(&self, k: i64) -> Self {
        let k = k.rem_euclid(CONDUCTOR as i64);
        assert_eq!(num_integer::gcd(k, CONDUCTOR as i64), 1);
        let table = power_table();
        let mut out = vec![Rational::zero(); PHI];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &table[(i as i64 * k).rem_euclid(CONDUCTOR as i64) as usize];
            for j in 0..PHI {
                if row[j] != 0 {
                    out[j] += c * rat_int(row[j]);
                }
            }
        }
        CycloNumber { coeffs: out }
    }

    /// Complex conjugation, ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        self.galois(CONDUCTOR as i64 - 1)
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Multiplicative inverse via the product of Galois conjugates.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero in Q(zeta_60)");
        let mut prod = CycloNumber::one();
        for k in 2..CONDUCTOR as i64 {
            if num_integer::gcd(k, CONDUCTOR as i64) == 1 {
                prod = &prod * &self.galois(k);
            }
        }
        let norm = (&prod * self)
            .as_rational()
            .expect("norm of a cyclotomic number is rational");
        prod.scale(&norm.recip())
    }

    /// Exact sign of a real cyclotomic number: -1, 0 or +1.
    ///
    /// Zero is certified by canonical form; otherwise a rational interval
    /// enclosure of Σ c_i cos(iπ/30) decides, escalating precision once.
    pub fn sign_real(&self) -> i32 {
        assert!(self.is_real(), "sign of a non-real cyclotomic number");
        if self.is_zero() {
            return 0;
        }
        for level in 0..2 {
            let enclosures = cos_enclosures(level);
            let mut lo = Rational::zero();
            let mut hi = Rational::zero();
            for (i, c) in self.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (clo, chi) = &enclosures[i];
                if c.is_positive() {
                    lo += c * clo;
                    hi += c * chi;
                } else {
                    lo += c * chi;
                    hi += c * clo;
                }
            }
            if lo.is_positive() {
                return 1;
            }
            if hi.is_negative() {
                return -1;
            }
        }
        panic!("interval sign test failed to separate a nonzero value from 0");
    }

    pub fn is_nonneg_real(&self) -> bool {
        self.sign_real() >= 0
    }
}

/// Rational enclosures of cos(iπ/30) for i in 0..16.
fn cos_enclosures(level: usize) -> Vec<(Rational, Rational)> {
    static CACHE: OnceLock<[OnceLock<Vec<(Rational, Rational)>>; 2]> = OnceLock::new();
    let cache = CACHE.get_or_init(|| [OnceLock::new(), OnceLock::new()]);
    cache[level.min(1)]
        .get_or_init(|| {
            let (terms, digits) = if level == 0 { (40, 60) } else { (80, 110) };
            let pi = pi_bracket(digits);
            (0..PHI as i64)
                .map(|i| cos_bracket(i, &pi, terms))
                .collect()
        })
        .clone()
}

/// π truncated/rounded-up to `digits` decimal places.
fn pi_bracket(digits: usize) -> (Rational, Rational) {
    // 120 decimal places of π.
    const PI_DIGITS: &str = "3141592653589793238462643383279502884197169399375105820974944592\
307816406286208998628034825342117067982148086513282306";
    let d = digits.min(PI_DIGITS.len() - 1);
    let mantissa: BigInt = PI_DIGITS[..=d].parse().unwrap();
    let den = BigInt::from(10u32).pow(d as u32);
    let lo = BigRational::new(mantissa.clone(), den.clone());
    let hi = BigRational::new(mantissa + 1, den);
    (lo, hi)
}

/// Enclosure of cos(iπ/30) by a Taylor sum at the rational midpoint.
fn cos_bracket(i: i64, pi: &(Rational, Rational), terms: usize) -> (Rational, Rational) {
    let m = &pi.0 * rat(i, 30); // lower endpoint of iπ/30
    let width = (&pi.1 - &pi.0) * rat(i, 30); // |t - m| ≤ width, |cos'| ≤ 1
    let m2 = &m * &m;
    let mut sum = Rational::one();
    let mut term = Rational::one();
    for j in 1..=terms {
        term = &term * &m2 / rat_int((2 * j as i64 - 1) * (2 * j as i64));
        if j % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
    }
    // next term bounds the truncation error (alternating with decreasing terms)
    let rem = &term * &m2 / rat_int((2 * terms as i64 + 1) * (2 * terms as i64 + 2));
    let lo = &sum - &rem - &width;
    let hi = &sum + &rem + &width;
    (lo, hi)
}

impl Add for &CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: &CycloNumber) -> CycloNumber {
        CycloNumber {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: &CycloNumber) -> CycloNumber {
        CycloNumber {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: &CycloNumber) -> CycloNumber {
        // fast paths: most character values are rational
        if let Some(q) = self.as_rational() {
            return if q.is_zero() {
                CycloNumber::zero()
            } else {
                rhs.scale(&q)
            };
        }
        if let Some(q) = rhs.as_rational() {
            return if q.is_zero() {
                CycloNumber::zero()
            } else {
                self.scale(&q)
            };
        }
        let table = power_table();
        let phi60 = cyclotomic_poly(CONDUCTOR);
        let mut raw = vec![Rational::zero(); 2 * PHI - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] += a * b;
            }
        }
        // reduce degrees 16..30 using ζ^16 = -Σ c_i ζ^i repeatedly (table has
        // the reduced form of each power directly)
        let mut out: Vec<Rational> = raw[..PHI].to_vec();
        for (k, c) in raw.iter().enumerate().skip(PHI) {
            if c.is_zero() {
                continue;
            }
            let row = &table[k]; // k < 30 < 60
            for i in 0..PHI {
                if row[i] != 0 {
                    out[i] += c * rat_int(row[i]);
                }
            }
        }
        let _ = phi60;
        CycloNumber { coeffs: out }
    }
}

impl AddAssign<&CycloNumber> for CycloNumber {
    fn add_assign(&mut self, rhs: &CycloNumber) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&CycloNumber> for CycloNumber {
    fn sub_assign(&mut self, rhs: &CycloNumber) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl MulAssign<&CycloNumber> for CycloNumber {
    fn mul_assign(&mut self, rhs: &CycloNumber) {
        *self = &*self * rhs;
    }
}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{}", q);
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "z^{}", i)?;
            } else {
                write!(f, "{}*z^{}", c, i)?;
            }
        }
        Ok(())
    }
}
