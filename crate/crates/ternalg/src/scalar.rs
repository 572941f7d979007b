//! Exact scalars in the quadratic field Q(sqrt d).

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Q;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Radicand used when nothing else is specified.
pub const DEFAULT_RADICAND: u32 = 5;

/// `rat + irr * sqrt(d)` with exact rational parts.
///
/// Every value carries its radicand. Binary operations on values with
/// different radicands are a domain error: the `try_*` methods report it,
/// the operator impls panic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadScalar {
    rat: Q,
    irr: Q,
    d: u32,
}

pub fn is_square_free(d: u32) -> bool {
    if d == 0 {
        return false;
    }
    let mut p = 2u32;
    while p.saturating_mul(p) <= d {
        if d.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

pub fn check_radicand(d: u32) -> Result<u32> {
    if is_square_free(d) {
        Ok(d)
    } else {
        Err(Error::BadRadicand(d))
    }
}

impl QuadScalar {
    /// Builds `rat + irr * sqrt(d)`. With `d = 1` the irrational part is folded
    /// into the rational one.
    pub fn new(rat: Rational, irr: Rational, d: u32) -> Result<Self> {
        check_radicand(d)?;
        Ok(Self::from_parts(Q::from_big(rat), Q::from_big(irr), d))
    }

    fn from_parts(rat: Q, irr: Q, d: u32) -> Self {
        if d == 1 && !irr.is_zero() {
            QuadScalar {
                rat: &rat + &irr,
                irr: Q::ZERO,
                d,
            }
        } else {
            QuadScalar { rat, irr, d }
        }
    }

    pub fn zero(d: u32) -> Self {
        QuadScalar {
            rat: Q::ZERO,
            irr: Q::ZERO,
            d,
        }
    }

    pub fn one(d: u32) -> Self {
        Self::from_int(1, d)
    }

    pub fn from_int(n: i64, d: u32) -> Self {
        QuadScalar {
            rat: Q::int(n),
            irr: Q::ZERO,
            d,
        }
    }

    pub fn from_rational(q: Rational, d: u32) -> Self {
        QuadScalar {
            rat: Q::from_big(q),
            irr: Q::ZERO,
            d,
        }
    }

    /// `p/q` as a scalar. Panics if `q == 0`.
    pub fn frac(p: i64, q: i64, d: u32) -> Self {
        Self::from_rational(Rational::new(BigInt::from(p), BigInt::from(q)), d)
    }

    /// `(a + b sqrt d) / q` from small integers; handy for tables.
    pub fn quad(a: i64, b: i64, q: i64, d: u32) -> Self {
        let q = BigInt::from(q);
        Self::from_parts(
            Q::from_big(Rational::new(BigInt::from(a), q.clone())),
            Q::from_big(Rational::new(BigInt::from(b), q)),
            d,
        )
    }

    /// `sqrt(d)` itself.
    pub fn sqrt_d(d: u32) -> Self {
        Self::from_parts(Q::ZERO, Q::ONE, d)
    }

    pub fn rat_part(&self) -> Rational {
        self.rat.to_big()
    }

    pub fn irr_part(&self) -> Rational {
        self.irr.to_big()
    }

    pub fn radicand(&self) -> u32 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rat.is_one() && self.irr.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    /// `rat^2 - d irr^2`; zero only for the zero scalar.
    pub fn norm(&self) -> Rational {
        self.norm_q().to_big()
    }

    fn norm_q(&self) -> Q {
        let dd = Q::int(self.d.into());
        &(&self.rat * &self.rat) - &(&(&self.irr * &self.irr) * &dd)
    }

    pub fn conj(&self) -> Self {
        QuadScalar {
            rat: self.rat.clone(),
            irr: -&self.irr,
            d: self.d,
        }
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(Error::RadicandMismatch(self.d, other.d))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(QuadScalar {
            rat: &self.rat + &other.rat,
            irr: &self.irr + &other.irr,
            d: self.d,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(QuadScalar {
            rat: &self.rat - &other.rat,
            irr: &self.irr - &other.irr,
            d: self.d,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.d));
        }
        if self.irr.is_zero() && other.irr.is_zero() {
            return Ok(QuadScalar {
                rat: &self.rat * &other.rat,
                irr: Q::ZERO,
                d: self.d,
            });
        }
        let dd = Q::int(self.d.into());
        Ok(QuadScalar {
            rat: &(&self.rat * &other.rat) + &(&(&self.irr * &other.irr) * &dd),
            irr: &(&self.rat * &other.irr) + &(&self.irr * &other.rat),
            d: self.d,
        })
    }

    /// Multiplicative inverse via the conjugate: `1/x = conj(x) / norm(x)`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_q();
        Ok(QuadScalar {
            rat: &self.rat / &n,
            irr: &(-&self.irr) / &n,
            d: self.d,
        })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.inv()?)
    }

    /// Adds `a * b` in place. Skips the work when either factor is zero.
    pub fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let p = a * b;
        *self += &p;
    }

    /// Parses the literal grammar
    ///
    /// ```text
    /// scalar := term (("+" | "-") term)?
    /// term   := rat | rat "*" "sqrt(" int ")" | "sqrt(" int ")"
    /// rat    := int | int "/" posint
    /// ```
    ///
    /// in the field with radicand `d`. Any `sqrt(k)` must have `k == d`.
    pub fn parse(input: &str, d: u32) -> Result<Self> {
        check_radicand(d)?;
        let mut p = Parser {
            src: input,
            bytes: input.as_bytes(),
            pos: 0,
            d,
        };
        let mut value = p.term()?;
        p.skip_ws();
        if let Some(&c) = p.bytes.get(p.pos) {
            let sign = match c {
                b'+' => 1,
                b'-' => -1,
                _ => return Err(p.error("expected '+', '-' or end of input")),
            };
            p.pos += 1;
            let t = p.term()?;
            value = if sign > 0 { &value + &t } else { &value - &t };
        }
        p.skip_ws();
        if p.pos != p.bytes.len() {
            return Err(p.error("trailing characters"));
        }
        Ok(value)
    }
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    d: u32,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::ParseScalar {
            input: self.src.to_string(),
            offset: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, lit: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(lit) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn int(&mut self, allow_sign: bool) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        if allow_sign && self.pos < self.bytes.len() && self.bytes[self.pos] == b'-' {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return Err(self.error("expected an integer"));
        }
        Ok(self.src[start..self.pos].parse().expect("digits parse"))
    }

    fn sqrt(&mut self) -> Result<QuadScalar> {
        let k = self.int(false)?;
        if !self.eat(")") {
            return Err(self.error("expected ')'"));
        }
        if k != BigInt::from(self.d) {
            return Err(self.error(&format!(
                "sqrt({k}) does not match the context radicand {}",
                self.d
            )));
        }
        Ok(QuadScalar::sqrt_d(self.d))
    }

    fn term(&mut self) -> Result<QuadScalar> {
        if self.eat("sqrt(") {
            return self.sqrt();
        }
        let num = self.int(true)?;
        let q = if self.eat("/") {
            let den = self.int(false)?;
            if den.is_zero() {
                return Err(self.error("zero denominator"));
            }
            Rational::new(num, den)
        } else {
            Rational::from_integer(num)
        };
        let q = QuadScalar::from_rational(q, self.d);
        if self.eat("*") {
            if !self.eat("sqrt(") {
                return Err(self.error("expected 'sqrt('"));
            }
            let s = self.sqrt()?;
            return Ok(&q * &s);
        }
        Ok(q)
    }
}

fn irr_term(f: &mut fmt::Formatter<'_>, c: &Q, d: u32) -> fmt::Result {
    if c.is_one() {
        write!(f, "sqrt({d})")
    } else {
        write!(f, "{c}*sqrt({d})")
    }
}

/// Canonical literal form; `QuadScalar::parse` inverts it exactly.
impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.irr.is_zero() {
            return write!(f, "{}", self.rat);
        }
        if self.rat.is_zero() {
            return if self.irr == Q::int(-1) {
                write!(f, "-1*sqrt({})", self.d)
            } else {
                irr_term(f, &self.irr, self.d)
            };
        }
        write!(f, "{}", self.rat)?;
        if self.irr.is_negative() {
            f.write_str("-")?;
            irr_term(f, &-&self.irr, self.d)
        } else {
            f.write_str("+")?;
            irr_term(f, &self.irr, self.d)
        }
    }
}

impl fmt::Debug for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [d={}]", self.d)
    }
}

impl Add for &QuadScalar {
    type Output = QuadScalar;
    fn add(self, rhs: &QuadScalar) -> QuadScalar {
        self.try_add(rhs).expect("scalar addition")
    }
}

impl Sub for &QuadScalar {
    type Output = QuadScalar;
    fn sub(self, rhs: &QuadScalar) -> QuadScalar {
        self.try_sub(rhs).expect("scalar subtraction")
    }
}

impl Mul for &QuadScalar {
    type Output = QuadScalar;
    fn mul(self, rhs: &QuadScalar) -> QuadScalar {
        self.try_mul(rhs).expect("scalar multiplication")
    }
}

impl Neg for &QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        QuadScalar {
            rat: -&self.rat,
            irr: -&self.irr,
            d: self.d,
        }
    }
}

impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        -&self
    }
}

impl AddAssign<&QuadScalar> for QuadScalar {
    fn add_assign(&mut self, rhs: &QuadScalar) {
        assert_eq!(self.d, rhs.d, "scalar addition: radicand mismatch");
        if rhs.is_zero() {
            return;
        }
        self.rat = &self.rat + &rhs.rat;
        if !rhs.irr.is_zero() {
            self.irr = &self.irr + &rhs.irr;
        }
    }
}

impl SubAssign<&QuadScalar> for QuadScalar {
    fn sub_assign(&mut self, rhs: &QuadScalar) {
        assert_eq!(self.d, rhs.d, "scalar subtraction: radicand mismatch");
        if rhs.is_zero() {
            return;
        }
        self.rat = &self.rat - &rhs.rat;
        if !rhs.irr.is_zero() {
            self.irr = &self.irr - &rhs.irr;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> QuadScalar {
        QuadScalar::parse(x, 5).unwrap()
    }

    #[test]
    fn componentwise_add() {
        assert_eq!(&s("1/5") + &s("2/5*sqrt(5)"), s("1/5+2/5*sqrt(5)"));
    }

    #[test]
    fn sqrt_squared_is_radicand() {
        assert_eq!(&s("sqrt(5)") * &s("sqrt(5)"), s("5"));
    }

    #[test]
    fn product_of_conjugate_like_pair() {
        // (1 + sqrt5)(-1 + sqrt5) = -1 + 5 + (1 - 1) sqrt5
        assert_eq!(&s("1+sqrt(5)") * &s("-1+sqrt(5)"), s("4"));
    }

    #[test]
    fn inverses() {
        assert_eq!(s("2").inv().unwrap(), s("1/2"));
        let x = s("1+sqrt(5)");
        let y = x.inv().unwrap();
        assert_eq!(y, s("-1/4+1/4*sqrt(5)"));
        assert!((&x * &y).is_one());
        assert_eq!(QuadScalar::zero(5).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn radicand_mismatch_is_an_error() {
        let a = QuadScalar::parse("1+sqrt(5)", 5).unwrap();
        let b = QuadScalar::parse("1+sqrt(2)", 2).unwrap();
        assert_eq!(a.try_add(&b), Err(Error::RadicandMismatch(5, 2)));
        assert_eq!(a.try_mul(&b), Err(Error::RadicandMismatch(5, 2)));
    }

    #[test]
    fn pure_rational_mode_folds_sqrt_one() {
        let x = QuadScalar::parse("2+3*sqrt(1)", 1).unwrap();
        assert_eq!(x, QuadScalar::from_int(5, 1));
        assert!(x.irr_part().is_zero());
    }

    #[test]
    fn canonical_strings() {
        for (lit, canon) in [
            ("2", "2"),
            ("-3/5", "-3/5"),
            ("6/10", "3/5"),
            ("1/5*sqrt(5)", "1/5*sqrt(5)"),
            ("1+2*sqrt(5)", "1+2*sqrt(5)"),
            ("1*sqrt(5)", "sqrt(5)"),
            ("-1*sqrt(5)", "-1*sqrt(5)"),
            ("2-sqrt(5)", "2-sqrt(5)"),
            ("sqrt(5)+3", "3+sqrt(5)"),
            (" 1 / 2 - 3/4 * sqrt( 5 ) ", "1/2-3/4*sqrt(5)"),
            ("0*sqrt(5)", "0"),
        ] {
            let v = s(lit);
            assert_eq!(v.to_string(), canon, "{lit}");
            assert_eq!(s(canon), v);
        }
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "1.5", "1/0", "sqrt(2)", "1+", "2*", "1/-2", "x", "1+2+3", "--1"] {
            assert!(QuadScalar::parse(bad, 5).is_err(), "{bad:?} should not parse");
        }
        match QuadScalar::parse("1/2*sqrt(3)", 5) {
            Err(Error::ParseScalar { offset, .. }) => assert!(offset > 0),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn square_free() {
        assert!(is_square_free(1));
        assert!(is_square_free(5));
        assert!(is_square_free(30));
        assert!(!is_square_free(0));
        assert!(!is_square_free(4));
        assert!(!is_square_free(18));
        assert!(QuadScalar::parse("1", 8).is_err());
    }
}
