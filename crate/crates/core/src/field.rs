//! Exact scalar fields: the rationals and the Eisenstein rationals `Q(ω)`.
//!
//! Nothing in this crate touches floating point. Every predicate reduces to a
//! zero test on a polynomial expression in the coordinates, so the only
//! requirement on a field is exact arithmetic and a way to pick one canonical
//! representative per projective class (for hashing).

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = BigRational;

/// Exact field used for coordinates.
///
/// `Ord` is only required for deterministic output ordering; it is a structural
/// order and carries no geometric meaning (the Eisenstein field has no field
/// ordering at all).
pub trait Field:
    Clone
    + Eq
    + Hash
    + Ord
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Tag used in point-set file headers.
    const TAG: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(v: i64) -> Self;
    fn inverse(&self) -> Option<Self>;

    /// Rescales a vector (not all zero) to the canonical representative of its
    /// projective class. An all-zero vector is left untouched.
    fn canonicalize(v: &mut [Self]);

    /// Parses the textual form used by the point-set file format.
    fn parse_scalar(s: &str) -> Result<Self, String>;
}

/// Divides `v` by its first nonzero entry. Leaves an all-zero vector untouched.
pub fn leading_one<F: Field>(v: &mut [F]) {
    let Some(lead) = v.iter().find(|x| !x.is_zero()) else {
        return;
    };
    let inv = lead.inverse().expect("nonzero element is invertible");
    for x in v.iter_mut() {
        *x = x.clone() * inv.clone();
    }
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `max(|numerator|, denominator)`.
pub fn height(x: &Rational) -> BigInt {
    let n = x.numer().abs();
    if &n > x.denom() {
        n
    } else {
        x.denom().clone()
    }
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational".into());
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let parse_int = |t: &str| -> Result<BigInt, String> {
        let digits = t.strip_prefix('-').unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("malformed integer `{t}`"));
        }
        t.parse::<BigInt>().map_err(|e| format!("malformed integer `{t}`: {e}"))
    };
    let num = parse_int(num)?;
    let den = match den {
        Some(d) => {
            if d.starts_with('-') {
                return Err(format!("denominator must be positive in `{s}`"));
            }
            parse_int(d)?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok(Rational::new(num, den))
}

impl Field for Rational {
    const TAG: &'static str = "Q";

    fn zero() -> Self {
        <Rational as Zero>::zero()
    }

    fn one() -> Self {
        <Rational as One>::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn from_i64(v: i64) -> Self {
        integer(v)
    }

    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    /// Primitive integer vector whose first nonzero entry is positive.
    fn canonicalize(v: &mut [Self]) {
        let lcm = v
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = v
            .iter()
            .map(|x| x.numer() * (&lcm / x.denom()))
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if content.is_zero() {
            return;
        }
        let lead_negative = ints
            .iter()
            .find(|x| !x.is_zero())
            .is_some_and(|x| x.is_negative());
        let divisor = if lead_negative { -content } else { content };
        for (slot, x) in v.iter_mut().zip(ints) {
            *slot = Rational::from_integer(x / &divisor);
        }
    }

    fn parse_scalar(s: &str) -> Result<Self, String> {
        parse_rational(s)
    }
}

/// Element `a + bω` of `Q(ω)`, where `ω² = −ω − 1` (a primitive cube root of
/// unity).
///
/// The derived `Ord` is lexicographic on `(a, b)`. It exists so that outputs
/// can be sorted deterministically; it is not a field ordering.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Eisenstein {
    a: Rational,
    b: Rational,
}

impl Eisenstein {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        Self::new(a, <Rational as Zero>::zero())
    }

    /// The cube root of unity `ω`.
    pub fn omega() -> Self {
        Self::new(<Rational as Zero>::zero(), <Rational as One>::one())
    }

    pub fn re(&self) -> &Rational {
        &self.a
    }

    pub fn omega_part(&self) -> &Rational {
        &self.b
    }

    /// Field norm `a² − ab + b²`; zero only for the zero element.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// Galois conjugate `a + bω²`.
    pub fn conjugate(&self) -> Self {
        Self::new(&self.a - &self.b, -&self.b)
    }
}

impl Add for Eisenstein {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for Eisenstein {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Mul for Eisenstein {
    type Output = Self;
    // (a + bω)(c + dω) = ac + (ad + bc)ω + bdω² = (ac − bd) + (ad + bc − bd)ω
    fn mul(self, rhs: Self) -> Self {
        let bd = &self.b * &rhs.b;
        let a = &self.a * &rhs.a - &bd;
        let b = &self.a * &rhs.b + &self.b * &rhs.a - bd;
        Self::new(a, b)
    }
}

impl Neg for Eisenstein {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

/// File syntax: `a` when the ω-part vanishes, otherwise `a+b*w` or `a-b*w`.
impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.b) {
            write!(f, "{}", self.a)
        } else if self.b.is_negative() {
            write!(f, "{}-{}*w", self.a, -&self.b)
        } else {
            write!(f, "{}+{}*w", self.a, self.b)
        }
    }
}

impl Field for Eisenstein {
    const TAG: &'static str = "Qw";

    fn zero() -> Self {
        Self::from_rational(<Rational as Zero>::zero())
    }

    fn one() -> Self {
        Self::from_rational(<Rational as One>::one())
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }

    fn from_i64(v: i64) -> Self {
        Self::from_rational(integer(v))
    }

    fn inverse(&self) -> Option<Self> {
        let norm = self.norm();
        if Zero::is_zero(&norm) {
            return None;
        }
        let conj = self.conjugate();
        Some(Self::new(conj.a / &norm, conj.b / norm))
    }

    /// First nonzero entry scaled to one; no sign normalisation exists here.
    fn canonicalize(v: &mut [Self]) {
        leading_one(v);
    }

    /// Accepts `a`, `a+b*w`, `a-b*w`, `b*w`, `w`, `-w` (and `*` may be omitted).
    fn parse_scalar(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let Some(body) = s.strip_suffix('w') else {
            return parse_rational(s).map(Self::from_rational);
        };
        let body = body.strip_suffix('*').unwrap_or(body);
        let split = body
            .char_indices()
            .skip(1)
            .find(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i);
        let (re, coef) = match split {
            Some(i) => (parse_rational(&body[..i])?, &body[i..]),
            None => (<Rational as Zero>::zero(), body),
        };
        let (negate, coef) = match coef.as_bytes().first() {
            Some(b'+') => (false, &coef[1..]),
            Some(b'-') => (true, &coef[1..]),
            _ => (false, coef),
        };
        let mut b = if coef.is_empty() {
            <Rational as One>::one()
        } else {
            parse_rational(coef)?
        };
        if negate {
            b = -b;
        }
        Ok(Self::new(re, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        rational(n, d)
    }

    fn eis(a: (i64, i64), b: (i64, i64)) -> Eisenstein {
        Eisenstein::new(q(a.0, a.1), q(b.0, b.1))
    }

    #[test]
    fn omega_is_a_primitive_cube_root_of_unity() {
        let w = Eisenstein::omega();
        let w2 = w.clone() * w.clone();
        assert_eq!(w2, eis((-1, 1), (-1, 1)));
        assert_eq!(w2.clone() * w.clone(), Eisenstein::one());
        assert!((Eisenstein::one() + w + w2).is_zero());
    }

    #[test]
    fn rational_canonical_form_is_primitive_with_positive_lead() {
        let mut v = vec![q(0, 1), q(-2, 3), q(4, 9), q(2, 1)];
        Rational::canonicalize(&mut v);
        assert_eq!(v, vec![q(0, 1), q(3, 1), q(-2, 1), q(-9, 1)]);
    }

    #[test]
    fn eisenstein_canonical_form_has_leading_one() {
        let mut v = vec![Eisenstein::zero(), Eisenstein::omega(), eis((2, 1), (0, 1))];
        Eisenstein::canonicalize(&mut v);
        assert_eq!(v[0], Eisenstein::zero());
        assert_eq!(v[1], Eisenstein::one());
        // 2/ω = 2ω²
        assert_eq!(v[2], eis((-2, 1), (-2, 1)));
    }

    #[test]
    fn parse_rejects_zero_and_negative_denominators() {
        assert!(Rational::parse_scalar("1/0").is_err());
        assert!(Rational::parse_scalar("1/-2").is_err());
        assert!(Rational::parse_scalar("").is_err());
        assert!(Rational::parse_scalar("1.5").is_err());
        assert_eq!(Rational::parse_scalar("-6/4").unwrap(), q(-3, 2));
    }

    #[test]
    fn eisenstein_parse_forms() {
        assert_eq!(Eisenstein::parse_scalar("w").unwrap(), Eisenstein::omega());
        assert_eq!(Eisenstein::parse_scalar("-w").unwrap(), -Eisenstein::omega());
        assert_eq!(Eisenstein::parse_scalar("1+w").unwrap(), eis((1, 1), (1, 1)));
        assert_eq!(
            Eisenstein::parse_scalar("-1/2-3/4*w").unwrap(),
            eis((-1, 2), (-3, 4))
        );
        assert_eq!(Eisenstein::parse_scalar("2/3*w").unwrap(), eis((0, 1), (2, 3)));
        assert_eq!(Eisenstein::parse_scalar("7").unwrap(), eis((7, 1), (0, 1)));
        assert!(Eisenstein::parse_scalar("1+x*w").is_err());
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-50i64..=50, 1i64..=50).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn eisenstein_inverse_round_trips(a in small_rational(), b in small_rational()) {
            let x = Eisenstein::new(a, b);
            prop_assume!(!x.is_zero());
            let inv = x.inverse().unwrap();
            prop_assert_eq!(x * inv, Eisenstein::one());
        }

        #[test]
        fn eisenstein_display_parses_back(a in small_rational(), b in small_rational()) {
            let x = Eisenstein::new(a, b);
            prop_assert_eq!(Eisenstein::parse_scalar(&x.to_string()).unwrap(), x);
        }

        #[test]
        fn eisenstein_multiplication_commutes_and_distributes(
            a in small_rational(), b in small_rational(),
            c in small_rational(), d in small_rational(),
            e in small_rational(), f in small_rational(),
        ) {
            let x = Eisenstein::new(a, b);
            let y = Eisenstein::new(c, d);
            let z = Eisenstein::new(e, f);
            prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
            prop_assert_eq!(
                x.clone() * (y.clone() + z.clone()),
                x.clone() * y + x * z
            );
        }
    }
}
