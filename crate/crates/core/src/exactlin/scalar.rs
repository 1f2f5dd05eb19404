use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact field element: a rational number or a residue modulo a prime.
///
/// Rationals act as "untyped" constants: combining a rational with a residue
/// reduces the rational modulo that prime. This lets constructors that only
/// emit small integer structure constants work unchanged over any field.
#[derive(Clone, Debug)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u64, p: u64 },
}

fn mod_inv(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        return None;
    }
    let e = BigInt::from(a).extended_gcd(&BigInt::from(p));
    let x = e.x.mod_floor(&BigInt::from(p));
    x.to_u64()
}

fn reduce_rational(q: &BigRational, p: u64) -> u64 {
    let bp = BigInt::from(p);
    let n = q.numer().mod_floor(&bp).to_u64().unwrap();
    let d = q.denom().mod_floor(&bp).to_u64().unwrap();
    let di = mod_inv(d, p).expect("denominator divisible by the field characteristic");
    ((n as u128 * di as u128) % p as u128) as u64
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Q(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Q(BigRational::one())
    }

    pub fn from_i64(n: i64) -> Self {
        Scalar::Q(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Scalar::Q(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// Residue `v mod p`. `p` is assumed prime.
    pub fn fp(v: i64, p: u64) -> Self {
        Scalar::Fp { v: v.rem_euclid(p as i64) as u64, p }
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            Scalar::Q(_) => None,
            Scalar::Fp { p, .. } => Some(*p),
        }
    }

    /// Reinterprets the value in the field of the given characteristic.
    pub fn in_field(&self, field: Field) -> Scalar {
        match (self, field) {
            (Scalar::Q(q), Field::Fp(p)) => Scalar::Fp { v: reduce_rational(q, p), p },
            (s, _) => s.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Q(q) if q.is_zero() => None,
            Scalar::Q(q) => Some(Scalar::Q(q.recip())),
            Scalar::Fp { v, p } => mod_inv(*v, *p).map(|v| Scalar::Fp { v, p: *p }),
        }
    }

    fn binop(
        &self,
        other: &Scalar,
        fq: impl Fn(&BigRational, &BigRational) -> BigRational,
        fp: impl Fn(u128, u128, u128) -> u128,
    ) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(fq(a, b)),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: p2 }) => {
                assert_eq!(p, p2, "mixing residues of different characteristic");
                Scalar::Fp { v: fp(*a as u128, *b as u128, *p as u128) as u64, p: *p }
            }
            (Scalar::Fp { v: a, p }, Scalar::Q(b)) => {
                let b = reduce_rational(b, *p);
                Scalar::Fp { v: fp(*a as u128, b as u128, *p as u128) as u64, p: *p }
            }
            (Scalar::Q(a), Scalar::Fp { v: b, p }) => {
                let a = reduce_rational(a, *p);
                Scalar::Fp { v: fp(a as u128, *b as u128, *p as u128) as u64, p: *p }
            }
        }
    }

    /// Canonical text form: `n` for integers, `n/d` otherwise; residues as their
    /// least non-negative representative.
    pub fn to_exact_string(&self) -> String {
        match self {
            Scalar::Q(q) if q.denom().is_one() => q.numer().to_string(),
            Scalar::Q(q) => format!("{}/{}", q.numer(), q.denom()),
            Scalar::Fp { v, .. } => v.to_string(),
        }
    }

    /// Parses `n` or `n/d`. Returns `None` on malformed input or a zero denominator.
    pub fn parse_exact(s: &str, field: Field) -> Option<Scalar> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (BigInt::from_str(n.trim()).ok()?, BigInt::from_str(d.trim()).ok()?),
            None => (BigInt::from_str(s).ok()?, BigInt::one()),
        };
        if d.is_zero() {
            return None;
        }
        let q = BigRational::new(n, d);
        match field {
            Field::Q => Some(Scalar::Q(q)),
            Field::Fp(p) => {
                if (q.denom() % BigInt::from(p)).is_zero() {
                    return None;
                }
                Some(Scalar::Fp { v: reduce_rational(&q, p), p })
            }
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Q(q) if q.is_negative())
    }
}

/// The coefficient field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Q,
    Fp(u64),
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "Q"),
            Field::Fp(p) => write!(f, "Fp:{p}"),
        }
    }
}

/// Parses `Q` or `Fp:<p>` with `p` prime.
impl FromStr for Field {
    type Err = String;

    fn from_str(s: &str) -> Result<Field, String> {
        if s == "Q" {
            return Ok(Field::Q);
        }
        let p: u64 = s
            .strip_prefix("Fp:")
            .and_then(|p| p.parse().ok())
            .ok_or_else(|| format!("expected Q or Fp:<p>, got '{s}'"))?;
        if p < 2 || (2..).take_while(|d: &u64| d * d <= p).any(|d| p % d == 0) {
            return Err(format!("{p} is not prime"));
        }
        Ok(Field::Fp(p))
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        (self - other).is_zero()
    }
}

impl Eq for Scalar {}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_exact_string())
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_i64(n)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        self.binop(o, |a, b| a + b, |a, b, p| (a + b) % p)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self.binop(o, |a, b| a - b, |a, b, p| (a + p - b) % p)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        self.binop(o, |a, b| a * b, |a, b, p| (a * b) % p)
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, o: &Scalar) -> Scalar {
        let inv = o.inv().expect("division by zero");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(q) => Scalar::Q(-q),
            Scalar::Fp { v, p } => Scalar::Fp { v: (p - v) % p, p: *p },
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar { (&self).$m(&o) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar { (&self).$m(o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
