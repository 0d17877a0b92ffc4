use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linear::{sign, LinComb, Scalar};

/// The basis monomial `x^n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(pub u32);

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => f.write_str("1"),
            1 => f.write_str("x"),
            n => write!(f, "x^{n}"),
        }
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Accepts `1`, `x`, `x^n`, or a bare exponent such as `3`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "x" => return Ok(Monomial(1)),
            "1" => return Ok(Monomial(0)),
            _ => {}
        }
        let exp = t.strip_prefix("x^").unwrap_or(t);
        exp.parse().map(Monomial).map_err(|_| parse_err(s, 0, "expected x^n or an exponent"))
    }
}

/// The polynomial Hopf algebra `F[x]` with `x` primitive.
#[derive(Clone, Copy, Debug, Default)]
pub struct Poly;

fn binomial(n: u32, k: u32) -> Scalar {
    (0..k).fold(Scalar::from(1), |acc, i| acc * (n - i) / (i + 1))
}

impl HopfAlgebra for Poly {
    type Key = Monomial;

    fn degree(&self, key: &Monomial) -> usize {
        key.0 as usize
    }

    fn unit(&self) -> Monomial {
        Monomial(0)
    }

    fn product(&self, a: &Monomial, b: &Monomial) -> LinComb<Monomial> {
        LinComb::basis(Monomial(a.0 + b.0))
    }

    fn coproduct(&self, key: &Monomial) -> LinComb<(Monomial, Monomial)> {
        (0..=key.0).map(|i| ((Monomial(i), Monomial(key.0 - i)), binomial(key.0, i))).collect()
    }

    fn closed_antipode(&self, key: &Monomial) -> Option<LinComb<Monomial>> {
        Some(LinComb::term(*key, sign(key.0 as usize)))
    }
}
