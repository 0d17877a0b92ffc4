//! Text forms for basis keys and linear combinations.
//!
//! A combination renders as signed terms separated by ` + ` or ` - `, with a
//! coefficient other than one written `c*key`; zero renders as `0`.

use std::fmt::Display;
use std::str::FromStr;

use crate::algebras::{GraphAlgebra, MQSym, Monomial, NSymH, NSymImmaculate, PSym, Poly, QSymF, QSymM, SSym, ShuffleAlgebra};
use crate::combinat::{Composition, Permutation, Word};
use crate::error::{parse_err, Result};
use crate::graphs::CanonGraph;
use crate::hopf::HopfAlgebra;
use crate::linear::{LinComb, Scalar};
use crate::tableaux::Tableau;

pub trait KeyCodec: HopfAlgebra {
    fn render_key(&self, key: &Self::Key) -> String;

    /// Inverse of [`KeyCodec::render_key`].
    fn parse_key(&self, s: &str) -> Result<Self::Key>;

    /// A key typed by a user, which may omit the rendered prefix.
    fn parse_input(&self, s: &str) -> Result<Self::Key> {
        self.parse_key(s)
    }
}

fn bracketed<'a>(s: &'a str, prefix: &str) -> Option<&'a str> {
    s.trim().strip_prefix(prefix)?.strip_prefix('[')?.strip_suffix(']')
}

fn composition_key(s: &str, prefix: &str) -> Result<Composition> {
    bracketed(s, prefix)
        .ok_or_else(|| parse_err(s, 0, format!("expected {prefix}[...]")))?
        .parse()
}

fn composition_input(s: &str, prefix: &str) -> Result<Composition> {
    match bracketed(s, prefix) {
        Some(inner) => inner.parse(),
        None => s.parse(),
    }
}

fn via_display<T: Display>(t: &T) -> String {
    t.to_string()
}

impl KeyCodec for Poly {
    fn render_key(&self, key: &Monomial) -> String {
        via_display(key)
    }

    fn parse_key(&self, s: &str) -> Result<Monomial> {
        s.parse()
    }

    /// A bare integer is read as the exponent, so `1` means `x`.
    fn parse_input(&self, s: &str) -> Result<Monomial> {
        match s.trim().parse::<u32>() {
            Ok(n) => Ok(Monomial(n)),
            Err(_) => s.parse(),
        }
    }
}

impl KeyCodec for ShuffleAlgebra {
    fn render_key(&self, key: &Word) -> String {
        via_display(key)
    }

    fn parse_key(&self, s: &str) -> Result<Word> {
        s.parse()
    }
}

macro_rules! composition_codec {
    ($alg:ty, $prefix:literal) => {
        impl KeyCodec for $alg {
            fn render_key(&self, key: &Composition) -> String {
                format!("{}[{}]", $prefix, key)
            }

            fn parse_key(&self, s: &str) -> Result<Composition> {
                composition_key(s, $prefix)
            }

            fn parse_input(&self, s: &str) -> Result<Composition> {
                composition_input(s, $prefix)
            }
        }
    };
}

composition_codec!(QSymM, "M");
composition_codec!(QSymF, "F");
composition_codec!(MQSym, "Ft");

macro_rules! colon_codec {
    ($alg:ty, $prefix:literal) => {
        impl KeyCodec for $alg {
            fn render_key(&self, key: &Composition) -> String {
                format!("{}{}", $prefix, key)
            }

            fn parse_key(&self, s: &str) -> Result<Composition> {
                s.trim()
                    .strip_prefix($prefix)
                    .ok_or_else(|| parse_err(s, 0, format!("expected {}...", $prefix)))?
                    .parse()
            }

            fn parse_input(&self, s: &str) -> Result<Composition> {
                s.trim().strip_prefix($prefix).unwrap_or(s).parse()
            }
        }
    };
}

colon_codec!(NSymH, "H:");
colon_codec!(NSymImmaculate, "S:");

impl KeyCodec for GraphAlgebra {
    fn render_key(&self, key: &CanonGraph) -> String {
        via_display(key)
    }

    fn parse_key(&self, s: &str) -> Result<CanonGraph> {
        s.parse()
    }
}

impl KeyCodec for SSym {
    fn render_key(&self, key: &Permutation) -> String {
        via_display(key)
    }

    fn parse_key(&self, s: &str) -> Result<Permutation> {
        s.parse()
    }
}

impl KeyCodec for PSym {
    fn render_key(&self, key: &Tableau) -> String {
        if key.is_empty() {
            "∅".into()
        } else {
            via_display(key)
        }
    }

    fn parse_key(&self, s: &str) -> Result<Tableau> {
        let t: Tableau = s.parse()?;
        if !t.is_standard() {
            return Err(parse_err(s, 0, "tableau is not standard"));
        }
        Ok(t)
    }
}

/// Renders `v` in the combination grammar.
pub fn render<H: KeyCodec>(h: &H, v: &LinComb<H::Key>) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let one = Scalar::from(1);
    let mut out = String::new();
    for (i, (k, c)) in v.iter().enumerate() {
        let neg = *c < Scalar::from(0);
        let mag = if neg { -c.clone() } else { c.clone() };
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if mag != one {
            out.push_str(&format!("{mag}*"));
        }
        out.push_str(&h.render_key(k));
    }
    out
}

fn parse_term<H: KeyCodec>(h: &H, src: &str, tok: &str, negate: bool) -> Result<(H::Key, Scalar)> {
    let (neg, body) = match tok.strip_prefix('-') {
        Some(rest) if !rest.is_empty() => (!negate, rest),
        _ => (negate, tok),
    };
    let (coeff, key) = match body.split_once('*') {
        Some((c, k)) => (Scalar::from_str(c).map_err(|_| parse_err(src, 0, format!("bad coefficient {c:?}")))?, k),
        None => (Scalar::from(1), body),
    };
    let key = h.parse_key(key)?;
    Ok((key, if neg { -coeff } else { coeff }))
}

/// Parses the output of [`render`].
pub fn parse<H: KeyCodec>(h: &H, s: &str) -> Result<LinComb<H::Key>> {
    let t = s.trim();
    if t == "0" {
        return Ok(LinComb::zero());
    }
    let mut toks = t.split_whitespace();
    let first = toks.next().ok_or_else(|| parse_err(s, 0, "empty combination"))?;
    let mut out = LinComb::zero();
    let (k, c) = parse_term(h, s, first, false)?;
    out.add_term(k, c);
    while let Some(op) = toks.next() {
        let negate = match op {
            "+" => false,
            "-" => true,
            _ => return Err(parse_err(s, 0, format!("expected `+` or `-`, found {op:?}"))),
        };
        let tok = toks.next().ok_or_else(|| parse_err(s, s.len(), "dangling operator"))?;
        let (k, c) = parse_term(h, s, tok, negate)?;
        out.add_term(k, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::takeuchi_antipode;
    use crate::{comp, perm, tab};

    #[test]
    fn renders_known_outputs() {
        assert_eq!(render(&Poly, &takeuchi_antipode(&Poly, &Monomial(3))), "-x^3");
        assert_eq!(render(&SSym, &takeuchi_antipode(&SSym, &perm!("123"))), "-321");
        assert_eq!(render(&QSymF, &LinComb::term(comp![1, 2], -1)), "-F[1,2]");
        assert_eq!(render(&NSymH, &LinComb::zero()), "0");
        let v: LinComb<Composition> = [(comp![1, 1], Scalar::from(2)), (comp![2], Scalar::from(-3))].into_iter().collect();
        assert_eq!(render(&NSymImmaculate, &v), "2*S:1,1 - 3*S:2");
    }

    fn round_trip<H: KeyCodec>(h: &H, keys: &[H::Key]) {
        for (i, k) in keys.iter().enumerate() {
            let mut v = LinComb::term(k.clone(), Scalar::from(i as i64 % 5 - 2));
            for (j, k2) in keys.iter().enumerate().take(i) {
                v.add_term(k2.clone(), Scalar::from(j as i64 + 1));
            }
            let s = render(h, &v);
            assert_eq!(parse(h, &s).unwrap(), v, "{s}");
        }
    }

    #[test]
    fn round_trips() {
        round_trip(&Poly, &[Monomial(0), Monomial(1), Monomial(7)]);
        round_trip(&ShuffleAlgebra, &[Word::empty(), word_of("12"), word_of("3,10,2")]);
        round_trip(&QSymM, &[Composition::empty(), comp![2, 1]]);
        round_trip(&QSymF, &[Composition::empty(), comp![1, 2]]);
        round_trip(&MQSym::new(5), &[Composition::empty(), comp![3, 1]]);
        round_trip(&NSymH, &[Composition::empty(), comp![1, 1, 2]]);
        round_trip(&NSymImmaculate, &[Composition::empty(), comp![2]]);
        round_trip(&SSym, &[Permutation::identity(0), perm!("3142")]);
        round_trip(&PSym, &[Tableau::empty(), tab!("1,3/2")]);
        round_trip(&GraphAlgebra, &["n=0;edges=".parse().unwrap(), "n=3;edges=1-2,2-3".parse().unwrap()]);
    }

    fn word_of(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn user_inputs() {
        assert_eq!(Poly.parse_input("1").unwrap(), Monomial(1));
        assert_eq!(QSymF.parse_input("2,1").unwrap(), comp![2, 1]);
        assert_eq!(QSymF.parse_input("F[2,1]").unwrap(), comp![2, 1]);
        assert_eq!(NSymH.parse_input("H:3").unwrap(), comp![3]);
        assert!(PSym.parse_key("2,1").is_err());
        assert!(parse(&SSym, "12 +").is_err());
    }
}
