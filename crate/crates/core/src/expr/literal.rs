//! Element literal readers and printers, one dialect per semiring.

use num_bigint::{BigInt, BigUint};
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};

use crate::instances::{MonoidNat, Tropical};
use crate::semiring::{Element, SemiringDescriptor, SemiringKind};

fn parse_natural(text: &str) -> Option<BigUint> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

/// `n` or `n/d` with positive `d`.
fn parse_positive_rational(text: &str) -> Option<Ratio<BigUint>> {
    match text.split_once('/') {
        Some((n, d)) => {
            let numer = parse_natural(n)?;
            let denom = parse_natural(d)?;
            if denom.is_zero() {
                None
            } else {
                Some(Ratio::new(numer, denom))
            }
        }
        None => Some(Ratio::from_integer(parse_natural(text)?)),
    }
}

/// Possibly negated rational, as inside `t(...)`.
fn parse_signed_rational(text: &str) -> Option<BigRational> {
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let magnitude = parse_positive_rational(body)?;
    let numer = BigInt::from(magnitude.numer().clone());
    let denom = BigInt::from(magnitude.denom().clone());
    let value = BigRational::new(numer, denom);
    Some(if negative { -value } else { value })
}

fn call_body<'a>(text: &'a str, head: &str) -> Option<&'a str> {
    text.strip_prefix(head)?.strip_prefix('(')?.strip_suffix(')')
}

/// Resolve a literal against a semiring; `None` means the text is not a
/// literal of that semiring's dialect.
pub(crate) fn resolve(descriptor: &SemiringDescriptor, text: &str) -> Option<Element> {
    if let Some(n) = parse_natural(text) {
        return Some(descriptor.from_natural(&n));
    }
    match descriptor.kind() {
        SemiringKind::NonNegRational => {
            let (n, d) = text.split_once('/')?;
            let numer = parse_natural(n)?;
            let denom = parse_natural(d)?;
            Element::rational(numer, denom)
        }
        SemiringKind::TropicalMinPlus => {
            if text == "tinf" {
                return Some(Element::tropical(Tropical::Infinity));
            }
            let value = parse_signed_rational(call_body(text, "t")?)?;
            Some(Element::tropical(Tropical::finite(value)))
        }
        SemiringKind::MonoidNat => {
            let exponent = parse_positive_rational(call_body(text, "m")?)?;
            if exponent.numer().is_zero() {
                return None;
            }
            Some(Element::monoid(MonoidNat::term(exponent, BigUint::one())))
        }
        SemiringKind::S0 => match text {
            "x" => Some(Element::s0_x()),
            "y" => Some(Element::s0_y()),
            _ => None,
        },
        SemiringKind::Nat | SemiringKind::Boolean => None,
    }
}

fn positive_rational_text(r: &Ratio<BigUint>) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn signed_rational_text(r: &BigRational) -> String {
    let magnitude = if r.denom().is_one() {
        r.numer().abs().to_string()
    } else {
        format!("{}/{}", r.numer().abs(), r.denom())
    };
    if r.is_negative() {
        format!("-{magnitude}")
    } else {
        magnitude
    }
}

/// Canonical literal text. Multi-term carriers render as sums, which the
/// polynomial printer parenthesizes where needed.
pub fn render_element(element: &Element) -> String {
    if let Some(n) = element.as_nat() {
        return n.to_string();
    }
    if let Some(b) = element.as_boolean() {
        return if b { "1" } else { "0" }.to_owned();
    }
    if let Some(r) = element.as_rational() {
        return positive_rational_text(r);
    }
    if let Some(t) = element.as_tropical() {
        return match t {
            Tropical::Infinity => "tinf".to_owned(),
            Tropical::Finite(v) => format!("t({})", signed_rational_text(v)),
        };
    }
    if let Some(m) = element.as_monoid() {
        if m.is_zero() {
            return "0".to_owned();
        }
        return m
            .terms()
            .iter()
            .map(|(exponent, coeff)| {
                if exponent.is_one() {
                    coeff.to_string()
                } else if coeff.is_one() {
                    format!("m({})", positive_rational_text(exponent))
                } else {
                    format!("{coeff}*m({})", positive_rational_text(exponent))
                }
            })
            .collect::<Vec<_>>()
            .join("+");
    }
    let v = element.as_s0().expect("every payload case is covered");
    if v.is_zero() {
        return "0".to_owned();
    }
    v.terms()
        .iter()
        .map(|(&k, coeff)| {
            let base = match k {
                0 => return coeff.to_string(),
                1 => "x".to_owned(),
                -1 => "y".to_owned(),
                k if k > 1 => format!("x^{k}"),
                k => format!("y^{}", -k),
            };
            if coeff.is_one() {
                base
            } else {
                format!("{coeff}*{base}")
            }
        })
        .collect::<Vec<_>>()
        .join("+")
}

impl std::fmt::Display for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&render_element(self))
    }
}
