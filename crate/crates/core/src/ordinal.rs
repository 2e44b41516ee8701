//! Ordinals below ε₀ in Cantor normal form.
//!
//! An [`Ordinal`] is the term list `ω^e₁·c₁ + … + ω^eₙ·cₙ` with
//! `e₁ > … > eₙ` and every `cᵢ ≥ 1`. The exponents are themselves ordinals,
//! so the representation is a finite tree and can never reach ε₀. Because
//! the form is unique, structural equality is ordinal equality.
//!
//! Every ordinal here is countable, so side conditions of the form
//! "β is countable" hold for every value of this type.

use std::cmp::Ordering;
use std::fmt;
use std::ops;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrdinalError {
    #[error("cannot left-subtract {lhs} from {rhs}: {lhs} > {rhs}")]
    SubtractionOutOfRange { lhs: Ordinal, rhs: Ordinal },
    #[error("not in Cantor normal form: {0}")]
    NonCanonical(String),
}

/// One summand `ω^exponent · coefficient` of a Cantor normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    exponent: Ordinal,
    coefficient: BigUint,
}

impl Term {
    pub fn exponent(&self) -> &Ordinal {
        &self.exponent
    }

    pub fn coefficient(&self) -> &BigUint {
        &self.coefficient
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Ordinal {
    terms: Vec<Term>,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_natural(1u32)
    }

    pub fn omega() -> Self {
        Self::omega_pow(Self::one())
    }

    /// `ω^exponent`.
    pub fn omega_pow(exponent: Ordinal) -> Self {
        Ordinal {
            terms: vec![Term {
                exponent,
                coefficient: BigUint::one(),
            }],
        }
    }

    pub fn from_natural(n: impl Into<BigUint>) -> Self {
        let n = n.into();
        if n.is_zero() {
            return Self::zero();
        }
        Ordinal {
            terms: vec![Term {
                exponent: Self::zero(),
                coefficient: n,
            }],
        }
    }

    /// Builds an ordinal from `(exponent, coefficient)` pairs, rejecting
    /// anything that is not already in Cantor normal form.
    pub fn from_terms(
        terms: impl IntoIterator<Item = (Ordinal, BigUint)>,
    ) -> Result<Self, OrdinalError> {
        let terms: Vec<Term> = terms
            .into_iter()
            .map(|(exponent, coefficient)| Term {
                exponent,
                coefficient,
            })
            .collect();
        for (i, t) in terms.iter().enumerate() {
            if t.coefficient.is_zero() {
                return Err(OrdinalError::NonCanonical(format!(
                    "term {i} has coefficient 0"
                )));
            }
            if i > 0 && terms[i - 1].exponent <= t.exponent {
                return Err(OrdinalError::NonCanonical(format!(
                    "exponent of term {i} is not below the previous exponent"
                )));
            }
        }
        Ok(Ordinal { terms })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [t] if t.exponent.is_zero() && t.coefficient.is_one())
    }

    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(|t| t.exponent.is_zero())
    }

    pub fn to_natural(&self) -> Option<BigUint> {
        match self.terms.as_slice() {
            [] => Some(BigUint::zero()),
            [t] if t.exponent.is_zero() => Some(t.coefficient.clone()),
            _ => None,
        }
    }

    /// Exponent of the leading term; `None` for zero.
    pub fn leading_exponent(&self) -> Option<&Ordinal> {
        self.terms.first().map(|t| &t.exponent)
    }

    /// Splits into the limit part (terms with positive exponent) and the
    /// trailing natural number.
    pub fn split_finite(&self) -> (Ordinal, BigUint) {
        match self.terms.last() {
            Some(t) if t.exponent.is_zero() => (
                Ordinal {
                    terms: self.terms[..self.terms.len() - 1].to_vec(),
                },
                t.coefficient.clone(),
            ),
            _ => (self.clone(), BigUint::zero()),
        }
    }

    pub fn successor(&self) -> Ordinal {
        self.add(&Ordinal::one())
    }

    pub fn add(&self, rhs: &Ordinal) -> Ordinal {
        let Some(lead) = rhs.terms.first() else {
            return self.clone();
        };
        let mut terms = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        for t in &self.terms {
            match t.exponent.cmp(&lead.exponent) {
                Ordering::Greater => terms.push(t.clone()),
                Ordering::Equal => {
                    terms.push(Term {
                        exponent: t.exponent.clone(),
                        coefficient: &t.coefficient + &lead.coefficient,
                    });
                    terms.extend(rhs.terms[1..].iter().cloned());
                    return Ordinal { terms };
                }
                Ordering::Less => break,
            }
        }
        terms.extend(rhs.terms.iter().cloned());
        Ordinal { terms }
    }

    /// Left subtraction: the unique `γ` with `self + γ = rhs`.
    pub fn sub_left(&self, rhs: &Ordinal) -> Result<Ordinal, OrdinalError> {
        for (i, (a, b)) in self.terms.iter().zip(&rhs.terms).enumerate() {
            if a == b {
                continue;
            }
            return match a.exponent.cmp(&b.exponent) {
                Ordering::Less => Ok(Ordinal {
                    terms: rhs.terms[i..].to_vec(),
                }),
                Ordering::Equal if a.coefficient < b.coefficient => {
                    let mut terms = vec![Term {
                        exponent: b.exponent.clone(),
                        coefficient: &b.coefficient - &a.coefficient,
                    }];
                    terms.extend(rhs.terms[i + 1..].iter().cloned());
                    Ok(Ordinal { terms })
                }
                _ => Err(OrdinalError::SubtractionOutOfRange {
                    lhs: self.clone(),
                    rhs: rhs.clone(),
                }),
            };
        }
        if self.terms.len() <= rhs.terms.len() {
            Ok(Ordinal {
                terms: rhs.terms[self.terms.len()..].to_vec(),
            })
        } else {
            Err(OrdinalError::SubtractionOutOfRange {
                lhs: self.clone(),
                rhs: rhs.clone(),
            })
        }
    }

    pub fn mul(&self, rhs: &Ordinal) -> Ordinal {
        if self.is_zero() || rhs.is_zero() {
            return Ordinal::zero();
        }
        let lead = &self.terms[0];
        let mut terms = Vec::with_capacity(rhs.terms.len() + self.terms.len());
        for t in &rhs.terms {
            if t.exponent.is_zero() {
                // a·n = ω^e₁·(c₁·n) + (tail of a)
                terms.push(Term {
                    exponent: lead.exponent.clone(),
                    coefficient: &lead.coefficient * &t.coefficient,
                });
                terms.extend(self.terms[1..].iter().cloned());
            } else {
                terms.push(Term {
                    exponent: lead.exponent.add(&t.exponent),
                    coefficient: t.coefficient.clone(),
                });
            }
        }
        Ordinal { terms }
    }

    pub fn pow(&self, rhs: &Ordinal) -> Ordinal {
        if rhs.is_zero() {
            return Ordinal::one();
        }
        if self.is_zero() || self.is_one() {
            return self.clone();
        }
        let (limit, finite) = rhs.split_finite();
        let limit_power = if limit.is_zero() {
            Ordinal::one()
        } else if self.is_finite() {
            // n^(ω·δ) = ω^δ for finite n ≥ 2
            Ordinal::omega_pow(limit.div_omega())
        } else {
            // a^λ = ω^(e₁·λ) for infinite a and limit λ
            Ordinal::omega_pow(self.terms[0].exponent.mul(&limit))
        };
        limit_power.mul(&self.pow_natural(&finite))
    }

    fn pow_natural(&self, n: &BigUint) -> Ordinal {
        let mut acc = Ordinal::one();
        for i in (0..n.bits()).rev() {
            acc = acc.mul(&acc);
            if n.bit(i) {
                acc = acc.mul(self);
            }
        }
        acc
    }

    /// For a limit ordinal `ω·δ`, returns `δ`.
    fn div_omega(&self) -> Ordinal {
        let one = Ordinal::one();
        Ordinal {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exponent: one
                        .sub_left(&t.exponent)
                        .expect("limit term has positive exponent"),
                    coefficient: t.coefficient.clone(),
                })
                .collect(),
        }
    }

    /// True iff the ordinal is a power of ω (including `1 = ω^0`).
    pub fn is_indecomposable(&self) -> bool {
        matches!(self.terms.as_slice(), [t] if t.coefficient.is_one())
    }

    /// Writes a decomposable ordinal as `b + c` with `b, c` both smaller,
    /// taking `c` to be the last indecomposable summand.
    pub fn split_decomposable(&self) -> Option<(Ordinal, Ordinal)> {
        if self.is_zero() || self.is_indecomposable() {
            return None;
        }
        let mut rest = self.terms.clone();
        let last = rest.last_mut().expect("non-zero");
        let summand = Ordinal::omega_pow(last.exponent.clone());
        last.coefficient -= 1u32;
        if last.coefficient.is_zero() {
            rest.pop();
        }
        Some((Ordinal { terms: rest }, summand))
    }

    /// The indecomposable summands of the Cantor normal form, largest first,
    /// each `ω^eᵢ` repeated `cᵢ` times.
    pub fn decompose_strong(&self) -> Vec<Ordinal> {
        let mut out = Vec::new();
        for t in &self.terms {
            let piece = Ordinal::omega_pow(t.exponent.clone());
            let mut count = t.coefficient.clone();
            while !count.is_zero() {
                out.push(piece.clone());
                count -= 1u32;
            }
        }
        out
    }

    pub fn godel_code(&self) -> BigUint {
        self.terms.iter().rev().fold(BigUint::zero(), |rest, t| {
            let term = pair(&t.exponent.godel_code(), &(&t.coefficient - 1u32));
            pair(&term, &rest) + 1u32
        })
    }

    /// Inverse of [`Ordinal::godel_code`]. Codes of term lists that are not in
    /// Cantor normal form decode to `None`.
    pub fn godel_decode(code: &BigUint) -> Option<Ordinal> {
        if let Some(small) = code.to_u64() {
            return Self::godel_decode_u64(small);
        }
        let (term, rest) = unpair(&(code - 1u32));
        let (exponent, coefficient) = unpair(&term);
        let exponent = Self::godel_decode(&exponent)?;
        let rest = Self::godel_decode(&rest)?;
        prepend_term(exponent, coefficient + 1u32, rest)
    }

    pub fn godel_decode_u64(code: u64) -> Option<Ordinal> {
        if code == 0 {
            return Some(Ordinal::zero());
        }
        let (term, rest) = unpair_u64(code - 1);
        let (exponent, coefficient) = unpair_u64(term);
        let exponent = Self::godel_decode_u64(exponent)?;
        let rest = Self::godel_decode_u64(rest)?;
        prepend_term(exponent, BigUint::from(coefficient) + 1u32, rest)
    }

    /// Renders with `ω` instead of `w`.
    pub fn to_unicode_string(&self) -> String {
        let mut s = String::new();
        self.render(&mut s, "ω").expect("writing to a String");
        s
    }

    fn render(&self, out: &mut impl fmt::Write, omega: &str) -> fmt::Result {
        if self.terms.is_empty() {
            return out.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                out.write_str("+")?;
            }
            if t.exponent.is_zero() {
                write!(out, "{}", t.coefficient)?;
                continue;
            }
            out.write_str(omega)?;
            if !t.exponent.is_one() {
                out.write_str("^")?;
                if t.exponent.is_finite() || t.exponent.is_one_term_bare() {
                    t.exponent.render(out, omega)?;
                } else {
                    out.write_str("(")?;
                    t.exponent.render(out, omega)?;
                    out.write_str(")")?;
                }
            }
            if !t.coefficient.is_one() {
                write!(out, "*{}", t.coefficient)?;
            }
        }
        Ok(())
    }

    /// `ω` itself renders as a bare atom and needs no parentheses as an exponent.
    fn is_one_term_bare(&self) -> bool {
        matches!(self.terms.as_slice(), [t] if t.exponent.is_one() && t.coefficient.is_one())
    }
}

fn prepend_term(exponent: Ordinal, coefficient: BigUint, rest: Ordinal) -> Option<Ordinal> {
    if rest.leading_exponent().is_some_and(|e| *e >= exponent) {
        return None;
    }
    let mut terms = Vec::with_capacity(rest.terms.len() + 1);
    terms.push(Term {
        exponent,
        coefficient,
    });
    terms.extend(rest.terms);
    Some(Ordinal { terms })
}

/// Cantor pairing `π(x, y) = (x+y)(x+y+1)/2 + y`.
pub fn pair(x: &BigUint, y: &BigUint) -> BigUint {
    let s = x + y;
    (&s * (&s + 1u32)) / 2u32 + y
}

pub fn unpair(z: &BigUint) -> (BigUint, BigUint) {
    let w = ((z * 8u32 + 1u32).sqrt() - 1u32) / 2u32;
    let t = (&w * (&w + 1u32)) / 2u32;
    let y = z - t;
    let x = w - &y;
    (x, y)
}

pub fn unpair_u64(z: u64) -> (u64, u64) {
    let w = (((z as u128) * 8 + 1).isqrt() - 1) / 2;
    let t = w * (w + 1) / 2;
    let y = z as u128 - t;
    ((w - y) as u64, y as u64)
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let o = a
                .exponent
                .cmp(&b.exponent)
                .then_with(|| a.coefficient.cmp(&b.coefficient));
            if o != Ordering::Equal {
                return o;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.render(f, "w")
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::from_natural(n)
    }
}

impl From<BigUint> for Ordinal {
    fn from(n: BigUint) -> Self {
        Ordinal::from_natural(n)
    }
}

impl ops::Add<&Ordinal> for &Ordinal {
    type Output = Ordinal;
    fn add(self, rhs: &Ordinal) -> Ordinal {
        Ordinal::add(self, rhs)
    }
}

impl ops::Mul<&Ordinal> for &Ordinal {
    type Output = Ordinal;
    fn mul(self, rhs: &Ordinal) -> Ordinal {
        Ordinal::mul(self, rhs)
    }
}
