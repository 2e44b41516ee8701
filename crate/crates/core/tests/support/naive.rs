//! A deliberately naive model of ordinals below ω^ω, used as an oracle.
//!
//! `Poly(c)` is `ω^(n-1)·c[n-1] + … + ω·c[1] + c[0]`. Addition merges terms
//! by hand; multiplication adds `a·ω^e` to itself once per unit of each
//! coefficient of the right factor, with `a·ω^e = ω^(deg a + e)` for `e ≥ 1`.

use num_bigint::BigUint;
use ordpart::Ordinal;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(pub Vec<u64>);

impl Poly {
    pub fn degree(&self) -> Option<usize> {
        self.0.iter().rposition(|&c| c != 0)
    }

    fn coeff(&self, e: usize) -> u64 {
        self.0.get(e).copied().unwrap_or(0)
    }

    fn monomial(e: usize) -> Poly {
        let mut c = vec![0; e + 1];
        c[e] = 1;
        Poly(c)
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let Some(d) = rhs.degree() else {
            return self.clone();
        };
        let len = self.0.len().max(rhs.0.len());
        let mut out = vec![0; len];
        for (e, slot) in out.iter_mut().enumerate() {
            *slot = match e.cmp(&d) {
                std::cmp::Ordering::Greater => self.coeff(e),
                std::cmp::Ordering::Equal => self.coeff(e) + rhs.coeff(e),
                std::cmp::Ordering::Less => rhs.coeff(e),
            };
        }
        Poly(out)
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        let (Some(da), Some(db)) = (self.degree(), rhs.degree()) else {
            return Poly(vec![]);
        };
        let mut acc = Poly(vec![]);
        for e in (0..=db).rev() {
            let piece = if e == 0 {
                self.clone()
            } else {
                Poly::monomial(da + e)
            };
            for _ in 0..rhs.coeff(e) {
                acc = acc.add(&piece);
            }
        }
        acc
    }

    pub fn to_ordinal(&self) -> Ordinal {
        let terms = (0..self.0.len())
            .rev()
            .filter(|&e| self.0[e] != 0)
            .map(|e| (Ordinal::from(e as u64), BigUint::from(self.0[e])));
        Ordinal::from_terms(terms).expect("descending exponents")
    }

    /// Every ordinal `ω^2·a + ω·b + c` with `a, b, c ≤ 3`.
    pub fn grid() -> Vec<Poly> {
        let mut out = Vec::new();
        for a in 0..=3 {
            for b in 0..=3 {
                for c in 0..=3 {
                    out.push(Poly(vec![c, b, a]));
                }
            }
        }
        out
    }
}
