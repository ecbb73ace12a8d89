//! Spectra of principal submatrices of the correction matrix `R(T_n^(b))`.
//!
//! The vertex set splits into base vertices `B` (the two hubs of each
//! block), non-base vertices `N` and the cut vertex `c`. Each restriction of
//! `R` has a spectrum in closed form; [`verify_claim`] checks one against the
//! exact characteristic polynomial.

use std::collections::BTreeMap;
use std::fmt;

use crate::closed_form::{tnb_structured, StructuredKind};
use crate::error::{Error, Result};
use crate::graph::VertexPartition;
use crate::linalg::char_poly_exact;
use crate::matrix::RationalMatrix;
use crate::poly::CharPoly;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Part {
    /// Base vertices.
    B,
    /// Non-base vertices.
    N,
    /// Non-base vertices plus the cut vertex.
    NC,
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Part::B => "B",
            Part::N => "N",
            Part::NC => "NC",
        })
    }
}

impl std::str::FromStr for Part {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" | "b" => Ok(Part::B),
            "N" | "n" => Ok(Part::N),
            "NC" | "nc" | "N+c" => Ok(Part::NC),
            _ => Err(Error::InvalidParameter(format!(
                "unknown part {s:?}, expected B, N or NC"
            ))),
        }
    }
}

/// Eigenvalues with multiplicities, plus optionally a monic quadratic whose
/// two roots (possibly irrational) complete the spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumClaim {
    pairs: Vec<(Rational, usize)>,
    quadratic: Option<CharPoly>,
}

impl SpectrumClaim {
    /// Merges repeated eigenvalues and drops zero multiplicities. Pairs are
    /// kept sorted by eigenvalue.
    pub fn new(pairs: Vec<(Rational, usize)>) -> Self {
        let mut merged: BTreeMap<Rational, usize> = BTreeMap::new();
        for (value, mult) in pairs {
            if mult > 0 {
                *merged.entry(value).or_default() += mult;
            }
        }
        Self {
            pairs: merged.into_iter().collect(),
            quadratic: None,
        }
    }

    pub fn with_quadratic(mut self, quadratic: CharPoly) -> Self {
        debug_assert!(quadratic.is_monic() && quadratic.degree() == Some(2));
        self.quadratic = Some(quadratic);
        self
    }

    pub fn pairs(&self) -> &[(Rational, usize)] {
        &self.pairs
    }

    pub fn quadratic(&self) -> Option<&CharPoly> {
        self.quadratic.as_ref()
    }

    /// Number of eigenvalues counted with multiplicity.
    pub fn order(&self) -> usize {
        self.pairs.iter().map(|(_, m)| m).sum::<usize>() + if self.quadratic.is_some() { 2 } else { 0 }
    }

    /// Product of the linear factors only.
    pub fn linear_part(&self) -> CharPoly {
        CharPoly::from_roots(self.pairs.iter().map(|(v, m)| (v, *m)))
    }

    /// `∏ (x − λ)^m`, times the quadratic if present.
    pub fn polynomial(&self) -> CharPoly {
        let linear = self.linear_part();
        match &self.quadratic {
            Some(q) => linear.mul(q),
            None => linear,
        }
    }

    /// Sum of the eigenvalues.
    pub fn trace(&self) -> Rational {
        let mut t: Rational = self.pairs.iter().map(|(v, m)| v * &Rational::from(*m)).sum();
        if let Some(q) = &self.quadratic {
            t -= q.coeff(1);
        }
        t
    }
}

impl fmt::Display for SpectrumClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(v, m)| format!("{v}^({m})")).collect();
        write!(f, "{{{}}}", parts.join(", "))?;
        if let Some(q) = &self.quadratic {
            write!(f, " + roots of {q}")?;
        }
        Ok(())
    }
}

fn check_part(part: Part, n: usize, b: usize) -> Result<()> {
    if n < 3 || b < 2 {
        return Err(Error::InvalidParameter(format!(
            "spectral claims need n >= 3 and b >= 2, got ({n}, {b})"
        )));
    }
    if part != Part::B && n < 4 {
        return Err(Error::EmptyPart);
    }
    Ok(())
}

/// Closed-form spectrum of `R(T_n^(b))` restricted to `part`.
pub fn claimed_spectrum(part: Part, n: usize, b: usize) -> Result<SpectrumClaim> {
    check_part(part, n, b)?;
    let (ni, bi) = (n as i64, b as i64);
    let r = |v: i64| Rational::from_integer(v);
    Ok(match part {
        Part::B => SpectrumClaim::new(vec![
            (r(-(ni - 2) * (ni - 6) * bi), 1),
            (r((ni - 2) * (ni - 6) * bi), b),
            (r((ni - 2) * (ni - 4) * bi), b - 1),
        ]),
        Part::N => SpectrumClaim::new(vec![
            (r(-(ni - 4) * (ni - 6) * bi), 1),
            (r((2 * ni - 9) * bi), b - 1),
            (r((ni - 6) * bi), (n - 4) * b),
        ]),
        Part::NC => {
            let linear = (ni - 6) * ((ni - 5) * (bi - 1) * (bi - 1) + (ni - 4) * bi);
            let constant = bi * (ni - 6) * (ni - 6) * ((ni - 4) * (ni - 5) * (bi - 1) * (bi - 1) - (ni - 3) * bi * bi);
            SpectrumClaim::new(vec![(r((2 * ni - 9) * bi), b - 1), (r((ni - 6) * bi), (n - 4) * b)])
                .with_quadratic(CharPoly::monic_quadratic(r(linear), r(constant)))
        }
    })
}

/// 1-based vertex labels of `part` in `T_n^(b)`.
pub fn part_indices(part: Part, n: usize, b: usize) -> Result<Vec<usize>> {
    check_part(part, n, b)?;
    let p = VertexPartition::of_book(n, b)?;
    Ok(match part {
        Part::B => p.base,
        Part::N => p.nonbase,
        Part::NC => {
            let mut v = p.nonbase;
            v.push(p.cut);
            v
        }
    })
}

/// `R(T_n^(b))[part]`, built from the structured form of `R`.
pub fn principal_submatrix(part: Part, n: usize, b: usize) -> Result<RationalMatrix> {
    let idx: Vec<usize> = part_indices(part, n, b)?.into_iter().map(|v| v - 1).collect();
    let r = tnb_structured(StructuredKind::Rmat, n, b)?.materialize();
    Ok(r.principal_submatrix(&idx))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimCheck {
    pub matches: bool,
    pub computed: CharPoly,
    pub claimed: CharPoly,
}

/// Compares the exact characteristic polynomial of `m` with the claim.
///
/// With a quadratic factor the check is done by exact division: the
/// characteristic polynomial divided by the quadratic must leave no
/// remainder and a quotient equal to the product of the linear factors.
pub fn verify_claim(m: &RationalMatrix, claim: &SpectrumClaim) -> Result<ClaimCheck> {
    let order = m.require_square()?;
    if claim.order() != order {
        return Err(Error::ClaimOrderMismatch {
            claimed: claim.order(),
            order,
        });
    }
    let computed = char_poly_exact(m)?;
    let claimed = claim.polynomial();
    let matches = match claim.quadratic() {
        Some(q) => match computed.div_rem(q) {
            Some((quot, rem)) => rem.is_zero() && quot == claim.linear_part(),
            None => false,
        },
        None => computed == claimed,
    };
    Ok(ClaimCheck {
        matches,
        computed,
        claimed,
    })
}
