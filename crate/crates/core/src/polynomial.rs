//! Sparse multivariate polynomials over `Z/nZ`.
//!
//! A [`Polynomial`] keeps its terms strictly descending under its
//! [`MonomialOrder`], with no zero coefficients. The zero polynomial has no
//! terms.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::residue::{ResidueElement, ResidueRing};

type Exponents = SmallVec<[u32; 8]>;

/// Global monomial orders. Variable `0` is the largest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    DegRevLex,
}

impl MonomialOrder {
    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::DegRevLex => "degrevlex",
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::ArityMismatch {
                left: a.nvars(),
                right: b.nvars(),
            });
        }
        Ok(self.cmp(a, b))
    }

    /// Unchecked comparison; monomials must have equal length.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::Lex => a.exponents.as_slice().cmp(b.exponents.as_slice()),
            MonomialOrder::DegRevLex => a.degree.cmp(&b.degree).then_with(|| {
                for (x, y) in a.exponents.iter().zip(&b.exponents).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "degrevlex" | "drl" => Ok(MonomialOrder::DegRevLex),
            other => Err(Error::domain(format!("unknown monomial order '{other}'"))),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn new(exponents: &[u32]) -> Self {
        Monomial {
            degree: exponents.iter().sum(),
            exponents: Exponents::from_slice(exponents),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exponents: smallvec::smallvec![0; nvars],
            degree: 0,
        }
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exponents[index] = 1;
        m.degree = 1;
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exponents: Exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exponents,
            degree: self.degree + other.degree,
        }
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exponents: Exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a - b)
            .collect();
        Some(Monomial {
            exponents,
            degree: self.degree - other.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exponents: Exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial {
            degree: exponents.iter().sum(),
            exponents,
        }
    }

    pub(crate) fn fmt_with(&self, f: &mut fmt::Formatter<'_>, vars: &[String]) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&vars[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: u64,
    pub monomial: Monomial,
}

impl Term {
    pub fn new(coeff: u64, monomial: Monomial) -> Self {
        Term { coeff, monomial }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: ResidueRing,
    order: MonomialOrder,
    nvars: usize,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: ResidueRing, order: MonomialOrder, nvars: usize) -> Self {
        Polynomial {
            ring,
            order,
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: ResidueRing, order: MonomialOrder, nvars: usize, c: u64) -> Self {
        let c = c % ring.modulus();
        let mut p = Polynomial::zero(ring, order, nvars);
        if c != 0 {
            p.terms.push(Term::new(c, Monomial::one(nvars)));
        }
        p
    }

    /// Builds a canonical polynomial from arbitrary (signed, unsorted,
    /// possibly repeated) terms.
    pub fn from_terms<I>(ring: ResidueRing, order: MonomialOrder, nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i128, Monomial)>,
    {
        let mut raw: Vec<Term> = Vec::new();
        for (c, m) in terms {
            if m.nvars() != nvars {
                return Err(Error::ArityMismatch {
                    left: nvars,
                    right: m.nvars(),
                });
            }
            raw.push(Term::new(ring.reduce(c), m));
        }
        raw.sort_by(|a, b| order.cmp(&b.monomial, &a.monomial));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.monomial == t.monomial => {
                    last.coeff = ring.add(last.coeff, t.coeff);
                }
                _ => terms.push(t),
            }
        }
        terms.retain(|t| t.coeff != 0);
        Ok(Polynomial {
            ring,
            order,
            nvars,
            terms,
        })
    }

    /// Trusted constructor: `terms` must already be canonical.
    pub(crate) fn from_sorted(ring: ResidueRing, order: MonomialOrder, nvars: usize, terms: Vec<Term>) -> Self {
        debug_assert!(terms.iter().all(|t| t.coeff != 0 && t.coeff < ring.modulus()));
        debug_assert!(terms
            .windows(2)
            .all(|w| order.cmp(&w[0].monomial, &w[1].monomial) == Ordering::Greater));
        Polynomial {
            ring,
            order,
            nvars,
            terms,
        }
    }

    #[inline]
    pub fn ring(&self) -> ResidueRing {
        self.ring
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.ring.modulus()
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].monomial.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms
            .iter()
            .map(|t| t.monomial.degree() as i64)
            .max()
            .unwrap_or(-1)
    }

    pub fn lead_term(&self) -> Result<&Term> {
        self.terms
            .first()
            .ok_or_else(|| Error::domain("lead term of the zero polynomial"))
    }

    /// Lead monomial; panics on zero. Use [`Polynomial::lead_term`] for the checked form.
    #[inline]
    pub fn lm(&self) -> &Monomial {
        &self.terms[0].monomial
    }

    /// Lead coefficient; panics on zero.
    #[inline]
    pub fn lc(&self) -> u64 {
        self.terms[0].coeff
    }

    pub fn lead_coefficient(&self) -> Option<ResidueElement> {
        self.terms.first().map(|t| self.ring.element(t.coeff))
    }

    /// `f - lt(f)`.
    pub fn tail(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().skip(1).cloned().collect(),
            ..self.clone_empty()
        }
    }

    fn clone_empty(&self) -> Polynomial {
        Polynomial::zero(self.ring, self.order, self.nvars)
    }

    pub fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.modulus(),
                right: other.modulus(),
            });
        }
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self.combine(1, None, 1, None, other))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self.combine(1, None, self.ring.neg(1), None, other))
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.ring.neg(1))
    }

    /// Multiplication by a constant.
    pub fn scale(&self, c: u64) -> Polynomial {
        let r = self.ring;
        let c = c % r.modulus();
        let terms = self
            .terms
            .iter()
            .filter_map(|t| {
                let k = r.mul(c, t.coeff);
                (k != 0).then(|| Term::new(k, t.monomial.clone()))
            })
            .collect();
        Polynomial::from_sorted(r, self.order, self.nvars, terms)
    }

    /// Multiplication by the term `coeff * monomial`.
    pub fn mul_term(&self, term: &Term) -> Result<Polynomial> {
        if term.monomial.nvars() != self.nvars {
            return Err(Error::ArityMismatch {
                left: self.nvars,
                right: term.monomial.nvars(),
            });
        }
        Ok(self.mul_term_unchecked(term.coeff, &term.monomial))
    }

    pub(crate) fn mul_term_unchecked(&self, coeff: u64, monomial: &Monomial) -> Polynomial {
        let r = self.ring;
        let c = coeff % r.modulus();
        // Monomial multiplication preserves the order, so the result stays sorted.
        let terms = self
            .terms
            .iter()
            .filter_map(|t| {
                let k = r.mul(c, t.coeff);
                (k != 0).then(|| Term::new(k, t.monomial.mul(monomial)))
            })
            .collect();
        Polynomial::from_sorted(r, self.order, self.nvars, terms)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut acc = self.clone_empty();
        for t in &other.terms {
            let part = self.mul_term_unchecked(t.coeff, &t.monomial);
            acc = acc.combine(1, None, 1, None, &part);
        }
        Ok(acc)
    }

    /// `a * ma * self + b * mb * other` in one merge pass. Missing monomial
    /// factors mean `1`.
    pub(crate) fn combine(
        &self,
        a: u64,
        ma: Option<&Monomial>,
        b: u64,
        mb: Option<&Monomial>,
        other: &Polynomial,
    ) -> Polynomial {
        let r = self.ring;
        let order = self.order;
        let shift = |m: &Monomial, by: Option<&Monomial>| match by {
            Some(s) => m.mul(s),
            None => m.clone(),
        };
        let mut out: Vec<Term> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut left = self
            .terms
            .iter()
            .filter_map(|t| {
                let c = r.mul(a, t.coeff);
                (c != 0).then(|| Term::new(c, shift(&t.monomial, ma)))
            })
            .peekable();
        let mut right = other
            .terms
            .iter()
            .filter_map(|t| {
                let c = r.mul(b, t.coeff);
                (c != 0).then(|| Term::new(c, shift(&t.monomial, mb)))
            })
            .peekable();
        loop {
            let ord = match (left.peek(), right.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => order.cmp(&x.monomial, &y.monomial),
            };
            match ord {
                Ordering::Greater => out.push(left.next().unwrap()),
                Ordering::Less => out.push(right.next().unwrap()),
                Ordering::Equal => {
                    let mut x = left.next().unwrap();
                    let y = right.next().unwrap();
                    x.coeff = r.add(x.coeff, y.coeff);
                    if x.coeff != 0 {
                        out.push(x);
                    }
                }
            }
        }
        Polynomial::from_sorted(r, order, self.nvars, out)
    }

    /// `self - c * m * g`, the step used by every reduction.
    pub(crate) fn sub_multiple(&self, c: u64, m: &Monomial, g: &Polynomial) -> Polynomial {
        self.combine(1, None, self.ring.neg(c), Some(m), g)
    }

    /// Coefficientwise reduction modulo a divisor `d` of the current modulus.
    pub fn project(&self, d: u64) -> Result<Polynomial> {
        if d < 2 || !self.modulus().is_multiple_of(d) {
            return Err(Error::domain(format!(
                "{d} does not divide the modulus {}",
                self.modulus()
            )));
        }
        let ring = ResidueRing::new(d)?;
        let terms = self
            .terms
            .iter()
            .filter_map(|t| {
                let c = t.coeff % d;
                (c != 0).then(|| Term::new(c, t.monomial.clone()))
            })
            .collect();
        Ok(Polynomial::from_sorted(ring, self.order, self.nvars, terms))
    }

    /// Lifts into `Z/nZ` for a multiple `n` of the current modulus, using
    /// canonical representatives.
    pub fn lift(&self, n: u64) -> Result<Polynomial> {
        if !n.is_multiple_of(self.modulus()) {
            return Err(Error::domain(format!(
                "{n} is not a multiple of the modulus {}",
                self.modulus()
            )));
        }
        let ring = ResidueRing::new(n)?;
        Ok(Polynomial::from_sorted(
            ring,
            self.order,
            self.nvars,
            self.terms.clone(),
        ))
    }

    /// Same terms re-sorted under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.monomial, &a.monomial));
        Polynomial::from_sorted(self.ring, order, self.nvars, terms)
    }

    pub fn display<'a>(&'a self, vars: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, vars }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    vars: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, t) in self.poly.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if t.monomial.is_one() {
                write!(f, "{}", t.coeff)?;
            } else {
                if t.coeff != 1 {
                    write!(f, "{}*", t.coeff)?;
                }
                t.monomial.fmt_with(f, self.vars)?;
            }
        }
        Ok(())
    }
}

/// Default variable names `x1, ..., xn` (or `x, y, z` for up to three).
pub fn default_var_names(nvars: usize) -> Vec<String> {
    if nvars <= 3 {
        ["x", "y", "z"][..nvars].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=nvars).map(|i| format!("x{i}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn poly(s: &str, n: u64, v: &[&str]) -> Polynomial {
        parse_polynomial(s, ResidueRing::new(n).unwrap(), MonomialOrder::DegRevLex, &vars(v)).unwrap()
    }

    #[test]
    fn compare_examples() {
        let x2y = Monomial::new(&[2, 1]);
        let xy2 = Monomial::new(&[1, 2]);
        assert_eq!(MonomialOrder::DegRevLex.compare(&x2y, &xy2).unwrap(), Ordering::Greater);
        let y5 = Monomial::new(&[0, 5]);
        let x = Monomial::new(&[1, 0]);
        assert_eq!(MonomialOrder::Lex.compare(&y5, &x).unwrap(), Ordering::Less);
        assert_eq!(MonomialOrder::DegRevLex.compare(&y5, &x).unwrap(), Ordering::Greater);
        for o in [MonomialOrder::Lex, MonomialOrder::DegRevLex] {
            assert_eq!(o.compare(&x2y, &x2y).unwrap(), Ordering::Equal);
        }
        assert!(MonomialOrder::Lex
            .compare(&Monomial::new(&[1]), &Monomial::new(&[1, 0]))
            .is_err());
    }

    #[test]
    fn degrevlex_breaks_ties_on_last_variable() {
        // x*z < y^2 in degrevlex with x > y > z.
        let xz = Monomial::new(&[1, 0, 1]);
        let y2 = Monomial::new(&[0, 2, 0]);
        assert_eq!(MonomialOrder::DegRevLex.cmp(&xz, &y2), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.cmp(&xz, &y2), Ordering::Greater);
    }

    #[test]
    fn lead_term_examples() {
        let f = poly("2*x + 1", 6, &["x"]);
        let lt = f.lead_term().unwrap();
        assert_eq!((lt.coeff, lt.monomial.exponents()), (2, &[1u32][..]));

        let f = poly("x^2*y + x*y^2", 7, &["x", "y"]);
        assert_eq!(f.lead_term().unwrap().monomial.exponents(), &[2, 1]);

        let f = poly("3", 7, &["x"]);
        let lt = f.lead_term().unwrap();
        assert_eq!((lt.coeff, lt.monomial.is_one()), (3, true));

        assert!(poly("0", 7, &["x"]).lead_term().is_err());
    }

    #[test]
    fn arithmetic_examples() {
        let a = poly("3*x", 6, &["x", "y"]);
        assert!(a.add(&a).unwrap().is_zero());

        let f = poly("2*x + 1", 6, &["x", "y"]);
        let t = Term::new(3, Monomial::new(&[0, 1]));
        assert_eq!(f.mul_term(&t).unwrap(), poly("3*y", 6, &["x", "y"]));

        let p = poly("2*x", 30, &["x"]).scale(3);
        let q = poly("3*x", 30, &["x"]).scale(2);
        assert!(p.sub(&q).unwrap().is_zero());
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let f = poly("x", 6, &["x"]);
        let g = poly("x", 5, &["x"]);
        assert!(matches!(f.add(&g), Err(Error::RingMismatch { .. })));
        let h = poly("x", 6, &["x", "y"]);
        assert!(matches!(f.sub(&h), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn project_examples() {
        let f = poly("x - 5", 6, &["x"]);
        let p = f.project(2).unwrap();
        assert_eq!(p.modulus(), 2);
        assert_eq!(p, poly("x + 1", 2, &["x"]));

        let f = poly("3*x + 2", 6, &["x"]);
        assert_eq!(f.project(3).unwrap(), poly("2", 3, &["x"]));

        assert!(poly("0", 6, &["x"]).project(3).unwrap().is_zero());
        assert!(f.project(4).is_err());
    }

    #[test]
    fn lift_keeps_representatives() {
        let f = poly("x + 2", 3, &["x"]);
        assert_eq!(f.lift(6).unwrap(), poly("x + 2", 6, &["x"]));
        assert!(f.lift(8).is_err());
    }

    #[test]
    fn degree_of_zero_is_minus_one() {
        assert_eq!(poly("0", 6, &["x"]).degree(), -1);
        assert_eq!(poly("x^3 + 1", 6, &["x"]).degree(), 3);
    }

    #[test]
    fn display_uses_canonical_representatives() {
        let v = vars(&["x", "y"]);
        let f = poly("2*x^2*y - 3*y + 1", 30, &["x", "y"]);
        assert_eq!(f.display(&v).to_string(), "2*x^2*y + 27*y + 1");
        assert_eq!(poly("0", 30, &["x", "y"]).display(&v).to_string(), "0");
    }
}
