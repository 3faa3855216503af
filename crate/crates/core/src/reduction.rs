//! Reduction of polynomials over `Z/nZ`, where a reducer's lead coefficient
//! must divide the coefficient it eliminates.

use crate::polynomial::{Polynomial, Term};

/// Quotient term `t` with `lt(f) = t * lt(g)`, if `g` top-reduces `f`.
///
/// The coefficient is the smallest non-negative solution of
/// `c * lc(g) ≡ lc(f) (mod n)`.
pub fn top_reduces(g: &Polynomial, f: &Polynomial) -> Option<Term> {
    if g.is_zero() || f.is_zero() {
        return None;
    }
    reduces_term(g, f.lc(), f.lm())
}

fn reduces_term(g: &Polynomial, coeff: u64, monomial: &crate::polynomial::Monomial) -> Option<Term> {
    let m = monomial.div(g.lm())?;
    let c = g.ring().solve_linear(g.lc(), coeff)?;
    Some(Term::new(c, m))
}

/// Picks the reducer with the smallest lead monomial, then the smallest lead
/// coefficient, then the lowest index.
fn choose_reducer<'a, F>(basis: &'a [Polynomial], mut applies: F) -> Option<(usize, Term)>
where
    F: FnMut(&'a Polynomial) -> Option<Term>,
{
    let mut best: Option<(usize, Term)> = None;
    for (i, g) in basis.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let better = match &best {
            None => true,
            Some((j, _)) => {
                let b = &basis[*j];
                match g.order().cmp(g.lm(), b.lm()) {
                    std::cmp::Ordering::Less => true,
                    std::cmp::Ordering::Equal => g.lc() < b.lc(),
                    std::cmp::Ordering::Greater => false,
                }
            }
        };
        if better {
            if let Some(t) = applies(g) {
                best = Some((i, t));
            }
        }
    }
    best
}

/// A normal form together with the quotient terms used to reach it:
/// `f - remainder = Σ term * basis[index]`.
#[derive(Clone, Debug)]
pub struct Division {
    pub remainder: Polynomial,
    pub quotients: Vec<(usize, Term)>,
}

/// Normal form by iterated top-reduction.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    normal_form_with_record(f, basis).remainder
}

pub fn normal_form_with_record(f: &Polynomial, basis: &[Polynomial]) -> Division {
    let mut h = f.clone();
    let mut quotients = Vec::new();
    while !h.is_zero() {
        let Some((i, t)) = choose_reducer(basis, |g| top_reduces(g, &h)) else {
            break;
        };
        h = h.sub_multiple(t.coeff, &t.monomial, &basis[i]);
        quotients.push((i, t));
    }
    Division {
        remainder: h,
        quotients,
    }
}

/// Full reduction: every term, not only the lead, is reduced while some
/// basis element's lead term divides it.
pub fn full_reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut h = f.clone();
    let mut rest: Vec<Term> = Vec::new();
    while !h.is_zero() {
        let lead = h.lead_term().expect("nonzero").clone();
        match choose_reducer(basis, |g| reduces_term(g, lead.coeff, &lead.monomial)) {
            Some((i, t)) => h = h.sub_multiple(t.coeff, &t.monomial, &basis[i]),
            None => {
                rest.push(lead);
                h = h.tail();
            }
        }
    }
    Polynomial::from_sorted(f.ring(), f.order(), f.nvars(), rest)
}

pub fn reduces_to_zero(f: &Polynomial, basis: &[Polynomial]) -> bool {
    full_reduce(f, basis).is_zero()
}

/// Reduces every term `c * m` of `f` below its lead (or including it when
/// `keep_lead` is false) to `c mod d`, where `d` is the smallest
/// `gcd(lc g, n)` over basis elements whose lead monomial divides `m`.
///
/// Against a strong Gröbner basis this gives the unique canonical remainder.
pub fn remainder_reduce(f: &Polynomial, basis: &[Polynomial], keep_lead: bool) -> Polynomial {
    let ring = f.ring();
    let n = ring.modulus();
    let mut h = f.clone();
    let mut rest: Vec<Term> = Vec::new();
    if keep_lead {
        if let Ok(lead) = h.lead_term() {
            rest.push(lead.clone());
            h = h.tail();
        }
    }
    while !h.is_zero() {
        let lead = h.lead_term().expect("nonzero").clone();
        let mut best: Option<(u64, usize)> = None;
        for (i, g) in basis.iter().enumerate() {
            if g.is_zero() || !g.lm().divides(&lead.monomial) {
                continue;
            }
            let d = crate::residue::gcd(g.lc(), n);
            if best.is_none_or(|(bd, _)| d < bd) {
                best = Some((d, i));
            }
        }
        if let Some((d, i)) = best {
            let r = lead.coeff % d;
            if r != lead.coeff {
                let g = &basis[i];
                let q = ring
                    .solve_linear(g.lc(), lead.coeff - r)
                    .expect("gcd(lc g, n) divides c - (c mod d)");
                let m = lead.monomial.div(g.lm()).expect("divisible");
                h = h.sub_multiple(q, &m, g);
                continue;
            }
        }
        rest.push(lead);
        h = h.tail();
    }
    Polynomial::from_sorted(ring, f.order(), f.nvars(), rest)
}
