//! Degree-truncated certification of strong Gröbner bases.
//!
//! The ideal's elements of degree at most `D` form a submodule of
//! `(Z/nZ)^N`, `N` being the number of monomials of degree at most `D`. We
//! stack all multiples `m * g` of degree at most `D`, bring the matrix to
//! Howell form, and read off membership and lead-term ideals from it. This
//! is independent of the Buchberger machinery: it only uses arithmetic in
//! `Z/nZ`.
//!
//! For lex the slice can miss ideal elements whose lead monomial is small
//! but whose representation needs higher degree, so a pass under lex is
//! weaker than under degrevlex. Failures are always genuine.

use std::collections::HashMap;
use std::fmt;

use crate::polynomial::{Monomial, MonomialOrder, Polynomial, Term};
use crate::reduction::reduces_to_zero;
use crate::residue::{gcd, unit_stabilizer, xgcd, ResidueRing};

/// All monomials in `nvars` variables of total degree at most `degree`,
/// largest first.
pub fn monomials_up_to(nvars: usize, degree: u32, order: MonomialOrder) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == exps.len() {
            out.push(Monomial::new(exps));
            return;
        }
        for e in 0..=left {
            exps[i] = e;
            rec(i + 1, left - e, exps, out);
        }
        exps[i] = 0;
    }
    rec(0, degree, &mut exps, &mut out);
    out.sort_by(|a, b| order.cmp(b, a));
    out
}

/// Howell form of the matrix with the given rows over `Z/nZ`.
///
/// Zero rows are dropped; every remaining row has a pivot that divides `n`,
/// entries above each pivot are reduced below it, and the rows whose first
/// `k` entries vanish span every vector of the row space with that property.
pub fn howell_form(mut rows: Vec<Vec<u64>>, ncols: usize, ring: ResidueRing) -> Vec<Vec<u64>> {
    let n = ring.modulus();
    let mut done = 0usize;
    for c in 0..ncols {
        // Fold every remaining row's entry in column c into row `done`.
        let mut pivot_row: Option<usize> = None;
        for i in done..rows.len() {
            if rows[i][c] == 0 {
                continue;
            }
            match pivot_row {
                None => {
                    rows.swap(done, i);
                    pivot_row = Some(done);
                }
                Some(r) => {
                    let (a, b) = (rows[r][c], rows[i][c]);
                    let (g, s, t) = xgcd(a as i128, b as i128).expect("small operands");
                    let (s, t) = (ring.reduce(s), ring.reduce(t));
                    let u = ring.neg((b as i128 / g) as u64);
                    let v = (a as i128 / g) as u64;
                    let (head, tail) = rows.split_at_mut(i);
                    for (x, y) in head[r][c..].iter_mut().zip(&mut tail[0][c..]) {
                        (*x, *y) = (
                            ring.add(ring.mul(s, *x), ring.mul(t, *y)),
                            ring.add(ring.mul(u, *x), ring.mul(v, *y)),
                        );
                    }
                }
            }
        }
        let Some(r) = pivot_row else { continue };

        let unit = unit_stabilizer(rows[r][c] as i128, n);
        for x in rows[r][c..].iter_mut() {
            *x = ring.mul(*x, unit);
        }
        let p = rows[r][c];
        debug_assert_eq!(p, gcd(p, n));

        for k in 0..r {
            let q = rows[k][c] / p;
            if q != 0 {
                let (above, below) = rows.split_at_mut(r);
                for (x, y) in above[k][c..].iter_mut().zip(&below[0][c..]) {
                    *x = ring.sub(*x, ring.mul(q, *y));
                }
            }
        }

        // The annihilator multiple of the pivot row vanishes in column c but
        // may be nonzero further right; it has to stay in the span.
        let ann = n / p;
        if ann != n {
            let extra: Vec<u64> = rows[r].iter().map(|&x| ring.mul(ann, x)).collect();
            if extra.iter().any(|&x| x != 0) {
                rows.push(extra);
            }
        }
        done += 1;
    }
    rows.truncate(done);
    rows
}

/// Degree-`D` part of an ideal, in Howell form.
#[derive(Clone, Debug)]
pub struct IdealSlice {
    ring: ResidueRing,
    order: MonomialOrder,
    nvars: usize,
    degree: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    rows: Vec<Vec<u64>>,
    /// Pivot column of each row.
    pivots: Vec<usize>,
}

impl IdealSlice {
    pub fn build(
        gens: &[Polynomial],
        ring: ResidueRing,
        order: MonomialOrder,
        nvars: usize,
        degree: u32,
    ) -> IdealSlice {
        let monomials = monomials_up_to(nvars, degree, order);
        let index: HashMap<Monomial, usize> = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let ncols = monomials.len();
        let mut rows = Vec::new();
        for g in gens.iter().filter(|g| !g.is_zero()) {
            let dg = g.degree() as u32;
            if dg > degree {
                continue;
            }
            for m in monomials.iter().filter(|m| m.degree() + dg <= degree) {
                let mut row = vec![0u64; ncols];
                for t in g.terms() {
                    row[index[&t.monomial.mul(m)]] = t.coeff;
                }
                rows.push(row);
            }
        }
        let rows = howell_form(rows, ncols, ring);
        let pivots = rows
            .iter()
            .map(|r| r.iter().position(|&x| x != 0).expect("Howell rows are nonzero"))
            .collect();
        IdealSlice {
            ring,
            order,
            nvars,
            degree,
            monomials,
            index,
            rows,
            pivots,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The canonical rows as a matrix.
    pub fn matrix(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// The canonical rows as polynomials, in descending pivot order.
    pub fn rows(&self) -> Vec<Polynomial> {
        self.rows.iter().map(|r| self.row_polynomial(r)).collect()
    }

    fn row_polynomial(&self, row: &[u64]) -> Polynomial {
        let terms = row
            .iter()
            .zip(&self.monomials)
            .filter(|(&c, _)| c != 0)
            .map(|(&c, m)| Term::new(c, m.clone()))
            .collect();
        Polynomial::from_sorted(self.ring, self.order, self.nvars, terms)
    }

    fn vector(&self, f: &Polynomial) -> Option<Vec<u64>> {
        let mut v = vec![0u64; self.monomials.len()];
        for t in f.terms() {
            v[*self.index.get(&t.monomial)?] = t.coeff;
        }
        Some(v)
    }

    /// Whether `f` lies in the span of the slice. Polynomials of degree
    /// above the bound are never members.
    pub fn contains(&self, f: &Polynomial) -> bool {
        if f.ring() != self.ring || f.nvars() != self.nvars {
            return false;
        }
        let Some(mut v) = self.vector(&f.with_order(self.order)) else {
            return false;
        };
        let mut next = 0usize;
        for c in 0..v.len() {
            if v[c] == 0 {
                continue;
            }
            while next < self.pivots.len() && self.pivots[next] < c {
                next += 1;
            }
            if next == self.pivots.len() || self.pivots[next] != c {
                return false;
            }
            let row = &self.rows[next];
            let p = row[c];
            if v[c] % p != 0 {
                return false;
            }
            let q = v[c] / p;
            for k in c..v.len() {
                v[k] = self.ring.sub(v[k], self.ring.mul(q, row[k]));
            }
        }
        true
    }
}

/// Why a candidate basis was rejected, with a witnessing polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    /// A basis element outside the ideal slice.
    NotInIdeal(Polynomial),
    /// A generator that does not reduce to zero against the basis.
    GeneratorNotReduced(Polynomial),
    /// An ideal element whose lead term no basis lead term divides.
    LeadNotDivisible(Polynomial),
}

impl Failure {
    pub fn counterexample(&self) -> &Polynomial {
        match self {
            Failure::NotInIdeal(f) | Failure::GeneratorNotReduced(f) | Failure::LeadNotDivisible(f) => f,
        }
    }

    pub fn reason(&self) -> &'static str {
        match self {
            Failure::NotInIdeal(_) => "basis element is not in the ideal",
            Failure::GeneratorNotReduced(_) => "generator does not reduce to zero",
            Failure::LeadNotDivisible(_) => "ideal element whose lead term is not divisible by any basis lead term",
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = crate::polynomial::default_var_names(self.counterexample().nvars());
        write!(f, "{}: {}", self.reason(), self.counterexample().display(&vars))
    }
}

/// Default degree bound: two above the largest degree among both sets.
pub fn default_degree(basis: &[Polynomial], gens: &[Polynomial]) -> u32 {
    let top = basis
        .iter()
        .chain(gens)
        .map(Polynomial::degree)
        .max()
        .unwrap_or(0)
        .max(0);
    top as u32 + 2
}

/// How far above the requested bound the containment check may go.
pub const CONTAINMENT_SLACK: u32 = 16;

/// Largest slice (in columns) the containment check will build.
pub const CONTAINMENT_MAX_COLUMNS: usize = 6000;

/// Checks that `basis` is a strong Gröbner basis of the ideal generated by
/// `gens`, with lead terms examined up to degree `degree` (raised to the
/// largest input degree when smaller).
///
/// A basis element may need cofactors of degree above `degree` to be
/// expressed in the generators, so containment is checked at increasing
/// degrees until it holds, up to [`CONTAINMENT_SLACK`] more or
/// [`CONTAINMENT_MAX_COLUMNS`] monomials.
pub fn is_strong_gb(basis: &[Polynomial], gens: &[Polynomial], degree: u32) -> Result<(), Failure> {
    let Some(first) = basis.iter().chain(gens).find(|p| !p.is_zero()) else {
        return Ok(());
    };
    let (ring, order, nvars) = (first.ring(), first.order(), first.nvars());
    let top = basis
        .iter()
        .chain(gens)
        .map(Polynomial::degree)
        .max()
        .unwrap_or(0)
        .max(0) as u32;
    let degree = degree.max(top);
    let slice = IdealSlice::build(gens, ring, order, nvars, degree);

    let mut missing: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero() && !slice.contains(g)).collect();
    let mut d = degree;
    while !missing.is_empty() && d < degree + CONTAINMENT_SLACK {
        d += 1;
        if column_count(nvars, d) > CONTAINMENT_MAX_COLUMNS {
            break;
        }
        let wider = IdealSlice::build(gens, ring, order, nvars, d);
        missing.retain(|g| !wider.contains(g));
    }
    if let Some(g) = missing.first() {
        return Err(Failure::NotInIdeal((*g).clone()));
    }
    check_lead_terms(basis, gens, &slice)
}

/// Number of monomials of degree at most `degree` in `nvars` variables.
fn column_count(nvars: usize, degree: u32) -> usize {
    // C(nvars + degree, nvars), saturating.
    let mut c: u128 = 1;
    for i in 1..=nvars as u128 {
        c = c * (degree as u128 + i) / i;
        if c > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    c as usize
}

/// Generator reduction and lead-term coverage against a prebuilt slice of
/// the ideal (containment is not rechecked).
pub fn check_lead_terms(basis: &[Polynomial], gens: &[Polynomial], slice: &IdealSlice) -> Result<(), Failure> {
    let n = slice.ring.modulus();
    for f in gens {
        if !reduces_to_zero(f, basis) {
            return Err(Failure::GeneratorNotReduced(f.clone()));
        }
    }
    // Smallest failing lead first, so the counterexample is as simple as possible.
    for (row, &c) in slice.rows.iter().zip(&slice.pivots).rev() {
        let (m, p) = (&slice.monomials[c], row[c]);
        let covered = basis
            .iter()
            .any(|g| !g.is_zero() && g.lm().divides(m) && p % gcd(g.lc(), n) == 0);
        if !covered {
            return Err(Failure::LeadNotDivisible(slice.row_polynomial(row)));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn vars() -> Vec<String> {
        ["x", "y"].iter().map(|s| s.to_string()).collect()
    }

    fn p(s: &str, n: u64) -> Polynomial {
        parse_polynomial(s, ResidueRing::new(n).unwrap(), MonomialOrder::DegRevLex, &vars()).unwrap()
    }

    fn ps(items: &[&str], n: u64) -> Vec<Polynomial> {
        items.iter().map(|s| p(s, n)).collect()
    }

    fn slice(items: &[&str], n: u64, d: u32) -> IdealSlice {
        IdealSlice::build(
            &ps(items, n),
            ResidueRing::new(n).unwrap(),
            MonomialOrder::DegRevLex,
            2,
            d,
        )
    }

    #[test]
    fn monomial_enumeration() {
        let ms = monomials_up_to(2, 2, MonomialOrder::DegRevLex);
        assert_eq!(ms.len(), 6);
        assert_eq!(ms[0], Monomial::new(&[2, 0]));
        assert_eq!(ms[5], Monomial::one(2));
        let ms = monomials_up_to(2, 2, MonomialOrder::Lex);
        assert_eq!(ms[0], Monomial::new(&[2, 0]));
        assert_eq!(ms[1], Monomial::new(&[1, 1]));
        assert_eq!(ms[2], Monomial::new(&[1, 0]));
    }

    #[test]
    fn build_slice_examples() {
        let s = slice(&["2*x", "3*x"], 30, 1);
        assert!(s.contains(&p("x", 30)));
        assert_eq!(s.rows(), ps(&["x"], 30));

        let s = slice(&["x + 5"], 6, 1);
        assert_eq!(s.rows(), ps(&["x + 5"], 6));

        assert!(slice(&[], 6, 3).is_empty());
    }

    #[test]
    fn howell_adds_annihilator_rows() {
        // Over Z/4 the row (2, 1) forces (0, 2) into the span.
        let ring = ResidueRing::new(4).unwrap();
        let h = howell_form(vec![vec![2, 1]], 2, ring);
        assert_eq!(h, vec![vec![2, 1], vec![0, 2]]);
        let s = slice(&["2*x + 1"], 4, 1);
        assert!(s.contains(&p("2", 4)));
        assert!(!s.contains(&p("1", 4)));
    }

    #[test]
    fn howell_reduces_above_pivots() {
        let ring = ResidueRing::new(12).unwrap();
        let h = howell_form(vec![vec![1, 7], vec![0, 4]], 2, ring);
        assert_eq!(h, vec![vec![1, 3], vec![0, 4]]);
    }

    #[test]
    fn membership() {
        let s = slice(&["x*y + 1", "2*y"], 6, 3);
        assert!(s.contains(&p("x^2*y + x", 6)));
        assert!(s.contains(&p("2", 6)));
        assert!(!s.contains(&p("1", 6)));
        assert!(!s.contains(&p("x^4", 6)));
    }

    #[test]
    fn is_strong_gb_examples() {
        let gens = ps(&["2*x", "3*x"], 30);
        let err = is_strong_gb(&gens, &gens, 1).unwrap_err();
        assert_eq!(err, Failure::LeadNotDivisible(p("x", 30)));

        assert!(is_strong_gb(&ps(&["x"], 30), &gens, 1).is_ok());
        assert!(is_strong_gb(&ps(&["x + 5"], 6), &ps(&["x + 5"], 6), 3).is_ok());
        assert!(is_strong_gb(&[], &[], 3).is_ok());
    }

    #[test]
    fn is_strong_gb_rejects_non_members_and_unreduced() {
        let gens = ps(&["x + 5"], 6);
        assert!(matches!(
            is_strong_gb(&ps(&["x"], 6), &gens, 2),
            Err(Failure::NotInIdeal(_))
        ));
        let gens = ps(&["2*x", "3*y"], 6);
        assert!(matches!(
            is_strong_gb(&ps(&["2*x"], 6), &gens, 2),
            Err(Failure::GeneratorNotReduced(_))
        ));
    }

    #[test]
    fn containment_looks_above_the_bound() {
        // 1 = y^2 * x^2 - (x*y + 1)(x*y - 1) only appears at degree 4.
        let gens = ps(&["x*y - 1", "x^2"], 7);
        assert!(!slice(&["x*y - 1", "x^2"], 7, 3).contains(&p("1", 7)));
        assert!(slice(&["x*y - 1", "x^2"], 7, 4).contains(&p("1", 7)));
        assert!(is_strong_gb(&ps(&["1"], 7), &gens, 2).is_ok());
        assert_eq!(column_count(2, 2), 6);
    }

    #[test]
    fn failure_display() {
        let gens = ps(&["2*x", "3*x"], 30);
        let err = is_strong_gb(&gens, &gens, 1).unwrap_err();
        assert!(err.to_string().ends_with(": x"));
    }
}
