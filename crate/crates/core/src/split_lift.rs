//! Modulus splitting and recombination.
//!
//! [`strong_gb_over_zn`] runs the field-style algorithm and, when it meets a
//! zero-divisor lead coefficient, splits `n` into coprime factors, recurses,
//! lifts each part back to `Z/nZ` with its modulus adjoined, and glues the
//! parts together with the idempotents `ua` and `vb` of `1 = ua + vb`.
//! [`naive_strong_gb`] does the same from a full trial factorization.

use std::fmt;

use crate::buchberger::{field_mode, minimize_elements, strong_buchberger, FieldModeOutcome, GroebnerBasis};
use crate::error::{Error, Result};
use crate::ideal::GeneratorSet;
use crate::polynomial::{Monomial, Polynomial};
use crate::residue::{
    factor_refine_split, gcd, trial_factor, xgcd, Factorization, ModulusSplit, ResidueRing, DEFAULT_TRIAL_BOUND,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeMethod {
    /// Field-style Buchberger finished without meeting a zero divisor.
    FieldMode,
    /// Full ring Buchberger (perfect-power modulus).
    FullRing,
    /// Split into two coprime factors and recombined.
    Recombined { witness: u64 },
}

impl fmt::Display for NodeMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeMethod::FieldMode => f.write_str("field-mode"),
            NodeMethod::FullRing => f.write_str("full-sbba"),
            NodeMethod::Recombined { witness } => write!(f, "split (witness {witness})"),
        }
    }
}

/// Recursion record of [`strong_gb_over_zn`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitTree {
    pub modulus: u64,
    pub method: NodeMethod,
    pub basis: GroebnerBasis,
    pub children: Vec<SplitTree>,
}

impl SplitTree {
    pub fn leaves(&self) -> Vec<&SplitTree> {
        if self.children.is_empty() {
            vec![self]
        } else {
            self.children.iter().flat_map(SplitTree::leaves).collect()
        }
    }

    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(SplitTree::depth).max().unwrap_or(0)
    }

    fn write_indented(&self, f: &mut fmt::Formatter<'_>, level: usize) -> fmt::Result {
        writeln!(
            f,
            "{:indent$}Z/{}: {}, basis size {}",
            "",
            self.modulus,
            self.method,
            self.basis.len(),
            indent = 2 * level
        )?;
        for c in &self.children {
            c.write_indented(f, level + 1)?;
        }
        Ok(())
    }
}

impl fmt::Display for SplitTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_indented(f, 0)
    }
}

fn is_const_value(p: &Polynomial, c: u64) -> bool {
    p.is_constant() && p.lc() == c
}

/// Lifts a normalized basis over `Z/aZ` into `Z/nZ` coefficientwise and
/// appends the constant `a`.
pub fn lift_adjoin_modulus(basis: &GroebnerBasis, n: u64) -> Result<Vec<Polynomial>> {
    let a = basis.modulus();
    if !n.is_multiple_of(a) {
        return Err(Error::domain(format!("{a} does not divide {n}")));
    }
    let ring = ResidueRing::new(n)?;
    let mut out = Vec::with_capacity(basis.len() + 1);
    for g in basis.elements() {
        if g.is_zero() {
            continue;
        }
        if !g.is_constant() && !a.is_multiple_of(g.lc()) {
            return Err(Error::domain(format!(
                "lead coefficient {} does not divide {a}",
                g.lc()
            )));
        }
        out.push(g.lift(n)?);
    }
    if a != n {
        out.push(Polynomial::constant(ring, basis.order(), basis.nvars(), a));
    }
    Ok(out)
}

/// Combines lifted bases for the coprime factors `a` and `b` of `n = ab`.
///
/// For each pair `(g_a, g_b)` emits
/// `ua * (L / lm g_b) * lc(g_a) * g_b + vb * (L / lm g_a) * lc(g_b) * g_a`
/// with `L = lcm(lm g_a, lm g_b)`; its lead term is `lc(g_a) lc(g_b) L`.
/// Pairs whose lead term is already divisible by an emitted lead term are
/// skipped, as is the pair of the two constants (which gives zero).
pub fn crt_combine(left: &[Polynomial], right: &[Polynomial], a: u64, b: u64) -> Result<Vec<Polynomial>> {
    let n = a.checked_mul(b).ok_or_else(|| Error::domain("a * b overflows"))?;
    if gcd(a, b) != 1 || a < 2 || b < 2 {
        return Err(Error::domain(format!("{a} and {b} are not coprime proper factors")));
    }
    let Some(first) = left.first().or(right.first()) else {
        return Err(Error::domain("both sides are empty"));
    };
    let ring = ResidueRing::new(n)?;
    for p in left.iter().chain(right) {
        if p.ring() != ring {
            return Err(Error::RingMismatch {
                left: n,
                right: p.modulus(),
            });
        }
        first.check_compatible(p)?;
    }
    if !left.iter().any(|p| is_const_value(p, a)) || !right.iter().any(|p| is_const_value(p, b)) {
        return Err(Error::domain("each side must contain its modulus as a constant"));
    }
    for (side, m) in [(left, a), (right, b)] {
        for p in side {
            if !is_const_value(p, m) && !(m % p.lc() == 0 && p.lc() % m != 0) {
                return Err(Error::domain(format!(
                    "lead coefficient {} must divide {m} without being a multiple of it",
                    p.lc()
                )));
            }
        }
    }

    let (_, u, v) = xgcd(a as i128, b as i128)?;
    let ua = ring.reduce(u * a as i128);
    let vb = ring.reduce(v * b as i128);

    let order = first.order();
    let mut candidates: Vec<(Monomial, u64, usize, usize)> = Vec::new();
    for (k, ga) in left.iter().enumerate() {
        for (l, gb) in right.iter().enumerate() {
            let c = ring.mul(ga.lc(), gb.lc());
            if c == 0 {
                continue;
            }
            candidates.push((ga.lm().lcm(gb.lm()), c, k, l));
        }
    }
    candidates.sort_by(|x, y| order.cmp(&x.0, &y.0).then(x.1.cmp(&y.1)));

    let mut emitted_leads: Vec<(Monomial, u64)> = Vec::new();
    let mut out = Vec::new();
    for (lcm, c, k, l) in candidates {
        if emitted_leads.iter().any(|(m, d)| m.divides(&lcm) && c % d == 0) {
            continue;
        }
        let (ga, gb) = (&left[k], &right[l]);
        let tb = lcm.div(gb.lm()).expect("lcm is a multiple");
        let ta = lcm.div(ga.lm()).expect("lcm is a multiple");
        let f = gb.combine(ring.mul(ua, ga.lc()), Some(&tb), ring.mul(vb, gb.lc()), Some(&ta), ga);
        debug_assert!(!f.is_zero() && f.lc() == c && f.lm() == &lcm);
        emitted_leads.push((lcm, c));
        out.push(f);
    }
    Ok(out)
}

/// Lifts both bases into `Z/(ab)Z`, combines and minimizes.
pub fn recombine(left: &GroebnerBasis, right: &GroebnerBasis) -> Result<GroebnerBasis> {
    let (a, b) = (left.modulus(), right.modulus());
    let n = a.checked_mul(b).ok_or_else(|| Error::domain("a * b overflows"))?;
    let la = lift_adjoin_modulus(left, n)?;
    let lb = lift_adjoin_modulus(right, n)?;
    let combined = crt_combine(&la, &lb, a, b)?;
    Ok(minimize_elements(
        ResidueRing::new(n)?,
        left.order(),
        left.nvars(),
        &combined,
    ))
}

/// Strong Gröbner basis over `Z/nZ` by field-mode computation with
/// splitting on zero divisors.
pub fn strong_gb_over_zn(gens: &GeneratorSet) -> Result<(GroebnerBasis, SplitTree)> {
    solve(gens, false)
}

/// As [`strong_gb_over_zn`], running the two branches of each split on
/// separate threads. Output is identical.
pub fn strong_gb_over_zn_parallel(gens: &GeneratorSet) -> Result<(GroebnerBasis, SplitTree)> {
    solve(gens, true)
}

fn solve(gens: &GeneratorSet, parallel: bool) -> Result<(GroebnerBasis, SplitTree)> {
    let n = gens.modulus();
    let witness = match field_mode(gens) {
        FieldModeOutcome::Basis(basis) => {
            let tree = SplitTree {
                modulus: n,
                method: NodeMethod::FieldMode,
                basis: basis.clone(),
                children: Vec::new(),
            };
            return Ok((basis, tree));
        }
        FieldModeOutcome::Witness(a) => a,
    };
    match factor_refine_split(witness, n)? {
        ModulusSplit::CoprimePair { p, q } => {
            let gp = gens.project(p)?;
            let gq = gens.project(q)?;
            let ((bp, tp), (bq, tq)) = if parallel {
                std::thread::scope(|s| {
                    let hp = s.spawn(|| solve(&gp, true));
                    let rq = solve(&gq, true);
                    let rp = hp.join().expect("branch thread panicked");
                    Ok::<_, Error>((rp?, rq?))
                })?
            } else {
                (solve(&gp, false)?, solve(&gq, false)?)
            };
            let basis = recombine(&bp, &bq)?;
            let tree = SplitTree {
                modulus: n,
                method: NodeMethod::Recombined { witness },
                basis: basis.clone(),
                children: vec![tp, tq],
            };
            Ok((basis, tree))
        }
        ModulusSplit::PerfectPower { .. } => {
            let basis = strong_buchberger(gens);
            let tree = SplitTree {
                modulus: n,
                method: NodeMethod::FullRing,
                basis: basis.clone(),
                children: Vec::new(),
            };
            Ok((basis, tree))
        }
    }
}

/// Strong basis via trial factorization of `n` into prime powers, with a
/// fallback to [`strong_gb_over_zn`] when the factorization is incomplete.
pub fn naive_strong_gb(gens: &GeneratorSet) -> Result<GroebnerBasis> {
    naive_strong_gb_with_bound(gens, DEFAULT_TRIAL_BOUND)
}

pub fn naive_strong_gb_with_bound(gens: &GeneratorSet, bound: u64) -> Result<GroebnerBasis> {
    let factors = match trial_factor(gens.modulus(), bound) {
        Factorization::Complete(f) => f,
        Factorization::Incomplete { .. } => return Ok(strong_gb_over_zn(gens)?.0),
    };
    let mut acc: Option<GroebnerBasis> = None;
    for (p, e) in factors {
        let m = p.pow(e);
        let part = gens.project(m)?;
        let basis = if e == 1 {
            match field_mode(&part) {
                FieldModeOutcome::Basis(b) => b,
                // Unreachable for a prime modulus.
                FieldModeOutcome::Witness(_) => strong_buchberger(&part),
            }
        } else {
            strong_buchberger(&part)
        };
        acc = Some(match acc {
            None => basis,
            Some(prev) => recombine(&prev, &basis)?,
        });
    }
    Ok(acc.expect("n >= 2 has at least one prime factor"))
}
