//! Buchberger's algorithm over `Z/nZ`.
//!
//! [`strong_buchberger`] is the full ring algorithm with S-, GCD- and
//! annihilator polynomials. [`field_mode`] pretends `Z/nZ` is a field: it
//! keeps every basis element monic and only processes S-polynomials, which
//! yields a strong basis as long as every lead coefficient met on the way is
//! invertible. The first non-invertible lead coefficient is reported as a
//! witness instead.

use std::cmp::Ordering;
use std::fmt;

use crate::ideal::GeneratorSet;
use crate::pairs::{CriticalItem, CriticalQueue, ItemKind};
use crate::polynomial::{MonomialOrder, Polynomial};
use crate::reduction::{normal_form, remainder_reduce};
use crate::residue::{gcd, try_invert, unit_stabilizer, Invertibility, ResidueRing};

/// A strong Gröbner basis tagged with its ring and order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: ResidueRing,
    order: MonomialOrder,
    nvars: usize,
    elements: Vec<Polynomial>,
    minimal: bool,
    normalized: bool,
}

impl GroebnerBasis {
    /// Wraps elements without minimizing them.
    pub fn from_elements(ring: ResidueRing, order: MonomialOrder, nvars: usize, elements: Vec<Polynomial>) -> Self {
        GroebnerBasis {
            ring,
            order,
            nvars,
            elements,
            minimal: false,
            normalized: false,
        }
    }

    pub fn ring(&self) -> ResidueRing {
        self.ring
    }

    pub fn modulus(&self) -> u64 {
        self.ring.modulus()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn max_degree(&self) -> i64 {
        self.elements.iter().map(Polynomial::degree).max().unwrap_or(-1)
    }

    pub fn display<'a>(&'a self, vars: &'a [String]) -> BasisDisplay<'a> {
        BasisDisplay { basis: self, vars }
    }
}

pub struct BasisDisplay<'a> {
    basis: &'a GroebnerBasis,
    vars: &'a [String],
}

impl fmt::Display for BasisDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.basis.elements {
            writeln!(f, "{}", g.display(self.vars))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldModeOutcome {
    Basis(GroebnerBasis),
    /// Lead coefficient `a` with `1 < gcd(a, n) < n`.
    Witness(u64),
}

/// Output order: descending lead monomial, then ascending lead coefficient.
fn output_cmp(order: MonomialOrder, a: &Polynomial, b: &Polynomial) -> Ordering {
    order.cmp(b.lm(), a.lm()).then(a.lc().cmp(&b.lc()))
}

/// Scales `f` by a unit so its lead coefficient becomes `gcd(lc f, n)`.
pub(crate) fn normalize_lead(f: &Polynomial) -> Polynomial {
    if f.is_zero() {
        return f.clone();
    }
    let n = f.modulus();
    if gcd(f.lc(), n) == f.lc() {
        return f.clone();
    }
    f.scale(unit_stabilizer(f.lc() as i128, n))
}

fn lead_divides(r: &Polynomial, g: &Polynomial) -> bool {
    r.lm().divides(g.lm()) && g.lc().is_multiple_of(gcd(r.lc(), r.modulus()))
}

pub(crate) fn minimize_elements(
    ring: ResidueRing,
    order: MonomialOrder,
    nvars: usize,
    elements: &[Polynomial],
) -> GroebnerBasis {
    let mut scaled: Vec<Polynomial> = elements.iter().filter(|g| !g.is_zero()).map(normalize_lead).collect();
    scaled.sort_by(|a, b| order.cmp(a.lm(), b.lm()).then(a.lc().cmp(&b.lc())));
    let mut kept: Vec<Polynomial> = Vec::new();
    for g in scaled {
        if !kept.iter().any(|r| lead_divides(r, &g)) {
            kept.push(g);
        }
    }
    let mut reduced: Vec<Polynomial> = (0..kept.len())
        .map(|i| {
            let others: Vec<Polynomial> = kept
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            remainder_reduce(&kept[i], &others, true)
        })
        .collect();
    reduced.sort_by(|a, b| output_cmp(order, a, b));
    GroebnerBasis {
        ring,
        order,
        nvars,
        elements: reduced,
        minimal: true,
        normalized: true,
    }
}

/// Drops elements whose lead term is divisible by another's, scales lead
/// coefficients to divisors of `n` and reduces tails to canonical remainders.
pub fn minimize_and_normalize(basis: &GroebnerBasis) -> GroebnerBasis {
    minimize_elements(basis.ring, basis.order, basis.nvars, &basis.elements)
}

enum RunOutcome {
    Done(Vec<Polynomial>),
    /// A new constant `d` was found; restart from these generators.
    Restart(Vec<Polynomial>),
}

struct RingRun {
    basis: Vec<Polynomial>,
    queue: CriticalQueue,
}

impl RingRun {
    /// Adds `h` and its critical items. A constant other than the current
    /// one is returned instead of inserted.
    fn insert(&mut self, h: Polynomial, constant: Option<u64>) -> Option<u64> {
        let h = normalize_lead(&h);
        if h.is_constant() && Some(h.lc()) != constant {
            return Some(h.lc());
        }
        let idx = self.basis.len();
        self.basis.push(h);
        let h = &self.basis[idx];
        let n = h.modulus();
        if gcd(h.lc(), n) != 1 {
            self.queue.push(CriticalItem::apoly(idx, &self.basis));
        }
        for j in 0..idx {
            let g = &self.basis[j];
            self.queue.push(CriticalItem::spoly(j, idx, &self.basis));
            let (a, b) = (gcd(g.lc(), n), gcd(h.lc(), n));
            if a % b != 0 && b % a != 0 {
                self.queue.push(CriticalItem::gpoly(j, idx, &self.basis));
            }
        }
        None
    }
}

/// Reduces all coefficients modulo the constant `d` (shrinking `d` when a
/// smaller constant shows up) and returns `[d, reduced...]`.
fn reduce_mod_constant(like: &Polynomial, fs: &[Polynomial], mut d: u64) -> Vec<Polynomial> {
    let n = like.modulus();
    'shrink: loop {
        let c = Polynomial::constant(like.ring(), like.order(), like.nvars(), d);
        let mut out = vec![c.clone()];
        for f in fs {
            let r = remainder_reduce(f, std::slice::from_ref(&c), false);
            if r.is_constant() {
                d = gcd(gcd(d, r.lc()), n);
                continue 'shrink;
            }
            if !r.is_zero() {
                out.push(r);
            }
        }
        return out;
    }
}

fn run_ring(input: &[Polynomial], current_constant: Option<u64>) -> RunOutcome {
    let mut run = RingRun {
        basis: Vec::new(),
        queue: CriticalQueue::new(),
    };
    let restart_with = |d: u64, run: &RingRun, pending: &[Polynomial]| -> RunOutcome {
        let n = input[0].modulus();
        let d = match current_constant {
            Some(old) => gcd(gcd(old, d), n),
            None => gcd(d, n),
        };
        let mut all: Vec<Polynomial> = run.basis.clone();
        all.extend(pending.iter().cloned());
        RunOutcome::Restart(reduce_mod_constant(&input[0], &all, d))
    };
    for (k, f) in input.iter().enumerate() {
        if let Some(d) = run.insert(f.clone(), current_constant) {
            return restart_with(d, &run, &input[k + 1..]);
        }
    }
    while let Ok(item) = run.queue.select_next() {
        let h = item.materialize(&run.basis).expect("items reference nonzero elements");
        if h.is_zero() {
            continue;
        }
        let h = normal_form(&h, &run.basis);
        if h.is_zero() {
            continue;
        }
        if let Some(d) = run.insert(h, current_constant) {
            return restart_with(d, &run, &[]);
        }
    }
    RunOutcome::Done(run.basis)
}

/// The strong Buchberger algorithm, returning a minimal normalized basis.
pub fn strong_buchberger(gens: &GeneratorSet) -> GroebnerBasis {
    let basis = strong_buchberger_raw(gens);
    minimize_and_normalize(&basis)
}

/// The strong Buchberger algorithm without final minimization.
pub fn strong_buchberger_raw(gens: &GeneratorSet) -> GroebnerBasis {
    let (ring, order, nvars) = (gens.ring(), gens.order(), gens.nvars());
    let mut input: Vec<Polynomial> = gens.generators().to_vec();
    let mut constant: Option<u64> = None;
    loop {
        if input.is_empty() {
            return GroebnerBasis::from_elements(ring, order, nvars, Vec::new());
        }
        if constant == Some(1) {
            let one = Polynomial::constant(ring, order, nvars, 1);
            return GroebnerBasis::from_elements(ring, order, nvars, vec![one]);
        }
        match run_ring(&input, constant) {
            RunOutcome::Done(basis) => {
                return GroebnerBasis::from_elements(ring, order, nvars, basis);
            }
            RunOutcome::Restart(next) => {
                constant = Some(next[0].lc());
                input = next;
            }
        }
    }
}

struct FieldRun {
    basis: Vec<Polynomial>,
    active: Vec<bool>,
    pairs: CriticalQueue,
}

impl FieldRun {
    fn reducers(&self) -> Vec<Polynomial> {
        self.basis
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(g, _)| g.clone())
            .collect()
    }

    /// Gebauer–Möller installation of a new monic element.
    fn update(&mut self, h: Polynomial) {
        let h_idx = self.basis.len();
        self.basis.push(h);
        self.active.push(false);
        let basis = &self.basis;
        let h = &basis[h_idx];

        let candidates: Vec<(usize, crate::polynomial::Monomial)> = (0..h_idx)
            .filter(|&g| self.active[g])
            .map(|g| (g, h.lm().lcm(basis[g].lm())))
            .collect();
        let mut accepted: Vec<usize> = Vec::new();
        for k in 0..candidates.len() {
            let (g1, l1) = &candidates[k];
            let keep = h.lm().is_coprime(basis[*g1].lm())
                || !(candidates[k + 1..].iter().any(|(_, l2)| l2.divides(l1))
                    || accepted.iter().any(|&d| candidates[d].1.divides(l1)));
            if keep {
                accepted.push(k);
            }
        }
        // Chain criterion on the old pairs.
        self.pairs.retain(|item| {
            let ItemKind::SPoly(i, j) = item.kind else {
                return true;
            };
            let lij = basis[i].lm().lcm(basis[j].lm());
            !(h.lm().divides(&lij) && basis[i].lm().lcm(h.lm()) != lij && basis[j].lm().lcm(h.lm()) != lij)
        });
        for k in accepted {
            let g = candidates[k].0;
            if !h.lm().is_coprime(basis[g].lm()) {
                self.pairs.push(CriticalItem::spoly(g, h_idx, basis));
            }
        }
        for (active, g) in self.active[..h_idx].iter_mut().zip(basis) {
            if *active && h.lm().divides(g.lm()) {
                *active = false;
            }
        }
        self.active[h_idx] = true;
    }
}

fn make_monic(f: &Polynomial) -> std::result::Result<Polynomial, u64> {
    let lc = f.lead_coefficient().expect("nonzero");
    match try_invert(lc).expect("nonzero lead coefficient") {
        Invertibility::Inverse(inv) => Ok(f.scale(inv.value())),
        Invertibility::NonInvertibleWitness(a) => Err(a),
    }
}

/// Field-style Buchberger over `Z/nZ`: S-polynomials only, monic elements,
/// product and chain criteria. Stops at the first non-invertible lead
/// coefficient.
pub fn field_mode(gens: &GeneratorSet) -> FieldModeOutcome {
    let (ring, order, nvars) = (gens.ring(), gens.order(), gens.nvars());
    let mut run = FieldRun {
        basis: Vec::new(),
        active: Vec::new(),
        pairs: CriticalQueue::new(),
    };
    for f in gens.generators() {
        match make_monic(f) {
            Ok(h) => run.update(h),
            Err(a) => return FieldModeOutcome::Witness(a),
        }
    }
    while let Ok(item) = run.pairs.select_next() {
        let h = item.materialize(&run.basis).expect("items reference nonzero elements");
        // Top-reduction only: tail reduction against an unfinished basis can
        // blow up exponents under lex. Tails are canonicalized at the end.
        let h = normal_form(&h, &run.reducers());
        if h.is_zero() {
            continue;
        }
        match make_monic(&h) {
            Ok(h) => run.update(h),
            Err(a) => return FieldModeOutcome::Witness(a),
        }
    }
    let active = run.reducers();
    FieldModeOutcome::Basis(minimize_elements(ring, order, nvars, &active))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn gens(polys: &[&str], n: u64) -> GeneratorSet {
        let ring = ResidueRing::new(n).unwrap();
        let vars: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
        let ps = polys
            .iter()
            .map(|s| parse_polynomial(s, ring, MonomialOrder::DegRevLex, &vars).unwrap())
            .collect();
        GeneratorSet::new(ring, MonomialOrder::DegRevLex, 2, ps).unwrap()
    }

    fn shown(b: &GroebnerBasis) -> Vec<String> {
        let vars: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
        b.elements().iter().map(|g| g.display(&vars).to_string()).collect()
    }

    #[test]
    fn strong_buchberger_examples() {
        assert_eq!(shown(&strong_buchberger(&gens(&["2*x", "3*x"], 30))), ["x"]);
        assert_eq!(shown(&strong_buchberger(&gens(&["x + 5"], 6))), ["x + 5"]);
        assert_eq!(shown(&strong_buchberger(&gens(&["2"], 6))), ["2"]);
        assert!(strong_buchberger(&gens(&["0", "6*x"], 6)).is_empty());
    }

    #[test]
    fn strong_buchberger_constant_restart() {
        // Mod 2 the ideal is the unit ideal, mod 3 it is (x + 2).
        let b = strong_buchberger(&gens(&["2*x + 1", "3"], 6));
        assert_eq!(shown(&b), ["x + 2", "3"]);
        let b = strong_buchberger(&gens(&["4*x + 2", "6*x^2 + 3"], 12));
        assert!(b.is_minimal() && b.is_normalized());
    }

    #[test]
    fn field_mode_examples() {
        match field_mode(&gens(&["x^2 - 1", "x - 1"], 5)) {
            FieldModeOutcome::Basis(b) => assert_eq!(shown(&b), ["x + 4"]),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(field_mode(&gens(&["2*x + 1"], 6)), FieldModeOutcome::Witness(2));
        match field_mode(&gens(&["x + 1"], 6)) {
            FieldModeOutcome::Basis(b) => assert_eq!(shown(&b), ["x + 1"]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn minimize_examples() {
        let ring = ResidueRing::new(30).unwrap();
        let raw = gens(&["2*x", "3*x", "x"], 30);
        let b = GroebnerBasis::from_elements(ring, MonomialOrder::DegRevLex, 2, raw.generators().to_vec());
        assert_eq!(shown(&minimize_and_normalize(&b)), ["x"]);

        let raw = gens(&["5*x"], 6);
        let b = GroebnerBasis::from_elements(raw.ring(), MonomialOrder::DegRevLex, 2, raw.generators().to_vec());
        assert_eq!(shown(&minimize_and_normalize(&b)), ["x"]);

        let raw = gens(&["4*x", "2"], 12);
        let b = GroebnerBasis::from_elements(raw.ring(), MonomialOrder::DegRevLex, 2, raw.generators().to_vec());
        assert_eq!(shown(&minimize_and_normalize(&b)), ["2"]);
    }

    #[test]
    fn minimize_is_idempotent() {
        let b = strong_buchberger(&gens(&["6*x*y + 4*y", "9*x^2 + 2", "10*y^2 + x"], 36));
        assert_eq!(minimize_and_normalize(&b), b);
    }
}
