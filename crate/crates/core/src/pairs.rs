//! S-polynomials, GCD-polynomials, annihilator polynomials and the queue
//! of pending critical items.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::residue::{annihilator, gcd, unit_stabilizer, xgcd};

/// Lead-term cancelling combination `a_f t_f f - a_g t_g g`, where
/// `a = lcm(lc f, lc g)` and `t = lcm(lm f, lm g)`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.check_compatible(g)?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::domain("S-polynomial of a zero polynomial"));
    }
    let ring = f.ring();
    let t = f.lm().lcm(g.lm());
    let tf = t.div(f.lm()).expect("lcm is a multiple");
    let tg = t.div(g.lm()).expect("lcm is a multiple");
    let a = ring.ideal_lcm(f.lc(), g.lc());
    let af = ring.solve_linear(f.lc(), a).expect("lcm lies in the ideal of lc f");
    let ag = ring.solve_linear(g.lc(), a).expect("lcm lies in the ideal of lc g");
    Ok(f.combine(af, Some(&tf), ring.neg(ag), Some(&tg), g))
}

/// `b_f t_f f + b_g t_g g` with `b_f lc f + b_g lc g` the canonical gcd of
/// the lead coefficients (a divisor of `n`).
pub fn gcd_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.check_compatible(g)?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::domain("GCD-polynomial of a zero polynomial"));
    }
    let ring = f.ring();
    let n = ring.modulus();
    let t = f.lm().lcm(g.lm());
    let tf = t.div(f.lm()).expect("lcm is a multiple");
    let tg = t.div(g.lm()).expect("lcm is a multiple");
    let (b, s, u) = xgcd(f.lc() as i128, g.lc() as i128)?;
    let (mut bf, mut bg) = (ring.reduce(s), ring.reduce(u));
    if (b as u64) % n != gcd(b as u64, n) {
        let unit = unit_stabilizer(b, n);
        bf = ring.mul(bf, unit);
        bg = ring.mul(bg, unit);
    }
    Ok(f.combine(bf, Some(&tf), bg, Some(&tg), g))
}

/// `a * f` where `a` generates the annihilator of `lc f`.
pub fn ann_polynomial(f: &Polynomial) -> Result<Polynomial> {
    let lc = f
        .lead_coefficient()
        .ok_or_else(|| Error::domain("annihilator polynomial of zero"))?;
    Ok(f.scale(annihilator(lc).value()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ItemKind {
    APoly(usize),
    GPoly(usize, usize),
    SPoly(usize, usize),
}

impl ItemKind {
    fn indices(&self) -> (usize, usize) {
        match *self {
            ItemKind::APoly(i) => (i, 0),
            ItemKind::GPoly(i, j) | ItemKind::SPoly(i, j) => (i, j),
        }
    }

    fn rank(&self) -> u8 {
        match self {
            ItemKind::APoly(_) => 0,
            ItemKind::GPoly(..) => 1,
            ItemKind::SPoly(..) => 2,
        }
    }
}

/// A pending S-, GCD- or annihilator polynomial, referenced by basis index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CriticalItem {
    pub kind: ItemKind,
    /// Degree of the lcm of the lead monomials (of `lm f_i` for annihilators).
    pub degree: u32,
}

impl CriticalItem {
    pub fn apoly(i: usize, basis: &[Polynomial]) -> Self {
        CriticalItem {
            kind: ItemKind::APoly(i),
            degree: basis[i].lm().degree(),
        }
    }

    pub fn spoly(i: usize, j: usize, basis: &[Polynomial]) -> Self {
        let (i, j) = (i.min(j), i.max(j));
        CriticalItem {
            kind: ItemKind::SPoly(i, j),
            degree: basis[i].lm().lcm(basis[j].lm()).degree(),
        }
    }

    pub fn gpoly(i: usize, j: usize, basis: &[Polynomial]) -> Self {
        let (i, j) = (i.min(j), i.max(j));
        CriticalItem {
            kind: ItemKind::GPoly(i, j),
            degree: basis[i].lm().lcm(basis[j].lm()).degree(),
        }
    }

    fn key(&self) -> (u32, u8, usize, usize) {
        let (i, j) = self.kind.indices();
        (self.degree, self.kind.rank(), i, j)
    }

    /// Builds the polynomial this item stands for.
    pub fn materialize(&self, basis: &[Polynomial]) -> Result<Polynomial> {
        match self.kind {
            ItemKind::APoly(i) => ann_polynomial(&basis[i]),
            ItemKind::GPoly(i, j) => gcd_polynomial(&basis[i], &basis[j]),
            ItemKind::SPoly(i, j) => s_polynomial(&basis[i], &basis[j]),
        }
    }
}

impl PartialOrd for CriticalItem {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CriticalItem {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

/// Work queue ordered by (degree, APoly < GPoly < SPoly, indices).
#[derive(Clone, Debug, Default)]
pub struct CriticalQueue {
    items: BTreeSet<CriticalItem>,
}

impl CriticalQueue {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, item: CriticalItem) {
        self.items.insert(item);
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn select_next(&mut self) -> Result<CriticalItem> {
        self.items
            .pop_first()
            .ok_or_else(|| Error::domain("select from an empty critical queue"))
    }

    pub fn retain(&mut self, keep: impl FnMut(&CriticalItem) -> bool) {
        self.items.retain(keep);
    }

    pub fn iter(&self) -> impl Iterator<Item = &CriticalItem> {
        self.items.iter()
    }
}
