use crate::error::{Error, Result};
use crate::parse::IdealFile;
use crate::polynomial::{MonomialOrder, Polynomial};
use crate::residue::ResidueRing;

/// Generators of an ideal of `(Z/nZ)[x_1, ..., x_k]`. Zero generators are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    ring: ResidueRing,
    order: MonomialOrder,
    nvars: usize,
    generators: Vec<Polynomial>,
}

impl GeneratorSet {
    pub fn new(ring: ResidueRing, order: MonomialOrder, nvars: usize, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if g.ring() != ring {
                return Err(Error::RingMismatch {
                    left: ring.modulus(),
                    right: g.modulus(),
                });
            }
            if g.nvars() != nvars {
                return Err(Error::ArityMismatch {
                    left: nvars,
                    right: g.nvars(),
                });
            }
            if g.order() != order {
                return Err(Error::OrderMismatch);
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(GeneratorSet {
            ring,
            order,
            nvars,
            generators,
        })
    }

    pub fn from_file(file: &IdealFile) -> Result<Self> {
        GeneratorSet::new(file.ring, file.order, file.vars.len(), file.generators.clone())
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

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn max_degree(&self) -> i64 {
        self.generators.iter().map(Polynomial::degree).max().unwrap_or(-1)
    }

    /// Generators reduced modulo a divisor `d` of `n`.
    pub fn project(&self, d: u64) -> Result<GeneratorSet> {
        let ring = ResidueRing::new(d)?;
        let generators = self
            .generators
            .iter()
            .map(|g| g.project(d))
            .collect::<Result<Vec<_>>>()?;
        GeneratorSet::new(ring, self.order, self.nvars, generators)
    }

    /// Same generators under a different monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> GeneratorSet {
        GeneratorSet {
            order,
            generators: self.generators.iter().map(|g| g.with_order(order)).collect(),
            ..self.clone()
        }
    }
}
