//! Benchmark systems, modulus presets and random ideals.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::ideal::GeneratorSet;
use crate::parse::parse_polynomial;
use crate::polynomial::{Monomial, MonomialOrder, Polynomial};
use crate::residue::ResidueRing;

pub const SYSTEMS: [&str; 5] = ["cyclic-4", "cyclic-5", "katsura-4", "katsura-5", "noon-3"];

/// Small moduli with the same shape as the large ones.
pub const PRESETS: [(&str, u64); 3] = [
    ("squarefree-small", 2 * 3 * 5 * 7),
    ("semiprime", 101 * 103),
    ("prime-powers", 4 * 9 * 25),
];

/// Large moduli; slow on the bigger systems.
pub const FULL_SIZE_PRESETS: [(&str, u64); 3] = [
    ("squarefree-full", 2 * 3 * 5 * 7 * 11 * 13 * 17 * 19 * 23),
    ("semiprime-full", 32771 * 32779),
    ("prime-powers-full", 27 * 125 * 343 * 1331),
];

pub fn modulus_preset(name: &str) -> Result<u64> {
    if let Some(&(_, n)) = PRESETS.iter().chain(&FULL_SIZE_PRESETS).find(|(k, _)| *k == name) {
        return Ok(n);
    }
    name.parse::<u64>()
        .map_err(|_| Error::domain(format!("unknown modulus preset '{name}'")))
}

/// Systems in a suite: `all`, `small` (the three smaller systems) or a
/// single system name.
pub fn suite(name: &str) -> Result<Vec<&'static str>> {
    match name {
        "all" => Ok(SYSTEMS.to_vec()),
        "small" => Ok(vec!["cyclic-4", "katsura-4", "noon-3"]),
        _ => SYSTEMS
            .iter()
            .find(|s| **s == name)
            .map(|s| vec![*s])
            .ok_or_else(|| Error::domain(format!("unknown suite '{name}'"))),
    }
}

fn names(prefix: &str, range: std::ops::Range<usize>) -> Vec<String> {
    range.map(|i| format!("{prefix}{i}")).collect()
}

fn cyclic(k: usize) -> (Vec<String>, Vec<String>) {
    let vars = names("x", 1..k + 1);
    let mut polys = Vec::new();
    for len in 1..k {
        let terms: Vec<String> = (0..k)
            .map(|i| {
                (0..len)
                    .map(|j| vars[(i + j) % k].clone())
                    .collect::<Vec<_>>()
                    .join("*")
            })
            .collect();
        polys.push(terms.join(" + "));
    }
    polys.push(format!("{} - 1", vars.join("*")));
    (vars, polys)
}

fn katsura(k: usize) -> (Vec<String>, Vec<String>) {
    let vars = names("x", 0..k + 1);
    let var = |i: i64| -> Option<&String> { vars.get(i.unsigned_abs() as usize) };
    let mut polys = Vec::new();
    for m in 0..k as i64 {
        let mut terms = Vec::new();
        for l in -(k as i64)..=k as i64 {
            if let (Some(a), Some(b)) = (var(l), var(m - l)) {
                terms.push(format!("{a}*{b}"));
            }
        }
        polys.push(format!("{} - {}", terms.join(" + "), vars[m as usize]));
    }
    let rest: Vec<String> = vars[1..].iter().map(|v| format!("2*{v}")).collect();
    polys.push(format!("{} + {} - 1", vars[0], rest.join(" + ")));
    (vars, polys)
}

fn noon(k: usize) -> (Vec<String>, Vec<String>) {
    let vars = names("x", 1..k + 1);
    let polys = (0..k)
        .map(|i| {
            let sq: Vec<String> = (0..k)
                .filter(|&j| j != i)
                .map(|j| format!("10*{}*{}^2", vars[i], vars[j]))
                .collect();
            format!("{} - 11*{} + 10", sq.join(" + "), vars[i])
        })
        .collect();
    (vars, polys)
}

/// Variable names and generators of a named benchmark system.
pub fn system(name: &str, ring: ResidueRing, order: MonomialOrder) -> Result<(Vec<String>, GeneratorSet)> {
    let (vars, text) = match name {
        "cyclic-4" => cyclic(4),
        "cyclic-5" => cyclic(5),
        "katsura-4" => katsura(4),
        "katsura-5" => katsura(5),
        "noon-3" => noon(3),
        _ => return Err(Error::domain(format!("unknown system '{name}'"))),
    };
    let polys = text
        .iter()
        .map(|t| parse_polynomial(t, ring, order, &vars))
        .collect::<Result<Vec<_>>>()?;
    let gens = GeneratorSet::new(ring, order, vars.len(), polys)?;
    Ok((vars, gens))
}

#[derive(Clone, Debug)]
pub struct BenchRecord {
    pub system: String,
    pub modulus: u64,
    pub engine: Engine,
    pub elapsed: Duration,
    pub basis_size: usize,
}

pub fn time_engine(engine: Engine, gens: &GeneratorSet) -> Result<(Duration, usize)> {
    let start = Instant::now();
    let basis = engine.run(gens)?;
    Ok((start.elapsed(), basis.len()))
}

pub fn run_bench(systems: &[&str], modulus: u64, engines: &[Engine]) -> Result<Vec<BenchRecord>> {
    let ring = ResidueRing::new(modulus)?;
    let mut out = Vec::new();
    for name in systems {
        let (_, gens) = system(name, ring, MonomialOrder::DegRevLex)?;
        for &engine in engines {
            let (elapsed, basis_size) = time_engine(engine, &gens)?;
            out.push(BenchRecord {
                system: name.to_string(),
                modulus,
                engine,
                elapsed,
                basis_size,
            });
        }
    }
    Ok(out)
}

/// Seed from `PIRGB_SEED`, or `default` when unset or unparsable.
pub fn seed_from_env(default: u64) -> u64 {
    std::env::var("PIRGB_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(default)
}

pub fn seeded_rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Shape of the random ideals drawn by [`random_ideal`].
#[derive(Clone, Copy, Debug)]
pub struct RandomShape {
    pub nvars: usize,
    pub max_degree: u32,
    pub max_generators: usize,
    pub max_terms: usize,
}

impl Default for RandomShape {
    fn default() -> Self {
        RandomShape {
            nvars: 3,
            max_degree: 3,
            max_generators: 4,
            max_terms: 4,
        }
    }
}

fn random_monomial(rng: &mut impl Rng, nvars: usize, degree: u32) -> Monomial {
    let mut exps = vec![0u32; nvars];
    let d = rng.gen_range(0..=degree);
    for _ in 0..d {
        exps[rng.gen_range(0..nvars)] += 1;
    }
    Monomial::new(&exps)
}

pub fn random_polynomial(
    rng: &mut impl Rng,
    ring: ResidueRing,
    order: MonomialOrder,
    shape: RandomShape,
) -> Polynomial {
    let nterms = rng.gen_range(1..=shape.max_terms);
    let terms: Vec<(i128, Monomial)> = (0..nterms)
        .map(|_| {
            (
                rng.gen_range(0..ring.modulus()) as i128,
                random_monomial(rng, shape.nvars, shape.max_degree),
            )
        })
        .collect();
    Polynomial::from_terms(ring, order, shape.nvars, terms).expect("terms match the ring")
}

/// A random nonempty generator set (generators may vanish and be dropped).
pub fn random_ideal(rng: &mut impl Rng, ring: ResidueRing, order: MonomialOrder, shape: RandomShape) -> GeneratorSet {
    let count = rng.gen_range(1..=shape.max_generators);
    let gens = (0..count).map(|_| random_polynomial(rng, ring, order, shape)).collect();
    GeneratorSet::new(ring, order, shape.nvars, gens).expect("generators share one ring")
}
