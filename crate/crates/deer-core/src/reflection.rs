//! Exact monomial-matrix model of the reflection group `G(de,e,r)`.
//!
//! Elements are `r×r` matrices with one nonzero entry per row and column,
//! each a `de`-th root of unity, subject to the product of entries being a
//! `d`-th power root (equivalently: exponent sum ≡ 0 mod e). Roots of unity
//! are tracked purely by exponents mod `de` — no floating point anywhere.
//!
//! Convention: column `j` has its nonzero entry in row `perm[j]`, with value
//! `ζ^{exps[j]}`. Matrix product is the usual one, so projecting a word
//! means multiplying the generator matrices left to right.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::artin::Sign;
use crate::deer::{DeerError, DeerGen, DeerLetter, DeerParams, DeerWord};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ReflectionError {
    #[error("matrix sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("moduli differ: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("element cap {0} exceeded during closure")]
    CapExceeded(usize),
    #[error("degrees and regular numbers need d, e, r ≥ 2; got {0}")]
    ParamsOutOfRange(DeerParams),
    #[error(transparent)]
    Deer(#[from] DeerError),
}

/// A monomial matrix over the `modulus`-th roots of unity.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct MonomialMatrix {
    modulus: u32,
    perm: Vec<usize>,
    exps: Vec<u32>,
}

impl MonomialMatrix {
    pub fn identity(size: usize, modulus: u32) -> Self {
        MonomialMatrix {
            modulus: modulus.max(1),
            perm: (0..size).collect(),
            exps: vec![0; size],
        }
    }

    /// The order-2 reflection swapping the first two coordinates with
    /// weights `ζ^i`, `ζ^{-i}`: the image of `t_i`.
    pub fn t_reflection(size: usize, modulus: u32, i: i64) -> Self {
        let mut m = Self::identity(size, modulus);
        m.perm.swap(0, 1);
        m.exps[0] = modmod(i, m.modulus);
        m.exps[1] = modmod(-i, m.modulus);
        m
    }

    /// `Diag(ζ^k, 1, …, 1)`: the image of `z` has `k = e`.
    pub fn diag_first(size: usize, modulus: u32, k: i64) -> Self {
        let mut m = Self::identity(size, modulus);
        m.exps[0] = modmod(k, m.modulus);
        m
    }

    /// Permutation matrix of the transposition `(j-1, j)` (1-based).
    pub fn s_transposition(size: usize, modulus: u32, j: u32) -> Self {
        let mut m = Self::identity(size, modulus);
        m.perm.swap(j as usize - 2, j as usize - 1);
        m
    }

    pub fn size(&self) -> usize {
        self.perm.len()
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &v)| i == v)
            && self.exps.iter().all(|&x| x == 0)
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &MonomialMatrix) -> Result<MonomialMatrix, ReflectionError> {
        if self.size() != rhs.size() {
            return Err(ReflectionError::SizeMismatch(self.size(), rhs.size()));
        }
        if self.modulus != rhs.modulus {
            return Err(ReflectionError::ModulusMismatch(self.modulus, rhs.modulus));
        }
        let size = self.size();
        let mut perm = vec![0usize; size];
        let mut exps = vec![0u32; size];
        for j in 0..size {
            let mid = rhs.perm[j];
            perm[j] = self.perm[mid];
            exps[j] = (rhs.exps[j] + self.exps[mid]) % self.modulus;
        }
        Ok(MonomialMatrix {
            modulus: self.modulus,
            perm,
            exps,
        })
    }

    pub fn inverse(&self) -> MonomialMatrix {
        let size = self.size();
        let mut perm = vec![0usize; size];
        let mut exps = vec![0u32; size];
        for j in 0..size {
            perm[self.perm[j]] = j;
            exps[self.perm[j]] = (self.modulus - self.exps[j]) % self.modulus;
        }
        MonomialMatrix {
            modulus: self.modulus,
            perm,
            exps,
        }
    }

    pub fn pow(&self, k: i64) -> MonomialMatrix {
        let base = if k >= 0 { self.clone() } else { self.inverse() };
        let mut acc = MonomialMatrix::identity(self.size(), self.modulus);
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base).expect("same size and modulus");
        }
        acc
    }

    /// Exponent sum mod `e`; zero for every element of `G(de,e,r)`.
    pub fn exponent_sum_mod(&self, e: u32) -> u32 {
        self.exps.iter().fold(0u32, |acc, &x| (acc + x) % e.max(1))
    }
}

impl fmt::Display for MonomialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "monomial matrix mod ζ_{}:", self.modulus)?;
        for row in 0..self.size() {
            write!(f, "  [")?;
            for col in 0..self.size() {
                if self.perm[col] == row {
                    write!(f, " z^{:<2}", self.exps[col])?;
                } else {
                    write!(f, "  .  ")?;
                }
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}

fn modmod(i: i64, m: u32) -> u32 {
    i.rem_euclid(m as i64) as u32
}

/// Generator matrix of one letter, over `ζ_{de}`.
pub fn gen_matrix(letter: DeerLetter, params: DeerParams) -> MonomialMatrix {
    let size = params.r as usize;
    let modulus = params.d * params.e;
    let m = match letter.gen {
        DeerGen::Z => MonomialMatrix::diag_first(size, modulus, params.e as i64),
        DeerGen::T(i) => MonomialMatrix::t_reflection(size, modulus, i),
        DeerGen::S(j) => MonomialMatrix::s_transposition(size, modulus, j),
    };
    match letter.sign {
        Sign::Pos => m,
        Sign::Neg => m.inverse(),
    }
}

/// The natural projection `B(de,e,r) ↠ G(de,e,r)` on words.
pub fn project(w: &DeerWord) -> MonomialMatrix {
    let params = w.params();
    let mut acc = MonomialMatrix::identity(params.r as usize, params.d * params.e);
    for &l in w.letters() {
        acc = acc
            .mul(&gen_matrix(l, params))
            .expect("generator matrices share size and modulus");
    }
    acc
}

/// Order of the subgroup generated by `{z, t_0, t_1, s_3 … s_r}` by
/// breadth-first closure, capped at `cap` elements.
pub fn group_order_bfs(params: DeerParams, cap: usize) -> Result<usize, ReflectionError> {
    let mut gens = vec![
        gen_matrix(DeerLetter::z(), params),
        gen_matrix(DeerLetter::t(0), params),
        gen_matrix(DeerLetter::t(1), params),
    ];
    for j in 3..=params.r {
        gens.push(gen_matrix(DeerLetter::s(j), params));
    }
    let mut seen: HashSet<MonomialMatrix> = HashSet::new();
    let mut queue = VecDeque::new();
    let id = MonomialMatrix::identity(params.r as usize, params.d * params.e);
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(m) = queue.pop_front() {
        for g in &gens {
            let next = m.mul(g)?;
            if seen.contains(&next) {
                continue;
            }
            if seen.len() >= cap {
                return Err(ReflectionError::CapExceeded(cap));
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    Ok(seen.len())
}

/// Shephard–Todd order `(de)^r · r! / e`, used as a cross-check oracle for
/// the BFS closure.
pub fn expected_order(params: DeerParams) -> u128 {
    let de = (params.d * params.e) as u128;
    let mut order = 1u128;
    for _ in 0..params.r {
        order *= de;
    }
    for k in 2..=params.r as u128 {
        order *= k;
    }
    order / params.e as u128
}

/// Degrees `{e, 2e, …, (r-1)e, r}`, codegrees `{0, e, …, (r-1)e}`, and the
/// Coxeter number `h = e(r-1)`. Requires `d, e, r ≥ 2`.
pub fn degrees_codegrees(params: DeerParams) -> Result<(Vec<u32>, Vec<u32>, u32), ReflectionError> {
    if params.d < 2 || params.e < 2 || params.r < 2 {
        return Err(ReflectionError::ParamsOutOfRange(params));
    }
    let (e, r) = (params.e, params.r);
    let mut degrees: Vec<u32> = (1..r).map(|k| k * e).collect();
    degrees.push(r);
    let codegrees: Vec<u32> = (0..r).map(|k| k * e).collect();
    Ok((degrees, codegrees, e * (r - 1)))
}

/// Divisibility counts over degrees and codegrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RegularVerdict {
    pub regular: bool,
    pub degrees_divisible: usize,
    pub codegrees_divisible: usize,
}

/// `p` is a regular number exactly when as many degrees as codegrees are
/// divisible by `p`; for these groups that happens exactly when `p | r`.
pub fn is_regular(p: u32, params: DeerParams) -> Result<RegularVerdict, ReflectionError> {
    let (degrees, codegrees, _) = degrees_codegrees(params)?;
    let a = degrees.iter().filter(|&&x| x % p == 0).count();
    let b = codegrees.iter().filter(|&&x| x % p == 0).count();
    Ok(RegularVerdict {
        regular: a == b,
        degrees_divisible: a,
        codegrees_divisible: b,
    })
}
