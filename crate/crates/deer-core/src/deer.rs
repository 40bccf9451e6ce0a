//! Words in the braid group `B(de,e,r)` over the alphabet
//! `{z} ∪ {t_i | i ∈ ℤ} ∪ {s_j | 3 ≤ j ≤ r}`, together with the faithful
//! embedding into the Artin braid group on `r+1` strands:
//!
//! ```text
//! z   ↦  σ_1^{2e}
//! t_i ↦  σ_1^{-2i} σ_2 σ_1^{2i}
//! s_j ↦  σ_j
//! ```
//!
//! The image is exactly the set of 1-pure braids with winding number ≡ 0
//! mod e, so equality of words is *defined* through the embedding: exact and
//! decidable, with the normal form of [`crate::artin`] as certificate.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::artin::{ArtinError, BraidWord, Sign};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum DeerError {
    #[error("invalid parameters (d={d}, e={e}, r={r}): need d ≥ 2, e ≥ 1, r ≥ 2")]
    BadParams { d: u32, e: u32, r: u32 },
    #[error("s-generator index {index} out of range 3..={r}")]
    BadSIndex { index: u32, r: u32 },
    #[error("affine generator index {index} out of range 1..={r}")]
    BadAffineIndex { index: u32, r: u32 },
    #[error("parameters differ: ({0}) vs ({1})")]
    ParamsMismatch(DeerParams, DeerParams),
    #[error("expected a braid on {expected} strands, got {got}")]
    WrongStrandCount { expected: usize, got: usize },
    #[error("braid is not a member (1-pure with winding ≡ 0 mod e) for {0}")]
    NotMember(DeerParams),
    #[error("operation requires r ≥ 3, got r = {0}")]
    RankTooSmall(u32),
    #[error("word contains a z letter")]
    ZLetterPresent,
    #[error("{0} does not divide {1}")]
    NotADivisor(u32, u32),
    #[error("conjugation precondition failed: x^-1·g·x ≠ h in the braid group")]
    ConjugationMismatch,
    #[error(transparent)]
    Artin(#[from] ArtinError),
}

/// Parameter triple of `B(de,e,r)`. `d` never affects braid-group
/// computations (`B(de,e,r) = B(d'e,e,r)` for `d,d' ≥ 2`); it only matters
/// for the reflection-group projection.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct DeerParams {
    pub d: u32,
    pub e: u32,
    pub r: u32,
}

impl DeerParams {
    pub fn new(d: u32, e: u32, r: u32) -> Result<Self, DeerError> {
        if d < 2 || e < 1 || r < 2 {
            return Err(DeerError::BadParams { d, e, r });
        }
        Ok(DeerParams { d, e, r })
    }

    pub fn strands(&self) -> usize {
        self.r as usize + 1
    }
}

impl fmt::Display for DeerParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={}, e={}, r={}", self.d, self.e, self.r)
    }
}

/// A generator: `z`, `t_i` or `s_j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum DeerGen {
    Z,
    T(i64),
    S(u32),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct DeerLetter {
    pub gen: DeerGen,
    pub sign: Sign,
}

impl DeerLetter {
    pub fn z() -> Self {
        DeerLetter {
            gen: DeerGen::Z,
            sign: Sign::Pos,
        }
    }

    pub fn t(i: i64) -> Self {
        DeerLetter {
            gen: DeerGen::T(i),
            sign: Sign::Pos,
        }
    }

    pub fn s(j: u32) -> Self {
        DeerLetter {
            gen: DeerGen::S(j),
            sign: Sign::Pos,
        }
    }

    pub fn inv(self) -> Self {
        DeerLetter {
            gen: self.gen,
            sign: self.sign.flip(),
        }
    }

    fn fmt_token(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.gen {
            DeerGen::Z => write!(f, "z")?,
            DeerGen::T(i) => write!(f, "t[{i}]")?,
            DeerGen::S(j) => write!(f, "s{j}")?,
        }
        if self.sign == Sign::Neg {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// A word over the generators of `B(de,e,r)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct DeerWord {
    params: DeerParams,
    letters: Vec<DeerLetter>,
}

impl DeerWord {
    pub fn new(params: DeerParams, letters: Vec<DeerLetter>) -> Result<Self, DeerError> {
        for l in &letters {
            if let DeerGen::S(j) = l.gen {
                if j < 3 || j > params.r {
                    return Err(DeerError::BadSIndex {
                        index: j,
                        r: params.r,
                    });
                }
            }
        }
        Ok(DeerWord { params, letters })
    }

    pub fn identity(params: DeerParams) -> Self {
        DeerWord {
            params,
            letters: Vec::new(),
        }
    }

    pub fn params(&self) -> DeerParams {
        self.params
    }

    pub fn letters(&self) -> &[DeerLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// True when every letter is positive.
    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.sign == Sign::Pos)
    }

    pub fn mul(&self, rhs: &DeerWord) -> Result<DeerWord, DeerError> {
        if self.params != rhs.params {
            return Err(DeerError::ParamsMismatch(self.params, rhs.params));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        Ok(DeerWord {
            params: self.params,
            letters,
        })
    }

    pub fn inverse(&self) -> DeerWord {
        DeerWord {
            params: self.params,
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> DeerWord {
        let base = if k >= 0 { self.clone() } else { self.inverse() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        DeerWord {
            params: self.params,
            letters,
        }
    }

    /// The faithful image in the Artin braid group on `r+1` strands.
    pub fn embed(&self) -> BraidWord {
        let n = self.params.strands();
        let e = self.params.e as i64;
        let mut signed: Vec<i64> = Vec::new();
        for l in &self.letters {
            let s = l.sign.as_i64();
            match l.gen {
                DeerGen::Z => {
                    for _ in 0..2 * e {
                        signed.push(s);
                    }
                }
                DeerGen::T(i) => {
                    push_sigma1_power(&mut signed, -2 * i);
                    signed.push(2 * s);
                    push_sigma1_power(&mut signed, 2 * i);
                }
                DeerGen::S(j) => signed.push(j as i64 * s),
            }
        }
        BraidWord::from_signed(n, &signed).expect("indices validated at construction")
    }

    /// Equality in `B(de,e,r)`, decided through the faithful embedding.
    pub fn equal(&self, rhs: &DeerWord) -> Result<bool, DeerError> {
        if self.params != rhs.params {
            return Err(DeerError::ParamsMismatch(self.params, rhs.params));
        }
        Ok(self.embed().equal(&rhs.embed())?)
    }

    /// Letterwise shift `t_i ↦ t_{i+k}`; `z` and the `s_j` are fixed.
    ///
    /// For `k = 1` this is the diagram automorphism `τ`, realized in the
    /// braid model as conjugation by `σ_1^2`.
    pub fn tau_pow(&self, k: i64) -> DeerWord {
        let letters = self
            .letters
            .iter()
            .map(|l| match l.gen {
                DeerGen::T(i) => DeerLetter {
                    gen: DeerGen::T(i + k),
                    sign: l.sign,
                },
                _ => *l,
            })
            .collect();
        DeerWord {
            params: self.params,
            letters,
        }
    }

    pub fn tau(&self) -> DeerWord {
        self.tau_pow(1)
    }

    /// Splits the word as `z^m · tail` with a z-free tail, by pushing every
    /// `z` letter to the front through `t_j z = z t_{j+e}` and `s_j z = z s_j`.
    pub fn semidirect_form(&self) -> SemidirectForm {
        let e = self.params.e as i64;
        let mut suffix_z = vec![0i64; self.letters.len() + 1];
        for (j, l) in self.letters.iter().enumerate().rev() {
            suffix_z[j] = suffix_z[j + 1]
                + match l.gen {
                    DeerGen::Z => l.sign.as_i64(),
                    _ => 0,
                };
        }
        let mut tail_letters = Vec::new();
        for (j, l) in self.letters.iter().enumerate() {
            match l.gen {
                DeerGen::Z => {}
                DeerGen::T(i) => tail_letters.push(DeerLetter {
                    gen: DeerGen::T(i + e * suffix_z[j + 1]),
                    sign: l.sign,
                }),
                DeerGen::S(_) => tail_letters.push(*l),
            }
        }
        SemidirectForm {
            z_exponent: suffix_z[0],
            tail: DeerWord {
                params: self.params,
                letters: tail_letters,
            },
        }
    }

    /// Reduces every `t` index mod `e`, mapping into the corresponding word
    /// of `B(e,e,r)`. Fails on `z` letters.
    pub fn nu_project(&self, e: u32) -> Result<Vec<DeerLetter>, DeerError> {
        nu_project(&self.letters, e)
    }

    /// Regards this word of `B(de',e',r)` as a word of `B(de,e,r)` for a
    /// divisor `e` of `e'`, sending `z ↦ z^{e'/e}`.
    pub fn include_into(&self, e: u32) -> Result<DeerWord, DeerError> {
        let e_from = self.params.e;
        if e == 0 || !e_from.is_multiple_of(e) {
            return Err(DeerError::NotADivisor(e, e_from));
        }
        let params = DeerParams::new(self.params.d, e, self.params.r)?;
        let power = (e_from / e) as usize;
        let mut letters = Vec::new();
        for l in &self.letters {
            match l.gen {
                DeerGen::Z => {
                    for _ in 0..power {
                        letters.push(*l);
                    }
                }
                _ => letters.push(*l),
            }
        }
        Ok(DeerWord { params, letters })
    }

    /// True when the word commutes with every generator. Commuting with
    /// `z, t_0, t_1, s_3 … s_r` suffices: those generate the whole group,
    /// since every `t_i` is a product of `t_0, t_1` and their inverses.
    pub fn is_central(&self) -> Result<bool, DeerError> {
        let mut gens = vec![DeerLetter::z(), DeerLetter::t(0), DeerLetter::t(1)];
        for j in 3..=self.params.r {
            gens.push(DeerLetter::s(j));
        }
        for g in gens {
            let gw = DeerWord::new(self.params, vec![g])?;
            let lhs = self.mul(&gw)?;
            let rhs = gw.mul(self)?;
            if !lhs.equal(&rhs)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for DeerWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "(empty)");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            l.fmt_token(f)?;
        }
        Ok(())
    }
}

fn push_sigma1_power(signed: &mut Vec<i64>, k: i64) {
    for _ in 0..k.unsigned_abs() {
        signed.push(if k >= 0 { 1 } else { -1 });
    }
}

/// Letterwise reduction of `t` indices mod `e`; `s` letters pass through.
pub fn nu_project(letters: &[DeerLetter], e: u32) -> Result<Vec<DeerLetter>, DeerError> {
    let e = e as i64;
    letters
        .iter()
        .map(|l| match l.gen {
            DeerGen::Z => Err(DeerError::ZLetterPresent),
            DeerGen::T(i) => Ok(DeerLetter {
                gen: DeerGen::T(i.rem_euclid(e)),
                sign: l.sign,
            }),
            DeerGen::S(_) => Ok(*l),
        })
        .collect()
}

/// `z^m · tail` with `tail` free of `z` letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemidirectForm {
    pub z_exponent: i64,
    pub tail: DeerWord,
}

impl SemidirectForm {
    /// Reassembles `z^m · tail`.
    pub fn to_word(&self) -> DeerWord {
        let params = self.tail.params();
        let mut letters = Vec::new();
        let sign = Sign::of(self.z_exponent);
        for _ in 0..self.z_exponent.unsigned_abs() {
            letters.push(DeerLetter {
                gen: DeerGen::Z,
                sign,
            });
        }
        letters.extend_from_slice(self.tail.letters());
        DeerWord { params, letters }
    }
}

/// Membership of a braid in the embedded copy of `B(de,e,r)`: 1-pure with
/// winding number divisible by `e`.
pub fn is_member(w: &BraidWord, params: DeerParams) -> Result<bool, DeerError> {
    if w.strands() != params.strands() {
        return Err(DeerError::WrongStrandCount {
            expected: params.strands(),
            got: w.strands(),
        });
    }
    let one = std::iter::once(1usize).collect();
    if !w.is_pure(&one)? {
        return Ok(false);
    }
    Ok(w.winding()? % params.e as i64 == 0)
}

/// Rewrites a member braid as a word over `{z, t_i, s_j}`.
///
/// The first strand's running position indexes a Schreier transversal
/// `c_p = σ_1 ⋯ σ_{p-1}`; each input letter contributes the subgroup element
/// `c_p · σ_i^{±1} · c_{p'}^{-1}`, which is either trivial, a shifted
/// generator `σ_i` / `σ_{i+1}`, or the loop of strand 1 around strand `q`,
/// `g_q = σ_{q-1}^{-1} ⋯ σ_2^{-1} σ_1^2 σ_2 ⋯ σ_{q-1}`. The resulting word in
/// `{σ_1^2, σ_2, …, σ_r}` maps onto `{z_1, t_0, s_j}`; pushing the `z_1`
/// letters to the front leaves `z_1^m · tail` with `e | m`, i.e.
/// `z^{m/e} · tail` in `B(de,e,r)`.
pub fn rewrite_to_deer(w: &BraidWord, params: DeerParams) -> Result<DeerWord, DeerError> {
    if !is_member(w, params)? {
        return Err(DeerError::NotMember(params));
    }
    // Alphabet of B(d,1,r): z_1 = σ_1^2, t_0 = σ_2, s_j = σ_j.
    let mut raw: Vec<DeerLetter> = Vec::new();
    let emit_sigma = |raw: &mut Vec<DeerLetter>, j: usize, sign: Sign| {
        let gen = if j == 2 {
            DeerGen::T(0)
        } else {
            DeerGen::S(j as u32)
        };
        raw.push(DeerLetter { gen, sign });
    };
    // g_q over the same alphabet
    let loop_around = |raw: &mut Vec<DeerLetter>, q: usize, sign: Sign| {
        let mut conj: Vec<DeerLetter> = Vec::new();
        for j in 3..q {
            conj.push(DeerLetter::s(j as u32));
        }
        if q >= 3 {
            conj.push(DeerLetter::t(0));
        }
        for l in conj.iter().rev() {
            raw.push(l.inv());
        }
        raw.push(DeerLetter {
            gen: DeerGen::Z,
            sign,
        });
        raw.extend_from_slice(&conj);
    };
    let mut p = 1usize; // position of strand 1
    for l in w.letters() {
        let i = l.index;
        if i == p {
            if l.sign == Sign::Neg {
                loop_around(&mut raw, p + 1, Sign::Neg);
            }
            p += 1;
        } else if i + 1 == p {
            if l.sign == Sign::Pos {
                loop_around(&mut raw, p, Sign::Pos);
            }
            p -= 1;
        } else if i > p {
            emit_sigma(&mut raw, i, l.sign);
        } else {
            // i ≤ p-2: the transversal shifts σ_i to σ_{i+1}
            emit_sigma(&mut raw, i + 1, l.sign);
        }
    }
    debug_assert_eq!(p, 1, "1-purity checked above");
    // Push z_1 letters to the front: t_j z_1 = z_1 t_{j+1}.
    let mut suffix_z = vec![0i64; raw.len() + 1];
    for (j, l) in raw.iter().enumerate().rev() {
        suffix_z[j] = suffix_z[j + 1]
            + match l.gen {
                DeerGen::Z => l.sign.as_i64(),
                _ => 0,
            };
    }
    let m = suffix_z[0];
    let e = params.e as i64;
    debug_assert_eq!(m % e, 0, "winding multiple of e checked above");
    let mut letters = Vec::new();
    let zsign = Sign::of(m / e);
    for _ in 0..(m / e).unsigned_abs() {
        letters.push(DeerLetter {
            gen: DeerGen::Z,
            sign: zsign,
        });
    }
    for (j, l) in raw.iter().enumerate() {
        match l.gen {
            DeerGen::Z => {}
            DeerGen::T(i) => letters.push(DeerLetter {
                gen: DeerGen::T(i + suffix_z[j + 1]),
                sign: l.sign,
            }),
            DeerGen::S(_) => letters.push(*l),
        }
    }
    DeerWord::new(params, letters)
}

/// A witness that `τ` is inner: `x = σ_1^2 Δ^{2k}` with `kr + 1 ≡ 0 mod e`,
/// so that `x` is a member and `x^{-1} g x = τ(g)` for every member `g`.
/// Exists precisely when `gcd(e, r) = 1`.
pub fn tau_inner_witness(params: DeerParams) -> Option<(i64, BraidWord)> {
    let e = params.e as i64;
    let r = params.r as i64;
    if gcd(e, r) != 1 {
        return None;
    }
    let k = (0..e.max(1)).find(|k| (k * r + 1) % e == 0)?;
    let n = params.strands();
    let x = BraidWord::from_signed(n, &[1, 1])
        .expect("n ≥ 3")
        .mul(&BraidWord::full_twist(n).pow(k))
        .expect("same strand count");
    Some((k, x))
}

/// Converts a conjugation in `B(d,1,r) ≅ B_{r+1,1}` into one inside
/// `B(de,e,r)`: given `x^{-1}·g·x = h` with `x` 1-pure, returns `k` with
/// `0 ≤ k < e` and `y = x σ_1^{2k}`, a member satisfying
/// `y^{-1}·g·y = τ^k(h)`. Both the precondition and the postcondition are
/// checked exactly.
pub fn transfer_conjugation(
    g: &DeerWord,
    h: &DeerWord,
    x: &BraidWord,
) -> Result<(i64, BraidWord), DeerError> {
    let params = g.params();
    if h.params() != params {
        return Err(DeerError::ParamsMismatch(params, h.params()));
    }
    if x.strands() != params.strands() {
        return Err(DeerError::WrongStrandCount {
            expected: params.strands(),
            got: x.strands(),
        });
    }
    let ge = g.embed();
    let he = h.embed();
    let conj = ge.conjugated_by(x)?;
    if !conj.equal(&he)? {
        return Err(DeerError::ConjugationMismatch);
    }
    let e = params.e as i64;
    let k = (-x.winding()?).rem_euclid(e);
    let sigma1_2k = BraidWord::from_signed(params.strands(), &[1, 1])
        .expect("n ≥ 3")
        .pow(k);
    let y = x.mul(&sigma1_2k)?;
    // postcondition, checked inline
    assert!(is_member(&y, params)?, "transfer produced a non-member");
    assert!(
        ge.conjugated_by(&y)?.equal(&h.tau_pow(k).embed())?,
        "transfer conjugation does not realize the shifted target"
    );
    Ok((k, y))
}

/// The descending product `A = s_r s_{r-1} ⋯ s_3` (empty for `r = 2`).
pub fn a_word(params: DeerParams) -> DeerWord {
    let letters = (3..=params.r).rev().map(DeerLetter::s).collect();
    DeerWord { params, letters }
}

/// Generator of the center, `z^{r/gcd(e,r)} (A t_1 t_0)^{e(r-1)/gcd(e,r)}`;
/// its embedding is the full-twist power `(Δ^2)^{e/gcd(e,r)}`.
pub fn center_element(params: DeerParams) -> DeerWord {
    let e = params.e as i64;
    let r = params.r as i64;
    let g = gcd(e, r);
    let z = DeerWord::new(params, vec![DeerLetter::z()]).expect("z is always valid");
    let at1t0 = a_word(params)
        .mul(&DeerWord::new(params, vec![DeerLetter::t(1), DeerLetter::t(0)]).expect("valid"))
        .expect("same params");
    z.pow(r / g)
        .mul(&at1t0.pow(e * (r - 1) / g))
        .expect("same params")
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// A word over the affine-type alphabet `{z, s_1, …, s_r}` (r ≥ 3).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct AtildeWord {
    params: DeerParams,
    letters: Vec<AtildeLetter>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum AtildeGen {
    Z,
    S(u32),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct AtildeLetter {
    pub gen: AtildeGen,
    pub sign: Sign,
}

impl AtildeWord {
    pub fn new(params: DeerParams, letters: Vec<AtildeLetter>) -> Result<Self, DeerError> {
        if params.r < 3 {
            return Err(DeerError::RankTooSmall(params.r));
        }
        for l in &letters {
            if let AtildeGen::S(i) = l.gen {
                if i < 1 || i > params.r {
                    return Err(DeerError::BadAffineIndex {
                        index: i,
                        r: params.r,
                    });
                }
            }
        }
        Ok(AtildeWord { params, letters })
    }

    pub fn params(&self) -> DeerParams {
        self.params
    }

    pub fn letters(&self) -> &[AtildeLetter] {
        &self.letters
    }

    /// Image in the Artin braid group: `s_1 ↦ A σ_1^{-2} σ_2 σ_1^2 A^{-1}`
    /// with `A = σ_r ⋯ σ_3`, `s_j ↦ σ_j` for `j ≥ 2`, `z ↦ σ_1^{2e}`.
    pub fn embed(&self) -> BraidWord {
        let n = self.params.strands();
        let e = self.params.e as i64;
        let mut signed = Vec::new();
        for l in &self.letters {
            let s = l.sign.as_i64();
            match l.gen {
                AtildeGen::Z => {
                    for _ in 0..2 * e {
                        signed.push(s);
                    }
                }
                AtildeGen::S(1) => {
                    for j in (3..=self.params.r as i64).rev() {
                        signed.push(j);
                    }
                    signed.extend_from_slice(&[-1, -1]);
                    signed.push(2 * s);
                    signed.extend_from_slice(&[1, 1]);
                    for j in 3..=self.params.r as i64 {
                        signed.push(-j);
                    }
                }
                AtildeGen::S(j) => signed.push(j as i64 * s),
            }
        }
        BraidWord::from_signed(n, &signed).expect("indices validated at construction")
    }

    /// The rotation automorphism of the affine diagram, `s_i ↦ s_{i+1 mod r}`;
    /// realized in the braid model as conjugation by `ε`. Rejects `z`.
    pub fn kappa(&self) -> Result<AtildeWord, DeerError> {
        let r = self.params.r;
        let letters = self
            .letters
            .iter()
            .map(|l| match l.gen {
                AtildeGen::Z => Err(DeerError::ZLetterPresent),
                AtildeGen::S(i) => Ok(AtildeLetter {
                    gen: AtildeGen::S(i % r + 1),
                    sign: l.sign,
                }),
            })
            .collect::<Result<_, _>>()?;
        Ok(AtildeWord {
            params: self.params,
            letters,
        })
    }
}

impl fmt::Display for AtildeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "(empty)");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            match l.gen {
                AtildeGen::Z => write!(f, "z")?,
                AtildeGen::S(i) => write!(f, "s{i}")?,
            }
            if l.sign == Sign::Neg {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// The affine generator `s_i` expressed over `{t_i, s_j}`:
/// `s_1 = A t_1 A^{-1}`, `s_2 = t_0`, `s_j = s_j` for `j ≥ 3`.
pub fn atilde_generator(params: DeerParams, i: u32) -> Result<DeerWord, DeerError> {
    if params.r < 3 {
        return Err(DeerError::RankTooSmall(params.r));
    }
    if i < 1 || i > params.r {
        return Err(DeerError::BadAffineIndex {
            index: i,
            r: params.r,
        });
    }
    match i {
        1 => {
            let a = a_word(params);
            let t1 = DeerWord::new(params, vec![DeerLetter::t(1)])?;
            a.mul(&t1)?.mul(&a.inverse())
        }
        2 => DeerWord::new(params, vec![DeerLetter::t(0)]),
        j => DeerWord::new(params, vec![DeerLetter::s(j)]),
    }
}
