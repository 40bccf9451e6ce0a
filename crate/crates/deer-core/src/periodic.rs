//! Periodic elements of `B(de,e,r)`: the rotation `λ = z A t_e ⋯ A t_1`
//! (equal to `ε^e` in the braid model), the central element
//! `μ = z^r (A t_1 t_0)^{e(r-1)}`, and the exact periodicity test.
//!
//! A member braid is periodic iff some power is central, iff its `r`-th
//! power is a power of the full twist. The test therefore computes the
//! normal form of `embed(g)^r` once and reads off the exponent; no
//! conjugacy search is involved, and the verdict is conjugation-invariant.

use serde::Serialize;
use thiserror::Error;

use crate::artin::BraidWord;
use crate::deer::{a_word, DeerError, DeerLetter, DeerParams, DeerWord};
use crate::garside::a_t_product;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PeriodicError {
    #[error("identity needs k ≥ 1, got {0}")]
    BadPower(i64),
    #[error(transparent)]
    Deer(#[from] DeerError),
}

/// `λ = z (A t_e)(A t_{e-1}) ⋯ (A t_1)`; its embedding is `ε^e`.
pub fn lambda_periodic(params: DeerParams) -> DeerWord {
    let z = DeerWord::new(params, vec![DeerLetter::z()]).expect("z is valid");
    z.mul(&a_t_product(params, (1..=params.e as i64).rev()))
        .expect("same params")
}

/// `μ = z^r (A t_1 t_0)^{e(r-1)}`, central, with embedding `Δ^{2e}`.
pub fn mu_element(params: DeerParams) -> DeerWord {
    let (e, r) = (params.e as i64, params.r as i64);
    let z = DeerWord::new(params, vec![DeerLetter::z()]).expect("z is valid");
    let at1t0 = a_word(params)
        .mul(&DeerWord::new(params, vec![DeerLetter::t(1), DeerLetter::t(0)]).expect("valid"))
        .expect("same params");
    z.pow(r).mul(&at1t0.pow(e * (r - 1))).expect("same params")
}

/// Outcome of the periodicity test. When periodic, `embed(g)^r = Δ^{2p}`
/// exactly and `q = p/e` is the exponent of the `λ`-power class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicVerdict {
    pub periodic: bool,
    #[serde(rename = "p")]
    pub epsilon_power: Option<i64>,
    #[serde(rename = "q")]
    pub lambda_power: Option<i64>,
}

/// Tests periodicity by one exact normal-form computation of `embed(g)^r`.
pub fn is_periodic(g: &DeerWord) -> PeriodicVerdict {
    let params = g.params();
    let r = params.r as i64;
    let nf = g.embed().pow(r).normal_form();
    match nf.as_delta_power() {
        Some(dp) if dp % 2 == 0 => {
            let p = dp / 2;
            let e = params.e as i64;
            debug_assert_eq!(p % e, 0, "membership forces e | p");
            debug_assert_eq!(
                p,
                g.embed().winding().expect("members are 1-pure"),
                "the full-twist exponent is the winding number"
            );
            PeriodicVerdict {
                periodic: true,
                epsilon_power: Some(p),
                lambda_power: Some(p / e),
            }
        }
        _ => PeriodicVerdict {
            periodic: false,
            epsilon_power: None,
            lambda_power: None,
        },
    }
}

/// The product identities tying `A t_k ⋯ A t_1` to the rotation braids.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RotationIdentity {
    /// `A t_k A t_{k-1} ⋯ A t_1 = σ_1^{-2k} ε^k` (k ≥ 1)
    PowerProduct { k: i64 },
    /// `(A t_1 t_0)^{r-1} = σ_1^{-2r} Δ^2`
    FullTwist,
    /// `(A t_1 t_0)^{r-1} = A t_{j+r} ⋯ A t_{j+1}` (any j)
    ShiftedProduct { j: i64 },
}

/// Exact embedding check of one rotation identity for rank `r`.
pub fn verify_rotation_identity(id: RotationIdentity, r: u32) -> Result<bool, PeriodicError> {
    let params = DeerParams::new(2, 1, r)?;
    let n = params.strands();
    let at1t0 = a_t_product(params, [1])
        .mul(&DeerWord::new(params, vec![DeerLetter::t(0)])?)
        .expect("same params");
    Ok(match id {
        RotationIdentity::PowerProduct { k } => {
            if k < 1 {
                return Err(PeriodicError::BadPower(k));
            }
            let lhs = a_t_product(params, (1..=k).rev()).embed();
            let sigma1 = BraidWord::from_signed(n, &[1]).expect("n ≥ 3");
            let rhs = sigma1
                .pow(-2 * k)
                .mul(&BraidWord::epsilon_rotation(n).pow(k))
                .expect("same strands");
            lhs.equal(&rhs).expect("same strands")
        }
        RotationIdentity::FullTwist => {
            let lhs = at1t0.pow(r as i64 - 1).embed();
            let sigma1 = BraidWord::from_signed(n, &[1]).expect("n ≥ 3");
            let rhs = sigma1
                .pow(-2 * r as i64)
                .mul(&BraidWord::full_twist(n))
                .expect("same strands");
            lhs.equal(&rhs).expect("same strands")
        }
        RotationIdentity::ShiftedProduct { j } => {
            let lhs = at1t0.pow(r as i64 - 1);
            let rhs = a_t_product(params, (j + 1..=j + r as i64).rev());
            lhs.equal(&rhs).expect("same params")
        }
    })
}

/// `(A t_1) λ (A t_1)^{-1} = τ(λ)` exactly.
pub fn lambda_conjugate_shift(params: DeerParams) -> Result<bool, PeriodicError> {
    let lam = lambda_periodic(params);
    let at1 = a_t_product(params, [1]);
    let lhs = at1.mul(&lam)?.mul(&at1.inverse())?;
    Ok(lhs.equal(&lam.tau())?)
}

/// A deterministic sequence of member words of bounded length, used by the
/// randomized conjugation-invariance suites.
pub fn seeded_members(
    params: DeerParams,
    seed: u64,
    count: usize,
    max_len: usize,
) -> Vec<BraidWord> {
    // xorshift-style generator; enough for sampling letters reproducibly
    let mut state = seed.wrapping_mul(0x9E3779B97F4A7C15).max(1);
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let n = params.strands();
    let mut out = Vec::new();
    while out.len() < count {
        let len = (next() as usize % max_len.max(1)) + 1;
        let signed: Vec<i64> = (0..len)
            .map(|_| {
                let i = (next() as usize % (n - 1)) as i64 + 1;
                if next() % 2 == 0 {
                    i
                } else {
                    -i
                }
            })
            .collect();
        let w = BraidWord::from_signed(n, &signed).expect("indices in range");
        if crate::deer::is_member(&w, params).expect("strand count matches") {
            out.push(w);
        }
    }
    out
}
