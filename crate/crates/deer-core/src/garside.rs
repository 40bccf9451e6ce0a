//! The quasi-Garside element `Λ = (A t_1 t_0)^{r-1}` of the positive monoid
//! of `B(∞,∞,r)`, the Garside elements `z^p Λ^q` of the `B(de,e,r)` monoid,
//! and windowed divisor enumeration.
//!
//! The divisor sets of `Λ` are genuinely infinite (every `t_i` divides it),
//! so enumeration is restricted to words over a finite generator window and
//! a length cap, and reports say so explicitly. Every claim is verified
//! twice: by word reversing in the monoid presentation and by exact
//! equality under the braid embedding.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::artin::NormalForm;
use crate::deer::{a_word, DeerError, DeerGen, DeerLetter, DeerParams, DeerWord};
use crate::presentations::{positive_presentation, PresError, PresentationId};
use crate::reversing::{
    Divides, GenId, MonoidVerdict, PositivePresentation, PresentationError,
};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GarsideError {
    #[error("identity requires r ≥ {needed}, got r = {got}")]
    RankTooSmall { needed: u32, got: u32 },
    #[error("s-index {0} out of range for the shift identity (3..r-1)")]
    BadShiftIndex(u32),
    #[error("exponents must be ≥ 1, got p={0}, q={1}")]
    BadExponents(i64, i64),
    #[error("divisor enumeration needs a positive word")]
    NotPositive,
    #[error(transparent)]
    Deer(#[from] DeerError),
    #[error(transparent)]
    Pres(#[from] PresError),
    #[error(transparent)]
    Reversing(#[from] PresentationError),
}

/// `Λ = (A t_1 t_0)^{r-1}` with `A = s_r ⋯ s_3`.
pub fn lambda_element(params: DeerParams) -> DeerWord {
    let at1t0 = a_word(params)
        .mul(&DeerWord::new(params, vec![DeerLetter::t(1), DeerLetter::t(0)]).expect("valid"))
        .expect("same params");
    at1t0.pow(params.r as i64 - 1)
}

/// Product `(A t_{i_1})(A t_{i_2}) ⋯` over the given indices.
pub fn a_t_product(params: DeerParams, indices: impl IntoIterator<Item = i64>) -> DeerWord {
    let a = a_word(params);
    let mut acc = DeerWord::identity(params);
    for i in indices {
        let ti = DeerWord::new(params, vec![DeerLetter::t(i)]).expect("t letters always valid");
        acc = acc.mul(&a).expect("params").mul(&ti).expect("params");
    }
    acc
}

/// The structural identities of the quasi-Garside element.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GarsideIdentity {
    /// `Λ ≐ (A t_r)(A t_{r-1}) ⋯ (A t_1)`
    AltFactorization,
    /// `Λ g ≐ τ^r(g) Λ` for a generator `g`
    TwistCommutation(DeerGen),
    /// `t_i (A t_i) ≐ (A t_i) s_3`
    LocalShiftT(i64),
    /// `s_j (A t_i) ≐ (A t_i) s_{j+1}` for `3 ≤ j ≤ r-1`
    LocalShiftS { j: u32, i: i64 },
    /// the type-B relations hold for `b_1 ↦ t_1 t_0`, `b_i ↦ s_{i+1}`
    PsiEmbedding,
}

/// One verified equality: the words, the reversing verdict, and the exact
/// embedding verdict.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
    pub reversing: MonoidVerdict,
    pub embedding: bool,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.embedding && !self.reversing.is_false()
    }

    /// Both routes confirmed the identity.
    pub fn doubly_confirmed(&self) -> bool {
        self.embedding && self.reversing.is_true()
    }
}

fn check_pair(
    pres: &PositivePresentation,
    label: String,
    lhs: &DeerWord,
    rhs: &DeerWord,
    fuel: u64,
) -> IdentityCheck {
    let reversing = pres
        .monoid_equal(
            &to_pres_word(pres, lhs),
            &to_pres_word(pres, rhs),
            fuel,
        )
        .expect("window contains all letters");
    let embedding = lhs.equal(rhs).expect("same params");
    IdentityCheck {
        label,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        reversing,
        embedding,
    }
}

fn to_pres_word(pres: &PositivePresentation, w: &DeerWord) -> Vec<GenId> {
    w.letters()
        .iter()
        .map(|l| {
            let name = match l.gen {
                DeerGen::Z => "z".to_string(),
                DeerGen::T(i) => format!("t[{i}]"),
                DeerGen::S(j) => format!("s{j}"),
            };
            pres.generator_id(&name)
                .unwrap_or_else(|| panic!("generator {name} not in presentation window"))
        })
        .collect()
}

/// Largest |i| over the `t_i` letters of the given words; the reversing
/// window must extend at least this far.
fn max_t_index(words: &[&DeerWord]) -> i64 {
    words
        .iter()
        .flat_map(|w| w.letters())
        .filter_map(|l| match l.gen {
            DeerGen::T(i) => Some(i.abs()),
            _ => None,
        })
        .max()
        .unwrap_or(0)
}

/// Presentation of the positive monoid with a window wide enough for all
/// words involved in a check on `[-n, n]` indices.
pub fn padded_presentation(
    params: DeerParams,
    window: i64,
    padding: i64,
) -> Result<PositivePresentation, GarsideError> {
    Ok(positive_presentation(
        PresentationId::NewDeer,
        params,
        window + padding,
    )?)
}

/// Verifies one named identity, both by word reversing and through the
/// embedding oracle.
pub fn verify_garside_identity(
    id: GarsideIdentity,
    params: DeerParams,
    fuel: u64,
) -> Result<Vec<IdentityCheck>, GarsideError> {
    let r = params.r;
    let arg_reach = match id {
        GarsideIdentity::TwistCommutation(DeerGen::T(i)) => i.abs(),
        GarsideIdentity::LocalShiftT(i) | GarsideIdentity::LocalShiftS { i, .. } => i.abs(),
        _ => 0,
    };
    let pad = 2 * r as i64 + params.e as i64 + arg_reach + 4;
    let pres = padded_presentation(params, 0, pad)?;
    let lambda = lambda_element(params);
    let mut checks = Vec::new();
    match id {
        GarsideIdentity::AltFactorization => {
            let rhs = a_t_product(params, (1..=r as i64).rev());
            checks.push(check_pair(
                &pres,
                "alt_factorization".into(),
                &lambda,
                &rhs,
                fuel,
            ));
        }
        GarsideIdentity::TwistCommutation(gen) => {
            let g = DeerWord::new(params, vec![DeerLetter { gen, sign: crate::artin::Sign::Pos }])?;
            let lhs = lambda.mul(&g)?;
            let rhs = g.tau_pow(r as i64).mul(&lambda)?;
            checks.push(check_pair(
                &pres,
                format!("twist_commutation[{g}]"),
                &lhs,
                &rhs,
                fuel,
            ));
        }
        GarsideIdentity::LocalShiftT(i) => {
            if r < 3 {
                return Err(GarsideError::RankTooSmall { needed: 3, got: r });
            }
            let ati = a_t_product(params, [i]);
            let ti = DeerWord::new(params, vec![DeerLetter::t(i)])?;
            let s3 = DeerWord::new(params, vec![DeerLetter::s(3)])?;
            let lhs = ti.mul(&ati)?;
            let rhs = ati.mul(&s3)?;
            checks.push(check_pair(
                &pres,
                format!("local_shift_t[i={i}]"),
                &lhs,
                &rhs,
                fuel,
            ));
        }
        GarsideIdentity::LocalShiftS { j, i } => {
            if r < 4 {
                return Err(GarsideError::RankTooSmall { needed: 4, got: r });
            }
            if j < 3 || j >= r {
                return Err(GarsideError::BadShiftIndex(j));
            }
            let ati = a_t_product(params, [i]);
            let sj = DeerWord::new(params, vec![DeerLetter::s(j)])?;
            let sj1 = DeerWord::new(params, vec![DeerLetter::s(j + 1)])?;
            let lhs = sj.mul(&ati)?;
            let rhs = ati.mul(&sj1)?;
            checks.push(check_pair(
                &pres,
                format!("local_shift_s[j={j},i={i}]"),
                &lhs,
                &rhs,
                fuel,
            ));
        }
        GarsideIdentity::PsiEmbedding => {
            if r < 3 {
                return Err(GarsideError::RankTooSmall { needed: 3, got: r });
            }
            // b_1 ↦ t_1 t_0, b_i ↦ s_{i+1} for 2 ≤ i ≤ r-1
            let image = |idx: u32| -> DeerWord {
                if idx == 1 {
                    DeerWord::new(params, vec![DeerLetter::t(1), DeerLetter::t(0)]).expect("valid")
                } else {
                    DeerWord::new(params, vec![DeerLetter::s(idx + 1)]).expect("valid")
                }
            };
            let rels =
                crate::presentations::catalog(PresentationId::TypeB, DeerParams::new(params.d, params.e, r - 1)?, 0)?;
            for rel in rels {
                let eval = |side: &[crate::presentations::PresGen]| -> DeerWord {
                    let mut acc = DeerWord::identity(params);
                    for g in side {
                        let crate::presentations::PresGen::B(i) = g else {
                            unreachable!("type-B alphabet")
                        };
                        acc = acc.mul(&image(*i)).expect("params");
                    }
                    acc
                };
                let lhs = eval(&rel.lhs);
                let rhs = eval(&rel.rhs);
                checks.push(check_pair(
                    &pres,
                    format!("psi_embedding[{}]", rel.label),
                    &lhs,
                    &rhs,
                    fuel,
                ));
            }
        }
    }
    Ok(checks)
}

/// Windowed divisor enumeration report. Divisor sets of `Λ` are infinite;
/// everything here is relative to the generator window and the length cap.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DivisorReport {
    pub element: String,
    pub window: i64,
    pub length_cap: usize,
    pub left_divisors: Vec<String>,
    pub right_divisors: Vec<String>,
    pub equal_within_window: bool,
    pub exhausted_flags: Vec<String>,
}

struct DivisorSet {
    /// canonical normal form of the embedding → first word found
    by_class: HashMap<NormalForm, String>,
    ordered: Vec<String>,
    exhausted: Vec<String>,
}

/// BFS over positive words in the window alphabet, keeping those that
/// divide `w` on the chosen side. Divisors are deduplicated by the normal
/// form of their embedding; the representative is the first word in
/// (length, generator-order) breadth-first order.
fn divisor_bfs(
    w: &DeerWord,
    window: i64,
    length_cap: usize,
    fuel: u64,
    pres: &PositivePresentation,
    right_side: bool,
) -> Result<DivisorSet, GarsideError> {
    let params = w.params();
    let mut alphabet: Vec<DeerLetter> = vec![DeerLetter::z()];
    for i in -window..=window {
        alphabet.push(DeerLetter::t(i));
    }
    for j in 3..=params.r {
        alphabet.push(DeerLetter::s(j));
    }
    let target: Vec<GenId> = {
        let mut word = to_pres_word(pres, w);
        if right_side {
            word.reverse();
        }
        word
    };
    let mut set = DivisorSet {
        by_class: HashMap::new(),
        ordered: Vec::new(),
        exhausted: Vec::new(),
    };
    let empty = DeerWord::identity(params);
    set.by_class
        .insert(empty.embed().normal_form(), "(empty)".to_string());
    set.ordered.push("(empty)".to_string());
    // queue of divisors as deer words (in reading order)
    let mut queue: Vec<DeerWord> = vec![empty];
    let mut head = 0usize;
    while head < queue.len() {
        let d = queue[head].clone();
        head += 1;
        if d.len() >= length_cap {
            continue;
        }
        for &g in &alphabet {
            let candidate = if right_side {
                DeerWord::new(params, {
                    let mut ls = vec![g];
                    ls.extend_from_slice(d.letters());
                    ls
                })?
            } else {
                d.mul(&DeerWord::new(params, vec![g])?)?
            };
            let cand_pres: Vec<GenId> = {
                let mut word = to_pres_word(pres, &candidate);
                if right_side {
                    word.reverse();
                }
                word
            };
            match pres.divides_left(&cand_pres, &target, fuel)? {
                Divides::Yes { .. } => {
                    let key = candidate.embed().normal_form();
                    if let std::collections::hash_map::Entry::Vacant(slot) =
                        set.by_class.entry(key)
                    {
                        slot.insert(candidate.to_string());
                        set.ordered.push(candidate.to_string());
                        queue.push(candidate);
                    }
                }
                Divides::No => {}
                Divides::Inconclusive => {
                    set.exhausted.push(format!(
                        "{} ({})",
                        candidate,
                        if right_side { "right" } else { "left" }
                    ));
                }
            }
        }
    }
    Ok(set)
}

/// Left and right divisors of a positive word within the window, certified
/// by reversing and canonicalized through the embedding.
pub fn divisors(
    w: &DeerWord,
    window: i64,
    length_cap: usize,
    fuel: u64,
) -> Result<DivisorReport, GarsideError> {
    if !w.is_positive() {
        return Err(GarsideError::NotPositive);
    }
    let params = w.params();
    let pad = w.len() as i64 + params.e as i64 + params.r as i64 + max_t_index(&[w]) + 2;
    let pres = padded_presentation(params, window, pad)?;
    let mirrored = pres.mirrored();
    let left = divisor_bfs(w, window, length_cap, fuel, &pres, false)?;
    let right = divisor_bfs(w, window, length_cap, fuel, &mirrored, true)?;
    let equal_within_window = {
        let lk: std::collections::HashSet<_> = left.by_class.keys().collect();
        let rk: std::collections::HashSet<_> = right.by_class.keys().collect();
        lk == rk
    };
    let mut exhausted_flags = left.exhausted;
    exhausted_flags.extend(right.exhausted);
    Ok(DivisorReport {
        element: w.to_string(),
        window,
        length_cap,
        left_divisors: left.ordered,
        right_divisors: right.ordered,
        equal_within_window,
        exhausted_flags,
    })
}

/// `z^p Λ^q` together with its centrality verdict; central exactly when
/// `p·e = q·r`.
#[derive(Clone, Debug, Serialize)]
pub struct GarsideElementReport {
    pub word: String,
    pub central: bool,
    pub central_expected: bool,
}

pub fn garside_element(
    params: DeerParams,
    p: i64,
    q: i64,
) -> Result<(DeerWord, GarsideElementReport), GarsideError> {
    if p < 1 || q < 1 {
        return Err(GarsideError::BadExponents(p, q));
    }
    let z = DeerWord::new(params, vec![DeerLetter::z()])?;
    let word = z.pow(p).mul(&lambda_element(params).pow(q))?;
    let central = word.is_central()?;
    let central_expected = p * params.e as i64 == q * params.r as i64;
    let report = GarsideElementReport {
        word: word.to_string(),
        central,
        central_expected,
    };
    Ok((word, report))
}

impl fmt::Display for DivisorReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "element: {}", self.element)?;
        writeln!(
            f,
            "window: [-{}, {}], length cap {}",
            self.window, self.window, self.length_cap
        )?;
        writeln!(f, "left divisors ({}):", self.left_divisors.len())?;
        for d in &self.left_divisors {
            writeln!(f, "  {d}")?;
        }
        writeln!(f, "right divisors ({}):", self.right_divisors.len())?;
        for d in &self.right_divisors {
            writeln!(f, "  {d}")?;
        }
        writeln!(f, "equal within window: {}", self.equal_within_window)?;
        if !self.exhausted_flags.is_empty() {
            writeln!(f, "window/fuel exhausted for:")?;
            for d in &self.exhausted_flags {
                writeln!(f, "  {d}")?;
            }
        }
        Ok(())
    }
}
