//! Exact arithmetic in the Artin braid group on `n` strands.
//!
//! Words in the generators `σ_1 … σ_{n-1}` are brought to left-canonical
//! (left-greedy) normal form: a power of the half twist `Δ` followed by a
//! left-weighted sequence of permutation braids. Two words represent the same
//! braid exactly when their normal forms coincide, which makes [`NormalForm`]
//! the equality oracle for the rest of the crate.
//!
//! The module also carries the geometric operations used throughout: induced
//! permutations, purity and straightness of strand subsets, strand removal,
//! and the winding number of a 1-pure braid around the first strand.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Sign of a single generator occurrence.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn of(k: i64) -> Sign {
        if k >= 0 {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ArtinError {
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("braid needs at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("strand label {label} out of range for {strands} strands")]
    BadStrandLabel { label: usize, strands: usize },
    #[error("word is not 1-pure")]
    NotOnePure,
}

/// One letter `σ_index^±1`; indices are 1-based and range over `1..strands`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct ArtinLetter {
    pub index: usize,
    pub sign: Sign,
}

/// A word in the Artin generators of the braid group on `strands` strands.
///
/// The empty word is the identity braid. Words are plain sequences: no
/// reduction happens on construction, so `len` is the literal letter count.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<ArtinLetter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<ArtinLetter>) -> Result<Self, ArtinError> {
        if strands < 2 {
            return Err(ArtinError::TooFewStrands(strands));
        }
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                return Err(ArtinError::IndexOutOfRange {
                    index: l.index,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// Builds a word from signed indices: `k > 0` is `σ_k`, `k < 0` is `σ_{-k}^{-1}`.
    pub fn from_signed(strands: usize, signed: &[i64]) -> Result<Self, ArtinError> {
        let letters = signed
            .iter()
            .map(|&k| ArtinLetter {
                index: k.unsigned_abs() as usize,
                sign: Sign::of(k),
            })
            .collect();
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[ArtinLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, rhs: &BraidWord) -> Result<BraidWord, ArtinError> {
        if self.strands != rhs.strands {
            return Err(ArtinError::StrandMismatch(self.strands, rhs.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|l| ArtinLetter {
                index: l.index,
                sign: l.sign.flip(),
            })
            .collect();
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k >= 0 { self.clone() } else { self.inverse() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Conjugate `x^{-1} · self · x`.
    pub fn conjugated_by(&self, x: &BraidWord) -> Result<BraidWord, ArtinError> {
        x.inverse().mul(self)?.mul(x)
    }

    /// Removes adjacent `σ_i σ_i^{-1}` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<ArtinLetter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last() {
                Some(&t) if t.index == l.index && t.sign == l.sign.flip() => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    /// Image under the projection to the symmetric group.
    pub fn permutation(&self) -> Permutation {
        let n = self.strands;
        let mut img: Vec<usize> = (0..n).collect();
        for l in &self.letters {
            img.swap(l.index - 1, l.index);
        }
        // img was built by tracking positions: img[p] = strand currently at p.
        // Invert so that result maps start position to end position.
        let mut res = vec![0usize; n];
        for (pos, &strand) in img.iter().enumerate() {
            res[strand] = pos;
        }
        Permutation { img: res }
    }

    /// True when the induced permutation fixes every strand label in `labels` (1-based).
    pub fn is_pure(&self, labels: &BTreeSet<usize>) -> Result<bool, ArtinError> {
        for &i in labels {
            if i == 0 || i > self.strands {
                return Err(ArtinError::BadStrandLabel {
                    label: i,
                    strands: self.strands,
                });
            }
        }
        let p = self.permutation();
        Ok(labels.iter().all(|&i| p.image_of(i) == i))
    }

    /// Deletes every strand whose starting position is not in `keep`,
    /// re-indexing the surviving positions. Crossings between two surviving
    /// strands are kept (at their re-indexed position); all others vanish.
    /// The output is freely reduced.
    pub fn remove_strands(&self, keep: &BTreeSet<usize>) -> Result<BraidWord, ArtinError> {
        for &i in keep {
            if i == 0 || i > self.strands {
                return Err(ArtinError::BadStrandLabel {
                    label: i,
                    strands: self.strands,
                });
            }
        }
        let n = self.strands;
        let m = keep.len().max(2);
        // at[p] = starting label of the strand currently at position p (1-based labels).
        let mut at: Vec<usize> = (1..=n).collect();
        let mut letters = Vec::new();
        for l in &self.letters {
            let (a, b) = (at[l.index - 1], at[l.index]);
            if keep.contains(&a) && keep.contains(&b) {
                // position among surviving strands only
                let idx = at[..l.index - 1].iter().filter(|s| keep.contains(s)).count() + 1;
                letters.push(ArtinLetter {
                    index: idx,
                    sign: l.sign,
                });
            }
            at.swap(l.index - 1, l.index);
        }
        Ok(BraidWord { strands: m, letters }.free_reduce())
    }

    /// `keep`-pure and trivial after removing all other strands.
    pub fn is_straight(&self, keep: &BTreeSet<usize>) -> Result<bool, ArtinError> {
        if !self.is_pure(keep)? {
            return Ok(false);
        }
        Ok(self.remove_strands(keep)?.normal_form().is_identity())
    }

    /// Winding number of the other strands around strand 1.
    ///
    /// Counts signed crossings involving the strand that starts at position 1
    /// and halves the total; normalized so `wd(σ_1^2) = 1` and `wd(σ_j) = 0`
    /// for `j ≥ 2`. Only defined on 1-pure braids.
    pub fn winding(&self) -> Result<i64, ArtinError> {
        let mut labels = BTreeSet::new();
        labels.insert(1usize);
        if !self.is_pure(&labels)? {
            return Err(ArtinError::NotOnePure);
        }
        let mut pos = 0usize; // 0-based position of strand 1
        let mut total = 0i64;
        for l in &self.letters {
            let i = l.index - 1;
            if pos == i || pos == i + 1 {
                total += l.sign.as_i64();
                pos = if pos == i { i + 1 } else { i };
            }
        }
        debug_assert!(total % 2 == 0);
        Ok(total / 2)
    }

    /// `δ = σ_{n-1} ⋯ σ_1`, the rotation braid.
    pub fn delta_rotation(strands: usize) -> Self {
        let letters = (1..strands)
            .rev()
            .map(|i| ArtinLetter {
                index: i,
                sign: Sign::Pos,
            })
            .collect();
        BraidWord { strands, letters }
    }

    /// `ε = δ σ_1`, the rotation fixing the first puncture.
    pub fn epsilon_rotation(strands: usize) -> Self {
        let mut w = Self::delta_rotation(strands);
        w.letters.push(ArtinLetter {
            index: 1,
            sign: Sign::Pos,
        });
        w
    }

    /// `ε_1 = (σ_{n-1} ⋯ σ_1) σ_1 σ_2`, the fractional twist around the first two strands.
    pub fn epsilon_one(strands: usize) -> Result<Self, ArtinError> {
        if strands < 3 {
            return Err(ArtinError::TooFewStrands(strands));
        }
        let mut w = Self::delta_rotation(strands);
        w.letters.push(ArtinLetter {
            index: 1,
            sign: Sign::Pos,
        });
        w.letters.push(ArtinLetter {
            index: 2,
            sign: Sign::Pos,
        });
        Ok(w)
    }

    /// The half twist `Δ = σ_1 (σ_2 σ_1) ⋯ (σ_{n-1} ⋯ σ_1)`.
    pub fn half_twist(strands: usize) -> Self {
        let mut letters = Vec::new();
        for k in 1..strands {
            for i in (1..=k).rev() {
                letters.push(ArtinLetter {
                    index: i,
                    sign: Sign::Pos,
                });
            }
        }
        BraidWord { strands, letters }
    }

    /// The full twist `Δ^2`, generator of the center.
    pub fn full_twist(strands: usize) -> Self {
        let h = Self::half_twist(strands);
        h.mul(&h).expect("same strand count")
    }

    pub fn named(name: NamedBraid, strands: usize) -> Result<Self, ArtinError> {
        if strands < 2 {
            return Err(ArtinError::TooFewStrands(strands));
        }
        match name {
            NamedBraid::Delta => Ok(Self::delta_rotation(strands)),
            NamedBraid::Epsilon => Ok(Self::epsilon_rotation(strands)),
            NamedBraid::EpsilonOne => Self::epsilon_one(strands),
            NamedBraid::HalfTwist => Ok(Self::half_twist(strands)),
            NamedBraid::FullTwist => Ok(Self::full_twist(strands)),
        }
    }

    /// Left-canonical normal form; the complete equality invariant.
    ///
    /// No word-length limit is imposed; the cost is quadratic in the word
    /// length (times a factor polynomial in the strand count).
    pub fn normal_form(&self) -> NormalForm {
        let n = self.strands;
        let neg_total = self
            .letters
            .iter()
            .filter(|l| l.sign == Sign::Neg)
            .count() as i64;
        // Decompose each letter as Δ^{e}·F with F a permutation braid,
        // then slide all Δ's to the front. Passing a factor flips it by
        // the inner automorphism of Δ once per crossing delta.
        let mut factors: Vec<Factor> = Vec::with_capacity(self.letters.len());
        let mut neg_after = neg_total;
        for l in &self.letters {
            if l.sign == Sign::Neg {
                neg_after -= 1;
            }
            let mut f = match l.sign {
                Sign::Pos => Factor::transposition(n, l.index - 1),
                Sign::Neg => Factor::delta_over_sigma(n, l.index - 1),
            };
            if neg_after % 2 == 1 {
                f.flip();
            }
            if !f.is_identity() {
                factors.push(f);
            }
        }
        let mut delta_power = -neg_total;
        left_weight_factors(&mut factors);
        let leading = factors
            .iter()
            .take_while(|f| f.is_half_twist())
            .count();
        factors.drain(..leading);
        delta_power += leading as i64;
        NormalForm {
            strands: n,
            delta_power,
            factors: factors
                .into_iter()
                .map(|f| Permutation { img: f.img })
                .collect(),
        }
    }

    /// Equality in the braid group.
    pub fn equal(&self, other: &BraidWord) -> Result<bool, ArtinError> {
        if self.strands != other.strands {
            return Err(ArtinError::StrandMismatch(self.strands, other.strands));
        }
        Ok(self.normal_form() == other.normal_form())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "(empty)");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            match l.sign {
                Sign::Pos => write!(f, "a{}", l.index)?,
                Sign::Neg => write!(f, "a{}^-1", l.index)?,
            }
        }
        Ok(())
    }
}

/// The named braids of the geometric model.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NamedBraid {
    Delta,
    Epsilon,
    EpsilonOne,
    HalfTwist,
    FullTwist,
}

/// A permutation of `{1..n}`, stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Permutation {
    img: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            img: (0..n).collect(),
        }
    }

    pub fn from_images_one_based(images: &[usize]) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return None;
            }
            seen[v - 1] = true;
        }
        Some(Permutation {
            img: images.iter().map(|&v| v - 1).collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.img.len()
    }

    /// Image of a 1-based point.
    pub fn image_of(&self, i: usize) -> usize {
        self.img[i - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self` then `next` as functions on points.
    pub fn then(&self, next: &Permutation) -> Permutation {
        Permutation {
            img: self.img.iter().map(|&v| next.img[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut img = vec![0usize; self.img.len()];
        for (i, &v) in self.img.iter().enumerate() {
            img[v] = i;
        }
        Permutation { img }
    }

    /// One-line notation over `{1..n}`.
    pub fn one_line(&self) -> Vec<usize> {
        self.img.iter().map(|&v| v + 1).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.one_line().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Left-canonical form `Δ^p · F_1 ⋯ F_k` with each `F` a non-trivial,
/// non-`Δ` permutation braid and consecutive factors left-weighted.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct NormalForm {
    pub strands: usize,
    pub delta_power: i64,
    pub factors: Vec<Permutation>,
}

impl NormalForm {
    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// `Some(p)` when the braid is exactly `Δ^p`.
    pub fn as_delta_power(&self) -> Option<i64> {
        if self.factors.is_empty() {
            Some(self.delta_power)
        } else {
            None
        }
    }

    /// Canonical word length `|p|·len(Δ) + Σ len(F_i)`.
    pub fn canonical_length(&self) -> usize {
        let n = self.strands;
        let delta_len = n * (n - 1) / 2;
        let factor_len: usize = self.factors.iter().map(inversions).sum();
        self.delta_power.unsigned_abs() as usize * delta_len + factor_len
    }

    /// Rebuilds a braid word representing this normal form.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let mut w = BraidWord::half_twist(n).pow(self.delta_power);
        for f in &self.factors {
            let fw = permutation_braid_word(n, f);
            w = w.mul(&fw).expect("same strand count");
        }
        w
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.delta_power)?;
        for p in &self.factors {
            write!(f, " . {p}")?;
        }
        Ok(())
    }
}

fn inversions(p: &Permutation) -> usize {
    let v = &p.img;
    let mut c = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                c += 1;
            }
        }
    }
    c
}

/// Writes a permutation braid as a positive word, taking the smallest
/// starting descent first; deterministic.
fn permutation_braid_word(n: usize, p: &Permutation) -> BraidWord {
    let mut img = p.img.clone();
    let mut letters = Vec::new();
    loop {
        let mut moved = false;
        for i in 0..n - 1 {
            if img[i] > img[i + 1] {
                letters.push(ArtinLetter {
                    index: i + 1,
                    sign: Sign::Pos,
                });
                img.swap(i, i + 1);
                moved = true;
                break;
            }
        }
        if !moved {
            break;
        }
    }
    // letters currently peel σ_i from the left of the *inverse* sweep; the
    // construction above peels descents of the underlying permutation, which
    // yields the word read left to right.
    BraidWord {
        strands: n,
        letters,
    }
}

/// Permutation-braid factor with both direction tables, for O(1) descent
/// queries during normalization.
#[derive(Clone, Debug)]
struct Factor {
    img: Vec<usize>,
    inv: Vec<usize>,
}

impl Factor {
    fn transposition(n: usize, i: usize) -> Factor {
        let mut img: Vec<usize> = (0..n).collect();
        img.swap(i, i + 1);
        let inv = img.clone();
        Factor { img, inv }
    }

    /// The permutation braid `D` with `Δ = D·σ_i`, used to split a negative
    /// letter as `σ_i^{-1} = Δ^{-1}·D`.
    fn delta_over_sigma(n: usize, i: usize) -> Factor {
        // π_D = s_i ∘ w0
        let img: Vec<usize> = (0..n)
            .map(|x| {
                let y = n - 1 - x;
                if y == i {
                    i + 1
                } else if y == i + 1 {
                    i
                } else {
                    y
                }
            })
            .collect();
        let mut inv = vec![0usize; n];
        for (a, &b) in img.iter().enumerate() {
            inv[b] = a;
        }
        Factor { img, inv }
    }

    fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| i == v)
    }

    fn is_half_twist(&self) -> bool {
        let n = self.img.len();
        self.img.iter().enumerate().all(|(i, &v)| v == n - 1 - i)
    }

    /// Conjugation by `Δ`: `π ↦ w0 ∘ π ∘ w0`.
    fn flip(&mut self) {
        let n = self.img.len();
        let old = self.img.clone();
        for x in 0..n {
            self.img[x] = n - 1 - old[n - 1 - x];
        }
        for (a, &b) in self.img.iter().enumerate() {
            self.inv[b] = a;
        }
    }

    /// Starting set: `σ_i` is a left factor iff `π(i) > π(i+1)`.
    fn starts_at(&self, i: usize) -> bool {
        self.img[i] > self.img[i + 1]
    }

    /// Finishing set: `σ_i` is a right factor iff `π^{-1}(i) > π^{-1}(i+1)`.
    fn finishes_at(&self, i: usize) -> bool {
        self.inv[i] > self.inv[i + 1]
    }

    /// `self ↦ self · σ_i` (requires `i` not in the finishing set).
    fn append_sigma(&mut self, i: usize) {
        let a = self.inv[i];
        let b = self.inv[i + 1];
        self.img[a] = i + 1;
        self.img[b] = i;
        self.inv.swap(i, i + 1);
    }

    /// `self ↦ σ_i^{-1} · self` (requires `i` in the starting set).
    fn strip_sigma(&mut self, i: usize) {
        self.img.swap(i, i + 1);
        let a = self.img[i];
        let b = self.img[i + 1];
        self.inv[a] = i;
        self.inv[b] = i + 1;
    }
}

/// Moves crossings left until `(a, b)` is left-weighted. Returns true when
/// anything moved.
fn make_left_weighted(a: &mut Factor, b: &mut Factor) -> bool {
    let n = a.img.len();
    let mut changed = false;
    loop {
        let mut moved = false;
        for i in 0..n - 1 {
            if b.starts_at(i) && !a.finishes_at(i) {
                a.append_sigma(i);
                b.strip_sigma(i);
                moved = true;
                changed = true;
            }
        }
        if !moved {
            return changed;
        }
    }
}

/// Left-weights every adjacent pair. Fixing a pair can only disturb its
/// neighbors, so a worklist of boundary positions suffices; factors that
/// empty out are unlinked immediately so crossings never migrate across
/// dead cells.
fn left_weight_factors(fs: &mut Vec<Factor>) {
    let k = fs.len();
    if k < 2 {
        return;
    }
    const NIL: usize = usize::MAX;
    let mut next: Vec<usize> = (0..k).map(|i| if i + 1 < k { i + 1 } else { NIL }).collect();
    let mut prev: Vec<usize> = (0..k)
        .map(|i| if i > 0 { i - 1 } else { NIL })
        .collect();
    let mut head = 0usize;
    let mut alive = vec![true; k];
    // pending pair (a, next[a]); LIFO keeps the action local
    let mut stack: Vec<usize> = (0..k - 1).rev().collect();
    let mut queued = vec![true; k];
    queued[k - 1] = false;
    while let Some(a) = stack.pop() {
        queued[a] = false;
        if !alive[a] {
            continue;
        }
        let b = next[a];
        if b == NIL {
            continue;
        }
        // the chain never reorders cells, so a < b
        let (lo, hi) = fs.split_at_mut(b);
        let changed = make_left_weighted(&mut lo[a], &mut hi[0]);
        let enqueue = |stack: &mut Vec<usize>, queued: &mut Vec<bool>, n: usize| {
            if n != NIL && !queued[n] {
                queued[n] = true;
                stack.push(n);
            }
        };
        if fs[b].is_identity() {
            let c = next[b];
            next[a] = c;
            if c != NIL {
                prev[c] = a;
            }
            alive[b] = false;
            enqueue(&mut stack, &mut queued, a);
        } else if changed {
            // b lost crossings, so the pair starting at b may now violate
            enqueue(&mut stack, &mut queued, b);
        }
        if changed {
            // a gained crossings, so the pair ending at a may now violate
            enqueue(&mut stack, &mut queued, prev[a]);
        }
    }
    // compact in chain order, dropping identities (the unlinked cells)
    let mut out: Vec<Factor> = Vec::with_capacity(k);
    while fs[head].is_identity() {
        match next[head] {
            NIL => {
                fs.clear();
                return;
            }
            h => head = h,
        }
    }
    let mut cur = head;
    loop {
        out.push(fs[cur].clone());
        match next[cur] {
            NIL => break,
            n => cur = n,
        }
    }
    *fs = out;
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn w(strands: usize, signed: &[i64]) -> BraidWord {
        BraidWord::from_signed(strands, signed).unwrap()
    }

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn free_cancellation_normalizes_to_identity() {
        let nf = w(3, &[1, -1]).normal_form();
        assert!(nf.is_identity());
        assert_eq!(nf.as_delta_power(), Some(0));
    }

    #[test]
    fn braid_relation_holds() {
        assert!(w(3, &[1, 2, 1]).equal(&w(3, &[2, 1, 2])).unwrap());
        assert!(!w(3, &[1]).equal(&w(3, &[2])).unwrap());
    }

    #[test]
    fn half_twist_word_is_delta() {
        // σ1 (σ2 σ1) (σ3 σ2 σ1) for n = 4
        let nf = w(4, &[1, 2, 1, 3, 2, 1]).normal_form();
        assert_eq!(nf.delta_power, 1);
        assert!(nf.factors.is_empty());
    }

    #[test]
    fn strand_mismatch_is_an_error() {
        assert!(matches!(
            w(3, &[1]).equal(&w(4, &[1])),
            Err(ArtinError::StrandMismatch(3, 4))
        ));
    }

    #[test]
    fn permutation_of_words() {
        assert!(w(3, &[]).permutation().is_identity());
        assert_eq!(w(3, &[1]).permutation().one_line(), vec![2, 1, 3]);
        // σ1^{-2} σ2 σ1^2 induces the transposition (2 3)
        assert_eq!(
            w(3, &[-1, -1, 2, 1, 1]).permutation().one_line(),
            vec![1, 3, 2]
        );
    }

    #[test]
    fn permutation_is_a_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let u = random_word(&mut rng, 5, 12);
            let v = random_word(&mut rng, 5, 12);
            let uv = u.mul(&v).unwrap();
            assert_eq!(
                uv.permutation(),
                u.permutation().then(&v.permutation())
            );
        }
    }

    #[test]
    fn purity() {
        assert!(w(3, &[1, 1]).is_pure(&set(&[1])).unwrap());
        assert!(!w(3, &[1]).is_pure(&set(&[1])).unwrap());
        // strands 2,3 cross twice between fixed strands 1,4,5
        assert!(w(5, &[2, 2]).is_pure(&set(&[1, 4, 5])).unwrap());
    }

    #[test]
    fn strand_removal() {
        // removing strand 3 kills σ2 on 3 strands
        let r = w(3, &[2]).remove_strands(&set(&[1, 2])).unwrap();
        assert!(r.normal_form().is_identity());
        // keeping everything returns the word up to free reduction
        let v = w(4, &[1, 2, -2, 3]);
        let r = v.remove_strands(&set(&[1, 2, 3, 4])).unwrap();
        assert!(r.equal(&v.free_reduce()).unwrap());
    }

    #[test]
    fn removal_relabels_non_contiguous_survivors() {
        // deleting strand 2 from σ1 σ2 leaves one crossing of strands 1, 3
        let r = w(3, &[1, 2]).remove_strands(&set(&[1, 3])).unwrap();
        assert_eq!(r, w(2, &[1]));
        // and the crossing vanishes if the moving strand is removed instead
        let r = w(3, &[1, 2]).remove_strands(&set(&[2, 3])).unwrap();
        assert!(r.normal_form().is_identity());
    }

    #[test]
    fn straightness() {
        assert!(BraidWord::identity(4).is_straight(&set(&[2, 3])).unwrap());
        // σ2^2 on 5 strands: {1,4}- and {1,5}-straight, not {2,3}-straight
        let b = w(5, &[2, 2]);
        assert!(b.is_straight(&set(&[1, 4])).unwrap());
        assert!(b.is_straight(&set(&[1, 5])).unwrap());
        assert!(!b.is_straight(&set(&[2, 3])).unwrap());
        // σ1^2 leaves σ1^2 after restricting to {1,2}
        assert!(!w(3, &[1, 1]).is_straight(&set(&[1, 2])).unwrap());
    }

    #[test]
    fn winding_basics() {
        assert_eq!(w(3, &[1, 1]).winding().unwrap(), 1);
        assert_eq!(w(3, &[-1, -1, 2, 1, 1]).winding().unwrap(), 0);
        assert_eq!(w(4, &[2]).winding().unwrap(), 0);
        assert!(matches!(w(3, &[1]).winding(), Err(ArtinError::NotOnePure)));
    }

    #[test]
    fn winding_of_full_twist_counts_other_strands() {
        for r in 2..=5 {
            let n = r + 1;
            assert_eq!(BraidWord::full_twist(n).winding().unwrap(), r as i64);
        }
    }

    #[test]
    fn rotations_power_to_the_full_twist() {
        for r in 2..=5usize {
            let n = r + 1;
            let full = BraidWord::full_twist(n);
            let eps = BraidWord::epsilon_rotation(n);
            assert!(eps.pow(r as i64).equal(&full).unwrap(), "eps^r, r={r}");
            let del = BraidWord::delta_rotation(n);
            assert!(del.pow(n as i64).equal(&full).unwrap(), "delta^(r+1), r={r}");
        }
    }

    #[test]
    fn epsilon_one_powers_to_marked_full_twist() {
        // ε1^{r-1} = σ1^{-2} Δ^2
        for r in 3..=5usize {
            let n = r + 1;
            let lhs = BraidWord::epsilon_one(n).unwrap().pow(r as i64 - 1);
            let rhs = w(n, &[-1, -1]).mul(&BraidWord::full_twist(n)).unwrap();
            assert!(lhs.equal(&rhs).unwrap(), "r={r}");
        }
    }

    #[test]
    fn epsilon_spelling_small_case() {
        // ε for r=2 is σ2 σ1 σ1
        let eps = BraidWord::epsilon_rotation(3);
        assert_eq!(eps, w(3, &[2, 1, 1]));
    }

    #[test]
    fn normal_form_to_word_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let u = random_word(&mut rng, 5, 20);
            let nf = u.normal_form();
            assert!(nf.to_word().equal(&u).unwrap());
            assert_eq!(nf.to_word().normal_form(), nf);
        }
    }

    #[test]
    fn normal_form_is_a_complete_invariant_under_relator_insertion() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..500 {
            let n = rng.gen_range(3..=6);
            let u = random_word(&mut rng, n, 14);
            let v = insert_relators(&mut rng, &u, 3);
            assert!(u.equal(&v).unwrap());
        }
        // and words differing by a single extra generator never collide
        for _ in 0..200 {
            let n = rng.gen_range(3..=6);
            let u = random_word(&mut rng, n, 10);
            let i = rng.gen_range(1..n) as i64;
            let v = u.mul(&w(n, &[i])).unwrap();
            assert!(!u.equal(&v).unwrap());
        }
    }

    #[test]
    fn winding_is_a_homomorphism_on_one_pure_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut count = 0;
        while count < 120 {
            let u = random_word(&mut rng, 4, 10);
            let v = random_word(&mut rng, 4, 10);
            let one = set(&[1]);
            if !(u.is_pure(&one).unwrap() && v.is_pure(&one).unwrap()) {
                continue;
            }
            count += 1;
            let uv = u.mul(&v).unwrap();
            assert_eq!(
                uv.winding().unwrap(),
                u.winding().unwrap() + v.winding().unwrap()
            );
            let conj = u.conjugated_by(&v).unwrap();
            assert_eq!(conj.winding().unwrap(), u.winding().unwrap());
        }
    }

    #[test]
    fn removal_is_multiplicative_on_kept_pure_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let keep = set(&[1, 2, 4]);
        let mut count = 0;
        while count < 60 {
            let u = random_word(&mut rng, 4, 8);
            let v = random_word(&mut rng, 4, 8);
            if !(u.is_pure(&keep).unwrap() && v.is_pure(&keep).unwrap()) {
                continue;
            }
            count += 1;
            let lhs = u.mul(&v).unwrap().remove_strands(&keep).unwrap();
            let rhs = u
                .remove_strands(&keep)
                .unwrap()
                .mul(&v.remove_strands(&keep).unwrap())
                .unwrap();
            assert!(lhs.equal(&rhs).unwrap());
        }
    }

    pub(crate) fn random_word(rng: &mut ChaCha8Rng, strands: usize, max_len: usize) -> BraidWord {
        let len = rng.gen_range(0..=max_len);
        let signed: Vec<i64> = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..strands) as i64;
                if rng.gen_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        BraidWord::from_signed(strands, &signed).unwrap()
    }

    fn insert_relators(rng: &mut ChaCha8Rng, u: &BraidWord, count: usize) -> BraidWord {
        let n = u.strands();
        let mut letters: Vec<ArtinLetter> = u.letters().to_vec();
        for _ in 0..count {
            let pos = rng.gen_range(0..=letters.len());
            let rel: Vec<i64> = match rng.gen_range(0..4) {
                0 => {
                    let i = rng.gen_range(1..n) as i64;
                    vec![i, -i]
                }
                1 => {
                    let i = rng.gen_range(1..n) as i64;
                    vec![-i, i]
                }
                2 if n >= 3 => {
                    let i = rng.gen_range(1..n - 1) as i64;
                    vec![i, i + 1, i, -(i + 1), -i, -(i + 1)]
                }
                _ if n >= 4 => {
                    let i = rng.gen_range(1..n - 2) as i64;
                    let j = rng.gen_range(i + 2..n as i64);
                    vec![i, j, -i, -j]
                }
                _ => {
                    let i = rng.gen_range(1..n) as i64;
                    vec![i, -i]
                }
            };
            let ins: Vec<ArtinLetter> = rel
                .iter()
                .map(|&k| ArtinLetter {
                    index: k.unsigned_abs() as usize,
                    sign: Sign::of(k),
                })
                .collect();
            letters.splice(pos..pos, ins);
        }
        BraidWord::new(n, letters).unwrap()
    }
}
