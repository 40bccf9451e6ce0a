//! Word reversing over positive, homogeneous, complemented presentations.
//!
//! Right-reversing rewrites a word `u^{-1} v` by repeatedly deleting factors
//! `x^{-1} x` and replacing factors `x^{-1} y` with `v' u'^{-1}` whenever
//! `x v' = y u'` is a defining relation. When the procedure terminates with a
//! purely positive-then-negative word `v' u'^{-1}`, it certifies the monoid
//! identity `u v' = v u'`. For complete presentations this decides the word
//! problem of the monoid and computes right lcms.
//!
//! Infinite generator families are instantiated over a finite index window;
//! a reversal step that would need a relation outside the window reports
//! `WindowExhausted` instead of guessing, which keeps every verdict sound.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub type GenId = u16;

pub const DEFAULT_FUEL: u64 = 10_000;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("relation {index} is not homogeneous: lengths {lhs} vs {rhs}")]
    NotHomogeneous { index: usize, lhs: usize, rhs: usize },
    #[error("relation {index} has an empty side")]
    EmptySide { index: usize },
    #[error("relation {index} uses generator id {gen} out of range")]
    UnknownGenerator { index: usize, gen: GenId },
    #[error("presentation is not right-complemented")]
    NotComplemented,
    #[error("word uses generator id {0} out of range")]
    UnknownWordGenerator(GenId),
}

/// Why a reversal could not finish.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum StuckReason {
    /// No relation with the given pair of head letters: within the window
    /// these two generators admit no common right multiple.
    NoRelation,
    /// The missing relation belongs to an infinite family truncated by the
    /// window, so no conclusion may be drawn.
    WindowExhausted,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ReversingOutcome {
    /// `u·v' = v·u'` in the monoid, with `v'` = `left_complement` and
    /// `u'` = `right_complement`.
    Completed {
        left_complement: Vec<GenId>,
        right_complement: Vec<GenId>,
    },
    Stuck {
        position: usize,
        reason: StuckReason,
    },
    FuelExhausted,
}

impl ReversingOutcome {
    pub fn completed_empty(&self) -> bool {
        matches!(
            self,
            ReversingOutcome::Completed {
                left_complement,
                right_complement,
            } if left_complement.is_empty() && right_complement.is_empty()
        )
    }
}

/// Why a query returned no verdict.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Unresolved {
    WindowExhausted,
    FuelExhausted,
}

/// Three-valued verdict of a monoid word-problem query.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum MonoidVerdict {
    True,
    False,
    Inconclusive(Unresolved),
}

impl MonoidVerdict {
    pub fn is_true(self) -> bool {
        self == MonoidVerdict::True
    }

    pub fn is_false(self) -> bool {
        self == MonoidVerdict::False
    }
}

/// A finite positive homogeneous presentation, with the complement table
/// used by reversing.
#[derive(Clone, Debug)]
pub struct PositivePresentation {
    name: String,
    gens: Vec<String>,
    relations: Vec<(Vec<GenId>, Vec<GenId>)>,
    compl: HashMap<(GenId, GenId), (Vec<GenId>, Vec<GenId>)>,
    duplicate_heads: Vec<(GenId, GenId)>,
    self_heads: Vec<GenId>,
    missing_right: HashSet<(GenId, GenId)>,
    missing_left: HashSet<(GenId, GenId)>,
}

impl PositivePresentation {
    /// `family_pairs` lists unordered generator pairs that carry a relation
    /// in the untruncated presentation; pairs of the list that end up with
    /// no instantiated relation are flagged as window boundaries rather
    /// than genuine dead ends.
    pub fn new(
        name: impl Into<String>,
        gens: Vec<String>,
        relations: Vec<(Vec<GenId>, Vec<GenId>)>,
        family_pairs: &[(GenId, GenId)],
    ) -> Result<Self, PresentationError> {
        let n = gens.len() as u32;
        for (index, (lhs, rhs)) in relations.iter().enumerate() {
            if lhs.is_empty() || rhs.is_empty() {
                return Err(PresentationError::EmptySide { index });
            }
            if lhs.len() != rhs.len() {
                return Err(PresentationError::NotHomogeneous {
                    index,
                    lhs: lhs.len(),
                    rhs: rhs.len(),
                });
            }
            for &g in lhs.iter().chain(rhs.iter()) {
                if g as u32 >= n {
                    return Err(PresentationError::UnknownGenerator { index, gen: g });
                }
            }
        }
        let mut compl = HashMap::new();
        let mut duplicate_heads = Vec::new();
        let mut self_heads = Vec::new();
        for (lhs, rhs) in &relations {
            let (x, y) = (lhs[0], rhs[0]);
            if x == y {
                self_heads.push(x);
                continue;
            }
            let entry = (lhs[1..].to_vec(), rhs[1..].to_vec());
            if compl.contains_key(&(x, y)) {
                duplicate_heads.push((x, y));
                continue;
            }
            compl.insert((y, x), (entry.1.clone(), entry.0.clone()));
            compl.insert((x, y), entry);
        }
        let mut missing_right = HashSet::new();
        let mut missing_left = HashSet::new();
        let has_tail_pair = |a: GenId, b: GenId| {
            relations.iter().any(|(l, r)| {
                let (la, lb) = (*l.last().unwrap(), *r.last().unwrap());
                (la, lb) == (a, b) || (la, lb) == (b, a)
            })
        };
        for &(a, b) in family_pairs {
            if !compl.contains_key(&(a, b)) {
                missing_right.insert((a, b));
                missing_right.insert((b, a));
            }
            if !has_tail_pair(a, b) {
                missing_left.insert((a, b));
                missing_left.insert((b, a));
            }
        }
        Ok(PositivePresentation {
            name: name.into(),
            gens,
            relations,
            compl,
            duplicate_heads,
            self_heads,
            missing_right,
            missing_left,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generator_count(&self) -> usize {
        self.gens.len()
    }

    pub fn generator_name(&self, g: GenId) -> &str {
        &self.gens[g as usize]
    }

    pub fn generator_id(&self, name: &str) -> Option<GenId> {
        self.gens.iter().position(|g| g == name).map(|i| i as GenId)
    }

    pub fn relations(&self) -> &[(Vec<GenId>, Vec<GenId>)] {
        &self.relations
    }

    pub fn word_to_string(&self, w: &[GenId]) -> String {
        if w.is_empty() {
            return "(empty)".to_string();
        }
        w.iter()
            .map(|&g| self.gens[g as usize].clone())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// At most one relation `x⋯ = y⋯` per pair and none of the form `x⋯ = x⋯`.
    pub fn is_right_complemented(&self) -> bool {
        self.duplicate_heads.is_empty() && self.self_heads.is_empty()
    }

    /// The opposite presentation: every relation read backwards. Left
    /// divisibility questions about `w` become right ones about the
    /// reversed word.
    pub fn mirrored(&self) -> PositivePresentation {
        let relations = self
            .relations
            .iter()
            .map(|(l, r)| {
                (
                    l.iter().rev().copied().collect(),
                    r.iter().rev().copied().collect(),
                )
            })
            .collect();
        let mut p = PositivePresentation::new(
            format!("{} (mirrored)", self.name),
            self.gens.clone(),
            relations,
            &[],
        )
        .expect("mirror of a valid presentation is valid");
        p.missing_right = self.missing_left.clone();
        p.missing_left = self.missing_right.clone();
        p
    }

    fn check_word(&self, w: &[GenId]) -> Result<(), PresentationError> {
        let n = self.gens.len() as u32;
        for &g in w {
            if g as u32 >= n {
                return Err(PresentationError::UnknownWordGenerator(g));
            }
        }
        Ok(())
    }

    /// Right-reverses `u^{-1} v`, always at the leftmost reversible position.
    pub fn right_reverse(
        &self,
        u: &[GenId],
        v: &[GenId],
        fuel: u64,
    ) -> Result<ReversingOutcome, PresentationError> {
        if !self.is_right_complemented() {
            return Err(PresentationError::NotComplemented);
        }
        self.check_word(u)?;
        self.check_word(v)?;
        // signed letters: (gen, positive?)
        let mut word: Vec<(GenId, bool)> = u
            .iter()
            .rev()
            .map(|&g| (g, false))
            .chain(v.iter().map(|&g| (g, true)))
            .collect();
        let mut fuel = fuel;
        let mut scan_from = 0usize;
        loop {
            let mut pos = None;
            let mut k = scan_from;
            while k + 1 < word.len() {
                if !word[k].1 && word[k + 1].1 {
                    pos = Some(k);
                    break;
                }
                k += 1;
            }
            let Some(k) = pos else {
                let left: Vec<GenId> = word
                    .iter()
                    .filter(|(_, pos)| *pos)
                    .map(|&(g, _)| g)
                    .collect();
                let right: Vec<GenId> = word
                    .iter()
                    .rev()
                    .filter(|(_, pos)| !*pos)
                    .map(|&(g, _)| g)
                    .collect();
                return Ok(ReversingOutcome::Completed {
                    left_complement: left,
                    right_complement: right,
                });
            };
            if fuel == 0 {
                return Ok(ReversingOutcome::FuelExhausted);
            }
            fuel -= 1;
            let (a, b) = (word[k].0, word[k + 1].0);
            if a == b {
                word.splice(k..k + 2, std::iter::empty());
            } else if let Some((va, ub)) = self.compl.get(&(a, b)) {
                let replacement: Vec<(GenId, bool)> = va
                    .iter()
                    .map(|&g| (g, true))
                    .chain(ub.iter().rev().map(|&g| (g, false)))
                    .collect();
                word.splice(k..k + 2, replacement);
            } else {
                let reason = if self.missing_right.contains(&(a, b)) {
                    StuckReason::WindowExhausted
                } else {
                    StuckReason::NoRelation
                };
                return Ok(ReversingOutcome::Stuck { position: k, reason });
            }
            scan_from = k.saturating_sub(1);
        }
    }

    /// Decides `u = v` in the monoid. Distinct lengths are unequal outright
    /// (the presentation is homogeneous); otherwise reversing must finish
    /// on the empty word.
    pub fn monoid_equal(
        &self,
        u: &[GenId],
        v: &[GenId],
        fuel: u64,
    ) -> Result<MonoidVerdict, PresentationError> {
        if u.len() != v.len() {
            return Ok(MonoidVerdict::False);
        }
        Ok(match self.right_reverse(u, v, fuel)? {
            o @ ReversingOutcome::Completed { .. } => {
                if o.completed_empty() {
                    MonoidVerdict::True
                } else {
                    MonoidVerdict::False
                }
            }
            ReversingOutcome::Stuck {
                reason: StuckReason::NoRelation,
                ..
            } => MonoidVerdict::False,
            ReversingOutcome::Stuck {
                reason: StuckReason::WindowExhausted,
                ..
            } => MonoidVerdict::Inconclusive(Unresolved::WindowExhausted),
            ReversingOutcome::FuelExhausted => {
                MonoidVerdict::Inconclusive(Unresolved::FuelExhausted)
            }
        })
    }

    /// Right lcm of `u` and `v` with the complements that certify it.
    pub fn right_lcm(
        &self,
        u: &[GenId],
        v: &[GenId],
        fuel: u64,
    ) -> Result<LcmOutcome, PresentationError> {
        Ok(match self.right_reverse(u, v, fuel)? {
            ReversingOutcome::Completed {
                left_complement,
                right_complement,
            } => {
                let mut lcm = u.to_vec();
                lcm.extend_from_slice(&left_complement);
                LcmOutcome::Found {
                    lcm,
                    complement_of_left: left_complement,
                    complement_of_right: right_complement,
                }
            }
            ReversingOutcome::Stuck { reason, .. } => LcmOutcome::NoCommonMultiple { reason },
            ReversingOutcome::FuelExhausted => LcmOutcome::Inconclusive,
        })
    }

    /// Does `d` divide `w` on the left, i.e. `w = d·c` for positive `c`?
    pub fn divides_left(
        &self,
        d: &[GenId],
        w: &[GenId],
        fuel: u64,
    ) -> Result<Divides, PresentationError> {
        if d.len() > w.len() {
            return Ok(Divides::No);
        }
        Ok(match self.right_reverse(d, w, fuel)? {
            ReversingOutcome::Completed {
                left_complement,
                right_complement,
            } => {
                if right_complement.is_empty() {
                    Divides::Yes {
                        complement: left_complement,
                    }
                } else {
                    Divides::No
                }
            }
            ReversingOutcome::Stuck {
                reason: StuckReason::NoRelation,
                ..
            } => Divides::No,
            ReversingOutcome::Stuck {
                reason: StuckReason::WindowExhausted,
                ..
            } => Divides::Inconclusive,
            ReversingOutcome::FuelExhausted => Divides::Inconclusive,
        })
    }

    /// Letter complement `x \ y`: the word completing `x` to `lcm(x, y)`.
    fn letter_complement(&self, x: GenId, y: GenId) -> ComplementLookup {
        if x == y {
            return ComplementLookup::Found(Vec::new());
        }
        match self.compl.get(&(x, y)) {
            Some((v, _)) => ComplementLookup::Found(v.clone()),
            None if self.missing_right.contains(&(x, y)) => ComplementLookup::Window,
            None => ComplementLookup::None,
        }
    }

    /// Checks the cube coherence condition on every ordered generator
    /// triple `(x, y, z)`: the complements `(x\y)\(x\z)` and `(y\x)\(y\z)`
    /// must agree in the monoid whenever both exist. Failing triples make
    /// the presentation incomplete; pairs with several head relations are
    /// reported as complementedness failures.
    pub fn cube_condition(&self, fuel: u64) -> CubeReport {
        let mut report = CubeReport::default();
        for &(x, y) in &self.duplicate_heads {
            report.failures.push(CubeEntry {
                triple: [
                    self.gens[x as usize].clone(),
                    self.gens[y as usize].clone(),
                    String::new(),
                ],
                detail: "several relations with these head letters".to_string(),
            });
        }
        for &x in &self.self_heads {
            report.failures.push(CubeEntry {
                triple: [
                    self.gens[x as usize].clone(),
                    self.gens[x as usize].clone(),
                    String::new(),
                ],
                detail: "relation with equal head letters".to_string(),
            });
        }
        if !report.failures.is_empty() {
            return report;
        }
        let n = self.gens.len() as GenId;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    self.cube_triple(x, y, z, fuel, &mut report);
                }
            }
        }
        report
    }

    fn cube_triple(&self, x: GenId, y: GenId, z: GenId, fuel: u64, report: &mut CubeReport) {
        let name = |g: GenId| self.gens[g as usize].clone();
        let entry = |detail: &str| CubeEntry {
            triple: [name(x), name(y), name(z)],
            detail: detail.to_string(),
        };
        let (xy, xz, yx, yz) = (
            self.letter_complement(x, y),
            self.letter_complement(x, z),
            self.letter_complement(y, x),
            self.letter_complement(y, z),
        );
        if [&xy, &xz, &yx, &yz]
            .iter()
            .any(|c| matches!(c, ComplementLookup::Window))
        {
            report
                .inconclusive
                .push(entry("letter complement outside window"));
            return;
        }
        let (xy, xz, yx, yz) = match (xy, xz, yx, yz) {
            (
                ComplementLookup::Found(a),
                ComplementLookup::Found(b),
                ComplementLookup::Found(c),
                ComplementLookup::Found(d),
            ) => (a, b, c, d),
            // some pair of letters has no common multiple: nothing to cohere
            _ => return,
        };
        let side1 = self
            .right_reverse(&xy, &xz, fuel)
            .expect("complemented checked");
        let side2 = self
            .right_reverse(&yx, &yz, fuel)
            .expect("complemented checked");
        match (side1, side2) {
            (
                ReversingOutcome::Completed {
                    left_complement: w1,
                    ..
                },
                ReversingOutcome::Completed {
                    left_complement: w2,
                    ..
                },
            ) => match self.monoid_equal(&w1, &w2, fuel).expect("valid words") {
                MonoidVerdict::True => {}
                MonoidVerdict::False => {
                    report.failures.push(entry(&format!(
                        "iterated complements disagree: {} vs {}",
                        self.word_to_string(&w1),
                        self.word_to_string(&w2)
                    )));
                }
                MonoidVerdict::Inconclusive(_) => {
                    report
                        .inconclusive
                        .push(entry("complement comparison exhausted window or fuel"));
                }
            },
            (
                ReversingOutcome::Stuck {
                    reason: StuckReason::NoRelation,
                    ..
                },
                ReversingOutcome::Stuck {
                    reason: StuckReason::NoRelation,
                    ..
                },
            ) => {}
            (
                ReversingOutcome::Stuck {
                    reason: StuckReason::NoRelation,
                    ..
                },
                ReversingOutcome::Completed { .. },
            )
            | (
                ReversingOutcome::Completed { .. },
                ReversingOutcome::Stuck {
                    reason: StuckReason::NoRelation,
                    ..
                },
            ) => {
                report.failures.push(entry(
                    "one route completes, the other has no common multiple",
                ));
            }
            _ => {
                report
                    .inconclusive
                    .push(entry("reversal exhausted window or fuel"));
            }
        }
    }
}

enum ComplementLookup {
    Found(Vec<GenId>),
    None,
    Window,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LcmOutcome {
    Found {
        lcm: Vec<GenId>,
        complement_of_left: Vec<GenId>,
        complement_of_right: Vec<GenId>,
    },
    NoCommonMultiple {
        reason: StuckReason,
    },
    Inconclusive,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Divides {
    Yes { complement: Vec<GenId> },
    No,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct CubeEntry {
    pub triple: [String; 3],
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CubeReport {
    pub failures: Vec<CubeEntry>,
    pub inconclusive: Vec<CubeEntry>,
}

impl CubeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CubeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "cube condition: {} failures, {} inconclusive",
            self.failures.len(),
            self.inconclusive.len()
        )?;
        for e in &self.failures {
            writeln!(
                f,
                "  FAIL ({}, {}, {}): {}",
                e.triple[0], e.triple[1], e.triple[2], e.detail
            )?;
        }
        for e in &self.inconclusive {
            writeln!(
                f,
                "  ?    ({}, {}, {}): {}",
                e.triple[0], e.triple[1], e.triple[2], e.detail
            )?;
        }
        Ok(())
    }
}
