//! Text grammars for words and presentation files.
//!
//! Artin words: whitespace-separated tokens `a<k>` or `a<k>^-1`.
//! Deer words: tokens `z`, `t[<int>]`, `s<int>`, each optionally `^-1`.
//! Affine words: tokens `z`, `s<int>` (1-based), each optionally `^-1`.
//!
//! Errors carry the byte offset of the offending character.

use thiserror::Error;

use crate::artin::{ArtinError, ArtinLetter, BraidWord, Sign};
use crate::deer::{
    AtildeGen, AtildeLetter, AtildeWord, DeerError, DeerGen, DeerLetter, DeerParams, DeerWord,
};
use crate::reversing::{GenId, PositivePresentation, PresentationError};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error(transparent)]
    Artin(#[from] ArtinError),
    #[error(transparent)]
    Deer(#[from] DeerError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

fn syntax(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        offset,
        message: message.into(),
    }
}

/// Tokens with their byte offsets.
fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &text[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out
}

/// Splits a trailing `^-1` marker off a token.
fn split_sign(offset: usize, tok: &str) -> Result<(Sign, usize), ParseError> {
    if let Some(stem_len) = tok.len().checked_sub(3) {
        if &tok[stem_len..] == "^-1" {
            return Ok((Sign::Neg, stem_len));
        }
    }
    if let Some(caret) = tok.find('^') {
        return Err(syntax(
            offset + caret,
            "only the exponent ^-1 is supported",
        ));
    }
    Ok((Sign::Pos, tok.len()))
}

fn parse_index(offset: usize, digits: &str, what: &str) -> Result<i64, ParseError> {
    if digits.is_empty() {
        return Err(syntax(offset, format!("expected {what} index")));
    }
    digits
        .parse::<i64>()
        .map_err(|_| syntax(offset, format!("invalid {what} index `{digits}`")))
}

/// `a<k>` and `a<k>^-1` tokens over `1..strands`.
pub fn parse_artin_word(text: &str, strands: usize) -> Result<BraidWord, ParseError> {
    let mut letters = Vec::new();
    for (off, tok) in tokens(text) {
        let (sign, stem_len) = split_sign(off, tok)?;
        let stem = &tok[..stem_len];
        let Some(rest) = stem.strip_prefix('a') else {
            return Err(syntax(off, format!("expected a generator `a<k>`, got `{tok}`")));
        };
        let k = parse_index(off + 1, rest, "generator")?;
        if k < 1 {
            return Err(syntax(off + 1, "generator index must be ≥ 1"));
        }
        letters.push(ArtinLetter {
            index: k as usize,
            sign,
        });
    }
    Ok(BraidWord::new(strands, letters)?)
}

fn parse_deer_letter(off: usize, tok: &str) -> Result<DeerLetter, ParseError> {
    let (sign, stem_len) = split_sign(off, tok)?;
    let stem = &tok[..stem_len];
    let gen = if stem == "z" {
        DeerGen::Z
    } else if let Some(rest) = stem.strip_prefix("t[") {
        let Some(inner) = rest.strip_suffix(']') else {
            return Err(syntax(off + 2, "expected `t[<int>]`"));
        };
        if !inner
            .chars()
            .all(|c| c.is_ascii_digit() || c == '-' || c == '+')
        {
            let bad = inner
                .char_indices()
                .find(|(_, c)| !c.is_ascii_digit() && *c != '-' && *c != '+')
                .map(|(i, _)| i)
                .unwrap_or(0);
            return Err(syntax(off + 2 + bad, "expected an integer index"));
        }
        DeerGen::T(parse_index(off + 2, inner, "t")?)
    } else if let Some(rest) = stem.strip_prefix('s') {
        let j = parse_index(off + 1, rest, "s")?;
        if j < 0 {
            return Err(syntax(off + 1, "s index must be nonnegative"));
        }
        DeerGen::S(j as u32)
    } else {
        return Err(syntax(off, format!("unknown token `{tok}`")));
    };
    Ok(DeerLetter { gen, sign })
}

/// Deer tokens `z`, `t[<int>]`, `s<int>`, with optional `^-1`.
pub fn parse_deer_word(text: &str, params: DeerParams) -> Result<DeerWord, ParseError> {
    let mut letters = Vec::new();
    for (off, tok) in tokens(text) {
        letters.push(parse_deer_letter(off, tok)?);
    }
    Ok(DeerWord::new(params, letters)?)
}

/// Splits an optional leading `d:e:r` parameter triple off a word string.
pub fn split_params_prefix(text: &str) -> Result<(Option<DeerParams>, &str), ParseError> {
    let Some(&(off, tok)) = tokens(text).first() else {
        return Ok((None, text));
    };
    if !tok.contains(':') {
        return Ok((None, text));
    }
    let parts: Vec<&str> = tok.split(':').collect();
    if parts.len() != 3 {
        return Err(syntax(off, "parameter prefix must be d:e:r"));
    }
    let mut nums = [0u32; 3];
    for (k, part) in parts.iter().enumerate() {
        nums[k] = part
            .parse()
            .map_err(|_| syntax(off, format!("invalid parameter `{part}` in d:e:r prefix")))?;
    }
    let params = DeerParams::new(nums[0], nums[1], nums[2])?;
    Ok((Some(params), &text[off + tok.len()..]))
}

/// Affine tokens `z`, `s<int>` with `1 ≤ int ≤ r`, optional `^-1`.
pub fn parse_atilde_word(text: &str, params: DeerParams) -> Result<AtildeWord, ParseError> {
    let mut letters = Vec::new();
    for (off, tok) in tokens(text) {
        let (sign, stem_len) = split_sign(off, tok)?;
        let stem = &tok[..stem_len];
        let gen = if stem == "z" {
            AtildeGen::Z
        } else if let Some(rest) = stem.strip_prefix('s') {
            let j = parse_index(off + 1, rest, "s")?;
            if j < 1 {
                return Err(syntax(off + 1, "affine s index must be ≥ 1"));
            }
            AtildeGen::S(j as u32)
        } else {
            return Err(syntax(off, format!("unknown token `{tok}`")));
        };
        letters.push(AtildeLetter { gen, sign });
    }
    Ok(AtildeWord::new(params, letters)?)
}

/// A presentation file: header lines declaring the generator window, then
/// one relation `u = v` per line over the deer token grammar.
///
/// ```text
/// # the positive monoid, truncated
/// window 3
/// r 3
/// z
/// t[1] t[0] = t[2] t[1]
/// z t[1] = t[-1] z      # when e = 2
/// ```
///
/// `window N` declares `t[-N] … t[N]`; `r <r>` declares `s3 … s<r>`; a bare
/// `z` line adds the `z` generator.
pub fn parse_presentation_file(text: &str) -> Result<PositivePresentation, ParseError> {
    let mut window: i64 = 0;
    let mut r: u32 = 2;
    let mut with_z = false;
    let mut relations: Vec<(Vec<DeerLetter>, Vec<DeerLetter>)> = Vec::new();
    let mut offset = 0usize;
    for line in text.split_inclusive('\n') {
        let line_start = offset;
        offset += line.len();
        let content = line.split('#').next().unwrap_or("").trim_end();
        if content.trim().is_empty() {
            continue;
        }
        let trimmed = content.trim_start();
        let indent = content.len() - trimmed.len();
        if let Some(rest) = trimmed.strip_prefix("window") {
            window = parse_index(line_start + indent + 6, rest.trim(), "window")?;
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("r ") {
            let v = parse_index(line_start + indent + 2, rest.trim(), "rank")?;
            if v < 2 {
                return Err(syntax(line_start + indent + 2, "rank must be ≥ 2"));
            }
            r = v as u32;
            continue;
        }
        if trimmed == "z" {
            with_z = true;
            continue;
        }
        let Some(eq) = content.find('=') else {
            return Err(syntax(line_start + indent, "expected `u = v`"));
        };
        let lhs_text = &content[..eq];
        let rhs_text = &content[eq + 1..];
        let parse_side = |base: usize, side: &str| -> Result<Vec<DeerLetter>, ParseError> {
            tokens(side)
                .into_iter()
                .map(|(off, tok)| parse_deer_letter(base + off, tok))
                .collect()
        };
        let lhs = parse_side(line_start, lhs_text)?;
        let rhs = parse_side(line_start + eq + 1, rhs_text)?;
        relations.push((lhs, rhs));
    }

    let mut gens: Vec<String> = Vec::new();
    if with_z {
        gens.push("z".to_string());
    }
    for i in -window..=window {
        gens.push(format!("t[{i}]"));
    }
    for j in 3..=r {
        gens.push(format!("s{j}"));
    }
    let lookup = |l: &DeerLetter, base: usize| -> Result<GenId, ParseError> {
        if l.sign == Sign::Neg {
            return Err(syntax(base, "presentation relations must be positive"));
        }
        let name = match l.gen {
            DeerGen::Z => "z".to_string(),
            DeerGen::T(i) => format!("t[{i}]"),
            DeerGen::S(j) => format!("s{j}"),
        };
        gens.iter()
            .position(|g| *g == name)
            .map(|i| i as GenId)
            .ok_or_else(|| syntax(base, format!("generator `{name}` not declared by the header")))
    };
    let mut rel_ids = Vec::new();
    for (lhs, rhs) in &relations {
        let l: Vec<GenId> = lhs.iter().map(|x| lookup(x, 0)).collect::<Result<_, _>>()?;
        let rr: Vec<GenId> = rhs.iter().map(|x| lookup(x, 0)).collect::<Result<_, _>>()?;
        rel_ids.push((l, rr));
    }
    // all t-index pairs (and z against t) belong to infinite families
    let mut family = Vec::new();
    let t_ids: Vec<GenId> = gens
        .iter()
        .enumerate()
        .filter(|(_, g)| g.starts_with("t["))
        .map(|(i, _)| i as GenId)
        .collect();
    for (k, &a) in t_ids.iter().enumerate() {
        for &b in &t_ids[k + 1..] {
            family.push((a, b));
        }
    }
    if with_z {
        for &a in &t_ids {
            family.push((0, a));
        }
    }
    Ok(PositivePresentation::new(
        "file",
        gens,
        rel_ids,
        &family,
    )?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn artin_tokens() {
        let w = parse_artin_word("a1^-1 a2 a1", 3).unwrap();
        assert_eq!(w, BraidWord::from_signed(3, &[-1, 2, 1]).unwrap());
        assert!(parse_artin_word("", 3).unwrap().is_empty());
        let err = parse_artin_word("a1 b2", 3).unwrap_err();
        assert!(matches!(err, ParseError::Syntax { offset: 3, .. }));
        // index out of range surfaces as a word error
        assert!(matches!(
            parse_artin_word("a7", 3),
            Err(ParseError::Artin(ArtinError::IndexOutOfRange { .. }))
        ));
    }

    #[test]
    fn deer_tokens() {
        let p = DeerParams::new(2, 2, 3).unwrap();
        let w = parse_deer_word("t[1] t[0]", p).unwrap();
        assert_eq!(w.letters(), &[DeerLetter::t(1), DeerLetter::t(0)]);
        let w = parse_deer_word("z^-1 t[-3]^-1 s3", p).unwrap();
        assert_eq!(
            w.letters(),
            &[
                DeerLetter::z().inv(),
                DeerLetter::t(-3).inv(),
                DeerLetter::s(3)
            ]
        );
        let err = parse_deer_word("t[x]", p).unwrap_err();
        assert!(
            matches!(err, ParseError::Syntax { offset: 2, .. }),
            "{err:?}"
        );
        assert!(matches!(
            parse_deer_word("s9", p),
            Err(ParseError::Deer(DeerError::BadSIndex { .. }))
        ));
    }

    #[test]
    fn atilde_tokens() {
        let p = DeerParams::new(2, 2, 3).unwrap();
        let w = parse_atilde_word("z s1 s3^-1", p).unwrap();
        assert_eq!(w.letters().len(), 3);
        assert!(parse_atilde_word("t[0]", p).is_err());
    }

    #[test]
    fn words_round_trip_through_display() {
        let p = DeerParams::new(2, 3, 4).unwrap();
        let w = parse_deer_word("z t[-2]^-1 s4 t[5] z^-1", p).unwrap();
        assert_eq!(parse_deer_word(&w.to_string(), p).unwrap(), w);
        let a = parse_artin_word("a1 a3^-1 a2", 4).unwrap();
        assert_eq!(parse_artin_word(&a.to_string(), 4).unwrap(), a);
        let t = parse_atilde_word("s1^-1 z s4", p).unwrap();
        assert_eq!(parse_atilde_word(&t.to_string(), p).unwrap(), t);
    }

    #[test]
    fn parameter_prefixes() {
        let (p, rest) = split_params_prefix("2:3:4 t[1] z").unwrap();
        assert_eq!(p, Some(DeerParams::new(2, 3, 4).unwrap()));
        let w = parse_deer_word(rest, p.unwrap()).unwrap();
        assert_eq!(w.letters().len(), 2);
        let (p, rest) = split_params_prefix("t[1] z").unwrap();
        assert!(p.is_none());
        assert_eq!(rest, "t[1] z");
        assert!(split_params_prefix("2:3 t[0]").is_err());
    }

    #[test]
    fn presentation_files() {
        let text = "\
# truncated positive monoid
window 2
r 3
z
t[1] t[0] = t[2] t[1]
s3 t[0] s3 = t[0] s3 t[0]
z t[1] = t[-1] z
";
        let p = parse_presentation_file(text).unwrap();
        assert!(p.is_right_complemented());
        assert_eq!(p.relations().len(), 3);
        assert!(p.generator_id("t[-2]").is_some());
        assert!(p.generator_id("z").is_some());

        let bad = parse_presentation_file("window 1\nt[9] = t[0] t[1]");
        assert!(bad.is_err());
    }
}
