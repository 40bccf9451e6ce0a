//! Cross-validation of the normal-form equality oracle against an
//! independent decision procedure: the faithful action of the braid group
//! on the free group, where `σ_i` maps `x_i ↦ x_i x_{i+1} x_i^{-1}`,
//! `x_{i+1} ↦ x_i`, fixing the other generators. Two braid words are equal
//! exactly when they induce the same endomorphism, so comparing the
//! (freely reduced) generator images decides equality with no Garside
//! machinery involved.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use deer_core::artin::{ArtinLetter, BraidWord, Sign};

/// A freely reduced word in the free group: nonzero signed generator ids.
type FreeWord = Vec<i32>;

fn push_reduced(w: &mut FreeWord, letter: i32) {
    if w.last() == Some(&-letter) {
        w.pop();
    } else {
        w.push(letter);
    }
}

/// Image of generator `x_j` under one braid letter.
fn letter_action(l: ArtinLetter, j: usize) -> FreeWord {
    let i = l.index as i32;
    let j = j as i32;
    match l.sign {
        Sign::Pos => {
            if j == i {
                vec![i, i + 1, -i]
            } else if j == i + 1 {
                vec![i]
            } else {
                vec![j]
            }
        }
        Sign::Neg => {
            if j == i {
                vec![i + 1]
            } else if j == i + 1 {
                vec![-(i + 1), i, i + 1]
            } else {
                vec![j]
            }
        }
    }
}

/// Generator images of the endomorphism induced by the whole word.
fn free_group_images(w: &BraidWord) -> Vec<FreeWord> {
    let n = w.strands();
    let mut images: Vec<FreeWord> = (1..=n as i32).map(|j| vec![j]).collect();
    for &l in w.letters() {
        for img in images.iter_mut() {
            let mut next = FreeWord::with_capacity(img.len() * 3);
            for &x in img.iter() {
                let rep = letter_action(l, x.unsigned_abs() as usize);
                if x > 0 {
                    for &y in &rep {
                        push_reduced(&mut next, y);
                    }
                } else {
                    for &y in rep.iter().rev() {
                        push_reduced(&mut next, -y);
                    }
                }
            }
            *img = next;
        }
    }
    images
}

fn equal_by_action(u: &BraidWord, v: &BraidWord) -> bool {
    free_group_images(u) == free_group_images(v)
}

fn random_word(rng: &mut ChaCha8Rng, strands: usize, max_len: usize) -> BraidWord {
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

#[test]
fn action_sanity() {
    // braid relation
    let u = BraidWord::from_signed(3, &[1, 2, 1]).unwrap();
    let v = BraidWord::from_signed(3, &[2, 1, 2]).unwrap();
    assert!(equal_by_action(&u, &v));
    // free cancellation
    let u = BraidWord::from_signed(3, &[1, -1]).unwrap();
    assert!(equal_by_action(&u, &BraidWord::identity(3)));
    // distinct generators act differently
    let u = BraidWord::from_signed(3, &[1]).unwrap();
    let v = BraidWord::from_signed(3, &[2]).unwrap();
    assert!(!equal_by_action(&u, &v));
    // commutation at distance
    let u = BraidWord::from_signed(4, &[1, 3]).unwrap();
    let v = BraidWord::from_signed(4, &[3, 1]).unwrap();
    assert!(equal_by_action(&u, &v));
}

#[test]
fn normal_form_agrees_with_the_free_group_action() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xDEE2);
    let mut equal_seen = 0;
    for round in 0..400 {
        let n = rng.gen_range(3..=5);
        let (u, v) = if round % 2 == 0 {
            // guaranteed-equal pair: same word, shuffled by a trivial insertion
            let u = random_word(&mut rng, n, 10);
            let pos = rng.gen_range(0..=u.len());
            let i = rng.gen_range(1..n) as i64;
            let mut signed: Vec<i64> = u
                .letters()
                .iter()
                .map(|l| l.index as i64 * l.sign.as_i64())
                .collect();
            signed.splice(pos..pos, [i, -i]);
            (u, BraidWord::from_signed(n, &signed).unwrap())
        } else {
            (random_word(&mut rng, n, 10), random_word(&mut rng, n, 10))
        };
        let by_nf = u.equal(&v).unwrap();
        let by_action = equal_by_action(&u, &v);
        assert_eq!(by_nf, by_action, "u = {u}, v = {v}");
        if by_nf {
            equal_seen += 1;
        }
    }
    assert!(equal_seen >= 200, "the equal half must be exercised");
}

#[test]
fn named_braids_cross_check() {
    for r in 2..=4usize {
        let n = r + 1;
        let eps = BraidWord::epsilon_rotation(n).pow(r as i64);
        let full = BraidWord::full_twist(n);
        assert!(equal_by_action(&eps, &full), "rotation power, r={r}");
        let del = BraidWord::delta_rotation(n).pow(n as i64);
        assert!(equal_by_action(&del, &full), "cycle power, r={r}");
    }
}
