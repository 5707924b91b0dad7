//! Template generation checked against exhaustive enumeration of identity
//! words. The oracle below works on raw image vectors and shares no code with
//! the generator.

use std::collections::BTreeSet;

use permgate::templates::{generate_templates, GateLibrary};
use permgate::SizeCap;

type Images = Vec<usize>;

fn all_perms(m: usize) -> Vec<Images> {
    fn rec(prefix: &mut Images, used: &mut Vec<bool>, out: &mut Vec<Images>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

fn is_id(p: &Images) -> bool {
    p.iter().enumerate().all(|(i, &v)| i == v)
}

/// Apply `first`, then `second`.
fn then(first: &Images, second: &Images) -> Images {
    first.iter().map(|&x| second[x]).collect()
}

fn inv(p: &Images) -> Images {
    let mut out = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        out[v] = i;
    }
    out
}

fn word_product(word: &[Images]) -> Images {
    word[1..]
        .iter()
        .fold(word[0].clone(), |acc, g| then(&acc, g))
}

/// Identity word with no identity gate and no proper cyclic factor that
/// composes to the identity.
fn is_minimal_identity_word(word: &[Images]) -> bool {
    let n = word.len();
    if !is_id(&word_product(word)) || word.iter().any(is_id) {
        return false;
    }
    for start in 0..n {
        for len in 2..n {
            let factor: Vec<Images> = (0..len).map(|k| word[(start + k) % n].clone()).collect();
            if is_id(&word_product(&factor)) {
                return false;
            }
        }
    }
    true
}

fn canonical(word: &[Images]) -> Vec<Images> {
    let mirrored: Vec<Images> = word.iter().rev().map(inv).collect();
    let mut variants = Vec::new();
    for base in [word.to_vec(), mirrored] {
        for k in 0..base.len() {
            let mut w = base.clone();
            w.rotate_left(k);
            variants.push(w);
        }
    }
    variants.into_iter().min().unwrap()
}

fn render(word: &[Images]) -> String {
    word.iter()
        .map(|p| {
            let entries: Vec<String> = inv(p).iter().map(|v| (v + 1).to_string()).collect();
            format!("({})", entries.join(","))
        })
        .collect::<Vec<_>>()
        .join(";")
}

fn oracle(m: usize, max_size: usize) -> BTreeSet<String> {
    let perms = all_perms(m);
    let mut classes = BTreeSet::new();
    for len in 2..=max_size {
        // Enumerate the first len−1 gates; the last is forced.
        let mut stack: Vec<Vec<Images>> = vec![Vec::new()];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == len - 1 {
                let last = inv(&word_product(&prefix));
                let mut word = prefix;
                word.push(last);
                if is_minimal_identity_word(&word) {
                    classes.insert(render(&canonical(&word)));
                }
                continue;
            }
            for p in &perms {
                let mut next = prefix.clone();
                next.push(p.clone());
                stack.push(next);
            }
        }
    }
    classes
}

fn generated(m: usize, max_size: usize) -> BTreeSet<String> {
    let library = GateLibrary::symmetric_group(m, SizeCap::Default).unwrap();
    let generation = generate_templates(&library, max_size).unwrap();
    assert!(!generation.truncated);
    generation
        .store
        .to_string()
        .lines()
        .skip(1)
        .map(|l| l.strip_prefix("template: ").unwrap().to_string())
        .collect()
}

#[test]
fn s2_and_s3_match_exhaustive_search() {
    for m in [2, 3] {
        for max_size in 2..=3 {
            assert_eq!(
                generated(m, max_size),
                oracle(m, max_size),
                "S{m}, max {max_size}"
            );
        }
    }
}

#[test]
fn s3_length_four_matches_exhaustive_search() {
    assert_eq!(generated(3, 4), oracle(3, 4));
}

#[test]
fn s4_store_sizes() {
    let two = generated(4, 2);
    let three = generated(4, 3);
    assert_eq!(two, oracle(4, 2));
    assert_eq!(three, oracle(4, 3));
    assert_eq!(two.len(), 16);
    // 16 pair classes {U, U⁻¹} with U ≠ I. Length three: 23·22 = 506 ordered
    // words, and the dihedral group of order 6 fixes only the 8 words (a,a,a)
    // with a a 3-cycle under each nontrivial rotation, so (506 + 16) / 6 = 87.
    assert_eq!(three.len(), 16 + 87);
}
