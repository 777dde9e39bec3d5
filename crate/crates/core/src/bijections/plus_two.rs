//! Sequences with two crossings beyond the minimum.
//!
//! Exactly one pair of balls `a < b` crosses four times. Its crossings sit at
//! `i_1 < i_2 < i_3 < i_4` and cut the throw pattern into four crossing-free
//! pieces: `P_1 = (i_1, i_2]`, `P_2 = (i_2, i_3]`, `P_3 = (i_3, i_4]` and
//! `P_0`, the prefix up to `i_1` followed by the suffix after `i_4`.

use crate::cards::{is_identity_with_crossings, reconstruct, Arrangement, CardSequence};
use crate::error::{Error, Result};

use super::family::canonical_relabel;

/// The decomposition of one plus-two pattern. Pieces are canonically
/// relabelled single-throw patterns; `i1` is 1-based within `pieces[0]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlusTwoParts {
    pub pieces: [Vec<usize>; 4],
    pub i1: usize,
    /// The pair crossing four times, in the original labels.
    pub special: (usize, usize),
    /// The cut points `i_1..i_4`, 1-based in the original pattern.
    pub cuts: [usize; 4],
}

fn sequence_of(balls: &[usize]) -> Result<CardSequence> {
    let b = balls.iter().copied().max().unwrap_or(0);
    let pattern: Vec<Vec<usize>> = balls.iter().map(|&x| vec![x]).collect();
    let (seq, left) = reconstruct(b, &pattern, &Arrangement::identity(b), false)?;
    if left != Arrangement::identity(b) {
        return Err(Error::NotInFamily(format!(
            "{balls:?} does not start from [1, …, {b}]"
        )));
    }
    Ok(seq)
}

/// Split a plus-two throw pattern into its four crossing-free pieces.
pub fn decompose_plus_two(balls: &[usize]) -> Result<PlusTwoParts> {
    let seq = sequence_of(balls)?;
    if !is_identity_with_crossings(&seq, 2) {
        return Err(Error::NotInFamily(format!(
            "{balls:?} is not the pattern of an identity sequence with b(b-1)+2 crossings"
        )));
    }
    let b = seq.b();
    let heights = seq.heights().expect("rebuilt from single throws");
    let counts = pair_crossings(b, balls, &heights);
    let special = (1..=b)
        .flat_map(|a| (a + 1..=b).map(move |c| (a, c)))
        .find(|&(a, c)| counts[a][c] == 4)
        .ok_or_else(|| Error::NotInFamily("no pair crosses four times".into()))?;
    let (a, c) = special;
    let n = balls.len();
    // 0-based scans; `last_before(x, y, from)` = last x before the first y at or after `from`
    let last_before = |x: usize, y: usize, from: usize| -> Option<usize> {
        let stop = (from..n).find(|&i| balls[i] == y).unwrap_or(n);
        (from..stop).rev().find(|&i| balls[i] == x)
    };
    let i1 = last_before(a, c, 0);
    let i2 = i1.and_then(|i| last_before(c, a, i + 1));
    let i3 = i2.and_then(|i| last_before(a, c, i + 1));
    let i4 = i3.and_then(|i| last_before(c, a, i + 1));
    let (i1, i2, i3, i4) = match (i1, i2, i3, i4) {
        (Some(i1), Some(i2), Some(i3), Some(i4)) => (i1, i2, i3, i4),
        _ => return Err(Error::Internal("could not locate the four crossings".into())),
    };
    let mut p0: Vec<usize> = balls[..=i1].to_vec();
    p0.extend_from_slice(&balls[i4 + 1..]);
    let pieces = [
        canonical_relabel(&p0),
        canonical_relabel(&balls[i1 + 1..=i2]),
        canonical_relabel(&balls[i2 + 1..=i3]),
        canonical_relabel(&balls[i3 + 1..=i4]),
    ];
    Ok(PlusTwoParts {
        pieces,
        i1: i1 + 1,
        special,
        cuts: [i1 + 1, i2 + 1, i3 + 1, i4 + 1],
    })
}

/// Crossing count of every pair of balls, indexed `[x][y]`. A ball thrown
/// to level `h` passes the `h - 1` balls above it.
fn pair_crossings(b: usize, balls: &[usize], heights: &[usize]) -> Vec<Vec<usize>> {
    let mut counts = vec![vec![0; b + 1]; b + 1];
    let mut arr: Vec<usize> = (1..=b).collect();
    for (&x, &h) in balls.iter().zip(heights) {
        debug_assert_eq!(arr[0], x);
        for &y in &arr[1..h] {
            counts[x][y] += 1;
            counts[y][x] += 1;
        }
        let thrown = arr.remove(0);
        arr.insert(h - 1, thrown);
    }
    counts
}

/// Reassemble a pattern from four crossing-free pieces and a cut `i1` in the
/// first. Every piece must be nonempty and `1 ≤ i1 ≤ |pieces[0]|`.
pub fn compose_plus_two(pieces: &[Vec<usize>; 4], i1: usize) -> Result<Vec<usize>> {
    if pieces.iter().any(Vec::is_empty) {
        return Err(Error::InvalidInput("every piece must be nonempty".into()));
    }
    if i1 == 0 || i1 > pieces[0].len() {
        return Err(Error::OutOfRange {
            what: "i1",
            value: i1,
            lo: 1,
            hi: pieces[0].len(),
        });
    }
    // distinct labels per piece; the two special balls get their own ids
    const A: usize = 1;
    const B: usize = 2;
    let mut next = 3;
    let mut relabelled: Vec<Vec<usize>> = Vec::with_capacity(4);
    for (idx, piece) in pieces.iter().enumerate() {
        let special_pos = if idx == 0 { i1 - 1 } else { piece.len() - 1 };
        let special_ball = piece[special_pos];
        let special_id = if idx % 2 == 0 { A } else { B };
        let max = piece.iter().copied().max().unwrap_or(0);
        let mut ids = vec![0; max + 1];
        for (x, id) in ids.iter_mut().enumerate().skip(1) {
            *id = if x == special_ball {
                special_id
            } else {
                let id = next;
                next += 1;
                id
            };
        }
        relabelled.push(piece.iter().map(|&x| ids[x]).collect());
    }
    let mut out: Vec<usize> = relabelled[0][..i1].to_vec();
    out.extend_from_slice(&relabelled[1]);
    out.extend_from_slice(&relabelled[2]);
    out.extend_from_slice(&relabelled[3]);
    out.extend_from_slice(&relabelled[0][i1..]);
    Ok(canonical_relabel(&out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cards::{crossings, throw_pattern};
    use crate::counting::{g_count, narayana};
    use crate::enumeration::{enumerate_minimal, enumerate_plus};

    #[test]
    fn smallest_member() {
        let parts = decompose_plus_two(&[1, 2, 1, 2]).unwrap();
        assert_eq!(parts.cuts, [1, 2, 3, 4]);
        assert_eq!(parts.i1, 1);
        assert_eq!(parts.special, (1, 2));
        for p in &parts.pieces {
            assert_eq!(p, &vec![1]);
        }
        let one = vec![1];
        assert_eq!(
            compose_plus_two(&[one.clone(), one.clone(), one.clone(), one], 1).unwrap(),
            vec![1, 2, 1, 2]
        );
    }

    #[test]
    fn roundtrip_and_claim() {
        for b in 2..=3 {
            for n in 4..=7 {
                for seq in enumerate_plus(b, n, 2, false).unwrap() {
                    let balls = throw_pattern(&seq).singles().unwrap();
                    let parts = decompose_plus_two(&balls).unwrap();
                    let sizes: usize = parts.pieces.iter().map(Vec::len).sum();
                    assert_eq!(sizes, n);
                    let ball_total: usize = parts
                        .pieces
                        .iter()
                        .map(|p| p.iter().copied().max().unwrap())
                        .sum();
                    assert_eq!(ball_total, b + 2);
                    assert_eq!(compose_plus_two(&parts.pieces, parts.i1).unwrap(), balls);
                }
            }
        }
    }

    /// All four-tuples of minimal patterns with a cut, grouped by total
    /// length and ball count, reproduce `g(b, n)`.
    #[test]
    fn composition_count() {
        let mut minimal: Vec<Vec<Vec<usize>>> = vec![Vec::new(); 8];
        for (n, patterns) in minimal.iter_mut().enumerate().skip(1) {
            for b in 1..=n {
                for s in enumerate_minimal(b, n).unwrap() {
                    patterns.push(throw_pattern(&s).singles().unwrap());
                }
            }
            let total: u64 = (1..=n)
                .map(|b| narayana(b, n).unwrap().try_into().unwrap_or(0u64))
                .sum();
            assert_eq!(patterns.len() as u64, total);
        }
        let mut counts = std::collections::HashMap::<(usize, usize), u64>::new();
        let balls = |p: &Vec<usize>| p.iter().copied().max().unwrap();
        for n0 in 1..=4 {
            for n1 in 1..=4 {
                for n2 in 1..=4 {
                    for n3 in 1..=4 {
                        let n = n0 + n1 + n2 + n3;
                        if n > 7 {
                            continue;
                        }
                        for p0 in &minimal[n0] {
                            for p1 in &minimal[n1] {
                                for p2 in &minimal[n2] {
                                    for p3 in &minimal[n3] {
                                        let b = balls(p0) + balls(p1) + balls(p2) + balls(p3) - 2;
                                        if b < 2 {
                                            continue;
                                        }
                                        let pieces = [p0.clone(), p1.clone(), p2.clone(), p3.clone()];
                                        for i1 in 1..=n0 {
                                            let p = compose_plus_two(&pieces, i1).unwrap();
                                            let seq = sequence_of(&p).unwrap();
                                            assert_eq!(crossings(&seq), b * (b - 1) + 2);
                                            assert!(is_identity_with_crossings(&seq, 2));
                                            *counts.entry((b, n)).or_default() += 1;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        for b in 2..=3 {
            for n in 4..=7 {
                let got = counts.get(&(b, n)).copied().unwrap_or(0);
                assert_eq!(num_bigint::BigUint::from(got), g_count(b, n), "g({b},{n})");
            }
        }
    }

    #[test]
    fn rejects_non_members() {
        assert!(decompose_plus_two(&[1, 2, 2]).is_err());
        assert!(compose_plus_two(&[vec![1], vec![1], vec![1], vec![1]], 2).is_err());
    }
}
