//! Cards, card sequences and what they induce: permutations, arrangements,
//! crossings, throw patterns and siteswaps.
//!
//! Levels and balls are 1-indexed. A sequence is read left to right and its
//! permutation applies the first card first.

mod card;
mod perm;
mod siteswap;

pub use card::{
    backward_step, backward_step_order_preserving, card_permutation, crossings, final_arrangement,
    is_primitive, parse_card_targets, reconstruct, reduced_pattern, sequence_permutation, throw_pattern,
    Card, CardSequence, ThrowPattern,
};
pub use perm::{arrangement_of, l_of, Arrangement, Permutation};
pub use siteswap::{ball_count, siteswap_of, verify_siteswap, Siteswap};

/// The sequence `b` balls, uses `C_b`, has identity permutation and exactly
/// `b(b-1) + extra` crossings.
pub fn is_identity_with_crossings(seq: &CardSequence, extra: usize) -> bool {
    let b = seq.b();
    seq.cards().iter().any(|c| c.targets() == [b])
        && seq.is_single_throw()
        && crossings(seq) == b * (b - 1) + extra
        && sequence_permutation(seq).is_identity()
}

/// Minimal crossing sequence: uses `C_b`, `π_A = id`, `Cr(A) = b(b-1)`.
pub fn is_minimal(seq: &CardSequence) -> bool {
    is_identity_with_crossings(seq, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq_strategy(max_b: usize, max_n: usize) -> impl Strategy<Value = CardSequence> {
        (1..=max_b).prop_flat_map(move |b| {
            prop::collection::vec(1..=b, 1..=max_n)
                .prop_map(move |h| CardSequence::from_singles(b, &h).unwrap())
        })
    }

    proptest! {
        #[test]
        fn composition_is_concatenation(a in seq_strategy(5, 8), tail in prop::collection::vec(1usize..=5, 1..8)) {
            let tail: Vec<usize> = tail.into_iter().map(|h| h.min(a.b())).collect();
            let b_seq = CardSequence::from_singles(a.b(), &tail).unwrap();
            let joined = a.concat(&b_seq).unwrap();
            prop_assert_eq!(
                sequence_permutation(&joined),
                sequence_permutation(&a).then(&sequence_permutation(&b_seq))
            );
        }

        #[test]
        fn siteswap_is_valid_and_averages_to_top_level(a in seq_strategy(5, 9)) {
            // balls above the highest target never move and are never thrown
            let ss = siteswap_of(&a).unwrap();
            let top = a.heights().unwrap().into_iter().max().unwrap();
            prop_assert!(verify_siteswap(&ss));
            prop_assert_eq!(ball_count(&ss), num_rational::Ratio::from_integer(top as u64));
        }

        #[test]
        fn backward_step_inverts_forward(a in seq_strategy(5, 1)) {
            let card = &a.cards()[0];
            let left: Vec<usize> = (1..=a.b()).rev().collect();
            let right = card.apply(&left);
            let thrown = left[..card.throws()].to_vec();
            let (rc, rl) = backward_step(&Arrangement::new(right).unwrap(), &thrown).unwrap();
            prop_assert_eq!(&rc, card);
            prop_assert_eq!(rl.order(), &left[..]);
        }

        #[test]
        fn reduced_pattern_is_idempotent(p in prop::collection::vec(1usize..4, 1..20)) {
            let r = reduced_pattern(&p);
            prop_assert!(r.windows(2).all(|w| w[0] != w[1]));
            prop_assert_eq!(reduced_pattern(&r), r.clone());
        }
    }
}
