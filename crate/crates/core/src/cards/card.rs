use std::fmt;
use std::str::FromStr;

use super::perm::{Arrangement, Permutation};
use crate::error::{Error, Result};

/// A juggling card `C_S` on `b` levels.
///
/// The balls on levels `1..=m` are caught and thrown to levels
/// `s_1, …, s_m`; the remaining balls fill the free levels keeping their
/// relative order. `C_i` is the single-throw card with `S = (i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Card {
    b: usize,
    targets: Vec<usize>,
}

impl Card {
    pub fn new(b: usize, targets: Vec<usize>) -> Result<Self> {
        if b == 0 {
            return Err(Error::InvalidCard("ball count must be at least 1".into()));
        }
        if targets.is_empty() || targets.len() > b {
            return Err(Error::InvalidCard(format!(
                "a card throws between 1 and b={b} balls, got {}",
                targets.len()
            )));
        }
        let mut seen = vec![false; b];
        for &t in &targets {
            if t == 0 || t > b {
                return Err(Error::InvalidCard(format!("target level {t} outside [1,{b}]")));
            }
            if seen[t - 1] {
                return Err(Error::InvalidCard(format!("target level {t} repeated")));
            }
            seen[t - 1] = true;
        }
        Ok(Self { b, targets })
    }

    /// Single-throw card `C_i`.
    pub fn single(b: usize, i: usize) -> Result<Self> {
        Self::new(b, vec![i])
    }

    pub(crate) fn new_unchecked(b: usize, targets: Vec<usize>) -> Self {
        Self { b, targets }
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    /// Number of balls thrown, `m = |S|`.
    pub fn throws(&self) -> usize {
        self.targets.len()
    }

    pub fn is_single_throw(&self) -> bool {
        self.targets.len() == 1
    }

    /// The trivial card `C_1`.
    pub fn is_trivial(&self) -> bool {
        self.targets == [1]
    }

    /// True when the thrown balls keep their relative order (`s_1 < s_2 < …`).
    pub fn is_order_preserving(&self) -> bool {
        self.targets.windows(2).all(|w| w[0] < w[1])
    }

    /// `π_C`: levels `1..=m` go to the targets, the rest fill the gaps in order.
    pub fn permutation(&self) -> Permutation {
        let mut image = self.targets.clone();
        let mut used = vec![false; self.b];
        for &t in &self.targets {
            used[t - 1] = true;
        }
        image.extend((1..=self.b).filter(|&l| !used[l - 1]));
        Permutation::from_image_unchecked(image)
    }

    /// Crossings drawn on the card: the inversion count of its permutation.
    /// For `C_i` this is `i - 1`.
    pub fn crossings(&self) -> usize {
        self.permutation().inversions()
    }

    /// Move the balls of `arrangement` (bottom to top) across the card.
    pub fn apply(&self, arrangement: &[usize]) -> Vec<usize> {
        debug_assert_eq!(arrangement.len(), self.b);
        let mut out = vec![0; self.b];
        let perm = self.permutation();
        for (level, &ball) in arrangement.iter().enumerate() {
            out[perm.apply(level + 1) - 1] = ball;
        }
        out
    }
}

/// `C3`, `C2,5`.
impl fmt::Display for Card {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.targets.iter().map(|t| t.to_string()).collect();
        write!(f, "C{}", parts.join(","))
    }
}

/// Parse `C3` / `C2,5` into the target list. The ball count is supplied separately.
pub fn parse_card_targets(token: &str) -> Result<Vec<usize>> {
    let body = token
        .trim()
        .strip_prefix('C')
        .or_else(|| token.trim().strip_prefix('c'))
        .ok_or_else(|| Error::Parse(format!("card token `{token}` must start with `C`")))?;
    body.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad level `{s}` in card `{token}`")))
        })
        .collect()
}

/// A nonempty list of cards sharing one ball count.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CardSequence {
    b: usize,
    cards: Vec<Card>,
}

impl CardSequence {
    pub fn new(b: usize, cards: Vec<Card>) -> Result<Self> {
        if cards.is_empty() {
            return Err(Error::InvalidInput(
                "a card sequence needs at least one card".into(),
            ));
        }
        if let Some(c) = cards.iter().find(|c| c.b != b) {
            return Err(Error::BallCountMismatch {
                expected: b,
                found: c.b,
            });
        }
        Ok(Self { b, cards })
    }

    /// Build from target lists, e.g. `&[&[3], &[3], &[2]]`.
    pub fn from_targets<T: AsRef<[usize]>>(b: usize, targets: &[T]) -> Result<Self> {
        let cards = targets
            .iter()
            .map(|t| Card::new(b, t.as_ref().to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(b, cards)
    }

    /// Build a single-throw sequence `C_{i_1} C_{i_2} …`.
    pub fn from_singles(b: usize, heights: &[usize]) -> Result<Self> {
        let cards = heights
            .iter()
            .map(|&i| Card::single(b, i))
            .collect::<Result<Vec<_>>>()?;
        Self::new(b, cards)
    }

    pub(crate) fn new_unchecked(b: usize, cards: Vec<Card>) -> Self {
        Self { b, cards }
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn cards(&self) -> &[Card] {
        &self.cards
    }

    pub fn len(&self) -> usize {
        self.cards.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cards.is_empty()
    }

    pub fn is_single_throw(&self) -> bool {
        self.cards.iter().all(Card::is_single_throw)
    }

    /// Heights `i_k` of a single-throw sequence.
    pub fn heights(&self) -> Option<Vec<usize>> {
        self.cards
            .iter()
            .map(|c| c.is_single_throw().then(|| c.targets[0]))
            .collect()
    }

    /// Concatenation `A·B`.
    pub fn concat(&self, other: &CardSequence) -> Result<Self> {
        if self.b != other.b {
            return Err(Error::BallCountMismatch {
                expected: self.b,
                found: other.b,
            });
        }
        let mut cards = self.cards.clone();
        cards.extend(other.cards.iter().cloned());
        Ok(Self { b: self.b, cards })
    }

    /// Parse whitespace-separated card tokens. Without `b`, the largest
    /// target level is used as the ball count.
    pub fn parse(text: &str, b: Option<usize>) -> Result<Self> {
        let targets = text
            .split_whitespace()
            .map(parse_card_targets)
            .collect::<Result<Vec<_>>>()?;
        let b = match b {
            Some(b) => b,
            None => targets
                .iter()
                .flat_map(|t| t.iter().copied())
                .max()
                .ok_or_else(|| Error::Parse("empty card sequence".into()))?,
        };
        Self::from_targets(b, &targets)
    }
}

/// Space-separated card tokens.
impl fmt::Display for CardSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cards.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for CardSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, None)
    }
}

/// Balls thrown at each card, bottom-to-top as they sat on entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThrowPattern {
    throws: Vec<Vec<usize>>,
}

impl ThrowPattern {
    pub fn new(throws: Vec<Vec<usize>>) -> Self {
        Self { throws }
    }

    /// Pattern of one ball per card.
    pub fn from_singles(balls: &[usize]) -> Self {
        Self {
            throws: balls.iter().map(|&x| vec![x]).collect(),
        }
    }

    pub fn throws(&self) -> &[Vec<usize>] {
        &self.throws
    }

    pub fn len(&self) -> usize {
        self.throws.len()
    }

    pub fn is_empty(&self) -> bool {
        self.throws.is_empty()
    }

    /// The ball list when every card throws exactly one ball.
    pub fn singles(&self) -> Option<Vec<usize>> {
        self.throws.iter().map(|t| (t.len() == 1).then(|| t[0])).collect()
    }
}

pub fn card_permutation(card: &Card) -> Permutation {
    card.permutation()
}

/// `π_A`, composed in card order.
pub fn sequence_permutation(seq: &CardSequence) -> Permutation {
    seq.cards
        .iter()
        .fold(Permutation::identity(seq.b), |acc, c| acc.then(&c.permutation()))
}

/// Final bottom-to-top ball order, starting from `[1, …, b]`.
pub fn final_arrangement(seq: &CardSequence) -> Arrangement {
    super::perm::arrangement_of(&sequence_permutation(seq))
}

pub fn throw_pattern(seq: &CardSequence) -> ThrowPattern {
    let mut arr: Vec<usize> = (1..=seq.b).collect();
    let mut throws = Vec::with_capacity(seq.len());
    for card in &seq.cards {
        throws.push(arr[..card.throws()].to_vec());
        arr = card.apply(&arr);
    }
    ThrowPattern { throws }
}

/// `Cr(A)`: the sum of the card crossing numbers.
pub fn crossings(seq: &CardSequence) -> usize {
    seq.cards.iter().map(Card::crossings).sum()
}

/// Proposition "back one": recover the card and the left arrangement from the
/// right arrangement and the ordered list of thrown balls.
pub fn backward_step(right: &Arrangement, thrown: &[usize]) -> Result<(Card, Arrangement)> {
    let b = right.len();
    if thrown.is_empty() {
        return Err(Error::InvalidInput("thrown ball list is empty".into()));
    }
    let mut targets = Vec::with_capacity(thrown.len());
    for &ball in thrown {
        let pos = right
            .position_of(ball)
            .ok_or_else(|| Error::InvalidInput(format!("thrown ball {ball} is not in {right}")))?;
        if targets.contains(&pos) {
            return Err(Error::InvalidInput(format!(
                "ball {ball} thrown twice on one card"
            )));
        }
        targets.push(pos);
    }
    let mut left = thrown.to_vec();
    left.extend(right.order().iter().copied().filter(|x| !thrown.contains(x)));
    Ok((
        Card::new_unchecked(b, targets),
        Arrangement::from_order_unchecked(left),
    ))
}

/// Like [`backward_step`] for order-preserving cards: the thrown balls are a
/// set, and they leave the bottom of the left arrangement in the order they
/// hold on the right.
pub fn backward_step_order_preserving(right: &Arrangement, thrown: &[usize]) -> Result<(Card, Arrangement)> {
    let mut ordered = Vec::with_capacity(thrown.len());
    for &ball in thrown {
        let pos = right
            .position_of(ball)
            .ok_or_else(|| Error::InvalidInput(format!("thrown ball {ball} is not in {right}")))?;
        ordered.push((pos, ball));
    }
    ordered.sort_unstable();
    let balls: Vec<usize> = ordered.into_iter().map(|(_, b)| b).collect();
    backward_step(right, &balls)
}

/// Rebuild the unique cards that throw `pattern` and end at `right`,
/// working from the last card back to the first.
///
/// Returns the sequence and the arrangement on its left edge.
pub fn reconstruct(
    b: usize,
    pattern: &[Vec<usize>],
    right: &Arrangement,
    order_preserving: bool,
) -> Result<(CardSequence, Arrangement)> {
    if right.len() != b {
        return Err(Error::BallCountMismatch {
            expected: b,
            found: right.len(),
        });
    }
    let mut cards = Vec::with_capacity(pattern.len());
    let mut cur = right.clone();
    for thrown in pattern.iter().rev() {
        let (card, left) = if order_preserving {
            backward_step_order_preserving(&cur, thrown)?
        } else {
            backward_step(&cur, thrown)?
        };
        cards.push(card);
        cur = left;
    }
    cards.reverse();
    Ok((CardSequence::new(b, cards)?, cur))
}

/// Collapse runs of equal balls: `⟨1,1,2,2,1⟩ ↦ ⟨1,2,1⟩`.
pub fn reduced_pattern(balls: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(balls.len());
    for &x in balls {
        if out.last() != Some(&x) {
            out.push(x);
        }
    }
    out
}

/// No card is the trivial card `C_1`.
pub fn is_primitive(seq: &CardSequence) -> bool {
    !seq.cards.iter().any(Card::is_trivial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cards::perm::{arrangement_of, l_of};

    fn nine_cards() -> CardSequence {
        CardSequence::from_singles(4, &[3, 3, 2, 4, 3, 4, 3, 2, 2]).unwrap()
    }

    /// Reads the card from its right edge: each right-hand level is fed
    /// either by the thrown ball aimed at it or by the next unthrown ball
    /// from below. The inverse of that map is the card permutation.
    fn simulate_tracks(card: &Card) -> Vec<usize> {
        let b = card.b();
        let m = card.throws();
        let mut source = vec![0; b];
        let mut next_unthrown = m + 1;
        for level in 1..=b {
            match card.targets().iter().position(|&t| t == level) {
                Some(j) => source[level - 1] = j + 1,
                None => {
                    source[level - 1] = next_unthrown;
                    next_unthrown += 1;
                }
            }
        }
        let mut image = vec![0; b];
        for (level, &src) in source.iter().enumerate() {
            image[src - 1] = level + 1;
        }
        image
    }

    #[test]
    fn single_card_permutations() {
        assert!(Card::single(4, 1).unwrap().permutation().is_identity());
        assert_eq!(Card::single(4, 3).unwrap().permutation().image(), &[3, 1, 2, 4]);
        assert_eq!(
            Card::new(5, vec![2, 5]).unwrap().permutation().image(),
            &[2, 5, 1, 3, 4]
        );
        assert_eq!(
            Card::new(5, vec![2, 5]).unwrap().permutation().image(),
            simulate_tracks(&Card::new(5, vec![2, 5]).unwrap())
        );
    }

    #[test]
    fn every_card_is_a_bijection_up_to_b6() {
        for b in 1..=6 {
            for m in 1..=b.min(3) {
                for targets in crate::enumeration::ordered_subsets(b, m) {
                    let card = Card::new(b, targets).unwrap();
                    let perm = card.permutation();
                    assert!(Permutation::new(perm.image().to_vec()).is_ok());
                    assert_eq!(perm.image(), simulate_tracks(&card));
                }
            }
        }
    }

    #[test]
    fn nine_cards_permutation_and_arrangement() {
        let p = sequence_permutation(&nine_cards());
        assert_eq!(p.to_string(), "(1 2 4 3)");
        assert_eq!(arrangement_of(&p).order(), &[3, 1, 4, 2]);
        assert_eq!(l_of(&p), 2);
    }

    #[test]
    fn nine_cards_throws_and_crossings() {
        let tp = throw_pattern(&nine_cards());
        assert_eq!(tp.singles().unwrap(), vec![1, 2, 3, 1, 3, 2, 4, 3, 1]);
        assert_eq!(crossings(&nine_cards()), 17);
        assert!(is_primitive(&nine_cards()));
    }

    #[test]
    fn trivial_cards() {
        let seq = CardSequence::from_singles(3, &[1; 5]).unwrap();
        assert!(sequence_permutation(&seq).is_identity());
        assert_eq!(throw_pattern(&seq).singles().unwrap(), vec![1; 5]);
        assert_eq!(crossings(&seq), 0);
        assert!(!is_primitive(&CardSequence::from_singles(1, &[1]).unwrap()));
        assert!(is_primitive(&CardSequence::from_singles(2, &[2, 2]).unwrap()));
    }

    #[test]
    fn minimal_example_has_b_b_minus_1_crossings() {
        let seq = CardSequence::from_singles(5, &[3, 5, 1, 5, 2, 5, 2, 5]).unwrap();
        assert_eq!(crossings(&seq), 20);
        assert!(sequence_permutation(&seq).is_identity());
    }

    #[test]
    fn backward_steps_rebuild_nine_cards() {
        let right = Arrangement::new(vec![3, 1, 4, 2]).unwrap();
        let (card, left) = backward_step(&right, &[3]).unwrap();
        assert_eq!(card, Card::single(4, 1).unwrap());
        assert_eq!(left, right);

        let pattern: Vec<Vec<usize>> = [1, 2, 3, 1, 3, 2, 4, 3, 1].iter().map(|&x| vec![x]).collect();
        let (seq, left) = reconstruct(4, &pattern, &right, false).unwrap();
        assert_eq!(seq, nine_cards());
        assert_eq!(left, Arrangement::identity(4));
    }

    #[test]
    fn backward_step_identity_and_errors() {
        let id = Arrangement::identity(4);
        let (card, left) = backward_step(&id, &[1]).unwrap();
        assert!(card.is_trivial());
        assert_eq!(left, id);
        assert!(backward_step(&id, &[7]).is_err());
        assert!(backward_step(&id, &[]).is_err());
    }

    #[test]
    fn order_preserving_step() {
        let id = Arrangement::identity(2);
        let (card, left) = backward_step_order_preserving(&id, &[2, 1]).unwrap();
        assert_eq!(card.targets(), &[1, 2]);
        assert_eq!(left, id);
        let right = Arrangement::new(vec![4, 2, 1, 3]).unwrap();
        let (card, left) = backward_step_order_preserving(&right, &[2, 4]).unwrap();
        assert_eq!(card.targets(), &[1, 2]);
        assert_eq!(left, right);
    }

    #[test]
    fn reduced_pattern_example() {
        assert_eq!(
            reduced_pattern(&[1, 1, 1, 2, 2, 2, 1, 3, 3, 3, 3, 2, 2, 4]),
            vec![1, 2, 1, 3, 2, 4]
        );
        assert_eq!(reduced_pattern(&[1]), vec![1]);
    }

    #[test]
    fn parse_and_display() {
        let seq: CardSequence = "C3 C3 C2 C4 C3 C4 C3 C2 C2".parse().unwrap();
        assert_eq!(seq, nine_cards());
        assert_eq!(seq.to_string(), "C3 C3 C2 C4 C3 C4 C3 C2 C2");
        let multi = CardSequence::parse("C2,5 C5,2", None).unwrap();
        assert_eq!(multi.b(), 5);
        assert_eq!(multi.to_string(), "C2,5 C5,2");
        assert!(CardSequence::parse("X3", None).is_err());
        assert!(CardSequence::parse("C2,2", Some(3)).is_err());
    }
}
