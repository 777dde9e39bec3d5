use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `[1, b]`, stored by image: `image[j - 1] = π(j)`.
///
/// A ball that starts on level `j` ends on level `π(j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        check_rearrangement(&image).map_err(Error::InvalidPermutation)?;
        Ok(Self { image })
    }

    pub fn identity(b: usize) -> Self {
        Self {
            image: (1..=b).collect(),
        }
    }

    pub(crate) fn from_image_unchecked(image: Vec<usize>) -> Self {
        debug_assert!(check_rearrangement(&image).is_ok());
        Self { image }
    }

    /// Ball count `b`.
    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `π(j)` for `j` in `[1, b]`.
    pub fn apply(&self, j: usize) -> usize {
        self.image[j - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (j, &v) in self.image.iter().enumerate() {
            inv[v - 1] = j + 1;
        }
        Self { image: inv }
    }

    /// Apply `self` first and `next` second: `j ↦ next(self(j))`.
    ///
    /// This is the order in which cards are laid down, so the permutation of
    /// `A·B` is `perm(A).then(&perm(B))`.
    pub fn then(&self, next: &Permutation) -> Self {
        assert_eq!(self.len(), next.len(), "permutations of different degree");
        Self {
            image: self.image.iter().map(|&v| next.image[v - 1]).collect(),
        }
    }

    /// Number of pairs `i < j` with `π(i) > π(j)`.
    pub fn inversions(&self) -> usize {
        let n = self.image.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.image[i] > self.image[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Disjoint cycles, each starting at its smallest element, ordered by
    /// that element. Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 1..=self.len() {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur - 1] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// True when the permutation is a single `b`-cycle.
    pub fn is_full_cycle(&self) -> bool {
        self.cycle_count() == 1
    }

    /// Build from cycle notation over `[1, b]`; elements not mentioned are fixed.
    pub fn from_cycles(b: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut image: Vec<usize> = (1..=b).collect();
        let mut used = vec![false; b];
        for cycle in cycles {
            for (idx, &x) in cycle.iter().enumerate() {
                if x == 0 || x > b || used[x - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle element {x} repeated or outside [1,{b}]"
                    )));
                }
                used[x - 1] = true;
                image[x - 1] = cycle[(idx + 1) % cycle.len()];
            }
        }
        Ok(Self { image })
    }

    /// Lexicographic rank among all permutations of `[1, b]`.
    pub fn rank(&self) -> usize {
        let n = self.len();
        let mut rank = 0;
        let mut fact = (1..n).product::<usize>().max(1);
        let mut remaining: Vec<usize> = (1..=n).collect();
        for (i, &v) in self.image.iter().enumerate() {
            let pos = remaining.iter().position(|&r| r == v).unwrap();
            rank += pos * fact;
            remaining.remove(pos);
            if i + 1 < n {
                fact /= n - 1 - i;
            }
        }
        rank
    }

    /// Inverse of [`Permutation::rank`].
    pub fn unrank(b: usize, mut rank: usize) -> Self {
        let mut remaining: Vec<usize> = (1..=b).collect();
        let mut fact = (1..b).product::<usize>().max(1);
        let mut image = Vec::with_capacity(b);
        for i in 0..b {
            let pos = rank / fact;
            rank %= fact;
            image.push(remaining.remove(pos));
            if i + 1 < b {
                fact /= b - 1 - i;
            }
        }
        Self { image }
    }

    /// All permutations of `[1, b]` in lexicographic order of image.
    pub fn all(b: usize) -> Vec<Permutation> {
        let total: usize = (1..=b).product();
        (0..total).map(|r| Self::unrank(b, r)).collect()
    }
}

/// Cycle notation with fixed points omitted; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for cycle in nontrivial {
            let parts: Vec<String> = cycle.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Bottom-to-top order of the balls: `order[i - 1] = π⁻¹(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrangement {
    order: Vec<usize>,
}

impl Arrangement {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        check_rearrangement(&order).map_err(|e| Error::InvalidInput(format!("arrangement: {e}")))?;
        Ok(Self { order })
    }

    pub fn identity(b: usize) -> Self {
        Self {
            order: (1..=b).collect(),
        }
    }

    pub(crate) fn from_order_unchecked(order: Vec<usize>) -> Self {
        Self { order }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// 1-indexed level of `ball`, if present.
    pub fn position_of(&self, ball: usize) -> Option<usize> {
        self.order.iter().position(|&x| x == ball).map(|p| p + 1)
    }

    /// The permutation whose arrangement this is.
    pub fn permutation(&self) -> Permutation {
        Permutation::from_image_unchecked(self.order.clone()).inverse()
    }
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.order.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

pub fn arrangement_of(perm: &Permutation) -> Arrangement {
    Arrangement {
        order: perm.inverse().image,
    }
}

/// `L(σ)`: the largest `ℓ` with `σ(b-ℓ+1) < … < σ(b)`. `L(identity) = b`.
pub fn l_of(perm: &Permutation) -> usize {
    let image = perm.image();
    let b = image.len();
    if b == 0 {
        return 0;
    }
    let mut l = 1;
    while l < b && image[b - l - 1] < image[b - l] {
        l += 1;
    }
    l
}

fn check_rearrangement(values: &[usize]) -> std::result::Result<(), String> {
    let b = values.len();
    let mut seen = vec![false; b];
    for &v in values {
        if v == 0 || v > b {
            return Err(format!("value {v} outside [1,{b}]"));
        }
        if seen[v - 1] {
            return Err(format!("value {v} repeated"));
        }
        seen[v - 1] = true;
    }
    Ok(())
}
