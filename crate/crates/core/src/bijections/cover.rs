use std::cmp::Ordering;
use std::fmt;

use crate::cards::{reconstruct, Arrangement, CardSequence};
use crate::error::{Error, Result};

/// A `k × n` 0/1 matrix whose columns each hold exactly `m` ones and whose
/// rows are nonempty. Row `i` is the virtual ball `x_i`; column `j` the set
/// `B_j` thrown at time `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoverMatrix {
    m: usize,
    rows: Vec<Vec<bool>>,
}

impl CoverMatrix {
    pub fn new(m: usize, rows: Vec<Vec<bool>>) -> Result<Self> {
        let n = rows.first().map(Vec::len).unwrap_or(0);
        if rows.is_empty() || n == 0 {
            return Err(Error::InvalidInput("cover matrix must be nonempty".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput("cover matrix rows differ in length".into()));
        }
        if let Some(i) = rows.iter().position(|r| !r.contains(&true)) {
            return Err(Error::InvalidInput(format!("row {} is empty", i + 1)));
        }
        for j in 0..n {
            let sum = rows.iter().filter(|r| r[j]).count();
            if sum != m {
                return Err(Error::InvalidInput(format!(
                    "column {} has {sum} ones, expected {m}",
                    j + 1
                )));
            }
        }
        Ok(Self { m, rows })
    }

    /// From integer rows; each entry must be 0 or 1.
    pub fn from_ints(m: usize, rows: &[Vec<u8>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| match x {
                        0 => Ok(false),
                        1 => Ok(true),
                        _ => Err(Error::InvalidInput(format!("matrix entry {x} is not 0/1"))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(m, rows)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of rows (virtual balls).
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns.
    pub fn n(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<bool>] {
        &self.rows
    }

    pub fn to_ints(&self) -> Vec<Vec<u8>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&x| x as u8).collect())
            .collect()
    }

    /// Rows (1-based) holding a one in column `j` (1-based), ascending.
    pub fn column(&self, j: usize) -> Vec<usize> {
        (0..self.k())
            .filter(|&i| self.rows[i][j - 1])
            .map(|i| i + 1)
            .collect()
    }

    /// `x_u ≺ x_v`: the first column holding exactly one of the two holds
    /// `x_u`. `Equal` means the rows are equivalent.
    pub fn compare(&self, u: usize, v: usize) -> Ordering {
        // a one sorts first
        self.rows[v - 1].cmp(&self.rows[u - 1])
    }
}

/// The classes of a total preorder on virtual balls, least first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualOrder {
    classes: Vec<Vec<usize>>,
}

impl VirtualOrder {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    fn class_of(&self, x: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(&x))
    }

    pub fn precedes(&self, u: usize, v: usize) -> bool {
        matches!((self.class_of(u), self.class_of(v)), (Some(a), Some(b)) if a < b)
    }

    pub fn equivalent(&self, u: usize, v: usize) -> bool {
        matches!((self.class_of(u), self.class_of(v)), (Some(a), Some(b)) if a == b)
    }
}

/// `x1 ≺ x3 ≺ x2 ≡ x4 ≺ x5`.
impl fmt::Display for VirtualOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .classes
            .iter()
            .map(|c| c.iter().map(|x| format!("x{x}")).collect::<Vec<_>>().join(" ≡ "))
            .collect();
        write!(f, "{}", parts.join(" ≺ "))
    }
}

/// The preorder `≺` on the rows of `m`. It is the lexicographic order of the
/// rows read as 0/1 words with ones first, hence always total.
pub fn cover_partial_order(m: &CoverMatrix) -> VirtualOrder {
    let mut balls: Vec<usize> = (1..=m.k()).collect();
    balls.sort_by(|&u, &v| m.compare(u, v).then(u.cmp(&v)));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in balls {
        match classes.last_mut() {
            Some(last) if m.compare(last[0], x) == Ordering::Equal => last.push(x),
            _ => classes.push(vec![x]),
        }
    }
    VirtualOrder { classes }
}

/// Left-edge order of the virtual balls: `≺`, with equivalent balls kept in
/// their terminal order (they are always thrown together, so that order
/// never changes).
pub fn cover_initial_order(m: &CoverMatrix, terminal: &Arrangement) -> Result<Vec<usize>> {
    check_terminal(m, terminal)?;
    let mut balls: Vec<usize> = (1..=m.k()).collect();
    balls.sort_by_key(|&x| terminal.position_of(x));
    balls.sort_by(|&u, &v| m.compare(u, v));
    Ok(balls)
}

fn check_terminal(m: &CoverMatrix, terminal: &Arrangement) -> Result<()> {
    if terminal.len() != m.k() {
        return Err(Error::BallCountMismatch {
            expected: m.k(),
            found: terminal.len(),
        });
    }
    Ok(())
}

/// The order-preserving sequence throwing `B_j` at card `j` and ending with
/// the virtual balls in `terminal`, bottom to top.
///
/// Balls are numbered by their place in [`cover_initial_order`], so the
/// sequence starts from `[1, …, k]`.
pub fn cover_to_sequence(m: &CoverMatrix, terminal: &Arrangement) -> Result<CardSequence> {
    let initial = cover_initial_order(m, terminal)?;
    let pattern: Vec<Vec<usize>> = (1..=m.n()).map(|j| m.column(j)).collect();
    let (seq, left) = reconstruct(m.k(), &pattern, terminal, true)?;
    if left.order() != initial.as_slice() {
        let order = cover_partial_order(m);
        let pair = left
            .order()
            .iter()
            .zip(&initial)
            .find(|(a, b)| a != b)
            .map(|(&a, &b)| (a, b))
            .unwrap_or((0, 0));
        let relation = if order.equivalent(pair.0, pair.1) {
            "equivalent"
        } else {
            "ordered by ≺"
        };
        return Err(Error::NotInFamily(format!(
            "the throws force x{} below x{}, which are {relation} the other way",
            pair.0, pair.1
        )));
    }
    Ok(seq)
}

/// Edge-labelled loopless multigraph on `[k]`: edge `j` joins the two rows
/// of column `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    pub k: usize,
    pub edges: Vec<(usize, usize)>,
}

pub fn cover_to_multigraph(m: &CoverMatrix) -> Result<Multigraph> {
    if m.m() != 2 {
        return Err(Error::InvalidInput(format!(
            "need a 2-cover, found m = {}",
            m.m()
        )));
    }
    let edges = (1..=m.n())
        .map(|j| {
            let c = m.column(j);
            (c[0], c[1])
        })
        .collect();
    Ok(Multigraph { k: m.k(), edges })
}

pub fn multigraph_to_cover(g: &Multigraph) -> Result<CoverMatrix> {
    let mut rows = vec![vec![false; g.edges.len()]; g.k];
    for (j, &(u, v)) in g.edges.iter().enumerate() {
        if u == v {
            return Err(Error::InvalidInput(format!(
                "edge {} is a loop at {u}; a column cannot select one row twice",
                j + 1
            )));
        }
        for x in [u, v] {
            if x == 0 || x > g.k {
                return Err(Error::OutOfRange {
                    what: "vertex",
                    value: x,
                    lo: 1,
                    hi: g.k,
                });
            }
            rows[x - 1][j] = true;
        }
    }
    CoverMatrix::new(2, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cards::{sequence_permutation, throw_pattern, Card};
    use crate::enumeration::enumerate_2covers;

    fn printed_matrix() -> CoverMatrix {
        CoverMatrix::from_ints(
            2,
            &[
                vec![1, 0, 1, 0, 0, 0, 1],
                vec![0, 1, 0, 0, 1, 0, 0],
                vec![1, 0, 0, 1, 0, 1, 0],
                vec![0, 1, 0, 0, 1, 0, 0],
                vec![0, 0, 1, 1, 0, 1, 1],
            ],
        )
        .unwrap()
    }

    #[test]
    fn printed_order() {
        let order = cover_partial_order(&printed_matrix());
        assert_eq!(order.to_string(), "x1 ≺ x3 ≺ x2 ≡ x4 ≺ x5");
        assert!(order.precedes(1, 3));
        assert!(order.equivalent(2, 4));
    }

    #[test]
    fn printed_sequence() {
        let m = printed_matrix();
        let terminal = Arrangement::new(vec![4, 1, 5, 3, 2]).unwrap();
        assert_eq!(cover_initial_order(&m, &terminal).unwrap(), vec![1, 3, 4, 2, 5]);
        let seq = cover_to_sequence(&m, &terminal).unwrap();
        assert!(seq.cards().iter().all(Card::is_order_preserving));
        // x_1→1, x_3→2, x_4→3, x_2→4, x_5→5
        let rename = [0, 1, 4, 2, 3, 5];
        let expect: Vec<Vec<usize>> = (1..=7)
            .map(|j| {
                let mut col: Vec<usize> = m.column(j).iter().map(|&x| rename[x]).collect();
                col.sort_unstable();
                col
            })
            .collect();
        let got: Vec<Vec<usize>> = throw_pattern(&seq)
            .throws()
            .iter()
            .map(|t| {
                let mut t = t.clone();
                t.sort_unstable();
                t
            })
            .collect();
        assert_eq!(got, expect);
        let fin: Vec<usize> = terminal.order().iter().map(|&x| rename[x]).collect();
        assert_eq!(crate::cards::final_arrangement(&seq).order(), fin.as_slice());
    }

    #[test]
    fn small_orders() {
        let m = CoverMatrix::from_ints(2, &[vec![1], vec![1]]).unwrap();
        assert_eq!(cover_partial_order(&m).to_string(), "x1 ≡ x2");
        // the three two-edge multigraphs
        let double = CoverMatrix::from_ints(2, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(cover_partial_order(&double).to_string(), "x1 ≡ x2");
        let path = CoverMatrix::from_ints(2, &[vec![1, 0], vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(cover_partial_order(&path).to_string(), "x2 ≺ x1 ≺ x3");
        let disjoint = CoverMatrix::from_ints(2, &[vec![1, 0], vec![1, 0], vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(cover_partial_order(&disjoint).to_string(), "x1 ≡ x2 ≺ x3 ≡ x4");
    }

    #[test]
    fn one_row_cover() {
        let m = CoverMatrix::from_ints(1, &[vec![1, 1, 1]]).unwrap();
        let seq = cover_to_sequence(&m, &Arrangement::identity(1)).unwrap();
        assert_eq!(seq.to_string(), "C1 C1 C1");
    }

    #[test]
    fn identity_terminal_gives_identity() {
        for n in 1..=4 {
            for k in 2..=4 {
                for m in enumerate_2covers(n, k) {
                    let seq = cover_to_sequence(&m, &Arrangement::identity(k)).unwrap();
                    assert!(sequence_permutation(&seq).is_identity());
                }
            }
        }
    }

    #[test]
    fn every_terminal_works() {
        let m = printed_matrix();
        for sigma in crate::cards::Permutation::all(5) {
            let terminal = crate::cards::arrangement_of(&sigma);
            let seq = cover_to_sequence(&m, &terminal).unwrap();
            assert_eq!(seq.len(), 7);
        }
    }

    #[test]
    fn multigraph_roundtrip() {
        for k in 2..=6 {
            for m in enumerate_2covers(3, k) {
                let g = cover_to_multigraph(&m).unwrap();
                assert_eq!(multigraph_to_cover(&g).unwrap(), m);
            }
        }
        let g = Multigraph {
            k: 2,
            edges: vec![(1, 2)],
        };
        assert_eq!(multigraph_to_cover(&g).unwrap().to_ints(), vec![vec![1], vec![1]]);
        let loopy = Multigraph {
            k: 2,
            edges: vec![(1, 1)],
        };
        assert!(multigraph_to_cover(&loopy).is_err());
    }

    #[test]
    fn invalid_matrices() {
        assert!(CoverMatrix::from_ints(2, &[vec![1, 1], vec![0, 1]]).is_err());
        assert!(CoverMatrix::from_ints(2, &[vec![1], vec![1], vec![0]]).is_err());
        assert!(CoverMatrix::from_ints(2, &[vec![2], vec![0]]).is_err());
    }
}
