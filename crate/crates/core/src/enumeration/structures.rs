use crate::bijections::{CoverMatrix, DyckPath, LabeledDigraph, SetPartition};
use crate::cards::CardSequence;

/// Every restricted growth string of length `n`: `s_1 = 1` and
/// `s_{i+1} ≤ 1 + max(s_1..s_i)`. These are the canonical block labellings.
pub fn restricted_growth_strings(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 1..=max + 1 {
            cur.push(x);
            rec(n, cur, max.max(x), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut Vec::with_capacity(n), 0, &mut out);
    }
    out
}

/// Partitions of `[n]` into exactly `k` blocks.
pub fn enumerate_set_partitions(n: usize, k: usize) -> Vec<SetPartition> {
    restricted_growth_strings(n)
        .into_iter()
        .filter(|s| s.iter().copied().max() == Some(k))
        .map(|s| SetPartition::from_labels(&s))
        .collect()
}

/// Non-crossing partitions of `[n]` into exactly `k` blocks.
pub fn enumerate_noncrossing(n: usize, k: usize) -> Vec<SetPartition> {
    enumerate_set_partitions(n, k)
        .into_iter()
        .filter(SetPartition::is_noncrossing)
        .collect()
}

/// Dyck paths of semilength `n`, lexicographic with up steps first.
pub fn enumerate_dyck(n: usize) -> Vec<DyckPath> {
    fn rec(n: usize, up: usize, down: usize, cur: &mut Vec<bool>, out: &mut Vec<DyckPath>) {
        if down == n {
            out.push(DyckPath::new(cur.clone()).expect("prefix condition holds"));
            return;
        }
        if up < n {
            cur.push(true);
            rec(n, up + 1, down, cur, out);
            cur.pop();
        }
        if down < up {
            cur.push(false);
            rec(n, up, down + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, 0, &mut Vec::with_capacity(2 * n), &mut out);
    out
}

/// 2-covers of `[n]` by `k` nonempty sets, as multisets of rows. Each is
/// listed once, with rows in `≺` order.
pub fn enumerate_2covers(n: usize, k: usize) -> Vec<CoverMatrix> {
    fn rows_sorted(rows: &[Vec<bool>], upto: usize) -> bool {
        rows.windows(2).all(|w| w[1][..upto] <= w[0][..upto])
    }
    fn rec(n: usize, k: usize, j: usize, rows: &mut Vec<Vec<bool>>, out: &mut Vec<CoverMatrix>) {
        if j == n {
            if rows.iter().all(|r| r.contains(&true)) {
                out.push(CoverMatrix::new(2, rows.clone()).expect("column sums are 2"));
            }
            return;
        }
        for u in 0..k {
            for v in u + 1..k {
                rows[u][j] = true;
                rows[v][j] = true;
                if rows_sorted(rows, j + 1) {
                    rec(n, k, j + 1, rows, out);
                }
                rows[u][j] = false;
                rows[v][j] = false;
            }
        }
    }
    let mut out = Vec::new();
    if n > 0 && k >= 2 {
        rec(n, k, 0, &mut vec![vec![false; n]; k], &mut out);
    }
    out
}

/// Loopless digraphs with `n` labelled arcs using all of `k` vertices, up to
/// renaming vertices: the vertex sequence `t_1 h_1 t_2 h_2 …` is canonical.
pub fn enumerate_labeled_digraphs(n: usize, k: usize) -> Vec<LabeledDigraph> {
    fn rec(n: usize, k: usize, arcs: &mut Vec<(usize, usize)>, used: usize, out: &mut Vec<LabeledDigraph>) {
        if arcs.len() == n {
            if used == k {
                out.push(LabeledDigraph::new(k, arcs.clone()).expect("loopless"));
            }
            return;
        }
        // each arc can introduce at most two new vertices
        if used + 2 * (n - arcs.len()) < k {
            return;
        }
        for t in 1..=(used + 1).min(k) {
            let used_t = used.max(t);
            for h in 1..=(used_t + 1).min(k) {
                if h == t {
                    continue;
                }
                arcs.push((t, h));
                rec(n, k, arcs, used_t.max(h), out);
                arcs.pop();
            }
        }
    }
    let mut out = Vec::new();
    if n > 0 && k >= 2 {
        rec(n, k, &mut Vec::with_capacity(n), 0, &mut out);
    }
    out
}

/// Crossings counted geometrically: each card is drawn with straight tracks
/// from `(0, j)` to `(1, π(j))`, and every pair of tracks that properly
/// intersects is counted.
pub fn geometric_crossings(seq: &CardSequence) -> usize {
    fn orient(p: (i64, i64), q: (i64, i64), r: (i64, i64)) -> i64 {
        ((q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0)).signum()
    }
    let mut total = 0;
    for card in seq.cards() {
        let perm = card.permutation();
        let tracks: Vec<((i64, i64), (i64, i64))> = (1..=card.b())
            .map(|j| ((0, j as i64), (1, perm.apply(j) as i64)))
            .collect();
        for (i, &(p1, p2)) in tracks.iter().enumerate() {
            for &(q1, q2) in &tracks[i + 1..] {
                let d1 = orient(p1, p2, q1);
                let d2 = orient(p1, p2, q2);
                let d3 = orient(q1, q2, p1);
                let d4 = orient(q1, q2, p2);
                if d1 * d2 < 0 && d3 * d4 < 0 {
                    total += 1;
                }
            }
        }
    }
    total
}
