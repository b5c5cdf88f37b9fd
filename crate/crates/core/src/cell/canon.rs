//! Canonical labeling of small graphs by colour refinement plus exhaustive
//! individualization. Two graphs are isomorphic iff their canonical forms are
//! equal. Cost grows with the automorphism group, which is fine for polytope
//! skeletons of a few dozen vertices.

use std::fmt;

/// Upper triangle of the adjacency matrix under the canonical labeling,
/// packed row-major into 64-bit words.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    order: usize,
    bits: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.order)?;
        self.bits.iter().try_for_each(|w| write!(f, "{w:016x}"))
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Replaces colours by the rank of `(colour, key)`; ranks keep the order of
/// the previous colours so the ordered partition only ever splits.
fn rerank<K: Ord + Clone>(keys: Vec<(usize, K)>) -> (Vec<usize>, usize) {
    let mut distinct = keys.clone();
    distinct.sort();
    distinct.dedup();
    let ranks = keys.iter().map(|k| distinct.binary_search(k).expect("present")).collect();
    (ranks, distinct.len())
}

fn class_count(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn refine(adj: &[Vec<usize>], mut colors: Vec<usize>) -> Vec<usize> {
    let mut classes = class_count(&colors);
    loop {
        let keys = (0..adj.len())
            .map(|v| {
                let mut around: Vec<usize> = adj[v].iter().map(|&u| colors[u]).collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let (next, count) = rerank(keys);
        colors = next;
        if count == classes {
            return colors;
        }
        classes = count;
    }
}

fn leaf_bits(adj: &[Vec<usize>], labels: &[usize]) -> Vec<u64> {
    let n = adj.len();
    let total = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u64; total.div_ceil(64)];
    // position of pair (i, j), i < j, in row-major upper-triangle order
    let pos = |i: usize, j: usize| i * n - i * (i + 1) / 2 + (j - i - 1);
    for (v, around) in adj.iter().enumerate() {
        for &u in around {
            let (i, j) = (labels[v].min(labels[u]), labels[v].max(labels[u]));
            if i == j {
                continue;
            }
            let p = pos(i, j);
            bits[p / 64] |= 1u64 << (63 - p % 64);
        }
    }
    bits
}

fn search(adj: &[Vec<usize>], colors: Vec<usize>, best: &mut Option<Vec<u64>>) {
    let n = adj.len();
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
        let bits = leaf_bits(adj, &colors);
        if best.as_ref().is_none_or(|b| bits < *b) {
            *best = Some(bits);
        }
        return;
    };
    for v in (0..n).filter(|&v| colors[v] == target) {
        let keys = (0..n).map(|u| (colors[u], u != v)).collect();
        let (split, _) = rerank(keys);
        search(adj, refine(adj, split), best);
    }
}

/// Canonical form of a simple undirected graph given as adjacency lists.
pub fn canonical_form(adj: &[Vec<usize>]) -> CanonicalForm {
    let n = adj.len();
    if n == 0 {
        return CanonicalForm { order: 0, bits: Vec::new() };
    }
    let start = refine(adj, vec![0; n]);
    let mut best = None;
    search(adj, start, &mut best);
    CanonicalForm { order: n, bits: best.expect("at least one leaf") }
}

/// Cartesian product of complete graphs `K_a x K_b`.
pub fn complete_product(a: usize, b: usize) -> Vec<Vec<usize>> {
    let id = |i: usize, j: usize| i * b + j;
    let mut adj = vec![Vec::new(); a * b];
    for i in 0..a {
        for j in 0..b {
            for k in (0..a).filter(|&k| k != i) {
                adj[id(i, j)].push(id(k, j));
            }
            for k in (0..b).filter(|&k| k != j) {
                adj[id(i, j)].push(id(i, k));
            }
        }
    }
    adj
}

/// Skeleton of the `d`-dimensional cube.
pub fn hypercube(d: usize) -> Vec<Vec<usize>> {
    (0..1usize << d).map(|v| (0..d).map(|bit| v ^ (1 << bit)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relabel(adj: &[Vec<usize>], perm: &[usize]) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); adj.len()];
        for (v, around) in adj.iter().enumerate() {
            out[perm[v]] = around.iter().map(|&u| perm[u]).collect();
        }
        out
    }

    fn cycle(k: usize) -> Vec<Vec<usize>> {
        (0..k).map(|i| vec![(i + 1) % k, (i + k - 1) % k]).collect()
    }

    #[test]
    fn invariant_under_relabeling() {
        let cube = hypercube(3);
        let perm = [5, 2, 7, 0, 1, 6, 3, 4];
        assert_eq!(canonical_form(&cube), canonical_form(&relabel(&cube, &perm)));
    }

    #[test]
    fn prism_is_k2_times_k3() {
        // triangular prism: two triangles 0-1-2 and 3-4-5 joined by rungs
        let prism = vec![vec![1, 2, 3], vec![0, 2, 4], vec![0, 1, 5], vec![4, 5, 0], vec![3, 5, 1], vec![3, 4, 2]];
        assert_eq!(canonical_form(&prism), canonical_form(&complete_product(2, 3)));
    }

    #[test]
    fn distinguishes_cospectral_shapes() {
        // 3-cube versus the other simple 3-polytope with 8 vertices
        // (a tetrahedron with two vertices truncated)
        let mut twice_truncated = vec![Vec::new(); 8];
        let edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 6), (4, 7), (6, 7), (2, 6), (5, 7)];
        for (u, v) in edges {
            twice_truncated[u].push(v);
            twice_truncated[v].push(u);
        }
        assert!(twice_truncated.iter().all(|a| a.len() == 3));
        assert_ne!(canonical_form(&hypercube(3)), canonical_form(&twice_truncated));
    }

    #[test]
    fn square_is_two_cube() {
        assert_eq!(canonical_form(&cycle(4)), canonical_form(&hypercube(2)));
        assert_ne!(canonical_form(&cycle(6)), canonical_form(&complete_product(2, 3)));
    }
}
