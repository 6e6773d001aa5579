//! Neighborhood classes and the quotient partial order.
//!
//! Two vertices are duplicates when their open neighborhoods agree and
//! coduplicates when their closed neighborhoods agree. The relation
//! `u ≡ v` (closed neighborhoods equal for adjacent pairs, open ones for
//! non-adjacent pairs) is an equivalence; on one minimum-id representative
//! per class, `u < v iff u ≢ v and N(u) ⊆ N[v]` is a strict partial order.
//! A minimum chain cover of that order, with a maximum antichain as the
//! Dilworth certificate, comes from maximum bipartite matching.

use serde::Serialize;

use crate::graph::Graph;

fn classes_by_mask(g: &Graph, mask_of: impl Fn(usize) -> u64) -> Vec<Vec<usize>> {
    let mut groups: std::collections::HashMap<u64, Vec<usize>> = std::collections::HashMap::new();
    for v in g.vertices() {
        groups.entry(mask_of(v)).or_default().push(v);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().filter(|c| c.len() >= 2).collect();
    out.sort_by_key(|c| c[0]);
    out
}

/// Maximal sets of >= 2 vertices with pairwise equal open neighborhoods,
/// ordered by minimum member.
pub fn duplication_classes(g: &Graph) -> Vec<Vec<usize>> {
    classes_by_mask(g, |v| g.open_neighborhood(v))
}

/// Maximal sets of >= 2 vertices with pairwise equal closed neighborhoods.
pub fn coduplication_classes(g: &Graph) -> Vec<Vec<usize>> {
    classes_by_mask(g, |v| g.closed_neighborhood(v))
}

/// The duplication classes `C_i` and coduplication classes `D_i` of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassPartition {
    pub duplication: Vec<Vec<usize>>,
    pub coduplication: Vec<Vec<usize>>,
}

impl ClassPartition {
    pub fn compute(g: &Graph) -> ClassPartition {
        ClassPartition {
            duplication: duplication_classes(g),
            coduplication: coduplication_classes(g),
        }
    }

    /// Total number of classes of both kinds.
    pub fn total(&self) -> usize {
        self.duplication.len() + self.coduplication.len()
    }

    /// `Σ (|C_i| - 1)` over duplication classes.
    pub fn dup_excess(&self) -> usize {
        self.duplication.iter().map(|c| c.len() - 1).sum()
    }

    /// `Σ (|D_i| - 1)` over coduplication classes.
    pub fn codup_excess(&self) -> usize {
        self.coduplication.iter().map(|c| c.len() - 1).sum()
    }
}

fn equivalent(g: &Graph, u: usize, v: usize) -> bool {
    if g.has_edge(u, v) {
        g.closed_neighborhood(u) == g.closed_neighborhood(v)
    } else {
        g.open_neighborhood(u) == g.open_neighborhood(v)
    }
}

/// The `≡`-classes, ordered by minimum member; singletons included.
pub fn equivalence_classes(g: &Graph) -> Vec<Vec<usize>> {
    let mut assigned = 0u64;
    let mut out = Vec::new();
    for u in g.vertices() {
        if assigned & (1 << u) != 0 {
            continue;
        }
        let class: Vec<usize> = (u..g.order())
            .filter(|&v| assigned & (1 << v) == 0 && equivalent(g, u, v))
            .collect();
        for &v in &class {
            assigned |= 1 << v;
        }
        out.push(class);
    }
    out
}

/// The quotient `G/≡` with the strict order `<` on minimum-id
/// representatives. The relation is stored transitively closed; construction
/// panics if the order axioms fail, which would be an implementation bug.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientOrder {
    reps: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    less: Vec<u64>, // bit j of less[i]: reps[i] < reps[j]
}

/// Builds the quotient order of `g`.
pub fn build_order(g: &Graph) -> QuotientOrder {
    let classes = equivalence_classes(g);
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let mut class_of = vec![0; g.order()];
    for (i, class) in classes.iter().enumerate() {
        for &v in class {
            class_of[v] = reps[i];
        }
    }
    let r = reps.len();
    let mut less = vec![0u64; r];
    for i in 0..r {
        for j in 0..r {
            if i == j {
                continue; // distinct classes only: u ≢ v is built in
            }
            let nu = g.open_neighborhood(reps[i]);
            let ncv = g.closed_neighborhood(reps[j]);
            if nu & !ncv == 0 {
                less[i] |= 1 << j;
            }
        }
    }
    // The order axioms are theorems about `<`; failing here means a bug.
    for i in 0..r {
        assert!(less[i] & (1 << i) == 0, "irreflexivity violated at rep {}", reps[i]);
        for j in 0..r {
            if less[i] & (1 << j) != 0 {
                assert!(
                    less[j] & (1 << i) == 0,
                    "antisymmetry violated between reps {} and {}",
                    reps[i],
                    reps[j]
                );
                assert!(
                    less[j] & !less[i] == 0,
                    "transitivity violated through reps {} < {}",
                    reps[i],
                    reps[j]
                );
            }
        }
    }
    QuotientOrder { reps, classes, class_of, less }
}

impl QuotientOrder {
    /// One representative (minimum id) per `≡`-class, ascending.
    pub fn representatives(&self) -> &[usize] {
        &self.reps
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Representative of the class containing `v`.
    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn rep_count(&self) -> usize {
        self.reps.len()
    }

    /// Strict order on representative indices.
    pub fn lt_idx(&self, i: usize, j: usize) -> bool {
        self.less[i] & (1 << j) != 0
    }

    /// Strict order on representative vertex ids.
    pub fn lt(&self, u: usize, v: usize) -> bool {
        let i = self.reps.iter().position(|&r| r == u).expect("u is a representative");
        let j = self.reps.iter().position(|&r| r == v).expect("v is a representative");
        self.lt_idx(i, j)
    }

    /// All `(u, v)` representative pairs with `u < v`.
    pub fn relation_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.rep_count() {
            for j in 0..self.rep_count() {
                if self.lt_idx(i, j) {
                    out.push((self.reps[i], self.reps[j]));
                }
            }
        }
        out
    }
}

/// A minimum chain cover together with a maximum antichain of equal size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainCover {
    /// Disjoint chains (by representative vertex id) covering all
    /// representatives; each chain is listed in increasing `<` order.
    pub chains: Vec<Vec<usize>>,
    /// Pairwise incomparable representatives; as many as there are chains.
    pub antichain: Vec<usize>,
}

impl ChainCover {
    pub fn count(&self) -> usize {
        self.chains.len()
    }
}

/// Minimum chain cover of the quotient order via maximum bipartite matching
/// (chains = representatives − matching), with the maximum antichain
/// extracted from the matching's minimum vertex cover.
pub fn min_chain_cover(q: &QuotientOrder) -> ChainCover {
    let r = q.rep_count();
    let mut match_right: Vec<Option<usize>> = vec![None; r];

    fn augment(
        q: &QuotientOrder,
        i: usize,
        seen: &mut [bool],
        match_right: &mut [Option<usize>],
    ) -> bool {
        for j in 0..q.rep_count() {
            if q.lt_idx(i, j) && !seen[j] {
                seen[j] = true;
                if match_right[j].is_none()
                    || augment(q, match_right[j].expect("checked"), seen, match_right)
                {
                    match_right[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }

    for i in 0..r {
        let mut seen = vec![false; r];
        augment(q, i, &mut seen, &mut match_right);
    }

    // Successor pointers along matched edges define the chains.
    let mut next: Vec<Option<usize>> = vec![None; r];
    let mut has_pred = vec![false; r];
    for j in 0..r {
        if let Some(i) = match_right[j] {
            next[i] = Some(j);
            has_pred[j] = true;
        }
    }
    let mut chains = Vec::new();
    for start in 0..r {
        if has_pred[start] {
            continue;
        }
        let mut chain = vec![q.reps[start]];
        let mut cur = start;
        while let Some(j) = next[cur] {
            chain.push(q.reps[j]);
            cur = j;
        }
        chains.push(chain);
    }

    // König: alternate from unmatched left vertices; the antichain is the
    // set of elements untouched by the minimum vertex cover.
    let matched_left: Vec<bool> = (0..r).map(|i| next[i].is_some()).collect();
    let mut z_left = vec![false; r];
    let mut z_right = vec![false; r];
    let mut queue: Vec<usize> = (0..r).filter(|&i| !matched_left[i]).collect();
    for &i in &queue {
        z_left[i] = true;
    }
    while let Some(i) = queue.pop() {
        for j in 0..r {
            if q.lt_idx(i, j) && !z_right[j] {
                z_right[j] = true;
                if let Some(i2) = match_right[j] {
                    if !z_left[i2] {
                        z_left[i2] = true;
                        queue.push(i2);
                    }
                }
            }
        }
    }
    let antichain: Vec<usize> = (0..r)
        .filter(|&x| z_left[x] && !z_right[x])
        .map(|x| q.reps[x])
        .collect();

    assert_eq!(chains.len(), antichain.len(), "Dilworth certificate mismatch");
    ChainCover { chains, antichain }
}

/// True iff `<` is a total order on the representatives, i.e. the minimum
/// chain cover has at most one chain.
pub fn is_threshold(g: &Graph) -> bool {
    min_chain_cover(&build_order(g)).count() <= 1
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Diamond = K4 minus the edge 1-3.
    fn diamond() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
    }

    #[test]
    fn duplication_class_examples() {
        // C4: opposite vertices share open neighborhoods.
        assert_eq!(duplication_classes(&Graph::cycle(4)), vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(duplication_classes(&Graph::complete(3)), Vec::<Vec<usize>>::new());
        assert_eq!(duplication_classes(&Graph::empty(3)), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn coduplication_class_examples() {
        assert_eq!(coduplication_classes(&Graph::complete(3)), vec![vec![0, 1, 2]]);
        assert_eq!(coduplication_classes(&Graph::cycle(4)), Vec::<Vec<usize>>::new());
        assert_eq!(coduplication_classes(&diamond()), vec![vec![0, 2]]);
    }

    #[test]
    fn equivalence_class_examples() {
        assert_eq!(equivalence_classes(&diamond()), vec![vec![0, 2], vec![1, 3]]);
        // P4: all open and closed neighborhoods pairwise distinct.
        assert_eq!(
            equivalence_classes(&Graph::path(4)),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
        assert_eq!(equivalence_classes(&Graph::complete(5)), vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn order_examples() {
        // Star: the leaf class sits below the center.
        let q = build_order(&Graph::star(4));
        assert_eq!(q.representatives(), &[0, 1]);
        assert!(q.lt(1, 0));
        assert!(!q.lt(0, 1));

        // C4: two incomparable representatives.
        let q = build_order(&Graph::cycle(4));
        assert_eq!(q.representatives(), &[0, 1]);
        assert!(!q.lt(0, 1) && !q.lt(1, 0));

        // K_n: a single representative, empty relation.
        let q = build_order(&Graph::complete(4));
        assert_eq!(q.rep_count(), 1);
        assert!(q.relation_pairs().is_empty());
    }

    #[test]
    fn chain_cover_examples() {
        let cover = min_chain_cover(&build_order(&Graph::star(4)));
        assert_eq!(cover.count(), 1);
        assert_eq!(cover.chains, vec![vec![1, 0]]);
        assert_eq!(cover.antichain.len(), 1);

        let cover = min_chain_cover(&build_order(&Graph::cycle(4)));
        assert_eq!(cover.count(), 2);
        assert_eq!(cover.antichain, vec![0, 1]);

        let cover = min_chain_cover(&build_order(&Graph::complete(3)));
        assert_eq!(cover.count(), 1);
    }

    #[test]
    fn threshold_examples() {
        assert!(is_threshold(&Graph::star(4)));
        assert!(!is_threshold(&Graph::cycle(4)));
        assert!(!is_threshold(&Graph::path(4)));
        assert!(is_threshold(&Graph::complete(5)));
        assert!(is_threshold(&Graph::empty(0)));
        assert!(is_threshold(&Graph::complete(1)));
    }

    #[test]
    fn two_case_order_definition_agrees() {
        // u < v  iff  N[u] ⊂ N[v] when adjacent, N(u) ⊂ N(v) when not.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rng.random_range(1..=9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges);
            let q = build_order(&g);
            for &u in q.representatives() {
                for &v in q.representatives() {
                    if u == v {
                        continue;
                    }
                    let two_case = if g.has_edge(u, v) {
                        let (a, b) = (g.closed_neighborhood(u), g.closed_neighborhood(v));
                        a & !b == 0 && a != b
                    } else {
                        let (a, b) = (g.open_neighborhood(u), g.open_neighborhood(v));
                        a & !b == 0 && a != b
                    };
                    assert_eq!(q.lt(u, v), two_case, "two-case mismatch on {g:?} at ({u},{v})");
                }
            }
        }
    }

    #[test]
    fn dilworth_certificate_is_valid() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.random_range(1..=9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges);
            let q = build_order(&g);
            let cover = min_chain_cover(&q);

            // Chains partition the representatives.
            let mut all: Vec<usize> = cover.chains.iter().flatten().copied().collect();
            all.sort_unstable();
            assert_eq!(all, q.representatives());

            // Each chain is totally ordered by `<`.
            for chain in &cover.chains {
                for w in chain.windows(2) {
                    assert!(q.lt(w[0], w[1]), "chain link {w:?} not ordered in {g:?}");
                }
            }

            // The antichain is pairwise incomparable and matches the count.
            for (a, &u) in cover.antichain.iter().enumerate() {
                for &v in &cover.antichain[a + 1..] {
                    assert!(!q.lt(u, v) && !q.lt(v, u), "comparable antichain in {g:?}");
                }
            }
            assert_eq!(cover.count(), cover.antichain.len());
        }
    }
}
