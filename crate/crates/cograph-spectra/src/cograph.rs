//! Cograph recognition and cotrees.
//!
//! A cograph is a graph with no induced path on four vertices. Recognition
//! here is the deliberately simple O(n^4) quadruple scan — at this scale a
//! trustworthy oracle beats a clever one — and the cotree is built by the
//! textbook recursion: union over components, join over complement
//! components, leaf at a single vertex.
//!
//! The module also enumerates one representative per isomorphism class of
//! cographs (via canonical cotrees), enumerates *all* small graphs up to
//! isomorphism (the substrate for exhaustive verification), and generates
//! seeded random cographs for testing beyond the exhaustive range.

use std::collections::BTreeSet;
use std::fmt;
use std::rc::Rc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, MAX_ORDER};

/// Cap for exhaustive cograph enumeration.
pub const ENUM_CAP: usize = 12;
/// Cap for all-graphs enumeration (isomorphism classes of arbitrary graphs).
pub const ALL_GRAPHS_ENUM_CAP: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("enumeration needs n >= 1")]
    ZeroVertices,
    #[error("n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CographError {
    #[error("the empty graph has no cotree")]
    EmptyGraph,
}

/// Four vertices inducing the path `a - b - c - d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct P4Witness {
    pub vertices: [usize; 4],
}

/// Lexicographically least `(a,b,c,d)` inducing a path `a-b-c-d`, if any.
/// Absence is exactly the cograph property.
pub fn find_induced_p4(g: &Graph) -> Option<P4Witness> {
    let n = g.order();
    for a in 0..n {
        for b in 0..n {
            if b == a || !g.has_edge(a, b) {
                continue;
            }
            for c in 0..n {
                if c == a || c == b || !g.has_edge(b, c) || g.has_edge(a, c) {
                    continue;
                }
                for d in 0..n {
                    if d == a || d == b || d == c {
                        continue;
                    }
                    if g.has_edge(c, d) && !g.has_edge(a, d) && !g.has_edge(b, d) {
                        return Some(P4Witness { vertices: [a, b, c, d] });
                    }
                }
            }
        }
    }
    None
}

pub fn is_cograph(g: &Graph) -> bool {
    find_induced_p4(g).is_none()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum CotreeOp {
    Union,
    Join,
}

impl CotreeOp {
    pub fn other(self) -> CotreeOp {
        match self {
            CotreeOp::Union => CotreeOp::Join,
            CotreeOp::Join => CotreeOp::Union,
        }
    }

    fn tag(self) -> char {
        match self {
            CotreeOp::Union => 'U',
            CotreeOp::Join => 'J',
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CotreeInvariantError {
    #[error("internal node with fewer than two children")]
    TooFewChildren,
    #[error("child of a {0:?} node is itself a {0:?} node")]
    OperatorRepetition(CotreeOp),
    #[error("leaf labels are not exactly 0..n-1")]
    BadLeafLabels,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("cotree parse error at byte {offset}: {message}")]
pub struct CotreeParseError {
    pub offset: usize,
    pub message: String,
}

/// Rooted cotree: leaves carry vertex ids, internal nodes alternate between
/// union and join and have at least two children.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cotree {
    Leaf(usize),
    Node { op: CotreeOp, children: Vec<Cotree> },
}

impl Cotree {
    pub fn leaf_count(&self) -> usize {
        match self {
            Cotree::Leaf(_) => 1,
            Cotree::Node { children, .. } => children.iter().map(Cotree::leaf_count).sum(),
        }
    }

    pub fn leaves(&self) -> Vec<usize> {
        fn collect(t: &Cotree, out: &mut Vec<usize>) {
            match t {
                Cotree::Leaf(v) => out.push(*v),
                Cotree::Node { children, .. } => children.iter().for_each(|c| collect(c, out)),
            }
        }
        let mut out = Vec::new();
        collect(self, &mut out);
        out
    }

    /// Checks arity, operator alternation, and that leaf labels are exactly
    /// `0..n-1`, each once.
    pub fn validate(&self) -> Result<(), CotreeInvariantError> {
        fn structure(t: &Cotree, parent: Option<CotreeOp>) -> Result<(), CotreeInvariantError> {
            match t {
                Cotree::Leaf(_) => Ok(()),
                Cotree::Node { op, children } => {
                    if children.len() < 2 {
                        return Err(CotreeInvariantError::TooFewChildren);
                    }
                    if parent == Some(*op) {
                        return Err(CotreeInvariantError::OperatorRepetition(*op));
                    }
                    children.iter().try_for_each(|c| structure(c, Some(*op)))
                }
            }
        }
        structure(self, None)?;
        let mut labels = self.leaves();
        labels.sort_unstable();
        if labels.iter().enumerate().any(|(i, &v)| i != v) {
            return Err(CotreeInvariantError::BadLeafLabels);
        }
        Ok(())
    }

    /// Evaluates the cotree: leaves are single vertices, union nodes take the
    /// disjoint union of their children, join nodes additionally connect
    /// every cross pair.
    pub fn to_graph(&self) -> Graph {
        self.validate().expect("cotree invariants must hold");
        let n = self.leaf_count();
        let mut edges = Vec::new();
        fn collect(t: &Cotree, edges: &mut Vec<(usize, usize)>) -> Vec<usize> {
            match t {
                Cotree::Leaf(v) => vec![*v],
                Cotree::Node { op, children } => {
                    let sets: Vec<Vec<usize>> =
                        children.iter().map(|c| collect(c, edges)).collect();
                    if *op == CotreeOp::Join {
                        for i in 0..sets.len() {
                            for j in i + 1..sets.len() {
                                for &u in &sets[i] {
                                    for &v in &sets[j] {
                                        edges.push((u, v));
                                    }
                                }
                            }
                        }
                    }
                    sets.into_iter().flatten().collect()
                }
            }
        }
        collect(self, &mut edges);
        Graph::from_edges(n, &edges)
    }

    /// Label-free encoding: operator tag plus the child encodings sorted
    /// lexicographically. Equal encodings mean isomorphic cographs.
    pub fn canonical_encoding(&self) -> String {
        match self {
            Cotree::Leaf(_) => "L".to_string(),
            Cotree::Node { op, children } => {
                let mut parts: Vec<String> =
                    children.iter().map(Cotree::canonical_encoding).collect();
                parts.sort_unstable();
                format!("{}({})", op.tag(), parts.join(""))
            }
        }
    }

    /// Parses the display form back, e.g. `J(0,U(1,2))`.
    pub fn parse_text(text: &str) -> Result<Cotree, CotreeParseError> {
        let bytes = text.trim().as_bytes();
        let mut pos = 0usize;
        let tree = parse_node(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(CotreeParseError {
                offset: pos,
                message: "trailing input after cotree".into(),
            });
        }
        Ok(tree)
    }
}

fn parse_node(bytes: &[u8], pos: &mut usize) -> Result<Cotree, CotreeParseError> {
    let err = |offset: usize, message: &str| CotreeParseError {
        offset,
        message: message.into(),
    };
    match bytes.get(*pos) {
        Some(b'U') | Some(b'J') => {
            let op = if bytes[*pos] == b'U' { CotreeOp::Union } else { CotreeOp::Join };
            *pos += 1;
            if bytes.get(*pos) != Some(&b'(') {
                return Err(err(*pos, "expected '('"));
            }
            *pos += 1;
            let mut children = vec![parse_node(bytes, pos)?];
            while bytes.get(*pos) == Some(&b',') {
                *pos += 1;
                children.push(parse_node(bytes, pos)?);
            }
            if bytes.get(*pos) != Some(&b')') {
                return Err(err(*pos, "expected ')' or ','"));
            }
            *pos += 1;
            Ok(Cotree::Node { op, children })
        }
        Some(c) if c.is_ascii_digit() => {
            let start = *pos;
            while bytes.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
                *pos += 1;
            }
            let label = std::str::from_utf8(&bytes[start..*pos])
                .expect("digits are valid utf8")
                .parse::<usize>()
                .map_err(|_| err(start, "leaf id out of range"))?;
            Ok(Cotree::Leaf(label))
        }
        Some(_) => Err(err(*pos, "expected 'U', 'J', or a leaf id")),
        None => Err(err(*pos, "unexpected end of input")),
    }
}

impl fmt::Display for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cotree::Leaf(v) => write!(f, "{v}"),
            Cotree::Node { op, children } => {
                write!(f, "{}(", op.tag())?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Result of cotree construction on a nonempty graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CotreeOutcome {
    Cotree(Cotree),
    NotCograph(P4Witness),
}

/// Builds the canonical cotree of `g`, or reports an induced P4 when `g` is
/// not a cograph. Children of every node are ordered by
/// (leaf count, canonical encoding, minimum leaf id).
pub fn build_cotree(g: &Graph) -> Result<CotreeOutcome, CographError> {
    if g.order() == 0 {
        return Err(CographError::EmptyGraph);
    }
    let all: Vec<usize> = g.vertices().collect();
    match build_rec(g, &all) {
        Some(tree) => Ok(CotreeOutcome::Cotree(tree)),
        None => Ok(CotreeOutcome::NotCograph(
            find_induced_p4(g).expect("a prime induced subgraph implies an induced P4"),
        )),
    }
}

fn build_rec(g: &Graph, vs: &[usize]) -> Option<Cotree> {
    if vs.len() == 1 {
        return Some(Cotree::Leaf(vs[0]));
    }
    let sub = g.induced_subgraph(vs).expect("ids are valid");
    let comps = sub.connected_components();
    let (op, groups) = if comps.len() > 1 {
        (CotreeOp::Union, comps)
    } else {
        let cocomps = sub.complement().connected_components();
        if cocomps.len() > 1 {
            (CotreeOp::Join, cocomps)
        } else {
            return None; // neither side splits: not a cograph (n >= 2)
        }
    };
    let mut children = Vec::with_capacity(groups.len());
    for group in groups {
        let ids: Vec<usize> = group.into_iter().map(|i| vs[i]).collect();
        children.push(build_rec(g, &ids)?);
    }
    children.sort_by_cached_key(|c| {
        (
            c.leaf_count(),
            c.canonical_encoding(),
            c.leaves().into_iter().min().expect("nonempty"),
        )
    });
    Some(Cotree::Node { op, children })
}

// ---------------------------------------------------------------------------
// Enumeration of unlabeled cographs via canonical cotrees.
//
// An unordered tree whose internal nodes all have >= 2 children, together
// with a root operator, determines a cotree (operators alternate by depth).
// Distinct trees give non-isomorphic cographs, and the two root operators
// give a disconnected / connected pair, so each isomorphism class appears
// exactly once.
// ---------------------------------------------------------------------------

struct Shape {
    leaves: usize,
    children: Vec<Rc<Shape>>, // sorted by (leaves, enc); empty for a leaf
    enc: String,
}

impl Shape {
    fn leaf() -> Shape {
        Shape { leaves: 1, children: Vec::new(), enc: "L".into() }
    }

    fn internal(children: Vec<Rc<Shape>>) -> Shape {
        let leaves = children.iter().map(|c| c.leaves).sum();
        let enc = format!(
            "({})",
            children.iter().map(|c| c.enc.as_str()).collect::<String>()
        );
        Shape { leaves, children, enc }
    }
}

/// `levels[k]` holds every shape with exactly `k` leaves, sorted by encoding.
fn shape_levels(max: usize) -> Vec<Vec<Rc<Shape>>> {
    let mut levels: Vec<Vec<Rc<Shape>>> = vec![Vec::new(); max + 1];
    if max >= 1 {
        levels[1] = vec![Rc::new(Shape::leaf())];
    }
    for n in 2..=max {
        let pool: Vec<Rc<Shape>> = levels[1..n].iter().flatten().cloned().collect();
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        multisets(&pool, n, 0, &mut chosen, &mut out);
        out.sort_by(|a, b| a.enc.cmp(&b.enc));
        levels[n] = out;
    }
    levels
}

/// Emits every multiset of pool shapes with the given total leaf count and
/// at least two members; the pool is ordered by (leaves, enc) and choices are
/// nondecreasing in pool index, so each multiset appears exactly once.
fn multisets(
    pool: &[Rc<Shape>],
    remaining: usize,
    min_idx: usize,
    chosen: &mut Vec<Rc<Shape>>,
    out: &mut Vec<Rc<Shape>>,
) {
    if remaining == 0 {
        if chosen.len() >= 2 {
            out.push(Rc::new(Shape::internal(chosen.clone())));
        }
        return;
    }
    for idx in min_idx..pool.len() {
        if pool[idx].leaves > remaining {
            break;
        }
        chosen.push(pool[idx].clone());
        multisets(pool, remaining - pool[idx].leaves, idx, chosen, out);
        chosen.pop();
    }
}

fn shape_to_cotree(shape: &Shape, op: CotreeOp, next_label: &mut usize) -> Cotree {
    if shape.children.is_empty() {
        let leaf = Cotree::Leaf(*next_label);
        *next_label += 1;
        return leaf;
    }
    Cotree::Node {
        op,
        children: shape
            .children
            .iter()
            .map(|c| shape_to_cotree(c, op.other(), next_label))
            .collect(),
    }
}

/// One canonical cotree per isomorphism class of cographs on `n` vertices,
/// in a deterministic order (union-rooted shapes first, then join-rooted).
pub fn enumerate_cotrees(n: usize) -> Result<Vec<Cotree>, EnumerationError> {
    if n == 0 {
        return Err(EnumerationError::ZeroVertices);
    }
    if n > ENUM_CAP {
        return Err(EnumerationError::CapExceeded { n, cap: ENUM_CAP });
    }
    if n == 1 {
        return Ok(vec![Cotree::Leaf(0)]);
    }
    let levels = shape_levels(n);
    let mut out = Vec::with_capacity(2 * levels[n].len());
    for op in [CotreeOp::Union, CotreeOp::Join] {
        for shape in &levels[n] {
            let mut next = 0;
            out.push(shape_to_cotree(shape, op, &mut next));
        }
    }
    Ok(out)
}

/// One representative per isomorphism class of cographs on `n` vertices.
pub fn enumerate_cographs(n: usize) -> Result<Vec<Graph>, EnumerationError> {
    Ok(enumerate_cotrees(n)?.iter().map(Cotree::to_graph).collect())
}

/// Deterministic random cograph: a random cotree with alternating operators,
/// child counts uniform in `2..=min(4, size)`, and uniform leaf splits.
pub fn random_cograph(n: usize, seed: u64) -> Graph {
    assert!(n >= 1, "random cograph needs n >= 1");
    assert!(n <= MAX_ORDER, "graph order {n} exceeds {MAX_ORDER}");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n == 1 {
        return Graph::complete(1);
    }
    let root_op = if rng.random_bool(0.5) { CotreeOp::Union } else { CotreeOp::Join };
    let mut next = 0;
    random_tree(n, root_op, &mut rng, &mut next).to_graph()
}

fn random_tree(n: usize, op: CotreeOp, rng: &mut ChaCha8Rng, next_label: &mut usize) -> Cotree {
    if n == 1 {
        let leaf = Cotree::Leaf(*next_label);
        *next_label += 1;
        return leaf;
    }
    let k = rng.random_range(2..=n.min(4));
    // Uniform composition of n into k positive parts: k-1 distinct cuts.
    let mut cuts = rand::seq::index::sample(rng, n - 1, k - 1).into_vec();
    cuts.iter_mut().for_each(|c| *c += 1);
    cuts.sort_unstable();
    cuts.insert(0, 0);
    cuts.push(n);
    let children = cuts
        .windows(2)
        .map(|w| random_tree(w[1] - w[0], op.other(), rng, next_label))
        .collect();
    Cotree::Node { op, children }
}

// ---------------------------------------------------------------------------
// All graphs up to isomorphism (small n), via canonical codes.
// ---------------------------------------------------------------------------

/// Canonical form of a graph on up to 11 vertices: the minimum, over all
/// vertex orderings compatible with a degree-based invariant partition, of
/// the upper-triangle bit string in graph6 pair order. Isomorphic graphs get
/// equal codes and non-isomorphic graphs distinct ones.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    assert!(n * n.saturating_sub(1) / 2 <= 64, "canonical code needs n <= 11");
    if n <= 1 {
        return 0;
    }
    // Isomorphism-invariant vertex key: degree plus sorted neighbor degrees.
    let keys: Vec<(usize, Vec<usize>)> = g
        .vertices()
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|u| g.degree(u)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    let mut cells: std::collections::BTreeMap<&(usize, Vec<usize>), Vec<usize>> =
        std::collections::BTreeMap::new();
    for v in g.vertices() {
        cells.entry(&keys[v]).or_default().push(v);
    }
    let mut search = CodeSearch {
        g,
        cells: cells.into_values().collect(),
        perm: Vec::with_capacity(n),
        best: u64::MAX,
    };
    search.cell(0);
    search.best
}

struct CodeSearch<'g> {
    g: &'g Graph,
    cells: Vec<Vec<usize>>,
    perm: Vec<usize>,
    best: u64,
}

impl CodeSearch<'_> {
    fn cell(&mut self, ci: usize) {
        if ci == self.cells.len() {
            self.best = self.best.min(code_under(self.g, &self.perm));
            return;
        }
        self.within_cell(ci, 0);
    }

    fn within_cell(&mut self, ci: usize, k: usize) {
        if k == self.cells[ci].len() {
            self.cell(ci + 1);
            return;
        }
        for i in k..self.cells[ci].len() {
            self.cells[ci].swap(k, i);
            self.perm.push(self.cells[ci][k]);
            self.within_cell(ci, k + 1);
            self.perm.pop();
            self.cells[ci].swap(k, i);
        }
    }
}

fn code_under(g: &Graph, perm: &[usize]) -> u64 {
    let mut code = 0u64;
    for j in 1..perm.len() {
        for i in 0..j {
            code = (code << 1) | g.has_edge(perm[i], perm[j]) as u64;
        }
    }
    code
}

/// Inverse of `canonical_code`'s bit layout for a fixed order.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if (code >> (total - 1 - bit)) & 1 != 0 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Every graph on `n` vertices up to isomorphism (n <= 8), canonically
/// labeled and sorted by canonical code. Built by vertex augmentation with
/// canonical-code deduplication.
pub fn enumerate_all_graphs(n: usize) -> Result<Vec<Graph>, EnumerationError> {
    if n == 0 {
        return Err(EnumerationError::ZeroVertices);
    }
    if n > ALL_GRAPHS_ENUM_CAP {
        return Err(EnumerationError::CapExceeded { n, cap: ALL_GRAPHS_ENUM_CAP });
    }
    let mut level: BTreeSet<u64> = BTreeSet::from([0]); // the single 1-vertex graph
    for k in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let g = graph_from_code(k - 1, code);
            for mask in 0u64..(1 << (k - 1)) {
                let mut edges = g.edges();
                for v in 0..k - 1 {
                    if mask & (1 << v) != 0 {
                        edges.push((v, k - 1));
                    }
                }
                next.insert(canonical_code(&Graph::from_edges(k, &edges)));
            }
        }
        level = next;
    }
    Ok(level.into_iter().map(|code| graph_from_code(n, code)).collect())
}
