//! Finite simple graphs on vertices `1..=n` and the invariants used by the
//! classifiers and regularity bounds.
//!
//! Adjacency is stored as one `u64` bitmask per vertex (bit `v - 1` for
//! vertex `v`), so `n <= 64`. All searches are exhaustive; they are meant for
//! graphs with a dozen or so vertices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// An edge `{i, j}` with `i < j`, 1-based.
pub type Edge = (usize, usize);

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<Edge>,
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr { n: g.n, edges: g.edges() }
    }
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;
    fn try_from(r: GraphRepr) -> Result<Self> {
        Graph::from_edges(r.n, &r.edges)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Girth {
    Acyclic,
    Length(usize),
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Acyclic => f.write_str("acyclic"),
            Girth::Length(k) => write!(f, "{k}"),
        }
    }
}

/// Summary of the invariants the classifiers consume.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphInvariants {
    pub connected: bool,
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
    pub girth: Girth,
    pub internal_vertex_count: usize,
    pub longest_induced_path: usize,
    pub longest_induced_odd_cycle: usize,
    pub cut_vertices: Vec<usize>,
    pub blocks: Vec<Vec<Edge>>,
}

/// Error from the edge-list reader with a 1-based position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

fn bit(v: usize) -> u64 {
    1u64 << (v - 1)
}

/// Vertices (1-based) of a bitmask, ascending.
pub fn mask_vertices(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize + 1);
        m &= m - 1;
    }
    out
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!("vertex count {n} outside 1..={MAX_VERTICES}")));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph; endpoints may be given in either order.
    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(i, j) in edges {
            g.insert_edge(i, j)?;
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<Edge> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least three vertices");
        let mut edges: Vec<Edge> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((1, n));
        Graph::from_edges(n, &edges).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<Edge> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
        Graph::from_edges(n, &edges).expect("valid clique")
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            return Err(Error::InvalidGraph(format!("vertex {v} outside 1..={}", self.n)));
        }
        Ok(())
    }

    fn insert_edge(&mut self, i: usize, j: usize) -> Result<()> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(Error::InvalidGraph(format!("loop at vertex {i}")));
        }
        let (a, b) = (i.min(j), i.max(j));
        if self.has_edge(a, b) {
            return Err(Error::EdgeAlreadyPresent(a, b));
        }
        self.adj[a - 1] |= bit(b);
        self.adj[b - 1] |= bit(a);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn all_vertices(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && (1..=self.n).contains(&i) && (1..=self.n).contains(&j) && self.adj[i - 1] & bit(j) != 0
    }

    /// Edges `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in mask_vertices(self.adj[i - 1] >> i) {
                out.push((i, i + j));
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        mask_vertices(self.adj[v - 1])
    }

    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    /// `G ∖ e`.
    pub fn delete_edge(&self, e: Edge) -> Result<Graph> {
        let (i, j) = e;
        if !self.has_edge(i, j) {
            return Err(Error::EdgeNotPresent(i.min(j), i.max(j)));
        }
        let mut g = self.clone();
        g.adj[i - 1] &= !bit(j);
        g.adj[j - 1] &= !bit(i);
        Ok(g)
    }

    pub fn add_edge(&self, e: Edge) -> Result<Graph> {
        let mut g = self.clone();
        g.insert_edge(e.0, e.1)?;
        Ok(g)
    }

    /// `G_e`: adds every edge inside `N(u)` and inside `N(v)`; `e` itself is not added.
    pub fn edge_completion(&self, e: Edge) -> Result<Graph> {
        let (u, v) = e;
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Err(Error::EdgeAlreadyPresent(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        for w in [u, v] {
            let nb = self.adj[w - 1];
            for a in mask_vertices(nb) {
                g.adj[a - 1] |= nb & !bit(a);
            }
        }
        Ok(g)
    }

    /// The graph on `vertices` (a bitmask), relabeled `1..k` in increasing order.
    pub fn induced_subgraph(&self, vertices: u64) -> Graph {
        let vs = mask_vertices(vertices & self.all_vertices());
        let mut pos = vec![0usize; self.n + 1];
        for (k, &v) in vs.iter().enumerate() {
            pos[v] = k + 1;
        }
        let mut g = Graph { n: vs.len(), adj: vec![0; vs.len()] };
        for (k, &v) in vs.iter().enumerate() {
            for w in mask_vertices(self.adj[v - 1] & vertices) {
                g.adj[k] |= bit(pos[w]);
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v - 1]` (a permutation of `1..=n`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = 0u64;
        if perm.len() != self.n {
            return Err(Error::InvalidGraph("permutation length differs from n".into()));
        }
        for &p in perm {
            self.check_vertex(p)?;
            seen |= bit(p);
        }
        if seen != self.all_vertices() {
            return Err(Error::InvalidGraph("not a permutation".into()));
        }
        let edges: Vec<Edge> = self.edges().into_iter().map(|(i, j)| (perm[i - 1], perm[j - 1])).collect();
        Graph::from_edges(self.n, &edges)
    }

    /// Connected components as vertex bitmasks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut left = self.all_vertices();
        let mut out = Vec::new();
        while left != 0 {
            let start = left & left.wrapping_neg();
            let comp = self.reach(start, self.all_vertices());
            out.push(comp);
            left &= !comp;
        }
        out
    }

    /// Vertices reachable from `from` inside `within`.
    fn reach(&self, from: u64, within: u64) -> u64 {
        let mut seen = from & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in mask_vertices(frontier) {
                next |= self.adj[v - 1];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n
    }

    /// Connected with every degree at most two and no cycle (includes `P_1`).
    pub fn is_path(&self) -> bool {
        self.is_tree() && (1..=self.n).all(|v| self.degree(v) <= 2)
    }

    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.is_connected() && (1..=self.n).all(|v| self.degree(v) == 2)
    }

    /// Shortest cycle length by breadth-first search from every vertex.
    pub fn girth(&self) -> Girth {
        let mut best = usize::MAX;
        for s in 1..=self.n {
            let mut dist = vec![usize::MAX; self.n + 1];
            let mut parent = vec![0usize; self.n + 1];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        best = best.min(dist[v] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Acyclic
        } else {
            Girth::Length(best)
        }
    }

    /// A proper 2-colouring with the smallest vertex of each component in `V₁`.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut color = vec![u8::MAX; self.n + 1];
        for s in 1..=self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        let v1 = (1..=self.n).filter(|&v| color[v] == 0).collect();
        let v2 = (1..=self.n).filter(|&v| color[v] == 1).collect();
        Some((v1, v2))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Maximal cliques as bitmasks (Bron–Kerbosch with pivoting), sorted.
    pub fn maximal_cliques(&self) -> Vec<u64> {
        let mut out = Vec::new();
        self.bron_kerbosch(0, self.all_vertices(), 0, &mut out);
        out.sort_unstable();
        out
    }

    fn bron_kerbosch(&self, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let pivot = mask_vertices(p | x).into_iter().max_by_key(|&u| (p & self.adj[u - 1]).count_ones()).unwrap();
        for v in mask_vertices(p & !self.adj[pivot - 1]) {
            let nv = self.adj[v - 1];
            self.bron_kerbosch(r | bit(v), p & nv, x & nv, out);
            p &= !bit(v);
            x |= bit(v);
        }
    }

    /// Vertices lying in at least two maximal cliques.
    pub fn internal_vertices(&self) -> Vec<usize> {
        let cliques = self.maximal_cliques();
        (1..=self.n).filter(|&v| cliques.iter().filter(|&&c| c & bit(v) != 0).count() >= 2).collect()
    }

    /// `iv(G)`.
    pub fn internal_vertex_count(&self) -> usize {
        self.internal_vertices().len()
    }

    /// Vertices lying in exactly one maximal clique.
    pub fn free_vertices(&self) -> Vec<usize> {
        let cliques = self.maximal_cliques();
        (1..=self.n).filter(|&v| cliques.iter().filter(|&&c| c & bit(v) != 0).count() == 1).collect()
    }

    /// Grows induced paths from `path`; `inside` is the vertex set of `path`.
    fn extend_induced(&self, last: usize, inside: u64, len: usize, best: &mut usize) {
        *best = (*best).max(len);
        let before_last = inside & !bit(last);
        for w in mask_vertices(self.adj[last - 1] & !inside) {
            if self.adj[w - 1] & before_last == 0 {
                self.extend_induced(w, inside | bit(w), len + 1, best);
            }
        }
    }

    /// `ℓ(G)`: edge count of a longest induced path.
    pub fn longest_induced_path(&self) -> usize {
        let mut best = 0;
        for s in 1..=self.n {
            self.extend_induced(s, bit(s), 0, &mut best);
        }
        best
    }

    /// Induced cycles through their smallest vertex `s`, as vertex bitmasks.
    pub fn induced_cycles(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for s in 1..=self.n {
            let higher = self.all_vertices() & !((bit(s) << 1) - 1);
            for w in mask_vertices(self.adj[s - 1] & higher) {
                self.grow_cycle(s, w, bit(s) | bit(w), higher, &mut out);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    fn grow_cycle(&self, s: usize, last: usize, inside: u64, higher: u64, out: &mut Vec<u64>) {
        let interior = inside & !bit(s) & !bit(last);
        for w in mask_vertices(self.adj[last - 1] & higher & !inside) {
            let touches = self.adj[w - 1] & inside;
            if touches & interior != 0 {
                continue;
            }
            if touches & bit(s) != 0 {
                out.push(inside | bit(w));
                continue;
            }
            self.grow_cycle(s, w, inside | bit(w), higher, out);
        }
    }

    /// `oc(G)`: length of a longest induced odd cycle, 0 if none.
    pub fn longest_induced_odd_cycle(&self) -> usize {
        self.induced_cycles()
            .into_iter()
            .map(|c| c.count_ones() as usize)
            .filter(|k| k % 2 == 1)
            .max()
            .unwrap_or(0)
    }

    /// Biconnected components as sorted edge lists, and the cut vertices.
    pub fn blocks_and_cut_vertices(&self) -> (Vec<Vec<Edge>>, Vec<usize>) {
        struct St<'a> {
            g: &'a Graph,
            disc: Vec<usize>,
            low: Vec<usize>,
            time: usize,
            stack: Vec<Edge>,
            blocks: Vec<Vec<Edge>>,
            cut: u64,
        }
        fn dfs(st: &mut St, v: usize, parent: usize) {
            st.time += 1;
            st.disc[v] = st.time;
            st.low[v] = st.time;
            let mut children = 0;
            for w in st.g.neighbors(v) {
                if st.disc[w] == 0 {
                    children += 1;
                    st.stack.push((v.min(w), v.max(w)));
                    dfs(st, w, v);
                    st.low[v] = st.low[v].min(st.low[w]);
                    if st.low[w] >= st.disc[v] {
                        if parent != 0 || children > 1 {
                            st.cut |= bit(v);
                        }
                        let e = (v.min(w), v.max(w));
                        let mut block = Vec::new();
                        while let Some(f) = st.stack.pop() {
                            block.push(f);
                            if f == e {
                                break;
                            }
                        }
                        block.sort_unstable();
                        st.blocks.push(block);
                    }
                } else if w != parent && st.disc[w] < st.disc[v] {
                    st.stack.push((v.min(w), v.max(w)));
                    st.low[v] = st.low[v].min(st.disc[w]);
                }
            }
        }
        let mut st = St {
            g: self,
            disc: vec![0; self.n + 1],
            low: vec![0; self.n + 1],
            time: 0,
            stack: Vec::new(),
            blocks: Vec::new(),
            cut: 0,
        };
        for v in 1..=self.n {
            if st.disc[v] == 0 {
                dfs(&mut st, v, 0);
            }
        }
        let mut blocks = st.blocks;
        blocks.sort();
        (blocks, mask_vertices(st.cut))
    }

    pub fn invariants(&self) -> GraphInvariants {
        let (blocks, cut_vertices) = self.blocks_and_cut_vertices();
        GraphInvariants {
            connected: self.is_connected(),
            bipartition: self.bipartition(),
            girth: self.girth(),
            internal_vertex_count: self.internal_vertex_count(),
            longest_induced_path: self.longest_induced_path(),
            longest_induced_odd_cycle: self.longest_induced_odd_cycle(),
            cut_vertices,
            blocks,
        }
    }

    /// Reads the `n m` / `i j` edge-list format; `#` starts a comment.
    pub fn parse_edge_list(text: &str) -> std::result::Result<Graph, ParseError> {
        let mut header: Option<(usize, usize)> = None;
        let mut graph: Option<Graph> = None;
        let mut seen = 0usize;
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            last_line = line;
            let body = raw.split('#').next().unwrap_or("");
            let mut fields = Vec::new();
            let mut pos = 0;
            for tok in body.split_whitespace() {
                let col = body[pos..].find(tok).unwrap() + pos;
                pos = col + tok.len();
                fields.push((col + 1, tok));
            }
            if fields.is_empty() {
                continue;
            }
            let err = |column: usize, message: String| ParseError { line, column, message };
            if fields.len() != 2 {
                let (col, _) = fields.get(2).copied().unwrap_or(fields[0]);
                return Err(err(col, format!("expected two integers, found {} fields", fields.len())));
            }
            let mut nums = [0usize; 2];
            for (k, &(col, tok)) in fields.iter().enumerate() {
                nums[k] = tok.parse().map_err(|_| err(col, format!("'{tok}' is not a non-negative integer")))?;
            }
            match header {
                None => {
                    let g = Graph::empty(nums[0]).map_err(|e| err(fields[0].0, e.to_string()))?;
                    header = Some((nums[0], nums[1]));
                    graph = Some(g);
                }
                Some((n, m)) => {
                    if seen == m {
                        return Err(err(fields[0].0, format!("more than the declared {m} edges")));
                    }
                    let g = graph.as_mut().unwrap();
                    for (k, &v) in nums.iter().enumerate() {
                        if v == 0 || v > n {
                            return Err(err(fields[k].0, format!("vertex {v} outside 1..={n}")));
                        }
                    }
                    g.insert_edge(nums[0], nums[1]).map_err(|e| err(fields[0].0, e.to_string()))?;
                    seen += 1;
                }
            }
        }
        match (header, graph) {
            (Some((_, m)), Some(g)) if seen == m => Ok(g),
            (Some((_, m)), Some(_)) => Err(ParseError {
                line: last_line + 1,
                column: 1,
                message: format!("expected {m} edges, found {seen}"),
            }),
            _ => Err(ParseError { line: last_line.max(1), column: 1, message: "missing 'n m' header".into() }),
        }
    }

    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut s = format!("{} {}\n", self.n, edges.len());
        for (i, j) in edges {
            s.push_str(&format!("{i} {j}\n"));
        }
        s
    }

    /// A canonical labeling: `perm[v - 1]` is the new label of `v`.
    ///
    /// Vertices are first split into classes by iterated degree refinement;
    /// within that ordered partition the labeling minimizing the adjacency
    /// string (pairs in the order (1,2), (1,3), (2,3), (1,4), ...) is chosen
    /// by backtracking. Isomorphic graphs get identical relabeled graphs.
    pub fn canonical_labeling(&self) -> Vec<usize> {
        let cells = self.refined_cells();
        let mut slot_cell = Vec::with_capacity(self.n);
        for (c, cell) in cells.iter().enumerate() {
            slot_cell.extend(std::iter::repeat(c).take(cell.count_ones() as usize));
        }
        let mut search = Canon { g: self, cells: &cells, slot_cell, order: Vec::new(), cols: Vec::new(), best: None };
        search.run(0);
        let (_, order) = search.best.expect("at least one labeling");
        let mut perm = vec![0; self.n];
        for (k, &v) in order.iter().enumerate() {
            perm[v - 1] = k + 1;
        }
        perm
    }

    /// The graph relabeled by [`Graph::canonical_labeling`].
    pub fn canonical_form(&self) -> Graph {
        self.relabel(&self.canonical_labeling()).expect("labeling is a permutation")
    }

    /// Ordered partition of the vertices, stable under degree refinement.
    fn refined_cells(&self) -> Vec<u64> {
        let mut color = vec![0usize; self.n + 1];
        let mut classes = 1;
        loop {
            let mut sig: Vec<(usize, Vec<usize>, usize)> = (1..=self.n)
                .map(|v| {
                    let mut nb: Vec<usize> = self.neighbors(v).into_iter().map(|w| color[w]).collect();
                    nb.sort_unstable();
                    (color[v], nb, v)
                })
                .collect();
            sig.sort();
            let mut next = vec![0usize; self.n + 1];
            let mut c = 0;
            for k in 0..sig.len() {
                if k > 0 && (sig[k].0, &sig[k].1) != (sig[k - 1].0, &sig[k - 1].1) {
                    c += 1;
                }
                next[sig[k].2] = c;
            }
            let count = c + 1;
            color = next;
            if count == classes {
                break;
            }
            classes = count;
        }
        let mut cells = vec![0u64; classes];
        for v in 1..=self.n {
            cells[color[v]] |= bit(v);
        }
        cells
    }
}

struct Canon<'a> {
    g: &'a Graph,
    cells: &'a [u64],
    slot_cell: Vec<usize>,
    order: Vec<usize>,
    /// `cols[k]`: bit `j` set when labels `j + 1` and `k + 1` are adjacent.
    cols: Vec<u64>,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

fn cmp_column(a: u64, b: u64) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    if a == b {
        return Ordering::Equal;
    }
    let diff = a ^ b;
    if a & diff & diff.wrapping_neg() != 0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

impl Canon<'_> {
    /// Current prefix (with `col` appended) against the best string so far.
    fn compare_prefix(&self, col: u64) -> std::cmp::Ordering {
        let Some((best, _)) = &self.best else { return std::cmp::Ordering::Less };
        for (a, b) in self.cols.iter().chain(std::iter::once(&col)).zip(best) {
            let o = cmp_column(*a, *b);
            if o.is_ne() {
                return o;
            }
        }
        std::cmp::Ordering::Equal
    }

    fn run(&mut self, k: usize) {
        if k == self.g.n {
            let smaller = match &self.best {
                None => true,
                Some((best, _)) => self.cols.iter().zip(best).map(|(a, b)| cmp_column(*a, *b)).find(|o| o.is_ne())
                    == Some(std::cmp::Ordering::Less),
            };
            if smaller {
                self.best = Some((self.cols.clone(), self.order.clone()));
            }
            return;
        }
        let used: u64 = self.order.iter().map(|&v| bit(v)).fold(0, |a, b| a | b);
        let cands = mask_vertices(self.cells[self.slot_cell[k]] & !used);
        let mut tried: Vec<usize> = Vec::new();
        for v in cands {
            // interchangeable twins give the same strings
            if tried.iter().any(|&u| self.g.adj[u - 1] & !bit(v) == self.g.adj[v - 1] & !bit(u)) {
                continue;
            }
            tried.push(v);
            let mut col = 0u64;
            for (j, &u) in self.order.iter().enumerate() {
                if self.g.has_edge(u, v) {
                    col |= 1 << j;
                }
            }
            if self.compare_prefix(col).is_gt() {
                continue;
            }
            self.order.push(v);
            self.cols.push(col);
            self.run(k + 1);
            self.order.pop();
            self.cols.pop();
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges().iter().map(|(i, j)| format!("{i}-{j}")).collect();
        write!(f, "n={} [{}]", self.n, parts.join(", "))
    }
}

/// Connected graphs on `n` vertices, one per isomorphism class, in canonical form.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "enumeration is for tiny n");
    let pairs: Vec<Edge> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << pairs.len()) {
        if (bits.count_ones() as usize) + 1 < n {
            continue;
        }
        let edges: Vec<Edge> = mask_vertices(bits).into_iter().map(|k| pairs[k - 1]).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if !g.is_connected() {
            continue;
        }
        let c = g.canonical_form();
        if seen.insert(c.edges()) {
            out.push(c);
        }
    }
    out.sort_by_key(|g| (g.edge_count(), g.edges()));
    out
}
