//! Canonical labelling by partition refinement and individualization, with
//! pruning by automorphisms discovered during the search.
//!
//! The search explores the tree of ordered partitions obtained by repeatedly
//! individualizing a vertex of the first smallest non-singleton cell and
//! refining to an equitable partition. Each leaf is a discrete partition, i.e.
//! a labelling; its certificate is the relabelled adjacency matrix and the
//! canonical labelling is the leaf with the largest certificate. Two leaves
//! with equal certificates yield an automorphism, and children of a node that
//! lie in one orbit of the known automorphisms fixing the node's individualized
//! vertices are explored only once.

use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::vertex_set::VertexSet;

/// Result of a canonical labelling search.
#[derive(Debug, Clone)]
pub struct Labelling {
    /// `order[i]` is the vertex that receives canonical label `i`.
    pub order: Vec<usize>,
    /// Adjacency rows of the canonically relabelled graph.
    pub certificate: Vec<u64>,
    /// Automorphisms found during the search, as vertex maps.
    pub generators: Vec<Vec<usize>>,
    /// Cell index of each vertex in the equitable refinement of the initial
    /// partition. Vertices in different cells lie in different orbits.
    pub root_cell: Vec<usize>,
}

impl Labelling {
    pub fn canonical_graph(&self) -> Graph {
        Graph::from_adjacency_unchecked(self.certificate.clone())
    }

    /// Orbit representative (smallest member) of each vertex under the group
    /// generated by the discovered automorphisms.
    pub fn orbits(&self) -> Vec<usize> {
        let n = self.order.len();
        let mut uf = UnionFind::new(n);
        for g in &self.generators {
            for (v, &w) in g.iter().enumerate() {
                uf.union(v, w);
            }
        }
        (0..n).map(|v| uf.find(v)).collect()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.0[v] != v {
            self.0[v] = self.0[self.0[v]];
            v = self.0[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as root
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

/// Refines an ordered partition (cells as bitmasks) to the coarsest equitable
/// partition below it. Split fragments are ordered by ascending neighbor count,
/// so the result depends only on the ordered input, not on vertex names.
fn refine(adj: &[u64], cells: &mut Vec<u64>) {
    let mut counts: [u32; 64] = [0; 64];
    'restart: loop {
        for si in 0..cells.len() {
            let splitter = cells[si];
            for ci in 0..cells.len() {
                let cell = cells[ci];
                if cell & (cell - 1) == 0 {
                    continue;
                }
                let mut lo = u32::MAX;
                let mut hi = 0;
                let mut c = cell;
                while c != 0 {
                    let v = c.trailing_zeros() as usize;
                    c &= c - 1;
                    let k = (adj[v] & splitter).count_ones();
                    counts[v] = k;
                    lo = lo.min(k);
                    hi = hi.max(k);
                }
                if lo == hi {
                    continue;
                }
                let mut fragments: Vec<(u32, u64)> = Vec::new();
                let mut c = cell;
                while c != 0 {
                    let v = c.trailing_zeros() as usize;
                    c &= c - 1;
                    match fragments.iter_mut().find(|(k, _)| *k == counts[v]) {
                        Some((_, m)) => *m |= 1 << v,
                        None => fragments.push((counts[v], 1 << v)),
                    }
                }
                fragments.sort_unstable_by_key(|&(k, _)| k);
                cells.splice(ci..ci + 1, fragments.into_iter().map(|(_, m)| m));
                continue 'restart;
            }
        }
        return;
    }
}

fn certificate(adj: &[u64], order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let mut pos = [0usize; 64];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    (0..n)
        .map(|i| {
            let mut row = 0u64;
            let mut r = adj[order[i]];
            while r != 0 {
                let w = r.trailing_zeros() as usize;
                r &= r - 1;
                row |= 1 << pos[w];
            }
            row
        })
        .collect()
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    first: Option<(Vec<u64>, Vec<usize>)>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn record_automorphism(&mut self, from: &[usize], to: &[usize]) {
        let mut map = vec![0usize; self.n];
        for (&a, &b) in from.iter().zip(to) {
            map[a] = b;
        }
        if map.iter().enumerate().any(|(v, &w)| v != w) && !self.generators.contains(&map) {
            self.generators.push(map);
        }
    }

    fn leaf(&mut self, cells: &[u64]) {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let cert = certificate(self.adj, &order);
        if let Some((fc, fo)) = &self.first {
            if *fc == cert {
                let fo = fo.clone();
                self.record_automorphism(&fo, &order);
                return;
            }
        } else {
            self.first = Some((cert.clone(), order.clone()));
        }
        match &self.best {
            Some((bc, bo)) if *bc == cert => {
                let bo = bo.clone();
                self.record_automorphism(&bo, &order);
            }
            Some((bc, _)) if *bc > cert => {}
            _ => self.best = Some((cert, order)),
        }
    }

    /// Orbits of the subgroup generated by known automorphisms that fix
    /// every vertex of `fixed`.
    fn stabilizer_orbits(&self, fixed: &[usize]) -> UnionFind {
        let mut uf = UnionFind::new(self.n);
        for g in &self.generators {
            if fixed.iter().all(|&v| g[v] == v) {
                for (v, &w) in g.iter().enumerate() {
                    uf.union(v, w);
                }
            }
        }
        uf
    }

    fn search(&mut self, mut cells: Vec<u64>, prefix: &mut Vec<usize>) {
        refine(self.adj, &mut cells);
        if cells.len() == self.n {
            self.leaf(&cells);
            return;
        }
        let (target, _) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .expect("non-discrete partition has a non-singleton cell");
        let cell = cells[target];
        let mut explored: Vec<usize> = Vec::new();
        let mut known_gens = usize::MAX;
        let mut orbits = UnionFind::new(0);
        for v in VertexSet(cell) {
            if !explored.is_empty() {
                if known_gens != self.generators.len() {
                    orbits = self.stabilizer_orbits(prefix);
                    known_gens = self.generators.len();
                }
                let rv = orbits.find(v);
                if explored.iter().any(|&u| orbits.find(u) == rv) {
                    continue;
                }
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1u64 << v);
            child.push(cell & !(1u64 << v));
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            self.search(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }
}

/// Canonical labelling of `g` relative to an ordered initial colouring.
///
/// `colors` must partition the vertex set; its order is significant (only
/// colour-preserving relabellings are considered equivalent). An empty slice
/// means a single colour class.
pub fn canonical_labelling(g: &Graph, colors: &[VertexSet]) -> Labelling {
    let n = g.order();
    let adj = g.adjacency();
    let mut cells: Vec<u64> = if colors.is_empty() {
        vec![g.vertices().bits()]
    } else {
        debug_assert_eq!(colors.iter().fold(0u64, |a, c| a | c.bits()), g.vertices().bits());
        colors.iter().map(|c| c.bits()).filter(|&c| c != 0).collect()
    };
    refine(adj, &mut cells);
    let mut root_cell = vec![0usize; n];
    for (i, &c) in cells.iter().enumerate() {
        for v in VertexSet(c) {
            root_cell[v] = i;
        }
    }
    let mut search = Search {
        adj,
        n,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    search.search(cells, &mut Vec::new());
    let (certificate, order) = search.best.expect("search visits at least one leaf");
    Labelling {
        order,
        certificate,
        generators: search.generators,
        root_cell,
    }
}

/// Canonically relabelled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_labelling(g, &[]).canonical_graph()
}

/// graph6 string of the canonical relabelling; equal for two graphs exactly
/// when they are isomorphic.
pub fn canonical_form(g: &Graph) -> String {
    to_graph6(&canonical_graph(g))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && canonical_labelling(a, &[]).certificate == canonical_labelling(b, &[]).certificate
}

/// Whether some automorphism of `g` maps `u` to `v`. `labelling` must be the
/// uncoloured canonical labelling of `g`.
pub fn same_orbit(g: &Graph, labelling: &Labelling, u: usize, v: usize) -> bool {
    if u == v {
        return true;
    }
    if labelling.root_cell[u] != labelling.root_cell[v] {
        return false;
    }
    let orbits = labelling.orbits();
    if orbits[u] == orbits[v] {
        return true;
    }
    let all = g.vertices();
    let cu = canonical_labelling(g, &[VertexSet::singleton(u), all.without(u)]);
    let cv = canonical_labelling(g, &[VertexSet::singleton(v), all.without(v)]);
    cu.certificate == cv.certificate
}
