//! Maximal clique search over [`PaleyGraph`].
//!
//! Bron–Kerbosch with pivoting on the vertex maximising `|P ∩ N(u)|`. A
//! lower size bound prunes branches with `|R| + |P| < k`; every emitted set
//! is still maximal in the whole graph because `X` is tracked as usual.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::graph::{bits, PaleyGraph, WORD};

/// A vertex set in ascending index order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CliqueSet {
    vertices: Vec<FieldElem>,
}

impl CliqueSet {
    /// Sorts and removes duplicates.
    pub fn new(mut vertices: Vec<FieldElem>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        CliqueSet { vertices }
    }

    pub fn vertices(&self) -> &[FieldElem] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, x: FieldElem) -> bool {
        self.vertices.binary_search(&x).is_ok()
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices.iter().map(|v| v.index())
    }

    pub fn is_clique(&self, graph: &PaleyGraph) -> Result<bool> {
        is_clique(graph, &self.vertices)
    }

    pub fn is_maximal(&self, graph: &PaleyGraph) -> Result<bool> {
        is_maximal_clique(graph, &self.vertices)
    }

    /// `{x + b : x ∈ C}`
    pub fn translate(&self, ctx: &FieldCtx, b: FieldElem) -> CliqueSet {
        CliqueSet::new(self.vertices.iter().map(|&x| ctx.add(x, b)).collect())
    }
}

impl From<Vec<FieldElem>> for CliqueSet {
    fn from(v: Vec<FieldElem>) -> Self {
        CliqueSet::new(v)
    }
}

pub fn is_clique(graph: &PaleyGraph, vertices: &[FieldElem]) -> Result<bool> {
    for v in vertices {
        graph.check_vertex(v.index())?;
    }
    Ok(vertices.iter().enumerate().all(|(i, a)| {
        vertices[i + 1..]
            .iter()
            .all(|b| graph.adjacent(a.index(), b.index()))
    }))
}

pub fn is_maximal_clique(graph: &PaleyGraph, vertices: &[FieldElem]) -> Result<bool> {
    if !is_clique(graph, vertices)? {
        return Ok(false);
    }
    let mut common = vec![u64::MAX; graph.words()];
    clear_tail(&mut common, graph.n());
    for v in vertices {
        for (c, r) in common.iter_mut().zip(graph.row(v.index())) {
            *c &= r;
        }
    }
    Ok(common.iter().all(|&w| w == 0))
}

fn clear_tail(set: &mut [u64], n: usize) {
    let full = n / WORD;
    if full < set.len() {
        set[full] &= (1u64 << (n % WORD)) - 1;
        for w in &mut set[full + 1..] {
            *w = 0;
        }
    }
}

#[inline]
fn count(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
fn count_and(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

/// One independent subtree: extend `r` from candidates `p`, excluding `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub r: Vec<u16>,
    pub p: Vec<u64>,
    pub x: Vec<u64>,
}

/// Configured maximal clique search.
#[derive(Clone, Debug)]
pub struct MaximalCliques<'g> {
    graph: &'g PaleyGraph,
    min_size: usize,
    anchor: Option<usize>,
}

impl<'g> MaximalCliques<'g> {
    pub fn new(graph: &'g PaleyGraph) -> Self {
        MaximalCliques {
            graph,
            min_size: 0,
            anchor: None,
        }
    }

    /// Skip maximal cliques smaller than `k`.
    pub fn min_size(mut self, k: usize) -> Self {
        self.min_size = k;
        self
    }

    /// Only maximal cliques containing `v`.
    pub fn anchor(mut self, v: usize) -> Self {
        self.anchor = Some(v);
        self
    }

    fn root(&self) -> Branch {
        let g = self.graph;
        match self.anchor {
            Some(v) => Branch {
                r: vec![v as u16],
                p: g.row(v).to_vec(),
                x: vec![0; g.words()],
            },
            None => {
                let mut p = vec![u64::MAX; g.words()];
                clear_tail(&mut p, g.n());
                Branch {
                    r: Vec::new(),
                    p,
                    x: vec![0; g.words()],
                }
            }
        }
    }

    /// Splits the root into the subtrees of its non-pivot candidates. Running
    /// every branch emits each maximal clique exactly once.
    pub fn branches(&self) -> Vec<Branch> {
        let g = self.graph;
        let Branch { r, mut p, mut x } = self.root();
        let mut out = Vec::new();
        if count(&p) == 0 {
            out.push(Branch { r, p, x });
            return out;
        }
        let cands = candidates(g, &p, &x);
        for v in bits(&cands) {
            let row = g.row(v);
            let mut r2 = r.clone();
            r2.push(v as u16);
            out.push(Branch {
                r: r2,
                p: p.iter().zip(row).map(|(a, b)| a & b).collect(),
                x: x.iter().zip(row).map(|(a, b)| a & b).collect(),
            });
            p[v / WORD] &= !(1 << (v % WORD));
            x[v / WORD] |= 1 << (v % WORD);
        }
        out
    }

    /// Runs one branch, calling `sink` with each maximal clique of size at
    /// least the configured bound. The slice is unsorted.
    pub fn run_branch(&self, branch: &Branch, sink: &mut dyn FnMut(&[u16])) {
        let mut r = branch.r.clone();
        let mut p = branch.p.clone();
        let mut x = branch.x.clone();
        expand(self.graph, self.min_size, &mut r, &mut p, &mut x, sink);
    }

    pub fn for_each(&self, mut sink: impl FnMut(&[u16])) {
        let root = self.root();
        self.run_branch(&root, &mut sink);
    }

    /// Collects sorted cliques in emission order.
    pub fn collect(&self) -> Vec<CliqueSet> {
        let mut out = Vec::new();
        self.for_each(|r| out.push(to_clique(r)));
        out
    }
}

pub(crate) fn to_clique(r: &[u16]) -> CliqueSet {
    CliqueSet::new(
        r.iter()
            .map(|&v| FieldElem::from_index(v as usize))
            .collect(),
    )
}

/// `P \ N(u)` for the pivot `u ∈ P ∪ X` maximising `|P ∩ N(u)|`.
fn candidates(g: &PaleyGraph, p: &[u64], x: &[u64]) -> Vec<u64> {
    let mut best = usize::MAX;
    let mut best_n = 0;
    for (w, (&pw, &xw)) in p.iter().zip(x).enumerate() {
        let mut word = pw | xw;
        while word != 0 {
            let u = w * WORD + word.trailing_zeros() as usize;
            word &= word - 1;
            let c = count_and(p, g.row(u));
            if best == usize::MAX || c > best_n {
                best = u;
                best_n = c;
            }
        }
    }
    let row = g.row(best);
    p.iter().zip(row).map(|(a, b)| a & !b).collect()
}

fn expand(
    g: &PaleyGraph,
    min: usize,
    r: &mut Vec<u16>,
    p: &mut [u64],
    x: &mut [u64],
    sink: &mut dyn FnMut(&[u16]),
) {
    let np = count(p);
    if np == 0 {
        if x.iter().all(|&w| w == 0) && r.len() >= min {
            sink(r);
        }
        return;
    }
    if r.len() + np < min {
        return;
    }
    let cands = candidates(g, p, x);
    let mut np2 = vec![0u64; p.len()];
    let mut nx2 = vec![0u64; p.len()];
    let mut left = np;
    for v in bits(&cands) {
        if r.len() + left < min {
            break;
        }
        let row = g.row(v);
        for i in 0..p.len() {
            np2[i] = p[i] & row[i];
            nx2[i] = x[i] & row[i];
        }
        r.push(v as u16);
        expand(g, min, r, &mut np2, &mut nx2, sink);
        r.pop();
        p[v / WORD] &= !(1 << (v % WORD));
        x[v / WORD] |= 1 << (v % WORD);
        left -= 1;
    }
}

/// Every maximal clique, optionally only those of one size, in emission order.
pub fn enumerate_maximal_cliques(graph: &PaleyGraph, size_filter: Option<usize>) -> Vec<CliqueSet> {
    let mut out = Vec::new();
    MaximalCliques::new(graph).for_each(|r| {
        if size_filter.map_or(true, |k| r.len() == k) {
            out.push(to_clique(r));
        }
    });
    out
}

/// The second-largest maximal cliques together with what the search saw
/// around them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub q: u32,
    pub clique_size: usize,
    /// Sorted, each clique once.
    pub cliques: Vec<CliqueSet>,
    /// Maximal cliques of size `q`.
    pub max_clique_count: u64,
    /// Largest maximal clique size found.
    pub max_clique_size: usize,
}

impl Census {
    pub fn count(&self) -> usize {
        self.cliques.len()
    }
}

/// Maximal cliques through vertex 0 with size at least `(q + ε) / 2`.
pub fn anchored_search(graph: &PaleyGraph) -> MaximalCliques<'_> {
    MaximalCliques::new(graph)
        .min_size(graph.second_size())
        .anchor(0)
}

/// Builds the census from the maximal cliques through 0 (of size at least
/// `(q + ε) / 2`), using that translations are automorphisms.
///
/// Each clique `C` is produced once, as `(C - min C) + min C`.
pub fn census_from_anchored(
    ctx: &FieldCtx,
    graph: &PaleyGraph,
    anchored: &[CliqueSet],
) -> Result<Census> {
    let k = graph.second_size();
    let q = ctx.q() as usize;
    let mut max_through_zero = 0u64;
    let mut max_size = 0;
    let mut base = Vec::new();
    for c in anchored {
        let s = c.len();
        max_size = max_size.max(s);
        if s == q {
            max_through_zero += 1;
        } else if s > k {
            return Err(Error::GapViolation { size: s });
        } else if s == k {
            base.push(c);
        }
    }
    let mut cliques = Vec::new();
    for a in base {
        for b in ctx.elements() {
            let c = a.translate(ctx, b);
            if c.vertices()[0] == b {
                cliques.push(c);
            }
        }
    }
    cliques.sort_unstable();
    Ok(Census {
        q: ctx.q(),
        clique_size: k,
        cliques,
        // each maximum clique has q vertices and the graph is vertex-transitive
        max_clique_count: max_through_zero * ctx.size() as u64 / q as u64,
        max_clique_size: max_size,
    })
}

/// All maximal cliques of size `(q + ε) / 2`, with the gap check.
pub fn second_largest_census(ctx: &FieldCtx, graph: &PaleyGraph) -> Result<Census> {
    let anchored = anchored_search(graph).collect();
    census_from_anchored(ctx, graph, &anchored)
}
