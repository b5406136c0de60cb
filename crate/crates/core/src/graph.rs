//! `P(q^2)` as dense bit rows indexed by canonical vertex index.

use alloc::vec;
use alloc::vec::Vec;

use crate::clique::CliqueSet;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};

pub(crate) const WORD: usize = 64;

#[derive(Clone, Debug)]
pub struct PaleyGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    q: u32,
    second_size: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

/// Vertices `i ~ j` iff `elem(i) - elem(j)` is a nonzero square.
pub fn build_graph(ctx: &FieldCtx) -> PaleyGraph {
    let n = ctx.size();
    let words = n.div_ceil(WORD);
    let mut rows = vec![0u64; n * words];
    for a in ctx.elements() {
        for b in ctx.elements().skip(a.index() + 1) {
            if ctx.is_square(ctx.sub(a, b)).unwrap() {
                let (i, j) = (a.index(), b.index());
                rows[i * words + j / WORD] |= 1 << (j % WORD);
                rows[j * words + i / WORD] |= 1 << (i % WORD);
            }
        }
    }
    PaleyGraph {
        n,
        words,
        rows,
        q: ctx.q(),
        second_size: ctx.second_size(),
    }
}

impl PaleyGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// `(q + ε) / 2`
    pub fn second_size(&self) -> usize {
        self.second_size
    }

    /// Words per bit row.
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words..(i + 1) * self.words]
    }

    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.words + j / WORD] >> (j % WORD) & 1 == 1
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.row(i))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::OutOfRangeVertex(v))
        }
    }
}

/// Indices of set bits, ascending.
pub(crate) fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &word)| {
        let mut x = word;
        core::iter::from_fn(move || {
            if x == 0 {
                return None;
            }
            let b = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(w * WORD + b)
        })
    })
}

/// `(v, k, λ, μ)` from common-neighbour counts over every pair.
pub fn srg_parameters(graph: &PaleyGraph) -> Result<SrgParams> {
    let n = graph.n();
    let k = graph.degree(0);
    let (mut lambda, mut mu) = (None, None);
    for i in 0..n {
        if graph.degree(i) != k {
            return Err(Error::NotStronglyRegular);
        }
        for j in i + 1..n {
            let common: usize = graph
                .row(i)
                .iter()
                .zip(graph.row(j))
                .map(|(a, b)| (a & b).count_ones() as usize)
                .sum();
            let slot = if graph.adjacent(i, j) {
                &mut lambda
            } else {
                &mut mu
            };
            match *slot {
                None => *slot = Some(common),
                Some(c) if c != common => return Err(Error::NotStronglyRegular),
                Some(_) => {}
            }
        }
    }
    Ok(SrgParams {
        v: n,
        k,
        lambda: lambda.ok_or(Error::NotStronglyRegular)?,
        mu: mu.ok_or(Error::NotStronglyRegular)?,
    })
}

/// The subfield `F_q`, a clique of size `q`.
pub fn subfield_clique(ctx: &FieldCtx, graph: &PaleyGraph) -> CliqueSet {
    let c = CliqueSet::new(ctx.subfield());
    debug_assert!(c.is_clique(graph).unwrap());
    c
}

/// Vertex set from indices, as used by tests and file formats.
pub fn vertices_from_indices(graph: &PaleyGraph, idx: &[usize]) -> Result<Vec<FieldElem>> {
    idx.iter()
        .map(|&i| graph.check_vertex(i).map(|_| FieldElem::from_index(i)))
        .collect()
}
