//! Lines of `AG(2, q)` with `F_{q^2}` as the point set.
//!
//! The line through `a` with slope `s` is `{a + c s : c ∈ F_q}`. Slopes
//! are taken modulo `F_q^*`, which leaves `q + 1` direction classes. Since
//! `F_q^* = <β^{q+1}>` the class of `s` is `log(s) mod (q + 1)` and its
//! smallest-index representative is `β^{log(s) mod (q + 1)}`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Line {
    /// Smallest-index point on the line.
    pub base: FieldElem,
    /// Canonical direction representative.
    pub slope: FieldElem,
    /// The `q` points, ascending.
    pub points: Vec<FieldElem>,
    /// Direction class in `0..=q`.
    pub class: u32,
}

impl Line {
    pub fn contains(&self, x: FieldElem) -> bool {
        self.points.binary_search(&x).is_ok()
    }
}

/// Direction class of a nonzero slope.
pub fn direction_class(ctx: &FieldCtx, slope: FieldElem) -> Result<u32> {
    let k = ctx.log(slope).ok_or(Error::DegeneratePair)?;
    Ok(k % (ctx.q() + 1))
}

/// The line through `point` in the direction of `slope`.
pub fn line_with_slope(ctx: &FieldCtx, point: FieldElem, slope: FieldElem) -> Result<Line> {
    let class = direction_class(ctx, slope)?;
    let slope = ctx.exp(class as u64);
    let mut points: Vec<FieldElem> = ctx
        .subfield()
        .into_iter()
        .map(|c| ctx.add(point, ctx.mul(c, slope)))
        .collect();
    points.sort_unstable();
    Ok(Line {
        base: points[0],
        slope,
        points,
        class,
    })
}

pub fn line_through(ctx: &FieldCtx, a: FieldElem, b: FieldElem) -> Result<Line> {
    if a == b {
        return Err(Error::DegeneratePair);
    }
    line_with_slope(ctx, a, ctx.sub(b, a))
}

/// Whether the slope is a square. Every element of `F_q^*` is a square of
/// `F_{q^2}`, and `q + 1` is even, so this is the parity of the class.
pub fn is_quadratic(line: &Line) -> bool {
    line.class % 2 == 0
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pencil {
    pub lines: Vec<Line>,
    pub quadratic: usize,
    pub non_quadratic: usize,
}

impl Pencil {
    pub fn total(&self) -> usize {
        self.lines.len()
    }
}

/// All lines through `p`, one per direction class.
pub fn lines_through_point(ctx: &FieldCtx, p: FieldElem) -> Pencil {
    let lines: Vec<Line> = (0..=ctx.q())
        .map(|c| line_with_slope(ctx, p, ctx.exp(c as u64)).expect("nonzero slope"))
        .collect();
    let quadratic = lines.iter().filter(|l| is_quadratic(l)).count();
    Pencil {
        non_quadratic: lines.len() - quadratic,
        quadratic,
        lines,
    }
}

/// Every line of the plane, ordered by class and then by base point.
pub fn all_lines(ctx: &FieldCtx) -> Vec<Line> {
    let mut out = Vec::with_capacity((ctx.q() * (ctx.q() + 1)) as usize);
    for c in 0..=ctx.q() {
        let slope = ctx.exp(c as u64);
        let mut seen = alloc::vec![false; ctx.size()];
        for p in ctx.elements() {
            if seen[p.index()] {
                continue;
            }
            let line = line_with_slope(ctx, p, slope).expect("nonzero slope");
            for x in &line.points {
                seen[x.index()] = true;
            }
            out.push(line);
        }
    }
    out
}

/// A line meeting a vertex set in at least three points.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Collinearity {
    /// The intersection, ascending.
    pub members: Vec<FieldElem>,
    pub line: Line,
}

/// Lines meeting `vertices` in three or more points, ordered by intersection.
pub fn collinear_triples(ctx: &FieldCtx, vertices: &[FieldElem]) -> Vec<Collinearity> {
    let mut lines = BTreeSet::new();
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            if a != b {
                lines.insert(line_through(ctx, a, b).expect("distinct points"));
            }
        }
    }
    let mut out: Vec<Collinearity> = lines
        .into_iter()
        .filter_map(|line| {
            let mut members: Vec<FieldElem> = vertices
                .iter()
                .copied()
                .filter(|&x| line.contains(x))
                .collect();
            members.sort_unstable();
            members.dedup();
            (members.len() >= 3).then_some(Collinearity { members, line })
        })
        .collect();
    out.sort();
    out
}
