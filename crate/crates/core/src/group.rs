//! `Aut(P(q^2))`: the maps `γ ↦ a γ^{p^v} + b` with `a` a nonzero square.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::clique::CliqueSet;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Automorphism {
    pub a: FieldElem,
    pub b: FieldElem,
    /// Power of the `p`-th power map, in `0..2m`.
    pub v: u32,
}

impl Automorphism {
    pub fn new(ctx: &FieldCtx, a: FieldElem, b: FieldElem, v: u32) -> Result<Self> {
        if ctx.is_square(a) != Ok(true) {
            return Err(Error::NonSquareMultiplier);
        }
        Ok(Automorphism {
            a,
            b,
            v: v % (2 * ctx.m()),
        })
    }

    pub fn identity(ctx: &FieldCtx) -> Self {
        Automorphism {
            a: ctx.one(),
            b: ctx.zero(),
            v: 0,
        }
    }

    #[inline]
    pub fn apply(&self, ctx: &FieldCtx, x: FieldElem) -> FieldElem {
        ctx.add(ctx.mul(self.a, ctx.frobenius(x, self.v)), self.b)
    }

    pub fn apply_to_clique(&self, ctx: &FieldCtx, c: &CliqueSet) -> CliqueSet {
        CliqueSet::new(c.vertices().iter().map(|&x| self.apply(ctx, x)).collect())
    }
}

/// `(q^2 - 1)/2 · q^2 · 2m`
pub fn group_order(ctx: &FieldCtx) -> u64 {
    let n = ctx.size() as u64;
    (n - 1) / 2 * n * 2 * ctx.m() as u64
}

/// `f ∘ g`
pub fn compose(ctx: &FieldCtx, f: &Automorphism, g: &Automorphism) -> Automorphism {
    Automorphism {
        a: ctx.mul(f.a, ctx.frobenius(g.a, f.v)),
        b: ctx.add(ctx.mul(f.a, ctx.frobenius(g.b, f.v)), f.b),
        v: (f.v + g.v) % (2 * ctx.m()),
    }
}

pub fn invert(ctx: &FieldCtx, f: &Automorphism) -> Automorphism {
    let w = (2 * ctx.m() - f.v) % (2 * ctx.m());
    let ainv = ctx.inv(f.a).expect("multiplier is nonzero");
    let a = ctx.frobenius(ainv, w);
    let b = ctx.neg(ctx.frobenius(ctx.mul(f.b, ainv), w));
    Automorphism { a, b, v: w }
}

/// Every element, ordered by `v`, then `a`, then `b`.
pub fn elements(ctx: &FieldCtx) -> impl Iterator<Item = Automorphism> + '_ {
    let half = ctx.mult_order() / 2;
    (0..2 * ctx.m()).flat_map(move |v| {
        (0..half).flat_map(move |j| {
            let a = ctx.exp(2 * j as u64);
            ctx.elements().map(move |b| Automorphism { a, b, v })
        })
    })
}

/// The four generators used for orbit closure: `β^2 γ`, `γ + 1`, `γ + α`, `γ^p`.
pub fn generators(ctx: &FieldCtx) -> [Automorphism; 4] {
    let (one, zero) = (ctx.one(), ctx.zero());
    [
        Automorphism {
            a: ctx.exp(2),
            b: zero,
            v: 0,
        },
        Automorphism {
            a: one,
            b: one,
            v: 0,
        },
        Automorphism {
            a: one,
            b: ctx.alpha(),
            v: 0,
        },
        Automorphism {
            a: one,
            b: zero,
            v: 1 % (2 * ctx.m()),
        },
    ]
}

/// Setwise stabilizer of `c`, by a scan over the whole group.
pub fn stabilizer(ctx: &FieldCtx, c: &CliqueSet) -> Vec<Automorphism> {
    let mut member = vec![false; ctx.size()];
    for x in c.vertices() {
        member[x.index()] = true;
    }
    if c.is_empty() {
        return elements(ctx).collect();
    }
    let mut out = Vec::new();
    for v in 0..2 * ctx.m() {
        let fr: Vec<FieldElem> = c.vertices().iter().map(|&x| ctx.frobenius(x, v)).collect();
        for j in 0..ctx.mult_order() / 2 {
            let a = ctx.exp(2 * j as u64);
            let scaled: Vec<FieldElem> = fr.iter().map(|&x| ctx.mul(a, x)).collect();
            // the first vertex must land in c, which pins b to |c| choices
            for &target in c.vertices() {
                let b = ctx.sub(target, scaled[0]);
                if scaled.iter().all(|&y| member[ctx.add(y, b).index()]) {
                    out.push(Automorphism { a, b, v });
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Orbit of `c` under the whole group, sorted.
pub fn orbit_of(ctx: &FieldCtx, c: &CliqueSet) -> Vec<CliqueSet> {
    let mut out: Vec<CliqueSet> = elements(ctx).map(|g| g.apply_to_clique(ctx, c)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Order of `f` in the group.
pub fn element_order(ctx: &FieldCtx, f: &Automorphism) -> u64 {
    let id = Automorphism::identity(ctx);
    let mut g = *f;
    let mut k = 1;
    while g != id {
        g = compose(ctx, f, &g);
        k += 1;
    }
    k
}

/// Isomorphism type of a small group, `D_n` being dihedral of order `n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupLabel {
    Trivial,
    Cyclic(u64),
    KleinFour,
    Dihedral(u64),
    /// Order and sorted `(element order, count)` profile.
    Unknown {
        order: u64,
        profile: Vec<(u64, u64)>,
    },
}

impl GroupLabel {
    pub fn order(&self) -> u64 {
        match self {
            GroupLabel::Trivial => 1,
            GroupLabel::Cyclic(n) | GroupLabel::Dihedral(n) => *n,
            GroupLabel::KleinFour => 4,
            GroupLabel::Unknown { order, .. } => *order,
        }
    }

    /// Inverse of the `Display` form for the labels that can be printed.
    pub fn parse(s: &str) -> Option<GroupLabel> {
        match s {
            "1" | "Trivial" => Some(GroupLabel::Trivial),
            "Z2xZ2" => Some(GroupLabel::KleinFour),
            _ => {
                if let Some(n) = s.strip_prefix('Z') {
                    n.parse().ok().map(GroupLabel::Cyclic)
                } else if let Some(n) = s.strip_prefix('D') {
                    n.parse().ok().map(GroupLabel::Dihedral)
                } else {
                    None
                }
            }
        }
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLabel::Trivial => f.write_str("1"),
            GroupLabel::Cyclic(n) => write!(f, "Z{n}"),
            GroupLabel::KleinFour => f.write_str("Z2xZ2"),
            GroupLabel::Dihedral(n) => write!(f, "D{n}"),
            GroupLabel::Unknown { order, profile } => {
                write!(f, "?{order}[")?;
                for (i, (o, c)) in profile.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{o}^{c}")?;
                }
                f.write_str("]")
            }
        }
    }
}

/// Labels a finite subgroup from its order, commutativity and element orders.
pub fn identify_group(ctx: &FieldCtx, elems: &[Automorphism]) -> Result<GroupLabel> {
    let set: BTreeSet<Automorphism> = elems.iter().copied().collect();
    if set.len() != elems.len() || !set.contains(&Automorphism::identity(ctx)) {
        return Err(Error::NotAGroup);
    }
    let mut abelian = true;
    for f in &set {
        for g in &set {
            let fg = compose(ctx, f, g);
            if !set.contains(&fg) {
                return Err(Error::NotAGroup);
            }
            if abelian && fg != compose(ctx, g, f) {
                abelian = false;
            }
        }
    }
    let n = set.len() as u64;
    let orders: Vec<u64> = set.iter().map(|f| element_order(ctx, f)).collect();
    let involutions = orders.iter().filter(|&&o| o == 2).count() as u64;
    let label = if n == 1 {
        GroupLabel::Trivial
    } else if orders.contains(&n) {
        GroupLabel::Cyclic(n)
    } else if abelian && n == 4 {
        GroupLabel::KleinFour
    } else if !abelian && matches!(n, 6 | 8 | 10) && involutions >= n / 2 {
        GroupLabel::Dihedral(n)
    } else {
        let mut profile: Vec<(u64, u64)> = Vec::new();
        let mut sorted = orders.clone();
        sorted.sort_unstable();
        for o in sorted {
            match profile.last_mut() {
                Some((last, c)) if *last == o => *c += 1,
                _ => profile.push((o, 1)),
            }
        }
        GroupLabel::Unknown { order: n, profile }
    };
    Ok(label)
}

/// A small generating set, picked greedily in the given order.
pub fn generating_set(ctx: &FieldCtx, elems: &[Automorphism]) -> Vec<Automorphism> {
    let mut gens = Vec::new();
    let mut span: BTreeSet<Automorphism> = BTreeSet::new();
    span.insert(Automorphism::identity(ctx));
    for f in elems {
        if span.contains(f) {
            continue;
        }
        gens.push(*f);
        let mut frontier: Vec<Automorphism> = span.iter().copied().collect();
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = compose(ctx, g, &x);
                if span.insert(y) {
                    frontier.push(y);
                }
            }
        }
    }
    gens
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRecord {
    /// Smallest member.
    pub representative: CliqueSet,
    pub orbit_size: u64,
    pub stabilizer_order: u64,
    pub stabilizer_type: GroupLabel,
    pub generators: Vec<Automorphism>,
    /// FNV-1a over the sorted member index lists.
    pub members_digest: u64,
}

fn digest<'a>(members: impl Iterator<Item = &'a CliqueSet>) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |x: u64| {
        for byte in x.to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    };
    for c in members {
        for v in c.indices() {
            eat(v as u64);
        }
        eat(u64::MAX);
    }
    h
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Orbit of every census member, by union-find under [`generators`].
pub fn orbit_classes(ctx: &FieldCtx, cliques: &[CliqueSet]) -> Result<Vec<Vec<usize>>> {
    let n = cliques.len();
    let mut sorted: Vec<usize> = (0..n).collect();
    sorted.sort_unstable_by(|&i, &j| cliques[i].cmp(&cliques[j]));
    let lookup = |c: &CliqueSet| sorted.binary_search_by(|&i| cliques[i].cmp(c)).ok();
    let mut parent: Vec<usize> = (0..n).collect();
    for (gi, g) in generators(ctx).iter().enumerate() {
        for i in 0..n {
            let img = g.apply_to_clique(ctx, &cliques[sorted[i]]);
            let j = lookup(&img).ok_or(Error::NotClosed {
                clique: sorted[i],
                generator: gi,
            })?;
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for (i, &orig) in sorted.iter().enumerate() {
        let r = find(&mut parent, i);
        if slot[r] == usize::MAX {
            slot[r] = classes.len();
            classes.push(Vec::new());
        }
        classes[slot[r]].push(orig);
    }
    Ok(classes)
}

/// Partitions a census into orbits, ordered by representative.
pub fn orbit_partition(ctx: &FieldCtx, cliques: &[CliqueSet]) -> Result<Vec<OrbitRecord>> {
    let classes = orbit_classes(ctx, cliques)?;
    let order = group_order(ctx);
    let mut out = Vec::with_capacity(classes.len());
    for class in classes {
        let mut members: Vec<&CliqueSet> = class.iter().map(|&i| &cliques[i]).collect();
        members.sort_unstable();
        out.push(orbit_record(
            ctx,
            members[0],
            members.len() as u64,
            digest(members.iter().copied()),
        )?);
        let rec = out.last().unwrap();
        if rec.orbit_size * rec.stabilizer_order != order {
            return Err(Error::OrbitStabilizerMismatch {
                orbit_size: rec.orbit_size,
                stabilizer_order: rec.stabilizer_order,
            });
        }
    }
    out.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(out)
}

fn orbit_record(
    ctx: &FieldCtx,
    rep: &CliqueSet,
    size: u64,
    members_digest: u64,
) -> Result<OrbitRecord> {
    let stab = stabilizer(ctx, rep);
    Ok(OrbitRecord {
        representative: rep.clone(),
        orbit_size: size,
        stabilizer_order: stab.len() as u64,
        stabilizer_type: identify_group(ctx, &stab)?,
        generators: generating_set(ctx, &stab),
        members_digest,
    })
}

/// Orbit record for a single clique, from an explicit orbit.
pub fn orbit_record_of(ctx: &FieldCtx, c: &CliqueSet) -> Result<OrbitRecord> {
    let orbit = orbit_of(ctx, c);
    orbit_record(ctx, &orbit[0], orbit.len() as u64, digest(orbit.iter()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_field;
    use crate::graph::{build_graph, subfield_clique};

    #[test]
    fn orders() {
        let want = [
            (3, 2, 12960),
            (11, 1, 14520),
            (13, 1, 28392),
            (17, 1, 83232),
            (19, 1, 129960),
            (23, 1, 279312),
        ];
        for (p, m, n) in want {
            let ctx = build_field(p, m, None).unwrap();
            assert_eq!(group_order(&ctx), n);
        }
        let ctx = build_field(3, 2, None).unwrap();
        assert_eq!(elements(&ctx).count() as u64, group_order(&ctx));
    }

    #[test]
    fn non_square_multiplier_rejected() {
        let ctx = build_field(13, 1, None).unwrap();
        assert_eq!(
            Automorphism::new(&ctx, ctx.beta(), ctx.zero(), 0),
            Err(Error::NonSquareMultiplier)
        );
        assert_eq!(
            Automorphism::new(&ctx, ctx.zero(), ctx.zero(), 0),
            Err(Error::NonSquareMultiplier)
        );
    }

    #[test]
    fn composition_and_inverse_pointwise() {
        let ctx = build_field(3, 2, None).unwrap();
        let all: Vec<_> = elements(&ctx).step_by(37).collect();
        for f in &all {
            let fi = invert(&ctx, f);
            assert_eq!(compose(&ctx, f, &fi), Automorphism::identity(&ctx));
            assert_eq!(compose(&ctx, &fi, f), Automorphism::identity(&ctx));
            for g in all.iter().step_by(11) {
                let fg = compose(&ctx, f, g);
                assert_eq!(ctx.is_square(fg.a), Ok(true));
                for x in ctx.elements() {
                    assert_eq!(fg.apply(&ctx, x), f.apply(&ctx, g.apply(&ctx, x)));
                }
            }
        }
    }

    #[test]
    fn every_element_preserves_edges_at_q9() {
        let ctx = build_field(3, 2, None).unwrap();
        let g = build_graph(&ctx);
        for f in elements(&ctx) {
            for i in ctx.elements() {
                let fi = f.apply(&ctx, i).index();
                for j in g.neighbours(i.index()) {
                    let fj = f.apply(&ctx, FieldElem::from_index(j)).index();
                    assert!(g.adjacent(fi, fj));
                }
            }
        }
    }

    #[test]
    fn generators_reach_the_whole_group() {
        for (p, m) in [(3, 2), (11, 1), (13, 1)] {
            let ctx = build_field(p, m, None).unwrap();
            let gens = generators(&ctx);
            let mut seen = BTreeSet::new();
            let id = Automorphism::identity(&ctx);
            seen.insert(id);
            let mut frontier = vec![id];
            while let Some(x) = frontier.pop() {
                for g in &gens {
                    let y = compose(&ctx, g, &x);
                    if seen.insert(y) {
                        frontier.push(y);
                    }
                }
            }
            assert_eq!(seen.len() as u64, group_order(&ctx));
        }
    }

    #[test]
    fn subfield_stabilizer_order() {
        for (p, m) in [(3, 2), (11, 1), (13, 1)] {
            let ctx = build_field(p, m, None).unwrap();
            let g = build_graph(&ctx);
            let f = subfield_clique(&ctx, &g);
            let stab = stabilizer(&ctx, &f);
            let q = ctx.q() as u64;
            // a ∈ F_q^*, b ∈ F_q, any v
            let direct = elements(&ctx)
                .filter(|h| ctx.in_subfield(h.a) && ctx.in_subfield(h.b))
                .count() as u64;
            assert_eq!(stab.len() as u64, direct);
            assert_eq!(direct, (q - 1) * q * 2 * m as u64);
            assert_eq!(orbit_of(&ctx, &f).len() as u64, q * (q + 1) / 2);
        }
    }

    #[test]
    fn identifies_cyclic_and_rejects_non_groups() {
        let ctx = build_field(13, 1, Some(6)).unwrap();
        let sigma = Automorphism::new(&ctx, ctx.int(3), ctx.zero(), 0).unwrap();
        let s2 = compose(&ctx, &sigma, &sigma);
        assert_eq!(compose(&ctx, &sigma, &s2), Automorphism::identity(&ctx));
        let id = Automorphism::identity(&ctx);
        assert_eq!(
            identify_group(&ctx, &[id, sigma, s2]),
            Ok(GroupLabel::Cyclic(3))
        );
        assert_eq!(identify_group(&ctx, &[id, sigma]), Err(Error::NotAGroup));
        assert_eq!(identify_group(&ctx, &[id]), Ok(GroupLabel::Trivial));
    }

    fn span(ctx: &FieldCtx, gens: &[Automorphism]) -> Vec<Automorphism> {
        let id = Automorphism::identity(ctx);
        let mut seen = BTreeSet::from([id]);
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = compose(ctx, g, &x);
                if seen.insert(y) {
                    frontier.push(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    #[test]
    fn identifies_klein_and_dihedral() {
        let ctx = build_field(13, 1, Some(6)).unwrap();
        let neg = Automorphism {
            a: ctx.int(-1),
            b: ctx.zero(),
            v: 0,
        };
        let conj = Automorphism {
            a: ctx.one(),
            b: ctx.zero(),
            v: 1,
        };
        assert_eq!(
            identify_group(&ctx, &span(&ctx, &[neg, conj])),
            Ok(GroupLabel::KleinFour)
        );
        // λγ with λ of norm 1 is inverted by conjugation: <λγ, γ^q> is dihedral
        for (p, k) in [(11u32, 3u64), (11, 4), (19, 5)] {
            let ctx = build_field(p, 1, None).unwrap();
            let lam = ctx.exp(ctx.mult_order() as u64 / k);
            assert_eq!(ctx.pow(lam, p as u64 + 1), ctx.one());
            let r = Automorphism::new(&ctx, lam, ctx.zero(), 0).unwrap();
            let elems = span(&ctx, &[r, conj_of(&ctx)]);
            assert_eq!(
                identify_group(&ctx, &elems),
                Ok(GroupLabel::Dihedral(2 * k))
            );
            assert_eq!(
                identify_group(&ctx, &span(&ctx, &[r])),
                Ok(GroupLabel::Cyclic(k))
            );
        }
    }

    fn conj_of(ctx: &FieldCtx) -> Automorphism {
        Automorphism {
            a: ctx.one(),
            b: ctx.zero(),
            v: ctx.m(),
        }
    }

    #[test]
    fn labels_round_trip_through_text() {
        for l in [
            GroupLabel::Trivial,
            GroupLabel::Cyclic(8),
            GroupLabel::KleinFour,
            GroupLabel::Dihedral(10),
        ] {
            assert_eq!(GroupLabel::parse(&alloc::format!("{l}")), Some(l));
        }
    }

    #[test]
    fn census_orbits_at_q9() {
        let ctx = build_field(3, 2, None).unwrap();
        let g = build_graph(&ctx);
        let census = crate::clique::second_largest_census(&ctx, &g).unwrap();
        let orbits = orbit_partition(&ctx, &census.cliques).unwrap();
        assert_eq!(orbits.len(), 3);
        let total: u64 = orbits.iter().map(|o| o.orbit_size).sum();
        assert_eq!(total, census.count() as u64);
        for o in &orbits {
            assert_eq!(o.orbit_size * o.stabilizer_order, group_order(&ctx));
            let explicit = orbit_of(&ctx, &o.representative);
            assert_eq!(explicit.len() as u64, o.orbit_size);
        }
        let dropped = &census.cliques[1..];
        assert!(matches!(
            orbit_partition(&ctx, dropped),
            Err(Error::NotClosed { .. })
        ));
    }
}
