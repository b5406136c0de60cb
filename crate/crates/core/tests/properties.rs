use paley_core::clique::{anchored_search, enumerate_maximal_cliques};
use paley_core::geometry::{is_quadratic, line_through, line_with_slope};
use paley_core::graph::{srg_parameters, SrgParams};
use paley_core::group::{compose, elements, invert};
use paley_core::{build_field, build_graph, group_order, Automorphism, FieldCtx, FieldElem};
use proptest::prelude::*;

const FIELDS: [(u32, u32, Option<u32>); 6] = [
    (3, 2, None),
    (11, 1, Some(2)),
    (13, 1, Some(6)),
    (17, 1, Some(10)),
    (19, 1, Some(13)),
    (23, 1, Some(14)),
];

fn field(q: u32) -> FieldCtx {
    let (p, m, d) = FIELDS
        .iter()
        .copied()
        .find(|&(p, m, _)| p.pow(m) == q)
        .unwrap();
    build_field(p, m, d).unwrap()
}

fn all(ctx: &FieldCtx) -> Vec<FieldElem> {
    ctx.elements().collect()
}

#[test]
fn field_axioms_exhaustive_small() {
    for q in [9, 11, 13] {
        let ctx = field(q);
        let els = all(&ctx);
        let (zero, one) = (ctx.zero(), ctx.one());
        for &a in &els {
            assert_eq!(ctx.add(a, zero), a);
            assert_eq!(ctx.mul(a, one), a);
            assert_eq!(ctx.add(a, ctx.neg(a)), zero);
            if a != zero {
                assert_eq!(ctx.mul(a, ctx.inv(a).unwrap()), one);
            }
            for &b in &els {
                assert_eq!(ctx.add(a, b), ctx.add(b, a));
                assert_eq!(ctx.mul(a, b), ctx.mul(b, a));
                let (ab, mab) = (ctx.add(a, b), ctx.mul(a, b));
                for &c in &els {
                    assert_eq!(ctx.add(ab, c), ctx.add(a, ctx.add(b, c)));
                    assert_eq!(ctx.mul(mab, c), ctx.mul(a, ctx.mul(b, c)));
                    assert_eq!(ctx.mul(a, ctx.add(b, c)), ctx.add(mab, ctx.mul(a, c)));
                }
            }
        }
    }
}

#[test]
fn log_exp_round_trip() {
    for (p, m, d) in FIELDS {
        let ctx = build_field(p, m, d).unwrap();
        for a in ctx.elements().skip(1) {
            assert_eq!(ctx.exp(ctx.log(a).unwrap() as u64), a);
        }
        assert_eq!(ctx.log(ctx.zero()), None);
    }
}

#[test]
fn frobenius_is_a_field_automorphism() {
    for (p, m, d) in FIELDS {
        let ctx = build_field(p, m, d).unwrap();
        let els = all(&ctx);
        for &x in &els {
            // the p-th power by repeated multiplication
            let xp = ctx.pow(x, p as u64);
            assert_eq!(ctx.frobenius(x, 1), xp);
            for &y in &els {
                let (fx, fy) = (ctx.frobenius(x, 1), ctx.frobenius(y, 1));
                assert_eq!(ctx.frobenius(ctx.add(x, y), 1), ctx.add(fx, fy));
                assert_eq!(ctx.frobenius(ctx.mul(x, y), 1), ctx.mul(fx, fy));
            }
        }
    }
}

#[test]
fn squares_closed_under_products_and_subfield() {
    for (p, m, d) in FIELDS {
        let ctx = build_field(p, m, d).unwrap();
        let sq: Vec<FieldElem> = ctx.squares().collect();
        assert_eq!(sq.len(), (ctx.size() - 1) / 2);
        for &a in &sq {
            for &b in &sq {
                assert!(ctx.is_square(ctx.mul(a, b)).unwrap());
            }
            for c in ctx.subfield_units() {
                assert!(ctx.is_square(ctx.mul(a, c)).unwrap());
            }
        }
    }
}

#[test]
fn srg_parameters_all_q() {
    for (p, m, d) in FIELDS {
        let ctx = build_field(p, m, d).unwrap();
        let n = ctx.size();
        assert_eq!(
            srg_parameters(&build_graph(&ctx)).unwrap(),
            SrgParams {
                v: n,
                k: (n - 1) / 2,
                lambda: (n - 5) / 4,
                mu: (n - 1) / 4
            }
        );
    }
}

#[test]
fn automorphisms_preserve_edges_exhaustive_q9() {
    let ctx = field(9);
    let g = build_graph(&ctx);
    let edges: Vec<(FieldElem, FieldElem)> = ctx
        .elements()
        .flat_map(|a| ctx.elements().map(move |b| (a, b)))
        .filter(|(a, b)| a < b && g.adjacent(a.index(), b.index()))
        .collect();
    let mut count = 0;
    for f in elements(&ctx) {
        count += 1;
        for &(a, b) in &edges {
            assert!(g.adjacent(f.apply(&ctx, a).index(), f.apply(&ctx, b).index()));
        }
    }
    assert_eq!(count, group_order(&ctx));
}

#[test]
fn enumeration_is_deterministic() {
    let ctx = field(11);
    let g = build_graph(&ctx);
    assert_eq!(
        enumerate_maximal_cliques(&g, Some(7)),
        enumerate_maximal_cliques(&g, Some(7))
    );
    assert_eq!(anchored_search(&g).collect(), anchored_search(&g).collect());
}

fn elem(ctx: &FieldCtx, i: usize) -> FieldElem {
    ctx.elem(i % ctx.size()).unwrap()
}

fn aut(ctx: &FieldCtx, a: usize, b: usize, v: u32) -> Automorphism {
    // squares are the even powers of β
    let a = ctx.exp(2 * (a % ((ctx.size() - 1) / 2)) as u64);
    Automorphism::new(ctx, a, elem(ctx, b), v % (2 * ctx.m())).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms_sampled(qi in 3usize..6, a in 0usize..600, b in 0usize..600, c in 0usize..600) {
        let (p, m, d) = FIELDS[qi];
        let ctx = build_field(p, m, d).unwrap();
        let (a, b, c) = (elem(&ctx, a), elem(&ctx, b), elem(&ctx, c));
        prop_assert_eq!(ctx.add(ctx.add(a, b), c), ctx.add(a, ctx.add(b, c)));
        prop_assert_eq!(ctx.mul(ctx.mul(a, b), c), ctx.mul(a, ctx.mul(b, c)));
        prop_assert_eq!(ctx.mul(a, ctx.add(b, c)), ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
        prop_assert_eq!(ctx.mul(a, b), ctx.mul(b, a));
        prop_assert_eq!(ctx.sub(ctx.add(a, b), b), a);
        if !b.is_zero() {
            prop_assert_eq!(ctx.mul(ctx.div(a, b).unwrap(), b), a);
        }
    }

    #[test]
    fn composition_is_associative(
        qi in 0usize..6,
        f in (0usize..300, 0usize..600, 0u32..4),
        g in (0usize..300, 0usize..600, 0u32..4),
        h in (0usize..300, 0usize..600, 0u32..4),
        x in 0usize..600,
    ) {
        let (p, m, d) = FIELDS[qi];
        let ctx = build_field(p, m, d).unwrap();
        let (f, g, h) = (aut(&ctx, f.0, f.1, f.2), aut(&ctx, g.0, g.1, g.2), aut(&ctx, h.0, h.1, h.2));
        let x = elem(&ctx, x);
        let left = compose(&ctx, &compose(&ctx, &f, &g), &h);
        let right = compose(&ctx, &f, &compose(&ctx, &g, &h));
        prop_assert_eq!(left, right);
        prop_assert_eq!(left.apply(&ctx, x), f.apply(&ctx, g.apply(&ctx, h.apply(&ctx, x))));
        prop_assert_eq!(compose(&ctx, &f, &invert(&ctx, &f)), Automorphism::identity(&ctx));
    }

    #[test]
    fn automorphisms_preserve_line_types(
        qi in 0usize..6,
        f in (0usize..300, 0usize..600, 0u32..4),
        x in 0usize..600,
        y in 0usize..600,
    ) {
        let (p, m, d) = FIELDS[qi];
        let ctx = build_field(p, m, d).unwrap();
        let f = aut(&ctx, f.0, f.1, f.2);
        let (x, y) = (elem(&ctx, x), elem(&ctx, y));
        prop_assume!(x != y);
        let l = line_through(&ctx, x, y).unwrap();
        let img = line_through(&ctx, f.apply(&ctx, x), f.apply(&ctx, y)).unwrap();
        prop_assert_eq!(is_quadratic(&l), is_quadratic(&img));
        // the whole line maps onto the image line
        let mut pts: Vec<FieldElem> = l.points.iter().map(|&z| f.apply(&ctx, z)).collect();
        pts.sort_unstable();
        prop_assert_eq!(&pts, &img.points);
        let g = build_graph(&ctx);
        prop_assert_eq!(g.adjacent(x.index(), y.index()), is_quadratic(&l));
        prop_assert_eq!(line_with_slope(&ctx, x, ctx.sub(y, x)).unwrap(), l);
    }
}
