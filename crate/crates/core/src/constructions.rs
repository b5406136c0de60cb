//! The fifteen named second-largest maximal cliques for `9 ≤ q ≤ 23`, their
//! stabilizer generators, point-image tables, extra collinearities and orbit
//! parameterizations.
//!
//! Printed element names such as `10(α+6)` are kept symbolic as [`Term`]s and
//! evaluated in a tower. The towers are not the ones with `α^2 = δ`: for each
//! `q` the non-square `α^2` is recovered from the printed `S0` (see
//! [`paper_tower`]).

use alloc::vec::Vec;
use core::fmt;

use crate::clique::CliqueSet;
use crate::error::{Error, Result};
use crate::field::{squares_and_s0, FieldCtx, FieldElem, TowerParams};
use crate::geometry::{collinear_triples, Collinearity};
use crate::graph::{build_graph, PaleyGraph};
use crate::group::{
    compose, group_order, identify_group, orbit_of, stabilizer, Automorphism, GroupLabel,
};

/// An element of `F_q`: an integer read mod `p`, or a power of `δ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scalar {
    Int(i64),
    DeltaPow(i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Base {
    One,
    Alpha,
    /// `α + s`
    AlphaPlus(Scalar),
}

/// `coeff · base`
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Scalar,
    pub base: Base,
}

impl Term {
    pub const ZERO: Term = n(0);
}

const fn n(k: i64) -> Term {
    Term {
        coeff: Scalar::Int(k),
        base: Base::One,
    }
}

/// `c(α + x)`
const fn ap(c: i64, x: i64) -> Term {
    Term {
        coeff: Scalar::Int(c),
        base: Base::AlphaPlus(Scalar::Int(x)),
    }
}

/// `cα`
const fn al(c: i64) -> Term {
    Term {
        coeff: Scalar::Int(c),
        base: Base::Alpha,
    }
}

const fn dl(k: i64) -> Term {
    Term {
        coeff: Scalar::DeltaPow(k),
        base: Base::One,
    }
}

/// `δ^k (α + δ^j)`
const fn dap(k: i64, j: i64) -> Term {
    Term {
        coeff: Scalar::DeltaPow(k),
        base: Base::AlphaPlus(Scalar::DeltaPow(j)),
    }
}

/// Which root of `x^2 - α^2` plays `α`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Orientation {
    #[default]
    Plus,
    Minus,
}

impl Orientation {
    pub fn alpha(self, ctx: &FieldCtx) -> FieldElem {
        match self {
            Orientation::Plus => ctx.alpha(),
            Orientation::Minus => ctx.neg(ctx.alpha()),
        }
    }
}

pub fn eval_scalar(ctx: &FieldCtx, s: Scalar) -> FieldElem {
    match s {
        Scalar::Int(k) => ctx.int(k),
        Scalar::DeltaPow(k) => ctx.delta_pow(k),
    }
}

pub fn eval_term(ctx: &FieldCtx, t: Term, o: Orientation) -> FieldElem {
    let base = match t.base {
        Base::One => ctx.one(),
        Base::Alpha => o.alpha(ctx),
        Base::AlphaPlus(s) => ctx.add(o.alpha(ctx), eval_scalar(ctx, s)),
    };
    ctx.mul(eval_scalar(ctx, t.coeff), base)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Scalar::Int(k) => write!(f, "{k}"),
            Scalar::DeltaPow(0) => f.write_str("1"),
            Scalar::DeltaPow(1) => f.write_str("δ"),
            Scalar::DeltaPow(k) => write!(f, "δ^{k}"),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (neg, coeff) = match self.coeff {
            Scalar::Int(k) if k < 0 => (true, Scalar::Int(-k)),
            c => (false, c),
        };
        if neg {
            f.write_str("-")?;
        }
        let unit = coeff == Scalar::Int(1) || coeff == Scalar::DeltaPow(0);
        match self.base {
            Base::One => write!(f, "{coeff}"),
            Base::Alpha if unit => f.write_str("α"),
            Base::Alpha => write!(f, "{coeff}α"),
            Base::AlphaPlus(s) => {
                if !unit {
                    write!(f, "{coeff}")?;
                }
                match s {
                    Scalar::Int(k) if k < 0 => write!(f, "(α{k})"),
                    s => write!(f, "(α+{s})"),
                }
            }
        }
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = self.term == n(1);
        match self.factor {
            Factor::Unit => write!(f, "{{{}}}", self.term),
            Factor::H if one => f.write_str("H"),
            Factor::H => write!(f, "{}H", self.term),
            Factor::Ints(ks) => {
                if !one {
                    write!(f, "{}", self.term)?;
                }
                f.write_str("{")?;
                for (i, k) in ks.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{k}")?;
                }
                f.write_str("}")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    /// `term · H`
    H,
    /// The single point `term`.
    Unit,
    /// `term · {k : k ∈ list}`
    Ints(&'static [i64]),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Piece {
    pub term: Term,
    pub factor: Factor,
}

const fn pt(term: Term) -> Piece {
    Piece {
        term,
        factor: Factor::Unit,
    }
}

const fn hp(term: Term) -> Piece {
    Piece {
        term,
        factor: Factor::H,
    }
}

const fn ip(term: Term, ks: &'static [i64]) -> Piece {
    Piece {
        term,
        factor: Factor::Ints(ks),
    }
}

/// `γ ↦ a γ^{p^v} + b`
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NamedMap {
    pub name: &'static str,
    pub a: Term,
    pub b: Term,
    pub v: u32,
}

const fn map(name: &'static str, a: Term, b: Term, v: u32) -> NamedMap {
    NamedMap { name, a, b, v }
}

impl NamedMap {
    pub fn automorphism(&self, ctx: &FieldCtx, o: Orientation) -> Result<Automorphism> {
        Automorphism::new(
            ctx,
            eval_term(ctx, self.a, o),
            eval_term(ctx, self.b, o),
            self.v,
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ActionTable {
    pub map: &'static str,
    pub rows: &'static [(Term, Term)],
}

/// Multipliers `s` in an orbit family `{ s η x^{p^v} + γ : x ∈ C }`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Multipliers {
    /// `s ∈ S`
    Squares,
    /// `s δ^i`, `s ∈ S0`, `lo ≤ i ≤ hi`
    S0DeltaPow(i64, i64),
    /// `s i`, `s ∈ S0`, `lo ≤ i ≤ hi`
    S0Int(i64, i64),
    /// `s ∈ F_q^*`
    SubfieldUnits,
    /// Integers `lo..=hi` read in `F_q`.
    IntRange(i64, i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Family {
    pub multipliers: Multipliers,
    pub etas: &'static [Term],
    pub frobenius: &'static [u32],
    /// How many parameter tuples give each member.
    pub multiplicity: u64,
}

const ONE: &[Term] = &[n(1)];
const NO_FROB: &[u32] = &[0];

const fn fam(multipliers: Multipliers) -> Family {
    Family {
        multipliers,
        etas: ONE,
        frobenius: NO_FROB,
        multiplicity: 1,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    C9,
    C13A,
    C13B,
    C17A,
    C17B,
    C17C,
    C17D,
    C17E,
    C17F,
    C17G,
    C11,
    C19A,
    C19B,
    C23A,
    C23B,
}

impl Label {
    pub const ALL: [Label; 15] = [
        Label::C9,
        Label::C13A,
        Label::C13B,
        Label::C17A,
        Label::C17B,
        Label::C17C,
        Label::C17D,
        Label::C17E,
        Label::C17F,
        Label::C17G,
        Label::C11,
        Label::C19A,
        Label::C19B,
        Label::C23A,
        Label::C23B,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Label::C9 => "C9",
            Label::C13A => "C13A",
            Label::C13B => "C13B",
            Label::C17A => "C17A",
            Label::C17B => "C17B",
            Label::C17C => "C17C",
            Label::C17D => "C17D",
            Label::C17E => "C17E",
            Label::C17F => "C17F",
            Label::C17G => "C17G",
            Label::C11 => "C11",
            Label::C19A => "C19A",
            Label::C19B => "C19B",
            Label::C23A => "C23A",
            Label::C23B => "C23B",
        }
    }

    pub fn parse(s: &str) -> Result<Label> {
        Label::ALL
            .into_iter()
            .find(|l| l.as_str().eq_ignore_ascii_case(s))
            .ok_or(Error::UnknownLabel)
    }

    pub fn spec(self) -> &'static ConstructionSpec {
        CATALOG
            .iter()
            .find(|c| c.label == self)
            .expect("every label is catalogued")
    }

    pub fn for_q(q: u32) -> impl Iterator<Item = Label> {
        Label::ALL.into_iter().filter(move |l| l.spec().q == q)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    pub size: usize,
    pub stabilizer_order: u64,
    pub stabilizer_type: GroupLabel,
    pub orbit_size: u64,
}

#[derive(Debug)]
pub struct ConstructionSpec {
    pub label: Label,
    pub q: u32,
    pub h: Option<&'static [Scalar]>,
    pub pieces: &'static [Piece],
    pub expected: Expected,
    pub maps: &'static [NamedMap],
    pub tables: &'static [ActionTable],
    pub remarks: &'static [&'static [Term]],
    pub family: Family,
}

impl ConstructionSpec {
    /// The recipe as written, e.g. `{0} ∪ H ∪ (α+8)H`.
    pub fn recipe(&self) -> alloc::string::String {
        use alloc::string::ToString;
        let parts: Vec<alloc::string::String> = self.pieces.iter().map(|p| p.to_string()).collect();
        parts.join(" ∪ ")
    }

    /// `H` as written, or `None` when the recipe has no `H`.
    pub fn h_text(&self) -> Option<alloc::string::String> {
        use alloc::string::ToString;
        let h = self.h?;
        let parts: Vec<alloc::string::String> = h.iter().map(|s| s.to_string()).collect();
        Some(alloc::format!("{{{}}}", parts.join(",")))
    }
}

use Scalar::{DeltaPow as D, Int as I};

const fn exp(size: usize, order: u64, ty: GroupLabel, orbit: u64) -> Expected {
    Expected {
        size,
        stabilizer_order: order,
        stabilizer_type: ty,
        orbit_size: orbit,
    }
}

pub static CATALOG: [ConstructionSpec; 15] = [
    ConstructionSpec {
        label: Label::C9,
        q: 9,
        h: Some(&[D(0), D(1)]),
        pieces: &[pt(Term::ZERO), hp(n(1)), hp(dap(0, 5))],
        expected: exp(5, 2, GroupLabel::Cyclic(2), 6480),
        maps: &[map("phi'", dap(0, 5), Term::ZERO, 2)],
        tables: &[ActionTable {
            map: "phi'",
            rows: &[
                (n(0), n(0)),
                (n(1), dap(0, 5)),
                (dl(1), dap(1, 5)),
                (dap(0, 5), n(1)),
                (dap(1, 5), dl(1)),
            ],
        }],
        remarks: &[],
        family: Family {
            multipliers: Multipliers::Squares,
            etas: ONE,
            frobenius: &[0, 1],
            multiplicity: 1,
        },
    },
    ConstructionSpec {
        label: Label::C13A,
        q: 13,
        h: Some(&[I(9), I(3), I(1)]),
        pieces: &[pt(Term::ZERO), hp(n(1)), hp(ap(1, 8))],
        expected: exp(7, 6, GroupLabel::Dihedral(6), 4732),
        maps: &[
            map("sigma", n(3), Term::ZERO, 0),
            map("tau", ap(1, 8), Term::ZERO, 1),
        ],
        tables: &[
            ActionTable {
                map: "sigma",
                rows: &[
                    (n(0), n(0)),
                    (n(1), n(3)),
                    (n(3), n(9)),
                    (n(9), n(1)),
                    (ap(1, 8), ap(3, 8)),
                    (ap(3, 8), ap(9, 8)),
                    (ap(9, 8), ap(1, 8)),
                ],
            },
            ActionTable {
                map: "tau",
                rows: &[
                    (n(0), n(0)),
                    (n(1), ap(1, 8)),
                    (n(3), ap(3, 8)),
                    (n(9), ap(9, 8)),
                    (ap(1, 8), n(1)),
                    (ap(3, 8), n(3)),
                    (ap(9, 8), n(9)),
                ],
            },
        ],
        remarks: &[],
        family: fam(Multipliers::S0DeltaPow(0, 3)),
    },
    ConstructionSpec {
        label: Label::C13B,
        q: 13,
        h: Some(&[I(1), I(3), I(4)]),
        pieces: &[
            pt(Term::ZERO),
            hp(n(1)),
            pt(ap(7, 1)),
            pt(ap(2, 1)),
            pt(ap(7, 7)),
        ],
        expected: exp(7, 2, GroupLabel::Cyclic(2), 14196),
        maps: &[map("phi'", n(12), n(4), 1)],
        tables: &[ActionTable {
            map: "phi'",
            rows: &[
                (n(0), n(4)),
                (n(1), n(3)),
                (n(3), n(1)),
                (n(4), n(0)),
                (ap(7, 1), ap(7, 7)),
                (ap(2, 1), ap(2, 1)),
                (ap(7, 7), ap(7, 1)),
            ],
        }],
        remarks: &[],
        family: fam(Multipliers::Squares),
    },
    ConstructionSpec {
        label: Label::C17A,
        q: 17,
        h: Some(&[I(4), I(16), I(13), I(1)]),
        pieces: &[pt(Term::ZERO), hp(n(1)), hp(ap(1, 7))],
        expected: exp(9, 8, GroupLabel::Cyclic(8), 10404),
        maps: &[map("sigma", ap(1, 7), Term::ZERO, 1)],
        tables: &[ActionTable {
            map: "sigma",
            rows: &[
                (n(0), n(0)),
                (n(1), ap(1, 7)),
                (n(4), ap(4, 7)),
                (n(16), ap(16, 7)),
                (n(13), ap(13, 7)),
                (ap(1, 7), n(4)),
                (ap(4, 7), n(16)),
                (ap(16, 7), n(13)),
                (ap(13, 7), n(1)),
            ],
        }],
        remarks: &[],
        family: fam(Multipliers::S0DeltaPow(0, 3)),
    },
    ConstructionSpec {
        label: Label::C17B,
        q: 17,
        h: Some(&[I(1), I(4), I(5)]),
        pieces: &[
            pt(Term::ZERO),
            hp(n(1)),
            hp(ap(10, 6)),
            pt(ap(10, 3)),
            pt(ap(6, 9)),
        ],
        expected: exp(9, 6, GroupLabel::Dihedral(6), 13872),
        maps: &[
            map("sigma", ap(10, 11), n(5), 0),
            map("tau", ap(10, 6), Term::ZERO, 1),
        ],
        tables: &[
            ActionTable {
                map: "sigma",
                rows: &[
                    (n(0), n(5)),
                    (n(1), ap(10, 3)),
                    (n(4), ap(6, 9)),
                    (n(5), ap(16, 6)),
                    (ap(10, 6), n(4)),
                    (ap(6, 6), n(1)),
                    (ap(16, 6), n(0)),
                    (ap(10, 3), ap(6, 6)),
                    (ap(6, 9), ap(10, 6)),
                ],
            },
            ActionTable {
                map: "tau",
                rows: &[
                    (n(0), n(0)),
                    (n(1), ap(10, 6)),
                    (n(4), ap(6, 6)),
                    (n(5), ap(16, 6)),
                    (ap(10, 6), n(1)),
                    (ap(6, 6), n(4)),
                    (ap(16, 6), n(5)),
                    (ap(10, 3), ap(6, 9)),
                    (ap(6, 9), ap(10, 3)),
                ],
            },
        ],
        remarks: &[],
        family: Family {
            multipliers: Multipliers::Squares,
            etas: ONE,
            frobenius: NO_FROB,
            multiplicity: 3,
        },
    },
    ConstructionSpec {
        label: Label::C17C,
        q: 17,
        h: Some(&[I(1), I(4), I(16), I(13)]),
        pieces: &[
            pt(Term::ZERO),
            hp(n(1)),
            ip(ap(1, 7), &[1, 4]),
            ip(ap(1, 10), &[1, 4]),
        ],
        expected: exp(9, 2, GroupLabel::Cyclic(2), 41616),
        maps: &[map("phi'", n(16), Term::ZERO, 1)],
        tables: &[ActionTable {
            map: "phi'",
            rows: &[
                (n(0), n(0)),
                (n(1), n(16)),
                (n(4), n(13)),
                (n(16), n(1)),
                (n(13), n(4)),
                (ap(1, 7), ap(1, 10)),
                (ap(4, 7), ap(4, 10)),
                (ap(1, 10), ap(1, 7)),
                (ap(4, 10), ap(4, 7)),
            ],
        }],
        remarks: &[],
        family: fam(Multipliers::Squares),
    },
    ConstructionSpec {
        label: Label::C17D,
        q: 17,
        h: Some(&[I(1), I(4), I(16), I(13)]),
        pieces: &[
            pt(Term::ZERO),
            hp(n(1)),
            ip(ap(1, 7), &[1, 16]),
            ip(ap(1, 10), &[4, 13]),
        ],
        expected: exp(9, 4, GroupLabel::Cyclic(4), 20808),
        maps: &[map("sigma", n(4), Term::ZERO, 1)],
        tables: &[ActionTable {
            map: "sigma",
            rows: &[
                (n(0), n(0)),
                (n(1), n(4)),
                (n(4), n(16)),
                (n(16), n(13)),
                (n(13), n(1)),
                (ap(1, 7), ap(13, 10)),
                (ap(16, 7), ap(4, 10)),
                (ap(4, 10), ap(1, 7)),
                (ap(13, 10), ap(16, 7)),
            ],
        }],
        remarks: &[
            &[n(1), ap(1, 7), ap(13, 10)],
            &[n(16), ap(4, 10), ap(16, 7)],
        ],
        family: fam(Multipliers::S0DeltaPow(1, 8)),
    },
    ConstructionSpec {
        label: Label::C17E,
        q: 17,
        h: Some(&[I(1), I(4), I(16), I(13)]),
        pieces: &[
            pt(Term::ZERO),
            hp(n(1)),
            ip(ap(1, 7), &[1, 4, 16]),
            pt(ap(4, 10)),
        ],
        expected: exp(9, 1, GroupLabel::Trivial, 83232),
        maps: &[],
        tables: &[],
        remarks: &[],
        family: Family {
            multipliers: Multipliers::Squares,
            etas: ONE,
            frobenius: &[0, 1],
            multiplicity: 1,
        },
    },
    ConstructionSpec {
        label: Label::C17F,
        q: 17,
        h: Some(&[I(1), I(4), I(16)]),
        pieces: &[
            pt(Term::ZERO),
            hp(n(1)),
            ip(ap(1, 7), &[1, 4]),
            ip(ap(1, 10), &[1, 4]),
            pt(ap(11, 11)),
        ],
        expected: exp(9, 2, GroupLabel::Cyclic(2), 41616),
        maps: &[map("phi'", ap(10, 6), ap(11, 11), 1)],
        tables: &[ActionTable {
            map: "phi'",
            rows: &[
                (n(0), ap(11, 11)),
                (n(1), ap(4, 7)),
                (n(4), n(4)),
                (n(16), ap(1, 10)),
                (ap(1, 7), ap(4, 10)),
                (ap(4, 7), n(1)),
                (ap(1, 10), n(16)),
                (ap(4, 10), ap(1, 7)),
                (ap(11, 11), n(0)),
            ],
        }],
        remarks: &[],
        family: fam(Multipliers::Squares),
    },
    ConstructionSpec {
        label: Label::C17G,
        q: 17,
        h: None,
        pieces: &[
            pt(Term::ZERO),
            ip(n(1), &[1, 16]),
            ip(ap(1, 7), &[1, 4]),
            ip(ap(1, 10), &[1, 4]),
            pt(ap(11, 11)),
            pt(ap(11, 6)),
        ],
        expected: exp(9, 6, GroupLabel::Dihedral(6), 13872),
        maps: &[
            map("sigma", ap(7, 6), ap(11, 11), 0),
            map("tau", ap(7, 11), ap(11, 6), 1),
        ],
        tables: &[
            ActionTable {
                map: "sigma",
                rows: &[
                    (n(0), ap(11, 11)),
                    (n(1), ap(1, 10)),
                    (n(16), ap(4, 7)),
                    (ap(1, 7), n(16)),
                    (ap(4, 7), ap(1, 7)),
                    (ap(1, 10), ap(4, 10)),
                    (ap(4, 10), n(1)),
                    (ap(11, 6), n(0)),
                    (ap(11, 11), ap(11, 6)),
                ],
            },
            ActionTable {
                map: "tau",
                rows: &[
                    (n(0), ap(11, 6)),
                    (n(1), ap(1, 7)),
                    (n(16), ap(4, 10)),
                    (ap(1, 7), n(1)),
                    (ap(4, 7), ap(1, 10)),
                    (ap(1, 10), ap(4, 7)),
                    (ap(4, 10), n(16)),
                    (ap(11, 6), n(0)),
                    (ap(11, 11), ap(11, 11)),
                ],
            },
        ],
        remarks: &[&[n(0), ap(1, 10), ap(4, 10)], &[n(0), ap(1, 7), ap(4, 7)]],
        family: Family {
            multipliers: Multipliers::Squares,
            etas: ONE,
            frobenius: NO_FROB,
            multiplicity: 3,
        },
    },
    ConstructionSpec {
        label: Label::C11,
        q: 11,
        h: Some(&[I(1), I(9)]),
        pieces: &[pt(Term::ZERO), hp(n(1)), hp(ap(1, 5)), hp(ap(10, 6))],
        expected: exp(7, 6, GroupLabel::Dihedral(6), 2420),
        maps: &[
            map("sigma", ap(1, 5), Term::ZERO, 0),
            map("tau", ap(1, 5), Term::ZERO, 1),
        ],
        tables: &[
            ActionTable {
                map: "sigma",
                rows: &[
                    (n(0), n(0)),
                    (n(1), ap(1, 5)),
                    (n(9), ap(9, 5)),
                    (ap(1, 5), ap(10, 6)),
                    (ap(9, 5), ap(2, 6)),
                    (ap(2, 6), n(9)),
                    (ap(10, 6), n(1)),
                ],
            },
            ActionTable {
                map: "tau",
                rows: &[
                    (n(0), n(0)),
                    (n(1), ap(1, 5)),
                    (n(9), ap(9, 5)),
                    (ap(1, 5), n(1)),
                    (ap(9, 5), n(9)),
                    (ap(2, 6), ap(2, 6)),
                    (ap(10, 6), ap(10, 6)),
                ],
            },
        ],
        remarks: &[],
        family: Family {
            multipliers: Multipliers::SubfieldUnits,
            etas: &[n(1), al(1)],
            frobenius: NO_FROB,
            multiplicity: 1,
        },
    },
    ConstructionSpec {
        label: Label::C19A,
        q: 19,
        h: Some(&[I(1), I(-1)]),
        pieces: &[
            pt(Term::ZERO),
            hp(n(1)),
            hp(n(3)),
            hp(al(9)),
            hp(ap(1, 3)),
            hp(ap(1, -3)),
        ],
        expected: exp(11, 4, GroupLabel::KleinFour, 32490),
        maps: &[
            map("sigma", n(-1), Term::ZERO, 0),
            map("tau", n(1), Term::ZERO, 1),
        ],
        tables: &[
            ActionTable {
                map: "sigma",
                rows: &[
                    (n(0), n(0)),
                    (n(1), n(-1)),
                    (n(-1), n(1)),
                    (n(3), n(-3)),
                    (n(-3), n(3)),
                    (al(9), al(-9)),
                    (al(-9), al(9)),
                    (ap(1, 3), ap(-1, 3)),
                    (ap(-1, 3), ap(1, 3)),
                    (ap(1, -3), ap(-1, -3)),
                    (ap(-1, -3), ap(1, -3)),
                ],
            },
            ActionTable {
                map: "tau",
                rows: &[
                    (n(0), n(0)),
                    (n(1), n(1)),
                    (n(-1), n(-1)),
                    (n(3), n(3)),
                    (n(-3), n(-3)),
                    (al(9), al(-9)),
                    (al(-9), al(9)),
                    (ap(1, 3), ap(-1, -3)),
                    (ap(-1, 3), ap(1, -3)),
                    (ap(1, -3), ap(-1, 3)),
                    (ap(-1, -3), ap(1, 3)),
                ],
            },
        ],
        remarks: &[
            &[n(3), al(-9), ap(1, -3)],
            &[n(3), al(9), ap(-1, 3)],
            &[n(-3), al(-9), ap(1, 3)],
            &[n(-3), al(9), ap(-1, -3)],
        ],
        family: fam(Multipliers::S0Int(1, 9)),
    },
    ConstructionSpec {
        label: Label::C19B,
        q: 19,
        h: Some(&[I(1), I(3)]),
        pieces: &[
            pt(Term::ZERO),
            hp(n(1)),
            hp(ap(2, -6)),
            hp(ap(17, 6)),
            hp(ap(9, -4)),
            hp(ap(10, 4)),
        ],
        expected: exp(11, 10, GroupLabel::Dihedral(10), 12996),
        maps: &[
            map("sigma", ap(10, 4), Term::ZERO, 0),
            map("tau", ap(10, 4), Term::ZERO, 1),
        ],
        tables: &[
            ActionTable {
                map: "sigma",
                rows: &[
                    (n(0), n(0)),
                    (n(1), ap(10, 4)),
                    (n(3), ap(11, 4)),
                    (ap(6, -6), ap(13, 6)),
                    (ap(2, -6), ap(17, 6)),
                    (ap(13, 6), ap(8, -4)),
                    (ap(17, 6), ap(9, -4)),
                    (ap(10, 4), ap(2, -6)),
                    (ap(11, 4), ap(6, -6)),
                    (ap(9, -4), n(1)),
                    (ap(8, -4), n(3)),
                ],
            },
            ActionTable {
                map: "tau",
                rows: &[
                    (n(0), n(0)),
                    (n(1), ap(10, 4)),
                    (n(3), ap(11, 4)),
                    (ap(6, -6), ap(8, -4)),
                    (ap(2, -6), ap(9, -4)),
                    (ap(13, 6), ap(13, 6)),
                    (ap(17, 6), ap(17, 6)),
                    (ap(10, 4), n(1)),
                    (ap(11, 4), n(3)),
                    (ap(9, -4), ap(2, -6)),
                    (ap(8, -4), ap(6, -6)),
                ],
            },
        ],
        remarks: &[
            &[n(1), ap(13, 6), ap(2, -6), ap(8, -4)],
            &[n(1), ap(6, -6), ap(17, 6), ap(11, 4)],
            &[n(3), ap(11, 4), ap(9, -4), ap(2, -6)],
            &[n(3), ap(8, -4), ap(10, 4), ap(17, 6)],
        ],
        family: Family {
            multipliers: Multipliers::SubfieldUnits,
            etas: &[n(1), al(1)],
            frobenius: NO_FROB,
            multiplicity: 1,
        },
    },
    ConstructionSpec {
        label: Label::C23A,
        q: 23,
        h: Some(&[I(1), I(3), I(5), I(17)]),
        pieces: &[pt(Term::ZERO), hp(n(1)), hp(ap(17, 2)), hp(ap(6, -2))],
        expected: exp(13, 6, GroupLabel::Dihedral(6), 46552),
        maps: &[
            map("sigma", ap(6, -2), Term::ZERO, 0),
            map("tau", ap(6, -2), Term::ZERO, 1),
        ],
        tables: &[
            ActionTable {
                map: "sigma",
                rows: &[
                    (n(0), n(0)),
                    (n(1), ap(6, -2)),
                    (n(3), ap(18, -2)),
                    (n(5), ap(7, -2)),
                    (n(17), ap(10, -2)),
                    (ap(17, 2), n(1)),
                    (ap(5, 2), n(3)),
                    (ap(16, 2), n(5)),
                    (ap(13, 2), n(17)),
                    (ap(6, -2), ap(17, 2)),
                    (ap(18, -2), ap(5, 2)),
                    (ap(7, -2), ap(16, 2)),
                    (ap(10, -2), ap(13, 2)),
                ],
            },
            ActionTable {
                map: "tau",
                rows: &[
                    (n(0), n(0)),
                    (n(1), ap(6, -2)),
                    (n(3), ap(18, -2)),
                    (n(5), ap(7, -2)),
                    (n(17), ap(10, -2)),
                    (ap(17, 2), ap(17, 2)),
                    (ap(5, 2), ap(5, 2)),
                    (ap(16, 2), ap(16, 2)),
                    (ap(13, 2), ap(13, 2)),
                    (ap(6, -2), n(1)),
                    (ap(18, -2), n(3)),
                    (ap(7, -2), n(5)),
                    (ap(10, -2), n(17)),
                ],
            },
        ],
        remarks: &[
            &[n(1), ap(18, -2), ap(16, 2)],
            &[n(1), ap(7, -2), ap(5, 2)],
            &[n(3), ap(6, -2), ap(16, 2)],
            &[n(3), ap(7, -2), ap(17, 2)],
            &[n(3), ap(10, -2), ap(13, 2)],
            &[n(5), ap(6, -2), ap(5, 2)],
            &[n(5), ap(18, -2), ap(17, 2)],
            &[n(17), ap(18, -2), ap(13, 2)],
            &[n(17), ap(10, -2), ap(5, 2)],
        ],
        family: Family {
            multipliers: Multipliers::SubfieldUnits,
            etas: &[n(1), al(1), ap(1, 1), ap(1, -1)],
            frobenius: NO_FROB,
            multiplicity: 1,
        },
    },
    ConstructionSpec {
        label: Label::C23B,
        q: 23,
        h: Some(&[I(1), I(-1)]),
        pieces: &[
            pt(Term::ZERO),
            hp(n(9)),
            hp(al(1)),
            ip(ap(1, 9), &[3, -3, 4, -4]),
            ip(ap(1, -9), &[3, -3, 4, -4]),
        ],
        expected: exp(13, 8, GroupLabel::Dihedral(8), 34914),
        maps: &[
            map("sigma", al(18), Term::ZERO, 0),
            map("tau", n(1), Term::ZERO, 1),
        ],
        tables: &[
            ActionTable {
                map: "sigma",
                rows: &[
                    (n(0), n(0)),
                    (n(9), al(1)),
                    (n(-9), al(-1)),
                    (al(1), n(-9)),
                    (al(-1), n(9)),
                    (ap(3, 9), ap(3, -9)),
                    (ap(-3, 9), ap(-3, -9)),
                    (ap(4, 9), ap(4, -9)),
                    (ap(-4, 9), ap(-4, -9)),
                    (ap(3, -9), ap(-3, 9)),
                    (ap(-3, -9), ap(3, 9)),
                    (ap(4, -9), ap(-4, 9)),
                    (ap(-4, -9), ap(4, 9)),
                ],
            },
            ActionTable {
                map: "tau",
                rows: &[
                    (n(0), n(0)),
                    (n(9), n(9)),
                    (n(-9), n(-9)),
                    (al(1), al(-1)),
                    (al(-1), al(1)),
                    (ap(3, 9), ap(-3, -9)),
                    (ap(-3, 9), ap(3, -9)),
                    (ap(4, 9), ap(-4, -9)),
                    (ap(-4, 9), ap(4, -9)),
                    (ap(3, -9), ap(-3, 9)),
                    (ap(-3, -9), ap(3, 9)),
                    (ap(4, -9), ap(-4, 9)),
                    (ap(-4, -9), ap(4, 9)),
                ],
            },
        ],
        remarks: &[
            &[n(9), ap(3, 9), ap(4, -9)],
            &[n(9), ap(-4, 9), ap(-3, -9)],
            &[n(-9), ap(-3, 9), ap(-4, -9)],
            &[n(-9), ap(4, 9), ap(3, -9)],
            &[al(1), ap(3, 9), ap(-4, -9)],
            &[al(1), ap(-4, 9), ap(3, -9)],
            &[al(-1), ap(-3, 9), ap(4, -9)],
            &[al(-1), ap(4, 9), ap(-3, -9)],
        ],
        family: Family {
            multipliers: Multipliers::IntRange(1, 11),
            etas: &[n(1), ap(1, 1), ap(1, -1), ap(1, 2), ap(1, -2), ap(1, 9)],
            frobenius: NO_FROB,
            multiplicity: 1,
        },
    },
];

/// `(p, m, δ)` for each supported `q`. `δ` is not fixed for `q = 9`.
pub fn paper_field(q: u32) -> Option<(u32, u32, Option<u32>)> {
    match q {
        9 => Some((3, 2, None)),
        11 => Some((11, 1, Some(2))),
        13 => Some((13, 1, Some(6))),
        17 => Some((17, 1, Some(10))),
        19 => Some((19, 1, Some(13))),
        23 => Some((23, 1, Some(14))),
        _ => None,
    }
}

pub const SUPPORTED_Q: [u32; 6] = [9, 11, 13, 17, 19, 23];

/// The listed `x` with `x + α ∈ S0`.
pub fn printed_s0_shifts(q: u32) -> &'static [Scalar] {
    match q {
        9 => &[D(1), D(2), D(5), D(6)],
        11 => &[I(0), I(4), I(-4), I(5), I(-5)],
        13 => &[I(8), I(5), I(7), I(6), I(1), I(12)],
        17 => &[I(7), I(10), I(14), I(3), I(6), I(11), I(8), I(9)],
        19 => &[I(0), I(2), I(3), I(4), I(6), I(-2), I(-3), I(-4), I(-6)],
        23 => &[
            I(0),
            I(1),
            I(2),
            I(6),
            I(9),
            I(11),
            I(-1),
            I(-2),
            I(-6),
            I(-9),
            I(-11),
        ],
        _ => &[],
    }
}

/// Whether the `S0` shifts of `ctx` are the listed ones for `q`.
pub fn s0_matches(ctx: &FieldCtx, q: u32) -> Result<bool> {
    let sets = squares_and_s0(ctx)?;
    let mut want: Vec<u32> = printed_s0_shifts(q)
        .iter()
        .map(|&s| ctx.coeffs(eval_scalar(ctx, s)).0)
        .collect();
    want.sort_unstable();
    Ok(sets.s0_shifts(ctx) == want)
}

/// Non-squares of `F_q` as codes: `first` if given, then ascending.
fn non_square_codes(ctx: &FieldCtx, first: Option<u32>) -> Vec<u32> {
    let q = ctx.q();
    let squares: Vec<u32> = (0..q).map(|x| ctx.fq_mul(x, x)).collect();
    let mut out: Vec<u32> = first.into_iter().collect();
    out.extend((1..q).filter(|c| !squares.contains(c) && Some(*c) != first));
    out
}

/// The tower in which the printed `S0` for `q` holds.
///
/// `δ` is the listed primitive element; `α^2` is the first non-square, trying
/// `δ` itself before the others in code order, whose `S0` is the listed one.
/// For `q = 9` the primitive `δ` is searched as well, and `C9` must come out
/// as a maximal clique.
pub fn paper_tower(q: u32) -> Result<FieldCtx> {
    paper_tower_bounded(q, crate::field::DEFAULT_TABLE_BOUND)
}

/// [`paper_tower`] refusing fields with more than `table_bound` elements.
pub fn paper_tower_bounded(q: u32, table_bound: usize) -> Result<FieldCtx> {
    let (p, m, delta) = paper_field(q).ok_or(Error::UnresolvedTower { q })?;
    if (q * q) as usize > table_bound {
        return Err(Error::UnsupportedSize {
            q_squared: (q * q) as usize,
            bound: table_bound,
        });
    }
    let probe = crate::field::build_field(p, m, delta)?;
    let deltas: Vec<u32> = match delta {
        Some(d) => alloc::vec![d],
        None => (1..q)
            .filter(|&c| probe.order_of(probe.fq(c)) == q - 1)
            .collect(),
    };
    for d in deltas {
        for a2 in non_square_codes(&probe, Some(d)) {
            let params = TowerParams::new(p, m)
                .with_delta(d)
                .with_alpha_square(a2)
                .with_table_bound(table_bound);
            let ctx = FieldCtx::new(&params)?;
            if !s0_matches(&ctx, q)? {
                continue;
            }
            if q == 9 {
                let g = build_graph(&ctx);
                match construct(&ctx, Label::C9) {
                    Ok((c, _)) if c.is_maximal(&g)? => {}
                    _ => continue,
                }
            }
            return Ok(ctx);
        }
    }
    Err(Error::UnresolvedTower { q })
}

fn h_elems(ctx: &FieldCtx, spec: &ConstructionSpec) -> Vec<FieldElem> {
    spec.h
        .unwrap_or(&[])
        .iter()
        .map(|&s| eval_scalar(ctx, s))
        .collect()
}

fn evaluate(ctx: &FieldCtx, spec: &ConstructionSpec, o: Orientation) -> Vec<FieldElem> {
    let h = h_elems(ctx, spec);
    let mut out = Vec::new();
    for piece in spec.pieces {
        let t = eval_term(ctx, piece.term, o);
        match piece.factor {
            Factor::Unit => out.push(t),
            Factor::H => out.extend(h.iter().map(|&x| ctx.mul(t, x))),
            Factor::Ints(ks) => out.extend(ks.iter().map(|&k| ctx.mul(t, ctx.int(k)))),
        }
    }
    out
}

/// The vertex set of `label` in `ctx`, with the orientation of `α` that made
/// the pieces disjoint.
pub fn construct(ctx: &FieldCtx, label: Label) -> Result<(CliqueSet, Orientation)> {
    let spec = label.spec();
    for o in [Orientation::Plus, Orientation::Minus] {
        let raw = evaluate(ctx, spec, o);
        let set = CliqueSet::new(raw.clone());
        if set.len() == raw.len() && set.len() == spec.expected.size {
            return Ok((set, o));
        }
    }
    Err(Error::RecipeCollision {
        label: label.as_str(),
    })
}

/// Outcome of replaying one point-image table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableReplay {
    pub map: &'static str,
    pub rows: usize,
    /// Indices of rows whose computed image differs from the listed one.
    pub mismatched_rows: Vec<usize>,
    /// The map's multiplier is not a square.
    pub invalid_map: bool,
}

impl TableReplay {
    pub fn ok(&self) -> bool {
        !self.invalid_map && self.mismatched_rows.is_empty()
    }
}

pub fn replay_action_tables(ctx: &FieldCtx, label: Label, o: Orientation) -> Vec<TableReplay> {
    let spec = label.spec();
    spec.tables
        .iter()
        .map(|t| {
            let m = spec
                .maps
                .iter()
                .find(|m| m.name == t.map)
                .expect("table names a map");
            match m.automorphism(ctx, o) {
                Err(_) => TableReplay {
                    map: t.map,
                    rows: t.rows.len(),
                    mismatched_rows: (0..t.rows.len()).collect(),
                    invalid_map: true,
                },
                Ok(f) => TableReplay {
                    map: t.map,
                    rows: t.rows.len(),
                    mismatched_rows: t
                        .rows
                        .iter()
                        .enumerate()
                        .filter(|(_, (x, y))| {
                            f.apply(ctx, eval_term(ctx, *x, o)) != eval_term(ctx, *y, o)
                        })
                        .map(|(i, _)| i)
                        .collect(),
                    invalid_map: false,
                },
            }
        })
        .collect()
}

/// Numerical check of an orbit parameterization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyCheck {
    /// Number of parameter tuples.
    pub raw: u64,
    pub distinct: u64,
    pub all_in_orbit: bool,
    pub explicit_orbit_size: u64,
}

impl FamilyCheck {
    pub fn ok(&self, family: &Family) -> bool {
        self.all_in_orbit
            && self.distinct == self.explicit_orbit_size
            && self.raw == self.distinct * family.multiplicity
    }
}

fn multipliers(ctx: &FieldCtx, m: Multipliers) -> Result<Vec<FieldElem>> {
    let s0 = || squares_and_s0(ctx).map(|s| s.s0);
    Ok(match m {
        Multipliers::Squares => ctx.squares().collect(),
        Multipliers::S0DeltaPow(lo, hi) => {
            let s0 = s0()?;
            (lo..=hi)
                .flat_map(|i| s0.iter().map(move |&s| (s, i)))
                .map(|(s, i)| ctx.mul(s, ctx.delta_pow(i)))
                .collect()
        }
        Multipliers::S0Int(lo, hi) => {
            let s0 = s0()?;
            (lo..=hi)
                .flat_map(|i| s0.iter().map(move |&s| (s, i)))
                .map(|(s, i)| ctx.mul(s, ctx.int(i)))
                .collect()
        }
        Multipliers::SubfieldUnits => ctx.subfield_units(),
        Multipliers::IntRange(lo, hi) => (lo..=hi).map(|k| ctx.int(k)).collect(),
    })
}

/// Generates the family of `label` around `c` and compares it with the
/// explicit orbit of `c`.
pub fn check_family(
    ctx: &FieldCtx,
    label: Label,
    c: &CliqueSet,
    orbit: &[CliqueSet],
    o: Orientation,
) -> Result<FamilyCheck> {
    let fam = label.spec().family;
    let mults = multipliers(ctx, fam.multipliers)?;
    let mut members = Vec::new();
    for &v in fam.frobenius {
        for &eta in fam.etas {
            let eta = eval_term(ctx, eta, o);
            for &s in &mults {
                let k = ctx.mul(s, eta);
                let base: Vec<FieldElem> = c
                    .vertices()
                    .iter()
                    .map(|&x| ctx.mul(k, ctx.frobenius(x, v)))
                    .collect();
                for g in ctx.elements() {
                    members.push(CliqueSet::new(
                        base.iter().map(|&x| ctx.add(x, g)).collect(),
                    ));
                }
            }
        }
    }
    let raw = members.len() as u64;
    members.sort_unstable();
    members.dedup();
    let all_in_orbit = members.iter().all(|m| orbit.binary_search(m).is_ok());
    Ok(FamilyCheck {
        raw,
        distinct: members.len() as u64,
        all_in_orbit,
        explicit_orbit_size: orbit.len() as u64,
    })
}

/// Everything checked for one construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub label: Label,
    pub q: u32,
    pub orientation: Orientation,
    pub clique: CliqueSet,
    pub size: usize,
    pub is_maximal_clique: bool,
    pub stabilizer_order: u64,
    pub stabilizer_type: GroupLabel,
    /// `|Aut| / |stabilizer|`
    pub orbit_size: u64,
    /// Each listed map fixes the clique and together they generate the stabilizer.
    pub named_maps_generate: bool,
    pub tables: Vec<TableReplay>,
    pub collinear: Vec<Collinearity>,
    /// Listed collinear sets found as exact line intersections.
    pub remarks_found: usize,
    pub remarks_listed: usize,
    pub family: FamilyCheck,
    pub expected: Expected,
}

impl VerificationReport {
    pub fn tables_ok(&self) -> bool {
        self.tables.iter().all(TableReplay::ok)
    }

    pub fn remarks_ok(&self) -> bool {
        self.remarks_found == self.remarks_listed
    }

    pub fn family_ok(&self) -> bool {
        self.family.ok(&self.label.spec().family)
    }

    /// Claims about the clique itself: maximality, size, stabilizer, orbit.
    pub fn structure_ok(&self) -> bool {
        self.is_maximal_clique
            && self.size == self.expected.size
            && self.stabilizer_order == self.expected.stabilizer_order
            && self.stabilizer_type == self.expected.stabilizer_type
            && self.orbit_size == self.expected.orbit_size
            && self.named_maps_generate
    }

    pub fn all_match(&self) -> bool {
        self.structure_ok() && self.tables_ok() && self.remarks_ok() && self.family_ok()
    }

    /// Collinear sets of three or more points not among the listed remarks.
    pub fn unlisted(&self, ctx: &FieldCtx) -> Vec<&Collinearity> {
        let listed = remark_sets(ctx, self.label, self.orientation);
        self.collinear
            .iter()
            .filter(|c| !listed.contains(&c.members))
            .collect()
    }
}

fn remark_sets(ctx: &FieldCtx, label: Label, o: Orientation) -> Vec<Vec<FieldElem>> {
    label
        .spec()
        .remarks
        .iter()
        .map(|r| {
            let mut v: Vec<FieldElem> = r.iter().map(|&t| eval_term(ctx, t, o)).collect();
            v.sort_unstable();
            v
        })
        .collect()
}

fn span(ctx: &FieldCtx, gens: &[Automorphism]) -> Vec<Automorphism> {
    let id = Automorphism::identity(ctx);
    let mut seen = alloc::collections::BTreeSet::from([id]);
    let mut frontier = alloc::vec![id];
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

pub fn verify_construction(
    ctx: &FieldCtx,
    graph: &PaleyGraph,
    label: Label,
) -> Result<VerificationReport> {
    let spec = label.spec();
    let (clique, o) = construct(ctx, label)?;
    let stab = stabilizer(ctx, &clique);
    let stabilizer_type = identify_group(ctx, &stab)?;
    let named: Result<Vec<Automorphism>> =
        spec.maps.iter().map(|m| m.automorphism(ctx, o)).collect();
    let named_maps_generate = match named {
        Ok(gens) => {
            gens.iter()
                .all(|g| g.apply_to_clique(ctx, &clique) == clique)
                && span(ctx, &gens) == stab
        }
        Err(_) => false,
    };
    let collinear = collinear_triples(ctx, clique.vertices());
    let remarks_listed = spec.remarks.len();
    let remarks_found = remark_sets(ctx, label, o)
        .iter()
        .filter(|r| collinear.iter().any(|c| &c.members == *r))
        .count();
    let orbit = orbit_of(ctx, &clique);
    let family = check_family(ctx, label, &clique, &orbit, o)?;
    Ok(VerificationReport {
        label,
        q: ctx.q(),
        orientation: o,
        size: clique.len(),
        is_maximal_clique: clique.is_maximal(graph)?,
        stabilizer_order: stab.len() as u64,
        stabilizer_type,
        orbit_size: group_order(ctx) / stab.len() as u64,
        named_maps_generate,
        tables: replay_action_tables(ctx, label, o),
        collinear,
        remarks_found,
        remarks_listed,
        family,
        expected: spec.expected.clone(),
        clique,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn catalog_is_complete() {
        for l in Label::ALL {
            assert_eq!(l.spec().label, l);
            assert_eq!(Label::parse(l.as_str()), Ok(l));
        }
        let per_q: Vec<usize> = SUPPORTED_Q
            .iter()
            .map(|&q| Label::for_q(q).count())
            .collect();
        assert_eq!(per_q, [1, 1, 2, 7, 2, 2]);
        assert_eq!(Label::parse("C99"), Err(Error::UnknownLabel));
    }

    #[test]
    fn towers_resolve() {
        let want = [(11, 2), (13, 11), (17, 11), (19, 12), (23, 11)];
        for (q, a2) in want {
            let ctx = paper_tower(q).unwrap();
            assert_eq!(ctx.alpha_square_code(), a2, "q = {q}");
        }
        let ctx = paper_tower(9).unwrap();
        assert_eq!(ctx.q(), 9);
        assert_eq!(
            paper_tower(25).err(),
            Some(Error::UnresolvedTower { q: 25 })
        );
    }

    #[test]
    fn alpha_is_delta_does_not_reproduce_s0() {
        for q in [13, 17, 19, 23] {
            let (p, m, d) = paper_field(q).unwrap();
            let ctx = crate::field::build_field(p, m, d).unwrap();
            assert!(!s0_matches(&ctx, q).unwrap(), "q = {q}");
        }
    }

    #[test]
    fn sizes_and_disjointness() {
        for l in Label::ALL {
            let ctx = paper_tower(l.spec().q).unwrap();
            let (c, _) = construct(&ctx, l).unwrap();
            assert_eq!(c.len(), ctx.second_size(), "{l}");
        }
    }

    #[test]
    fn recipes_print_as_written() {
        assert_eq!(Label::C13A.spec().recipe(), "{0} ∪ H ∪ (α+8)H");
        assert_eq!(Label::C9.spec().recipe(), "{0} ∪ H ∪ (α+δ^5)H");
        assert_eq!(Label::C9.spec().h_text().unwrap(), "{1,δ}");
        assert_eq!(
            Label::C23B.spec().recipe(),
            "{0} ∪ 9H ∪ αH ∪ (α+9){3,-3,4,-4} ∪ (α-9){3,-3,4,-4}"
        );
        assert_eq!(
            Label::C17G.spec().recipe(),
            "{0} ∪ {1,16} ∪ (α+7){1,4} ∪ (α+10){1,4} ∪ {11(α+11)} ∪ {11(α+6)}"
        );
        assert_eq!(Label::C17G.spec().h_text(), None);
        assert_eq!(ap(-1, -3).to_string(), "-(α-3)");
        assert_eq!(al(-9).to_string(), "-9α");
    }

    #[test]
    fn c13a_points() {
        let ctx = paper_tower(13).unwrap();
        let (c, _) = construct(&ctx, Label::C13A).unwrap();
        let a8 = ctx.from_coeffs(8, 1);
        for k in [1, 3, 9] {
            assert!(c.contains(ctx.int(k)));
            assert!(c.contains(ctx.mul(ctx.int(k), a8)));
        }
        assert!(c.contains(ctx.zero()));
    }

    #[test]
    fn c23a_generator_spellings_agree() {
        let ctx = paper_tower(23).unwrap();
        assert_eq!(
            eval_term(&ctx, ap(6, -2), Orientation::Plus),
            eval_term(&ctx, ap(6, 21), Orientation::Plus)
        );
    }

    #[test]
    fn small_constructions_verify() {
        for l in [Label::C9, Label::C11, Label::C13B] {
            let ctx = paper_tower(l.spec().q).unwrap();
            let g = build_graph(&ctx);
            let r = verify_construction(&ctx, &g, l).unwrap();
            assert!(r.all_match(), "{l}: {r:?}");
        }
    }

    // σ and τ commute, so the stabilizer is abelian of order 6
    #[test]
    fn c13a_stabilizer_is_cyclic() {
        let ctx = paper_tower(13).unwrap();
        let g = build_graph(&ctx);
        let spec = Label::C13A.spec();
        let s = spec.maps[0].automorphism(&ctx, Orientation::Plus).unwrap();
        let t = spec.maps[1].automorphism(&ctx, Orientation::Plus).unwrap();
        assert_eq!(compose(&ctx, &s, &t), compose(&ctx, &t, &s));
        let r = verify_construction(&ctx, &g, Label::C13A).unwrap();
        assert_eq!(r.stabilizer_type, GroupLabel::Cyclic(6));
        assert_ne!(r.stabilizer_type, r.expected.stabilizer_type);
        assert!(r.tables_ok() && r.family_ok() && r.named_maps_generate);
        assert_eq!((r.stabilizer_order, r.orbit_size), (6, 4732));
    }
}
