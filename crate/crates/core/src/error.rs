use core::fmt;

/// Errors raised by the tower, graph, search and group layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotPrime(u32),
    /// `q` is even, or `p^m` overflowed.
    InvalidOrder {
        p: u32,
        m: u32,
    },
    /// The field polynomial is not monic of degree `m`, or is reducible.
    NotIrreducible,
    /// The requested element of `F_q` does not generate `F_q^*`.
    NotPrimitive {
        code: u32,
        order: u32,
    },
    /// `x^2 - d` must be irreducible over `F_q`, so `d` must be a non-square.
    SquareAlphaSquare {
        code: u32,
    },
    /// `q^2` exceeds the configured table bound.
    UnsupportedSize {
        q_squared: usize,
        bound: usize,
    },
    DivisionByZero,
    ZeroHasNoClass,
    /// `S = F_q^* * S0` failed for this tower.
    S0Mismatch,
    NotADivisor {
        k: u32,
        q_minus_one: u32,
    },
    DegeneratePair,
    OutOfRangeVertex(usize),
    NotStronglyRegular,
    /// A maximal clique with size strictly between the second-largest size and `q`.
    GapViolation {
        size: usize,
    },
    /// An automorphism multiplier must be a nonzero square.
    NonSquareMultiplier,
    /// A generator image of a census clique is not itself in the census.
    NotClosed {
        clique: usize,
        generator: usize,
    },
    NotAGroup,
    /// `orbit_size * stabilizer_order != |Aut|`.
    OrbitStabilizerMismatch {
        orbit_size: u64,
        stabilizer_order: u64,
    },
    RecipeCollision {
        label: &'static str,
    },
    /// No tower parameters reproduce the printed data for this `q`.
    UnresolvedTower {
        q: u32,
    },
    UnknownLabel,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not an odd prime"),
            Error::InvalidOrder { p, m } => write!(f, "unsupported field order {p}^{m}"),
            Error::NotIrreducible => f.write_str("field polynomial is not monic irreducible"),
            Error::NotPrimitive { code, order } => {
                write!(f, "element {code} has order {order}, not primitive")
            }
            Error::SquareAlphaSquare { code } => {
                write!(f, "x^2 - {code} is reducible: {code} is a square")
            }
            Error::UnsupportedSize { q_squared, bound } => {
                write!(f, "q^2 = {q_squared} exceeds the table bound {bound}")
            }
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::ZeroHasNoClass => f.write_str("zero is neither square nor non-square"),
            Error::S0Mismatch => f.write_str("S != F_q^* * S0 for this tower"),
            Error::NotADivisor { k, q_minus_one } => write!(f, "{k} does not divide {q_minus_one}"),
            Error::DegeneratePair => f.write_str("a line needs two distinct points"),
            Error::OutOfRangeVertex(v) => write!(f, "vertex {v} out of range"),
            Error::NotStronglyRegular => f.write_str("common-neighbour counts are not constant"),
            Error::GapViolation { size } => {
                write!(f, "maximal clique of intermediate size {size}")
            }
            Error::NonSquareMultiplier => f.write_str("multiplier is not a nonzero square"),
            Error::NotClosed { clique, generator } => {
                write!(
                    f,
                    "generator {generator} maps clique {clique} outside the census"
                )
            }
            Error::NotAGroup => f.write_str("element set is not closed under composition"),
            Error::OrbitStabilizerMismatch {
                orbit_size,
                stabilizer_order,
            } => write!(
                f,
                "orbit size {orbit_size} times stabilizer order {stabilizer_order} is not |Aut|"
            ),
            Error::RecipeCollision { label } => write!(f, "recipe {label} has overlapping pieces"),
            Error::UnresolvedTower { q } => write!(f, "no tower reproduces the data for q = {q}"),
            Error::UnknownLabel => f.write_str("unknown construction label"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
