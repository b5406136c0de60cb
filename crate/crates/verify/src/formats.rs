//! File formats. Field elements are written as their coefficient matrix over
//! `F_p`: `[[x0..x_{m-1}], [y0..y_{m-1}]]` for `x + yα`.

use paley_core::constructions::Orientation;
use paley_core::geometry::Line;
use paley_core::{Automorphism, CliqueSet, FieldCtx, FieldElem, OrbitRecord};
use serde::{Deserialize, Serialize};

pub type Elem = [Vec<u32>; 2];

pub fn elem(ctx: &FieldCtx, e: FieldElem) -> Elem {
    ctx.coeff_matrix(e)
}

pub fn parse_elem(ctx: &FieldCtx, e: &Elem) -> Option<FieldElem> {
    ctx.from_coeff_matrix(e)
}

pub fn elems(ctx: &FieldCtx, c: &CliqueSet) -> Vec<Elem> {
    c.vertices().iter().map(|&e| elem(ctx, e)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerRepr {
    pub p: u32,
    pub m: u32,
    pub delta_coeffs: Vec<u32>,
    /// Low degree first, monic.
    pub field_poly_coeffs: Vec<u32>,
    pub alpha_square_coeffs: Vec<u32>,
    pub orientation: String,
}

impl TowerRepr {
    pub fn new(ctx: &FieldCtx, o: Orientation) -> Self {
        TowerRepr {
            p: ctx.p(),
            m: ctx.m(),
            delta_coeffs: ctx.fq_digits(ctx.delta_code()),
            field_poly_coeffs: ctx.field_poly().to_vec(),
            alpha_square_coeffs: ctx.fq_digits(ctx.alpha_square_code()),
            orientation: match o {
                Orientation::Plus => "+alpha".into(),
                Orientation::Minus => "-alpha".into(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineRepr {
    pub base: Elem,
    pub slope: Elem,
    pub points: Vec<Elem>,
}

impl LineRepr {
    pub fn new(ctx: &FieldCtx, l: &Line) -> Self {
        LineRepr {
            base: elem(ctx, l.base),
            slope: elem(ctx, l.slope),
            points: l.points.iter().map(|&x| elem(ctx, x)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutRepr {
    pub a: Elem,
    pub b: Elem,
    pub v: u32,
}

impl AutRepr {
    pub fn new(ctx: &FieldCtx, f: &Automorphism) -> Self {
        AutRepr {
            a: elem(ctx, f.a),
            b: elem(ctx, f.b),
            v: f.v,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitJson {
    pub q: u32,
    pub representative: Vec<Elem>,
    pub orbit_size: u64,
    pub stabilizer_order: u64,
    pub stabilizer_type: String,
    pub generators: Vec<AutRepr>,
    pub members_digest: String,
}

impl OrbitJson {
    pub fn new(ctx: &FieldCtx, r: &OrbitRecord) -> Self {
        OrbitJson {
            q: ctx.q(),
            representative: elems(ctx, &r.representative),
            orbit_size: r.orbit_size,
            stabilizer_order: r.stabilizer_order,
            stabilizer_type: r.stabilizer_type.to_string(),
            generators: r.generators.iter().map(|g| AutRepr::new(ctx, g)).collect(),
            members_digest: format!("{:016x}", r.members_digest),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitCsvRow {
    pub q: u32,
    /// Vertex indices separated by spaces.
    pub representative: String,
    pub orbit_size: u64,
    pub stabilizer_order: u64,
    pub stabilizer_type: String,
    pub members_digest: String,
}

impl OrbitCsvRow {
    pub fn new(q: u32, r: &OrbitRecord) -> Self {
        OrbitCsvRow {
            q,
            representative: indices(&r.representative),
            orbit_size: r.orbit_size,
            stabilizer_order: r.stabilizer_order,
            stabilizer_type: r.stabilizer_type.to_string(),
            members_digest: format!("{:016x}", r.members_digest),
        }
    }
}

pub fn indices(c: &CliqueSet) -> String {
    c.indices()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// One clique per line, as a JSON array of coefficient matrices.
pub fn clique_json_line(ctx: &FieldCtx, c: &CliqueSet) -> String {
    serde_json::to_string(&elems(ctx, c)).expect("plain data")
}

/// One clique per line, as comma-separated vertex indices.
pub fn clique_csv_line(c: &CliqueSet) -> String {
    c.indices()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn parse_clique_json_line(ctx: &FieldCtx, line: &str) -> Option<CliqueSet> {
    let raw: Vec<Elem> = serde_json::from_str(line).ok()?;
    let v: Option<Vec<FieldElem>> = raw.iter().map(|e| parse_elem(ctx, e)).collect();
    Some(CliqueSet::new(v?))
}

pub fn parse_clique_csv_line(ctx: &FieldCtx, line: &str) -> Option<CliqueSet> {
    let v: Option<Vec<FieldElem>> = line
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .ok()
                .and_then(|i| ctx.elem(i).ok())
        })
        .collect();
    Some(CliqueSet::new(v?))
}
