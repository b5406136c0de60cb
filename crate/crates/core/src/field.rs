//! The tower `F_p ⊂ F_q ⊂ F_{q^2}` with `F_{q^2} = F_q(α)`, `α^2 = d` for a
//! non-square `d` of `F_q`.
//!
//! Elements of `F_q` are handled as *codes*: the base-`p` integer
//! `c_0 + c_1 p + ... + c_{m-1} p^{m-1}` of their coefficient vector over
//! `F_p[t]/(f)`. For prime `q` the code is the residue itself. An element
//! `x + yα` of `F_{q^2}` has code `x + q*y`.
//!
//! [`FieldElem`] carries the canonical vertex index instead: `0` for zero and
//! `k + 1` for `β^k`, `β` the primitive element of `F_{q^2}` with the smallest
//! code. Multiplication and Frobenius are index arithmetic modulo `q^2 - 1`;
//! addition goes through the codes.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Largest `q^2` for which tables are built unless configured otherwise.
/// Vertex indices are stored as `u16`.
pub const DEFAULT_TABLE_BOUND: usize = 1 << 16;

/// An element of `F_{q^2}`, stored as its canonical vertex index.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElem(u16);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Wraps a raw index without range checking; see [`FieldCtx::elem`].
    #[inline]
    pub fn from_index(index: usize) -> Self {
        debug_assert!(index <= u16::MAX as usize);
        FieldElem(index as u16)
    }
}

/// Construction parameters. Codes refer to elements of `F_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerParams {
    pub p: u32,
    pub m: u32,
    /// Monic defining polynomial of `F_q` over `F_p`, low degree first.
    pub field_poly: Option<Vec<u32>>,
    /// Primitive element `δ` of `F_q`.
    pub delta: Option<u32>,
    /// The non-square `d = α^2`. Defaults to `δ`.
    pub alpha_square: Option<u32>,
    pub table_bound: usize,
}

impl TowerParams {
    pub fn new(p: u32, m: u32) -> Self {
        TowerParams {
            p,
            m,
            field_poly: None,
            delta: None,
            alpha_square: None,
            table_bound: DEFAULT_TABLE_BOUND,
        }
    }

    pub fn with_delta(mut self, code: u32) -> Self {
        self.delta = Some(code);
        self
    }

    pub fn with_alpha_square(mut self, code: u32) -> Self {
        self.alpha_square = Some(code);
        self
    }

    pub fn with_field_poly(mut self, coeffs: Vec<u32>) -> Self {
        self.field_poly = Some(coeffs);
        self
    }

    pub fn with_table_bound(mut self, bound: usize) -> Self {
        self.table_bound = bound;
        self
    }
}

/// Immutable arithmetic context for one tower.
#[derive(Clone, Debug)]
pub struct FieldCtx {
    p: u32,
    m: u32,
    q: u32,
    /// `q^2 - 1`
    order: u32,
    field_poly: Vec<u32>,
    fq_add: Vec<u16>,
    fq_mul: Vec<u16>,
    fq_neg: Vec<u16>,
    delta: u32,
    alpha_square: u32,
    /// `exp[k]` is the code of `β^k`.
    exp: Vec<u32>,
    idx_to_code: Vec<u32>,
    code_to_idx: Vec<u16>,
    /// `p^v mod (q^2 - 1)` for `v` in `0..2m`.
    frob_pow: Vec<u32>,
}

/// Builds the tower for `q = p^m` with `α^2 = δ`.
///
/// Without a hint, `δ` is the primitive element of `F_q` with the smallest code.
pub fn build_field(p: u32, m: u32, delta_hint: Option<u32>) -> Result<FieldCtx> {
    let mut params = TowerParams::new(p, m);
    params.delta = delta_hint;
    FieldCtx::new(&params)
}

fn is_odd_prime(p: u32) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Multiplication table of `F_p[t]/(f)` over codes, or `None` if the quotient
/// ring has zero divisors.
fn quotient_mul_table(p: u32, m: u32, f: &[u32]) -> Option<Vec<u16>> {
    let q = p.pow(m) as usize;
    let m = m as usize;
    let digits = |mut c: usize| {
        let mut v = vec![0u32; m];
        for d in v.iter_mut() {
            *d = (c % p as usize) as u32;
            c /= p as usize;
        }
        v
    };
    let mut table = vec![0u16; q * q];
    for a in 0..q {
        let da = digits(a);
        for b in a..q {
            let db = digits(b);
            let mut prod = vec![0u32; 2 * m];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            // Reduce by the monic f from the top down.
            for deg in (m..2 * m).rev() {
                let c = prod[deg];
                if c != 0 {
                    for (k, &fk) in f.iter().enumerate().take(m) {
                        let at = deg - m + k;
                        prod[at] = (prod[at] + (p - c) * fk) % p;
                    }
                    prod[deg] = 0;
                }
            }
            let mut code = 0usize;
            for &d in prod[..m].iter().rev() {
                code = code * p as usize + d as usize;
            }
            if a != 0 && b != 0 && code == 0 {
                return None;
            }
            table[a * q + b] = code as u16;
            table[b * q + a] = code as u16;
        }
    }
    Some(table)
}

fn fq_order(mul: &[u16], q: usize, code: u32) -> u32 {
    if code == 0 {
        return 0;
    }
    let mut x = code as usize;
    let mut k = 1;
    while x != 1 {
        x = mul[x * q + code as usize] as usize;
        k += 1;
    }
    k
}

/// Smallest monic irreducible polynomial of degree `m` over `F_p` whose root is
/// primitive, ordered by the coefficients from `t^{m-1}` down to `t^0`.
pub fn default_field_poly(p: u32, m: u32) -> Vec<u32> {
    if m == 1 {
        return vec![0, 1];
    }
    let q = p.pow(m);
    for rank in 0..q {
        // rank's base-p digits, most significant first, are (c_{m-1}, ..., c_0)
        let mut coeffs = vec![0u32; m as usize + 1];
        let mut r = rank;
        for c in coeffs.iter_mut().take(m as usize) {
            *c = r % p;
            r /= p;
        }
        coeffs[m as usize] = 1;
        if let Some(mul) = quotient_mul_table(p, m, &coeffs) {
            // t has code p
            if fq_order(&mul, q as usize, p) == q - 1 {
                return coeffs;
            }
        }
    }
    unreachable!("primitive polynomials exist over every finite field")
}

impl FieldCtx {
    pub fn new(params: &TowerParams) -> Result<FieldCtx> {
        let TowerParams { p, m, .. } = *params;
        if !is_odd_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::InvalidOrder { p, m });
        }
        let q = p.checked_pow(m).ok_or(Error::InvalidOrder { p, m })?;
        let n = (q as usize)
            .checked_mul(q as usize)
            .ok_or(Error::InvalidOrder { p, m })?;
        let bound = params.table_bound.min(DEFAULT_TABLE_BOUND);
        if n > bound {
            return Err(Error::UnsupportedSize {
                q_squared: n,
                bound,
            });
        }
        let qs = q as usize;

        let field_poly = match &params.field_poly {
            Some(f) => {
                if f.len() != m as usize + 1 || f[m as usize] != 1 || f.iter().any(|&c| c >= p) {
                    return Err(Error::NotIrreducible);
                }
                f.clone()
            }
            None => default_field_poly(p, m),
        };
        let fq_mul = if m == 1 {
            let mut t = vec![0u16; qs * qs];
            for a in 0..qs {
                for b in 0..qs {
                    t[a * qs + b] = ((a * b) % qs) as u16;
                }
            }
            t
        } else {
            quotient_mul_table(p, m, &field_poly).ok_or(Error::NotIrreducible)?
        };
        let mut fq_add = vec![0u16; qs * qs];
        let mut fq_neg = vec![0u16; qs];
        for a in 0..qs {
            for b in 0..qs {
                let (mut x, mut y, mut code, mut place) = (a, b, 0usize, 1usize);
                for _ in 0..m {
                    code += ((x + y) % p as usize) * place;
                    x /= p as usize;
                    y /= p as usize;
                    place *= p as usize;
                }
                fq_add[a * qs + b] = code as u16;
                if code == 0 {
                    fq_neg[a] = b as u16;
                }
            }
        }

        let delta = match params.delta {
            Some(d) => {
                if d >= q {
                    return Err(Error::NotPrimitive { code: d, order: 0 });
                }
                let order = fq_order(&fq_mul, qs, d);
                if order != q - 1 {
                    return Err(Error::NotPrimitive { code: d, order });
                }
                d
            }
            None => (1..q)
                .find(|&c| fq_order(&fq_mul, qs, c) == q - 1)
                .expect("F_q^* is cyclic"),
        };
        let alpha_square = params.alpha_square.unwrap_or(delta);
        if alpha_square == 0
            || alpha_square >= q
            || (0..qs).any(|x| fq_mul[x * qs + x] as u32 == alpha_square)
        {
            return Err(Error::SquareAlphaSquare { code: alpha_square });
        }

        let mut ctx = FieldCtx {
            p,
            m,
            q,
            order: (n - 1) as u32,
            field_poly,
            fq_add,
            fq_mul,
            fq_neg,
            delta,
            alpha_square,
            exp: Vec::new(),
            idx_to_code: Vec::new(),
            code_to_idx: Vec::new(),
            frob_pow: Vec::new(),
        };

        let order = ctx.order;
        let beta = (1..n as u32)
            .find(|&c| ctx.code_order(c) == order)
            .expect("F_{q^2}^* is cyclic");
        let mut exp = Vec::with_capacity(order as usize);
        let mut x = 1u32;
        for _ in 0..order {
            exp.push(x);
            x = ctx.code_mul(x, beta);
        }
        let mut idx_to_code = vec![0u32; n];
        let mut code_to_idx = vec![0u16; n];
        for (k, &c) in exp.iter().enumerate() {
            idx_to_code[k + 1] = c;
            code_to_idx[c as usize] = (k + 1) as u16;
        }
        ctx.exp = exp;
        ctx.idx_to_code = idx_to_code;
        ctx.code_to_idx = code_to_idx;
        ctx.frob_pow = (0..2 * m)
            .map(|v| {
                let mut r = 1u64;
                for _ in 0..v {
                    r = r * p as u64 % order as u64;
                }
                r as u32
            })
            .collect();

        // F_q^* = <β^{q+1}> and α^2 = d.
        let sub_gen = ctx.pow(ctx.beta(), q as u64 + 1);
        assert_eq!(ctx.coeffs(sub_gen).1, 0);
        assert_eq!(ctx.order_of(sub_gen), q - 1);
        assert_eq!(ctx.mul(ctx.alpha(), ctx.alpha()), ctx.fq(alpha_square));
        Ok(ctx)
    }

    fn code_mul(&self, a: u32, b: u32) -> u32 {
        let q = self.q;
        let (x1, y1, x2, y2) = (a % q, a / q, b % q, b / q);
        let x = self.fq_add(
            self.fq_mul(x1, x2),
            self.fq_mul(self.alpha_square, self.fq_mul(y1, y2)),
        );
        let y = self.fq_add(self.fq_mul(x1, y2), self.fq_mul(x2, y1));
        x + q * y
    }

    fn code_order(&self, c: u32) -> u32 {
        let mut x = c;
        let mut k = 1;
        while x != 1 {
            x = self.code_mul(x, c);
            k += 1;
            if k > self.order {
                return 0;
            }
        }
        k
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Number of vertices, `q^2`.
    pub fn size(&self) -> usize {
        self.order as usize + 1
    }

    /// `|F_{q^2}^*| = q^2 - 1`
    pub fn mult_order(&self) -> u32 {
        self.order
    }

    /// `1` if `q ≡ 1 (mod 4)`, else `3`.
    pub fn epsilon(&self) -> u32 {
        if self.q % 4 == 1 {
            1
        } else {
            3
        }
    }

    /// `(q + ε) / 2`
    pub fn second_size(&self) -> usize {
        ((self.q + self.epsilon()) / 2) as usize
    }

    pub fn field_poly(&self) -> &[u32] {
        &self.field_poly
    }

    pub fn delta_code(&self) -> u32 {
        self.delta
    }

    pub fn alpha_square_code(&self) -> u32 {
        self.alpha_square
    }

    /// Validated conversion from a raw vertex index.
    pub fn elem(&self, index: usize) -> Result<FieldElem> {
        if index < self.size() {
            Ok(FieldElem(index as u16))
        } else {
            Err(Error::OutOfRangeVertex(index))
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.size()).map(|i| FieldElem(i as u16))
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem::ZERO
    }

    pub fn one(&self) -> FieldElem {
        FieldElem(1)
    }

    pub fn beta(&self) -> FieldElem {
        FieldElem(2)
    }

    pub fn alpha(&self) -> FieldElem {
        self.from_coeffs(0, 1)
    }

    pub fn delta(&self) -> FieldElem {
        self.fq(self.delta)
    }

    /// `δ^k` as an element of the subfield.
    pub fn delta_pow(&self, k: i64) -> FieldElem {
        self.pow_signed(self.delta(), k)
    }

    // ---- F_q codes ----

    #[inline]
    pub fn fq_add(&self, a: u32, b: u32) -> u32 {
        self.fq_add[(a * self.q + b) as usize] as u32
    }

    #[inline]
    pub fn fq_mul(&self, a: u32, b: u32) -> u32 {
        self.fq_mul[(a * self.q + b) as usize] as u32
    }

    #[inline]
    pub fn fq_neg(&self, a: u32) -> u32 {
        self.fq_neg[a as usize] as u32
    }

    /// Code of the integer `n` read in the prime field `F_p ⊂ F_q`.
    pub fn fq_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    /// Coefficient vector over `F_p` of an `F_q` code, low degree first.
    pub fn fq_digits(&self, mut code: u32) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.m as usize);
        for _ in 0..self.m {
            v.push(code % self.p);
            code /= self.p;
        }
        v
    }

    pub fn fq_from_digits(&self, digits: &[u32]) -> Option<u32> {
        if digits.len() != self.m as usize || digits.iter().any(|&d| d >= self.p) {
            return None;
        }
        Some(digits.iter().rev().fold(0, |acc, &d| acc * self.p + d))
    }

    // ---- F_{q^2} ----

    /// `x + yα` from `F_q` codes.
    #[inline]
    pub fn from_coeffs(&self, x: u32, y: u32) -> FieldElem {
        FieldElem(self.code_to_idx[(x + self.q * y) as usize])
    }

    /// The `F_q` codes `(x, y)` of `x + yα`.
    #[inline]
    pub fn coeffs(&self, a: FieldElem) -> (u32, u32) {
        let c = self.idx_to_code[a.index()];
        (c % self.q, c / self.q)
    }

    /// Embeds an `F_q` code.
    #[inline]
    pub fn fq(&self, code: u32) -> FieldElem {
        self.from_coeffs(code, 0)
    }

    pub fn int(&self, n: i64) -> FieldElem {
        self.fq(self.fq_int(n))
    }

    pub fn in_subfield(&self, a: FieldElem) -> bool {
        self.coeffs(a).1 == 0
    }

    /// `[[x_0..x_{m-1}], [y_0..y_{m-1}]]` over `F_p`.
    pub fn coeff_matrix(&self, a: FieldElem) -> [Vec<u32>; 2] {
        let (x, y) = self.coeffs(a);
        [self.fq_digits(x), self.fq_digits(y)]
    }

    pub fn from_coeff_matrix(&self, rows: &[Vec<u32>]) -> Option<FieldElem> {
        match rows {
            [x, y] => Some(self.from_coeffs(self.fq_from_digits(x)?, self.fq_from_digits(y)?)),
            _ => None,
        }
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let (x1, y1) = self.coeffs(a);
        let (x2, y2) = self.coeffs(b);
        self.from_coeffs(self.fq_add(x1, x2), self.fq_add(y1, y2))
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        let (x, y) = self.coeffs(a);
        self.from_coeffs(self.fq_neg(x), self.fq_neg(y))
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.is_zero() || b.is_zero() {
            return FieldElem::ZERO;
        }
        let k = (a.0 as u32 - 1) + (b.0 as u32 - 1);
        let k = if k >= self.order { k - self.order } else { k };
        FieldElem((k + 1) as u16)
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        let k = self.log(a).ok_or(Error::DivisionByZero)?;
        Ok(FieldElem(((self.order - k) % self.order + 1) as u16))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        match self.log(a) {
            None if e == 0 => self.one(),
            None => FieldElem::ZERO,
            Some(k) => {
                let k = (k as u64 * (e % self.order as u64)) % self.order as u64;
                FieldElem(k as u16 + 1)
            }
        }
    }

    /// `a^e` for signed `e`; zero is only raised to non-negative powers.
    pub fn pow_signed(&self, a: FieldElem, e: i64) -> FieldElem {
        let e = e.rem_euclid(self.order as i64) as u64;
        self.pow(a, e)
    }

    /// Discrete logarithm base `β`.
    #[inline]
    pub fn log(&self, a: FieldElem) -> Option<u32> {
        if a.is_zero() {
            None
        } else {
            Some(a.0 as u32 - 1)
        }
    }

    /// `β^k`
    pub fn exp(&self, k: u64) -> FieldElem {
        FieldElem((k % self.order as u64) as u16 + 1)
    }

    /// Multiplicative order of a nonzero element.
    pub fn order_of(&self, a: FieldElem) -> u32 {
        match self.log(a) {
            None => 0,
            Some(k) => self.order / gcd(self.order, k),
        }
    }

    /// `a^(p^v)`, with `v` reduced mod `2m`.
    #[inline]
    pub fn frobenius(&self, a: FieldElem, v: u32) -> FieldElem {
        if a.is_zero() {
            return a;
        }
        let e = self.frob_pow[(v % (2 * self.m)) as usize] as u64;
        let k = (a.0 as u64 - 1) * e % self.order as u64;
        FieldElem(k as u16 + 1)
    }

    /// Whether `a` is a nonzero square of `F_{q^2}`.
    pub fn is_square(&self, a: FieldElem) -> Result<bool> {
        self.log(a).map(|k| k % 2 == 0).ok_or(Error::ZeroHasNoClass)
    }

    /// The subfield `F_q`, in code order.
    pub fn subfield(&self) -> Vec<FieldElem> {
        (0..self.q).map(|c| self.fq(c)).collect()
    }

    /// `F_q^*` in code order.
    pub fn subfield_units(&self) -> Vec<FieldElem> {
        (1..self.q).map(|c| self.fq(c)).collect()
    }

    /// Nonzero squares of `F_{q^2}` in index order.
    pub fn squares(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.order / 2).map(move |j| self.exp(2 * j as u64))
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `S` and `S0` of a tower.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareSets {
    /// Nonzero squares, sorted by index.
    pub squares: Vec<FieldElem>,
    /// `{x + α : x ∈ F_q} ∩ S` together with `1`, sorted by index.
    pub s0: Vec<FieldElem>,
}

impl SquareSets {
    /// The `x` of each `x + α ∈ S0` as `F_q` codes, ascending. `1` is skipped.
    pub fn s0_shifts(&self, ctx: &FieldCtx) -> Vec<u32> {
        let mut xs: Vec<u32> = self
            .s0
            .iter()
            .map(|&e| ctx.coeffs(e))
            .filter(|&(_, y)| y == 1)
            .map(|(x, _)| x)
            .collect();
        xs.sort_unstable();
        xs
    }
}

/// Computes `S`, `S0` and checks that `F_q^* × S0 → S` is a bijection.
pub fn squares_and_s0(ctx: &FieldCtx) -> Result<SquareSets> {
    let squares: Vec<FieldElem> = {
        let mut v: Vec<_> = ctx.squares().collect();
        v.sort_unstable();
        v
    };
    let mut s0: Vec<FieldElem> = (0..ctx.q())
        .map(|x| ctx.from_coeffs(x, 1))
        .filter(|&e| ctx.is_square(e) == Ok(true))
        .collect();
    s0.push(ctx.one());
    s0.sort_unstable();

    let mut covered = vec![false; ctx.size()];
    for &s in &s0 {
        for u in ctx.subfield_units() {
            let e = ctx.mul(u, s);
            if covered[e.index()] {
                return Err(Error::S0Mismatch);
            }
            covered[e.index()] = true;
        }
    }
    let hit = covered.iter().filter(|&&c| c).count();
    if hit != squares.len() || squares.iter().any(|s| !covered[s.index()]) {
        return Err(Error::S0Mismatch);
    }
    Ok(SquareSets { squares, s0 })
}

/// How `-H` relates to the order-`k` subgroup `H` of `F_q^*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NegationRelation {
    Equal,
    Disjoint,
}

/// The unique subgroup of order `k` in `F_q^*`, as `F_q` codes in the order
/// `δ^{(q-1)/k}, δ^{2(q-1)/k}, ..., 1`.
pub fn subfield_subgroup(ctx: &FieldCtx, k: u32) -> Result<Vec<u32>> {
    let qm1 = ctx.q() - 1;
    if k == 0 || qm1 % k != 0 {
        return Err(Error::NotADivisor {
            k,
            q_minus_one: qm1,
        });
    }
    let step = qm1 / k;
    Ok((1..=k)
        .map(|j| ctx.coeffs(ctx.delta_pow((j * step) as i64)).0)
        .collect())
}

/// Compares `-H` with `H` by enumeration.
pub fn subgroup_negation_check(ctx: &FieldCtx, k: u32) -> Result<NegationRelation> {
    let h = subfield_subgroup(ctx, k)?;
    let neg: Vec<u32> = h.iter().map(|&x| ctx.fq_neg(x)).collect();
    if neg.iter().all(|x| h.contains(x)) {
        Ok(NegationRelation::Equal)
    } else if neg.iter().all(|x| !h.contains(x)) {
        Ok(NegationRelation::Disjoint)
    } else {
        unreachable!("-H is a coset of H")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u32, m: u32, delta: Option<u32>) -> FieldCtx {
        build_field(p, m, delta).unwrap()
    }

    /// `(x0 + y0 t)(x1 + y1 t)` in `F_p[t]/(t^2 - d)`, computed with plain
    /// polynomial arithmetic and no tables.
    fn poly_mul_mod(p: i64, d: i64, a: (i64, i64), b: (i64, i64)) -> (i64, i64) {
        let c0 = a.0 * b.0;
        let c1 = a.0 * b.1 + a.1 * b.0;
        let c2 = a.1 * b.1;
        ((c0 + c2 * d).rem_euclid(p), c1.rem_euclid(p))
    }

    #[test]
    fn builds_with_delta_hints() {
        let c13 = ctx(13, 1, Some(6));
        assert_eq!(c13.delta_code(), 6);
        let c17 = ctx(17, 1, Some(10));
        assert_eq!(c17.delta_code(), 10);
    }

    #[test]
    fn identity_is_not_primitive() {
        assert_eq!(
            build_field(13, 1, Some(1)).unwrap_err(),
            Error::NotPrimitive { code: 1, order: 1 }
        );
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(build_field(15, 1, None).unwrap_err(), Error::NotPrime(15));
        assert_eq!(build_field(2, 3, None).unwrap_err(), Error::NotPrime(2));
        let small = TowerParams::new(23, 1).with_table_bound(400);
        assert_eq!(
            FieldCtx::new(&small).unwrap_err(),
            Error::UnsupportedSize {
                q_squared: 529,
                bound: 400
            }
        );
        let square = TowerParams::new(13, 1).with_delta(6).with_alpha_square(4);
        assert_eq!(
            FieldCtx::new(&square).unwrap_err(),
            Error::SquareAlphaSquare { code: 4 }
        );
        let reducible = TowerParams::new(3, 2).with_field_poly(vec![2, 0, 1]);
        assert_eq!(
            FieldCtx::new(&reducible).unwrap_err(),
            Error::NotIrreducible
        );
    }

    #[test]
    fn f9_uses_primitive_polynomial() {
        let c = ctx(3, 2, None);
        assert_eq!(c.q(), 9);
        assert_eq!(c.size(), 81);
        assert_eq!(c.mult_order(), 80);
        assert_eq!(c.field_poly(), &[2, 1, 1]);
        // t has code p = 3 and is primitive, so it is the default δ... unless
        // a smaller code is primitive too.
        let t_order = c.order_of(c.fq(3));
        assert_eq!(t_order, 8);
    }

    #[test]
    fn square_of_alpha_plus_8_matches_polynomial_oracle() {
        let c = ctx(13, 1, Some(6));
        let a = c.from_coeffs(8, 1);
        let got = c.coeffs(c.mul(a, a));
        assert_eq!(poly_mul_mod(13, 6, (8, 1), (8, 1)), (5, 3));
        assert_eq!(got, (5, 3));
    }

    #[test]
    fn multiplication_agrees_with_polynomial_oracle() {
        for (p, d) in [(11u32, 2u32), (13, 6), (13, 11), (17, 11)] {
            let c = FieldCtx::new(&TowerParams::new(p, 1).with_alpha_square(d)).unwrap();
            for a in c.elements() {
                for b in c.elements() {
                    let (x1, y1) = c.coeffs(a);
                    let (x2, y2) = c.coeffs(b);
                    let want = poly_mul_mod(
                        p as i64,
                        d as i64,
                        (x1 as i64, y1 as i64),
                        (x2 as i64, y2 as i64),
                    );
                    let got = c.coeffs(c.mul(a, b));
                    assert_eq!((got.0 as i64, got.1 as i64), want);
                }
            }
        }
    }

    #[test]
    fn frobenius_examples() {
        for (p, m) in [(3, 2), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1)] {
            let c = ctx(p, m, None);
            let alpha = c.alpha();
            assert_eq!(c.frobenius(alpha, m), c.neg(alpha));
            for x in c.elements() {
                assert_eq!(c.frobenius(x, 0), x);
                let mut y = x;
                for _ in 0..2 * m {
                    y = c.frobenius(y, 1);
                }
                assert_eq!(y, x);
                assert_eq!(c.frobenius(x, 1), c.pow(x, p as u64));
            }
        }
    }

    #[test]
    fn squareness_of_minus_one_and_alpha() {
        for (p, m) in [(3, 2), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1)] {
            let c = ctx(p, m, None);
            assert!(c.is_square(c.neg(c.one())).unwrap());
            assert_eq!(
                c.is_square(c.alpha()).unwrap(),
                c.q() % 4 == 3,
                "q = {}",
                c.q()
            );
            for x in c.elements().skip(1) {
                assert!(c.is_square(c.mul(x, x)).unwrap());
            }
        }
        let c = ctx(13, 1, None);
        assert_eq!(c.is_square(c.zero()), Err(Error::ZeroHasNoClass));
    }

    #[test]
    fn inverse_of_zero_fails() {
        let c = ctx(11, 1, None);
        assert_eq!(c.inv(c.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn square_sets_cover() {
        for (p, m) in [(3, 2), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1)] {
            let c = ctx(p, m, None);
            let s = squares_and_s0(&c).unwrap();
            let q = c.q() as usize;
            assert_eq!(s.squares.len(), (q * q - 1) / 2);
            assert_eq!(s.s0.len(), q.div_ceil(2));
            for u in c.subfield_units() {
                assert!(s.squares.binary_search(&u).is_ok());
            }
        }
    }

    #[test]
    fn negation_of_subgroups() {
        let c13 = ctx(13, 1, Some(6));
        let mut h = subfield_subgroup(&c13, 3).unwrap();
        h.sort_unstable();
        assert_eq!(h, [1, 3, 9]);
        assert_eq!(
            subgroup_negation_check(&c13, 3),
            Ok(NegationRelation::Disjoint)
        );
        assert_eq!(
            subgroup_negation_check(&c13, 1),
            Ok(NegationRelation::Disjoint)
        );
        assert_eq!(
            subgroup_negation_check(&c13, 5),
            Err(Error::NotADivisor {
                k: 5,
                q_minus_one: 12
            })
        );
        let c17 = ctx(17, 1, Some(10));
        assert_eq!(subfield_subgroup(&c17, 4).unwrap(), [4, 16, 13, 1]);
        assert_eq!(
            subgroup_negation_check(&c17, 4),
            Ok(NegationRelation::Equal)
        );
        for k in [1, 2, 3, 4, 6, 12] {
            let want = if k % 2 == 0 {
                NegationRelation::Equal
            } else {
                NegationRelation::Disjoint
            };
            assert_eq!(subgroup_negation_check(&c13, k), Ok(want));
        }
    }

    #[test]
    fn coefficient_matrix_round_trip() {
        let c = ctx(3, 2, None);
        for e in c.elements() {
            let rows = c.coeff_matrix(e);
            assert_eq!(rows[0].len(), 2);
            assert_eq!(c.from_coeff_matrix(&rows), Some(e));
        }
        assert_eq!(c.coeff_matrix(c.zero()), [vec![0, 0], vec![0, 0]]);
    }
}
