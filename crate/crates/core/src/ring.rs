//! Finite unital rings as explicit Cayley tables.
//!
//! Elements are dense indices `0..n`. Every constructor orders its elements
//! lexicographically in its natural coordinates: residues for `Z(n)`, the pair
//! `(a, b)` for `a+bi`, component tuples for products, and for matrix rings the
//! entries taken column by column (so in `M(2,R)` the order of significance is
//! `e11, e21, e12, e22`). Names are always printed row-major.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::expr::{normalize_literal, IdealSpec, RingExpr};
use crate::set::ElemSet;
use crate::structure::{IdealMask, Units};

/// Element index into a [`RingTable`].
pub type Elem = usize;

/// Size guards applied while elaborating ring expressions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest admissible element count.
    pub max_size: usize,
    /// Largest admissible matrix / triangular dimension.
    pub max_dim: usize,
    /// Largest admissible number of ideals in an ideal lattice.
    pub max_ideals: usize,
}

pub const DEFAULT_MAX_SIZE: usize = 4096;
pub const DEFAULT_MAX_IDEALS: usize = 65536;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_size: DEFAULT_MAX_SIZE,
            max_dim: 2,
            max_ideals: DEFAULT_MAX_IDEALS,
        }
    }
}

impl Limits {
    pub fn with_max_size(max_size: usize) -> Self {
        Limits {
            max_size,
            ..Limits::default()
        }
    }

    pub(crate) fn check(&self, what: impl fmt::Display, size: u128) -> Result<()> {
        if size > self.max_size as u128 {
            return Err(Error::SizeExceeded {
                what: what.to_string(),
                size,
                cap: self.max_size,
            });
        }
        Ok(())
    }

    fn check_dim(&self, k: u64) -> Result<usize> {
        if k as u128 > self.max_dim as u128 {
            return Err(Error::DimensionRejected {
                dim: k as usize,
                max: self.max_dim,
            });
        }
        Ok(k as usize)
    }
}

/// Unchecked table data, for building rings by hand (and for fault injection).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawTables {
    pub n: usize,
    /// Row-major `n * n` addition table.
    pub add: Vec<u32>,
    /// Row-major `n * n` multiplication table.
    pub mul: Vec<u32>,
    pub neg: Vec<u32>,
    pub zero: Elem,
    pub one: Elem,
    pub names: Vec<String>,
    pub provenance: RingExpr,
}

#[derive(Default)]
pub(crate) struct Memo {
    pub(crate) units: OnceLock<Units>,
    pub(crate) idempotents: OnceLock<Vec<Elem>>,
    pub(crate) jacobson: OnceLock<IdealMask>,
    pub(crate) right_sets: OnceLock<Vec<ElemSet>>,
}

impl Clone for Memo {
    fn clone(&self) -> Self {
        Memo::default()
    }
}

/// A finite unital ring given by its addition and multiplication tables.
///
/// Immutable once built; derived data (units, idempotents, radical) is
/// computed on first use and cached.
#[derive(Clone)]
pub struct RingTable {
    n: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: Elem,
    one: Elem,
    names: Vec<String>,
    name_index: HashMap<String, Elem>,
    provenance: RingExpr,
    pub(crate) memo: Memo,
}

impl fmt::Debug for RingTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingTable")
            .field("expr", &self.provenance.to_string())
            .field("n", &self.n)
            .finish()
    }
}

impl RingTable {
    /// Wraps raw tables without checking them. Run
    /// [`verify_axioms`](crate::axioms::verify_axioms) before trusting the result.
    pub fn from_raw_parts(raw: RawTables) -> Self {
        let name_index = raw.names.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        RingTable {
            n: raw.n,
            add: raw.add,
            mul: raw.mul,
            neg: raw.neg,
            zero: raw.zero,
            one: raw.one,
            names: raw.names,
            name_index,
            provenance: raw.provenance,
            memo: Memo::default(),
        }
    }

    pub fn to_raw_parts(&self) -> RawTables {
        RawTables {
            n: self.n,
            add: self.add.clone(),
            mul: self.mul.clone(),
            neg: self.neg.clone(),
            zero: self.zero,
            one: self.one,
            names: self.names.clone(),
            provenance: self.provenance.clone(),
        }
    }

    fn from_fns(
        n: usize,
        add: impl Fn(Elem, Elem) -> Elem,
        mul: impl Fn(Elem, Elem) -> Elem,
        zero: Elem,
        one: Elem,
        names: Vec<String>,
        provenance: RingExpr,
    ) -> Self {
        let mut add_t = vec![0u32; n * n];
        let mut mul_t = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                add_t[a * n + b] = add(a, b) as u32;
                mul_t[a * n + b] = mul(a, b) as u32;
            }
        }
        let neg = (0..n)
            .map(|a| (0..n).find(|&b| add_t[a * n + b] as usize == zero).unwrap_or(zero) as u32)
            .collect();
        RingTable::from_raw_parts(RawTables {
            n,
            add: add_t,
            mul: mul_t,
            neg,
            zero,
            one,
            names,
            provenance,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.n
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.n + b] as Elem
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.n + b] as Elem
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a] as Elem
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul3(&self, a: Elem, b: Elem, c: Elem) -> Elem {
        self.mul(self.mul(a, b), c)
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn square(&self, a: Elem) -> Elem {
        self.mul(a, a)
    }

    pub fn pow(&self, a: Elem, k: u32) -> Elem {
        (0..k).fold(self.one, |acc, _| self.mul(acc, a))
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn provenance(&self) -> &RingExpr {
        &self.provenance
    }

    /// Resolves an element literal through the canonical names.
    pub fn lookup(&self, literal: &str) -> Result<Elem> {
        let lit = normalize_literal(literal);
        self.name_index.get(&lit).copied().ok_or_else(|| Error::UnknownElement {
            literal: lit,
            ring: self.provenance.to_string(),
        })
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_trivial(&self) -> bool {
        self.n == 1
    }
}

// ---------------------------------------------------------------------------
// constructors

/// `Z_n`; element `i` is the residue `i`.
pub fn make_cyclic(n: u64) -> RingTable {
    let n = n.max(1) as usize;
    let names = (0..n).map(|i| i.to_string()).collect();
    RingTable::from_fns(
        n,
        |a, b| (a + b) % n,
        |a, b| (a * b) % n,
        0,
        1 % n,
        names,
        RingExpr::Cyclic(n as u64),
    )
}

/// Gaussian integers mod `n`; `a+bi` has index `a * n + b`.
pub fn make_gaussian(n: u64) -> RingTable {
    let m = n.max(1) as usize;
    let split = |x: Elem| (x / m, x % m);
    let join = |a: usize, b: usize| (a % m) * m + (b % m);
    let names = (0..m * m).map(|x| format!("{}+{}i", x / m, x % m)).collect();
    RingTable::from_fns(
        m * m,
        |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            join(a + c, b + d)
        },
        |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            // (a+bi)(c+di) = (ac - bd) + (ad + bc)i
            join(a * c + (m - (b * d) % m), a * d + b * c)
        },
        0,
        join(1, 0),
        names,
        RingExpr::Gaussian(m as u64),
    )
}

/// Entry positions `(row, col)` in order of decreasing significance.
fn matrix_positions(k: usize, upper_only: bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for col in 0..k {
        for row in 0..k {
            if !upper_only || row <= col {
                out.push((row, col));
            }
        }
    }
    out
}

/// Index of the matrix with the given row-major entries in `M(k, base)`
/// where `base` has `m` elements.
pub fn matrix_index(m: usize, k: usize, entries: &[Elem]) -> Elem {
    matrix_positions(k, false)
        .iter()
        .fold(0, |acc, &(r, c)| acc * m + entries[r * k + c])
}

fn build_matrix_ring(k: usize, base: &RingTable, upper_only: bool, provenance: RingExpr) -> RingTable {
    let m = base.n();
    let positions = matrix_positions(k, upper_only);
    let count = m.pow(positions.len() as u32);

    // row-major full k*k entry arrays for every element
    let decode = |mut x: Elem| {
        let mut entries = vec![base.zero(); k * k];
        for &(r, c) in positions.iter().rev() {
            entries[r * k + c] = x % m;
            x /= m;
        }
        entries
    };
    let coords: Vec<Vec<Elem>> = (0..count).map(decode).collect();
    let encode = |entries: &[Elem]| positions.iter().fold(0, |acc, &(r, c)| acc * m + entries[r * k + c]);

    let names = coords
        .iter()
        .map(|e| {
            let shown: Vec<&str> = (0..k)
                .flat_map(|r| (0..k).map(move |c| (r, c)))
                .filter(|&(r, c)| !upper_only || r <= c)
                .map(|(r, c)| base.name(e[r * k + c]))
                .collect();
            format!("[{}]", shown.join(","))
        })
        .collect();

    let mut identity = vec![base.zero(); k * k];
    for i in 0..k {
        identity[i * k + i] = base.one();
    }
    let one = encode(&identity);

    let add = |x: Elem, y: Elem| {
        let s: Vec<Elem> = coords[x]
            .iter()
            .zip(&coords[y])
            .map(|(&a, &b)| base.add(a, b))
            .collect();
        encode(&s)
    };
    let mul = |x: Elem, y: Elem| {
        let (a, b) = (&coords[x], &coords[y]);
        let mut p = vec![base.zero(); k * k];
        for r in 0..k {
            for c in 0..k {
                let mut acc = base.zero();
                for t in 0..k {
                    acc = base.add(acc, base.mul(a[r * k + t], b[t * k + c]));
                }
                p[r * k + c] = acc;
            }
        }
        encode(&p)
    };
    let zero = encode(&vec![base.zero(); k * k]);
    RingTable::from_fns(count, add, mul, zero, one, names, provenance)
}

/// Full `k x k` matrix ring over `base`.
pub fn make_matrix(k: u64, base: &RingTable, limits: &Limits) -> Result<RingTable> {
    let kk = limits.check_dim(k)?;
    let prov = RingExpr::Matrix(k, Box::new(base.provenance().clone()));
    limits.check(&prov, (base.n() as u128).saturating_pow((kk * kk) as u32))?;
    Ok(build_matrix_ring(kk, base, false, prov))
}

/// Upper-triangular `k x k` matrices over `base`.
pub fn make_triangular(k: u64, base: &RingTable, limits: &Limits) -> Result<RingTable> {
    let kk = limits.check_dim(k)?;
    let prov = RingExpr::Triangular(k, Box::new(base.provenance().clone()));
    limits.check(&prov, (base.n() as u128).saturating_pow((kk * (kk + 1) / 2) as u32))?;
    Ok(build_matrix_ring(kk, base, true, prov))
}

/// Direct product with componentwise operations; the first factor is the most
/// significant coordinate. A single factor is returned unchanged.
pub fn make_product(rings: &[RingTable], limits: &Limits) -> Result<RingTable> {
    let prov = RingExpr::Product(rings.iter().map(|r| r.provenance().clone()).collect());
    if rings.is_empty() {
        return Err(Error::PreconditionFailed("product of an empty list".into()));
    }
    let size = rings.iter().fold(1u128, |acc, r| acc.saturating_mul(r.n() as u128));
    limits.check(&prov, size)?;
    if rings.len() == 1 {
        let mut raw = rings[0].to_raw_parts();
        raw.provenance = prov;
        return Ok(RingTable::from_raw_parts(raw));
    }
    let count = size as usize;
    let radices: Vec<usize> = rings.iter().map(|r| r.n()).collect();
    let coords: Vec<Vec<Elem>> = (0..count)
        .map(|mut x| {
            let mut c = vec![0; radices.len()];
            for i in (0..radices.len()).rev() {
                c[i] = x % radices[i];
                x /= radices[i];
            }
            c
        })
        .collect();
    let encode = |c: &[Elem]| c.iter().zip(&radices).fold(0, |acc, (&v, &m)| acc * m + v);
    let names = coords
        .iter()
        .map(|c| {
            let parts: Vec<&str> = c.iter().zip(rings).map(|(&v, r)| r.name(v)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let zero = encode(&rings.iter().map(|r| r.zero()).collect::<Vec<_>>());
    let one = encode(&rings.iter().map(|r| r.one()).collect::<Vec<_>>());
    let op = |x: Elem, y: Elem, f: &dyn Fn(&RingTable, Elem, Elem) -> Elem| {
        let c: Vec<Elem> = rings
            .iter()
            .enumerate()
            .map(|(i, r)| f(r, coords[x][i], coords[y][i]))
            .collect();
        encode(&c)
    };
    Ok(RingTable::from_fns(
        count,
        |x, y| op(x, y, &|r, a, b| r.add(a, b)),
        |x, y| op(x, y, &|r, a, b| r.mul(a, b)),
        zero,
        one,
        names,
        prov,
    ))
}

/// A quotient ring together with the projection `a -> a + I`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub ring: RingTable,
    /// `projection[a]` is the index of the coset of `a`.
    pub projection: Vec<Elem>,
    /// Smallest member of each coset, by coset index.
    pub representatives: Vec<Elem>,
}

/// `R / I`. Cosets are ordered by their smallest member and named `<rep>`.
pub fn make_quotient(r: &RingTable, ideal: &IdealMask) -> Result<Quotient> {
    if ideal.members().universe() != r.n() {
        return Err(Error::NotAnIdeal(format!(
            "mask over {} elements used with {}",
            ideal.members().universe(),
            r.provenance()
        )));
    }
    let n = r.n();
    let mut projection = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for a in r.elements() {
        if projection[a] != usize::MAX {
            continue;
        }
        let c = representatives.len();
        representatives.push(a);
        for i in ideal.members().iter() {
            projection[r.add(a, i)] = c;
        }
    }
    let reps = representatives.clone();
    let names = reps.iter().map(|&a| format!("<{}>", r.name(a))).collect();
    let spec = ideal.describe(r);
    let prov = RingExpr::Quotient(Box::new(r.provenance().clone()), spec);
    let ring = RingTable::from_fns(
        reps.len(),
        |x, y| projection[r.add(reps[x], reps[y])],
        |x, y| projection[r.mul(reps[x], reps[y])],
        projection[r.zero()],
        projection[r.one()],
        names,
        prov,
    );
    Ok(Quotient {
        ring,
        projection,
        representatives,
    })
}

/// A corner ring `eRe` together with its embedding back into `R`.
#[derive(Clone, Debug)]
pub struct Corner {
    pub ring: RingTable,
    /// `embedding[x]` is the element of `R` that corner element `x` stands for.
    pub embedding: Vec<Elem>,
}

/// The corner ring `eRe` with identity `e`.
pub fn make_corner(r: &RingTable, e: Elem) -> Result<Corner> {
    if r.mul(e, e) != e {
        return Err(Error::NotIdempotent(r.name(e).to_string()));
    }
    let mut members = ElemSet::empty(r.n());
    for x in r.elements() {
        members.insert(r.mul3(e, x, e));
    }
    let embedding: Vec<Elem> = members.to_vec();
    let mut back = vec![usize::MAX; r.n()];
    for (i, &x) in embedding.iter().enumerate() {
        back[x] = i;
    }
    let names = embedding.iter().map(|&x| r.name(x).to_string()).collect();
    let prov = RingExpr::Corner(Box::new(r.provenance().clone()), r.name(e).to_string());
    let emb = &embedding;
    let ring = RingTable::from_fns(
        embedding.len(),
        |x, y| back[r.add(emb[x], emb[y])],
        |x, y| back[r.mul(emb[x], emb[y])],
        back[r.zero()],
        back[e],
        names,
        prov,
    );
    Ok(Corner { ring, embedding })
}

/// Elaborates an expression into a ring table, enforcing `limits`.
pub fn build(expr: &RingExpr, limits: &Limits) -> Result<RingTable> {
    match expr {
        RingExpr::Cyclic(n) => {
            limits.check(expr, *n as u128)?;
            Ok(make_cyclic(*n))
        }
        RingExpr::Gaussian(n) => {
            limits.check(expr, (*n as u128).saturating_mul(*n as u128))?;
            Ok(make_gaussian(*n))
        }
        RingExpr::Matrix(k, base) => make_matrix(*k, &build(base, limits)?, limits),
        RingExpr::Triangular(k, base) => make_triangular(*k, &build(base, limits)?, limits),
        RingExpr::Product(parts) => {
            let rings = parts.iter().map(|p| build(p, limits)).collect::<Result<Vec<_>>>()?;
            make_product(&rings, limits)
        }
        RingExpr::Quotient(base, spec) => {
            let r = build(base, limits)?;
            let ideal = resolve_ideal(&r, spec)?;
            let mut q = make_quotient(&r, &ideal)?.ring;
            q.provenance = expr.clone();
            Ok(q)
        }
        RingExpr::Corner(base, lit) => {
            let r = build(base, limits)?;
            let e = r.lookup(lit)?;
            Ok(make_corner(&r, e)?.ring)
        }
    }
}

/// Resolves an ideal spec against a concrete ring.
pub fn resolve_ideal(r: &RingTable, spec: &IdealSpec) -> Result<IdealMask> {
    Ok(match spec {
        IdealSpec::Zero => IdealMask::zero(r),
        IdealSpec::All => IdealMask::full(r),
        IdealSpec::Jacobson => crate::structure::jacobson_radical(r).clone(),
        IdealSpec::Gen(lits) => {
            let gens = lits.iter().map(|l| r.lookup(l)).collect::<Result<Vec<_>>>()?;
            crate::structure::ideal_generated_by(r, &gens)
        }
    })
}

/// Parses and elaborates in one step.
pub fn build_str(text: &str, limits: &Limits) -> Result<RingTable> {
    build(&crate::expr::parse_ring_expr(text)?, limits)
}
