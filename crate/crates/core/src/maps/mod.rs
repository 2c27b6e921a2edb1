//! Linear and bilinear maps into a bimodule, the predicates defining each
//! map kind, and the exact solution spaces of those predicates.

mod extremal;
mod identities;
pub mod suites;
mod value;

use std::fmt;

use rayon::prelude::*;

pub use extremal::{find_extremal_witness, ExtremalWitness};

use identities::{bilinear_residuals, linear_residual, tuple_len, tuples};
use value::{BilinearSource, LinearSource, SymbolicBilinear, SymbolicLinear};

use crate::algebra::{Algebra, Bimodule, Element};
use crate::error::{Error, Result};
use crate::linalg::{kernel_of, Rational, RowEchelon, Subspace};
use crate::poly::MultilinearPolynomial;

/// Default cap on the number of scalar constraint rows.
pub const DEFAULT_MAX_ROWS: usize = 200_000;
/// Default cap on polynomial arity for the f-kinds.
pub const DEFAULT_MAX_ARITY: usize = 4;

/// A bilinear map `A × A → M`, stored by its values on basis pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearMap {
    d: usize,
    mdim: usize,
    values: Vec<Element>,
}

impl BilinearMap {
    pub fn zero(d: usize, mdim: usize) -> Self {
        BilinearMap {
            d,
            mdim,
            values: vec![Element::zero(mdim); d * d],
        }
    }

    /// `values[i][j]` is the image of `(u_i, u_j)`.
    pub fn from_values(values: Vec<Vec<Element>>, mdim: usize) -> Result<Self> {
        let d = values.len();
        let mut flat = Vec::with_capacity(d * d);
        for (i, row) in values.into_iter().enumerate() {
            if row.len() != d {
                return Err(Error::FieldLength {
                    field: format!("values[{i}]"),
                    expected: d,
                    found: row.len(),
                });
            }
            for (j, v) in row.into_iter().enumerate() {
                if v.dim() != mdim {
                    return Err(Error::FieldLength {
                        field: format!("values[{i}][{j}]"),
                        expected: mdim,
                        found: v.dim(),
                    });
                }
                flat.push(v);
            }
        }
        Ok(BilinearMap {
            d,
            mdim,
            values: flat,
        })
    }

    /// Tabulates `f` on basis pairs of `alg`; the map into `A` itself.
    pub fn from_fn(alg: &Algebra, f: impl Fn(&Element, &Element) -> Element) -> Self {
        let d = alg.dim();
        let basis = alg.basis_elements();
        let values = basis
            .iter()
            .flat_map(|x| basis.iter().map(|y| f(x, y)).collect::<Vec<_>>())
            .collect();
        BilinearMap { d, mdim: d, values }
    }

    /// Builds a map into an `mdim`-dimensional target from its values on
    /// basis index pairs.
    pub fn from_index_fn(d: usize, mdim: usize, f: impl Fn(usize, usize) -> Element) -> Self {
        let values = (0..d * d).map(|k| f(k / d, k % d)).collect::<Vec<_>>();
        debug_assert!(values.iter().all(|v| v.dim() == mdim));
        BilinearMap { d, mdim, values }
    }

    /// `(x, y) ↦ [x, y]`
    pub fn commutator(alg: &Algebra) -> Self {
        Self::from_fn(alg, |x, y| alg.commutator(x, y))
    }

    /// `(x, y) ↦ xy`
    pub fn product(alg: &Algebra) -> Self {
        Self::from_fn(alg, |x, y| alg.mul(x, y))
    }

    /// `(x, y) ↦ [x, [y, a]]`
    pub fn extremal(alg: &Algebra, a: &Element) -> Self {
        Self::from_fn(alg, |x, y| alg.commutator(x, &alg.commutator(y, a)))
    }

    /// Inverse of [`BilinearMap::to_vector`].
    pub fn from_vector(d: usize, mdim: usize, v: &[Rational]) -> Result<Self> {
        if v.len() != d * d * mdim {
            return Err(Error::DimensionMismatch {
                expected: d * d * mdim,
                found: v.len(),
            });
        }
        let values = v
            .chunks(mdim.max(1))
            .take(d * d)
            .map(|c| Element(c.to_vec()))
            .collect();
        Ok(BilinearMap { d, mdim, values })
    }

    /// Row-major over `(i, j, component)`.
    pub fn to_vector(&self) -> Vec<Rational> {
        self.values
            .iter()
            .flat_map(|v| v.0.iter().cloned())
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn target_dim(&self) -> usize {
        self.mdim
    }

    pub fn value(&self, i: usize, j: usize) -> &Element {
        &self.values[i * self.d + j]
    }

    pub fn values(&self) -> Vec<Vec<Element>> {
        self.values
            .chunks(self.d.max(1))
            .map(<[Element]>::to_vec)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Element::is_zero)
    }

    /// `Σ_ij x_i y_j B(u_i, u_j)`.
    pub fn eval(&self, x: &Element, y: &Element) -> Element {
        assert!(
            x.dim() == self.d && y.dim() == self.d,
            "argument dimension mismatch"
        );
        let mut out = Element::zero(self.mdim);
        for (i, xi) in x.support() {
            for (j, yj) in y.support() {
                out.add_scaled(&(xi * yj), self.value(i, j));
            }
        }
        out
    }

    pub fn add(&self, other: &BilinearMap) -> BilinearMap {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &BilinearMap) -> BilinearMap {
        self.zip(other, |a, b| a - b)
    }

    fn zip(&self, other: &BilinearMap, f: impl Fn(&Element, &Element) -> Element) -> BilinearMap {
        assert!(
            self.d == other.d && self.mdim == other.mdim,
            "map shape mismatch"
        );
        BilinearMap {
            d: self.d,
            mdim: self.mdim,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

impl BilinearSource for BilinearMap {
    type Value = Element;
    fn at(&self, x: &Element, y: &Element) -> Element {
        self.eval(x, y)
    }
}

pub fn eval_bilinear(b: &BilinearMap, x: &Element, y: &Element) -> Result<Element> {
    for v in [x, y] {
        if v.dim() != b.d {
            return Err(Error::DimensionMismatch {
                expected: b.d,
                found: v.dim(),
            });
        }
    }
    Ok(b.eval(x, y))
}

/// A linear map `A → M` by its images of the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    mdim: usize,
    values: Vec<Element>,
}

impl LinearMap {
    pub fn new(values: Vec<Element>, mdim: usize) -> Result<Self> {
        if let Some(v) = values.iter().find(|v| v.dim() != mdim) {
            return Err(Error::DimensionMismatch {
                expected: mdim,
                found: v.dim(),
            });
        }
        Ok(LinearMap { mdim, values })
    }

    pub fn from_fn(alg: &Algebra, f: impl Fn(&Element) -> Element) -> Self {
        LinearMap {
            mdim: alg.dim(),
            values: alg.basis_elements().iter().map(f).collect(),
        }
    }

    pub fn from_vector(d: usize, mdim: usize, v: &[Rational]) -> Result<Self> {
        if v.len() != d * mdim {
            return Err(Error::DimensionMismatch {
                expected: d * mdim,
                found: v.len(),
            });
        }
        let values = v
            .chunks(mdim.max(1))
            .take(d)
            .map(|c| Element(c.to_vec()))
            .collect();
        Ok(LinearMap { mdim, values })
    }

    pub fn to_vector(&self) -> Vec<Rational> {
        self.values
            .iter()
            .flat_map(|v| v.0.iter().cloned())
            .collect()
    }

    pub fn values(&self) -> &[Element] {
        &self.values
    }

    pub fn eval(&self, x: &Element) -> Element {
        let mut out = Element::zero(self.mdim);
        for (i, xi) in x.support() {
            out.add_scaled(xi, &self.values[i]);
        }
        out
    }
}

impl LinearSource for LinearMap {
    type Value = Element;
    fn at(&self, x: &Element) -> Element {
        self.eval(x)
    }
}

/// The map kinds with a defining identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapKind {
    /// A derivation in each argument.
    Biderivation,
    /// An antiderivation, `D(ab) = D(b)a + bD(a)`, in each argument.
    Antibiderivation,
    /// A Jordan derivation in each argument (polarized form).
    JordanBiderivation,
    /// Compatible with the polynomial in each argument.
    FBiderivation(MultilinearPolynomial),
    /// Linear map compatible with the polynomial.
    FDerivation(MultilinearPolynomial),
}

impl MapKind {
    pub fn label(&self) -> &'static str {
        match self {
            MapKind::Biderivation => "bider",
            MapKind::Antibiderivation => "antibider",
            MapKind::JordanBiderivation => "jordan-bider",
            MapKind::FBiderivation(_) => "f-bider",
            MapKind::FDerivation(_) => "f-der",
        }
    }

    pub fn is_linear(&self) -> bool {
        matches!(self, MapKind::FDerivation(_))
    }
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// First failing instance of a defining identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub identity: &'static str,
    /// Basis indices, 0-based.
    pub tuple: Vec<usize>,
    pub residual: Element,
}

impl Violation {
    pub fn describe(&self, alg: &Algebra) -> String {
        let names: Vec<&str> = self
            .tuple
            .iter()
            .map(|&i| alg.basis_names()[i].as_str())
            .collect();
        format!(
            "{} fails at ({}): residual {}",
            self.identity,
            names.join(", "),
            self.residual
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckVerdict {
    Holds,
    Violated(Violation),
}

impl CheckVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, CheckVerdict::Holds)
    }
}

fn check_shapes(alg: &Algebra, module: &Bimodule, d: usize, mdim: usize) -> Result<()> {
    if d != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: d,
        });
    }
    if mdim != module.dim() {
        return Err(Error::DimensionMismatch {
            expected: module.dim(),
            found: mdim,
        });
    }
    Ok(())
}

/// Checks the defining identities of `kind` on every basis tuple.
pub fn check_bilinear(
    alg: &Algebra,
    module: &Bimodule,
    b: &BilinearMap,
    kind: &MapKind,
) -> Result<CheckVerdict> {
    check_shapes(alg, module, b.d, b.mdim)?;
    if kind.is_linear() {
        return Err(Error::Precondition(format!("{kind} is a linear kind")));
    }
    for t in tuples(alg.dim(), tuple_len(kind)) {
        for (identity, residual) in bilinear_residuals(alg, module, b, kind, &t) {
            if !residual.is_zero() {
                return Ok(CheckVerdict::Violated(Violation {
                    identity,
                    tuple: t,
                    residual,
                }));
            }
        }
    }
    Ok(CheckVerdict::Holds)
}

/// Checks `D(f(x1..xn)) = Σ f(.., D(xi), ..)` on every basis tuple.
pub fn check_linear(
    alg: &Algebra,
    module: &Bimodule,
    d: &LinearMap,
    f: &MultilinearPolynomial,
) -> Result<CheckVerdict> {
    check_shapes(alg, module, d.values.len(), d.mdim)?;
    for t in tuples(alg.dim(), f.arity()) {
        let residual = linear_residual(alg, module, d, f, &t);
        if !residual.is_zero() {
            return Ok(CheckVerdict::Violated(Violation {
                identity: "D(f(x1..xn)) = Σ f(..,D(xi),..)",
                tuple: t,
                residual,
            }));
        }
    }
    Ok(CheckVerdict::Holds)
}

/// Size limits for constraint systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveLimits {
    pub max_rows: usize,
    pub max_arity: usize,
}

impl Default for SolveLimits {
    fn default() -> Self {
        SolveLimits {
            max_rows: DEFAULT_MAX_ROWS,
            max_arity: DEFAULT_MAX_ARITY,
        }
    }
}

impl SolveLimits {
    /// Defaults, with `BIDERLAB_MAX_ROWS` overriding the row cap when set to
    /// a valid count.
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        if let Some(n) = std::env::var("BIDERLAB_MAX_ROWS")
            .ok()
            .and_then(|s| s.trim().parse().ok())
        {
            limits.max_rows = n;
        }
        limits
    }
}

/// All maps of one kind, as a canonical subspace of the vectorized maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapSpace {
    pub kind: MapKind,
    pub d: usize,
    pub mdim: usize,
    pub space: Subspace,
}

impl MapSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Canonical basis as bilinear maps; empty for linear kinds.
    pub fn bilinear_basis(&self) -> Vec<BilinearMap> {
        if self.kind.is_linear() {
            return Vec::new();
        }
        self.space
            .basis()
            .iter()
            .map(|v| BilinearMap::from_vector(self.d, self.mdim, v).expect("vector length matches"))
            .collect()
    }

    /// Canonical basis as linear maps; empty for bilinear kinds.
    pub fn linear_basis(&self) -> Vec<LinearMap> {
        if !self.kind.is_linear() {
            return Vec::new();
        }
        self.space
            .basis()
            .iter()
            .map(|v| LinearMap::from_vector(self.d, self.mdim, v).expect("vector length matches"))
            .collect()
    }

    pub fn contains_map(&self, b: &BilinearMap) -> Result<bool> {
        self.space.contains_vector(&b.to_vector())
    }
}

/// Number of scalar rows and unknowns of the constraint system for `kind`.
pub fn system_size(alg: &Algebra, module: &Bimodule, kind: &MapKind) -> (usize, usize) {
    let d = alg.dim();
    let m = module.dim();
    let tuples = d.saturating_pow(tuple_len(kind) as u32);
    if kind.is_linear() {
        (tuples.saturating_mul(m), d * m)
    } else {
        (tuples.saturating_mul(2).saturating_mul(m), d * d * m)
    }
}

/// Solves for every map of `kind`: one scalar row per (basis tuple,
/// identity, target component), in lexicographic tuple order, reduced
/// exactly; the kernel is the map space.
pub fn solve_space(
    alg: &Algebra,
    module: &Bimodule,
    kind: &MapKind,
    limits: &SolveLimits,
) -> Result<MapSpace> {
    if let MapKind::FBiderivation(f) | MapKind::FDerivation(f) = kind {
        if f.arity() > limits.max_arity {
            return Err(Error::ArityCap {
                arity: f.arity(),
                cap: limits.max_arity,
            });
        }
    }
    let (rows, cols) = system_size(alg, module, kind);
    if rows > limits.max_rows {
        return Err(Error::SystemTooLarge {
            rows,
            cols,
            limit: limits.max_rows,
        });
    }
    let d = alg.dim();
    let mdim = module.dim();
    let all: Vec<Vec<usize>> = tuples(d, tuple_len(kind)).collect();
    let mut ech = RowEchelon::new(cols);
    // rows are generated in parallel per chunk, then inserted in order
    for chunk in all.chunks(256) {
        let batch: Vec<Vec<crate::linalg::SparseRow>> = chunk
            .par_iter()
            .map(|t| match kind {
                MapKind::FDerivation(f) => {
                    linear_residual(alg, module, &SymbolicLinear { mdim }, f, t).0
                }
                _ => bilinear_residuals(alg, module, &SymbolicBilinear { d, mdim }, kind, t)
                    .into_iter()
                    .flat_map(|(_, e)| e.0)
                    .collect(),
            })
            .collect();
        for row in batch.into_iter().flatten() {
            if !row.is_zero() {
                ech.insert(row);
            }
        }
    }
    Ok(MapSpace {
        kind: kind.clone(),
        d,
        mdim,
        space: kernel_of(ech),
    })
}
