//! Named algebra constructions.

use std::str::FromStr;

use super::{Algebra, Bimodule, Element};
use crate::error::{Error, Result};
use crate::linalg::one;

/// Data for the triangular algebra `Tri(A; M; B)`: `M` is an
/// `(A, B)`-bimodule whose left actions are indexed by the basis of `A` and
/// right actions by the basis of `B`.
#[derive(Debug, Clone)]
pub struct TriangularData {
    pub a: Algebra,
    pub b: Algebra,
    pub m: Bimodule,
}

#[derive(Debug, Clone)]
pub enum Preset {
    /// Full `n × n` matrices, basis `E_ij` in row-major order.
    Matrix(usize),
    /// Upper triangular `n × n` matrices, basis `E_ij` with `i ≤ j`, row-major.
    UpperTriangular(usize),
    /// Block upper triangular matrices with the given diagonal block sizes.
    BlockUpperTriangular(Vec<usize>),
    /// The 2×2 matrix picture over `A`, `M`, `B`; basis is (A, M, B).
    Triangular(Box<TriangularData>),
    /// The rationals themselves.
    OneDim,
}

impl FromStr for Preset {
    type Err = Error;

    /// Parses `matrix:N`, `upper:N`, `block:S1,S2,...` or `one`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPreset(s.to_string());
        let (kind, arg) = s.split_once(':').unwrap_or((s, ""));
        let size = |a: &str| a.trim().parse::<usize>().map_err(|_| bad());
        match kind.trim() {
            "one" | "one_dim" if arg.is_empty() => Ok(Preset::OneDim),
            "matrix" => Ok(Preset::Matrix(size(arg)?)),
            "upper" | "upper_triangular" => Ok(Preset::UpperTriangular(size(arg)?)),
            "block" | "block_upper_triangular" => Ok(Preset::BlockUpperTriangular(
                arg.split(',').map(size).collect::<Result<_>>()?,
            )),
            _ => Err(bad()),
        }
    }
}

pub fn build_algebra(preset: &Preset) -> Result<Algebra> {
    match preset {
        Preset::Matrix(n) => {
            check_size(*n)?;
            let units = (0..*n).flat_map(|i| (0..*n).map(move |j| (i, j))).collect();
            matrix_unit_algebra(format!("M{n}"), *n, units)
        }
        Preset::UpperTriangular(n) => {
            check_size(*n)?;
            let units = (0..*n).flat_map(|i| (i..*n).map(move |j| (i, j))).collect();
            matrix_unit_algebra(format!("T{n}"), *n, units)
        }
        Preset::BlockUpperTriangular(sizes) => {
            if sizes.is_empty() || sizes.contains(&0) {
                return Err(Error::InvalidPreset(format!("block sizes {sizes:?}")));
            }
            let block_of: Vec<usize> = sizes
                .iter()
                .enumerate()
                .flat_map(|(b, &s)| std::iter::repeat(b).take(s))
                .collect();
            let n = block_of.len();
            let units = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|&(i, j)| block_of[i] <= block_of[j])
                .collect();
            let label: Vec<String> = sizes.iter().map(|s| s.to_string()).collect();
            matrix_unit_algebra(format!("BT({})", label.join(",")), n, units)
        }
        Preset::Triangular(data) => triangular(data),
        Preset::OneDim => Algebra::new(
            "Q",
            vec!["u".into()],
            vec![vec![Element(vec![one()])]],
            Element(vec![one()]),
        ),
    }
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidPreset(
            "matrix size must be at least 1".into(),
        ));
    }
    Ok(())
}

/// Span of the matrix units `E_ij` for the listed positions, which must be
/// closed under multiplication and contain the diagonal.
fn matrix_unit_algebra(name: String, n: usize, units: Vec<(usize, usize)>) -> Result<Algebra> {
    let d = units.len();
    let wide = n > 9;
    let names = units
        .iter()
        .map(|&(i, j)| {
            if wide {
                format!("E{},{}", i + 1, j + 1)
            } else {
                format!("E{}{}", i + 1, j + 1)
            }
        })
        .collect();
    let index = |p: (usize, usize)| units.iter().position(|&u| u == p);
    let mut table = vec![vec![Element::zero(d); d]; d];
    for (a, &(i, j)) in units.iter().enumerate() {
        for (b, &(k, l)) in units.iter().enumerate() {
            if j == k {
                let c = index((i, l)).ok_or_else(|| {
                    Error::InvalidPreset(format!("{name}: positions not closed under products"))
                })?;
                table[a][b].0[c] = one();
            }
        }
    }
    let mut unity = Element::zero(d);
    for i in 0..n {
        let c = index((i, i))
            .ok_or_else(|| Error::InvalidPreset(format!("{name}: diagonal missing")))?;
        unity.0[c] = one();
    }
    Algebra::new(name, names, table, unity)
}

fn triangular(data: &TriangularData) -> Result<Algebra> {
    let TriangularData { a, b, m } = data;
    m.validate(a, b)?;
    let (da, dm, db) = (a.dim(), m.dim(), b.dim());
    let d = da + dm + db;
    let mut names: Vec<String> = a.basis_names().iter().map(|s| format!("A.{s}")).collect();
    names.extend((0..dm).map(|k| format!("M.{}", k + 1)));
    names.extend(b.basis_names().iter().map(|s| format!("B.{s}")));

    let embed = |offset: usize, v: &Element| {
        let mut out = Element::zero(d);
        out.0[offset..offset + v.dim()].clone_from_slice(v.coords());
        out
    };
    let mut table = vec![vec![Element::zero(d); d]; d];
    for i in 0..da {
        for j in 0..da {
            table[i][j] = embed(0, a.basis_product(i, j));
        }
        for k in 0..dm {
            let img = m.act_left(&a.basis(i), &Element::basis(dm, k));
            table[i][da + k] = embed(da, &img);
        }
    }
    for k in 0..dm {
        for j in 0..db {
            let img = m.act_right(&Element::basis(dm, k), &b.basis(j));
            table[da + k][da + dm + j] = embed(da, &img);
        }
    }
    for i in 0..db {
        for j in 0..db {
            table[da + dm + i][da + dm + j] = embed(da + dm, b.basis_product(i, j));
        }
    }
    let unity = &embed(0, a.unity()) + &embed(da + dm, b.unity());
    Algebra::new(
        format!("Tri({};{}d;{})", a.name(), dm, b.name()),
        names,
        table,
        unity,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::MatrixQ;

    #[test]
    fn dimensions() {
        let dim = |p: Preset| build_algebra(&p).unwrap().dim();
        assert_eq!(dim(Preset::Matrix(3)), 9);
        assert_eq!(dim(Preset::UpperTriangular(4)), 10);
        assert_eq!(dim(Preset::BlockUpperTriangular(vec![2, 1])), 7);
        assert_eq!(dim(Preset::OneDim), 1);
    }

    #[test]
    fn parse_presets() {
        assert!(matches!("matrix:2".parse(), Ok(Preset::Matrix(2))));
        assert!(matches!("upper:3".parse(), Ok(Preset::UpperTriangular(3))));
        match "block:2,1".parse::<Preset>().unwrap() {
            Preset::BlockUpperTriangular(s) => assert_eq!(s, vec![2, 1]),
            p => panic!("unexpected {p:?}"),
        }
        assert!("matrix:x".parse::<Preset>().is_err());
        assert!("cube:2".parse::<Preset>().is_err());
        assert!(build_algebra(&Preset::Matrix(0)).is_err());
    }

    #[test]
    fn triangular_over_rationals_is_t2() {
        let q = build_algebra(&Preset::OneDim).unwrap();
        let m = Bimodule::new(1, vec![MatrixQ::identity(1)], vec![MatrixQ::identity(1)]).unwrap();
        let tri = build_algebra(&Preset::Triangular(Box::new(TriangularData {
            a: q.clone(),
            b: q,
            m,
        })))
        .unwrap();
        let t2 = build_algebra(&Preset::UpperTriangular(2)).unwrap();
        assert_eq!(tri.table(), t2.table());
        assert_eq!(tri.unity(), t2.unity());
        assert_eq!(tri.basis_names(), ["A.u", "M.1", "B.u"]);
    }

    #[test]
    fn triangular_rejects_bad_bimodule() {
        let q = build_algebra(&Preset::OneDim).unwrap();
        let m = Bimodule::new(1, vec![MatrixQ::zeros(1, 1)], vec![MatrixQ::identity(1)]).unwrap();
        let err = build_algebra(&Preset::Triangular(Box::new(TriangularData {
            a: q.clone(),
            b: q,
            m,
        })));
        assert!(matches!(err, Err(Error::InvalidBimodule(_))));
    }
}
