//! Defining identities of each map kind, written once over [`MapValue`] so
//! the same definition drives both exact checking and system assembly.

use super::value::{BilinearSource, LinearSource, MapValue};
use super::MapKind;
use crate::algebra::{Algebra, Bimodule, Element};
use crate::poly::MultilinearPolynomial;

/// Basis-index tuples of the given length in lexicographic order.
pub(crate) fn tuples(d: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = d.checked_pow(len as u32).unwrap_or(usize::MAX);
    (0..if d == 0 { 0 } else { total }).map(move |mut k| {
        let mut t = vec![0; len];
        for slot in t.iter_mut().rev() {
            *slot = k % d;
            k /= d;
        }
        t
    })
}

/// Length of the basis tuples the identities of `kind` range over.
pub(crate) fn tuple_len(kind: &MapKind) -> usize {
    match kind {
        MapKind::Biderivation | MapKind::Antibiderivation | MapKind::JordanBiderivation => 3,
        MapKind::FBiderivation(f) => f.arity() + 1,
        MapKind::FDerivation(f) => f.arity(),
    }
}

/// `f(args)` with `args[slot]` replaced by the bimodule value `v`: each
/// monomial contributes `α_π · P · v · S` where `P` and `S` are the algebra
/// products on either side of the slot.
pub(crate) fn f_with_value<V: MapValue>(
    alg: &Algebra,
    module: &Bimodule,
    f: &MultilinearPolynomial,
    args: &[Element],
    slot: usize,
    v: &V,
) -> V {
    let product = |idx: &[usize]| -> Option<Element> {
        let mut it = idx.iter();
        let first = args[*it.next()?].clone();
        Some(it.fold(first, |acc, &k| alg.mul(&acc, &args[k])))
    };
    let mut out = v.zero_like();
    for (perm, c) in f.terms() {
        let pos = perm
            .iter()
            .position(|&k| k == slot)
            .expect("valid permutation");
        let mut term = v.clone();
        if let Some(p) = product(&perm[..pos]) {
            term = term.act_left(module, &p);
        }
        if let Some(s) = product(&perm[pos + 1..]) {
            term = term.act_right(module, &s);
        }
        out = out.add(&term.scale(c));
    }
    out
}

/// Residuals of the defining identities of a bilinear kind at one basis
/// tuple; the map satisfies the kind iff all residuals vanish on all tuples.
pub(crate) fn bilinear_residuals<S: BilinearSource>(
    alg: &Algebra,
    module: &Bimodule,
    map: &S,
    kind: &MapKind,
    tuple: &[usize],
) -> Vec<(&'static str, S::Value)> {
    let u: Vec<Element> = tuple.iter().map(|&i| alg.basis(i)).collect();
    let bl = |x: &Element, y: &Element| map.at(x, y);
    let left = |v: &S::Value, x: &Element| v.act_left(module, x);
    let right = |v: &S::Value, x: &Element| v.act_right(module, x);
    match kind {
        MapKind::Biderivation => {
            let (x, y, z) = (&u[0], &u[1], &u[2]);
            let xy = alg.mul(x, y);
            vec![
                (
                    "B(xy,z) = B(x,z)y + xB(y,z)",
                    bl(&xy, z)
                        .sub(&right(&bl(x, z), y))
                        .sub(&left(&bl(y, z), x)),
                ),
                (
                    "B(z,xy) = B(z,x)y + xB(z,y)",
                    bl(z, &xy)
                        .sub(&right(&bl(z, x), y))
                        .sub(&left(&bl(z, y), x)),
                ),
            ]
        }
        MapKind::Antibiderivation => {
            let (x, y, z) = (&u[0], &u[1], &u[2]);
            let xy = alg.mul(x, y);
            vec![
                (
                    "B(xy,z) = B(y,z)x + yB(x,z)",
                    bl(&xy, z)
                        .sub(&right(&bl(y, z), x))
                        .sub(&left(&bl(x, z), y)),
                ),
                (
                    "B(z,xy) = B(z,y)x + yB(z,x)",
                    bl(z, &xy)
                        .sub(&right(&bl(z, y), x))
                        .sub(&left(&bl(z, x), y)),
                ),
            ]
        }
        MapKind::JordanBiderivation => {
            let (x, y, z) = (&u[0], &u[1], &u[2]);
            let xoy = alg.jordan(x, y);
            let circ = |v: &S::Value, w: &Element| right(v, w).add(&left(v, w));
            vec![
                (
                    "B(x∘y,z) = B(x,z)∘y + x∘B(y,z)",
                    bl(&xoy, z)
                        .sub(&circ(&bl(x, z), y))
                        .sub(&circ(&bl(y, z), x)),
                ),
                (
                    "B(z,x∘y) = B(z,x)∘y + x∘B(z,y)",
                    bl(z, &xoy)
                        .sub(&circ(&bl(z, x), y))
                        .sub(&circ(&bl(z, y), x)),
                ),
            ]
        }
        MapKind::FBiderivation(f) => {
            let (xs, z) = u.split_at(f.arity());
            let z = &z[0];
            let fx = f.evaluate(alg, xs).expect("tuple length matches arity");
            let mut first = bl(&fx, z);
            let mut second = bl(z, &fx);
            for (i, xi) in xs.iter().enumerate() {
                first = first.sub(&f_with_value(alg, module, f, xs, i, &bl(xi, z)));
                second = second.sub(&f_with_value(alg, module, f, xs, i, &bl(z, xi)));
            }
            vec![
                ("F(f(x1..xn),z) = Σ f(..,F(xi,z),..)", first),
                ("F(z,f(x1..xn)) = Σ f(..,F(z,xi),..)", second),
            ]
        }
        MapKind::FDerivation(_) => panic!("f-derivation is a linear kind"),
    }
}

/// Residual of `D(f(x1..xn)) = Σ f(.., D(xi), ..)` at one basis tuple.
pub(crate) fn linear_residual<S: LinearSource>(
    alg: &Algebra,
    module: &Bimodule,
    map: &S,
    f: &MultilinearPolynomial,
    tuple: &[usize],
) -> S::Value {
    let xs: Vec<Element> = tuple.iter().map(|&i| alg.basis(i)).collect();
    let fx = f.evaluate(alg, &xs).expect("tuple length matches arity");
    let mut out = map.at(&fx);
    for (i, xi) in xs.iter().enumerate() {
        out = out.sub(&f_with_value(alg, module, f, &xs, i, &map.at(xi)));
    }
    out
}
