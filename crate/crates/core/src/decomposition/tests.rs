use proptest::prelude::*;

use super::*;
use crate::algebra::{build_algebra, Preset};
use crate::linalg::int;
use crate::maps::{solve_space, SolveLimits};

fn setup(p: Preset, e: &[i64]) -> (Algebra, PeirceContext) {
    let alg = build_algebra(&p).unwrap();
    let ctx = PeirceContext::new(&alg, &Element::from_ints(e)).unwrap();
    (alg, ctx)
}

fn jordan_basis(alg: &Algebra) -> Vec<BilinearMap> {
    solve_space(
        alg,
        &Bimodule::regular(alg),
        &MapKind::JordanBiderivation,
        &SolveLimits::default(),
    )
    .unwrap()
    .bilinear_basis()
}

fn block<'a>(a: &'a ResidualAnalysis, l: Corner, r: Corner) -> &'a BlockReport {
    a.blocks
        .iter()
        .find(|b| b.left == l && b.right == r)
        .unwrap()
}

#[test]
fn split_examples() {
    let (m2, ctx) = setup(Preset::Matrix(2), &[1, 0, 0, 0]);
    let c = BilinearMap::commutator(&m2);
    let s = split_extremal(&m2, &c, &ctx).unwrap();
    assert!(s.j1.is_zero());
    assert_eq!(s.j2, c);
    assert!(s.checks.iter().all(|c| c.holds));

    let (t2, ctx) = setup(Preset::UpperTriangular(2), &[1, 0, 0]);
    let j = BilinearMap::extremal(&t2, &t2.basis(1));
    let s = split_extremal(&t2, &j, &ctx).unwrap();
    assert_eq!(s.j_ee, t2.basis(1));
    assert_eq!(s.j1, j);
    assert!(s.j2.is_zero());

    let s = split_extremal(&t2, &BilinearMap::zero(3, 3), &ctx).unwrap();
    assert!(s.j1.is_zero() && s.j2.is_zero());
}

#[test]
fn split_rejects_non_jordan() {
    let (t2, ctx) = setup(Preset::UpperTriangular(2), &[1, 0, 0]);
    let p = BilinearMap::product(&t2);
    assert!(matches!(
        split_extremal(&t2, &p, &ctx),
        Err(Error::Precondition(_))
    ));
    let j = BilinearMap::extremal(&t2, &t2.basis(1));
    assert!(matches!(
        build_delta(&t2, &j, &ctx, DeltaMode::Literal),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn delta_and_d_examples() {
    let (t2, ctx) = setup(Preset::UpperTriangular(2), &[1, 0, 0]);
    let c = BilinearMap::commutator(&t2);
    for mode in DeltaMode::ALL {
        assert!(build_delta(&t2, &c, &ctx, mode).unwrap().is_zero());
    }
    assert_eq!(build_d(&t2, &c, &ctx).unwrap(), c);
    assert!(build_d(&t2, &BilinearMap::zero(3, 3), &ctx)
        .unwrap()
        .is_zero());

    let (m2, ctx) = setup(Preset::Matrix(2), &[1, 0, 0, 0]);
    let c = BilinearMap::commutator(&m2);
    assert!(build_delta(&m2, &c, &ctx, DeltaMode::Literal)
        .unwrap()
        .is_zero());
    let d = build_d(&m2, &c, &ctx).unwrap();
    assert!(d.eval(&m2.basis(1), &m2.basis(2)).is_zero());
    assert_eq!(
        c.eval(&m2.basis(1), &m2.basis(2)),
        Element::from_ints(&[1, 0, 0, -1])
    );
}

#[test]
fn matrix_commutator_residual_sits_on_mixed_blocks() {
    let (m2, ctx) = setup(Preset::Matrix(2), &[1, 0, 0, 0]);
    let c = BilinearMap::commutator(&m2);
    let delta = build_delta(&m2, &c, &ctx, DeltaMode::Literal).unwrap();
    let d = build_d(&m2, &c, &ctx).unwrap();
    let a = residual_analysis(&m2, &ctx, &c, &delta, &d);
    assert_eq!(
        a.nonzero_blocks(),
        vec![(Corner::A12, Corner::A21), (Corner::A21, Corner::A12)]
    );
    assert_eq!(
        a.residual.eval(&m2.basis(1), &m2.basis(2)),
        Element::from_ints(&[1, 0, 0, -1])
    );
    for (l, r) in [(Corner::A12, Corner::A21), (Corner::A21, Corner::A12)] {
        let b = block(&a, l, r);
        assert_eq!(b.off_diagonal_form, Some(false));
        assert_eq!(b.bracket_form, Some(true));
        assert!(b.witness.is_some());
    }
    assert!(block(&a, Corner::A11, Corner::A11)
        .off_diagonal_form
        .is_none());
}

#[test]
fn zero_map_decomposes_to_zero() {
    for (p, e) in [
        (Preset::UpperTriangular(2), vec![1, 0, 0]),
        (Preset::Matrix(2), vec![1, 0, 0, 0]),
    ] {
        let (alg, ctx) = setup(p, &e);
        let z = BilinearMap::zero(alg.dim(), alg.dim());
        for mode in DeltaMode::ALL {
            let r = decompose(&alg, &z, &ctx, mode).unwrap();
            assert!(r.j1.is_zero() && r.j2.is_zero() && r.delta.is_zero());
            assert!(r.d_part.is_zero() && r.residual.is_zero());
            assert!(r.verdicts.components_pass());
            assert_eq!(r.verdicts.extremal, ExtremalWitness::Zero);
        }
    }
}

#[test]
fn extremal_input_is_absorbed_by_j1() {
    let (t2, ctx) = setup(Preset::UpperTriangular(2), &[1, 0, 0]);
    let j = BilinearMap::extremal(&t2, &t2.basis(1));
    let r = decompose(&t2, &j, &ctx, DeltaMode::Literal).unwrap();
    assert_eq!(r.j1, j);
    assert!(r.j2.is_zero() && r.delta.is_zero() && r.d_part.is_zero() && r.residual.is_zero());
    assert_eq!(r.verdicts.extremal, ExtremalWitness::Extremal(t2.basis(1)));
}

#[test]
fn triangular_contexts_decompose_cleanly() {
    let cases = [
        (Preset::UpperTriangular(2), vec![1, 0, 0]),
        (Preset::UpperTriangular(3), vec![1, 0, 0, 0, 0, 0]),
        (
            Preset::BlockUpperTriangular(vec![2, 1]),
            vec![1, 0, 0, 0, 1, 0, 0],
        ),
    ];
    for (p, e) in cases {
        let (alg, ctx) = setup(p, &e);
        for j in jordan_basis(&alg) {
            for mode in DeltaMode::ALL {
                let r = decompose(&alg, &j, &ctx, mode).unwrap();
                assert!(r.delta.is_zero(), "{}", alg.name());
                assert!(r.residual.is_zero());
                assert_eq!(r.d_part, r.j2);
                assert!(r.verdicts.components_pass());
                assert_eq!(r.reconstruct(), j);
            }
        }
    }
}

#[test]
fn corner_identities_hold_on_jordan_bases() {
    let cases = [
        (Preset::Matrix(2), vec![1, 0, 0, 0]),
        (Preset::UpperTriangular(3), vec![1, 0, 0, 0, 0, 0]),
        (Preset::UpperTriangular(3), vec![1, 0, 0, 1, 0, 0]),
        (
            Preset::BlockUpperTriangular(vec![2, 1]),
            vec![1, 0, 0, 0, 1, 0, 0],
        ),
    ];
    for (p, e) in cases {
        let (alg, ctx) = setup(p, &e);
        for j in jordan_basis(&alg) {
            let s = split_extremal(&alg, &j, &ctx).unwrap();
            let rep = verify_peirce_identities(&alg, &s.j2, &ctx).unwrap();
            let failed: Vec<_> = rep
                .items
                .iter()
                .chain(&rep.auxiliaries)
                .filter(|c| !c.holds)
                .collect();
            assert!(failed.is_empty(), "{}: {failed:?}", alg.name());
            assert_eq!(rep.items.len(), 20);
        }
    }
}

#[test]
fn corner_identity_witness_is_reported() {
    // the product map is not Jordan, so bypass the precondition
    let (m2, ctx) = setup(Preset::Matrix(2), &[1, 0, 0, 0]);
    let p = BilinearMap::product(&m2);
    let rep = identities::peirce_identities_unchecked(&m2, &p, &ctx);
    assert!(!rep.all_hold());
    assert!(rep.items.iter().any(|c| !c.holds && c.witness.is_some()));
}

#[test]
fn corollary_examples() {
    let limits = SolveLimits::default();
    let (t2, ctx) = setup(Preset::UpperTriangular(2), &[1, 0, 0]);
    let v = corollary_check(&t2, &ctx, Corollary::TriangularJordan, &limits).unwrap();
    assert_eq!(v.outcome, Outcome::Pass);
    let v = corollary_check(&t2, &ctx, Corollary::IdealSplit, &limits).unwrap();
    assert_eq!(v.outcome, Outcome::NotApplicable);
    assert!(v
        .hypotheses
        .iter()
        .any(|h| h.hypothesis == Hypothesis::Ideal11 && !h.holds));

    let (m2, ctx) = setup(Preset::Matrix(2), &[1, 0, 0, 0]);
    let v = corollary_check(&m2, &ctx, Corollary::TriangularJordan, &limits).unwrap();
    assert_eq!(v.outcome, Outcome::NotApplicable);
}

#[test]
fn simple_corner_corollaries_apply() {
    // BT(2,1) with e = E11 + E22: eAe = M2 equals its commutator ideal
    let (alg, ctx) = setup(
        Preset::BlockUpperTriangular(vec![2, 1]),
        &[1, 0, 0, 0, 1, 0, 0],
    );
    let limits = SolveLimits::default();
    for c in Corollary::ALL {
        let v = corollary_check(&alg, &ctx, c, &limits).unwrap();
        assert_eq!(v.outcome, Outcome::Pass, "{c}: {}", v.detail);
    }
}

#[test]
fn decompose_all_keeps_order() {
    let (t3, ctx) = setup(Preset::UpperTriangular(3), &[1, 0, 0, 0, 0, 0]);
    let basis = jordan_basis(&t3);
    let all = decompose_all(&t3, &basis, &ctx, DeltaMode::Literal).unwrap();
    for (r, j) in all.iter().zip(&basis) {
        assert_eq!(&r.reconstruct(), j);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reconstruction_is_exact(coeffs in prop::collection::vec(-3i64..=3, 8), adjusted in any::<bool>()) {
        let (m2, ctx) = setup(Preset::Matrix(2), &[1, 0, 0, 0]);
        let basis = jordan_basis(&m2);
        let j = basis
            .iter()
            .zip(coeffs.iter().cycle())
            .fold(BilinearMap::zero(4, 4), |acc, (b, &c)| {
                let scaled = BilinearMap::from_index_fn(4, 4, |i, k| b.value(i, k).scale(&int(c)));
                acc.add(&scaled)
            });
        let mode = if adjusted { DeltaMode::Adjusted } else { DeltaMode::Literal };
        let r = decompose(&m2, &j, &ctx, mode).unwrap();
        prop_assert_eq!(r.reconstruct(), j.clone());
        prop_assert_eq!(r.j1.add(&r.j2), j);
        prop_assert!(r.j2.eval(ctx.e(), ctx.e()).is_zero());
        prop_assert!(r.verdicts.extremal.is_extremal_or_zero());
    }
}
