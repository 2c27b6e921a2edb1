//! Identity suites every Jordan biderivation (resp. f-biderivation) must
//! satisfy. Multilinear identities are checked on all basis tuples; the
//! others on seeded random elements.

use super::BilinearMap;
use crate::algebra::{Algebra, Element};
use crate::rng::XorShift64Star;

/// Outcome of one identity suite on one map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failure: Option<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn run<I, F>(name: &'static str, cases: I, mut check: F) -> SuiteOutcome
where
    I: IntoIterator,
    F: FnMut(&I::Item) -> Option<String>,
{
    let mut n = 0;
    for case in cases {
        n += 1;
        if let Some(msg) = check(&case) {
            return SuiteOutcome {
                name,
                cases: n,
                failure: Some(msg),
            };
        }
    }
    SuiteOutcome {
        name,
        cases: n,
        failure: None,
    }
}

fn random_pairs(alg: &Algebra, seed: u64, samples: usize) -> Vec<(Element, Element)> {
    let mut rng = XorShift64Star::new(seed);
    (0..samples)
        .map(|_| (rng.element(alg.dim()), rng.element(alg.dim())))
        .collect()
}

/// `[[x, y], J(x, y)] = 0` on `samples` seeded random pairs.
pub fn commutes_with_bracket(
    alg: &Algebra,
    j: &BilinearMap,
    seed: u64,
    samples: usize,
) -> SuiteOutcome {
    run(
        "[[x,y],J(x,y)] = 0",
        random_pairs(alg, seed, samples),
        |(x, y)| {
            let v = alg.commutator(&alg.commutator(x, y), &j.eval(x, y));
            (!v.is_zero()).then(|| format!("x = {x}, y = {y}: residual {v}"))
        },
    )
}

/// `J(xyz + zyx, t) = J(x,t)yz + xJ(y,t)z + xyJ(z,t) + J(z,t)yx + zJ(y,t)x + zyJ(x,t)`
/// on all basis quadruples.
pub fn jordan_triple_rule(alg: &Algebra, j: &BilinearMap) -> SuiteOutcome {
    let d = alg.dim();
    let quads = (0..d.pow(4)).map(|k| [k / (d * d * d), (k / (d * d)) % d, (k / d) % d, k % d]);
    run("J(xyz+zyx,t) expansion", quads, |q| {
        let [x, y, z, t] = q.map(|i| alg.basis(i));
        let lhs = j.eval(&(&alg.mul3(&x, &y, &z) + &alg.mul3(&z, &y, &x)), &t);
        let (jx, jy, jz) = (j.eval(&x, &t), j.eval(&y, &t), j.eval(&z, &t));
        let terms = [
            alg.mul3(&jx, &y, &z),
            alg.mul3(&x, &jy, &z),
            alg.mul3(&x, &y, &jz),
            alg.mul3(&jz, &y, &x),
            alg.mul3(&z, &jy, &x),
            alg.mul3(&z, &y, &jx),
        ];
        let rhs = terms.iter().fold(alg.zero(), |acc, t| &acc + t);
        let r = &lhs - &rhs;
        let names = alg.basis_names();
        (!r.is_zero()).then(|| {
            format!(
                "(x,y,z,t) = ({}, {}, {}, {}): residual {r}",
                names[q[0]], names[q[1]], names[q[2]], names[q[3]]
            )
        })
    })
}

/// `J(xyx, z) = J(x,z)yx + xJ(y,z)x + xyJ(x,z)` on seeded random triples.
pub fn jordan_sandwich_rule(
    alg: &Algebra,
    j: &BilinearMap,
    seed: u64,
    samples: usize,
) -> SuiteOutcome {
    let mut rng = XorShift64Star::new(seed);
    let d = alg.dim();
    let triples: Vec<[Element; 3]> = (0..samples)
        .map(|_| [rng.element(d), rng.element(d), rng.element(d)])
        .collect();
    run("J(xyx,z) expansion", triples, |[x, y, z]| {
        let lhs = j.eval(&alg.mul3(x, y, x), z);
        let jx = j.eval(x, z);
        let jy = j.eval(y, z);
        let rhs = &(&alg.mul3(&jx, y, x) + &alg.mul3(x, &jy, x)) + &alg.mul3(x, y, &jx);
        let r = &lhs - &rhs;
        (!r.is_zero()).then(|| format!("x = {x}, y = {y}, z = {z}: residual {r}"))
    })
}

/// `F(1, u_j) = 0 = F(u_j, 1)` for every basis element.
pub fn unity_annihilates(alg: &Algebra, f: &BilinearMap) -> SuiteOutcome {
    run("F(1,u) = F(u,1) = 0", alg.basis_elements(), |u| {
        let left = f.eval(alg.unity(), u);
        let right = f.eval(u, alg.unity());
        (!left.is_zero() || !right.is_zero())
            .then(|| format!("u = {u}: F(1,u) = {left}, F(u,1) = {right}"))
    })
}
