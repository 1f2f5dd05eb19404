use super::tensor::{Balanced2, Balanced3, Bimodule};
use crate::error::{Error, Result};
use crate::exactlin::{map_left, map_right, Accumulator, Mat, Vector};
use crate::report::{tuples, Report};
use crate::structures::AlgebraSC;

/// An `A`-coring: a bimodule with comultiplication into `C ⊗_A C` (stored by
/// representatives in `C ⊗ C`) and counit `C -> A`.
#[derive(Clone, Debug)]
pub struct ACoring {
    pub base: AlgebraSC,
    pub bimodule: Bimodule,
    pub comult: Mat,
    pub counit: Mat,
    pub names: Vec<String>,
}

impl ACoring {
    pub fn dim(&self) -> usize {
        self.bimodule.dim
    }

    /// `A` as a coring over itself.
    pub fn regular(base: &AlgebraSC) -> Self {
        let m = base.dim();
        let bimodule = Bimodule {
            dim: m,
            left: (0..m).map(|a| base.left_mult(&base.e(a))).collect(),
            right: (0..m).map(|a| base.right_mult(&base.e(a))).collect(),
        };
        let comult = Mat::from_fn(m * m, m, |x| base.e(x).tensor(base.unit()));
        ACoring { base: base.clone(), bimodule, comult, counit: Mat::identity(m), names: base.names().to_vec() }
    }

    fn labels(&self, t: &[usize], kinds: &[bool]) -> Vec<String> {
        t.iter()
            .zip(kinds)
            .map(|(&i, &carrier)| if carrier { self.names[i].clone() } else { self.base.name(i) })
            .collect()
    }
}

/// Runs the coring axioms against precomputed balanced tensors.
pub(crate) fn coring_axioms(c: &ACoring, b2: &Balanced2, b3: &Balanced3) -> Report {
    let (n, m) = (c.dim(), c.base.dim());
    let bm = &c.bimodule;
    let base = &c.base;
    let e = |i: usize| Vector::unit(n, i);
    let delta = |x: &Vector| c.comult.apply(x);
    let mut r = Report::new("coring");
    r.check(
        "left module",
        tuples(&[m, m, n]),
        |t| c.labels(t, &[false, false, true]),
        |t| {
            let (a, b, x) = (base.e(t[0]), base.e(t[1]), e(t[2]));
            (bm.act_left(&a, &bm.act_left(&b, &x)), bm.act_left(&base.mul(&a, &b), &x))
        },
    );
    r.check(
        "right module",
        tuples(&[n, m, m]),
        |t| c.labels(t, &[true, false, false]),
        |t| {
            let (x, a, b) = (e(t[0]), base.e(t[1]), base.e(t[2]));
            (bm.act_right(&bm.act_right(&x, &a), &b), bm.act_right(&x, &base.mul(&a, &b)))
        },
    );
    r.check(
        "unit acts trivially",
        tuples(&[n]),
        |t| c.labels(t, &[true]),
        |t| {
            let x = e(t[0]);
            (bm.act_left(base.unit(), &bm.act_right(&x, base.unit())), x)
        },
    );
    r.check(
        "actions commute",
        tuples(&[m, n, m]),
        |t| c.labels(t, &[false, true, false]),
        |t| {
            let (a, x, b) = (base.e(t[0]), e(t[1]), base.e(t[2]));
            (bm.act_right(&bm.act_left(&a, &x), &b), bm.act_left(&a, &bm.act_right(&x, &b)))
        },
    );
    r.check(
        "Δ left A-linear",
        tuples(&[m, n]),
        |t| c.labels(t, &[false, true]),
        |t| {
            let x = e(t[1]);
            (b2.project(&delta(&bm.left[t[0]].apply(&x))), b2.project(&map_left(&bm.left[t[0]], &delta(&x), n)))
        },
    );
    r.check(
        "Δ right A-linear",
        tuples(&[n, m]),
        |t| c.labels(t, &[true, false]),
        |t| {
            let x = e(t[0]);
            (b2.project(&delta(&bm.right[t[1]].apply(&x))), b2.project(&map_right(&bm.right[t[1]], &delta(&x))))
        },
    );
    r.check(
        "ε left A-linear",
        tuples(&[m, n]),
        |t| c.labels(t, &[false, true]),
        |t| {
            let x = e(t[1]);
            (c.counit.apply(&bm.left[t[0]].apply(&x)), base.mul(&base.e(t[0]), &c.counit.apply(&x)))
        },
    );
    r.check(
        "ε right A-linear",
        tuples(&[n, m]),
        |t| c.labels(t, &[true, false]),
        |t| {
            let x = e(t[0]);
            (c.counit.apply(&bm.right[t[1]].apply(&x)), base.mul(&c.counit.apply(&x), &base.e(t[1])))
        },
    );
    r.check(
        "coassociativity",
        tuples(&[n]),
        |t| c.labels(t, &[true]),
        |t| {
            let d = delta(&e(t[0]));
            (b3.project(&map_left(&c.comult, &d, n)), b3.project(&map_right(&c.comult, &d)))
        },
    );
    r.check(
        "left counit",
        tuples(&[n]),
        |t| c.labels(t, &[true]),
        |t| {
            let mut acc = Accumulator::new(n);
            for (k, coef) in delta(&e(t[0])).iter() {
                acc.add_scaled(coef, &bm.act_left(c.counit.col(k / n), &e(k % n)));
            }
            (acc.finish(), e(t[0]))
        },
    );
    r.check(
        "right counit",
        tuples(&[n]),
        |t| c.labels(t, &[true]),
        |t| {
            let mut acc = Accumulator::new(n);
            for (k, coef) in delta(&e(t[0])).iter() {
                acc.add_scaled(coef, &bm.act_right(&e(k / n), c.counit.col(k % n)));
            }
            (acc.finish(), e(t[0]))
        },
    );
    r.dim("carrier", n);
    r.dim("C⊗_A C", b2.dim());
    r
}

/// Bimodule laws, `A`-bilinearity of `Δ` and `ε`, coassociativity and both counit laws.
pub fn check_coring(c: &ACoring) -> Result<Report> {
    let (n, m) = (c.dim(), c.base.dim());
    let bm = &c.bimodule;
    let shapes_ok = bm.left.len() == m
        && bm.right.len() == m
        && bm.left.iter().chain(&bm.right).all(|a| a.nrows() == n && a.ncols() == n)
        && c.comult.nrows() == n * n
        && c.comult.ncols() == n
        && c.counit.nrows() == m
        && c.counit.ncols() == n
        && c.names.len() == n;
    if !shapes_ok {
        return Err(Error::DimensionMismatch("coring structure maps have inconsistent shapes".into()));
    }
    let b2 = Balanced2::new(bm);
    let b3 = Balanced3::over(b2.clone(), bm);
    Ok(coring_axioms(c, &b2, &b3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{function_algebra, matrix_algebra};

    #[test]
    fn regular_corings_pass() {
        for a in [function_algebra(3), matrix_algebra(2)] {
            let r = check_coring(&ACoring::regular(&a)).unwrap();
            assert!(r.passed(), "{r}");
            assert_eq!(r.dims["C⊗_A C"], a.dim());
        }
    }

    #[test]
    fn zero_counit_breaks_only_counit_laws() {
        let mut c = ACoring::regular(&function_algebra(2));
        c.counit = Mat::zeros(2, 2);
        let r = check_coring(&c).unwrap();
        assert_eq!(r.first_failure().unwrap().name, "left counit");
        assert_eq!(r.failed_axioms(), vec!["left counit", "right counit"]);
    }

    #[test]
    fn shape_errors_are_reported() {
        let mut c = ACoring::regular(&function_algebra(2));
        c.counit = Mat::zeros(1, 2);
        assert!(matches!(check_coring(&c), Err(Error::DimensionMismatch(_))));
    }
}
