use super::coring::{coring_axioms, ACoring};
use super::tensor::{Balanced2, Balanced3, Bimodule};
use crate::error::{Error, Result};
use crate::exactlin::{map_left, map_right, Accumulator, Mat, Vector};
use crate::report::{tuples, Report};
use crate::structures::AlgebraSC;

/// A Hopf algebroid `ℋ` over a base `A`, all maps in the canonical coordinates of `ℋ`.
/// `delta_l` and `delta_r` are representatives in `ℋ ⊗ ℋ` of the balanced comultiplications.
#[derive(Clone, Debug)]
pub struct HopfAlgebroid {
    pub total: AlgebraSC,
    pub base: AlgebraSC,
    pub s_l: Mat,
    pub t_l: Mat,
    pub s_r: Mat,
    pub t_r: Mat,
    pub delta_l: Mat,
    pub eps_l: Mat,
    pub delta_r: Mat,
    pub eps_r: Mat,
    pub antipode: Mat,
}

/// Which bialgebroid structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl HopfAlgebroid {
    pub fn dim(&self) -> usize {
        self.total.dim()
    }

    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }

    fn e(&self, i: usize) -> Vector {
        self.total.e(i)
    }

    /// `a ▷ h ◁ b = s_l(a) t_l(b) h` on the left, `h s_r(b) t_r(a)` on the right.
    pub fn bimodule(&self, side: Side) -> Bimodule {
        let m = self.base_dim();
        let h = &self.total;
        match side {
            Side::Left => Bimodule {
                dim: self.dim(),
                left: (0..m).map(|a| h.left_mult(self.s_l.col(a))).collect(),
                right: (0..m).map(|a| h.left_mult(self.t_l.col(a))).collect(),
            },
            Side::Right => Bimodule {
                dim: self.dim(),
                left: (0..m).map(|a| h.right_mult(self.t_r.col(a))).collect(),
                right: (0..m).map(|a| h.right_mult(self.s_r.col(a))).collect(),
            },
        }
    }

    pub fn coring(&self, side: Side) -> ACoring {
        let (comult, counit) = match side {
            Side::Left => (self.delta_l.clone(), self.eps_l.clone()),
            Side::Right => (self.delta_r.clone(), self.eps_r.clone()),
        };
        ACoring {
            base: self.base.clone(),
            bimodule: self.bimodule(side),
            comult,
            counit,
            names: self.total.names().to_vec(),
        }
    }

    /// Multiplication on `ℋ ⊗ ℋ` representatives.
    pub fn tensor_mul(&self, x: &Vector, y: &Vector) -> Vector {
        self.total.tensor_mul(&self.total, x, y)
    }

    fn shapes_ok(&self) -> bool {
        let (n, m) = (self.dim(), self.base_dim());
        [&self.s_l, &self.t_l, &self.s_r, &self.t_r].iter().all(|f| f.nrows() == n && f.ncols() == m)
            && [&self.delta_l, &self.delta_r].iter().all(|f| f.nrows() == n * n && f.ncols() == n)
            && [&self.eps_l, &self.eps_r].iter().all(|f| f.nrows() == m && f.ncols() == n)
            && self.antipode.nrows() == n
            && self.antipode.ncols() == n
    }

    /// Whether the given structure maps agree matrix for matrix.
    pub fn same_maps(&self, other: &HopfAlgebroid) -> bool {
        self.total.same_structure(&other.total)
            && self.base.same_structure(&other.base)
            && self.s_l == other.s_l
            && self.t_l == other.t_l
            && self.s_r == other.s_r
            && self.t_r == other.t_r
            && self.delta_l == other.delta_l
            && self.delta_r == other.delta_r
            && self.eps_l == other.eps_l
            && self.eps_r == other.eps_r
            && self.antipode == other.antipode
    }
}

/// Like [`HopfAlgebroid::same_maps`], but comparing the comultiplications as balanced tensors
/// rather than as representatives.
pub fn same_up_to_balancing(h: &HopfAlgebroid, k: &HopfAlgebroid) -> bool {
    let same = h.total.same_structure(&k.total)
        && h.base.same_structure(&k.base)
        && [
            (&h.s_l, &k.s_l),
            (&h.t_l, &k.t_l),
            (&h.s_r, &k.s_r),
            (&h.t_r, &k.t_r),
            (&h.eps_l, &k.eps_l),
            (&h.eps_r, &k.eps_r),
            (&h.antipode, &k.antipode),
        ]
        .iter()
        .all(|(a, b)| a == b);
    if !same || h.delta_l.ncols() != k.delta_l.ncols() {
        return false;
    }
    [(Side::Left, &h.delta_l, &k.delta_l), (Side::Right, &h.delta_r, &k.delta_r)].into_iter().all(|(side, a, b)| {
        let b2 = Balanced2::new(&h.bimodule(side));
        (0..h.dim()).all(|x| b2.project(a.col(x)) == b2.project(b.col(x)))
    })
}

/// Tests whether a class of `ℋ ⊗_A ℋ` lies in the Takeuchi product of the given side.
pub fn takeuchi_membership(x: &Vector, h: &HopfAlgebroid, side: Side) -> bool {
    let b2 = Balanced2::new(&h.bimodule(side));
    in_takeuchi(&b2, &b2.lift(x), h, side).is_none()
}

/// First base basis index violating the Takeuchi condition for the representative `v`.
fn in_takeuchi(b2: &Balanced2, v: &Vector, h: &HopfAlgebroid, side: Side) -> Option<usize> {
    (0..h.base_dim()).find(|&a| {
        let (l, r) = takeuchi_sides(b2, v, h, side, a);
        l != r
    })
}

fn takeuchi_sides(b2: &Balanced2, v: &Vector, h: &HopfAlgebroid, side: Side, a: usize) -> (Vector, Vector) {
    let n = h.dim();
    let t = &h.total;
    match side {
        Side::Left => (
            b2.project(&map_left(&t.right_mult(h.t_l.col(a)), v, n)),
            b2.project(&map_right(&t.right_mult(h.s_l.col(a)), v)),
        ),
        Side::Right => (
            b2.project(&map_left(&t.left_mult(h.s_r.col(a)), v, n)),
            b2.project(&map_right(&t.left_mult(h.t_r.col(a)), v)),
        ),
    }
}

fn bialgebroid_report(h: &HopfAlgebroid, side: Side, b2: &Balanced2, b3: &Balanced3) -> Report {
    let (n, m) = (h.dim(), h.base_dim());
    let t = &h.total;
    let a = &h.base;
    let (s, tt, delta, eps, tag) = match side {
        Side::Left => (&h.s_l, &h.t_l, &h.delta_l, &h.eps_l, "l"),
        Side::Right => (&h.s_r, &h.t_r, &h.delta_r, &h.eps_r, "r"),
    };
    let base_labels = |x: &[usize]| a.labels(x);
    let tot_labels = |x: &[usize]| t.labels(x);
    let mut r = Report::new(format!("{} bialgebroid", if side == Side::Left { "left" } else { "right" }));
    r.check(&format!("s_{tag}(ab)=s_{tag}(a)s_{tag}(b)"), tuples(&[m, m]), base_labels, |x| {
        let (u, v) = (a.e(x[0]), a.e(x[1]));
        (s.apply(&a.mul(&u, &v)), t.mul(&s.apply(&u), &s.apply(&v)))
    });
    r.check(&format!("s_{tag}(1)=1"), vec![vec![]], |_| vec![], |_| (s.apply(a.unit()), t.unit().clone()));
    r.check(&format!("t_{tag}(ab)=t_{tag}(b)t_{tag}(a)"), tuples(&[m, m]), base_labels, |x| {
        let (u, v) = (a.e(x[0]), a.e(x[1]));
        (tt.apply(&a.mul(&u, &v)), t.mul(&tt.apply(&v), &tt.apply(&u)))
    });
    r.check(&format!("t_{tag}(1)=1"), vec![vec![]], |_| vec![], |_| (tt.apply(a.unit()), t.unit().clone()));
    r.check(&format!("s_{tag}(a)t_{tag}(b)=t_{tag}(b)s_{tag}(a)"), tuples(&[m, m]), base_labels, |x| {
        let (u, v) = (s.col(x[0]), tt.col(x[1]));
        (t.mul(u, v), t.mul(v, u))
    });
    let coring = h.coring(side);
    r.absorb(&format!("coring_{tag}"), coring_axioms(&coring, b2, b3));
    r.check(
        &format!("Δ_{tag} Takeuchi"),
        tuples(&[n, m]),
        |x| vec![t.name(x[0]), a.name(x[1])],
        |x| takeuchi_sides(b2, &delta.apply(&h.e(x[0])), h, side, x[1]),
    );
    r.check(&format!("Δ_{tag}(hk)=Δ_{tag}(h)Δ_{tag}(k)"), tuples(&[n, n]), tot_labels, |x| {
        let (u, v) = (h.e(x[0]), h.e(x[1]));
        (b2.project(&delta.apply(&t.mul(&u, &v))), b2.project(&h.tensor_mul(&delta.apply(&u), &delta.apply(&v))))
    });
    r.check(
        &format!("Δ_{tag}(1)=1⊗1"),
        vec![vec![]],
        |_| vec![],
        |_| (b2.project(&delta.apply(t.unit())), b2.project(&t.unit().tensor(t.unit()))),
    );
    let law = |x: &[usize], via: &Mat| {
        let (u, v) = (h.e(x[0]), h.e(x[1]));
        let twisted = match side {
            Side::Left => t.mul(&u, &via.apply(&eps.apply(&v))),
            Side::Right => t.mul(&via.apply(&eps.apply(&u)), &v),
        };
        (eps.apply(&t.mul(&u, &v)), eps.apply(&twisted))
    };
    let (n1, n2) = match side {
        Side::Left => ("ε_l(hk)=ε_l(h s_l(ε_l(k)))", "ε_l(hk)=ε_l(h t_l(ε_l(k)))"),
        Side::Right => ("ε_r(hk)=ε_r(s_r(ε_r(h))k)", "ε_r(hk)=ε_r(t_r(ε_r(h))k)"),
    };
    r.check(n1, tuples(&[n, n]), tot_labels, |x| law(x, s));
    r.check(n2, tuples(&[n, n]), tot_labels, |x| law(x, tt));
    r.dim("total", n);
    r.dim("base", m);
    r
}

fn check_shapes(h: &HopfAlgebroid) -> Result<()> {
    if h.shapes_ok() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch("algebroid structure maps have inconsistent shapes".into()))
    }
}

/// Axioms 1–5 of a left bialgebroid.
pub fn check_left_bialgebroid(h: &HopfAlgebroid) -> Result<Report> {
    check_shapes(h)?;
    let bm = h.bimodule(Side::Left);
    let b2 = Balanced2::new(&bm);
    let b3 = Balanced3::over(b2.clone(), &bm);
    Ok(bialgebroid_report(h, Side::Left, &b2, &b3))
}

/// Axioms 1–5 of a right bialgebroid.
pub fn check_right_bialgebroid(h: &HopfAlgebroid) -> Result<Report> {
    check_shapes(h)?;
    let bm = h.bimodule(Side::Right);
    let b2 = Balanced2::new(&bm);
    let b3 = Balanced3::over(b2.clone(), &bm);
    Ok(bialgebroid_report(h, Side::Right, &b2, &b3))
}

/// Both bialgebroid structures, then the antipode axioms (i)–(iv) and anti-multiplicativity.
/// Fails with `BialgebroidFailure` if either bialgebroid structure is broken.
pub fn check_hopf_algebroid(h: &HopfAlgebroid) -> Result<Report> {
    check_shapes(h)?;
    let (lb, rb) = (h.bimodule(Side::Left), h.bimodule(Side::Right));
    let (l2, r2) = (Balanced2::new(&lb), Balanced2::new(&rb));
    let mut r = Report::new("Hopf algebroid");
    r.absorb("left", bialgebroid_report(h, Side::Left, &l2, &Balanced3::over(l2.clone(), &lb)));
    r.absorb("right", bialgebroid_report(h, Side::Right, &r2, &Balanced3::over(r2.clone(), &rb)));
    if !r.passed() {
        return Err(Error::BialgebroidFailure(Box::new(r)));
    }
    let (n, m) = (h.dim(), h.base_dim());
    let t = &h.total;
    let a = &h.base;
    let s = &h.antipode;
    let base_labels = |x: &[usize]| a.labels(x);
    let tot_labels = |x: &[usize]| t.labels(x);
    let compat = [
        ("(i) s_l∘ε_l∘t_r=t_r", &h.s_l, &h.eps_l, &h.t_r),
        ("(i) t_l∘ε_l∘s_r=s_r", &h.t_l, &h.eps_l, &h.s_r),
        ("(i) s_r∘ε_r∘t_l=t_l", &h.s_r, &h.eps_r, &h.t_l),
        ("(i) t_r∘ε_r∘s_l=s_l", &h.t_r, &h.eps_r, &h.s_l),
    ];
    for (name, f, g, k) in compat {
        r.check(name, tuples(&[m]), base_labels, |x| (f.apply(&g.apply(k.col(x[0]))), k.col(x[0]).clone()));
    }
    let lr = Balanced3::over(l2.clone(), &rb);
    r.check("(ii) (Δ_l⊗I)Δ_r=(I⊗Δ_r)Δ_l", tuples(&[n]), tot_labels, |x| {
        let u = h.e(x[0]);
        (
            lr.project(&map_left(&h.delta_l, &h.delta_r.apply(&u), n)),
            lr.project(&map_right(&h.delta_r, &h.delta_l.apply(&u))),
        )
    });
    let rl = Balanced3::over(r2.clone(), &lb);
    r.check("(ii) (I⊗Δ_l)Δ_r=(Δ_r⊗I)Δ_l", tuples(&[n]), tot_labels, |x| {
        let u = h.e(x[0]);
        (
            rl.project(&map_right(&h.delta_l, &h.delta_r.apply(&u))),
            rl.project(&map_left(&h.delta_r, &h.delta_l.apply(&u), n)),
        )
    });
    r.check("𝒮(hk)=𝒮(k)𝒮(h)", tuples(&[n, n]), tot_labels, |x| {
        let (u, v) = (h.e(x[0]), h.e(x[1]));
        (s.apply(&t.mul(&u, &v)), t.mul(&s.apply(&v), &s.apply(&u)))
    });
    r.check("𝒮(1)=1", vec![vec![]], |_| vec![], |_| (s.apply(t.unit()), t.unit().clone()));
    r.check(
        "(iii) 𝒮(t_l(a)h t_r(b))=s_r(b)𝒮(h)s_l(a)",
        tuples(&[m, n, m]),
        |x| vec![a.name(x[0]), t.name(x[1]), a.name(x[2])],
        |x| {
            let (ta, u, tb) = (h.t_l.col(x[0]), h.e(x[1]), h.t_r.col(x[2]));
            (s.apply(&t.mul3(ta, &u, tb)), t.mul3(h.s_r.col(x[2]), &s.apply(&u), h.s_l.col(x[0])))
        },
    );
    let mu_with = |v: &Vector, left: bool| {
        let mut acc = Accumulator::new(n);
        for (k, c) in v.iter() {
            let (i, j) = (k / n, k % n);
            let p = if left { t.mul(s.col(i), &h.e(j)) } else { t.mul(&h.e(i), s.col(j)) };
            acc.add_scaled(c, &p);
        }
        acc.finish()
    };
    r.check("(iv) μ(𝒮⊗I)Δ_l=s_r∘ε_r", tuples(&[n]), tot_labels, |x| {
        let u = h.e(x[0]);
        (mu_with(&h.delta_l.apply(&u), true), h.s_r.apply(&h.eps_r.apply(&u)))
    });
    r.check("(iv) μ(I⊗𝒮)Δ_r=s_l∘ε_l", tuples(&[n]), tot_labels, |x| {
        let u = h.e(x[0]);
        (mu_with(&h.delta_r.apply(&u), false), h.s_l.apply(&h.eps_l.apply(&u)))
    });
    r.flag("commutative total", t.is_commutative());
    r.flag("commutative base", a.is_commutative());
    r.dim("total", n);
    r.dim("base", m);
    r.dim("ℋ⊗_A^l ℋ", l2.dim());
    r.dim("ℋ⊗_A^r ℋ", r2.dim());
    Ok(r)
}

/// Both bialgebroid reports and, if they pass, the full Hopf report; never errors on axiom failures.
pub fn full_report(h: &HopfAlgebroid) -> Result<Report> {
    match check_hopf_algebroid(h) {
        Err(Error::BialgebroidFailure(r)) => Ok(*r),
        other => other,
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::fixtures::e1;
    use crate::partial_actions::smash_hopf_algebroid;
    use crate::structures::matrix_algebra;

    /// `M₂ ⊗ M₂^op` as a left bialgebroid over `M₂`; the right structure and antipode are placeholders.
    fn enveloping_mock() -> HopfAlgebroid {
        let a = matrix_algebra(2);
        let total = a.tensor(&a.opposite());
        let (m, n) = (4, 16);
        let s = Mat::from_fn(n, m, |x| a.e(x).tensor(a.unit()));
        let t = Mat::from_fn(n, m, |x| a.unit().tensor(&a.e(x)));
        let delta = Mat::from_fn(n * n, n, |x| {
            let (p, q) = (x / m, x % m);
            a.e(p).tensor(a.unit()).tensor(&a.unit().tensor(&a.e(q)))
        });
        let eps = Mat::from_fn(m, n, |x| a.mul(&a.e(x / m), &a.e(x % m)));
        HopfAlgebroid {
            total,
            base: a,
            s_l: s.clone(),
            t_l: t.clone(),
            s_r: t,
            t_r: s,
            delta_l: delta.clone(),
            eps_l: eps.clone(),
            delta_r: delta,
            eps_r: eps,
            antipode: Mat::identity(n),
        }
    }

    #[test]
    fn unit_tensor_is_in_the_takeuchi_product() {
        let h = smash_hopf_algebroid(&e1()).unwrap();
        let b2 = Balanced2::new(&h.bimodule(Side::Left));
        let one = b2.project(&h.total.unit().tensor(h.total.unit()));
        assert!(takeuchi_membership(&one, &h, Side::Left));
    }

    #[test]
    fn enveloping_mock_is_a_left_bialgebroid() {
        let h = enveloping_mock();
        let r = check_left_bialgebroid(&h).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn unbalanced_tensor_leaves_the_takeuchi_product() {
        let h = enveloping_mock();
        let b2 = Balanced2::new(&h.bimodule(Side::Left));
        // 1 ⊗ s(E12): h t(a) ⊗ k gives 1 ⊗ s(a E12), the other side 1 ⊗ s(E12 a)
        let x = b2.project(&h.total.unit().tensor(h.s_l.col(1)));
        assert!(!takeuchi_membership(&x, &h, Side::Left));
        assert_eq!(in_takeuchi(&b2, &b2.lift(&x), &h, Side::Left), Some(0));
        let one = b2.project(&h.total.unit().tensor(h.total.unit()));
        assert!(takeuchi_membership(&one, &h, Side::Left));
    }

    #[test]
    fn collapsed_antipode_fails_axiom_iv_at_chi1_delta_g() {
        let mut h = smash_hopf_algebroid(&e1()).unwrap();
        h.antipode.set_col(1, h.total.e(0));
        let r = check_hopf_algebroid(&h).unwrap();
        let f = r.first_failure().unwrap();
        assert_eq!(f.name, "(iv) μ(𝒮⊗I)Δ_l=s_r∘ε_r");
        assert!(f.has_witness(&["χ1#δ_g"]));
        assert_eq!(r.failed_axioms(), vec!["(iv) μ(𝒮⊗I)Δ_l=s_r∘ε_r", "(iv) μ(I⊗𝒮)Δ_r=s_l∘ε_l"]);
    }

    #[test]
    fn broken_coring_is_reported_as_a_bialgebroid_failure() {
        let mut h = smash_hopf_algebroid(&e1()).unwrap();
        h.eps_l = Mat::zeros(2, 3);
        assert!(matches!(check_hopf_algebroid(&h), Err(Error::BialgebroidFailure(_))));
        assert!(!full_report(&h).unwrap().passed());
    }

    #[test]
    fn zero_algebroid_is_vacuous() {
        let h = zero_algebroid();
        assert!(check_hopf_algebroid(&h).unwrap().passed());
    }

    pub(crate) fn zero_algebroid() -> HopfAlgebroid {
        let z = AlgebraSC::new(Mat::zeros(0, 0), Vector::zeros(0), None).unwrap();
        let zero = Mat::zeros(0, 0);
        HopfAlgebroid {
            total: z.clone(),
            base: z,
            s_l: zero.clone(),
            t_l: zero.clone(),
            s_r: zero.clone(),
            t_r: zero.clone(),
            delta_l: zero.clone(),
            eps_l: zero.clone(),
            delta_r: zero.clone(),
            eps_r: zero.clone(),
            antipode: zero,
        }
    }
}
