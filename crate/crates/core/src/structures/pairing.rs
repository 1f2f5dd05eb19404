use super::{AlgebraSC, CoalgebraSC, HopfPackage};
use crate::error::{Error, Result};
use crate::exactlin::{inverse, Accumulator, Mat, Scalar, Vector};
use crate::report::{scalar_vec, tuples, Report};

/// Bilinear form `⟨e_i, f_j⟩ = form[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    pub form: Mat,
}

/// The participants and the strength of a pairing check.
#[derive(Clone, Copy, Debug)]
pub enum PairingKind<'a> {
    AlgCoalg(&'a AlgebraSC, &'a CoalgebraSC),
    Bialgebra(&'a HopfPackage, &'a HopfPackage),
    Hopf(&'a HopfPackage, &'a HopfPackage),
}

impl Pairing {
    pub fn new(form: Mat) -> Self {
        Pairing { form }
    }

    /// `⟨e_u, f_v⟩ = δ_{u,v}`.
    pub fn identity(n: usize) -> Self {
        Pairing { form: Mat::identity(n) }
    }

    pub fn left_dim(&self) -> usize {
        self.form.nrows()
    }

    pub fn right_dim(&self) -> usize {
        self.form.ncols()
    }

    pub fn value(&self, x: &Vector, y: &Vector) -> Scalar {
        x.dot(&self.form.apply(y))
    }

    pub fn basis_value(&self, i: usize, j: usize) -> Scalar {
        self.form.entry(i, j)
    }

    /// `Σ w_{pq} ⟨x, f_p⟩⟨y, f_q⟩` for `w` in the tensor square of the right space.
    pub fn value_left2(&self, x: &Vector, y: &Vector, w: &Vector) -> Scalar {
        let m = self.right_dim();
        let mut s = Scalar::zero();
        for (k, c) in w.iter() {
            let (p, q) = (k / m, k % m);
            s = s + c * &(&self.value(x, &Vector::unit(m, p)) * &self.value(y, &Vector::unit(m, q)));
        }
        s
    }

    /// `Σ w_{pq} ⟨e_p, y⟩⟨e_q, z⟩` for `w` in the tensor square of the left space.
    pub fn value_right2(&self, w: &Vector, y: &Vector, z: &Vector) -> Scalar {
        let n = self.left_dim();
        let mut s = Scalar::zero();
        for (k, c) in w.iter() {
            let (p, q) = (k / n, k % n);
            s = s + c * &(&self.value(&Vector::unit(n, p), y) * &self.value(&Vector::unit(n, q), z));
        }
        s
    }

    pub fn is_nondegenerate(&self) -> bool {
        let r = self.form.rank();
        r == self.left_dim() && r == self.right_dim()
    }

    /// The map `K -> H*` in dual coordinates, i.e. the transpose form.
    pub fn transposed(&self) -> Pairing {
        Pairing { form: self.form.transpose() }
    }
}

fn alg_coalg_laws(r: &mut Report, p: &Pairing, a: &AlgebraSC, c: &CoalgebraSC, suffix: &str) {
    let (n, m) = (a.dim(), c.dim());
    let lab = |t: &[usize]| {
        let mut v = a.labels(&t[..t.len() - 1]);
        v.push(c.name(t[t.len() - 1]));
        v
    };
    r.check(&format!("⟨ab,c⟩=⟨a,c1⟩⟨b,c2⟩{suffix}"), tuples(&[n, n, m]), lab, |t| {
        let (x, y, z) = (a.e(t[0]), a.e(t[1]), c.e(t[2]));
        (scalar_vec(p.value(&a.mul(&x, &y), &z)), scalar_vec(p.value_left2(&x, &y, &c.delta(&z))))
    });
    r.check(
        &format!("⟨1,c⟩=ε(c){suffix}"),
        tuples(&[m]),
        |t| c.labels(t),
        |t| (scalar_vec(p.value(a.unit(), &c.e(t[0]))), scalar_vec(c.eps(&c.e(t[0])))),
    );
}

/// Verifies the defining identities of the chosen pairing kind on all basis tuples.
pub fn check_pairing(p: &Pairing, kind: PairingKind<'_>, nondegenerate: bool) -> Result<Report> {
    let (ld, rd) = match kind {
        PairingKind::AlgCoalg(a, c) => (a.dim(), c.dim()),
        PairingKind::Bialgebra(h, k) | PairingKind::Hopf(h, k) => (h.dim(), k.dim()),
    };
    if p.left_dim() != ld || p.right_dim() != rd {
        return Err(Error::DimensionMismatch(format!(
            "form is {}x{}, participants are {ld} and {rd}",
            p.left_dim(),
            p.right_dim()
        )));
    }
    let mut r = Report::new("pairing");
    match kind {
        PairingKind::AlgCoalg(a, c) => alg_coalg_laws(&mut r, p, a, c, ""),
        PairingKind::Bialgebra(h, k) | PairingKind::Hopf(h, k) => {
            alg_coalg_laws(&mut r, p, &h.algebra, &k.coalgebra, "");
            let (n, m) = (h.dim(), k.dim());
            let lab = |t: &[usize]| {
                let mut v = vec![h.name(t[0])];
                v.extend(k.algebra.labels(&t[1..]));
                v
            };
            r.check("⟨a,cd⟩=⟨a1,c⟩⟨a2,d⟩", tuples(&[n, m, m]), lab, |t| {
                let (x, y, z) = (h.e(t[0]), k.e(t[1]), k.e(t[2]));
                (scalar_vec(p.value(&x, &k.mul(&y, &z))), scalar_vec(p.value_right2(&h.delta(&x), &y, &z)))
            });
            r.check(
                "⟨a,1⟩=ε(a)",
                tuples(&[n]),
                |t| h.labels(t),
                |t| (scalar_vec(p.value(&h.e(t[0]), k.one())), scalar_vec(h.eps(&h.e(t[0])))),
            );
            if let PairingKind::Hopf(..) = kind {
                let lab = |t: &[usize]| vec![h.name(t[0]), k.name(t[1])];
                r.check("⟨S(a),c⟩=⟨a,S(c)⟩", tuples(&[n, m]), lab, |t| {
                    let (x, y) = (h.e(t[0]), k.e(t[1]));
                    (scalar_vec(p.value(&h.s(&x), &y)), scalar_vec(p.value(&x, &k.s(&y))))
                });
            }
        }
    }
    if nondegenerate {
        r.check_bool("non-degenerate", p.is_nondegenerate(), vec![], vec![]);
    }
    r.flag("non-degenerate", p.is_nondegenerate());
    Ok(r)
}

/// `(f*g)(x) = f(x₁) g(x₂)` for maps `C -> A`.
pub fn convolution(f: &Mat, g: &Mat, c: &CoalgebraSC, a: &AlgebraSC) -> Result<Mat> {
    let (n, m) = (c.dim(), a.dim());
    for h in [f, g] {
        if h.ncols() != n || h.nrows() != m {
            return Err(Error::DimensionMismatch(format!("map is {}x{}, expected {m}x{n}", h.nrows(), h.ncols())));
        }
    }
    Ok(Mat::from_fn(m, n, |x| {
        let mut acc = Accumulator::new(m);
        for (k, coef) in c.comult().col(x).iter() {
            let (i, j) = (k / n, k % n);
            acc.add_scaled(coef, &a.mul(f.col(i), g.col(j)));
        }
        acc.finish()
    }))
}

/// Axioms PR1–PR5 for `π: H -> B` on all basis pairs.
pub fn check_partial_representation(pi: &Mat, h: &HopfPackage, b: &AlgebraSC) -> Result<Report> {
    let n = h.dim();
    if pi.ncols() != n || pi.nrows() != b.dim() {
        return Err(Error::DimensionMismatch("partial representation shape".into()));
    }
    let p = |x: &Vector| pi.apply(x);
    let pe = |i: usize| pi.col(i).clone();
    let mut r = Report::new("partial representation");
    r.check("PR1", vec![vec![]], |_| vec![], |_| (p(h.one()), b.unit().clone()));
    let sum = |terms: Vec<(Scalar, usize, usize)>, f: &dyn Fn(usize, usize) -> Vector| {
        let mut acc = Accumulator::new(b.dim());
        for (c, i, j) in terms {
            acc.add_scaled(&c, &f(i, j));
        }
        acc.finish()
    };
    let lab = |t: &[usize]| h.labels(t);
    r.check("PR2", tuples(&[n, n]), lab, |t| {
        let (x, k) = (h.e(t[0]), t[1]);
        let lhs = sum(h.delta_terms(k), &|i, j| b.mul3(&p(&x), &pe(i), &p(&h.s(&h.e(j)))));
        let rhs = sum(h.delta_terms(k), &|i, j| b.mul(&p(&h.mul(&x, &h.e(i))), &p(&h.s(&h.e(j)))));
        (lhs, rhs)
    });
    r.check("PR3", tuples(&[n, n]), lab, |t| {
        let (x, y) = (t[0], h.e(t[1]));
        let lhs = sum(h.delta_terms(x), &|i, j| b.mul3(&pe(i), &p(&h.s(&h.e(j))), &p(&y)));
        let rhs = sum(h.delta_terms(x), &|i, j| b.mul(&pe(i), &p(&h.mul(&h.s(&h.e(j)), &y))));
        (lhs, rhs)
    });
    r.check("PR4", tuples(&[n, n]), lab, |t| {
        let (x, k) = (h.e(t[0]), t[1]);
        let lhs = sum(h.delta_terms(k), &|i, j| b.mul3(&p(&x), &p(&h.s(&h.e(i))), &pe(j)));
        let rhs = sum(h.delta_terms(k), &|i, j| b.mul(&p(&h.mul(&x, &h.s(&h.e(i)))), &pe(j)));
        (lhs, rhs)
    });
    r.check("PR5", tuples(&[n, n]), lab, |t| {
        let (x, y) = (t[0], h.e(t[1]));
        let lhs = sum(h.delta_terms(x), &|i, j| b.mul3(&p(&h.s(&h.e(i))), &pe(j), &p(&y)));
        let rhs = sum(h.delta_terms(x), &|i, j| b.mul(&p(&h.s(&h.e(i))), &p(&h.mul(&h.e(j), &y))));
        (lhs, rhs)
    });
    Ok(r)
}

/// Which structure maps to flip.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpCop {
    Op,
    Cop,
    OpCop,
}

/// Opposite multiplication and/or comultiplication. The antipode of `H^op` and
/// `H^cop` is `S⁻¹` (dropped when `S` is not invertible); that of `H^{op,cop}` is `S`.
pub fn op_cop_transformers(p: &HopfPackage, which: OpCop) -> HopfPackage {
    let algebra = if which == OpCop::Cop { p.algebra.clone() } else { p.algebra.opposite() };
    let coalgebra = if which == OpCop::Op { p.coalgebra.clone() } else { p.coalgebra.co_opposite() };
    let antipode = match which {
        OpCop::OpCop => p.antipode.clone(),
        _ => p.antipode.as_ref().and_then(inverse),
    };
    HopfPackage::new(algebra, coalgebra, antipode).expect("flipping preserves shapes")
}
