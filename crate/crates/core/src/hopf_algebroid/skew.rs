use super::algebroid::{check_left_bialgebroid, HopfAlgebroid};
use crate::error::{Error, Result};
use crate::exactlin::{tidx, Accumulator, Mat, Vector};
use crate::partial_actions::{check_partial_action, smash_hopf_algebroid, smash_product, PartialAction};
use crate::partial_coactions::{partial_split_hopf_algebroid, reduced_tensor, PartialCoaction};
use crate::report::{tuples, Report};
use crate::structures::Pairing;

/// A pairing `⟨⟨ | ⟩⟩ : Λ ⊗ L → A` between the left bialgebroid structures of two algebroids over `A`.
/// Column `tidx(ξ, ℓ, dim L)` of `form` holds `⟨⟨ξ|ℓ⟩⟩`.
#[derive(Clone, Debug)]
pub struct SkewPairing {
    pub lambda: HopfAlgebroid,
    pub l: HopfAlgebroid,
    pub form: Mat,
}

impl SkewPairing {
    pub fn value(&self, xi: &Vector, ell: &Vector) -> Vector {
        let nl = self.l.dim();
        let mut acc = Accumulator::new(self.lambda.base_dim());
        for (i, c) in xi.iter() {
            for (j, d) in ell.iter() {
                acc.add_scaled(&(c * d), self.form.col(tidx(i, j, nl)));
            }
        }
        acc.finish()
    }
}

/// Terms `(c, i, j)` of the representative of `Δ_l(x)` on basis element `x`.
fn delta_terms(h: &HopfAlgebroid, x: usize) -> Vec<(crate::exactlin::Scalar, usize, usize)> {
    let n = h.dim();
    h.delta_l.col(x).iter().map(|(k, c)| (c.clone(), k / n, k % n)).collect()
}

/// SP4, SP5, SP1, SP2, SP3 over basis tuples.
pub fn check_skew_pairing(sp: &SkewPairing) -> Result<Report> {
    let (lam, l) = (&sp.lambda, &sp.l);
    let m = lam.base_dim();
    if l.base_dim() != m || sp.form.nrows() != m || sp.form.ncols() != lam.dim() * l.dim() {
        return Err(Error::DimensionMismatch("skew pairing shapes".into()));
    }
    for h in [lam, l] {
        let r = check_left_bialgebroid(h)?;
        if !r.passed() {
            return Err(Error::BialgebroidFailure(Box::new(r)));
        }
    }
    let a = &lam.base;
    let (nx, nl) = (lam.dim(), l.dim());
    let (xe, le) = (|i: usize| lam.total.e(i), |i: usize| l.total.e(i));
    let xi_name = |i: usize| lam.total.name(i);
    let l_name = |i: usize| l.total.name(i);
    let mut r = Report::new("skew pairing");
    r.check(
        "SP4",
        tuples(&[nx]),
        |t| vec![xi_name(t[0])],
        |t| (sp.value(&xe(t[0]), l.total.unit()), lam.eps_l.apply(&xe(t[0]))),
    );
    r.check(
        "SP5",
        tuples(&[nl]),
        |t| vec![l_name(t[0])],
        |t| (sp.value(lam.total.unit(), &le(t[0])), l.eps_l.apply(&le(t[0]))),
    );
    r.check(
        "SP1",
        tuples(&[m, m, m, m, m, nx, nl]),
        |t| {
            let mut v = a.labels(&t[..5]);
            v.push(xi_name(t[5]));
            v.push(l_name(t[6]));
            v
        },
        |t| {
            let (lx, ll) = (&lam.total, &l.total);
            let stx = |p: usize, q: usize| lx.mul(lam.s_l.col(p), lam.t_l.col(q));
            let stl = |p: usize, q: usize| ll.mul(l.s_l.col(p), l.t_l.col(q));
            let xi = lx.mul3(&stx(t[0], t[1]), &xe(t[5]), &stx(t[2], t[3]));
            let ell = ll.mul3(&stl(t[2], t[4]), &le(t[6]), &stl(t[3], t[1]));
            (a.mul(&sp.value(&xi, &le(t[6])), &a.e(t[4])), a.mul(&a.e(t[0]), &sp.value(&xe(t[5]), &ell)))
        },
    );
    r.check(
        "SP2",
        tuples(&[nx, nl, nl]),
        |t| vec![xi_name(t[0]), l_name(t[1]), l_name(t[2])],
        |t| {
            let lhs = sp.value(&xe(t[0]), &l.total.mul(&le(t[1]), &le(t[2])));
            let mut rhs = Accumulator::new(m);
            for (c, i, j) in delta_terms(lam, t[0]) {
                let inner = l.t_l.apply(&sp.value(&xe(j), &le(t[2])));
                rhs.add_scaled(&c, &sp.value(&xe(i), &l.total.mul(&le(t[1]), &inner)));
            }
            (lhs, rhs.finish())
        },
    );
    r.check(
        "SP3",
        tuples(&[nx, nx, nl]),
        |t| vec![xi_name(t[0]), xi_name(t[1]), l_name(t[2])],
        |t| {
            let lhs = sp.value(&lam.total.mul(&xe(t[0]), &xe(t[1])), &le(t[2]));
            let mut rhs = Accumulator::new(m);
            for (c, i, j) in delta_terms(l, t[2]) {
                let inner = lam.s_l.apply(&sp.value(&xe(t[1]), &le(i)));
                rhs.add_scaled(&c, &sp.value(&lam.total.mul(&xe(t[0]), &inner), &le(j)));
            }
            (lhs, rhs.finish())
        },
    );
    Ok(r)
}

/// `⟨⟨a⊗ξ | b⊗h⟩⟩ = ab(h₍₁₎·1_A)⟨h₍₂₎,ξ⟩` on raw basis tensors of `A⊗K` and `A⊗H`.
fn raw_value(pa: &PartialAction, pairing: &Pairing, a: usize, xi: usize, b: usize, h: usize) -> Vector {
    let alg = &pa.a;
    let ab = alg.mul(&alg.e(a), &alg.e(b));
    let mut acc = Accumulator::new(alg.dim());
    for (c, h1, h2) in pa.h.delta_terms(h) {
        let p = pairing.basis_value(h2, xi);
        if !p.is_zero() {
            acc.add_scaled(&(&c * &p), &alg.mul(&ab, &pa.on_unit(h1)));
        }
    }
    acc.finish()
}

fn raw_pair(pc: &PartialCoaction, pa: &PartialAction, pairing: &Pairing, x: &Vector, y: &Vector) -> Vector {
    let (nk, nh) = (pc.k.dim(), pa.h.dim());
    let mut acc = Accumulator::new(pa.a.dim());
    for (p, c) in x.iter() {
        for (q, d) in y.iter() {
            acc.add_scaled(&(c * d), &raw_value(pa, pairing, p / nk, p % nk, q / nh, q % nh));
        }
    }
    acc.finish()
}

/// The skew pairing between `A⊗̲K` and `A#H` induced by a Hopf pairing `⟨H, K⟩` (rows `H`).
pub fn canonical_skew_pairing(pc: &PartialCoaction, pa: &PartialAction, pairing: &Pairing) -> Result<SkewPairing> {
    if !pa.h.is_cocommutative() {
        return Err(Error::PreconditionFailure("H not cocommutative".into()));
    }
    if !pc.k.is_commutative() {
        return Err(Error::PreconditionFailure("K not commutative".into()));
    }
    if !pa.a.same_structure(&pc.a) {
        return Err(Error::DimensionMismatch("the action and the coaction live on different algebras".into()));
    }
    if !pa.a.is_commutative() {
        return Err(Error::PreconditionFailure("base algebra not commutative".into()));
    }
    if pairing.left_dim() != pa.h.dim() || pairing.right_dim() != pc.k.dim() {
        return Err(Error::DimensionMismatch("pairing shape".into()));
    }
    let (m, nh, nk) = (pa.a.dim(), pa.h.dim(), pc.k.dim());
    check_partial_action(pa)?;
    for h in 0..nh {
        for a in 0..m {
            let mut expected = Accumulator::new(m);
            for (c, x, xi) in pc.terms(&pc.apply(&pa.a.e(a))) {
                expected.add_scaled(&(&c * &pairing.basis_value(h, xi)), &pa.a.e(x));
            }
            if pa.basis(h, a) != &expected.finish() {
                return Err(Error::CompatibilityFailure(format!(
                    "h·a ≠ a⁰⟨h,a¹⟩ at ({}, {})",
                    pa.h.name(h),
                    pa.a.name(a)
                )));
            }
        }
    }
    let lambda = partial_split_hopf_algebroid(pc)?;
    let l = smash_hopf_algebroid(pa)?;
    let rt = reduced_tensor(pc)?;
    let sm = smash_product(pa)?;
    for p in 0..m * nk {
        let x = Vector::unit(m * nk, p);
        for q in 0..m * nh {
            let y = Vector::unit(m * nh, q);
            let v = raw_pair(pc, pa, pairing, &x, &y);
            if raw_pair(pc, pa, pairing, &x, &sm.pi(pa, &y)) != v {
                return Err(Error::WellDefinednessFailure(format!("does not factor through a#h at ({p}, {q})")));
            }
            if raw_pair(pc, pa, pairing, &rt.pi(&x), &y) != v {
                return Err(Error::WellDefinednessFailure(format!("does not factor through x·ρ(1) at ({p}, {q})")));
            }
        }
    }
    let (dx, dl) = (lambda.dim(), l.dim());
    let mut cols = Vec::with_capacity(dx * dl);
    for i in 0..dx {
        let x = rt.embed(&lambda.total.e(i));
        for j in 0..dl {
            cols.push(raw_pair(pc, pa, pairing, &x, &sm.embed(&l.total.e(j))));
        }
    }
    Ok(SkewPairing { lambda, l, form: Mat::from_columns(m, cols) })
}
