use super::handed::{check_left_partial_coaction, LeftPartialCoaction};
use super::transfer::require_hopf_pairing;
use crate::coalgebra_partial::{
    check_partial_module_coalgebra, cosmash, cring, PartialComoduleCoalgebra, PartialModuleCoalgebra,
};
use crate::error::{Error, Result};
use crate::exactlin::{tidx, Accumulator, Mat, Scalar, Subspace, Vector};
use crate::partial_actions::{smash_product, PartialAction};
use crate::report::{combination_label, scalar_vec, tuples, Report};
use crate::structures::{check_pairing, Pairing, PairingKind};

/// Two partial structures tied together by a Hopf pairing and a pairing of their carriers.
#[derive(Clone, Debug)]
pub struct CompatibleTriple<L, R> {
    pub hopf: Pairing,
    pub structure: Pairing,
    pub nondegenerate: bool,
    pub left: L,
    pub right: R,
}

impl<L, R> CompatibleTriple<L, R> {
    pub fn new(hopf: Pairing, structure: Pairing, left: L, right: R) -> Self {
        let nondegenerate = structure.is_nondegenerate();
        CompatibleTriple { hopf, structure, nondegenerate, left, right }
    }
}

fn require_shape(p: &Pairing, rows: usize, cols: usize, what: &str) -> Result<()> {
    if p.left_dim() == rows && p.right_dim() == cols {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!("{what} is {}x{}, expected {rows}x{cols}", p.left_dim(), p.right_dim())))
    }
}

fn require_passing(r: Report) -> Result<Report> {
    if r.passed() {
        Ok(r)
    } else {
        Err(Error::PairingAxiomFailure(Box::new(r)))
    }
}

/// A table of raw values `R[p][q]` and the bilinear extension `Σ v_p w_q R[p][q]`.
struct RawForm(Vec<Vec<Scalar>>);

impl RawForm {
    fn eval(&self, v: &Vector, w: &Vector) -> Scalar {
        let mut s = Scalar::zero();
        for (p, x) in v.iter() {
            for (q, y) in w.iter() {
                s = s + &(x * y) * &self.0[p][q];
            }
        }
        s
    }

    fn eval2(&self, v: &Vector, w: &Vector, left: usize, right: usize) -> Scalar {
        let mut s = Scalar::zero();
        for (pp, x) in v.iter() {
            for (qq, y) in w.iter() {
                let term = &self.0[pp / left][qq / right] * &self.0[pp % left][qq % right];
                s = s + &(x * y) * &term;
            }
        }
        s
    }

    /// `R(P e_p, e_q) = R(e_p, e_q)` for all raw indices, with `P` acting on the left space.
    fn factors_left(&self, proj: &Mat) -> Option<(usize, usize)> {
        let cols = self.0.first().map_or(0, Vec::len);
        tuples(&[self.0.len(), cols])
            .into_iter()
            .map(|t| (t[0], t[1]))
            .find(|&(p, q)| self.eval(proj.col(p), &Vector::unit(cols, q)) != self.0[p][q])
    }

    fn factors_right(&self, proj: &Mat) -> Option<(usize, usize)> {
        let rows = self.0.len();
        let cols = self.0.first().map_or(0, Vec::len);
        tuples(&[rows, cols])
            .into_iter()
            .map(|t| (t[0], t[1]))
            .find(|&(p, q)| self.eval(&Vector::unit(rows, p), proj.col(q)) != self.0[p][q])
    }

    fn on(&self, left: &Subspace, right: &Subspace) -> Pairing {
        let (lb, rb) = (left.basis(), right.basis());
        Pairing::new(Mat::from_fn(lb.len(), rb.len(), |j| {
            Vector::from_pairs(lb.len(), lb.iter().enumerate().map(|(i, v)| (i, self.eval(v, &rb[j]))))
        }))
    }
}

/// `⟨⟨⟨a#h, x>◂ξ⟩⟩⟩ = (a(h₁·1), x)⟨h₂, ξ⟩` between `A#H` and `C>◂K`, given `⟨H, K⟩` (rows `H`) and
/// `(A, C)` (rows `A`) satisfying `(h·a, c) = ⟨h, c⁻¹⟩(a, c⁰)`. The form is in the carrier bases.
pub fn smash_cosmash_pairing(
    t: &CompatibleTriple<PartialAction, PartialComoduleCoalgebra>,
) -> Result<(Pairing, Report)> {
    let (pa, pcc) = (&t.left, &t.right);
    let (h, k, a, c) = (&pa.h, &pcc.k, &pa.a, &pcc.c);
    let (nh, nk, na, nc) = (h.dim(), k.dim(), a.dim(), c.dim());
    require_shape(&t.hopf, nh, nk, "Hopf pairing")?;
    require_shape(&t.structure, na, nc, "structure pairing")?;
    require_hopf_pairing(&t.hopf, h, k)?;
    require_passing(check_pairing(&t.structure, PairingKind::AlgCoalg(a, c), false)?)?;
    for (hi, ai, ci) in tuples(&[nh, na, nc]).into_iter().map(|t| (t[0], t[1], t[2])) {
        let lhs = t.structure.value(pa.basis(hi, ai), &c.e(ci));
        let mut rhs = Scalar::zero();
        for (s, xi, d) in pcc.terms(ci) {
            rhs = rhs + &(&s * &t.hopf.basis_value(hi, xi)) * &t.structure.basis_value(ai, d);
        }
        if lhs != rhs {
            return Err(Error::CompatibilityFailure(format!(
                "(h·a,c) ≠ ⟨h,c⁻¹⟩(a,c⁰) at ({}, {}, {})",
                h.name(hi),
                a.name(ai),
                c.name(ci)
            )));
        }
    }
    let sm = smash_product(pa)?;
    let cs = cosmash(pcc)?;
    let (left, right) = (na * nh, nc * nk);
    let pi = Mat::from_fn(left, left, |p| sm.pi(pa, &Vector::unit(left, p)));
    let raw = RawForm(
        (0..left)
            .map(|p| {
                let hashed = pi.col(p);
                (0..right)
                    .map(|q| {
                        let (ci, xi) = (q / nk, q % nk);
                        let mut s = Scalar::zero();
                        for (idx, x) in hashed.iter() {
                            let (b, hh) = (idx / nh, idx % nh);
                            s = s + &(x * &t.structure.basis_value(b, ci)) * &t.hopf.basis_value(hh, xi);
                        }
                        s
                    })
                    .collect()
            })
            .collect(),
    );
    let mut r = Report::new("smash/cosmash pairing");
    let raw_left = |p: usize| format!("{}⊗{}", a.name(p / nh), h.name(p % nh));
    if let Some((p, q)) = raw.factors_left(&pi) {
        return Err(Error::WellDefinednessFailure(format!(
            "does not factor through a#h at ({}, {})",
            raw_left(p),
            cs.name(q)
        )));
    }
    if let Some((p, q)) = raw.factors_right(&cs.under) {
        return Err(Error::WellDefinednessFailure(format!(
            "does not factor through x>◂ξ at ({}, {})",
            raw_left(p),
            cs.name(q)
        )));
    }
    r.check_bool("well-defined on A#H", true, vec![], vec![]);
    r.check_bool("well-defined on C>◂K", true, vec![], vec![]);
    let form = raw.on(&sm.carrier, &cs.carrier);
    let coalgebra = cs.coalgebra()?;
    let laws = check_pairing(&form, PairingKind::AlgCoalg(&sm.algebra, &coalgebra), false)?;
    r.absorb("pairing", laws);
    r.dim("A#H", sm.dim());
    r.dim("C>◂K", cs.dim());
    Ok((form, r))
}

/// Checks `(a, h·c) = ⟨h, a⁻¹⟩(a⁰, c)` for a symmetric left partial `K`-comodule algebra `A`, given
/// `⟨H, K⟩` (rows `H`) and a non-degenerate `(A, C)` (rows `A`), and runs the module coalgebra checker on `·`.
pub fn module_coalgebra_from_k_comodule_algebra(
    t: &CompatibleTriple<LeftPartialCoaction, PartialModuleCoalgebra>,
) -> Result<Report> {
    let (lc, pmc) = (&t.left, &t.right);
    let (h, k, a, c) = (&pmc.h, &lc.k, &lc.a, &pmc.c);
    require_shape(&t.hopf, h.dim(), k.dim(), "Hopf pairing")?;
    require_shape(&t.structure, a.dim(), c.dim(), "structure pairing")?;
    if !t.nondegenerate {
        return Err(Error::DegeneratePairing);
    }
    let lr = check_left_partial_coaction(lc)?;
    if !lr.passed() {
        return Err(Error::CoactionAxiomFailure(Box::new(lr)));
    }
    if lr.get_flag("symmetric") != Some(true) {
        return Err(Error::NotSymmetric(lr.notes.first().cloned().unwrap_or_default()));
    }
    let mut r = Report::new("module coalgebra from comodule algebra");
    let lab = |x: &[usize]| vec![a.name(x[0]), h.name(x[1]), c.name(x[2])];
    r.check("(a,h·c)=⟨h,a⁻¹⟩(a⁰,c)", tuples(&[a.dim(), h.dim(), c.dim()]), lab, |x| {
        let lhs = t.structure.value(&a.e(x[0]), pmc.basis(x[1], x[2]));
        let mut rhs = Scalar::zero();
        for (s, xi, b) in lc.terms(x[0]) {
            rhs = rhs + &(&s * &t.hopf.basis_value(x[1], xi)) * &t.structure.basis_value(b, x[2]);
        }
        (scalar_vec(lhs), scalar_vec(rhs))
    });
    let mr = check_partial_module_coalgebra(pmc)?;
    let symmetric = mr.get_flag("symmetric") == Some(true);
    let global = mr.get_flag("global") == Some(true);
    r.absorb("module coalgebra", mr);
    r.check_bool("module coalgebra.PLHMC3′", symmetric, vec![], vec![]);
    r.flag("global", global);
    r.flag("comodule algebra global", lc.is_global());
    Ok(r)
}

/// The coring `H⊗̲A = λ(1)(H⊗A)` of a left partial `H`-comodule algebra, on the ambient `H⊗A`.
struct LeftCoring<'a> {
    lc: &'a LeftPartialCoaction,
    ha: crate::structures::AlgebraSC,
    idem: Vector,
}

impl LeftCoring<'_> {
    fn pi(&self, v: &Vector) -> Vector {
        self.ha.mul(&self.idem, v)
    }

    fn act_left(&self, b: &Vector, v: &Vector) -> Vector {
        self.ha.mul(&self.lc.apply(b), v)
    }

    fn act_right(&self, v: &Vector, b: &Vector) -> Vector {
        self.ha.mul(v, &self.lc.k.one().tensor(b))
    }

    /// `η⊗a ↦ (η₁⊗̲1) ⊗ (η₂⊗̲a)`
    fn delta(&self, v: &Vector) -> Vector {
        let (k, a) = (&self.lc.k, &self.lc.a);
        let m = a.dim();
        let big = k.dim() * m;
        let mut acc = Accumulator::new(big * big);
        for (idx, x) in v.iter() {
            for (s, e1, e2) in k.delta_terms(idx / m) {
                let left = self.pi(&k.e(e1).tensor(a.unit()));
                let right = self.pi(&Vector::unit(big, tidx(e2, idx % m, m)));
                acc.add_scaled(&(x * &s), &left.tensor(&right));
            }
        }
        acc.finish()
    }

    /// `η⊗a ↦ ε(η)a`
    fn eps(&self, v: &Vector) -> Vector {
        let (k, a) = (&self.lc.k, &self.lc.a);
        let m = a.dim();
        let mut acc = Accumulator::new(m);
        for (idx, x) in v.iter() {
            acc.add(idx % m, &(x * &k.eps(&k.e(idx / m))));
        }
        acc.finish()
    }
}

/// Evaluates the candidate `⟪η⊗̲a, ξ⊗̲c⟫ = ⟨ξ, η⟩(c, a)` between the `A`-coring `H⊗̲A` of a left partial
/// `H`-comodule algebra and the `C`-ring `K⊗̲C` of a symmetric partial `K`-module coalgebra, given
/// `⟨K, H⟩` (rows `K`) and `(C, A)` (rows `C`) with `(ξ·x, a) = ⟨ξ, a⁻¹⟩(x, a⁰)`. Each duality law is
/// reported separately; when `(C, A)` is degenerate the well-definedness checks are skipped and flagged.
pub fn cring_coring_pairing(t: &CompatibleTriple<LeftPartialCoaction, PartialModuleCoalgebra>) -> Result<Report> {
    let (lc, pmc) = (&t.left, &t.right);
    let (hk, hh, a, c) = (&pmc.h, &lc.k, &lc.a, &pmc.c);
    let (nk, nh, na, nc) = (hk.dim(), hh.dim(), a.dim(), c.dim());
    require_shape(&t.hopf, nk, nh, "Hopf pairing")?;
    require_shape(&t.structure, nc, na, "structure pairing")?;
    require_passing(check_pairing(&t.hopf, PairingKind::Bialgebra(hk, hh), false)?)?;
    for (xi, x, ai) in tuples(&[nk, nc, na]).into_iter().map(|t| (t[0], t[1], t[2])) {
        let lhs = t.structure.value(pmc.basis(xi, x), &a.e(ai));
        let mut rhs = Scalar::zero();
        for (s, eta, b) in lc.terms(ai) {
            rhs = rhs + &(&s * &t.hopf.basis_value(xi, eta)) * &t.structure.basis_value(x, b);
        }
        if lhs != rhs {
            return Err(Error::CompatibilityFailure(format!(
                "(ξ·x,a) ≠ ⟨ξ,a⁻¹⟩(x,a⁰) at ({}, {}, {})",
                hk.name(xi),
                c.name(x),
                a.name(ai)
            )));
        }
    }
    let lr = check_left_partial_coaction(lc)?;
    if !lr.passed() {
        return Err(Error::CoactionAxiomFailure(Box::new(lr)));
    }
    let cr = cring(pmc)?;
    let coring = LeftCoring { lc, ha: hh.algebra.tensor(a), idem: lc.apply(a.unit()) };
    let (left, right) = (nh * na, nk * nc);
    let raw = RawForm(
        (0..left)
            .map(|p| {
                (0..right)
                    .map(|q| &t.hopf.basis_value(q / nc, p / na) * &t.structure.basis_value(q % nc, p % na))
                    .collect()
            })
            .collect(),
    );
    let carrier = Subspace::from_spanning(left, (0..left).map(|p| coring.pi(&Vector::unit(left, p))));
    let (cb, db) = (carrier.basis(), cr.carrier.basis());
    let raw_left = |p: usize| format!("{}⊗{}", hh.name(p / na), a.name(p % na));
    let raw_right = |q: usize| format!("{}⊗{}", hk.name(q / nc), c.name(q % nc));
    let cl = |i: usize| combination_label(&cb[i], raw_left);
    let dl = |j: usize| combination_label(&db[j], raw_right);

    let mut r = Report::new("coring/C-ring pairing");
    if t.nondegenerate {
        let pi = Mat::from_fn(left, left, |p| coring.pi(&Vector::unit(left, p)));
        let lab = |x: &[usize]| vec![raw_left(x[0]), raw_right(x[1])];
        r.check("well-defined on H⊗̲A", tuples(&[left, right]), lab, |x| {
            (scalar_vec(raw.eval(pi.col(x[0]), &Vector::unit(right, x[1]))), scalar_vec(raw.0[x[0]][x[1]].clone()))
        });
        r.check("well-defined on K⊗̲C", tuples(&[left, right]), lab, |x| {
            (scalar_vec(raw.eval(&Vector::unit(left, x[0]), cr.under.col(x[1]))), scalar_vec(raw.0[x[0]][x[1]].clone()))
        });
    } else {
        r.note("well-definedness undetermined: (,) is degenerate");
    }
    r.flag("well-definedness undetermined", !t.nondegenerate);
    let lab3 = |x: &[usize]| vec![a.name(x[0]), cl(x[1]), dl(x[2])];
    r.check("⟪b·𝔠,d⟫=(d⁻¹,b)⟪𝔠,d⁰⟫", tuples(&[na, cb.len(), db.len()]), lab3, |x| {
        let lhs = raw.eval(&coring.act_left(&a.e(x[0]), &cb[x[1]]), &db[x[2]]);
        let mut rhs = Scalar::zero();
        for (idx, s) in cr.lambda.apply(&db[x[2]]).iter() {
            let (y, q) = (idx / right, idx % right);
            rhs = rhs + &(s * &t.structure.basis_value(y, x[0])) * &raw.eval(&cb[x[1]], &Vector::unit(right, q));
        }
        (scalar_vec(lhs), scalar_vec(rhs))
    });
    r.check("⟪𝔠·b,d⟫=⟪𝔠,d⁰⟫(d¹,b)", tuples(&[na, cb.len(), db.len()]), lab3, |x| {
        let lhs = raw.eval(&coring.act_right(&cb[x[1]], &a.e(x[0])), &db[x[2]]);
        let mut rhs = Scalar::zero();
        for (idx, s) in cr.rho.apply(&db[x[2]]).iter() {
            let (q, y) = (idx / nc, idx % nc);
            rhs = rhs + &(s * &t.structure.basis_value(y, x[0])) * &raw.eval(&cb[x[1]], &Vector::unit(right, q));
        }
        (scalar_vec(lhs), scalar_vec(rhs))
    });
    r.check(
        "⟪𝔠,η(x)⟫=(x,ε(𝔠))",
        tuples(&[cb.len(), nc]),
        |x| vec![cl(x[0]), c.name(x[1])],
        |x| {
            let lhs = raw.eval(&cb[x[0]], cr.eta.col(x[1]));
            let rhs = t.structure.value(&c.e(x[1]), &coring.eps(&cb[x[0]]));
            (scalar_vec(lhs), scalar_vec(rhs))
        },
    );
    let cot = cr.cotensor.basis();
    r.check(
        "⟪𝔠,μ(d⊗d′)⟫=⟪𝔠₁,d⟫⟪𝔠₂,d′⟫",
        tuples(&[cb.len(), cot.len()]),
        |x| vec![cl(x[0]), format!("cotensor {}", x[1])],
        |x| {
            let lhs = raw.eval(&cb[x[0]], &cr.mu.apply(&cot[x[1]]));
            let rhs = raw.eval2(&coring.delta(&cb[x[0]]), &cot[x[1]], left, right);
            (scalar_vec(lhs), scalar_vec(rhs))
        },
    );
    r.dim("H⊗̲A", cb.len());
    r.dim("K⊗̲C", db.len());
    Ok(r)
}
