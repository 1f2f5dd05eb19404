use super::{function_hopf_algebroid, StarFunctor};
use crate::error::{Error, Result};
use crate::exactlin::{kernel, solve, tidx, Accumulator, Mat, Scalar, Vector};
use crate::hopf_algebroid::{Balanced2, HopfAlgebroid, Side};
use crate::partial_coactions::PartialCoaction;
use crate::report::{tuples, Report};
use crate::structures::{dual_group_hopf, HopfPackage};

/// `Π(a⊗h) = s(a)F(h)` as a matrix `A⊗H → ℋ`.
pub fn pi_matrix(f: &Mat, h: &HopfPackage, hh: &HopfAlgebroid) -> Mat {
    let (m, n) = (hh.base_dim(), h.dim());
    Mat::from_fn(hh.dim(), m * n, |k| hh.total.mul(hh.s_l.col(k / n), f.col(k % n)))
}

/// The splitting `σ(y) = e·Π⁻¹(y)` from the unique `e` with `Π(e) = 1` and `e·ker Π = 0`, if that `e` is idempotent.
pub fn canonical_splitting(f: &Mat, h: &HopfPackage, hh: &HopfAlgebroid) -> Option<Mat> {
    let ah = hh.base.tensor(&h.algebra);
    let pi = pi_matrix(f, h, hh);
    let big = ah.dim();
    let ker = kernel(&pi);
    let mut rows = pi.row_vectors();
    let mut rhs: Vec<Scalar> = hh.total.unit().to_dense();
    for k in ker.basis() {
        let lk = ah.left_mult(k);
        rows.extend(lk.row_vectors());
        rhs.extend(std::iter::repeat(Scalar::zero()).take(big));
    }
    let system = Mat::from_rows(big, &rows);
    let e = solve(&system, &Vector::from_dense(&rhs))?;
    if ah.mul(&e, &e) != e {
        return None;
    }
    let cols: Option<Vec<Vector>> = (0..hh.dim()).map(|y| solve(&pi, &hh.total.e(y)).map(|p| ah.mul(&e, &p))).collect();
    Some(Mat::from_columns(big, cols?))
}

/// DSI1–DSI3 for an algebra map `F: H → ℋ` (columns `F(h)`), with `σ: ℋ → A⊗H` if supplied.
pub fn check_dual_star_injective(f: &Mat, h: &HopfPackage, hh: &HopfAlgebroid, sigma: Option<&Mat>) -> Result<Report> {
    if !h.is_commutative() {
        return Err(Error::PreconditionFailure("H not commutative".into()));
    }
    if !hh.total.is_commutative() || !hh.base.is_commutative() {
        return Err(Error::PreconditionFailure("Hopf algebroid not commutative".into()));
    }
    let (m, n, d) = (hh.base_dim(), h.dim(), hh.dim());
    if f.nrows() != d || f.ncols() != n {
        return Err(Error::DimensionMismatch("F must map H into the algebroid".into()));
    }
    let t = &hh.total;
    let hl = |x: &[usize]| h.labels(x);
    let mut r = Report::new("dual star injectivity");
    r.check("DSI1 F(xy)=F(x)F(y)", tuples(&[n, n]), hl, |x| {
        (f.apply(&h.mul(&h.e(x[0]), &h.e(x[1]))), t.mul(f.col(x[0]), f.col(x[1])))
    });
    r.check("DSI1 F(1)=1", vec![vec![]], |_| vec![], |_| (f.apply(h.one()), t.unit().clone()));
    r.check("DSI1 ε̃∘F=η_A∘ε", tuples(&[n]), hl, |x| {
        (hh.eps_l.apply(f.col(x[0])), hh.base.unit().scale(&h.eps(&h.e(x[0]))))
    });
    let b2 = Balanced2::new(&hh.bimodule(Side::Left));
    r.check("DSI1 Δ̃∘F=π∘(F⊗F)∘Δ", tuples(&[n]), hl, |x| {
        let mut acc = Accumulator::new(d * d);
        for (c, i, j) in h.delta_terms(x[0]) {
            acc.add_scaled(&c, &f.col(i).tensor(f.col(j)));
        }
        (b2.project(&hh.delta_l.apply(f.col(x[0]))), b2.project(&acc.finish()))
    });
    r.check("DSI1 S̃∘F=F∘S", tuples(&[n]), hl, |x| (hh.antipode.apply(f.col(x[0])), f.apply(&h.s(&h.e(x[0])))));
    let pi = pi_matrix(f, h, hh);
    let rank = pi.rank();
    r.check_bool("DSI2 ℋ=s(A)F(H)", rank == d, vec![], vec![]);
    r.dim("rank Π", rank);
    r.dim("A⊗H", m * n);
    r.flag("Π isomorphism", rank == m * n && rank == d);
    let canonical = canonical_splitting(f, h, hh);
    let chosen = sigma.or(canonical.as_ref());
    match chosen {
        Some(s) if s.nrows() == m * n && s.ncols() == d => {
            let ah = hh.base.tensor(&h.algebra);
            let tl = |x: &[usize]| t.labels(x);
            r.check("DSI3 Π∘σ=id", tuples(&[d]), tl, |x| (pi.apply(s.col(x[0])), t.e(x[0])));
            r.check("DSI3 σ(xy)=σ(x)σ(y)", tuples(&[d, d]), tl, |x| {
                (s.apply(&t.mul(&t.e(x[0]), &t.e(x[1]))), ah.mul(s.col(x[0]), s.col(x[1])))
            });
            r.flag("DSI3 determined", true);
            if let (Some(given), Some(c)) = (sigma, canonical.as_ref()) {
                r.flag("splittings agree", given.compose(&hh.t_l) == c.compose(&hh.t_l));
            }
        }
        Some(_) => return Err(Error::DimensionMismatch("σ must map the algebroid into A⊗H".into())),
        None => {
            r.flag("DSI3 determined", false);
            r.note("DSI3 undetermined: the canonical splitting candidate does not exist");
        }
    }
    Ok(r)
}

/// `ρ̄ = σ∘t` on the base of `ℋ`.
pub fn coaction_from_dual_star(f: &Mat, h: &HopfPackage, sigma: &Mat, hh: &HopfAlgebroid) -> Result<PartialCoaction> {
    let r = check_dual_star_injective(f, h, hh, Some(sigma))?;
    if !r.passed() {
        return Err(Error::DualStarFailure(Box::new(r)));
    }
    PartialCoaction::new(h.clone(), hh.base.clone(), sigma.compose(&hh.t_l))
}

/// `Fun(𝒢)`, `F̂(p_g) = Σ_{F(γ)=g} χ_γ` and `σ(χ_γ) = χ_{t(γ)} ⊗ p_{F(γ)}` for a functor `F: 𝒢 → G`.
pub fn induced_dual_star(func: &StarFunctor) -> Result<(HopfAlgebroid, HopfPackage, Mat, Mat)> {
    let hh = function_hopf_algebroid(&func.domain)?;
    let h = dual_group_hopf(&func.codomain);
    let (n, k) = (func.domain.arrows(), func.codomain.order());
    let one = Scalar::one();
    let f = Mat::from_fn(n, k, |g| {
        Vector::from_pairs(n, (0..n).filter(|&a| func.labels[a] == g).map(|a| (a, one.clone())))
    });
    let m = func.domain.objects;
    let sigma = Mat::from_fn(m * k, n, |a| Vector::unit(m * k, tidx(func.domain.target[a], func.labels[a], k)));
    Ok((hh, h, f, sigma))
}

/// Whether `Π` is a linear isomorphism, the criterion for the induced coaction to be global.
pub fn pi_is_isomorphism(f: &Mat, h: &HopfPackage, hh: &HopfAlgebroid) -> bool {
    let pi = pi_matrix(f, h, hh);
    pi.nrows() == pi.ncols() && pi.rank() == pi.nrows()
}
