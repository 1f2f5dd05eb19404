use super::algebroid::HopfAlgebroid;
use crate::error::{Error, Result};
use crate::exactlin::{tidx, Accumulator, Mat, Vector};
use crate::partial_coactions::{check_partial_coaction, PartialCoaction};

/// The split Hopf algebroid `A⊗K` of a global coaction of a commutative `K` on a commutative `A`,
/// in the tensor basis `tidx(a, k, dim K)`.
pub fn split_hopf_algebroid(pc: &PartialCoaction) -> Result<HopfAlgebroid> {
    let r = check_partial_coaction(pc)?;
    if !r.passed() {
        return Err(Error::CoactionAxiomFailure(Box::new(r)));
    }
    if !pc.k.is_commutative() {
        return Err(Error::PreconditionFailure("K not commutative".into()));
    }
    if !pc.a.is_commutative() {
        return Err(Error::PreconditionFailure("base algebra not commutative".into()));
    }
    if r.get_flag("global") != Some(true) {
        return Err(Error::PreconditionFailure("coaction not global".into()));
    }
    let (m, n) = (pc.a.dim(), pc.k.dim());
    let d = m * n;
    let total = pc.a.tensor(&pc.k.algebra);
    let one_a = pc.a.unit();
    let s = Mat::from_fn(d, m, |a| pc.a.e(a).tensor(pc.k.one()));
    let t = Mat::from_fn(d, m, |a| pc.apply(&pc.a.e(a)));
    let delta = Mat::from_fn(d * d, d, |x| {
        let (a, h) = (x / n, x % n);
        let mut acc = Accumulator::new(d * d);
        for (c, h1, h2) in pc.k.delta_terms(h) {
            acc.add_scaled(&c, &Vector::unit(d, tidx(a, h1, n)).tensor(&one_a.tensor(&pc.k.e(h2))));
        }
        acc.finish()
    });
    let eps = Mat::from_fn(m, d, |x| pc.a.e(x / n).scale(&pc.k.eps(&pc.k.e(x % n))));
    let antipode = Mat::from_fn(d, d, |x| {
        let (a, h) = (x / n, x % n);
        total.mul(&pc.apply(&pc.a.e(a)), &one_a.tensor(&pc.k.s(&pc.k.e(h))))
    });
    Ok(HopfAlgebroid {
        total,
        base: pc.a.clone(),
        s_l: s.clone(),
        t_l: t.clone(),
        s_r: t,
        t_r: s,
        delta_l: delta.clone(),
        eps_l: eps.clone(),
        delta_r: delta,
        eps_r: eps,
        antipode,
    })
}
