//! Partial comodule algebras, the reduced tensor `A⊗̲K`, its split coring, the
//! partial split Hopf algebroid and the left dual ring comparison.

use crate::error::{Error, Result};
use crate::exactlin::{kernel, map_left, map_right, tidx, Accumulator, Mat, Scalar, Subspace, Vector};
use crate::hopf_algebroid::{ACoring, Bimodule, HopfAlgebroid};
use crate::partial_actions::{ideal_of, require_central_idempotent, smash_product, PartialAction};
use crate::report::{combination_label, tuples, Report};
use crate::structures::{check_pairing, op_cop_transformers, AlgebraSC, HopfPackage, OpCop, Pairing, PairingKind};

/// A right partial coaction `ρ(a) = a⁰ ⊗ a¹`; `rho` sends `e_a` into `A ⊗ K` (index `a·dim K + k`).
#[derive(Clone, Debug)]
pub struct PartialCoaction {
    pub k: HopfPackage,
    pub a: AlgebraSC,
    pub rho: Mat,
}

impl PartialCoaction {
    pub fn new(k: HopfPackage, a: AlgebraSC, rho: Mat) -> Result<Self> {
        if rho.ncols() != a.dim() || rho.nrows() != a.dim() * k.dim() {
            return Err(Error::DimensionMismatch(format!(
                "coaction is {}x{}, expected {}x{}",
                rho.nrows(),
                rho.ncols(),
                a.dim() * k.dim(),
                a.dim()
            )));
        }
        Ok(PartialCoaction { k, a, rho })
    }

    pub fn from_fn(k: HopfPackage, a: AlgebraSC, f: impl Fn(usize) -> Vector) -> Result<Self> {
        let rho = Mat::from_fn(a.dim() * k.dim(), a.dim(), f);
        Self::new(k, a, rho)
    }

    pub fn apply(&self, x: &Vector) -> Vector {
        self.rho.apply(x)
    }

    /// `ρ(1_A)`
    pub fn rho_one(&self) -> Vector {
        self.apply(self.a.unit())
    }

    /// The algebra `A ⊗ K`.
    pub fn ak(&self) -> AlgebraSC {
        self.a.tensor(&self.k.algebra)
    }

    /// `a ⊗ ξ` as a vector of `A ⊗ K`.
    pub fn pure(&self, a: &Vector, xi: &Vector) -> Vector {
        a.tensor(xi)
    }

    /// `ρ(1_A) = 1_A ⊗ 1_K`.
    pub fn is_global(&self) -> bool {
        self.rho_one() == self.a.unit().tensor(self.k.one())
    }

    /// Raw `(coefficient, a, ξ)` terms of a vector of `A ⊗ K`.
    pub fn terms(&self, v: &Vector) -> Vec<(Scalar, usize, usize)> {
        let nk = self.k.dim();
        v.iter().map(|(i, c)| (c.clone(), i / nk, i % nk)).collect()
    }
}

fn coassoc_sides(pc: &PartialCoaction, ak: &AlgebraSC, x: usize, symmetric: bool) -> (Vector, Vector) {
    let nk = pc.k.dim();
    let r = pc.apply(&pc.a.e(x));
    let lhs = map_left(&pc.rho, &r, nk);
    let spread = map_right(pc.k.coalgebra.comult(), &r);
    let factor = pc.rho_one().tensor(pc.k.one());
    let rhs = if symmetric {
        ak.tensor_mul(&pc.k.algebra, &factor, &spread)
    } else {
        ak.tensor_mul(&pc.k.algebra, &spread, &factor)
    };
    (lhs, rhs)
}

/// PRHCA1–PRHCA3 on all basis elements; PRHCA4 decides the `symmetric` flag.
pub fn check_partial_coaction(pc: &PartialCoaction) -> Result<Report> {
    let (m, nk) = (pc.a.dim(), pc.k.dim());
    if pc.rho.nrows() != m * nk || pc.rho.ncols() != m {
        return Err(Error::DimensionMismatch("partial coaction shapes".into()));
    }
    let a = &pc.a;
    let ak = pc.ak();
    let mut r = Report::new("partial coaction");
    r.check(
        "PRHCA1",
        tuples(&[m, m]),
        |t| a.labels(t),
        |t| {
            let (x, y) = (a.e(t[0]), a.e(t[1]));
            (pc.apply(&a.mul(&x, &y)), ak.mul(&pc.apply(&x), &pc.apply(&y)))
        },
    );
    r.check(
        "PRHCA2",
        tuples(&[m]),
        |t| a.labels(t),
        |t| (map_right(&pc.k.coalgebra.counit_mat(), &pc.apply(&a.e(t[0]))), a.e(t[0])),
    );
    r.check("PRHCA3", tuples(&[m]), |t| a.labels(t), |t| coassoc_sides(pc, &ak, t[0], false));
    let mut sym = Report::new("symmetry");
    sym.check("PRHCA4", tuples(&[m]), |t| a.labels(t), |t| coassoc_sides(pc, &ak, t[0], true));
    if let Some(w) = sym.axioms[0].witnesses.first() {
        r.note(format!("PRHCA4 fails at ({})", w.labels.join(",")));
    }
    r.flag("symmetric", sym.passed());
    r.flag("global", pc.is_global());
    Ok(r)
}

pub(crate) fn require_passing(pc: &PartialCoaction) -> Result<Report> {
    let r = check_partial_coaction(pc)?;
    if r.passed() {
        Ok(r)
    } else {
        Err(Error::CoactionAxiomFailure(Box::new(r)))
    }
}

/// `ρ̲(a) = (e ⊗ 1)ρ(a)` on the ideal `eB` of a global comodule algebra.
pub fn restricted_coaction(global: &PartialCoaction, e: &Vector) -> Result<PartialCoaction> {
    require_central_idempotent(&global.a, e)?;
    if !global.is_global() {
        return Err(Error::NotGlobal);
    }
    let (sub, alg) = ideal_of(&global.a, e)?;
    let nk = global.k.dim();
    let ak = global.ak();
    let e1 = e.tensor(global.k.one());
    let d = sub.dim();
    PartialCoaction::from_fn(global.k.clone(), alg, |j| {
        let v = ak.mul(&e1, &global.apply(&sub.basis()[j]));
        let mut acc = Accumulator::new(d * nk);
        for k in 0..nk {
            let slice = Vector::from_pairs(
                global.a.dim(),
                v.iter().filter(|(i, _)| i % nk == k).map(|(i, c)| (i / nk, c.clone())),
            );
            let c = sub.coords(&slice).expect("(e⊗1)ρ(a) lies in eB ⊗ K");
            for (i, x) in c.iter() {
                acc.add(tidx(i, k, nk), x);
            }
        }
        acc.finish()
    })
}

/// The unital ideal `(A ⊗ K)ρ(1_A)` in canonical coordinates.
#[derive(Clone, Debug)]
pub struct ReducedTensor {
    pub carrier: Subspace,
    pub algebra: AlgebraSC,
    pub rho_one: Vector,
    ak: AlgebraSC,
}

impl ReducedTensor {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `x ↦ x ρ(1_A)` on `A ⊗ K`.
    pub fn pi(&self, v: &Vector) -> Vector {
        self.ak.mul(v, &self.rho_one)
    }

    pub fn coords(&self, v: &Vector) -> Vector {
        self.carrier.coords(v).expect("element of the reduced tensor")
    }

    pub fn embed(&self, c: &Vector) -> Vector {
        self.carrier.embed(c)
    }

    /// Class of `a ⊗ ξ`, i.e. `a1⁰ ⊗ ξ1¹`, in carrier coordinates.
    pub fn class(&self, v: &Vector) -> Vector {
        self.coords(&self.pi(v))
    }
}

/// Builds `A⊗̲K`; refuses coactions that fail PRHCA1–PRHCA3.
pub fn reduced_tensor(pc: &PartialCoaction) -> Result<ReducedTensor> {
    require_passing(pc)?;
    let ak = pc.ak();
    let n = ak.dim();
    let r1 = pc.rho_one();
    let carrier = Subspace::from_spanning(n, (0..n).map(|i| ak.mul(&ak.e(i), &r1)));
    let names = carrier.basis().iter().map(|b| combination_label(b, |i| ak.name(i))).collect();
    let algebra = ak.restrict(&carrier, &r1, Some(names))?;
    Ok(ReducedTensor { carrier, algebra, rho_one: r1, ak })
}

struct SplitData {
    rt: ReducedTensor,
    bimodule: Bimodule,
    comult: Mat,
    counit: Mat,
}

fn split_data(pc: &PartialCoaction) -> Result<SplitData> {
    let rt = reduced_tensor(pc)?;
    let (m, d) = (pc.a.dim(), rt.dim());
    let ak = &rt.ak;
    let basis = rt.carrier.basis().to_vec();
    let left = (0..m)
        .map(|a| {
            let la = pc.a.e(a).tensor(pc.k.one());
            Mat::from_fn(d, d, |x| rt.coords(&ak.mul(&la, &basis[x])))
        })
        .collect();
    let right = (0..m)
        .map(|a| {
            let ra = pc.apply(&pc.a.e(a));
            Mat::from_fn(d, d, |x| rt.coords(&ak.mul(&basis[x], &ra)))
        })
        .collect();
    let one_a = pc.a.unit();
    let mut comult = Vec::with_capacity(d);
    let mut counit = Vec::with_capacity(d);
    for b in &basis {
        let mut dl = Accumulator::new(d * d);
        let mut el = Accumulator::new(m);
        for (c, a, xi) in pc.terms(b) {
            let ea = pc.a.e(a);
            for (e, i, j) in pc.k.delta_terms(xi) {
                let l = rt.class(&ea.tensor(&pc.k.e(i)));
                let r = rt.class(&one_a.tensor(&pc.k.e(j)));
                dl.add_scaled(&(&c * &e), &l.tensor(&r));
            }
            el.add_scaled(&(&c * &pc.k.eps(&pc.k.e(xi))), &ea);
        }
        comult.push(dl.finish());
        counit.push(el.finish());
    }
    Ok(SplitData {
        bimodule: Bimodule { dim: d, left, right },
        comult: Mat::from_columns(d * d, comult),
        counit: Mat::from_columns(m, counit),
        rt,
    })
}

/// The `A`-coring structure on `A⊗̲K`: `b·x·b′ = (b⊗1) x ρ(b′)`, `Δ̃`, `ε̃`.
pub fn split_coring(pc: &PartialCoaction) -> Result<ACoring> {
    let s = split_data(pc)?;
    Ok(ACoring {
        base: pc.a.clone(),
        bimodule: s.bimodule,
        comult: s.comult,
        counit: s.counit,
        names: s.rt.algebra.names().to_vec(),
    })
}

/// The partial split Hopf algebroid on `A⊗̲K` over `A`.
pub fn partial_split_hopf_algebroid(pc: &PartialCoaction) -> Result<HopfAlgebroid> {
    let r = require_passing(pc)?;
    if !pc.k.is_commutative() {
        return Err(Error::PreconditionFailure("K not commutative".into()));
    }
    if !pc.a.is_commutative() {
        return Err(Error::PreconditionFailure("base algebra not commutative".into()));
    }
    if r.get_flag("symmetric") != Some(true) {
        return Err(Error::PreconditionFailure("partial coaction not symmetric".into()));
    }
    let s = split_data(pc)?;
    let rt = &s.rt;
    let (m, d) = (pc.a.dim(), rt.dim());
    let ak = &rt.ak;
    let source = Mat::from_fn(d, m, |a| rt.class(&pc.a.e(a).tensor(pc.k.one())));
    let target = Mat::from_fn(d, m, |a| rt.coords(&pc.apply(&pc.a.e(a))));
    let antipode = Mat::from_fn(d, d, |x| {
        let mut acc = Accumulator::new(ak.dim());
        for (c, a, xi) in pc.terms(&rt.carrier.basis()[x]) {
            let twisted = ak.mul(&pc.apply(&pc.a.e(a)), &pc.a.unit().tensor(&pc.k.s(&pc.k.e(xi))));
            acc.add_scaled(&c, &rt.pi(&twisted));
        }
        rt.coords(&acc.finish())
    });
    Ok(HopfAlgebroid {
        total: rt.algebra.clone(),
        base: pc.a.clone(),
        s_l: source.clone(),
        t_l: target.clone(),
        s_r: target,
        t_r: source,
        delta_l: s.comult.clone(),
        eps_l: s.counit.clone(),
        delta_r: s.comult,
        eps_r: s.counit,
        antipode,
    })
}

/// Compares the left dual ring of `split_coring(pc)` with `(A^op # H^cop)^op` through
/// `Θ(a#h)(x) = a·((id⊗⟨h,−⟩)(x))`, reporting which algebra-isomorphism laws hold.
pub fn left_dual_ring_compare(pc: &PartialCoaction, pairing: &Pairing, h: &HopfPackage) -> Result<Report> {
    let pr = check_pairing(pairing, PairingKind::Hopf(h, &pc.k), false)?;
    if !pr.passed() {
        return Err(Error::PairingAxiomFailure(Box::new(pr)));
    }
    let coring = split_coring(pc)?;
    let rt = reduced_tensor(pc)?;
    let (m, d) = (pc.a.dim(), coring.dim());
    let a = &pc.a;
    // left A-linear maps C -> A, as vectors of the m·d entries (row a, column x) at index x·m + a
    let mut rows = Vec::new();
    for b in 0..m {
        for x in 0..d {
            let bx = coring.bimodule.left[b].col(x);
            for out in 0..m {
                let mut acc = Accumulator::new(m * d);
                for (y, c) in bx.iter() {
                    acc.add(y * m + out, c);
                }
                let prod = a.left_mult(&a.e(b));
                for (o, c) in prod.row_vectors()[out].iter() {
                    acc.add(x * m + o, &-c.clone());
                }
                rows.push(acc.finish());
            }
        }
    }
    let dual = kernel(&Mat::from_rows(m * d, &rows));
    let from_mat = |f: &Mat| {
        Vector::from_pairs(
            m * d,
            (0..d).flat_map(|x| f.col(x).iter().map(move |(o, c)| (x * m + o, c.clone())).collect::<Vec<_>>()),
        )
    };
    let conv = |f: &Mat, g: &Mat| {
        Mat::from_fn(m, d, |x| {
            let mut acc = Accumulator::new(m);
            for (k, c) in coring.comult.col(x).iter() {
                let (i, j) = (k / d, k % d);
                let moved = coring.bimodule.act_right(&Vector::unit(d, i), f.col(j));
                acc.add_scaled(c, &g.apply(&moved));
            }
            acc.finish()
        })
    };
    let nh = h.dim();
    let act = Mat::from_fn(m, nh * m, |k| {
        let (hi, ai) = (k / m, k % m);
        let mut acc = Accumulator::new(m);
        for (c, b, xi) in pc.terms(&pc.apply(&a.e(ai))) {
            acc.add(b, &(&c * &pairing.basis_value(hi, xi)));
        }
        acc.finish()
    });
    let hcop = op_cop_transformers(h, OpCop::Cop);
    let pa = PartialAction::new(hcop, a.opposite(), act)?;
    let mut r = Report::new("left dual ring");
    let sp = match smash_product(&pa) {
        Ok(sp) => sp,
        Err(Error::ActionAxiomFailure(rep)) => {
            r.absorb("action", *rep);
            return Ok(r);
        }
        Err(e) => return Err(e),
    };
    let target = sp.algebra.opposite();
    let ds = sp.dim();
    let theta = |y: &Vector| {
        let raw = sp.embed(y);
        Mat::from_fn(m, d, |x| {
            let mut acc = Accumulator::new(m);
            for (c, ai, hi) in raw.iter().map(|(k, c)| (c.clone(), k / nh, k % nh)) {
                for (e, b, xi) in pc.terms(&rt.carrier.basis()[x]) {
                    let w = &(&c * &e) * &pairing.basis_value(hi, xi);
                    acc.add_scaled(&w, &a.mul(&a.e(ai), &a.e(b)));
                }
            }
            acc.finish()
        })
    };
    let images: Vec<Mat> = (0..ds).map(|y| theta(&target.e(y))).collect();
    r.check(
        "Θ lands in *C",
        tuples(&[ds]),
        |t| target.labels(t),
        |t| {
            let v = from_mat(&images[t[0]]);
            (dual.reduce(&v), Vector::zeros(m * d))
        },
    );
    let rank = Mat::from_columns(m * d, images.iter().map(from_mat).collect()).rank();
    r.check_bool("Θ injective", rank == ds, vec![], vec![]);
    r.check_bool("Θ surjective", rank == dual.dim(), vec![], vec![]);
    r.check("Θ(1)=ε", vec![vec![]], |_| vec![], |_| (from_mat(&theta(target.unit())), from_mat(&coring.counit)));
    r.check(
        "Θ(xy)=Θ(x)Θ(y)",
        tuples(&[ds, ds]),
        |t| target.labels(t),
        |t| {
            let p = target.mul(&target.e(t[0]), &target.e(t[1]));
            (from_mat(&theta(&p)), from_mat(&conv(&images[t[0]], &images[t[1]])))
        },
    );
    r.dim("*C", dual.dim());
    r.dim("(A^op#H^cop)^op", ds);
    r.flag("algebra isomorphism", r.passed());
    Ok(r)
}

#[cfg(test)]
mod tests;
