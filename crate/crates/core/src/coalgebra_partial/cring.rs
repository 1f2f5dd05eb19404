use super::{check_partial_module_coalgebra, double_terms, left_defect, PartialModuleCoalgebra};
use crate::error::{Error, Result};
use crate::exactlin::{kernel, map_left, map_right, swap, tidx, Accumulator, Mat, Subspace, Vector};
use crate::report::{tuples, Report};

/// The C-ring `H⊗̲C` of a symmetric partial module coalgebra. Maps act on the ambient `H⊗C`
/// (index `tidx(h, c, dim C)`); `cotensor` and `triple` are the cotensor powers of the carrier inside
/// the ambient tensor powers.
#[derive(Clone, Debug)]
pub struct CRing {
    pub pmc: PartialModuleCoalgebra,
    /// `h⊗c ↦ ε(h₁·c₁)h₂⊗c₂`
    pub under: Mat,
    pub carrier: Subspace,
    /// `h⊗c ↦ h₁·c₁ ⊗ h₂⊗c₂`
    pub lambda: Mat,
    /// `h⊗c ↦ h⊗c₁ ⊗ c₂`
    pub rho: Mat,
    /// `h⊗c⊗k⊗d ↦ ε(h₁·c)ε(k₁·d₁) h₂k₂⊗̲d₂`
    pub mu: Mat,
    /// `c ↦ 1⊗c`
    pub eta: Mat,
    pub cotensor: Subspace,
    pub triple: Subspace,
}

impl CRing {
    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }
}

fn cotensor_power(basis: &[Vector], lam: &[Vector], rh: &[Vector], n: usize, ambient: usize) -> Subspace {
    let d = basis.len();
    let cols: Vec<Vector> = tuples(&[d; 2])
        .into_iter()
        .map(|t| rh[t[0]].tensor(&basis[t[1]]).sub(&basis[t[0]].tensor(&lam[t[1]])))
        .collect();
    let ker = kernel(&Mat::from_columns(ambient * n * ambient, cols));
    Subspace::from_spanning(
        ambient * ambient,
        ker.basis().iter().map(|k| {
            let mut acc = Accumulator::new(ambient * ambient);
            for (idx, x) in k.iter() {
                acc.add_scaled(x, &basis[idx / d].tensor(&basis[idx % d]));
            }
            acc.finish()
        }),
    )
}

fn triple_cotensor(basis: &[Vector], lam: &[Vector], rh: &[Vector], n: usize, ambient: usize) -> Subspace {
    let d = basis.len();
    let block = ambient * n * ambient * ambient;
    let cols: Vec<Vector> = tuples(&[d; 3])
        .into_iter()
        .map(|t| {
            let first = rh[t[0]]
                .tensor(&basis[t[1]])
                .tensor(&basis[t[2]])
                .sub(&basis[t[0]].tensor(&lam[t[1]]).tensor(&basis[t[2]]));
            let second = basis[t[0]]
                .tensor(&rh[t[1]])
                .tensor(&basis[t[2]])
                .sub(&basis[t[0]].tensor(&basis[t[1]]).tensor(&lam[t[2]]));
            Vector::from_pairs(
                2 * block,
                first.iter().map(|(i, x)| (i, x.clone())).chain(second.iter().map(|(i, x)| (block + i, x.clone()))),
            )
        })
        .collect();
    let ker = kernel(&Mat::from_columns(2 * block, cols));
    let cube = ambient * ambient * ambient;
    Subspace::from_spanning(
        cube,
        ker.basis().iter().map(|k| {
            let mut acc = Accumulator::new(cube);
            for (idx, x) in k.iter() {
                let (i, j, l) = (idx / (d * d), (idx / d) % d, idx % d);
                acc.add_scaled(x, &basis[i].tensor(&basis[j]).tensor(&basis[l]));
            }
            acc.finish()
        }),
    )
}

/// Builds `H⊗̲C` with its bicomodule structure, multiplication and unit.
pub fn cring(pmc: &PartialModuleCoalgebra) -> Result<CRing> {
    let r = check_partial_module_coalgebra(pmc)?;
    if !r.passed() {
        return Err(Error::ActionAxiomFailure(Box::new(r)));
    }
    if r.get_flag("symmetric") != Some(true) {
        return Err(Error::NotSymmetric("PLHMC3′ fails".into()));
    }
    let (h, c) = (&pmc.h, &pmc.c);
    let (nh, n) = (h.dim(), c.dim());
    let big = nh * n;
    let under = Mat::from_fn(big, big, |k| {
        let mut acc = Accumulator::new(big);
        for (coef, h1, h2, c1, c2) in double_terms(h, c, k / n, k % n) {
            acc.add(tidx(h2, c2, n), &(&coef * &pmc.eps_act(h1, c1)));
        }
        acc.finish()
    });
    let lambda = Mat::from_fn(n * big, big, |k| {
        let mut acc = Accumulator::new(n * big);
        for (coef, h1, h2, c1, c2) in double_terms(h, c, k / n, k % n) {
            acc.add_scaled(&coef, &pmc.basis(h1, c1).tensor(&Vector::unit(big, tidx(h2, c2, n))));
        }
        acc.finish()
    });
    let rho = Mat::from_fn(big * n, big, |k| {
        let mut acc = Accumulator::new(big * n);
        for (coef, c1, c2) in super::coterms(c, k % n) {
            acc.add(tidx(tidx(k / n, c1, n), c2, n), &coef);
        }
        acc.finish()
    });
    let mu = Mat::from_fn(big, big * big, |idx| {
        let (left, right) = (idx / big, idx % big);
        let (hi, ci, ki, di) = (left / n, left % n, right / n, right % n);
        let mut acc = Accumulator::new(big);
        for (a, h1, h2) in h.delta_terms(hi) {
            let eh = pmc.eps_act(h1, ci);
            if eh.is_zero() {
                continue;
            }
            for (coef, k1, k2, d1, d2) in double_terms(h, c, ki, di) {
                let s = &(&a * &eh) * &(&coef * &pmc.eps_act(k1, d1));
                acc.add_scaled(&s, &h.mul(&h.e(h2), &h.e(k2)).tensor(&c.e(d2)));
            }
        }
        under.apply(&acc.finish())
    });
    let eta = Mat::from_fn(big, n, |x| h.one().tensor(&c.e(x)));
    let carrier = Subspace::from_spanning(big, under.columns().iter().cloned());
    let basis = carrier.basis().to_vec();
    let lam: Vec<Vector> = basis.iter().map(|b| lambda.apply(b)).collect();
    let rh: Vec<Vector> = basis.iter().map(|b| rho.apply(b)).collect();
    let cotensor = cotensor_power(&basis, &lam, &rh, n, big);
    let triple = triple_cotensor(&basis, &lam, &rh, n, big);
    Ok(CRing { pmc: pmc.clone(), under, carrier, lambda, rho, mu, eta, cotensor, triple })
}

/// Bicomodule laws, the cotensor-valued multiplication's colinearity and associativity, and the unit laws.
pub fn check_cring(cr: &CRing) -> Result<Report> {
    let pmc = &cr.pmc;
    let (h, c) = (&pmc.h, &pmc.c);
    let (nh, n) = (h.dim(), c.dim());
    let big = nh * n;
    let d = cr.dim();
    let basis = cr.carrier.basis();
    let hc = |t: &[usize]| vec![h.name(t[0]), c.name(t[1])];
    let bl = |t: &[usize]| vec![format!("b{}", t[0] + 1)];
    let eps = c.counit_mat();
    let zero = |k: usize| Vector::zeros(k);
    let mut r = Report::new("C-ring");
    let ub = |hi: usize, ci: usize| cr.under.col(tidx(hi, ci, n)).clone();
    r.check("h⊗̲c redundancy", tuples(&[nh, n]), hc, |t| (cr.under.apply(&ub(t[0], t[1])), ub(t[0], t[1])));
    r.check("λ(h⊗̲c)=h₁·c₁⊗h₂⊗̲c₂", tuples(&[nh, n]), hc, |t| {
        let mut acc = Accumulator::new(n * big);
        for (coef, h1, h2, c1, c2) in double_terms(h, c, t[0], t[1]) {
            acc.add_scaled(&coef, &pmc.basis(h1, c1).tensor(&ub(h2, c2)));
        }
        (cr.lambda.apply(&ub(t[0], t[1])), acc.finish())
    });
    r.check("ρ(h⊗̲c)=h⊗̲c₁⊗c₂", tuples(&[nh, n]), hc, |t| {
        let mut acc = Accumulator::new(big * n);
        for (coef, c1, c2) in super::coterms(c, t[1]) {
            acc.add_scaled(&coef, &ub(t[0], c1).tensor(&c.e(c2)));
        }
        (cr.rho.apply(&ub(t[0], t[1])), acc.finish())
    });
    r.check("λ lands in C⊗carrier", tuples(&[d]), bl, |t| {
        (left_defect(&cr.lambda.apply(&basis[t[0]]), &cr.carrier), zero(n * big))
    });
    r.check("ρ lands in carrier⊗C", tuples(&[d]), bl, |t| {
        let flipped = swap(&cr.rho.apply(&basis[t[0]]), big, n);
        (left_defect(&flipped, &cr.carrier), zero(n * big))
    });
    r.check("(I⊗λ)∘λ=(Δ⊗I)∘λ", tuples(&[d]), bl, |t| {
        let l = cr.lambda.apply(&basis[t[0]]);
        (map_right(&cr.lambda, &l), map_left(c.comult(), &l, big))
    });
    r.check("(ε⊗I)∘λ=I", tuples(&[d]), bl, |t| {
        (map_left(&eps, &cr.lambda.apply(&basis[t[0]]), big), basis[t[0]].clone())
    });
    r.check("(ρ⊗I)∘ρ=(I⊗Δ)∘ρ", tuples(&[d]), bl, |t| {
        let p = cr.rho.apply(&basis[t[0]]);
        (map_left(&cr.rho, &p, n), map_right(c.comult(), &p))
    });
    r.check("(I⊗ε)∘ρ=I", tuples(&[d]), bl, |t| {
        (map_right(&eps, &cr.rho.apply(&basis[t[0]])), basis[t[0]].clone())
    });
    r.check("(λ⊗I)∘ρ=(I⊗ρ)∘λ", tuples(&[d]), bl, |t| {
        (map_left(&cr.lambda, &cr.rho.apply(&basis[t[0]]), n), map_right(&cr.rho, &cr.lambda.apply(&basis[t[0]])))
    });
    let cot = cr.cotensor.basis();
    let xl = |t: &[usize]| vec![format!("x{}", t[0] + 1)];
    r.check("μ lands in carrier", tuples(&[cot.len()]), xl, |t| {
        (cr.carrier.reduce(&cr.mu.apply(&cot[t[0]])), zero(big))
    });
    r.check("λ∘μ=(I⊗μ)∘(λ⊗I)", tuples(&[cot.len()]), xl, |t| {
        let x = &cot[t[0]];
        (cr.lambda.apply(&cr.mu.apply(x)), map_right(&cr.mu, &map_left(&cr.lambda, x, big)))
    });
    r.check("ρ∘μ=(μ⊗I)∘(I⊗ρ)", tuples(&[cot.len()]), xl, |t| {
        let x = &cot[t[0]];
        (cr.rho.apply(&cr.mu.apply(x)), map_left(&cr.mu, &map_right(&cr.rho, x), n))
    });
    let tri = cr.triple.basis();
    r.check(
        "μ∘(μ⊗I)=μ∘(I⊗μ)",
        tuples(&[tri.len()]),
        |t| vec![format!("y{}", t[0] + 1)],
        |t| {
            let y = &tri[t[0]];
            (cr.mu.apply(&map_left(&cr.mu, y, big)), cr.mu.apply(&map_right(&cr.mu, y)))
        },
    );
    let cl = |t: &[usize]| c.labels(t);
    r.check("η lands in carrier", tuples(&[n]), cl, |t| (cr.carrier.reduce(cr.eta.col(t[0])), zero(big)));
    r.check("λ∘η=(I⊗η)∘Δ", tuples(&[n]), cl, |t| {
        (cr.lambda.apply(cr.eta.col(t[0])), map_right(&cr.eta, &c.delta(&c.e(t[0]))))
    });
    r.check("ρ∘η=(η⊗I)∘Δ", tuples(&[n]), cl, |t| {
        (cr.rho.apply(cr.eta.col(t[0])), map_left(&cr.eta, &c.delta(&c.e(t[0])), n))
    });
    let left_unit = |b: &Vector| map_left(&cr.eta, &cr.lambda.apply(b), big);
    let right_unit = |b: &Vector| map_right(&cr.eta, &cr.rho.apply(b));
    r.check("(η⊗I)∘λ lands in □", tuples(&[d]), bl, |t| {
        (cr.cotensor.reduce(&left_unit(&basis[t[0]])), zero(big * big))
    });
    r.check("(I⊗η)∘ρ lands in □", tuples(&[d]), bl, |t| {
        (cr.cotensor.reduce(&right_unit(&basis[t[0]])), zero(big * big))
    });
    r.check("μ∘(η⊗I)∘λ=I", tuples(&[d]), bl, |t| (cr.mu.apply(&left_unit(&basis[t[0]])), basis[t[0]].clone()));
    r.check("μ∘(I⊗η)∘ρ=I", tuples(&[d]), bl, |t| {
        (cr.mu.apply(&right_unit(&basis[t[0]])), basis[t[0]].clone())
    });
    r.dim("carrier", d);
    r.dim("cotensor", cot.len());
    r.dim("triple cotensor", tri.len());
    Ok(r)
}
