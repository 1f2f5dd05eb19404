use super::{FiniteGroup, SetPartialAction};
use crate::error::{Error, Result};
use crate::exactlin::{Mat, Vector};
use crate::hopf_algebroid::HopfAlgebroid;
use crate::report::Report;
use crate::structures::{function_algebra, AlgebraSC};

/// A finite groupoid. `compose[γ][δ]` is `γδ` when `s(γ) = t(δ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupoid {
    pub objects: usize,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub compose: Vec<Vec<Option<usize>>>,
    pub inverse: Vec<usize>,
    pub units: Vec<usize>,
    pub names: Vec<String>,
}

impl FiniteGroupoid {
    pub fn arrows(&self) -> usize {
        self.source.len()
    }

    /// The discrete groupoid on `n` objects.
    pub fn discrete(n: usize) -> Self {
        FiniteGroupoid {
            objects: n,
            source: (0..n).collect(),
            target: (0..n).collect(),
            compose: (0..n).map(|i| (0..n).map(|j| (i == j).then_some(i)).collect()).collect(),
            inverse: (0..n).collect(),
            units: (0..n).collect(),
            names: (0..n).map(|i| format!("1_{}", i + 1)).collect(),
        }
    }

    /// A group as a one-object groupoid.
    pub fn of_group(g: &FiniteGroup) -> Self {
        let k = g.order();
        FiniteGroupoid {
            objects: 1,
            source: vec![0; k],
            target: vec![0; k],
            compose: (0..k).map(|a| (0..k).map(|b| Some(g.mul(a, b))).collect()).collect(),
            inverse: (0..k).map(|a| g.inv(a)).collect(),
            units: vec![g.unit()],
            names: g.names().to_vec(),
        }
    }

    /// Arrows whose source is `x`.
    pub fn star(&self, x: usize) -> Vec<usize> {
        (0..self.arrows()).filter(|&a| self.source[a] == x).collect()
    }
}

/// Groupoid axioms: composability, associativity, units and inverses.
pub fn check_groupoid(gd: &FiniteGroupoid) -> Result<Report> {
    let n = gd.arrows();
    if gd.target.len() != n
        || gd.compose.len() != n
        || gd.inverse.len() != n
        || gd.names.len() != n
        || gd.units.len() != gd.objects
    {
        return Err(Error::MalformedTable("groupoid table sizes".into()));
    }
    if gd.compose.iter().any(|r| r.len() != n) {
        return Err(Error::MalformedTable("composition table is not square".into()));
    }
    let one = |a: Option<usize>| match a {
        Some(i) => Vector::unit(n + 1, i),
        None => Vector::unit(n + 1, n),
    };
    let label = |t: &[usize]| t.iter().map(|&a| gd.names[a].clone()).collect::<Vec<_>>();
    let pairs: Vec<Vec<usize>> = (0..n).flat_map(|a| (0..n).map(move |b| vec![a, b])).collect();
    let mut r = Report::new("groupoid");
    r.check("composable iff s(γ)=t(δ)", pairs.clone(), label, |t| {
        let defined = gd.compose[t[0]][t[1]].is_some();
        (Vector::from_ints(&[i64::from(defined)]), Vector::from_ints(&[i64::from(gd.source[t[0]] == gd.target[t[1]])]))
    });
    r.check("s(γδ)=s(δ), t(γδ)=t(γ)", pairs, label, |t| match gd.compose[t[0]][t[1]] {
        Some(c) => (
            Vector::from_ints(&[gd.source[c] as i64, gd.target[c] as i64]),
            Vector::from_ints(&[gd.source[t[1]] as i64, gd.target[t[0]] as i64]),
        ),
        None => (Vector::zeros(2), Vector::zeros(2)),
    });
    let triples: Vec<Vec<usize>> = crate::report::tuples(&[n, n, n]);
    r.check("(γδ)ε=γ(δε)", triples, label, |t| {
        let c = |a: Option<usize>, b: Option<usize>| match (a, b) {
            (Some(a), Some(b)) => gd.compose[a][b],
            _ => None,
        };
        (one(c(gd.compose[t[0]][t[1]], Some(t[2]))), one(c(Some(t[0]), gd.compose[t[1]][t[2]])))
    });
    let singles: Vec<Vec<usize>> = (0..n).map(|a| vec![a]).collect();
    r.check("1_t(γ)γ=γ=γ1_s(γ)", singles.clone(), label, |t| {
        let a = t[0];
        let l = gd.compose[gd.units[gd.target[a]]][a];
        let rr = gd.compose[a][gd.units[gd.source[a]]];
        (one(l).tensor(&one(rr)), one(Some(a)).tensor(&one(Some(a))))
    });
    r.check("γγ⁻¹=1_t(γ), γ⁻¹γ=1_s(γ)", singles, label, |t| {
        let a = t[0];
        let i = gd.inverse[a];
        (
            one(gd.compose[a][i]).tensor(&one(gd.compose[i][a])),
            one(Some(gd.units[gd.target[a]])).tensor(&one(Some(gd.units[gd.source[a]]))),
        )
    });
    Ok(r)
}

/// `𝒢(G,X,α) = {(x,g) | x ∈ X_g}` with `s(x,g) = α_{g⁻¹}(x)`, `t(x,g) = x`, arrows ordered by `x` then `g`.
pub fn groupoid_of_action(spa: &SetPartialAction) -> FiniteGroupoid {
    let g = &spa.g;
    let arrows = action_arrows(spa);
    let index = |x: usize, h: usize| arrows.iter().position(|&p| p == (x, h));
    let source: Vec<usize> = arrows.iter().map(|&(x, h)| spa.alpha(g.inv(h), x).expect("x ∈ X_g")).collect();
    let target: Vec<usize> = arrows.iter().map(|&(x, _)| x).collect();
    let compose = arrows
        .iter()
        .enumerate()
        .map(|(i, &(x, h))| {
            arrows
                .iter()
                .enumerate()
                .map(|(j, &(_, k))| if source[i] == target[j] { index(x, g.mul(h, k)) } else { None })
                .collect()
        })
        .collect();
    let inverse =
        arrows.iter().enumerate().map(|(i, &(_, h))| index(source[i], g.inv(h)).expect("inverse arrow")).collect();
    let units = (0..spa.n).map(|x| index(x, g.unit()).expect("unit arrow")).collect();
    let names = arrows.iter().map(|&(x, h)| format!("({},{})", x + 1, g.name(h))).collect();
    FiniteGroupoid { objects: spa.n, source, target, compose, inverse, units, names }
}

/// A functor from a finite groupoid to a group; `labels[γ] = F(γ)`.
#[derive(Clone, Debug)]
pub struct StarFunctor {
    pub domain: FiniteGroupoid,
    pub codomain: FiniteGroup,
    pub labels: Vec<usize>,
}

impl StarFunctor {
    /// Validates functoriality.
    pub fn new(domain: FiniteGroupoid, codomain: FiniteGroup, labels: Vec<usize>) -> Result<Self> {
        if labels.len() != domain.arrows() || labels.iter().any(|&l| l >= codomain.order()) {
            return Err(Error::NotAFunctor("labels do not match the arrows".into()));
        }
        for a in 0..domain.arrows() {
            for b in 0..domain.arrows() {
                if let Some(c) = domain.compose[a][b] {
                    if labels[c] != codomain.mul(labels[a], labels[b]) {
                        return Err(Error::NotAFunctor(format!(
                            "F({}{}) ≠ F({})F({})",
                            domain.names[a], domain.names[b], domain.names[a], domain.names[b]
                        )));
                    }
                }
            }
        }
        if let Some(&u) = domain.units.iter().find(|&&u| labels[u] != codomain.unit()) {
            return Err(Error::NotAFunctor(format!("F({}) ≠ e", domain.names[u])));
        }
        Ok(StarFunctor { domain, codomain, labels })
    }

    /// First object whose star is not mapped injectively, with the two colliding arrows.
    pub fn star_injectivity_witness(&self) -> Option<(usize, usize, usize)> {
        (0..self.domain.objects).find_map(|x| {
            let star = self.domain.star(x);
            star.iter().enumerate().find_map(|(i, &a)| {
                star[i + 1..].iter().find(|&&b| self.labels[a] == self.labels[b]).map(|&b| (x, a, b))
            })
        })
    }
}

/// `π₂(x,g) = g` on `𝒢(G,X,α)`.
pub fn projection_functor(spa: &SetPartialAction) -> Result<StarFunctor> {
    let gd = groupoid_of_action(spa);
    let g = &spa.g;
    let labels = action_arrows(spa).into_iter().map(|(_, h)| h).collect();
    StarFunctor::new(gd, g.clone(), labels)
}

fn action_arrows(spa: &SetPartialAction) -> Vec<(usize, usize)> {
    let k = spa.g.order();
    (0..spa.n).flat_map(|x| (0..k).filter(move |&h| spa.in_domain(h, x)).map(move |h| (x, h))).collect()
}

pub fn check_star_injective(f: &StarFunctor) -> bool {
    f.star_injectivity_witness().is_none()
}

pub fn check_star_surjective(f: &StarFunctor) -> bool {
    (0..f.domain.objects).all(|x| {
        let mut hit = vec![false; f.codomain.order()];
        for a in f.domain.star(x) {
            hit[f.labels[a]] = true;
        }
        hit.into_iter().all(|b| b)
    })
}

/// `X_g = {s(γ) | F(γ) = g⁻¹}`, `α_g(s(γ)) = t(γ)` for `F(γ) = g`.
pub fn action_from_functor(f: &StarFunctor) -> Result<SetPartialAction> {
    if let Some((x, a, b)) = f.star_injectivity_witness() {
        return Err(Error::NotStarInjective(format!(
            "F({}) = F({}) on the star of {}",
            f.domain.names[a],
            f.domain.names[b],
            x + 1
        )));
    }
    let (g, gd) = (&f.codomain, &f.domain);
    let n = gd.objects;
    let mut maps = vec![vec![None; n]; g.order()];
    for a in 0..gd.arrows() {
        maps[f.labels[a]][gd.source[a]] = Some(gd.target[a]);
    }
    let domains = (0..g.order()).map(|h| maps[h].iter().flatten().copied().collect()).collect();
    SetPartialAction::new(g.clone(), n, domains, maps)
}

/// `Fun(𝒢)` over `Fun(objects)`: `s_l(a) = a∘t`, `t_l(a) = a∘s`, `Δχ_μ = Σ_{γδ=μ} χ_γ⊗χ_δ`,
/// `ε(χ_μ) = χ_x` when `μ = 1_x`, `𝒮(χ_μ) = χ_{μ⁻¹}`.
pub fn function_hopf_algebroid(gd: &FiniteGroupoid) -> Result<HopfAlgebroid> {
    let r = check_groupoid(gd)?;
    if !r.passed() {
        return Err(Error::MalformedTable(format!(
            "groupoid axioms fail: {}",
            r.first_failure().map_or("", |a| a.name.as_str())
        )));
    }
    let (n, m) = (gd.arrows(), gd.objects);
    let total: AlgebraSC = function_algebra(n).with_names(gd.names.iter().map(|s| format!("χ{s}")).collect());
    let base = function_algebra(m);
    let pull = |f: &[usize]| {
        Mat::from_fn(n, m, |x| {
            Vector::from_pairs(n, (0..n).filter(|&a| f[a] == x).map(|a| (a, crate::exactlin::Scalar::one())))
        })
    };
    let s = pull(&gd.target);
    let t = pull(&gd.source);
    let delta = Mat::from_fn(n * n, n, |mu| {
        Vector::from_pairs(
            n * n,
            (0..n).flat_map(|a| {
                (0..n)
                    .filter(move |&b| gd.compose[a][b] == Some(mu))
                    .map(move |b| (a * n + b, crate::exactlin::Scalar::one()))
            }),
        )
    });
    let eps = Mat::from_fn(m, n, |mu| match gd.units.iter().position(|&u| u == mu) {
        Some(x) => base.e(x),
        None => Vector::zeros(m),
    });
    let antipode = Mat::from_fn(n, n, |mu| Vector::unit(n, gd.inverse[mu]));
    Ok(HopfAlgebroid {
        total,
        base,
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
