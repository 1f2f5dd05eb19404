use super::FiniteGroup;
use crate::error::{Error, Result};
use crate::exactlin::{tidx, Vector};
use crate::partial_actions::PartialAction;
use crate::partial_coactions::PartialCoaction;
use crate::report::Report;
use crate::structures::{dual_group_hopf, function_algebra, group_algebra};

/// A partial action of a finite group on `{0,…,n−1}`.
/// `domains[g]` is `X_g` (sorted) and `maps[g][x] = Some(α_g(x))` exactly for `x ∈ X_{g⁻¹}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetPartialAction {
    pub g: FiniteGroup,
    pub n: usize,
    pub domains: Vec<Vec<usize>>,
    pub maps: Vec<Vec<Option<usize>>>,
}

impl SetPartialAction {
    /// Validates that each `α_g` is a bijection `X_{g⁻¹} → X_g`.
    pub fn new(g: FiniteGroup, n: usize, mut domains: Vec<Vec<usize>>, maps: Vec<Vec<Option<usize>>>) -> Result<Self> {
        let k = g.order();
        if domains.len() != k || maps.len() != k {
            return Err(Error::MalformedTable(format!("expected {k} domains and maps")));
        }
        for d in &mut domains {
            d.sort_unstable();
            d.dedup();
            if d.iter().any(|&x| x >= n) {
                return Err(Error::MalformedTable("domain element out of range".into()));
            }
        }
        for a in 0..k {
            if maps[a].len() != n {
                return Err(Error::MalformedTable(format!("map of {} has length {}", g.name(a), maps[a].len())));
            }
            let dom: Vec<usize> = (0..n).filter(|&x| maps[a][x].is_some()).collect();
            if dom != domains[g.inv(a)] {
                return Err(Error::MalformedTable(format!(
                    "α_{} is not defined exactly on X_{}⁻¹",
                    g.name(a),
                    g.name(a)
                )));
            }
            let mut img: Vec<usize> = maps[a].iter().flatten().copied().collect();
            img.sort_unstable();
            if img != domains[a] {
                return Err(Error::MalformedTable(format!("α_{} is not a bijection onto X_{}", g.name(a), g.name(a))));
            }
        }
        Ok(SetPartialAction { g, n, domains, maps })
    }

    /// A global action `x ↦ f(g, x)`.
    pub fn global(g: FiniteGroup, n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let k = g.order();
        let maps = (0..k).map(|a| (0..n).map(|x| Some(f(a, x))).collect()).collect();
        Self::new(g, n, vec![(0..n).collect(); k], maps)
    }

    /// The restriction to a subset `Y`, relabelled `0,…,|Y|−1` in increasing order:
    /// `α_g` is kept on the points of `Y` that it maps into `Y`.
    pub fn restrict(&self, y: &[usize]) -> Result<Self> {
        let mut y = y.to_vec();
        y.sort_unstable();
        y.dedup();
        let pos = |x: usize| y.iter().position(|&p| p == x);
        let k = self.g.order();
        let maps: Vec<Vec<Option<usize>>> =
            (0..k).map(|a| y.iter().map(|&x| self.maps[a][x].and_then(pos)).collect()).collect();
        let domains = (0..k).map(|a| maps[a].iter().flatten().copied().collect()).collect();
        Self::new(self.g.clone(), y.len(), domains, maps)
    }

    pub fn alpha(&self, g: usize, x: usize) -> Option<usize> {
        self.maps[g][x]
    }

    pub fn in_domain(&self, g: usize, x: usize) -> bool {
        self.domains[g].binary_search(&x).is_ok()
    }

    pub fn is_global(&self) -> bool {
        self.domains.iter().all(|d| d.len() == self.n)
    }

    pub fn point_name(x: usize) -> String {
        (x + 1).to_string()
    }
}

fn indicator(n: usize, xs: impl IntoIterator<Item = usize>) -> Vector {
    let mut v: Vec<usize> = xs.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    Vector::from_pairs(n, v.into_iter().map(|x| (x, crate::exactlin::Scalar::one())))
}

/// Conditions (a), (b), (c) of a partial action on a set.
pub fn check_set_partial_action(spa: &SetPartialAction) -> Result<Report> {
    let (g, n) = (&spa.g, spa.n);
    let k = g.order();
    let e = g.unit();
    let mut r = Report::new("set partial action");
    let full = spa.domains[e].len() == n && (0..n).all(|x| spa.maps[e][x] == Some(x));
    r.check_bool("(a) X_e=X, α_e=id", full, vec![e], vec![g.name(e).to_string()]);
    let pairs: Vec<Vec<usize>> = (0..k).flat_map(|a| (0..k).map(move |b| vec![a, b])).collect();
    r.check(
        "(b) α_g(X_g⁻¹∩X_h)=X_g∩X_gh",
        pairs,
        |t| vec![g.name(t[0]).into(), g.name(t[1]).into()],
        |t| {
            let (a, b) = (t[0], t[1]);
            let lhs = indicator(n, spa.domains[b].iter().filter_map(|&x| spa.alpha(a, x)));
            let rhs = indicator(n, spa.domains[a].iter().copied().filter(|&x| spa.in_domain(g.mul(a, b), x)));
            (lhs, rhs)
        },
    );
    let mut triples = Vec::new();
    for a in 0..k {
        for b in 0..k {
            let ab = g.mul(a, b);
            for x in 0..n {
                if spa.in_domain(g.inv(b), x) && spa.in_domain(g.inv(ab), x) {
                    triples.push(vec![a, b, x]);
                }
            }
        }
    }
    r.check(
        "(c) α_g∘α_h=α_gh",
        triples,
        |t| vec![g.name(t[0]).into(), g.name(t[1]).into(), SetPartialAction::point_name(t[2])],
        |t| {
            let (a, b, x) = (t[0], t[1], t[2]);
            let lhs = indicator(n, spa.alpha(b, x).and_then(|y| spa.alpha(a, y)));
            let rhs = indicator(n, spa.alpha(g.mul(a, b), x));
            (lhs, rhs)
        },
    );
    r.flag("global", spa.is_global());
    Ok(r)
}

fn require_valid(spa: &SetPartialAction) -> Result<()> {
    let r = check_set_partial_action(spa)?;
    if r.passed() {
        Ok(())
    } else {
        Err(Error::ActionAxiomFailure(Box::new(r)))
    }
}

/// `δ_g·f = 1_g (f∘α_{g⁻¹})` on `Fun(X)`, i.e. `δ_g·χ_y = χ_{α_g(y)}` for `y ∈ X_{g⁻¹}` and `0` otherwise.
pub fn to_kg_partial_action(spa: &SetPartialAction) -> Result<PartialAction> {
    require_valid(spa)?;
    let a = function_algebra(spa.n);
    PartialAction::from_fn(group_algebra(&spa.g), a.clone(), |h, y| match spa.alpha(h, y) {
        Some(x) => a.e(x),
        None => Vector::zeros(spa.n),
    })
}

/// `ρ̄(f) = Σ_g 1_g (f∘α_{g⁻¹}) ⊗ p_g` on `Fun(X)`.
pub fn to_dual_partial_coaction(spa: &SetPartialAction) -> Result<PartialCoaction> {
    require_valid(spa)?;
    let k = spa.g.order();
    PartialCoaction::from_fn(dual_group_hopf(&spa.g), function_algebra(spa.n), |y| {
        Vector::from_pairs(
            spa.n * k,
            (0..k).filter_map(|h| spa.alpha(h, y).map(|x| (tidx(x, h, k), crate::exactlin::Scalar::one()))),
        )
    })
}
