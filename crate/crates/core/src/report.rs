//! Structured axiom reports: per-axiom verdicts with witnesses and both evaluated sides.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::exactlin::{Scalar, Vector};

/// Witnesses kept per axiom; the failure count is always exact.
pub const MAX_WITNESSES: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub labels: Vec<String>,
    pub lhs: Vector,
    pub rhs: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub name: String,
    pub checked: usize,
    pub failures: usize,
    pub witnesses: Vec<Witness>,
}

impl AxiomResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn has_witness(&self, labels: &[&str]) -> bool {
        self.witnesses.iter().any(|w| w.labels.iter().map(String::as_str).eq(labels.iter().copied()))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub object: String,
    pub axioms: Vec<AxiomResult>,
    pub flags: BTreeMap<String, bool>,
    pub dims: BTreeMap<String, usize>,
    pub notes: Vec<String>,
}

/// Every index tuple of the given shape, in lexicographic order.
pub fn tuples(shape: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &n in shape {
        let mut next = Vec::with_capacity(out.len() * n);
        for t in &out {
            for i in 0..n {
                let mut u = t.clone();
                u.push(i);
                next.push(u);
            }
        }
        out = next;
    }
    out
}

pub fn scalar_vec(s: Scalar) -> Vector {
    Vector::from_dense(&[s])
}

/// Readable name of a combination of named basis vectors, e.g. `χ1⊗p_e+χ2⊗p_e`.
pub fn combination_label(v: &Vector, name: impl Fn(usize) -> String) -> String {
    if v.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (i, c)) in v.iter().enumerate() {
        let n = name(i);
        let term = if c.is_one() {
            n
        } else if (-c.clone()).is_one() {
            format!("-{n}")
        } else {
            format!("{c}·{n}")
        };
        if k > 0 && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    out
}

impl Report {
    pub fn new(object: impl Into<String>) -> Self {
        Report { object: object.into(), ..Default::default() }
    }

    /// Checks `lhs == rhs` for every tuple, evaluating in parallel and
    /// recording failures in tuple order.
    pub fn check<F>(&mut self, name: &str, tuples: Vec<Vec<usize>>, labels: impl Fn(&[usize]) -> Vec<String>, f: F)
    where
        F: Fn(&[usize]) -> (Vector, Vector) + Sync + Send,
    {
        let checked = tuples.len();
        let fails: Vec<(Vec<usize>, Vector, Vector)> = tuples
            .into_par_iter()
            .filter_map(|t| {
                let (l, r) = f(&t);
                if l == r {
                    None
                } else {
                    Some((t, l, r))
                }
            })
            .collect();
        let failures = fails.len();
        let witnesses = fails
            .into_iter()
            .take(MAX_WITNESSES)
            .map(|(t, lhs, rhs)| Witness { labels: labels(&t), tuple: t, lhs, rhs })
            .collect();
        self.axioms.push(AxiomResult { name: name.to_string(), checked, failures, witnesses });
    }

    /// Records a single predicate.
    pub fn check_bool(&mut self, name: &str, ok: bool, tuple: Vec<usize>, labels: Vec<String>) {
        let witnesses =
            if ok { Vec::new() } else { vec![Witness { tuple, labels, lhs: Vector::zeros(0), rhs: Vector::zeros(0) }] };
        self.axioms.push(AxiomResult { name: name.to_string(), checked: 1, failures: usize::from(!ok), witnesses });
    }

    pub fn flag(&mut self, name: &str, value: bool) {
        self.flags.insert(name.to_string(), value);
    }

    pub fn dim(&mut self, name: &str, value: usize) {
        self.dims.insert(name.to_string(), value);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Appends another report's axioms under `prefix.`, along with its flags and dimensions.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        let p = |s: &str| if prefix.is_empty() { s.to_string() } else { format!("{prefix}.{s}") };
        for mut a in other.axioms {
            a.name = p(&a.name);
            self.axioms.push(a);
        }
        for (k, v) in other.flags {
            self.flags.insert(p(&k), v);
        }
        for (k, v) in other.dims {
            self.dims.insert(p(&k), v);
        }
        self.notes.extend(other.notes);
    }

    pub fn passed(&self) -> bool {
        self.axioms.iter().all(AxiomResult::passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomResult> {
        self.axioms.iter().find(|a| !a.passed())
    }

    pub fn failed_axioms(&self) -> Vec<&str> {
        self.axioms.iter().filter(|a| !a.passed()).map(|a| a.name.as_str()).collect()
    }

    pub fn axiom(&self, name: &str) -> Option<&AxiomResult> {
        self.axioms.iter().find(|a| a.name == name)
    }

    /// True iff the named axiom was checked and passed.
    pub fn passes(&self, name: &str) -> bool {
        self.axiom(name).is_some_and(AxiomResult::passed)
    }

    pub fn get_flag(&self, name: &str) -> Option<bool> {
        self.flags.get(name).copied()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.object)?;
        for a in &self.axioms {
            let mark = if a.passed() { "pass" } else { "FAIL" };
            writeln!(f, "  [{mark}] {} ({}/{} instances hold)", a.name, a.checked - a.failures, a.checked)?;
            for w in &a.witnesses {
                let lhs: Vec<String> = w.lhs.to_dense().iter().map(Scalar::to_exact_string).collect();
                let rhs: Vec<String> = w.rhs.to_dense().iter().map(Scalar::to_exact_string).collect();
                writeln!(f, "      witness ({}): lhs=[{}] rhs=[{}]", w.labels.join(","), lhs.join(","), rhs.join(","))?;
            }
        }
        for (k, v) in &self.flags {
            writeln!(f, "  flag {k} = {v}")?;
        }
        for (k, v) in &self.dims {
            writeln!(f, "  dim {k} = {v}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
