use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::render::pretty_json;
use crate::coalgebra_partial::{PartialComoduleCoalgebra, PartialModuleCoalgebra};
use crate::error::{Error, Result};
use crate::exactlin::{tidx, Field, Mat, Scalar, Vector};
use crate::groups_groupoids::{FiniteGroup, FiniteGroupoid, SetPartialAction};
use crate::hopf_algebroid::HopfAlgebroid;
use crate::partial_actions::PartialAction;
use crate::partial_coactions::PartialCoaction;
use crate::structures::{AlgebraSC, CoalgebraSC, HopfPackage, Pairing};

pub const FIXTURE_SCHEMA: &str = "phopf-fixture/1";

/// `(i, v)`: coefficient `v` on `e_i`.
pub type Entry1 = (usize, String);
/// `(row, col, v)` of a matrix.
pub type Entry2 = (usize, usize, String);
/// `(i, j, k, v)`; the meaning of each slot is fixed per object kind.
pub type Entry3 = (usize, usize, usize, String);

/// One named object of a fixture file. References name other objects of the same file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ObjectSpec {
    /// `table[a][b]` is the index of `ab`.
    Group { names: Vec<String>, table: Vec<Vec<usize>> },
    /// `mult`: `e_i e_j` has coefficient `v` on `e_k`.
    Algebra { names: Vec<String>, mult: Vec<Entry3>, unit: Vec<Entry1> },
    /// `comult`: `Δ(e_i)` has coefficient `v` on `e_j ⊗ e_k`.
    Coalgebra { names: Vec<String>, comult: Vec<Entry3>, counit: Vec<Entry1> },
    /// Algebra and coalgebra on one basis; `antipode` entry `(i, j, v)` puts `v` on `e_i` in `S(e_j)`.
    Hopf {
        names: Vec<String>,
        mult: Vec<Entry3>,
        unit: Vec<Entry1>,
        comult: Vec<Entry3>,
        counit: Vec<Entry1>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        antipode: Option<Vec<Entry2>>,
    },
    /// `act`: `e_h·e_a` has coefficient `v` on `e_b`.
    PartialAction { hopf: String, algebra: String, act: Vec<Entry3> },
    /// `rho`: `ρ(e_a)` has coefficient `v` on `e_b ⊗ e_ξ`.
    PartialCoaction { hopf: String, algebra: String, rho: Vec<Entry3> },
    /// `act`: `e_h·e_c` has coefficient `v` on `e_d`.
    ModuleCoalgebra { hopf: String, coalgebra: String, act: Vec<Entry3> },
    /// `lam`: `λ(e_c)` has coefficient `v` on `e_ξ ⊗ e_d`.
    ComoduleCoalgebra { hopf: String, coalgebra: String, lam: Vec<Entry3> },
    /// `form`: `⟨e_i, f_j⟩ = v`.
    Pairing { rows: usize, cols: usize, form: Vec<Entry2> },
    /// `maps[g][x]` is `α_g(x)`, `null` outside `X_{g⁻¹}`.
    SetPartialAction { group: String, points: usize, maps: Vec<Vec<Option<usize>>> },
    Groupoid {
        objects: usize,
        names: Vec<String>,
        source: Vec<usize>,
        target: Vec<usize>,
        compose: Vec<Vec<Option<usize>>>,
        inverse: Vec<usize>,
        units: Vec<usize>,
    },
    /// Structure maps as matrices in the bases of `total` and `base`.
    HopfAlgebroid {
        total: String,
        base: String,
        s_l: Vec<Entry2>,
        t_l: Vec<Entry2>,
        s_r: Vec<Entry2>,
        t_r: Vec<Entry2>,
        delta_l: Vec<Entry2>,
        eps_l: Vec<Entry2>,
        delta_r: Vec<Entry2>,
        eps_r: Vec<Entry2>,
        antipode: Vec<Entry2>,
    },
    /// The C-ring of a module coalgebra.
    CRing { module_coalgebra: String },
}

impl ObjectSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            ObjectSpec::Group { .. } => "group",
            ObjectSpec::Algebra { .. } => "algebra",
            ObjectSpec::Coalgebra { .. } => "coalgebra",
            ObjectSpec::Hopf { .. } => "hopf",
            ObjectSpec::PartialAction { .. } => "partial-action",
            ObjectSpec::PartialCoaction { .. } => "partial-coaction",
            ObjectSpec::ModuleCoalgebra { .. } => "module-coalgebra",
            ObjectSpec::ComoduleCoalgebra { .. } => "comodule-coalgebra",
            ObjectSpec::Pairing { .. } => "pairing",
            ObjectSpec::SetPartialAction { .. } => "set-partial-action",
            ObjectSpec::Groupoid { .. } => "groupoid",
            ObjectSpec::HopfAlgebroid { .. } => "hopf-algebroid",
            ObjectSpec::CRing { .. } => "c-ring",
        }
    }

    /// Names of the objects this one refers to.
    pub fn references(&self) -> Vec<&str> {
        match self {
            ObjectSpec::PartialAction { hopf, algebra, .. } | ObjectSpec::PartialCoaction { hopf, algebra, .. } => {
                vec![hopf, algebra]
            }
            ObjectSpec::ModuleCoalgebra { hopf, coalgebra, .. }
            | ObjectSpec::ComoduleCoalgebra { hopf, coalgebra, .. } => {
                vec![hopf, coalgebra]
            }
            ObjectSpec::SetPartialAction { group, .. } => vec![group],
            ObjectSpec::HopfAlgebroid { total, base, .. } => vec![total, base],
            ObjectSpec::CRing { module_coalgebra } => vec![module_coalgebra],
            _ => Vec::new(),
        }
    }
}

/// A decoded fixture object.
#[derive(Clone, Debug)]
pub enum Object {
    Group(FiniteGroup),
    Algebra(AlgebraSC),
    Coalgebra(CoalgebraSC),
    Hopf(HopfPackage),
    PartialAction(PartialAction),
    PartialCoaction(PartialCoaction),
    ModuleCoalgebra(PartialModuleCoalgebra),
    ComoduleCoalgebra(PartialComoduleCoalgebra),
    Pairing(Pairing),
    SetPartialAction(SetPartialAction),
    Groupoid(FiniteGroupoid),
    HopfAlgebroid(HopfAlgebroid),
    CRing(PartialModuleCoalgebra),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Group(_) => "group",
            Object::Algebra(_) => "algebra",
            Object::Coalgebra(_) => "coalgebra",
            Object::Hopf(_) => "hopf",
            Object::PartialAction(_) => "partial-action",
            Object::PartialCoaction(_) => "partial-coaction",
            Object::ModuleCoalgebra(_) => "module-coalgebra",
            Object::ComoduleCoalgebra(_) => "comodule-coalgebra",
            Object::Pairing(_) => "pairing",
            Object::SetPartialAction(_) => "set-partial-action",
            Object::Groupoid(_) => "groupoid",
            Object::HopfAlgebroid(_) => "hopf-algebroid",
            Object::CRing(_) => "c-ring",
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileRepr {
    schema: String,
    field: String,
    objects: BTreeMap<String, ObjectSpec>,
}

/// A validated fixture file: every scalar is canonical, every reference resolves and every object decodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureFile {
    pub field: Field,
    pub objects: BTreeMap<String, ObjectSpec>,
}

fn schema(context: impl Into<String>, message: impl Into<String>) -> Error {
    Error::SchemaError { context: context.into(), message: message.into() }
}

fn scalar(s: &str, field: Field, ctx: &str) -> Result<Scalar> {
    Scalar::parse_exact(s, field).ok_or_else(|| schema(ctx, format!("'{s}' is not an exact scalar of {field}")))
}

fn render(s: &Scalar, field: Field) -> String {
    s.in_field(field).to_exact_string()
}

/// Parses, sorts and drops zeros; a repeated key is an error.
fn canon<K: Ord + Copy + std::fmt::Debug>(
    items: Vec<(K, String)>,
    field: Field,
    ctx: &str,
) -> Result<Vec<(K, String)>> {
    let mut out: BTreeMap<K, Scalar> = BTreeMap::new();
    for (k, s) in items {
        let v = scalar(&s, field, ctx)?;
        if out.insert(k, v).is_some() {
            return Err(schema(ctx, format!("duplicate entry {k:?}")));
        }
    }
    Ok(out.into_iter().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (k, render(&v, field))).collect())
}

fn canon1(e: Vec<Entry1>, field: Field, ctx: &str) -> Result<Vec<Entry1>> {
    canon(e, field, ctx)
}

fn canon2(e: Vec<Entry2>, field: Field, ctx: &str) -> Result<Vec<Entry2>> {
    let items = e.into_iter().map(|(i, j, v)| ((i, j), v)).collect();
    Ok(canon(items, field, ctx)?.into_iter().map(|((i, j), v)| (i, j, v)).collect())
}

fn canon3(e: Vec<Entry3>, field: Field, ctx: &str) -> Result<Vec<Entry3>> {
    let items = e.into_iter().map(|(i, j, k, v)| ((i, j, k), v)).collect();
    Ok(canon(items, field, ctx)?.into_iter().map(|((i, j, k), v)| (i, j, k, v)).collect())
}

fn canonical_spec(spec: ObjectSpec, field: Field, ctx: &str) -> Result<ObjectSpec> {
    let c = |l: &str| format!("{ctx}.{l}");
    Ok(match spec {
        ObjectSpec::Algebra { names, mult, unit } => ObjectSpec::Algebra {
            names,
            mult: canon3(mult, field, &c("mult"))?,
            unit: canon1(unit, field, &c("unit"))?,
        },
        ObjectSpec::Coalgebra { names, comult, counit } => ObjectSpec::Coalgebra {
            names,
            comult: canon3(comult, field, &c("comult"))?,
            counit: canon1(counit, field, &c("counit"))?,
        },
        ObjectSpec::Hopf { names, mult, unit, comult, counit, antipode } => ObjectSpec::Hopf {
            names,
            mult: canon3(mult, field, &c("mult"))?,
            unit: canon1(unit, field, &c("unit"))?,
            comult: canon3(comult, field, &c("comult"))?,
            counit: canon1(counit, field, &c("counit"))?,
            antipode: antipode.map(|s| canon2(s, field, &c("antipode"))).transpose()?,
        },
        ObjectSpec::PartialAction { hopf, algebra, act } => {
            ObjectSpec::PartialAction { hopf, algebra, act: canon3(act, field, &c("act"))? }
        }
        ObjectSpec::PartialCoaction { hopf, algebra, rho } => {
            ObjectSpec::PartialCoaction { hopf, algebra, rho: canon3(rho, field, &c("rho"))? }
        }
        ObjectSpec::ModuleCoalgebra { hopf, coalgebra, act } => {
            ObjectSpec::ModuleCoalgebra { hopf, coalgebra, act: canon3(act, field, &c("act"))? }
        }
        ObjectSpec::ComoduleCoalgebra { hopf, coalgebra, lam } => {
            ObjectSpec::ComoduleCoalgebra { hopf, coalgebra, lam: canon3(lam, field, &c("lam"))? }
        }
        ObjectSpec::Pairing { rows, cols, form } => {
            ObjectSpec::Pairing { rows, cols, form: canon2(form, field, &c("form"))? }
        }
        ObjectSpec::HopfAlgebroid { total, base, s_l, t_l, s_r, t_r, delta_l, eps_l, delta_r, eps_r, antipode } => {
            ObjectSpec::HopfAlgebroid {
                total,
                base,
                s_l: canon2(s_l, field, &c("s_l"))?,
                t_l: canon2(t_l, field, &c("t_l"))?,
                s_r: canon2(s_r, field, &c("s_r"))?,
                t_r: canon2(t_r, field, &c("t_r"))?,
                delta_l: canon2(delta_l, field, &c("delta_l"))?,
                eps_l: canon2(eps_l, field, &c("eps_l"))?,
                delta_r: canon2(delta_r, field, &c("delta_r"))?,
                eps_r: canon2(eps_r, field, &c("eps_r"))?,
                antipode: canon2(antipode, field, &c("antipode"))?,
            }
        }
        other => other,
    })
}

fn out_of_range(ctx: &str, idx: impl std::fmt::Debug) -> Error {
    schema(ctx, format!("index {idx:?} out of range"))
}

fn vec1(n: usize, e: &[Entry1], field: Field, ctx: &str) -> Result<Vector> {
    let mut pairs = Vec::with_capacity(e.len());
    for (i, s) in e {
        if *i >= n {
            return Err(out_of_range(ctx, i));
        }
        pairs.push((*i, scalar(s, field, ctx)?));
    }
    Ok(Vector::from_pairs(n, pairs))
}

/// A matrix from `(row, col, v)` entries.
fn mat2(rows: usize, cols: usize, e: &[Entry2], field: Field, ctx: &str) -> Result<Mat> {
    let mut by_col: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); cols];
    for (i, j, s) in e {
        if *i >= rows || *j >= cols {
            return Err(out_of_range(ctx, (i, j)));
        }
        by_col[*j].push((*i, scalar(s, field, ctx)?));
    }
    Ok(Mat::from_columns(rows, by_col.into_iter().map(|p| Vector::from_pairs(rows, p)).collect()))
}

/// A map `X ⊗ Y → Z` from `(x, y, z, v)` entries; columns indexed by `tidx(x, y, dim Y)`.
fn mat_in2(dims: (usize, usize, usize), e: &[Entry3], field: Field, ctx: &str) -> Result<Mat> {
    let (nx, ny, nz) = dims;
    let mut entries = Vec::with_capacity(e.len());
    for (x, y, z, s) in e {
        if *x >= nx || *y >= ny || *z >= nz {
            return Err(out_of_range(ctx, (x, y, z)));
        }
        entries.push((*z, tidx(*x, *y, ny), s.clone()));
    }
    mat2(nz, nx * ny, &entries, field, ctx)
}

/// A map `X → Y ⊗ Z` from `(x, y, z, v)` entries; rows indexed by `tidx(y, z, dim Z)`.
fn mat_out2(dims: (usize, usize, usize), e: &[Entry3], field: Field, ctx: &str) -> Result<Mat> {
    let (nx, ny, nz) = dims;
    let mut entries = Vec::with_capacity(e.len());
    for (x, y, z, s) in e {
        if *x >= nx || *y >= ny || *z >= nz {
            return Err(out_of_range(ctx, (x, y, z)));
        }
        entries.push((tidx(*y, *z, nz), *x, s.clone()));
    }
    mat2(ny * nz, nx, &entries, field, ctx)
}

fn enc1(v: &Vector, field: Field) -> Vec<Entry1> {
    v.iter().map(|(i, s)| (i, render(s, field))).filter(|(_, s)| s != "0").collect()
}

fn enc2(m: &Mat, field: Field) -> Vec<Entry2> {
    let mut out: Vec<Entry2> = Vec::new();
    for (j, col) in m.columns().iter().enumerate() {
        out.extend(col.iter().map(|(i, s)| (i, j, render(s, field))));
    }
    out.retain(|e| e.2 != "0");
    out.sort();
    out
}

fn enc_in2(m: &Mat, ny: usize, field: Field) -> Vec<Entry3> {
    let mut out: Vec<Entry3> =
        enc2(m, field).into_iter().map(|(z, col, s)| (col / ny.max(1), col % ny.max(1), z, s)).collect();
    out.sort();
    out
}

fn enc_out2(m: &Mat, nz: usize, field: Field) -> Vec<Entry3> {
    let mut out: Vec<Entry3> =
        enc2(m, field).into_iter().map(|(row, x, s)| (x, row / nz.max(1), row % nz.max(1), s)).collect();
    out.sort();
    out
}

fn algebra_spec(a: &AlgebraSC, field: Field) -> ObjectSpec {
    ObjectSpec::Algebra {
        names: a.names().to_vec(),
        mult: enc_in2(a.mult(), a.dim(), field),
        unit: enc1(a.unit(), field),
    }
}

fn coalgebra_spec(c: &CoalgebraSC, field: Field) -> ObjectSpec {
    ObjectSpec::Coalgebra {
        names: c.names().to_vec(),
        comult: enc_out2(c.comult(), c.dim(), field),
        counit: enc1(c.counit(), field),
    }
}

fn hopf_spec(h: &HopfPackage, field: Field) -> ObjectSpec {
    let (a, c) = (&h.algebra, &h.coalgebra);
    ObjectSpec::Hopf {
        names: a.names().to_vec(),
        mult: enc_in2(a.mult(), a.dim(), field),
        unit: enc1(a.unit(), field),
        comult: enc_out2(c.comult(), c.dim(), field),
        counit: enc1(c.counit(), field),
        antipode: h.antipode.as_ref().map(|s| enc2(s, field)),
    }
}

impl FixtureFile {
    pub fn new(field: Field) -> Self {
        FixtureFile { field, objects: BTreeMap::new() }
    }

    /// Parses and validates fixture text. `field` overrides the field named in the header.
    pub fn parse(text: &str, field: Option<Field>) -> Result<Self> {
        let repr: FileRepr = serde_json::from_str(text)
            .map_err(|e| schema(format!("line {}, column {}", e.line(), e.column()), e.to_string()))?;
        if repr.schema != FIXTURE_SCHEMA {
            return Err(schema("schema", format!("unsupported schema '{}', expected '{FIXTURE_SCHEMA}'", repr.schema)));
        }
        let header: Field = repr.field.parse().map_err(|m: String| schema("field", m))?;
        let field = field.unwrap_or(header);
        let mut objects = BTreeMap::new();
        for (name, spec) in repr.objects {
            let spec = canonical_spec(spec, field, &format!("objects.{name}"))?;
            objects.insert(name, spec);
        }
        let file = FixtureFile { field, objects };
        for name in file.objects.keys() {
            file.get(name)?;
        }
        Ok(file)
    }

    /// Canonical serialization: sorted names, sorted sparse entries, canonical scalar strings.
    pub fn to_json(&self) -> String {
        let repr =
            FileRepr { schema: FIXTURE_SCHEMA.into(), field: self.field.to_string(), objects: self.objects.clone() };
        pretty_json(&serde_json::to_value(&repr).expect("fixture values serialize"))
    }

    /// Names of the objects of a kind, in order.
    pub fn names_of_kind(&self, kind: &str) -> Vec<String> {
        self.objects.iter().filter(|(_, s)| s.kind() == kind).map(|(n, _)| n.clone()).collect()
    }

    /// True if some other object refers to `name`.
    pub fn is_referenced(&self, name: &str) -> bool {
        self.objects.values().any(|s| s.references().contains(&name))
    }

    fn spec(&self, name: &str, from: &str) -> Result<&ObjectSpec> {
        self.objects.get(name).ok_or_else(|| Error::UnresolvedReference(format!("'{name}' (referenced from {from})")))
    }

    fn reference(&self, name: &str, kind: &str, from: &str) -> Result<Object> {
        let spec = self.spec(name, from)?;
        if spec.kind() != kind {
            return Err(schema(from, format!("'{name}' is a {}, expected a {kind}", spec.kind())));
        }
        self.decode(name, spec)
    }

    fn hopf(&self, name: &str, from: &str) -> Result<HopfPackage> {
        match self.reference(name, "hopf", from)? {
            Object::Hopf(h) => Ok(h),
            _ => unreachable!(),
        }
    }

    fn algebra(&self, name: &str, from: &str) -> Result<AlgebraSC> {
        match self.reference(name, "algebra", from)? {
            Object::Algebra(a) => Ok(a),
            _ => unreachable!(),
        }
    }

    fn coalgebra(&self, name: &str, from: &str) -> Result<CoalgebraSC> {
        match self.reference(name, "coalgebra", from)? {
            Object::Coalgebra(c) => Ok(c),
            _ => unreachable!(),
        }
    }

    /// Decodes the named object, resolving its references.
    pub fn get(&self, name: &str) -> Result<Object> {
        let spec = self.objects.get(name).ok_or_else(|| Error::UnresolvedReference(format!("'{name}'")))?;
        self.decode(name, spec)
    }

    fn decode(&self, name: &str, spec: &ObjectSpec) -> Result<Object> {
        let f = self.field;
        let ctx = format!("objects.{name}");
        let c = |l: &str| format!("{ctx}.{l}");
        let wrap = |e: Error| match e {
            e @ (Error::SchemaError { .. } | Error::UnresolvedReference(_)) => e,
            e => schema(&ctx, e.to_string()),
        };
        let obj = match spec {
            ObjectSpec::Group { names, table } => {
                Object::Group(FiniteGroup::from_table(table.clone(), names.clone()).map_err(wrap)?)
            }
            ObjectSpec::Algebra { names, mult, unit } => {
                let n = names.len();
                let m = mat_in2((n, n, n), mult, f, &c("mult"))?;
                Object::Algebra(AlgebraSC::new(m, vec1(n, unit, f, &c("unit"))?, Some(names.clone())).map_err(wrap)?)
            }
            ObjectSpec::Coalgebra { names, comult, counit } => {
                let n = names.len();
                let m = mat_out2((n, n, n), comult, f, &c("comult"))?;
                Object::Coalgebra(
                    CoalgebraSC::new(m, vec1(n, counit, f, &c("counit"))?, Some(names.clone())).map_err(wrap)?,
                )
            }
            ObjectSpec::Hopf { names, mult, unit, comult, counit, antipode } => {
                let n = names.len();
                let a = AlgebraSC::new(
                    mat_in2((n, n, n), mult, f, &c("mult"))?,
                    vec1(n, unit, f, &c("unit"))?,
                    Some(names.clone()),
                )
                .map_err(wrap)?;
                let co = CoalgebraSC::new(
                    mat_out2((n, n, n), comult, f, &c("comult"))?,
                    vec1(n, counit, f, &c("counit"))?,
                    Some(names.clone()),
                )
                .map_err(wrap)?;
                let s = antipode.as_ref().map(|s| mat2(n, n, s, f, &c("antipode"))).transpose()?;
                Object::Hopf(HopfPackage::new(a, co, s).map_err(wrap)?)
            }
            ObjectSpec::PartialAction { hopf, algebra, act } => {
                let (h, a) = (self.hopf(hopf, &ctx)?, self.algebra(algebra, &ctx)?);
                let m = mat_in2((h.dim(), a.dim(), a.dim()), act, f, &c("act"))?;
                Object::PartialAction(PartialAction::new(h, a, m).map_err(wrap)?)
            }
            ObjectSpec::PartialCoaction { hopf, algebra, rho } => {
                let (k, a) = (self.hopf(hopf, &ctx)?, self.algebra(algebra, &ctx)?);
                let m = mat_out2((a.dim(), a.dim(), k.dim()), rho, f, &c("rho"))?;
                Object::PartialCoaction(PartialCoaction::new(k, a, m).map_err(wrap)?)
            }
            ObjectSpec::ModuleCoalgebra { hopf, coalgebra, act } => {
                let (h, co) = (self.hopf(hopf, &ctx)?, self.coalgebra(coalgebra, &ctx)?);
                let m = mat_in2((h.dim(), co.dim(), co.dim()), act, f, &c("act"))?;
                Object::ModuleCoalgebra(PartialModuleCoalgebra::new(h, co, m).map_err(wrap)?)
            }
            ObjectSpec::ComoduleCoalgebra { hopf, coalgebra, lam } => {
                let (k, co) = (self.hopf(hopf, &ctx)?, self.coalgebra(coalgebra, &ctx)?);
                let m = mat_out2((co.dim(), k.dim(), co.dim()), lam, f, &c("lam"))?;
                Object::ComoduleCoalgebra(PartialComoduleCoalgebra::new(k, co, m).map_err(wrap)?)
            }
            ObjectSpec::Pairing { rows, cols, form } => {
                Object::Pairing(Pairing::new(mat2(*rows, *cols, form, f, &c("form"))?))
            }
            ObjectSpec::SetPartialAction { group, points, maps } => {
                let g = match self.reference(group, "group", &ctx)? {
                    Object::Group(g) => g,
                    _ => unreachable!(),
                };
                if maps.iter().flatten().flatten().any(|&x| x >= *points) {
                    return Err(schema(c("maps"), "point out of range"));
                }
                let domains = maps
                    .iter()
                    .map(|m| {
                        let mut d: Vec<usize> = m.iter().flatten().copied().collect();
                        d.sort_unstable();
                        d
                    })
                    .collect();
                Object::SetPartialAction(SetPartialAction::new(g, *points, domains, maps.clone()).map_err(wrap)?)
            }
            ObjectSpec::Groupoid { objects, names, source, target, compose, inverse, units } => {
                let n = names.len();
                let lens_ok = [source.len(), target.len(), compose.len(), inverse.len()].iter().all(|&l| l == n)
                    && units.len() == *objects
                    && compose.iter().all(|r| r.len() == n);
                let range_ok = source.iter().chain(target).all(|&x| x < *objects)
                    && inverse.iter().chain(units).chain(compose.iter().flatten().flatten()).all(|&a| a < n);
                if !lens_ok || !range_ok {
                    return Err(schema(&ctx, "groupoid tables have inconsistent sizes or indices"));
                }
                Object::Groupoid(FiniteGroupoid {
                    objects: *objects,
                    source: source.clone(),
                    target: target.clone(),
                    compose: compose.clone(),
                    inverse: inverse.clone(),
                    units: units.clone(),
                    names: names.clone(),
                })
            }
            ObjectSpec::HopfAlgebroid { total, base, s_l, t_l, s_r, t_r, delta_l, eps_l, delta_r, eps_r, antipode } => {
                let (t, b) = (self.algebra(total, &ctx)?, self.algebra(base, &ctx)?);
                let (n, m) = (t.dim(), b.dim());
                Object::HopfAlgebroid(HopfAlgebroid {
                    s_l: mat2(n, m, s_l, f, &c("s_l"))?,
                    t_l: mat2(n, m, t_l, f, &c("t_l"))?,
                    s_r: mat2(n, m, s_r, f, &c("s_r"))?,
                    t_r: mat2(n, m, t_r, f, &c("t_r"))?,
                    delta_l: mat2(n * n, n, delta_l, f, &c("delta_l"))?,
                    eps_l: mat2(m, n, eps_l, f, &c("eps_l"))?,
                    delta_r: mat2(n * n, n, delta_r, f, &c("delta_r"))?,
                    eps_r: mat2(m, n, eps_r, f, &c("eps_r"))?,
                    antipode: mat2(n, n, antipode, f, &c("antipode"))?,
                    total: t,
                    base: b,
                })
            }
            ObjectSpec::CRing { module_coalgebra } => {
                match self.reference(module_coalgebra, "module-coalgebra", &ctx)? {
                    Object::ModuleCoalgebra(p) => Object::CRing(p),
                    _ => unreachable!(),
                }
            }
        };
        Ok(obj)
    }

    /// Stores `spec` as a component of `owner`, reusing an identical existing object.
    fn component(&mut self, owner: &str, role: &str, spec: ObjectSpec) -> String {
        if let Some((k, _)) = self.objects.iter().find(|(_, s)| **s == spec) {
            return k.clone();
        }
        let mut name = format!("{owner}.{role}");
        let mut i = 2;
        while self.objects.contains_key(&name) {
            name = format!("{owner}.{role}{i}");
            i += 1;
        }
        self.objects.insert(name.clone(), spec);
        name
    }

    fn spec_of(&mut self, name: &str, obj: &Object) -> ObjectSpec {
        let f = self.field;
        match obj {
            Object::Group(g) => ObjectSpec::Group { names: g.names().to_vec(), table: g.table_rows() },
            Object::Algebra(a) => algebra_spec(a, f),
            Object::Coalgebra(c) => coalgebra_spec(c, f),
            Object::Hopf(h) => hopf_spec(h, f),
            Object::PartialAction(pa) => ObjectSpec::PartialAction {
                hopf: self.component(name, "hopf", hopf_spec(&pa.h, f)),
                algebra: self.component(name, "algebra", algebra_spec(&pa.a, f)),
                act: enc_in2(&pa.act, pa.a.dim(), f),
            },
            Object::PartialCoaction(pc) => ObjectSpec::PartialCoaction {
                hopf: self.component(name, "hopf", hopf_spec(&pc.k, f)),
                algebra: self.component(name, "algebra", algebra_spec(&pc.a, f)),
                rho: enc_out2(&pc.rho, pc.k.dim(), f),
            },
            Object::ModuleCoalgebra(pmc) => ObjectSpec::ModuleCoalgebra {
                hopf: self.component(name, "hopf", hopf_spec(&pmc.h, f)),
                coalgebra: self.component(name, "coalgebra", coalgebra_spec(&pmc.c, f)),
                act: enc_in2(&pmc.act, pmc.c.dim(), f),
            },
            Object::ComoduleCoalgebra(pcc) => ObjectSpec::ComoduleCoalgebra {
                hopf: self.component(name, "hopf", hopf_spec(&pcc.k, f)),
                coalgebra: self.component(name, "coalgebra", coalgebra_spec(&pcc.c, f)),
                lam: enc_out2(&pcc.lam, pcc.c.dim(), f),
            },
            Object::Pairing(p) => {
                ObjectSpec::Pairing { rows: p.left_dim(), cols: p.right_dim(), form: enc2(&p.form, f) }
            }
            Object::SetPartialAction(spa) => {
                let g = ObjectSpec::Group { names: spa.g.names().to_vec(), table: spa.g.table_rows() };
                ObjectSpec::SetPartialAction {
                    group: self.component(name, "group", g),
                    points: spa.n,
                    maps: spa.maps.clone(),
                }
            }
            Object::Groupoid(gd) => ObjectSpec::Groupoid {
                objects: gd.objects,
                names: gd.names.clone(),
                source: gd.source.clone(),
                target: gd.target.clone(),
                compose: gd.compose.clone(),
                inverse: gd.inverse.clone(),
                units: gd.units.clone(),
            },
            Object::HopfAlgebroid(h) => ObjectSpec::HopfAlgebroid {
                total: self.component(name, "total", algebra_spec(&h.total, f)),
                base: self.component(name, "base", algebra_spec(&h.base, f)),
                s_l: enc2(&h.s_l, f),
                t_l: enc2(&h.t_l, f),
                s_r: enc2(&h.s_r, f),
                t_r: enc2(&h.t_r, f),
                delta_l: enc2(&h.delta_l, f),
                eps_l: enc2(&h.eps_l, f),
                delta_r: enc2(&h.delta_r, f),
                eps_r: enc2(&h.eps_r, f),
                antipode: enc2(&h.antipode, f),
            },
            Object::CRing(pmc) => {
                let inner_name = format!("{name}.module-coalgebra");
                let inner = self.spec_of(&inner_name, &Object::ModuleCoalgebra(pmc.clone()));
                ObjectSpec::CRing { module_coalgebra: self.component(name, "module-coalgebra", inner) }
            }
        }
    }

    /// Stores `obj` under `name`, adding its components as `<name>.<role>` unless an identical object exists.
    pub fn insert(&mut self, name: &str, obj: &Object) {
        let spec = self.spec_of(name, obj);
        self.objects.insert(name.to_string(), spec);
    }
}

pub fn load(path: impl AsRef<Path>, field: Option<Field>) -> Result<FixtureFile> {
    let text = std::fs::read_to_string(path)?;
    FixtureFile::parse(&text, field)
}

pub fn save(file: &FixtureFile, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, file.to_json())?;
    Ok(())
}
