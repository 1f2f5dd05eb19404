use clap::ValueEnum;

use super::schema::{FixtureFile, Object};
use crate::coalgebra_partial::{
    check_cosmash, check_cring, comodule_coalgebra_from_set, cosmash, cring, module_coalgebra_from_set,
};
use crate::coalgebra_partial::{check_partial_comodule_coalgebra, check_partial_module_coalgebra};
use crate::dualities::{
    action_from_coaction, coaction_from_action, comodule_coalgebra_vs_comodule_algebra, cring_coring_pairing,
    smash_cosmash_pairing, CompatibleTriple, LeftPartialCoaction,
};
use crate::error::{Error, Result};
use crate::groups_groupoids::{
    check_groupoid, check_set_partial_action, function_hopf_algebroid, groupoid_of_action, to_dual_partial_coaction,
    to_kg_partial_action,
};
use crate::hopf_algebroid::{canonical_skew_pairing, check_skew_pairing, full_report, split_hopf_algebroid};
use crate::partial_actions::{check_partial_action, smash_hopf_algebroid};
use crate::partial_coactions::{check_partial_coaction, partial_split_hopf_algebroid};
use crate::report::Report;
use crate::structures::{check_package, Level};

/// The checker to run on an object.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Group,
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
    PartialAction,
    PartialCoaction,
    ModuleCoalgebra,
    ComoduleCoalgebra,
    Pairing,
    SetPartialAction,
    Groupoid,
    HopfAlgebroid,
    CRing,
    Cosmash,
}

impl CheckKind {
    /// Stored object kinds this checker accepts.
    pub fn accepts(self) -> &'static [&'static str] {
        match self {
            CheckKind::Group => &["group"],
            CheckKind::Algebra => &["algebra"],
            CheckKind::Coalgebra => &["coalgebra"],
            CheckKind::Bialgebra | CheckKind::Hopf => &["hopf"],
            CheckKind::PartialAction => &["partial-action"],
            CheckKind::PartialCoaction => &["partial-coaction"],
            CheckKind::ModuleCoalgebra => &["module-coalgebra"],
            CheckKind::ComoduleCoalgebra => &["comodule-coalgebra"],
            CheckKind::Pairing => &["pairing"],
            CheckKind::SetPartialAction => &["set-partial-action"],
            CheckKind::Groupoid => &["groupoid"],
            CheckKind::HopfAlgebroid => &["hopf-algebroid"],
            CheckKind::CRing => &["c-ring", "module-coalgebra"],
            CheckKind::Cosmash => &["comodule-coalgebra"],
        }
    }

    /// The default checker of a stored kind.
    pub fn natural(kind: &str) -> CheckKind {
        match kind {
            "group" => CheckKind::Group,
            "algebra" => CheckKind::Algebra,
            "coalgebra" => CheckKind::Coalgebra,
            "hopf" => CheckKind::Hopf,
            "partial-action" => CheckKind::PartialAction,
            "partial-coaction" => CheckKind::PartialCoaction,
            "module-coalgebra" => CheckKind::ModuleCoalgebra,
            "comodule-coalgebra" => CheckKind::ComoduleCoalgebra,
            "pairing" => CheckKind::Pairing,
            "set-partial-action" => CheckKind::SetPartialAction,
            "groupoid" => CheckKind::Groupoid,
            "hopf-algebroid" => CheckKind::HopfAlgebroid,
            _ => CheckKind::CRing,
        }
    }
}

/// Exit status for an error: 3 for unreadable or invalid input, 2 for a refused precondition.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) | Error::SchemaError { .. } | Error::UnresolvedReference(_) => 3,
        _ => 2,
    }
}

/// Exit status for a set of reports: 0 if every axiom holds, 1 otherwise.
pub fn verdict_code<'a>(reports: impl IntoIterator<Item = &'a Report>) -> i32 {
    i32::from(!reports.into_iter().all(Report::passed))
}

/// The object to act on: `explicit` if given, else the only candidate of an accepted kind,
/// preferring objects that no other object refers to.
pub fn select(file: &FixtureFile, kinds: &[&str], explicit: Option<&str>, role: &str) -> Result<String> {
    if let Some(name) = explicit {
        let spec = file.objects.get(name).ok_or_else(|| Error::UnresolvedReference(format!("'{name}'")))?;
        if !kinds.contains(&spec.kind()) {
            return Err(Error::SchemaError {
                context: role.into(),
                message: format!("'{name}' is a {}, expected {}", spec.kind(), kinds.join(" or ")),
            });
        }
        return Ok(name.to_string());
    }
    let all: Vec<String> = kinds.iter().flat_map(|k| file.names_of_kind(k)).collect();
    let top: Vec<String> = all.iter().filter(|n| !file.is_referenced(n)).cloned().collect();
    match (all.len(), top.len()) {
        (1, _) => Ok(all[0].clone()),
        (_, 1) => Ok(top[0].clone()),
        (0, _) => Err(Error::SchemaError {
            context: role.into(),
            message: format!("no object of kind {}", kinds.join(" or ")),
        }),
        _ => Err(Error::SchemaError {
            context: role.into(),
            message: format!("several candidates ({}); name one explicitly", all.join(", ")),
        }),
    }
}

fn mismatch(kind: CheckKind, obj: &Object) -> Error {
    Error::SchemaError { context: "--as".into(), message: format!("cannot check a {} as {kind:?}", obj.kind()) }
}

/// Runs the checker `kind` on a decoded object.
pub fn check_object(kind: CheckKind, obj: &Object) -> Result<Report> {
    let r = match (kind, obj) {
        (CheckKind::Group, Object::Group(g)) => {
            let mut r = Report::new("group");
            r.dim("order", g.order());
            r.flag("abelian", g.is_abelian());
            r
        }
        (CheckKind::Algebra, Object::Algebra(a)) => {
            let mut r = a.check();
            r.flag("commutative", a.is_commutative());
            r.dim("dim", a.dim());
            r
        }
        (CheckKind::Coalgebra, Object::Coalgebra(c)) => {
            let mut r = c.check();
            r.flag("cocommutative", c.is_cocommutative());
            r.dim("dim", c.dim());
            r
        }
        (CheckKind::Bialgebra | CheckKind::Hopf, Object::Hopf(h)) => {
            let level = if kind == CheckKind::Hopf { Level::Hopf } else { Level::Bialgebra };
            let mut r = check_package(h, level)?;
            r.flag("commutative", h.is_commutative());
            r.flag("cocommutative", h.is_cocommutative());
            r.dim("dim", h.dim());
            r
        }
        (CheckKind::PartialAction, Object::PartialAction(pa)) => check_partial_action(pa)?,
        (CheckKind::PartialCoaction, Object::PartialCoaction(pc)) => check_partial_coaction(pc)?,
        (CheckKind::ModuleCoalgebra, Object::ModuleCoalgebra(p)) => check_partial_module_coalgebra(p)?,
        (CheckKind::ComoduleCoalgebra, Object::ComoduleCoalgebra(p)) => check_partial_comodule_coalgebra(p)?,
        (CheckKind::Pairing, Object::Pairing(p)) => {
            let mut r = Report::new("pairing");
            r.dim("rows", p.left_dim());
            r.dim("cols", p.right_dim());
            r.flag("non-degenerate", p.is_nondegenerate());
            r
        }
        (CheckKind::SetPartialAction, Object::SetPartialAction(s)) => check_set_partial_action(s)?,
        (CheckKind::Groupoid, Object::Groupoid(g)) => check_groupoid(g)?,
        (CheckKind::HopfAlgebroid, Object::HopfAlgebroid(h)) => full_report(h)?,
        (CheckKind::CRing, Object::CRing(p) | Object::ModuleCoalgebra(p)) => check_cring(&cring(p)?)?,
        (CheckKind::Cosmash, Object::ComoduleCoalgebra(p)) => check_cosmash(&cosmash(p)?)?,
        _ => return Err(mismatch(kind, obj)),
    };
    Ok(r)
}

/// `check`: the selected object's report. Without `kind`, the object's own kind decides the checker.
pub fn run_check(file: &FixtureFile, kind: Option<CheckKind>, object: Option<&str>) -> Result<(String, Report)> {
    let (name, kind) = match kind {
        Some(k) => (select(file, k.accepts(), object, "--object")?, k),
        None => {
            let all: Vec<&str> = file.objects.values().map(|s| s.kind()).collect();
            let name = select(file, &all, object, "--object")?;
            let k = CheckKind::natural(file.objects[&name].kind());
            (name, k)
        }
    };
    let r = check_object(kind, &file.get(&name)?)?;
    Ok((name, r))
}

/// `report`: the natural check of every object that no other object refers to.
pub fn run_report(file: &FixtureFile) -> Result<Vec<(String, Report)>> {
    file.objects
        .iter()
        .filter(|(n, _)| !file.is_referenced(n))
        .map(|(n, s)| Ok((n.clone(), check_object(CheckKind::natural(s.kind()), &file.get(n)?)?)))
        .collect()
}

/// A construction performed by `build`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    SmashAlgebroid,
    PartialSplitAlgebroid,
    SplitAlgebroid,
    Groupoid,
    GroupoidAlgebroid,
    KgAction,
    DualCoaction,
    ModuleCoalgebra,
    ComoduleCoalgebra,
    Cosmash,
    CRing,
    ActionFromCoaction,
    CoactionFromAction,
}

impl Construction {
    pub fn source_kind(self) -> &'static str {
        match self {
            Construction::SmashAlgebroid | Construction::CoactionFromAction => "partial-action",
            Construction::PartialSplitAlgebroid | Construction::SplitAlgebroid | Construction::ActionFromCoaction => {
                "partial-coaction"
            }
            Construction::Groupoid
            | Construction::GroupoidAlgebroid
            | Construction::KgAction
            | Construction::DualCoaction
            | Construction::ModuleCoalgebra
            | Construction::ComoduleCoalgebra => "set-partial-action",
            Construction::Cosmash => "comodule-coalgebra",
            Construction::CRing => "module-coalgebra",
        }
    }

    pub fn slug(self) -> &'static str {
        match self {
            Construction::SmashAlgebroid => "smash-algebroid",
            Construction::PartialSplitAlgebroid => "partial-split-algebroid",
            Construction::SplitAlgebroid => "split-algebroid",
            Construction::Groupoid => "groupoid",
            Construction::GroupoidAlgebroid => "groupoid-algebroid",
            Construction::KgAction => "kg-action",
            Construction::DualCoaction => "dual-coaction",
            Construction::ModuleCoalgebra => "module-coalgebra",
            Construction::ComoduleCoalgebra => "comodule-coalgebra",
            Construction::Cosmash => "cosmash",
            Construction::CRing => "c-ring",
            Construction::ActionFromCoaction => "action",
            Construction::CoactionFromAction => "coaction",
        }
    }
}

/// Inputs of `build`; unnamed inputs are selected as in [`select`].
#[derive(Clone, Copy, Debug)]
pub struct BuildRequest<'a> {
    pub construction: Construction,
    pub object: Option<&'a str>,
    /// The other Hopf algebra of a transfer.
    pub hopf: Option<&'a str>,
    pub pairing: Option<&'a str>,
    pub name: Option<&'a str>,
}

/// One-line description of a built object.
pub fn describe(obj: &Object) -> Result<String> {
    Ok(match obj {
        Object::HopfAlgebroid(h) => format!("hopf-algebroid, dim {} over a base of dim {}", h.dim(), h.base_dim()),
        Object::Groupoid(g) => format!("groupoid, {} arrows on {} objects", g.arrows(), g.objects),
        Object::Coalgebra(c) => format!("coalgebra, dim {}", c.dim()),
        Object::CRing(p) => format!("c-ring, dim {}", cring(p)?.dim()),
        Object::PartialAction(pa) => {
            format!("partial-action of a dim {} Hopf algebra on a dim {} algebra", pa.h.dim(), pa.a.dim())
        }
        Object::PartialCoaction(pc) => {
            format!("partial-coaction of a dim {} Hopf algebra on a dim {} algebra", pc.k.dim(), pc.a.dim())
        }
        Object::ModuleCoalgebra(p) => format!("module-coalgebra, dim {}", p.c.dim()),
        Object::ComoduleCoalgebra(p) => format!("comodule-coalgebra, dim {}", p.c.dim()),
        other => other.kind().to_string(),
    })
}

fn hopf_of(file: &FixtureFile, name: Option<&str>) -> Result<crate::structures::HopfPackage> {
    let n = select(file, &["hopf"], name, "--hopf")?;
    match file.get(&n)? {
        Object::Hopf(h) => Ok(h),
        _ => unreachable!(),
    }
}

fn pairing_of(file: &FixtureFile, name: Option<&str>, role: &str) -> Result<crate::structures::Pairing> {
    let n = select(file, &["pairing"], name, role)?;
    match file.get(&n)? {
        Object::Pairing(p) => Ok(p),
        _ => unreachable!(),
    }
}

/// `build`: a new fixture holding the constructed object, and its description.
pub fn run_build(file: &FixtureFile, req: &BuildRequest<'_>) -> Result<(FixtureFile, String)> {
    let c = req.construction;
    let src = select(file, &[c.source_kind()], req.object, "--object")?;
    let obj = file.get(&src)?;
    let built = match (c, &obj) {
        (Construction::SmashAlgebroid, Object::PartialAction(pa)) => Object::HopfAlgebroid(smash_hopf_algebroid(pa)?),
        (Construction::PartialSplitAlgebroid, Object::PartialCoaction(pc)) => {
            Object::HopfAlgebroid(partial_split_hopf_algebroid(pc)?)
        }
        (Construction::SplitAlgebroid, Object::PartialCoaction(pc)) => Object::HopfAlgebroid(split_hopf_algebroid(pc)?),
        (Construction::Groupoid, Object::SetPartialAction(s)) => Object::Groupoid(groupoid_of_action(s)),
        (Construction::GroupoidAlgebroid, Object::SetPartialAction(s)) => {
            Object::HopfAlgebroid(function_hopf_algebroid(&groupoid_of_action(s))?)
        }
        (Construction::KgAction, Object::SetPartialAction(s)) => Object::PartialAction(to_kg_partial_action(s)?),
        (Construction::DualCoaction, Object::SetPartialAction(s)) => {
            Object::PartialCoaction(to_dual_partial_coaction(s)?)
        }
        (Construction::ModuleCoalgebra, Object::SetPartialAction(s)) => {
            Object::ModuleCoalgebra(module_coalgebra_from_set(s)?)
        }
        (Construction::ComoduleCoalgebra, Object::SetPartialAction(s)) => {
            Object::ComoduleCoalgebra(comodule_coalgebra_from_set(s)?)
        }
        (Construction::Cosmash, Object::ComoduleCoalgebra(p)) => Object::Coalgebra(cosmash(p)?.coalgebra()?),
        (Construction::CRing, Object::ModuleCoalgebra(p)) => {
            cring(p)?;
            Object::CRing(p.clone())
        }
        (Construction::ActionFromCoaction, Object::PartialCoaction(pc)) => {
            let h = hopf_of(file, req.hopf)?;
            Object::PartialAction(action_from_coaction(pc, &pairing_of(file, req.pairing, "--pairing")?, &h)?)
        }
        (Construction::CoactionFromAction, Object::PartialAction(pa)) => {
            let k = hopf_of(file, req.hopf)?;
            Object::PartialCoaction(coaction_from_action(pa, &pairing_of(file, req.pairing, "--pairing")?, &k)?)
        }
        _ => unreachable!("select returned an object of the source kind"),
    };
    let name = req.name.map(str::to_string).unwrap_or_else(|| format!("{src}.{}", c.slug()));
    let mut out = FixtureFile::new(file.field);
    out.insert(&name, &built);
    let summary = format!("{name}: {}", describe(&built)?);
    Ok((out, summary))
}

/// The pairing checked by `pair`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PairKind {
    /// Left: partial coaction; right: partial action; `pairing`: the Hopf pairing (rows `H`).
    Skew,
    /// Left: partial action; right: comodule coalgebra; Hopf pairing (rows `H`) and `(A, C)` (rows `A`).
    SmashCosmash,
    /// Left: right partial coaction, mirrored to a left one; right: module coalgebra; `⟨K, H⟩` and `(C, A)`.
    CringCoring,
    /// Left: comodule coalgebra; right: partial coaction; `pairing`: `(A, C)` (rows `A`).
    Comodule,
}

/// Inputs of `pair`.
#[derive(Clone, Copy, Debug)]
pub struct PairRequest<'a> {
    pub kind: PairKind,
    pub left: Option<&'a str>,
    pub right: Option<&'a str>,
    pub hopf_pairing: Option<&'a str>,
    pub pairing: Option<&'a str>,
}

fn pick(file: &FixtureFile, kind: &str, name: Option<&str>, role: &str) -> Result<Object> {
    file.get(&select(file, &[kind], name, role)?)
}

/// `pair`: the report of the requested pairing construction.
pub fn run_pair(file: &FixtureFile, req: &PairRequest<'_>) -> Result<(String, Report)> {
    let label = format!("{:?}", req.kind).to_lowercase();
    let r = match req.kind {
        PairKind::Skew => {
            let (Object::PartialCoaction(pc), Object::PartialAction(pa)) = (
                pick(file, "partial-coaction", req.left, "--left")?,
                pick(file, "partial-action", req.right, "--right")?,
            ) else {
                unreachable!()
            };
            check_skew_pairing(&canonical_skew_pairing(&pc, &pa, &pairing_of(file, req.pairing, "--pairing")?)?)?
        }
        PairKind::SmashCosmash => {
            let (Object::PartialAction(pa), Object::ComoduleCoalgebra(pcc)) = (
                pick(file, "partial-action", req.left, "--left")?,
                pick(file, "comodule-coalgebra", req.right, "--right")?,
            ) else {
                unreachable!()
            };
            let hopf = pairing_of(file, req.hopf_pairing, "--hopf-pairing")?;
            let t = CompatibleTriple::new(hopf, pairing_of(file, req.pairing, "--pairing")?, pa, pcc);
            smash_cosmash_pairing(&t)?.1
        }
        PairKind::CringCoring => {
            let (Object::PartialCoaction(pc), Object::ModuleCoalgebra(pmc)) = (
                pick(file, "partial-coaction", req.left, "--left")?,
                pick(file, "module-coalgebra", req.right, "--right")?,
            ) else {
                unreachable!()
            };
            let hopf = pairing_of(file, req.hopf_pairing, "--hopf-pairing")?;
            let left = LeftPartialCoaction::from_right(&pc)?;
            cring_coring_pairing(&CompatibleTriple::new(hopf, pairing_of(file, req.pairing, "--pairing")?, left, pmc))?
        }
        PairKind::Comodule => {
            let (Object::ComoduleCoalgebra(pcc), Object::PartialCoaction(pc)) = (
                pick(file, "comodule-coalgebra", req.left, "--left")?,
                pick(file, "partial-coaction", req.right, "--right")?,
            ) else {
                unreachable!()
            };
            comodule_coalgebra_vs_comodule_algebra(&pcc, &pc, &pairing_of(file, req.pairing, "--pairing")?)?
        }
    };
    Ok((label, r))
}
