//! Command implementations. Each returns data; `main` does the I/O.

use crate::error::{CliError, Result};
use crate::format::{load, AlgebraFile, Document, Meta};
use crate::report::{section, ReportFile};
use itertools::Itertools;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use tlz_core::algebra::{
    check_compatible_leibniz, check_compatible_ternary, check_leibniz, check_ternary_leibniz, direct_sum_binary,
    direct_sum_ternary, pencil_binary, pencil_ternary, scalar_extension, tensor_square_leibniz, ternary_from_binary,
};
use tlz_core::deform::{
    check_deformation_by_expansion, check_deformation_equations, check_dual_nijenhuis_pair, check_equivalence,
    check_nijenhuis_pair, deformation_from_pair, linear_deformation_check, pair_sum_nijenhuis, PairData,
};
use tlz_core::modrep::{
    bimodule_from_binary, bimodule_from_rep, check_binary_bimodule, check_cocycle, check_compatible_bimodule_binary,
    check_compatible_bimodule_ternary, check_compatible_representations, check_o_morphism, check_o_operator,
    check_rb_bimodule_binary, check_rb_bimodule_ternary, check_representation, check_ternary_bimodule,
    direct_sum_bimodules, dual_representation, induced_bimodule_binary, induced_bimodule_ternary, o_operator_bracket,
    rep_from_bimodule, semidirect_binary, semidirect_from_rep, semidirect_ternary, BinaryBimodule, CompatiblePack,
    OOperatorData, Representation, TernaryBimodule,
};
use tlz_core::operators::{
    centroid_bracket_family, check_compatible_averaging, check_inverse_rb_derivation, check_nijenhuis_rb_equivalence,
    check_operator_transfer, induced_bracket_binary, induced_bracket_ternary, solve_operator_space, AlgebraRef,
    BinaryRecipe, OperatorKind, OperatorSpace, TernaryRecipe,
};
use tlz_core::scalar::{parse_reduced, Scalar};
use tlz_core::Matrix;

pub const CHECK_KINDS: &[&str] = &[
    "leibniz",
    "ternary-leibniz",
    "compatible-leibniz",
    "compatible-ternary",
    "operator",
    "operator-transfer",
    "compatible-averaging",
    "inverse-rb-derivation",
    "nijenhuis-rb",
    "bimodule",
    "compatible-bimodule",
    "representation",
    "compatible-representations",
    "rb-bimodule",
    "cocycle",
    "o-operator",
    "o-morphism",
    "deformation-equations",
    "deformation-expansion",
    "linear-deformation",
    "nijenhuis-pair",
    "dual-nijenhuis-pair",
    "pair-sum",
    "equivalence",
];

pub const RECIPES: &[&str] = &[
    "ternary-from-binary",
    "tensor-square",
    "direct-sum",
    "scalar-extension",
    "averaging-bracket",
    "nijenhuis-bracket",
    "rb-bracket",
    "centroid-bracket",
    "semidirect",
    "semidirect-cocycle",
    "o-bracket",
    "induced-bimodule",
    "dual-rep",
    "deformation-from-pair",
    "pencil",
    "regular-bimodule",
    "adjoint-rep",
    "rep-from-bimodule",
    "bimodule-from-rep",
];

pub const SOLVE_KINDS: &[&str] = &["centroid", "central-derivation", "derivation"];

/// Flags shared by the subcommands.
#[derive(Debug, Clone, Default)]
pub struct Options {
    pub weight: Option<Scalar>,
    pub op_kind: Option<String>,
    pub d1: Option<PathBuf>,
    pub d2: Option<PathBuf>,
    pub d3: Option<PathBuf>,
    pub strict_averaging: bool,
    pub k1: Option<Scalar>,
    pub k2: Option<Scalar>,
    pub variant: Option<u8>,
}

pub fn parse_scalar(text: &str) -> std::result::Result<Scalar, String> {
    parse_reduced(text).ok_or_else(|| format!("`{text}` is not a reduced fraction p/q"))
}

/// Loaded positional inputs.
struct Inputs {
    docs: Vec<(PathBuf, Document)>,
}

macro_rules! accessor {
    ($name:ident, $variant:ident, $ty:ty, $what:literal) => {
        fn $name(&self, i: usize) -> Result<&$ty> {
            match &self.docs[i].1 {
                Document::$variant(x) => Ok(x),
                other => Err(self.mismatch(i, $what, other)),
            }
        }
    };
}

impl Inputs {
    fn load(paths: &[PathBuf], usage: &str) -> Result<Self> {
        let expected = usage.split_whitespace().count();
        if paths.len() != expected {
            return Err(CliError::usage(format!(
                "expected {expected} input files ({usage}), found {}",
                paths.len()
            )));
        }
        let docs = paths.iter().map(|p| Ok((p.clone(), load(p)?))).collect::<Result<_>>()?;
        Ok(Inputs { docs })
    }

    fn mismatch(&self, i: usize, want: &str, found: &Document) -> CliError {
        CliError::format(format!(
            "{}: expected {want}, found {}",
            self.docs[i].0.display(),
            found.describe()
        ))
    }

    fn doc(&self, i: usize) -> &Document {
        &self.docs[i].1
    }

    accessor!(binary, Binary, tlz_core::algebra::BinaryAlgebra, "binary algebra");
    accessor!(ternary, Ternary, tlz_core::algebra::TernaryAlgebra, "ternary algebra");
    accessor!(
        comm_assoc,
        CommAssoc,
        tlz_core::algebra::CommAssocAlgebra,
        "commutative associative algebra"
    );
    accessor!(bimodule2, BinaryBimodule, BinaryBimodule, "binary bimodule");
    accessor!(bimodule3, TernaryBimodule, TernaryBimodule, "ternary bimodule");
    accessor!(rep, Representation, Representation, "representation");
    accessor!(op, Operator, Matrix, "operator");
    accessor!(cocycle, Cocycle, tlz_core::modrep::Cocycle, "cocycle");
    accessor!(
        deformation,
        Deformation,
        tlz_core::deform::DeformationData,
        "deformation"
    );

    fn pair(&self, i: usize) -> Result<PairData> {
        Ok(PairData::new(self.op(i)?.clone(), self.op(i + 1)?.clone())?)
    }

    fn is_binary(&self, i: usize) -> bool {
        matches!(self.doc(i), Document::Binary(_))
    }
}

fn operator_kind(opts: &Options) -> Result<OperatorKind> {
    let name = opts
        .op_kind
        .as_deref()
        .ok_or_else(|| CliError::usage("--op-kind is required for this check"))?;
    let weight = || opts.weight.clone().unwrap_or_else(Scalar::zero);
    let aux = |p: &Option<PathBuf>| -> Result<Option<Matrix>> {
        match p {
            None => Ok(None),
            Some(path) => match load(path)? {
                Document::Operator(m) => Ok(Some(m)),
                other => Err(CliError::format(format!(
                    "{}: expected operator, found {}",
                    path.display(),
                    other.describe()
                ))),
            },
        }
    };
    Ok(match name {
        "derivation" => OperatorKind::Derivation(weight()),
        "rota-baxter" => OperatorKind::RotaBaxter(weight()),
        "centroid" => OperatorKind::Centroid,
        "reynolds" => OperatorKind::Reynolds,
        "averaging" => OperatorKind::Averaging,
        "nijenhuis" => OperatorKind::Nijenhuis,
        "central-derivation" => OperatorKind::CentralDerivation,
        "generalized-derivation" => OperatorKind::GeneralizedDerivation {
            d1: aux(&opts.d1)?,
            d2: aux(&opts.d2)?,
            d3: aux(&opts.d3)?,
        },
        "quasiderivation" => OperatorKind::QuasiDerivation {
            d1: aux(&opts.d1)?,
            d2: aux(&opts.d2)?,
        },
        other => return Err(CliError::usage(format!("unknown operator kind `{other}`"))),
    })
}

fn flags<const N: usize>(items: [(&str, bool); N]) -> BTreeMap<String, bool> {
    items.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

pub fn run_check(kind: &str, inputs: &[PathBuf], opts: &Options) -> Result<ReportFile> {
    let load = |usage: &str| Inputs::load(inputs, usage);
    let report: ReportFile = match kind {
        "leibniz" => check_leibniz(load("B")?.binary(0)?).into(),
        "ternary-leibniz" => check_ternary_leibniz(load("T")?.ternary(0)?).into(),
        "compatible-leibniz" => {
            let a = load("B1 B2")?;
            check_compatible_leibniz(a.binary(0)?, a.binary(1)?)?.into()
        }
        "compatible-ternary" => {
            let a = load("T1 T2")?;
            check_compatible_ternary(a.ternary(0)?, a.ternary(1)?)?.into()
        }
        "operator" => {
            let a = load("A OP")?;
            let k = operator_kind(opts)?;
            let op = a.op(1)?;
            if a.is_binary(0) {
                tlz_core::operators::check_binary_operator(a.binary(0)?, &k, op)?.into()
            } else {
                tlz_core::operators::check_ternary_operator(a.ternary(0)?, &k, op)?.into()
            }
        }
        "operator-transfer" => {
            let a = load("B OP")?;
            let t = check_operator_transfer(a.binary(0)?, &operator_kind(opts)?, a.op(1)?)?;
            let holds = t.implication_holds();
            ReportFile::implication(
                "operator-transfer",
                holds,
                flags([
                    ("binary-pass", t.binary.passed()),
                    ("ternary-pass", t.ternary.passed()),
                    ("implication-holds", holds),
                ]),
                vec![section("binary", t.binary), section("ternary", t.ternary)],
            )
        }
        "compatible-averaging" => {
            let a = load("B BETA1 BETA2")?;
            check_compatible_averaging(a.binary(0)?, a.op(1)?, a.op(2)?, opts.strict_averaging)?.into()
        }
        "inverse-rb-derivation" => {
            let a = load("T R")?;
            check_inverse_rb_derivation(
                a.ternary(0)?,
                a.op(1)?,
                &opts.weight.clone().unwrap_or_else(Scalar::zero),
            )?
            .into()
        }
        "nijenhuis-rb" => {
            let a = load("T N")?;
            let r = check_nijenhuis_rb_equivalence(a.ternary(0)?, a.op(1)?)?;
            let holds = r.implication_holds();
            ReportFile::implication(
                "nijenhuis-rota-baxter",
                holds,
                flags([
                    ("square-zero", r.square_zero),
                    ("idempotent", r.idempotent),
                    ("nijenhuis", r.nijenhuis.passed()),
                    ("rota-baxter-0", r.rota_baxter_zero.passed()),
                    ("rota-baxter-minus-1", r.rota_baxter_minus_one.passed()),
                    ("implication-holds", holds),
                ]),
                vec![
                    section("nijenhuis", r.nijenhuis),
                    section("rota-baxter-0", r.rota_baxter_zero),
                    section("rota-baxter-minus-1", r.rota_baxter_minus_one),
                ],
            )
        }
        "bimodule" => {
            let a = load("A M")?;
            if a.is_binary(0) {
                check_binary_bimodule(a.binary(0)?, a.bimodule2(1)?)?.into()
            } else {
                check_ternary_bimodule(a.ternary(0)?, a.bimodule3(1)?)?.into()
            }
        }
        "compatible-bimodule" => {
            let a = load("A1 A2 M1 M2")?;
            if a.is_binary(0) {
                let pack = CompatiblePack {
                    first: a.bimodule2(2)?.clone(),
                    second: a.bimodule2(3)?.clone(),
                };
                check_compatible_bimodule_binary(a.binary(0)?, a.binary(1)?, &pack)?.into()
            } else {
                let pack = CompatiblePack {
                    first: a.bimodule3(2)?.clone(),
                    second: a.bimodule3(3)?.clone(),
                };
                check_compatible_bimodule_ternary(a.ternary(0)?, a.ternary(1)?, &pack)?.into()
            }
        }
        "representation" => {
            let a = load("T R")?;
            check_representation(a.ternary(0)?, a.rep(1)?)?.into()
        }
        "compatible-representations" => {
            let a = load("T R1 R2")?;
            check_compatible_representations(a.ternary(0)?, a.rep(1)?, a.rep(2)?)?.into()
        }
        "rb-bimodule" => {
            let a = load("A R M RM")?;
            if a.is_binary(0) {
                check_rb_bimodule_binary(a.binary(0)?, a.op(1)?, a.bimodule2(2)?, a.op(3)?)?.into()
            } else {
                check_rb_bimodule_ternary(a.ternary(0)?, a.op(1)?, a.bimodule3(2)?, a.op(3)?)?.into()
            }
        }
        "cocycle" => {
            let a = load("T M W")?;
            check_cocycle(a.ternary(0)?, a.bimodule3(1)?, a.cocycle(2)?)?.into()
        }
        "o-operator" => {
            let a = load("T R OP")?;
            let data = OOperatorData::new(a.op(2)?.clone(), a.rep(1)?.clone())?;
            check_o_operator(&data, a.ternary(0)?)?.into()
        }
        "o-morphism" => {
            let a = load("T F PHI R OP OP2")?;
            let data = OOperatorData::new(a.op(4)?.clone(), a.rep(3)?.clone())?;
            let data2 = OOperatorData::new(a.op(5)?.clone(), a.rep(3)?.clone())?;
            check_o_morphism(a.ternary(0)?, a.op(1)?, a.op(2)?, &data, &data2)?.into()
        }
        "deformation-equations" => {
            let a = load("T R D")?;
            check_deformation_equations(a.ternary(0)?, a.rep(1)?, a.deformation(2)?)?.into()
        }
        "deformation-expansion" => {
            let a = load("T R D")?;
            check_deformation_by_expansion(a.ternary(0)?, a.rep(1)?, a.deformation(2)?)?.into()
        }
        "linear-deformation" => {
            let a = load("T R D")?;
            linear_deformation_check(a.ternary(0)?, a.rep(1)?, a.deformation(2)?)?.into()
        }
        "nijenhuis-pair" => {
            let a = load("T R N TV")?;
            check_nijenhuis_pair(a.ternary(0)?, a.rep(1)?, &a.pair(2)?)?.into()
        }
        "dual-nijenhuis-pair" => {
            let a = load("T R N TV")?;
            check_dual_nijenhuis_pair(a.ternary(0)?, a.rep(1)?, &a.pair(2)?)?.into()
        }
        "pair-sum" => {
            let a = load("T R N TV")?;
            let r = pair_sum_nijenhuis(a.ternary(0)?, a.rep(1)?, &a.pair(2)?)?;
            let holds = r.implication_holds();
            ReportFile::implication(
                "pair-sum-nijenhuis",
                holds,
                flags([
                    ("pair", r.pair.passed()),
                    ("sum-nijenhuis", r.sum.passed()),
                    ("implication-holds", holds),
                ]),
                vec![section("pair", r.pair), section("sum", r.sum)],
            )
        }
        "equivalence" => {
            let a = load("T R DA DB N TV")?;
            check_equivalence(
                a.ternary(0)?,
                a.rep(1)?,
                a.deformation(2)?,
                a.deformation(3)?,
                &a.pair(4)?,
            )?
            .into()
        }
        other => {
            return Err(CliError::usage(format!(
                "unknown check kind `{other}` (expected one of: {})",
                CHECK_KINDS.join(", ")
            )))
        }
    };
    Ok(report)
}

fn stems(inputs: &[PathBuf]) -> String {
    inputs
        .iter()
        .map(|p| p.file_stem().and_then(|s| s.to_str()).unwrap_or("input"))
        .join(", ")
}

pub fn run_construct(recipe: &str, inputs: &[PathBuf], opts: &Options) -> Result<AlgebraFile> {
    let load = |usage: &str| Inputs::load(inputs, usage);
    let doc = match recipe {
        "ternary-from-binary" if inputs.len() == 2 => {
            let a = load("B M")?;
            Document::TernaryBimodule(bimodule_from_binary(a.binary(0)?, a.bimodule2(1)?)?)
        }
        "ternary-from-binary" => Document::Ternary(ternary_from_binary(load("B")?.binary(0)?)),
        "tensor-square" => Document::Binary(tensor_square_leibniz(load("T")?.ternary(0)?)),
        "direct-sum" => {
            let a = load("A B")?;
            match (a.doc(0), a.doc(1)) {
                (Document::Binary(x), Document::Binary(y)) => Document::Binary(direct_sum_binary(x, y)),
                (Document::Ternary(x), Document::Ternary(y)) => Document::Ternary(direct_sum_ternary(x, y)),
                (Document::TernaryBimodule(x), Document::TernaryBimodule(y)) => {
                    Document::TernaryBimodule(direct_sum_bimodules(x, y)?)
                }
                (x, y) => {
                    return Err(CliError::format(format!(
                        "cannot form a direct sum of a {} and a {}",
                        x.describe(),
                        y.describe()
                    )))
                }
            }
        }
        "scalar-extension" => {
            let a = load("C T")?;
            Document::Ternary(scalar_extension(a.comm_assoc(0)?, a.ternary(1)?))
        }
        "averaging-bracket" => {
            let a = load("A BETA")?;
            let beta = a.op(1)?.clone();
            if a.is_binary(0) {
                Document::Binary(induced_bracket_binary(
                    a.binary(0)?,
                    &BinaryRecipe::AveragingLeft(beta),
                )?)
            } else {
                Document::Ternary(induced_bracket_ternary(a.ternary(0)?, &TernaryRecipe::Averaging(beta))?)
            }
        }
        "nijenhuis-bracket" => {
            let a = load("B N")?;
            Document::Binary(induced_bracket_binary(
                a.binary(0)?,
                &BinaryRecipe::NijenhuisSum(a.op(1)?.clone()),
            )?)
        }
        "rb-bracket" => {
            let a = load("A R")?;
            let r = a.op(1)?.clone();
            let w = opts.weight.clone().unwrap_or_else(Scalar::zero);
            if a.is_binary(0) {
                Document::Binary(induced_bracket_binary(a.binary(0)?, &BinaryRecipe::RotaBaxter(r, w))?)
            } else if w.is_zero() {
                Document::Ternary(induced_bracket_ternary(a.ternary(0)?, &TernaryRecipe::RotaBaxter0(r))?)
            } else {
                return Err(CliError::usage(
                    "ternary Rota-Baxter brackets are only defined for weight 0",
                ));
            }
        }
        "centroid-bracket" => {
            let a = load("T THETA")?;
            Document::Ternary(centroid_bracket_family(
                a.ternary(0)?,
                a.op(1)?,
                opts.variant.unwrap_or(1),
            )?)
        }
        "semidirect" => {
            let a = load("A M")?;
            match (a.doc(0), a.doc(1)) {
                (Document::Binary(b), Document::BinaryBimodule(m)) => Document::Binary(semidirect_binary(b, m)?),
                (Document::Ternary(t), Document::TernaryBimodule(m)) => {
                    Document::Ternary(semidirect_ternary(t, m, None)?)
                }
                (Document::Ternary(t), Document::Representation(r)) => Document::Ternary(semidirect_from_rep(t, r)?),
                (x, y) => {
                    return Err(CliError::format(format!(
                        "no semidirect product of a {} with a {}",
                        x.describe(),
                        y.describe()
                    )))
                }
            }
        }
        "semidirect-cocycle" => {
            let a = load("T M W")?;
            Document::Ternary(semidirect_ternary(a.ternary(0)?, a.bimodule3(1)?, Some(a.cocycle(2)?))?)
        }
        "o-bracket" => {
            let a = load("R OP")?;
            let data = OOperatorData::new(a.op(1)?.clone(), a.rep(0)?.clone())?;
            Document::Ternary(o_operator_bracket(&data)?)
        }
        "induced-bimodule" => {
            let a = load("A R M RM")?;
            if a.is_binary(0) {
                Document::BinaryBimodule(induced_bimodule_binary(
                    a.binary(0)?,
                    a.op(1)?,
                    a.bimodule2(2)?,
                    a.op(3)?,
                )?)
            } else {
                Document::TernaryBimodule(induced_bimodule_ternary(
                    a.ternary(0)?,
                    a.op(1)?,
                    a.bimodule3(2)?,
                    a.op(3)?,
                )?)
            }
        }
        "dual-rep" => Document::Representation(dual_representation(load("R")?.rep(0)?)),
        "deformation-from-pair" => {
            let a = load("T R N TV")?;
            Document::Deformation(Box::new(deformation_from_pair(a.ternary(0)?, a.rep(1)?, &a.pair(2)?)?))
        }
        "pencil" => {
            let a = load("A B")?;
            let k1 = opts.k1.clone().ok_or_else(|| CliError::usage("pencil needs --k1"))?;
            let k2 = opts.k2.clone().ok_or_else(|| CliError::usage("pencil needs --k2"))?;
            match (a.doc(0), a.doc(1)) {
                (Document::Binary(x), Document::Binary(y)) => Document::Binary(pencil_binary(x, y, &k1, &k2)?),
                (Document::Ternary(x), Document::Ternary(y)) => Document::Ternary(pencil_ternary(x, y, &k1, &k2)?),
                (x, y) => {
                    return Err(CliError::format(format!(
                        "cannot combine a {} and a {}",
                        x.describe(),
                        y.describe()
                    )))
                }
            }
        }
        "regular-bimodule" => {
            let a = load("A")?;
            if a.is_binary(0) {
                Document::BinaryBimodule(BinaryBimodule::regular(a.binary(0)?))
            } else {
                Document::TernaryBimodule(TernaryBimodule::regular(a.ternary(0)?))
            }
        }
        "adjoint-rep" => Document::Representation(Representation::adjoint(load("T")?.ternary(0)?)),
        "rep-from-bimodule" => Document::Representation(rep_from_bimodule(load("M")?.bimodule3(0)?)),
        "bimodule-from-rep" => Document::TernaryBimodule(bimodule_from_rep(load("R")?.rep(0)?)),
        other => {
            return Err(CliError::usage(format!(
                "unknown recipe `{other}` (expected one of: {})",
                RECIPES.join(", ")
            )))
        }
    };
    Ok(AlgebraFile::from_document(
        &doc,
        Meta::named(format!("{recipe}({})", stems(inputs))),
    ))
}

/// Operators spanning (or, for affine solution sets, lying in) the solution
/// space; every returned operator satisfies the identity.
pub fn run_solve(kind: &str, input: &Path, opts: &Options) -> Result<Vec<AlgebraFile>> {
    let op_kind = match kind {
        "centroid" => OperatorKind::Centroid,
        "central-derivation" => OperatorKind::CentralDerivation,
        "derivation" => OperatorKind::Derivation(opts.weight.clone().unwrap_or_else(Scalar::zero)),
        other => {
            return Err(CliError::usage(format!(
                "`{other}` is not a linear operator class (expected one of: {})",
                SOLVE_KINDS.join(", ")
            )))
        }
    };
    let doc = load(input)?;
    let algebra = match &doc {
        Document::Binary(b) => AlgebraRef::Binary(b),
        Document::Ternary(t) => AlgebraRef::Ternary(t),
        other => {
            return Err(CliError::format(format!(
                "{}: expected an algebra, found {}",
                input.display(),
                other.describe()
            )))
        }
    };
    let ops: Vec<Matrix> = match solve_operator_space(algebra, &op_kind)? {
        OperatorSpace::Linear(basis) => basis,
        OperatorSpace::Affine { particular, basis } => std::iter::once(Ok(particular.clone()))
            .chain(basis.iter().map(|b| particular.add(b)))
            .collect::<tlz_core::Result<_>>()?,
        OperatorSpace::Empty => Vec::new(),
    };
    let stem = input.file_stem().and_then(|s| s.to_str()).unwrap_or("input");
    Ok(ops
        .into_iter()
        .enumerate()
        .map(|(i, m)| AlgebraFile::from_document(&Document::Operator(m), Meta::named(format!("{kind}({stem}) #{i}"))))
        .collect())
}
