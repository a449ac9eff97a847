mod common;

use common::corpus::{binaries, operators, rng, ternaries};
use common::oracle;
use tlz_core::algebra::{
    check_compatible_leibniz, check_compatible_ternary, check_leibniz, check_ternary_leibniz, direct_sum_ternary,
    pencil_ternary, tensor_square_leibniz, ternary_from_binary, TernaryAlgebra,
};
use tlz_core::catalog;
use tlz_core::modrep::{
    check_binary_bimodule, check_compatible_bimodule_ternary, check_compatible_representations, check_o_morphism,
    check_rb_bimodule_binary, check_rb_bimodule_ternary, check_representation, check_ternary_bimodule,
    compatible_semidirect, compatible_semidirect_rep, induced_bimodule_binary, induced_bimodule_ternary,
    is_ternary_homomorphism, o_operator_bracket, rb_descendent_binary, rb_descendent_ternary, BinaryBimodule,
    CompatiblePack, OOperatorData, Representation, TernaryBimodule,
};
use tlz_core::operators::{
    averaging_pair, centroid_bracket_family, check_binary_operator, check_compatible_averaging,
    check_inverse_rb_derivation, check_nijenhuis_rb_equivalence, check_ternary_operator, induced_bracket_binary,
    induced_bracket_ternary, BinaryRecipe, OperatorKind, TernaryRecipe,
};
use tlz_core::scalar::{frac, int};
use tlz_core::{Matrix, Scalar, Tensor};

/// Counts how often a premise held so implications are not vacuous.
#[derive(Default)]
struct Premises(usize);

impl Premises {
    fn check(&mut self, premise: bool, conclusion: bool, what: &str) {
        if premise {
            self.0 += 1;
            assert!(conclusion, "implication fails on {what}");
        }
    }

    fn at_least(&self, k: usize) {
        assert!(self.0 >= k, "only {} non-vacuous cases (want {k})", self.0);
    }
}

fn leibniz_ternaries() -> Vec<(String, TernaryAlgebra)> {
    ternaries()
        .into_iter()
        .filter(|(_, t)| oracle::ternary_leibniz(t.tensor()))
        .collect()
}

#[test]
fn tensor_square_of_ternary_leibniz_is_leibniz() {
    let mut seen = Premises::default();
    for (name, t) in ternaries() {
        let sq = tensor_square_leibniz(&t);
        assert_eq!(sq.dim(), t.dim() * t.dim());
        let lib = check_leibniz(&sq).passed();
        assert_eq!(lib, oracle::leibniz(sq.tensor()), "{name}");
        seen.check(check_ternary_leibniz(&t).passed(), lib, &name);
    }
    seen.at_least(8);
}

#[test]
fn rota_baxter_zero_descendents_are_leibniz() {
    let mut binary = Premises::default();
    for (name, b) in binaries().into_iter().filter(|(_, b)| check_leibniz(b).passed()) {
        for (op_name, op) in operators(b.dim(), 3) {
            let rb = check_binary_operator(&b, &OperatorKind::RotaBaxter(int(0)), &op)
                .unwrap()
                .passed();
            let desc = rb_descendent_binary(&b, &op).unwrap();
            binary.check(rb, check_leibniz(&desc).passed(), &format!("{name}/{op_name}"));
        }
    }
    binary.at_least(20);

    let mut ternary = Premises::default();
    for (name, t) in leibniz_ternaries() {
        for (op_name, op) in operators(t.dim(), 3) {
            let rb = check_ternary_operator(&t, &OperatorKind::RotaBaxter(int(0)), &op)
                .unwrap()
                .passed();
            let desc = rb_descendent_ternary(&t, &op).unwrap();
            assert_eq!(
                desc,
                induced_bracket_ternary(&t, &TernaryRecipe::RotaBaxter0(op.clone())).unwrap()
            );
            ternary.check(rb, check_ternary_leibniz(&desc).passed(), &format!("{name}/{op_name}"));
        }
    }
    ternary.at_least(20);
}

#[test]
fn heis2_nijenhuis_sum_bracket_is_compatible() {
    let b = catalog::heis2();
    let n = Matrix::from_int_rows(&[&[0, 0], &[1, 0]]);
    let induced = induced_bracket_binary(&b, &BinaryRecipe::NijenhuisSum(n)).unwrap();
    assert!(check_leibniz(&induced).passed());
    assert!(check_compatible_leibniz(&b, &induced).unwrap().passed());
}

#[test]
fn injective_commuting_compatible_averaging_pairs_give_compatible_brackets() {
    let mut seen = Premises::default();
    for (name, b) in binaries().into_iter().filter(|(_, b)| check_leibniz(b).passed()) {
        let n = b.dim();
        let ops: Vec<Matrix> = [1, 2, 3, -1]
            .iter()
            .map(|&c| Matrix::scalar(n, int(c)))
            .chain(operators(n, 13).into_iter().map(|(_, m)| m))
            .collect();
        for b1 in &ops {
            for b2 in &ops {
                let averaging = |m: &Matrix| check_binary_operator(&b, &OperatorKind::Averaging, m).unwrap().passed();
                let report = check_compatible_averaging(&b, b1, b2, false).unwrap();
                let premise = averaging(b1)
                    && averaging(b2)
                    && report.passed()
                    && report.flag("commuting") == Some(true)
                    && report.flag("injective-1") == Some(true)
                    && report.flag("injective-2") == Some(true);
                let i1 = induced_bracket_binary(&b, &BinaryRecipe::AveragingLeft(b1.clone())).unwrap();
                let i2 = induced_bracket_binary(&b, &BinaryRecipe::AveragingLeft(b2.clone())).unwrap();
                let conclusion = check_leibniz(&i1).passed()
                    && check_leibniz(&i2).passed()
                    && check_compatible_leibniz(&i1, &i2).unwrap().passed();
                seen.check(premise, conclusion, &name);
            }
        }
    }
    seen.at_least(30);
}

#[test]
fn averaging_and_centroid_brackets_stay_ternary_leibniz() {
    let mut averaging = Premises::default();
    let mut centroid = Premises::default();
    for (name, t) in leibniz_ternaries() {
        let n = t.dim();
        let mut ops: Vec<Matrix> = operators(n, 17).into_iter().map(|(_, m)| m).collect();
        ops.push(Matrix::scalar(n, int(3)));
        for op in &ops {
            let avg = op.is_injective()
                && check_ternary_operator(&t, &OperatorKind::Averaging, op)
                    .unwrap()
                    .passed();
            let induced = induced_bracket_ternary(&t, &TernaryRecipe::Averaging(op.clone())).unwrap();
            averaging.check(avg, check_ternary_leibniz(&induced).passed(), &name);

            let cen = check_ternary_operator(&t, &OperatorKind::Centroid, op)
                .unwrap()
                .passed();
            for variant in 1..=3 {
                let family = centroid_bracket_family(&t, op, variant).unwrap();
                centroid.check(
                    cen,
                    check_ternary_leibniz(&family).passed(),
                    &format!("{name}/variant {variant}"),
                );
            }
        }
    }
    averaging.at_least(10);
    centroid.at_least(30);
}

#[test]
fn injective_averaging_on_a_compatible_pair_gives_a_compatible_pair() {
    let mut seen = Premises::default();
    let c = ternary_from_binary(&catalog::aff2());
    for (name, a) in leibniz_ternaries().into_iter().filter(|(_, t)| t.dim() <= 2) {
        let t1 = direct_sum_ternary(&a, &c);
        let t2 = direct_sum_ternary(&a, &TernaryAlgebra::zero(c.dim()));
        let n = t1.dim();
        let mut ops: Vec<Matrix> = operators(n, 19).into_iter().map(|(_, m)| m).collect();
        ops.push(Matrix::scalar(n, int(-2)));
        for op in &ops {
            let avg = |t: &TernaryAlgebra| {
                check_ternary_operator(t, &OperatorKind::Averaging, op)
                    .unwrap()
                    .passed()
            };
            let premise = op.is_injective() && avg(&t1) && avg(&t2);
            let (p1, p2) = averaging_pair(&t1, &t2, op).unwrap();
            let sum = pencil_ternary(&t1, &t2, &int(1), &int(1)).unwrap();
            let sum_beta = pencil_ternary(&p1, &p2, &int(1), &int(1)).unwrap();
            let conclusion = check_ternary_leibniz(&p1).passed()
                && check_ternary_leibniz(&p2).passed()
                && check_compatible_ternary(&p1, &p2).unwrap().passed()
                && is_ternary_homomorphism(op, &sum_beta, &sum).unwrap();
            seen.check(premise, conclusion, &name);
        }
    }
    seen.at_least(8);
}

#[test]
fn invertible_rota_baxter_inverse_is_a_derivation() {
    let mut seen = Premises::default();
    let mut r = rng(29);
    for (name, t) in leibniz_ternaries() {
        let n = t.dim();
        let mut ops = vec![
            Matrix::identity(n),
            Matrix::scalar(n, int(2)),
            Matrix::scalar(n, int(-1)),
        ];
        ops.extend((0..3).map(|_| catalog::random_invertible(&mut r, n)));
        for op in &ops {
            for w in [int(0), int(1), int(-1), int(-2), int(2)] {
                let report = check_inverse_rb_derivation(&t, op, &w).unwrap();
                let premise = report.failed_identities().iter().all(|id| !id.starts_with("operator"));
                let conclusion = report.failed_identities().iter().all(|id| !id.starts_with("inverse"));
                seen.check(premise, conclusion, &format!("{name} weight {w}"));
            }
        }
    }
    seen.at_least(20);
}

#[test]
fn nijenhuis_and_rota_baxter_agree_on_square_zero_and_idempotent_maps() {
    let mut square_zero = 0;
    let mut idempotent = 0;
    for (name, t) in leibniz_ternaries() {
        for (op_name, op) in operators(t.dim(), 31) {
            let report = check_nijenhuis_rb_equivalence(&t, &op).unwrap();
            assert!(report.implication_holds(), "{name}/{op_name}");
            // for idempotents both identities reduce to the same right side
            if report.idempotent {
                assert_eq!(
                    report.nijenhuis.passed(),
                    report.rota_baxter_minus_one.passed(),
                    "{name}/{op_name}"
                );
            }
            square_zero += report.square_zero as usize;
            idempotent += (report.idempotent && report.rota_baxter_minus_one.passed()) as usize;
        }
    }
    assert!(
        square_zero >= 10 && idempotent >= 5,
        "{square_zero} square-zero, {idempotent} idempotent"
    );
}

#[test]
fn rota_baxter_bimodules_induce_bimodules_over_the_descendent() {
    let mut binary = Premises::default();
    for (name, b) in binaries().into_iter().filter(|(_, b)| check_leibniz(b).passed()) {
        let n = b.dim();
        let module = BinaryBimodule::regular(&b);
        for (op_name, op) in operators(n, 37) {
            let rb = check_binary_operator(&b, &OperatorKind::RotaBaxter(int(0)), &op)
                .unwrap()
                .passed();
            let pair = check_rb_bimodule_binary(&b, &op, &module, &op).unwrap().passed();
            let induced = induced_bimodule_binary(&b, &op, &module, &op).unwrap();
            let desc = induced_bracket_binary(&b, &BinaryRecipe::RotaBaxter(op.clone(), int(0))).unwrap();
            let ok = check_binary_bimodule(&desc, &induced).unwrap().passed();
            binary.check(rb && pair, ok, &format!("{name}/{op_name}"));
        }
    }
    binary.at_least(15);

    let mut ternary = Premises::default();
    for (name, t) in leibniz_ternaries() {
        let module = TernaryBimodule::regular(&t);
        for (op_name, op) in operators(t.dim(), 37) {
            let rb = check_ternary_operator(&t, &OperatorKind::RotaBaxter(int(0)), &op)
                .unwrap()
                .passed();
            let pair = check_rb_bimodule_ternary(&t, &op, &module, &op).unwrap().passed();
            let induced = induced_bimodule_ternary(&t, &op, &module, &op).unwrap();
            let desc = rb_descendent_ternary(&t, &op).unwrap();
            let ok = check_ternary_bimodule(&desc, &induced).unwrap().passed();
            ternary.check(rb && pair, ok, &format!("{name}/{op_name}"));
        }
    }
    ternary.at_least(15);
}

#[test]
fn identity_rota_baxter_bimodule_doubles_the_actions() {
    let b = catalog::sl2();
    let module = BinaryBimodule::regular(&b);
    let id = Matrix::identity(3);
    let induced = induced_bimodule_binary(&b, &id, &module, &id).unwrap();
    assert_eq!(induced.l, module.l.scale(&int(2)));
    assert_eq!(induced.r, module.r.scale(&int(2)));
}

/// Embeds a representation on `V` into one on `V ⊕ W` (at `offset`) acting
/// by zero on the complement.
fn embed(rep: &Representation, offset: usize, total: usize) -> Representation {
    let n = rep.algebra_dim();
    let m = rep.module_dim();
    let place = |t: &Tensor| {
        Tensor::from_fn(vec![n, n, total, total], |i| {
            let (a, b) = (i[2].wrapping_sub(offset), i[3].wrapping_sub(offset));
            if a < m && b < m {
                t.get(&[i[0], i[1], a, b]).clone()
            } else {
                int(0)
            }
        })
    };
    Representation::new(place(&rep.lambda), place(&rep.mu), place(&rep.rho)).unwrap()
}

#[test]
fn block_sum_representations_are_compatible_but_their_semidirects_need_not_be() {
    let t = ternary_from_binary(&catalog::sl2());
    let n = t.dim();
    let ad = Representation::adjoint(&t);
    let r1 = embed(&ad, 0, 2 * n);
    let r2 = embed(&ad, n, 2 * n);
    let report = check_compatible_representations(&t, &r1, &r2).unwrap();
    assert!(report.passed());
    assert_eq!(report.flag("sum-is-representation"), Some(true));
    let (s1, s2) = compatible_semidirect_rep(
        &t,
        &t,
        &CompatiblePack {
            first: r1.clone(),
            second: r2.clone(),
        },
    )
    .unwrap();
    assert!(oracle::ternary_leibniz(s1.tensor()) && oracle::ternary_leibniz(s2.tensor()));
    // S1 + S2 = 2T + (R1 + R2) is Leibniz iff (R1 + R2)/2 represents T
    assert!(!oracle::compatible_ternary(s1.tensor(), s2.tensor()));
    let half = r1.add(&r2).unwrap().scale(&frac(1, 2));
    assert!(!check_representation(&t, &half).unwrap().passed());
}

#[test]
fn semidirects_are_compatible_when_the_summed_representation_represents_the_summed_bracket() {
    let mut seen = Premises::default();
    for (name, t) in leibniz_ternaries() {
        let ad = Representation::adjoint(&t);
        let zero = Representation::zero(t.dim(), t.dim());
        for c in [0, 1, -1, 2] {
            let t2 = t.scaled(&int(c));
            for (r1, r2) in [
                (ad.clone(), ad.scale(&int(c))),
                (ad.clone(), zero.clone()),
                (ad.clone(), ad.clone()),
            ] {
                let sum_t = pencil_ternary(&t, &t2, &int(1), &int(1)).unwrap();
                let premise = check_representation(&t, &r1).unwrap().passed()
                    && check_representation(&t2, &r2).unwrap().passed()
                    && check_representation(&sum_t, &r1.add(&r2).unwrap()).unwrap().passed();
                let (s1, s2) = compatible_semidirect_rep(&t, &t2, &CompatiblePack { first: r1, second: r2 }).unwrap();
                seen.check(
                    premise,
                    check_compatible_ternary(&s1, &s2).unwrap().passed(),
                    &format!("{name}/{c}"),
                );
            }
        }
    }
    seen.at_least(20);
}

#[test]
fn compatible_representation_routes_agree() {
    let mut disagreements_possible = 0;
    for (name, t) in leibniz_ternaries() {
        let ad = Representation::adjoint(&t);
        let zero = Representation::zero(t.dim(), t.dim());
        for (r1, r2) in [(&ad, &zero), (&ad, &ad), (&zero, &zero)] {
            let report = check_compatible_representations(&t, r1, r2).unwrap();
            assert_eq!(report.flag("routes-agree"), Some(true), "{name}");
            let sum = r1.add(r2).unwrap();
            assert_eq!(
                report.passed(),
                check_representation(&t, &sum).unwrap().passed(),
                "{name}"
            );
            disagreements_possible += (!report.passed()) as usize;
        }
    }
    // (ad, ad) sums to 2·ad, which is a representation only when the
    // quadratic parts vanish
    assert!(disagreements_possible > 0);
}

#[test]
fn compatible_bimodules_match_semidirect_compatibility() {
    let mut seen = (0, 0);
    let mut r = rng(41);
    for (name, a) in leibniz_ternaries().into_iter().filter(|(_, t)| t.dim() <= 2) {
        let c = &ternary_from_binary(&catalog::aff2());
        // (A⊕C, A⊕0) is a compatible pair
        let t1 = direct_sum_ternary(&a, c);
        let t2 = direct_sum_ternary(&a, &TernaryAlgebra::zero(c.dim()));
        assert!(check_compatible_ternary(&t1, &t2).unwrap().passed());
        let n = t1.dim();
        let packs = [
            (TernaryBimodule::regular(&t1), TernaryBimodule::regular(&t2)),
            (TernaryBimodule::regular(&t1), TernaryBimodule::zero(n, n)),
            (TernaryBimodule::regular(&t2), TernaryBimodule::regular(&t1)),
            (
                TernaryBimodule::regular(&t1),
                TernaryBimodule::new(
                    catalog::nilpotent_ternary(&mut r, n).tensor().clone(),
                    t2.tensor().clone(),
                    t2.tensor().clone(),
                )
                .unwrap(),
            ),
        ];
        for (first, second) in packs {
            let pack = CompatiblePack { first, second };
            let lib = check_compatible_bimodule_ternary(&t1, &t2, &pack).unwrap().passed();
            let (s1, s2) = compatible_semidirect(&t1, &t2, &pack).unwrap();
            let brute = oracle::ternary_leibniz(s1.tensor())
                && oracle::ternary_leibniz(s2.tensor())
                && oracle::compatible_ternary(s1.tensor(), s2.tensor());
            assert_eq!(lib, brute, "{name}");
            if lib {
                seen.0 += 1;
            } else {
                seen.1 += 1;
            }
        }
    }
    assert!(seen.0 > 0 && seen.1 > 0, "{seen:?}");
}

#[test]
fn o_morphisms_intertwine_the_induced_brackets() {
    let mut seen = (0, 0);
    for (name, t) in leibniz_ternaries() {
        let n = t.dim();
        let rep = Representation::adjoint(&t);
        for (op_name, op) in operators(n, 43) {
            let data = OOperatorData::new(op.clone(), rep.clone()).unwrap();
            if !oracle::o_operator(t.tensor(), &rep.lambda, &rep.mu, &rep.rho, &op) {
                continue;
            }
            let bracket = o_operator_bracket(&data).unwrap();
            for c in [1, -1, 2] {
                let f = Matrix::scalar(n, int(c));
                let report = check_o_morphism(&t, &f, &f, &data, &data).unwrap();
                let what = format!("{name}/{op_name}/{c}");
                if report.passed() {
                    seen.0 += 1;
                    assert_eq!(report.flag("phi-homomorphism"), Some(true), "{what}");
                    // direct check: φ[u,v,w] = [φu,φv,φw] on the induced bracket
                    let image = bracket.scaled(&Scalar::from_integer(c.into()));
                    let cubed = bracket.scaled(&Scalar::from_integer((c * c * c).into()));
                    assert_eq!(image, cubed, "{what}");
                } else {
                    seen.1 += 1;
                }
            }
        }
    }
    assert!(seen.0 >= 10 && seen.1 > 0, "{seen:?}");
}

#[test]
fn ternary_of_a_leibniz_bimodule_regular_is_a_bimodule() {
    for (name, b) in binaries()
        .into_iter()
        .filter(|(_, b)| b.dim() <= 3 && check_leibniz(b).passed())
    {
        let t = ternary_from_binary(&b);
        let tm = tlz_core::modrep::bimodule_from_binary(&b, &BinaryBimodule::regular(&b)).unwrap();
        assert!(check_ternary_bimodule(&t, &tm).unwrap().passed(), "{name}");
    }
}
