use antiflex_algebra::corpus::associative_corpus;
use antiflex_algebra::samples::non_dendriform_pre_algebras;
use antiflex_algebra::{check_anti_flexible, check_pre, underlying_algebra, PreAlgebra};
use antiflex_linear::{int, Matrix};
use antiflex_matched_pair::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn invertible_2x2() -> Vec<Matrix> {
    let mut out = vec![];
    for code in 0..81u32 {
        let d: Vec<i64> = (0..4).map(|i| ((code / 3u32.pow(i)) % 3) as i64 - 1).collect();
        let p = Matrix::from_i64(&[&[d[0], d[1]], &[d[2], d[3]]]);
        if p.rank() == 2 {
            out.push(p);
        }
    }
    out
}

/// Pairs `(A, B)` of two-dimensional pre-anti-flexible algebras: samples
/// against zero and against basis changes of other samples.
fn dual_candidates() -> Vec<(PreAlgebra, PreAlgebra)> {
    let samples = non_dendriform_pre_algebras();
    let ps = invertible_2x2();
    let mut bs = vec![PreAlgebra::zero(2)];
    for s in samples.iter().take(12) {
        for p in ps.iter().take(6) {
            bs.push(s.change_basis(p).unwrap());
        }
    }
    let mut out = vec![];
    for a in samples.iter().take(30) {
        for b in &bs {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

fn valid_dual_pairs() -> Vec<PreMatchedPair> {
    dual_candidates()
        .into_iter()
        .map(|(a, b)| dual_pair(&a, &b, DualPairOrder::Derived).unwrap())
        .filter(|mp| check_pre(&build_pre_double(mp)).passed)
        .collect()
}

#[test]
fn pre_double_is_pre_anti_flexible_iff_full_report_passes() {
    let (mut yes, mut no) = (0, 0);
    for (a, b) in dual_candidates() {
        let mp = dual_pair(&a, &b, DualPairOrder::Derived).unwrap();
        let full = pre_matched_full_report(&mp, FirstIdentityAction::Prec).unwrap().passed;
        assert_eq!(full, check_pre(&build_pre_double(&mp)).passed);
        if full { yes += 1 } else { no += 1 }
    }
    assert!(yes > 0 && no > 0, "{yes} / {no}");
}

#[test]
fn succ_action_in_first_identity_rejects_valid_pairs() {
    let rejected = valid_dual_pairs()
        .iter()
        .filter(|mp| !check_pre_matched_with(mp, FirstIdentityAction::Succ).unwrap().passed)
        .count();
    assert!(rejected > 0);
}

#[test]
fn naive_dual_pair_order_rejects_valid_pairs() {
    let rejected = valid_dual_pairs()
        .iter()
        .filter(|mp| {
            let naive = dual_pair(&mp.palg_a, &mp.palg_b, DualPairOrder::Naive).unwrap();
            !pre_matched_full_report(&naive, FirstIdentityAction::Prec).unwrap().passed
        })
        .count();
    assert!(rejected > 0);
}

#[test]
fn summed_valid_pair_is_the_standard_af_matched_pair() {
    for mp in valid_dual_pairs() {
        let af = mp.summed();
        assert_eq!(af, standard_dual_matched(&mp.palg_a, &mp.palg_b).unwrap());
        assert!(af_matched_full_report(&af, MixedTermSign::Mirrored).unwrap().passed);
        let double = standard_double(&mp.palg_a, &mp.palg_b).unwrap();
        let report = omega_double_check(&double).unwrap();
        assert!(report.passed, "{report}");
        assert_eq!(double, underlying_algebra(&build_pre_double(&mp)));
    }
}

#[test]
fn zero_dual_always_gives_a_closed_form() {
    for a in non_dendriform_pre_algebras() {
        let report = omega_double_check(&standard_double(&a, &PreAlgebra::zero(2)).unwrap()).unwrap();
        assert!(report.passed);
    }
}

#[test]
fn af_double_is_anti_flexible_iff_full_report_passes() {
    let (mut yes, mut no) = (0, 0);
    for (a, b) in dual_candidates() {
        let mp = standard_dual_matched(&a, &b).unwrap();
        let full = af_matched_full_report(&mp, MixedTermSign::Mirrored).unwrap().passed;
        let double = build_af_double(&mp);
        assert_eq!(full, check_anti_flexible(&double).passed);
        assert_eq!(full, omega_double_check(&double).unwrap().passed);
        if full { yes += 1 } else { no += 1 }
    }
    assert!(yes > 0 && no > 0, "{yes} / {no}");
}

#[test]
fn added_mixed_term_rejects_valid_pairs() {
    let rejected = valid_dual_pairs()
        .iter()
        .map(|mp| mp.summed())
        .filter(|af| !check_af_matched_with(af, MixedTermSign::Added).unwrap().passed)
        .count();
    assert!(rejected > 0);
}

#[test]
fn split_inverts_the_double() {
    for mp in valid_dual_pairs().into_iter().take(20) {
        assert_eq!(split_pre(&build_pre_double(&mp), 2).unwrap(), mp);
        let af = mp.summed();
        assert_eq!(split_af(&build_af_double(&af), 2).unwrap(), af);
    }
}

#[test]
fn split_of_associative_matrices_gives_matched_pair() {
    let (_, m2) = associative_corpus().into_iter().find(|(n, _)| *n == "matrices-2x2").unwrap();
    // span(e11, e12) and span(e21, e22) are left ideals, hence subalgebras
    let mp = split_af(&m2, 2).unwrap();
    assert!(af_matched_full_report(&mp, MixedTermSign::Mirrored).unwrap().passed);
}

#[test]
fn sparse_perturbations_match_the_double() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let pairs = valid_dual_pairs();
    let (mut yes, mut no) = (0, 0);
    for trial in 0..120 {
        let mut mp = pairs[trial % pairs.len()].clone();
        let fam = rng.gen_range(0..8);
        let i = rng.gen_range(0..2);
        let (r, c) = (rng.gen_range(0..2), rng.gen_range(0..2));
        let delta = if rng.gen_bool(0.5) { int(1) } else { int(-1) };
        let m = &mut mp.families_mut()[fam][i];
        let v = &m[(r, c)] + &delta;
        *m = Matrix::from_fn(2, 2, |a, b| if (a, b) == (r, c) { v.clone() } else { m[(a, b)].clone() });
        let full = pre_matched_full_report(&mp, FirstIdentityAction::Prec).unwrap().passed;
        assert_eq!(full, check_pre(&build_pre_double(&mp)).passed, "trial {trial}");
        if full { yes += 1 } else { no += 1 }
    }
    assert!(no > 0, "{yes} / {no}");
}

#[test]
fn omega_rejects_odd_dimension() {
    let d = underlying_algebra(&non_dendriform_pre_algebras()[0]);
    assert!(omega_double_check(&d).is_ok());
    assert!(omega_double_check(&antiflex_algebra::Algebra::zero(3)).is_err());
}

#[test]
fn zero_second_algebra_reduces_to_bimodule_conditions() {
    for a in non_dendriform_pre_algebras().iter().take(20) {
        let mp = dual_pair(a, &PreAlgebra::zero(2), DualPairOrder::Derived).unwrap();
        assert!(check_pre_matched(&mp).unwrap().passed);
        let z = PreMatchedPair { palg_b: PreAlgebra::zero(1), ..zero_actions(a, 1) };
        assert!(pre_matched_full_report(&z, FirstIdentityAction::Prec).unwrap().passed);
        assert_eq!(build_pre_double(&z).dimension, 3);
    }
}

fn zero_actions(a: &PreAlgebra, m: usize) -> PreMatchedPair {
    let n = a.dimension;
    let f = |k: usize, d: usize| antiflex_representation::zero_family(k, d, d);
    PreMatchedPair {
        palg_a: a.clone(),
        palg_b: PreAlgebra::zero(m),
        l_succ_a: f(n, m),
        r_succ_a: f(n, m),
        l_prec_a: f(n, m),
        r_prec_a: f(n, m),
        l_succ_b: f(m, n),
        r_succ_b: f(m, n),
        l_prec_b: f(m, n),
        r_prec_b: f(m, n),
    }
}
