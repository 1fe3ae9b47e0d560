//! Acceptance criteria 1 to 12. Every test writes one `criterion N:` line
//! with its verdict and the counts behind it, then asserts the verdict.

use std::io::Write;
use std::time::{Duration, Instant};

use antiflex_algebra::corpus::{associative_corpus, pre_corpus, pre_corpus_up_to};
use antiflex_algebra::samples::{non_dendriform_pre_algebras, non_dendriform_selection};
use antiflex_algebra::{
    check_identities, check_pre, form_compatibility_identities, identities_for, induce_pre_from_form, pre_triple,
    run_identities, Algebra, Identity, IdentityKind, PreAlgebra, PreTripleKind, Subject, WitnessMode,
};
use antiflex_bialgebra::{verify_bialgebra, Bialgebra};
use antiflex_cli::check::{evaluate, CheckKind, CheckOptions};
use antiflex_cli::format::{Document, Object, RElement};
use antiflex_cli::report::Runner;
use antiflex_cli::search::{grid_search, parse_coefficients, SearchSpec, SearchTarget, Subject as SearchSubject};
use antiflex_cli::CliError;
use antiflex_coboundary::{
    case_catalog, catalog, check_coboundary_conditions, check_pafybe, coboundary_bialgebra, mnpq, CaseFamily, Catalog,
    Family, RPair, SpecialCase,
};
use antiflex_linear::{int, permute3, zero, Matrix, Perm3, Tensor3, Vector, Zero};
use antiflex_matched_pair::{
    build_af_double, check_af_matched, dual_pair, omega, omega_double_check, standard_double, standard_dual_matched,
    DualPairOrder,
};
use antiflex_representation::{
    check_af_bimodule, check_pre_bimodule, derive_bimodule, semidirect_pre, AfBimodule, DerivedBimodule, MapFamily,
    PreBimodule, Transform,
};
use antiflex_solutions::{
    canonical_solution, check_generalized_rb, check_two_cocycle, form_from_r, induced_pre_from_map, operator_form_check,
    solution_from_o_operator, OOperator,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn conclude(n: u32, ok: bool, detail: String) {
    // written to stderr directly so the line survives the test harness capture
    let line = format!("criterion {n}: {} ({detail})\n", if ok { "pass" } else { "fail" });
    std::io::stderr().write_all(line.as_bytes()).unwrap();
    assert!(ok, "criterion {n} failed: {detail}");
}

fn pre_subjects_up_to(max_dim: usize) -> Vec<(String, PreAlgebra)> {
    let mut v = pre_corpus_up_to(max_dim);
    for (i, p) in non_dendriform_selection(6).into_iter().enumerate() {
        if p.dimension <= max_dim {
            v.push((format!("non-dendriform-{}", i + 1), p));
        }
    }
    v
}

fn bump(t: &Tensor3, idx: (usize, usize, usize)) -> Tensor3 {
    let mut t = t.clone();
    t[idx] = &t[idx] + int(1);
    t
}

fn cube(n: usize) -> Vec<(usize, usize, usize)> {
    let mut v = vec![];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                v.push((i, j, k));
            }
        }
    }
    v
}

fn sparse(n: usize, density: f64, rng: &mut ChaCha8Rng) -> Matrix {
    Matrix::from_fn(n, n, |_, _| if rng.gen_bool(density) { int(rng.gen_range(-1..=1)) } else { zero() })
}

fn random_symmetric(n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let a = Matrix::random_int(n, n, -2, 2, rng);
    &a + &a.transpose()
}

/// `𝔅(x + a, y + b) = ⟨x, b⟩ + ⟨y, a⟩` on `A ⊕ A*`, written out entrywise.
fn pairing(n: usize) -> Matrix {
    Matrix::from_fn(2 * n, 2 * n, |i, j| if (i < n && j == i + n) || (i >= n && i == j + n) { int(1) } else { zero() })
}

/// The lexicographically first failing basis tuple, found by a plain walk
/// over tuples in the given identity order.
fn first_failure_by_walk(ids: &[Identity<'_>]) -> Option<(String, Vec<usize>)> {
    for id in ids {
        let mut idx = vec![0usize; id.arg_dims.len()];
        'walk: loop {
            if id.at_basis(&idx).iter().any(|x| !x.is_zero()) {
                return Some((id.label.clone(), idx));
            }
            for slot in (0..idx.len()).rev() {
                idx[slot] += 1;
                if idx[slot] < id.arg_dims[slot] {
                    continue 'walk;
                }
                idx[slot] = 0;
            }
            break;
        }
    }
    None
}

/// Whether the identity family holds, evaluated through the associator
/// and the three triple products on random elements.
fn holds_by_triples(subject: Subject<'_>, kind: IdentityKind, rng: &mut ChaCha8Rng) -> bool {
    (0..20).all(|_| match subject {
        Subject::Algebra(a) => {
            let n = a.dimension;
            let (x, y, z) = (Vector::random(n, rng), Vector::random(n, rng), Vector::random(n, rng));
            match kind {
                IdentityKind::Associative => a.triple(&x, &y, &z).is_zero(),
                _ => (a.triple(&x, &y, &z) - a.triple(&z, &y, &x)).is_zero(),
            }
        }
        Subject::PreAlgebra(p) => {
            let n = p.dimension;
            let (x, y, z) = (Vector::random(n, rng), Vector::random(n, rng), Vector::random(n, rng));
            let t = |a: &Vector, b: &Vector, c: &Vector, k| pre_triple(p, a, b, c, k).unwrap();
            match kind {
                IdentityKind::Dendriform => [PreTripleKind::M, PreTripleKind::L, PreTripleKind::R]
                    .into_iter()
                    .all(|k| t(&x, &y, &z, k).is_zero()),
                _ => {
                    (t(&x, &y, &z, PreTripleKind::M) - t(&z, &y, &x, PreTripleKind::M)).is_zero()
                        && (t(&x, &y, &z, PreTripleKind::L) - t(&z, &y, &x, PreTripleKind::R)).is_zero()
                }
            }
        }
    })
}

#[test]
fn criterion_01_corpus_soundness() {
    let limit = Duration::from_secs(1);
    let (mut runs, mut failures, mut slowest) = (0, vec![], Duration::ZERO);
    let mut timed = |name: String, f: &dyn Fn() -> bool| {
        let start = Instant::now();
        let ok = f();
        let t = start.elapsed();
        slowest = slowest.max(t);
        runs += 1;
        if !ok || t >= limit {
            failures.push(format!("{name} ({t:?})"));
        }
    };
    for (name, a) in associative_corpus() {
        for kind in [IdentityKind::Associative, IdentityKind::AntiFlexible] {
            timed(format!("{name} {}", kind.name()), &|| check_identities(Subject::Algebra(&a), kind).unwrap().passed);
        }
    }
    for (name, p) in pre_corpus() {
        timed(format!("{name} pre-anti-flexible"), &|| check_pre(&p).passed);
    }
    conclude(1, failures.is_empty(), format!("{runs} checks, slowest {slowest:?}, failing {failures:?}"));
}

#[test]
fn criterion_02_perturbation_sensitivity() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (mut total, mut detected, mut misplaced) = (0, 0, vec![]);
    let mut survivors = vec![];
    let mut unconfirmed = vec![];
    let mut probe = |label: String, subject: Subject<'_>, kind: IdentityKind| {
        let ids = identities_for(subject, kind).unwrap();
        let report = run_identities(kind.name(), &ids, WitnessMode::First);
        total += 1;
        match (&report.witness, first_failure_by_walk(&ids)) {
            (Some(w), Some((label_walk, idx))) if w.identity == label_walk && w.indices == idx => detected += 1,
            (None, None) => {
                if !holds_by_triples(subject, kind, &mut rng) {
                    unconfirmed.push(label.clone());
                }
                survivors.push(label);
            }
            (w, walk) => misplaced.push(format!("{label}: checker {w:?}, walk {walk:?}")),
        }
    };
    for (name, a) in associative_corpus().into_iter().filter(|(_, a)| a.dimension <= 3) {
        for kind in [IdentityKind::Associative, IdentityKind::AntiFlexible] {
            for idx in cube(a.dimension) {
                let b = Algebra::new(bump(&a.product, idx)).unwrap();
                probe(format!("{name} {} +1 at {idx:?}", kind.name()), Subject::Algebra(&b), kind);
            }
        }
    }
    for (name, p) in pre_corpus().into_iter().filter(|(_, p)| p.dimension <= 3) {
        for kind in [IdentityKind::PreAntiFlexible, IdentityKind::Dendriform] {
            for idx in cube(p.dimension) {
                let q = PreAlgebra::new(bump(&p.prec, idx), p.succ.clone()).unwrap();
                probe(format!("{name} {} ≺ +1 at {idx:?}", kind.name()), Subject::PreAlgebra(&q), kind);
                let q = PreAlgebra::new(p.prec.clone(), bump(&p.succ, idx)).unwrap();
                probe(format!("{name} {} ≻ +1 at {idx:?}", kind.name()), Subject::PreAlgebra(&q), kind);
            }
        }
    }
    // A perturbation that still satisfies the identity cannot yield a fail;
    // the survivors are confirmed valid by evaluating triple products.
    let ok = survivors.is_empty() && misplaced.is_empty();
    conclude(
        2,
        ok,
        format!(
            "{detected} of {total} perturbations fail with the lexicographically first witness; \
             {} still satisfy their identity ({} of them confirmed by triple products), e.g. {:?}; \
             witness mismatches {misplaced:?}",
            survivors.len(),
            survivors.len() - unconfirmed.len(),
            survivors.iter().take(4).collect::<Vec<_>>()
        ),
    );
}

fn doc(obj: Object) -> Document {
    Document::new(obj)
}

fn perturbed_algebras() -> Vec<Algebra> {
    let mut v = vec![];
    for (_, a) in associative_corpus().into_iter().filter(|(_, a)| a.dimension <= 3) {
        for idx in cube(a.dimension) {
            v.push(Algebra::new(bump(&a.product, idx)).unwrap());
        }
    }
    v
}

fn perturbed_pre_algebras() -> Vec<PreAlgebra> {
    let mut v = vec![];
    for (_, p) in pre_corpus().into_iter().filter(|(_, p)| p.dimension <= 3) {
        for idx in cube(p.dimension) {
            v.push(PreAlgebra::new(bump(&p.prec, idx), p.succ.clone()).unwrap());
            v.push(PreAlgebra::new(p.prec.clone(), bump(&p.succ, idx)).unwrap());
        }
    }
    v
}

fn bump_matrix(m: &Matrix, i: usize, j: usize) -> Matrix {
    let mut m = m.clone();
    m[(i, j)] = &m[(i, j)] + int(1);
    if i != j {
        m[(j, i)] = &m[(j, i)] + int(1);
    }
    m
}

/// Every checker on corpus subjects and on perturbations of them.
fn oracle_cases() -> Vec<(CheckKind, Vec<Document>, CheckOptions)> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut cases = vec![];
    let with = |identity: IdentityKind| CheckOptions { identity: Some(identity), case: None };
    let plain = CheckOptions::default();
    let mut algebras: Vec<Algebra> = associative_corpus().into_iter().map(|(_, a)| a).collect();
    algebras.extend(perturbed_algebras());
    for a in &algebras {
        for k in [IdentityKind::Associative, IdentityKind::AntiFlexible] {
            cases.push((CheckKind::Algebra, vec![doc(Object::Algebra(a.clone()))], with(k)));
        }
    }
    let mut pres: Vec<PreAlgebra> = pre_corpus().into_iter().map(|(_, p)| p).collect();
    pres.extend(non_dendriform_selection(6));
    pres.extend(perturbed_pre_algebras());
    for p in &pres {
        for k in [IdentityKind::PreAntiFlexible, IdentityKind::Dendriform] {
            cases.push((CheckKind::Algebra, vec![doc(Object::PreAlgebra(p.clone()))], with(k)));
        }
    }
    for (_, p) in pre_subjects_up_to(3) {
        let n = p.dimension;
        cases.push((CheckKind::Bimodule, vec![doc(Object::PreBimodule(PreBimodule::regular(&p)))], plain));
        let mut broken = PreBimodule::regular(&p);
        broken.l_prec[n - 1][(0, n - 1)] = &broken.l_prec[n - 1][(0, n - 1)] + int(1);
        cases.push((CheckKind::Bimodule, vec![doc(Object::PreBimodule(broken))], plain));
        let mp = dual_pair(&p, &PreAlgebra::zero(n), DualPairOrder::Derived).unwrap();
        cases.push((CheckKind::MatchedPair, vec![doc(Object::MatchedPair(mp.clone()))], plain));
        let mut bent = mp;
        bent.l_succ_b[0][(0, 0)] = &bent.l_succ_b[0][(0, 0)] + int(1);
        cases.push((CheckKind::MatchedPair, vec![doc(Object::MatchedPair(bent))], plain));
        let id = Matrix::identity(n);
        let noise = Matrix::random_int(n, n, -1, 1, &mut rng);
        for t in [id.clone(), noise.clone()] {
            cases.push((CheckKind::OOperator, vec![doc(Object::PreAlgebra(p.clone())), doc(Object::LinearMap(t))], plain));
        }
        let dot = antiflex_algebra::underlying_algebra(&p);
        for t in [Matrix::zeros(n, n), noise.clone(), sparse(n, 0.3, &mut rng)] {
            for k in [CheckKind::RotaBaxter, CheckKind::GeneralizedRb] {
                cases.push((k, vec![doc(Object::Algebra(dot.clone())), doc(Object::LinearMap(t.clone()))], plain));
            }
        }
        cases.push((
            CheckKind::Omega,
            vec![doc(Object::Algebra(standard_double(&p, &PreAlgebra::zero(n)).unwrap()))],
            plain,
        ));
    }
    for (_, a) in associative_corpus() {
        cases.push((CheckKind::Bimodule, vec![doc(Object::AfBimodule(AfBimodule::regular(&a)))], plain));
    }
    for (_, p) in pre_subjects_up_to(2) {
        let (d, r) = canonical_solution(&p).unwrap();
        let bent = bump_matrix(&r, 0, 0);
        for r in [r, bent] {
            let pair = || vec![doc(Object::PreAlgebra(d.clone())), doc(Object::RElement(RElement::Single(r.clone())))];
            for k in [CheckKind::Pafybe, CheckKind::OperatorForm, CheckKind::CocycleForm, CheckKind::DoubleProducts] {
                cases.push((k, pair(), plain));
            }
            for case in [SpecialCase::One, SpecialCase::Two] {
                cases.push((CheckKind::Coboundary, pair(), CheckOptions { identity: None, case: Some(case) }));
            }
            let b = coboundary_bialgebra(&d, &RPair::case_two(&r).unwrap()).unwrap();
            cases.push((CheckKind::Bialgebra, vec![doc(Object::Bialgebra(b))], plain));
        }
        let n = d.dimension;
        let rp = RPair::new(sparse(n, 0.3, &mut rng), sparse(n, 0.3, &mut rng)).unwrap();
        cases.push((
            CheckKind::Coboundary,
            vec![doc(Object::PreAlgebra(d.clone())), doc(Object::RElement(RElement::Pair(rp)))],
            plain,
        ));
    }
    cases
}

#[test]
fn criterion_03_multilinearity_bridge() {
    let cases = oracle_cases();
    let (mut identities, mut skipped, mut disagreements) = (0, 0, vec![]);
    for (i, (kind, docs, opts)) in cases.iter().enumerate() {
        let mut runner = Runner::with_oracle(WitnessMode::First, 100, i as u64);
        match evaluate(*kind, docs, *opts, &mut runner) {
            Ok(()) => {}
            Err(CliError::Input(_)) => {
                // a failed precondition stops the check before any identity runs
                skipped += 1;
            }
            Err(e) => disagreements.push(format!("case {i} {}: {e}", kind.name())),
        }
        let oracle = runner.oracle.as_ref().unwrap();
        identities += oracle.records.len();
        for rec in oracle.records.iter().filter(|r| r.basis_passed != r.random_passed) {
            disagreements.push(format!("case {i} {}: {}", kind.name(), rec.label));
        }
    }
    conclude(
        3,
        disagreements.is_empty(),
        format!(
            "{} subjects, {identities} identity verdicts compared over 100 trials each, {skipped} stopped at a precondition, \
             disagreements {disagreements:?}",
            cases.len()
        ),
    );
}

#[test]
fn criterion_04_generalized_rota_baxter() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut by_dim: Vec<(usize, Vec<Algebra>)> = vec![(2, vec![]), (3, vec![])];
    for (_, a) in associative_corpus() {
        if let Some(slot) = by_dim.iter_mut().find(|(d, _)| *d == a.dimension) {
            slot.1.push(a);
        }
    }
    for p in non_dendriform_pre_algebras().iter().take(20) {
        by_dim[0].1.push(antiflex_algebra::underlying_algebra(p));
    }
    let (mut maps, mut both, mut mismatches) = (0, 0, vec![]);
    for (dim, algebras) in &by_dim {
        for k in 0..200 {
            let alg = &algebras[k % algebras.len()];
            let alpha = match k % 3 {
                0 => Matrix::random_int(*dim, *dim, -2, 2, &mut rng),
                _ => sparse(*dim, 0.25, &mut rng),
            };
            let g = check_generalized_rb(alg, &alpha).unwrap().passed;
            let pre = check_pre(&induced_pre_from_map(alg, &alpha).unwrap()).passed;
            maps += 1;
            both += (g && pre) as usize;
            if g != pre {
                mismatches.push(format!("dim {dim} map {k}"));
            }
        }
    }
    let spec = SearchSpec::new(SearchTarget::RotaBaxter, parse_coefficients("-1,0,1").unwrap());
    let (mut found, mut induced_bad) = (0, 0);
    for (_, a) in associative_corpus().into_iter().filter(|(_, a)| a.dimension == 2) {
        for op in grid_search(&spec, SearchSubject::Algebra(&a)).unwrap().found.into_iter().filter(|m| !m.is_zero()) {
            found += 1;
            if !check_pre(&induced_pre_from_map(&a, &op).unwrap()).passed {
                induced_bad += 1;
            }
        }
    }
    conclude(
        4,
        mismatches.is_empty() && found >= 1 && induced_bad == 0,
        format!(
            "{maps} maps, {both} satisfy both, mismatches {mismatches:?}; grid found {found} nonzero Rota-Baxter operators, \
             {induced_bad} with a non pre-anti-flexible induced structure"
        ),
    );
}

fn random_family(n: usize, m: usize, rng: &mut ChaCha8Rng) -> MapFamily {
    (0..n).map(|_| Matrix::random_int(m, m, -1, 1, rng)).collect()
}

#[test]
fn criterion_05_semidirect_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let bases: Vec<PreAlgebra> = pre_subjects_up_to(3).into_iter().map(|(_, p)| p).collect();
    let (mut valid, mut invalid, mut mismatches) = (0, 0, vec![]);
    for trial in 0..200 {
        let base = bases[trial % bases.len()].clone();
        let n = base.dimension;
        let m = if n <= 2 && trial % 5 == 0 { n } else { 1 + trial % 2 };
        let bm = match trial % 4 {
            0 if m == n => PreBimodule::regular(&base),
            1 => {
                let mut b = PreBimodule::zero(&base, m);
                let fam = rng.gen_range(0..4);
                b.families_mut()[fam][rng.gen_range(0..n)][(rng.gen_range(0..m), rng.gen_range(0..m))] = int(1);
                b
            }
            _ => PreBimodule::new(
                base.clone(),
                m,
                random_family(n, m, &mut rng),
                random_family(n, m, &mut rng),
                random_family(n, m, &mut rng),
                random_family(n, m, &mut rng),
            )
            .unwrap(),
        };
        let semi = check_pre(&semidirect_pre(&bm)).passed;
        let parts = check_pre(&bm.base).passed && check_pre_bimodule(&bm).passed;
        if semi != parts {
            mismatches.push(format!("trial {trial}: semidirect {semi}, bimodule {parts}"));
        }
        if semi {
            valid += 1
        } else {
            invalid += 1
        }
    }
    conclude(
        5,
        mismatches.is_empty() && valid > 0 && invalid > 0,
        format!("{valid} valid and {invalid} invalid candidates, mismatches {mismatches:?}"),
    );
}

#[test]
fn criterion_06_transform_closure() {
    let mut subjects: Vec<(String, PreAlgebra)> = pre_corpus();
    subjects.extend(non_dendriform_pre_algebras().into_iter().enumerate().map(|(i, p)| (format!("sample {i}"), p)));
    let (mut runs, mut failures) = (0, vec![]);
    for (name, p) in &subjects {
        let bm = PreBimodule::regular(p);
        for t in Transform::VALID {
            runs += 1;
            let ok = match derive_bimodule(&bm, t).unwrap() {
                DerivedBimodule::Af(b) => check_af_bimodule(&b).passed,
                DerivedBimodule::Pre(b) => check_pre_bimodule(&b).passed,
            };
            if !ok {
                failures.push(format!("{name} {}", t.name()));
            }
        }
    }
    conclude(6, failures.is_empty(), format!("{runs} transforms of {} regular bimodules, failing {failures:?}", subjects.len()));
}

#[test]
fn criterion_07_canonical_solution() {
    let (mut count, mut failures, mut slowest) = (0, vec![], Duration::ZERO);
    for (name, p) in pre_subjects_up_to(2) {
        let start = Instant::now();
        let n = p.dimension;
        let (d, r) = canonical_solution(&p).unwrap();
        let symmetric = r == r.transpose();
        let nondegenerate = r.rank() == 2 * n;
        let solves = check_pafybe(&d, &r).unwrap().report.passed;
        let form = form_from_r(&r).unwrap() == pairing(n);
        let t = start.elapsed();
        slowest = slowest.max(t);
        count += 1;
        if !(symmetric && nondegenerate && solves && form && d.dimension <= 4) || t >= Duration::from_secs(5) {
            failures.push(format!("{name}: symmetric {symmetric} nondegenerate {nondegenerate} solves {solves} form {form} {t:?}"));
        }
    }
    conclude(7, failures.is_empty(), format!("{count} pre-algebras, slowest {slowest:?}, failing {failures:?}"));
}

/// The three solution criteria on `(A, r)`; the cocycle verdict is absent
/// when `r` is degenerate.
fn three_verdicts(palg: &PreAlgebra, r: &Matrix) -> (bool, bool, Option<bool>) {
    let eq = check_pafybe(palg, r).unwrap().report.passed;
    let op = operator_form_check(palg, r).unwrap().passed;
    let cocycle = (r.rank() == r.rows()).then(|| check_two_cocycle(palg, &form_from_r(r).unwrap()).unwrap().passed);
    (eq, op, cocycle)
}

#[test]
fn criterion_08_three_way_agreement() {
    let mut mismatches = vec![];
    let mut tally = |label: String, palg: &PreAlgebra, r: &Matrix, expect: Option<bool>| -> bool {
        let (eq, op, cocycle) = three_verdicts(palg, r);
        let agree = eq == op && cocycle.map_or(true, |c| c == eq) && expect.map_or(true, |e| e == eq);
        if !agree {
            mismatches.push(format!("{label}: equation {eq}, operator form {op}, cocycle {cocycle:?}"));
        }
        eq
    };
    let mut canonical = 0;
    for (name, p) in pre_subjects_up_to(2) {
        let (d, r) = canonical_solution(&p).unwrap();
        tally(format!("canonical {name}"), &d, &r, Some(true));
        canonical += 1;
    }
    let spec = SearchSpec::new(SearchTarget::PafybeSymmetric, parse_coefficients("-1,0,1").unwrap());
    let subjects: Vec<(String, PreAlgebra)> = pre_subjects_up_to(2).into_iter().filter(|(_, p)| p.dimension == 2).collect();
    let mut grid = 0;
    for (name, p) in &subjects {
        for r in grid_search(&spec, SearchSubject::PreAlgebra(p)).unwrap().found {
            tally(format!("grid {name} {r:?}"), p, &r, Some(true));
            grid += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut non_solutions, mut draws) = (0, 0);
    while non_solutions < 200 && draws < 10_000 {
        let p = &subjects[draws % subjects.len()].1;
        let r = random_symmetric(2, &mut rng);
        draws += 1;
        if !tally(format!("random draw {draws}"), p, &r, None) {
            non_solutions += 1;
        }
    }
    conclude(
        8,
        mismatches.is_empty() && grid > 0 && non_solutions == 200,
        format!(
            "{canonical} canonical solutions, {grid} grid solutions, {non_solutions} random non-solutions in {draws} draws, \
             mismatches {mismatches:?}"
        ),
    );
}

/// The four bialgebra routes on a coboundary pair. A precondition error
/// (an action of the dual pair that is not a bimodule) counts as a fail.
fn coboundary_verdicts(palg: &PreAlgebra, rp: &RPair) -> [bool; 4] {
    let conditions = check_coboundary_conditions(palg, rp).map(|r| r.passed).unwrap_or(false);
    let b: Bialgebra = coboundary_bialgebra(palg, rp).unwrap();
    let verified = verify_bialgebra(&b).map(|r| r.passed).unwrap_or(false);
    let mp = standard_dual_matched(palg, &b.dual_algebra()).unwrap();
    let matched = check_af_matched(&mp).map(|r| r.passed).unwrap_or(false);
    let omega = omega_double_check(&build_af_double(&mp)).map(|r| r.passed).unwrap_or(false);
    [conditions, verified, matched, omega]
}

#[test]
fn criterion_09_coboundary_bialgebra_agreement() {
    let mut failures = vec![];
    let mut canonical = 0;
    for (name, p) in pre_subjects_up_to(2) {
        let (d, r) = canonical_solution(&p).unwrap();
        for case in [SpecialCase::One, SpecialCase::Two] {
            let v = coboundary_verdicts(&d, &case.rpair(&r).unwrap());
            canonical += 1;
            if v != [true; 4] {
                failures.push(format!("canonical {name} {}: {v:?}", case.name()));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let subjects: Vec<PreAlgebra> = pre_subjects_up_to(3).into_iter().map(|(_, p)| p).collect();
    let (mut passing, mut failing) = (0, 0);
    for k in 0..50 {
        let p = &subjects[k % subjects.len()];
        let n = p.dimension;
        let rp = RPair::new(Matrix::random_int(n, n, -1, 1, &mut rng), Matrix::random_int(n, n, -1, 1, &mut rng)).unwrap();
        let v = coboundary_verdicts(p, &rp);
        if v.iter().any(|&x| x != v[0]) {
            failures.push(format!("random pair {k}: {v:?}"));
        }
        if v[0] {
            passing += 1
        } else {
            failing += 1
        }
    }
    conclude(
        9,
        failures.is_empty(),
        format!("{canonical} canonical cases pass all four routes; 50 random pairs: {passing} pass, {failing} fail; disagreements {failures:?}"),
    );
}

#[test]
fn criterion_10_family_symmetries() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let corpus = pre_corpus_up_to(4);
    let (mut pairs, mut failures) = (0, vec![]);
    for dim in 1..=4 {
        let algebras: Vec<&PreAlgebra> = corpus.iter().map(|(_, p)| p).filter(|p| p.dimension == dim).collect();
        for k in 0..100 {
            let palg = algebras[k % algebras.len()];
            let rp = RPair::new(Matrix::random_int(dim, dim, -2, 2, &mut rng), Matrix::random_int(dim, dim, -2, 2, &mut rng))
                .unwrap();
            let e = |c: Catalog| c.evaluate(palg).unwrap();
            let f = |w| mnpq(palg, &rp, w).unwrap();
            let m = catalog(&rp, Family::M);
            let flp_m = e(m.flp());
            let checks = [
                ("P = flp(M)", flp_m == f(Family::P)),
                ("N = σ13(flp(M))", e(m.flp().permute(Perm3::Sigma13)) == f(Family::N)),
                ("N = σ13 of the evaluated flp(M)", permute3(&flp_m, Perm3::Sigma13).unwrap() == f(Family::N)),
                ("Q = flp(σ13(flp(M)))", e(m.flp().permute(Perm3::Sigma13).flp()) == f(Family::Q)),
                ("N′ = flp(M′)", e(catalog(&rp, Family::MPrime).flp()) == f(Family::NPrime)),
                ("Q′ = flp(P′)", e(catalog(&rp, Family::PPrime).flp()) == f(Family::QPrime)),
                (
                    "P₂′ = σ123(M₂)",
                    permute3(&e(case_catalog(&rp.r_succ, CaseFamily::M2)), Perm3::Cycle123).unwrap()
                        == e(case_catalog(&rp.r_succ, CaseFamily::P2Prime)),
                ),
            ];
            pairs += 1;
            for (label, ok) in checks {
                if !ok {
                    failures.push(format!("dim {dim} pair {k}: {label}"));
                }
            }
        }
    }
    conclude(10, failures.is_empty(), format!("{pairs} random pairs over dimensions 1 to 4, failing {failures:?}"));
}

#[test]
fn criterion_11_o_operator_reproduction() {
    let mut failures = vec![];
    let mut identity_cases = 0;
    for (name, p) in pre_subjects_up_to(4) {
        let (d1, r1) = solution_from_o_operator(&OOperator::regular(&p)).unwrap();
        let (d2, r2) = canonical_solution(&p).unwrap();
        identity_cases += 1;
        // entrywise: the two constructions name the dual basis differently
        if (d1.prec, d1.succ, r1) != (d2.prec, d2.succ, r2) {
            failures.push(format!("T = id on {name}"));
        }
    }
    let spec = SearchSpec::new(SearchTarget::OOperator, parse_coefficients("-1,0,1").unwrap());
    let (mut injective, mut non_injective) = (0, 0);
    for (name, p) in pre_subjects_up_to(2).into_iter().filter(|(_, p)| p.dimension == 2) {
        let base = OOperator::regular(&p);
        for t in grid_search(&spec, SearchSubject::OOperatorSpace(base.clone())).unwrap().found {
            let oo = OOperator::new(base.bimodule.clone(), t.clone()).unwrap();
            if !oo.is_injective() {
                non_injective += 1;
                continue;
            }
            injective += 1;
            let (d, r) = solution_from_o_operator(&oo).unwrap();
            if !check_pafybe(&d, &r).unwrap().report.passed {
                failures.push(format!("{name} T = {t:?}"));
            }
        }
    }
    conclude(
        11,
        failures.is_empty() && injective > 0,
        format!(
            "T = id matches the canonical solution on {identity_cases} pre-algebras; {injective} injective grid O-operators \
             ({non_injective} non-injective skipped); failing {failures:?}"
        ),
    );
}

#[test]
fn criterion_12_form_round_trip() {
    let mut doubles = vec![];
    for (name, p) in pre_subjects_up_to(2) {
        let n = p.dimension;
        doubles.push((format!("{name} with the zero dual"), standard_double(&p, &PreAlgebra::zero(n)).unwrap()));
        let (d, r) = canonical_solution(&p).unwrap();
        for case in [SpecialCase::One, SpecialCase::Two] {
            let b = coboundary_bialgebra(&d, &case.rpair(&r).unwrap()).unwrap();
            let star = b.dual_algebra();
            if check_pre(&star).passed {
                doubles.push((format!("{name} canonical {}", case.name()), standard_double(&d, &star).unwrap()));
            }
        }
    }
    let (mut valid, mut failures) = (0, vec![]);
    for (name, d) in &doubles {
        if !omega_double_check(d).unwrap().passed {
            continue;
        }
        valid += 1;
        let w = omega(d.dimension / 2);
        match induce_pre_from_form(d, &w) {
            Ok(q) => {
                let pre = check_pre(&q).passed;
                let compatible = run_identities("ω", &form_compatibility_identities(&q, d, &w), WitnessMode::First).passed;
                if !(pre && compatible) {
                    failures.push(format!("{name}: pre {pre}, compatible {compatible}"));
                }
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    conclude(
        12,
        failures.is_empty() && valid > 0,
        format!("{valid} valid doubles of {} built, failing {failures:?}", doubles.len()),
    );
}
