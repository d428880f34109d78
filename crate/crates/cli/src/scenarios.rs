//! The verify-paper scenario suite: each scenario rebuilds one of the
//! classical characteristic-p counterexamples from scratch and reports the
//! computed facts. Values that depend on a computation rather than a stated
//! theorem are compared against a stored oracle table, regenerable with
//! --regen-oracles so that no contested constant is ever hard-coded.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use modlie::field::{FieldElement, FieldSpec};
use modlie::jordan::{chevalley_decompose, is_diagonalisable_over_base, is_semisimple_matrix};
use modlie::killing::{cartan_semisimplicity, cartan_statements, killing_form};
use modlie::liealg::{
    builtin, commutator_algebra_of_matrices, gl_basis_matrices, shift_and_counting_pair,
    sl_basis_matrices, BuiltinName,
};
use modlie::linalg::{
    all_vectors, basis_vector, eigenspace, eigenvalues_in_field, min_poly, subspace_count,
    vec_is_zero, Matrix, Polynomial, Subspace,
};
use modlie::repr::{adjoint_rep, check_representation, common_eigenvector, ladder_check, triangularize};
use modlie::restricted::{
    find_p_mapping, jacobson_si, pth_power_closure_check, verify_p_mapping, ClosurePredicate,
    PMapping, PMappingSearch,
};

use crate::report::{CheckEntry, Status};

/// Default oracle table shipped with the tool; regenerate with
/// `verify-paper --regen-oracles`.
pub const DEFAULT_ORACLES: &str = include_str!("../oracles.json");

const SCENARIO_IDS: &[&str] = &[
    "LIE-5.1(2)",
    "LIE-5.1(3)",
    "LIE-5.1(5)",
    "CARTAN-5.2",
    "CCS-5.2",
    "JORDAN-5.3",
    "REP-5.4",
    "WEYL-5.5",
    "PMAP-6",
];

pub fn scenario_ids() -> &'static [&'static str] {
    SCENARIO_IDS
}

/// Runs the scenarios whose id matches the filter (exact id, or the prefix
/// before a parenthesis).
pub fn run_scenarios(filter: Option<&str>, cap: u128, oracles: &Value) -> Vec<CheckEntry> {
    let mut out = Vec::new();
    for &id in SCENARIO_IDS {
        if let Some(f) = filter {
            let base = id.split('(').next().unwrap_or(id);
            if f != id && f != base {
                continue;
            }
        }
        out.push(run_one(id, cap, oracles));
    }
    out
}

fn run_one(id: &str, cap: u128, oracles: &Value) -> CheckEntry {
    let result = match id {
        "LIE-5.1(2)" => lie_scenario(2),
        "LIE-5.1(3)" => lie_scenario(3),
        "LIE-5.1(5)" => lie_scenario(5),
        "CARTAN-5.2" => cartan_scenario(),
        "CCS-5.2" => ccs_scenario(cap, oracles),
        "JORDAN-5.3" => jordan_scenario(oracles),
        "REP-5.4" => rep_scenario(),
        "WEYL-5.5" => weyl_scenario(cap),
        "PMAP-6" => pmap_scenario(oracles),
        other => panic!("unknown scenario id {other}"),
    };
    let entry = match result {
        Ok((status, data)) => CheckEntry::new(id, status, data),
        Err(modlie::Error::CapExceeded { count, cap }) => CheckEntry::new(
            id,
            Status::SkipCap,
            json!({ "reason": "CapExceeded", "required": count.to_string(), "cap": cap.to_string() }),
        ),
        Err(e) => CheckEntry::new(id, Status::Fail, json!({ "error": e.to_string() })),
    };
    entry.with_citation(citation_for(id))
}

fn citation_for(id: &str) -> &'static str {
    match id.split('(').next().unwrap_or(id) {
        "LIE-5.1" => "Lie's triangularization theorem fails over fields of characteristic p",
        "CARTAN-5.2" => "Cartan's solvability criterion fails in characteristic 2",
        "CCS-5.2" => "semisimplicity iff non-degenerate Killing form, and its characteristic-2 failure",
        "JORDAN-5.3" => "Jordan decomposition with a semisimple part over perfect fields",
        "REP-5.4" => "irreducible sl2 representations: symmetric powers and the weight ladder",
        "WEYL-5.5" => "Weyl's complete-reducibility theorem fails in characteristic 3",
        "PMAP-6" => "p-mappings of restricted Lie algebras and the non-restrictable fsl2",
        _ => "",
    }
}

type ScenarioResult = modlie::Result<(Status, Value)>;

fn prime(p: u64) -> FieldSpec {
    FieldSpec::prime(p).expect("catalog prime")
}

fn status_of(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn images_json(pm: &PMapping) -> Value {
    json!(pm
        .images()
        .iter()
        .map(|v| v.iter().map(FieldElement::to_string).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn oracle_lookup<'a>(oracles: &'a Value, scenario: &str, key: &str) -> Option<&'a Value> {
    oracles.get(scenario)?.get(key)
}

/// Compares a computed value against the stored oracle entry, recording
/// both; a missing oracle entry is itself a failure.
fn oracle_compare(
    oracles: &Value,
    scenario: &str,
    key: &str,
    computed: Value,
    data: &mut Map<String, Value>,
    all_ok: &mut bool,
) {
    match oracle_lookup(oracles, scenario, key) {
        Some(expected) if *expected == computed => {
            data.insert(key.to_string(), computed);
        }
        Some(expected) => {
            data.insert(
                key.to_string(),
                json!({ "computed": computed, "expected": expected }),
            );
            *all_ok = false;
        }
        None => {
            data.insert(key.to_string(), json!({ "computed": computed, "expected": "missing oracle entry" }));
            *all_ok = false;
        }
    }
}

fn lie_scenario(p: u64) -> ScenarioResult {
    let spec = prime(p);
    let n = p as usize;
    let (x, y) = shift_and_counting_pair(spec, n);
    let bracket_is_x = x.commutator(&y) == x;

    let (s, _) = commutator_algebra_of_matrices(&[x.clone(), y.clone()], &["x", "y"])?;
    let derived_dims: Vec<usize> = s.derived_series().iter().map(Subspace::dim).collect();
    let solvable = s.is_solvable();

    let x_eigs = eigenvalues_in_field(&x)?;
    let x_eig_ok = x_eigs == vec![spec.one()];
    let all_ones = vec![spec.one(); n];
    let e1 = eigenspace(&x, &spec.one())?;
    let x_space_ok = e1 == Subspace::from_rows(spec, n, vec![all_ones]);

    let mut y_lines_ok = true;
    for (i, lam) in spec.elements()?.into_iter().enumerate() {
        let line = Subspace::from_rows(spec, n, vec![basis_vector(spec, n, i)]);
        if eigenspace(&y, &lam)? != line {
            y_lines_ok = false;
        }
    }

    let common = common_eigenvector(&[x.clone(), y.clone()])?;
    let tri = triangularize(&[x, y])?;

    let ok = bracket_is_x
        && derived_dims == [2, 1, 0]
        && solvable
        && x_eig_ok
        && x_space_ok
        && y_lines_ok
        && common.is_none()
        && tri.is_none();
    Ok((
        status_of(ok),
        json!({
            "bracket_is_x": bracket_is_x,
            "derived_series_dims": derived_dims,
            "solvable": solvable,
            "x_eigenvalues": x_eigs.iter().map(FieldElement::to_string).collect::<Vec<_>>(),
            "x_eigenspace_is_all_ones_line": x_space_ok,
            "y_eigenspaces_are_coordinate_lines": y_lines_ok,
            "common_eigenvector": common.is_some(),
            "triangularizable": tri.is_some(),
        }),
    ))
}

fn cartan_scenario() -> ScenarioResult {
    let fsl = builtin(BuiltinName::Fsl2, prime(2), None)?;
    let traces: Vec<String> = (0..3)
        .map(|i| {
            let ad = fsl.ad_basis(i);
            ad.matmul(&ad).trace().to_string()
        })
        .collect();
    let traces_zero = traces.iter().all(|t| t == "0");
    let report = cartan_statements(&fsl, &adjoint_rep(&fsl))?;
    let ok = traces_zero && report.stmt2 && !report.solvable && !report.consistent;
    Ok((
        status_of(ok),
        json!({
            "squared_adjoint_traces": traces,
            "stmt2": report.stmt2,
            "solvable": report.solvable,
            "consistent": report.consistent,
        }),
    ))
}

fn ccs_scenario(cap: u128, oracles: &Value) -> ScenarioResult {
    let q = FieldSpec::rationals();
    let sl2 = builtin(BuiltinName::Sl2, q, None)?;
    let sl2_report = cartan_semisimplicity(&sl2, cap)?;
    let aff2 = builtin(BuiltinName::Aff2, q, None)?;
    let aff2_report = cartan_semisimplicity(&aff2, cap)?;

    let fsl = builtin(BuiltinName::Fsl2, prime(2), None)?;
    let fsl_report = cartan_semisimplicity(&fsl, cap)?;

    let mut data = Map::new();
    data.insert(
        "sl2_q".to_string(),
        json!({ "semisimple": sl2_report.semisimple, "nondegenerate": sl2_report.nondegenerate,
                "equivalent": sl2_report.equivalent }),
    );
    data.insert(
        "aff2_q".to_string(),
        json!({ "semisimple": aff2_report.semisimple, "nondegenerate": aff2_report.nondegenerate,
                "equivalent": aff2_report.equivalent }),
    );
    data.insert(
        "fsl2_f2_gram".to_string(),
        json!(killing_form(&fsl).gram().to_string()),
    );

    let mut ok = sl2_report.semisimple
        && sl2_report.nondegenerate
        && sl2_report.equivalent
        && !aff2_report.semisimple
        && !aff2_report.nondegenerate
        && aff2_report.equivalent
        && !fsl_report.equivalent;
    oracle_compare(oracles, "CCS-5.2", "fsl2_semisimple", json!(fsl_report.semisimple), &mut data, &mut ok);
    oracle_compare(oracles, "CCS-5.2", "fsl2_nondegenerate", json!(fsl_report.nondegenerate), &mut data, &mut ok);
    data.insert("fsl2_equivalent".to_string(), json!(fsl_report.equivalent));
    Ok((status_of(ok), Value::Object(data)))
}

fn jordan_scenario(oracles: &Value) -> ScenarioResult {
    let witness = Polynomial::from_i64(prime(2), &[1, 1, 1]).companion_matrix()?;
    let semisimple = is_semisimple_matrix(&witness)?;
    let diagonalisable = is_diagonalisable_over_base(&witness)?;

    let mut r = ChaCha8Rng::seed_from_u64(1009);
    let specs = [prime(2), prime(3), prime(5), FieldSpec::rationals()];
    let mut sample = 0usize;
    let mut invariants_hold = true;
    for spec in specs {
        for size in 1..=5usize {
            for _ in 0..15 {
                let a = random_matrix(spec, size, &mut r);
                let pair = chevalley_decompose(&a)?;
                let mp = min_poly(&pair.semisimple)?;
                let squarefree = mp.gcd(&mp.derivative()).degree() == Some(0);
                let holds = pair.semisimple.add(&pair.nilpotent) == a
                    && pair.semisimple.matmul(&pair.nilpotent)
                        == pair.nilpotent.matmul(&pair.semisimple)
                    && squarefree
                    && pair.nilpotent.pow(size as u64).is_zero();
                if !holds {
                    invariants_hold = false;
                }
                sample += 1;
            }
        }
    }

    let mut data = Map::new();
    data.insert("witness".to_string(), json!(witness.to_string()));
    data.insert("random_sample_size".to_string(), json!(sample));
    data.insert("random_sample_invariants".to_string(), json!(invariants_hold));
    let mut ok = invariants_hold && sample >= 300;
    oracle_compare(oracles, "JORDAN-5.3", "witness_semisimple", json!(semisimple), &mut data, &mut ok);
    oracle_compare(oracles, "JORDAN-5.3", "witness_diagonalisable_over_base", json!(diagonalisable), &mut data, &mut ok);
    if semisimple == diagonalisable {
        ok = false;
    }
    Ok((status_of(ok), Value::Object(data)))
}

fn rep_scenario() -> ScenarioResult {
    let q = FieldSpec::rationals();
    let sl2 = builtin(BuiltinName::Sl2, q, None)?;
    let standard = check_representation(&sl2, sl_basis_matrices(q, 2))?;
    let h = sl2.basis_element(2);

    let mut data = Map::new();
    let mut ok = true;
    for n in 1..=6usize {
        let sym = standard.sym_power(n)?;
        let decomp = sym.weight_decomposition(&h)?;
        let mut expected: Vec<FieldElement> = (0..=n)
            .map(|k| q.from_integer(n as i64 - 2 * k as i64))
            .collect();
        expected.sort_by(FieldElement::compare);
        let weights_ok =
            decomp.weights == expected && decomp.spaces.iter().all(|s| s.dim() == 1);
        let ladder_ok = ladder_check(n)?;
        if !(weights_ok && ladder_ok) {
            ok = false;
        }
        data.insert(
            format!("sym{n}"),
            json!({
                "weights": decomp.weights.iter().map(FieldElement::to_string).collect::<Vec<_>>(),
                "weights_exact": weights_ok,
                "ladder": ladder_ok,
            }),
        );
    }
    Ok((status_of(ok), Value::Object(data)))
}

fn weyl_scenario(cap: u128) -> ScenarioResult {
    let spec = prime(3);
    let sl2 = builtin(BuiltinName::Sl2, spec, None)?;
    let standard = check_representation(&sl2, sl_basis_matrices(spec, 2))?;
    let sym3 = standard.sym_power(3)?;

    let x3 = basis_vector(spec, 4, 0);
    let y3 = basis_vector(spec, 4, 3);
    let annihilated = sym3
        .mats()
        .iter()
        .all(|m| vec_is_zero(&m.mul_vec(&x3)) && vec_is_zero(&m.mul_vec(&y3)));
    let u = Subspace::from_rows(spec, 4, vec![x3, y3]);
    let invariant = sym3.is_invariant(&u);
    let complement = sym3.find_complement_capped(&u, cap)?;
    let reducible = sym3.is_completely_reducible(cap)?;
    let scanned = subspace_count(3, 4, None).unwrap_or_default();

    let ok = annihilated && invariant && complement.is_none() && !reducible && scanned == 212;
    Ok((
        status_of(ok),
        json!({
            "u_basis": u.basis().to_string(),
            "u_generators_annihilated": annihilated,
            "u_invariant": invariant,
            "subspaces_scanned": scanned.to_string(),
            "complement_found": complement.is_some(),
            "completely_reducible": reducible,
        }),
    ))
}

fn pmap_scenario(oracles: &Value) -> ScenarioResult {
    let mut data = Map::new();
    let mut ok = true;

    for (p, key) in [(3u64, "sl2_f3_images"), (5, "sl2_f5_images")] {
        let sl2 = builtin(BuiltinName::Sl2, prime(p), None)?;
        match find_p_mapping(&sl2)? {
            PMappingSearch::Restricted(pm) => {
                oracle_compare(oracles, "PMAP-6", key, images_json(&pm), &mut data, &mut ok);
                if !verify_p_mapping(&pm, 100, 4001)?.all_pass() {
                    ok = false;
                }
            }
            PMappingSearch::NotRestrictable(_) => {
                data.insert(key.to_string(), json!("no p-mapping found"));
                ok = false;
            }
        }
    }

    for (p, key) in [(2u64, "heisenberg_f2_images"), (3, "heisenberg_f3_images")] {
        let h3 = builtin(BuiltinName::Heisenberg, prime(p), None)?;
        match find_p_mapping(&h3)? {
            PMappingSearch::Restricted(pm) => {
                oracle_compare(oracles, "PMAP-6", key, images_json(&pm), &mut data, &mut ok);
                if !verify_p_mapping(&pm, 100, 4003)?.all_pass() {
                    ok = false;
                }
            }
            PMappingSearch::NotRestrictable(_) => {
                data.insert(key.to_string(), json!("no p-mapping found"));
                ok = false;
            }
        }
    }

    // aff2: the closed-form evaluation law, exhaustively over F_p^2.
    let mut aff2_law = true;
    for p in [2u64, 3, 5] {
        let spec = prime(p);
        let aff = builtin(BuiltinName::Aff2, spec, None)?;
        let pm = match find_p_mapping(&aff)? {
            PMappingSearch::Restricted(pm) => pm,
            PMappingSearch::NotRestrictable(_) => {
                aff2_law = false;
                break;
            }
        };
        if !verify_p_mapping(&pm, 100, 4005)?.all_pass() {
            aff2_law = false;
        }
        for alpha in spec.elements()? {
            for beta in spec.elements()? {
                let v = vec![alpha.clone(), beta.clone()];
                let expect = vec![alpha.pow(p), &alpha.pow(p - 1) * &beta];
                if pm.evaluate(&v)? != expect {
                    aff2_law = false;
                }
            }
        }
    }
    data.insert("aff2_evaluation_law".to_string(), json!(aff2_law));
    ok &= aff2_law;

    // fsl2: not restrictable, certified by the 8-element exhaustive scan.
    let fsl = builtin(BuiltinName::Fsl2, prime(2), None)?;
    let (not_restrictable, witness_index) = match find_p_mapping(&fsl)? {
        PMappingSearch::NotRestrictable(w) => (true, w.basis_index),
        PMappingSearch::Restricted(_) => (false, usize::MAX),
    };
    let target = fsl.ad_basis(0).pow(2);
    let candidates = all_vectors(prime(2), 3)?;
    let exhaustive_none = candidates.iter().all(|alpha| {
        fsl.ad(alpha).map(|m| m != target).unwrap_or(false)
    });
    data.insert(
        "fsl2".to_string(),
        json!({
            "restrictable": !not_restrictable,
            "witness_basis": if not_restrictable { fsl.label(witness_index).to_string() } else { String::new() },
            "candidates_scanned": candidates.len(),
            "exhaustive_scan_finds_no_match": exhaustive_none,
        }),
    );
    ok &= not_restrictable && witness_index == 0 && exhaustive_none;

    // gl and sl closure under the p-th power map, plus the Jacobson sum rule.
    let mut closure_ok = true;
    let mut jacobson_ok = true;
    let mut r = ChaCha8Rng::seed_from_u64(4007);
    for p in [2u64, 3, 5] {
        let spec = prime(p);
        let gl = builtin(BuiltinName::Gl, spec, Some(2))?;
        let units = gl_basis_matrices(spec, 2);
        let mut traceless = Vec::new();
        for _ in 0..20 {
            let a = random_matrix(spec, 2, &mut r);
            let b = random_matrix(spec, 2, &mut r);
            let table = jacobson_si(&gl, &a.flatten(), &b.flatten())?;
            let mut correction = Matrix::zeros(spec, 2, 2);
            for s in &table.entries {
                for (k, c) in s.iter().enumerate() {
                    correction = correction.add(&units[k].scale(c));
                }
            }
            if a.add(&b).pow(p) != a.pow(p).add(&b.pow(p)).add(&correction) {
                jacobson_ok = false;
            }
            let mut t = a.clone();
            let shift = t.trace();
            t[(1, 1)] = &t[(1, 1)] - &shift;
            traceless.push(t);
        }
        if !pth_power_closure_check(&traceless, ClosurePredicate::Sl)?
            || !pth_power_closure_check(&traceless, ClosurePredicate::Gl)?
        {
            closure_ok = false;
        }
    }
    let mut exhaustive_f2 = Vec::new();
    for v in all_vectors(prime(2), 3)? {
        exhaustive_f2.push(Matrix::from_rows(
            prime(2),
            vec![
                vec![v[0].clone(), v[1].clone()],
                vec![v[2].clone(), v[0].clone()],
            ],
        ));
    }
    if !pth_power_closure_check(&exhaustive_f2, ClosurePredicate::Sl)? {
        closure_ok = false;
    }
    data.insert("pth_power_closure".to_string(), json!(closure_ok));
    data.insert("jacobson_sum_rule".to_string(), json!(jacobson_ok));
    ok &= closure_ok && jacobson_ok;

    Ok((status_of(ok), Value::Object(data)))
}

fn random_matrix(spec: FieldSpec, n: usize, r: &mut ChaCha8Rng) -> Matrix {
    Matrix::from_rows(
        spec,
        (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| match spec.modulus() {
                        Some(p) => spec.from_integer(r.gen_range(0..p) as i64),
                        None => spec
                            .from_fraction(r.gen_range(-4..=4), r.gen_range(1..=3))
                            .unwrap(),
                    })
                    .collect()
            })
            .collect(),
    )
}

/// Recomputes every oracle-backed value from scratch; the output is the
/// content of the oracle file.
pub fn compute_oracles(cap: u128) -> modlie::Result<Value> {
    let fsl = builtin(BuiltinName::Fsl2, prime(2), None)?;
    let fsl_report = cartan_semisimplicity(&fsl, cap)?;

    let witness = Polynomial::from_i64(prime(2), &[1, 1, 1]).companion_matrix()?;

    let mut pmap_entries = Map::new();
    for (name, builtin_name, p, key) in [
        ("sl2", BuiltinName::Sl2, 3u64, "sl2_f3_images"),
        ("sl2", BuiltinName::Sl2, 5, "sl2_f5_images"),
        ("heisenberg", BuiltinName::Heisenberg, 2, "heisenberg_f2_images"),
        ("heisenberg", BuiltinName::Heisenberg, 3, "heisenberg_f3_images"),
    ] {
        let _ = name;
        let algebra = builtin(builtin_name, prime(p), None)?;
        let value = match find_p_mapping(&algebra)? {
            PMappingSearch::Restricted(pm) => images_json(&pm),
            PMappingSearch::NotRestrictable(_) => json!("no p-mapping found"),
        };
        pmap_entries.insert(key.to_string(), value);
    }

    Ok(json!({
        "CCS-5.2": {
            "fsl2_nondegenerate": fsl_report.nondegenerate,
            "fsl2_semisimple": fsl_report.semisimple,
        },
        "JORDAN-5.3": {
            "witness_diagonalisable_over_base": is_diagonalisable_over_base(&witness)?,
            "witness_semisimple": is_semisimple_matrix(&witness)?,
        },
        "PMAP-6": Value::Object(pmap_entries),
    }))
}

/// Summary stats for a scenario run used by the analyze-style text output.
pub fn summarize(entries: &[CheckEntry]) -> (usize, usize, usize) {
    let pass = entries.iter().filter(|e| e.status == Status::Pass).count();
    let fail = entries.iter().filter(|e| e.status == Status::Fail).count();
    (pass, fail, entries.len() - pass - fail)
}
