//! The acceptance gate: eleven numbered criteria covering exactness of all
//! four rule families, node-count closed forms, kernel equivalence,
//! interpolation properties, operator-norm growth, and convergence against
//! an independent reference.  Each test prints one `criterion N: PASS` line
//! (visible with `--nocapture`) and fails if a tolerance or time budget is
//! exceeded.  Run with `cargo test --test acceptance`.

use std::time::Instant;

use chebcube::cubature::{w0_rule, WeightKind};
use chebcube::lattice::{generate_index_set, IndexSetKind};
use chebcube::lebesgue::lebesgue_estimate;
use chebcube::oracle::reference_quadrature;
use chebcube::verify::{
    check_interp_delta, check_interp_partition_of_unity, check_interp_space_reproduction,
    check_kernel_dirichlet_2d, check_kernel_dirichlet_3d, check_kernel_dirichlet_x_3d,
    check_kernel_singular_2d, check_kernel_singular_3d, check_kernel_symmetrized_2d,
    check_kernel_symmetrized_3d, check_kernel_theta_3d, check_kernel_theta_odd_3d,
    check_node_counts, check_trig_exactness, check_w0_exactness, check_w0_failure_witness_3d,
    check_w1_exactness, CheckRecord, CheckStatus, VerifyOptions,
};

fn opts() -> VerifyOptions {
    VerifyOptions::default()
}

/// Asserts every record passed and the elapsed time stayed inside the
/// budget, printing the single pass/fail line for the criterion.
fn gate(criterion: u32, records: &[CheckRecord], started: Instant, budget_secs: u64) {
    let elapsed = started.elapsed().as_secs_f64();
    let all_ok = records.iter().all(|r| r.passed());
    let in_time = elapsed <= budget_secs as f64;
    let worst = records
        .iter()
        .max_by(|a, b| {
            let ra = a.max_error / a.tolerance.max(f64::MIN_POSITIVE);
            let rb = b.max_error / b.tolerance.max(f64::MIN_POSITIVE);
            ra.total_cmp(&rb)
        })
        .expect("at least one record");
    println!(
        "criterion {criterion:>2}: {} — {} checks, tightest margin {} ({:.2e} vs {:.1e}), {elapsed:.2}s of {budget_secs}s",
        if all_ok && in_time { "PASS" } else { "FAIL" },
        records.len(),
        worst.check,
        worst.max_error,
        worst.tolerance,
    );
    for record in records {
        assert!(
            record.passed(),
            "criterion {criterion} failed at {}: max error {:.3e} vs tolerance {:.1e} ({})",
            record.check,
            record.max_error,
            record.tolerance,
            record.detail
        );
    }
    assert!(
        in_time,
        "criterion {criterion} exceeded its {budget_secs}s budget: {elapsed:.2}s"
    );
}

#[test]
fn criterion_01_first_kind_exactness_2d() {
    let started = Instant::now();
    let ns: Vec<i64> = (2..=16).collect();
    let record = check_w0_exactness(2, &ns, &opts()).unwrap();
    assert_eq!(record.tolerance, 1e-12);
    gate(1, &[record], started, 10);
}

#[test]
fn criterion_02_second_kind_exactness_2d() {
    let started = Instant::now();
    let ns: Vec<i64> = (3..=16).collect();
    let record = check_w1_exactness(2, &ns, &opts()).unwrap();
    assert_eq!(record.tolerance, 1e-12);
    gate(2, &[record], started, 10);
}

#[test]
fn criterion_03_first_kind_exactness_3d_with_failure_witness() {
    let started = Instant::now();
    let ns: Vec<i64> = (2..=10).collect();
    let exact = check_w0_exactness(3, &ns, &opts()).unwrap();
    assert_eq!(exact.tolerance, 1e-11);
    // The equal-degree pair product T_n T_n 1 lies just outside the
    // exactness class and must visibly fail.
    let witness = check_w0_failure_witness_3d(&[2, 3], &opts()).unwrap();
    assert_eq!(
        witness.status,
        CheckStatus::ExpectedFail,
        "the out-of-class product must deviate: {witness:?}"
    );
    assert!(
        witness.max_error > 1e-3,
        "witness deviation too small: {:.3e}",
        witness.max_error
    );
    gate(3, &[exact, witness], started, 120);
}

#[test]
fn criterion_04_second_kind_exactness_3d() {
    let started = Instant::now();
    let ns: Vec<i64> = (3..=10).collect();
    let record = check_w1_exactness(3, &ns, &opts()).unwrap();
    assert_eq!(record.tolerance, 1e-11);
    gate(4, &[record], started, 120);
}

#[test]
fn criterion_05_trigonometric_exactness_both_variants() {
    let started = Instant::now();
    let ns2: Vec<i64> = (2..=8).collect();
    let ns3: Vec<i64> = (2..=6).collect();
    let planar = check_trig_exactness(2, &ns2, &opts()).unwrap();
    let spatial = check_trig_exactness(3, &ns3, &opts()).unwrap();
    assert_eq!(planar.tolerance, 1e-12);
    assert_eq!(spatial.tolerance, 1e-12);
    gate(5, &[planar, spatial], started, 60);
}

#[test]
fn criterion_06_node_count_closed_forms() {
    let started = Instant::now();
    let ns2: Vec<i64> = (1..=64).collect();
    let ns3: Vec<i64> = (1..=32).collect();
    let planar = check_node_counts(2, &ns2).unwrap();
    let spatial = check_node_counts(3, &ns3).unwrap();

    // The pinned closed forms, asserted as exact integers.
    let count = |kind, dim, n| generate_index_set(kind, dim, n).unwrap().len() as i64;
    for &n in &ns2 {
        assert_eq!(
            count(IndexSetKind::SpatialOctant, 2, n),
            n * (n + 1) / 2 + n / 2 + 1
        );
        assert_eq!(count(IndexSetKind::FrequencyHalfOpen, 2, n), 2 * n * n);
        assert_eq!(
            count(IndexSetKind::FrequencyHalfOpenDual, 2, n),
            2 * n * n,
            "both residue systems have the lattice determinant's cardinality"
        );
        assert_eq!(
            count(IndexSetKind::SpatialClosed, 2, n),
            2 * n * n + 2 * n + 1
        );
    }
    for &n in &ns3 {
        let half = n / 2 + 1;
        let other = (n - 1) / 2 + 1;
        assert_eq!(
            count(IndexSetKind::SpatialOctant, 3, n),
            half * half * half + other * other * other
        );
        assert_eq!(count(IndexSetKind::FrequencyHalfOpen, 3, n), 2 * n * n * n);
        assert_eq!(
            count(IndexSetKind::FrequencyHalfOpenDual, 3, n),
            2 * n * n * n
        );
        assert_eq!(
            count(IndexSetKind::SpatialClosed, 3, n),
            n * n * n + (n + 1) * (n + 1) * (n + 1)
        );
    }
    gate(6, &[planar, spatial], started, 5);
}

#[test]
fn criterion_07_kernel_closed_forms_match_direct_sums() {
    let started = Instant::now();
    let ns2: Vec<i64> = (2..=12).collect();
    let ns3: Vec<i64> = (2..=8).collect();
    let o = opts();
    let records = vec![
        check_kernel_dirichlet_2d(&ns2, &o).unwrap(),
        check_kernel_symmetrized_2d(&ns2, &o).unwrap(),
        check_kernel_singular_2d(&ns2, &o).unwrap(),
        check_kernel_theta_3d(&ns3, &o).unwrap(),
        check_kernel_theta_odd_3d(&ns3, &o).unwrap(),
        check_kernel_dirichlet_3d(&ns3, &o).unwrap(),
        check_kernel_dirichlet_x_3d(&ns3, &o).unwrap(),
        check_kernel_symmetrized_3d(&ns3, &o).unwrap(),
        check_kernel_singular_3d(&ns3, &o).unwrap(),
    ];
    for record in &records {
        let expected = if record.check.starts_with("kernel-singular") {
            1e-10
        } else {
            1e-9
        };
        assert_eq!(record.tolerance, expected, "{}", record.check);
    }
    gate(7, &records, started, 60);
}

#[test]
fn criterion_08_fundamental_polynomial_delta_and_unity() {
    let started = Instant::now();
    let ns2: Vec<i64> = (2..=8).collect();
    let ns3: Vec<i64> = (2..=5).collect();
    let o = opts();
    let records = vec![
        check_interp_delta(2, &ns2, &o).unwrap(),
        check_interp_delta(3, &ns3, &o).unwrap(),
        check_interp_partition_of_unity(2, &ns2, &o).unwrap(),
        check_interp_partition_of_unity(3, &ns3, &o).unwrap(),
    ];
    for record in &records {
        assert_eq!(record.tolerance, 1e-9, "{}", record.check);
    }
    gate(8, &records, started, 120);
}

#[test]
fn criterion_09_interpolation_space_reproduction() {
    let started = Instant::now();
    let o = opts();
    let records = vec![
        check_interp_space_reproduction(2, &[4, 8], &o).unwrap(),
        check_interp_space_reproduction(3, &[3, 5], &o).unwrap(),
    ];
    for record in &records {
        assert_eq!(record.tolerance, 1e-8, "{}", record.check);
    }
    gate(9, &records, started, 60);
}

#[test]
fn criterion_10_lebesgue_growth_stays_polylogarithmic() {
    let started = Instant::now();
    let mut summary = Vec::new();
    for (dim, scales) in [(2usize, vec![4i64, 8, 16, 32]), (3, vec![4, 8, 16])] {
        let reports: Vec<_> = scales
            .iter()
            .map(|&n| lebesgue_estimate(dim, n, 4 * n as usize).unwrap())
            .collect();
        for pair in reports.windows(2) {
            assert!(
                pair[0].estimate <= pair[1].estimate,
                "dim {dim}: estimate dropped from {:.6} (n = {}) to {:.6} (n = {})",
                pair[0].estimate,
                pair[0].n,
                pair[1].estimate,
                pair[1].n
            );
        }
        let first = reports[0].normalized;
        for report in &reports {
            assert!(
                report.normalized <= 4.0 * first,
                "dim {dim}, n = {}: normalized estimate {:.6} exceeds 4 x {first:.6}",
                report.n,
                report.normalized
            );
        }
        let worst = reports
            .iter()
            .map(|r| r.normalized / first)
            .fold(0.0f64, f64::max);
        summary.push(format!("dim {dim} worst ratio {worst:.3}"));
    }
    let elapsed = started.elapsed().as_secs_f64();
    println!(
        "criterion 10: PASS — estimates nondecreasing, normalized within 4x of the first scale ({}), {elapsed:.2}s of 300s",
        summary.join(", ")
    );
    assert!(
        elapsed <= 300.0,
        "criterion 10 exceeded its budget: {elapsed:.2}s"
    );
}

#[test]
fn criterion_11_convergence_against_independent_reference() {
    let started = Instant::now();
    let exponential_sum = |t: &[f64]| t.iter().sum::<f64>().exp();
    let mut details = Vec::new();
    for (dim, n) in [(2usize, 16i64), (3, 12)] {
        let reference =
            reference_quadrature(dim, WeightKind::ChebyshevFirst, 40, exponential_sum).unwrap();
        let got = w0_rule(dim, n).unwrap().apply(exponential_sum).unwrap();
        let error = (got - reference).abs();
        assert!(
            error <= 1e-6,
            "dim {dim}, n = {n}: |{got:.12} - {reference:.12}| = {error:.3e} > 1e-6"
        );
        details.push(format!("dim {dim} error {error:.2e}"));
    }
    let elapsed = started.elapsed().as_secs_f64();
    println!(
        "criterion 11: PASS — exp(t1 + ... + td) matches the order-40 reference ({}), {elapsed:.2}s of 30s",
        details.join(", ")
    );
    assert!(
        elapsed <= 30.0,
        "criterion 11 exceeded its budget: {elapsed:.2}s"
    );
}
