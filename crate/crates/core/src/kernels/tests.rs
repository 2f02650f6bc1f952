use super::*;
use crate::kernels::families::{riemann_liouville_conjugate, riemann_liouville_kernel};
use approx::assert_relative_eq;

#[test]
fn unit_kernel_basics() {
    let k = unit_kernel::<f64>();
    assert_eq!(k.eval(0.7, 0.2), 1.0);
    let w = WeightFunction::unit(0.0, 1.0).unwrap();
    // δ_{1,1}(x, y) = x − y
    let d = composition_delta(&k, &k, &w, 0.9, 0.4, 1e-12).unwrap();
    assert_relative_eq!(d, 0.5, max_relative = 1e-11);
    let rep = membership_report(&k, &w, 24).unwrap();
    assert!(rep.passes);
    assert_relative_eq!(rep.sup_fk, 1.0, max_relative = 1e-3);
    assert_relative_eq!(rep.sup_gk, 1.0, max_relative = 1e-3);
}

#[test]
fn rl_kernel_pointwise() {
    let k = riemann_liouville_kernel(0.5f64).unwrap();
    // (0.25)^{-0.5} / Γ(0.5) = 2/√π
    assert_relative_eq!(k.eval(1.0, 0.75), 1.1283791670955125739, max_relative = 1e-12);
}

#[test]
fn rl_pair_is_conjugate() {
    for &alpha in &[0.25f64, 0.5, 0.75] {
        let pair = riemann_liouville_pair(alpha, 0.0, 1.0).unwrap();
        let grid = triangular_grid(0.0, 1.0, 8);
        let rep = check_conjugacy(&pair.kernel, &pair.conjugate, &pair.weight, &grid, 1e-7)
            .unwrap();
        assert!(
            rep.conjugate,
            "alpha={alpha}: dev fwd {} bwd {}",
            rep.max_dev_forward, rep.max_dev_backward
        );
    }
}

#[test]
fn rl_delta_reduces_to_beta() {
    // oracle: δ_{k_α,k'_α} = B(α, 1−α)/(Γ(α)Γ(1−α)) = 1 by the Beta identity
    let pair = riemann_liouville_pair(0.3f64, 0.0, 1.0).unwrap();
    let d = composition_delta(&pair.kernel, &pair.conjugate, &pair.weight, 0.8, 0.1, 1e-10)
        .unwrap();
    assert!((d - 1.0).abs() <= 1e-8);
}

#[test]
fn rl_semigroup_delta() {
    // δ_{k_0.3,k_0.4}(x, y) = k_0.7(x, y); extended-precision value at (1, 0.5)
    let k1 = riemann_liouville_kernel(0.3f64).unwrap();
    let k2 = riemann_liouville_kernel(0.4f64).unwrap();
    let w = WeightFunction::unit(0.0, 1.0).unwrap();
    let d = composition_delta(&k1, &k2, &w, 1.0, 0.5, 1e-10).unwrap();
    assert_relative_eq!(d, 0.94845295295219217239, max_relative = 1e-8);
}

#[test]
fn unit_pair_is_not_conjugate() {
    let k = unit_kernel::<f64>();
    let w = WeightFunction::unit(0.0, 1.0).unwrap();
    let grid = triangular_grid(0.0, 1.0, 6);
    let rep = check_conjugacy(&k, &k, &w, &grid, 1e-7).unwrap();
    assert!(!rep.conjugate);
}

#[test]
fn conjugacy_check_is_symmetric() {
    let pair = riemann_liouville_pair(0.4f64, 0.0, 1.0).unwrap();
    let grid = triangular_grid(0.0, 1.0, 5);
    let fwd = check_conjugacy(&pair.kernel, &pair.conjugate, &pair.weight, &grid, 1e-7).unwrap();
    let bwd = check_conjugacy(&pair.conjugate, &pair.kernel, &pair.weight, &grid, 1e-7).unwrap();
    assert_relative_eq!(fwd.max_dev_forward, bwd.max_dev_backward, epsilon = 1e-12);
    assert_relative_eq!(fwd.max_dev_backward, bwd.max_dev_forward, epsilon = 1e-12);
}

#[test]
fn hadamard_pointwise_and_conjugacy() {
    let pair = hadamard_pair(0.5f64, 1.0, std::f64::consts::E).unwrap();
    // k(e, 1) = (ln e)^{-0.5}/Γ(0.5) = 1/√π
    assert_relative_eq!(
        pair.kernel.eval(std::f64::consts::E, 1.0),
        0.56418958354775628695,
        max_relative = 1e-12
    );
    let grid = triangular_grid(1.0, std::f64::consts::E, 8);
    let rep = check_conjugacy(&pair.kernel, &pair.conjugate, &pair.weight, &grid, 1e-8).unwrap();
    assert!(rep.conjugate, "dev fwd {} bwd {}", rep.max_dev_forward, rep.max_dev_backward);
    // change of variables u = ln(z/y) reduces δ to the power-difference case
    let d = composition_delta(&pair.kernel, &pair.conjugate, &pair.weight, 2.0, 1.2, 1e-10)
        .unwrap();
    assert!((d - 1.0).abs() <= 1e-8);
}

#[test]
fn erdelyi_kober_reduces_to_rl_at_sigma_one() {
    let ek = erdelyi_kober_pair(0.35f64, 1.0, 0.5, 1.5).unwrap();
    let rl = riemann_liouville_kernel(0.35f64).unwrap();
    // deterministic low-discrepancy points in Ω
    let phi = 0.6180339887498949f64;
    for i in 0..20 {
        let fx = (0.05 + phi * i as f64).fract();
        let fy = (0.35 + phi * phi * i as f64).fract();
        let x = 0.5 + 0.98 * fx.max(fy);
        let y = 0.5 + 0.98 * (fx.min(fy) * 0.99);
        if x <= y {
            continue;
        }
        assert_relative_eq!(ek.kernel.eval(x, y), rl.eval(x, y), max_relative = 1e-12);
    }
}

#[test]
fn erdelyi_kober_conjugacy() {
    let pair = erdelyi_kober_pair(0.5f64, 2.0, 0.5, 1.5).unwrap();
    let grid = triangular_grid(0.5, 1.5, 8);
    let rep = check_conjugacy(&pair.kernel, &pair.conjugate, &pair.weight, &grid, 1e-8).unwrap();
    assert!(rep.conjugate, "dev fwd {} bwd {}", rep.max_dev_forward, rep.max_dev_backward);
    // substitution u = z^σ turns δ into the power-difference integral
    let d = composition_delta(&pair.kernel, &pair.conjugate, &pair.weight, 1.2, 0.8, 1e-10)
        .unwrap();
    assert!((d - 1.0).abs() <= 1e-8);
}

#[test]
fn e1_volterra_conjugacy() {
    let pair = e1_volterra_pair(0.5f64).unwrap();
    let grid = triangular_grid(0.0, 1.0, 6);
    let tol = default_conjugacy_tol(&pair.kernel, &pair.conjugate);
    assert_eq!(tol, 1e-5);
    let rep = check_conjugacy(&pair.kernel, &pair.conjugate, &pair.weight, &grid, tol).unwrap();
    assert!(rep.conjugate, "dev fwd {} bwd {}", rep.max_dev_forward, rep.max_dev_backward);
}

#[test]
fn e1_kernel_membership_bounded_by_one() {
    let pair = e1_volterra_pair(1.0f64).unwrap();
    let rep = membership_report(&pair.conjugate, &pair.weight, 18).unwrap();
    assert!(rep.passes);
    assert!(rep.sup_fk <= 1.0 + 1e-6, "sup_fk = {}", rep.sup_fk);
    // closed form at y = 0, α = 1: ∫₀¹ E1 = 1 + E1(1) − e^{-1}
    let fk0 = pair.conjugate.closed_form_fk().unwrap()(0.0);
    assert_relative_eq!(fk0, 0.85150449322407795208, max_relative = 1e-10);
}

#[test]
fn volterra_kernel_table_matches_direct_evaluation() {
    use crate::specfun::volterra_f;
    let k = volterra_kernel(0.5f64).unwrap();
    for &u in &[1e-5f64, 1e-3, 0.05, 0.3, 0.9, 1.9] {
        let direct = volterra_f(u).unwrap();
        let tabled = k.eval(u * 0.5, 0.0);
        assert_relative_eq!(tabled, direct, max_relative = 5e-8);
    }
}

#[test]
fn rl_membership_matches_closed_form() {
    let pair = riemann_liouville_pair(0.5f64, 0.0, 1.0).unwrap();
    let rep = membership_report(&pair.kernel, &pair.weight, 24).unwrap();
    assert!(rep.passes);
    // sup_y (1−y)^α/Γ(α+1) attained at y → 0: 1/Γ(1.5)
    let closed = pair.kernel.closed_form_fk().unwrap()(0.0);
    assert_relative_eq!(closed, 1.1283791670955125739, max_relative = 1e-12);
    assert!(rep.sup_fk <= closed * (1.0 + 1e-6));
    assert!(rep.sup_fk >= closed * 0.97, "grid sup {} vs closed {}", rep.sup_fk, closed);
}

#[test]
fn composition_membership_bound() {
    // Both marginal estimates of δ stay below the product of the parts'.
    let k1 = riemann_liouville_kernel(0.3f64).unwrap();
    let k2 = riemann_liouville_kernel(0.4f64).unwrap();
    let w = WeightFunction::unit(0.0, 1.0).unwrap();
    let comp = CompositionKernel::new(k1.clone(), k2.clone(), w.clone(), 1e-9);
    comp.check_relation(5).unwrap();
    let delta = comp.as_kernel().unwrap();
    let rep_delta = membership_report(&delta, &w, 16).unwrap();
    let rep1 = membership_report(&k1, &w, 16).unwrap();
    let rep2 = membership_report(&k2, &w, 16).unwrap();
    assert!(rep_delta.passes);
    assert!(rep_delta.sup_fk <= rep1.sup_fk * rep2.sup_fk * (1.0 + 1e-6));
}

#[test]
fn convolution_kernels_depend_on_gap_only() {
    // δ of difference kernels with unit weight is a function of x − y
    let pair = riemann_liouville_pair(0.6f64, 0.0, 1.0).unwrap();
    let w = &pair.weight;
    let d1 = composition_delta(&pair.kernel, &pair.kernel, w, 0.5, 0.2, 1e-10).unwrap();
    let d2 = composition_delta(&pair.kernel, &pair.kernel, w, 0.9, 0.6, 1e-10).unwrap();
    assert_relative_eq!(d1, d2, max_relative = 1e-8);
}

#[test]
fn sonine_condition_specialization() {
    // for difference kernels conjugacy is exactly the classical condition
    // ∫₀^t K1(t−s) K2(s) ds = 1 on a t-grid
    let pair = riemann_liouville_pair(0.5f64, 0.0, 1.0).unwrap();
    for k in 1..8 {
        let t = k as f64 / 8.0;
        let d = composition_delta(&pair.kernel, &pair.conjugate, &pair.weight, t, 0.0, 1e-10)
            .unwrap();
        assert!((d - 1.0).abs() <= 1e-8, "Sonine condition fails at t = {t}");
    }
}

#[test]
fn triangular_grid_stays_inside_omega() {
    let grid = triangular_grid(0.0f64, 1.0, 20);
    assert_eq!(grid.len(), 20 * 19 / 2);
    for &(x, y) in &grid {
        assert!(x > y && y > 0.0 && x < 1.0);
    }
}

#[test]
fn conjugacy_report_serializes() {
    let pair = riemann_liouville_pair(0.5f64, 0.0, 1.0).unwrap();
    let grid = triangular_grid(0.0, 1.0, 3);
    let rep = check_conjugacy(&pair.kernel, &pair.conjugate, &pair.weight, &grid, 1e-7).unwrap();
    let json = serde_json::to_string(&rep).unwrap();
    assert!(json.contains("max_dev_forward"));
    assert!(json.contains("\"points\""));
}

#[test]
fn user_kernel_validation() {
    assert!(Kernel::<f64>::new("bad", |_, _| 1.0, Singularity::Algebraic(1.0), Singularity::Regular).is_err());
    assert!(Kernel::<f64>::new("ok", |_, _| 1.0, Singularity::Algebraic(0.5), Singularity::Regular).is_ok());
    assert!(WeightFunction::new(0.0f64, 1.0, |_| 1.0, 1.0, 1.0).is_ok());
    assert!(WeightFunction::new(0.0f64, 1.0, |x| x - 0.5, 1.0, 1.0).is_err());
}
