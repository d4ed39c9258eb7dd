#pragma once

// Closed-form geodesics and contact magnetic trajectories on M^3(c), the
// Runge-Kutta oracle for the coupled group/angular-velocity system, and the
// Lorentz-equation residual used to verify both.

#include <span>
#include <vector>

#include "berger/geometry.hpp"
#include "berger/lie.hpp"

namespace berger {

// Initial data for a unit-speed trajectory: charge q and angular velocity
// Omega(0) with |Omega(0)| = 1.  theta is the contact angle and
// q_tilde = q + ((c-1)/2) cos(theta) the rotation rate of (A, B).
struct FlowParams {
    BergerContext ctx;
    double q = 0.0;
    FrameVector omega0{0.0, 0.0, 1.0};
    double theta = 0.0;
    double q_tilde = 0.0;

    // rejects |omega0| != 1 beyond 1e-12
    static FlowParams make(const BergerContext& ctx, double q,
                           FrameVector omega0);
    // rescales omega0 to unit norm first
    static FlowParams make_normalized(const BergerContext& ctx, double q,
                                      FrameVector omega0);
    // omega0 = (sin(theta) cos(phase), sin(theta) sin(phase), cos(theta))
    static FlowParams from_angle(const BergerContext& ctx, double q,
                                 double theta, double phase = 0.0);
};

struct TrajectorySample {
    double t = 0.0;
    GroupElement gamma;
    FrameVector omega;
};

// dOmega/dt for geodesics: (((c-1)/2) C B, -((c-1)/2) C A, 0)
FrameVector ea_rhs(FrameVector omega, const BergerContext& ctx);
// magnetized version; q = 0 reduces to ea_rhs
FrameVector mea_rhs(FrameVector omega, const BergerContext& ctx, double q);

// Omega(t) in closed form: (A,B) rotates at rate q_tilde, C is constant
FrameVector omega_closed_form(double t, const FlowParams& p);
// analytic dOmega/dt of the two-exponential product, via [V, Omega]
FrameVector omega_dot_closed_form(double t, const FlowParams& p);

// The two one-parameter factors of the trajectory:
//   gamma(t) = exp_G(t W) * exp_G(t k_rate e3),
// with W = A0 e1 + B0 e2 + w e3, w = 4 (C0 - q/2)/(c+3) and
// k_rate = (c-1) w/4 + q/2.
struct TrajectoryFactors {
    FrameVector W;
    double k_rate = 0.0;
};
TrajectoryFactors magnetic_factors(const FlowParams& p);

GroupElement geodesic_closed_form(double t, FrameVector omega0,
                                  const BergerContext& ctx);
GroupElement magnetic_closed_form(double t, const FlowParams& p);

// Alternative factorization through the Hopf-fibration splitting (base part
// carries the charge term, fiber part carries only the k-component); agrees
// pointwise with magnetic_closed_form.
GroupElement magnetic_fibration_form(double t, const FlowParams& p);

// gamma^{-1} gamma' of the two-exponential product, evaluated through the
// quaternion adjoint (independent of omega_closed_form's trigonometry)
FrameVector omega_from_factors(double t, const FlowParams& p);

// classical RK4 on the 7-dimensional state (gamma, Omega) with post-step
// renormalization; emits every `stride`-th step plus the endpoint
std::vector<TrajectorySample> rk4_group_integrate(const FlowParams& p,
                                                  double t_end, double step,
                                                  int stride = 1);

// Lorentz residual r = dOmega/dt - mea_rhs(Omega) per sample.
// Analytic mode: closed-form trajectory, derivative via [V, Omega].
std::vector<FrameVector> lorentz_residual_analytic(
    const FlowParams& p, std::span<const double> times);
// Finite-difference mode: central differences on a uniform grid, interior
// samples only; rejects non-uniform grids.
std::vector<FrameVector> lorentz_residual_fd(
    std::span<const TrajectorySample> samples, const BergerContext& ctx,
    double q);

double max_norm(std::span<const FrameVector> residuals);

} // namespace berger
