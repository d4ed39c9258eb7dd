#pragma once

// The SO(3) side: Euler top, symmetric-top closed form, the
// Zhukovskii-Volterra gyrostat, and the projection of Berger trajectories
// to rigid-body motions through the double cover.

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "berger/flows.hpp"
#include "berger/lie.hpp"

namespace berger {

struct InertiaSpec {
    double I1, I2, I3;

    static InertiaSpec make(double I1, double I2, double I3);
    So3Vector apply(So3Vector w) const {
        return {I1 * w.x, I2 * w.y, I3 * w.z};
    }
    So3Vector solve(So3Vector m) const {
        return {m.x / I1, m.y / I2, m.z / I3};
    }
};

struct GyrostatSpec {
    So3Vector kappa{0.0, 0.0, 0.0};
};

// torque-free Euler equations, I_i w_i' = (I_j - I_k) w_j w_k (cyclic)
So3Vector euler_rhs(So3Vector omega, const InertiaSpec& I);

// gyrostat: mu' + omega x (mu + kappa) = 0, i.e.
// omega' = I^{-1}((I omega + kappa) x omega)
So3Vector gyrostat_rhs(So3Vector omega, const InertiaSpec& I,
                       const GyrostatSpec& g);

// symmetric top (I1 = I2): attitude in closed form as the product
// exp{t (w_perp + (I3/I1) w_axis)} exp{t ((I1-I3)/I1) w_axis},
// with omega0 split along/against the e3 axis
So3Matrix symmetric_top_solution(double t, So3Vector omega0, double I1,
                                 double I3);
// body angular velocity R^{-1} R' of the same solution, analytically
So3Vector symmetric_top_omega(double t, So3Vector omega0, double I1,
                              double I3);

// inertia I = (4/(c+3), 4/(c+3), 16/(c+3)^2) together with the gyrostatic
// momentum kappa = -(4q/(c+3)) e3 that maps the charge-q trajectories of
// M^3(c) onto gyrostat motions
std::pair<InertiaSpec, GyrostatSpec> berger_correspondence(double c,
                                                           double q);

// R(t) = double_cover(gamma(t)) and the doubled body angular velocity
std::vector<std::pair<So3Matrix, So3Vector>> project_trajectory(
    std::span<const TrajectorySample> samples, const BergerContext& ctx);

// max |mu' + omega x (mu + kappa)| over interior samples, mu' by central
// differences on the uniform grid with spacing dt
double gyrostat_residual(std::span<const So3Vector> omegas,
                         const InertiaSpec& I, const GyrostatSpec& g,
                         double dt);

// classical RK4 for an so(3)-vector ODE; returns omega at t_end
So3Vector rk4_so3(const std::function<So3Vector(So3Vector)>& rhs,
                  So3Vector omega0, double t_end, double step);
// same, recording every step
std::vector<So3Vector> rk4_so3_path(
    const std::function<So3Vector(So3Vector)>& rhs, So3Vector omega0,
    double t_end, double step);

} // namespace berger
