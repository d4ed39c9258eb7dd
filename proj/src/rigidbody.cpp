#include "berger/rigidbody.hpp"

#include <cmath>
#include <stdexcept>

namespace berger {

InertiaSpec InertiaSpec::make(double I1, double I2, double I3) {
    if (!(I1 > 0.0 && I2 > 0.0 && I3 > 0.0))
        throw std::invalid_argument("principal moments must be positive");
    return {I1, I2, I3};
}

So3Vector euler_rhs(So3Vector w, const InertiaSpec& I) {
    return {(I.I2 - I.I3) / I.I1 * w.y * w.z,
            (I.I3 - I.I1) / I.I2 * w.z * w.x,
            (I.I1 - I.I2) / I.I3 * w.x * w.y};
}

So3Vector gyrostat_rhs(So3Vector w, const InertiaSpec& I,
                       const GyrostatSpec& g) {
    return I.solve(cross(I.apply(w) + g.kappa, w));
}

So3Matrix symmetric_top_solution(double t, So3Vector omega0, double I1,
                                 double I3) {
    if (!(I1 > 0.0 && I3 > 0.0))
        throw std::invalid_argument("principal moments must be positive");
    const So3Vector perp{omega0.x, omega0.y, 0.0};
    const So3Vector axis{0.0, 0.0, omega0.z};
    const So3Vector p = perp + (I3 / I1) * axis;
    const So3Vector q = ((I1 - I3) / I1) * axis;
    return exp_so3(t * p) * exp_so3(t * q);
}

So3Vector symmetric_top_omega(double t, So3Vector omega0, double I1,
                              double I3) {
    const So3Vector perp{omega0.x, omega0.y, 0.0};
    const So3Vector axis{0.0, 0.0, omega0.z};
    const So3Vector p = perp + (I3 / I1) * axis;
    const So3Vector q = ((I1 - I3) / I1) * axis;
    // R = F(t) G(t) with constant exponents: R^{-1} R' = Ad(G^{-1}) p + q
    return exp_so3(-1.0 * (t * q)).apply(p) + q;
}

std::pair<InertiaSpec, GyrostatSpec> berger_correspondence(double c,
                                                           double q) {
    if (!(c > -3.0)) throw std::invalid_argument("c must exceed -3");
    const double I1 = 4.0 / (c + 3.0);
    const InertiaSpec I{I1, I1, I1 * I1};
    return {I, GyrostatSpec{{0.0, 0.0, -4.0 * q / (c + 3.0)}}};
}

std::vector<std::pair<So3Matrix, So3Vector>> project_trajectory(
    std::span<const TrajectorySample> samples, const BergerContext& ctx) {
    std::vector<std::pair<So3Matrix, So3Vector>> out;
    out.reserve(samples.size());
    for (const auto& s : samples)
        out.emplace_back(
            double_cover(s.gamma),
            double_cover_diff(frame_to_algebra(s.omega, ctx)));
    return out;
}

double gyrostat_residual(std::span<const So3Vector> omegas,
                         const InertiaSpec& I, const GyrostatSpec& g,
                         double dt) {
    if (omegas.size() < 3)
        throw std::invalid_argument("need at least 3 samples");
    double worst = 0.0;
    for (size_t i = 1; i + 1 < omegas.size(); ++i) {
        const So3Vector mu_dot =
            (1.0 / (2.0 * dt)) * (I.apply(omegas[i + 1]) -
                                  I.apply(omegas[i - 1]));
        const So3Vector r =
            mu_dot + cross(omegas[i], I.apply(omegas[i]) + g.kappa);
        worst = std::max(worst, r.norm());
    }
    return worst;
}

So3Vector rk4_so3(const std::function<So3Vector(So3Vector)>& rhs,
                  So3Vector omega0, double t_end, double step) {
    if (!(step > 0.0) || !(t_end > 0.0))
        throw std::invalid_argument("t_end and step must be positive");
    const long long n = std::max(1LL, std::llround(t_end / step));
    const double h = t_end / static_cast<double>(n);
    So3Vector w = omega0;
    for (long long i = 0; i < n; ++i) {
        const So3Vector k1 = rhs(w);
        const So3Vector k2 = rhs(w + (h / 2.0) * k1);
        const So3Vector k3 = rhs(w + (h / 2.0) * k2);
        const So3Vector k4 = rhs(w + h * k3);
        w = w + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return w;
}

std::vector<So3Vector> rk4_so3_path(
    const std::function<So3Vector(So3Vector)>& rhs, So3Vector omega0,
    double t_end, double step) {
    const long long n = std::max(1LL, std::llround(t_end / step));
    const double h = t_end / static_cast<double>(n);
    std::vector<So3Vector> out;
    out.reserve(static_cast<size_t>(n) + 1);
    So3Vector w = omega0;
    out.push_back(w);
    for (long long i = 0; i < n; ++i) {
        const So3Vector k1 = rhs(w);
        const So3Vector k2 = rhs(w + (h / 2.0) * k1);
        const So3Vector k3 = rhs(w + (h / 2.0) * k2);
        const So3Vector k4 = rhs(w + h * k3);
        w = w + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        out.push_back(w);
    }
    return out;
}

} // namespace berger
