#include "berger/flows.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace berger {

FlowParams FlowParams::make(const BergerContext& ctx, double q,
                            FrameVector omega0) {
    const double n = omega0.norm();
    if (std::abs(n - 1.0) > 1e-12)
        throw std::invalid_argument("omega0 must have unit norm");
    FlowParams p;
    p.ctx = ctx;
    p.q = q;
    p.omega0 = omega0;
    p.theta = std::acos(std::clamp(omega0.C, -1.0, 1.0));
    p.q_tilde = q + (ctx.c - 1.0) / 2.0 * omega0.C;
    return p;
}

FlowParams FlowParams::make_normalized(const BergerContext& ctx, double q,
                                       FrameVector omega0) {
    const double n = omega0.norm();
    if (n == 0.0) throw std::invalid_argument("omega0 must be nonzero");
    return make(ctx, q, (1.0 / n) * omega0);
}

FlowParams FlowParams::from_angle(const BergerContext& ctx, double q,
                                  double theta, double phase) {
    const double s = std::sin(theta);
    return make(ctx, q,
                {s * std::cos(phase), s * std::sin(phase), std::cos(theta)});
}

FrameVector ea_rhs(FrameVector omega, const BergerContext& ctx) {
    const double k = (ctx.c - 1.0) / 2.0 * omega.C;
    return {k * omega.B, -k * omega.A, 0.0};
}

FrameVector mea_rhs(FrameVector omega, const BergerContext& ctx, double q) {
    const double k = q + (ctx.c - 1.0) / 2.0 * omega.C;
    return {k * omega.B, -k * omega.A, 0.0};
}

FrameVector omega_closed_form(double t, const FlowParams& p) {
    const double s = std::sin(p.q_tilde * t);
    const double c = std::cos(p.q_tilde * t);
    return {p.omega0.A * c + p.omega0.B * s,
            -p.omega0.A * s + p.omega0.B * c, p.omega0.C};
}

TrajectoryFactors magnetic_factors(const FlowParams& p) {
    const double w = 4.0 * (p.omega0.C - p.q / 2.0) / (p.ctx.c + 3.0);
    return {{p.omega0.A, p.omega0.B, w},
            (p.ctx.c - 1.0) * w / 4.0 + p.q / 2.0};
}

FrameVector omega_dot_closed_form(double t, const FlowParams& p) {
    // Omega' = [V, Omega] with V = -k_rate e3
    const TrajectoryFactors f = magnetic_factors(p);
    const FrameVector v{0.0, 0.0, -f.k_rate};
    return structure_bracket(v, omega_closed_form(t, p), p.ctx);
}

namespace {

GroupElement two_factor_product(double t, FrameVector W, double k_rate,
                                const BergerContext& ctx) {
    const GroupElement a = exp_group(frame_to_algebra(t * W, ctx));
    const GroupElement b =
        exp_group(frame_to_algebra({0.0, 0.0, t * k_rate}, ctx));
    return group_mul(a, b).normalized();
}

} // namespace

GroupElement geodesic_closed_form(double t, FrameVector omega0,
                                  const BergerContext& ctx) {
    const double w = 4.0 * omega0.C / (ctx.c + 3.0);
    return two_factor_product(t, {omega0.A, omega0.B, w},
                              (ctx.c - 1.0) * w / 4.0, ctx);
}

GroupElement magnetic_closed_form(double t, const FlowParams& p) {
    const TrajectoryFactors f = magnetic_factors(p);
    return two_factor_product(t, f.W, f.k_rate, p.ctx);
}

GroupElement magnetic_fibration_form(double t, const FlowParams& p) {
    const double c = p.ctx.c;
    FrameVector base;   // exponent of the first (base) factor
    double fiber;       // e3 coefficient of the second (fiber) factor
    if (std::abs(c - 1.0) > 1e-3) {
        // the fibration splitting measures charge in the base/fiber
        // convention; q_base = 4q/(1-c) converts from the Lorentz charge
        const double q_base = 4.0 * p.q / (1.0 - c);
        const double xk = p.omega0.C - q_base / 2.0;
        base = {p.omega0.A, p.omega0.B,
                4.0 / (c + 3.0) * xk + q_base / 2.0};
        fiber = (c - 1.0) / (c + 3.0) * xk;
    } else {
        // near the bi-invariant point q_base diverges and the split above
        // cancels catastrophically; evaluate its exact limit instead
        base = {p.omega0.A, p.omega0.B,
                (4.0 * p.omega0.C - 2.0 * p.q) / (c + 3.0)};
        fiber = ((c - 1.0) * p.omega0.C + 2.0 * p.q) / (c + 3.0);
    }
    return two_factor_product(t, base, fiber, p.ctx);
}

FrameVector omega_from_factors(double t, const FlowParams& p) {
    const TrajectoryFactors f = magnetic_factors(p);
    const AlgebraVector w_alg = frame_to_algebra(f.W, p.ctx);
    const AlgebraVector q_alg =
        frame_to_algebra({0.0, 0.0, f.k_rate}, p.ctx);
    const GroupElement g_inv = exp_group(-t * q_alg);
    return algebra_to_frame(adjoint(g_inv, w_alg) + q_alg, p.ctx);
}

std::vector<TrajectorySample> rk4_group_integrate(const FlowParams& p,
                                                  double t_end, double step,
                                                  int stride) {
    if (!(step > 0.0) || !(t_end > 0.0))
        throw std::invalid_argument("t_end and step must be positive");
    if (stride < 1) throw std::invalid_argument("stride must be >= 1");

    const long long n = std::max(1LL, std::llround(t_end / step));
    const double h = t_end / static_cast<double>(n);

    struct State {
        GroupElement g;
        FrameVector om;
    };
    auto deriv = [&](const State& s) -> State {
        const AlgebraVector om_alg = frame_to_algebra(s.om, p.ctx);
        const GroupElement gd =
            group_mul(s.g, {0.0, om_alg.x1, om_alg.x2, om_alg.x3});
        return {gd, mea_rhs(s.om, p.ctx, p.q)};
    };
    auto axpy = [](const State& s, double a, const State& d) -> State {
        return {{s.g.q0 + a * d.g.q0, s.g.q1 + a * d.g.q1,
                 s.g.q2 + a * d.g.q2, s.g.q3 + a * d.g.q3},
                s.om + a * d.om};
    };

    State s{GroupElement::identity(), p.omega0};
    std::vector<TrajectorySample> out;
    out.reserve(static_cast<size_t>(n / stride) + 2);
    out.push_back({0.0, s.g, s.om});

    for (long long i = 0; i < n; ++i) {
        const State k1 = deriv(s);
        const State k2 = deriv(axpy(s, h / 2.0, k1));
        const State k3 = deriv(axpy(s, h / 2.0, k2));
        const State k4 = deriv(axpy(s, h, k3));
        State next = s;
        next = axpy(next, h / 6.0, k1);
        next = axpy(next, h / 3.0, k2);
        next = axpy(next, h / 3.0, k3);
        next = axpy(next, h / 6.0, k4);
        next.g = next.g.normalized();
        s = next;

        if (!std::isfinite(s.g.q0) || !std::isfinite(s.om.A) ||
            !std::isfinite(s.om.B) || !std::isfinite(s.om.C))
            throw std::runtime_error("rk4_group_integrate: state diverged");

        if ((i + 1) % stride == 0 || i + 1 == n)
            out.push_back({(i + 1) * h, s.g, s.om});
    }
    return out;
}

std::vector<FrameVector> lorentz_residual_analytic(
    const FlowParams& p, std::span<const double> times) {
    std::vector<FrameVector> r;
    r.reserve(times.size());
    for (double t : times)
        r.push_back(omega_dot_closed_form(t, p) -
                    mea_rhs(omega_closed_form(t, p), p.ctx, p.q));
    return r;
}

std::vector<FrameVector> lorentz_residual_fd(
    std::span<const TrajectorySample> samples, const BergerContext& ctx,
    double q) {
    if (samples.size() < 3)
        throw std::invalid_argument("need at least 3 samples");
    const double h = samples[1].t - samples[0].t;
    for (size_t i = 1; i + 1 < samples.size(); ++i) {
        const double hi = samples[i + 1].t - samples[i].t;
        if (std::abs(hi - h) > 1e-9 * std::max(1.0, std::abs(h)))
            throw std::invalid_argument("time grid must be uniform");
    }
    std::vector<FrameVector> r;
    r.reserve(samples.size() - 2);
    for (size_t i = 1; i + 1 < samples.size(); ++i) {
        const FrameVector d =
            (1.0 / (2.0 * h)) * (samples[i + 1].omega - samples[i - 1].omega);
        r.push_back(d - mea_rhs(samples[i].omega, ctx, q));
    }
    return r;
}

double max_norm(std::span<const FrameVector> residuals) {
    double m = 0.0;
    for (const auto& r : residuals) m = std::max(m, r.norm());
    return m;
}

} // namespace berger
