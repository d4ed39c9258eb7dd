#include <doctest.h>

#include <numbers>
#include <stdexcept>

#include "berger/rigidbody.hpp"
#include "test_support.hpp"

using namespace berger;
using namespace testsup;
using std::numbers::pi;

namespace {
double vdist(So3Vector a, So3Vector b) { return (a - b).norm(); }
} // namespace

TEST_CASE("Euler equations right-hand side") {
    const InertiaSpec ball{2.0, 2.0, 2.0};
    CHECK(vdist(euler_rhs({0.3, -1.0, 0.7}, ball), {0, 0, 0}) == 0.0);

    const InertiaSpec I{1.0, 2.0, 3.0};
    CHECK(vdist(euler_rhs({0.5, 0, 0}, I), {0, 0, 0}) == 0.0);
    CHECK(vdist(euler_rhs({1, 1, 1}, I), {-1.0, 1.0, -1.0 / 3.0}) < 1e-15);

    // cross-product oracle: I w' = (I w) x w
    std::mt19937_64 rng(201);
    for (int n = 0; n < 30; ++n) {
        const So3Vector w{uniform(rng, -2, 2), uniform(rng, -2, 2),
                          uniform(rng, -2, 2)};
        const InertiaSpec J{uniform(rng, 0.2, 3.0), uniform(rng, 0.2, 3.0),
                            uniform(rng, 0.2, 3.0)};
        CHECK(vdist(euler_rhs(w, J), J.solve(cross(J.apply(w), w))) < 1e-14);
    }
    CHECK_THROWS_AS(InertiaSpec::make(0.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("gyrostat right-hand side") {
    const InertiaSpec I{0.5, 0.5, 0.25};
    const GyrostatSpec g{{0, 0, 0.5}};
    CHECK(vdist(gyrostat_rhs({1, 0, 0}, I, g), {0, 1, 0}) < 1e-15);

    std::mt19937_64 rng(203);
    for (int n = 0; n < 20; ++n) {
        const So3Vector w{uniform(rng, -2, 2), uniform(rng, -2, 2),
                          uniform(rng, -2, 2)};
        const InertiaSpec J{uniform(rng, 0.2, 3.0), uniform(rng, 0.2, 3.0),
                            uniform(rng, 0.2, 3.0)};
        CHECK(vdist(gyrostat_rhs(w, J, GyrostatSpec{}), euler_rhs(w, J)) <
              1e-15);
    }
    // spin about the rotor axis is an equilibrium
    CHECK(vdist(gyrostat_rhs({0, 0, 2.0}, I, g), {0, 0, 0}) == 0.0);
}

TEST_CASE("symmetric top closed form") {
    // equal moments: single exponential
    const So3Vector w0{0.4, -0.2, 0.9};
    for (double t : {0.5, 2.0})
        CHECK(max_abs(symmetric_top_solution(t, w0, 0.7, 0.7) -
                      exp_so3(t * w0)) < 1e-13);

    // axial spin: the two factors merge
    const So3Vector wz{0, 0, 1.3};
    for (double t : {0.5, 3.0})
        CHECK(max_abs(symmetric_top_solution(t, wz, 0.5, 0.25) -
                      exp_so3(t * wz)) < 1e-13);

    // body angular velocity equals the Euler flow (c = 5 inertia values)
    const double I1 = 0.5, I3 = 0.25;
    const InertiaSpec I{I1, I1, I3};
    const So3Vector w1{1.0, 0.0, 1.0};
    const So3Vector rk = rk4_so3(
        [&](So3Vector w) { return euler_rhs(w, I); }, w1, 5.0, 1e-3);
    CHECK(vdist(symmetric_top_omega(5.0, w1, I1, I3), rk) <= 1e-6);

    // analytic omega agrees with a finite difference of R
    const double t0 = 1.7, h = 1e-6;
    const So3Matrix rm = symmetric_top_solution(t0 - h, w1, I1, I3);
    const So3Matrix rp = symmetric_top_solution(t0 + h, w1, I1, I3);
    const So3Matrix rt = symmetric_top_solution(t0, w1, I1, I3);
    So3Matrix deriv;
    for (int i = 0; i < 9; ++i) deriv.m[i] = (rp.m[i] - rm.m[i]) / (2 * h);
    const So3Matrix body = rt.transpose() * deriv; // hat(omega)
    const So3Vector om = symmetric_top_omega(t0, w1, I1, I3);
    CHECK(std::abs(body(2, 1) - om.x) < 1e-4);
    CHECK(std::abs(body(0, 2) - om.y) < 1e-4);
    CHECK(std::abs(body(1, 0) - om.z) < 1e-4);

    // each factor obeys the subgroup law; their product in general does not
    const So3Vector p{1.0, 0.0, I3 / I1 * 1.0};
    const So3Vector q{0.0, 0.0, (I1 - I3) / I1 * 1.0};
    for (const So3Vector& gen : {p, q})
        CHECK(max_abs(exp_so3(0.7 * gen) * exp_so3(1.1 * gen) -
                      exp_so3(1.8 * gen)) < 1e-13);
    const So3Matrix lhs = symmetric_top_solution(1.8, w1, I1, I3);
    const So3Matrix rhs = symmetric_top_solution(0.7, w1, I1, I3) *
                          symmetric_top_solution(1.1, w1, I1, I3);
    CHECK(max_abs(lhs - rhs) > 1e-3);
}

TEST_CASE("inertia and gyrostat values for the Berger family") {
    const auto [I5, g5] = berger_correspondence(5.0, 1.0);
    CHECK(I5.I1 == 0.5);
    CHECK(I5.I2 == 0.5);
    CHECK(I5.I3 == 0.25);
    CHECK(vdist(g5.kappa, {0, 0, -0.5}) == 0.0);

    const auto [I1c, g1c] = berger_correspondence(1.0, 0.0);
    CHECK(I1c.I1 == 1.0);
    CHECK(I1c.I3 == 1.0);
    CHECK(g1c.kappa.norm() == 0.0);
    CHECK_THROWS_AS(berger_correspondence(-3.5, 0.0), std::invalid_argument);
}

TEST_CASE("projected trajectories obey the rigid-body equations") {
    const double h = 5e-4;

    // torque-free for geodesics
    {
        const double c = 5.0;
        const auto p =
            FlowParams::from_angle(BergerContext::make(c), 0.0, pi / 3.0);
        const auto [I, g] = berger_correspondence(c, 0.0);
        std::vector<So3Vector> om;
        for (int k = 0; k <= 4000; ++k)
            om.push_back(double_cover_diff(
                frame_to_algebra(omega_closed_form(k * h, p), p.ctx)));
        CHECK(gyrostat_residual(om, I, g, h) <= 1e-6);
    }

    // gyrostat for charged trajectories
    {
        const double c = 5.0, q = 1.0;
        const auto p =
            FlowParams::from_angle(BergerContext::make(c), q, pi / 3.0);
        const auto [I, g] = berger_correspondence(c, q);
        std::vector<So3Vector> om;
        for (int k = 0; k <= 4000; ++k)
            om.push_back(double_cover_diff(
                frame_to_algebra(omega_closed_form(k * h, p), p.ctx)));
        CHECK(gyrostat_residual(om, I, g, h) <= 1e-6);

        // flipping the rotor sign breaks the balance
        const GyrostatSpec flipped{-1.0 * g.kappa};
        CHECK(gyrostat_residual(om, I, flipped, h) > 1e-2);
    }

    // Reeb flow projects to a steady rotation about e3
    {
        const double c = 2.0;
        const auto p =
            FlowParams::from_angle(BergerContext::make(c), 0.0, 0.0);
        std::vector<TrajectorySample> samples;
        for (int k = 0; k <= 20; ++k) {
            const double t = 0.3 * k;
            samples.push_back({t, magnetic_closed_form(t, p),
                               omega_closed_form(t, p)});
        }
        const auto proj = project_trajectory(samples, p.ctx);
        const So3Vector axis{0, 0, (c + 3.0) / 2.0};
        for (const auto& [R, om] : proj) {
            CHECK(vdist(om, axis) <= 1e-12);
            CHECK((R.apply({0, 0, 1}) - So3Vector{0, 0, 1}).norm() <= 1e-12);
            CHECK(R.orthogonality_defect() < 1e-12);
        }
    }

    // R^{-1} R' matches the projected omega
    {
        const double c = 4.0, q = 0.5;
        const auto p =
            FlowParams::from_angle(BergerContext::make(c), q, pi / 4.0);
        const double hh = 1e-5;
        for (double t : {0.8, 2.3}) {
            const So3Matrix rm = double_cover(magnetic_closed_form(t - hh, p));
            const So3Matrix rp = double_cover(magnetic_closed_form(t + hh, p));
            const So3Matrix rt = double_cover(magnetic_closed_form(t, p));
            So3Matrix d;
            for (int i = 0; i < 9; ++i)
                d.m[i] = (rp.m[i] - rm.m[i]) / (2 * hh);
            const So3Matrix body = rt.transpose() * d;
            const So3Vector om = double_cover_diff(
                frame_to_algebra(omega_closed_form(t, p), p.ctx));
            CHECK(std::abs(body(2, 1) - om.x) < 1e-5);
            CHECK(std::abs(body(0, 2) - om.y) < 1e-5);
            CHECK(std::abs(body(1, 0) - om.z) < 1e-5);
        }
    }
}

TEST_CASE("conservation along RK4 rigid-body flows") {
    const InertiaSpec I{1.0, 2.0, 3.0};
    const So3Vector w0{0.3, -0.2, 0.5};
    auto energy = [&](So3Vector w) { return 0.5 * dot(I.apply(w), w); };

    double drift = 0.0;
    for (const auto& w : rk4_so3_path(
             [&](So3Vector w) { return euler_rhs(w, I); }, w0, 10.0, 1e-3))
        drift = std::max(drift, std::abs(energy(w) - energy(w0)));
    CHECK(drift <= 1e-9);

    const GyrostatSpec g{{0.1, -0.3, 0.4}};
    auto inv = [&](So3Vector w) {
        const So3Vector m = I.apply(w) + g.kappa;
        return dot(m, m);
    };
    double drift2 = 0.0;
    for (const auto& w :
         rk4_so3_path([&](So3Vector w) { return gyrostat_rhs(w, I, g); }, w0,
                      10.0, 1e-3))
        drift2 = std::max(drift2, std::abs(inv(w) - inv(w0)));
    CHECK(drift2 <= 1e-9);
}
