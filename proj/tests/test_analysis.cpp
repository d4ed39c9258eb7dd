#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "berger/analysis.hpp"
#include "berger/flows.hpp"
#include "test_support.hpp"

using namespace berger;
using namespace testsup;
using std::numbers::pi;

TEST_CASE("contact angle") {
    CHECK(contact_angle({0, 0, 1}) == 0.0);
    CHECK(contact_angle({1, 0, 0}) == doctest::Approx(pi / 2).epsilon(1e-15));
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(contact_angle({0, s, s}) == doctest::Approx(pi / 4).epsilon(1e-14));
    CHECK_THROWS_AS(contact_angle({0, 0, 0}), std::invalid_argument);
}

TEST_CASE("lambda invariant") {
    std::mt19937_64 rng(101);
    for (int n = 0; n < 50; ++n) {
        const double c = uniform(rng, -2.99, 20.0);
        const double th = uniform(rng, 0, pi);
        const double sn = std::sin(th), cs = std::cos(th);
        CHECK(std::abs(engel_lambda(th, c) -
                       ((c + 3.0) * sn * sn + 4.0 * cs * cs)) <= 1e-13);
        CHECK(engel_lambda(th, 1.0) == doctest::Approx(4.0).epsilon(1e-15));
        // lower bound keeping the length bound meaningful
        CHECK(engel_lambda(th, c) >= std::min(4.0, c + 3.0) - 1e-12);
    }
    CHECK(engel_lambda(pi / 2, 7.0) == doctest::Approx(10.0));
    CHECK(engel_lambda(0.0, 7.0) == doctest::Approx(4.0));
}

TEST_CASE("rational detector: recovery and rejection") {
    // spot values
    auto hit = rational_detect(22.0 / 7.0, 1000000, 1e-12);
    REQUIRE(hit.has_value());
    CHECK(hit->first == 22);
    CHECK(hit->second == 7);

    hit = rational_detect(-3.0 / 7.0, 1000000, 1e-12);
    REQUIRE(hit.has_value());
    CHECK(hit->first == -3);
    CHECK(hit->second == 7);

    hit = rational_detect(0.0, 1000000, 1e-12);
    REQUIRE(hit.has_value());
    CHECK(hit->first == 0);
    CHECK(hit->second == 1);

    // planted reduced rationals are recovered exactly
    std::mt19937_64 rng(103);
    for (int n = 0; n < 200; ++n) {
        std::int64_t den = 1 + static_cast<std::int64_t>(u01(rng) * 999999.0);
        std::int64_t num = 1 + static_cast<std::int64_t>(
                                   u01(rng) *
                                   std::min<double>(10.0 * den, 9.0e6));
        const std::int64_t g = std::gcd(num, den);
        num /= g;
        den /= g;
        const auto h = rational_detect(static_cast<double>(num) / den,
                                       1000000, 1e-12);
        REQUIRE(h.has_value());
        CHECK(h->first == num);
        CHECK(h->second == den);
    }

    // quadratic irrationals must be rejected at the cap, including the
    // near-cap convergent of 1/sqrt(3) (564719/978122, error 3.8e-13)
    CHECK_FALSE(rational_detect(std::sqrt(3.0) / 3.0, 1000000, 1e-12));
    CHECK_FALSE(rational_detect(std::sqrt(2.0), 1000000, 1e-12));
    CHECK_FALSE(
        rational_detect((1.0 + std::sqrt(5.0)) / 2.0, 1000000, 1e-12));
    CHECK_FALSE(rational_detect(
        (3.0 + std::sqrt(13.0)) / (3.0 - std::sqrt(13.0)), 1000000, 1e-12));
}

TEST_CASE("geodesic periodicity criterion") {
    const auto deg = geodesic_period_test(0.7, 1.0);
    CHECK(deg.verdict == PeriodicityReport::Verdict::Degenerate);
    REQUIRE(deg.period.has_value());
    CHECK(*deg.period == doctest::Approx(2 * pi));

    // c = -2, theta = pi/2: quantity sqrt(1)/(1*3) = 1/3
    const auto r1 = geodesic_period_test(pi / 2, -2.0);
    CHECK(r1.verdict == PeriodicityReport::Verdict::Periodic);
    REQUIRE(r1.rational.has_value());
    CHECK(r1.rational->first == 1);
    CHECK(r1.rational->second == 3);

    // c = 0, theta = pi/2: quantity sqrt(3)/3, irrational
    const auto r2 = geodesic_period_test(pi / 2, 0.0);
    CHECK(r2.verdict == PeriodicityReport::Verdict::NoAtCap);
    CHECK_FALSE(r2.rational.has_value());
}

TEST_CASE("magnetic periodicity criterion") {
    // q = 0: ratio -1, great circles with period 2 pi
    const auto r0 = magnetic_period_test(0.0, 1.1);
    CHECK(r0.verdict == PeriodicityReport::Verdict::Periodic);
    REQUIRE(r0.rational.has_value());
    CHECK(r0.rational->first == -1);
    CHECK(r0.rational->second == 1);
    REQUIRE(r0.period.has_value());
    CHECK(*r0.period == doctest::Approx(2 * pi).epsilon(1e-12));

    // theta = 0, q = 4: ratio (4+2)/(4-2) = 3
    const auto r1 = magnetic_period_test(4.0, 0.0);
    CHECK(r1.verdict == PeriodicityReport::Verdict::Periodic);
    REQUIRE(r1.rational.has_value());
    CHECK(r1.rational->first == 3);
    CHECK(r1.rational->second == 1);
    REQUIRE(r1.period.has_value());
    CHECK(*r1.period == doctest::Approx(2 * pi).epsilon(1e-12));

    // theta = pi/2, q = 3: sqrt(13) makes the ratio irrational
    const auto r2 = magnetic_period_test(3.0, pi / 2);
    CHECK(r2.verdict == PeriodicityReport::Verdict::NoAtCap);

    // q cos(theta) = 1 collapses the denominator
    CHECK_THROWS_AS(magnetic_period_test(1.0, 0.0), std::domain_error);
}

TEST_CASE("reported magnetic periods close the trajectory") {
    const auto c1 = BergerContext::make(1.0);
    // tuples engineered so s = sqrt(q^2 - 4 q cos th + 4) makes the ratio
    // rational: (q, cos th, ratio) = (3, 1, 2), (1, 1/4, -3), (4, 1, 3)
    const std::vector<std::pair<double, double>> tuples{
        {3.0, 0.0}, {1.0, std::acos(0.25)}, {4.0, 0.0}};
    for (const auto& [q, th] : tuples) {
        const auto rep = magnetic_period_test(q, th);
        REQUIRE(rep.verdict == PeriodicityReport::Verdict::Periodic);
        REQUIRE(rep.period.has_value());
        const auto p = FlowParams::from_angle(c1, q, th);
        CHECK(component_distance(magnetic_closed_form(*rep.period, p),
                                 GroupElement::identity()) <= 1e-10);
        // and the reported period is not trivially zero
        CHECK(*rep.period > 0.1);
    }
}

TEST_CASE("detector postconditions: reduced fraction within tolerance") {
    std::mt19937_64 rng(107);
    for (int n = 0; n < 100; ++n) {
        const double x = uniform(rng, -20.0, 20.0);
        const auto hit = rational_detect(x, 1000000, 1e-12);
        if (!hit) continue;
        CHECK(hit->second > 0);
        CHECK(std::gcd(std::abs(hit->first), hit->second) == 1);
        CHECK(std::abs(x - static_cast<double>(hit->first) / hit->second) <=
              1e-12);
    }
    // the quantities of the periodicity tests inherit the postconditions
    const auto rep = geodesic_period_test(testsup::uniform(rng, 0.0, 3.0),
                                          -2.0);
    if (rep.rational)
        CHECK(std::abs(rep.quantity -
                       static_cast<double>(rep.rational->first) /
                           rep.rational->second) <= 1e-12);
}

TEST_CASE("conjugate times") {
    // roots satisfy their equation, increase, and sit one per tan branch
    for (const auto& [th, c] : std::vector<std::pair<double, double>>{
             {pi / 2, -2.0}, {pi / 3, 5.0}, {1.2, 15.0}, {pi / 2, 0.2}}) {
        const auto roots = conjugate_times(th, c, 6);
        REQUIRE(roots.size() == 6);
        const double m = (1.0 - c) / 8.0 * std::sin(th) * std::sin(th);
        for (size_t k = 0; k < roots.size(); ++k) {
            CHECK(std::abs(std::tan(roots[k] / 2.0) - m * roots[k]) <= 1e-10);
            if (k > 0) CHECK(roots[k] > roots[k - 1]);
            const double lo = m > 0 ? 2.0 * (k + 1) * pi
                                    : (2.0 * (k + 1) - 1.0) * pi;
            const double hi = m > 0 ? (2.0 * (k + 1) + 1.0) * pi
                                    : 2.0 * (k + 1) * pi;
            CHECK(roots[k] > lo);
            CHECK(roots[k] < hi);
        }
    }

    // degenerate right side: roots at 2 pi N
    for (const auto& roots :
         {conjugate_times(0.7, 1.0, 4), conjugate_times(0.0, 9.0, 4)})
        for (size_t k = 0; k < roots.size(); ++k)
            CHECK(roots[k] == doctest::Approx(2.0 * pi * (k + 1)));

    // c = -3, theta = pi/2 reduces to tan(u) = u in u = t/2
    const auto r = conjugate_times(pi / 2, -3.0, 1);
    CHECK(r[0] == doctest::Approx(2.0 * 4.493409457909064).epsilon(1e-12));

    // brute-force sign-change oracle at resolution 1e-6
    {
        const double th = pi / 3, c = 6.0;
        const double m = (1.0 - c) / 8.0 * std::sin(th) * std::sin(th);
        const auto roots = conjugate_times(th, c, 1);
        auto f = [&](double t) { return std::tan(t / 2.0) - m * t; };
        double found = 0.0;
        for (double t = pi + 1e-6; t < 2 * pi; t += 1e-6)
            if (f(t) <= 0.0 && f(t + 1e-6) > 0.0) {
                found = t;
                break;
            }
        REQUIRE(found > 0.0);
        CHECK(std::abs(roots[0] - found) <= 2e-6);
    }

    const auto fam = conjugate_pi_family(3);
    CHECK(fam == std::vector<double>{pi, 2 * pi, 3 * pi});
    CHECK_THROWS_AS(conjugate_times(0.5, 2.0, 0), std::invalid_argument);
}

TEST_CASE("length bound") {
    CHECK(length_bound(0.9, 1.0) == doctest::Approx(2 * pi).epsilon(1e-14));
    CHECK(length_bound(pi / 2, 1.0) == doctest::Approx(2 * pi).epsilon(1e-14));
    CHECK(length_bound(0.0, 5.0) == doctest::Approx(pi).epsilon(1e-13));
    for (double c : {2.0, 9.0})
        CHECK(length_bound(pi / 2, c) ==
              doctest::Approx(8 * pi / (2 * std::sqrt(c + 3.0)))
                  .epsilon(1e-13));
    // reversed Reeb direction at large c has no positive bound
    CHECK_THROWS_AS(length_bound(pi, 6.0), std::domain_error);
}

TEST_CASE("diameter") {
    CHECK(std::abs(diameter(1.0) - pi) <= 1e-14);
    CHECK(std::abs(diameter(5.0) - pi / 2) <= 1e-14);
    CHECK(std::abs(diameter(-2.0) - 2 * pi) <= 1e-14);
    // the adjacent branch formulas agree at the breakpoints
    CHECK(std::abs(2 * pi / std::sqrt(4.0) - 4 * pi / 4.0) <= 1e-14);
    CHECK(std::abs(4 * pi / 8.0 - pi / std::sqrt(4.0)) <= 1e-14);
    CHECK(std::abs(diameter(1.0 - 1e-13) - diameter(1.0 + 1e-13)) <= 1e-12);
    CHECK(std::abs(diameter(5.0 - 1e-13) - diameter(5.0 + 1e-13)) <= 1e-12);
    CHECK_THROWS_AS(diameter(-3.0), std::invalid_argument);
}
