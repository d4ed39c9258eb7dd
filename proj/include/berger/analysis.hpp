#pragma once

// First integrals and the scalar apparatus attached to the trajectories:
// contact angle, the lambda invariant, periodicity criteria decided by
// continued fractions, conjugate times, the closed-geodesic length bound
// and the diameter of M^3(c).

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "berger/geometry.hpp"

namespace berger {

// theta = arccos(C/|Omega|); rejects Omega = 0
double contact_angle(FrameVector omega);

// lambda = (c+3) sin^2(theta) + 4 cos^2(theta) = (c+3) - (c-1) cos^2(theta)
double engel_lambda(double theta, double c);

struct PeriodicityReport {
    enum class Verdict { Periodic, NoAtCap, Degenerate };
    Verdict verdict = Verdict::NoAtCap;
    // reduced p/q approximating the test quantity; q > 0, gcd(|p|, q) = 1
    std::optional<std::pair<std::int64_t, std::int64_t>> rational;
    std::optional<double> period;
    double quantity = 0.0;
};

// Decides whether x is (within tol) a rational with denominator <= max_den,
// by walking continued-fraction convergents.  A convergent is accepted only
// when x is also exactly rational at double precision (within a few ulps of
// the convergent, or the expansion terminates); quadratic irrationals have
// convergents that can meet a 1e-12 tolerance just below a 1e6 denominator
// cap, and the ulp-scale exactness test is what rejects them.
std::optional<std::pair<std::int64_t, std::int64_t>> rational_detect(
    double x, std::int64_t max_den, double tol);

// rationality of sqrt((c+3)-(c-1)cos^2 th) / ((c+3)(1-c)), |.| taken;
// c = 1 is the degenerate branch (round sphere, everything closes)
PeriodicityReport geodesic_period_test(double theta, double c,
                                       std::int64_t max_den = 1000000,
                                       double tol = 1e-12);

// rationality of (q + s)/(q - s), s = sqrt(q^2 - 4 q cos th + 4), for the
// c = 1 trajectory; rejects a vanishing denominator (q cos th = 1)
PeriodicityReport magnetic_period_test(double q, double theta,
                                       std::int64_t max_den = 1000000,
                                       double tol = 1e-12);

// first n positive roots of tan(t/2) = ((1-c)/8) sin^2(theta) t, one per
// branch of tan, bisected to 1e-12
std::vector<double> conjugate_times(double theta, double c, int n);
// the companion family {pi, 2 pi, ..., n pi}
std::vector<double> conjugate_pi_family(int n);

// L >= 8 pi / (2 sqrt(lambda) + (c-1) cos th); rejects a non-positive
// denominator
double length_bound(double theta, double c);

// piecewise in c: 2 pi/sqrt(c+3) for c <= 1, 4 pi/(c+3) for 1 < c < 5,
// pi/sqrt(c-1) for c >= 5; continuous at both breakpoints
double diameter(double c);

} // namespace berger
