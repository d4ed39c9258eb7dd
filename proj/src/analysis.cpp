#include "berger/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace berger {

using std::numbers::pi;

double contact_angle(FrameVector omega) {
    const double n = omega.norm();
    if (n == 0.0) throw std::invalid_argument("contact_angle: zero vector");
    return std::acos(std::clamp(omega.C / n, -1.0, 1.0));
}

double engel_lambda(double theta, double c) {
    const double cs = std::cos(theta);
    return (c + 3.0) - (c - 1.0) * cs * cs;
}

std::optional<std::pair<std::int64_t, std::int64_t>> rational_detect(
    double x, std::int64_t max_den, double tol) {
    if (!std::isfinite(x)) return std::nullopt;
    const double y = std::abs(x);
    const std::int64_t sign = x < 0.0 ? -1 : 1;

    // A convergent counts as "the" rational value of x only when x sits a
    // few ulps from it: true rationals stored in binary64 land within half
    // an ulp, while convergents of a quadratic irrational stay at least
    // 1/((a+2) q^2) away, orders of magnitude above ulp scale for q below
    // the cap.  Without this, e.g. 1/sqrt(3) would be accepted through its
    // convergent 564719/978122 (error 3.8e-13 < 1e-12).
    const double exactness = 16.0 * 2.220446049250313e-16 * std::max(1.0, y);
    constexpr int kMaxTerms = 64;

    double z = y;
    std::int64_t p_prev = 0, q_prev = 1; // k-2
    std::int64_t p_cur = 1, q_cur = 0;   // k-1 (before first term)

    for (int k = 0; k < kMaxTerms; ++k) {
        const double fa = std::floor(z);
        if (fa > 9.2e18) break;
        const std::int64_t a = static_cast<std::int64_t>(fa);

        // p_k = a p_{k-1} + p_{k-2}, overflow-guarded
        const double p_next_d =
            static_cast<double>(a) * static_cast<double>(p_cur) +
            static_cast<double>(p_prev);
        const double q_next_d =
            static_cast<double>(a) * static_cast<double>(q_cur) +
            static_cast<double>(q_prev);
        if (p_next_d > 9.2e18 || q_next_d > 9.2e18) break;
        const std::int64_t p_next = a * p_cur + p_prev;
        const std::int64_t q_next = a * q_cur + q_prev;

        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;

        if (q_cur > max_den) return std::nullopt;

        const double frac = z - fa;
        const bool terminated = frac < 1e-15 * std::max(1.0, z);

        const double err =
            std::abs(y - static_cast<double>(p_cur) /
                             static_cast<double>(q_cur));
        if (err <= tol && (terminated || err <= exactness))
            return std::make_pair(sign * p_cur, q_cur);
        if (terminated) return std::nullopt;
        z = 1.0 / frac;
    }
    return std::nullopt;
}

PeriodicityReport geodesic_period_test(double theta, double c,
                                       std::int64_t max_den, double tol) {
    PeriodicityReport rep;
    if (std::abs(c - 1.0) <= 1e-12) {
        // round sphere: every geodesic closes with length 2 pi
        rep.verdict = PeriodicityReport::Verdict::Degenerate;
        rep.period = 2.0 * pi;
        rep.quantity = std::numeric_limits<double>::quiet_NaN();
        return rep;
    }
    const double lam = engel_lambda(theta, c);
    rep.quantity = std::sqrt(lam) / ((c + 3.0) * (1.0 - c));
    rep.rational = rational_detect(rep.quantity, max_den, tol);
    rep.verdict = rep.rational ? PeriodicityReport::Verdict::Periodic
                               : PeriodicityReport::Verdict::NoAtCap;
    return rep;
}

PeriodicityReport magnetic_period_test(double q, double theta,
                                       std::int64_t max_den, double tol) {
    PeriodicityReport rep;
    const double cs = std::cos(theta);
    const double s = std::sqrt(q * q - 4.0 * q * cs + 4.0);
    const double den = q - s;
    if (std::abs(den) <= 1e-14 * std::max(1.0, std::abs(q)))
        throw std::domain_error(
            "magnetic_period_test: vanishing denominator (q cos theta = 1)");
    rep.quantity = (q + s) / den;
    rep.rational = rational_detect(rep.quantity, max_den, tol);
    if (!rep.rational) {
        rep.verdict = PeriodicityReport::Verdict::NoAtCap;
        return rep;
    }
    rep.verdict = PeriodicityReport::Verdict::Periodic;

    // Minimal period from the two factor rates: the trajectory is
    // exp(t X) exp(t (q/2) e3) with |X|-rate s/2 and fiber rate |q|/2; both
    // phases must reach a multiple of pi with matching parity.
    const double rate_g = s / 2.0;
    if (std::abs(q) < 1e-14) {
        rep.period = 2.0 * pi / rate_g;
        return rep;
    }
    // s/|q| = m/n in lowest terms, from the detected rational of the ratio
    const auto [pp, qq] = *rep.rational;
    std::int64_t m = std::abs(pp - qq), n = std::abs(pp + qq);
    if (m == 0) {
        // s = 0: the non-fiber factor is constant, only the fiber rotates
        rep.period = 2.0 * pi / (std::abs(q) / 2.0);
        return rep;
    }
    const std::int64_t g = std::gcd(m, n);
    m /= g;
    n /= g;
    const double unit = pi * static_cast<double>(n) / (std::abs(q) / 2.0);
    rep.period = ((m + n) % 2 == 0) ? unit : 2.0 * unit;
    return rep;
}

std::vector<double> conjugate_times(double theta, double c, int n) {
    if (n < 1) throw std::invalid_argument("conjugate_times: n must be >= 1");
    const double st = std::sin(theta);
    const double m = (1.0 - c) / 8.0 * st * st;
    std::vector<double> roots;
    roots.reserve(static_cast<size_t>(n));

    if (std::abs(m) < 1e-15) {
        for (int k = 1; k <= n; ++k) roots.push_back(2.0 * pi * k);
        return roots;
    }

    auto f = [&](double t) { return std::tan(t / 2.0) - m * t; };
    for (int k = 1; k <= n; ++k) {
        // one root per branch: (2k pi, (2k+1) pi) for m > 0,
        // ((2k-1) pi, 2k pi) for m < 0
        double lo, hi;
        if (m > 0.0) {
            lo = 2.0 * k * pi;
            hi = (2.0 * k + 1.0) * pi;
            hi -= 1e-12 * hi;
            while (!(f(hi) > 0.0)) hi -= 1e-12 * hi;
        } else {
            lo = (2.0 * k - 1.0) * pi;
            hi = 2.0 * k * pi;
            lo += 1e-12 * lo;
            while (!(f(lo) < 0.0)) lo += 1e-12 * lo;
        }
        // f is strictly increasing inside each branch (m < 1/2 for c > -3),
        // so plain bisection to double exhaustion is safe
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if (f(mid) > 0.0)
                hi = mid;
            else
                lo = mid;
        }
        roots.push_back(0.5 * (lo + hi));
    }
    return roots;
}

std::vector<double> conjugate_pi_family(int n) {
    if (n < 1) throw std::invalid_argument("conjugate_pi_family: n >= 1");
    std::vector<double> v;
    v.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) v.push_back(pi * k);
    return v;
}

double length_bound(double theta, double c) {
    const double den =
        2.0 * std::sqrt(engel_lambda(theta, c)) + (c - 1.0) * std::cos(theta);
    if (!(den > 0.0))
        throw std::domain_error("length_bound: non-positive denominator");
    return 8.0 * pi / den;
}

double diameter(double c) {
    if (!(c > -3.0)) throw std::invalid_argument("c must exceed -3");
    if (c <= 1.0) return 2.0 * pi / std::sqrt(c + 3.0);
    if (c < 5.0) return 4.0 * pi / (c + 3.0);
    return pi / std::sqrt(c - 1.0);
}

} // namespace berger
