#include "berger/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "berger/analysis.hpp"
#include "berger/flows.hpp"
#include "berger/geometry.hpp"
#include "berger/rigidbody.hpp"

namespace berger {

using std::numbers::pi;

bool SuiteResult::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.pass; });
}

namespace {

// portable deterministic uniforms
double u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * u01(rng);
}

void add(SuiteResult& s, std::string name, double dev, double tol) {
    s.checks.push_back({std::move(name), dev, tol, dev <= tol});
}
void add_flag(SuiteResult& s, std::string name, double dev, double tol,
              bool pass) {
    s.checks.push_back({std::move(name), dev, tol, pass});
}

std::vector<double> default_c_grid() { return {-2.0, 0.0, 1.0, 5.0, 10.0}; }

} // namespace

SuiteResult verify_curvature(const VerifyOptions& opt) {
    SuiteResult s{"curvature", {}};
    std::mt19937_64 rng(opt.seed);

    std::vector<double> cs;
    if (opt.c)
        cs.push_back(*opt.c);
    else
        for (int i = 0; i < 20; ++i) cs.push_back(uniform(rng, -2.999, 20.0));

    const FrameVector e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
    double dev_sec = 0.0, dev_ric = 0.0, dev_scal = 0.0, dev_tors = 0.0,
           dev_metr = 0.0, dev_conn = 0.0;
    for (double c : cs) {
        const auto ctx = BergerContext::make(c);
        dev_sec = std::max(dev_sec, std::abs(sectional(e1, e2, ctx) - c));
        dev_sec = std::max(dev_sec, std::abs(sectional(e1, e3, ctx) - 1.0));
        dev_sec = std::max(dev_sec, std::abs(sectional(e2, e3, ctx) - 1.0));
        const auto r = ricci(ctx);
        dev_ric = std::max({dev_ric, std::abs(r[0] - (c + 1.0)),
                            std::abs(r[1] - (c + 1.0)), std::abs(r[2] - 2.0)});
        dev_scal = std::max(dev_scal,
                            std::abs(scalar_curvature(ctx) - 2.0 * (c + 2.0)));

        const FrameVector basis[3] = {e1, e2, e3};
        for (const auto& x : basis)
            for (const auto& y : basis) {
                const FrameVector t = levi_civita(x, y, ctx) -
                                      levi_civita(y, x, ctx) -
                                      structure_bracket(x, y, ctx);
                dev_tors = std::max(dev_tors, t.norm());
                const FrameVector d =
                    levi_civita(x, y, ctx) -
                    (0.5 * structure_bracket(x, y, ctx) + u_tensor(x, y, ctx));
                dev_conn = std::max(dev_conn, d.norm());
                for (const auto& z : basis) {
                    const double m =
                        metric_inner(levi_civita(x, y, ctx), z) +
                        metric_inner(y, levi_civita(x, z, ctx));
                    dev_metr = std::max(dev_metr, std::abs(m));
                }
            }
    }
    add(s, "sectional (K12,K13,K23) = (c,1,1)", dev_sec, 1e-11);
    add(s, "Ricci = diag(c+1, c+1, 2)", dev_ric, 1e-11);
    add(s, "scalar = 2(c+2)", dev_scal, 1e-11);
    add(s, "torsion-free connection", dev_tors, 1e-14);
    add(s, "metric compatibility", dev_metr, 1e-14);
    add(s, "nabla = [.,.]/2 + U", dev_conn, 1e-14);
    return s;
}

SuiteResult verify_natred(const VerifyOptions& opt) {
    SuiteResult s{"natred", {}};
    const std::vector<double> cs =
        opt.c ? std::vector<double>{*opt.c} : default_c_grid();
    double dev = 0.0;
    for (double c : cs)
        dev = std::max(dev,
                       nat_red_check(BergerContext::make(c)).max_deviation);
    add(s, "U_p == 0 on p(c) basis pairs", dev, 1e-12);
    return s;
}

SuiteResult verify_contact(const VerifyOptions& opt) {
    SuiteResult s{"contact", {}};
    std::mt19937_64 rng(opt.seed);

    add(s, "invariant field F^zeta == d(eta) at c=1",
        standard_field_check(BergerContext::make(1.0)).max_deviation, 1e-12);

    std::vector<double> cs =
        opt.c ? std::vector<double>{*opt.c} : default_c_grid();
    double dev_phi2 = 0.0, dev_nabla = 0.0, dev_u = 0.0;
    for (double c : cs) {
        const auto ctx = BergerContext::make(c);
        dev_nabla = std::max(dev_nabla,
                             check_nabla_phi_xi(ctx).max_deviation);
        for (int i = 0; i < 20; ++i) {
            const FrameVector v{uniform(rng, -2, 2), uniform(rng, -2, 2),
                                uniform(rng, -2, 2)};
            const FrameVector w{uniform(rng, -2, 2), uniform(rng, -2, 2),
                                uniform(rng, -2, 2)};
            const FrameVector lhs = lorentz_phi(lorentz_phi(v));
            const FrameVector rhs = (eta(v) * reeb()) - v;
            dev_phi2 = std::max(dev_phi2, (lhs - rhs).norm());
            dev_u = std::max(
                dev_u,
                (u_tensor(v, w, ctx) - u_tensor_from_metric(v, w, ctx)).norm());
        }
    }
    add(s, "phi^2 = -Id + eta (x) xi", dev_phi2, 1e-14);
    add(s, "(nabla phi, nabla xi) identities", dev_nabla, 1e-12);
    add(s, "U table == U from metric", dev_u, 1e-13);
    return s;
}

SuiteResult verify_lorentz(const VerifyOptions& opt) {
    SuiteResult s{"lorentz", {}};
    const std::vector<double> cs =
        opt.c ? std::vector<double>{*opt.c} : default_c_grid();
    const std::vector<double> qs =
        opt.q ? std::vector<double>{*opt.q}
              : std::vector<double>{0.0, 0.5, 1.0, 2.0};
    const std::vector<double> thetas =
        opt.theta ? std::vector<double>{*opt.theta}
                  : std::vector<double>{0.0, pi / 6.0, pi / 3.0, pi / 2.0};

    std::vector<double> grid(100);
    for (int i = 0; i < 100; ++i) grid[i] = 20.0 * i / 99.0;

    double dev_an = 0.0, dev_fd = 0.0;
    for (double c : cs)
        for (double q : qs)
            for (double th : thetas) {
                const auto p =
                    FlowParams::from_angle(BergerContext::make(c), q, th);
                dev_an = std::max(dev_an,
                                  max_norm(lorentz_residual_analytic(p, grid)));

                // finite-difference residual on the closed form, h = 1e-4
                const double h = 1e-4;
                std::vector<TrajectorySample> samp;
                for (int i = 0; i <= 200; ++i) {
                    const double t = i * h;
                    samp.push_back({t, GroupElement::identity(),
                                    omega_closed_form(t, p)});
                }
                dev_fd = std::max(
                    dev_fd, max_norm(lorentz_residual_fd(samp, p.ctx, q)));
            }
    add(s, "analytic Lorentz residual", dev_an, 1e-12);
    add(s, "central-difference residual (closed form, h=1e-4)", dev_fd, 5e-7);
    return s;
}

SuiteResult verify_oracle(const VerifyOptions& opt) {
    SuiteResult s{"oracle", {}};
    std::mt19937_64 rng(opt.seed);

    // closed form vs RK4 at t = 10, step 1e-3
    double dev_rk = 0.0;
    const int tuples = (opt.c && opt.q && opt.theta) ? 1 : 50;
    for (int i = 0; i < tuples; ++i) {
        const double c = opt.c ? *opt.c : uniform(rng, -2.5, 10.0);
        const double q = opt.q ? *opt.q : uniform(rng, -2.0, 2.0);
        const double th = opt.theta ? *opt.theta : uniform(rng, 0.0, pi);
        const auto p = FlowParams::from_angle(BergerContext::make(c), q, th);
        const auto traj = rk4_group_integrate(p, 10.0, 1e-3, 10000);
        const auto& last = traj.back();
        dev_rk = std::max(dev_rk,
                          group_distance_su2(magnetic_closed_form(last.t, p),
                                             last.gamma));
    }
    add(s, "closed form vs RK4 (t=10, h=1e-3)", dev_rk, 1e-6);

    // fourth-order convergence: halving the step cuts the endpoint error ~16x
    {
        const auto p = FlowParams::from_angle(BergerContext::make(5.0), 0.7,
                                              pi / 3.0);
        auto endpoint_err = [&](double h) {
            const auto traj = rk4_group_integrate(p, 5.0, h, 1 << 30);
            return component_distance(magnetic_closed_form(5.0, p),
                                      traj.back().gamma);
        };
        const double e1 = endpoint_err(0.02);
        const double e2 = endpoint_err(0.01);
        const double ratio = e1 / e2;
        add_flag(s, "RK4 order check (error ratio at h, h/2; expect ~16)",
                 ratio, 16.0, ratio > 10.0 && ratio < 24.0);
    }

    // q = 0 reduction, magnetic == geodesic
    {
        double dev = 0.0;
        for (double c : default_c_grid())
            for (double th : {0.0, pi / 6, pi / 3, pi / 2}) {
                const auto p =
                    FlowParams::from_angle(BergerContext::make(c), 0.0, th);
                for (int i = 0; i <= 40; ++i) {
                    const double t = 10.0 * i / 40.0;
                    dev = std::max(
                        dev, component_distance(
                                 magnetic_closed_form(t, p),
                                 geodesic_closed_form(t, p.omega0, p.ctx)));
                }
            }
        add(s, "q=0 magnetic == geodesic", dev, 1e-12);
    }

    // c = 1: trajectory == exp(tX) exp(t(q/2) xi) with X = Omega0 - (q/2) e3
    {
        const auto ctx = BergerContext::make(1.0);
        double dev = 0.0;
        for (double q : {0.5, 1.0, 2.0})
            for (double th : {0.0, pi / 6, pi / 3, pi / 2}) {
                const auto p = FlowParams::from_angle(ctx, q, th);
                const AlgebraVector x = frame_to_algebra(
                    p.omega0 - FrameVector{0, 0, q / 2.0}, ctx);
                const AlgebraVector reeb_half =
                    frame_to_algebra({0, 0, q / 2.0}, ctx);
                for (int i = 0; i <= 40; ++i) {
                    const double t = 10.0 * i / 40.0;
                    const GroupElement ref =
                        group_mul(exp_group(t * x), exp_group(t * reeb_half))
                            .normalized();
                    dev = std::max(dev, component_distance(
                                            magnetic_closed_form(t, p), ref));
                }
            }
        add(s, "c=1 trajectory == exp(tX) exp(t(q/2) xi)", dev, 1e-12);
    }

    // fibration-split factorization agrees with the direct form
    {
        double dev = 0.0;
        for (int i = 0; i < 20; ++i) {
            const double c = uniform(rng, -2.5, 10.0);
            const double q = uniform(rng, -2.0, 2.0);
            const double th = uniform(rng, 0.0, pi);
            const auto p =
                FlowParams::from_angle(BergerContext::make(c), q, th);
            for (int k = 0; k <= 40; ++k) {
                const double t = 10.0 * k / 40.0;
                dev = std::max(dev,
                               component_distance(
                                   magnetic_closed_form(t, p),
                                   magnetic_fibration_form(t, p)));
            }
        }
        // the worked pair from the examples
        const auto p = FlowParams::from_angle(BergerContext::make(5.0), 1.0,
                                              pi / 4.0);
        for (int k = 0; k <= 80; ++k) {
            const double t = 8.0 * k / 80.0;
            dev = std::max(dev, component_distance(
                                    magnetic_closed_form(t, p),
                                    magnetic_fibration_form(t, p)));
        }
        add(s, "fibration-split form == direct form", dev, 1e-10);
    }

    // first integrals: |Omega| and C constant
    {
        double dev_cf = 0.0, dev_rk4 = 0.0;
        for (int i = 0; i < 10; ++i) {
            const double c = uniform(rng, -2.5, 10.0);
            const double q = uniform(rng, -2.0, 2.0);
            const double th = uniform(rng, 0.0, pi);
            const auto p =
                FlowParams::from_angle(BergerContext::make(c), q, th);
            for (int k = 0; k <= 100; ++k) {
                const double t = 20.0 * k / 100.0;
                const FrameVector om = omega_closed_form(t, p);
                dev_cf = std::max(dev_cf, std::abs(om.norm() - 1.0));
                dev_cf = std::max(dev_cf, std::abs(om.C - p.omega0.C));
            }
        }
        const auto p = FlowParams::from_angle(BergerContext::make(5.0), 0.7,
                                              pi / 3.0);
        for (const auto& smp : rk4_group_integrate(p, 10.0, 1e-3, 100)) {
            dev_rk4 = std::max(dev_rk4, std::abs(smp.omega.norm() - 1.0));
            dev_rk4 = std::max(dev_rk4, std::abs(smp.omega.C - p.omega0.C));
        }
        add(s, "first integrals, closed form", dev_cf, 1e-13);
        add(s, "first integrals, RK4 drift (h=1e-3, t<=10)", dev_rk4, 1e-8);
    }

    // Reeb flow closes at t = 8 pi/(c+3)
    {
        double dev = 0.0;
        for (double c : {-2.0, 1.0, 5.0}) {
            const auto p =
                FlowParams::from_angle(BergerContext::make(c), 0.0, 0.0);
            const double T = 8.0 * pi / (c + 3.0);
            dev = std::max(dev,
                           component_distance(magnetic_closed_form(T, p),
                                              GroupElement::identity()));
        }
        add(s, "Reeb flow closes at 8 pi/(c+3)", dev, 1e-10);
    }

    return s;
}

SuiteResult verify_gyrostat(const VerifyOptions& opt) {
    SuiteResult s{"gyrostat", {}};
    std::mt19937_64 rng(opt.seed);

    // projected trajectories obey mu' + omega x (mu + kappa) = 0.
    // The order-2 difference floor is (h^2/6) q~^3 |mu_perp|, so the sampled
    // domain keeps q~ moderate; see the defaults table in the README.
    {
        double dev = 0.0;
        const double h = 1e-3;
        for (int i = 0; i < 20; ++i) {
            const double c = opt.c ? *opt.c : uniform(rng, 0.0, 4.0);
            const double q = opt.q ? *opt.q : uniform(rng, -0.35, 0.35);
            const double th =
                opt.theta ? *opt.theta : uniform(rng, 0.1, pi - 0.1);
            const auto p =
                FlowParams::from_angle(BergerContext::make(c), q, th);
            const auto [I, g] = berger_correspondence(c, q);
            std::vector<So3Vector> om;
            om.reserve(2001);
            for (int k = 0; k <= 2000; ++k)
                om.push_back(double_cover_diff(frame_to_algebra(
                    omega_closed_form(k * h, p), p.ctx)));
            dev = std::max(dev, gyrostat_residual(om, I, g, h));
        }
        add(s, "projected flow obeys the gyrostat equation", dev, 1e-6);
    }

    // torque-free case (q = 0) reduces to the Euler equations
    {
        const double c = 5.0;
        const auto p =
            FlowParams::from_angle(BergerContext::make(c), 0.0, pi / 3.0);
        const auto [I, g0] = berger_correspondence(c, 0.0);
        const double h = 1e-3;
        std::vector<So3Vector> om;
        for (int k = 0; k <= 2000; ++k)
            om.push_back(double_cover_diff(
                frame_to_algebra(omega_closed_form(k * h, p), p.ctx)));
        add(s, "q=0 projection satisfies the Euler equations",
            gyrostat_residual(om, I, g0, h), 1e-6);
    }

    // symmetric-top closed form vs RK4 on the Euler equations (c = 5 values)
    {
        const double I1 = 0.5, I3 = 0.25;
        const InertiaSpec I{I1, I1, I3};
        const So3Vector w0{1.0, 0.0, 1.0};
        const So3Vector rk = rk4_so3(
            [&](So3Vector w) { return euler_rhs(w, I); }, w0, 5.0, 1e-3);
        const So3Vector cf = symmetric_top_omega(5.0, w0, I1, I3);
        add(s, "symmetric top closed form vs RK4 (t=5)", (rk - cf).norm(),
            1e-6);
    }

    // conservation along RK4 flows
    {
        const InertiaSpec I{1.0, 2.0, 3.0};
        const So3Vector w0{0.3, -0.2, 0.5};
        const auto path = rk4_so3_path(
            [&](So3Vector w) { return euler_rhs(w, I); }, w0, 10.0, 1e-3);
        auto energy = [&](So3Vector w) { return 0.5 * dot(I.apply(w), w); };
        double drift = 0.0;
        for (const auto& w : path)
            drift = std::max(drift, std::abs(energy(w) - energy(w0)));
        add(s, "Euler flow energy drift (h=1e-3, t=10)", drift, 1e-9);

        const GyrostatSpec g{{0.1, -0.2, 0.4}};
        const auto path2 = rk4_so3_path(
            [&](So3Vector w) { return gyrostat_rhs(w, I, g); }, w0, 10.0,
            1e-3);
        auto inv = [&](So3Vector w) {
            const So3Vector m = I.apply(w) + g.kappa;
            return dot(m, m);
        };
        double drift2 = 0.0;
        for (const auto& w : path2)
            drift2 = std::max(drift2, std::abs(inv(w) - inv(w0)));
        add(s, "gyrostat |mu+kappa|^2 drift (h=1e-3, t=10)", drift2, 1e-9);
    }

    return s;
}

SuiteResult verify_analysis(const VerifyOptions& opt) {
    SuiteResult s{"analysis", {}};
    std::mt19937_64 rng(opt.seed);

    {
        double dev = std::abs(diameter(1.0) - pi);
        dev = std::max(dev, std::abs(diameter(5.0) - pi / 2.0));
        dev = std::max(dev, std::abs(diameter(-2.0) - 2.0 * pi));
        add(s, "diameter at c = 1, 5, -2", dev, 1e-14);

        const double pi_ = pi;
        double cont = std::abs(2.0 * pi_ / std::sqrt(4.0) - 4.0 * pi_ / 4.0);
        cont = std::max(cont,
                        std::abs(4.0 * pi_ / 8.0 - pi_ / std::sqrt(4.0)));
        add(s, "diameter branches agree at the breakpoints", cont, 1e-14);
    }

    {
        double dev = 0.0;
        for (int i = 0; i < 25; ++i) {
            const double c = uniform(rng, -2.9, 20.0);
            const double th = uniform(rng, 0.0, pi);
            const double cs = std::cos(th), sn = std::sin(th);
            const double alt = (c + 3.0) * sn * sn + 4.0 * cs * cs;
            dev = std::max(dev, std::abs(engel_lambda(th, c) - alt));
            dev = std::max(dev, std::abs(engel_lambda(0.0, c) - 4.0));
            dev = std::max(dev,
                           std::abs(engel_lambda(pi / 2.0, c) - (c + 3.0)));
        }
        add(s, "lambda: both forms, theta = 0 and pi/2 values", dev, 1e-13);
    }

    {
        double dev = 0.0;
        bool increasing = true;
        for (const auto& [th, c] : std::vector<std::pair<double, double>>{
                 {pi / 2, -2.0}, {pi / 3, 5.0}, {pi / 2, 0.5}, {1.0, 12.0}}) {
            const auto roots = conjugate_times(th, c, 6);
            const double m =
                (1.0 - c) / 8.0 * std::sin(th) * std::sin(th);
            for (size_t i = 0; i < roots.size(); ++i) {
                dev = std::max(dev, std::abs(std::tan(roots[i] / 2.0) -
                                             m * roots[i]));
                if (i > 0 && roots[i] <= roots[i - 1]) increasing = false;
            }
        }
        add(s, "conjugate-time roots satisfy their equation", dev, 1e-10);
        add_flag(s, "conjugate-time roots strictly increasing", 0.0, 0.0,
                 increasing);
    }

    {
        // planted rationals are recovered exactly
        int recovered = 0;
        const int total = 100;
        for (int i = 0; i < total; ++i) {
            std::int64_t den =
                1 + static_cast<std::int64_t>(u01(rng) * 999999.0);
            std::int64_t num = 1 + static_cast<std::int64_t>(
                                       u01(rng) * std::min<double>(
                                                      10.0 * den, 9.0e6));
            const std::int64_t g = std::gcd(num, den);
            num /= g;
            den /= g;
            const auto hit = rational_detect(
                static_cast<double>(num) / static_cast<double>(den), 1000000,
                1e-12);
            if (hit && hit->first == num && hit->second == den) ++recovered;
        }
        add_flag(s, "rational detector recovers 100 planted rationals",
                 static_cast<double>(total - recovered), 0.0,
                 recovered == total);

        // quadratic irrationals are rejected at the denominator cap
        int rejected = 0, planted = 0;
        for (double d : {2.0, 3.0, 5.0, 7.0, 13.0})
            for (double r : {1.0, 0.5, 2.0 / 3.0, 3.0})
                for (double sh : {0.0, 1.0, -2.0 / 7.0}) {
                    ++planted;
                    if (!rational_detect(r * std::sqrt(d) + sh, 1000000,
                                         1e-12))
                        ++rejected;
                }
        add_flag(s, "rational detector rejects planted quadratic irrationals",
                 static_cast<double>(planted - rejected), 0.0,
                 rejected == planted);
    }

    {
        // spot values of the periodicity tests
        const auto g1 = geodesic_period_test(pi / 2.0, -2.0);
        const bool g1_ok =
            g1.verdict == PeriodicityReport::Verdict::Periodic &&
            g1.rational && g1.rational->first == 1 && g1.rational->second == 3;
        add_flag(s, "geodesic periodicity: c=-2, theta=pi/2 -> 1/3", 0.0, 0.0,
                 g1_ok);
        const auto g2 = geodesic_period_test(pi / 2.0, 0.0);
        add_flag(s, "geodesic periodicity: c=0, theta=pi/2 -> irrational",
                 0.0, 0.0,
                 g2.verdict == PeriodicityReport::Verdict::NoAtCap);
        const auto m1 = magnetic_period_test(4.0, 0.0);
        const bool m1_ok =
            m1.verdict == PeriodicityReport::Verdict::Periodic &&
            m1.rational && m1.rational->first == 3 && m1.rational->second == 1;
        add_flag(s, "magnetic periodicity: q=4, theta=0 -> 3/1", 0.0, 0.0,
                 m1_ok);
        const auto m2 = magnetic_period_test(3.0, pi / 2.0);
        add_flag(s, "magnetic periodicity: q=3, theta=pi/2 -> irrational",
                 0.0, 0.0,
                 m2.verdict == PeriodicityReport::Verdict::NoAtCap);
    }

    return s;
}

std::vector<SuiteResult> verify_all(const VerifyOptions& opt) {
    return {verify_curvature(opt), verify_natred(opt),  verify_contact(opt),
            verify_lorentz(opt),   verify_oracle(opt),  verify_gyrostat(opt),
            verify_analysis(opt)};
}

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{
        "curvature", "natred",   "contact", "lorentz",
        "oracle",    "gyrostat", "analysis", "all"};
    return names;
}

std::vector<SuiteResult> run_suites(const std::string& name,
                                    const VerifyOptions& opt) {
    if (name == "all") return verify_all(opt);
    if (name == "curvature") return {verify_curvature(opt)};
    if (name == "natred") return {verify_natred(opt)};
    if (name == "contact") return {verify_contact(opt)};
    if (name == "lorentz") return {verify_lorentz(opt)};
    if (name == "oracle") return {verify_oracle(opt)};
    if (name == "gyrostat") return {verify_gyrostat(opt)};
    if (name == "analysis") return {verify_analysis(opt)};
    throw std::invalid_argument("unknown suite: " + name);
}

} // namespace berger
