// Command-line front end: trajectory generation, verification suites,
// analysis queries, parameter sweeps, and manifest-driven reruns.
//
// Exit codes: 0 success, 1 verification/tuple failure, 2 usage error.
// Angles are radians throughout.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "berger/analysis.hpp"
#include "berger/flows.hpp"
#include "berger/geometry.hpp"
#include "berger/manifest.hpp"
#include "berger/trajectory_io.hpp"
#include "berger/verify.hpp"
#include "berger/version.hpp"

namespace fs = std::filesystem;
using namespace berger;

namespace {

struct TrajectoryArgs {
    double c = 1.0;
    double q = 0.0;
    double theta = std::numeric_limits<double>::quiet_NaN();
    double phase = 0.0;
    std::string omega0_csv;
    double t_end = 10.0;
    int n = 1000;
    std::string out = "-";
    std::string timestamp = "unset";
};

FrameVector parse_triple(const std::string& s) {
    std::istringstream is(s);
    FrameVector v;
    char c1 = 0, c2 = 0;
    if (!(is >> v.A >> c1 >> v.B >> c2 >> v.C) || c1 != ',' || c2 != ',')
        throw CLI::ValidationError("expected three comma-separated numbers");
    return v;
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw CLI::ValidationError("empty list");
    return out;
}

FlowParams resolve_params(const TrajectoryArgs& a, const std::string& cmd) {
    const auto ctx = BergerContext::make(a.c);
    if (!a.omega0_csv.empty()) {
        FrameVector om = parse_triple(a.omega0_csv);
        const double n = om.norm();
        if (n == 0.0) throw std::invalid_argument("omega0 must be nonzero");
        if (std::abs(n - 1.0) > 1e-12)
            std::cerr << cmd << ": warning: omega0 normalized from |omega0|="
                      << format_double(n) << "\n";
        return FlowParams::make_normalized(ctx, a.q, om);
    }
    if (std::isnan(a.theta))
        throw std::invalid_argument("specify --theta or --omega0");
    return FlowParams::from_angle(ctx, a.q, a.theta, a.phase);
}

RunManifest trajectory_manifest(const std::string& cmd,
                                const TrajectoryArgs& a,
                                const FlowParams& p) {
    RunManifest m;
    m.set("command", cmd);
    m.set("params.c", p.ctx.c);
    m.set("params.q", p.q);
    m.set("params.theta", p.theta);
    m.set("params.omega0.A", p.omega0.A);
    m.set("params.omega0.B", p.omega0.B);
    m.set("params.omega0.C", p.omega0.C);
    m.set("run.t_end", a.t_end);
    m.set("run.n", static_cast<long long>(a.n));
    m.set("format.columns", "t,q0,q1,q2,q3,A,B,C,hx,hy,hz");
    m.set("library.version", BERGER_VERSION);
    m.set("timestamp", a.timestamp);
    return m;
}

int run_trajectory(const std::string& cmd, const TrajectoryArgs& a) {
    const FlowParams p = resolve_params(a, cmd);
    const auto samples = sample_closed_form(p, a.t_end, a.n);
    const RunManifest man = trajectory_manifest(cmd, a, p);

    if (a.out == "-") {
        write_trajectory_csv(std::cout, samples, p.ctx);
        return 0;
    }
    std::ofstream f(a.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + a.out);
    write_trajectory_csv(f, samples, p.ctx);
    man.save(a.out + ".manifest");
    return 0;
}

int rerun_sweep_from_index(const RunManifest& idx, const std::string& out,
                           const std::string& timestamp);

int rerun_from_manifest(const RunManifest& man, const std::string& out,
                        const std::string& timestamp) {
    TrajectoryArgs a;
    const std::string cmd = man.get_string("command");
    if (cmd == "sweep") return rerun_sweep_from_index(man, out, timestamp);
    if (cmd != "geodesic" && cmd != "magnetic")
        throw std::invalid_argument("manifest command not re-runnable: " +
                                    cmd);
    a.c = man.get_double("params.c");
    a.q = man.get_double("params.q");
    a.omega0_csv = format_double(man.get_double("params.omega0.A")) + "," +
                   format_double(man.get_double("params.omega0.B")) + "," +
                   format_double(man.get_double("params.omega0.C"));
    a.t_end = man.get_double("run.t_end");
    a.n = static_cast<int>(man.get_double("run.n"));
    a.out = out;
    a.timestamp = timestamp;
    return run_trajectory(cmd, a);
}

void print_suites(const std::vector<SuiteResult>& results, std::ostream& os) {
    for (const auto& sr : results) {
        os << "suite " << sr.suite << "\n";
        for (const auto& ch : sr.checks)
            os << "  [" << (ch.pass ? "pass" : "FAIL") << "] " << ch.name
               << "  (max dev " << format_double(ch.deviation) << ", tol "
               << format_double(ch.tolerance) << ")\n";
    }
}

void report_suites(const std::vector<SuiteResult>& results,
                   const std::string& path) {
    RunManifest m;
    m.set("command", "verify");
    m.set("library.version", BERGER_VERSION);
    int idx = 0;
    for (const auto& sr : results)
        for (const auto& ch : sr.checks) {
            const std::string key = "check." + std::to_string(idx++);
            m.set(key + ".suite", sr.suite);
            m.set(key + ".name", ch.name);
            m.set(key + ".deviation", ch.deviation);
            m.set(key + ".tolerance", ch.tolerance);
            m.set(key + ".pass", ch.pass ? "true" : "false");
        }
    m.save(path);
}

struct SweepArgs {
    std::string c_list, q_list = "0", theta_list;
    std::string kind = "magnetic";
    double t_end = 10.0;
    int n = 100;
    std::string out;
    int jobs = 1;
    std::string timestamp = "unset";
};

int run_sweep(const SweepArgs& a) {
    const auto cs = parse_list(a.c_list);
    const auto qs = a.kind == "geodesic" ? std::vector<double>{0.0}
                                         : parse_list(a.q_list);
    const auto thetas = parse_list(a.theta_list);
    fs::create_directories(a.out);

    struct Tuple {
        double c, q, theta;
        std::string status = "pending";
        std::string error;
        std::string file;
    };
    std::vector<Tuple> tuples;
    for (double c : cs)
        for (double q : qs)
            for (double th : thetas) tuples.push_back({c, q, th});

    auto worker_run = [&](size_t i) {
        Tuple& tp = tuples[i];
        char name[32];
        std::snprintf(name, sizeof(name), "traj_%04zu.csv", i);
        tp.file = name;
        try {
            TrajectoryArgs ta;
            ta.c = tp.c;
            ta.q = tp.q;
            ta.theta = tp.theta;
            ta.t_end = a.t_end;
            ta.n = a.n;
            ta.out = (fs::path(a.out) / name).string();
            ta.timestamp = a.timestamp;
            run_trajectory(a.kind, ta);
            tp.status = "ok";
        } catch (const std::exception& e) {
            tp.status = "failed";
            tp.error = e.what();
        }
    };

    const int jobs = std::max(1, a.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < tuples.size(); ++i) worker_run(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < tuples.size();
                     i = next.fetch_add(1))
                    worker_run(i);
            });
        for (auto& t : pool) t.join();
    }

    // index written last, single-threaded
    RunManifest idx;
    idx.set("command", "sweep");
    idx.set("sweep.kind", a.kind);
    idx.set("sweep.c", a.c_list);
    idx.set("sweep.q", a.q_list);
    idx.set("sweep.theta", a.theta_list);
    idx.set("sweep.t_end", a.t_end);
    idx.set("sweep.n", static_cast<long long>(a.n));
    idx.set("sweep.tuples", static_cast<long long>(tuples.size()));
    idx.set("library.version", BERGER_VERSION);
    idx.set("timestamp", a.timestamp);
    bool any_failed = false;
    for (size_t i = 0; i < tuples.size(); ++i) {
        const auto& tp = tuples[i];
        const std::string key = "tuple." + std::to_string(i);
        idx.set(key + ".c", tp.c);
        idx.set(key + ".q", tp.q);
        idx.set(key + ".theta", tp.theta);
        idx.set(key + ".status", tp.status);
        idx.set(key + ".file", tp.file);
        if (tp.status == "failed") {
            idx.set(key + ".error", tp.error);
            any_failed = true;
        }
    }
    idx.save((fs::path(a.out) / "index.manifest").string());
    return any_failed ? 1 : 0;
}

int rerun_sweep_from_index(const RunManifest& idx, const std::string& out,
                           const std::string& timestamp) {
    SweepArgs a;
    a.kind = idx.get_string("sweep.kind");
    a.c_list = idx.get_string("sweep.c");
    a.q_list = idx.get_string("sweep.q");
    a.theta_list = idx.get_string("sweep.theta");
    a.t_end = idx.get_double("sweep.t_end");
    a.n = static_cast<int>(idx.get_double("sweep.n"));
    if (out == "-" || out.empty())
        throw std::invalid_argument("sweep rerun needs --out DIR");
    a.out = out;
    a.timestamp = timestamp;
    return run_sweep(a);
}

void print_periodicity(const PeriodicityReport& rep) {
    std::cout << "quantity = " << format_double(rep.quantity) << "\n";
    switch (rep.verdict) {
        case PeriodicityReport::Verdict::Periodic:
            std::cout << "verdict = periodic\n";
            break;
        case PeriodicityReport::Verdict::NoAtCap:
            std::cout << "verdict = not periodic (no rational within "
                         "tolerance at the denominator cap)\n";
            break;
        case PeriodicityReport::Verdict::Degenerate:
            std::cout << "verdict = degenerate (periodic; c = 1)\n";
            break;
    }
    if (rep.rational)
        std::cout << "rational = " << rep.rational->first << "/"
                  << rep.rational->second << "\n";
    if (rep.period)
        std::cout << "period = " << format_double(*rep.period) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed-form geodesics and contact magnetic trajectories on "
                 "the Berger sphere family M^3(c), with verification and "
                 "analysis tools. Angles are radians."};
    app.require_subcommand(1);
    app.set_version_flag("--version", BERGER_VERSION);

    // --- geodesic / magnetic -------------------------------------------
    TrajectoryArgs targs;
    auto add_traj_opts = [&](CLI::App* sub, bool with_q) {
        sub->add_option("--c", targs.c, "curvature parameter, c > -3")
            ->required();
        if (with_q) sub->add_option("--q", targs.q, "charge (default 0)");
        sub->add_option("--theta", targs.theta,
                        "contact angle of the initial velocity (radians)");
        sub->add_option("--phase", targs.phase,
                        "phase of the initial (A,B) components");
        sub->add_option("--omega0", targs.omega0_csv,
                        "initial angular velocity as A,B,C (unit norm; "
                        "normalized with a warning otherwise)");
        sub->add_option("--t-end", targs.t_end, "final time (default 10)");
        sub->add_option("--n", targs.n, "number of samples (default 1000)");
        sub->add_option("--out", targs.out,
                        "output CSV path ('-' for stdout); a .manifest file "
                        "accompanies file output");
        sub->add_option("--timestamp", targs.timestamp,
                        "timestamp string stored in the manifest (default "
                        "'unset' for reproducible output)");
    };
    CLI::App* geo = app.add_subcommand(
        "geodesic", "closed-form geodesic trajectory CSV");
    add_traj_opts(geo, false);
    CLI::App* mag = app.add_subcommand(
        "magnetic", "closed-form contact magnetic trajectory CSV");
    add_traj_opts(mag, true);

    // --- verify ----------------------------------------------------------
    std::string suite;
    VerifyOptions vopt;
    double vc = 0, vq = 0, vtheta = 0;
    std::string report_path;
    CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--suite", suite, "one of: curvature, natred, contact, "
                                      "lorentz, oracle, gyrostat, analysis, "
                                      "all")
        ->required();
    auto* oc = ver->add_option("--c", vc, "restrict to a single c");
    auto* oq = ver->add_option("--q", vq, "restrict to a single charge");
    auto* ot = ver->add_option("--theta", vtheta,
                               "restrict to a single contact angle");
    ver->add_option("--seed", vopt.seed, "RNG seed for randomized checks");
    ver->add_option("--report", report_path,
                    "write a machine-readable key-value report here");

    // --- analyze ---------------------------------------------------------
    CLI::App* ana = app.add_subcommand("analyze", "scalar analysis queries");
    ana->require_subcommand(1);
    double ac = 1.0, atheta = 0.0, aq = 0.0;
    int an = 5;
    std::int64_t amaxden = 1000000;
    double atol = 1e-12;
    auto* a_diam = ana->add_subcommand("diameter", "diameter of M^3(c)");
    a_diam->add_option("--c", ac)->required();
    auto* a_lam = ana->add_subcommand("lambda", "the invariant lambda");
    a_lam->add_option("--c", ac)->required();
    a_lam->add_option("--theta", atheta)->required();
    auto* a_pg = ana->add_subcommand("period-geodesic",
                                     "geodesic periodicity criterion");
    a_pg->add_option("--c", ac)->required();
    a_pg->add_option("--theta", atheta)->required();
    a_pg->add_option("--max-den", amaxden);
    a_pg->add_option("--tol", atol);
    auto* a_pm = ana->add_subcommand("period-magnetic",
                                     "magnetic periodicity criterion (c=1)");
    a_pm->add_option("--q", aq)->required();
    a_pm->add_option("--theta", atheta)->required();
    a_pm->add_option("--max-den", amaxden);
    a_pm->add_option("--tol", atol);
    auto* a_conj =
        ana->add_subcommand("conjugate", "conjugate times along a geodesic");
    a_conj->add_option("--c", ac)->required();
    a_conj->add_option("--theta", atheta)->required();
    a_conj->add_option("--n", an, "number of roots (default 5)");
    auto* a_len = ana->add_subcommand("length-bound",
                                      "closed-geodesic length bound");
    a_len->add_option("--c", ac)->required();
    a_len->add_option("--theta", atheta)->required();

    // --- sweep -----------------------------------------------------------
    SweepArgs sargs;
    CLI::App* swp = app.add_subcommand(
        "sweep", "evaluate a (c, q, theta) grid into a directory");
    swp->add_option("--c", sargs.c_list, "comma-separated c values")
        ->required();
    swp->add_option("--q", sargs.q_list,
                    "comma-separated charges (ignored for --kind geodesic)");
    swp->add_option("--theta", sargs.theta_list,
                    "comma-separated contact angles")
        ->required();
    swp->add_option("--kind", sargs.kind, "magnetic (default) or geodesic")
        ->check(CLI::IsMember({"magnetic", "geodesic"}));
    swp->add_option("--t-end", sargs.t_end);
    swp->add_option("--n", sargs.n);
    swp->add_option("--out", sargs.out, "output directory")->required();
    swp->add_option("--jobs", sargs.jobs, "worker threads (default 1)");
    swp->add_option("--timestamp", sargs.timestamp);

    // --- rerun -----------------------------------------------------------
    std::string rerun_manifest, rerun_out = "-", rerun_stamp = "unset";
    CLI::App* rr = app.add_subcommand(
        "rerun", "regenerate a trajectory from its manifest, bit-exactly");
    rr->add_option("manifest", rerun_manifest, "manifest file")->required();
    rr->add_option("--out", rerun_out, "output CSV path ('-' for stdout)");
    rr->add_option("--timestamp", rerun_stamp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (geo->parsed()) return run_trajectory("geodesic", targs);
        if (mag->parsed()) return run_trajectory("magnetic", targs);

        if (ver->parsed()) {
            if (*oc) vopt.c = vc;
            if (*oq) vopt.q = vq;
            if (*ot) vopt.theta = vtheta;
            if (vopt.c && (suite == "curvature" || suite == "all")) {
                const auto ctx = BergerContext::make(*vopt.c);
                const FrameVector e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
                const auto r = ricci(ctx);
                std::cout << "c = " << format_double(ctx.c)
                          << ": K12 = " << format_double(sectional(e1, e2, ctx))
                          << ", K13 = " << format_double(sectional(e1, e3, ctx))
                          << ", K23 = " << format_double(sectional(e2, e3, ctx))
                          << ", Ric = diag(" << format_double(r[0]) << ", "
                          << format_double(r[1]) << ", " << format_double(r[2])
                          << "), scal = "
                          << format_double(scalar_curvature(ctx)) << "\n";
            }
            const auto results = run_suites(suite, vopt);
            print_suites(results, std::cout);
            if (!report_path.empty()) report_suites(results, report_path);
            const bool ok =
                std::all_of(results.begin(), results.end(),
                            [](const SuiteResult& r) { return r.all_pass(); });
            std::cout << (ok ? "verify: all checks passed\n"
                             : "verify: FAILURES present\n");
            return ok ? 0 : 1;
        }

        if (ana->parsed()) {
            if (a_diam->parsed()) {
                std::cout << "diameter = " << format_double(diameter(ac))
                          << "\n";
            } else if (a_lam->parsed()) {
                std::cout << "lambda = "
                          << format_double(engel_lambda(atheta, ac)) << "\n";
            } else if (a_pg->parsed()) {
                print_periodicity(
                    geodesic_period_test(atheta, ac, amaxden, atol));
            } else if (a_pm->parsed()) {
                print_periodicity(
                    magnetic_period_test(aq, atheta, amaxden, atol));
            } else if (a_conj->parsed()) {
                const auto roots = conjugate_times(atheta, ac, an);
                const double lam = engel_lambda(atheta, ac);
                std::cout << "equation-roots =";
                for (double r : roots) std::cout << ' ' << format_double(r);
                std::cout << "\npi-family =";
                for (double r : conjugate_pi_family(an))
                    std::cout << ' ' << format_double(r);
                std::cout << "\nrescaled-roots (t/sqrt(lambda)) =";
                for (double r : roots)
                    std::cout << ' ' << format_double(r / std::sqrt(lam));
                std::cout << "\n";
            } else if (a_len->parsed()) {
                std::cout << "length-bound = "
                          << format_double(length_bound(atheta, ac)) << "\n";
            }
            return 0;
        }

        if (swp->parsed()) return run_sweep(sargs);

        if (rr->parsed())
            return rerun_from_manifest(RunManifest::load(rerun_manifest),
                                       rerun_out, rerun_stamp);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
