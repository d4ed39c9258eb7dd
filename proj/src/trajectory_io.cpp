#include "berger/trajectory_io.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "berger/manifest.hpp"

namespace berger {

std::vector<TrajectorySample> sample_closed_form(const FlowParams& p,
                                                 double t_end, int n) {
    if (n < 1) throw std::invalid_argument("need at least one sample");
    std::vector<TrajectorySample> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t =
            n == 1 ? 0.0 : t_end * static_cast<double>(i) / (n - 1);
        out.push_back({t, magnetic_closed_form(t, p),
                       omega_closed_form(t, p)});
    }
    return out;
}

void write_trajectory_csv(std::ostream& os,
                          const std::vector<TrajectorySample>& samples,
                          const BergerContext& ctx) {
    os << "t,q0,q1,q2,q3,A,B,C,hx,hy,hz\n";
    for (const auto& s : samples) {
        const So3Vector h = hopf_project(s.gamma, ctx.c);
        os << format_double(s.t) << ',' << format_double(s.gamma.q0) << ','
           << format_double(s.gamma.q1) << ',' << format_double(s.gamma.q2)
           << ',' << format_double(s.gamma.q3) << ','
           << format_double(s.omega.A) << ',' << format_double(s.omega.B)
           << ',' << format_double(s.omega.C) << ',' << format_double(h.x)
           << ',' << format_double(h.y) << ',' << format_double(h.z) << '\n';
    }
}

std::string trajectory_csv_string(const std::vector<TrajectorySample>& samples,
                                  const BergerContext& ctx) {
    std::ostringstream os;
    write_trajectory_csv(os, samples, ctx);
    return os.str();
}

} // namespace berger
