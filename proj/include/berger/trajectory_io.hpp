#pragma once

// Trajectory sampling and CSV export.  Columns:
//   t,q0,q1,q2,q3,A,B,C,hx,hy,hz
// (group element, frame angular velocity, Hopf projection), one header row,
// LF line endings, shortest round-trip number formatting.

#include <iosfwd>
#include <string>
#include <vector>

#include "berger/flows.hpp"

namespace berger {

// closed-form trajectory on n points, time-uniform over [0, t_end]
std::vector<TrajectorySample> sample_closed_form(const FlowParams& p,
                                                 double t_end, int n);

void write_trajectory_csv(std::ostream& os,
                          const std::vector<TrajectorySample>& samples,
                          const BergerContext& ctx);

std::string trajectory_csv_string(const std::vector<TrajectorySample>& samples,
                                  const BergerContext& ctx);

} // namespace berger
