#pragma once

// Named verification suites over the geometry, flow and rigid-body modules.
// Each check compares a computed quantity against its expected value and
// carries the tolerance it was judged at.  The CLI `verify` command and the
// acceptance runner both feed from here, with fixed seeds so runs are
// reproducible.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace berger {

struct Check {
    std::string name;
    double deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct SuiteResult {
    std::string suite;
    std::vector<Check> checks;
    bool all_pass() const;
};

struct VerifyOptions {
    std::optional<double> c;
    std::optional<double> q;
    std::optional<double> theta;
    std::uint64_t seed = 20240915;
};

SuiteResult verify_curvature(const VerifyOptions& opt = {});
SuiteResult verify_natred(const VerifyOptions& opt = {});
SuiteResult verify_contact(const VerifyOptions& opt = {});
SuiteResult verify_lorentz(const VerifyOptions& opt = {});
SuiteResult verify_oracle(const VerifyOptions& opt = {});
SuiteResult verify_gyrostat(const VerifyOptions& opt = {});
SuiteResult verify_analysis(const VerifyOptions& opt = {});

// every suite above, in a fixed order
std::vector<SuiteResult> verify_all(const VerifyOptions& opt = {});

const std::vector<std::string>& verify_suite_names();
// runs one suite by name ("all" fans out); throws on unknown names
std::vector<SuiteResult> run_suites(const std::string& name,
                                    const VerifyOptions& opt);

} // namespace berger
