#include <doctest.h>

#include <charconv>
#include <sstream>

#include "berger/manifest.hpp"
#include "berger/trajectory_io.hpp"
#include "test_support.hpp"

using namespace berger;
using namespace testsup;

TEST_CASE("shortest round-trip formatting of doubles") {
    std::mt19937_64 rng(301);
    for (int n = 0; n < 500; ++n) {
        double x = (u01(rng) - 0.5) * std::pow(10.0, uniform(rng, -12, 12));
        const std::string s = format_double(x);
        double back{};
        std::from_chars(s.data(), s.data() + s.size(), back);
        CHECK(back == x);
    }
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(1.0) == "1");
}

TEST_CASE("manifest round-trip") {
    RunManifest m;
    m.set("command", "magnetic");
    m.set("params.c", 5.0);
    m.set("params.q", 0.1 + 0.2); // a value with a long decimal tail
    m.set("run.n", 1000LL);
    m.set("timestamp", "unset");

    const std::string text = m.to_string();
    std::istringstream is(text);
    const RunManifest back = RunManifest::parse(is);
    CHECK(back.to_string() == text);
    CHECK(back.get_double("params.q") == 0.1 + 0.2);
    CHECK(back.get_string("command") == "magnetic");
    CHECK_FALSE(back.get("missing").has_value());
    CHECK_THROWS_AS(back.get_double("missing"), std::out_of_range);

    // overwrite keeps a single entry
    m.set("command", "geodesic");
    CHECK(m.get_string("command") == "geodesic");

    RunManifest bad;
    CHECK_THROWS_AS(bad.set("a=b", "x"), std::invalid_argument);
    CHECK_THROWS_AS(bad.set("k", "line\nbreak"), std::invalid_argument);
}

TEST_CASE("trajectory CSV output") {
    const auto ctx = BergerContext::make(5.0);
    const auto p = FlowParams::from_angle(ctx, 0.0, 1.0472);
    const auto samples = sample_closed_form(p, 10.0, 1000);
    REQUIRE(samples.size() == 1000);
    CHECK(samples.front().t == 0.0);
    CHECK(samples.back().t == 10.0);

    // the C column is a first integral
    for (const auto& s : samples)
        CHECK(std::abs(s.omega.C - p.omega0.C) <= 1e-13);

    const std::string csv = trajectory_csv_string(samples, ctx);
    std::istringstream is(csv);
    std::string header;
    std::getline(is, header);
    CHECK(header == "t,q0,q1,q2,q3,A,B,C,hx,hy,hz");
    int rows = 0;
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 1000);

    // byte determinism
    CHECK(trajectory_csv_string(samples, ctx) == csv);
}
