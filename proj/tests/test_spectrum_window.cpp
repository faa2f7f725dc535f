#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>

#include "helpers.hpp"
#include "specflow/spectrum_window.hpp"

using namespace specflow;
using specflow::testing::random_window;

namespace {
std::vector<double> vec(std::span<const double> s) { return {s.begin(), s.end()}; }
}  // namespace

TEST_CASE("canonical_window anchors index 0 at the smallest value >= 0") {
    const SpectrumWindow u = canonical_window({-2, -1, 0, 0, 3});
    CHECK(u.index_lo() == -2);
    CHECK(u.index_hi() == 2);
    CHECK(vec(u.values()) == std::vector<double>{-2, -1, 0, 0, 3});
    CHECK(u.at(0) == 0.0);

    const SpectrumWindow v = canonical_window({1, 2, 3});
    CHECK(v.index_lo() == 0);
    CHECK(v.index_hi() == 2);

    const SpectrumWindow w = canonical_window({-3, -1});
    CHECK(w.index_lo() == -2);
    CHECK(w.index_hi() == -1);

    CHECK_THROWS_AS(canonical_window({}), std::invalid_argument);
    CHECK_THROWS_AS(canonical_window({0.0, std::nan("")}), std::invalid_argument);
}

TEST_CASE("canonical_window sorts and anchors arbitrary multisets") {
    std::mt19937_64 rng(21);
    std::normal_distribution<double> g(0.0, 2.0);
    for (int round = 0; round < 200; ++round) {
        std::vector<double> eigs(1 + rng() % 12);
        for (double& x : eigs) x = g(rng);
        const SpectrumWindow u = canonical_window(eigs);
        for (long j = u.index_lo(); j < u.index_hi(); ++j) CHECK(u.at(j) <= u.at(j + 1));
        for (long j = u.index_lo(); j <= u.index_hi(); ++j) {
            if (j < 0) CHECK(u.at(j) < 0.0);
            if (j >= 0) CHECK(u.at(j) >= 0.0);
        }
    }
}

TEST_CASE("shift relabels without touching values") {
    const SpectrumWindow u(0, {1, 2, 3});
    CHECK(shift_window(u, 0) == u);

    const SpectrumWindow s = shift_window(u, 1);
    CHECK(s.index_lo() == -1);
    CHECK(s.index_hi() == 1);
    CHECK(vec(s.values()) == vec(u.values()));
    for (long j = s.index_lo(); j <= s.index_hi(); ++j) CHECK(s.at(j) == u.at(j + 1));

    std::mt19937_64 rng(22);
    for (int round = 0; round < 50; ++round) {
        const SpectrumWindow w = random_window(rng, 1 + rng() % 9, static_cast<long>(rng() % 7) - 3);
        const long a = static_cast<long>(rng() % 11) - 5;
        const long b = static_cast<long>(rng() % 11) - 5;
        CHECK(shift_window(shift_window(w, a), b) == shift_window(w, a + b));
    }
}

TEST_CASE("arsinh distance: identity, closed forms, range mismatch") {
    const SpectrumWindow u(0, {0, 0, 0});
    CHECK(arsinh_distance(u, u) == 0.0);

    const SpectrumWindow ones(0, {1, 1, 1});
    CHECK(arsinh_distance(u, ones) == doctest::Approx(std::asinh(1.0)).epsilon(1e-15));
    CHECK(arsinh_distance(u, ones) == doctest::Approx(0.881373587019543).epsilon(1e-12));

    const SpectrumWindow a(0, {0, 1});
    const SpectrumWindow b(0, {0, 3});
    const double expect = std::asinh(3.0) - std::asinh(1.0);
    CHECK(arsinh_distance(a, b) == doctest::Approx(expect).epsilon(1e-15));
    CHECK(expect == doctest::Approx(0.9370728722125238).epsilon(1e-12));

    CHECK_THROWS_AS(arsinh_distance(a, SpectrumWindow(1, {0, 3})), std::invalid_argument);
    CHECK_THROWS_AS(arsinh_distance(a, SpectrumWindow(0, {0, 1, 2})), std::invalid_argument);
}

TEST_CASE("metric axioms and shift isometry on random windows") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 300; ++round) {
        const std::size_t len = 2 + rng() % 10;
        const long lo = static_cast<long>(rng() % 9) - 4;
        const SpectrumWindow u = random_window(rng, len, lo);
        const SpectrumWindow v = random_window(rng, len, lo);
        const SpectrumWindow w = random_window(rng, len, lo);

        CHECK(arsinh_distance(u, v) == arsinh_distance(v, u));
        CHECK(arsinh_distance(u, w) <= arsinh_distance(u, v) + arsinh_distance(v, w) + 1e-15);
        CHECK(arsinh_distance(u, u) == 0.0);
        CHECK(arsinh_distance(u, v) > 0.0);  // distinct random values

        const long k = static_cast<long>(rng() % 13) - 6;
        CHECK(arsinh_distance(shift_window(u, k), shift_window(v, k)) == arsinh_distance(u, v));
    }
}

TEST_CASE("quotient distance recovers pure shifts") {
    std::mt19937_64 rng(24);
    const SpectrumWindow u = random_window(rng, 12, -5);
    const SpectrumWindow v = shift_window(u, 5);
    const ConfDistance q = quotient_distance(u, v, 8);
    CHECK(q.shift == 5);
    CHECK(q.distance == 0.0);
    CHECK(q.finite());
}

TEST_CASE("quotient distance on constant windows and disjoint windows") {
    const SpectrumWindow zeros(-10, std::vector<double>(21, 0.0));
    const SpectrumWindow ones(-10, std::vector<double>(21, 1.0));
    const ConfDistance q = quotient_distance(zeros, ones, 6);
    CHECK(q.shift == 0);  // all shifts tie; smallest |k| wins
    CHECK(q.distance == doctest::Approx(std::asinh(1.0)).epsilon(1e-15));

    const SpectrumWindow far(100, {1, 2, 3, 4, 5});
    const SpectrumWindow near(0, {1, 2, 3, 4, 5});
    const ConfDistance inf = quotient_distance(near, far, 3);
    CHECK(!inf.finite());
    CHECK(inf.distance == std::numeric_limits<double>::infinity());
}

TEST_CASE("quotient distance is bounded by the aligned distance and shifts covariantly") {
    std::mt19937_64 rng(25);
    for (int round = 0; round < 100; ++round) {
        const std::size_t len = 4 + rng() % 8;
        const long lo = static_cast<long>(rng() % 7) - 3;
        const SpectrumWindow u = random_window(rng, len, lo);
        const SpectrumWindow v = random_window(rng, len, lo);

        const ConfDistance q = quotient_distance(u, v, 6);
        CHECK(q.distance <= arsinh_distance(u, v));

        const long a = static_cast<long>(rng() % 7) - 3;
        const ConfDistance q_post = quotient_distance(u, shift_window(v, a), 12);
        CHECK(q_post.shift == q.shift + a);
        CHECK(q_post.distance == q.distance);
        const ConfDistance q_pre = quotient_distance(shift_window(u, a), v, 12);
        CHECK(q_pre.shift == q.shift - a);
        CHECK(q_pre.distance == q.distance);
    }
}

TEST_CASE("spectral_part filters a contiguous run") {
    const SpectrumWindow u = canonical_window({-2, -1, 0, 0, 3});
    CHECK(spectral_part(u, -1, 0) == std::vector<double>{-1, 0, 0});
    CHECK(spectral_part(u, 10, 20).empty());
    CHECK(spectral_part(u, 0, 10) == std::vector<double>{0, 0, 3});
    CHECK_THROWS_AS(spectral_part(u, 1, 0), std::invalid_argument);
}

TEST_CASE("JSON serialization round-trips exactly") {
    std::mt19937_64 rng(26);
    for (int round = 0; round < 100; ++round) {
        const SpectrumWindow u = random_window(rng, 1 + rng() % 15, static_cast<long>(rng() % 21) - 10);
        const nlohmann::json j = window_to_json(u);
        CHECK(j.size() == 2);
        const SpectrumWindow back = window_from_json(nlohmann::json::parse(j.dump()));
        CHECK(back == u);
    }
    CHECK_THROWS_AS(window_from_json(nlohmann::json{{"index_lo", 0}}), std::invalid_argument);
    CHECK_THROWS_AS(
        window_from_json(nlohmann::json{{"index_lo", 0}, {"values", {1.0}}, {"extra", 1}}),
        std::invalid_argument);
}
