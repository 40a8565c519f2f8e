#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toriczeta/heightzeta.hpp"
#include "toriczeta/oracle.hpp"

#include "fan_fixtures.hpp"

using namespace tz;

TEST_CASE("phi slope lower bound") {
    CHECK(oracle::phi_slope_lower_bound(make_p1(2)) == Rat(1));
    CHECK(oracle::phi_slope_lower_bound(make_p2(2)) == Rat(1, 2));
    CHECK(oracle::phi_slope_lower_bound(make_p1xp1(2)) == Rat(1));
}

TEST_CASE("enumerate_split: height-1 points are the constant tuples") {
    auto b1 = oracle::enumerate_split(make_p1(2), 2, 0);
    CHECK(b1.counts == std::vector<long long>{1});
    auto b2 = oracle::enumerate_split(make_p2(2), 2, 0);
    CHECK(b2.counts == std::vector<long long>{1});
    auto b3 = oracle::enumerate_split(make_p2(3), 3, 0);
    CHECK(b3.counts == std::vector<long long>{4});
}

TEST_CASE("enumerate_split: golden histogram for G_m over F_3") {
    auto b = oracle::enumerate_split(make_p1(3), 3, 2);
    // hand-audit: x = c(t+a)/(t+b) with a != b has valuation +1, -1 at two
    // degree-1 places, so H = q^2; no point has H = q
    CHECK(b.counts[0] == 2);
    CHECK(b.counts[1] == 0);
    CHECK(b.counts[2] == 24);
}

TEST_CASE("enumerate_split matches zeta_coeffs on split fans") {
    for (long long q : {2, 3})
        for (const auto& f : all_split_fans(q)) {
            const int n = 3;
            auto batch = oracle::enumerate_split(f, q, n);
            auto N = heightzeta::zeta_coeffs(f, n);
            CHECK(batch.counts == N);
        }
}

TEST_CASE("enumerate_split soundness: doubling the degree bound changes nothing") {
    for (const auto& f : {make_p1(2), make_p2(2)}) {
        const int n = 3;
        auto a = oracle::enumerate_split(f, f.q, n);
        auto b = oracle::enumerate_split(f, f.q, n, 2 * std::max(a.degree_bound, 1));
        CHECK(a.counts == b.counts);
    }
}

TEST_CASE("enumerate_split scope checks") {
    CHECK_THROWS_AS(oracle::enumerate_split(make_swap(2), 2, 2), ScopeError);
    CHECK_THROWS_AS(oracle::enumerate_split(make_p1(2), 2, 9), ScopeError);
}

TEST_CASE("enumerate_res_torus: height-1 points are the constants of F_{q^e}") {
    auto b = oracle::enumerate_res_torus(make_swap(2), 2, 2, 0);
    CHECK(b.counts == std::vector<long long>{3});
}

TEST_CASE("enumerate_res_torus: golden histogram for the swap torus over F_2") {
    auto b = oracle::enumerate_res_torus(make_swap(2), 2, 2, 2);
    CHECK(b.counts == std::vector<long long>{3, 0, 0});
    auto N = heightzeta::zeta_coeffs(make_swap(2), 2);
    CHECK(b.counts == N);
}

TEST_CASE("enumerate_res_torus: degenerate degree bound keeps constants only") {
    auto b = oracle::enumerate_res_torus(make_swap(2), 2, 2, 1, 0);
    CHECK(b.degree_bound == 0);
    CHECK(b.counts == std::vector<long long>{3, 0});
}

TEST_CASE("enumerate_res_torus soundness: doubling the degree bound changes nothing") {
    const int n = 3;
    auto a = oracle::enumerate_res_torus(make_swap(2), 2, 2, n);
    auto b = oracle::enumerate_res_torus(make_swap(2), 2, 2, n,
                                         2 * std::max(a.degree_bound, 1));
    CHECK(a.counts == b.counts);
}

TEST_CASE("enumerate_res_torus scope checks") {
    CHECK_THROWS_AS(oracle::enumerate_res_torus(make_p1xp1(2), 2, 1, 2), ScopeError);
    CHECK_THROWS_AS(oracle::enumerate_res_torus(make_swap(2), 2, 2, 7), ScopeError);
    // antipodal action: X(T) is Z^2 with g = -1, not free over Z[G]
    CHECK_THROWS_AS(oracle::enumerate_res_torus(make_antipodal(2), 2, 2, 2), ScopeError);
}

TEST_CASE("PointBatch JSON") {
    auto b = oracle::enumerate_split(make_p1(2), 2, 2);
    std::string j = b.to_json();
    for (const char* key : {"\"q\"", "\"n_max\"", "\"counts\"", "\"degree_bound\""})
        CHECK(j.find(key) != std::string::npos);
}
