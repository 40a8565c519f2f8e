#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toriczeta/intlat.hpp"

#include <cstdlib>
#include <random>

using namespace tz;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int r, int c, int lo = -5, int hi = 5) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = d(rng);
    return m;
}

bool is_unimodular(const IntMatrix& m) {
    Int d = intlat::det(m);
    return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("snf of identity") {
    auto s = intlat::snf(IntMatrix::identity(2));
    CHECK(s.D == IntMatrix::identity(2));
}

TEST_CASE("snf of zero 1x1") {
    IntMatrix z(1, 1);
    auto s = intlat::snf(z);
    CHECK(s.D.at(0, 0) == 0);
}

TEST_CASE("snf [[2,4],[6,8]] gives diag(2,4)") {
    auto m = IntMatrix::from_rows({{2, 4}, {6, 8}});
    auto s = intlat::snf(m);
    CHECK(s.D.at(0, 0) == 2);
    CHECK(s.D.at(1, 1) == 4);
    CHECK(s.D.at(0, 1) == 0);
    CHECK(s.D.at(1, 0) == 0);
    CHECK(is_unimodular(s.U));
    CHECK(is_unimodular(s.V));
    CHECK(s.U * m * s.V == s.D);
    // |det| preserved: 2*4 = |2*8 - 4*6|
    CHECK(abs(intlat::det(m)) == 8);
}

TEST_CASE("snf reconstruction on random matrices") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        int r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
        IntMatrix m = random_matrix(rng, r, c);
        auto s = intlat::snf(m);
        CHECK(s.U * m * s.V == s.D);
        CHECK(is_unimodular(s.U));
        CHECK(is_unimodular(s.V));
        CHECK(intlat::inverse_unimodular(s.U) * s.D * intlat::inverse_unimodular(s.V) == m);
        // divisibility chain, nonnegative diagonal
        for (std::size_t k = 0; k + 1 < std::min(s.D.rows(), s.D.cols()); ++k) {
            CHECK(s.D.at(k, k) >= 0);
            if (s.D.at(k, k) != 0) CHECK(s.D.at(k + 1, k + 1) % s.D.at(k, k) == 0);
            else CHECK(s.D.at(k + 1, k + 1) == 0);
        }
    }
}

TEST_CASE("cokernel examples") {
    IntMatrix three(1, 1);
    three.at(0, 0) = 3;
    FinAb a = intlat::cokernel(three);
    CHECK(a.free_rank == 0);
    REQUIRE(a.invariant_factors.size() == 1);
    CHECK(a.invariant_factors[0] == 3);

    // gamma for the P^2 fan: 2 -> 3, m |-> (<m, rho_alpha>)_alpha
    auto gamma = IntMatrix::from_rows({{1, 0}, {0, 1}, {-1, -1}});
    FinAb pic = intlat::cokernel(gamma);
    CHECK(pic.free_rank == 1);
    CHECK(pic.invariant_factors.empty());

    auto d12 = IntMatrix::from_rows({{1, 0}, {0, 2}});
    FinAb b = intlat::cokernel(d12);
    CHECK(b.free_rank == 0);
    REQUIRE(b.invariant_factors.size() == 1);
    CHECK(b.invariant_factors[0] == 2);
}

TEST_CASE("cokernel order equals |det| for square nonsingular") {
    std::mt19937 rng(7);
    int done = 0;
    while (done < 30) {
        IntMatrix m = random_matrix(rng, 3, 3);
        Int d = abs(intlat::det(m));
        if (d == 0) continue;
        ++done;
        FinAb c = intlat::cokernel(m);
        CHECK(c.free_rank == 0);
        CHECK(c.order() == d);
    }
}

TEST_CASE("kernel_basis examples") {
    CHECK(intlat::kernel_basis(IntMatrix::identity(3)).cols() == 0);

    auto m = IntMatrix::from_rows({{1, 1}});
    auto k = intlat::kernel_basis(m);
    REQUIRE(k.cols() == 1);
    CHECK(abs(k.at(0, 0)) == 1);
    CHECK(k.at(0, 0) + k.at(1, 0) == 0);

    auto sum3 = IntMatrix::from_rows({{1, 1, 1}});
    auto k3 = intlat::kernel_basis(sum3);
    REQUIRE(k3.cols() == 2);
    for (std::size_t j = 0; j < 2; ++j) {
        Int s = 0;
        for (std::size_t i = 0; i < 3; ++i) s += k3.at(i, j);
        CHECK(s == 0);
    }
    CHECK(intlat::is_saturated(k3));
}

TEST_CASE("kernel_basis is saturated on random matrices") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix m = random_matrix(rng, 2, 4, -3, 3);
        auto k = intlat::kernel_basis(m);
        IntMatrix prod = m * k;
        CHECK(prod.is_zero());
        if (k.cols() > 0) CHECK(intlat::is_saturated(k));
    }
}

TEST_CASE("sublattice_index examples") {
    auto one = intlat::sublattice_index(IntMatrix::identity(2), 2);
    REQUIRE(one.has_value());
    CHECK(*one == 1);

    auto six = intlat::sublattice_index(IntMatrix::from_rows({{2, 0}, {0, 3}}), 2);
    REQUIRE(six.has_value());
    CHECK(*six == 6);

    auto inf = intlat::sublattice_index(IntMatrix::from_rows({{1}, {1}}), 2);
    CHECK(!inf.has_value());
}

TEST_CASE("solve and inverse_unimodular") {
    auto m = IntMatrix::from_rows({{2, 1}, {1, 1}});
    auto x = intlat::solve(m, {Int(3), Int(2)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 1);

    // 2x = 1 has no integer solution
    IntMatrix two(1, 1);
    two.at(0, 0) = 2;
    CHECK(!intlat::solve(two, {Int(1)}).has_value());

    auto inv = intlat::inverse_unimodular(m);
    CHECK(m * inv == IntMatrix::identity(2));
}

TEST_CASE("in_column_span and gcd_vec") {
    auto m = IntMatrix::from_rows({{2, 0}, {0, 1}});
    CHECK(intlat::in_column_span(m, {Int(2), Int(5)}));
    CHECK(!intlat::in_column_span(m, {Int(1), Int(0)}));
    CHECK(intlat::gcd_vec({Int(6), Int(10), Int(15)}) == 1);
    CHECK(intlat::gcd_vec({Int(6), Int(10)}) == 2);
}

TEST_CASE("matrix pow and transpose") {
    auto m = IntMatrix::from_rows({{0, 1}, {1, 0}});
    CHECK(m.pow(2) == IntMatrix::identity(2));
    CHECK(m.pow(0) == IntMatrix::identity(2));
    CHECK(m.transpose() == m);
}
