#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toriczeta/ffplaces.hpp"

#include <random>

using namespace tz;

TEST_CASE("field axioms for all supported q") {
    for (long long q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        Fq F(q);
        for (int x = 1; x < q; ++x) CHECK(F.mul(x, F.inv(x)) == 1);
        for (int x = 0; x < q; ++x) {
            CHECK(F.add(x, F.neg(x)) == 0);
            for (int y = 0; y < q; ++y) {
                // Frobenius is additive and multiplicative
                CHECK(F.frobenius(F.add(x, y)) == F.add(F.frobenius(x), F.frobenius(y)));
                CHECK(F.frobenius(F.mul(x, y)) == F.mul(F.frobenius(x), F.frobenius(y)));
            }
        }
        // x -> x^q is the identity
        for (int x = 0; x < q; ++x) CHECK(F.pow(x, q) == x);
    }
    CHECK_THROWS(Fq(17));
    CHECK_THROWS(Fq(6));
}

TEST_CASE("prime subfield embeds with identical codes") {
    Fq F2(2), F4(4);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            CHECK(F2.add(x, y) == F4.add(x, y));
            CHECK(F2.mul(x, y) == F4.mul(x, y));
        }
}

TEST_CASE("places_up_to counts") {
    Fq F2(2), F3(3);
    CHECK(ffp::places_up_to(F2, 1).size() == 3);   // t, t+1, infinity
    CHECK(ffp::places_up_to(F2, 2).size() == 4);   // + t^2+t+1
    CHECK(ffp::places_up_to(F3, 1).size() == 4);   // t, t+1, t+2, infinity
}

TEST_CASE("valuation examples") {
    Fq F2(2);
    Place vt{true, {0, 1}, 1};       // (t)
    Place vinf{false, {}, 1};
    // x = t^2 / (t + 1)
    RatFunc x{{0, 0, 1}, {1, 1}};
    CHECK(ffp::valuation(F2, x, vt) == 2);
    RatFunc t{{0, 1}, {1}};
    CHECK(ffp::valuation(F2, t, vinf) == -1);
    Place v3{true, {1, 1, 1}, 2};    // (t^2 + t + 1)
    Poly cube = ffp::mul(F2, ffp::mul(F2, v3.poly, v3.poly), v3.poly);
    CHECK(ffp::valuation(F2, RatFunc{cube, {1}}, v3) == 3);
    CHECK_THROWS(ffp::valuation(F2, RatFunc{{}, {1}}, vt));
}

TEST_CASE("zeta_series examples") {
    auto z = ffp::zeta_series(2, Rat(1), 3);
    CHECK(z == std::vector<Rat>{1, 3, 7, 15});
    auto zm = ffp::zeta_series(2, Rat(-1), 3);
    CHECK(zm == std::vector<Rat>{1, -3, 7, -15});
    CHECK(ffp::zeta_series(5, Rat(1), 0) == std::vector<Rat>{1});
}

TEST_CASE("zeta_series agrees with the Euler product over places") {
    for (long long q : {2, 3}) {
        Fq F(q);
        const int n = 5;
        auto places = ffp::places_up_to(F, n);
        // expand prod_v (1 - u^{deg v})^{-1} through grade n
        std::vector<long long> coeff(n + 1, 0);
        coeff[0] = 1;
        for (const auto& v : places) {
            std::vector<long long> next(n + 1, 0);
            for (int a = 0; a <= n; ++a)
                for (int k = 0; a + k * v.degree <= n; ++k) next[a + k * v.degree] += coeff[a];
            coeff = next;
        }
        auto z = ffp::zeta_series(q, Rat(1), n);
        for (int i = 0; i <= n; ++i) CHECK(Rat(coeff[i]) == z[i]);
    }
}

TEST_CASE("product formula on random rational functions") {
    std::mt19937 rng(11);
    for (long long q : {2, 3}) {
        Fq F(q);
        auto places = ffp::places_up_to(F, 6);
        std::uniform_int_distribution<int> coef(0, static_cast<int>(q) - 1);
        int done = 0;
        while (done < 25) {
            Poly num(4), den(4);
            for (auto& c : num) c = coef(rng);
            for (auto& c : den) c = coef(rng);
            num = ffp::trim(std::move(num));
            den = ffp::trim(std::move(den));
            if (num.empty() || den.empty()) continue;
            ++done;
            RatFunc x = ffp::normalize(F, num, den);
            long long total = 0;
            for (const auto& v : places) total += v.degree * ffp::valuation(F, x, v);
            CHECK(total == 0);
        }
    }
}

TEST_CASE("necklace identity: sum of d * N_d over d | n equals q^n") {
    for (long long q : {2, 3, 4}) {
        Fq F(q);
        auto irr = ffp::irreducibles_up_to(F, 6);
        for (int n = 1; n <= 6; ++n) {
            long long sieved = 0;
            for (const auto& p : irr)
                if (ffp::deg(p) == n) ++sieved;
            CHECK(sieved == ffp::irreducible_count(q, n));
            long long total = 0;
            for (int d = 1; d <= n; ++d)
                if (n % d == 0) total += d * ffp::irreducible_count(q, d);
            long long qn = 1;
            for (int i = 0; i < n; ++i) qn *= q;
            CHECK(total == qn);
        }
    }
}

TEST_CASE("normalize produces monic coprime representatives") {
    Fq F3(3);
    // (2t^2 + 2t) / (2t) = (t + 1) / 1 after normalization
    RatFunc x = ffp::normalize(F3, {0, 2, 2}, {0, 2});
    CHECK(x.den == Poly{1});
    CHECK(x.num == Poly{1, 1});
}
