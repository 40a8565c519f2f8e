#pragma once

#include "toriczeta/intlat.hpp"

#include <vector>

namespace tz {

// Finite field F_q, q = p^a <= 16. Elements are encoded as integers in
// [0, q): the base-p digits are the coefficients of the representative
// polynomial modulo a fixed irreducible (the lexicographically smallest
// monic irreducible of degree a over F_p).
class Fq {
public:
    explicit Fq(long long q);

    long long q() const { return q_; }
    int p() const { return p_; }
    int a() const { return a_; }

    int add(int x, int y) const { return add_[x * q_ + y]; }
    int sub(int x, int y) const { return add_[x * q_ + neg_[y]]; }
    int neg(int x) const { return neg_[x]; }
    int mul(int x, int y) const { return mul_[x * q_ + y]; }
    int inv(int x) const;
    int pow(int x, long long k) const;
    int frobenius(int x) const { return pow(x, p_); }  // x -> x^p

private:
    long long q_;
    int p_, a_;
    std::vector<int> modpoly_;  // irreducible over F_p, coefficients low-first
    std::vector<int> add_, mul_, neg_, inv_;
};

// Polynomial over Fq: element codes, lowest degree first, no trailing zeros.
using Poly = std::vector<int>;

struct Place {
    bool finite = true;
    Poly poly;       // monic irreducible; empty for infinity
    int degree = 1;  // deg(v); q_v = q^degree

    bool operator==(const Place& o) const {
        return finite == o.finite && poly == o.poly;
    }
};

// x = num/den with den monic and gcd(num, den) = 1 (unit folded into num).
struct RatFunc {
    Poly num, den;
};

namespace ffp {

int deg(const Poly& f);  // deg(0) = -1
Poly trim(Poly f);
Poly add(const Fq& F, const Poly& f, const Poly& g);
Poly sub(const Fq& F, const Poly& f, const Poly& g);
Poly mul(const Fq& F, const Poly& f, const Poly& g);
Poly scale(const Fq& F, const Poly& f, int c);
std::pair<Poly, Poly> divmod(const Fq& F, const Poly& f, const Poly& g);
Poly gcd(const Fq& F, Poly f, Poly g);  // monic gcd
Poly make_monic(const Fq& F, const Poly& f);
bool is_monic(const Fq& F, const Poly& f);

RatFunc normalize(const Fq& F, const Poly& num, const Poly& den);

// All monic irreducibles of each degree <= D.
std::vector<Poly> irreducibles_up_to(const Fq& F, int D);

// Finite places of degree <= D plus infinity; sorted by (degree, lex coeffs),
// infinity last within degree 1.
std::vector<Place> places_up_to(const Fq& F, int D);

int valuation(const Fq& F, const RatFunc& x, const Place& v);

// Factorization into monic irreducibles (with multiplicity) by trial
// division; the constant unit is discarded.
std::vector<std::pair<Poly, int>> factor(const Fq& F, const Poly& f);

// Coefficients of Z_K(lambda u) = prod_v (1 - (lambda u)^{deg v})^{-1}
// = 1/((1 - lambda u)(1 - q lambda u)) through u^{n_max}.
std::vector<Rat> zeta_series(long long q, const Rat& lambda, int n_max);

// #monic irreducibles of degree n (necklace count).
long long irreducible_count(long long q, int n);

}  // namespace ffp
}  // namespace tz
