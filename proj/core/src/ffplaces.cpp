#include "toriczeta/ffplaces.hpp"

#include <algorithm>
#include <stdexcept>

namespace tz {

namespace {

// arithmetic on F_p coefficient vectors (low-first), used only to build Fq
std::vector<int> fp_polymul(const std::vector<int>& f, const std::vector<int>& g, int p) {
    if (f.empty() || g.empty()) return {};
    std::vector<int> r(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            r[i + j] = (r[i + j] + f[i] * g[j]) % p;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<int> fp_polymod(std::vector<int> f, const std::vector<int>& m, int p) {
    // m monic
    while (f.size() >= m.size() && !f.empty()) {
        int lead = f.back();
        std::size_t shift = f.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            int& c = f[shift + i];
            c = ((c - lead * m[i]) % p + p) % p;
        }
        while (!f.empty() && f.back() == 0) f.pop_back();
    }
    return f;
}

bool fp_irreducible(const std::vector<int>& f, int p) {
    // trial division by all monic polynomials of degree <= deg(f)/2
    int d = static_cast<int>(f.size()) - 1;
    for (int dd = 1; dd <= d / 2; ++dd) {
        long long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            std::vector<int> g(dd + 1, 0);
            long long c = code;
            for (int i = 0; i < dd; ++i) { g[i] = static_cast<int>(c % p); c /= p; }
            g[dd] = 1;
            if (fp_polymod(f, g, p).empty()) return false;
        }
    }
    return true;
}

int encode(const std::vector<int>& digits, int p) {
    int v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) v = v * p + digits[i];
    return v;
}

std::vector<int> decode(int code, int p, int a) {
    std::vector<int> d(a, 0);
    for (int i = 0; i < a; ++i) { d[i] = code % p; code /= p; }
    return d;
}

}  // namespace

Fq::Fq(long long q) : q_(q) {
    if (q < 2 || q > 16) throw std::invalid_argument("Fq: q must be in [2, 16]");
    int p = 2;
    while (q % p != 0) ++p;
    long long r = q;
    int a = 0;
    while (r % p == 0) { r /= p; ++a; }
    if (r != 1) throw std::invalid_argument("Fq: q is not a prime power");
    p_ = p;
    a_ = a;

    // smallest monic irreducible of degree a over F_p (lex by low coefficients)
    modpoly_.assign(a + 1, 0);
    modpoly_[a] = 1;
    if (a > 1) {
        bool found = false;
        long long count = 1;
        for (int i = 0; i < a; ++i) count *= p;
        for (long long code = 0; code < count && !found; ++code) {
            std::vector<int> f(a + 1, 0);
            long long c = code;
            for (int i = 0; i < a; ++i) { f[i] = static_cast<int>(c % p); c /= p; }
            f[a] = 1;
            if (fp_irreducible(f, p)) {
                modpoly_ = f;
                found = true;
            }
        }
        if (!found) throw std::logic_error("Fq: no irreducible found");
    }

    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    for (int x = 0; x < q_; ++x) {
        auto dx = decode(x, p_, a_);
        std::vector<int> nx(a_);
        for (int i = 0; i < a_; ++i) nx[i] = (p_ - dx[i]) % p_;
        neg_[x] = encode(nx, p_);
        for (int y = 0; y < q_; ++y) {
            auto dy = decode(y, p_, a_);
            std::vector<int> s(a_);
            for (int i = 0; i < a_; ++i) s[i] = (dx[i] + dy[i]) % p_;
            add_[x * q_ + y] = encode(s, p_);
            auto prod = fp_polymod(fp_polymul(dx, dy, p_), modpoly_, p_);
            prod.resize(a_, 0);
            mul_[x * q_ + y] = encode(prod, p_);
        }
    }
    for (int x = 1; x < q_; ++x)
        for (int y = 1; y < q_; ++y)
            if (mul_[x * q_ + y] == 1) { inv_[x] = y; break; }
}

int Fq::inv(int x) const {
    if (x == 0) throw std::domain_error("Fq::inv(0)");
    return inv_[x];
}

int Fq::pow(int x, long long k) const {
    int r = 1, b = x;
    while (k) {
        if (k & 1) r = mul(r, b);
        b = mul(b, b);
        k >>= 1;
    }
    return r;
}

namespace ffp {

int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Poly add(const Fq& F, const Poly& f, const Poly& g) {
    Poly r(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        int a = i < f.size() ? f[i] : 0;
        int b = i < g.size() ? g[i] : 0;
        r[i] = F.add(a, b);
    }
    return trim(std::move(r));
}

Poly sub(const Fq& F, const Poly& f, const Poly& g) {
    Poly r(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        int a = i < f.size() ? f[i] : 0;
        int b = i < g.size() ? g[i] : 0;
        r[i] = F.sub(a, b);
    }
    return trim(std::move(r));
}

Poly mul(const Fq& F, const Poly& f, const Poly& g) {
    if (f.empty() || g.empty()) return {};
    Poly r(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(f[i], g[j]));
    }
    return trim(std::move(r));
}

Poly scale(const Fq& F, const Poly& f, int c) {
    Poly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = F.mul(f[i], c);
    return trim(std::move(r));
}

std::pair<Poly, Poly> divmod(const Fq& F, const Poly& f, const Poly& g) {
    if (g.empty()) throw std::domain_error("divmod by zero polynomial");
    Poly rem = f, quo(f.size(), 0);
    int ginv = F.inv(g.back());
    while (rem.size() >= g.size() && !rem.empty()) {
        int c = F.mul(rem.back(), ginv);
        std::size_t shift = rem.size() - g.size();
        quo[shift] = c;
        for (std::size_t i = 0; i < g.size(); ++i)
            rem[shift + i] = F.sub(rem[shift + i], F.mul(c, g[i]));
        rem = trim(std::move(rem));
    }
    return {trim(std::move(quo)), rem};
}

Poly gcd(const Fq& F, Poly f, Poly g) {
    while (!g.empty()) {
        Poly r = divmod(F, f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    return make_monic(F, f);
}

Poly make_monic(const Fq& F, const Poly& f) {
    if (f.empty()) return f;
    return scale(F, f, F.inv(f.back()));
}

bool is_monic(const Fq& F, const Poly& f) {
    (void)F;
    return !f.empty() && f.back() == 1;
}

RatFunc normalize(const Fq& F, const Poly& num, const Poly& den) {
    if (den.empty()) throw std::domain_error("RatFunc: zero denominator");
    Poly g = gcd(F, num, den);
    Poly n = num, d = den;
    if (deg(g) >= 1 || g != Poly{1}) {
        n = divmod(F, num, g).first;
        d = divmod(F, den, g).first;
    }
    int lead = F.inv(d.back());
    return RatFunc{scale(F, n, lead), scale(F, d, lead)};
}

std::vector<Poly> irreducibles_up_to(const Fq& F, int D) {
    std::vector<Poly> irr;
    for (int d = 1; d <= D; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= F.q();
        for (long long code = 0; code < count; ++code) {
            Poly f(d + 1, 0);
            long long c = code;
            for (int i = 0; i < d; ++i) { f[i] = static_cast<int>(c % F.q()); c /= F.q(); }
            f[d] = 1;
            bool divisible = false;
            for (const Poly& g : irr) {
                if (deg(g) > d / 2) break;
                if (divmod(F, f, g).second.empty()) { divisible = true; break; }
            }
            if (!divisible) irr.push_back(std::move(f));
        }
    }
    return irr;  // already sorted by (degree, lex code)
}

std::vector<Place> places_up_to(const Fq& F, int D) {
    if (D < 1) throw std::invalid_argument("places_up_to: D < 1");
    std::vector<Place> out;
    auto irr = irreducibles_up_to(F, D);
    std::size_t i = 0;
    for (int d = 1; d <= D; ++d) {
        while (i < irr.size() && deg(irr[i]) == d) {
            out.push_back(Place{true, irr[i], d});
            ++i;
        }
        if (d == 1) out.push_back(Place{false, {}, 1});
    }
    return out;
}

int valuation(const Fq& F, const RatFunc& x, const Place& v) {
    if (x.num.empty()) throw std::domain_error("valuation of 0");
    if (!v.finite) return deg(x.den) - deg(x.num);
    auto count = [&](Poly f) {
        int c = 0;
        for (;;) {
            auto [q, r] = divmod(F, f, v.poly);
            if (!r.empty()) return c;
            ++c;
            f = q;
            if (f.empty()) return c;
        }
    };
    return count(x.num) - count(x.den);
}

std::vector<std::pair<Poly, int>> factor(const Fq& F, const Poly& f) {
    if (f.empty()) throw std::domain_error("factor(0)");
    std::vector<std::pair<Poly, int>> out;
    Poly g = make_monic(F, f);
    auto irr = irreducibles_up_to(F, deg(g));
    for (const Poly& p : irr) {
        if (deg(g) < deg(p)) break;
        int mult = 0;
        for (;;) {
            auto [q, r] = divmod(F, g, p);
            if (!r.empty()) break;
            ++mult;
            g = q;
        }
        if (mult) out.emplace_back(p, mult);
        if (deg(g) == 0) break;
    }
    return out;
}

std::vector<Rat> zeta_series(long long q, const Rat& lambda, int n_max) {
    // 1/((1-lu)(1-qlu)): coefficient of u^n is l^n (q^{n+1}-1)/(q-1)
    std::vector<Rat> out;
    Rat lpow = 1;
    Int qpow = q;
    for (int n = 0; n <= n_max; ++n) {
        out.push_back(lpow * Rat(qpow - 1, q - 1));
        lpow *= lambda;
        qpow *= q;
    }
    return out;
}

long long irreducible_count(long long q, int n) {
    // (1/n) sum_{d | n} mu(d) q^{n/d}
    auto mobius = [](int m) {
        int mu = 1;
        for (int p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                m /= p;
                if (m % p == 0) return 0;
                mu = -mu;
            }
        if (m > 1) mu = -mu;
        return mu;
    };
    long long s = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        long long qp = 1;
        for (int i = 0; i < n / d; ++i) qp *= q;
        s += mobius(d) * qp;
    }
    return s / n;
}

}  // namespace ffp
}  // namespace tz
