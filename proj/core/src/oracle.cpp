#include "toriczeta/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace tz {

std::string PointBatch::to_json() const {
    nlohmann::json j;
    j["q"] = q;
    j["n_max"] = n_max;
    j["counts"] = counts;
    j["degree_bound"] = degree_bound;
    return j.dump(2);
}

namespace oracle {
namespace {

// a monic polynomial with its factorization, keyed by irreducible index
struct Monic {
    Poly p;
    int degree = 0;
    std::map<int, int> fact;
};

std::vector<Monic> monics_up_to(const Fq& F, int B,
                                const std::vector<Poly>& irr) {
    std::map<Poly, int> irr_index;
    for (std::size_t i = 0; i < irr.size(); ++i) irr_index[irr[i]] = static_cast<int>(i);
    std::vector<Monic> out;
    out.push_back(Monic{Poly{1}, 0, {}});
    for (int d = 1; d <= B; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= F.q();
        for (long long code = 0; code < count; ++code) {
            Monic m;
            m.p.assign(d + 1, 0);
            long long c = code;
            for (int i = 0; i < d; ++i) { m.p[i] = static_cast<int>(c % F.q()); c /= F.q(); }
            m.p[d] = 1;
            m.degree = d;
            for (const auto& [pf, mult] : ffp::factor(F, m.p))
                m.fact[irr_index.at(pf)] = mult;
            out.push_back(std::move(m));
        }
    }
    return out;
}

bool coprime(const Monic& a, const Monic& b) {
    for (const auto& [i, m] : a.fact)
        if (b.fact.count(i)) return false;
    return true;
}

long long floor_div(const Rat& x) {
    Int n = boost::multiprecision::numerator(x);
    Int d = boost::multiprecision::denominator(x);
    Int q = n / d;
    if (q * d > n) --q;  // cpp_int division truncates toward zero
    return q.convert_to<long long>();
}

long long pow_ll(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

Rat phi_slope_lower_bound(const GFan& f) {
    Rat c = 0;
    bool first = true;
    for (const auto& rho : f.rays) {
        long long n1 = 0;
        for (long long x : rho) n1 += std::llabs(x);
        Rat cand(1, n1);
        if (first || cand < c) { c = cand; first = false; }
    }
    gfan::PhiEvaluator ev(f, gfan::phi0(f));
    for (int i = 0; i < f.rank; ++i)
        for (int s : {1, -1}) {
            std::vector<long long> e(f.rank, 0);
            e[i] = s;
            Rat cand(ev.eval(e), 1);
            if (cand < c) c = cand;
        }
    if (c <= 0) throw ScopeError("oracle: phi0 slope bound is not positive");
    return c;
}

PointBatch enumerate_split(const GFan& f, long long q, int n,
                           int degree_override) {
    if (f.e != 1) throw ScopeError("enumerate_split: fan must be split (e = 1)");
    if (n < 0 || n > 8) throw ScopeError("enumerate_split: n must be in [0, 8]");

    const int d = f.rank;
    Fq F(q);
    Rat c_min = phi_slope_lower_bound(f);
    // H(x) = q^m forces sum_i max(deg f_i, deg g_i) <= m / (2 c_min)
    const int B = degree_override >= 0 ? degree_override
                                       : static_cast<int>(floor_div(Rat(n) / (2 * c_min)));

    PointBatch batch;
    batch.q = q;
    batch.n_max = n;
    batch.counts.assign(n + 1, 0);
    batch.degree_bound = B;
    batch.c_min = c_min;

    auto irr = ffp::irreducibles_up_to(F, std::max(B, 1));
    auto monics = monics_up_to(F, B, irr);
    gfan::PhiEvaluator ev(f, gfan::phi0(f));
    const long long scalars = pow_ll(q - 1, d);

    // coprime (numerator, denominator) index pairs grouped by max-degree
    std::vector<std::vector<std::pair<int, int>>> pairs(B + 1);
    for (std::size_t a = 0; a < monics.size(); ++a)
        for (std::size_t b = 0; b < monics.size(); ++b)
            if (coprime(monics[a], monics[b]))
                pairs[std::max(monics[a].degree, monics[b].degree)]
                    .emplace_back(static_cast<int>(a), static_cast<int>(b));

    std::vector<std::pair<int, int>> chosen(d);
    std::vector<long long> mvec(d);
    auto score = [&](const std::vector<std::pair<int, int>>& x) {
        long long expo = 0;
        // finite places supporting some coordinate
        std::vector<int> support;
        for (const auto& [a, b] : x) {
            for (const auto& [i, m] : monics[a].fact) support.push_back(i);
            for (const auto& [i, m] : monics[b].fact) support.push_back(i);
        }
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());
        for (int pi : support) {
            for (int i = 0; i < d; ++i) {
                const auto& [a, b] = x[i];
                auto fa = monics[a].fact.find(pi);
                auto fb = monics[b].fact.find(pi);
                mvec[i] = (fa == monics[a].fact.end() ? 0 : fa->second) -
                          (fb == monics[b].fact.end() ? 0 : fb->second);
            }
            expo += ffp::deg(irr[pi]) * ev.eval(mvec);
        }
        for (int i = 0; i < d; ++i) {
            const auto& [a, b] = x[i];
            mvec[i] = monics[b].degree - monics[a].degree;
        }
        expo += ev.eval(mvec);
        return expo;
    };

    // recurse over coordinates with the shared degree budget
    auto rec = [&](auto&& self, int i, int budget) -> void {
        if (i == d) {
            long long expo = score(chosen);
            if (expo < 0) throw std::logic_error("enumerate_split: negative height exponent");
            if (expo <= n) batch.counts[expo] += scalars;
            return;
        }
        for (int m = 0; m <= budget; ++m)
            for (const auto& pr : pairs[m]) {
                chosen[i] = pr;
                self(self, i + 1, budget - m);
            }
    };
    rec(rec, 0, B);
    return batch;
}

PointBatch enumerate_res_torus(const GFan& f, long long q, int e, int n,
                               int degree_override) {
    if (n < 0 || n > 6) throw ScopeError("enumerate_res_torus: n must be in [0, 6]");
    if (f.e != e || e < 1) throw ScopeError("enumerate_res_torus: e mismatch");
    if (f.rank != e) throw ScopeError("enumerate_res_torus: X(T) is not Z[G] (rank != e)");
    Fq K(q);
    if (K.a() != 1) throw ScopeError("enumerate_res_torus: base field must be prime");
    const long long qe = pow_ll(q, e);
    if (qe > 16) throw ScopeError("enumerate_res_torus: q^e > 16");

    // a Z[G]-generator w: {w, gw, ..., g^{e-1}w} must be a Z-basis of N
    std::vector<std::vector<long long>> candidates;
    for (int i = 0; i < e; ++i)
        for (int s : {1, -1}) {
            std::vector<long long> v(e, 0);
            v[i] = s;
            candidates.push_back(v);
        }
    for (const auto& rho : f.rays) candidates.push_back(rho);
    std::vector<std::vector<long long>> gw;  // g^i w as rows
    bool found = false;
    for (const auto& w : candidates) {
        gw.assign(e, std::vector<long long>(e));
        IntMatrix m(e, e);
        std::vector<Int> cur(e);
        for (int i = 0; i < e; ++i) cur[i] = w[i];
        for (int i = 0; i < e; ++i) {
            for (int j = 0; j < e; ++j) {
                gw[i][j] = cur[j].convert_to<long long>();
                m.at(j, i) = cur[j];
            }
            cur = intlat::apply(f.frobenius, cur);
        }
        if (abs(intlat::det(m)) == 1) { found = true; break; }
    }
    if (!found)
        throw ScopeError("enumerate_res_torus: X(T) is not free of rank one over Z[G]");

    Rat c_min = phi_slope_lower_bound(f);
    const int M = degree_override >= 0
                      ? degree_override
                      : static_cast<int>(floor_div(Rat(n) / (2 * e * c_min)));

    PointBatch batch;
    batch.q = q;
    batch.n_max = n;
    batch.counts.assign(n + 1, 0);
    batch.degree_bound = M;
    batch.c_min = c_min;

    Fq L(qe);
    gfan::PhiEvaluator ev(f, gfan::phi0(f));
    const long long scalars = qe - 1;

    // distinguished place of L over each finite place of K: the first
    // L-irreducible factor in (degree, lex) order. Prime-field coefficient
    // codes embed into L unchanged.
    struct OverPlace {
        int deg_k = 1;
        Poly lpoly;  // the chosen L-place over it
    };
    std::vector<OverPlace> over;
    for (const Poly& p : ffp::irreducibles_up_to(K, std::max(e * M, 1))) {
        OverPlace op;
        op.deg_k = ffp::deg(p);
        op.lpoly = ffp::factor(L, p).front().first;
        over.push_back(std::move(op));
    }

    auto sigma_pow = [&](const Poly& p, int i) {
        Poly r = p;
        long long qi = pow_ll(q, i);
        for (int& c : r) c = L.pow(c, qi);
        return r;
    };
    auto mult_at = [&](const Poly& p, const Poly& v) {
        int c = 0;
        Poly cur = p;
        for (;;) {
            auto [qq, r] = ffp::divmod(L, cur, v);
            if (!r.empty()) return c;
            ++c;
            cur = qq;
            if (cur.empty()) return c;
        }
    };

    auto irr_l = ffp::irreducibles_up_to(L, std::max(M, 1));
    auto monics = monics_up_to(L, M, irr_l);
    std::vector<long long> mvec(e);
    for (const auto& num : monics)
        for (const auto& den : monics) {
            if (!coprime(num, den)) continue;
            long long expo = 0;
            for (const auto& op : over) {
                bool hit = false;
                std::vector<long long> vals(e, 0);
                for (int i = 0; i < e; ++i) {
                    vals[i] = mult_at(sigma_pow(num.p, i), op.lpoly) -
                              mult_at(sigma_pow(den.p, i), op.lpoly);
                    if (vals[i] != 0) hit = true;
                }
                if (!hit) continue;
                for (int j = 0; j < e; ++j) {
                    mvec[j] = 0;
                    for (int i = 0; i < e; ++i) mvec[j] += vals[i] * gw[i][j];
                }
                expo += op.deg_k * ev.eval(mvec);
            }
            long long vinf = den.degree - num.degree;
            if (vinf != 0) {
                for (int j = 0; j < e; ++j) {
                    mvec[j] = 0;
                    for (int i = 0; i < e; ++i) mvec[j] += vinf * gw[i][j];
                }
                expo += ev.eval(mvec);
            }
            if (expo < 0)
                throw std::logic_error("enumerate_res_torus: negative height exponent");
            if (expo <= n) batch.counts[expo] += scalars;
        }
    return batch;
}

}  // namespace oracle
}  // namespace tz
