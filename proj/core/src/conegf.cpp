#include "toriczeta/conegf.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace tz {
namespace conegf {
namespace {

long long llgcd(long long a, long long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) { long long t = a % b; a = b; b = t; }
    return a;
}

Vec primitive(Vec v) {
    long long g = 0;
    for (long long x : v) g = llgcd(g, x);
    if (g > 1)
        for (long long& x : v) x /= g;
    return v;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

long long dot(const Vec& a, const Vec& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntMatrix cols_of(const std::vector<Vec>& vecs, int dim) {
    IntMatrix m(dim, vecs.size());
    for (std::size_t j = 0; j < vecs.size(); ++j)
        for (int i = 0; i < dim; ++i) m.at(i, j) = vecs[j][i];
    return m;
}

Int det_of(const std::vector<Vec>& gens, int dim) {
    return intlat::det(cols_of(gens, dim));
}

// cpp_rational rejects negative denominators at construction; fix the sign.
Rat rat_of(Int num, Int den) {
    if (den < 0) return Rat(-num, -den);
    return Rat(num, den);
}

// Coordinates of p in the full-rank simplicial cone gens (Cramer).
std::vector<Rat> simplex_coords(const std::vector<Vec>& gens, const Vec& p, int dim) {
    IntMatrix a = cols_of(gens, dim);
    Int d = intlat::det(a);
    if (d == 0) throw std::logic_error("simplex_coords: degenerate cone");
    std::vector<Rat> out(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        IntMatrix aj = a;
        for (int i = 0; i < dim; ++i) aj.at(i, j) = p[i];
        out[j] = rat_of(intlat::det(aj), d);
    }
    return out;
}

// p in cone(gens)? Caratheodory over independent subsets of size <= dim.
bool cone_member(const std::vector<Vec>& gens, const Vec& p, int dim) {
    if (is_zero(p)) return true;
    const int n = static_cast<int>(gens.size());
    for (int k = 1; k <= std::min(dim, n); ++k) {
        // iterate subsets of size k
        std::vector<int> sel;
        std::function<bool(int, int)> rec = [&](int start, int need) -> bool {
            if (need == 0) {
                std::vector<Vec> sub;
                for (int i : sel) sub.push_back(gens[i]);
                // solve sub * x = p over Q; need full column rank k
                IntMatrix A = cols_of(sub, dim);
                // find k independent rows
                // (small sizes: try all row subsets)
                std::vector<int> rows(dim);
                std::iota(rows.begin(), rows.end(), 0);
                std::vector<int> rsel;
                std::function<bool(int, int)> rrec = [&](int rstart, int rneed) -> bool {
                    if (rneed == 0) {
                        IntMatrix S(k, k);
                        for (int ii = 0; ii < k; ++ii)
                            for (int jj = 0; jj < k; ++jj) S.at(ii, jj) = A.at(rsel[ii], jj);
                        Int d = intlat::det(S);
                        if (d == 0) return false;
                        std::vector<Rat> x(k);
                        for (int jj = 0; jj < k; ++jj) {
                            IntMatrix Sj = S;
                            for (int ii = 0; ii < k; ++ii) Sj.at(ii, jj) = p[rsel[ii]];
                            x[jj] = rat_of(intlat::det(Sj), d);
                            if (x[jj] < 0) return false;
                        }
                        // verify the remaining rows
                        for (int r = 0; r < dim; ++r) {
                            Rat s = 0;
                            for (int jj = 0; jj < k; ++jj) s += x[jj] * Rat(A.at(r, jj));
                            if (s != Rat(p[r])) return false;
                        }
                        return true;
                    }
                    for (int r = rstart; r <= dim - rneed; ++r) {
                        rsel.push_back(r);
                        if (rrec(r + 1, rneed - 1)) return true;
                        rsel.pop_back();
                    }
                    return false;
                };
                return rrec(0, k);
            }
            for (int i = start; i <= n - need; ++i) {
                sel.push_back(i);
                if (rec(i + 1, need - 1)) return true;
                sel.pop_back();
            }
            return false;
        };
        if (rec(0, k)) return true;
    }
    return false;
}

Vec cross3(const Vec& a, const Vec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::vector<Vec> dedup(std::vector<Vec> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// saturated basis of the span of vecs, as columns (dim x r)
IntMatrix span_basis(const std::vector<Vec>& vecs, int dim) {
    IntMatrix A = cols_of(vecs, dim);
    SnfResult s = intlat::snf(A);
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(A.rows(), A.cols()); ++i)
        if (s.D.at(i, i) != 0) ++r;
    IntMatrix uinv = intlat::inverse_unimodular(s.U);
    IntMatrix B(dim, r);
    for (int i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < r; ++j) B.at(i, j) = uinv.at(i, j);
    return B;
}

}  // namespace

std::vector<Vec> dual_cone(const std::vector<Vec>& gens, int dim) {
    if (dim < 1 || dim > 3) throw ScopeError("dual_cone: dimension must be 1..3");
    std::vector<Vec> normals;
    auto consider = [&](Vec n) {
        if (is_zero(n)) return;
        n = primitive(n);
        bool ok_pos = true, ok_neg = true;
        for (const Vec& g : gens) {
            long long d = dot(n, g);
            if (d < 0) ok_pos = false;
            if (d > 0) ok_neg = false;
        }
        if (ok_pos) normals.push_back(n);
        if (ok_neg) {
            Vec m(n.size());
            for (std::size_t i = 0; i < n.size(); ++i) m[i] = -n[i];
            normals.push_back(m);
        }
    };

    if (dim == 1) {
        for (const Vec& g : gens) consider(g);
    } else if (dim == 2) {
        for (const Vec& g : gens) consider(Vec{g[1], -g[0]});
    } else {
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j) consider(cross3(gens[i], gens[j]));
    }
    normals = dedup(std::move(normals));
    if (normals.empty()) throw ScopeError("dual_cone: cone is not strictly convex or not full-dimensional");
    // certificate: the sum of dual generators must be strictly positive on gens
    Vec lambda(dim, 0);
    for (const Vec& n : normals)
        for (int i = 0; i < dim; ++i) lambda[i] += n[i];
    for (const Vec& g : gens)
        if (!is_zero(g) && dot(lambda, g) <= 0)
            throw ScopeError("dual_cone: cone is not strictly convex");
    return normals;
}

Vec positive_functional(const std::vector<Vec>& vecs, int dim) {
    std::vector<Vec> nz;
    for (const Vec& v : vecs)
        if (!is_zero(v)) nz.push_back(v);
    if (nz.empty()) return Vec(dim, 0);

    IntMatrix B = span_basis(nz, dim);
    const int r = static_cast<int>(B.cols());
    if (r > 3) throw ScopeError("positive_functional: span dimension above 3");

    // coordinates of each vector in the span basis
    std::vector<Vec> coords;
    for (const Vec& v : nz) {
        std::vector<Int> b(v.begin(), v.end());
        auto x = intlat::solve(B, b);
        if (!x) throw std::logic_error("positive_functional: span basis failure");
        Vec c(r);
        for (int i = 0; i < r; ++i) c[i] = (*x)[i].convert_to<long long>();
        coords.push_back(c);
    }
    std::vector<Vec> duals = dual_cone(coords, r);
    Vec lam_r(r, 0);
    for (const Vec& n : duals)
        for (int i = 0; i < r; ++i) lam_r[i] += n[i];
    for (const Vec& c : coords)
        if (dot(lam_r, c) <= 0) throw ScopeError("positive_functional: vectors not strictly convex");

    std::vector<Int> rhs(lam_r.begin(), lam_r.end());
    auto lam = intlat::solve(B.transpose(), rhs);
    if (!lam) throw std::logic_error("positive_functional: pullback failed");
    Vec out(dim);
    for (int i = 0; i < dim; ++i) out[i] = (*lam)[i].convert_to<long long>();
    return out;
}

UniFan triangulate_unimodular(const std::vector<Vec>& generators) {
    if (generators.empty()) throw ScopeError("triangulate_unimodular: no generators");
    const int dim = static_cast<int>(generators[0].size());
    std::vector<Vec> gens;
    for (const Vec& g : generators) {
        if (static_cast<int>(g.size()) != dim)
            throw std::invalid_argument("triangulate_unimodular: ragged generators");
        if (!is_zero(g)) gens.push_back(primitive(g));
    }
    gens = dedup(std::move(gens));
    if (gens.empty()) throw ScopeError("triangulate_unimodular: zero cone");

    // convexity check (throws if not strictly convex)
    positive_functional(gens, dim);

    IntMatrix B = span_basis(gens, dim);
    const int r = static_cast<int>(B.cols());
    if (r > 3) throw ScopeError("triangulate_unimodular: cones of dimension above 3 unsupported");

    std::vector<Vec> cg;  // generators in span coordinates
    for (const Vec& g : gens) {
        std::vector<Int> b(g.begin(), g.end());
        auto x = intlat::solve(B, b);
        if (!x) throw std::logic_error("triangulate_unimodular: span coordinate failure");
        Vec c(r);
        for (int i = 0; i < r; ++i) c[i] = (*x)[i].convert_to<long long>();
        cg.push_back(c);
    }

    // drop generators interior to the cone of the others
    std::vector<Vec> extremal;
    for (std::size_t i = 0; i < cg.size(); ++i) {
        std::vector<Vec> others;
        for (std::size_t j = 0; j < cg.size(); ++j)
            if (j != i) others.push_back(cg[j]);
        if (others.empty() || !cone_member(others, cg[i], r)) extremal.push_back(cg[i]);
    }
    if (static_cast<int>(extremal.size()) < r)
        throw std::logic_error("triangulate_unimodular: extremal ray extraction failed");
    if (static_cast<int>(extremal.size()) > r) {
        if (r < 2) throw std::logic_error("triangulate_unimodular: inconsistent 1-d cone");
        if (r == 3)
            throw ScopeError(
                "triangulate_unimodular: 3-d cones with more than 3 extreme rays unsupported");
        // r == 2 with > 2 extremal rays cannot happen after redundancy removal
        throw std::logic_error("triangulate_unimodular: 2-d cone with >2 extreme rays");
    }

    std::vector<std::vector<Vec>> cones{extremal};
    for (;;) {
        std::size_t bad = cones.size();
        for (std::size_t c = 0; c < cones.size(); ++c) {
            Int d = det_of(cones[c], r);
            if (abs(d) > 1) { bad = c; break; }
        }
        if (bad == cones.size()) break;

        // lattice point in the half-open parallelepiped of the bad cone,
        // minimal coefficient sum, then lexicographically smallest
        const auto& sigma = cones[bad];
        Vec lo(r, 0), hi(r, 0);
        for (int i = 0; i < r; ++i)
            for (const Vec& g : sigma) {
                if (g[i] < 0) lo[i] += g[i];
                else hi[i] += g[i];
            }
        Vec best;
        std::vector<Rat> best_coords;
        Rat best_sum = 0;
        Vec p(r, 0);
        std::function<void(int)> scan = [&](int i) {
            if (i == r) {
                if (is_zero(p)) return;
                auto s = simplex_coords(sigma, p, r);
                Rat sum = 0;
                for (const Rat& x : s) {
                    if (x < 0 || x >= 1) return;
                    sum += x;
                }
                if (best.empty() || sum < best_sum || (sum == best_sum && p < best)) {
                    best = p;
                    best_coords = s;
                    best_sum = sum;
                }
                return;
            }
            for (long long v = lo[i]; v <= hi[i]; ++v) {
                p[i] = v;
                scan(i + 1);
            }
            p[i] = 0;
        };
        scan(0);
        if (best.empty()) throw std::logic_error("triangulate_unimodular: no subdivision point");
        Vec w = primitive(best);

        std::vector<std::vector<Vec>> next;
        for (const auto& c : cones) {
            auto s = simplex_coords(c, w, r);
            bool inside = std::all_of(s.begin(), s.end(), [](const Rat& x) { return x >= 0; });
            bool is_gen = std::find(c.begin(), c.end(), w) != c.end();
            if (!inside || is_gen) {
                next.push_back(c);
                continue;
            }
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (s[i] == 0) continue;
                auto nc = c;
                nc[i] = w;
                next.push_back(std::move(nc));
            }
        }
        cones = std::move(next);
    }

    // map back to the ambient lattice
    UniFan fan;
    fan.dim = dim;
    for (const auto& c : cones) {
        std::vector<Vec> amb;
        for (const Vec& g : c) {
            std::vector<Int> x(g.begin(), g.end());
            auto y = intlat::apply(B, x);
            Vec v(dim);
            for (int i = 0; i < dim; ++i) v[i] = y[i].convert_to<long long>();
            amb.push_back(v);
        }
        fan.cones.push_back(std::move(amb));
    }
    fan.support_gens = gens;
    return fan;
}

}  // namespace conegf

std::vector<std::vector<Vec>> UniFan::all_faces() const {
    std::set<std::vector<Vec>> faces;
    for (const auto& c : cones) {
        const std::size_t k = c.size();
        for (std::size_t mask = 0; mask < (1ULL << k); ++mask) {
            std::vector<Vec> f;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (1ULL << b)) f.push_back(c[b]);
            std::sort(f.begin(), f.end());
            faces.insert(f);
        }
    }
    return {faces.begin(), faces.end()};
}

namespace conegf {

ConeSeries cone_series_rational(const UniFan& delta) {
    ConeSeries s;
    s.mode = ConeSeries::Mode::Exact;
    for (const auto& face : delta.all_faces()) {
        ExactTerm t;
        t.coeff = 1;
        t.offset = Vec(delta.dim, 0);
        for (const Vec& g : face) {
            for (int i = 0; i < delta.dim; ++i) t.offset[i] += g[i];
            t.denoms.push_back(g);
        }
        s.terms.push_back(std::move(t));
    }
    return s;
}

ConeSeries trunc_one(const Vec& grading, int n_max) {
    ConeSeries s;
    s.mode = ConeSeries::Mode::Truncated;
    s.grading = grading;
    s.n_max = n_max;
    s.coef.assign(n_max + 1, {});
    s.coef[0][Vec(grading.size(), 0)] = 1;
    return s;
}

void trunc_add_monomial(ConeSeries& s, const Vec& expo, long long c) {
    long long g = dot(s.grading, expo);
    if (g < 0) throw std::logic_error("trunc_add_monomial: negative grade");
    if (g > s.n_max) return;
    auto& slot = s.coef[g][expo];
    slot += c;
    if (slot == 0) s.coef[g].erase(expo);
}

ConeSeries trunc_mul(const ConeSeries& a, const ConeSeries& b) {
    if (a.grading != b.grading || a.n_max != b.n_max)
        throw std::invalid_argument("trunc_mul: incompatible series");
    ConeSeries r;
    r.mode = ConeSeries::Mode::Truncated;
    r.grading = a.grading;
    r.n_max = a.n_max;
    r.coef.assign(a.n_max + 1, {});
    for (int ga = 0; ga <= a.n_max; ++ga)
        for (const auto& [ea, ca] : a.coef[ga])
            for (int gb = 0; ga + gb <= a.n_max; ++gb)
                for (const auto& [eb, cb] : b.coef[gb]) {
                    Vec e(ea.size());
                    for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                    auto& slot = r.coef[ga + gb][e];
                    slot += ca * cb;
                    if (slot == 0) r.coef[ga + gb].erase(e);
                }
    return r;
}

ConeSeries expand(const ConeSeries& exact, const Vec& grading, int n_max) {
    if (exact.mode != ConeSeries::Mode::Exact)
        throw std::invalid_argument("expand: exact-mode input required");
    ConeSeries out = trunc_one(grading, n_max);
    out.coef.assign(n_max + 1, {});
    for (const ExactTerm& t : exact.terms) {
        ConeSeries term = trunc_one(grading, n_max);
        term.coef.assign(n_max + 1, {});
        long long g0 = dot(grading, t.offset);
        if (g0 < 0 || (g0 == 0 && !is_zero(t.offset)))
            throw std::logic_error("expand: grading not positive on offset");
        if (g0 <= n_max) term.coef[g0][t.offset] = t.coeff;
        for (const Vec& rho : t.denoms) {
            long long gr = dot(grading, rho);
            if (gr <= 0) throw std::logic_error("expand: grading not positive on denominator");
            ConeSeries geo = trunc_one(grading, n_max);
            geo.coef.assign(n_max + 1, {});
            Vec e(rho.size(), 0);
            for (long long k = 0; k * gr <= n_max; ++k) {
                geo.coef[k * gr][e] = 1;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += rho[i];
            }
            term = trunc_mul(term, geo);
        }
        for (int g = 0; g <= n_max; ++g)
            for (const auto& [e, c] : term.coef[g]) {
                auto& slot = out.coef[g][e];
                slot += c;
                if (slot == 0) out.coef[g].erase(e);
            }
    }
    return out;
}

Rat xi_alpha(const PicardData& pic) {
    const int r = pic.pic_rank;
    if (r < 1) throw ScopeError("xi_alpha: Picard rank must be >= 1");
    if (r > 3) throw ScopeError("xi_alpha: Picard rank above 3 unsupported");
    std::vector<Vec> gens;
    for (const auto& g : pic.effective_cone_gens) {
        Vec v(r);
        for (int i = 0; i < r; ++i) v[i] = g[i].convert_to<long long>();
        if (!is_zero(v)) gens.push_back(primitive(v));
    }
    std::vector<Vec> dual = dual_cone(dedup(gens), r);
    UniFan tri = triangulate_unimodular(dual);

    Vec mk(r);
    for (int i = 0; i < r; ++i) mk[i] = pic.anticanonical_class[i].convert_to<long long>();

    Rat total = 0;
    for (const auto& cone : tri.cones) {
        Rat prod = 1;
        for (const Vec& rho : cone) {
            long long pairing = dot(rho, mk);
            if (pairing <= 0)
                throw ScopeError("xi_alpha: anticanonical class not interior to the effective cone");
            prod /= pairing;
        }
        total += prod;
    }
    return total;
}

ShiftedDecomposition decompose_shifted(const std::vector<Vec>& delta,
                                       const IntMatrix& lambda_basis,
                                       const std::vector<int>& K, const Vec& z) {
    const int d = static_cast<int>(lambda_basis.rows());
    IntMatrix lam_inv = intlat::inverse_unimodular(lambda_basis);
    auto lam_coords = [&](const Vec& v) {
        std::vector<Int> x(v.begin(), v.end());
        auto y = intlat::apply(lam_inv, x);
        Vec c(d);
        for (int i = 0; i < d; ++i) c[i] = y[i].convert_to<long long>();
        return c;
    };

    for (const Vec& rho : delta)
        for (long long c : lam_coords(rho))
            if (c < 0) throw std::invalid_argument("decompose_shifted: delta not inside Lambda");
    Vec zc = lam_coords(z);
    for (long long c : zc)
        if (c < 0) throw std::invalid_argument("decompose_shifted: z not in Lambda");

    ShiftedDecomposition out;
    std::vector<int> S;  // complement of delta(1)_K
    for (std::size_t l = 0; l < delta.size(); ++l) {
        Vec c = lam_coords(delta[l]);
        bool in_k_kernel = true;
        for (int i : K)
            if (c[i] != 0) in_k_kernel = false;
        if (in_k_kernel) out.delta1K.push_back(static_cast<int>(l));
        else S.push_back(static_cast<int>(l));
    }

    if (K.empty() || S.empty()) return out;  // F = empty set

    long long bound = 0;
    for (int i : K) bound = std::max(bound, zc[i]);
    if (bound <= 0) return out;

    std::vector<long long> mu(S.size(), 1);
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == S.size()) {
            Vec y(d, 0);
            for (std::size_t j = 0; j < S.size(); ++j)
                for (int i = 0; i < d; ++i) y[i] += mu[j] * delta[S[j]][i];
            Vec yc = lam_coords(y);
            for (int i : K)
                if (yc[i] >= zc[i]) return;
            out.F.push_back(y);
            return;
        }
        for (long long v = 1; v <= bound; ++v) {
            mu[pos] = v;
            rec(pos + 1);
        }
        mu[pos] = 1;
    };
    rec(0);
    std::sort(out.F.begin(), out.F.end());
    return out;
}

ConeSeries ct_restrict(const ConeSeries& s, const IntMatrix& sublattice) {
    if (s.mode != ConeSeries::Mode::Truncated)
        throw std::invalid_argument("ct_restrict: truncated-mode series required");
    if (!intlat::is_saturated(sublattice))
        throw ScopeError("ct_restrict: sublattice not saturated");
    ConeSeries out = s;
    for (auto& table : out.coef) {
        for (auto it = table.begin(); it != table.end();) {
            std::vector<Int> e(it->first.begin(), it->first.end());
            if (intlat::in_column_span(sublattice, e)) ++it;
            else it = table.erase(it);
        }
    }
    return out;
}

}  // namespace conegf
}  // namespace tz
