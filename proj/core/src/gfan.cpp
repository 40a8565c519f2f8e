#include "toriczeta/gfan.hpp"

#include "toriczeta/gcoh.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace tz {

namespace {

long long llgcd(long long a, long long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) { long long t = a % b; a = b; b = t; }
    return a;
}

IntMatrix ray_cols(const GFan& f, const std::vector<int>& idx) {
    IntMatrix m(f.rank, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (int i = 0; i < f.rank; ++i) m.at(i, j) = f.rays[idx[j]][i];
    return m;
}

std::vector<long long> apply_ll(const IntMatrix& g, const std::vector<long long>& v) {
    std::vector<Int> x(v.begin(), v.end());
    std::vector<Int> y = intlat::apply(g, x);
    std::vector<long long> r(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) r[i] = y[i].convert_to<long long>();
    return r;
}

int find_ray(const GFan& f, const std::vector<long long>& v) {
    for (std::size_t i = 0; i < f.rays.size(); ++i)
        if (f.rays[i] == v) return static_cast<int>(i);
    return -1;
}

}  // namespace

void GFan::finalize() {
    // all faces of the maximal cones (subsets are faces: cones are simplicial)
    std::set<std::vector<int>> faces;
    for (auto c : max_cones) {
        std::sort(c.begin(), c.end());
        const std::size_t k = c.size();
        for (std::size_t mask = 0; mask < (1ULL << k); ++mask) {
            std::vector<int> face;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (1ULL << b)) face.push_back(c[b]);
            faces.insert(face);
        }
    }
    cones.assign(faces.begin(), faces.end());
    for (auto& c : max_cones) std::sort(c.begin(), c.end());

    ray_perm.assign(rays.size(), -1);
    if (frobenius.rows() == 0) frobenius = IntMatrix::identity(rank);
    for (std::size_t i = 0; i < rays.size(); ++i)
        ray_perm[i] = find_ray(*this, apply_ll(frobenius, rays[i]));
}

namespace gfan {

std::vector<std::string> validate(const GFan& f) {
    std::vector<std::string> diag;
    if (f.rank < 1) { diag.push_back("rank: must be >= 1"); return diag; }
    if (f.rays.empty()) { diag.push_back("rays: empty"); return diag; }

    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        if (static_cast<int>(f.rays[i].size()) != f.rank) {
            diag.push_back("ray " + std::to_string(i) + ": wrong dimension");
            return diag;
        }
        long long g = 0;
        for (long long x : f.rays[i]) g = llgcd(g, x);
        if (g != 1) diag.push_back("ray " + std::to_string(i) + ": not primitive");
    }
    for (std::size_t i = 0; i < f.rays.size(); ++i)
        for (std::size_t j = i + 1; j < f.rays.size(); ++j)
            if (f.rays[i] == f.rays[j])
                diag.push_back("rays " + std::to_string(i) + "," + std::to_string(j) +
                               ": duplicate");

    if (f.max_cones.empty()) diag.push_back("cones: empty");
    for (std::size_t ci = 0; ci < f.max_cones.size(); ++ci) {
        const auto& c = f.max_cones[ci];
        for (int r : c)
            if (r < 0 || r >= static_cast<int>(f.rays.size())) {
                diag.push_back("cone " + std::to_string(ci) + ": ray index out of range");
                return diag;
            }
        if (static_cast<int>(c.size()) != f.rank) {
            diag.push_back("cone " + std::to_string(ci) +
                           ": maximal cone not full-dimensional (not complete)");
            continue;
        }
        Int d = intlat::det(ray_cols(f, c));
        if (d != 1 && d != -1)
            diag.push_back("cone " + std::to_string(ci) + ": not regular (|det| = " +
                           d.str() + ")");
    }

    // completeness: each ridge ((d-1)-face of a maximal cone) borders exactly 2
    // maximal cones
    std::map<std::vector<int>, int> ridge_count;
    for (const auto& c : f.max_cones) {
        if (static_cast<int>(c.size()) != f.rank) continue;
        for (std::size_t drop = 0; drop < c.size(); ++drop) {
            std::vector<int> ridge;
            for (std::size_t i = 0; i < c.size(); ++i)
                if (i != drop) ridge.push_back(c[i]);
            ridge_count[ridge]++;
        }
    }
    for (const auto& [ridge, cnt] : ridge_count)
        if (cnt != 2) {
            std::ostringstream os;
            os << "completeness: ridge {";
            for (std::size_t i = 0; i < ridge.size(); ++i) os << (i ? "," : "") << ridge[i];
            os << "} borders " << cnt << " maximal cones (expected 2)";
            diag.push_back(os.str());
        }

    // point-location probe on a deterministic sample of directions
    if (diag.empty()) {
        std::vector<IntMatrix> inv;
        for (const auto& c : f.max_cones) inv.push_back(intlat::inverse_unimodular(ray_cols(f, c)));
        unsigned long long state = 0x9e3779b97f4a7c15ULL;
        auto next = [&state]() {
            state ^= state << 13; state ^= state >> 7; state ^= state << 17;
            return state;
        };
        for (int probe = 0; probe < 64; ++probe) {
            std::vector<Int> m(f.rank);
            bool nonzero = false;
            for (int i = 0; i < f.rank; ++i) {
                m[i] = static_cast<long long>(next() % 21) - 10;
                if (m[i] != 0) nonzero = true;
            }
            if (!nonzero) continue;
            bool covered = false;
            for (const auto& iv : inv) {
                auto coords = intlat::apply(iv, m);
                if (std::all_of(coords.begin(), coords.end(),
                                [](const Int& x) { return x >= 0; })) {
                    covered = true;
                    break;
                }
            }
            if (!covered) {
                diag.push_back("completeness: probe direction not covered by any maximal cone");
                break;
            }
        }
    }

    // G-fan conditions
    if (f.frobenius.rows() != static_cast<std::size_t>(f.rank) ||
        f.frobenius.cols() != static_cast<std::size_t>(f.rank)) {
        diag.push_back("frobenius: wrong shape");
        return diag;
    }
    Int dg = intlat::det(f.frobenius);
    if (dg != 1 && dg != -1) diag.push_back("frobenius: not a lattice automorphism");
    if (f.e < 1) diag.push_back("frobenius: order e must be >= 1");
    else if (!(f.frobenius.pow(static_cast<unsigned long long>(f.e)) ==
               IntMatrix::identity(f.rank)))
        diag.push_back("frobenius: g^e != identity (only cyclic constant-field twists supported)");
    for (std::size_t i = 0; i < f.rays.size(); ++i)
        if (f.ray_perm.size() != f.rays.size() || f.ray_perm[i] < 0) {
            diag.push_back("frobenius: does not permute the ray set");
            break;
        }
    if (diag.empty()) {
        std::set<std::vector<int>> cone_set(f.cones.begin(), f.cones.end());
        for (const auto& c : f.cones) {
            std::vector<int> img;
            for (int r : c) img.push_back(f.ray_perm[r]);
            std::sort(img.begin(), img.end());
            if (!cone_set.count(img)) {
                diag.push_back("frobenius: image of a cone is not a cone");
                break;
            }
        }
    }

    if (f.q < 2) diag.push_back("q: must be a prime power >= 2");
    else {
        long long q = f.q;
        long long p = 2;
        while (p * p <= q && q % p != 0) ++p;
        if (q % p != 0) p = q;
        long long r = q;
        while (r % p == 0) r /= p;
        if (r != 1) diag.push_back("q: not a prime power");
    }
    return diag;
}

std::vector<RayOrbit> orbits(const GFan& f) {
    const int n = static_cast<int>(f.rays.size());
    std::vector<RayOrbit> out;
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        RayOrbit o;
        int j = i;
        do {
            seen[j] = true;
            o.ray_indices.push_back(j);
            j = f.ray_perm[j];
        } while (j != i);
        std::sort(o.ray_indices.begin(), o.ray_indices.end());
        o.rep = o.ray_indices.front();
        o.d_alpha = static_cast<int>(o.ray_indices.size());
        out.push_back(std::move(o));
    }
    return out;
}

DecompData decomposition_restriction(const GFan& f, int fv) {
    if (fv < 1) throw std::invalid_argument("decomposition_restriction: fv < 1");
    const int n = static_cast<int>(f.rays.size());
    // permutation induced by g^{fv}; fv only matters mod e
    const int steps = fv % f.e;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int k = 0; k < steps; ++k) {
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) next[i] = f.ray_perm[perm[i]];
        perm = next;
    }

    DecompData dd;
    dd.fv = fv;

    auto orbs = orbits(f);
    std::vector<int> orbit_of(n, -1);
    for (std::size_t a = 0; a < orbs.size(); ++a)
        for (int r : orbs[a].ray_indices) orbit_of[r] = static_cast<int>(a);

    std::vector<int> suborbit_of(n, -1);
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        Suborbit s;
        int j = i;
        do {
            seen[j] = true;
            s.ray_indices.push_back(j);
            j = perm[j];
        } while (j != i);
        std::sort(s.ray_indices.begin(), s.ray_indices.end());
        s.rep = s.ray_indices.front();
        s.l = static_cast<int>(s.ray_indices.size());
        s.parent_orbit = orbit_of[i];
        for (int r : s.ray_indices) suborbit_of[r] = static_cast<int>(dd.suborbits.size());
        dd.suborbits.push_back(std::move(s));
    }

    for (const auto& c : f.cones) {
        std::vector<int> img;
        for (int r : c) img.push_back(perm[r]);
        std::sort(img.begin(), img.end());
        if (img != c) continue;
        StableCone sc;
        sc.ray_indices = c;
        std::set<int> subs;
        for (int r : c) subs.insert(suborbit_of[r]);
        sc.suborbit_ids.assign(subs.begin(), subs.end());
        dd.stable_cones.push_back(std::move(sc));
    }
    return dd;
}

IntMatrix m_action(const GFan& f) {
    return intlat::inverse_unimodular(f.frobenius).transpose();
}

PLFunction phi0(const GFan& f) {
    PLFunction p;
    p.values.assign(orbits(f).size(), 1);
    return p;
}

PicardData picard(const GFan& f) {
    PicardData pd;
    IntMatrix h = m_action(f);
    pd.fixed_basis = intlat::kernel_basis(h - IntMatrix::identity(f.rank));
    const std::size_t r = pd.fixed_basis.cols();
    auto orbs = orbits(f);
    const std::size_t na = orbs.size();

    pd.gamma = IntMatrix(na, r);
    for (std::size_t a = 0; a < na; ++a) {
        const auto& rho = f.rays[orbs[a].rep];
        for (std::size_t j = 0; j < r; ++j) {
            Int s = 0;
            for (int i = 0; i < f.rank; ++i) s += pd.fixed_basis.at(i, j) * rho[i];
            pd.gamma.at(a, j) = s;
        }
    }

    SnfResult s = intlat::snf(pd.gamma);
    std::size_t rank_gamma = 0;
    for (std::size_t i = 0; i < std::min(na, r); ++i)
        if (s.D.at(i, i) != 0) ++rank_gamma;
    if (rank_gamma != r)
        throw std::logic_error("picard: gamma not injective (fan rays do not span)");

    pd.pic_rank = static_cast<int>(na - r);
    pd.pic_proj = IntMatrix(pd.pic_rank, na);
    for (int i = 0; i < pd.pic_rank; ++i)
        for (std::size_t j = 0; j < na; ++j) pd.pic_proj.at(i, j) = s.U.at(r + i, j);

    std::vector<Int> ones(na, 1);
    pd.anticanonical_class = intlat::apply(pd.pic_proj, ones);
    for (std::size_t a = 0; a < na; ++a) {
        std::vector<Int> ea(na, 0);
        ea[a] = 1;
        pd.effective_cone_gens.push_back(intlat::apply(pd.pic_proj, ea));
    }

    pd.h1_gxt = gcoh::h1(GLattice{h, f.e});
    return pd;
}

GeomPic pic_geometric(const GFan& f) {
    const std::size_t n = f.rays.size();
    const std::size_t d = static_cast<std::size_t>(f.rank);
    IntMatrix A(n, d);  // gamma_L: m -> (<m, rho>)_rho
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) A.at(i, j) = f.rays[i][j];

    SnfResult s = intlat::snf(A);
    for (std::size_t i = 0; i < d; ++i)
        if (s.D.at(i, i) != 1)
            throw std::logic_error("pic_geometric: Pic(X_L) not free (fan not smooth complete?)");

    GeomPic gp;
    gp.rank = n - d;
    gp.proj = IntMatrix(gp.rank, n);
    for (std::size_t i = 0; i < gp.rank; ++i)
        for (std::size_t j = 0; j < n; ++j) gp.proj.at(i, j) = s.U.at(d + i, j);

    // section of proj: the trailing columns of U^{-1}
    IntMatrix uinv = intlat::inverse_unimodular(s.U);
    IntMatrix lift(n, gp.rank);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < gp.rank; ++j) lift.at(i, j) = uinv.at(i, d + j);

    // permutation of divisor coordinates: D_rho -> D_{g rho}
    IntMatrix P(n, n);
    for (std::size_t i = 0; i < n; ++i) P.at(f.ray_perm[i], i) = 1;

    gp.action = gp.proj * (P * lift);
    if (!(gp.action.pow(static_cast<unsigned long long>(f.e)) == IntMatrix::identity(gp.rank)))
        throw std::logic_error("pic_geometric: induced action has wrong order");
    return gp;
}

PhiEvaluator::PhiEvaluator(const GFan& f, const PLFunction& phi) : rank_(f.rank) {
    auto orbs = orbits(f);
    std::vector<long long> value_of_ray(f.rays.size(), 0);
    for (std::size_t a = 0; a < orbs.size(); ++a)
        for (int r : orbs[a].ray_indices) value_of_ray[r] = phi.values[a];

    for (const auto& c : f.max_cones) {
        IntMatrix inv = intlat::inverse_unimodular(ray_cols(f, c));
        std::vector<long long> flat(rank_ * rank_);
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                flat[i * rank_ + j] = inv.at(i, j).convert_to<long long>();
        inv_.push_back(std::move(flat));
        std::vector<long long> vals;
        for (int r : c) vals.push_back(value_of_ray[r]);
        vals_.push_back(std::move(vals));
    }
}

long long PhiEvaluator::eval(const std::vector<long long>& m) const {
    for (std::size_t c = 0; c < inv_.size(); ++c) {
        const auto& inv = inv_[c];
        long long coords[8];
        bool inside = true;
        for (int i = 0; i < rank_; ++i) {
            long long s = 0;
            for (int j = 0; j < rank_; ++j) s += inv[i * rank_ + j] * m[j];
            if (s < 0) { inside = false; break; }
            coords[i] = s;
        }
        if (!inside) continue;
        long long v = 0;
        for (int i = 0; i < rank_; ++i) v += coords[i] * vals_[c][i];
        return v;
    }
    throw std::logic_error("PhiEvaluator: point not covered (fan incomplete?)");
}

GFan load_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& ex) {
        throw ValidationError(std::string("fan file: JSON parse error: ") + ex.what());
    }
    GFan f;
    try {
        f.rank = j.at("rank").get<int>();
        f.rays = j.at("rays").get<std::vector<std::vector<long long>>>();
        f.max_cones = j.at("cones").get<std::vector<std::vector<int>>>();
        f.q = j.at("q").get<long long>();
        f.e = j.value("e", 1);
        if (j.contains("frobenius")) {
            auto rows = j.at("frobenius").get<std::vector<std::vector<long long>>>();
            f.frobenius = IntMatrix::from_rows(rows);
        } else {
            f.frobenius = IntMatrix::identity(f.rank);
        }
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception& ex) {
        throw ValidationError(std::string("fan file: missing or malformed field: ") + ex.what());
    }
    for (const auto& c : f.max_cones)
        for (int r : c)
            if (r < 0 || r >= static_cast<int>(f.rays.size()))
                throw ValidationError("fan file: cone ray index out of range");
    f.finalize();
    for (std::size_t i = 0; i < f.rays.size(); ++i)
        if (f.ray_perm[i] < 0)
            throw ValidationError("fan file: frobenius does not permute the rays");
    auto diag = validate(f);
    if (!diag.empty()) {
        std::string msg = "invalid fan:";
        for (const auto& d : diag) msg += "\n  " + d;
        throw ValidationError(msg);
    }
    return f;
}

GFan load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("fan file: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_json_text(ss.str());
}

}  // namespace gfan
}  // namespace tz
