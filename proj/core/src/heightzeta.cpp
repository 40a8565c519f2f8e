#include "toriczeta/heightzeta.hpp"

#include "toriczeta/gcoh.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include <json.hpp>

namespace tz {

ZSeries ZSeries::one(int zdim, int n_max) {
    ZSeries s;
    s.n_max = n_max;
    s.zdim = zdim;
    s.coef.assign(n_max + 1, {});
    s.coef[0][std::vector<int>(zdim, 0)] = 1;
    return s;
}

void ZSeries::add(int grade, const std::vector<int>& zexp, long long c) {
    if (grade < 0 || grade > n_max) return;
    auto& slot = coef[grade][zexp];
    slot += c;
    if (slot == 0) coef[grade].erase(zexp);
}

ZSeries ZSeries::mul(const ZSeries& o) const {
    if (n_max != o.n_max || zdim != o.zdim)
        throw std::invalid_argument("ZSeries::mul: incompatible series");
    ZSeries r;
    r.n_max = n_max;
    r.zdim = zdim;
    r.coef.assign(n_max + 1, {});
    for (int ga = 0; ga <= n_max; ++ga)
        for (const auto& [ea, ca] : coef[ga])
            for (int gb = 0; ga + gb <= n_max; ++gb)
                for (const auto& [eb, cb] : o.coef[gb]) {
                    std::vector<int> e(zdim);
                    for (int i = 0; i < zdim; ++i) e[i] = ea[i] + eb[i];
                    auto& slot = r.coef[ga + gb][e];
                    slot += ca * cb;
                    if (slot == 0) r.coef[ga + gb].erase(e);
                }
    return r;
}

ZSeries ZSeries::pow(long long k) const {
    ZSeries r = one(zdim, n_max);
    ZSeries b = *this;
    while (k) {
        if (k & 1LL) r = r.mul(b);
        if (k >>= 1LL) b = b.mul(b);
    }
    return r;
}

long long ZSeries::coeff(int grade, const std::vector<int>& zexp) const {
    if (grade < 0 || grade > n_max) return 0;
    auto it = coef[grade].find(zexp);
    return it == coef[grade].end() ? 0 : it->second;
}

namespace heightzeta {
namespace {

// projection of a ray into the dual of the fixed lattice: rho -> F^T rho
std::vector<int> project_ray(const IntMatrix& fixed_basis, const std::vector<long long>& rho) {
    const std::size_t r = fixed_basis.cols();
    std::vector<int> out(r, 0);
    for (std::size_t j = 0; j < r; ++j) {
        Int s = 0;
        for (std::size_t i = 0; i < fixed_basis.rows(); ++i)
            s += fixed_basis.at(i, j) * rho[i];
        out[j] = s.convert_to<int>();
    }
    return out;
}

struct SuborbitExponents {
    std::vector<int> zexp;  // sum of projected rays of the sub-orbit
    int l = 1;              // t-exponent per unit (for phi0)
};

std::vector<SuborbitExponents> suborbit_exponents(const GFan& f, const IntMatrix& fixed_basis,
                                                  const DecompData& dd) {
    std::vector<SuborbitExponents> out;
    const std::size_t r = fixed_basis.cols();
    for (const auto& so : dd.suborbits) {
        SuborbitExponents se;
        se.zexp.assign(r, 0);
        for (int ri : so.ray_indices) {
            auto p = project_ray(fixed_basis, f.rays[ri]);
            for (std::size_t i = 0; i < r; ++i) se.zexp[i] += p[i];
        }
        se.l = so.l;
        out.push_back(std::move(se));
    }
    return out;
}

// multiply multivariate integer polynomials (exponent maps)
using MPoly = std::map<std::vector<int>, long long>;

MPoly mpoly_mul(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto& slot = r[e];
            slot += ca * cb;
            if (slot == 0) r.erase(e);
        }
    return r;
}

IntMatrix fixed_basis_of(const GFan& f) {
    IntMatrix h = gfan::m_action(f);
    return intlat::kernel_basis(h - IntMatrix::identity(f.rank));
}

// eigenvalue-multiplicity vector of a finite-order integer matrix: mults[k]
// is the multiplicity of exp(2 pi i k / e)
std::vector<int> root_of_unity_multiplicities(const IntMatrix& b, int e) {
    const std::size_t n = b.rows();
    std::vector<double> traces(e);
    IntMatrix p = IntMatrix::identity(n);
    for (int j = 0; j < e; ++j) {
        Int t = 0;
        for (std::size_t i = 0; i < n; ++i) t += p.at(i, i);
        traces[j] = t.convert_to<double>();
        p = p * b;
    }
    std::vector<int> mults(e, 0);
    const double pi = std::acos(-1.0);
    int total = 0;
    for (int k = 0; k < e; ++k) {
        std::complex<double> s = 0.0;
        for (int j = 0; j < e; ++j)
            s += traces[j] * std::exp(std::complex<double>(0.0, -2.0 * pi * k * j / e));
        double mu = s.real() / e;
        int m = static_cast<int>(std::lround(mu));
        if (std::abs(mu - m) > 1e-9 || std::abs(s.imag()) > 1e-9 * e)
            throw std::logic_error("eigenvalue multiplicities not integral");
        mults[k] = m;
        total += m;
    }
    if (total != static_cast<int>(n))
        throw std::logic_error("eigenvalue multiplicities do not sum to the rank");
    return mults;
}

// l(M) = lim_{s->1} (s-1)^{rk M^G} prod_j Z(lambda_j q^{-s}) for a
// finite-order action with eigenvalue multiplicities mults
double artin_l_limit(const std::vector<int>& mults, int e, long long q) {
    const double pi = std::acos(-1.0);
    double value = std::pow((1.0 - 1.0 / q) * std::log(static_cast<double>(q)),
                            -static_cast<double>(mults[0]));
    std::complex<double> rest = 1.0;
    for (int k = 1; k < e; ++k) {
        if (mults[k] == 0) continue;
        std::complex<double> lam = std::exp(std::complex<double>(0.0, 2.0 * pi * k / e));
        std::complex<double> z =
            1.0 / ((1.0 - lam / static_cast<double>(q)) * (1.0 - lam));
        for (int m = 0; m < mults[k]; ++m) rest *= z;
    }
    if (std::abs(rest.imag()) > 1e-9)
        throw std::logic_error("artin_l_limit: non-real eigenvalue product");
    return value * rest.real();
}

IntMatrix quotient_action(const GFan& f, const IntMatrix& g_pow,
                          const std::vector<int>& cone) {
    const std::size_t d = static_cast<std::size_t>(f.rank);
    const std::size_t s = cone.size();
    if (s == d) return IntMatrix(0, 0);
    if (s == 0) return g_pow;
    IntMatrix R(d, s);
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t i = 0; i < d; ++i) R.at(i, j) = f.rays[cone[j]][i];
    SnfResult snf = intlat::snf(R);
    IntMatrix uinv = intlat::inverse_unimodular(snf.U);
    IntMatrix comp(d, d - s);  // complement basis of span(R)
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d - s; ++j) comp.at(i, j) = uinv.at(i, s + j);
    IntMatrix proj(d - s, d);  // kills span(R)
    for (std::size_t i = 0; i < d - s; ++i)
        for (std::size_t j = 0; j < d; ++j) proj.at(i, j) = snf.U.at(s + i, j);
    return proj * (g_pow * comp);
}

Int abs_det_shifted(const IntMatrix& a, const Int& qv) {
    // |det(qv I - a)|
    const std::size_t n = a.rows();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = (i == j ? qv : Int(0)) - a.at(i, j);
    return abs(intlat::det(m));
}

long long place_count(long long q, int degree) {
    long long c = ffp::irreducible_count(q, degree);
    if (degree == 1) c += 1;  // the place at infinity
    return c;
}

}  // namespace

long long local_height_exponent(const GFan& f, const PLFunction& phi, const Vec& m) {
    gfan::PhiEvaluator ev(f, phi);
    return ev.eval(m);
}

QPoly q_polynomial(const GFan& f, int fv) {
    QPoly qp;
    DecompData dd = gfan::decomposition_restriction(f, fv);
    qp.vars = dd.suborbits;
    const std::size_t nb = dd.suborbits.size();

    // Q = sum over stable cones sigma of prod_{beta in sigma} X_beta *
    //     prod_{beta not in sigma} (1 - X_beta)
    for (const auto& sc : dd.stable_cones) {
        std::vector<bool> in_sigma(nb, false);
        for (int b : sc.suborbit_ids) in_sigma[b] = true;
        MPoly term;
        term[std::vector<int>(nb, 0)] = 1;
        for (std::size_t b = 0; b < nb; ++b) {
            MPoly factor;
            std::vector<int> e(nb, 0);
            if (in_sigma[b]) {
                e[b] = 1;
                factor[e] = 1;
            } else {
                factor[std::vector<int>(nb, 0)] = 1;
                e[b] = 1;
                factor[e] = -1;
            }
            term = mpoly_mul(term, factor);
        }
        for (const auto& [e, c] : term) {
            auto& slot = qp.coeffs[e];
            slot += c;
            if (slot == 0) qp.coeffs.erase(e);
        }
    }
    return qp;
}

LocalFactor local_factor(const GFan& f, const Place& v, int n_max) {
    const int fv = v.degree;
    IntMatrix F = fixed_basis_of(f);
    const int r = static_cast<int>(F.cols());
    DecompData dd = gfan::decomposition_restriction(f, fv);
    auto exps = suborbit_exponents(f, F, dd);

    LocalFactor lf;
    lf.v = v;
    lf.series = ZSeries::one(r, n_max);

    // prod_beta (1 - z^{fv a_beta} t^{fv l_beta})^{-1}
    for (const auto& se : exps) {
        ZSeries geo = ZSeries::one(r, n_max);
        geo.coef.assign(n_max + 1, {});
        const long long tstep = static_cast<long long>(fv) * se.l;
        std::vector<int> e(r, 0);
        for (long long k = 0; k * tstep <= n_max; ++k) {
            geo.add(static_cast<int>(k * tstep), e, 1);
            for (int i = 0; i < r; ++i) e[i] += fv * se.zexp[i];
        }
        lf.series = lf.series.mul(geo);
    }

    // Q_{Sigma,v} with X_beta -> z^{fv a_beta} t^{fv l_beta}
    QPoly qp = q_polynomial(f, fv);
    ZSeries qs = ZSeries::one(r, n_max);
    qs.coef.assign(n_max + 1, {});
    for (const auto& [mexp, c] : qp.coeffs) {
        long long grade = 0;
        std::vector<int> zexp(r, 0);
        for (std::size_t b = 0; b < mexp.size(); ++b) {
            grade += static_cast<long long>(mexp[b]) * fv * exps[b].l;
            for (int i = 0; i < r; ++i) zexp[i] += mexp[b] * fv * exps[b].zexp[i];
        }
        if (grade <= n_max) qs.add(static_cast<int>(grade), zexp, c);
    }
    lf.series = lf.series.mul(qs);
    return lf;
}

Int height_one_count(const GFan& f) {
    IntMatrix m(f.rank, f.rank);
    for (int i = 0; i < f.rank; ++i)
        for (int j = 0; j < f.rank; ++j)
            m.at(i, j) = (i == j ? Int(f.q) : Int(0)) - f.frobenius.at(i, j);
    return abs(intlat::det(m));
}

std::vector<long long> zeta_coeffs(const GFan& f, int n_max) {
    if (n_max < 0) throw std::invalid_argument("zeta_coeffs: n_max < 0");
    auto diag = gfan::validate(f);
    if (!diag.empty()) throw ScopeError("zeta_coeffs: invalid fan: " + diag.front());

    IntMatrix F = fixed_basis_of(f);
    const int r = static_cast<int>(F.cols());
    ZSeries prod = ZSeries::one(r, n_max);

    // the local factor depends on v only through deg(v): raise each
    // degree-class factor to the number of places of that degree
    for (int k = 1; k <= n_max; ++k) {
        Place rep{true, {}, k};
        ZSeries lf = local_factor(f, rep, n_max).series;
        prod = prod.mul(lf.pow(place_count(f.q, k)));
    }

    // constant-term extraction: keep z-exponent 0
    const Int prefactor = height_one_count(f);
    const long long pf = prefactor.convert_to<long long>();
    std::vector<long long> N(n_max + 1, 0);
    const std::vector<int> zero(r, 0);
    for (int n = 0; n <= n_max; ++n) N[n] = pf * prod.coeff(n, zero);
    return N;
}

Int point_count_residue_field(const GFan& f, int fv) {
    DecompData dd = gfan::decomposition_restriction(f, fv);
    IntMatrix gpow = f.frobenius.pow(static_cast<unsigned long long>(fv));
    Int qv = 1;
    for (int i = 0; i < fv; ++i) qv *= f.q;
    Int total = 0;
    for (const auto& sc : dd.stable_cones) {
        IntMatrix aq = quotient_action(f, gpow, sc.ray_indices);
        total += abs_det_shifted(aq, qv);
    }
    return total;
}

Int c_t_order(const GFan& f) {
    IntMatrix F = fixed_basis_of(f);
    const std::size_t r = F.cols();
    auto orbs = gfan::orbits(f);
    IntMatrix w(r, orbs.size());
    for (std::size_t a = 0; a < orbs.size(); ++a) {
        auto p = project_ray(F, f.rays[orbs[a].rep]);
        for (std::size_t i = 0; i < r; ++i) w.at(i, a) = Int(orbs[a].d_alpha) * p[i];
    }
    FinAb cok = intlat::cokernel(w);
    if (cok.free_rank != 0)
        throw std::logic_error("c_t_order: degree sublattice not of finite index");
    return cok.order();
}

Rat local_density(const GFan& f, int fv) {
    GeomPic pic = gfan::pic_geometric(f);
    IntMatrix bpow = pic.action.pow(static_cast<unsigned long long>(fv));
    Int qv = 1;
    for (int i = 0; i < fv; ++i) qv *= f.q;

    // L_v(1, Pic)^{-1} = det(I - g_v / q_v) = det(q_v I - g_v) / q_v^rank
    Int lnum = intlat::det([&] {
        IntMatrix m(pic.rank, pic.rank);
        for (std::size_t i = 0; i < pic.rank; ++i)
            for (std::size_t j = 0; j < pic.rank; ++j)
                m.at(i, j) = (i == j ? qv : Int(0)) - bpow.at(i, j);
        return m;
    }());
    Int qvr = 1;
    for (std::size_t i = 0; i < pic.rank; ++i) qvr *= qv;

    Int count = point_count_residue_field(f, fv);
    Int qvd = 1;
    for (int i = 0; i < f.rank; ++i) qvd *= qv;

    return Rat(lnum, qvr) * Rat(count, qvd);
}

void peyre_constant(const GFan& f, int place_cutoff, ZetaReport& rep) {
    if (place_cutoff < 1) throw std::invalid_argument("peyre_constant: cutoff < 1");
    PicardData pic = gfan::picard(f);
    rep.q = f.q;
    rep.pole_order = pic.pic_rank;
    rep.alpha_star = conegf::xi_alpha(pic);
    rep.beta = gcoh::beta(f);
    for (const auto& o : gfan::orbits(f)) rep.d_alpha.push_back(o.d_alpha);
    rep.C_T_order = c_t_order(f);

    GeomPic gp = gfan::pic_geometric(f);
    auto pic_mults = root_of_unity_multiplicities(gp.action, f.e);
    const double ell_pic = artin_l_limit(pic_mults, f.e, f.q);

    // local densities per residue degree; the density is a function of
    // deg(v) only (constant-field extension)
    double local = 1.0;
    double sum_dev = 0.0;
    for (int k = 1; k <= place_cutoff; ++k) {
        double rho = local_density(f, k).convert_to<double>();
        long long cnt = place_count(f.q, k);
        local *= std::pow(rho, static_cast<double>(cnt));
        sum_dev += std::abs(rho - 1.0) * static_cast<double>(cnt);
    }

    const double qd = std::pow(static_cast<double>(f.q), f.rank);
    double tau = qd * ell_pic * local;

    // tail bound from the degree >= 2 property of Q (prop:convergence): each
    // local factor differs from 1 by at most C q_v^{-2}, and there are fewer
    // than q^k places of degree k
    double C = 0.0;
    for (int fv = 1; fv <= f.e; ++fv) {
        QPoly qp = q_polynomial(f, fv);
        double s = 0.0;
        for (const auto& [e, c] : qp.coeffs)
            if (std::any_of(e.begin(), e.end(), [](int x) { return x != 0; }))
                s += std::abs(static_cast<double>(c));
        C = std::max(C, s);
    }
    const double q = static_cast<double>(f.q);
    double tail = C * std::pow(q, -place_cutoff) / (q - 1.0);
    if (tail > 0.5 || sum_dev > 50.0)
        throw std::logic_error("peyre_constant: nonconvergent configuration");
    rep.tau_H.value = tau;
    rep.tau_H.cutoff = place_cutoff;
    rep.tau_H.error_bound = std::abs(tau) * 4.0 * tail;

    double fact = 1.0;
    for (int i = 2; i <= rep.pole_order - 1; ++i) fact *= i;
    rep.C_star = rep.alpha_star.convert_to<double>() * rep.beta.convert_to<double>() *
                 tau / fact;

    // b(T) = l(X(T)) |C_T| |H^1(G, X(T))| (Ono/Oesterle with trivial Sha)
    auto xt_mults = root_of_unity_multiplicities(gfan::m_action(f), f.e);
    rep.b_T = artin_l_limit(xt_mults, f.e, f.q) * rep.C_T_order.convert_to<double>() *
              pic.h1_gxt.order().convert_to<double>();
}

ZetaReport full_report(const GFan& f, int n_max, int place_cutoff) {
    ZetaReport rep;
    rep.n_max = n_max;
    if (n_max >= 0) rep.N = zeta_coeffs(f, n_max);
    peyre_constant(f, place_cutoff, rep);
    rep.q = f.q;
    return rep;
}

std::string report_json(const ZetaReport& rep) {
    nlohmann::json j;
    j["N"] = rep.N;
    j["pole_order"] = rep.pole_order;
    {
        std::ostringstream os;
        os << rep.alpha_star;
        j["alpha_star"] = os.str();
    }
    j["beta"] = rep.beta.convert_to<long long>();
    j["tau_H"] = {{"value", rep.tau_H.value},
                  {"cutoff", rep.tau_H.cutoff},
                  {"error_bound", rep.tau_H.error_bound}};
    j["C_star"] = rep.C_star;
    j["d_alpha"] = rep.d_alpha;
    j["b_T"] = rep.b_T;
    j["C_T_order"] = rep.C_T_order.convert_to<long long>();
    return j.dump(2);
}

}  // namespace heightzeta
}  // namespace tz
