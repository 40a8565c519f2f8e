#pragma once

#include "toriczeta/conegf.hpp"
#include "toriczeta/ffplaces.hpp"
#include "toriczeta/gfan.hpp"
#include "toriczeta/intlat.hpp"

#include <map>
#include <string>
#include <vector>

namespace tz {

// Truncated series in t with coefficients that are finitely supported integer
// combinations of character monomials z^m, m in the dual of the fixed lattice.
struct ZSeries {
    int n_max = 0;
    int zdim = 0;
    std::vector<std::map<std::vector<int>, long long>> coef;  // grade -> z-exp -> c

    static ZSeries one(int zdim, int n_max);
    void add(int grade, const std::vector<int>& zexp, long long c);
    ZSeries mul(const ZSeries& o) const;
    ZSeries pow(long long k) const;
    long long coeff(int grade, const std::vector<int>& zexp) const;
};

struct LocalFactor {
    Place v;
    ZSeries series;
};

// Q_{Sigma,v}: integer polynomial in variables X_beta, beta in Sigma(1)/G_v.
struct QPoly {
    std::vector<Suborbit> vars;
    std::map<std::vector<int>, long long> coeffs;  // exponent vector -> c
};

struct TauReport {
    double value = 0.0;
    int cutoff = 0;
    double error_bound = 0.0;
};

struct ZetaReport {
    long long q = 0;
    int n_max = -1;
    std::vector<long long> N;
    int pole_order = 0;
    Rat alpha_star = 0;
    Int beta = 1;
    TauReport tau_H;
    double C_star = 0.0;
    double b_T = 0.0;
    Int C_T_order = 1;
    std::vector<int> d_alpha;
};

namespace heightzeta {

// phi(m) by cone location; the local height is H_v = q_v^{phi(m)}.
long long local_height_exponent(const GFan& f, const PLFunction& phi,
                                const Vec& m);

QPoly q_polynomial(const GFan& f, int fv);

// Local Fourier transform of the anticanonical height at a place of degree
// deg(v), truncated at t-grade n_max. Depends on v only through its degree.
LocalFactor local_factor(const GFan& f, const Place& v, int n_max);

// N(0..n_max): Euler product over places, constant-term extraction over the
// character torus, normalized so that N(0) counts height-1 points.
std::vector<long long> zeta_coeffs(const GFan& f, int n_max);

// The character-torus prefactor: #T(F_q) = |det(q I - g)| on N.
Int height_one_count(const GFan& f);

// #X_Sigma(k_v) for a place of residue degree fv (twisted orbit count).
Int point_count_residue_field(const GFan& f, int fv);

// [ (X(T)^G)^dual : < d_alpha rho_alpha > ] in the unramified case.
Int c_t_order(const GFan& f);

// Fills alpha_star, beta, tau_H, C_star, b_T, C_T_order, d_alpha, pole_order.
void peyre_constant(const GFan& f, int place_cutoff, ZetaReport& rep);

ZetaReport full_report(const GFan& f, int n_max, int place_cutoff);

std::string report_json(const ZetaReport& rep);

// Exact local Tamagawa density L_v(1,Pic)^{-1} #X(k_v)/q_v^dim for residue
// degree fv (exposed for the Q-identity audit in the tests).
Rat local_density(const GFan& f, int fv);

}  // namespace heightzeta
}  // namespace tz
