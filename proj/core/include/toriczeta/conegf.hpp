#pragma once

#include "toriczeta/gfan.hpp"
#include "toriczeta/intlat.hpp"

#include <map>
#include <vector>

namespace tz {

struct ScopeError : std::runtime_error {
    explicit ScopeError(const std::string& msg) : std::runtime_error(msg) {}
};

using Vec = std::vector<long long>;

// Simplicial unimodular cones with pairwise disjoint interiors whose union is
// the support (the cone that was triangulated).
struct UniFan {
    int dim = 0;
    std::vector<std::vector<Vec>> cones;  // maximal cones, generator lists
    std::vector<Vec> support_gens;

    // all faces (generator subsets) of the maximal cones, deduplicated;
    // includes the empty face {0}
    std::vector<std::vector<Vec>> all_faces() const;
};

// Sum over lattice points of a region, either exact or truncated.
struct ExactTerm {
    long long coeff = 1;
    Vec offset;                  // T^{y0}
    std::vector<Vec> denoms;     // prod 1/(1 - T^{rho})
};

struct ConeSeries {
    enum class Mode { Exact, Truncated } mode = Mode::Exact;

    // exact mode
    std::vector<ExactTerm> terms;

    // truncated mode
    Vec grading;  // positive on every exponent that occurs
    int n_max = 0;
    std::vector<std::map<Vec, long long>> coef;  // grade -> exponent -> coeff
};

namespace conegf {

// dual generators of a strictly convex full-dimensional cone, dim <= 3
std::vector<Vec> dual_cone(const std::vector<Vec>& gens, int dim);

// integer functional strictly positive on all given nonzero vectors (they
// must span a strictly convex cone); throws ScopeError otherwise
Vec positive_functional(const std::vector<Vec>& vecs, int dim);

UniFan triangulate_unimodular(const std::vector<Vec>& generators);

// Exact-mode series: sum over all lattice points of the support, grouped by
// relative interior of the faces of delta.
ConeSeries cone_series_rational(const UniFan& delta);

ConeSeries expand(const ConeSeries& exact, const Vec& grading, int n_max);

// alpha* = Xi_{Pic^dual, C_eff^dual}(-K): triangulate the dual effective cone
// and sum prod 1/<rho_l, -K> over maximal cones.
Rat xi_alpha(const PicardData& pic);

struct ShiftedDecomposition {
    std::vector<int> delta1K;   // indices into the cone's generators
    std::vector<Vec> F;         // the finite shift set (origin excluded)
};

// delta: generators of one unimodular cone inside the simplicial cone with
// lattice basis lambda_basis (columns). K: subset of basis indices. z: point
// of the Lambda cone.
ShiftedDecomposition decompose_shifted(const std::vector<Vec>& delta,
                                       const IntMatrix& lambda_basis,
                                       const std::vector<int>& K, const Vec& z);

// Keeps exactly the monomials whose exponent lies in the (saturated)
// sublattice spanned by the columns of sublattice.
ConeSeries ct_restrict(const ConeSeries& s, const IntMatrix& sublattice);

// truncated-series product helpers (shared with tests)
ConeSeries trunc_one(const Vec& grading, int n_max);
void trunc_add_monomial(ConeSeries& s, const Vec& expo, long long c);
ConeSeries trunc_mul(const ConeSeries& a, const ConeSeries& b);

}  // namespace conegf
}  // namespace tz
