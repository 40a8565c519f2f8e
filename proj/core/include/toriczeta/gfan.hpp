#pragma once

#include "toriczeta/intlat.hpp"

#include <string>
#include <vector>

namespace tz {

// Smooth complete fan in N = Z^rank together with a finite-order lattice
// automorphism ("frobenius") of order e permuting the fan, and the size q of
// the base constant field. Models a torus over F_q(t) split by F_{q^e}(t).
struct GFan {
    int rank = 0;
    std::vector<std::vector<long long>> rays;   // primitive vectors in N
    std::vector<std::vector<int>> max_cones;    // sorted ray-index lists
    std::vector<std::vector<int>> cones;        // all faces incl. {0}, dedup
    IntMatrix frobenius;                        // g acting on N
    int e = 1;                                  // order of g
    long long q = 2;

    // index of g(ray i) in rays; filled by finalize()
    std::vector<int> ray_perm;

    void finalize();  // generates faces and ray_perm; call after filling fields
};

struct RayOrbit {
    std::vector<int> ray_indices;
    int rep = 0;      // smallest ray index in the orbit
    int d_alpha = 1;  // orbit size (constant-field case)
};

struct Suborbit {
    std::vector<int> ray_indices;
    int rep = 0;
    int l = 1;             // sub-orbit size l_beta
    int parent_orbit = 0;  // index into orbits()
};

struct StableCone {
    std::vector<int> ray_indices;   // sorted
    std::vector<int> suborbit_ids;  // partition of the cone's rays
};

struct DecompData {
    int fv = 1;
    std::vector<Suborbit> suborbits;
    std::vector<StableCone> stable_cones;  // the set Sigma^{G_v}
};

// Piecewise-linear function determined by one integer per ray orbit.
struct PLFunction {
    std::vector<long long> values;  // indexed like orbits()
};

struct PicardData {
    int pic_rank = 0;
    IntMatrix gamma;        // |orbits| x rank(X(T)^G): m -> (<m, rho_alpha>)_alpha
    IntMatrix fixed_basis;  // rank x r, saturated basis of X(T)^G in M
    IntMatrix pic_proj;     // pic_rank x |orbits|: orbit-divisor -> Pic free part
    std::vector<Int> anticanonical_class;            // class of sum D_alpha
    std::vector<std::vector<Int>> effective_cone_gens;  // classes of D_alpha
    FinAb h1_gxt;           // H^1(G, X(T))
};

// Geometric Picard lattice Pic(X_{Sigma,L}) with the induced Galois action.
struct GeomPic {
    std::size_t rank = 0;
    IntMatrix proj;    // rank x |rays|: divisor vector -> Pic basis
    IntMatrix action;  // induced action of g on Pic
};

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

namespace gfan {

// Empty vector means valid; otherwise one named diagnostic per violation.
std::vector<std::string> validate(const GFan& f);

std::vector<RayOrbit> orbits(const GFan& f);

// Restriction to the decomposition group G_v = <g^{fv}>.
DecompData decomposition_restriction(const GFan& f, int fv);

PicardData picard(const GFan& f);

GeomPic pic_geometric(const GFan& f);

PLFunction phi0(const GFan& f);  // value 1 on every ray (anticanonical)

// Evaluates a PL function by cone location; precomputes cone inverses.
class PhiEvaluator {
public:
    PhiEvaluator(const GFan& f, const PLFunction& phi);
    long long eval(const std::vector<long long>& m) const;

private:
    int rank_;
    // per maximal cone: row-major integer inverse of the ray matrix and the
    // PL values on its rays
    std::vector<std::vector<long long>> inv_;
    std::vector<std::vector<long long>> vals_;
};

// Action of g on the character lattice M (inverse transpose of frobenius).
IntMatrix m_action(const GFan& f);

// Loads the JSON fan format (rank, rays, cones, frobenius?, e?, q) and
// finalizes; throws ValidationError on malformed input or invalid fan.
GFan load_json_file(const std::string& path);
GFan load_json_text(const std::string& text);

}  // namespace gfan
}  // namespace tz
