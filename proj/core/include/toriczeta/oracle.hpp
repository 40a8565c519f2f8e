#pragma once

#include "toriczeta/conegf.hpp"
#include "toriczeta/ffplaces.hpp"
#include "toriczeta/gfan.hpp"

#include <string>
#include <vector>

namespace tz {

// Height histogram from brute-force point enumeration, together with the
// soundness certificate (the slope c_min and the degree cap it implies).
struct PointBatch {
    long long q = 0;
    int n_max = 0;
    std::vector<long long> counts;  // counts[n] = #{x : H(x) = q^n}
    int degree_bound = 0;
    Rat c_min = 0;

    std::string to_json() const;
};

namespace oracle {

// c_min with phi0(m) >= c_min * |m|_1 for all m: the minimum of 1/|rho|_1
// over rays, sharpened by phi0 on the +-unit vectors.
Rat phi_slope_lower_bound(const GFan& f);

// All x in (F_q(t)^x)^d of anticanonical height <= q^n, counted exactly.
// degree_override (>= 0) replaces the derived degree cap; used by the
// soundness test that doubles the cap.
PointBatch enumerate_split(const GFan& f, long long q, int n,
                           int degree_override = -1);

// All y in F_{q^e}(t)^x = T(F_q(t)) for a Res_{F_{q^e}(t)/F_q(t)} G_m-type
// torus (X(T) free of rank one over Z[G]); prime q only.
PointBatch enumerate_res_torus(const GFan& f, long long q, int e, int n,
                               int degree_override = -1);

}  // namespace oracle
}  // namespace tz
