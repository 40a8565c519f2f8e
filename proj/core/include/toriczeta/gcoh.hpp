#pragma once

#include "toriczeta/intlat.hpp"

namespace tz {

struct GFan;

// Lattice with an action of a cyclic group of order e.
struct GLattice {
    IntMatrix g;  // generator action, g^e = identity
    int e = 1;
};

namespace gcoh {

// H^1(G, M) = ker(N_G) / im(g - 1) for cyclic G.
FinAb h1(const GLattice& m);

// Tate H^0(G, M) = M^G / N_G M.
FinAb h0_tate(const GLattice& m);

// |H^1(G, Pic(X_{Sigma,L}))| with the induced Frobenius action.
Int beta(const GFan& f);

}  // namespace gcoh
}  // namespace tz
