#include "toriczeta/gcoh.hpp"

#include "toriczeta/gfan.hpp"

namespace tz {
namespace gcoh {
namespace {

IntMatrix norm_matrix(const GLattice& m) {
    const std::size_t n = m.g.rows();
    IntMatrix acc(n, n);
    IntMatrix p = IntMatrix::identity(n);
    for (int i = 0; i < m.e; ++i) {
        acc = acc + p;
        p = p * m.g;
    }
    return acc;
}

void check(const GLattice& m) {
    if (m.g.rows() != m.g.cols()) throw std::invalid_argument("GLattice: g not square");
    if (m.e < 1) throw std::invalid_argument("GLattice: e < 1");
    if (!(m.g.pow(static_cast<unsigned long long>(m.e)) == IntMatrix::identity(m.g.rows())))
        throw std::invalid_argument("GLattice: g^e != identity");
}

// Coordinates of each column of b in the column basis k (must exist).
IntMatrix coords_in_basis(const IntMatrix& k, const IntMatrix& b) {
    IntMatrix c(k.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        std::vector<Int> col(b.rows());
        for (std::size_t i = 0; i < b.rows(); ++i) col[i] = b.at(i, j);
        auto x = intlat::solve(k, col);
        if (!x) throw std::logic_error("gcoh: vector not in expected sublattice");
        for (std::size_t i = 0; i < k.cols(); ++i) c.at(i, j) = (*x)[i];
    }
    return c;
}

FinAb torsion_quotient(const IntMatrix& k, const IntMatrix& image) {
    // k: saturated basis of the ambient kernel/fixed lattice (d x r);
    // image: d x s matrix whose columns lie in span(k). Returns span(k)/span(image).
    if (k.cols() == 0) return FinAb{};
    IntMatrix c = coords_in_basis(k, image);
    FinAb q = intlat::cokernel(c);
    return q;
}

}  // namespace

FinAb h1(const GLattice& m) {
    check(m);
    const std::size_t n = m.g.rows();
    IntMatrix N = norm_matrix(m);
    IntMatrix K = intlat::kernel_basis(N);
    IntMatrix gm1 = m.g - IntMatrix::identity(n);
    FinAb res = torsion_quotient(K, gm1);
    if (res.free_rank != 0) throw std::logic_error("h1: unexpected free rank");
    return res;
}

FinAb h0_tate(const GLattice& m) {
    check(m);
    const std::size_t n = m.g.rows();
    IntMatrix F = intlat::kernel_basis(m.g - IntMatrix::identity(n));
    IntMatrix N = norm_matrix(m);
    FinAb res = torsion_quotient(F, N);
    if (res.free_rank != 0) throw std::logic_error("h0_tate: unexpected free rank");
    return res;
}

Int beta(const GFan& f) {
    GeomPic pic = gfan::pic_geometric(f);
    GLattice m{pic.action, f.e};
    return h1(m).order();
}

}  // namespace gcoh
}  // namespace tz
