#include "toriczeta/intlat.hpp"

#include <algorithm>
#include <sstream>

namespace tz {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in *");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in -");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

IntMatrix IntMatrix::pow(unsigned long long k) const {
    if (rows_ != cols_) throw std::invalid_argument("pow: square matrix required");
    IntMatrix result = identity(rows_);
    IntMatrix base = *this;
    while (k) {
        if (k & 1ULL) result = result * base;
        base = base * base;
        k >>= 1ULL;
    }
    return result;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string FinAb::str() const {
    std::ostringstream os;
    if (is_trivial()) return "0";
    bool first = true;
    for (std::size_t i = 0; i < free_rank; ++i) {
        os << (first ? "" : " + ") << "Z";
        first = false;
    }
    for (const auto& d : invariant_factors) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    return os.str();
}

namespace intlat {
namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += f * m.at(src, j);
}
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) += f * m.at(i, src);
}
void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SnfResult res{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
    IntMatrix& D = res.D;
    IntMatrix& U = res.U;
    IntMatrix& V = res.V;
    const std::size_t nmin = std::min(rows, cols);

    for (std::size_t s = 0; s < nmin; ++s) {
        for (;;) {
            // Smallest nonzero |entry| in the trailing block, first in scan order.
            std::size_t pr = s, pc = s;
            Int best = 0;
            for (std::size_t i = s; i < rows; ++i)
                for (std::size_t j = s; j < cols; ++j) {
                    const Int a = abs(D.at(i, j));
                    if (a != 0 && (best == 0 || a < best)) {
                        best = a;
                        pr = i;
                        pc = j;
                    }
                }
            if (best == 0) break;  // trailing block zero; done at this pivot

            if (pr != s) { swap_rows(D, s, pr); swap_rows(U, s, pr); }
            if (pc != s) { swap_cols(D, s, pc); swap_cols(V, s, pc); }

            bool clean = true;
            for (std::size_t i = s + 1; i < rows; ++i)
                if (D.at(i, s) != 0) {
                    Int f = -(D.at(i, s) / D.at(s, s));
                    add_row(D, i, s, f);
                    add_row(U, i, s, f);
                    if (D.at(i, s) != 0) clean = false;
                }
            for (std::size_t j = s + 1; j < cols; ++j)
                if (D.at(s, j) != 0) {
                    Int f = -(D.at(s, j) / D.at(s, s));
                    add_col(D, j, s, f);
                    add_col(V, j, s, f);
                    if (D.at(s, j) != 0) clean = false;
                }
            if (!clean) continue;

            // Row and column cleared; enforce divisibility of the rest.
            bool divides_all = true;
            std::size_t br = s, bc = s;
            for (std::size_t i = s + 1; i < rows && divides_all; ++i)
                for (std::size_t j = s + 1; j < cols; ++j)
                    if (D.at(i, j) % D.at(s, s) != 0) {
                        divides_all = false;
                        br = i;
                        bc = j;
                        break;
                    }
            if (divides_all) break;
            (void)bc;
            add_row(D, s, br, 1);
            add_row(U, s, br, 1);
        }
        if (D.at(s, s) < 0) { negate_row(D, s); negate_row(U, s); }
    }
    return res;
}

FinAb cokernel(const IntMatrix& m) {
    SnfResult s = snf(m);
    FinAb g;
    const std::size_t nmin = std::min(m.rows(), m.cols());
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < nmin; ++i) {
        const Int& d = s.D.at(i, i);
        if (d == 0) continue;
        ++nonzero;
        if (d >= 2) g.invariant_factors.push_back(d);
    }
    g.free_rank = m.rows() - nonzero;
    return g;
}

IntMatrix kernel_basis(const IntMatrix& m) {
    SnfResult s = snf(m);
    const std::size_t nmin = std::min(m.rows(), m.cols());
    std::vector<std::size_t> zero_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (j >= nmin || s.D.at(j, j) == 0) zero_cols.push_back(j);
    IntMatrix k(m.cols(), zero_cols.size());
    for (std::size_t jj = 0; jj < zero_cols.size(); ++jj)
        for (std::size_t i = 0; i < m.cols(); ++i) k.at(i, jj) = s.V.at(i, zero_cols[jj]);
    return k;
}

std::optional<Int> sublattice_index(const IntMatrix& sub, std::size_t ambient_rank) {
    if (sub.rows() != ambient_rank)
        throw std::invalid_argument("sublattice_index: column height != ambient rank");
    SnfResult s = snf(sub);
    const std::size_t nmin = std::min(sub.rows(), sub.cols());
    Int idx = 1;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < nmin; ++i)
        if (s.D.at(i, i) != 0) {
            ++nonzero;
            idx *= s.D.at(i, i);
        }
    if (nonzero < ambient_rank) return std::nullopt;
    return idx;
}

Int det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: square matrix required");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    // Fraction-free Bareiss elimination.
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            swap_rows(a, k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = num / prev;
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

std::optional<std::vector<Int>> solve(const IntMatrix& a, const std::vector<Int>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs size mismatch");
    SnfResult s = snf(a);
    std::vector<Int> c = intlat::apply(s.U, b);  // D y = U b, x = V y
    std::vector<Int> y(a.cols(), 0);
    const std::size_t nmin = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Int d = (i < nmin) ? s.D.at(i, i) : Int(0);
        if (d == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            if (c[i] % d != 0) return std::nullopt;
            y[i] = c[i] / d;
        }
    }
    return intlat::apply(s.V, y);
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: square matrix required");
    Int d = det(m);
    if (d != 1 && d != -1) throw std::invalid_argument("inverse_unimodular: |det| != 1");
    const std::size_t n = m.rows();
    IntMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Int> e(n, 0);
        e[j] = 1;
        auto x = solve(m, e);
        if (!x) throw std::logic_error("inverse_unimodular: solve failed");
        for (std::size_t i = 0; i < n; ++i) inv.at(i, j) = (*x)[i];
    }
    return inv;
}

std::vector<Int> apply(const IntMatrix& m, const std::vector<Int>& x) {
    if (x.size() != m.cols()) throw std::invalid_argument("apply: size mismatch");
    std::vector<Int> r(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m.at(i, j) * x[j];
    return r;
}

bool in_column_span(const IntMatrix& a, const std::vector<Int>& b) {
    return solve(a, b).has_value();
}

bool is_saturated(const IntMatrix& a) {
    SnfResult s = snf(a);
    const std::size_t nmin = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < nmin; ++i)
        if (s.D.at(i, i) > 1) return false;
    return true;
}

Int gcd_vec(const std::vector<Int>& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

}  // namespace intlat
}  // namespace tz
