#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tz {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Dense exact integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("IntMatrix: entry count mismatch");
    }

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    IntMatrix transpose() const;
    IntMatrix pow(unsigned long long k) const;
    bool is_zero() const;
    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

// Finite(ly generated) abelian group in invariant-factor form.
struct FinAb {
    std::vector<Int> invariant_factors;  // each >= 2, d_i | d_{i+1}
    std::size_t free_rank = 0;

    Int order() const {
        if (free_rank != 0) throw std::logic_error("FinAb::order: infinite group");
        Int o = 1;
        for (const auto& d : invariant_factors) o *= d;
        return o;
    }
    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    std::string str() const;
};

struct SnfResult {
    IntMatrix U, D, V;  // U*m*V = D
};

namespace intlat {

// Smith normal form. U, V unimodular, D diagonal with nonnegative entries
// d_1 | d_2 | ... Deterministic: smallest-|value| pivot, first in scan order.
SnfResult snf(const IntMatrix& m);

// Z^rows / image(m).
FinAb cokernel(const IntMatrix& m);

// Columns form a saturated basis of {x : m x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

// [Z^ambient_rank : column span of sub]; nullopt means infinite.
std::optional<Int> sublattice_index(const IntMatrix& sub, std::size_t ambient_rank);

// Determinant (Bareiss-free: via SNF sign-less magnitude is enough for most
// callers; this keeps the sign using fraction-free elimination).
Int det(const IntMatrix& m);

// One integral solution of A x = b, or nullopt if none exists.
std::optional<std::vector<Int>> solve(const IntMatrix& a, const std::vector<Int>& b);

// Inverse of a unimodular matrix (throws if |det| != 1).
IntMatrix inverse_unimodular(const IntMatrix& m);

// Matrix-vector product.
std::vector<Int> apply(const IntMatrix& m, const std::vector<Int>& x);

// True iff b lies in the column span of a over Z.
bool in_column_span(const IntMatrix& a, const std::vector<Int>& b);

// True iff the column span of a is saturated (Z^rows / span torsion-free).
bool is_saturated(const IntMatrix& a);

Int gcd_vec(const std::vector<Int>& v);

}  // namespace intlat
}  // namespace tz
