#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

#include "hamstab/cycnum.hpp"

namespace hamstab {

using CycVector = std::vector<CycNum>;

/// Dense row-major matrix over Q(zeta24).
class CycMatrix {
public:
    CycMatrix() = default;
    CycMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    CycMatrix(std::initializer_list<std::initializer_list<CycNum>> rows);

    static CycMatrix identity(std::size_t n);
    static CycMatrix diagonal(const CycVector& d);
    /// [top; bottom]; column counts must agree.
    static CycMatrix stack(const CycMatrix& top, const CycMatrix& bottom);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    CycNum& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const CycNum& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    CycVector column(std::size_t c) const;

    CycMatrix& operator+=(const CycMatrix& o);
    CycMatrix& operator-=(const CycMatrix& o);
    friend CycMatrix operator+(CycMatrix a, const CycMatrix& b) { return a += b; }
    friend CycMatrix operator-(CycMatrix a, const CycMatrix& b) { return a -= b; }
    friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
    friend CycVector operator*(const CycMatrix& a, const CycVector& v);
    friend bool operator==(const CycMatrix& a, const CycMatrix& b) = default;

    CycMatrix scaled(const CycNum& s) const;
    CycMatrix transpose() const;
    CycMatrix conj_transpose() const;
    CycNum trace() const;
    /// Determinant by exact elimination.
    CycNum determinant() const;

    bool is_zero() const;
    bool is_diagonal() const;
    /// All entries rational.
    bool is_rational() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<CycNum> e_;
};

CycMatrix commutator(const CycMatrix& a, const CycMatrix& b);

/// Reduced row echelon form; pivots are chosen as the first nonzero entry
/// scanning columns left to right, rows top to bottom.
struct RowEchelon {
    CycMatrix reduced;
    std::vector<std::size_t> pivot_cols;
};

RowEchelon row_reduce(const CycMatrix& m);
std::size_t rank(const CycMatrix& m);

/// Exact basis of {v : M v = 0}, one vector per free column.
std::vector<CycVector> nullspace(const CycMatrix& m);

/// Columns as a matrix (n x vectors.size()).
CycMatrix from_columns(const std::vector<CycVector>& vectors, std::size_t n);

/// True iff every vector in `a` lies in span(b).
bool in_span(const std::vector<CycVector>& a, const std::vector<CycVector>& b, std::size_t n);
bool same_span(const std::vector<CycVector>& a, const std::vector<CycVector>& b, std::size_t n);

using InnerProduct = std::function<CycNum(const CycVector&, const CycVector&)>;

/// Orthonormalizes `vectors` against a real positive-definite form. Norms are
/// rooted with sqrt_real, so each squared norm that arises must be a rational
/// whose root lies in Q(zeta24); otherwise NotExpressible is thrown.
std::vector<CycVector> gram_schmidt_real(const std::vector<CycVector>& vectors,
                                         const InnerProduct& inner);

CycVector scaled(const CycVector& v, const CycNum& s);
CycVector add(const CycVector& a, const CycVector& b);
bool is_zero(const CycVector& v);

}  // namespace hamstab
