#include "hamstab/cyc_matrix.hpp"

#include <stdexcept>

#include "hamstab/errors.hpp"

namespace hamstab {

CycMatrix::CycMatrix(std::initializer_list<std::initializer_list<CycNum>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("CycMatrix: ragged initializer");
        e_.insert(e_.end(), r.begin(), r.end());
    }
}

CycMatrix CycMatrix::identity(std::size_t n) {
    CycMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = CycNum(1);
    return m;
}

CycMatrix CycMatrix::diagonal(const CycVector& d) {
    CycMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

CycMatrix CycMatrix::stack(const CycMatrix& top, const CycMatrix& bottom) {
    if (top.cols_ != bottom.cols_) throw std::invalid_argument("CycMatrix::stack: column mismatch");
    CycMatrix m(top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.e_.begin(), top.e_.end(), m.e_.begin());
    std::copy(bottom.e_.begin(), bottom.e_.end(), m.e_.begin() + static_cast<long>(top.e_.size()));
    return m;
}

CycVector CycMatrix::column(std::size_t c) const {
    CycVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

CycMatrix& CycMatrix::operator+=(const CycMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("CycMatrix: shape mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

CycMatrix& CycMatrix::operator-=(const CycMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("CycMatrix: shape mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("CycMatrix: product shape mismatch");
    CycMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const CycNum& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b(k, j).is_zero()) continue;
                m(i, j) += aik * b(k, j);
            }
        }
    return m;
}

CycVector operator*(const CycMatrix& a, const CycVector& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("CycMatrix: vector shape mismatch");
    CycVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k).is_zero() || v[k].is_zero()) continue;
            out[i] += a(i, k) * v[k];
        }
    return out;
}

CycMatrix CycMatrix::scaled(const CycNum& s) const {
    CycMatrix m = *this;
    for (auto& x : m.e_) x *= s;
    return m;
}

CycMatrix CycMatrix::transpose() const {
    CycMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

CycMatrix CycMatrix::conj_transpose() const {
    CycMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j).conj();
    return m;
}

CycNum CycMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("CycMatrix::trace: not square");
    CycNum t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

CycNum CycMatrix::determinant() const {
    if (!is_square()) throw std::invalid_argument("CycMatrix::determinant: not square");
    CycMatrix m = *this;
    CycNum det(1);
    const std::size_t n = rows_;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m(piv, col).is_zero()) ++piv;
        if (piv == n) return CycNum(0);
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        const CycNum inv = m(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            const CycNum f = m(r, col) * inv;
            for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
        }
    }
    return det;
}

bool CycMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool CycMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && !(*this)(i, j).is_zero()) return false;
    return true;
}

bool CycMatrix::is_rational() const {
    for (const auto& x : e_)
        if (!x.is_rational()) return false;
    return true;
}

CycMatrix commutator(const CycMatrix& a, const CycMatrix& b) { return a * b - b * a; }

RowEchelon row_reduce(const CycMatrix& input) {
    RowEchelon out{input, {}};
    CycMatrix& m = out.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        const CycNum inv = m(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j)
            if (!m(row, j).is_zero()) m(row, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const CycNum f = m(r, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    return out;
}

std::size_t rank(const CycMatrix& m) { return row_reduce(m).pivot_cols.size(); }

std::vector<CycVector> nullspace(const CycMatrix& m) {
    const RowEchelon ech = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivot_cols) is_pivot[c] = true;
    std::vector<CycVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        CycVector v(m.cols());
        v[free] = CycNum(1);
        for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r)
            v[ech.pivot_cols[r]] = -ech.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

CycMatrix from_columns(const std::vector<CycVector>& vectors, std::size_t n) {
    CycMatrix m(n, vectors.size());
    for (std::size_t c = 0; c < vectors.size(); ++c) {
        if (vectors[c].size() != n) throw std::invalid_argument("from_columns: length mismatch");
        for (std::size_t r = 0; r < n; ++r) m(r, c) = vectors[c][r];
    }
    return m;
}

bool in_span(const std::vector<CycVector>& a, const std::vector<CycVector>& b, std::size_t n) {
    if (a.empty()) return true;
    const std::size_t rb = rank(from_columns(b, n));
    std::vector<CycVector> both = b;
    both.insert(both.end(), a.begin(), a.end());
    return rank(from_columns(both, n)) == rb;
}

bool same_span(const std::vector<CycVector>& a, const std::vector<CycVector>& b, std::size_t n) {
    return in_span(a, b, n) && in_span(b, a, n);
}

CycVector scaled(const CycVector& v, const CycNum& s) {
    CycVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
    return out;
}

CycVector add(const CycVector& a, const CycVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    CycVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

bool is_zero(const CycVector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<CycVector> gram_schmidt_real(const std::vector<CycVector>& vectors,
                                         const InnerProduct& inner) {
    std::vector<CycVector> out;
    out.reserve(vectors.size());
    for (const auto& v : vectors) {
        CycVector u = v;
        for (const auto& e : out) {
            const CycNum c = inner(v, e);
            if (!c.is_real()) throw std::invalid_argument("gram_schmidt_real: non-real inner product");
            if (!c.is_zero()) u = add(u, scaled(e, -c));
        }
        const CycNum norm2 = inner(u, u);
        if (!norm2.is_real()) throw std::invalid_argument("gram_schmidt_real: non-real norm");
        const auto q = norm2.as_rational();
        if (!q) throw NotExpressible("gram_schmidt_real: squared norm " + norm2.to_string() +
                                     " is not rational");
        if (q->sign() <= 0)
            throw std::invalid_argument("gram_schmidt_real: vectors dependent or form not positive definite");
        out.push_back(scaled(u, sqrt_rational(*q).inverse()));
    }
    return out;
}

}  // namespace hamstab
