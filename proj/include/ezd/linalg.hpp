#pragma once

#include <cstddef>
#include <vector>

#include "ezd/scalar.hpp"

namespace ezd {

using Vector = std::vector<Scalar>;

// Dense exact matrix over the coefficient field.
class Matrix {
  public:
    Matrix(FieldSpec f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(FieldSpec f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
        return m;
    }
    static Matrix from_rows(FieldSpec f, std::size_t cols, const std::vector<Vector>& rows) {
        Matrix m(f, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const {
        return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    Matrix operator*(const Matrix& o) const {
        Matrix r(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Scalar& a = (*this)(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }
    Vector apply(const Vector& v) const {
        Vector r(rows_, Scalar::zero(field_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
        return r;
    }
    Matrix transpose() const {
        Matrix r(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
    bool is_zero() const {
        for (auto& s : data_)
            if (!s.is_zero()) return false;
        return true;
    }
    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

  private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

// In-place Gauss-Jordan; returns pivot columns. Zero rows are kept at the
// bottom (strip them with rref()).
inline std::vector<std::size_t> rref_in_place(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && m(pr, c).is_zero()) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pr, j));
        Scalar inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Reduced row echelon form with zero rows removed.
inline Matrix rref(const Matrix& m) {
    Matrix w = m;
    auto pivots = rref_in_place(w);
    Matrix out(m.field(), pivots.size(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = w(i, j);
    return out;
}

inline std::size_t rank(const Matrix& m) {
    Matrix w = m;
    return rref_in_place(w).size();
}

// Canonical subspace of K^n: basis in RREF, rows = dim. RREF uniqueness makes
// equality a structural comparison.
class Subspace {
  public:
    Subspace(FieldSpec f, std::size_t ambient)
        : ambient_(ambient), basis_(f, 0, ambient), pivots_() {}

    static Subspace zero(FieldSpec f, std::size_t ambient) { return Subspace(f, ambient); }
    static Subspace full(FieldSpec f, std::size_t ambient) {
        return span(Matrix::identity(f, ambient));
    }
    static Subspace span(const Matrix& rows) {
        Subspace s(rows.field(), rows.cols());
        Matrix w = rows;
        auto piv = rref_in_place(w);
        s.basis_ = Matrix(rows.field(), piv.size(), rows.cols());
        for (std::size_t i = 0; i < piv.size(); ++i)
            for (std::size_t j = 0; j < rows.cols(); ++j) s.basis_(i, j) = w(i, j);
        s.pivots_ = piv;
        return s;
    }
    static Subspace span_of(FieldSpec f, std::size_t ambient, const std::vector<Vector>& vecs) {
        return span(Matrix::from_rows(f, ambient, vecs));
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const FieldSpec& field() const { return basis_.field(); }
    bool is_zero() const { return dim() == 0; }

    // Reduce v against the RREF basis; v is in the subspace iff the residual
    // is zero. Out-param coeffs (optional) receives the basis combination.
    Vector reduce(const Vector& v, Vector* coeffs = nullptr) const {
        Vector r = v;
        if (coeffs) coeffs->assign(dim(), Scalar::zero(field()));
        for (std::size_t i = 0; i < dim(); ++i) {
            const Scalar& c = r[pivots_[i]];
            if (c.is_zero()) continue;
            Scalar f = c;  // pivot entries are 1
            if (coeffs) (*coeffs)[i] = f;
            for (std::size_t j = 0; j < ambient_; ++j) r[j] -= f * basis_(i, j);
        }
        return r;
    }
    bool contains(const Vector& v) const {
        check(v.size());
        for (auto& s : reduce(v))
            if (!s.is_zero()) return false;
        return true;
    }
    bool contains(const Subspace& o) const {
        for (std::size_t i = 0; i < o.dim(); ++i)
            if (!contains(o.basis_.row(i))) return false;
        return true;
    }

    Subspace sum(const Subspace& o) const {
        check(o.ambient_);
        Matrix m(field(), dim() + o.dim(), ambient_);
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < ambient_; ++j) m(i, j) = basis_(i, j);
        for (std::size_t i = 0; i < o.dim(); ++i)
            for (std::size_t j = 0; j < ambient_; ++j) m(dim() + i, j) = o.basis_(i, j);
        return span(m);
    }

    // Rows of the returned matrix are the linear functionals vanishing
    // exactly on this subspace.
    Matrix constraints() const;

    Subspace intersect(const Subspace& o) const;

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

  private:
    void check(std::size_t n) const {
        if (n != ambient_) throw Error(ErrorKind::ArityMismatch, "ambient dimension mismatch");
    }
    std::size_t ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

// Kernel {v : m v = 0} as a canonical subspace of K^cols.
inline Subspace kernel(const Matrix& m) {
    Matrix w = m;
    auto piv = rref_in_place(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<Vector> rows;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vector v(m.cols(), Scalar::zero(m.field()));
        v[c] = Scalar::one(m.field());
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -w(i, c);
        rows.push_back(std::move(v));
    }
    return Subspace::span_of(m.field(), m.cols(), rows);
}

inline Matrix Subspace::constraints() const { return kernel(basis_).basis(); }

inline Subspace Subspace::intersect(const Subspace& o) const {
    check(o.ambient_);
    Matrix ca = constraints();
    Matrix cb = o.constraints();
    Matrix m(field(), ca.rows() + cb.rows(), ambient_);
    for (std::size_t i = 0; i < ca.rows(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) m(i, j) = ca(i, j);
    for (std::size_t i = 0; i < cb.rows(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) m(ca.rows() + i, j) = cb(i, j);
    return kernel(m);
}

// Column space of m as a subspace of K^rows.
inline Subspace column_space(const Matrix& m) { return Subspace::span(m.transpose()); }

}  // namespace ezd
