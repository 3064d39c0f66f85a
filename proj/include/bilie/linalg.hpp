#pragma once

#include "bilie/scalar.hpp"

#include <Eigen/Core>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bilie {

template <class T>
using MatrixT = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using VectorT = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using Mat = MatrixT<Scalar>;
using Vec = VectorT<Scalar>;

/// Sorted (index, value) list with no stored zeros.
using SparseVec = std::vector<std::pair<int, Scalar>>;

template <class T>
bool is_zero_value(const T& x)
{
    return x == T(0);
}
inline bool is_zero_value(const Scalar& x) { return x.is_zero(); }

template <class T>
MatrixT<T> zeros(Eigen::Index r, Eigen::Index c)
{
    MatrixT<T> m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < c; ++j) m(i, j) = T(0);
    return m;
}

template <class T>
VectorT<T> zero_vec(Eigen::Index n)
{
    VectorT<T> v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = T(0);
    return v;
}

template <class T>
MatrixT<T> identity(Eigen::Index n)
{
    MatrixT<T> m = zeros<T>(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
}

template <class T>
bool is_zero_matrix(const MatrixT<T>& m)
{
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!is_zero_value(m(i, j))) return false;
    return true;
}

template <class T>
struct Rref {
    MatrixT<T> r;
    std::vector<int> pivots; ///< pivot column of each nonzero row
};

/// Reduced row echelon form by exact elimination, first nonzero pivot.
template <class T>
Rref<T> rref(MatrixT<T> m)
{
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Rref<T> out;
    Eigen::Index row = 0;
    std::vector<Eigen::Index> nz;
    for (Eigen::Index c = 0; c < cols && row < rows; ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index i = row; i < rows; ++i)
            if (!is_zero_value(m(i, c))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row) m.row(p).swap(m.row(row));
        if (!(m(row, c) == T(1))) {
            T inv = T(1) / m(row, c);
            for (Eigen::Index j = c; j < cols; ++j)
                if (!is_zero_value(m(row, j))) m(row, j) *= inv;
        }
        nz.clear();
        for (Eigen::Index j = c; j < cols; ++j)
            if (!is_zero_value(m(row, j))) nz.push_back(j);
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == row || is_zero_value(m(i, c))) continue;
            T f = m(i, c);
            for (Eigen::Index j : nz) m(i, j) -= f * m(row, j);
        }
        out.pivots.push_back(static_cast<int>(c));
        ++row;
    }
    out.r = std::move(m);
    return out;
}

template <class T>
int rank(const MatrixT<T>& m)
{
    return static_cast<int>(rref(m).pivots.size());
}

/// Columns form a basis of {x : m x = 0}.
template <class T>
MatrixT<T> kernel(const MatrixT<T>& m)
{
    auto rr = rref(m);
    const Eigen::Index cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int p : rr.pivots) is_pivot[p] = true;
    std::vector<Eigen::Index> free;
    for (Eigen::Index j = 0; j < cols; ++j)
        if (!is_pivot[j]) free.push_back(j);
    MatrixT<T> k = zeros<T>(cols, static_cast<Eigen::Index>(free.size()));
    for (std::size_t f = 0; f < free.size(); ++f) {
        k(free[f], f) = T(1);
        for (std::size_t r = 0; r < rr.pivots.size(); ++r)
            if (!is_zero_value(rr.r(r, free[f]))) k(rr.pivots[r], f) = -rr.r(r, free[f]);
    }
    return k;
}

template <class T>
MatrixT<T> inverse(const MatrixT<T>& m)
{
    const Eigen::Index n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
    MatrixT<T> aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = identity<T>(n);
    auto rr = rref(aug);
    if (static_cast<Eigen::Index>(rr.pivots.size()) < n || rr.pivots[n - 1] != n - 1)
        throw std::domain_error("singular matrix");
    return rr.r.rightCols(n);
}

/// A solution of a x = b, if any.
template <class T>
std::optional<VectorT<T>> solve(const MatrixT<T>& a, const VectorT<T>& b)
{
    MatrixT<T> aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    auto rr = rref(aug);
    VectorT<T> x = zero_vec<T>(a.cols());
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
        if (rr.pivots[r] == a.cols()) return std::nullopt;
        x(rr.pivots[r]) = rr.r(r, a.cols());
    }
    return x;
}

/// Independent subset of the columns spanning the column space.
template <class T>
MatrixT<T> column_basis(const MatrixT<T>& m)
{
    auto rr = rref(m);
    MatrixT<T> out(m.rows(), static_cast<Eigen::Index>(rr.pivots.size()));
    for (std::size_t k = 0; k < rr.pivots.size(); ++k) out.col(k) = m.col(rr.pivots[k]);
    return out;
}

template <class T>
bool span_contains(const MatrixT<T>& basis, const VectorT<T>& v)
{
    MatrixT<T> aug(basis.rows(), basis.cols() + 1);
    aug.leftCols(basis.cols()) = basis;
    aug.col(basis.cols()) = v;
    return rank(aug) == rank(basis);
}

template <class T>
bool span_contains_all(const MatrixT<T>& basis, const MatrixT<T>& vs)
{
    MatrixT<T> aug(basis.rows(), basis.cols() + vs.cols());
    aug.leftCols(basis.cols()) = basis;
    aug.rightCols(vs.cols()) = vs;
    return rank(aug) == rank(basis);
}

template <class T>
bool spans_equal(const MatrixT<T>& u, const MatrixT<T>& v)
{
    int ru = rank(u);
    return ru == rank(v) && span_contains_all(u, v);
}

/// Basis of the intersection of two column spans.
template <class T>
MatrixT<T> intersect(const MatrixT<T>& u, const MatrixT<T>& v)
{
    MatrixT<T> uu = column_basis(u), vv = column_basis(v);
    MatrixT<T> both(uu.rows(), uu.cols() + vv.cols());
    both.leftCols(uu.cols()) = uu;
    both.rightCols(vv.cols()) = -vv;
    MatrixT<T> k = kernel(both);
    MatrixT<T> out = uu * k.topRows(uu.cols());
    return column_basis(out);
}

template <class T>
MatrixT<T> hcat(const MatrixT<T>& a, const MatrixT<T>& b)
{
    MatrixT<T> out(a.rows(), a.cols() + b.cols());
    out.leftCols(a.cols()) = a;
    out.rightCols(b.cols()) = b;
    return out;
}

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, int n);
SparseVec column_sparse(const Mat& m, int j);
std::vector<SparseVec> columns_sparse(const Mat& m);

/// acc += f * v
void axpy(SparseVec& acc, const Scalar& f, const SparseVec& v);
SparseVec scaled(const SparseVec& v, const Scalar& f);
SparseVec add(const SparseVec& a, const SparseVec& b);
SparseVec sub(const SparseVec& a, const SparseVec& b);
/// m * v with m given by its sparse columns
SparseVec apply(const std::vector<SparseVec>& cols, const SparseVec& v);
Scalar coeff(const SparseVec& v, int i);

std::size_t max_bit_length(const Mat& m);

} // namespace bilie
