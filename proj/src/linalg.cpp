#include "bilie/linalg.hpp"

#include <algorithm>

namespace bilie {

SparseVec to_sparse(const Vec& v)
{
    SparseVec out;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!v(i).is_zero()) out.emplace_back(static_cast<int>(i), v(i));
    return out;
}

Vec to_dense(const SparseVec& v, int n)
{
    Vec out = zero_vec<Scalar>(n);
    for (const auto& [i, x] : v) out(i) = x;
    return out;
}

SparseVec column_sparse(const Mat& m, int j)
{
    SparseVec out;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        if (!m(i, j).is_zero()) out.emplace_back(static_cast<int>(i), m(i, j));
    return out;
}

std::vector<SparseVec> columns_sparse(const Mat& m)
{
    std::vector<SparseVec> out(m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[j] = column_sparse(m, static_cast<int>(j));
    return out;
}

void axpy(SparseVec& acc, const Scalar& f, const SparseVec& v)
{
    if (f.is_zero() || v.empty()) return;
    SparseVec out;
    out.reserve(acc.size() + v.size());
    std::size_t a = 0, b = 0;
    while (a < acc.size() || b < v.size()) {
        if (b == v.size() || (a < acc.size() && acc[a].first < v[b].first)) {
            out.push_back(std::move(acc[a++]));
        } else if (a == acc.size() || v[b].first < acc[a].first) {
            out.emplace_back(v[b].first, f * v[b].second);
            ++b;
        } else {
            Scalar s = acc[a].second + f * v[b].second;
            if (!s.is_zero()) out.emplace_back(acc[a].first, std::move(s));
            ++a;
            ++b;
        }
    }
    acc = std::move(out);
}

SparseVec scaled(const SparseVec& v, const Scalar& f)
{
    SparseVec out;
    if (f.is_zero()) return out;
    out.reserve(v.size());
    for (const auto& [i, x] : v) out.emplace_back(i, f * x);
    return out;
}

SparseVec add(const SparseVec& a, const SparseVec& b)
{
    SparseVec out = a;
    axpy(out, Scalar(1), b);
    return out;
}

SparseVec sub(const SparseVec& a, const SparseVec& b)
{
    SparseVec out = a;
    axpy(out, Scalar(-1), b);
    return out;
}

SparseVec apply(const std::vector<SparseVec>& cols, const SparseVec& v)
{
    SparseVec out;
    for (const auto& [j, x] : v) axpy(out, x, cols[j]);
    return out;
}

Scalar coeff(const SparseVec& v, int i)
{
    auto it = std::lower_bound(v.begin(), v.end(), i,
                               [](const auto& p, int k) { return p.first < k; });
    if (it != v.end() && it->first == i) return it->second;
    return Scalar(0);
}

std::size_t max_bit_length(const Mat& m)
{
    std::size_t b = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) b = std::max(b, m(i, j).bit_length());
    return b;
}

} // namespace bilie
