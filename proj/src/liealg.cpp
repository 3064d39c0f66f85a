#include "bilie/liealg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace bilie {

SparseVec Table::apply(const SparseVec& x, const SparseVec& y) const
{
    SparseVec out;
    for (const auto& [i, xi] : x)
        for (const auto& [j, yj] : y) {
            const SparseVec& e = at(i, j);
            if (e.empty()) continue;
            axpy(out, xi * yj, e);
        }
    return out;
}

SparseVec Table::apply_right(const SparseVec& x, int j) const
{
    SparseVec out;
    for (const auto& [i, xi] : x) axpy(out, xi, at(i, j));
    return out;
}

Vec Table::apply(const Vec& x, const Vec& y) const
{
    return to_dense(apply(to_sparse(x), to_sparse(y)), dim);
}

Table operator+(const Table& a, const Table& b)
{
    Table out(a.dim);
    for (std::size_t k = 0; k < a.c.size(); ++k) out.c[k] = add(a.c[k], b.c[k]);
    return out;
}

Table operator-(const Table& a, const Table& b)
{
    Table out(a.dim);
    for (std::size_t k = 0; k < a.c.size(); ++k) out.c[k] = sub(a.c[k], b.c[k]);
    return out;
}

Table operator*(const Scalar& s, const Table& a)
{
    Table out(a.dim);
    for (std::size_t k = 0; k < a.c.size(); ++k) out.c[k] = scaled(a.c[k], s);
    return out;
}

bool is_antisymmetric(const Table& t)
{
    for (int i = 0; i < t.dim; ++i)
        for (int j = i; j < t.dim; ++j)
            if (add(t.at(i, j), t.at(j, i)).size() != 0) return false;
    return true;
}

std::optional<std::array<int, 2>> first_difference(const Table& a, const Table& b)
{
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            if (a.at(i, j) != b.at(i, j)) return std::array<int, 2>{i, j};
    return std::nullopt;
}

std::size_t max_bit_length(const Table& t)
{
    std::size_t b = 0;
    for (const auto& v : t.c)
        for (const auto& [k, x] : v) b = std::max(b, x.bit_length());
    return b;
}

std::string LieAlgebra::label(int i) const
{
    const BasisLabel& l = labels[i];
    if (l.kind == BasisLabel::Cartan) return "H" + std::to_string(l.index + 1);
    if (l.kind == BasisLabel::Root) return "E[" + root_name(*roots, l.index) + "]";
    return "X" + std::to_string(l.index + 1);
}

const Mat& LieAlgebra::killing_inverse() const
{
    if (!kinv_) kinv_ = inverse(killing);
    return *kinv_;
}

Mat killing_matrix(const Table& t)
{
    const int n = t.dim;
    Mat k = zeros<Scalar>(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Scalar s;
            for (int m = 0; m < n; ++m) {
                const SparseVec& v = t.at(j, m);
                for (const auto& [p, vp] : v) {
                    Scalar c = coeff(t.at(i, p), m);
                    if (!c.is_zero()) s += vp * c;
                }
            }
            k(i, j) = s;
            k(j, i) = s;
        }
    return k;
}

LieAlgebra algebra_from_table(std::string name, Table t)
{
    LieAlgebra L;
    L.name = std::move(name);
    L.dim = t.dim;
    for (int i = 0; i < t.dim; ++i) L.labels.push_back({BasisLabel::Matrix, i});
    L.killing = killing_matrix(t);
    L.table = std::move(t);
    return L;
}

namespace {

/// Chevalley constants via extraspecial pairs.
class ChevalleyConstants {
public:
    explicit ChevalleyConstants(const RootSystem& R) : R_(R)
    {
        const int np = R.num_positive;
        for (int xi = 0; xi < np; ++xi) {
            if (R.height(xi) == 1) continue;
            std::vector<std::pair<int, int>> pairs;
            for (int r = 0; r < xi; ++r) {
                RootVec d(R.rank);
                for (int i = 0; i < R.rank; ++i) d[i] = R.roots[xi][i] - R.roots[r][i];
                auto s = R.find(d);
                if (s && R.is_positive(*s) && r < *s) pairs.emplace_back(r, *s);
            }
            const auto [r1, s1] = pairs.front();
            int p = 0;
            RootVec v = R.roots[s1];
            while (true) {
                for (int i = 0; i < R.rank; ++i) v[i] -= R.roots[r1][i];
                if (!R.find(v)) break;
                ++p;
            }
            pos_[{r1, s1}] = p + 1;
            const mpq_class n11 = p + 1;
            const mpq_class xx = R.inner(xi, xi);
            for (std::size_t k = 1; k < pairs.size(); ++k) {
                const auto [r, s] = pairs[k];
                mpq_class acc = 0;
                const int mr1 = R.neg(r1), ms1 = R.neg(s1);
                if (auto d = R.sum(s, mr1); d) {
                    mpq_class a = get(s, mr1) * get(r, ms1);
                    acc += a / R.inner(*d, *d);
                }
                if (auto d = R.sum(r, mr1); d) {
                    mpq_class a = get(mr1, r) * get(s, ms1);
                    acc += a / R.inner(*d, *d);
                }
                mpq_class val = xx / n11 * acc;
                if (val.get_den() != 1) throw std::logic_error("non-integral Chevalley constant");
                pos_[{r, s}] = static_cast<int>(val.get_num().get_si());
            }
        }
    }

    /// N_{a,b} for a+b a root.
    int get(int a, int b) const
    {
        const RootSystem& R = R_;
        const bool pa = R.is_positive(a), pb = R.is_positive(b);
        if (pa && pb) {
            if (a < b) return pos_.at({a, b});
            return -pos_.at({b, a});
        }
        if (!pa && !pb) return -get(R.neg(a), R.neg(b));
        const int c = *R.sum(a, b);
        const int t = R.neg(c);
        // N_{a,b}/(t,t) = N_{b,t}/(a,a) = N_{t,a}/(b,b)
        const int tt = R.inner(t, t);
        if (R.is_positive(b) == R.is_positive(t)) return tt * get(b, t) / R.inner(a, a);
        return tt * get(t, a) / R.inner(b, b);
    }

private:
    const RootSystem& R_;
    std::map<std::pair<int, int>, int> pos_;
};

} // namespace

LieAlgebra chevalley_algebra(const RootSystem& Rin)
{
    auto Rp = std::make_shared<const RootSystem>(Rin);
    const RootSystem& R = *Rp;
    const int r = R.rank, nr = R.size(), n = r + nr;
    ChevalleyConstants cc(R);

    // raw integral basis: h_i coroots, e_a
    Table raw(n);
    std::map<std::pair<int, int>, int> rawN;
    auto eb = [r](int root) { return r + root; };
    for (int i = 0; i < r; ++i) {
        const int si = R.simple(i);
        for (int a = 0; a < nr; ++a) {
            int v = R.cartan_int(a, si);
            if (v == 0) continue;
            raw.at(i, eb(a)) = {{eb(a), Scalar(v)}};
            raw.at(eb(a), i) = {{eb(a), Scalar(-v)}};
        }
    }
    for (int a = 0; a < nr; ++a)
        for (int b = 0; b < nr; ++b) {
            if (b == R.neg(a)) {
                // h_a = sum c_i (a_i,a_i)/(a,a) h_i
                SparseVec h;
                const int aa = R.inner(a, a);
                for (int i = 0; i < r; ++i) {
                    int ci = R.roots[a][i];
                    if (ci == 0) continue;
                    h.emplace_back(i, Scalar(ci * R.form[i][i], aa));
                }
                raw.at(eb(a), eb(b)) = h;
                continue;
            }
            auto s = R.sum(a, b);
            if (!s) continue;
            int N = cc.get(a, b);
            rawN[{a, b}] = N;
            raw.at(eb(a), eb(b)) = {{eb(*s), Scalar(N)}};
        }

    Mat kraw = killing_matrix(raw);
    // new basis vector k is d_k times the raw one
    std::vector<Scalar> d(n, Scalar(1));
    for (int i = 0; i < r; ++i) d[i] = Scalar(1) / kraw(eb(R.simple(i)), eb(R.neg(R.simple(i))));
    for (int a = R.num_positive; a < nr; ++a) d[eb(a)] = Scalar(1) / kraw(eb(R.neg(a)), eb(a));

    LieAlgebra L;
    L.name = R.tag();
    L.dim = n;
    L.roots = Rp;
    L.rank = r;
    L.raw_N = std::move(rawN);
    L.table = Table(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            SparseVec v;
            for (const auto& [k, x] : raw.at(i, j)) v.emplace_back(k, d[i] * d[j] * x / d[k]);
            L.table.at(i, j) = std::move(v);
        }
    L.killing = Mat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) L.killing(i, j) = d[i] * d[j] * kraw(i, j);
    for (int i = 0; i < r; ++i) {
        L.labels.push_back({BasisLabel::Cartan, i});
        L.weight.push_back(-1);
    }
    for (int i = 0; i < r; ++i) L.opposite.push_back(-1);
    for (int a = 0; a < nr; ++a) {
        L.labels.push_back({BasisLabel::Root, a});
        L.weight.push_back(a);
        L.opposite.push_back(eb(R.neg(a)));
    }
    L.root_values = Mat(nr, r);
    for (int a = 0; a < nr; ++a)
        for (int j = 0; j < r; ++j) L.root_values(a, j) = d[j] * Scalar(R.cartan_int(a, R.simple(j)));
    return L;
}

LieAlgebra chevalley_algebra(const std::string& tag)
{
    return chevalley_algebra(build_root_system(tag));
}

LieAlgebra change_basis(const LieAlgebra& L, const Mat& s, std::string name)
{
    const int n = L.dim;
    Mat sinv = inverse(s);
    std::vector<SparseVec> cols(n);
    for (int k = 0; k < n; ++k) cols[k] = column_sparse(s, k);
    Table t(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            SparseVec v = L.table.apply(cols[i], cols[j]);
            Vec w = sinv * to_dense(v, n);
            t.at(i, j) = to_sparse(w);
            t.at(j, i) = scaled(t.at(i, j), Scalar(-1));
        }
    LieAlgebra out;
    out.name = std::move(name);
    out.dim = n;
    for (int i = 0; i < n; ++i) out.labels.push_back({BasisLabel::Matrix, i});
    out.table = std::move(t);
    out.killing = s.transpose() * L.killing * s;
    return out;
}

Vec basis_vector(const LieAlgebra& L, int i)
{
    Vec v = zero_vec<Scalar>(L.dim);
    v(i) = 1;
    return v;
}

Vec bracket(const LieAlgebra& L, const Vec& x, const Vec& y)
{
    if (x.size() != L.dim || y.size() != L.dim) throw std::invalid_argument("dimension mismatch");
    return L.table.apply(x, y);
}

Mat ad(const LieAlgebra& L, const Vec& x)
{
    if (x.size() != L.dim) throw std::invalid_argument("dimension mismatch");
    Mat m = zeros<Scalar>(L.dim, L.dim);
    SparseVec xs = to_sparse(x);
    for (int j = 0; j < L.dim; ++j)
        for (const auto& [k, v] : L.table.apply_right(xs, j)) m(k, j) = v;
    return m;
}

Mat ad_basis(const LieAlgebra& L, int i)
{
    Mat m = zeros<Scalar>(L.dim, L.dim);
    for (int j = 0; j < L.dim; ++j)
        for (const auto& [k, v] : L.table.at(i, j)) m(k, j) = v;
    return m;
}

Scalar killing(const LieAlgebra& L, const Vec& x, const Vec& y)
{
    if (x.size() != L.dim || y.size() != L.dim) throw std::invalid_argument("dimension mismatch");
    Scalar s;
    for (int i = 0; i < L.dim; ++i) {
        if (x(i).is_zero()) continue;
        for (int j = 0; j < L.dim; ++j)
            if (!y(j).is_zero() && !L.killing(i, j).is_zero()) s += x(i) * L.killing(i, j) * y(j);
    }
    return s;
}

Vec cartan_of_root(const LieAlgebra& L, int root)
{
    Vec h = zero_vec<Scalar>(L.dim);
    for (int i = 0; i < L.rank; ++i) h(i) = L.roots->roots[root][i];
    return h;
}

std::string JacobiResult::describe() const
{
    if (pass) return "";
    std::ostringstream os;
    os << "basis triple (" << witness[0] << "," << witness[1] << "," << witness[2] << ") gives";
    for (const auto& [k, x] : value) os << " " << x << "*e" << k;
    return os.str();
}

JacobiResult jacobi_check(const Table& t)
{
    JacobiResult res;
    const int n = t.dim;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const SparseVec& ij = t.at(i, j);
            for (int k = j + 1; k < n; ++k) {
                SparseVec s = t.apply_right(ij, k);
                axpy(s, Scalar(1), t.apply_right(t.at(j, k), i));
                axpy(s, Scalar(1), t.apply_right(t.at(k, i), j));
                if (!s.empty()) {
                    res.pass = false;
                    res.witness = {i, j, k};
                    res.value = s;
                    return res;
                }
            }
        }
    return res;
}

JacobiResult mixed_jacobi_check(const Table& a, const Table& b)
{
    JacobiResult res;
    const int n = a.dim;
    auto term = [&](int x, int y, int z) {
        SparseVec s = a.apply_right(b.at(x, y), z);
        axpy(s, Scalar(1), b.apply_right(a.at(x, y), z));
        return s;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                SparseVec s = term(i, j, k);
                axpy(s, Scalar(1), term(j, k, i));
                axpy(s, Scalar(1), term(k, i, j));
                if (!s.empty()) {
                    res.pass = false;
                    res.witness = {i, j, k};
                    res.value = s;
                    return res;
                }
            }
    return res;
}

InvarianceResult killing_invariance_check(const LieAlgebra& L)
{
    InvarianceResult res;
    const int n = L.dim;
    std::vector<SparseVec> krows(n);
    for (int i = 0; i < n; ++i) krows[i] = to_sparse(Vec(L.killing.row(i).transpose()));
    auto B = [&](const SparseVec& u, int z) {
        Scalar s;
        for (const auto& [k, x] : u) {
            const Scalar& kv = L.killing(k, z);
            if (!kv.is_zero()) s += x * kv;
        }
        return s;
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = y; z < n; ++z) {
                Scalar s = B(L.table.at(x, y), z) + B(L.table.at(x, z), y);
                if (!s.is_zero()) {
                    res.pass = false;
                    res.witness = {x, y, z};
                    return res;
                }
            }
    return res;
}

Mat commutator(const Mat& a, const Mat& b)
{
    return a * b - b * a;
}

Mat matrix_unit(int size, int i, int j)
{
    Mat m = zeros<Scalar>(size, size);
    m(i, j) = 1;
    return m;
}

namespace {

Vec flatten(const Mat& m)
{
    Vec v(m.rows() * m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
    return v;
}

} // namespace

Vec MatrixAlgebra::coords(const Mat& x) const
{
    Vec f = flatten(x);
    Vec probe(probe_rows.size());
    for (std::size_t k = 0; k < probe_rows.size(); ++k) probe(k) = f(probe_rows[k]);
    return probe_inverse * probe;
}

bool MatrixAlgebra::contains(const Mat& x) const
{
    return to_matrix(coords(x)) == x;
}

Mat MatrixAlgebra::to_matrix(const Vec& c) const
{
    Mat m = zeros<Scalar>(size, size);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!c(k).is_zero()) m += c(k) * basis[k];
    return m;
}

MatrixAlgebra matrix_algebra_from_basis(std::string name, int size, std::vector<Mat> basis)
{
    MatrixAlgebra M;
    M.model = name;
    M.size = size;
    M.basis = std::move(basis);
    const int d = static_cast<int>(M.basis.size());
    Mat F(size * size, d);
    for (int k = 0; k < d; ++k) F.col(k) = flatten(M.basis[k]);
    // independent rows of F give a coordinate probe
    Mat Ft = F.transpose();
    auto rr = rref(Ft);
    if (static_cast<int>(rr.pivots.size()) != d) throw std::invalid_argument("dependent basis");
    M.probe_rows = rr.pivots;
    Mat S(d, d);
    for (int k = 0; k < d; ++k) S.row(k) = F.row(M.probe_rows[k]);
    M.probe_inverse = inverse(S);

    Table t(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (i == j) continue;
            Mat c = commutator(M.basis[i], M.basis[j]);
            Vec x = M.coords(c);
            if (M.to_matrix(x) != c) throw std::invalid_argument("basis not closed under commutator");
            t.at(i, j) = to_sparse(x);
        }
    M.algebra = algebra_from_table(name, std::move(t));
    M.trace_form = Mat(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) M.trace_form(i, j) = (M.basis[i] * M.basis[j]).trace();
    return M;
}

MatrixAlgebra matrix_model(const std::string& model, int n)
{
    if (n < 1 || n > 8) throw std::invalid_argument("matrix model size out of range");
    std::vector<Mat> basis;
    int size = n;
    if (model == "gl") {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) basis.push_back(matrix_unit(n, i, j));
    } else if (model == "sl") {
        if (n < 2) throw std::invalid_argument("sl needs n >= 2");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) basis.push_back(matrix_unit(n, i, j));
        for (int i = 0; i + 1 < n; ++i)
            basis.push_back(matrix_unit(n, i, i) - matrix_unit(n, i + 1, i + 1));
    } else if (model == "so") {
        if (n < 2) throw std::invalid_argument("so needs n >= 2");
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) basis.push_back(matrix_unit(n, i, j) - matrix_unit(n, j, i));
    } else if (model == "sp") {
        size = 2 * n;
        Mat J = zeros<Scalar>(size, size);
        for (int i = 0; i < n; ++i) {
            J(i, n + i) = 1;
            J(n + i, i) = -1;
        }
        // X J + J X^T = 0 as a linear system on the entries of X
        const int m = size * size;
        Mat A = zeros<Scalar>(m, m);
        for (int p = 0; p < size; ++p)
            for (int q = 0; q < size; ++q) {
                Mat X = matrix_unit(size, p, q);
                Vec v = flatten(Mat(X * J + J * X.transpose()));
                A.col(p * size + q) = v;
            }
        Mat K = kernel(A);
        for (Eigen::Index k = 0; k < K.cols(); ++k) {
            Mat X(size, size);
            for (int p = 0; p < size; ++p)
                for (int q = 0; q < size; ++q) X(p, q) = K(p * size + q, k);
            basis.push_back(X);
        }
    } else {
        throw std::invalid_argument("unknown matrix model " + model);
    }
    MatrixAlgebra M = matrix_algebra_from_basis(model + "(" + std::to_string(n) + ")", size,
                                                std::move(basis));
    M.model = model;
    M.n = n;
    return M;
}

nlohmann::json structure_json(const LieAlgebra& L)
{
    nlohmann::json j;
    j["convention"] = kChevalleyConvention;
    j["algebra"] = L.name;
    j["dim"] = L.dim;
    std::vector<std::string> labels;
    for (int i = 0; i < L.dim; ++i) labels.push_back(L.label(i));
    j["basis"] = labels;
    nlohmann::json br = nlohmann::json::array();
    for (int a = 0; a < L.dim; ++a)
        for (int b = a + 1; b < L.dim; ++b) {
            const SparseVec& v = L.table.at(a, b);
            if (v.empty()) continue;
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& [k, x] : v) terms.push_back({k, x.str()});
            br.push_back({a, b, terms});
        }
    j["brackets"] = br;
    return j;
}

} // namespace bilie
