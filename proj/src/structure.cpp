#include "bilie/structure.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace bilie {

namespace {

/// [e_i, v]
SparseVec bracket_left(const Table& t, int i, const SparseVec& v)
{
    SparseVec out;
    for (const auto& [m, x] : v) axpy(out, x, t.at(i, m));
    return out;
}

std::vector<int> cartan_indices(const LieAlgebra& L)
{
    std::vector<int> out;
    for (int i = 0; i < L.dim; ++i)
        if (L.is_cartan(i)) out.push_back(i);
    return out;
}

} // namespace

std::vector<Scalar> sorted_unique(std::vector<Scalar> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Table modified_bracket(const LieAlgebra& L, const Mat& W)
{
    const int n = L.dim;
    const Table& T = L.table;
    auto cols = columns_sparse(W);
    Table out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            SparseVec v = T.apply_right(cols[i], j);
            axpy(v, Scalar(1), bracket_left(T, i, cols[j]));
            axpy(v, Scalar(-1), bilie::apply(cols, T.at(i, j)));
            out.at(j, i) = scaled(v, Scalar(-1));
            out.at(i, j) = std::move(v);
        }
    return out;
}

Table torsion(const LieAlgebra& L, const Mat& W)
{
    const int n = L.dim;
    auto cols = columns_sparse(W);
    Table mb = modified_bracket(L, W);
    Table out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            SparseVec v = L.table.apply(cols[i], cols[j]);
            axpy(v, Scalar(-1), bilie::apply(cols, mb.at(i, j)));
            out.at(j, i) = scaled(v, Scalar(-1));
            out.at(i, j) = std::move(v);
        }
    return out;
}

JacobiResult is_two_cocycle(const LieAlgebra& L, const Table& c)
{
    JacobiResult res;
    const int n = L.dim;
    const Table& T = L.table;
    auto term = [&](int x, int y, int z) {
        SparseVec s = bracket_left(T, x, c.at(y, z));
        axpy(s, Scalar(1), bracket_left(c, x, T.at(y, z)));
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

JacobiResult is_wno(const LieAlgebra& L, const Mat& W)
{
    return jacobi_check(modified_bracket(L, W));
}

JacobiResult compatibility_check(const Table& a, const Table& b)
{
    return mixed_jacobi_check(a, b);
}

std::string PairResult::describe() const
{
    if (pass) return "";
    return "tables differ at basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
}

PairResult tables_equal(const Table& a, const Table& b)
{
    PairResult r;
    if (auto d = first_difference(a, b)) {
        r.pass = false;
        r.i = (*d)[0];
        r.j = (*d)[1];
    }
    return r;
}

PairResult verify_primitive(const LieAlgebra& L, const Mat& W, const Mat& P)
{
    return tables_equal(torsion(L, W), modified_bracket(L, P));
}

Mat primitive_shift(const LieAlgebra& L, const Mat& P, const Mat& W, const Vec& x0)
{
    Mat a = ad(L, x0);
    return P - a * W - Scalar(1, 2) * (a * a);
}

Mat adjoint(const LieAlgebra& L, const Mat& W)
{
    return L.killing_inverse() * W.transpose() * L.killing;
}

bool is_killing_symmetric(const LieAlgebra& L, const Mat& W)
{
    return Mat(L.killing * W) == Mat(W.transpose() * L.killing);
}

Vec trace_pairing(const LieAlgebra& L, const Mat& W)
{
    const int n = L.dim;
    Vec v = zero_vec<Scalar>(n);
    for (int j = 0; j < n; ++j) {
        Scalar s;
        for (int k = 0; k < n; ++k)
            for (const auto& [m, x] : L.table.at(j, k))
                if (!W(k, m).is_zero()) s += W(k, m) * x;
        v(j) = s;
    }
    return v;
}

bool is_principal(const LieAlgebra& L, const Mat& W)
{
    return is_zero_matrix<Scalar>(trace_pairing(L, W));
}

Mat principal_projection_general(const LieAlgebra& L, const Mat& W)
{
    Vec y = L.killing_inverse() * trace_pairing(L, W);
    return W - ad(L, y);
}

bool preserves_root_grading(const LieAlgebra& L, const Mat& W)
{
    if (!L.has_grading()) return false;
    for (int a = 0; a < L.dim; ++a)
        for (int b = 0; b < L.dim; ++b) {
            if (W(a, b).is_zero()) continue;
            if (L.is_cartan(a) && L.is_cartan(b)) continue;
            if (a != b) return false;
        }
    return true;
}

Vec h_alpha(const LieAlgebra& L, int b)
{
    auto ci = cartan_indices(L);
    const int r = static_cast<int>(ci.size());
    Mat khh(r, r);
    Vec vals(r);
    for (int p = 0; p < r; ++p) {
        for (int q = 0; q < r; ++q) khh(p, q) = L.killing(ci[p], ci[q]);
        vals(p) = coeff(L.table.at(ci[p], b), b);
    }
    Vec c = inverse(khh) * vals;
    Vec h = zero_vec<Scalar>(L.dim);
    for (int p = 0; p < r; ++p) h(ci[p]) = c(p);
    return h;
}

Mat principal_projection(const LieAlgebra& L, const Mat& W)
{
    if (!preserves_root_grading(L, W))
        throw PreconditionError("principal_projection: operator does not preserve the root grading");
    Vec y = zero_vec<Scalar>(L.dim);
    for (int b = 0; b < L.dim; ++b)
        if (!L.is_cartan(b) && !W(b, b).is_zero()) y += W(b, b) * h_alpha(L, b);
    return W - ad(L, y);
}

Mat principal_primitive_general(const LieAlgebra& L, const Mat& W)
{
    const int n = L.dim;
    std::vector<Mat> ads;
    for (int j = 0; j < n; ++j) ads.push_back(ad_basis(L, j));
    Mat W2 = W * W;
    Mat P(n, n);
    for (int k = 0; k < n; ++k) {
        Mat M = W2 * ads[k] - Scalar(2) * (W * ads[k] * W) + ads[k] * W2;
        Vec v(n);
        for (int j = 0; j < n; ++j) {
            Scalar s;
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    if (!ads[j](p, q).is_zero() && !M(q, p).is_zero()) s += ads[j](p, q) * M(q, p);
            v(j) = s;
        }
        P.col(k) = Scalar(1, 2) * (L.killing_inverse() * v);
    }
    return P;
}

Mat principal_primitive(const LieAlgebra& L, const Mat& W)
{
    const int n = L.dim;
    if (preserves_root_grading(L, W)) {
        Table tw = torsion(L, W);
        Mat P = zeros<Scalar>(n, n);
        bool ok = true;
        for (int b = 0; b < n && ok; ++b) {
            if (L.is_cartan(b)) continue;
            const int o = L.opposite[b];
            const SparseVec& br = L.table.at(b, o);
            const SparseVec& tv = tw.at(b, o);
            if (tv.empty()) continue;
            if (br.empty() || tv.size() != br.size()) {
                ok = false;
                break;
            }
            Scalar ratio = tv.front().second / br.front().second;
            if (scaled(br, ratio) != tv) ok = false;
            P(b, b) = ratio / Scalar(2);
        }
        if (ok && verify_primitive(L, W, P).pass) return P;
    }
    if (n > 80) throw PreconditionError("principal_primitive: no root-diagonal primitive and algebra too large");
    return principal_primitive_general(L, W);
}

Mat bhat(const LieAlgebra& L, const Mat& W, const Mat& P, const Scalar& t)
{
    Mat ws = adjoint(L, W);
    return ws * W - Scalar(2) * P - t * (W + ws) + (t * t) * identity<Scalar>(L.dim);
}

BiLieStructure make_structure(AlgebraPtr L, Mat W, Mat P, std::string label)
{
    BiLieStructure s;
    s.second = modified_bracket(*L, W);
    s.principal = is_principal(*L, W);
    s.W = std::move(W);
    s.P = std::move(P);
    s.alg = std::move(L);
    s.label = std::move(label);
    return s;
}

std::vector<CheckResult> verify_structure(const BiLieStructure& s)
{
    const LieAlgebra& L = *s.alg;
    std::vector<CheckResult> out;
    auto j = jacobi_check(s.second);
    out.push_back({"jacobi", j.pass, j.describe()});
    auto c = compatibility_check(L.table, s.second);
    out.push_back({"compatibility", c.pass, c.describe()});
    auto mb = tables_equal(s.second, modified_bracket(L, s.W));
    out.push_back({"second_bracket_is_modified_bracket", mb.pass, mb.describe()});
    Table tw = torsion(L, s.W);
    auto pr = tables_equal(tw, modified_bracket(L, s.P));
    out.push_back({"main_identity", pr.pass, pr.describe()});
    auto cc = is_two_cocycle(L, tw);
    out.push_back({"torsion_cocycle", cc.pass, cc.describe()});
    bool principal = is_principal(L, s.W);
    out.push_back({"principal", principal == s.principal && principal,
                   principal ? "" : "Tr(W ad x) != 0 for some basis x"});
    bool sym = is_killing_symmetric(L, s.P);
    out.push_back({"primitive_symmetric", sym, sym ? "" : "P is not Killing-symmetric"});
    return out;
}

Mat commutant_kernel(const LieAlgebra& L, const std::vector<const Mat*>& commute,
                     const std::vector<std::pair<const Mat*, Scalar>>& eigen)
{
    const int n = L.dim;
    bool graded = L.has_grading();
    for (auto* c : commute) graded = graded && preserves_root_grading(L, *c);
    for (auto& e : eigen) graded = graded && preserves_root_grading(L, *e.first);

    std::vector<std::vector<int>> blocks;
    if (graded) {
        blocks.push_back(cartan_indices(L));
        for (int b = 0; b < n; ++b)
            if (!L.is_cartan(b)) blocks.push_back({b});
    } else {
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        blocks.push_back(all);
    }
    std::vector<std::vector<SparseVec>> ccols;
    for (auto* c : commute) ccols.push_back(columns_sparse(*c));
    std::vector<std::vector<SparseVec>> ecols;
    for (auto& e : eigen) ecols.push_back(columns_sparse(*e.first));

    std::vector<Vec> result;
    for (const auto& B : blocks) {
        const int m = static_cast<int>(B.size());
        std::map<std::tuple<int, int, int>, std::vector<Scalar>> rows;
        auto put = [&](std::tuple<int, int, int> key, int p, const Scalar& v) {
            auto it = rows.find(key);
            if (it == rows.end()) it = rows.emplace(key, std::vector<Scalar>(m)).first;
            it->second[p] += v;
        };
        for (int p = 0; p < m; ++p) {
            const int b = B[p];
            for (std::size_t ci = 0; ci < ccols.size(); ++ci)
                for (int k = 0; k < n; ++k) {
                    SparseVec v = bracket_left(L.table, b, ccols[ci][k]);
                    axpy(v, Scalar(-1), bilie::apply(ccols[ci], L.table.at(b, k)));
                    for (const auto& [row, x] : v) put({static_cast<int>(ci), k, row}, p, x);
                }
            for (std::size_t ei = 0; ei < ecols.size(); ++ei) {
                SparseVec v = ecols[ei][b];
                axpy(v, -eigen[ei].second, SparseVec{{b, Scalar(1)}});
                for (const auto& [row, x] : v) put({-1 - static_cast<int>(ei), 0, row}, p, x);
            }
        }
        Mat A = zeros<Scalar>(static_cast<Eigen::Index>(rows.size()), m);
        int r = 0;
        for (auto& [key, vals] : rows) {
            for (int p = 0; p < m; ++p) A(r, p) = vals[p];
            ++r;
        }
        Mat K = rows.empty() ? identity<Scalar>(m) : kernel(A);
        for (Eigen::Index c = 0; c < K.cols(); ++c) {
            Vec x = zero_vec<Scalar>(n);
            for (int p = 0; p < m; ++p) x(B[p]) = K(p, c);
            result.push_back(x);
        }
    }
    Mat out(n, static_cast<Eigen::Index>(result.size()));
    for (std::size_t c = 0; c < result.size(); ++c) out.col(c) = result[c];
    return out;
}

Mat centre(const BiLieStructure& s, const Scalar& t)
{
    return commutant_kernel(*s.alg, {&s.W}, {{&s.W, t}});
}

Subspace::Subspace(const Mat& basis, int dim) : n_(dim)
{
    if (basis.cols() == 0) return;
    auto rr = rref(Mat(basis.transpose()));
    for (std::size_t k = 0; k < rr.pivots.size(); ++k) {
        rows_.push_back(to_sparse(Vec(rr.r.row(k).transpose())));
        pivots_.push_back(rr.pivots[k]);
    }
}

bool Subspace::contains(SparseVec v) const
{
    for (std::size_t k = 0; k < rows_.size() && !v.empty(); ++k) {
        Scalar c = coeff(v, pivots_[k]);
        if (!c.is_zero()) axpy(v, -c, rows_[k]);
    }
    return v.empty();
}

bool is_subalgebra(const LieAlgebra& L, const Mat& basis, std::string* witness)
{
    Subspace S(basis, L.dim);
    std::vector<SparseVec> cols = columns_sparse(basis);
    for (std::size_t i = 0; i < cols.size(); ++i)
        for (std::size_t j = i + 1; j < cols.size(); ++j)
            if (!S.contains(L.table.apply(cols[i], cols[j]))) {
                if (witness)
                    *witness = "bracket of basis vectors " + std::to_string(i) + "," + std::to_string(j) +
                               " leaves the subspace";
                return false;
            }
    return true;
}

namespace {

bool contains_all(const Subspace& S, const Mat& m)
{
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        if (!S.contains(column_sparse(m, static_cast<int>(c)))) return false;
    return true;
}

} // namespace

TimesReport times(const BiLieStructure& s)
{
    const LieAlgebra& L = *s.alg;
    if (!preserves_root_grading(L, s.W))
        throw PreconditionError("times: structure is not regular (W does not preserve the root grading)");
    if (!preserves_root_grading(L, s.P))
        throw PreconditionError("times: primitive does not preserve the root grading");
    TimesReport rep;
    std::vector<Scalar> all;
    for (int b = 0; b < L.dim; ++b) {
        if (L.is_cartan(b)) continue;
        const int o = L.opposite[b];
        Scalar sum = s.W(b, b) + s.W(o, o);
        Scalar prod = s.W(b, b) * s.W(o, o) - Scalar(2) * s.P(b, b);
        Scalar disc = sum * sum - Scalar(4) * prod, root;
        if (!exact_sqrt(disc, root))
            throw PreconditionError("times: quadratic for " + L.label(b) + " has discriminant " + disc.str() +
                                    " with no square root in Q(i)");
        Scalar t1 = (sum - root) / Scalar(2), t2 = (sum + root) / Scalar(2);
        if (t2 < t1) std::swap(t1, t2);
        rep.per_root[b] = {t1, t2};
        all.push_back(t1);
        all.push_back(t2);
    }
    all = sorted_unique(all);
    auto ci = cartan_indices(L);
    const int r = static_cast<int>(ci.size());
    Mat wh(r, r);
    for (int p = 0; p < r; ++p)
        for (int q = 0; q < r; ++q) wh(p, q) = s.W(ci[p], ci[q]);
    int total = 0;
    for (const auto& t : all) {
        int d = r - rank(Mat(wh - t * identity<Scalar>(r)));
        if (d > 0) rep.theta.push_back(t);
        total += d;
    }
    if (total != r)
        throw PreconditionError("times: W restricted to the Cartan subalgebra is not diagonalizable "
                                "with eigenvalues among the root times");
    rep.times = all;

    rep.theta_consistent = true;
    for (const auto& t : rep.times) {
        Mat z = centre(s, t);
        bool in_theta = std::find(rep.theta.begin(), rep.theta.end(), t) != rep.theta.end();
        if ((z.cols() > 0) != in_theta) rep.theta_consistent = false;
        rep.centres[t] = z;
    }

    // ker bhat nonzero at every time and zero at sample points outside T
    Mat ws = adjoint(L, s.W);
    Mat A = ws * s.W - Scalar(2) * s.P;
    Mat S = s.W + ws;
    Mat I = identity<Scalar>(L.dim);
    auto kdim = [&](const Scalar& t) { return L.dim - rank(Mat(A - t * S + (t * t) * I)); };
    rep.bhat_consistent = true;
    for (const auto& t : rep.times)
        if (kdim(t) == 0) {
            rep.bhat_consistent = false;
            rep.bhat_witness = "trivial kernel of bhat at time " + t.str();
        }
    std::vector<Scalar> samples;
    mpq_class lo = 0, hi = 0;
    for (const auto& t : rep.times) {
        lo = std::min(lo, t.re());
        hi = std::max(hi, t.re());
    }
    samples.push_back(Scalar(mpq_class(hi + 1)));
    samples.push_back(Scalar(mpq_class(lo - 1)));
    for (std::size_t k = 0; k + 1 < rep.times.size(); ++k)
        samples.push_back((rep.times[k] + rep.times[k + 1]) / Scalar(2));
    for (const auto& t : samples) {
        if (std::find(rep.times.begin(), rep.times.end(), t) != rep.times.end()) continue;
        if (kdim(t) != 0) {
            rep.bhat_consistent = false;
            rep.bhat_witness = "nontrivial kernel of bhat at non-time " + t.str();
        }
    }
    return rep;
}

std::vector<Scalar> bhat_kernel_scan(const BiLieStructure& s, const std::vector<Scalar>& candidates)
{
    const LieAlgebra& L = *s.alg;
    std::vector<Scalar> out;
    for (const auto& t : candidates)
        if (rank(bhat(L, s.W, s.P, t)) < L.dim) out.push_back(t);
    return sorted_unique(out);
}

nlohmann::json TimesReport::to_json(const LieAlgebra& L) const
{
    nlohmann::json j;
    std::vector<std::string> t, th;
    for (const auto& x : times) t.push_back(x.str());
    for (const auto& x : theta) th.push_back(x.str());
    j["times"] = t;
    j["theta"] = th;
    nlohmann::json pr = nlohmann::json::object();
    for (const auto& [b, p] : per_root) pr[L.label(b)] = {p[0].str(), p[1].str()};
    j["per_root_pairs"] = pr;
    nlohmann::json cd = nlohmann::json::object();
    for (const auto& [t0, z] : centres) cd[t0.str()] = z.cols();
    j["centre_dims"] = cd;
    j["bhat_consistent"] = bhat_consistent;
    j["theta_consistent"] = theta_consistent;
    return j;
}

CheckResult cartan_factorization_check(const BiLieStructure& s, const TimesReport& r)
{
    const LieAlgebra& L = *s.alg;
    const Mat I = identity<Scalar>(L.dim);
    for (const auto& [b, p] : r.per_root) {
        Vec h = h_alpha(L, b);
        Vec v = (s.W - p[0] * I) * ((s.W - p[1] * I) * h);
        if (!is_zero_matrix<Scalar>(v)) return {"cartan_factorization", false, "fails for " + L.label(b)};
    }
    return {"cartan_factorization", true, ""};
}

CheckResult centre_disjoint_commuting_check(const BiLieStructure& s, const TimesReport& r)
{
    const LieAlgebra& L = *s.alg;
    std::vector<std::pair<Scalar, Mat>> cs(r.centres.begin(), r.centres.end());
    for (std::size_t a = 0; a < cs.size(); ++a)
        for (std::size_t b = a + 1; b < cs.size(); ++b) {
            const Mat& x = cs[a].second;
            const Mat& y = cs[b].second;
            if (x.cols() == 0 || y.cols() == 0) continue;
            if (rank(hcat(x, y)) != x.cols() + y.cols())
                return {"centres_disjoint_commuting", false,
                        "centres at " + cs[a].first.str() + " and " + cs[b].first.str() + " intersect"};
            for (Eigen::Index i = 0; i < x.cols(); ++i)
                for (Eigen::Index j = 0; j < y.cols(); ++j)
                    if (!L.table.apply(column_sparse(x, static_cast<int>(i)), column_sparse(y, static_cast<int>(j)))
                             .empty())
                        return {"centres_disjoint_commuting", false,
                                "centres at " + cs[a].first.str() + " and " + cs[b].first.str() +
                                    " do not commute"};
        }
    return {"centres_disjoint_commuting", true, ""};
}

CheckResult cartan_in_centres_check(const BiLieStructure& s, const TimesReport& r)
{
    const LieAlgebra& L = *s.alg;
    Mat all(L.dim, 0);
    for (const auto& [t, z] : r.centres) all = hcat(all, z);
    Subspace S(all, L.dim);
    for (int i = 0; i < L.dim; ++i)
        if (L.is_cartan(i) && !S.contains({{i, Scalar(1)}}))
            return {"cartan_in_centres", false, L.label(i) + " is not in the sum of centres"};
    return {"cartan_in_centres", true, ""};
}

AuxiliaryReport auxiliary_subalgebras(const BiLieStructure& s, const TimesReport& r)
{
    const LieAlgebra& L = *s.alg;
    AuxiliaryReport a;
    a.gP = commutant_kernel(L, {&s.P}, {});
    a.zhat = commutant_kernel(L, {&s.P}, {{&s.P, Scalar(0)}});
    a.z = Mat(L.dim, 0);
    for (const auto& [t, z] : r.centres) a.z = hcat(a.z, z);

    auto ci = cartan_indices(L);
    const int rk = static_cast<int>(ci.size());
    Mat g0(L.dim, 0);
    for (const auto& th : r.theta) {
        Mat wh(rk, rk);
        for (int p = 0; p < rk; ++p)
            for (int q = 0; q < rk; ++q) wh(p, q) = s.W(ci[p], ci[q]);
        Mat k = kernel(Mat(wh - th * identity<Scalar>(rk)));
        Mat emb = zeros<Scalar>(L.dim, k.cols());
        for (int p = 0; p < rk; ++p) emb.row(ci[p]) = k.row(p);
        g0 = hcat(g0, emb);
        for (const auto& [b, pr] : r.per_root)
            if (pr[0] == th && pr[1] == th) {
                Mat e = zeros<Scalar>(L.dim, 1);
                e(b, 0) = 1;
                g0 = hcat(g0, e);
            }
    }
    a.g0 = g0;

    std::string w;
    a.closed = true;
    for (auto* m : {&a.gP, &a.zhat, &a.g0})
        if (!is_subalgebra(L, *m, &w)) {
            a.closed = false;
            a.witness = w;
        }
    Subspace sz(a.zhat, L.dim), sp(a.gP, L.dim);
    a.chain = contains_all(sz, a.z) && contains_all(sp, a.zhat);
    a.g0_in_zhat = contains_all(sz, a.g0);
    a.g0_equals_zhat = a.g0_in_zhat && rank(a.g0) == sz.dim();
    return a;
}

} // namespace bilie
