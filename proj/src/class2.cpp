#include "bilie/class2.hpp"

#include "bilie/class1.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace bilie {

Lattice::Lattice(int n, const std::vector<RootVec>& generators) : n_(n)
{
    using Row = std::vector<long long>;
    std::vector<Row> M;
    for (const auto& g : generators) M.emplace_back(g.begin(), g.end());
    V_.assign(n, Row(n, 0));
    for (int i = 0; i < n; ++i) V_[i][i] = 1;
    const int rows = static_cast<int>(M.size());
    auto swap_cols = [&](int a, int b) {
        for (auto& r : M) std::swap(r[a], r[b]);
        for (auto& r : V_) std::swap(r[a], r[b]);
    };
    auto col_sub = [&](int j, int t, long long q) {
        for (auto& r : M) r[j] -= q * r[t];
        for (auto& r : V_) r[j] -= q * r[t];
    };
    int t = 0;
    while (t < rows && t < n) {
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < n; ++j)
                if (M[i][j] != 0 && (pi < 0 || std::llabs(M[i][j]) < std::llabs(M[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(M[t], M[pi]);
        swap_cols(t, pj);
        bool done = false;
        while (!done) {
            done = true;
            for (int i = t + 1; i < rows; ++i) {
                if (M[i][t] == 0) continue;
                long long q = M[i][t] / M[t][t];
                for (int j = 0; j < n; ++j) M[i][j] -= q * M[t][j];
                if (M[i][t] != 0) {
                    std::swap(M[i], M[t]);
                    done = false;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (M[t][j] == 0) continue;
                col_sub(j, t, M[t][j] / M[t][t]);
                if (M[t][j] != 0) {
                    swap_cols(j, t);
                    done = false;
                }
            }
            if (!done) continue;
            for (int i = t + 1; i < rows && done; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (M[i][j] % M[t][t] != 0) {
                        for (int k = 0; k < n; ++k) M[t][k] += M[i][k];
                        done = false;
                        break;
                    }
        }
        d_.push_back(std::llabs(M[t][t]));
        ++t;
    }
    rank_ = t;
    for (long long d : d_)
        if (d > 1) torsion_.push_back(d);
}

namespace {

std::vector<long long> transform(const std::vector<std::vector<long long>>& V, const RootVec& v)
{
    const int n = static_cast<int>(v.size());
    std::vector<long long> w(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[j] += v[i] * V[i][j];
    return w;
}

} // namespace

bool Lattice::contains(const RootVec& v) const
{
    auto w = transform(V_, v);
    for (int t = 0; t < n_; ++t) {
        if (t < rank_) {
            if (w[t] % d_[t] != 0) return false;
        } else if (w[t] != 0) {
            return false;
        }
    }
    return true;
}

std::vector<long long> Lattice::coset(const RootVec& v) const
{
    auto w = transform(V_, v);
    std::vector<long long> out;
    for (int t = 0; t < rank_; ++t)
        if (d_[t] > 1) out.push_back(((w[t] % d_[t]) + d_[t]) % d_[t]);
    for (int t = rank_; t < n_; ++t) out.push_back(w[t]);
    return out;
}

std::string Lattice::group() const
{
    std::vector<std::string> parts(free_rank(), "Z");
    for (long long d : torsion_) parts.push_back("Z" + std::to_string(d));
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k) s += " x " + parts[k];
    return s;
}

ToralGrading toral_grading(RootSystemPtr R, const std::vector<int>& r0, const std::vector<RootVec>& extra)
{
    ToralGrading g;
    g.R = R;
    g.r0 = r0;
    std::sort(g.r0.begin(), g.r0.end());
    std::vector<RootVec> gens = extra;
    for (int k : g.r0) gens.push_back(R->roots[k]);
    Lattice lat(R->rank, gens);
    g.group = lat.group();
    std::set<int> zero;
    for (int a = 0; a < R->size(); ++a) {
        auto d = lat.coset(R->roots[a]);
        bool z = std::all_of(d.begin(), d.end(), [](long long x) { return x == 0; });
        if (z)
            zero.insert(a);
        else
            g.components[d].push_back(a);
        g.degree.push_back(std::move(d));
    }
    g.zero_is_r0 = zero == std::set<int>(g.r0.begin(), g.r0.end());
    if (!g.zero_is_r0) g.witness = "zero component differs from R0";
    for (const auto& [deg, roots] : g.components) {
        std::set<int> comp(roots.begin(), roots.end());
        for (int start : roots) {
            std::set<int> seen{start};
            std::vector<int> stack{start};
            while (!stack.empty()) {
                int b = stack.back();
                stack.pop_back();
                for (int c : g.r0) {
                    auto s = R->sum(b, c);
                    if (s && seen.insert(*s).second) stack.push_back(*s);
                }
            }
            if (seen != comp) {
                g.irreducible = false;
                g.witness = "component of " + root_name(*R, start) + " is reducible";
                break;
            }
        }
        if (!g.irreducible) break;
    }
    return g;
}

bool same_partition(const ToralGrading& a, const ToralGrading& b)
{
    const int n = static_cast<int>(a.degree.size());
    if (n != static_cast<int>(b.degree.size())) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((a.degree[i] == a.degree[j]) != (b.degree[i] == b.degree[j])) return false;
    return true;
}

std::optional<Triangle> offset_triangle(const RootSystem& R, const std::vector<int>& r0)
{
    std::set<int> s(r0.begin(), r0.end());
    for (const auto& t : triangles(R))
        if (!s.count(t.a) && !s.count(t.b) && !s.count(t.c)) return t;
    return std::nullopt;
}

namespace {

Mat cartan_span(const LieAlgebra& L, const std::vector<int>& roots)
{
    Mat m(L.rank, 0);
    for (int a : roots)
        if (L.roots->is_positive(a)) {
            Mat c(L.rank, 1);
            c.col(0) = cartan_of_root(L, a).head(L.rank);
            m = hcat(m, c);
        }
    return m.cols() == 0 ? m : column_basis(m);
}

Scalar root_on(const LieAlgebra& L, int a, const Vec& h)
{
    Scalar v = 0;
    for (int p = 0; p < L.rank; ++p) v += L.root_values(a, p) * h(p);
    return v;
}

CheckResult fail(CheckResult c, std::string w)
{
    c.pass = false;
    c.witness = std::move(w);
    return c;
}

} // namespace

CheckResult validate_split(const AdmissibleSplit& s)
{
    CheckResult c{"admissible_split", true, ""};
    const LieAlgebra& L = *s.alg;
    const RootSystem& R = *L.roots;
    auto f0 = check_closed_symmetric(R, s.r0);
    if (!f0.closed || !f0.symmetric) return fail(c, "R0 is not closed and symmetric");
    std::vector<int> u = s.r1;
    u.insert(u.end(), s.r2.begin(), s.r2.end());
    std::sort(u.begin(), u.end());
    std::vector<int> r0 = s.r0;
    std::sort(r0.begin(), r0.end());
    if (u != r0 || std::adjacent_find(u.begin(), u.end()) != u.end()) return fail(c, "R1, R2 do not partition R0");
    for (const auto* part : {&s.r1, &s.r2}) {
        auto f = check_closed_symmetric(R, *part);
        if (!f.closed || !f.symmetric) return fail(c, "a part of R0 is not closed and symmetric");
    }
    if (s.h1.cols() + s.h2.cols() != L.rank || rank(Mat(hcat(s.h1, s.h2))) != L.rank)
        return fail(c, "h1 + h2 is not a direct sum equal to h");
    for (int a : s.r1)
        if (!span_contains(s.h1, Vec(cartan_of_root(L, a).head(L.rank)))) return fail(c, "H_" + root_name(R, a) + " not in h1");
    for (int a : s.r2)
        if (!span_contains(s.h2, Vec(cartan_of_root(L, a).head(L.rank)))) return fail(c, "H_" + root_name(R, a) + " not in h2");
    for (int a : s.r1)
        for (int b : s.r2)
            if (R.sum(a, b)) return fail(c, root_name(R, a) + " + " + root_name(R, b) + " is a root");
    for (int a : s.r1)
        for (int k = 0; k < s.h2.cols(); ++k)
            if (!root_on(L, a, s.h2.col(k)).is_zero()) return fail(c, root_name(R, a) + " does not vanish on h2");
    for (int b : s.r2)
        for (int k = 0; k < s.h1.cols(); ++k)
            if (!root_on(L, b, s.h1.col(k)).is_zero()) return fail(c, root_name(R, b) + " does not vanish on h1");
    if (!offset_triangle(R, s.r0)) return fail(c, "not admissible: no triangle in R minus R0");
    return c;
}

std::vector<std::vector<int>> simple_factors(const RootSystem& R, const std::vector<int>& r0)
{
    std::vector<int> pos;
    for (int a : r0)
        if (R.is_positive(a)) pos.push_back(a);
    std::sort(pos.begin(), pos.end());
    std::vector<int> parent(pos.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = i + 1; j < pos.size(); ++j)
            if (R.inner(pos[i], pos[j]) != 0) parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
    std::map<int, std::vector<int>> groups;
    for (std::size_t i = 0; i < pos.size(); ++i) groups[find(static_cast<int>(i))].push_back(pos[i]);
    std::vector<std::vector<int>> out;
    for (auto& [k, g] : groups) {
        std::vector<int> full = g;
        for (int a : g) full.push_back(R.neg(a));
        std::sort(full.begin(), full.end());
        out.push_back(full);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Mat cartan_centre(const LieAlgebra& L, const std::vector<int>& r0)
{
    std::vector<int> pos;
    for (int a : r0)
        if (L.roots->is_positive(a)) pos.push_back(a);
    if (pos.empty()) return identity<Scalar>(L.rank);
    Mat m(static_cast<int>(pos.size()), L.rank);
    for (std::size_t k = 0; k < pos.size(); ++k) m.row(static_cast<int>(k)) = L.root_values.row(pos[k]);
    return kernel(m);
}

AdmissibleSplit split_by_factors(AlgebraPtr L, const std::vector<int>& r0, const std::vector<int>& first_factors,
                                 bool centre_first)
{
    const RootSystem& R = *L->roots;
    auto factors = simple_factors(R, r0);
    AdmissibleSplit s;
    s.alg = L;
    s.r0 = r0;
    std::sort(s.r0.begin(), s.r0.end());
    for (std::size_t f = 0; f < factors.size(); ++f) {
        bool first = std::find(first_factors.begin(), first_factors.end(), static_cast<int>(f)) != first_factors.end();
        auto& dst = first ? s.r1 : s.r2;
        dst.insert(dst.end(), factors[f].begin(), factors[f].end());
    }
    for (int f : first_factors)
        if (f < 0 || f >= static_cast<int>(factors.size()))
            throw PreconditionError("split_by_factors: factor index out of range");
    std::sort(s.r1.begin(), s.r1.end());
    std::sort(s.r2.begin(), s.r2.end());
    Mat z = cartan_centre(*L, r0);
    s.h1 = cartan_span(*L, s.r1);
    s.h2 = cartan_span(*L, s.r2);
    if (centre_first)
        s.h1 = hcat(s.h1, z);
    else
        s.h2 = hcat(s.h2, z);
    return s;
}

Affine Affine::constant(const Scalar& x, std::size_t vars)
{
    Affine a(vars);
    a.c[0] = x;
    return a;
}

Affine Affine::variable(std::size_t i, std::size_t vars)
{
    Affine a(vars);
    a.c[i + 1] = 1;
    return a;
}

bool Affine::is_zero() const
{
    return std::all_of(c.begin(), c.end(), [](const Scalar& x) { return x.is_zero(); });
}

Scalar Affine::eval(const std::vector<Scalar>& values) const
{
    Scalar v = c[0];
    for (std::size_t i = 0; i < values.size() && i + 1 < c.size(); ++i) v += c[i + 1] * values[i];
    return v;
}

std::string Affine::str(const std::vector<std::string>& names) const
{
    std::string s;
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        std::string coef = c[i] == Scalar(1) ? "" : c[i] == Scalar(-1) ? "-" : c[i].str();
        std::string term = coef + names[i - 1];
        if (!s.empty() && term[0] != '-') s += "+";
        s += term;
    }
    if (!c[0].is_zero() || s.empty()) {
        std::string k = c[0].str();
        if (!s.empty() && k[0] != '-') s += "+";
        s += k;
    }
    return s;
}

Affine operator+(const Affine& x, const Affine& y)
{
    Affine r = x;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += y.c[i];
    return r;
}

Affine operator-(const Affine& x, const Affine& y)
{
    Affine r = x;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= y.c[i];
    return r;
}

Affine operator-(const Affine& x)
{
    Affine r = x;
    for (auto& v : r.c) v = -v;
    return r;
}

Affine operator*(const Scalar& s, const Affine& x)
{
    Affine r = x;
    for (auto& v : r.c) v *= s;
    return r;
}

LabelFn parabolic_labels(const RootSystem& R, const std::vector<int>& r0, int sign)
{
    std::set<int> s(r0.begin(), r0.end());
    return [&R, s, sign](const Triangle& t) {
        if (s.count(t.a) || s.count(t.b) || s.count(t.c)) return 0;
        int pos = R.is_positive(t.a) + R.is_positive(t.b) + R.is_positive(t.c);
        return pos == 2 ? sign : -sign;
    };
}

LabelFn zm_labels(const std::vector<int>& degree, int m)
{
    return [degree, m](const Triangle& t) {
        int i = degree[t.a], j = degree[t.b], k = degree[t.c];
        if (i == 0 || j == 0 || k == 0) return 0;
        int s = i + j + k;
        return s == m ? 1 : s == 2 * m ? -1 : 0;
    };
}

Reconstruction reconstruct_kappa(const RootSystem& R, const std::vector<Affine>& seeds, const Affine& a,
                                 const LabelFn& label, bool last)
{
    Reconstruction out;
    const std::size_t vars = a.c.size() - 1;
    out.kappa.assign(R.size(), Affine(vars));
    for (int k = 0; k < R.num_positive; ++k) {
        if (R.height(k) == 1) {
            int i = static_cast<int>(std::find(R.roots[k].begin(), R.roots[k].end(), 1) - R.roots[k].begin());
            out.kappa[k] = seeds[i];
        } else {
            std::optional<std::pair<int, int>> dec;
            for (int b = 0; b < R.num_positive; ++b) {
                RootVec d = R.roots[k];
                for (int i = 0; i < R.rank; ++i) d[i] -= R.roots[b][i];
                auto c = R.find(d);
                if (!c || !R.is_positive(*c) || *c < b) continue;
                dec = std::make_pair(b, *c);
                if (!last) break;
            }
            auto [b, c] = *dec;
            std::array<int, 3> t{b, c, R.neg(k)};
            std::sort(t.begin(), t.end());
            int l = label({t[0], t[1], t[2]});
            out.kappa[k] = out.kappa[b] + out.kappa[c] - Scalar(l) * a;
        }
        out.kappa[R.neg(k)] = -out.kappa[k];
    }
    for (const auto& t : triangles(R)) {
        Affine sum = out.kappa[t.a] + out.kappa[t.b] + out.kappa[t.c];
        if (!(sum == Scalar(label(t)) * a)) {
            out.consistent = false;
            out.witness = "triangle " + root_name(R, t.a) + ", " + root_name(R, t.b) + ", " + root_name(R, t.c);
            break;
        }
    }
    return out;
}

Class2Build wno_class2(const AdmissibleSplit& split, const Scalar& t1, const Scalar& t2,
                       const std::vector<Scalar>& kappa, const std::string& name)
{
    auto v = validate_split(split);
    if (!v.pass) throw PreconditionError(name + ": " + v.witness);
    if (t1 == t2) throw PreconditionError(name + ": the two times must differ");
    const LieAlgebra& L = *split.alg;
    const RootSystem& R = *L.roots;
    Class2Build b;
    b.split = split;
    b.t1 = t1;
    b.t2 = t2;
    b.kappa = kappa;
    Scalar a = (t1 - t2) / Scalar(2);
    auto tr = triangle_rule_check(R, kappa, a, split.r0);
    if (!tr.pass) throw PreconditionError(name + ": kappa violates the triangle rule: " + tr.witness);
    b.labels = tr.labels;
    b.grading = toral_grading(L.roots, split.r0);
    for (const auto& [deg, roots] : b.grading.components)
        for (int r : roots)
            if (kappa[r] != kappa[roots[0]])
                throw PreconditionError(name + ": kappa is not constant on the toral component of " + root_name(R, r));

    Mat W = zeros<Scalar>(L.dim, L.dim);
    Mat S = hcat(split.h1, split.h2);
    Mat D = zeros<Scalar>(L.rank, L.rank);
    for (int k = 0; k < L.rank; ++k) D(k, k) = k < split.h1.cols() ? t1 : t2;
    W.topLeftCorner(L.rank, L.rank) = S * D * inverse(S);
    std::set<int> r1(split.r1.begin(), split.r1.end()), r2(split.r2.begin(), split.r2.end());
    for (int r = 0; r < R.size(); ++r) {
        int bi = L.root_basis(r);
        W(bi, bi) = r1.count(r) ? t1 : r2.count(r) ? t2 : (t1 + t2) / Scalar(2) + kappa[r];
    }
    b.W_raw = W;
    Mat pw = principal_projection(L, W);
    b.s = make_structure(split.alg, pw, principal_primitive(L, pw), name);
    return b;
}

std::vector<CheckResult> check_class2(const Class2Build& b, const TimesReport& r)
{
    const LieAlgebra& L = *b.s.alg;
    const RootSystem& R = *L.roots;
    std::vector<CheckResult> out;
    auto expect_times = sorted_unique({b.t1, b.t2});
    CheckResult tc{"times_equal_base", r.times == expect_times, ""};
    if (!tc.pass)
        for (const auto& t : r.times) tc.witness += t.str() + " ";
    out.push_back(tc);

    auto ap = extract_admissible_pair(b.s, r);
    auto cls = classify(ap.diagram);
    out.push_back({"class_ii", cls.cls == DiagramClass::II, cls.cls == DiagramClass::II ? "" : "no {t1t2}-triangle"});
    out.push_back({"dichotomy", dichotomy_check(ap.diagram), ""});
    auto tsr = validate_tsr(ap.diagram);
    out.push_back({"tsr", tsr.pass, tsr.describe(R)});
    out.push_back(lemma_10_10_check(ap.diagram));

    std::set<int> r1(b.split.r1.begin(), b.split.r1.end()), r2(b.split.r2.begin(), b.split.r2.end());
    CheckResult dm{"diagram_matches", true, ""};
    for (int a = 0; a < R.num_positive && dm.pass; ++a) {
        TimePair want = r1.count(a) ? make_time_pair(b.t1, b.t1)
                        : r2.count(a) ? make_time_pair(b.t2, b.t2)
                                      : make_time_pair(b.t1, b.t2);
        if (!want.same_times(ap.diagram.pairs[a])) {
            dm.pass = false;
            dm.witness = root_name(R, a) + ": " + ap.diagram.pairs[a].str() + " expected " + want.str();
        }
    }
    out.push_back(dm);

    auto kap = root_kappa(L, b.s.W);
    auto ks = kappa_sum_rule_check(ap.diagram, kap);
    out.push_back(ks);
    CheckResult li{"labels_invariant_under_projection", true, ""};
    for (const auto& t : triangles(R))
        if (kap[t.a] + kap[t.b] + kap[t.c] != b.kappa[t.a] + b.kappa[t.b] + b.kappa[t.c]) {
            li.pass = false;
            li.witness = TriangleCheck{false, t}.describe(R);
            break;
        }
    out.push_back(li);

    // basic subalgebra g0 = h + R0 roots
    Mat g0 = zeros<Scalar>(L.dim, L.rank);
    for (int k = 0; k < L.rank; ++k) g0(k, k) = 1;
    for (int a : b.split.r0) {
        Mat e = zeros<Scalar>(L.dim, 1);
        e(L.root_basis(a), 0) = 1;
        g0 = hcat(g0, e);
    }
    auto aux = auxiliary_subalgebras(b.s, r);
    CheckResult bs{"basic_subalgebra", spans_equal(g0, aux.g0), ""};
    if (!bs.pass) bs.witness = "dim g0 = " + std::to_string(aux.g0.cols()) + ", expected " + std::to_string(g0.cols());
    out.push_back(bs);

    CheckResult cf{"centre_formula", true, ""};
    for (int side = 0; side < 2 && cf.pass; ++side) {
        const Mat& hi = side == 0 ? b.split.h1 : b.split.h2;
        const Mat& hj = side == 0 ? b.split.h2 : b.split.h1;
        const auto& ri = side == 0 ? b.split.r1 : b.split.r2;
        const Scalar& t = side == 0 ? b.t1 : b.t2;
        Mat f = zeros<Scalar>(L.dim, hi.cols());
        for (int k = 0; k < hi.cols(); ++k)
            for (int p = 0; p < L.rank; ++p) f(p, k) = hi(p, k);
        for (int a : ri) {
            bool ok = true;
            for (int k = 0; k < hj.cols() && ok; ++k) ok = root_on(L, a, hj.col(k)).is_zero();
            if (!ok) continue;
            Mat e = zeros<Scalar>(L.dim, 1);
            e(L.root_basis(a), 0) = 1;
            f = hcat(f, e);
        }
        auto it = r.centres.find(t);
        Mat z = it == r.centres.end() ? Mat(L.dim, 0) : it->second;
        bool eq = f.cols() == z.cols() && (f.cols() == 0 || spans_equal(f, z));
        if (!eq) {
            cf.pass = false;
            cf.witness = "centre at " + t.str() + " has dim " + std::to_string(z.cols()) + ", formula gives " +
                         std::to_string(f.cols());
        }
    }
    out.push_back(cf);
    out.push_back({"principal", b.s.principal, ""});
    return out;
}

Class2Build parabolic_wno(AlgebraPtr L, const Scalar& t1, const Scalar& t2, const std::vector<int>& b0,
                          const std::vector<int>& first_factors, bool centre_first)
{
    const RootSystem& R = *L->roots;
    auto r0 = levi_subset(R, b0).members;
    auto split = split_by_factors(L, r0, first_factors, centre_first);
    Scalar a = (t1 - t2) / Scalar(2);
    std::set<int> s(r0.begin(), r0.end());
    std::vector<Scalar> kappa(R.size(), Scalar(0));
    for (int r = 0; r < R.size(); ++r)
        if (!s.count(r)) kappa[r] = R.is_positive(r) ? a : -a;
    return wno_class2(split, t1, t2, kappa, "parabolic");
}

std::vector<int> zm_degrees(const RootSystem& R, const std::vector<int>& type, int* order)
{
    auto g = model_grading(R, {type});
    if (order) *order = g.orders[0];
    std::vector<int> d;
    for (const auto& x : g.degree) d.push_back(x[0]);
    return d;
}

Class2Build zm_wno(AlgebraPtr L, const Scalar& t1, const Scalar& t2, const std::vector<int>& type,
                   const std::vector<int>& first_factors, bool centre_first)
{
    const RootSystem& R = *L->roots;
    int m = 0;
    auto deg = zm_degrees(R, type, &m);
    if (m <= 2) throw PreconditionError("zm_wno: order " + std::to_string(m) + " must exceed 2");
    std::vector<int> r0;
    for (int r = 0; r < R.size(); ++r)
        if (deg[r] == 0) r0.push_back(r);
    auto split = split_by_factors(L, r0, first_factors, centre_first);
    std::vector<Scalar> kappa(R.size(), Scalar(0));
    for (int r = 0; r < R.size(); ++r)
        if (deg[r] != 0) kappa[r] = (Scalar(m, 2) - Scalar(deg[r])) * (t1 - t2) / Scalar(m);
    return wno_class2(split, t1, t2, kappa, "Z_" + std::to_string(m));
}

namespace {

AlgebraPtr e7_algebra()
{
    static AlgebraPtr L = [] {
        auto p = std::make_shared<const LieAlgebra>(chevalley_algebra("E7"));
        p->killing_inverse(); // fill the cache before any concurrent use
        return p;
    }();
    return L;
}

RootVec unit_root(int n, int i, int scale = 1)
{
    RootVec v(n, 0);
    v[i] = scale;
    return v;
}

} // namespace

E7Report e7_symbolic()
{
    auto L = e7_algebra();
    const RootSystem& R = *L->roots;
    E7Report rep;
    RootVec minus_theta = R.highest;
    for (auto& x : minus_theta) x = -x;
    Lattice fixed(7, {minus_theta, unit_root(7, 0), unit_root(7, 1), unit_root(7, 3), unit_root(7, 5), unit_root(7, 6)});
    std::vector<int> alt;
    for (int r = 0; r < R.size(); ++r) {
        if (fixed.contains(R.roots[r])) rep.r0.push_back(r);
        if (R.roots[r][2] % 3 == 0 && R.roots[r][4] % 3 == 0) alt.push_back(r);
    }
    rep.r0_definitions_agree = rep.r0 == alt;
    auto g_span = toral_grading(L->roots, rep.r0);
    auto g_lat = toral_grading(L->roots, rep.r0, {unit_root(7, 2, 3), unit_root(7, 4, 3)});
    rep.group_span_r0 = g_span.group;
    rep.group_lattice = g_lat.group;
    rep.same_partition = same_partition(g_span, g_lat) && g_lat.zero_is_r0;

    // parameters (x, a)
    const std::size_t nv = 2;
    Affine x = Affine::variable(0, nv), a = Affine::variable(1, nv);
    std::vector<Affine> seeds(7, Affine(nv));
    seeds[2] = x;
    seeds[4] = -x - Scalar(4, 3) * a;
    auto labels = parabolic_labels(R, rep.r0, -1);
    rep.symbolic = reconstruct_kappa(R, seeds, a, labels);
    auto other = reconstruct_kappa(R, seeds, a, labels, true);
    if (!(other.kappa == rep.symbolic.kappa)) {
        rep.symbolic.consistent = false;
        rep.symbolic.witness = "reconstruction depends on the decomposition order";
    }
    rep.kappa_vanishes_on_r0 = true;
    for (int r : rep.r0)
        if (!rep.symbolic.kappa[r].is_zero()) rep.kappa_vanishes_on_r0 = false;

    std::map<std::pair<int, int>, Affine> table{
        {{1, 0}, x},
        {{0, 1}, -x - Scalar(4, 3) * a},
        {{1, 1}, Scalar(-1, 3) * a},
        {{1, 2}, -x - Scalar(2, 3) * a},
        {{2, 1}, x + Scalar(2, 3) * a},
        {{2, 2}, Scalar(1, 3) * a},
        {{2, 0}, -x},
    };
    rep.table_matches = true;
    std::set<int> r0s(rep.r0.begin(), rep.r0.end());
    for (int r = 0; r < R.num_positive && rep.table_matches; ++r) {
        if (r0s.count(r)) continue;
        auto it = table.find({R.roots[r][2] % 3, R.roots[r][4] % 3});
        if (it == table.end() || !(it->second == rep.symbolic.kappa[r])) {
            rep.table_matches = false;
            rep.table_witness = root_name(R, r) + ": " + rep.symbolic.kappa[r].str({"x", "a"});
        }
    }

    // free seeds c3, c5: kappa(theta) gives the relation
    Affine c3 = Affine::variable(0, 3), c5 = Affine::variable(1, 3), a3 = Affine::variable(2, 3);
    std::vector<Affine> free_seeds(7, Affine(3));
    free_seeds[2] = c3;
    free_seeds[4] = c5;
    auto raw = reconstruct_kappa(R, free_seeds, a3, labels);
    rep.theta_relation = raw.kappa[R.num_positive - 1].str({"c3", "c5", "a"});
    return rep;
}

Class2Build e7_example(const Scalar& x, const Scalar& t1, const Scalar& t2)
{
    auto L = e7_algebra();
    auto rep = e7_symbolic();
    if (!rep.symbolic.consistent) throw PreconditionError("e7: inconsistent labels: " + rep.symbolic.witness);
    Scalar a = (t1 - t2) / Scalar(2);
    std::vector<Scalar> kappa;
    for (const auto& k : rep.symbolic.kappa) kappa.push_back(k.eval({x, a}));
    auto split = split_by_factors(L, rep.r0, {0}, true);
    return wno_class2(split, t1, t2, kappa, "e7");
}

} // namespace bilie
