#include "bilie/class1.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace bilie {

namespace {

using PairIdx = std::array<int, 2>;

PairIdx sorted_pair(int a, int b)
{
    return a <= b ? PairIdx{a, b} : PairIdx{b, a};
}

/// Allowed components of [g_P, g_Q]; none means the bracket has to vanish.
std::optional<std::set<PairIdx>> allowed(const PairIdx& P, const PairIdx& Q)
{
    std::optional<std::set<PairIdx>> out;
    for (int fp = 0; fp < 2; ++fp)
        for (int fq = 0; fq < 2; ++fq) {
            int x = P[fp], y = P[1 - fp], y2 = Q[fq], u = Q[1 - fq];
            if (y != y2) continue;
            std::set<PairIdx> s;
            if (x != u)
                s = {sorted_pair(x, u)};
            else
                s = {PairIdx{x, x}, PairIdx{y, y}};
            if (!out) {
                out = s;
            } else {
                std::set<PairIdx> both;
                for (const auto& p : s)
                    if (out->count(p)) both.insert(p);
                out = both;
            }
        }
    return out;
}

std::string pair_name(const QuasigradingI& q, const PairIdx& p)
{
    return "{" + q.X[p[0]].str() + " " + q.X[p[1]].str() + "}";
}

Mat cartan_sum(const QuasigradingI& q, const std::vector<int>& parts)
{
    Mat m(q.alg->rank, 0);
    for (int i : parts) m = hcat(m, q.cartan_part[i]);
    return m;
}

/// First violation of the root-root axioms; cartan also checks H_a against the Cartan parts.
std::string root_level_witness(const QuasigradingI& q, bool cartan)
{
    const LieAlgebra& L = *q.alg;
    const RootSystem& R = *L.roots;
    auto pair_of = [&](int root) { return q.root_pair[R.positive_rep(root)]; };
    for (int a = 0; a < R.size(); ++a) {
        const PairIdx P = pair_of(a);
        if (cartan && R.is_positive(a)) {
            std::vector<int> parts{P[0]};
            if (P[1] != P[0]) parts.push_back(P[1]);
            if (!span_contains(cartan_sum(q, parts), Vec(cartan_of_root(L, a).head(L.rank))))
                return "H_" + root_name(R, a) + " is not in the Cartan part of " + pair_name(q, P);
        }
        for (int b = a + 1; b < R.size(); ++b) {
            auto g = R.sum(a, b);
            if (!g) continue;
            const PairIdx Q = pair_of(b);
            auto ok = allowed(P, Q);
            const PairIdx G = pair_of(*g);
            if (!ok || !ok->count(G))
                return "[" + root_name(R, a) + ", " + root_name(R, b) + "] lands in " + pair_name(q, G) + " from " +
                       pair_name(q, P) + " and " + pair_name(q, Q);
        }
    }
    return "";
}

Vec unit(int n, int i)
{
    Vec v = zero_vec<Scalar>(n);
    v(i) = 1;
    return v;
}

Mat column(const Vec& v)
{
    Mat m(v.size(), 1);
    m.col(0) = v;
    return m;
}

QuasigradingI start(AlgebraPtr L, char family, const std::vector<Scalar>& t, std::size_t times, std::string name)
{
    if (!L->has_roots() || L->roots->family != family)
        throw PreconditionError(name + ": needs an algebra of type " + std::string(1, family));
    if (t.size() != times)
        throw PreconditionError(name + ": needs " + std::to_string(times) + " times, got " + std::to_string(t.size()));
    QuasigradingI q;
    q.alg = std::move(L);
    q.X = t;
    q.name = std::move(name);
    q.root_pair.resize(q.alg->roots->num_positive);
    q.cartan_part.assign(times, Mat(q.alg->rank, 0));
    return q;
}

std::vector<int> nonzero_positions(const std::vector<int>& e)
{
    std::vector<int> p;
    for (int i = 0; i < static_cast<int>(e.size()); ++i)
        if (e[i] != 0) p.push_back(i);
    return p;
}

Vec epsilon_unit(const LieAlgebra& L, int n, int i, int j = -1)
{
    std::vector<Scalar> e(n, Scalar(0));
    e[i] = 1;
    if (j >= 0) e[j] = -1;
    return cartan_of_epsilon(L, e);
}

} // namespace

PairsDiagram QuasigradingI::diagram() const
{
    const RootSystem& R = *alg->roots;
    PairsDiagram d{alg->roots, {}};
    for (int a = 0; a < R.num_positive; ++a) {
        const PairIdx P = root_pair[a];
        TimePair p{X[P[0]], X[P[1]]};
        if (P[0] != P[1]) {
            // an element is virtual when H_a has no component in its Cartan part
            Vec h = cartan_of_root(*alg, a).head(alg->rank);
            p.virtual1 = span_contains(cartan_part[P[1]], h);
            p.virtual2 = span_contains(cartan_part[P[0]], h);
        }
        d.pairs.push_back(make_time_pair(p.t1, p.t2, p.virtual1, p.virtual2));
    }
    return d;
}

Mat QuasigradingI::diagonal_component(int i) const
{
    const LieAlgebra& L = *alg;
    std::vector<Vec> cols;
    for (int c = 0; c < cartan_part[i].cols(); ++c) {
        Vec v = zero_vec<Scalar>(L.dim);
        for (int p = 0; p < L.rank; ++p) v(p) = cartan_part[i](p, c);
        cols.push_back(v);
    }
    for (int a = 0; a < L.roots->size(); ++a)
        if (root_pair[L.roots->positive_rep(a)] == PairIdx{i, i}) cols.push_back(unit(L.dim, L.root_basis(a)));
    Mat m(L.dim, static_cast<int>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) m.col(static_cast<int>(k)) = cols[k];
    return m;
}

CheckResult validate_quasigrading_i(const QuasigradingI& q)
{
    CheckResult c{"quasigrading_axioms", false, ""};
    const LieAlgebra& L = *q.alg;
    if (!L.has_roots()) {
        c.witness = "algebra has no root data";
        return c;
    }
    const int m = static_cast<int>(q.X.size());
    if (static_cast<int>(sorted_unique(q.X).size()) != m) {
        c.witness = "times are not pairwise distinct";
        return c;
    }
    if (static_cast<int>(q.root_pair.size()) != L.roots->num_positive ||
        static_cast<int>(q.cartan_part.size()) != m) {
        c.witness = "size mismatch";
        return c;
    }
    std::set<PairIdx> used;
    for (const auto& p : q.root_pair) {
        if (p[0] < 0 || p[1] >= m || p[0] > p[1]) {
            c.witness = "bad pair indices";
            return c;
        }
        used.insert(p);
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (!used.count({i, j})) {
                c.witness = "component " + pair_name(q, {i, j}) + " is zero";
                return c;
            }
    std::vector<int> all(m);
    for (int i = 0; i < m; ++i) all[i] = i;
    Mat h = cartan_sum(q, all);
    if (h.cols() != L.rank || rank(h) != L.rank) {
        c.witness = "Cartan parts do not form a direct sum decomposition of h";
        return c;
    }
    c.witness = root_level_witness(q, true);
    c.pass = c.witness.empty();
    return c;
}

Mat class1_operator(const QuasigradingI& q)
{
    const LieAlgebra& L = *q.alg;
    Mat W = zeros<Scalar>(L.dim, L.dim);
    Mat S(L.rank, 0);
    std::vector<Scalar> ev;
    for (std::size_t i = 0; i < q.X.size(); ++i) {
        S = hcat(S, q.cartan_part[i]);
        for (int c = 0; c < q.cartan_part[i].cols(); ++c) ev.push_back(q.X[i]);
    }
    Mat D = zeros<Scalar>(L.rank, L.rank);
    for (int k = 0; k < L.rank; ++k) D(k, k) = ev[k];
    W.topLeftCorner(L.rank, L.rank) = S * D * inverse(S);
    const RootSystem& R = *L.roots;
    for (int a = 0; a < R.size(); ++a) {
        const auto& p = q.root_pair[R.positive_rep(a)];
        int b = L.root_basis(a);
        W(b, b) = (q.X[p[0]] + q.X[p[1]]) / Scalar(2);
    }
    return W;
}

Mat class1_primitive(const QuasigradingI& q)
{
    const LieAlgebra& L = *q.alg;
    Mat P = zeros<Scalar>(L.dim, L.dim);
    const RootSystem& R = *L.roots;
    for (int a = 0; a < R.size(); ++a) {
        const auto& p = q.root_pair[R.positive_rep(a)];
        Scalar d = q.X[p[0]] - q.X[p[1]];
        int b = L.root_basis(a);
        P(b, b) = d * d / Scalar(8);
    }
    return P;
}

BiLieStructure wno_class1(const QuasigradingI& q)
{
    auto v = validate_quasigrading_i(q);
    if (!v.pass) throw PreconditionError(q.name + ": not a quasigrading: " + v.witness);
    return make_structure(q.alg, class1_operator(q), class1_primitive(q), q.name);
}

Mat centre_formula(const QuasigradingI& q, int i)
{
    const LieAlgebra& L = *q.alg;
    const RootSystem& R = *L.roots;
    std::vector<Vec> cols;
    for (int c = 0; c < q.cartan_part[i].cols(); ++c) {
        Vec v = zero_vec<Scalar>(L.dim);
        for (int p = 0; p < L.rank; ++p) v(p) = q.cartan_part[i](p, c);
        cols.push_back(v);
    }
    for (int a = 0; a < R.size(); ++a) {
        if (q.root_pair[R.positive_rep(a)] != PairIdx{i, i}) continue;
        bool ok = true;
        for (int j = 0; j < static_cast<int>(q.X.size()) && ok; ++j) {
            if (j == i) continue;
            const Mat& h = q.cartan_part[j];
            for (int c = 0; c < h.cols() && ok; ++c) {
                Scalar val = 0;
                for (int p = 0; p < L.rank; ++p) val += h(p, c) * L.root_values(a, p);
                ok = val.is_zero();
            }
        }
        if (ok) cols.push_back(unit(L.dim, L.root_basis(a)));
    }
    Mat m(L.dim, static_cast<int>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) m.col(static_cast<int>(k)) = cols[k];
    return m;
}

std::vector<CheckResult> check_class1(const QuasigradingI& q, const BiLieStructure& s, const TimesReport& r)
{
    std::vector<CheckResult> out;
    out.push_back(validate_quasigrading_i(q));

    CheckResult tc{"times_equal_base", r.times == sorted_unique(q.X), ""};
    if (!tc.pass) {
        tc.witness = "times:";
        for (const auto& t : r.times) tc.witness += " " + t.str();
    }
    out.push_back(tc);

    Mat g0(q.alg->dim, 0);
    for (std::size_t i = 0; i < q.X.size(); ++i) g0 = hcat(g0, q.diagonal_component(static_cast<int>(i)));
    auto aux = auxiliary_subalgebras(s, r);
    CheckResult bc{"basic_subalgebra", g0.cols() == 0 ? aux.g0.cols() == 0 : spans_equal(g0, aux.g0), ""};
    if (!bc.pass)
        bc.witness = "dim g0 = " + std::to_string(aux.g0.cols()) + ", expected " + std::to_string(g0.cols());
    out.push_back(bc);

    CheckResult cc{"centre_formula", true, ""};
    for (std::size_t i = 0; i < q.X.size() && cc.pass; ++i) {
        Mat f = centre_formula(q, static_cast<int>(i));
        auto it = r.centres.find(q.X[i]);
        Mat z = it == r.centres.end() ? Mat(q.alg->dim, 0) : it->second;
        bool eq = f.cols() == z.cols() && (f.cols() == 0 || spans_equal(f, z));
        if (!eq) {
            cc.pass = false;
            cc.witness = "centre at " + q.X[i].str() + " has dim " + std::to_string(z.cols()) + ", formula gives " +
                         std::to_string(f.cols());
        }
    }
    out.push_back(cc);

    auto ap = extract_admissible_pair(s, r);
    PairsDiagram expect = q.diagram();
    CheckResult dc{"diagram_matches", true, ""};
    for (std::size_t a = 0; a < expect.pairs.size(); ++a)
        if (!expect.pairs[a].same_times(ap.diagram.pairs[a]) || expect.pairs[a].virtual1 != ap.diagram.pairs[a].virtual1 ||
            expect.pairs[a].virtual2 != ap.diagram.pairs[a].virtual2) {
            dc.pass = false;
            dc.witness = root_name(*expect.roots, static_cast<int>(a)) + ": " + ap.diagram.pairs[a].str() +
                         " expected " + expect.pairs[a].str();
            break;
        }
    out.push_back(dc);
    CheckResult cl{"class_i", classify(ap.diagram).cls == DiagramClass::I, ""};
    out.push_back(cl);
    out.push_back({"principal", s.principal, s.principal ? "" : "W is not principal"});
    return out;
}

Z2Grading z2_grading(const QuasigradingI& q)
{
    Z2Grading g;
    g.m = static_cast<int>(q.X.size());
    const RootSystem& R = *q.alg->roots;
    for (const auto& p : q.root_pair) {
        std::vector<int> d(std::max(g.m - 1, 0), 0);
        for (int k = p[0]; k < p[1]; ++k) d[k] = 1;
        g.degree.push_back(d);
    }
    std::set<std::vector<int>> seen{std::vector<int>(std::max(g.m - 1, 0), 0)};
    for (const auto& d : g.degree) seen.insert(d);
    g.quasiroots = static_cast<int>(seen.size());
    for (int a = 0; a < R.size() && g.homomorphism; ++a)
        for (int b = a + 1; b < R.size(); ++b) {
            auto c = R.sum(a, b);
            if (!c) continue;
            const auto& da = g.degree[R.positive_rep(a)];
            const auto& db = g.degree[R.positive_rep(b)];
            const auto& dc = g.degree[R.positive_rep(*c)];
            bool ok = true;
            for (std::size_t k = 0; k < da.size(); ++k) ok = ok && ((da[k] + db[k]) % 2 == dc[k]);
            if (!ok) {
                g.homomorphism = false;
                g.witness = root_name(R, a) + " + " + root_name(R, b);
                break;
            }
        }
    return g;
}

ModelGrading model_grading(const RootSystem& R, const std::vector<std::vector<int>>& types)
{
    ModelGrading g;
    for (const auto& s : types) {
        if (static_cast<int>(s.size()) != R.rank + 1) throw std::invalid_argument("type needs rank+1 entries");
        int m = s[0];
        for (int l = 0; l < R.rank; ++l) m += R.highest[l] * s[l + 1];
        if (m <= 0) throw std::invalid_argument("type has order 0");
        g.orders.push_back(m);
    }
    for (int a = 0; a < R.size(); ++a) {
        std::vector<int> d;
        const auto& rv = R.roots[R.positive_rep(a)];
        for (std::size_t t = 0; t < types.size(); ++t) {
            int m = g.orders[t], v = 0;
            for (int l = 0; l < R.rank; ++l) v += rv[l] * types[t][l + 1];
            if (!R.is_positive(a)) v = -v;
            d.push_back(((v % m) + m) % m);
        }
        g.degree.push_back(d);
    }
    return g;
}

QuasigradingI reduce(const QuasigradingI& q, const std::vector<int>& mu, const std::vector<Scalar>& Y)
{
    if (mu.size() != q.X.size()) throw std::invalid_argument("reduce: mu has the wrong size");
    std::set<int> image(mu.begin(), mu.end());
    if (static_cast<int>(image.size()) != static_cast<int>(Y.size()) || *image.begin() != 0 ||
        *image.rbegin() != static_cast<int>(Y.size()) - 1)
        throw std::invalid_argument("reduce: mu is not surjective onto Y");
    QuasigradingI out;
    out.alg = q.alg;
    out.X = Y;
    out.name = q.name + "/reduced";
    for (const auto& p : q.root_pair) out.root_pair.push_back(sorted_pair(mu[p[0]], mu[p[1]]));
    out.cartan_part.assign(Y.size(), Mat(q.alg->rank, 0));
    for (std::size_t i = 0; i < mu.size(); ++i) out.cartan_part[mu[i]] = hcat(out.cartan_part[mu[i]], q.cartan_part[i]);
    return out;
}

Vec cartan_of_epsilon(const LieAlgebra& L, const std::vector<Scalar>& eps)
{
    const RootSystem& R = *L.roots;
    const int n = static_cast<int>(eps.size());
    Mat E(n, R.rank);
    for (int j = 0; j < R.rank; ++j) {
        auto e = epsilon_coords(R, R.simple(j));
        if (static_cast<int>(e.size()) != n) throw std::invalid_argument("cartan_of_epsilon: dimension mismatch");
        for (int i = 0; i < n; ++i) E(i, j) = e[i];
    }
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = eps[i];
    auto c = solve(E, v);
    if (!c) throw std::invalid_argument("cartan_of_epsilon: weight not in the span of the roots");
    return *c;
}

QuasigradingI example_12_12(AlgebraPtr L, const std::vector<Scalar>& t, TwoTimeSide side, std::vector<int> type)
{
    if (!L->has_roots()) throw PreconditionError("example_12_12: needs root data");
    const RootSystem& R = *L->roots;
    if (t.size() != 2) throw PreconditionError("example_12_12: needs two times");
    if (type.empty()) {
        type.assign(R.rank + 1, 0);
        int k = -1;
        for (int l = 0; l < R.rank && k < 0; ++l)
            if (R.highest[l] == 1) k = l;
        if (k >= 0) {
            type[0] = 1;
        } else {
            for (int l = 0; l < R.rank && k < 0; ++l)
                if (R.highest[l] == 2) k = l;
        }
        type[k + 1] = 1;
    }
    auto g = model_grading(R, {type});
    if (g.orders[0] != 2) throw PreconditionError("example_12_12: type does not define a Z_2 grading");
    QuasigradingI q;
    q.alg = L;
    q.X = t;
    q.name = "example 12.12";
    const int full = side == TwoTimeSide::FirstFull ? 0 : 1;
    for (int a = 0; a < R.num_positive; ++a)
        q.root_pair.push_back(g.degree[a][0] == 0 ? PairIdx{full, full} : PairIdx{0, 1});
    q.cartan_part.assign(2, Mat(L->rank, 0));
    q.cartan_part[full] = identity<Scalar>(L->rank);
    return q;
}

QuasigradingI example_12_13(AlgebraPtr L, const std::vector<Scalar>& t)
{
    const int n = L->rank;
    QuasigradingI q = start(L, 'B', t, n + 1, "example 12.13");
    const RootSystem& R = *q.alg->roots;
    for (int a = 0; a < R.num_positive; ++a) {
        auto p = nonzero_positions(epsilon_coords(R, a));
        q.root_pair[a] = p.size() == 2 ? sorted_pair(p[0], p[1]) : PairIdx{p[0], n};
    }
    for (int i = 0; i < n; ++i) q.cartan_part[i] = column(epsilon_unit(*q.alg, n, i));
    return q;
}

QuasigradingI example_12_14(AlgebraPtr L, const std::vector<Scalar>& t)
{
    const int n = L->rank;
    QuasigradingI q = start(L, 'D', t, n, "example 12.14");
    const RootSystem& R = *q.alg->roots;
    for (int a = 0; a < R.num_positive; ++a) {
        auto p = nonzero_positions(epsilon_coords(R, a));
        q.root_pair[a] = sorted_pair(p[0], p[1]);
    }
    for (int i = 0; i < n; ++i) q.cartan_part[i] = column(epsilon_unit(*q.alg, n, i));
    return q;
}

QuasigradingI example_12_15(AlgebraPtr L, const std::vector<Scalar>& t)
{
    const int n = L->rank;
    QuasigradingI q = start(L, 'C', t, n, "example 12.15");
    const RootSystem& R = *q.alg->roots;
    for (int a = 0; a < R.num_positive; ++a) {
        auto p = nonzero_positions(epsilon_coords(R, a));
        q.root_pair[a] = p.size() == 2 ? sorted_pair(p[0], p[1]) : PairIdx{p[0], p[0]};
    }
    for (int i = 0; i < n; ++i) q.cartan_part[i] = column(epsilon_unit(*q.alg, n, i));
    return q;
}

QuasigradingI example_12_16(AlgebraPtr L, const std::vector<Scalar>& t)
{
    const int n = L->rank;
    QuasigradingI q = start(L, 'A', t, n + 1, "example 12.16");
    const RootSystem& R = *q.alg->roots;
    for (int a = 0; a < R.num_positive; ++a) {
        auto p = nonzero_positions(epsilon_coords(R, a));
        q.root_pair[a] = sorted_pair(p[0], p[1]);
    }
    for (int i = 0; i < n; ++i) q.cartan_part[i] = column(epsilon_unit(*q.alg, n + 1, i, n));
    return q;
}

QuasigradingI example_12_17(AlgebraPtr L, const std::vector<Scalar>& t, const Scalar& a)
{
    const int n = L->rank;
    if (n < 2) throw PreconditionError("example_12_17: needs n >= 2");
    if (a.is_zero()) throw PreconditionError("example_12_17: parameter a must be nonzero");
    QuasigradingI q = start(L, 'A', t, n, "example 12.17");
    const RootSystem& R = *q.alg->roots;
    for (int r = 0; r < R.num_positive; ++r) {
        auto p = nonzero_positions(epsilon_coords(R, r));
        q.root_pair[r] = sorted_pair(p[0], std::min(p[1], n - 1));
    }
    Vec w = a * unit(n, n - 1);
    q.cartan_part[n - 1] = column(w);
    for (int k = n - 2; k >= 0; --k) {
        w = w + unit(n, k);
        q.cartan_part[k] = column(w);
    }
    return q;
}

QuasigradingI example_12_18(AlgebraPtr L, const std::vector<Scalar>& t, std::optional<Vec> s)
{
    const int n = L->rank;
    QuasigradingI q = start(L, 'B', t, 2, "example 12.18");
    const RootSystem& R = *q.alg->roots;
    for (int a = 0; a < R.num_positive; ++a) q.root_pair[a] = R.roots[a][0] == 0 ? PairIdx{1, 1} : PairIdx{0, 1};
    q.cartan_part[0] = column(s ? *s : unit(n, 0));
    Mat rest(n, n - 1);
    for (int k = 1; k < n; ++k) rest.col(k - 1) = unit(n, k);
    q.cartan_part[1] = rest;
    return q;
}

std::vector<D4Attempt> example_12_10_attempts()
{
    auto L = std::make_shared<const LieAlgebra>(chevalley_algebra("D4"));
    const RootSystem& R = *L->roots;
    auto g = model_grading(R, {{0, 1, 0, 0, 1}, {0, 0, 0, 1, 1}});
    std::map<std::vector<int>, PairIdx> mixed{{{1, 0}, {0, 1}}, {{0, 1}, {1, 2}}, {{1, 1}, {0, 2}}};
    std::vector<int> zero;
    for (int a = 0; a < R.num_positive; ++a)
        if (g.degree[a] == std::vector<int>{0, 0} && a != R.simple(1)) zero.push_back(a);
    std::vector<D4Attempt> out;
    for (int a2 = 0; a2 < 3; ++a2) {
        D4Attempt att;
        att.alpha2_time = a2;
        QuasigradingI q;
        q.alg = L;
        q.X = {Scalar(0), Scalar(1), Scalar(2)};
        q.root_pair.resize(R.num_positive);
        q.cartan_part.assign(3, Mat(L->rank, 0));
        for (int a = 0; a < R.num_positive; ++a) {
            auto it = mixed.find(g.degree[a]);
            if (it != mixed.end()) q.root_pair[a] = it->second;
        }
        q.root_pair[R.simple(1)] = {a2, a2};
        std::function<void(std::size_t)> rec = [&](std::size_t k) {
            if (k == zero.size()) {
                ++att.assignments_tried;
                std::string w = root_level_witness(q, false);
                if (w.empty())
                    ++att.assignments_valid;
                else if (att.witness.empty())
                    att.witness = w;
                return;
            }
            for (int c = 0; c < 3; ++c) {
                q.root_pair[zero[k]] = {c, c};
                rec(k + 1);
            }
        };
        rec(0);
        out.push_back(att);
    }
    return out;
}

GradedModel graded_model(const MatrixAlgebra& M, const std::vector<Mat>& cartan)
{
    const LieAlgebra& A = M.algebra;
    const int n = A.dim;
    const int r = static_cast<int>(cartan.size());
    std::vector<Mat> ads;
    for (const auto& h : cartan) {
        if (!M.contains(h)) throw PreconditionError("graded_model: Cartan element not in the algebra");
        ads.push_back(ad(A, M.coords(h)));
    }
    std::vector<Scalar> cand{Scalar(0)};
    for (int k = 1; k <= 4; ++k)
        for (int sgn : {1, -1}) {
            cand.push_back(Scalar(sgn * k));
            cand.push_back(Scalar(sgn * k) * imag_unit());
        }
    struct Block {
        Mat basis;
        std::vector<Scalar> weight;
    };
    std::vector<Block> blocks{{identity<Scalar>(n), {}}};
    for (int k = 0; k < r; ++k) {
        std::vector<Block> next;
        for (const auto& b : blocks)
            for (const auto& lam : cand) {
                Mat K = kernel(Mat((ads[k] - lam * identity<Scalar>(n)) * b.basis));
                if (K.cols() == 0) continue;
                Block nb{b.basis * K, b.weight};
                nb.weight.push_back(lam);
                next.push_back(nb);
            }
        int total = 0;
        for (const auto& b : next) total += static_cast<int>(b.basis.cols());
        if (total != n) throw PreconditionError("graded_model: ad eigenvalues outside the search range");
        blocks = std::move(next);
    }
    std::vector<Block> rootb;
    for (auto& b : blocks) {
        bool zero = std::all_of(b.weight.begin(), b.weight.end(), [](const Scalar& x) { return x.is_zero(); });
        if (zero) {
            if (b.basis.cols() != r) throw PreconditionError("graded_model: centralizer is larger than the Cartan span");
            continue;
        }
        if (b.basis.cols() != 1) throw PreconditionError("graded_model: root space of dimension > 1");
        rootb.push_back(b);
    }
    std::sort(rootb.begin(), rootb.end(), [](const Block& x, const Block& y) { return x.weight > y.weight; });
    GradedModel out;
    out.S = Mat(n, n);
    for (int k = 0; k < r; ++k) out.S.col(k) = M.coords(cartan[k]);
    for (std::size_t j = 0; j < rootb.size(); ++j) out.S.col(r + static_cast<int>(j)) = rootb[j].basis.col(0);
    out.alg = change_basis(A, out.S, M.model + "(graded)");
    out.alg.rank = r;
    out.alg.weight.assign(n, -1);
    out.alg.opposite.assign(n, -1);
    out.weights.assign(n, std::vector<Scalar>(r, Scalar(0)));
    for (std::size_t j = 0; j < rootb.size(); ++j) {
        const int b = r + static_cast<int>(j);
        out.alg.weight[b] = static_cast<int>(j);
        out.alg.labels[b] = {BasisLabel::Root, static_cast<int>(j)};
        out.weights[b] = rootb[j].weight;
        std::vector<Scalar> neg;
        for (const auto& x : rootb[j].weight) neg.push_back(-x);
        for (std::size_t o = 0; o < rootb.size(); ++o)
            if (rootb[o].weight == neg) out.alg.opposite[b] = r + static_cast<int>(o);
        if (out.alg.opposite[b] < 0) throw PreconditionError("graded_model: weights are not symmetric");
    }
    for (int k = 0; k < r; ++k) out.alg.labels[k] = {BasisLabel::Cartan, k};
    return out;
}

Mat half_anticommutator(const MatrixAlgebra& M, const Mat& A)
{
    const int d = M.algebra.dim;
    Mat W(d, d);
    for (int k = 0; k < d; ++k) {
        Mat y = Scalar(1, 2) * (A * M.basis[k] + M.basis[k] * A);
        if (!M.contains(y)) throw PreconditionError("half_anticommutator: operator leaves the algebra");
        W.col(k) = M.coords(y);
    }
    return W;
}

namespace {

Table matrix_product_bracket(const MatrixAlgebra& M, const Mat& A)
{
    const int d = M.algebra.dim;
    Table t(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (i != j) t.at(i, j) = to_sparse(M.coords(Mat(M.basis[i] * A * M.basis[j] - M.basis[j] * A * M.basis[i])));
    return t;
}

CheckResult from_jacobi(std::string name, const JacobiResult& j)
{
    return {std::move(name), j.pass, j.pass ? "" : j.describe()};
}

/// Regularity test against the given Cartan, then the graded structure and its times.
void graded_part(MatrixCrosscheck& out, const MatrixAlgebra& M, const Mat& W, const std::vector<Mat>& cartan)
{
    Mat K = commutant_kernel(M.algebra, {&W}, {});
    bool contains = K.cols() >= static_cast<int>(cartan.size());
    for (const auto& h : cartan) contains = contains && span_contains(K, Vec(M.coords(h)));
    out.regular = contains;
    out.checks.push_back({"regular", contains,
                          contains ? "" : "commutant of W in ad g has dimension " + std::to_string(K.cols())});
    if (!contains) return;
    GradedModel G = graded_model(M, cartan);
    auto Lp = std::make_shared<const LieAlgebra>(G.alg);
    Mat Wp = inverse(G.S) * W * G.S;
    if (!preserves_root_grading(*Lp, Wp)) {
        out.checks.push_back({"root_grading", false, "W does not preserve the joint eigenspaces"});
        return;
    }
    if (!is_principal(*Lp, Wp)) Wp = principal_projection(*Lp, Wp);
    auto s = make_structure(Lp, Wp, principal_primitive(*Lp, Wp), M.model);
    for (auto& c : verify_structure(s)) out.checks.push_back(c);
    out.times = times(s).times;
}

} // namespace

MatrixCrosscheck matrix_crosscheck_so(int N, const Mat& A)
{
    if (A != Mat(A.transpose())) throw PreconditionError("matrix_crosscheck_so: A must be symmetric");
    MatrixAlgebra M = matrix_model("so", N);
    MatrixCrosscheck out;
    Mat W = half_anticommutator(M, A);
    Table mb = modified_bracket(M.algebra, W);
    auto diff = tables_equal(mb, matrix_product_bracket(M, A));
    out.checks.push_back({"bracket_is_xAy_minus_yAx", diff.pass, diff.describe()});
    out.checks.push_back(from_jacobi("second_jacobi", jacobi_check(mb)));
    out.checks.push_back(from_jacobi("compatibility", compatibility_check(M.algebra.table, mb)));
    std::vector<Mat> cartan;
    for (int k = 0; 2 * k + 1 < N; ++k) cartan.push_back(Mat(matrix_unit(N, 2 * k, 2 * k + 1) - matrix_unit(N, 2 * k + 1, 2 * k)));
    graded_part(out, M, W, cartan);
    return out;
}

Mat example_12_16_matrix_map(const std::vector<Scalar>& t, const Mat& x)
{
    const int m = static_cast<int>(x.rows());
    Mat y(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) y(i, j) = x(i, j) * (t[i] + t[j]) / Scalar(2);
    Scalar tr = 0;
    for (int i = 0; i < m; ++i) tr += t[i] * x(i, i);
    y(m - 1, m - 1) -= tr;
    return y;
}

CheckResult gl_torsion_match(int n, const std::vector<Scalar>& t)
{
    MatrixAlgebra M = matrix_model("gl", n + 1);
    const int d = M.algebra.dim;
    Mat A = zeros<Scalar>(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) A(i, i) = t[i];
    Mat Z = half_anticommutator(M, A);
    Mat W(d, d);
    for (int k = 0; k < d; ++k) W.col(k) = M.coords(example_12_16_matrix_map(t, M.basis[k]));
    auto r = tables_equal(torsion(M.algebra, W), torsion(M.algebra, Z));
    return {"gl_torsion_match", r.pass, r.describe()};
}

std::vector<CheckResult> compact_restriction_sl(int n, const std::vector<Scalar>& t)
{
    const int m = n + 1;
    for (const auto& x : t)
        if (!x.is_real()) throw PreconditionError("compact_restriction_sl: times must be real");
    const Scalar I = imag_unit();
    std::vector<Mat> basis;
    for (int k = 0; k + 1 < m; ++k) basis.push_back(Mat(I * (matrix_unit(m, k, k) - matrix_unit(m, k + 1, k + 1))));
    for (int k = 0; k < m; ++k)
        for (int l = k + 1; l < m; ++l) {
            basis.push_back(Mat(matrix_unit(m, k, l) - matrix_unit(m, l, k)));
            basis.push_back(Mat(I * (matrix_unit(m, k, l) + matrix_unit(m, l, k))));
        }
    MatrixAlgebra M = matrix_algebra_from_basis("su", m, basis);
    const int d = M.algebra.dim;
    std::vector<CheckResult> out;
    CheckResult real{"real_form_preserved", true, ""};
    Mat W(d, d);
    for (int k = 0; k < d && real.pass; ++k) {
        Mat y = example_12_16_matrix_map(t, M.basis[k]);
        if (!M.contains(y)) {
            real.pass = false;
            real.witness = "image of basis element " + std::to_string(k) + " leaves su";
            break;
        }
        W.col(k) = M.coords(y);
        for (int p = 0; p < d; ++p)
            if (!W(p, k).is_real()) {
                real.pass = false;
                real.witness = "non-real coordinate in column " + std::to_string(k);
            }
    }
    out.push_back(real);
    CheckResult table_real{"structure_constants_real", true, ""};
    for (const auto& v : M.algebra.table.c)
        for (const auto& [i, x] : v)
            if (!x.is_real()) table_real.pass = false;
    out.push_back(table_real);
    if (!real.pass) return out;
    Table mb = modified_bracket(M.algebra, W);
    out.push_back(from_jacobi("second_jacobi", jacobi_check(mb)));
    out.push_back(from_jacobi("compatibility", compatibility_check(M.algebra.table, mb)));
    return out;
}

} // namespace bilie
