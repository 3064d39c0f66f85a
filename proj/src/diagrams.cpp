#include "bilie/diagrams.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace bilie {

std::string TimePair::str() const
{
    auto one = [](const Scalar& t, bool v) { return v ? "(" + t.str() + ")" : t.str(); };
    return "{" + one(t1, virtual1) + " " + one(t2, virtual2) + "}";
}

TimePair make_time_pair(Scalar a, Scalar b, bool va, bool vb)
{
    if (b < a) {
        std::swap(a, b);
        std::swap(va, vb);
    }
    return TimePair{a, b, va, vb};
}

std::vector<Scalar> PairsDiagram::time_set() const
{
    std::vector<Scalar> all;
    for (const auto& p : pairs) {
        all.push_back(p.t1);
        all.push_back(p.t2);
    }
    return sorted_unique(all);
}

nlohmann::json PairsDiagram::to_json() const
{
    nlohmann::json j = nlohmann::json::array();
    for (int k = 0; k < static_cast<int>(pairs.size()); ++k) {
        const auto& p = pairs[k];
        j.push_back({{"root", roots->roots[k]},
                     {"name", root_name(*roots, k)},
                     {"pair", {p.t1.str(), p.t2.str()}},
                     {"virtual", {p.virtual1, p.virtual2}}});
    }
    return j;
}

Tsr tsr_rule(const TimePair& a, const TimePair& b, const TimePair& c)
{
    // {t1t2}, {t2t3}, {t3t1}
    for (int flip = 0; flip < 2; ++flip) {
        const Scalar& t1 = flip ? a.t2 : a.t1;
        const Scalar& t2 = flip ? a.t1 : a.t2;
        for (int side = 0; side < 2; ++side) {
            const Scalar& in = side ? b.t2 : b.t1;
            const Scalar& t3 = side ? b.t1 : b.t2;
            if (in != t2) continue;
            if (c.same_times(make_time_pair(t3, t1))) return Tsr::Rule1;
        }
    }
    if (a.same_times(b) && b.same_times(c) && !a.diagonal()) return Tsr::Rule2;
    return Tsr::None;
}

std::string TriangleCheck::describe(const RootSystem& R) const
{
    if (!witness) return "";
    return "triangle " + root_name(R, witness->a) + ", " + root_name(R, witness->b) + ", " +
           root_name(R, witness->c);
}

TriangleCheck validate_tsr(const PairsDiagram& d)
{
    TriangleCheck out;
    for (const auto& t : triangles(*d.roots))
        if (tsr_rule(d.at(t.a), d.at(t.b), d.at(t.c)) == Tsr::None) {
            out.pass = false;
            out.witness = t;
            return out;
        }
    return out;
}

ClassResult classify(const PairsDiagram& d)
{
    ClassResult out;
    for (const auto& t : triangles(*d.roots))
        if (tsr_rule(d.at(t.a), d.at(t.b), d.at(t.c)) == Tsr::Rule2) {
            out.cls = DiagramClass::II;
            out.witness = t;
            return out;
        }
    return out;
}

bool dichotomy_check(const PairsDiagram& d)
{
    return classify(d).cls == DiagramClass::I || d.time_set().size() == 2;
}

std::vector<PairsDiagram> enumerate_diagrams(RootSystemPtr R, const std::vector<Scalar>& candidates)
{
    if (candidates.size() > 4 || R->rank > 3)
        throw PreconditionError("enumerate_diagrams: needs at most 4 candidate times and rank at most 3");
    auto cand = sorted_unique(candidates);
    std::vector<TimePair> choices;
    for (std::size_t i = 0; i < cand.size(); ++i)
        for (std::size_t j = i; j < cand.size(); ++j) choices.push_back(make_time_pair(cand[i], cand[j]));

    const int N = R->num_positive;
    // triangles grouped by the largest positive representative
    std::vector<std::vector<Triangle>> closing(N);
    for (const auto& t : triangles(*R)) {
        int m = std::max({R->positive_rep(t.a), R->positive_rep(t.b), R->positive_rep(t.c)});
        closing[m].push_back(t);
    }
    std::vector<PairsDiagram> out;
    PairsDiagram cur{R, std::vector<TimePair>(N)};
    std::function<void(int)> rec = [&](int k) {
        if (k == N) {
            out.push_back(cur);
            return;
        }
        for (const auto& c : choices) {
            cur.pairs[k] = c;
            bool ok = true;
            for (const auto& t : closing[k])
                if (tsr_rule(cur.at(t.a), cur.at(t.b), cur.at(t.c)) == Tsr::None) {
                    ok = false;
                    break;
                }
            if (ok) rec(k + 1);
        }
    };
    rec(0);
    return out;
}

bool AdmissibleOperator::complete() const
{
    for (const auto& e : root_eigen)
        if (e.size() != 1) return false;
    return true;
}

Mat cartan_block(const LieAlgebra& L, const Mat& W)
{
    std::vector<int> ci;
    for (int i = 0; i < L.dim; ++i)
        if (L.is_cartan(i)) ci.push_back(i);
    const int r = static_cast<int>(ci.size());
    Mat out(r, r);
    for (int p = 0; p < r; ++p)
        for (int q = 0; q < r; ++q) out(p, q) = W(ci[p], ci[q]);
    return out;
}

AdmissibleOperator admissible_operator(const LieAlgebra& L, const Mat& U, const std::vector<Scalar>& candidates)
{
    if (!L.has_roots()) throw PreconditionError("admissible_operator: algebra has no root data");
    const int r = static_cast<int>(U.rows());
    AdmissibleOperator out;
    out.U = U;
    Mat all(r, 0);
    std::vector<Scalar> owner;
    for (const auto& t : sorted_unique(candidates)) {
        Mat k = kernel(Mat(U - t * identity<Scalar>(r)));
        if (k.cols() == 0) continue;
        out.eigen[t] = k;
        all = hcat(all, k);
        for (int c = 0; c < k.cols(); ++c) owner.push_back(t);
    }
    if (all.cols() != r)
        throw PreconditionError("admissible_operator: U is not diagonalizable over the given times");
    Mat inv = inverse(all);
    const RootSystem& R = *L.roots;
    for (int a = 0; a < R.num_positive; ++a) {
        Vec c = inv * cartan_of_root(L, a).head(r);
        std::vector<Scalar> ev;
        for (int p = 0; p < r; ++p)
            if (!c(p).is_zero()) ev.push_back(owner[p]);
        ev = sorted_unique(ev);
        if (ev.size() > 2)
            throw PreconditionError("admissible_operator: H_" + root_name(R, a) + " has " +
                                    std::to_string(ev.size()) + " eigen components");
        out.root_eigen.push_back(ev);
    }
    return out;
}

AdmissiblePair extract_admissible_pair(const BiLieStructure& s, const TimesReport& r)
{
    const LieAlgebra& L = *s.alg;
    if (!L.has_roots()) throw PreconditionError("extract_admissible_pair: algebra has no root data");
    AdmissiblePair out{admissible_operator(L, cartan_block(L, s.W), r.times), PairsDiagram{L.roots, {}}};
    const RootSystem& R = *L.roots;
    for (int a = 0; a < R.num_positive; ++a) {
        const auto& tp = r.per_root.at(L.root_basis(a));
        const auto& ev = out.U.root_eigen[a];
        auto in = [&](const Scalar& t) { return std::find(ev.begin(), ev.end(), t) != ev.end(); };
        TimePair p = make_time_pair(tp[0], tp[1]);
        if (!p.diagonal()) {
            p.virtual1 = !in(p.t1);
            p.virtual2 = !in(p.t2);
        }
        out.diagram.pairs.push_back(p);
    }
    return out;
}

CheckResult admissible_pair_check(const AdmissibleOperator& U, const PairsDiagram& d)
{
    CheckResult c{"admissible_pair", true, ""};
    for (int a = 0; a < static_cast<int>(d.pairs.size()); ++a)
        for (const auto& t : U.root_eigen[a])
            if (!d.pairs[a].contains(t)) {
                c.pass = false;
                c.witness = "U component " + t.str() + " of H_" + root_name(*d.roots, a) + " not in " +
                            d.pairs[a].str();
                return c;
            }
    return c;
}

std::array<Scalar, 3> lemma_10_10_residuals(const TimePair& a, const TimePair& b, const TimePair& c)
{
    auto one = [](const TimePair& x, const TimePair& y, const TimePair& z) {
        return (z.t1 + z.t2) * (x.t1 + x.t2 - y.t1 - y.t2) +
               (y.t1 * y.t1 + y.t2 * y.t2 - x.t1 * x.t1 - x.t2 * x.t2);
    };
    return {one(a, b, c), one(b, c, a), one(c, a, b)};
}

CheckResult lemma_10_10_check(const PairsDiagram& d)
{
    CheckResult c{"lemma_10_10", true, ""};
    for (const auto& t : triangles(*d.roots)) {
        auto res = lemma_10_10_residuals(d.at(t.a), d.at(t.b), d.at(t.c));
        for (const auto& v : res)
            if (!v.is_zero()) {
                c.pass = false;
                c.witness = TriangleCheck{false, t}.describe(*d.roots) + " residual " + v.str();
                return c;
            }
    }
    return c;
}

std::vector<Scalar> root_kappa(const LieAlgebra& L, const Mat& W)
{
    std::vector<Scalar> k(L.roots->size());
    for (int a = 0; a < L.roots->size(); ++a) {
        int b = L.root_basis(a);
        k[a] = (W(b, b) - W(L.opposite[b], L.opposite[b])) / Scalar(2);
    }
    return k;
}

int LabelSystem::label_of(const Triangle& t) const
{
    for (std::size_t k = 0; k < triangles.size(); ++k)
        if (triangles[k] == t) return labels[k];
    throw std::out_of_range("label_of: unknown triangle");
}

nlohmann::json LabelSystem::to_json(const RootSystem& R) const
{
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t k = 0; k < triangles.size(); ++k) {
        const auto& t = triangles[k];
        j.push_back({{"roots", {root_name(R, t.a), root_name(R, t.b), root_name(R, t.c)}},
                     {"label", labels[k] > 0 ? "+" : labels[k] < 0 ? "-" : "0"}});
    }
    return j;
}

TriangleRuleResult triangle_rule_check(const RootSystem& R, const std::vector<Scalar>& kappa, const Scalar& a,
                                       const std::vector<int>& subject)
{
    TriangleRuleResult out;
    out.labels.a = a;
    out.labels.subject = subject;
    std::set<int> sub(subject.begin(), subject.end());
    for (int k : subject)
        if (!kappa[k].is_zero()) {
            out.pass = false;
            out.witness = "kappa(" + root_name(R, k) + ") = " + kappa[k].str() + " on the subject set";
            return out;
        }
    for (const auto& t : triangles(R)) {
        Scalar sum = kappa[t.a] + kappa[t.b] + kappa[t.c];
        int inside = static_cast<int>(sub.count(t.a) + sub.count(t.b) + sub.count(t.c));
        int label = 0;
        bool ok;
        if (inside > 0 || a.is_zero()) {
            ok = sum.is_zero();
        } else if (sum == a) {
            label = 1;
            ok = true;
        } else if (sum == -a) {
            label = -1;
            ok = true;
        } else {
            ok = false;
        }
        if (!ok) {
            out.pass = false;
            out.witness = TriangleCheck{false, t}.describe(R) + " has kappa sum " + sum.str();
            return out;
        }
        out.labels.triangles.push_back(t);
        out.labels.labels.push_back(label);
    }
    return out;
}

CheckResult kappa_sum_rule_check(const PairsDiagram& d, const std::vector<Scalar>& kappa)
{
    CheckResult c{"kappa_sum_rule", true, ""};
    for (const auto& t : triangles(*d.roots)) {
        const auto& p = d.at(t.a);
        Tsr rule = tsr_rule(p, d.at(t.b), d.at(t.c));
        Scalar sum = kappa[t.a] + kappa[t.b] + kappa[t.c];
        bool ok = true;
        if (rule == Tsr::Rule1) {
            ok = sum.is_zero();
        } else if (rule == Tsr::Rule2) {
            Scalar h = (p.t1 - p.t2) / Scalar(2);
            ok = sum == h || sum == -h;
        } else {
            ok = false;
        }
        if (!ok) {
            c.pass = false;
            c.witness = TriangleCheck{false, t}.describe(*d.roots) + " kappa sum " + sum.str();
            return c;
        }
    }
    return c;
}

} // namespace bilie
