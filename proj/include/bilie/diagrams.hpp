#pragma once

#include "bilie/structure.hpp"

#include <json.hpp>

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bilie {

/// Unordered pair of times, stored sorted, with per-element virtual flags.
struct TimePair {
    Scalar t1, t2;
    bool virtual1 = false, virtual2 = false;

    bool contains(const Scalar& t) const { return t1 == t || t2 == t; }
    bool diagonal() const { return t1 == t2; }
    /// Flags are ignored.
    bool same_times(const TimePair& o) const { return t1 == o.t1 && t2 == o.t2; }
    std::string str() const;
};

TimePair make_time_pair(Scalar a, Scalar b, bool va = false, bool vb = false);

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Pairs indexed by +-classes, represented by the positive root index.
struct PairsDiagram {
    RootSystemPtr roots;
    std::vector<TimePair> pairs;

    const TimePair& at(int root) const { return pairs[roots->positive_rep(root)]; }
    std::vector<Scalar> time_set() const;
    nlohmann::json to_json() const;
};

enum class Tsr { None, Rule1, Rule2 };
Tsr tsr_rule(const TimePair& a, const TimePair& b, const TimePair& c);

struct TriangleCheck {
    bool pass = true;
    std::optional<Triangle> witness;
    std::string describe(const RootSystem& R) const;
};

TriangleCheck validate_tsr(const PairsDiagram& d);

enum class DiagramClass { I, II };
struct ClassResult {
    DiagramClass cls = DiagramClass::I;
    std::optional<Triangle> witness; ///< a {t1t2}-triangle for Class II
};
ClassResult classify(const PairsDiagram& d);
/// Class II implies the time set has exactly two elements.
bool dichotomy_check(const PairsDiagram& d);

/// Every TSR-valid diagram with pairs drawn from the candidates. Needs at most
/// four candidates and rank at most 3.
std::vector<PairsDiagram> enumerate_diagrams(RootSystemPtr R, const std::vector<Scalar>& candidates);

struct AdmissibleOperator {
    Mat U; ///< W restricted to h, in the Cartan basis of the algebra
    std::map<Scalar, Mat> eigen;
    /// Per positive root: eigenvalues of the eigenvector components of H_a (one or two).
    std::vector<std::vector<Scalar>> root_eigen;

    bool complete() const;
};

/// Throws PreconditionError when U is not diagonalizable over the candidates or not admissible.
AdmissibleOperator admissible_operator(const LieAlgebra& L, const Mat& U, const std::vector<Scalar>& candidates);

/// Cartan block of W in the Cartan basis.
Mat cartan_block(const LieAlgebra& L, const Mat& W);

struct AdmissiblePair {
    AdmissibleOperator U;
    PairsDiagram diagram;
};

/// Needs a Chevalley-type algebra and a regular structure.
AdmissiblePair extract_admissible_pair(const BiLieStructure& s, const TimesReport& r);
/// U_a is contained in (T_a) for every root.
CheckResult admissible_pair_check(const AdmissibleOperator& U, const PairsDiagram& d);

std::array<Scalar, 3> lemma_10_10_residuals(const TimePair& a, const TimePair& b, const TimePair& c);
CheckResult lemma_10_10_check(const PairsDiagram& d);

/// kappa_a = (lambda_a - lambda_-a)/2 per root index, from a root-grading preserving W.
std::vector<Scalar> root_kappa(const LieAlgebra& L, const Mat& W);

struct LabelSystem {
    Scalar a;
    std::vector<Triangle> triangles;
    std::vector<int> labels; ///< 0, +1, -1 aligned with triangles
    std::vector<int> subject;

    int label_of(const Triangle& t) const;
    nlohmann::json to_json(const RootSystem& R) const;
};

struct TriangleRuleResult {
    bool pass = true;
    std::string witness;
    LabelSystem labels;
};

/// a-triangle rule subject to a closed symmetric root set, from per-root kappa values.
TriangleRuleResult triangle_rule_check(const RootSystem& R, const std::vector<Scalar>& kappa, const Scalar& a,
                                       const std::vector<int>& subject);

/// TSR 1 triangles have kappa sum 0, TSR 2 triangles have kappa sum +-(t1-t2)/2.
CheckResult kappa_sum_rule_check(const PairsDiagram& d, const std::vector<Scalar>& kappa);

} // namespace bilie
