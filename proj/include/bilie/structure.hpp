#pragma once

#include "bilie/liealg.hpp"

#include <json.hpp>

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bilie {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;
};

/// Precondition failures (non-regular input, irrational time, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

struct BiLieStructure {
    AlgebraPtr alg;
    Mat W;        ///< Nijenhuis-type operator (WNO)
    Mat P;        ///< primitive
    Table second; ///< [.,.]_W
    bool principal = false;
    std::string label;
};

Table modified_bracket(const LieAlgebra& L, const Mat& W);
/// T_W(x,y) = [Wx,Wy] - W[x,y]_W
Table torsion(const LieAlgebra& L, const Mat& W);
/// j=2 differential: cyclic sum of [x,c(y,z)] + c(x,[y,z]).
JacobiResult is_two_cocycle(const LieAlgebra& L, const Table& c);
JacobiResult is_wno(const LieAlgebra& L, const Mat& W);
JacobiResult compatibility_check(const Table& a, const Table& b);

struct PairResult {
    bool pass = true;
    int i = -1, j = -1;
    std::string describe() const;
};
PairResult tables_equal(const Table& a, const Table& b);
/// torsion(W) == modified_bracket(P)
PairResult verify_primitive(const LieAlgebra& L, const Mat& W, const Mat& P);

Mat primitive_shift(const LieAlgebra& L, const Mat& P, const Mat& W, const Vec& x0);
Mat adjoint(const LieAlgebra& L, const Mat& W);
bool is_killing_symmetric(const LieAlgebra& L, const Mat& W);

/// (Tr(W ad e_j))_j
Vec trace_pairing(const LieAlgebra& L, const Mat& W);
bool is_principal(const LieAlgebra& L, const Mat& W);
/// W - ad y with y the Killing-orthogonal projection onto ad g.
Mat principal_projection_general(const LieAlgebra& L, const Mat& W);
/// W - ad(sum over all roots of lambda_a H_a); needs a root-grading preserving W.
Mat principal_projection(const LieAlgebra& L, const Mat& W);
/// Killing-symmetric primitive of a principal WNO.
Mat principal_primitive(const LieAlgebra& L, const Mat& W);
/// (1/2) p0(ad_G^2 W) pulled back through ad; dense, for small algebras.
Mat principal_primitive_general(const LieAlgebra& L, const Mat& W);

Mat bhat(const LieAlgebra& L, const Mat& W, const Mat& P, const Scalar& t);

/// Block diagonal in the Chevalley-type basis with scalar root blocks.
bool preserves_root_grading(const LieAlgebra& L, const Mat& W);
/// H_a of a root vector basis index, via B(H_a, H) = a(H).
Vec h_alpha(const LieAlgebra& L, int root_basis_index);

/// Build and fill the second bracket; principal flag is computed.
BiLieStructure make_structure(AlgebraPtr L, Mat W, Mat P, std::string label = "");
std::vector<CheckResult> verify_structure(const BiLieStructure& s);

/// {x : [ad x, C] = 0 for all C, (E - s) x = 0 for all (E, s)}, solved per weight block
/// when every operator preserves the root grading.
Mat commutant_kernel(const LieAlgebra& L, const std::vector<const Mat*>& commute,
                     const std::vector<std::pair<const Mat*, Scalar>>& eigen);

struct TimesReport {
    std::vector<Scalar> times;
    std::vector<Scalar> theta;
    /// root basis index -> sorted pair {t1, t2}
    std::map<int, std::array<Scalar, 2>> per_root;
    std::map<Scalar, Mat> centres;
    bool bhat_consistent = false;
    bool theta_consistent = false;
    std::string bhat_witness;

    nlohmann::json to_json(const LieAlgebra& L) const;
};

TimesReport times(const BiLieStructure& s);
Mat centre(const BiLieStructure& s, const Scalar& t);

/// Candidate-value scan of ker bhat, for structures without a root grading.
std::vector<Scalar> bhat_kernel_scan(const BiLieStructure& s, const std::vector<Scalar>& candidates);

CheckResult cartan_factorization_check(const BiLieStructure& s, const TimesReport& r);
CheckResult centre_disjoint_commuting_check(const BiLieStructure& s, const TimesReport& r);
CheckResult cartan_in_centres_check(const BiLieStructure& s, const TimesReport& r);

struct AuxiliaryReport {
    Mat gP, zhat, g0, z;
    bool closed = false;
    bool chain = false; ///< z in zhat in gP
    bool g0_in_zhat = false;
    bool g0_equals_zhat = false;
    std::string witness;
};
AuxiliaryReport auxiliary_subalgebras(const BiLieStructure& s, const TimesReport& r);

/// Row-reduced basis for fast membership tests.
class Subspace {
public:
    Subspace() = default;
    Subspace(const Mat& basis, int dim);
    bool contains(SparseVec v) const;
    int dim() const { return static_cast<int>(rows_.size()); }

private:
    int n_ = 0;
    std::vector<SparseVec> rows_;
    std::vector<int> pivots_;
};

bool is_subalgebra(const LieAlgebra& L, const Mat& basis, std::string* witness = nullptr);

/// Sorted unique list in the canonical (re, im) order.
std::vector<Scalar> sorted_unique(std::vector<Scalar> v);

} // namespace bilie
